use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{same_chart, Chart, Monomial, Parity};
use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Outcome of asking for the grade of a polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum Grade<T: Ord, P = SuperPoly> {
    Zero,
    Homogeneous(T),
    Mixed(BTreeMap<T, P>),
}

impl<T: Ord + Copy, P> Grade<T, P> {
    pub fn homogeneous(&self) -> Option<T> {
        match self {
            Grade::Homogeneous(t) => Some(*t),
            _ => None,
        }
    }
}

/// A supercommutative polynomial with exact rational coefficients.
#[derive(Clone)]
pub struct SuperPoly {
    chart: Arc<Chart>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for SuperPoly {
    fn eq(&self, other: &Self) -> bool {
        same_chart(&self.chart, &other.chart) && self.terms == other.terms
    }
}

impl fmt::Debug for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperPoly[{}]({})", self.chart.name(), self.render())
    }
}

impl fmt::Display for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn check_same(a: &Arc<Chart>, b: &Arc<Chart>) -> Result<()> {
    if same_chart(a, b) {
        Ok(())
    } else {
        Err(Error::ChartMismatch {
            left: a.name().to_string(),
            right: b.name().to_string(),
        })
    }
}

impl SuperPoly {
    pub fn zero(chart: &Arc<Chart>) -> SuperPoly {
        SuperPoly {
            chart: chart.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(chart: &Arc<Chart>, c: Rational) -> SuperPoly {
        let mut p = SuperPoly::zero(chart);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one(chart: &Arc<Chart>) -> SuperPoly {
        SuperPoly::constant(chart, Rational::one())
    }

    /// The coordinate function with order index `i`.
    pub fn var(chart: &Arc<Chart>, i: usize) -> SuperPoly {
        assert!(i < chart.len(), "variable index out of range");
        SuperPoly::monomial(chart, Monomial::var(i), Rational::one())
    }

    pub fn var_named(chart: &Arc<Chart>, name: &str) -> Result<SuperPoly> {
        Ok(SuperPoly::var(chart, chart.index_of(name)?))
    }

    pub fn monomial(chart: &Arc<Chart>, m: Monomial, c: Rational) -> SuperPoly {
        let mut p = SuperPoly::zero(chart);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Collects terms, merging equal monomials and dropping zeros.
    pub fn from_terms<I>(chart: &Arc<Chart>, terms: I) -> SuperPoly
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = SuperPoly::zero(chart);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn checked_add(&self, other: &SuperPoly) -> Result<SuperPoly> {
        check_same(&self.chart, &other.chart)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SuperPoly) -> Result<SuperPoly> {
        check_same(&self.chart, &other.chart)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> SuperPoly {
        if c.is_zero() {
            return SuperPoly::zero(&self.chart);
        }
        SuperPoly {
            chart: self.chart.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> SuperPoly {
        self.scale(&int(n))
    }

    /// Canonical product with the Koszul sign rule.
    pub fn checked_mul(&self, other: &SuperPoly) -> Result<SuperPoly> {
        check_same(&self.chart, &other.chart)?;
        let mut out = SuperPoly::zero(&self.chart);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, flip)) = ma.mul(mb, &self.chart) {
                    let c = ca * cb;
                    out.add_term(m, if flip { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> SuperPoly {
        let mut acc = SuperPoly::one(&self.chart);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Left derivative with respect to the variable with order index `v`.
    pub fn left_partial(&self, v: usize) -> SuperPoly {
        let mut out = SuperPoly::zero(&self.chart);
        for (m, c) in &self.terms {
            if let Some((rest, e, flip)) = m.left_partial(v, &self.chart) {
                let k = c * int(e as i64);
                out.add_term(rest, if flip { -k } else { k });
            }
        }
        out
    }

    pub fn left_partial_named(&self, name: &str) -> Result<SuperPoly> {
        Ok(self.left_partial(self.chart.index_of(name)?))
    }

    fn parts_by<K: Ord + Copy>(&self, key: impl Fn(&Monomial) -> K) -> BTreeMap<K, SuperPoly> {
        let mut parts: BTreeMap<K, SuperPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(key(m))
                .or_insert_with(|| SuperPoly::zero(&self.chart))
                .terms
                .insert(m.clone(), c.clone());
        }
        parts
    }

    fn grade_by<K: Ord + Copy>(&self, key: impl Fn(&Monomial) -> K) -> Grade<K> {
        let parts = self.parts_by(key);
        match parts.len() {
            0 => Grade::Zero,
            1 => Grade::Homogeneous(*parts.keys().next().unwrap()),
            _ => Grade::Mixed(parts),
        }
    }

    pub fn parity_parts(&self) -> BTreeMap<Parity, SuperPoly> {
        self.parts_by(|m| m.parity(&self.chart))
    }

    pub fn weight_parts(&self) -> BTreeMap<i64, SuperPoly> {
        self.parts_by(|m| m.weight(&self.chart))
    }

    /// Split by total degree in the momenta of the outermost lift.
    pub fn fiber_parts(&self) -> BTreeMap<u32, SuperPoly> {
        self.parts_by(|m| m.fiber_degree(&self.chart))
    }

    pub fn degree_parts(&self) -> BTreeMap<u32, SuperPoly> {
        self.parts_by(|m| m.degree())
    }

    pub fn parity_of(&self) -> Grade<Parity> {
        self.grade_by(|m| m.parity(&self.chart))
    }

    pub fn weight_of(&self) -> Grade<i64> {
        self.grade_by(|m| m.weight(&self.chart))
    }

    pub fn fiber_degree_of(&self) -> Grade<u32> {
        self.grade_by(|m| m.fiber_degree(&self.chart))
    }

    /// Parity of a homogeneous polynomial; `Ok(None)` for zero.
    pub fn homogeneous_parity(&self) -> Result<Option<Parity>> {
        match self.parity_of() {
            Grade::Zero => Ok(None),
            Grade::Homogeneous(p) => Ok(Some(p)),
            Grade::Mixed(_) => Err(Error::MixedParity(self.render())),
        }
    }

    /// Keeps the terms whose monomial satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> SuperPoly {
        SuperPoly {
            chart: self.chart.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Whether any variable for which `pred` holds occurs.
    pub fn mentions(&self, pred: impl Fn(usize) -> bool) -> bool {
        self.terms
            .keys()
            .any(|m| m.factors().iter().any(|&(i, _)| pred(i)))
    }

    /// Evaluates `self` under `images[i]` for each variable `i`, producing a
    /// polynomial on `target`. Each image must be homogeneous of the parity
    /// of its variable (zero is always accepted).
    pub fn substitute(&self, images: &[SuperPoly], target: &Arc<Chart>) -> Result<SuperPoly> {
        if images.len() < self.chart.len() {
            return Err(Error::IncompleteSubstitution(
                self.chart.var(images.len()).name.clone(),
            ));
        }
        for (i, img) in images.iter().enumerate().take(self.chart.len()) {
            check_same(img.chart(), target)?;
            if let Some(p) = img.homogeneous_parity()? {
                if p != self.chart.parity(i) {
                    return Err(Error::ParityMismatch(format!(
                        "image of `{}` has parity {}, expected {}",
                        self.chart.var(i).name,
                        p,
                        self.chart.parity(i)
                    )));
                }
            }
        }
        let mut powers: BTreeMap<(usize, u32), SuperPoly> = BTreeMap::new();
        let mut out = SuperPoly::zero(target);
        for (m, c) in &self.terms {
            let mut acc = SuperPoly::constant(target, c.clone());
            for &(i, e) in m.factors() {
                let pw = powers
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e))
                    .clone();
                acc = &acc * &pw;
                if acc.is_zero() {
                    break;
                }
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// Substitution keyed by variable name; unnamed variables must be
    /// supplied in full.
    pub fn substitute_named(
        &self,
        images: &BTreeMap<String, SuperPoly>,
        target: &Arc<Chart>,
    ) -> Result<SuperPoly> {
        let imgs = self
            .chart
            .vars()
            .iter()
            .map(|v| {
                images
                    .get(&v.name)
                    .cloned()
                    .ok_or_else(|| Error::IncompleteSubstitution(v.name.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.substitute(&imgs, target)
    }

    /// Re-expresses `self` on a chart that contains every variable of its
    /// own chart under the same name and parity.
    pub fn embed(&self, target: &Arc<Chart>) -> Result<SuperPoly> {
        if same_chart(&self.chart, target) {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.chart.len());
        for v in self.chart.vars() {
            let j = target.index_of(&v.name)?;
            if target.parity(j) != v.parity {
                return Err(Error::ParityMismatch(format!(
                    "`{}` changes parity between charts",
                    v.name
                )));
            }
            map.push(j);
        }
        if map.windows(2).all(|w| w[0] < w[1]) {
            return Ok(SuperPoly {
                chart: target.clone(),
                terms: self
                    .terms
                    .iter()
                    .map(|(m, c)| (m.remap(&map), c.clone()))
                    .collect(),
            });
        }
        let images: Vec<SuperPoly> = map.iter().map(|&j| SuperPoly::var(target, j)).collect();
        self.substitute(&images, target)
    }

    /// Moves `self` to a chart with identical layout (e.g. the same lift
    /// built under a different grading).
    pub fn rechart(&self, target: &Arc<Chart>) -> Result<SuperPoly> {
        if !self.chart.same_layout(target) {
            return Err(Error::ChartMismatch {
                left: self.chart.name().to_string(),
                right: target.name().to_string(),
            });
        }
        Ok(SuperPoly {
            chart: target.clone(),
            terms: self.terms.clone(),
        })
    }

    /// Deterministic text form: terms in canonical order, coefficients as
    /// `p/q`, factors joined by `*`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_monomial(m, &self.chart);
            if mono.is_empty() {
                s.push_str(&render_rational(&a));
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&render_rational(&a));
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }
}

pub fn render_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn render_monomial(m: &Monomial, chart: &Chart) -> String {
    m.factors()
        .iter()
        .map(|&(i, e)| {
            if e == 1 {
                chart.var(i).name.clone()
            } else {
                format!("{}^{}", chart.var(i).name, e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl Add for &SuperPoly {
    type Output = SuperPoly;
    fn add(self, rhs: &SuperPoly) -> SuperPoly {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &SuperPoly {
    type Output = SuperPoly;
    fn sub(self, rhs: &SuperPoly) -> SuperPoly {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &SuperPoly {
    type Output = SuperPoly;
    fn mul(self, rhs: &SuperPoly) -> SuperPoly {
        self.checked_mul(rhs).expect("polynomial product")
    }
}

impl Neg for &SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        self.scale(&int(-1))
    }
}

impl Add for SuperPoly {
    type Output = SuperPoly;
    fn add(self, rhs: SuperPoly) -> SuperPoly {
        &self + &rhs
    }
}

impl Sub for SuperPoly {
    type Output = SuperPoly;
    fn sub(self, rhs: SuperPoly) -> SuperPoly {
        &self - &rhs
    }
}

impl Mul for SuperPoly {
    type Output = SuperPoly;
    fn mul(self, rhs: SuperPoly) -> SuperPoly {
        &self * &rhs
    }
}

impl Neg for SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        -&self
    }
}
