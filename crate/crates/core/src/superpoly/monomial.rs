use std::cmp::Ordering;

use super::{Chart, Parity};

/// A product of chart variables, stored as `(order_index, exponent)` pairs
/// sorted by index. Odd variables never carry an exponent above 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Monomial {
        Monomial(vec![(i, 1)])
    }

    /// Builds a monomial from arbitrary pairs; returns `None` when an odd
    /// variable would appear twice. No sign is attached: the pairs are read
    /// as already being in canonical order.
    pub fn from_pairs(chart: &Chart, mut pairs: Vec<(usize, u32)>) -> Option<Monomial> {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_unstable_by_key(|&(i, _)| i);
        let mut out: Vec<(usize, u32)> = Vec::with_capacity(pairs.len());
        for (i, e) in pairs {
            match out.last_mut() {
                Some(last) if last.0 == i => last.1 += e,
                _ => out.push((i, e)),
            }
        }
        if out.iter().any(|&(i, e)| chart.parity(i).is_odd() && e > 1) {
            return None;
        }
        Some(Monomial(out))
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0
            .binary_search_by_key(&i, |&(j, _)| j)
            .map(|k| self.0[k].1)
            .unwrap_or(0)
    }

    pub fn parity(&self, chart: &Chart) -> Parity {
        let odd = self
            .0
            .iter()
            .filter(|&&(i, _)| chart.parity(i).is_odd())
            .count();
        Parity::from_bit((odd & 1) as u8)
    }

    pub fn weight(&self, chart: &Chart) -> i64 {
        self.0
            .iter()
            .map(|&(i, e)| chart.weight(i) * e as i64)
            .sum()
    }

    pub fn fiber_degree(&self, chart: &Chart) -> u32 {
        self.0
            .iter()
            .map(|&(i, e)| chart.var(i).fiber_degree * e)
            .sum()
    }

    /// Canonical product `self * other`. Returns `None` when the product
    /// vanishes, otherwise the monomial and whether the sign flips.
    pub fn mul(&self, other: &Monomial, chart: &Chart) -> Option<(Monomial, bool)> {
        let a = &self.0;
        let b = &other.0;
        let mut odd_left_in_a = a.iter().filter(|&&(i, _)| chart.parity(i).is_odd()).count();
        let mut flips = 0usize;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
            if take_a {
                if chart.parity(a[i].0).is_odd() {
                    odd_left_in_a -= 1;
                }
                out.push(a[i]);
                i += 1;
                continue;
            }
            let (vb, eb) = b[j];
            if i < a.len() && a[i].0 == vb {
                if chart.parity(vb).is_odd() {
                    return None;
                }
                out.push((vb, a[i].1 + eb));
                i += 1;
            } else {
                if chart.parity(vb).is_odd() {
                    flips += odd_left_in_a;
                }
                out.push((vb, eb));
            }
            j += 1;
        }
        Some((Monomial(out), flips % 2 == 1))
    }

    /// Left derivative with respect to variable `v`: the factor is moved to
    /// the front and removed. Returns the remaining monomial, the integer
    /// coefficient (exponent) and whether the sign flips.
    pub fn left_partial(&self, v: usize, chart: &Chart) -> Option<(Monomial, u32, bool)> {
        let k = self.0.binary_search_by_key(&v, |&(j, _)| j).ok()?;
        let e = self.0[k].1;
        let flip = if chart.parity(v).is_odd() {
            let crossed = self.0[..k]
                .iter()
                .filter(|&&(j, _)| chart.parity(j).is_odd())
                .count();
            crossed % 2 == 1
        } else {
            false
        };
        let mut rest = self.0.clone();
        if e == 1 {
            rest.remove(k);
        } else {
            rest[k].1 -= 1;
        }
        Some((Monomial(rest), e, flip))
    }

    pub(crate) fn remap(&self, map: &[usize]) -> Monomial {
        let mut v: Vec<(usize, u32)> = self.0.iter().map(|&(i, e)| (map[i], e)).collect();
        v.sort_unstable_by_key(|&(i, _)| i);
        Monomial(v)
    }
}

impl Ord for Monomial {
    /// Graded order: lower total degree first, then earlier variables with
    /// higher exponents first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (x, y) in self.0.iter().zip(&other.0) {
                if x.0 != y.0 {
                    return x.0.cmp(&y.0);
                }
                if x.1 != y.1 {
                    return y.1.cmp(&x.1);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
