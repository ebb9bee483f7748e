use std::collections::BTreeMap;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::linalg::Matrix;
use crate::error::{Error, Result};
use crate::superpoly::{int, sign, Parity, Rational};

/// Structure constants `[e_i,e_j] = c_ij^k e_k` of a finite-dimensional Lie
/// superalgebra. Only nonzero entries are stored, for both orders `(i,j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    parities: Vec<Parity>,
    entries: BTreeMap<(usize, usize, usize), Rational>,
    names: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct JsonForm {
    dim: usize,
    parities: Vec<u8>,
    entries: Vec<(usize, usize, usize, i64, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

impl StructureConstants {
    /// Builds constants from entries; the super-antisymmetric partner of an
    /// entry is filled in when absent and must agree when present.
    pub fn new<I>(parities: Vec<Parity>, entries: I) -> Result<StructureConstants>
    where
        I: IntoIterator<Item = ((usize, usize, usize), Rational)>,
    {
        let n = parities.len();
        let mut out = StructureConstants {
            names: (1..=n).map(|i| format!("e{i}")).collect(),
            parities,
            entries: BTreeMap::new(),
        };
        let mut given: BTreeMap<(usize, usize, usize), Rational> = BTreeMap::new();
        for ((i, j, k), v) in entries {
            if i >= n || j >= n || k >= n {
                return Err(Error::InvalidConstants(format!(
                    "index ({i},{j},{k}) out of range for dimension {n}"
                )));
            }
            *given.entry((i, j, k)).or_insert_with(Rational::zero) += v;
        }
        given.retain(|_, v| !v.is_zero());
        for (&(i, j, k), v) in &given {
            let (pi, pj) = (out.parities[i], out.parities[j]);
            if out.parities[k] != pi + pj {
                return Err(Error::InvalidConstants(format!(
                    "[e{},e{}] has a component along e{} of the wrong parity",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            let partner = -v * int(sign(pi.times(pj)));
            match given.get(&(j, i, k)) {
                Some(w) if *w != partner => {
                    return Err(Error::InvalidConstants(format!(
                        "c({},{};{}) and c({},{};{}) are not super-antisymmetric",
                        i + 1,
                        j + 1,
                        k + 1,
                        j + 1,
                        i + 1,
                        k + 1
                    )))
                }
                None if i == j => {
                    return Err(Error::InvalidConstants(format!(
                        "[e{},e{}] must vanish for an even basis vector",
                        i + 1,
                        i + 1
                    )))
                }
                _ => {}
            }
            out.entries.insert((i, j, k), v.clone());
            out.entries.insert((j, i, k), partner);
        }
        Ok(out)
    }

    pub fn abelian(parities: Vec<Parity>) -> StructureConstants {
        StructureConstants::new(parities, std::iter::empty()).expect("no entries")
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<StructureConstants> {
        if names.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} names for dimension {}",
                names.len(),
                self.dim()
            )));
        }
        self.names = names;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Rational {
        self.entries
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero entries `((i,j,k), c_ij^k)` in index order.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Rational)> {
        self.entries.iter()
    }

    pub fn is_abelian(&self) -> bool {
        self.entries.is_empty()
    }

    /// `[e_i,e_j]` as a coefficient vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (&(a, b, k), v) in self.entries.range((i, j, 0)..=(i, j, usize::MAX)) {
            debug_assert_eq!((a, b), (i, j));
            out[k] = v.clone();
        }
        out
    }

    /// Bilinear extension to coefficient vectors.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (&(i, j, k), c) in &self.entries {
            if u[i].is_zero() || v[j].is_zero() {
                continue;
            }
            out[k] += &u[i] * &v[j] * c;
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    /// Nonzero components of
    /// `[e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - (-1)^{ij}[e_j,[e_i,e_k]]`.
    pub fn jacobi_residue(&self) -> Vec<((usize, usize, usize), Vec<Rational>)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (ei, ej, ek) = (self.unit(i), self.unit(j), self.unit(k));
                    let a = self.bracket(&ei, &self.bracket(&ej, &ek));
                    let b = self.bracket(&self.bracket(&ei, &ej), &ek);
                    let c = self.bracket(&ej, &self.bracket(&ei, &ek));
                    let s = int(sign(self.parities[i].times(self.parities[j])));
                    let r: Vec<Rational> = (0..n).map(|m| &a[m] - &b[m] - &s * &c[m]).collect();
                    if r.iter().any(|x| !x.is_zero()) {
                        out.push(((i, j, k), r));
                    }
                }
            }
        }
        out
    }

    pub fn is_lie(&self) -> bool {
        self.jacobi_residue().is_empty()
    }

    /// Constants with every entry multiplied by `s`.
    pub fn scaled(&self, s: &Rational) -> StructureConstants {
        let mut out = self.clone();
        for v in out.entries.values_mut() {
            *v *= s;
        }
        out.entries.retain(|_, v| !v.is_zero());
        out
    }

    /// Restriction to the span of `indices`, which must be a subalgebra.
    pub fn restrict(&self, indices: &[usize]) -> Result<StructureConstants> {
        let pos: BTreeMap<usize, usize> =
            indices.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        let mut entries = Vec::new();
        for (&(i, j, k), v) in &self.entries {
            if let (Some(&a), Some(&b)) = (pos.get(&i), pos.get(&j)) {
                let Some(&c) = pos.get(&k) else {
                    return Err(Error::Invalid(format!(
                        "the span of the given basis vectors is not closed: [{},{}] leaves it",
                        self.names[i], self.names[j]
                    )));
                };
                entries.push(((a, b, c), v.clone()));
            }
        }
        let parities = indices.iter().map(|&i| self.parities[i]).collect();
        let names = indices.iter().map(|&i| self.names[i].clone()).collect();
        StructureConstants::new(parities, entries)?.with_names(names)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries = self
            .entries
            .iter()
            .map(|(&(i, j, k), v)| {
                (
                    i,
                    j,
                    k,
                    v.numer().to_i64().expect("numerator fits in i64"),
                    v.denom().to_i64().expect("denominator fits in i64"),
                )
            })
            .collect();
        serde_json::to_value(JsonForm {
            dim: self.dim(),
            parities: self.parities.iter().map(|p| p.is_odd() as u8).collect(),
            entries,
            names: Some(self.names.clone()),
        })
        .expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<StructureConstants> {
        let form: JsonForm = serde_json::from_str(text)
            .map_err(|e| Error::InvalidConstants(format!("malformed JSON: {e}")))?;
        if form.parities.len() != form.dim {
            return Err(Error::InvalidConstants(format!(
                "{} parities for dimension {}",
                form.parities.len(),
                form.dim
            )));
        }
        let parities = form
            .parities
            .iter()
            .map(|&p| match p {
                0 => Ok(Parity::Even),
                1 => Ok(Parity::Odd),
                other => Err(Error::InvalidConstants(format!(
                    "parity {other} is not 0 or 1"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut entries = Vec::new();
        for (i, j, k, num, den) in form.entries {
            if den == 0 {
                return Err(Error::InvalidConstants("zero denominator".into()));
            }
            entries.push(((i, j, k), Rational::new(num.into(), den.into())));
        }
        let sc = StructureConstants::new(parities, entries)?;
        match form.names {
            Some(names) => sc.with_names(names),
            None => Ok(sc),
        }
    }

    /// Human-readable bracket table, one nonzero `[a,b]` with `a <= b` per
    /// line.
    pub fn render_table(&self) -> Vec<String> {
        let n = self.dim();
        let mut lines = Vec::new();
        for i in 0..n {
            for j in i..n {
                let v = self.bracket_basis(i, j);
                if v.iter().all(Zero::is_zero) {
                    continue;
                }
                lines.push(format!(
                    "[{},{}] = {}",
                    self.names[i],
                    self.names[j],
                    render_combination(&v, &self.names)
                ));
            }
        }
        lines
    }
}

/// `2*e1 - 1/2*e3` style rendering of a coefficient vector.
pub fn render_combination(v: &[Rational], names: &[String]) -> String {
    let mut out = String::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&crate::superpoly::render_rational(&mag));
            out.push('*');
        }
        out.push_str(&names[k]);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// A homogeneous bilinear form on a Lie superalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerProduct {
    gram: Matrix,
    parity: Parity,
    parities: Vec<Parity>,
}

impl InnerProduct {
    /// Validates the parity and the super-symmetry of the Gram matrix: for an
    /// even form `(u,v) = (-1)^{uv}(v,u)`, for an odd one
    /// `(u,v) = (-1)^{u+v+uv}(v,u)`.
    pub fn new(gram: Matrix, parity: Parity, parities: Vec<Parity>) -> Result<InnerProduct> {
        let n = parities.len();
        if gram.rows != n || gram.cols != n {
            return Err(Error::DimensionMismatch(format!(
                "Gram matrix is {}x{} for dimension {n}",
                gram.rows, gram.cols
            )));
        }
        for i in 0..n {
            for j in 0..n {
                let g = &gram[(i, j)];
                if g.is_zero() {
                    continue;
                }
                let (pi, pj) = (parities[i], parities[j]);
                if pi + pj != parity {
                    return Err(Error::Invalid(format!(
                        "pairing of basis vectors {} and {} has the wrong parity",
                        i + 1,
                        j + 1
                    )));
                }
                let mut s = pi.times(pj);
                if parity.is_odd() {
                    s = s + pi + pj;
                }
                if gram[(j, i)] != g * int(sign(s)) {
                    return Err(Error::Invalid(format!(
                        "pairing is not super-symmetric on basis vectors {} and {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(InnerProduct {
            gram,
            parity,
            parities,
        })
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn pair(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let mut out = Rational::zero();
        for i in 0..u.len() {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..v.len() {
                if !v[j].is_zero() && !self.gram[(i, j)].is_zero() {
                    out += &u[i] * &self.gram[(i, j)] * &v[j];
                }
            }
        }
        out
    }

    /// Basis triples `(v,u,w)` violating `([v,u],w) = s(u)(v,[u,w])`, where
    /// `s(u) = (-1)^u` for an odd form and `1` for an even one, with the
    /// offending difference.
    pub fn invariance_residue(
        &self,
        c: &StructureConstants,
    ) -> Vec<((usize, usize, usize), Rational)> {
        let n = c.dim();
        let mut out = Vec::new();
        for v in 0..n {
            for u in 0..n {
                let vu = c.bracket_basis(v, u);
                let s = if self.parity.is_odd() {
                    int(sign(c.parity(u)))
                } else {
                    Rational::one()
                };
                for w in 0..n {
                    let lhs = self.pair(&vu, &c.unit(w));
                    let rhs = self.pair(&c.unit(v), &c.bracket_basis(u, w));
                    let d = lhs - &s * rhs;
                    if !d.is_zero() {
                        out.push(((v, u, w), d));
                    }
                }
            }
        }
        out
    }

    pub fn inverse_gram(&self) -> Result<Matrix> {
        self.gram
            .inverse()
            .ok_or_else(|| Error::Invalid("the inner product is degenerate".into()))
    }

    /// The basis `v^∨` with `(v^∨_i, e_j) = δ_ij`, as coefficient vectors.
    pub fn left_dual_basis(&self) -> Result<Vec<Vec<Rational>>> {
        let inv = self.inverse_gram()?;
        let n = self.parities.len();
        // (Σ_a d_a e_a, e_j) = Σ_a d_a G_aj = δ_ij, so d = row i of G^{-1}
        Ok((0..n)
            .map(|i| (0..n).map(|a| inv[(i, a)].clone()).collect())
            .collect())
    }
}
