use num_traits::{One, Zero};

use super::constants::{InnerProduct, StructureConstants};
use super::linalg::Matrix;
use crate::error::{Error, Result};
use crate::superpoly::{int, sign, Parity, Rational};

/// Position of a basis vector of `q(n)` in its triangular decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CartanPart {
    /// Strictly upper triangular, `i < j`.
    Positive,
    /// Diagonal.
    Cartan,
    /// Strictly lower triangular, `i > j`.
    Negative,
}

/// A generated algebra together with the extra data the generator knows.
#[derive(Clone, Debug)]
pub struct BuiltinAlgebra {
    pub name: String,
    pub constants: StructureConstants,
    pub pairing: Option<InnerProduct>,
    pub cartan: Option<Vec<CartanPart>>,
    /// Matrix realisation in `gl(even|odd)`, one matrix per basis vector.
    pub matrices: Option<Vec<SuperMatrix>>,
}

/// A square matrix of the block format `(even|odd)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperMatrix {
    pub even: usize,
    pub odd: usize,
    pub entries: Matrix,
}

impl SuperMatrix {
    pub fn zero(even: usize, odd: usize) -> SuperMatrix {
        let n = even + odd;
        SuperMatrix {
            even,
            odd,
            entries: Matrix::zeros(n, n),
        }
    }

    pub fn unit(even: usize, odd: usize, i: usize, j: usize) -> SuperMatrix {
        let mut m = SuperMatrix::zero(even, odd);
        m.entries[(i, j)] = Rational::one();
        m
    }

    fn entry_parity(&self, i: usize, j: usize) -> Parity {
        Parity::from_bit(((i >= self.even) != (j >= self.even)) as u8)
    }

    /// Parity of a homogeneous matrix; `None` for zero or mixed matrices.
    pub fn parity(&self) -> Option<Parity> {
        let n = self.even + self.odd;
        let mut found = None;
        for i in 0..n {
            for j in 0..n {
                if self.entries[(i, j)].is_zero() {
                    continue;
                }
                let p = self.entry_parity(i, j);
                match found {
                    None => found = Some(p),
                    Some(q) if q != p => return None,
                    _ => {}
                }
            }
        }
        found
    }

    pub fn add(&self, other: &SuperMatrix) -> SuperMatrix {
        let mut out = self.clone();
        let n = self.even + self.odd;
        for i in 0..n {
            for j in 0..n {
                out.entries[(i, j)] += &other.entries[(i, j)];
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> SuperMatrix {
        let mut out = self.clone();
        let n = self.even + self.odd;
        for i in 0..n {
            for j in 0..n {
                out.entries[(i, j)] *= c;
            }
        }
        out
    }

    pub fn mul(&self, other: &SuperMatrix) -> SuperMatrix {
        SuperMatrix {
            even: self.even,
            odd: self.odd,
            entries: self.entries.mul(&other.entries),
        }
    }

    /// `[a,b] = ab - (-1)^{ab} ba` for homogeneous `a`, `b`.
    pub fn supercommutator(&self, other: &SuperMatrix, pa: Parity, pb: Parity) -> SuperMatrix {
        let s = int(-sign(pa.times(pb)));
        self.mul(other).add(&other.mul(self).scale(&s))
    }

    /// Supertrace `tr A - tr D`.
    pub fn str(&self) -> Rational {
        let mut t = Rational::zero();
        for i in 0..self.even + self.odd {
            if i < self.even {
                t += &self.entries[(i, i)];
            } else {
                t -= &self.entries[(i, i)];
            }
        }
        t
    }

    /// Trace of the upper right block of a matrix of format `(n|n)`.
    pub fn otr(&self) -> Rational {
        assert_eq!(self.even, self.odd, "odd trace needs format (n|n)");
        let n = self.even;
        (0..n).map(|i| self.entries[(i, n + i)].clone()).sum()
    }

    /// The block matrix `((0,1),(-1,0))` of format `(n|n)`.
    pub fn odd_unit(n: usize) -> SuperMatrix {
        let mut m = SuperMatrix::zero(n, n);
        for i in 0..n {
            m.entries[(i, n + i)] = Rational::one();
            m.entries[(n + i, i)] = -Rational::one();
        }
        m
    }

    fn flatten(&self) -> Vec<Rational> {
        let n = self.even + self.odd;
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.entries[(i, j)].clone())
            .collect()
    }
}

/// Constants of the span of homogeneous matrices, which must close under
/// the supercommutator.
pub fn constants_from_matrices(
    names: Vec<String>,
    basis: &[SuperMatrix],
) -> Result<StructureConstants> {
    let parities: Vec<Parity> = basis
        .iter()
        .map(|m| {
            m.parity()
                .ok_or_else(|| Error::Invalid("basis matrix is zero or inhomogeneous".into()))
        })
        .collect::<Result<_>>()?;
    let columns: Vec<Vec<Rational>> = basis.iter().map(SuperMatrix::flatten).collect();
    let rows = columns.first().map(|c| c.len()).unwrap_or(0);
    let mut a = Matrix::zeros(rows, basis.len());
    for (j, col) in columns.iter().enumerate() {
        for (i, x) in col.iter().enumerate() {
            a[(i, j)] = x.clone();
        }
    }
    if a.rank() != basis.len() {
        return Err(Error::Invalid(
            "basis matrices are linearly dependent".into(),
        ));
    }
    let mut entries = Vec::new();
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            let c = basis[i].supercommutator(&basis[j], parities[i], parities[j]);
            let coords = a.solve(&c.flatten()).ok_or_else(|| {
                Error::Invalid(format!("[{},{}] leaves the span", names[i], names[j]))
            })?;
            for (k, v) in coords.into_iter().enumerate() {
                if !v.is_zero() {
                    entries.push(((i, j, k), v));
                }
            }
        }
    }
    StructureConstants::new(parities, entries)?.with_names(names)
}

fn pair_label(i: usize, j: usize, n: usize) -> String {
    if n < 10 {
        format!("{}{}", i + 1, j + 1)
    } else {
        format!("{}_{}", i + 1, j + 1)
    }
}

fn gram_from(
    basis: &[SuperMatrix],
    form: impl Fn(&SuperMatrix, &SuperMatrix, usize) -> Rational,
) -> Matrix {
    let n = basis.len();
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = form(&basis[i], &basis[j], i);
        }
    }
    g
}

/// `gl(n)` with matrix units `e_ij` and the trace form.
pub fn gl(n: usize) -> Result<BuiltinAlgebra> {
    if n == 0 {
        return Err(Error::Invalid("gl(n) needs n >= 1".into()));
    }
    let mut names = Vec::new();
    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            names.push(format!("e{}", pair_label(i, j, n)));
            basis.push(SuperMatrix::unit(n, 0, i, j));
        }
    }
    trace_form_algebra(format!("gl({n})"), names, basis)
}

/// `gl(m|n)` with matrix units ordered even first, and the supertrace form.
pub fn gl_super(m: usize, n: usize) -> Result<BuiltinAlgebra> {
    if m + n == 0 {
        return Err(Error::Invalid("gl(m|n) needs m + n >= 1".into()));
    }
    let t = m + n;
    let mut units: Vec<(usize, usize)> = (0..t).flat_map(|i| (0..t).map(move |j| (i, j))).collect();
    units.sort_by_key(|&(i, j)| ((i < m) != (j < m), i, j));
    let names = units
        .iter()
        .map(|&(i, j)| format!("e{}", pair_label(i, j, t)))
        .collect();
    let basis = units
        .iter()
        .map(|&(i, j)| SuperMatrix::unit(m, n, i, j))
        .collect();
    trace_form_algebra(format!("gl({m}|{n})"), names, basis)
}

/// `sl(n)` with off-diagonal units and `h_i = e_ii - e_{i+1,i+1}`.
pub fn sl(n: usize) -> Result<BuiltinAlgebra> {
    if n < 2 {
        return Err(Error::Invalid("sl(n) needs n >= 2".into()));
    }
    let mut names = Vec::new();
    let mut basis = Vec::new();
    for i in 0..n - 1 {
        names.push(format!("h{}", i + 1));
        basis.push(
            SuperMatrix::unit(n, 0, i, i)
                .add(&SuperMatrix::unit(n, 0, i + 1, i + 1).scale(&int(-1))),
        );
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                names.push(format!("e{}", pair_label(i, j, n)));
                basis.push(SuperMatrix::unit(n, 0, i, j));
            }
        }
    }
    trace_form_algebra(format!("sl({n})"), names, basis)
}

fn trace_form_algebra(
    name: String,
    names: Vec<String>,
    basis: Vec<SuperMatrix>,
) -> Result<BuiltinAlgebra> {
    let constants = constants_from_matrices(names, &basis)?;
    let gram = gram_from(&basis, |a, b, _| a.mul(b).str());
    let pairing = InnerProduct::new(gram, Parity::Even, constants.parities().to_vec())?;
    Ok(BuiltinAlgebra {
        name,
        constants,
        pairing: Some(pairing),
        cartan: None,
        matrices: Some(basis),
    })
}

/// `q(n)` inside `gl(n|n)`: `e_ij = diag(E_ij,E_ij)` (even) followed by
/// `eps_ij = antidiag(E_ij,E_ij)` (odd), with the odd pairing
/// `(x,y) = (-1)^x otr(xy)`.
pub fn q(n: usize) -> Result<BuiltinAlgebra> {
    if n == 0 {
        return Err(Error::Invalid("q(n) needs n >= 1".into()));
    }
    let mut names = Vec::new();
    let mut basis = Vec::new();
    let mut cartan = Vec::new();
    for odd in [false, true] {
        for i in 0..n {
            for j in 0..n {
                let (a, b) = if odd { (i, n + j) } else { (i, j) };
                let m = SuperMatrix::unit(n, n, a, b).add(&SuperMatrix::unit(
                    n,
                    n,
                    n + i,
                    if odd { j } else { n + j },
                ));
                names.push(format!(
                    "{}{}",
                    if odd { "eps" } else { "e" },
                    pair_label(i, j, n)
                ));
                basis.push(m);
                cartan.push(match i.cmp(&j) {
                    std::cmp::Ordering::Less => CartanPart::Positive,
                    std::cmp::Ordering::Equal => CartanPart::Cartan,
                    std::cmp::Ordering::Greater => CartanPart::Negative,
                });
            }
        }
    }
    let constants = constants_from_matrices(names, &basis)?;
    let parities = constants.parities().to_vec();
    let gram = gram_from(&basis, |a, b, i| a.mul(b).otr() * int(sign(parities[i])));
    let pairing = InnerProduct::new(gram, Parity::Odd, parities)?;
    let bad = pairing.invariance_residue(&constants);
    if !bad.is_empty() {
        return Err(Error::CheckFailed(format!(
            "odd pairing on q({n}) is not invariant on {} basis triples",
            bad.len()
        )));
    }
    Ok(BuiltinAlgebra {
        name: format!("q({n})"),
        constants,
        pairing: Some(pairing),
        cartan: Some(cartan),
        matrices: Some(basis),
    })
}

/// The supersymmetry algebra: `e` even, `eps` odd, `[eps,eps] = 2e`, with
/// the odd pairing `(e,eps) = -(eps,e) = 1`.
pub fn susy1() -> Result<BuiltinAlgebra> {
    let constants =
        StructureConstants::new(vec![Parity::Even, Parity::Odd], [((1, 1, 0), int(2))])?
            .with_names(vec!["e".into(), "eps".into()])?;
    let gram = Matrix::from_rows(vec![vec![int(0), int(1)], vec![int(-1), int(0)]]);
    let pairing = InnerProduct::new(gram, Parity::Odd, constants.parities().to_vec())?;
    Ok(BuiltinAlgebra {
        name: "susy1".into(),
        constants,
        pairing: Some(pairing),
        cartan: None,
        matrices: None,
    })
}

/// Parses `gl(N)`, `gl(M|N)`, `sl(N)`, `q(N)` or `susy1`.
pub fn builtin(name: &str) -> Result<BuiltinAlgebra> {
    let name = name.trim();
    if name == "susy1" {
        return susy1();
    }
    let (head, rest) = name
        .split_once('(')
        .ok_or_else(|| Error::Invalid(format!("unknown algebra `{name}`")))?;
    if let Some((m, n)) = rest.strip_suffix(')').and_then(|s| s.split_once('|')) {
        let parse = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::Invalid(format!("malformed algebra name `{name}`")))
        };
        return match head.trim() {
            "gl" => gl_super(parse(m)?, parse(n)?),
            other => Err(Error::Invalid(format!(
                "unknown super algebra family `{other}`"
            ))),
        };
    }
    let n: usize = rest
        .strip_suffix(')')
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| Error::Invalid(format!("malformed algebra name `{name}`")))?;
    match head.trim() {
        "gl" => gl(n),
        "sl" => sl(n),
        "q" => q(n),
        other => Err(Error::Invalid(format!("unknown algebra family `{other}`"))),
    }
}
