use num_traits::Zero;

use super::constants::{InnerProduct, StructureConstants};
use super::fields::{coordinate_bracket_constants, sc_from_q};
use super::linalg::Matrix;
use crate::doubles::{
    almost_schouten_sd, build_double_qs, long_momentum_r, AlmostSchouten, Connection, DoubleModel,
    LongMomentum,
};
use crate::error::{Error, Result};
use crate::geometry::{GradingKind, GradingSystem};
use crate::structures::{check_bialgebra, yang_baxter, BialgebraCheck, CheckReport};
use crate::superpoly::{int, sign, Parity, Rational};

/// The double `d = g ⊕ g*` of a Lie bialgebra, basis `e_1..e_n, e^1..e^n`.
#[derive(Clone, Debug)]
pub struct DrinfeldDouble {
    pub input: BialgebraCheck,
    pub model: DoubleModel,
    pub long: LongMomentum,
    pub schouten: AlmostSchouten,
    /// Read off `Q_D` with `ξ^i -> e_i`, `ξ_i -> e^i`.
    pub bracket: StructureConstants,
    /// The second bracket on `d`, the cobracket moved across the pairing.
    pub second_bracket: StructureConstants,
    /// `δ(u_c) = Σ cobracket(a,b,c) u_a ∧ u_b`: minus the coordinate
    /// brackets of `S_D`, whose coordinates `ξ^i, ξ_i` are dual to `e_i, e^i`.
    pub cobracket: StructureConstants,
    pub pairing: InnerProduct,
    pub invariance: Vec<((usize, usize, usize), Rational)>,
    /// `d` with `δ` is again a bialgebra.
    pub bialgebra: CheckReport,
    pub cybe: CheckReport,
    pub gybe: CheckReport,
}

fn dual_names(c: &StructureConstants) -> Vec<String> {
    let mut names: Vec<String> = c.names().to_vec();
    names.extend(c.names().iter().map(|n| format!("{n}*")));
    names
}

fn swap_halves(k: &StructureConstants, n: usize) -> Result<StructureConstants> {
    let s = |a: usize| if a < n { a + n } else { a - n };
    let entries: Vec<_> = k
        .entries()
        .map(|(&(a, b, c), v)| ((s(a), s(b), s(c)), v.clone()))
        .collect();
    let parities = (0..2 * n).map(|a| k.parity(s(a))).collect();
    StructureConstants::new(parities, entries)
}

/// The even pairing `⟨e_i,e^j⟩ = δ_i^j`, `⟨e^j,e_i⟩ = (-1)^i δ_i^j`.
pub fn drinfeld_pairing(parities: &[Parity]) -> Result<InnerProduct> {
    let n = parities.len();
    let mut gram = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        gram[(i, n + i)] = int(1);
        gram[(n + i, i)] = int(sign(parities[i]));
    }
    let all = parities.iter().chain(parities).copied().collect();
    InnerProduct::new(gram, Parity::Even, all)
}

/// Drinfeld double from `Q + S` on `T*Πg`, `S` the Lie-Schouten tensor of
/// the dual constants `b`, and its cobracket from `S_D = ½{Q_D, r}` with
/// `r = Σ π_i π^i`.
pub fn drinfeld_double(c: &StructureConstants, b: &StructureConstants) -> Result<DrinfeldDouble> {
    let input = check_bialgebra(c, b)?;
    if !input.report.passed() {
        return Err(Error::CheckFailed(format!(
            "not a Lie bialgebra: {}",
            input.report.to_json()
        )));
    }
    let n = c.dim();
    let grading = GradingSystem::new(GradingKind::QS, 1, -1);
    let model = build_double_qs(&input.field, &input.tensor, &grading, false)?;
    let names = dual_names(c);
    let bracket = sc_from_q(&model.q_d)?.with_names(names.clone())?;
    let second: Vec<String> = (1..=n)
        .map(|i| format!("pi{i}"))
        .chain((1..=n).map(|i| format!("kappa{i}")))
        .collect();
    let long = long_momentum_r(&model, &Connection::flat(&model.base), Some(second))?;
    let schouten = almost_schouten_sd(&model, &long)?;
    let cobracket = coordinate_bracket_constants(&schouten.s_d)?
        .scaled(&int(-1))
        .with_names(names.clone())?;
    let second_bracket = swap_halves(&cobracket, n)?.with_names(names)?;
    let pairing = drinfeld_pairing(c.parities())?;
    let invariance = pairing.invariance_residue(&bracket);
    let bialgebra = check_bialgebra(&bracket, &cobracket)?.report;
    let pq = model.q_d.hamiltonian_lift_p(&long.chart)?;
    let (cybe, gybe) = yang_baxter(&long.r, &pq)?;
    Ok(DrinfeldDouble {
        input,
        model,
        long,
        schouten,
        bracket,
        second_bracket,
        cobracket,
        pairing,
        invariance,
        bialgebra,
        cybe,
        gybe,
    })
}

impl DrinfeldDouble {
    pub fn dim(&self) -> usize {
        self.bracket.dim() / 2
    }

    /// `g` and `g*` are sub-bialgebras with the input brackets and
    /// cobrackets `b` and `-c`.
    pub fn sub_bialgebras_match(&self, c: &StructureConstants, b: &StructureConstants) -> bool {
        let n = self.dim();
        let lower: Vec<usize> = (0..n).collect();
        let upper: Vec<usize> = (n..2 * n).collect();
        let same = |x: Result<StructureConstants>, y: &StructureConstants| match x {
            Ok(x) => x.entries().eq(y.entries()),
            Err(_) => false,
        };
        same(self.bracket.restrict(&lower), c)
            && same(self.bracket.restrict(&upper), b)
            && same(self.cobracket.restrict(&lower), b)
            && same(self.cobracket.restrict(&upper), &c.scaled(&int(-1)))
    }

    /// `δ(u) = ...` lines with wedge products over `a < b`.
    pub fn render_cobracket(&self) -> Vec<String> {
        render_wedge_cobracket(&self.cobracket)
    }
}

pub(crate) fn render_wedge_cobracket(d: &StructureConstants) -> Vec<String> {
    let n = d.dim();
    let names = d.names();
    (0..n)
        .map(|c| {
            let mut terms: Vec<(Rational, String)> = Vec::new();
            for a in 0..n {
                for b in a..n {
                    let mut v = d.get(a, b, c);
                    if a != b {
                        v *= int(2);
                    }
                    if !v.is_zero() {
                        terms.push((v, format!("{}^{}", names[a], names[b])));
                    }
                }
            }
            let (vals, labels): (Vec<Rational>, Vec<String>) = terms.into_iter().unzip();
            format!(
                "delta({}) = {}",
                names[c],
                super::constants::render_combination(&vals, &labels)
            )
        })
        .collect()
}

/// The doubled constants written out from `c` and `b` for a purely even
/// bialgebra: `[e_i,e_j] = c_ij^k e_k`, `[e^i,e^j] = b^{ij}_k e^k`,
/// `[e_i,e^j] = b^{jk}_i e_k - c_ik^j e^k`.
pub fn even_double_formula(
    c: &StructureConstants,
    b: &StructureConstants,
) -> Result<StructureConstants> {
    if c.parities().iter().any(|p| p.is_odd()) {
        return Err(Error::Invalid(
            "the written-out double is for even algebras".into(),
        ));
    }
    let n = c.dim();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                entries.push(((i, j, k), c.get(i, j, k)));
                entries.push(((n + i, n + j, n + k), b.get(i, j, k)));
                entries.push(((i, n + j, k), b.get(j, k, i)));
                entries.push(((i, n + j, n + k), -c.get(i, k, j)));
            }
        }
    }
    StructureConstants::new(vec![Parity::Even; 2 * n], entries)?.with_names(dual_names(c))
}

/// `δ(e_i) = b_i^{jk} e_j∧e_k`, `δ(e^i) = -c^i_{jk} e^j∧e^k`.
pub fn even_cobracket_formula(
    c: &StructureConstants,
    b: &StructureConstants,
) -> Result<StructureConstants> {
    let n = c.dim();
    let mut entries = Vec::new();
    for (&(i, j, k), v) in b.entries() {
        entries.push(((i, j, k), v.clone()));
    }
    for (&(i, j, k), v) in c.entries() {
        entries.push(((n + i, n + j, n + k), -v.clone()));
    }
    StructureConstants::new(vec![Parity::Even; 2 * n], entries)?.with_names(dual_names(c))
}
