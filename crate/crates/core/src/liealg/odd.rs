use std::sync::Arc;

use num_traits::Zero;

use super::constants::{InnerProduct, StructureConstants};
use super::fields::{coordinate_bracket_constants, quadratic_coefficients, sc_from_q};
use super::linalg::Matrix;
use crate::doubles::{build_double_qp, odd_rho_pd, DoubleModel, OddInvariant};
use crate::error::{Error, Result};
use crate::geometry::{GradingKind, GradingSystem, VectorField};
use crate::structures::{check_odd_bialgebra, BialgebraCheck, CheckReport};
use crate::superpoly::{int, rat, sign, Chart, Parity, Rational, SuperPoly};

/// Polynomial ring on a basis, generators of the basis parities; its
/// quadratic part is `S^2` of the space.
pub fn sym_chart(parities: &[Parity], names: &[String]) -> Result<Arc<Chart>> {
    let vars = names
        .iter()
        .zip(parities)
        .map(|(n, &p)| (n.clone(), p, 1))
        .collect();
    Chart::base("Sym", vars)
}

/// `δ(E_K) = (-1)^K Σ P^{IJ}_K E_J E_I` with `P^{IJ}_K = (-1)^{I+1} k(I,J;K)`,
/// where `k` are the constants of the bracket on the parity-reversed dual
/// (coordinate brackets of the Poisson tensor).
pub fn odd_cobracket_from_dual(dual: &StructureConstants, sym: &Arc<Chart>) -> Vec<SuperPoly> {
    let n = dual.dim();
    let mut out = vec![SuperPoly::zero(sym); n];
    for (&(i, j, k), v) in dual.entries() {
        // dual parities are reversed: dual.parity(i) = parity(E_i) + 1
        let s = sign(dual.parity(i)) * sign(dual.parity(k).flip());
        let t = &SuperPoly::var(sym, j) * &SuperPoly::var(sym, i);
        out[k] = &out[k] + &t.scale(&(v * int(s)));
    }
    out
}

/// `δ(u) = ad_u(ρ)`, times `(-1)^u` when `parity_sign` is set, with `ρ`
/// quadratic in `Sym` and `ad_u` acting as a derivation.
pub fn coboundary_cobracket(
    c: &StructureConstants,
    rho: &SuperPoly,
    parity_sign: bool,
) -> Result<Vec<SuperPoly>> {
    let sym = rho.chart();
    (0..c.dim())
        .map(|u| {
            let coeffs = (0..c.dim())
                .map(|j| {
                    let v = c.bracket_basis(u, j);
                    SuperPoly::from_terms(
                        sym,
                        v.into_iter()
                            .enumerate()
                            .filter(|(_, x)| !x.is_zero())
                            .map(|(k, x)| (crate::superpoly::Monomial::var(k), x)),
                    )
                })
                .collect();
            let d = VectorField::new(sym, coeffs)?;
            let s = if parity_sign { sign(c.parity(u)) } else { 1 };
            Ok(d.apply(rho)?.scale_int(s))
        })
        .collect()
}

/// `δ(u) = ½ Σ_{v,w} ([v,w],u) v^∨ w^∨` for an odd invariant form, with
/// `v^∨` the left-dual basis.
pub fn odd_dual_cobracket(c: &StructureConstants, form: &InnerProduct) -> Result<Vec<SuperPoly>> {
    if !form.parity().is_odd() {
        return Err(Error::Invalid(
            "the odd-dual cobracket needs an odd form".into(),
        ));
    }
    let sym = sym_chart(c.parities(), c.names())?;
    let dual = form.left_dual_basis()?;
    let lin = |v: &[Rational]| {
        SuperPoly::from_terms(
            &sym,
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (crate::superpoly::Monomial::var(k), x.clone())),
        )
    };
    let n = c.dim();
    let mut out = vec![SuperPoly::zero(&sym); n];
    for v in 0..n {
        for w in 0..n {
            let vw = c.bracket_basis(v, w);
            if vw.iter().all(Zero::is_zero) {
                continue;
            }
            let prod = &lin(&dual[v]) * &lin(&dual[w]);
            for (u, slot) in out.iter_mut().enumerate() {
                let x = form.pair(&vw, &c.unit(u));
                if !x.is_zero() {
                    *slot = &*slot + &prod.scale(&(x * rat(1, 2)));
                }
            }
        }
    }
    Ok(out)
}

/// Renders `δ(u) = ...` lines for cobracket values in `Sym`.
pub fn render_sym_cobracket(names: &[String], values: &[SuperPoly]) -> Vec<String> {
    names
        .iter()
        .zip(values)
        .map(|(n, v)| format!("delta({n}) = {}", v.render()))
        .collect()
}

/// The odd double `g ⊕ Πg*` of an odd bialgebra, basis `e_i, ε^i`.
#[derive(Clone, Debug)]
pub struct OddDouble {
    pub input: BialgebraCheck,
    pub model: DoubleModel,
    pub invariant: OddInvariant,
    pub bracket: StructureConstants,
    /// Coordinate brackets of `P_D` on `Π d`.
    pub dual: StructureConstants,
    pub sym: Arc<Chart>,
    pub cobracket: Vec<SuperPoly>,
    /// `(-1)^u ad_u(Σ e_i ε^i)`.
    pub coboundary: Vec<SuperPoly>,
    pub pairing: InnerProduct,
    pub invariance: Vec<((usize, usize, usize), Rational)>,
    pub bialgebra: CheckReport,
}

/// `(e_i, ε^j) = δ_i^j = -(ε^j, e_i)`.
pub fn odd_pairing(parities: &[Parity]) -> Result<InnerProduct> {
    let n = parities.len();
    let mut gram = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        gram[(i, n + i)] = int(1);
        gram[(n + i, i)] = int(-1);
    }
    let all = parities
        .iter()
        .copied()
        .chain(parities.iter().map(|p| p.flip()))
        .collect();
    InnerProduct::new(gram, Parity::Odd, all)
}

fn odd_names(c: &StructureConstants) -> Vec<String> {
    let mut names: Vec<String> = c.names().to_vec();
    names.extend(c.names().iter().map(|n| format!("{n}*")));
    names
}

/// Odd double from `-X_{θ(Q)+P}` on `ΠT*Πg`, `P` the Lie-Poisson tensor of
/// the constants `p` on `Πg*`, with cobracket from `P_D = ½{-θ(Q_D), ρ}`.
pub fn odd_double(c: &StructureConstants, p: &StructureConstants) -> Result<OddDouble> {
    let input = check_odd_bialgebra(c, p)?;
    if !input.report.passed() {
        return Err(Error::CheckFailed(format!(
            "not an odd bialgebra: {}",
            input.report.to_json()
        )));
    }
    let n = c.dim();
    let grading = GradingSystem::new(GradingKind::QP, 1, -1);
    let model = build_double_qp(&input.field, &input.tensor, &grading, false)?;
    let names = odd_names(c);
    let bracket = sc_from_q(&model.q_d)?.with_names(names.clone())?;
    let second: Vec<String> = (1..=n)
        .map(|i| format!("xis{i}"))
        .chain((1..=n).map(|i| format!("xs{i}")))
        .collect();
    let invariant = odd_rho_pd(&model, Some(second))?;
    let dual = coordinate_bracket_constants(&invariant.p_d)?;
    let sym = sym_chart(bracket.parities(), &names)?;
    let cobracket = odd_cobracket_from_dual(&dual, &sym);
    let mut rho = SuperPoly::zero(&sym);
    for i in 0..n {
        rho = &rho + &(&SuperPoly::var(&sym, i) * &SuperPoly::var(&sym, n + i));
    }
    let coboundary = coboundary_cobracket(&bracket, &rho, true)?;
    let pairing = odd_pairing(c.parities())?;
    let invariance = pairing.invariance_residue(&bracket);
    let bialgebra = check_odd_bialgebra(&bracket, &dual)?.report;
    Ok(OddDouble {
        input,
        model,
        invariant,
        bracket,
        dual,
        sym,
        cobracket,
        coboundary,
        pairing,
        invariance,
        bialgebra,
    })
}

impl OddDouble {
    pub fn dim(&self) -> usize {
        self.bracket.dim() / 2
    }

    /// `P_D = ½ x^{*j} x^{*i} Q_ij^k x_k + ½ ξ^k P_k^{ij} ξ*_j ξ*_i`, the
    /// second term being `P` with its momenta renamed to the second-lift
    /// momenta of `ξ`.
    pub fn p_d_formula(&self) -> Result<SuperPoly> {
        let chart = &self.invariant.chart;
        let dm = &self.model.lift;
        let n = self.dim();
        let var = |i: usize| SuperPoly::var(chart, i);
        let x = |k: usize| var(dm.momentum_of(k));
        let xs = |i: usize| var(chart.momentum_of(dm.momentum_of(i)));
        let mut out = SuperPoly::zero(chart);
        for ((i, j, k), v) in quadratic_coefficients(&self.input.field) {
            let t = &(&xs(j) * &xs(i)) * &x(k);
            out = &out + &t.scale(&(v * rat(1, 2)));
        }
        let first = &self.input.lift;
        let images: Vec<SuperPoly> = (0..first.len())
            .map(|a| {
                if a < n {
                    var(a)
                } else {
                    var(chart.momentum_of(a - n))
                }
            })
            .collect();
        let p = self.input.tensor.substitute(&images, chart)?;
        Ok(&out + &p)
    }

    /// `[e_i,e_j] = (-1)^j Q_ij^k e_k`, `[e_i,ε^j] = P_i^{jk} e_k + ε^k Q_ki^j`,
    /// `[ε^i,ε^j] = (-1)^{i+1} ε^k P^{ij}_k`, with `P^{ij}_k = (-1)^{i+1} p_ij^k`.
    pub fn bracket_formula(
        c: &StructureConstants,
        p: &StructureConstants,
    ) -> Result<StructureConstants> {
        let n = c.dim();
        let q = |i: usize, j: usize, k: usize| c.get(i, j, k) * int(sign(c.parity(j)));
        let pu = |i: usize, j: usize, k: usize| p.get(i, j, k) * int(sign(c.parity(i).flip()));
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    entries.push(((i, j, k), q(i, j, k) * int(sign(c.parity(j)))));
                    entries.push(((i, n + j, k), pu(j, k, i)));
                    entries.push(((i, n + j, n + k), q(k, i, j)));
                    entries.push((
                        (n + i, n + j, n + k),
                        pu(i, j, k) * int(sign(c.parity(i).flip())),
                    ));
                }
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        let parities = c
            .parities()
            .iter()
            .copied()
            .chain(c.parities().iter().map(|x| x.flip()))
            .collect();
        StructureConstants::new(parities, entries)?.with_names(odd_names(c))
    }
}
