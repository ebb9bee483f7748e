use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::builtin::{q as q_algebra, CartanPart};
use super::constants::{InnerProduct, StructureConstants};
use super::linalg::Matrix;
use super::odd::{coboundary_cobracket, sym_chart};
use crate::error::{Error, Result};
use crate::superpoly::{int, sign, Chart, Parity, Rational, SuperPoly};

/// Data of a double of `a ⊕ h` over `h`: brackets on `a`, on `h`, the
/// action of `h` on `a`, the bracket on `b` (in the basis `e^j` paired with
/// `e_i` by `(e_i, e^j) = δ_i^j`) and an invariant form on `h` whose parity
/// decides whether `b` is `a*` or `Πa*`.
#[derive(Clone, Debug)]
pub struct RelativeInput {
    pub a: StructureConstants,
    pub h: StructureConstants,
    /// `[h_μ, e_i] = Σ_k action(μ,i,k) e_k`.
    pub action: BTreeMap<(usize, usize, usize), Rational>,
    pub b: StructureConstants,
    pub h_form: InnerProduct,
}

/// Which part of the cross bracket `[e_i, e^j]` a sign record describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TermFamily {
    /// Components along `e_k`, against `[e^j,e^k]`.
    Lower,
    /// Components along `e^k`, against `[e_k,e_i]`.
    Upper,
    /// Components along `h`, against the action contracted with the
    /// inverse Gram matrix of `h`.
    Cartan,
}

/// The constant ratio between constructed and raw coefficients on one
/// family and parity class `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignRecord {
    pub family: TermFamily,
    pub parities: (Parity, Parity),
    pub ratio: Rational,
}

#[derive(Clone, Debug)]
pub struct RelativeDouble {
    /// Basis `a`, then `h`, then `b`.
    pub constants: StructureConstants,
    pub form: InnerProduct,
    pub signs: Vec<SignRecord>,
    pub jacobi: Vec<((usize, usize, usize), Vec<Rational>)>,
    pub invariance: Vec<((usize, usize, usize), Rational)>,
    pub sym: Arc<Chart>,
    /// `δ(u) = ad_u(Σ e_i e^i)`.
    pub cobracket: Vec<SuperPoly>,
}

fn full_form(input: &RelativeInput) -> Result<InnerProduct> {
    let (na, nh) = (input.a.dim(), input.h.dim());
    let n = 2 * na + nh;
    let alpha = input.h_form.parity();
    let mut parities: Vec<Parity> = input.a.parities().to_vec();
    parities.extend_from_slice(input.h.parities());
    parities.extend(input.a.parities().iter().map(|&p| p + alpha));
    for i in 0..na {
        if input.b.parity(i) != parities[na + nh + i] {
            return Err(Error::ParityMismatch(format!(
                "dual basis vector {} of b has parity {}, expected {}",
                i + 1,
                input.b.parity(i),
                parities[na + nh + i]
            )));
        }
    }
    let mut gram = Matrix::zeros(n, n);
    for i in 0..na {
        let (u, v) = (parities[i], parities[na + nh + i]);
        // (e^i, e_i) from the (super) symmetry of the form
        let s = if alpha.is_odd() {
            sign(u + v + u.times(v))
        } else {
            sign(u.times(v))
        };
        gram[(i, na + nh + i)] = int(1);
        gram[(na + nh + i, i)] = int(s);
    }
    for m in 0..nh {
        for l in 0..nh {
            gram[(na + m, na + l)] = input.h_form.gram()[(m, l)].clone();
        }
    }
    InnerProduct::new(gram, alpha, parities)
}

/// Solves `(y, w) = r_w` for all basis `w`.
fn from_pairings(form: &InnerProduct, r: &[Rational]) -> Result<Vec<Rational>> {
    form.gram()
        .transpose()
        .solve(r)
        .ok_or_else(|| Error::Invalid("the inner product is degenerate".into()))
}

/// Builds the relative double: the brackets of `b` with `h` and of `a` with
/// `b` are the unique ones making the form invariant; Jacobi and invariance
/// are then verified and the signs of the cross-bracket terms recorded.
pub fn relative_double(input: &RelativeInput) -> Result<RelativeDouble> {
    let (na, nh) = (input.a.dim(), input.h.dim());
    let n = 2 * na + nh;
    if input.b.dim() != na {
        return Err(Error::DimensionMismatch(format!(
            "a has dimension {na} but b has dimension {}",
            input.b.dim()
        )));
    }
    let form = full_form(input)?;
    let h_bad = input.h_form.invariance_residue(&input.h);
    if !h_bad.is_empty() {
        return Err(Error::CheckFailed(format!(
            "the form on h is not invariant on {} basis triples",
            h_bad.len()
        )));
    }
    let par = form_parities(input);
    let sgn = |u: usize| -> Rational {
        if form.parity().is_odd() {
            int(sign(par[u]))
        } else {
            Rational::one()
        }
    };
    let (ai, hi, bi) = (|i: usize| i, |m: usize| na + m, |j: usize| na + nh + j);

    // brackets known so far, as vectors in the full basis
    let mut known: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
    let zero = vec![Rational::zero(); n];
    let put = |known: &mut BTreeMap<(usize, usize), Vec<Rational>>,
               x: usize,
               y: usize,
               v: Vec<Rational>| {
        let s = -int(sign(par[x].times(par[y])));
        known.insert((y, x), v.iter().map(|c| c * &s).collect());
        known.insert((x, y), v);
    };
    for i in 0..na {
        for j in 0..na {
            let mut v = zero.clone();
            for k in 0..na {
                v[ai(k)] = input.a.get(i, j, k);
            }
            put(&mut known, ai(i), ai(j), v.clone());
            let mut w = zero.clone();
            for k in 0..na {
                w[bi(k)] = input.b.get(i, j, k);
            }
            put(&mut known, bi(i), bi(j), w);
        }
    }
    for m in 0..nh {
        for l in 0..nh {
            let mut v = zero.clone();
            for k in 0..nh {
                v[hi(k)] = input.h.get(m, l, k);
            }
            put(&mut known, hi(m), hi(l), v);
        }
        for i in 0..na {
            let mut v = zero.clone();
            for k in 0..na {
                if let Some(x) = input.action.get(&(m, i, k)) {
                    v[ai(k)] = x.clone();
                }
            }
            put(&mut known, hi(m), ai(i), v);
        }
    }
    let pair_with = |known: &BTreeMap<(usize, usize), Vec<Rational>>,
                     v: usize,
                     x: usize,
                     y: usize| { form.pair(&unit(n, v), &known[&(x, y)]) };
    // [e^j, h_μ]: ([e^j, h], e_i) = s(h)(e^j, [h, e_i]); zero against b and h
    for j in 0..na {
        for m in 0..nh {
            let r: Vec<Rational> = (0..n)
                .map(|w| {
                    if w < na {
                        sgn(hi(m)) * pair_with(&known, bi(j), hi(m), w)
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            let v = from_pairings(&form, &r)?;
            put(&mut known, bi(j), hi(m), v);
        }
    }
    // [e_i, e^j]: against b ⊕ h use s(e^j)(e_i, [e^j, w]); against a use
    // ([x,y],w) = -(-1)^{xy} s(x) (y, [x, w])
    for i in 0..na {
        for j in 0..na {
            let (x, y) = (ai(i), bi(j));
            let r: Vec<Rational> = (0..n)
                .map(|w| {
                    if w >= na {
                        sgn(y) * pair_with(&known, x, y, w)
                    } else {
                        -int(sign(par[x].times(par[y]))) * sgn(x) * pair_with(&known, y, x, w)
                    }
                })
                .collect();
            let v = from_pairings(&form, &r)?;
            put(&mut known, x, y, v);
        }
    }
    let mut entries = Vec::new();
    for (&(x, y), v) in &known {
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                entries.push(((x, y, k), c.clone()));
            }
        }
    }
    let mut names: Vec<String> = input.a.names().to_vec();
    names.extend_from_slice(input.h.names());
    names.extend_from_slice(input.b.names());
    let constants = StructureConstants::new(par.clone(), entries)?.with_names(names.clone())?;
    let signs = sign_records(input, &constants)?;
    let jacobi = constants.jacobi_residue();
    let invariance = form.invariance_residue(&constants);
    let sym = sym_chart(&par, &names)?;
    let mut rho = SuperPoly::zero(&sym);
    for i in 0..na {
        rho = &rho + &(&SuperPoly::var(&sym, ai(i)) * &SuperPoly::var(&sym, bi(i)));
    }
    let cobracket = coboundary_cobracket(&constants, &rho, false)?;
    if let Some(m) = (0..nh).find(|&m| !cobracket[hi(m)].is_zero()) {
        return Err(Error::CheckFailed(format!(
            "cobracket does not vanish on {}: {}",
            names[hi(m)],
            cobracket[hi(m)].render()
        )));
    }
    Ok(RelativeDouble {
        constants,
        form,
        signs,
        jacobi,
        invariance,
        sym,
        cobracket,
    })
}

fn form_parities(input: &RelativeInput) -> Vec<Parity> {
    let alpha = input.h_form.parity();
    let mut par: Vec<Parity> = input.a.parities().to_vec();
    par.extend_from_slice(input.h.parities());
    par.extend(input.a.parities().iter().map(|&p| p + alpha));
    par
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn sign_records(input: &RelativeInput, c: &StructureConstants) -> Result<Vec<SignRecord>> {
    let (na, nh) = (input.a.dim(), input.h.dim());
    let ginv = input.h_form.inverse_gram()?;
    let mut ratios: BTreeMap<(TermFamily, Parity, Parity), Rational> = BTreeMap::new();
    let mut record =
        |family: TermFamily, i: usize, j: usize, got: Rational, raw: Rational| -> Result<()> {
            if got.is_zero() && raw.is_zero() {
                return Ok(());
            }
            if got.is_zero() || raw.is_zero() {
                return Err(Error::SignResolution(format!(
                    "{family:?} term of [{},{}] is {got} against raw {raw}",
                    c.name(i),
                    c.name(na + nh + j)
                )));
            }
            let key = (family, input.a.parity(i), input.a.parity(j));
            let r = got / raw;
            match ratios.get(&key) {
                Some(old) if *old != r => Err(Error::SignResolution(format!(
                    "{family:?} terms with parities {:?} need both {old} and {r}",
                    (key.1, key.2)
                ))),
                _ => {
                    ratios.insert(key, r);
                    Ok(())
                }
            }
        };
    for i in 0..na {
        for j in 0..na {
            let v = c.bracket_basis(i, na + nh + j);
            for k in 0..na {
                record(TermFamily::Lower, i, j, v[k].clone(), input.b.get(j, k, i))?;
                record(
                    TermFamily::Upper,
                    i,
                    j,
                    v[na + nh + k].clone(),
                    input.a.get(k, i, j),
                )?;
            }
            for l in 0..nh {
                let mut raw = Rational::zero();
                for m in 0..nh {
                    if let Some(x) = input.action.get(&(m, i, j)) {
                        raw += x * &ginv[(m, l)];
                    }
                }
                record(TermFamily::Cartan, i, j, v[na + l].clone(), raw)?;
            }
        }
    }
    Ok(ratios
        .into_iter()
        .map(|((family, pi, pj), ratio)| SignRecord {
            family,
            parities: (pi, pj),
            ratio,
        })
        .collect())
}

/// `q(n)` split as `n₊ ⊕ h ⊕ n₋`: `a = n₊`, `h` the diagonal part, and `b`
/// spanned by the dual vectors `e_ij -> ε_ji`, `ε_ij -> -e_ji`.
pub struct QSplit {
    pub input: RelativeInput,
    /// Image in `q(n)` of each basis vector of the relative double.
    pub embedding: Vec<Vec<Rational>>,
}

pub fn q_relative_input(n: usize) -> Result<QSplit> {
    let alg = q_algebra(n)?;
    let c = &alg.constants;
    let cartan = alg.cartan.clone().unwrap_or_default();
    let form = alg
        .pairing
        .clone()
        .ok_or_else(|| Error::Invalid("q(n) has no pairing".into()))?;
    let dim = c.dim();
    let pos: Vec<usize> = (0..dim)
        .filter(|&u| cartan[u] == CartanPart::Positive)
        .collect();
    let diag: Vec<usize> = (0..dim)
        .filter(|&u| cartan[u] == CartanPart::Cartan)
        .collect();
    let nn = n * n;
    let idx = |odd: bool, i: usize, j: usize| if odd { nn + i * n + j } else { i * n + j };
    let dual_of = |u: usize| -> Vec<Rational> {
        let (odd, i, j) = (u >= nn, (u % nn) / n, u % n);
        let mut v = vec![Rational::zero(); dim];
        if odd {
            v[idx(false, j, i)] = int(-1);
        } else {
            v[idx(true, j, i)] = int(1);
        }
        v
    };
    for &u in &pos {
        for &w in &pos {
            let want = if u == w {
                Rational::one()
            } else {
                Rational::zero()
            };
            if form.pair(&c.unit(u), &dual_of(w)) != want {
                return Err(Error::CheckFailed("q(n) dual basis is not dual".into()));
            }
        }
    }
    let mut embedding: Vec<Vec<Rational>> = pos.iter().chain(&diag).map(|&u| c.unit(u)).collect();
    embedding.extend(pos.iter().map(|&u| dual_of(u)));
    let a = c.restrict(&pos)?;
    let h = c.restrict(&diag)?;
    let mut action = BTreeMap::new();
    for (m, &hm) in diag.iter().enumerate() {
        for (i, &ai) in pos.iter().enumerate() {
            let v = c.bracket_basis(hm, ai);
            for (k, &ak) in pos.iter().enumerate() {
                if !v[ak].is_zero() {
                    action.insert((m, i, k), v[ak].clone());
                }
            }
        }
    }
    // b in the dual basis: expand brackets of dual vectors back in it
    let duals: Vec<Vec<Rational>> = pos.iter().map(|&u| dual_of(u)).collect();
    let mut b_entries = Vec::new();
    for i in 0..pos.len() {
        for j in 0..pos.len() {
            let v = c.bracket(&duals[i], &duals[j]);
            for (k, &ak) in pos.iter().enumerate() {
                // the coefficient along e^k is (e_k, v)
                let x = form.pair(&c.unit(ak), &v);
                if !x.is_zero() {
                    b_entries.push(((i, j, k), x));
                }
            }
        }
    }
    let b_par = pos.iter().map(|&u| c.parity(u).flip()).collect();
    let b_names = pos.iter().map(|&u| format!("{}^", c.name(u))).collect();
    let b = StructureConstants::new(b_par, b_entries)?.with_names(b_names)?;
    let gram_h = Matrix::from_rows(
        diag.iter()
            .map(|&x| diag.iter().map(|&y| form.gram()[(x, y)].clone()).collect())
            .collect(),
    );
    let h_form = InnerProduct::new(gram_h, Parity::Odd, h.parities().to_vec())?;
    Ok(QSplit {
        input: RelativeInput {
            a,
            h,
            action,
            b,
            h_form,
        },
        embedding,
    })
}

impl QSplit {
    /// Basis triples where the relative double's bracket, pushed into
    /// `q(n)`, differs from the matrix commutator.
    pub fn bracket_mismatches(
        &self,
        double: &RelativeDouble,
        q: &StructureConstants,
    ) -> Vec<(usize, usize)> {
        let d = &double.constants;
        let n = d.dim();
        let push = |v: &[Rational]| -> Vec<Rational> {
            let mut out = vec![Rational::zero(); q.dim()];
            for (k, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (t, e) in self.embedding[k].iter().enumerate() {
                    out[t] += c * e;
                }
            }
            out
        };
        let mut bad = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let got = push(&d.bracket_basis(x, y));
                let want = q.bracket(&self.embedding[x], &self.embedding[y]);
                if got != want {
                    bad.push((x, y));
                }
            }
        }
        bad
    }

    /// The cobracket transported to `Sym(q(n))` in the matrix basis.
    pub fn cobracket_in_q(
        &self,
        double: &RelativeDouble,
        q: &StructureConstants,
    ) -> Result<Vec<SuperPoly>> {
        let sym_q = sym_chart(q.parities(), q.names())?;
        let images: Vec<SuperPoly> = self
            .embedding
            .iter()
            .map(|v| {
                SuperPoly::from_terms(
                    &sym_q,
                    v.iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(k, x)| (crate::superpoly::Monomial::var(k), x.clone())),
                )
            })
            .collect();
        let mut out = vec![SuperPoly::zero(&sym_q); q.dim()];
        for (x, v) in self.embedding.iter().enumerate() {
            // each embedded vector is ± one matrix basis vector
            let (t, s) = v
                .iter()
                .enumerate()
                .find(|(_, c)| !c.is_zero())
                .map(|(t, c)| (t, c.clone()))
                .ok_or_else(|| Error::Invalid("zero basis vector".into()))?;
            out[t] = double.cobracket[x]
                .substitute(&images, &sym_q)?
                .scale(&(Rational::one() / s));
        }
        Ok(out)
    }
}

/// The closed-form odd cobracket of `q(n)` on `Sym(q(n))`, with
/// `σ = 1` for `k < l` and `-1` for `k > l`:
/// `δ(e_kl) = 2σ Σ_i (-e_ki ε_il + ε_ki e_il) + σ(ε_kk - ε_ll) e_kl - σ(e_kk - e_ll) ε_kl`,
/// `δ(ε_kl) = 2σ Σ_i (e_ki e_il - ε_ki ε_il) + σ(e_kk + e_ll) e_kl - σ(ε_kk - ε_ll) ε_kl`,
/// the sums over `i` strictly between `k` and `l`; zero on the diagonal.
pub fn q_cobracket_formula(n: usize) -> Result<Vec<SuperPoly>> {
    let alg = q_algebra(n)?;
    let c = &alg.constants;
    let sym = sym_chart(c.parities(), c.names())?;
    let nn = n * n;
    let e = |i: usize, j: usize| SuperPoly::var(&sym, i * n + j);
    let eps = |i: usize, j: usize| SuperPoly::var(&sym, nn + i * n + j);
    let mut out = vec![SuperPoly::zero(&sym); c.dim()];
    for k in 0..n {
        for l in 0..n {
            if k == l {
                continue;
            }
            let s: i64 = if k < l { 1 } else { -1 };
            let (lo, hi) = (k.min(l), k.max(l));
            let mut de = SuperPoly::zero(&sym);
            let mut dq = SuperPoly::zero(&sym);
            for i in lo + 1..hi {
                de = &de + &(&(&eps(k, i) * &e(i, l)) - &(&e(k, i) * &eps(i, l))).scale_int(2 * s);
                dq = &dq + &(&(&e(k, i) * &e(i, l)) - &(&eps(k, i) * &eps(i, l))).scale_int(2 * s);
            }
            de = &de + &(&(&eps(k, k) - &eps(l, l)) * &e(k, l)).scale_int(s);
            de = &de - &(&(&e(k, k) - &e(l, l)) * &eps(k, l)).scale_int(s);
            dq = &dq + &(&(&e(k, k) + &e(l, l)) * &e(k, l)).scale_int(s);
            dq = &dq - &(&(&eps(k, k) - &eps(l, l)) * &eps(k, l)).scale_int(s);
            out[k * n + l] = de;
            out[nn + k * n + l] = dq;
        }
    }
    Ok(out)
}
