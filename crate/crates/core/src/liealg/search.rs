use std::collections::BTreeMap;

use num_traits::Zero;

use super::constants::StructureConstants;
use super::fields::{lie_poisson_tensor, pi_chart, q_from_sc, LIE_SHIFT};
use super::linalg::Matrix;
use crate::brackets::canonical;
use crate::error::{Error, Result};
use crate::geometry::{lift, LiftKind};
use crate::structures::{check_odd_bialgebra, cocycle_residue};
use crate::superpoly::{int, Monomial, Parity, Rational};

/// Independent entries `(i, j, k)` of constants on a basis of the given
/// parities: `i < j`, or `i = j` for odd `i`, with `k` of parity `i + j`.
pub fn constant_slots(parities: &[Parity]) -> Vec<(usize, usize, usize)> {
    let n = parities.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            if i == j && !parities[i].is_odd() {
                continue;
            }
            for k in 0..n {
                if parities[k] == parities[i] + parities[j] {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

struct Dense {
    n: usize,
    v: Vec<i64>,
}

impl Dense {
    fn from_slots(n: usize, slots: &[(usize, usize, usize)], values: &[i64]) -> Dense {
        let mut v = vec![0; n * n * n];
        for (&(i, j, k), &x) in slots.iter().zip(values) {
            v[(i * n + j) * n + k] = x;
            v[(j * n + i) * n + k] = -x;
        }
        Dense { n, v }
    }

    fn get(&self, i: usize, j: usize, k: usize) -> i64 {
        self.v[(i * self.n + j) * self.n + k]
    }

    fn is_lie(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for m in 0..n {
                        let mut s = 0;
                        for l in 0..n {
                            s += self.get(i, j, l) * self.get(l, k, m)
                                + self.get(j, k, l) * self.get(l, i, m)
                                + self.get(k, i, l) * self.get(l, j, m);
                        }
                        if s != 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn to_constants(&self, parities: &[Parity]) -> Result<StructureConstants> {
        let n = self.n;
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let x = self.get(i, j, k);
                    if x != 0 {
                        entries.push(((i, j, k), int(x)));
                    }
                }
            }
        }
        StructureConstants::new(parities.to_vec(), entries)
    }
}

fn odometer(values: &[i64], len: usize, mut visit: impl FnMut(&[i64]) -> bool) {
    if values.is_empty() {
        return;
    }
    let mut idx = vec![0usize; len];
    loop {
        let current: Vec<i64> = idx.iter().map(|&i| values[i]).collect();
        if !visit(&current) {
            return;
        }
        let mut p = 0;
        loop {
            if p == len {
                return;
            }
            idx[p] += 1;
            if idx[p] < values.len() {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

/// Nonzero cobrackets `b` on a purely even Lie algebra with entries drawn
/// from `values`, keeping those where `b` is Lie and the coordinate cocycle
/// identity holds; at most `limit` results, in enumeration order.
pub fn search_even_cobrackets(
    c: &StructureConstants,
    values: &[i64],
    limit: usize,
) -> Result<Vec<StructureConstants>> {
    if c.parities().iter().any(|p| p.is_odd()) {
        return Err(Error::Invalid(
            "the even search needs an even algebra".into(),
        ));
    }
    let n = c.dim();
    let slots = constant_slots(c.parities());
    let mut found = Vec::new();
    let mut failure = None;
    odometer(values, slots.len(), |vals| {
        if vals.iter().all(|&x| x == 0) {
            return true;
        }
        let d = Dense::from_slots(n, &slots, vals);
        if !d.is_lie() {
            return true;
        }
        match d.to_constants(c.parities()) {
            Ok(b) => {
                if cocycle_residue(c, &b).is_empty() {
                    found.push(b);
                }
            }
            Err(e) => {
                failure = Some(e);
                return false;
            }
        }
        found.len() < limit
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

/// Constants `p` on `Πg*` making `g` an odd bialgebra: `{Q,P} = 0` is
/// solved as a linear system over the independent entries, combinations of
/// its solution basis with coefficients in `values` are kept when `p` is
/// Lie, and each survivor is confirmed by the full three-condition check.
/// Results are ordered by decreasing number of nonzero entries.
pub fn search_odd_cobrackets(
    c: &StructureConstants,
    values: &[i64],
    limit: usize,
) -> Result<Vec<StructureConstants>> {
    let parities: Vec<Parity> = c.parities().iter().map(|p| p.flip()).collect();
    let base = pi_chart(c, "Pig", None)?;
    let lift_chart = lift(&base, LiftKind::AntiCotangent, LIE_SHIFT, None)?;
    let theta = q_from_sc(c, &base)?.multivector_lift_theta(&lift_chart)?;
    let slots = constant_slots(&parities);
    let mut columns: Vec<BTreeMap<Monomial, Rational>> = Vec::new();
    for &(i, j, k) in &slots {
        let unit = StructureConstants::new(parities.clone(), [((i, j, k), int(1))])?;
        let t = lie_poisson_tensor(&unit, &lift_chart)?;
        let r = canonical(&theta, &t)?;
        columns.push(r.terms().map(|(m, x)| (m.clone(), x.clone())).collect());
    }
    let rows: Vec<Monomial> = {
        let mut all: Vec<Monomial> = columns.iter().flat_map(|c| c.keys().cloned()).collect();
        all.sort();
        all.dedup();
        all
    };
    let mut m = Matrix::zeros(rows.len(), slots.len());
    for (col, map) in columns.iter().enumerate() {
        for (row, mono) in rows.iter().enumerate() {
            if let Some(x) = map.get(mono) {
                m[(row, col)] = x.clone();
            }
        }
    }
    let kernel = m.nullspace();
    let mut found: Vec<StructureConstants> = Vec::new();
    let mut failure = None;
    odometer(values, kernel.len(), |coef| {
        if coef.iter().all(|&x| x == 0) {
            return true;
        }
        let mut entries = Vec::new();
        for (s, &(i, j, k)) in slots.iter().enumerate() {
            let x: Rational = kernel.iter().zip(coef).map(|(v, &a)| &v[s] * int(a)).sum();
            if !x.is_zero() {
                entries.push(((i, j, k), x));
            }
        }
        let p = match StructureConstants::new(parities.clone(), entries) {
            Ok(p) => p,
            Err(e) => {
                failure = Some(e);
                return false;
            }
        };
        if p.is_lie() && !found.contains(&p) {
            found.push(p);
        }
        true
    });
    if let Some(e) = failure {
        return Err(e);
    }
    found.sort_by_key(|p| std::cmp::Reverse(p.entries().count()));
    let mut out = Vec::new();
    for p in found {
        if out.len() == limit {
            break;
        }
        if check_odd_bialgebra(c, &p)?.report.passed() {
            out.push(p);
        }
    }
    Ok(out)
}
