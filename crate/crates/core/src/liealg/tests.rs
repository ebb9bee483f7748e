use proptest::prelude::*;

use super::*;
use crate::brackets::derived_bracket;
use crate::fixtures::names;
use crate::geometry::{lift, LiftKind, VectorField};
use crate::structures::{check_homological, check_tensor};
use crate::superpoly::{int, Parity, SuperPoly};

fn sl2_chevalley() -> StructureConstants {
    // h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h
    StructureConstants::new(
        vec![Parity::Even; 3],
        [
            ((0, 1, 1), int(2)),
            ((0, 2, 2), int(-2)),
            ((1, 2, 0), int(1)),
        ],
    )
    .unwrap()
    .with_names(vec!["h".into(), "e".into(), "f".into()])
    .unwrap()
}

#[test]
fn constants_are_validated() {
    let even = vec![Parity::Even; 2];
    assert!(StructureConstants::new(even.clone(), [((0, 0, 1), int(1))]).is_err());
    assert!(
        StructureConstants::new(even.clone(), [((0, 1, 1), int(1)), ((1, 0, 1), int(1))]).is_err()
    );
    assert!(
        StructureConstants::new(vec![Parity::Even, Parity::Odd], [((0, 1, 0), int(1))]).is_err()
    );
    let ok = StructureConstants::new(even, [((0, 1, 1), int(1))]).unwrap();
    assert_eq!(ok.get(1, 0, 1), int(-1));
    assert!(ok.is_lie());
}

#[test]
fn json_round_trip() {
    let c = q(2).unwrap().constants;
    let text = c.to_json().to_string();
    assert_eq!(StructureConstants::from_json(&text).unwrap(), c);
    let bare = r#"{"dim":2,"parities":[0,0],"entries":[[0,1,1,1,2]]}"#;
    let b = StructureConstants::from_json(bare).unwrap();
    assert_eq!(b.get(1, 0, 1), crate::superpoly::rat(-1, 2));
    assert!(StructureConstants::from_json(r#"{"dim":1,"parities":[2],"entries":[]}"#).is_err());
}

#[test]
fn gl2_field_matches_matrix_formula() {
    let g = gl(2).unwrap().constants;
    let chart = pi_chart(&g, "Pi gl2", names(&["xi11", "xi12", "xi21", "xi22"])).unwrap();
    let q = q_from_sc(&g, &chart).unwrap();
    let x = |i: usize, j: usize| SuperPoly::var(&chart, 2 * i + j);
    let mut coeffs = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let mut c = SuperPoly::zero(&chart);
            for k in 0..2 {
                c = &c - &(&x(i, k) * &x(k, j));
            }
            coeffs.push(c);
        }
    }
    let want = VectorField::new(&chart, coeffs).unwrap();
    assert_eq!(q, want);
    assert!(check_homological(&q).unwrap().passed());
    // the diagonal subalgebra is a linear submanifold the field is tangent to
    let off = [1usize, 2];
    for &o in &off {
        let c = q
            .coeff(o)
            .filter(|m| m.factors().iter().all(|(v, _)| !off.contains(v)));
        assert!(
            c.is_zero(),
            "field leaves the diagonal along {}",
            chart.var(o).name
        );
    }
}

#[test]
fn susy_field() {
    let s = susy1().unwrap().constants;
    let chart = pi_chart(&s, "Pi susy", names(&["xi", "x"])).unwrap();
    let q = q_from_sc(&s, &chart).unwrap();
    assert_eq!(q.render(), "(-x^2) d/dxi");
    assert!(check_homological(&q).unwrap().passed());
}

#[test]
fn abelian_algebras() {
    let a = gl(1).unwrap().constants;
    assert!(a.is_abelian());
    let chart = pi_chart(&a, "Pi gl1", None).unwrap();
    assert!(q_from_sc(&a, &chart).unwrap().is_zero());
    let z = VectorField::zero(&chart);
    assert!(sc_from_q(&z).unwrap().is_abelian());
    let (p, s) = lie_tensors(&StructureConstants::abelian(vec![
        Parity::Even,
        Parity::Odd,
    ]))
    .unwrap();
    assert!(p.is_zero() && s.is_zero());
}

#[test]
fn round_trips_and_second_route() {
    for alg in [gl(2), sl(2), q(2), susy1(), sl(3)] {
        let c = alg.unwrap().constants;
        let chart = pi_chart(&c, "Pi g", None).unwrap();
        let field = q_from_sc(&c, &chart).unwrap();
        let back = sc_from_q(&field).unwrap();
        for i in 0..c.dim() {
            for j in 0..c.dim() {
                for k in 0..c.dim() {
                    assert_eq!(back.get(i, j, k), c.get(i, j, k));
                }
            }
        }
        // c_ij^k = (-1)^j Q_ij^k with Q_ij^k = (-1)^{p_i p_j} ∂_j ∂_i Q^k
        let mut count = 0;
        for ((i, j, k), v) in quadratic_coefficients(&field) {
            assert_eq!(v * int(crate::superpoly::sign(c.parity(j))), c.get(i, j, k));
            count += 1;
        }
        assert_eq!(count, c.entries().count());
    }
}

#[test]
fn non_quadratic_field_is_rejected() {
    let c = susy1().unwrap().constants;
    let chart = pi_chart(&c, "Pi susy", None).unwrap();
    let f = VectorField::partial(&chart, 0);
    assert!(matches!(sc_from_q(&f), Err(crate::Error::NotQuadratic(_))));
}

#[test]
fn jacobi_failure_shows_in_field() {
    // [e1,e2] = e3, [e1,e3] = e1: Jacobi fails
    let c = StructureConstants::new(
        vec![Parity::Even; 3],
        [((0, 1, 2), int(1)), ((0, 2, 0), int(1))],
    )
    .unwrap();
    assert!(!c.is_lie());
    let chart = pi_chart(&c, "Pi", None).unwrap();
    assert!(!check_homological(&q_from_sc(&c, &chart).unwrap())
        .unwrap()
        .passed());
}

#[test]
fn sl2_lie_tensors_reproduce_brackets() {
    let c = sl2_chevalley();
    let (p, s) = lie_tensors(&c).unwrap();
    assert!(check_tensor(&p).unwrap().passed());
    assert!(check_tensor(&s).unwrap().passed());
    for t in [&p, &s] {
        let got = coordinate_bracket_constants(t).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(got.get(i, j, k), c.get(i, j, k));
                }
            }
        }
    }
    let x = |i| SuperPoly::var(p.chart(), i);
    assert_eq!(derived_bracket(&p, &x(1), &x(2)).unwrap(), x(0));
}

#[test]
fn susy_dual_poisson_tensor() {
    // Πg* of the supersymmetry algebra: [eps^e, eps^e] = 2 eps^eps
    let dual =
        StructureConstants::new(vec![Parity::Odd, Parity::Even], [((0, 0, 1), int(2))]).unwrap();
    let base = plain_chart(&dual, "Pi susy", names(&["xi", "x"])).unwrap();
    let l = lift(
        &base,
        LiftKind::AntiCotangent,
        LIE_SHIFT,
        names(&["ast_xi", "ast_x"]),
    )
    .unwrap();
    let p = lie_poisson_tensor(&dual, &l).unwrap();
    assert_eq!(p.render(), "-x*ast_xi^2");
    assert!(check_tensor(&p).unwrap().passed());
}

#[test]
fn q_n_generator() {
    let q1 = q(1).unwrap();
    assert_eq!(
        q1.constants,
        susy1()
            .unwrap()
            .constants
            .with_names(vec!["e11".into(), "eps11".into()])
            .unwrap()
    );
    for n in [2usize, 3] {
        let alg = q(n).unwrap();
        let c = &alg.constants;
        assert!(c.is_lie());
        let idx = |odd: bool, i: usize, j: usize| (odd as usize) * n * n + i * n + j;
        let pairing = alg.pairing.as_ref().unwrap();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(
                    pairing.pair(&c.unit(idx(false, i, j)), &c.unit(idx(true, j, i))),
                    int(1)
                );
                assert_eq!(
                    pairing.pair(&c.unit(idx(true, i, j)), &c.unit(idx(false, j, i))),
                    int(-1)
                );
            }
        }
        assert!(pairing.invariance_residue(c).is_empty());
        let d = |a: usize, b: usize| if a == b { 1 } else { 0 };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut want = vec![int(0); 2 * n * n];
                        want[idx(false, i, l)] += int(d(j, k));
                        want[idx(false, k, j)] += int(d(l, i));
                        assert_eq!(c.bracket_basis(idx(true, i, j), idx(true, k, l)), want);
                        let mut want = vec![int(0); 2 * n * n];
                        want[idx(true, i, l)] += int(d(j, k));
                        want[idx(true, k, j)] -= int(d(l, i));
                        assert_eq!(c.bracket_basis(idx(false, i, j), idx(true, k, l)), want);
                    }
                }
            }
        }
        // otr x = ½ str(I x) on products of basis matrices
        let ms = alg.matrices.as_ref().unwrap();
        let unit = SuperMatrix::odd_unit(n);
        for a in ms {
            for b in ms {
                let x = a.mul(b);
                assert_eq!(x.otr(), unit.mul(&x).str() * crate::superpoly::rat(1, 2));
            }
        }
        let cartan = alg.cartan.as_ref().unwrap();
        assert_eq!(
            cartan.iter().filter(|&&t| t == CartanPart::Cartan).count(),
            2 * n
        );
    }
}

#[test]
fn builtin_names() {
    assert_eq!(builtin("gl(3)").unwrap().constants.dim(), 9);
    assert_eq!(builtin("sl(2)").unwrap().constants.dim(), 3);
    assert_eq!(builtin(" q(2) ").unwrap().constants.dim(), 8);
    assert!(builtin("so(3)").is_err());
    assert!(builtin("gl(x)").is_err());
    assert!(builtin("q(0)").is_err());
}

#[test]
fn trace_forms_are_invariant() {
    for alg in [gl(2).unwrap(), sl(3).unwrap()] {
        let p = alg.pairing.unwrap();
        assert!(p.invariance_residue(&alg.constants).is_empty());
    }
}

#[test]
fn restriction_to_subalgebra() {
    let c = sl2_chevalley();
    let b = c.restrict(&[0, 1]).unwrap();
    assert_eq!(b.get(0, 1, 1), int(2));
    assert!(c.restrict(&[1, 2]).is_err());
}

#[test]
fn table_rendering() {
    let c = sl2_chevalley();
    assert_eq!(
        c.render_table(),
        vec!["[h,e] = 2*e", "[h,f] = -2*f", "[e,f] = h"]
    );
}

fn random_super_lie(seed: u64) -> StructureConstants {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    // random Lie superalgebras as spans of random homogeneous matrices
    // would rarely close; use a random linear change of basis of q(2)
    let base = q(2).unwrap().constants;
    let n = base.dim();
    let _ = rng.gen::<u8>();
    let mut entries = Vec::new();
    let scale: Vec<i64> = (0..n).map(|_| rng.gen_range(1..4)).collect();
    for (&(i, j, k), v) in base.entries() {
        // rescaling e_i -> s_i e_i rescales c_ij^k by s_i s_j / s_k
        entries.push((
            (i, j, k),
            v * crate::superpoly::rat(scale[i] * scale[j], scale[k]),
        ));
    }
    StructureConstants::new(base.parities().to_vec(), entries).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn round_trip_on_rescaled_q2(seed in any::<u64>()) {
        let c = random_super_lie(seed);
        prop_assert!(c.is_lie());
        let chart = pi_chart(&c, "Pi", None).unwrap();
        let f = q_from_sc(&c, &chart).unwrap();
        prop_assert!(check_homological(&f).unwrap().passed());
        let back = sc_from_q(&f).unwrap();
        prop_assert_eq!(back.entries().collect::<Vec<_>>(), c.entries().collect::<Vec<_>>());
    }
}
