use super::*;
use crate::error::Error;
use crate::structures::check_bialgebra;
use crate::superpoly::{int, Grade, Parity, SuperPoly};

fn even(dim: usize, entries: &[((usize, usize, usize), i64)]) -> StructureConstants {
    StructureConstants::new(
        vec![Parity::Even; dim],
        entries.iter().map(|&(k, v)| (k, int(v))),
    )
    .unwrap()
}

fn affine() -> StructureConstants {
    even(2, &[((0, 1, 1), 1)])
}

fn heisenberg() -> StructureConstants {
    even(3, &[((0, 1, 2), 1)])
}

fn assert_drinfeld(c: &StructureConstants, b: &StructureConstants) {
    let d = drinfeld_double(c, b).unwrap();
    assert_eq!(d.bracket, even_double_formula(c, b).unwrap());
    assert_eq!(d.cobracket, even_cobracket_formula(c, b).unwrap());
    assert!(d.invariance.is_empty());
    assert!(d.bialgebra.passed());
    assert!(d.sub_bialgebras_match(c, b));
    assert!(d.gybe.passed());
}

#[test]
fn drinfeld_affine_line() {
    let c = affine();
    assert_drinfeld(&c, &c);
    let d = drinfeld_double(&c, &c).unwrap();
    assert_eq!(
        d.bracket.render_table(),
        vec![
            "[e1,e2] = e2",
            "[e1,e2*] = -e2*",
            "[e2,e1*] = e2",
            "[e2,e2*] = -e1 + e1*",
            "[e1*,e2*] = e2*"
        ]
    );
    assert_eq!(
        d.render_cobracket(),
        vec![
            "delta(e1) = 0",
            "delta(e2) = 2*e1^e2",
            "delta(e1*) = 0",
            "delta(e2*) = -2*e1*^e2*"
        ]
    );
    let cybe = &d.cybe.residue()[0].poly;
    assert!(!cybe.is_zero());
    assert_eq!(
        cybe.degree_parts().keys().copied().collect::<Vec<_>>(),
        vec![3]
    );
}

#[test]
fn drinfeld_searched_bialgebras() {
    for c in [affine(), heisenberg(), sl(2).unwrap().constants] {
        let found = search_even_cobrackets(&c, &[-1, 0, 1], 2).unwrap();
        assert_eq!(found.len(), 2);
        for b in &found {
            assert!(b.is_lie());
            assert!(crate::structures::cocycle_residue(&c, b).is_empty());
            assert_drinfeld(&c, b);
        }
    }
}

#[test]
fn drinfeld_zero_cobracket_is_coadjoint_semidirect() {
    let c = sl(2).unwrap().constants;
    let b = StructureConstants::abelian(vec![Parity::Even; 3]);
    let d = drinfeld_double(&c, &b).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            assert!(d
                .bracket
                .bracket_basis(3 + i, 3 + j)
                .iter()
                .all(|x| x == &int(0)));
            let v = d.bracket.bracket_basis(i, 3 + j);
            for k in 0..3 {
                assert_eq!(v[k], int(0));
                assert_eq!(v[3 + k], -c.get(i, k, j));
            }
        }
    }
    assert_drinfeld(&c, &b);
}

#[test]
fn non_bialgebra_is_rejected() {
    let c = heisenberg();
    let b = even(3, &[((0, 1, 2), 1)]);
    let chk = check_bialgebra(&c, &b).unwrap();
    assert!(!chk.report.passed());
    assert!(!chk.cocycle.as_ref().unwrap().is_empty());
    assert!(chk.report.component("{Q,S}").is_some_and(|p| !p.is_zero()));
    assert!(matches!(
        drinfeld_double(&c, &b),
        Err(Error::CheckFailed(_))
    ));
}

#[test]
fn cocycle_identity_tracks_poisson_bracket() {
    let c = heisenberg();
    let mut checked = 0;
    for entries in [
        vec![((0, 1, 0), 1)],
        vec![((0, 2, 2), 1)],
        vec![((1, 2, 1), 1), ((0, 2, 0), 1)],
        vec![((0, 1, 2), 1)],
    ] {
        let b = even(3, &entries);
        if !b.is_lie() {
            continue;
        }
        let chk = check_bialgebra(&c, &b).unwrap();
        let qs_zero = chk.report.component("{Q,S}").is_none();
        assert_eq!(chk.cocycle.unwrap().is_empty(), qs_zero);
        checked += 1;
    }
    assert!(checked >= 3);
}

fn susy_dual() -> StructureConstants {
    StructureConstants::new(vec![Parity::Odd, Parity::Even], [((0, 0, 1), int(2))]).unwrap()
}

fn assert_odd(c: &StructureConstants, p: &StructureConstants) -> OddDouble {
    let d = odd_double(c, p).unwrap();
    assert_eq!(d.bracket, OddDouble::bracket_formula(c, p).unwrap());
    assert_eq!(d.invariant.p_d, d.p_d_formula().unwrap());
    assert_eq!(d.cobracket, d.coboundary);
    assert!(d.invariance.is_empty());
    assert!(d.bialgebra.passed());
    assert!(d.invariant.jacobi.passed());
    assert!(d.invariant.invariance.passed());
    d
}

#[test]
fn odd_double_of_supersymmetry_algebra() {
    let s = susy1().unwrap();
    let d = assert_odd(&s.constants, &susy_dual());
    assert_eq!(d.input.tensor.render(), "-xi2*x1^2");
    assert_eq!(
        render_sym_cobracket(d.bracket.names(), &d.cobracket),
        vec![
            "delta(e) = 0",
            "delta(eps) = 2*e^2",
            "delta(e*) = 2*eps*^2",
            "delta(eps*) = 0"
        ]
    );
    let own = odd_dual_cobracket(&s.constants, s.pairing.as_ref().unwrap()).unwrap();
    assert_eq!(
        render_sym_cobracket(s.constants.names(), &own),
        vec!["delta(e) = 0", "delta(eps) = e^2"]
    );
}

#[test]
fn odd_double_of_searched_gl11_bialgebra() {
    let g = gl_super(1, 1).unwrap().constants;
    let found = search_odd_cobrackets(&g, &[-1, 0, 1], 1).unwrap();
    let p = &found[0];
    assert!(p.entries().count() >= 8);
    let d = assert_odd(&g, p);
    assert_eq!(d.invariant.p_d.weight_of(), Grade::Homogeneous(-1));
}

#[test]
fn odd_double_with_zero_tensor() {
    let g = gl_super(1, 1).unwrap().constants;
    let p = StructureConstants::abelian(g.parities().iter().map(|x| x.flip()).collect());
    let d = assert_odd(&g, &p);
    for i in 0..4 {
        assert!(d.cobracket[i].is_zero());
        for j in 0..4 {
            assert!(d
                .bracket
                .bracket_basis(4 + i, 4 + j)
                .iter()
                .all(|x| x == &int(0)));
        }
    }
}

#[test]
fn relative_double_of_q() {
    for n in [2, 3] {
        let alg = q(n).unwrap();
        let split = q_relative_input(n).unwrap();
        let d = relative_double(&split.input).unwrap();
        assert!(split.bracket_mismatches(&d, &alg.constants).is_empty());
        assert!(d.jacobi.is_empty());
        assert!(d.invariance.is_empty());
        assert!(!d.signs.is_empty());
        assert!(d
            .signs
            .iter()
            .all(|s| s.ratio == int(1) || s.ratio == int(-1)));
        let delta = split.cobracket_in_q(&d, &alg.constants).unwrap();
        assert_eq!(delta, q_cobracket_formula(n).unwrap());
        for k in 0..n {
            assert!(delta[k * n + k].is_zero());
            assert!(delta[n * n + k * n + k].is_zero());
        }
    }
}

#[test]
fn q3_cobracket_of_e13() {
    let alg = q(3).unwrap();
    let split = q_relative_input(3).unwrap();
    let d = relative_double(&split.input).unwrap();
    let delta = split.cobracket_in_q(&d, &alg.constants).unwrap();
    let sym = delta[2].chart().clone();
    let v = |name: &str| SuperPoly::var_named(&sym, name).unwrap();
    let want = &(&(&(&v("eps12") * &v("e23")) - &(&v("e12") * &v("eps23"))).scale_int(2)
        + &(&(&v("eps11") - &v("eps33")) * &v("e13")))
        - &(&(&v("e11") - &v("e33")) * &v("eps13"));
    assert_eq!(delta[2], want);
}

#[test]
fn relative_double_without_cartan_is_the_odd_double() {
    let s = susy1().unwrap();
    let p = susy_dual();
    let input = RelativeInput {
        a: s.constants.clone(),
        h: StructureConstants::abelian(vec![]),
        action: Default::default(),
        b: p.clone(),
        h_form: InnerProduct::new(linalg::Matrix::zeros(0, 0), Parity::Odd, vec![]).unwrap(),
    };
    let rel = relative_double(&input).unwrap();
    let odd = odd_double(&s.constants, &p).unwrap();
    assert!(rel.constants.entries().eq(odd.bracket.entries()));
}

#[test]
fn relative_double_rejects_non_invariant_cartan_form() {
    let mut split = q_relative_input(2).unwrap();
    let h = split.input.h.clone();
    let names = h.names().to_vec();
    let at = |n: &str| names.iter().position(|x| x == n).unwrap();
    let mut gram = split.input.h_form.gram().clone();
    gram[(at("e11"), at("eps22"))] = int(1);
    gram[(at("eps22"), at("e11"))] = int(-1);
    split.input.h_form = InnerProduct::new(gram, Parity::Odd, h.parities().to_vec()).unwrap();
    assert!(matches!(
        relative_double(&split.input),
        Err(Error::CheckFailed(_))
    ));
}
