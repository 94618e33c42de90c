use super::*;
use crate::poly::Ring;

fn ring(names: &[&str]) -> Ring {
    Ring::new(names).unwrap()
}

#[test]
fn four_lines() {
    let b = Budget::unlimited();
    let r = ring(&["x", "y"]);
    let f = r.parse("x^3*y - x*y^3").unwrap();
    let rep = ft1(&f, &b).unwrap();
    assert_eq!(rep.dimension, 1);
    assert_eq!(rep.h0, Some(0));
    assert_eq!(r.format(&rep.representatives[0].equation), "x^2*y^2");
    let pc = ft1_plane_curve(&f, &b).unwrap();
    assert_eq!(pc.dimension, 1);
    assert_eq!(jacobian_degree_bound(&f, &[1, 1], &b).unwrap(), 1);
}

#[test]
fn rigid_curve() {
    let b = Budget::unlimited();
    let r = ring(&["x", "y"]);
    let f = r.parse("x^5 + y^4").unwrap();
    assert_eq!(ft1(&f, &b).unwrap().dimension, 0);
    assert_eq!(ft1_plane_curve(&f, &b).unwrap().dimension, 0);
}

#[test]
fn smooth_and_normal_crossing() {
    let b = Budget::unlimited();
    let r = ring(&["x", "y"]);
    for f in ["x", "x*y"] {
        let f = r.parse(f).unwrap();
        let rep = ft1(&f, &b).unwrap();
        assert_eq!(rep.dimension, 0);
        assert_eq!(rep.h0, Some(0));
    }
    let f = r.parse("x*y").unwrap();
    let l = lft1(&f, &b).unwrap();
    assert_eq!(l.dimension, 0);
    assert_eq!(l.h0, Some(0));
}

#[test]
fn explicit_cocycle_for_four_lines() {
    let b = Budget::unlimited();
    let r = ring(&["x", "y"]);
    let f = r.parse("x^3*y - x*y^3").unwrap();
    let p = |s: &str| r.parse(s).unwrap();
    let saito = SaitoBasis::new(
        vec![
            VectorField::new(vec![p("x"), p("y")]),
            VectorField::new(vec![p("0"), p("x^2*y - y^3")]),
        ],
        &f,
        &b,
    )
    .unwrap();
    let sc = structure_constants(&saito).unwrap();
    let lifts = vec![VectorField::zero(2), VectorField::new(vec![p("0"), p("x*y^2 - y^3")])];
    assert_eq!(deformation_equation(&lifts, &saito).unwrap(), p("x^2*y^2 - x*y^3"));
    assert!(cocycle_check(&lifts, &saito, &sc, &b).unwrap());
    let slice = build_slice(&saito, &sc, &[1, 1], DEFAULT_MAX_WEIGHT, &b).unwrap();
    assert!(is_coboundary(&lifts, &slice).unwrap().is_none());
    let zero = vec![VectorField::zero(2); 2];
    assert_eq!(deformation_equation(&zero, &saito).unwrap(), p("0"));
    assert_eq!(is_coboundary(&zero, &slice).unwrap(), Some(VectorField::zero(2)));
}

#[test]
fn normal_crossing_non_cocycle() {
    let b = Budget::unlimited();
    let r = ring(&["x", "y"]);
    let p = |s: &str| r.parse(s).unwrap();
    let f = p("x*y");
    let saito = SaitoBasis::new(
        vec![VectorField::new(vec![p("x"), p("0")]), VectorField::new(vec![p("0"), p("y")])],
        &f,
        &b,
    )
    .unwrap();
    let sc = structure_constants(&saito).unwrap();
    // ∂x on x∂x is the coboundary of ∂x; ∂y on x∂x fails along y = 0.
    let lifts = vec![VectorField::partial(2, 0), VectorField::zero(2)];
    assert!(cocycle_check(&lifts, &saito, &sc, &b).unwrap());
    assert_eq!(coboundary_lifts(&VectorField::partial(2, 0), &saito), lifts);
    let lifts = vec![VectorField::partial(2, 1), VectorField::zero(2)];
    assert!(!cocycle_check(&lifts, &saito, &sc, &b).unwrap());
}

#[test]
fn conic_times_line_lft1() {
    let b = Budget::unlimited();
    let r = ring(&["x", "y", "z"]);
    let f = r.parse("(y^2 + x*z)*z").unwrap();
    let l = lft1(&f, &b).unwrap();
    let g = ft1(&f, &b).unwrap();
    assert_eq!(l.h0, Some(0));
    assert_eq!(l.dimension, g.dimension);
}
