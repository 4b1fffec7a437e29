//! Flows that cross module boundaries.

use adelic::adeles::AdeleWindow;
use adelic::algebra::{field_of_order, CycloValue, FqElem};
use adelic::curve::{effective_divisor_series, rr_space_basis, zeta_from_counts, CurveModel, Divisor};
use adelic::harmonic::{parseval_window, rr_via_parseval, window_space, FnTable};
use adelic::hecke::{hecke_zeta, poisson_check, DiscretePart, Integrand};
use adelic::lattice::{enumerate_free_lattice, hasse_dot, hasse_edges};
use adelic::series::parse::parse_rat2;
use adelic::series::{expand_rational_2d, Flag, Place};
use adelic::surface::{subring_membership, SubringTag};
use adelic::Rational;

#[test]
fn riemann_roch_spaces_match_parseval_ranks() {
    let f = field_of_order(3).unwrap();
    let line = CurveModel::projective_line(f.clone());
    for s in ["2*(t) - 1*(inf)", "(t^2+1) + (inf)", "-1*(t+2) + 3*(inf)", "0", "-2*(inf)"] {
        let d = Divisor::parse(f.clone(), s).unwrap();
        let basis = rr_space_basis(&line, &d).unwrap();
        let rep = rr_via_parseval(&d, None).unwrap();
        assert_eq!(basis.len(), rep.l_d, "{s}");
        // every basis function embeds into A(D) within the window
        let w = parseval_window(&d, &[]).unwrap();
        let sub = w.subgroup_basis(&d).unwrap();
        for g in &basis {
            let v = w.embed_global(g).unwrap();
            assert!(adelic::linalg::in_span(w.field(), w.dim(), &sub, &v), "{s}: {}", g.display("t"));
        }
    }
}

#[test]
fn elliptic_curve_routes_agree() {
    let m = CurveModel::from_json(r#"{"q": 2, "model": "plane", "poly": "y^2*z + y*z^2 + x^3"}"#).unwrap();
    let euler = zeta_from_counts::<Rational>(&m, 8).unwrap();
    let divisors = effective_divisor_series::<Rational>(&m, 8).unwrap();
    assert_eq!(euler.coeffs, divisors.coeffs);
    assert_eq!(euler.fit, divisors.fit);
}

#[test]
fn zeta_integral_over_f4_matches_the_line() {
    let f = field_of_order(4).unwrap();
    let line = zeta_from_counts::<Rational>(&CurveModel::projective_line(f.clone()), 8).unwrap();
    let z = hecke_zeta(&f, &DiscretePart::<Rational>::MonicPolys, &Integrand::<Rational>::standard(), 8).unwrap();
    assert_eq!(z.series.coeffs, line.coeffs);
}

#[test]
fn poisson_on_a_riemann_roch_window() {
    let f = field_of_order(2).unwrap();
    let d = Divisor::parse(f.clone(), "(t) + (t+1) - 1*(inf)").unwrap();
    let w = parseval_window(&d, &[]).unwrap();
    let space = window_space(&w).unwrap();
    let chi = FnTable::<Rational>::indicator(space.clone(), &w.subgroup_basis(&d).unwrap());
    assert!(poisson_check(&w, &chi).unwrap().holds);
    let bumpy = FnTable::<Rational>::from_fn(space, |v| CycloValue::from_int(2, v.iter().filter(|c| !c.is_zero()).count() as i64));
    assert!(poisson_check(&w, &bumpy).unwrap().holds);
    let single = AdeleWindow::new(&[Place::Infinity], &Divisor::parse(f.clone(), "-3*(inf)").unwrap(), &Divisor::parse(f, "(inf)").unwrap()).unwrap();
    let s = window_space(&single).unwrap();
    let delta = FnTable::<Rational>::delta(s, &vec![FqElem::ZERO; single.dim()]);
    assert!(poisson_check(&single, &delta).unwrap().holds);
}

#[test]
fn expansions_land_in_the_expected_subrings() {
    let f = field_of_order(3).unwrap();
    let x = parse_rat2(&f, "t/(1-u)").unwrap();
    let s = expand_rational_2d(&f, &x, &Flag::t_axis(), 4, 6).unwrap();
    assert!(subring_membership(&s, SubringTag::Both).unwrap().member);
    assert!(subring_membership(&s, SubringTag::IdealPower(1)).unwrap().member);
    let y = parse_rat2(&f, "1/(u*t + t^2)").unwrap();
    let s = expand_rational_2d(&f, &y, &Flag::t_axis(), 4, 6).unwrap();
    assert!(!subring_membership(&s, SubringTag::Integers).unwrap().member);
    assert!(!subring_membership(&s, SubringTag::StandardB).unwrap().member);
}

#[test]
fn hasse_diagram_is_connected_and_graded() {
    let all = enumerate_free_lattice();
    let edges = hasse_edges(&all);
    let dot = hasse_dot(&all);
    assert_eq!(dot.matches("->").count(), edges.len());
    // every element except the bottom is covering something
    let covered: std::collections::BTreeSet<usize> = edges.iter().map(|e| e.1).collect();
    assert_eq!(covered.len(), 17);
}
