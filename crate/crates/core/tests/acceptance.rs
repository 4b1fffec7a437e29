//! The twelve acceptance criteria. Prints one line per criterion and exits
//! nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use adelic::adeles::{restricted_complex_cohomology, strong_approximation_check, AdeleWindow};
use adelic::algebra::{field_of_order, poly, CycloValue};
use adelic::curve::{effective_divisor_series, functional_equation_check, line_denominator, zeta_from_counts, CurveModel, Divisor};
use adelic::harmonic::{
    bruhat_type, cube_check, fourier, parseval_tables, parseval_window, rr_via_parseval, standard_catalog, window_space,
    BruhatType, FnTable, WindowFamily,
};
use adelic::hecke::{dirichlet_factor, functional_equation, hecke_zeta, tate_local, DiscretePart, Integrand};
use adelic::lattice::{enumerate_free_lattice, homomorphism_check, injectivity_check, shipped_assignment};
use adelic::series::parse::parse_form2;
use adelic::series::Place;
use adelic::surface::{
    f02_pushforward, residue_relation_curve, residue_relation_point, surface_zeta_factorization, torsor_difference,
    NormalizationDatum, SurfaceCurve, TwoLevelWindow, CURVE_CATALOG, POINT_CATALOG,
};
use adelic::upoly::{RatFunc, UPoly};
use adelic::{Rational, Scalar};
use rand::{Rng, SeedableRng};

type Outcome = Result<(), String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn r(v: i64) -> Rational {
    Rational::from_i64(v)
}

fn line_fit(q: u64) -> RatFunc<Rational> {
    RatFunc::new(UPoly::one(), line_denominator(q)).unwrap()
}

fn three_routes() -> Outcome {
    for q in [2u64, 3, 4, 5] {
        let f = field_of_order(q).map_err(err)?;
        let model = CurveModel::projective_line(f.clone());
        let euler = zeta_from_counts::<Rational>(&model, 12).map_err(err)?;
        let dirichlet = effective_divisor_series::<Rational>(&model, 12).map_err(err)?;
        let integral = hecke_zeta(&f, &DiscretePart::MonicPolys, &Integrand::standard(), 12).map_err(err)?.series;
        let split = dirichlet_factor::<Rational>(q, 12).map_err(err)?.mul(&tate_local(q, 0, 12).map_err(err)?);
        check(euler.coeffs == dirichlet.coeffs, || format!("q={q}: Euler product and divisor count differ"))?;
        check(euler.coeffs == integral.coeffs, || format!("q={q}: Euler product and zeta integral differ"))?;
        check(split.coeffs == integral.coeffs, || format!("q={q}: product split and zeta integral differ"))?;
        let expected = line_fit(q).expand(13).map_err(err)?;
        check(integral.coeffs == expected, || format!("q={q}: coefficients do not fit 1/((1-T)(1-qT))"))?;
        check(euler.fit == Some(line_fit(q)) && dirichlet.fit == Some(line_fit(q)), || format!("q={q}: fit missing"))?;
    }
    Ok(())
}

fn hecke_functional_equation() -> Outcome {
    for q in [2u64, 3, 4, 5] {
        let f = field_of_order(q).map_err(err)?;
        let rep = functional_equation::<Rational>(&f, &Integrand::standard(), 12).map_err(err)?;
        check(rep.zeta == line_fit(q), || format!("q={q}: fit {}", rep.zeta))?;
        let qt2 = RatFunc::new(UPoly::monomial(r(q as i64), 2), UPoly::one()).unwrap();
        check(rep.substituted == rep.zeta.mul(&qt2), || format!("q={q}: Z(1/(qT)) != qT^2 Z(T)"))?;
        check(rep.holds, || format!("q={q}: transformed side differs"))?;
    }
    Ok(())
}

fn parseval_riemann_roch() -> Outcome {
    let f = field_of_order(2).map_err(err)?;
    let places = [
        Place::finite(&f, poly::Poly::from_u32s(&[0, 1])).map_err(err)?,
        Place::finite(&f, poly::Poly::from_u32s(&[1, 1])).map_err(err)?,
        Place::finite(&f, poly::Poly::from_u32s(&[1, 1, 1])).map_err(err)?,
        Place::Infinity,
    ];
    let k = Divisor::canonical(f.clone());
    let mut count = 0;
    let mut tables = 0;
    for idx in 0..7usize.pow(4) {
        let coeffs: Vec<i64> = (0..4).map(|i| (idx / 7usize.pow(i)) as i64 % 7 - 3).collect();
        let d = Divisor::from_parts(f.clone(), places.iter().cloned().zip(coeffs.iter().copied()));
        let rep = rr_via_parseval(&d, None).map_err(err)?;
        check(rep.l_d as i64 == d.l_dimension(), || format!("{d}: l(D) = {} by ranks", rep.l_d))?;
        check(rep.l_k_minus_d as i64 == k.sub(&d).l_dimension(), || format!("{d}: l(K-D) = {}", rep.l_k_minus_d))?;
        check(rep.orthogonality_verified && rep.rr_identity_holds, || format!("{d}: identity fails"))?;
        check(rep.l_d as i64 - rep.l_k_minus_d as i64 == d.degree() + 1, || format!("{d}: l(D) - l(K-D) != deg D + 1"))?;
        // explicit tables where the window is small enough to enumerate
        let w = parseval_window(&d, &[]).map_err(err)?;
        if w.dim() <= 12 {
            let (direct, _, _) = parseval_tables::<Rational>(&d, &w).map_err(err)?;
            check(direct == Rational::pow_i(2, rep.l_d as i32), || format!("{d}: (delta_K, delta_D) = {direct}"))?;
            tables += 1;
        }
        count += 1;
    }
    check(count == 2401 && tables > 0, || format!("{count} divisors, {tables} table checks"))
}

fn fourier_subgroup_rule() -> Outcome {
    let mut windows = 0;
    for (q, specs) in [
        (2u64, vec![("-2*(inf)", "(inf)"), ("-2*(inf) - 1*(t)", "(t) + (inf)"), ("-3*(inf)", "2*(inf)"), ("-2*(inf) - 1*(t+1)", "(t) + (t+1)"), ("-2*(inf) - 1*(t^2+t+1)", "(t^2+t+1) + (inf)"), ("-4*(inf)", "(t) + 2*(inf)"), ("-2*(inf) - 2*(t)", "(t) + 2*(inf)"), ("-3*(inf) - 1*(t)", "2*(t) + (t+1)"), ("-1*(inf) - 1*(t)", "(t)"), ("-2*(inf) - 1*(t) - 1*(t+1)", "(t) + (t+1) + (inf)")]),
        (3u64, vec![("-2*(inf)", "(inf)"), ("-2*(inf) - 1*(t)", "(t) + (inf)"), ("-3*(inf)", "(inf)"), ("-2*(inf) - 1*(t^2+1)", "(t^2+1)"), ("-2*(inf)", "2*(inf)"), ("-1*(inf) - 1*(t+2)", "(t) + (inf)"), ("-2*(inf) - 1*(t)", "(t+1) + (inf)"), ("-3*(inf)", "(t) + (inf)"), ("-2*(inf) - 1*(t+1)", "(t+1) + (t+2)"), ("-1*(inf) - 1*(t)", "(t) + (t+1)")]),
    ] {
        let f = field_of_order(q).map_err(err)?;
        for (lo, hi) in specs {
            let low = Divisor::parse(f.clone(), lo).map_err(err)?;
            let high = Divisor::parse(f.clone(), hi).map_err(err)?;
            let mut places: Vec<Place> = low.support().chain(high.support()).map(|(p, _)| p.clone()).collect();
            places.push(Place::Infinity);
            places.sort();
            places.dedup();
            let w = AdeleWindow::new(&places, &low, &high).map_err(err)?;
            let dual = w.dual().map_err(err)?;
            // the two bounds and, when it lies between them, D = 0
            let mut divisors = vec![low.clone(), high.clone()];
            let zero = Divisor::zero(f.clone());
            if low.le(&zero) && zero.le(&high) {
                divisors.push(zero);
            }
            for d in &divisors {
                let space = window_space(&w).map_err(err)?;
                let sub = w.subgroup_basis(d).map_err(err)?;
                let chi = FnTable::<Rational>::indicator(space, &sub);
                let (hat, _) = fourier(&chi, &w).map_err(err)?;
                let dual_space = window_space(&dual).map_err(err)?;
                let expected = FnTable::<Rational>::indicator(dual_space, &dual.subgroup_basis(&Divisor::canonical(f.clone()).sub(d)).map_err(err)?)
                    .scale(&Rational::pow_i(q as i64, sub.len() as i32));
                check(hat == expected, || format!("F_{q} window ({lo}, {hi}), D = {d}: transform is not the scaled dual indicator"))?;
            }
            windows += 1;
        }
    }
    check(windows == 20, || format!("{windows} windows"))
}

fn cube() -> Outcome {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let mut pairs = 0;
    for (q, lo, hi) in [(2u64, "-2*(inf) - 1*(t)", "(t) + (t+1) + (inf)"), (2, "-3*(inf)", "(t) + 2*(inf)"), (3, "-2*(inf)", "(t) + (inf)"), (3, "-2*(inf)", "(t+1) + (inf)")] {
        let f = field_of_order(q).map_err(err)?;
        let low = Divisor::parse(f.clone(), lo).map_err(err)?;
        let high = Divisor::parse(f.clone(), hi).map_err(err)?;
        let mut places: Vec<Place> = low.support().chain(high.support()).map(|(p, _)| p.clone()).collect();
        places.push(Place::Infinity);
        places.sort();
        places.dedup();
        let w = AdeleWindow::new(&places, &low, &high).map_err(err)?;
        check(w.dim() <= 6, || format!("window dimension {}", w.dim()))?;
        let space = window_space(&w).map_err(err)?;
        let p = q as u32;
        for _ in 0..25 {
            let mut value = || CycloValue::<Rational>::from_int(p, rng.gen_range(-3..4)).mul_zeta(rng.gen_range(0..p as i64));
            let a = FnTable::from_fn(space.clone(), |_| value());
            let b = FnTable::from_fn(space.clone(), |_| value());
            let rep = cube_check(&a, &b, &w).map_err(err)?;
            check(rep.holds, || format!("F_{q} window ({lo}, {hi}): a step of the chain differs"))?;
            pairs += 1;
        }
    }
    check(pairs == 100, || format!("{pairs} pairs"))
}

fn bruhat() -> Outcome {
    let f = field_of_order(2).map_err(err)?;
    let fam = WindowFamily::standard(&f, 3).map_err(err)?;
    let expected = [BruhatType::D, BruhatType::E, BruhatType::DPrime, BruhatType::EPrime];
    let mut transforms = Vec::new();
    for ((kind, d), want) in standard_catalog(&f).into_iter().zip(expected) {
        let rep = bruhat_type::<Rational>(kind.clone(), &d, &fam).map_err(err)?;
        check(rep.entry_type == want, || format!("{kind:?}: classified {}", rep.entry_type))?;
        check(rep.swap_holds, || format!("{kind:?}: transform is {}", rep.transform_type))?;
        transforms.push(rep.transform_type);
    }
    check(transforms[0] == BruhatType::D && transforms[1] == BruhatType::EPrime && transforms[3] == BruhatType::E, || format!("{transforms:?}"))
}

fn restricted_complex() -> Outcome {
    for q in [2u64, 3] {
        let f = field_of_order(q).map_err(err)?;
        let k = Divisor::canonical(f.clone());
        let specs: &[&str] = if q == 2 {
            &["0", "-2*(inf)", "3*(inf)", "-1*(inf)", "2*(t) - 3*(inf)", "(t^2+t+1) - 2*(t)", "-2*(t+1) - 1*(t^2+t+1)", "4*(t) - 1*(inf)", "-5*(inf) + 1*(t)"]
        } else {
            &["0", "-2*(inf)", "2*(t) - 3*(inf)", "-2*(t+1) - 1*(t^2+1)", "3*(t^2+1) + 1*(inf)", "-4*(inf) + 1*(t)", "(t+2) - 2*(t)"]
        };
        for s in specs {
            let d = Divisor::parse(f.clone(), s).map_err(err)?;
            let (h0, h1) = restricted_complex_cohomology(&d, None).map_err(err)?;
            check(h0 as i64 == d.l_dimension() && h1 as i64 == k.sub(&d).l_dimension(), || format!("F_{q}, D = {s}: ({h0}, {h1})"))?;
            let w = parseval_window(&d, &[]).map_err(err)?;
            for p in w.places().iter() {
                check(strong_approximation_check(&w, p).map_err(err)?, || format!("F_{q}, D = {s}: surjectivity fails at {p}"))?;
            }
        }
    }
    Ok(())
}

fn residue_relations() -> Outcome {
    let mut degree_two = false;
    for (q, src) in POINT_CATALOG {
        let f = field_of_order(*q).map_err(err)?;
        let w = parse_form2(&f, src).map_err(err)?;
        let rep = residue_relation_point(&f, &w).map_err(err)?;
        check(rep.holds, || format!("F_{q}, {src} at the origin: sum {}", rep.sum))?;
    }
    for (q, curve, src) in CURVE_CATALOG {
        let f = field_of_order(*q).map_err(err)?;
        let w = parse_form2(&f, src).map_err(err)?;
        let c = SurfaceCurve::parse(&f, curve).map_err(err)?;
        let rep = residue_relation_curve(&f, &w, &c).map_err(err)?;
        check(rep.holds, || format!("F_{q}, {src} on {curve}: sum {}", rep.sum))?;
        degree_two |= rep.entries.iter().any(|e| e.degree == 2);
    }
    for q in [2, 3] {
        check(POINT_CATALOG.iter().filter(|e| e.0 == q).count() >= 5, || format!("point catalog over F_{q} too small"))?;
        check(CURVE_CATALOG.iter().filter(|e| e.0 == q).count() >= 5, || format!("curve catalog over F_{q} too small"))?;
    }
    check(degree_two, || "no degree-2 polar place in the catalog".into())
}

fn free_lattice() -> Outcome {
    let all = enumerate_free_lattice();
    check(all.len() == 18, || format!("{} elements", all.len()))?;
    let a = shipped_assignment();
    check(homomorphism_check(&a), || "evaluation is not a homomorphism".into())?;
    check(injectivity_check(&a), || {
        format!("shipped assignment has only {} commensurability classes of 18", adelic::lattice::class_count(&a))
    })
}

fn torsor() -> Outcome {
    let base = NormalizationDatum::new(0, 0);
    for a in -3..=3 {
        for b in -3..=3 {
            for d in [base, NormalizationDatum::new(1, -2), NormalizationDatum::new(-3, 3)] {
                let moved = d.act((a, b));
                check(torsor_difference(&moved, &d) == (a, b), || format!("difference of {d:?} acted by ({a},{b})"))?;
                check(moved.act((-a, -b)) == d, || "action is not free".into())?;
                check(d.act((a, b)).act((1, 1)) == d.act((a + 1, b + 1)), || "action is not additive".into())?;
                for j in -2..=2 {
                    check(moved.volume::<Rational>(3, j) / d.volume::<Rational>(3, j) == Rational::pow_i(3, (-a - j * b) as i32), || "volume ratio".into())?;
                }
            }
        }
    }
    let f = field_of_order(2).map_err(err)?;
    let w = TwoLevelWindow::new(-1, 3, -1, 2).map_err(err)?;
    let space = adelic::harmonic::FiniteSpace::new(f, w.dim()).map_err(err)?;
    let table = FnTable::<Rational>::from_fn(space, |v| {
        let s: i64 = v.iter().enumerate().map(|(i, c)| (i as i64 % 5) * c.0 as i64).sum();
        CycloValue::from_int(2, s - 3).mul_zeta(s)
    });
    for d in [base, NormalizationDatum::new(2, 1), NormalizationDatum::new(-1, 3)] {
        let (mid, mw) = f02_pushforward(&table, &w, 1, &d).map_err(err)?;
        let (two, _) = f02_pushforward(&mid, &mw, 0, &d).map_err(err)?;
        let (one, _) = f02_pushforward(&table, &w, 0, &d).map_err(err)?;
        check(two == one, || format!("transitivity fails for {d:?}"))?;
    }
    Ok(())
}

fn surface_factorization() -> Outcome {
    for q in [2u64, 3] {
        let z = surface_zeta_factorization::<Rational>(q, 10).map_err(err)?;
        check(z.holds, || format!("q={q}: product differs"))?;
        check(z.point.coeffs == vec![r(1); 11], || format!("q={q}: point factor"))?;
    }
    Ok(())
}

fn elliptic() -> Outcome {
    let model = CurveModel::from_json(r#"{"q": 2, "model": "plane", "poly": "y^2*z + y*z^2 + x^3"}"#).map_err(err)?;
    let z = zeta_from_counts::<Rational>(&model, 12).map_err(err)?;
    let want = RatFunc::new(UPoly::from_ints(&[1, 0, 2]), line_denominator(2)).unwrap();
    check(z.fit.as_ref() == Some(&want), || format!("fit {:?}", z.fit.as_ref().map(|f| f.to_string())))?;
    check(z.fit.as_ref().unwrap().num == UPoly::from_ints(&[1, 0, 2]), || "numerator".into())?;
    check(functional_equation_check(&z, 1).map_err(err)?, || "functional equation".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 12] = [
        ("three-route zeta agreement", 10, three_routes),
        ("zeta integral functional equation", 1, hecke_functional_equation),
        ("Parseval gives Riemann-Roch", 60, parseval_riemann_roch),
        ("Fourier subgroup rule", 10, fourier_subgroup_rule),
        ("cube diagram", 60, cube),
        ("Bruhat type square", 5, bruhat),
        ("restricted complex", 30, restricted_complex),
        ("residue relations", 10, residue_relations),
        ("free distributive lattice model", 10, free_lattice),
        ("normalization torsor", 5, torsor),
        ("surface zeta factorization", 10, surface_factorization),
        ("elliptic cross-check", 10, elliptic),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            check(elapsed <= Duration::from_secs(*budget), || format!("took {:.2}s, budget {budget}s", elapsed.as_secs_f64()))
        });
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({:.2}s)", i + 1, elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({:.2}s): {msg}", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("criteria failed: {failed}");
        ExitCode::FAILURE
    }
}
