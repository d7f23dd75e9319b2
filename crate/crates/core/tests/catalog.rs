use hyperpi::catalog::*;
use hyperpi::lauricella::{fd, LauricellaCall};
use hyperpi::quadrature::DEFAULT_TOL;
use hyperpi::Error;
use num_complex::Complex64;

fn part(r: &VerificationRecord, name: &str) -> f64 {
    r.route_values.iter().find(|(k, _)| k == name).unwrap_or_else(|| panic!("{name} missing")).1
}

#[test]
fn every_default_grid_point_recovers_pi() {
    let mut total = 0;
    for entry in list_identities() {
        let s = sweep(entry.id, &entry.default_grid(), DEFAULT_TOL).unwrap();
        assert_eq!(s.summary.ok, s.summary.total, "{}: {:?}", entry.id, s.summary);
        assert!(s.summary.max_residual < 1e-8);
        total += s.summary.total;
    }
    assert!(total >= 100);
}

#[test]
fn listing_is_stable() {
    let ids: Vec<_> = list_identities().iter().map(|e| e.id).collect();
    assert_eq!(
        ids,
        [
            "tesiA", "cor1uno1", "pibis", "piter", "koro3", "ipcomlunotesi", "ipcom2duetesi", "picomcomeq",
            "11unoth", "cor11uno1", "22dueth", "33treth", "33trecorth", "unobbhyy", "ipcom2duetesix",
            "picomcomeqb", "42th", "corth42", "quacinen", "th46pi",
        ]
    );
    let one: Vec<_> = list_identities().iter().filter(|e| e.arity() == 1).map(|e| e.id).collect();
    assert_eq!(one, ["cor1uno1", "koro3", "cor11uno1", "33trecorth", "corth42"]);
}

#[test]
fn one_parameter_sweep() {
    let points = grid(Family::OneParameter, &[], &[1.2, 1.5, 2.0, 3.0, 5.0]);
    let s = sweep("33trecorth", &points, DEFAULT_TOL).unwrap();
    assert_eq!(s.summary.ok, 5);
    assert!(s.summary.max_residual < 1e-8);
}

#[test]
fn degenerate_angle_pair_is_out_of_domain() {
    let points = grid(Family::AllComplex, &[1.2], &[0.4, 1.2]);
    let s = sweep("picomcomeq", &points, DEFAULT_TOL).unwrap();
    assert_eq!(s.records[0].flag, Flag::Ok);
    assert_eq!(s.records[1].flag, Flag::OutOfDomain);
    assert_eq!(s.summary.out_of_domain, 1);
    assert!(s.summary.all_ok());
}

#[test]
fn unknown_identity() {
    assert!(matches!(sweep("nope", &[], DEFAULT_TOL), Err(Error::UnknownIdentity(_))));
    assert!(matches!(evaluate_identity("nope", &Params::one(2.0), DEFAULT_TOL), Err(Error::UnknownIdentity(_))));
}

#[test]
fn limits_agree_with_their_parents() {
    let pairs = [
        ("tesiA", "cor1uno1"),
        ("piter", "koro3"),
        ("11unoth", "cor11uno1"),
        ("33treth", "33trecorth"),
        ("42th", "corth42"),
    ];
    for (parent, child) in pairs {
        for b in [1.5, 2.0, 3.0] {
            let p = evaluate_identity(parent, &Params::two(1.0 + 1e-6, b), DEFAULT_TOL).unwrap();
            let c = evaluate_identity(child, &Params::one(b), DEFAULT_TOL).unwrap();
            assert!((p.pi_computed - c.pi_computed).abs() < 1e-4, "{parent}/{child} b={b}");
            // the three-variable function tends to the two-variable one
            assert!((part(&p, "FD_re") - part(&c, "F1_re")).abs() < 1e-4, "{parent}/{child} b={b}");
        }
    }
}

#[test]
fn both_four_variable_denominators_coincide() {
    for (a, b) in [(1.2, 0.4), (1.0, 0.2), (1.5, 0.9)] {
        let p = evaluate_identity("picomcomeq", &Params::two(a, b), DEFAULT_TOL).unwrap();
        let q = evaluate_identity("picomcomeqb", &Params::two(a, b), DEFAULT_TOL).unwrap();
        assert!((part(&p, "FD_re") - part(&q, "FD_re")).abs() < 1e-10);
    }
}

#[test]
fn complex_denominators_are_real() {
    for id in ["ipcomlunotesi", "ipcom2duetesi", "unobbhyy", "ipcom2duetesix", "th46pi", "picomcomeq"] {
        for p in find(id).unwrap().default_grid() {
            let r = evaluate_identity(id, &p, DEFAULT_TOL).unwrap();
            assert!(part(&r, "FD_im").abs() < 1e-12, "{id} {p:?}");
        }
    }
}

#[test]
fn negative_lower_parameters() {
    for (a, b) in [(1.5, 2.5), (1.2, 2.0)] {
        for id in ["22dueth", "quacinen"] {
            let r = evaluate_identity(id, &Params::two(a, b), DEFAULT_TOL).unwrap();
            assert!(r.residual < 1e-8, "{id} ({a},{b}): {}", r.residual);
        }
    }
}

#[test]
fn denominator_matches_direct_lauricella_call() {
    let (a, b) = (1.5f64, 2.5f64);
    let r = evaluate_identity("22dueth", &Params::two(a, b), DEFAULT_TOL).unwrap();
    let a4m1 = a.powi(4) - 1.0;
    let x = [-a4m1, a4m1 * b * b / (a * a - b * b), a4m1 / (a * a * b * b - 1.0)];
    let direct = fd(&LauricellaCall::real(0.5, &[-0.5, 0.5, 0.5], 1.0, &x).unwrap(), 1e-13).unwrap().value;
    assert!((direct - Complex64::new(part(&r, "denominator"), 0.0)).norm() < 1e-11);
}

#[test]
fn numerator_over_denominator_is_the_reported_pi() {
    let r = evaluate_identity("th46pi", &Params::two(0.7, 2.0), DEFAULT_TOL).unwrap();
    assert_eq!(part(&r, "numerator") / part(&r, "denominator"), r.pi_computed);
}

#[test]
fn loose_tolerance_widens_the_bound() {
    let r = evaluate_identity("tesiA", &Params::two(1.5, 2.5), 1e-4).unwrap();
    assert_eq!(r.flag, Flag::Ok);
    assert!(r.residual < residual_bound(1e-4));
}
