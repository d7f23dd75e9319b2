use hyperpi::lauricella::*;
use num_complex::Complex64;
use proptest::prelude::*;

const TOL: f64 = 1e-12;

fn close(x: Complex64, y: Complex64, eps: f64) -> bool {
    (x - y).norm() <= eps * (1.0 + y.norm())
}

fn disc(radius: f64) -> impl Strategy<Value = Complex64> {
    (0.0..radius, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

/// `(a, c)` with `c > a > 0`.
fn upper_lower() -> impl Strategy<Value = (f64, f64)> {
    (0.2..2.5f64, 0.2..2.5f64).prop_map(|(a, gap)| (a, a + gap))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_and_integral_agree(
        (a, c) in upper_lower(),
        b in prop::collection::vec(-1.5..1.5f64, 3),
        x in prop::collection::vec(disc(0.9), 3),
    ) {
        let call = LauricellaCall::new(a, b, c, x).unwrap();
        let s = fd_series(&call, TOL).unwrap().value;
        let i = fd_integral(&call, TOL).unwrap().value;
        prop_assert!(close(s, i, 1e-10), "{s} vs {i}");
    }

    #[test]
    fn repeated_argument_collapses_to_appell(
        (a, c) in upper_lower(),
        b in prop::collection::vec(-1.0..1.5f64, 3),
        x in disc(1.8),
        z in disc(0.9),
    ) {
        prop_assume!(!(x.re > 0.8 && x.im.abs() < 0.2));
        let three = fd(&LauricellaCall::new(a, b.clone(), c, vec![x, x, z]).unwrap(), TOL).unwrap().value;
        let two = appell_f1(a, b[0] + b[1], b[2], c, x, z, TOL).unwrap().value;
        prop_assert!(close(three, two, 1e-10), "{three} vs {two}");
    }

    #[test]
    fn paired_four_variable_call_collapses(
        (a, c) in upper_lower(),
        b in prop::collection::vec(0.1..1.0f64, 4),
        x in disc(0.9),
        y in disc(0.9),
    ) {
        let four = fd(&LauricellaCall::new(a, b.clone(), c, vec![x, x, y, y]).unwrap(), TOL).unwrap().value;
        let two = appell_f1(a, b[0] + b[1], b[2] + b[3], c, x, y, TOL).unwrap().value;
        prop_assert!(close(four, two, 1e-10));
    }

    #[test]
    fn permutations_leave_value_unchanged(
        (a, c) in upper_lower(),
        b in prop::collection::vec(-1.0..1.0f64, 3),
        x in prop::collection::vec(disc(2.0), 3),
    ) {
        prop_assume!(x.iter().all(|z| !(z.re > 0.8 && z.im.abs() < 0.2)));
        let v = fd(&LauricellaCall::new(a, b.clone(), c, x.clone()).unwrap(), TOL).unwrap().value;
        let rb = vec![b[2], b[0], b[1]];
        let rx = vec![x[2], x[0], x[1]];
        let w = fd(&LauricellaCall::new(a, rb, c, rx).unwrap(), TOL).unwrap().value;
        prop_assert!(close(v, w, 1e-12), "{v} vs {w}");
    }

    #[test]
    fn conjugate_closed_arguments_give_real_values(
        (a, c) in upper_lower(),
        b0 in -1.0..1.0f64,
        b1 in 0.1..1.0f64,
        r in -3.0..0.9f64,
        z in disc(2.5),
    ) {
        prop_assume!(z.im.abs() > 0.05);
        let call = LauricellaCall::new(a, vec![b0, b1, b1], c, vec![Complex64::new(r, 0.0), z, z.conj()]).unwrap();
        let v = fd(&call, TOL).unwrap().value;
        prop_assert!(v.im.abs() < 1e-12 * (1.0 + v.re.abs()), "{v}");
    }

    #[test]
    fn three_halves_closed_form(x in disc(0.9), y in disc(0.9)) {
        prop_assume!((x - y).norm() > 1e-3);
        let v = appell_f1(1.5, 1.0, 1.0, 2.0, x, y, TOL).unwrap().value;
        prop_assert!(close(v, appell_f1_three_halves(x, y), 1e-10));
    }

    #[test]
    fn euler_identity(a in 0.05..std::f64::consts::FRAC_PI_2) {
        prop_assert!(euler_identity_check(a).norm() < 1e-13);
    }
}

#[test]
fn argument_on_the_cut_is_rejected() {
    let call = LauricellaCall::real(0.5, &[0.5, 0.5], 1.0, &[1.5, 0.2]).unwrap();
    assert!(matches!(fd(&call, TOL), Err(hyperpi::Error::BranchCut { .. })));
}

#[test]
fn frozen_appell_value() {
    // arbitrary-precision reference
    let v = appell_f1(0.5, 1.0, 0.5, 1.0, Complex64::new(0.25, 0.0), Complex64::new(0.0625, 0.0), TOL).unwrap();
    assert!((v.value.re - 1.17476634671519578270140362847).abs() < 1e-13);
}
