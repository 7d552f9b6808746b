mod common;

use std::f64::consts::PI;

use bicx::miller_ross::{
    derivative_k, derivative_series, derivative_shifted, eval, eval_negative_integer_order,
    eval_series_factor, mr_complex, mr_operator, ode_residual, recurrence_residual,
    taylor_in_order, MRParams, Recurrence,
};
use bicx::special::kummer_1f1;
use bicx::{cr_check, Bicomplex, Error, TruncationPolicy};
use common::{cx, polar_bc, rel_bc, rng};

fn policy() -> TruncationPolicy {
    TruncationPolicy::default()
}

fn bc(a: f64, b: f64, c: f64, d: f64) -> Bicomplex {
    Bicomplex::from_parts(a, b, c, d)
}

fn admissible_params(r: &mut rand_chacha::ChaCha8Rng) -> MRParams {
    loop {
        let p = MRParams::new(polar_bc(r, 0.1, 5.0), polar_bc(r, 0.1, 5.0));
        if p.pole_clearance(-6..=6, 1e-3) {
            return p;
        }
    }
}

#[test]
fn exponential_and_closed_forms() {
    let z = bc(0.4, -1.1, 0.9, 0.3);
    let c = bc(1.2, 0.5, -0.3, 0.2);
    let e = eval(
        &MRParams::new(Bicomplex::ZERO, Bicomplex::ONE),
        z,
        &policy(),
    )
    .unwrap();
    assert!(rel_bc(e.value, z.exp()) < 1e-14);

    // V = 2: (exp(CZ) - 1 - CZ) / C^2
    let e = eval(&MRParams::new(Bicomplex::ONE * 2.0, c), z, &policy()).unwrap();
    let cz = c * z;
    let expected = (cz.exp() - Bicomplex::ONE - cz).checked_div(c * c).unwrap();
    assert!(rel_bc(e.value, expected) < 1e-13);

    // C = 0: Z^V / Gamma(V + 1)
    let v = bc(0.7, 0.2, -0.4, 0.1);
    let e = eval(&MRParams::new(v, Bicomplex::ZERO), z, &policy()).unwrap();
    let expected = z.pow(v).unwrap() * bicx::special::bicomplex_reciprocal_gamma(v + 1.0);
    assert!(rel_bc(e.value, expected) < 1e-14);
}

#[test]
fn sine_cosine_case() {
    // E_{0,j}(Z) = cos Z + j sin Z
    let z = bc(0.3, 0.8, -1.2, 0.4);
    let e = eval(&MRParams::new(Bicomplex::ZERO, Bicomplex::J), z, &policy()).unwrap();
    let expected = z.cos() + Bicomplex::J * z.sin();
    assert!(rel_bc(e.value, expected) < 1e-13);
}

#[test]
fn componentwise_structure_is_exact() {
    let mut r = rng(11);
    for _ in 0..50 {
        let p = admissible_params(&mut r);
        let z = polar_bc(&mut r, 0.1, 5.0);
        let e = eval(&p, z, &policy()).unwrap();
        let e1 = mr_complex(p.v.z1, p.c.z1, z.z1, &policy()).unwrap();
        let e2 = mr_complex(p.v.z2, p.c.z2, z.z2, &policy()).unwrap();
        assert_eq!(e.value, Bicomplex::new(e1.value, e2.value));
    }
}

#[test]
fn tail_bound_is_sound() {
    let mut r = rng(12);
    for _ in 0..100 {
        let p = admissible_params(&mut r);
        let z = polar_bc(&mut r, 0.1, 2.0);
        let e = eval(&p, z, &policy()).unwrap();
        let strict = TruncationPolicy {
            rel_tol: 1e-17,
            ..policy()
        };
        let f = eval(&p, z, &strict).unwrap();
        let diff = (e.value - f.value).hyperbolic_norm();
        let slack = f.value.hyperbolic_norm().scale(1e-14);
        assert!(
            diff.within(&(e.tail_bound + slack)),
            "{diff:?} vs {:?}",
            e.tail_bound
        );
    }
}

#[test]
fn zero_divisor_arguments() {
    let v = Bicomplex::ONE * 0.5;
    let r = eval(&MRParams::new(v, Bicomplex::ONE), Bicomplex::E1, &policy());
    assert_eq!(r.unwrap_err(), Error::ZeroDivisorPower);
    // integer order admits zero divisors
    let v = Bicomplex::E1 * 2.0 + Bicomplex::E2 * 3.0;
    let e = eval(
        &MRParams::new(v, Bicomplex::ONE),
        Bicomplex::E1 * 2.0,
        &policy(),
    )
    .unwrap();
    assert_eq!(e.value.z2, cx(0.0, 0.0));
    assert!(e.value.is_finite());
}

#[test]
fn negative_integer_orders() {
    // V = -1, C = 2, Z = 1: 2 e^2
    let p = MRParams::new(-Bicomplex::ONE, Bicomplex::ONE * 2.0);
    let z = Bicomplex::ONE;
    let a = eval(&p, z, &policy()).unwrap();
    let b = eval_negative_integer_order(&p, z, &policy()).unwrap();
    let expected = Bicomplex::ONE * (2.0 * 2f64.exp());
    assert!(rel_bc(a.value, expected) < 1e-14);
    assert!(rel_bc(b.value, expected) < 1e-14);

    let p0 = MRParams::new(Bicomplex::ZERO, bc(0.5, 1.0, 0.2, -0.7));
    let z = bc(1.0, 0.5, -0.5, 0.25);
    assert_eq!(
        eval_negative_integer_order(&p0, z, &policy())
            .unwrap()
            .value,
        eval(&p0, z, &policy()).unwrap().value
    );

    let mut r = rng(13);
    for _ in 0..50 {
        let p = MRParams::new(-Bicomplex::E1, polar_bc(&mut r, 0.1, 5.0));
        let z = polar_bc(&mut r, 0.1, 5.0);
        let a = eval(&p, z, &policy()).unwrap();
        let b = eval_negative_integer_order(&p, z, &policy()).unwrap();
        assert!(rel_bc(a.value, b.value) < 1e-12);
    }

    let p = MRParams::new(-Bicomplex::ONE, Bicomplex::E1);
    assert_eq!(
        eval_negative_integer_order(&p, z, &policy()).unwrap_err(),
        Error::ZeroDivisorPower
    );
    let p = MRParams::new(Bicomplex::ONE * -0.5, Bicomplex::ONE);
    assert!(eval_negative_integer_order(&p, z, &policy()).is_err());
}

#[test]
fn recurrences_on_a_cloud() {
    let mut r = rng(14);
    for _ in 0..200 {
        let p = admissible_params(&mut r);
        let z = polar_bc(&mut r, 0.1, 5.0);
        for id in Recurrence::ALL {
            let res = recurrence_residual(id, &p, z, &policy()).unwrap();
            assert!(res.relative() < 1e-10, "{} {p:?} {z:?}: {res:?}", id.name());
        }
    }
}

#[test]
fn recurrence_fixed_points() {
    let p = MRParams::new(Bicomplex::ONE, Bicomplex::ONE);
    let res = recurrence_residual(Recurrence::Ii, &p, Bicomplex::ONE, &policy()).unwrap();
    assert!(res.absolute() < 1e-12);
    let p = MRParams::new(bc(0.3, 0.2, 0.1, -0.4), Bicomplex::ZERO);
    let z = bc(1.5, 0.5, 0.2, 0.1);
    let res = recurrence_residual(Recurrence::Iv, &p, z, &policy()).unwrap();
    assert!(res.relative() < 1e-15);
}

#[test]
fn recurrence_detects_a_wrong_order() {
    let p = MRParams::new(bc(0.5, 0.0, 0.0, 0.0), Bicomplex::ONE);
    let z = bc(1.0, 0.5, 0.0, 0.0);
    let good = recurrence_residual(Recurrence::Iii, &p, z, &policy()).unwrap();
    assert!(good.relative() < 1e-12);
    let e = |v: Bicomplex| {
        eval(&MRParams::new(v, Bicomplex::ONE), z, &policy())
            .unwrap()
            .value
    };
    // mixing orders V and V + 1/2 breaks E_V = Z^V / Gamma(V+1) + C E_{V+1}
    let lhs = e(p.v);
    let rhs =
        z.pow(p.v).unwrap() * bicx::special::bicomplex_reciprocal_gamma(p.v + 1.0) + e(p.v + 1.5);
    assert!(rel_bc(lhs, rhs) > 0.01);
}

#[test]
fn derivative_closed_form_matches_series_and_differences() {
    let mut r = rng(15);
    for _ in 0..100 {
        let p = admissible_params(&mut r);
        let z = polar_bc(&mut r, 0.3, 3.0);
        for k in 1..=3 {
            let closed = derivative_k(&p, z, k, &policy()).unwrap();
            let series = derivative_series(&p, z, k, &policy()).unwrap().value;
            let scale = closed.hyperbolic_norm().sup(series.hyperbolic_norm());
            let diff = (closed - series).hyperbolic_norm();
            // the termwise series cancels for large |CZ| off the positive axis
            assert!(diff.relative_to(&scale) < 1e-8, "k={k} {p:?} {z:?}");
        }
        let h = 1e-3;
        let f = |x: Bicomplex| eval(&p, x, &policy()).unwrap().value;
        let d = |h: f64| (f(z + h) - f(z - h)) * (0.5 / h);
        let fd = (d(h / 2.0) * 4.0 - d(h)) * (1.0 / 3.0);
        let closed = derivative_k(&p, z, 1, &policy()).unwrap();
        let scale = closed.hyperbolic_norm().max().max(1.0);
        assert!((fd - closed).hyperbolic_norm().max() < 1e-6 * scale);
    }
}

#[test]
fn derivative_examples() {
    let z = bc(0.4, 0.3, -0.2, 0.6);
    let p = MRParams::new(Bicomplex::ZERO, Bicomplex::ONE);
    assert!(rel_bc(derivative_k(&p, z, 1, &policy()).unwrap(), z.exp()) < 1e-14);

    let p = MRParams::new(Bicomplex::ONE * 2.5, Bicomplex::ONE * 2.0);
    let f = |x: f64| eval(&p, Bicomplex::from_real(x), &policy()).unwrap().value;
    // third derivative at Z = 1 by a Richardson-extrapolated stencil
    let d3 = |h: f64| {
        (f(1.0 + 2.0 * h) - f(1.0 + h) * 2.0 + f(1.0 - h) * 2.0 - f(1.0 - 2.0 * h))
            * (0.5 / h.powi(3))
    };
    let h = 1e-2;
    let fd = (d3(h / 2.0) * 4.0 - d3(h)) * (1.0 / 3.0);
    let closed = derivative_k(&p, Bicomplex::ONE, 3, &policy()).unwrap();
    assert!((fd - closed).hyperbolic_norm().max() < 1e-6 * closed.hyperbolic_norm().max());
}

#[test]
fn shifted_derivatives() {
    let mut r = rng(16);
    for _ in 0..50 {
        let p = admissible_params(&mut r);
        let z = polar_bc(&mut r, 0.3, 3.0);
        // M = 1, k = 1
        let d = derivative_shifted(&p, Bicomplex::ONE, z, 1, &policy()).unwrap();
        let e = eval(&p, z, &policy()).unwrap().value;
        assert!(rel_bc(d, e) < 1e-12);
        let rhs = z.pow(p.v).unwrap() * bicx::special::bicomplex_reciprocal_gamma(p.v + 1.0)
            + p.c * eval(&p.shifted(1.0), z, &policy()).unwrap().value;
        assert!(
            (e - rhs)
                .hyperbolic_norm()
                .relative_to(&rhs.hyperbolic_norm().sup(e.hyperbolic_norm()))
                < 1e-11
        );

        // M = (2, 2), k = 2 against k derivatives of E_{V+M}
        let m = Bicomplex::ONE * 2.0;
        let d = derivative_shifted(&p, m, z, 2, &policy()).unwrap();
        let closed = derivative_k(&p.with_order(p.v + m), z, 2, &policy()).unwrap();
        assert!(rel_bc(d, e) < 1e-12);
        assert!(
            (d - closed)
                .hyperbolic_norm()
                .relative_to(&d.hyperbolic_norm().sup(closed.hyperbolic_norm()))
                < 1e-9
        );

        // M = 0 reading: E_{V-k} from the closed form at order V
        let k = 2;
        let lowered = eval(&p.shifted(-(k as f64)), z, &policy()).unwrap().value;
        let closed = derivative_k(&p, z, k, &policy()).unwrap();
        assert!(
            (lowered - closed)
                .hyperbolic_norm()
                .relative_to(&closed.hyperbolic_norm().sup(lowered.hyperbolic_norm()))
                < 1e-10
        );
    }
    let m = Bicomplex::E1 * 2.0 + Bicomplex::E2 * 1.0;
    let p = MRParams::new(Bicomplex::ONE * 0.5, Bicomplex::ONE);
    let z = bc(1.0, 0.2, 0.1, 0.0);
    let fallback = derivative_shifted(&p, m, z, 2, &policy()).unwrap();
    let direct = derivative_k(&p.with_order(p.v + m), z, 2, &policy()).unwrap();
    assert_eq!(fallback, direct);
    assert!(derivative_shifted(&p, Bicomplex::ONE * 0.5, z, 1, &policy()).is_err());
}

#[test]
fn ode_on_a_cloud_and_control() {
    let mut r = rng(17);
    let mut checked = 0;
    while checked < 200 {
        let p = admissible_params(&mut r);
        if !p.guard().admits_beta_integral() {
            continue;
        }
        let z = polar_bc(&mut r, 0.1, 5.0);
        let res = ode_residual(&p, z, &policy()).unwrap();
        assert!(res.relative() < 1e-9, "{p:?} {z:?} {res:?}");
        checked += 1;
    }
    let p = MRParams::new(Bicomplex::ZERO, Bicomplex::ONE);
    let z = bc(0.7, -0.2, 0.3, 0.5);
    assert!(ode_residual(&p, z, &policy()).unwrap().relative() < 1e-12);
    let z = Bicomplex::ONE;
    let w = (z * 2.0).exp();
    let control = mr_operator(&p, z, w, w * 2.0, w * 4.0);
    assert!(control.absolute() > 0.1);
}

#[test]
fn ode_outside_the_stated_hypothesis() {
    // the identity itself does not need Re(alpha) + 1 > |Im(beta)|
    let p = MRParams::new(bc(-1.7, 0.3, 0.0, 0.0), bc(0.5, 0.5, 0.0, 0.0));
    assert!(!p.guard().admits_beta_integral());
    let z = bc(1.2, -0.4, 0.3, 0.2);
    assert!(ode_residual(&p, z, &policy()).unwrap().relative() < 1e-10);
}

#[test]
fn kummer_representation() {
    let mut r = rng(18);
    for _ in 0..50 {
        let p = admissible_params(&mut r);
        let z = polar_bc(&mut r, 0.1, 3.0);
        let f = kummer_1f1(Bicomplex::ONE, p.v + 1.0, p.c * z, &policy())
            .unwrap()
            .value;
        let lhs = f * z.pow(p.v).unwrap() * bicx::special::bicomplex_reciprocal_gamma(p.v + 1.0);
        let e = eval(&p, z, &policy()).unwrap().value;
        assert!(rel_bc(lhs, e) < 1e-9, "{p:?} {z:?}");
    }
}

#[test]
fn taylor_in_order_examples() {
    let c = bc(0.4, 0.1, -0.2, 0.3);
    let z0 = bc(1.3, 0.4, 0.2, -0.1);
    let p = MRParams::new(Bicomplex::ZERO, c);
    let a = eval_series_factor(&p, z0, &policy()).unwrap().value;
    assert_eq!(taylor_in_order(&p, z0, 30, &policy()).unwrap(), a);

    let p = MRParams::new(bc(0.5, 0.2, -0.3, 0.1), c);
    let a = eval_series_factor(&p, Bicomplex::ONE, &policy())
        .unwrap()
        .value;
    assert_eq!(
        taylor_in_order(&p, Bicomplex::ONE, 30, &policy()).unwrap(),
        a
    );

    let p = MRParams::new(Bicomplex::ONE * 0.5, Bicomplex::ONE);
    let z0 = Bicomplex::ONE * 2.0;
    let t = taylor_in_order(&p, z0, 60, &policy()).unwrap();
    let e = eval(&p, z0, &policy()).unwrap().value;
    assert!(rel_bc(t, e) < 1e-10);

    let r = taylor_in_order(&p, Bicomplex::E2, 10, &policy());
    assert_eq!(r.unwrap_err(), Error::ZeroDivisorLog);
}

#[test]
fn erf_special_case() {
    let erf_scaled = common::rows("erf_scaled.csv", 0);
    let p = MRParams::new(Bicomplex::ONE * 0.5, Bicomplex::ONE);
    for (_, v) in erf_scaled {
        let x = v[0];
        let e = eval(&p, Bicomplex::from_real(x * x), &policy())
            .unwrap()
            .value;
        let expected = v[1];
        assert!((e.z1.re - expected).abs() <= 1e-13 * expected, "{x}");
        assert!(e.z1.im.abs() < 1e-15 && e.z2 == e.z1);
    }
    // E_{1/2,1}(x^2) = (2/sqrt(pi)) e^{x^2} Erf(x) with Erf(x) = int_0^x e^{-t^2} dt
    let x: f64 = 0.8;
    let e = eval(&p, Bicomplex::from_real(x * x), &policy())
        .unwrap()
        .value;
    let unnormalized =
        bicx::quadrature::integrate(|t| cx((-t * t).exp(), 0.0), 0.0, x, &Default::default())
            .unwrap()
            .value
            .re;
    assert!((e.z1.re - 2.0 / PI.sqrt() * (x * x).exp() * unnormalized).abs() < 1e-12);
}

#[test]
fn holomorphic_in_the_order() {
    let mut r = rng(19);
    for _ in 0..20 {
        let c = polar_bc(&mut r, 0.1, 2.0);
        let z0 = polar_bc(&mut r, 0.3, 2.0);
        let v0 = polar_bc(&mut r, 0.1, 2.0);
        let f = |v: Bicomplex| eval(&MRParams::new(v, c), z0, &policy()).unwrap().value;
        let res = cr_check(f, v0, 1e-4);
        assert!(res.max() < 1e-6, "{res:?}");
    }
}

#[test]
fn entire_for_integer_orders() {
    let p = MRParams::new(
        Bicomplex::E1 * 2.0 + Bicomplex::E2 * 0.0,
        bc(0.5, 0.5, 0.2, 0.0),
    );
    assert!(eval(&p, Bicomplex::ZERO, &policy())
        .unwrap()
        .value
        .is_finite());
    let q = MRParams::new(
        Bicomplex::E1 * -1.0 + Bicomplex::E2 * 3.0,
        bc(0.5, 0.5, 0.2, 0.0),
    );
    assert!(eval(&q, Bicomplex::ZERO, &policy())
        .unwrap()
        .value
        .is_finite());
    for params in [p, q] {
        for n in 0..12 {
            let t = 2.0 * PI * n as f64 / 12.0;
            let z = Bicomplex::from_complex(cx(t.cos(), t.sin()) * 0.5);
            let f = |x: Bicomplex| eval(&params, x, &policy()).unwrap().value;
            assert!(cr_check(f, z, 1e-4).max() < 1e-6);
        }
    }
}
