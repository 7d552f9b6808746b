mod common;

use bicx::fractional::{
    kinetic_solve, kinetic_verify, rl_apply_mr, yq_residual, FractionalOrder, KineticProblem,
    PowerTerm,
};
use bicx::miller_ross::{eval, MRParams};
use bicx::{Bicomplex, Error, QuadratureConfig, TruncationPolicy};
use common::{cx, polar_bc, rel_bc, rng, rows};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn policy() -> TruncationPolicy {
    TruncationPolicy::default()
}

/// Both idempotent components with real part in `(lo, hi)` and imaginary
/// part in `(-im, im)`.
fn order(r: &mut ChaCha8Rng, lo: f64, hi: f64, im: f64) -> Bicomplex {
    let mut c = || {
        let y = if im > 0.0 { r.gen_range(-im..im) } else { 0.0 };
        cx(r.gen_range(lo..hi), y)
    };
    Bicomplex::new(c(), c())
}

#[test]
fn semigroup_and_inverse_on_powers() {
    let mut r = rng(11);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let m1 = order(&mut r, 0.05, 2.5, 1.0);
        let m2 = order(&mut r, 0.05, 2.5, 1.0);
        let u = order(&mut r, -0.9, 3.0, 1.0);
        let t = r.gen_range(0.1..3.0);
        let i1 = FractionalOrder::integral(m1).unwrap();
        let i2 = FractionalOrder::integral(m2).unwrap();
        let i12 = FractionalOrder::integral(m1 + m2).unwrap();
        let p = PowerTerm::monomial(u);
        let composed = p.apply(&i2).unwrap().apply(&i1).unwrap().eval(t).unwrap();
        let direct = p.apply(&i12).unwrap().eval(t).unwrap();
        worst = worst.max(rel_bc(composed, direct));

        let d1 = FractionalOrder::derivative(m1).unwrap();
        let back = p.apply(&i1).unwrap().apply(&d1).unwrap().eval(t).unwrap();
        worst = worst.max(rel_bc(back, p.eval(t).unwrap()));
    }
    assert!(worst <= 1e-12, "worst {worst:e}");
}

#[test]
fn derivative_of_miller_ross_shifts_the_order() {
    let mut r = rng(12);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let v = order(&mut r, -0.9, 3.0, 0.0);
        let m = order(&mut r, 0.05, 2.0, 1.0);
        let c = polar_bc(&mut r, 0.3, 2.0);
        let z0 = polar_bc(&mut r, 0.3, 2.0);
        let t = r.gen_range(0.1..2.0);
        let params = MRParams::new(v, c);
        let d = FractionalOrder::derivative(m).unwrap();
        let lhs = rl_apply_mr(&d, &params, z0, t, &policy()).unwrap().value;
        let shifted = eval(&params.with_order(v - m), z0 * t, &policy())
            .unwrap()
            .value;
        let rhs = (z0.log().unwrap() * m).exp() * shifted;
        worst = worst.max(rel_bc(lhs, rhs));
    }
    assert!(worst <= 1e-10, "worst {worst:e}");
}

#[test]
fn integral_of_miller_ross_shifts_the_order() {
    let mut r = rng(13);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let v = order(&mut r, -0.9, 3.0, 1.0);
        let m = order(&mut r, 0.05, 2.0, 1.0);
        let c = polar_bc(&mut r, 0.3, 2.0);
        let z0 = polar_bc(&mut r, 0.3, 2.0);
        let t = r.gen_range(0.1..2.0);
        let params = MRParams::new(v, c);
        let i = FractionalOrder::integral(m).unwrap();
        let lhs = rl_apply_mr(&i, &params, z0, t, &policy()).unwrap().value;
        let shifted = eval(&params.with_order(v + m), z0 * t, &policy())
            .unwrap()
            .value;
        let rhs = (-(z0.log().unwrap() * m)).exp() * shifted;
        worst = worst.max(rel_bc(lhs, rhs));
    }
    assert!(worst <= 1e-10, "worst {worst:e}");
}

#[test]
fn apply_mr_examples() {
    let params = MRParams::new(Bicomplex::ZERO, Bicomplex::ONE);
    let z0 = Bicomplex::from_parts(0.8, 0.1, -0.2, 0.3);
    let t = 1.3;
    let id = FractionalOrder::integral(Bicomplex::ZERO).unwrap();
    let v = rl_apply_mr(&id, &params, z0, t, &policy()).unwrap().value;
    assert!(rel_bc(v, (z0 * t).exp()) < 1e-13);

    let half = FractionalOrder::integral(Bicomplex::from_real(0.5)).unwrap();
    let v = rl_apply_mr(&half, &params, Bicomplex::ONE, t, &policy())
        .unwrap()
        .value;
    let e = eval(
        &params.with_order(Bicomplex::from_real(0.5)),
        Bicomplex::from_real(t),
        &policy(),
    )
    .unwrap()
    .value;
    assert!(rel_bc(v, e) < 1e-10);

    let vv = Bicomplex::new(cx(0.7, 0.0), cx(1.4, 0.0));
    let c = Bicomplex::from_parts(0.5, -0.3, 0.2, 0.1);
    let params = MRParams::new(vv, c);
    let d = FractionalOrder::derivative(vv).unwrap();
    let v = rl_apply_mr(&d, &params, z0, t, &policy()).unwrap().value;
    let expect = (z0.log().unwrap() * vv).exp() * (c * z0 * t).exp();
    assert!(rel_bc(v, expect) < 1e-12);
}

#[test]
fn fractional_ode_examples() {
    let one = Bicomplex::ONE;
    let res = yq_residual(1, 2, Bicomplex::from_real(2.0), one, one, 1.0, &policy()).unwrap();
    assert!(res.relative() < 1e-8, "{res:?}");
}

#[test]
fn fractional_ode_cloud() {
    let mut r = rng(14);
    let mut worst = 0.0f64;
    for (p, q) in [(1u32, 2u32), (1, 3), (2, 3), (1, 4), (1, 5)] {
        let lo = (p as f64 - p as f64 / q as f64 - 0.9).max(-0.9);
        for _ in 0..40 {
            let v = order(&mut r, lo, 3.5, 0.0);
            let c = polar_bc(&mut r, 0.3, 2.0);
            let z0 = polar_bc(&mut r, 0.3, 2.0);
            let t = r.gen_range(0.1..2.0);
            let res = yq_residual(p, q, v, c, z0, t, &policy()).unwrap();
            worst = worst.max(res.relative());
        }
    }
    assert!(worst <= 1e-8, "worst {worst:e}");
}

#[test]
fn fractional_ode_rejects_complex_alpha() {
    let v = Bicomplex::from_parts(2.0, 0.5, 0.0, 0.0);
    let err = yq_residual(1, 2, v, Bicomplex::ONE, Bicomplex::ONE, 1.0, &policy()).unwrap_err();
    assert!(matches!(err, Error::Precondition(_)));
    // beta with a real part
    let v = Bicomplex::from_parts(2.0, 0.0, 0.3, 0.0);
    assert!(yq_residual(1, 2, v, Bicomplex::ONE, Bicomplex::ONE, 1.0, &policy()).is_err());
}

#[test]
fn basic_kinetic_matches_mittag_leffler() {
    let mut worst = 0.0f64;
    for (_, row) in rows("mittag_leffler.csv", 0) {
        let (nu, c, t, n0, n) = (row[0], row[1], row[2], row[3], row[4]);
        let problem = KineticProblem::basic(n0, c, Bicomplex::from_real(nu)).unwrap();
        let sol = kinetic_solve(&problem, &policy()).unwrap();
        let v = sol.eval(t).unwrap().value;
        worst = worst.max((v.z1 - n).norm().max((v.z2 - n).norm()) / n0);
    }
    assert!(worst <= 1e-10, "worst {worst:e}");
}

#[test]
fn first_order_kinetics_is_exponential_decay() {
    for &(c, n0) in &[(0.3, 1.0), (1.0, 2.5), (2.0, 1.0)] {
        let problem = KineticProblem::basic(n0, c, Bicomplex::ONE).unwrap();
        let sol = kinetic_solve(&problem, &policy()).unwrap();
        for i in 1..=20 {
            let t = 0.15 * i as f64;
            let v = sol.eval(t).unwrap().value;
            let e = n0 * (-c * t).exp();
            let err = (v.z1 - e).norm().max((v.z2 - e).norm()) / n0;
            assert!(err <= 1e-12, "c={c} t={t} err={err:e}");
        }
    }
}

#[test]
fn unforced_exp_kind_reduces_to_basic() {
    let v = Bicomplex::new(cx(0.6, 0.2), cx(1.3, -0.1));
    let basic = kinetic_solve(&KineticProblem::basic(1.5, 0.8, v).unwrap(), &policy()).unwrap();
    let forced = kinetic_solve(
        &KineticProblem::exp_forced(1.5, 0.8, v, Bicomplex::ZERO).unwrap(),
        &policy(),
    )
    .unwrap();
    for t in [0.2, 0.9, 1.7] {
        let a = basic.eval(t).unwrap().value;
        let b = forced.eval(t).unwrap().value;
        assert!(rel_bc(a, b) < 1e-12);
    }
}

#[test]
fn kinetic_problem_validation() {
    let v = Bicomplex::from_real(0.5);
    assert!(KineticProblem::basic(0.0, 1.0, v).is_err());
    assert!(KineticProblem::basic(1.0, -1.0, v).is_err());
    assert!(KineticProblem::basic(1.0, 1.0, Bicomplex::from_parts(0.2, 0.0, 0.0, 0.5)).is_err());
    let mu = Bicomplex::from_real(-0.6);
    let z0 = Bicomplex::ONE;
    assert!(KineticProblem::mr_forced(1.0, 1.0, v, z0, mu, z0, 1).is_ok());
    assert!(KineticProblem::mr_forced(1.0, 1.0, v, z0, mu, z0, 2).is_err());
    assert!(KineticProblem::mr_forced(1.0, 1.0, v, z0, v, Bicomplex::E1, 1).is_err());
}

#[test]
fn basic_kinetic_radius_is_finite() {
    let problem = KineticProblem::basic(1.0, 1.0, Bicomplex::ONE).unwrap();
    let sol = kinetic_solve(&problem, &policy()).unwrap();
    let radius = sol.empirical_radius();
    assert!(radius > 10.0 && radius < 20.0, "{radius}");
    assert!(matches!(
        sol.eval(radius * 1.1),
        Err(Error::SeriesDivergence { .. })
    ));
}

fn verify_worst(problems: &[KineticProblem], r: &mut ChaCha8Rng) -> f64 {
    let quad = QuadratureConfig::default();
    let mut worst = 0.0f64;
    for problem in problems {
        let sol = kinetic_solve(problem, &policy()).unwrap();
        let grid: Vec<f64> = (0..4).map(|_| r.gen_range(0.1..2.0)).collect();
        for res in kinetic_verify(problem, &sol, &grid, &quad).unwrap() {
            worst = worst.max(res.absolute());
        }
    }
    worst
}

#[test]
fn kinetic_equations_hold_by_quadrature() {
    let mut r = rng(15);
    let v = Bicomplex::from_parts(0.5, 0.0, 0.0, 0.1);
    let p = KineticProblem::basic(1.0, 1.0, v).unwrap();
    let res = kinetic_verify(
        &p,
        &kinetic_solve(&p, &policy()).unwrap(),
        &[0.1, 1.0, 2.0],
        &QuadratureConfig::default(),
    )
    .unwrap();
    assert!(res.iter().all(|x| x.absolute() < 1e-5));

    let basic: Vec<_> = (0..5)
        .map(|_| {
            let v = order(&mut r, 0.3, 1.8, 0.2);
            KineticProblem::basic(r.gen_range(0.5..2.0), r.gen_range(0.2..2.0), v).unwrap()
        })
        .collect();
    let w = verify_worst(&basic, &mut r);
    assert!(w < 1e-5, "basic {w:e}");

    let exp: Vec<_> = (0..5)
        .map(|_| {
            let v = order(&mut r, 0.3, 1.8, 0.2);
            let cc = polar_bc(&mut r, 0.2, 1.5);
            KineticProblem::exp_forced(r.gen_range(0.5..2.0), r.gen_range(0.2..2.0), v, cc).unwrap()
        })
        .collect();
    let w = verify_worst(&exp, &mut r);
    assert!(w < 1e-5, "exp {w:e}");

    let mr: Vec<_> = (0..5)
        .map(|i| {
            let v = order(&mut r, 0.3, 1.8, 0.2);
            let cc = polar_bc(&mut r, 0.2, 1.5);
            let mu = order(&mut r, -0.4, 1.5, 0.2);
            let z0 = polar_bc(&mut r, 0.5, 1.5);
            let n0 = r.gen_range(0.5..2.0);
            let c = r.gen_range(0.2..2.0);
            KineticProblem::mr_forced(n0, c, v, cc, mu, z0, (i % 3) as u32).unwrap()
        })
        .collect();
    let w = verify_worst(&mr, &mut r);
    assert!(w < 1e-5, "mr {w:e}");
}
