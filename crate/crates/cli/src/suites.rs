//! Identity suites on seeded random clouds. Each suite reports, per
//! identity, the worst residual seen against its budget.

use std::cell::RefCell;
use std::f64::consts::PI;

use bicx::fractional::{
    kinetic_solve, kinetic_verify, rl_apply_mr, rl_derivative_power, rl_integral_power,
    yq_residual, FractionalOrder, KineticProblem, PowerTerm,
};
use bicx::integral_reps::{
    barnes_eval, default_terms, ir_beta, ir_double, ir_gamma_denominator, BarnesPath,
};
use bicx::miller_ross::{
    derivative_k, derivative_shifted, eval, eval_negative_integer_order, mr_operator,
    recurrence_residual, taylor_in_order, MRParams, Recurrence,
};
use bicx::{
    cr_check, Bicomplex, Complex64, Error, HyperbolicNorm, QuadratureConfig, Result, SeriesValue,
    TruncationPolicy,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::args::Suite;

const SPECIAL_CASES: &str = include_str!("../../core/tests/data/special_cases.csv");
const ERF_SCALED: &str = include_str!("../../core/tests/data/erf_scaled.csv");
const MITTAG_LEFFLER: &str = include_str!("../../core/tests/data/mittag_leffler.csv");

pub const ALL: [Suite; 10] = [
    Suite::Algebra,
    Suite::Special,
    Suite::Recurrences,
    Suite::Derivatives,
    Suite::Ode,
    Suite::IntegralReps,
    Suite::Barnes,
    Suite::Fractional,
    Suite::Kinetic,
    Suite::Cr,
];

pub fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Algebra => "algebra",
        Suite::Special => "special",
        Suite::Recurrences => "recurrences",
        Suite::Derivatives => "derivatives",
        Suite::Ode => "ode",
        Suite::IntegralReps => "integral-reps",
        Suite::Barnes => "barnes",
        Suite::Fractional => "fractional",
        Suite::Kinetic => "kinetic",
        Suite::Cr => "cr",
        Suite::All => "all",
    }
}

fn default_points(s: Suite) -> usize {
    match s {
        Suite::Algebra => 1000,
        Suite::Special => 600,
        Suite::Recurrences | Suite::Ode => 200,
        Suite::Derivatives | Suite::Fractional => 100,
        Suite::IntegralReps => 50,
        Suite::Barnes => 10,
        Suite::Kinetic | Suite::Cr => 20,
        Suite::All => 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    AtMost,
    AtLeast,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::AtMost => "<=",
            Relation::AtLeast => ">=",
        }
    }
}

/// Worst value of one identity over a cloud.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub points: usize,
    pub worst: f64,
    pub budget: f64,
    pub relation: Relation,
}

impl Check {
    pub fn at_most(name: &'static str, budget: f64) -> Self {
        Check {
            name,
            points: 0,
            worst: 0.0,
            budget,
            relation: Relation::AtMost,
        }
    }

    pub fn at_least(name: &'static str, budget: f64) -> Self {
        Check {
            name,
            points: 0,
            worst: f64::INFINITY,
            budget,
            relation: Relation::AtLeast,
        }
    }

    pub fn record(&mut self, x: f64) {
        self.points += 1;
        self.worst = match self.relation {
            Relation::AtMost if x.is_nan() => f64::INFINITY,
            Relation::AtMost => self.worst.max(x),
            Relation::AtLeast if x.is_nan() => f64::NEG_INFINITY,
            Relation::AtLeast => self.worst.min(x),
        };
    }

    pub fn passed(&self) -> bool {
        self.points > 0
            && match self.relation {
                Relation::AtMost => self.worst <= self.budget,
                Relation::AtLeast => self.worst >= self.budget,
            }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub n: Option<usize>,
    pub barnes_height: f64,
    pub inject_bug: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            n: None,
            barnes_height: 40.0,
            inject_bug: false,
        }
    }
}

/// Runs `suite` (every suite for [`Suite::All`]) in a fixed order.
pub fn run(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    if suite == Suite::All {
        return ALL.iter().map(|&s| run_one(s, cfg)).collect();
    }
    Ok(vec![run_one(suite, cfg)?])
}

pub fn run_one(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let n = cfg.n.unwrap_or_else(|| default_points(suite)).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(suite as u64);
    let r = &mut rng;
    let checks = match suite {
        Suite::Algebra => algebra(r, n),
        Suite::Special => special(n)?,
        Suite::Recurrences => recurrences(r, n)?,
        Suite::Derivatives => derivatives(r, n)?,
        Suite::Ode => ode(r, n, cfg.inject_bug)?,
        Suite::IntegralReps => integral_reps(r, n)?,
        Suite::Barnes => barnes(r, n, cfg.barnes_height)?,
        Suite::Fractional => fractional(r, n)?,
        Suite::Kinetic => kinetic(r, n)?,
        Suite::Cr => holomorphy(r, n)?,
        Suite::All => unreachable!("expanded by run"),
    };
    Ok(SuiteReport { suite, checks })
}

fn policy() -> TruncationPolicy {
    TruncationPolicy::default()
}

fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Modulus in `[lo, hi]`, argument at least 0.1 away from the negative axis.
fn polar(r: &mut ChaCha8Rng, lo: f64, hi: f64) -> Complex64 {
    let m = r.gen_range(lo..=hi);
    let t = r.gen_range(-PI + 0.1..PI - 0.1);
    Complex64::from_polar(m, t)
}

fn polar_bc(r: &mut ChaCha8Rng, lo: f64, hi: f64) -> Bicomplex {
    Bicomplex::new(polar(r, lo, hi), polar(r, lo, hi))
}

/// Components with real part in `[lo, hi)` and imaginary part in `(-im, im)`.
fn strip(r: &mut ChaCha8Rng, lo: f64, hi: f64, im: f64) -> Bicomplex {
    let mut c = || {
        let y = if im > 0.0 { r.gen_range(-im..im) } else { 0.0 };
        cx(r.gen_range(lo..hi), y)
    };
    Bicomplex::new(c(), c())
}

/// Orders and multipliers of modulus in `[0.1, 5]` (multipliers up to
/// `c_max`), orders kept `1e-3` away from gamma poles of shifts -6..6.
fn params(r: &mut ChaCha8Rng, c_max: f64) -> MRParams {
    loop {
        let p = MRParams::new(polar_bc(r, 0.1, 5.0), polar_bc(r, 0.1, c_max));
        if p.pole_clearance(-6..=6, 1e-3) {
            return p;
        }
    }
}

/// Largest componentwise `|a - b| / max(|a|, |b|)`.
fn rel(a: Bicomplex, b: Bicomplex) -> f64 {
    let d = (a - b).hyperbolic_norm();
    d.relative_to(&a.hyperbolic_norm().sup(b.hyperbolic_norm()))
}

fn fixture(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split(',').collect())
}

fn num(s: &str) -> f64 {
    s.trim().parse().expect("fixture numbers parse")
}

fn algebra(r: &mut ChaCha8Rng, n: usize) -> Vec<Check> {
    let mut round_trip = Check::at_most("idempotent_round_trip_ulps", 4.0);
    let mut norm = Check::at_most("norm_multiplicativity", 1e-14);
    let mut ring = Check::at_most("ring_axioms", 1e-14);
    let mut j_product = Check::at_most("product_matches_j_form", 1e-14);
    let mut inverse = Check::at_most("multiplicative_inverse", 1e-14);
    let value = |r: &mut ChaCha8Rng| {
        let scale = 10f64.powf(r.gen_range(-3.0..3.0));
        let mut p = || r.gen_range(-1.0..1.0) * scale;
        Bicomplex::from_parts(p(), p(), p(), p())
    };
    for _ in 0..n {
        let (z, w, u) = (value(r), value(r), value(r));

        let (w1, w2) = z.j_form();
        let back = Bicomplex::make(w1, w2);
        let size = z.hyperbolic_norm().max();
        let ulps = (back - z).hyperbolic_norm().max() / (f64::EPSILON * size);
        round_trip.record(ulps);

        let (nz, nw, nzw) = (
            z.hyperbolic_norm(),
            w.hyperbolic_norm(),
            (z * w).hyperbolic_norm(),
        );
        let prod = nz * nw;
        norm.record((nzw.n1 - prod.n1).abs() / prod.n1);
        norm.record((nzw.n2 - prod.n2).abs() / prod.n2);

        let (a, b, c) = (nz, nw, u.hyperbolic_norm());
        let sum_scale = a + b + c;
        let defect = |x: Bicomplex, y: Bicomplex, s: HyperbolicNorm| {
            (x - y).hyperbolic_norm().relative_to(&s)
        };
        let mut worst = 0.0f64;
        worst = worst.max(defect((z + w) + u, z + (w + u), sum_scale));
        worst = worst.max(defect(z + w, w + z, sum_scale));
        worst = worst.max(defect((z * w) * u, z * (w * u), a * b * c));
        worst = worst.max(defect(z * w, w * z, a * b));
        worst = worst.max(defect(z * (w + u), z * w + z * u, a * (b + c)));
        worst = worst.max(defect(z * Bicomplex::ONE, z, a));
        worst = worst.max(defect(z + (-z), Bicomplex::ZERO, a));
        ring.record(worst);

        let (x1, x2) = w.j_form();
        let direct = Bicomplex::make(w1 * x1 - w2 * x2, w1 * x2 + w2 * x1);
        let flat = HyperbolicNorm::new(1.0, 1.0).scale(a.max() * b.max());
        j_product.record(defect(z * w, direct, flat));

        if let Ok(inv) = z.recip() {
            inverse.record(defect(
                z * inv,
                Bicomplex::ONE,
                Bicomplex::ONE.hyperbolic_norm(),
            ));
        }
    }
    vec![round_trip, norm, ring, j_product, inverse]
}

fn special(n: usize) -> Result<Vec<Check>> {
    let mut cases = Check::at_most("closed_forms", 1e-12);
    for f in fixture(SPECIAL_CASES).take(n) {
        let v: Vec<f64> = f[1..].iter().map(|s| num(s)).collect();
        let bc = |k: usize| Bicomplex::new(cx(v[k], v[k + 1]), cx(v[k + 2], v[k + 3]));
        let value = eval(&MRParams::new(bc(0), bc(4)), bc(8), &policy())?.value;
        cases.record(rel(value, bc(12)));
    }
    let mut erf = Check::at_most("erf_case", 1e-12);
    let half = MRParams::new(Bicomplex::from_real(0.5), Bicomplex::ONE);
    for f in fixture(ERF_SCALED) {
        let (x, expected) = (num(f[0]), num(f[1]));
        let value = eval(&half, Bicomplex::from_real(x * x), &policy())?.value;
        erf.record(rel(value, Bicomplex::from_real(expected)));
    }
    Ok(vec![cases, erf])
}

fn recurrences(r: &mut ChaCha8Rng, n: usize) -> Result<Vec<Check>> {
    let mut checks: Vec<Check> = Recurrence::ALL
        .iter()
        .map(|id| Check::at_most(id.name(), 1e-10))
        .collect();
    for _ in 0..n {
        let p = params(r, 5.0);
        let z = polar_bc(r, 0.1, 5.0);
        for (check, id) in checks.iter_mut().zip(Recurrence::ALL) {
            check.record(recurrence_residual(id, &p, z, &policy())?.relative());
        }
    }
    let mut dual = Check::at_most("i_negative_integer_dual_path", 1e-10);
    for _ in 0..n {
        let l1 = r.gen_range(0..=4) as f64;
        let l2 = r.gen_range(0..=4) as f64;
        let v = -(Bicomplex::E1 * l1 + Bicomplex::E2 * l2);
        let p = MRParams::new(v, polar_bc(r, 0.1, 5.0));
        let z = polar_bc(r, 0.1, 5.0);
        let a = eval(&p, z, &policy())?.value;
        let b = eval_negative_integer_order(&p, z, &policy())?.value;
        dual.record(rel(a, b));
    }
    checks.push(dual);
    Ok(checks)
}

fn derivatives(r: &mut ChaCha8Rng, n: usize) -> Result<Vec<Check>> {
    let mut fd1 = Check::at_most("closed_form_vs_differences_k1", 1e-6);
    let mut fd2 = Check::at_most("closed_form_vs_differences_k2", 1e-6);
    let mut shift1 = Check::at_most("shifted_order_m1_k1", 1e-9);
    let mut shift2 = Check::at_most("shifted_order_m2_k2", 1e-9);
    let mut lowered = Check::at_most("lowered_order_k2", 1e-9);
    for _ in 0..n {
        let p = params(r, 2.0);
        let z = polar_bc(r, 0.3, 2.0);
        let f = |x: Bicomplex| eval(&p, x, &policy()).map(|e| e.value);
        let d1 = |h: f64| -> Result<Bicomplex> { Ok((f(z + h)? - f(z - h)?) * (0.5 / h)) };
        let d2 = |h: f64| -> Result<Bicomplex> {
            Ok((f(z + h)? - f(z)? * 2.0 + f(z - h)?) * (1.0 / (h * h)))
        };
        // two Richardson levels on steps h, h/2, h/4
        let richardson = |d: &dyn Fn(f64) -> Result<Bicomplex>, h: f64| -> Result<Bicomplex> {
            let (a, b, c) = (d(h)?, d(h / 2.0)?, d(h / 4.0)?);
            let r1 = (b * 4.0 - a) * (1.0 / 3.0);
            let r2 = (c * 4.0 - b) * (1.0 / 3.0);
            Ok((r2 * 16.0 - r1) * (1.0 / 15.0))
        };
        let c1 = derivative_k(&p, z, 1, &policy())?;
        let c2 = derivative_k(&p, z, 2, &policy())?;
        let e1 = richardson(&d1, 4e-3)? - c1;
        let e2 = richardson(&d2, 2e-2)? - c2;
        // absolute for values of order one, relative beyond
        fd1.record(e1.hyperbolic_norm().max() / c1.hyperbolic_norm().max().max(1.0));
        fd2.record(e2.hyperbolic_norm().max() / c2.hyperbolic_norm().max().max(1.0));

        let e = f(z)?;
        shift1.record(rel(
            derivative_shifted(&p, Bicomplex::ONE, z, 1, &policy())?,
            e,
        ));
        let m = Bicomplex::from_real(2.0);
        let raised = derivative_k(&p.with_order(p.v + m), z, 2, &policy())?;
        shift2.record(rel(derivative_shifted(&p, m, z, 2, &policy())?, raised));
        lowered.record(rel(eval(&p.shifted(-2.0), z, &policy())?.value, c2));
    }
    Ok(vec![fd1, fd2, shift1, shift2, lowered])
}

fn ode(r: &mut ChaCha8Rng, n: usize, inject_bug: bool) -> Result<Vec<Check>> {
    let mut residual = Check::at_most("ode_residual", 1e-9);
    let mut control = Check::at_least("sign_flipped_control", 0.1);
    let mut points = 0;
    while points < n {
        let p = params(r, 5.0);
        if !p.guard().admits_beta_integral() {
            continue;
        }
        let z = polar_bc(r, 0.1, 5.0);
        let u = eval(&p, z, &policy())?.value;
        let du = derivative_k(&p, z, 1, &policy())?;
        let d2u = derivative_k(&p, z, 2, &policy())?;
        let sign = if inject_bug { -1.0 } else { 1.0 };
        residual.record(mr_operator(&p, z, u, du * sign, d2u).relative());
        points += 1;
    }
    // E_{0,1}(Z) = exp(Z): the operator with W' negated leaves 2 Z exp(Z)
    for k in 0..8 {
        let t = 2.0 * PI * k as f64 / 8.0;
        let z = Bicomplex::new(
            Complex64::from_polar(1.5, t),
            Complex64::from_polar(0.7, -t),
        );
        let p = MRParams::new(Bicomplex::ZERO, Bicomplex::ONE);
        let w = z.exp();
        control.record(mr_operator(&p, z, w, -w, w).relative());
    }
    Ok(vec![residual, control])
}

fn integral_reps(r: &mut ChaCha8Rng, n: usize) -> Result<Vec<Check>> {
    let quad = QuadratureConfig::default();
    let mut beta = Check::at_most("beta_representation", 1e-7);
    let mut double = Check::at_most("double_integral", 1e-6);
    let mut gamma = Check::at_most("gamma_denominator", 1e-8);
    for _ in 0..n {
        let p = MRParams::new(strip(r, -0.95, 2.0, 2.0), polar_bc(r, 0.1, 2.0));
        let z = polar_bc(r, 0.1, 2.0);
        let exact = eval(&p, z, &policy())?.value;
        beta.record(rel(ir_beta(&p, z, default_terms(&p, z)?, &quad)?, exact));
        gamma.record(rel(
            ir_gamma_denominator(&p, z, default_terms(&p, z)?, &quad)?,
            exact,
        ));

        let q = MRParams::new(strip(r, 0.05, 3.0, 2.0), p.c);
        let m = strip(r, 0.05, 3.0, 2.0);
        let raised = q.with_order(q.v + m);
        let v = ir_double(&q, m, z, default_terms(&raised, z)?, &quad)?;
        double.record(rel(v, eval(&raised, z, &policy())?.value));
    }
    Ok(vec![beta, double, gamma])
}

fn barnes(r: &mut ChaCha8Rng, n: usize, height: f64) -> Result<Vec<Check>> {
    let mut error = Check::at_most("barnes_error", 1e-5);
    let mut tail = Check::at_most("barnes_tail_estimate", 1e-5);
    let mut refinement = Check::at_least("error_ratio_on_doubling", 1.5);
    for _ in 0..n {
        let p = MRParams::new(strip(r, -0.95, 2.0, 2.0), polar_bc(r, 0.3, 2.0));
        // -C Z within 1.1 of the positive axis, so Re(c_i z_i) < 0
        let mut w = || {
            let m = r.gen_range(0.3..2.0);
            let a = PI + r.gen_range(-1.1..1.1);
            cx(m * a.cos(), m * a.sin())
        };
        let z = Bicomplex::new(w(), w()).checked_div(p.c)?;
        let exact = eval(&p, z, &policy())?.value;
        let scale = exact.hyperbolic_norm().max().max(1.0);
        let at = |t: f64| -> Result<(f64, f64)> {
            let mut path = BarnesPath::with_height(t);
            path.tol = f64::INFINITY;
            let e = barnes_eval(&p, z, &path)?;
            Ok((
                (e.value - exact).hyperbolic_norm().max() / scale,
                e.tail.max() / scale,
            ))
        };
        let (e_full, t_full) = at(height)?;
        error.record(e_full);
        tail.record(t_full);
        let (e_half, _) = at(height / 2.0)?;
        let (e_quarter, _) = at(height / 4.0)?;
        // below the rounding floor the ratio carries no information
        for (coarse, fine) in [(e_quarter, e_half), (e_half, e_full)] {
            if coarse > 1e-12 && fine > 1e-12 {
                refinement.record(coarse / fine);
            }
        }
    }
    if refinement.points == 0 {
        refinement.record(f64::INFINITY);
    }
    Ok(vec![error, tail, refinement])
}

fn fractional(r: &mut ChaCha8Rng, n: usize) -> Result<Vec<Check>> {
    let mut examples = Check::at_most("power_rule_examples", 1e-12);
    let real = Bicomplex::from_real;
    let int = |m: f64| FractionalOrder::integral(real(m));
    let der = |m: f64| FractionalOrder::derivative(real(m));
    let t = 0.7;
    examples.record(rel(rl_integral_power(&int(1.0)?, real(0.0), t)?, real(t)));
    examples.record(rel(
        rl_integral_power(&int(0.5)?, real(0.0), t)?,
        real(2.0 / PI.sqrt() * t.sqrt()),
    ));
    examples.record(rel(
        rl_derivative_power(&der(1.0)?, real(2.0), t)?,
        real(2.0 * t),
    ));
    examples.record(
        rl_derivative_power(&der(1.0)?, real(0.0), t)?
            .hyperbolic_norm()
            .max(),
    );
    examples.record(rel(
        rl_derivative_power(&der(0.5)?, real(0.5), t)?,
        real(PI.sqrt() / 2.0),
    ));

    let mut semigroup = Check::at_most("integral_semigroup", 1e-12);
    let mut inverse = Check::at_most("derivative_inverts_integral", 1e-12);
    for _ in 0..n {
        let m1 = strip(r, 0.05, 2.5, 1.0);
        let m2 = strip(r, 0.05, 2.5, 1.0);
        let u = strip(r, -0.9, 3.0, 1.0);
        let t = r.gen_range(0.1..3.0);
        let (i1, i2) = (
            FractionalOrder::integral(m1)?,
            FractionalOrder::integral(m2)?,
        );
        let p = PowerTerm::monomial(u);
        let composed = p.apply(&i2)?.apply(&i1)?.eval(t)?;
        let direct = p.apply(&FractionalOrder::integral(m1 + m2)?)?.eval(t)?;
        semigroup.record(rel(composed, direct));
        let back = p
            .apply(&i1)?
            .apply(&FractionalOrder::derivative(m1)?)?
            .eval(t)?;
        inverse.record(rel(back, p.eval(t)?));
    }

    let mut derivative = Check::at_most("mr_derivative_identity", 1e-10);
    let mut integral = Check::at_most("mr_integral_identity", 1e-10);
    for _ in 0..n {
        let v = strip(r, -0.9, 3.0, 0.0);
        let m = strip(r, 0.05, 2.0, 1.0);
        let c = polar_bc(r, 0.3, 2.0);
        let z0 = polar_bc(r, 0.3, 2.0);
        let t = r.gen_range(0.1..2.0);
        let p = MRParams::new(v, c);
        let log_z0 = z0.log()?;
        let d = rl_apply_mr(&FractionalOrder::derivative(m)?, &p, z0, t, &policy())?.value;
        let lowered = eval(&p.with_order(v - m), z0 * t, &policy())?.value;
        derivative.record(rel(d, (log_z0 * m).exp() * lowered));

        let v = strip(r, -0.9, 3.0, 1.0);
        let p = p.with_order(v);
        let i = rl_apply_mr(&FractionalOrder::integral(m)?, &p, z0, t, &policy())?.value;
        let raised = eval(&p.with_order(v + m), z0 * t, &policy())?.value;
        integral.record(rel(i, (-(log_z0 * m)).exp() * raised));
    }

    let mut checks = vec![examples, semigroup, inverse, derivative, integral];
    let cases: [(&'static str, u32, u32); 6] = [
        ("ode_p1_q2", 1, 2),
        ("ode_p1_q3", 1, 3),
        ("ode_p2_q3", 2, 3),
        ("single_term_q4", 1, 4),
        ("single_term_q5", 1, 5),
        ("single_term_q6", 1, 6),
    ];
    for (name, p, q) in cases {
        let mut check = Check::at_most(name, 1e-8);
        let (pf, qf) = (p as f64, q as f64);
        let lo = (pf - pf / qf - 0.9).max(-0.9);
        for _ in 0..(n / 4).max(1) {
            let v = strip(r, lo, 3.5, 0.0);
            let c = polar_bc(r, 0.3, 2.0);
            let z0 = polar_bc(r, 0.3, 2.0);
            let t = r.gen_range(0.1..2.0);
            check.record(yq_residual(p, q, v, c, z0, t, &policy())?.relative());
        }
        checks.push(check);
    }
    Ok(checks)
}

fn kinetic(r: &mut ChaCha8Rng, n: usize) -> Result<Vec<Check>> {
    let mut oracle = Check::at_most("mittag_leffler_oracle", 1e-10);
    for f in fixture(MITTAG_LEFFLER) {
        let v: Vec<f64> = f.iter().map(|s| num(s)).collect();
        let (nu, c, t, n0, expected) = (v[0], v[1], v[2], v[3], v[4]);
        let problem = KineticProblem::basic(n0, c, Bicomplex::from_real(nu))?;
        let value = kinetic_solve(&problem, &policy())?.eval(t)?.value;
        oracle.record(
            (value - Bicomplex::from_real(expected))
                .hyperbolic_norm()
                .max()
                / n0,
        );
    }

    let mut decay = Check::at_most("first_order_decay", 1e-12);
    for _ in 0..n {
        let c = r.gen_range(0.1..2.0);
        let n0 = r.gen_range(0.5..3.0);
        let t = r.gen_range(0.1..2.0);
        let sol = kinetic_solve(&KineticProblem::basic(n0, c, Bicomplex::ONE)?, &policy())?;
        let value = sol.eval(t)?.value;
        decay.record(
            (value - Bicomplex::from_real(n0 * (-c * t).exp()))
                .hyperbolic_norm()
                .max()
                / n0,
        );
    }

    let quad = QuadratureConfig::default();
    let problems = (n / 4).max(1);
    let mut checks = vec![oracle, decay];
    for (name, kind) in [("verify_basic", 0), ("verify_exp", 1), ("verify_mr", 2)] {
        let mut check = Check::at_most(name, 1e-5);
        for i in 0..problems {
            let v = strip(r, 0.3, 1.8, 0.2);
            let n0 = r.gen_range(0.5..2.0);
            let c = r.gen_range(0.2..2.0);
            let problem = match kind {
                0 => KineticProblem::basic(n0, c, v)?,
                1 => KineticProblem::exp_forced(n0, c, v, polar_bc(r, 0.2, 1.5))?,
                _ => {
                    let cc = polar_bc(r, 0.2, 1.5);
                    let mu = strip(r, -0.4, 1.5, 0.2);
                    let z0 = polar_bc(r, 0.5, 1.5);
                    KineticProblem::mr_forced(n0, c, v, cc, mu, z0, (i % 3) as u32)?
                }
            };
            let sol = kinetic_solve(&problem, &policy())?;
            let grid: Vec<f64> = (0..4).map(|_| r.gen_range(0.1..2.0)).collect();
            for res in kinetic_verify(&problem, &sol, &grid, &quad)? {
                check.record(res.absolute() / n0);
            }
        }
        checks.push(check);
    }
    Ok(checks)
}

/// The value of `e`, or zero with the first error kept in `failed`.
fn guarded(failed: &RefCell<Option<Error>>, e: Result<SeriesValue>) -> Bicomplex {
    match e {
        Ok(v) => v.value,
        Err(e) => {
            failed.borrow_mut().get_or_insert(e);
            Bicomplex::ZERO
        }
    }
}

fn holomorphy(r: &mut ChaCha8Rng, n: usize) -> Result<Vec<Check>> {
    let mut in_order = Check::at_most("holomorphic_in_order", 1e-6);
    let mut entire = Check::at_most("entire_for_integer_order", 1e-6);
    let mut taylor = Check::at_most("taylor_in_order_k60", 1e-10);
    let failed = RefCell::new(None);
    for _ in 0..n {
        let c = polar_bc(r, 0.1, 2.0);
        let z0 = polar_bc(r, 0.3, 2.0);
        let v0 = polar_bc(r, 0.1, 2.0);
        let f = |v: Bicomplex| guarded(&failed, eval(&MRParams::new(v, c), z0, &policy()));
        in_order.record(cr_check(f, v0, 1e-4).max());
        if let Some(e) = failed.take() {
            return Err(e);
        }

        let l1 = r.gen_range(-3..=3) as f64;
        let l2 = r.gen_range(-3..=3) as f64;
        let p = MRParams::new(Bicomplex::E1 * l1 + Bicomplex::E2 * l2, c);
        let z = polar_bc(r, 0.0, 2.0);
        let g = |x: Bicomplex| guarded(&failed, eval(&p, x, &policy()));
        entire.record(cr_check(g, z, 1e-4).max());
        if let Some(e) = failed.take() {
            return Err(e);
        }

        // |log Z0| |V| <= 3 in each component
        let log_z0 = z0.log()?;
        let v = Bicomplex::new(
            polar(r, 0.1, 3.0 / log_z0.z1.norm().max(1.0)),
            polar(r, 0.1, 3.0 / log_z0.z2.norm().max(1.0)),
        );
        let p = MRParams::new(v, c);
        if !p.pole_clearance(0..=0, 1e-3) {
            continue;
        }
        let series = taylor_in_order(&p, z0, 60, &policy())?;
        taylor.record(rel(series, eval(&p, z0, &policy())?.value));
    }
    Ok(vec![in_order, entire, taylor])
}
