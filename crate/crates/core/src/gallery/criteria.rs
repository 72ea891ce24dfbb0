//! The acceptance-criterion check suites. Each suite runs the numbered
//! example values and inequality scans it covers, producing one PASS/FAIL
//! line per value.

use super::{outcome, Check, CriterionOutcome};
use crate::analysis::{
    self, default_mult_grid, equivalence_scan, modular_norm_multiplicativity_check, MultDirection,
};
use crate::constructors::{
    construct_epsilon_tight, construct_target_exponents, construct_widened, example_splice_qcq,
    example_splice_qlq, make_equivalent_power_family,
};
use crate::exponents::{
    lebesgue_exponents, limit_exponents_g, limit_exponents_r, scaling_inequality_check,
};
use crate::grid::GridSpec;
use crate::integrand::Integrand;
use crate::mixed::{
    counterexample_partial_sums, gaussian_family_quadrature, gaussian_family_values,
};
use crate::norms::{luxemburg_norm, power_sum_norm_closed_form, trichotomy_check, TrichotomyCase};
use crate::yf::YoungFunction;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_PI_2, PI};
use std::time::Instant;

fn grid() -> GridSpec {
    GridSpec::default()
}

/// Catalog forms with finite upper exponent, with their exact (q, p).
fn finite_p_catalog() -> Vec<(YoungFunction, f64, f64)> {
    vec![
        (YoungFunction::power(1.5).unwrap(), 1.5, 1.5),
        (YoungFunction::power(2.0).unwrap(), 2.0, 2.0),
        (YoungFunction::power(3.0).unwrap(), 3.0, 3.0),
        (YoungFunction::power_sum(1.0, 2.0).unwrap(), 1.0, 2.0),
        (YoungFunction::power_sum(2.0, 3.0).unwrap(), 2.0, 3.0),
        (YoungFunction::power_log(1.0, 1.0).unwrap(), 1.0, 2.0),
        (YoungFunction::power_log(2.0, 1.0).unwrap(), 2.0, 3.0),
        (YoungFunction::power_log(2.0, 2.0).unwrap(), 2.0, 4.0),
        (example_splice_qlq(), 4.0 / 3.0, 2.0),
        (example_splice_qcq(), 2.0, 48.0 / 17.0),
    ]
}

fn criterion_1() -> CriterionOutcome {
    let start = Instant::now();
    let mut checks = Vec::new();
    let tol = 1e-6;
    for (phi, q_true, p_true) in finite_p_catalog() {
        let e = lebesgue_exponents(&phi, &grid()).unwrap();
        checks.push(Check::numeric(
            format!("q[{}]", phi.name()),
            q_true,
            e.q,
            tol,
        ));
        checks.push(Check::numeric(
            format!("p[{}]", phi.name()),
            p_true,
            e.p,
            tol,
        ));
    }
    let phi = YoungFunction::power_log_shift();
    let e = lebesgue_exponents(&phi, &grid()).unwrap();
    checks.push(Check::numeric("q[power_log_shift]", 2.0, e.q, tol));
    checks.push(Check::predicate(
        "p[power_log_shift] interior maximum",
        "2 < p < 3",
        e.p > 2.0 && e.p < 3.0,
    ));
    let phi = YoungFunction::power_exp(1.0).unwrap();
    let e = lebesgue_exponents(&phi, &grid()).unwrap();
    checks.push(Check::numeric("q[power_exp(1)]", 1.0, e.q, tol));
    checks.push(Check::boolean(
        "p[power_exp(1)] = ∞ flag",
        true,
        e.p.is_infinite(),
    ));
    outcome(
        1,
        "exponent regression over the example catalog",
        5.0,
        start,
        checks,
    )
}

fn random_feasible_tuple(rng: &mut ChaCha8Rng) -> (f64, f64, f64, f64, f64) {
    let p1 = 1.15 + rng.gen::<f64>() * 1.35;
    let p = p1 + 0.2 + rng.gen::<f64>() * 1.3;
    let p2 = p + 0.2 + rng.gen::<f64>() * 1.3;
    let r1 = 1.0 + (p1 - 1.0) * (0.3 + rng.gen::<f64>() * 0.55);
    let r2 = p2 + 0.3 + rng.gen::<f64>() * 2.0;
    (p1, p, p2, r1, r2)
}

fn criterion_2(seed: u64) -> CriterionOutcome {
    let start = Instant::now();
    let mut checks = Vec::new();
    let g = grid();
    let vgrid = GridSpec::new(1e-6, 1e6, 150);

    let (phi, _) = construct_target_exponents(1.5, 2.0, 3.0, 1.2, 4.0).unwrap();
    let e = lebesgue_exponents(&phi, &g).unwrap();
    checks.push(Check::numeric("target(1.5,2,3,1.2,4): q", 1.5, e.q, 1e-5));
    checks.push(Check::numeric("target(1.5,2,3,1.2,4): p", 3.0, e.p, 1e-5));
    let report = phi.validate(&vgrid);
    checks.push(Check::predicate(
        "target(1.5,2,3,1.2,4): validate",
        "zero knot mismatches",
        report.knot_mismatches.is_empty() && report.is_valid(),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst_q = 0.0f64;
    let mut worst_p = 0.0f64;
    let mut all_valid = true;
    let mut all_close = true;
    for _ in 0..20 {
        let (p1, p, p2, r1, r2) = random_feasible_tuple(&mut rng);
        let (phi, _) = construct_target_exponents(p1, p, p2, r1, r2).unwrap();
        let e = lebesgue_exponents(&phi, &g).unwrap();
        worst_q = worst_q.max((e.q - p1).abs());
        worst_p = worst_p.max((e.p - p2).abs());
        all_close &= (e.q - p1).abs() < 1e-5 && (e.p - p2).abs() < 1e-5;
        let rep = phi.validate(&vgrid);
        all_valid &= rep.knot_mismatches.is_empty() && rep.is_valid();
    }
    checks.push(Check::predicate(
        "20 random feasible tuples: measured (q,p) within 1e-5",
        format!("worst |q-p1| = {worst_q:.2e}, worst |p-p2| = {worst_p:.2e}"),
        all_close,
    ));
    checks.push(Check::predicate(
        "20 random feasible tuples: validate",
        "zero knot mismatches on every output",
        all_valid,
    ));
    outcome(
        2,
        "constructor targeting of prescribed exponents",
        30.0,
        start,
        checks,
    )
}

fn criterion_3() -> CriterionOutcome {
    let start = Instant::now();
    let mut checks = Vec::new();
    let base = YoungFunction::power_log_shift();
    let (psi, _) = construct_widened(&base, 1.5, 3.0, 1.2, 4.0).unwrap();
    let e = lebesgue_exponents(&psi, &grid()).unwrap();
    checks.push(Check::predicate(
        "widened q below target",
        format!("q_Psi = {:.6} < 1.5", e.q),
        e.q < 1.5,
    ));
    checks.push(Check::predicate(
        "widened p above target",
        format!("p_Psi = {:.6} > 3", e.p),
        e.p.is_finite() && e.p > 3.0,
    ));
    let rep = equivalence_scan(&psi, &base, &grid());
    checks.push(Check::predicate(
        "widened stays equivalent to the base",
        format!("scan verdict finite, c_scan = {:.4e}", rep.c_scan),
        rep.is_finite(),
    ));
    outcome(3, "widening around t² ln(2+t)", 10.0, start, checks)
}

fn criterion_4() -> CriterionOutcome {
    let start = Instant::now();
    let mut checks = Vec::new();
    let base = YoungFunction::power_sum(2.0, 3.0).unwrap();
    let (q_true, p_true) = (2.0, 3.0);
    let mut gaps = Vec::new();
    for n in [1e2, 1e3, 1e4] {
        let t = construct_epsilon_tight(&base, 2.5, n).unwrap();
        let e = lebesgue_exponents(&t.psi, &grid()).unwrap();
        let eps_meas = (e.p - p_true).max(q_true - e.q).max(0.0);
        let eps = t.gap_bound.max(eps_meas);
        gaps.push((n, eps));
    }
    checks.push(Check::predicate(
        "exponent gaps decrease monotonically",
        format!(
            "eps(1e2) = {:.3e}, eps(1e3) = {:.3e}, eps(1e4) = {:.3e}",
            gaps[0].1, gaps[1].1, gaps[2].1
        ),
        gaps[1].1 <= gaps[0].1 && gaps[2].1 <= gaps[1].1,
    ));
    checks.push(Check::predicate(
        "eps(1e4) < 0.02",
        format!("eps(1e4) = {:.3e}", gaps[2].1),
        gaps[2].1 < 0.02,
    ));
    outcome(4, "ε-tightening on t² + t³ at r = 2.5", 10.0, start, checks)
}

/// The Cardano display ∛(1/2 + √(1/4 − π³/6³)) + ∛(1/2 − √(1/4 − π³/6³)),
/// frozen after independent high-precision evaluation. The value printed
/// in the acceptance list (1.49603) is off in its fourth decimal; the
/// display itself evaluates to 1.49636 (see the decisions ledger).
const CARDANO_DISPLAY: f64 = 1.496_357_516_083_256_7;

fn criterion_5() -> CriterionOutcome {
    let start = Instant::now();
    let mut checks = Vec::new();

    let lam = power_sum_norm_closed_form(FRAC_PI_2, 1.0, 2.0, 3.0).unwrap();
    checks.push(Check::numeric(
        "closed form vs Cardano display",
        CARDANO_DISPLAY,
        lam,
        1e-12,
    ));
    checks.push(Check::numeric(
        "closed form vs printed ≈1.496",
        1.496,
        lam,
        5e-4,
    ));
    {
        // informational: the acceptance list prints 1.49603 for this value
        let delta = (lam - 1.49603).abs();
        checks.push(Check {
            name: "note: the display value rounds to 1.49636, not 1.49603".into(),
            expected: "informational".into(),
            actual: format!("|λ − 1.49603| = {delta:.3e}"),
            abs_err: 0.0,
            passed: true,
        });
    }

    let f = Integrand::simple_with_moments(2.0, FRAC_PI_2, 3.0, 1.0).unwrap();
    let phi = YoungFunction::power_sum(2.0, 3.0).unwrap();
    let r = luxemburg_norm(&f, &phi).unwrap();
    checks.push(Check::numeric(
        "bisection agrees with closed form",
        lam,
        r.norm,
        1e-8,
    ));

    let v = trichotomy_check(&f, &phi).unwrap();
    checks.push(Check::boolean(
        "trichotomy: case 1 (1 < norm ≤ modular)",
        true,
        v.case == TrichotomyCase::NormAboveOne && v.ordering_ok && v.power_bounds_ok,
    ));
    checks.push(Check::numeric(
        "modular = 1 + π/2",
        1.0 + FRAC_PI_2,
        v.modular,
        1e-9,
    ));
    outcome(
        5,
        "Luxemburg norm values for the Cardano example",
        2.0,
        start,
        checks,
    )
}

fn criterion_6() -> CriterionOutcome {
    let start = Instant::now();
    let mut checks = Vec::new();
    let phi_const = PI + (PI / 2.0).sqrt();
    for n in 2..=10u32 {
        let nf = n as f64;
        let (sum, l21) = gaussian_family_quadrature(nf).unwrap();
        let (_, l21_cf) = gaussian_family_values(nf);
        checks.push(Check::numeric(
            format!("‖f_{n}‖_L1 + ‖f_{n}‖_L2 (quadrature)"),
            phi_const,
            sum,
            1e-4,
        ));
        checks.push(Check::numeric(
            format!("‖f_{n}‖_L21 (quadrature vs closed form)"),
            l21_cf,
            l21,
            1e-4,
        ));
    }
    outcome(
        6,
        "Gaussian family norms are n-independent / quarter-power",
        60.0,
        start,
        checks,
    )
}

fn criterion_7() -> CriterionOutcome {
    let start = Instant::now();
    let mut checks = Vec::new();
    let s100 = counterexample_partial_sums(100).unwrap();
    let s10k = counterexample_partial_sums(10_000).unwrap();

    // independent series-asymptotics oracle: Σ_{2}^{N} n^(-5/4) equals
    // (ζ(5/4) − 1) minus the Euler–Maclaurin tail 4(N + 1/2)^(-1/4)
    let zeta54_minus_1 = 3.595_111_825_842_943_4;
    let phi_const = PI + (PI / 2.0).sqrt();
    let em = |n: f64| zeta54_minus_1 - 4.0 * (n + 0.5).powf(-0.25);
    checks.push(Check::numeric(
        "Φ-bound(1e2) matches series asymptotics",
        phi_const * em(100.0),
        s100.phi_norm_bound,
        1e-3 * phi_const,
    ));
    checks.push(Check::numeric(
        "Φ-bound(1e4) matches series asymptotics",
        phi_const * em(10_000.0),
        s10k.phi_norm_bound,
        1e-3 * phi_const,
    ));
    let growth = s10k.phi_norm_bound / s100.phi_norm_bound - 1.0;
    checks.push(Check::numeric(
        "Φ-bound growth 1e2 → 1e4 equals the ζ-tail prediction",
        0.370_248_794_926_801_4,
        growth,
        5e-3,
    ));
    checks.push(Check::predicate(
        "Φ-bound stays below its infinite-series limit",
        format!(
            "{:.6} < {:.6}",
            s10k.phi_norm_bound,
            phi_const * zeta54_minus_1
        ),
        s10k.phi_norm_bound < phi_const * zeta54_minus_1,
    ));
    checks.push(Check {
        name: "note: the series tail 4N^(-1/4) makes the growth ~37%, not single-digit".into(),
        expected: "informational".into(),
        actual: format!("measured growth {:.1}%", growth * 100.0),
        abs_err: 0.0,
        passed: true,
    });

    let c = PI.powf(0.75) / 2f64.powf(0.25);
    let increase = s10k.l21_partial - s100.l21_partial;
    checks.push(Check::numeric(
        "L21 lower bound increases by C·ln(100) ± 1%",
        c * 100f64.ln(),
        increase,
        0.01 * c * 100f64.ln(),
    ));
    outcome(
        7,
        "counterexample series: bounded Φ-norm, diverging L21",
        1.0,
        start,
        checks,
    )
}

fn trichotomy_pairs() -> Vec<(Integrand, YoungFunction)> {
    let phis = vec![
        YoungFunction::power_sum(2.0, 3.0).unwrap(),
        YoungFunction::power_sum(2.0, 3.0).unwrap().normalized(),
        YoungFunction::power(2.0).unwrap(),
        YoungFunction::power_sum(1.0, 2.0).unwrap(),
        YoungFunction::power_log_shift().normalized(),
    ];
    let witnesses = vec![
        Integrand::simple_with_moments(2.0, FRAC_PI_2, 3.0, 1.0).unwrap(),
        Integrand::indicator(1.0, 1.0).unwrap(),
        Integrand::indicator(2.0, 0.3).unwrap(),
        Integrand::indicator(0.5, 1.7).unwrap(),
    ];
    let mut pairs = Vec::new();
    for phi in &phis {
        for w in &witnesses {
            pairs.push((w.clone(), phi.clone()));
        }
    }
    pairs
}

fn criterion_8(seed: u64) -> CriterionOutcome {
    let start = Instant::now();
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let g = grid();

    // (a) scaling inequalities on 10³ random pairs per form and side
    let mut violations_a = 0usize;
    for (phi, _, _) in finite_p_catalog() {
        let e = lebesgue_exponents(&phi, &g).unwrap();
        let contracting: Vec<(f64, f64)> = (0..1000)
            .map(|_| (rng.gen::<f64>(), 10f64.powf(rng.gen_range(-3.0..3.0))))
            .collect();
        let expanding: Vec<(f64, f64)> = (0..1000)
            .map(|_| {
                (
                    1.0 + 9.0 * rng.gen::<f64>(),
                    10f64.powf(rng.gen_range(-3.0..3.0)),
                )
            })
            .collect();
        violations_a += scaling_inequality_check(&phi, &e, &contracting).len();
        violations_a += scaling_inequality_check(&phi, &e, &expanding).len();
    }
    checks.push(Check::predicate(
        "(a) scaling inequalities, 10³ samples each side per form",
        format!("{violations_a} violations"),
        violations_a == 0,
    ));

    // (b) normalized bounds, items 3-5
    let mut violations_b = 0usize;
    for (phi, _, _) in finite_p_catalog() {
        violations_b += crate::exponents::normalized_bounds_check(&phi, &g)
            .unwrap()
            .len();
    }
    checks.push(Check::predicate(
        "(b) normalized-form bounds items 3-5",
        format!("{violations_b} violations"),
        violations_b == 0,
    ));

    // (c) trichotomy plus power bounds on 20 witness/Φ pairs
    let mut violations_c = 0usize;
    for (f, phi) in trichotomy_pairs() {
        let v = trichotomy_check(&f, &phi).unwrap();
        if !(v.ordering_ok && v.power_bounds_ok) {
            violations_c += 1;
        }
    }
    checks.push(Check::predicate(
        "(c) trichotomy and power bounds on 20 pairs",
        format!("{violations_c} violations"),
        violations_c == 0,
    ));

    // (d) G/H integrability equivalences on 6 catalog cases
    let y_grid = GridSpec::new(1e-3, 1e2, 48);
    let cases: Vec<(Integrand, YoungFunction)> = vec![
        (
            Integrand::gauss_quad(3.0).unwrap(),
            YoungFunction::power_sum(1.0, 2.0).unwrap(),
        ),
        (
            Integrand::gauss_quad(7.0).unwrap(),
            YoungFunction::power_sum(1.0, 2.0).unwrap(),
        ),
        (
            Integrand::gauss_quad(2.0).unwrap(),
            YoungFunction::power(2.0).unwrap(),
        ),
        (
            Integrand::separable(
                Integrand::cauchy_power(1.0).unwrap(),
                Integrand::indicator(1.0, 1.0).unwrap(),
            )
            .unwrap(),
            YoungFunction::power(2.0).unwrap(),
        ),
        (
            Integrand::separable(
                Integrand::cauchy_power(0.25).unwrap(),
                Integrand::indicator(1.0, 1.0).unwrap(),
            )
            .unwrap(),
            YoungFunction::power_sum(2.0, 3.0).unwrap(),
        ),
        (
            Integrand::separable(
                Integrand::cauchy_power(0.25).unwrap(),
                Integrand::indicator(1.0, 1.0).unwrap(),
            )
            .unwrap(),
            YoungFunction::power_log(2.0, 1.0).unwrap(),
        ),
    ];
    let mut consistent = 0usize;
    for (f, phi) in &cases {
        let rep = crate::mixed::profiles_g_h(f, phi, &y_grid).unwrap();
        if rep.consistent {
            consistent += 1;
        }
    }
    checks.push(Check::predicate(
        "(d) G/H integrability equivalences on 6 cases",
        format!("{consistent}/6 verdict-consistent"),
        consistent == cases.len(),
    ));

    // (e) submultiplicative modular bound for t² + t³
    let phi = YoungFunction::power_sum(2.0, 3.0).unwrap();
    let mult = analysis::multiplicativity_scan(&phi, &default_mult_grid());
    let sub_c = mult.sub_c.unwrap_or(f64::NAN);
    let witnesses = vec![
        Integrand::simple_with_moments(2.0, FRAC_PI_2, 3.0, 1.0).unwrap(),
        Integrand::indicator(1.0, 1.0).unwrap(),
        Integrand::indicator(3.0, 0.4).unwrap(),
        Integrand::indicator(0.25, 2.0).unwrap(),
        Integrand::indicator(5.0, 0.9).unwrap(),
    ];
    let violations_e =
        modular_norm_multiplicativity_check(&phi, sub_c, MultDirection::Sub, &witnesses)
            .unwrap()
            .len();
    checks.push(Check::predicate(
        "(e) modular ≤ C·Φ(norm) with the scanned sub-C",
        format!("C = {sub_c:.6}, {violations_e} violations"),
        sub_c.is_finite() && violations_e == 0,
    ));

    // (f) r-limits equal g-limits where the latter exist
    let mut worst_f = 0.0f64;
    let mut all_f = true;
    for (phi, _, _) in finite_p_catalog() {
        let (p0, p_inf) = limit_exponents_g(&phi);
        let (p0, p_inf) = (p0.expect("finite-p catalog has g-limits"), p_inf.unwrap());
        let rl = limit_exponents_r(&phi, &g).unwrap();
        worst_f = worst_f
            .max((rl.r0 - p0).abs())
            .max((rl.r_inf - p_inf).abs());
        all_f &= (rl.r0 - p0).abs() < 1e-3 && (rl.r_inf - p_inf).abs() < 1e-3;
    }
    {
        let phi = YoungFunction::power_log_shift();
        let (p0, p_inf) = limit_exponents_g(&phi);
        let rl = limit_exponents_r(&phi, &g).unwrap();
        let d = (rl.r0 - p0.unwrap())
            .abs()
            .max((rl.r_inf - p_inf.unwrap()).abs());
        worst_f = worst_f.max(d);
        all_f &= d < 1e-3;
    }
    checks.push(Check::predicate(
        "(f) r-limits match g-limits within 1e-3",
        format!("worst deviation {worst_f:.2e}"),
        all_f,
    ));

    outcome(8, "inequality property suites", 120.0, start, checks)
}

fn criterion_9() -> CriterionOutcome {
    let start = Instant::now();
    let mut checks = Vec::new();
    let g = grid();
    let square = YoungFunction::power(2.0).unwrap();

    for phi in [example_splice_qlq(), example_splice_qcq()] {
        let rep = equivalence_scan(&phi, &square, &g);
        checks.push(Check::predicate(
            format!("{} ~ t² scans finite", phi.name()),
            format!("c_scan = {:.4}", rep.c_scan),
            rep.is_finite(),
        ));
    }
    let fam = make_equivalent_power_family(2.0, 4.0, 2.0, 100.0).unwrap();
    let rep = equivalence_scan(&fam, &square, &g);
    checks.push(Check::predicate(
        "equivalent power family ~ t² scans finite",
        format!("c_scan = {:.4e}", rep.c_scan),
        rep.is_finite(),
    ));

    let a = YoungFunction::power_log(2.0, 1.0).unwrap();
    let b = YoungFunction::power_sum(2.0, 3.0).unwrap();
    checks.push(Check::boolean(
        "t²ln(1+t) vs t²+t³ scans diverging",
        true,
        !equivalence_scan(&a, &b, &g).is_finite(),
    ));
    let c = YoungFunction::flat_origin();
    let d = YoungFunction::exp_minus_one();
    checks.push(Check::boolean(
        "flat_origin vs e^t − 1 scans diverging",
        true,
        !equivalence_scan(&c, &d, &g).is_finite(),
    ));

    let witness = Integrand::cauchy_power(0.25).unwrap();
    let w = analysis::witness_separates(&witness, &a, &b).unwrap();
    checks.push(Check::boolean(
        "witness (1+x²)^(-1/4): finite modular under t²ln(1+t)",
        true,
        w.modular_phi.is_finite(),
    ));
    checks.push(Check::boolean(
        "witness (1+x²)^(-1/4): divergence verdict under t²+t³",
        true,
        w.modular_psi.is_infinite(),
    ));
    outcome(
        9,
        "equivalence scan verdicts and the separating witness",
        10.0,
        start,
        checks,
    )
}

fn criterion_10() -> CriterionOutcome {
    let start = Instant::now();
    let mut checks = Vec::new();
    let pure: Vec<(YoungFunction, f64)> = vec![
        (YoungFunction::power(1.5).unwrap(), 1.5),
        (YoungFunction::power(2.0).unwrap(), 2.0),
        (YoungFunction::power(3.0).unwrap(), 3.0),
    ];
    for (phi, p) in pure {
        let rep = analysis::multiplicativity_scan(&phi, &default_mult_grid());
        checks.push(Check::boolean(
            format!("{} flagged pure power", phi.name()),
            true,
            rep.is_pure_power,
        ));
        checks.push(Check::numeric(
            format!("{} detected exponent", phi.name()),
            p,
            rep.detected_p.unwrap_or(f64::NAN),
            1e-9,
        ));
    }
    let others = vec![
        YoungFunction::power_sum(1.0, 2.0).unwrap(),
        YoungFunction::power_sum(2.0, 3.0).unwrap(),
        YoungFunction::power_log(1.0, 1.0).unwrap(),
        YoungFunction::power_log(2.0, 1.0).unwrap(),
        YoungFunction::power_log_shift(),
        YoungFunction::power_exp(1.0).unwrap(),
        YoungFunction::exp_minus_one(),
        YoungFunction::dual_23(),
        example_splice_qlq(),
        example_splice_qcq(),
    ];
    let mut false_positives = Vec::new();
    for phi in others {
        let rep = analysis::multiplicativity_scan(&phi, &default_mult_grid());
        if rep.is_pure_power {
            false_positives.push(phi.name().to_string());
        }
    }
    checks.push(Check::predicate(
        "no non-power catalog entry flagged",
        format!("false positives: {false_positives:?}"),
        false_positives.is_empty(),
    ));
    outcome(10, "pure-power detection", 30.0, start, checks)
}

pub fn run_criterion(id: u8, seed: u64) -> CriterionOutcome {
    match id {
        1 => criterion_1(),
        2 => criterion_2(seed),
        3 => criterion_3(),
        4 => criterion_4(),
        5 => criterion_5(),
        6 => criterion_6(),
        7 => criterion_7(),
        8 => criterion_8(seed),
        9 => criterion_9(),
        10 => criterion_10(),
        _ => panic!("criteria are numbered 1..=10"),
    }
}

pub fn run_all(seed: u64) -> Vec<CriterionOutcome> {
    (1..=10).map(|id| run_criterion(id, seed)).collect()
}
