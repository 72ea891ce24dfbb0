//! Lebesgue exponents q_Φ, p_Φ (inf/sup of g_Φ), the limit exponents of
//! g_Φ and r_Φ, the Δ₂ verdict, and the certified inequality checks built
//! on them.

use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::numerics::extrapolate::{
    limit_of_decade_sequence, limit_with_log_model, LimitEstimate, TailBehavior,
};
use crate::numerics::roots::{golden_max, golden_min};
use crate::yf::YoungFunction;

/// Ceiling above which a boundary-trending g_Φ is declared unbounded.
pub const G_CEILING: f64 = 1e6;

/// Measured Lebesgue exponents. `p` is `f64::INFINITY` when the scan
/// certifies unbounded growth of g_Φ at a boundary.
#[derive(Debug, Clone, Copy)]
pub struct LebesgueExponents {
    pub q: f64,
    pub p: f64,
    /// Estimated absolute uncertainty of `q` (and `p`).
    pub q_error: f64,
    pub p_error: f64,
    /// Location where the extremum was attained; 0.0 or INFINITY when it is
    /// an asymptotic limit.
    pub q_at: f64,
    pub p_at: f64,
    /// The sub-window of the requested grid on which Φ was numerically
    /// evaluable. A window clipped inside the requested range is reported
    /// here, per the open question about the finite search domain.
    pub window: (f64, f64),
}

impl LebesgueExponents {
    pub fn p_is_finite(&self) -> bool {
        self.p.is_finite()
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Delta2Verdict {
    Holds { constant: f64, at: f64 },
    Fails { counterexample_t: f64, ratio: f64 },
}

impl Delta2Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Delta2Verdict::Holds { .. })
    }

    pub fn constant(&self) -> Option<f64> {
        match self {
            Delta2Verdict::Holds { constant, .. } => Some(*constant),
            Delta2Verdict::Fails { .. } => None,
        }
    }
}

/// Everything the exponent machinery can say about one Young function.
#[derive(Debug, Clone)]
pub struct ExponentReport {
    pub q_phi: f64,
    pub p_phi: f64,
    pub p0: Option<f64>,
    pub p_inf: Option<f64>,
    pub r0: Option<f64>,
    pub r_inf: Option<f64>,
    pub delta2: Delta2Verdict,
    pub grid: GridSpec,
    pub window: (f64, f64),
}

#[derive(Debug, Clone, Copy)]
enum End {
    Zero,
    Infinity,
}

/// g_Φ sampled along t = 10^(±k); `ks` records the decade indices that
/// evaluated cleanly.
fn g_decade_samples(phi: &YoungFunction, end: End, k_max: usize) -> (Vec<usize>, Vec<f64>) {
    let mut ks = Vec::new();
    let mut gs = Vec::new();
    for k in 1..=k_max {
        let t = match end {
            End::Zero => 10f64.powi(-(k as i32)),
            End::Infinity => 10f64.powi(k as i32),
        };
        if let Ok(g) = phi.g_ratio(t) {
            ks.push(k);
            gs.push(g);
        }
    }
    (ks, gs)
}

fn g_end_limit(phi: &YoungFunction, end: End) -> LimitEstimate {
    let (ks, gs) = g_decade_samples(phi, end, 16);
    limit_of_decade_sequence(&ks, &gs)
}

/// Monotone growth toward a boundary, combined with either a ceiling
/// crossing or a numerically clipped window, certifies divergence there.
/// Returns the witness sample.
fn boundary_blowup(
    samples_toward_end: &[(f64, f64)],
    clipped: bool,
    ceiling: f64,
) -> Option<(f64, f64)> {
    let n = samples_toward_end.len();
    if n < 4 {
        return None;
    }
    let tail = &samples_toward_end[n.saturating_sub(12)..];
    let monotone = tail.windows(2).all(|w| w[1].1 >= w[0].1 * (1.0 - 1e-9));
    let growth = tail.last().unwrap().1 / tail.first().unwrap().1.max(f64::MIN_POSITIVE);
    let hit_ceiling = tail.last().unwrap().1 > ceiling;
    if monotone && growth >= 1.5 && (clipped || hit_ceiling) {
        Some(*tail.last().unwrap())
    } else {
        None
    }
}

/// q_Φ = inf g_Φ and p_Φ = sup g_Φ over (0, ∞), measured by a grid scan,
/// golden-section refinement around every interior grid extremum, and
/// extrapolated boundary limits. p_Φ is reported as ∞ when g_Φ trends
/// monotonically upward into a ceiling crossing or past the evaluable
/// window. Uses the default ceiling [`G_CEILING`].
pub fn lebesgue_exponents(phi: &YoungFunction, grid: &GridSpec) -> Result<LebesgueExponents> {
    lebesgue_exponents_with_ceiling(phi, grid, G_CEILING)
}

/// [`lebesgue_exponents`] with a caller-chosen divergence ceiling.
pub fn lebesgue_exponents_with_ceiling(
    phi: &YoungFunction,
    grid: &GridSpec,
    ceiling: f64,
) -> Result<LebesgueExponents> {
    if !phi.is_strict() {
        return Err(Error::NonStrict(format!(
            "lebesgue_exponents needs a strict Young function, {} is flagged non-strict",
            phi.name()
        )));
    }
    let window = phi.usable_window(grid.lo, grid.hi);
    let clipped_lo = window.0 > grid.lo * 1.0001;
    let clipped_hi = window.1 < grid.hi * 0.9999;

    let mut ts = Vec::new();
    let mut gs = Vec::new();
    for t in GridSpec::new(window.0, window.1, grid.points).iter() {
        if let Ok(g) = phi.g_ratio(t) {
            ts.push(t);
            gs.push(g);
        }
    }
    if ts.len() < 8 {
        return Err(Error::Domain(format!(
            "g_ratio evaluable at only {} grid points for {}",
            ts.len(),
            phi.name()
        )));
    }

    // interior extrema candidates, refined in log-t
    let mut q = f64::INFINITY;
    let mut p = f64::NEG_INFINITY;
    let (mut q_at, mut p_at) = (ts[0], ts[0]);
    let (mut q_err, mut p_err) = (1e-12f64, 1e-12f64);
    let consider_min =
        |val: f64, at: f64, err: f64, q: &mut f64, q_at: &mut f64, q_err: &mut f64| {
            if val < *q {
                *q = val;
                *q_at = at;
                *q_err = err;
            }
        };
    let consider_max =
        |val: f64, at: f64, err: f64, p: &mut f64, p_at: &mut f64, p_err: &mut f64| {
            if val > *p {
                *p = val;
                *p_at = at;
                *p_err = err;
            }
        };

    for (&t, &g) in ts.iter().zip(gs.iter()) {
        consider_min(g, t, 1e-12, &mut q, &mut q_at, &mut q_err);
        consider_max(g, t, 1e-12, &mut p, &mut p_at, &mut p_err);
    }

    // refine around strict interior extrema of the sampled sequence
    let g_of_u = |u: f64| phi.g_ratio(u.exp()).unwrap_or(f64::NAN);
    for i in 1..ts.len() - 1 {
        let is_min = gs[i] < gs[i - 1] && gs[i] <= gs[i + 1];
        let is_max = gs[i] > gs[i - 1] && gs[i] >= gs[i + 1];
        if !(is_min || is_max) {
            continue;
        }
        let (a, b) = (ts[i - 1].ln(), ts[i + 1].ln());
        if is_min {
            let (u, v) = golden_min(g_of_u, a, b, 1e-13);
            if v.is_finite() {
                consider_min(v, u.exp(), 1e-12, &mut q, &mut q_at, &mut q_err);
            }
        } else {
            let (u, v) = golden_max(g_of_u, a, b, 1e-13);
            if v.is_finite() {
                consider_max(v, u.exp(), 1e-12, &mut p, &mut p_at, &mut p_err);
            }
        }
    }

    // boundary handling: divergence verdicts first, then extrapolated limits
    let toward_zero: Vec<(f64, f64)> = ts
        .iter()
        .zip(gs.iter())
        .map(|(&t, &g)| (t, g))
        .take(24)
        .rev()
        .collect();
    let reversed: Vec<(f64, f64)> = {
        let n = ts.len();
        ts[n - 24.min(n)..]
            .iter()
            .zip(gs[n - 24.min(n)..].iter())
            .map(|(&t, &g)| (t, g))
            .collect()
    };
    let blow_zero = boundary_blowup(&toward_zero, clipped_lo, ceiling);
    let blow_inf = boundary_blowup(&reversed, clipped_hi, ceiling);

    let mut p_infinite_at = None;
    if blow_inf.is_some() {
        p_infinite_at = Some(f64::INFINITY);
    }
    if blow_zero.is_some() {
        p_infinite_at = Some(0.0);
    }

    if p_infinite_at.is_none() {
        let lim0 = g_end_limit(phi, End::Zero);
        match lim0.behavior {
            TailBehavior::Converging => {
                consider_min(lim0.value, 0.0, lim0.error, &mut q, &mut q_at, &mut q_err);
                consider_max(lim0.value, 0.0, lim0.error, &mut p, &mut p_at, &mut p_err);
            }
            TailBehavior::Diverging if clipped_lo => p_infinite_at = Some(0.0),
            _ => {}
        }
        let lim_inf = g_end_limit(phi, End::Infinity);
        match lim_inf.behavior {
            TailBehavior::Converging => {
                consider_min(
                    lim_inf.value,
                    f64::INFINITY,
                    lim_inf.error,
                    &mut q,
                    &mut q_at,
                    &mut q_err,
                );
                consider_max(
                    lim_inf.value,
                    f64::INFINITY,
                    lim_inf.error,
                    &mut p,
                    &mut p_at,
                    &mut p_err,
                );
            }
            TailBehavior::Diverging if clipped_hi => p_infinite_at = Some(f64::INFINITY),
            _ => {}
        }
    }

    if let Some(at) = p_infinite_at {
        p = f64::INFINITY;
        p_at = at;
        p_err = 0.0;
    }

    Ok(LebesgueExponents {
        q,
        p,
        q_error: q_err.max(1e-12),
        p_error: if p.is_finite() { p_err.max(1e-12) } else { 0.0 },
        q_at,
        p_at,
        window,
    })
}

/// Limits of g_Φ at 0⁺ and ∞. Absent when the dyadic schedule fails the
/// Cauchy criterion (relative 1e-4), signalling possible oscillation or
/// divergence.
pub fn limit_exponents_g(phi: &YoungFunction) -> (Option<f64>, Option<f64>) {
    let pick = |est: LimitEstimate| {
        if est.converged(1e-4) {
            Some(est.value)
        } else {
            None
        }
    };
    (
        pick(g_end_limit(phi, End::Zero)),
        pick(g_end_limit(phi, End::Infinity)),
    )
}

/// The sandwich certificate of the r-limit: beyond `k_eps_inf`,
/// t^(r_inf − ε) < Φ(t) < t^(r_inf + ε) on sampled points, and mirrored
/// below `1/k_eps_zero`.
#[derive(Debug, Clone, Copy)]
pub struct SandwichCheck {
    pub epsilon: f64,
    pub k_eps_zero: f64,
    pub k_eps_inf: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct RLimits {
    pub r0: f64,
    pub r_inf: f64,
    pub sandwich: SandwichCheck,
}

/// Limits of r_Φ(t) = ln Φ̃(t)/ln t at 0⁺ and ∞. Existence is guaranteed
/// for Δ₂ functions, so a non-Δ₂ argument is an error.
///
/// The estimator solves the model A + B·ln k/k + C/k along t = 10^(±k),
/// which captures the ln t tails the logarithm-carrying catalog forms
/// produce; it never consults g_Φ, keeping the two limit routes
/// independent.
pub fn limit_exponents_r(phi: &YoungFunction, grid: &GridSpec) -> Result<RLimits> {
    if !phi.is_strict() {
        return Err(Error::NonStrict(phi.name().to_string()));
    }
    let exps = lebesgue_exponents(phi, grid)?;
    if !exps.p_is_finite() {
        return Err(Error::Delta2Required(format!(
            "r-limits are only guaranteed for Δ₂ functions; p_Phi = ∞ for {}",
            phi.name()
        )));
    }

    let schedule = [6usize, 12, 24, 48, 96];
    let estimate = |end: End| -> LimitEstimate {
        let mut ks = Vec::new();
        let mut rs = Vec::new();
        for &k in &schedule {
            let t = match end {
                End::Zero => 10f64.powi(-(k as i32)),
                End::Infinity => 10f64.powi(k as i32),
            };
            if let Ok(r) = phi.r_exponent(t) {
                if r.is_finite() {
                    ks.push(k);
                    rs.push(r);
                }
            }
        }
        if ks.len() >= 3 {
            limit_with_log_model(&ks, &rs)
        } else {
            // narrow window: fall back to the plain decade schedule
            let mut ks2 = Vec::new();
            let mut rs2 = Vec::new();
            for k in 2..=16usize {
                let t = match end {
                    End::Zero => 10f64.powi(-(k as i32)),
                    End::Infinity => 10f64.powi(k as i32),
                };
                if let Ok(r) = phi.r_exponent(t) {
                    ks2.push(k);
                    rs2.push(r);
                }
            }
            limit_of_decade_sequence(&ks2, &rs2)
        }
    };

    let e0 = estimate(End::Zero);
    let einf = estimate(End::Infinity);
    let (r0, r_inf) = (e0.value, einf.value);

    // item-4 sandwich scan with ε = 0.1
    let eps = 0.1;
    let window = phi.usable_window(grid.lo, grid.hi);
    let pts = GridSpec::new(window.0, window.1, grid.points.max(128)).points_vec();
    let in_band_inf = |t: f64| {
        let v = phi.value(t);
        t.powf(r_inf - eps) < v && v < t.powf(r_inf + eps)
    };
    let in_band_zero = |t: f64| {
        let v = phi.value(t);
        t.powf(r0 + eps) < v && v < t.powf(r0 - eps)
    };
    // smallest K beyond which every sampled t > K satisfies the band
    let mut k_inf = f64::INFINITY;
    for (i, &t) in pts.iter().enumerate() {
        if t > 1.0 && pts[i..].iter().all(|&s| in_band_inf(s)) {
            k_inf = t;
            break;
        }
    }
    let mut k_zero = f64::INFINITY;
    for (i, &t) in pts.iter().enumerate().rev() {
        if t < 1.0 && pts[..=i].iter().all(|&s| in_band_zero(s)) {
            k_zero = 1.0 / t;
            break;
        }
    }
    let sandwich = SandwichCheck {
        epsilon: eps,
        k_eps_zero: k_zero,
        k_eps_inf: k_inf,
        holds: k_inf.is_finite() && k_zero.is_finite(),
    };

    Ok(RLimits {
        r0,
        r_inf,
        sandwich,
    })
}

/// Scan Φ(2t)/Φ(t) for the Δ₂ constant, or a counterexample where the
/// ratio grows monotonically past the ceiling (or out of the evaluable
/// window).
pub fn delta2_check(phi: &YoungFunction, grid: &GridSpec) -> Delta2Verdict {
    let window = phi.usable_window(grid.lo, grid.hi);
    let window = (window.0, window.1 / 2.0); // 2t must stay evaluable
    if !(window.0 < window.1) {
        // nowhere evaluable: nothing to certify
        return Delta2Verdict::Fails {
            counterexample_t: grid.lo,
            ratio: f64::INFINITY,
        };
    }
    let clipped_lo = window.0 > grid.lo * 1.0001;
    let clipped_hi = window.1 < grid.hi * 0.4999;

    let ratio_at = |t: f64| -> Option<f64> {
        let a = phi.value(t);
        let b = phi.value(2.0 * t);
        if a > 0.0 && a.is_finite() && b.is_finite() {
            let r = b / a;
            r.is_finite().then_some(r)
        } else {
            None
        }
    };

    let mut ts = Vec::new();
    let mut rs = Vec::new();
    for t in GridSpec::new(window.0, window.1, grid.points).iter() {
        if let Some(r) = ratio_at(t) {
            ts.push(t);
            rs.push(r);
        }
    }
    if ts.is_empty() {
        return Delta2Verdict::Fails {
            counterexample_t: window.0,
            ratio: f64::INFINITY,
        };
    }

    let toward_zero: Vec<(f64, f64)> = ts
        .iter()
        .zip(rs.iter())
        .map(|(&t, &r)| (t, r))
        .take(24)
        .rev()
        .collect();
    let n = ts.len();
    let toward_inf: Vec<(f64, f64)> = ts[n - 24.min(n)..]
        .iter()
        .zip(rs[n - 24.min(n)..].iter())
        .map(|(&t, &r)| (t, r))
        .collect();
    if let Some((t, r)) = boundary_blowup(&toward_zero, clipped_lo, G_CEILING) {
        return Delta2Verdict::Fails {
            counterexample_t: t,
            ratio: r,
        };
    }
    if let Some((t, r)) = boundary_blowup(&toward_inf, clipped_hi, G_CEILING) {
        return Delta2Verdict::Fails {
            counterexample_t: t,
            ratio: r,
        };
    }

    // bounded: constant = sup of the ratio, refined like an extremum scan
    let mut c = f64::NEG_INFINITY;
    let mut at = ts[0];
    for (&t, &r) in ts.iter().zip(rs.iter()) {
        if r > c {
            c = r;
            at = t;
        }
    }
    let ratio_of_u = |u: f64| ratio_at(u.exp()).unwrap_or(f64::NAN);
    for i in 1..ts.len() - 1 {
        if rs[i] > rs[i - 1] && rs[i] >= rs[i + 1] {
            let (u, v) = golden_max(ratio_of_u, ts[i - 1].ln(), ts[i + 1].ln(), 1e-13);
            if v.is_finite() && v > c {
                c = v;
                at = u.exp();
            }
        }
    }
    // end limits of the ratio (2^p0 and 2^p_inf when those exist)
    for end in [End::Zero, End::Infinity] {
        let mut ks = Vec::new();
        let mut vs = Vec::new();
        for k in 1..=16usize {
            let t = match end {
                End::Zero => 10f64.powi(-(k as i32)),
                End::Infinity => 10f64.powi(k as i32),
            };
            if let Some(r) = ratio_at(t) {
                ks.push(k);
                vs.push(r);
            }
        }
        let est = limit_of_decade_sequence(&ks, &vs);
        if est.converged(1e-4) && est.value > c {
            c = est.value;
            at = match end {
                End::Zero => 0.0,
                End::Infinity => f64::INFINITY,
            };
        }
    }
    Delta2Verdict::Holds { constant: c, at }
}

/// One failed scaling-inequality sample.
#[derive(Debug, Clone, Copy)]
pub struct ScalingViolation {
    pub scale: f64,
    pub t: f64,
    /// Which bound failed, as printed in reports.
    pub side: &'static str,
    pub lhs: f64,
    pub rhs: f64,
}

/// Check c^(p_Φ) Φ(t) ≤ Φ(ct) ≤ c^(q_Φ) Φ(t) for c ∈ [0, 1] and
/// C^(q_Φ) Φ(t) ≤ Φ(Ct) ≤ C^(p_Φ) Φ(t) for C ≥ 1 on the given samples.
///
/// The comparison tolerance is 1e-9 plus |ln scale| times the measured
/// exponent uncertainty, since a bound evaluated with an exponent known to
/// ±δ shifts by a factor e^(δ|ln c|).
pub fn scaling_inequality_check(
    phi: &YoungFunction,
    exps: &LebesgueExponents,
    samples: &[(f64, f64)],
) -> Vec<ScalingViolation> {
    let mut violations = Vec::new();
    for &(c, t) in samples {
        if !(c >= 0.0) || !(t > 0.0) {
            continue;
        }
        let v = phi.value(t);
        let vc = phi.value(c * t);
        if !v.is_finite() || !vc.is_finite() || v == 0.0 {
            continue;
        }
        let ln_c = if c > 0.0 { c.ln().abs() } else { 0.0 };
        let tol = 1e-9 + ln_c * (exps.q_error.max(exps.p_error) + 1e-12);
        let (lo_exp, hi_exp) = if c <= 1.0 {
            (exps.p, exps.q)
        } else {
            (exps.q, exps.p)
        };
        let lower = c.powf(lo_exp) * v;
        let upper = c.powf(hi_exp) * v;
        if lower.is_finite() && vc < lower * (1.0 - tol) - 1e-300 {
            violations.push(ScalingViolation {
                scale: c,
                t,
                side: "lower",
                lhs: lower,
                rhs: vc,
            });
        }
        if upper.is_finite() && vc > upper * (1.0 + tol) + 1e-300 {
            violations.push(ScalingViolation {
                scale: c,
                t,
                side: "upper",
                lhs: vc,
                rhs: upper,
            });
        }
    }
    violations
}

/// One failed normalized-form bound.
#[derive(Debug, Clone, Copy)]
pub struct NormalizedBoundViolation {
    pub t: f64,
    pub item: u8,
    pub lhs: f64,
    pub mid: f64,
    pub rhs: f64,
}

/// Verify, for Ψ = Φ/Φ(1), the normalized bounds
/// (3) t^(p) ≤ Ψ(t) ≤ t^(q) for t ≤ 1 and reversed for t > 1,
/// (4) q t^(p−1) ≤ Ψ′(t) ≤ p t^(q−1) for t ≤ 1 and the mirrored form
///     q t^(q−1) ≤ Ψ′(t) ≤ p t^(p−1) for t > 1,
/// (5) t^(1/q) ≤ Ψ⁻¹(t) ≤ t^(1/p) for t ≤ 1 and reversed for t ≥ 1.
pub fn normalized_bounds_check(
    phi: &YoungFunction,
    grid: &GridSpec,
) -> Result<Vec<NormalizedBoundViolation>> {
    let psi = phi.normalized();
    let exps = lebesgue_exponents(&psi, grid)?;
    if !exps.p_is_finite() {
        return Err(Error::Delta2Required(format!(
            "normalized bounds need finite p_Phi ({})",
            phi.name()
        )));
    }
    let (q, p) = (exps.q, exps.p);
    let mut violations = Vec::new();
    let window = psi.usable_window(grid.lo, grid.hi);
    let err = exps.q_error.max(exps.p_error) + 1e-12;
    let band =
        |t: f64, lo: f64, v: f64, hi: f64, item: u8, out: &mut Vec<NormalizedBoundViolation>| {
            let tol = 1e-6 + t.ln().abs() * err;
            if v < lo * (1.0 - tol) - 1e-300 || v > hi * (1.0 + tol) + 1e-300 {
                out.push(NormalizedBoundViolation {
                    t,
                    item,
                    lhs: lo,
                    mid: v,
                    rhs: hi,
                });
            }
        };
    for t in GridSpec::new(window.0, window.1, grid.points).iter() {
        let v = psi.value(t);
        let d = psi.slope(t);
        if !v.is_finite() || !d.is_finite() {
            continue;
        }
        if t <= 1.0 {
            band(t, t.powf(p), v, t.powf(q), 3, &mut violations);
            band(
                t,
                q * t.powf(p - 1.0),
                d,
                p * t.powf(q - 1.0),
                4,
                &mut violations,
            );
        } else {
            band(t, t.powf(q), v, t.powf(p), 3, &mut violations);
            band(
                t,
                q * t.powf(q - 1.0),
                d,
                p * t.powf(p - 1.0),
                4,
                &mut violations,
            );
        }
    }
    // item 5 on a y-grid: the bounds hold for every y > 0
    for y in GridSpec::new(1e-6, 1e6, grid.points.min(256)).iter() {
        match psi.eval_inverse(y) {
            Ok(t_inv) => {
                let (lo, hi) = if y <= 1.0 {
                    (y.powf(1.0 / q), y.powf(1.0 / p))
                } else {
                    (y.powf(1.0 / p), y.powf(1.0 / q))
                };
                let tol = 1e-6 + y.ln().abs() * err;
                if t_inv < lo * (1.0 - tol) || t_inv > hi * (1.0 + tol) {
                    violations.push(NormalizedBoundViolation {
                        t: y,
                        item: 5,
                        lhs: lo,
                        mid: t_inv,
                        rhs: hi,
                    });
                }
            }
            Err(_) => continue,
        }
    }
    Ok(violations)
}

/// Aggregate report: both exponent pairs, both limit pairs, and the Δ₂
/// verdict.
pub fn exponent_report(phi: &YoungFunction, grid: &GridSpec) -> Result<ExponentReport> {
    let exps = lebesgue_exponents(phi, grid)?;
    let (p0, p_inf) = limit_exponents_g(phi);
    let delta2 = delta2_check(phi, grid);
    let (r0, r_inf) = if exps.p_is_finite() {
        let rl = limit_exponents_r(phi, grid)?;
        (Some(rl.r0), Some(rl.r_inf))
    } else {
        (None, None)
    };
    Ok(ExponentReport {
        q_phi: exps.q,
        p_phi: exps.p,
        p0,
        p_inf,
        r0,
        r_inf,
        delta2,
        grid: *grid,
        window: exps.window,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors;
    use crate::yf::YoungFunction;
    use approx::assert_relative_eq;

    fn grid() -> GridSpec {
        GridSpec::default()
    }

    #[test]
    fn power_exponents_are_exact() {
        for p in [1.0, 1.7, 2.0, 3.5] {
            let phi = YoungFunction::power(p).unwrap();
            let e = lebesgue_exponents(&phi, &grid()).unwrap();
            assert_relative_eq!(e.q, p, epsilon = 1e-9);
            assert_relative_eq!(e.p, p, epsilon = 1e-9);
        }
    }

    #[test]
    fn splice_qlq_exponents() {
        let phi = constructors::example_splice_qlq();
        let e = lebesgue_exponents(&phi, &grid()).unwrap();
        assert_relative_eq!(e.q, 4.0 / 3.0, epsilon = 1e-8);
        assert_relative_eq!(e.p, 2.0, epsilon = 1e-8);
    }

    #[test]
    fn splice_qcq_exponents() {
        let phi = constructors::example_splice_qcq();
        let e = lebesgue_exponents(&phi, &grid()).unwrap();
        assert_relative_eq!(e.q, 2.0, epsilon = 1e-8);
        assert_relative_eq!(e.p, 48.0 / 17.0, epsilon = 1e-8);
    }

    #[test]
    fn power_log_exponents() {
        for (n, m) in [(1.0, 1.0), (2.0, 1.0), (2.0, 2.0)] {
            let phi = YoungFunction::power_log(n, m).unwrap();
            let e = lebesgue_exponents(&phi, &grid()).unwrap();
            assert_relative_eq!(e.q, n, epsilon = 1e-6);
            assert_relative_eq!(e.p, n + m, epsilon = 1e-6);
        }
    }

    #[test]
    fn power_exp_has_infinite_upper_exponent() {
        let phi = YoungFunction::power_exp(1.0).unwrap();
        let e = lebesgue_exponents(&phi, &grid()).unwrap();
        assert_relative_eq!(e.q, 1.0, epsilon = 1e-6);
        assert!(e.p.is_infinite());
    }

    #[test]
    fn power_sum_exponents() {
        let phi = YoungFunction::power_sum(2.0, 3.0).unwrap();
        let e = lebesgue_exponents(&phi, &grid()).unwrap();
        assert_relative_eq!(e.q, 2.0, epsilon = 1e-9);
        assert_relative_eq!(e.p, 3.0, epsilon = 1e-9);
    }

    #[test]
    fn non_strict_is_rejected() {
        let phi = YoungFunction::flat_origin();
        assert!(matches!(
            lebesgue_exponents(&phi, &grid()),
            Err(Error::NonStrict(_))
        ));
    }

    #[test]
    fn grid_refinement_is_stable() {
        let forms = [
            YoungFunction::power_sum(2.0, 3.0).unwrap(),
            constructors::example_splice_qlq(),
            constructors::example_splice_qcq(),
            YoungFunction::power_log(2.0, 1.0).unwrap(),
        ];
        for phi in &forms {
            let e1 = lebesgue_exponents(phi, &grid()).unwrap();
            let e2 = lebesgue_exponents(phi, &grid().refined(2)).unwrap();
            let e4 = lebesgue_exponents(phi, &grid().refined(4)).unwrap();
            assert!((e1.q - e2.q).abs() < 1e-6 && (e1.q - e4.q).abs() < 1e-6);
            assert!((e1.p - e2.p).abs() < 1e-6 && (e1.p - e4.p).abs() < 1e-6);
        }
    }

    #[test]
    fn limits_g_for_power_sum_by_direct_evaluation() {
        // oracle: g(t) = (2t² + 3t³)/(t² + t³) evaluated near the ends
        let phi = YoungFunction::power_sum(2.0, 3.0).unwrap();
        let (p0, p_inf) = limit_exponents_g(&phi);
        assert_relative_eq!(p0.unwrap(), 2.0, epsilon = 1e-8);
        assert_relative_eq!(p_inf.unwrap(), 3.0, epsilon = 1e-8);
    }

    #[test]
    fn limits_g_for_power_log_shift() {
        let phi = YoungFunction::power_log_shift();
        let (p0, p_inf) = limit_exponents_g(&phi);
        assert_relative_eq!(p0.unwrap(), 2.0, epsilon = 1e-7);
        assert_relative_eq!(p_inf.unwrap(), 2.0, epsilon = 1e-7);
    }

    #[test]
    fn limits_g_absent_sides() {
        let phi = YoungFunction::power_exp(1.0).unwrap();
        let (p0, p_inf) = limit_exponents_g(&phi);
        assert_relative_eq!(p0.unwrap(), 1.0, epsilon = 1e-7);
        assert!(p_inf.is_none());
    }

    #[test]
    fn r_limits_power_and_power_log() {
        let g = grid();
        let phi = YoungFunction::power(2.5).unwrap();
        let rl = limit_exponents_r(&phi, &g).unwrap();
        assert_relative_eq!(rl.r0, 2.5, epsilon = 1e-9);
        assert_relative_eq!(rl.r_inf, 2.5, epsilon = 1e-9);
        assert!(rl.sandwich.holds);

        // ln(1+t) ~ t at 0 gives r0 = n + m; ~ ln t at ∞ gives r_inf = n
        let phi = YoungFunction::power_log(2.0, 1.0).unwrap();
        let rl = limit_exponents_r(&phi, &g).unwrap();
        assert_relative_eq!(rl.r0, 3.0, epsilon = 1e-6);
        assert_relative_eq!(rl.r_inf, 2.0, epsilon = 1e-6);

        let phi = YoungFunction::power_log_shift();
        let rl = limit_exponents_r(&phi, &g).unwrap();
        assert_relative_eq!(rl.r0, 2.0, epsilon = 1e-6);
        assert_relative_eq!(rl.r_inf, 2.0, epsilon = 1e-6);
    }

    #[test]
    fn r_limits_need_delta2() {
        let phi = YoungFunction::power_exp(1.0).unwrap();
        assert!(matches!(
            limit_exponents_r(&phi, &grid()),
            Err(Error::Delta2Required(_))
        ));
    }

    #[test]
    fn delta2_power_constant_is_two_to_p() {
        for p in [1.0, 2.0, 3.0] {
            let phi = YoungFunction::power(p).unwrap();
            let v = delta2_check(&phi, &grid());
            assert!(v.holds());
            assert_relative_eq!(v.constant().unwrap(), 2f64.powf(p), epsilon = 1e-9);
        }
    }

    #[test]
    fn delta2_failures() {
        let v = delta2_check(&YoungFunction::power_exp(1.0).unwrap(), &grid());
        assert!(!v.holds());
        let v = delta2_check(&YoungFunction::flat_origin(), &grid());
        match v {
            Delta2Verdict::Fails {
                counterexample_t, ..
            } => {
                assert!(
                    counterexample_t < 1.0,
                    "counterexample should be at small t"
                );
            }
            _ => panic!("flat_origin satisfies Δ₂?"),
        }
        let v = delta2_check(&YoungFunction::exp_minus_one(), &grid());
        assert!(!v.holds());
    }

    #[test]
    fn delta2_agrees_with_finite_p() {
        let strict_forms = [
            YoungFunction::power(2.0).unwrap(),
            YoungFunction::power_sum(1.0, 2.0).unwrap(),
            YoungFunction::power_log(2.0, 2.0).unwrap(),
            YoungFunction::power_log_shift(),
            YoungFunction::power_exp(1.0).unwrap(),
            YoungFunction::dual_23(),
        ];
        for phi in &strict_forms {
            let e = lebesgue_exponents(phi, &grid()).unwrap();
            let d = delta2_check(phi, &grid());
            assert_eq!(d.holds(), e.p_is_finite(), "{}", phi.name());
        }
    }

    #[test]
    fn q_at_least_one_and_at_most_p() {
        let forms = [
            YoungFunction::power(1.0).unwrap(),
            YoungFunction::power_sum(1.0, 2.0).unwrap(),
            YoungFunction::power_sum(2.0, 3.0).unwrap(),
            YoungFunction::power_log(1.0, 1.0).unwrap(),
            YoungFunction::power_log(2.0, 2.0).unwrap(),
            YoungFunction::power_log_shift(),
            YoungFunction::power_exp(1.0).unwrap(),
            YoungFunction::exp_minus_one(),
            YoungFunction::dual_23(),
            constructors::example_splice_qlq(),
            constructors::example_splice_qcq(),
        ];
        for phi in &forms {
            let e = lebesgue_exponents(phi, &grid()).unwrap();
            assert!(e.q >= 1.0 - 1e-9, "{}: q = {}", phi.name(), e.q);
            assert!(
                e.q <= e.p + 1e-12,
                "{}: q = {} > p = {}",
                phi.name(),
                e.q,
                e.p
            );
        }
    }

    #[test]
    fn low_ceiling_does_not_flag_bounded_forms() {
        // a ceiling below the true supremum must not turn a bounded g
        // into an infinity verdict: the blowup rule also needs growth
        let phi = YoungFunction::power_sum(2.0, 3.0).unwrap();
        let e = lebesgue_exponents_with_ceiling(&phi, &grid(), 2.5).unwrap();
        assert!(e.p.is_finite());
        assert_relative_eq!(e.p, 3.0, epsilon = 1e-9);
    }

    #[test]
    fn scaled_variant_has_identical_exponents() {
        for phi in [
            YoungFunction::power_sum(2.0, 3.0).unwrap(),
            constructors::example_splice_qcq(),
            YoungFunction::power_log(2.0, 1.0).unwrap(),
        ] {
            let e = lebesgue_exponents(&phi, &grid()).unwrap();
            let en = lebesgue_exponents(&phi.normalized(), &grid()).unwrap();
            assert!((e.q - en.q).abs() < 1e-12);
            assert!((e.p - en.p).abs() < 1e-12);
        }
    }

    #[test]
    fn r_limits_lie_between_lebesgue_exponents() {
        for phi in [
            YoungFunction::power_sum(2.0, 3.0).unwrap(),
            YoungFunction::power_log(2.0, 1.0).unwrap(),
            constructors::example_splice_qlq(),
            YoungFunction::power_log_shift(),
        ] {
            let e = lebesgue_exponents(&phi, &grid()).unwrap();
            let rl = limit_exponents_r(&phi, &grid()).unwrap();
            let slack = 1e-6;
            assert!(
                rl.r0 >= e.q - slack && rl.r0 <= e.p + slack,
                "{}",
                phi.name()
            );
            assert!(
                rl.r_inf >= e.q - slack && rl.r_inf <= e.p + slack,
                "{}",
                phi.name()
            );
        }
    }

    #[test]
    fn scaling_inequality_power_is_equality() {
        let phi = YoungFunction::power(2.0).unwrap();
        let e = lebesgue_exponents(&phi, &grid()).unwrap();
        let samples: Vec<(f64, f64)> = vec![(0.3, 2.0), (0.9, 10.0), (2.5, 0.7), (7.0, 3.0)];
        assert!(scaling_inequality_check(&phi, &e, &samples).is_empty());
        // and both sides are tight: c^p Φ(t) = Φ(ct)
        for (c, t) in samples {
            assert_relative_eq!(
                c.powf(2.0) * phi.value(t),
                phi.value(c * t),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn normalized_bounds_hold_for_catalog() {
        for phi in [
            YoungFunction::power(2.0).unwrap(),
            YoungFunction::power_sum(2.0, 3.0).unwrap(),
            constructors::example_splice_qcq(),
        ] {
            let v = normalized_bounds_check(&phi, &grid()).unwrap();
            assert!(v.is_empty(), "{}: {:?}", phi.name(), &v[..v.len().min(3)]);
        }
    }
}
