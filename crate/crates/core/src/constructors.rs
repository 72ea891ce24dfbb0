//! Spliced Young-function constructions: the fixed two-exponent examples,
//! the equivalent power family, exact exponent targeting over L^p, the
//! widened family over a general base, and the ε-tight family.

use crate::error::{Error, Result};
use crate::exponents::{lebesgue_exponents, limit_exponents_g};
use crate::grid::GridSpec;
use crate::numerics::roots::bisect;
use crate::yf::{Segment, SegmentKind, YoungFunction};
use std::sync::Arc;

/// Knots, splice coefficients, and the derived ratios of a construction.
/// For the ε-tight family `alpha = 1/n`, `beta = n`, `k` is k_n and
/// `l_alpha` is l_n.
#[derive(Debug, Clone)]
pub struct ConstructorParams {
    pub alpha: f64,
    pub beta: f64,
    pub r1: f64,
    pub r2: f64,
    pub c: [f64; 3],
    pub d: [f64; 3],
    pub k: f64,
    pub l_alpha: f64,
    pub m_alpha_beta: Option<f64>,
}

fn power_seg(lo: f64, hi: f64, coeff: f64, exponent: f64, offset: f64) -> Segment {
    Segment {
        lo,
        hi,
        kind: SegmentKind::Power {
            coeff,
            exponent,
            offset,
        },
    }
}

fn scaled_seg(lo: f64, hi: f64, base: &YoungFunction, factor: f64, offset: f64) -> Segment {
    Segment {
        lo,
        hi,
        kind: SegmentKind::ScaledBase {
            base: Arc::new(base.clone()),
            factor,
            offset,
        },
    }
}

/// The quadratic–linear–quadratic splice ½t² | t − ½ | ¼t² + ½, with
/// q_Φ = 4/3 and p_Φ = 2 despite being equivalent to t².
pub fn example_splice_qlq() -> YoungFunction {
    YoungFunction::splice(
        "splice_qlq",
        vec![
            power_seg(0.0, 1.0, 0.5, 2.0, 0.0),
            power_seg(1.0, 2.0, 1.0, 1.0, -0.5),
            power_seg(2.0, f64::INFINITY, 0.25, 2.0, 0.5),
        ],
    )
    .expect("fixed splice")
}

/// The quadratic–cubic–quadratic splice (3/2)t² | t³ + ½ | 3t² − 7/2,
/// with q_Φ = 2 and p_Φ = 48/17, also equivalent to t².
pub fn example_splice_qcq() -> YoungFunction {
    YoungFunction::splice(
        "splice_qcq",
        vec![
            power_seg(0.0, 1.0, 1.5, 2.0, 0.0),
            power_seg(1.0, 2.0, 1.0, 3.0, 0.5),
            power_seg(2.0, f64::INFINITY, 3.0, 2.0, -3.5),
        ],
    )
    .expect("fixed splice")
}

/// The two fixed example splices with exact rational coefficients.
pub fn make_example_splices() -> Vec<YoungFunction> {
    vec![example_splice_qlq(), example_splice_qcq()]
}

/// Three-piece splice equivalent to t^r1 whose middle piece carries
/// exponent r2 on (a, b]. As b grows the far Lebesgue exponent approaches
/// r2.
pub fn make_equivalent_power_family(r1: f64, r2: f64, a: f64, b: f64) -> Result<YoungFunction> {
    if !(r1 > 1.0) || !(r2 > 1.0) || r1 == r2 {
        return Err(Error::InvalidParameter(format!(
            "equivalent power family needs r1, r2 > 1 and r1 != r2, got {r1}, {r2}"
        )));
    }
    if !(1.0 < a && a < b) {
        return Err(Error::InvalidParameter(format!(
            "equivalent power family needs 1 < a < b, got a={a}, b={b}"
        )));
    }
    let c1 = a.powf(r2 - r1);
    let d1 = (1.0 / r1 - 1.0 / r2) * a.powf(r2);
    let c2 = b.powf(r2 - r1);
    let d2 = (1.0 / r1 - 1.0 / r2) * (a.powf(r2) - b.powf(r2));
    YoungFunction::splice(
        format!("equiv_power(r1={r1},r2={r2},a={a},b={b})"),
        vec![
            power_seg(0.0, a, c1 / r1, r1, 0.0),
            power_seg(a, b, 1.0 / r2, r2, d1),
            power_seg(b, f64::INFINITY, c2 / r1, r1, d2),
        ],
    )
}

/// Build Φ_{γ,δ} with L^Φ = L^p, q_Φ = p1, and p_Φ = p2.
///
/// γ solves p1 = r1/(1 + k γ^(−r1)) in closed form (bisection fallback),
/// then δ solves p2 = r2/(1 + l_γ δ^(−r2)).
pub fn construct_target_exponents(
    p1: f64,
    p: f64,
    p2: f64,
    r1: f64,
    r2: f64,
) -> Result<(YoungFunction, ConstructorParams)> {
    if !(1.0 < p1 && p1 < p && p < p2 && p2.is_finite()) {
        return Err(Error::Infeasible(format!(
            "need 1 < p1 < p < p2 < inf (strict), got p1={p1}, p={p}, p2={p2}"
        )));
    }
    if !(1.0 < r1 && r1 < p1) {
        return Err(Error::Infeasible(format!(
            "need 1 < r1 < p1, got r1={r1}, p1={p1}"
        )));
    }
    if !(r2 > p2) {
        return Err(Error::Infeasible(format!(
            "need r2 > p2, got r2={r2}, p2={p2}"
        )));
    }

    let d1 = 1.0 / p - 1.0 / r1;
    let k = r1 * d1; // always negative here
    let h = |alpha: f64| r1 / (1.0 + k * alpha.powf(-r1));
    let mut gamma = ((r1 / p1 - 1.0) / k).powf(-1.0 / r1);
    if !gamma.is_finite() || (h(gamma) - p1).abs() > 1e-9 * p1 {
        gamma = bisect(|a| h(a) - p1, 1.0 + 1e-6, 1e8, 1e-14, 300)?.0;
    }
    if !(gamma > 1.0) {
        return Err(Error::Infeasible(format!("solved gamma = {gamma} <= 1")));
    }

    let c2 = gamma.powf(r1 - r2);
    let d2 = gamma.powf(r1) * (1.0 / r1 - 1.0 / r2) + d1;
    let l_gamma = r2 * d2 / c2;
    let hp = |beta: f64| r2 / (1.0 + l_gamma * beta.powf(-r2));
    let mut delta = ((r2 / p2 - 1.0) / l_gamma).powf(-1.0 / r2);
    if !delta.is_finite() || (hp(delta) - p2).abs() > 1e-9 * p2 {
        delta = bisect(|b| hp(b) - p2, gamma * (1.0 + 1e-9), 1e8, 1e-14, 300)?.0;
    }
    if !(delta > gamma) {
        return Err(Error::Infeasible(format!(
            "solved delta = {delta} <= gamma = {gamma}"
        )));
    }

    let c3 = gamma.powf(r1 - r2) * delta.powf(r2 - p);
    let d3 = gamma.powf(r1 - r2) * delta.powf(r2) * (1.0 / r2 - 1.0 / p) + d2;
    let m = p * d3 / c3;

    let phi = YoungFunction::splice(
        format!("target(p1={p1},p={p},p2={p2})"),
        vec![
            power_seg(0.0, 1.0, 1.0 / p, p, 0.0),
            power_seg(1.0, gamma, 1.0 / r1, r1, d1),
            power_seg(gamma, delta, c2 / r2, r2, d2),
            power_seg(delta, f64::INFINITY, c3 / p, p, d3),
        ],
    )?;
    let params = ConstructorParams {
        alpha: gamma,
        beta: delta,
        r1,
        r2,
        c: [1.0, c2, c3],
        d: [d1, d2, d3],
        k,
        l_alpha: l_gamma,
        m_alpha_beta: Some(m),
    };
    Ok((phi, params))
}

fn widened_splice(
    base: &YoungFunction,
    alpha: f64,
    beta: f64,
    r1: f64,
    r2: f64,
) -> Result<(YoungFunction, ConstructorParams)> {
    let g1 = base.g_ratio(1.0)?;
    let g_beta = base.g_ratio(beta)?;
    let dphi1 = base.eval_deriv(1.0)?;
    let dphi_beta = base.eval_deriv(beta)?;

    let d1 = 1.0 / g1 - 1.0 / r1;
    let k = r1 * d1;
    let c2 = alpha.powf(r1 - r2);
    let d2 = alpha.powf(r1) * (1.0 / r1 - 1.0 / r2) + d1;
    let l_alpha = r2 * d2 / c2;
    let c3 = alpha.powf(r1 - r2) * beta.powf(r2 - 1.0);
    let d3 = alpha.powf(r1 - r2) * beta.powf(r2) * (1.0 / r2 - 1.0 / g_beta) + d2;
    let m = dphi_beta * d3 / c3;

    let psi = YoungFunction::splice(
        format!("widened({}, alpha={alpha}, beta={beta})", base.name()),
        vec![
            scaled_seg(0.0, 1.0, base, 1.0 / dphi1, 0.0),
            power_seg(1.0, alpha, 1.0 / r1, r1, d1),
            power_seg(alpha, beta, c2 / r2, r2, d2),
            scaled_seg(beta, f64::INFINITY, base, c3 / dphi_beta, d3),
        ],
    )?;
    let params = ConstructorParams {
        alpha,
        beta,
        r1,
        r2,
        c: [1.0, c2, c3],
        d: [d1, d2, d3],
        k,
        l_alpha,
        m_alpha_beta: Some(m),
    };
    Ok((psi, params))
}

/// Build Ψ equivalent to `base` with q_Ψ < p1 and p_Ψ > p2 (strict), by
/// doubling the knots until the measured exponents certify both
/// inequalities. The underlying existence proof only guarantees the
/// limits, not a solvable equation, hence the search.
pub fn construct_widened(
    base: &YoungFunction,
    p1: f64,
    p2: f64,
    r1: f64,
    r2: f64,
) -> Result<(YoungFunction, ConstructorParams)> {
    let grid = GridSpec::default();
    let base_exps = lebesgue_exponents(base, &grid)?;
    if !base_exps.p_is_finite() {
        return Err(Error::Delta2Required(format!(
            "{} has p_Phi = inf",
            base.name()
        )));
    }
    if !(1.0 < p1 && p1 < base_exps.q && base_exps.p < p2) {
        return Err(Error::Infeasible(format!(
            "need 1 < p1 < q_base <= p_base < p2, got p1={p1}, q_base={:.6}, p_base={:.6}, p2={p2}",
            base_exps.q, base_exps.p
        )));
    }
    if !(1.0 < r1 && r1 < p1) || !(r2 > p2) {
        return Err(Error::Infeasible(format!(
            "need 1 < r1 < p1 and r2 > p2, got r1={r1}, r2={r2}"
        )));
    }

    let mut alpha = 2.0;
    let mut gamma = None;
    for _ in 0..60 {
        let (psi, _) = widened_splice(base, alpha, 2.0 * alpha, r1, r2)?;
        let e = lebesgue_exponents(&psi, &grid)?;
        if e.q < p1 {
            gamma = Some(alpha);
            break;
        }
        alpha *= 2.0;
    }
    let gamma = gamma
        .ok_or_else(|| Error::NonConvergence("alpha doubling never pushed q below p1".into()))?;

    let mut beta = 2.0 * gamma;
    for _ in 0..60 {
        let (psi, params) = widened_splice(base, gamma, beta, r1, r2)?;
        let e = lebesgue_exponents(&psi, &grid)?;
        if e.q < p1 && e.p.is_finite() && e.p > p2 {
            return Ok((psi, params));
        }
        beta *= 2.0;
    }
    Err(Error::NonConvergence(
        "beta doubling never pushed p above p2".into(),
    ))
}

/// The ε-tight family Ψ_n around a prescribed exponent r ∈ [q, p], where
/// q and p are the limits of g_base at 0 and ∞.
#[derive(Debug, Clone)]
pub struct TightConstruction {
    pub psi: YoungFunction,
    pub params: ConstructorParams,
    /// max(|g(1/n) − p0|, |g(n) − p_inf|): how far the base has converged
    /// to its limits at the splice knots, the certified exponent gap.
    pub gap_bound: f64,
}

/// Midpoint default for the prescribed exponent of the ε-tight family.
pub fn default_tight_exponent(base: &YoungFunction) -> Result<f64> {
    let (p0, p_inf) = limit_exponents_g(base);
    match (p0, p_inf) {
        (Some(a), Some(b)) => Ok(0.5 * (a + b)),
        _ => Err(Error::LimitsRequired(format!(
            "g-limits of {} not established",
            base.name()
        ))),
    }
}

/// Flat power r on [1/n, n], rescaled base outside, glued C¹ at both knots.
pub fn construct_epsilon_tight(base: &YoungFunction, r: f64, n: f64) -> Result<TightConstruction> {
    if !(n > 1.0) {
        return Err(Error::InvalidParameter(format!("need n > 1, got {n}")));
    }
    let (p0, p_inf) = limit_exponents_g(base);
    let (p0, p_inf) = match (p0, p_inf) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(Error::LimitsRequired(format!(
                "g-limits of {} not established",
                base.name()
            )))
        }
    };
    let q = p0.min(p_inf);
    let p = p0.max(p_inf);
    if !(q - 1e-9 <= r && r <= p + 1e-9) {
        return Err(Error::InvalidParameter(format!(
            "prescribed exponent r = {r} outside [q, p] = [{q:.6}, {p:.6}]"
        )));
    }

    let inv_n = 1.0 / n;
    let g_lo = base.g_ratio(inv_n)?;
    let g_hi = base.g_ratio(n)?;
    let dphi_lo = base.eval_deriv(inv_n)?;
    let dphi_hi = base.eval_deriv(n)?;
    let phi_n = base.eval(n)?;

    let a = n.powf(r - 1.0);
    let b = (1.0 / g_lo - 1.0 / r) / n;
    let c = n.powf(2.0 * r - 2.0);
    let d = n.powf(2.0 * r - 1.0) * (1.0 / r - 1.0 / g_hi) + b;
    let k_n = n.powf(-r) * (r / g_lo - 1.0);
    let l_n = phi_n * ((g_hi / r - 1.0) + n.powf(-2.0 * r) * (g_hi / g_lo - g_hi / r));

    let psi = YoungFunction::splice(
        format!("tight({}, r={r}, n={n})", base.name()),
        vec![
            scaled_seg(0.0, inv_n, base, 1.0 / dphi_lo, 0.0),
            power_seg(inv_n, n, a / r, r, b),
            scaled_seg(n, f64::INFINITY, base, c / dphi_hi, d),
        ],
    )?;
    let params = ConstructorParams {
        alpha: inv_n,
        beta: n,
        r1: r,
        r2: r,
        c: [1.0 / dphi_lo, a, c / dphi_hi],
        d: [0.0, b, d],
        k: k_n,
        l_alpha: l_n,
        m_alpha_beta: None,
    };
    let gap_bound = (g_lo - p0).abs().max((g_hi - p_inf).abs());
    Ok(TightConstruction {
        psi,
        params,
        gap_bound,
    })
}
