//! Equivalence scanning between Young functions, class exponents,
//! sub/supermultiplicativity, pure-power detection, and Lebesgue-space
//! inclusion reports.

use crate::error::{Error, Result};
use crate::exponents::{lebesgue_exponents, limit_exponents_g, limit_exponents_r};
use crate::grid::GridSpec;
use crate::integrand::Integrand;
use crate::norms;
use crate::numerics::extrapolate::{limit_of_decade_sequence, TailBehavior};
use crate::yf::YoungFunction;

/// Grid verdict on the boundedness of max(Φ/Ψ, Ψ/Φ). A scan, not a proof:
/// divergence is reported when the ratio grows monotonically over the last
/// decades at an end (or one side degenerates to 0/∞ while the other stays
/// finite).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundedVerdict {
    Finite,
    Diverging { at_zero: bool, at_infinity: bool },
}

#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    /// Grid sup of max(Φ/Ψ, Ψ/Φ) over points where both evaluate.
    pub c_scan: f64,
    pub bounded: BoundedVerdict,
    /// C₁ = max{C p_Φ/q_Ψ, C p_Ψ/q_Φ} with C = c_scan, when both functions
    /// have finite measured exponents and the scan is finite.
    pub c1_derivative: Option<f64>,
}

impl EquivalenceReport {
    pub fn is_finite(&self) -> bool {
        self.bounded == BoundedVerdict::Finite
    }
}

/// Scan max(Φ/Ψ, Ψ/Φ) over the grid with trend analysis at both ends.
/// Handles non-strict inputs by treating "one side vanishes or overflows
/// while the other is normal" as divergence evidence at that end.
pub fn equivalence_scan(
    phi: &YoungFunction,
    psi: &YoungFunction,
    grid: &GridSpec,
) -> EquivalenceReport {
    let mut ts = Vec::new();
    let mut ratios = Vec::new();
    let mut mismatch_zero = false;
    let mut mismatch_inf = false;
    let mid = (grid.lo * grid.hi).sqrt();
    // one side vanishing/overflowing counts as divergence evidence only
    // while the other side is comfortably representable; otherwise the
    // mismatch is just the two windows ending a hair apart
    let comfortable = |v: f64| v > 1e-260 && v < 1e260;
    for t in grid.iter() {
        let a = phi.value(t);
        let b = psi.value(t);
        let a_ok = a > 0.0 && a.is_finite();
        let b_ok = b > 0.0 && b.is_finite();
        match (a_ok, b_ok) {
            (true, true) => {
                let r = (a / b).max(b / a);
                if r.is_finite() {
                    ts.push(t);
                    ratios.push(r);
                }
            }
            (false, false) => {}
            (true, false) | (false, true) => {
                let witness = if a_ok { a } else { b };
                if comfortable(witness) {
                    if t < mid {
                        mismatch_zero = true;
                    } else {
                        mismatch_inf = true;
                    }
                }
            }
        }
    }
    if ts.is_empty() {
        return EquivalenceReport {
            c_scan: f64::INFINITY,
            bounded: BoundedVerdict::Diverging {
                at_zero: mismatch_zero,
                at_infinity: mismatch_inf,
            },
            c1_derivative: None,
        };
    }
    let c_scan = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);

    // monotone growth over the last two decades at each end; the 1.2
    // threshold still catches purely logarithmic escape (factor ~1.33 per
    // two decades) while every bounded catalog pair flattens out long
    // before the window edge
    let per_decade = (grid.points as f64 / (grid.hi / grid.lo).log10()).ceil() as usize;
    let span = (2 * per_decade).clamp(6, ts.len());
    let grows = |seq: &[f64]| -> bool {
        seq.windows(2).all(|w| w[1] >= w[0] * (1.0 - 1e-9))
            && seq.last().unwrap() / seq.first().unwrap().max(f64::MIN_POSITIVE) > 1.2
    };
    let head: Vec<f64> = ratios[..span].iter().rev().copied().collect();
    let tail: Vec<f64> = ratios[ratios.len() - span..].to_vec();
    let at_zero = mismatch_zero || grows(&head);
    let at_infinity = mismatch_inf || grows(&tail);

    let bounded = if at_zero || at_infinity {
        BoundedVerdict::Diverging {
            at_zero,
            at_infinity,
        }
    } else {
        BoundedVerdict::Finite
    };

    let c1_derivative = if bounded == BoundedVerdict::Finite {
        derivative_constant_formula(phi, psi, c_scan, grid).ok()
    } else {
        None
    };

    EquivalenceReport {
        c_scan,
        bounded,
        c1_derivative,
    }
}

fn derivative_constant_formula(
    phi: &YoungFunction,
    psi: &YoungFunction,
    c: f64,
    grid: &GridSpec,
) -> Result<f64> {
    let ep = lebesgue_exponents(phi, grid)?;
    let eq = lebesgue_exponents(psi, grid)?;
    if !ep.p_is_finite() || !eq.p_is_finite() {
        return Err(Error::Delta2Required(
            "derivative constant needs finite exponents".into(),
        ));
    }
    Ok((c * ep.p / eq.q).max(c * eq.p / ep.q))
}

/// C₁ = max{C p_Φ/q_Ψ, C p_Ψ/q_Φ} for a supplied equivalence constant C,
/// verified against the two-sided derivative bound on the grid. A
/// violation means C was not a true equivalence constant.
pub fn derivative_equivalence_constant(
    phi: &YoungFunction,
    psi: &YoungFunction,
    c: f64,
    grid: &GridSpec,
) -> Result<f64> {
    if !(c >= 1.0) {
        return Err(Error::Domain(format!(
            "equivalence constant must be >= 1, got {c}"
        )));
    }
    let c1 = derivative_constant_formula(phi, psi, c, grid)?;
    let (lo, hi) = {
        let wp = phi.usable_window(grid.lo, grid.hi);
        let wq = psi.usable_window(grid.lo, grid.hi);
        (wp.0.max(wq.0), wp.1.min(wq.1))
    };
    for t in GridSpec::new(lo, hi, grid.points).iter() {
        let dp = phi.slope(t);
        let dq = psi.slope(t);
        if !dp.is_finite() || !dq.is_finite() {
            continue;
        }
        let tol = 1e-9 * dp.abs().max(dq.abs()).max(1e-300);
        if dp > c1 * dq + c1 * tol || dq > c1 * dp + c1 * tol {
            return Err(Error::VerificationFailed(format!(
                "derivative bound violated at t = {t:e}: Phi' = {dp:e}, Psi' = {dq:e}, C1 = {c1:e}"
            )));
        }
    }
    Ok(c1)
}

/// Equivalence-class exponents p\_\[Φ\] = max{p0, p_∞}, q\_\[Φ\] = min{p0, p_∞},
/// computable exactly when both limits of g_Φ exist.
pub fn class_exponents(phi: &YoungFunction) -> Result<(f64, f64)> {
    let (p0, p_inf) = limit_exponents_g(phi);
    match (p0, p_inf) {
        (Some(a), Some(b)) => Ok((a.max(b), a.min(b))),
        _ => Err(Error::LimitsRequired(format!(
            "class exponents need both g-limits for {}",
            phi.name()
        ))),
    }
}

#[derive(Debug, Clone)]
pub struct MultiplicativityReport {
    /// sup Φ(ab)/(Φ(a)Φ(b)) when bounded.
    pub sub_c: Option<f64>,
    /// inf of the same ratio when bounded below away from 0.
    pub super_c: Option<f64>,
    pub is_pure_power: bool,
    pub detected_p: Option<f64>,
}

/// Scan Φ(ab)/(Φ(a)Φ(b)) over a 2-dimensional log grid, with limit
/// analysis along the diagonal a = b and the hyperbola ab = 1 where the
/// catalog's extrema escape to. Pure powers are detected from
/// p = Φ′(1)/Φ(1) and a grid identity check.
pub fn multiplicativity_scan(phi: &YoungFunction, grid2d: &GridSpec) -> MultiplicativityReport {
    let pts = grid2d.points_vec();
    let ratio = |a: f64, b: f64| -> Option<f64> {
        let va = phi.value(a);
        let vb = phi.value(b);
        let vab = phi.value(a * b);
        if va > 0.0 && vb > 0.0 && va.is_finite() && vb.is_finite() && vab.is_finite() && vab > 0.0
        {
            let r = vab / (va * vb);
            r.is_finite().then_some(r)
        } else {
            None
        }
    };

    let mut sup = f64::NEG_INFINITY;
    let mut inf = f64::INFINITY;
    for &a in &pts {
        for &b in &pts {
            if let Some(r) = ratio(a, b) {
                sup = sup.max(r);
                inf = inf.min(r);
            }
        }
    }

    // trends along the escape paths; doubling steps so exponential forms
    // show their growth before overflowing
    let mut sub_bounded = sup.is_finite();
    let mut super_bounded = inf.is_finite() && inf > 0.0;
    for dir in 0..4 {
        let mut ks = Vec::new();
        let mut vs = Vec::new();
        for k in 1..=40usize {
            let t = 2f64.powi(k as i32);
            let (a, b) = match dir {
                0 => (t, t),             // diagonal out
                1 => (1.0 / t, 1.0 / t), // diagonal in
                2 => (1.0 / t, t),       // hyperbola ab = 1
                _ => (t, 1.0 / t),
            };
            if let Some(r) = ratio(a, b) {
                ks.push(k);
                vs.push(r.ln());
            }
        }
        if vs.len() < 3 {
            continue;
        }
        let est = limit_of_decade_sequence(&ks, &vs);
        match est.behavior {
            TailBehavior::Diverging => {
                // ln-ratio running away: up kills submultiplicativity,
                // down kills supermultiplicativity
                if vs.last() > vs.first() {
                    sub_bounded = false;
                } else {
                    super_bounded = false;
                }
            }
            TailBehavior::Converging => {
                let v = est.value.exp();
                if v.is_finite() {
                    sup = sup.max(v);
                    inf = inf.min(v);
                }
            }
            TailBehavior::Inconclusive => {
                // conservatively refuse the side the trend pushes on
                if vs.last() > vs.first() {
                    sub_bounded = false;
                } else {
                    super_bounded = false;
                }
            }
        }
    }
    if inf <= 1e-12 {
        super_bounded = false;
    }

    // pure power: p = Φ'(1)/Φ(1), then Φ(t) ≡ Φ(1) t^p on the grid
    let phi1 = phi.value(1.0);
    let p_hat = phi.slope(1.0) / phi1;
    let mut pure = phi1.is_finite() && p_hat.is_finite();
    if pure {
        for &t in &pts {
            let v = phi.value(t);
            let model = phi1 * t.powf(p_hat);
            if !v.is_finite() || (v - model).abs() > 1e-9 * v.abs().max(1e-300) {
                pure = false;
                break;
            }
        }
    }

    MultiplicativityReport {
        sub_c: sub_bounded.then_some(sup),
        super_c: super_bounded.then_some(inf),
        is_pure_power: pure,
        detected_p: pure.then_some(p_hat),
    }
}

/// The default 64×64 window for the multiplicativity scan.
pub fn default_mult_grid() -> GridSpec {
    GridSpec::new(1e-4, 1e4, 64)
}

#[derive(Debug, Clone, Copy)]
pub struct ModularBoundViolation {
    pub witness_index: usize,
    pub modular: f64,
    pub bound: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultDirection {
    Sub,
    Super,
}

/// Check ρ_Φ(f) ≤ C·Φ(‖f‖_Φ) (sub) or ≥ (super) for each witness.
pub fn modular_norm_multiplicativity_check(
    phi: &YoungFunction,
    c: f64,
    direction: MultDirection,
    witnesses: &[Integrand],
) -> Result<Vec<ModularBoundViolation>> {
    let mut violations = Vec::new();
    for (i, f) in witnesses.iter().enumerate() {
        let norm = norms::luxemburg_norm(f, phi)?;
        if !norm.norm.is_finite() || !norm.modular.is_finite() {
            continue;
        }
        let bound = c * phi.value(norm.norm);
        let tol = 1e-6 * bound.abs().max(norm.modular.abs());
        let ok = match direction {
            MultDirection::Sub => norm.modular <= bound + tol,
            MultDirection::Super => norm.modular >= bound - tol,
        };
        if !ok {
            violations.push(ModularBoundViolation {
                witness_index: i,
                modular: norm.modular,
                bound,
            });
        }
    }
    Ok(violations)
}

/// Three nested inclusion sandwiches for L^Φ: the baseline (q_Φ, p_Φ)
/// pair, the class ranges p ∈ (p\_\[Φ\], ∞) / q ∈ (1, q\_\[Φ\]) when the
/// g-limits exist, and the r-based ranges p > max{r₀, r_∞},
/// q < min{r₀, r_∞}, which need no limit assumption beyond Δ₂.
#[derive(Debug, Clone)]
pub struct InclusionReport {
    pub baseline: (f64, f64),
    /// (p_class, q_class) = (max, min) of the g-limits, when available.
    pub class_exponents: Option<(f64, f64)>,
    pub r_ranges: (f64, f64),
    /// min{r₀, r_∞} ≤ 1 makes the q-range empty.
    pub q_range_empty: bool,
}

pub fn inclusion_report(phi: &YoungFunction, grid: &GridSpec) -> Result<InclusionReport> {
    let exps = lebesgue_exponents(phi, grid)?;
    if !exps.p_is_finite() {
        return Err(Error::Delta2Required(format!(
            "inclusion report needs p_Phi < inf ({})",
            phi.name()
        )));
    }
    if !(exps.q > 1.0) {
        return Err(Error::Domain(format!(
            "inclusion report needs q_Phi > 1, measured {:.6}",
            exps.q
        )));
    }
    let class = class_exponents(phi).ok();
    let rl = limit_exponents_r(phi, grid)?;
    let r_hi = rl.r0.max(rl.r_inf);
    let r_lo = rl.r0.min(rl.r_inf);
    Ok(InclusionReport {
        baseline: (exps.q, exps.p),
        class_exponents: class,
        r_ranges: (r_hi, r_lo),
        q_range_empty: r_lo <= 1.0,
    })
}

#[derive(Debug, Clone, Copy)]
pub enum CombineMode {
    WeightedSum { alpha: f64, beta: f64 },
    PointwiseMax,
}

/// Combine two Young functions by weighted sum or pointwise maximum; both
/// operations preserve the equivalence class of their arguments.
pub fn combine_equivalent(
    phi1: &YoungFunction,
    phi2: &YoungFunction,
    mode: CombineMode,
) -> Result<YoungFunction> {
    match mode {
        CombineMode::WeightedSum { alpha, beta } => {
            YoungFunction::weighted_sum(vec![(alpha, phi1.clone()), (beta, phi2.clone())])
        }
        CombineMode::PointwiseMax => YoungFunction::pointwise_max(vec![phi1.clone(), phi2.clone()]),
    }
}

/// The third class-preserving combination, sup{Φ₃ convex : Φ₃ ≤ min(Φ₁, Φ₂)},
/// is not implemented: computing the convex minorant of a pointwise minimum
/// needs a global envelope construction that this toolkit does not carry.
/// The entry point exists to name the operation and always errors.
pub fn convex_minorant_sup(_phi1: &YoungFunction, _phi2: &YoungFunction) -> Result<YoungFunction> {
    Err(Error::Domain(
        "the sup-of-convex-minorants combination is not implemented".into(),
    ))
}

/// How a single witness integrand separates two Young functions: its
/// modular is finite under one and divergent under the other.
#[derive(Debug, Clone, Copy)]
pub struct WitnessReport {
    pub modular_phi: f64,
    pub modular_psi: f64,
    pub separates: bool,
}

pub fn witness_separates(
    f: &Integrand,
    phi: &YoungFunction,
    psi: &YoungFunction,
) -> Result<WitnessReport> {
    let a = norms::modular(f, phi)?;
    let b = norms::modular(f, psi)?;
    Ok(WitnessReport {
        modular_phi: a.value,
        modular_psi: b.value,
        separates: a.is_divergent() != b.is_divergent(),
    })
}
