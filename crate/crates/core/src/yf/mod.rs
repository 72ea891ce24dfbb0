//! Young functions: evaluation, right derivatives, inverses, the exponent
//! ratio g_Φ, the logarithmic exponent r_Φ, and axiom validation.

mod catalog;
mod validate;

pub use catalog::CatalogForm;
pub use validate::{validate, ConvexityViolation, KnotMismatch, MismatchKind, ValidationReport};

use crate::error::{Error, Result};
use crate::numerics::roots;
use std::fmt;
use std::sync::Arc;

/// One piece of a spliced Young function on the interval `(lo, hi]`.
#[derive(Debug, Clone)]
pub struct Segment {
    pub lo: f64,
    pub hi: f64,
    pub kind: SegmentKind,
}

#[derive(Debug, Clone)]
pub enum SegmentKind {
    /// a·t^r + d.
    Power {
        coeff: f64,
        exponent: f64,
        offset: f64,
    },
    /// factor·Φ_base(t) + d, the rescaled-base pieces the widened and
    /// ε-tight constructions use outside their power window.
    ScaledBase {
        base: Arc<YoungFunction>,
        factor: f64,
        offset: f64,
    },
}

impl SegmentKind {
    fn value(&self, t: f64) -> f64 {
        match self {
            SegmentKind::Power {
                coeff,
                exponent,
                offset,
            } => coeff * t.powf(*exponent) + offset,
            SegmentKind::ScaledBase {
                base,
                factor,
                offset,
            } => factor * base.value(t) + offset,
        }
    }

    fn slope(&self, t: f64) -> f64 {
        match self {
            SegmentKind::Power {
                coeff, exponent, ..
            } => coeff * exponent * t.powf(exponent - 1.0),
            SegmentKind::ScaledBase { base, factor, .. } => factor * base.slope(t),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Form {
    Catalog(CatalogForm),
    /// Ordered contiguous segments covering (0, ∞).
    Splice(Vec<Segment>),
    /// base(t) / divisor, used for the normalization Ψ = Φ/Φ(1).
    Scaled {
        base: Arc<YoungFunction>,
        divisor: f64,
    },
    /// Σ wᵢ Φᵢ(t) with wᵢ > 0.
    WeightedSum(Vec<(f64, Arc<YoungFunction>)>),
    /// max over Φᵢ(t).
    PointwiseMax(Vec<Arc<YoungFunction>>),
}

/// An immutable, thread-safe Young-function value. All operations are pure.
#[derive(Debug, Clone)]
pub struct YoungFunction {
    form: Form,
    name: String,
    strict: bool,
}

impl fmt::Display for YoungFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

impl YoungFunction {
    // ---- constructors -------------------------------------------------

    pub fn catalog(form: CatalogForm) -> Result<Self> {
        form.validate_params()?;
        let strict = form.is_strict();
        let name = form.display_name();
        Ok(YoungFunction {
            form: Form::Catalog(form),
            name,
            strict,
        })
    }

    pub fn power(p: f64) -> Result<Self> {
        Self::catalog(CatalogForm::Power { p })
    }

    pub fn power_sum(q: f64, p: f64) -> Result<Self> {
        Self::catalog(CatalogForm::PowerSum { q, p })
    }

    pub fn power_log(n: f64, m: f64) -> Result<Self> {
        Self::catalog(CatalogForm::PowerLog { n, m })
    }

    pub fn power_exp(n: f64) -> Result<Self> {
        Self::catalog(CatalogForm::PowerExp { n })
    }

    pub fn power_log_shift() -> Self {
        Self::catalog(CatalogForm::PowerLogShift).unwrap()
    }

    pub fn exp_minus_one() -> Self {
        Self::catalog(CatalogForm::ExpMinusOne).unwrap()
    }

    pub fn flat_origin() -> Self {
        Self::catalog(CatalogForm::FlatOrigin).unwrap()
    }

    pub fn dual_23() -> Self {
        Self::catalog(CatalogForm::Dual23).unwrap()
    }

    /// Build a splice from ordered segments. Checks contiguity of the
    /// intervals, coverage of (0, ∞), Φ(0) = 0, and positive leading
    /// coefficients; curvature and knot matching are the job of
    /// [`YoungFunction::validate`].
    pub fn splice(name: impl Into<String>, segments: Vec<Segment>) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::InvalidParameter(
                "splice needs at least one segment".into(),
            ));
        }
        if segments[0].lo != 0.0 {
            return Err(Error::InvalidParameter(
                "first segment must start at 0".into(),
            ));
        }
        if segments.last().unwrap().hi != f64::INFINITY {
            return Err(Error::InvalidParameter(
                "last segment must extend to infinity".into(),
            ));
        }
        let mut strict = true;
        for (i, seg) in segments.iter().enumerate() {
            if !(seg.hi > seg.lo) {
                return Err(Error::InvalidParameter(format!(
                    "segment {i} has empty interval ({}, {}]",
                    seg.lo, seg.hi
                )));
            }
            if i > 0 && segments[i - 1].hi != seg.lo {
                return Err(Error::InvalidParameter(format!(
                    "segments {} and {} are not contiguous",
                    i - 1,
                    i
                )));
            }
            match &seg.kind {
                SegmentKind::Power {
                    coeff,
                    exponent,
                    offset,
                } => {
                    if !(*coeff > 0.0) || !(*exponent > 0.0) {
                        return Err(Error::InvalidParameter(format!(
                            "segment {i}: power piece needs positive coefficient and exponent"
                        )));
                    }
                    if i == 0 && *offset != 0.0 {
                        return Err(Error::InvalidParameter(
                            "first segment must vanish at 0 (offset must be 0)".into(),
                        ));
                    }
                }
                SegmentKind::ScaledBase {
                    base,
                    factor,
                    offset,
                } => {
                    if !(*factor > 0.0) {
                        return Err(Error::InvalidParameter(format!(
                            "segment {i}: scaled-base piece needs a positive factor"
                        )));
                    }
                    if i == 0 && *offset != 0.0 {
                        return Err(Error::InvalidParameter(
                            "first segment must vanish at 0 (offset must be 0)".into(),
                        ));
                    }
                    strict &= base.strict;
                }
            }
        }
        Ok(YoungFunction {
            form: Form::Splice(segments),
            name: name.into(),
            strict,
        })
    }

    /// The normalized companion Ψ(t) = Φ(t)/Φ(1). Evaluation divides by the
    /// stored Φ(1) so Ψ shares Φ's arithmetic path exactly.
    pub fn normalized(&self) -> Self {
        let divisor = self.value(1.0);
        YoungFunction {
            name: format!("normalized({})", self.name),
            strict: self.strict,
            form: Form::Scaled {
                base: Arc::new(self.clone()),
                divisor,
            },
        }
    }

    /// Σ wᵢ Φᵢ with positive weights.
    pub fn weighted_sum(terms: Vec<(f64, YoungFunction)>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidParameter(
                "weighted sum needs at least one term".into(),
            ));
        }
        if terms.iter().any(|(w, _)| !(*w > 0.0)) {
            return Err(Error::InvalidParameter("weights must be positive".into()));
        }
        let strict = terms.iter().all(|(_, f)| f.strict);
        let name = format!(
            "sum({})",
            terms
                .iter()
                .map(|(w, f)| format!("{w}*{f}"))
                .collect::<Vec<_>>()
                .join(" + ")
        );
        let form = Form::WeightedSum(terms.into_iter().map(|(w, f)| (w, Arc::new(f))).collect());
        Ok(YoungFunction { form, name, strict })
    }

    /// Pointwise maximum of Young functions (again a Young function).
    pub fn pointwise_max(terms: Vec<YoungFunction>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidParameter(
                "pointwise max needs at least one term".into(),
            ));
        }
        let strict = terms.iter().all(|f| f.strict);
        let name = format!(
            "max({})",
            terms
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        );
        let form = Form::PointwiseMax(terms.into_iter().map(Arc::new).collect());
        Ok(YoungFunction { form, name, strict })
    }

    // ---- accessors -----------------------------------------------------

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    /// Strictly increasing and positive on (0, ∞) at numeric scale.
    /// `FlatOrigin` is the one catalog form flagged non-strict: it
    /// underflows to zero on part of (0, ∞), which breaks g_Φ there.
    pub fn is_strict(&self) -> bool {
        self.strict
    }

    // ---- raw evaluation (no domain checks; scanners use these) ---------

    pub(crate) fn value(&self, t: f64) -> f64 {
        match &self.form {
            Form::Catalog(c) => c.value(t),
            Form::Splice(segs) => {
                let i = Self::segment_for_eval(segs, t);
                if t == 0.0 {
                    return 0.0;
                }
                segs[i].kind.value(t)
            }
            Form::Scaled { base, divisor } => base.value(t) / divisor,
            Form::WeightedSum(terms) => terms.iter().map(|(w, f)| w * f.value(t)).sum(),
            Form::PointwiseMax(terms) => terms
                .iter()
                .map(|f| f.value(t))
                .fold(f64::NEG_INFINITY, f64::max),
        }
    }

    pub(crate) fn slope(&self, t: f64) -> f64 {
        match &self.form {
            Form::Catalog(c) => c.slope(t),
            Form::Splice(segs) => {
                let i = Self::segment_for_slope(segs, t);
                segs[i].kind.slope(t)
            }
            Form::Scaled { base, divisor } => base.slope(t) / divisor,
            Form::WeightedSum(terms) => terms.iter().map(|(w, f)| w * f.slope(t)).sum(),
            Form::PointwiseMax(terms) => {
                // right derivative of a max: at a tie the branch that is
                // about to dominate (largest slope) wins
                let vmax = terms
                    .iter()
                    .map(|f| f.value(t))
                    .fold(f64::NEG_INFINITY, f64::max);
                let tol = 1e-12 * vmax.abs().max(1e-300);
                terms
                    .iter()
                    .filter(|f| (f.value(t) - vmax).abs() <= tol)
                    .map(|f| f.slope(t))
                    .fold(f64::NEG_INFINITY, f64::max)
            }
        }
    }

    /// Index of the segment evaluating Φ(t): intervals are (lo, hi].
    fn segment_for_eval(segs: &[Segment], t: f64) -> usize {
        segs.iter()
            .position(|s| t <= s.hi)
            .unwrap_or(segs.len() - 1)
    }

    /// Index of the segment providing the right derivative: [lo, hi).
    fn segment_for_slope(segs: &[Segment], t: f64) -> usize {
        segs.iter().position(|s| t < s.hi).unwrap_or(segs.len() - 1)
    }

    // ---- checked operations ---------------------------------------------

    /// Φ(t) for t ≥ 0.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) {
            return Err(Error::Domain(format!("eval requires t >= 0, got {t}")));
        }
        Ok(self.value(t))
    }

    /// Right derivative Φ′₊(t) for t > 0. At an interior knot of a splice
    /// this is the right-segment derivative.
    pub fn eval_deriv(&self, t: f64) -> Result<f64> {
        if !(t > 0.0) {
            return Err(Error::Domain(format!("eval_deriv requires t > 0, got {t}")));
        }
        Ok(self.slope(t))
    }

    /// Solve Φ(t) = y for t ≥ 0. Catalog closed forms are used where
    /// available, otherwise bracketing plus bisection to
    /// |Φ(t) − y| ≤ 1e-12·max(1, y).
    pub fn eval_inverse(&self, y: f64) -> Result<f64> {
        if !(y >= 0.0) {
            return Err(Error::Domain(format!(
                "eval_inverse requires y >= 0, got {y}"
            )));
        }
        if y == 0.0 {
            return Ok(0.0);
        }
        if let Form::Catalog(c) = &self.form {
            if let Some(t) = c.inverse(y) {
                return Ok(t);
            }
        }
        if !self.strict {
            // no closed form and a flat numeric range: bisection cannot
            // isolate a root reliably
            return Err(Error::NonInvertible {
                y,
                reason: format!("{} is flagged non-strict", self.name),
            });
        }
        // bracket by geometric expansion from t = 1
        let mut lo = 1.0f64;
        let mut hi = 1.0f64;
        let mut guard = 0;
        while self.value(hi) < y {
            hi *= 4.0;
            guard += 1;
            if guard > 600 || !hi.is_finite() {
                return Err(Error::NonInvertible {
                    y,
                    reason: "no finite t with Phi(t) >= y".into(),
                });
            }
        }
        guard = 0;
        while self.value(lo) > y {
            lo /= 4.0;
            guard += 1;
            if guard > 600 {
                return Err(Error::NonInvertible {
                    y,
                    reason: "no positive t with Phi(t) <= y".into(),
                });
            }
        }
        let (t, _) = roots::bisect(|t| self.value(t) - y, lo, hi, 1e-15, 300)?;
        Ok(t)
    }

    /// g_Φ(t) = t Φ′(t) / Φ(t) for t > 0 with Φ(t) > 0.
    pub fn g_ratio(&self, t: f64) -> Result<f64> {
        if !(t > 0.0) {
            return Err(Error::Domain(format!("g_ratio requires t > 0, got {t}")));
        }
        let v = self.value(t);
        if v == 0.0 {
            return Err(Error::Domain(format!(
                "g_ratio undefined where Phi vanishes (t = {t:e}, {})",
                self.name
            )));
        }
        let d = self.slope(t);
        let g = t * d / v;
        if !g.is_finite() {
            return Err(Error::Domain(format!(
                "g_ratio not evaluable at t = {t:e} (Phi = {v:e}, Phi' = {d:e})"
            )));
        }
        Ok(g)
    }

    /// r_Φ(t) = ln(Φ(t)/Φ(1)) / ln t, undefined at t = 1.
    pub fn r_exponent(&self, t: f64) -> Result<f64> {
        if !(t > 0.0) {
            return Err(Error::Domain(format!("r_exponent requires t > 0, got {t}")));
        }
        if t == 1.0 {
            return Err(Error::Domain("r_exponent is undefined at t = 1".into()));
        }
        let v = self.value(t);
        let v1 = self.value(1.0);
        if !(v > 0.0) || !v.is_finite() || !(v1 > 0.0) {
            return Err(Error::Domain(format!(
                "r_exponent needs 0 < Phi(t) < inf, got Phi({t:e}) = {v:e}"
            )));
        }
        Ok((v.ln() - v1.ln()) / t.ln())
    }

    /// Largest window `[lo, hi]` inside `[bound_lo, bound_hi]` on which both
    /// Φ and g_Φ evaluate to finite positive numbers. Scanners restrict
    /// themselves to this window (FlatOrigin underflows near 0, exponential
    /// forms overflow on the right).
    pub(crate) fn usable_window(&self, bound_lo: f64, bound_hi: f64) -> (f64, f64) {
        let ok = |t: f64| {
            let v = self.value(t);
            v > 0.0 && v.is_finite() && self.slope(t).is_finite()
        };
        let mut lo = bound_lo;
        let mut hi = bound_hi;
        let mut steps = 0;
        while !ok(lo) && lo < hi && steps < 4000 {
            lo *= 1.2;
            steps += 1;
        }
        steps = 0;
        while !ok(hi) && hi > lo && steps < 4000 {
            hi /= 1.2;
            steps += 1;
        }
        (lo, hi)
    }
}

// Convenience free functions mirroring the operation names.

/// Φ(t).
pub fn eval(phi: &YoungFunction, t: f64) -> Result<f64> {
    phi.eval(t)
}

/// Right derivative Φ′₊(t).
pub fn eval_deriv(phi: &YoungFunction, t: f64) -> Result<f64> {
    phi.eval_deriv(t)
}

/// Φ⁻¹(y).
pub fn eval_inverse(phi: &YoungFunction, y: f64) -> Result<f64> {
    phi.eval_inverse(y)
}

/// t Φ′(t)/Φ(t).
pub fn g_ratio(phi: &YoungFunction, t: f64) -> Result<f64> {
    phi.g_ratio(t)
}

/// ln(Φ(t)/Φ(1))/ln t.
pub fn r_exponent(phi: &YoungFunction, t: f64) -> Result<f64> {
    phi.r_exponent(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors;
    use approx::assert_relative_eq;

    #[test]
    fn power_eval_and_deriv() {
        let phi = YoungFunction::power(2.0).unwrap();
        assert_relative_eq!(phi.eval(3.0).unwrap(), 9.0);
        assert_relative_eq!(phi.eval_deriv(3.0).unwrap(), 6.0);
        assert!(phi.eval(-1.0).is_err());
        assert!(phi.eval_deriv(0.0).is_err());
    }

    #[test]
    fn power_sum_at_one() {
        let phi = YoungFunction::power_sum(2.0, 3.0).unwrap();
        assert_relative_eq!(phi.eval(1.0).unwrap(), 2.0);
        assert_relative_eq!(phi.eval_inverse(2.0).unwrap(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn sub_unit_power_is_rejected() {
        assert!(YoungFunction::power(0.5).is_err());
    }

    #[test]
    fn qlq_splice_pointwise() {
        let phi = constructors::example_splice_qlq();
        // t - 1/2 on (1, 2]
        assert_relative_eq!(phi.eval(1.5).unwrap(), 1.0);
        assert_relative_eq!(phi.eval_deriv(1.5).unwrap(), 1.0);
        // right derivative at the knot t = 1 comes from the middle piece
        assert_relative_eq!(phi.eval_deriv(1.0).unwrap(), 1.0);
        assert_relative_eq!(phi.eval(1.0).unwrap(), 0.5);
        // g on (1,2]: 1/(1 - 1/(2t))
        let t = 1.5f64;
        assert_relative_eq!(
            phi.g_ratio(t).unwrap(),
            1.0 / (1.0 - 1.0 / (2.0 * t)),
            max_relative = 1e-14
        );
    }

    #[test]
    fn example_splice_g_closed_forms() {
        // qlq: g = 2 | 1/(1 − 1/(2t)) | 2/(1 + 2/t²)
        let qlq = constructors::example_splice_qlq();
        for (t, expected) in [
            (0.4, 2.0),
            (1.5, 1.0 / (1.0 - 1.0 / 3.0)),
            (2.0, 4.0 / 3.0),
            (5.0, 2.0 / (1.0 + 2.0 / 25.0)),
        ] {
            assert_relative_eq!(qlq.g_ratio(t).unwrap(), expected, max_relative = 1e-14);
        }
        // qcq: g = 2 | 3/(1 + 1/(2t³)) | 6/(3 − 7/(2t²)), peaking at 48/17
        let qcq = constructors::example_splice_qcq();
        for (t, expected) in [
            (0.4, 2.0),
            (1.5, 3.0 / (1.0 + 1.0 / (2.0 * 1.5f64.powi(3)))),
            (2.0, 48.0 / 17.0),
            (5.0, 6.0 / (3.0 - 7.0 / 50.0)),
        ] {
            assert_relative_eq!(qcq.g_ratio(t).unwrap(), expected, max_relative = 1e-14);
        }
    }

    #[test]
    fn power_g_ratio_is_p() {
        for p in [1.0, 1.5, 2.0, 4.0] {
            let phi = YoungFunction::power(p).unwrap();
            for t in [1e-6, 0.3, 1.0, 7.0, 1e5] {
                assert_relative_eq!(phi.g_ratio(t).unwrap(), p, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn flat_origin_g_diverges_like_inverse_t() {
        let phi = YoungFunction::flat_origin();
        assert!(!phi.is_strict());
        for t in [0.01, 0.05, 0.2] {
            assert_relative_eq!(phi.g_ratio(t).unwrap(), 1.0 / t, max_relative = 1e-12);
        }
        // numerically vanishes deep near 0
        assert!(phi.g_ratio(1e-6).is_err());
    }

    #[test]
    fn r_exponent_of_power() {
        let phi = YoungFunction::power(2.5).unwrap();
        assert_relative_eq!(phi.r_exponent(10.0).unwrap(), 2.5, max_relative = 1e-13);
        assert!(phi.r_exponent(1.0).is_err());
    }

    #[test]
    fn r_exponent_power_log_limits_by_direct_evaluation() {
        // r0 = n + m (ln(1+t) ~ t near 0); the approach to r_inf = n is
        // only logarithmic, so finite-t values sit well above 2
        let phi = YoungFunction::power_log(2.0, 1.0).unwrap();
        assert!((phi.r_exponent(1e-6).unwrap() - 3.0).abs() < 0.05);
        assert_relative_eq!(
            phi.r_exponent(1e8).unwrap(),
            2.178_060_026_860_254,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            phi.r_exponent(1e12).unwrap(),
            2.133_380_956_141_830_4,
            max_relative = 1e-12
        );
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let forms = [
            YoungFunction::power(2.0).unwrap(),
            YoungFunction::power_sum(2.0, 3.0).unwrap(),
            YoungFunction::power_log(2.0, 1.0).unwrap(),
            YoungFunction::power_exp(1.0).unwrap(),
            YoungFunction::power_log_shift(),
            YoungFunction::exp_minus_one(),
            constructors::example_splice_qlq(),
            constructors::example_splice_qcq(),
        ];
        let knots = [0.5, 1.0, 2.0];
        for phi in &forms {
            for t in crate::grid::GridSpec::new(1e-2, 1e2, 81).iter() {
                // skip points close to the splice knots, where one-sided
                // derivatives differ from the symmetric difference
                if knots.iter().any(|k| (t - k).abs() < 1e-3) {
                    continue;
                }
                let h = 1e-6 * t;
                let fd = (phi.value(t + h) - phi.value(t - h)) / (2.0 * h);
                if !fd.is_finite() {
                    continue;
                }
                assert_relative_eq!(phi.eval_deriv(t).unwrap(), fd, max_relative = 1e-6);
            }
        }
    }

    #[test]
    fn value_over_t_is_nondecreasing() {
        let forms = [
            YoungFunction::power(1.0).unwrap(),
            YoungFunction::power_sum(2.0, 3.0).unwrap(),
            YoungFunction::power_log(2.0, 1.0).unwrap(),
            YoungFunction::power_log_shift(),
            YoungFunction::dual_23(),
            constructors::example_splice_qlq(),
            constructors::example_splice_qcq(),
        ];
        for phi in &forms {
            let pts: Vec<f64> = crate::grid::GridSpec::new(1e-6, 1e6, 160).points_vec();
            let ratios: Vec<f64> = pts.iter().map(|&t| phi.value(t) / t).collect();
            for i in 0..pts.len() {
                for j in (i + 1)..pts.len() {
                    assert!(
                        ratios[j] >= ratios[i] * (1.0 - 1e-12),
                        "{}: Phi(t)/t decreased between {} and {}",
                        phi.name(),
                        pts[i],
                        pts[j]
                    );
                }
            }
        }
    }

    #[test]
    fn young_functions_are_send_sync() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<YoungFunction>();
    }

    #[test]
    fn inverse_round_trip_on_grid() {
        let forms = [
            YoungFunction::power(3.0).unwrap(),
            YoungFunction::power_sum(2.0, 3.0).unwrap(),
            YoungFunction::power_log(2.0, 1.0).unwrap(),
            YoungFunction::dual_23(),
        ];
        for phi in &forms {
            for t in crate::grid::GridSpec::new(1e-4, 1e4, 41).iter() {
                let y = phi.eval(t).unwrap();
                let back = phi.eval_inverse(y).unwrap();
                assert_relative_eq!(back, t, max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn scaled_shares_arithmetic_path() {
        let phi = YoungFunction::power_sum(2.0, 3.0).unwrap();
        let psi = phi.normalized();
        let phi1 = phi.eval(1.0).unwrap();
        for t in [0.3, 1.0, 2.0, 77.0] {
            assert_eq!(psi.eval(t).unwrap(), phi.eval(t).unwrap() / phi1);
        }
        assert_eq!(psi.eval(1.0).unwrap(), 1.0);
    }

    #[test]
    fn max_right_derivative_at_crossing() {
        let phi = YoungFunction::pointwise_max(vec![
            YoungFunction::power(2.0).unwrap(),
            YoungFunction::power(3.0).unwrap(),
        ])
        .unwrap();
        // t^2 and t^3 cross at t = 1; just right of it t^3 dominates
        assert_relative_eq!(phi.eval_deriv(1.0).unwrap(), 3.0);
        assert_relative_eq!(phi.eval(0.5).unwrap(), 0.25);
        assert_relative_eq!(phi.eval(2.0).unwrap(), 8.0);
    }
}
