//! Closed-form catalog of Young functions.

use crate::error::{Error, Result};

/// Named closed forms with real parameters. Every entry is a Young
/// function: convex, non-decreasing, vanishing at 0.
#[derive(Debug, Clone, PartialEq)]
pub enum CatalogForm {
    /// t^p, p ≥ 1.
    Power { p: f64 },
    /// t^q + t^p with 1 ≤ q < p.
    PowerSum { q: f64, p: f64 },
    /// t^n ln^m(1+t), n ≥ 1, m ≥ 0.
    PowerLog { n: f64, m: f64 },
    /// t^n e^t, n ≥ 1.
    PowerExp { n: f64 },
    /// t² ln(2+t).
    PowerLogShift,
    /// e^t − 1.
    ExpMinusOne,
    /// 0 at 0; e^(−1/t) on (0, 1/2); e^(−2)(4t − 1) on [1/2, ∞).
    /// Vanishes faster than any power at the origin, so it is flagged
    /// non-strict: g_Φ is numerically unusable where Φ underflows.
    FlatOrigin,
    /// t² on [0, 1]; 2t^(3/2) − 1 on (1, ∞). The explicit conjugate-side
    /// catalog entry for t² + t³.
    Dual23,
}

impl CatalogForm {
    pub fn validate_params(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match *self {
            CatalogForm::Power { p } => {
                if !(p >= 1.0) || !p.is_finite() {
                    return bad(format!("power exponent must satisfy p >= 1, got {p}"));
                }
            }
            CatalogForm::PowerSum { q, p } => {
                if !(q >= 1.0) || !(p > q) || !p.is_finite() {
                    return bad(format!("power_sum needs 1 <= q < p, got q={q}, p={p}"));
                }
            }
            CatalogForm::PowerLog { n, m } => {
                if !(n >= 1.0) || !(m >= 0.0) || !n.is_finite() || !m.is_finite() {
                    return bad(format!("power_log needs n >= 1, m >= 0, got n={n}, m={m}"));
                }
            }
            CatalogForm::PowerExp { n } if !(n >= 1.0) || !n.is_finite() => {
                return bad(format!("power_exp needs n >= 1, got {n}"));
            }
            _ => {}
        }
        Ok(())
    }

    pub fn value(&self, t: f64) -> f64 {
        match *self {
            CatalogForm::Power { p } => t.powf(p),
            CatalogForm::PowerSum { q, p } => t.powf(q) + t.powf(p),
            CatalogForm::PowerLog { n, m } => {
                if t == 0.0 {
                    return 0.0;
                }
                t.powf(n) * t.ln_1p().powf(m)
            }
            CatalogForm::PowerExp { n } => t.powf(n) * t.exp(),
            CatalogForm::PowerLogShift => t * t * (2.0 + t).ln(),
            CatalogForm::ExpMinusOne => t.exp_m1(),
            CatalogForm::FlatOrigin => {
                if t == 0.0 {
                    0.0
                } else if t < 0.5 {
                    (-1.0 / t).exp()
                } else {
                    (-2.0f64).exp() * (4.0 * t - 1.0)
                }
            }
            CatalogForm::Dual23 => {
                if t <= 1.0 {
                    t * t
                } else {
                    2.0 * t.powf(1.5) - 1.0
                }
            }
        }
    }

    /// Right derivative.
    pub fn slope(&self, t: f64) -> f64 {
        match *self {
            CatalogForm::Power { p } => p * t.powf(p - 1.0),
            CatalogForm::PowerSum { q, p } => q * t.powf(q - 1.0) + p * t.powf(p - 1.0),
            CatalogForm::PowerLog { n, m } => {
                let l = t.ln_1p();
                let mut d = n * t.powf(n - 1.0) * l.powf(m);
                if m > 0.0 {
                    d += m * t.powf(n) * l.powf(m - 1.0) / (1.0 + t);
                }
                d
            }
            CatalogForm::PowerExp { n } => (n * t.powf(n - 1.0) + t.powf(n)) * t.exp(),
            CatalogForm::PowerLogShift => 2.0 * t * (2.0 + t).ln() + t * t / (2.0 + t),
            CatalogForm::ExpMinusOne => t.exp(),
            CatalogForm::FlatOrigin => {
                if t < 0.5 {
                    (-1.0 / t).exp() / (t * t)
                } else {
                    4.0 * (-2.0f64).exp()
                }
            }
            CatalogForm::Dual23 => {
                if t < 1.0 {
                    2.0 * t
                } else {
                    3.0 * t.sqrt()
                }
            }
        }
    }

    /// Closed-form inverse where one exists; `None` falls back to the
    /// generic bracketing inverse.
    pub fn inverse(&self, y: f64) -> Option<f64> {
        match *self {
            CatalogForm::Power { p } => Some(y.powf(1.0 / p)),
            CatalogForm::ExpMinusOne => Some(y.ln_1p()),
            CatalogForm::Dual23 => Some(if y <= 1.0 {
                y.sqrt()
            } else {
                (0.5 * (y + 1.0)).powf(2.0 / 3.0)
            }),
            CatalogForm::FlatOrigin => {
                let knot_y = (-2.0f64).exp();
                Some(if y == 0.0 {
                    0.0
                } else if y < knot_y {
                    -1.0 / y.ln()
                } else {
                    (y / knot_y + 1.0) / 4.0
                })
            }
            _ => None,
        }
    }

    /// Whether the form is strictly increasing with Φ > 0 on (0, ∞) at
    /// numeric scale.
    pub fn is_strict(&self) -> bool {
        !matches!(self, CatalogForm::FlatOrigin)
    }

    pub fn display_name(&self) -> String {
        match *self {
            CatalogForm::Power { p } => format!("power({p})"),
            CatalogForm::PowerSum { q, p } => format!("power_sum({q},{p})"),
            CatalogForm::PowerLog { n, m } => format!("power_log({n},{m})"),
            CatalogForm::PowerExp { n } => format!("power_exp({n})"),
            CatalogForm::PowerLogShift => "power_log_shift".into(),
            CatalogForm::ExpMinusOne => "exp_minus_one".into(),
            CatalogForm::FlatOrigin => "flat_origin".into(),
            CatalogForm::Dual23 => "dual_23".into(),
        }
    }
}
