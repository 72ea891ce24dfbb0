//! Limit estimation along geometric schedules.
//!
//! The exponent functions g_Φ(t) = tΦ′(t)/Φ(t) and r_Φ(t) = ln Φ̃(t)/ln t
//! approach their limits at 0⁺ and ∞ in one of two ways on this catalog:
//! power-law in t (differences along t = 10^±k decay geometrically) or
//! harmonically in the decade index k, possibly with a ln k/k term (the
//! logarithm-carrying forms). Each estimator here picks the matching model.

/// How a sampled sequence behaves along the tail of its schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailBehavior {
    /// Differences vanish; a limit estimate is available.
    Converging,
    /// Values grow monotonically without sign of saturation.
    Diverging,
    /// Neither stabilization nor monotone growth was established.
    Inconclusive,
}

#[derive(Debug, Clone, Copy)]
pub struct LimitEstimate {
    pub value: f64,
    /// Estimated absolute error of `value`.
    pub error: f64,
    pub behavior: TailBehavior,
}

impl LimitEstimate {
    pub fn converged(&self, rtol: f64) -> bool {
        self.behavior == TailBehavior::Converging && self.error <= rtol * self.value.abs().max(1.0)
    }
}

/// Neville extrapolation of `(h_i, y_i)` to `h = 0`.
fn neville_to_zero(hs: &[f64], ys: &[f64]) -> f64 {
    let n = ys.len();
    let mut tab = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            tab[i] = tab[i] + (tab[i] - tab[i - 1]) * hs[i] / (hs[i - j] - hs[i]);
        }
    }
    tab[n - 1]
}

/// Estimate the limit of a sequence `a_k` sampled at integer decade indices
/// `k` (ascending; the limit is taken as k → ∞).
///
/// Model selection: if the last differences decay geometrically fast, the
/// tail value (with one Aitken correction) is already accurate; otherwise
/// extrapolate polynomially in 1/k, which removes harmonic tails exactly.
pub fn limit_of_decade_sequence(ks: &[usize], ys: &[f64]) -> LimitEstimate {
    assert_eq!(ks.len(), ys.len());
    let n = ys.len();
    if n == 0 {
        return LimitEstimate {
            value: f64::NAN,
            error: f64::INFINITY,
            behavior: TailBehavior::Inconclusive,
        };
    }
    let last = *ys.last().unwrap();
    if n == 2 && ys[1] == ys[0] {
        return LimitEstimate {
            value: last,
            error: 0.0,
            behavior: TailBehavior::Converging,
        };
    }
    if n < 3 {
        // too short to distinguish convergence from growth
        return LimitEstimate {
            value: last,
            error: f64::INFINITY,
            behavior: TailBehavior::Inconclusive,
        };
    }

    let diffs: Vec<f64> = ys.windows(2).map(|w| w[1] - w[0]).collect();
    let d_last = *diffs.last().unwrap();

    // Monotone growth with non-shrinking steps over the final stretch reads
    // as divergence.
    let tail = diffs.len().min(3);
    let growing = diffs[diffs.len() - tail..]
        .windows(2)
        .all(|w| w[1].abs() >= 0.9 * w[0].abs())
        && diffs[diffs.len() - tail..].iter().all(|d| *d > 0.0)
        && d_last.abs() > 1e-9 * last.abs().max(1.0);
    if growing && tail >= 2 {
        return LimitEstimate {
            value: last,
            error: f64::INFINITY,
            behavior: TailBehavior::Diverging,
        };
    }

    if d_last == 0.0 {
        return LimitEstimate {
            value: last,
            error: 0.0,
            behavior: TailBehavior::Converging,
        };
    }

    // Ratio of successive differences over the tail.
    let m = diffs.len();
    let ratios: Vec<f64> = diffs
        .windows(2)
        .filter(|w| w[0] != 0.0)
        .map(|w| w[1] / w[0])
        .collect();
    let tail_ratio = if ratios.is_empty() {
        0.0
    } else {
        ratios[ratios.len().saturating_sub(2)..]
            .iter()
            .copied()
            .fold(0.0f64, |a, b| a.max(b.abs()))
    };

    if tail_ratio < 0.5 {
        // Geometric decay: Aitken-correct the last value.
        let value = if m >= 2 && (diffs[m - 1] - diffs[m - 2]).abs() > 0.0 {
            let aitken = last - diffs[m - 1] * diffs[m - 1] / (diffs[m - 1] - diffs[m - 2]);
            // Only trust Aitken when it stays near the raw tail.
            if (aitken - last).abs() <= 4.0 * d_last.abs() {
                aitken
            } else {
                last
            }
        } else {
            last
        };
        let error = d_last.abs() * (tail_ratio / (1.0 - tail_ratio).max(0.5)).max(0.25)
            + f64::EPSILON * last.abs();
        LimitEstimate {
            value,
            error: error.max((value - last).abs() * 0.5),
            behavior: TailBehavior::Converging,
        }
    } else {
        // Slow (harmonic-like) approach: Neville in h = 1/k over the tail,
        // using increasing depth and requiring the estimates to settle.
        let take = n.min(6);
        let hs: Vec<f64> = ks[n - take..].iter().map(|k| 1.0 / *k as f64).collect();
        let ys_t = &ys[n - take..];
        let mut prev = ys_t[take - 1];
        let mut best = prev;
        let mut err = f64::INFINITY;
        for depth in 2..=take {
            let est = neville_to_zero(&hs[take - depth..], &ys_t[take - depth..]);
            let delta = (est - prev).abs();
            if delta < err {
                err = delta;
                best = est;
            }
            prev = est;
        }
        let behavior = if err.is_finite() && err <= 1e-2 * best.abs().max(1.0) {
            TailBehavior::Converging
        } else {
            TailBehavior::Inconclusive
        };
        LimitEstimate {
            value: best,
            error: err,
            behavior,
        }
    }
}

/// Estimate the limit of `r(t)` as t → 0⁺ or t → ∞ for sequences carrying
/// a `ln k / k` tail, by solving the three-parameter model
/// `A + B ln(k)/k + C/k` on the last three schedule points. The model is
/// exact for every catalog form (power, power-sum, power-log and splices
/// thereof), so successive triples agree to near machine precision.
pub fn limit_with_log_model(ks: &[usize], ys: &[f64]) -> LimitEstimate {
    assert_eq!(ks.len(), ys.len());
    let n = ys.len();
    if n < 3 {
        return limit_of_decade_sequence(ks, ys);
    }
    let solve = |idx: [usize; 3]| -> Option<f64> {
        let row = |i: usize| {
            let k = ks[i] as f64;
            [1.0, k.ln() / k, 1.0 / k]
        };
        let a = [row(idx[0]), row(idx[1]), row(idx[2])];
        let b = [ys[idx[0]], ys[idx[1]], ys[idx[2]]];
        let det3 = |m: &[[f64; 3]; 3]| {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        };
        let d = det3(&a);
        if d.abs() < 1e-14 {
            return None;
        }
        let mut a0 = a;
        for i in 0..3 {
            a0[i][0] = b[i];
        }
        Some(det3(&a0) / d)
    };
    let last = solve([n - 3, n - 2, n - 1]);
    let prev = if n >= 4 {
        solve([n - 4, n - 3, n - 2])
    } else {
        None
    };
    match (last, prev) {
        (Some(v), Some(p)) => {
            let err = (v - p).abs();
            LimitEstimate {
                value: v,
                error: err,
                behavior: if err <= 1e-2 * v.abs().max(1.0) {
                    TailBehavior::Converging
                } else {
                    TailBehavior::Inconclusive
                },
            }
        }
        (Some(v), None) => LimitEstimate {
            value: v,
            error: f64::INFINITY,
            behavior: TailBehavior::Inconclusive,
        },
        _ => limit_of_decade_sequence(ks, ys),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn geometric_tail_takes_last_value() {
        // a_k = 2 + 10^-k
        let ks: Vec<usize> = (6..=16).collect();
        let ys: Vec<f64> = ks.iter().map(|k| 2.0 + 10f64.powi(-(*k as i32))).collect();
        let est = limit_of_decade_sequence(&ks, &ys);
        assert!(est.converged(1e-4));
        assert_relative_eq!(est.value, 2.0, max_relative = 1e-10);
    }

    #[test]
    fn harmonic_tail_extrapolates() {
        // a_k = 3 + 0.43/k, the shape of g for t^n ln^m(1+t) at infinity
        let ks: Vec<usize> = (8..=16).collect();
        let ys: Vec<f64> = ks.iter().map(|k| 3.0 + 0.434 / *k as f64).collect();
        let est = limit_of_decade_sequence(&ks, &ys);
        assert!(est.converged(1e-4));
        assert_relative_eq!(est.value, 3.0, epsilon = 1e-9);
    }

    #[test]
    fn divergent_tail_flagged() {
        let ks: Vec<usize> = (1..=8).collect();
        let ys: Vec<f64> = ks.iter().map(|k| 10f64.powi(*k as i32)).collect();
        let est = limit_of_decade_sequence(&ks, &ys);
        assert_eq!(est.behavior, TailBehavior::Diverging);
    }

    #[test]
    fn log_model_removes_log_tail() {
        // a_k = 2 + (ln k + ln 10)/(k ln 10), the shape of r for t^2 ln(1+t)
        let l10 = std::f64::consts::LN_10;
        let ks = [6usize, 12, 24, 48, 96];
        let ys: Vec<f64> = ks
            .iter()
            .map(|k| {
                let kf = *k as f64;
                2.0 + (kf.ln() + l10.ln()) / (kf * l10)
            })
            .collect();
        let est = limit_with_log_model(&ks, &ys);
        assert!(est.converged(1e-6));
        assert_relative_eq!(est.value, 2.0, epsilon = 1e-10);
    }
}
