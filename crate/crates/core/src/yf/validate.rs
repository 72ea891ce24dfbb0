//! Young-function axiom checks: monotonicity and convexity on a log grid,
//! plus C⁰/C¹ matching at splice knots.

use super::{Form, YoungFunction};
use crate::grid::GridSpec;

#[derive(Debug, Clone, Copy)]
pub struct ConvexityViolation {
    pub t1: f64,
    pub t2: f64,
    pub theta: f64,
    /// Φ(θ t1 + (1−θ) t2)
    pub lhs: f64,
    /// θ Φ(t1) + (1−θ) Φ(t2)
    pub rhs: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MismatchKind {
    Value,
    Derivative,
}

#[derive(Debug, Clone, Copy)]
pub struct KnotMismatch {
    pub knot: f64,
    pub kind: MismatchKind,
    pub left: f64,
    pub right: f64,
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    /// (t1, t2) pairs with t1 < t2 but Φ(t1) > Φ(t2).
    pub monotonicity_violations: Vec<(f64, f64)>,
    pub convexity_violations: Vec<ConvexityViolation>,
    pub knot_mismatches: Vec<KnotMismatch>,
    pub points_checked: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.monotonicity_violations.is_empty()
            && self.convexity_violations.is_empty()
            && self.knot_mismatches.is_empty()
    }
}

const KNOT_RTOL: f64 = 1e-9;
const CONVEXITY_RTOL: f64 = 1e-9;

impl YoungFunction {
    /// Check the Young-function axioms on a log-spaced grid (intended
    /// density: at least 100 points) and, for splices, the one-sided value
    /// and derivative matching at every interior knot.
    pub fn validate(&self, grid: &GridSpec) -> ValidationReport {
        let mut report = ValidationReport::default();
        let pts = grid.points_vec();
        let vals: Vec<f64> = pts.iter().map(|t| self.value(*t)).collect();
        report.points_checked = pts.len();

        // Φ(0) = 0 and non-decreasing along the grid.
        if self.value(0.0) != 0.0 {
            report.monotonicity_violations.push((0.0, 0.0));
        }
        for i in 1..pts.len() {
            if !vals[i].is_finite() || !vals[i - 1].is_finite() {
                continue;
            }
            let slack = 1e-12 * vals[i].abs().max(1e-300);
            if vals[i] + slack < vals[i - 1] {
                report.monotonicity_violations.push((pts[i - 1], pts[i]));
            }
        }

        // Convexity on all grid pairs, three interior ratios each.
        for i in 0..pts.len() {
            if !vals[i].is_finite() {
                continue;
            }
            for j in (i + 1)..pts.len() {
                if !vals[j].is_finite() {
                    continue;
                }
                for theta in [0.25, 0.5, 0.75] {
                    let tm = theta * pts[i] + (1.0 - theta) * pts[j];
                    let lhs = self.value(tm);
                    let rhs = theta * vals[i] + (1.0 - theta) * vals[j];
                    if !lhs.is_finite() || !rhs.is_finite() {
                        continue;
                    }
                    if lhs > rhs + CONVEXITY_RTOL * rhs.abs().max(1e-300) {
                        report.convexity_violations.push(ConvexityViolation {
                            t1: pts[i],
                            t2: pts[j],
                            theta,
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }

        // Knot matching for splices.
        if let Form::Splice(segs) = &self.form {
            for w in segs.windows(2) {
                let knot = w[0].hi;
                let left_v = w[0].kind.value(knot);
                let right_v = w[1].kind.value(knot);
                if !close(left_v, right_v, KNOT_RTOL) {
                    report.knot_mismatches.push(KnotMismatch {
                        knot,
                        kind: MismatchKind::Value,
                        left: left_v,
                        right: right_v,
                    });
                }
                let left_d = w[0].kind.slope(knot);
                let right_d = w[1].kind.slope(knot);
                if !close(left_d, right_d, KNOT_RTOL) {
                    report.knot_mismatches.push(KnotMismatch {
                        knot,
                        kind: MismatchKind::Derivative,
                        left: left_d,
                        right: right_d,
                    });
                }
            }
        }

        report
    }
}

fn close(a: f64, b: f64, rtol: f64) -> bool {
    (a - b).abs() <= rtol * a.abs().max(b.abs()).max(1e-300)
}

/// Free-function form.
pub fn validate(phi: &YoungFunction, grid: &GridSpec) -> ValidationReport {
    phi.validate(grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors;
    use crate::yf::{Segment, SegmentKind, YoungFunction};

    fn small_grid() -> GridSpec {
        GridSpec::new(1e-6, 1e6, 120)
    }

    #[test]
    fn catalog_forms_are_valid() {
        let forms = [
            YoungFunction::power(1.0).unwrap(),
            YoungFunction::power(2.7).unwrap(),
            YoungFunction::power_sum(1.0, 2.0).unwrap(),
            YoungFunction::power_sum(2.0, 3.0).unwrap(),
            YoungFunction::power_log(2.0, 1.0).unwrap(),
            YoungFunction::power_log_shift(),
            YoungFunction::exp_minus_one(),
            YoungFunction::dual_23(),
        ];
        for phi in &forms {
            let report = phi.validate(&small_grid());
            assert!(report.is_valid(), "{} failed: {:?}", phi.name(), report);
        }
    }

    #[test]
    fn flat_origin_valid_on_its_window() {
        // validity holds where the function is representable; the grid
        // avoids the underflow region
        let phi = YoungFunction::flat_origin();
        let report = phi.validate(&GridSpec::new(1e-2, 1e6, 150));
        assert!(report.is_valid(), "{:?}", report);
    }

    #[test]
    fn example_splices_validate() {
        for phi in constructors::make_example_splices() {
            let report = phi.validate(&small_grid());
            assert!(report.is_valid(), "{} failed: {:?}", phi.name(), report);
        }
    }

    #[test]
    fn perturbed_offset_breaks_continuity() {
        // qlq with d1 shifted by 0.1 on the middle piece
        let segs = vec![
            Segment {
                lo: 0.0,
                hi: 1.0,
                kind: SegmentKind::Power {
                    coeff: 0.5,
                    exponent: 2.0,
                    offset: 0.0,
                },
            },
            Segment {
                lo: 1.0,
                hi: 2.0,
                kind: SegmentKind::Power {
                    coeff: 1.0,
                    exponent: 1.0,
                    offset: -0.4,
                },
            },
            Segment {
                lo: 2.0,
                hi: f64::INFINITY,
                kind: SegmentKind::Power {
                    coeff: 0.25,
                    exponent: 2.0,
                    offset: 0.5,
                },
            },
        ];
        let phi = YoungFunction::splice("broken-qlq", segs).unwrap();
        let report = phi.validate(&small_grid());
        assert!(report
            .knot_mismatches
            .iter()
            .any(|m| m.kind == MismatchKind::Value && (m.knot - 1.0).abs() < 1e-12));
        assert!(!report.is_valid());
    }
}
