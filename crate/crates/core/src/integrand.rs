//! The test-function catalog: closed-form integrands on ℝ¹ and ℝ² whose
//! modulars and norms the rest of the crate computes.

use crate::error::{Error, Result};

/// A catalog integrand with optional known moments
/// (pairs `(r, ∫|f|^r dx)`) for closed-form shortcuts and quadrature
/// cross-checks.
#[derive(Debug, Clone)]
pub struct Integrand {
    pub form: IntegrandForm,
    pub known_moments: Vec<(f64, f64)>,
    name: String,
}

#[derive(Debug, Clone)]
pub enum IntegrandForm {
    /// (1 + |x|²)^(−s) on ℝ.
    CauchyPower { s: f64 },
    /// exp(−n x² + 2√(n−1) x y − y²) on ℝ².
    GaussQuad { n: f64 },
    /// height · 1_[0, m) on ℝ.
    Indicator { measure: f64, height: f64 },
    /// g(x)·h(y) from two 1-dimensional entries.
    Separable {
        fx: Box<Integrand>,
        fy: Box<Integrand>,
    },
    /// Σ wᵢ fᵢ, all terms of equal dimension.
    FiniteSum { terms: Vec<(f64, Integrand)> },
    /// The zero function (in either dimension).
    Zero { dim: usize },
    /// inner(x − offset); keeps indicator blocks disjoint.
    Shifted { inner: Box<Integrand>, offset: f64 },
}

impl Integrand {
    pub fn cauchy_power(s: f64) -> Result<Self> {
        if !(s > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "cauchy_power needs s > 0, got {s}"
            )));
        }
        Ok(Integrand {
            form: IntegrandForm::CauchyPower { s },
            known_moments: Vec::new(),
            name: format!("cauchy_power({s})"),
        })
    }

    pub fn gauss_quad(n: f64) -> Result<Self> {
        if !(n >= 2.0) {
            return Err(Error::InvalidParameter(format!(
                "gauss_quad needs n >= 2, got {n}"
            )));
        }
        // ∫∫ f = π and ∫∫ f² = π/2 for every n (unit determinant family)
        Ok(Integrand {
            form: IntegrandForm::GaussQuad { n },
            known_moments: vec![
                (1.0, std::f64::consts::PI),
                (2.0, std::f64::consts::FRAC_PI_2),
            ],
            name: format!("gauss_quad({n})"),
        })
    }

    pub fn indicator(measure: f64, height: f64) -> Result<Self> {
        if !(measure > 0.0) || !(height > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "indicator needs positive measure and height, got m={measure}, h={height}"
            )));
        }
        Ok(Integrand {
            form: IntegrandForm::Indicator { measure, height },
            known_moments: Vec::new(),
            name: format!("indicator({measure},{height})"),
        })
    }

    pub fn separable(fx: Integrand, fy: Integrand) -> Result<Self> {
        if fx.dim() != 1 || fy.dim() != 1 {
            return Err(Error::InvalidParameter(
                "separable factors must be 1-dimensional".into(),
            ));
        }
        let name = format!("separable({}, {})", fx.name, fy.name);
        Ok(Integrand {
            form: IntegrandForm::Separable {
                fx: Box::new(fx),
                fy: Box::new(fy),
            },
            known_moments: Vec::new(),
            name,
        })
    }

    pub fn finite_sum(terms: Vec<(f64, Integrand)>) -> Result<Self> {
        if let Some(d) = terms.first().map(|(_, f)| f.dim()) {
            if terms.iter().any(|(_, f)| f.dim() != d) {
                return Err(Error::InvalidParameter(
                    "finite_sum terms must share a dimension".into(),
                ));
            }
        }
        let name = format!(
            "finite_sum[{}]",
            terms
                .iter()
                .map(|(w, f)| format!("{w}*{}", f.name))
                .collect::<Vec<_>>()
                .join(" + ")
        );
        Ok(Integrand {
            form: IntegrandForm::FiniteSum { terms },
            known_moments: Vec::new(),
            name,
        })
    }

    pub fn zero(dim: usize) -> Self {
        Integrand {
            form: IntegrandForm::Zero { dim },
            known_moments: Vec::new(),
            name: format!("zero({dim})"),
        }
    }

    /// Two disjoint indicator blocks realizing the prescribed moments
    /// ∫|f|^q = a and ∫|f|^p = b. The heights straddle (b/a)^(1/(p−q)) so
    /// the solved measures are positive.
    pub fn simple_with_moments(q: f64, a: f64, p: f64, b: f64) -> Result<Self> {
        if !(q >= 1.0 && p > q) {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= q < p, got q={q}, p={p}"
            )));
        }
        if !(a > 0.0 && b > 0.0) {
            return Err(Error::InvalidParameter("moments must be positive".into()));
        }
        let pivot = (b / a).powf(1.0 / (p - q));
        let h1 = 0.5 * pivot;
        let h2 = 2.0 * pivot;
        // m1 h1^q + m2 h2^q = a, m1 h1^p + m2 h2^p = b
        let det = h1.powf(q) * h2.powf(p) - h2.powf(q) * h1.powf(p);
        let m1 = (a * h2.powf(p) - b * h2.powf(q)) / det;
        let m2 = (b * h1.powf(q) - a * h1.powf(p)) / det;
        if !(m1 > 0.0 && m2 > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "moment system produced nonpositive measures m1={m1}, m2={m2}"
            )));
        }
        let mut blocks = Integrand::finite_sum(vec![
            (1.0, Integrand::indicator_at(0.0, m1, h1)?),
            (1.0, Integrand::indicator_at(m1 + 1.0, m2, h2)?),
        ])?;
        blocks.known_moments = vec![(q, a), (p, b)];
        Ok(blocks)
    }

    /// Indicator block on `[offset, offset + measure)`. Used to build
    /// disjoint simple functions.
    pub fn indicator_at(offset: f64, measure: f64, height: f64) -> Result<Self> {
        let base = Integrand::indicator(measure, height)?;
        if offset == 0.0 {
            return Ok(base);
        }
        Ok(Integrand {
            name: format!("indicator@{offset}({measure},{height})"),
            form: IntegrandForm::Shifted {
                inner: Box::new(base),
                offset,
            },
            known_moments: Vec::new(),
        })
    }

    pub fn with_moments(mut self, moments: Vec<(f64, f64)>) -> Self {
        self.known_moments = moments;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        match &self.form {
            IntegrandForm::CauchyPower { .. } | IntegrandForm::Indicator { .. } => 1,
            IntegrandForm::GaussQuad { .. } | IntegrandForm::Separable { .. } => 2,
            IntegrandForm::FiniteSum { terms } => terms.first().map(|(_, f)| f.dim()).unwrap_or(1),
            IntegrandForm::Zero { dim } => *dim,
            IntegrandForm::Shifted { inner, .. } => inner.dim(),
        }
    }

    /// f(x) for d = 1.
    pub fn value1(&self, x: f64) -> f64 {
        debug_assert_eq!(self.dim(), 1);
        match &self.form {
            IntegrandForm::CauchyPower { s } => (1.0 + x * x).powf(-s),
            IntegrandForm::Indicator { measure, height } => {
                if (0.0..*measure).contains(&x) {
                    *height
                } else {
                    0.0
                }
            }
            IntegrandForm::FiniteSum { terms } => terms.iter().map(|(w, f)| w * f.value1(x)).sum(),
            IntegrandForm::Zero { .. } => 0.0,
            IntegrandForm::Shifted { inner, offset } => inner.value1(x - offset),
            _ => unreachable!("2-dimensional form evaluated as 1-dimensional"),
        }
    }

    /// f(x, y) for d = 2.
    pub fn value2(&self, x: f64, y: f64) -> f64 {
        debug_assert_eq!(self.dim(), 2);
        match &self.form {
            IntegrandForm::GaussQuad { n } => {
                (-n * x * x + 2.0 * (n - 1.0).sqrt() * x * y - y * y).exp()
            }
            IntegrandForm::Separable { fx, fy } => fx.value1(x) * fy.value1(y),
            IntegrandForm::FiniteSum { terms } => {
                terms.iter().map(|(w, f)| w * f.value2(x, y)).sum()
            }
            IntegrandForm::Zero { .. } => 0.0,
            _ => unreachable!("1-dimensional form evaluated as 2-dimensional"),
        }
    }

    /// Discontinuity/kink locations along the given axis, used to seed
    /// quadrature panels.
    pub fn breakpoints(&self, axis: usize) -> Vec<f64> {
        match &self.form {
            IntegrandForm::Indicator { measure, .. } => vec![0.0, *measure],
            IntegrandForm::Shifted { inner, offset } => inner
                .breakpoints(axis)
                .into_iter()
                .map(|b| b + offset)
                .collect(),
            IntegrandForm::FiniteSum { terms } => {
                let mut out = Vec::new();
                for (_, f) in terms {
                    out.extend(f.breakpoints(axis));
                }
                out
            }
            IntegrandForm::Separable { fx, fy } => {
                if axis == 0 {
                    fx.breakpoints(0)
                } else {
                    fy.breakpoints(0)
                }
            }
            _ => Vec::new(),
        }
    }

    /// Whether the integrand is identically zero.
    pub fn is_zero(&self) -> bool {
        match &self.form {
            IntegrandForm::Zero { .. } => true,
            IntegrandForm::FiniteSum { terms } => {
                terms.is_empty() || terms.iter().all(|(w, f)| *w == 0.0 || f.is_zero())
            }
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn moment_blocks_reproduce_moments_exactly() {
        let a = std::f64::consts::FRAC_PI_2;
        let f = Integrand::simple_with_moments(2.0, a, 3.0, 1.0).unwrap();
        // analytic moments of the two-block simple function
        let (mut m2, mut m3) = (0.0, 0.0);
        // direct Riemann sums are exact for step functions split at breakpoints
        let mut edges = f.breakpoints(0);
        edges.sort_by(|x, y| x.partial_cmp(y).unwrap());
        edges.dedup();
        for w in edges.windows(2) {
            let mid = 0.5 * (w[0] + w[1]);
            let v = f.value1(mid);
            m2 += v * v * (w[1] - w[0]);
            m3 += v * v * v * (w[1] - w[0]);
        }
        assert_relative_eq!(m2, a, max_relative = 1e-12);
        assert_relative_eq!(m3, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn gauss_quad_closed_form() {
        let f = Integrand::gauss_quad(5.0).unwrap();
        // completed square: exponent equals −5(x − 2y/5)² − (1 − 4/5)... at
        // x = √(n−1) y / n the ridge value is e^{−y²/n}
        let y = 1.3f64;
        let xr = (4.0f64).sqrt() * y / 5.0;
        assert_relative_eq!(f.value2(xr, y), (-y * y / 5.0).exp(), max_relative = 1e-12);
    }

    #[test]
    fn separable_and_zero() {
        let g = Integrand::cauchy_power(1.0).unwrap();
        let h = Integrand::indicator(2.0, 3.0).unwrap();
        let f = Integrand::separable(g, h).unwrap();
        assert_eq!(f.dim(), 2);
        assert_relative_eq!(f.value2(0.0, 1.0), 3.0);
        assert_relative_eq!(f.value2(0.0, 2.5), 0.0);
        assert!(Integrand::zero(2).is_zero());
    }
}
