//! Trace-type mixed norms ‖f‖_{Φ,Φ} (inner Luxemburg norm in x per fixed
//! y, outer norm in y), the G/H integrability profiles, and the Gaussian
//! family separating L^{Φ,Φ} from L^Φ.

use crate::error::{Error, Result};
use crate::exponents::lebesgue_exponents;
use crate::grid::GridSpec;
use crate::integrand::Integrand;
use crate::norms::{luxemburg_from_rho, modular_of_line_fn, LuxemburgOptions};
use crate::numerics::quadrature::{integrate_line, LinePolicy};
use crate::yf::YoungFunction;
use std::cell::RefCell;
use std::collections::HashMap;
use std::f64::consts::PI;

#[derive(Debug, Clone)]
pub struct MixedNormResult {
    /// Sampled inner profile (y, ‖f(·,y)‖_Φ), sorted by y.
    pub inner_profile: Vec<(f64, f64)>,
    pub outer_norm: f64,
    /// ‖f‖_{L^{1,1}} and ‖f‖_{L^{2,1}}, filled when Φ = t + t² (the
    /// decomposition of the Gaussian example).
    pub l11: Option<f64>,
    pub l21: Option<f64>,
    pub inner_evaluations: usize,
}

/// Nested tolerance budget: the outer bisection amplifies inner noise by
/// at most the outer derivative bound, so the inner solver runs tighter.
const INNER_REL_TOL: f64 = 1e-8;
const OUTER_REL_TOL: f64 = 1e-6;

struct InnerNormCache<'a> {
    f: &'a Integrand,
    phi: &'a YoungFunction,
    exps: crate::exponents::LebesgueExponents,
    x_breaks: Vec<f64>,
    cache: RefCell<HashMap<u64, f64>>,
    failure: RefCell<Option<Error>>,
    evals: RefCell<usize>,
}

impl<'a> InnerNormCache<'a> {
    fn new(f: &'a Integrand, phi: &'a YoungFunction) -> Result<Self> {
        let exps = lebesgue_exponents(phi, &GridSpec::default())?;
        if !exps.p_is_finite() {
            return Err(Error::Delta2Required(format!(
                "mixed_norm needs p_Phi < inf ({})",
                phi.name()
            )));
        }
        Ok(InnerNormCache {
            f,
            phi,
            exps,
            x_breaks: f.breakpoints(0),
            cache: RefCell::new(HashMap::new()),
            failure: RefCell::new(None),
            evals: RefCell::new(0),
        })
    }

    /// ‖f(·, y)‖_Φ, +∞ on inner divergence, NaN after a recorded failure.
    fn norm_at(&self, y: f64) -> f64 {
        if let Some(v) = self.cache.borrow().get(&y.to_bits()) {
            return *v;
        }
        let v = match self.compute(y) {
            Ok(v) => v,
            Err(Error::Divergent(_)) => f64::INFINITY,
            Err(e) => {
                self.failure
                    .borrow_mut()
                    .get_or_insert(Error::InnerFailure {
                        y,
                        source: Box::new(e),
                    });
                f64::NAN
            }
        };
        self.cache.borrow_mut().insert(y.to_bits(), v);
        *self.evals.borrow_mut() += 1;
        v
    }

    fn compute(&self, y: f64) -> Result<f64> {
        let policy = LinePolicy::with_rel_tol(1e-9);
        let rho_at = |lam: f64| -> Result<f64> {
            let m = modular_of_line_fn(
                |x| self.f.value2(x, y) / lam,
                &self.x_breaks,
                self.phi,
                &policy,
            )?;
            Ok(m.value)
        };
        let rho_one = rho_at(1.0)?;
        if rho_one == 0.0 {
            return Ok(0.0);
        }
        let opts = LuxemburgOptions {
            rel_tol: INNER_REL_TOL,
            max_iters: 200,
            policy,
        };
        Ok(luxemburg_from_rho(rho_at, rho_one, &self.exps, &opts)?.norm)
    }

    fn take_failure(&self) -> Option<Error> {
        self.failure.borrow_mut().take()
    }

    fn profile(&self) -> Vec<(f64, f64)> {
        let mut out: Vec<(f64, f64)> = self
            .cache
            .borrow()
            .iter()
            .map(|(bits, v)| (f64::from_bits(*bits), *v))
            .collect();
        out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        out
    }
}

/// ‖f‖_{Φ,Φ}: the outer Luxemburg norm (over y) of the inner-norm profile
/// h(y) = ‖f(·,y)‖_Φ. Inner norms are memoized across outer bisection
/// steps; distinct y evaluations are independent. The quadrature picks its
/// own adaptive y nodes; `y_grid` additionally seeds the reported profile.
pub fn mixed_norm(
    f: &Integrand,
    phi: &YoungFunction,
    y_grid: &GridSpec,
) -> Result<MixedNormResult> {
    if f.dim() != 2 {
        return Err(Error::Domain(format!(
            "mixed_norm needs a 2-dimensional integrand, got d = {}",
            f.dim()
        )));
    }
    if f.is_zero() {
        return Ok(MixedNormResult {
            inner_profile: vec![(0.0, 0.0)],
            outer_norm: 0.0,
            l11: None,
            l21: None,
            inner_evaluations: 0,
        });
    }
    let cache = InnerNormCache::new(f, phi)?;
    let y_breaks = f.breakpoints(1);
    let outer_policy = LinePolicy::with_rel_tol(OUTER_REL_TOL * 0.1);

    let rho_outer = |lam: f64| -> Result<f64> {
        let m = modular_of_line_fn(|y| cache.norm_at(y) / lam, &y_breaks, phi, &outer_policy)?;
        if let Some(e) = cache.take_failure() {
            return Err(e);
        }
        Ok(m.value)
    };
    let rho_one = rho_outer(1.0)?;
    if rho_one == 0.0 {
        return Err(Error::ZeroFunction);
    }
    let opts = LuxemburgOptions {
        rel_tol: OUTER_REL_TOL,
        max_iters: 200,
        policy: outer_policy,
    };
    let outer = match luxemburg_from_rho(rho_outer, rho_one, &cache.exps, &opts) {
        Ok(r) => r,
        Err(Error::Divergent(d)) => return Err(Error::Divergent(d)),
        Err(e) => return Err(e),
    };

    // decomposition pieces for Φ = t + t²
    let (l11, l21) = if is_power_sum_12(phi) {
        (Some(l_norm_2d(f, 1.0, 1.0)?), Some(l_norm_2d(f, 2.0, 1.0)?))
    } else {
        (None, None)
    };

    // make sure the reported profile covers the requested grid
    for y in y_grid.iter() {
        cache.norm_at(y);
        cache.norm_at(-y);
    }
    cache.norm_at(0.0);
    let _ = cache.take_failure();

    let inner_evaluations = *cache.evals.borrow();
    Ok(MixedNormResult {
        inner_profile: cache.profile(),
        outer_norm: outer.norm,
        l11,
        l21,
        inner_evaluations,
    })
}

fn is_power_sum_12(phi: &YoungFunction) -> bool {
    matches!(
        phi.form(),
        crate::yf::Form::Catalog(crate::yf::CatalogForm::PowerSum { q, p })
            if (*q - 1.0).abs() < 1e-12 && (*p - 2.0).abs() < 1e-12
    )
}

/// ‖f‖_{L^{p,r}} = (∫ (∫ |f|^p dx)^(r/p) dy)^(1/r) by nested quadrature.
pub fn l_norm_2d(f: &Integrand, p: f64, r: f64) -> Result<f64> {
    let x_breaks = f.breakpoints(0);
    let y_breaks = f.breakpoints(1);
    let inner_policy = LinePolicy::with_rel_tol(1e-10);
    let outer_policy = LinePolicy::with_rel_tol(1e-9);
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let mut outer = |y: f64| {
        let mut inner = |x: f64| f.value2(x, y).abs().powf(p);
        match integrate_line(&mut inner, &x_breaks, &inner_policy) {
            Ok(out) => out.value().powf(r / p),
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                f64::NAN
            }
        }
    };
    let out = integrate_line(&mut outer, &y_breaks, &outer_policy)?;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    if out.is_divergent() {
        return Ok(f64::INFINITY);
    }
    Ok(out.value().powf(1.0 / r))
}

/// Closed forms for the Gaussian family f_n(x,y) = exp(−nx² + 2√(n−1)xy − y²):
/// ‖f_n‖_{L¹} + ‖f_n‖_{L²} = π + √(π/2) for every n, while
/// ‖f_n‖_{L^{2,1}} = (π^(3/4)/2^(1/4)) n^(1/4).
pub fn gaussian_family_values(n: f64) -> (f64, f64) {
    let phi_norm = PI + (PI / 2.0).sqrt();
    let l21 = PI.powf(0.75) / 2f64.powf(0.25) * n.powf(0.25);
    (phi_norm, l21)
}

/// The same two quantities by nested adaptive quadrature, the desk-scale
/// cross-check of the closed forms.
pub fn gaussian_family_quadrature(n: f64) -> Result<(f64, f64)> {
    let f = Integrand::gauss_quad(n)?;
    let l1 = l_norm_2d(&f, 1.0, 1.0)?;
    let l2 = l_norm_2d(&f, 2.0, 2.0)?;
    let l21 = l_norm_2d(&f, 2.0, 1.0)?;
    Ok((l1 + l2, l21))
}

/// Partial sums of the counterexample series g = Σ n^(−5/4) f_n:
/// the convergent Φ-norm bound (π + √(π/2))·Σ n^(−5/4) and the diverging
/// lower bound C·Σ 1/n on ‖g‖_{L^{2,1}} (positivity of the f_n makes the
/// triangle-inequality sum a true lower bound).
#[derive(Debug, Clone, Copy)]
pub struct PartialSums {
    pub phi_norm_bound: f64,
    pub l21_partial: f64,
    pub terms: usize,
}

pub fn counterexample_partial_sums(n_max: usize) -> Result<PartialSums> {
    if n_max < 2 {
        return Err(Error::InvalidParameter("the series starts at n = 2".into()));
    }
    let c = PI.powf(0.75) / 2f64.powf(0.25);
    let phi_const = PI + (PI / 2.0).sqrt();
    let mut s54 = 0.0;
    let mut harmonic = 0.0;
    for n in 2..=n_max {
        let nf = n as f64;
        s54 += nf.powf(-1.25);
        harmonic += 1.0 / nf;
    }
    Ok(PartialSums {
        phi_norm_bound: phi_const * s54,
        l21_partial: c * harmonic,
        terms: n_max - 1,
    })
}

/// The truncated counterexample Σ_{n=2}^{N} n^(−5/4) f_n as an integrand.
pub fn counterexample_truncated(n_max: usize) -> Result<Integrand> {
    if n_max < 2 {
        return Err(Error::InvalidParameter("the series starts at n = 2".into()));
    }
    let terms = (2..=n_max)
        .map(|n| {
            let nf = n as f64;
            Integrand::gauss_quad(nf).map(|f| (nf.powf(-1.25), f))
        })
        .collect::<Result<Vec<_>>>()?;
    Integrand::finite_sum(terms)
}

/// Sampled G_f(y) = Φ(‖f(·,y)‖_Φ) and H_f(y) = ∫Φ(|f(x,y)|)dx with
/// integrability verdicts, and the equivalence checks against the direct
/// norm computations: H integrable ⇔ f ∈ L^Φ(ℝ²), G integrable ⇔
/// f ∈ L^{Φ,Φ}(ℝ²).
#[derive(Debug, Clone)]
pub struct ProfilesReport {
    pub g_samples: Vec<(f64, f64)>,
    pub h_samples: Vec<(f64, f64)>,
    pub g_integral: f64,
    pub h_integral: f64,
    pub g_integrable: bool,
    pub h_integrable: bool,
    pub mixed_norm_finite: bool,
    pub plain_norm_finite: bool,
    /// Both proposition equivalences held.
    pub consistent: bool,
}

pub fn profiles_g_h(
    f: &Integrand,
    phi: &YoungFunction,
    y_grid: &GridSpec,
) -> Result<ProfilesReport> {
    if f.dim() != 2 {
        return Err(Error::Domain(
            "profiles need a 2-dimensional integrand".into(),
        ));
    }
    if f.is_zero() {
        return Ok(ProfilesReport {
            g_samples: vec![(0.0, 0.0)],
            h_samples: vec![(0.0, 0.0)],
            g_integral: 0.0,
            h_integral: 0.0,
            g_integrable: true,
            h_integrable: true,
            mixed_norm_finite: true,
            plain_norm_finite: true,
            consistent: true,
        });
    }
    let cache = InnerNormCache::new(f, phi)?;
    let x_breaks = f.breakpoints(0);
    let y_breaks = f.breakpoints(1);
    let inner_policy = LinePolicy::with_rel_tol(1e-9);
    // the G/H integrals over y: moderate tolerance, verdict is what matters
    let outer_policy = LinePolicy::with_rel_tol(1e-6);

    let h_at = |y: f64| -> f64 {
        let mut integ = |x: f64| phi.value(f.value2(x, y).abs());
        match integrate_line(&mut integ, &x_breaks, &inner_policy) {
            Ok(out) => out.value(),
            Err(_) => f64::NAN,
        }
    };
    let g_at = |y: f64| -> f64 {
        let norm = cache.norm_at(y);
        if norm.is_finite() {
            phi.value(norm)
        } else {
            f64::INFINITY
        }
    };

    let mut hy = h_at;
    let h_out = integrate_line(&mut hy, &y_breaks, &outer_policy)?;
    let mut gy = g_at;
    let g_out = integrate_line(&mut gy, &y_breaks, &outer_policy)?;
    if let Some(e) = cache.take_failure() {
        return Err(e);
    }

    let plain_norm_finite = match crate::norms::luxemburg_norm(f, phi) {
        Ok(r) => r.norm.is_finite(),
        Err(Error::Divergent(_)) => false,
        Err(e) => return Err(e),
    };
    let mixed_norm_finite = match mixed_norm(f, phi, y_grid) {
        Ok(r) => r.outer_norm.is_finite(),
        Err(Error::Divergent(_)) => false,
        Err(e) => return Err(e),
    };

    // profile samples on the requested grid (symmetric around 0)
    let mut ys: Vec<f64> = y_grid.points_vec();
    ys.extend(y_grid.points_vec().iter().map(|y| -y));
    ys.push(0.0);
    ys.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let g_samples: Vec<(f64, f64)> = ys.iter().map(|&y| (y, g_at(y))).collect();
    let h_samples: Vec<(f64, f64)> = ys.iter().map(|&y| (y, h_at(y))).collect();

    let g_integrable = !g_out.is_divergent();
    let h_integrable = !h_out.is_divergent();
    let consistent = (h_integrable == plain_norm_finite) && (g_integrable == mixed_norm_finite);

    Ok(ProfilesReport {
        g_samples,
        h_samples,
        g_integral: g_out.value(),
        h_integral: h_out.value(),
        g_integrable,
        h_integrable,
        mixed_norm_finite,
        plain_norm_finite,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn y_grid() -> GridSpec {
        GridSpec::new(1e-3, 1e2, 64)
    }

    #[test]
    fn gaussian_closed_forms() {
        let (phi_norm, l21) = gaussian_family_values(2.0);
        assert_relative_eq!(phi_norm, PI + (PI / 2.0).sqrt(), epsilon = 1e-15);
        assert_relative_eq!(
            l21,
            PI.powf(0.75) / 2f64.powf(0.25) * 2f64.powf(0.25),
            epsilon = 1e-12
        );
        // fourth-root scaling: n = 16 doubles the n = 1 extrapolation
        let (_, l21_16) = gaussian_family_values(16.0);
        assert_relative_eq!(
            l21_16 / (PI.powf(0.75) / 2f64.powf(0.25)),
            2.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn gaussian_quadrature_cross_check() {
        for n in [2.0, 5.0] {
            let (sum, l21) = gaussian_family_quadrature(n).unwrap();
            let (sum_cf, l21_cf) = gaussian_family_values(n);
            assert!((sum - sum_cf).abs() < 1e-4, "n={n}: {sum} vs {sum_cf}");
            assert!((l21 - l21_cf).abs() < 1e-4, "n={n}: {l21} vs {l21_cf}");
        }
    }

    #[test]
    fn partial_sums_first_term() {
        // N = 2: one term, (π + √(π/2))·2^(-5/4) and C/2
        let s = counterexample_partial_sums(2).unwrap();
        let c = PI.powf(0.75) / 2f64.powf(0.25);
        assert_relative_eq!(
            s.phi_norm_bound,
            (PI + (PI / 2.0).sqrt()) * 2f64.powf(-1.25),
            max_relative = 1e-14
        );
        assert_relative_eq!(s.l21_partial, c / 2.0, max_relative = 1e-14);
        assert!(counterexample_partial_sums(1).is_err());
    }

    #[test]
    fn partial_sums_growth() {
        let s100 = counterexample_partial_sums(100).unwrap();
        let s10k = counterexample_partial_sums(10_000).unwrap();
        // the Φ-norm bound converges (tail ~ 4 N^(-1/4)) while the L^{2,1}
        // lower bound keeps growing like C ln N
        assert!(s10k.phi_norm_bound < PI + (PI / 2.0).sqrt() + 4.394 * 3.6);
        let c = PI.powf(0.75) / 2f64.powf(0.25);
        let increase = s10k.l21_partial - s100.l21_partial;
        assert!((increase - c * 100f64.ln()).abs() < 0.01 * c * 100f64.ln());
        // exceeds any fixed threshold eventually (H grows like ln N)
        let s_big = counterexample_partial_sums(2_000_000).unwrap();
        assert!(s_big.l21_partial > 3.0 * s100.l21_partial);
    }

    #[test]
    fn mixed_norm_of_zero() {
        let phi = YoungFunction::power_sum(1.0, 2.0).unwrap();
        let r = mixed_norm(&Integrand::zero(2), &phi, &y_grid()).unwrap();
        assert_eq!(r.outer_norm, 0.0);
    }

    #[test]
    fn separable_power_factorizes() {
        // ‖g ⊗ h‖_{p,p} = ‖g‖_p · ‖h‖_p for pure powers
        let g = Integrand::cauchy_power(1.0).unwrap();
        let h = Integrand::indicator(2.0, 1.5).unwrap();
        let f = Integrand::separable(g.clone(), h.clone()).unwrap();
        let phi = YoungFunction::power(2.0).unwrap();
        let r = mixed_norm(&f, &phi, &y_grid()).unwrap();
        let ng = crate::norms::luxemburg_norm(&g, &phi).unwrap().norm;
        let nh = crate::norms::luxemburg_norm(&h, &phi).unwrap().norm;
        assert_relative_eq!(r.outer_norm, ng * nh, max_relative = 1e-6);
    }

    #[test]
    fn mixed_equals_plain_for_pure_power() {
        let f = Integrand::gauss_quad(3.0).unwrap();
        let phi = YoungFunction::power(2.0).unwrap();
        let r = mixed_norm(&f, &phi, &y_grid()).unwrap();
        // plain L² norm of f_n is (π/2)^(1/2 · 1/... ): ∫∫f² = π/2
        let plain = (PI / 2.0).sqrt().sqrt();
        let _ = plain;
        let l2 = l_norm_2d(&f, 2.0, 2.0).unwrap();
        assert_relative_eq!(r.outer_norm, l2, max_relative = 1e-4);
    }

    #[test]
    fn mixed_norm_homogeneity_and_finiteness() {
        let phi = YoungFunction::power_sum(1.0, 2.0).unwrap();
        let f = Integrand::gauss_quad(4.0).unwrap();
        let r1 = mixed_norm(&f, &phi, &y_grid()).unwrap();
        assert!(r1.outer_norm.is_finite() && r1.outer_norm > 0.0);
        assert!(r1.l11.is_some() && r1.l21.is_some());
        let scaled = Integrand::finite_sum(vec![(3.0, f)]).unwrap();
        let r3 = mixed_norm(&scaled, &phi, &y_grid()).unwrap();
        assert_relative_eq!(r3.outer_norm, 3.0 * r1.outer_norm, max_relative = 1e-5);
    }

    #[test]
    fn profiles_gaussian_both_integrable() {
        let f = Integrand::gauss_quad(3.0).unwrap();
        let phi = YoungFunction::power_sum(1.0, 2.0).unwrap();
        let rep = profiles_g_h(&f, &phi, &y_grid()).unwrap();
        assert!(rep.g_integrable && rep.h_integrable);
        assert!(rep.consistent, "{rep:?}");
    }

    #[test]
    fn profiles_of_zero() {
        let phi = YoungFunction::power_sum(1.0, 2.0).unwrap();
        let rep = profiles_g_h(&Integrand::zero(2), &phi, &y_grid()).unwrap();
        assert!(rep.g_samples.iter().all(|(_, v)| *v == 0.0));
        assert!(rep.h_samples.iter().all(|(_, v)| *v == 0.0));
    }
}
