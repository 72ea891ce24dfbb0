//! Bracketed root finding and one-dimensional extremum refinement.

use crate::error::{Error, Result};

/// Bisection on a bracket `[lo, hi]` with `f(lo)` and `f(hi)` of opposite
/// sign. Converges to relative tolerance `rtol` on the root or stops at
/// `max_iter`.
pub fn bisect<F: FnMut(f64) -> f64>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    rtol: f64,
    max_iter: usize,
) -> Result<(f64, usize)> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok((lo, 0));
    }
    if fhi == 0.0 {
        return Ok((hi, 0));
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Domain(format!(
            "bisection bracket does not straddle a root: f({lo:e}) = {flo:e}, f({hi:e}) = {fhi:e}"
        )));
    }
    let mut iters = 0;
    for _ in 0..max_iter {
        iters += 1;
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid);
        if fmid == 0.0 || (hi - lo) <= rtol * mid.abs().max(f64::MIN_POSITIVE) {
            return Ok((mid, iters));
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    Ok((0.5 * (lo + hi), iters))
}

/// Newton iteration with a bisection safeguard (Numerical Recipes style).
/// `f` returns the value and derivative. Falls back to bisection whenever
/// the Newton step leaves the bracket or stalls.
pub fn newton_bisect<F: FnMut(f64) -> (f64, f64)>(
    mut f: F,
    lo: f64,
    hi: f64,
    rtol: f64,
    max_iter: usize,
) -> Result<f64> {
    let (flo, _) = f(lo);
    let (fhi, _) = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Domain(
            "newton bracket does not straddle a root".into(),
        ));
    }
    let (mut xl, mut xh) = if flo < 0.0 { (lo, hi) } else { (hi, lo) };
    let mut x = 0.5 * (lo + hi);
    let mut dx_old = (hi - lo).abs();
    let mut dx = dx_old;
    let (mut fv, mut dv) = f(x);
    for _ in 0..max_iter {
        let newton_escapes = ((x - xh) * dv - fv) * ((x - xl) * dv - fv) > 0.0
            || (2.0 * fv).abs() > (dx_old * dv).abs();
        if newton_escapes {
            dx_old = dx;
            dx = 0.5 * (xh - xl);
            x = xl + dx;
        } else {
            dx_old = dx;
            dx = fv / dv;
            x -= dx;
        }
        if dx.abs() <= rtol * x.abs().max(f64::MIN_POSITIVE) {
            return Ok(x);
        }
        let (nf, nd) = f(x);
        fv = nf;
        dv = nd;
        if fv < 0.0 {
            xl = x;
        } else {
            xh = x;
        }
    }
    Ok(x)
}

const INV_GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for the maximum of `f` on `[a, b]`.
/// Returns `(argmax, max)`. Assumes `f` is unimodal on the bracket; on a
/// merely piecewise-monotone function it still converges to a one-sided
/// extremum of the bracket.
pub fn golden_max<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, xtol: f64) -> (f64, f64) {
    let (mut a, mut b) = (a, b);
    let mut x1 = b - INV_GOLDEN * (b - a);
    let mut x2 = a + INV_GOLDEN * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while (b - a).abs() > xtol * (a.abs() + b.abs()).max(1e-300) {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_GOLDEN * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_GOLDEN * (b - a);
            f1 = f(x1);
        }
    }
    let xm = 0.5 * (a + b);
    let fm = f(xm);
    if fm >= f1 && fm >= f2 {
        (xm, fm)
    } else if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Golden-section search for the minimum of `f` on `[a, b]`.
pub fn golden_min<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, xtol: f64) -> (f64, f64) {
    let (x, fneg) = golden_max(|t| -f(t), a, b, xtol);
    (x, -fneg)
}

/// Largest real root of the depressed cubic `x^3 + p x + q = 0`.
///
/// For positive discriminant uses the Cardano radical form; otherwise the
/// trigonometric form for the casus irreducibilis.
pub fn cubic_depressed_largest_root(p: f64, q: f64) -> f64 {
    let disc = 0.25 * q * q + p * p * p / 27.0;
    if disc >= 0.0 {
        let s = disc.sqrt();
        (-0.5 * q + s).cbrt() + (-0.5 * q - s).cbrt()
    } else {
        // three real roots; the k = 0 branch is the largest
        let m = 2.0 * (-p / 3.0).sqrt();
        let theta = (3.0 * q / (p * m)).acos();
        m * (theta / 3.0).cos()
    }
}
