//! Logarithmically spaced evaluation grids.

/// A log-spaced grid on `[lo, hi]`, the scan domain for exponent searches,
/// validation sweeps, and equivalence scans.
///
/// The default window `[1e-8, 1e8]` spans both asymptotic regimes (t → 0⁺
/// and t → ∞) that the limit exponents concern.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
}

pub const DEFAULT_GRID_POINTS: usize = 512;

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            lo: 1e-8,
            hi: 1e8,
            points: DEFAULT_GRID_POINTS,
        }
    }
}

impl GridSpec {
    pub fn new(lo: f64, hi: f64, points: usize) -> Self {
        assert!(
            lo > 0.0 && hi > lo,
            "grid range must be positive and increasing"
        );
        assert!(points >= 2);
        GridSpec { lo, hi, points }
    }

    /// Same window with `factor` times as many points.
    pub fn refined(&self, factor: usize) -> Self {
        GridSpec {
            lo: self.lo,
            hi: self.hi,
            points: self.points * factor,
        }
    }

    /// The grid points, log-spaced inclusive of both endpoints.
    pub fn points_vec(&self) -> Vec<f64> {
        let (la, lb) = (self.lo.ln(), self.hi.ln());
        let n = self.points;
        (0..n)
            .map(|i| (la + (lb - la) * i as f64 / (n - 1) as f64).exp())
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> {
        self.points_vec().into_iter()
    }
}
