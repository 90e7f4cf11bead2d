//! One-dimensional search: grid scan with golden-section refinement, and
//! bisection on a sign change.

const INV_PHI: f64 = 0.618_033_988_749_894_8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Goal {
    Minimize,
    Maximize,
}

impl Goal {
    #[inline]
    fn better(self, candidate: f64, incumbent: f64) -> bool {
        match self {
            Goal::Minimize => candidate < incumbent,
            Goal::Maximize => candidate > incumbent,
        }
    }
}

/// Location and value of an extremum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub x: f64,
    pub value: f64,
}

/// Golden-section search for a unimodal `f` on `[lo, hi]`.
///
/// Stops when the bracket is narrower than `x_tol` or after 200 steps. The
/// endpoints are not evaluated; callers that care compare them separately.
pub fn golden_section<F>(f: F, mut lo: f64, mut hi: f64, x_tol: f64, goal: Goal) -> Extremum
where
    F: Fn(f64) -> f64,
{
    let mut left = hi - INV_PHI * (hi - lo);
    let mut right = lo + INV_PHI * (hi - lo);
    let mut f_left = f(left);
    let mut f_right = f(right);
    for _ in 0..200 {
        if hi - lo <= x_tol {
            break;
        }
        if goal.better(f_left, f_right) {
            hi = right;
            right = left;
            f_right = f_left;
            left = hi - INV_PHI * (hi - lo);
            f_left = f(left);
        } else {
            lo = left;
            left = right;
            f_left = f_right;
            right = lo + INV_PHI * (hi - lo);
            f_right = f(right);
        }
    }
    if goal.better(f_left, f_right) {
        Extremum { x: left, value: f_left }
    } else {
        Extremum { x: right, value: f_right }
    }
}

/// Global extremum of `f` on `[lo, hi]`: an `n`-point uniform scan locates
/// the best grid cell, then golden section refines within its neighbours.
///
/// Sound whenever `f` is unimodal on each pair of adjacent grid cells around
/// the global extremum.
pub fn scan_and_refine<F>(f: F, lo: f64, hi: f64, n: usize, goal: Goal) -> Extremum
where
    F: Fn(f64) -> f64,
{
    let n = n.max(3);
    let step = (hi - lo) / (n - 1) as f64;
    let at = |k: usize| if k == n - 1 { hi } else { lo + step * k as f64 };
    let mut best_k = 0;
    let mut best = f(lo);
    for k in 1..n {
        let value = f(at(k));
        if goal.better(value, best) {
            best = value;
            best_k = k;
        }
    }
    let grid = Extremum { x: at(best_k), value: best };
    let left = at(best_k.saturating_sub(1));
    let right = at((best_k + 1).min(n - 1));
    let refined = golden_section(&f, left, right, 1e-13 * (1.0 + right.abs()), goal);
    if goal.better(refined.value, grid.value) {
        refined
    } else {
        grid
    }
}

/// Bisection for the sign change of `f` on `[lo, hi]`, where `f(lo) > 0 ≥ f(hi)`.
///
/// Returns the last point known to satisfy `f > 0`, within `width` of the root.
pub fn bisect_positive_edge<F>(f: F, mut lo: f64, mut hi: f64, width: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    while hi - lo > width {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}
