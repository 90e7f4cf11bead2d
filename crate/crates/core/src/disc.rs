//! Largest inscribed and smallest circumscribed discs of `G_α(𝔻)` about a
//! real center `a`.
//!
//! With `x = cos t`, the squared distance from `(a, 0)` to `G_α(e^{it})` is
//!
//! ```text
//! H(x) = (1 − a)² + (1 + 2(1 − a)(1 − α)x) / ((1 + α)² − 4αx²),   x ∈ [−1, 1]
//! ```
//!
//! and the two radii are `min √H` and `max √H`. The maximum always sits at an
//! endpoint; the minimum moves into the interior when `a` is close to 1.

use crate::error::{finite, Error, Result};
use crate::region::RegionParam;
use crate::tolerance;

/// A real center `a` admissible for a given region: `|a − 1| < 1/(2(1 − α))`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct CenterParam {
    a: f64,
}

impl CenterParam {
    pub fn new(region: RegionParam, a: f64) -> Result<Self> {
        finite("center", a)?;
        let (lo, hi) = admissible_interval(region);
        if a <= lo || a >= hi {
            return Err(Error::out_of_range(
                "center",
                a,
                format!("must satisfy {lo} < center < {hi} for alpha = {}", region.alpha()),
            ));
        }
        Ok(Self { a })
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.a
    }

    fn revalidate(self, region: RegionParam) -> Result<Self> {
        Self::new(region, self.a)
    }
}

/// Open interval `((1 − 2α)/(2 − 2α), (3 − 2α)/(2 − 2α))` of admissible centers.
pub fn admissible_interval(region: RegionParam) -> (f64, f64) {
    let alpha = region.alpha();
    let denom = 2.0 - 2.0 * alpha;
    ((1.0 - 2.0 * alpha) / denom, (3.0 - 2.0 * alpha) / denom)
}

/// Center thresholds separating the cases of the inscribed radius.
///
/// `alpha1`/`alpha1_tilde` select the formula; `alpha0`/`alpha0_tilde` bound
/// the centers for which the distance profile has real critical points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseThresholds {
    pub alpha0: f64,
    pub alpha1: f64,
    pub alpha0_tilde: f64,
    pub alpha1_tilde: f64,
}

impl CaseThresholds {
    pub fn new(region: RegionParam) -> Self {
        let alpha = region.alpha();
        let critical = alpha.sqrt() / (1.0 - alpha * alpha);
        let seam = interior_half_width(alpha);
        Self { alpha0: 1.0 - critical, alpha1: 1.0 - seam, alpha0_tilde: 1.0 + critical, alpha1_tilde: 1.0 + seam }
    }
}

fn interior_half_width(alpha: f64) -> f64 {
    4.0 * alpha / ((1.0 - alpha) * (1.0 + 6.0 * alpha + alpha * alpha))
}

/// Open disc `D(center; radius)` with a real center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disc {
    pub center: f64,
    pub radius: f64,
}

impl Disc {
    pub fn new(center: f64, radius: f64) -> Result<Self> {
        finite("center", center)?;
        finite("radius", radius)?;
        if radius < 0.0 {
            return Err(Error::out_of_range("radius", radius, "must be nonnegative"));
        }
        Ok(Self { center, radius })
    }
}

/// Which formula produced an inscribed radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscBranch {
    /// Nearest boundary point is `G_α(−1)`: `r = a − 1 + 1/(1 − α)`.
    LeftEndpoint,
    /// Nearest boundary point is interior to the arc: `r = √s(α, a)`.
    Interior,
    /// Nearest boundary point is `G_α(1)`: `r = 1 − a + 1/(1 − α)`.
    RightEndpoint,
}

impl DiscBranch {
    pub fn label(self) -> &'static str {
        match self {
            DiscBranch::LeftEndpoint => "left_endpoint",
            DiscBranch::Interior => "interior",
            DiscBranch::RightEndpoint => "right_endpoint",
        }
    }
}

/// Squared distance `H(x)` from `(a, 0)` to the boundary point with `cos t = x`.
pub fn h_profile(region: RegionParam, center: CenterParam, x: f64) -> Result<f64> {
    finite("x", x)?;
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::out_of_range("x", x, "must lie in [-1, 1]"));
    }
    let center = center.revalidate(region)?;
    Ok(h_profile_unchecked(region.alpha(), center.a, x))
}

#[inline]
pub(crate) fn h_profile_unchecked(alpha: f64, a: f64, x: f64) -> f64 {
    let shift = 1.0 - a;
    let onem = 1.0 - alpha;
    // (1 + α)² − 4αx², exact at x = ±1
    let denom = onem * onem + 4.0 * alpha * (1.0 - x) * (1.0 + x);
    shift * shift + (1.0 + 2.0 * shift * onem * x) / denom
}

/// `α − (1 − a)²(1 − α²)²`, with seam-level underflow snapped to zero.
fn critical_radicand(alpha: f64, a: f64) -> f64 {
    let shift = 1.0 - a;
    let squeeze = 1.0 - alpha * alpha;
    let value = alpha - shift * shift * squeeze * squeeze;
    if value < 0.0 && value > -tolerance::SEAM_UNDERFLOW {
        0.0
    } else {
        value
    }
}

/// Real zeros `(x1, x2)` of `4α(1−α)(1−a)x² + 4αx + (1−α)(1+α)²(1−a)`, the
/// critical points of `H`.
///
/// Absent when `α = 0`, `a = 1`, or the roots are complex. The pair satisfies
/// `x1·x2 = (1 + α)²/(4α)`; `x2` is the one that can fall in `[−1, 1]`.
pub fn critical_points(region: RegionParam, center: CenterParam) -> Option<(f64, f64)> {
    let alpha = region.alpha();
    let a = center.a;
    if alpha == 0.0 || a == 1.0 {
        return None;
    }
    let radicand = critical_radicand(alpha, a);
    if radicand < 0.0 {
        return None;
    }
    let root = (alpha * radicand).sqrt();
    let denom = 2.0 * alpha * (1.0 - a) * (1.0 - alpha);
    let x1 = -(alpha + root) / denom;
    // the product identity avoids the cancellation in −(α − root)
    let x2 = (1.0 + alpha) * (1.0 + alpha) / (4.0 * alpha) / x1;
    Some((x1, x2))
}

/// `s(α, a)`, the squared interior inscribed radius. Requires `α > 0`.
pub fn s_value(region: RegionParam, center: CenterParam) -> Result<f64> {
    let alpha = region.alpha();
    if alpha == 0.0 {
        return Err(Error::out_of_range("alpha", alpha, "s(alpha, a) requires alpha > 0"));
    }
    let a = center.revalidate(region)?.a;
    let radicand = critical_radicand(alpha, a);
    if radicand < 0.0 {
        return Err(Error::out_of_range(
            "center",
            a,
            format!("s(alpha, a) requires |a - 1| <= sqrt(alpha)/(1 - alpha^2) for alpha = {alpha}"),
        ));
    }
    Ok(s_unchecked(alpha, a, radicand))
}

fn s_unchecked(alpha: f64, a: f64, radicand: f64) -> f64 {
    let shift = 1.0 - a;
    let onep = 1.0 + alpha;
    ((alpha * radicand).sqrt() + alpha * (1.0 + 2.0 * onep * onep * shift * shift)) / (2.0 * alpha * onep * onep)
}

/// Radius of the largest disc about `a` contained in `G_α(𝔻)`.
pub fn inscribed_radius(region: RegionParam, center: CenterParam) -> Result<f64> {
    inscribed_radius_with_branch(region, center).map(|(r, _)| r)
}

pub fn inscribed_radius_with_branch(region: RegionParam, center: CenterParam) -> Result<(f64, DiscBranch)> {
    let a = center.revalidate(region)?.a;
    let alpha = region.alpha();
    let reach = 1.0 / (1.0 - alpha);
    let seams = CaseThresholds::new(region);
    if a <= seams.alpha1 {
        Ok((a - 1.0 + reach, DiscBranch::LeftEndpoint))
    } else if a >= seams.alpha1_tilde {
        Ok((1.0 - a + reach, DiscBranch::RightEndpoint))
    } else {
        // α₁ < a < ᾱ₁ is empty for α = 0, so α > 0 here
        let radicand = critical_radicand(alpha, a).max(0.0);
        Ok((s_unchecked(alpha, a, radicand).sqrt(), DiscBranch::Interior))
    }
}

/// Radius `|a − 1| + 1/(1 − α)` of the smallest disc about `a` containing `G_α(𝔻)`.
pub fn circumscribed_radius(region: RegionParam, center: CenterParam) -> Result<f64> {
    let a = center.revalidate(region)?.a;
    let reach = 1.0 / (1.0 - region.alpha());
    Ok(if a <= 1.0 { 1.0 - a + reach } else { a - 1.0 + reach })
}
