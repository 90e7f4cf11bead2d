//! The Booth lemniscate region `G_α(𝔻)`.
//!
//! The boundary is the oval `((u−1)² + v²)² = ((u−1)/(1−α))² + (v/(1+α))²`.
//! Writing `w − 1 = ρe^{iθ}` turns it into the polar curve
//! `ρ(θ)² = cos²θ/(1−α)² + sin²θ/(1+α)²`, which is single-valued, so the
//! region is starlike about `w = 1` and membership is a radial comparison.

use std::f64::consts::TAU;

use crate::error::{finite, Error, Result};
use crate::tolerance;
use crate::ComplexPoint;

/// The parameter `α ∈ [0, 1)` of `G_α(z) = 1 + z/(1 − αz²)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RegionParam {
    alpha: f64,
}

impl RegionParam {
    pub fn new(alpha: f64) -> Result<Self> {
        finite("alpha", alpha)?;
        if !(0.0..1.0).contains(&alpha) {
            return Err(Error::out_of_range("alpha", alpha, "must satisfy 0 ≤ alpha < 1"));
        }
        Ok(Self { alpha })
    }

    #[inline]
    pub fn alpha(self) -> f64 {
        self.alpha
    }

    /// `G_α(z)` for `|z| < 1`.
    pub fn eval_map(self, z: ComplexPoint) -> Result<ComplexPoint> {
        check_point("z", z)?;
        let modulus = z.norm();
        if modulus >= 1.0 {
            return Err(Error::out_of_range("|z|", modulus, "must satisfy |z| < 1"));
        }
        Ok(1.0 + z / (1.0 - self.alpha * z * z))
    }

    /// `G_α(e^{it})`, the boundary point with parameter `t`.
    pub fn boundary_point(self, t: f64) -> Result<ComplexPoint> {
        finite("t", t)?;
        Ok(self.boundary_point_unchecked(t.rem_euclid(TAU)))
    }

    pub(crate) fn boundary_point_unchecked(self, t: f64) -> ComplexPoint {
        let a = self.alpha;
        let (sin, cos) = t.sin_cos();
        // 1 + α² − 2α cos 2t, without the cancellation near t = 0, π
        let denom = (1.0 - a) * (1.0 - a) + 4.0 * a * sin * sin;
        ComplexPoint::new(1.0 + (1.0 - a) * cos / denom, (1.0 + a) * sin / denom)
    }

    /// Distance from `w = 1` to the boundary along direction `theta`.
    pub fn polar_boundary_radius(self, theta: f64) -> f64 {
        let (sin, cos) = theta.rem_euclid(TAU).sin_cos();
        self.radius_from_direction(cos, sin)
    }

    fn radius_from_direction(self, cos: f64, sin: f64) -> f64 {
        let a = self.alpha;
        let along_real = cos / (1.0 - a);
        let along_imag = sin / (1.0 + a);
        along_real.hypot(along_imag)
    }

    /// Radial membership test about `w = 1`.
    pub fn contains(self, w: ComplexPoint) -> MembershipVerdict {
        let offset = w - 1.0;
        let distance = offset.norm();
        let radial_margin = if distance == 0.0 {
            -1.0 / (1.0 + self.alpha)
        } else {
            distance - self.radius_from_direction(offset.re / distance, offset.im / distance)
        };
        MembershipVerdict::from_margin(radial_margin)
    }

    /// `n ≥ 8` boundary points at `t = 2πk/n`, `k = 0..n`. The curve is not
    /// closed; append the first point to close it.
    pub fn boundary_polyline(self, n: usize) -> Result<Vec<ComplexPoint>> {
        if n < 8 {
            return Err(Error::out_of_range("samples", n as f64, "must be at least 8"));
        }
        Ok((0..n).map(|k| self.boundary_point_unchecked(polyline_angle(k, n))).collect())
    }
}

/// Parameter of the `k`-th of `n` equally spaced boundary samples.
pub fn polyline_angle(k: usize, n: usize) -> f64 {
    TAU * k as f64 / n as f64
}

fn check_point(name: &'static str, z: ComplexPoint) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { name })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembershipVerdict {
    /// `margin < 0`.
    pub inside: bool,
    /// `|w − 1| − ρ(arg(w − 1))`; negative inside, positive outside.
    pub radial_margin: f64,
}

impl MembershipVerdict {
    fn from_margin(radial_margin: f64) -> Self {
        Self { inside: radial_margin < 0.0, radial_margin }
    }

    /// Three-way classification with a `1e-12` boundary band.
    pub fn location(&self) -> Location {
        if self.radial_margin.abs() <= tolerance::BOUNDARY {
            Location::Boundary
        } else if self.radial_margin < 0.0 {
            Location::Inside
        } else {
            Location::Outside
        }
    }
}
