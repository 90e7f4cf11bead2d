//! Function classes, their `zf′/f` disc bounds and their Booth lemniscate
//! starlikeness radii.
//!
//! Every class here reduces to one of two disc families on `|z| ≤ r`:
//!
//! * Koebe type, extremal `k_β(z) = z/(1 − z)^{2−2β}` with
//!   `zk′/k = (1 + (1 − 2β)z)/(1 − z)`: center `(1 + (1 − 2β)r²)/(1 − r²)`,
//!   radius `2|1 − β|r/(1 − r²)`. Starlike of order β (β < 1) and `M(β)` (β > 1).
//! * Janowski type, `zf′/f ≺ (1 + Az)/(1 + Bz)`: center
//!   `(1 − ABr²)/(1 − B²r²)`, radius `(A − B)r/(1 − B²r²)`.

use std::fmt;

use crate::disc::Disc;
use crate::error::{finite, Error, Result};
use crate::region::RegionParam;
use crate::ComplexPoint;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FunctionClass {
    /// `Re zf′/f > β`, `0 ≤ β < 1`.
    StarlikeOrder {
        beta: f64,
    },
    Starlike,
    Convex,
    /// `Re zf′/f < β`, `1 < β < 4/3`.
    MClass {
        beta: f64,
    },
    /// `zf′/f ≺ (1 + Az)/(1 + Bz)`, `−1 < B < A ≤ 1`.
    Janowski {
        a: f64,
        b: f64,
    },
    /// Janowski `[β, −β]`, `0 < β ≤ 1`.
    Parvatham {
        beta: f64,
    },
    /// Janowski `[1 − β, 0]`, `0 ≤ β < 1`.
    Fournier {
        beta: f64,
    },
}

/// The two disc families every class reduces to.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Family {
    Koebe { beta: f64 },
    Janowski { a: f64, b: f64 },
}

impl FunctionClass {
    pub fn starlike_order(beta: f64) -> Result<Self> {
        Self::StarlikeOrder { beta }.validated()
    }

    pub fn m_class(beta: f64) -> Result<Self> {
        Self::MClass { beta }.validated()
    }

    pub fn janowski(a: f64, b: f64) -> Result<Self> {
        Self::Janowski { a, b }.validated()
    }

    pub fn parvatham(beta: f64) -> Result<Self> {
        Self::Parvatham { beta }.validated()
    }

    pub fn fournier(beta: f64) -> Result<Self> {
        Self::Fournier { beta }.validated()
    }

    /// Checks the parameter ranges; variants are public, so every operation
    /// calls this before use.
    pub fn validated(self) -> Result<Self> {
        match self {
            Self::Starlike | Self::Convex => {}
            Self::StarlikeOrder { beta } => {
                finite("beta", beta)?;
                if !(0.0..1.0).contains(&beta) {
                    return Err(Error::out_of_range("beta", beta, "starlike-order requires 0 ≤ beta < 1"));
                }
            }
            Self::MClass { beta } => {
                finite("beta", beta)?;
                if !(beta > 1.0 && beta < 4.0 / 3.0) {
                    return Err(Error::out_of_range("beta", beta, "m-class requires 1 < beta < 4/3"));
                }
            }
            Self::Janowski { a, b } => check_janowski(a, b)?,
            Self::Parvatham { beta } => {
                finite("beta", beta)?;
                if !(beta > 0.0 && beta <= 1.0) {
                    return Err(Error::out_of_range("beta", beta, "parvatham requires 0 < beta ≤ 1"));
                }
            }
            Self::Fournier { beta } => {
                finite("beta", beta)?;
                if !(0.0..1.0).contains(&beta) {
                    return Err(Error::out_of_range("beta", beta, "fournier requires 0 ≤ beta < 1"));
                }
            }
        }
        Ok(self)
    }

    /// Command-line name of the class.
    pub fn name(&self) -> &'static str {
        match self {
            Self::StarlikeOrder { .. } => "starlike-order",
            Self::Starlike => "starlike",
            Self::Convex => "convex",
            Self::MClass { .. } => "m-class",
            Self::Janowski { .. } => "janowski",
            Self::Parvatham { .. } => "parvatham",
            Self::Fournier { .. } => "fournier",
        }
    }

    /// `(A, B)` for the classes that are Janowski classes.
    ///
    /// Parvatham with `β = 1` gives `B = −1`, outside the range accepted by
    /// [`FunctionClass::janowski`].
    pub fn janowski_params(&self) -> Option<(f64, f64)> {
        match self.family() {
            Family::Janowski { a, b } => Some((a, b)),
            Family::Koebe { .. } => None,
        }
    }

    fn family(&self) -> Family {
        match *self {
            Self::StarlikeOrder { beta } | Self::MClass { beta } => Family::Koebe { beta },
            Self::Starlike => Family::Koebe { beta: 0.0 },
            // every convex function is starlike of order 1/2 and k_{1/2} is convex
            Self::Convex => Family::Koebe { beta: 0.5 },
            Self::Janowski { a, b } => Family::Janowski { a, b },
            Self::Parvatham { beta } => Family::Janowski { a: beta, b: -beta },
            Self::Fournier { beta } => Family::Janowski { a: 1.0 - beta, b: 0.0 },
        }
    }
}

impl fmt::Display for FunctionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::StarlikeOrder { beta }
            | Self::MClass { beta }
            | Self::Parvatham { beta }
            | Self::Fournier { beta } => {
                write!(f, "{}(beta={beta})", self.name())
            }
            Self::Janowski { a, b } => write!(f, "janowski(A={a}, B={b})"),
            Self::Starlike | Self::Convex => f.write_str(self.name()),
        }
    }
}

/// The constraint on `A` alone, so a bad `A` is reported even without `B`.
pub(crate) fn check_janowski_a(a: f64) -> Result<()> {
    finite("A", a)?;
    if a > 1.0 {
        return Err(Error::out_of_range("A", a, "must satisfy A ≤ 1"));
    }
    Ok(())
}

fn check_janowski(a: f64, b: f64) -> Result<()> {
    check_janowski_a(a)?;
    finite("B", b)?;
    if b == -1.0 {
        return Err(Error::Unsupported {
            name: "B",
            guidance: format!(
                "B = -1 is starlike of order (1 - A)/2; use starlike-order with beta = {}",
                (1.0 - a) / 2.0
            ),
        });
    }
    if b <= -1.0 {
        return Err(Error::out_of_range("B", b, "must satisfy B > -1"));
    }
    if b >= a {
        return Err(Error::out_of_range("A", a, format!("must exceed B = {b}")));
    }
    Ok(())
}

/// Formula that produced a radius.
///
/// `Rho0` is the interior-touch formula `2√α/((1 + α)√(…))`, where the disc
/// meets the boundary away from the real axis; `Rho0Tilde` is the
/// real-axis-touch formula, where the disc reaches `G_α(±1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Rho0,
    Rho0Tilde,
    AlphaZero,
    ClampedOne,
}

impl Branch {
    pub fn label(self) -> &'static str {
        match self {
            Branch::Rho0 => "rho0",
            Branch::Rho0Tilde => "rho0_tilde",
            Branch::AlphaZero => "alpha_zero",
            Branch::ClampedOne => "clamped_one",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusResult {
    /// `min{1, raw}`.
    pub value: f64,
    /// Formula value before the clamp at 1.
    pub raw: f64,
    pub branch: Branch,
    pub clamped: bool,
}

// Formula values within this many ulps of 1 are exact ones up to rounding.
const CLAMP_SLACK: f64 = 4.0 * f64::EPSILON;

impl RadiusResult {
    fn unclamped(raw: f64, branch: Branch) -> Self {
        Self { value: raw, raw, branch, clamped: false }
    }

    fn clamp_at_one(raw: f64, branch: Branch) -> Self {
        if raw >= 1.0 - CLAMP_SLACK {
            Self { value: 1.0, raw, branch: Branch::ClampedOne, clamped: true }
        } else {
            Self::unclamped(raw, branch)
        }
    }
}

/// Disc containing `zf′/f` on `|z| ≤ r` for every member of `cls`.
pub fn class_disc(cls: FunctionClass, r: f64) -> Result<Disc> {
    let cls = cls.validated()?;
    finite("r", r)?;
    if !(0.0..1.0).contains(&r) {
        return Err(Error::out_of_range("r", r, "must satisfy 0 ≤ r < 1"));
    }
    Ok(disc_unchecked(cls.family(), r))
}

pub(crate) fn class_disc_unchecked(cls: FunctionClass, r: f64) -> Disc {
    disc_unchecked(cls.family(), r)
}

fn disc_unchecked(family: Family, r: f64) -> Disc {
    let r2 = r * r;
    match family {
        Family::Koebe { beta } => Disc {
            center: (1.0 + (1.0 - 2.0 * beta) * r2) / (1.0 - r2),
            radius: 2.0 * (1.0 - beta).abs() * r / (1.0 - r2),
        },
        Family::Janowski { a, b } => {
            let denom = 1.0 - b * b * r2;
            Disc { center: (1.0 - a * b * r2) / denom, radius: (a - b) * r / denom }
        }
    }
}

/// Largest `r` such that `zf′/f` maps `|z| < r` into `G_α(𝔻)` for every
/// member of `cls`.
pub fn bs_radius(cls: FunctionClass, region: RegionParam) -> Result<RadiusResult> {
    let cls = cls.validated()?;
    let alpha = region.alpha();
    Ok(match cls.family() {
        Family::Koebe { beta } if beta < 1.0 => {
            let spread = 1.0 - beta;
            if alpha == 0.0 {
                RadiusResult::unclamped(axis_touch_koebe(alpha, spread), Branch::AlphaZero)
            } else if beta < f64::max(0.0, (9.0 * alpha - 1.0) / (8.0 * alpha)) {
                RadiusResult::unclamped(interior_touch(alpha, 1.0, 2.0 * spread), Branch::Rho0)
            } else {
                RadiusResult::unclamped(axis_touch_koebe(alpha, spread), Branch::Rho0Tilde)
            }
        }
        Family::Koebe { beta } => {
            let spread = beta - 1.0;
            if alpha == 0.0 {
                RadiusResult::unclamped(axis_touch_koebe(alpha, spread), Branch::AlphaZero)
            } else if beta <= 1.0 + (1.0 - alpha) / (8.0 * alpha) {
                RadiusResult::unclamped(axis_touch_koebe(alpha, spread), Branch::Rho0Tilde)
            } else {
                RadiusResult::unclamped(interior_touch(alpha, 1.0, 2.0 * spread), Branch::Rho0)
            }
        }
        Family::Janowski { a, b } => {
            let axis = axis_touch_janowski(alpha, a, b);
            let interior_wins = if b <= 0.0 {
                4.0 * a * alpha > (5.0 * alpha - 1.0) * b
            } else {
                4.0 * a * alpha > (3.0 * alpha + 1.0) * b
            };
            if alpha == 0.0 {
                RadiusResult::clamp_at_one(axis, Branch::AlphaZero)
            } else if interior_wins {
                RadiusResult::clamp_at_one(interior_touch(alpha, b.abs(), a - b), Branch::Rho0)
            } else {
                RadiusResult::clamp_at_one(axis, Branch::Rho0Tilde)
            }
        }
    })
}

/// Both candidate formulas `(rho0, rho0_tilde)` before branch selection and
/// clamping. They coincide on the branch threshold.
pub fn branch_values(cls: FunctionClass, region: RegionParam) -> Result<(f64, f64)> {
    let alpha = region.alpha();
    Ok(match cls.validated()?.family() {
        Family::Koebe { beta } => {
            let spread = (1.0 - beta).abs();
            (interior_touch(alpha, 1.0, 2.0 * spread), axis_touch_koebe(alpha, spread))
        }
        Family::Janowski { a, b } => (interior_touch(alpha, b.abs(), a - b), axis_touch_janowski(alpha, a, b)),
    })
}

/// `1 / ((1 − α)(A − B) − B)` for `B ≤ 0`, reaching `G_α(1)`; `B > 0` reaches
/// `G_α(−1)` with `+B`.
fn axis_touch_janowski(alpha: f64, a: f64, b: f64) -> f64 {
    1.0 / ((1.0 - alpha) * (a - b) + b.abs())
}

/// `2√α / ((1 + α)√(4α·width² + offset²))`; Koebe type has `width = 2(1 − β)`
/// and `offset = 1`, Janowski type `width = A − B` and `offset = |B|`.
fn interior_touch(alpha: f64, offset: f64, width: f64) -> f64 {
    2.0 * alpha.sqrt() / ((1.0 + alpha) * (4.0 * alpha * width * width + offset * offset).sqrt())
}

/// `1 / (1 + 2(1 − α)·spread)`.
fn axis_touch_koebe(alpha: f64, spread: f64) -> f64 {
    1.0 / (1.0 + 2.0 * (1.0 - alpha) * spread)
}

/// Which sufficient condition established a Janowski inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InclusionCondition {
    First,
    Second,
}

impl InclusionCondition {
    pub fn label(self) -> &'static str {
        match self {
            InclusionCondition::First => "i",
            InclusionCondition::Second => "ii",
        }
    }
}

/// Outcome of the sufficient test for `S*[A, B] ⊂ BS(α)`.
///
/// `holds = false` means the test does not establish the inclusion, not that
/// the inclusion fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InclusionVerdict {
    pub holds: bool,
    pub via_condition: Option<InclusionCondition>,
}

pub fn inclusion_holds(region: RegionParam, a: f64, b: f64) -> Result<InclusionVerdict> {
    check_janowski(a, b)?;
    let alpha = region.alpha();
    let width = a - b;
    let seam_lhs = (1.0 - alpha) * (1.0 + 6.0 * alpha + alpha * alpha) * b.abs() * width;
    let seam_rhs = 4.0 * alpha * (1.0 - b * b);
    let interior = (1.0 + alpha).powi(2) * (4.0 * alpha * width * width + b * b) <= 4.0 * alpha;
    let axis = (1.0 - alpha) * width + b.abs() <= 1.0;
    let via = if seam_lhs <= seam_rhs && interior {
        Some(InclusionCondition::First)
    } else if seam_lhs >= seam_rhs && axis {
        Some(InclusionCondition::Second)
    } else {
        None
    };
    Ok(InclusionVerdict { holds: via.is_some(), via_condition: via })
}

/// `zf′(z)/f(z)` of the extremal function of `cls`, from its closed form.
pub fn log_derivative(cls: FunctionClass, z: ComplexPoint) -> Result<ComplexPoint> {
    let cls = cls.validated()?;
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite { name: "z" });
    }
    let modulus = z.norm();
    if modulus >= 1.0 {
        return Err(Error::out_of_range("|z|", modulus, "must satisfy |z| < 1"));
    }
    Ok(log_derivative_unchecked(cls, z))
}

pub(crate) fn log_derivative_unchecked(cls: FunctionClass, z: ComplexPoint) -> ComplexPoint {
    match cls.family() {
        Family::Koebe { beta } => (1.0 + (1.0 - 2.0 * beta) * z) / (1.0 - z),
        Family::Janowski { a, b } => (1.0 + a * z) / (1.0 + b * z),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn region(alpha: f64) -> RegionParam {
        RegionParam::new(alpha).unwrap()
    }

    #[test]
    fn constructors_enforce_ranges() {
        assert!(FunctionClass::starlike_order(1.0).is_err());
        assert!(FunctionClass::starlike_order(-0.1).is_err());
        assert!(FunctionClass::m_class(1.0).is_err());
        assert!(FunctionClass::m_class(4.0 / 3.0).is_err());
        assert!(FunctionClass::m_class(1.2).is_ok());
        assert!(FunctionClass::parvatham(0.0).is_err());
        assert!(FunctionClass::parvatham(1.0).is_ok());
        assert!(FunctionClass::fournier(1.0).is_err());
        assert!(FunctionClass::janowski(0.5, 0.5).is_err());
        assert_eq!(FunctionClass::janowski(1.5, 0.0).unwrap_err().parameter(), Some("A"));
        assert_eq!(FunctionClass::janowski(0.5, -1.5).unwrap_err().parameter(), Some("B"));
        let minus_one = FunctionClass::janowski(0.5, -1.0).unwrap_err();
        assert!(matches!(minus_one, Error::Unsupported { .. }));
        assert!(minus_one.to_string().contains("starlike-order"));
        assert!(bs_radius(FunctionClass::StarlikeOrder { beta: 2.0 }, region(0.5)).is_err());
    }

    #[test]
    fn disc_examples() {
        let d = class_disc(FunctionClass::Starlike, 1.0 / 3.0).unwrap();
        assert!((d.center - 1.25).abs() < 1e-15 && (d.radius - 0.75).abs() < 1e-15);
        let j = class_disc(FunctionClass::janowski(1.0, 0.0).unwrap(), 0.4).unwrap();
        assert!((j.center - 1.0).abs() < 1e-15 && (j.radius - 0.4).abs() < 1e-15);
        for cls in [FunctionClass::Convex, FunctionClass::m_class(1.2).unwrap(), FunctionClass::parvatham(0.5).unwrap()]
        {
            assert_eq!(class_disc(cls, 0.0).unwrap(), Disc { center: 1.0, radius: 0.0 });
        }
        assert!(class_disc(FunctionClass::Starlike, 1.0).is_err());
        assert!(class_disc(FunctionClass::Starlike, -0.1).is_err());
    }

    #[test]
    fn radius_examples() {
        let zero = bs_radius(FunctionClass::Starlike, region(0.0)).unwrap();
        assert!((zero.value - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(zero.branch, Branch::AlphaZero);

        let half = bs_radius(FunctionClass::Starlike, region(0.5)).unwrap();
        assert!((half.value - 0.314_269_680_527_354_5).abs() < 1e-15);
        assert_eq!(half.branch, Branch::Rho0);
        assert!(!half.clamped);

        let fournier = bs_radius(FunctionClass::fournier(0.5 / 1.5).unwrap(), region(0.5)).unwrap();
        assert_eq!(fournier.value, 1.0);
        assert!(fournier.clamped);
        assert_eq!(fournier.branch, Branch::ClampedOne);
    }

    #[test]
    fn seam_routes_to_axis_formula() {
        let at_seam = bs_radius(FunctionClass::starlike_order(0.875).unwrap(), region(0.5)).unwrap();
        assert_eq!(at_seam.branch, Branch::Rho0Tilde);
        assert!((at_seam.value - 1.0 / 1.125).abs() < 1e-15);
        let root_formula = interior_touch(0.5, 1.0, 2.0 * 0.125);
        assert!((root_formula - at_seam.value).abs() < 1e-12);
    }

    #[test]
    fn janowski_branches_meet_on_thresholds() {
        // 4Aα = (5α − 1)B and 4Aα = (3α + 1)B at α = 1/2
        for (a, b) in [(-0.375, -0.5), (0.5, 0.4)] {
            let g = region(0.5);
            let (interior, axis) = branch_values(FunctionClass::janowski(a, b).unwrap(), g).unwrap();
            assert!((interior - axis).abs() < 1e-12, "A {a} B {b}: {interior} vs {axis}");
            assert_ne!(bs_radius(FunctionClass::janowski(a, b).unwrap(), g).unwrap().branch, Branch::Rho0);
        }
    }

    #[test]
    fn special_class_closed_forms() {
        for k in 0..10 {
            let alpha = k as f64 / 10.0;
            let starlike = bs_radius(FunctionClass::Starlike, region(alpha)).unwrap().value;
            let expected = if alpha <= 1.0 / 9.0 {
                1.0 / (3.0 - 2.0 * alpha)
            } else {
                2.0 * alpha.sqrt() / ((1.0 + alpha) * (1.0 + 16.0 * alpha).sqrt())
            };
            assert!((starlike - expected).abs() < 1e-14);

            let convex = bs_radius(FunctionClass::Convex, region(alpha)).unwrap().value;
            let expected = if alpha <= 0.2 {
                1.0 / (2.0 - alpha)
            } else {
                2.0 * alpha.sqrt() / ((1.0 + alpha) * (1.0 + 4.0 * alpha).sqrt())
            };
            assert!((convex - expected).abs() < 1e-14);

            let fournier_beta = 0.3;
            let fournier = bs_radius(FunctionClass::fournier(fournier_beta).unwrap(), region(alpha)).unwrap();
            let expected = f64::min(1.0, 1.0 / ((1.0 + alpha) * (1.0 - fournier_beta)));
            assert!((fournier.value - expected).abs() < 1e-14);
        }
    }

    #[test]
    fn janowski_at_alpha_zero_is_finite() {
        let r = bs_radius(FunctionClass::janowski(0.5, 0.0).unwrap(), region(0.0)).unwrap();
        assert_eq!(r.value, 1.0);
        let neg = bs_radius(FunctionClass::janowski(1.0, -0.5).unwrap(), region(0.0)).unwrap();
        assert!((neg.value - 0.5).abs() < 1e-15);
        assert_eq!(neg.branch, Branch::AlphaZero);
    }

    #[test]
    fn inclusion_examples() {
        let v = inclusion_holds(region(0.5), 0.1, -0.1).unwrap();
        assert_eq!(v, InclusionVerdict { holds: true, via_condition: Some(InclusionCondition::First) });
        let no = inclusion_holds(region(0.5), 1.0, 0.0).unwrap();
        assert_eq!(no, InclusionVerdict { holds: false, via_condition: None });
        assert!(inclusion_holds(region(0.5), 0.5, 0.5).is_err());
    }

    #[test]
    fn log_derivative_examples() {
        let origin = log_derivative(FunctionClass::Starlike, ComplexPoint::new(0.0, 0.0)).unwrap();
        assert_eq!(origin, ComplexPoint::new(1.0, 0.0));

        let alpha = 0.3;
        let beta = 0.7;
        let rho = 1.0 / (1.0 + 2.0 * (1.0 - alpha) * (1.0 - beta));
        let tip = log_derivative(FunctionClass::starlike_order(beta).unwrap(), ComplexPoint::new(rho, 0.0)).unwrap();
        assert!((tip.re - (1.0 + 1.0 / (1.0 - alpha))).abs() < 1e-14 && tip.im == 0.0);

        let j = log_derivative(FunctionClass::janowski(1.0, 0.0).unwrap(), ComplexPoint::new(0.0, 0.5)).unwrap();
        assert_eq!(j, ComplexPoint::new(1.0, 0.5));
        assert!(log_derivative(FunctionClass::Starlike, ComplexPoint::new(1.0, 0.0)).is_err());
    }
}
