//! Brute-force certification of the closed forms.
//!
//! The oracles only use the distance profile `H`, the membership test, the
//! class discs and the extremal log-derivatives. None of them calls
//! [`disc::inscribed_radius`](crate::disc::inscribed_radius),
//! [`disc::circumscribed_radius`](crate::disc::circumscribed_radius) or
//! [`classes::bs_radius`](crate::classes::bs_radius) on the path it checks.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::classes::{bs_radius, class_disc_unchecked, log_derivative_unchecked, Branch, FunctionClass};
use crate::disc::{admissible_interval, h_profile_unchecked, CenterParam};
use crate::error::{finite, Error, Result};
use crate::region::RegionParam;
use crate::search::{bisect_positive_edge, scan_and_refine, Extremum, Goal};
use crate::tolerance;
use crate::ComplexPoint;

/// Sampling densities. Every field can be overridden.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    /// Grid size for [`oracle_inscribed`] / [`oracle_circumscribed`].
    pub profile_grid: usize,
    /// Grid size for the inscribed distance inside the containment margin.
    pub margin_grid: usize,
    /// Points of the single-crossing scan over `r ∈ (0, 1)`.
    pub crossing_scan: usize,
    /// Final bisection width on `r`.
    pub bisection_width: f64,
    /// Circle samples for [`subordination_check`].
    pub circle_samples: usize,
    /// Half-circle sweep points for [`sharpness_witness`].
    pub sweep_points: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            profile_grid: 100_000,
            margin_grid: 1024,
            crossing_scan: 2048,
            bisection_width: 1e-12,
            circle_samples: 4096,
            sweep_points: 8192,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

/// A closed-form value next to its oracle value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContainmentReport {
    pub closed_form: f64,
    pub oracle: f64,
    pub abs_gap: f64,
    pub tolerance: f64,
    /// `x` of the profile extremum, or `t` of the sharpness touch.
    pub touch_parameter: Option<f64>,
    pub verdict: Verdict,
}

impl ContainmentReport {
    pub fn compare(closed_form: f64, oracle: f64, tolerance: f64, touch_parameter: Option<f64>) -> Self {
        let abs_gap = (closed_form - oracle).abs();
        let verdict = if abs_gap <= tolerance { Verdict::Pass } else { Verdict::Fail };
        Self { closed_form, oracle, abs_gap, tolerance, touch_parameter, verdict }
    }
}

/// Extremum of `√H` over `x ∈ [−1, 1]`.
pub fn profile_extremum(region: RegionParam, center: CenterParam, goal: Goal, grid: usize) -> Result<Extremum> {
    let center = CenterParam::new(region, center.value())?;
    Ok(profile_extremum_unchecked(region.alpha(), center.value(), goal, grid))
}

fn profile_extremum_unchecked(alpha: f64, a: f64, goal: Goal, grid: usize) -> Extremum {
    let squared = scan_and_refine(|x| h_profile_unchecked(alpha, a, x), -1.0, 1.0, grid, goal);
    Extremum { x: squared.x, value: squared.value.sqrt() }
}

/// Minimum distance from `(a, 0)` to the boundary, by scan and golden section.
pub fn oracle_inscribed(region: RegionParam, center: CenterParam) -> Result<f64> {
    profile_extremum(region, center, Goal::Minimize, OracleConfig::default().profile_grid).map(|e| e.value)
}

/// Maximum distance from `(a, 0)` to the boundary.
pub fn oracle_circumscribed(region: RegionParam, center: CenterParam) -> Result<f64> {
    profile_extremum(region, center, Goal::Maximize, OracleConfig::default().profile_grid).map(|e| e.value)
}

/// `(inscribed, circumscribed)` reports for one center at tolerance `tol`.
pub fn verify_disc_radii(
    region: RegionParam,
    center: CenterParam,
    tol: f64,
    config: &OracleConfig,
) -> Result<(ContainmentReport, ContainmentReport)> {
    let inner_closed = crate::disc::inscribed_radius(region, center)?;
    let outer_closed = crate::disc::circumscribed_radius(region, center)?;
    let inner = profile_extremum(region, center, Goal::Minimize, config.profile_grid)?;
    let outer = profile_extremum(region, center, Goal::Maximize, config.profile_grid)?;
    Ok((
        ContainmentReport::compare(inner_closed, inner.value, tol, Some(inner.x)),
        ContainmentReport::compare(outer_closed, outer.value, tol, Some(outer.x)),
    ))
}

/// `m(r)`: how far the class disc at radius `r` sits inside `G_α(𝔻)`.
///
/// For centers outside the admissible interval the distance to the nearer
/// real boundary point `G_α(±1)` stands in for the inscribed radius; it is
/// an upper bound and already smaller than the disc radius there.
fn containment_margin(cls: FunctionClass, region: RegionParam, r: f64, grid: usize) -> (f64, bool) {
    let alpha = region.alpha();
    let disc = class_disc_unchecked(cls, r);
    let (lo, hi) = admissible_interval(region);
    let admissible = disc.center > lo && disc.center < hi;
    let reach = if admissible {
        profile_extremum_unchecked(alpha, disc.center, Goal::Minimize, grid).value
    } else {
        let left = h_profile_unchecked(alpha, disc.center, -1.0).sqrt();
        let right = h_profile_unchecked(alpha, disc.center, 1.0).sqrt();
        left.min(right)
    };
    (reach - disc.radius, admissible)
}

/// Result of the containment bisection with its diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossingSearch {
    pub radius: f64,
    /// Sign changes of `m` seen by the scan.
    pub crossings: usize,
    /// `m > 0` on the whole scan, so the radius is 1.
    pub clamped: bool,
}

/// Largest `r` with the class disc inside `G_α(𝔻)`, by scan and bisection.
pub fn oracle_bs_radius(cls: FunctionClass, region: RegionParam) -> Result<f64> {
    oracle_bs_radius_with(cls, region, &OracleConfig::default()).map(|s| s.radius)
}

pub fn oracle_bs_radius_with(cls: FunctionClass, region: RegionParam, config: &OracleConfig) -> Result<CrossingSearch> {
    let cls = cls.validated()?;
    let lo = 1e-9;
    let hi = 1.0 - 1e-9;
    let n = config.crossing_scan.max(2);
    let at = |k: usize| lo + (hi - lo) * k as f64 / (n - 1) as f64;
    let margin = |r: f64| containment_margin(cls, region, r, config.margin_grid);

    let mut crossings = 0;
    let mut bracket = None;
    let mut previous = margin(lo).0;
    for k in 1..n {
        let r = at(k);
        let current = margin(r).0;
        if (previous > 0.0) != (current > 0.0) {
            crossings += 1;
            bracket.get_or_insert((at(k - 1), r));
        }
        previous = current;
    }

    match (crossings, bracket) {
        (0, _) if previous > 0.0 => Ok(CrossingSearch { radius: 1.0, crossings, clamped: true }),
        (1, Some((left, right))) => {
            let radius = bisect_positive_edge(|r| margin(r).0, left, right, config.bisection_width);
            let (_, admissible) = margin(radius);
            if !admissible {
                return Err(Error::CenterEscaped { center: class_disc_unchecked(cls, radius).center, r: radius });
            }
            Ok(CrossingSearch { radius, crossings, clamped: false })
        }
        _ => Err(Error::CrossingCount { crossings }),
    }
}

/// Closed-form radius against the containment bisection, with the sharpness
/// touch angle as the touch parameter.
pub fn verify_bs_radius(
    cls: FunctionClass,
    region: RegionParam,
    tol: f64,
    config: &OracleConfig,
) -> Result<(ContainmentReport, Option<SharpnessWitness>)> {
    let closed = bs_radius(cls, region)?;
    let search = oracle_bs_radius_with(cls, region, config)?;
    let witness =
        if closed.value < 1.0 { Some(sharpness_witness_with(cls, region, closed.value, config)?) } else { None };
    let touch = witness.map(|w| w.sweep_t);
    Ok((ContainmentReport::compare(closed.value, search.radius, tol, touch), witness))
}

/// Where the extremal function meets the boundary at the critical radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SharpnessWitness {
    /// `cos t*`; from the double-root formula when available, else from the sweep.
    pub x0: f64,
    /// Touch angle on `|z| = r`.
    pub t_star: f64,
    /// Membership margin of `zf′/f` at `r·e^{it*}`.
    pub margin: f64,
    /// Whether `x0` comes from a closed form rather than the sweep.
    pub analytic: bool,
    /// Maximizer of the margin over the half-circle sweep.
    pub sweep_t: f64,
    pub sweep_margin: f64,
    /// The sweep touches the boundary within `1e-7`, and agrees with the
    /// analytic touch point within `1e-4` in `x = cos t`.
    pub witnessed: bool,
}

/// Analytic `cos t*` of the touch point, when known.
///
/// Koebe-type classes on the interior-touch branch have the double root
/// `x0 = (1 + α)/(2√(α(1 + 16α(1 − β)²)))` (with `β − 1` for `M(β)`); the
/// real-axis branches touch at `t = 0`, or `t = π` for Janowski `B > 0`, and
/// Janowski `B = 0` touches at `t = π/2`. Janowski with `B ≠ 0` on the
/// interior branch, and clamped radii, have none.
pub fn touch_cosine(cls: FunctionClass, region: RegionParam) -> Result<Option<f64>> {
    let cls = cls.validated()?;
    let alpha = region.alpha();
    let branch = bs_radius(cls, region)?.branch;
    let koebe_spread = match cls {
        FunctionClass::StarlikeOrder { beta } => Some(1.0 - beta),
        FunctionClass::Starlike => Some(1.0),
        FunctionClass::Convex => Some(0.5),
        FunctionClass::MClass { beta } => Some(beta - 1.0),
        _ => None,
    };
    if let Some(spread) = koebe_spread {
        return Ok(Some(match branch {
            Branch::Rho0 => (1.0 + alpha) / (2.0 * (alpha * (1.0 + 16.0 * alpha * spread * spread)).sqrt()),
            _ => 1.0,
        }));
    }
    let (_, b) = cls.janowski_params().expect("non-Koebe classes are Janowski");
    Ok(match branch {
        Branch::ClampedOne => None,
        _ if b == 0.0 => Some(FRAC_PI_2.cos()),
        Branch::Rho0 => None,
        _ if b < 0.0 => Some(1.0),
        _ => Some(-1.0),
    })
}

pub fn sharpness_witness(cls: FunctionClass, region: RegionParam, r: f64) -> Result<SharpnessWitness> {
    sharpness_witness_with(cls, region, r, &OracleConfig::default())
}

pub fn sharpness_witness_with(
    cls: FunctionClass,
    region: RegionParam,
    r: f64,
    config: &OracleConfig,
) -> Result<SharpnessWitness> {
    let cls = cls.validated()?;
    check_radius(r)?;
    let margin_at = |t: f64| {
        let w = log_derivative_unchecked(cls, ComplexPoint::from_polar(r, t));
        region.contains(w).radial_margin
    };
    // all extremal log-derivatives have real coefficients: the half circle suffices
    let sweep = scan_and_refine(margin_at, 0.0, PI, config.sweep_points, Goal::Maximize);
    let sweep_x = sweep.x.cos();

    let analytic = touch_cosine(cls, region)?;
    let (x0, t_star) = match analytic {
        Some(x) => (x, x.clamp(-1.0, 1.0).acos()),
        None => (sweep_x, sweep.x),
    };
    let margin = margin_at(t_star);
    let touches = sweep.value.abs() <= tolerance::WITNESS_MARGIN && margin.abs() <= tolerance::WITNESS_MARGIN;
    let agrees = (x0 - sweep_x).abs() <= tolerance::WITNESS_X && x0 <= 1.0;
    Ok(SharpnessWitness {
        x0,
        t_star,
        margin,
        analytic: analytic.is_some(),
        sweep_t: sweep.x,
        sweep_margin: sweep.value,
        witnessed: touches && agrees,
    })
}

/// Worst membership margin of `zf′/f` over `n` points of `|z| = r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubordinationOutcome {
    /// Every sample maps strictly inside `G_α(𝔻)`.
    pub holds: bool,
    pub worst_margin: f64,
    pub worst_angle: f64,
}

pub fn subordination_check(cls: FunctionClass, region: RegionParam, r: f64, n: usize) -> Result<SubordinationOutcome> {
    let cls = cls.validated()?;
    check_radius(r)?;
    if n < 64 {
        return Err(Error::out_of_range("samples", n as f64, "must be at least 64"));
    }
    let mut worst = SubordinationOutcome { holds: true, worst_margin: f64::NEG_INFINITY, worst_angle: 0.0 };
    for k in 0..n {
        let t = TAU * k as f64 / n as f64;
        let w = log_derivative_unchecked(cls, ComplexPoint::from_polar(r, t));
        let margin = region.contains(w).radial_margin;
        if margin > worst.worst_margin {
            worst.worst_margin = margin;
            worst.worst_angle = t;
        }
    }
    worst.holds = worst.worst_margin < 0.0;
    Ok(worst)
}

fn check_radius(r: f64) -> Result<()> {
    finite("r", r)?;
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(Error::out_of_range("r", r, "must satisfy 0 < r < 1"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn region(alpha: f64) -> RegionParam {
        RegionParam::new(alpha).unwrap()
    }

    fn center(alpha: f64, a: f64) -> CenterParam {
        CenterParam::new(region(alpha), a).unwrap()
    }

    const STARLIKE_HALF: f64 = 0.314_269_680_527_354_5;

    #[test]
    fn inscribed_oracle_examples() {
        assert!((oracle_inscribed(region(0.5), center(0.5, 1.0)).unwrap() - 2.0 / 3.0).abs() < 1e-10);
        assert!((oracle_inscribed(region(0.0), center(0.0, 0.75)).unwrap() - 0.75).abs() < 1e-10);
        assert!((oracle_inscribed(region(0.5), center(0.5, 1.2)).unwrap() - 0.692_377_709_103_380).abs() < 1e-10);
        assert!((oracle_circumscribed(region(0.5), center(0.5, 1.0)).unwrap() - 2.0).abs() < 1e-10);
        assert!((oracle_circumscribed(region(0.0), center(0.0, 0.75)).unwrap() - 1.25).abs() < 1e-10);
        let outer = profile_extremum(region(0.5), center(0.5, 1.2), Goal::Maximize, 100_000).unwrap();
        assert!((outer.value - 2.2).abs() < 1e-10);
        assert_eq!(outer.x, -1.0);
    }

    #[test]
    fn bisection_oracle_examples() {
        let starlike = oracle_bs_radius(FunctionClass::Starlike, region(0.5)).unwrap();
        assert!((starlike - STARLIKE_HALF).abs() < 1e-8);
        let order = oracle_bs_radius(FunctionClass::starlike_order(0.9).unwrap(), region(0.5)).unwrap();
        assert!((order - 1.0 / 1.1).abs() < 1e-8);
        let fournier =
            oracle_bs_radius_with(FunctionClass::fournier(1.0 / 3.0).unwrap(), region(0.5), &OracleConfig::default())
                .unwrap();
        assert!(fournier.clamped);
        assert_eq!(fournier.radius, 1.0);
    }

    #[test]
    fn witness_examples() {
        let w = sharpness_witness(FunctionClass::Starlike, region(0.5), STARLIKE_HALF).unwrap();
        assert!(w.analytic && w.witnessed);
        assert!((w.x0 - 0.353_553_390_593_273_8).abs() < 1e-12);
        assert!((w.t_star - 1.209_429_202_888_188_8).abs() < 1e-12);
        assert!(w.margin.abs() < 1e-12);

        let tip = sharpness_witness(FunctionClass::starlike_order(0.9).unwrap(), region(0.5), 1.0 / 1.1).unwrap();
        assert_eq!(tip.t_star, 0.0);
        assert!(tip.witnessed && tip.margin.abs() < 1e-12);
        let image =
            log_derivative_unchecked(FunctionClass::starlike_order(0.9).unwrap(), ComplexPoint::new(1.0 / 1.1, 0.0));
        assert!((image - 3.0).norm() < 1e-12);

        let below = sharpness_witness(FunctionClass::Starlike, region(0.5), 0.31).unwrap();
        assert!(!below.witnessed);
        assert!(below.sweep_margin < 0.0);
    }

    #[test]
    fn subordination_examples() {
        let inside = subordination_check(FunctionClass::Starlike, region(0.5), 0.99 * STARLIKE_HALF, 4096).unwrap();
        assert!(inside.holds && inside.worst_margin < 0.0);
        let outside = subordination_check(FunctionClass::Starlike, region(0.5), 1.01 * STARLIKE_HALF, 4096).unwrap();
        assert!(!outside.holds);
        let tiny = subordination_check(FunctionClass::janowski(0.9, -0.8).unwrap(), region(0.7), 1e-9, 64).unwrap();
        assert!(tiny.holds);
        assert!(subordination_check(FunctionClass::Starlike, region(0.5), 0.3, 63).is_err());
        assert!(subordination_check(FunctionClass::Starlike, region(0.5), 1.0, 64).is_err());
    }

    #[test]
    fn report_verdicts() {
        let pass = ContainmentReport::compare(1.0, 1.0 + 1e-9, 1e-8, None);
        assert_eq!(pass.verdict, Verdict::Pass);
        let fail = ContainmentReport::compare(1.0, 1.0 + 1e-7, 1e-8, Some(0.5));
        assert_eq!(fail.verdict, Verdict::Fail);
        assert!((fail.abs_gap - 1e-7).abs() < 1e-15);
    }
}
