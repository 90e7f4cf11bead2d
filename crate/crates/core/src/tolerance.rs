//! Tolerances shared by the oracles, the verification reports and the tests.
//!
//! They form a strict hierarchy: each layer inherits the error of the one
//! below it.

/// A membership margin this close to zero is reported as "on the boundary".
pub const BOUNDARY: f64 = 1e-12;

/// Pointwise geometry: boundary curve identities, disc validity.
pub const GEOMETRY: f64 = 1e-10;

/// Inscribed/circumscribed radius versus the distance-profile extremizer.
pub const DISC_RADII: f64 = 1e-8;

/// Closed-form radius versus the containment bisection.
pub const RADIUS: f64 = 1e-6;

/// Bisection stopping width for the containment oracle.
pub const BISECTION: f64 = 5e-8;

/// Membership margin magnitude accepted as a sharpness touch.
pub const WITNESS_MARGIN: f64 = 1e-7;

/// Agreement between the analytic touch point and the sweep, in `x = cos t`.
pub const WITNESS_X: f64 = 1e-4;

/// Branch-seam agreement for the inscribed radius.
pub const SEAM: f64 = 1e-9;

/// Radicands in `(-SEAM_UNDERFLOW, 0)` are treated as zero.
pub const SEAM_UNDERFLOW: f64 = 1e-14;
