//! C ABI for `booth-radius`.
//!
//! Regions and classes are opaque heap handles created by `*_new` and released
//! by `*_free`. Every other function writes through an out-pointer and returns
//! a [`BoothStatus`]; on failure `booth_last_error` describes what went wrong
//! on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use booth_radius::classes::{bs_radius, inclusion_holds, InclusionCondition};
use booth_radius::disc::{circumscribed_radius, inscribed_radius, CenterParam};
use booth_radius::oracles::{oracle_bs_radius, subordination_check};
use booth_radius::{Branch, ComplexPoint, Error, FunctionClass, RegionParam};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoothStatus {
    Ok = 0,
    NullPointer = 1,
    DomainError = 2,
    OracleFailure = 3,
    Panic = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoothComplex {
    pub re: f64,
    pub im: f64,
}

impl From<ComplexPoint> for BoothComplex {
    fn from(z: ComplexPoint) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<BoothComplex> for ComplexPoint {
    fn from(z: BoothComplex) -> Self {
        ComplexPoint::new(z.re, z.im)
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoothClassKind {
    StarlikeOrder = 0,
    Starlike = 1,
    Convex = 2,
    MClass = 3,
    Janowski = 4,
    Parvatham = 5,
    Fournier = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoothBranch {
    Rho0 = 0,
    Rho0Tilde = 1,
    AlphaZero = 2,
    ClampedOne = 3,
}

impl From<Branch> for BoothBranch {
    fn from(b: Branch) -> Self {
        match b {
            Branch::Rho0 => BoothBranch::Rho0,
            Branch::Rho0Tilde => BoothBranch::Rho0Tilde,
            Branch::AlphaZero => BoothBranch::AlphaZero,
            Branch::ClampedOne => BoothBranch::ClampedOne,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoothRadius {
    pub value: f64,
    pub raw: f64,
    pub branch: BoothBranch,
    pub clamped: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoothMembership {
    pub inside: bool,
    /// `|w − 1| − ρ(arg(w − 1))`; negative inside.
    pub radial_margin: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoothInclusion {
    pub holds: bool,
    /// 0 when neither sufficient condition applies, else 1 or 2.
    pub via_condition: i32,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoothSubordination {
    pub holds: bool,
    pub worst_margin: f64,
    pub worst_angle: f64,
}

/// Opaque region handle.
pub struct BoothRegion(RegionParam);

/// Opaque function-class handle.
pub struct BoothClass(FunctionClass);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure {
    status: BoothStatus,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if e.is_diagnostic() { BoothStatus::OracleFailure } else { BoothStatus::DomainError };
        Self { status, message: e.to_string() }
    }
}

fn null(name: &str) -> Failure {
    Failure { status: BoothStatus::NullPointer, message: format!("{name} is null") }
}

fn set_last_error(message: Option<String>) {
    let message = message.map(|m| CString::new(m.replace('\0', " ")).expect("interior NULs replaced"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message);
}

fn guard<F>(body: F) -> BoothStatus
where
    F: FnOnce() -> Result<(), Failure>,
{
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error(None);
            BoothStatus::Ok
        }
        Ok(Err(failure)) => {
            set_last_error(Some(failure.message));
            failure.status
        }
        Err(_) => {
            set_last_error(Some("internal panic".to_owned()));
            BoothStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    // SAFETY: caller guarantees `p` is null or valid for reads.
    unsafe { p.as_ref() }.ok_or_else(|| null(name))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    // SAFETY: non-null, and caller guarantees it is valid for writes.
    unsafe { out.write(value) };
    Ok(())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn booth_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version contains NUL"),
    };
    VERSION.as_ptr()
}

/// Message for the last failed call on this thread, or null after a success.
///
/// The pointer stays valid until the next call into this library on the same
/// thread.
#[no_mangle]
pub extern "C" fn booth_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// # Safety
/// `out` must be valid for writes. On success `*out` owns a handle that must
/// be released with [`booth_region_free`].
#[no_mangle]
pub unsafe extern "C" fn booth_region_new(alpha: f64, out: *mut *mut BoothRegion) -> BoothStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let region = RegionParam::new(alpha)?;
        unsafe { write(out, Box::into_raw(Box::new(BoothRegion(region)))) }
    })
}

/// # Safety
/// `region` must be null or a handle from [`booth_region_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn booth_region_free(region: *mut BoothRegion) {
    if !region.is_null() {
        // SAFETY: ownership returns from the caller.
        drop(unsafe { Box::from_raw(region) });
    }
}

/// Builds a class. `p1` is β (or `A` for Janowski) and `p2` is `B`; unused
/// parameters are ignored.
///
/// # Safety
/// `kind` must be one of the declared enumerators and `out` valid for
/// writes. On success `*out` owns a handle that must be released with
/// [`booth_class_free`].
#[no_mangle]
pub unsafe extern "C" fn booth_class_new(
    kind: BoothClassKind,
    p1: f64,
    p2: f64,
    out: *mut *mut BoothClass,
) -> BoothStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let class = match kind {
            BoothClassKind::StarlikeOrder => FunctionClass::starlike_order(p1)?,
            BoothClassKind::Starlike => FunctionClass::Starlike,
            BoothClassKind::Convex => FunctionClass::Convex,
            BoothClassKind::MClass => FunctionClass::m_class(p1)?,
            BoothClassKind::Janowski => FunctionClass::janowski(p1, p2)?,
            BoothClassKind::Parvatham => FunctionClass::parvatham(p1)?,
            BoothClassKind::Fournier => FunctionClass::fournier(p1)?,
        };
        unsafe { write(out, Box::into_raw(Box::new(BoothClass(class)))) }
    })
}

/// # Safety
/// `class` must be null or a handle from [`booth_class_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn booth_class_free(class: *mut BoothClass) {
    if !class.is_null() {
        // SAFETY: ownership returns from the caller.
        drop(unsafe { Box::from_raw(class) });
    }
}

/// `G_α(z)` for `|z| < 1`.
///
/// # Safety
/// `region` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn booth_eval_map(
    region: *const BoothRegion,
    z: BoothComplex,
    out: *mut BoothComplex,
) -> BoothStatus {
    guard(|| {
        let region = unsafe { borrow(region, "region") }?;
        let w = region.0.eval_map(z.into())?;
        unsafe { write(out, w.into()) }
    })
}

/// # Safety
/// `region` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn booth_boundary_point(
    region: *const BoothRegion,
    t: f64,
    out: *mut BoothComplex,
) -> BoothStatus {
    guard(|| {
        let region = unsafe { borrow(region, "region") }?;
        let w = region.0.boundary_point(t)?;
        unsafe { write(out, w.into()) }
    })
}

/// # Safety
/// `region` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn booth_polar_boundary_radius(
    region: *const BoothRegion,
    theta: f64,
    out: *mut f64,
) -> BoothStatus {
    guard(|| {
        let region = unsafe { borrow(region, "region") }?;
        if !theta.is_finite() {
            return Err(Error::NonFinite { name: "theta" }.into());
        }
        unsafe { write(out, region.0.polar_boundary_radius(theta)) }
    })
}

/// # Safety
/// `region` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn booth_contains(
    region: *const BoothRegion,
    w: BoothComplex,
    out: *mut BoothMembership,
) -> BoothStatus {
    guard(|| {
        let region = unsafe { borrow(region, "region") }?;
        let verdict = region.0.contains(w.into());
        unsafe { write(out, BoothMembership { inside: verdict.inside, radial_margin: verdict.radial_margin }) }
    })
}

/// Largest disc about the real `center` inside `G_α(𝔻)`.
///
/// # Safety
/// `region` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn booth_inscribed_radius(region: *const BoothRegion, center: f64, out: *mut f64) -> BoothStatus {
    guard(|| {
        let region = unsafe { borrow(region, "region") }?.0;
        let r = inscribed_radius(region, CenterParam::new(region, center)?)?;
        unsafe { write(out, r) }
    })
}

/// Smallest disc about the real `center` containing `G_α(𝔻)`.
///
/// # Safety
/// `region` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn booth_circumscribed_radius(
    region: *const BoothRegion,
    center: f64,
    out: *mut f64,
) -> BoothStatus {
    guard(|| {
        let region = unsafe { borrow(region, "region") }?.0;
        let r = circumscribed_radius(region, CenterParam::new(region, center)?)?;
        unsafe { write(out, r) }
    })
}

/// # Safety
/// `class` and `region` must be live handles and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn booth_bs_radius(
    class: *const BoothClass,
    region: *const BoothRegion,
    out: *mut BoothRadius,
) -> BoothStatus {
    guard(|| {
        let class = unsafe { borrow(class, "class") }?.0;
        let region = unsafe { borrow(region, "region") }?.0;
        let r = bs_radius(class, region)?;
        unsafe { write(out, BoothRadius { value: r.value, raw: r.raw, branch: r.branch.into(), clamped: r.clamped }) }
    })
}

/// # Safety
/// `region` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn booth_inclusion_holds(
    region: *const BoothRegion,
    a: f64,
    b: f64,
    out: *mut BoothInclusion,
) -> BoothStatus {
    guard(|| {
        let region = unsafe { borrow(region, "region") }?.0;
        let verdict = inclusion_holds(region, a, b)?;
        let via_condition = match verdict.via_condition {
            None => 0,
            Some(InclusionCondition::First) => 1,
            Some(InclusionCondition::Second) => 2,
        };
        unsafe { write(out, BoothInclusion { holds: verdict.holds, via_condition }) }
    })
}

/// Brute-force radius by bisection on the containment margin.
///
/// # Safety
/// `class` and `region` must be live handles and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn booth_oracle_bs_radius(
    class: *const BoothClass,
    region: *const BoothRegion,
    out: *mut f64,
) -> BoothStatus {
    guard(|| {
        let class = unsafe { borrow(class, "class") }?.0;
        let region = unsafe { borrow(region, "region") }?.0;
        let r = oracle_bs_radius(class, region)?;
        unsafe { write(out, r) }
    })
}

/// Samples `zf′/f` of the extremal function on `n ≥ 64` points of `|z| = r`.
///
/// # Safety
/// `class` and `region` must be live handles and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn booth_subordination_check(
    class: *const BoothClass,
    region: *const BoothRegion,
    r: f64,
    n: usize,
    out: *mut BoothSubordination,
) -> BoothStatus {
    guard(|| {
        let class = unsafe { borrow(class, "class") }?.0;
        let region = unsafe { borrow(region, "region") }?.0;
        let outcome = subordination_check(class, region, r, n)?;
        unsafe {
            write(
                out,
                BoothSubordination {
                    holds: outcome.holds,
                    worst_margin: outcome.worst_margin,
                    worst_angle: outcome.worst_angle,
                },
            )
        }
    })
}
