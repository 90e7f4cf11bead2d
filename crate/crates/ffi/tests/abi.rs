use std::ffi::CStr;
use std::ptr;

use booth_radius_ffi::*;

fn region(alpha: f64) -> *mut BoothRegion {
    let mut handle = ptr::null_mut();
    assert_eq!(unsafe { booth_region_new(alpha, &mut handle) }, BoothStatus::Ok);
    handle
}

fn class(kind: BoothClassKind, p1: f64, p2: f64) -> *mut BoothClass {
    let mut handle = ptr::null_mut();
    assert_eq!(unsafe { booth_class_new(kind, p1, p2, &mut handle) }, BoothStatus::Ok);
    handle
}

fn last_error() -> Option<String> {
    let p = booth_last_error();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

#[test]
fn starlike_radius_round_trip() {
    let r = region(0.5);
    let c = class(BoothClassKind::Starlike, 0.0, 0.0);
    let mut out = BoothRadius { value: f64::NAN, raw: f64::NAN, branch: BoothBranch::ClampedOne, clamped: true };
    assert_eq!(unsafe { booth_bs_radius(c, r, &mut out) }, BoothStatus::Ok);
    assert!((out.value - 0.314_269_680_527_354_5).abs() < 1e-14);
    assert_eq!(out.branch, BoothBranch::Rho0);
    assert!(!out.clamped);
    assert!(last_error().is_none());

    let mut oracle = 0.0;
    assert_eq!(unsafe { booth_oracle_bs_radius(c, r, &mut oracle) }, BoothStatus::Ok);
    assert!((oracle - out.value).abs() < 1e-6);

    let mut below = BoothSubordination { holds: false, worst_margin: 0.0, worst_angle: 0.0 };
    assert_eq!(unsafe { booth_subordination_check(c, r, 0.999 * out.value, 1024, &mut below) }, BoothStatus::Ok);
    assert!(below.holds && below.worst_margin < 0.0);
    unsafe {
        booth_class_free(c);
        booth_region_free(r);
    }
}

#[test]
fn region_geometry() {
    let r = region(0.5);
    let mut w = BoothComplex { re: 0.0, im: 0.0 };
    assert_eq!(unsafe { booth_boundary_point(r, 0.0, &mut w) }, BoothStatus::Ok);
    assert!((w.re - 3.0).abs() < 1e-15 && w.im.abs() < 1e-15);
    assert_eq!(unsafe { booth_eval_map(r, BoothComplex { re: 0.0, im: 0.0 }, &mut w) }, BoothStatus::Ok);
    assert_eq!(w, BoothComplex { re: 1.0, im: 0.0 });

    let mut rho = 0.0;
    assert_eq!(unsafe { booth_polar_boundary_radius(r, 0.0, &mut rho) }, BoothStatus::Ok);
    assert!((rho - 2.0).abs() < 1e-15);

    let mut m = BoothMembership { inside: false, radial_margin: 0.0 };
    assert_eq!(unsafe { booth_contains(r, BoothComplex { re: 1.0, im: 0.0 }, &mut m) }, BoothStatus::Ok);
    assert!(m.inside);
    assert!((m.radial_margin + 1.0 / 1.5).abs() < 1e-12);

    let (mut inner, mut outer) = (0.0, 0.0);
    assert_eq!(unsafe { booth_inscribed_radius(r, 1.0, &mut inner) }, BoothStatus::Ok);
    assert_eq!(unsafe { booth_circumscribed_radius(r, 1.0, &mut outer) }, BoothStatus::Ok);
    assert!((inner - 2.0 / 3.0).abs() < 1e-12);
    assert!((outer - 2.0).abs() < 1e-12);

    let mut inc = BoothInclusion { holds: false, via_condition: -1 };
    assert_eq!(unsafe { booth_inclusion_holds(r, 0.1, -0.1, &mut inc) }, BoothStatus::Ok);
    assert!(inc.holds);
    assert_eq!(inc.via_condition, 1);
    unsafe { booth_region_free(r) };
}

#[test]
fn errors_are_reported_not_raised() {
    let mut handle = ptr::null_mut();
    assert_eq!(unsafe { booth_region_new(1.0, &mut handle) }, BoothStatus::DomainError);
    assert!(handle.is_null());
    assert!(last_error().unwrap().contains("alpha"));

    let mut c = ptr::null_mut();
    let status = unsafe { booth_class_new(BoothClassKind::Janowski, 1.5, 0.0, &mut c) };
    assert_eq!(status, BoothStatus::DomainError);
    assert!(last_error().unwrap().contains("A = 1.5"));

    assert_eq!(unsafe { booth_region_new(0.5, ptr::null_mut()) }, BoothStatus::NullPointer);
    let status = unsafe { booth_class_new(BoothClassKind::Starlike, 0.0, 0.0, ptr::null_mut()) };
    assert_eq!(status, BoothStatus::NullPointer);

    let r = region(0.5);
    let mut w = BoothComplex { re: 0.0, im: 0.0 };
    let outside = BoothComplex { re: 1.0, im: 0.0 };
    assert_eq!(unsafe { booth_eval_map(r, outside, &mut w) }, BoothStatus::DomainError);
    assert_eq!(unsafe { booth_eval_map(ptr::null(), outside, &mut w) }, BoothStatus::NullPointer);
    assert_eq!(
        unsafe { booth_eval_map(r, BoothComplex { re: 0.1, im: 0.0 }, ptr::null_mut()) },
        BoothStatus::NullPointer
    );
    let mut inner = 0.0;
    assert_eq!(unsafe { booth_inscribed_radius(r, 5.0, &mut inner) }, BoothStatus::DomainError);
    assert!(last_error().unwrap().contains("center"));

    // success clears the message
    assert_eq!(unsafe { booth_inscribed_radius(r, 1.0, &mut inner) }, BoothStatus::Ok);
    assert!(last_error().is_none());
    unsafe {
        booth_region_free(r);
        booth_region_free(ptr::null_mut());
        booth_class_free(ptr::null_mut());
    }
}

#[test]
fn version_matches_package() {
    let v = unsafe { CStr::from_ptr(booth_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
