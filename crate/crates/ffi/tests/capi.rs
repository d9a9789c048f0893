//! Exercises the C ABI exactly as a foreign caller would: through the
//! extern "C" symbols, raw pointers, and the documented ownership rules.

use regprod_ffi::*;

// thin safe wrappers so assertions read cleanly
fn unsafe_rp_all_primes(out: *mut *mut RpReport) -> RpStatus {
    unsafe { rp_all_primes(out) }
}
fn unsafe_rp_progression(m: u64, a: u64, out: *mut *mut RpReport) -> RpStatus {
    unsafe { rp_progression(m, a, out) }
}
fn unsafe_rp_number_field_preset(
    p: *const std::os::raw::c_char,
    out: *mut *mut RpReport,
) -> RpStatus {
    unsafe { rp_number_field_preset(p, out) }
}
fn unsafe_rp_rational_function_field(q: u64, out: *mut *mut RpReport) -> RpStatus {
    unsafe { rp_rational_function_field(q, out) }
}
fn unsafe_rp_curve_plane(
    p: *const std::os::raw::c_char,
    q: u64,
    g: u32,
    tol: f64,
    out: *mut *mut RpReport,
) -> RpStatus {
    unsafe { rp_curve_plane(p, q, g, tol, out) }
}
fn unsafe_rp_curve_from_lpoly(
    c: *const i64,
    l: usize,
    q: u64,
    tol: f64,
    out: *mut *mut RpReport,
) -> RpStatus {
    unsafe { rp_curve_from_lpoly(c, l, q, tol, out) }
}
fn unsafe_rp_report_value(r: *const RpReport) -> f64 {
    unsafe { rp_report_value(r) }
}
fn unsafe_rp_report_exponent(r: *const RpReport) -> f64 {
    unsafe { rp_report_exponent(r) }
}
fn unsafe_rp_report_exact_exponent(r: *const RpReport, n: *mut i64, d: *mut i64) -> i32 {
    unsafe { rp_report_exact_exponent(r, n, d) }
}
fn unsafe_rp_report_weil(r: *const RpReport) -> *mut std::os::raw::c_char {
    unsafe { rp_report_weil(r) }
}
fn unsafe_rp_report_json(r: *const RpReport) -> *mut std::os::raw::c_char {
    unsafe { rp_report_json(r) }
}
fn unsafe_rp_report_free(r: *mut RpReport) {
    unsafe { rp_report_free(r) }
}
use std::ffi::{CStr, CString};
use std::ptr;

fn fetch(status: RpStatus, handle: *mut RpReport) -> *mut RpReport {
    assert_eq!(status, RpStatus::RpOk, "last error: {}", last_error());
    assert!(!handle.is_null());
    handle
}

fn last_error() -> String {
    let ptr = rp_last_error();
    if ptr.is_null() {
        "<none>".into()
    } else {
        unsafe { CStr::from_ptr(ptr) }
            .to_string_lossy()
            .into_owned()
    }
}

#[test]
fn all_primes_is_four_pi_squared() {
    let mut handle: *mut RpReport = ptr::null_mut();
    let handle = fetch(unsafe_rp_all_primes(&mut handle), handle);
    let value = unsafe_rp_report_value(handle);
    let expect = 4.0 * std::f64::consts::PI * std::f64::consts::PI;
    assert!((value - expect).abs() / expect < 1e-10);
    assert_eq!(
        unsafe_rp_report_exact_exponent(handle, &mut 0, &mut 0),
        0,
        "transcendental exponent has no exact part"
    );
    unsafe_rp_report_free(handle);
}

#[test]
fn fermat_cubic_through_the_c_surface() {
    let poly = CString::new("x^3+y^3+z^3").unwrap();
    let mut handle: *mut RpReport = ptr::null_mut();
    let status = unsafe_rp_curve_plane(poly.as_ptr(), 2, 1, 1e-9, &mut handle);
    let handle = fetch(status, handle);

    let (mut num, mut den) = (0i64, 0i64);
    assert_eq!(
        unsafe_rp_report_exact_exponent(handle, &mut num, &mut den),
        1
    );
    assert_eq!((num, den), (7, 3));
    assert!((unsafe_rp_report_exponent(handle) - 7.0 / 3.0).abs() < 1e-14);
    assert!((unsafe_rp_report_value(handle) - (7.0f64 / 3.0).exp()).abs() < 1e-12);

    let weil = unsafe_rp_report_weil(handle);
    assert!(!weil.is_null());
    assert_eq!(
        unsafe { CStr::from_ptr(weil) }.to_str().unwrap(),
        "validated"
    );
    unsafe { rp_string_free(weil) };

    let json = unsafe_rp_report_json(handle);
    assert!(!json.is_null());
    let parsed: serde_json::Value =
        serde_json::from_str(unsafe { CStr::from_ptr(json) }.to_str().unwrap()).unwrap();
    assert_eq!(parsed["exponent"]["exact"], "7/3");
    assert_eq!(parsed["command"], "curve");
    unsafe { rp_string_free(json) };

    unsafe_rp_report_free(handle);
}

#[test]
fn progression_mod4() {
    let mut h1: *mut RpReport = ptr::null_mut();
    let mut h3: *mut RpReport = ptr::null_mut();
    assert_eq!(unsafe_rp_progression(4, 1, &mut h1), RpStatus::RpOk);
    assert_eq!(unsafe_rp_progression(4, 3, &mut h3), RpStatus::RpOk);
    let product = unsafe_rp_report_value(h1) * unsafe_rp_report_value(h3);
    let expect = 2.0 * std::f64::consts::PI * std::f64::consts::PI;
    assert!((product - expect).abs() / expect < 1e-8);
    unsafe_rp_report_free(h1);
    unsafe_rp_report_free(h3);
}

#[test]
fn rational_function_field_exact() {
    for q in [2u64, 3, 4, 5] {
        let mut handle: *mut RpReport = ptr::null_mut();
        assert_eq!(
            unsafe_rp_rational_function_field(q, &mut handle),
            RpStatus::RpOk
        );
        let (mut num, mut den) = (0i64, 0i64);
        assert_eq!(
            unsafe_rp_report_exact_exponent(handle, &mut num, &mut den),
            1
        );
        // (3q-1)/(q-1), reduced
        let g = gcd(3 * q as i64 - 1, q as i64 - 1);
        assert_eq!((num, den), ((3 * q as i64 - 1) / g, (q as i64 - 1) / g));
        unsafe_rp_report_free(handle);
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn lpoly_route_and_weil_violation() {
    let coeffs = [1i64, 4, 4, 0, -4];
    let mut handle: *mut RpReport = ptr::null_mut();
    let status = unsafe_rp_curve_from_lpoly(coeffs.as_ptr(), coeffs.len(), 2, 1e-9, &mut handle);
    let handle = fetch(status, handle);
    let (mut num, mut den) = (0i64, 0i64);
    assert_eq!(
        unsafe_rp_report_exact_exponent(handle, &mut num, &mut den),
        1
    );
    assert_eq!((num, den), (33, 5));
    let weil = unsafe_rp_report_weil(handle);
    assert!(unsafe { CStr::from_ptr(weil) }
        .to_str()
        .unwrap()
        .starts_with("violated"));
    unsafe { rp_string_free(weil) };
    unsafe_rp_report_free(handle);
}

#[test]
fn number_field_presets() {
    for preset in ["Q", "Q(i)", "Q(sqrt5)", "Q(sqrt-3)"] {
        let name = CString::new(preset).unwrap();
        let mut handle: *mut RpReport = ptr::null_mut();
        let status = unsafe_rp_number_field_preset(name.as_ptr(), &mut handle);
        let handle = fetch(status, handle);
        assert!(unsafe_rp_report_value(handle).is_finite());
        unsafe_rp_report_free(handle);
    }
}

#[test]
fn error_paths() {
    // bad residue class
    let mut handle: *mut RpReport = ptr::null_mut();
    assert_eq!(
        unsafe_rp_progression(4, 2, &mut handle),
        RpStatus::RpInvalidInput
    );
    assert!(last_error().contains("coprime"));

    // null pointers
    assert_eq!(
        unsafe_rp_all_primes(ptr::null_mut()),
        RpStatus::RpNullArgument
    );
    assert_eq!(
        unsafe_rp_number_field_preset(ptr::null(), &mut handle),
        RpStatus::RpNullArgument
    );

    // unknown preset
    let name = CString::new("Q(sqrt7)").unwrap();
    assert_eq!(
        unsafe_rp_number_field_preset(name.as_ptr(), &mut handle),
        RpStatus::RpInvalidInput
    );

    // inhomogeneous polynomial
    let poly = CString::new("x^2+y").unwrap();
    assert_eq!(
        unsafe_rp_curve_plane(poly.as_ptr(), 2, 1, 1e-9, &mut handle),
        RpStatus::RpInvalidInput
    );

    // null-safe accessors
    assert!(unsafe_rp_report_value(ptr::null()).is_nan());
    assert!(unsafe_rp_report_json(ptr::null()).is_null());
    unsafe_rp_report_free(ptr::null_mut());
    unsafe { rp_string_free(ptr::null_mut()) };
}

#[test]
fn version_is_packed() {
    assert_eq!(rp_version(), 100);
}

#[test]
fn generated_header_exists_and_declares_the_surface() {
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("regprod.h");
    let text = std::fs::read_to_string(header).expect("cbindgen header present");
    for symbol in [
        "rp_all_primes",
        "rp_progression",
        "rp_number_field_preset",
        "rp_rational_function_field",
        "rp_curve_plane",
        "rp_curve_from_lpoly",
        "rp_report_value",
        "rp_report_exact_exponent",
        "rp_report_json",
        "rp_report_free",
        "rp_string_free",
        "rp_last_error",
        "typedef struct RpReport RpReport",
    ] {
        assert!(text.contains(symbol), "header missing {symbol}");
    }
}
