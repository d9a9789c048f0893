//! C ABI for the regprod library.
//!
//! Every entry point returns an [`RpStatus`]; results come back as opaque
//! [`RpReport`] handles with scalar and JSON accessors. Handles and strings
//! returned by this library must be released with [`rp_report_free`] and
//! [`rp_string_free`]. The last error message is kept per thread and stays
//! valid until the next failing call on that thread.

use libc::{c_char, c_double, c_int, size_t};
use regprod::funcfield::{regprod_funcfield, weil_validate, WeilStatus, ZetaNumerator};
use regprod::hurwitz::HurwitzEvaluator;
use regprod::lfunc::LFunctions;
use regprod::numberfield::{regprod_number_field, NumberFieldData};
use regprod::progressions::{regprod_all_primes, regprod_progression, ProgressionTarget};
use regprod::report::{Diagnostics, ExponentOut, Report};
use regprod::Error;
use serde_json::{Map, Value};
use std::cell::RefCell;
use std::ffi::{CStr, CString};

/// Status codes returned by every API call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RpStatus {
    /// success
    RpOk = 0,
    /// a required pointer argument was null
    RpNullArgument = 1,
    /// malformed or out-of-contract input
    RpInvalidInput = 2,
    /// a validation check failed (Weil bound, leading coefficient, ...)
    RpValidationFailed = 3,
    /// a precision or under-resolution fault
    RpPrecisionFault = 4,
    /// enumeration budget exceeded
    RpBudgetExceeded = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let cleaned: String = message.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = Some(CString::new(cleaned).unwrap());
    });
}

fn status_of(err: &Error) -> RpStatus {
    match err {
        Error::InvalidInput(_) => RpStatus::RpInvalidInput,
        Error::ValidationFailed(_) => RpStatus::RpValidationFailed,
        Error::BudgetExceeded(_, _) => RpStatus::RpBudgetExceeded,
        _ => RpStatus::RpPrecisionFault,
    }
}

/// Opaque result handle.
pub struct RpReport {
    report: Report,
    exact: Option<(i64, i64)>,
}

fn leak(report: Report, exact: Option<(i64, i64)>, out: *mut *mut RpReport) -> RpStatus {
    unsafe {
        *out = Box::into_raw(Box::new(RpReport { report, exact }));
    }
    RpStatus::RpOk
}

fn run_guarded<F>(out: *mut *mut RpReport, f: F) -> RpStatus
where
    F: FnOnce() -> regprod::Result<(Report, Option<(i64, i64)>)> + std::panic::UnwindSafe,
{
    if out.is_null() {
        set_error("output pointer is null");
        return RpStatus::RpNullArgument;
    }
    match std::panic::catch_unwind(f) {
        Ok(Ok((report, exact))) => leak(report, exact, out),
        Ok(Err(err)) => {
            set_error(&err.to_string());
            status_of(&err)
        }
        Err(_) => {
            set_error("internal panic");
            RpStatus::RpPrecisionFault
        }
    }
}

fn basic_report(
    command: &str,
    inputs: Map<String, Value>,
    exponent: ExponentOut,
    value: f64,
) -> Report {
    Report {
        command: command.into(),
        inputs,
        exponent,
        value,
        weil: None,
        breakdown: Value::Null,
        diagnostics: Diagnostics::new(53),
        status: "ok".into(),
    }
}

fn weil_string(status: &WeilStatus) -> String {
    match status {
        WeilStatus::Validated => "validated".into(),
        WeilStatus::Violated(why) => format!("violated: {why}"),
        WeilStatus::Unchecked => "unchecked".into(),
    }
}

fn exact_pair(r: &regprod::series::Rat) -> Option<(i64, i64)> {
    use num_traits::ToPrimitive;
    Some((r.numer().to_i64()?, r.denom().to_i64()?))
}

/// Regularized product over all rational primes (4π²).
///
/// # Safety
/// `out` must point to writable storage for one report pointer.
#[no_mangle]
pub unsafe extern "C" fn rp_all_primes(out: *mut *mut RpReport) -> RpStatus {
    run_guarded(out, || {
        let mut lfun = LFunctions::new(HurwitzEvaluator::default());
        let r = regprod_all_primes(&mut lfun)?;
        let report = basic_report(
            "primes",
            Map::new(),
            ExponentOut::from_float(r.exponent),
            r.value,
        );
        Ok((report, None))
    })
}

/// Regularized product over primes p ≡ a (mod m).
///
/// # Safety
/// `out` must point to writable storage for one report pointer.
#[no_mangle]
pub unsafe extern "C" fn rp_progression(m: u64, a: u64, out: *mut *mut RpReport) -> RpStatus {
    run_guarded(out, move || {
        let mut lfun = LFunctions::new(HurwitzEvaluator::default());
        let target = ProgressionTarget::new(m, a)?;
        let r = regprod_progression(&mut lfun, &target)?;
        let mut inputs = Map::new();
        inputs.insert("m".into(), Value::from(m));
        inputs.insert("a".into(), Value::from(a));
        let report = basic_report(
            "progression",
            inputs,
            ExponentOut::from_float(r.exponent),
            r.value,
        );
        Ok((report, None))
    })
}

/// Regularized product of prime-ideal norms for a bundled field preset:
/// "Q", "Q(i)", "Q(sqrt5)", or "Q(sqrt-3)".
///
/// # Safety
/// `preset` must be a valid NUL-terminated string; `out` must point to
/// writable storage for one report pointer.
#[no_mangle]
pub unsafe extern "C" fn rp_number_field_preset(
    preset: *const c_char,
    out: *mut *mut RpReport,
) -> RpStatus {
    if preset.is_null() {
        set_error("preset pointer is null");
        return RpStatus::RpNullArgument;
    }
    let name = match unsafe { CStr::from_ptr(preset) }.to_str() {
        Ok(s) => s.to_owned(),
        Err(_) => {
            set_error("preset is not valid UTF-8");
            return RpStatus::RpInvalidInput;
        }
    };
    run_guarded(out, move || {
        let mut lfun = LFunctions::new(HurwitzEvaluator::default());
        let field = NumberFieldData::preset(&name)?;
        let r = regprod_number_field(&mut lfun, &field)?;
        let mut inputs = Map::new();
        inputs.insert("field".into(), Value::String(name));
        let report = basic_report(
            "number-field",
            inputs,
            ExponentOut::from_float(r.exponent),
            r.value,
        );
        Ok((report, None))
    })
}

/// Regularized product over monic irreducibles of F_q[T]: exponent (3q−1)/(q−1).
///
/// # Safety
/// `out` must point to writable storage for one report pointer.
#[no_mangle]
pub unsafe extern "C" fn rp_rational_function_field(q: u64, out: *mut *mut RpReport) -> RpStatus {
    run_guarded(out, move || {
        if q < 2 {
            return Err(Error::InvalidInput("q must be at least 2".into()));
        }
        let num = ZetaNumerator::new(vec![1], q, 0)?;
        let r = regprod_funcfield(&num)?;
        let mut inputs = Map::new();
        inputs.insert("q".into(), Value::from(q));
        let exact = exact_pair(&r.exponent);
        let report = basic_report(
            "rational-ff",
            inputs,
            ExponentOut::from_exact(&r.exponent),
            r.value,
        );
        Ok((report, exact))
    })
}

/// Regularized product of closed-point norms of a plane projective curve,
/// counted from the polynomial source (same mini-language as the CLI).
///
/// # Safety
/// `poly` must be a valid NUL-terminated string; `out` must point to writable
/// storage for one report pointer.
#[no_mangle]
pub unsafe extern "C" fn rp_curve_plane(
    poly: *const c_char,
    q: u64,
    genus: u32,
    weil_tol: c_double,
    out: *mut *mut RpReport,
) -> RpStatus {
    if poly.is_null() {
        set_error("polynomial pointer is null");
        return RpStatus::RpNullArgument;
    }
    let source = match unsafe { CStr::from_ptr(poly) }.to_str() {
        Ok(s) => s.to_owned(),
        Err(_) => {
            set_error("polynomial is not valid UTF-8");
            return RpStatus::RpInvalidInput;
        }
    };
    run_guarded(out, move || {
        let curve = regprod::cli::parse_curve(&source, q)?;
        let counts: Vec<u64> = (1..=2 * genus)
            .map(|m| regprod::funcfield::count_points(&curve, m))
            .collect::<regprod::Result<_>>()?;
        let num = weil_validate(
            regprod::funcfield::numerator_from_counts(&counts, q, genus)?,
            weil_tol,
        );
        let weil = weil_string(&num.weil);
        let r = regprod_funcfield(&num)?;
        let mut inputs = Map::new();
        inputs.insert("f".into(), Value::String(source));
        inputs.insert("q".into(), Value::from(q));
        inputs.insert("genus".into(), Value::from(genus));
        let exact = exact_pair(&r.exponent);
        let mut report = basic_report(
            "curve",
            inputs,
            ExponentOut::from_exact(&r.exponent),
            r.value,
        );
        report.weil = Some(weil);
        Ok((report, exact))
    })
}

/// Regularized product for an explicitly supplied zeta numerator L(t),
/// coefficients constant-term first (L(0) = 1, even degree 2g).
///
/// # Safety
/// `coefficients` must point to `len` readable values; `out` must point to
/// writable storage for one report pointer.
#[no_mangle]
pub unsafe extern "C" fn rp_curve_from_lpoly(
    coefficients: *const i64,
    len: size_t,
    q: u64,
    weil_tol: c_double,
    out: *mut *mut RpReport,
) -> RpStatus {
    if coefficients.is_null() {
        set_error("coefficient pointer is null");
        return RpStatus::RpNullArgument;
    }
    let coeffs: Vec<i64> = unsafe { std::slice::from_raw_parts(coefficients, len) }.to_vec();
    run_guarded(out, move || {
        if coeffs.len().is_multiple_of(2) {
            return Err(Error::InvalidInput("L(t) must have even degree 2g".into()));
        }
        let genus = (coeffs.len() as u32 - 1) / 2;
        let num = weil_validate(ZetaNumerator::new(coeffs, q, genus)?, weil_tol);
        let weil = weil_string(&num.weil);
        let r = regprod_funcfield(&num)?;
        let mut inputs = Map::new();
        inputs.insert("q".into(), Value::from(q));
        let exact = exact_pair(&r.exponent);
        let mut report = basic_report(
            "curve",
            inputs,
            ExponentOut::from_exact(&r.exponent),
            r.value,
        );
        report.weil = Some(weil);
        Ok((report, exact))
    })
}

/// Value of the regularized product.
///
/// # Safety
/// `report` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn rp_report_value(report: *const RpReport) -> c_double {
    if report.is_null() {
        return f64::NAN;
    }
    unsafe { &*report }.report.value
}

/// Exponent of the regularized product as a float.
///
/// # Safety
/// `report` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn rp_report_exponent(report: *const RpReport) -> c_double {
    if report.is_null() {
        return f64::NAN;
    }
    unsafe { &*report }.report.exponent.float
}

/// Exact rational exponent, when one exists: returns 1 and fills the
/// numerator and denominator, or returns 0 for transcendental exponents.
///
/// # Safety
/// `report` must be a live handle or null; the out-parameters must be
/// writable or null.
#[no_mangle]
pub unsafe extern "C" fn rp_report_exact_exponent(
    report: *const RpReport,
    numerator: *mut i64,
    denominator: *mut i64,
) -> c_int {
    if report.is_null() || numerator.is_null() || denominator.is_null() {
        return 0;
    }
    match unsafe { &*report }.exact {
        Some((n, d)) => {
            unsafe {
                *numerator = n;
                *denominator = d;
            }
            1
        }
        None => 0,
    }
}

/// Weil status string ("validated" / "violated: ..."), or null when the
/// report carries no Weil check. Free with rp_string_free.
///
/// # Safety
/// `report` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn rp_report_weil(report: *const RpReport) -> *mut c_char {
    if report.is_null() {
        return std::ptr::null_mut();
    }
    match &unsafe { &*report }.report.weil {
        Some(w) => CString::new(w.replace('\0', "")).unwrap().into_raw(),
        None => std::ptr::null_mut(),
    }
}

/// Full JSON report. Free with rp_string_free.
///
/// # Safety
/// `report` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn rp_report_json(report: *const RpReport) -> *mut c_char {
    if report.is_null() {
        return std::ptr::null_mut();
    }
    let json = unsafe { &*report }.report.to_json();
    CString::new(json).unwrap().into_raw()
}

/// Release a report handle.
///
/// # Safety
/// `report` must be a handle returned by this library (freed at most once),
/// or null.
#[no_mangle]
pub unsafe extern "C" fn rp_report_free(report: *mut RpReport) {
    if !report.is_null() {
        drop(unsafe { Box::from_raw(report) });
    }
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must be a pointer previously returned by rp_report_json or
/// rp_report_weil, or null.
#[no_mangle]
pub unsafe extern "C" fn rp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the most recent error on this thread, or null. The pointer is
/// valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn rp_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map(|s| s.as_ptr())
            .unwrap_or(std::ptr::null())
    })
}

/// Library version packed as major·10⁴ + minor·10² + patch.
#[no_mangle]
pub extern "C" fn rp_version() -> u32 {
    let parse = |s: &str| s.parse::<u32>().unwrap_or(0);
    parse(env!("CARGO_PKG_VERSION_MAJOR")) * 10_000
        + parse(env!("CARGO_PKG_VERSION_MINOR")) * 100
        + parse(env!("CARGO_PKG_VERSION_PATCH"))
}
