//! C interface to `mzsum`.
//!
//! Results are returned through opaque handles owned by the caller and
//! released with the matching `*_free` function. Every entry point returns
//! an [`MzStatus`]; on failure a description is available from
//! [`mz_last_error_message`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mzsum::closedforms::{zr_closed, zs_closed};
use mzsum::oracle::esum_numeric;
use mzsum::{esum, ESumQuery, Error, Method, NumericValue, OracleConfig, PiValue};

/// Status codes returned by every function taking an out-pointer.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MzStatus {
    Ok = 0,
    InvalidQuery = 1,
    Unsupported = 2,
    Divergent = 3,
    TooLarge = 4,
    Inconsistent = 5,
    NullPointer = 6,
    InvalidUtf8 = 7,
    Panic = 8,
}

/// An exact value `coeff * pi^pi_exp`.
pub struct MzPiValue(PiValue);

/// A numerical value with an absolute error bound.
pub struct MzNumeric(NumericValue);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> MzStatus {
    match e {
        Error::InvalidQuery(_) => MzStatus::InvalidQuery,
        Error::Unsupported(_) => MzStatus::Unsupported,
        Error::Divergent(_) => MzStatus::Divergent,
        Error::TooLarge { .. } => MzStatus::TooLarge,
        Error::OrderMismatch { .. }
        | Error::NotRational(_)
        | Error::GradingMismatch { .. }
        | Error::RouteDisagreement { .. } => MzStatus::Inconsistent,
    }
}

/// Runs `f`, storing its result in `*out` and translating errors and panics.
fn guarded<T>(out: *mut *mut T, f: impl FnOnce() -> Result<T, (MzStatus, String)>) -> MzStatus {
    clear_error();
    if out.is_null() {
        set_error("output pointer is null".into());
        return MzStatus::NullPointer;
    }
    // SAFETY: checked non-null above; the caller provides a writable slot.
    unsafe { *out = ptr::null_mut() };
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(v)) => {
            // SAFETY: as above.
            unsafe { *out = Box::into_raw(Box::new(v)) };
            MzStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            MzStatus::Panic
        }
    }
}

fn lift<T>(r: mzsum::Result<T>) -> Result<T, (MzStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// `E(mn,k)` by the named route (`"theorem-a"`, `"theorem-b"`, `"hoffman"`,
/// `"theorem-c"`, `"gencev"`, `"e6-bernoulli"`, `"e6-half"`, `"e8"`,
/// `"theorem5"`). A null `method` selects `"theorem-a"`.
///
/// # Safety
/// `method` must be null or a valid NUL-terminated string; `out` must be a
/// valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn mz_esum(
    m: u32,
    n: u32,
    k: u32,
    method: *const c_char,
    out: *mut *mut MzPiValue,
) -> MzStatus {
    let method = if method.is_null() {
        Ok(Method::TheoremA)
    } else {
        match CStr::from_ptr(method).to_str() {
            Ok(s) => s.parse::<Method>().map_err(|e| (MzStatus::InvalidQuery, e.to_string())),
            Err(_) => Err((MzStatus::InvalidUtf8, "method is not UTF-8".to_string())),
        }
    };
    guarded(out, move || {
        let method = method?;
        lift(esum(&ESumQuery::new(m, n, k, method)).map(MzPiValue))
    })
}

/// `zeta({arg}^n)` for even `arg >= 2`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn mz_zeta_repeated(arg: u32, n: u32, out: *mut *mut MzPiValue) -> MzStatus {
    guarded(out, || lift(zr_closed(arg, n).map(MzPiValue)))
}

/// `zeta*({arg}^n)` for even `arg >= 2`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn mz_zeta_star_repeated(arg: u32, n: u32, out: *mut *mut MzPiValue) -> MzStatus {
    guarded(out, || lift(zs_closed(arg, n).map(MzPiValue)))
}

/// Numerical `E(mn,k)` at `digits` decimal digits with summation cutoff
/// `cutoff`; works for odd `m` as well.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn mz_esum_numeric(
    m: u32,
    n: u32,
    k: u32,
    digits: u32,
    cutoff: u64,
    out: *mut *mut MzNumeric,
) -> MzStatus {
    guarded(out, || {
        if m < 2 {
            return Err((MzStatus::InvalidQuery, "m must be at least 2".into()));
        }
        lift(esum_numeric(m, n, k, &OracleConfig::new(digits, cutoff)).map(MzNumeric))
    })
}

/// The rational coefficient as `"p/q"` (or `"p"`). Free with
/// [`mz_string_free`]. Returns null for a null handle.
///
/// # Safety
/// `v` must be null or a handle returned by this library.
#[no_mangle]
pub unsafe extern "C" fn mz_pivalue_coeff(v: *const MzPiValue) -> *mut c_char {
    match v.as_ref() {
        Some(v) => into_c_string(mzsum::exactarith::format_rational(v.0.coeff())),
        None => ptr::null_mut(),
    }
}

/// The power of pi; 0 for a null handle.
///
/// # Safety
/// `v` must be null or a handle returned by this library.
#[no_mangle]
pub unsafe extern "C" fn mz_pivalue_pi_exp(v: *const MzPiValue) -> u32 {
    v.as_ref().map_or(0, |v| v.0.pi_exp())
}

/// LaTeX rendering, e.g. `\frac{1}{120}\pi^{4}`. Free with [`mz_string_free`].
///
/// # Safety
/// `v` must be null or a handle returned by this library.
#[no_mangle]
pub unsafe extern "C" fn mz_pivalue_latex(v: *const MzPiValue) -> *mut c_char {
    match v.as_ref() {
        Some(v) => into_c_string(v.0.latex()),
        None => ptr::null_mut(),
    }
}

/// Releases a value handle; null is ignored.
///
/// # Safety
/// `v` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mz_pivalue_free(v: *mut MzPiValue) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Decimal rendering with `places` fractional digits. Free with
/// [`mz_string_free`].
///
/// # Safety
/// `v` must be null or a handle returned by this library.
#[no_mangle]
pub unsafe extern "C" fn mz_numeric_value(v: *const MzNumeric, places: u32) -> *mut c_char {
    match v.as_ref() {
        Some(v) => into_c_string(v.0.to_decimal(places as usize)),
        None => ptr::null_mut(),
    }
}

/// The absolute error bound; negative for a null handle.
///
/// # Safety
/// `v` must be null or a handle returned by this library.
#[no_mangle]
pub unsafe extern "C" fn mz_numeric_error_bound(v: *const MzNumeric) -> f64 {
    v.as_ref().map_or(-1.0, |v| v.0.error_bound())
}

/// Releases a numeric handle; null is ignored.
///
/// # Safety
/// `v` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mz_numeric_free(v: *mut MzNumeric) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn mz_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
