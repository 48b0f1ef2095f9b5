//! C bindings for the apolar analysis pipeline.
//!
//! The surface is deliberately small: build an analysis from a dual
//! generator or an ideal, query scalar invariants through getters, and
//! pull structured data out as JSON strings. Handles and strings
//! returned by this library are owned by the caller and must be released
//! with [`apolar_analysis_free`] and [`apolar_string_free`].
//!
//! Every entry point catches panics and reports failures through
//! [`ApolarStatus`]; the message behind the most recent failure on the
//! current thread is available from [`apolar_last_error`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::{c_char, c_int};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use apolar::report::{
    analyze, dual_from_ideal_text, dual_from_text, AnalysisReport, AnalyzeOptions, InputEcho,
};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ApolarStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input was rejected; `apolar_last_error` has the reason.
    InvalidInput = 3,
    /// An internal panic was caught; `apolar_last_error` has the report.
    Panic = 4,
}

/// Opaque analysis handle. Create with [`apolar_analyze_dual`] or
/// [`apolar_analyze_ideal`], release with [`apolar_analysis_free`].
pub struct ApolarAnalysis {
    report: AnalysisReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).ok();
    });
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| slot.borrow_mut().take());
}

/// Returns the message behind the most recent failure on this thread, or
/// null if the last call succeeded. The pointer is only valid until the
/// next library call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn apolar_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |message| message.as_ptr())
    })
}

unsafe fn read_utf8<'a>(text: *const c_char) -> Result<&'a str, ApolarStatus> {
    if text.is_null() {
        set_last_error("a required string argument was null");
        return Err(ApolarStatus::NullArgument);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_last_error("a string argument was not valid UTF-8");
        ApolarStatus::InvalidUtf8
    })
}

fn finish_analysis(
    result: apolar::Result<AnalysisReport>,
    out: *mut *mut ApolarAnalysis,
) -> ApolarStatus {
    match result {
        Ok(report) => {
            let handle = Box::new(ApolarAnalysis { report });
            unsafe {
                *out = Box::into_raw(handle);
            }
            ApolarStatus::Ok
        }
        Err(e) => {
            set_last_error(&e.to_string());
            ApolarStatus::InvalidInput
        }
    }
}

fn guarded(body: impl FnOnce() -> ApolarStatus) -> ApolarStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            set_last_error(&format!("internal panic: {message}"));
            ApolarStatus::Panic
        }
    }
}

/// Analyzes the Artinian Gorenstein algebra of a dual generator.
///
/// `text` is an uppercase-alphabet homogeneous form such as
/// `"X1*X2*X3*X4^2"`. Pass `n = 0` to infer the number of variables from
/// the highest index that occurs. `seed`, `trials`, and `coeff_bound`
/// control the randomized Lefschetz probe; `trials` must be positive.
/// On success `*out` owns the new handle.
///
/// # Safety
///
/// `text` must be null or point to a NUL-terminated string, and `out`
/// must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn apolar_analyze_dual(
    text: *const c_char,
    n: usize,
    seed: u64,
    trials: usize,
    coeff_bound: i64,
    out: *mut *mut ApolarAnalysis,
) -> ApolarStatus {
    guarded(|| {
        clear_last_error();
        if out.is_null() {
            set_last_error("the output pointer was null");
            return ApolarStatus::NullArgument;
        }
        let text = match read_utf8(text) {
            Ok(text) => text,
            Err(status) => return status,
        };
        let opts = AnalyzeOptions {
            seed,
            trials,
            coeff_bound,
        };
        let requested_n = if n == 0 { None } else { Some(n) };
        let result = dual_from_text(text, requested_n)
            .and_then(|dual| analyze(dual, InputEcho::dual(text), &opts, None));
        finish_analysis(result, out)
    })
}

/// Analyzes the socle-degree `socle` Gorenstein quotient cut out by a
/// comma-separated list of lowercase-alphabet generators, such as
/// `"x1^2, x2^2, x3*x4, x3^3-x4^3"`.
///
/// Pass `n = 0` to infer the number of variables. The ideal must have a
/// one-dimensional inverse system in degree `socle`; anything else is
/// rejected with `APOLAR_STATUS_INVALID_INPUT`.
///
/// # Safety
///
/// `text` must be null or point to a NUL-terminated string, and `out`
/// must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn apolar_analyze_ideal(
    text: *const c_char,
    socle: usize,
    n: usize,
    seed: u64,
    trials: usize,
    coeff_bound: i64,
    out: *mut *mut ApolarAnalysis,
) -> ApolarStatus {
    guarded(|| {
        clear_last_error();
        if out.is_null() {
            set_last_error("the output pointer was null");
            return ApolarStatus::NullArgument;
        }
        let text = match read_utf8(text) {
            Ok(text) => text,
            Err(status) => return status,
        };
        let opts = AnalyzeOptions {
            seed,
            trials,
            coeff_bound,
        };
        let requested_n = if n == 0 { None } else { Some(n) };
        let result = dual_from_ideal_text(text, socle, requested_n)
            .and_then(|dual| analyze(dual, InputEcho::ideal(text, socle), &opts, None));
        finish_analysis(result, out)
    })
}

/// Releases a handle returned by an analyze call. Null is ignored.
///
/// # Safety
///
/// `analysis` must be null or a pointer previously returned by this
/// library that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn apolar_analysis_free(analysis: *mut ApolarAnalysis) {
    if !analysis.is_null() {
        drop(Box::from_raw(analysis));
    }
}

/// Number of variables of the polynomial ring, or 0 if `analysis` is null.
///
/// # Safety
///
/// `analysis` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn apolar_analysis_nvars(analysis: *const ApolarAnalysis) -> usize {
    analysis.as_ref().map_or(0, |a| a.report.n)
}

/// Socle degree of the algebra, or 0 if `analysis` is null.
///
/// # Safety
///
/// `analysis` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn apolar_analysis_socle_degree(analysis: *const ApolarAnalysis) -> usize {
    analysis.as_ref().map_or(0, |a| a.report.socle_degree)
}

/// Copies the Hilbert function into `values` (at most `capacity`
/// entries) and returns its full length, which is the socle degree plus
/// one. Call once with `capacity = 0` to size the buffer. Returns 0 if
/// `analysis` is null.
///
/// # Safety
///
/// `analysis` must be null or a live handle, and `values` must point to
/// at least `capacity` writable entries whenever `capacity > 0`.
#[no_mangle]
pub unsafe extern "C" fn apolar_analysis_hilbert(
    analysis: *const ApolarAnalysis,
    values: *mut usize,
    capacity: usize,
) -> usize {
    let Some(a) = analysis.as_ref() else {
        return 0;
    };
    let h = a.report.hilbert_function.values();
    if capacity > 0 && !values.is_null() {
        let count = h.len().min(capacity);
        for (i, &v) in h.iter().take(count).enumerate() {
            *values.add(i) = v;
        }
    }
    h.len()
}

/// Whether a weak Lefschetz witness was found: 1 yes, 0 no, -1 if
/// `analysis` is null. A 0 is probabilistic evidence only.
///
/// # Safety
///
/// `analysis` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn apolar_analysis_has_wlp(analysis: *const ApolarAnalysis) -> c_int {
    analysis.as_ref().map_or(-1, |a| {
        c_int::from(a.report.lefschetz.wlp_witness.is_some())
    })
}

/// Whether the strong Lefschetz property holds, by the exact Hessian
/// certificate: 1 yes, 0 no, -1 if `analysis` is null.
///
/// # Safety
///
/// `analysis` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn apolar_analysis_has_slp(analysis: *const ApolarAnalysis) -> c_int {
    analysis
        .as_ref()
        .map_or(-1, |a| c_int::from(a.report.lefschetz.certificate.holds))
}

fn into_c_string(text: String) -> *mut c_char {
    match CString::new(text.replace('\0', " ")) {
        Ok(owned) => owned.into_raw(),
        Err(_) => ptr::null_mut(),
    }
}

/// The full analysis report as pretty-printed JSON. Free the returned
/// string with [`apolar_string_free`]; returns null if `analysis` is
/// null.
///
/// # Safety
///
/// `analysis` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn apolar_analysis_report_json(
    analysis: *const ApolarAnalysis,
) -> *mut c_char {
    let Some(a) = analysis.as_ref() else {
        return ptr::null_mut();
    };
    match serde_json::to_string_pretty(&a.report) {
        Ok(json) => into_c_string(json),
        Err(e) => {
            set_last_error(&e.to_string());
            ptr::null_mut()
        }
    }
}

/// The analysis report rendered as human-readable text. Free the
/// returned string with [`apolar_string_free`]; returns null if
/// `analysis` is null.
///
/// # Safety
///
/// `analysis` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn apolar_analysis_report_text(
    analysis: *const ApolarAnalysis,
) -> *mut c_char {
    let Some(a) = analysis.as_ref() else {
        return ptr::null_mut();
    };
    into_c_string(a.report.to_text())
}

/// The graded Betti table as JSON (`{"n", "s", "entries": [[i, j, b]]}`).
/// Free the returned string with [`apolar_string_free`]; returns null if
/// `analysis` is null.
///
/// # Safety
///
/// `analysis` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn apolar_analysis_betti_json(
    analysis: *const ApolarAnalysis,
) -> *mut c_char {
    let Some(a) = analysis.as_ref() else {
        return ptr::null_mut();
    };
    match serde_json::to_string(&a.report.betti) {
        Ok(json) => into_c_string(json),
        Err(e) => {
            set_last_error(&e.to_string());
            ptr::null_mut()
        }
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
///
/// `text` must be null or a string pointer previously returned by this
/// library that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn apolar_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}
