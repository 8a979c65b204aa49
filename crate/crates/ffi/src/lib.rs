//! C interface to the HOMFLY engine.
//!
//! Braids and polynomials are opaque heap handles released with their
//! `_free` functions. Every call returns a [`HomflyStatus`]; on failure a
//! message is available from [`homfly_last_error`] on the same thread.
//! Strings handed out by the library are released with
//! [`homfly_string_free`]. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use homfly::braid::{parse_braid, BraidWord};
use homfly::invariants::{braid_index_certificate, Verdict};
use homfly::poly::LaurentPoly2;
use homfly::report::{build_report, ReportError};
use homfly::Method;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomflyStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    ComputeError = 4,
    MethodMismatch = 5,
    InvalidArgument = 6,
    Panic = 7,
}

/// Method selectors accepted by [`homfly_compute`].
#[repr(u32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomflyMethod {
    Descending = 0,
    Ascending = 1,
    Jaeger = 2,
    JaegerDual = 3,
    /// Every method, failing with `MethodMismatch` unless they agree.
    All = 4,
}

/// A parsed braid word.
pub struct HomflyBraid(BraidWord);

/// A two-variable Laurent polynomial in `z` and `a`.
pub struct HomflyPoly(LaurentPoly2);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

type Failure = (HomflyStatus, String);

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> HomflyStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            HomflyStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(&format!("internal panic: {msg}"));
            HomflyStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    (HomflyStatus::NullPointer, format!("{what} is null"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|e| (HomflyStatus::ComputeError, e.to_string()))?;
    write_out(out, c.into_raw())
}

fn methods_for(method: u32) -> Result<Vec<Method>, Failure> {
    Ok(match method {
        0 => vec![Method::Descending],
        1 => vec![Method::Ascending],
        2 => vec![Method::Jaeger],
        3 => vec![Method::JaegerDual],
        4 => Method::ALL.to_vec(),
        other => return Err((HomflyStatus::InvalidArgument, format!("unknown method {other}"))),
    })
}

fn report_failure(e: ReportError) -> Failure {
    let status = match e {
        ReportError::Mismatch { .. } => HomflyStatus::MethodMismatch,
        ReportError::Invariant { .. } => HomflyStatus::ComputeError,
    };
    (status, e.to_string())
}

/// Message describing the last failed call on this thread; empty after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn homfly_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parse a braid word such as `"1 -2 1 -2"`. `strands == 0` infers the
/// strand count from the widest generator.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn homfly_braid_parse(
    text: *const c_char,
    strands: usize,
    out: *mut *mut HomflyBraid,
) -> HomflyStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text).to_str().map_err(|e| (HomflyStatus::InvalidUtf8, e.to_string()))?;
        let word = parse_braid(text, (strands > 0).then_some(strands))
            .map_err(|e| (HomflyStatus::ParseError, e.to_string()))?;
        write_out(out, Box::into_raw(Box::new(HomflyBraid(word))))
    })
}

/// # Safety
/// `braid` must come from [`homfly_braid_parse`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn homfly_braid_free(braid: *mut HomflyBraid) {
    if !braid.is_null() {
        drop(Box::from_raw(braid));
    }
}

/// Strand count, or 0 for a null handle.
///
/// # Safety
/// `braid` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn homfly_braid_strands(braid: *const HomflyBraid) -> usize {
    braid.as_ref().map_or(0, |b| b.0.strands())
}

/// Crossing count, or 0 for a null handle.
///
/// # Safety
/// `braid` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn homfly_braid_crossings(braid: *const HomflyBraid) -> usize {
    braid.as_ref().map_or(0, |b| b.0.len())
}

/// HOMFLY polynomial of the closure by the given [`HomflyMethod`] value.
///
/// # Safety
/// `braid` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn homfly_compute(
    braid: *const HomflyBraid,
    method: u32,
    out: *mut *mut HomflyPoly,
) -> HomflyStatus {
    guard(|| {
        let braid = borrow(braid, "braid")?;
        let methods = methods_for(method)?;
        let values: Vec<LaurentPoly2> = methods.iter().map(|m| m.compute(&braid.0)).collect();
        if values.iter().any(|p| p != &values[0]) {
            let detail: Vec<String> = methods.iter().zip(&values).map(|(m, p)| format!("{m} = {p}")).collect();
            return Err((HomflyStatus::MethodMismatch, format!("methods disagree: {}", detail.join(", "))));
        }
        let p = values.into_iter().next().expect("at least one method");
        write_out(out, Box::into_raw(Box::new(HomflyPoly(p))))
    })
}

/// # Safety
/// `poly` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn homfly_poly_free(poly: *mut HomflyPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Canonical text form, e.g. `2*a^-2 - a^-4 + a^-2*z^2`.
///
/// # Safety
/// `poly` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn homfly_poly_to_string(poly: *const HomflyPoly, out: *mut *mut c_char) -> HomflyStatus {
    guard(|| write_string(out, borrow(poly, "poly")?.0.to_string()))
}

/// JSON form `[{"a": .., "z": .., "c": ..}, ..]`.
///
/// # Safety
/// `poly` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn homfly_poly_to_json(poly: *const HomflyPoly, out: *mut *mut c_char) -> HomflyStatus {
    guard(|| {
        let json =
            serde_json::to_string(&borrow(poly, "poly")?.0).map_err(|e| (HomflyStatus::ComputeError, e.to_string()))?;
        write_string(out, json)
    })
}

/// Number of nonzero terms, or 0 for a null handle.
///
/// # Safety
/// `poly` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn homfly_poly_term_count(poly: *const HomflyPoly) -> usize {
    poly.as_ref().map_or(0, |p| p.0.len())
}

/// Term `index` in canonical order: `coeff * z^z_deg * a^a_deg`.
///
/// # Safety
/// `poly` must be a live handle; the output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn homfly_poly_term(
    poly: *const HomflyPoly,
    index: usize,
    z_deg: *mut i32,
    a_deg: *mut i32,
    coeff: *mut i64,
) -> HomflyStatus {
    guard(|| {
        let p = borrow(poly, "poly")?;
        let (e, c) = p.0.terms().nth(index).ok_or_else(|| {
            (HomflyStatus::InvalidArgument, format!("term {index} out of range ({} terms)", p.0.len()))
        })?;
        if z_deg.is_null() || a_deg.is_null() || coeff.is_null() {
            return Err(null("output pointer"));
        }
        z_deg.write(e.z);
        a_deg.write(e.a);
        coeff.write(c);
        Ok(())
    })
}

/// Whether two polynomials are equal; false if either handle is null.
///
/// # Safety
/// Both arguments must be null or live handles.
#[no_mangle]
pub unsafe extern "C" fn homfly_poly_equal(lhs: *const HomflyPoly, rhs: *const HomflyPoly) -> bool {
    match (lhs.as_ref(), rhs.as_ref()) {
        (Some(l), Some(r)) => l.0 == r.0,
        _ => false,
    }
}

/// Full analysis report as JSON (the `analyze --json` schema).
///
/// # Safety
/// `braid` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn homfly_analyze_json(braid: *const HomflyBraid, out: *mut *mut c_char) -> HomflyStatus {
    guard(|| {
        let braid = borrow(braid, "braid")?;
        let report = build_report(&braid.0, &[Method::Descending], false).map_err(report_failure)?;
        let json = serde_json::to_string(&report).map_err(|e| (HomflyStatus::ComputeError, e.to_string()))?;
        write_string(out, json)
    })
}

/// Braid index: the certified value when `*certified` is true, otherwise
/// the MFW lower bound.
///
/// # Safety
/// `braid` must be a live handle; the output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn homfly_braid_index(
    braid: *const HomflyBraid,
    value: *mut u32,
    certified: *mut bool,
) -> HomflyStatus {
    guard(|| {
        let braid = borrow(braid, "braid")?;
        let cert = braid_index_certificate(&braid.0).map_err(|e| (HomflyStatus::ComputeError, e.to_string()))?;
        let (v, c) = match cert.verdict {
            Verdict::Certified(n) => (n as u32, true),
            Verdict::BoundOnly(b) => (b.max(0) as u32, false),
        };
        write_out(value, v)?;
        write_out(certified, c)
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not freed before.
#[no_mangle]
pub unsafe extern "C" fn homfly_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
