//! C ABI over `chvlab`.
//!
//! Objects cross the boundary as opaque handles created by `*_from_json` or
//! `*_generate` and released by the matching `*_free`. Every fallible call
//! returns a [`ChvStatus`] and writes its result through an out-pointer;
//! on failure [`chv_last_error`] describes the problem. Strings returned by
//! the library are owned by the caller and released with [`chv_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use chvlab::algebra::RingMatrix;
use chvlab::gen::{self, FamilySpec, Strategy};
use chvlab::mixed::{mixed_discriminant, MatrixTuple};
use chvlab::theorems::{self, ConstraintFamily, MixedConstraintFamily, Status, VerificationReport};
use chvlab::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Dimension = 4,
    Hypothesis = 5,
    InvalidArgument = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChvReportStatus {
    Pass = 0,
    Fail = 1,
    HypothesisViolation = 3,
}

pub struct ChvMatrix(RingMatrix);
pub struct ChvFamily(ConstraintFamily);
pub struct ChvMixedFamily(MixedConstraintFamily);
pub struct ChvReport(VerificationReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> ChvStatus {
    match e {
        Error::Syntax { .. } | Error::ZeroDenominator { .. } | Error::Json(_) => ChvStatus::Parse,
        Error::Dimension(_) | Error::IndexOutOfRange(_) => ChvStatus::Dimension,
        e if e.is_hypothesis_violation() => ChvStatus::Hypothesis,
        _ => ChvStatus::InvalidArgument,
    }
}

/// Runs `f`, recording any error or panic.
fn guard<F: FnOnce() -> Result<(), ChvStatus>>(f: F) -> ChvStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ChvStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            ChvStatus::Panic
        }
    }
}

fn fail(e: Error) -> ChvStatus {
    set_error(&e.to_string());
    status_of(&e)
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, ChvStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(ChvStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        ChvStatus::InvalidUtf8
    })
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, ChvStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null handle");
        ChvStatus::NullPointer
    })
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), ChvStatus> {
    if out.is_null() {
        set_error("null out-pointer");
        return Err(ChvStatus::NullPointer);
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), ChvStatus> {
    if out.is_null() {
        set_error("null out-pointer");
        return Err(ChvStatus::NullPointer);
    }
    *out = CString::new(s).map_err(|_| ChvStatus::InvalidArgument)?.into_raw();
    Ok(())
}

fn parse_json<T: serde::de::DeserializeOwned>(s: &str) -> Result<T, ChvStatus> {
    serde_json::from_str(s).map_err(|e| fail(e.into()))
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, ChvStatus> {
    serde_json::to_string(v).map_err(|e| fail(e.into()))
}

/// Message for the last failed call on this thread, or NULL. Free with
/// [`chv_string_free`].
#[no_mangle]
pub extern "C" fn chv_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn chv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version; static storage, do not free.
#[no_mangle]
pub extern "C" fn chv_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses `{"n": .., "entries": [[..]]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chv_matrix_from_json(json: *const c_char, out: *mut *mut ChvMatrix) -> ChvStatus {
    guard(|| put(out, ChvMatrix(parse_json(read_str(json)?)?)))
}

/// # Safety
/// `m` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn chv_matrix_free(m: *mut ChvMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chv_matrix_to_json(m: *const ChvMatrix, out: *mut *mut c_char) -> ChvStatus {
    guard(|| put_string(out, to_json(&handle(m)?.0)?))
}

/// Determinant as canonical polynomial text.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chv_matrix_det(m: *const ChvMatrix, out: *mut *mut c_char) -> ChvStatus {
    guard(|| put_string(out, handle(m)?.0.det().to_string()))
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chv_matrix_permanent(m: *const ChvMatrix, out: *mut *mut c_char) -> ChvStatus {
    guard(|| put_string(out, handle(m)?.0.permanent().to_string()))
}

/// Mixed discriminant of a tuple file `{"n": .., "mats": [..]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chv_mixed_discriminant(json: *const c_char, out: *mut *mut c_char) -> ChvStatus {
    guard(|| {
        let t: MatrixTuple = parse_json(read_str(json)?)?;
        put_string(out, mixed_discriminant(&t).to_string())
    })
}

fn spec(strategy: &str, n: usize, k: usize, seed: u64, symbolic: bool, magnitude: u32) -> Result<FamilySpec, ChvStatus> {
    let s: Strategy = strategy.parse().map_err(fail)?;
    Ok(FamilySpec::new(s, n, k, seed).symbolic(symbolic).magnitude(magnitude))
}

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chv_family_from_json(json: *const c_char, out: *mut *mut ChvFamily) -> ChvStatus {
    guard(|| put(out, ChvFamily(parse_json(read_str(json)?)?)))
}

/// A constrained family over a commuting family drawn by `strategy`
/// (`"diagonal-generic"`, `"powers-of-one"`, `"circulant"`, `"conjugated-diagonal"`).
///
/// # Safety
/// `strategy` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chv_family_generate(
    strategy: *const c_char,
    n: usize,
    k: usize,
    seed: u64,
    symbolic: bool,
    magnitude: u32,
    out: *mut *mut ChvFamily,
) -> ChvStatus {
    guard(|| {
        let s = spec(read_str(strategy)?, n, k, seed, symbolic, magnitude)?;
        put(out, ChvFamily(gen::gen_family(&s).map_err(fail)?))
    })
}

/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chv_family_to_json(f: *const ChvFamily, out: *mut *mut c_char) -> ChvStatus {
    guard(|| put_string(out, to_json(&handle(f)?.0)?))
}

/// # Safety
/// `f` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn chv_family_free(f: *mut ChvFamily) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chv_mixed_family_from_json(json: *const c_char, out: *mut *mut ChvMixedFamily) -> ChvStatus {
    guard(|| put(out, ChvMixedFamily(parse_json(read_str(json)?)?)))
}

/// # Safety
/// `strategy` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chv_mixed_family_generate(
    strategy: *const c_char,
    n: usize,
    k: usize,
    seed: u64,
    symbolic: bool,
    magnitude: u32,
    out: *mut *mut ChvMixedFamily,
) -> ChvStatus {
    guard(|| {
        let s = spec(read_str(strategy)?, n, k, seed, symbolic, magnitude)?;
        put(out, ChvMixedFamily(gen::gen_mixed_constrained(&s).map_err(fail)?))
    })
}

/// # Safety
/// `f` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn chv_mixed_family_free(f: *mut ChvMixedFamily) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chv_verify_phillips(f: *const ChvFamily, out: *mut *mut ChvReport) -> ChvStatus {
    guard(|| put(out, ChvReport(theorems::verify_phillips(&handle(f)?.0))))
}

/// `b` and `e` are 1-based.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chv_verify_lemmas(f: *const ChvFamily, b: usize, e: usize, out: *mut *mut ChvReport) -> ChvStatus {
    guard(|| {
        let f = handle(f)?;
        if b == 0 || e == 0 {
            return Err(fail(Error::IndexOutOfRange("b and e are 1-based".into())));
        }
        put(out, ChvReport(theorems::verify_lemmas(&f.0, b - 1, e - 1)))
    })
}

/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chv_verify_mixed(f: *const ChvMixedFamily, out: *mut *mut ChvReport) -> ChvStatus {
    guard(|| put(out, ChvReport(theorems::verify_mixed_theorem(&handle(f)?.0))))
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chv_report_status(r: *const ChvReport, out: *mut ChvReportStatus) -> ChvStatus {
    guard(|| {
        let r = handle(r)?;
        if out.is_null() {
            set_error("null out-pointer");
            return Err(ChvStatus::NullPointer);
        }
        *out = match r.0.status {
            Status::Pass => ChvReportStatus::Pass,
            Status::Fail => ChvReportStatus::Fail,
            Status::HypothesisViolation => ChvReportStatus::HypothesisViolation,
        };
        Ok(())
    })
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chv_report_to_json(r: *const ChvReport, out: *mut *mut c_char) -> ChvStatus {
    guard(|| put_string(out, to_json(&handle(r)?.0)?))
}

/// # Safety
/// `r` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn chv_report_free(r: *mut ChvReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}
