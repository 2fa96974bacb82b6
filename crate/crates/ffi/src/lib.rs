//! C interface to `unitary-radon`.
//!
//! Every function returns a [`UrStatus`]. On failure the message is kept per
//! thread and read with [`ur_last_error`]. Objects handed out are opaque and
//! must be released with their matching `_free` function; strings returned
//! through `char **` are released with [`ur_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use clap::Parser;
use unitary_radon::ball::{dual_exact, invert_holomorphic, reconstruct};
use unitary_radon::cli::{exit_code, run, run_document, JobSpec, EXIT_INVARIANT};
use unitary_radon::fock::{fock_dual_exact, fock_invert, FockElement};
use unitary_radon::io::{parse_polynomial, serialize_polynomial};
use unitary_radon::{BiPoly, Error, CQ};

/// Result of a call. The non-zero values match the command-line exit codes
/// where they overlap.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UrStatus {
    Ok = 0,
    Io = 1,
    Contract = 2,
    Invariant = 3,
    NullArgument = 4,
    InvalidUtf8 = 5,
    Panic = 6,
}

/// A polynomial with exact complex rational coefficients.
pub struct UrPolynomial(BiPoly<CQ>);

/// Output of [`ur_run`]: the report or tuple text and the exit code the
/// command-line tool would have used.
pub struct UrReport {
    text: CString,
    exit: i32,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let text = CString::new(message.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn fail(e: &Error) -> UrStatus {
    set_error(e.to_string());
    match exit_code(e) {
        1 => UrStatus::Io,
        _ => UrStatus::Contract,
    }
}

fn guard(f: impl FnOnce() -> UrStatus) -> UrStatus {
    set_error("");
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|payload| {
        let message = payload
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| payload.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "unknown panic".into());
        set_error(format!("panic: {message}"));
        UrStatus::Panic
    })
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, UrStatus> {
    if p.is_null() {
        set_error("null argument");
        return Err(UrStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        UrStatus::InvalidUtf8
    })
}

fn give<T>(out: *mut *mut T, value: T) -> UrStatus {
    unsafe { *out = Box::into_raw(Box::new(value)) };
    UrStatus::Ok
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

macro_rules! need_out {
    ($out:expr) => {
        if $out.is_null() {
            set_error("null output pointer");
            return UrStatus::NullArgument;
        }
        unsafe { *$out = ptr::null_mut() };
    };
}

/// Message describing the last failure on this thread; empty after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ur_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Runs a command exactly as the command-line tool does. `argv` holds the
/// arguments after the program name. When `document` is non-null it is used
/// as the input instead of `--in`. A report is produced for
/// [`UrStatus::Ok`] and [`UrStatus::Invariant`].
///
/// # Safety
/// `argv` must point to `argc` valid C strings; `document` is null or a valid
/// C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ur_run(
    argv: *const *const c_char,
    argc: usize,
    document: *const c_char,
    out: *mut *mut UrReport,
) -> UrStatus {
    guard(|| {
        need_out!(out);
        if argv.is_null() && argc > 0 {
            set_error("null argv");
            return UrStatus::NullArgument;
        }
        let mut args = vec!["unitary-radon".to_string()];
        for i in 0..argc {
            args.push(tri!(text(*argv.add(i))).to_string());
        }
        let job = match JobSpec::try_parse_from(&args) {
            Ok(job) => job,
            Err(e) => {
                set_error(e.to_string());
                return UrStatus::Contract;
            }
        };
        let outcome = if document.is_null() {
            run(&job)
        } else {
            run_document(&job, tri!(text(document)))
        };
        match outcome {
            Ok(o) => {
                let status = if o.exit == EXIT_INVARIANT {
                    UrStatus::Invariant
                } else {
                    UrStatus::Ok
                };
                if status == UrStatus::Invariant {
                    set_error("an invariant check failed; see the report");
                }
                let text = CString::new(o.text).unwrap_or_default();
                give(out, UrReport { text, exit: o.exit });
                status
            }
            Err(e) => fail(&e),
        }
    })
}

/// Report text, owned by the report.
///
/// # Safety
/// `report` must come from [`ur_run`] and not yet be freed.
#[no_mangle]
pub unsafe extern "C" fn ur_report_text(report: *const UrReport) -> *const c_char {
    report.as_ref().map_or(ptr::null(), |r| r.text.as_ptr())
}

/// Exit code the command-line tool would have returned, or -1 for null.
///
/// # Safety
/// `report` must come from [`ur_run`] and not yet be freed.
#[no_mangle]
pub unsafe extern "C" fn ur_report_exit_code(report: *const UrReport) -> i32 {
    report.as_ref().map_or(-1, |r| r.exit)
}

/// # Safety
/// `report` is null or came from [`ur_run`]; it must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ur_report_free(report: *mut UrReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Parses a polynomial document.
///
/// # Safety
/// `json` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ur_polynomial_parse(json: *const c_char, out: *mut *mut UrPolynomial) -> UrStatus {
    guard(|| {
        need_out!(out);
        match parse_polynomial(tri!(text(json))) {
            Ok(p) => give(out, UrPolynomial(p)),
            Err(e) => fail(&e),
        }
    })
}

/// Serializes a polynomial; free the string with [`ur_string_free`].
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ur_polynomial_to_json(poly: *const UrPolynomial, out: *mut *mut c_char) -> UrStatus {
    guard(|| {
        need_out!(out);
        let Some(p) = poly.as_ref() else {
            set_error("null polynomial");
            return UrStatus::NullArgument;
        };
        let s = CString::new(serialize_polynomial(&p.0)).unwrap_or_default();
        *out = s.into_raw();
        UrStatus::Ok
    })
}

/// Number of complex variables, or 0 for null.
///
/// # Safety
/// `poly` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ur_polynomial_dimension(poly: *const UrPolynomial) -> usize {
    poly.as_ref().map_or(0, |p| p.0.n())
}

/// # Safety
/// `poly` is null or a live handle; it must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ur_polynomial_free(poly: *mut UrPolynomial) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// # Safety
/// `s` is null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn ur_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn map_poly(
    poly: *const UrPolynomial,
    out: *mut *mut UrPolynomial,
    f: impl FnOnce(&BiPoly<CQ>) -> unitary_radon::Result<BiPoly<CQ>>,
) -> UrStatus {
    guard(|| {
        need_out!(out);
        let Some(p) = poly.as_ref() else {
            set_error("null polynomial");
            return UrStatus::NullArgument;
        };
        match f(&p.0) {
            Ok(r) => give(out, UrPolynomial(r)),
            Err(e) => fail(&e),
        }
    })
}

/// Exact dual transform of a harmonic polynomial on the unit ball.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ur_ball_dual(poly: *const UrPolynomial, out: *mut *mut UrPolynomial) -> UrStatus {
    map_poly(poly, out, |p| dual_exact(p, p.n()))
}

/// Recovers a holomorphic polynomial from its dual transform.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ur_ball_invert_holomorphic(
    poly: *const UrPolynomial,
    out: *mut *mut UrPolynomial,
) -> UrStatus {
    map_poly(poly, out, |p| invert_holomorphic(p, p.n()))
}

/// Runs the two-branch inversion pipeline on a harmonic polynomial; the
/// result equals the input.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ur_ball_reconstruct(poly: *const UrPolynomial, out: *mut *mut UrPolynomial) -> UrStatus {
    map_poly(poly, out, |p| reconstruct(p, p.n()))
}

/// Exact dual transform in Fock space; the input must be holomorphic.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ur_fock_dual(poly: *const UrPolynomial, out: *mut *mut UrPolynomial) -> UrStatus {
    map_poly(poly, out, |p| {
        Ok(fock_dual_exact(&FockElement::new(p.clone())?, p.n())?.into_poly())
    })
}

/// Inverse of [`ur_fock_dual`].
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ur_fock_invert(poly: *const UrPolynomial, out: *mut *mut UrPolynomial) -> UrStatus {
    map_poly(poly, out, |p| {
        Ok(fock_invert(&FockElement::new(p.clone())?, p.n())?.into_poly())
    })
}
