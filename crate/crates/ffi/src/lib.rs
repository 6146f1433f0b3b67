//! C ABI over `gla-core`.
//!
//! Algebras are passed around as opaque `GlaAlgebra` handles. Every function returns a
//! `GlaStatus`; on failure, `gla_last_error` gives a message for the calling thread. Strings
//! returned by the library must be released with `gla_string_free`, handles with
//! `gla_algebra_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gla_core::admissibility::check_admissible;
use gla_core::hodge::{AdaptedMetric, Hodge};
use gla_core::io::AlgebraDocument;
use gla_core::{ctg, prolongation, registry, GradedLieAlgebra};

/// Result codes of every exported function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed document or unknown registry name.
    Parse = 3,
    /// The input violates a mathematical precondition.
    Invalid = 4,
    /// A caller-supplied buffer is too small; the required length is still reported.
    BufferTooSmall = 5,
    /// Internal inconsistency or panic.
    Internal = 6,
}

/// An algebra together with the metric it was loaded with (identity if none).
pub struct GlaAlgebra {
    algebra: GradedLieAlgebra,
    metric: AdaptedMetric,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: GlaStatus, msg: impl Into<String>) -> GlaStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> GlaStatus) -> GlaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(GlaStatus::Internal, "panic inside gla"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, GlaStatus> {
    if s.is_null() {
        return Err(fail(GlaStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(GlaStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn handle<'a>(h: *const GlaAlgebra) -> Result<&'a GlaAlgebra, GlaStatus> {
    h.as_ref().ok_or_else(|| fail(GlaStatus::NullPointer, "null algebra handle"))
}

fn into_handle(algebra: GradedLieAlgebra, metric: Option<AdaptedMetric>) -> *mut GlaAlgebra {
    let metric = metric.unwrap_or_else(|| AdaptedMetric::identity(&algebra));
    Box::into_raw(Box::new(GlaAlgebra { algebra, metric }))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> GlaStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            GlaStatus::Ok
        }
        Err(_) => fail(GlaStatus::Internal, "string contains NUL"),
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message describing the last failure on this thread; valid until the next call.
#[no_mangle]
pub extern "C" fn gla_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gla_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases an algebra handle. Null is ignored.
///
/// # Safety
/// `h` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gla_algebra_free(h: *mut GlaAlgebra) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Loads a built-in algebra by name.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gla_algebra_from_registry(name: *const c_char, out: *mut *mut GlaAlgebra) -> GlaStatus {
    guard(|| {
        if out.is_null() {
            return fail(GlaStatus::NullPointer, "null output pointer");
        }
        let name = tri!(read_str(name));
        match registry::get(name) {
            Ok(g) => {
                *out = into_handle(g, None);
                GlaStatus::Ok
            }
            Err(e) => fail(GlaStatus::Parse, e.to_string()),
        }
    })
}

/// Parses an algebra document (JSON); its metric, if any, is attached to the handle.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gla_algebra_from_json(json: *const c_char, out: *mut *mut GlaAlgebra) -> GlaStatus {
    guard(|| {
        if out.is_null() {
            return fail(GlaStatus::NullPointer, "null output pointer");
        }
        let text = tri!(read_str(json));
        let doc = match AlgebraDocument::parse(text) {
            Ok(d) => d,
            Err(e) => return fail(GlaStatus::Parse, e.to_string()),
        };
        let g = match doc.to_algebra() {
            Ok(g) => g,
            Err(e) => return fail(GlaStatus::Parse, e.to_string()),
        };
        match doc.metric(&g) {
            Ok(m) => {
                *out = into_handle(g, m);
                GlaStatus::Ok
            }
            Err(e) => fail(GlaStatus::Invalid, e.to_string()),
        }
    })
}

/// Serializes the algebra and its metric as a document.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gla_algebra_to_json(h: *const GlaAlgebra, out: *mut *mut c_char) -> GlaStatus {
    guard(|| {
        let a = tri!(handle(h));
        if out.is_null() {
            return fail(GlaStatus::NullPointer, "null output pointer");
        }
        write_string(out, AlgebraDocument::from_algebra(&a.algebra).with_metric(&a.metric).emit())
    })
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gla_algebra_dim(h: *const GlaAlgebra, out: *mut usize) -> GlaStatus {
    guard(|| {
        let a = tri!(handle(h));
        if out.is_null() {
            return fail(GlaStatus::NullPointer, "null output pointer");
        }
        *out = a.algebra.dim();
        GlaStatus::Ok
    })
}

/// Checks the graded Lie algebra axioms; `fundamental` also requires a fundamental gradation.
///
/// # Safety
/// `h` must be a live handle and `valid` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gla_algebra_validate(h: *const GlaAlgebra, fundamental: bool, valid: *mut bool) -> GlaStatus {
    guard(|| {
        let a = tri!(handle(h));
        if valid.is_null() {
            return fail(GlaStatus::NullPointer, "null output pointer");
        }
        let report = a.algebra.validate(fundamental);
        *valid = report.is_valid();
        if !report.is_valid() {
            set_error(report.summary());
        }
        GlaStatus::Ok
    })
}

/// Builds the cotangent algebra `t*(g)` (identity metric attached).
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gla_algebra_cotangent(h: *const GlaAlgebra, out: *mut *mut GlaAlgebra) -> GlaStatus {
    guard(|| {
        let a = tri!(handle(h));
        if out.is_null() {
            return fail(GlaStatus::NullPointer, "null output pointer");
        }
        match a.algebra.cotangent() {
            Ok(t) => {
                *out = into_handle(t, None);
                GlaStatus::Ok
            }
            Err(e) => fail(GlaStatus::Invalid, e.to_string()),
        }
    })
}

/// `dim H^k_l(h₋, h)` for the handle's metric; harmonic and `ker/im` counts must agree.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gla_cohomology_dim(h: *const GlaAlgebra, k: usize, l: i32, out: *mut usize) -> GlaStatus {
    guard(|| {
        let a = tri!(handle(h));
        if out.is_null() {
            return fail(GlaStatus::NullPointer, "null output pointer");
        }
        match Hodge::new(&a.algebra, &a.metric).cohomology_dim(k, l) {
            Ok(d) => {
                *out = d.harmonic;
                GlaStatus::Ok
            }
            Err(e) => fail(GlaStatus::Internal, e.to_string()),
        }
    })
}

/// Whether the handle's metric is admissible.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gla_check_admissible(h: *const GlaAlgebra, out: *mut bool) -> GlaStatus {
    guard(|| {
        let a = tri!(handle(h));
        if out.is_null() {
            return fail(GlaStatus::NullPointer, "null output pointer");
        }
        *out = check_admissible(&a.algebra, &a.metric).admissible;
        GlaStatus::Ok
    })
}

/// Tanaka prolongation level dimensions. Writes up to `cap` entries into `dims` and the
/// number of levels into `len`; `BufferTooSmall` if `cap < *len`.
///
/// # Safety
/// `h` must be a live handle, `len` valid, and `dims` valid for `cap` writes (may be null
/// when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn gla_prolongation_dims(
    h: *const GlaAlgebra,
    max_k: i32,
    dims: *mut usize,
    cap: usize,
    len: *mut usize,
    finite_type: *mut bool,
) -> GlaStatus {
    guard(|| {
        let a = tri!(handle(h));
        if len.is_null() || (cap > 0 && dims.is_null()) {
            return fail(GlaStatus::NullPointer, "null output pointer");
        }
        let p = match prolongation::prolong(&a.algebra, max_k) {
            Ok(p) => p,
            Err(e) => return fail(GlaStatus::Invalid, e.to_string()),
        };
        let d = p.dims();
        *len = d.len();
        if !finite_type.is_null() {
            *finite_type = p.finite_type;
        }
        if cap < d.len() {
            return fail(GlaStatus::BufferTooSmall, format!("need {} entries", d.len()));
        }
        ptr::copy_nonoverlapping(d.as_ptr(), dims, d.len());
        GlaStatus::Ok
    })
}

/// Closed-form against general first cohomology of `t*(g)`, as JSON. `agree` receives the
/// overall agreement flag.
///
/// # Safety
/// `h` must be a live handle and `out`, `agree` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn gla_ctg_report_json(
    h: *const GlaAlgebra,
    out: *mut *mut c_char,
    agree: *mut bool,
) -> GlaStatus {
    guard(|| {
        let a = tri!(handle(h));
        if out.is_null() || agree.is_null() {
            return fail(GlaStatus::NullPointer, "null output pointer");
        }
        match ctg::adunat_report(&a.algebra) {
            Ok(r) => {
                *agree = r.all_agree();
                write_string(out, serde_json::to_string(&r).expect("report serializes"))
            }
            Err(ctg::CtgError::Hodge(e)) => fail(GlaStatus::Internal, e.to_string()),
            Err(e) => fail(GlaStatus::Invalid, e.to_string()),
        }
    })
}
