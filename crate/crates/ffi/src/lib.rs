//! C ABI over the homhopf kernel.
//!
//! Structures are opaque handles owned by the caller and released with the
//! matching `*_free`. Every fallible call returns an [`HhStatus`]; on a
//! non-`HH_STATUS_OK` status the message is available from
//! [`hh_last_error`] on the same thread. Strings handed out by the library
//! are released with [`hh_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use homhopf::double::{double_report, drinfeld_double_with_limit, DrinfeldDouble, DEFAULT_DIMENSION_LIMIT};
use homhopf::error::Error;
use homhopf::hom::{check_hom_hopf, HomHopfAlgebra};
use homhopf::io::catalog::catalog_get;
use homhopf::io::convert::{hopf_to_file, r_matrix_block, resolve_hopf};
use homhopf::io::{parse_str, serialize, Document};
use homhopf::report::AxiomReport;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HhStatus {
    Ok = 0,
    /// The structure was built or checked, and an axiom failed.
    AxiomFailed = 1,
    NullArgument = 2,
    InvalidUtf8 = 3,
    Parse = 4,
    Validation = 5,
    UnknownStructure = 6,
    NotBijective = 7,
    DimensionTooLarge = 8,
    Io = 9,
    Internal = 10,
}

/// A Hom-Hopf algebra.
pub struct HhHopf {
    inner: Arc<HomHopfAlgebra>,
}

/// A Drinfeld double together with its R-matrix.
pub struct HhDouble {
    inner: DrinfeldDouble,
    name: String,
}

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

fn status_of(e: &Error) -> HhStatus {
    match e {
        Error::Parse { .. } => HhStatus::Parse,
        Error::Validation(_) | Error::MissingData(_) | Error::DimensionMismatch { .. } | Error::NotSquare { .. } => {
            HhStatus::Validation
        }
        Error::UnknownStructure(_) => HhStatus::UnknownStructure,
        Error::NonBijective(_) | Error::SingularMap | Error::SingularQ => HhStatus::NotBijective,
        Error::DimensionTooLarge { .. } => HhStatus::DimensionTooLarge,
        Error::Io(_) => HhStatus::Io,
        Error::PrerequisiteFailed { .. }
        | Error::NotAnEndomorphism { .. }
        | Error::IncompatibleEndomorphisms { .. }
        | Error::BraidConditionFailed { .. }
        | Error::UnitalActionMissing { .. }
        | Error::TwistorCheckFailed { .. }
        | Error::CompatibilityFailed { .. }
        | Error::QtCheckFailed { .. } => HhStatus::AxiomFailed,
        _ => HhStatus::Internal,
    }
}

/// Runs `f`, records any error or panic, and returns the status.
fn guard(f: impl FnOnce() -> Result<HhStatus, (HhStatus, String)>) -> HhStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            HhStatus::Internal
        }
    }
}

fn lift<T>(r: homhopf::error::Result<T>) -> Result<T, (HhStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, (HhStatus, String)> {
    if p.is_null() {
        return Err((HhStatus::NullArgument, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (HhStatus::InvalidUtf8, "argument is not valid UTF-8".into()))
}

fn null_arg(what: &str) -> (HhStatus, String) {
    (HhStatus::NullArgument, format!("null {what}"))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Writes the report's JSON to `*report_json` when that pointer is non-null,
/// and maps pass/fail to a status.
unsafe fn emit_report(r: &AxiomReport, report_json: *mut *mut c_char) -> HhStatus {
    if !report_json.is_null() {
        *report_json = into_c_string(r.to_json().to_string());
    }
    if r.passed() {
        HhStatus::Ok
    } else {
        set_error(r.first_failure_summary());
        HhStatus::AxiomFailed
    }
}

/// The message of the last failed call on this thread, or null. The pointer
/// stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn hh_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by the library.
///
/// # Safety
/// `s` is null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Looks up a built-in structure by name.
///
/// # Safety
/// `name` is a nul-terminated string; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hh_hopf_from_catalog(name: *const c_char, out: *mut *mut HhHopf) -> HhStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_arg("output pointer"));
        }
        let h = lift(catalog_get(read_str(name)?))?;
        *out = Box::into_raw(Box::new(HhHopf { inner: Arc::new(h) }));
        Ok(HhStatus::Ok)
    })
}

/// Parses a structure document and builds the Hom-Hopf algebra called
/// `name`, or the last structure when `name` is null.
///
/// # Safety
/// `text` is a nul-terminated string; `name` is null or nul-terminated;
/// `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hh_hopf_from_json(text: *const c_char, name: *const c_char, out: *mut *mut HhHopf) -> HhStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_arg("output pointer"));
        }
        let doc = lift(parse_str(read_str(text)?))?;
        let name = if name.is_null() {
            match doc.structures.last() {
                Some(s) => s.name.clone(),
                None => return Err((HhStatus::Validation, "document has no structures".into())),
            }
        } else {
            read_str(name)?.to_string()
        };
        let h = lift(resolve_hopf(&doc, &name))?;
        *out = Box::into_raw(Box::new(HhHopf { inner: Arc::new(h) }));
        Ok(HhStatus::Ok)
    })
}

/// # Safety
/// `h` is null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hh_hopf_free(h: *mut HhHopf) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Dimension of the carrier, or 0 for a null handle.
///
/// # Safety
/// `h` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hh_hopf_dim(h: *const HhHopf) -> usize {
    h.as_ref().map_or(0, |h| h.inner.dim())
}

/// Runs the full Hom-Hopf suite. `HH_STATUS_OK` when every identity holds,
/// `HH_STATUS_AXIOM_FAILED` otherwise. The report is written to
/// `*report_json` when that pointer is non-null.
///
/// # Safety
/// `h` is a live handle; `report_json` is null or a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hh_hopf_check(h: *const HhHopf, report_json: *mut *mut c_char) -> HhStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null_arg("handle"))?;
        let r = match check_hom_hopf(&h.inner) {
            Ok(r) => r,
            Err(Error::PrerequisiteFailed { report, .. }) => *report,
            Err(e) => return Err((status_of(&e), e.to_string())),
        };
        Ok(emit_report(&r, report_json))
    })
}

/// Serializes the structure under `name` into the structure-file format.
///
/// # Safety
/// `h` is a live handle; `name` is nul-terminated; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hh_hopf_to_json(h: *const HhHopf, name: *const c_char, out: *mut *mut c_char) -> HhStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null_arg("handle"))?;
        if out.is_null() {
            return Err(null_arg("output pointer"));
        }
        let doc = Document::single(hopf_to_file(read_str(name)?, &h.inner));
        *out = into_c_string(serialize(&doc));
        Ok(HhStatus::Ok)
    })
}

/// Builds the Drinfeld double. `limit` bounds the base dimension; 0 selects
/// the default.
///
/// # Safety
/// `h` is a live handle; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hh_double_new(h: *const HhHopf, limit: usize, out: *mut *mut HhDouble) -> HhStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null_arg("handle"))?;
        if out.is_null() {
            return Err(null_arg("output pointer"));
        }
        let limit = if limit == 0 { DEFAULT_DIMENSION_LIMIT } else { limit };
        let d = lift(drinfeld_double_with_limit(h.inner.clone(), limit))?;
        *out = Box::into_raw(Box::new(HhDouble { inner: d, name: "D".into() }));
        Ok(HhStatus::Ok)
    })
}

/// # Safety
/// `d` is null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hh_double_free(d: *mut HhDouble) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Dimension of the double, or 0 for a null handle.
///
/// # Safety
/// `d` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hh_double_dim(d: *const HhDouble) -> usize {
    d.as_ref().map_or(0, |d| d.inner.dim())
}

/// Hom-Hopf and quasitriangular checks on the double.
///
/// # Safety
/// `d` is a live handle; `report_json` is null or a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hh_double_verify(d: *const HhDouble, report_json: *mut *mut c_char) -> HhStatus {
    guard(|| {
        let d = d.as_ref().ok_or_else(|| null_arg("handle"))?;
        let r = match double_report(&d.inner) {
            Ok(r) => r,
            Err(Error::PrerequisiteFailed { report, .. }) => *report,
            Err(e) => return Err((status_of(&e), e.to_string())),
        };
        Ok(emit_report(&r, report_json))
    })
}

/// The double and its R-matrix in the structure-file format.
///
/// # Safety
/// `d` is a live handle; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hh_double_to_json(d: *const HhDouble, out: *mut *mut c_char) -> HhStatus {
    guard(|| {
        let d = d.as_ref().ok_or_else(|| null_arg("handle"))?;
        if out.is_null() {
            return Err(null_arg("output pointer"));
        }
        let mut f = hopf_to_file(&d.name, d.inner.hopf());
        f.r_matrix = Some(r_matrix_block(d.inner.r_matrix()));
        *out = into_c_string(serialize(&Document::single(f)));
        Ok(HhStatus::Ok)
    })
}

/// The double as a standalone Hom-Hopf handle.
///
/// # Safety
/// `d` is a live handle; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hh_double_hopf(d: *const HhDouble, out: *mut *mut HhHopf) -> HhStatus {
    guard(|| {
        let d = d.as_ref().ok_or_else(|| null_arg("handle"))?;
        if out.is_null() {
            return Err(null_arg("output pointer"));
        }
        *out = Box::into_raw(Box::new(HhHopf { inner: Arc::new(d.inner.hopf().clone()) }));
        Ok(HhStatus::Ok)
    })
}
