//! C ABI for snipforge: parse snippets into opaque unit handles, run the
//! performance rule catalog, check the validity proxy, and apply single
//! edits. Strings cross the boundary as UTF-8 C strings; structured results
//! cross as JSON. Every returned string must be released with
//! [`sf_string_free`].

use snipforge::corpus::wrap_snippet;
use snipforge::edits::{apply_edit, Edit};
use snipforge::rules;
use snipforge::syntax::{check_validity, statement_tree_json, ParseStatus, SourceUnit};
use std::ffi::{CStr, CString};
use std::os::raw::c_char;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SfStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    /// The unit (or text) did not parse; per-unit details are available via
    /// `sf_unit_parse_error`.
    ParseFailed = 3,
    /// Malformed request: bad edit JSON, stale locators, empty snippet.
    BadInput = 4,
}

/// An opaque parsed compilation unit.
pub struct SfUnit {
    inner: SourceUnit,
}

unsafe fn cstr_arg<'a>(ptr: *const c_char) -> Result<&'a str, SfStatus> {
    if ptr.is_null() {
        return Err(SfStatus::NullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| SfStatus::InvalidUtf8)
}

fn string_out(s: String, out: *mut *mut c_char) -> SfStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            SfStatus::Ok
        }
        Err(_) => SfStatus::BadInput,
    }
}

/// Parse `text` into a unit handle. Always returns a handle on `SF_OK`;
/// parse failures are still `SF_OK` here and reported by
/// [`sf_unit_parse_ok`], so that failed units can be inspected.
///
/// # Safety
/// `id` and `text` must be valid NUL-terminated strings; `out` must be a
/// valid pointer. The returned handle must be freed with [`sf_unit_free`].
#[no_mangle]
pub unsafe extern "C" fn sf_unit_parse(
    id: *const c_char,
    text: *const c_char,
    out: *mut *mut SfUnit,
) -> SfStatus {
    if out.is_null() {
        return SfStatus::NullArgument;
    }
    let (id, text) = match (cstr_arg(id), cstr_arg(text)) {
        (Ok(i), Ok(t)) => (i, t),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    let unit = SourceUnit::parse(id, text);
    *out = Box::into_raw(Box::new(SfUnit { inner: unit }));
    SfStatus::Ok
}

/// Release a unit handle. NULL is ignored.
///
/// # Safety
/// `unit` must be a handle from [`sf_unit_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sf_unit_free(unit: *mut SfUnit) {
    if !unit.is_null() {
        drop(Box::from_raw(unit));
    }
}

/// Whether the unit parsed cleanly.
///
/// # Safety
/// `unit` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sf_unit_parse_ok(unit: *const SfUnit, out: *mut bool) -> SfStatus {
    if unit.is_null() || out.is_null() {
        return SfStatus::NullArgument;
    }
    *out = (*unit).inner.parse_status.is_ok();
    SfStatus::Ok
}

/// Parse error description (`reason at line:column`), or an empty string
/// for units that parsed.
///
/// # Safety
/// `unit` and `out` must be valid pointers; free the string with
/// [`sf_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sf_unit_parse_error(
    unit: *const SfUnit,
    out: *mut *mut c_char,
) -> SfStatus {
    if unit.is_null() || out.is_null() {
        return SfStatus::NullArgument;
    }
    let message = match &(*unit).inner.parse_status {
        ParseStatus::Ok => String::new(),
        ParseStatus::Failed {
            reason,
            line,
            column,
            ..
        } => format!("{reason} at {line}:{column}"),
    };
    string_out(message, out)
}

/// Number of method regions in the unit.
///
/// # Safety
/// `unit` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sf_unit_method_count(unit: *const SfUnit, out: *mut usize) -> SfStatus {
    if unit.is_null() || out.is_null() {
        return SfStatus::NullArgument;
    }
    *out = (*unit).inner.methods.len();
    SfStatus::Ok
}

/// Number of statement nodes in the unit.
///
/// # Safety
/// `unit` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sf_unit_statement_count(
    unit: *const SfUnit,
    out: *mut usize,
) -> SfStatus {
    if unit.is_null() || out.is_null() {
        return SfStatus::NullArgument;
    }
    *out = (*unit).inner.statements.len();
    SfStatus::Ok
}

/// Run the 21-rule performance catalog. `out` receives a JSON array of
/// `{"rule": ..., "line": ..., "message": ...}` records.
///
/// # Safety
/// `unit` and `out` must be valid pointers; free the string with
/// [`sf_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sf_unit_analyze_json(
    unit: *const SfUnit,
    out: *mut *mut c_char,
) -> SfStatus {
    if unit.is_null() || out.is_null() {
        return SfStatus::NullArgument;
    }
    match rules::analyze(&(*unit).inner) {
        Some(violations) => string_out(
            serde_json::to_string(&violations).expect("violation serialization"),
            out,
        ),
        None => SfStatus::ParseFailed,
    }
}

/// Debug dump of the statement tree (id, kind, line_range, children).
///
/// # Safety
/// `unit` and `out` must be valid pointers; free the string with
/// [`sf_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sf_unit_statement_tree_json(
    unit: *const SfUnit,
    out: *mut *mut c_char,
) -> SfStatus {
    if unit.is_null() || out.is_null() {
        return SfStatus::NullArgument;
    }
    if !(*unit).inner.parse_status.is_ok() {
        return SfStatus::ParseFailed;
    }
    string_out(statement_tree_json(&(*unit).inner), out)
}

/// Apply one edit, given as JSON
/// `{"kind": "...", "target": {...}, "source": {...}|null}`, to the unit's
/// original text. `out` receives the patched text.
///
/// # Safety
/// All pointers must be valid; free the string with [`sf_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sf_unit_apply_edit_json(
    unit: *const SfUnit,
    edit_json: *const c_char,
    out: *mut *mut c_char,
) -> SfStatus {
    if unit.is_null() || out.is_null() {
        return SfStatus::NullArgument;
    }
    let edit_json = match cstr_arg(edit_json) {
        Ok(s) => s,
        Err(e) => return e,
    };
    let edit: Edit = match serde_json::from_str(edit_json) {
        Ok(e) => e,
        Err(_) => return SfStatus::BadInput,
    };
    match apply_edit(&(*unit).inner, &edit) {
        Ok(patched) => string_out(patched, out),
        Err(_) => SfStatus::BadInput,
    }
}

/// Check the validity proxy on a full unit text. `out` receives
/// `{"valid": bool, "reason": string|null}`.
///
/// # Safety
/// `text` and `out` must be valid pointers; free the string with
/// [`sf_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sf_check_validity(
    text: *const c_char,
    out: *mut *mut c_char,
) -> SfStatus {
    if out.is_null() {
        return SfStatus::NullArgument;
    }
    let text = match cstr_arg(text) {
        Ok(s) => s,
        Err(e) => return e,
    };
    let validity = check_validity(text);
    let json = serde_json::json!({
        "valid": validity.is_valid(),
        "reason": validity.reason(),
    });
    string_out(json.to_string(), out)
}

/// Wrap a raw snippet into an analyzable compilation unit, applying the same
/// keyword check as corpus ingestion. `out` receives the wrapped text.
///
/// # Safety
/// `id`, `raw`, and `out` must be valid pointers; free the string with
/// [`sf_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sf_wrap_snippet(
    id: *const c_char,
    raw: *const c_char,
    out: *mut *mut c_char,
) -> SfStatus {
    if out.is_null() {
        return SfStatus::NullArgument;
    }
    let (id, raw) = match (cstr_arg(id), cstr_arg(raw)) {
        (Ok(i), Ok(r)) => (i, r),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    match wrap_snippet(raw, id) {
        Ok(snippet) => string_out(snippet.wrapped_text, out),
        Err(_) => SfStatus::BadInput,
    }
}

/// Release a string returned by any entry point. NULL is ignored.
///
/// # Safety
/// `s` must be a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn sf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
