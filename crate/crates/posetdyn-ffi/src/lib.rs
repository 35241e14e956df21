//! C ABI for the posetdyn engine.
//!
//! The header `include/posetdyn.h` is the authoritative C-side declaration of
//! everything exported here; a test checks the two stay in sync. Handles are
//! opaque; every function returns a status code (`POSETDYN_OK` = 0) or a
//! pointer that is null on failure, and the last error message is available
//! per thread through `posetdyn_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::sync::Arc;

use posetdyn::census::{promotion_census, CensusOptions};
use posetdyn::dynamics::{k_promotion_power, promotion_orbit};
use posetdyn::error::Error;
use posetdyn::fixtures::parse_spec;
use posetdyn::io::{parse_poset, serialize_poset, serialize_tableau};
use posetdyn::nrp::{nrp_check, NrpOptions};
use posetdyn::poset::Poset;
use posetdyn::IncreasingTableau;

/// Status codes mirrored in the header.
pub const POSETDYN_OK: c_int = 0;
pub const POSETDYN_ERR_INVALID_INPUT: c_int = 1;
pub const POSETDYN_ERR_CAP_EXCEEDED: c_int = 2;
pub const POSETDYN_ERR_INTERNAL: c_int = 3;
pub const POSETDYN_ERR_NULL_POINTER: c_int = 4;
pub const POSETDYN_ERR_UTF8: c_int = 5;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> c_int {
    match e {
        Error::CapExceeded { .. } | Error::OrbitCapExceeded(_) => POSETDYN_ERR_CAP_EXCEEDED,
        Error::EvacuationInconsistent => POSETDYN_ERR_INTERNAL,
        _ => POSETDYN_ERR_INVALID_INPUT,
    }
}

/// Opaque poset handle.
pub struct PosetdynPoset {
    inner: Arc<Poset>,
}

unsafe fn cstr_arg<'a>(ptr: *const c_char) -> Result<&'a str, c_int> {
    if ptr.is_null() {
        set_error("null pointer argument");
        return Err(POSETDYN_ERR_NULL_POINTER);
    }
    unsafe { CStr::from_ptr(ptr) }.to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        POSETDYN_ERR_UTF8
    })
}

/// Last error message for this thread, or null. The returned string is owned
/// by the library and valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn posetdyn_last_error() -> *const c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(c) => c.as_ptr(),
        None => std::ptr::null(),
    })
}

/// Build a poset from a spec string (`chain:4`, `rect:2x3`, `W`, ...).
/// Returns null on error.
///
/// # Safety
/// `spec` must be a valid NUL-terminated string or null.
#[no_mangle]
pub unsafe extern "C" fn posetdyn_poset_build(spec: *const c_char) -> *mut PosetdynPoset {
    let Ok(spec) = (unsafe { cstr_arg(spec) }) else {
        return std::ptr::null_mut();
    };
    match parse_spec(spec) {
        Ok(p) => Box::into_raw(Box::new(PosetdynPoset { inner: Arc::new(p) })),
        Err(e) => {
            set_error(e.to_string());
            std::ptr::null_mut()
        }
    }
}

/// Parse a poset from its JSON interchange form. Returns null on error.
///
/// # Safety
/// `json` must be a valid NUL-terminated string or null.
#[no_mangle]
pub unsafe extern "C" fn posetdyn_poset_from_json(json: *const c_char) -> *mut PosetdynPoset {
    let Ok(json) = (unsafe { cstr_arg(json) }) else {
        return std::ptr::null_mut();
    };
    match parse_poset(json) {
        Ok(p) => Box::into_raw(Box::new(PosetdynPoset { inner: Arc::new(p) })),
        Err(e) => {
            set_error(e.to_string());
            std::ptr::null_mut()
        }
    }
}

/// Serialize a poset to JSON. Free the result with `posetdyn_string_free`.
///
/// # Safety
/// `p` must be a live handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn posetdyn_poset_to_json(p: *const PosetdynPoset) -> *mut c_char {
    if p.is_null() {
        set_error("null poset handle");
        return std::ptr::null_mut();
    }
    let text = serialize_poset(&unsafe { &*p }.inner);
    CString::new(text).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `p` must be a handle from this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn posetdyn_poset_free(p: *mut PosetdynPoset) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p) });
    }
}

/// # Safety
/// `s` must be a string returned by this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn posetdyn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Element count; 0 on a null handle.
///
/// # Safety
/// `p` must be a live handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn posetdyn_poset_n(p: *const PosetdynPoset) -> usize {
    if p.is_null() {
        return 0;
    }
    unsafe { &*p }.inner.n()
}

/// Length of the longest chain; -1 on a null handle.
///
/// # Safety
/// `p` must be a live handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn posetdyn_poset_rank(p: *const PosetdynPoset) -> i64 {
    if p.is_null() {
        return -1;
    }
    unsafe { &*p }.inner.rank() as i64
}

/// 1 when graded (rank-function convention), 0 when not, -1 on null.
///
/// # Safety
/// `p` must be a live handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn posetdyn_poset_is_graded(p: *const PosetdynPoset) -> c_int {
    if p.is_null() {
        return -1;
    }
    c_int::from(unsafe { &*p }.inner.is_graded())
}

unsafe fn labels_arg(labels: *const u32, len: usize, n: usize) -> Result<Vec<u16>, c_int> {
    if labels.is_null() {
        set_error("null labels pointer");
        return Err(POSETDYN_ERR_NULL_POINTER);
    }
    if len != n {
        set_error(format!("expected {n} labels, got {len}"));
        return Err(POSETDYN_ERR_INVALID_INPUT);
    }
    let slice = unsafe { std::slice::from_raw_parts(labels, len) };
    slice
        .iter()
        .map(|&l| {
            u16::try_from(l).map_err(|_| {
                set_error(format!("label {l} out of range"));
                POSETDYN_ERR_INVALID_INPUT
            })
        })
        .collect()
}

fn tableau_from(p: &PosetdynPoset, q: usize, labels: Vec<u16>) -> Result<IncreasingTableau, c_int> {
    IncreasingTableau::new(&p.inner, q, labels).map_err(|e| {
        let code = status_of(&e);
        set_error(e.to_string());
        code
    })
}

/// Apply `steps` K-promotions (negative = inverse) in place to `labels`
/// (u32 per element, length n, values 1..=q).
///
/// # Safety
/// `p` must be a live handle or null; `labels` must point to `len` readable
/// and writable u32 values or be null.
#[no_mangle]
pub unsafe extern "C" fn posetdyn_promote(
    p: *const PosetdynPoset,
    labels: *mut u32,
    len: usize,
    q: usize,
    steps: i64,
) -> c_int {
    if p.is_null() {
        set_error("null poset handle");
        return POSETDYN_ERR_NULL_POINTER;
    }
    let handle = unsafe { &*p };
    let owned = match unsafe { labels_arg(labels, len, handle.inner.n()) } {
        Ok(v) => v,
        Err(code) => return code,
    };
    let t = match tableau_from(handle, q, owned) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let result = k_promotion_power(&t, steps);
    let out = unsafe { std::slice::from_raw_parts_mut(labels, len) };
    for (dst, &src) in out.iter_mut().zip(result.labels()) {
        *dst = src as u32;
    }
    POSETDYN_OK
}

/// Orbit cardinality of a tableau under K-promotion.
///
/// # Safety
/// `p` must be a live handle or null; `labels` must point to `len` readable
/// u32 values or be null; `out_size` must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn posetdyn_promotion_orbit_size(
    p: *const PosetdynPoset,
    labels: *const u32,
    len: usize,
    q: usize,
    out_size: *mut u64,
) -> c_int {
    if p.is_null() || out_size.is_null() {
        set_error("null pointer argument");
        return POSETDYN_ERR_NULL_POINTER;
    }
    let handle = unsafe { &*p };
    let owned = match unsafe { labels_arg(labels, len, handle.inner.n()) } {
        Ok(v) => v,
        Err(code) => return code,
    };
    let t = match tableau_from(handle, q, owned) {
        Ok(t) => t,
        Err(code) => return code,
    };
    match promotion_orbit(&t, posetdyn::dynamics::DEFAULT_ORBIT_CAP, false) {
        Ok(orbit) => {
            unsafe { *out_size = orbit.cardinality };
            POSETDYN_OK
        }
        Err(e) => {
            let code = status_of(&e);
            set_error(e.to_string());
            code
        }
    }
}

/// Number of packed promotion orbits at height q (census orbit count).
///
/// # Safety
/// `p` must be a live handle or null; `out_count` must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn posetdyn_packed_orbit_count(
    p: *const PosetdynPoset,
    q: usize,
    out_count: *mut u64,
) -> c_int {
    if p.is_null() || out_count.is_null() {
        set_error("null pointer argument");
        return POSETDYN_ERR_NULL_POINTER;
    }
    let handle = unsafe { &*p };
    match promotion_census(&handle.inner, q, true, &CensusOptions::default()) {
        Ok(census) => {
            unsafe { *out_count = census.orbit_count() };
            POSETDYN_OK
        }
        Err(e) => {
            let code = status_of(&e);
            set_error(e.to_string());
            code
        }
    }
}

/// Decide NRP rowmotion. `out_is_nrp` gets 1 or 0.
///
/// # Safety
/// `p` must be a live handle or null; `out_is_nrp` must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn posetdyn_nrp_check(
    p: *const PosetdynPoset,
    out_is_nrp: *mut c_int,
) -> c_int {
    if p.is_null() || out_is_nrp.is_null() {
        set_error("null pointer argument");
        return POSETDYN_ERR_NULL_POINTER;
    }
    let handle = unsafe { &*p };
    match nrp_check(&handle.inner, &NrpOptions::default()) {
        Ok(verdict) => {
            unsafe { *out_is_nrp = c_int::from(verdict.is_nrp) };
            POSETDYN_OK
        }
        Err(interrupted) => {
            let e = Error::from(interrupted);
            let code = status_of(&e);
            set_error(e.to_string());
            code
        }
    }
}

/// NRP verdict as a JSON document (is_nrp, q range, witnesses).
/// Free with `posetdyn_string_free`; null on error.
///
/// # Safety
/// `p` must be a live handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn posetdyn_nrp_check_json(p: *const PosetdynPoset) -> *mut c_char {
    if p.is_null() {
        set_error("null poset handle");
        return std::ptr::null_mut();
    }
    let handle = unsafe { &*p };
    match nrp_check(&handle.inner, &NrpOptions::default()) {
        Ok(verdict) => {
            let witnesses: Vec<serde_json::Value> = verdict
                .witnesses
                .iter()
                .map(|w| {
                    serde_json::json!({
                        "q": w.q,
                        "orbit_size": w.orbit_size,
                        "tableau": serde_json::from_str::<serde_json::Value>(
                            &serialize_tableau(&w.representative)).expect("tableau json"),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "is_nrp": verdict.is_nrp,
                "q_range": [verdict.q_lo, verdict.q_hi],
                "vacuous": verdict.vacuous,
                "witnesses": witnesses,
            });
            CString::new(doc.to_string()).map_or(std::ptr::null_mut(), CString::into_raw)
        }
        Err(interrupted) => {
            set_error(Error::from(interrupted).to_string());
            std::ptr::null_mut()
        }
    }
}
