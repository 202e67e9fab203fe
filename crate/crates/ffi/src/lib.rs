//! C ABI for `patience-lab`.
//!
//! Permutations and pile configurations cross the boundary as opaque handles
//! owned by the caller and released with their `_free` function. Every
//! fallible call returns a [`PlStatus`]; on failure a description is available
//! from [`pl_last_error`] until the next failing call on the same thread.
//! Strings returned through `out` parameters are NUL terminated, owned by the
//! caller and released with [`pl_string_free`]. Indices are 0-based.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use patience_lab::crossings::crossing_free_all_iterates;
use patience_lab::perm::avoids_barred_3bar142;
use patience_lab::piles::{rpw, xps, xps_inverse};
use patience_lab::report::RunReport;
use patience_lab::rsk::rsk;
use patience_lab::shadow::{ne_iterates, sw_iterates};
use patience_lab::{Error, Permutation, PileConfig};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    NotAPermutation = 4,
    Malformed = 5,
    ShapeMismatch = 6,
    NoPreimage = 7,
    OutOfRange = 8,
    Panic = 9,
}

/// Opaque permutation handle.
pub struct PlPermutation(Permutation);

/// Opaque pile configuration handle (columns bottom to top).
pub struct PlPileConfig(PileConfig);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: PlStatus, message: impl Into<String>) -> PlStatus {
    let text = CString::new(message.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
    status
}

fn from_error(e: Error) -> PlStatus {
    let status = match e {
        Error::Parse(_) => PlStatus::Parse,
        Error::NotAPermutation { .. } | Error::DuplicateEntry(_) => PlStatus::NotAPermutation,
        Error::ShapeMismatch { .. } => PlStatus::ShapeMismatch,
        Error::NoPreimage => PlStatus::NoPreimage,
        _ => PlStatus::Malformed,
    };
    fail(status, e.to_string())
}

/// Runs `body`, turning panics into [`PlStatus::Panic`].
fn guard(body: impl FnOnce() -> Result<(), PlStatus>) -> PlStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => PlStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(PlStatus::Panic, "internal panic"),
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, PlStatus> {
    p.as_ref()
        .ok_or_else(|| fail(PlStatus::NullPointer, format!("{what} is null")))
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, PlStatus> {
    if s.is_null() {
        return Err(fail(PlStatus::NullPointer, "string is null"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| fail(PlStatus::InvalidUtf8, e.to_string()))
}

unsafe fn store<T>(out: *mut T, value: T) -> Result<(), PlStatus> {
    if out.is_null() {
        return Err(fail(PlStatus::NullPointer, "output pointer is null"));
    }
    out.write(value);
    Ok(())
}

unsafe fn store_string(out: *mut *mut c_char, s: String) -> Result<(), PlStatus> {
    let c = CString::new(s).map_err(|e| fail(PlStatus::Malformed, e.to_string()))?;
    store(out, c.into_raw())
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

fn to_json<T: serde::Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("library types serialize")
}

/// Message of the last failing call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses one-line notation: `"64518723"`, `"6 4 5 1"` or `"6,4,5,1"`.
///
/// # Safety
/// `text` must be NUL terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_permutation_parse(
    text: *const c_char,
    out: *mut *mut PlPermutation,
) -> PlStatus {
    guard(|| {
        let p: Permutation = c_str(text)?.parse().map_err(from_error)?;
        store(out, boxed(PlPermutation(p)))
    })
}

/// Builds a permutation from `len` values that must be exactly `1..=len`.
///
/// # Safety
/// `values` must point to `len` readable elements (or be NULL when `len` is 0).
#[no_mangle]
pub unsafe extern "C" fn pl_permutation_from_array(
    values: *const usize,
    len: usize,
    out: *mut *mut PlPermutation,
) -> PlStatus {
    guard(|| {
        let word = if len == 0 {
            Vec::new()
        } else {
            if values.is_null() {
                return Err(fail(PlStatus::NullPointer, "values is null"));
            }
            std::slice::from_raw_parts(values, len).to_vec()
        };
        let p = Permutation::new(word).map_err(from_error)?;
        store(out, boxed(PlPermutation(p)))
    })
}

/// Number of entries; 0 for NULL.
///
/// # Safety
/// `p` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn pl_permutation_len(p: *const PlPermutation) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Entry at 0-based `index`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_permutation_get(
    p: *const PlPermutation,
    index: usize,
    out: *mut usize,
) -> PlStatus {
    guard(|| {
        let p = borrow(p, "permutation")?;
        let v = *p.0.as_slice().get(index).ok_or_else(|| {
            fail(
                PlStatus::OutOfRange,
                format!("index {index} out of range for length {}", p.0.len()),
            )
        })?;
        store(out, v)
    })
}

/// Space separated one-line notation.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_permutation_to_string(
    p: *const PlPermutation,
    out: *mut *mut c_char,
) -> PlStatus {
    guard(|| store_string(out, borrow(p, "permutation")?.0.to_string()))
}

/// # Safety
/// `p` must come from this library and not have been freed; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn pl_permutation_free(p: *mut PlPermutation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Extended Patience Sorting: insertion piles `R` and recording piles `S`.
///
/// # Safety
/// `p` must be a live handle; `out_r` and `out_s` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_xps(
    p: *const PlPermutation,
    out_r: *mut *mut PlPileConfig,
    out_s: *mut *mut PlPileConfig,
) -> PlStatus {
    guard(|| {
        let p = borrow(p, "permutation")?;
        if out_r.is_null() || out_s.is_null() {
            return Err(fail(PlStatus::NullPointer, "output pointer is null"));
        }
        let (r, s) = xps(&p.0);
        store(out_r, boxed(PlPileConfig(r)))?;
        store(out_s, boxed(PlPileConfig(s)))
    })
}

/// The permutation sorted into `(r, s)`, or [`PlStatus::ShapeMismatch`] /
/// [`PlStatus::NoPreimage`].
///
/// # Safety
/// `r` and `s` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_xps_inverse(
    r: *const PlPileConfig,
    s: *const PlPileConfig,
    out: *mut *mut PlPermutation,
) -> PlStatus {
    guard(|| {
        let p = xps_inverse(&borrow(r, "r")?.0, &borrow(s, "s")?.0).map_err(from_error)?;
        store(out, boxed(PlPermutation(p)))
    })
}

/// Reverse patience word: columns left to right, each read bottom to top.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_rpw(r: *const PlPileConfig, out: *mut *mut PlPermutation) -> PlStatus {
    guard(|| store(out, boxed(PlPermutation(rpw(&borrow(r, "piles")?.0)))))
}

/// Parses `{"columns": [[...], ...]}`.
///
/// # Safety
/// `json` must be NUL terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_piles_from_json(
    json: *const c_char,
    out: *mut *mut PlPileConfig,
) -> PlStatus {
    guard(|| {
        let c: PileConfig = serde_json::from_str(c_str(json)?)
            .map_err(|e| fail(PlStatus::Malformed, e.to_string()))?;
        store(out, boxed(PlPileConfig(c)))
    })
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_piles_to_json(
    c: *const PlPileConfig,
    out: *mut *mut c_char,
) -> PlStatus {
    guard(|| store_string(out, to_json(&borrow(c, "piles")?.0)))
}

/// Number of piles; 0 for NULL.
///
/// # Safety
/// `c` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn pl_piles_count(c: *const PlPileConfig) -> usize {
    c.as_ref().map_or(0, |c| c.0.columns().len())
}

/// Height of pile `column`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_piles_column_len(
    c: *const PlPileConfig,
    column: usize,
    out: *mut usize,
) -> PlStatus {
    guard(|| {
        let c = borrow(c, "piles")?;
        let col = c.0.columns().get(column).ok_or_else(|| {
            fail(
                PlStatus::OutOfRange,
                format!(
                    "column {column} out of range for {} piles",
                    c.0.columns().len()
                ),
            )
        })?;
        store(out, col.len())
    })
}

/// Card at `index` (0 = bottom) of pile `column`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_piles_get(
    c: *const PlPileConfig,
    column: usize,
    index: usize,
    out: *mut usize,
) -> PlStatus {
    guard(|| {
        let c = borrow(c, "piles")?;
        let v =
            c.0.columns()
                .get(column)
                .and_then(|col| col.get(index))
                .ok_or_else(|| {
                    fail(
                        PlStatus::OutOfRange,
                        format!("no card at column {column}, index {index}"),
                    )
                })?;
        store(out, *v)
    })
}

/// Whether the configuration is the insertion piles of some permutation.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_piles_is_legal(c: *const PlPileConfig, out: *mut bool) -> PlStatus {
    guard(|| store(out, borrow(c, "piles")?.0.is_legal()))
}

/// # Safety
/// `c` must come from this library and not have been freed; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn pl_piles_free(c: *mut PlPileConfig) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Whether `p` avoids the barred pattern 3-1̄-42.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_avoids_3bar142(p: *const PlPermutation, out: *mut bool) -> PlStatus {
    guard(|| store(out, avoids_barred_3bar142(&borrow(p, "permutation")?.0)))
}

/// Whether every southwest shadow diagram iterate of `p` is free of crossings.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_crossing_free(p: *const PlPermutation, out: *mut bool) -> PlStatus {
    guard(|| {
        store(
            out,
            crossing_free_all_iterates(&borrow(p, "permutation")?.0),
        )
    })
}

/// `[{"rows": P}, {"rows": Q}]`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_rsk_json(p: *const PlPermutation, out: *mut *mut c_char) -> PlStatus {
    guard(|| store_string(out, to_json(&rsk(&borrow(p, "permutation")?.0))))
}

/// All southwest iterates as a JSON array of diagrams.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_sw_iterates_json(
    p: *const PlPermutation,
    out: *mut *mut c_char,
) -> PlStatus {
    guard(|| {
        store_string(
            out,
            to_json(sw_iterates(&borrow(p, "permutation")?.0).iterates()),
        )
    })
}

/// All northeast iterates as a JSON array of diagrams.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_ne_iterates_json(
    p: *const PlPermutation,
    out: *mut *mut c_char,
) -> PlStatus {
    guard(|| {
        store_string(
            out,
            to_json(ne_iterates(&borrow(p, "permutation")?.0).iterates()),
        )
    })
}

/// Piles, tableaux, reverse patience word and avoidance flag as one JSON
/// object, the same record `patience-lab run --format json` prints.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pl_run_json(p: *const PlPermutation, out: *mut *mut c_char) -> PlStatus {
    guard(|| store_string(out, to_json(&RunReport::of(&borrow(p, "permutation")?.0))))
}
