//! C interface to peakalg.
//!
//! Objects cross the boundary as opaque handles that the caller frees with
//! the matching `*_free` function. Every fallible call returns one of the
//! `PEAKALG_*` codes and writes its result through an out pointer; strings
//! returned to C are owned by the caller and released with
//! [`peakalg_string_free`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use peakalg::exactmath::Rational;
use peakalg::mrbsym::bsym_idempotents;
use peakalg::peakcli::expr::{parse_expansion, s_token};
use peakalg::peakcli::render::ElementJson;
use peakalg::peakcore::{peak_idempotents, solve_zeta_r};
use peakalg::reptheory::{peak_cartan, CartanMatrix};
use peakalg::symcore::{internal_product, type_a_idempotents, zassenhaus, Elem};

pub const PEAKALG_OK: i32 = 0;
pub const PEAKALG_ERR_NULL: i32 = 1;
pub const PEAKALG_ERR_ARGUMENT: i32 = 2;
pub const PEAKALG_ERR_RANGE: i32 = 3;
pub const PEAKALG_ERR_ALGEBRA: i32 = 4;
pub const PEAKALG_ERR_PANIC: i32 = 5;

pub const PEAKALG_FAMILY_A: i32 = 0;
pub const PEAKALG_FAMILY_B: i32 = 1;
pub const PEAKALG_FAMILY_PEAK: i32 = 2;

/// An element of the descent algebra over Q, in the S basis.
pub struct PeakalgElement(Elem<Rational>);

/// A list of labelled elements, such as a system of idempotents.
pub struct PeakalgSystem(Vec<(String, Elem<Rational>)>);

/// A q-Cartan matrix with integer polynomial entries.
pub struct PeakalgCartan(CartanMatrix);

fn guard(f: impl FnOnce() -> i32) -> i32 {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(PEAKALG_ERR_PANIC)
}

unsafe fn put<T>(out: *mut *mut T, v: T) {
    *out = Box::into_raw(Box::new(v));
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> i32 {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            PEAKALG_OK
        }
        Err(_) => PEAKALG_ERR_ARGUMENT,
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn peakalg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn peakalg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an expansion in the S basis such as `S3 - S21 + 1/3 S111` of
/// weight `n` (one digit per part).
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn peakalg_element_parse(text: *const c_char, n: u32, out: *mut *mut PeakalgElement) -> i32 {
    if text.is_null() || out.is_null() {
        return PEAKALG_ERR_NULL;
    }
    guard(|| {
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return PEAKALG_ERR_ARGUMENT;
        };
        match parse_expansion(s, n as usize, |t| s_token(t).map(|p| Elem::s_word(&p))) {
            Ok(e) => {
                put(out, PeakalgElement(e));
                PEAKALG_OK
            }
            Err(_) => PEAKALG_ERR_ARGUMENT,
        }
    })
}

/// The Lie idempotent ζ_n (`r == 0`) or its level-r analogue ζ^(r)_n.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn peakalg_zeta(n: u32, r: u32, out: *mut *mut PeakalgElement) -> i32 {
    if out.is_null() {
        return PEAKALG_ERR_NULL;
    }
    if n == 0 || r == 1 {
        return PEAKALG_ERR_ARGUMENT;
    }
    guard(|| {
        let n = n as usize;
        let e = match r {
            0 => zassenhaus(n)[n].clone(),
            r => solve_zeta_r(n, r as usize)[n].clone(),
        };
        put(out, PeakalgElement(e));
        PEAKALG_OK
    })
}

/// Internal product `a ∗ b`.
///
/// # Safety
/// `a` and `b` must be live element handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn peakalg_element_product(
    a: *const PeakalgElement,
    b: *const PeakalgElement,
    out: *mut *mut PeakalgElement,
) -> i32 {
    if a.is_null() || b.is_null() || out.is_null() {
        return PEAKALG_ERR_NULL;
    }
    guard(|| match internal_product(&(&*a).0, &(&*b).0) {
        Ok(e) => {
            put(out, PeakalgElement(e));
            PEAKALG_OK
        }
        Err(_) => PEAKALG_ERR_ALGEBRA,
    })
}

/// Writes 1 to `out` if the two elements are equal, 0 otherwise.
///
/// # Safety
/// `a` and `b` must be live element handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn peakalg_element_equal(a: *const PeakalgElement, b: *const PeakalgElement, out: *mut i32) -> i32 {
    if a.is_null() || b.is_null() || out.is_null() {
        return PEAKALG_ERR_NULL;
    }
    *out = i32::from((&*a).0 == (&*b).0);
    PEAKALG_OK
}

/// Number of S-basis terms with nonzero coefficient.
///
/// # Safety
/// `e` must be a live element handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn peakalg_element_len(e: *const PeakalgElement, out: *mut usize) -> i32 {
    if e.is_null() || out.is_null() {
        return PEAKALG_ERR_NULL;
    }
    *out = (&*e).0.len();
    PEAKALG_OK
}

/// The element as JSON: `{"weight", "field", "terms": [{"label", "coeff"}]}`.
///
/// # Safety
/// `e` must be a live element handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn peakalg_element_to_json(e: *const PeakalgElement, out: *mut *mut c_char) -> i32 {
    if e.is_null() || out.is_null() {
        return PEAKALG_ERR_NULL;
    }
    guard(|| match serde_json::to_string(&ElementJson::new(&(&*e).0)) {
        Ok(s) => put_string(out, s),
        Err(_) => PEAKALG_ERR_ALGEBRA,
    })
}

/// # Safety
/// `e` must be null or an element handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn peakalg_element_free(e: *mut PeakalgElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// The complete system of orthogonal idempotents of a family: type A
/// (`r` ignored), type B (`r` ignored) or the r-peak algebra.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn peakalg_idempotents(family: i32, n: u32, r: u32, out: *mut *mut PeakalgSystem) -> i32 {
    if out.is_null() {
        return PEAKALG_ERR_NULL;
    }
    if n == 0 || (family == PEAKALG_FAMILY_PEAK && r < 2) {
        return PEAKALG_ERR_ARGUMENT;
    }
    guard(|| {
        let n = n as usize;
        let sys = match family {
            PEAKALG_FAMILY_A => type_a_idempotents(n),
            PEAKALG_FAMILY_B => bsym_idempotents(n),
            PEAKALG_FAMILY_PEAK => peak_idempotents(n, r as usize),
            _ => return PEAKALG_ERR_ARGUMENT,
        };
        match sys {
            Ok(sys) => {
                put(out, PeakalgSystem(sys.into_iter().map(|(l, e)| (l.to_string(), e)).collect()));
                PEAKALG_OK
            }
            Err(_) => PEAKALG_ERR_ALGEBRA,
        }
    })
}

/// # Safety
/// `s` must be a live system handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn peakalg_system_len(s: *const PeakalgSystem, out: *mut usize) -> i32 {
    if s.is_null() || out.is_null() {
        return PEAKALG_ERR_NULL;
    }
    *out = (&*s).0.len();
    PEAKALG_OK
}

/// Label of member `i`, e.g. `0;2,1`.
///
/// # Safety
/// `s` must be a live system handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn peakalg_system_label(s: *const PeakalgSystem, i: usize, out: *mut *mut c_char) -> i32 {
    if s.is_null() || out.is_null() {
        return PEAKALG_ERR_NULL;
    }
    match (&*s).0.get(i) {
        Some((l, _)) => put_string(out, l.clone()),
        None => PEAKALG_ERR_RANGE,
    }
}

/// Copy of member `i` as a new element handle.
///
/// # Safety
/// `s` must be a live system handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn peakalg_system_get(s: *const PeakalgSystem, i: usize, out: *mut *mut PeakalgElement) -> i32 {
    if s.is_null() || out.is_null() {
        return PEAKALG_ERR_NULL;
    }
    match (&*s).0.get(i) {
        Some((_, e)) => {
            put(out, PeakalgElement(e.clone()));
            PEAKALG_OK
        }
        None => PEAKALG_ERR_RANGE,
    }
}

/// # Safety
/// `s` must be null or a system handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn peakalg_system_free(s: *mut PeakalgSystem) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// q-Cartan matrix of the r-peak algebra of weight n.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn peakalg_cartan_new(n: u32, r: u32, out: *mut *mut PeakalgCartan) -> i32 {
    if out.is_null() {
        return PEAKALG_ERR_NULL;
    }
    if n == 0 || r < 2 {
        return PEAKALG_ERR_ARGUMENT;
    }
    guard(|| match peak_cartan(n as usize, r as usize) {
        Ok((_, data)) => {
            put(out, PeakalgCartan(data.matrix()));
            PEAKALG_OK
        }
        Err(_) => PEAKALG_ERR_ALGEBRA,
    })
}

/// # Safety
/// `c` must be a live matrix handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn peakalg_cartan_size(c: *const PeakalgCartan, out: *mut usize) -> i32 {
    if c.is_null() || out.is_null() {
        return PEAKALG_ERR_NULL;
    }
    *out = (&*c).0.size();
    PEAKALG_OK
}

/// Label of row and column `i`.
///
/// # Safety
/// `c` must be a live matrix handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn peakalg_cartan_label(c: *const PeakalgCartan, i: usize, out: *mut *mut c_char) -> i32 {
    if c.is_null() || out.is_null() {
        return PEAKALG_ERR_NULL;
    }
    match (&*c).0.labels.get(i) {
        Some(l) => put_string(out, l.to_string()),
        None => PEAKALG_ERR_RANGE,
    }
}

/// Coefficients of entry (i, j) in increasing degree. The number of
/// coefficients is written to `len` (0 for a zero entry); at most `cap` are
/// copied into `coeffs`, which may be null when `cap` is 0. Returns
/// `PEAKALG_ERR_RANGE` if `cap` is too small, after setting `len`.
///
/// # Safety
/// `c` must be a live matrix handle, `len` writable and `coeffs` valid for
/// `cap` writes.
#[no_mangle]
pub unsafe extern "C" fn peakalg_cartan_entry(
    c: *const PeakalgCartan,
    i: usize,
    j: usize,
    coeffs: *mut i64,
    cap: usize,
    len: *mut usize,
) -> i32 {
    if c.is_null() || len.is_null() || (coeffs.is_null() && cap > 0) {
        return PEAKALG_ERR_NULL;
    }
    let Some(p) = (&*c).0.entries.get(i).and_then(|row| row.get(j)) else {
        return PEAKALG_ERR_RANGE;
    };
    let mut p = p.0.as_slice();
    while let [rest @ .., 0] = p {
        p = rest;
    }
    *len = p.len();
    if p.len() > cap {
        return PEAKALG_ERR_RANGE;
    }
    if !p.is_empty() {
        ptr::copy_nonoverlapping(p.as_ptr(), coeffs, p.len());
    }
    PEAKALG_OK
}

/// Entry (i, j) evaluated at q = 1.
///
/// # Safety
/// `c` must be a live matrix handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn peakalg_cartan_at_one(c: *const PeakalgCartan, i: usize, j: usize, out: *mut i64) -> i32 {
    if c.is_null() || out.is_null() {
        return PEAKALG_ERR_NULL;
    }
    match (&*c).0.entries.get(i).and_then(|row| row.get(j)) {
        Some(p) => {
            *out = p.at_one();
            PEAKALG_OK
        }
        None => PEAKALG_ERR_RANGE,
    }
}

/// # Safety
/// `c` must be null or a matrix handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn peakalg_cartan_free(c: *mut PeakalgCartan) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}
