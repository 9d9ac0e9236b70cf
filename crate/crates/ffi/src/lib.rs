//! C ABI for the orbcoh library.
//!
//! Groups and rings are exposed as opaque handles that the caller frees with
//! the matching `*_free` function. Every fallible call returns an
//! [`OrbStatus`]; on failure a human-readable message is available from
//! [`orb_last_error_message`] on the same thread. Strings returned through
//! out-parameters are NUL-terminated UTF-8 and must be released with
//! [`orb_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use num::ToPrimitive;
use orbcoh::group::FiniteMatrixGroup;
use orbcoh::orbicurve::{Mark, OrbiBundleData};
use orbcoh::ring::GradedRing;
use orbcoh::{catalog, io, models, orbicurve, ring, sectors, Error};
use serde_json::Value;

/// Result codes; the numeric values of the first five match the CLI exit
/// codes.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum OrbStatus {
    Ok = 0,
    Parse = 1,
    Validation = 2,
    CapExceeded = 3,
    VerifyFailed = 4,
    NullPointer = 5,
    InvalidUtf8 = 6,
    Panic = 7,
}

/// Opaque handle to an enumerated finite matrix group.
pub struct OrbGroup {
    inner: FiniteMatrixGroup,
}

/// Opaque handle to a graded ring with exact structure constants.
pub struct OrbRing {
    inner: GradedRing,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> OrbStatus {
    match e.exit_code() {
        1 => OrbStatus::Parse,
        3 => OrbStatus::CapExceeded,
        _ => OrbStatus::Validation,
    }
}

/// Run `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (OrbStatus, String)>) -> OrbStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OrbStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            OrbStatus::Panic
        }
    }
}

fn lib<T>(r: orbcoh::Result<T>) -> Result<T, (OrbStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (OrbStatus, String) {
    (OrbStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (OrbStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (OrbStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn write_json(out: *mut *mut c_char, v: &Value) -> Result<(), (OrbStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let text = serde_json::to_string(v).expect("JSON values serialize");
    *out = CString::new(text).expect("JSON has no NUL bytes").into_raw();
    Ok(())
}

unsafe fn group_ref<'a>(g: *const OrbGroup) -> Result<&'a FiniteMatrixGroup, (OrbStatus, String)> {
    g.as_ref().map(|g| &g.inner).ok_or_else(|| null("group handle"))
}

unsafe fn ring_ref<'a>(r: *const OrbRing) -> Result<&'a GradedRing, (OrbStatus, String)> {
    r.as_ref().map(|r| &r.inner).ok_or_else(|| null("ring handle"))
}

unsafe fn store<T>(out: *mut *mut T, value: T) -> Result<(), (OrbStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// Message for the most recent failure on this thread, or "" after a
/// success. The pointer stays valid until the next call into this library
/// on the same thread.
#[no_mangle]
pub extern "C" fn orb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn orb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a group file and close the generators, producing at most `cap`
/// elements (0 selects the default cap).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orb_group_from_json(json: *const c_char, cap: usize, out: *mut *mut OrbGroup) -> OrbStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        let cap = if cap == 0 { orbcoh::group::DEFAULT_CLOSURE_CAP } else { cap };
        let g = lib(io::parse_group_json(text).and_then(|s| s.generate(cap)))?;
        store(out, OrbGroup { inner: g })
    })
}

/// Load a built-in catalog group by name (for example "q8" or "s3").
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orb_group_from_catalog(name: *const c_char, out: *mut *mut OrbGroup) -> OrbStatus {
    guard(|| {
        let g = lib(catalog::group(read_str(name, "name")?))?;
        store(out, OrbGroup { inner: g })
    })
}

/// # Safety
/// `g` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn orb_group_free(g: *mut OrbGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// |G|, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live group handle.
#[no_mangle]
pub unsafe extern "C" fn orb_group_order(g: *const OrbGroup) -> usize {
    g.as_ref().map_or(0, |g| g.inner.order())
}

/// Dimension n of the representation, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live group handle.
#[no_mangle]
pub unsafe extern "C" fn orb_group_dimension(g: *const OrbGroup) -> usize {
    g.as_ref().map_or(0, |g| g.inner.dim())
}

/// Number of conjugacy classes, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live group handle.
#[no_mangle]
pub unsafe extern "C" fn orb_group_class_count(g: *const OrbGroup) -> usize {
    g.as_ref().map_or(0, |g| g.inner.conjugacy_classes().len())
}

/// True when every element has determinant 1.
///
/// # Safety
/// `g` must be null or a live group handle.
#[no_mangle]
pub unsafe extern "C" fn orb_group_is_sl(g: *const OrbGroup) -> bool {
    g.as_ref().is_some_and(|g| g.inner.is_sl())
}

/// Sector table as JSON.
///
/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orb_sectors_json(g: *const OrbGroup, out: *mut *mut c_char) -> OrbStatus {
    guard(|| {
        let g = group_ref(g)?;
        let table = lib(sectors::sector_table(g))?;
        write_json(out, &io::sector_table_to_json(g, &table))
    })
}

/// Cohomology of the point quotient pt/G as JSON.
///
/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orb_cohomology_point_json(g: *const OrbGroup, out: *mut *mut c_char) -> OrbStatus {
    guard(|| write_json(out, &io::table_to_json(&models::cohomology_point(group_ref(g)?))))
}

/// Orbifold Hodge numbers of C^n/G as JSON.
///
/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orb_hodge_linear_json(g: *const OrbGroup, out: *mut *mut c_char) -> OrbStatus {
    guard(|| {
        let t = lib(models::hodge_linear(group_ref(g)?))?;
        write_json(out, &io::table_to_json(&t))
    })
}

/// Orbifold Betti numbers of a torus quotient given as a torus file.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orb_torus_betti_json(json: *const c_char, cap: usize, out: *mut *mut c_char) -> OrbStatus {
    guard(|| {
        let model = lib(io::parse_torus_json(read_str(json, "json")?))?;
        let cap = if cap == 0 { orbcoh::group::DEFAULT_CLOSURE_CAP } else { cap };
        let t = lib(models::betti_torus(&model, cap))?;
        write_json(out, &io::table_to_json(&t))
    })
}

/// Orbifold Betti numbers of the weighted projective line WP(d1, d2).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orb_catalog_wp_json(d1: u64, d2: u64, out: *mut *mut c_char) -> OrbStatus {
    guard(|| write_json(out, &io::table_to_json(&lib(models::catalog_wp(d1, d2))?)))
}

/// Writes h^{1,1} and h^{2,1} of the Borcea–Voisin threefold for (r, a, delta).
///
/// # Safety
/// `h11` and `h21` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orb_catalog_bv(r: i64, a: i64, delta: i64, h11: *mut u64, h21: *mut u64) -> OrbStatus {
    guard(|| {
        if h11.is_null() || h21.is_null() {
            return Err(null("output pointer"));
        }
        let bv = lib(models::catalog_bv(r, a, delta))?;
        *h11 = bv.h11;
        *h21 = bv.h21;
        Ok(())
    })
}

/// Cohomology ring of pt/G.
///
/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orb_ring_point(g: *const OrbGroup, out: *mut *mut OrbRing) -> OrbStatus {
    guard(|| {
        let r = lib(ring::ring_point(group_ref(g)?))?;
        store(out, OrbRing { inner: r })
    })
}

/// Cup-product ring of C^n/G for G ⊂ SL(n).
///
/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orb_ring_linear(g: *const OrbGroup, out: *mut *mut OrbRing) -> OrbStatus {
    guard(|| {
        let r = lib(ring::ring_linear(group_ref(g)?))?;
        store(out, OrbRing { inner: r })
    })
}

/// Orbifold cohomology ring of WP(d1, d2).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orb_ring_wp(d1: u64, d2: u64, out: *mut *mut OrbRing) -> OrbStatus {
    guard(|| store(out, OrbRing { inner: lib(ring::ring_wp(d1, d2))? }))
}

/// # Safety
/// `r` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn orb_ring_free(r: *mut OrbRing) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Number of basis elements, or 0 for a null handle.
///
/// # Safety
/// `r` must be null or a live ring handle.
#[no_mangle]
pub unsafe extern "C" fn orb_ring_dim(r: *const OrbRing) -> usize {
    r.as_ref().map_or(0, |r| r.inner.dim())
}

/// Ring as JSON: basis labels, degrees, sparse [i, j, k, "p/q"] products
/// and the pairing matrix (null when undefined).
///
/// # Safety
/// `r` must be a live ring handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orb_ring_to_json(r: *const OrbRing, out: *mut *mut c_char) -> OrbStatus {
    guard(|| write_json(out, &ring::ring_to_json(ring_ref(r)?)))
}

/// Check the ring axioms. Returns `VerifyFailed` when a check fails; the
/// first counterexample is then available from [`orb_last_error_message`].
/// If `report` is non-null it receives the full report as JSON.
///
/// # Safety
/// `r` must be a live ring handle; `report` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn orb_ring_verify(r: *const OrbRing, report: *mut *mut c_char) -> OrbStatus {
    guard(|| {
        let rep = ring::verify_ring(ring_ref(r)?);
        if !report.is_null() {
            write_json(report, &rep.to_json())?;
        }
        match rep.checks.iter().find(|c| !c.passed) {
            None => Ok(()),
            Some(c) => Err((
                OrbStatus::VerifyFailed,
                format!("{}: {}", c.name, c.counterexample.as_deref().unwrap_or("failed")),
            )),
        }
    })
}

/// Euler characteristic of a rank-`rank` bundle over a genus-`genus`
/// 2-orbifold. `marks` holds `n_marks` strings "m:e1,…,en"; `c` is the
/// first Chern number as "p/q".
///
/// # Safety
/// `marks` must point to `n_marks` NUL-terminated strings (or be null when
/// `n_marks` is 0); `c` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orb_orbicurve_chi(
    genus: u64,
    rank: usize,
    marks: *const *const c_char,
    n_marks: usize,
    c: *const c_char,
    out: *mut i64,
) -> OrbStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        if marks.is_null() && n_marks > 0 {
            return Err(null("marks"));
        }
        let mut parsed = Vec::with_capacity(n_marks);
        for i in 0..n_marks {
            let s = read_str(*marks.add(i), "mark")?;
            parsed.push(lib(s.parse::<Mark>())?);
        }
        let data = lib(OrbiBundleData::new(genus, rank, parsed, read_str(c, "c")?))?;
        let chi = lib(orbicurve::euler_characteristic(&data))?;
        *out = chi
            .to_i64()
            .ok_or_else(|| (OrbStatus::Validation, format!("chi = {chi} does not fit in int64")))?;
        Ok(())
    })
}
