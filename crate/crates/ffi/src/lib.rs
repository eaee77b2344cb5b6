//! C ABI for the domdim toolkit.
//!
//! Algebras and endomorphism algebras are opaque handles created by
//! `dd_*_parse`/`dd_endo_*` and released with the matching `*_free`. Every
//! fallible function returns a [`DdStatus`]; on failure a message is
//! available from [`dd_last_error`] until the next failing call on the same
//! thread. Strings returned through `char **` belong to the caller and are
//! released with [`dd_string_free`]. All computations use rational
//! coefficients.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use domdim::endo::{build_endo, EndoAlgebra};
use domdim::engine::{Engine, Field};
use domdim::kupisch::{Interval, KupischSeries, ModuleList};
use domdim::propstar::{property_star_check, verify_all, SuiteOptions};
use domdim::ExtNat;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidModule = 4,
    Unsupported = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DdExtNatKind {
    Finite = 0,
    Infinity = 1,
    /// Lower bound from a truncated computation.
    AtLeast = 2,
}

/// A natural number, infinity, or a lower bound; `value` is meaningless
/// for `Infinity`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DdExtNat {
    pub kind: DdExtNatKind,
    pub value: u64,
}

impl From<ExtNat> for DdExtNat {
    fn from(x: ExtNat) -> Self {
        match x {
            ExtNat::Finite(v) => DdExtNat { kind: DdExtNatKind::Finite, value: v },
            ExtNat::Infinity => DdExtNat { kind: DdExtNatKind::Infinity, value: 0 },
            ExtNat::AtLeast(v) => DdExtNat { kind: DdExtNatKind::AtLeast, value: v },
        }
    }
}

/// Opaque handle to a validated Kupisch series.
pub struct DdKupisch(KupischSeries);

/// Opaque handle to an endomorphism algebra.
pub struct DdEndo(EndoAlgebra);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(DdStatus, String);

type Res<T> = Result<T, Failure>;

fn fail(status: DdStatus, msg: impl Into<String>) -> Failure {
    Failure(status, msg.into())
}

fn guard(f: impl FnOnce() -> Res<()>) -> DdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DdStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            DdStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Res<&'a str> {
    if p.is_null() {
        return Err(fail(DdStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(DdStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, name: &str) -> Res<&'a T> {
    p.as_ref().ok_or_else(|| fail(DdStatus::NullPointer, format!("{name} is null")))
}

unsafe fn write_out<T>(out: *mut T, value: T, name: &str) -> Res<()> {
    if out.is_null() {
        return Err(fail(DdStatus::NullPointer, format!("{name} is null")));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Res<()> {
    let c = CString::new(s).map_err(|_| fail(DdStatus::Internal, "string contains a nul byte"))?;
    write_out(out, c.into_raw(), "out")
}

/// Parses `"linear:3,3,3,2,1"` or `"cyclic:2,3"` into a new handle.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dd_kupisch_parse(text: *const c_char, out: *mut *mut DdKupisch) -> DdStatus {
    guard(|| {
        let s = str_arg(text, "text")?;
        let k: KupischSeries = s.parse().map_err(|e: domdim::kupisch::KupischError| fail(DdStatus::ParseError, e.to_string()))?;
        write_out(out, Box::into_raw(Box::new(DdKupisch(k))), "out")
    })
}

/// # Safety
/// `k` must be null or a handle from [`dd_kupisch_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dd_kupisch_free(k: *mut DdKupisch) {
    if !k.is_null() {
        drop(Box::from_raw(k));
    }
}

/// Number of simple modules and dimension of the algebra.
///
/// # Safety
/// `k` must be a live handle; `n` and `dim` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dd_kupisch_dims(k: *const DdKupisch, n: *mut usize, dim: *mut usize) -> DdStatus {
    guard(|| {
        let k = &handle(k, "k")?.0;
        write_out(n, k.n(), "n")?;
        write_out(dim, k.dim(), "dim")
    })
}

/// Dominant dimension, global dimension and Gorenstein dimension; any of
/// the out pointers may be null.
///
/// # Safety
/// `k` must be a live handle; non-null out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn dd_kupisch_invariants(
    k: *const DdKupisch,
    domdim: *mut DdExtNat,
    gldim: *mut DdExtNat,
    gorenstein_dim: *mut DdExtNat,
) -> DdStatus {
    guard(|| {
        let k = &handle(k, "k")?.0;
        if !domdim.is_null() {
            domdim.write(k.domdim_algebra().into());
        }
        if !gldim.is_null() {
            gldim.write(k.gldim().into());
        }
        if !gorenstein_dim.is_null() {
            gorenstein_dim.write(k.gorenstein().gorenstein_dim.into());
        }
        Ok(())
    })
}

fn interval(k: &KupischSeries, vertex: usize, len: usize) -> Res<Interval> {
    k.interval(vertex, len).map_err(|e| fail(DdStatus::InvalidModule, e.to_string()))
}

/// `dim Hom(M(i,k), M(j,l))`.
///
/// # Safety
/// `k` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dd_hom_dim(k: *const DdKupisch, i: usize, len_i: usize, j: usize, len_j: usize, out: *mut usize) -> DdStatus {
    guard(|| {
        let k = &handle(k, "k")?.0;
        let (x, y) = (interval(k, i, len_i)?, interval(k, j, len_j)?);
        write_out(out, k.hom_dim(&x, &y), "out")
    })
}

/// Dominant dimension of the endomorphism algebra of the canonical tilting
/// module, and whether it equals that of the algebra: 1 yes, 0 no, -1
/// undecided within the engine step cap.
///
/// # Safety
/// `k` must be a live handle; `endo_domdim` and `has` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dd_property_star(k: *const DdKupisch, endo_domdim: *mut DdExtNat, has: *mut i32) -> DdStatus {
    guard(|| {
        let k = &handle(k, "k")?.0;
        let r = property_star_check(k, Field::Rational).map_err(|e| fail(DdStatus::Unsupported, e.to_string()))?;
        write_out(endo_domdim, r.endo_domdim.into(), "endo_domdim")?;
        write_out(has, r.has_property_star.map_or(-1, i32::from), "has")
    })
}

/// Full verification report as JSON, for family members up to `m_max`.
/// `passed` receives 1 if every check passed.
///
/// # Safety
/// `out` and `passed` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dd_verify_json(m_max: usize, out: *mut *mut c_char, passed: *mut i32) -> DdStatus {
    guard(|| {
        if m_max == 0 {
            return Err(fail(DdStatus::Unsupported, "m_max must be at least 1"));
        }
        let r = verify_all(&SuiteOptions { m_max, ..SuiteOptions::default() });
        write_out(passed, i32::from(r.passed), "passed")?;
        write_string(out, serde_json::to_string(&r).map_err(|e| fail(DdStatus::Internal, e.to_string()))?)
    })
}

/// Endomorphism algebra of `eA + Omega^{-index}(A)`.
///
/// # Safety
/// `k` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dd_endo_tilting(k: *const DdKupisch, index: usize, out: *mut *mut DdEndo) -> DdStatus {
    guard(|| {
        let k = &handle(k, "k")?.0;
        let t = k.canonical_tilting(index).map_err(|e| fail(DdStatus::Unsupported, e.to_string()))?;
        let b = build_endo(k, &t, Field::Rational).map_err(|e| fail(DdStatus::Internal, e.to_string()))?;
        write_out(out, Box::into_raw(Box::new(DdEndo(b))), "out")
    })
}

/// Endomorphism algebra of the direct sum of the given modules, written as
/// `"M(0,3) M(1,2)"` (whitespace or `+` separated).
///
/// # Safety
/// `k` must be a live handle, `modules` a valid C string and `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn dd_endo_modules(k: *const DdKupisch, modules: *const c_char, out: *mut *mut DdEndo) -> DdStatus {
    guard(|| {
        let k = &handle(k, "k")?.0;
        let text = str_arg(modules, "modules")?;
        let list = text
            .split(|c: char| c.is_whitespace() || c == '+')
            .filter(|t| !t.is_empty())
            .map(|t| {
                let m: Interval = t.parse().map_err(|e: domdim::kupisch::KupischError| fail(DdStatus::ParseError, e.to_string()))?;
                interval(k, m.vertex, m.len)
            })
            .collect::<Res<Vec<_>>>()?;
        let b = build_endo(k, &ModuleList::new(list), Field::Rational).map_err(|e| fail(DdStatus::InvalidModule, e.to_string()))?;
        write_out(out, Box::into_raw(Box::new(DdEndo(b))), "out")
    })
}

/// # Safety
/// `e` must be null or a live endomorphism handle.
#[no_mangle]
pub unsafe extern "C" fn dd_endo_free(e: *mut DdEndo) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Dimension and number of vertices.
///
/// # Safety
/// `e` must be a live handle; `dim` and `vertices` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dd_endo_dims(e: *const DdEndo, dim: *mut usize, vertices: *mut usize) -> DdStatus {
    guard(|| {
        let e = &handle(e, "e")?.0;
        write_out(dim, e.dim(), "dim")?;
        write_out(vertices, e.summands().len(), "vertices")
    })
}

/// Dominant dimension computed by the linear-algebra engine; may be a lower
/// bound.
///
/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dd_endo_domdim(e: *const DdEndo, out: *mut DdExtNat) -> DdStatus {
    guard(|| {
        let e = &handle(e, "e")?.0;
        write_out(out, Engine::new(e.algebra().clone()).domdim_algebra().into(), "out")
    })
}

/// Structure constants, summands and basis labels as JSON.
///
/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dd_endo_json(e: *const DdEndo, out: *mut *mut c_char) -> DdStatus {
    guard(|| {
        let e = &handle(e, "e")?.0;
        write_string(out, serde_json::to_string(&e.to_json()).map_err(|e| fail(DdStatus::Internal, e.to_string()))?)
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread; empty if none. Valid until
/// the next failing call on this thread.
#[no_mangle]
pub extern "C" fn dd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn dd_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}
