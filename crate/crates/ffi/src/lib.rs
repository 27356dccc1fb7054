//! C ABI over `booldiff`.
//!
//! Values cross the boundary as opaque handles (`BdDigraph`, `BdMatrix`,
//! `BdFunction`) created by `*_parse` or by an operation and released with
//! the matching `*_free`. Every fallible call returns a [`BdStatus`] and
//! writes its result through an out-pointer; on failure the out-pointer is
//! left untouched and `bd_last_error` describes the problem. Strings
//! returned by the library are released with `bd_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use booldiff::{BasisId, BooleanFunction, Digraph, Dimension, Error, Gf2Matrix, Route};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BdStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Malformed text input.
    Parse = 2,
    /// Operands of different dimensions, or a shape that is not `2^n x 2^n`.
    Dimension = 3,
    /// `n` above a configured cap.
    Capacity = 4,
    /// An argument outside its domain, such as `n = 0` for a Jordan matrix.
    Domain = 5,
    /// Input text was not valid UTF-8.
    Utf8 = 6,
    /// An unexpected internal failure.
    Internal = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BdBasis {
    Ms = 0,
    Md = 1,
    Xs = 2,
    Xd = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BdRoute {
    Auto = 0,
    Direct = 1,
    Matrix = 2,
}

/// A digraph on `P[n]`.
pub struct BdDigraph(Digraph);

/// A square matrix over GF(2).
pub struct BdMatrix(Gf2Matrix);

/// A Boolean function on `n` variables.
pub struct BdFunction(BooleanFunction);

/// Image and kernel of an operator, as base-2 logarithms.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BdRankProfile {
    pub rank: usize,
    /// `log2 |image|`, equal to `rank`.
    pub image_log2: usize,
    /// `log2 |kernel|`, equal to `2^n - rank`.
    pub kernel_log2: usize,
}

impl From<BdBasis> for BasisId {
    fn from(b: BdBasis) -> Self {
        match b {
            BdBasis::Ms => BasisId::MS,
            BdBasis::Md => BasisId::MD,
            BdBasis::Xs => BasisId::XS,
            BdBasis::Xd => BasisId::XD,
        }
    }
}

impl From<BdRoute> for Route {
    fn from(r: BdRoute) -> Self {
        match r {
            BdRoute::Auto => Route::Auto,
            BdRoute::Direct => Route::Direct,
            BdRoute::Matrix => Route::Matrix,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(BdStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => BdStatus::Parse,
            Error::Dimension(_) => BdStatus::Dimension,
            Error::Capacity { .. } => BdStatus::Capacity,
            Error::Domain(_) => BdStatus::Domain,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

/// Runs `body`, storing its value through `out` on success.
fn guarded<T>(out: *mut T, body: impl FnOnce() -> Result<T, Failure>) -> BdStatus {
    if out.is_null() {
        set_last_error("null output pointer");
        return BdStatus::NullPointer;
    }
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(value)) => {
            // SAFETY: `out` is non-null and the caller guarantees it is writable.
            unsafe { out.write(value) };
            set_last_error("");
            BdStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal error");
            BdStatus::Internal
        }
    }
}

/// # Safety
/// `p` is null or points to a live `T` for the duration of the call.
unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(BdStatus::NullPointer, format!("null {what}")))
}

/// # Safety
/// `p` is null or a NUL-terminated string.
unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(BdStatus::NullPointer, "null text".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(BdStatus::Utf8, e.to_string()))
}

fn c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(BdStatus::Internal, "output contains a NUL byte".into()))
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// Message for the most recent failed call on this thread, or `""`.
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn bd_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the digraph text format (`n`, then one `<c> <d>` edge per line).
///
/// # Safety
/// `src` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bd_digraph_parse(
    src: *const c_char,
    n_max: u32,
    out: *mut *mut BdDigraph,
) -> BdStatus {
    guarded(out, || {
        let g = Digraph::parse(text(src)?, n_max)?;
        Ok(boxed(BdDigraph(g)))
    })
}

/// # Safety
/// `g` is null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn bd_digraph_free(g: *mut BdDigraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Canonical text form, released with `bd_string_free`.
///
/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bd_digraph_to_string(
    g: *const BdDigraph,
    out: *mut *mut c_char,
) -> BdStatus {
    guarded(out, || c_string(borrow(g, "digraph")?.0.to_text()))
}

/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bd_digraph_dimension(g: *const BdDigraph, out: *mut u32) -> BdStatus {
    guarded(out, || Ok(borrow(g, "digraph")?.0.dim().n()))
}

/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bd_digraph_edge_count(g: *const BdDigraph, out: *mut usize) -> BdStatus {
    guarded(out, || Ok(borrow(g, "digraph")?.0.edge_count()))
}

/// Product of `a` and `b` in `basis` (★, ∘, ∗ or • for MS, MD, XS, XD).
///
/// # Safety
/// `a` and `b` are live handles; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bd_product(
    a: *const BdDigraph,
    b: *const BdDigraph,
    basis: BdBasis,
    route: BdRoute,
    out: *mut *mut BdDigraph,
) -> BdStatus {
    guarded(out, || {
        let (a, b) = (borrow(a, "left digraph")?, borrow(b, "right digraph")?);
        let p = booldiff::product(&a.0, &b.0, basis.into(), route.into())?;
        Ok(boxed(BdDigraph(p)))
    })
}

/// Rewrites `a` from basis `from` to basis `to`.
///
/// # Safety
/// `a` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bd_convert(
    a: *const BdDigraph,
    from: BdBasis,
    to: BdBasis,
    out: *mut *mut BdDigraph,
) -> BdStatus {
    guarded(out, || {
        let a = borrow(a, "digraph")?;
        let g = booldiff::change_operator_basis(&a.0, from.into(), to.into());
        Ok(boxed(BdDigraph(g)))
    })
}

/// Card-lex indexed matrix of the operator `a` names in `basis`.
///
/// # Safety
/// `a` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bd_matrix(
    a: *const BdDigraph,
    basis: BdBasis,
    out: *mut *mut BdMatrix,
) -> BdStatus {
    guarded(out, || {
        let a = borrow(a, "digraph")?;
        Ok(boxed(BdMatrix(booldiff::operator_matrix(
            &a.0,
            basis.into(),
        ))))
    })
}

/// Digraph, in `basis`, of a `2^n x 2^n` matrix.
///
/// # Safety
/// `m` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bd_digraph_from_matrix(
    m: *const BdMatrix,
    basis: BdBasis,
    out: *mut *mut BdDigraph,
) -> BdStatus {
    guarded(out, || {
        let m = borrow(m, "matrix")?;
        Ok(boxed(BdDigraph(booldiff::operator_digraph(
            &m.0,
            basis.into(),
        )?)))
    })
}

/// Parses the matrix text format (`rows cols`, then one 0/1 row per line).
///
/// # Safety
/// `src` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bd_matrix_parse(src: *const c_char, out: *mut *mut BdMatrix) -> BdStatus {
    guarded(out, || Ok(boxed(BdMatrix(Gf2Matrix::parse(text(src)?)?))))
}

/// # Safety
/// `m` is null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn bd_matrix_free(m: *mut BdMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bd_matrix_to_string(
    m: *const BdMatrix,
    out: *mut *mut c_char,
) -> BdStatus {
    guarded(out, || c_string(borrow(m, "matrix")?.0.to_text()))
}

/// # Safety
/// `m` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bd_matrix_rank(m: *const BdMatrix, out: *mut usize) -> BdStatus {
    guarded(out, || Ok(borrow(m, "matrix")?.0.rank()))
}

/// Parses the function text format (`n`, then `2^n` card-lex 0/1 values).
///
/// # Safety
/// `src` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bd_function_parse(
    src: *const c_char,
    n_max: u32,
    out: *mut *mut BdFunction,
) -> BdStatus {
    guarded(out, || {
        Ok(boxed(BdFunction(BooleanFunction::parse(
            text(src)?,
            n_max,
        )?)))
    })
}

/// # Safety
/// `f` is null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn bd_function_free(f: *mut BdFunction) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// # Safety
/// `f` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bd_function_to_string(
    f: *const BdFunction,
    out: *mut *mut c_char,
) -> BdStatus {
    guarded(out, || c_string(borrow(f, "function")?.0.to_text()))
}

/// Applies the operator `a` names in `basis` to `f`.
///
/// # Safety
/// `a` and `f` are live handles; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bd_apply(
    a: *const BdDigraph,
    basis: BdBasis,
    f: *const BdFunction,
    out: *mut *mut BdFunction,
) -> BdStatus {
    guarded(out, || {
        let (a, f) = (borrow(a, "digraph")?, borrow(f, "function")?);
        Ok(boxed(BdFunction(booldiff::apply_operator(
            &a.0,
            basis.into(),
            &f.0,
        )?)))
    })
}

/// Rank of the operator, with image and kernel sizes as powers of two.
///
/// # Safety
/// `a` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bd_rank(
    a: *const BdDigraph,
    basis: BdBasis,
    out: *mut BdRankProfile,
) -> BdStatus {
    guarded(out, || {
        let p = booldiff::operator_rank_profile(&borrow(a, "digraph")?.0, basis.into());
        Ok(BdRankProfile {
            rank: p.rank,
            image_log2: p.image_log2(),
            kernel_log2: p.kernel_log2(),
        })
    })
}

/// The operator as a sum of basis terms, e.g. `m^{}s^{1} + 1`.
///
/// # Safety
/// `a` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bd_format(
    a: *const BdDigraph,
    basis: BdBasis,
    out: *mut *mut c_char,
) -> BdStatus {
    guarded(out, || {
        let a = borrow(a, "digraph")?;
        c_string(booldiff::format_operator(&a.0, basis.into()).to_string())
    })
}

/// Digraph of the `2^n x 2^n` Jordan-like matrix in `basis`, `n >= 1`.
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn bd_jordan(n: u32, basis: BdBasis, out: *mut *mut BdDigraph) -> BdStatus {
    guarded(out, || {
        let dim = Dimension::new(n)?;
        Ok(boxed(BdDigraph(booldiff::jordan_digraph(
            dim,
            basis.into(),
        )?)))
    })
}
