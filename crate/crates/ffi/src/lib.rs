//! C ABI over `qblocks`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free`. Every fallible call returns a
//! [`QbStatus`]; on failure, [`qb_last_error`] describes the error for the
//! calling thread. Strings returned through `char **` must be released with
//! [`qb_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qblocks::abacus::{e_core, e_quotient, e_weight};
use qblocks::blocks::{is_block, is_core_block, Limits, Multicharge};
use qblocks::bounds::{n_bounds, n_closed_form, n_exact, BoundLimits, Strategy};
use qblocks::partition::residue_counts;
use qblocks::shift::{sigma_block, sigma_partition, ShiftParam};
use qblocks::verify::{self, Config, Suite};
use qblocks::{BlockVector, Error, ErrorKind, Modulus, Partition};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QbStatus {
    Ok = 0,
    /// The input is well formed but violates a mathematical precondition.
    Domain = 1,
    /// Malformed input: a literal failed to parse or an argument is out of range.
    Usage = 2,
    /// A resource guard refused the computation.
    Resource = 3,
    /// A required pointer was null.
    NullPointer = 4,
    /// An internal panic was caught at the boundary.
    Internal = 5,
}

/// A partition.
pub struct QbPartition(Partition);

/// An element of the lattice `Q` for a fixed modulus.
pub struct QbBlock(BlockVector);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(err: &Error) -> QbStatus {
    match err.kind() {
        ErrorKind::Domain => QbStatus::Domain,
        ErrorKind::Usage => QbStatus::Usage,
        ErrorKind::Resource => QbStatus::Resource,
    }
}

enum Fail {
    Lib(Error),
    Null(&'static str),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

/// Runs `f`, recording errors and catching panics.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> QbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            QbStatus::Ok
        }
        Ok(Err(Fail::Lib(err))) => {
            set_error(err.to_string());
            status_of(&err)
        }
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            QbStatus::NullPointer
        }
        Err(_) => {
            set_error("internal panic");
            QbStatus::Internal
        }
    }
}

unsafe fn as_ref<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null(what))
}

unsafe fn as_str<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail::Lib(Error::Parse(format!("{what} is not UTF-8"))))
}

unsafe fn write<T>(out: *mut T, v: T, what: &'static str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null(what));
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail::Lib(Error::InvalidArgument("interior NUL".into())))?;
    write(out, c.into_raw(), "out")
}

unsafe fn charges(ptr_: *const i64, len: usize) -> Result<Multicharge, Fail> {
    if ptr_.is_null() {
        return Err(Fail::Null("charges"));
    }
    Ok(Multicharge::new(std::slice::from_raw_parts(ptr_, len).to_vec())?)
}

fn modulus(e: u32) -> Result<Modulus, Fail> {
    Ok(Modulus::new(e)?)
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn qb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn qb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses `"4,3,3,1"` (`"-"` for the empty partition).
///
/// # Safety
/// `literal` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qb_partition_parse(literal: *const c_char, out: *mut *mut QbPartition) -> QbStatus {
    guard(|| {
        let p: Partition = as_str(literal, "literal")?.parse()?;
        write(out, Box::into_raw(Box::new(QbPartition(p))), "out")
    })
}

/// # Safety
/// `p` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn qb_partition_free(p: *mut QbPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qb_partition_to_string(p: *const QbPartition, out: *mut *mut c_char) -> QbStatus {
    guard(|| write_string(out, as_ref(p, "partition")?.0.to_string()))
}

/// `|λ|`, or -1 for NULL.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qb_partition_size(p: *const QbPartition) -> i64 {
    p.as_ref().map_or(-1, |p| p.0.size())
}

/// The `e`-core of `p`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qb_e_core(p: *const QbPartition, e: u32, out: *mut *mut QbPartition) -> QbStatus {
    guard(|| {
        let c = e_core(&as_ref(p, "partition")?.0, modulus(e)?)?;
        write(out, Box::into_raw(Box::new(QbPartition(c))), "out")
    })
}

/// The `e`-quotient at charge `s`, as `"-|-|1"`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qb_e_quotient(p: *const QbPartition, s: i64, e: u32, out: *mut *mut c_char) -> QbStatus {
    guard(|| write_string(out, e_quotient(&as_ref(p, "partition")?.0, s, modulus(e)?)?.to_string()))
}

/// The `e`-weight of `p`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qb_e_weight(p: *const QbPartition, e: u32, out: *mut i64) -> QbStatus {
    guard(|| write(out, e_weight(&as_ref(p, "partition")?.0, modulus(e)?), "out"))
}

/// `σλ` for the shift by `ehat` at charge 0.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qb_sigma_partition(
    p: *const QbPartition,
    e: u32,
    ehat: u32,
    out: *mut *mut QbPartition,
) -> QbStatus {
    guard(|| {
        let param = ShiftParam::new(modulus(e)?, ehat)?;
        let s = sigma_partition(&as_ref(p, "partition")?.0, &param);
        write(out, Box::into_raw(Box::new(QbPartition(s))), "out")
    })
}

/// Parses a block literal for modulus `e`: `"3,5,3"`, or `"i:c,…"` when `e = 0`.
///
/// # Safety
/// `literal` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qb_block_parse(e: u32, literal: *const c_char, out: *mut *mut QbBlock) -> QbStatus {
    guard(|| {
        let b = BlockVector::parse(modulus(e)?, as_str(literal, "literal")?)?;
        write(out, Box::into_raw(Box::new(QbBlock(b))), "out")
    })
}

/// The residue counts `α^s(λ)`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qb_block_of_partition(
    p: *const QbPartition,
    s: i64,
    e: u32,
    out: *mut *mut QbBlock,
) -> QbStatus {
    guard(|| {
        let b = residue_counts(&as_ref(p, "partition")?.0, s, modulus(e)?);
        write(out, Box::into_raw(Box::new(QbBlock(b))), "out")
    })
}

/// # Safety
/// `b` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn qb_block_free(b: *mut QbBlock) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// # Safety
/// `b` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qb_block_to_string(b: *const QbBlock, out: *mut *mut c_char) -> QbStatus {
    guard(|| write_string(out, as_ref(b, "block")?.0.to_string()))
}

/// `w^S(α)` for the multicharge `charges[0..r]`.
///
/// # Safety
/// `b` must be a live handle; `charges` must point to `r` integers.
#[no_mangle]
pub unsafe extern "C" fn qb_block_weight(b: *const QbBlock, charges_: *const i64, r: usize, out: *mut i64) -> QbStatus {
    guard(|| {
        let s = charges(charges_, r)?;
        write(out, as_ref(b, "block")?.0.weight(s.charges()), "out")
    })
}

/// `α ∈ Q^S_+`.
///
/// # Safety
/// `b` must be a live handle; `charges` must point to `r` integers.
#[no_mangle]
pub unsafe extern "C" fn qb_is_block(b: *const QbBlock, charges_: *const i64, r: usize, out: *mut bool) -> QbStatus {
    guard(|| {
        let s = charges(charges_, r)?;
        write(out, is_block(&as_ref(b, "block")?.0, &s, &Limits::default())?, "out")
    })
}

/// `α` is a core block for `S`.
///
/// # Safety
/// `b` must be a live handle; `charges` must point to `r` integers.
#[no_mangle]
pub unsafe extern "C" fn qb_is_core_block(
    b: *const QbBlock,
    charges_: *const i64,
    r: usize,
    out: *mut bool,
) -> QbStatus {
    guard(|| {
        let s = charges(charges_, r)?;
        write(out, is_core_block(&as_ref(b, "block")?.0, &s, &Limits::default())?, "out")
    })
}

/// `σα`.
///
/// # Safety
/// `b` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qb_sigma_block(b: *const QbBlock, ehat: u32, out: *mut *mut QbBlock) -> QbStatus {
    guard(|| {
        let b = &as_ref(b, "block")?.0;
        let param = ShiftParam::new(b.modulus(), ehat)?;
        write(out, Box::into_raw(Box::new(QbBlock(sigma_block(b, &param)?))), "out")
    })
}

/// `N(r,e)` by exhaustive search over equal-size subsets.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qb_n_exact(r: usize, e: u32, out: *mut i64) -> QbStatus {
    guard(|| write(out, n_exact(r, e, Strategy::EqualSize, &BoundLimits::default())?.value, "out"))
}

/// The closed form of `N(r,e)`; `*known` is false where none is available.
///
/// # Safety
/// `out` and `known` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qb_n_closed_form(r: usize, e: u32, out: *mut i64, known: *mut bool) -> QbStatus {
    guard(|| {
        let v = n_closed_form(r, e);
        write(known, v.is_some(), "known")?;
        write(out, v.unwrap_or(0), "out")
    })
}

/// Lower and upper bounds on `N(r,e)`, `r, e ≥ 2`.
///
/// # Safety
/// `lower` and `upper` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qb_n_bounds(r: usize, e: u32, lower: *mut i64, upper: *mut i64) -> QbStatus {
    guard(|| {
        let (lo, hi) = n_bounds(r, e)?;
        write(lower, lo, "lower")?;
        write(upper, hi, "upper")
    })
}

/// Runs a verification suite (or `"all"`) at the default scale.
///
/// # Safety
/// `suite` must be a NUL-terminated string; `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qb_verify(suite: *const c_char, passed: *mut bool) -> QbStatus {
    guard(|| {
        let suites = Suite::parse_selection(as_str(suite, "suite")?)?;
        let reports = verify::run(&suites, &Config::default())?;
        write(passed, reports.iter().all(|r| r.passed()), "passed")
    })
}
