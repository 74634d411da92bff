//! C ABI for the `overpart` library.
//!
//! Values cross the boundary as opaque heap handles (`OpOverpartition`,
//! `OpSubgroup`) owned by the caller and released with the matching `_free`
//! function. Strings returned through out-parameters are NUL-terminated,
//! caller-owned, and released with `overpart_string_free`. Every fallible
//! function returns an `OpStatus`; on failure `overpart_last_error` describes
//! the most recent error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use overpart::{
    count_size_kernel_pairs_formula, factor_to_overpartition, is_member, overlength, overnorm,
    oversize, parse_literal, partition_count, quotient_image, supernorm_over, BigRat,
    Error, Overpartition, SubgroupSpec,
};

/// Opaque overpartition handle.
pub struct OpOverpartition(Overpartition);

/// Opaque subgroup descriptor handle.
pub struct OpSubgroup(SubgroupSpec);

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Input text was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Input text did not follow the expected notation.
    Parse = 3,
    /// Input was well-formed but outside the operation's domain.
    Domain = 4,
    /// A result does not fit the output type.
    Overflow = 5,
    /// A resource limit such as the prime table bound was reached.
    Limit = 6,
    /// The library panicked; this is a bug.
    Panic = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(message).unwrap_or_default());
}

fn status_of(error: &Error) -> OpStatus {
    match error {
        Error::Syntax { .. }
        | Error::DuplicatePart(_)
        | Error::ZeroMultiplicity(_)
        | Error::NonPositivePart
        | Error::MisplacedOverline(_)
        | Error::NotDescending(_)
        | Error::InvalidRational(_)
        | Error::InvalidSubgroup(_) => OpStatus::Parse,
        Error::OverlappingSupport(_) | Error::NegativeMultiplicity(_) | Error::NotPrime(_) => {
            OpStatus::Domain
        }
        Error::MultiplicityOverflow(_) => OpStatus::Overflow,
        Error::PrimeLimit(_) | Error::LimitExceeded(_) => OpStatus::Limit,
    }
}

fn fail(status: OpStatus, message: impl Into<String>) -> OpStatus {
    set_last_error(message);
    status
}

/// Runs `body`, turning errors and panics into status codes.
fn guard<F>(body: F) -> OpStatus
where
    F: FnOnce() -> Result<(), OpStatus>,
{
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            OpStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => fail(OpStatus::Panic, "internal panic"),
    }
}

fn lib_err(error: Error) -> OpStatus {
    fail(status_of(&error), error.to_string())
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, OpStatus> {
    if text.is_null() {
        return Err(fail(OpStatus::NullArgument, "null string argument"));
    }
    // SAFETY: caller passes a valid NUL-terminated string.
    unsafe { CStr::from_ptr(text) }
        .to_str()
        .map_err(|_| fail(OpStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn read_ref<'a, T>(handle: *const T) -> Result<&'a T, OpStatus> {
    // SAFETY: caller passes null or a live handle from this library.
    unsafe { handle.as_ref() }.ok_or_else(|| fail(OpStatus::NullArgument, "null handle argument"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), OpStatus> {
    if out.is_null() {
        return Err(fail(OpStatus::NullArgument, "null output pointer"));
    }
    // SAFETY: checked non-null; caller guarantees it is writable.
    unsafe { out.write(value) };
    Ok(())
}

unsafe fn write_handle(out: *mut *mut OpOverpartition, value: Overpartition) -> Result<(), OpStatus> {
    if out.is_null() {
        return Err(fail(OpStatus::NullArgument, "null output pointer"));
    }
    unsafe { write_out(out, Box::into_raw(Box::new(OpOverpartition(value)))) }
}

unsafe fn write_string(out: *mut *mut c_char, value: String) -> Result<(), OpStatus> {
    if out.is_null() {
        return Err(fail(OpStatus::NullArgument, "null output pointer"));
    }
    let c = CString::new(value).map_err(|_| fail(OpStatus::Panic, "interior NUL in output"))?;
    unsafe { write_out(out, c.into_raw()) }
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn overpart_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string produced by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn overpart_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by CString::into_raw in write_string.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Parses `<1^2 2^-3>` notation or an overline list such as `~3,2,2,1`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn overpart_parse(text: *const c_char, out: *mut *mut OpOverpartition) -> OpStatus {
    guard(|| {
        let text = unsafe { read_str(text)? };
        let value = parse_literal(text).map_err(lib_err)?;
        unsafe { write_handle(out, value) }
    })
}

/// Builds an overpartition from parallel arrays of parts and signed multiplicities.
///
/// # Safety
/// `parts` and `multiplicities` must each point to `len` readable elements
/// (either may be null when `len` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn overpart_from_multiplicities(
    parts: *const u32,
    multiplicities: *const i64,
    len: usize,
    out: *mut *mut OpOverpartition,
) -> OpStatus {
    guard(|| {
        let (parts, mults) = if len == 0 {
            (&[][..], &[][..])
        } else {
            if parts.is_null() || multiplicities.is_null() {
                return Err(fail(OpStatus::NullArgument, "null array argument"));
            }
            // SAFETY: caller guarantees `len` readable elements.
            unsafe {
                (
                    std::slice::from_raw_parts(parts, len),
                    std::slice::from_raw_parts(multiplicities, len),
                )
            }
        };
        let value = Overpartition::from_multiplicities(parts.iter().copied().zip(mults.iter().copied()))
            .map_err(lib_err)?;
        unsafe { write_handle(out, value) }
    })
}

/// Releases an overpartition handle. Null is ignored.
///
/// # Safety
/// `a` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn overpart_free(a: *mut OpOverpartition) {
    if !a.is_null() {
        // SAFETY: produced by Box::into_raw in write_handle.
        drop(unsafe { Box::from_raw(a) });
    }
}

/// Canonical `<...>` text.
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn overpart_format(a: *const OpOverpartition, out: *mut *mut c_char) -> OpStatus {
    guard(|| {
        let a = unsafe { read_ref(a)? };
        unsafe { write_string(out, a.0.to_string()) }
    })
}

/// Group product `a·b`.
///
/// # Safety
/// `a` and `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn overpart_multiply(
    a: *const OpOverpartition,
    b: *const OpOverpartition,
    out: *mut *mut OpOverpartition,
) -> OpStatus {
    guard(|| {
        let (a, b) = unsafe { (read_ref(a)?, read_ref(b)?) };
        let product = a.0.checked_multiply(&b.0).map_err(lib_err)?;
        unsafe { write_handle(out, product) }
    })
}

/// Group inverse.
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn overpart_inverse(a: *const OpOverpartition, out: *mut *mut OpOverpartition) -> OpStatus {
    guard(|| {
        let a = unsafe { read_ref(a)? };
        unsafe { write_handle(out, a.0.inverse()) }
    })
}

/// Structural equality. Null handles compare unequal to everything.
///
/// # Safety
/// Each argument must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn overpart_equal(a: *const OpOverpartition, b: *const OpOverpartition) -> bool {
    // SAFETY: caller passes null or live handles.
    match unsafe { (a.as_ref(), b.as_ref()) } {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// Signed multiplicity of `part`; 0 when absent or when `a` is null.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn overpart_multiplicity(a: *const OpOverpartition, part: u32) -> i64 {
    unsafe { a.as_ref() }.map_or(0, |a| a.0.multiplicity(part))
}

/// `Σ i·μ_i`. Fails with `Overflow` outside the `int64_t` range.
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn overpart_oversize(a: *const OpOverpartition, out: *mut i64) -> OpStatus {
    guard(|| {
        let a = unsafe { read_ref(a)? };
        let value = i64::try_from(oversize(&a.0))
            .map_err(|_| fail(OpStatus::Overflow, "oversize exceeds int64_t"))?;
        unsafe { write_out(out, value) }
    })
}

/// `Σ μ_i`. Fails with `Overflow` outside the `int64_t` range.
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn overpart_overlength(a: *const OpOverpartition, out: *mut i64) -> OpStatus {
    guard(|| {
        let a = unsafe { read_ref(a)? };
        let value = i64::try_from(overlength(&a.0))
            .map_err(|_| fail(OpStatus::Overflow, "overlength exceeds int64_t"))?;
        unsafe { write_out(out, value) }
    })
}

/// `∏ i^{μ_i}` as `num/den` text.
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn overpart_overnorm(a: *const OpOverpartition, out: *mut *mut c_char) -> OpStatus {
    guard(|| {
        let a = unsafe { read_ref(a)? };
        unsafe { write_string(out, overnorm(&a.0).to_string()) }
    })
}

/// Supernorm `∏ p_i^{μ_i}` as `num/den` text (`num` alone when the denominator is 1).
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn overpart_supernorm(a: *const OpOverpartition, out: *mut *mut c_char) -> OpStatus {
    guard(|| {
        let a = unsafe { read_ref(a)? };
        let value = supernorm_over(&a.0).map_err(lib_err)?;
        unsafe { write_string(out, value.to_string()) }
    })
}

/// Inverse supernorm of a positive rational written `num/den` or `num`.
///
/// # Safety
/// `rational` must be a valid NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn overpart_factor(rational: *const c_char, out: *mut *mut OpOverpartition) -> OpStatus {
    guard(|| {
        let text = unsafe { read_str(rational)? };
        let q: BigRat = text.trim().parse().map_err(lib_err)?;
        let value = factor_to_overpartition(&q).map_err(lib_err)?;
        unsafe { write_handle(out, value) }
    })
}

/// Parses a subgroup descriptor such as `{"kind":"parts-in","S":[1,3]}`.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn overpart_subgroup_parse(json: *const c_char, out: *mut *mut OpSubgroup) -> OpStatus {
    guard(|| {
        let text = unsafe { read_str(json)? };
        let spec: SubgroupSpec = serde_json::from_str(text)
            .map_err(|e| fail(OpStatus::Parse, format!("invalid subgroup: {e}")))?;
        unsafe { write_out(out, Box::into_raw(Box::new(OpSubgroup(spec)))) }
    })
}

/// Releases a subgroup handle. Null is ignored.
///
/// # Safety
/// `g` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn overpart_subgroup_free(g: *mut OpSubgroup) {
    if !g.is_null() {
        // SAFETY: produced by Box::into_raw in overpart_subgroup_parse.
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Whether `a` lies in `g`.
///
/// # Safety
/// `a`, `g` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn overpart_is_member(
    a: *const OpOverpartition,
    g: *const OpSubgroup,
    out: *mut bool,
) -> OpStatus {
    guard(|| {
        let (a, g) = unsafe { (read_ref(a)?, read_ref(g)?) };
        unsafe { write_out(out, is_member(&a.0, &g.0)) }
    })
}

/// Whether `a` and `b` lie in the same coset of `g`.
///
/// # Safety
/// `a`, `b`, `g` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn overpart_same_coset(
    a: *const OpOverpartition,
    b: *const OpOverpartition,
    g: *const OpSubgroup,
    out: *mut bool,
) -> OpStatus {
    guard(|| {
        let (a, b, g) = unsafe { (read_ref(a)?, read_ref(b)?, read_ref(g)?) };
        // Same test as `same_coset`, with overflow reported instead of panicking.
        let quotient = a.0.checked_multiply(&b.0.inverse()).map_err(lib_err)?;
        unsafe { write_out(out, is_member(&quotient, &g.0)) }
    })
}

/// Image of `a` in the quotient by `g`, as JSON such as `{"type":"integer","value":5}`.
///
/// # Safety
/// `a`, `g` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn overpart_quotient_image(
    a: *const OpOverpartition,
    g: *const OpSubgroup,
    out: *mut *mut c_char,
) -> OpStatus {
    guard(|| {
        let (a, g) = unsafe { (read_ref(a)?, read_ref(g)?) };
        let json = serde_json::to_string(&quotient_image(&a.0, &g.0)).expect("serializable");
        unsafe { write_string(out, json) }
    })
}

/// `p(n)` as decimal text.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn overpart_partition_count(n: u32, out: *mut *mut c_char) -> OpStatus {
    guard(|| unsafe { write_string(out, partition_count(n as i64).to_string()) })
}

/// Number of ordered pairs of partitions of `n` with disjoint part sets, from
/// the pentagonal sum of squared partition counts, as decimal text.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn overpart_size_kernel_pairs(n: u32, out: *mut *mut c_char) -> OpStatus {
    guard(|| unsafe { write_string(out, count_size_kernel_pairs_formula(n).to_string()) })
}
