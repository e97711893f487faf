//! C interface to `ore_diamond`.
//!
//! Objects are opaque handles created by `od_*_new`/`od_*_parse` and
//! released with the matching `*_free`. Every fallible call returns an
//! `OdStatus`; on failure `od_last_error` describes the problem for the
//! calling thread. Strings returned to C are owned by the caller and must be
//! released with `od_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ore_diamond::classify::{normalize_and_classify, TypeTag};
use ore_diamond::config::field_from_spec;
use ore_diamond::diamond::{check_monoid_commutativity, SolveOptions};
use ore_diamond::parse::{format_skew, parse_skew};
use ore_diamond::skew::{SkewPoly, SkewRing};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Config = 3,
    Parse = 4,
    DivisionByZero = 5,
    /// Operands belong to different rings.
    RingMismatch = 6,
    /// The operation is undefined for this input.
    Domain = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OdType {
    A = 0,
    B = 1,
    C = 2,
    Unit = 3,
    Zero = 4,
    Unnormalized = 5,
}

impl From<TypeTag> for OdType {
    fn from(t: TypeTag) -> Self {
        match t {
            TypeTag::A => OdType::A,
            TypeTag::B => OdType::B,
            TypeTag::C => OdType::C,
            TypeTag::Unit => OdType::Unit,
            TypeTag::Zero => OdType::Zero,
            TypeTag::Unnormalized => OdType::Unnormalized,
        }
    }
}

/// A skew polynomial ring `k[X]_(X)[theta; alpha]`.
pub struct OdRing {
    ring: SkewRing,
}

/// An element of an `OdRing`.
pub struct OdSkew {
    poly: SkewPoly,
    config: ore_diamond::field::FieldConfig,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

type FfiResult<T> = Result<T, (OdStatus, String)>;

fn guard(f: impl FnOnce() -> FfiResult<()>) -> OdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            OdStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            OdStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err((OdStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (OdStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> FfiResult<&'a T> {
    p.as_ref().ok_or_else(|| (OdStatus::NullPointer, format!("{what} is null")))
}

unsafe fn out_arg<T>(p: *mut *mut T, value: T) -> FfiResult<()> {
    if p.is_null() {
        return Err((OdStatus::NullPointer, "output pointer is null".into()));
    }
    *p = Box::into_raw(Box::new(value));
    Ok(())
}

fn same_ring(ring: &OdRing, xs: &[&OdSkew]) -> FfiResult<()> {
    if xs.iter().all(|x| x.config == *ring.ring.config()) {
        Ok(())
    } else {
        Err((OdStatus::RingMismatch, "operands belong to a different ring".into()))
    }
}

fn wrap(ring: &OdRing, poly: SkewPoly) -> OdSkew {
    OdSkew { poly, config: ring.ring.config().clone() }
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn od_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Creates a ring. `field` is `q`, `q:<rational>`, `fp:<p>` or `gf:<p>^<m>`;
/// `q` may be null; `characteristic` is 0 or a prime.
///
/// # Safety
/// String arguments must be null or valid NUL-terminated strings; `out`
/// must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn od_ring_new(field: *const c_char, q: *const c_char, characteristic: u32, out: *mut *mut OdRing) -> OdStatus {
    guard(|| {
        let field = str_arg(field, "field")?;
        let q = if q.is_null() { None } else { Some(str_arg(q, "q")?) };
        let cfg = field_from_spec(field, q, characteristic).map_err(|e| (OdStatus::Config, e.to_string()))?;
        out_arg(out, OdRing { ring: SkewRing::new(cfg) })
    })
}

/// # Safety
/// `ring` must be null or a handle from `od_ring_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn od_ring_free(ring: *mut OdRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Parses an element such as `1+X*theta` in `ring`.
///
/// # Safety
/// Pointers must be valid as described for `od_ring_new`.
#[no_mangle]
pub unsafe extern "C" fn od_skew_parse(ring: *const OdRing, text: *const c_char, out: *mut *mut OdSkew) -> OdStatus {
    guard(|| {
        let ring = ref_arg(ring, "ring")?;
        let text = str_arg(text, "text")?;
        let p = parse_skew(text, &ring.ring).map_err(|e| (OdStatus::Parse, e.to_string()))?;
        out_arg(out, wrap(ring, p))
    })
}

/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn od_skew_free(p: *mut OdSkew) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Degree in `theta`, or -1 for zero.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn od_skew_degree(p: *const OdSkew, out: *mut i64) -> OdStatus {
    guard(|| {
        let p = ref_arg(p, "element")?;
        if out.is_null() {
            return Err((OdStatus::NullPointer, "output pointer is null".into()));
        }
        *out = p.poly.degree().map_or(-1, |d| d as i64);
        Ok(())
    })
}

/// Canonical text of `p`; free with `od_string_free`.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn od_skew_to_string(p: *const OdSkew, out: *mut *mut c_char) -> OdStatus {
    guard(|| {
        let p = ref_arg(p, "element")?;
        string_out(out, format_skew(&p.poly))
    })
}

unsafe fn string_out(out: *mut *mut c_char, s: String) -> FfiResult<()> {
    if out.is_null() {
        return Err((OdStatus::NullPointer, "output pointer is null".into()));
    }
    *out = CString::new(s).map_err(|_| (OdStatus::Panic, "interior NUL".to_string()))?.into_raw();
    Ok(())
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn od_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `out = a * b`.
///
/// # Safety
/// All pointers must be valid handles or output slots.
#[no_mangle]
pub unsafe extern "C" fn od_skew_mul(ring: *const OdRing, a: *const OdSkew, b: *const OdSkew, out: *mut *mut OdSkew) -> OdStatus {
    guard(|| {
        let (ring, a, b) = (ref_arg(ring, "ring")?, ref_arg(a, "a")?, ref_arg(b, "b")?);
        same_ring(ring, &[a, b])?;
        out_arg(out, wrap(ring, ring.ring.mul(&a.poly, &b.poly)))
    })
}

unsafe fn division(
    ring: *const OdRing,
    a: *const OdSkew,
    b: *const OdSkew,
    quot: *mut *mut OdSkew,
    rem: *mut *mut OdSkew,
    right: bool,
) -> OdStatus {
    guard(|| {
        let (ring, a, b) = (ref_arg(ring, "ring")?, ref_arg(a, "a")?, ref_arg(b, "b")?);
        same_ring(ring, &[a, b])?;
        if quot.is_null() || rem.is_null() {
            return Err((OdStatus::NullPointer, "output pointer is null".into()));
        }
        let r = if right { ring.ring.right_divide(&a.poly, &b.poly) } else { ring.ring.left_divide(&a.poly, &b.poly) };
        let (q, r) = r.map_err(|e| (OdStatus::DivisionByZero, e.to_string()))?;
        out_arg(quot, wrap(ring, q))?;
        out_arg(rem, wrap(ring, r))
    })
}

/// `a = quot * b + rem` with `deg rem < deg b`.
///
/// # Safety
/// All pointers must be valid handles or output slots.
#[no_mangle]
pub unsafe extern "C" fn od_skew_right_divide(
    ring: *const OdRing,
    a: *const OdSkew,
    b: *const OdSkew,
    quot: *mut *mut OdSkew,
    rem: *mut *mut OdSkew,
) -> OdStatus {
    division(ring, a, b, quot, rem, true)
}

/// `a = b * quot + rem` with `deg rem < deg b`.
///
/// # Safety
/// All pointers must be valid handles or output slots.
#[no_mangle]
pub unsafe extern "C" fn od_skew_left_divide(
    ring: *const OdRing,
    a: *const OdSkew,
    b: *const OdSkew,
    quot: *mut *mut OdSkew,
    rem: *mut *mut OdSkew,
) -> OdStatus {
    division(ring, a, b, quot, rem, false)
}

/// Monic greatest common right divisor.
///
/// # Safety
/// All pointers must be valid handles or output slots.
#[no_mangle]
pub unsafe extern "C" fn od_skew_gcrd(ring: *const OdRing, a: *const OdSkew, b: *const OdSkew, out: *mut *mut OdSkew) -> OdStatus {
    guard(|| {
        let (ring, a, b) = (ref_arg(ring, "ring")?, ref_arg(a, "a")?, ref_arg(b, "b")?);
        same_ring(ring, &[a, b])?;
        let g = ring.ring.gcrd(&a.poly, &b.poly).map_err(|e| (OdStatus::Domain, e.to_string()))?;
        out_arg(out, wrap(ring, g))
    })
}

/// Monic least common left multiple.
///
/// # Safety
/// All pointers must be valid handles or output slots.
#[no_mangle]
pub unsafe extern "C" fn od_skew_lclm(ring: *const OdRing, a: *const OdSkew, b: *const OdSkew, out: *mut *mut OdSkew) -> OdStatus {
    guard(|| {
        let (ring, a, b) = (ref_arg(ring, "ring")?, ref_arg(a, "a")?, ref_arg(b, "b")?);
        same_ring(ring, &[a, b])?;
        let l = ring.ring.lclm(&a.poly, &b.poly).map_err(|e| (OdStatus::Domain, e.to_string()))?;
        out_arg(out, wrap(ring, l))
    })
}

/// Shape of `p` after unit normalization.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn od_classify(p: *const OdSkew, out: *mut OdType) -> OdStatus {
    guard(|| {
        let p = ref_arg(p, "element")?;
        if out.is_null() {
            return Err((OdStatus::NullPointer, "output pointer is null".into()));
        }
        *out = match normalize_and_classify(&p.poly) {
            Ok(c) => c.tag.into(),
            Err(ore_diamond::classify::ClassifyError::Zero) => OdType::Zero,
            Err(e) => return Err((OdStatus::Domain, e.to_string())),
        };
        Ok(())
    })
}

/// Runs the factorization check on `c b` and writes the JSON report to
/// `json_out` (free with `od_string_free`). `refuted` is set to 1 when both
/// ansaetze were refuted up to `degree_bound`, else 0.
///
/// # Safety
/// All pointers must be valid handles or output slots.
#[no_mangle]
pub unsafe extern "C" fn od_check_commutativity(
    ring: *const OdRing,
    c: *const OdSkew,
    b: *const OdSkew,
    degree_bound: u32,
    refuted: *mut i32,
    json_out: *mut *mut c_char,
) -> OdStatus {
    guard(|| {
        let (ring, c, b) = (ref_arg(ring, "ring")?, ref_arg(c, "c")?, ref_arg(b, "b")?);
        same_ring(ring, &[c, b])?;
        if refuted.is_null() {
            return Err((OdStatus::NullPointer, "output pointer is null".into()));
        }
        let opts = SolveOptions { degree_bound: degree_bound as usize, ..Default::default() };
        let report = check_monoid_commutativity(&c.poly, &b.poly, &ring.ring, &opts).map_err(|e| (OdStatus::Domain, e.to_string()))?;
        *refuted = report.refuted() as i32;
        string_out(json_out, report.to_json(&ring.ring.config().describe()).to_string())
    })
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn od_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}
