//! C ABI over `bernstir`.
//!
//! Conventions:
//!
//! * Every fallible call takes a `BernstirContext *` first and returns a
//!   [`BernstirStatus`]. On anything other than `BERNSTIR_STATUS_OK` the
//!   context holds a message readable with [`bernstir_last_error`].
//! * Results come back through out-pointers. Strings returned to the caller
//!   are owned by the caller and released with [`bernstir_string_free`];
//!   rationals with [`bernstir_rational_free`].
//! * Integers and rationals cross the boundary as decimal strings, never as
//!   floating point.
//! * Panics are caught at the boundary and reported as
//!   `BERNSTIR_STATUS_INTERNAL`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bernstir::arith::{format_rational, parse_rational};
use bernstir::bernoulli::{self, BernoulliFamily, EvalSpec};
use bernstir::{Error, Grid, IdentityId, Rational, SignConvention, StirlingKind};

/// Status codes. The first four match the CLI's exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BernstirStatus {
    Ok = 0,
    /// An identity sweep found at least one counterexample, or two
    /// computation routes disagreed.
    Falsified = 1,
    InvalidArgument = 2,
    /// A closed-form evaluation hit a vanishing sampled denominator.
    Pole = 3,
    NullPointer = 4,
    Internal = 5,
}

/// Error state shared across calls from one thread.
pub struct BernstirContext {
    last_error: Option<CString>,
}

/// An exact rational number.
pub struct BernstirRational(Rational);

/// Optional overrides for an identity sweep. A negative field keeps the
/// identity's default bound.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct BernstirGridBounds {
    pub max_n: i64,
    pub max_k: i64,
    pub max_r: i64,
    pub max_q: i64,
}

/// Kinds accepted by [`bernstir_stirling`].
pub const BERNSTIR_STIRLING_FIRST: u32 = 1;
pub const BERNSTIR_STIRLING_SECOND: u32 = 2;

/// Family selectors: `B` (first kind) and `b` (second kind).
pub const BERNSTIR_FAMILY_FIRST: u32 = 1;
pub const BERNSTIR_FAMILY_SECOND: u32 = 2;

/// Sign selectors for [`bernstir_verify`].
pub const BERNSTIR_SIGN_CORRECTED: u32 = 0;
pub const BERNSTIR_SIGN_PAPER: u32 = 1;

struct Fail(BernstirStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::PoleAtSampledPoint { .. } => BernstirStatus::Pole,
            Error::InternalMismatch(_) => BernstirStatus::Internal,
            _ => BernstirStatus::InvalidArgument,
        };
        Fail(status, e.to_string())
    }
}

fn invalid(msg: impl Into<String>) -> Fail {
    Fail(BernstirStatus::InvalidArgument, msg.into())
}

fn null(what: &str) -> Fail {
    Fail(BernstirStatus::NullPointer, format!("{what} must not be null"))
}

/// Runs `body`, recording any failure in `ctx`.
unsafe fn guarded<F>(ctx: *mut BernstirContext, body: F) -> BernstirStatus
where
    F: FnOnce() -> Result<(), Fail>,
{
    let Some(ctx) = ctx.as_mut() else {
        return BernstirStatus::NullPointer;
    };
    ctx.last_error = None;
    let outcome = match catch_unwind(AssertUnwindSafe(body)) {
        Ok(r) => r,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            Err(Fail(BernstirStatus::Internal, msg))
        }
    };
    match outcome {
        Ok(()) => BernstirStatus::Ok,
        Err(Fail(status, msg)) => {
            ctx.last_error = CString::new(msg.replace('\0', " ")).ok();
            status
        }
    }
}

fn into_c_string(s: String) -> *mut c_char {
    // Our strings never contain interior NULs.
    CString::new(s).expect("no interior NUL").into_raw()
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(format!("{what} is not valid UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn to_usize(v: u64, what: &str) -> Result<usize, Fail> {
    usize::try_from(v).map_err(|_| invalid(format!("{what} = {v} is too large")))
}

fn family(code: u32) -> Result<BernoulliFamily, Fail> {
    match code {
        BERNSTIR_FAMILY_FIRST => Ok(BernoulliFamily::FirstKind),
        BERNSTIR_FAMILY_SECOND => Ok(BernoulliFamily::SecondKind),
        _ => Err(invalid(format!("unknown family {code} (expected 1 or 2)"))),
    }
}

// ------------------------------------------------------------------ context

/// Allocates a context. Never returns null.
#[no_mangle]
pub extern "C" fn bernstir_context_new() -> *mut BernstirContext {
    Box::into_raw(Box::new(BernstirContext { last_error: None }))
}

/// # Safety
/// `ctx` must come from [`bernstir_context_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bernstir_context_free(ctx: *mut BernstirContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Message for the most recent failed call on `ctx`, or null. The pointer
/// is borrowed and stays valid until the next call using `ctx`.
///
/// # Safety
/// `ctx` must be null or a live context.
#[no_mangle]
pub unsafe extern "C" fn bernstir_last_error(ctx: *const BernstirContext) -> *const c_char {
    match ctx.as_ref().and_then(|c| c.last_error.as_ref()) {
        Some(msg) => msg.as_ptr(),
        None => ptr::null(),
    }
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn bernstir_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ----------------------------------------------------------------- rational

/// Parses `a`, `-a`, or `a/b` into a new rational.
///
/// # Safety
/// `ctx` must be a live context, `text` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn bernstir_rational_parse(
    ctx: *mut BernstirContext,
    text: *const c_char,
    out: *mut *mut BernstirRational,
) -> BernstirStatus {
    guarded(ctx, || {
        let text = read_str(text, "text")?;
        let value = parse_rational(text)?;
        write_out(out, Box::into_raw(Box::new(BernstirRational(value))), "out")
    })
}

/// # Safety
/// `r` must be null or a rational returned by this library.
#[no_mangle]
pub unsafe extern "C" fn bernstir_rational_free(r: *mut BernstirRational) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Reduced numerator as a decimal string (sign included). Null if `r` is
/// null.
///
/// # Safety
/// `r` must be null or a live rational.
#[no_mangle]
pub unsafe extern "C" fn bernstir_rational_numerator(r: *const BernstirRational) -> *mut c_char {
    match r.as_ref() {
        Some(r) => into_c_string(r.0.numer().to_string()),
        None => ptr::null_mut(),
    }
}

/// Reduced, positive denominator as a decimal string.
///
/// # Safety
/// `r` must be null or a live rational.
#[no_mangle]
pub unsafe extern "C" fn bernstir_rational_denominator(r: *const BernstirRational) -> *mut c_char {
    match r.as_ref() {
        Some(r) => into_c_string(r.0.denom().to_string()),
        None => ptr::null_mut(),
    }
}

/// `num/den`, or just `num` when the denominator is 1.
///
/// # Safety
/// `r` must be null or a live rational.
#[no_mangle]
pub unsafe extern "C" fn bernstir_rational_to_string(r: *const BernstirRational) -> *mut c_char {
    match r.as_ref() {
        Some(r) => into_c_string(format_rational(&r.0)),
        None => ptr::null_mut(),
    }
}

// ----------------------------------------------------------------- stirling

/// r-Stirling number of the given kind (1: unsigned first kind, 2: second
/// kind) as a decimal string.
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bernstir_stirling(
    ctx: *mut BernstirContext,
    kind: u32,
    n: u64,
    k: u64,
    r: u64,
    out: *mut *mut c_char,
) -> BernstirStatus {
    guarded(ctx, || {
        let kind = match kind {
            BERNSTIR_STIRLING_FIRST => StirlingKind::FirstKindUnsigned,
            BERNSTIR_STIRLING_SECOND => StirlingKind::SecondKind,
            _ => return Err(invalid(format!("unknown Stirling kind {kind} (expected 1 or 2)"))),
        };
        let value = bernstir::rstir(kind, to_usize(n, "n")?, to_usize(k, "k")?, to_usize(r, "r")?);
        write_out(out, into_c_string(value.to_string()), "out")
    })
}

// ---------------------------------------------------------------- bernoulli

/// Value of the order-`alpha` Bernoulli polynomial of degree `n` at the
/// integer `x`, via the closed forms with automatic choice of parameters.
///
/// # Safety
/// `ctx` must be a live context, `alpha` a live rational, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bernstir_bernoulli(
    ctx: *mut BernstirContext,
    family_code: u32,
    n: u64,
    alpha: *const BernstirRational,
    x: i64,
    out: *mut *mut BernstirRational,
) -> BernstirStatus {
    guarded(ctx, || {
        let family = family(family_code)?;
        let alpha = alpha.as_ref().ok_or_else(|| null("alpha"))?;
        let value = bernoulli::evaluate_auto(family, to_usize(n, "n")?, &alpha.0, x);
        write_out(out, Box::into_raw(Box::new(BernstirRational(value))), "out")
    })
}

/// Same as [`bernstir_bernoulli`] with explicit sample count `p >= n` and
/// shift `q`. Reports `BERNSTIR_STATUS_POLE` rather than adjusting `q`.
///
/// # Safety
/// As for [`bernstir_bernoulli`].
#[no_mangle]
pub unsafe extern "C" fn bernstir_bernoulli_with(
    ctx: *mut BernstirContext,
    family_code: u32,
    n: u64,
    alpha: *const BernstirRational,
    x: i64,
    p: u64,
    q: u64,
    out: *mut *mut BernstirRational,
) -> BernstirStatus {
    guarded(ctx, || {
        let family = family(family_code)?;
        let alpha = alpha.as_ref().ok_or_else(|| null("alpha"))?;
        let spec = EvalSpec::new(to_usize(n, "n")?, alpha.0.clone(), x)
            .with_p(to_usize(p, "p")?)
            .with_q(to_usize(q, "q")?);
        let value = bernoulli::evaluate(family, &spec)?;
        write_out(out, Box::into_raw(Box::new(BernstirRational(value))), "out")
    })
}

/// Same value computed by power-series coefficient extraction.
///
/// # Safety
/// As for [`bernstir_bernoulli`].
#[no_mangle]
pub unsafe extern "C" fn bernstir_bernoulli_oracle(
    ctx: *mut BernstirContext,
    family_code: u32,
    n: u64,
    alpha: *const BernstirRational,
    x: i64,
    out: *mut *mut BernstirRational,
) -> BernstirStatus {
    guarded(ctx, || {
        let family = family(family_code)?;
        let alpha = alpha.as_ref().ok_or_else(|| null("alpha"))?;
        let value = bernoulli::oracle_eval(family, to_usize(n, "n")?, &alpha.0, x);
        write_out(out, Box::into_raw(Box::new(BernstirRational(value))), "out")
    })
}

// ------------------------------------------------------------------- verify

/// Sweeps the named identity (e.g. `"c5-first"`) and writes the JSON report
/// to `out_json`. Returns `BERNSTIR_STATUS_FALSIFIED` when the report lists
/// counterexamples; the report is written either way.
///
/// `bounds` may be null to use the identity's default grid.
///
/// # Safety
/// `ctx` must be a live context, `identity` a NUL-terminated string,
/// `bounds` null or readable, `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn bernstir_verify(
    ctx: *mut BernstirContext,
    identity: *const c_char,
    sign: u32,
    bounds: *const BernstirGridBounds,
    out_json: *mut *mut c_char,
) -> BernstirStatus {
    let mut falsified = false;
    let status = guarded(ctx, || {
        let id: IdentityId = read_str(identity, "identity")?.parse().map_err(invalid)?;
        let sign = match sign {
            BERNSTIR_SIGN_CORRECTED => SignConvention::Corrected,
            BERNSTIR_SIGN_PAPER => SignConvention::Paper,
            _ => return Err(invalid(format!("unknown sign convention {sign} (expected 0 or 1)"))),
        };
        let mut grid = Grid::default_for(id);
        if let Some(b) = bounds.as_ref() {
            for (slot, v) in [
                (&mut grid.max_n, b.max_n),
                (&mut grid.max_k, b.max_k),
                (&mut grid.max_r, b.max_r),
                (&mut grid.max_q, b.max_q),
            ] {
                if v >= 0 {
                    *slot = to_usize(v as u64, "bound")?;
                }
            }
        }
        if out_json.is_null() {
            return Err(null("out_json"));
        }
        let report = bernstir::identities::verify(id, sign, &grid);
        let json = serde_json::to_string(&report)
            .map_err(|e| Fail(BernstirStatus::Internal, e.to_string()))?;
        falsified = !report.verified();
        write_out(out_json, into_c_string(json), "out_json")
    });
    if status == BernstirStatus::Ok && falsified {
        BernstirStatus::Falsified
    } else {
        status
    }
}
