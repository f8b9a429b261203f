//! C ABI over `dehn-core`.
//!
//! Every function returns a [`DehnStatus`] and writes results through out
//! pointers. Seminorms and Seifert spaces are opaque handles created by a
//! `*_new` function and released by the matching `*_free`. After a failure,
//! [`dehn_last_error`] describes it until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dehn_core::bounds::{self, BoundContext, FiniteType, MultiplicityCertificate, SurgeryClass, TriangleType};
use dehn_core::charvar;
use dehn_core::lattice::{PeripheralClass, Slope};
use dehn_core::pretzel;
use dehn_core::seifert::{SeifertData, Verdict};
use dehn_core::seminorm::{Classification, CullerShalenSeminorm, IdealFunctional};
use dehn_core::Error;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DehnStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    PreconditionViolated = 3,
    Overflow = 4,
    Parse = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DehnClassification {
    Norm = 0,
    Indefinite = 1,
    Zero = 2,
}

/// Finite group types; `DEHN_FINITE_TYPE_NONE` marks an infinite group.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DehnFiniteType {
    C = 0,
    D = 1,
    T = 2,
    O = 3,
    I = 4,
    Q = 5,
    None = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DehnSurgeryKind {
    MeridianS3 = 0,
    Reducible = 1,
    Cyclic = 2,
    FiniteSeifert = 3,
    InfiniteSeifert = 4,
}

/// Result of torus-knot surgery. `a`, `b` are the lens orders of a reducible
/// result, the cyclic order in `a`, or the Seifert triple `(a, b, e)`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DehnSurgery {
    pub kind: DehnSurgeryKind,
    pub finite_type: DehnFiniteType,
    pub a: u64,
    pub b: u64,
    pub e: u64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DehnVerdict {
    No = 0,
    Yes = 1,
    Undetermined = 2,
}

/// Opaque seminorm handle.
pub struct DehnSeminorm(CullerShalenSeminorm);

/// Opaque Seifert space handle.
pub struct DehnSeifert(SeifertData);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(DehnStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let status = if e.is_schema() { DehnStatus::Parse } else { DehnStatus::PreconditionViolated };
        Failure(status, e.to_string())
    }
}

fn overflow(what: &str) -> Failure {
    Failure(DehnStatus::Overflow, format!("{what} does not fit in 64 bits"))
}

fn to_i64(x: &BigInt, what: &str) -> Result<i64, Failure> {
    x.to_i64().ok_or_else(|| overflow(what))
}

fn to_u64(x: &BigInt, what: &str) -> Result<u64, Failure> {
    x.to_u64().ok_or_else(|| overflow(what))
}

fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(DehnStatus::NullPointer, "null output pointer".into()));
    }
    // SAFETY: non-null and, by the API contract, valid for writes of T
    unsafe { out.write(value) };
    Ok(())
}

fn deref<'a, T>(h: *const T) -> Result<&'a T, Failure> {
    // SAFETY: by contract `h` is null or a live handle from the matching constructor
    unsafe { h.as_ref() }.ok_or_else(|| Failure(DehnStatus::NullPointer, "null handle".into()))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> DehnStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DehnStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error".into());
            DehnStatus::Internal
        }
    }
}

/// Finite types arrive as plain integers: an out-of-range enum value from C
/// would be undefined behaviour.
fn finite_type_in(t: i32) -> Result<FiniteType, Failure> {
    Ok(match t {
        0 => FiniteType::C,
        1 => FiniteType::D,
        2 => FiniteType::T,
        3 => FiniteType::O,
        4 => FiniteType::I,
        5 => FiniteType::Q,
        _ => return Err(Failure(DehnStatus::InvalidArgument, format!("{t} is not a finite type"))),
    })
}

fn finite_type_out(t: FiniteType) -> DehnFiniteType {
    match t {
        FiniteType::C => DehnFiniteType::C,
        FiniteType::D => DehnFiniteType::D,
        FiniteType::T => DehnFiniteType::T,
        FiniteType::O => DehnFiniteType::O,
        FiniteType::I => DehnFiniteType::I,
        FiniteType::Q => DehnFiniteType::Q,
    }
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn dehn_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// `|p1 q2 − p2 q1|`.
#[no_mangle]
pub extern "C" fn dehn_slope_distance(p1: i64, q1: i64, p2: i64, q2: i64, out: *mut u64) -> DehnStatus {
    guard(|| {
        let d = PeripheralClass::new(p1, q1).distance(&PeripheralClass::new(p2, q2));
        write(out, to_u64(&d, "distance")?)
    })
}

/// Canonical representative of the slope `±(p, q)`: `p > 0`, or `(0, 1)`.
#[no_mangle]
pub extern "C" fn dehn_slope_canonical(p: i64, q: i64, out_p: *mut i64, out_q: *mut i64) -> DehnStatus {
    guard(|| {
        let s = Slope::new(p, q)?;
        write(out_p, to_i64(s.p(), "p")?)?;
        write(out_q, to_i64(s.q(), "q")?)
    })
}

/// Seminorm from `n` functionals stored as `coeffs[2i], coeffs[2i+1]`.
///
/// # Safety
/// `coeffs` must point to `2 * n` readable integers (or be null when `n == 0`).
#[no_mangle]
pub unsafe extern "C" fn dehn_seminorm_new(coeffs: *const i64, n: usize, out: *mut *mut DehnSeminorm) -> DehnStatus {
    guard(|| {
        let pairs: &[i64] = if n == 0 {
            &[]
        } else if coeffs.is_null() {
            return Err(Failure(DehnStatus::NullPointer, "null coefficient array".into()));
        } else {
            let len = n.checked_mul(2).ok_or_else(|| overflow("coefficient count"))?;
            // SAFETY: caller guarantees 2n readable values
            unsafe { std::slice::from_raw_parts(coeffs, len) }
        };
        let functionals = pairs.chunks_exact(2).map(|c| IdealFunctional::new(c[0], c[1])).collect();
        write(out, Box::into_raw(Box::new(DehnSeminorm(CullerShalenSeminorm::new(functionals)))))
    })
}

/// Releases a seminorm handle; null is ignored.
///
/// # Safety
/// `h` must be null or a handle from [`dehn_seminorm_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dehn_seminorm_free(h: *mut DehnSeminorm) {
    if !h.is_null() {
        // SAFETY: per contract, created by Box::into_raw and not freed
        drop(unsafe { Box::from_raw(h) });
    }
}

/// Classification, and the kernel slope when indefinite (else `(0, 0)`).
#[no_mangle]
pub extern "C" fn dehn_seminorm_classify(
    h: *const DehnSeminorm,
    out_kind: *mut DehnClassification,
    out_kernel_p: *mut i64,
    out_kernel_q: *mut i64,
) -> DehnStatus {
    guard(|| {
        let sn = &deref(h)?.0;
        let (kind, kp, kq) = match sn.classify() {
            Classification::Norm => (DehnClassification::Norm, 0, 0),
            Classification::Zero => (DehnClassification::Zero, 0, 0),
            Classification::Indefinite { kernel } => {
                (DehnClassification::Indefinite, to_i64(kernel.p(), "kernel")?, to_i64(kernel.q(), "kernel")?)
            }
        };
        write(out_kind, kind)?;
        write(out_kernel_p, kp)?;
        write(out_kernel_q, kq)
    })
}

/// Smallest nonzero value on the lattice, 0 for the zero seminorm.
#[no_mangle]
pub extern "C" fn dehn_seminorm_minimal_value(h: *const DehnSeminorm, out: *mut i64) -> DehnStatus {
    guard(|| write(out, to_i64(&deref(h)?.0.minimal_value(), "minimal value")?))
}

#[no_mangle]
pub extern "C" fn dehn_seminorm_evaluate(h: *const DehnSeminorm, p: i64, q: i64, out: *mut i64) -> DehnStatus {
    guard(|| write(out, to_i64(&deref(h)?.0.evaluate(&PeripheralClass::new(p, q)), "value")?))
}

/// Surgery on the `(p, q)` torus knot along `m/n`.
#[no_mangle]
pub extern "C" fn dehn_torus_knot_surgery(p: u64, q: u64, m: i64, n: i64, out: *mut DehnSurgery) -> DehnStatus {
    guard(|| {
        let slope = Slope::new(m, n)?;
        let class = bounds::torus_knot_surgery(p, q, &slope)?;
        let none = DehnFiniteType::None;
        let s = match class {
            SurgeryClass::MeridianS3 => {
                DehnSurgery { kind: DehnSurgeryKind::MeridianS3, finite_type: DehnFiniteType::C, a: 1, b: 0, e: 1 }
            }
            SurgeryClass::Reducible { p, q } => DehnSurgery { kind: DehnSurgeryKind::Reducible, finite_type: none, a: p, b: q, e: 0 },
            SurgeryClass::Cyclic { order } => DehnSurgery {
                kind: DehnSurgeryKind::Cyclic,
                finite_type: DehnFiniteType::C,
                a: to_u64(&order, "order")?,
                b: 0,
                e: 1,
            },
            SurgeryClass::FiniteSeifert { finite_type, p, q, e } => DehnSurgery {
                kind: DehnSurgeryKind::FiniteSeifert,
                finite_type: finite_type_out(finite_type),
                a: p,
                b: q,
                e: to_u64(&e, "e")?,
            },
            SurgeryClass::InfiniteSeifert { p, q, e } => {
                DehnSurgery { kind: DehnSurgeryKind::InfiniteSeifert, finite_type: none, a: p, b: q, e: to_u64(&e, "e")? }
            }
        };
        write(out, s)
    })
}

/// Type of the `(p, q, e)` triangle group.
#[no_mangle]
pub extern "C" fn dehn_triangle_type(p: u64, q: u64, e: u64, out: *mut DehnFiniteType) -> DehnStatus {
    guard(|| {
        let t = match bounds::triangle_type(p, q, e)? {
            TriangleType::Finite(t) => finite_type_out(t),
            TriangleType::Infinite => DehnFiniteType::None,
        };
        write(out, t)
    })
}

fn context(s: i64, n_dihedral: u64, vi2: bool) -> BoundContext {
    let ctx = BoundContext::new(s, MultiplicityCertificate::NotBoundarySlope).with_dihedral(n_dihedral);
    if vi2 {
        ctx.with_virtually_irreducible(2)
    } else {
        ctx
    }
}

/// Norm bound for a filling of type `t` (a `DehnFiniteType` value); `out_exact` is 1 when the bound is an
/// equality. Assumes the multiplicity hypothesis is certified.
#[no_mangle]
pub extern "C" fn dehn_norm_bound(
    t: i32,
    s: i64,
    n_dihedral: u64,
    vi2: bool,
    out_value: *mut i64,
    out_exact: *mut bool,
) -> DehnStatus {
    guard(|| {
        let nb = bounds::norm_bound(finite_type_in(t)?, &context(s, n_dihedral, vi2))?;
        write(out_value, to_i64(nb.value(), "bound")?)?;
        write(out_exact, matches!(nb, bounds::NormBound::Exact(_)))
    })
}

/// Distance bound as a reduced fraction.
#[no_mangle]
pub extern "C" fn dehn_distance_bound(
    t: i32,
    s: i64,
    n_dihedral: u64,
    vi2: bool,
    out_num: *mut i64,
    out_den: *mut i64,
) -> DehnStatus {
    guard(|| {
        let db = bounds::distance_bound(finite_type_in(t)?, &context(s, n_dihedral, vi2))?;
        write(out_num, to_i64(db.exact.numer(), "bound")?)?;
        write(out_den, to_i64(db.exact.denom(), "bound")?)
    })
}

/// Seifert space from its JSON description
/// `{"base": {"orientable": bool, "genus": int}, "gamma": int, "fibers": [[a, b], ...]}`.
///
/// # Safety
/// `json` must be null or a valid nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn dehn_seifert_from_json(json: *const c_char, out: *mut *mut DehnSeifert) -> DehnStatus {
    guard(|| {
        if json.is_null() {
            return Err(Failure(DehnStatus::NullPointer, "null json".into()));
        }
        // SAFETY: caller guarantees a nul-terminated string
        let text = unsafe { CStr::from_ptr(json) }
            .to_str()
            .map_err(|e| Failure(DehnStatus::Parse, e.to_string()))?;
        let sd: SeifertData = serde_json::from_str(text).map_err(|e| Failure(DehnStatus::Parse, e.to_string()))?;
        write(out, Box::into_raw(Box::new(DehnSeifert(sd))))
    })
}

/// Releases a Seifert handle; null is ignored.
///
/// # Safety
/// `h` must be null or a handle from [`dehn_seifert_from_json`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dehn_seifert_free(h: *mut DehnSeifert) {
    if !h.is_null() {
        // SAFETY: per contract, created by Box::into_raw and not freed
        drop(unsafe { Box::from_raw(h) });
    }
}

/// First homology `Z^rank ⊕ Z/t₁ ⊕ …`. Writes up to `cap` torsion
/// coefficients and their total count to `out_len`; fails with
/// `InvalidArgument` when `cap` is too small.
///
/// # Safety
/// `torsion` must point to `cap` writable integers (or be null when `cap == 0`).
#[no_mangle]
pub unsafe extern "C" fn dehn_seifert_h1(
    h: *const DehnSeifert,
    out_rank: *mut u64,
    torsion: *mut i64,
    cap: usize,
    out_len: *mut usize,
) -> DehnStatus {
    guard(|| {
        let g = deref(h)?.0.h1();
        write(out_rank, g.rank as u64)?;
        write(out_len, g.torsion.len())?;
        if g.torsion.len() > cap {
            return Err(Failure(DehnStatus::InvalidArgument, format!("{} torsion coefficients, capacity {cap}", g.torsion.len())));
        }
        for (i, t) in g.torsion.iter().enumerate() {
            // SAFETY: i < len <= cap and the caller provides cap slots
            write(unsafe { torsion.add(i) }, to_i64(t, "torsion")?)?;
        }
        Ok(())
    })
}

/// Orbifold Euler characteristic of the base as a reduced fraction.
#[no_mangle]
pub extern "C" fn dehn_seifert_chi_orb(h: *const DehnSeifert, out_num: *mut i64, out_den: *mut i64) -> DehnStatus {
    guard(|| {
        let chi = deref(h)?.0.orbifold().chi_orb();
        write(out_num, to_i64(chi.numer(), "chi")?)?;
        write(out_den, to_i64(chi.denom(), "chi")?)
    })
}

fn verdict(v: Verdict) -> DehnVerdict {
    match v {
        Verdict::Yes(_) => DehnVerdict::Yes,
        Verdict::No(_) => DehnVerdict::No,
        Verdict::Undetermined(_) => DehnVerdict::Undetermined,
    }
}

#[no_mangle]
pub extern "C" fn dehn_seifert_is_haken(h: *const DehnSeifert, out: *mut DehnVerdict) -> DehnStatus {
    guard(|| write(out, verdict(deref(h)?.0.is_haken())))
}

/// Whether the character variety has a curve through an irreducible character.
#[no_mangle]
pub extern "C" fn dehn_seifert_irreducible_curve(h: *const DehnSeifert, out: *mut DehnVerdict) -> DehnStatus {
    guard(|| write(out, verdict(deref(h)?.0.irreducible_curve_exists())))
}

#[no_mangle]
pub extern "C" fn dehn_seifert_virtually_irreducible_curve(h: *const DehnSeifert, out: *mut DehnVerdict) -> DehnStatus {
    guard(|| write(out, verdict(deref(h)?.0.virtually_irreducible_curve_exists())))
}

/// Boundary slope `num/den` of `K_{4n+6}` and `|H₁|` of surgery along it.
#[no_mangle]
pub extern "C" fn dehn_pretzel_family(n: i64, out_num: *mut i64, out_den: *mut i64, out_h1: *mut u64) -> DehnStatus {
    guard(|| {
        let f = pretzel::pretzel_family(n)?;
        write(out_num, to_i64(f.slope.numer(), "slope")?)?;
        write(out_den, to_i64(f.slope.denom(), "slope")?)?;
        write(out_h1, to_u64(&f.h1_order, "order")?)
    })
}

/// Components and curve components of the character variety of `Z/p * Z/q`.
#[no_mangle]
pub extern "C" fn dehn_component_counts(p: u64, q: u64, out_total: *mut u64, out_curves: *mut u64) -> DehnStatus {
    guard(|| {
        if p < 2 || q < 2 {
            return Err(Failure(DehnStatus::InvalidArgument, format!("orders ({p}, {q}) must be >= 2")));
        }
        let (t, c) = charvar::component_counts(p, q);
        write(out_total, t)?;
        write(out_curves, c)
    })
}
