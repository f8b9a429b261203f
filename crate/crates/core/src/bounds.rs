//! Bounds on finite and cyclic filling slopes coming from a curve of
//! characters, triangle-group types, and the classification of surgeries on
//! torus knots.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::lattice::{PeripheralClass, Slope};
use crate::seminorm::{Classification, CullerShalenSeminorm};
use crate::{Error, Result};

/// Types of finite fundamental groups of 3-manifolds: cyclic, dihedral-,
/// tetrahedral-, octahedral-, icosahedral- and quaternionic-type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FiniteType {
    C,
    D,
    T,
    O,
    I,
    Q,
}

impl FiniteType {
    pub const ALL: [FiniteType; 6] = [FiniteType::C, FiniteType::D, FiniteType::T, FiniteType::O, FiniteType::I, FiniteType::Q];
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for FiniteType {
    type Err = Error;

    fn from_str(s: &str) -> Result<FiniteType> {
        match s.trim().to_ascii_uppercase().as_str() {
            "C" => Ok(FiniteType::C),
            "D" => Ok(FiniteType::D),
            "T" => Ok(FiniteType::T),
            "O" => Ok(FiniteType::O),
            "I" => Ok(FiniteType::I),
            "Q" => Ok(FiniteType::Q),
            other => Err(Error::Parse(format!("unknown finite type {other:?}"))),
        }
    }
}

/// Sufficient conditions for the hypothesis `Z_x(f̃_{r₁}) ≤ Z_x(f̃_β)` at every
/// ideal point. The caller certifies one; it is not checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MultiplicityCertificate {
    /// `r₁` is not a boundary slope.
    NotBoundarySlope,
    /// `X₀` is not index 2 virtually abelian and `r₁` is not a strict boundary slope.
    NotStrictBoundarySlope,
    /// `X₀` is an `r`-curve with `Δ(r, r₁) > 1` and no closed essential surface
    /// of `M` stays incompressible in `M(r)`.
    NoClosedEssentialSurface,
    /// `M` is small, `X₀ ⊂ X̄(M(r))` and `r₁ ≠ r`.
    SmallManifold,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundContext {
    /// `s(X₀)`.
    #[serde(with = "crate::serde_int")]
    pub s: BigInt,
    /// Number of characters of dihedral representations on `X₀` killing `r₁`.
    #[serde(default)]
    pub n_dihedral: u64,
    /// Indices `q` for which `X₀` is index `q` virtually irreducible.
    #[serde(default)]
    pub virtually_irreducible: BTreeSet<u32>,
    #[serde(default)]
    pub certificate: Option<MultiplicityCertificate>,
}

impl BoundContext {
    pub fn new(s: impl Into<BigInt>, certificate: MultiplicityCertificate) -> Self {
        BoundContext {
            s: s.into(),
            n_dihedral: 0,
            virtually_irreducible: BTreeSet::new(),
            certificate: Some(certificate),
        }
    }

    pub fn with_dihedral(mut self, n: u64) -> Self {
        self.n_dihedral = n;
        self
    }

    pub fn with_virtually_irreducible(mut self, q: u32) -> Self {
        self.virtually_irreducible.insert(q);
        self
    }

    pub fn multiplicity_hypothesis_ok(&self) -> bool {
        self.certificate.is_some()
    }

    fn check(&self) -> Result<()> {
        if !self.multiplicity_hypothesis_ok() {
            return Err(Error::HypothesisNotCertified);
        }
        if !self.s.is_positive() {
            return Err(Error::NonPositiveMinimum(self.s.to_string()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value")]
pub enum NormBound {
    #[serde(with = "crate::serde_int")]
    Exact(BigInt),
    #[serde(with = "crate::serde_int")]
    AtMost(BigInt),
}

impl NormBound {
    pub fn value(&self) -> &BigInt {
        match self {
            NormBound::Exact(v) | NormBound::AtMost(v) => v,
        }
    }

    pub fn admits(&self, norm: &BigInt) -> bool {
        match self {
            NormBound::Exact(v) => norm == v,
            NormBound::AtMost(v) => norm <= v,
        }
    }
}

impl fmt::Display for NormBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormBound::Exact(v) => write!(f, "= {v}"),
            NormBound::AtMost(v) => write!(f, "<= {v}"),
        }
    }
}

/// Bound on `‖α(r₁)‖_{X₀}` for a filling slope `r₁` of the given type.
pub fn norm_bound(t: FiniteType, ctx: &BoundContext) -> Result<NormBound> {
    ctx.check()?;
    let s = &ctx.s;
    Ok(match t {
        FiniteType::C => NormBound::Exact(s.clone()),
        FiniteType::D | FiniteType::Q => {
            let b = s + BigInt::from(ctx.n_dihedral);
            if ctx.virtually_irreducible.contains(&2) {
                NormBound::AtMost(b.min(s * 2))
            } else {
                NormBound::AtMost(b)
            }
        }
        FiniteType::T => NormBound::AtMost(s + 2),
        FiniteType::O => NormBound::AtMost(s + 3),
        FiniteType::I => NormBound::AtMost(s + 4),
    })
}

/// Exact rational bound on `Δ(r, r₁)` for an `r`-curve, with its floor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceBound {
    #[serde(with = "crate::serde_int::rational")]
    pub exact: BigRational,
    #[serde(with = "crate::serde_int")]
    pub floor: BigInt,
}

impl DistanceBound {
    fn new(exact: BigRational) -> Self {
        let floor = exact.floor().to_integer();
        DistanceBound { exact, floor }
    }
}

pub fn distance_bound(t: FiniteType, ctx: &BoundContext) -> Result<DistanceBound> {
    ctx.check()?;
    let one = BigRational::one();
    let over_s = |k: BigInt| BigRational::new(k, ctx.s.clone());
    let exact = match t {
        FiniteType::C => one,
        FiniteType::D | FiniteType::Q => {
            let b = one + over_s(ctx.n_dihedral.into());
            if ctx.virtually_irreducible.contains(&2) {
                b.min(BigRational::from_integer(2.into()))
            } else {
                b
            }
        }
        FiniteType::T => one + over_s(2.into()),
        FiniteType::O => one + over_s(3.into()),
        FiniteType::I => one + over_s(4.into()),
    };
    Ok(DistanceBound::new(exact))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TriangleType {
    Finite(FiniteType),
    Infinite,
}

impl fmt::Display for TriangleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleType::Finite(t) => write!(f, "{t}"),
            TriangleType::Infinite => f.write_str("infinite"),
        }
    }
}

/// Type of the `(p, q, e)` triangle group.
pub fn triangle_type(p: u64, q: u64, e: u64) -> Result<TriangleType> {
    if p == 0 || q == 0 || e == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut t = [p, q, e];
    t.sort_unstable();
    // 1/p + 1/q + 1/e > 1  <=>  qe + pe + pq > pqe
    let (a, b, c) = (t[0] as u128, t[1] as u128, t[2] as u128);
    if b * c + a * c + a * b <= a * b * c {
        return Ok(TriangleType::Infinite);
    }
    Ok(TriangleType::Finite(match t {
        [1, _, _] => FiniteType::C,
        [2, 2, _] => FiniteType::D,
        [2, 3, 3] => FiniteType::T,
        [2, 3, 4] => FiniteType::O,
        [2, 3, 5] => FiniteType::I,
        _ => unreachable!("platonic triples are exhausted above"),
    }))
}

/// Result of surgery on a torus knot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum SurgeryClass {
    MeridianS3,
    /// `L(p, ·) # L(q, ·)`.
    Reducible { p: u64, q: u64 },
    /// A lens space with `|H₁| = order`.
    Cyclic {
        #[serde(with = "crate::serde_int")]
        order: BigInt,
    },
    FiniteSeifert {
        finite_type: FiniteType,
        p: u64,
        q: u64,
        #[serde(with = "crate::serde_int")]
        e: BigInt,
    },
    InfiniteSeifert {
        p: u64,
        q: u64,
        #[serde(with = "crate::serde_int")]
        e: BigInt,
    },
}

impl SurgeryClass {
    pub fn is_finite_or_cyclic(&self) -> bool {
        matches!(self, SurgeryClass::MeridianS3 | SurgeryClass::Cyclic { .. } | SurgeryClass::FiniteSeifert { .. })
    }

    /// The type of the finite fundamental group, if any.
    pub fn finite_type(&self) -> Option<FiniteType> {
        match self {
            SurgeryClass::MeridianS3 | SurgeryClass::Cyclic { .. } => Some(FiniteType::C),
            SurgeryClass::FiniteSeifert { finite_type, .. } => Some(*finite_type),
            _ => None,
        }
    }
}

impl fmt::Display for SurgeryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurgeryClass::MeridianS3 => f.write_str("S3"),
            SurgeryClass::Reducible { p, q } => write!(f, "L({p},1)#L({q},1)"),
            SurgeryClass::Cyclic { order } => write!(f, "lens space, |H1| = {order}"),
            SurgeryClass::FiniteSeifert { finite_type, p, q, e } => {
                write!(f, "{finite_type}-type Seifert S2({p},{q},{e})")
            }
            SurgeryClass::InfiniteSeifert { p, q, e } => write!(f, "infinite Seifert S2({p},{q},{e})"),
        }
    }
}

/// Fiber slope `pq/1` of the `(p, q)` torus knot exterior.
pub fn torus_fiber_slope(p: u64, q: u64) -> PeripheralClass {
    PeripheralClass::new(BigInt::from(p) * BigInt::from(q), 1)
}

/// Classification of `r`-surgery on the `(p, q)` torus knot, `r = m/n` in
/// meridian-longitude coordinates.
pub fn torus_knot_surgery(p: u64, q: u64, r: &Slope) -> Result<SurgeryClass> {
    if p < 2 || q < 2 || p.gcd(&q) != 1 {
        return Err(Error::NotTorusKnot(p, q));
    }
    let e = r.class().distance(&torus_fiber_slope(p, q));
    if e.is_zero() {
        return Ok(SurgeryClass::Reducible { p, q });
    }
    if e.is_one() {
        if *r == Slope::meridian() {
            return Ok(SurgeryClass::MeridianS3);
        }
        return Ok(SurgeryClass::Cyclic { order: r.p().abs() });
    }
    let kind = match e.to_u64() {
        Some(small) => triangle_type(p, q, small)?,
        None => TriangleType::Infinite,
    };
    Ok(match kind {
        TriangleType::Finite(finite_type) => SurgeryClass::FiniteSeifert { finite_type, p, q, e },
        TriangleType::Infinite => SurgeryClass::InfiniteSeifert { p, q, e },
    })
}

/// A claimed finite filling slope together with the context of its bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FillingClaim {
    pub slope: Slope,
    pub finite_type: FiniteType,
    pub context: BoundContext,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub slope: Slope,
    pub finite_type: FiniteType,
    pub reason: String,
}

/// A claim whose value equals its bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attained {
    pub slope: Slope,
    pub finite_type: FiniteType,
    #[serde(with = "crate::serde_int")]
    pub norm: BigInt,
    /// `Δ` to the kernel slope for indefinite seminorms.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distance: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub violations: Vec<Violation>,
    pub sharp: Vec<Attained>,
    /// Claims whose bound does not apply, with the reason.
    pub skipped: Vec<(Slope, String)>,
}

/// Checks every claim against its norm bound and, for an indefinite seminorm,
/// against its distance bound.
pub fn audit_fillings(sn: &CullerShalenSeminorm, claims: &[FillingClaim]) -> AuditReport {
    let mut report = AuditReport::default();
    let kernel = match sn.classify() {
        Classification::Indefinite { kernel } => Some(kernel),
        _ => None,
    };
    for claim in claims {
        let (nb, db) = match (norm_bound(claim.finite_type, &claim.context), distance_bound(claim.finite_type, &claim.context)) {
            (Ok(nb), Ok(db)) => (nb, db),
            (Err(e), _) | (_, Err(e)) => {
                report.skipped.push((claim.slope.clone(), e.to_string()));
                continue;
            }
        };
        let norm = sn.evaluate(claim.slope.class());
        let mut reasons = Vec::new();
        if !nb.admits(&norm) {
            reasons.push(format!("norm {norm} violates bound {nb}"));
        }
        let mut sharp = norm == *nb.value();
        let mut distance = None;
        if let Some(k) = &kernel {
            let d = claim.slope.distance(k);
            if BigRational::from_integer(d.clone()) > db.exact {
                reasons.push(format!("distance {d} to {k} exceeds {}", db.exact));
            }
            sharp = d == db.floor;
            distance = Some(d.to_string());
        }
        if reasons.is_empty() {
            if sharp {
                report.sharp.push(Attained {
                    slope: claim.slope.clone(),
                    finite_type: claim.finite_type,
                    norm,
                    distance,
                });
            }
        } else {
            report.violations.push(Violation {
                slope: claim.slope.clone(),
                finite_type: claim.finite_type,
                reason: reasons.join("; "),
            });
        }
    }
    report
}

/// One claim per finite or cyclic surgery slope `m/n` on the `(p, q)` torus
/// knot in the grid `|m| ≤ m_max`, `0 ≤ n ≤ n_max`, certified by the absence of
/// boundary slopes among them. Dihedral claims use `n_dihedral` dihedral characters.
pub fn torus_knot_claims(p: u64, q: u64, m_max: i64, n_max: i64, s: i64, n_dihedral: u64) -> Result<Vec<FillingClaim>> {
    let mut claims = Vec::new();
    for r in primitive_grid(m_max, n_max) {
        let class = torus_knot_surgery(p, q, &r)?;
        if let Some(t) = class.finite_type() {
            let mut ctx = BoundContext::new(s, MultiplicityCertificate::NotBoundarySlope);
            if matches!(t, FiniteType::D | FiniteType::Q) {
                ctx = ctx.with_dihedral(n_dihedral);
            }
            claims.push(FillingClaim { slope: r, finite_type: t, context: ctx });
        }
    }
    Ok(claims)
}

/// Distinct slopes `m/n` with `|m| ≤ m_max`, `0 ≤ n ≤ n_max`, in order of `n` then `m`.
pub fn primitive_grid(m_max: i64, n_max: i64) -> Vec<Slope> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        for m in -m_max..=m_max {
            if m.gcd(&n) != 1 || (n == 0 && m != 1) {
                continue;
            }
            out.push(Slope::new(m, n).expect("nonzero"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(s: i64) -> BoundContext {
        BoundContext::new(s, MultiplicityCertificate::NotBoundarySlope)
    }

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn norm_bound_examples() {
        assert_eq!(norm_bound(FiniteType::C, &ctx(2)).unwrap(), NormBound::Exact(2.into()));
        assert_eq!(norm_bound(FiniteType::I, &ctx(1)).unwrap(), NormBound::AtMost(5.into()));
        let c = ctx(3).with_dihedral(10).with_virtually_irreducible(2);
        assert_eq!(norm_bound(FiniteType::D, &c).unwrap(), NormBound::AtMost(6.into()));
        let mut bare = ctx(1);
        bare.certificate = None;
        assert_eq!(norm_bound(FiniteType::C, &bare), Err(Error::HypothesisNotCertified));
        assert!(matches!(norm_bound(FiniteType::C, &ctx(0)), Err(Error::NonPositiveMinimum(_))));
    }

    #[test]
    fn distance_bound_examples() {
        assert_eq!(distance_bound(FiniteType::C, &ctx(7)).unwrap().exact, rat(1, 1));
        assert_eq!(distance_bound(FiniteType::I, &ctx(1)).unwrap().exact, rat(5, 1));
        assert_eq!(distance_bound(FiniteType::O, &ctx(3)).unwrap().exact, rat(2, 1));
        let b = distance_bound(FiniteType::T, &ctx(4)).unwrap();
        assert_eq!(b.exact, rat(3, 2));
        assert_eq!(b.floor, 1.into());
        let c = ctx(1).with_dihedral(5).with_virtually_irreducible(2);
        assert_eq!(distance_bound(FiniteType::Q, &c).unwrap().exact, rat(2, 1));
    }

    #[test]
    fn triangle_types() {
        use TriangleType::*;
        assert_eq!(triangle_type(2, 3, 5).unwrap(), Finite(FiniteType::I));
        assert_eq!(triangle_type(2, 3, 6).unwrap(), Infinite);
        assert_eq!(triangle_type(2, 2, 7).unwrap(), Finite(FiniteType::D));
        assert_eq!(triangle_type(7, 1, 9).unwrap(), Finite(FiniteType::C));
        assert_eq!(triangle_type(3, 2, 3).unwrap(), Finite(FiniteType::T));
        assert_eq!(triangle_type(4, 3, 2).unwrap(), Finite(FiniteType::O));
        assert_eq!(triangle_type(3, 3, 3).unwrap(), Infinite);
        assert_eq!(triangle_type(0, 3, 3), Err(Error::ZeroOrder));
    }

    #[test]
    fn triangle_type_matches_reciprocal_sum() {
        for p in 1..=30u64 {
            for q in 1..=30u64 {
                for e in 1..=30u64 {
                    let sum = rat(1, p as i64) + rat(1, q as i64) + rat(1, e as i64);
                    let infinite = triangle_type(p, q, e).unwrap() == TriangleType::Infinite;
                    assert_eq!(infinite, sum <= rat(1, 1), "({p},{q},{e})");
                }
            }
        }
    }

    #[test]
    fn trefoil_surgeries() {
        let s = |m, n| Slope::new(m, n).unwrap();
        assert_eq!(torus_knot_surgery(3, 2, &s(6, 1)).unwrap(), SurgeryClass::Reducible { p: 3, q: 2 });
        assert_eq!(
            torus_knot_surgery(3, 2, &s(1, 1)).unwrap(),
            SurgeryClass::FiniteSeifert { finite_type: FiniteType::I, p: 3, q: 2, e: 5.into() }
        );
        assert_eq!(torus_knot_surgery(3, 2, &s(1, 0)).unwrap(), SurgeryClass::MeridianS3);
        assert_eq!(torus_knot_surgery(3, 2, &s(5, 1)).unwrap(), SurgeryClass::Cyclic { order: 5.into() });
        assert_eq!(torus_knot_surgery(3, 2, &s(13, 2)).unwrap(), SurgeryClass::Cyclic { order: 13.into() });
        assert_eq!(
            torus_knot_surgery(3, 2, &s(-1, 1)).unwrap(),
            SurgeryClass::InfiniteSeifert { p: 3, q: 2, e: 7.into() }
        );
        assert_eq!(torus_knot_surgery(4, 2, &s(1, 1)), Err(Error::NotTorusKnot(4, 2)));
        assert_eq!(torus_knot_surgery(1, 2, &s(1, 1)), Err(Error::NotTorusKnot(1, 2)));
    }

    #[test]
    fn bounds_monotone() {
        for t in FiniteType::ALL {
            for s in 1..=5 {
                for n in 0..4 {
                    let a = ctx(s).with_dihedral(n);
                    let b = ctx(s).with_dihedral(n + 1);
                    let c = a.clone().with_virtually_irreducible(2);
                    let na = norm_bound(t, &a).unwrap();
                    assert!(na.value() <= norm_bound(t, &b).unwrap().value());
                    assert!(norm_bound(t, &c).unwrap().value() <= na.value());
                    let da = distance_bound(t, &a).unwrap().exact;
                    assert!(da <= distance_bound(t, &b).unwrap().exact);
                    assert!(distance_bound(t, &c).unwrap().exact <= da);
                }
            }
        }
    }

    #[test]
    fn audit_trefoil_band() {
        let sn = CullerShalenSeminorm::from_coefficients(&[(1, -6)]);
        let claims = torus_knot_claims(3, 2, 10, 1, 1, 1).unwrap();
        let report = audit_fillings(&sn, &claims);
        assert!(report.violations.is_empty());
        assert!(report.skipped.is_empty());
        assert!(report.sharp.iter().any(|a| a.finite_type == FiniteType::I && a.distance.as_deref() == Some("5")));

        let bad = FillingClaim { slope: Slope::new(0, 1).unwrap(), finite_type: FiniteType::I, context: ctx(1) };
        let report = audit_fillings(&sn, &[bad]);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(audit_fillings(&sn, &[]), AuditReport::default());
    }

    #[test]
    fn primitive_grid_is_distinct() {
        let g = primitive_grid(3, 2);
        let set: BTreeSet<_> = g.iter().cloned().collect();
        assert_eq!(set.len(), g.len());
        assert!(g.contains(&Slope::meridian()));
        assert!(g.contains(&Slope::longitude()));
    }
}
