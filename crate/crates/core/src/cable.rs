//! Fillings of cable spaces.
//!
//! A cable space `C` of type `(m, n)`, `n ≥ 2`, has boundary tori `T₊`, `T₋`
//! with bases `{μ±, λ±}` chosen so that the Seifert fiber is
//! `α(φ₊) = mn·μ₊ + λ₊` and `α(φ₋) = m·μ₋ + n·λ₋`. Filling `T₊` along
//! `(kmn + 1)μ₊ + kλ₊` gives a solid torus whose meridian is
//! `(kmn + 1)μ₋ + kn²λ₋` on `T₋`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::lattice::{PeripheralClass, Slope};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CableSpace {
    #[serde(with = "crate::serde_int")]
    m: BigInt,
    #[serde(with = "crate::serde_int")]
    n: BigInt,
}

impl CableSpace {
    pub fn new(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<CableSpace> {
        let (m, n) = (m.into(), n.into());
        if n < BigInt::from(2) {
            return Err(Error::InvalidCable(n.to_string()));
        }
        Ok(CableSpace { m, n })
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn phi_plus(&self) -> PeripheralClass {
        PeripheralClass::new(&self.m * &self.n, 1)
    }

    pub fn phi_minus(&self) -> PeripheralClass {
        PeripheralClass::new(self.m.clone(), self.n.clone())
    }

    /// The class `(kmn + 1, k)` on `T₊` and the meridian `(kmn + 1, kn²)` of
    /// the resulting solid torus on `T₋`.
    pub fn fill_plus(&self, k: &BigInt) -> (PeripheralClass, PeripheralClass) {
        let top: BigInt = k * &self.m * &self.n + 1;
        let input = PeripheralClass::new(top.clone(), k.clone());
        let output = PeripheralClass::new(top, k * &self.n * &self.n);
        (input, output)
    }

    /// The `k` with `r = ±((kmn + 1)μ₊ + kλ₊)`; fails unless `Δ(r, φ₊) = 1`.
    pub fn k_of(&self, r: &Slope) -> Result<BigInt> {
        let c = r.class();
        let d = &c.p - &c.q * &self.m * &self.n;
        if d.is_one() {
            Ok(c.q.clone())
        } else if (-&d).is_one() {
            Ok(-&c.q)
        } else {
            Err(Error::NotUnitDistance(r.to_string()))
        }
    }

    /// `Δ(r₁, r₂)` on `T₊` and the distance of the filled meridians on `T₋`;
    /// the second is always `n²` times the first.
    pub fn distance_scaling(&self, r1: &Slope, r2: &Slope) -> Result<(BigInt, BigInt)> {
        let (k1, k2) = (self.k_of(r1)?, self.k_of(r2)?);
        let (_, out1) = self.fill_plus(&k1);
        let (_, out2) = self.fill_plus(&k2);
        let inner = r1.distance(r2);
        let outer = out1.distance(&out2);
        debug_assert_eq!(outer, &inner * &self.n * &self.n);
        Ok((inner, outer))
    }
}

/// Cable of type `(m, n)` glued to a Seifert space `M₁` with base `D²(2,3,5)`
/// so that `μ₋ ↦ β` and `λ₋ ↦ α(φ₁)`. Coordinates on `∂M₁` are in the basis
/// `{β, α(φ₁)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CableToroidal {
    #[serde(with = "crate::serde_int")]
    pub k: BigInt,
    pub r1: PeripheralClass,
    pub r2: PeripheralClass,
    /// Image of `r₁` on `∂M₁`.
    pub r1_image: PeripheralClass,
    pub r2_image: PeripheralClass,
    /// `Δ(r₁, r₂) = |k|`.
    #[serde(with = "crate::serde_int")]
    pub distance: BigInt,
    /// `Δ(r'₁, φ₁) = |kmn + 1|`.
    #[serde(with = "crate::serde_int")]
    pub r1_fiber_distance: BigInt,
    #[serde(with = "crate::serde_int")]
    pub r2_fiber_distance: BigInt,
    /// `M(r₁)` contains an essential vertical torus (`|kmn + 1| > 1`).
    pub r1_vertical_torus: bool,
    /// `M(r₂)` is a finite filling (`Δ(r'₂, φ₁) = 1`).
    pub r2_finite: bool,
}

pub fn cable_toroidal(k: impl Into<BigInt>, m: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<CableToroidal> {
    let k = k.into();
    let cs = CableSpace::new(m, n)?;
    let (r1, r1_image) = cs.fill_plus(&k);
    let (r2, r2_image) = cs.fill_plus(&BigInt::from(0));
    let phi1 = PeripheralClass::longitude();
    let r1_fiber_distance = r1_image.distance(&phi1);
    let r2_fiber_distance = r2_image.distance(&phi1);
    Ok(CableToroidal {
        distance: r1.distance(&r2),
        r1_vertical_torus: r1_fiber_distance > BigInt::one(),
        r2_finite: r2_fiber_distance.is_one(),
        k,
        r1,
        r2,
        r1_image,
        r2_image,
        r1_fiber_distance,
        r2_fiber_distance,
    })
}

/// The `(1, 2)` cable glued to the twisted I-bundle over the Klein bottle with
/// `μ₋ ↦ (2k+1)β − 2α(φ₁)` and `λ₋ ↦ −kβ + α(φ₁)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CableKlein {
    #[serde(with = "crate::serde_int")]
    pub k: BigInt,
    /// `α(r₁) = 4kμ₊ + (2k+1)λ₊`.
    pub r1: PeripheralClass,
    /// `α(r₂) = μ₊`.
    pub r2: PeripheralClass,
    /// `Δ(r₁, r₂) = |2k + 1|`.
    #[serde(with = "crate::serde_int")]
    pub distance: BigInt,
    /// `Δ(r₁, φ₊) = 2`.
    #[serde(with = "crate::serde_int")]
    pub r1_fiber_distance: BigInt,
    /// Image of the other fiber slope `kμ₋ + (2k+1)λ₋`; always `α(φ₁)`.
    pub other_fiber_image: PeripheralClass,
    /// Image of the meridian `μ₋` of `C(∂M; r₂)` on `∂M₁`.
    pub r2_meridian_image: PeripheralClass,
    /// `Δ` of that meridian from `φ₁`.
    #[serde(with = "crate::serde_int")]
    pub r2_fiber_distance: BigInt,
    /// `|2k + 1| ≥ 2`, so `M(r₂)` has finite fundamental group.
    pub r2_finite: bool,
}

pub fn cable_klein(k: impl Into<BigInt>) -> CableKlein {
    let k: BigInt = k.into();
    let cs = CableSpace::new(1, 2).expect("n = 2");
    let two_k_1: BigInt = &k * 2 + 1;
    let glue = [[two_k_1.clone(), -&k], [BigInt::from(-2), BigInt::one()]];
    let r1 = PeripheralClass::new(&k * 4, two_k_1.clone());
    let r2 = PeripheralClass::meridian();
    let other_fiber_image = PeripheralClass::new(k.clone(), two_k_1.clone()).transform(&glue);
    let r2_meridian_image = PeripheralClass::meridian().transform(&glue);
    let r2_fiber_distance = r2_meridian_image.distance(&PeripheralClass::longitude());
    CableKlein {
        distance: r1.distance(&r2),
        r1_fiber_distance: r1.distance(&cs.phi_plus()),
        r2_finite: r2_fiber_distance >= BigInt::from(2),
        k,
        r1,
        r2,
        other_fiber_image,
        r2_meridian_image,
        r2_fiber_distance,
    }
}

/// Triples `(n, Δ, Δφ)` with `n ≥ 2`, `Δ ≥ 1`, `Δφ ≥ 1` and `n·Δ·Δφ ∈ {1, 3}`.
/// Each factor is at most 3, so the search is finite.
pub fn unit_triples() -> BTreeSet<(u64, u64, u64)> {
    let mut out = BTreeSet::new();
    for n in 2..=3u64 {
        for d in 1..=3u64 {
            for dphi in 1..=3u64 {
                if matches!(n * d * dphi, 1 | 3) {
                    out.insert((n, d, dphi));
                }
            }
        }
    }
    out
}
