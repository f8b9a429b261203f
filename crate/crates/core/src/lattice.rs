//! The peripheral lattice `L = H_1(∂M) ≅ Z²`.
//!
//! A [`PeripheralClass`] is an integer vector `p·γ₁ + q·γ₂` in a fixed basis.
//! A [`Slope`] is a primitive class taken up to sign. For knot exteriors in
//! S³ the basis is meridian `(1, 0)` and longitude `(0, 1)`, so the fraction
//! `m/n` names the class `m·μ + n·λ`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// An integer vector in the peripheral lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PeripheralClass {
    #[serde(with = "crate::serde_int")]
    pub p: BigInt,
    #[serde(with = "crate::serde_int")]
    pub q: BigInt,
}

impl PeripheralClass {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        PeripheralClass { p: p.into(), q: q.into() }
    }

    pub fn meridian() -> Self {
        PeripheralClass::new(1, 0)
    }

    pub fn longitude() -> Self {
        PeripheralClass::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// Signed intersection pairing `p₁q₂ − p₂q₁`.
    pub fn det(&self, other: &PeripheralClass) -> BigInt {
        &self.p * &other.q - &other.p * &self.q
    }

    /// `Δ(a, b) = |p₁q₂ − p₂q₁|`.
    pub fn distance(&self, other: &PeripheralClass) -> BigInt {
        self.det(other).abs()
    }

    pub fn is_primitive(&self) -> bool {
        self.p.gcd(&self.q).is_one()
    }

    pub fn scale(&self, k: &BigInt) -> PeripheralClass {
        PeripheralClass { p: &self.p * k, q: &self.q * k }
    }

    pub fn neg(&self) -> PeripheralClass {
        PeripheralClass { p: -&self.p, q: -&self.q }
    }

    pub fn add(&self, other: &PeripheralClass) -> PeripheralClass {
        PeripheralClass { p: &self.p + &other.p, q: &self.q + &other.q }
    }

    pub fn sub(&self, other: &PeripheralClass) -> PeripheralClass {
        PeripheralClass { p: &self.p - &other.p, q: &self.q - &other.q }
    }

    /// Image under the integer matrix `[[a, b], [c, d]]` acting on columns.
    pub fn transform(&self, m: &[[BigInt; 2]; 2]) -> PeripheralClass {
        PeripheralClass {
            p: &m[0][0] * &self.p + &m[0][1] * &self.q,
            q: &m[1][0] * &self.p + &m[1][1] * &self.q,
        }
    }
}

impl From<(i64, i64)> for PeripheralClass {
    fn from((p, q): (i64, i64)) -> Self {
        PeripheralClass::new(p, q)
    }
}

impl fmt::Display for PeripheralClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// `Δ(a, b)` as a free function.
pub fn distance(a: &PeripheralClass, b: &PeripheralClass) -> BigInt {
    a.distance(b)
}

pub fn is_primitive(a: &PeripheralClass) -> bool {
    a.is_primitive()
}

/// A primitive class up to sign, stored in canonical form: `p > 0`, or
/// `(p, q) = (0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    rep: PeripheralClass,
}

impl Slope {
    /// The slope of the fraction `m/n`, reduced and sign-normalised.
    pub fn new(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<Slope> {
        Slope::from_class(&PeripheralClass::new(m, n))
    }

    /// The slope spanned by a nonzero class; non-primitive classes are divided
    /// by their content.
    pub fn from_class(a: &PeripheralClass) -> Result<Slope> {
        if a.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g = a.p.gcd(&a.q);
        let (mut p, mut q) = (&a.p / &g, &a.q / &g);
        if p.is_negative() || (p.is_zero() && q.is_negative()) {
            p = -p;
            q = -q;
        }
        Ok(Slope { rep: PeripheralClass { p, q } })
    }

    pub fn meridian() -> Slope {
        Slope { rep: PeripheralClass::meridian() }
    }

    pub fn longitude() -> Slope {
        Slope { rep: PeripheralClass::longitude() }
    }

    pub fn class(&self) -> &PeripheralClass {
        &self.rep
    }

    pub fn p(&self) -> &BigInt {
        &self.rep.p
    }

    pub fn q(&self) -> &BigInt {
        &self.rep.q
    }

    pub fn distance(&self, other: &Slope) -> BigInt {
        self.rep.distance(&other.rep)
    }

    /// The slope as an element of `Q ∪ {1/0}`; `None` for `1/0`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.rep.q.is_zero() {
            None
        } else {
            Some(BigRational::new(self.rep.p.clone(), self.rep.q.clone()))
        }
    }
}

/// Canonical slope of `m/n`.
pub fn slope_of(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<Slope> {
    Slope::new(m, n)
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.rep.p, self.rep.q)
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Accepts `"m/n"` or a bare integer `"m"` (meaning `m/1`).
    fn from_str(s: &str) -> Result<Slope> {
        let s = s.trim();
        let (m, n) = match s.split_once('/') {
            Some((m, n)) => (m.trim(), n.trim()),
            None => (s, "1"),
        };
        let m: BigInt = m.parse().map_err(|_| Error::Parse(format!("bad slope numerator in {s:?}")))?;
        let n: BigInt = n.parse().map_err(|_| Error::Parse(format!("bad slope denominator in {s:?}")))?;
        Slope::new(m, n)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Slope, D::Error> {
        struct SlopeVisitor;
        impl<'de> Visitor<'de> for SlopeVisitor {
            type Value = Slope;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a slope string \"m/n\" or a pair [m, n]")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Slope, E> {
                v.parse().map_err(E::custom)
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Slope, A::Error> {
                let m = seq
                    .next_element_seed(IntSeed)?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let n = seq
                    .next_element_seed(IntSeed)?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<de::IgnoredAny>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                Slope::new(m, n).map_err(de::Error::custom)
            }
        }
        d.deserialize_any(SlopeVisitor)
    }
}

struct IntSeed;

impl<'de> de::DeserializeSeed<'de> for IntSeed {
    type Value = BigInt;
    fn deserialize<D: Deserializer<'de>>(self, d: D) -> std::result::Result<BigInt, D::Error> {
        crate::serde_int::deserialize(d)
    }
}

/// Order of `H_1` of a filling of a knot exterior in S³.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum H1Order {
    Finite(#[serde(with = "crate::serde_int")] BigInt),
    Infinite,
}

impl fmt::Display for H1Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H1Order::Finite(n) => write!(f, "{n}"),
            H1Order::Infinite => f.write_str("infinite"),
        }
    }
}

/// `|H_1(M(m/n))| = |m|` for a knot in S³, infinite for the longitude.
pub fn h1_filling_order(r: &Slope) -> H1Order {
    if r.p().is_zero() {
        H1Order::Infinite
    } else {
        H1Order::Finite(r.p().abs())
    }
}

/// Extended gcd on the coordinates: returns `(x, y)` with `x·p + y·q = gcd`.
pub(crate) fn bezout(p: &BigInt, q: &BigInt) -> (BigInt, BigInt) {
    let e = p.extended_gcd(q);
    if e.gcd.is_negative() {
        (-e.x, -e.y)
    } else {
        (e.x, e.y)
    }
}

/// Parse `"a/b"` or `"a"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pc(p: i64, q: i64) -> PeripheralClass {
        PeripheralClass::new(p, q)
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance(&pc(1, 0), &pc(0, 1)), 1.into());
        assert_eq!(distance(&pc(6, 1), &pc(1, 0)), 1.into());
        // slope 1 sits at the extreme distance 5 from the trefoil fiber slope 6
        assert_eq!(distance(&pc(1, 1), &pc(6, 1)), 5.into());
    }

    #[test]
    fn slope_canonical_form() {
        assert_eq!(slope_of(6, 1).unwrap().class(), &pc(6, 1));
        assert_eq!(slope_of(-6, -1).unwrap().class(), &pc(6, 1));
        assert_eq!(slope_of(4, 2).unwrap().class(), &pc(2, 1));
        assert_eq!(slope_of(0, -3).unwrap(), Slope::longitude());
        assert_eq!(slope_of(-5, 0).unwrap(), Slope::meridian());
        assert_eq!(slope_of(0, 0), Err(Error::ZeroVector));
    }

    #[test]
    fn primitivity() {
        assert!(pc(3, 5).is_primitive());
        assert!(!pc(2, 4).is_primitive());
        assert!(pc(0, 1).is_primitive());
        assert!(!pc(0, 0).is_primitive());
    }

    #[test]
    fn filling_orders() {
        assert_eq!(h1_filling_order(&slope_of(211, 3).unwrap()), H1Order::Finite(211.into()));
        assert_eq!(h1_filling_order(&Slope::longitude()), H1Order::Infinite);
        assert_eq!(h1_filling_order(&Slope::meridian()), H1Order::Finite(1.into()));
    }

    #[test]
    fn slope_text_and_json() {
        let s: Slope = "6/1".parse().unwrap();
        assert_eq!(s.to_string(), "6/1");
        assert_eq!("1/0".parse::<Slope>().unwrap(), Slope::meridian());
        assert_eq!("-7".parse::<Slope>().unwrap().to_string(), "7/-1");
        assert!(matches!("x/2".parse::<Slope>(), Err(Error::Parse(_))));
        assert_eq!(serde_json::to_string(&s).unwrap(), "\"6/1\"");
        let from_pair: Slope = serde_json::from_str("[-12, -2]").unwrap();
        assert_eq!(from_pair, s);
        let from_str: Slope = serde_json::from_str("\"12/2\"").unwrap();
        assert_eq!(from_str, s);
        assert!(serde_json::from_str::<Slope>("[0, 0]").is_err());
    }

    #[test]
    fn large_values_stay_exact() {
        let big: BigInt = BigInt::from(i64::MAX) * 4;
        let a = PeripheralClass::new(big.clone(), 1);
        let b = PeripheralClass::new(1, big.clone());
        assert_eq!(a.distance(&b), &big * &big - 1);
    }

    fn arb_class() -> impl Strategy<Value = PeripheralClass> {
        (-1000i64..1000, -1000i64..1000).prop_map(|(p, q)| pc(p, q))
    }

    proptest! {
        #[test]
        fn distance_symmetric_and_homogeneous(a in arb_class(), b in arb_class(), k in -50i64..50) {
            prop_assert_eq!(a.distance(&b), b.distance(&a));
            let k = BigInt::from(k);
            prop_assert_eq!(a.scale(&k).distance(&b), k.abs() * a.distance(&b));
        }

        #[test]
        fn distance_zero_iff_parallel(a in arb_class(), b in arb_class()) {
            // rank of the 2x2 matrix with rows a, b is < 2 iff the determinant vanishes;
            // check against an independent parallelism test
            let parallel = a.is_zero() || b.is_zero() || {
                let sa = Slope::from_class(&a).unwrap();
                let sb = Slope::from_class(&b).unwrap();
                sa == sb
            };
            prop_assert_eq!(a.distance(&b).is_zero(), parallel);
        }

        #[test]
        fn slope_of_idempotent(a in arb_class()) {
            prop_assume!(!a.is_zero());
            let s = Slope::from_class(&a).unwrap();
            prop_assert!(s.class().is_primitive());
            prop_assert_eq!(Slope::from_class(s.class()).unwrap(), s.clone());
            prop_assert_eq!(Slope::from_class(&a.neg()).unwrap(), s);
        }

        #[test]
        fn unimodular_invariance(a in arb_class(), b in arb_class(),
                                 x in -20i64..20, y in -20i64..20, sign in prop::bool::ANY) {
            // U = [[1, x], [0, 1]] · [[1, 0], [y, 1]], optionally composed with a reflection
            let shear1 = [[1.into(), x.into()], [0.into(), 1.into()]];
            let shear2 = [[1.into(), 0.into()], [y.into(), 1.into()]];
            let mut ua = a.transform(&shear2).transform(&shear1);
            let mut ub = b.transform(&shear2).transform(&shear1);
            if sign {
                let refl = [[0.into(), 1.into()], [1.into(), 0.into()]];
                ua = ua.transform(&refl);
                ub = ub.transform(&refl);
            }
            prop_assert_eq!(ua.distance(&ub), a.distance(&b));
        }
    }
}
