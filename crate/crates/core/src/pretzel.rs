//! Twist numbers of Farey edge-path systems and the boundary slopes they
//! give for the pretzel knots `K_m` of type `(−1/3, 1/(2m+1), 5/18)`.
//!
//! A system has one path per tangle. Each step carries an explicit sign;
//! complete edges weigh 1 and a partial edge stopping at `k⟨v⟩ + l⟨u⟩`
//! (travelling from `u` toward `v`) weighs `k/(k+l)`. The twist is
//! `τ = 2 Σ sign · weight` and the boundary slope of a candidate surface `S`
//! is `τ(S) − τ(S₀)` for a Seifert surface `S₀`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A vertex `⟨p/q⟩` of the Farey graph, `⟨1/0⟩` included.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FVertex {
    p: BigInt,
    q: BigInt,
}

impl FVertex {
    /// Reduces and moves the sign to the numerator; `p/0` becomes `1/0`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<FVertex> {
        let (p, q): (BigInt, BigInt) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::Parse("0/0 is not a Farey vertex".into()));
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / &g, q / &g);
        if q.is_negative() || (q.is_zero() && p.is_negative()) {
            p = -p;
            q = -q;
        }
        Ok(FVertex { p, q })
    }

    pub fn infinity() -> FVertex {
        FVertex { p: BigInt::one(), q: BigInt::zero() }
    }

    pub fn is_infinity(&self) -> bool {
        self.q.is_zero()
    }

    pub fn numer(&self) -> &BigInt {
        &self.p
    }

    pub fn denom(&self) -> &BigInt {
        &self.q
    }
}

fn v(p: i64, q: i64) -> FVertex {
    FVertex::new(p, q).expect("nonzero")
}

impl fmt::Display for FVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for FVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<FVertex> {
        let bad = || Error::Parse(format!("bad Farey vertex {s:?}"));
        let (a, b) = s.trim().split_once('/').unwrap_or((s.trim(), "1"));
        let a: BigInt = a.trim().parse().map_err(|_| bad())?;
        let b: BigInt = b.trim().parse().map_err(|_| bad())?;
        FVertex::new(a, b).map_err(|_| bad())
    }
}

impl Serialize for FVertex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FVertex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<FVertex, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// `|p·s − q·r| = 1` for `u = p/q`, `v = r/s`.
pub fn farey_adjacent(u: &FVertex, v: &FVertex) -> bool {
    (&u.p * &v.q - &u.q * &v.p).abs().is_one()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepKind {
    Complete { from: FVertex, to: FVertex },
    /// Stops at `weight_num/weight_den` of the way from `from` to `toward`.
    Partial { from: FVertex, toward: FVertex, weight_num: BigInt, weight_den: BigInt },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "StepSpec", into = "StepSpec")]
pub struct PathStep {
    pub kind: StepKind,
    pub sign: i8,
}

impl PathStep {
    pub fn complete(from: FVertex, to: FVertex, sign: i8) -> PathStep {
        PathStep { kind: StepKind::Complete { from, to }, sign }
    }

    pub fn partial(from: FVertex, toward: FVertex, num: impl Into<BigInt>, den: impl Into<BigInt>, sign: i8) -> PathStep {
        PathStep {
            kind: StepKind::Partial { from, toward, weight_num: num.into(), weight_den: den.into() },
            sign,
        }
    }

    pub fn from_vertex(&self) -> &FVertex {
        match &self.kind {
            StepKind::Complete { from, .. } | StepKind::Partial { from, .. } => from,
        }
    }

    pub fn weight(&self) -> BigRational {
        match &self.kind {
            StepKind::Complete { .. } => BigRational::one(),
            StepKind::Partial { weight_num, weight_den, .. } => BigRational::new(weight_num.clone(), weight_den.clone()),
        }
    }

    /// `sign · weight`.
    pub fn contribution(&self) -> BigRational {
        self.weight() * BigRational::from_integer(self.sign.into())
    }

    fn validate(&self) -> Result<()> {
        if self.sign != 1 && self.sign != -1 {
            return Err(Error::BadSign(self.sign.into()));
        }
        match &self.kind {
            StepKind::Complete { from, to } => {
                if !farey_adjacent(from, to) {
                    return Err(Error::NotAdjacent(from.to_string(), to.to_string()));
                }
            }
            StepKind::Partial { from, toward, weight_num, weight_den } => {
                if !weight_den.is_positive() || weight_num.is_negative() || weight_num > weight_den {
                    return Err(Error::BadWeight(format!("{weight_num}/{weight_den}")));
                }
                // a partial step toward 1/0 runs along a horizontal edge
                if !toward.is_infinity() && !farey_adjacent(from, toward) {
                    return Err(Error::NotAdjacent(from.to_string(), toward.to_string()));
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct StepSpec {
    from: FVertex,
    to: FVertex,
    weight: String,
    sign: i64,
}

impl TryFrom<StepSpec> for PathStep {
    type Error = Error;

    fn try_from(s: StepSpec) -> Result<PathStep> {
        let sign = i8::try_from(s.sign).map_err(|_| Error::BadSign(s.sign))?;
        let step = if s.weight.trim() == "complete" {
            PathStep::complete(s.from, s.to, sign)
        } else {
            let bad = || Error::Parse(format!("bad weight {:?}", s.weight));
            let (a, b) = s.weight.split_once('/').ok_or_else(bad)?;
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            PathStep::partial(s.from, s.to, a, b, sign)
        };
        step.validate()?;
        Ok(step)
    }
}

impl From<PathStep> for StepSpec {
    fn from(p: PathStep) -> StepSpec {
        let sign = p.sign.into();
        match p.kind {
            StepKind::Complete { from, to } => StepSpec { from, to, weight: "complete".into(), sign },
            StepKind::Partial { from, toward, weight_num, weight_den } => {
                StepSpec { from, to: toward, weight: format!("{weight_num}/{weight_den}"), sign }
            }
        }
    }
}

/// One edge path per tangle; an empty path is a constant path.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgePathSystem {
    pub paths: Vec<Vec<PathStep>>,
}

impl EdgePathSystem {
    pub fn new(paths: Vec<Vec<PathStep>>) -> EdgePathSystem {
        EdgePathSystem { paths }
    }

    /// Checks every step, that consecutive steps chain, and that partial
    /// steps only end a path.
    pub fn validate(&self) -> Result<()> {
        for path in &self.paths {
            for (i, step) in path.iter().enumerate() {
                step.validate()?;
                let Some(next) = path.get(i + 1) else { continue };
                match &step.kind {
                    StepKind::Complete { to, .. } if to == next.from_vertex() => {}
                    StepKind::Complete { to, .. } => {
                        return Err(Error::BrokenPath(format!("step ends at {to} but next starts at {}", next.from_vertex())));
                    }
                    StepKind::Partial { .. } => {
                        return Err(Error::BrokenPath("a partial step must end its path".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// Path-wise totals `Σ sign · weight`.
    pub fn path_totals(&self) -> Vec<BigRational> {
        self.paths.iter().map(|p| p.iter().map(PathStep::contribution).sum()).collect()
    }

    /// Concatenates the tangles of two systems.
    pub fn join(&self, other: &EdgePathSystem) -> EdgePathSystem {
        EdgePathSystem { paths: self.paths.iter().chain(&other.paths).cloned().collect() }
    }
}

/// `τ = 2 Σ sign · weight` over every step of every path.
pub fn tau(sys: &EdgePathSystem) -> Result<BigRational> {
    sys.validate()?;
    let total: BigRational = sys.path_totals().into_iter().sum();
    Ok(total * BigRational::from_integer(2.into()))
}

/// `τ(candidate) − τ(seifert_ref)`.
pub fn boundary_slope(candidate: &EdgePathSystem, seifert_ref: &EdgePathSystem) -> Result<BigRational> {
    Ok(tau(candidate)? - tau(seifert_ref)?)
}

/// The candidate-surface system of `K_m`: constant `γ₁`,
/// `γ₂ = ⟨1/(2m+1)⟩ → (m−7)⟨1/0⟩ + ⟨1/(2m+1)⟩`,
/// `γ₃ = ⟨5/18⟩ → ⟨2/7⟩ → (m−9)⟨1/3⟩ + 3⟨2/7⟩`. Needs `m ≥ 9`.
pub fn km_candidate(m: i64) -> Result<EdgePathSystem> {
    if m < 9 {
        return Err(Error::TemplateParameter { m: m.to_string(), min: 9 });
    }
    let gamma2 = vec![PathStep::partial(v(1, 2 * m + 1), FVertex::infinity(), m - 7, m - 6, 1)];
    let gamma3 = vec![
        PathStep::complete(v(5, 18), v(2, 7), -1),
        PathStep::partial(v(2, 7), v(1, 3), m - 9, m - 6, -1),
    ];
    Ok(EdgePathSystem::new(vec![vec![], gamma2, gamma3]))
}

/// The Seifert-surface system of `K_m`:
/// `⟨−1/3⟩ → ⟨−1/2⟩ → ⟨−1⟩ → ⟨1/0⟩`,
/// `⟨1/(2m+1)⟩ → ⟨1/2m⟩ → … → ⟨1⟩ → ⟨1/0⟩` and
/// `⟨5/18⟩ → ⟨2/7⟩ → ⟨1/4⟩ → ⟨0⟩ → ⟨1/0⟩`. Needs `m ≥ 1`.
pub fn km_seifert(m: i64) -> Result<EdgePathSystem> {
    if m < 1 {
        return Err(Error::TemplateParameter { m: m.to_string(), min: 1 });
    }
    let inf = FVertex::infinity;
    let first = vec![
        PathStep::complete(v(-1, 3), v(-1, 2), 1),
        PathStep::complete(v(-1, 2), v(-1, 1), 1),
        PathStep::complete(v(-1, 1), inf(), -1),
    ];
    let mut second: Vec<PathStep> = (1..=2 * m).rev().map(|d| PathStep::complete(v(1, d + 1), v(1, d), -1)).collect();
    second.push(PathStep::complete(v(1, 1), inf(), -1));
    let third = vec![
        PathStep::complete(v(5, 18), v(2, 7), -1),
        PathStep::complete(v(2, 7), v(1, 4), 1),
        PathStep::complete(v(1, 4), v(0, 1), 1),
        PathStep::complete(v(0, 1), inf(), -1),
    ];
    Ok(EdgePathSystem::new(vec![first, second, third]))
}

/// The knot `K_{4n+6}` with its non-integral boundary slope and the order of
/// `H₁` of surgery along it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PretzelFamily {
    pub n: i64,
    pub m: i64,
    /// `(16n² + 22n + 1)/n`.
    #[serde(with = "crate::serde_int::rational")]
    pub slope: BigRational,
    #[serde(with = "crate::serde_int")]
    pub h1_order: BigInt,
    /// The slope recomputed from the edge-path templates, when they apply (`m ≥ 9`).
    #[serde(default, with = "opt_rational", skip_serializing_if = "Option::is_none")]
    pub edge_path_slope: Option<BigRational>,
}

mod opt_rational {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match v {
            Some(r) => s.collect_str(r),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<BigRational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| crate::lattice::parse_rational(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

pub fn pretzel_family(n: i64) -> Result<PretzelFamily> {
    if n.abs() < 3 {
        return Err(Error::FamilyParameter(n.to_string()));
    }
    let m = 4 * n + 6;
    let nb = BigInt::from(n);
    let h1_order: BigInt = &nb * &nb * 16 + &nb * 22 + 1;
    let slope = BigRational::new(h1_order.clone(), nb);
    let edge_path_slope = if m >= 9 {
        let r = boundary_slope(&km_candidate(m)?, &km_seifert(m)?)?;
        assert_eq!(r, slope, "edge-path slope disagrees with the closed form at n = {n}");
        Some(r)
    } else {
        None
    };
    Ok(PretzelFamily { n, m, slope, h1_order, edge_path_slope })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn adjacency() {
        assert!(farey_adjacent(&v(5, 18), &v(2, 7)));
        assert!(farey_adjacent(&v(2, 7), &v(1, 3)));
        assert!(!farey_adjacent(&v(1, 2), &v(1, 4)));
        assert!(farey_adjacent(&v(3, 1), &FVertex::infinity()));
        assert!(!farey_adjacent(&v(1, 21), &FVertex::infinity()));
    }

    #[test]
    fn vertex_parsing() {
        assert_eq!("1/0".parse::<FVertex>().unwrap(), FVertex::infinity());
        assert_eq!("-1/0".parse::<FVertex>().unwrap(), FVertex::infinity());
        assert_eq!("2/-4".parse::<FVertex>().unwrap(), v(-1, 2));
        assert_eq!("0".parse::<FVertex>().unwrap().to_string(), "0/1");
        assert!("0/0".parse::<FVertex>().is_err());
    }

    #[test]
    fn tau_at_m_10() {
        assert_eq!(tau(&km_candidate(10).unwrap()).unwrap(), rat(-1, 1));
        assert_eq!(tau(&km_seifert(10).unwrap()).unwrap(), rat(-40, 1));
        assert_eq!(tau(&EdgePathSystem::default()).unwrap(), rat(0, 1));
        assert_eq!(km_seifert(10).unwrap().path_totals(), vec![rat(1, 1), rat(-21, 1), rat(0, 1)]);
    }

    #[test]
    fn slopes() {
        let c = km_candidate(10).unwrap();
        assert_eq!(boundary_slope(&c, &km_seifert(10).unwrap()).unwrap(), rat(39, 1));
        assert_eq!(boundary_slope(&km_candidate(18).unwrap(), &km_seifert(18).unwrap()).unwrap(), rat(211, 3));
        assert_eq!(boundary_slope(&c, &c).unwrap(), rat(0, 1));
    }

    #[test]
    fn family() {
        let f = pretzel_family(3).unwrap();
        assert_eq!((f.m, f.slope.clone(), f.h1_order.clone()), (18, rat(211, 3), 211.into()));
        assert_eq!(f.edge_path_slope, Some(rat(211, 3)));
        let f = pretzel_family(4).unwrap();
        assert_eq!((f.m, f.slope, f.h1_order), (22, rat(345, 4), 345.into()));
        assert_eq!(pretzel_family(2), Err(Error::FamilyParameter("2".into())));
        let f = pretzel_family(-3).unwrap();
        assert_eq!(f.m, -6);
        assert_eq!(f.slope, rat(79, -3));
        assert_eq!(f.edge_path_slope, None);
    }

    #[test]
    fn validation_errors() {
        let sys = EdgePathSystem::new(vec![vec![PathStep::complete(v(1, 2), v(1, 4), 1)]]);
        assert_eq!(tau(&sys), Err(Error::NotAdjacent("1/2".into(), "1/4".into())));
        let sys = EdgePathSystem::new(vec![vec![PathStep::partial(v(2, 7), v(1, 3), 5, 4, 1)]]);
        assert_eq!(tau(&sys), Err(Error::BadWeight("5/4".into())));
        let sys = EdgePathSystem::new(vec![vec![PathStep::complete(v(0, 1), v(1, 1), 2)]]);
        assert_eq!(tau(&sys), Err(Error::BadSign(2)));
        let sys = EdgePathSystem::new(vec![vec![
            PathStep::complete(v(0, 1), v(1, 1), 1),
            PathStep::complete(v(1, 2), v(1, 3), 1),
        ]]);
        assert!(matches!(tau(&sys), Err(Error::BrokenPath(_))));
        let sys = EdgePathSystem::new(vec![vec![
            PathStep::partial(v(0, 1), v(1, 1), 1, 2, 1),
            PathStep::complete(v(1, 1), v(1, 2), 1),
        ]]);
        assert!(matches!(tau(&sys), Err(Error::BrokenPath(_))));
        assert!(km_candidate(8).is_err());
        assert!(km_seifert(0).is_err());
    }

    #[test]
    fn json_schema() {
        let text = r#"{"paths": [[], [{"from": "5/18", "to": "2/7", "weight": "complete", "sign": -1},
                                     {"from": "2/7", "to": "1/3", "weight": "1/4", "sign": -1}]]}"#;
        let sys: EdgePathSystem = serde_json::from_str(text).unwrap();
        assert_eq!(tau(&sys).unwrap(), rat(-5, 2));
        let back: EdgePathSystem = serde_json::from_str(&serde_json::to_string(&sys).unwrap()).unwrap();
        assert_eq!(back, sys);
        let bad = r#"{"paths": [[{"from": "1/2", "to": "1/4", "weight": "complete", "sign": 1}]]}"#;
        assert!(serde_json::from_str::<EdgePathSystem>(bad).is_err());
    }

    #[test]
    fn tau_additive() {
        let a = km_candidate(12).unwrap();
        let b = km_seifert(5).unwrap();
        assert_eq!(tau(&a.join(&b)).unwrap(), tau(&a).unwrap() + tau(&b).unwrap());
        // splitting a path into two tangles does not change the total
        let first = b.paths[1].clone();
        let (x, y) = first.split_at(3);
        let split = EdgePathSystem::new(vec![x.to_vec(), y.to_vec()]);
        assert_eq!(tau(&split).unwrap(), tau(&EdgePathSystem::new(vec![first])).unwrap());
    }

    #[test]
    fn template_edges_are_farey_edges() {
        for m in 9..200 {
            for sys in [km_candidate(m).unwrap(), km_seifert(m).unwrap()] {
                sys.validate().unwrap();
            }
        }
    }
}
