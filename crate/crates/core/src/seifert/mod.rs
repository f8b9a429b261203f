//! 2-orbifolds and closed Seifert fibered spaces.
//!
//! A closed Seifert fibered space over a closed surface `F` with exceptional
//! fibers `(α_j, β_j)` and framing integer `γ` has fundamental group
//!
//! ```text
//! orientable F:     ⟨a_i, b_i, x_j, h | h central, x_j^{α_j} h^{β_j},
//!                                       h^{-γ} [a_1,b_1]…[a_g,b_g] x_1…x_q⟩
//! nonorientable F:  ⟨a_i, x_j, h | a_i h a_i⁻¹ h, x_j h x_j⁻¹ h⁻¹, x_j^{α_j} h^{β_j},
//!                                  h^{-γ} a_1²…a_g² x_1…x_q⟩
//! ```
//!
//! With these signs the data `S²`, `(2,1), (3,1), (5,1)`, `γ = −1` is the
//! Poincaré homology sphere.

mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::word::Word;
use crate::{Error, Result};

pub use snf::{invariant_factors, AbelianGroup};

/// Underlying surface of a 2-orbifold, before removing boundary disks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Surface {
    Orientable { genus: u32 },
    /// Connected sum of `crosscaps ≥ 1` projective planes.
    Nonorientable { crosscaps: u32 },
}

impl Surface {
    pub fn is_orientable(&self) -> bool {
        matches!(self, Surface::Orientable { .. })
    }

    pub fn genus(&self) -> u32 {
        match *self {
            Surface::Orientable { genus } => genus,
            Surface::Nonorientable { crosscaps } => crosscaps,
        }
    }

    /// Euler characteristic of the closed surface.
    pub fn euler_characteristic(&self) -> i64 {
        match *self {
            Surface::Orientable { genus } => 2 - 2 * genus as i64,
            Surface::Nonorientable { crosscaps } => 2 - crosscaps as i64,
        }
    }

    fn name(&self) -> String {
        match *self {
            Surface::Orientable { genus: 0 } => "S2".into(),
            Surface::Orientable { genus: 1 } => "T2".into(),
            Surface::Orientable { genus } => format!("F{genus}"),
            Surface::Nonorientable { crosscaps: 1 } => "RP2".into(),
            Surface::Nonorientable { crosscaps: 2 } => "K".into(),
            Surface::Nonorientable { crosscaps } => format!("N{crosscaps}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Orbifold2 {
    pub base: Surface,
    #[serde(default)]
    pub boundary_circles: u32,
    #[serde(default)]
    pub cone_orders: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Geometry {
    Hyperbolic,
    Parabolic,
    Spherical,
}

impl Orbifold2 {
    pub fn new(base: Surface, boundary_circles: u32, mut cone_orders: Vec<u64>) -> Result<Orbifold2> {
        if let Some(bad) = cone_orders.iter().find(|&&a| a < 2) {
            return Err(Error::InvalidOrbifold(format!("cone order {bad} < 2")));
        }
        if base == (Surface::Nonorientable { crosscaps: 0 }) {
            return Err(Error::InvalidOrbifold("nonorientable surface needs at least one crosscap".into()));
        }
        cone_orders.sort_unstable();
        Ok(Orbifold2 { base, boundary_circles, cone_orders })
    }

    pub fn closed(base: Surface, cone_orders: Vec<u64>) -> Result<Orbifold2> {
        Orbifold2::new(base, 0, cone_orders)
    }

    /// `S²(α₁, …, α_q)`.
    pub fn sphere(cone_orders: &[u64]) -> Result<Orbifold2> {
        Orbifold2::closed(Surface::Orientable { genus: 0 }, cone_orders.to_vec())
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_circles == 0
    }

    /// A 2-sphere with exactly three cone points.
    pub fn is_triangle(&self) -> bool {
        self.is_closed() && self.base == Surface::Orientable { genus: 0 } && self.cone_orders.len() == 3
    }

    /// `χ(F) − Σ (1 − 1/α_i)` where `F` is the underlying surface with its
    /// boundary circles.
    pub fn chi_orb(&self) -> BigRational {
        let chi_f = self.base.euler_characteristic() - self.boundary_circles as i64;
        let one = BigRational::one();
        self.cone_orders.iter().fold(BigRational::from_integer(chi_f.into()), |acc, &a| {
            acc - (&one - BigRational::new(BigInt::one(), a.into()))
        })
    }

    pub fn classify(&self) -> Geometry {
        let chi = self.chi_orb();
        if chi.is_negative() {
            Geometry::Hyperbolic
        } else if chi.is_zero() {
            Geometry::Parabolic
        } else {
            Geometry::Spherical
        }
    }

    /// Membership in the list of closed parabolic orbifolds: the torus and
    /// Klein bottle, `S²(2,2,2,2)`, `S²(2,3,6)`, `S²(2,4,4)`, `S²(3,3,3)` and `RP²(2,2)`.
    pub fn is_listed_parabolic(&self) -> bool {
        if !self.is_closed() {
            return false;
        }
        let c = self.cone_orders.as_slice();
        match self.base {
            Surface::Orientable { genus: 1 } | Surface::Nonorientable { crosscaps: 2 } => c.is_empty(),
            Surface::Orientable { genus: 0 } => matches!(c, [2, 2, 2, 2] | [2, 3, 6] | [2, 4, 4] | [3, 3, 3]),
            Surface::Nonorientable { crosscaps: 1 } => c == [2, 2],
            _ => false,
        }
    }

    /// Dimension of the Teichmüller space, `−3χ(F) + 2q`.
    pub fn teichmuller_dim(&self) -> Result<i64> {
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        if self.classify() != Geometry::Hyperbolic {
            return Err(Error::NotHyperbolic);
        }
        let q = self.cone_orders.len() as i64;
        Ok(-3 * self.base.euler_characteristic() + 2 * q)
    }
}

impl fmt::Display for Orbifold2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.base.name())?;
        if self.boundary_circles > 0 {
            write!(f, "-{}", self.boundary_circles)?;
        }
        if !self.cone_orders.is_empty() {
            let c: Vec<String> = self.cone_orders.iter().map(u64::to_string).collect();
            write!(f, "({})", c.join(","))?;
        }
        Ok(())
    }
}

/// Base surface in the JSON schema `{"orientable": bool, "genus": int}`; for a
/// nonorientable base `genus` counts crosscaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseSpec {
    pub orientable: bool,
    pub genus: u32,
}

impl From<BaseSpec> for Surface {
    fn from(b: BaseSpec) -> Surface {
        if b.orientable {
            Surface::Orientable { genus: b.genus }
        } else {
            Surface::Nonorientable { crosscaps: b.genus }
        }
    }
}

impl From<Surface> for BaseSpec {
    fn from(s: Surface) -> BaseSpec {
        BaseSpec { orientable: s.is_orientable(), genus: s.genus() }
    }
}

/// A closed Seifert fibered space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeifertSpec", into = "SeifertSpec")]
pub struct SeifertData {
    base: Surface,
    gamma: i64,
    fibers: Vec<(i64, i64)>,
}

#[derive(Serialize, Deserialize)]
struct SeifertSpec {
    base: BaseSpec,
    #[serde(default)]
    gamma: i64,
    #[serde(default)]
    fibers: Vec<(i64, i64)>,
}

impl TryFrom<SeifertSpec> for SeifertData {
    type Error = Error;

    fn try_from(s: SeifertSpec) -> Result<SeifertData> {
        SeifertData::new(s.base.into(), s.gamma, s.fibers)
    }
}

impl From<SeifertData> for SeifertSpec {
    fn from(d: SeifertData) -> SeifertSpec {
        SeifertSpec { base: d.base.into(), gamma: d.gamma, fibers: d.fibers }
    }
}

impl SeifertData {
    /// Requires `gcd(α, β) = 1` and `0 < β < α` for every fiber.
    pub fn new(base: Surface, gamma: i64, fibers: Vec<(i64, i64)>) -> Result<SeifertData> {
        if base == (Surface::Nonorientable { crosscaps: 0 }) {
            return Err(Error::InvalidOrbifold("nonorientable surface needs at least one crosscap".into()));
        }
        for &(a, b) in &fibers {
            if !(0 < b && b < a && a.gcd(&b) == 1) {
                return Err(Error::InvalidFiber(a, b));
            }
        }
        Ok(SeifertData { base, gamma, fibers })
    }

    /// Accepts any coprime `(α, β)` with `α ≥ 2` and moves `⌊β/α⌋` into `γ`:
    /// `(α, β), γ` and `(α, β − tα), γ + t` describe the same manifold.
    pub fn normalized(base: Surface, gamma: i64, fibers: &[(i64, i64)]) -> Result<SeifertData> {
        let mut g = gamma;
        let mut out = Vec::with_capacity(fibers.len());
        for &(a, b) in fibers {
            if a < 2 || a.gcd(&b) != 1 {
                return Err(Error::InvalidFiber(a, b));
            }
            let t = Integer::div_floor(&b, &a);
            out.push((a, b - t * a));
            g += t;
        }
        SeifertData::new(base, g, out)
    }

    pub fn base(&self) -> Surface {
        self.base
    }

    pub fn gamma(&self) -> i64 {
        self.gamma
    }

    pub fn fibers(&self) -> &[(i64, i64)] {
        &self.fibers
    }

    pub fn orbifold(&self) -> Orbifold2 {
        let cones = self.fibers.iter().map(|&(a, _)| a as u64).collect();
        Orbifold2::closed(self.base, cones).expect("fiber orders are >= 2")
    }

    pub fn presentation(&self) -> Presentation {
        let q = self.fibers.len();
        let g = self.base.genus() as usize;
        let mut generators = Vec::new();
        let mut relators = Vec::new();
        match self.base {
            Surface::Orientable { .. } => {
                for i in 1..=g {
                    generators.push(format!("a{i}"));
                    generators.push(format!("b{i}"));
                }
                let x0 = 2 * g;
                generators.extend((1..=q).map(|j| format!("x{j}")));
                let h = generators.len();
                generators.push("h".into());
                for (j, &(a, b)) in self.fibers.iter().enumerate() {
                    relators.push(Word::from_syllables([(x0 + j, a), (h, b)]));
                }
                let mut prod = Word::power(h, -self.gamma);
                for i in 0..g {
                    prod = prod.mul(&Word::commutator(&Word::letter(2 * i), &Word::letter(2 * i + 1)));
                }
                prod = prod.mul(&Word::from_syllables((0..q).map(|j| (x0 + j, 1))));
                relators.push(prod);
                Presentation { generators, relators, central: vec![h] }
            }
            Surface::Nonorientable { .. } => {
                generators.extend((1..=g).map(|i| format!("a{i}")));
                let x0 = g;
                generators.extend((1..=q).map(|j| format!("x{j}")));
                let h = generators.len();
                generators.push("h".into());
                for i in 0..g {
                    relators.push(Word::from_syllables([(i, 1), (h, 1), (i, -1), (h, 1)]));
                }
                for (j, &(a, b)) in self.fibers.iter().enumerate() {
                    relators.push(Word::from_syllables([(x0 + j, a), (h, b)]));
                }
                for j in 0..q {
                    relators.push(Word::commutator(&Word::letter(x0 + j), &Word::letter(h)));
                }
                let prod = Word::power(h, -self.gamma)
                    .mul(&Word::from_syllables((0..g).map(|i| (i, 2))))
                    .mul(&Word::from_syllables((0..q).map(|j| (x0 + j, 1))));
                relators.push(prod);
                Presentation { generators, relators, central: vec![] }
            }
        }
    }

    pub fn h1(&self) -> AbelianGroup {
        self.presentation().abelianization()
    }

    /// `RP³ # RP³`, fibered over `RP²` with no exceptional fibers and `γ = 0`.
    pub fn is_rp3_sum(&self) -> bool {
        self.base == Surface::Nonorientable { crosscaps: 1 } && self.fibers.is_empty() && self.gamma == 0
    }

    /// `S¹ × S²`: a sphere base with at most two exceptional fibers and
    /// infinite first homology.
    pub fn is_s1xs2(&self) -> bool {
        self.base == Surface::Orientable { genus: 0 } && self.fibers.len() <= 2 && !self.h1().is_finite()
    }

    /// Whether the manifold is Haken.
    ///
    /// A Haken Seifert space has a hyperbolic or parabolic base; over such a
    /// base it is Haken unless the base is `S²(p, q, r)` and `H₁` is finite.
    pub fn is_haken(&self) -> Verdict {
        if self.is_rp3_sum() {
            return Verdict::No("RP3 # RP3 is reducible".into());
        }
        if self.is_s1xs2() {
            return Verdict::No("S1 x S2 is reducible".into());
        }
        let orb = self.orbifold();
        match orb.classify() {
            Geometry::Spherical => {
                if self.h1().is_finite() {
                    Verdict::No(format!("spherical base {orb}: finite fundamental group"))
                } else {
                    Verdict::Undetermined(format!("spherical base {orb} with infinite H1"))
                }
            }
            geometry => {
                let kind = if geometry == Geometry::Hyperbolic { "hyperbolic" } else { "parabolic" };
                if orb.is_triangle() {
                    let h1 = self.h1();
                    if h1.is_finite() {
                        Verdict::No(format!("{kind} triangle base {orb} with finite H1 = {h1}"))
                    } else {
                        Verdict::Yes(format!("{kind} triangle base {orb} with infinite H1 = {h1}"))
                    }
                } else {
                    Verdict::Yes(format!("{kind} base {orb} other than S2(p,q,r)"))
                }
            }
        }
    }

    /// Whether the character variety contains a curve through the character
    /// of an irreducible representation: exactly for `RP³ # RP³` and for Haken
    /// spaces whose base is neither a torus without cone points nor a sphere
    /// with three cone points.
    pub fn irreducible_curve_exists(&self) -> Verdict {
        if self.is_rp3_sum() {
            return Verdict::Yes("RP3 # RP3".into());
        }
        let orb = self.orbifold();
        if orb.base == (Surface::Orientable { genus: 1 }) && orb.cone_orders.is_empty() {
            return Verdict::No("torus without cone points excluded".into());
        }
        if orb.is_triangle() {
            return match self.is_haken() {
                Verdict::No(why) => Verdict::No(format!("non-Haken triangle base: {why}")),
                _ => Verdict::No(format!("2-sphere with three cone points excluded: {orb}")),
            };
        }
        match self.is_haken() {
            Verdict::Yes(why) => Verdict::Yes(format!("Haken, {why}")),
            Verdict::No(why) => Verdict::No(format!("not Haken: {why}")),
            Verdict::Undetermined(why) => Verdict::Undetermined(why),
        }
    }

    /// Whether some curve is index `q` virtually irreducible for every `q`:
    /// exactly for Haken spaces with hyperbolic base other than `S²(p, q, r)`.
    pub fn virtually_irreducible_curve_exists(&self) -> Verdict {
        let orb = self.orbifold();
        if orb.classify() != Geometry::Hyperbolic {
            return Verdict::No(format!("base {orb} is not hyperbolic"));
        }
        if orb.is_triangle() {
            return Verdict::No(format!("2-sphere with three cone points excluded: {orb}"));
        }
        match self.is_haken() {
            Verdict::Yes(why) => Verdict::Yes(format!("Haken, {why}")),
            Verdict::No(why) => Verdict::No(format!("not Haken: {why}")),
            Verdict::Undetermined(why) => Verdict::Undetermined(why),
        }
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fibers: Vec<String> = self.fibers.iter().map(|(a, b)| format!("({a},{b})")).collect();
        write!(f, "M({}; gamma={}; {})", self.base.name(), self.gamma, fibers.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "lowercase")]
pub enum Verdict {
    Yes(String),
    No(String),
    Undetermined(String),
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No(_))
    }

    pub fn reason(&self) -> &str {
        match self {
            Verdict::Yes(r) | Verdict::No(r) | Verdict::Undetermined(r) => r,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Yes(r) => write!(f, "yes ({r})"),
            Verdict::No(r) => write!(f, "no ({r})"),
            Verdict::Undetermined(r) => write!(f, "undetermined ({r})"),
        }
    }
}

/// A group presentation. Generators listed in `central` commute with every
/// generator; those commutators are implied rather than listed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
    #[serde(default)]
    pub central: Vec<usize>,
}

impl Presentation {
    /// Relation matrix of the abelianization, one row per relator.
    pub fn relation_matrix(&self) -> Vec<Vec<BigInt>> {
        self.relators
            .iter()
            .map(|r| (0..self.generators.len()).map(|g| BigInt::from(r.exponent_sum(g))).collect())
            .collect()
    }

    pub fn abelianization(&self) -> AbelianGroup {
        AbelianGroup::from_relations(&self.relation_matrix(), self.generators.len())
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut rels: Vec<String> = self.central.iter().map(|&c| format!("{} central", self.generators[c])).collect();
        rels.extend(self.relators.iter().map(|r| r.display_with(&self.generators)));
        write!(f, "<{} | {}>", self.generators.join(", "), rels.join(", "))
    }
}
