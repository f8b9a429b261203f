//! Seminorms on the peripheral lattice built from ideal-point functionals.
//!
//! Each ideal point `x` of a curve of characters contributes an integer linear
//! functional `φ_x(v) = c1·p + c2·q`; the seminorm is `‖v‖ = Σ |φ_x(v)|`. The
//! seminorm is a norm, a nonzero indefinite seminorm vanishing on a single
//! slope, or identically zero.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::lattice::{bezout, PeripheralClass, Slope};
use crate::{Error, Result};

/// `φ_x(v) = c1·v.p + c2·v.q`. The zero functional is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFunctional {
    #[serde(with = "crate::serde_int")]
    pub c1: BigInt,
    #[serde(with = "crate::serde_int")]
    pub c2: BigInt,
    #[serde(default)]
    pub label: String,
}

impl IdealFunctional {
    pub fn new(c1: impl Into<BigInt>, c2: impl Into<BigInt>) -> Self {
        IdealFunctional { c1: c1.into(), c2: c2.into(), label: String::new() }
    }

    pub fn labeled(c1: impl Into<BigInt>, c2: impl Into<BigInt>, label: impl Into<String>) -> Self {
        IdealFunctional { c1: c1.into(), c2: c2.into(), label: label.into() }
    }

    pub fn eval(&self, v: &PeripheralClass) -> BigInt {
        &self.c1 * &v.p + &self.c2 * &v.q
    }

    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.c2.is_zero()
    }

    /// gcd of the coefficients; the functional is this multiple of a primitive one.
    pub fn content(&self) -> BigInt {
        self.c1.gcd(&self.c2)
    }

    /// The slope on which the functional vanishes, `None` for the zero functional.
    pub fn kernel(&self) -> Option<Slope> {
        Slope::from_class(&PeripheralClass::new(self.c2.clone(), -&self.c1)).ok()
    }
}

/// Order of the pole of `f̃_α` at the ideal point: `|φ_x(α)|`. Zero means
/// `f̃_α` is finite there.
pub fn pole_order(f: &IdealFunctional, a: &PeripheralClass) -> BigInt {
    f.eval(a).abs()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Classification {
    Norm,
    Indefinite { kernel: Slope },
    Zero,
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::Norm => "norm",
            Classification::Indefinite { .. } => "indefinite",
            Classification::Zero => "zero",
        }
    }
}

/// An exact point of `H_1(∂M; Q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RatPoint {
    #[serde(with = "crate::serde_int::rational")]
    pub x: BigRational,
    #[serde(with = "crate::serde_int::rational")]
    pub y: BigRational,
}

impl RatPoint {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        RatPoint { x, y }
    }

    pub fn neg(&self) -> RatPoint {
        RatPoint { x: -&self.x, y: -&self.y }
    }

    fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64().unwrap_or(f64::NAN), self.y.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for RatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The fundamental ball `{v : ‖v‖ ≤ s}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BallGeometry {
    /// Vertices in counter-clockwise order starting from the positive x-axis side.
    Polygon { vertices: Vec<RatPoint> },
    /// `{v : |ψ(v)| ≤ halfwidth}` where `ψ` is the primitive functional vanishing on `kernel`.
    Band {
        kernel: Slope,
        #[serde(with = "crate::serde_int::rational")]
        halfwidth: BigRational,
    },
    Plane,
}

/// `‖v‖ = Σ_x |φ_x(v)|`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CullerShalenSeminorm {
    pub functionals: Vec<IdealFunctional>,
}

impl CullerShalenSeminorm {
    pub fn new(functionals: Vec<IdealFunctional>) -> Self {
        CullerShalenSeminorm { functionals }
    }

    /// Shorthand for unlabeled functionals.
    pub fn from_coefficients(coeffs: &[(i64, i64)]) -> Self {
        CullerShalenSeminorm {
            functionals: coeffs.iter().map(|&(a, b)| IdealFunctional::new(a, b)).collect(),
        }
    }

    pub fn evaluate(&self, v: &PeripheralClass) -> BigInt {
        self.functionals.iter().map(|f| f.eval(v).abs()).sum()
    }

    fn nonzero(&self) -> impl Iterator<Item = &IdealFunctional> {
        self.functionals.iter().filter(|f| !f.is_zero())
    }

    /// Distinct kernel slopes of the nonzero functionals, sorted.
    fn kernel_slopes(&self) -> Vec<Slope> {
        let mut ks: Vec<Slope> = self.nonzero().filter_map(IdealFunctional::kernel).collect();
        ks.sort();
        ks.dedup();
        ks
    }

    pub fn classify(&self) -> Classification {
        let ks = self.kernel_slopes();
        match ks.len() {
            0 => Classification::Zero,
            1 => Classification::Indefinite { kernel: ks.into_iter().next().unwrap() },
            _ => Classification::Norm,
        }
    }

    /// `s(X₀)`: the least nonzero value of the seminorm on the lattice, or 0
    /// for the zero seminorm.
    pub fn minimal_value(&self) -> BigInt {
        self.minimal_witness().map(|(s, _)| s).unwrap_or_else(BigInt::zero)
    }

    /// `s(X₀)` together with a primitive class attaining it.
    pub fn minimal_witness(&self) -> Option<(BigInt, PeripheralClass)> {
        match self.classify() {
            Classification::Zero => None,
            Classification::Indefinite { kernel } => {
                // every functional is ±content · ψ with ψ primitive, so the
                // minimum is Σ content, attained where ψ = ±1
                let s: BigInt = self.nonzero().map(IdealFunctional::content).sum();
                let k = kernel.class();
                let (x, y) = bezout(&k.p, &k.q);
                Some((s, PeripheralClass::new(-y, x)))
            }
            Classification::Norm => {
                let rays = self.sorted_rays();
                let n = rays.len();
                let mut best: Option<(BigInt, PeripheralClass)> = None;
                for i in 0..n {
                    let (u, v) = (&rays[i], &rays[(i + 1) % n]);
                    let g = self.sector_functional(u, v);
                    let cand = sector_minimum(&g, u, v);
                    if best.as_ref().is_none_or(|b| cand.0 < b.0) {
                        best = Some(cand);
                    }
                }
                best
            }
        }
    }

    /// Both primitive directions of every kernel line, in angular order.
    fn sorted_rays(&self) -> Vec<PeripheralClass> {
        let mut rays: Vec<PeripheralClass> = self
            .kernel_slopes()
            .into_iter()
            .flat_map(|s| [s.class().clone(), s.class().neg()])
            .collect();
        rays.sort_by(angle_cmp);
        rays
    }

    /// The linear functional that agrees with the seminorm on the closed cone
    /// spanned by consecutive rays `u`, `v`.
    fn sector_functional(&self, u: &PeripheralClass, v: &PeripheralClass) -> (BigInt, BigInt) {
        let w = u.add(v);
        let mut g = (BigInt::zero(), BigInt::zero());
        for f in self.nonzero() {
            match f.eval(&w).sign() {
                num_bigint::Sign::Plus => {
                    g.0 += &f.c1;
                    g.1 += &f.c2;
                }
                num_bigint::Sign::Minus => {
                    g.0 -= &f.c1;
                    g.1 -= &f.c2;
                }
                num_bigint::Sign::NoSign => {}
            }
        }
        g
    }

    pub fn fundamental_ball(&self) -> BallGeometry {
        match self.classify() {
            Classification::Zero => BallGeometry::Plane,
            Classification::Indefinite { kernel } => {
                // ‖v‖ = c·|ψ(v)| with c = Σ content = s, so the band is |ψ| ≤ s/c
                let c: BigInt = self.nonzero().map(IdealFunctional::content).sum();
                let s = self.minimal_value();
                BallGeometry::Band { kernel, halfwidth: BigRational::new(s, c) }
            }
            Classification::Norm => {
                let s = self.minimal_value();
                let vertices = self
                    .sorted_rays()
                    .into_iter()
                    .map(|k| {
                        let t = BigRational::new(s.clone(), self.evaluate(&k));
                        RatPoint::new(&t * BigRational::from_integer(k.p), &t * BigRational::from_integer(k.q))
                    })
                    .collect();
                BallGeometry::Polygon { vertices }
            }
        }
    }

    /// Slopes through the vertices of the fundamental polygon.
    pub fn vertex_slopes(&self) -> Result<Vec<Slope>> {
        match self.classify() {
            Classification::Norm => Ok(self.kernel_slopes()),
            other => Err(Error::NotANorm(other.name())),
        }
    }
}

/// Angular order starting at the positive x-axis, counter-clockwise.
pub(crate) fn angle_cmp(a: &PeripheralClass, b: &PeripheralClass) -> Ordering {
    let half = |v: &PeripheralClass| {
        if v.q.is_positive() || (v.q.is_zero() && v.p.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| BigInt::zero().cmp(&a.det(b)))
}

/// Minimum of the linear functional `g` over nonzero lattice points of the
/// closed cone spanned by primitive `u`, `v` with `det(u, v) > 0`, assuming
/// `g > 0` on the cone.
///
/// The cone is cut into unimodular subcones along the chain
/// `u = w₀, w₁, …, w_k, v` with `det(wᵢ, wᵢ₊₁) = 1` (the boundary of the convex
/// hull of the cone's nonzero lattice points lies on this chain). On a
/// unimodular cone a positive linear form is minimised at a generator.
/// Runs where consecutive `wᵢ` are collinear are skipped in one step since `g`
/// is linear along them.
fn sector_minimum(g: &(BigInt, BigInt), u: &PeripheralClass, v: &PeripheralClass) -> (BigInt, PeripheralClass) {
    let eval = |w: &PeripheralClass| &g.0 * &w.p + &g.1 * &w.q;
    let mut best = (eval(u), u.clone());
    let mut consider = |w: &PeripheralClass| {
        let val = eval(w);
        if val < best.0 {
            best = (val, w.clone());
        }
    };
    consider(v);

    let d = u.det(v);
    debug_assert!(d.is_positive());
    if d.is_one() {
        return best;
    }
    let (x, y) = bezout(&u.p, &u.q);
    let w0 = PeripheralClass::new(-y, x);
    let a = w0.det(v);
    let t = (&d - &a).div_floor(&d);
    let mut prev = u.clone();
    let mut prev_d = d.clone();
    let mut cur = w0.add(&u.scale(&t));
    let mut cur_d = a + t * &d;
    consider(&cur);

    while !cur_d.is_one() {
        let b = (&prev_d + &cur_d).div_floor(&cur_d);
        if b == BigInt::from(2) {
            let c = &prev_d - &cur_d;
            let steps = Integer::div_floor(&(&cur_d - 1u32), &c);
            let delta = cur.sub(&prev);
            let new_prev = cur.add(&delta.scale(&(&steps - 1)));
            let new_cur = cur.add(&delta.scale(&steps));
            prev_d = &cur_d - (&steps - 1) * &c;
            cur_d = &cur_d - &steps * &c;
            prev = new_prev;
            cur = new_cur;
        } else {
            let next = cur.scale(&b).sub(&prev);
            let next_d = &b * &cur_d - &prev_d;
            prev = std::mem::replace(&mut cur, next);
            prev_d = std::mem::replace(&mut cur_d, next_d);
        }
        consider(&cur);
    }
    best
}

impl BallGeometry {
    /// SVG drawing of the ball clipped to the square `[-viewport, viewport]²`.
    pub fn to_svg(&self, viewport: f64) -> String {
        const SIZE: f64 = 400.0;
        let scale = SIZE / (2.0 * viewport);
        let px = |(x, y): (f64, f64)| ((x + viewport) * scale, (viewport - y) * scale);
        let square = vec![(-viewport, -viewport), (viewport, -viewport), (viewport, viewport), (-viewport, viewport)];
        let region: Vec<(f64, f64)> = match self {
            BallGeometry::Plane => square,
            BallGeometry::Polygon { vertices } => {
                let poly: Vec<(f64, f64)> = vertices.iter().map(RatPoint::to_f64).collect();
                let mut clipped = square;
                for i in 0..poly.len() {
                    let (a, b) = (poly[i], poly[(i + 1) % poly.len()]);
                    // keep the left side of the directed edge a -> b
                    let (nx, ny) = (-(b.1 - a.1), b.0 - a.0);
                    let c = nx * a.0 + ny * a.1;
                    clipped = clip_half_plane(&clipped, nx, ny, c);
                }
                clipped
            }
            BallGeometry::Band { kernel, halfwidth } => {
                let k = kernel.class();
                let (c1, c2) = (-k.q.to_f64().unwrap_or(0.0), k.p.to_f64().unwrap_or(0.0));
                let h = halfwidth.to_f64().unwrap_or(0.0);
                let half = clip_half_plane(&square, -c1, -c2, -h);
                clip_half_plane(&half, c1, c2, -h)
            }
        };
        let points: Vec<String> = region
            .iter()
            .map(|&p| {
                let (x, y) = px(p);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let (ox, oy) = px((0.0, 0.0));
        let mut out = String::new();
        out.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n"
        ));
        out.push_str(&format!(
            "  <line x1=\"0\" y1=\"{oy:.3}\" x2=\"{SIZE}\" y2=\"{oy:.3}\" stroke=\"#999\"/>\n  <line x1=\"{ox:.3}\" y1=\"0\" x2=\"{ox:.3}\" y2=\"{SIZE}\" stroke=\"#999\"/>\n"
        ));
        out.push_str(&format!(
            "  <polygon points=\"{}\" fill=\"#4a90d9\" fill-opacity=\"0.35\" stroke=\"#1f4f8a\"/>\n",
            points.join(" ")
        ));
        if let BallGeometry::Polygon { vertices } = self {
            for v in vertices {
                let (x, y) = px(v.to_f64());
                out.push_str(&format!("  <circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"3\" fill=\"#1f4f8a\"/>\n"));
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

/// Sutherland–Hodgman step keeping `{(x, y) : nx·x + ny·y >= c}`.
fn clip_half_plane(poly: &[(f64, f64)], nx: f64, ny: f64, c: f64) -> Vec<(f64, f64)> {
    let side = |p: (f64, f64)| nx * p.0 + ny * p.1 - c;
    let mut out = Vec::with_capacity(poly.len() + 2);
    for i in 0..poly.len() {
        let (a, b) = (poly[i], poly[(i + 1) % poly.len()]);
        let (sa, sb) = (side(a), side(b));
        if sa >= 0.0 {
            out.push(a);
        }
        if (sa >= 0.0) != (sb >= 0.0) {
            let t = sa / (sa - sb);
            out.push((a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pc(p: i64, q: i64) -> PeripheralClass {
        PeripheralClass::new(p, q)
    }

    fn sn(c: &[(i64, i64)]) -> CullerShalenSeminorm {
        CullerShalenSeminorm::from_coefficients(c)
    }

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    /// Minimum over primitive vectors with coordinates bounded by `r`.
    /// Smallest positive value over primitive classes in a box, using machine
    /// integers; the norm is even, so the half-plane `b >= 0` suffices.
    fn brute_minimum(s: &CullerShalenSeminorm, r: i64) -> BigInt {
        let coeffs: Vec<(i64, i64)> =
            s.functionals.iter().map(|f| (f.c1.to_i64().unwrap(), f.c2.to_i64().unwrap())).collect();
        let mut best: Option<i64> = None;
        for b in 0..=r {
            for a in -r..=r {
                if num_integer::gcd(a, b) != 1 {
                    continue;
                }
                let val: i64 = coeffs.iter().map(|&(c1, c2)| (c1 * a + c2 * b).abs()).sum();
                if val > 0 && best.is_none_or(|x| val < x) {
                    best = Some(val);
                }
            }
        }
        best.map(BigInt::from).unwrap_or_default()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(sn(&[(1, -6)]).evaluate(&pc(1, 0)), 1.into());
        assert_eq!(sn(&[]).evaluate(&pc(7, 3)), 0.into());
        assert_eq!(sn(&[(1, 0), (0, 1)]).evaluate(&pc(3, 5)), 8.into());
    }

    #[test]
    fn pole_orders() {
        let f = IdealFunctional::new(1, -6);
        assert_eq!(pole_order(&f, &pc(6, 1)), 0.into());
        assert_eq!(pole_order(&f, &pc(1, 0)), 1.into());
        assert_eq!(pole_order(&IdealFunctional::new(0, 0), &pc(4, 9)), 0.into());
    }

    #[test]
    fn classification() {
        assert_eq!(
            sn(&[(1, -6), (2, -12)]).classify(),
            Classification::Indefinite { kernel: Slope::new(6, 1).unwrap() }
        );
        assert_eq!(sn(&[(1, 0), (0, 1)]).classify(), Classification::Norm);
        assert_eq!(sn(&[(0, 0)]).classify(), Classification::Zero);
        assert_eq!(sn(&[]).classify(), Classification::Zero);
        // zero functionals are ignored
        assert_eq!(
            sn(&[(0, 0), (3, 0)]).classify(),
            Classification::Indefinite { kernel: Slope::longitude() }
        );
    }

    #[test]
    fn minimal_values() {
        assert_eq!(sn(&[(1, -6)]).minimal_value(), 1.into());
        let (s, w) = sn(&[(2, 0), (0, 3)]).minimal_witness().unwrap();
        assert_eq!(s, 2.into());
        assert_eq!(w.p.abs(), 1.into());
        assert_eq!(w.q, 0.into());
        assert_eq!(sn(&[(2, 0), (0, 3)]).minimal_value(), brute_minimum(&sn(&[(2, 0), (0, 3)]), 50));
        assert_eq!(sn(&[]).minimal_value(), 0.into());
        assert_eq!(sn(&[(1, -6), (2, -12)]).minimal_value(), 3.into());
    }

    #[test]
    fn minimal_value_thin_cone() {
        // kernels (1,0) and (1,1000): the cone between them has determinant 1000
        let s = sn(&[(0, 1), (1000, -1)]);
        assert_eq!(s.minimal_value(), brute_minimum(&s, 1100));
        let s = sn(&[(0, 7), (999, -1), (13, 17)]);
        assert_eq!(s.minimal_value(), brute_minimum(&s, 1100));
    }

    #[test]
    fn balls() {
        let ball = sn(&[(1, 0), (0, 1)]).fundamental_ball();
        let expected = vec![
            RatPoint::new(rat(1, 1), rat(0, 1)),
            RatPoint::new(rat(0, 1), rat(1, 1)),
            RatPoint::new(rat(-1, 1), rat(0, 1)),
            RatPoint::new(rat(0, 1), rat(-1, 1)),
        ];
        assert_eq!(ball, BallGeometry::Polygon { vertices: expected });
        assert_eq!(
            sn(&[(1, -6)]).fundamental_ball(),
            BallGeometry::Band { kernel: Slope::new(6, 1).unwrap(), halfwidth: rat(1, 1) }
        );
        assert_eq!(sn(&[]).fundamental_ball(), BallGeometry::Plane);
    }

    #[test]
    fn vertex_slope_sets() {
        let mut v = sn(&[(1, 0), (0, 1)]).vertex_slopes().unwrap();
        v.sort();
        assert_eq!(v, vec![Slope::longitude(), Slope::meridian()]);
        let v = sn(&[(1, -1), (1, 1)]).vertex_slopes().unwrap();
        assert_eq!(v.len(), 2);
        assert!(v.contains(&Slope::new(1, 1).unwrap()));
        assert!(v.contains(&Slope::new(1, -1).unwrap()));
        assert_eq!(sn(&[(1, 0), (1, 0)]).vertex_slopes(), Err(Error::NotANorm("indefinite")));
    }

    #[test]
    fn svg_renders_all_variants() {
        for s in [sn(&[(1, 0), (0, 1)]), sn(&[(1, -6)]), sn(&[])] {
            let svg = s.fundamental_ball().to_svg(10.0);
            assert!(svg.starts_with("<svg"));
            assert!(svg.contains("<polygon"));
        }
    }

    #[test]
    fn json_schema() {
        let s: CullerShalenSeminorm =
            serde_json::from_str(r#"{"functionals": [{"c1": 1, "c2": -6, "label": "x1"}, {"c1": 0, "c2": 2}]}"#).unwrap();
        assert_eq!(s.functionals[0].label, "x1");
        assert_eq!(s.functionals[1].label, "");
        let back: CullerShalenSeminorm = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
    }

    fn arb_seminorm() -> impl Strategy<Value = CullerShalenSeminorm> {
        prop::collection::vec((-10i64..=10, -10i64..=10), 0..5).prop_map(|c| sn(&c))
    }

    proptest! {
        #[test]
        fn seminorm_axioms(s in arb_seminorm(), a in (-30i64..30, -30i64..30), b in (-30i64..30, -30i64..30), k in -9i64..9) {
            let (a, b) = (pc(a.0, a.1), pc(b.0, b.1));
            prop_assert!(s.evaluate(&a.add(&b)) <= s.evaluate(&a) + s.evaluate(&b));
            let k = BigInt::from(k);
            prop_assert_eq!(s.evaluate(&a.scale(&k)), k.abs() * s.evaluate(&a));
        }

        #[test]
        fn minimal_value_matches_brute_force(s in arb_seminorm()) {
            prop_assert_eq!(s.minimal_value(), brute_minimum(&s, 50));
        }
    }
}
