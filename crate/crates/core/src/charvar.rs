//! Numeric PSL(2,C) representations and characters.
//!
//! Matrices are stored as one SL(2,C) lift; every comparison is insensitive to
//! the sign of the lift. The main family is the parametrisation of the curve
//! components of the character variety of `Z/p * Z/q`:
//!
//! ```text
//! x ↦ ±(λ 0; 0 λ⁻¹),   y ↦ ±(a 1; a(τ−a)−1 τ−a)
//! λ = e^{πij/p},  μ = e^{πik/q},  τ = μ + μ⁻¹
//! ```

use std::f64::consts::PI;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::word::Word;
use crate::{Error, Result};

pub type C64 = Complex64;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// Equality tolerance (`equality`) and the looser tolerance for membership in
/// a locus such as "trace equals 2" (`locus`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub equality: f64,
    pub locus: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { equality: 1e-9, locus: 1e-6 }
    }
}

/// `|x − y| ≤ tol · max(1, |x|, |y|)`.
pub fn close(x: C64, y: C64, tol: f64) -> bool {
    (x - y).norm() <= tol * 1f64.max(x.norm()).max(y.norm())
}

/// A 2×2 complex matrix of determinant 1, identified with its negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjMatrix {
    m: [[C64; 2]; 2],
}

impl ProjMatrix {
    /// Fails unless `|det − 1| ≤ tol`.
    pub fn new(a: C64, b: C64, c: C64, d: C64, tol: f64) -> Result<ProjMatrix> {
        let m = ProjMatrix { m: [[a, b], [c, d]] };
        let det = m.det();
        if (det - ONE).norm() > tol {
            return Err(Error::Parse(format!("matrix determinant {det} is not 1")));
        }
        Ok(m)
    }

    /// Rescales any invertible matrix to determinant 1.
    pub fn normalized(a: C64, b: C64, c: C64, d: C64) -> Result<ProjMatrix> {
        let det = a * d - b * c;
        if det.norm() == 0.0 {
            return Err(Error::Parse("singular matrix".into()));
        }
        let r = det.sqrt();
        Ok(ProjMatrix { m: [[a / r, b / r], [c / r, d / r]] })
    }

    pub fn identity() -> ProjMatrix {
        ProjMatrix { m: [[ONE, ZERO], [ZERO, ONE]] }
    }

    pub fn diagonal(z: C64) -> ProjMatrix {
        ProjMatrix { m: [[z, ZERO], [ZERO, z.inv()]] }
    }

    pub fn entries(&self) -> [[C64; 2]; 2] {
        self.m
    }

    pub fn det(&self) -> C64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    /// Trace of the stored lift; only defined up to sign in PSL(2,C).
    pub fn trace(&self) -> C64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn mul(&self, o: &ProjMatrix) -> ProjMatrix {
        let (a, b) = (&self.m, &o.m);
        let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
        ProjMatrix { m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse(&self) -> ProjMatrix {
        let [[a, b], [c, d]] = self.m;
        ProjMatrix { m: [[d, -b], [-c, a]] }
    }

    pub fn neg(&self) -> ProjMatrix {
        let [[a, b], [c, d]] = self.m;
        ProjMatrix { m: [[-a, -b], [-c, -d]] }
    }

    pub fn pow(&self, e: i64) -> ProjMatrix {
        let base = if e < 0 { self.inverse() } else { *self };
        (0..e.unsigned_abs()).fold(ProjMatrix::identity(), |acc, _| acc.mul(&base))
    }

    fn scale(&self) -> f64 {
        self.m.iter().flatten().map(|z| z.norm()).fold(1.0, f64::max)
    }

    fn entries_close(&self, o: &ProjMatrix, tol: f64) -> bool {
        let s = self.scale().max(o.scale());
        self.m.iter().flatten().zip(o.m.iter().flatten()).all(|(x, y)| (x - y).norm() <= tol * s)
    }

    /// Equality in PSL(2,C): `A = B` or `A = −B` entrywise within `tol`.
    pub fn approx_eq(&self, o: &ProjMatrix, tol: f64) -> bool {
        self.entries_close(o, tol) || self.entries_close(&o.neg(), tol)
    }

    /// `±I` within `tol`.
    pub fn is_central(&self, tol: f64) -> bool {
        self.approx_eq(&ProjMatrix::identity(), tol)
    }

    /// Eigenvectors (unit length) when the eigenvalues are distinct.
    fn eigenbasis(&self, tol: f64) -> Option<(C64, [C64; 2], [C64; 2])> {
        let t = self.trace();
        let disc = t * t - 4.0;
        if disc.norm() <= tol * 1f64.max(t.norm_sqr()) {
            return None;
        }
        let root = disc.sqrt();
        let [[a, b], [c, d]] = self.m;
        let eig = |l: C64| {
            let v1 = [b, l - a];
            let v2 = [l - d, c];
            let n1 = (v1[0].norm_sqr() + v1[1].norm_sqr()).sqrt();
            let n2 = (v2[0].norm_sqr() + v2[1].norm_sqr()).sqrt();
            if n1 >= n2 {
                [v1[0] / n1, v1[1] / n1]
            } else {
                [v2[0] / n2, v2[1] / n2]
            }
        };
        let l1 = (t + root) / 2.0;
        let l2 = (t - root) / 2.0;
        Some((l1, eig(l1), eig(l2)))
    }

    /// True if `v` is an eigenvector: `det[v, Av] ≈ 0`.
    fn fixes_line(&self, v: &[C64; 2], tol: f64) -> bool {
        let av = [self.m[0][0] * v[0] + self.m[0][1] * v[1], self.m[1][0] * v[0] + self.m[1][1] * v[1]];
        (v[0] * av[1] - v[1] * av[0]).norm() <= tol * self.scale()
    }
}

/// Images of the generators of a finitely generated group in PSL(2,C).
#[derive(Debug, Clone, PartialEq)]
pub struct ProjRep {
    images: Vec<ProjMatrix>,
}

impl ProjRep {
    pub fn new(images: Vec<ProjMatrix>) -> ProjRep {
        ProjRep { images }
    }

    pub fn num_generators(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[ProjMatrix] {
        &self.images
    }

    /// Copy with generator `i` replaced by the other lift.
    pub fn negate_generator(&self, i: usize) -> ProjRep {
        let mut r = self.clone();
        if let Some(m) = r.images.get_mut(i) {
            *m = m.neg();
        }
        r
    }
}

/// A component of the character variety of `Z/p * Z/q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComponentIndex {
    pub p: u32,
    pub q: u32,
    pub j: u32,
    pub k: u32,
}

impl ComponentIndex {
    pub fn new(p: u32, q: u32, j: u32, k: u32) -> Result<ComponentIndex> {
        if p < 2 || q < 2 || j > p / 2 || k > q / 2 {
            return Err(Error::InvalidComponent(format!(
                "(p, q, j, k) = ({p}, {q}, {j}, {k}) needs p, q >= 2, 0 <= j <= p/2, 0 <= k <= q/2"
            )));
        }
        Ok(ComponentIndex { p, q, j, k })
    }

    /// All curve components (`j, k ≥ 1`) for the given orders.
    pub fn curves(p: u32, q: u32) -> Vec<ComponentIndex> {
        let mut out = Vec::new();
        for j in 1..=p / 2 {
            for k in 1..=q / 2 {
                out.push(ComponentIndex { p, q, j, k });
            }
        }
        out
    }

    pub fn is_curve(&self) -> bool {
        self.j >= 1 && self.k >= 1
    }

    /// `j = p/2` or `k = q/2`, where the parametrisation is two-to-one.
    pub fn is_folded(&self) -> bool {
        2 * self.j == self.p || 2 * self.k == self.q
    }

    pub fn lambda(&self) -> C64 {
        C64::from_polar(1.0, PI * self.j as f64 / self.p as f64)
    }

    pub fn mu(&self) -> C64 {
        C64::from_polar(1.0, PI * self.k as f64 / self.q as f64)
    }

    pub fn tau(&self) -> C64 {
        let mu = self.mu();
        mu + mu.inv()
    }

    fn require_curve(&self) -> Result<()> {
        if self.is_curve() {
            Ok(())
        } else {
            Err(Error::InvalidComponent(format!("(j, k) = ({}, {}) is not a curve component", self.j, self.k)))
        }
    }
}

/// Number of components of the character variety of `Z/p * Z/q` and how
/// many of them are curves.
pub fn component_counts(p: u64, q: u64) -> (u64, u64) {
    ((p / 2 + 1) * (q / 2 + 1), (p / 2) * (q / 2))
}

/// The representation with parameter `a` on a curve component.
pub fn rho_a(c: &ComponentIndex, a: C64) -> Result<ProjRep> {
    c.require_curve()?;
    let tau = c.tau();
    let x = ProjMatrix::diagonal(c.lambda());
    let y = ProjMatrix { m: [[a, ONE], [a * (tau - a) - 1.0, tau - a]] };
    Ok(ProjRep::new(vec![x, y]))
}

pub fn word_eval(rep: &ProjRep, w: &Word) -> Result<ProjMatrix> {
    let mut acc = ProjMatrix::identity();
    for &(g, e) in w.syllables() {
        let m = rep.images.get(g).ok_or(Error::GeneratorOutOfRange { index: g, count: rep.num_generators() })?;
        acc = acc.mul(&m.pow(e));
    }
    Ok(acc)
}

/// `f_γ = trace² − 4`, independent of the lift.
pub fn f_gamma(rep: &ProjRep, w: &Word) -> Result<C64> {
    let t = word_eval(rep, w)?.trace();
    Ok(t * t - 4.0)
}

/// The `n(n²+5)/6` words `xᵢ`, `xᵢxⱼ` (i<j), `xᵢxⱼxₖ` (i<j<k) in that order.
pub fn trace_words(n: usize) -> Vec<Word> {
    let mut out: Vec<Word> = (0..n).map(Word::letter).collect();
    for i in 0..n {
        for j in i + 1..n {
            out.push(Word::from_syllables([(i, 1), (j, 1)]));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push(Word::from_syllables([(i, 1), (j, 1), (k, 1)]));
            }
        }
    }
    out
}

/// Traces of the stored lifts on [`trace_words`].
pub fn trace_tuple(rep: &ProjRep) -> Vec<C64> {
    trace_words(rep.num_generators())
        .iter()
        .map(|w| word_eval(rep, w).expect("indices in range").trace())
        .collect()
}

/// Whether two representations have the same character: some sign
/// homomorphism `ε` on the generators makes `tr ρ₂(y) = ε(y) tr ρ₁(y)` on every
/// trace word.
pub fn char_equal(r1: &ProjRep, r2: &ProjRep, tol: f64) -> Result<bool> {
    let n = r1.num_generators();
    if n != r2.num_generators() {
        return Err(Error::GeneratorCountMismatch(n, r2.num_generators()));
    }
    let words = trace_words(n);
    let (t1, t2) = (trace_tuple(r1), trace_tuple(r2));
    for mask in 0u64..(1u64 << n.min(63)) {
        let ok = words.iter().zip(t1.iter().zip(&t2)).all(|(w, (&a, &b))| {
            let odd = w.syllables().iter().filter(|&&(g, e)| mask >> g & 1 == 1 && e.is_odd()).count();
            let eps = if odd % 2 == 1 { -1.0 } else { 1.0 };
            close(b, a * eps, tol)
        });
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Reducibility: every pairwise commutator has trace 2 and, with three or more
/// generators, the images share a fixed line in `C²`.
pub fn is_reducible(rep: &ProjRep, tol: f64) -> bool {
    let ims = &rep.images;
    for i in 0..ims.len() {
        for j in i + 1..ims.len() {
            let c = ims[i].mul(&ims[j]).mul(&ims[i].inverse()).mul(&ims[j].inverse());
            if !close(c.trace(), C64::new(2.0, 0.0), tol) {
                return false;
            }
        }
    }
    if ims.len() <= 2 {
        return true;
    }
    common_fixed_line(ims, tol)
}

fn common_fixed_line(ims: &[ProjMatrix], tol: f64) -> bool {
    let Some(a) = ims.iter().find(|m| !m.is_central(tol)) else {
        return true;
    };
    let candidates: Vec<[C64; 2]> = match a.eigenbasis(tol) {
        Some((_, v1, v2)) => vec![v1, v2],
        None => {
            // parabolic: the unique fixed line is the kernel of A ∓ I
            let t = a.trace();
            let l = if t.re >= 0.0 { ONE } else { -ONE };
            let [[p, b], [c, d]] = a.m;
            let v1 = [b, l - p];
            let v2 = [l - d, c];
            let v = if v1[0].norm() + v1[1].norm() >= v2[0].norm() + v2[1].norm() { v1 } else { v2 };
            let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
            vec![[v[0] / n, v[1] / n]]
        }
    };
    candidates.iter().any(|v| ims.iter().all(|m| m.fixes_line(v, tol)))
}

/// Whether the image is dihedral: the representation is irreducible and is
/// conjugate into `{diag(z, z⁻¹)} ∪ {antidiag(w, −w⁻¹)}`.
///
/// The conjugating basis is taken from the eigenvectors of each loxodromic or
/// elliptic generator and pairwise product in turn, since for a dihedral
/// image at least one of them lies in the diagonal torus.
pub fn is_dihedral(rep: &ProjRep, tol: f64) -> Result<bool> {
    let ims = &rep.images;
    if ims.iter().all(|m| m.is_central(tol)) {
        return Err(Error::CentralImage);
    }
    if is_reducible(rep, tol) {
        return Ok(false);
    }
    let mut candidates: Vec<ProjMatrix> = ims.clone();
    for i in 0..ims.len() {
        for j in i + 1..ims.len() {
            candidates.push(ims[i].mul(&ims[j]));
        }
    }
    for c in candidates.iter().filter(|m| !m.is_central(tol)) {
        let Some((_, v1, v2)) = c.eigenbasis(tol) else {
            continue;
        };
        let Ok(p) = ProjMatrix::normalized(v1[0], v2[0], v1[1], v2[1]) else {
            continue;
        };
        let pinv = p.inverse();
        let fits = ims.iter().all(|m| {
            let n = pinv.mul(m).mul(&p);
            let s = n.scale();
            let small = |z: C64| z.norm() <= tol * s;
            (small(n.m[0][1]) && small(n.m[1][0])) || (small(n.m[0][0]) && small(n.m[1][1]))
        });
        if fits {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Parameter values `μ, μ⁻¹` of the reducible characters on a curve component.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducibleParameters {
    pub values: [C64; 2],
    /// Number of distinct characters: one when the parametrisation folds.
    pub characters: u32,
}

pub fn reducible_parameters(c: &ComponentIndex) -> Result<ReducibleParameters> {
    c.require_curve()?;
    let mu = c.mu();
    Ok(ReducibleParameters { values: [mu, mu.inv()], characters: if c.is_folded() { 1 } else { 2 } })
}

/// `g₁(a) = f_{xy}(ρ_a) + 4 = tr(ρ_a(xy))²`.
pub fn g1(c: &ComponentIndex, a: C64) -> Result<C64> {
    Ok(f_gamma(&rho_a(c, a)?, &Word::from_syllables([(0, 1), (1, 1)]))? + 4.0)
}

/// The unique critical point `−λ⁻¹τ / (λ − λ⁻¹)` of `g₁`.
pub fn g1_critical_point(c: &ComponentIndex) -> Result<C64> {
    c.require_curve()?;
    let l = c.lambda();
    Ok(-l.inv() * c.tau() / (l - l.inv()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TOL: f64 = 1e-9;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn xy() -> Word {
        Word::from_syllables([(0, 1), (1, 1)])
    }

    #[test]
    fn counts() {
        assert_eq!(component_counts(2, 3), (4, 1));
        assert_eq!(component_counts(2, 2), (4, 1));
        assert_eq!(component_counts(3, 5), (6, 2));
    }

    #[test]
    fn rho_a_basics() {
        let ci = ComponentIndex::new(2, 3, 1, 1).unwrap();
        let rep = rho_a(&ci, c(0.3, -0.7)).unwrap();
        assert!(rep.images()[0].trace().norm() < TOL);
        for m in rep.images() {
            assert!((m.det() - ONE).norm() < TOL);
        }
        assert!(rep.images()[0].pow(2).is_central(TOL));
        assert!(rep.images()[1].pow(3).is_central(TOL));
        assert!(rho_a(&ComponentIndex::new(2, 3, 0, 1).unwrap(), ONE).is_err());
        assert!(ComponentIndex::new(2, 3, 2, 1).is_err());
    }

    #[test]
    fn xy_trace_formula() {
        for ci in [ComponentIndex::new(5, 7, 2, 3).unwrap(), ComponentIndex::new(4, 4, 1, 2).unwrap()] {
            let a = c(1.1, 0.4);
            let l = ci.lambda();
            let want = (l - l.inv()) * a + l.inv() * ci.tau();
            let got = word_eval(&rho_a(&ci, a).unwrap(), &xy()).unwrap().trace();
            assert!(close(got, want, TOL));
        }
    }

    #[test]
    fn word_eval_edge_cases() {
        let rep = rho_a(&ComponentIndex::new(3, 4, 1, 1).unwrap(), c(0.2, 0.1)).unwrap();
        assert!(word_eval(&rep, &Word::identity()).unwrap().approx_eq(&ProjMatrix::identity(), TOL));
        let w = Word::letter(0).mul(&Word::letter(0).inverse());
        assert!(word_eval(&rep, &w).unwrap().approx_eq(&ProjMatrix::identity(), TOL));
        assert_eq!(
            word_eval(&rep, &Word::letter(2)).unwrap_err(),
            Error::GeneratorOutOfRange { index: 2, count: 2 }
        );
    }

    #[test]
    fn f_gamma_values() {
        let id = ProjRep::new(vec![ProjMatrix::identity()]);
        assert!(f_gamma(&id, &Word::letter(0)).unwrap().norm() < TOL);
        let ell = ProjRep::new(vec![ProjMatrix::diagonal(c(0.0, 1.0))]);
        assert!(close(f_gamma(&ell, &Word::letter(0)).unwrap(), c(-4.0, 0.0), TOL));
        let par = ProjRep::new(vec![ProjMatrix::new(ONE, ONE, ZERO, ONE, TOL).unwrap()]);
        assert!(f_gamma(&par, &Word::letter(0)).unwrap().norm() < TOL);
    }

    #[test]
    fn trace_tuple_sizes() {
        assert_eq!(trace_words(2).len(), 3);
        assert_eq!(trace_words(3).len(), 7);
        for n in 1..8 {
            assert_eq!(trace_words(n).len(), n * (n * n + 5) / 6);
        }
        let id = ProjRep::new(vec![ProjMatrix::identity(); 2]);
        for t in trace_tuple(&id) {
            assert!(close(t, c(2.0, 0.0), TOL));
        }
    }

    #[test]
    fn character_equality() {
        let ci = ComponentIndex::new(2, 5, 1, 2).unwrap();
        let a = c(0.7, 0.2);
        let r = rho_a(&ci, a).unwrap();
        assert!(char_equal(&r, &r, TOL).unwrap());
        assert!(char_equal(&r, &rho_a(&ci, ci.tau() - a).unwrap(), TOL).unwrap());
        let ci = ComponentIndex::new(3, 7, 1, 2).unwrap();
        let r = rho_a(&ci, a).unwrap();
        assert!(!char_equal(&r, &rho_a(&ci, c(-0.4, 1.3)).unwrap(), TOL).unwrap());
        assert!(!char_equal(&r, &rho_a(&ci, ci.tau() - a).unwrap(), TOL).unwrap());
        let one = ProjRep::new(vec![ProjMatrix::identity()]);
        assert_eq!(char_equal(&r, &one, TOL), Err(Error::GeneratorCountMismatch(2, 1)));
    }

    #[test]
    fn reducibility() {
        let diag = ProjRep::new(vec![ProjMatrix::diagonal(c(2.0, 0.0)), ProjMatrix::diagonal(c(0.0, 3.0))]);
        assert!(is_reducible(&diag, 1e-6));
        let ci = ComponentIndex::new(3, 5, 1, 2).unwrap();
        assert!(is_reducible(&rho_a(&ci, ci.mu()).unwrap(), 1e-6));
        assert!(is_reducible(&rho_a(&ci, ci.mu().inv()).unwrap(), 1e-6));
        assert!(!is_reducible(&rho_a(&ci, c(0.5, 0.5)).unwrap(), 1e-6));
    }

    /// Loxodromic with the given eigenlines.
    fn with_eigenlines(v1: [C64; 2], v2: [C64; 2], ev: f64) -> ProjMatrix {
        let p = ProjMatrix::normalized(v1[0], v2[0], v1[1], v2[1]).unwrap();
        p.mul(&ProjMatrix::diagonal(c(ev, 0.0))).mul(&p.inverse())
    }

    #[test]
    fn reducibility_needs_common_line_for_three_generators() {
        // each pair shares an eigenline but the three share none
        let (e1, e2, d) = ([ONE, ZERO], [ZERO, ONE], [ONE, ONE]);
        let a = with_eigenlines(e1, e2, 2.0);
        let b = with_eigenlines(e2, d, 3.0);
        let cc = with_eigenlines(d, e1, 5.0);
        for (x, y) in [(a, b), (b, cc), (a, cc)] {
            assert!(is_reducible(&ProjRep::new(vec![x, y]), 1e-6));
        }
        assert!(!is_reducible(&ProjRep::new(vec![a, b, cc]), 1e-6));
        assert!(is_reducible(&ProjRep::new(vec![a, with_eigenlines(e1, d, 3.0), with_eigenlines(d, e1, 5.0)]), 1e-6));
    }

    #[test]
    fn dihedral_detection() {
        let x = ProjMatrix::diagonal(c(0.0, 1.0));
        let y = ProjMatrix::new(ZERO, ONE, -ONE, ZERO, TOL).unwrap();
        assert!(is_dihedral(&ProjRep::new(vec![x, y]), 1e-6).unwrap());
        // both generators antidiagonal: found through their product
        let y2 = ProjMatrix::new(ZERO, c(2.0, 0.0), c(-0.5, 0.0), ZERO, TOL).unwrap();
        assert!(is_dihedral(&ProjRep::new(vec![y, y2]), 1e-6).unwrap());
        let ci = ComponentIndex::new(3, 5, 1, 1).unwrap();
        assert!(!is_dihedral(&rho_a(&ci, c(0.3, 0.9)).unwrap(), 1e-6).unwrap());
        let diag = ProjRep::new(vec![ProjMatrix::diagonal(c(2.0, 0.0)), ProjMatrix::diagonal(c(0.0, 3.0))]);
        assert!(!is_dihedral(&diag, 1e-6).unwrap());
        let central = ProjRep::new(vec![ProjMatrix::identity(), ProjMatrix::identity().neg()]);
        assert_eq!(is_dihedral(&central, 1e-6), Err(Error::CentralImage));
    }

    #[test]
    fn trefoil_group_dihedral_character() {
        // on Z/2 * Z/3 the dihedral character sits where tr(xy) = 0
        let ci = ComponentIndex::new(2, 3, 1, 1).unwrap();
        assert!(is_dihedral(&rho_a(&ci, ci.tau() / 2.0).unwrap(), 1e-6).unwrap());
        assert!(!is_dihedral(&rho_a(&ci, c(0.1, 0.8)).unwrap(), 1e-6).unwrap());
    }

    #[test]
    fn reducible_parameter_counts() {
        let r = reducible_parameters(&ComponentIndex::new(3, 3, 1, 1).unwrap()).unwrap();
        assert_eq!(r.characters, 2);
        assert!(close(r.values[0], C64::from_polar(1.0, PI / 3.0), TOL));
        assert_eq!(reducible_parameters(&ComponentIndex::new(2, 3, 1, 1).unwrap()).unwrap().characters, 1);
        let r = reducible_parameters(&ComponentIndex::new(2, 2, 1, 1).unwrap()).unwrap();
        assert_eq!(r.characters, 1);
        assert!(close(r.values[0], c(0.0, 1.0), TOL));
        assert!(close(r.values[1], c(0.0, -1.0), TOL));
    }

    #[test]
    fn g1_critical_point_zeroes_trace() {
        let ci = ComponentIndex::new(5, 7, 2, 1).unwrap();
        let a0 = g1_critical_point(&ci).unwrap();
        assert!(g1(&ci, a0).unwrap().norm() < TOL);
    }

    fn arb_matrix() -> impl Strategy<Value = ProjMatrix> {
        prop::array::uniform4((-2.0f64..2.0, -2.0f64..2.0))
            .prop_filter_map("singular", |e| {
                let z: Vec<C64> = e.iter().map(|&(r, i)| c(r, i)).collect();
                let det = z[0] * z[3] - z[1] * z[2];
                if det.norm() < 0.1 {
                    return None;
                }
                ProjMatrix::normalized(z[0], z[1], z[2], z[3]).ok()
            })
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec((0usize..2, prop_oneof![Just(-1i64), Just(1i64)]), 0..=20).prop_map(Word::from_syllables)
    }

    proptest! {
        #[test]
        fn words_have_unit_determinant(a in arb_matrix(), b in arb_matrix(), w in arb_word()) {
            let rep = ProjRep::new(vec![a, b]);
            let m = word_eval(&rep, &w).unwrap();
            let scale = m.entries().iter().flatten().map(|z| z.norm_sqr()).sum::<f64>();
            prop_assert!((m.det() - ONE).norm() < 1e-9 * scale.max(1.0));
        }

        #[test]
        fn fricke_identity(a in arb_matrix(), b in arb_matrix()) {
            let lhs = a.mul(&b).trace() + a.mul(&b.inverse()).trace();
            prop_assert!(close(lhs, a.trace() * b.trace(), 1e-9));
        }

        #[test]
        fn f_gamma_sign_insensitive(a in arb_matrix(), b in arb_matrix(), w in arb_word(), g in 0usize..2) {
            let rep = ProjRep::new(vec![a, b]);
            let f1 = f_gamma(&rep, &w).unwrap();
            let f2 = f_gamma(&rep.negate_generator(g), &w).unwrap();
            prop_assert!(close(f1, f2, 1e-7));
        }

        #[test]
        fn char_equal_reflexive_and_symmetric(a in arb_matrix(), b in arb_matrix(), c2 in arb_matrix(), g in 0usize..2) {
            let r1 = ProjRep::new(vec![a, b]);
            let r2 = ProjRep::new(vec![a, c2]);
            prop_assert!(char_equal(&r1, &r1, 1e-9).unwrap());
            prop_assert!(char_equal(&r1, &r1.negate_generator(g), 1e-9).unwrap());
            prop_assert_eq!(char_equal(&r1, &r2, 1e-9).unwrap(), char_equal(&r2, &r1, 1e-9).unwrap());
        }
    }
}
