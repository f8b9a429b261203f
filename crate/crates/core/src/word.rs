//! Freely reduced words in numbered generators.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A freely reduced word stored as syllables `g^e` with `e ≠ 0` and no two
/// adjacent syllables on the same generator.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<(usize, i64)>", from = "Vec<(usize, i64)>")]
pub struct Word {
    syllables: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    pub fn letter(g: usize) -> Word {
        Word::power(g, 1)
    }

    pub fn power(g: usize, e: i64) -> Word {
        let mut w = Word::identity();
        w.push(g, e);
        w
    }

    /// Builds and reduces a word from `(generator, exponent)` pairs.
    pub fn from_syllables<I: IntoIterator<Item = (usize, i64)>>(it: I) -> Word {
        let mut w = Word::identity();
        for (g, e) in it {
            w.push(g, e);
        }
        w
    }

    fn push(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(last) if last.0 == g => {
                last.1 += e;
                if last.1 == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((g, e)),
        }
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters `g^{±1}`.
    pub fn len(&self) -> u64 {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.syllables {
            w.push(g, e);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word { syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    /// Total exponent of generator `g`, i.e. its image in the abelianization.
    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.syllables.iter().filter(|s| s.0 == g).map(|s| s.1).sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.syllables.iter().map(|s| s.0).max()
    }

    /// Renders with the given generator names, e.g. `x^2 h^-1`.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_identity() {
            return "1".to_string();
        }
        let name = |g: usize| names.get(g).cloned().unwrap_or_else(|| format!("g{g}"));
        self.syllables
            .iter()
            .map(|&(g, e)| if e == 1 { name(g) } else { format!("{}^{}", name(g), e) })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl From<Word> for Vec<(usize, i64)> {
    fn from(w: Word) -> Self {
        w.syllables
    }
}

impl From<Vec<(usize, i64)>> for Word {
    fn from(v: Vec<(usize, i64)>) -> Self {
        Word::from_syllables(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduction() {
        let w = Word::from_syllables([(0, 1), (0, -1)]);
        assert!(w.is_identity());
        let w = Word::from_syllables([(0, 2), (1, 1), (1, -1), (0, 3)]);
        assert_eq!(w.syllables(), &[(0, 5)]);
        assert_eq!(w.len(), 5);
    }

    #[test]
    fn commutator_abelianizes_to_zero() {
        let c = Word::commutator(&Word::letter(0), &Word::letter(1));
        assert_eq!(c.len(), 4);
        assert_eq!(c.exponent_sum(0), 0);
        assert_eq!(c.exponent_sum(1), 0);
        assert_eq!(c.to_string(), "g0 g1 g0^-1 g1^-1");
    }

    #[test]
    fn serde_roundtrip() {
        let w = Word::from_syllables([(2, -3), (0, 1)]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, "[[2,-3],[0,1]]");
        assert_eq!(serde_json::from_str::<Word>(&s).unwrap(), w);
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec((0usize..3, -3i64..=3), 0..12).prop_map(Word::from_syllables)
    }

    proptest! {
        #[test]
        fn inverse_cancels(w in arb_word()) {
            prop_assert!(w.mul(&w.inverse()).is_identity());
            prop_assert!(w.inverse().mul(&w).is_identity());
        }

        #[test]
        fn multiplication_associative(a in arb_word(), b in arb_word(), c in arb_word()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }
    }
}
