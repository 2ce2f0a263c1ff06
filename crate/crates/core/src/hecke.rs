//! The 0-Hecke monoid on basis elements: `H_u H_s = H_{us}` when `us > u`
//! and `H_u` otherwise.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::rootsys::RootSystem;
use crate::weyl::{WeylElement, Word};

/// Demazure product of a word together with its length and excess.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeWordStats {
    pub delta: WeylElement,
    pub length: usize,
    /// `length - ℓ(delta)`; zero iff the word is reduced.
    pub excess: usize,
}

/// Serializable summary of [`HeckeWordStats`], with `δ` as its canonical
/// reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DemazureSummary {
    pub word: Word,
    pub delta: Word,
    pub delta_length: usize,
    pub length: usize,
    pub excess: usize,
}

impl RootSystem {
    pub fn hecke_mult(&self, u: &WeylElement, i: usize) -> WeylElement {
        if u.sends_simple_positive(i) {
            self.mul_simple_right(u, i)
        } else {
            u.clone()
        }
    }

    pub fn demazure_product(&self, q: &Word) -> Result<HeckeWordStats> {
        q.check_range(self.rank())?;
        Ok(self.demazure_stats(q))
    }

    pub(crate) fn demazure_stats(&self, q: &Word) -> HeckeWordStats {
        let delta = self.demazure_element(q.letters().iter().copied());
        HeckeWordStats {
            length: q.len(),
            excess: q.len() - delta.length(),
            delta,
        }
    }

    /// Left fold of [`RootSystem::hecke_mult`] from the identity.
    pub(crate) fn demazure_element(&self, letters: impl IntoIterator<Item = usize>) -> WeylElement {
        let mut u = self.identity();
        for i in letters {
            if u.sends_simple_positive(i) {
                u = self.mul_simple_right(&u, i);
            }
        }
        u
    }

    pub fn demazure_summary(&self, q: &Word) -> Result<DemazureSummary> {
        let stats = self.demazure_product(q)?;
        Ok(DemazureSummary {
            word: q.clone(),
            delta: self.canonical_reduced_word(&stats.delta),
            delta_length: stats.delta.length(),
            length: stats.length,
            excess: stats.excess,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn hecke_mult_examples() {
        let a2 = RootSystem::from_label("A2").unwrap();
        let s1 = a2.simple_reflection(1);
        assert_eq!(a2.hecke_mult(&a2.identity(), 1), s1);
        assert_eq!(a2.hecke_mult(&s1, 1), s1);
        let w0 = a2.longest_element();
        assert_eq!(a2.hecke_mult(&w0, 2), w0);
    }

    #[test]
    fn demazure_examples() {
        let a2 = RootSystem::from_label("A2").unwrap();
        let d = a2.demazure_product(&w("")).unwrap();
        assert!(d.delta.is_identity());
        assert_eq!(d.excess, 0);
        let d = a2.demazure_product(&w("1 1")).unwrap();
        assert_eq!(d.delta, a2.simple_reflection(1));
        assert_eq!(d.excess, 1);
        let d = a2.demazure_product(&w("1 2 1 2")).unwrap();
        assert_eq!(d.delta, a2.longest_element());
        assert_eq!(d.excess, 1);
        assert!(a2.demazure_product(&w("4")).is_err());
    }

    #[test]
    fn summary() {
        let a2 = RootSystem::from_label("A2").unwrap();
        let s = a2.demazure_summary(&w("2 1 2 1")).unwrap();
        assert_eq!(s.delta, w("1 2 1"));
        assert_eq!((s.length, s.delta_length, s.excess), (4, 3, 1));
    }
}
