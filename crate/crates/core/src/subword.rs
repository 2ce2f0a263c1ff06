//! Subword complexes `Δ(s, w)` and the Hecke subword index sets.
//!
//! A face of `Δ(s, w)` is a set `r` of positions of `s` whose complement
//! still contains a reduced word for `w`, decided as `δ(s ∖ r) ≥ w`. Faces
//! with `δ(s ∖ r) = w` are interior; the rest form the boundary.
//!
//! Everything here enumerates subsets of positions, so words longer than
//! [`MAX_ENUMERATION_LENGTH`] are refused.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::weyl::{WeylElement, Word};

pub const MAX_ENUMERATION_LENGTH: usize = 20;

/// Strictly increasing 1-based positions into a word.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexSequence(Vec<usize>);

impl IndexSequence {
    pub fn new(indices: Vec<usize>, word_len: usize) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&p| p == 0 || p > word_len) {
            return Err(Error::PositionOutOfRange {
                position: bad,
                len: word_len,
            });
        }
        if indices.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::Parse(format!(
                "positions {indices:?} are not strictly increasing"
            )));
        }
        Ok(IndexSequence(indices))
    }

    fn from_mask(mask: u32, len: usize) -> Self {
        IndexSequence((1..=len).filter(|p| mask & (1 << (p - 1)) != 0).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.0.binary_search(&position).is_ok()
    }

    pub fn is_subset_of(&self, other: &IndexSequence) -> bool {
        self.0.iter().all(|&p| other.contains(p))
    }

    /// Positions in `1..=len` not in `self`.
    pub fn complement(&self, len: usize) -> IndexSequence {
        IndexSequence((1..=len).filter(|&p| !self.contains(p)).collect())
    }
}

impl fmt::Display for IndexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Word(self.0.clone()))
    }
}

/// An element `t` of `T_{w,s}` with its excess `e(t) = |t| - ℓ(w)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeSubword {
    pub indices: IndexSequence,
    pub excess: usize,
}

/// The subword complex `Δ(s, w)` with all faces listed explicitly.
#[derive(Debug, Clone)]
pub struct SubwordComplex {
    word: Word,
    target: WeylElement,
    faces: Vec<IndexSequence>,
    interior: Vec<bool>,
    facets: Vec<IndexSequence>,
}

/// Reduced and interior Euler characteristics of a subword complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerCharacteristics {
    pub reduced: i64,
    pub interior: i64,
}

fn check_enumerable(s: &Word) -> Result<()> {
    if s.len() > MAX_ENUMERATION_LENGTH {
        return Err(Error::WordTooLong {
            length: s.len(),
            bound: MAX_ENUMERATION_LENGTH,
        });
    }
    Ok(())
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl RootSystem {
    /// Calls `visit(mask, δ(subword at mask))` for every subset of positions.
    fn for_each_subword_demazure(&self, s: &Word, mut visit: impl FnMut(u32, &WeylElement)) {
        fn rec(
            rs: &RootSystem,
            letters: &[usize],
            pos: usize,
            mask: u32,
            delta: &WeylElement,
            visit: &mut dyn FnMut(u32, &WeylElement),
        ) {
            if pos == letters.len() {
                visit(mask, delta);
                return;
            }
            rec(rs, letters, pos + 1, mask, delta, visit);
            let next = rs.hecke_mult(delta, letters[pos]);
            rec(rs, letters, pos + 1, mask | (1 << pos), &next, visit);
        }
        rec(self, s.letters(), 0, 0, &self.identity(), &mut visit);
    }

    /// `T_{w,s}`: index sequences whose 0-Hecke product is `H_w`, sorted
    /// lexicographically.
    pub fn hecke_subwords(&self, w: &WeylElement, s: &Word) -> Result<Vec<HeckeSubword>> {
        s.check_range(self.rank())?;
        check_enumerable(s)?;
        let mut out = Vec::new();
        self.for_each_subword_demazure(s, |mask, delta| {
            if delta == w {
                let indices = IndexSequence::from_mask(mask, s.len());
                out.push(HeckeSubword {
                    excess: indices.len() - w.length(),
                    indices,
                });
            }
        });
        out.sort_by(|a, b| a.indices.cmp(&b.indices));
        Ok(out)
    }

    /// `RT_{w,s}`: the excess-zero members of `T_{w,s}`.
    pub fn reduced_subwords(&self, w: &WeylElement, s: &Word) -> Result<Vec<IndexSequence>> {
        Ok(self
            .hecke_subwords(w, s)?
            .into_iter()
            .filter(|t| t.excess == 0)
            .map(|t| t.indices)
            .collect())
    }

    pub fn build_complex(&self, w: &WeylElement, s: &Word) -> Result<SubwordComplex> {
        s.check_range(self.rank())?;
        check_enumerable(s)?;
        if !self.bruhat_leq(w, &self.demazure_element(s.letters().iter().copied())) {
            return Err(Error::TargetNotContained);
        }
        let n = s.len();
        let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut entries: Vec<(IndexSequence, bool)> = Vec::new();
        self.for_each_subword_demazure(s, |kept, delta| {
            if self.bruhat_leq(w, delta) {
                let face = IndexSequence::from_mask(full & !kept, n);
                entries.push((face, delta == w));
            }
        });
        entries.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        let (faces, interior): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
        let face_set: HashSet<&IndexSequence> = faces.iter().collect();
        let facets: Vec<IndexSequence> = faces
            .iter()
            .filter(|f| {
                (1..=n).filter(|p| !f.contains(*p)).all(|p| {
                    let mut bigger = f.0.clone();
                    bigger.push(p);
                    bigger.sort_unstable();
                    !face_set.contains(&IndexSequence(bigger))
                })
            })
            .cloned()
            .collect();
        Ok(SubwordComplex {
            word: s.clone(),
            target: w.clone(),
            faces,
            interior,
            facets,
        })
    }

    /// `Σ_{t ∈ T_{w,s}} (-1)^{e(t)}`, which always equals 1.
    pub fn euler_signed_sum(&self, w: &WeylElement, s: &Word) -> Result<i64> {
        s.check_range(self.rank())?;
        if !self.bruhat_leq(w, &self.demazure_element(s.letters().iter().copied())) {
            return Err(Error::TargetNotContained);
        }
        let total = self
            .hecke_subwords(w, s)?
            .iter()
            .map(|t| sign(t.excess))
            .sum();
        assert_eq!(total, 1, "signed Hecke subword sum must be 1");
        Ok(total)
    }
}

impl SubwordComplex {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn target(&self) -> &WeylElement {
        &self.target
    }

    /// Faces sorted by size, then lexicographically.
    pub fn faces(&self) -> &[IndexSequence] {
        &self.faces
    }

    pub fn facets(&self) -> &[IndexSequence] {
        &self.facets
    }

    /// `ℓ(s) - ℓ(w) - 1`.
    pub fn dimension(&self) -> i64 {
        self.word.len() as i64 - self.target.length() as i64 - 1
    }

    pub fn is_face(&self, r: &IndexSequence) -> bool {
        self.faces
            .binary_search_by(|f| f.len().cmp(&r.len()).then_with(|| f.cmp(r)))
            .is_ok()
    }

    /// Faces `r` with `δ(s ∖ r) ≠ w`.
    pub fn boundary_faces(&self) -> Vec<IndexSequence> {
        self.faces
            .iter()
            .zip(&self.interior)
            .filter(|(_, &int)| !int)
            .map(|(f, _)| f.clone())
            .collect()
    }

    pub fn euler_characteristics(&self) -> EulerCharacteristics {
        let chi = |it: &mut dyn Iterator<Item = &IndexSequence>| -> i64 {
            it.map(|f| -sign(f.len())).sum()
        };
        let reduced = chi(&mut self.faces.iter());
        let boundary = chi(&mut self
            .faces
            .iter()
            .zip(&self.interior)
            .filter(|(_, &i)| !i)
            .map(|(f, _)| f));
        let interior = reduced - boundary;
        let expected = if self.dimension().rem_euclid(2) == 0 {
            1
        } else {
            -1
        };
        assert_eq!(
            interior, expected,
            "interior Euler characteristic of a ball or sphere"
        );
        EulerCharacteristics { reduced, interior }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> RootSystem {
        RootSystem::from_label("A2").unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn seqs(v: &[&[usize]]) -> Vec<IndexSequence> {
        v.iter().map(|s| IndexSequence(s.to_vec())).collect()
    }

    #[test]
    fn index_sequence_validation() {
        assert!(IndexSequence::new(vec![1, 3], 3).is_ok());
        assert!(IndexSequence::new(vec![3, 1], 3).is_err());
        assert!(IndexSequence::new(vec![1, 1], 3).is_err());
        assert!(IndexSequence::new(vec![4], 3).is_err());
        assert_eq!(
            IndexSequence(vec![2]).complement(3),
            IndexSequence(vec![1, 3])
        );
    }

    #[test]
    fn hecke_subword_examples() {
        let a2 = setup();
        let s1 = a2.simple_reflection(1);
        let t = a2.hecke_subwords(&s1, &w("1 2 1")).unwrap();
        let got: Vec<_> = t.iter().map(|h| (h.indices.0.clone(), h.excess)).collect();
        assert_eq!(got, vec![(vec![1], 0), (vec![1, 3], 1), (vec![3], 0)]);
        let t = a2.hecke_subwords(&a2.identity(), &w("1 2 1")).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t[0].indices.is_empty());
        let t = a2.hecke_subwords(&s1, &w("2 1 2")).unwrap();
        assert_eq!(
            t.iter().map(|h| h.indices.clone()).collect::<Vec<_>>(),
            seqs(&[&[2]])
        );
        let w0 = a2.longest_element();
        assert!(a2.hecke_subwords(&w0, &w("1 2")).unwrap().is_empty());
    }

    #[test]
    fn reduced_subword_examples() {
        let a2 = setup();
        let s1 = a2.simple_reflection(1);
        assert_eq!(
            a2.reduced_subwords(&s1, &w("1 2 1")).unwrap(),
            seqs(&[&[1], &[3]])
        );
        assert_eq!(
            a2.reduced_subwords(&a2.identity(), &w("2 1")).unwrap(),
            seqs(&[&[]])
        );
        let s1s2 = a2.word_to_element(&w("1 2")).unwrap();
        assert_eq!(
            a2.reduced_subwords(&s1s2, &w("1 2 1")).unwrap(),
            seqs(&[&[1, 2]])
        );
    }

    #[test]
    fn complex_examples() {
        let a2 = setup();
        let s1 = a2.simple_reflection(1);
        let c = a2.build_complex(&s1, &w("1 2 1")).unwrap();
        assert_eq!(
            c.faces(),
            seqs(&[&[], &[1], &[2], &[3], &[1, 2], &[2, 3]]).as_slice()
        );
        assert_eq!(c.facets(), seqs(&[&[1, 2], &[2, 3]]).as_slice());
        assert_eq!(c.dimension(), 1);
        assert_eq!(c.boundary_faces(), seqs(&[&[], &[1], &[3]]));
        assert_eq!(
            c.euler_characteristics(),
            EulerCharacteristics {
                reduced: 0,
                interior: -1
            }
        );
        assert!(c.is_face(&IndexSequence(vec![2, 3])));
        assert!(!c.is_face(&IndexSequence(vec![1, 3])));

        let c = a2.build_complex(&s1, &w("1")).unwrap();
        assert_eq!(c.faces(), seqs(&[&[]]).as_slice());
        assert_eq!(c.dimension(), -1);
        assert!(c.boundary_faces().is_empty());
        assert_eq!(
            c.euler_characteristics(),
            EulerCharacteristics {
                reduced: -1,
                interior: -1
            }
        );

        let w0 = a2.longest_element();
        let c = a2.build_complex(&w0, &w("1 2 1")).unwrap();
        assert_eq!(c.faces(), seqs(&[&[]]).as_slice());
        assert!(c.boundary_faces().is_empty());
        assert_eq!(
            c.euler_characteristics(),
            EulerCharacteristics {
                reduced: -1,
                interior: -1
            }
        );

        assert_eq!(
            a2.build_complex(&w0, &w("1 2")).unwrap_err(),
            Error::TargetNotContained
        );
    }

    #[test]
    fn signed_sums() {
        let a2 = setup();
        let s1 = a2.simple_reflection(1);
        assert_eq!(a2.euler_signed_sum(&s1, &w("1 2 1")).unwrap(), 1);
        assert_eq!(a2.euler_signed_sum(&a2.identity(), &w("2 2 1")).unwrap(), 1);
        let b2 = RootSystem::from_label("B2").unwrap();
        assert_eq!(
            b2.euler_signed_sum(&b2.simple_reflection(1), &w("1 2 1 2"))
                .unwrap(),
            1
        );
        assert_eq!(
            a2.euler_signed_sum(&a2.simple_reflection(2), &w("1 1"))
                .unwrap_err(),
            Error::TargetNotContained
        );
    }

    #[test]
    fn word_length_guard() {
        let a2 = setup();
        let long = Word(vec![1; 21]);
        assert!(matches!(
            a2.hecke_subwords(&a2.identity(), &long),
            Err(Error::WordTooLong { .. })
        ));
    }
}
