//! Weyl group elements, words, reduced expressions and Bruhat order.
//!
//! Words act left to right: the word `(i_1, ..., i_k)` denotes
//! `s_{i_1} s_{i_2} ... s_{i_k}`. An element is stored as its action on the
//! root lattice (column `j` of the matrix is `x(α_j)`), with the length
//! cached alongside.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};

/// Default bound on the length of elements handed to
/// [`RootSystem::all_reduced_words`].
pub const DEFAULT_REDUCED_WORD_BOUND: usize = 16;

/// Default guard on the group order for [`RootSystem::enumerate_weyl_group`].
pub const DEFAULT_GROUP_GUARD: u64 = 400_000;

/// A sequence of 1-based simple-reflection indices, possibly non-reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word with the 1-based position `j` deleted.
    pub fn without(&self, j: usize) -> Word {
        let mut letters = self.0.clone();
        letters.remove(j - 1);
        Word(letters)
    }

    /// Letters at the given 1-based positions, in order.
    pub fn subword(&self, positions: &[usize]) -> Word {
        Word(positions.iter().map(|&p| self.0[p - 1]).collect())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn check_range(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|&&l| l == 0 || l > rank) {
            Some(&letter) => Err(Error::LetterOutOfRange { letter, rank }),
            None => Ok(()),
        }
    }
}

/// Accepts `"1 2 1"`, `"s1 s2 s1"`, `"1,2,1"`, or `""` / `"e"` for the
/// empty word.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',') {
            let tok = tok.trim();
            if tok.is_empty() || tok == "e" || tok == "()" {
                continue;
            }
            let digits = tok.strip_prefix(['s', 'S']).unwrap_or(tok);
            let letter: usize = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad letter {tok:?} in word {s:?}")))?;
            letters.push(letter);
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

/// A Weyl group element given by its integer action on the root lattice.
///
/// Equality and hashing use the action matrix only.
#[derive(Debug, Clone)]
pub struct WeylElement {
    rank: usize,
    /// Row-major; column `j` holds `x(α_{j+1})`.
    action: Vec<i32>,
    length: usize,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.action.hash(state);
    }
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut action = vec![0; rank * rank];
        for i in 0..rank {
            action[i * rank + i] = 1;
        }
        WeylElement {
            rank,
            action,
            length: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// The action matrix, row-major, column `j` being `x(α_{j+1})`.
    pub fn action(&self) -> &[i32] {
        &self.action
    }

    pub fn apply(&self, v: &Root) -> Root {
        let r = self.rank;
        Root(
            (0..r)
                .map(|row| (0..r).map(|c| self.action[row * r + c] * v.0[c]).sum())
                .collect(),
        )
    }

    /// Sign of `x(α_i)`: true when it is a positive root.
    pub fn sends_simple_positive(&self, i: usize) -> bool {
        let r = self.rank;
        let col = i - 1;
        for row in 0..r {
            let c = self.action[row * r + col];
            if c != 0 {
                return c > 0;
            }
        }
        unreachable!("Weyl group elements are invertible")
    }

    /// `ℓ(x s_i) < ℓ(x)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        !self.sends_simple_positive(i)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..=self.rank)
            .filter(|&i| self.has_right_descent(i))
            .collect()
    }

    fn first_right_descent(&self) -> Option<usize> {
        (1..=self.rank).find(|&i| self.has_right_descent(i))
    }
}

impl RootSystem {
    /// `x · s_i`.
    pub fn mul_simple_right(&self, x: &WeylElement, i: usize) -> WeylElement {
        let r = self.rank();
        let ascent = x.sends_simple_positive(i);
        let a = &self.cartan_matrix()[i - 1];
        let mut action = x.action.clone();
        let col_i = i - 1;
        for row in 0..r {
            let xi = x.action[row * r + col_i];
            for (j, &aij) in a.iter().enumerate() {
                if aij != 0 {
                    action[row * r + j] -= aij * xi;
                }
            }
        }
        WeylElement {
            rank: r,
            action,
            length: if ascent { x.length + 1 } else { x.length - 1 },
        }
    }

    /// `s_i · x`.
    pub fn mul_simple_left(&self, i: usize, x: &WeylElement) -> WeylElement {
        let r = self.rank();
        let a = &self.cartan_matrix()[i - 1];
        let mut action = x.action.clone();
        for col in 0..r {
            let pairing: i32 = (0..r).map(|row| a[row] * x.action[row * r + col]).sum();
            action[(i - 1) * r + col] -= pairing;
        }
        let length = self.count_inversions(&action);
        WeylElement {
            rank: r,
            action,
            length,
        }
    }

    fn count_inversions(&self, action: &[i32]) -> usize {
        let r = self.rank();
        self.positive_roots()
            .iter()
            .filter(|a| {
                for row in 0..r {
                    let c: i32 = (0..r).map(|col| action[row * r + col] * a.0[col]).sum();
                    if c != 0 {
                        return c < 0;
                    }
                }
                unreachable!("image of a root is nonzero")
            })
            .count()
    }

    /// Product `u · v`.
    pub fn multiply(&self, u: &WeylElement, v: &WeylElement) -> WeylElement {
        let r = self.rank();
        let mut action = vec![0; r * r];
        for row in 0..r {
            for col in 0..r {
                action[row * r + col] = (0..r)
                    .map(|k| u.action[row * r + k] * v.action[k * r + col])
                    .sum();
            }
        }
        let length = self.count_inversions(&action);
        WeylElement {
            rank: r,
            action,
            length,
        }
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        self.mul_simple_right(&WeylElement::identity(self.rank()), i)
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    /// Product of the simple reflections of `w`, left to right.
    pub fn word_to_element(&self, w: &Word) -> Result<WeylElement> {
        w.check_range(self.rank())?;
        Ok(self.word_product(w))
    }

    /// Unchecked variant of [`RootSystem::word_to_element`].
    pub(crate) fn word_product(&self, w: &Word) -> WeylElement {
        w.0.iter()
            .fold(self.identity(), |x, &i| self.mul_simple_right(&x, i))
    }

    pub fn is_reduced(&self, w: &Word) -> bool {
        if w.check_range(self.rank()).is_err() {
            return false;
        }
        let mut x = self.identity();
        for &i in &w.0 {
            if !x.sends_simple_positive(i) {
                return false;
            }
            x = self.mul_simple_right(&x, i);
        }
        true
    }

    /// A reduced word built from right descents (largest position first).
    fn right_descent_word(&self, x: &WeylElement) -> Word {
        let mut letters = Vec::with_capacity(x.length);
        let mut y = x.clone();
        while let Some(i) = y.first_right_descent() {
            letters.push(i);
            y = self.mul_simple_right(&y, i);
        }
        letters.reverse();
        Word(letters)
    }

    pub fn inverse(&self, x: &WeylElement) -> WeylElement {
        self.word_product(&self.right_descent_word(x).reversed())
    }

    /// `ℓ(s_i x) < ℓ(x)`.
    pub fn has_left_descent(&self, x: &WeylElement, i: usize) -> bool {
        self.inverse(x).has_right_descent(i)
    }

    pub fn left_descents(&self, x: &WeylElement) -> Vec<usize> {
        self.inverse(x).right_descents()
    }

    /// Bruhat order via the lifting property: if `v s < v` then
    /// `u ≤ v` iff `min(u, u s) ≤ v s`. Linear in `ℓ(v)`.
    pub fn bruhat_leq(&self, u: &WeylElement, v: &WeylElement) -> bool {
        let mut u = u.clone();
        let mut v = v.clone();
        loop {
            if u.length > v.length {
                return false;
            }
            if u.length == 0 {
                return true;
            }
            let i = v.first_right_descent().expect("v has positive length");
            v = self.mul_simple_right(&v, i);
            if u.has_right_descent(i) {
                u = self.mul_simple_right(&u, i);
            }
        }
    }

    /// `γ_k = s_{i_1} ⋯ s_{i_{k-1}}(α_{i_k})` for a reduced word.
    pub fn gamma_sequence(&self, w: &Word) -> Result<GammaSequence> {
        w.check_range(self.rank())?;
        if !self.is_reduced(w) {
            return Err(Error::NotReduced(w.0.clone()));
        }
        let mut prefix = self.identity();
        let mut gammas = Vec::with_capacity(w.len());
        for &i in &w.0 {
            gammas.push(prefix.apply(&self.simple_root(i)));
            prefix = self.mul_simple_right(&prefix, i);
        }
        let distinct: HashSet<&Root> = gammas.iter().collect();
        assert!(
            gammas.iter().all(Root::is_positive) && distinct.len() == gammas.len(),
            "γ-sequence of a reduced word must consist of distinct positive roots"
        );
        Ok(GammaSequence {
            word: w.clone(),
            gammas,
        })
    }

    /// `I(x^{-1}) = Φ^+ ∩ xΦ^-`, listed in the order of `positive_roots()`.
    pub fn inversion_set_of_inverse(&self, x: &WeylElement) -> Vec<Root> {
        let xinv = self.inverse(x);
        self.positive_roots()
            .iter()
            .filter(|a| xinv.apply(a).is_negative())
            .cloned()
            .collect()
    }

    /// Lexicographically least reduced word, by greedy smallest left descent.
    pub fn canonical_reduced_word(&self, x: &WeylElement) -> Word {
        let mut letters = Vec::with_capacity(x.length);
        let mut y = x.clone();
        while y.length > 0 {
            let i = *self
                .left_descents(&y)
                .first()
                .expect("nonidentity has a left descent");
            letters.push(i);
            y = self.mul_simple_left(i, &y);
        }
        Word(letters)
    }

    /// All reduced words of `x`, in lexicographic order.
    pub fn all_reduced_words(&self, x: &WeylElement) -> Result<Vec<Word>> {
        self.all_reduced_words_bounded(x, DEFAULT_REDUCED_WORD_BOUND)
    }

    pub fn all_reduced_words_bounded(&self, x: &WeylElement, bound: usize) -> Result<Vec<Word>> {
        if x.length > bound {
            return Err(Error::LengthBoundExceeded {
                length: x.length,
                bound,
            });
        }
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(x.length);
        self.reduced_words_rec(x, &mut prefix, &mut out);
        Ok(out)
    }

    /// At most `limit` reduced words of `x`, the lexicographically first
    /// ones.
    pub fn reduced_words_up_to(&self, x: &WeylElement, limit: usize) -> Vec<Word> {
        fn rec(
            rs: &RootSystem,
            x: &WeylElement,
            prefix: &mut Vec<usize>,
            out: &mut Vec<Word>,
            limit: usize,
        ) {
            if out.len() >= limit {
                return;
            }
            if x.length == 0 {
                out.push(Word(prefix.clone()));
                return;
            }
            for i in rs.left_descents(x) {
                prefix.push(i);
                rec(rs, &rs.mul_simple_left(i, x), prefix, out, limit);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, x, &mut Vec::new(), &mut out, limit);
        out
    }

    fn reduced_words_rec(&self, x: &WeylElement, prefix: &mut Vec<usize>, out: &mut Vec<Word>) {
        if x.length == 0 {
            out.push(Word(prefix.clone()));
            return;
        }
        for i in self.left_descents(x) {
            prefix.push(i);
            self.reduced_words_rec(&self.mul_simple_left(i, x), prefix, out);
            prefix.pop();
        }
    }

    /// True iff `x(α_i) > 0` for every `i ∈ parabolic`, i.e. `x ∈ W^P`.
    pub fn is_min_coset_rep(&self, x: &WeylElement, parabolic: &[usize]) -> bool {
        parabolic.iter().all(|&i| x.sends_simple_positive(i))
    }

    pub fn longest_element(&self) -> WeylElement {
        let mut x = self.identity();
        while let Some(i) = (1..=self.rank()).find(|&i| x.sends_simple_positive(i)) {
            x = self.mul_simple_right(&x, i);
        }
        x
    }

    pub fn enumerate_weyl_group(&self) -> Result<Vec<WeylElement>> {
        self.enumerate_weyl_group_guarded(DEFAULT_GROUP_GUARD)
    }

    /// Breadth-first enumeration; the result is sorted by length.
    pub fn enumerate_weyl_group_guarded(&self, guard: u64) -> Result<Vec<WeylElement>> {
        let order = self.cartan_type().weyl_group_order();
        if order > guard {
            return Err(Error::GroupTooLarge {
                cartan: self.cartan_type().to_string(),
                order,
                guard,
            });
        }
        let id = self.identity();
        let mut seen: HashSet<WeylElement> = HashSet::with_capacity(order as usize);
        let mut out = Vec::with_capacity(order as usize);
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(x) = queue.pop_front() {
            for i in 1..=self.rank() {
                if x.sends_simple_positive(i) {
                    let y = self.mul_simple_right(&x, i);
                    if seen.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
            out.push(x);
        }
        debug_assert_eq!(out.len() as u64, order);
        Ok(out)
    }
}

/// A reduced word together with its γ-sequence, an ordering of `I(x^{-1})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaSequence {
    pub word: Word,
    pub gammas: Vec<Root>,
}

impl GammaSequence {
    /// `γ_j` for a 1-based position.
    pub fn gamma(&self, j: usize) -> &Root {
        &self.gammas[j - 1]
    }

    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parse_words() {
        assert_eq!(w("1 2 1"), Word(vec![1, 2, 1]));
        assert_eq!(w("s1 s2 s1"), Word(vec![1, 2, 1]));
        assert_eq!(w("1,2"), Word(vec![1, 2]));
        assert_eq!(w(""), Word::empty());
        assert!("1 x".parse::<Word>().is_err());
    }

    #[test]
    fn word_to_element_examples() {
        let a2 = rs("A2");
        assert!(a2.word_to_element(&w("")).unwrap().is_identity());
        let w0 = a2.word_to_element(&w("1 2 1")).unwrap();
        assert_eq!(w0.length(), 3);
        assert_eq!(w0, a2.longest_element());
        assert!(a2.word_to_element(&w("1 1")).unwrap().is_identity());
        assert!(matches!(
            a2.word_to_element(&w("1 3")),
            Err(Error::LetterOutOfRange { letter: 3, rank: 2 })
        ));
    }

    #[test]
    fn reducedness() {
        let a2 = rs("A2");
        assert!(a2.is_reduced(&w("1 2 1")));
        assert!(!a2.is_reduced(&w("1 1")));
        assert!(a2.is_reduced(&w("")));
        assert!(!a2.is_reduced(&w("1 2 1 2")));
    }

    #[test]
    fn left_multiplication_matches_words() {
        let b3 = rs("B3");
        let x = b3.word_to_element(&w("3 2 1 3")).unwrap();
        for i in 1..=3 {
            let expected = b3
                .word_to_element(&Word(vec![i]).concat(&w("3 2 1 3")))
                .unwrap();
            let got = b3.mul_simple_left(i, &x);
            assert_eq!(got, expected);
            assert_eq!(got.length(), expected.length());
        }
    }

    #[test]
    fn bruhat_examples() {
        let a2 = rs("A2");
        let e = a2.identity();
        let s1 = a2.simple_reflection(1);
        let s1s2 = a2.word_to_element(&w("1 2")).unwrap();
        let s2s1 = a2.word_to_element(&w("2 1")).unwrap();
        assert!(a2.bruhat_leq(&e, &s2s1));
        assert!(a2.bruhat_leq(&s1, &s2s1));
        assert!(!a2.bruhat_leq(&s1s2, &s2s1));
        assert!(!a2.bruhat_leq(&s2s1, &s1));
    }

    #[test]
    fn gamma_examples() {
        let a2 = rs("A2");
        let g = a2.gamma_sequence(&w("1 2 1")).unwrap();
        assert_eq!(
            g.gammas,
            vec![Root(vec![1, 0]), Root(vec![1, 1]), Root(vec![0, 1])]
        );
        let g = a2.gamma_sequence(&w("1 2")).unwrap();
        assert_eq!(g.gammas, vec![Root(vec![1, 0]), Root(vec![1, 1])]);
        let g = rs("D4").gamma_sequence(&w("3")).unwrap();
        assert_eq!(g.gammas, vec![Root(vec![0, 0, 1, 0])]);
        assert!(matches!(
            a2.gamma_sequence(&w("1 1")),
            Err(Error::NotReduced(_))
        ));
    }

    #[test]
    fn inversion_sets() {
        let a2 = rs("A2");
        assert!(a2.inversion_set_of_inverse(&a2.identity()).is_empty());
        let x = a2.word_to_element(&w("1 2")).unwrap();
        assert_eq!(
            a2.inversion_set_of_inverse(&x),
            vec![Root(vec![1, 0]), Root(vec![1, 1])]
        );
        let d4 = rs("D4");
        let x = d4.word_to_element(&w("2 1 3 4 2")).unwrap();
        let expected: HashSet<Root> = [
            [1, 0, -1, 0],
            [1, 1, 0, 0],
            [0, 1, -1, 0],
            [0, 1, 0, -1],
            [0, 1, 0, 1],
        ]
        .iter()
        .map(|e| d4.from_epsilon(e).unwrap())
        .collect();
        let got: HashSet<Root> = d4.inversion_set_of_inverse(&x).into_iter().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn canonical_words() {
        let a2 = rs("A2");
        assert_eq!(a2.canonical_reduced_word(&a2.identity()), Word::empty());
        assert_eq!(a2.canonical_reduced_word(&a2.longest_element()), w("1 2 1"));
        let a3 = rs("A3");
        let x = a3.word_to_element(&w("2 1 3 2")).unwrap();
        let all = a3.all_reduced_words(&x).unwrap();
        assert_eq!(a3.canonical_reduced_word(&x), all[0]);
        assert_eq!(all, vec![w("2 1 3 2"), w("2 3 1 2")]);
    }

    #[test]
    fn reduced_word_counts() {
        let a2 = rs("A2");
        assert_eq!(
            a2.all_reduced_words(&a2.longest_element()).unwrap(),
            vec![w("1 2 1"), w("2 1 2")]
        );
        assert_eq!(
            a2.all_reduced_words(&a2.identity()).unwrap(),
            vec![Word::empty()]
        );
        let a3 = rs("A3");
        assert_eq!(
            a3.all_reduced_words(&a3.longest_element()).unwrap().len(),
            16
        );
        let b3 = rs("B3");
        assert_eq!(
            b3.all_reduced_words(&b3.longest_element()).unwrap().len(),
            42
        );
        let d4 = rs("D4");
        assert!(matches!(
            d4.all_reduced_words_bounded(&d4.longest_element(), 10),
            Err(Error::LengthBoundExceeded {
                length: 12,
                bound: 10
            })
        ));
    }

    #[test]
    fn coset_reps() {
        let a2 = rs("A2");
        assert!(a2.is_min_coset_rep(&a2.identity(), &[1, 2]));
        assert!(!a2.is_min_coset_rep(&a2.simple_reflection(1), &[1]));
        assert!(a2.is_min_coset_rep(&a2.word_to_element(&w("1 2")).unwrap(), &[1]));
    }

    #[test]
    fn group_orders() {
        assert_eq!(rs("A2").enumerate_weyl_group().unwrap().len(), 6);
        assert_eq!(rs("D4").enumerate_weyl_group().unwrap().len(), 192);
        assert_eq!(rs("B3").enumerate_weyl_group().unwrap().len(), 48);
        assert_eq!(rs("G2").enumerate_weyl_group().unwrap().len(), 12);
        assert_eq!(rs("F4").enumerate_weyl_group().unwrap().len(), 1152);
        assert!(matches!(
            rs("E8").enumerate_weyl_group(),
            Err(Error::GroupTooLarge { .. })
        ));
    }

    #[test]
    fn inverse_and_longest() {
        for label in ["A3", "B3", "G2"] {
            let r = rs(label);
            let w0 = r.longest_element();
            assert_eq!(w0.length(), r.positive_roots().len());
            for x in r.enumerate_weyl_group().unwrap() {
                let xi = r.inverse(&x);
                assert!(r.multiply(&x, &xi).is_identity());
                assert_eq!(xi.length(), x.length());
                let y = r.multiply(&xi, &w0);
                assert_eq!(x.length() + y.length(), w0.length());
            }
        }
    }
}
