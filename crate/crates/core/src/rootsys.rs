//! Finite crystallographic root systems of types A through G.
//!
//! Roots are stored in simple-root coordinates, so every quantity used
//! downstream (inversion sets, torus weights) is an exact integer vector.
//! Nodes follow the Bourbaki numbering: in `D4` node 2 is the trivalent
//! node, in `G2` node 1 is the short root, in `B_n` the last node is short
//! and in `C_n` the last node is long.
//!
//! The Cartan matrix is stored as `a[i][j] = <α_i^∨, α_j>`, so that
//! `s_i(v) = v - (Σ_j a[i][j] v_j) α_i`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A Cartan-type label such as `A3` or `D4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidCartanType(format!("{family}{rank}")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Order of the Weyl group.
    pub fn weyl_group_order(&self) -> u64 {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u64 << n) * fact(n),
            Family::D => (1u64 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }

    /// Number of positive roots.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Cartan matrix `a[i][j] = <α_i^∨, α_j>` in Bourbaki numbering (0-based
    /// indices here).
    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let mut a = vec![vec![0i32; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                // 1-3-4-5-...-n with 2 attached to 4
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
        }
        match self.family {
            Family::B => a[n - 1][n - 2] = -2,
            Family::C => a[n - 2][n - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::InvalidCartanType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidCartanType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

/// A vector of the root lattice, in simple-root coordinates.
///
/// The same type carries roots, sums of roots and character exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Root(v)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().map(|&c| c as i64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// All coefficients nonnegative and not all zero.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && !self.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && !self.is_zero()
    }

    /// Nonnegative coordinates (zero allowed).
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scale(&self, k: i32) -> Root {
        Root(self.0.iter().map(|&c| c * k).collect())
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        -&self
    }
}

impl From<Vec<i32>> for Root {
    fn from(v: Vec<i32>) -> Self {
        Root(v)
    }
}

/// Prints as a combination of simple roots, e.g. `α1+2α2` or `-α3`.
impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}α{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}α{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A root system: Cartan data plus the sorted list of positive roots.
///
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i32>>,
    positive_roots: Vec<Root>,
    index: HashMap<Root, usize>,
    simple_root_names: Vec<String>,
}

impl RootSystem {
    /// Builds the positive roots by closure of the simple roots under simple
    /// reflections. Roots are sorted by height, then by descending
    /// lexicographic order of coefficients, so `positive_roots()[i]` is
    /// `α_{i+1}` for `i < rank`.
    pub fn new(ct: CartanType) -> Self {
        let n = ct.rank();
        let cartan = ct.cartan_matrix();
        let mut seen: HashSet<Root> = HashSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 1..=n {
            let r = Root::simple(n, i);
            seen.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(r) = queue.pop_front() {
            for i in 1..=n {
                let s = reflect_with(&cartan, i, &r);
                if s.is_positive() && seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        let mut positive_roots: Vec<Root> = seen.into_iter().collect();
        positive_roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
        let index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        RootSystem {
            cartan_type: ct,
            cartan,
            positive_roots,
            index,
            simple_root_names: (1..=n).map(|i| format!("α{i}")).collect(),
        }
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Ok(RootSystem::new(label.parse()?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn simple_root_names(&self) -> &[String] {
        &self.simple_root_names
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    /// Position of a positive root in `positive_roots()`.
    pub fn positive_index(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, v: &Root) -> bool {
        if v.is_negative() {
            self.index.contains_key(&-v)
        } else {
            self.index.contains_key(v)
        }
    }

    /// `<v, α_i^∨>` for a lattice vector `v` (1-based `i`).
    pub fn coroot_pairing(&self, i: usize, v: &Root) -> i32 {
        self.cartan[i - 1]
            .iter()
            .zip(&v.0)
            .map(|(a, c)| a * c)
            .sum()
    }

    /// `s_i(v) = v - <v, α_i^∨> α_i`; total on lattice vectors.
    pub fn reflect(&self, i: usize, v: &Root) -> Root {
        reflect_with(&self.cartan, i, v)
    }

    pub fn highest_root(&self) -> &Root {
        self.positive_roots
            .last()
            .expect("root systems are nonempty")
    }

    /// Nodes whose simple root has coefficient 1 in the highest root.
    pub fn cominuscule_nodes(&self) -> Vec<usize> {
        self.highest_root()
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 1)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Coordinates in the orthogonal ε-basis for the classical families.
    ///
    /// Type `A_n` uses `n+1` coordinates with `α_i = ε_i - ε_{i+1}`; types
    /// `B_n`, `C_n`, `D_n` use `n` coordinates with last simple root `ε_n`,
    /// `2ε_n` and `ε_{n-1}+ε_n` respectively.
    pub fn to_epsilon(&self, v: &Root) -> Option<Vec<i32>> {
        let n = self.rank();
        let c = &v.0;
        let prev = |k: usize| if k == 0 { 0 } else { c[k - 1] };
        match self.cartan_type.family() {
            Family::A => Some(
                (0..=n)
                    .map(|k| (if k < n { c[k] } else { 0 }) - prev(k))
                    .collect(),
            ),
            Family::B => Some((0..n).map(|k| c[k] - prev(k)).collect()),
            Family::C => Some(
                (0..n)
                    .map(|k| {
                        if k == n - 1 {
                            2 * c[k] - prev(k)
                        } else {
                            c[k] - prev(k)
                        }
                    })
                    .collect(),
            ),
            Family::D => {
                let mut e: Vec<i32> = (0..n - 2).map(|k| c[k] - prev(k)).collect();
                e.push(c[n - 2] + c[n - 1] - c[n - 3]);
                e.push(c[n - 1] - c[n - 2]);
                Some(e)
            }
            _ => None,
        }
    }

    /// Inverse of [`RootSystem::to_epsilon`]; `None` when the vector is not
    /// in the root lattice or the family has no ε-model here.
    pub fn from_epsilon(&self, e: &[i32]) -> Option<Root> {
        let n = self.rank();
        let family = self.cartan_type.family();
        let dim = if family == Family::A { n + 1 } else { n };
        if e.len() != dim {
            return None;
        }
        let prefix = |k: usize| e[..=k].iter().sum::<i32>();
        let c: Vec<i32> = match family {
            Family::A => {
                if e.iter().sum::<i32>() != 0 {
                    return None;
                }
                (0..n).map(prefix).collect()
            }
            Family::B => (0..n).map(prefix).collect(),
            Family::C => {
                let mut c: Vec<i32> = (0..n - 1).map(prefix).collect();
                let t = e[n - 1] + c[n - 2];
                if t % 2 != 0 {
                    return None;
                }
                c.push(t / 2);
                c
            }
            Family::D => {
                let mut c: Vec<i32> = (0..n - 2).map(prefix).collect();
                let base = e[n - 2] + c[n - 3];
                let (p, m) = (base + e[n - 1], base - e[n - 1]);
                if p % 2 != 0 {
                    return None;
                }
                c.push(m / 2);
                c.push(p / 2);
                c
            }
            _ => return None,
        };
        let root = Root(c);
        (self.to_epsilon(&root).as_deref() == Some(e)).then_some(root)
    }
}

fn reflect_with(cartan: &[Vec<i32>], i: usize, v: &Root) -> Root {
    let pairing: i32 = cartan[i - 1].iter().zip(&v.0).map(|(a, c)| a * c).sum();
    let mut out = v.clone();
    out.0[i - 1] -= pairing;
    out
}
