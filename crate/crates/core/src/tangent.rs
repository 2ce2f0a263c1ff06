//! Tangent-space weights of Kazhdan–Lusztig and Schubert varieties.
//!
//! Fix `w ≤ x` and a reduced word `s = (s_1, ..., s_l)` for `x`. The ambient
//! space of the Kazhdan–Lusztig variety at `x` has weights
//! `γ_j = s_1 ⋯ s_{j-1}(α_j)`. When `γ_j` is integrally indecomposable among
//! the `γ`'s, it is a tangent weight iff the Demazure product of `s` with
//! position `j` deleted is still `≥ w`. That test costs one Demazure
//! product per position and is what the reports use; the enumeration of
//! `T_{w,s}` and the class `P_{w,s}` are kept for cross-checking and for the
//! tangent-cone character.
//!
//! Decomposable weights get [`Verdict::Undetermined`] unless the caller
//! opts into the type-A criterion on ordinary products.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Family, Root, RootSystem};
use crate::rt_ring::{char_series, cone_contains, LaurentPoly, WeightVector};
use crate::subword::MAX_ENUMERATION_LENGTH;
use crate::weyl::{GammaSequence, WeylElement, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    In,
    Out,
    Undetermined,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::In => "In",
            Verdict::Out => "Out",
            Verdict::Undetermined => "Undetermined",
        };
        f.write_str(s)
    }
}

/// Which route decides whether `1 - e^{-γ_j}` is an explicit factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FactorMethod {
    /// `δ(s with j deleted) ≱ w`.
    #[default]
    Demazure,
    /// `j` lies in every element of `T_{w,s}`.
    Enumeration,
}

/// Everything computed about one position `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    /// `γ_j` is integrally indecomposable in `I(x^{-1})`.
    pub indecomposable: bool,
    /// `δ(s_1, ..., ŝ_j, ..., s_l) ≥ w`.
    pub demazure_ok: bool,
    /// `s_1 ⋯ ŝ_j ⋯ s_l ≥ w` (ordinary product).
    pub ordinary_product_ok: bool,
    pub explicit_factor: bool,
    /// Coefficient of `e^{-γ_j}` in the tangent-cone character, when computed.
    #[serde(with = "opt_bigint_string")]
    pub cone_coefficient: Option<BigInt>,
    /// Type-A ordinary-product verdict, present only when requested.
    pub type_a_oracle: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightStatus {
    pub position: usize,
    pub gamma: Root,
    pub verdict: Verdict,
    pub evidence: Evidence,
}

/// Per-weight verdicts for one Kazhdan–Lusztig (or Schubert) variety at one
/// fixed point.
#[derive(Debug, Clone)]
pub struct TangentReport {
    pub parabolic: Option<Vec<usize>>,
    pub x_word: Word,
    pub w: WeylElement,
    pub gamma: GammaSequence,
    pub statuses: Vec<WeightStatus>,
    /// `{γ_j : In}` in position order.
    pub kl_tangent_weights: Vec<Root>,
    /// `-(Φ^+ ∖ I(x^{-1}))`, the weights the Schubert variety adds.
    pub schubert_extra_weights: Vec<Root>,
    pub complete: bool,
}

impl TangentReport {
    pub fn verdicts(&self) -> Vec<Verdict> {
        self.statuses.iter().map(|s| s.verdict).collect()
    }

    /// Tangent weights of the Schubert variety `X^w` at `x`, when complete.
    pub fn schubert_tangent_weights(&self) -> Option<Vec<Root>> {
        self.complete.then(|| {
            self.schubert_extra_weights
                .iter()
                .chain(&self.kl_tangent_weights)
                .cloned()
                .collect()
        })
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ReportOptions {
    /// Decide decomposable positions with the type-A criterion on ordinary
    /// products. Only valid in type A.
    pub type_a_oracle: bool,
    /// Compute the tangent-cone coefficient at every position, not only at
    /// decomposable ones.
    pub cone_coefficients: bool,
}

/// Whether `alpha` is not a nonnegative integer combination of the other
/// elements of `set`.
pub fn is_integrally_indecomposable(alpha: &Root, set: &[Root]) -> Result<bool> {
    if !set.contains(alpha) {
        return Err(Error::NotMember(alpha.0.clone()));
    }
    let others: Vec<Root> = set.iter().filter(|b| *b != alpha).cloned().collect();
    Ok(!cone_contains(alpha, &others))
}

/// True iff the permutation (one-line notation) has a decreasing
/// subsequence of length 3.
pub fn has_321_pattern(perm: &[usize]) -> bool {
    let n = perm.len();
    (0..n).any(|i| (i + 1..n).any(|j| perm[i] > perm[j] && (j + 1..n).any(|k| perm[j] > perm[k])))
}

/// Whether the rational linear system `rows · v = rhs` has a solution.
fn rational_system_solvable(rows: &[Vec<i32>], rhs: &[i32]) -> bool {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, &b)| {
            row.iter()
                .chain(std::iter::once(&b))
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect()
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(p) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let pivot_vals = m[pivot_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let factor = &row[col] / &pivot_vals[col];
                for (entry, pv) in row.iter_mut().zip(&pivot_vals).skip(col) {
                    *entry -= &factor * pv;
                }
            }
        }
        pivot_row += 1;
    }
    m[pivot_row..].iter().all(|row| row[cols].is_zero())
}

struct KlInput {
    gamma: GammaSequence,
}

impl RootSystem {
    fn kl_input(&self, w: &WeylElement, s: &Word) -> Result<KlInput> {
        let gamma = self.gamma_sequence(s)?;
        let x = self.word_product(s);
        if !self.bruhat_leq(w, &x) {
            return Err(Error::NotBelow);
        }
        Ok(KlInput { gamma })
    }

    fn check_position(&self, j: usize, s: &Word) -> Result<()> {
        if j == 0 || j > s.len() {
            return Err(Error::PositionOutOfRange {
                position: j,
                len: s.len(),
            });
        }
        Ok(())
    }

    /// `P_{w,s} = Σ_{t ∈ T_{w,s}} (-1)^{e(t)} ∏_{i ∈ t} (1 - e^{-γ_i})`.
    pub fn k_theory_class(&self, w: &WeylElement, s: &Word) -> Result<LaurentPoly> {
        let input = self.kl_input(w, s)?;
        self.class_from_gammas(w, s, &input.gamma)
    }

    fn class_from_gammas(
        &self,
        w: &WeylElement,
        s: &Word,
        gamma: &GammaSequence,
    ) -> Result<LaurentPoly> {
        let factors: Vec<LaurentPoly> = gamma
            .gammas
            .iter()
            .map(LaurentPoly::one_minus_exp_neg)
            .collect();
        let mut total = LaurentPoly::zero();
        for t in self.hecke_subwords(w, s)? {
            let mut term = LaurentPoly::one(self.rank());
            for &i in t.indices.indices() {
                term = &term * &factors[i - 1];
            }
            if t.excess % 2 == 1 {
                term = -&term;
            }
            total = &total + &term;
        }
        Ok(total)
    }

    fn demazure_without(&self, s: &Word, j: usize) -> WeylElement {
        self.demazure_element(
            s.letters()
                .iter()
                .enumerate()
                .filter(|(k, _)| k + 1 != j)
                .map(|(_, &l)| l),
        )
    }

    pub fn is_explicit_factor(&self, j: usize, w: &WeylElement, s: &Word) -> Result<bool> {
        self.is_explicit_factor_with(j, w, s, FactorMethod::Demazure)
    }

    pub fn is_explicit_factor_with(
        &self,
        j: usize,
        w: &WeylElement,
        s: &Word,
        method: FactorMethod,
    ) -> Result<bool> {
        self.kl_input(w, s)?;
        self.check_position(j, s)?;
        Ok(match method {
            FactorMethod::Demazure => !self.bruhat_leq(w, &self.demazure_without(s, j)),
            FactorMethod::Enumeration => self
                .hecke_subwords(w, s)?
                .iter()
                .all(|t| t.indices.contains(j)),
        })
    }

    /// Verdict for position `j` with default options.
    pub fn kl_tangent_membership(
        &self,
        j: usize,
        w: &WeylElement,
        s: &Word,
    ) -> Result<WeightStatus> {
        self.kl_tangent_membership_with(j, w, s, ReportOptions::default())
    }

    pub fn kl_tangent_membership_with(
        &self,
        j: usize,
        w: &WeylElement,
        s: &Word,
        opts: ReportOptions,
    ) -> Result<WeightStatus> {
        let input = self.kl_input(w, s)?;
        self.check_position(j, s)?;
        self.check_oracle_option(opts)?;
        self.membership_at(j, w, s, &input.gamma, opts)
    }

    fn check_oracle_option(&self, opts: ReportOptions) -> Result<()> {
        if opts.type_a_oracle && self.cartan_type().family() != Family::A {
            return Err(Error::WrongType(self.cartan_type().to_string()));
        }
        Ok(())
    }

    fn membership_at(
        &self,
        j: usize,
        w: &WeylElement,
        s: &Word,
        gamma: &GammaSequence,
        opts: ReportOptions,
    ) -> Result<WeightStatus> {
        let gj = gamma.gamma(j);
        let indecomposable = is_integrally_indecomposable(gj, &gamma.gammas)?;
        let demazure_ok = self.bruhat_leq(w, &self.demazure_without(s, j));
        let ordinary_product_ok = self.bruhat_leq(w, &self.word_product(&s.without(j)));
        let cone_coefficient =
            if (opts.cone_coefficients || !indecomposable) && s.len() <= MAX_ENUMERATION_LENGTH {
                Some(self.cone_coefficient_from(&-gj, w, s, gamma)?)
            } else {
                None
            };
        let type_a_oracle = opts.type_a_oracle.then_some(ordinary_product_ok);
        let verdict = match (indecomposable, type_a_oracle) {
            (true, _) if demazure_ok => Verdict::In,
            (true, _) => Verdict::Out,
            (false, Some(true)) => Verdict::In,
            (false, Some(false)) => Verdict::Out,
            (false, None) => Verdict::Undetermined,
        };
        Ok(WeightStatus {
            position: j,
            gamma: gj.clone(),
            verdict,
            evidence: Evidence {
                indecomposable,
                demazure_ok,
                ordinary_product_ok,
                explicit_factor: !demazure_ok,
                cone_coefficient,
                type_a_oracle,
            },
        })
    }

    /// Report over the canonical reduced word of `x`.
    pub fn kl_tangent_report(&self, w: &WeylElement, x: &WeylElement) -> Result<TangentReport> {
        self.kl_tangent_report_with(w, x, ReportOptions::default())
    }

    pub fn kl_tangent_report_with(
        &self,
        w: &WeylElement,
        x: &WeylElement,
        opts: ReportOptions,
    ) -> Result<TangentReport> {
        if !self.bruhat_leq(w, x) {
            return Err(Error::NotBelow);
        }
        self.tangent_report_for_word(w, &self.canonical_reduced_word(x), opts)
    }

    /// Report over a caller-chosen reduced word `s` for `x`.
    pub fn tangent_report_for_word(
        &self,
        w: &WeylElement,
        s: &Word,
        opts: ReportOptions,
    ) -> Result<TangentReport> {
        let input = self.kl_input(w, s)?;
        self.check_oracle_option(opts)?;
        let statuses = (1..=s.len())
            .map(|j| self.membership_at(j, w, s, &input.gamma, opts))
            .collect::<Result<Vec<_>>>()?;
        let kl_tangent_weights = statuses
            .iter()
            .filter(|st| st.verdict == Verdict::In)
            .map(|st| st.gamma.clone())
            .collect();
        let schubert_extra_weights = self
            .positive_roots()
            .iter()
            .filter(|a| !input.gamma.gammas.contains(a))
            .map(|a| -a)
            .collect();
        let complete = statuses
            .iter()
            .all(|st| st.verdict != Verdict::Undetermined);
        Ok(TangentReport {
            parabolic: None,
            x_word: s.clone(),
            w: w.clone(),
            gamma: input.gamma,
            statuses,
            kl_tangent_weights,
            schubert_extra_weights,
            complete,
        })
    }

    /// The `G/P` report; both `w` and `x` must lie in `W^P`. Verdicts are
    /// those of the `G/B` report. The Schubert part keeps `-α` for
    /// `α ∈ Φ^+ ∖ I(x^{-1})` only when `x^{-1}α ∉ Φ_P`, so at `w = e` the
    /// weights number `dim G/P`.
    pub fn gp_tangent_report(
        &self,
        w: &WeylElement,
        x: &WeylElement,
        parabolic: &[usize],
        opts: ReportOptions,
    ) -> Result<TangentReport> {
        let mut p = parabolic.to_vec();
        p.sort_unstable();
        p.dedup();
        if let Some(&bad) = p.iter().find(|&&i| i == 0 || i > self.rank()) {
            return Err(Error::LetterOutOfRange {
                letter: bad,
                rank: self.rank(),
            });
        }
        if !self.is_min_coset_rep(w, &p) || !self.is_min_coset_rep(x, &p) {
            return Err(Error::NotMinimalCosetRep(p));
        }
        let mut report = self.kl_tangent_report_with(w, x, opts)?;
        // only directions transverse to P survive in G/P
        let x_inv = self.inverse(x);
        report
            .schubert_extra_weights
            .retain(|b| !self.in_parabolic_span(&x_inv.apply(&-b), &p));
        report.parabolic = Some(p);
        Ok(report)
    }

    fn in_parabolic_span(&self, root: &Root, parabolic: &[usize]) -> bool {
        root.0
            .iter()
            .enumerate()
            .all(|(k, &c)| c == 0 || parabolic.contains(&(k + 1)))
    }

    /// `{γ_j : s_1 ⋯ ŝ_j ⋯ s_l ≥ w}`, the weights of the span of tangent
    /// lines to `T`-invariant curves.
    pub fn te_curve_weights(&self, w: &WeylElement, s: &Word) -> Result<Vec<Root>> {
        let input = self.kl_input(w, s)?;
        Ok((1..=s.len())
            .filter(|&j| self.bruhat_leq(w, &self.word_product(&s.without(j))))
            .map(|j| input.gamma.gamma(j).clone())
            .collect())
    }

    /// Whether some `v` satisfies `α(v) = -1` for every `α ∈ I(x^{-1})`.
    ///
    /// With `v` written in the basis dual to the simple roots, `α(v)` is the
    /// dot product of `α`'s simple-root coefficients with the unknowns.
    pub fn is_cominuscule_element(&self, x: &WeylElement) -> bool {
        let rows: Vec<Vec<i32>> = self
            .inversion_set_of_inverse(x)
            .into_iter()
            .map(|a| a.0)
            .collect();
        let rhs = vec![-1; rows.len()];
        rational_system_solvable(&rows, &rhs)
    }

    /// One-line notation of a type-A element acting on `{1, ..., n+1}`, with
    /// `s_i` the transposition of `i` and `i+1`.
    pub fn permutation_of(&self, x: &WeylElement) -> Result<Vec<usize>> {
        if self.cartan_type().family() != Family::A {
            return Err(Error::WrongType(self.cartan_type().to_string()));
        }
        let n = self.rank();
        let eps = |v: &Root| self.to_epsilon(v).expect("type A has an ε-model");
        let find = |e: &[i32], val: i32| {
            e.iter()
                .position(|&c| c == val)
                .expect("ε-vector of a root")
                + 1
        };
        let mut perm = Vec::with_capacity(n + 1);
        perm.push(find(&eps(&x.apply(&self.simple_root(1))), 1));
        let mut partial = Root::zero(n);
        for i in 1..=n {
            partial.0[i - 1] = 1;
            perm.push(find(&eps(&x.apply(&partial)), -1));
        }
        Ok(perm)
    }

    /// Type-A check: 321-avoidance of the permutation of `x`.
    pub fn type_a_cominuscule_oracle(&self, x: &WeylElement) -> Result<bool> {
        Ok(!has_321_pattern(&self.permutation_of(x)?))
    }

    /// Coefficient of `e^λ` in the character of the tangent-cone coordinate
    /// ring, `P_{w,s} / ∏_j (1 - e^{-γ_j})`, with `λ = -μ` and `μ` in the
    /// integer cone of the `γ`'s. At decomposable `μ` the number has no
    /// tangent-space meaning.
    pub fn tangent_cone_coefficient(
        &self,
        lambda: &WeightVector,
        w: &WeylElement,
        s: &Word,
    ) -> Result<BigInt> {
        let input = self.kl_input(w, s)?;
        self.cone_coefficient_from(lambda, w, s, &input.gamma)
    }

    fn cone_coefficient_from(
        &self,
        lambda: &WeightVector,
        w: &WeylElement,
        s: &Word,
        gamma: &GammaSequence,
    ) -> Result<BigInt> {
        let mu = -lambda;
        if !cone_contains(&mu, &gamma.gammas) {
            return Err(Error::ExponentOutsideCone(lambda.0.clone()));
        }
        let class = self.class_from_gammas(w, s, gamma)?;
        let bound = u32::try_from(mu.height()).expect("cone element has nonnegative height");
        char_series(&class, &gamma.gammas, self.rank(), bound)?.coefficient(lambda)
    }

    /// Type-A criterion: `γ_j` is tangent iff `s_1 ⋯ ŝ_j ⋯ s_l ≥ w`, for
    /// every `j` regardless of decomposability.
    pub fn type_a_tangent_oracle(&self, j: usize, w: &WeylElement, s: &Word) -> Result<bool> {
        if self.cartan_type().family() != Family::A {
            return Err(Error::WrongType(self.cartan_type().to_string()));
        }
        self.kl_input(w, s)?;
        self.check_position(j, s)?;
        Ok(self.bruhat_leq(w, &self.word_product(&s.without(j))))
    }
}

mod opt_bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(c) => s.serialize_some(&c.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}
