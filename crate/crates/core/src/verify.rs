//! The invariant battery run by `verify <type>`.
//!
//! Each suite walks a desk-scale slice of the Weyl group and records every
//! mismatch as a [`Failure`]. Suites that enumerate subsets of a reduced
//! word only visit elements with `ℓ(x) ≤ max_enumeration_length`, and at
//! most `max_words_per_element` reduced words per element are used where a
//! suite ranges over words.

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::rootsys::{Family, Root, RootSystem};
use crate::rt_ring::{char_series, lambda_minus_one, LaurentPoly, TruncatedSeries};
use crate::subword::IndexSequence;
use crate::tangent::{is_integrally_indecomposable, FactorMethod, ReportOptions, Verdict};
use crate::weyl::{WeylElement, Word, DEFAULT_GROUP_GUARD};

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub group_guard: u64,
    pub max_words_per_element: usize,
    pub max_enumeration_length: usize,
    /// Groups up to this order get the quadratic pairwise suites.
    pub pairwise_group_limit: usize,
    pub random_cases: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            group_guard: DEFAULT_GROUP_GUARD,
            max_words_per_element: 4,
            max_enumeration_length: 9,
            pairwise_group_limit: 400,
            random_cases: 1000,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

/// Result of one suite. `wall_time` is diagnostics only and is not
/// serialized.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyOutcome {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    cases: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn check(
        &mut self,
        ok: bool,
        inputs: impl FnOnce() -> String,
        expected: impl ToString,
        got: impl ToString,
    ) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure {
                inputs: inputs(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }
}

struct Ctx<'a> {
    rs: &'a RootSystem,
    cfg: &'a VerifyConfig,
    group: Vec<WeylElement>,
}

impl Ctx<'_> {
    fn word(&self, x: &WeylElement) -> Word {
        self.rs.canonical_reduced_word(x)
    }

    fn enumerable(&self) -> impl ParallelIterator<Item = &WeylElement> {
        let cap = self.cfg.max_enumeration_length;
        self.group.par_iter().filter(move |x| x.length() <= cap)
    }

    fn below(&self, x: &WeylElement) -> Vec<&WeylElement> {
        self.group
            .iter()
            .filter(|w| self.rs.bruhat_leq(w, x))
            .collect()
    }

    fn words(&self, x: &WeylElement) -> Vec<Word> {
        self.rs
            .reduced_words_up_to(x, self.cfg.max_words_per_element)
    }

    /// Runs `f` over elements in parallel and merges the tallies.
    fn over<'s, I, F>(&'s self, it: I, f: F) -> Tally
    where
        I: ParallelIterator<Item = &'s WeylElement>,
        F: Fn(&WeylElement, &mut Tally) + Sync + Send,
    {
        it.map(|x| {
            let mut t = Tally::default();
            f(x, &mut t);
            t
        })
        .reduce(Tally::default, Tally::merge)
    }
}

type SuiteFn = fn(&Ctx) -> Option<Tally>;

const SUITES: &[(&str, SuiteFn)] = &[
    ("root-system", suite_root_system),
    ("gamma-inversion", suite_gamma_inversion),
    ("bruhat-subword-oracle", suite_bruhat_oracle),
    ("longest-complement", suite_longest_complement),
    ("coset-representatives", suite_coset_reps),
    ("demazure", suite_demazure),
    ("euler-identity", suite_euler_identity),
    ("ball-sphere", suite_ball_sphere),
    ("series-inversion", suite_series_inversion),
    ("class-well-defined", suite_class_well_defined),
    ("standard-mechanism", suite_standard_mechanism),
    ("fast-slow-agreement", suite_fast_slow),
    ("report-word-independence", suite_report_independence),
    ("type-a-oracle", suite_type_a_oracle),
    ("simply-laced-product", suite_simply_laced),
    ("te-subset", suite_te_subset),
    ("cominuscule-321", suite_cominuscule_321),
    (
        "cominuscule-indecomposable",
        suite_cominuscule_indecomposable,
    ),
    ("cominuscule-parabolic", suite_cominuscule_parabolic),
    ("cominuscule-complete", suite_cominuscule_complete),
    ("parabolic-smooth-point", suite_parabolic_smooth_point),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Runs every suite that applies to the root system. Suites are returned
/// in a fixed order; failures within a suite are sorted.
pub fn run_all(rs: &RootSystem, cfg: &VerifyConfig) -> Result<Vec<VerifyOutcome>> {
    let group = rs.enumerate_weyl_group_guarded(cfg.group_guard)?;
    let ctx = Ctx { rs, cfg, group };
    let mut out = Vec::new();
    for (name, suite) in SUITES {
        let start = Instant::now();
        if let Some(mut tally) = suite(&ctx) {
            tally.failures.sort_by(|a, b| a.inputs.cmp(&b.inputs));
            out.push(VerifyOutcome {
                suite: name.to_string(),
                cases: tally.cases,
                failures: tally.failures,
                wall_time: start.elapsed(),
            });
        }
    }
    Ok(out)
}

fn is_simply_laced(rs: &RootSystem) -> bool {
    matches!(rs.cartan_type().family(), Family::A | Family::D | Family::E)
}

fn suite_root_system(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    let mut t = Tally::default();
    let n = rs.positive_roots().len();
    t.check(
        n == rs.cartan_type().num_positive_roots(),
        || "positive root count".into(),
        rs.cartan_type().num_positive_roots(),
        n,
    );
    let simple = rs
        .positive_roots()
        .iter()
        .filter(|a| a.height() == 1)
        .count();
    t.check(
        simple == rs.rank(),
        || "height-1 roots".into(),
        rs.rank(),
        simple,
    );
    for a in rs.positive_roots() {
        for i in 1..=rs.rank() {
            let b = rs.reflect(i, a);
            t.check(
                &rs.reflect(i, &b) == a,
                || format!("s{i} s{i} {a}"),
                a,
                rs.reflect(i, &b),
            );
            t.check(
                rs.is_root(&b),
                || format!("s{i}({a}) is a root"),
                true,
                false,
            );
            let expect_negative = *a == rs.simple_root(i);
            t.check(
                b.is_negative() == expect_negative,
                || format!("sign of s{i}({a})"),
                expect_negative,
                b.is_negative(),
            );
        }
    }
    let order = ctx.group.len() as u64;
    t.check(
        order == rs.cartan_type().weyl_group_order(),
        || "group order".into(),
        rs.cartan_type().weyl_group_order(),
        order,
    );
    Some(t)
}

fn suite_gamma_inversion(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    Some(ctx.over(ctx.group.par_iter(), |x, t| {
        let inv: HashSet<Root> = rs.inversion_set_of_inverse(x).into_iter().collect();
        t.check(
            inv.len() == x.length(),
            || format!("|I(x^-1)| for {}", ctx.word(x)),
            x.length(),
            inv.len(),
        );
        for s in ctx.words(x) {
            let g: HashSet<Root> = rs
                .gamma_sequence(&s)
                .expect("reduced")
                .gammas
                .into_iter()
                .collect();
            t.check(
                g == inv,
                || format!("γ-set of {s}"),
                format!("{inv:?}"),
                format!("{g:?}"),
            );
        }
    }))
}

/// Subword oracle: `u ≤ v` iff a fixed reduced word of `v` has a subword of
/// length `ℓ(u)` multiplying to `u`.
fn subword_oracle(rs: &RootSystem, u: &WeylElement, v_word: &Word) -> bool {
    let n = v_word.len();
    let k = u.length();
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .any(|m| {
            let letters: Vec<usize> = (0..n)
                .filter(|p| m & (1 << p) != 0)
                .map(|p| v_word.letters()[p])
                .collect();
            rs.word_product(&Word(letters)) == *u
        })
}

fn suite_bruhat_oracle(ctx: &Ctx) -> Option<Tally> {
    if ctx.group.len() > ctx.cfg.pairwise_group_limit {
        return None;
    }
    let rs = ctx.rs;
    Some(ctx.over(ctx.group.par_iter(), |v, t| {
        let vw = ctx.word(v);
        for u in &ctx.group {
            let fast = rs.bruhat_leq(u, v);
            let slow = subword_oracle(rs, u, &vw);
            t.check(
                fast == slow,
                || format!("{} ≤ {vw}", ctx.word(u)),
                slow,
                fast,
            );
        }
    }))
}

fn suite_longest_complement(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    let w0 = rs.longest_element();
    Some(ctx.over(ctx.group.par_iter(), |x, t| {
        let y = rs.multiply(&rs.inverse(x), &w0);
        let total = x.length() + y.length();
        t.check(
            total == w0.length(),
            || format!("ℓ(x)+ℓ(x^-1 w0), x = {}", ctx.word(x)),
            w0.length(),
            total,
        );
    }))
}

fn suite_coset_reps(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    let rank = rs.rank();
    Some(ctx.over(ctx.enumerable(), |x, t| {
        let Ok(words) = rs.all_reduced_words_bounded(x, ctx.cfg.max_enumeration_length) else {
            return;
        };
        let last: HashSet<usize> = words
            .iter()
            .filter_map(|w| w.letters().last().copied())
            .collect();
        for mask in 0u32..1 << rank {
            let p: Vec<usize> = (1..=rank).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let expected = p.iter().all(|i| !last.contains(i));
            let got = rs.is_min_coset_rep(x, &p);
            t.check(
                got == expected,
                || format!("x = {} P = {p:?}", ctx.word(x)),
                expected,
                got,
            );
        }
    }))
}

/// All words of length `≤ max_len` over the simple reflections.
fn all_words(rank: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 1..=rank {
                next.push(w.concat(&Word(vec![i])));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn suite_demazure(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    if ctx.group.len() > ctx.cfg.pairwise_group_limit {
        return None;
    }
    let max_len = match rs.rank() {
        1 | 2 => 6,
        3 => 5,
        _ => 4,
    };
    let words = all_words(rs.rank(), max_len);
    let t = words
        .par_iter()
        .map(|q| {
            let mut t = Tally::default();
            let delta = rs.demazure_stats(q).delta;
            // every subword product that is reduced sits below δ(q)
            let mut reachable: HashSet<WeylElement> = HashSet::new();
            for m in 0u32..1 << q.len() {
                let sub = Word(
                    (0..q.len())
                        .filter(|p| m & (1 << p) != 0)
                        .map(|p| q.letters()[p])
                        .collect(),
                );
                if rs.is_reduced(&sub) {
                    let e = rs.word_product(&sub);
                    t.check(
                        rs.bruhat_leq(&e, &delta),
                        || format!("{sub} below δ{q}"),
                        true,
                        false,
                    );
                    reachable.insert(e);
                }
            }
            for w in &ctx.group {
                let fast = rs.bruhat_leq(w, &delta);
                let slow = reachable.contains(w);
                t.check(
                    fast == slow,
                    || format!("δ{q} ≥ {}", ctx.word(w)),
                    slow,
                    fast,
                );
            }
            for split in 0..=q.len() {
                let (a, b) = (
                    Word(q.letters()[..split].to_vec()),
                    Word(q.letters()[split..].to_vec()),
                );
                let da = rs.demazure_stats(&a).delta;
                let re = rs.demazure_stats(&ctx.word(&da).concat(&b)).delta;
                t.check(
                    re == delta,
                    || format!("associativity {a}|{b}"),
                    ctx.word(&delta),
                    ctx.word(&re),
                );
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    Some(t)
}

fn suite_euler_identity(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    Some(ctx.over(ctx.enumerable(), |x, t| {
        for s in ctx.words(x) {
            for w in ctx.below(x) {
                let sum: i64 = rs
                    .hecke_subwords(w, &s)
                    .expect("enumerable")
                    .iter()
                    .map(|h| if h.excess % 2 == 0 { 1 } else { -1 })
                    .sum();
                t.check(sum == 1, || format!("s = {s}, w = {}", ctx.word(w)), 1, sum);
            }
        }
    }))
}

fn suite_ball_sphere(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    Some(ctx.over(ctx.enumerable(), |x, t| {
        for s in ctx.words(x) {
            for w in ctx.below(x) {
                let c = rs.build_complex(w, &s).expect("w ≤ x");
                let label = || format!("Δ({s}, {})", ctx.word(w));
                let e = c.euler_characteristics();
                let expected = if c.dimension().rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                };
                t.check(e.interior == expected, label, expected, e.interior);
                let size = s.len() - w.length();
                let pure = c.facets().iter().all(|f| f.len() == size);
                t.check(pure, label, "pure", "impure");
                let closed = c.faces().iter().all(|f| {
                    (0..f.len()).all(|drop| {
                        let mut sub = f.indices().to_vec();
                        sub.remove(drop);
                        c.is_face(&IndexSequence::new(sub, s.len()).expect("valid"))
                    })
                });
                t.check(closed, label, "downward closed", "not closed");
            }
        }
    }))
}

fn suite_series_inversion(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    let rank = rs.rank();
    let mut rng = StdRng::seed_from_u64(ctx.cfg.seed);
    let mut t = Tally::default();
    let candidates: Vec<&WeylElement> = ctx
        .group
        .iter()
        .filter(|x| x.length() >= 1 && x.length() <= 6)
        .collect();
    for case in 0..ctx.cfg.random_cases.min(200) {
        let x = candidates[rng.gen_range(0..candidates.len())];
        let den = rs.inversion_set_of_inverse(x);
        let mut p = LaurentPoly::zero();
        for _ in 0..rng.gen_range(1..4) {
            let mut e = Root::zero(rank);
            for g in &den {
                for _ in 0..rng.gen_range(0..2) {
                    e = &e - g;
                }
            }
            p = &p + &LaurentPoly::monomial(e, rng.gen_range(-3i64..=3));
        }
        let bound = rng.gen_range(0..=6u32);
        let lam = lambda_minus_one(&den, rank);
        let expected = TruncatedSeries::from_poly(&p, rank, bound).expect("nonpositive exponents");
        let cancelled = char_series(&(&p * &lam), &den, rank, bound).expect("in cone");
        t.check(
            cancelled == expected,
            || format!("case {case}: p·λ/λ, p = {p}, bound {bound}"),
            &p,
            cancelled.to_poly(),
        );
        let series = char_series(&p, &den, rank, bound).expect("in cone");
        let back = series
            .mul(&TruncatedSeries::from_poly(&lam, rank, bound).expect("nonpositive exponents"));
        t.check(
            back == expected,
            || format!("case {case}: (p/λ)·λ, p = {p}, bound {bound}"),
            &p,
            back.to_poly(),
        );
    }
    Some(t)
}

fn suite_class_well_defined(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    Some(ctx.over(ctx.enumerable(), |x, t| {
        let words = ctx.words(x);
        for w in ctx.below(x) {
            let reference = rs.k_theory_class(w, &words[0]).expect("valid");
            for s in &words[1..] {
                let other = rs.k_theory_class(w, s).expect("valid");
                t.check(
                    other == reference,
                    || format!("P_{{{},{s}}}", ctx.word(w)),
                    &reference,
                    &other,
                );
            }
        }
    }))
}

fn suite_standard_mechanism(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    Some(ctx.over(ctx.enumerable(), |x, t| {
        let s = ctx.word(x);
        let g = rs.gamma_sequence(&s).expect("reduced");
        for w in ctx.below(x) {
            for j in 1..=s.len() {
                if !is_integrally_indecomposable(g.gamma(j), &g.gammas).expect("member") {
                    continue;
                }
                let label = || format!("x = {s}, w = {}, j = {j}", ctx.word(w));
                let explicit = rs.is_explicit_factor(j, w, &s).expect("valid");
                let coeff = rs
                    .tangent_cone_coefficient(&-g.gamma(j), w, &s)
                    .expect("valid");
                let expected = BigInt::from(if explicit { 0 } else { 1 });
                t.check(coeff == expected, label, &expected, &coeff);
                let status = rs.kl_tangent_membership(j, w, &s).expect("valid");
                if status.verdict == Verdict::Out {
                    let slow = rs
                        .is_explicit_factor_with(j, w, &s, FactorMethod::Enumeration)
                        .expect("valid");
                    t.check(slow, label, "explicit factor", "not explicit");
                }
            }
        }
    }))
}

fn suite_fast_slow(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    Some(ctx.over(ctx.enumerable(), |x, t| {
        for s in ctx.words(x).into_iter().take(2) {
            for w in ctx.below(x) {
                for j in 1..=s.len() {
                    let fast = rs
                        .is_explicit_factor_with(j, w, &s, FactorMethod::Demazure)
                        .expect("valid");
                    let slow = rs
                        .is_explicit_factor_with(j, w, &s, FactorMethod::Enumeration)
                        .expect("valid");
                    t.check(
                        fast == slow,
                        || format!("s = {s}, w = {}, j = {j}", ctx.word(w)),
                        slow,
                        fast,
                    );
                }
            }
        }
    }))
}

fn suite_report_independence(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    Some(ctx.over(ctx.enumerable(), |x, t| {
        let words = ctx.words(x);
        for w in ctx.below(x) {
            let by_root = |s: &Word| -> BTreeMap<Root, Verdict> {
                rs.tangent_report_for_word(w, s, ReportOptions::default())
                    .expect("valid")
                    .statuses
                    .into_iter()
                    .map(|st| (st.gamma, st.verdict))
                    .collect()
            };
            let reference = by_root(&words[0]);
            for s in &words[1..] {
                let other = by_root(s);
                t.check(
                    other == reference,
                    || format!("x word {s}, w = {}", ctx.word(w)),
                    format!("{reference:?}"),
                    format!("{other:?}"),
                );
            }
        }
    }))
}

fn suite_type_a_oracle(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    if rs.cartan_type().family() != Family::A {
        return None;
    }
    Some(ctx.over(ctx.group.par_iter(), |x, t| {
        let s = ctx.word(x);
        for w in ctx.below(x) {
            let report = rs
                .tangent_report_for_word(w, &s, ReportOptions::default())
                .expect("valid");
            for st in report
                .statuses
                .iter()
                .filter(|st| st.evidence.indecomposable)
            {
                let oracle = rs
                    .type_a_tangent_oracle(st.position, w, &s)
                    .expect("type A");
                let got = st.verdict == Verdict::In;
                t.check(
                    got == oracle,
                    || format!("x = {s}, w = {}, j = {}", ctx.word(w), st.position),
                    oracle,
                    got,
                );
            }
        }
    }))
}

fn suite_simply_laced(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    if !is_simply_laced(rs) {
        return None;
    }
    Some(ctx.over(ctx.group.par_iter(), |x, t| {
        let s = ctx.word(x);
        let g = rs.gamma_sequence(&s).expect("reduced");
        for j in 1..=s.len() {
            if !is_integrally_indecomposable(g.gamma(j), &g.gammas).expect("member") {
                continue;
            }
            let rest = s.without(j);
            let demazure = rs.demazure_stats(&rest).delta;
            let ordinary = rs.word_product(&rest);
            t.check(
                demazure == ordinary,
                || format!("x = {s}, j = {j}"),
                ctx.word(&ordinary),
                ctx.word(&demazure),
            );
        }
    }))
}

fn suite_te_subset(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    if !is_simply_laced(rs) {
        return None;
    }
    Some(ctx.over(ctx.group.par_iter(), |x, t| {
        if !rs.is_cominuscule_element(x) {
            return;
        }
        let s = ctx.word(x);
        for w in ctx.below(x) {
            let te: HashSet<Root> = rs
                .te_curve_weights(w, &s)
                .expect("valid")
                .into_iter()
                .collect();
            let report = rs
                .tangent_report_for_word(w, &s, ReportOptions::default())
                .expect("valid");
            let tan: HashSet<Root> = report.kl_tangent_weights.into_iter().collect();
            t.check(
                te.is_subset(&tan),
                || format!("x = {s}, w = {}", ctx.word(w)),
                "TE ⊆ T",
                format!("{te:?} vs {tan:?}"),
            );
        }
    }))
}

fn suite_cominuscule_321(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    if rs.cartan_type().family() != Family::A {
        return None;
    }
    Some(ctx.over(ctx.group.par_iter(), |x, t| {
        let oracle = rs.type_a_cominuscule_oracle(x).expect("type A");
        let got = rs.is_cominuscule_element(x);
        t.check(
            got == oracle,
            || format!("x = {}", ctx.word(x)),
            oracle,
            got,
        );
    }))
}

fn suite_cominuscule_indecomposable(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    Some(ctx.over(ctx.group.par_iter(), |x, t| {
        if !rs.is_cominuscule_element(x) {
            return;
        }
        let inv = rs.inversion_set_of_inverse(x);
        let all = inv
            .iter()
            .all(|a| is_integrally_indecomposable(a, &inv).expect("member"));
        t.check(
            all,
            || format!("x = {}", ctx.word(x)),
            "all indecomposable",
            "decomposable weight",
        );
    }))
}

fn suite_cominuscule_parabolic(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    let nodes = rs.cominuscule_nodes();
    if nodes.is_empty() {
        return None;
    }
    Some(ctx.over(ctx.group.par_iter(), |x, t| {
        for &i in &nodes {
            let p: Vec<usize> = (1..=rs.rank()).filter(|&k| k != i).collect();
            if rs.is_min_coset_rep(x, &p) {
                let got = rs.is_cominuscule_element(x);
                t.check(got, || format!("node {i}, x = {}", ctx.word(x)), true, got);
            }
        }
    }))
}

fn suite_cominuscule_complete(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    Some(ctx.over(ctx.group.par_iter(), |x, t| {
        if !rs.is_cominuscule_element(x) {
            return;
        }
        for w in ctx.below(x) {
            let report = rs.kl_tangent_report(w, x).expect("w ≤ x");
            t.check(
                report.complete,
                || format!("x = {}, w = {}", ctx.word(x), ctx.word(w)),
                true,
                false,
            );
        }
    }))
}

/// `X_P^e = G/P` is smooth, so at every `x ∈ W^P` its tangent weights
/// number `|Φ^+| - |Φ_P^+|`: no position is Out, and together with the
/// Schubert part the positions account for all of them.
fn suite_parabolic_smooth_point(ctx: &Ctx) -> Option<Tally> {
    let rs = ctx.rs;
    let rank = rs.rank();
    let e = rs.identity();
    let t = (0u32..1 << rank)
        .into_par_iter()
        .map(|mask| {
            let mut t = Tally::default();
            let p: Vec<usize> = (1..=rank).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let levi = rs
                .positive_roots()
                .iter()
                .filter(|a| {
                    a.0.iter()
                        .enumerate()
                        .all(|(k, &c)| c == 0 || p.contains(&(k + 1)))
                })
                .count();
            let dim = rs.positive_roots().len() - levi;
            for x in ctx.group.iter().filter(|x| rs.is_min_coset_rep(x, &p)) {
                let report = rs
                    .gp_tangent_report(&e, x, &p, ReportOptions::default())
                    .expect("e ≤ x in W^P");
                // at w = e nothing is Out; decomposable positions stay undecided
                let out = report
                    .verdicts()
                    .iter()
                    .filter(|v| **v == Verdict::Out)
                    .count();
                let n = report.statuses.len() + report.schubert_extra_weights.len();
                t.check(
                    n == dim && out == 0,
                    || format!("P = {p:?}, x = {}", ctx.word(x)),
                    dim,
                    n,
                );
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    Some(t)
}
