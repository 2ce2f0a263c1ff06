//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on a domain error or a failing `verify`
//! suite, 2 on a usage error. Every JSON document carries a top-level
//! `schema_version`. Timing from `verify` goes to stderr only, so stdout is
//! identical across runs.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rootsys::{CartanType, Root, RootSystem};
use crate::rt_ring::LaurentPoly;
use crate::subword::{EulerCharacteristics, IndexSequence};
use crate::tangent::{
    is_integrally_indecomposable, Evidence, ReportOptions, TangentReport, Verdict,
};
use crate::verify::{run_all, VerifyConfig, VerifyOutcome};
use crate::weyl::{WeylElement, Word};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "schubert-tangent",
    version,
    about = "Tangent weights of Schubert and Kazhdan–Lusztig varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct XW {
    /// Reduced word for the fixed point x, e.g. "1 2 1" or "s1 s2 s1".
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    /// Word for w (need not be reduced).
    #[arg(long, allow_hyphen_values = true)]
    w: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Per-weight tangent verdicts at the fixed point x.
    Tangent {
        cartan: String,
        #[command(flatten)]
        xw: XW,
        /// Comma-separated nodes of a parabolic subset P; x and w must lie in W^P.
        #[arg(long)]
        parabolic: Option<String>,
        /// Decide decomposable weights by ordinary products (type A only).
        #[arg(long)]
        type_a_oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// The K-theory class P_{w,s} for the canonical reduced word s of x.
    Kclass {
        cartan: String,
        #[command(flatten)]
        xw: XW,
        #[arg(long)]
        json: bool,
    },
    /// Demazure product of a word (JSON).
    Demazure { cartan: String, word: String },
    /// The subword complex Δ(word, target) (JSON).
    SubwordComplex {
        cartan: String,
        word: String,
        target: String,
    },
    /// Cominuscule test for x.
    Cominuscule {
        cartan: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the invariant battery.
    Verify {
        cartan: String,
        /// Refuse groups with more elements than this.
        #[arg(long)]
        max_rank_guard: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

impl Command {
    fn json(&self) -> bool {
        match self {
            Command::Tangent { json, .. }
            | Command::Kclass { json, .. }
            | Command::Cominuscule { json, .. }
            | Command::Verify { json, .. } => *json,
            Command::Demazure { .. } | Command::SubwordComplex { .. } => true,
        }
    }
}

/// A weight as its simple-root coefficients plus a readable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightView {
    pub coeffs: Vec<i32>,
    pub root: String,
}

impl From<&Root> for WeightView {
    fn from(r: &Root) -> Self {
        WeightView {
            coeffs: r.0.clone(),
            root: r.to_string(),
        }
    }
}

fn weights(rs: &[Root]) -> Vec<WeightView> {
    rs.iter().map(WeightView::from).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatusView {
    pub position: usize,
    pub gamma: WeightView,
    pub verdict: Verdict,
    pub evidence: Evidence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportView {
    pub schema_version: u32,
    pub cartan_type: String,
    pub parabolic: Option<Vec<usize>>,
    pub x_word: Word,
    pub w_word: Word,
    pub gamma: Vec<WeightView>,
    pub statuses: Vec<StatusView>,
    pub kl_tangent_weights: Vec<WeightView>,
    pub schubert_extra_weights: Vec<WeightView>,
    pub schubert_tangent_weights: Option<Vec<WeightView>>,
    pub complete: bool,
}

impl ReportView {
    pub fn new(rs: &RootSystem, report: &TangentReport) -> Self {
        ReportView {
            schema_version: SCHEMA_VERSION,
            cartan_type: rs.cartan_type().to_string(),
            parabolic: report.parabolic.clone(),
            x_word: report.x_word.clone(),
            w_word: rs.canonical_reduced_word(&report.w),
            gamma: weights(&report.gamma.gammas),
            statuses: report
                .statuses
                .iter()
                .map(|st| StatusView {
                    position: st.position,
                    gamma: (&st.gamma).into(),
                    verdict: st.verdict,
                    evidence: st.evidence.clone(),
                })
                .collect(),
            kl_tangent_weights: weights(&report.kl_tangent_weights),
            schubert_extra_weights: weights(&report.schubert_extra_weights),
            schubert_tangent_weights: report.schubert_tangent_weights().map(|w| weights(&w)),
            complete: report.complete,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KClassView {
    pub schema_version: u32,
    pub cartan_type: String,
    pub x_word: Word,
    pub w_word: Word,
    pub gamma: Vec<WeightView>,
    pub class: LaurentPoly,
    pub pretty: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DemazureView {
    pub schema_version: u32,
    pub cartan_type: String,
    pub word: Word,
    pub delta: Word,
    pub delta_length: usize,
    pub excess: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubwordComplexView {
    pub schema_version: u32,
    pub cartan_type: String,
    pub word: Word,
    pub target: Word,
    pub dimension: i64,
    pub faces: Vec<IndexSequence>,
    pub facets: Vec<IndexSequence>,
    pub boundary: Vec<IndexSequence>,
    pub euler: EulerCharacteristics,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CominusculeView {
    pub schema_version: u32,
    pub cartan_type: String,
    pub x_word: Word,
    pub cominuscule: bool,
    pub inversion_set: Vec<WeightView>,
    pub all_indecomposable: bool,
    /// One-line notation, type A only.
    pub permutation: Option<Vec<usize>>,
    pub avoids_321: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyView {
    pub schema_version: u32,
    pub cartan_type: String,
    pub passed: bool,
    pub suites: Vec<VerifyOutcome>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorView {
    pub schema_version: u32,
    pub error: ErrorBody,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidCartanType(_) => Failure::Usage(e.to_string()),
            e => Failure::Domain(e),
        }
    }
}

/// Runs the CLI on `argv` (including the program name), writing to the
/// given streams. Returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let json = cli.command.json();
    match dispatch(&cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let (code, kind, message) = match f {
                Failure::Usage(m) => (2, "Usage".to_string(), m),
                Failure::Domain(e) => (1, e.kind().to_string(), e.to_string()),
            };
            if json {
                let view = ErrorView {
                    schema_version: SCHEMA_VERSION,
                    error: ErrorBody { kind, message },
                };
                let _ = writeln!(out, "{}", to_json(&view));
            } else {
                let _ = writeln!(err, "error: {message}");
            }
            code
        }
    }
}

/// Runs the CLI against the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("views serialize")
}

fn system(label: &str) -> Result<RootSystem, Failure> {
    let ct: CartanType = label.parse()?;
    Ok(RootSystem::new(ct))
}

fn word(s: &str) -> Result<Word, Failure> {
    Ok(s.parse()?)
}

fn element(rs: &RootSystem, s: &str) -> Result<WeylElement, Failure> {
    Ok(rs.word_to_element(&word(s)?)?)
}

fn reduced(rs: &RootSystem, s: &str) -> Result<Word, Failure> {
    let w = word(s)?;
    w.check_range(rs.rank())?;
    if !rs.is_reduced(&w) {
        return Err(Error::NotReduced(w.0).into());
    }
    Ok(w)
}

fn parse_parabolic(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.trim_start_matches(['s', 'S'])
                .parse::<usize>()
                .map_err(|_| Failure::Usage(format!("bad parabolic node {t:?}")))
        })
        .collect()
}

fn dispatch(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Tangent {
            cartan,
            xw,
            parabolic,
            type_a_oracle,
            json,
        } => {
            let rs = system(cartan)?;
            let s = reduced(&rs, &xw.x)?;
            let w = element(&rs, &xw.w)?;
            let opts = ReportOptions {
                type_a_oracle: *type_a_oracle,
                ..ReportOptions::default()
            };
            let report = match parabolic {
                Some(p) => {
                    // validates W^P membership; the report itself follows the caller's word
                    let checked =
                        rs.gp_tangent_report(&w, &rs.word_product(&s), &parse_parabolic(p)?, opts)?;
                    TangentReport {
                        parabolic: checked.parabolic,
                        ..rs.tangent_report_for_word(&w, &s, opts)?
                    }
                }
                None => rs.tangent_report_for_word(&w, &s, opts)?,
            };
            let view = ReportView::new(&rs, &report);
            if *json {
                let _ = writeln!(out, "{}", to_json(&view));
            } else {
                let _ = write!(out, "{}", human_report(&view));
            }
            Ok(0)
        }
        Command::Kclass { cartan, xw, json } => {
            let rs = system(cartan)?;
            let s = reduced(&rs, &xw.x)?;
            let w = element(&rs, &xw.w)?;
            let class = rs.k_theory_class(&w, &s)?;
            let gamma = rs.gamma_sequence(&s)?;
            let view = KClassView {
                schema_version: SCHEMA_VERSION,
                cartan_type: rs.cartan_type().to_string(),
                x_word: s,
                w_word: rs.canonical_reduced_word(&w),
                gamma: weights(&gamma.gammas),
                pretty: class.to_string(),
                class,
            };
            if *json {
                let _ = writeln!(out, "{}", to_json(&view));
            } else {
                let _ = writeln!(out, "P_{{w,s}} = {}", view.pretty);
            }
            Ok(0)
        }
        Command::Demazure { cartan, word: q } => {
            let rs = system(cartan)?;
            let summary = rs.demazure_summary(&word(q)?)?;
            let view = DemazureView {
                schema_version: SCHEMA_VERSION,
                cartan_type: rs.cartan_type().to_string(),
                word: summary.word,
                delta: summary.delta,
                delta_length: summary.delta_length,
                excess: summary.excess,
            };
            let _ = writeln!(out, "{}", to_json(&view));
            Ok(0)
        }
        Command::SubwordComplex {
            cartan,
            word: q,
            target,
        } => {
            let rs = system(cartan)?;
            let q = word(q)?;
            q.check_range(rs.rank())?;
            let w = element(&rs, target)?;
            let c = rs.build_complex(&w, &q)?;
            let view = SubwordComplexView {
                schema_version: SCHEMA_VERSION,
                cartan_type: rs.cartan_type().to_string(),
                target: rs.canonical_reduced_word(&w),
                dimension: c.dimension(),
                faces: c.faces().to_vec(),
                facets: c.facets().to_vec(),
                boundary: c.boundary_faces(),
                euler: c.euler_characteristics(),
                word: q,
            };
            let _ = writeln!(out, "{}", to_json(&view));
            Ok(0)
        }
        Command::Cominuscule { cartan, x, json } => {
            let rs = system(cartan)?;
            let s = reduced(&rs, x)?;
            let xe = rs.word_product(&s);
            let inv = rs.gamma_sequence(&s)?.gammas;
            let all_indecomposable = inv
                .iter()
                .all(|a| is_integrally_indecomposable(a, &inv).expect("member of its own set"));
            let permutation = rs.permutation_of(&xe).ok();
            let view = CominusculeView {
                schema_version: SCHEMA_VERSION,
                cartan_type: rs.cartan_type().to_string(),
                x_word: s,
                cominuscule: rs.is_cominuscule_element(&xe),
                inversion_set: weights(&inv),
                all_indecomposable,
                avoids_321: permutation
                    .as_ref()
                    .map(|p| !crate::tangent::has_321_pattern(p)),
                permutation,
            };
            if *json {
                let _ = writeln!(out, "{}", to_json(&view));
            } else {
                let _ = writeln!(
                    out,
                    "x = {} is {}cominuscule",
                    view.x_word,
                    if view.cominuscule { "" } else { "not " }
                );
                if let Some(p) = &view.permutation {
                    let _ = writeln!(
                        out,
                        "permutation {p:?}, 321-avoiding: {}",
                        view.avoids_321.unwrap_or(false)
                    );
                }
            }
            Ok(0)
        }
        Command::Verify {
            cartan,
            max_rank_guard,
            json,
        } => {
            let rs = system(cartan)?;
            let mut cfg = VerifyConfig::default();
            if let Some(g) = max_rank_guard {
                cfg.group_guard = *g;
            }
            let suites = run_all(&rs, &cfg)?;
            for o in &suites {
                let _ = writeln!(err, "{}: {:.3}s", o.suite, o.wall_time.as_secs_f64());
            }
            let passed = suites.iter().all(VerifyOutcome::passed);
            let view = VerifyView {
                schema_version: SCHEMA_VERSION,
                cartan_type: rs.cartan_type().to_string(),
                passed,
                suites,
            };
            if *json {
                let _ = writeln!(out, "{}", to_json(&view));
            } else {
                for o in &view.suites {
                    let mark = if o.passed() { "ok" } else { "FAIL" };
                    let _ = writeln!(out, "{:<28} {:>8} cases  {mark}", o.suite, o.cases);
                    for f in o.failures.iter().take(5) {
                        let _ = writeln!(
                            out,
                            "    {}: expected {}, got {}",
                            f.inputs, f.expected, f.got
                        );
                    }
                }
                let _ = writeln!(
                    out,
                    "{}",
                    if passed {
                        "all suites passed"
                    } else {
                        "FAILURES"
                    }
                );
            }
            Ok(if passed { 0 } else { 1 })
        }
    }
}

fn human_report(v: &ReportView) -> String {
    let mut s = format!("{}  x = {}  w = {}", v.cartan_type, v.x_word, v.w_word);
    if let Some(p) = &v.parabolic {
        s += &format!("  P = {p:?}");
    }
    s += "\n";
    let width = v
        .statuses
        .iter()
        .map(|st| st.gamma.root.chars().count())
        .max()
        .unwrap_or(1)
        .max(3);
    s += &format!(
        "{:>3}  {:<width$}  {:<12}  indec  δ≥w\n",
        "j", "γ_j", "verdict"
    );
    for st in &v.statuses {
        s += &format!(
            "{:>3}  {:<width$}  {:<12}  {:<5}  {}\n",
            st.position,
            st.gamma.root,
            st.verdict.to_string(),
            st.evidence.indecomposable,
            st.evidence.demazure_ok,
        );
    }
    let list = |ws: &[WeightView]| {
        ws.iter()
            .map(|w| w.root.as_str())
            .collect::<Vec<_>>()
            .join(", ")
    };
    s += &format!("KL tangent weights: {{{}}}\n", list(&v.kl_tangent_weights));
    match &v.schubert_tangent_weights {
        Some(ws) => s += &format!("Schubert tangent weights: {{{}}}\n", list(ws)),
        None => s += "Schubert tangent weights: incomplete (undetermined positions)\n",
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("schubert-tangent").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn tangent_a2_json() {
        let (code, out, _) = call(&["tangent", "A2", "--x", "1 2 1", "--w", "1", "--json"]);
        assert_eq!(code, 0);
        let v: ReportView = serde_json::from_str(&out).unwrap();
        let verdicts: Vec<_> = v.statuses.iter().map(|s| s.verdict).collect();
        assert_eq!(verdicts, [Verdict::In, Verdict::Undetermined, Verdict::In]);
        let kl: Vec<_> = v
            .kl_tangent_weights
            .iter()
            .map(|w| w.coeffs.clone())
            .collect();
        assert_eq!(kl, [vec![1, 0], vec![0, 1]]);
        assert_eq!(to_json(&v) + "\n", out);
    }

    #[test]
    fn demazure_a2() {
        let (code, out, _) = call(&["demazure", "A2", "1 1"]);
        assert_eq!(code, 0);
        let v: DemazureView = serde_json::from_str(&out).unwrap();
        assert_eq!(v.delta, Word(vec![1]));
        assert_eq!(v.excess, 1);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["demazure", "Q7", "1"]).0, 2);
        assert_eq!(call(&["demazure", "A2", "1 x"]).0, 2);
        let (code, out, _) = call(&["tangent", "A2", "--x", "1 1", "--w", "1", "--json"]);
        assert_eq!(code, 1);
        let e: ErrorView = serde_json::from_str(&out).unwrap();
        assert_eq!(e.error.kind, "NotReduced");
        assert_eq!(call(&["tangent", "A2", "--x", "1", "--w", "2"]).0, 1);
    }
}
