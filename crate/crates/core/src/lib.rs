//! Exact tangent-space weights of Schubert and Kazhdan–Lusztig varieties.
//!
//! The crate is organised bottom-up:
//!
//! - [`rootsys`]: root systems of types A–G in simple-root coordinates.
//! - [`weyl`]: Weyl group elements, words, Bruhat order, γ-sequences, `W^P`.
//! - [`hecke`]: Demazure products in the 0-Hecke monoid.
//! - [`subword`]: subword complexes and Hecke subword index sets.
//! - [`rt_ring`]: Laurent polynomials in `R(T)` and truncated characters.
//! - [`tangent`]: K-theory classes, tangent-weight verdicts, cominuscule
//!   elements.
//! - [`verify`]: the exhaustive invariant battery behind `verify`.
//! - [`cli`]: the command-line front end.
//!
//! ```
//! use schubert_tangent::{RootSystem, Verdict, Word};
//!
//! let a2 = RootSystem::from_label("A2").unwrap();
//! let x = a2.word_to_element(&"1 2 1".parse::<Word>().unwrap()).unwrap();
//! let w = a2.simple_reflection(1);
//! let report = a2.kl_tangent_report(&w, &x).unwrap();
//! assert_eq!(
//!     report.verdicts(),
//!     vec![Verdict::In, Verdict::Undetermined, Verdict::In]
//! );
//! ```

pub mod cli;
pub mod error;
pub mod hecke;
pub mod rootsys;
pub mod rt_ring;
pub mod subword;
pub mod tangent;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use hecke::HeckeWordStats;
pub use rootsys::{CartanType, Family, Root, RootSystem};
pub use rt_ring::{LaurentPoly, TruncatedSeries, WeightVector};
pub use subword::{IndexSequence, SubwordComplex};
pub use tangent::{Evidence, ReportOptions, TangentReport, Verdict, WeightStatus};
pub use weyl::{GammaSequence, WeylElement, Word};
