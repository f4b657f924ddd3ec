//! llk — a workbench for intuitionistic and linear sequent calculi.
//!
//! The crate has three layers:
//!
//! * `syntax` and `rewrite`: proof trees for LJ / iMALL / ILL / DiLL, a
//!   validator for the rule tables, bounded proof enumeration, and a cut
//!   elimination engine with step traces.
//! * `cat` and `models`: executable finite categories (FinSet, finite
//!   coherence spaces, the relational model with a truncated multiset
//!   exponential), structure bundles, a commuting-diagram checker, and
//!   Kleisli constructions.
//! * `semantics`, `summability`, `distlaw`: interpretation of proofs into
//!   models, invariance under cut elimination, summability structures and the
//!   coherent differentiation law suites, and distributive laws with their
//!   Kleisli extensions.

pub mod cat;
pub mod distlaw;
pub mod models;
pub mod report;
pub mod rewrite;
pub mod semantics;
pub mod summability;
pub mod syntax;
