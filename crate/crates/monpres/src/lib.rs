//! Finitely presented algebraic theories, computably.
//!
//! `monpres` builds free term monads over finitary signatures, checks and
//! enumerates finite algebras of equational presentations, decides term
//! equality modulo equations with replayable evidence, computes colimits
//! of presented theories, and handles presentations of categories by
//! generators and relations.
//!
//! Start with the runnable programs in `examples/`; each one walks through
//! a single capability end to end. The `monpres` binary exposes the same
//! functionality over `.pres`/`.alg` files.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod colimit;
pub mod dsl;
pub mod error;
pub mod presentation;
pub mod quiver;
pub mod signature;

pub use error::{Error, Result};
