//! Computational tools for finite quasigroups and central loops.
//!
//! The crate is organised bottom-up:
//!
//! - [`perm`]: right-acting permutations with cycle notation.
//! - [`magma`]: Latin squares, loops, translations, powers and the `.tbl` format.
//! - [`identities`]: exhaustive checks of the central, alternative, nuclear-square,
//!   Steiner and associative laws, with counterexample witnesses.
//! - [`autotopism`]: autotopism triples, the CS-autotopism pair of a C-loop and
//!   the autotopism constructed from it, plus a brute-force enumerator.
//! - [`parastrophe`]: the five conjugate operations and the equivalence report
//!   tying them to the constructed autotopisms.
//! - [`sts`]: the triple family built from CS-autotopisms and Steiner triple
//!   system checks.
//! - [`cli`]: the `cloops` command-line front end.

pub mod autotopism;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod identities;
pub mod magma;
pub mod parastrophe;
pub mod perm;
pub mod sts;

pub use autotopism::{Autotopism, Constructed, CsPair};
pub use error::{Error, Result};
pub use identities::{IdentityName, IdentityReport, Witness};
pub use magma::{CayleyTable, LoopStructure};
pub use parastrophe::{EquivalenceReport, ParastropheKind};
pub use perm::Perm;
pub use sts::{CsFamily, TripleSystem};
