//! Extremal combinatorics of set families whose pairwise Hamming distances
//! form a symmetric set: exact size bounds, linear-independence certificates
//! produced by the polynomial method, and exhaustive search for extremal
//! families at small ground-set sizes.
//!
//! A family of subsets of `[n] = {1, …, n}` has distance set `D` consisting of
//! every `|F Δ G|` over distinct members. `D` is *Hamming symmetric* when
//! `d ∈ D` implies `n − d ∈ D`. The crate is organised around that notion:
//!
//! - [`family`]: ground sets, bit-word set families, q-ary word families,
//!   distance sets, signed (±1) characteristic vectors, and the family file
//!   format used by the CLI.
//! - [`bounds`]: exact big-integer bound evaluators (distance-count bounds for
//!   general alphabets, parity-split bounds for symmetric binary families, the
//!   conjectured q-ary analogue) and monomial-class counting.
//! - [`poly`]: multilinear polynomials over the ±1 cube with `x_j² → 1`
//!   reduction, and the annihilator construction underlying the certificates.
//! - [`certificate`]: evaluation-matrix certificates that a symmetric family's
//!   annihilators are linearly independent, with exact rank computation.
//! - [`search`]: distance graphs over all words, branch-and-bound maximum
//!   family search, sharpness surveys, an explorer for the conjectured q-ary
//!   bound, and an exhaustive sweep over all tiny families.

pub mod bounds;
pub mod certificate;
pub mod error;
pub mod family;
pub mod linalg;
pub mod poly;
pub mod search;

mod bitset;

pub use error::{Error, Result};
