//! Counting and enumerating h-vectors of zero-dimensional standard graded
//! algebras by their length (the sum of the entries).
//!
//! The crate is organised around Macaulay's growth condition:
//!
//! * [`macaulay`] holds the binomial representation `a = C(b_d, d) + ...`
//!   and the growth bound `a^<d>`, plus validation of candidate vectors.
//! * [`enumerate`] builds the set of h-vectors of a given length and counts
//!   it (and its refinement by the first entry `h_1`) with a memoized walk.
//! * [`fib_bound`] constructs the Fibonacci-counted superset family and
//!   checks containment.
//! * [`staircase`] is the dictionary between integer partitions and
//!   `(x, y)`-primary monomial ideals in two variables.
//! * [`lefschetz`] evaluates numeric conditions (unimodal, symmetric, weak
//!   Lefschetz) and the resulting counting sequences.
//! * [`table`] assembles rows of those sequences for export.

pub mod enumerate;
pub mod error;
pub mod fib_bound;
pub mod lefschetz;
pub mod macaulay;
pub mod staircase;
pub mod table;

pub use error::{Error, Result};
pub use macaulay::{CandidateVector, HVector, MacaulayRep};
