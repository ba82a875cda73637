//! Toolkit for hitting-formula proof systems.
//!
//! A *hitting formula* is a CNF in which every two clauses contain a variable
//! with opposite signs, so the sets of assignments falsifying the clauses are
//! pairwise disjoint. Unsatisfiable hitting formulas (and their odd, bounded
//! and xor-clause generalizations) serve as static refutation certificates
//! that can be checked by counting, Gaussian elimination and polynomial
//! identity testing. This crate provides:
//!
//! - [`formula`]: CNF / xor-CNF data model, restriction, DIMACS-family codecs;
//! - [`gf2`]: bit-packed affine algebra over GF(2) and GF(2^t) arithmetic;
//! - [`pit`]: identity testing for sums of pseudomonomials modulo the Boolean
//!   and dual-variable ideal, plus succinct Nullstellensatz verification;
//! - [`verify`]: certificate checkers for the hitting-style proof systems;
//! - [`sim`]: conversions between hitting certificates and (parity) decision
//!   trees;
//! - [`gen`]: generators for the formula families used as a test corpus;
//! - [`oracle`]: brute-force ground truth at small variable counts;
//! - [`selftest`]: the embedded desk-scale acceptance suite.

pub mod error;
pub mod formula;
pub mod gen;
pub mod gf2;
pub mod oracle;
pub mod pit;
pub mod selftest;
pub mod sim;
pub mod verify;

pub use error::{Error, Result};
