//! Exact computations around Springer fibers of hook and two-row type.
//!
//! The library computes, in exact integer arithmetic:
//!
//! * intersection homology Poincaré polynomials of the irreducible
//!   components of the Springer fiber of a hook or two-row nilpotent,
//!   and of their pairwise intersections (`poincare`);
//! * the Gram matrix of the Kazhdan-Lusztig basis of the corresponding
//!   Hecke-algebra cell representation, by three independent routes:
//!   solving the W-graph equation system (`gram`), Temperley-Lieb cup
//!   diagram calculus (`cupdiag` + `gram`), and the closed geometric
//!   formulas (`poincare` + `gram`);
//! * brute-force point counts of the same varieties over small prime
//!   fields, as an independent oracle (`fqspringer`).
//!
//! All three Gram routes must agree, and the point counts must match the
//! polynomial predictions; `selftest` wires those checks together.

pub mod cellmod;
pub mod cli;
pub mod cupdiag;
pub mod error;
pub mod fqspringer;
pub mod gram;
pub mod laurent;
pub mod poincare;
pub mod selftest;
pub mod tableaux;

pub use error::{Error, Result};
