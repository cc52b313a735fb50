//! Markov numbers, their `a`-generalisations, and Fock's convex function.
//!
//! The crate computes the Markov tree exactly (Vieta involutions on
//! arbitrary-precision integers), cross-checks it against traces of Cohn
//! matrix words, and evaluates Fock's function
//! `psi(p/q) = arcosh(T(p/q)/2) / q` together with the stable norm on the
//! first homology of the punctured or one-holed hyperbolic torus.  All real
//! quantities are certified intervals ([`HpReal`]).
//!
//! Module map:
//!
//! * [`farey`]: fractions, Stern-Brocot paths, continued fractions.
//! * [`markov`]: surfaces, triples, Vieta steps, tree walks.
//! * [`cohn`]: 2x2 integer matrix words and the Fricke trace identities.
//! * [`hpreal`]: dyadic interval arithmetic with `ln`, `sqrt`, `arcosh`.
//! * [`fock`]: `psi`, geodesic lengths, stable norm, `beta`, one-sided
//!   slopes, corner gaps, irrational brackets, unit-ball sampling.
//! * [`export`]: CSV and JSON writers.
//! * [`verify`]: the property suites behind `fock verify`.
//! * [`cli`]: argument parsing and dispatch for the `fock` binary.

pub mod cli;
pub mod cohn;
pub mod error;
pub mod export;
pub mod farey;
pub mod fock;
pub mod hpreal;
pub mod markov;
pub mod verify;

pub use error::{Error, Result};
pub use farey::{ContinuedFraction, Fraction, SbPath, Side, Step, Symmetry};
pub use fock::{HomologyClass, Precision, PsiValue, SlopeSequence};
pub use hpreal::{Cmp, Dyadic, HpReal};
pub use markov::{MarkovTriple, Surface, Trace};
