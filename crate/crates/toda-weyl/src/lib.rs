//! Exact symbolic calculus for the local masses of affine Toda systems of
//! type `A_n^(1)` and `C_n^(1),t`.
//!
//! A local mass is a vector of degree-one forms in the weights `mu_i`
//! (and, for identity checks, in generic indeterminates `s_i`). The affine
//! Weyl group acts on these vectors through the generators `R_i`; the
//! orbit of the zero vector is the set of admissible local masses.
//!
//! Modules:
//!
//! - [`algebra`]: rationals, linear forms, mass vectors and their JSON form
//! - [`cartan`]: generalized and finite Cartan matrices, exact inverses
//! - [`weyl`]: generator action, words, presentation relations, Pohozaev residuals
//! - [`chains`]: set-chain words, closed-form targets, blow-up steps
//! - [`orbit`]: orbit enumeration, coefficient matrices, membership by descent
//! - [`permutations`]: rotations, permutation mass formulas, folding
//! - [`cli`]: the command line front end

pub mod algebra;
pub mod cartan;
pub mod chains;
pub mod cli;
pub mod error;
pub mod orbit;
pub mod permutations;
pub mod weyl;

pub use algebra::{AlgebraSpec, Family, LinForm, MassVector, Quadratic, Rational};
pub use cartan::{CartanFamily, CartanMatrix, ConsecutiveSet};
pub use error::{Error, Result};
pub use weyl::Word;
