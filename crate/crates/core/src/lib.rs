//! Computations in polynomial rings whose variables carry positive integer
//! weights: Gröbner bases and generic initial ideals, strong stability,
//! Hilbert functions and series, lexicographic ideals, minimal free
//! resolutions with the weighted regularity formula, and polarization.
//!
//! Coefficients are exact rationals. All randomized operations take an
//! explicit seed and are deterministic in it.

pub mod automorphism;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod lex;
pub mod monideal;
pub mod monomial;
pub mod order;
pub mod polarization;
pub mod poly;
pub mod resolution;
pub mod ring;
pub mod stability;

pub use automorphism::{AutomorphismMode, Elementary, GradedAutomorphism};
pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, Ideal};
pub use hilbert::{HilbertSeries, QuasiPolynomial};
pub use lex::LexifyOutcome;
pub use monideal::MonomialIdeal;
pub use monomial::Monomial;
pub use order::{OrderKind, TermOrder};
pub use poly::{Coeff, Polynomial};
pub use resolution::{BettiTable, FreeResolution};
pub use ring::{RingDescriptor, WeightGroup};
