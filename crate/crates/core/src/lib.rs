//! Exact-rational computation of Grossberg-Karshon twisted-cube polytopes,
//! Littelmann path-model standard tableaux, and Demazure character oracles.
//!
//! Everything here is exact: weights live in the fundamental-weight basis
//! with `num_rational` coordinates, polytopes are cut out by affine bound
//! functions with rational coefficients, and all comparisons are rational
//! equality tests. There is no floating point anywhere in this crate.

pub mod characters;
pub mod cube;
pub mod paths;
pub mod rat;
pub mod rootsys;
pub mod tableaux;

pub use characters::WeightPolynomial;
pub use cube::TwistedCube;
pub use paths::{MaybePath, Path};
pub use rat::Rat;
pub use rootsys::{CartanMatrix, MultList, Weight, Word};
pub use tableaux::TableauSet;

use thiserror::Error;

/// Errors raised while constructing domain values from external input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("unknown root-system type {0:?}")]
    UnknownType(String),
    #[error("word letter {letter} out of range 1..={rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("word has length {word_len} but multiplicity list has length {mult_len}")]
    LengthMismatch { word_len: usize, mult_len: usize },
    #[error("malformed rational {0:?}")]
    BadRational(String),
    #[error("{0}")]
    Parse(String),
}
