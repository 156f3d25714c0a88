use thiserror::Error;

use crate::poly::Monomial;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable '{symbol}' at position {position} (expected X, Y or Z)")]
    UnknownVariable { symbol: char, position: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("expected a polynomial of degree {expected}, found degree {found}")]
    WrongDegree { expected: u32, found: u32 },

    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("expected a character of dimension {expected}, found {found}")]
    WrongDimension { expected: usize, found: usize },

    #[error("character moduli differ: {0} vs {1}")]
    ModulusMismatch(u32, u32),

    #[error(
        "polynomial is not semi-invariant: {first} has character {first_character}, \
         {second} has character {second_character}"
    )]
    NotSemiInvariant {
        first: Monomial,
        first_character: u32,
        second: Monomial,
        second_character: u32,
    },

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("invalid search configuration: {0}")]
    Config(String),
}
