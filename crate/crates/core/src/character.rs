//! Eigenvalue multisets of a cyclic action, recorded as exponents of a
//! fixed primitive `n`-th root of unity `ω`. Multiplying eigenvalues is
//! adding exponents mod `n`, and inverting is negating.

use std::fmt;

use crate::error::{Error, Result};

/// A multiset of residues mod `modulus`, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharacterMultiset {
    modulus: u32,
    exponents: Vec<u32>,
}

fn reduce(e: i64, n: u32) -> u32 {
    e.rem_euclid(n as i64) as u32
}

impl CharacterMultiset {
    /// Normalizes every exponent into `[0, modulus)`.
    ///
    /// # Panics
    /// If `modulus` is zero.
    pub fn new<I: IntoIterator<Item = i64>>(modulus: u32, exponents: I) -> Self {
        assert!(modulus > 0, "character modulus must be positive");
        let mut exponents: Vec<u32> = exponents.into_iter().map(|e| reduce(e, modulus)).collect();
        exponents.sort_unstable();
        CharacterMultiset { modulus, exponents }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    fn require_dim(&self, expected: usize) -> Result<()> {
        if self.dim() != expected {
            return Err(Error::WrongDimension {
                expected,
                found: self.dim(),
            });
        }
        Ok(())
    }

    fn signed(&self) -> impl Iterator<Item = i64> + '_ {
        self.exponents.iter().map(|&e| e as i64)
    }

    pub fn dual(&self) -> Self {
        Self::new(self.modulus, self.signed().map(|e| -e))
    }

    /// Second exterior power of a 3-dimensional representation.
    pub fn wedge2(&self) -> Result<Self> {
        self.require_dim(3)?;
        let e: Vec<i64> = self.signed().collect();
        Ok(Self::new(self.modulus, [e[0] + e[1], e[0] + e[2], e[1] + e[2]]))
    }

    /// Determinant of a 3-dimensional representation.
    pub fn wedge3(&self) -> Result<Self> {
        self.require_dim(3)?;
        Ok(Self::new(self.modulus, [self.signed().sum()]))
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        let sums: Vec<i64> = self
            .signed()
            .flat_map(|a| other.signed().map(move |b| a + b))
            .collect();
        Ok(Self::new(self.modulus, sums))
    }

    /// Multiset union (direct sum of representations).
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(Self::new(self.modulus, self.signed().chain(other.signed())))
    }

    /// Whether the eigenvalue 1 occurs.
    pub fn contains_trivial(&self) -> bool {
        self.exponents.contains(&0)
    }

    /// Multiplies every exponent by `u`, i.e. re-expresses the eigenvalues
    /// in terms of `ω^u` when `u` is a unit.
    pub fn scaled(&self, u: u32) -> Self {
        Self::new(self.modulus, self.signed().map(|e| e * u as i64))
    }
}

impl fmt::Display for CharacterMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mod {}: [", self.modulus)?;
        for (i, e) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}
