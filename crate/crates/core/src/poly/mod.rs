//! Sparse polynomials in `X, Y, Z` with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! degrevlex, so the last entry is always the leading term and iteration in
//! reverse gives the canonical printing order.

mod monomial;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use monomial::{Axis, Monomial};
pub use parse::{parse_polynomial, parse_rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(BigRational::one(), Monomial::ONE)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn var(axis: Axis) -> Self {
        Self::term(BigRational::one(), Monomial::var(axis))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Builds a polynomial from `(coefficient, monomial)` pairs, combining
    /// repeated monomials and dropping zero sums.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigRational, Monomial)>,
    {
        let mut p = Polynomial::zero();
        for (c, m) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Same as [`Polynomial::from_terms`] with integer coefficients.
    pub fn from_int_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, [u32; 3])>,
    {
        Self::from_terms(
            terms
                .into_iter()
                .map(|(c, e)| (BigRational::from_integer(BigInt::from(c)), Monomial(e))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in ascending degrevlex order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Terms in descending degrevlex order (leading term first).
    pub fn terms_descending(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Largest total degree of any term, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// The common degree of all terms; `Ok(None)` for the zero polynomial.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => Ok(None),
            Some(d) if degrees.all(|e| e == d) => Ok(Some(d)),
            Some(_) => Err(Error::NotHomogeneous),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self -= c * m * other`, in place.
    pub fn sub_scaled_shifted(&mut self, c: &BigRational, m: &Monomial, other: &Polynomial) {
        for (om, oc) in &other.terms {
            self.add_term(m.mul(om), -(c * oc));
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn shift(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    /// Divides by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            Some((_, lc)) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Formal partial derivative with respect to `axis`.
    pub fn partial_derivative(&self, axis: Axis) -> Polynomial {
        let i = axis.index();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut d = m.0;
            d[i] -= 1;
            out.add_term(Monomial(d), c * BigRational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// `[F_X, F_Y, F_Z]`.
    pub fn gradient(&self) -> [Polynomial; 3] {
        Axis::ALL.map(|a| self.partial_derivative(a))
    }

    /// Value of a homogeneous polynomial at the coordinate point of `axis`,
    /// i.e. the coefficient of the pure power of that variable.
    pub fn evaluate_at_coordinate_point(&self, axis: Axis) -> Result<BigRational> {
        match self.homogeneous_degree()? {
            None => Ok(BigRational::zero()),
            Some(d) => Ok(self.coefficient(&Monomial::pure_power(axis, d))),
        }
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permuted(&self, perm: [Axis; 3]) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.permuted(perm), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `X -> s[0] X`, `Y -> s[1] Y`, `Z -> s[2] Z`.
    pub fn scale_variables(&self, s: &[BigRational; 3]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (k, e) in m.0.iter().enumerate() {
                for _ in 0..*e {
                    v *= &s[k];
                }
            }
            out.add_term(*m, v);
        }
        out
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::term(BigRational::one(), m)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Canonical form: terms in descending degrevlex order, `*` between every
/// factor, unit coefficients omitted, `0` for the zero polynomial.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms_descending().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s)
    }
}
