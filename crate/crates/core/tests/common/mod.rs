#![allow(dead_code)]

use num_rational::BigRational;
use proptest::prelude::*;
use quartic_torsion::ceresa::DiagonalAutomorphism;
use quartic_torsion::search::invariant_support;
use quartic_torsion::{Axis, Monomial, Polynomial};

pub const PERMUTATIONS: [[Axis; 3]; 6] = [
    [Axis::X, Axis::Y, Axis::Z],
    [Axis::X, Axis::Z, Axis::Y],
    [Axis::Y, Axis::X, Axis::Z],
    [Axis::Y, Axis::Z, Axis::X],
    [Axis::Z, Axis::X, Axis::Y],
    [Axis::Z, Axis::Y, Axis::X],
];

pub fn p(s: &str) -> Polynomial {
    s.parse().unwrap()
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

pub fn sigma(n: u32, e: [i64; 3]) -> DiagonalAutomorphism {
    DiagonalAutomorphism::new(n, e).unwrap()
}

pub fn from_coeffs(monos: &[Monomial], coeffs: &[i64]) -> Polynomial {
    Polynomial::from_terms(monos.iter().zip(coeffs).map(|(m, &c)| (int(c), *m)))
}

/// Random homogeneous polynomial of degree `d` with small integer coefficients.
pub fn homogeneous(d: u32, range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = Polynomial> {
    let monos = Monomial::all_of_degree(d);
    let len = monos.len();
    proptest::collection::vec(range, len).prop_map(move |c| from_coeffs(&monos, &c))
}

pub fn quartic() -> impl Strategy<Value = Polynomial> {
    homogeneous(4, -3..=3)
}

/// Sparse homogeneous polynomial of degree `d`: each coefficient is zero
/// with probability about 2/3.
pub fn sparse_homogeneous(d: u32) -> impl Strategy<Value = Polynomial> {
    let monos = Monomial::all_of_degree(d);
    let len = monos.len();
    proptest::collection::vec(prop_oneof![4 => Just(0i64), 1 => -2i64..=2, 1 => Just(1i64)], len)
        .prop_map(move |c| from_coeffs(&monos, &c))
}

pub fn axis_perm() -> impl Strategy<Value = [Axis; 3]> {
    (0usize..6).prop_map(|i| PERMUTATIONS[i])
}

/// A diagonal automorphism, a character realized by some quartic monomial,
/// and a nonzero semi-invariant quartic with that character.
pub fn semi_invariant_quartic() -> impl Strategy<Value = (Polynomial, DiagonalAutomorphism, u32)> {
    (1u32..=12, 0i64..12, 0i64..12, 0i64..12, any::<prop::sample::Index>())
        .prop_flat_map(|(n, a, b, c, pick)| {
            let s = sigma(n, [a, b, c]);
            let chars: Vec<u32> = Monomial::all_of_degree(4)
                .iter()
                .map(|m| s.monomial_character(m))
                .collect();
            let lambda = chars[pick.index(chars.len())];
            let support = invariant_support(&s, lambda);
            let len = support.len();
            (
                Just(s),
                Just(lambda),
                Just(support),
                proptest::collection::vec(-2i64..=2, len),
            )
        })
        .prop_filter_map("zero polynomial", |(s, lambda, support, coeffs)| {
            let f = from_coeffs(&support, &coeffs);
            (!f.is_zero()).then_some((f, s, lambda))
        })
}
