mod common;

use common::*;
use proptest::prelude::*;
use quartic_torsion::{parse_polynomial, Axis, Polynomial};

fn euler_lhs(f: &Polynomial) -> Polynomial {
    Axis::ALL
        .iter()
        .map(|&a| &Polynomial::var(a) * &f.partial_derivative(a))
        .fold(Polynomial::zero(), |acc, t| &acc + &t)
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    (0u32..=3).prop_flat_map(|d| homogeneous(d, -4..=4))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn euler_identity_for_quartics(f in quartic()) {
        prop_assert_eq!(euler_lhs(&f), f.scale(&int(4)));
    }

    #[test]
    fn euler_identity_any_degree(d in 0u32..=6, seed in proptest::collection::vec(-5i64..=5, 28)) {
        let monos = quartic_torsion::Monomial::all_of_degree(d);
        let f = from_coeffs(&monos, &seed[..monos.len()]);
        prop_assert_eq!(euler_lhs(&f), f.scale(&int(d as i64)));
    }

    #[test]
    fn print_parse_round_trip(f in small_poly(), g in quartic(), c in -7i64..=7, d in 1i64..=9) {
        let h = &f.scale(&num_rational::BigRational::new(c.into(), d.into())) + &g;
        let printed = h.to_string();
        prop_assert_eq!(parse_polynomial(&printed).unwrap(), h.clone());
        // Printing is canonical: a second pass is byte-identical.
        prop_assert_eq!(parse_polynomial(&printed).unwrap().to_string(), printed);
    }

    #[test]
    fn derivative_is_linear(f in quartic(), g in quartic(), c in -5i64..=5, axis in 0usize..3) {
        let a = Axis::from_index(axis);
        prop_assert_eq!(
            (&f + &g).partial_derivative(a),
            &f.partial_derivative(a) + &g.partial_derivative(a)
        );
        prop_assert_eq!(f.scale(&int(c)).partial_derivative(a), f.partial_derivative(a).scale(&int(c)));
    }

    #[test]
    fn derivative_lowers_degree(f in quartic(), axis in 0usize..3) {
        let df = f.partial_derivative(Axis::from_index(axis));
        prop_assert!(df.is_homogeneous_of_degree(3));
    }

    #[test]
    fn ring_axioms(f in small_poly(), g in small_poly(), h in small_poly()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn no_zero_coefficients_stored(f in small_poly(), g in small_poly()) {
        let h = &(&f * &g) - &(&g * &f);
        prop_assert!(h.is_zero());
        for (_, c) in (&f - &g).iter() {
            prop_assert!(!num_traits::Zero::is_zero(c));
        }
    }
}

#[test]
fn parse_examples() {
    let f = parse_polynomial("X^4 + X*Z^3 + Y^3*Z").unwrap();
    assert_eq!(f, p("X^4") + p("X Z^3") + p("Y^3 Z"));
    assert!(parse_polynomial("0").unwrap().is_zero());
    assert_eq!(parse_polynomial("2*X^2*Y^2 - X^2*Y^2").unwrap(), p("X^2 Y^2"));
}
