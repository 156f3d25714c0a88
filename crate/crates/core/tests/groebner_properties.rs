mod common;

use common::*;
use num_rational::BigRational;
use proptest::prelude::*;
use quartic_torsion::groebner::{
    buchberger, buchberger_with_cofactors, is_reduced_groebner_basis, normal_form, s_polynomial,
    smoothness_check, IdealBasis,
};
use quartic_torsion::Polynomial;

fn small_ideal() -> impl Strategy<Value = Vec<Polynomial>> {
    proptest::collection::vec((1u32..=2).prop_flat_map(sparse_homogeneous), 1..=3)
        .prop_map(|gens| gens.into_iter().filter(|g| !g.is_zero()).collect::<Vec<_>>())
        .prop_filter("at least one generator", |g| !g.is_empty())
}

fn sorted(mut v: Vec<Polynomial>) -> Vec<Polynomial> {
    v.sort();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn groebner_postconditions(gens in small_ideal(), rot in 0usize..3) {
        let ideal = IdealBasis::new(gens.clone()).unwrap();
        let (gb, cofactors) = buchberger_with_cofactors(&ideal);
        let elems = gb.elements();

        // Inputs lie in the ideal of the output.
        for g in &gens {
            prop_assert!(normal_form(g, elems).is_zero());
        }
        // Outputs lie in the ideal of the inputs, witnessed by cofactors.
        for (g, cs) in elems.iter().zip(&cofactors) {
            let combo = cs.iter().zip(&gens).fold(Polynomial::zero(), |acc, (c, h)| &acc + &(c * h));
            prop_assert_eq!(&combo, g);
        }
        // S-pairs reduce to zero; basis is reduced and monic.
        for i in 0..elems.len() {
            for j in (i + 1)..elems.len() {
                prop_assert!(normal_form(&s_polynomial(&elems[i], &elems[j]), elems).is_zero());
            }
        }
        prop_assert!(is_reduced_groebner_basis(elems));

        // Reduced bases are unique: reordering the generators changes nothing.
        let mut permuted = gens.clone();
        permuted.reverse();
        let k = rot % permuted.len();
        permuted.rotate_left(k);
        let other = buchberger(&IdealBasis::new(permuted).unwrap());
        prop_assert_eq!(sorted(other.elements().to_vec()), sorted(elems.to_vec()));
        prop_assert_eq!(other, gb);
    }

    #[test]
    fn smoothness_invariant_under_relabeling_and_scaling(
        f in sparse_homogeneous(4).prop_filter("nonzero", |f| !f.is_zero()),
        perm in axis_perm(),
        s in proptest::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 3),
        d in proptest::collection::vec(1i64..=3, 3),
    ) {
        let smooth = smoothness_check(&f).unwrap();
        prop_assert_eq!(smoothness_check(&f.permuted(perm)).unwrap(), smooth);
        let scales = [0, 1, 2].map(|i| BigRational::new(s[i].into(), d[i].into()));
        prop_assert_eq!(smoothness_check(&f.scale_variables(&scales)).unwrap(), smooth);
    }

    #[test]
    fn products_with_a_line_are_singular(
        line in homogeneous(1, -3..=3).prop_filter("nonzero", |l| !l.is_zero()),
        cubic in sparse_homogeneous(3).prop_filter("nonzero", |c| !c.is_zero()),
    ) {
        prop_assert!(!smoothness_check(&(&line * &cubic)).unwrap());
    }

    #[test]
    fn products_of_conics_are_singular(
        a in sparse_homogeneous(2).prop_filter("nonzero", |c| !c.is_zero()),
        b in sparse_homogeneous(2).prop_filter("nonzero", |c| !c.is_zero()),
    ) {
        prop_assert!(!smoothness_check(&(&a * &b)).unwrap());
    }
}

#[test]
fn smooth_examples() {
    assert!(smoothness_check(&p("X^4 + X*Z^3 + Y^3*Z")).unwrap());
    assert!(smoothness_check(&p("X^4 + Y^4 + Z^4")).unwrap());
    // Klein quartic.
    assert!(smoothness_check(&p("X^3 Y + Y^3 Z + Z^3 X")).unwrap());
    assert!(!smoothness_check(&p("X^4 + Y^4")).unwrap());
    let conic = p("X^2 + Y^2 + Z^2");
    assert!(!smoothness_check(&(&conic * &conic)).unwrap());
    // Nodal at (0:0:1): lowest-order part in Z-chart is X Y.
    assert!(!smoothness_check(&p("X Y Z^2 + X^4 + Y^4")).unwrap());
}
