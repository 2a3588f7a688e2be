use proptest::prelude::*;

use peakalg::combitypes::{compositions, Composition};
use peakalg::exactmath::Rational;
use peakalg::peakcli::render::ElementJson;
use peakalg::peakcore::solve_zeta_r;
use peakalg::reptheory::Poly;
use peakalg::symcore::{internal_product, product_fast, zassenhaus, Elem};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(a, b)| Rational::new(a, b))
}

/// A random rational combination of S^I over compositions of n.
fn element(n: usize) -> impl Strategy<Value = Elem<Rational>> {
    let basis = compositions(n);
    let len = basis.len();
    prop::collection::vec(rational(), len).prop_map(move |cs| {
        let mut e = Elem::zero(n);
        for (c, comp) in cs.iter().zip(&basis) {
            e.add_scaled(&Elem::s_word(comp.parts()), c);
        }
        e
    })
}

fn triple() -> impl Strategy<Value = (Elem<Rational>, Elem<Rational>, Elem<Rational>)> {
    (1usize..=4).prop_flat_map(|n| (element(n), element(n), element(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_display_parses_back(q in rational()) {
        prop_assert_eq!(q.to_string().parse::<Rational>().unwrap(), q);
    }

    #[test]
    fn descent_sets_determine_compositions(parts in prop::collection::vec(1usize..4, 0..7)) {
        let c = Composition::new(parts).unwrap();
        prop_assert_eq!(Composition::from_descent_set(c.weight(), &c.descent_set()), c);
    }

    #[test]
    fn internal_product_is_associative((f, g, h) in triple()) {
        let left = internal_product(&internal_product(&f, &g).unwrap(), &h).unwrap();
        let right = internal_product(&f, &internal_product(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn internal_product_is_bilinear((f, g, h) in triple(), c in rational()) {
        let mut gh = g.clone();
        gh.add_scaled(&h, &c);
        let mut want = internal_product(&f, &g).unwrap();
        want.add_scaled(&internal_product(&f, &h).unwrap(), &c);
        prop_assert_eq!(internal_product(&f, &gh).unwrap(), want);
    }

    #[test]
    fn s_n_is_the_unit((f, _, _) in triple()) {
        let n = f.weight();
        prop_assert_eq!(internal_product(&Elem::s(n), &f).unwrap(), f.clone());
        prop_assert_eq!(internal_product(&f, &Elem::s(n)).unwrap(), f);
    }

    #[test]
    fn both_product_routes_agree((f, g, _) in triple()) {
        prop_assert_eq!(internal_product(&f, &g).unwrap(), product_fast(&f, &g).unwrap());
    }

    #[test]
    fn element_json_round_trips((f, _, _) in triple()) {
        let json = serde_json::to_string(&ElementJson::new(&f)).unwrap();
        let back: ElementJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.to_elem::<Rational>().unwrap(), f);
    }

    #[test]
    fn table_notation_round_trips(cs in prop::collection::vec(0i64..5, 0..6)) {
        let p = cs.iter().enumerate().fold(Poly::zero(), |acc, (k, &c)| acc.add(&Poly::monomial(c, k)));
        prop_assert_eq!(Poly::parse(&p.to_table()).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn zetas_are_primitive_lie_idempotents(n in 1usize..=5, r in 2usize..=5) {
        let z = &zassenhaus(n)[n];
        prop_assert!(z.is_primitive());
        prop_assert_eq!(&internal_product(z, z).unwrap(), z);
        let zr = &solve_zeta_r(n, r)[n];
        prop_assert!(zr.is_primitive());
    }
}
