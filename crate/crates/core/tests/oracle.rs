mod common;

use common::oracle::{descents, permutations, s_word, GroupAlgebra, Orientation, FROZEN};
use peakalg::combitypes::{compositions, Composition};
use peakalg::exactmath::Rational;
use peakalg::symcore::internal_product;

#[test]
fn descent_classes_partition_the_group() {
    for n in 1..=5 {
        let total: usize = compositions(n)
            .iter()
            .map(|k| {
                permutations(n)
                    .iter()
                    .filter(|p| descents(p) == k.descent_set())
                    .count()
            })
            .sum();
        assert_eq!(total, (1..=n).product::<usize>());
    }
}

#[test]
fn orientation_is_pinned_by_s11() {
    let g = GroupAlgebra::new(2);
    let c = Composition(vec![1, 1]);
    let expect = s_word(&c).scale(&Rational::from_int(2));
    assert_eq!(g.internal_product(&c, &c, FROZEN), expect);
}

#[test]
fn other_orientation_is_wrong() {
    let other = match FROZEN {
        Orientation::Direct => Orientation::Anti,
        Orientation::Anti => Orientation::Direct,
    };
    let g = GroupAlgebra::new(3);
    let disagree = compositions(3).iter().any(|i| {
        compositions(3).iter().any(|j| {
            g.internal_product(i, j, other) != internal_product(&s_word(i), &s_word(j)).unwrap()
        })
    });
    assert!(disagree);
}

#[test]
fn splitting_matches_group_algebra() {
    for n in 1..=5 {
        let g = GroupAlgebra::new(n);
        for i in compositions(n) {
            for j in compositions(n) {
                let split = internal_product(&s_word(&i), &s_word(&j)).unwrap();
                assert_eq!(split, g.internal_product(&i, &j, FROZEN), "{i:?} * {j:?}");
            }
        }
    }
}
