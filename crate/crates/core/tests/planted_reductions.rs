//! Clique-sum reduction on planted instances: an odd number of copies of a
//! target glued along a clique, mapped copy-wise by the identity.

use homind::graph::named::{complete, cycle, petersen, wagner};
use homind::graph::{canonical_form, Graph};
use homind::hom::Homomorphism;
use homind::oddo::certify;
use homind::reductions::reduce_clique_sum;

fn planted(g: &Graph, clique: &[usize], copies: usize) -> (Graph, Vec<usize>) {
    let mut f = g.clone();
    let mut map: Vec<usize> = (0..g.order()).collect();
    for _ in 1..copies {
        f = Graph::clique_sum(&f, g, clique, clique, &[]).unwrap();
        map.extend((0..g.order()).filter(|v| !clique.contains(v)));
    }
    (f, map)
}

#[test]
fn planted_sums_reduce_to_one_summand() {
    let cases: Vec<(Graph, Vec<usize>, usize)> = vec![
        (cycle(3), vec![0], 1),
        (cycle(5), vec![2], 1),
        (petersen(), vec![0], 1),
        (complete(4), vec![0, 1], 2),
        (wagner(), vec![0, 1], 2),
        (complete(5), vec![0, 1], 2),
    ];
    for (g, clique, s) in cases {
        for copies in [3, 5] {
            let (f, map) = planted(&g, &clique, copies);
            let cert = certify(&Homomorphism::new(f.clone(), g.clone(), map).unwrap())
                .unwrap_or_else(|| panic!("planted map onto {g} is not an oddomorphism"));
            let red = reduce_clique_sum(&cert, |h| h.order() <= g.order(), s).unwrap();
            assert_eq!(canonical_form(red.cert.source()), canonical_form(&g), "{g} x{copies}");
            assert!(red.in_family);
            assert!(!red.rounds.is_empty());
            for r in &red.rounds {
                assert!(r.order_after < r.order_before);
            }
            red.cert.verify().unwrap();
        }
    }
}

#[test]
fn even_number_of_copies_is_not_planted() {
    let (f, map) = planted(&cycle(3), &[0], 2);
    assert!(certify(&Homomorphism::new(f, cycle(3), map).unwrap()).is_none());
}

#[test]
fn connectivity_precondition() {
    let (f, map) = planted(&cycle(3), &[0], 3);
    let cert = certify(&Homomorphism::new(f, cycle(3), map).unwrap()).unwrap();
    assert!(reduce_clique_sum(&cert, |_| true, 2).is_err());
}
