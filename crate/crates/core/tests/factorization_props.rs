mod common;

use std::collections::HashSet;
use std::sync::Arc;

use agglom_core::divisor_theory::class_group_rank;
use agglom_core::elasticity::semi_length;
use agglom_core::engine::LengthMemo;
use agglom_core::{
    atoms, enumerate_connected_subgraphs, factorizations, is_acyclic, is_factorial, is_half_factorial, length_set, Agg,
    AggMonoid, Rational, Subgraph,
};
use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn factorizations_sum_to_the_element_without_repeats((g, els) in with_elements(arb_graph(4, 5), 2, 1)) {
        let a = &els[0];
        let fs = factorizations(a, None).unwrap();
        prop_assert!(fs.complete);
        let mut seen = HashSet::new();
        for z in &fs.items {
            let mut sum = Agg::zero(g.clone());
            for s in &z.atoms {
                let atom = Agg::indicator(g.clone(), s).unwrap();
                prop_assert!(atom.is_atom());
                sum = sum.add(&atom).unwrap();
            }
            prop_assert_eq!(&sum, a);
            prop_assert!(seen.insert(z.atoms.clone()));
        }
        let lengths: Vec<usize> = fs.items.iter().map(|z| z.len()).collect::<HashSet<_>>().into_iter().collect();
        let l = length_set(a).unwrap();
        prop_assert_eq!(l.len(), lengths.len());
        prop_assert!(lengths.iter().all(|&k| l.contains(k)));
    }

    #[test]
    fn atoms_are_absolutely_irreducible(g in arb_graph(4, 5), pick in any::<prop::sample::Index>(), n in 1usize..=4) {
        let g = Arc::new(g);
        let all = atoms::<u64>(&g).unwrap();
        let a = pick.get(&all);
        let l = length_set(&a.scale(n)).unwrap();
        prop_assert_eq!(l.as_slice(), &[n]);
        prop_assert_eq!(factorizations(&a.scale(n), None).unwrap().items.len(), 1);
    }

    #[test]
    fn disjoint_connected_supports_factor_uniquely(
        g in arb_graph(6, 7),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 1..=3),
    ) {
        let g = Arc::new(g);
        let subs = enumerate_connected_subgraphs(&g).unwrap();
        let mut chosen: Vec<Subgraph> = Vec::new();
        for p in picks {
            let s = p.get(&subs);
            if chosen.iter().all(|c| s.vertices.iter().all(|v| !c.contains_vertex(*v))) {
                chosen.push(s.clone());
            }
        }
        let mut a = Agg::zero(g.clone());
        for s in &chosen {
            a = a.add(&Agg::indicator(g.clone(), s).unwrap()).unwrap();
        }
        let fs = factorizations(&a, None).unwrap();
        prop_assert_eq!(fs.items.len(), 1);
        let mut expected = chosen.clone();
        expected.sort();
        prop_assert_eq!(&fs.items[0].atoms, &expected);
    }

    #[test]
    fn acyclic_supports_have_one_length((g, els) in with_elements(arb_graph(5, 5), 3, 1)) {
        let a = &els[0];
        prop_assume!(is_acyclic(&g.extract(&a.support())));
        let n = g.order();
        let vs: u64 = a.weights()[..n].iter().sum();
        let es: u64 = a.weights()[n..].iter().sum();
        let l = length_set(a).unwrap();
        prop_assert_eq!(l.as_slice(), &[(vs - es) as usize]);
    }

    #[test]
    fn semi_length_is_a_positive_additive_function(
        (g, els) in with_elements(arb_graph(5, 7), 3, 2),
        q in 1i64..=5,
    ) {
        let r = Rational::new(g.max_degree() as i64, 2) + Rational::new(1, q);
        let (a, b) = (&els[0], &els[1]);
        let (sa, sb) = (semi_length(a, r), semi_length(b, r));
        prop_assert_eq!(semi_length(&a.add(b).unwrap(), r), sa + sb);
        prop_assert!(sa >= Rational::from_integer(0));
        prop_assert_eq!(sa == Rational::from_integer(0), a.is_zero());
    }

    #[test]
    fn long_factorizations_respect_the_rho_k_bound(
        g in arb_connected(4, 5),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 2..=4),
    ) {
        let g = Arc::new(g);
        let m = AggMonoid::<u64>::new(g.clone()).unwrap();
        let mut a = Agg::zero(g.clone());
        for p in &picks {
            a = a.add(&m.atom_element(p.index(m.subgraphs().len()))).unwrap();
        }
        let l = m.length_set(&a, &mut LengthMemo::default()).unwrap();
        let k = l.min().unwrap();
        prop_assert!(k <= picks.len());
        prop_assert!(l.max().unwrap() <= (k - 1) * g.order() + 1);
    }

    #[test]
    fn factorial_exactly_when_the_class_group_is_trivial(g in arb_graph(6, 8)) {
        prop_assert_eq!(is_factorial(&g), class_group_rank(&g) == 0);
    }
}

#[test]
fn half_factoriality_matches_bounded_length_sets() {
    for g in graphs_up_to_iso(4, 5, false) {
        let g = Arc::new(g);
        let m = AggMonoid::<u64>::new(g.clone()).unwrap();
        let mut memo = LengthMemo::default();
        let mut singletons = true;
        for w in bounded_box(&g, 2) {
            let a = Agg::new(g.clone(), w).unwrap();
            singletons &= m.length_set(&a, &mut memo).unwrap().len() <= 1;
        }
        let hf = is_half_factorial::<u64>(&g).unwrap();
        if singletons {
            assert!(hf.half_factorial, "{g:?}");
        } else {
            let w = hf.witness.expect("cyclic graphs come with a witness");
            assert!(!hf.half_factorial);
            assert_ne!(w.short.len(), w.long.len());
            assert!(length_set(&w.element).unwrap().len() >= 2);
        }
    }
}
