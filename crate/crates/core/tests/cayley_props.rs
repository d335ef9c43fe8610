use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;
use schur_core::cayley::{
    automorphism_order, automorphism_order_coloured, cayley_graph, CayleyGraph,
    ColouredCayleyGraph, OracleConfig,
};
use schur_core::{closure, Group, GroupElement};

fn inverse_closed_subset(group: Group) -> impl Strategy<Value = Vec<GroupElement>> {
    proptest::collection::vec(any::<bool>(), group.order()).prop_filter_map("empty", move |mask| {
        let mut s: Vec<_> = group
            .elements()
            .filter(|g| !g.is_identity() && mask[g.index()])
            .flat_map(|g| [g, g.inv()])
            .collect();
        s.sort();
        s.dedup();
        (!s.is_empty()).then_some(s)
    })
}

/// Counts automorphisms by trying every permutation (Heap's algorithm).
fn brute_force_order(graph: &CayleyGraph) -> u64 {
    let n = graph.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    let mut count = u64::from(graph.is_automorphism(&perm));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            count += u64::from(graph.is_automorphism(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    count
}

#[test]
fn oracle_matches_brute_force_on_tiny_groups() {
    for group in [
        Group::dihedral(3).unwrap(),
        Group::cyclic(6).unwrap(),
        Group::cyclic(7).unwrap(),
    ] {
        let others: Vec<_> = group.elements().filter(|g| !g.is_identity()).collect();
        for mask in 0u32..1 << others.len() {
            let s: Vec<_> = (0..others.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| others[i])
                .collect();
            let g = cayley_graph(group, &s, true).unwrap();
            let fast = automorphism_order(&g, &OracleConfig::default()).unwrap();
            assert_eq!(
                fast.order,
                BigUint::from(brute_force_order(&g)),
                "{group} {s:?}"
            );
        }
    }
}

#[test]
fn left_translations_are_automorphisms_up_to_order_28() {
    let mut groups: Vec<Group> = (3..=14).map(|n| Group::dihedral(n).unwrap()).collect();
    groups.extend((1..=28).map(|n| Group::cyclic(n).unwrap()));
    for group in groups {
        let s: Vec<_> = group.elements().filter(|g| g.index() % 3 == 1).collect();
        let g = cayley_graph(group, &s, true).unwrap();
        assert!(g.left_regular_embeds(), "{group}");
        for h in group.elements() {
            let perm = g.left_translation(h);
            assert!(g.is_automorphism(&perm));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn aut_of_cayley_graph_equals_aut_of_its_closure(s in inverse_closed_subset(Group::dihedral(7).unwrap())) {
        let d7 = Group::dihedral(7).unwrap();
        let cfg = OracleConfig::default();
        let graph = cayley_graph(d7, &s, true).unwrap();
        let plain = automorphism_order(&graph, &cfg).unwrap();
        let coloured = ColouredCayleyGraph::from_partition(&closure(d7, &s).unwrap());
        let refined = automorphism_order_coloured(&coloured, &cfg).unwrap();
        prop_assert_eq!(plain.order, refined.order);
    }

    #[test]
    fn vertex_transitive_orders_divide(
        (group, s) in prop_oneof![(3u32..=12).prop_map(|n| Group::dihedral(n).unwrap()),
                                  (2u32..=24).prop_map(|n| Group::cyclic(n).unwrap())]
            .prop_flat_map(|g| (Just(g), inverse_closed_subset(g)))
    ) {
        let graph = cayley_graph(group, &s, true).unwrap();
        // degree law
        for v in 0..graph.vertex_count() {
            prop_assert_eq!(graph.out_neighbours(v).len(), s.len());
        }
        prop_assert!(graph.is_undirected());
        let aut = automorphism_order(&graph, &OracleConfig::default()).unwrap();
        prop_assert!((&aut.order % BigUint::from(group.order())).is_zero());
        for p in &aut.generators {
            prop_assert!(graph.is_automorphism(p));
        }
    }
}
