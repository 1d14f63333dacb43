use std::collections::BTreeSet;

use oriented_pursuit::generators::*;
use oriented_pursuit::graph::{GraphFile, UndirectedGraph};
use oriented_pursuit::Error;
use proptest::prelude::*;

/// Union-find connectivity over an edge bitmask, independent of the graph
/// types.
fn mask_connected(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
        }
    }
    let root = find(&mut parent, 0);
    (0..n).all(|x| find(&mut parent, x) == root)
}

fn reference_edge_sets(n: usize) -> Vec<BTreeSet<(usize, usize)>> {
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0..1u64 << pairs.len())
        .filter(|&m| mask_connected(n, &pairs, m))
        .map(|m| {
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect()
        })
        .collect()
}

#[test]
fn small_enumeration_counts() {
    assert_eq!(connected_graphs(2).unwrap().len(), 1);
    assert_eq!(connected_oriented_graphs(2).unwrap().len(), 2);
    assert_eq!(connected_graphs(3).unwrap().len(), 4);
    assert_eq!(connected_oriented_graphs(3).unwrap().len(), 20);
    assert_eq!(connected_graphs(4).unwrap().len(), 38);
    assert_eq!(connected_graphs(5).unwrap().len(), 728);
    assert_eq!(connected_graphs(1).unwrap().len(), 1);
}

#[test]
fn enumeration_matches_edge_subset_filtering() {
    for n in 2..=5 {
        let got: Vec<BTreeSet<_>> = connected_graphs(n)
            .unwrap()
            .iter()
            .map(|g| g.edges().collect())
            .collect();
        assert_eq!(got, reference_edge_sets(n), "n = {n}");
    }
}

#[test]
fn oriented_enumeration_covers_every_orientation_once() {
    for n in 2..=4 {
        let expected: usize = reference_edge_sets(n).iter().map(|e| 1 << e.len()).sum();
        let all = connected_oriented_graphs(n).unwrap();
        assert_eq!(all.len(), expected);
        let distinct: BTreeSet<Vec<(usize, usize)>> =
            all.iter().map(|g| g.arcs().collect()).collect();
        assert_eq!(distinct.len(), expected);
        assert!(all.iter().all(|g| g.underlying().is_connected()));
    }
}

#[test]
fn enumeration_is_capped() {
    assert!(matches!(
        enumerate_connected(MAX_ENUMERATE_UNDIRECTED + 1, false),
        Err(Error::ResourceLimit(_))
    ));
    assert!(matches!(
        enumerate_connected(MAX_ENUMERATE_ORIENTED + 1, true),
        Err(Error::ResourceLimit(_))
    ));
}

#[test]
fn deterministic_families() {
    let g = |family, n| generate(&GeneratorSpec::new(family, n, 0)).unwrap();
    assert_eq!(
        g(Family::Path, 4),
        GraphFile::Undirected(UndirectedGraph::path(4))
    );
    assert_eq!(
        g(Family::Cycle, 5),
        GraphFile::Undirected(UndirectedGraph::cycle(5))
    );
    assert_eq!(
        g(Family::Complete, 4),
        GraphFile::Undirected(UndirectedGraph::complete(4))
    );
    let GraphFile::Undirected(star) = g(Family::Star, 5) else {
        panic!()
    };
    assert_eq!((star.vertex_count(), star.edge_count()), (5, 4));
    let GraphFile::Oriented(t) = g(Family::Tournament, 3) else {
        panic!()
    };
    assert_eq!(t.arc_count(), 3);
}

#[test]
fn invalid_specs() {
    let bad = [
        GeneratorSpec::new(Family::Cycle, 2, 0),
        GeneratorSpec::new(Family::Path, 1, 0),
        GeneratorSpec::new(Family::RandomGraph { p: 1.5 }, 5, 0),
        GeneratorSpec::new(
            Family::RandomOrientation {
                of: Box::new(GeneratorSpec::new(Family::Path, 4, 0)),
            },
            5,
            0,
        ),
        GeneratorSpec::new(
            Family::RandomOrientation {
                of: Box::new(GeneratorSpec::new(Family::Tournament, 4, 0)),
            },
            4,
            0,
        ),
    ];
    for spec in bad {
        assert!(
            matches!(generate(&spec), Err(Error::InvalidParameter(_))),
            "{spec:?}"
        );
    }
}

#[test]
fn spec_json_form() {
    let spec: GeneratorSpec = serde_json::from_str(
        r#"{"family":"random_orientation","of":{"family":"cycle","n":5},"n":5,"seed":9}"#,
    )
    .unwrap();
    assert_eq!(spec.seed, 9);
    let GraphFile::Oriented(o) = generate(&spec).unwrap() else {
        panic!()
    };
    assert_eq!(o.underlying(), UndirectedGraph::cycle(5));
    let text = serde_json::to_string(&spec).unwrap();
    assert_eq!(serde_json::from_str::<GeneratorSpec>(&text).unwrap(), spec);
}

fn random_family() -> impl Strategy<Value = Family> {
    prop_oneof![
        Just(Family::RandomTree),
        (0.0f64..=1.0).prop_map(|p| Family::RandomGraph { p }),
        (0.0f64..=1.0).prop_map(|p| Family::RandomBipartite { p }),
        Just(Family::Tournament),
    ]
}

proptest! {
    #[test]
    fn same_seed_same_graph(family in random_family(), n in 2usize..15, seed in any::<u64>()) {
        let spec = GeneratorSpec::new(family, n, seed);
        let a = generate(&spec).unwrap();
        prop_assert_eq!(a.to_canonical_string(), generate(&spec.clone()).unwrap().to_canonical_string());
    }

    #[test]
    fn random_trees_are_trees(n in 2usize..30, seed in any::<u64>()) {
        let GraphFile::Undirected(t) = generate(&GeneratorSpec::new(Family::RandomTree, n, seed)).unwrap() else {
            unreachable!()
        };
        prop_assert!(t.is_tree());
    }

    #[test]
    fn random_bipartite_is_triangle_free(n in 2usize..20, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let GraphFile::Undirected(g) = generate(&GeneratorSpec::new(Family::RandomBipartite { p }, n, seed)).unwrap() else {
            unreachable!()
        };
        prop_assert!(g.is_bipartite());
        prop_assert!(g.is_triangle_free());
    }

    #[test]
    fn tournaments_are_complete(n in 2usize..12, seed in any::<u64>()) {
        let GraphFile::Oriented(t) = generate(&GeneratorSpec::new(Family::Tournament, n, seed)).unwrap() else {
            unreachable!()
        };
        prop_assert_eq!(t.arc_count(), n * (n - 1) / 2);
        prop_assert_eq!(t.underlying(), UndirectedGraph::complete(n));
    }

    #[test]
    fn orientations_keep_the_base(n in 2usize..12, p in 0.0f64..=1.0, seed in any::<u64>(), inner in any::<u64>()) {
        let base = GeneratorSpec::new(Family::RandomGraph { p }, n, inner);
        let GraphFile::Undirected(u) = generate(&base).unwrap() else { unreachable!() };
        let spec = GeneratorSpec::new(Family::RandomOrientation { of: Box::new(base) }, n, seed);
        let GraphFile::Oriented(o) = generate(&spec).unwrap() else { unreachable!() };
        prop_assert_eq!(o.underlying(), u);
    }
}
