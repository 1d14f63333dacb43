mod common;

use std::path::Path;

use common::*;
use oriented_pursuit::generators::connected_graphs;
use oriented_pursuit::graph::{OrientedGraph, UndirectedGraph};
use oriented_pursuit::retracts::*;
use oriented_pursuit::verify::corpus::{Corpus, Instance};
use oriented_pursuit::{Error, MoveModel};
use proptest::prelude::*;

fn fixture() -> Vec<Instance<OrientedGraph>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/retract_corpus");
    let corpus = Corpus::load_dir(&dir).expect("fixture hashes match");
    assert!(corpus.undirected.is_empty());
    corpus.oriented
}

fn c3() -> OrientedGraph {
    directed_cycle(3)
}

#[test]
fn transitive_triangle_witnesses() {
    let tt = transitive_triangle();
    let u = tt.vertex_by_name("u").unwrap();
    let v = tt.vertex_by_name("v").unwrap();
    let w = tt.vertex_by_name("w").unwrap();
    // u→v, u→w, v→w
    let weak = find_weak_retract(&tt).unwrap();
    assert_eq!((weak.removed, weak.covers.clone()), (v, vec![u]));
    let all_weak: Vec<_> = weak_retracts(&tt)
        .iter()
        .map(|x| (x.removed, x.covers[0]))
        .collect();
    assert!(all_weak.contains(&(w, v)) || all_weak.contains(&(w, u)));
    let dist = find_distributed_retract(&tt).unwrap();
    assert_eq!(dist.removed, v);
    assert_eq!(dist.covers, vec![u]);
    assert!(find_strong_retract(&tt).is_some());
}

#[test]
fn directed_triangle() {
    let g = c3();
    // direction-blind closed neighborhoods are all of V
    let s = find_strong_retract(&g).unwrap();
    assert_eq!((s.removed, s.covers.clone()), (0, vec![1]));
    assert!(find_weak_retract(&g).is_none());
    assert!(find_distributed_retract(&g).is_none());
    assert!(not_copwin_condition(&g));
}

#[test]
fn witness_json_uses_names() {
    let tt = transitive_triangle();
    let w = find_weak_retract(&tt).unwrap();
    let j = w.to_json(tt.names());
    assert_eq!(
        serde_json::to_value(&j).unwrap(),
        serde_json::json!({"kind": "weak", "removed": "v", "covers": ["u"]})
    );
}

#[test]
fn invalid_witnesses_are_rejected() {
    let g = c3();
    let bogus = RetractWitness {
        kind: RetractKind::Weak,
        removed: 0,
        covers: vec![1],
    };
    assert!(matches!(
        apply_retract(&g, &bogus),
        Err(Error::WitnessInvalid(_))
    ));
    let out_of_range = RetractWitness {
        kind: RetractKind::Strong,
        removed: 9,
        covers: vec![0],
    };
    assert!(validate_witness(&g, &out_of_range).is_err());
    let empty = RetractWitness {
        kind: RetractKind::Distributed,
        removed: 1,
        covers: vec![],
    };
    assert!(validate_witness(&transitive_triangle(), &empty).is_err());
}

#[test]
fn kind_names_round_trip() {
    for kind in [
        RetractKind::Strong,
        RetractKind::Distributed,
        RetractKind::Weak,
        RetractKind::UndirectedCorner,
    ] {
        assert_eq!(kind.as_str().parse::<RetractKind>().unwrap(), kind);
    }
    assert_eq!(
        "undirected_corner".parse::<RetractKind>().unwrap(),
        RetractKind::UndirectedCorner
    );
    assert!("bogus".parse::<RetractKind>().is_err());
}

#[test]
fn corner_reductions() {
    let tree = UndirectedGraph::star(4);
    assert_eq!(reduce_corners(&tree).residue.vertex_count(), 1);
    let c4 = UndirectedGraph::cycle(4);
    let r = reduce_corners(&c4);
    assert!(r.steps.is_empty());
    assert_eq!(r.residue, c4);
    assert!(is_dismantlable(&paw()));
    assert!(!is_dismantlable(&UndirectedGraph::cycle(5)));
    assert!(reduce(&c3(), RetractKind::UndirectedCorner).is_err());
}

#[test]
fn dismantlable_graphs_reduce_to_a_vertex() {
    for n in 2..=6 {
        for g in connected_graphs(n).unwrap() {
            let copwin = naive_classical_cop_number(&g) == 1;
            let r = reduce_corners(&g);
            assert_eq!(r.residue.vertex_count() == 1, copwin, "{:?}", g);
            assert_eq!(r.steps.len(), r.removed_names.len());
        }
    }
}

#[test]
fn oriented_reduction_records_names() {
    let tt = transitive_triangle();
    let r = reduce(&tt, RetractKind::Weak).unwrap();
    assert_eq!(r.residue.vertex_count(), 1);
    assert_eq!(r.residue.names(), ["u"]);
    assert_eq!(r.removed_names[0].removed, "v");
    let r = reduce(&c3(), RetractKind::Weak).unwrap();
    assert!(r.steps.is_empty());
}

#[test]
fn fixture_is_pinned() {
    let inst = fixture();
    assert_eq!(inst.len(), 50);
    for i in &inst {
        assert!(i.graph.vertex_count() <= 7);
        assert!(i.graph.underlying().is_connected());
        assert!(find_strong_retract(&i.graph).is_some(), "{}", i.name);
        assert!(find_distributed_retract(&i.graph).is_some(), "{}", i.name);
    }
}

#[test]
fn strong_retracts_keep_the_strong_cop_number() {
    for i in fixture() {
        let g = &i.graph;
        let before = naive_cop_number(g, MoveModel::StrongCop);
        for w in strong_retracts(g) {
            let (h, _) = apply_retract(g, &w).unwrap();
            assert_eq!(
                naive_cop_number(&h, MoveModel::StrongCop),
                before,
                "{} {:?}",
                i.name,
                w
            );
        }
    }
}

#[test]
fn distributed_retracts_keep_the_normal_cop_number() {
    for i in fixture() {
        let g = &i.graph;
        let before = naive_cop_number(g, MoveModel::NormalCop);
        for w in distributed_retracts(g) {
            let (h, _) = apply_retract(g, &w).unwrap();
            assert_eq!(
                naive_cop_number(&h, MoveModel::NormalCop),
                before,
                "{} {:?}",
                i.name,
                w
            );
        }
    }
}

#[test]
fn weak_retracts_keep_one_weak_cop_winning_status() {
    for i in fixture() {
        let g = &i.graph;
        let before = NaiveGame::new(g, MoveModel::WeakCop, 1).cops_win();
        for w in weak_retracts(g) {
            let (h, _) = apply_retract(g, &w).unwrap();
            let after = NaiveGame::new(&h, MoveModel::WeakCop, 1).cops_win();
            assert_eq!(after, before, "{} {:?}", i.name, w);
        }
    }
}

fn arb_oriented(max_n: usize) -> impl Strategy<Value = OrientedGraph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0u8..3, n * (n - 1) / 2).prop_map(move |choice| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let arcs = pairs.zip(choice).filter_map(|((u, v), c)| match c {
                1 => Some((u, v)),
                2 => Some((v, u)),
                _ => None,
            });
            OrientedGraph::from_arcs(n, arcs).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn listed_witnesses_revalidate(g in arb_oriented(7)) {
        let all = strong_retracts(&g)
            .into_iter()
            .chain(distributed_retracts(&g))
            .chain(weak_retracts(&g));
        for w in all {
            prop_assert!(validate_witness(&g, &w).is_ok());
            let (h, map) = apply_retract(&g, &w).unwrap();
            prop_assert_eq!(h.vertex_count() + 1, g.vertex_count());
            prop_assert!(map[w.removed].is_none());
        }
    }

    #[test]
    fn finders_return_the_first_listed(g in arb_oriented(7)) {
        prop_assert_eq!(find_strong_retract(&g), strong_retracts(&g).into_iter().next());
        prop_assert_eq!(find_weak_retract(&g), weak_retracts(&g).into_iter().next());
        prop_assert_eq!(find_distributed_retract(&g), distributed_retracts(&g).into_iter().next());
    }

    #[test]
    fn not_copwin_condition_rules_out_one_cop(g in arb_oriented(6)) {
        if not_copwin_condition(&g) {
            prop_assert!(!NaiveGame::new(&g, MoveModel::NormalCop, 1).cops_win());
        }
    }
}
