use proptest::prelude::*;

use mhrg_core::analysis::{member_by_index_sets, member_by_part_sums};
use mhrg_core::engine::{mhr_move, moves, reachable_graph, MoveKind};
use mhrg_core::{Board, GameGraph, HookMultiset, MoveRecord, Partition};

/// A board with `m + n <= 12` and a diagram on it.
fn board_and_partition() -> impl Strategy<Value = (Board, Partition)> {
    (1usize..=6)
        .prop_flat_map(|m| (Just(m), m..=(12 - m)))
        .prop_flat_map(|(m, n)| (Just(m), Just(n), proptest::collection::vec(0..=n, m)))
        .prop_map(|(m, n, mut parts)| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let b = Board::new(m, n).unwrap();
            let p = b.partition(&parts).unwrap();
            (b, p)
        })
}

proptest! {
    #[test]
    fn dual_is_an_involution((b, p) in board_and_partition()) {
        let d = b.dual(&p);
        prop_assert_eq!(b.dual(&d), p.clone());
        prop_assert_eq!(d.size() + p.size(), b.m() * b.n());
        prop_assert_eq!(b.index_set(&d), b.index_set(&p).bar(&b));
    }

    #[test]
    fn membership_criteria_agree((b, p) in board_and_partition()) {
        let by_sets = member_by_index_sets(&b, &p);
        prop_assert_eq!(by_sets, member_by_part_sums(&b, &p));
        prop_assert_eq!(by_sets, member_by_index_sets(&b, &b.dual(&p)));
    }

    #[test]
    fn moves_remove_whole_hooks((b, p) in board_and_partition()) {
        for mv in moves(&b, &p).unwrap() {
            prop_assert!(mv.is_consistent(&b));
            let hook = b.hook_multiset(&p, mv.cell).unwrap();
            let removed = p.size() - mv.to.size();
            let expected = match mv.op {
                MoveKind::Single => hook.len(),
                MoveKind::Double => 2 * hook.len(),
            };
            prop_assert_eq!(removed, expected);
            prop_assert!(b.check(&mv.to).is_ok());
        }
    }

    #[test]
    fn labels_of_removed_boxes_are_the_removed_multiset((b, p) in board_and_partition()) {
        for cell in p.cells() {
            let mv = mhr_move(&b, &p, cell).unwrap();
            let gone: Vec<_> = p.cells().filter(|c| !mv.to.contains(*c)).collect();
            let hook = b.hook_multiset(&p, cell).unwrap();
            let want = match mv.op {
                MoveKind::Single => hook,
                MoveKind::Double => hook.union(&hook),
            };
            prop_assert_eq!(b.numbering_multiset(&gone).unwrap(), want);
        }
    }

    #[test]
    fn diagonal_and_index_set_round_trip((b, p) in board_and_partition()) {
        let d = b.diagonal_expression(&p);
        prop_assert_eq!(d.total(), p.size());
        prop_assert_eq!(b.partition_of_diagonal(&d).unwrap(), p.clone());
        prop_assert_eq!(b.partition_of_index_set(&b.index_set(&p)).unwrap(), p);
    }

    #[test]
    fn text_and_json_round_trip((_b, p) in board_and_partition()) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
    }
}

#[test]
fn graph_rebuilds_from_serialized_records() {
    for (m, n) in [(1, 1), (2, 3), (3, 4), (4, 5)] {
        let b = Board::new(m, n).unwrap();
        let g = reachable_graph(&b).unwrap();
        let records: Vec<&MoveRecord> = g.records().collect();
        let json = serde_json::to_string(&records).unwrap();
        let back: Vec<MoveRecord> = serde_json::from_str(&json).unwrap();
        let rebuilt = GameGraph::from_records(b, b.full(), g.nodes().cloned(), back).unwrap();
        assert_eq!(rebuilt, g);
    }
}

#[test]
fn hook_multisets_serialize_as_sorted_lists() {
    let h = HookMultiset::from_labels(vec![4, 2, 3]);
    assert_eq!(serde_json::to_string(&h).unwrap(), "[2,3,4]");
}
