use std::collections::BTreeSet;

use super::grundy::GrundyTable;
use crate::diagram::Partition;
use crate::engine::{GameGraph, MoveRecord};
use crate::error::{MhrgError, Result};

fn node_moves<'g>(graph: &'g GameGraph, p: &Partition) -> Result<&'g [MoveRecord]> {
    let moves = graph
        .moves_from(p)
        .ok_or_else(|| MhrgError::UnknownPosition(p.to_string()))?;
    if p.is_empty() {
        return Err(MhrgError::EndingPosition);
    }
    Ok(moves)
}

/// Options of `p` with Grundy value 0. Empty exactly when `p` is a P-position.
pub fn best_moves(graph: &GameGraph, table: &GrundyTable, p: &Partition) -> Result<BTreeSet<Partition>> {
    Ok(node_moves(graph, p)?
        .iter()
        .filter(|mv| table.get(&mv.to) == Some(0))
        .map(|mv| mv.to.clone())
        .collect())
}

/// The engine's move from `p`: the lexicographically smallest Grundy-0
/// option, or the smallest option overall when none exists. The record is
/// the first one (in box order) reaching that option.
pub fn engine_reply(graph: &GameGraph, table: &GrundyTable, p: &Partition) -> Result<MoveRecord> {
    let moves = node_moves(graph, p)?;
    let target = best_moves(graph, table, p)?
        .into_iter()
        .next()
        .or_else(|| moves.iter().map(|mv| mv.to.clone()).min())
        .ok_or(MhrgError::EndingPosition)?;
    Ok(moves
        .iter()
        .find(|mv| mv.to == target)
        .expect("target is an option")
        .clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::grundy::grundy_table;
    use crate::diagram::Board;
    use crate::engine::reachable_graph;

    fn fixture(m: usize, n: usize) -> (Board, GameGraph, GrundyTable) {
        let b = Board::new(m, n).unwrap();
        let g = reachable_graph(&b).unwrap();
        let t = grundy_table(&g);
        (b, g, t)
    }

    #[test]
    fn best_move_examples() {
        let (b, g, t) = fixture(2, 3);
        let only_empty = BTreeSet::from([b.empty()]);
        assert_eq!(best_moves(&g, &t, &b.full()).unwrap(), only_empty);
        assert_eq!(best_moves(&g, &t, &b.partition(&[2]).unwrap()).unwrap(), only_empty);

        let (b, g, t) = fixture(2, 2);
        assert_eq!(
            best_moves(&g, &t, &b.partition(&[2, 1]).unwrap()).unwrap(),
            BTreeSet::from([b.empty()])
        );
    }

    #[test]
    fn errors() {
        let (b, g, t) = fixture(2, 3);
        assert_eq!(best_moves(&g, &t, &b.empty()), Err(MhrgError::EndingPosition));
        assert!(matches!(
            best_moves(&g, &t, &b.partition(&[2, 1]).unwrap()),
            Err(MhrgError::UnknownPosition(_))
        ));
    }

    #[test]
    fn p_positions_have_no_winning_move() {
        let (_, g, t) = fixture(3, 6);
        for p in g.nodes().filter(|p| !p.is_empty()) {
            let best = best_moves(&g, &t, p).unwrap();
            assert_eq!(best.is_empty(), t.get(p) == Some(0), "{p}");
            let reply = engine_reply(&g, &t, p).unwrap();
            if let Some(first) = best.iter().next() {
                assert_eq!(&reply.to, first);
            }
        }
    }

    #[test]
    fn reply_on_p_position_picks_smallest_option() {
        let (b, g, t) = fixture(2, 6);
        let p = b.partition(&[2, 2]).unwrap();
        assert_eq!(t.get(&p), Some(0));
        let reply = engine_reply(&g, &t, &p).unwrap();
        let smallest = g.options_of(&p).unwrap().into_iter().next().unwrap().clone();
        assert_eq!(reply.to, smallest);
    }
}
