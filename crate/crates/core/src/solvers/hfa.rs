use alloc::string::ToString;
use alloc::vec::Vec;

use super::{seeded_rng, RandomArgMin, SolverConfig, SolverOutcome};
use crate::graph::Graph;
use crate::partition::{check_room_count, Assignment, MoveRecord};
use crate::Result;

const UNPLACED: usize = usize::MAX;

/// Hub-first assignment.
///
/// Nodes are taken in descending degree order (equal degrees in identifier
/// order) and each is placed in the non-full room holding the fewest of its
/// already-placed neighbors. Equal counts are broken uniformly at random.
/// Full rooms are never candidates, which stands in for giving them an
/// increment larger than any real one.
///
/// Each placement costs `O(deg(v) + K)`, so the whole run is
/// `O(|E| + |V|·K + |V| log |V|)`.
pub fn hfa(g: &Graph, cfg: &SolverConfig) -> Result<SolverOutcome> {
    let rooms = cfg.rooms;
    let capacity = check_room_count(g, rooms)?;
    let n = g.node_count();
    let mut rng = seeded_rng(cfg.seed);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));

    let mut room_of = alloc::vec![UNPLACED; n];
    let mut sizes = alloc::vec![0usize; rooms];
    let mut counts = alloc::vec![0usize; rooms];
    let mut moves = Vec::with_capacity(n);
    let mut best = RandomArgMin::new();

    for v in order {
        for &w in g.neighbors(v) {
            if room_of[w] != UNPLACED {
                counts[room_of[w]] += 1;
            }
        }
        best.clear();
        for k in 0..rooms {
            if sizes[k] < capacity {
                best.offer(counts[k] as i64, k);
            }
        }
        // K * S >= |V| keeps at least one room open.
        let (delta, room) = best.pick(&mut rng).expect("a room with free capacity");
        for &w in g.neighbors(v) {
            if room_of[w] != UNPLACED {
                counts[room_of[w]] = 0;
            }
        }
        room_of[v] = room;
        sizes[room] += 1;
        moves.push(MoveRecord {
            node: g.name(v).to_string(),
            from_room: None,
            to_room: room,
            delta,
        });
    }

    let mut assignment = Assignment::new(rooms, capacity);
    for (v, &r) in room_of.iter().enumerate() {
        assignment.assign(g.name(v), r);
    }
    Ok(SolverOutcome { assignment, moves })
}
