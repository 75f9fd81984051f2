use alloc::vec::Vec;

use crate::graph::Graph;
use crate::partition::{check_room_count, Assignment};
use crate::{Error, Result};

/// Largest instance [`exact`] accepts.
pub const DEFAULT_EXACT_BOUND: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactOutcome {
    pub assignment: Assignment,
    pub optimum: usize,
}

/// Exhaustive minimum of the intra-room link count under both hard
/// constraints, for graphs of at most [`DEFAULT_EXACT_BOUND`] nodes.
pub fn exact(g: &Graph, rooms: usize) -> Result<ExactOutcome> {
    exact_with_bound(g, rooms, DEFAULT_EXACT_BOUND)
}

/// [`exact`] with a caller-chosen node bound.
///
/// Nodes are placed in index order. A node may join any room already opened
/// or open the next one, so the lowest node of each room increases with the
/// room index and every partition is visited under exactly one labelling.
/// Branches whose partial objective already reaches the incumbent are cut.
pub fn exact_with_bound(g: &Graph, rooms: usize, bound: usize) -> Result<ExactOutcome> {
    let n = g.node_count();
    if n > bound {
        return Err(Error::InstanceTooLarge { nodes: n, bound });
    }
    let capacity = check_room_count(g, rooms)?;

    let mut search = Search {
        g,
        rooms,
        capacity,
        room_of: alloc::vec![0; n],
        sizes: alloc::vec![0; rooms],
        best: usize::MAX,
        best_rooms: Vec::new(),
    };
    search.descend(0, 0, 0);

    let mut assignment = Assignment::new(rooms, capacity);
    for (v, &r) in search.best_rooms.iter().enumerate() {
        assignment.assign(g.name(v), r);
    }
    Ok(ExactOutcome {
        assignment,
        optimum: search.best,
    })
}

struct Search<'g> {
    g: &'g Graph,
    rooms: usize,
    capacity: usize,
    room_of: Vec<usize>,
    sizes: Vec<usize>,
    best: usize,
    best_rooms: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, v: usize, opened: usize, cost: usize) {
        if v == self.g.node_count() {
            if cost < self.best {
                self.best = cost;
                self.best_rooms.clone_from(&self.room_of);
            }
            return;
        }
        for k in 0..(opened + 1).min(self.rooms) {
            if self.sizes[k] >= self.capacity {
                continue;
            }
            let added = self
                .g
                .neighbors(v)
                .iter()
                .take_while(|&&w| w < v)
                .filter(|&&w| self.room_of[w] == k)
                .count();
            if cost + added >= self.best {
                continue;
            }
            self.room_of[v] = k;
            self.sizes[k] += 1;
            self.descend(v + 1, opened.max(k + 1), cost + added);
            self.sizes[k] -= 1;
        }
    }
}
