//! Room assignments, the intra-room link objective and move evaluation.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::{Error, Result};

/// Uniform room capacity `⌈node_count / rooms⌉`.
pub fn capacity_for(node_count: usize, rooms: usize) -> Result<usize> {
    if rooms == 0 {
        return Err(Error::ZeroRooms);
    }
    Ok(node_count.div_ceil(rooms))
}

/// Checks a room count against a graph: `1 <= rooms <= |V|`.
///
/// `rooms == |V|` is accepted (every room holds one node).
pub(crate) fn check_room_count(g: &Graph, rooms: usize) -> Result<usize> {
    if rooms == 0 {
        return Err(Error::ZeroRooms);
    }
    if rooms > g.node_count() {
        return Err(Error::TooManyRooms {
            rooms,
            nodes: g.node_count(),
        });
    }
    capacity_for(g.node_count(), rooms)
}

/// A map from node identifier to room, with the room count and the uniform
/// capacity it was built for.
///
/// The map may be partial or reference nodes outside a graph; [`validate`]
/// reports such problems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    rooms: BTreeMap<String, usize>,
    room_count: usize,
    capacity: usize,
}

impl Assignment {
    pub fn new(room_count: usize, capacity: usize) -> Self {
        Assignment {
            rooms: BTreeMap::new(),
            room_count,
            capacity,
        }
    }

    /// Places `node` in `room`, replacing any previous room.
    pub fn assign(&mut self, node: impl Into<String>, room: usize) {
        self.rooms.insert(node.into(), room);
    }

    pub fn room_of(&self, node: &str) -> Option<usize> {
        self.rooms.get(node).copied()
    }

    pub fn room_count(&self) -> usize {
        self.room_count
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.rooms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rooms.is_empty()
    }

    /// `(node, room)` pairs in node order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> + '_ {
        self.rooms.iter().map(|(n, &r)| (n.as_str(), r))
    }

    /// Occupancy of each room; entries with out-of-range rooms are skipped.
    pub fn room_sizes(&self) -> Vec<usize> {
        let mut sizes = alloc::vec![0; self.room_count];
        for &r in self.rooms.values() {
            if r < self.room_count {
                sizes[r] += 1;
            }
        }
        sizes
    }
}

/// A breach of one of the two hard constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A graph node without a room.
    Uncovered { node: String },
    /// An assigned identifier that is not a node of the graph.
    UnknownNode { node: String },
    /// A room index outside `0..K`.
    RoomOutOfRange { node: String, room: usize },
    OverCapacity {
        room: usize,
        size: usize,
        capacity: usize,
    },
}

/// Renders rooms 1-based.
impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Uncovered { node } => write!(f, "node `{node}` is not assigned to any room"),
            Violation::UnknownNode { node } => {
                write!(f, "assigned node `{node}` is not in the graph")
            }
            Violation::RoomOutOfRange { node, room } => {
                write!(f, "node `{node}` assigned to nonexistent room {}", room + 1)
            }
            Violation::OverCapacity {
                room,
                size,
                capacity,
            } => write!(
                f,
                "room {} holds {size} nodes, over its capacity of {capacity}",
                room + 1
            ),
        }
    }
}

/// Lists every coverage and capacity violation; empty means the assignment is
/// feasible for `g`.
pub fn validate(g: &Graph, a: &Assignment) -> Vec<Violation> {
    let mut out = Vec::new();
    for node in g.nodes() {
        match a.room_of(node) {
            None => out.push(Violation::Uncovered { node: node.clone() }),
            Some(r) if r >= a.room_count() => out.push(Violation::RoomOutOfRange {
                node: node.clone(),
                room: r,
            }),
            Some(_) => {}
        }
    }
    let mut sizes = alloc::vec![0usize; a.room_count()];
    for (node, r) in a.iter() {
        if !g.contains(node) {
            out.push(Violation::UnknownNode {
                node: node.to_string(),
            });
        } else if r < a.room_count() {
            sizes[r] += 1;
        }
    }
    for (room, &size) in sizes.iter().enumerate() {
        if size > a.capacity() {
            out.push(Violation::OverCapacity {
                room,
                size,
                capacity: a.capacity(),
            });
        }
    }
    out
}

/// Intra- and inter-room link counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectiveReport {
    pub intra_links: usize,
    pub inter_links: usize,
    pub per_room_links: Vec<usize>,
}

/// Resolves an assignment onto graph indices, requiring exact coverage and
/// in-range rooms. Capacity is not checked.
fn dense_rooms(g: &Graph, a: &Assignment) -> Result<Vec<usize>> {
    for (node, _) in a.iter() {
        if !g.contains(node) {
            return Err(Error::UnknownNode(node.to_string()));
        }
    }
    g.nodes()
        .iter()
        .map(|node| match a.room_of(node) {
            None => Err(Error::Unassigned(node.clone())),
            Some(r) if r >= a.room_count() => Err(Error::RoomOutOfRange {
                room: r,
                rooms: a.room_count(),
            }),
            Some(r) => Ok(r),
        })
        .collect()
}

/// Counts the links inside each room.
pub fn objective(g: &Graph, a: &Assignment) -> Result<ObjectiveReport> {
    let room_of = dense_rooms(g, a)?;
    Ok(report_from_dense(g, &room_of, a.room_count()))
}

fn report_from_dense(g: &Graph, room_of: &[usize], rooms: usize) -> ObjectiveReport {
    let mut per_room_links = alloc::vec![0; rooms];
    let mut inter_links = 0;
    for (u, w) in g.edges() {
        if room_of[u] == room_of[w] {
            per_room_links[room_of[u]] += 1;
        } else {
            inter_links += 1;
        }
    }
    ObjectiveReport {
        intra_links: per_room_links.iter().sum(),
        inter_links,
        per_room_links,
    }
}

fn lookup(g: &Graph, node: &str) -> Result<usize> {
    g.index_of(node)
        .ok_or_else(|| Error::UnknownNode(node.to_string()))
}

/// Number of neighbors of `node` currently assigned to `room`.
pub fn neighbors_in_room(g: &Graph, a: &Assignment, node: &str, room: usize) -> Result<usize> {
    let v = lookup(g, node)?;
    if room >= a.room_count() {
        return Err(Error::RoomOutOfRange {
            room,
            rooms: a.room_count(),
        });
    }
    Ok(g.neighbors(v)
        .iter()
        .filter(|&&w| a.room_of(g.name(w)) == Some(room))
        .count())
}

/// Change in intra-room links caused by relocating one node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveDelta {
    /// `|Γ_target(v)| - |Γ_source(v)|`.
    pub delta: i64,
    /// False when the target room is already at capacity.
    pub feasible: bool,
}

/// Evaluates moving `node` from its current room to `room` without applying
/// the move.
pub fn delta_move(g: &Graph, a: &Assignment, node: &str, room: usize) -> Result<MoveDelta> {
    let from = a
        .room_of(node)
        .ok_or_else(|| Error::Unassigned(node.to_string()))?;
    if room == from {
        return Err(Error::NotAMove {
            node: node.to_string(),
            room,
        });
    }
    let gain = neighbors_in_room(g, a, node, room)?;
    let loss = neighbors_in_room(g, a, node, from)?;
    let size = a.iter().filter(|&(_, r)| r == room).count();
    Ok(MoveDelta {
        delta: gain as i64 - loss as i64,
        feasible: size < a.capacity(),
    })
}

/// One executed placement or relocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveRecord {
    pub node: String,
    /// `None` for an initial placement.
    pub from_room: Option<usize>,
    pub to_room: usize,
    /// Signed change in intra-room links caused by this step.
    pub delta: i64,
}

/// A complete assignment resolved onto graph indices, with the objective and
/// each node's same-room neighbor count kept current across moves.
#[derive(Clone, Debug)]
pub struct RoomState<'g> {
    graph: &'g Graph,
    room_of: Vec<usize>,
    sizes: Vec<usize>,
    capacity: usize,
    internal: Vec<usize>,
    intra: usize,
}

impl<'g> RoomState<'g> {
    /// Requires every node covered exactly once with an in-range room.
    /// Over-full rooms are tolerated here; [`validate`] reports them.
    pub fn new(graph: &'g Graph, a: &Assignment) -> Result<Self> {
        let room_of = dense_rooms(graph, a)?;
        Ok(Self::from_dense(
            graph,
            room_of,
            a.room_count(),
            a.capacity(),
        ))
    }

    pub(crate) fn from_dense(
        graph: &'g Graph,
        room_of: Vec<usize>,
        rooms: usize,
        capacity: usize,
    ) -> Self {
        let mut sizes = alloc::vec![0; rooms];
        for &r in &room_of {
            sizes[r] += 1;
        }
        let internal: Vec<usize> = (0..graph.node_count())
            .map(|v| {
                graph
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| room_of[w] == room_of[v])
                    .count()
            })
            .collect();
        let intra = internal.iter().sum::<usize>() / 2;
        RoomState {
            graph,
            room_of,
            sizes,
            capacity,
            internal,
            intra,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn room_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn room_of(&self, v: usize) -> usize {
        self.room_of[v]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn is_full(&self, room: usize) -> bool {
        self.sizes[room] >= self.capacity
    }

    /// Current objective: links inside rooms.
    pub fn intra_links(&self) -> usize {
        self.intra
    }

    /// Neighbors of `v` sharing its current room.
    pub fn internal_degree(&self, v: usize) -> usize {
        self.internal[v]
    }

    pub fn neighbors_in(&self, v: usize, room: usize) -> usize {
        self.graph
            .neighbors(v)
            .iter()
            .filter(|&&w| self.room_of[w] == room)
            .count()
    }

    /// Delta for moving index `v` to `room`; `room` must differ from its
    /// current room.
    pub fn delta(&self, v: usize, room: usize) -> MoveDelta {
        debug_assert_ne!(self.room_of[v], room);
        MoveDelta {
            delta: self.neighbors_in(v, room) as i64 - self.internal[v] as i64,
            feasible: !self.is_full(room),
        }
    }

    /// Relocates `v` to `room`, updating the objective incrementally.
    pub fn apply(&mut self, v: usize, room: usize) -> Result<MoveRecord> {
        let from = self.room_of[v];
        if room >= self.room_count() {
            return Err(Error::RoomOutOfRange {
                room,
                rooms: self.room_count(),
            });
        }
        if room == from {
            return Err(Error::NotAMove {
                node: self.graph.name(v).to_string(),
                room,
            });
        }
        if self.is_full(room) {
            return Err(Error::RoomFull(room));
        }
        let mut gained = 0;
        for &w in self.graph.neighbors(v) {
            let rw = self.room_of[w];
            if rw == from {
                self.internal[w] -= 1;
            } else if rw == room {
                self.internal[w] += 1;
                gained += 1;
            }
        }
        let lost = self.internal[v];
        self.internal[v] = gained;
        self.intra = self.intra + gained - lost;
        self.sizes[from] -= 1;
        self.sizes[room] += 1;
        self.room_of[v] = room;
        Ok(MoveRecord {
            node: self.graph.name(v).to_string(),
            from_room: Some(from),
            to_room: room,
            delta: gained as i64 - lost as i64,
        })
    }

    pub fn report(&self) -> ObjectiveReport {
        report_from_dense(self.graph, &self.room_of, self.room_count())
    }

    pub fn to_assignment(&self) -> Assignment {
        let mut a = Assignment::new(self.room_count(), self.capacity);
        for (v, &r) in self.room_of.iter().enumerate() {
            a.assign(self.graph.name(v), r);
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use alloc::vec;

    const NONE: [&str; 0] = [];

    fn assignment(rooms: usize, cap: usize, pairs: &[(&str, usize)]) -> Assignment {
        let mut a = Assignment::new(rooms, cap);
        for &(n, r) in pairs {
            a.assign(n, r);
        }
        a
    }

    fn path(ids: &[&str]) -> Graph {
        build_graph(ids.windows(2).map(|w| (w[0], w[1])), NONE).unwrap()
    }

    #[test]
    fn capacity_rule() {
        assert_eq!(capacity_for(190, 16), Ok(12));
        assert_eq!(capacity_for(4, 2), Ok(2));
        assert_eq!(capacity_for(4, 3), Ok(2));
        assert_eq!(capacity_for(0, 3), Ok(0));
        assert_eq!(capacity_for(4, 0), Err(Error::ZeroRooms));
    }

    #[test]
    fn triangle_objective() {
        let g = build_graph([("a", "b"), ("b", "c"), ("c", "a")], NONE).unwrap();
        let one = assignment(1, 3, &[("a", 0), ("b", 0), ("c", 0)]);
        let r = objective(&g, &one).unwrap();
        assert_eq!((r.intra_links, r.inter_links), (3, 0));
        let spread = assignment(3, 1, &[("a", 0), ("b", 1), ("c", 2)]);
        let r = objective(&g, &spread).unwrap();
        assert_eq!((r.intra_links, r.inter_links), (0, 3));
        assert_eq!(r.per_room_links, vec![0, 0, 0]);
    }

    #[test]
    fn path_objective() {
        let g = path(&["a", "b", "c", "d"]);
        let a = assignment(2, 2, &[("a", 0), ("b", 0), ("c", 1), ("d", 1)]);
        let r = objective(&g, &a).unwrap();
        assert_eq!((r.intra_links, r.inter_links), (2, 1));
        assert_eq!(r.per_room_links, vec![1, 1]);
    }

    #[test]
    fn objective_rejects_partial_and_foreign() {
        let g = path(&["a", "b", "c"]);
        let missing = assignment(2, 2, &[("a", 0), ("b", 0)]);
        assert_eq!(objective(&g, &missing), Err(Error::Unassigned("c".into())));
        let foreign = assignment(2, 2, &[("a", 0), ("b", 0), ("c", 1), ("z", 1)]);
        assert_eq!(objective(&g, &foreign), Err(Error::UnknownNode("z".into())));
    }

    #[test]
    fn neighbor_counts() {
        let g = path(&["a", "b", "c"]);
        let a = assignment(2, 2, &[("a", 0), ("b", 0), ("c", 1)]);
        assert_eq!(neighbors_in_room(&g, &a, "b", 0), Ok(1));
        assert_eq!(neighbors_in_room(&g, &a, "b", 1), Ok(1));
        assert!(neighbors_in_room(&g, &a, "q", 0).is_err());
        assert!(neighbors_in_room(&g, &a, "b", 2).is_err());

        let g = build_graph([("a", "b")], ["v"]).unwrap();
        let a = assignment(2, 2, &[("a", 0), ("b", 1), ("v", 0)]);
        assert_eq!(neighbors_in_room(&g, &a, "v", 0), Ok(0));
        assert_eq!(neighbors_in_room(&g, &a, "v", 1), Ok(0));
    }

    #[test]
    fn move_deltas() {
        let g = path(&["a", "b", "c"]);
        let a = assignment(2, 2, &[("a", 0), ("b", 0), ("c", 1)]);
        assert_eq!(
            delta_move(&g, &a, "a", 1),
            Ok(MoveDelta {
                delta: -1,
                feasible: true
            })
        );
        assert_eq!(
            delta_move(&g, &a, "b", 1),
            Ok(MoveDelta {
                delta: 0,
                feasible: true
            })
        );
        assert!(matches!(
            delta_move(&g, &a, "a", 0),
            Err(Error::NotAMove { .. })
        ));

        let g = build_graph([("a", "b"), ("c", "d")], NONE).unwrap();
        let a = assignment(2, 2, &[("a", 0), ("b", 0), ("c", 1), ("d", 1)]);
        assert!(!delta_move(&g, &a, "a", 1).unwrap().feasible);
    }

    #[test]
    fn violations() {
        let g = path(&["a", "b", "c"]);
        let over = assignment(2, 2, &[("a", 0), ("b", 0), ("c", 0)]);
        assert_eq!(
            validate(&g, &over),
            vec![Violation::OverCapacity {
                room: 0,
                size: 3,
                capacity: 2
            }]
        );
        let missing = assignment(2, 2, &[("a", 0), ("b", 1)]);
        assert_eq!(
            validate(&g, &missing),
            vec![Violation::Uncovered { node: "c".into() }]
        );
        let ok = assignment(2, 2, &[("a", 0), ("b", 1), ("c", 0)]);
        assert!(validate(&g, &ok).is_empty());
        let odd = assignment(2, 2, &[("a", 0), ("b", 5), ("c", 0), ("x", 1)]);
        assert_eq!(
            validate(&g, &odd),
            vec![
                Violation::RoomOutOfRange {
                    node: "b".into(),
                    room: 5
                },
                Violation::UnknownNode { node: "x".into() },
            ]
        );
    }

    #[test]
    fn state_apply_tracks_objective() {
        let g = path(&["a", "b", "c", "d"]);
        let a = assignment(2, 3, &[("a", 0), ("b", 0), ("c", 1), ("d", 1)]);
        let mut st = RoomState::new(&g, &a).unwrap();
        assert_eq!(st.intra_links(), 2);
        let rec = st.apply(1, 1).unwrap();
        assert_eq!(rec.delta, 0);
        assert_eq!(st.intra_links(), 2);
        assert_eq!(st.internal_degree(0), 0);
        assert_eq!(st.internal_degree(1), 1);
        assert_eq!(st.apply(0, 1), Err(Error::RoomFull(1)));
        assert_eq!(st.report().intra_links, st.intra_links());
        assert_eq!(st.to_assignment().room_of("b"), Some(1));
    }

    #[test]
    fn violation_display_is_one_based() {
        let v = Violation::OverCapacity {
            room: 0,
            size: 3,
            capacity: 2,
        };
        assert_eq!(
            alloc::format!("{v}"),
            "room 1 holds 3 nodes, over its capacity of 2"
        );
    }
}
