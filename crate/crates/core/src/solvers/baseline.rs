use alloc::vec::Vec;

use rand::seq::SliceRandom;

use super::seeded_rng;
use crate::graph::Graph;
use crate::partition::{check_room_count, Assignment};
use crate::Result;

/// A random balanced assignment: nodes are shuffled and dealt round-robin, so
/// every room ends up with `⌊|V|/K⌋` or `⌈|V|/K⌉` nodes.
pub fn random_baseline(g: &Graph, rooms: usize, seed: u64) -> Result<Assignment> {
    let capacity = check_room_count(g, rooms)?;
    let mut rng = seeded_rng(seed);
    let mut order: Vec<usize> = (0..g.node_count()).collect();
    order.shuffle(&mut rng);
    let mut a = Assignment::new(rooms, capacity);
    for (i, v) in order.into_iter().enumerate() {
        a.assign(g.name(v), i % rooms);
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::partition::{objective, validate};

    #[test]
    fn singleton_rooms_have_no_links() {
        let g = build_graph([("a", "b"), ("b", "c"), ("a", "c")], ["d"]).unwrap();
        let a = random_baseline(&g, 4, 11).unwrap();
        assert!(validate(&g, &a).is_empty());
        assert_eq!(objective(&g, &a).unwrap().intra_links, 0);
    }

    #[test]
    fn edgeless_graph() {
        let g = build_graph(Vec::<(&str, &str)>::new(), ["a", "b", "c", "d", "e"]).unwrap();
        for seed in 0..5 {
            let a = random_baseline(&g, 2, seed).unwrap();
            assert!(validate(&g, &a).is_empty());
            assert_eq!(objective(&g, &a).unwrap().intra_links, 0);
        }
    }

    #[test]
    fn k4_always_two() {
        let g = build_graph(
            [
                ("a", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "d"),
            ],
            [""; 0],
        )
        .unwrap();
        for seed in 0..20 {
            let a = random_baseline(&g, 2, seed).unwrap();
            assert_eq!(objective(&g, &a).unwrap().intra_links, 2);
        }
    }

    #[test]
    fn deterministic() {
        let g = build_graph([("a", "b"), ("c", "d")], ["e", "f"]).unwrap();
        assert_eq!(random_baseline(&g, 3, 4), random_baseline(&g, 3, 4));
    }
}
