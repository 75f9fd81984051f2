#![allow(dead_code)]

use proptest::prelude::*;
use roomalloc_core::{build_graph, capacity_for, Assignment, Graph};

/// Ids sort in index order.
pub fn id(i: usize) -> String {
    format!("n{i:02}")
}

/// Graph on `n` nodes from an upper-triangle adjacency mask.
pub fn graph_from_mask(n: usize, mask: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for a in 0..n {
        for b in a + 1..n {
            if mask[bit] {
                edges.push((id(a), id(b)));
            }
            bit += 1;
        }
    }
    build_graph(edges, (0..n).map(id)).unwrap()
}

pub fn arb_graph(max_nodes: usize) -> impl Strategy<Value = Graph> {
    (1..=max_nodes).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), prop::collection::vec(any::<bool>(), pairs))
            .prop_map(|(n, mask)| graph_from_mask(n, &mask))
    })
}

/// A graph, a room count `1 ≤ K ≤ |V|`, and a feasible assignment.
pub fn arb_instance(max_nodes: usize) -> impl Strategy<Value = (Graph, usize, Assignment)> {
    arb_graph(max_nodes)
        .prop_flat_map(|g| {
            let n = g.node_count();
            (Just(g), 1..=n)
        })
        .prop_flat_map(|(g, k)| {
            let n = g.node_count();
            (
                Just(g),
                Just(k),
                Just(()).prop_perturb(move |_, mut rng| {
                    // Shuffled round-robin keeps every room within capacity.
                    let mut order: Vec<usize> = (0..n).collect();
                    for i in (1..n).rev() {
                        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
                        order.swap(i, j);
                    }
                    order
                }),
            )
        })
        .prop_map(|(g, k, order)| {
            let s = capacity_for(g.node_count(), k).unwrap();
            let mut a = Assignment::new(k, s);
            for (slot, &v) in order.iter().enumerate() {
                a.assign(g.name(v), slot % k);
            }
            (g, k, a)
        })
}

/// Intra-room links, computed from scratch over the edge list.
pub fn count_intra(g: &Graph, a: &Assignment) -> usize {
    g.edge_names()
        .filter(|(x, y)| a.room_of(x) == a.room_of(y))
        .count()
}

/// Minimum objective over all `K^n` room maps that respect capacity.
pub fn brute_force_optimum(g: &Graph, k: usize) -> usize {
    let n = g.node_count();
    let s = capacity_for(n, k).unwrap();
    let mut rooms = vec![0usize; n];
    let mut best = usize::MAX;
    loop {
        let mut sizes = vec![0usize; k];
        for &r in &rooms {
            sizes[r] += 1;
        }
        if sizes.iter().all(|&c| c <= s) {
            let f = g.edges().filter(|&(x, y)| rooms[x] == rooms[y]).count();
            best = best.min(f);
        }
        // Odometer increment.
        let mut i = 0;
        loop {
            if i == n {
                return best;
            }
            rooms[i] += 1;
            if rooms[i] < k {
                break;
            }
            rooms[i] = 0;
            i += 1;
        }
    }
}
