//! Undirected, unweighted relation networks.
//!
//! Nodes are opaque string identifiers kept in lexicographic order, so node
//! indices (and every result derived from them) do not depend on the order in
//! which edges were supplied.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// An undirected simple graph over string node identifiers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Builds a graph from endpoint pairs plus nodes that may have no edges.
///
/// Symmetric and repeated pairs collapse to one edge. A pair with equal
/// endpoints is rejected.
pub fn build_graph<I, J, A, B>(edges: I, isolated: J) -> Result<Graph>
where
    I: IntoIterator<Item = (A, A)>,
    J: IntoIterator<Item = B>,
    A: AsRef<str>,
    B: AsRef<str>,
{
    let mut pairs: BTreeSet<(String, String)> = BTreeSet::new();
    let mut names: BTreeSet<String> = BTreeSet::new();
    for (a, b) in edges {
        let (a, b) = (a.as_ref(), b.as_ref());
        if a == b {
            return Err(Error::SelfLoop(a.to_string()));
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        names.insert(lo.to_string());
        names.insert(hi.to_string());
        pairs.insert((lo.to_string(), hi.to_string()));
    }
    for v in isolated {
        names.insert(v.as_ref().to_string());
    }

    let names: Vec<String> = names.into_iter().collect();
    let index: BTreeMap<String, usize> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), i))
        .collect();
    let mut adj = alloc::vec![Vec::new(); names.len()];
    for (a, b) in &pairs {
        let (ia, ib) = (index[a], index[b]);
        adj[ia].push(ib);
        adj[ib].push(ia);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Graph {
        names,
        index,
        adj,
        edge_count: pairs.len(),
    })
}

impl Graph {
    /// Builds a graph directly from index pairs over `names`.
    ///
    /// `names` must already be sorted and distinct; pairs are deduplicated.
    pub(crate) fn from_indexed(names: Vec<String>, pairs: &BTreeSet<(usize, usize)>) -> Graph {
        debug_assert!(names.windows(2).all(|w| w[0] < w[1]));
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let mut adj = alloc::vec![Vec::new(); names.len()];
        for &(a, b) in pairs {
            debug_assert!(a != b);
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            names,
            index,
            adj,
            edge_count: pairs.len(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Node identifiers in index order (lexicographic).
    pub fn nodes(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.index.contains_key(id)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor indices of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Each edge once, as `(lo, hi)` index pairs in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&w| w > u).map(move |&w| (u, w)))
    }

    /// Each edge once, by identifier.
    pub fn edge_names(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges().map(|(a, b)| (self.name(a), self.name(b)))
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }
}

/// Average degree `2|E| / |V|` held as a reduced fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AvgDegree {
    pub numer: u64,
    pub denom: u64,
}

impl AvgDegree {
    fn new(numer: u64, denom: u64) -> Self {
        let g = gcd(numer, denom).max(1);
        AvgDegree {
            numer: numer / g,
            denom: denom / g,
        }
    }

    pub fn value(&self) -> f64 {
        self.numer as f64 / self.denom as f64
    }
}

/// Renders with three decimals.
impl fmt::Display for AvgDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.3}", self.value())
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Node and link counts, average degree and connected components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphStats {
    pub node_count: usize,
    pub link_count: usize,
    /// `None` for the empty graph.
    pub avg_degree: Option<AvgDegree>,
    pub components: usize,
}

pub fn stats(g: &Graph) -> GraphStats {
    let n = g.node_count();
    let avg_degree = (n > 0).then(|| AvgDegree::new(2 * g.edge_count() as u64, n as u64));
    GraphStats {
        node_count: n,
        link_count: g.edge_count(),
        avg_degree,
        components: component_count(g),
    }
}

fn component_count(g: &Graph) -> usize {
    let n = g.node_count();
    let mut seen = alloc::vec![false; n];
    let mut stack = Vec::new();
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const NONE: [&str; 0] = [];

    #[test]
    fn symmetric_pair_is_one_edge() {
        let g = build_graph([("a", "b"), ("b", "a")], NONE).unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn isolated_only() {
        let g = build_graph(Vec::<(&str, &str)>::new(), ["a", "b", "c"]).unwrap();
        let s = stats(&g);
        assert_eq!((s.node_count, s.link_count, s.components), (3, 0, 3));
    }

    #[test]
    fn self_loop_rejected() {
        let err = build_graph([("a", "a")], NONE).unwrap_err();
        assert_eq!(err, Error::SelfLoop("a".into()));
    }

    #[test]
    fn triangle_stats() {
        let g = build_graph([("a", "b"), ("b", "c"), ("c", "a")], NONE).unwrap();
        let s = stats(&g);
        assert_eq!(s.avg_degree.unwrap().value(), 2.0);
        assert_eq!(s.components, 1);
    }

    #[test]
    fn two_disjoint_edges() {
        let g = build_graph([("a", "b"), ("c", "d")], NONE).unwrap();
        let s = stats(&g);
        assert_eq!(s.avg_degree.unwrap().value(), 1.0);
        assert_eq!(s.components, 2);
    }

    #[test]
    fn af_sized_average_degree_renders_like_the_table() {
        // 190 nodes, 2119 links
        let d = AvgDegree::new(2 * 2119, 190);
        assert_eq!(alloc::format!("{d}"), "22.305");
        assert_eq!(d.numer * 190, 2 * 2119 * d.denom);
    }

    #[test]
    fn empty_graph_has_no_average() {
        let g = build_graph(Vec::<(&str, &str)>::new(), NONE).unwrap();
        let s = stats(&g);
        assert_eq!(s.avg_degree, None);
        assert_eq!(s.components, 0);
    }

    #[test]
    fn edges_listed_once() {
        let g = build_graph([("b", "c"), ("a", "b"), ("c", "a")], NONE).unwrap();
        let e: Vec<_> = g.edges().collect();
        assert_eq!(e, vec![(0, 1), (0, 2), (1, 2)]);
    }
}
