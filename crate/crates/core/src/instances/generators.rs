//! Seeded random graph generators.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;

use crate::graph::Graph;
use crate::solvers::seeded_rng;
use crate::{Error, Result};

/// Identifiers `v0 .. v{n-1}`, zero-padded so lexicographic order matches
/// numeric order.
pub fn node_ids(n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).max(1).ilog10() as usize + 1;
    (0..n).map(|i| format!("v{i:0width$}")).collect()
}

/// Sizes of the `blocks` contiguous near-equal blocks used by [`gen_planted`].
pub fn planted_block_sizes(n: usize, blocks: usize) -> Vec<usize> {
    let mut sizes = alloc::vec![0; blocks];
    for i in 0..n {
        sizes[i * blocks / n] += 1;
    }
    sizes
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} = {p} is not in [0, 1]"
        )))
    }
}

/// Planted partition graph: `n` nodes in `blocks` near-equal blocks, each
/// within-block pair linked with probability `p_in` and each cross-block pair
/// with `p_out`.
pub fn gen_planted(n: usize, blocks: usize, p_in: f64, p_out: f64, seed: u64) -> Result<Graph> {
    check_probability("p_in", p_in)?;
    check_probability("p_out", p_out)?;
    if p_out > p_in {
        return Err(Error::InvalidParameter(format!(
            "p_out = {p_out} exceeds p_in = {p_in}"
        )));
    }
    if blocks == 0 {
        return Err(Error::InvalidParameter(
            "block count must be at least 1".into(),
        ));
    }
    let mut rng = seeded_rng(seed);
    let block = |i: usize| i * blocks / n;
    let mut pairs = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = if block(i) == block(j) { p_in } else { p_out };
            // gen() is in [0, 1): p = 1 always links, p = 0 never does
            if rng.gen::<f64>() < p {
                pairs.insert((i, j));
            }
        }
    }
    Ok(Graph::from_indexed(node_ids(n), &pairs))
}

/// Cross-block probability giving an expected average degree of `target` for
/// a planted graph with the given `p_in`.
///
/// A node in a block of size `s` has expected degree
/// `(s - 1)·p_in + (n - s)·p_out`; averaging over nodes and solving for
/// `p_out` gives the result.
pub fn planted_p_out_for_degree(n: usize, blocks: usize, p_in: f64, target: f64) -> Result<f64> {
    check_probability("p_in", p_in)?;
    if blocks == 0 || n < 2 {
        return Err(Error::InvalidParameter(
            "need at least 2 nodes and 1 block".into(),
        ));
    }
    let sizes = planted_block_sizes(n, blocks);
    let within: f64 = sizes
        .iter()
        .map(|&s| (s * s.saturating_sub(1)) as f64)
        .sum();
    let across: f64 = sizes.iter().map(|&s| (s * (n - s)) as f64).sum();
    let needed = target * n as f64 - p_in * within;
    if across == 0.0 {
        return Err(Error::InvalidParameter(
            "a single block has no cross pairs".into(),
        ));
    }
    let p_out = needed / across;
    if !(0.0..=p_in).contains(&p_out) {
        return Err(Error::InvalidParameter(format!(
            "average degree {target} needs p_out = {p_out:.5}, outside [0, p_in = {p_in}]"
        )));
    }
    Ok(p_out)
}

/// Preferential attachment: each new node links to `attach` distinct existing
/// nodes chosen with probability proportional to degree. The first
/// `attach + 1` nodes form a clique.
pub fn gen_scale_free(n: usize, attach: usize, seed: u64) -> Result<Graph> {
    if attach == 0 || attach >= n {
        return Err(Error::InvalidParameter(format!(
            "attach = {attach} must satisfy 1 <= attach < n = {n}"
        )));
    }
    let mut rng = seeded_rng(seed);
    let mut pairs = BTreeSet::new();
    // every edge contributes both endpoints, so a uniform pick is degree-weighted
    let mut endpoints: Vec<usize> = Vec::with_capacity(2 * n * attach);
    let mut chosen: Vec<usize> = Vec::with_capacity(attach);
    for v in 1..n {
        chosen.clear();
        if v <= attach {
            chosen.extend(0..v);
        } else {
            while chosen.len() < attach {
                let t = endpoints[rng.gen_range(0..endpoints.len())];
                if !chosen.contains(&t) {
                    chosen.push(t);
                }
            }
        }
        for &t in &chosen {
            pairs.insert((t, v));
            endpoints.push(t);
            endpoints.push(v);
        }
    }
    Ok(Graph::from_indexed(node_ids(n), &pairs))
}
