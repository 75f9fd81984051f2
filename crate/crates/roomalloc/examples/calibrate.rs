//! Sweeps planted-partition settings for the four reference networks and
//! prints, per setting over 30 seeds: the mean degree, the hub-first / random
//! objective ratio (target: the network's global / manual ratio), how many
//! curves get within 10% of hub-first after 0.35n moves, and how many have
//! first and second quartile slopes within 2x of each other.
//!
//! `cargo run --release --example calibrate [AM|AF|BM|BF ...]`

use roomalloc_core::instances::{gen_planted, planted_p_out_for_degree};
use roomalloc_core::{curve, hfa, objective, random_baseline, stats, SolverConfig};

/// name, nodes, average degree, rooms, manual links, optimized links
const NETWORKS: [(&str, usize, f64, usize, f64, f64); 4] = [
    ("AM", 903, 107.904, 44, 1177.0, 608.0),
    ("AF", 190, 22.305, 16, 124.0, 51.0),
    ("BM", 680, 75.579, 34, 914.0, 448.0),
    ("BF", 273, 30.637, 17, 323.0, 135.0),
];

const SEEDS: u64 = 30;

fn main() {
    let wanted: Vec<String> = std::env::args().skip(1).map(|a| a.to_uppercase()).collect();
    println!("net  blocks  p_in   p_out    degree  ratio (target)  plateau  linear");
    for (name, n, degree, rooms, manual, optimized) in NETWORKS {
        if !wanted.is_empty() && !wanted.iter().any(|w| w == name) {
            continue;
        }
        // Near-cliques of about degree + 1 nodes.
        let b0 = (n as f64 / (degree / 0.98 + 1.0)).round() as usize;
        for blocks in b0.saturating_sub(1).max(1)..=b0 + 1 {
            for p_in in [0.95, 0.97, 0.98, 0.99] {
                let Ok(p_out) = planted_p_out_for_degree(n, blocks, p_in, degree) else {
                    continue;
                };
                let row = evaluate(n, rooms, blocks, p_in, p_out);
                println!(
                    "{name}  {blocks:>6}  {p_in:.2}  {p_out:.5}  {:6.2}  {:.3} ({:.3})  {:>5}/{SEEDS}  {:>4}/{SEEDS}",
                    row.0,
                    row.1,
                    optimized / manual,
                    row.2,
                    row.3
                );
            }
        }
    }
}

fn evaluate(n: usize, rooms: usize, blocks: usize, p_in: f64, p_out: f64) -> (f64, f64, usize, usize) {
    let (mut degree, mut fh, mut fr, mut plateau, mut linear) = (0.0, 0.0, 0.0, 0, 0);
    for seed in 0..SEEDS {
        let g = gen_planted(n, blocks, p_in, p_out, seed).unwrap();
        degree += stats(&g).avg_degree.unwrap().value() / SEEDS as f64;
        let h = hfa(&g, &SolverConfig::new(rooms, seed)).unwrap().assignment;
        let r = random_baseline(&g, rooms, seed + 1000).unwrap();
        let f_h = objective(&g, &h).unwrap().intra_links as f64;
        fh += f_h;
        fr += objective(&g, &r).unwrap().intra_links as f64;
        let c: Vec<usize> = curve(&g, &r, n, seed)
            .unwrap()
            .iter()
            .map(|p| p.objective)
            .collect();
        let limit = (0.35 * n as f64) as usize;
        if c.iter().take(limit + 1).any(|&x| x as f64 <= 1.1 * f_h) {
            plateau += 1;
        }
        let q = (c.len() - 1) / 4;
        if q > 0 {
            let (d1, d2) = ((c[0] - c[q]) as f64, (c[q] - c[2 * q]) as f64);
            if d1 <= 2.0 * d2 && d2 <= 2.0 * d1 {
                linear += 1;
            }
        }
    }
    (degree, fh / fr, plateau, linear)
}
