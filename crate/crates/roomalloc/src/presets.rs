//! Planted-partition settings standing in for private detention networks.
//!
//! Each preset matches a network's node count and average degree. The block
//! count and within-block density are chosen so that hub-first allocation
//! removes about as large a share of the random-allocation links as it does
//! on the real networks; `examples/calibrate.rs` regenerates the numbers.

use roomalloc_core::instances::{gen_planted, planted_p_out_for_degree};
use roomalloc_core::{Graph, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlantedPreset {
    pub name: &'static str,
    pub nodes: usize,
    pub blocks: usize,
    pub p_in: f64,
    /// Target average degree.
    pub avg_degree: f64,
    /// Room count of the network this preset mirrors.
    pub rooms: usize,
}

/// 903 nodes, average degree 107.904, 44 rooms.
pub const AM_LIKE: PlantedPreset = PlantedPreset {
    name: "am",
    nodes: 903,
    blocks: 9,
    p_in: 0.99,
    avg_degree: 107.904,
    rooms: 44,
};

/// 190 nodes, average degree 22.305, 16 rooms.
pub const AF_LIKE: PlantedPreset = PlantedPreset {
    name: "af",
    nodes: 190,
    blocks: 8,
    p_in: 0.98,
    avg_degree: 22.305,
    rooms: 16,
};

/// 680 nodes, average degree 75.579, 34 rooms. 34 divides 680, so every
/// room is full and single-node relocation has nowhere to go.
pub const BM_LIKE: PlantedPreset = PlantedPreset {
    name: "bm",
    nodes: 680,
    blocks: 9,
    p_in: 0.99,
    avg_degree: 75.579,
    rooms: 34,
};

/// 273 nodes, average degree 30.637, 17 rooms.
pub const BF_LIKE: PlantedPreset = PlantedPreset {
    name: "bf",
    nodes: 273,
    blocks: 9,
    p_in: 0.98,
    avg_degree: 30.637,
    rooms: 17,
};

pub const PRESETS: [PlantedPreset; 4] = [AM_LIKE, AF_LIKE, BM_LIKE, BF_LIKE];

impl PlantedPreset {
    pub fn by_name(name: &str) -> Option<PlantedPreset> {
        PRESETS
            .into_iter()
            .find(|p| p.name.eq_ignore_ascii_case(name))
    }

    /// Cross-block probability that yields the target average degree.
    pub fn p_out(&self) -> f64 {
        planted_p_out_for_degree(self.nodes, self.blocks, self.p_in, self.avg_degree)
            .expect("preset parameters are calibrated")
    }

    pub fn generate(&self, seed: u64) -> Result<Graph> {
        gen_planted(self.nodes, self.blocks, self.p_in, self.p_out(), seed)
    }
}
