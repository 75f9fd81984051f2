//! Building relation networks: from coded person records, or from synthetic
//! generators.

mod generators;
mod network;
mod records;
mod relations;

pub use generators::{
    gen_planted, gen_scale_free, node_ids, planted_block_sizes, planted_p_out_for_degree,
};
pub use network::{build_networks, ManualRooms, Network, NetworkBundle, Provenance};
pub use records::{resolve_records, DetaineeRecord, Gender, RecordWarning};
pub use relations::{extract_relations, KindCounts, RelationEdge, RelationKind, RelationKinds};
