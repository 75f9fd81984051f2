//! On-disk formats.
//!
//! | file            | shape                                                     |
//! |-----------------|-----------------------------------------------------------|
//! | edge list       | `id1<TAB>id2` per line, `node<TAB>id` for isolated nodes  |
//! | assignment JSON | `{"K": int, "S": int, "rooms": {"<id>": room}}`, 1-based  |
//! | record CSV      | `id,room,gender,case_number,crime_type,birth_place,ties`  |
//! | moves JSON      | array of `{node, from_room, to_room, delta}`, 1-based     |
//! | curve CSV       | `adjustments,intra_links`                                 |
//! | DOT / GraphML   | graph with a `room` attribute per node                    |

pub mod assignment;
pub mod dot;
pub mod edgelist;
pub mod graphml;
pub mod moves;
pub mod records;

use std::path::Path;

use roomalloc_core::Graph;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Core(#[from] roomalloc_core::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid GraphML: {0}")]
    GraphMl(String),
    #[error("{0}")]
    Invalid(String),
}

impl FormatError {
    pub(crate) fn syntax(line: usize, message: impl Into<String>) -> Self {
        FormatError::Syntax {
            line,
            message: message.into(),
        }
    }
}

/// Parses a graph file, choosing GraphML by the `.graphml` extension and the
/// edge-list format otherwise.
pub fn parse_graph(path: &Path, text: &str) -> Result<Graph, FormatError> {
    let is_graphml = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("graphml"));
    if is_graphml {
        Ok(graphml::read_graphml(text)?.graph)
    } else {
        edgelist::read_edge_list(text)
    }
}
