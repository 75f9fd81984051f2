//! Tab-separated edge lists: one `a<TAB>b` pair per line, `#` comments and
//! blank lines ignored.
//!
//! A two-field line whose first field is the literal `node` declares the
//! second field as a node; any other two-field line is an edge.

use roomalloc_core::{build_graph, Graph};

use super::FormatError;

const NODE_KEYWORD: &str = "node";

pub fn read_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut edges = Vec::new();
    let mut isolated = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [first, second] = fields[..] else {
            return Err(FormatError::syntax(
                line_no,
                format!("expected two tab-separated fields, found {}", fields.len()),
            ));
        };
        if first.is_empty() || second.is_empty() {
            return Err(FormatError::syntax(line_no, "empty node identifier"));
        }
        if first == NODE_KEYWORD {
            isolated.push(second);
        } else if first == second {
            return Err(FormatError::syntax(
                line_no,
                format!("self-loop ({first}, {second})"),
            ));
        } else {
            edges.push((first, second));
        }
    }
    Ok(build_graph(edges, isolated)?)
}

fn check_id(id: &str) -> Result<(), FormatError> {
    if id.is_empty() || id.starts_with('#') || id.contains(['\t', '\n', '\r']) {
        return Err(FormatError::Invalid(format!(
            "node id {id:?} cannot be written to an edge list"
        )));
    }
    Ok(())
}

/// Writes every edge once, then a `node` line for each isolated node.
pub fn write_edge_list(g: &Graph) -> Result<String, FormatError> {
    let mut out = String::new();
    for id in g.nodes() {
        check_id(id)?;
    }
    for (a, b) in g.edge_names() {
        // an edge starting with the keyword would read back as a declaration
        let (a, b) = if a == NODE_KEYWORD { (b, a) } else { (a, b) };
        out.push_str(a);
        out.push('\t');
        out.push_str(b);
        out.push('\n');
    }
    for v in 0..g.node_count() {
        if g.degree(v) == 0 {
            out.push_str(NODE_KEYWORD);
            out.push('\t');
            out.push_str(g.name(v));
            out.push('\n');
        }
    }
    Ok(out)
}
