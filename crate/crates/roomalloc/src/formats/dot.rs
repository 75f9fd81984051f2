//! Graphviz DOT export with one fill color per room.

use std::fmt::Write;

use roomalloc_core::{Assignment, Graph};

fn quote(id: &str) -> String {
    let mut s = String::with_capacity(id.len() + 2);
    s.push('"');
    for c in id.chars() {
        match c {
            '"' | '\\' => {
                s.push('\\');
                s.push(c);
            }
            '\n' => s.push_str("\\n"),
            _ => s.push(c),
        }
    }
    s.push('"');
    s
}

/// Evenly spaced hues, one per room, as an HSV triple.
fn room_color(room: usize, rooms: usize) -> String {
    format!("{:.3} 0.450 0.950", room as f64 / rooms.max(1) as f64)
}

/// Nodes carry `room` (1-based) and `color_index` attributes; nodes missing
/// from the assignment are written without them.
pub fn write_dot(g: &Graph, a: &Assignment) -> String {
    let mut out = String::from("graph rooms {\n");
    if !g.is_empty() {
        out.push_str("  node [style=filled];\n");
    }
    for id in g.nodes() {
        match a.room_of(id) {
            Some(r) => writeln!(
                out,
                "  {} [room={}, color_index={}, fillcolor=\"{}\"];",
                quote(id),
                r + 1,
                r + 1,
                room_color(r, a.room_count())
            ),
            None => writeln!(out, "  {};", quote(id)),
        }
        .expect("string write");
    }
    for (x, y) in g.edge_names() {
        writeln!(out, "  {} -- {};", quote(x), quote(y)).expect("string write");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use roomalloc_core::build_graph;

    #[test]
    fn two_rooms_two_colors() {
        let g = build_graph([("a", "b"), ("b", "c")], [""; 0]).unwrap();
        let mut a = Assignment::new(2, 2);
        a.assign("a", 0);
        a.assign("b", 0);
        a.assign("c", 1);
        let dot = write_dot(&g, &a);
        assert!(dot.contains("\"a\" [room=1, color_index=1"));
        assert!(dot.contains("\"c\" [room=2, color_index=2"));
        assert!(dot.contains("\"a\" -- \"b\";"));
        let colors: std::collections::BTreeSet<_> = dot
            .lines()
            .filter_map(|l| l.split("fillcolor=").nth(1))
            .collect();
        assert_eq!(colors.len(), 2);
    }

    #[test]
    fn empty_graph() {
        let g = build_graph(Vec::<(&str, &str)>::new(), [""; 0]).unwrap();
        assert_eq!(write_dot(&g, &Assignment::new(1, 0)), "graph rooms {\n}\n");
    }

    #[test]
    fn quotes_are_escaped() {
        assert_eq!(quote("a\"b\\c"), "\"a\\\"b\\\\c\"");
    }
}
