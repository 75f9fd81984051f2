//! GraphML export and import.
//!
//! Nodes carry a 1-based `room` data value; the graph element carries the
//! room count and capacity so an assignment survives a round trip.

use std::collections::BTreeMap;
use std::fmt::Write;

use quick_xml::escape::escape;
use quick_xml::events::{BytesStart, Event};
use quick_xml::Reader;
use roomalloc_core::{build_graph, Assignment, Graph};

use super::FormatError;

pub fn write_graphml(g: &Graph, a: &Assignment) -> String {
    let mut out = String::from(concat!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
        "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n",
        "  <key id=\"room_count\" for=\"graph\" attr.name=\"room_count\" attr.type=\"int\"/>\n",
        "  <key id=\"capacity\" for=\"graph\" attr.name=\"capacity\" attr.type=\"int\"/>\n",
        "  <key id=\"room\" for=\"node\" attr.name=\"room\" attr.type=\"int\"/>\n",
        "  <graph id=\"G\" edgedefault=\"undirected\">\n",
    ));
    let w = &mut out;
    writeln!(w, "    <data key=\"room_count\">{}</data>", a.room_count()).unwrap();
    writeln!(w, "    <data key=\"capacity\">{}</data>", a.capacity()).unwrap();
    for id in g.nodes() {
        match a.room_of(id) {
            Some(r) => writeln!(
                w,
                "    <node id=\"{}\"><data key=\"room\">{}</data></node>",
                escape(id.as_str()),
                r + 1
            ),
            None => writeln!(w, "    <node id=\"{}\"/>", escape(id.as_str())),
        }
        .unwrap();
    }
    for (x, y) in g.edge_names() {
        writeln!(
            w,
            "    <edge source=\"{}\" target=\"{}\"/>",
            escape(x),
            escape(y)
        )
        .unwrap();
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}

/// What a GraphML file describes.
#[derive(Debug)]
pub struct GraphMlDocument {
    pub graph: Graph,
    /// 0-based rooms of the nodes that carry one.
    pub rooms: BTreeMap<String, usize>,
    pub room_count: Option<usize>,
    pub capacity: Option<usize>,
}

impl GraphMlDocument {
    /// The embedded assignment, when the room count and capacity are present.
    pub fn assignment(&self) -> Option<Assignment> {
        let mut a = Assignment::new(self.room_count?, self.capacity?);
        for (n, &r) in &self.rooms {
            a.assign(n.clone(), r);
        }
        Some(a)
    }
}

fn attr(e: &BytesStart<'_>, name: &str) -> Result<Option<String>, FormatError> {
    for a in e.attributes() {
        let a = a.map_err(|err| FormatError::GraphMl(err.to_string()))?;
        if a.key.as_ref() == name.as_bytes() {
            let v = a
                .unescape_value()
                .map_err(|err| FormatError::GraphMl(err.to_string()))?;
            return Ok(Some(v.into_owned()));
        }
    }
    Ok(None)
}

fn required(e: &BytesStart<'_>, name: &str) -> Result<String, FormatError> {
    attr(e, name)?.ok_or_else(|| {
        FormatError::GraphMl(format!(
            "<{}> without `{name}`",
            String::from_utf8_lossy(e.name().as_ref())
        ))
    })
}

fn parse_int(text: &str, what: &str) -> Result<usize, FormatError> {
    text.trim()
        .parse()
        .map_err(|_| FormatError::GraphMl(format!("{what} `{text}` is not an integer")))
}

/// Reads the subset of GraphML written by [`write_graphml`]: undirected
/// edges, nodes, and integer `room` / `room_count` / `capacity` data keyed by
/// attribute name.
pub fn read_graphml(text: &str) -> Result<GraphMlDocument, FormatError> {
    let mut reader = Reader::from_str(text);
    reader.config_mut().trim_text(true);

    // key id -> attribute name
    let mut keys: BTreeMap<String, String> = BTreeMap::new();
    let mut nodes: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut rooms = BTreeMap::new();
    let mut room_count = None;
    let mut capacity = None;
    let mut current_node: Option<String> = None;
    let mut current_data: Option<String> = None;

    loop {
        let event = reader
            .read_event()
            .map_err(|e| FormatError::GraphMl(e.to_string()))?;
        match event {
            Event::Start(ref e) | Event::Empty(ref e) => {
                let opens = matches!(event, Event::Start(_));
                match e.local_name().as_ref() {
                    b"key" => {
                        let id = required(e, "id")?;
                        let name = attr(e, "attr.name")?.unwrap_or_else(|| id.clone());
                        keys.insert(id, name);
                    }
                    b"graph" => {
                        if attr(e, "edgedefault")?.as_deref() == Some("directed") {
                            return Err(FormatError::GraphMl(
                                "directed graphs are not supported".into(),
                            ));
                        }
                    }
                    b"node" => {
                        let id = required(e, "id")?;
                        nodes.push(id.clone());
                        if opens {
                            current_node = Some(id);
                        }
                    }
                    b"edge" => {
                        edges.push((required(e, "source")?, required(e, "target")?));
                    }
                    b"data" => {
                        let key = required(e, "key")?;
                        if opens {
                            current_data = Some(keys.get(&key).cloned().unwrap_or(key));
                        }
                    }
                    _ => {}
                }
            }
            Event::Text(t) => {
                let value = t
                    .unescape()
                    .map_err(|e| FormatError::GraphMl(e.to_string()))?;
                match (current_data.as_deref(), &current_node) {
                    (Some("room"), Some(node)) => {
                        let r = parse_int(&value, "room")?;
                        if r == 0 {
                            return Err(FormatError::GraphMl("rooms are numbered from 1".into()));
                        }
                        rooms.insert(node.clone(), r - 1);
                    }
                    (Some("room_count"), None) => {
                        room_count = Some(parse_int(&value, "room_count")?)
                    }
                    (Some("capacity"), None) => capacity = Some(parse_int(&value, "capacity")?),
                    _ => {}
                }
            }
            Event::End(e) => match e.local_name().as_ref() {
                b"node" => current_node = None,
                b"data" => current_data = None,
                _ => {}
            },
            Event::Eof => break,
            _ => {}
        }
    }

    let graph = build_graph(edges, nodes)?;
    Ok(GraphMlDocument {
        graph,
        rooms,
        room_count,
        capacity,
    })
}
