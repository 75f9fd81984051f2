//! Move logs (JSON) and adjustment curves (CSV).

use roomalloc_core::{CurvePoint, MoveRecord};
use serde::{Deserialize, Serialize};

use super::FormatError;

#[derive(Debug, Serialize, Deserialize)]
struct MoveEntry {
    node: String,
    from_room: Option<usize>,
    to_room: usize,
    delta: i64,
}

pub fn write_moves(moves: &[MoveRecord]) -> String {
    let entries: Vec<MoveEntry> = moves
        .iter()
        .map(|m| MoveEntry {
            node: m.node.clone(),
            from_room: m.from_room.map(|r| r + 1),
            to_room: m.to_room + 1,
            delta: m.delta,
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&entries).expect("moves serialize");
    s.push('\n');
    s
}

pub fn read_moves(text: &str) -> Result<Vec<MoveRecord>, FormatError> {
    let entries: Vec<MoveEntry> = serde_json::from_str(text)?;
    entries
        .into_iter()
        .map(|e| {
            if e.to_room == 0 || e.from_room == Some(0) {
                return Err(FormatError::Invalid("rooms are numbered from 1".into()));
            }
            Ok(MoveRecord {
                node: e.node,
                from_room: e.from_room.map(|r| r - 1),
                to_room: e.to_room - 1,
                delta: e.delta,
            })
        })
        .collect()
}

pub fn write_curve(points: &[CurvePoint]) -> String {
    let mut s = String::from("adjustments,intra_links\n");
    for p in points {
        s.push_str(&format!("{},{}\n", p.adjustments_done, p.objective));
    }
    s
}

pub fn read_curve(text: &str) -> Result<Vec<CurvePoint>, FormatError> {
    let mut lines = text.lines();
    if lines.next() != Some("adjustments,intra_links") {
        return Err(FormatError::syntax(
            1,
            "expected header `adjustments,intra_links`",
        ));
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let parsed = line
                .split_once(',')
                .and_then(|(a, f)| Some((a.parse().ok()?, f.parse().ok()?)));
            let (adjustments_done, objective) =
                parsed.ok_or_else(|| FormatError::syntax(i + 2, "expected two integers"))?;
            Ok(CurvePoint {
                adjustments_done,
                objective,
            })
        })
        .collect()
}
