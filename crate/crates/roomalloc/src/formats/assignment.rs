//! Assignment JSON: `{"K": 3, "S": 2, "rooms": {"a": 1, "b": 3}}` with rooms
//! numbered from 1.

use std::collections::BTreeMap;

use roomalloc_core::Assignment;
use serde::{Deserialize, Serialize};

use super::FormatError;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AssignmentFile {
    #[serde(rename = "K")]
    rooms_count: usize,
    #[serde(rename = "S")]
    capacity: usize,
    rooms: BTreeMap<String, usize>,
}

pub fn read_assignment(text: &str) -> Result<Assignment, FormatError> {
    let file: AssignmentFile = serde_json::from_str(text)?;
    let mut a = Assignment::new(file.rooms_count, file.capacity);
    for (node, room) in file.rooms {
        if room == 0 {
            return Err(FormatError::Invalid(format!(
                "node `{node}` has room 0; rooms are numbered from 1"
            )));
        }
        a.assign(node, room - 1);
    }
    Ok(a)
}

/// Pretty-printed with a trailing newline; nodes in identifier order.
pub fn write_assignment(a: &Assignment) -> String {
    let file = AssignmentFile {
        rooms_count: a.room_count(),
        capacity: a.capacity(),
        rooms: a.iter().map(|(n, r)| (n.to_string(), r + 1)).collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("assignment serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_based_on_disk() {
        let mut a = Assignment::new(2, 2);
        a.assign("x", 0);
        a.assign("y", 1);
        let text = write_assignment(&a);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["K"], 2);
        assert_eq!(v["S"], 2);
        assert_eq!(v["rooms"]["x"], 1);
        assert_eq!(v["rooms"]["y"], 2);
        assert_eq!(read_assignment(&text).unwrap(), a);
    }

    #[test]
    fn room_zero_rejected() {
        let err = read_assignment(r#"{"K": 1, "S": 1, "rooms": {"a": 0}}"#).unwrap_err();
        assert!(err.to_string().contains("room 0"));
    }

    #[test]
    fn malformed_json_rejected() {
        assert!(read_assignment(r#"{"K": 1, "rooms": {}}"#).is_err());
        assert!(read_assignment("[").is_err());
    }
}
