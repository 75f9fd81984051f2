//! JSON report bodies.

use roomalloc_core::instances::KindCounts;
use roomalloc_core::{GraphStats, ObjectiveReport};
use serde::Serialize;

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct StatsJson {
    pub nodes: usize,
    pub links: usize,
    /// Average degree rounded to three decimals; absent for an empty graph.
    pub avg_degree: Option<f64>,
    /// The same value as an exact reduced fraction, e.g. `"2119/95"`.
    pub avg_degree_exact: Option<String>,
    pub components: usize,
}

impl From<&GraphStats> for StatsJson {
    fn from(s: &GraphStats) -> Self {
        StatsJson {
            nodes: s.node_count,
            links: s.link_count,
            avg_degree: s.avg_degree.map(|d| (d.value() * 1000.0).round() / 1000.0),
            avg_degree_exact: s.avg_degree.map(|d| format!("{}/{}", d.numer, d.denom)),
            components: s.components,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ObjectiveJson {
    pub intra_links: usize,
    pub inter_links: usize,
    /// Entry `i` is room `i + 1`.
    pub per_room_links: Vec<usize>,
}

impl From<&ObjectiveReport> for ObjectiveJson {
    fn from(r: &ObjectiveReport) -> Self {
        ObjectiveJson {
            intra_links: r.intra_links,
            inter_links: r.inter_links,
            per_room_links: r.per_room_links.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct CountsJson {
    pub joint_crime: usize,
    pub fellow_townsmen: usize,
    pub same_crime_type: usize,
    pub declared_tie: usize,
}

impl From<KindCounts> for CountsJson {
    fn from(c: KindCounts) -> Self {
        CountsJson {
            joint_crime: c.joint_crime,
            fellow_townsmen: c.fellow_townsmen,
            same_crime_type: c.same_crime_type,
            declared_tie: c.declared_tie,
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use roomalloc_core::{build_graph, stats};

    #[test]
    fn average_degree_rendering() {
        let g = build_graph([("a", "b"), ("b", "c"), ("c", "a")], ["d"]).unwrap();
        let s = StatsJson::from(&stats(&g));
        assert_eq!(s.avg_degree, Some(1.5));
        assert_eq!(s.avg_degree_exact.as_deref(), Some("3/2"));
        let text = to_json(&s);
        assert!(text.contains("\"avg_degree\": 1.5"));
    }
}
