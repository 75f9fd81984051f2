use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use super::records::{DetaineeRecord, Gender};
use super::relations::{KindCounts, RelationEdge};
use crate::graph::{build_graph, Graph};
use crate::partition::{capacity_for, Assignment};

/// The network of one gender.
#[derive(Clone, Debug)]
pub struct Network {
    pub graph: Graph,
    /// Record ids of this gender, sorted.
    pub roster: Vec<String>,
    /// Assignment taken from the records' room labels, when every record of
    /// this gender has one.
    pub manual: Option<ManualRooms>,
}

/// Recorded room labels mapped to room indices in label order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManualRooms {
    pub labels: Vec<String>,
    pub assignment: Assignment,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub source: String,
    pub records: usize,
    pub counts: KindCounts,
}

#[derive(Clone, Debug)]
pub struct NetworkBundle {
    pub male: Network,
    pub female: Network,
    pub provenance: Provenance,
}

impl NetworkBundle {
    pub fn network(&self, gender: Gender) -> &Network {
        match gender {
            Gender::Male => &self.male,
            Gender::Female => &self.female,
        }
    }
}

/// Splits records and their relations into one graph per gender. Records
/// without relations become isolated nodes.
pub fn build_networks(
    source: &str,
    records: &[DetaineeRecord],
    edges: &[RelationEdge],
) -> NetworkBundle {
    let genders: BTreeMap<&str, Gender> =
        records.iter().map(|r| (r.id.as_str(), r.gender)).collect();
    let network = |gender: Gender| {
        let members: Vec<&DetaineeRecord> = records.iter().filter(|r| r.gender == gender).collect();
        let mut roster: Vec<String> = members.iter().map(|r| r.id.clone()).collect();
        roster.sort();
        let pairs = edges.iter().filter_map(|e| {
            let same = genders.get(e.a.as_str()) == Some(&gender)
                && genders.get(e.b.as_str()) == Some(&gender);
            (same && e.a != e.b).then_some((e.a.as_str(), e.b.as_str()))
        });
        let graph = build_graph(pairs, roster.iter()).expect("self-loops are filtered out");
        Network {
            manual: manual_rooms(&members),
            graph,
            roster,
        }
    };
    NetworkBundle {
        male: network(Gender::Male),
        female: network(Gender::Female),
        provenance: Provenance {
            source: source.into(),
            records: records.len(),
            counts: KindCounts::of(edges),
        },
    }
}

fn manual_rooms(members: &[&DetaineeRecord]) -> Option<ManualRooms> {
    if members.is_empty() || members.iter().any(|r| r.room.is_none()) {
        return None;
    }
    let labels: Vec<String> = members
        .iter()
        .filter_map(|r| r.room.clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let capacity = capacity_for(members.len(), labels.len()).ok()?;
    let mut assignment = Assignment::new(labels.len(), capacity);
    for r in members {
        let label = r.room.as_ref()?;
        let room = labels.binary_search(label).ok()?;
        assignment.assign(r.id.clone(), room);
    }
    Some(ManualRooms { labels, assignment })
}
