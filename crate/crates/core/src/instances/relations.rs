use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::records::{DetaineeRecord, Gender};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationKind {
    /// Same case number.
    JointCrime,
    /// Same birth place.
    FellowTownsmen,
    /// Same crime type.
    SameCrimeType,
    /// Listed in either record's ties.
    DeclaredTie,
}

impl RelationKind {
    pub const ALL: [RelationKind; 4] = [
        RelationKind::JointCrime,
        RelationKind::FellowTownsmen,
        RelationKind::SameCrimeType,
        RelationKind::DeclaredTie,
    ];

    fn bit(self) -> u8 {
        1 << self as u8
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RelationKind::JointCrime => "joint_crime",
            RelationKind::FellowTownsmen => "fellow_townsmen",
            RelationKind::SameCrimeType => "same_crime_type",
            RelationKind::DeclaredTie => "declared_tie",
        }
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A set of relation kinds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RelationKinds(u8);

impl RelationKinds {
    pub fn insert(&mut self, kind: RelationKind) {
        self.0 |= kind.bit();
    }

    pub fn contains(self, kind: RelationKind) -> bool {
        self.0 & kind.bit() != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = RelationKind> {
        RelationKind::ALL
            .into_iter()
            .filter(move |&k| self.contains(k))
    }
}

impl FromIterator<RelationKind> for RelationKinds {
    fn from_iter<I: IntoIterator<Item = RelationKind>>(iter: I) -> Self {
        let mut s = RelationKinds::default();
        for k in iter {
            s.insert(k);
        }
        s
    }
}

/// An undirected relation between two same-gender records, `a < b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationEdge {
    pub a: String,
    pub b: String,
    pub kinds: RelationKinds,
}

/// Number of relation edges carrying each kind.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KindCounts {
    pub joint_crime: usize,
    pub fellow_townsmen: usize,
    pub same_crime_type: usize,
    pub declared_tie: usize,
}

impl KindCounts {
    pub fn of(edges: &[RelationEdge]) -> Self {
        let mut c = KindCounts::default();
        for e in edges {
            for k in e.kinds.iter() {
                *c.get_mut(k) += 1;
            }
        }
        c
    }

    pub fn get(&self, kind: RelationKind) -> usize {
        match kind {
            RelationKind::JointCrime => self.joint_crime,
            RelationKind::FellowTownsmen => self.fellow_townsmen,
            RelationKind::SameCrimeType => self.same_crime_type,
            RelationKind::DeclaredTie => self.declared_tie,
        }
    }

    fn get_mut(&mut self, kind: RelationKind) -> &mut usize {
        match kind {
            RelationKind::JointCrime => &mut self.joint_crime,
            RelationKind::FellowTownsmen => &mut self.fellow_townsmen,
            RelationKind::SameCrimeType => &mut self.same_crime_type,
            RelationKind::DeclaredTie => &mut self.declared_tie,
        }
    }
}

/// Links every pair of same-gender records that share a case number, birth
/// place or crime type, or where either lists the other as a tie. Empty
/// attribute values match nothing.
///
/// Output is sorted by `(a, b)` and independent of record order. Records are
/// expected to have unique ids (see `resolve_records`).
pub fn extract_relations(records: &[DetaineeRecord]) -> Vec<RelationEdge> {
    // Rank records by id so pair keys follow identifier order.
    let mut order: Vec<usize> = (0..records.len()).collect();
    order.sort_by(|&x, &y| records[x].id.cmp(&records[y].id));
    let mut rank = alloc::vec![0usize; records.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    let by_id: BTreeMap<&str, usize> = records
        .iter()
        .enumerate()
        .map(|(i, r)| (r.id.as_str(), i))
        .collect();

    let mut pairs: BTreeMap<(usize, usize), RelationKinds> = BTreeMap::new();
    let mut link = |x: usize, y: usize, kind: RelationKind| {
        let (p, q) = (rank[x].min(rank[y]), rank[x].max(rank[y]));
        pairs.entry((p, q)).or_default().insert(kind);
    };

    type Field = fn(&DetaineeRecord) -> &str;
    let attributes: [(RelationKind, Field); 3] = [
        (RelationKind::JointCrime, |r| &r.case_number),
        (RelationKind::FellowTownsmen, |r| &r.birth_place),
        (RelationKind::SameCrimeType, |r| &r.crime_type),
    ];
    for (kind, field) in attributes {
        let mut groups: BTreeMap<(Gender, &str), Vec<usize>> = BTreeMap::new();
        for (i, r) in records.iter().enumerate() {
            let value = field(r);
            if !value.is_empty() {
                groups.entry((r.gender, value)).or_default().push(i);
            }
        }
        for members in groups.values() {
            for (j, &x) in members.iter().enumerate() {
                for &y in &members[j + 1..] {
                    link(x, y, kind);
                }
            }
        }
    }

    for (x, r) in records.iter().enumerate() {
        for t in &r.ties {
            if let Some(&y) = by_id.get(t.as_str()) {
                if y != x && records[y].gender == r.gender {
                    link(x, y, RelationKind::DeclaredTie);
                }
            }
        }
    }

    pairs
        .into_iter()
        .map(|((p, q), kinds)| RelationEdge {
            a: records[order[p]].id.clone(),
            b: records[order[q]].id.clone(),
            kinds,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn rec(id: &str, gender: Gender, case: &str, crime: &str, place: &str) -> DetaineeRecord {
        DetaineeRecord {
            id: id.to_string(),
            room: None,
            gender,
            case_number: case.to_string(),
            crime_type: crime.to_string(),
            birth_place: place.to_string(),
            ties: Default::default(),
        }
    }

    #[test]
    fn shared_case_number() {
        let e = extract_relations(&[
            rec("a", Gender::Male, "c1", "", ""),
            rec("b", Gender::Male, "c1", "", ""),
        ]);
        assert_eq!(e.len(), 1);
        assert_eq!(
            e[0].kinds.iter().collect::<Vec<_>>(),
            [RelationKind::JointCrime]
        );
    }

    #[test]
    fn shared_birth_place_is_a_clique() {
        let e = extract_relations(&[
            rec("c", Gender::Male, "", "", "p"),
            rec("a", Gender::Male, "", "", "p"),
            rec("b", Gender::Male, "", "", "p"),
        ]);
        let pairs: Vec<_> = e.iter().map(|e| (e.a.as_str(), e.b.as_str())).collect();
        assert_eq!(pairs, [("a", "b"), ("a", "c"), ("b", "c")]);
        assert!(e
            .iter()
            .all(|e| e.kinds.contains(RelationKind::FellowTownsmen)));
    }

    #[test]
    fn genders_never_mix() {
        let e = extract_relations(&[
            rec("a", Gender::Male, "", "theft", ""),
            rec("b", Gender::Female, "", "theft", ""),
        ]);
        assert!(e.is_empty());
    }

    #[test]
    fn missing_values_do_not_match() {
        let e = extract_relations(&[
            rec("a", Gender::Female, "", "", ""),
            rec("b", Gender::Female, "", "", ""),
        ]);
        assert!(e.is_empty());
    }

    #[test]
    fn declared_ties_are_symmetrized_and_merged() {
        let mut a = rec("a", Gender::Male, "", "x", "");
        a.ties.insert("b".into());
        let b = rec("b", Gender::Male, "", "x", "");
        let e = extract_relations(&[b, a]);
        assert_eq!(e.len(), 1);
        let kinds: RelationKinds = [RelationKind::SameCrimeType, RelationKind::DeclaredTie]
            .into_iter()
            .collect();
        assert_eq!(e[0].kinds, kinds);
        assert_eq!((e[0].a.as_str(), e[0].b.as_str()), ("a", "b"));
    }
}
