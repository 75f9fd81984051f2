use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gender {
    Male,
    Female,
}

/// One coded person row.
///
/// Attribute fields are opaque codes; the empty string means the value is
/// unknown and never matches another record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetaineeRecord {
    pub id: String,
    /// Current room label, if recorded.
    pub room: Option<String>,
    pub gender: Gender,
    pub case_number: String,
    pub crime_type: String,
    pub birth_place: String,
    /// Ids of declared social relations.
    pub ties: BTreeSet<String>,
}

/// A tie dropped while resolving records.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecordWarning {
    SelfTie { id: String },
    UnknownTie { id: String, target: String },
    CrossGenderTie { id: String, target: String },
}

impl fmt::Display for RecordWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecordWarning::SelfTie { id } => {
                write!(f, "record `{id}` lists itself as a tie; dropped")
            }
            RecordWarning::UnknownTie { id, target } => {
                write!(f, "record `{id}` lists unknown tie `{target}`; dropped")
            }
            RecordWarning::CrossGenderTie { id, target } => write!(
                f,
                "record `{id}` lists tie `{target}` of the other gender; dropped"
            ),
        }
    }
}

/// Rejects duplicate ids and drops ties that cannot become links (to itself,
/// to unknown ids, or across genders), reporting each dropped tie.
pub fn resolve_records(
    mut records: Vec<DetaineeRecord>,
) -> Result<(Vec<DetaineeRecord>, Vec<RecordWarning>)> {
    let mut genders: BTreeMap<String, Gender> = BTreeMap::new();
    for r in &records {
        if genders.insert(r.id.clone(), r.gender).is_some() {
            return Err(Error::DuplicateId(r.id.clone()));
        }
    }
    let mut warnings = Vec::new();
    for r in &mut records {
        let id = &r.id;
        let gender = r.gender;
        r.ties.retain(|t| {
            let warning = match genders.get(t) {
                _ if t == id => RecordWarning::SelfTie { id: id.clone() },
                None => RecordWarning::UnknownTie {
                    id: id.clone(),
                    target: t.clone(),
                },
                Some(&g) if g != gender => RecordWarning::CrossGenderTie {
                    id: id.clone(),
                    target: t.clone(),
                },
                Some(_) => return true,
            };
            warnings.push(warning);
            false
        });
    }
    Ok((records, warnings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn rec(id: &str, gender: Gender, ties: &[&str]) -> DetaineeRecord {
        DetaineeRecord {
            id: id.to_string(),
            room: None,
            gender,
            case_number: String::new(),
            crime_type: String::new(),
            birth_place: String::new(),
            ties: ties.iter().map(|t| t.to_string()).collect(),
        }
    }

    #[test]
    fn self_tie_dropped_with_warning() {
        let (rs, ws) = resolve_records(vec![rec("a", Gender::Male, &["a"])]).unwrap();
        assert!(rs[0].ties.is_empty());
        assert_eq!(ws, vec![RecordWarning::SelfTie { id: "a".into() }]);
    }

    #[test]
    fn unknown_and_cross_gender_ties_dropped() {
        let (rs, ws) = resolve_records(vec![
            rec("a", Gender::Male, &["b", "c", "zz"]),
            rec("b", Gender::Male, &[]),
            rec("c", Gender::Female, &[]),
        ])
        .unwrap();
        assert_eq!(rs[0].ties.iter().collect::<Vec<_>>(), vec!["b"]);
        assert_eq!(ws.len(), 2);
    }

    #[test]
    fn duplicate_id_is_an_error() {
        let err = resolve_records(vec![
            rec("a", Gender::Male, &[]),
            rec("a", Gender::Female, &[]),
        ])
        .unwrap_err();
        assert_eq!(err, Error::DuplicateId("a".into()));
    }
}
