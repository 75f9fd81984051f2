//! Coded person records as CSV.
//!
//! Header: `id,room,gender,case_number,crime_type,birth_place,ties`. `gender`
//! is `M` or `F`; `ties` is a `;`-separated id list. Empty cells mean the
//! value is unknown.

use std::io::Read;

use roomalloc_core::instances::{resolve_records, DetaineeRecord, Gender, RecordWarning};

use super::FormatError;

pub const HEADER: [&str; 7] = [
    "id",
    "room",
    "gender",
    "case_number",
    "crime_type",
    "birth_place",
    "ties",
];

/// Parses and resolves records. Dropped ties come back as warnings;
/// duplicate ids and malformed rows are errors.
pub fn parse_records<R: Read>(
    input: R,
) -> Result<(Vec<DetaineeRecord>, Vec<RecordWarning>), FormatError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(input);
    let header = reader.headers().map_err(|e| csv_error(e, 1))?.clone();
    if header.iter().collect::<Vec<_>>() != HEADER {
        return Err(FormatError::syntax(
            1,
            format!("expected header `{}`", HEADER.join(",")),
        ));
    }

    let mut records = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| csv_error(e, 0))?;
        let line = row.position().map_or(0, |p| p.line() as usize);
        let field = |i: usize| row.get(i).unwrap_or_default().trim().to_string();
        let id = field(0);
        if id.is_empty() {
            return Err(FormatError::syntax(line, "empty id"));
        }
        let gender = match field(2).as_str() {
            "M" | "m" => Gender::Male,
            "F" | "f" => Gender::Female,
            other => {
                return Err(FormatError::syntax(
                    line,
                    format!("gender must be M or F, found {other:?}"),
                ))
            }
        };
        let room = Some(field(1)).filter(|r| !r.is_empty());
        let ties = field(6)
            .split(';')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::to_string)
            .collect();
        records.push(DetaineeRecord {
            id,
            room,
            gender,
            case_number: field(3),
            crime_type: field(4),
            birth_place: field(5),
            ties,
        });
    }
    Ok(resolve_records(records)?)
}

fn csv_error(e: csv::Error, fallback_line: usize) -> FormatError {
    let line = e.position().map_or(fallback_line, |p| p.line() as usize);
    let message = match e.kind() {
        csv::ErrorKind::UnequalLengths {
            len, expected_len, ..
        } => {
            format!("expected {expected_len} fields, found {len}")
        }
        _ => e.to_string(),
    };
    FormatError::syntax(line, message)
}

/// Serializes records in the same CSV layout.
pub fn write_records(records: &[DetaineeRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(HEADER).expect("in-memory write");
    for r in records {
        let ties: Vec<&str> = r.ties.iter().map(String::as_str).collect();
        let gender = match r.gender {
            Gender::Male => "M",
            Gender::Female => "F",
        };
        w.write_record([
            r.id.as_str(),
            r.room.as_deref().unwrap_or(""),
            gender,
            &r.case_number,
            &r.crime_type,
            &r.birth_place,
            &ties.join(";"),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEAD: &str = "id,room,gender,case_number,crime_type,birth_place,ties\n";

    #[test]
    fn three_rows() {
        let text = format!("{HEAD}a,R1,M,c1,theft,p1,b\nb,R1,M,c1,,p2,\nc,,F,,fraud,p1,\n");
        let (rs, ws) = parse_records(text.as_bytes()).unwrap();
        assert_eq!(rs.len(), 3);
        assert!(ws.is_empty());
        assert_eq!(rs[0].room.as_deref(), Some("R1"));
        assert_eq!(rs[2].room, None);
        assert_eq!(rs[2].gender, Gender::Female);
        assert!(rs[0].ties.contains("b"));
        assert_eq!(rs[1].crime_type, "");
    }

    #[test]
    fn self_tie_becomes_warning() {
        let text = format!("{HEAD}a,,M,,,,a;a\n");
        let (rs, ws) = parse_records(text.as_bytes()).unwrap();
        assert!(rs[0].ties.is_empty());
        assert_eq!(ws, vec![RecordWarning::SelfTie { id: "a".into() }]);
    }

    #[test]
    fn duplicate_id_is_fatal() {
        let text = format!("{HEAD}a,,M,,,,\na,,F,,,,\n");
        let err = parse_records(text.as_bytes()).unwrap_err();
        assert!(err.to_string().contains("duplicate record id `a`"), "{err}");
    }

    #[test]
    fn malformed_row_names_its_line() {
        let text = format!("{HEAD}a,,M,,,,\nb,,M\n");
        let err = parse_records(text.as_bytes()).unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 3, .. }), "{err}");
        let text = format!("{HEAD}a,,X,,,,\n");
        let err = parse_records(text.as_bytes()).unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 2, .. }), "{err}");
    }

    #[test]
    fn wrong_header() {
        let err = parse_records("id,gender\na,M\n".as_bytes()).unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 1, .. }));
    }

    #[test]
    fn header_only() {
        let (rs, _) = parse_records(HEAD.as_bytes()).unwrap();
        assert!(rs.is_empty());
    }

    #[test]
    fn writes_back_what_it_reads() {
        let text = format!("{HEAD}a,R1,M,c1,theft,p1,b;c\nb,,M,,,,\nc,,M,,,,\n");
        let (rs, _) = parse_records(text.as_bytes()).unwrap();
        assert_eq!(write_records(&rs), text);
    }
}
