use std::collections::BTreeSet;

use proptest::prelude::*;
use roomalloc_core::instances::{
    build_networks, extract_relations, gen_planted, gen_scale_free, planted_block_sizes,
    planted_p_out_for_degree, resolve_records, DetaineeRecord, Gender, RelationKind,
};
use roomalloc_core::stats;

fn arb_records(max: usize) -> impl Strategy<Value = Vec<DetaineeRecord>> {
    let code = prop::sample::select(vec!["", "a", "b", "c"]);
    let row = (
        any::<bool>(),
        code.clone(),
        code.clone(),
        code,
        prop::collection::btree_set(0usize..max + 2, 0..3),
        prop::option::of(prop::sample::select(vec!["R1", "R2", "R3"])),
    );
    prop::collection::vec(row, 1..=max).prop_map(|rows| {
        rows.into_iter()
            .enumerate()
            .map(
                |(i, (male, case, crime, place, ties, room))| DetaineeRecord {
                    id: format!("d{i:03}"),
                    room: room.map(String::from),
                    gender: if male { Gender::Male } else { Gender::Female },
                    case_number: case.to_string(),
                    crime_type: crime.to_string(),
                    birth_place: place.to_string(),
                    ties: ties.into_iter().map(|t| format!("d{t:03}")).collect(),
                },
            )
            .collect()
    })
}

/// Kinds linking `x` and `y`, by direct comparison of the two records.
fn pair_kinds(x: &DetaineeRecord, y: &DetaineeRecord) -> BTreeSet<RelationKind> {
    let mut kinds = BTreeSet::new();
    if x.gender != y.gender || x.id == y.id {
        return kinds;
    }
    let same = |a: &str, b: &str| !a.is_empty() && a == b;
    if same(&x.case_number, &y.case_number) {
        kinds.insert(RelationKind::JointCrime);
    }
    if same(&x.birth_place, &y.birth_place) {
        kinds.insert(RelationKind::FellowTownsmen);
    }
    if same(&x.crime_type, &y.crime_type) {
        kinds.insert(RelationKind::SameCrimeType);
    }
    if x.ties.contains(&y.id) || y.ties.contains(&x.id) {
        kinds.insert(RelationKind::DeclaredTie);
    }
    kinds
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn extraction_matches_pairwise_audit(raw in arb_records(50)) {
        let (records, _warnings) = resolve_records(raw).unwrap();
        let edges = extract_relations(&records);
        let mut expected = Vec::new();
        for (i, x) in records.iter().enumerate() {
            for y in &records[i + 1..] {
                let kinds = pair_kinds(x, y);
                if !kinds.is_empty() {
                    let (a, b) = if x.id < y.id { (x, y) } else { (y, x) };
                    expected.push((a.id.clone(), b.id.clone(), kinds));
                }
            }
        }
        expected.sort();
        let got: Vec<_> = edges
            .iter()
            .map(|e| (e.a.clone(), e.b.clone(), e.kinds.iter().collect::<BTreeSet<_>>()))
            .collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn extraction_ignores_record_order(raw in arb_records(30), rot in 0usize..30) {
        let (records, _) = resolve_records(raw).unwrap();
        let mut rotated = records.clone();
        let r = rot % rotated.len();
        rotated.rotate_left(r);
        prop_assert_eq!(extract_relations(&records), extract_relations(&rotated));
    }

    #[test]
    fn networks_split_by_gender(raw in arb_records(40)) {
        let (records, _) = resolve_records(raw).unwrap();
        let edges = extract_relations(&records);
        let bundle = build_networks("t", &records, &edges);
        let males = records.iter().filter(|r| r.gender == Gender::Male).count();
        prop_assert_eq!(bundle.male.graph.node_count(), males);
        prop_assert_eq!(bundle.female.graph.node_count(), records.len() - males);
        prop_assert_eq!(bundle.male.graph.edge_count() + bundle.female.graph.edge_count(), edges.len());
        for net in [&bundle.male, &bundle.female] {
            let members: Vec<_> = records.iter().filter(|r| net.graph.contains(&r.id)).collect();
            let labelled = members.iter().all(|r| r.room.is_some());
            prop_assert_eq!(net.manual.is_some(), labelled && !members.is_empty());
            if let Some(m) = &net.manual {
                for r in &members {
                    let room = m.assignment.room_of(&r.id).unwrap();
                    prop_assert_eq!(Some(&m.labels[room]), r.room.as_ref());
                }
            }
        }
    }
}

#[test]
fn planted_average_degree_tracks_calibration() {
    let (n, blocks, p_in, target) = (190, 16, 0.4, 22.305);
    let p_out = planted_p_out_for_degree(n, blocks, p_in, target).unwrap();
    let mean: f64 = (0..30)
        .map(|seed| {
            stats(&gen_planted(n, blocks, p_in, p_out, seed).unwrap())
                .avg_degree
                .unwrap()
                .value()
        })
        .sum::<f64>()
        / 30.0;
    assert!((mean - target).abs() <= 0.15 * target, "mean degree {mean}");
}

#[test]
fn planted_blocks_are_denser_inside() {
    let n = 120;
    let g = gen_planted(n, 4, 0.6, 0.02, 9).unwrap();
    let sizes = planted_block_sizes(n, 4);
    assert_eq!(sizes.iter().sum::<usize>(), n);
    let block = |v: usize| v * 4 / n;
    let inside = g.edges().filter(|&(a, b)| block(a) == block(b)).count();
    assert!(inside * 2 > g.edge_count());
}

#[test]
fn scale_free_has_hubs() {
    let g = gen_scale_free(500, 3, 5).unwrap();
    assert_eq!(g.node_count(), 500);
    let mut degrees: Vec<usize> = (0..500).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    let median = degrees[250];
    let max = *degrees.last().unwrap();
    assert!(max >= 3 * median, "max {max}, median {median}");
    assert_eq!(stats(&g).components, 1);
}

#[test]
fn generators_are_seeded() {
    assert_eq!(
        gen_planted(40, 4, 0.5, 0.1, 1).unwrap(),
        gen_planted(40, 4, 0.5, 0.1, 1).unwrap()
    );
    assert_ne!(
        gen_planted(40, 4, 0.5, 0.1, 1).unwrap(),
        gen_planted(40, 4, 0.5, 0.1, 2).unwrap()
    );
    assert_eq!(
        gen_scale_free(60, 2, 4).unwrap(),
        gen_scale_free(60, 2, 4).unwrap()
    );
}
