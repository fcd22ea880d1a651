use std::collections::BTreeMap;
use std::path::PathBuf;

use eqposet_core::correspond::{check_table_correspondence, pair_components, TableFixture};
use eqposet_core::io::{parse_poset, read_poset, to_dot, to_json, to_json_value, write_poset};
use eqposet_core::knit::{check_invariants, knit_component};
use eqposet_core::oracle::{verify, FieldSpec};
use eqposet_core::{build_model, EquippedPoset, Flavor};

fn dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(sub)
}

fn posets() -> Vec<(String, EquippedPoset)> {
    let mut paths: Vec<_> = std::fs::read_dir(dir("posets"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "poset"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            let pos = read_poset(&p).unwrap_or_else(|e| panic!("{name}: {e}"));
            (name, pos)
        })
        .collect()
}

fn tower(p: u32) -> FieldSpec {
    match p {
        2 => FieldSpec::cyclic(2, 3, -1),
        _ => {
            let mut s = FieldSpec::cyclic(3, 7, 3);
            s.omega = Some(2);
            s
        }
    }
}

#[test]
fn fixture_posets_parse_and_round_trip() {
    let all = posets();
    assert!(all.len() >= 10);
    for (name, pos) in &all {
        assert!(pos.len() <= 5, "{name}");
        assert_eq!(&parse_poset(&write_poset(pos)).unwrap(), pos, "{name}");
    }
}

#[test]
fn fixture_posets_knit_and_pair() {
    for (name, pos) in posets() {
        let mr = build_model(&pos, Flavor::R).unwrap();
        let mc = build_model(&pos, Flavor::C).unwrap();
        let gr = knit_component(&mr, 12).unwrap();
        let gc = knit_component(&mc, 12).unwrap();
        for (m, g) in [(&mr, &gr), (&mc, &gc)] {
            for c in check_invariants(m, g) {
                assert!(c.passed, "{name}: {} {}", c.name, c.detail);
            }
        }
        let report = pair_components(&gr, &gc, &mr, &mc);
        assert!(report.verdict, "{name}: {:?}", report.first_failure());
    }
}

#[test]
fn fixture_posets_pass_the_oracle() {
    for (name, pos) in posets() {
        for flavor in [Flavor::R, Flavor::C] {
            let report = verify(&pos, flavor, &tower(pos.p())).unwrap();
            assert!(report.passed(), "{name} {flavor}: {:?}", report.checks);
        }
    }
}

#[test]
fn json_is_deterministic_and_matches_dot() {
    for (name, pos) in posets() {
        let model = build_model(&pos, Flavor::R).unwrap();
        let g1 = knit_component(&model, 12).unwrap();
        let g2 = knit_component(&model, 12).unwrap();
        assert_eq!(to_json(&g1), to_json(&g2), "{name}");

        let json = to_json_value(&g1);
        let dot = to_dot(&g1);
        let nodes = dot
            .lines()
            .filter(|l| l.trim_start().starts_with('v') && !l.contains("->"))
            .count();
        assert_eq!(nodes, json["vertices"].as_array().unwrap().len(), "{name}");
        let mut from_dot = BTreeMap::new();
        for line in dot.lines().filter(|l| l.contains("->")) {
            let parts: Vec<&str> = line
                .split(|c: char| c == '"' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .collect();
            let key = (
                parts[0].to_string(),
                parts[2].to_string(),
                parts[4].to_string(),
            );
            *from_dot.entry(key).or_insert(0) += 1;
        }
        let mut from_json = BTreeMap::new();
        for a in json["arrows"].as_array().unwrap() {
            let key = (
                format!("v{}", a["src"]),
                format!("v{}", a["dst"]),
                format!("({},{})", a["a"], a["b"]),
            );
            *from_json.entry(key).or_insert(0) += 1;
        }
        assert_eq!(from_dot, from_json, "{name}");
    }
}

#[test]
fn star_dot_has_valuation_labels() {
    let pos = read_poset(dir("posets").join("star_p2.poset")).unwrap();
    let g = knit_component(&build_model(&pos, Flavor::R).unwrap(), 12).unwrap();
    let dot = to_dot(&g);
    assert!(dot.contains("label=\"(2,1)\""));
    assert!(dot.contains("label=\"(1,2)\""));
    assert_eq!(dot.matches(" [label=\"").count(), 3 + 2);
}

#[test]
fn table_fixtures_correspond() {
    let mut counts = BTreeMap::new();
    for entry in std::fs::read_dir(dir("tables")).unwrap() {
        let path = entry.unwrap().path();
        let fixture = TableFixture::load(&path).unwrap();
        let report = check_table_correspondence(&fixture);
        assert!(report.passed(), "{:?}", report);
        counts.insert(fixture.name.clone(), fixture.vector_count());
    }
    let expected: BTreeMap<String, usize> = [
        ("chain_p3", 12),
        ("reoriented_p3", 12),
        ("two_point_p2", 4),
        ("two_point_p3", 6),
        ("wild_p3", 12),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();
    assert_eq!(counts, expected);
}
