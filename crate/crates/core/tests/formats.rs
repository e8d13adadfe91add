use pgroupoid::fixtures;
use pgroupoid::io::{generators_to_json, parse_groupoid, parse_structure, structure_to_json, StructureFile};
use pgroupoid::relational::Multiplicity;
use pgroupoid::{LocalBijection, PermutationGroupoid};

#[test]
fn every_fixture_round_trips() {
    for (name, g) in fixtures::all_groupoids() {
        let text = generators_to_json(g.labels(), g.elements());
        assert_eq!(parse_groupoid(&text).unwrap(), g, "{name}");
    }
    for (name, _) in fixtures::STRUCTURES {
        let s = fixtures::structure(name).unwrap();
        assert_eq!(parse_structure(&structure_to_json(&s)).unwrap(), s, "{name}");
    }
}

#[test]
fn labels_are_kept() {
    let g = parse_groupoid(r#"{"ground": ["a", "b", "c"], "generators": [{"map": {"a": "c"}}]}"#).unwrap();
    assert_eq!(g.labels(), ["a", "b", "c"]);
    let expected = PermutationGroupoid::close(3, &[LocalBijection::new([(0, 2)]).unwrap()]).unwrap();
    assert_eq!(g.elements(), expected.elements());
}

#[test]
fn multiplicities_by_label() {
    let s = parse_structure(
        r#"{"ground": ["centre", "rim"], "relations": [{"name": "e", "arity": 2, "tuples": [[0, 1]]}],
            "multiplicities": {"centre": 1, "rim": "unbounded"}}"#,
    )
    .unwrap();
    let StructureFile::Layered(l) = s else { panic!("layered expected") };
    assert_eq!(l.multiplicities(), &[Multiplicity::Finite(1), Multiplicity::Unbounded]);
    assert!(l.has_block_equivalence());
}

#[test]
fn malformed_files_are_rejected() {
    assert!(parse_groupoid(r#"{"ground": 2, "gens": []}"#).is_err());
    assert!(parse_structure(r#"{"ground": 2, "relations": [{"name": "r", "arity": 1, "tuples": [[5]]}]}"#).is_err());
    assert!(parse_structure(r#"{"ground": 1, "multiplicities": {"0": 0}}"#).is_err());
    assert!(parse_structure(r#"{"ground": 1, "relations": [{"name": "r", "arity": 1, "distinct": true}]}"#).is_err());
}
