//! JSON file formats for groupoids and relational structures.
//!
//! Groupoid: `{"ground": ["1","2","3"], "generators": [{"map": {"1": "2"}}]}`.
//! `ground` may also be a number `n`, meaning labels `1..n`.
//!
//! Structure: `{"ground": 3, "relations": [{"name": "rho", "arity": 2,
//! "tuples": [[0, 1]]}]}` with 0-based point indices. With a
//! `"multiplicities"` object (`{"0": "inf", "1": 5}`, keyed by label or
//! index) the file describes a layered blow-up of that quotient; a relation
//! may then carry `"distinct": true`, and `"equivalence": false` drops the
//! block equivalence.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupoid::{default_labels, LocalBijection, PermutationGroupoid};
use crate::relational::{LayeredStructure, Multiplicity, Relation, RelationalStructure};

#[derive(Deserialize, Serialize)]
#[serde(untagged)]
enum Ground {
    Size(usize),
    Labels(Vec<String>),
}

impl Ground {
    fn labels(self, numbering_from: usize) -> Vec<String> {
        match self {
            Ground::Size(n) => (numbering_from..numbering_from + n).map(|i| i.to_string()).collect(),
            Ground::Labels(l) => l,
        }
    }
}

#[derive(Deserialize, Serialize)]
struct MapJson {
    map: BTreeMap<String, String>,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct GroupoidJson {
    ground: Ground,
    #[serde(default)]
    generators: Vec<MapJson>,
}

#[derive(Serialize)]
struct ElementsJson<'a> {
    ground: &'a [String],
    elements: Vec<MapJson>,
}

fn label_index(labels: &[String], label: &str) -> Result<usize> {
    labels.iter().position(|l| l == label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
}

pub fn parse_groupoid(text: &str) -> Result<PermutationGroupoid> {
    let json: GroupoidJson = serde_json::from_str(text)?;
    let labels = json.ground.labels(1);
    let mut generators = Vec::new();
    for g in &json.generators {
        let pairs = g
            .map
            .iter()
            .map(|(a, b)| Ok((label_index(&labels, a)?, label_index(&labels, b)?)))
            .collect::<Result<Vec<_>>>()?;
        generators.push(LocalBijection::new(pairs)?);
    }
    let g = PermutationGroupoid::close(labels.len(), &generators)?;
    if labels == default_labels(labels.len()) {
        Ok(g)
    } else {
        g.with_labels(labels)
    }
}

pub fn read_groupoid<P: AsRef<Path>>(path: P) -> Result<PermutationGroupoid> {
    parse_groupoid(&std::fs::read_to_string(path)?)
}

fn map_json(f: &LocalBijection, labels: &[String]) -> MapJson {
    MapJson { map: f.pairs().iter().map(|&(a, b)| (labels[a].clone(), labels[b].clone())).collect() }
}

/// Generator file whose closure is `g`: every element listed.
pub fn groupoid_to_json(g: &PermutationGroupoid) -> String {
    let out = ElementsJson { ground: g.labels(), elements: g.elements().iter().map(|f| map_json(f, g.labels())).collect() };
    serde_json::to_string_pretty(&out).expect("plain data serializes")
}

/// Generator file with the given generators.
pub fn generators_to_json(labels: &[String], generators: &[LocalBijection]) -> String {
    let out = GroupoidJson {
        ground: Ground::Labels(labels.to_vec()),
        generators: generators.iter().map(|f| map_json(f, labels)).collect(),
    };
    serde_json::to_string_pretty(&out).expect("plain data serializes")
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RelationJson {
    name: String,
    arity: usize,
    #[serde(default)]
    tuples: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    distinct: bool,
}

#[derive(Deserialize, Serialize)]
#[serde(untagged)]
enum MultiplicityJson {
    Count(usize),
    Word(String),
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct StructureJson {
    ground: Ground,
    #[serde(default)]
    relations: Vec<RelationJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    multiplicities: Option<BTreeMap<String, MultiplicityJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    equivalence: Option<bool>,
}

/// Contents of a structure file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureFile {
    Finite(RelationalStructure),
    Layered(LayeredStructure),
}

pub fn parse_structure(text: &str) -> Result<StructureFile> {
    let json: StructureJson = serde_json::from_str(text)?;
    let labels = json.ground.labels(0);
    let relations: Vec<Relation> =
        json.relations.iter().map(|r| Relation::new(&r.name, r.arity, r.tuples.iter().cloned())).collect();
    let quotient = RelationalStructure::with_labels(labels.clone(), relations)?;
    let Some(mults) = json.multiplicities else {
        if json.relations.iter().any(|r| r.distinct) || json.equivalence.is_some() {
            return Err(Error::Invalid("\"distinct\" and \"equivalence\" need \"multiplicities\"".into()));
        }
        return Ok(StructureFile::Finite(quotient));
    };
    let mut m = vec![None; labels.len()];
    for (key, value) in &mults {
        let i = match labels.iter().position(|l| l == key) {
            Some(i) => i,
            None => key.parse::<usize>().ok().filter(|&i| i < labels.len()).ok_or_else(|| Error::UnknownLabel(key.clone()))?,
        };
        m[i] = Some(match value {
            MultiplicityJson::Count(c) => Multiplicity::Finite(*c),
            MultiplicityJson::Word(w) if w == "inf" || w == "unbounded" => Multiplicity::Unbounded,
            MultiplicityJson::Word(w) => return Err(Error::Invalid(format!("multiplicity {w:?} is not a count or \"inf\""))),
        });
    }
    let m = m
        .into_iter()
        .enumerate()
        .map(|(i, x)| x.ok_or_else(|| Error::Invalid(format!("no multiplicity for component {}", labels[i]))))
        .collect::<Result<Vec<_>>>()?;
    let mut l = LayeredStructure::new(quotient, m)?.with_block_equivalence(json.equivalence.unwrap_or(true));
    for r in json.relations.iter().filter(|r| r.distinct) {
        l = l.with_distinct(&r.name)?;
    }
    Ok(StructureFile::Layered(l))
}

pub fn read_structure<P: AsRef<Path>>(path: P) -> Result<StructureFile> {
    parse_structure(&std::fs::read_to_string(path)?)
}

fn relations_json(s: &RelationalStructure, distinct: impl Fn(usize) -> bool) -> Vec<RelationJson> {
    s.relations()
        .iter()
        .enumerate()
        .map(|(i, r)| RelationJson {
            name: r.name.clone(),
            arity: r.arity,
            tuples: r.tuples.iter().cloned().collect(),
            distinct: distinct(i),
        })
        .collect()
}

pub fn structure_to_json(s: &StructureFile) -> String {
    let json = match s {
        StructureFile::Finite(r) => StructureJson {
            ground: Ground::Labels(r.labels().to_vec()),
            relations: relations_json(r, |_| false),
            multiplicities: None,
            equivalence: None,
        },
        StructureFile::Layered(l) => {
            let q = l.quotient();
            StructureJson {
                ground: Ground::Labels(q.labels().to_vec()),
                relations: relations_json(q, |i| l.is_distinct(i)),
                multiplicities: Some(
                    q.labels()
                        .iter()
                        .zip(l.multiplicities())
                        .map(|(label, m)| {
                            let v = match m {
                                Multiplicity::Finite(c) => MultiplicityJson::Count(*c),
                                Multiplicity::Unbounded => MultiplicityJson::Word("inf".into()),
                            };
                            (label.clone(), v)
                        })
                        .collect(),
                ),
                equivalence: Some(l.has_block_equivalence()),
            }
        }
    };
    serde_json::to_string_pretty(&json).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groupoid_round_trip() {
        let g = parse_groupoid(r#"{"ground": ["1","2","3"], "generators": [{"map": {"1": "2"}}]}"#).unwrap();
        assert_eq!(g.len(), 10);
        let listed = groupoid_to_json(&g).replace("\"elements\"", "\"generators\"");
        assert_eq!(parse_groupoid(&listed).unwrap(), g);
        let named = parse_groupoid(r#"{"ground": ["a","b"], "generators": [{"map": {"a": "b", "b": "a"}}]}"#).unwrap();
        assert_eq!(named.labels(), ["a", "b"]);
        assert_eq!(named.len(), 7);
        assert_eq!(parse_groupoid(r#"{"ground": 3}"#).unwrap().len(), 8);
    }

    #[test]
    fn groupoid_errors() {
        assert!(matches!(parse_groupoid(r#"{"ground": ["1"], "generators": [{"map": {"1": "9"}}]}"#), Err(Error::UnknownLabel(_))));
        assert!(matches!(parse_groupoid(r#"{"ground": 2, "generators": [{"map": {"1": "2", "2": "2"}}]}"#), Err(Error::NotInjective { .. })));
        let err = parse_groupoid("{\"ground\": [1,").unwrap_err();
        assert!(err.to_string().contains("line 1"));
    }

    #[test]
    fn structure_round_trip() {
        let text = r#"{"ground": 2, "relations": [{"name": "edge", "arity": 2, "tuples": [[0,0],[1,1]], "distinct": true}],
                       "multiplicities": {"0": "inf", "1": 5}, "equivalence": false}"#;
        let s = parse_structure(text).unwrap();
        let StructureFile::Layered(l) = &s else { panic!("layered expected") };
        assert_eq!(l.multiplicities(), &[Multiplicity::Unbounded, Multiplicity::Finite(5)]);
        assert!(l.is_distinct(0) && !l.has_block_equivalence());
        assert_eq!(parse_structure(&structure_to_json(&s)).unwrap(), s);

        let finite = parse_structure(r#"{"ground": 3, "relations": [{"name": "lt", "arity": 2, "tuples": [[0,1],[1,2],[0,2]]}]}"#).unwrap();
        assert!(matches!(finite, StructureFile::Finite(_)));
        assert_eq!(parse_structure(&structure_to_json(&finite)).unwrap(), finite);
    }

    #[test]
    fn structure_errors() {
        assert!(matches!(parse_structure(r#"{"ground": 2, "relations": [{"name": "r", "arity": 2, "tuples": [[0]]}]}"#), Err(Error::BadTuple { .. })));
        assert!(matches!(parse_structure(r#"{"ground": 2, "multiplicities": {"0": "inf"}}"#), Err(Error::Invalid(_))));
        assert!(matches!(parse_structure(r#"{"ground": 1, "multiplicities": {"0": "lots"}}"#), Err(Error::Invalid(_))));
    }
}
