//! The instance document: one JSON file with optional named sections. All
//! sections are plain index data; conversion into core values performs the
//! range checking, so a malformed document surfaces as a semantic error
//! rather than a panic.

use serde::{Deserialize, Serialize};

use orbitgames_core::groupoids::FiniteGroupoid;
use orbitgames_core::models::{Relation, RelStructure, SeqInstance};
use orbitgames_core::sets::{IdxSet, MAX_INDEX};
use orbitgames_core::{FiniteSpace, GroupAction, TopGroup};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<SpaceDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<ActionDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub groupoid: Option<GroupoidDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structures: Option<Vec<StructureDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sequences: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpaceDoc {
    pub n_points: usize,
    pub basis: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub order: usize,
    pub identity: usize,
    /// Row-major, `order * order` entries.
    pub mult: Vec<usize>,
    pub inv: Vec<usize>,
    pub filter_chain: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ActionDoc {
    /// `order` rows of `n_points` entries.
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupoidDoc {
    pub n_arrows: usize,
    /// Object flags, one per arrow.
    pub objects: Vec<bool>,
    pub src: Vec<usize>,
    pub rng: Vec<usize>,
    /// Composition as `(left, right, composite)` triples.
    pub comp: Vec<[usize; 3]>,
    pub inv: Vec<usize>,
    pub basis: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureDoc {
    pub universe_size: usize,
    pub relations: Vec<RelationDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationDoc {
    pub name: String,
    pub arity: usize,
    pub tuples: Vec<Vec<usize>>,
}

fn semantic(msg: impl Into<String>) -> CliError {
    CliError::Semantic(msg.into())
}

fn check_set(ids: &[usize], carrier: usize, what: &str) -> Result<IdxSet, CliError> {
    if carrier > MAX_INDEX {
        return Err(semantic(format!("{what}: carrier size {carrier} exceeds {MAX_INDEX}")));
    }
    let mut set = IdxSet::EMPTY;
    for &i in ids {
        if i >= carrier {
            return Err(semantic(format!("{what}: index {i} out of range 0..{carrier}")));
        }
        set.insert(i);
    }
    Ok(set)
}

impl InstanceDoc {
    pub fn parse(text: &str) -> Result<InstanceDoc, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn to_space(&self) -> Result<FiniteSpace, CliError> {
        let doc = self
            .space
            .as_ref()
            .ok_or_else(|| semantic("document has no `space` section"))?;
        if doc.n_points > MAX_INDEX {
            return Err(semantic(format!(
                "space has {} points, limit is {MAX_INDEX}",
                doc.n_points
            )));
        }
        let basis = doc
            .basis
            .iter()
            .map(|b| check_set(b, doc.n_points, "space basis"))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteSpace::new(doc.n_points, basis))
    }

    pub fn to_group(&self) -> Result<TopGroup, CliError> {
        let doc = self
            .group
            .as_ref()
            .ok_or_else(|| semantic("document has no `group` section"))?;
        let n = doc.order;
        if n == 0 || n > MAX_INDEX {
            return Err(semantic(format!("group order {n} out of range 1..{MAX_INDEX}")));
        }
        if doc.mult.len() != n * n {
            return Err(semantic(format!(
                "mult table has {} entries, expected {}",
                doc.mult.len(),
                n * n
            )));
        }
        if doc.inv.len() != n {
            return Err(semantic("inverse table length must equal the order"));
        }
        if doc.identity >= n {
            return Err(semantic("identity element out of range"));
        }
        for &v in doc.mult.iter().chain(doc.inv.iter()) {
            if v >= n {
                return Err(semantic(format!("group table entry {v} out of range")));
            }
        }
        let chain = doc
            .filter_chain
            .iter()
            .map(|v| check_set(v, n, "filter chain"))
            .collect::<Result<Vec<_>, _>>()?;
        if chain.is_empty() {
            return Err(semantic("filter chain must be nonempty"));
        }
        Ok(TopGroup::new(n, doc.mult.clone(), doc.identity, doc.inv.clone(), chain))
    }

    pub fn to_action(&self) -> Result<GroupAction, CliError> {
        let space = self.to_space()?;
        let group = self.to_group()?;
        let doc = self
            .action
            .as_ref()
            .ok_or_else(|| semantic("document has no `action` section"))?;
        if doc.table.len() != group.order() {
            return Err(semantic("action table must have one row per group element"));
        }
        for row in &doc.table {
            if row.len() != space.n_points() {
                return Err(semantic("action row length must equal the point count"));
            }
            for &p in row {
                if p >= space.n_points() {
                    return Err(semantic(format!("action target {p} out of range")));
                }
            }
        }
        Ok(GroupAction::new(group, space, doc.table.clone()))
    }

    pub fn to_groupoid(&self) -> Result<FiniteGroupoid, CliError> {
        let doc = self
            .groupoid
            .as_ref()
            .ok_or_else(|| semantic("document has no `groupoid` section"))?;
        let n = doc.n_arrows;
        if n > MAX_INDEX {
            return Err(semantic(format!("arrow count {n} exceeds {MAX_INDEX}")));
        }
        if doc.objects.len() != n || doc.src.len() != n || doc.rng.len() != n || doc.inv.len() != n
        {
            return Err(semantic("groupoid arrays must have one entry per arrow"));
        }
        for &a in doc.src.iter().chain(doc.rng.iter()).chain(doc.inv.iter()) {
            if a >= n {
                return Err(semantic(format!("arrow index {a} out of range")));
            }
        }
        let objects = IdxSet::from_indices(
            doc.objects
                .iter()
                .enumerate()
                .filter(|(_, &f)| f)
                .map(|(i, _)| i),
        );
        let mut triples = Vec::new();
        for &[g, r, c] in &doc.comp {
            if g >= n || r >= n || c >= n {
                return Err(semantic("composition triple index out of range"));
            }
            triples.push((g, r, c));
        }
        let basis = doc
            .basis
            .iter()
            .map(|b| check_set(b, n, "groupoid basis"))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteGroupoid::from_comp_triples(
            n,
            objects,
            doc.src.clone(),
            doc.rng.clone(),
            &triples,
            doc.inv.clone(),
            basis,
        ))
    }

    pub fn to_structures(&self) -> Result<Vec<RelStructure>, CliError> {
        let docs = self
            .structures
            .as_ref()
            .ok_or_else(|| semantic("document has no `structures` section"))?;
        docs.iter()
            .map(|s| {
                let relations = s
                    .relations
                    .iter()
                    .map(|r| {
                        let mut tuples = std::collections::BTreeSet::new();
                        for t in &r.tuples {
                            if t.len() != r.arity {
                                return Err(semantic(format!(
                                    "tuple {t:?} does not match arity {} of {}",
                                    r.arity, r.name
                                )));
                            }
                            for &v in t {
                                if v >= s.universe_size {
                                    return Err(semantic(format!(
                                        "tuple entry {v} outside universe of size {}",
                                        s.universe_size
                                    )));
                                }
                            }
                            tuples.insert(t.clone());
                        }
                        Ok(Relation {
                            name: r.name.clone(),
                            arity: r.arity,
                            tuples,
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(RelStructure::new(s.universe_size, relations))
            })
            .collect()
    }

    pub fn to_sequences(&self) -> Result<Vec<SeqInstance>, CliError> {
        let docs = self
            .sequences
            .as_ref()
            .ok_or_else(|| semantic("document has no `sequences` section"))?;
        docs.iter()
            .map(|entries| {
                entries
                    .iter()
                    .map(|letter| parse_letter(letter))
                    .collect::<Result<Vec<u8>, _>>()
                    .map(SeqInstance::new)
            })
            .collect()
    }
}

pub fn parse_letter(letter: &str) -> Result<u8, CliError> {
    let mut chars = letter.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) if c.is_ascii_lowercase() => Ok(c as u8 - b'a'),
        _ => Err(semantic(format!(
            "sequence letter {letter:?} must be a single lowercase ascii letter"
        ))),
    }
}

pub fn letter_name(index: u8) -> String {
    ((b'a' + index) as char).to_string()
}

/// Renders a core action as a document.
pub fn doc_from_action(name: &str, action: &GroupAction) -> InstanceDoc {
    let space = action.space();
    let group = action.group();
    let order = group.order();
    InstanceDoc {
        name: Some(name.to_string()),
        space: Some(SpaceDoc {
            n_points: space.n_points(),
            basis: space.basis().iter().map(|b| b.to_vec()).collect(),
        }),
        group: Some(GroupDoc {
            order,
            identity: group.identity(),
            mult: (0..order)
                .flat_map(|g| (0..order).map(move |h| (g, h)))
                .map(|(g, h)| group.mul(g, h))
                .collect(),
            inv: (0..order).map(|g| group.inverse(g)).collect(),
            filter_chain: group.filter_chain().iter().map(|v| v.to_vec()).collect(),
        }),
        action: Some(ActionDoc {
            table: (0..order)
                .map(|g| (0..space.n_points()).map(|x| action.apply(g, x)).collect())
                .collect(),
        }),
        groupoid: None,
        structures: None,
        sequences: None,
    }
}

/// Renders a groupoid section.
pub fn groupoid_doc(g: &FiniteGroupoid) -> GroupoidDoc {
    GroupoidDoc {
        n_arrows: g.n_arrows(),
        objects: (0..g.n_arrows()).map(|a| g.is_object(a)).collect(),
        src: (0..g.n_arrows()).map(|a| g.src(a)).collect(),
        rng: (0..g.n_arrows()).map(|a| g.rng(a)).collect(),
        comp: g.comp_triples().iter().map(|&(a, b, c)| [a, b, c]).collect(),
        inv: (0..g.n_arrows()).map(|a| g.inverse(a)).collect(),
        basis: g.basis().iter().map(|b| b.to_vec()).collect(),
    }
}
