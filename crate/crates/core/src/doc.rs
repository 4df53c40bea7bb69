//! JSON documents for spaces and families.
//!
//! A space document is one of
//! `{"kind":"explicit","ground_size":N,"convex_sets":[[..],..]}`,
//! `{"kind":"generators","ground_size":N,"generators":[[..],..]}` or
//! `{"kind":"builder","name":"interval","params":{"n":7}}`.

use serde::{Deserialize, Serialize};

use crate::builders::{build, BuilderSpec};
use crate::error::Result;
use crate::set::ElementSet;
use crate::space::{closure_from_generators, validate_space, ConvexitySpace, DEFAULT_SIZE_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SpaceDoc {
    Explicit {
        ground_size: usize,
        convex_sets: Vec<Vec<usize>>,
    },
    Generators {
        ground_size: usize,
        generators: Vec<Vec<usize>>,
    },
    Builder(BuilderSpec),
}

impl SpaceDoc {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Canonical explicit document: convex sets in lexicographic order.
    pub fn of_space(space: &ConvexitySpace) -> Self {
        SpaceDoc::Explicit {
            ground_size: space.ground_size(),
            convex_sets: space.convex_sets().iter().map(|s| s.to_vec()).collect(),
        }
    }

    pub fn to_space(&self) -> Result<ConvexitySpace> {
        self.to_space_capped(DEFAULT_SIZE_CAP)
    }

    pub fn to_space_capped(&self, size_cap: usize) -> Result<ConvexitySpace> {
        match self {
            SpaceDoc::Explicit {
                ground_size,
                convex_sets,
            } => validate_space(*ground_size, parse_sets(convex_sets, *ground_size)?),
            SpaceDoc::Generators {
                ground_size,
                generators,
            } => closure_from_generators(
                *ground_size,
                &parse_sets(generators, *ground_size)?,
                size_cap,
            ),
            SpaceDoc::Builder(spec) => build(spec),
        }
    }
}

/// Byte-stable serialization of a space.
pub fn canonical_json(space: &ConvexitySpace) -> String {
    serde_json::to_string(&SpaceDoc::of_space(space)).expect("space documents always serialize")
}

pub fn parse_sets(lists: &[Vec<usize>], ground_size: usize) -> Result<Vec<ElementSet>> {
    lists
        .iter()
        .map(|l| ElementSet::from_sorted_list(l, ground_size))
        .collect()
}

/// A family is a JSON array of strictly increasing element lists.
pub fn parse_family(text: &str, ground_size: usize) -> Result<Vec<ElementSet>> {
    let lists: Vec<Vec<usize>> = serde_json::from_str(text)?;
    parse_sets(&lists, ground_size)
}

/// A list of families, for the colorful verbs.
pub fn parse_families(text: &str, ground_size: usize) -> Result<Vec<Vec<ElementSet>>> {
    let lists: Vec<Vec<Vec<usize>>> = serde_json::from_str(text)?;
    lists.iter().map(|f| parse_sets(f, ground_size)).collect()
}

pub fn parse_set(text: &str, ground_size: usize) -> Result<ElementSet> {
    let list: Vec<usize> = serde_json::from_str(text)?;
    ElementSet::from_sorted_list(&list, ground_size)
}

impl From<BuilderSpec> for SpaceDoc {
    fn from(spec: BuilderSpec) -> Self {
        SpaceDoc::Builder(spec)
    }
}

pub fn space_from_str(text: &str) -> Result<ConvexitySpace> {
    SpaceDoc::parse(text)?.to_space()
}
