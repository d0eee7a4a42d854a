//! Versioned machine-readable reports.  Field order is fixed by struct
//! declaration and all content is deterministic for a given input and seed,
//! so serializing the same run twice yields identical bytes.

use serde::Serialize;

use munnlab_core::{
    ComponentClassification, ComponentNumbers, GraphClass, RepTypeVerdict, Triple, ValuedGraph,
};

pub const SCHEMA: &str = "munnlab-report/1";

/// Top-level report.  Sections not produced by a subcommand are omitted
/// from the JSON entirely; `docs/report_schema.md` documents which commands
/// fill which sections.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: &'static str,
    pub seed: u64,
    pub field: FieldInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupInfo>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<PartInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ComponentInfo>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triples: Option<Vec<[usize; 3]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<VerdictInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<CensusInfo>,
}

impl Report {
    pub fn new(command: &'static str, seed: u64, field: FieldInfo) -> Self {
        Report {
            schema: SCHEMA,
            command,
            seed,
            field,
            group: None,
            parts: Vec::new(),
            components: None,
            triples: None,
            graph: None,
            verdicts: None,
            agreement: None,
            census: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FieldInfo {
    pub characteristic: u64,
    pub mode: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupInfo {
    pub name: String,
    pub order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PartInfo {
    pub group: GroupInfo,
    pub sandwich_rows: usize,
    pub sandwich_cols: usize,
    pub triples: Vec<[usize; 3]>,
}

/// One Wedderburn component with its sandwich numbers when a sandwich is
/// present.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentInfo {
    pub d: usize,
    pub c: usize,
    pub u: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

impl ComponentInfo {
    pub fn bare(d: usize, c: usize, u: usize) -> Self {
        ComponentInfo {
            d,
            c,
            u,
            r: None,
            m: None,
            n: None,
        }
    }

    pub fn from_numbers(numbers: &ComponentNumbers) -> Self {
        ComponentInfo {
            d: numbers.d,
            c: numbers.c,
            u: numbers.u,
            r: Some(numbers.r),
            m: Some(numbers.m),
            n: Some(numbers.n),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphInfo {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeInfo>,
    pub components: Vec<GraphComponentInfo>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeInfo {
    pub ends: [String; 2],
    pub value: [usize; 2],
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphComponentInfo {
    pub vertices: Vec<String>,
    pub class: &'static str,
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub null_root: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictInfo {
    pub case: CaseInfo,
    pub graph: CaseInfo,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseInfo {
    pub kind: String,
    pub evidence: String,
    pub notes: String,
}

impl CaseInfo {
    pub fn from_verdict(v: &RepTypeVerdict) -> Self {
        CaseInfo {
            kind: v.kind.to_string(),
            evidence: v.evidence.clone(),
            notes: v.notes.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusInfo {
    pub caps: CapsInfo,
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CapsInfo {
    pub v0_max: usize,
    pub wk_max: usize,
    pub budget: u64,
}

pub fn triples_as_rows(triples: impl IntoIterator<Item = Triple>) -> Vec<[usize; 3]> {
    triples.into_iter().map(|t| [t.d, t.m, t.n]).collect()
}

fn class_label(class: GraphClass) -> &'static str {
    match class {
        GraphClass::Dynkin => "Dynkin",
        GraphClass::Euclidean => "Euclidean",
        GraphClass::Indefinite => "Indefinite",
    }
}

/// Flatten a valued graph and its component classification for the report.
pub fn graph_info(graph: &ValuedGraph, classes: &[ComponentClassification]) -> GraphInfo {
    let vertices: Vec<String> = (0..graph.vertex_count()).map(|i| graph.label(i)).collect();
    let mut edges = Vec::new();
    for i in 0..graph.vertex_count() {
        for j in i + 1..graph.vertex_count() {
            if graph.value(i, j) > 0 {
                edges.push(EdgeInfo {
                    ends: [graph.label(i), graph.label(j)],
                    value: [graph.value(i, j), graph.value(j, i)],
                });
            }
        }
    }
    let components = classes
        .iter()
        .map(|c| GraphComponentInfo {
            vertices: c.vertices.iter().map(|&v| graph.label(v)).collect(),
            class: class_label(c.class),
            name: c.name.clone(),
            null_root: c.null_root.clone(),
        })
        .collect();
    GraphInfo {
        vertices,
        edges,
        components,
    }
}
