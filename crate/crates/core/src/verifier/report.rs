//! Report records. Each group becomes one JSON line; a suite ends with one
//! summary line. Field names are stable within a schema version.

use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use super::{GroupContext, TheoremId, Verdict};
use crate::graphs::{connected_components, diameter, dominating_vertices, DiameterResult, Graph, GraphKind};
use crate::zgen::ZParams;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceKind {
    Constructor,
    Zparams,
    File,
    Permutations,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremOutcome {
    pub theorem: TheoremId,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub passed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl TheoremOutcome {
    pub(super) fn from_verdict(theorem: TheoremId, verdict: Verdict) -> Self {
        match verdict {
            None => Self { theorem, applicable: false, passed: None, witness: None },
            Some(Ok(())) => Self { theorem, applicable: true, passed: Some(true), witness: None },
            Some(Err(w)) => Self { theorem, applicable: true, passed: Some(false), witness: Some(w) },
        }
    }

    pub fn failed(&self) -> bool {
        self.passed == Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphMetrics {
    pub kind: GraphKind,
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub diameter: DiameterResult,
    pub dominating: usize,
}

impl GraphMetrics {
    pub fn of(graph: &Graph) -> Self {
        Self {
            kind: graph.kind(),
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
            components: connected_components(graph).len(),
            diameter: diameter(graph),
            dominating: dominating_vertices(graph).len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub schema_version: u32,
    pub record: String,
    pub name: String,
    pub order: usize,
    pub source: SourceKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub zparams: Option<String>,
    pub is_z_group: bool,
    pub is_frobenius: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub frobenius_kernel_order: Option<usize>,
    pub is_nilpotent: bool,
    pub is_solvable: bool,
    pub center_order: usize,
    pub derived_order: usize,
    pub graphs: Vec<GraphMetrics>,
    pub theorems: Vec<TheoremOutcome>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

impl GroupReport {
    pub(super) fn from_context(ctx: &GroupContext<'_>, source: SourceKind, zparams: Option<ZParams>) -> Self {
        let g = ctx.group;
        let mut graphs = vec![GraphMetrics {
            kind: GraphKind::Cyclic,
            vertices: ctx.cyclic.vertex_count(),
            edges: ctx.cyclic.edge_count(),
            components: ctx.cyclic_components(),
            diameter: ctx.cyclic_diameter(),
            dominating: ctx.dominating().len(),
        }];
        if let Some(gamma) = &ctx.commuting {
            graphs.push(GraphMetrics::of(gamma));
        }
        graphs.push(GraphMetrics::of(&ctx.enhanced_power));
        Self {
            schema_version: SCHEMA_VERSION,
            record: "group".into(),
            name: g.name().to_string(),
            order: g.order(),
            source,
            zparams: zparams.map(|p| p.to_string()),
            is_z_group: ctx.z_group,
            is_frobenius: ctx.frobenius.is_frobenius,
            frobenius_kernel_order: ctx.frobenius.kernel.as_ref().map(|k| k.len()),
            is_nilpotent: ctx.nilpotent,
            is_solvable: ctx.solvable,
            center_order: ctx.center.len(),
            derived_order: ctx.derived.len(),
            graphs,
            theorems: ctx.check_all(),
            error: None,
        }
    }

    /// A record for a group that could not be built or analyzed.
    pub fn errored(name: &str, order: usize, source: SourceKind, error: String) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            record: "group".into(),
            name: name.to_string(),
            order,
            source,
            zparams: None,
            is_z_group: false,
            is_frobenius: false,
            frobenius_kernel_order: None,
            is_nilpotent: false,
            is_solvable: false,
            center_order: 0,
            derived_order: 0,
            graphs: Vec::new(),
            theorems: Vec::new(),
            error: Some(error),
        }
    }

    pub fn graph(&self, kind: GraphKind) -> Option<&GraphMetrics> {
        self.graphs.iter().find(|m| m.kind == kind)
    }

    pub fn theorem(&self, id: TheoremId) -> Option<&TheoremOutcome> {
        self.theorems.iter().find(|t| t.theorem == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremOutcome> {
        self.theorems.iter().filter(|t| t.failed())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremTotals {
    pub applicable: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub group: String,
    pub theorem: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub record: String,
    pub corpus: String,
    pub group_count: usize,
    pub totals: BTreeMap<TheoremId, TheoremTotals>,
    pub errors: usize,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub duration_ms: Option<u64>,
    #[serde(skip)]
    pub groups: Vec<GroupReport>,
}

impl SuiteReport {
    pub fn from_groups(corpus: String, groups: Vec<GroupReport>, duration_ms: Option<u64>) -> Self {
        let mut totals: BTreeMap<TheoremId, TheoremTotals> =
            TheoremId::ALL.iter().map(|&id| (id, TheoremTotals::default())).collect();
        let mut failures = Vec::new();
        let mut errors = 0;
        for g in &groups {
            if let Some(e) = &g.error {
                errors += 1;
                failures.push(Failure { group: g.name.clone(), theorem: "ERROR".into(), witness: e.clone() });
            }
            for t in &g.theorems {
                let entry = totals.entry(t.theorem).or_default();
                if t.applicable {
                    entry.applicable += 1;
                }
                match t.passed {
                    Some(true) => entry.passed += 1,
                    Some(false) => {
                        entry.failed += 1;
                        failures.push(Failure {
                            group: g.name.clone(),
                            theorem: t.theorem.to_string(),
                            witness: t.witness.clone().unwrap_or_default(),
                        });
                    }
                    None => {}
                }
            }
        }
        Self {
            schema_version: SCHEMA_VERSION,
            record: "summary".into(),
            corpus,
            group_count: groups.len(),
            totals,
            errors,
            failures,
            duration_ms,
            groups,
        }
    }

    /// Theorem failures plus per-group errors.
    pub fn failed(&self) -> usize {
        self.totals.values().map(|t| t.failed).sum::<usize>() + self.errors
    }

    /// Writes one JSON line per group, then the summary line.
    pub fn write_jsonl(&self, mut out: impl Write) -> io::Result<()> {
        for g in &self.groups {
            serde_json::to_writer(&mut out, g)?;
            out.write_all(b"\n")?;
        }
        serde_json::to_writer(&mut out, self)?;
        out.write_all(b"\n")
    }
}
