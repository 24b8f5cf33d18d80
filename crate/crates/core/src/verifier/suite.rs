//! Corpus construction and the suite runner.

use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;

use super::report::{GroupReport, SourceKind, SuiteReport};
use super::{GroupContext, VerifyConfig, VerifyError};
use crate::io::{parse_group_file, GroupFormat};
use crate::kernel::{
    alternating, cyclic, dicyclic, dihedral, direct_product, frobenius_20, symmetric, Elem,
    FiniteGroup, GroupConfig,
};
use crate::zgen::{enumerate_z_params, realize, ZParams};

/// How to build one corpus group.
#[derive(Debug, Clone)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    Frobenius20,
    Product(Box<GroupSpec>, Box<GroupSpec>),
    Z(ZParams),
    File(PathBuf, Option<GroupFormat>),
    Given(FiniteGroup, SourceKind),
}

impl GroupSpec {
    pub fn product(a: GroupSpec, b: GroupSpec) -> Self {
        Self::Product(Box::new(a), Box::new(b))
    }

    pub fn build(&self) -> Result<FiniteGroup, VerifyError> {
        Ok(match self {
            Self::Cyclic(n) => cyclic(*n)?,
            Self::Dihedral(n) => dihedral(*n)?,
            Self::Dicyclic(n) => dicyclic(*n)?,
            Self::Symmetric(d) => symmetric(*d)?,
            Self::Alternating(d) => alternating(*d)?,
            Self::Frobenius20 => frobenius_20(),
            Self::Product(a, b) => direct_product(&a.build()?, &b.build()?),
            Self::Z(p) => realize(*p).map_err(crate::io::InputError::from)?,
            Self::File(path, format) => parse_group_file(path, *format, &GroupConfig::default())?.0,
            Self::Given(g, _) => g.clone(),
        })
    }

    pub fn source(&self) -> SourceKind {
        match self {
            Self::Z(_) => SourceKind::Zparams,
            Self::Symmetric(_) | Self::Alternating(_) | Self::Frobenius20 => SourceKind::Permutations,
            Self::File(..) => SourceKind::File,
            Self::Given(_, s) => *s,
            _ => SourceKind::Constructor,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cyclic(n) => write!(f, "C{n}"),
            Self::Dihedral(n) => write!(f, "D{}", 2 * n),
            Self::Dicyclic(n) => write!(f, "Dic{n}"),
            Self::Symmetric(d) => write!(f, "S{d}"),
            Self::Alternating(d) => write!(f, "A{d}"),
            Self::Frobenius20 => write!(f, "F20"),
            Self::Product(a, b) => write!(f, "{a}x{b}"),
            Self::Z(p) => write!(f, "Z[{p}]"),
            Self::File(p, _) => write!(f, "{}", p.display()),
            Self::Given(g, _) => write!(f, "{}", g.name()),
        }
    }
}

/// A deliberate corruption of Δ, used as a negative control.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    /// Delete every Δ-edge at this vertex.
    IsolateVertex(Elem),
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub spec: GroupSpec,
    pub fixture: Option<Fixture>,
}

impl CorpusEntry {
    pub fn new(spec: GroupSpec) -> Self {
        Self { spec, fixture: None }
    }

    pub fn corrupted(spec: GroupSpec, fixture: Fixture) -> Self {
        Self { spec, fixture: Some(fixture) }
    }

    fn analyze(&self, config: VerifyConfig) -> GroupReport {
        let source = self.spec.source();
        let g = match self.spec.build() {
            Ok(g) => g,
            Err(e) => return GroupReport::errored(&self.spec.to_string(), 0, source, e.to_string()),
        };
        let g = match self.fixture {
            Some(_) => g.clone().with_name(format!("{}[corrupted]", g.name())),
            None => g,
        };
        let zparams = match self.spec {
            GroupSpec::Z(p) => Some(p),
            _ => None,
        };
        let result = GroupContext::new(&g, config).and_then(|mut ctx| {
            if let Some(Fixture::IsolateVertex(v)) = self.fixture {
                let mut delta = ctx.cyclic.clone();
                let neighbours: Vec<Elem> =
                    delta.vertices().iter().copied().filter(|&u| delta.has_edge(u, v)).collect();
                for u in neighbours {
                    delta.remove_edge(u, v)?;
                }
                ctx.replace_cyclic_graph(delta);
            }
            Ok(GroupReport::from_context(&ctx, source, zparams))
        });
        result.unwrap_or_else(|e| GroupReport::errored(g.name(), g.order(), source, e.to_string()))
    }
}

/// Every Z-group of order `lo..=hi`, in enumeration order.
pub fn z_group_corpus(lo: usize, hi: usize) -> Vec<CorpusEntry> {
    (lo..=hi)
        .flat_map(|n| enumerate_z_params(n as u64))
        .map(|p| CorpusEntry::new(GroupSpec::Z(p)))
        .collect()
}

/// Non-Z and reference groups: dihedral, dicyclic, cyclic, small abelian
/// products, `Q8 × C3`, and the permutation groups `S4`, `A4`, `A5`, `F20`.
pub fn extra_corpus() -> Vec<CorpusEntry> {
    use GroupSpec::*;
    let mut specs: Vec<GroupSpec> = Vec::new();
    specs.extend((3..=12).map(Dihedral));
    specs.extend((2..=8).map(Dicyclic));
    specs.extend((2..=64).map(Cyclic));
    specs.push(GroupSpec::product(Cyclic(2), Cyclic(2)));
    specs.push(GroupSpec::product(Cyclic(2), Cyclic(4)));
    specs.push(GroupSpec::product(Dicyclic(2), Cyclic(3)));
    specs.extend([Symmetric(4), Alternating(4), Alternating(5), Frobenius20]);
    specs.into_iter().map(CorpusEntry::new).collect()
}

/// All Z-groups of order `2..=max_order` plus [`extra_corpus`].
pub fn default_corpus(max_order: usize) -> Vec<CorpusEntry> {
    let mut corpus = z_group_corpus(2, max_order);
    corpus.extend(extra_corpus());
    corpus
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub jobs: usize,
    pub verify: VerifyConfig,
    pub description: String,
    /// Record wall-clock time in the summary (breaks byte-for-byte determinism).
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { jobs: 1, verify: VerifyConfig::default(), description: "custom".into(), timing: true }
    }
}

/// Analyzes every entry (concurrently when `jobs > 1`) and aggregates the
/// results; reports are ordered by `(order, name)` regardless of `jobs`.
pub fn run_suite(corpus: &[CorpusEntry], config: &SuiteConfig) -> SuiteReport {
    let start = Instant::now();
    let verify = config.verify;
    let mut groups: Vec<GroupReport> = if config.jobs <= 1 {
        corpus.iter().map(|e| e.analyze(verify)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| corpus.par_iter().map(|e| e.analyze(verify)).collect())
    };
    groups.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.name.cmp(&b.name)));
    let duration = config.timing.then(|| start.elapsed().as_millis() as u64);
    SuiteReport::from_groups(config.description.clone(), groups, duration)
}
