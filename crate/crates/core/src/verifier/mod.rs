//! Executable statements of the cyclic-graph theorems, checked group by group.
//!
//! A [`GroupContext`] computes every structural flag and graph once; each
//! [`TheoremId`] is then a cheap predicate over it. Reports are assembled in
//! [`report`] and whole corpora are run by [`suite`].

pub mod report;
pub mod suite;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::gcd;
use crate::graphs::{
    commuting_graph, connected_components, cyclic_graph, diameter, dominating_vertices,
    enhanced_power_graph, DiameterResult, Graph, GraphError,
};
use crate::io::InputError;
use crate::kernel::{Elem, ElemSet, FiniteGroup, KernelError, IDENTITY};
use crate::structure::{
    center, derived_series_is_solvable, derived_subgroup, is_cyclic_subgroup, is_frobenius,
    is_nilpotent, is_p_nilpotent, is_z_group, quotient_group,
    sylow_cyclic_or_generalized_quaternion, FrobeniusResult, StructureError,
};

pub use report::{GraphMetrics, GroupReport, SourceKind, SuiteReport, TheoremOutcome, TheoremTotals};
pub use suite::{default_corpus, run_suite, CorpusEntry, Fixture, GroupSpec, SuiteConfig};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown theorem id {0:?}")]
    UnknownTheoremId(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Input(#[from] InputError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    /// Z-group: Δ disconnected ⟺ Frobenius.
    A,
    /// Z-group with Δ connected: diam(Δ) ≤ 4.
    B,
    /// Z-group: diam(Δ) ≤ 2 ⟺ nontrivial center.
    C,
    /// Dominating vertex ⟺ a unique, central subgroup of some prime order.
    #[serde(rename = "DOM")]
    Dom,
    /// Per-element dominating-vertex characterization via primary parts.
    D,
    /// Nilpotent: dominatable ⟺ a cyclic or generalized quaternion Sylow subgroup.
    #[serde(rename = "NILP")]
    Nilp,
    /// Centerless Z-group: Δ = Γ.
    #[serde(rename = "GD")]
    Gd,
    /// Centerless non-Frobenius Z-group: Γ connected with diameter 3 or 4.
    #[serde(rename = "COMM")]
    Comm,
    /// Z-group: G' and G/G' cyclic with coprime orders.
    #[serde(rename = "ROSE")]
    Rose,
    /// Elementary facts about Δ, Γ, the enhanced power graph, and Z-groups.
    #[serde(rename = "BASIC")]
    Basic,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        Self::A,
        Self::B,
        Self::C,
        Self::Dom,
        Self::D,
        Self::Nilp,
        Self::Gd,
        Self::Comm,
        Self::Rose,
        Self::Basic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::A => "A",
            Self::B => "B",
            Self::C => "C",
            Self::Dom => "DOM",
            Self::D => "D",
            Self::Nilp => "NILP",
            Self::Gd => "GD",
            Self::Comm => "COMM",
            Self::Rose => "ROSE",
            Self::Basic => "BASIC",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| VerifyError::UnknownTheoremId(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Random `(x, y, g)` triples for the conjugation-covariance check.
    pub conjugation_samples: usize,
    /// Check conjugation covariance on every triple instead of sampling.
    pub exhaustive_conjugation: bool,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { conjugation_samples: 200, exhaustive_conjugation: false, seed: 0x00c1_c11c }
    }
}

/// Everything the theorem checks consult, computed once per group.
pub struct GroupContext<'a> {
    pub group: &'a FiniteGroup,
    pub config: VerifyConfig,
    pub z_group: bool,
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub center: ElemSet,
    pub derived: ElemSet,
    pub frobenius: FrobeniusResult,
    pub cyclic: Graph,
    pub commuting: Option<Graph>,
    pub enhanced_power: Graph,
    cyclic_metrics: DerivedMetrics,
    commuting_diameter: Option<DiameterResult>,
    cgq: BTreeMap<u64, bool>,
}

struct DerivedMetrics {
    components: usize,
    diameter: DiameterResult,
    dominating: Vec<Elem>,
}

impl DerivedMetrics {
    fn of(graph: &Graph) -> Self {
        Self {
            components: connected_components(graph).len(),
            diameter: diameter(graph),
            dominating: dominating_vertices(graph),
        }
    }
}

impl<'a> GroupContext<'a> {
    pub fn new(group: &'a FiniteGroup, config: VerifyConfig) -> Result<Self, VerifyError> {
        let cyclic = cyclic_graph(group)?;
        let abelian = group.is_abelian();
        let commuting = if abelian { None } else { Some(commuting_graph(group)?) };
        let cgq = group
            .order_factorization()
            .primes()
            .map(|p| Ok((p, sylow_cyclic_or_generalized_quaternion(group, p)?)))
            .collect::<Result<_, StructureError>>()?;
        Ok(Self {
            config,
            z_group: is_z_group(group),
            abelian,
            nilpotent: is_nilpotent(group),
            solvable: derived_series_is_solvable(group),
            center: center(group),
            derived: derived_subgroup(group),
            frobenius: is_frobenius(group)?,
            cyclic_metrics: DerivedMetrics::of(&cyclic),
            commuting_diameter: commuting.as_ref().map(diameter),
            cyclic,
            commuting,
            enhanced_power: enhanced_power_graph(group),
            cgq,
            group,
        })
    }

    /// Swaps in a different Δ (test fixtures) and refreshes its metrics.
    pub fn replace_cyclic_graph(&mut self, graph: Graph) {
        self.cyclic_metrics = DerivedMetrics::of(&graph);
        self.cyclic = graph;
    }

    pub fn cyclic_components(&self) -> usize {
        self.cyclic_metrics.components
    }

    pub fn cyclic_diameter(&self) -> DiameterResult {
        self.cyclic_metrics.diameter
    }

    pub fn dominating(&self) -> &[Elem] {
        &self.cyclic_metrics.dominating
    }

    pub fn commuting_diameter(&self) -> Option<DiameterResult> {
        self.commuting_diameter
    }

    fn center_order(&self) -> usize {
        self.center.len()
    }

    /// Runs one theorem check.
    pub fn check(&self, id: TheoremId) -> TheoremOutcome {
        let verdict = match id {
            TheoremId::A => self.theorem_a(),
            TheoremId::B => self.theorem_b(),
            TheoremId::C => self.theorem_c(),
            TheoremId::Dom => self.theorem_dom(),
            TheoremId::D => self.theorem_d(),
            TheoremId::Nilp => self.theorem_nilp(),
            TheoremId::Gd => self.theorem_gd(),
            TheoremId::Comm => self.theorem_comm(),
            TheoremId::Rose => self.theorem_rose(),
            TheoremId::Basic => self.theorem_basic(),
        };
        TheoremOutcome::from_verdict(id, verdict)
    }

    pub fn check_all(&self) -> Vec<TheoremOutcome> {
        TheoremId::ALL.into_iter().map(|id| self.check(id)).collect()
    }

    fn theorem_a(&self) -> Verdict {
        if !self.z_group {
            return None;
        }
        let disconnected = self.cyclic_components() > 1;
        Some(expect(
            disconnected == self.frobenius.is_frobenius,
            || format!(
                "Δ has {} components but is_frobenius = {}",
                self.cyclic_components(),
                self.frobenius.is_frobenius
            ),
        ))
    }

    fn theorem_b(&self) -> Verdict {
        let d = self.cyclic_diameter().finite().filter(|_| self.z_group)?;
        Some(expect(d <= 4, || format!("diam(Δ) = {d} > 4")))
    }

    fn theorem_c(&self) -> Verdict {
        if !self.z_group {
            return None;
        }
        let small = self.cyclic_diameter().finite().is_some_and(|d| d <= 2);
        let central = self.center_order() > 1;
        Some(expect(small == central, || {
            format!("diam(Δ) = {} but |Z(G)| = {}", self.cyclic_diameter(), self.center_order())
        }))
    }

    /// Primes `p` whose subgroup of order `p` is unique and central: exactly
    /// `p − 1` elements of order `p`, all of them central.
    fn unique_central_prime(&self) -> Option<u64> {
        let g = self.group;
        g.order_factorization().primes().find(|&p| {
            let of_order_p: Vec<Elem> =
                (0..g.order()).filter(|&x| g.element_order(x) as u64 == p).collect();
            of_order_p.len() as u64 == p - 1 && of_order_p.iter().all(|&x| self.center.contains(x))
        })
    }

    fn theorem_dom(&self) -> Verdict {
        let dominatable = !self.dominating().is_empty();
        let prime = self.unique_central_prime();
        Some(expect(dominatable == prime.is_some(), || match (dominatable, prime) {
            (true, _) => format!(
                "vertex {} dominates Δ but no prime-order subgroup is unique and central",
                self.dominating()[0]
            ),
            (false, Some(p)) => format!("the order-{p} subgroup is unique and central but Δ has no dominating vertex"),
            _ => unreachable!(),
        }))
    }

    /// The per-element criterion: every primary part `g_p` is central and the
    /// Sylow p-subgroup has a unique subgroup of order `p`.
    pub fn dominating_criterion(&self, x: Elem) -> bool {
        let parts = self.group.primary_decomposition(x).expect("nonidentity element");
        parts.iter().all(|(p, &xp)| self.cgq[p] && self.center.contains(xp))
    }

    fn theorem_d(&self) -> Verdict {
        let dominating: std::collections::BTreeSet<Elem> = self.dominating().iter().copied().collect();
        for x in 1..self.group.order() {
            let is_dom = dominating.contains(&x);
            let criterion = self.dominating_criterion(x);
            if is_dom != criterion {
                return Some(Err(format!(
                    "element {x} (order {}): dominating = {is_dom}, Sylow/center criterion = {criterion}",
                    self.group.element_order(x)
                )));
            }
        }
        Some(Ok(()))
    }

    fn theorem_nilp(&self) -> Verdict {
        if !self.nilpotent {
            return None;
        }
        let dominatable = !self.dominating().is_empty();
        let has_cgq = self.cgq.values().any(|&b| b);
        Some(expect(dominatable == has_cgq, || {
            format!("dominatable = {dominatable}, cyclic or generalized quaternion Sylow = {has_cgq}")
        }))
    }

    fn theorem_gd(&self) -> Verdict {
        if !self.z_group || self.abelian || self.center_order() != 1 {
            return None;
        }
        let gamma = self.commuting.as_ref().expect("nonabelian");
        if gamma.vertices() != self.cyclic.vertices() {
            return Some(Err("Δ and Γ have different vertex sets".into()));
        }
        let (de, ge) = (self.cyclic.edges(), gamma.edges());
        if de == ge {
            return Some(Ok(()));
        }
        let only_delta = de.iter().find(|e| !gamma.has_edge(e.0, e.1));
        let only_gamma = ge.iter().find(|e| !self.cyclic.has_edge(e.0, e.1));
        Some(Err(match (only_delta, only_gamma) {
            (Some((a, b)), _) => format!("edge {a}–{b} is in Δ but not in Γ"),
            (_, Some((a, b))) => format!("edge {a}–{b} is in Γ but not in Δ"),
            _ => unreachable!(),
        }))
    }

    fn theorem_comm(&self) -> Verdict {
        if !self.z_group || self.center_order() != 1 || self.frobenius.is_frobenius || self.abelian {
            return None;
        }
        let d = self.commuting_diameter.expect("nonabelian");
        Some(expect(matches!(d, DiameterResult::Finite(3 | 4)), || format!("diam(Γ) = {d}")))
    }

    fn theorem_rose(&self) -> Verdict {
        if !self.z_group {
            return None;
        }
        let g = self.group;
        if !is_cyclic_subgroup(g, &self.derived) {
            return Some(Err(format!("G' of order {} is not cyclic", self.derived.len())));
        }
        let quotient = match quotient_group(g, &self.derived) {
            Ok(q) => q,
            Err(e) => return Some(Err(format!("G/G' failed: {e}"))),
        };
        if !quotient.element_orders().any(|o| o == quotient.order()) {
            return Some(Err(format!("G/G' of order {} is not cyclic", quotient.order())));
        }
        let (m, n) = (self.derived.len(), quotient.order());
        Some(expect(gcd(m, n) == 1, || format!("gcd(|G'|, |G/G'|) = gcd({m}, {n}) ≠ 1")))
    }

    fn theorem_basic(&self) -> Verdict {
        Some(
            self.basic_coprime_commuting()
                .and_then(|()| self.basic_conjugation())
                .and_then(|()| self.basic_spanning())
                .and_then(|()| self.basic_enhanced_power())
                .and_then(|()| self.basic_z_group_facts()),
        )
    }

    fn basic_coprime_commuting(&self) -> Result<(), String> {
        let g = self.group;
        for x in 1..g.order() {
            for y in x + 1..g.order() {
                if g.commute(x, y)
                    && gcd(g.element_order(x), g.element_order(y)) == 1
                    && !self.cyclic.has_edge(x, y)
                {
                    return Err(format!("commuting coprime-order pair ({x}, {y}) is not adjacent in Δ"));
                }
            }
        }
        Ok(())
    }

    fn basic_conjugation(&self) -> Result<(), String> {
        let g = self.group;
        let n = g.order();
        if n < 3 {
            return Ok(());
        }
        let check = |x: Elem, y: Elem, t: Elem| -> Result<(), String> {
            let (cx, cy) = (g.conj(x, t), g.conj(y, t));
            if self.cyclic.has_edge(x, y) != self.cyclic.has_edge(cx, cy) {
                return Err(format!("conjugation by {t} changes adjacency of ({x}, {y})"));
            }
            Ok(())
        };
        if self.config.exhaustive_conjugation {
            for x in 1..n {
                for y in x + 1..n {
                    for t in 0..n {
                        check(x, y, t)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed ^ name_hash(g.name(), n));
            for _ in 0..self.config.conjugation_samples {
                let x = rng.gen_range(1..n);
                let y = rng.gen_range(1..n);
                if x != y {
                    check(x, y, rng.gen_range(0..n))?;
                }
            }
        }
        Ok(())
    }

    fn basic_spanning(&self) -> Result<(), String> {
        let Some(gamma) = &self.commuting else { return Ok(()) };
        for (a, b) in self.cyclic.edges() {
            if !self.center.contains(a) && !self.center.contains(b) && !gamma.has_edge(a, b) {
                return Err(format!("Δ-edge {a}–{b} between noncentral elements is missing from Γ"));
            }
        }
        Ok(())
    }

    fn basic_enhanced_power(&self) -> Result<(), String> {
        let e = &self.enhanced_power;
        if e.degree(IDENTITY) + 1 != e.vertex_count() {
            return Err("identity does not dominate the enhanced power graph".into());
        }
        if connected_components(e).len() != 1 {
            return Err("enhanced power graph is disconnected".into());
        }
        let restricted: Vec<(Elem, Elem)> = e.edges().into_iter().filter(|&(a, _)| a != IDENTITY).collect();
        if restricted != self.cyclic.edges() {
            return Err("enhanced power graph minus the identity differs from Δ".into());
        }
        Ok(())
    }

    fn basic_z_group_facts(&self) -> Result<(), String> {
        if !self.z_group {
            return Ok(());
        }
        if !self.solvable {
            return Err("Z-group is not solvable".into());
        }
        if let Some(p) = self.group.order_factorization().primes().next() {
            match is_p_nilpotent(self.group, p) {
                Ok(true) => {}
                Ok(false) => return Err(format!("Z-group is not {p}-nilpotent")),
                Err(e) => return Err(format!("{p}-nilpotency check failed: {e}")),
            }
        }
        Ok(())
    }
}

/// `None` when not applicable; otherwise pass or a failure witness.
type Verdict = Option<Result<(), String>>;

fn expect(ok: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

fn name_hash(name: &str, order: usize) -> u64 {
    // FNV-1a
    name.bytes()
        .chain(order.to_le_bytes())
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

/// Checks a single theorem against `g`.
pub fn check_theorem(g: &FiniteGroup, id: TheoremId) -> Result<TheoremOutcome, VerifyError> {
    Ok(GroupContext::new(g, VerifyConfig::default())?.check(id))
}

/// Full report for one group with default settings.
pub fn analyze(g: &FiniteGroup) -> Result<GroupReport, VerifyError> {
    analyze_with(g, SourceKind::Constructor, None, VerifyConfig::default())
}

pub fn analyze_with(
    g: &FiniteGroup,
    source: SourceKind,
    zparams: Option<crate::zgen::ZParams>,
    config: VerifyConfig,
) -> Result<GroupReport, VerifyError> {
    let ctx = GroupContext::new(g, config)?;
    Ok(GroupReport::from_context(&ctx, source, zparams))
}
