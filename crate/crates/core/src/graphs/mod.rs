//! The cyclic graph `Δ(G)`, the commuting graph `Γ(G)`, and the enhanced
//! power graph, with their connectivity metrics.
//!
//! Adjacency is one [`BitSet`] row per vertex position. BFS frontiers advance
//! by OR-ing the rows of the current frontier, so all-pairs BFS on a few
//! hundred vertices costs `V² · V/64` word operations.

mod export;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::BitSet;
use crate::kernel::{Elem, FiniteGroup, PairMode, IDENTITY};
use crate::structure::center;

pub use export::{export_dot, parse_edge_list, to_dot, to_edge_list, EdgeListGraph};

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("the cyclic graph of the trivial group has no vertices")]
    TrivialGroup,
    #[error("the commuting graph is defined only for nonabelian groups")]
    AbelianGroup,
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Elem),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    Cyclic,
    Commuting,
    EnhancedPower,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Cyclic => "cyclic",
            Self::Commuting => "commuting",
            Self::EnhancedPower => "enhanced_power",
        })
    }
}

/// Undirected simple graph on a sorted set of group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    kind: GraphKind,
    group_name: String,
    vertices: Vec<Elem>,
    vertex_orders: Vec<usize>,
    rows: Vec<BitSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", content = "value", rename_all = "snake_case")]
pub enum DiameterResult {
    Finite(usize),
    Disconnected,
    Empty,
}

impl DiameterResult {
    pub fn finite(self) -> Option<usize> {
        match self {
            Self::Finite(d) => Some(d),
            _ => None,
        }
    }
}

impl fmt::Display for DiameterResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(d) => write!(f, "{d}"),
            Self::Disconnected => f.write_str("disconnected"),
            Self::Empty => f.write_str("empty"),
        }
    }
}

impl Graph {
    /// Builds a graph on `vertices` (sorted and deduplicated) with an edge
    /// between positions `i < j` whenever `adjacent(x_i, x_j)`.
    pub fn from_predicate(
        kind: GraphKind,
        g: &FiniteGroup,
        mut vertices: Vec<Elem>,
        adjacent: impl Fn(Elem, Elem) -> bool,
    ) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        let v = vertices.len();
        let mut rows = vec![BitSet::new(v); v];
        for i in 0..v {
            for j in i + 1..v {
                if adjacent(vertices[i], vertices[j]) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        let vertex_orders = vertices.iter().map(|&x| g.element_order(x)).collect();
        Self { kind, group_name: g.name().to_string(), vertices, vertex_orders, rows }
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn group_name(&self) -> &str {
        &self.group_name
    }

    /// Vertex labels (element indices), ascending.
    pub fn vertices(&self) -> &[Elem] {
        &self.vertices
    }

    pub fn vertex_order(&self, pos: usize) -> usize {
        self.vertex_orders[pos]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    pub fn position(&self, label: Elem) -> Option<usize> {
        self.vertices.binary_search(&label).ok()
    }

    pub fn degree(&self, pos: usize) -> usize {
        self.rows[pos].count()
    }

    pub fn row(&self, pos: usize) -> &BitSet {
        &self.rows[pos]
    }

    pub fn has_edge(&self, a: Elem, b: Elem) -> bool {
        match (self.position(a), self.position(b)) {
            (Some(i), Some(j)) => self.rows[i].contains(j),
            _ => false,
        }
    }

    /// Edges as label pairs `(a, b)` with `a < b`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, row) in self.rows.iter().enumerate() {
            out.extend(row.iter().filter(|&j| j > i).map(|j| (self.vertices[i], self.vertices[j])));
        }
        out
    }

    pub fn add_edge(&mut self, a: Elem, b: Elem) -> Result<(), GraphError> {
        let (i, j) = self.positions(a, b)?;
        if i != j {
            self.rows[i].insert(j);
            self.rows[j].insert(i);
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, a: Elem, b: Elem) -> Result<(), GraphError> {
        let (i, j) = self.positions(a, b)?;
        self.rows[i].remove(j);
        self.rows[j].remove(i);
        Ok(())
    }

    fn positions(&self, a: Elem, b: Elem) -> Result<(usize, usize), GraphError> {
        let i = self.position(a).ok_or(GraphError::UnknownVertex(a))?;
        let j = self.position(b).ok_or(GraphError::UnknownVertex(b))?;
        Ok((i, j))
    }

    /// BFS eccentricity of `source`, or `None` if some vertex is unreachable.
    pub fn eccentricity(&self, source: usize) -> Option<usize> {
        let v = self.vertex_count();
        let mut visited = BitSet::new(v);
        visited.insert(source);
        let mut frontier = visited.clone();
        let mut next = BitSet::new(v);
        let mut depth = 0;
        loop {
            next.clear();
            for u in frontier.iter() {
                next.union_with(&self.rows[u]);
            }
            next.difference_with(&visited);
            if next.is_empty() {
                break;
            }
            depth += 1;
            visited.union_with(&next);
            std::mem::swap(&mut frontier, &mut next);
        }
        (visited.count() == v).then_some(depth)
    }
}

/// `Δ(G)`: nonidentity elements, `x ~ y` iff `⟨x, y⟩` is cyclic.
pub fn cyclic_graph(g: &FiniteGroup) -> Result<Graph, GraphError> {
    cyclic_graph_with(g, PairMode::Fast)
}

pub fn cyclic_graph_with(g: &FiniteGroup, mode: PairMode) -> Result<Graph, GraphError> {
    if g.order() < 2 {
        return Err(GraphError::TrivialGroup);
    }
    Ok(Graph::from_predicate(GraphKind::Cyclic, g, (1..g.order()).collect(), |x, y| {
        g.cyclic_pair_with(x, y, mode)
    }))
}

/// `Γ(G)`: noncentral elements, `x ~ y` iff `xy = yx`.
pub fn commuting_graph(g: &FiniteGroup) -> Result<Graph, GraphError> {
    let z = center(g);
    if z.len() == g.order() {
        return Err(GraphError::AbelianGroup);
    }
    let vertices = (0..g.order()).filter(|&x| !z.contains(x)).collect();
    Ok(Graph::from_predicate(GraphKind::Commuting, g, vertices, |x, y| g.commute(x, y)))
}

/// All elements, `x ~ y` iff `⟨x, y⟩` is cyclic.
pub fn enhanced_power_graph(g: &FiniteGroup) -> Graph {
    Graph::from_predicate(GraphKind::EnhancedPower, g, (0..g.order()).collect(), |x, y| {
        x == IDENTITY || y == IDENTITY || g.cyclic_pair(x, y)
    })
}

/// Connected components as sorted label lists, ordered by least label.
pub fn connected_components(graph: &Graph) -> Vec<Vec<Elem>> {
    let v = graph.vertex_count();
    let mut seen = BitSet::new(v);
    let mut comps = Vec::new();
    for s in 0..v {
        if seen.contains(s) {
            continue;
        }
        let mut comp = BitSet::new(v);
        comp.insert(s);
        let mut frontier = comp.clone();
        while !frontier.is_empty() {
            let mut next = BitSet::new(v);
            for u in frontier.iter() {
                next.union_with(graph.row(u));
            }
            next.difference_with(&comp);
            comp.union_with(&next);
            frontier = next;
        }
        seen.union_with(&comp);
        comps.push(comp.iter().map(|i| graph.vertices()[i]).collect());
    }
    comps
}

/// Longest shortest path over all vertex pairs.
pub fn diameter(graph: &Graph) -> DiameterResult {
    match graph.vertex_count() {
        0 => DiameterResult::Empty,
        v => {
            let mut best = 0;
            for s in 0..v {
                match graph.eccentricity(s) {
                    Some(e) => best = best.max(e),
                    None => return DiameterResult::Disconnected,
                }
            }
            DiameterResult::Finite(best)
        }
    }
}

/// [`diameter`] with the per-source BFS runs spread over the rayon pool.
pub fn diameter_parallel(graph: &Graph) -> DiameterResult {
    match graph.vertex_count() {
        0 => DiameterResult::Empty,
        v => (0..v)
            .into_par_iter()
            .map(|s| graph.eccentricity(s))
            .reduce(|| Some(0), |a, b| Some(a?.max(b?)))
            .map_or(DiameterResult::Disconnected, DiameterResult::Finite),
    }
}

/// Vertices adjacent to every other vertex.
pub fn dominating_vertices(graph: &Graph) -> Vec<Elem> {
    let v = graph.vertex_count();
    (0..v)
        .filter(|&i| graph.degree(i) + 1 == v)
        .map(|i| graph.vertices()[i])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{cyclic, dicyclic, symmetric};
    use crate::zgen::{realize, ZParams};

    #[test]
    fn cyclic_graph_examples() {
        let d = cyclic_graph(&cyclic(6).unwrap()).unwrap();
        assert_eq!((d.vertex_count(), d.edge_count()), (5, 10));
        let d = cyclic_graph(&symmetric(3).unwrap()).unwrap();
        assert_eq!((d.vertex_count(), d.edge_count()), (5, 1));
        let d = cyclic_graph(&dicyclic(2).unwrap()).unwrap();
        assert_eq!((d.vertex_count(), d.edge_count()), (7, 9));
        assert!(matches!(cyclic_graph(&cyclic(1).unwrap()), Err(GraphError::TrivialGroup)));
    }

    #[test]
    fn commuting_graph_examples() {
        assert!(matches!(commuting_graph(&cyclic(6).unwrap()), Err(GraphError::AbelianGroup)));
        let s3 = symmetric(3).unwrap();
        let gamma = commuting_graph(&s3).unwrap();
        assert_eq!((gamma.vertex_count(), gamma.edge_count()), (5, 1));
        assert_eq!(gamma.edges(), cyclic_graph(&s3).unwrap().edges());
        let gamma = commuting_graph(&dicyclic(2).unwrap()).unwrap();
        assert_eq!((gamma.vertex_count(), gamma.edge_count()), (6, 3));
    }

    #[test]
    fn enhanced_power_graph_examples() {
        let e = enhanced_power_graph(&cyclic(6).unwrap());
        assert_eq!((e.vertex_count(), e.edge_count()), (6, 15));
        for g in [symmetric(3).unwrap(), dicyclic(3).unwrap()] {
            let e = enhanced_power_graph(&g);
            assert_eq!(e.degree(0), g.order() - 1);
        }
        assert_eq!(diameter(&enhanced_power_graph(&symmetric(3).unwrap())), DiameterResult::Finite(2));
        assert_eq!(enhanced_power_graph(&cyclic(1).unwrap()).vertex_count(), 1);
    }

    #[test]
    fn components() {
        assert_eq!(connected_components(&cyclic_graph(&cyclic(6).unwrap()).unwrap()).len(), 1);
        let comps = connected_components(&cyclic_graph(&symmetric(3).unwrap()).unwrap());
        let mut sizes: Vec<_> = comps.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 1, 2]);
        assert!(comps.windows(2).all(|w| w[0][0] < w[1][0]));
        let g = realize(ZParams::new(7, 3, 2)).unwrap();
        let comps = connected_components(&cyclic_graph(&g).unwrap());
        let mut sizes: Vec<_> = comps.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 2, 2, 2, 2, 2, 6]);
    }

    #[test]
    fn diameters() {
        let k5 = cyclic_graph(&cyclic(6).unwrap()).unwrap();
        assert_eq!(diameter(&k5), DiameterResult::Finite(1));
        assert_eq!(diameter(&cyclic_graph(&symmetric(3).unwrap()).unwrap()), DiameterResult::Disconnected);
        assert_eq!(diameter(&cyclic_graph(&cyclic(2).unwrap()).unwrap()), DiameterResult::Finite(0));
        let g = realize(ZParams::new(15, 4, 2)).unwrap();
        let d = cyclic_graph(&g).unwrap();
        assert_eq!(diameter(&d), DiameterResult::Finite(4));
        assert_eq!(diameter_parallel(&d), DiameterResult::Finite(4));
        let empty = Graph::from_predicate(GraphKind::Cyclic, &g, vec![], |_, _| true);
        assert_eq!(diameter(&empty), DiameterResult::Empty);
        assert_eq!(diameter_parallel(&empty), DiameterResult::Empty);
    }

    #[test]
    fn dominating() {
        assert_eq!(dominating_vertices(&cyclic_graph(&cyclic(6).unwrap()).unwrap()).len(), 5);
        let q8 = dicyclic(2).unwrap();
        let minus_one = (0..8).find(|&x| q8.element_order(x) == 2).unwrap();
        assert_eq!(dominating_vertices(&cyclic_graph(&q8).unwrap()), vec![minus_one]);
        assert!(dominating_vertices(&cyclic_graph(&symmetric(3).unwrap()).unwrap()).is_empty());
        assert_eq!(dominating_vertices(&cyclic_graph(&cyclic(2).unwrap()).unwrap()), vec![1]);
    }

    #[test]
    fn edits() {
        let mut d = cyclic_graph(&cyclic(6).unwrap()).unwrap();
        d.remove_edge(1, 2).unwrap();
        assert!(!d.has_edge(2, 1));
        d.add_edge(2, 1).unwrap();
        assert!(d.has_edge(1, 2));
        assert!(matches!(d.add_edge(0, 1), Err(GraphError::UnknownVertex(0))));
    }
}
