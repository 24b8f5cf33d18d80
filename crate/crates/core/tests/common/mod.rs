//! Independent reference computations. Everything here works from the raw
//! Cayley table only, so it shares no code paths with the library.

#![allow(dead_code)]

use std::collections::VecDeque;

use zcyclic::FiniteGroup;

pub struct Table {
    pub rows: Vec<Vec<usize>>,
    pub identity: usize,
}

impl Table {
    pub fn of(g: &FiniteGroup) -> Self {
        let rows = g.cayley_rows();
        let n = rows.len();
        let identity = (0..n).find(|&e| (0..n).all(|x| rows[e][x] == x)).expect("identity");
        Self { rows, identity }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.rows[a][b]
    }

    pub fn order_of(&self, x: usize) -> usize {
        let (mut k, mut y) = (1, x);
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Membership vector of the subgroup generated by `gens` (closure under
    /// products is enough in a finite group).
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([self.identity]);
        seen[self.identity] = true;
        while let Some(a) = queue.pop_front() {
            for &s in gens {
                let b = self.mul(a, s);
                if !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        seen
    }

    /// `<x, y>` is cyclic iff it holds an element whose order is its size.
    pub fn cyclic_pair(&self, x: usize, y: usize) -> bool {
        let h = self.closure(&[x, y]);
        let size = h.iter().filter(|&&b| b).count();
        (0..self.n()).any(|z| h[z] && self.order_of(z) == size)
    }

    pub fn commute(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n()).filter(|&z| (0..self.n()).all(|x| self.commute(z, x))).collect()
    }

    pub fn nonidentity(&self) -> Vec<usize> {
        (0..self.n()).filter(|&x| x != self.identity).collect()
    }

    /// Adjacency matrix of the cyclic graph over `nonidentity()`.
    pub fn delta(&self) -> (Vec<usize>, Vec<Vec<bool>>) {
        let vs = self.nonidentity();
        let adj = vs
            .iter()
            .map(|&a| vs.iter().map(|&b| a != b && self.cyclic_pair(a, b)).collect())
            .collect();
        (vs, adj)
    }

    /// Adjacency matrix of the commuting graph over noncentral elements.
    pub fn gamma(&self) -> (Vec<usize>, Vec<Vec<bool>>) {
        let z = self.center();
        let vs: Vec<usize> = (0..self.n()).filter(|x| !z.contains(x)).collect();
        let adj = vs
            .iter()
            .map(|&a| vs.iter().map(|&b| a != b && self.commute(a, b)).collect())
            .collect();
        (vs, adj)
    }

    /// Whether the Sylow `p`-subgroups are cyclic: some element has order
    /// equal to the full `p`-part of the group order.
    pub fn sylow_cyclic(&self, p: usize) -> bool {
        let mut pp = 1;
        let mut n = self.n();
        while n.is_multiple_of(p) {
            n /= p;
            pp *= p;
        }
        (0..self.n()).any(|x| self.order_of(x) == pp)
    }

    pub fn is_z_group(&self) -> bool {
        prime_divisors(self.n()).into_iter().all(|p| self.sylow_cyclic(p))
    }
}

pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Diameter by Floyd–Warshall; `None` when disconnected, `Some(0)` for a
/// single vertex.
pub fn floyd_warshall_diameter(adj: &[Vec<bool>]) -> Option<usize> {
    let n = adj.len();
    const INF: usize = usize::MAX / 4;
    let mut d: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 0 } else if adj[i][j] { 1 } else { INF }).collect())
        .collect();
    for k in 0..n {
        for i in 0..n {
            let dik = d[i][k];
            if dik == INF {
                continue;
            }
            let via_k: Vec<usize> = d[k].iter().map(|&dkj| dik + dkj).collect();
            for (dij, via) in d[i].iter_mut().zip(via_k) {
                *dij = (*dij).min(via);
            }
        }
    }
    let max = d.iter().flatten().copied().max().unwrap_or(0);
    (max < INF).then_some(max)
}

pub fn component_count(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(a) = stack.pop() {
            for b in 0..n {
                if adj[a][b] && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    count
}

/// Labels of vertices adjacent to every other vertex.
pub fn dominating(vs: &[usize], adj: &[Vec<bool>]) -> Vec<usize> {
    (0..vs.len())
        .filter(|&i| (0..vs.len()).all(|j| i == j || adj[i][j]))
        .map(|i| vs[i])
        .collect()
}

/// Sorted `(a, b)` label pairs with `a < b`.
pub fn edge_set(vs: &[usize], adj: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..vs.len() {
        for j in 0..vs.len() {
            if adj[i][j] && vs[i] < vs[j] {
                out.push((vs[i], vs[j]));
            }
        }
    }
    out.sort_unstable();
    out
}
