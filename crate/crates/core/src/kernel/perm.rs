use std::collections::HashMap;
use std::fmt;

use super::{FiniteGroup, GroupConfig, KernelError};

/// A permutation of `0..d`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, KernelError> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in &images {
            if i >= d || std::mem::replace(&mut seen[i], true) {
                return Err(KernelError::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{d}"
                )));
            }
        }
        Ok(Self(images.into_iter().map(|i| i as u32).collect()))
    }

    /// Builds a permutation of `0..degree` from disjoint cycles.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self, KernelError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(KernelError::InvalidPermutation(format!(
                        "point {a} outside 0..{degree}"
                    )));
                }
                if std::mem::replace(&mut moved[a], true) {
                    return Err(KernelError::InvalidPermutation(format!(
                        "point {a} appears in more than one cycle"
                    )));
                }
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    /// Parses disjoint-cycle notation such as `(0 1)(2 3 4)`; `()` is the identity.
    /// Returns the cycles; the degree is fixed by the caller.
    pub fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>, KernelError> {
        let bad = |msg: &str| KernelError::InvalidPermutation(format!("{msg} in {s:?}"));
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let points = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad("bad point")))
                .collect::<Result<Vec<_>, _>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(cycles)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.0[point] as usize
    }

    /// `self` then `other`: `(self * other)(p) = other(self(p))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&p| other.0[p as usize]).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for start in 0..self.0.len() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.apply(p);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl FiniteGroup {
    /// Enumerates the permutation group generated by `gens` by breadth-first
    /// closure and returns its Cayley table.
    pub fn from_permutation_generators(
        gens: &[Permutation],
        name: impl Into<String>,
    ) -> Result<Self, KernelError> {
        Self::from_permutation_generators_with(gens, name, &GroupConfig::default())
    }

    pub fn from_permutation_generators_with(
        gens: &[Permutation],
        name: impl Into<String>,
        config: &GroupConfig,
    ) -> Result<Self, KernelError> {
        let degree = gens.first().map_or(0, Permutation::degree);
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(KernelError::InvalidPermutation(format!(
                "generator {g} has degree {}, expected {degree}",
                g.degree()
            )));
        }
        let id = Permutation::identity(degree);
        let mut index: HashMap<Permutation, usize> = HashMap::from([(id.clone(), 0)]);
        let mut elements = vec![id];
        let mut i = 0;
        while i < elements.len() {
            for g in gens {
                let next = elements[i].then(g);
                if !index.contains_key(&next) {
                    if elements.len() == config.closure_cap {
                        return Err(KernelError::ClosureCapExceeded { cap: config.closure_cap });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            i += 1;
        }
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for (x, px) in elements.iter().enumerate() {
            for (y, py) in elements.iter().enumerate() {
                table[x * n + y] = index[&px.then(py)] as u32;
            }
        }
        Ok(Self::from_flat_table(n, table, name.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, d: usize) -> Permutation {
        Permutation::from_cycles(&Permutation::parse_cycles(s).unwrap(), d).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(Permutation::parse_cycles("(0 1)(2 3 4)").unwrap(), vec![vec![0, 1], vec![2, 3, 4]]);
        assert_eq!(Permutation::parse_cycles("()").unwrap(), Vec::<Vec<usize>>::new());
        assert!(Permutation::parse_cycles("(0 1").is_err());
        assert!(Permutation::parse_cycles("0 1)").is_err());
        assert_eq!(perm("(0 1)(2 3 4)", 5).to_string(), "(0 1)(2 3 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(Permutation::from_cycles(&[vec![0, 1], vec![1, 2]], 3).is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn generated_orders() {
        let g = FiniteGroup::from_permutation_generators(&[perm("(0 1)", 2)], "C2").unwrap();
        assert_eq!(g.order(), 2);
        let g = FiniteGroup::from_permutation_generators(&[perm("(0 1)", 3), perm("(0 1 2)", 3)], "S3")
            .unwrap();
        assert_eq!(g.order(), 6);
        let g = FiniteGroup::from_permutation_generators(
            &[perm("(0 1 2 3 4)", 5), perm("(1 2 4 3)", 5)],
            "F20",
        )
        .unwrap();
        assert_eq!(g.order(), 20);
        assert_eq!(FiniteGroup::from_permutation_generators(&[], "1").unwrap().order(), 1);
    }

    #[test]
    fn closure_cap() {
        let cfg = GroupConfig { closure_cap: 10, ..Default::default() };
        let err = FiniteGroup::from_permutation_generators_with(
            &[perm("(0 1)", 4), perm("(0 1 2 3)", 4)],
            "S4",
            &cfg,
        )
        .unwrap_err();
        assert_eq!(err, KernelError::ClosureCapExceeded { cap: 10 });
    }
}
