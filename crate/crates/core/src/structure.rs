//! Subgroup-theoretic predicates and constructions.
//!
//! Everything here is a pure function of an immutable [`FiniteGroup`]. Normal
//! subgroups come from joins of conjugacy-class closures; Frobenius groups are
//! detected through a normal subgroup that contains the centralizer of each of
//! its nonidentity elements, with the literal complement definition kept as an
//! oracle for small orders.

use std::collections::HashSet;

use thiserror::Error;

use crate::arith::{gcd, p_part, PrimeFactorization};
use crate::bitset::BitSet;
use crate::kernel::{Elem, ElemSet, FiniteGroup, IDENTITY};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("prime {p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup enumeration exceeded the cap of {cap}")]
    LatticeCapExceeded { cap: usize },
    #[error("group order {order} exceeds the cap of {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
}

/// Default cap on the number of (normal) subgroups enumerated.
pub const DEFAULT_LATTICE_CAP: usize = 10_000;
/// Default order cap for [`frobenius_bruteforce_oracle`].
pub const DEFAULT_ORACLE_ORDER_CAP: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusResult {
    pub is_frobenius: bool,
    pub kernel: Option<ElemSet>,
    pub complement_order: Option<usize>,
}

impl FrobeniusResult {
    fn no() -> Self {
        Self { is_frobenius: false, kernel: None, complement_order: None }
    }
}

fn check_prime(g: &FiniteGroup, p: u64) -> Result<u64, StructureError> {
    let pp = p_part(g.order() as u64, p);
    if p < 2 || pp == 1 {
        return Err(StructureError::PrimeDoesNotDivide { p, order: g.order() });
    }
    Ok(pp)
}

/// True iff the subgroup `h` has an element of order `|h|`.
pub fn is_cyclic_subgroup(g: &FiniteGroup, h: &ElemSet) -> bool {
    h.iter().any(|x| g.element_order(x) == h.len())
}

pub fn center(g: &FiniteGroup) -> ElemSet {
    let n = g.order();
    let mask: BitSet = (0..n).filter(|&z| (0..n).all(|x| g.commute(z, x))).collect();
    ElemSet::from_elements(n, mask.iter()).mark_subgroup()
}

pub fn centralizer(g: &FiniteGroup, x: Elem) -> ElemSet {
    let n = g.order();
    ElemSet::from_elements(n, (0..n).filter(|&y| g.commute(x, y))).mark_subgroup()
}

/// `{g : h^g = h}`.
pub fn normalizer(g: &FiniteGroup, h: &ElemSet) -> ElemSet {
    let n = g.order();
    ElemSet::from_elements(n, (0..n).filter(|&t| h.iter().all(|x| h.contains(g.conj(x, t)))))
        .mark_subgroup()
}

pub fn is_normal(g: &FiniteGroup, h: &ElemSet) -> bool {
    (0..g.order()).all(|t| h.iter().all(|x| h.contains(g.conj(x, t))))
}

/// `G'`, the closure of all commutators.
pub fn derived_subgroup(g: &FiniteGroup) -> ElemSet {
    let all = ElemSet::from_elements(g.order(), 0..g.order());
    derived_subgroup_of(g, &all)
}

/// `H'` for a subgroup `h`.
pub fn derived_subgroup_of(g: &FiniteGroup, h: &ElemSet) -> ElemSet {
    let mut comms = BitSet::new(g.order());
    for x in h.iter() {
        for y in h.iter() {
            comms.insert(g.commutator(x, y));
        }
    }
    g.closure(&comms.iter().collect::<Vec<_>>())
}

/// The derived series `G ▷ G' ▷ G'' ▷ …` up to the first repeat.
pub fn derived_series(g: &FiniteGroup) -> Vec<ElemSet> {
    let mut series = vec![ElemSet::from_elements(g.order(), 0..g.order()).mark_subgroup()];
    loop {
        let last = series.last().expect("nonempty");
        let next = derived_subgroup_of(g, last);
        if next.len() == last.len() {
            return series;
        }
        series.push(next);
    }
}

/// True iff the derived series reaches the trivial subgroup.
pub fn derived_series_is_solvable(g: &FiniteGroup) -> bool {
    derived_series(g).last().is_some_and(|s| s.len() == 1)
}

/// Conjugacy classes, each sorted, ordered by least element.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<Vec<Elem>> {
    let n = g.order();
    let mut seen = BitSet::new(n);
    let mut classes = Vec::new();
    for x in 0..n {
        if seen.contains(x) {
            continue;
        }
        let mut class = BitSet::new(n);
        for t in 0..n {
            class.insert(g.conj(x, t));
        }
        seen.union_with(&class);
        classes.push(class.iter().collect());
    }
    classes
}

/// The smallest normal subgroup containing `gens`.
pub fn normal_closure(g: &FiniteGroup, gens: &[Elem]) -> ElemSet {
    let mut conjugates = BitSet::new(g.order());
    for &x in gens {
        for t in 0..g.order() {
            conjugates.insert(g.conj(x, t));
        }
    }
    g.closure(&conjugates.iter().collect::<Vec<_>>())
}

/// `HK` as a set (a subgroup whenever one factor is normal).
fn product_set(g: &FiniteGroup, h: &ElemSet, k: &ElemSet) -> ElemSet {
    let mut mask = BitSet::new(g.order());
    for x in h.iter() {
        for y in k.iter() {
            mask.insert(g.mul(x, y));
        }
    }
    ElemSet::from_elements(g.order(), mask.iter()).mark_subgroup()
}

pub fn normal_subgroups(g: &FiniteGroup) -> Result<Vec<ElemSet>, StructureError> {
    normal_subgroups_with(g, DEFAULT_LATTICE_CAP)
}

/// All normal subgroups, sorted by size (then lexicographically).
pub fn normal_subgroups_with(g: &FiniteGroup, cap: usize) -> Result<Vec<ElemSet>, StructureError> {
    let mut base: Vec<ElemSet> = Vec::new();
    for class in conjugacy_classes(g) {
        if class[0] == IDENTITY {
            continue;
        }
        let nc = g.closure(&class);
        if !base.contains(&nc) {
            base.push(nc);
        }
    }
    let trivial = g.closure(&[]);
    let mut seen: HashSet<BitSet> = HashSet::from([trivial.mask().clone()]);
    let mut found = vec![trivial];
    let mut i = 0;
    while i < found.len() {
        for b in &base {
            if b.is_subset(&found[i]) {
                continue;
            }
            let joined = product_set(g, &found[i], b);
            if seen.insert(joined.mask().clone()) {
                if found.len() == cap {
                    return Err(StructureError::LatticeCapExceeded { cap });
                }
                found.push(joined);
            }
        }
        i += 1;
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.as_slice().cmp(b.as_slice())));
    Ok(found)
}

/// The factor group on cosets of a normal subgroup; coset `k` is represented
/// by its least element and the identity coset is index 0.
pub fn quotient_group(g: &FiniteGroup, normal: &ElemSet) -> Result<FiniteGroup, StructureError> {
    let closed = normal.contains(IDENTITY)
        && normal.iter().all(|x| normal.iter().all(|y| normal.contains(g.mul(x, y))));
    if !closed || !is_normal(g, normal) {
        return Err(StructureError::NotNormal);
    }
    let n = g.order();
    let mut coset = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset[x] != usize::MAX {
            continue;
        }
        for k in normal.iter() {
            coset[g.mul(x, k)] = reps.len();
        }
        reps.push(x);
    }
    let q = reps.len();
    let mut table = vec![0u32; q * q];
    for (a, &ra) in reps.iter().enumerate() {
        for (b, &rb) in reps.iter().enumerate() {
            table[a * q + b] = coset[g.mul(ra, rb)] as u32;
        }
    }
    Ok(FiniteGroup::from_flat_table(q, table, format!("{}/N{}", g.name(), normal.len())))
}

/// A Sylow p-subgroup, grown from a cyclic p-subgroup of maximal order by
/// repeatedly adjoining a p-element of the normalizer that lies outside it.
pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Result<ElemSet, StructureError> {
    let target = check_prime(g, p)? as usize;
    let start = g
        .p_elements(p)
        .max_by_key(|&x| (g.element_order(x), std::cmp::Reverse(x)))
        .expect("identity is a p-element");
    let mut gens = vec![start];
    let mut sylow = g.closure(&gens);
    while sylow.len() < target {
        let norm = normalizer(g, &sylow);
        // N(P)/P has order divisible by p while P is not Sylow, and the
        // p-part of any element of order p in N(P)/P lifts to a p-element.
        let y = g
            .p_elements(p)
            .find(|&y| norm.contains(y) && !sylow.contains(y))
            .expect("normalizer contains a p-element outside a non-Sylow p-subgroup");
        gens.push(y);
        sylow = g.closure(&gens);
    }
    Ok(sylow)
}

/// Every Sylow subgroup is cyclic: for each `p | |G|` some element has order `|G|_p`.
pub fn is_z_group(g: &FiniteGroup) -> bool {
    let n = g.order() as u64;
    PrimeFactorization::of(n)
        .pairs()
        .iter()
        .all(|&(p, e)| g.element_orders().any(|o| o as u64 == p.pow(e)))
}

/// True iff the Sylow p-subgroup has a unique subgroup of order `p`, i.e. is
/// cyclic or (for `p = 2`) generalized quaternion.
pub fn sylow_cyclic_or_generalized_quaternion(
    g: &FiniteGroup,
    p: u64,
) -> Result<bool, StructureError> {
    let sylow = sylow_subgroup(g, p)?;
    let solutions = sylow.iter().filter(|&x| g.pow(x, p as i64) == IDENTITY).count();
    Ok(solutions as u64 == p)
}

/// Every Sylow subgroup is normal.
pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    g.order_factorization()
        .primes()
        .all(|p| is_normal(g, &sylow_subgroup(g, p).expect("p divides |G|")))
}

/// True iff `G` has a normal subgroup of order `|G| / |G|_p`.
pub fn is_p_nilpotent(g: &FiniteGroup, p: u64) -> Result<bool, StructureError> {
    let pp = check_prime(g, p)? as usize;
    let target = g.order() / pp;
    Ok(normal_subgroups(g)?.iter().any(|nsg| nsg.len() == target))
}

/// Detects a Frobenius kernel: a proper nontrivial normal subgroup `N` with
/// `C_G(x) ⊆ N` for every nonidentity `x ∈ N`.
pub fn is_frobenius(g: &FiniteGroup) -> Result<FrobeniusResult, StructureError> {
    let n = g.order();
    if n <= 1 {
        return Ok(FrobeniusResult::no());
    }
    for nsg in normal_subgroups(g)? {
        if nsg.len() == 1 || nsg.len() == n {
            continue;
        }
        let outside: Vec<Elem> = (0..n).filter(|&y| !nsg.contains(y)).collect();
        let ok = nsg
            .iter()
            .filter(|&x| x != IDENTITY)
            .all(|x| outside.iter().all(|&y| !g.commute(x, y)));
        if ok {
            let complement_order = n / nsg.len();
            return Ok(FrobeniusResult {
                is_frobenius: true,
                kernel: Some(nsg),
                complement_order: Some(complement_order),
            });
        }
    }
    Ok(FrobeniusResult::no())
}

/// Every subgroup, as joins of cyclic subgroups; sorted by size then elements.
pub fn all_subgroups(g: &FiniteGroup, cap: usize) -> Result<Vec<ElemSet>, StructureError> {
    let n = g.order();
    let mut cyclic: Vec<(Elem, ElemSet)> = Vec::new();
    for x in 0..n {
        let c = g.cyclic_subgroup(x);
        if !cyclic.iter().any(|(_, d)| *d == c) {
            cyclic.push((x, c));
        }
    }
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut found: Vec<(Vec<Elem>, ElemSet)> = Vec::new();
    for (x, c) in &cyclic {
        if seen.insert(c.mask().clone()) {
            found.push((vec![*x], c.clone()));
        }
    }
    let mut i = 0;
    while i < found.len() {
        for (x, c) in &cyclic {
            if c.is_subset(&found[i].1) {
                continue;
            }
            let mut gens = found[i].0.clone();
            gens.push(*x);
            let h = g.closure(&gens);
            if seen.insert(h.mask().clone()) {
                if found.len() == cap {
                    return Err(StructureError::LatticeCapExceeded { cap });
                }
                found.push((gens, h));
            }
        }
        i += 1;
    }
    let mut subs: Vec<ElemSet> = found.into_iter().map(|(_, h)| h).collect();
    subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.as_slice().cmp(b.as_slice())));
    Ok(subs)
}

pub fn frobenius_bruteforce_oracle(g: &FiniteGroup) -> Result<FrobeniusResult, StructureError> {
    frobenius_bruteforce_oracle_with(g, DEFAULT_ORACLE_ORDER_CAP)
}

/// Literal definition: a proper nontrivial `H` with `H ∩ H^t = 1` for all `t ∉ H`.
pub fn frobenius_bruteforce_oracle_with(
    g: &FiniteGroup,
    order_cap: usize,
) -> Result<FrobeniusResult, StructureError> {
    let n = g.order();
    if n > order_cap {
        return Err(StructureError::OrderCapExceeded { order: n, cap: order_cap });
    }
    for h in all_subgroups(g, DEFAULT_LATTICE_CAP)? {
        if h.len() == 1 || h.len() == n {
            continue;
        }
        let malnormal = (0..n).filter(|&t| !h.contains(t)).all(|t| {
            h.iter().filter(|&x| x != IDENTITY).all(|x| !h.contains(g.conj(x, t)))
        });
        if malnormal {
            let mut covered = BitSet::new(n);
            for t in 0..n {
                for x in h.iter().filter(|&x| x != IDENTITY) {
                    covered.insert(g.conj(x, t));
                }
            }
            let kernel =
                ElemSet::from_elements(n, (0..n).filter(|&x| !covered.contains(x))).mark_subgroup();
            return Ok(FrobeniusResult {
                is_frobenius: true,
                kernel: Some(kernel),
                complement_order: Some(h.len()),
            });
        }
    }
    Ok(FrobeniusResult::no())
}

/// `gcd(|H|, [G:H]) = 1`.
pub fn is_hall(g: &FiniteGroup, h: &ElemSet) -> bool {
    gcd(h.len(), g.order() / h.len()) == 1
}
