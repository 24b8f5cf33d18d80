//! Finite groups as validated multiplication tables.
//!
//! Every group is stored as a flat `n × n` table of element indices with the
//! identity normalized to index `0`. Inverses and element orders are cached
//! at construction, so nearly every downstream query is a table lookup.

mod constructors;
mod elemset;
mod perm;

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arith::{gcd, PrimeFactorization};
use crate::bitset::BitSet;

pub use constructors::{
    alternating, cyclic, dicyclic, dihedral, direct_product, frobenius_20, symmetric,
};
pub use elemset::ElemSet;
pub use perm::Permutation;

/// Index of a group element. The identity is always `0`.
pub type Elem = usize;

/// The identity element of every [`FiniteGroup`].
pub const IDENTITY: Elem = 0;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("empty Cayley table")]
    EmptyTable,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("not a Latin square: {0}")]
    NotLatinSquare(String),
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("not associative: ({x}·{y})·{z} ≠ {x}·({y}·{z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("the identity element has no primary decomposition")]
    IdentityElement,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Validation and enumeration limits for group construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupConfig {
    /// Tables up to this order get the full O(n³) associativity check.
    pub full_associativity_bound: usize,
    /// Random triples checked above the bound.
    pub associativity_samples: usize,
    /// Maximum size of a permutation group closure.
    pub closure_cap: usize,
}

impl Default for GroupConfig {
    fn default() -> Self {
        Self {
            full_associativity_bound: 512,
            associativity_samples: 100_000,
            closure_cap: 20_000,
        }
    }
}

/// Which route [`FiniteGroup::cyclic_pair_with`] takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PairMode {
    /// Commutation test, then compare the cyclic subgroups' common part.
    #[default]
    Fast,
    /// Closure of `{x, y}` followed by a maximal-order scan.
    Naive,
}

/// An immutable finite group given by its multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<Elem>,
    orders: Vec<u32>,
    name: String,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteGroup {
    /// Validates a Cayley table and builds the group, renumbering the
    /// identity to index 0.
    pub fn from_cayley_table(
        rows: &[Vec<usize>],
        name: impl Into<String>,
    ) -> Result<Self, KernelError> {
        Self::from_cayley_table_with(rows, name, &GroupConfig::default())
    }

    pub fn from_cayley_table_with(
        rows: &[Vec<usize>],
        name: impl Into<String>,
        config: &GroupConfig,
    ) -> Result<Self, KernelError> {
        let n = rows.len();
        if n == 0 {
            return Err(KernelError::EmptyTable);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(KernelError::NotSquare { row, len: r.len(), expected: n });
            }
            if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(KernelError::EntryOutOfRange { row, col, value });
            }
        }
        let mut seen = BitSet::new(n);
        for (i, r) in rows.iter().enumerate() {
            seen.clear();
            for &v in r {
                if !seen.insert(v) {
                    return Err(KernelError::NotLatinSquare(format!(
                        "row {i} repeats entry {v}"
                    )));
                }
            }
        }
        for j in 0..n {
            seen.clear();
            for r in rows {
                if !seen.insert(r[j]) {
                    return Err(KernelError::NotLatinSquare(format!(
                        "column {j} repeats entry {}",
                        r[j]
                    )));
                }
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or(KernelError::NoIdentity)?;

        let check = |x: usize, y: usize, z: usize| rows[rows[x][y]][z] == rows[x][rows[y][z]];
        if n <= config.full_associativity_bound {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if !check(x, y, z) {
                            return Err(KernelError::NotAssociative { x, y, z });
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_a550c);
            for _ in 0..config.associativity_samples {
                let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !check(x, y, z) {
                    return Err(KernelError::NotAssociative { x, y, z });
                }
            }
        }

        // swap labels e <-> 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                table[relabel(x) * n + relabel(y)] = relabel(rows[x][y]) as u32;
            }
        }
        Ok(Self::from_flat_table(n, table, name.into()))
    }

    /// Builds a group from a trusted flat table whose identity is index 0.
    pub(crate) fn from_flat_table(order: usize, table: Vec<u32>, name: String) -> Self {
        debug_assert_eq!(table.len(), order * order);
        debug_assert!((0..order).all(|x| table[x] as usize == x && table[x * order] as usize == x));
        let mut inverses = vec![0; order];
        for x in 0..order {
            let row = &table[x * order..(x + 1) * order];
            inverses[x] = row.iter().position(|&v| v == 0).expect("row contains identity");
        }
        let mut orders = vec![1u32; order];
        for (x, o) in orders.iter_mut().enumerate() {
            let mut k = 1;
            let mut p = x;
            while p != IDENTITY {
                p = table[p * order + x] as usize;
                k += 1;
            }
            *o = k;
        }
        Self { order, table, inverses, orders, name }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.table[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: Elem) -> Elem {
        self.inverses[x]
    }

    /// Cached order of `x`: the least `k ≥ 1` with `x^k = 1`.
    #[inline]
    pub fn element_order(&self, x: Elem) -> usize {
        self.orders[x] as usize
    }

    pub fn element_orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.orders.iter().map(|&o| o as usize)
    }

    /// `x^k` for any integer `k`.
    pub fn pow(&self, x: Elem, k: i64) -> Elem {
        let o = self.element_order(x) as i64;
        let mut e = k.rem_euclid(o) as u64;
        let mut base = x;
        let mut acc = IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `x^g = g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    #[inline]
    pub fn commute(&self, x: Elem, y: Elem) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    /// `x⁻¹ y⁻¹ x y`.
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.commute(x, y)))
    }

    /// `π(|G|)` together with the exponents.
    pub fn order_factorization(&self) -> PrimeFactorization {
        PrimeFactorization::of(self.order as u64)
    }

    /// Cayley table rows (for export).
    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    /// Histogram of element orders, keyed by order.
    pub fn order_statistics(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for o in self.element_orders() {
            *h.entry(o).or_insert(0) += 1;
        }
        h
    }

    /// Smallest subgroup containing `gens`.
    pub fn closure(&self, gens: &[Elem]) -> ElemSet {
        let mut gs: Vec<Elem> = gens.iter().copied().filter(|&g| g != IDENTITY).collect();
        gs.sort_unstable();
        gs.dedup();
        let mut mask = BitSet::new(self.order);
        mask.insert(IDENTITY);
        let mut elems = vec![IDENTITY];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in &gs {
                let y = self.mul(x, g);
                if mask.insert(y) {
                    elems.push(y);
                }
            }
            i += 1;
        }
        ElemSet::from_mask(mask, true)
    }

    /// Closure of a set that is already known to contain a subgroup `base`,
    /// extended by `extra` generators.
    pub fn join(&self, base: &ElemSet, extra: &[Elem]) -> ElemSet {
        let mut gens: Vec<Elem> = base.iter().collect();
        gens.extend_from_slice(extra);
        self.closure(&gens)
    }

    /// `⟨x⟩` as a sorted list of powers.
    pub fn cyclic_subgroup(&self, x: Elem) -> ElemSet {
        let mut mask = BitSet::new(self.order);
        let mut p = IDENTITY;
        loop {
            mask.insert(p);
            p = self.mul(p, x);
            if p == IDENTITY {
                break;
            }
        }
        ElemSet::from_mask(mask, true)
    }

    /// True iff `⟨x, y⟩` is cyclic.
    pub fn cyclic_pair(&self, x: Elem, y: Elem) -> bool {
        self.cyclic_pair_with(x, y, PairMode::Fast)
    }

    pub fn cyclic_pair_with(&self, x: Elem, y: Elem, mode: PairMode) -> bool {
        match mode {
            PairMode::Fast => self.cyclic_pair_fast(x, y),
            PairMode::Naive => self.cyclic_pair_naive(x, y),
        }
    }

    // For commuting x, y the group ⟨x,y⟩ = ⟨x⟩⟨y⟩ is abelian of exponent
    // lcm(o(x), o(y)); it is cyclic iff |⟨x⟩ ∩ ⟨y⟩| = gcd(o(x), o(y)), i.e. iff
    // the order-g subgroups of ⟨x⟩ and ⟨y⟩ coincide.
    fn cyclic_pair_fast(&self, x: Elem, y: Elem) -> bool {
        if !self.commute(x, y) {
            return false;
        }
        let (ox, oy) = (self.element_order(x), self.element_order(y));
        let g = gcd(ox, oy);
        if g == 1 {
            return true;
        }
        let a = self.pow(x, (ox / g) as i64);
        let b = self.pow(y, (oy / g) as i64);
        let mut c = a;
        for _ in 0..g {
            if c == b {
                return true;
            }
            c = self.mul(c, a);
        }
        false
    }

    fn cyclic_pair_naive(&self, x: Elem, y: Elem) -> bool {
        let h = self.closure(&[x, y]);
        let size = h.len();
        let found = h.iter().any(|z| self.element_order(z) == size);
        found
    }

    /// Splits `g` into pairwise commuting prime-power parts `g_p = g^{k_p}`,
    /// one for each prime dividing `o(g)`.
    pub fn primary_decomposition(&self, g: Elem) -> Result<BTreeMap<u64, Elem>, KernelError> {
        if g == IDENTITY {
            return Err(KernelError::IdentityElement);
        }
        let o = self.element_order(g) as u64;
        let mut parts = BTreeMap::new();
        for &(p, e) in PrimeFactorization::of(o).pairs() {
            let pe = p.pow(e);
            let rest = o / pe;
            // k ≡ 1 (mod p^e), k ≡ 0 (mod rest)
            let k = rest * crate::arith::inv_mod(rest % pe, pe).expect("coprime parts") % o;
            parts.insert(p, self.pow(g, k as i64));
        }
        Ok(parts)
    }

    /// All elements whose order is a power of `p` (the identity included).
    pub fn p_elements(&self, p: u64) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order).filter(move |&x| crate::arith::is_power_of(self.element_order(x) as u64, p))
    }
}
