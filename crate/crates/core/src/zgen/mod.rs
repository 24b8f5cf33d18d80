//! Enumeration of Z-groups as split metacyclic groups `C_m ⋊_r C_n`.
//!
//! Every group whose Sylow subgroups are all cyclic has a cyclic derived
//! subgroup of order `m` with a cyclic complement of coprime order `n`, acting
//! by `b a b⁻¹ = a^r`. Pinning the `C_m` factor to the derived subgroup
//! (`gcd(r − 1, m) = 1`) and taking the least `r` in its orbit under
//! `r ↦ r^j` (`gcd(j, n) = 1`) yields one triple per isomorphism class.

mod iso;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::arith::{divisors, gcd, pow_mod};
use crate::kernel::FiniteGroup;

pub use iso::{
    generating_set, isomorphism_oracle, isomorphism_oracle_with, DEFAULT_ISO_ORDER_CAP,
};

/// Default cap for [`z_groups_of_order`].
pub const DEFAULT_ORDER_CAP: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZgenError {
    #[error("invalid parameters {params}: {reason}")]
    InvalidParams { params: ZParams, reason: String },
    #[error("group order {order} exceeds the cap of {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("cannot parse {0:?} as m:n:r")]
    Parse(String),
}

/// A triple `(m, n, r)` presenting `⟨a, b | a^m = b^n = 1, b a b⁻¹ = a^r⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZParams {
    pub m: u64,
    pub n: u64,
    pub r: u64,
}

impl ZParams {
    pub const fn new(m: u64, n: u64, r: u64) -> Self {
        Self { m, n, r }
    }

    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    /// Checks the canonical-form invariants; returns the violated one.
    pub fn validate(&self) -> Result<(), ZgenError> {
        let fail = |reason: String| Err(ZgenError::InvalidParams { params: *self, reason });
        let Self { m, n, r } = *self;
        if m == 0 || n == 0 {
            return fail("m and n must be positive".into());
        }
        if gcd(m, n) != 1 {
            return fail(format!("gcd({m}, {n}) ≠ 1"));
        }
        if m == 1 {
            return if r == 1 { Ok(()) } else { fail("m = 1 requires r = 1".into()) };
        }
        if r >= m {
            return fail(format!("r must be a residue below m = {m}"));
        }
        if pow_mod(r, n, m) != 1 {
            return fail(format!("{r}^{n} ≢ 1 (mod {m})"));
        }
        if gcd((r + m - 1) % m, m) != 1 {
            return fail(format!("gcd({r} − 1, {m}) ≠ 1"));
        }
        Ok(())
    }
}

impl fmt::Display for ZParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.m, self.n, self.r)
    }
}

impl FromStr for ZParams {
    type Err = ZgenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let [m, n, r] = parts.as_slice() else {
            return Err(ZgenError::Parse(s.to_string()));
        };
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| ZgenError::Parse(s.to_string()));
        Ok(Self::new(num(m)?, num(n)?, num(r)?))
    }
}

/// Units `r` mod `m` with `r^n ≡ 1`, for every coprime split `order = m·n`,
/// with no canonical-form reduction (`m = 1` contributes `r = 1`).
pub fn raw_z_params(order: u64) -> Vec<ZParams> {
    let mut out = Vec::new();
    for m in divisors(order) {
        let n = order / m;
        if gcd(m, n) != 1 {
            continue;
        }
        if m == 1 {
            out.push(ZParams::new(1, n, 1));
            continue;
        }
        out.extend((1..m).filter(|&r| pow_mod(r, n, m) == 1).map(|r| ZParams::new(m, n, r)));
    }
    out
}

/// One canonical triple per isomorphism class of Z-groups of the given order,
/// sorted by `(m, r)`.
pub fn enumerate_z_params(order: u64) -> Vec<ZParams> {
    let mut out = Vec::new();
    for m in divisors(order) {
        let n = order / m;
        if gcd(m, n) != 1 {
            continue;
        }
        if m == 1 {
            out.push(ZParams::new(1, n, 1));
            continue;
        }
        let mut claimed = vec![false; m as usize];
        for r in 2..m {
            if claimed[r as usize] || pow_mod(r, n, m) != 1 || gcd(r - 1, m) != 1 {
                continue;
            }
            for j in (1..=n).filter(|&j| gcd(j, n) == 1) {
                claimed[pow_mod(r, j, m) as usize] = true;
            }
            out.push(ZParams::new(m, n, r));
        }
    }
    out
}

/// The group on pairs `(i, j)` (index `i·n + j`) with
/// `(i, j)·(i', j') = (i + r^j·i' mod m, j + j' mod n)`.
pub fn realize(params: ZParams) -> Result<FiniteGroup, ZgenError> {
    params.validate()?;
    Ok(realize_unchecked(params))
}

/// Realizes any triple with `gcd(m, n) = 1` and `r^n ≡ 1 (mod m)`, canonical or not.
pub fn realize_unchecked(params: ZParams) -> FiniteGroup {
    let ZParams { m, n, r } = params;
    let (m, n) = (m as usize, n as usize);
    let size = m * n;
    let rpow: Vec<usize> = (0..n).map(|j| pow_mod(r, j as u64, m as u64) as usize).collect();
    let mut table = vec![0u32; size * size];
    for x in 0..size {
        let (i, j) = (x / n, x % n);
        for y in 0..size {
            let (i2, j2) = (y / n, y % n);
            let z = ((i + rpow[j] * i2) % m) * n + (j + j2) % n;
            table[x * size + y] = z as u32;
        }
    }
    FiniteGroup::from_flat_table(size, table, format!("Z[{params}]"))
}

pub fn z_groups_of_order(order: usize) -> Result<Vec<(ZParams, FiniteGroup)>, ZgenError> {
    z_groups_of_order_with(order, DEFAULT_ORDER_CAP)
}

pub fn z_groups_of_order_with(
    order: usize,
    cap: usize,
) -> Result<Vec<(ZParams, FiniteGroup)>, ZgenError> {
    if order > cap {
        return Err(ZgenError::OrderCapExceeded { order, cap });
    }
    enumerate_z_params(order as u64)
        .into_iter()
        .map(|p| realize(p).map(|g| (p, g)))
        .collect()
}
