//! Standard groups built directly as tables (or from permutation generators).

use super::{FiniteGroup, KernelError, Permutation};

/// The cyclic group `C_n` on residues mod `n`.
pub fn cyclic(n: usize) -> Result<FiniteGroup, KernelError> {
    if n == 0 {
        return Err(KernelError::InvalidParameter("cyclic(n) needs n ≥ 1".into()));
    }
    let table = (0..n * n).map(|k| ((k / n + k % n) % n) as u32).collect();
    Ok(FiniteGroup::from_flat_table(n, table, format!("C{n}")))
}

/// The dihedral group of order `2n`: elements `r^i s^j`, index `i + n·j`.
pub fn dihedral(n: usize) -> Result<FiniteGroup, KernelError> {
    if n == 0 {
        return Err(KernelError::InvalidParameter("dihedral(n) needs n ≥ 1".into()));
    }
    let size = 2 * n;
    let mut table = vec![0u32; size * size];
    for x in 0..size {
        let (i, a) = (x % n, x / n);
        for y in 0..size {
            let (k, b) = (y % n, y / n);
            let rot = if a == 0 { (i + k) % n } else { (i + n - k) % n };
            table[x * size + y] = (rot + n * (a ^ b)) as u32;
        }
    }
    Ok(FiniteGroup::from_flat_table(size, table, format!("D{size}")))
}

/// The dicyclic group of order `4n`: `a^{2n} = 1, b² = aⁿ, b a b⁻¹ = a⁻¹`.
/// For `n` a power of two this is the generalized quaternion group `Q_{4n}`.
pub fn dicyclic(n: usize) -> Result<FiniteGroup, KernelError> {
    if n < 2 {
        return Err(KernelError::InvalidParameter("dicyclic(n) needs n ≥ 2".into()));
    }
    let m = 2 * n;
    let size = 2 * m;
    let mut table = vec![0u32; size * size];
    for x in 0..size {
        let (i, j) = (x % m, x / m);
        for y in 0..size {
            let (k, l) = (y % m, y / m);
            // a^i b^j · a^k b^l, using b a^k = a^{-k} b
            let z = match (j, l) {
                (0, _) => (i + k) % m + m * l,
                (1, 0) => (i + m - k) % m + m,
                _ => (i + m - k + n) % m,
            };
            table[x * size + y] = z as u32;
        }
    }
    Ok(FiniteGroup::from_flat_table(size, table, format!("Dic{n}")))
}

/// `G × H` with componentwise product; `(g, h)` has index `g·|H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (a, b) = (g.order(), h.order());
    let size = a * b;
    let mut table = vec![0u32; size * size];
    for x in 0..size {
        for y in 0..size {
            let z = g.mul(x / b, y / b) * b + h.mul(x % b, y % b);
            table[x * size + y] = z as u32;
        }
    }
    FiniteGroup::from_flat_table(size, table, format!("{}x{}", g.name(), h.name()))
}

fn cycle(points: &[usize], degree: usize) -> Permutation {
    Permutation::from_cycles(&[points.to_vec()], degree).expect("valid cycle")
}

/// `S_d` from a transposition and a long cycle.
pub fn symmetric(d: usize) -> Result<FiniteGroup, KernelError> {
    if d == 0 {
        return Err(KernelError::InvalidParameter("symmetric(d) needs d ≥ 1".into()));
    }
    let gens = if d >= 2 {
        vec![cycle(&[0, 1], d), cycle(&(0..d).collect::<Vec<_>>(), d)]
    } else {
        Vec::new()
    };
    FiniteGroup::from_permutation_generators(&gens, format!("S{d}"))
}

/// `A_d` from the 3-cycles `(0 1 i)`.
pub fn alternating(d: usize) -> Result<FiniteGroup, KernelError> {
    if d == 0 {
        return Err(KernelError::InvalidParameter("alternating(d) needs d ≥ 1".into()));
    }
    let gens: Vec<_> = (2..d).map(|i| cycle(&[0, 1, i], d)).collect();
    FiniteGroup::from_permutation_generators(&gens, format!("A{d}"))
}

/// The Frobenius group of order 20, `⟨(0 1 2 3 4), (1 2 4 3)⟩`.
pub fn frobenius_20() -> FiniteGroup {
    FiniteGroup::from_permutation_generators(
        &[cycle(&[0, 1, 2, 3, 4], 5), cycle(&[1, 2, 4, 3], 5)],
        "F20",
    )
    .expect("F20 closure is small")
}
