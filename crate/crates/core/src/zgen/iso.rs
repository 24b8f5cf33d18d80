use crate::bitset::BitSet;
use crate::kernel::{Elem, FiniteGroup, IDENTITY};

use super::ZgenError;

/// Default order cap for [`isomorphism_oracle`].
pub const DEFAULT_ISO_ORDER_CAP: usize = 255;

/// Greedy generating set: repeatedly adjoin an element of largest order
/// outside the current closure.
pub fn generating_set(g: &FiniteGroup) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut current = g.closure(&[]);
    while current.len() < g.order() {
        let next = (0..g.order())
            .filter(|&x| !current.contains(x))
            .max_by_key(|&x| (g.element_order(x), std::cmp::Reverse(x)))
            .expect("closure is proper");
        gens.push(next);
        current = g.closure(&gens);
    }
    gens
}

pub fn isomorphism_oracle(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool, ZgenError> {
    isomorphism_oracle_with(g, h, DEFAULT_ISO_ORDER_CAP)
}

/// Brute-force isomorphism test: tries every order-compatible image tuple of a
/// generating set of `g` and checks that it extends to a bijective homomorphism.
pub fn isomorphism_oracle_with(
    g: &FiniteGroup,
    h: &FiniteGroup,
    cap: usize,
) -> Result<bool, ZgenError> {
    for order in [g.order(), h.order()] {
        if order > cap {
            return Err(ZgenError::OrderCapExceeded { order, cap });
        }
    }
    if g.order() != h.order() || g.order_statistics() != h.order_statistics() {
        return Ok(false);
    }
    let gens = generating_set(g);
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&s| (0..h.order()).filter(|&t| h.element_order(t) == g.element_order(s)).collect())
        .collect();
    let mut images = vec![IDENTITY; gens.len()];
    Ok(search(g, h, &gens, &candidates, &mut images, 0))
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    images: &mut Vec<Elem>,
    depth: usize,
) -> bool {
    if depth == gens.len() {
        return extends_to_isomorphism(g, h, gens, images);
    }
    for &t in &candidates[depth] {
        images[depth] = t;
        if search(g, h, gens, candidates, images, depth + 1) {
            return true;
        }
    }
    false
}

// Defines φ(x·s) = φ(x)·φ(s) along every Cayley-graph edge; consistency on all
// edges makes φ a homomorphism, and injectivity makes it an isomorphism.
fn extends_to_isomorphism(g: &FiniteGroup, h: &FiniteGroup, gens: &[Elem], images: &[Elem]) -> bool {
    let n = g.order();
    let mut phi = vec![usize::MAX; n];
    phi[IDENTITY] = IDENTITY;
    let mut queue = vec![IDENTITY];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let img = h.mul(phi[x], t);
            if phi[y] == usize::MAX {
                phi[y] = img;
                queue.push(y);
            } else if phi[y] != img {
                return false;
            }
        }
        i += 1;
    }
    let mut hit = BitSet::new(n);
    phi.iter().all(|&v| v != usize::MAX && hit.insert(v))
}
