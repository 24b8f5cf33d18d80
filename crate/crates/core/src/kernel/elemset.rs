use crate::bitset::BitSet;

use super::Elem;

/// A subset of a group's elements, kept sorted, with an O(1) membership mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    elements: Vec<Elem>,
    mask: BitSet,
    subgroup: bool,
}

impl ElemSet {
    /// An arbitrary subset of a group of order `parent_order`.
    pub fn from_elements(parent_order: usize, elements: impl IntoIterator<Item = Elem>) -> Self {
        let mut mask = BitSet::new(parent_order);
        for x in elements {
            mask.insert(x);
        }
        Self::from_mask(mask, false)
    }

    pub(crate) fn from_mask(mask: BitSet, subgroup: bool) -> Self {
        Self { elements: mask.iter().collect(), mask, subgroup }
    }

    pub(crate) fn mark_subgroup(mut self) -> Self {
        self.subgroup = true;
        self
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.mask.contains(x)
    }

    /// Set when the elements were produced as a subgroup (closure, center, ...).
    pub fn is_subgroup(&self) -> bool {
        self.subgroup
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.elements.iter().copied()
    }

    pub fn mask(&self) -> &BitSet {
        &self.mask
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.mask.is_subset(&other.mask)
    }
}
