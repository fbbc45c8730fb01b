//! Derivation operators, concept enumeration and the lattice order.

use thiserror::Error;

use crate::bitset::BitSet;
use crate::context::FormalContext;

pub const DEFAULT_CONCEPT_LIMIT: usize = 100_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("index {index} out of range for {universe} of size {size}")]
    IndexOutOfRange {
        index: usize,
        universe: &'static str,
        size: usize,
    },
    #[error("concept limit of {limit} exceeded; raise the limit or reduce the context")]
    TooManyConcepts { limit: usize },
}

/// A formal concept `(A, B)` with `A' = B` and `B' = A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Concept {
    pub extent: BitSet,
    pub intent: BitSet,
}

fn check_range(set: &BitSet, size: usize, universe: &'static str) -> Result<(), LatticeError> {
    match set.iter().find(|&i| i >= size) {
        Some(index) => Err(LatticeError::IndexOutOfRange {
            index,
            universe,
            size,
        }),
        None if set.capacity() != size => Err(LatticeError::IndexOutOfRange {
            index: set.capacity(),
            universe,
            size,
        }),
        None => Ok(()),
    }
}

/// `A'`: attributes shared by every object in `objects`.
pub fn derive_objects(ctx: &FormalContext, objects: &BitSet) -> Result<BitSet, LatticeError> {
    check_range(objects, ctx.num_objects(), "objects")?;
    Ok(intent_of(ctx, objects))
}

/// `B'`: objects having every attribute in `attributes`.
pub fn derive_attributes(ctx: &FormalContext, attributes: &BitSet) -> Result<BitSet, LatticeError> {
    check_range(attributes, ctx.num_attributes(), "attributes")?;
    Ok(extent_of(ctx, attributes))
}

pub(crate) fn intent_of(ctx: &FormalContext, objects: &BitSet) -> BitSet {
    let mut out = BitSet::full(ctx.num_attributes());
    for g in objects {
        out.intersect_with(ctx.row(g));
    }
    out
}

pub(crate) fn extent_of(ctx: &FormalContext, attributes: &BitSet) -> BitSet {
    let mut out = BitSet::full(ctx.num_objects());
    for m in attributes {
        out.intersect_with(ctx.column(m));
    }
    out
}

/// The concept lattice with its order, covering relation and incomparable pairs.
#[derive(Debug, Clone)]
pub struct ConceptLattice {
    concepts: Vec<Concept>,
    /// Row `x` holds `{y | x ≤ y}`.
    up: Vec<BitSet>,
    covers: Vec<(usize, usize)>,
    incomparable: Vec<(usize, usize)>,
}

impl ConceptLattice {
    /// Builds the lattice structure from concepts already in canonical order.
    fn from_sorted(concepts: Vec<Concept>) -> Self {
        let n = concepts.len();
        let up: Vec<BitSet> = concepts
            .iter()
            .map(|x| {
                BitSet::from_indices(
                    n,
                    (0..n).filter(|&y| x.extent.is_subset(&concepts[y].extent)),
                )
            })
            .collect();
        let covers = transitive_reduction(&up);
        let incomparable = (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .filter(|&(x, y)| !up[x].contains(y) && !up[y].contains(x))
            .collect();
        ConceptLattice {
            concepts,
            up,
            covers,
            incomparable,
        }
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn concepts(&self) -> &[Concept] {
        &self.concepts
    }

    pub fn concept(&self, i: usize) -> &Concept {
        &self.concepts[i]
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// The order as rows of up-sets.
    pub fn order(&self) -> &[BitSet] {
        &self.up
    }

    /// Cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Unordered incomparable pairs `(x, y)` with `x < y` as indices.
    pub fn incomparable_pairs(&self) -> &[(usize, usize)] {
        &self.incomparable
    }

    pub fn is_chain(&self) -> bool {
        self.incomparable.is_empty()
    }

    /// Canonical order puts the smallest extent first.
    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.concepts.len() - 1
    }

    /// Index of the concept with exactly this extent.
    pub fn find_extent(&self, extent: &BitSet) -> Option<usize> {
        self.concepts
            .binary_search_by(|c| c.extent.cmp(extent))
            .ok()
    }
}

/// Enumerates all concepts with the default safety cap.
pub fn concepts(ctx: &FormalContext) -> Result<ConceptLattice, LatticeError> {
    concepts_with_limit(ctx, DEFAULT_CONCEPT_LIMIT)
}

/// NextClosure over extents, then canonical sort by extent bitset value.
pub fn concepts_with_limit(
    ctx: &FormalContext,
    limit: usize,
) -> Result<ConceptLattice, LatticeError> {
    let n = ctx.num_objects();
    let closure = |a: &BitSet| extent_of(ctx, &intent_of(ctx, a));

    let mut found = Vec::new();
    let mut current = closure(&BitSet::new(n));
    loop {
        if found.len() == limit {
            return Err(LatticeError::TooManyConcepts { limit });
        }
        let intent = intent_of(ctx, &current);
        found.push(Concept {
            extent: current.clone(),
            intent,
        });

        let mut next = None;
        let mut base = current.clone();
        for i in (0..n).rev() {
            if base.remove(i) {
                continue;
            }
            let mut candidate = base.clone();
            candidate.insert(i);
            let closed = closure(&candidate);
            if closed.agrees_below(&base, i) {
                next = Some(closed);
                break;
            }
        }
        match next {
            Some(c) => current = c,
            None => break,
        }
    }
    found.sort_by(|a, b| a.extent.cmp(&b.extent));
    Ok(ConceptLattice::from_sorted(found))
}

/// Cover pairs of a finite order given as up-set rows (`up[x]` ∋ `x`).
pub fn transitive_reduction(up: &[BitSet]) -> Vec<(usize, usize)> {
    let mut covers = Vec::new();
    for (x, row) in up.iter().enumerate() {
        let mut strict = row.clone();
        strict.remove(x);
        let mut candidates = strict.clone();
        for z in &strict {
            let mut above = up[z].clone();
            above.remove(z);
            candidates.difference_with(&above);
        }
        covers.extend(candidates.iter().map(|y| (x, y)));
    }
    covers
}
