use crate::context::FormalContext;
use crate::lattice::{extent_of, intent_of, ConceptLattice};

use super::{
    complement, is_ferrers, order_dimension_with, CellRelation, DimensionError, FerrersCover,
    SearchLimits,
};

/// A total order on concept indices, bottom first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearExtension {
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl LinearExtension {
    /// Wraps a permutation of `0..order.len()`.
    pub fn from_order(order: Vec<usize>) -> Result<Self, DimensionError> {
        let n = order.len();
        let mut pos = vec![usize::MAX; n];
        for (rank, &c) in order.iter().enumerate() {
            if c >= n || pos[c] != usize::MAX {
                return Err(DimensionError::InvalidExtension(format!(
                    "{order:?} is not a permutation of 0..{n}"
                )));
            }
            pos[c] = rank;
        }
        Ok(LinearExtension { order, pos })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Rank of concept `c`: the number of concepts placed below it.
    pub fn position(&self, c: usize) -> usize {
        self.pos[c]
    }

    pub fn positions(&self) -> &[usize] {
        &self.pos
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Whether every `x ≤ y` of the lattice has `pos(x) ≤ pos(y)`.
    pub fn extends(&self, lattice: &ConceptLattice) -> bool {
        self.len() == lattice.len()
            && (0..lattice.len()).all(|x| {
                lattice.order()[x]
                    .iter()
                    .all(|y| self.pos[x] <= self.pos[y])
            })
    }
}

/// A family of linear extensions whose intersection is the lattice order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realizer {
    pub extensions: Vec<LinearExtension>,
}

impl Realizer {
    pub fn dimension(&self) -> usize {
        self.extensions.len()
    }
}

/// Linear extension induced by one Ferrers part `F` of a cover.
///
/// `J = (G × M) \ F` contains `I` and is Ferrers, so `𝔅(G, M, J)` is a
/// chain. Each concept is sent to its `J`-closure `A^JJ` (a monotone map
/// into that chain); concepts landing on the same chain element keep
/// canonical index order.
pub fn linear_extension_from_ferrers(
    ctx: &FormalContext,
    f: &CellRelation,
    lattice: &ConceptLattice,
) -> Result<LinearExtension, DimensionError> {
    let j = complement(f);
    let incidence = CellRelation::incidence(ctx);
    if !incidence.is_subset(&j) {
        return Err(DimensionError::ContractViolation(
            "Ferrers part meets the incidence relation".into(),
        ));
    }
    if !is_ferrers(&j) {
        return Err(DimensionError::ContractViolation(
            "complement of the part is not a Ferrers relation".into(),
        ));
    }
    let j_ctx = FormalContext::new(ctx.objects().to_vec(), ctx.attributes().to_vec(), j.cells())
        .expect("same names as ctx");

    // J-extents form a chain, so their sizes order them.
    let level: Vec<usize> = lattice
        .concepts()
        .iter()
        .map(|c| extent_of(&j_ctx, &intent_of(&j_ctx, &c.extent)).len())
        .collect();
    let mut order: Vec<usize> = (0..lattice.len()).collect();
    order.sort_by_key(|&c| (level[c], c));
    let ext = LinearExtension::from_order(order)?;
    if !ext.extends(lattice) {
        return Err(DimensionError::ContractViolation(
            "induced order is not a linear extension".into(),
        ));
    }
    Ok(ext)
}

/// One linear extension per part of `cover`, verified.
pub fn realizer_from_cover(
    ctx: &FormalContext,
    lattice: &ConceptLattice,
    cover: &FerrersCover,
) -> Result<Realizer, DimensionError> {
    let extensions = cover
        .parts
        .iter()
        .map(|f| linear_extension_from_ferrers(ctx, f, lattice))
        .collect::<Result<Vec<_>, _>>()?;
    let r = Realizer { extensions };
    if !verify_realizer(lattice, &r) {
        return Err(DimensionError::ContractViolation(
            "extensions do not intersect to the lattice order".into(),
        ));
    }
    Ok(r)
}

/// A minimal realizer via [`order_dimension_with`].
pub fn realizer(
    ctx: &FormalContext,
    lattice: &ConceptLattice,
    limits: &SearchLimits,
) -> Result<Realizer, DimensionError> {
    let dim = order_dimension_with(ctx, limits)?;
    let r = realizer_from_cover(ctx, lattice, &dim.cover)?;
    debug_assert_eq!(r.dimension(), dim.d);
    Ok(r)
}

/// `x ≤ y` in the lattice iff `pos_i(x) ≤ pos_i(y)` in every extension.
pub fn verify_realizer(lattice: &ConceptLattice, r: &Realizer) -> bool {
    let n = lattice.len();
    if r.extensions.iter().any(|e| e.len() != n) {
        return false;
    }
    (0..n).all(|x| {
        (0..n).all(|y| {
            let below_everywhere = r.extensions.iter().all(|e| e.position(x) <= e.position(y));
            below_everywhere == lattice.leq(x, y)
        })
    })
}
