//! The full drawing pipeline: concepts, dimension, realizer, embedding,
//! projection, repair, labels.

use thiserror::Error;

use crate::context::FormalContext;
use crate::dimension::{
    order_dimension_with, realizer_from_cover, Dimension, DimensionError, Realizer, SearchLimits,
};
use crate::embedding::{embed, DimEmbedding, EmbeddingError};
use crate::lattice::{concepts_with_limit, ConceptLattice, LatticeError, DEFAULT_CONCEPT_LIMIT};
use crate::projection::{
    best_assignment, default_frame, repair_incidences_with, ProjectionError, RepairError,
    DEFAULT_ASSIGNMENT_CAP, DEFAULT_EPS, DEFAULT_ROUNDS, DEFAULT_SPREAD_DEG,
};
use crate::render::{label, LabeledDiagram};
use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Dimension(#[from] DimensionError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Projection(#[from] ProjectionError),
    #[error(transparent)]
    Repair(#[from] RepairError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct DrawOptions {
    pub spread_deg: f64,
    pub limits: SearchLimits,
    pub assignment_cap: usize,
    pub eps: f64,
    pub repair_rounds: usize,
    pub concept_limit: usize,
}

impl Default for DrawOptions {
    fn default() -> Self {
        DrawOptions {
            spread_deg: DEFAULT_SPREAD_DEG,
            limits: SearchLimits::default(),
            assignment_cap: DEFAULT_ASSIGNMENT_CAP,
            eps: DEFAULT_EPS,
            repair_rounds: DEFAULT_ROUNDS,
            concept_limit: DEFAULT_CONCEPT_LIMIT,
        }
    }
}

/// Every intermediate artifact of one pipeline run.
#[derive(Debug, Clone)]
pub struct Drawing<T> {
    pub lattice: ConceptLattice,
    pub dimension: Dimension,
    pub realizer: Realizer,
    pub embedding: DimEmbedding,
    pub diagram: LabeledDiagram<T>,
}

/// Lattice, minimal realizer and its certificate.
pub fn analyze(
    ctx: &FormalContext,
    opts: &DrawOptions,
) -> Result<(ConceptLattice, Dimension, Realizer), Error> {
    let lattice = concepts_with_limit(ctx, opts.concept_limit)?;
    let dimension = order_dimension_with(ctx, &opts.limits)?;
    let realizer = realizer_from_cover(ctx, &lattice, &dimension.cover)?;
    Ok((lattice, dimension, realizer))
}

pub fn draw<T: Scalar>(ctx: &FormalContext, opts: &DrawOptions) -> Result<Drawing<T>, Error> {
    let (lattice, dimension, realizer) = analyze(ctx, opts)?;
    let embedding = embed(&lattice, &realizer)?;
    let frame = default_frame(embedding.dim(), T::of(opts.spread_deg))?;
    let layout = best_assignment(&embedding, lattice.covers(), &frame, opts.assignment_cap)?;
    let layout = repair_incidences_with(&layout.normalized(), T::of(opts.eps), opts.repair_rounds)?;
    if !layout.is_upward() {
        return Err(
            ProjectionError::ContractViolation("repaired layout is not upward".into()).into(),
        );
    }
    let diagram = label(ctx, &lattice, &layout).with_realizer(&realizer);
    Ok(Drawing {
        lattice,
        dimension,
        realizer,
        embedding,
        diagram,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_in_both_precisions() {
        let ctx = FormalContext::contranominal(3);
        let a: Drawing<f64> = draw(&ctx, &DrawOptions::default()).unwrap();
        let b: Drawing<f32> = draw(&ctx, &DrawOptions::default()).unwrap();
        assert_eq!(a.diagram.layout.points.len(), 8);
        assert_eq!(b.diagram.layout.points.len(), 8);
        assert_eq!(a.diagram.layout.crossings, b.diagram.layout.crossings);
    }
}
