//! Integer coordinates from a realizer: concept `C` sits at
//! `(pos_1(C), …, pos_d(C))`, its ranks in the `d` linear extensions.

use thiserror::Error;

use crate::dimension::{verify_realizer, LinearExtension, Realizer};
use crate::lattice::ConceptLattice;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("realizer does not realize the lattice order")]
    InvalidRealizer,
    #[error("contract violation: {0}")]
    ContractViolation(String),
}

/// Ranks of every concept in `ext`, indexed by concept (bottom ↦ 0).
pub fn positions(ext: &LinearExtension) -> Vec<usize> {
    ext.positions().to_vec()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimEmbedding {
    dim: usize,
    coords: Vec<Vec<usize>>,
}

impl DimEmbedding {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self, c: usize) -> &[usize] {
        &self.coords[c]
    }

    pub fn all_coords(&self) -> &[Vec<usize>] {
        &self.coords
    }

    /// Componentwise `≤` on coordinate vectors.
    pub fn dominated(&self, x: usize, y: usize) -> bool {
        self.coords[x]
            .iter()
            .zip(&self.coords[y])
            .all(|(a, b)| a <= b)
    }
}

pub fn embed(lattice: &ConceptLattice, r: &Realizer) -> Result<DimEmbedding, EmbeddingError> {
    if r.extensions.is_empty() || !verify_realizer(lattice, r) {
        return Err(EmbeddingError::InvalidRealizer);
    }
    let n = lattice.len();
    let per_axis: Vec<Vec<usize>> = r.extensions.iter().map(positions).collect();
    let coords = (0..n)
        .map(|c| per_axis.iter().map(|axis| axis[c]).collect())
        .collect();
    let e = DimEmbedding {
        dim: r.extensions.len(),
        coords,
    };
    for x in 0..n {
        for y in 0..n {
            if e.dominated(x, y) != lattice.leq(x, y) {
                return Err(EmbeddingError::ContractViolation(format!(
                    "dominance fails for concepts {x} and {y}"
                )));
            }
        }
    }
    Ok(e)
}
