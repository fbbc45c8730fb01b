//! JSON export of a dimension certificate.

use serde::{Deserialize, Serialize};

use crate::context::FormalContext;
use crate::lattice::ConceptLattice;

use super::{FerrersCover, Realizer};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub dimension: usize,
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    pub cover: Vec<CertificatePart>,
    pub realizer: Vec<CertificateExtension>,
}

/// Cells as `[object index, attribute index]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificatePart {
    pub cells: Vec<[usize; 2]>,
}

/// One linear extension, bottom first, by concept index and by intent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateExtension {
    pub order: Vec<usize>,
    pub intents: Vec<Vec<String>>,
}

impl Certificate {
    pub fn new(
        ctx: &FormalContext,
        lattice: &ConceptLattice,
        cover: &FerrersCover,
        realizer: &Realizer,
    ) -> Self {
        let dimension = realizer.dimension();
        let cover = cover
            .parts
            .iter()
            .map(|p| CertificatePart {
                cells: p.cells().map(|(g, m)| [g, m]).collect(),
            })
            .collect();
        let realizer = realizer
            .extensions
            .iter()
            .map(|e| CertificateExtension {
                order: e.order().to_vec(),
                intents: e
                    .order()
                    .iter()
                    .map(|&c| {
                        lattice
                            .concept(c)
                            .intent
                            .iter()
                            .map(|m| ctx.attributes()[m].clone())
                            .collect()
                    })
                    .collect(),
            })
            .collect();
        Certificate {
            dimension,
            objects: ctx.objects().to_vec(),
            attributes: ctx.attributes().to_vec(),
            cover,
            realizer,
        }
    }
}

/// Pretty-printed certificate document.
pub fn certificate_json(
    ctx: &FormalContext,
    lattice: &ConceptLattice,
    cover: &FerrersCover,
    realizer: &Realizer,
) -> String {
    let mut s = serde_json::to_string_pretty(&Certificate::new(ctx, lattice, cover, realizer))
        .expect("certificate serializes");
    s.push('\n');
    s
}
