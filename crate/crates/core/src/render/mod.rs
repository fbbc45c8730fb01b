//! Reduced labelling and the SVG, TikZ and JSON writers.

mod json;
mod svg;
mod tikz;

use crate::context::FormalContext;
use crate::dimension::Realizer;
use crate::lattice::{extent_of, intent_of, ConceptLattice};
use crate::projection::Layout;
use crate::scalar::Scalar;

pub use json::{to_json, DiagramJson, JsonConcept};
pub use svg::{to_svg, SvgOptions};
pub use tikz::{to_tikz, TikzOptions};

/// A layout with per-concept names and reduced labels.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDiagram<T> {
    pub layout: Layout<T>,
    pub extents: Vec<Vec<String>>,
    pub intents: Vec<Vec<String>>,
    /// Objects `g` whose object concept `({g}'', {g}')` is this concept.
    pub object_labels: Vec<Vec<String>>,
    /// Attributes `m` whose attribute concept `({m}', {m}'')` is this concept.
    pub attribute_labels: Vec<Vec<String>>,
    pub dimension: usize,
    /// Realizer orders by concept index, bottom first; empty if not attached.
    pub realizer: Vec<Vec<usize>>,
}

impl<T> LabeledDiagram<T> {
    pub fn with_realizer(mut self, r: &Realizer) -> Self {
        self.dimension = r.dimension();
        self.realizer = r.extensions.iter().map(|e| e.order().to_vec()).collect();
        self
    }
}

pub fn label<T: Scalar>(
    ctx: &FormalContext,
    lattice: &ConceptLattice,
    layout: &Layout<T>,
) -> LabeledDiagram<T> {
    let n = lattice.len();
    let mut object_labels = vec![Vec::new(); n];
    let mut attribute_labels = vec![Vec::new(); n];
    for g in 0..ctx.num_objects() {
        let single = crate::bitset::BitSet::from_indices(ctx.num_objects(), [g]);
        let extent = extent_of(ctx, &intent_of(ctx, &single));
        let c = lattice.find_extent(&extent).expect("object concept exists");
        object_labels[c].push(ctx.objects()[g].clone());
    }
    for m in 0..ctx.num_attributes() {
        let c = lattice
            .find_extent(ctx.column(m))
            .expect("attribute concept exists");
        attribute_labels[c].push(ctx.attributes()[m].clone());
    }
    let names = |set: &crate::bitset::BitSet, pool: &[String]| -> Vec<String> {
        set.iter().map(|i| pool[i].clone()).collect()
    };
    LabeledDiagram {
        layout: layout.clone(),
        extents: lattice
            .concepts()
            .iter()
            .map(|c| names(&c.extent, ctx.objects()))
            .collect(),
        intents: lattice
            .concepts()
            .iter()
            .map(|c| names(&c.intent, ctx.attributes()))
            .collect(),
        object_labels,
        attribute_labels,
        dimension: layout.frame.directions.len(),
        realizer: Vec::new(),
    }
}

/// Bounding box `(min_x, min_y, max_x, max_y)` in `f64`.
pub(crate) fn bounds<T: Scalar>(layout: &Layout<T>) -> (f64, f64, f64, f64) {
    let mut b = (
        f64::INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::NEG_INFINITY,
    );
    for p in &layout.points {
        let (x, y) = (p.x.to_f64().unwrap_or(0.0), p.y.to_f64().unwrap_or(0.0));
        b = (b.0.min(x), b.1.min(y), b.2.max(x), b.3.max(y));
    }
    if layout.points.is_empty() {
        (0.0, 0.0, 0.0, 0.0)
    } else {
        b
    }
}
