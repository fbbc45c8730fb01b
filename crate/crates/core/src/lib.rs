//! Drawing concept lattices and finite posets from their order dimension.
//!
//! The empty cells of a cross table are covered by as few Ferrers
//! relations as possible; that number is the order dimension of the concept
//! lattice, and each relation yields one linear extension of a realizer.
//! Concepts are placed at their ranks in the extensions and the resulting
//! integer embedding is projected onto the plane along an upward fan of
//! directions, choosing the axis assignment with the fewest crossings.
//!
//! ```
//! use dimdraw::{context::FormalContext, draw, DrawOptions, Drawing};
//!
//! let ctx = FormalContext::contranominal(3);
//! let drawing: Drawing = draw(&ctx, &DrawOptions::default()).unwrap();
//! assert_eq!(drawing.dimension.d, 3);
//! assert_eq!(drawing.diagram.layout.points.len(), 8);
//! ```

pub mod bitset;
pub mod context;
pub mod dimension;
pub mod embedding;
pub mod lattice;
pub mod pipeline;
pub mod projection;
pub mod render;
pub mod scalar;

pub use bitset::BitSet;
pub use pipeline::{analyze, DrawOptions, Error};
pub use scalar::Scalar;

pub type Point = projection::Point<f64>;
pub type AxisFrame = projection::AxisFrame<f64>;
pub type Layout = projection::Layout<f64>;
pub type LabeledDiagram = render::LabeledDiagram<f64>;
pub type Drawing = pipeline::Drawing<f64>;

pub type Point32 = projection::Point<f32>;
pub type AxisFrame32 = projection::AxisFrame<f32>;
pub type Layout32 = projection::Layout<f32>;
pub type LabeledDiagram32 = render::LabeledDiagram<f32>;
pub type Drawing32 = pipeline::Drawing<f32>;

/// [`pipeline::draw`] in double precision.
pub fn draw(ctx: &context::FormalContext, opts: &DrawOptions) -> Result<Drawing, Error> {
    pipeline::draw(ctx, opts)
}
