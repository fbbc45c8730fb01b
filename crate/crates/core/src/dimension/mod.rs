//! Order dimension through Ferrers covers of the empty cells of a cross
//! table, realizer construction and verification, and a brute-force oracle.

mod certificate;
mod oracle;
mod realizer;
mod search;

use std::time::Duration;

use thiserror::Error;

use crate::bitset::BitSet;
use crate::context::FormalContext;

pub use certificate::{certificate_json, Certificate, CertificateExtension, CertificatePart};
pub use oracle::{brute_force_dimension, brute_force_order_dimension, DEFAULT_ORACLE_CAP};
pub use realizer::{
    linear_extension_from_ferrers, realizer, realizer_from_cover, verify_realizer, LinearExtension,
    Realizer,
};
pub use search::{ferrers_cover, ferrers_cover_with, order_dimension, order_dimension_with};

pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(60);
pub const DEFAULT_MAX_K: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DimensionError {
    #[error("search timed out: dimension is at least {lower_bound}, undecided above")]
    Undecided { lower_bound: usize },
    #[error("no Ferrers cover with at most {max_k} parts; raise --max-k")]
    ExceedsMaxK { max_k: usize },
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("oracle cap exceeded: {size} elements > cap {cap}")]
    OracleCapExceeded { size: usize, cap: usize },
    #[error("invalid linear extension: {0}")]
    InvalidExtension(String),
}

/// A subset of `G × M`, stored row-wise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CellRelation {
    num_attributes: usize,
    rows: Vec<BitSet>,
}

impl CellRelation {
    pub fn empty(num_objects: usize, num_attributes: usize) -> Self {
        CellRelation {
            num_attributes,
            rows: vec![BitSet::new(num_attributes); num_objects],
        }
    }

    pub fn full(num_objects: usize, num_attributes: usize) -> Self {
        CellRelation {
            num_attributes,
            rows: vec![BitSet::full(num_attributes); num_objects],
        }
    }

    pub fn from_cells<I>(num_objects: usize, num_attributes: usize, cells: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rel = CellRelation::empty(num_objects, num_attributes);
        for (g, m) in cells {
            rel.insert(g, m);
        }
        rel
    }

    /// The incidence relation of `ctx`.
    pub fn incidence(ctx: &FormalContext) -> Self {
        CellRelation {
            num_attributes: ctx.num_attributes(),
            rows: (0..ctx.num_objects()).map(|g| ctx.row(g).clone()).collect(),
        }
    }

    /// The empty cells `(G × M) \ I` of `ctx`.
    pub fn non_incidence(ctx: &FormalContext) -> Self {
        complement(&CellRelation::incidence(ctx))
    }

    pub fn num_objects(&self) -> usize {
        self.rows.len()
    }

    pub fn num_attributes(&self) -> usize {
        self.num_attributes
    }

    pub fn insert(&mut self, g: usize, m: usize) {
        self.rows[g].insert(m);
    }

    pub fn contains(&self, g: usize, m: usize) -> bool {
        self.rows.get(g).is_some_and(|r| r.contains(m))
    }

    pub fn row(&self, g: usize) -> &BitSet {
        &self.rows[g]
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(BitSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(BitSet::is_empty)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(g, r)| r.iter().map(move |m| (g, m)))
    }

    pub fn is_subset(&self, other: &CellRelation) -> bool {
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a.is_subset(b))
    }

    pub fn union_with(&mut self, other: &CellRelation) {
        for (a, b) in self.rows.iter_mut().zip(&other.rows) {
            a.union_with(b);
        }
    }

    pub fn is_disjoint(&self, other: &CellRelation) -> bool {
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a.is_disjoint(b))
    }
}

/// Whether the row sets of `f` form a chain under inclusion (a staircase).
pub fn is_ferrers(f: &CellRelation) -> bool {
    let mut rows: Vec<&BitSet> = f.rows.iter().collect();
    rows.sort_by_key(|r| r.len());
    rows.windows(2).all(|w| w[0].is_subset(w[1]))
}

/// `(G × M) \ f`.
pub fn complement(f: &CellRelation) -> CellRelation {
    CellRelation {
        num_attributes: f.num_attributes,
        rows: f.rows.iter().map(BitSet::complement).collect(),
    }
}

/// Ferrers relations whose union is exactly the set of empty cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FerrersCover {
    pub parts: Vec<CellRelation>,
}

impl FerrersCover {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Checks every cover invariant against `ctx`.
    pub fn validate(&self, ctx: &FormalContext) -> Result<(), DimensionError> {
        let incidence = CellRelation::incidence(ctx);
        let (ng, nm) = (ctx.num_objects(), ctx.num_attributes());
        let mut union = CellRelation::empty(ng, nm);
        for (i, part) in self.parts.iter().enumerate() {
            if part.num_objects() != ng || part.num_attributes() != nm {
                return Err(DimensionError::ContractViolation(format!(
                    "part {i} has the wrong dimensions"
                )));
            }
            if !is_ferrers(part) {
                return Err(DimensionError::ContractViolation(format!(
                    "part {i} is not a Ferrers relation"
                )));
            }
            if !part.is_disjoint(&incidence) {
                return Err(DimensionError::ContractViolation(format!(
                    "part {i} meets the incidence relation"
                )));
            }
            union.union_with(part);
        }
        if union != complement(&incidence) {
            return Err(DimensionError::ContractViolation(
                "parts do not cover every empty cell".into(),
            ));
        }
        Ok(())
    }
}

/// A decided order dimension with its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dimension {
    pub d: usize,
    pub cover: FerrersCover,
}

/// Outcome of a bounded cover search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverOutcome {
    Found(FerrersCover),
    NoneExists,
    Undecided,
}

/// Resource limits for the exact search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Wall-clock budget per value of `k`; `None` searches without a deadline.
    pub timeout: Option<Duration>,
    pub max_k: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            timeout: Some(DEFAULT_TIMEOUT),
            max_k: DEFAULT_MAX_K,
        }
    }
}
