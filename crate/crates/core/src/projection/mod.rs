//! Linear projection of a realizer embedding onto the plane.
//!
//! Axis `i` of the embedding is drawn along a unit direction inside an
//! upward fan of half-angle `β` around the vertical. Comparable concepts
//! differ in every coordinate, so every cover edge points strictly upward
//! whatever the axis assignment.

mod geometry;
mod repair;

use thiserror::Error;

use crate::embedding::DimEmbedding;
use crate::scalar::Scalar;

pub use geometry::{count_crossings, diagonal, near_interior, segments_cross};
pub use repair::{
    find_incidences, repair_incidences, repair_incidences_with, Incidence, RepairError,
    DEFAULT_EPS, DEFAULT_ROUNDS,
};

pub const DEFAULT_SPREAD_DEG: f64 = 45.0;
/// Largest `d` for which all `d!` assignments are searched.
pub const DEFAULT_ASSIGNMENT_CAP: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProjectionError {
    #[error("spread must lie strictly between 0 and 90 degrees, got {0}")]
    SpreadOutOfRange(String),
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("assignment {0:?} is not a permutation of the {1} axes")]
    InvalidAssignment(Vec<usize>, usize),
    #[error("frame has {frame} directions but the embedding has {embedding} axes")]
    DimensionMismatch { frame: usize, embedding: usize },
    #[error("contract violation: {0}")]
    ContractViolation(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

/// `d` upward unit directions and the fan half-angle (degrees) they span.
#[derive(Debug, Clone, PartialEq)]
pub struct AxisFrame<T> {
    pub directions: Vec<Point<T>>,
    pub spread: T,
}

/// Evenly spaced directions with angles from `90° + β` down to `90° − β`;
/// a single axis points straight up.
pub fn default_frame<T: Scalar>(d: usize, spread_deg: T) -> Result<AxisFrame<T>, ProjectionError> {
    if d == 0 {
        return Err(ProjectionError::ZeroDimension);
    }
    let ninety = T::of(90.0);
    if !(spread_deg > T::zero() && spread_deg < ninety) {
        return Err(ProjectionError::SpreadOutOfRange(format!("{spread_deg}")));
    }
    let directions = (0..d)
        .map(|i| {
            let deg = if d == 1 {
                ninety
            } else {
                ninety + spread_deg
                    - T::of_usize(i) * (spread_deg + spread_deg) / T::of_usize(d - 1)
            };
            let theta = deg.to_radians();
            Point {
                x: theta.cos(),
                y: theta.sin(),
            }
        })
        .collect();
    Ok(AxisFrame {
        directions,
        spread: spread_deg,
    })
}

/// Plane positions for every concept with the cover edges to draw.
#[derive(Debug, Clone, PartialEq)]
pub struct Layout<T> {
    pub points: Vec<Point<T>>,
    pub edges: Vec<(usize, usize)>,
    pub crossings: usize,
    pub frame: AxisFrame<T>,
    /// `assignment[i]` is the frame direction used for embedding axis `i`.
    pub assignment: Vec<usize>,
    pub mirrored: bool,
    /// Set when the assignment search was skipped for exceeding its cap.
    pub fallback: bool,
}

impl<T: Scalar> Layout<T> {
    pub fn count_crossings(&self) -> usize {
        count_crossings(&self.points, &self.edges)
    }

    pub fn is_upward(&self) -> bool {
        self.edges
            .iter()
            .all(|&(lo, hi)| self.points[lo].y < self.points[hi].y)
    }

    /// Translates and uniformly scales into the unit box `[0, 1]²`.
    pub fn normalized(&self) -> Layout<T> {
        let mut out = self.clone();
        if self.points.is_empty() {
            return out;
        }
        let min_x = self.points.iter().map(|p| p.x).fold(T::infinity(), T::min);
        let min_y = self.points.iter().map(|p| p.y).fold(T::infinity(), T::min);
        let max_x = self
            .points
            .iter()
            .map(|p| p.x)
            .fold(T::neg_infinity(), T::max);
        let max_y = self
            .points
            .iter()
            .map(|p| p.y)
            .fold(T::neg_infinity(), T::max);
        let extent = (max_x - min_x).max(max_y - min_y);
        let scale = if extent > T::zero() {
            extent.recip()
        } else {
            T::one()
        };
        for p in out.points.iter_mut() {
            p.x = (p.x - min_x) * scale;
            p.y = (p.y - min_y) * scale;
        }
        out
    }
}

fn check_assignment(assignment: &[usize], d: usize) -> Result<(), ProjectionError> {
    let mut seen = vec![false; d];
    let ok = assignment.len() == d
        && assignment
            .iter()
            .all(|&a| a < d && !std::mem::replace(&mut seen[a], true));
    if ok {
        Ok(())
    } else {
        Err(ProjectionError::InvalidAssignment(assignment.to_vec(), d))
    }
}

/// `point(C) = Σ cᵢ(C) · direction(assignment[i])`.
pub fn project<T: Scalar>(
    e: &DimEmbedding,
    covers: &[(usize, usize)],
    frame: &AxisFrame<T>,
    assignment: &[usize],
) -> Result<Layout<T>, ProjectionError> {
    project_with(e, covers, frame, assignment, false)
}

/// [`project`], optionally mirrored horizontally (`x ↦ −x`).
pub fn project_with<T: Scalar>(
    e: &DimEmbedding,
    covers: &[(usize, usize)],
    frame: &AxisFrame<T>,
    assignment: &[usize],
    mirrored: bool,
) -> Result<Layout<T>, ProjectionError> {
    let d = e.dim();
    if frame.directions.len() != d {
        return Err(ProjectionError::DimensionMismatch {
            frame: frame.directions.len(),
            embedding: d,
        });
    }
    check_assignment(assignment, d)?;
    let points = e
        .all_coords()
        .iter()
        .map(|c| {
            let mut p = Point {
                x: T::zero(),
                y: T::zero(),
            };
            for (axis, &value) in c.iter().enumerate() {
                let dir = frame.directions[assignment[axis]];
                let v = T::of_usize(value);
                p.x = p.x + v * dir.x;
                p.y = p.y + v * dir.y;
            }
            if mirrored {
                p.x = -p.x;
            }
            p
        })
        .collect();
    let mut layout = Layout {
        points,
        edges: covers.to_vec(),
        crossings: 0,
        frame: frame.clone(),
        assignment: assignment.to_vec(),
        mirrored,
        fallback: false,
    };
    if !layout.is_upward() {
        return Err(ProjectionError::ContractViolation(
            "projected cover edge is not upward".into(),
        ));
    }
    layout.crossings = layout.count_crossings();
    Ok(layout)
}

/// Advances `perm` to the next lexicographic permutation.
fn next_permutation(perm: &mut [usize]) -> bool {
    let Some(i) = (1..perm.len()).rev().find(|&i| perm[i - 1] < perm[i]) else {
        return false;
    };
    let j = (i..perm.len())
        .rev()
        .find(|&j| perm[j] > perm[i - 1])
        .unwrap();
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Exhaustive search over axis assignments (lexicographic) and mirroring for
/// the fewest crossings; the first minimum wins. Above `cap` axes the
/// identity is used and `fallback` is set.
pub fn best_assignment<T: Scalar>(
    e: &DimEmbedding,
    covers: &[(usize, usize)],
    frame: &AxisFrame<T>,
    cap: usize,
) -> Result<Layout<T>, ProjectionError> {
    let d = e.dim();
    let mut perm: Vec<usize> = (0..d).collect();
    if d > cap {
        let mut layout = project(e, covers, frame, &perm)?;
        layout.fallback = true;
        return Ok(layout);
    }
    let mut best: Option<Layout<T>> = None;
    loop {
        for mirrored in [false, true] {
            let layout = project_with(e, covers, frame, &perm, mirrored)?;
            if best.as_ref().is_none_or(|b| layout.crossings < b.crossings) {
                best = Some(layout);
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(best.expect("at least one assignment"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::FormalContext;
    use crate::dimension::{LinearExtension, Realizer};
    use crate::embedding::embed;
    use crate::lattice::concepts;

    const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn close(a: Point<f64>, x: f64, y: f64) -> bool {
        (a.x - x).abs() < 1e-12 && (a.y - y).abs() < 1e-12
    }

    #[test]
    fn frames() {
        let f1 = default_frame(1, 45.0).unwrap();
        assert!(close(f1.directions[0], 0.0, 1.0));
        let f2 = default_frame(2, 45.0).unwrap();
        assert!(close(f2.directions[0], -H, H));
        assert!(close(f2.directions[1], H, H));
        let f3 = default_frame(3, 45.0f64).unwrap();
        let angles: Vec<f64> = f3
            .directions
            .iter()
            .map(|p| p.y.atan2(p.x).to_degrees())
            .collect();
        for (a, b) in angles.iter().zip([135.0, 90.0, 45.0]) {
            assert!((a - b).abs() < 1e-9);
        }
        assert!(default_frame(2, 90.0f64).is_err());
        assert!(default_frame(2, 0.0f64).is_err());
        assert!(default_frame(0, 45.0f64).is_err());
    }

    #[test]
    fn frame_in_f32() {
        let f = default_frame(2, 45.0f32).unwrap();
        assert!((f.directions[1].x - std::f32::consts::FRAC_1_SQRT_2).abs() < 1e-6);
    }

    fn boolean_square() -> (DimEmbedding, Vec<(usize, usize)>) {
        let lat = concepts(&FormalContext::contranominal(2)).unwrap();
        // 0 = bottom, 1 and 2 atoms, 3 = top
        let r = Realizer {
            extensions: vec![
                LinearExtension::from_order(vec![0, 1, 2, 3]).unwrap(),
                LinearExtension::from_order(vec![0, 2, 1, 3]).unwrap(),
            ],
        };
        (embed(&lat, &r).unwrap(), lat.covers().to_vec())
    }

    #[test]
    fn square_projection() {
        let (e, covers) = boolean_square();
        let frame = default_frame(2, 45.0).unwrap();
        let l = project(&e, &covers, &frame, &[0, 1]).unwrap();
        assert!(close(l.points[0], 0.0, 0.0));
        // atom 1 sits at (1, 2) → −H + 2H, H + 2H
        assert!(close(l.points[1], H, 3.0 * H));
        let side = |a: usize, b: usize| {
            (l.points[a].x - l.points[b].x).hypot(l.points[a].y - l.points[b].y)
        };
        let s = side(0, 1);
        for (a, b) in [(0, 2), (1, 3), (2, 3)] {
            assert!((side(a, b) - s).abs() < 1e-12);
        }
        // rank coordinates (1, 2) and (2, 1) give a rhombus symmetric about x = 0
        assert!((l.points[1].x + l.points[2].x).abs() < 1e-12);
        assert!((l.points[1].y - l.points[2].y).abs() < 1e-12);
        assert!(l.points[3].x.abs() < 1e-12);
        assert_eq!(l.crossings, 0);
        assert!(l.is_upward());
    }

    #[test]
    fn single_axis_contribution() {
        let (e, _) = boolean_square();
        let frame = default_frame(2, 45.0).unwrap();
        // concept with coords (1, 2): axis 0 weight 1 and axis 1 weight 2
        let l = project(&e, &[], &frame, &[1, 0]).unwrap();
        assert!(close(l.points[1], H - 2.0 * H, H + 2.0 * H));
        assert!(project(&e, &[], &frame, &[0, 0]).is_err());
    }

    #[test]
    fn permutations_are_lexicographic() {
        let mut p = vec![0, 1, 2];
        let mut all = vec![p.clone()];
        while next_permutation(&mut p) {
            all.push(p.clone());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all[1], vec![0, 2, 1]);
        assert_eq!(all[5], vec![2, 1, 0]);
    }

    #[test]
    fn fallback_over_cap() {
        let (e, covers) = boolean_square();
        let frame = default_frame(2, 45.0).unwrap();
        let l = best_assignment(&e, &covers, &frame, 1).unwrap();
        assert!(l.fallback);
        assert_eq!(l.assignment, vec![0, 1]);
        let l = best_assignment(&e, &covers, &frame, 8).unwrap();
        assert!(!l.fallback && !l.mirrored);
    }

    #[test]
    fn normalized_fits_unit_box() {
        let (e, covers) = boolean_square();
        let frame = default_frame(2, 45.0).unwrap();
        let l = project(&e, &covers, &frame, &[0, 1]).unwrap().normalized();
        for p in &l.points {
            assert!(p.x >= 0.0 && p.x <= 1.0 + 1e-12 && p.y >= 0.0 && p.y <= 1.0 + 1e-12);
        }
        assert!(l.is_upward());
    }
}
