//! Horizontal nudging that keeps concept dots off foreign edges.

use thiserror::Error;

use crate::scalar::Scalar;

use super::geometry::{diagonal, near_interior};
use super::{Layout, Point};

/// Default tolerance, relative to the bounding-box diagonal.
pub const DEFAULT_EPS: f64 = 1e-3;
pub const DEFAULT_ROUNDS: usize = 100;
const MAX_STEPS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Incidence {
    /// `node` lies on the interior of `edge`, which it is not an endpoint of.
    OnEdge { node: usize, edge: (usize, usize) },
    /// Two dots closer than the tolerance.
    Coincident { node: usize, other: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("could not remove {} incidence(s) after {rounds} rounds: {offending:?}", offending.len())]
pub struct RepairError {
    pub rounds: usize,
    pub offending: Vec<Incidence>,
}

/// All node-on-edge and node-on-node incidences at tolerance `tol` (absolute).
pub fn find_incidences<T: Scalar>(
    points: &[Point<T>],
    edges: &[(usize, usize)],
    tol: T,
) -> Vec<Incidence> {
    let mut out = Vec::new();
    for v in 0..points.len() {
        for w in v + 1..points.len() {
            if (points[v].x - points[w].x).hypot(points[v].y - points[w].y) < tol {
                out.push(Incidence::Coincident { node: w, other: v });
            }
        }
        for &(a, b) in edges {
            if v != a && v != b && near_interior(points[v], points[a], points[b], tol) {
                out.push(Incidence::OnEdge {
                    node: v,
                    edge: (a, b),
                });
            }
        }
    }
    out
}

/// Incidences that involve `v` as dot or as edge endpoint.
fn local_count<T: Scalar>(
    points: &[Point<T>],
    edges: &[(usize, usize)],
    v: usize,
    tol: T,
) -> usize {
    let pv = points[v];
    let mut count = 0;
    for (w, pw) in points.iter().enumerate() {
        if w != v && (pv.x - pw.x).hypot(pv.y - pw.y) < tol {
            count += 1;
        }
    }
    for &(a, b) in edges {
        if a == v || b == v {
            for (u, &pu) in points.iter().enumerate() {
                if u != a && u != b && near_interior(pu, points[a], points[b], tol) {
                    count += 1;
                }
            }
        } else if near_interior(pv, points[a], points[b], tol) {
            count += 1;
        }
    }
    count
}

/// [`repair_incidences_with`] using [`DEFAULT_ROUNDS`].
pub fn repair_incidences<T: Scalar>(layout: &Layout<T>, eps: T) -> Result<Layout<T>, RepairError> {
    repair_incidences_with(layout, eps, DEFAULT_ROUNDS)
}

/// Moves offending dots sideways by `±k·δ` (`δ = 2·tol`, `+` first, smallest
/// `k` first), in index order, until no incidence remains. `tol` is `eps`
/// times the bounding-box diagonal. `y` coordinates are never touched.
pub fn repair_incidences_with<T: Scalar>(
    layout: &Layout<T>,
    eps: T,
    max_rounds: usize,
) -> Result<Layout<T>, RepairError> {
    let mut out = layout.clone();
    let tol = eps * diagonal(&layout.points);
    let delta = tol + tol;
    let edges = &layout.edges;

    for _ in 0..max_rounds {
        let found = find_incidences(&out.points, edges, tol);
        if found.is_empty() {
            out.crossings = out.count_crossings();
            return Ok(out);
        }
        let mut nodes: Vec<usize> = found
            .iter()
            .map(|i| match *i {
                Incidence::OnEdge { node, .. } | Incidence::Coincident { node, .. } => node,
            })
            .collect();
        nodes.sort_unstable();
        nodes.dedup();

        for v in nodes {
            let mut best = local_count(&out.points, edges, v, tol);
            if best == 0 {
                continue;
            }
            let x0 = out.points[v].x;
            let mut best_x = x0;
            'steps: for k in 1..=MAX_STEPS {
                for sign in [T::one(), -T::one()] {
                    let x = x0 + sign * T::of_usize(k) * delta;
                    out.points[v].x = x;
                    let c = local_count(&out.points, edges, v, tol);
                    if c < best {
                        best = c;
                        best_x = x;
                        if c == 0 {
                            break 'steps;
                        }
                    }
                }
            }
            out.points[v].x = best_x;
        }
    }

    let offending = find_incidences(&out.points, edges, tol);
    if offending.is_empty() {
        out.crossings = out.count_crossings();
        Ok(out)
    } else {
        Err(RepairError {
            rounds: max_rounds,
            offending,
        })
    }
}
