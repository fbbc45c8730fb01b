//! Segment predicates with a tolerance scaled to the drawing.

use crate::scalar::Scalar;

use super::Point;

/// Length of the bounding-box diagonal, or one for degenerate drawings.
pub fn diagonal<T: Scalar>(points: &[Point<T>]) -> T {
    let Some(first) = points.first() else {
        return T::one();
    };
    let (mut lo, mut hi) = (*first, *first);
    for p in points {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    let d = (hi.x - lo.x).hypot(hi.y - lo.y);
    if d > T::zero() {
        d
    } else {
        T::one()
    }
}

#[inline]
fn cross<T: Scalar>(a: Point<T>, b: Point<T>, c: Point<T>) -> T {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// Sign of the turn `a → b → c`, zero within `tol` (an area).
#[inline]
fn orientation<T: Scalar>(a: Point<T>, b: Point<T>, c: Point<T>, tol: T) -> i8 {
    let v = cross(a, b, c);
    if v > tol {
        1
    } else if v < -tol {
        -1
    } else {
        0
    }
}

/// For `c` collinear with `a b`: whether it lies within the closed segment.
#[inline]
fn within<T: Scalar>(a: Point<T>, b: Point<T>, c: Point<T>, tol: T) -> bool {
    c.x >= a.x.min(b.x) - tol
        && c.x <= a.x.max(b.x) + tol
        && c.y >= a.y.min(b.y) - tol
        && c.y <= a.y.max(b.y) + tol
}

/// Whether closed segments `p` and `q` (no shared endpoint) meet in exactly one point.
pub fn segments_cross<T: Scalar>(
    p: (Point<T>, Point<T>),
    q: (Point<T>, Point<T>),
    scale: T,
) -> bool {
    let len_tol = T::tolerance() * scale;
    let area_tol = len_tol * scale;
    let o1 = orientation(p.0, p.1, q.0, area_tol);
    let o2 = orientation(p.0, p.1, q.1, area_tol);
    let o3 = orientation(q.0, q.1, p.0, area_tol);
    let o4 = orientation(q.0, q.1, p.1, area_tol);
    if o1 == 0 && o2 == 0 {
        // Collinear: either disjoint or overlapping in more than one point.
        return false;
    }
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && within(p.0, p.1, q.0, len_tol))
        || (o2 == 0 && within(p.0, p.1, q.1, len_tol))
        || (o3 == 0 && within(q.0, q.1, p.0, len_tol))
        || (o4 == 0 && within(q.0, q.1, p.1, len_tol))
}

/// Number of edge pairs without a shared endpoint whose segments meet in exactly one point.
pub fn count_crossings<T: Scalar>(points: &[Point<T>], edges: &[(usize, usize)]) -> usize {
    let scale = diagonal(points);
    let mut count = 0;
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if segments_cross((points[a], points[b]), (points[c], points[d]), scale) {
                count += 1;
            }
        }
    }
    count
}

/// Whether `p` lies within `tol` of the open interior of segment `a b`.
pub fn near_interior<T: Scalar>(p: Point<T>, a: Point<T>, b: Point<T>, tol: T) -> bool {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    if len2 <= T::zero() {
        return false;
    }
    let t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    if t <= T::zero() || t >= T::one() {
        return false;
    }
    let (fx, fy) = (a.x + t * dx, a.y + t * dy);
    (p.x - fx).hypot(p.y - fy) < tol
}
