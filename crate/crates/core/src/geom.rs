//! Exact integer predicates for grid drawings.
//!
//! All comparisons are sign tests on `i128` products of `i64` inputs, so no
//! rounding can occur. Angle-gap comparisons, whose cross-multiplied forms
//! exceed 128 bits, go through [`num_bigint::BigInt`].

use num_bigint::BigInt;
use std::cmp::Ordering;

/// A grid point with integer coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn to(self, other: Point) -> IVec {
        IVec::new(other.x - self.x, other.y - self.y)
    }

    pub fn translate(self, v: IVec, times: i64) -> Point {
        Point::new(self.x + v.x * times, self.y + v.y * times)
    }
}

/// An integer direction vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IVec {
    pub x: i64,
    pub y: i64,
}

impl IVec {
    pub const fn new(x: i64, y: i64) -> Self {
        IVec { x, y }
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn cross(self, other: IVec) -> i128 {
        self.x as i128 * other.y as i128 - self.y as i128 * other.x as i128
    }

    pub fn dot(self, other: IVec) -> i128 {
        self.x as i128 * other.x as i128 + self.y as i128 * other.y as i128
    }

    /// Divides out the gcd of the components; the zero vector stays zero.
    pub fn primitive(self) -> IVec {
        if self.is_zero() {
            return self;
        }
        let g = gcd(self.x.unsigned_abs(), self.y.unsigned_abs()) as i64;
        IVec::new(self.x / g, self.y / g)
    }

    pub fn scale(self, k: i64) -> IVec {
        IVec::new(self.x * k, self.y * k)
    }

    /// True when `other` is the same direction scaled by a positive factor.
    pub fn same_direction(self, other: IVec) -> bool {
        self.cross(other) == 0 && self.dot(other) > 0
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Sign of the signed area of triangle `a`, `b`, `c`: positive for a
/// counter-clockwise turn, negative for clockwise, zero for collinear.
pub fn orient(a: Point, b: Point, c: Point) -> Ordering {
    a.to(b).cross(a.to(c)).cmp(&0)
}

/// True when `p` lies on the closed segment `a`..`b`.
pub fn on_segment(p: Point, a: Point, b: Point) -> bool {
    orient(a, b, p) == Ordering::Equal
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// True when `p` lies on segment `a`..`b` but is not one of its endpoints.
pub fn in_relative_interior(p: Point, a: Point, b: Point) -> bool {
    p != a && p != b && on_segment(p, a, b)
}

/// True when the closed segments `a`..`b` and `c`..`d` share at least one point.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 == Ordering::Less && d2 == Ordering::Greater)
        || (d1 == Ordering::Greater && d2 == Ordering::Less))
        && ((d3 == Ordering::Less && d4 == Ordering::Greater)
            || (d3 == Ordering::Greater && d4 == Ordering::Less))
    {
        return true;
    }
    on_segment(a, c, d) || on_segment(b, c, d) || on_segment(c, a, b) || on_segment(d, a, b)
}

/// Half of the plane a direction belongs to when sweeping counter-clockwise
/// from the positive x-axis: 0 for angles in `[0, pi)`, 1 for `[pi, 2pi)`.
fn angle_half(v: IVec) -> u8 {
    debug_assert!(!v.is_zero());
    if v.y > 0 || (v.y == 0 && v.x > 0) {
        0
    } else {
        1
    }
}

/// Total order on nonzero directions by angle in `[0, 2pi)`.
pub fn cmp_angle(a: IVec, b: IVec) -> Ordering {
    match angle_half(a).cmp(&angle_half(b)) {
        Ordering::Equal => 0i128.cmp(&a.cross(b)),
        ord => ord,
    }
}

/// Order on directions confined to the open upper half plane (`y > 0`),
/// i.e. by slope angle in `(0, pi)`.
pub fn cmp_slope(a: IVec, b: IVec) -> Ordering {
    debug_assert!(a.y > 0 && b.y > 0);
    0i128.cmp(&a.cross(b))
}

/// True when the clockwise sweep from direction `a` to direction `b` is an
/// angle in `(0, pi]` — the convex-angle test for consecutive edges.
pub fn cw_sweep_convex(a: IVec, b: IVec) -> bool {
    let cross = a.cross(b);
    cross < 0 || (cross == 0 && a.dot(b) < 0)
}

/// Compares the angles spanned by the pairs `(a, b)` and `(c, d)`; each angle
/// is taken in `[0, pi]`. Exact: cross-multiplied cosines in big integers.
pub fn cmp_angle_gap(a: IVec, b: IVec, c: IVec, d: IVec) -> Ordering {
    let dot_ab = a.dot(b);
    let dot_cd = c.dot(d);
    // The angle is smaller iff its cosine is larger.
    match (dot_ab >= 0, dot_cd >= 0) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        (pos, _) => {
            let lhs = BigInt::from(dot_ab) * BigInt::from(dot_ab) * norm2(c) * norm2(d);
            let rhs = BigInt::from(dot_cd) * BigInt::from(dot_cd) * norm2(a) * norm2(b);
            // cos^2 comparison flips once for negative cosines
            if pos {
                rhs.cmp(&lhs)
            } else {
                lhs.cmp(&rhs)
            }
        }
    }
}

fn norm2(v: IVec) -> BigInt {
    BigInt::from(v.x) * BigInt::from(v.x) + BigInt::from(v.y) * BigInt::from(v.y)
}

/// Convex hull (vertices only, counter-clockwise) by monotone chain.
/// Collinear boundary points are not hull vertices.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let chain = |iter: &mut dyn Iterator<Item = Point>| {
        let mut half: Vec<Point> = Vec::new();
        for p in iter {
            while half.len() >= 2
                && orient(half[half.len() - 2], half[half.len() - 1], p) != Ordering::Greater
            {
                half.pop();
            }
            half.push(p);
        }
        half
    };
    let lower = chain(&mut pts.iter().copied());
    let upper = chain(&mut pts.iter().rev().copied());
    if lower.len() == 2 && upper.len() == 2 {
        // all points collinear: the two extremes
        return lower;
    }
    let mut hull = lower;
    hull.pop();
    hull.extend(upper.into_iter());
    hull.pop();
    hull
}

/// True when `p` lies on the boundary of the hull given as a vertex cycle.
pub fn on_hull_boundary(p: Point, hull: &[Point]) -> bool {
    match hull.len() {
        0 => false,
        1 => p == hull[0],
        _ => (0..hull.len()).any(|i| {
            let a = hull[i];
            let b = hull[(i + 1) % hull.len()];
            on_segment(p, a, b)
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn orientation_signs() {
        assert_eq!(orient(p(0, 0), p(1, 0), p(0, 1)), Ordering::Greater);
        assert_eq!(orient(p(0, 0), p(0, 1), p(1, 0)), Ordering::Less);
        assert_eq!(orient(p(0, 0), p(1, 1), p(2, 2)), Ordering::Equal);
    }

    #[test]
    fn segment_intersection_cases() {
        // proper crossing
        assert!(segments_intersect(p(0, 0), p(2, 2), p(0, 2), p(2, 0)));
        // shared endpoint
        assert!(segments_intersect(p(0, 0), p(1, 1), p(1, 1), p(2, 0)));
        // endpoint in interior
        assert!(segments_intersect(p(0, 0), p(2, 0), p(1, 0), p(1, 5)));
        // collinear overlap
        assert!(segments_intersect(p(0, 0), p(3, 0), p(1, 0), p(5, 0)));
        // collinear disjoint
        assert!(!segments_intersect(p(0, 0), p(1, 0), p(2, 0), p(3, 0)));
        // fully separated
        assert!(!segments_intersect(p(0, 0), p(1, 0), p(0, 1), p(1, 1)));
    }

    #[test]
    fn angle_order_full_circle() {
        let dirs = [
            IVec::new(1, 0),
            IVec::new(1, 1),
            IVec::new(0, 1),
            IVec::new(-1, 1),
            IVec::new(-1, 0),
            IVec::new(-1, -1),
            IVec::new(0, -1),
            IVec::new(1, -1),
        ];
        for w in dirs.windows(2) {
            assert_eq!(cmp_angle(w[0], w[1]), Ordering::Less);
        }
    }

    #[test]
    fn convex_sweep() {
        // clockwise quarter turn from +y to +x
        assert!(cw_sweep_convex(IVec::new(0, 1), IVec::new(1, 0)));
        // half turn is still convex
        assert!(cw_sweep_convex(IVec::new(0, 1), IVec::new(0, -1)));
        // counter-clockwise (reflex seen clockwise) is not
        assert!(!cw_sweep_convex(IVec::new(1, 0), IVec::new(0, 1)));
        // zero angle is not
        assert!(!cw_sweep_convex(IVec::new(1, 0), IVec::new(2, 0)));
    }

    #[test]
    fn angle_gap_comparison() {
        let e1 = IVec::new(1, 0);
        // gap(e1, (1,1)) = 45deg < gap(e1, (0,1)) = 90deg
        assert_eq!(
            cmp_angle_gap(e1, IVec::new(1, 1), e1, IVec::new(0, 1)),
            Ordering::Less
        );
        // obtuse vs acute
        assert_eq!(
            cmp_angle_gap(e1, IVec::new(-1, 1), e1, IVec::new(1, 1)),
            Ordering::Greater
        );
        // equal gaps on different scales
        assert_eq!(
            cmp_angle_gap(e1, IVec::new(2, 2), IVec::new(3, 0), IVec::new(5, 5)),
            Ordering::Equal
        );
    }

    #[test]
    fn hull_and_boundary() {
        let pts = [p(0, 0), p(4, 0), p(4, 4), p(0, 4), p(2, 2), p(2, 0)];
        let hull = convex_hull(&pts);
        assert_eq!(hull.len(), 4);
        assert!(on_hull_boundary(p(2, 0), &hull));
        assert!(on_hull_boundary(p(0, 4), &hull));
        assert!(!on_hull_boundary(p(2, 2), &hull));
    }
}
