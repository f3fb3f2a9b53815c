//! Planar triangle constructions: angles, altitude feet, the orthic triangle,
//! orthocenter and incenter.
//!
//! Every [`Triangle`] is stored counterclockwise. Construction swaps the last
//! two vertices of a clockwise input, so vertex `a` always keeps its label.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

/// Area threshold factor: a triangle is degenerate when its area is below
/// `DEGENERACY_FACTOR * longest_side²`.
pub const DEGENERACY_FACTOR: f64 = 1e-12;

/// Default half-width (radians) of the Right band around π/2.
pub const DEFAULT_CLASSIFICATION_TOL: f64 = 1e-9;

/// A position in the Euclidean plane.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn lerp(self, other: Point, t: f64) -> Point {
        self + (other - self) * t
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Names one of the three vertices of a triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Vertex> {
        Vertex::ALL.get(i).copied()
    }

    /// The two other vertices, in cyclic order.
    pub fn others(self) -> (Vertex, Vertex) {
        match self {
            Vertex::A => (Vertex::B, Vertex::C),
            Vertex::B => (Vertex::C, Vertex::A),
            Vertex::C => (Vertex::A, Vertex::B),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Vertex::A => "a",
            Vertex::B => "b",
            Vertex::C => "c",
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Twice the signed area of `pqr`; positive for counterclockwise order.
pub fn orient2d(p: Point, q: Point, r: Point) -> f64 {
    (q - p).cross(r - p)
}

/// Interior angle at `vertex` between the rays towards `p` and `q`, in `[0, π]`.
pub fn angle_at(vertex: Point, p: Point, q: Point) -> f64 {
    let u = p - vertex;
    let v = q - vertex;
    u.cross(v).abs().atan2(u.dot(v))
}

/// `|pq| + |qr| + |rp|`.
pub fn perimeter(p: Point, q: Point, r: Point) -> f64 {
    p.distance(q) + q.distance(r) + r.distance(p)
}

/// Non-degenerate, counterclockwise triangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Triangle {
    a: Point,
    b: Point,
    c: Point,
    reoriented: bool,
}

impl Triangle {
    /// Builds a triangle, swapping `b` and `c` when the input is clockwise.
    pub fn new(a: Point, b: Point, c: Point) -> Result<Triangle> {
        for p in [a, b, c] {
            if !p.is_finite() {
                return Err(Error::NonFinite(p));
            }
        }
        let area2 = orient2d(a, b, c);
        let longest = a.distance(b).max(b.distance(c)).max(c.distance(a));
        let threshold = DEGENERACY_FACTOR * longest * longest;
        if !(area2.abs() * 0.5 >= threshold) || longest == 0.0 {
            return Err(Error::Degenerate {
                area: area2.abs() * 0.5,
                threshold,
            });
        }
        if area2 > 0.0 {
            Ok(Triangle {
                a,
                b,
                c,
                reoriented: false,
            })
        } else {
            Ok(Triangle {
                a,
                b: c,
                c: b,
                reoriented: true,
            })
        }
    }

    pub fn from_coords(coords: [f64; 6]) -> Result<Triangle> {
        Triangle::new(
            Point::new(coords[0], coords[1]),
            Point::new(coords[2], coords[3]),
            Point::new(coords[4], coords[5]),
        )
    }

    /// Triangle with interior angles `alpha` at `a` and `beta` at `b`, inscribed
    /// in the unit circle, with `a` at the origin and `b` on the positive x-axis.
    pub fn from_angles(alpha: f64, beta: f64) -> Result<Triangle> {
        let gamma = PI - alpha - beta;
        if !(alpha > 0.0 && beta > 0.0 && gamma > 0.0) {
            return Err(Error::InvalidAngles { alpha, beta });
        }
        // Law of sines with circumradius 1: side = 2 sin(opposite angle).
        let side_ab = 2.0 * gamma.sin();
        let side_ca = 2.0 * beta.sin();
        Triangle::new(
            Point::ORIGIN,
            Point::new(side_ab, 0.0),
            Point::new(side_ca * alpha.cos(), side_ca * alpha.sin()),
        )
    }

    pub fn a(&self) -> Point {
        self.a
    }

    pub fn b(&self) -> Point {
        self.b
    }

    pub fn c(&self) -> Point {
        self.c
    }

    /// True when construction swapped `b` and `c` to make the order counterclockwise.
    pub fn was_reoriented(&self) -> bool {
        self.reoriented
    }

    pub fn vertex(&self, v: Vertex) -> Point {
        match v {
            Vertex::A => self.a,
            Vertex::B => self.b,
            Vertex::C => self.c,
        }
    }

    pub fn vertices(&self) -> [Point; 3] {
        [self.a, self.b, self.c]
    }

    /// Which vertex sits at `p` (within `tol` in each coordinate), if any.
    pub fn vertex_at(&self, p: Point, tol: f64) -> Option<Vertex> {
        Vertex::ALL
            .into_iter()
            .find(|&v| (self.vertex(v) - p).norm() <= tol)
    }

    pub fn area(&self) -> f64 {
        0.5 * orient2d(self.a, self.b, self.c)
    }

    /// Length of the side opposite `v`.
    pub fn side_length(&self, v: Vertex) -> f64 {
        let (p, q) = v.others();
        self.vertex(p).distance(self.vertex(q))
    }

    /// Longest side length.
    pub fn diameter(&self) -> f64 {
        Vertex::ALL
            .into_iter()
            .map(|v| self.side_length(v))
            .fold(0.0, f64::max)
    }

    pub fn perimeter(&self) -> f64 {
        perimeter(self.a, self.b, self.c)
    }

    pub fn angles(&self) -> AngleTriple {
        AngleTriple {
            alpha: angle_at(self.a, self.b, self.c),
            beta: angle_at(self.b, self.c, self.a),
            gamma: angle_at(self.c, self.a, self.b),
        }
    }

    pub fn classify(&self) -> TriangleClass {
        self.classify_with(DEFAULT_CLASSIFICATION_TOL)
    }

    pub fn classify_with(&self, tol: f64) -> TriangleClass {
        TriangleClass::from_largest_angle(self.angles().max(), tol)
    }

    /// Fails with [`Error::NotAcute`] unless the triangle classifies as Acute.
    pub fn require_acute(&self) -> Result<()> {
        let class = self.classify();
        if class.kind == TriangleKind::Acute {
            return Ok(());
        }
        let (vertex, angle) = self.angles().largest();
        Err(Error::NotAcute {
            kind: class.kind,
            vertex,
            angle,
        })
    }

    /// Orthogonal projection of `from` onto the line through the other two vertices.
    pub fn foot_of_altitude(&self, from: Vertex) -> Point {
        let (p, q) = from.others();
        project_onto_line(self.vertex(from), self.vertex(p), self.vertex(q))
    }

    /// Intersection of the altitudes from `a` and `b`, by Cramer's rule.
    pub fn orthocenter(&self) -> Point {
        // (X - a)·(c - b) = 0 and (X - b)·(a - c) = 0
        let n1 = self.c - self.b;
        let n2 = self.a - self.c;
        let r1 = self.a.dot(n1);
        let r2 = self.b.dot(n2);
        let det = n1.cross(n2);
        Point::new((r1 * n2.y - r2 * n1.y) / det, (n1.x * r2 - n2.x * r1) / det)
    }

    /// Side-length weighted average of the vertices.
    pub fn incenter(&self) -> Point {
        let wa = self.side_length(Vertex::A);
        let wb = self.side_length(Vertex::B);
        let wc = self.side_length(Vertex::C);
        let total = wa + wb + wc;
        Point::new(
            (wa * self.a.x + wb * self.b.x + wc * self.c.x) / total,
            (wa * self.a.y + wb * self.b.y + wc * self.c.y) / total,
        )
    }

    /// The orthic triangle. Only defined for acute triangles.
    pub fn orthic(&self) -> Result<OrthicResult> {
        self.require_acute()?;
        let foot_from_a = self.foot_of_altitude(Vertex::A);
        let foot_from_b = self.foot_of_altitude(Vertex::B);
        let foot_from_c = self.foot_of_altitude(Vertex::C);
        Ok(OrthicResult {
            foot_from_a,
            foot_from_b,
            foot_from_c,
            angles: AngleTriple {
                alpha: angle_at(foot_from_a, foot_from_b, foot_from_c),
                beta: angle_at(foot_from_b, foot_from_c, foot_from_a),
                gamma: angle_at(foot_from_c, foot_from_a, foot_from_b),
            },
            perimeter: perimeter(foot_from_a, foot_from_b, foot_from_c),
        })
    }

    /// Applies `p ↦ scale · R(theta) p + shift` to every vertex.
    pub fn transformed(&self, theta: f64, scale: f64, shift: Point) -> Result<Triangle> {
        let (s, c) = theta.sin_cos();
        let map = |p: Point| Point::new(c * p.x - s * p.y, s * p.x + c * p.y) * scale + shift;
        Triangle::new(map(self.a), map(self.b), map(self.c))
    }
}

/// Orthogonal projection of `p` onto the line through `q` and `r`.
pub fn project_onto_line(p: Point, q: Point, r: Point) -> Point {
    let dir = r - q;
    let t = (p - q).dot(dir) / dir.dot(dir);
    q + dir * t
}

/// Distance from `p` to the line through `q` and `r`.
pub fn distance_to_line(p: Point, q: Point, r: Point) -> f64 {
    orient2d(q, r, p).abs() / q.distance(r)
}

/// Interior angles of a triangle, indexed by vertex.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AngleTriple {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl AngleTriple {
    pub fn get(&self, v: Vertex) -> f64 {
        match v {
            Vertex::A => self.alpha,
            Vertex::B => self.beta,
            Vertex::C => self.gamma,
        }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.alpha, self.beta, self.gamma]
    }

    pub fn sum(&self) -> f64 {
        self.alpha + self.beta + self.gamma
    }

    pub fn max(&self) -> f64 {
        self.alpha.max(self.beta).max(self.gamma)
    }

    /// The largest angle and its vertex; ties resolve to the earlier vertex.
    pub fn largest(&self) -> (Vertex, f64) {
        Vertex::ALL.into_iter().map(|v| (v, self.get(v))).fold(
            (Vertex::A, f64::NEG_INFINITY),
            |best, cur| {
                if cur.1 > best.1 {
                    cur
                } else {
                    best
                }
            },
        )
    }

    /// Vertices whose angle lies within `tol` of `target`.
    pub fn near(&self, target: f64, tol: f64) -> Vec<Vertex> {
        Vertex::ALL
            .into_iter()
            .filter(|&v| (self.get(v) - target).abs() <= tol)
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    Acute,
    Right,
    Obtuse,
    Degenerate,
}

impl TriangleKind {
    pub fn name(self) -> &'static str {
        match self {
            TriangleKind::Acute => "acute",
            TriangleKind::Right => "right",
            TriangleKind::Obtuse => "obtuse",
            TriangleKind::Degenerate => "degenerate",
        }
    }
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Acute/Right/Obtuse/Degenerate with the signed margin `π/2 − largest angle`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TriangleClass {
    pub kind: TriangleKind,
    pub margin: f64,
}

impl TriangleClass {
    fn from_largest_angle(largest: f64, tol: f64) -> TriangleClass {
        let margin = FRAC_PI_2 - largest;
        let kind = if margin > tol {
            TriangleKind::Acute
        } else if margin < -tol {
            TriangleKind::Obtuse
        } else {
            TriangleKind::Right
        };
        TriangleClass { kind, margin }
    }
}

/// Classifies three arbitrary points with the default tolerance. Total: collinear
/// or coincident points give `Degenerate`, non-finite ones too.
pub fn classify(a: Point, b: Point, c: Point) -> TriangleClass {
    classify_with(a, b, c, DEFAULT_CLASSIFICATION_TOL)
}

pub fn classify_with(a: Point, b: Point, c: Point, tol: f64) -> TriangleClass {
    match Triangle::new(a, b, c) {
        Ok(t) => t.classify_with(tol),
        Err(_) => TriangleClass {
            kind: TriangleKind::Degenerate,
            margin: -FRAC_PI_2,
        },
    }
}

/// The three altitude feet of an acute triangle and the triangle they span.
///
/// `angles` is indexed by foot: `alpha` is the orthic angle at `foot_from_a`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrthicResult {
    /// On side `bc`.
    pub foot_from_a: Point,
    /// On side `ca`.
    pub foot_from_b: Point,
    /// On side `ab`.
    pub foot_from_c: Point,
    pub angles: AngleTriple,
    pub perimeter: f64,
}

impl OrthicResult {
    pub fn foot(&self, from: Vertex) -> Point {
        match from {
            Vertex::A => self.foot_from_a,
            Vertex::B => self.foot_from_b,
            Vertex::C => self.foot_from_c,
        }
    }

    pub fn feet(&self) -> [Point; 3] {
        [self.foot_from_a, self.foot_from_b, self.foot_from_c]
    }

    /// Length of the orthic side opposite the foot from `v`.
    pub fn side_length(&self, v: Vertex) -> f64 {
        let (p, q) = v.others();
        self.foot(p).distance(self.foot(q))
    }

    pub fn side_lengths(&self) -> [f64; 3] {
        Vertex::ALL.map(|v| self.side_length(v))
    }

    pub fn triangle(&self) -> Result<Triangle> {
        Triangle::new(self.foot_from_a, self.foot_from_b, self.foot_from_c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_3;

    fn equilateral() -> Triangle {
        Triangle::new(
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.5, 3f64.sqrt() / 2.0),
        )
        .unwrap()
    }

    fn golden_bfc() -> Triangle {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        Triangle::new(
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(1.0, phi),
        )
        .unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn equilateral_angles() {
        let angles = equilateral().angles();
        for x in angles.as_array() {
            assert!(close(x, FRAC_PI_3, 1e-15), "{x}");
        }
    }

    #[test]
    fn golden_angle_at_b_is_quarter_pi() {
        let t = golden_bfc();
        assert_eq!(t.a(), Point::new(1.0, 0.0));
        assert!(close(t.angles().alpha, std::f64::consts::FRAC_PI_4, 1e-15));
    }

    #[test]
    fn right_triangle_angles() {
        let t = Triangle::from_coords([0.0, 0.0, 4.0, 0.0, 0.0, 3.0]).unwrap();
        let ang = t.angles();
        assert!(close(ang.alpha, FRAC_PI_2, 1e-15));
        assert!(close(ang.beta, (3.0f64 / 4.0).atan(), 1e-15));
        assert!(close(ang.gamma, (4.0f64 / 3.0).atan(), 1e-15));
    }

    #[test]
    fn clockwise_input_is_reoriented() {
        let t = Triangle::from_coords([0.0, 0.0, 0.0, 1.0, 1.0, 0.0]).unwrap();
        assert!(t.was_reoriented());
        assert_eq!(t.a(), Point::new(0.0, 0.0));
        assert_eq!(t.b(), Point::new(1.0, 0.0));
        assert_eq!(t.c(), Point::new(0.0, 1.0));
        assert!(t.area() > 0.0);

        let ccw = Triangle::from_coords([0.0, 0.0, 1.0, 0.0, 0.0, 1.0]).unwrap();
        assert!(!ccw.was_reoriented());
    }

    #[test]
    fn rejects_degenerate_and_non_finite() {
        let err = Triangle::from_coords([0.0, 0.0, 1.0, 0.0, 2.0, 0.0]).unwrap_err();
        assert!(matches!(err, Error::Degenerate { .. }), "{err}");
        assert!(err.to_string().contains("area"));
        let err = Triangle::from_coords([0.0, 0.0, 0.0, 0.0, 0.0, 0.0]).unwrap_err();
        assert!(matches!(err, Error::Degenerate { .. }));
        let err = Triangle::from_coords([0.0, f64::NAN, 1.0, 0.0, 0.0, 1.0]).unwrap_err();
        assert!(matches!(err, Error::NonFinite(_)));
        // area 1e-13 against threshold 1e-12 * 1
        assert!(Triangle::from_coords([0.0, 0.0, 1.0, 0.0, 0.5, 2e-13]).is_err());
        assert!(Triangle::from_coords([0.0, 0.0, 1.0, 0.0, 0.5, 4e-12]).is_ok());
    }

    #[test]
    fn classification() {
        assert_eq!(equilateral().classify().kind, TriangleKind::Acute);
        let right = classify(
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        );
        assert_eq!(right.kind, TriangleKind::Right);
        assert!(right.margin.abs() <= 1e-15);

        let a = Point::new(0.0, 0.0);
        let b = Point::new(1.0, 0.0);
        let c = Point::new(2.0, 0.1);
        // Direct oracle: angle at b between (a - b) and (c - b).
        let u = a - b;
        let v = c - b;
        let at_b = (u.dot(v) / (u.norm() * v.norm())).acos();
        assert!(at_b > FRAC_PI_2);
        let class = classify(a, b, c);
        assert_eq!(class.kind, TriangleKind::Obtuse);
        assert!(close(class.margin, FRAC_PI_2 - at_b, 1e-12));

        let degenerate = classify(a, b, Point::new(3.0, 0.0));
        assert_eq!(degenerate.kind, TriangleKind::Degenerate);
        let nan = classify(a, b, Point::new(f64::INFINITY, 0.0));
        assert_eq!(nan.kind, TriangleKind::Degenerate);
    }

    #[test]
    fn classification_tolerance_is_configurable() {
        let t = Triangle::from_angles(FRAC_PI_2 - 1e-6, 0.7).unwrap();
        assert_eq!(t.classify().kind, TriangleKind::Acute);
        assert_eq!(t.classify_with(1e-5).kind, TriangleKind::Right);
    }

    #[test]
    fn feet_of_altitudes() {
        let foot = equilateral().foot_of_altitude(Vertex::C);
        assert!(close(foot.x, 0.5, 1e-15) && close(foot.y, 0.0, 1e-15));

        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let t = golden_bfc();
        let f = t.vertex_at(Point::new(0.0, 1.0), 0.0).unwrap();
        let c = t.vertex_at(Point::new(1.0, phi), 0.0).unwrap();
        let from_f = t.foot_of_altitude(f);
        assert!(close(from_f.x, 1.0, 1e-15) && close(from_f.y, 1.0, 1e-15));
        let from_c = t.foot_of_altitude(c);
        assert!(close(from_c.x, 1.0 - phi / 2.0, 1e-15));
        assert!(close(from_c.y, phi / 2.0, 1e-15));
        assert!(close(from_c.x, 0.190983, 1e-6) && close(from_c.y, 0.809017, 1e-6));
        assert!(close(t.a().distance(from_c), phi / 2f64.sqrt(), 1e-15));
    }

    #[test]
    fn orthic_of_equilateral_is_medial() {
        let t = equilateral();
        let o = t.orthic().unwrap();
        for v in Vertex::ALL {
            let (p, q) = v.others();
            let mid = t.vertex(p).lerp(t.vertex(q), 0.5);
            assert!(o.foot(v).distance(mid) <= 1e-15);
        }
        assert!(close(o.perimeter, 1.5, 1e-15));
    }

    #[test]
    fn orthic_requires_acute() {
        let t = Triangle::from_coords([0.0, 0.0, 1.0, 0.0, 0.0, 1.0]).unwrap();
        let err = t.orthic().unwrap_err();
        match err {
            Error::NotAcute {
                kind,
                vertex,
                angle,
            } => {
                assert_eq!(kind, TriangleKind::Right);
                assert_eq!(vertex, Vertex::A);
                assert!(close(angle, FRAC_PI_2, 1e-15));
            }
            other => panic!("unexpected {other}"),
        }
        let obtuse = Triangle::from_coords([0.0, 0.0, 1.0, 0.0, 2.0, 0.1]).unwrap();
        assert!(obtuse.orthic().unwrap_err().to_string().contains("obtuse"));
    }

    #[test]
    fn orthic_angles_from_coordinates() {
        use std::f64::consts::FRAC_PI_4;
        let t = Triangle::from_angles(FRAC_PI_4, FRAC_PI_3).unwrap();
        // Coordinate-level oracle: measure the angles of the feet directly with acos.
        let o = t.orthic().unwrap();
        let measure = |v: Point, p: Point, q: Point| {
            let (u, w) = (p - v, q - v);
            (u.dot(w) / (u.norm() * w.norm())).acos()
        };
        let d = o.foot_from_a;
        let e = o.foot_from_b;
        let f = o.foot_from_c;
        let measured = [measure(d, e, f), measure(e, f, d), measure(f, d, e)];
        let expected = [FRAC_PI_2, FRAC_PI_3, std::f64::consts::PI / 6.0];
        for i in 0..3 {
            assert!(
                close(measured[i], expected[i], 1e-12),
                "{i}: {}",
                measured[i]
            );
            assert!(close(o.angles.as_array()[i], expected[i], 1e-12));
        }
    }

    #[test]
    fn golden_orthic_sides_proportional() {
        let o = golden_bfc().orthic().unwrap();
        let mut sides = o.side_lengths();
        sides.sort_by(f64::total_cmp);
        assert!(close(sides[1] / sides[0], 2.0, 1e-12));
        assert!(close(sides[2] / sides[0], 5f64.sqrt(), 1e-12));
        // perimeter = (1 + 2 + √5) · smallest side
        assert!(close(o.perimeter, (3.0 + 5f64.sqrt()) * sides[0], 1e-12));
    }

    #[test]
    fn orthocenters() {
        let h = equilateral().orthocenter();
        assert!(close(h.x, 0.5, 1e-15) && close(h.y, 3f64.sqrt() / 6.0, 1e-15));
        let right = Triangle::from_coords([0.0, 0.0, 1.0, 0.0, 0.0, 1.0]).unwrap();
        assert!(right.orthocenter().norm() <= 1e-15);

        // Golden: altitude from F is y = 1; altitude from C is perpendicular to BF,
        // i.e. y - φ = x - 1. Intersection: (2 - φ, 1).
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let t = golden_bfc();
        let h = t.orthocenter();
        assert!(close(h.x, 2.0 - phi, 1e-15) && close(h.y, 1.0, 1e-15));
        for v in Vertex::ALL {
            let foot = t.foot_of_altitude(v);
            assert!(distance_to_line(h, t.vertex(v), foot) <= 1e-10);
        }
    }

    #[test]
    fn incenters() {
        let g = equilateral().incenter();
        assert!(close(g.x, 0.5, 1e-15) && close(g.y, 3f64.sqrt() / 6.0, 1e-15));
        let t = Triangle::from_coords([0.0, 0.0, 4.0, 0.0, 0.0, 3.0]).unwrap();
        let i = t.incenter();
        assert!(close(i.x, 1.0, 1e-15) && close(i.y, 1.0, 1e-15));
        let r = [(t.a(), t.b()), (t.b(), t.c()), (t.c(), t.a())]
            .map(|(p, q)| distance_to_line(i, p, q));
        assert!(close(r[0], r[1], 1e-10) && close(r[1], r[2], 1e-10));

        let golden = golden_bfc();
        let orthic = golden.orthic().unwrap().triangle().unwrap();
        assert!(orthic.incenter().distance(golden.orthocenter()) <= 1e-10);
    }

    #[test]
    fn perimeters() {
        let p = perimeter(
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        );
        assert!(close(p, 2.0 + 2f64.sqrt(), 1e-15));
        let q = Point::new(3.0, 4.0);
        assert_eq!(perimeter(q, q, q), 0.0);
    }

    #[test]
    fn unit_circumradius_instantiation() {
        let t = Triangle::from_angles(0.7, 1.1).unwrap();
        let ang = t.angles();
        assert!(close(ang.alpha, 0.7, 1e-14) && close(ang.beta, 1.1, 1e-14));
        // a / sin(alpha) = 2R = 2
        assert!(close(
            t.side_length(Vertex::A) / ang.alpha.sin(),
            2.0,
            1e-14
        ));
        assert!(Triangle::from_angles(2.0, 1.2).is_err());
    }
}
