//! The golden rectangle `ABCD` (`AB = 1`, `BC = φ`), split into the unit square
//! `ABEF` and the smaller golden rectangle `FECD`, and the orthic triangle
//! `GHE` of triangle `BFC`.
//!
//! Embedding: `A=(0,0)`, `B=(1,0)`, `C=(1,φ)`, `D=(0,φ)`, `E=(1,1)`, `F=(0,1)`.
//! `G`, `H` and the orthic `E` are the feet of the altitudes from `C`, `B` and
//! `F`; the orthic `E` coincides with the square corner.

use std::f64::consts::{FRAC_PI_4, SQRT_2};

use crate::error::{Error, Result};
use crate::geometry::{OrthicResult, Point, Triangle, Vertex};

pub fn golden_ratio() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

#[derive(Clone, Debug, PartialEq)]
pub struct GoldenFigure {
    pub phi: f64,
    pub a: Point,
    pub b: Point,
    pub c: Point,
    pub d: Point,
    pub e: Point,
    pub f: Point,
    /// Built from `(B, F, C)`; stored counterclockwise as `(B, C, F)`.
    pub triangle_bfc: Triangle,
    pub orthic: OrthicResult,
    /// Foot of the altitude from `C`, on `BF`.
    pub g: Point,
    /// Foot of the altitude from `B`, on `FC`.
    pub h: Point,
    /// Foot of the altitude from `F`, on `BC`.
    pub orthic_e: Point,
    pub bg: f64,
    pub ge: f64,
    pub he: f64,
    pub gh: f64,
}

/// Builds the figure from coordinates.
pub fn build() -> GoldenFigure {
    let phi = golden_ratio();
    let a = Point::new(0.0, 0.0);
    let b = Point::new(1.0, 0.0);
    let c = Point::new(1.0, phi);
    let d = Point::new(0.0, phi);
    let e = Point::new(1.0, 1.0);
    let f = Point::new(0.0, 1.0);
    let triangle_bfc = Triangle::new(b, f, c).expect("triangle BFC is non-degenerate");
    let orthic = triangle_bfc.orthic().expect("triangle BFC is acute");

    let vertex = |p: Point| triangle_bfc.vertex_at(p, 0.0).expect("vertex of BFC");
    let g = orthic.foot(vertex(c));
    let h = orthic.foot(vertex(b));
    let orthic_e = orthic.foot(vertex(f));

    GoldenFigure {
        phi,
        a,
        b,
        c,
        d,
        e,
        f,
        triangle_bfc,
        orthic,
        g,
        h,
        orthic_e,
        bg: b.distance(g),
        ge: g.distance(orthic_e),
        he: h.distance(orthic_e),
        gh: g.distance(h),
    }
}

impl GoldenFigure {
    /// The parent vertex of `BFC` sitting at `p`.
    pub fn vertex_of(&self, p: Point) -> Option<Vertex> {
        self.triangle_bfc.vertex_at(p, 0.0)
    }

    /// Named structural residuals of the rectangle, square and sub-rectangle.
    pub fn structure_residuals(&self) -> Vec<(&'static str, f64)> {
        let right = |p: Point, q: Point, r: Point| {
            let (u, v) = (q - p, r - p);
            (u.dot(v) / (u.norm() * v.norm())).abs()
        };
        let (a, b, c, d, e, f) = (self.a, self.b, self.c, self.d, self.e, self.f);
        let fe = f.distance(e);
        let ec = e.distance(c);
        vec![
            (
                "phi^2 - phi - 1",
                (self.phi * self.phi - self.phi - 1.0).abs(),
            ),
            ("|AB| - 1", (a.distance(b) - 1.0).abs()),
            ("|BC| - phi", (b.distance(c) - self.phi).abs()),
            ("|BE| - 1", (b.distance(e) - 1.0).abs()),
            ("|EF| - 1", (e.distance(f) - 1.0).abs()),
            ("|FA| - 1", (f.distance(a) - 1.0).abs()),
            ("cos angle A of ABEF", right(a, b, f)),
            ("cos angle B of ABEF", right(b, e, a)),
            ("cos angle E of ABEF", right(e, f, b)),
            ("cos angle F of ABEF", right(f, a, e)),
            ("cos angle F of FECD", right(f, e, d)),
            ("cos angle E of FECD", right(e, c, f)),
            ("cos angle C of FECD", right(c, d, e)),
            ("cos angle D of FECD", right(d, f, c)),
            ("|FE|/|EC| - phi", (fe / ec - self.phi).abs()),
            (
                "|FE|/|BC| - 1/phi",
                (fe / b.distance(c) - 1.0 / self.phi).abs(),
            ),
            ("orthic E - square E", self.orthic_e.distance(e)),
        ]
    }
}

/// `√(p² + q² − 2pq·cos θ)`.
pub fn law_of_cosines(p: f64, q: f64, included_angle: f64) -> Result<f64> {
    if !(p > 0.0 && q > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "sides must be positive, got {p} and {q}"
        )));
    }
    if !(included_angle > 0.0 && included_angle < std::f64::consts::PI) {
        return Err(Error::InvalidArgument(format!(
            "included angle must lie in (0, pi), got {included_angle}"
        )));
    }
    Ok((p * p + q * q - 2.0 * p * q * included_angle.cos()).sqrt())
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReferenceValue {
    pub name: &'static str,
    /// From distances between constructed points.
    pub computed: f64,
    /// From the closed form.
    pub expected: f64,
    pub residual: f64,
}

impl ReferenceValue {
    fn new(name: &'static str, computed: f64, expected: f64) -> Self {
        ReferenceValue {
            name,
            computed,
            expected,
            residual: (computed - expected).abs(),
        }
    }
}

/// Coordinate values against their closed forms.
pub fn reproduce_reference_values(fig: &GoldenFigure) -> Vec<ReferenceValue> {
    let phi = fig.phi;
    let sqrt5 = 5f64.sqrt();
    let ge_closed = ((1.0 + phi * phi) / (2.0 * phi * phi)).sqrt();
    let he_closed = (2.0 / (1.0 + phi * phi)).sqrt();
    let be = fig.b.distance(fig.e);
    let bf = fig.b.distance(fig.f);
    let bc = fig.b.distance(fig.c);

    let mut sides = [fig.gh, fig.he, fig.ge];
    sides.sort_by(f64::total_cmp);
    let law = law_of_cosines(fig.bg, be, FRAC_PI_4).expect("positive sides");

    vec![
        ReferenceValue::new("BG/BC", fig.bg / bc, 1.0 / SQRT_2),
        ReferenceValue::new("BE/BF", be / bf, 1.0 / SQRT_2),
        ReferenceValue::new("BG", fig.bg, phi / SQRT_2),
        ReferenceValue::new("GE", fig.ge, ge_closed),
        ReferenceValue::new("GE (law of cosines)", law, ge_closed),
        ReferenceValue::new("HE", fig.he, he_closed),
        ReferenceValue::new("GE/HE", fig.ge / fig.he, sqrt5 / 2.0),
        ReferenceValue::new("sorted sides ratio 2:1", sides[1] / sides[0], 2.0),
        ReferenceValue::new("sorted sides ratio 3:1", sides[2] / sides[0], sqrt5),
        ReferenceValue::new(
            "angle B of BFC",
            fig.triangle_bfc.angles().get(fig.vertex_of(fig.b).unwrap()),
            FRAC_PI_4,
        ),
        ReferenceValue::new(
            "angle H of GHE",
            fig.orthic.angles.get(fig.vertex_of(fig.b).unwrap()),
            std::f64::consts::FRAC_PI_2,
        ),
        ReferenceValue::new(
            "GH^2 + HE^2 - GE^2",
            fig.gh * fig.gh + fig.he * fig.he - fig.ge * fig.ge,
            0.0,
        ),
        ReferenceValue::new(
            "orthic perimeter",
            fig.orthic.perimeter,
            (3.0 + sqrt5) * ge_closed / sqrt5,
        ),
    ]
}
