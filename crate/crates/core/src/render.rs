//! SVG figures of a triangle with its altitudes and orthic triangle, and of the
//! golden-rectangle construction.
//!
//! Output is a pure function of the inputs. World coordinates are mapped by one
//! uniform scale and a translation into the margin-inset viewport, with the
//! y axis flipped so that up is up.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::geometry::{Point, Triangle, Vertex};
use crate::golden::GoldenFigure;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RenderSpec {
    pub width_px: u32,
    pub height_px: u32,
    pub margin_px: u32,
    pub show_altitudes: bool,
    pub show_orthic: bool,
    pub show_labels: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            width_px: 640,
            height_px: 480,
            margin_px: 40,
            show_altitudes: true,
            show_orthic: true,
            show_labels: true,
        }
    }
}

impl RenderSpec {
    pub fn validate(&self) -> Result<()> {
        if self.width_px < 64 || self.height_px < 64 {
            return Err(Error::InvalidArgument(format!(
                "canvas must be at least 64x64 px, got {}x{}",
                self.width_px, self.height_px
            )));
        }
        if self.margin_px * 4 >= self.width_px.min(self.height_px) {
            return Err(Error::InvalidArgument(format!(
                "margin {} px must be below a quarter of the smaller canvas side",
                self.margin_px
            )));
        }
        Ok(())
    }
}

#[derive(Default)]
struct Scene {
    polygons: Vec<(&'static str, Vec<Point>)>,
    lines: Vec<(&'static str, Point, Point)>,
    labels: Vec<(String, Point)>,
}

impl Scene {
    fn bounds(&self) -> (Point, Point) {
        let points = self
            .polygons
            .iter()
            .flat_map(|(_, pts)| pts.iter().copied())
            .chain(self.lines.iter().flat_map(|&(_, p, q)| [p, q]));
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        (lo, hi)
    }

    fn to_svg(&self, spec: &RenderSpec) -> String {
        let (lo, hi) = self.bounds();
        let (w, h, m) = (
            spec.width_px as f64,
            spec.height_px as f64,
            spec.margin_px as f64,
        );
        let span_x = (hi.x - lo.x).max(f64::MIN_POSITIVE);
        let span_y = (hi.y - lo.y).max(f64::MIN_POSITIVE);
        let scale = ((w - 2.0 * m) / span_x).min((h - 2.0 * m) / span_y);
        let off_x = m + 0.5 * (w - 2.0 * m - span_x * scale);
        let off_y = m + 0.5 * (h - 2.0 * m - span_y * scale);
        let map = |p: Point| {
            let x = off_x + (p.x - lo.x) * scale;
            let y = h - off_y - (p.y - lo.y) * scale;
            (coord(x), coord(y))
        };

        let mut out = String::new();
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
            spec.width_px, spec.height_px, spec.width_px, spec.height_px
        );
        out.push_str("<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
        for (class, pts) in &self.polygons {
            let list: Vec<String> = pts
                .iter()
                .map(|&p| {
                    let (x, y) = map(p);
                    format!("{x},{y}")
                })
                .collect();
            let _ = writeln!(
                out,
                "<polygon class=\"{class}\" points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>",
                list.join(" "),
                stroke(class)
            );
        }
        for &(class, p, q) in &self.lines {
            let (x1, y1) = map(p);
            let (x2, y2) = map(q);
            let dash = if class == "altitude" {
                " stroke-dasharray=\"4 3\""
            } else {
                ""
            };
            let _ = writeln!(
                out,
                "<line class=\"{class}\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"{}\" stroke-width=\"1.5\"{dash}/>",
                stroke(class)
            );
        }
        for (text, p) in &self.labels {
            let (x, y) = map(*p);
            let _ = writeln!(
                out,
                "<text x=\"{x}\" y=\"{y}\" font-family=\"serif\" font-size=\"14\" dx=\"4\" dy=\"-4\">{text}</text>"
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

fn coord(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

fn stroke(class: &str) -> &'static str {
    match class {
        "triangle" => "black",
        "altitude" => "gray",
        "orthic" => "crimson",
        _ => "steelblue",
    }
}

fn add_triangle(
    scene: &mut Scene,
    t: &Triangle,
    spec: &RenderSpec,
    vertex_names: [&str; 3],
    foot_names: [&str; 3],
) -> Result<()> {
    if spec.show_altitudes || spec.show_orthic {
        t.require_acute()?;
    }
    for v in Vertex::ALL {
        let (p, q) = v.others();
        scene.lines.push(("triangle", t.vertex(p), t.vertex(q)));
    }
    if spec.show_altitudes {
        for v in Vertex::ALL {
            scene
                .lines
                .push(("altitude", t.vertex(v), t.foot_of_altitude(v)));
        }
    }
    if spec.show_orthic {
        let o = t.orthic()?;
        for v in Vertex::ALL {
            let (p, q) = v.others();
            scene.lines.push(("orthic", o.foot(p), o.foot(q)));
        }
    }
    if spec.show_labels {
        for v in Vertex::ALL {
            scene
                .labels
                .push((vertex_names[v.index()].to_string(), t.vertex(v)));
        }
        if spec.show_altitudes || spec.show_orthic {
            for v in Vertex::ALL {
                if !foot_names[v.index()].is_empty() {
                    scene
                        .labels
                        .push((foot_names[v.index()].to_string(), t.foot_of_altitude(v)));
                }
            }
        }
    }
    Ok(())
}

/// Triangle `ABC` with altitudes and the orthic triangle `DEF`, `D`, `E`, `F`
/// being the feet of the altitudes from `A`, `B`, `C`.
pub fn render_triangle(t: &Triangle, spec: &RenderSpec) -> Result<String> {
    spec.validate()?;
    let mut scene = Scene::default();
    add_triangle(&mut scene, t, spec, ["A", "B", "C"], ["D", "E", "F"])?;
    Ok(scene.to_svg(spec))
}

/// The golden rectangle `ABCD`, the square `ABEF`, triangle `BFC` and its
/// orthic triangle `GHE`.
pub fn render_golden(fig: &GoldenFigure, spec: &RenderSpec) -> Result<String> {
    spec.validate()?;
    let mut scene = Scene::default();
    scene
        .polygons
        .push(("rectangle", vec![fig.a, fig.b, fig.c, fig.d]));
    scene
        .polygons
        .push(("square", vec![fig.a, fig.b, fig.e, fig.f]));

    let mut vertex_names = [""; 3];
    let mut foot_names = [""; 3];
    for (point, name, foot) in [(fig.b, "B", "H"), (fig.f, "F", ""), (fig.c, "C", "G")] {
        let v = fig.vertex_of(point).expect("vertex of BFC");
        vertex_names[v.index()] = name;
        foot_names[v.index()] = foot;
    }
    add_triangle(
        &mut scene,
        &fig.triangle_bfc,
        spec,
        vertex_names,
        foot_names,
    )?;
    if spec.show_labels {
        for (name, p) in [("A", fig.a), ("D", fig.d), ("E", fig.e)] {
            scene.labels.push((name.to_string(), p));
        }
    }
    Ok(scene.to_svg(spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden;

    fn equilateral() -> Triangle {
        Triangle::from_coords([0.0, 0.0, 1.0, 0.0, 0.5, 3f64.sqrt() / 2.0]).unwrap()
    }

    #[test]
    fn equilateral_has_nine_lines() {
        let svg = render_triangle(&equilateral(), &RenderSpec::default()).unwrap();
        assert_eq!(svg.matches("<line ").count(), 9);
        assert_eq!(svg.matches("class=\"triangle\"").count(), 3);
        assert_eq!(svg.matches("class=\"altitude\"").count(), 3);
        assert_eq!(svg.matches("class=\"orthic\"").count(), 3);
        assert_eq!(svg.matches("<text ").count(), 6);
        assert!(svg.starts_with("<svg "));
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn overlays_off() {
        let spec = RenderSpec {
            show_altitudes: false,
            show_orthic: false,
            show_labels: false,
            ..RenderSpec::default()
        };
        let right = Triangle::from_coords([0.0, 0.0, 1.0, 0.0, 0.0, 1.0]).unwrap();
        let svg = render_triangle(&right, &spec).unwrap();
        assert_eq!(svg.matches("<line ").count(), 3);
        assert!(!svg.contains("<text"));
        assert!(matches!(
            render_triangle(&right, &RenderSpec::default()),
            Err(Error::NotAcute { .. })
        ));
    }

    #[test]
    fn golden_figure_inventory() {
        let svg = render_golden(&golden::build(), &RenderSpec::default()).unwrap();
        assert_eq!(svg.matches("<polygon ").count(), 2);
        assert!(svg.contains("class=\"rectangle\""));
        assert!(svg.contains("class=\"square\""));
        assert_eq!(svg.matches("<line ").count(), 9);
        for name in ["A", "B", "C", "D", "E", "F", "G", "H"] {
            assert!(svg.contains(&format!(">{name}</text>")), "{name}");
        }
    }

    #[test]
    fn mapping_fits_viewport() {
        let spec = RenderSpec::default();
        let svg = render_triangle(&equilateral(), &spec).unwrap();
        // Base vertices at the bottom margin, width-limited or height-limited.
        let span = (spec.height_px - 2 * spec.margin_px) as f64;
        let base_y = spec.height_px as f64 - spec.margin_px as f64;
        assert!(svg.contains(&format!("y1=\"{base_y:.3}\"")));
        assert!(svg.contains(&format!("{:.3}", spec.margin_px as f64)));
        assert!(span > 0.0);
    }

    #[test]
    fn deterministic() {
        let t = Triangle::from_coords([0.1, 0.2, 3.0, -0.4, 1.1, 2.2]).unwrap();
        let a = render_triangle(&t, &RenderSpec::default()).unwrap();
        let b = render_triangle(&t, &RenderSpec::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn spec_validation() {
        let small = RenderSpec {
            width_px: 63,
            ..RenderSpec::default()
        };
        assert!(small.validate().is_err());
        let wide_margin = RenderSpec {
            margin_px: 120,
            ..RenderSpec::default()
        };
        assert!(wide_margin.validate().is_err());
        assert!(RenderSpec::default().validate().is_ok());
    }
}
