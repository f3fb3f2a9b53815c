//! Deterministic JSON output: fields in insertion order, floats at 17
//! significant digits, non-finite floats as `null`.

use std::fmt::Write;

use crate::geometry::{AngleTriple, OrthicResult, Point, Vertex};
use crate::golden::{GoldenFigure, ReferenceValue};
use crate::optimizer::{InscribedConfig, MinimizeResult};
use crate::theorem::{Counterexample, LocusReport, ProofStepReport, ScanReport, TheoremVerdict};

#[derive(Clone, Debug, PartialEq)]
pub enum Json {
    Null,
    Bool(bool),
    Int(i64),
    Num(f64),
    Str(String),
    Arr(Vec<Json>),
    Obj(Vec<(String, Json)>),
}

/// Formats `x` with exactly 17 significant digits. Exponents in `-5..=15` are
/// written positionally, others in `e` notation.
pub fn format_f64(x: f64) -> String {
    if !x.is_finite() {
        return "null".to_string();
    }
    let x = if x == 0.0 { 0.0 } else { x };
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..=15).contains(&exp) {
        return sci;
    }
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let mut out = String::with_capacity(24);
    if negative {
        out.push('-');
    }
    if exp >= 0 {
        let split = exp as usize + 1;
        out.push_str(&digits[..split]);
        out.push('.');
        out.push_str(&digits[split..]);
    } else {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        out.push_str(&digits);
    }
    out
}

fn escape_into(out: &mut String, s: &str) {
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

impl Json {
    pub fn obj<K: Into<String>>(fields: impl IntoIterator<Item = (K, Json)>) -> Json {
        Json::Obj(fields.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }

    pub fn str(s: impl Into<String>) -> Json {
        Json::Str(s.into())
    }

    /// Pretty-printed with two-space indentation and a trailing newline.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write_into(&mut out, 0);
        out.push('\n');
        out
    }

    fn write_into(&self, out: &mut String, indent: usize) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Int(i) => {
                let _ = write!(out, "{i}");
            }
            Json::Num(x) => out.push_str(&format_f64(*x)),
            Json::Str(s) => escape_into(out, s),
            Json::Arr(items) if items.is_empty() => out.push_str("[]"),
            Json::Obj(fields) if fields.is_empty() => out.push_str("{}"),
            Json::Arr(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    newline(out, indent + 1);
                    item.write_into(out, indent + 1);
                }
                newline(out, indent);
                out.push(']');
            }
            Json::Obj(fields) => {
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    newline(out, indent + 1);
                    escape_into(out, key);
                    out.push_str(": ");
                    value.write_into(out, indent + 1);
                }
                newline(out, indent);
                out.push('}');
            }
        }
    }
}

fn newline(out: &mut String, indent: usize) {
    out.push('\n');
    for _ in 0..indent {
        out.push_str("  ");
    }
}

pub trait ToJson {
    fn to_json(&self) -> Json;
}

impl ToJson for f64 {
    fn to_json(&self) -> Json {
        Json::Num(*self)
    }
}

impl ToJson for bool {
    fn to_json(&self) -> Json {
        Json::Bool(*self)
    }
}

impl ToJson for usize {
    fn to_json(&self) -> Json {
        Json::Int(*self as i64)
    }
}

impl<T: ToJson> ToJson for Option<T> {
    fn to_json(&self) -> Json {
        self.as_ref().map_or(Json::Null, ToJson::to_json)
    }
}

impl<T: ToJson> ToJson for [T] {
    fn to_json(&self) -> Json {
        Json::Arr(self.iter().map(ToJson::to_json).collect())
    }
}

impl ToJson for Point {
    fn to_json(&self) -> Json {
        Json::obj([("x", self.x.to_json()), ("y", self.y.to_json())])
    }
}

impl ToJson for Vertex {
    fn to_json(&self) -> Json {
        Json::str(self.name())
    }
}

impl ToJson for AngleTriple {
    fn to_json(&self) -> Json {
        Json::obj([
            ("alpha", self.alpha.to_json()),
            ("beta", self.beta.to_json()),
            ("gamma", self.gamma.to_json()),
        ])
    }
}

impl ToJson for OrthicResult {
    fn to_json(&self) -> Json {
        Json::obj([
            ("foot_from_a", self.foot_from_a.to_json()),
            ("foot_from_b", self.foot_from_b.to_json()),
            ("foot_from_c", self.foot_from_c.to_json()),
            ("side_lengths", self.side_lengths().to_json()),
            ("angles", self.angles.to_json()),
            ("perimeter", self.perimeter.to_json()),
        ])
    }
}

impl ToJson for InscribedConfig {
    fn to_json(&self) -> Json {
        Json::obj([
            ("t_on_bc", self.t_on_bc().to_json()),
            ("t_on_ca", self.t_on_ca().to_json()),
            ("t_on_ab", self.t_on_ab().to_json()),
        ])
    }
}

impl ToJson for MinimizeResult {
    fn to_json(&self) -> Json {
        let history = self
            .history
            .iter()
            .map(|&(i, p)| Json::Arr(vec![i.to_json(), p.to_json()]))
            .collect();
        Json::obj([
            ("config", self.config.to_json()),
            ("perimeter", self.perimeter.to_json()),
            ("iterations", self.iterations.to_json()),
            ("converged", self.converged.to_json()),
            ("near_right", self.near_right.to_json()),
            ("clamped_steps", self.clamped_steps.to_json()),
            ("history", Json::Arr(history)),
        ])
    }
}

impl ToJson for TheoremVerdict {
    fn to_json(&self) -> Json {
        Json::obj([
            ("orthic_is_right", self.orthic_is_right.to_json()),
            ("right_vertex", self.right_vertex.to_json()),
            ("has_quarter_pi", self.has_quarter_pi.to_json()),
            ("quarter_pi_vertex", self.quarter_pi_vertex.to_json()),
            ("quarter_pi_unique", self.quarter_pi_unique.to_json()),
            ("pairing_holds", self.pairing_holds.to_json()),
            ("biconditional_holds", self.biconditional_holds.to_json()),
        ])
    }
}

impl ToJson for ProofStepReport {
    fn to_json(&self) -> Json {
        Json::obj([
            ("angle_sum_residual", self.angle_sum_residual.to_json()),
            ("bisection_residuals", self.bisection_residuals.to_json()),
            (
                "quarter_relation_residual",
                self.quarter_relation_residual.to_json(),
            ),
            (
                "quarter_relation_active",
                self.quarter_relation_active.to_json(),
            ),
            ("quad_sum_residual", self.quad_sum_residual.to_json()),
            (
                "decomposition_residuals",
                self.decomposition_residuals.to_json(),
            ),
        ])
    }
}

impl ToJson for Counterexample {
    fn to_json(&self) -> Json {
        Json::obj([
            ("angles", self.angles.to_json()),
            ("verdict", self.verdict.to_json()),
        ])
    }
}

impl ToJson for ScanReport {
    fn to_json(&self) -> Json {
        Json::obj([
            ("grid_resolution", self.grid_resolution.to_json()),
            ("tol_angle", self.tol_angle.to_json()),
            ("boundary_band", self.boundary_band.to_json()),
            ("admissible_nodes", self.admissible_nodes.to_json()),
            ("samples_skipped", self.samples_skipped.to_json()),
            ("samples_tested", self.samples_tested.to_json()),
            ("counterexamples", self.counterexamples.to_json()),
        ])
    }
}

impl ToJson for LocusReport {
    fn to_json(&self) -> Json {
        Json::obj([
            ("samples_tested", self.samples_tested.to_json()),
            ("right_count", self.right_count.to_json()),
            ("counterexamples", self.counterexamples.to_json()),
        ])
    }
}

impl ToJson for ReferenceValue {
    fn to_json(&self) -> Json {
        Json::obj([
            ("name", Json::str(self.name)),
            ("computed", self.computed.to_json()),
            ("expected", self.expected.to_json()),
            ("residual", self.residual.to_json()),
        ])
    }
}

impl ToJson for GoldenFigure {
    fn to_json(&self) -> Json {
        Json::obj([
            ("phi", self.phi.to_json()),
            ("A", self.a.to_json()),
            ("B", self.b.to_json()),
            ("C", self.c.to_json()),
            ("D", self.d.to_json()),
            ("E", self.e.to_json()),
            ("F", self.f.to_json()),
            ("G", self.g.to_json()),
            ("H", self.h.to_json()),
            ("BG", self.bg.to_json()),
            ("GE", self.ge.to_json()),
            ("HE", self.he.to_json()),
            ("GH", self.gh.to_json()),
            ("orthic_perimeter", self.orthic.perimeter.to_json()),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(format_f64(1.5), "1.5000000000000000");
        assert_eq!(format_f64((1.0 + 5f64.sqrt()) / 2.0), "1.6180339887498949");
        assert_eq!(format_f64(5f64.sqrt() / 2.0), "1.1180339887498949");
        assert_eq!(format_f64(-0.25), "-0.25000000000000000");
        assert_eq!(format_f64(1e-9), "1.0000000000000001e-9");
        assert_eq!(format_f64(0.0), "0.0000000000000000");
        assert_eq!(format_f64(-0.0), "0.0000000000000000");
        assert_eq!(format_f64(123456.0), "123456.00000000000");
        assert_eq!(format_f64(f64::NAN), "null");
    }

    #[test]
    fn render_nested() {
        let doc = Json::obj([
            ("a", Json::Int(1)),
            ("b", Json::Arr(vec![Json::Bool(true), Json::Null])),
            ("c", Json::obj(Vec::<(String, Json)>::new())),
            ("d", Json::str("q\"uote")),
        ]);
        let text = doc.render();
        assert_eq!(
            text,
            "{\n  \"a\": 1,\n  \"b\": [\n    true,\n    null\n  ],\n  \"c\": {},\n  \"d\": \"q\\\"uote\"\n}\n"
        );
    }
}
