use std::fmt::Write as _;

use crate::scalar::Scalar;

use super::{bounds, LabeledDiagram};

#[derive(Debug, Clone, PartialEq)]
pub struct TikzOptions {
    /// Width of the drawing in centimetres.
    pub width_cm: f64,
}

impl Default for TikzOptions {
    fn default() -> Self {
        TikzOptions { width_cm: 8.0 }
    }
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '\\' => out.push_str("\\textbackslash{}"),
            '{' | '}' | '%' | '$' | '&' | '#' | '_' => {
                out.push('\\');
                out.push(ch);
            }
            '^' => out.push_str("\\^{}"),
            '~' => out.push_str("\\~{}"),
            c => out.push(c),
        }
    }
    out
}

/// Rounds to 4 decimals, normalising `-0`.
fn fmt4(v: f64) -> String {
    let r = (v * 1e4).round() / 1e4;
    format!("{:.4}", if r == 0.0 { 0.0 } else { r })
}

pub fn to_tikz<T: Scalar>(d: &LabeledDiagram<T>, opts: &TikzOptions) -> String {
    let (min_x, min_y, max_x, max_y) = bounds(&d.layout);
    let extent = (max_x - min_x).max(max_y - min_y);
    let scale = if extent > 0.0 {
        opts.width_cm / extent
    } else {
        1.0
    };

    let mut s = String::new();
    s.push_str("\\documentclass[tikz]{standalone}\n\\begin{document}\n");
    s.push_str("\\begin{tikzpicture}[concept/.style={circle, draw, fill=white, inner sep=0pt, minimum size=5pt}]\n");
    for (i, p) in d.layout.points.iter().enumerate() {
        let x = (p.x.to_f64().unwrap_or(0.0) - min_x) * scale;
        let y = (p.y.to_f64().unwrap_or(0.0) - min_y) * scale;
        let mut opts = String::from("concept");
        if !d.attribute_labels[i].is_empty() {
            let _ = write!(
                opts,
                ", label={{above left:{{{}}}}}",
                escape(&d.attribute_labels[i].join(", "))
            );
        }
        if !d.object_labels[i].is_empty() {
            let _ = write!(
                opts,
                ", label={{below right:{{{}}}}}",
                escape(&d.object_labels[i].join(", "))
            );
        }
        let _ = writeln!(
            s,
            "  \\node[{opts}] (c{i}) at ({}, {}) {{}};",
            fmt4(x),
            fmt4(y)
        );
    }
    for &(a, b) in &d.layout.edges {
        let _ = writeln!(s, "  \\draw (c{a}) -- (c{b});");
    }
    s.push_str("\\end{tikzpicture}\n\\end{document}\n");
    s
}
