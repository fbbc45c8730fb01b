use std::fmt::Write as _;

use crate::scalar::Scalar;

use super::{bounds, LabeledDiagram};

#[derive(Debug, Clone, PartialEq)]
pub struct SvgOptions {
    pub width: f64,
    pub height: f64,
    pub radius: f64,
    pub font_size: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            width: 800.0,
            height: 600.0,
            radius: 4.0,
            font_size: 12.0,
        }
    }
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// Aspect-preserving fit of layout coordinates into the padded canvas, `y` flipped.
pub(crate) struct Viewport {
    min_x: f64,
    min_y: f64,
    scale: f64,
    off_x: f64,
    off_y: f64,
    height: f64,
}

impl Viewport {
    pub(crate) fn fit<T: Scalar>(d: &LabeledDiagram<T>, width: f64, height: f64) -> Self {
        let (min_x, min_y, max_x, max_y) = bounds(&d.layout);
        let (pad_x, pad_y) = (0.05 * width, 0.05 * height);
        let (inner_w, inner_h) = (width - 2.0 * pad_x, height - 2.0 * pad_y);
        let (w, h) = (max_x - min_x, max_y - min_y);
        let scale = match (w > 0.0, h > 0.0) {
            (true, true) => (inner_w / w).min(inner_h / h),
            (true, false) => inner_w / w,
            (false, true) => inner_h / h,
            (false, false) => 1.0,
        };
        Viewport {
            min_x,
            min_y,
            scale,
            off_x: pad_x + (inner_w - w * scale) / 2.0,
            off_y: pad_y + (inner_h - h * scale) / 2.0,
            height,
        }
    }

    pub(crate) fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (
            self.off_x + (x - self.min_x) * self.scale,
            self.height - (self.off_y + (y - self.min_y) * self.scale),
        )
    }
}

pub fn to_svg<T: Scalar>(d: &LabeledDiagram<T>, opts: &SvgOptions) -> String {
    let vp = Viewport::fit(d, opts.width, opts.height);
    let pts: Vec<(f64, f64)> = d
        .layout
        .points
        .iter()
        .map(|p| vp.map(p.x.to_f64().unwrap_or(0.0), p.y.to_f64().unwrap_or(0.0)))
        .collect();

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#
    );
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = opts.width,
        h = opts.height
    );
    let _ = writeln!(s, r#"<g id="edges" stroke="black" stroke-width="1">"#);
    for &(a, b) in &d.layout.edges {
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
            pts[a].0, pts[a].1, pts[b].0, pts[b].1
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r#"<g id="concepts" fill="white" stroke="black" stroke-width="1">"#
    );
    for (i, (x, y)) in pts.iter().enumerate() {
        let _ = writeln!(
            s,
            r#"<circle id="c{i}" cx="{x:.2}" cy="{y:.2}" r="{}"/>"#,
            opts.radius
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r#"<g id="labels" font-family="sans-serif" font-size="{}">"#,
        opts.font_size
    );
    let gap = opts.radius + 2.0;
    for (i, (x, y)) in pts.iter().enumerate() {
        if !d.attribute_labels[i].is_empty() {
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
                x - gap,
                y - gap,
                escape(&d.attribute_labels[i].join(", "))
            );
        }
        if !d.object_labels[i].is_empty() {
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="start">{}</text>"#,
                x + gap,
                y + gap + opts.font_size,
                escape(&d.object_labels[i].join(", "))
            );
        }
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::FormalContext;
    use crate::render::tests::diagram;

    #[test]
    fn counts_and_determinism() {
        let d = diagram(&FormalContext::contranominal(3));
        let a = to_svg(&d, &SvgOptions::default());
        assert_eq!(a.matches("<circle").count(), 8);
        assert_eq!(a.matches("<line").count(), 12);
        assert_eq!(a, to_svg(&d, &SvgOptions::default()));
        // edges come before circles so dots are drawn on top
        assert!(a.find("<line").unwrap() < a.find("<circle").unwrap());
    }

    #[test]
    fn top_renders_at_top() {
        let d = diagram(&FormalContext::contranominal(2));
        let vp = Viewport::fit(&d, 800.0, 600.0);
        let (_, top_y) = vp.map(d.layout.points[3].x, d.layout.points[3].y);
        let (_, bottom_y) = vp.map(d.layout.points[0].x, d.layout.points[0].y);
        assert!(top_y < bottom_y);
        assert!((bottom_y - 570.0).abs() < 1e-9 && (top_y - 30.0).abs() < 1e-9);
    }

    #[test]
    fn labels_escaped() {
        assert_eq!(escape("a<b&\"c\""), "a&lt;b&amp;&quot;c&quot;");
    }
}
