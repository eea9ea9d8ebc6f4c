//! SVG pictures and DOT Hasse diagrams. Floating point, for display only.

use std::fmt::Write;

use crate::arrangement::CurveKind;
use crate::complex::FaceComplex;
use crate::numeric::rational::to_f64;

const SIZE: f64 = 480.0;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

/// Square window containing every vertex with some margin.
fn window(c: &FaceComplex) -> (f64, f64, f64) {
    let pts: Vec<(f64, f64)> = c.vertices().iter().map(|v| v.sample.approx()).collect();
    if pts.is_empty() {
        return (0.0, 0.0, 3.0);
    }
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for (x, y) in pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let half = ((x1 - x0).max(y1 - y0) / 2.0 + 1.5).max(2.0);
    ((x0 + x1) / 2.0, (y0 + y1) / 2.0, half)
}

/// Points on the real locus of `ax² + bxy + cy² + dx + ey + f` in the window.
fn conic_points(k: &[f64; 6], cx: f64, cy: f64, half: f64) -> Vec<(f64, f64)> {
    let [a, b, c, d, e, f] = *k;
    let mut out = Vec::new();
    let steps = 600;
    for i in 0..=steps {
        let t = -half + 2.0 * half * i as f64 / steps as f64;
        // fix x, solve in y
        let x = cx + t;
        out.extend(
            quadratic(c, b * x + e, a * x * x + d * x + f)
                .into_iter()
                .map(|y| (x, y)),
        );
        // fix y, solve in x
        let y = cy + t;
        out.extend(
            quadratic(a, b * y + d, c * y * y + e * y + f)
                .into_iter()
                .map(|x| (x, y)),
        );
    }
    out.retain(|&(x, y)| (x - cx).abs() <= half && (y - cy).abs() <= half);
    out
}

fn quadratic(a: f64, b: f64, c: f64) -> Vec<f64> {
    if a.abs() < 1e-12 {
        return if b.abs() < 1e-12 {
            vec![]
        } else {
            vec![-c / b]
        };
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return vec![];
    }
    let s = disc.sqrt();
    vec![(-b - s) / (2.0 * a), (-b + s) / (2.0 * a)]
}

pub fn svg(c: &FaceComplex) -> String {
    let (cx, cy, half) = window(c);
    let to_px = |x: f64, y: f64| {
        (
            (x - cx + half) / (2.0 * half) * SIZE,
            (cy + half - y) / (2.0 * half) * SIZE,
        )
    };
    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#).unwrap();
    writeln!(
        s,
        "<!-- approximate rendering; exact data is in the JSON output -->"
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for (i, curve) in c.arrangement().curves().iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        let k: Vec<f64> = curve.coeffs().iter().map(to_f64).collect();
        let k6 = match curve.kind {
            CurveKind::Line(_) => [0.0, 0.0, 0.0, k[0], k[1], k[2]],
            CurveKind::Conic(_) => [k[0], k[1], k[2], k[3], k[4], k[5]],
        };
        for (x, y) in conic_points(&k6, cx, cy, half) {
            let (px, py) = to_px(x, y);
            writeln!(
                s,
                r#"<circle cx="{px:.2}" cy="{py:.2}" r="0.9" fill="{colour}"/>"#
            )
            .unwrap();
        }
        writeln!(
            s,
            r#"<text x="8" y="{}" font-size="12" fill="{colour}">{}</text>"#,
            16 + 14 * i,
            curve.label
        )
        .unwrap();
    }
    for f in c.faces() {
        let (x, y) = f.sample.approx();
        if (x - cx).abs() > half || (y - cy).abs() > half {
            continue;
        }
        let (px, py) = to_px(x, y);
        if f.dim == 0 {
            writeln!(
                s,
                r#"<circle cx="{px:.2}" cy="{py:.2}" r="3" fill="black"/>"#
            )
            .unwrap();
        }
        let size = [9, 9, 11][f.dim as usize];
        writeln!(
            s,
            r##"<text x="{:.2}" y="{:.2}" font-size="{size}" fill="#444">f{}</text>"##,
            px + 3.0,
            py - 3.0,
            f.id
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

/// Hasse diagram of the closure order, smaller faces pointing to larger ones.
pub fn dot(c: &FaceComplex) -> String {
    let mut s = String::from("digraph faces {\n  rankdir=BT;\n");
    for f in c.faces() {
        let shape = ["circle", "box", "ellipse"][f.dim as usize];
        writeln!(
            s,
            "  f{0} [label=\"f{0}\\n{1}\", shape={2}];",
            f.id, f.signs, shape
        )
        .unwrap();
    }
    for (a, b) in c.hasse_edges() {
        writeln!(s, "  f{a} -> f{b};").unwrap();
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{validate, Curve};
    use crate::complex::decompose;

    #[test]
    fn outputs_are_well_formed() {
        let a = validate(vec![
            Curve::line_i([0, 1, 0], "L"),
            Curve::conic_i([1, 0, 1, 0, -2, 0], "C"),
        ])
        .unwrap();
        let c = decompose(&a);
        let s = svg(&c);
        assert!(s.starts_with("<svg") && s.trim_end().ends_with("</svg>"));
        assert!(s.contains(">f0<"));
        let d = dot(&c);
        assert_eq!(d.matches(" -> ").count(), c.hasse_edges().len());
        assert_eq!(quadratic(1.0, 0.0, -1.0), vec![-1.0, 1.0]);
    }
}
