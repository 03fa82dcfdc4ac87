//! Lattice diagrams of planar monoids.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::monoid::Cone2D;
use crate::monomial::Monomial;

/// Pixels per lattice unit.
pub const PITCH: u32 = 40;
const MARGIN: u32 = 30;

/// What to draw in the box `[0, bound]^2`.
#[derive(Clone, Debug, Default)]
pub struct Diagram {
    pub bound: u32,
    pub members: BTreeSet<Monomial>,
    pub irreducibles: BTreeSet<Monomial>,
    pub cone: Option<Cone2D>,
    pub title: Option<String>,
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

impl Diagram {
    /// A deterministic SVG document: dotted grid, axes, filled dots for
    /// members, rings around irreducibles, and the cone's rays.
    pub fn render(&self) -> String {
        let b = self.bound;
        let size = 2 * MARGIN + b * PITCH;
        let px = |x: u32| MARGIN + x * PITCH;
        let py = |y: u32| MARGIN + (b - y) * PITCH;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
        );
        if let Some(t) = &self.title {
            let _ = writeln!(s, "<title>{}</title>", escape(t));
        }
        let _ = writeln!(s, r#"<rect width="{size}" height="{size}" fill="white"/>"#);
        let _ = writeln!(
            s,
            r##"<g stroke="#999" stroke-width="1" stroke-dasharray="2,4">"##
        );
        for i in 0..=b {
            let _ = writeln!(
                s,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                px(i),
                py(0),
                px(i),
                py(b)
            );
            let _ = writeln!(
                s,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                px(0),
                py(i),
                px(b),
                py(i)
            );
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(s, r#"<g stroke="black" stroke-width="1.5">"#);
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            px(0),
            py(0),
            px(b) + 15,
            py(0)
        );
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            px(0),
            py(0),
            px(0),
            py(b) - 15
        );
        let _ = writeln!(s, "</g>");
        if let Some(Cone2D::Proper { v1, v2, .. }) = &self.cone {
            let _ = writeln!(s, r#"<g stroke="steelblue" stroke-width="2">"#);
            for v in [v1, v2] {
                // scale the ray to the box edge
                let t = (b as f64 / v[0].max(v[1]) as f64).min(b as f64);
                let (x, y) = (v[0] as f64 * t, v[1] as f64 * t);
                let _ = writeln!(
                    s,
                    r#"<line x1="{}" y1="{}" x2="{:.1}" y2="{:.1}"/>"#,
                    px(0),
                    py(0),
                    MARGIN as f64 + x * PITCH as f64,
                    MARGIN as f64 + (b as f64 - y) * PITCH as f64
                );
            }
            let _ = writeln!(s, "</g>");
        }
        let _ = writeln!(s, r#"<g fill="black">"#);
        for p in &self.members {
            if p[0] <= b && p[1] <= b {
                let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="4"/>"#, px(p[0]), py(p[1]));
            }
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(s, r#"<g fill="none" stroke="crimson" stroke-width="1.5">"#);
        for p in &self.irreducibles {
            if p[0] <= b && p[1] <= b {
                let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="8"/>"#, px(p[0]), py(p[1]));
            }
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(s, "</svg>");
        s
    }
}

/// Points drawn as filled dots, read back from an SVG produced by
/// [`Diagram::render`].
pub fn dots(svg: &str, bound: u32) -> BTreeSet<(u32, u32)> {
    let mut out = BTreeSet::new();
    for line in svg.lines() {
        let Some(rest) = line.strip_prefix(r#"<circle cx=""#) else {
            continue;
        };
        if !line.ends_with(r#"r="4"/>"#) {
            continue;
        }
        let mut nums = rest.split('"').filter_map(|t| t.parse::<u32>().ok());
        let (Some(cx), Some(cy)) = (nums.next(), nums.next()) else {
            continue;
        };
        out.insert(((cx - MARGIN) / PITCH, bound - (cy - MARGIN) / PITCH));
    }
    out
}
