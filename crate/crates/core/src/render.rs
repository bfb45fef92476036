//! SVG schematic of the vertex link: one sector per corner, labelled with
//! its corner number, gaps shaded, and each maximal band drawn as an arc
//! inside the ring.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::band::{bands, Bands};
use crate::coloring::{corner_numbers, Coloring};
use crate::surface::Triangulation;

const SIZE: f64 = 400.0;
const CENTER: f64 = SIZE / 2.0;
const OUTER: f64 = 150.0;
const INNER: f64 = 90.0;
const BAND: f64 = 70.0;

fn point(radius: f64, angle: f64) -> (f64, f64) {
    // counterclockwise on screen, starting at the top
    (CENTER + radius * angle.cos(), CENTER - radius * angle.sin())
}

fn angle(position: f64, n: usize) -> f64 {
    PI / 2.0 + 2.0 * PI * position / n as f64
}

/// Render the link of `f` as a standalone SVG document.
pub fn render_link(tri: &Triangulation, f: &Coloring) -> String {
    let link = tri.link();
    let n = link.len();
    let cn = corner_numbers(tri, f).in_link_order(tri);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}" font-family="monospace" font-size="11">"#
    );
    let _ = writeln!(out, "<title>vertex link: {n} corners, coloring {f}</title>");
    let _ = writeln!(out, r##"<g class="sectors" stroke="#555" stroke-width="1">"##);
    for (k, &value) in cn.iter().enumerate() {
        let (a0, a1) = (angle(k as f64, n), angle(k as f64 + 1.0, n));
        let (x0, y0) = point(OUTER, a0);
        let (x1, y1) = point(OUTER, a1);
        let (x2, y2) = point(INNER, a1);
        let (x3, y3) = point(INNER, a0);
        let (class, fill) = if value == 0 {
            ("corner gap", "#f4c7c3")
        } else {
            ("corner", "#dde7f3")
        };
        let _ = writeln!(
            out,
            r#"<path class="{class}" fill="{fill}" d="M {x0:.2} {y0:.2} A {OUTER} {OUTER} 0 0 0 {x1:.2} {y1:.2} L {x2:.2} {y2:.2} A {INNER} {INNER} 0 0 1 {x3:.2} {y3:.2} Z"/>"#
        );
        let c = link.corner(k);
        let (tx, ty) = point((OUTER + INNER) / 2.0, angle(k as f64 + 0.5, n));
        let _ = writeln!(
            out,
            r#"<text x="{tx:.2}" y="{ty:.2}" text-anchor="middle" dominant-baseline="middle" stroke="none"><title>corner {c} at position {k}</title>{value}</text>"#
        );
        let (ex, ey) = point(OUTER + 14.0, angle(k as f64 + 1.0, n));
        let _ = writeln!(
            out,
            r##"<text class="edge-end" x="{ex:.2}" y="{ey:.2}" text-anchor="middle" dominant-baseline="middle" stroke="none" fill="#333">e{}</text>"##,
            link.crossing_edge(k)
        );
    }
    out.push_str("</g>\n");

    let _ = writeln!(out, r##"<g class="bands" fill="none" stroke="#1f5fa8" stroke-width="3">"##);
    match bands(tri, f) {
        Bands::NoGaps => {
            let _ = writeln!(
                out,
                r##"<text x="{CENTER}" y="{CENTER}" text-anchor="middle" stroke="none" fill="#1f5fa8">no gaps</text>"##
            );
        }
        Bands::Maximal(list) => {
            for b in list {
                let a0 = angle(b.start as f64 + 0.15, n);
                let a1 = angle((b.start + b.len) as f64 - 0.15, n);
                let (x0, y0) = point(BAND, a0);
                let (x1, y1) = point(BAND, a1);
                let large = u8::from(2 * b.len > n);
                let _ = writeln!(
                    out,
                    r#"<path class="band {}" d="M {x0:.2} {y0:.2} A {BAND} {BAND} 0 {large} 0 {x1:.2} {y1:.2}"/>"#,
                    b.class
                );
                let (lx, ly) = point(BAND - 16.0, angle(b.start as f64 + b.len as f64 / 2.0, n));
                let _ = writeln!(
                    out,
                    r##"<text x="{lx:.2}" y="{ly:.2}" text-anchor="middle" dominant-baseline="middle" stroke="none" fill="#1f5fa8">{}</text>"##,
                    b.class
                );
            }
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}
