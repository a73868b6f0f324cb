//! SVG rendering of a Ford pattern over one lattice cell.
//!
//! The complex plane maps to user units at 100 per unit with the y axis
//! pointing up; all coordinates are printed with four decimals so output is
//! byte-stable.

use std::f64::consts::TAU;
use std::fmt::Write;

use num_complex::Complex64;

use super::lattice::CuspLattice;
use super::pattern::{extent, Arc, FordPattern};

const SCALE: f64 = 100.0;
const MARGIN: f64 = 0.10;
const DASH: &str = "4 3";

fn num(x: f64) -> String {
    let s = format!("{:.4}", x);
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

fn px(z: Complex64) -> (String, String) {
    (num(z.re * SCALE), num(-z.im * SCALE))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Cell outline in the complex plane.
fn outline(p: &FordPattern, lattice: &CuspLattice) -> Vec<Complex64> {
    match lattice.cell() {
        Some(c) => c.to_vec(),
        None => {
            let (lo, hi) = if p.spheres.is_empty() {
                (-0.5, 0.5)
            } else {
                extent(&p.spheres)
            };
            vec![
                Complex64::new(0.0, lo),
                Complex64::new(1.0, lo),
                Complex64::new(1.0, hi),
                Complex64::new(0.0, hi),
            ]
        }
    }
}

fn arc_path(center: Complex64, r: f64, arc: &Arc) -> String {
    let a = center + Complex64::from_polar(r, arc.start);
    let b = center + Complex64::from_polar(r, arc.end);
    let (ax, ay) = px(a);
    let (bx, by) = px(b);
    let large = u8::from(arc.measure() > TAU / 2.0);
    let rr = num(r * SCALE);
    // Counter-clockwise in the plane is sweep-flag 0 once y is flipped.
    format!("M {ax} {ay} A {rr} {rr} 0 {large} 0 {bx} {by}")
}

/// Complement of the visible arcs on the circle.
fn hidden_arcs(visible: &[Arc]) -> Vec<Arc> {
    if visible.is_empty() {
        return vec![Arc {
            start: 0.0,
            end: TAU,
        }];
    }
    let mut out = Vec::new();
    for (i, a) in visible.iter().enumerate() {
        let next_start = match visible.get(i + 1) {
            Some(n) => n.start,
            None => visible[0].start + TAU,
        };
        if next_start > a.end {
            out.push(Arc {
                start: a.end % TAU,
                end: a.end % TAU + (next_start - a.end),
            });
        }
    }
    out
}

pub fn render_svg(p: &FordPattern, lattice: &CuspLattice) -> String {
    let cell = outline(p, lattice);
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for z in &cell {
        x0 = x0.min(z.re);
        x1 = x1.max(z.re);
        y0 = y0.min(z.im);
        y1 = y1.max(z.im);
    }
    let (mx, my) = (MARGIN * (x1 - x0), MARGIN * (y1 - y0));
    let (vx, vy) = (x0 - mx, y1 + my);
    let (vw, vh) = ((x1 - x0 + 2.0 * mx) * SCALE, (y1 - y0 + 2.0 * my) * SCALE);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}" width="{}" height="{}">"#,
        num(vx * SCALE),
        num(-vy * SCALE),
        num(vw),
        num(vh),
        num(vw),
        num(vh)
    );
    let pts: Vec<String> = cell
        .iter()
        .map(|&z| {
            let (x, y) = px(z);
            format!("{x},{y}")
        })
        .collect();
    let _ = writeln!(
        s,
        r##"<polygon class="cell" points="{}" fill="none" stroke="#888888" stroke-width="0.5"/>"##,
        pts.join(" ")
    );

    let font = num((0.04 * (x1 - x0).max(y1 - y0)).max(0.02) * SCALE);
    for (i, sphere) in p.spheres.iter().enumerate() {
        let arcs = p.visible_arcs.get(i).map(Vec::as_slice).unwrap_or(&[]);
        let (cx, cy) = px(sphere.center);
        let r = num(sphere.radius * SCALE);
        let title: Vec<String> = sphere.labels().map(|w| escape(&w.to_string())).collect();
        let _ = writeln!(
            s,
            r#"<g class="sphere" data-label="{}">"#,
            escape(&sphere.label.to_string())
        );
        let _ = writeln!(s, "<title>{}</title>", title.join("; "));
        if arcs.len() == 1 && arcs[0].is_full() {
            let _ = writeln!(
                s,
                r##"<circle class="visible" cx="{cx}" cy="{cy}" r="{r}" fill="none" stroke="#000000" stroke-width="1"/>"##
            );
        } else if arcs.is_empty() {
            let _ = writeln!(
                s,
                r##"<circle class="hidden" cx="{cx}" cy="{cy}" r="{r}" fill="none" stroke="#000000" stroke-width="0.5" stroke-dasharray="{DASH}"/>"##
            );
        } else {
            for a in arcs {
                let _ = writeln!(
                    s,
                    r##"<path class="visible" d="{}" fill="none" stroke="#000000" stroke-width="1"/>"##,
                    arc_path(sphere.center, sphere.radius, a)
                );
            }
            for a in hidden_arcs(arcs) {
                let _ = writeln!(
                    s,
                    r##"<path class="hidden" d="{}" fill="none" stroke="#000000" stroke-width="0.5" stroke-dasharray="{DASH}"/>"##,
                    arc_path(sphere.center, sphere.radius, &a)
                );
            }
        }
        let _ = writeln!(
            s,
            r#"<text x="{cx}" y="{cy}" font-size="{font}" text-anchor="middle">{}</text>"#,
            escape(&sphere.label.to_string())
        );
        let _ = writeln!(s, "</g>");
    }
    let _ = writeln!(s, "</svg>");
    s
}
