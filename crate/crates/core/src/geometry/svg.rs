//! Stereographic picture of a four-circle configuration.

use std::fmt::Write;

use super::FourCircleConfig;
use crate::vec3::Vec3;

const COLOURS: [&str; 4] = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd"];
const SIZE: f64 = 400.0;
const SCALE: f64 = 90.0;
const CLIP: f64 = 2.1;

/// Projection from the point antipodal to `pole`.
fn project(p: Vec3, pole: Vec3, e1: Vec3, e2: Vec3) -> Option<(f64, f64)> {
    let h = 1.0 + p.dot(&pole);
    if h < 1e-6 {
        return None;
    }
    let (x, y) = (p.dot(&e1) / h, p.dot(&e2) / h);
    if x.abs() > CLIP || y.abs() > CLIP {
        return None;
    }
    Some((SIZE / 2.0 + SCALE * x, SIZE / 2.0 - SCALE * y))
}

/// SVG 1.1 drawing of the four circles. The face with all inward signs
/// positive is shaded and the projection is centred on it.
pub fn render_config_svg(cfg: &FourCircleConfig) -> String {
    let n = cfg.normals;
    let mut centre = n[0] + n[1] + n[2] + n[3];
    if centre.norm() < 1e-9 {
        centre = n[0];
    }
    let pole = centre.normalized();
    let e1 = pole.any_orthogonal();
    let e2 = pole.cross(&e1);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);

    // Shade F by sampling a grid of directions.
    let mut dots = String::new();
    let steps = 80;
    for i in 0..steps {
        for j in 0..steps {
            let u = -CLIP + 2.0 * CLIP * (i as f64 + 0.5) / steps as f64;
            let v = -CLIP + 2.0 * CLIP * (j as f64 + 0.5) / steps as f64;
            let r2 = u * u + v * v;
            // Inverse stereographic projection.
            let p = (e1 * (2.0 * u) + e2 * (2.0 * v) + pole * (1.0 - r2)) * (1.0 / (1.0 + r2));
            if n.iter().all(|m| m.dot(&p) > 0.0) {
                let (x, y) = (SIZE / 2.0 + SCALE * u, SIZE / 2.0 - SCALE * v);
                let _ = write!(dots, "M{x:.1},{y:.1}h{w:.1}", w = 2.0 * CLIP * SCALE / steps as f64);
            }
        }
    }
    if !dots.is_empty() {
        let _ = writeln!(s, r##"<path d="{dots}" stroke="#f2d7a6" stroke-width="5"/>"##);
    }

    for (k, m) in n.iter().enumerate() {
        let a = m.any_orthogonal();
        let b = m.cross(&a);
        let mut path = String::new();
        let mut pen_down = false;
        for i in 0..=720 {
            let t = i as f64 / 720.0 * std::f64::consts::TAU;
            let (sn, cs) = t.sin_cos();
            match project(a * cs + b * sn, pole, e1, e2) {
                Some((x, y)) => {
                    let _ = write!(path, "{}{x:.2},{y:.2} ", if pen_down { "L" } else { "M" });
                    pen_down = true;
                }
                None => pen_down = false,
            }
        }
        let _ = writeln!(
            s,
            r#"<path d="{}" fill="none" stroke="{}" stroke-width="2"><title>C{}</title></path>"#,
            path.trim_end(),
            COLOURS[k],
            k + 1
        );
    }
    s.push_str("</svg>\n");
    s
}
