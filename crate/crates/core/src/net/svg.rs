//! Schematic SVG of a net. Boundary vertices sit on a circle, interior
//! vertices at the average of their neighbours.

use std::fmt::Write;

use super::{Net, VertexKind};

const STYLES: [&str; 4] = [
    "stroke:#000;stroke-width:2",
    "stroke:#c00;stroke-width:2;stroke-dasharray:6,3",
    "stroke:#06c;stroke-width:2;stroke-dasharray:2,3",
    "stroke:#080;stroke-width:3",
];

pub fn render_net_svg(net: &Net) -> String {
    let (vid, nv) = net.vertex_ids();
    let kinds = net.vertex_kinds();
    let mut pos = vec![(0.0f64, 0.0f64); nv];
    let mut fixed = vec![false; nv];
    let cycle = net.boundary_cycle();
    for (i, &d) in cycle.iter().enumerate() {
        let t = std::f64::consts::TAU * i as f64 / cycle.len() as f64;
        pos[vid[d]] = (200.0 + 180.0 * t.cos(), 200.0 - 180.0 * t.sin());
        fixed[vid[d]] = true;
    }
    // Tutte-style relaxation for interior vertices.
    let edges: Vec<(usize, usize)> = (0..net.dart_count()).map(|d| (vid[d], vid[net.next(d)])).collect();
    for _ in 0..400 {
        let mut acc = vec![(0.0, 0.0, 0usize); nv];
        for &(a, b) in &edges {
            acc[a].0 += pos[b].0;
            acc[a].1 += pos[b].1;
            acc[a].2 += 1;
        }
        for x in 0..nv {
            if !fixed[x] && acc[x].2 > 0 {
                pos[x] = (acc[x].0 / acc[x].2 as f64, acc[x].1 / acc[x].2 as f64);
            }
        }
    }
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="400" height="400">"#);
    for d in 0..net.dart_count() {
        if net.opp(d).is_some_and(|o| o < d) {
            continue;
        }
        let (a, b) = (pos[vid[d]], pos[vid[net.next(d)]]);
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" style="{}"/>"#,
            a.0,
            a.1,
            b.0,
            b.1,
            STYLES[net.colour(d) % 4]
        );
    }
    for (x, k) in kinds.iter().enumerate() {
        if let VertexKind::Corner(j) = k {
            let _ = writeln!(s, r#"<circle cx="{:.2}" cy="{:.2}" r="5"/>"#, pos[x].0, pos[x].1);
            let _ =
                writeln!(s, r#"<text x="{:.2}" y="{:.2}" font-size="14">a{j}</text>"#, pos[x].0 + 8.0, pos[x].1 - 8.0);
        }
    }
    s.push_str("</svg>\n");
    s
}
