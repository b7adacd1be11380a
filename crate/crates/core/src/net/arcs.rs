//! Maximal monochromatic arcs of a net and their classification.

use serde::Serialize;

use super::{Net, VertexKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArcClass {
    Lateral,
    Diagonal,
    OneSided,
    TwoSided,
    Separator,
    Loop,
    OtherInterior,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ArcEnd {
    Corner(usize),
    /// Lateral vertex on side `s_j`.
    Side(usize),
    /// A vertex that is neither a corner nor on the boundary; only possible
    /// in malformed nets.
    Inner,
}

#[derive(Clone, Debug, Serialize)]
pub struct Arc {
    pub colour: usize,
    pub darts: Vec<usize>,
    pub vertices: Vec<usize>,
    pub ends: Option<(ArcEnd, ArcEnd)>,
    pub class: ArcClass,
}

impl Arc {
    pub fn order(&self) -> usize {
        self.darts.len()
    }

    /// Diagonal arc whose ends are opposite corners.
    pub fn joins_opposite_corners(&self) -> bool {
        matches!(self.ends, Some((ArcEnd::Corner(i), ArcEnd::Corner(j))) if (i + 2) % 4 == j)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ArcDecomposition {
    pub arcs: Vec<Arc>,
}

impl ArcDecomposition {
    pub fn count(&self, class: ArcClass) -> usize {
        self.arcs.iter().filter(|a| a.class == class).count()
    }
    pub fn interior(&self) -> impl Iterator<Item = &Arc> {
        self.arcs.iter().filter(|a| a.class != ArcClass::Lateral)
    }
}

/// Splits the edges of `net` into maximal arcs.
pub fn decompose_arcs(net: &Net) -> ArcDecomposition {
    let (vid, _) = net.vertex_ids();
    let kinds = net.vertex_kinds();
    let n = net.dart_count();
    let mut side_of = vec![usize::MAX; kinds.len()];
    let mut arcs = Vec::new();
    let mut used = vec![false; n];

    for j in 0..4 {
        let darts = net.side(j);
        let mut vertices = vec![vid[darts[0]]];
        for &d in &darts {
            used[d] = true;
            let h = vid[net.next(d)];
            vertices.push(h);
            if !matches!(kinds[h], VertexKind::Corner(_)) {
                side_of[h] = j;
            }
        }
        arcs.push(Arc {
            colour: net.colour(darts[0]),
            darts,
            vertices,
            ends: Some((ArcEnd::Corner(j), ArcEnd::Corner((j + 1) % 4))),
            class: ArcClass::Lateral,
        });
    }

    let end_of = |v: usize| match kinds[v] {
        VertexKind::Corner(j) => ArcEnd::Corner(j),
        VertexKind::Lateral if side_of[v] != usize::MAX => ArcEnd::Side(side_of[v]),
        _ => ArcEnd::Inner,
    };
    // Continuation of an interior dart through its head, if the arc goes on.
    let step = |d: usize| -> Option<usize> {
        let h = net.next(d);
        if kinds[vid[h]] != VertexKind::Interior {
            return None;
        }
        let around = net.sectors(h);
        if around.len() != 4 {
            return None;
        }
        let back = net.opp(d)?;
        let i = around.iter().position(|&e| e == back)?;
        Some(around[(i + 2) % 4])
    };

    for start in 0..n {
        if used[start] || net.opp(start).is_none() {
            continue;
        }
        let mut fwd = vec![start];
        let mut closed = false;
        let mut d = start;
        while let Some(e) = step(d) {
            if e == start {
                closed = true;
                break;
            }
            if fwd.len() > n {
                break;
            }
            fwd.push(e);
            d = e;
        }
        let mut darts = Vec::new();
        if !closed {
            let mut back = Vec::new();
            let mut d = net.opp(start).unwrap();
            while let Some(e) = step(d) {
                if back.len() > n {
                    break;
                }
                back.push(e);
                d = e;
            }
            for &b in back.iter().rev() {
                darts.push(net.opp(b).unwrap());
            }
        }
        darts.extend(fwd);
        for &d in &darts {
            used[d] = true;
            if let Some(o) = net.opp(d) {
                used[o] = true;
            }
        }
        let mut vertices: Vec<usize> = darts.iter().map(|&d| vid[d]).collect();
        let last = vid[net.next(*darts.last().unwrap())];
        vertices.push(last);
        let (ends, class) = if closed {
            (None, ArcClass::Loop)
        } else {
            let a = end_of(vertices[0]);
            let b = end_of(last);
            (Some((a, b)), classify(a, b, vertices[0] == last))
        };
        arcs.push(Arc { colour: net.colour(start), darts, vertices, ends, class });
    }
    ArcDecomposition { arcs }
}

fn sides_of(e: ArcEnd) -> Vec<usize> {
    match e {
        ArcEnd::Corner(j) => vec![(j + 3) % 4, j],
        ArcEnd::Side(j) => vec![j],
        ArcEnd::Inner => vec![],
    }
}

fn classify(a: ArcEnd, b: ArcEnd, same_vertex: bool) -> ArcClass {
    use ArcEnd::*;
    if same_vertex {
        return ArcClass::Loop;
    }
    match (a, b) {
        (Corner(_), Corner(_)) => ArcClass::Diagonal,
        (Inner, _) | (_, Inner) => ArcClass::OtherInterior,
        _ => {
            let sa = sides_of(a);
            let sb = sides_of(b);
            if sa.iter().any(|s| sb.contains(s)) {
                return ArcClass::OneSided;
            }
            match (a, b) {
                (Side(i), Side(j)) => {
                    if (i + 1) % 4 == j || (j + 1) % 4 == i {
                        ArcClass::TwoSided
                    } else {
                        ArcClass::OtherInterior
                    }
                }
                _ => ArcClass::Separator,
            }
        }
    }
}
