//! Checks of the net invariants, reported rather than raised.

use serde::Serialize;

use super::{decompose_arcs, ArcClass, Net, VertexKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "detail")]
pub enum Violation {
    FaceLength(String),
    AdjacentFacesEqual(String),
    FaceColours(String),
    NotADisk(String),
    CornerLabels(String),
    InteriorDegree(String),
    LateralDegree(String),
    CornerDegree(String),
    CornerColours(String),
    LateralColours(String),
    InteriorStraightness(String),
    NotACovering,
    SideOrderDivisibleByThree(String),
    OppositeSidesShareCircle(String),
    OppositeCornerDiagonal(String),
}

impl Violation {
    /// True for the genericity conditions layered on top of a valid net.
    pub fn is_genericity(&self) -> bool {
        matches!(
            self,
            Violation::SideOrderDivisibleByThree(_)
                | Violation::OppositeSidesShareCircle(_)
                | Violation::OppositeCornerDiagonal(_)
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// All structural invariants hold.
    pub valid: bool,
    /// Valid, and no genericity condition is broken.
    pub generic: bool,
    /// No diagonal arc.
    pub irreducible: bool,
    /// Irreducible without loops.
    pub primitive: bool,
}

pub fn validate_net(net: &Net) -> ValidationReport {
    let mut v = Vec::new();
    let n = net.dart_count();
    let faces = net.faces();
    let mut face_of = vec![0; n];
    for (i, f) in faces.iter().enumerate() {
        for &d in f {
            face_of[d] = i;
        }
        if f.len() != 3 && f.len() != 4 {
            v.push(Violation::FaceLength(format!("face {i} has {} edges", f.len())));
        }
        let mut cols: Vec<usize> = f.iter().map(|&d| net.colour(d)).collect();
        cols.sort_unstable();
        cols.dedup();
        if cols.len() != f.len() {
            v.push(Violation::FaceColours(format!("face {i} repeats a colour")));
        }
    }
    for d in 0..n {
        if let Some(o) = net.opp(d) {
            if d < o && faces[face_of[d]].len() == faces[face_of[o]].len() {
                v.push(Violation::AdjacentFacesEqual(format!("edge of dart {d}")));
            }
            if net.colour(d) != net.colour(o) {
                v.push(Violation::FaceColours(format!("edge of dart {d} has two colours")));
            }
        }
    }

    // Disk topology.
    let (vid, nv) = net.vertex_ids();
    let euler = nv as isize - net.edge_count() as isize + faces.len() as isize;
    let boundary: Vec<usize> = (0..n).filter(|&d| net.is_boundary(d)).collect();
    let mut disk = euler == 1 && !boundary.is_empty() && connected(net);
    let mut cycle = Vec::new();
    if disk {
        let start = boundary[0];
        cycle.push(start);
        let mut e = net.boundary_next(start);
        while e != start && cycle.len() <= n {
            cycle.push(e);
            e = net.boundary_next(e);
        }
        let mut heads: Vec<usize> = cycle.iter().map(|&d| vid[d]).collect();
        heads.sort_unstable();
        heads.dedup();
        if cycle.len() != boundary.len() || heads.len() != cycle.len() {
            disk = false;
        }
    }
    if !disk {
        v.push(Violation::NotADisk(format!("euler characteristic {euler}")));
    }

    // Corner labels in boundary order.
    let corners = net.corners();
    let pos: Vec<Option<usize>> = corners.iter().map(|c| cycle.iter().position(|d| d == c)).collect();
    if disk {
        if pos.iter().any(|p| p.is_none()) {
            v.push(Violation::CornerLabels("a corner dart is not on the boundary".into()));
        } else {
            let p: Vec<usize> = pos.iter().map(|p| p.unwrap()).collect();
            let shift: Vec<usize> = p.iter().map(|&x| (x + cycle.len() - p[0]) % cycle.len()).collect();
            if !(shift[0] < shift[1] && shift[1] < shift[2] && shift[2] < shift[3]) {
                v.push(Violation::CornerLabels("corners are not in counterclockwise order".into()));
            }
        }
    }

    let kinds = net.vertex_kinds();
    let mut seen = vec![false; nv];
    for d in 0..n {
        let x = vid[d];
        if seen[x] {
            continue;
        }
        seen[x] = true;
        let deg = net.degree(d);
        let sectors = net.sectors(d);
        match kinds[x] {
            VertexKind::Interior => {
                if deg != 4 {
                    v.push(Violation::InteriorDegree(format!("vertex {x} has degree {deg}")));
                } else {
                    let c: Vec<usize> = sectors.iter().map(|&e| net.colour(e)).collect();
                    if c.len() == 4 && (c[0] != c[2] || c[1] != c[3] || c[0] == c[1]) {
                        v.push(Violation::InteriorStraightness(format!("vertex {x}")));
                    }
                }
            }
            VertexKind::Lateral | VertexKind::Corner(_) if disk => {
                let out = net.outgoing_boundary(d).unwrap();
                let inc = net.prev_boundary(out);
                let same = net.colour(out) == net.colour(inc);
                if let VertexKind::Corner(j) = kinds[x] {
                    if !deg.is_multiple_of(2) {
                        v.push(Violation::CornerDegree(format!("corner a{j} has degree {deg}")));
                    }
                    if same {
                        v.push(Violation::CornerColours(format!("corner a{j}")));
                    }
                } else {
                    if deg != 3 {
                        v.push(Violation::LateralDegree(format!("vertex {x} has degree {deg}")));
                    }
                    if !same {
                        v.push(Violation::LateralColours(format!("vertex {x}")));
                    }
                }
            }
            _ => {}
        }
    }

    let valid_structure = v.is_empty();
    if valid_structure && net.pdart.is_empty() {
        let mut copy = net.clone();
        if !copy.develop() {
            v.push(Violation::NotACovering);
        }
    }
    let valid = v.is_empty();

    let mut irreducible = false;
    let mut primitive = false;
    if valid {
        let sides = net.side_orders();
        for (j, &s) in sides.iter().enumerate() {
            if s % 3 == 0 {
                v.push(Violation::SideOrderDivisibleByThree(format!("side s{j} has order {s}")));
            }
        }
        for j in 0..2 {
            if net.side_colour(j) == net.side_colour(j + 2) {
                v.push(Violation::OppositeSidesShareCircle(format!("s{j} and s{}", j + 2)));
            }
        }
        let arcs = decompose_arcs(net);
        for a in &arcs.arcs {
            if a.class == ArcClass::Diagonal && a.joins_opposite_corners() {
                v.push(Violation::OppositeCornerDiagonal(format!("arc of order {}", a.order())));
            }
        }
        irreducible = arcs.count(ArcClass::Diagonal) == 0;
        primitive = irreducible && arcs.count(ArcClass::Loop) == 0;
    }
    let generic = valid && v.is_empty();
    ValidationReport { violations: v, valid, generic, irreducible, primitive }
}

fn connected(net: &Net) -> bool {
    let n = net.dart_count();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 0;
    while let Some(d) = stack.pop() {
        count += 1;
        for e in [Some(net.next(d)), net.opp(d)].into_iter().flatten() {
            if !seen[e] {
                seen[e] = true;
                stack.push(e);
            }
        }
    }
    count == n
}
