//! Catalogued chain diagrams: which nets can follow each other through a
//! triple intersection. Each diagram covers one vector of corner orders.

use crate::builders::NetLabel;

pub(crate) struct Diagram {
    pub name: String,
    /// Family letters of the member nets; used for scope filtering.
    pub letters: &'static str,
    pub orders: [usize; 4],
    pub nodes: Vec<NetLabel>,
    /// Nets whose existence the fixed angles do not settle.
    pub uncertain: Vec<NetLabel>,
    pub edges: Vec<(NetLabel, NetLabel)>,
}

fn lab(s: &str) -> NetLabel {
    s.parse().unwrap_or_else(|e| panic!("bad diagram label {s}: {e}"))
}

fn from_pairs(name: &str, letters: &'static str, orders: [usize; 4], pairs: &[(&str, &str)]) -> Diagram {
    let mut nodes: Vec<NetLabel> = Vec::new();
    let mut edges = Vec::new();
    for &(a, b) in pairs {
        let (a, b) = (lab(a), lab(b));
        for x in [&a, &b] {
            if !nodes.contains(x) {
                nodes.push(x.clone());
            }
        }
        edges.push((a, b));
    }
    Diagram { name: name.to_string(), letters, orders, nodes, uncertain: Vec::new(), edges }
}

fn x_ladder(n: usize) -> Diagram {
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    for m in 0..=n {
        nodes.push(lab(&format!("X[{},{}]", m, n - m)));
    }
    for m in 0..n {
        let xp = lab(&format!("X'[{},{}]", m, n - m - 1));
        edges.push((nodes[m].clone(), xp.clone()));
        edges.push((xp.clone(), nodes[m + 1].clone()));
        nodes.push(xp);
    }
    Diagram { name: format!("X ladder n={n}"), letters: "X", orders: [0, 0, 0, n], nodes, uncertain: Vec::new(), edges }
}

pub(crate) fn all_fixed() -> Vec<Diagram> {
    let star = from_pairs(
        "Z'[0,0] star",
        "ZU",
        [0, 1, 0, 1],
        &[
            ("Z'[0,0]", "Z[1,0]"),
            ("Z'[0,0]", "Zbar[0,1]"),
            ("Z'[0,0]", "Z[0,1]"),
            ("Z'[0,0]", "Zbar[1,0]"),
            ("U[1,1]", "Z[1,0]"),
            ("U[1,1]", "Zbar[0,1]"),
            ("Ubar[1,1]", "Z[0,1]"),
            ("Ubar[1,1]", "Zbar[1,0]"),
        ],
    );
    let z11 = from_pairs(
        "Z[1,1] diagram",
        "ZVU",
        [0, 1, 0, 2],
        &[
            ("Z[1,1]", "Z'[1,0]"),
            ("Z[1,1]", "Z'[0,1]"),
            ("Z'[1,0]", "V[2,1]"),
            ("Z'[1,0]", "V'[2,1]"),
            ("Z'[0,1]", "Vbar[2,1]"),
            ("Z'[0,1]", "V'bar[2,1]"),
            ("V[2,1]", "U[2,1]"),
            ("V'[2,1]", "U[2,1]"),
            ("Vbar[2,1]", "Ubar[2,1]"),
            ("V'bar[2,1]", "Ubar[2,1]"),
        ],
    );
    let zp11 = from_pairs(
        "Z'[1,1] diagram",
        "ZVU",
        [0, 1, 0, 3],
        &[
            ("Z'[1,1]", "Z[2,1]"),
            ("Z'[1,1]", "Z[1,2]"),
            ("Z[2,1]", "Z'[2,0]"),
            ("Z[1,2]", "Z'[0,2]"),
            ("Z'[2,0]", "V[3,1]"),
            ("Z'[2,0]", "V'[3,1]"),
            ("Z'[0,2]", "Vbar[3,1]"),
            ("Z'[0,2]", "V'bar[3,1]"),
            ("V[3,1]", "U[3,1]"),
            ("V'[3,1]", "U[3,1]"),
            ("Vbar[3,1]", "Ubar[3,1]"),
            ("V'bar[3,1]", "Ubar[3,1]"),
        ],
    );
    let w22 = from_pairs(
        "W[2,2] diagram",
        "WVU",
        [0, 2, 0, 2],
        &[("W[2,2]", "V[2,2]"), ("W[2,2]", "V'[2,2]"), ("V[2,2]", "U[2,2]"), ("V'[2,2]", "U[2,2]")],
    );
    let mut rs = from_pairs("R[1,1] and S[1,1]", "RSP", [0, 0, 1, 1], &[("R[1,1]", "S[1,1]")]);
    let p = lab("P0 + D15@side2");
    rs.nodes.push(p.clone());
    rs.uncertain.push(p);
    vec![star, z11, zp11, w22, rs]
}

/// The diagram for a vector of corner orders, if one is catalogued.
pub(crate) fn diagram_for(orders: [usize; 4]) -> Option<Diagram> {
    if orders[..3] == [0, 0, 0] && orders[3] >= 1 {
        return Some(x_ladder(orders[3]));
    }
    all_fixed().into_iter().find(|d| d.orders == orders)
}

/// Edges that a digon on a forbidden side of the first net breaks: the net
/// degenerates at the triple intersection instead of crossing it.
pub(crate) fn exclusions() -> Vec<(NetLabel, NetLabel)> {
    [("Z'[1,0]", "V[2,1]"), ("Z'[0,1]", "Vbar[2,1]"), ("S[1,1]", "R[1,1]")]
        .iter()
        .map(|&(a, b)| (lab(a), lab(b)))
        .collect()
}
