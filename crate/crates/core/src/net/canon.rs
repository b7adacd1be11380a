//! Canonical dart encodings and isomorphism.
//!
//! A breadth-first walk from a root dart numbers all darts; the encoding
//! lists `next`, `opp` and the colour (renamed by first appearance) of each
//! numbered dart, followed by the numbers of the four corner darts.

use std::collections::VecDeque;

use super::Net;

pub type CanonicalCode = Vec<u32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoMode {
    /// Corner labels `a_j` must map to `a_j`.
    Labeled,
    /// Corner labels may be moved by any symmetry of the square.
    Unlabeled,
}

/// Witness of an isomorphism `n1 → n2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    /// Image in `n2` of every dart of `n1`; for a mirrored match the image
    /// is the dart running along the same edge.
    pub darts: Vec<usize>,
    /// Corner `a_j` of `n1` goes to corner `a_{(rotation ± j) mod 4}` of `n2`.
    pub rotation: usize,
    pub mirrored: bool,
}

fn numbering(net: &Net, root: usize) -> Option<Vec<usize>> {
    let n = net.dart_count();
    let mut order = Vec::with_capacity(n);
    let mut idx = vec![usize::MAX; n];
    let mut q = VecDeque::new();
    idx[root] = 0;
    q.push_back(root);
    while let Some(d) = q.pop_front() {
        order.push(d);
        let nb = [Some(net.next(d)), net.opp(d)];
        for e in nb.into_iter().flatten() {
            if idx[e] == usize::MAX {
                idx[e] = order.len() + q.len();
                q.push_back(e);
            }
        }
    }
    (order.len() == n).then_some(order)
}

fn encode(net: &Net, order: &[usize]) -> CanonicalCode {
    let n = net.dart_count();
    let mut idx = vec![0u32; n];
    for (i, &d) in order.iter().enumerate() {
        idx[d] = i as u32;
    }
    let mut rename = [u32::MAX; 8];
    let mut fresh = 0;
    let mut code = Vec::with_capacity(3 * n + 5);
    code.push(n as u32);
    for &d in order {
        code.push(idx[net.next(d)]);
        code.push(net.opp(d).map_or(u32::MAX, |o| idx[o]));
        let c = net.colour(d).min(7);
        if rename[c] == u32::MAX {
            rename[c] = fresh;
            fresh += 1;
        }
        code.push(rename[c]);
    }
    for j in 0..4 {
        code.push(idx[net.corner_dart(j)]);
    }
    code
}

/// Labelled canonical code: the root is the first dart of side `s_0`.
pub fn canonical_code(net: &Net) -> CanonicalCode {
    match numbering(net, net.corner_dart(0)) {
        Some(order) => encode(net, &order),
        None => vec![u32::MAX],
    }
}

/// Code invariant under the symmetries of the square acting on labels.
pub fn unlabeled_code(net: &Net) -> CanonicalCode {
    candidates(net).into_iter().map(|(code, _, _, _)| code).min().unwrap_or_default()
}

fn candidates(net: &Net) -> Vec<(CanonicalCode, Net, usize, bool)> {
    let mut out = Vec::new();
    let mirror = net.mirrored(0);
    for (m, base) in [(false, net), (true, &mirror)] {
        for r in 0..4 {
            let rot = base.rotated(r);
            out.push((canonical_code(&rot), rot, r, m));
        }
    }
    out
}

/// Decides isomorphism and returns a dart bijection when one exists.
pub fn is_isomorphic(n1: &Net, n2: &Net, mode: IsoMode) -> Option<Isomorphism> {
    if n1.dart_count() != n2.dart_count() {
        return None;
    }
    let target = canonical_code(n2);
    let order2 = numbering(n2, n2.corner_dart(0))?;
    let tries: Vec<(CanonicalCode, Net, usize, bool)> = match mode {
        IsoMode::Labeled => vec![(canonical_code(n1), n1.clone(), 0, false)],
        IsoMode::Unlabeled => candidates(n1),
    };
    for (code, variant, r, m) in tries {
        if code == target {
            let order1 = numbering(&variant, variant.corner_dart(0))?;
            let mut darts = vec![0; n1.dart_count()];
            for (a, b) in order1.iter().zip(order2.iter()) {
                darts[*a] = *b;
            }
            return Some(Isomorphism { darts, rotation: (4 - r) % 4, mirrored: m });
        }
    }
    None
}
