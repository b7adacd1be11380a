//! Irreducible triangles `T_n` (integer corner of order `n`) and `E_n`
//! (non-integer corner of order `n`).

use serde::{Deserialize, Serialize};

use super::catalogue::{base_net, Seed};
use super::ops::{extend_side, SideDir};
use crate::error::{Error, Result};
use crate::net::{canonical_code, CanonicalCode, Net};
use crate::partition::P;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TriangleKind {
    T,
    E,
}

/// A triangle net. The inner [`Net`] carries the corners as
/// `[c0, c1, c2, c0]`; only the first three are meaningful.
#[derive(Clone, Debug)]
pub struct TriangleNet {
    pub kind: TriangleKind,
    pub n: usize,
    pub net: Net,
    /// Boundary darts leaving the three corners, counterclockwise.
    pub corners: [usize; 3],
    /// Index into `corners` of the integer corner for `T_n`, or of the
    /// order-`n` corner for `E_n`.
    pub special: usize,
}

impl TriangleNet {
    /// Whether the angle at each corner is integer, i.e. both boundary
    /// edges at it lie on one circle.
    pub fn integer_corners(&self) -> [bool; 3] {
        self.corners.map(|c| self.net.colour(c) == self.net.colour(self.net.prev_boundary(c)))
    }

    /// Integer part of each corner angle.
    pub fn corner_orders(&self) -> [usize; 3] {
        let int = self.integer_corners();
        let mut out = [0; 3];
        for i in 0..3 {
            let s = self.net.sectors(self.corners[i]).len();
            out[i] = if int[i] { s / 2 } else { (s - 1) / 2 };
        }
        out
    }

    /// Length of the face in the first sector at each corner.
    pub fn first_sector_len(&self) -> [usize; 3] {
        self.corners.map(|c| self.net.face_len(c))
    }

    /// True when some interior edge joins the special corner to a lateral
    /// vertex of the opposite side.
    pub fn special_corner_meets_base(&self) -> bool {
        let (vid, _) = self.net.vertex_ids();
        let base_start = self.corners[(self.special + 1) % 3];
        let base_end = vid[self.corners[(self.special + 2) % 3]];
        let mut base = Vec::new();
        let mut e = self.net.boundary_next(base_start);
        while vid[e] != base_end {
            base.push(vid[e]);
            e = self.net.boundary_next(e);
        }
        self.net
            .sectors(self.corners[self.special])
            .iter()
            .any(|&d| self.net.opp(d).is_some() && base.contains(&vid[self.net.next(d)]))
    }

    /// Code rooted at the special corner, so two triangles share it iff they
    /// are isomorphic by an orientation-preserving map fixing that corner.
    pub fn rooted_code(&self) -> CanonicalCode {
        let s = self.special;
        canonical_code(&with_corners(
            &self.net,
            [self.corners[s], self.corners[(s + 1) % 3], self.corners[(s + 2) % 3]],
        ))
    }

    /// Mirror image, the special corner kept.
    pub fn mirrored(&self) -> TriangleNet {
        let net = self.net.mirrored(0);
        // Darts keep their edges; the boundary dart leaving a corner in the
        // mirror runs along the one entering it before.
        let c = self.corners.map(|d| self.net.prev_boundary(d));
        let corners = [c[0], c[2], c[1]];
        let special = [0, 2, 1][self.special];
        TriangleNet { kind: self.kind, n: self.n, net: with_corners(&net, corners), corners, special }
    }
}

fn with_corners(net: &Net, c: [usize; 3]) -> Net {
    let mut n = net.clone();
    n.corners = [c[0], c[1], c[2], c[0]];
    n
}

/// Assembles a triangle whose corners are the colour changes along the
/// boundary plus, for `T_n`, the integer corner at `special_vertex`.
fn finish(kind: TriangleKind, n: usize, net: Net, special_vertex: usize) -> Result<TriangleNet> {
    let (vid, _) = net.vertex_ids();
    let start = (0..net.dart_count())
        .find(|&d| net.is_boundary(d))
        .ok_or_else(|| Error::InvalidNet("closed surface".into()))?;
    let mut found = Vec::new();
    let mut e = start;
    loop {
        if net.colour(e) != net.colour(net.prev_boundary(e)) || vid[e] == special_vertex {
            found.push(e);
        }
        e = net.boundary_next(e);
        if e == start {
            break;
        }
    }
    let corners: [usize; 3] =
        found.try_into().map_err(|v: Vec<usize>| Error::InvalidNet(format!("{} corners", v.len())))?;
    let special =
        corners.iter().position(|&d| vid[d] == special_vertex).ok_or(Error::InvalidNet("lost corner".into()))?;
    Ok(TriangleNet { kind, n, net: with_corners(&net, corners), corners, special })
}

/// Number of distinct variants for each kind.
pub fn triangle_variants(kind: TriangleKind) -> usize {
    match kind {
        TriangleKind::T => 2,
        TriangleKind::E => e1_variants().len(),
    }
}

/// Builds `T_n` or `E_n`. For `T_n` the variant selects whether the
/// integer corner sits one or two edges from the first non-integer corner.
/// For `E_n` it selects the fourth-circle pattern of the sector triangles.
pub fn triangle_net(kind: TriangleKind, n: usize, variant: usize) -> Result<TriangleNet> {
    if n == 0 {
        return Err(Error::InvalidLabel("triangle order must be positive".into()));
    }
    match kind {
        TriangleKind::T => {
            let (host, p, dir) = match variant {
                0 => (base_net(Seed::P0), 0, SideDir::After),
                1 => (base_net(Seed::XPrime00), 1, SideDir::After),
                _ => return Err(Error::UnknownVariant(variant)),
            };
            let q = match dir {
                SideDir::After => (p + 3) % 4,
                SideDir::Before => (p + 1) % 4,
            };
            let grown = extend_side(&host, p, dir, n)?;
            let (vid, _) = grown.vertex_ids();
            let qv = vid[grown.corner_dart(q)];
            let mut drop = vec![false; grown.dart_count()];
            drop[..host.dart_count()].fill(true);
            let (tri, map) = grown.without(&drop);
            let qd = (0..grown.dart_count()).find(|&d| !drop[d] && vid[d] == qv).map(|d| map[d]);
            let qd = qd.ok_or(Error::InvalidNet("integer corner lost".into()))?;
            let (tv, _) = tri.vertex_ids();
            let qv = tv[qd];
            finish(kind, n, tri, qv)
        }
        TriangleKind::E => {
            let (c, start) = *e1_variants().get(variant).ok_or(Error::UnknownVariant(variant))?;
            fan(n, c, start)
        }
    }
}

/// Template vertex used as the fan centre for `E_n`.
fn fan_centre() -> usize {
    P.origin(0)
}

/// Outgoing darts at `v` in counterclockwise order.
fn rays(v: usize) -> Vec<usize> {
    let first = P.darts_at(v)[0];
    let mut out = vec![first];
    let mut d = P.twin(P.prev(first));
    while d != first {
        out.push(d);
        d = P.twin(P.prev(d));
    }
    out
}

/// `2n + 1` consecutive sector triangles at the fan centre, cut off by
/// circle `c`, starting at sector `start`.
fn fan(n: usize, c: usize, start: usize) -> Result<TriangleNet> {
    let v = fan_centre();
    let r = rays(v);
    let sector = |i: usize| {
        let d = r[i % r.len()];
        let barrier = [P.colour(d), P.colour(r[(i + 1) % r.len()]), c];
        Net::from_template_faces(&P.region(P.face(d), &barrier))
    };
    let mut net = sector(start);
    let mut last = 0;
    for i in start + 1..start + 2 * n + 1 {
        let piece = sector(i);
        let ray = P.colour(r[i % r.len()]);
        let mut pairs = Vec::new();
        for y in last..net.dart_count() {
            if !net.is_boundary(y) || net.colour(y) != ray {
                continue;
            }
            let want = P.twin(net.pdart[y]);
            if let Some(z) = (0..piece.dart_count()).find(|&z| piece.pdart[z] == want) {
                pairs.push((y, z));
            }
        }
        if pairs.is_empty() {
            return Err(Error::InvalidNet("sector triangles do not meet".into()));
        }
        last = net.dart_count();
        net = net.glue(&piece, &pairs);
    }
    let (vid, _) = net.vertex_ids();
    let centre = (0..net.dart_count())
        .find(|&d| P.origin(net.pdart[d]) == v)
        .map(|d| vid[d])
        .ok_or(Error::InvalidNet("fan centre lost".into()))?;
    finish(TriangleKind::E, n, net, centre)
}

/// `(circle, start sector)` pairs giving pairwise distinct `E_1` nets.
fn e1_variants() -> Vec<(usize, usize)> {
    let v = fan_centre();
    let through: Vec<usize> = rays(v).iter().map(|&d| P.colour(d)).collect();
    let mut seen = Vec::new();
    let mut out = Vec::new();
    for c in (0..4).filter(|c| !through.contains(c)) {
        for start in 0..4 {
            if let Ok(t) = fan(1, c, start) {
                let code = t.rooted_code();
                if !seen.contains(&code) {
                    seen.push(code);
                    out.push((c, start));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_nets_have_integer_corner_on_base() {
        for variant in 0..2 {
            for n in 1..5 {
                let t = triangle_net(TriangleKind::T, n, variant).unwrap();
                assert_eq!(t.corner_orders()[t.special], n);
                assert!(t.integer_corners()[t.special]);
                assert!(t.special_corner_meets_base());
                let others: Vec<usize> = (0..3).filter(|&i| i != t.special).map(|i| t.first_sector_len()[i]).collect();
                assert_eq!(others[0] == others[1], n % 2 == 1, "T_{n} variant {variant}");
            }
        }
    }

    #[test]
    fn e_nets() {
        assert_eq!(triangle_variants(TriangleKind::E), 4);
        for variant in 0..4 {
            for n in 1..4 {
                let t = triangle_net(TriangleKind::E, n, variant).unwrap();
                assert_eq!(t.corner_orders()[t.special], n);
                assert!(!t.integer_corners()[t.special]);
            }
        }
        assert!(matches!(triangle_net(TriangleKind::E, 1, 9), Err(Error::UnknownVariant(9))));
    }

    #[test]
    fn e1_variants_close_under_reflection() {
        let codes: Vec<_> = (0..4).map(|v| triangle_net(TriangleKind::E, 1, v).unwrap().rooted_code()).collect();
        let mut self_mirror = 0;
        for v in 0..4 {
            let m = triangle_net(TriangleKind::E, 1, v).unwrap().mirrored().rooted_code();
            let at = codes.iter().position(|c| *c == m).expect("mirror is a variant");
            if at == v {
                self_mirror += 1;
            }
        }
        assert_eq!(self_mirror, 2);
    }
}
