//! Gluing operations on nets: side extension, `P_μ` insertion and digons.

use crate::error::{Error, Result};
use crate::net::Net;
use crate::partition::{FACES, P};

/// Position of the extended side `L` relative to its corner `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideDir {
    /// `L` is `s_{p-1}`, the side ending at `a_p`.
    Before,
    /// `L` is `s_p`, the side starting at `a_p`.
    After,
}

fn pd(net: &Net, d: usize) -> Result<usize> {
    net.pdart(d).ok_or_else(|| Error::InvalidNet("net has no template labels".into()))
}

/// Glues the template region `faces` across the boundary path `path`.
/// Returns the glued net, corners not yet re-anchored, and the region.
fn glue_region(net: &Net, path: &[usize], faces: &[usize]) -> Result<(Net, Net)> {
    let piece = Net::from_template_faces(faces);
    let mut pairs = Vec::with_capacity(path.len());
    for &y in path {
        let want = P.twin(pd(net, y)?);
        let z = (0..piece.dart_count())
            .find(|&z| piece.pdart[z] == want && piece.is_boundary(z))
            .ok_or_else(|| Error::InvalidNet("region does not match the path".into()))?;
        pairs.push((y, z));
    }
    Ok((net.glue(&piece, &pairs), piece))
}

/// Extends side `L` of `net` beyond its corner `a_p` by a triangle `T_n`.
pub fn extend_side(net: &Net, p: usize, l: SideDir, n: usize) -> Result<Net> {
    let mut cur = net.clone();
    for _ in 0..n {
        cur = extend_once(&cur, p % 4, l)?;
    }
    Ok(cur)
}

fn extend_once(net: &Net, p: usize, l: SideDir) -> Result<Net> {
    if net.corner_orders()[p] != 0 {
        return Err(Error::NotOrderZero(p));
    }
    let (m_idx, l_idx) = match l {
        SideDir::After => ((p + 3) % 4, p),
        SideDir::Before => (p, (p + 3) % 4),
    };
    let m = net.side(m_idx);
    if m.len() > 2 {
        return Err(Error::SideTooLong(m_idx));
    }
    let x = match l {
        SideDir::After => *m.last().unwrap(),
        SideDir::Before => m[0],
    };
    let cm = net.colour(x);
    let cl = net.side_colour(l_idx);
    let lune = P.region(P.face(P.twin(pd(net, x)?)), &[cm, cl]);
    let off = net.dart_count();
    let (glued, piece) = glue_region(net, &m, &lune)?;

    let pv = P.origin(pd(net, net.corner_dart(p))?);
    let target = P.antipode[pv];
    let z = (0..piece.dart_count())
        .find(|&z| P.origin(piece.pdart[z]) == target)
        .ok_or_else(|| Error::InvalidNet("lune lacks the antipodal corner".into()))?;
    let mut anchors = net.corners();
    anchors[p] = z + off;
    glued.anchored(anchors)
}

/// Replaces `μ` times a quadrilateral face touching two opposite corners
/// by a copy of `P_1`.
pub fn insert_pmu(net: &Net, mu: usize) -> Result<Net> {
    let mut cur = net.clone();
    for _ in 0..mu {
        cur = insert_p1(&cur)?;
    }
    Ok(cur)
}

/// Face darts `g0..g3` of a quadrilateral whose vertices `g0` and `g2`
/// are opposite corners.
fn eligible_face(net: &Net) -> Option<[usize; 4]> {
    let (vid, _) = net.vertex_ids();
    let cv: Vec<usize> = net.corners().iter().map(|&c| vid[c]).collect();
    let corner_of = |v: usize| cv.iter().position(|&c| c == v);
    for face in net.faces() {
        if face.len() != 4 {
            continue;
        }
        for i in 0..2 {
            if let (Some(a), Some(b)) = (corner_of(vid[face[i]]), corner_of(vid[face[i + 2]])) {
                if (a + 2) % 4 == b {
                    return Some([face[i], face[i + 1], face[i + 2], face[(i + 3) % 4]]);
                }
            }
        }
    }
    None
}

fn insert_p1(net: &Net) -> Result<Net> {
    let g = eligible_face(net).ok_or(Error::NoEligibleFace)?;
    let d = [pd(net, g[0])?, pd(net, g[1])?, pd(net, g[2])?, pd(net, g[3])?];
    let f = P.face(d[0]);
    let p1 = p1_piece(f, d);
    let boundary_with = |pdart: usize| {
        (0..p1.dart_count())
            .find(|&z| p1.is_boundary(z) && p1.pdart[z] == pdart)
            .expect("P_1 boundary carries the face darts")
    };

    let mut drop = vec![false; net.dart_count()];
    for &x in &g {
        drop[x] = true;
    }
    let (host, map) = net.without(&drop);
    let off = host.dart_count();
    let mut pairs = Vec::new();
    for (i, &x) in g.iter().enumerate() {
        if let Some(o) = net.opp(x) {
            pairs.push((map[o], boundary_with(d[i])));
        }
    }
    let glued = host.glue(&p1, &pairs);
    let mut anchors = [0; 4];
    for (j, a) in anchors.iter_mut().enumerate() {
        let c = net.corner_dart(j);
        *a = match g.iter().position(|&x| x == c) {
            Some(i) => off + boundary_with(d[i]),
            None => map[c],
        };
    }
    glued.anchored(anchors)
}

/// `P_1` over the template face `f` with darts `d`: the sphere minus `f`,
/// with two copies of `f` glued along the edges at `d[1]`'s origin and at
/// `d[3]`'s origin. Its boundary darts carry the labels `d`.
fn p1_piece(f: usize, d: [usize; 4]) -> Net {
    let rest: Vec<usize> = (0..FACES).filter(|&g| g != f).collect();
    let sphere = Net::from_template_faces(&rest);
    let face = Net::from_template_faces(&[f]);
    let find = |n: &Net, pdart: usize| (0..n.dart_count()).find(|&z| n.pdart[z] == pdart && n.is_boundary(z)).unwrap();
    let pairs: Vec<(usize, usize)> = [d[0], d[1]].iter().map(|&x| (find(&sphere, P.twin(x)), find(&face, x))).collect();
    let s1 = sphere.glue(&face, &pairs);
    let pairs: Vec<(usize, usize)> = [d[2], d[3]].iter().map(|&x| (find(&s1, P.twin(x)), find(&face, x))).collect();
    s1.glue(&face, &pairs)
}

/// Attaches `k` hemispheres in turn to side `s_j`.
pub fn attach_digon(net: &Net, j: usize, k: usize) -> Result<Net> {
    let j = j % 4;
    let mut cur = net.clone();
    for _ in 0..k {
        let side = cur.side(j);
        let r = side.len();
        if r >= 6 {
            return Err(Error::LongSide(j));
        }
        if r.is_multiple_of(3) {
            return Err(Error::ForbiddenSide(j));
        }
        let c = cur.colour(side[0]);
        let hemi = P.region(P.face(P.twin(pd(&cur, side[0])?)), &[c]);
        let (glued, _) = glue_region(&cur, &side, &hemi)?;
        cur = glued.anchored(cur.corners())?;
    }
    Ok(cur)
}

/// Finds the four corners of a net from colour changes along the boundary
/// and labels them so that corner orders equal `orders` and, if given, the
/// complement mask equals `mask`.
pub(crate) fn label_corners(net: Net, orders: [usize; 4], mask: Option<u8>) -> Result<Net> {
    let start = (0..net.dart_count())
        .find(|&d| net.is_boundary(d))
        .ok_or_else(|| Error::InvalidNet("closed surface".into()))?;
    let mut found = Vec::new();
    let mut e = start;
    loop {
        if net.colour(e) != net.colour(net.prev_boundary(e)) {
            found.push(e);
        }
        e = net.boundary_next(e);
        if e == start {
            break;
        }
    }
    if found.len() != 4 {
        return Err(Error::InvalidNet(format!("{} corners on the boundary", found.len())));
    }
    for r in 0..4 {
        let anchors = [found[r], found[(r + 1) % 4], found[(r + 2) % 4], found[(r + 3) % 4]];
        let cand = net.clone().anchored(anchors)?;
        if cand.corner_orders() == orders && mask.is_none_or(|m| cand.complement_mask() == m) {
            return Ok(cand);
        }
    }
    Err(Error::InvalidNet("no corner labelling matches".into()))
}
