//! Nets: coloured half-edge complexes covering the four-circle partition.
//!
//! A dart has its face on the left. `next` walks a face counterclockwise,
//! `opp` pairs the two darts of an interior edge and is `None` on the
//! boundary. Built nets also record, for each dart, the template dart of
//! [`crate::partition::P`] it maps to.

mod arcs;
mod canon;
mod io;
mod svg;
mod validate;

pub use arcs::{decompose_arcs, Arc, ArcClass, ArcDecomposition, ArcEnd};
pub use canon::{canonical_code, is_isomorphic, unlabeled_code, CanonicalCode, IsoMode, Isomorphism};
pub use io::{NetJson, VertexTypeJson};
pub use svg::render_net_svg;
pub use validate::{validate_net, ValidationReport, Violation};

use crate::error::{Error, Result};
use crate::partition::P;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Net {
    pub(crate) next: Vec<usize>,
    pub(crate) prev: Vec<usize>,
    pub(crate) opp: Vec<Option<usize>>,
    pub(crate) colour: Vec<usize>,
    /// Template dart under each dart; empty for nets read from JSON until
    /// [`Net::develop`] succeeds.
    pub(crate) pdart: Vec<usize>,
    /// Boundary dart leaving corner `a_j`, i.e. the first dart of side `s_j`.
    pub(crate) corners: [usize; 4],
}

/// Structural kind of a vertex, derived from the boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexKind {
    Corner(usize),
    Lateral,
    Interior,
}

impl Net {
    /// Assembles a net from raw permutations. No validation happens here.
    pub fn from_parts(
        next: Vec<usize>,
        opp: Vec<Option<usize>>,
        colour: Vec<usize>,
        pdart: Vec<usize>,
        corners: [usize; 4],
    ) -> Result<Net> {
        let n = next.len();
        if opp.len() != n || colour.len() != n || (!pdart.is_empty() && pdart.len() != n) {
            return Err(Error::InvalidNet("array lengths differ".into()));
        }
        let mut prev = vec![usize::MAX; n];
        for (d, &e) in next.iter().enumerate() {
            if e >= n || prev[e] != usize::MAX {
                return Err(Error::InvalidNet("next is not a permutation".into()));
            }
            prev[e] = d;
        }
        for (d, o) in opp.iter().enumerate() {
            if let Some(o) = *o {
                if o >= n || o == d || opp[o] != Some(d) {
                    return Err(Error::InvalidNet("opp is not an involution".into()));
                }
            }
        }
        if corners.iter().any(|&c| c >= n) {
            return Err(Error::InvalidNet("corner dart out of range".into()));
        }
        Ok(Net { next, prev, opp, colour, pdart, corners })
    }

    /// Net made of the given template faces, glued wherever the template
    /// glues them. Corners are left at dart 0 and must be set by the caller.
    pub(crate) fn from_template_faces(faces: &[usize]) -> Net {
        let mut index = vec![usize::MAX; crate::partition::DARTS];
        let mut pdart = Vec::new();
        for &f in faces {
            for &d in P.face_darts(f) {
                index[d] = pdart.len();
                pdart.push(d);
            }
        }
        let next = pdart.iter().map(|&d| index[P.next(d)]).collect::<Vec<_>>();
        let opp = pdart
            .iter()
            .map(|&d| {
                let t = index[P.twin(d)];
                (t != usize::MAX).then_some(t)
            })
            .collect();
        let colour = pdart.iter().map(|&d| P.colour(d)).collect();
        let mut prev = vec![0; next.len()];
        for (d, &e) in next.iter().enumerate() {
            prev[e] = d;
        }
        Net { next, prev, opp, colour, pdart, corners: [0; 4] }
    }

    pub fn dart_count(&self) -> usize {
        self.next.len()
    }
    pub fn next(&self, d: usize) -> usize {
        self.next[d]
    }
    pub fn prev(&self, d: usize) -> usize {
        self.prev[d]
    }
    pub fn opp(&self, d: usize) -> Option<usize> {
        self.opp[d]
    }
    pub fn colour(&self, d: usize) -> usize {
        self.colour[d]
    }
    pub fn pdart(&self, d: usize) -> Option<usize> {
        self.pdart.get(d).copied()
    }
    pub fn corner_dart(&self, j: usize) -> usize {
        self.corners[j % 4]
    }
    pub fn corners(&self) -> [usize; 4] {
        self.corners
    }
    pub fn is_boundary(&self, d: usize) -> bool {
        self.opp[d].is_none()
    }
    pub fn edge_count(&self) -> usize {
        let interior = self.opp.iter().filter(|o| o.is_some()).count();
        interior / 2 + (self.dart_count() - interior)
    }

    /// Dart cycles of the faces, in order of their smallest dart.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.dart_count()];
        let mut out = Vec::new();
        for d in 0..self.dart_count() {
            if seen[d] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut e = d;
            while !seen[e] {
                seen[e] = true;
                cyc.push(e);
                e = self.next[e];
            }
            out.push(cyc);
        }
        out
    }

    pub fn face_len(&self, d: usize) -> usize {
        let mut n = 1;
        let mut e = self.next[d];
        while e != d {
            n += 1;
            e = self.next[e];
            if n > self.dart_count() {
                break;
            }
        }
        n
    }

    /// Vertex id of the origin of every dart, and the vertex count.
    pub fn vertex_ids(&self) -> (Vec<usize>, usize) {
        let n = self.dart_count();
        let mut uf: Vec<usize> = (0..n).collect();
        fn find(uf: &mut [usize], mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        for d in 0..n {
            if let Some(o) = self.opp[d] {
                let a = find(&mut uf, self.next[d]);
                let b = find(&mut uf, o);
                uf[a] = b;
            }
        }
        let mut id = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut count = 0;
        for d in 0..n {
            let r = find(&mut uf, d);
            if id[r] == usize::MAX {
                id[r] = count;
                count += 1;
            }
            out[d] = id[r];
        }
        (out, count)
    }

    /// Boundary dart leaving the origin of `x`, if that vertex is on the
    /// boundary.
    pub fn outgoing_boundary(&self, x: usize) -> Option<usize> {
        let mut e = x;
        for _ in 0..=self.dart_count() {
            match self.opp[e] {
                None => return Some(e),
                Some(o) => e = self.next[o],
            }
            if e == x {
                return None;
            }
        }
        None
    }

    /// Boundary dart following the boundary dart `d`.
    pub fn boundary_next(&self, d: usize) -> usize {
        let mut e = self.next[d];
        while let Some(o) = self.opp[e] {
            e = self.next[o];
        }
        e
    }

    /// Boundary darts in counterclockwise order starting at corner `a0`.
    pub fn boundary_cycle(&self) -> Vec<usize> {
        let start = self.corners[0];
        let mut out = vec![start];
        let mut e = self.boundary_next(start);
        while e != start && out.len() <= self.dart_count() {
            out.push(e);
            e = self.boundary_next(e);
        }
        out
    }

    /// Darts leaving the origin of `x`, one per face sector, ordered so that
    /// a boundary vertex starts with its outgoing boundary dart.
    pub fn sectors(&self, x: usize) -> Vec<usize> {
        let start = self.outgoing_boundary(x).unwrap_or(x);
        let mut out = vec![start];
        let mut e = start;
        loop {
            match self.opp[self.prev[e]] {
                None => break,
                Some(o) => {
                    if o == start || out.len() > self.dart_count() {
                        break;
                    }
                    out.push(o);
                    e = o;
                }
            }
        }
        out
    }

    /// Number of edges at the origin of `x`.
    pub fn degree(&self, x: usize) -> usize {
        let s = self.sectors(x).len();
        if self.outgoing_boundary(x).is_some() {
            s + 1
        } else {
            s
        }
    }

    /// Darts of side `s_j`, from `a_j` to `a_{j+1}`.
    pub fn side(&self, j: usize) -> Vec<usize> {
        let (vid, _) = self.vertex_ids();
        let end = vid[self.corners[(j + 1) % 4]];
        let mut out = vec![self.corners[j % 4]];
        let mut e = self.corners[j % 4];
        loop {
            let f = self.next[e];
            if vid[f] == end || out.len() > self.dart_count() {
                break;
            }
            e = self.boundary_next(e);
            out.push(e);
        }
        out
    }

    pub fn side_colour(&self, j: usize) -> usize {
        self.colour[self.corners[j % 4]]
    }

    /// Integer parts of the four corner angles.
    pub fn corner_orders(&self) -> [usize; 4] {
        let mut o = [0; 4];
        for (j, oj) in o.iter_mut().enumerate() {
            *oj = self.sectors(self.corners[j]).len().saturating_sub(1) / 2;
        }
        o
    }

    pub fn side_orders(&self) -> [usize; 4] {
        let mut o = [0; 4];
        for (j, oj) in o.iter_mut().enumerate() {
            *oj = self.side(j).len();
        }
        o
    }

    /// Structural vertex kinds indexed by vertex id.
    pub fn vertex_kinds(&self) -> Vec<VertexKind> {
        let (vid, nv) = self.vertex_ids();
        let mut kinds = vec![VertexKind::Interior; nv];
        for d in 0..self.dart_count() {
            if self.opp[d].is_none() {
                kinds[vid[d]] = VertexKind::Lateral;
            }
        }
        for (j, &c) in self.corners.iter().enumerate() {
            kinds[vid[c]] = VertexKind::Corner(j);
        }
        kinds
    }

    /// Bit `j` is set when the first sector at `a_j` is a triangle, i.e.
    /// the fixed angle at that corner is the complement of its fractional
    /// part.
    pub fn complement_mask(&self) -> u8 {
        let mut m = 0;
        for j in 0..4 {
            if self.face_len(self.corners[j]) == 3 {
                m |= 1 << j;
            }
        }
        m
    }

    /// Copy with corners re-anchored at the boundary darts leaving the
    /// origins of `anchors`.
    pub(crate) fn anchored(mut self, anchors: [usize; 4]) -> Result<Net> {
        for j in 0..4 {
            self.corners[j] = self
                .outgoing_boundary(anchors[j])
                .ok_or_else(|| Error::InvalidNet("corner anchor is interior".into()))?;
        }
        Ok(self)
    }

    /// Same net with corner labels rotated: new `a_j` is old `a_{j+r}`.
    pub fn rotated(&self, r: usize) -> Net {
        let mut n = self.clone();
        for j in 0..4 {
            n.corners[j] = self.corners[(j + r) % 4];
        }
        n
    }

    /// Disjoint union with `other`, then each `(x, y)` pair glued, `x` a
    /// boundary dart of `self` and `y` one of `other`.
    pub(crate) fn glue(&self, other: &Net, pairs: &[(usize, usize)]) -> Net {
        let off = self.dart_count();
        let mut next = self.next.clone();
        next.extend(other.next.iter().map(|&d| d + off));
        let mut opp = self.opp.clone();
        opp.extend(other.opp.iter().map(|o| o.map(|d| d + off)));
        let mut colour = self.colour.clone();
        colour.extend(other.colour.iter().copied());
        let mut pdart = self.pdart.clone();
        pdart.extend(other.pdart.iter().copied());
        for &(x, y) in pairs {
            debug_assert!(opp[x].is_none() && opp[y + off].is_none());
            opp[x] = Some(y + off);
            opp[y + off] = Some(x);
        }
        let mut prev = vec![0; next.len()];
        for (d, &e) in next.iter().enumerate() {
            prev[e] = d;
        }
        Net { next, prev, opp, colour, pdart, corners: self.corners }
    }

    /// Net with the darts in `drop` removed; returns the index map.
    pub(crate) fn without(&self, drop: &[bool]) -> (Net, Vec<usize>) {
        let mut map = vec![usize::MAX; self.dart_count()];
        let mut k = 0;
        for d in 0..self.dart_count() {
            if !drop[d] {
                map[d] = k;
                k += 1;
            }
        }
        let keep: Vec<usize> = (0..self.dart_count()).filter(|&d| !drop[d]).collect();
        let next: Vec<usize> = keep.iter().map(|&d| map[self.next[d]]).collect();
        let opp = keep.iter().map(|&d| self.opp[d].and_then(|o| (map[o] != usize::MAX).then(|| map[o]))).collect();
        let colour = keep.iter().map(|&d| self.colour[d]).collect();
        let pdart = if self.pdart.is_empty() { Vec::new() } else { keep.iter().map(|&d| self.pdart[d]).collect() };
        let mut prev = vec![0; next.len()];
        for (d, &e) in next.iter().enumerate() {
            prev[e] = d;
        }
        let corners = self.corners.map(|c| if map[c] == usize::MAX { 0 } else { map[c] });
        (Net { next, prev, opp, colour, pdart, corners }, map)
    }

    /// Mirror image. Every dart is replaced by its reverse in the same face;
    /// corner `a_j` of the mirror is corner `a_{(fix - j) mod 4}` of `self`,
    /// so `fix = 0` keeps `a0, a2` and `fix = 2` keeps `a1, a3`. Template
    /// labels are recomputed by [`Net::develop`].
    pub fn mirrored(&self, fix: usize) -> Net {
        // Dart d of the mirror runs along the edge of d, reversed, in the
        // same face; faces are then walked the other way round.
        let next = self.prev.clone();
        let opp = self.opp.clone();
        let colour = self.colour.clone();
        let n = self.dart_count();
        let mut prev = vec![0; n];
        for (d, &e) in next.iter().enumerate() {
            prev[e] = d;
        }
        // The reversed dart on edge e leaves the head of e. The boundary dart
        // leaving corner a_j in the mirror runs along the edge of the boundary
        // dart entering that corner in the original.
        let mut corners = [0; 4];
        for j in 0..4 {
            let src = (fix + 4 - j) % 4;
            corners[j] = self.prev_boundary(self.corners[src]);
        }
        let mut m = Net { next, prev, opp, colour, pdart: Vec::new(), corners };
        if !self.pdart.is_empty() {
            m.develop();
        }
        m
    }

    /// Boundary dart preceding the boundary dart `d`.
    pub fn prev_boundary(&self, d: usize) -> usize {
        let mut e = self.prev[d];
        while let Some(o) = self.opp[e] {
            e = self.prev[o];
        }
        e
    }

    /// Tries to label every dart by a template dart so that faces, gluings
    /// and colours are respected up to one colour permutation. On success
    /// colours are replaced by the template colours.
    pub fn develop(&mut self) -> bool {
        let n = self.dart_count();
        if n == 0 {
            return false;
        }
        for root in 0..crate::partition::DARTS {
            let mut lab = vec![usize::MAX; n];
            let mut perm = [usize::MAX; 4];
            lab[0] = root;
            let mut stack = vec![0];
            let mut ok = true;
            'bfs: while let Some(d) = stack.pop() {
                let p = lab[d];
                let c = self.colour[d];
                if c >= 4 || (perm[c] != usize::MAX && perm[c] != P.colour(p)) {
                    ok = false;
                    break;
                }
                perm[c] = P.colour(p);
                let mut nb = vec![(self.next[d], P.next(p)), (self.prev[d], P.prev(p))];
                if let Some(o) = self.opp[d] {
                    nb.push((o, P.twin(p)));
                }
                for (e, q) in nb {
                    if lab[e] == usize::MAX {
                        lab[e] = q;
                        stack.push(e);
                    } else if lab[e] != q {
                        ok = false;
                        break 'bfs;
                    }
                }
            }
            if ok && lab.iter().all(|&l| l != usize::MAX) {
                let mut used = [false; 4];
                if perm.iter().all(|&c| c == usize::MAX || !std::mem::replace(&mut used[c], true)) {
                    self.colour = lab.iter().map(|&p| P.colour(p)).collect();
                    self.pdart = lab;
                    return true;
                }
            }
        }
        false
    }

    /// Counts of vertices, edges and faces.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.vertex_ids().1, self.edge_count(), self.faces().len())
    }
}
