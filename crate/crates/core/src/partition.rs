//! The fixed combinatorial model of a generic four-circle partition.
//!
//! All generic configurations share the cuboctahedral combinatorics, so
//! nets carry labels into one template traced from the cube diagonals.

use once_cell::sync::Lazy;

use crate::arrangement::Arrangement;
use crate::vec3::Vec3;

pub const DARTS: usize = 48;
pub const FACES: usize = 14;
pub const VERTICES: usize = 12;

/// Template partition; dart ids are stable for the process lifetime.
pub struct Partition {
    pub arr: Arrangement,
    pub prev: Vec<usize>,
    /// Antipodal vertex.
    pub antipode: Vec<usize>,
}

pub static P: Lazy<Partition> = Lazy::new(|| {
    let normals = template_normals();
    let arr = Arrangement::trace(&normals).expect("template arrangement is generic");
    let mut prev = vec![0; arr.next.len()];
    for d in 0..arr.next.len() {
        prev[arr.next[d]] = d;
    }
    let antipode = (0..arr.vertices.len())
        .map(|v| {
            (0..arr.vertices.len())
                .find(|&w| (arr.vertices[v] + arr.vertices[w]).norm() < 1e-9)
                .expect("antipode present")
        })
        .collect();
    Partition { arr, prev, antipode }
});

pub fn template_normals() -> [Vec3; 4] {
    [
        Vec3::new(1.0, 1.0, 1.0).normalized(),
        Vec3::new(1.0, -1.0, 1.0).normalized(),
        Vec3::new(-1.0, -1.0, 1.0).normalized(),
        Vec3::new(-1.0, 1.0, 1.0).normalized(),
    ]
}

impl Partition {
    pub fn next(&self, d: usize) -> usize {
        self.arr.next[d]
    }
    pub fn prev(&self, d: usize) -> usize {
        self.prev[d]
    }
    pub fn twin(&self, d: usize) -> usize {
        self.arr.twin[d]
    }
    pub fn colour(&self, d: usize) -> usize {
        self.arr.colour[d]
    }
    pub fn face(&self, d: usize) -> usize {
        self.arr.face[d]
    }
    pub fn origin(&self, d: usize) -> usize {
        self.arr.origin[d]
    }
    pub fn face_len(&self, f: usize) -> usize {
        self.arr.faces[f].len()
    }
    pub fn face_darts(&self, f: usize) -> &[usize] {
        &self.arr.faces[f]
    }

    /// Faces reachable from `start` without crossing an edge whose colour is
    /// in `barrier`.
    pub fn region(&self, start: usize, barrier: &[usize]) -> Vec<usize> {
        let mut seen = [false; FACES];
        let mut stack = vec![start];
        seen[start] = true;
        let mut out = Vec::new();
        while let Some(f) = stack.pop() {
            out.push(f);
            for &d in self.face_darts(f) {
                if barrier.contains(&self.colour(d)) {
                    continue;
                }
                let g = self.face(self.twin(d));
                if !seen[g] {
                    seen[g] = true;
                    stack.push(g);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Outgoing darts at a vertex.
    pub fn darts_at(&self, v: usize) -> Vec<usize> {
        (0..DARTS).filter(|&d| self.origin(d) == v).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lunes_and_hemispheres() {
        for d in 0..DARTS {
            let f = P.face(d);
            let hemi = P.region(f, &[P.colour(d)]);
            assert_eq!(hemi.len(), 7);
            let other = P.colour(P.next(d));
            assert!(P.region(f, &[P.colour(d), other]).len() < 7);
        }
    }

    #[test]
    fn antipode_is_involution() {
        for v in 0..VERTICES {
            assert_ne!(P.antipode[v], v);
            assert_eq!(P.antipode[P.antipode[v]], v);
        }
    }
}
