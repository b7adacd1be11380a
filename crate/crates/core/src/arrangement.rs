//! Cell structure of the sphere cut by four great circles.
//!
//! Faces are traced counterclockwise as seen from outside the sphere, so
//! every dart has its face on the left.

use crate::vec3::Vec3;

/// Half-edge description of a four-circle arrangement.
#[derive(Clone, Debug)]
pub struct Arrangement {
    /// Vertex positions, unit vectors.
    pub vertices: Vec<Vec3>,
    /// The two circles through each vertex, `i < j`.
    pub vertex_pair: Vec<(usize, usize)>,
    pub origin: Vec<usize>,
    pub colour: Vec<usize>,
    pub next: Vec<usize>,
    pub twin: Vec<usize>,
    pub face: Vec<usize>,
    /// Darts of each face in boundary order.
    pub faces: Vec<Vec<usize>>,
    /// Interior angle (units of π) of the face of each dart at its origin.
    pub angle: Vec<f64>,
}

impl Arrangement {
    /// Traces the arrangement. Returns `None` when two circles coincide or
    /// three of them share a point, i.e. when the vertex set is not the
    /// twelve distinct points of a generic configuration.
    pub fn trace(normals: &[Vec3; 4]) -> Option<Arrangement> {
        let mut vertices = Vec::with_capacity(12);
        let mut vertex_pair = Vec::with_capacity(12);
        for i in 0..4 {
            for j in i + 1..4 {
                let v = normals[i].cross(&normals[j]);
                if v.norm() < 1e-12 {
                    return None;
                }
                let v = v.normalized();
                vertices.push(v);
                vertex_pair.push((i, j));
                vertices.push(-v);
                vertex_pair.push((i, j));
            }
        }
        for a in 0..vertices.len() {
            for b in a + 1..vertices.len() {
                if (vertices[a] - vertices[b]).norm() < 1e-12 {
                    return None;
                }
            }
        }

        let mut origin = Vec::new();
        let mut colour = Vec::new();
        let mut twin = Vec::new();
        let mut target = Vec::new();
        for (c, n) in normals.iter().enumerate() {
            let e1 = n.any_orthogonal();
            let e2 = n.cross(&e1);
            let mut on: Vec<(f64, usize)> = (0..vertices.len())
                .filter(|&v| vertex_pair[v].0 == c || vertex_pair[v].1 == c)
                .map(|v| (vertices[v].dot(&e2).atan2(vertices[v].dot(&e1)), v))
                .collect();
            on.sort_by(|x, y| x.0.total_cmp(&y.0));
            for k in 0..on.len() {
                let u = on[k].1;
                let w = on[(k + 1) % on.len()].1;
                let d = origin.len();
                origin.extend([u, w]);
                target.extend([w, u]);
                colour.extend([c, c]);
                twin.extend([d + 1, d]);
            }
        }

        // Outgoing darts around each vertex, counterclockwise seen from outside.
        let n_darts = origin.len();
        let mut around: Vec<Vec<(f64, usize)>> = vec![Vec::new(); vertices.len()];
        for d in 0..n_darts {
            let v = vertices[origin[d]];
            let t = tangent(&v, &vertices[target[d]]);
            let f1 = v.any_orthogonal();
            let f2 = v.cross(&f1);
            around[origin[d]].push((t.dot(&f2).atan2(t.dot(&f1)), d));
        }
        for list in around.iter_mut() {
            list.sort_by(|x, y| x.0.total_cmp(&y.0));
        }
        let mut next = vec![usize::MAX; n_darts];
        for d in 0..n_darts {
            let list = &around[target[d]];
            let pos = list.iter().position(|&(_, e)| e == twin[d])?;
            next[d] = list[(pos + list.len() - 1) % list.len()].1;
        }

        let mut face = vec![usize::MAX; n_darts];
        let mut faces = Vec::new();
        for d in 0..n_darts {
            if face[d] != usize::MAX {
                continue;
            }
            let mut cyc = Vec::new();
            let mut e = d;
            loop {
                face[e] = faces.len();
                cyc.push(e);
                e = next[e];
                if e == d {
                    break;
                }
                if cyc.len() > n_darts {
                    return None;
                }
            }
            faces.push(cyc);
        }

        let mut angle = vec![0.0; n_darts];
        let mut prev = vec![0; n_darts];
        for d in 0..n_darts {
            prev[next[d]] = d;
        }
        for d in 0..n_darts {
            let v = vertices[origin[d]];
            let out = tangent(&v, &vertices[target[d]]);
            let back = tangent(&v, &vertices[origin[prev[d]]]);
            let mut th = out.cross(&back).dot(&v).atan2(out.dot(&back));
            if th < 0.0 {
                th += 2.0 * std::f64::consts::PI;
            }
            angle[d] = th / std::f64::consts::PI;
        }

        Some(Arrangement { vertices, vertex_pair, origin, colour, next, twin, face, faces, angle })
    }

    /// Area of a face in units of π (spherical excess).
    pub fn face_area(&self, f: usize) -> f64 {
        let darts = &self.faces[f];
        darts.iter().map(|&d| self.angle[d]).sum::<f64>() - (darts.len() as f64 - 2.0)
    }

    /// Sign of each normal at an interior point of the face.
    pub fn face_signs(&self, f: usize, normals: &[Vec3; 4]) -> [i8; 4] {
        let mut c = Vec3::zero();
        for &d in &self.faces[f] {
            c = c + self.vertices[self.origin[d]];
        }
        let mut s = [0i8; 4];
        for i in 0..4 {
            s[i] = if normals[i].dot(&c) > 0.0 { 1 } else { -1 };
        }
        s
    }
}

fn tangent(v: &Vec3, w: &Vec3) -> Vec3 {
    (*w - *v * v.dot(w)).normalized()
}
