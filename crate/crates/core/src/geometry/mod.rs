//! Four great circles with prescribed angles at a quadrilateral face.
//!
//! Circles are stored by normals. Realization works with the inward
//! normals `m_i` of the fixed face `F = {x : m_i·x > 0 for all i}`, whose
//! interior angles satisfy `cos(π θ) = -m_i·m_{i+1}`. The same identity at
//! the vertex `C1 ∩ C3` of the bottom triangle gives `m1·m3 = -cos(π e)`,
//! and at `C2 ∩ C4` of the left triangle `m2·m4 = -cos(π z)`.

mod svg;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

pub use svg::render_config_svg;

use crate::angles::{degeneration_report, Direction, Scalar};
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::vec3::{det3, Vec3};

/// Dot products this close to ±1 mean parallel circles.
pub const PARALLEL_TOL: f64 = 1e-12;
/// Faces with smaller area (units of π) count as contracted.
pub const AREA_TOL: f64 = 1e-8;
/// Default tolerance on `det[n_i, n_j, n_k]` for triple points.
pub const TRIPLE_TOL: f64 = 1e-9;
/// Agreement required between requested and realized angles.
pub const MATCH_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GreatCircle {
    pub normal: Vec3,
}

impl GreatCircle {
    pub fn new(normal: Vec3) -> Result<GreatCircle> {
        let n = normal.norm();
        if n.is_nan() || n <= 1e-300 || !n.is_finite() {
            return Err(Error::DegenerateConfig("zero normal".into()));
        }
        Ok(GreatCircle { normal: normal * (1.0 / n) })
    }
}

/// Angle between two circles in units of `π`, in `(0, 1/2]`.
pub fn angle_between(c1: &GreatCircle, c2: &GreatCircle) -> Result<f64> {
    let d = c1.normal.dot(&c2.normal).abs();
    if d >= 1.0 - PARALLEL_TOL {
        return Err(Error::ParallelCircles);
    }
    Ok(d.acos() / PI)
}

/// Angles of the fixed face and the two "fifth" angles, in units of `π`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FaceAngles {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    /// Angle at `C1 ∩ C3` of the triangles below and above `F`.
    pub e: f64,
    /// Angle at `C2 ∩ C4` of the triangles left and right of `F`.
    pub z: f64,
}

impl FaceAngles {
    pub fn abcd(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

/// Areas (units of `π`) of `F` and the four triangles sharing a side with
/// it. Bottom lies across the side on `C2`, top across `C4`, left across
/// `C1` and right across `C3`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AdjacentAreas {
    pub quad: f64,
    pub bottom: f64,
    pub top: f64,
    pub left: f64,
    pub right: f64,
}

impl AdjacentAreas {
    pub fn of(&self, dir: Direction) -> f64 {
        match dir {
            Direction::Top => self.top,
            Direction::Bottom => self.bottom,
            Direction::Left => self.left,
            Direction::Right => self.right,
        }
    }
}

/// Area of one face, keyed by the side of each circle it lies on.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FaceArea {
    pub signs: [i8; 4],
    pub sides: usize,
    pub area: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FourCircleConfig {
    pub normals: [Vec3; 4],
}

impl FourCircleConfig {
    pub fn new(normals: [Vec3; 4]) -> Result<FourCircleConfig> {
        let mut n = normals;
        for v in n.iter_mut() {
            *v = GreatCircle::new(*v)?.normal;
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if n[i].dot(&n[j]).abs() >= 1.0 - PARALLEL_TOL {
                    return Err(Error::ParallelCircles);
                }
            }
        }
        Ok(FourCircleConfig { normals: n })
    }

    pub fn circles(&self) -> [GreatCircle; 4] {
        self.normals.map(|normal| GreatCircle { normal })
    }

    /// Triples of circles through a common point.
    pub fn detect_triple(&self, tol: f64) -> Vec<[usize; 3]> {
        let n = &self.normals;
        let mut out = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                for k in j + 1..4 {
                    if det3(&n[i], &n[j], &n[k]).abs() <= tol {
                        out.push([i, j, k]);
                    }
                }
            }
        }
        out
    }

    pub fn is_generic(&self) -> bool {
        self.detect_triple(TRIPLE_TOL).is_empty()
    }

    fn trace(&self) -> Result<Arrangement> {
        Arrangement::trace(&self.normals)
            .ok_or_else(|| Error::DegenerateConfig("circles are not in general position".into()))
    }

    /// Angles of the quadrilateral face whose sides lie on `C1, C2, C3, C4`
    /// in cyclic order, with the fifth angles `e` and `z`.
    pub fn face_angles(&self) -> Result<FaceAngles> {
        Ok(self.located()?.angles)
    }

    pub fn adjacent_areas(&self) -> Result<AdjacentAreas> {
        Ok(self.located()?.areas)
    }

    fn located(&self) -> Result<Located> {
        let arr = self.trace()?;
        locate(&arr)
    }

    /// All fourteen faces with their areas.
    pub fn face_areas(&self) -> Result<Vec<FaceArea>> {
        let arr = self.trace()?;
        let mut out = Vec::with_capacity(arr.faces.len());
        for f in 0..arr.faces.len() {
            let area = arr.face_area(f);
            if area < AREA_TOL {
                return Err(Error::DegenerateConfig(format!("face {f} has area {area:e}")));
            }
            out.push(FaceArea { signs: arr.face_signs(f, &self.normals), sides: arr.faces[f].len(), area });
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain numbers serialize")
    }

    pub fn from_json(s: &str) -> Result<FourCircleConfig> {
        let raw: FourCircleConfig = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        FourCircleConfig::new(raw.normals)
    }
}

struct Located {
    angles: FaceAngles,
    areas: AdjacentAreas,
}

fn pair_index(x: usize, y: usize) -> Option<usize> {
    match (x.min(y), x.max(y)) {
        (0, 1) => Some(0),
        (1, 2) => Some(1),
        (2, 3) => Some(2),
        (0, 3) => Some(3),
        _ => None,
    }
}

fn locate(arr: &Arrangement) -> Result<Located> {
    let prev = |d: usize| arr.faces[arr.face[d]].iter().copied().find(|&e| arr.next[e] == d).unwrap_or(d);
    let cyclic = |face: &[usize]| {
        let cols: Vec<usize> = face.iter().map(|&d| arr.colour[d]).collect();
        (0..4).all(|i| pair_index(cols[i], cols[(i + 1) % 4]).is_some())
    };
    let f = (0..arr.faces.len())
        .find(|&f| arr.faces[f].len() == 4 && cyclic(&arr.faces[f]))
        .ok_or_else(|| Error::DegenerateConfig("no face with sides on C1, C2, C3, C4 in order".into()))?;
    let mut q = [0.0; 4];
    for &d in &arr.faces[f] {
        let j = pair_index(arr.colour[prev(d)], arr.colour[d]).expect("checked above");
        q[j] = arr.angle[d];
    }
    let across = |colour: usize| {
        let d = arr.faces[f].iter().copied().find(|&d| arr.colour[d] == colour).expect("four sides");
        arr.face[arr.twin[d]]
    };
    let corner = |g: usize, pair: (usize, usize)| -> f64 {
        arr.faces[g]
            .iter()
            .copied()
            .find(|&d| {
                let (x, y) = (arr.colour[prev(d)], arr.colour[d]);
                (x.min(y), x.max(y)) == pair
            })
            .map(|d| arr.angle[d])
            .unwrap_or(f64::NAN)
    };
    let (bottom, top, left, right) = (across(1), across(3), across(0), across(2));
    let angles = FaceAngles { a: q[0], b: q[1], c: q[2], d: q[3], e: corner(bottom, (0, 2)), z: corner(left, (1, 3)) };
    let areas = AdjacentAreas {
        quad: arr.face_area(f),
        bottom: arr.face_area(bottom),
        top: arr.face_area(top),
        left: arr.face_area(left),
        right: arr.face_area(right),
    };
    Ok(Located { angles, areas })
}

fn in_pyramid(q: [f64; 4]) -> bool {
    crate::angles::pyramid_membership_f64(q).is_interior()
}

/// Candidate normal quadruples with the given face angles and `e`, before
/// checking that the face really exists. Handles the coplanar limit of
/// `C1, C2, C3`.
fn candidates(q: [f64; 4], e: f64) -> Vec<[Vec3; 4]> {
    let g = |x: f64| -(PI * x).cos();
    let (g12, g23, g34, g41, g13) = (g(q[0]), g(q[1]), g(q[2]), g(q[3]), g(e));
    let m1 = Vec3::new(0.0, 0.0, 1.0);
    let s12 = (1.0 - g12 * g12).max(0.0).sqrt();
    if s12 < 1e-14 {
        return Vec::new();
    }
    let m2 = Vec3::new(s12, 0.0, g12);
    let x = (g23 - g12 * g13) / s12;
    let y2 = 1.0 - x * x - g13 * g13;
    if y2 < -1e-10 {
        return Vec::new();
    }
    let m3 = Vec3::new(x, y2.max(0.0).sqrt(), g13);
    let det = det3(&m1, &m2, &m3);
    let mut out = Vec::new();
    if det.abs() < 1e-13 {
        // m1, m2, m3 share a line: m4 is fixed by its products with m1, m2.
        let w = g41;
        let u = (-g12 * w) / s12;
        let v2 = 1.0 - u * u - w * w;
        if v2 >= -1e-10 {
            let v = v2.max(0.0).sqrt();
            for s in [v, -v] {
                out.push([m1, m2, m3, Vec3::new(u, s, w)]);
            }
        }
        return out;
    }
    let p = (m2.cross(&m3) * g41 + m1.cross(&m2) * g34) * (1.0 / det);
    let dq = m3.cross(&m1) * (1.0 / det);
    let (qa, qb, qc) = (dq.dot(&dq), 2.0 * p.dot(&dq), p.dot(&p) - 1.0);
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < -1e-10 * qb.abs().max(1.0) {
        return out;
    }
    let r = disc.max(0.0).sqrt();
    for s in [(-qb + r) / (2.0 * qa), (-qb - r) / (2.0 * qa)] {
        if s.abs() <= 1.0 + 1e-12 {
            out.push([m1, m2, m3, (p + dq * s).normalized()]);
        }
    }
    out
}

fn matches(cfg: &FourCircleConfig, q: [f64; 4], e: f64) -> bool {
    match cfg.face_angles() {
        Ok(fa) => {
            let got = [fa.a, fa.b, fa.c, fa.d, fa.e];
            let want = [q[0], q[1], q[2], q[3], e];
            got.iter().zip(want).all(|(x, y)| (x - y).abs() < MATCH_TOL)
        }
        Err(_) => false,
    }
}

fn try_realize(q: [f64; 4], e: f64) -> Option<FourCircleConfig> {
    candidates(q, e).into_iter().find_map(|n| {
        let cfg = FourCircleConfig { normals: n };
        (cfg.is_generic() && matches(&cfg, q, e)).then_some(cfg)
    })
}

/// A configuration whose face `F` has angles `(a, b, c, d)` and whose
/// fifth angle `e` equals `t`.
pub fn realize_config(a: f64, b: f64, c: f64, d: f64, t: f64) -> Result<FourCircleConfig> {
    let q = [a, b, c, d];
    if !in_pyramid(q) {
        return Err(Error::InfeasibleAngles(format!("({a}, {b}, {c}, {d})")));
    }
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::InfeasibleParameter(format!("e = {t} is not in (0,1)")));
    }
    try_realize(q, t).ok_or_else(|| Error::InfeasibleParameter(format!("no configuration with e = {t}")))
}

/// Open interval of `e` over which `(a, b, c, d)` is realized.
pub fn parameter_interval(a: f64, b: f64, c: f64, d: f64) -> Result<(f64, f64)> {
    let q = [a, b, c, d];
    if !in_pyramid(q) {
        return Err(Error::InfeasibleAngles(format!("({a}, {b}, {c}, {d})")));
    }
    let ok = |e: f64| try_realize(q, e).is_some();
    // The triangles across C2 and C4 have angles (1-a, 1-b, e) and
    // (1-c, 1-d, e), which bounds e before any solving.
    let lo_e = (a + b - 1.0).abs().max((c + d - 1.0).abs());
    let hi_e = (1.0 - (a - b).abs()).min(1.0 - (c - d).abs());
    if lo_e >= hi_e {
        return Err(Error::InfeasibleParameter("triangle bounds leave no room for e".into()));
    }
    // Admissible windows can be much narrower than the bounds, so the grid
    // is refined until one grid point lands inside.
    let at = |i: usize, steps: usize| lo_e + (hi_e - lo_e) * i as f64 / steps as f64;
    let mut found = None;
    for steps in [64usize, 1024, 16384, 131072] {
        let mut best: Option<(usize, usize)> = None;
        let mut run: Option<usize> = None;
        for i in 1..steps {
            match (ok(at(i, steps)), run) {
                (true, None) => run = Some(i),
                (false, Some(s)) => {
                    if best.is_none_or(|(x, y)| i - s > y - x) {
                        best = Some((s, i));
                    }
                    run = None;
                }
                _ => {}
            }
        }
        if let Some(s) = run {
            if best.is_none_or(|(x, y)| steps - s > y - x) {
                best = Some((s, steps));
            }
        }
        if let Some((s, t)) = best {
            found = Some((at(s, steps), at(s - 1, steps), at(t - 1, steps), at(t, steps)));
            break;
        }
    }
    let (first_in, before, last_in, after) =
        found.ok_or_else(|| Error::InfeasibleParameter("no admissible fifth angle found".into()))?;
    let refine = |mut inside: f64, mut outside: f64| {
        for _ in 0..60 {
            let mid = 0.5 * (inside + outside);
            if ok(mid) {
                inside = mid;
            } else {
                outside = mid;
            }
        }
        inside
    };
    let lo = refine(first_in, before);
    let hi = refine(last_in, after);
    Ok((lo, hi))
}

/// One sample along a deformation with fixed `(a, b, c, d)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceStep {
    pub t: f64,
    pub angles: FaceAngles,
    pub areas: AdjacentAreas,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Deformation {
    pub direction: Direction,
    pub steps: Vec<TraceStep>,
    /// Limit configuration; three of its circles share a point.
    pub limit: FourCircleConfig,
    pub triple: [usize; 3],
}

/// Circles meeting at the contracted triangle.
pub fn triple_for(dir: Direction) -> [usize; 3] {
    match dir {
        Direction::Bottom => [0, 1, 2],
        Direction::Top => [0, 2, 3],
        Direction::Left => [0, 1, 3],
        Direction::Right => [1, 2, 3],
    }
}

/// Deforms the configuration with fixed `(a, b, c, d)` monotonically in
/// `e` until a triangle next to `F` is contracted, and checks that it is
/// the one in `direction`.
pub fn continue_to_triple(a: f64, b: f64, c: f64, d: f64, direction: Direction) -> Result<Deformation> {
    let q = [a, b, c, d];
    let report = degeneration_report(&q.map(Scalar::Float));
    let tie = if direction.is_vertical() { report.vertical.is_none() } else { report.horizontal.is_none() };
    if tie {
        let what = if direction.is_vertical() { "a+b = c+d" } else { "a+d = b+c" };
        return Err(Error::QuadrupleBoundary(format!("{what}: both opposite triangles contract together")));
    }
    let (lo, hi) = parameter_interval(a, b, c, d)?;
    // Vertical triangles shrink as e decreases, horizontal ones as e grows.
    let end = if direction.is_vertical() { lo } else { hi };
    let start = 0.5 * (lo + hi);
    const N: usize = 24;
    let mut steps = Vec::with_capacity(N + 1);
    let mut last = None;
    for i in 0..=N {
        // Geometric spacing towards the end point.
        let s = 1.0 - 0.5f64.powi(i as i32);
        let t = start + (end - start) * s;
        let Some(cfg) = try_realize(q, t) else { continue };
        let located = cfg.located()?;
        if let Some(prev) = steps.last() {
            let prev: &TraceStep = prev;
            let moved = (located.angles.e - prev.angles.e) * (located.angles.z - prev.angles.z);
            if moved > 1e-15 {
                return Err(Error::DegenerateConfig("e and z moved in the same direction".into()));
            }
        }
        steps.push(TraceStep { t, angles: located.angles, areas: located.areas });
        last = Some(cfg);
    }
    let last_cfg = last.ok_or_else(|| Error::InfeasibleParameter("continuation did not start".into()))?;
    let final_step = steps.last().expect("nonempty").clone();
    let shrinking = Direction::ALL
        .into_iter()
        .filter(|&dir| dir.is_vertical() == direction.is_vertical())
        .min_by(|&x, &y| final_step.areas.of(x).total_cmp(&final_step.areas.of(y)))
        .expect("two candidates");
    if shrinking != direction {
        return Err(Error::DirectionBlocked(format!(
            "{direction}: the {shrinking} triangle contracts first (area {:.3e})",
            final_step.areas.of(shrinking)
        )));
    }
    // The determinant only shrinks like the square root of the area, so the
    // last sample is snapped: the circle carrying the vanishing side is
    // turned into the pencil of the other two.
    let triple = triple_for(direction);
    let moved = match direction {
        Direction::Bottom => 1,
        Direction::Top => 3,
        Direction::Left => 0,
        Direction::Right => 2,
    };
    let [i, j] = {
        let mut rest = triple.iter().copied().filter(|&k| k != moved);
        [rest.next().expect("triple"), rest.next().expect("triple")]
    };
    let mut limit = last_cfg;
    let axis = limit.normals[i].cross(&limit.normals[j]).normalized();
    let m = limit.normals[moved];
    limit.normals[moved] = (m - axis * m.dot(&axis)).normalized();
    let found = limit.detect_triple(TRIPLE_TOL);
    if found != [triple] {
        return Err(Error::DegenerateConfig(format!("limit has triples {found:?}, expected {triple:?}")));
    }
    Ok(Deformation { direction, steps, limit, triple })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_between_examples() {
        let z = GreatCircle::new(Vec3::new(0.0, 0.0, 1.0)).unwrap();
        let x = GreatCircle::new(Vec3::new(1.0, 0.0, 0.0)).unwrap();
        assert!((angle_between(&z, &x).unwrap() - 0.5).abs() < 1e-15);
        let t = GreatCircle::new(Vec3::new((PI * 0.3).sin(), 0.0, (PI * 0.3).cos())).unwrap();
        assert!((angle_between(&z, &t).unwrap() - 0.3).abs() < 1e-12);
        let neg = GreatCircle::new(-t.normal).unwrap();
        assert!((angle_between(&z, &neg).unwrap() - 0.3).abs() < 1e-12);
        assert_eq!(angle_between(&z, &z), Err(Error::ParallelCircles));
    }

    #[test]
    fn symmetric_realization() {
        let q = 2.0 / 3.0;
        let (lo, hi) = parameter_interval(q, q, q, q).unwrap();
        assert!(lo < hi);
        // The symmetric configuration has e = z.
        let mut x = lo + 1e-6;
        let mut y = hi - 1e-6;
        for _ in 0..80 {
            let mid = 0.5 * (x + y);
            let fa = realize_config(q, q, q, q, mid).unwrap().face_angles().unwrap();
            if fa.e < fa.z {
                x = mid;
            } else {
                y = mid;
            }
        }
        let cfg = realize_config(q, q, q, q, x).unwrap();
        let fa = cfg.face_angles().unwrap();
        for v in fa.abcd() {
            assert!((v - q).abs() < 1e-9);
        }
        assert!((fa.e - fa.z).abs() < 1e-6);
    }

    #[test]
    fn area_of_face() {
        let (lo, hi) = parameter_interval(0.9, 0.9, 0.9, 0.9).unwrap();
        let cfg = realize_config(0.9, 0.9, 0.9, 0.9, 0.5 * (lo + hi)).unwrap();
        let areas = cfg.adjacent_areas().unwrap();
        assert!((areas.quad - 1.6).abs() < 1e-9);
        let total: f64 = cfg.face_areas().unwrap().iter().map(|f| f.area).sum();
        assert!((total - 4.0).abs() < 1e-9);
        assert!(matches!(realize_config(0.5, 0.5, 0.5, 0.5, 0.5), Err(Error::InfeasibleAngles(_))));
    }

    #[test]
    fn degenerations_follow_the_sums() {
        let q = [0.6, 0.6, 0.5, 0.4];
        assert!(continue_to_triple(q[0], q[1], q[2], q[3], Direction::Bottom).is_ok());
        assert!(continue_to_triple(q[0], q[1], q[2], q[3], Direction::Right).is_ok());
        assert!(matches!(continue_to_triple(q[0], q[1], q[2], q[3], Direction::Top), Err(Error::DirectionBlocked(_))));
        assert!(matches!(continue_to_triple(q[0], q[1], q[2], q[3], Direction::Left), Err(Error::DirectionBlocked(_))));
        assert!(matches!(continue_to_triple(0.6, 0.5, 0.6, 0.5, Direction::Top), Err(Error::QuadrupleBoundary(_))));
    }

    #[test]
    fn triples() {
        let n =
            [Vec3::new(1.0, 0.0, 0.0), Vec3::new(0.0, 1.0, 0.0), Vec3::new(1.0, 1.0, 0.0), Vec3::new(0.3, 0.2, 1.0)];
        let cfg = FourCircleConfig::new(n).unwrap();
        assert_eq!(cfg.detect_triple(TRIPLE_TOL), vec![[0, 1, 2]]);
        let flat =
            [Vec3::new(1.0, 0.0, 0.0), Vec3::new(0.0, 1.0, 0.0), Vec3::new(1.0, 1.0, 0.0), Vec3::new(1.0, -2.0, 0.0)];
        assert_eq!(FourCircleConfig::new(flat).unwrap().detect_triple(TRIPLE_TOL).len(), 4);
    }

    #[test]
    fn json_round_trip() {
        let cfg = realize_config(0.7, 0.65, 0.8, 0.6, 0.4).or_else(|_| {
            let (lo, hi) = parameter_interval(0.7, 0.65, 0.8, 0.6)?;
            realize_config(0.7, 0.65, 0.8, 0.6, 0.5 * (lo + hi))
        });
        let cfg = cfg.unwrap();
        let back = FourCircleConfig::from_json(&cfg.to_json()).unwrap();
        let gap: f64 = (0..4).map(|i| (cfg.normals[i] - back.normals[i]).norm()).sum();
        assert!(gap < 1e-12);
        assert!(cfg.to_json().contains("\"normals\""));
    }
}
