//! Chains of quadrilaterals with fixed angles.
//!
//! A configuration with fixed angles `(a, b, c, d)` can be pushed through a
//! triple intersection in one vertical and one horizontal direction. At the
//! net level the possible crossings are catalogued per family (see
//! `diagrams`); an edge between two nets is live exactly when both nets
//! are feasible, because the feasibility of the far side is the same
//! inequality that permits the crossing on the near side.

mod diagrams;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::angles::{
    apply_mask, complement_mask_for, degeneration_report, net_feasible, pyramid_membership, AngleVector, Direction,
    FixedAngleQuad, LinForm, Scalar, FRACTION_NAMES,
};
use crate::builders::{forbidden_digon_sides, NetLabel};
use crate::error::{Error, Result};
use crate::geometry::triple_for;

/// Class of a configuration in the lattice of complement patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ConfigClass {
    pub mask: u8,
}

impl ConfigClass {
    pub fn of(fixed: &FixedAngleQuad) -> ConfigClass {
        ConfigClass { mask: fixed.mask() }
    }

    /// 0 for even, 1 for odd.
    pub fn parity(self) -> u32 {
        self.mask.count_ones() % 2
    }

    pub fn step(self, dir: Direction) -> ConfigClass {
        ConfigClass { mask: self.mask ^ dir.complement_mask() }
    }

    pub fn all() -> impl Iterator<Item = ConfigClass> {
        (0u8..16).map(|mask| ConfigClass { mask })
    }
}

/// The direction whose crossing turns pattern `from` into pattern `to`.
pub fn direction_between(from: u8, to: u8) -> Option<Direction> {
    Direction::ALL.into_iter().find(|d| d.complement_mask() == from ^ to)
}

/// Complements the two angles at the vertices away from the triple
/// intersection, without any checks.
pub fn complement_along(fixed: &FixedAngleQuad, dir: Direction) -> FixedAngleQuad {
    let mut out = *fixed;
    for j in 0..4 {
        if dir.complement_mask() >> j & 1 == 1 {
            out.values[j] = fixed.values[j].complement();
            out.complement[j] = !fixed.complement[j];
        }
    }
    out
}

/// Crosses the triple intersection reached in direction `dir`.
pub fn transition(fixed: &FixedAngleQuad, dir: Direction) -> Result<FixedAngleQuad> {
    let rep = degeneration_report(&fixed.values);
    let allowed = if dir.is_vertical() { rep.vertical } else { rep.horizontal };
    match allowed {
        None => return Err(Error::QuadrupleBoundary(format!("{dir}: the two sums are equal"))),
        Some(d) if d != dir => return Err(Error::DirectionBlocked(dir.to_string())),
        Some(_) => {}
    }
    let out = complement_along(fixed, dir);
    if !pyramid_membership(&out.values).is_interior() {
        return Err(Error::TargetInfeasible);
    }
    Ok(out)
}

/// Positive exactly when `dir` is the permitted crossing, over `(a,b,c,d)`.
pub fn permission_form(dir: Direction) -> LinForm {
    let coef = match dir {
        Direction::Top => [-1, -1, 1, 1],
        Direction::Bottom => [1, 1, -1, -1],
        Direction::Left => [1, -1, -1, 1],
        Direction::Right => [-1, 1, 1, -1],
    };
    LinForm { coef, constant: 0 }
}

fn labels_as_strings<S: Serializer>(v: &[NetLabel], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|l| l.to_string()))
}

fn label_as_string<S: Serializer>(v: &NetLabel, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// The inequality behind one crossing, over `α, β, γ, δ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Gate {
    /// Reads `form > 0`.
    pub text: String,
    pub value: Scalar,
}

fn gate(from_mask: u8, dir: Direction, angles: &AngleVector) -> Gate {
    let form = permission_form(dir).substitute(from_mask);
    Gate { text: format!("{} > 0", form.render(FRACTION_NAMES)), value: form.eval(&angles.frac) }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Transition {
    #[serde(serialize_with = "label_as_string")]
    pub from: NetLabel,
    #[serde(serialize_with = "label_as_string")]
    pub to: NetLabel,
    pub direction: Direction,
    /// Circles through the common point, 0-based.
    pub triple: [usize; 3],
    pub gate: Gate,
}

/// Limit at an end of a chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EndState {
    ModulusZero,
    ModulusInfinity,
    /// The free direction is a tie: four circles meet in the limit.
    QuadrupleBoundary,
    /// The tie also makes two circles tangent.
    NonSphericalLimit,
}

impl EndState {
    pub fn is_degenerate(self) -> bool {
        matches!(self, EndState::ModulusZero | EndState::ModulusInfinity)
    }
}

impl fmt::Display for EndState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EndState::ModulusZero => "modulus->0",
            EndState::ModulusInfinity => "modulus->inf",
            EndState::QuadrupleBoundary => "quadruple-boundary",
            EndState::NonSphericalLimit => "non-spherical-limit",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainEnd {
    #[serde(serialize_with = "label_as_string")]
    pub net: NetLabel,
    /// Direction left unused by the chain; `None` on a tie.
    pub direction: Option<Direction>,
    pub state: EndState,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    Low,
    High,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Chain {
    #[serde(serialize_with = "labels_as_strings")]
    pub nets: Vec<NetLabel>,
    pub length: usize,
    pub transitions: Vec<Transition>,
    /// Low end first.
    pub ends: [ChainEnd; 2],
    /// Contains a net whose existence the angles alone do not decide.
    pub uncertain: bool,
}

impl Chain {
    pub fn end(&self, end: End) -> &ChainEnd {
        match end {
            End::Low => &self.ends[0],
            End::High => &self.ends[1],
        }
    }

    pub fn both_degenerate(&self) -> bool {
        self.ends.iter().all(|e| e.state.is_degenerate())
    }

    /// Even length gives ends `{0, ∞}`, odd length gives equal ends.
    pub fn parity_law_holds(&self) -> bool {
        if !self.both_degenerate() {
            return true;
        }
        let same = self.ends[0].state == self.ends[1].state;
        same == (self.length % 2 == 1)
    }
}

pub fn end_state(chain: &Chain, end: End) -> EndState {
    chain.end(end).state
}

/// Families whose diagrams are considered; a diagram is in scope when any
/// of its member families is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scope {
    letters: BTreeSet<char>,
}

impl Scope {
    pub fn all() -> Scope {
        Scope { letters: "PXZRSUVW".chars().collect() }
    }

    /// Comma-separated family letters, e.g. `X,Z`.
    pub fn parse(s: &str) -> Result<Scope> {
        let mut letters = BTreeSet::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let mut chars = part.chars();
            let c = chars.next().map(|c| c.to_ascii_uppercase());
            match (c, chars.next()) {
                (Some(c), None) if "PXZRSUVW".contains(c) => {
                    letters.insert(c);
                }
                _ => return Err(Error::Parse(format!("scope entry `{part}` is not a family letter"))),
            }
        }
        if letters.is_empty() {
            return Err(Error::Parse("empty scope".into()));
        }
        Ok(Scope { letters })
    }

    fn admits(&self, letters: &str) -> bool {
        letters.chars().any(|c| self.letters.contains(&c))
    }
}

impl Default for Scope {
    fn default() -> Scope {
        Scope::all()
    }
}

fn mask_of(label: &NetLabel) -> u8 {
    complement_mask_for(label).expect("diagram labels have table rows")
}

fn feasible(label: &NetLabel, angles: &AngleVector) -> bool {
    net_feasible(label, angles).map(|f| f.feasible).unwrap_or(false)
}

fn excluded(a: &NetLabel, b: &NetLabel) -> bool {
    let cut = |from: &NetLabel, to: &NetLabel| {
        diagrams::exclusions().iter().any(|(x, y)| {
            *x == from.core() && *y == to.core() && {
                let sides = forbidden_digon_sides(from);
                from.digons.iter().any(|d| sides.contains(&d.side))
            }
        })
    };
    cut(a, b) || cut(b, a)
}

/// Carries pseudo-diagonals and digons of `like` over to `core`.
fn decorate(core: &NetLabel, like: &NetLabel) -> NetLabel {
    let mut out = core.clone();
    out.mu = like.mu;
    out.digons = like.digons.clone();
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Neighbor {
    #[serde(serialize_with = "label_as_string")]
    pub label: NetLabel,
    pub direction: Direction,
    pub gate: Gate,
}

/// Nets reached from `label` through one triple intersection at these
/// angles.
pub fn net_neighbors(label: &NetLabel, angles: &AngleVector) -> Result<Vec<Neighbor>> {
    let core = label.core();
    let diagram = diagrams::diagram_for(core.core_corner_orders())
        .filter(|d| d.nodes.contains(&core))
        .ok_or_else(|| Error::UncataloguedLabel(label.to_string()))?;
    let f = net_feasible(label, angles)?;
    if !f.feasible {
        return Err(Error::InfeasibleAngles(format!("{label} needs {}", f.condition)));
    }
    let mask = mask_of(&core);
    let mut out = Vec::new();
    for (a, b) in &diagram.edges {
        let other = if *a == core {
            b
        } else if *b == core {
            a
        } else {
            continue;
        };
        let other = decorate(other, label);
        if !feasible(&other, angles) || excluded(label, &other) {
            continue;
        }
        let dir = direction_between(mask, mask_of(&other)).expect("diagram edges differ by one crossing");
        out.push(Neighbor { label: other, direction: dir, gate: gate(mask, dir, angles) });
    }
    out.sort_by_key(|x| x.direction);
    Ok(out)
}

fn free_end(label: &NetLabel, used: Option<Direction>, vertical: bool, angles: &AngleVector) -> ChainEnd {
    let quad = apply_mask(&angles.frac, mask_of(label));
    let rep = degeneration_report(&quad.values);
    debug_assert!(used.is_none_or(|u| u.is_vertical() != vertical));
    let direction = if vertical { rep.vertical } else { rep.horizontal };
    let state = match direction {
        Some(d) if d.is_vertical() => EndState::ModulusInfinity,
        Some(_) => EndState::ModulusZero,
        None if rep.tangent => EndState::NonSphericalLimit,
        None => EndState::QuadrupleBoundary,
    };
    ChainEnd { net: label.clone(), direction, state }
}

fn end_key(e: &ChainEnd) -> (u8, Option<Direction>, String) {
    (e.direction.is_none() as u8, e.direction, e.net.to_string())
}

fn assemble(path: Vec<NetLabel>, angles: &AngleVector, uncertain: bool) -> Chain {
    let mut transitions = Vec::new();
    for w in path.windows(2) {
        let (ma, mb) = (mask_of(&w[0]), mask_of(&w[1]));
        let dir = direction_between(ma, mb).expect("diagram edges differ by one crossing");
        transitions.push(Transition {
            from: w[0].clone(),
            to: w[1].clone(),
            direction: dir,
            triple: triple_for(dir),
            gate: gate(ma, dir, angles),
        });
    }
    let (first, last) = (path[0].clone(), path[path.len() - 1].clone());
    let mut ends = match (transitions.first(), transitions.last()) {
        (Some(t0), Some(t1)) => [
            free_end(&first, Some(t0.direction), !t0.direction.is_vertical(), angles),
            free_end(&last, Some(t1.direction), !t1.direction.is_vertical(), angles),
        ],
        _ => [free_end(&first, None, true, angles), free_end(&first, None, false, angles)],
    };
    let mut nets = path;
    if end_key(&ends[1]).cmp(&end_key(&ends[0])) == Ordering::Less {
        ends.swap(0, 1);
        if nets.len() > 1 {
            nets.reverse();
            transitions.reverse();
            for t in &mut transitions {
                std::mem::swap(&mut t.from, &mut t.to);
                t.gate = gate(mask_of(&t.from), t.direction, angles);
            }
        }
    }
    let chain = Chain { length: nets.len() - 1, nets, transitions, ends, uncertain };
    if !chain.parity_law_holds() {
        log::error!("end moduli of {:?} break the parity law", chain.nets);
    }
    chain
}

/// Splits the feasible nets of the catalogued diagram for these corner
/// orders into maximal chains. Returns nothing when no diagram in scope
/// matches the integer parts.
pub fn build_chains(angles: &AngleVector, scope: &Scope) -> Vec<Chain> {
    let Some(diagram) = diagrams::diagram_for(angles.int).filter(|d| scope.admits(d.letters)) else {
        log::info!("no catalogued chain diagram for corner orders {:?}", angles.int);
        return Vec::new();
    };
    let live: Vec<NetLabel> = diagram.nodes.iter().filter(|l| feasible(l, angles)).cloned().collect();
    let idx = |l: &NetLabel| live.iter().position(|x| x == l);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); live.len()];
    for (a, b) in &diagram.edges {
        if let (Some(i), Some(j)) = (idx(a), idx(b)) {
            adj[i].push(j);
            adj[j].push(i);
        }
    }
    for (i, v) in adj.iter().enumerate() {
        if v.len() > 2 {
            log::error!("{} has {} live crossings", live[i], v.len());
        }
    }
    let mut seen = vec![false; live.len()];
    let mut chains = Vec::new();
    // Paths first from their endpoints; anything left is a cycle.
    let starts: Vec<usize> =
        (0..live.len()).filter(|&i| adj[i].len() <= 1).chain((0..live.len()).filter(|&i| adj[i].len() > 1)).collect();
    for s in starts {
        if seen[s] {
            continue;
        }
        let mut path = vec![s];
        seen[s] = true;
        let mut cur = s;
        while let Some(&nx) = adj[cur].iter().find(|&&j| !seen[j]) {
            seen[nx] = true;
            path.push(nx);
            cur = nx;
        }
        let labels: Vec<NetLabel> = path.iter().map(|&i| live[i].clone()).collect();
        let uncertain = labels.iter().any(|l| diagram.uncertain.contains(l));
        chains.push(assemble(labels, angles, uncertain));
    }
    chains.sort_by(|a, b| a.nets[0].to_string().cmp(&b.nets[0].to_string()).then(a.length.cmp(&b.length)));
    chains
}

/// Name of the catalogued diagram used for these corner orders.
pub fn diagram_name(orders: [usize; 4]) -> Option<String> {
    diagrams::diagram_for(orders).map(|d| d.name)
}

/// A count known only up to chains of undecided existence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Count {
    pub lo: usize,
    pub hi: usize,
}

impl Count {
    fn add(&mut self, n: usize, certain: bool) {
        self.hi += n;
        if certain {
            self.lo += n;
        }
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{{{}..{}}}", self.lo, self.hi)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Lower bound for any modulus.
    pub per_modulus: Count,
    /// Count for small enough modulus.
    pub small_modulus: Count,
    /// Count for large enough modulus.
    pub large_modulus: Count,
}

pub fn bounds_of(chains: &[Chain]) -> Bounds {
    let zero = Count { lo: 0, hi: 0 };
    let mut b = Bounds { per_modulus: zero, small_modulus: zero, large_modulus: zero };
    for c in chains {
        let certain = !c.uncertain;
        let zeros = c.ends.iter().filter(|e| e.state == EndState::ModulusZero).count();
        let infs = c.ends.iter().filter(|e| e.state == EndState::ModulusInfinity).count();
        if c.both_degenerate() && c.length % 2 == 0 {
            b.per_modulus.add(1, certain);
        }
        let small = match (zeros, c.length % 2) {
            (2, 1) => 2,
            (1, _) => 1,
            _ => 0,
        };
        let large = match (infs, c.length % 2) {
            (2, 1) => 2,
            (1, _) => 1,
            _ => 0,
        };
        b.small_modulus.add(small, certain);
        b.large_modulus.add(large, certain);
    }
    b
}

pub fn count_bounds(angles: &AngleVector, scope: &Scope) -> Bounds {
    bounds_of(&build_chains(angles, scope))
}

/// The inequalities that shape a chain, with their values.
pub fn explain(chain: &Chain, angles: &AngleVector) -> Vec<String> {
    let mut out = Vec::new();
    for net in &chain.nets {
        if let Ok(f) = net_feasible(net, angles) {
            out.push(format!("{net}: {} [{}]", f.condition, if f.feasible { "holds" } else { "fails" }));
        }
    }
    for t in &chain.transitions {
        out.push(format!("{} -{}-> {}: {} (value {})", t.from, t.direction, t.to, t.gate.text, t.gate.value));
    }
    for (name, e) in ["low", "high"].iter().zip(&chain.ends) {
        let dir = e.direction.map_or("tie".to_string(), |d| d.to_string());
        out.push(format!("{name} end {}: free direction {dir}, {}", e.net, e.state));
    }
    out
}
