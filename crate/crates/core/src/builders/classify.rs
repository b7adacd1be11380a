//! Recognising nets: digon peeling, family labelling and enumeration of
//! primitive nets.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use super::catalogue::{base_net, build, core_labels_with_orders, Seed};
use super::label::{DigonKind, DigonRecord, NetLabel};
use super::ops::{extend_side, SideDir};
use crate::error::{Error, Result};
use crate::net::{canonical_code, decompose_arcs, validate_net, ArcEnd, Net};

/// Label of a net together with the rotation that puts it in the frame of
/// the label: `net.rotated(rotation)` is isomorphic to `build(label)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub label: NetLabel,
    pub rotation: usize,
}

/// One way of removing a stack of digons from a side.
#[derive(Clone, Debug)]
pub struct Reduction {
    /// Side of the remaining quadrilateral the digons sit on.
    pub side: usize,
    pub kind: DigonKind,
    /// Number of hemispheres removed.
    pub count: usize,
    /// Irreducible core left after removing these digons and, if needed,
    /// further digons along the first available reduction.
    pub core: Net,
    /// Label of the core, when catalogued, up to rotation of its corners.
    pub core_label: Option<Classification>,
}

/// Cuts `net` along the interior arc `path` running between the ends of
/// side `j`, dropping the part that contains the side.
fn peel(net: &Net, j: usize, path: &[usize]) -> Option<(Net, usize)> {
    let n = net.dart_count();
    let mut cut = vec![false; n];
    for &d in path {
        cut[d] = true;
        if let Some(o) = net.opp(d) {
            cut[o] = true;
        }
    }
    let mut inside = vec![false; n];
    let mut stack = vec![net.corner_dart(j)];
    while let Some(d) = stack.pop() {
        if inside[d] {
            continue;
        }
        let mut e = d;
        loop {
            inside[e] = true;
            if let Some(o) = net.opp(e) {
                if !cut[e] && !inside[o] {
                    stack.push(o);
                }
            }
            e = net.next(e);
            if e == d {
                break;
            }
        }
    }
    let removed = inside.iter().filter(|&&x| x).count();
    if removed == n {
        return None;
    }
    let faces = net.faces().iter().filter(|f| inside[f[0]]).count();
    let (vid, _) = net.vertex_ids();
    let (rest, map) = net.without(&inside);
    let mut anchors = [0; 4];
    for (k, a) in anchors.iter_mut().enumerate() {
        let v = vid[net.corner_dart(k)];
        *a = (0..n).find(|&d| !inside[d] && vid[d] == v).map(|d| map[d])?;
    }
    let rest = rest.anchored(anchors).ok()?;
    if !validate_net(&rest).valid {
        return None;
    }
    Some((rest, faces / 7))
}

/// Removable digon stacks: one entry per interior arc joining the two ends
/// of a side on that side's circle.
fn peel_options(net: &Net) -> Vec<(usize, usize, Net, usize)> {
    let arcs = decompose_arcs(net);
    let mut out = Vec::new();
    for arc in arcs.interior() {
        let Some((ArcEnd::Corner(a), ArcEnd::Corner(b))) = arc.ends else { continue };
        let j = if (a + 1) % 4 == b {
            a
        } else if (b + 1) % 4 == a {
            b
        } else {
            continue;
        };
        if arc.colour != net.side_colour(j) {
            continue;
        }
        if let Some((rest, count)) = peel(net, j, &arc.darts) {
            out.push((j, arc.order(), rest, count));
        }
    }
    out
}

/// All decompositions of `net` into an irreducible core and digons, one for
/// every removable digon stack.
pub fn reduction_witnesses(net: &Net) -> Vec<Reduction> {
    peel_options(net)
        .into_iter()
        .map(|(side, order, rest, count)| {
            let core = fully_reduced(rest);
            let core_label = classify(&core).ok();
            Reduction { side, kind: DigonKind::for_side_order(order), count, core, core_label }
        })
        .collect()
}

fn fully_reduced(mut net: Net) -> Net {
    loop {
        match peel_options(&net).into_iter().next() {
            Some((_, _, rest, _)) => net = rest,
            None => return net,
        }
    }
}

/// Label of `net` in its own corner frame, if it is in the catalogue.
pub fn classify_in_frame(net: &Net) -> Result<NetLabel> {
    let report = validate_net(net);
    if !report.valid {
        return Err(Error::InvalidNet(format!("{:?}", report.violations)));
    }
    for (j, order, rest, count) in peel_options(net) {
        if let Ok(mut label) = classify_in_frame(&rest) {
            let kind = DigonKind::for_side_order(order);
            match label.digons.last_mut() {
                Some(last) if last.side == j && last.kind == kind => last.count += count,
                _ => label.digons.push(DigonRecord { side: j, kind, count }),
            }
            return Ok(label);
        }
    }
    let orders = net.corner_orders();
    let code = canonical_code(net);
    let matches = |label: &NetLabel| build(label).map(|b| canonical_code(&b) == code).unwrap_or(false);
    if report.primitive {
        return core_labels_with_orders(orders)
            .into_iter()
            .find(|l| matches(l))
            .ok_or_else(|| Error::UncataloguedLabel(format!("primitive net with corners {orders:?}")));
    }
    let total: usize = orders.iter().sum();
    for mu in 1..=total / 4 {
        for pair in [0, 1] {
            let (i, j) = (pair, pair + 2);
            if orders[i] < 2 * mu || orders[j] < 2 * mu {
                continue;
            }
            let mut base = orders;
            base[i] -= 2 * mu;
            base[j] -= 2 * mu;
            for core in core_labels_with_orders(base) {
                let label = core.with_mu(mu);
                if label.check().is_ok() && matches(&label) {
                    return Ok(label);
                }
            }
        }
    }
    Err(Error::UncataloguedLabel(format!("irreducible net with corners {orders:?}")))
}

/// Label of `net` up to rotation of the corner labels.
pub fn classify(net: &Net) -> Result<Classification> {
    let mut last = None;
    for rotation in 0..4 {
        match classify_in_frame(&net.rotated(rotation)) {
            Ok(label) => return Ok(Classification { label, rotation }),
            Err(e @ Error::InvalidNet(_)) => return Err(e),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or(Error::UncataloguedLabel("no frame".into())))
}

fn is_normalised(orders: [usize; 4]) -> bool {
    orders[0] == 0 && orders[0] + orders[2] <= orders[1] + orders[3]
}

/// Every net reachable from `net` by one extension, with corner-order sum
/// at most `bound`.
fn one_step(net: &Net, bound: usize) -> Vec<Net> {
    let mut out = Vec::new();
    let base: usize = net.corner_orders().iter().sum();
    for p in 0..4 {
        for dir in [SideDir::Before, SideDir::After] {
            let mut cur = net.clone();
            for _ in base..bound {
                match extend_side(&cur, p, dir, 1) {
                    Ok(n) => {
                        out.push(n.clone());
                        cur = n;
                    }
                    Err(_) => break,
                }
            }
        }
    }
    out
}

/// All primitive nets with corner-order sum at most `bound`, in the
/// normalised labelling (`a0` of order 0 and `ord a0 + ord a2 <= ord a1 +
/// ord a3`), each with its catalogue label. Sorted by label.
pub fn enumerate_primitive(bound: usize) -> Vec<(NetLabel, Net)> {
    let seeds: Vec<Net> = [Seed::P0, Seed::XPrime00, Seed::XPrimeBar00, Seed::ZPrime00]
        .into_iter()
        .map(base_net)
        .filter(|n| n.corner_orders().iter().sum::<usize>() <= bound)
        .collect();
    let raw: Vec<Net> = seeds
        .par_iter()
        .flat_map_iter(|seed| {
            let mut acc = vec![seed.clone()];
            for n1 in one_step(seed, bound) {
                acc.extend(one_step(&n1, bound));
                acc.push(n1);
            }
            acc
        })
        .collect();

    let mut seen = HashSet::new();
    let mut unique = Vec::new();
    for net in raw {
        for base in [net.clone(), net.mirrored(0)] {
            for r in 0..4 {
                let cand = base.rotated(r);
                if is_normalised(cand.corner_orders()) && seen.insert(canonical_code(&cand)) {
                    unique.push(cand);
                }
            }
        }
    }

    let labelled: Vec<(Option<NetLabel>, Net)> = unique
        .into_par_iter()
        .map(|net| {
            let label = classify_in_frame(&net).ok();
            (label, net)
        })
        .collect();
    let mut out = BTreeMap::new();
    for (label, net) in labelled {
        match label {
            Some(l) => {
                out.insert(l, net);
            }
            None => log::warn!("primitive net with corners {:?} is not catalogued", net.corner_orders()),
        }
    }
    out.into_iter().collect()
}
