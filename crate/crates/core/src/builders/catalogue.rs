//! Seeds and the family constructions of primitive nets.

use serde::{Deserialize, Serialize};

use super::label::{Family, NetLabel};
use super::ops::{attach_digon, extend_side, insert_pmu, label_corners, SideDir};
use crate::error::{Error, Result};
use crate::net::Net;
use crate::partition::{FACES, P};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Seed {
    P0,
    XPrime00,
    XPrimeBar00,
    ZPrime00,
}

fn some_quad() -> usize {
    (0..FACES).find(|&f| P.face_len(f) == 4).expect("template has quadrilaterals")
}

/// One of the four basic primitive nets, labelled so that its corner orders
/// and complement pattern are those of the catalogue.
pub fn base_net(which: Seed) -> Net {
    let f = some_quad();
    let fd = P.face_darts(f).to_vec();
    let built = match which {
        Seed::P0 => label_corners(Net::from_template_faces(&[f]), [0; 4], Some(0)),
        Seed::XPrime00 => {
            let mut faces = vec![f, P.face(P.twin(fd[2])), P.face(P.twin(fd[3]))];
            faces.sort_unstable();
            label_corners(Net::from_template_faces(&faces), [0, 0, 0, 1], Some(0b1101))
        }
        Seed::XPrimeBar00 => Ok(base_net(Seed::XPrime00).mirrored(0)),
        Seed::ZPrime00 => {
            let mut faces: Vec<usize> =
                P.darts_at(P.origin(fd[0])).into_iter().chain(P.darts_at(P.origin(fd[2]))).map(|d| P.face(d)).collect();
            faces.sort_unstable();
            faces.dedup();
            label_corners(Net::from_template_faces(&faces), [0, 1, 0, 1], Some(0b1010))
        }
    };
    built.expect("seed nets are well formed")
}

/// Builds the net named by `label`: family core, then `μ` insertions of
/// `P_1`, then the digons in order. Digons on a side that blocks chain
/// continuation are allowed with a warning; see [`build_strict`].
pub fn build(label: &NetLabel) -> Result<Net> {
    build_with(label, false)
}

/// Like [`build`] but refuses digons on the order-5 side of `S[1,1]`,
/// `Z'[1,0]` and `Z'[0,1]` (and their bars).
pub fn build_strict(label: &NetLabel) -> Result<Net> {
    build_with(label, true)
}

/// Sides of the core of `label` on which a digon destroys the chain
/// through the core.
pub fn forbidden_digon_sides(label: &NetLabel) -> Vec<usize> {
    let core = label.core();
    let special =
        matches!((core.family, core.k, core.l), (Family::S, 1, 1) | (Family::ZPrime, 1, 0) | (Family::ZPrime, 0, 1));
    if !special || label.mu > 0 {
        return Vec::new();
    }
    match build_core(core.family, core.barred, core.k, core.l) {
        Ok(net) => (0..4).filter(|&j| net.side(j).len() == 5).collect(),
        Err(_) => Vec::new(),
    }
}

fn build_with(label: &NetLabel, strict: bool) -> Result<Net> {
    label.check()?;
    let forbidden = forbidden_digon_sides(label);
    let mut net = build_core(label.family, label.barred, label.k, label.l)?;
    if label.mu > 0 {
        net = insert_pmu(&net, label.mu)?;
    }
    for d in &label.digons {
        let order = net.side(d.side).len();
        if super::label::DigonKind::for_side_order(order) != d.kind {
            return Err(Error::InvalidLabel(format!("{label}: side {} has order {order}", d.side)));
        }
        if forbidden.contains(&d.side) {
            if strict {
                return Err(Error::ForbiddenSide(d.side));
            }
            log::warn!("{label}: a digon on side {} blocks the chain through the core", d.side);
        }
        net = attach_digon(&net, d.side, d.count)?;
    }
    Ok(net)
}

fn build_core(family: Family, barred: bool, k: usize, l: usize) -> Result<Net> {
    use SideDir::{After, Before};
    if barred && family == Family::ZPrime {
        // Indices swap under this reflection.
        return Ok(build_core(family, false, l, k)?.mirrored(0));
    }
    if barred {
        let fix = if family.bar_fixes_a1() { 2 } else { 0 };
        return Ok(build_core(family, false, k, l)?.mirrored(fix));
    }
    let two = |seed: Seed, first: (usize, SideDir, usize), second: (usize, SideDir, usize)| -> Result<Net> {
        let n = extend_side(&base_net(seed), first.0, first.1, first.2)?;
        extend_side(&n, second.0, second.1, second.2)
    };
    match family {
        Family::P => Ok(base_net(Seed::P0)),
        Family::X => two(Seed::P0, (0, After, k), (2, Before, l)),
        Family::XPrime => two(Seed::XPrime00, (0, After, k), (2, Before, l)),
        Family::Z => two(Seed::XPrimeBar00, (0, After, k), (2, Before, l)),
        Family::ZPrime => two(Seed::ZPrime00, (0, After, k), (2, Before, l)),
        Family::R => two(Seed::P0, (0, After, k), (1, Before, l)),
        Family::S => two(Seed::XPrime00, (0, After, k - 1), (1, Before, l)),
        Family::U => two(Seed::P0, (0, After, k), (2, After, l)),
        Family::V => two(Seed::XPrimeBar00, (2, After, l - 1), (0, After, k)),
        Family::VPrime => Ok(build_core(Family::V, false, l, k)?.rotated(2)),
        Family::W => two(Seed::ZPrime00, (0, After, k - 1), (2, After, l - 1)),
    }
}

/// Every catalogue core label with the given corner orders. Duplicate
/// names of one net (the bar of `Z'[0,0]`) are dropped.
pub fn core_labels_with_orders(orders: [usize; 4]) -> Vec<NetLabel> {
    let total: usize = orders.iter().sum();
    let mut out = Vec::new();
    for family in Family::ALL {
        for barred in [false, true] {
            for k in 0..=total {
                for l in 0..=total - k {
                    let label = NetLabel::new(family, barred, k, l);
                    if label.check().is_err() || label.core_corner_orders() != orders {
                        continue;
                    }
                    if family == Family::ZPrime && barred && k == 0 && l == 0 {
                        continue;
                    }
                    out.push(label);
                }
            }
        }
    }
    out
}

/// All catalogue core labels with corner-order sum at most `bound`.
pub fn core_labels_up_to(bound: usize) -> Vec<NetLabel> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for barred in [false, true] {
            for k in 0..=bound {
                for l in 0..=bound {
                    let label = NetLabel::new(family, barred, k, l);
                    if label.check().is_err() || label.sigma() > bound {
                        continue;
                    }
                    if family == Family::ZPrime && barred && k == 0 && l == 0 {
                        continue;
                    }
                    out.push(label);
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
    fn strict_digons() {
        for s in ["S[1,1]", "Z'[1,0]", "Z'[0,1]"] {
            let core: NetLabel = s.parse().unwrap();
            let sides = forbidden_digon_sides(&core);
            assert_eq!(sides.len(), 1, "{s}");
            let with = core.clone().with_digon(sides[0], super::super::label::DigonKind::D15, 1);
            assert!(build(&with).is_ok());
            assert!(matches!(build_strict(&with), Err(Error::ForbiddenSide(_))));
        }
        let r: NetLabel = "R[1,1]".parse().unwrap();
        assert!(forbidden_digon_sides(&r).is_empty());
    }
    use crate::angles::table;
    use crate::net::validate_net;

    #[test]
    fn catalogue_scan() {
        let mut bad = Vec::new();
        for label in core_labels_up_to(5) {
            match build(&label) {
                Err(e) => bad.push(format!("{label}: {e}")),
                Ok(net) => {
                    let rep = validate_net(&net);
                    if !rep.valid || !rep.primitive {
                        bad.push(format!("{label}: {:?}", rep.violations));
                    }
                    if net.corner_orders() != label.core_corner_orders() {
                        bad.push(format!("{label}: orders {:?}", net.corner_orders()));
                    }
                    let want = table::lookup(label.family, label.barred, label.k, label.l);
                    if want != Some(net.complement_mask()) {
                        bad.push(format!("{label}: mask {:04b} table {:?}", net.complement_mask(), want));
                    }
                }
            }
        }
        assert!(bad.is_empty(), "{}", bad.join("\n"));
    }
}
