use proptest::prelude::*;

use sphquad::builders::{build, classify, enumerate_primitive, Family, NetLabel};
use sphquad::net::{canonical_code, decompose_arcs, is_isomorphic, unlabeled_code, validate_net, ArcClass, IsoMode};
use sphquad::Net;

fn labels() -> Vec<NetLabel> {
    let mut out = vec![NetLabel::p0()];
    for fam in Family::ALL.into_iter().filter(|f| *f != Family::P) {
        for barred in [false, true] {
            for k in 0..=3 {
                for l in 0..=3 {
                    for mu in 0..=1 {
                        let label = NetLabel::new(fam, barred, k, l).with_mu(mu);
                        if label.check().is_ok() {
                            out.push(label);
                        }
                    }
                }
            }
        }
    }
    out
}

/// A catalogue label, optionally with one digon stack on a side.
fn label() -> impl Strategy<Value = NetLabel> {
    let base = labels();
    (0..base.len(), 0usize..4, 0usize..3, 1usize..3).prop_filter_map("buildable", move |(i, side, kind, count)| {
        let mut l = base[i].clone();
        if kind > 0 {
            let text = format!("{l} + D{}@side{side} x{count}", if kind == 1 { 15 } else { 24 });
            l = text.parse().ok()?;
        }
        build(&l).ok().map(|_| l)
    })
}

fn net_of(l: &NetLabel) -> Net {
    build(l).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn built_nets_are_valid(l in label()) {
        let net = net_of(&l);
        let report = validate_net(&net);
        prop_assert!(report.valid, "{l}: {:?}", report.violations);
        prop_assert!(!decompose_arcs(&net).arcs.iter().any(|a| a.joins_opposite_corners()), "{l} has an arc between opposite corners");
        for o in net.side_orders() {
            prop_assert!(o % 3 != 0, "{l} has a side of order {o}");
        }
        if net.corner_orders() == [0; 4] {
            let interior = decompose_arcs(&net).arcs.iter().filter(|a| a.class != ArcClass::Lateral).count();
            prop_assert_eq!(interior, 0, "{} has interior arcs", l);
        }
    }

    #[test]
    fn primitive_corner_orders_follow_the_label(l in label()) {
        if l.is_primitive() && l.mu == 0 {
            prop_assert_eq!(net_of(&l).corner_orders(), l.core_corner_orders());
        }
    }

    #[test]
    fn codes_agree_with_isomorphism(a in label(), b in label(), r in 0usize..4) {
        let (x, y) = (net_of(&a), net_of(&b).rotated(r));
        for mode in [IsoMode::Labeled, IsoMode::Unlabeled] {
            let code = |n: &Net| if mode == IsoMode::Labeled { canonical_code(n) } else { unlabeled_code(n) };
            prop_assert_eq!(code(&x) == code(&y), is_isomorphic(&x, &y, mode).is_some());
            prop_assert!(is_isomorphic(&x, &x, mode).is_some());
            prop_assert_eq!(is_isomorphic(&x, &y, mode).is_some(), is_isomorphic(&y, &x, mode).is_some());
        }
        prop_assert!(is_isomorphic(&y, &net_of(&b), IsoMode::Unlabeled).is_some());
    }

    #[test]
    fn classification_rebuilds_an_isomorphic_net(l in label(), r in 0usize..4) {
        if l.is_primitive() {
            let net = net_of(&l).rotated(r);
            let c = classify(&net).unwrap();
            prop_assert!(is_isomorphic(&net_of(&c.label), &net.rotated(c.rotation), IsoMode::Labeled).is_some(), "{l} -> {}", c.label);
        }
    }
}

#[test]
fn isomorphism_is_transitive_on_rotations() {
    let net = net_of(&"Z'[1,0]".parse().unwrap());
    let rots: Vec<Net> = (0..4).map(|r| net.rotated(r)).collect();
    for a in &rots {
        for b in &rots {
            for c in &rots {
                let ab = is_isomorphic(a, b, IsoMode::Unlabeled).is_some();
                let bc = is_isomorphic(b, c, IsoMode::Unlabeled).is_some();
                if ab && bc {
                    assert!(is_isomorphic(a, c, IsoMode::Unlabeled).is_some());
                }
            }
        }
    }
}

#[test]
fn catalogue_is_closed_under_reflection() {
    let all = enumerate_primitive(3);
    let names: Vec<String> = all.iter().map(|(l, _)| l.to_string()).collect();
    for (l, net) in &all {
        let mut m = l.clone();
        m.barred = !m.barred;
        let mirror = net.mirrored(0);
        let present = names.contains(&m.to_string())
            || all.iter().any(|(_, n)| is_isomorphic(n, &mirror, IsoMode::Unlabeled).is_some());
        assert!(present, "no reflection of {l}");
    }
}

#[test]
fn one_big_corner_means_x_family() {
    for (l, net) in enumerate_primitive(4) {
        if net.corner_orders().iter().filter(|o| **o > 0).count() == 1 {
            assert!(matches!(l.family, Family::X | Family::XPrime), "{l}");
        }
    }
}
