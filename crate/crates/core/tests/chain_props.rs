use std::collections::BTreeMap;

use proptest::prelude::*;

use sphquad::angles::{
    fixed_angles_for_net, net_feasible, pyramid_membership, AngleVector, Direction, FixedAngleQuad, Scalar,
};
use sphquad::builders::NetLabel;
use sphquad::chains::{build_chains, net_neighbors, transition, Scope};

fn lab(s: &str) -> NetLabel {
    s.parse().unwrap()
}

/// Members of each catalogued diagram, keyed by integer parts.
fn diagrams() -> Vec<([usize; 4], Vec<NetLabel>)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        let mut v = Vec::new();
        for m in 0..=n {
            v.push(lab(&format!("X[{m},{}]", n - m)));
            if m < n {
                v.push(lab(&format!("X'[{m},{}]", n - m - 1)));
            }
        }
        out.push(([0, 0, 0, n], v));
    }
    let fixed: [([usize; 4], &[&str]); 5] = [
        ([0, 1, 0, 1], &["Z'[0,0]", "Z[1,0]", "Zbar[0,1]", "Z[0,1]", "Zbar[1,0]", "U[1,1]", "Ubar[1,1]"]),
        (
            [0, 1, 0, 2],
            &["Z[1,1]", "Z'[1,0]", "Z'[0,1]", "V[2,1]", "V'[2,1]", "Vbar[2,1]", "V'bar[2,1]", "U[2,1]", "Ubar[2,1]"],
        ),
        (
            [0, 1, 0, 3],
            &[
                "Z'[1,1]",
                "Z[2,1]",
                "Z[1,2]",
                "Z'[2,0]",
                "Z'[0,2]",
                "V[3,1]",
                "V'[3,1]",
                "Vbar[3,1]",
                "V'bar[3,1]",
                "U[3,1]",
                "Ubar[3,1]",
            ],
        ),
        ([0, 2, 0, 2], &["W[2,2]", "V[2,2]", "V'[2,2]", "U[2,2]"]),
        ([0, 0, 1, 1], &["R[1,1]", "S[1,1]"]),
    ];
    for (o, names) in fixed {
        out.push((o, names.iter().map(|s| lab(s)).collect()));
    }
    out
}

fn exact_frac() -> impl Strategy<Value = [Scalar; 4]> {
    proptest::array::uniform4(1i64..1000).prop_map(|p| p.map(|n| Scalar::ratio(n, 1000)))
}

fn same(a: &FixedAngleQuad, b: &FixedAngleQuad) -> bool {
    a.mask() == b.mask() && a.values == b.values
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn transition_is_an_involution(x in exact_frac(), mask in 0u8..16, k in 0usize..4) {
        let mut q = sphquad::angles::apply_mask(&x, 0);
        for j in 0..4 {
            q.complement[j] = mask >> j & 1 == 1;
        }
        prop_assume!(pyramid_membership(&q.values).is_interior());
        let dir = Direction::ALL[k];
        if let Ok(t) = transition(&q, dir) {
            prop_assert!(same(&transition(&t, dir).unwrap(), &q));
        }
    }

    #[test]
    fn chains_partition_the_feasible_members(d in 0usize..9, x in exact_frac()) {
        let (orders, members) = &diagrams()[d];
        let a = AngleVector::new(*orders, x).unwrap();
        let chains = build_chains(&a, &Scope::all());
        let mut seen: BTreeMap<String, usize> = BTreeMap::new();
        for c in &chains {
            prop_assert_eq!(c.nets.len(), c.length + 1);
            prop_assert_eq!(c.transitions.len(), c.length);
            for l in &c.nets {
                *seen.entry(l.to_string()).or_default() += 1;
            }
            if c.both_degenerate() {
                prop_assert!(c.parity_law_holds(), "{:?}", c.nets);
            }
        }
        prop_assert!(seen.values().all(|n| *n == 1), "{seen:?}");
        for m in members {
            if net_feasible(m, &a).unwrap().feasible {
                prop_assert!(seen.contains_key(&m.to_string()), "{m} is feasible but in no chain");
            }
        }
    }

    #[test]
    fn neighbours_match_transitions(d in 0usize..9, x in exact_frac()) {
        let (orders, members) = &diagrams()[d];
        let a = AngleVector::new(*orders, x).unwrap();
        for m in members {
            let Ok(ns) = net_neighbors(m, &a) else { continue };
            let q = fixed_angles_for_net(m, &a).unwrap();
            for n in ns {
                let t = transition(&q, n.direction).unwrap();
                prop_assert!(same(&t, &fixed_angles_for_net(&n.label, &a).unwrap()), "{m} -> {}", n.label);
                prop_assert!(net_feasible(&n.label, &a).unwrap().feasible);
            }
        }
    }

    #[test]
    fn v_and_v_prime_never_coexist(k in 1usize..4, l in 1usize..4, x in exact_frac(), barred in any::<bool>()) {
        let v = sphquad::builders::NetLabel::new(sphquad::builders::Family::V, barred, k + 1, l);
        let vp = sphquad::builders::NetLabel::new(sphquad::builders::Family::VPrime, barred, k + 1, l);
        prop_assume!(v.check().is_ok() && vp.check().is_ok());
        let a = AngleVector::new(v.core_corner_orders(), x).unwrap();
        let (Ok(fv), Ok(fvp)) = (net_feasible(&v, &a), net_feasible(&vp, &a)) else { return Ok(()) };
        prop_assert!(!(fv.feasible && fvp.feasible), "{v} and {vp} at {a}");
    }
}
