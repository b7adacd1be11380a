use sphquad::builders::{
    attach_digon, base_net, build, extend_side, insert_pmu, reduction_witnesses, triangle_variants, NetLabel, Seed,
    SideDir, TriangleKind,
};
use sphquad::net::{decompose_arcs, is_isomorphic, validate_net, ArcClass, IsoMode, VertexKind};
use sphquad::partition::{DARTS, FACES, P};
use sphquad::{Error, Net};

fn net(s: &str) -> Net {
    build(&s.parse::<NetLabel>().unwrap()).unwrap()
}

/// The sphere with one quadrilateral face removed, as a net.
fn complement_of_a_face() -> Net {
    let f0 = (0..FACES).find(|&f| P.face_len(f) == 4).unwrap();
    let mut index = vec![usize::MAX; DARTS];
    let mut pdart = Vec::new();
    for f in (0..FACES).filter(|&f| f != f0) {
        for &d in P.face_darts(f) {
            index[d] = pdart.len();
            pdart.push(d);
        }
    }
    let next: Vec<usize> = pdart.iter().map(|&d| index[P.next(d)]).collect();
    let opp: Vec<Option<usize>> = pdart.iter().map(|&d| Some(index[P.twin(d)]).filter(|&t| t != usize::MAX)).collect();
    let colour: Vec<usize> = pdart.iter().map(|&d| P.colour(d)).collect();
    let boundary: Vec<usize> = (0..pdart.len()).filter(|&d| opp[d].is_none()).collect();
    assert_eq!(boundary.len(), 4);
    // Each boundary edge is a whole side; order them along the boundary.
    let probe = Net::from_parts(next.clone(), opp.clone(), colour.clone(), pdart.clone(), [boundary[0]; 4]).unwrap();
    let mut corners = [boundary[0]; 4];
    for j in 1..4 {
        corners[j] = probe.boundary_next(corners[j - 1]);
    }
    Net::from_parts(next, opp, colour, pdart, corners).unwrap()
}

#[test]
fn basic_quadrilateral() {
    let p0 = net("P0");
    let r = validate_net(&p0);
    assert!(r.valid && r.generic && r.primitive);
    let arcs = decompose_arcs(&p0);
    assert_eq!(arcs.count(ArcClass::Lateral), 4);
    assert_eq!(arcs.arcs.len(), 4);
}

#[test]
fn face_complement_is_reducible() {
    let q = complement_of_a_face();
    let r = validate_net(&q);
    assert!(r.valid, "{:?}", r.violations);
    assert!(!r.irreducible);
    // What is left of each circle runs from corner to corner.
    assert_eq!(decompose_arcs(&q).count(ArcClass::Diagonal), 4);
}

#[test]
fn x_prime_00_has_two_separators_at_its_corner() {
    let n = net("X'[0,0]");
    assert_eq!(n.corner_orders(), [0, 0, 0, 1]);
    assert!(n.side_orders().contains(&2));
    let arcs = decompose_arcs(&n);
    let seps: Vec<_> = arcs.arcs.iter().filter(|a| a.class == ArcClass::Separator).collect();
    assert_eq!(seps.len(), 2);
    let kinds = n.vertex_kinds();
    for s in seps {
        let ends = [s.vertices[0], *s.vertices.last().unwrap()];
        assert!(ends.iter().any(|&v| kinds[v] == VertexKind::Corner(3)), "{s:?}");
    }
}

#[test]
fn p1_has_four_loops() {
    let n = net("P0 mu=1");
    assert_eq!(decompose_arcs(&n).count(ArcClass::Loop), 4);
    assert!(is_isomorphic(&n, &insert_pmu(&net("P0"), 1).unwrap(), IsoMode::Labeled).is_some());
}

#[test]
fn corner_orders_of_families() {
    for k in 0..4 {
        for l in (0..4).filter(|l| k + l > 0) {
            let mut o = net(&format!("X[{k},{l}]")).corner_orders();
            o.sort();
            assert_eq!(o, [0, 0, 0, k + l]);
        }
    }
    for mu in 1..3 {
        let n = net(&format!("P0 mu={mu}"));
        let o = n.corner_orders();
        assert!((o[0] == 2 * mu && o[2] == 2 * mu) || (o[1] == 2 * mu && o[3] == 2 * mu), "{o:?}");
        assert_eq!(n.side_orders(), [1; 4]);
    }
    let z = net("Z'[0,0]").corner_orders();
    assert!(z == [0, 1, 0, 1] || z == [1, 0, 1, 0]);
}

#[test]
fn x_and_its_reflection_differ_with_labels() {
    for (k, l) in [(0, 1), (1, 0), (1, 2), (2, 2)] {
        let a = net(&format!("X[{k},{l}]"));
        let b = net(&format!("Xbar[{k},{l}]"));
        assert!(is_isomorphic(&a, &b, IsoMode::Labeled).is_none(), "X[{k},{l}]");
    }
}

#[test]
fn extension_composes() {
    let p0 = base_net(Seed::P0);
    let twice = extend_side(&extend_side(&p0, 0, SideDir::After, 1).unwrap(), 0, SideDir::After, 1).unwrap();
    let once = extend_side(&p0, 0, SideDir::After, 2).unwrap();
    assert!(is_isomorphic(&twice, &once, IsoMode::Labeled).is_some());
    for (k, l) in [(1, 1), (2, 1), (3, 1), (2, 2)] {
        let x = extend_side(&extend_side(&p0, 0, SideDir::After, k).unwrap(), 2, SideDir::Before, l).unwrap();
        assert!(is_isomorphic(&x, &net(&format!("X[{k},{l}]")), IsoMode::Unlabeled).is_some());
        let r = extend_side(&extend_side(&p0, 0, SideDir::After, k).unwrap(), 1, SideDir::Before, l).unwrap();
        assert!(is_isomorphic(&r, &net(&format!("R[{k},{l}]")), IsoMode::Unlabeled).is_some());
    }
}

#[test]
fn pmu_insertion() {
    for mu in 1..3 {
        let a = insert_pmu(&net(&format!("P0 mu={mu}")), 1).unwrap();
        assert!(is_isomorphic(&a, &net(&format!("P0 mu={}", mu + 1)), IsoMode::Unlabeled).is_some());
    }
    assert_eq!(insert_pmu(&net("R[1,1]"), 1).unwrap_err(), Error::NoEligibleFace);
}

#[test]
fn digons() {
    let d = attach_digon(&net("P0"), 1, 1).unwrap();
    assert!(is_isomorphic(&d, &net("P0 + D15@side1"), IsoMode::Labeled).is_some());
    let host = net("X'[0,0]");
    let two = (0..4).find(|&j| host.side(j).len() == 2).unwrap();
    assert!(build(&format!("X'[0,0] + D24@side{two}").parse().unwrap()).is_ok());
    assert!(build(&format!("X'[0,0] + D15@side{two}").parse().unwrap()).is_err());
}

#[test]
fn reductions_of_examples() {
    assert_eq!(reduction_witnesses(&net("S[1,1] + D15@side0")).len(), 4);
    let u = net("U[2,1]");
    let ws = reduction_witnesses(&net("X[1,2] + D24@side0"));
    assert!(ws.iter().any(|w| is_isomorphic(&w.core, &u, IsoMode::Unlabeled).is_some()));
    let zb = net("Z'bar[0,1]");
    let ws = reduction_witnesses(&net("Z'[0,1] + D15@side1"));
    assert!(ws.iter().any(|w| is_isomorphic(&w.core, &zb, IsoMode::Unlabeled).is_some()));
}

#[test]
fn e1_has_four_variants() {
    assert_eq!(triangle_variants(TriangleKind::E), 4);
}
