use std::cmp::Ordering;

use proptest::prelude::*;

use sphquad::angles::{
    apply_mask, closure_condition, degeneration_directions, fixed_angles_for_net, lattice_distance, net_feasible,
    pyramid_membership, pyramid_membership_f64, AngleVector, Direction, Facet, Scalar,
};
use sphquad::builders::{Family, NetLabel};

fn exact_frac() -> impl Strategy<Value = [Scalar; 4]> {
    proptest::array::uniform4(1i64..1000).prop_map(|p| p.map(|n| Scalar::ratio(n, 1000)))
}

fn label() -> impl Strategy<Value = NetLabel> {
    let fams: Vec<Family> = Family::ALL.into_iter().filter(|f| *f != Family::P).collect();
    (0..fams.len(), any::<bool>(), 0usize..5, 0usize..5, 0usize..3)
        .prop_map(move |(f, b, k, l, mu)| NetLabel::new(fams[f], b, k, l).with_mu(mu))
        .prop_filter("valid label", |l| l.check().is_ok())
}

fn even_masks() -> impl Iterator<Item = u8> {
    (0u8..16).filter(|m| m.count_ones() % 2 == 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn never_both_directions_of_a_pair(x in exact_frac()) {
        if let Ok(dirs) = degeneration_directions(&x) {
            prop_assert!(dirs[0].is_vertical() != dirs[1].is_vertical());
            prop_assert!(dirs[0] != dirs[1].opposite());
        }
    }

    #[test]
    fn complements_have_the_parity_of_the_orders(l in label(), x in exact_frac()) {
        let a = AngleVector::new(l.core_corner_orders(), x).unwrap();
        let q = fixed_angles_for_net(&l, &a).unwrap();
        prop_assert_eq!(q.complement_count() % 2, l.sigma() % 2);
    }

    #[test]
    fn exact_and_float_membership_agree(x in exact_frac()) {
        let exact = pyramid_membership(&x).is_interior();
        let fx = x.map(|s| s.to_f64());
        let near = Facet::ALL.iter().any(|f| f.form().eval(&x).sign() == Ordering::Equal);
        if !near {
            prop_assert_eq!(exact, pyramid_membership_f64(fx).is_interior());
        }
    }

    /// The even-pattern pyramids tile the region at distance more than one
    /// from the odd lattice, less the centre.
    #[test]
    fn even_pyramids_cover_the_closure_region(x in exact_frac()) {
        let on_facet = even_masks().any(|m| {
            let q = apply_mask(&x, m);
            Facet::ALL.iter().any(|f| f.form().eval(&q.values).sign() == Ordering::Equal)
        });
        prop_assume!(!on_facet);
        let union = even_masks().any(|m| pyramid_membership(&apply_mask(&x, m).values).is_interior());
        let dist = lattice_distance(&x, 1);
        let centre = x.iter().all(|v| *v == Scalar::ratio(1, 2));
        prop_assert_eq!(union, dist.cmp_tol(&Scalar::int(1)) == Ordering::Greater && !centre);
        let a = AngleVector::new([0, 0, 0, 0], x).unwrap();
        prop_assert_eq!(union, closure_condition(&a));
    }

    #[test]
    fn feasible_nets_satisfy_closure(l in label(), x in exact_frac()) {
        let a = AngleVector::new(l.core_corner_orders(), x).unwrap();
        if net_feasible(&l, &a).unwrap().feasible {
            prop_assert!(closure_condition(&a), "{l} feasible at {a} but closure fails");
        }
    }
}

#[test]
fn direction_masks_partition_the_corners() {
    for d in Direction::ALL {
        assert_eq!(d.complement_mask() & d.opposite().complement_mask(), 0);
        assert_eq!(d.complement_mask() | d.opposite().complement_mask(), 0b1111);
    }
}
