use proptest::prelude::*;

use sphquad::angles::{pyramid_membership_f64, Direction};
use sphquad::geometry::{continue_to_triple, parameter_interval, realize_config, FourCircleConfig};
use sphquad::Vec3;

/// Interior points of the pyramid, kept away from its facets.
fn quad() -> impl Strategy<Value = [f64; 4]> {
    [0.02..0.98f64, 0.02..0.98f64, 0.02..0.98f64, 0.02..0.98f64].prop_filter("inside the pyramid", |q| {
        let [a, b, c, d] = *q;
        let s = a + b + c + d;
        let m = a.min(b).min(c).min(d);
        pyramid_membership_f64(*q).is_interior() && s - 2.0 > 0.02 && 2.0 * m - (s - 2.0) > 0.02
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn realized_angles_and_total_area(q in quad(), u in 0.1..0.9f64) {
        let [a, b, c, d] = q;
        let (lo, hi) = parameter_interval(a, b, c, d).unwrap();
        let cfg = realize_config(a, b, c, d, lo + (hi - lo) * u).unwrap();
        let got = cfg.face_angles().unwrap().abcd();
        for j in 0..4 {
            prop_assert!((got[j] - q[j]).abs() < 1e-9, "{got:?} vs {q:?}");
        }
        let total: f64 = cfg.face_areas().unwrap().iter().map(|f| f.area).sum();
        prop_assert!((total - 4.0).abs() < 1e-9);
    }

    #[test]
    fn e_and_z_move_oppositely(q in quad(), k in 0usize..4) {
        let [a, b, c, d] = q;
        let dir = Direction::ALL[k];
        if let Ok(def) = continue_to_triple(a, b, c, d, dir) {
            for w in def.steps.windows(2) {
                let de = w[1].angles.e - w[0].angles.e;
                let dz = w[1].angles.z - w[0].angles.z;
                prop_assert!(de * dz <= 1e-12, "e and z both moved the same way: {de} {dz}");
            }
        }
    }

    #[test]
    fn triple_detection_ignores_rotation_and_sign(
        q in quad(),
        axis in [-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64],
        angle in 0.0..std::f64::consts::TAU,
        flips in proptest::array::uniform4(any::<bool>()),
    ) {
        let [a, b, c, d] = q;
        let k = Vec3::new(axis[0], axis[1], axis[2]);
        prop_assume!(k.norm() > 0.1);
        let k = k.normalized();
        for dir in Direction::ALL {
            let Ok(def) = continue_to_triple(a, b, c, d, dir) else { continue };
            let base = def.limit.detect_triple(1e-6);
            prop_assert!(base.contains(&def.triple));
            let mut normals = def.limit.normals.map(|n| n.rotate(&k, angle));
            for (n, f) in normals.iter_mut().zip(flips) {
                if f {
                    *n = -*n;
                }
            }
            let moved = FourCircleConfig::new(normals).unwrap();
            prop_assert_eq!(moved.detect_triple(1e-6), base);
        }
    }
}

#[test]
fn narrow_parameter_window_is_found() {
    // Admissible e lies in a window about 1e-3 wide just above a+b-1.
    let q = [0.9567469629199696, 0.44808031721430636, 0.06448425748760335, 0.59800331164527];
    let (lo, hi) = parameter_interval(q[0], q[1], q[2], q[3]).unwrap();
    assert!(lo > q[0] + q[1] - 1.0 - 1e-9 && hi - lo < 2e-3, "({lo}, {hi})");
    let cfg = realize_config(q[0], q[1], q[2], q[3], 0.5 * (lo + hi)).unwrap();
    let got = cfg.face_angles().unwrap().abcd();
    assert!((0..4).all(|j| (got[j] - q[j]).abs() < 1e-9));
}
