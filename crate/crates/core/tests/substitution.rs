use std::collections::BTreeSet;

use aperiodica_core::analysis::orientation_set;
use aperiodica_core::catalog::{
    make_kite_dart, make_pinwheel, make_quaquaversal, make_thue_morse, morse_label_at, SYSTEM_NAMES,
};
use aperiodica_core::catalog::system_by_name;
use aperiodica_core::substitution::{
    dominant_eigen, expand, locate, matrix_power_apply, subdivide, substitution_matrix,
    tile_intersects, type_counts, Window,
};
use aperiodica_core::{Orientation, OrientationKey2, Placement};
use proptest::prelude::*;

fn near(a: [f64; 3], b: [f64; 3], tol: f64) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

#[test]
fn children_per_rule() {
    for (sys, n) in [(make_pinwheel(), 5), (make_thue_morse(), 4), (make_quaquaversal(), 8)] {
        let root = sys.root(0, 1);
        assert_eq!(subdivide(&root, &sys).unwrap().len(), n, "{}", sys.name);
    }
    let kd = make_kite_dart();
    assert_eq!(subdivide(&kd.root(0, 1), &kd).unwrap().len(), 3);
}

#[test]
fn level_zero_is_the_root() {
    for name in SYSTEM_NAMES {
        let sys = system_by_name(name).unwrap();
        let tiles = expand(&sys, 0, 0, None).unwrap();
        assert_eq!(tiles.len(), 1);
        assert!(tiles[0].address.is_empty());
        assert_eq!(tiles[0].orientation(), sys.identity_placement().orientation());
        assert_eq!(tiles[0].placement.translation(), [0.0; 3]);
    }
}

#[test]
fn count_law_matches_matrix_powers() {
    let limits = [("pinwheel", 6), ("quaquaversal", 4), ("thue-morse", 6), ("kite-dart", 12)];
    for (name, max) in limits {
        let sys = system_by_name(name).unwrap();
        let m = substitution_matrix(&sys);
        for root in 0..sys.prototiles.len() {
            let mut unit = vec![0; sys.prototiles.len()];
            unit[root] = 1;
            for level in 0..=max {
                let tiles = expand(&sys, root, level, None).unwrap();
                let predicted = matrix_power_apply(&m, &unit, level).unwrap();
                let counted: Vec<u128> = type_counts(&tiles, sys.prototiles.len())
                    .into_iter()
                    .map(u128::from)
                    .collect();
                assert_eq!(counted, predicted, "{name} root {root} level {level}");
            }
        }
    }
}

#[test]
fn substitution_matrices() {
    assert_eq!(substitution_matrix(&make_pinwheel()), vec![vec![5]]);
    assert_eq!(substitution_matrix(&make_kite_dart()), vec![vec![2, 1], vec![1, 1]]);
    assert_eq!(substitution_matrix(&make_thue_morse()), vec![vec![2, 2], vec![2, 2]]);
    assert_eq!(substitution_matrix(&make_quaquaversal()), vec![vec![8]]);
}

#[test]
fn perron_eigenvalue_is_the_measure_scaling() {
    for name in SYSTEM_NAMES {
        let sys = system_by_name(name).unwrap();
        let (l, v) = dominant_eigen(&substitution_matrix(&sys)).unwrap();
        let expected = sys.ratio.value.powi(sys.dimension as i32);
        assert!((l - expected).abs() < 1e-9 * expected, "{name}: {l} vs {expected}");
        assert!(v.iter().all(|&x| x > 0.0));
    }
}

#[test]
fn leaves_have_unit_size_and_tile_the_supertile() {
    for name in SYSTEM_NAMES {
        let sys = system_by_name(name).unwrap();
        let level = 3;
        let tiles = expand(&sys, 0, level, None).unwrap();
        let total: f64 = tiles.iter().map(|t| sys.prototiles[t.prototile].shape.measure()).sum();
        let root_measure = sys.prototiles[0].shape.measure()
            * sys.ratio.value.powi((level * sys.dimension) as i32);
        assert!((total - root_measure).abs() < 1e-9 * root_measure, "{name}");
        assert!(tiles.iter().all(|t| t.scale == 1.0 || (t.scale - 1.0).abs() < 1e-12));
    }
}

#[test]
fn addresses_reproduce_placements() {
    for name in SYSTEM_NAMES {
        let sys = system_by_name(name).unwrap();
        let tiles = expand(&sys, 0, 4, None).unwrap();
        for t in tiles.iter().step_by(7) {
            let again = locate(&sys, 0, 4, &t.address).unwrap();
            assert_eq!(again.prototile, t.prototile);
            assert_eq!(again.orientation(), t.orientation());
            for (a, b) in again.vertices(&sys).iter().zip(t.vertices(&sys)) {
                assert!(near(*a, b, 1e-9), "{name} {:?}", t.address);
            }
        }
    }
}

#[test]
fn output_order_is_independent_of_worker_count() {
    for name in SYSTEM_NAMES {
        let sys = system_by_name(name).unwrap();
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            pool.install(|| expand(&sys, 0, 4, None).unwrap())
        };
        let one = run(1);
        let many = run(6);
        assert_eq!(one, many, "{name}");
        let addresses: Vec<&Vec<u8>> = one.iter().map(|t| &t.address).collect();
        let mut sorted = addresses.clone();
        sorted.sort();
        assert_eq!(addresses, sorted);
    }
}

#[test]
fn thue_morse_grid_matches_popcount() {
    let sys = make_thue_morse();
    for level in 0..=6usize {
        let tiles = expand(&sys, 0, level, None).unwrap();
        let side = 1u64 << level;
        let mut seen = BTreeSet::new();
        for t in &tiles {
            let v = t.vertices(&sys);
            let (i, j) = (v[0][0].round() as u64, v[0][1].round() as u64);
            assert!(i < side && j < side);
            assert!(seen.insert((i, j)));
            let letter = sys.prototiles[t.prototile].label.chars().next().unwrap();
            assert_eq!(letter, morse_label_at(i, j), "cell ({i},{j}) at level {level}");
        }
    }
    let level1 = expand(&sys, 0, 1, None).unwrap();
    let labels: String = level1
        .iter()
        .map(|t| sys.prototiles[t.prototile].label.as_str())
        .collect();
    assert_eq!(labels, "abba");
    assert_eq!(morse_label_at(3, 5), 'a');
}

#[test]
fn pinwheel_children_include_irrational_turns() {
    let sys = make_pinwheel();
    let keys: Vec<OrientationKey2> = sys.rules[0]
        .children
        .iter()
        .map(|c| match &c.placement {
            Placement::Plane(f) => f.orientation,
            Placement::Space(_) => unreachable!(),
        })
        .collect();
    assert!(keys.iter().any(|k| k.alpha_count != 0));
    assert!(keys.iter().any(|k| k.reflected) && keys.iter().any(|k| !k.reflected));
}

#[test]
fn pinwheel_orientations_stay_in_the_linear_envelope() {
    let sys = make_pinwheel();
    for level in 0..=6 {
        let set = orientation_set(&sys, 0, level).unwrap();
        for o in &set {
            let Orientation::Planar(k) = o else { unreachable!() };
            assert!(k.alpha_count.unsigned_abs() as usize <= level, "{k:?} at level {level}");
        }
    }
}

#[test]
fn orientation_sets_agree_with_expansion() {
    for name in SYSTEM_NAMES {
        let sys = system_by_name(name).unwrap();
        for level in 0..=4 {
            let from_tiles: BTreeSet<Orientation> = expand(&sys, 0, level, None)
                .unwrap()
                .iter()
                .map(|t| t.orientation())
                .collect();
            assert_eq!(from_tiles, orientation_set(&sys, 0, level).unwrap(), "{name} {level}");
        }
    }
}

#[test]
fn kite_dart_ratio_approaches_phi_monotonically() {
    let sys = make_kite_dart();
    let m = substitution_matrix(&sys);
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut last = f64::INFINITY;
    for level in 6..=12 {
        let c = matrix_power_apply(&m, &[1, 0], level).unwrap();
        let err = (c[0] as f64 / c[1] as f64 - phi).abs();
        assert!(err < last, "level {level}");
        last = err;
    }
    let tiles = expand(&sys, 0, 12, None).unwrap();
    let c = type_counts(&tiles, 2);
    assert!((c[0] as f64 / c[1] as f64 / phi - 1.0).abs() < 0.01);
}

#[test]
fn kite_dart_uses_ten_rotations_only() {
    let sys = make_kite_dart();
    let set = orientation_set(&sys, 0, 10).unwrap();
    assert!(set.len() <= 20);
    for o in set {
        let Orientation::Planar(k) = o else { unreachable!() };
        assert_eq!(k.alpha_count, 0);
        assert_eq!(k.turn_modulus, 10);
    }
}

#[test]
fn quaquaversal_rotations_are_exact_units() {
    let sys = make_quaquaversal();
    for c in &sys.rules[0].children {
        let Orientation::Spatial(q) = c.placement.orientation() else { unreachable!() };
        assert!(q.norm_squared().is_one());
        let m = q.to_matrix();
        for i in 0..3 {
            for j in 0..3 {
                let dot: f64 = (0..3).map(|k| m[i][k] * m[j][k]).sum();
                assert!((dot - if i == j { 1.0 } else { 0.0 }).abs() < 1e-12);
            }
        }
    }
}

fn brute_force_window(name: &str, level: usize, w: &Window) {
    let sys = system_by_name(name).unwrap();
    let all = expand(&sys, 0, level, None).unwrap();
    let expected: Vec<_> = all.into_iter().filter(|t| tile_intersects(&sys, t, w)).collect();
    let got = expand(&sys, 0, level, Some(w)).unwrap();
    assert_eq!(got, expected);
}

#[test]
fn window_on_a_shared_edge_keeps_both_neighbours() {
    // The closed window touching x = 1 meets the first and second columns.
    let w = Window::planar(1.0, 0.25, 1.0, 0.75).unwrap();
    let sys = make_thue_morse();
    let got = expand(&sys, 0, 2, Some(&w)).unwrap();
    assert_eq!(got.len(), 2);
    brute_force_window("thue-morse", 2, &w);
}

#[test]
fn spatial_windows() {
    let w = Window::new([0.5, 0.5, 0.5], [2.0, 2.5, 3.0]).unwrap();
    brute_force_window("quaquaversal", 3, &w);
    let far = Window::new([100.0, 100.0, 100.0], [101.0, 101.0, 101.0]).unwrap();
    let sys = make_quaquaversal();
    assert!(expand(&sys, 0, 3, Some(&far)).unwrap().is_empty());
}

/// Convex polygon vs closed box, by edge crossings and containment.
fn polygon_meets_box(poly: &[[f64; 3]], w: &Window) -> bool {
    let inside_box = |p: [f64; 2]| {
        p[0] >= w.min[0] && p[0] <= w.max[0] && p[1] >= w.min[1] && p[1] <= w.max[1]
    };
    let pts: Vec<[f64; 2]> = poly.iter().map(|v| [v[0], v[1]]).collect();
    if pts.iter().any(|&p| inside_box(p)) {
        return true;
    }
    let corners = [
        [w.min[0], w.min[1]],
        [w.max[0], w.min[1]],
        [w.max[0], w.max[1]],
        [w.min[0], w.max[1]],
    ];
    let side = |a: [f64; 2], b: [f64; 2], p: [f64; 2]| {
        (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
    };
    let n = pts.len();
    let in_poly = |p: [f64; 2]| {
        let s: Vec<f64> = (0..n).map(|i| side(pts[i], pts[(i + 1) % n], p)).collect();
        s.iter().all(|&v| v >= 0.0) || s.iter().all(|&v| v <= 0.0)
    };
    if corners.iter().any(|&c| in_poly(c)) {
        return true;
    }
    let crosses = |a: [f64; 2], b: [f64; 2], c: [f64; 2], d: [f64; 2]| {
        side(a, b, c) * side(a, b, d) <= 0.0 && side(c, d, a) * side(c, d, b) <= 0.0
    };
    (0..n).any(|i| (0..4).any(|j| crosses(pts[i], pts[(i + 1) % n], corners[j], corners[(j + 1) % 4])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn separating_axes_agree_with_crossing_test(
        x in -2.0f64..14.0, y in -2.0f64..8.0, w in 0.01f64..3.0, h in 0.01f64..3.0,
    ) {
        let sys = make_pinwheel();
        let win = Window::planar(x, y, x + w, y + h).unwrap();
        for t in expand(&sys, 0, 3, None).unwrap() {
            prop_assert_eq!(
                tile_intersects(&sys, &t, &win),
                polygon_meets_box(&t.vertices(&sys), &win)
            );
        }
    }

    #[test]
    fn pinwheel_window_pruning_is_sound(
        level in 1usize..=5,
        x in -5.0f64..60.0, y in -5.0f64..30.0,
        w in 0.0f64..15.0, h in 0.0f64..15.0,
    ) {
        let win = Window::planar(x, y, x + w, y + h).unwrap();
        brute_force_window("pinwheel", level, &win);
    }

    #[test]
    fn kite_dart_window_pruning_is_sound(
        x in -5.0f64..20.0, y in -5.0f64..15.0, w in 0.0f64..8.0, h in 0.0f64..8.0,
    ) {
        let win = Window::planar(x, y, x + w, y + h).unwrap();
        brute_force_window("kite-dart", 6, &win);
    }
}
