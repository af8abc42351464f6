use aperiodica_core::exact::{rat, BigRational};
use aperiodica_core::hyperbolic::{
    build_region, count_centers_per_tile, disk_centers, tile_area, BinaryTile, Choice,
    HalfPlaneWindow, Packing,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn choices(bits: &str) -> Vec<Choice> {
    bits.chars()
        .map(|c| if c == 'L' { Choice::LeftChild } else { Choice::RightChild })
        .collect()
}

#[test]
fn region_is_a_partition_of_the_window() {
    let w = HalfPlaneWindow::new(-7.3, 0.3, 11.9, 13.0).unwrap();
    let tiles = build_region(&choices("RLRR"), &w).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 10_000 {
        let x = rng.gen_range(w.x0..w.x1);
        let y = rng.gen_range(w.y0..w.y1);
        // skip points within 1e-9 of a tile boundary
        let near_edge = tiles.iter().any(|t| {
            let [x0, y0, x1, y1] = t.bounds();
            let inside_x = x > x0 - 1e-9 && x < x1 + 1e-9;
            let inside_y = y > y0 - 1e-9 && y < y1 + 1e-9;
            (inside_y && ((x - x0).abs() < 1e-9 || (x - x1).abs() < 1e-9))
                || (inside_x && ((y - y0).abs() < 1e-9 || (y - y1).abs() < 1e-9))
        });
        if near_edge {
            continue;
        }
        checked += 1;
        let (xr, yr) = (BigRational::from_float(x).unwrap(), BigRational::from_float(y).unwrap());
        assert_eq!(tiles.iter().filter(|t| t.contains(&xr, &yr)).count(), 1, "({x}, {y})");
    }
}

#[test]
fn tiles_in_a_region_are_disjoint() {
    let w = HalfPlaneWindow::new(-3.0, 0.5, 9.0, 7.0).unwrap();
    let tiles = build_region(&choices("RRL"), &w).unwrap();
    for (i, a) in tiles.iter().enumerate() {
        for b in &tiles[i + 1..] {
            let overlap_x = a.left() < b.right() && b.left() < a.right();
            assert!(!(overlap_x && a.level == b.level), "{a:?} {b:?}");
        }
    }
}

#[test]
fn choices_decide_the_upper_strips() {
    let w = HalfPlaneWindow::new(0.5, 2.5, 1.5, 3.5).unwrap();
    let left = build_region(&choices("L"), &w).unwrap();
    let right = build_region(&choices("R"), &w).unwrap();
    assert_eq!(left, vec![BinaryTile::new(1, 0)]);
    assert_eq!(right[0].left().to_f64(), -2.0);
}

#[test]
fn areas() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let t = BinaryTile::new(rng.gen_range(-20..=20), rng.gen_range(-1_000_000..1_000_000));
        assert!((tile_area(&t) - 1.0).abs() <= 1e-12);
    }
    // midpoint rule on the primary tile: integral of y^-2 over [1,2], times width 2
    let n = 100_000;
    let integral: f64 = (0..n)
        .map(|i| 1.0 + (i as f64 + 0.5) / n as f64)
        .map(|y| 2.0 / (y * y) / n as f64)
        .sum();
    assert!((integral - tile_area(&BinaryTile::PRIMARY)).abs() < 1e-9);
}

#[test]
fn quoted_disk_centers() {
    let primary = disk_centers(&[BinaryTile::PRIMARY], Packing::Original);
    assert_eq!((&primary[0].x, &primary[0].y), (&rat(1, 2), &rat(7, 4)));
    let shifted = disk_centers(&[BinaryTile::new(0, 0), BinaryTile::new(0, 1)], Packing::Shifted);
    let pts: Vec<_> = shifted.iter().map(|c| (c.x.clone(), c.y.clone())).collect();
    assert_eq!(pts, vec![(rat(3, 5), rat(21, 10)), (rat(3, 1), rat(21, 10))]);
    assert_eq!(shifted[1].source, BinaryTile::new(0, 1));
}

#[test]
fn shifted_counts_per_interior_tile() {
    // 20 primary-size tiles wide, 6 strips tall.
    let w = HalfPlaneWindow::new(0.0, 0.125, 40.0, 8.0).unwrap();
    let tiles = build_region(&choices("LLL"), &w).unwrap();
    let orig = count_centers_per_tile(&tiles, &disk_centers(&tiles, Packing::Original));
    let shifted = count_centers_per_tile(&tiles, &disk_centers(&tiles, Packing::Shifted));
    let mut interior = 0;
    for (i, t) in tiles.iter().enumerate() {
        let [x0, y0, x1, y1] = t.bounds();
        // away from the sides, where centers from outside the window would belong
        if x0 >= 4.0 * (y1 - y0) && x1 <= 40.0 - 4.0 * (y1 - y0) && y0 >= 0.25 && y1 <= 8.0 {
            interior += 1;
            assert_eq!(orig.counts[i], 1);
            assert!(matches!(shifted.counts[i], 1 | 2), "{t:?}: {}", shifted.counts[i]);
        }
    }
    assert!(interior > 20);
    // Shifted centers of strip k land in strip k+1 at spacing 2.4 * 2^k across
    // tiles 4 * 2^k wide: five centers per three tiles.
    let strip0: usize = tiles
        .iter()
        .zip(&shifted.counts)
        .filter(|(t, _)| t.level == 0 && t.left().to_f64() >= 0.0 && t.right().to_f64() <= 12.0)
        .map(|(_, c)| c)
        .sum();
    assert_eq!(strip0, 10);
}
