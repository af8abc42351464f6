//! Orientation statistics of supertiles, word balls of the rotation groups
//! G(p, q), and growth-class fits.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{Axis, RotationQuat};
use crate::substitution::{matrix_power_apply, substitution_matrix, Orientation, SubstitutionSystem};

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumRow {
    pub level: usize,
    pub diameter: f64,
    pub tile_count: u128,
    pub orientation_count: usize,
}

/// Distinct orientations of the leaves of a level-n supertile.
pub fn orientation_set(
    system: &SubstitutionSystem,
    root: usize,
    level: usize,
) -> Result<BTreeSet<Orientation>> {
    Ok(orientation_sets(system, level)?.swap_remove(root))
}

/// Per prototile type, the orientation sets of level-`level` supertiles.
fn orientation_sets(system: &SubstitutionSystem, level: usize) -> Result<Vec<BTreeSet<Orientation>>> {
    let identity = system.identity_placement().orientation();
    let mut sets = vec![BTreeSet::from([identity]); system.prototiles.len()];
    for _ in 0..level {
        sets = refine(system, &sets)?;
    }
    Ok(sets)
}

/// One level up: a type-t supertile's orientations are its children's
/// orientations composed with theirs.
fn refine(
    system: &SubstitutionSystem,
    sets: &[BTreeSet<Orientation>],
) -> Result<Vec<BTreeSet<Orientation>>> {
    (0..sets.len())
        .into_par_iter()
        .map(|t| {
            let rule = system.rule(t)?;
            let mut next = BTreeSet::new();
            for c in &rule.children {
                let o = c.placement.orientation();
                next.extend(sets[c.prototile].iter().map(|s| o.compose(s)));
            }
            Ok(next)
        })
        .collect()
}

/// One row per level `0..=max_level` for a supertile grown from `root`.
pub fn orientation_spectrum(
    system: &SubstitutionSystem,
    root: usize,
    max_level: usize,
) -> Result<Vec<SpectrumRow>> {
    let m = substitution_matrix(system);
    let mut unit = vec![0u64; system.prototiles.len()];
    *unit.get_mut(root).ok_or(Error::MissingRule(root))? = 1;
    let diameter = system.prototile(root)?.shape.diameter();
    let mut sets = orientation_sets(system, 0)?;
    let mut rows = Vec::with_capacity(max_level + 1);
    for level in 0..=max_level {
        if level > 0 {
            sets = refine(system, &sets)?;
        }
        rows.push(SpectrumRow {
            level,
            diameter: system.ratio.value.powi(level as i32) * diameter,
            tile_count: matrix_power_apply(&m, &unit, level)?.iter().sum(),
            orientation_count: sets[root].len(),
        });
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupBallRow {
    pub word_length: usize,
    pub distinct_elements: usize,
    pub closed: bool,
}

/// Sizes of the balls of radius `1..=max_word_length` in the group generated
/// by rotations of `2pi/p` about the first axis and `2pi/q` about the third.
pub fn group_ball(p: u32, q: u32, max_word_length: usize) -> Result<Vec<GroupBallRow>> {
    let g = RotationQuat::axis_rotation(Axis::X, p)?;
    let h = RotationQuat::axis_rotation(Axis::Z, q)?;
    let gens = [g.inverse(), g, h.inverse(), h];
    let mut seen: HashSet<RotationQuat> = HashSet::from([RotationQuat::identity()]);
    let mut frontier = vec![RotationQuat::identity()];
    let mut rows = Vec::with_capacity(max_word_length);
    for word_length in 1..=max_word_length {
        let products: Vec<RotationQuat> = frontier
            .par_iter()
            .flat_map_iter(|w| gens.iter().map(move |s| w.mul(s)))
            .collect();
        frontier = products.into_iter().filter(|x| seen.insert(x.clone())).collect();
        rows.push(GroupBallRow {
            word_length,
            distinct_elements: seen.len(),
            closed: frontier.is_empty(),
        });
    }
    Ok(rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FitKind {
    Logarithmic,
    Power,
}

impl FitKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FitKind::Logarithmic => "logarithmic",
            FitKind::Power => "power",
        }
    }
}

/// Least-squares fits of orientation count `n` against diameter `d`:
/// `n = a + b ln d` and `n = c d^gamma`, both judged by the sum of squared
/// residuals in `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthReport {
    pub fit_kind: FitKind,
    pub log_intercept: f64,
    pub log_slope: f64,
    pub log_sse: f64,
    pub power_coefficient: f64,
    pub power_exponent: f64,
    pub power_sse: f64,
}

pub fn growth_report(rows: &[SpectrumRow]) -> Result<GrowthReport> {
    if rows.len() < 3 {
        return Err(Error::DegenerateData(format!("need at least 3 rows, got {}", rows.len())));
    }
    let d: Vec<f64> = rows.iter().map(|r| r.diameter).collect();
    let n: Vec<f64> = rows.iter().map(|r| r.orientation_count as f64).collect();
    if d.iter().any(|&v| !(v > 0.0)) {
        return Err(Error::DegenerateData("diameters must be positive".into()));
    }
    if n.iter().all(|&v| v == n[0]) {
        return Err(Error::DegenerateData("orientation counts are constant".into()));
    }
    let ln_d: Vec<f64> = d.iter().map(|v| v.ln()).collect();
    let (log_intercept, log_slope) = linear_fit(&ln_d, &n)?;
    let log_sse = sse(&n, |i| log_intercept + log_slope * ln_d[i]);

    let ln_n: Vec<f64> = n.iter().map(|v| v.ln()).collect();
    let (ln_c, gamma) = linear_fit(&ln_d, &ln_n)?;
    let (c, gamma) = refine_power(&d, &n, ln_c.exp(), gamma);
    let power_sse = sse(&n, |i| c * d[i].powf(gamma));

    Ok(GrowthReport {
        fit_kind: if log_sse <= power_sse {
            FitKind::Logarithmic
        } else {
            FitKind::Power
        },
        log_intercept,
        log_slope,
        log_sse,
        power_coefficient: c,
        power_exponent: gamma,
        power_sse,
    })
}

fn linear_fit(x: &[f64], y: &[f64]) -> Result<(f64, f64)> {
    let k = x.len() as f64;
    let mx = x.iter().sum::<f64>() / k;
    let my = y.iter().sum::<f64>() / k;
    let sxx: f64 = x.iter().map(|v| (v - mx) * (v - mx)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    if sxx <= 0.0 {
        return Err(Error::DegenerateData("diameters are all equal".into()));
    }
    let slope = sxy / sxx;
    Ok((my - slope * mx, slope))
}

fn sse(y: &[f64], model: impl Fn(usize) -> f64) -> f64 {
    y.iter().enumerate().map(|(i, v)| (v - model(i)).powi(2)).sum()
}

/// Gauss-Newton with step halving for `y = c x^g`, minimizing squared
/// residuals in `y`.
fn refine_power(x: &[f64], y: &[f64], mut c: f64, mut g: f64) -> (f64, f64) {
    let cost = |c: f64, g: f64| sse(y, |i| c * x[i].powf(g));
    let mut current = cost(c, g);
    for _ in 0..200 {
        let (mut a11, mut a12, mut a22, mut b1, mut b2) = (0.0, 0.0, 0.0, 0.0, 0.0);
        for (xi, yi) in x.iter().zip(y) {
            let p = xi.powf(g);
            let r = yi - c * p;
            let jc = p;
            let jg = c * p * xi.ln();
            a11 += jc * jc;
            a12 += jc * jg;
            a22 += jg * jg;
            b1 += jc * r;
            b2 += jg * r;
        }
        let det = a11 * a22 - a12 * a12;
        if det.abs() < 1e-300 {
            break;
        }
        let dc = (a22 * b1 - a12 * b2) / det;
        let dg = (a11 * b2 - a12 * b1) / det;
        let mut step = 1.0;
        let mut improved = false;
        while step > 1e-6 {
            let trial = cost(c + step * dc, g + step * dg);
            if trial.is_finite() && trial < current {
                c += step * dc;
                g += step * dg;
                improved = current - trial > 1e-14 * current.max(1e-300);
                current = trial;
                break;
            }
            step /= 2.0;
        }
        if !improved {
            break;
        }
    }
    (c, g)
}
