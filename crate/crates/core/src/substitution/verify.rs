use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

use super::system::{Placement, SubstitutionSystem};

const CHUNK: usize = 4096;

#[derive(Clone, Debug, PartialEq)]
pub struct PartitionReport {
    pub prototile: usize,
    /// Sum of child measures (in parent units) minus the parent measure.
    pub area_residual: f64,
    pub samples: usize,
    /// Samples discarded for lying within tolerance of a child boundary.
    pub boundary_rejections: usize,
    /// Samples covered by zero or several children.
    pub multiplicity_violations: usize,
}

impl PartitionReport {
    pub fn passed(&self, tolerance: f64) -> bool {
        self.multiplicity_violations == 0 && self.area_residual.abs() <= tolerance
    }
}

/// Checks that the children of a rule tile the parent: total measure, and
/// single coverage of random interior points.
///
/// The parent is sampled in the rule's own frame (parent scaled by the
/// ratio). Sampling runs in fixed-size chunks, each with its own seeded
/// stream, so the report does not depend on the thread count.
pub fn verify_partition(
    system: &SubstitutionSystem,
    prototile: usize,
    samples: usize,
    tolerance: f64,
    seed: u64,
) -> Result<PartitionReport> {
    let rule = system.rule(prototile)?;
    let parent = &system.prototile(prototile)?.shape;
    let lambda = system.ratio.value;
    let dim = system.dimension;
    let parent_measure = parent.measure();
    if !(parent_measure > 0.0) {
        return Err(Error::Degenerate(format!("prototile {prototile} has zero measure")));
    }
    let mut child_total = 0.0;
    for c in &rule.children {
        let m = system.prototiles[c.prototile].shape.measure();
        if !(m > 0.0) {
            return Err(Error::Degenerate(format!("child prototile {} has zero measure", c.prototile)));
        }
        child_total += m;
    }
    let area_residual = child_total / lambda.powi(dim as i32) - parent_measure;

    let inverses: Vec<(usize, Placement)> = rule
        .children
        .iter()
        .map(|c| (c.prototile, c.placement.inverse()))
        .collect();
    let verts = parent.vertices();
    let mut lo = [0.0f64; 3];
    let mut hi = [0.0f64; 3];
    for i in 0..dim {
        lo[i] = verts.iter().map(|v| v[i]).fold(f64::INFINITY, f64::min) * lambda;
        hi[i] = verts.iter().map(|v| v[i]).fold(f64::NEG_INFINITY, f64::max) * lambda;
    }

    let chunks = samples.div_ceil(CHUNK);
    let (rejected, violations) = (0..chunks)
        .into_par_iter()
        .map(|k| {
            let n = CHUNK.min(samples - k * CHUNK);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            let mut rejected = 0usize;
            let mut violations = 0usize;
            let mut drawn = 0;
            while drawn < n {
                let mut p = [0.0; 3];
                for i in 0..dim {
                    p[i] = rng.gen_range(lo[i]..=hi[i]);
                }
                let scaled = p.map(|v| v / lambda);
                if parent.margin(scaled) * lambda <= tolerance {
                    continue;
                }
                drawn += 1;
                let mut hits = 0;
                let mut near = false;
                for (id, inv) in &inverses {
                    let m = system.prototiles[*id].shape.margin(inv.apply(p));
                    if m.abs() <= tolerance {
                        near = true;
                        break;
                    }
                    if m > 0.0 {
                        hits += 1;
                    }
                }
                if near {
                    rejected += 1;
                } else if hits != 1 {
                    violations += 1;
                }
            }
            (rejected, violations)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));

    Ok(PartitionReport {
        prototile,
        area_residual,
        samples,
        boundary_rejections: rejected,
        multiplicity_violations: violations,
    })
}
