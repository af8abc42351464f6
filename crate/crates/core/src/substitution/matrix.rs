use crate::error::{Error, Result};

use super::system::{SubstitutionSystem, TileInstance};

/// `m[i][j]` = number of type-`i` children in the rule for type `j`.
pub fn substitution_matrix(system: &SubstitutionSystem) -> Vec<Vec<u64>> {
    let n = system.prototiles.len();
    let mut m = vec![vec![0u64; n]; n];
    for rule in &system.rules {
        for c in &rule.children {
            m[c.prototile][rule.parent] += 1;
        }
    }
    m
}

/// Number of tiles of each prototile type.
pub fn type_counts(tiles: &[TileInstance], types: usize) -> Vec<u64> {
    let mut counts = vec![0u64; types];
    for t in tiles {
        counts[t.prototile] += 1;
    }
    counts
}

/// `m^power · v` in exact integer arithmetic.
pub fn matrix_power_apply(m: &[Vec<u64>], v: &[u64], power: usize) -> Result<Vec<u128>> {
    let overflow = || Error::DegenerateData("tile count overflows 128 bits".into());
    let mut cur: Vec<u128> = v.iter().map(|&x| x as u128).collect();
    for _ in 0..power {
        let mut next = vec![0u128; m.len()];
        for (i, row) in m.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                let term = (a as u128).checked_mul(cur[j]).ok_or_else(overflow)?;
                next[i] = next[i].checked_add(term).ok_or_else(overflow)?;
            }
        }
        cur = next;
    }
    Ok(cur)
}

/// Perron eigenvalue and positive eigenvector (summing to 1) of a
/// nonnegative primitive matrix, by power iteration.
pub fn dominant_eigen(m: &[Vec<u64>]) -> Result<(f64, Vec<f64>)> {
    const MAX_ITER: usize = 100_000;
    let n = m.len();
    if n == 0 || m.iter().any(|r| r.len() != n) {
        return Err(Error::DegenerateData("matrix must be square and nonempty".into()));
    }
    let mut v = vec![1.0 / n as f64; n];
    let mut lambda = 0.0;
    for _ in 0..MAX_ITER {
        let w: Vec<f64> = m
            .iter()
            .map(|row| row.iter().zip(&v).map(|(&a, x)| a as f64 * x).sum())
            .collect();
        let s: f64 = w.iter().sum();
        if s <= 0.0 {
            return Err(Error::DegenerateData("matrix annihilates the positive cone".into()));
        }
        let w: Vec<f64> = w.into_iter().map(|x| x / s).collect();
        let shift = w
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let done = (s - lambda).abs() <= 1e-12 * s && shift <= 1e-12;
        lambda = s;
        v = w;
        if done {
            return Ok((lambda, v));
        }
    }
    Err(Error::NoConvergence(MAX_ITER))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigen_examples() {
        assert_eq!(dominant_eigen(&[vec![5]]).unwrap().0, 5.0);
        let (l, v) = dominant_eigen(&[vec![2, 1], vec![1, 1]]).unwrap();
        assert!((l - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-10);
        assert!((v[0] / v[1] - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-9);
        let (l, _) = dominant_eigen(&[vec![2, 2], vec![2, 2]]).unwrap();
        assert!((l - 4.0).abs() < 1e-12);
    }

    #[test]
    fn periodic_matrix_does_not_converge() {
        assert_eq!(
            dominant_eigen(&[vec![0, 1], vec![1, 0]]).map(|_| ()),
            Ok(())
        );
        assert!(matches!(
            dominant_eigen(&[vec![0, 2], vec![1, 0]]),
            Err(Error::NoConvergence(_))
        ));
    }

    #[test]
    fn powers() {
        let m = vec![vec![2, 1], vec![1, 1]];
        // Fibonacci numbers of even index.
        assert_eq!(matrix_power_apply(&m, &[1, 0], 5).unwrap(), vec![89, 55]);
        assert_eq!(matrix_power_apply(&[vec![5]], &[1], 8).unwrap(), vec![390_625]);
    }
}
