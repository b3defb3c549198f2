use num::{BigInt, One, Zero};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// Littlewood-Richardson coefficient c^lam_{mu,nu}, by enumerating LR tableaux of shape lam/mu
/// and content nu.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if lam.size() != mu.size() + nu.size() || !lam.contains(mu) || !lam.contains(nu) {
        return BigInt::zero();
    }
    if nu.is_empty() {
        return BigInt::one();
    }
    let rows = lam.len();
    // cells in reading order: rows top to bottom, each right to left
    let mut cells = Vec::with_capacity(nu.size());
    for i in 0..rows {
        for c in (mu.part(i)..lam.part(i)).rev() {
            cells.push((i, c));
        }
    }
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|i| vec![0; lam.part(i)]).collect();
    let mut counts = vec![0usize; nu.len() + 1];
    let mut total = BigInt::zero();
    place(0, &cells, mu, nu, &mut grid, &mut counts, &mut total);
    total
}

fn place(
    idx: usize,
    cells: &[(usize, usize)],
    mu: &Partition,
    nu: &Partition,
    grid: &mut [Vec<usize>],
    counts: &mut [usize],
    total: &mut BigInt,
) {
    if idx == cells.len() {
        *total += 1;
        return;
    }
    let (i, c) = cells[idx];
    let mut hi = nu.len();
    if c + 1 < grid[i].len() && c + 1 >= mu.part(i) {
        hi = hi.min(grid[i][c + 1]);
    }
    hi = hi.min(i + 1);
    let lo = if i > 0 && c >= mu.part(i - 1) { grid[i - 1][c] + 1 } else { 1 };
    for v in lo..=hi {
        if counts[v] >= nu.part(v - 1) {
            continue;
        }
        if v > 1 && counts[v] + 1 > counts[v - 1] {
            continue;
        }
        counts[v] += 1;
        grid[i][c] = v;
        place(idx + 1, cells, mu, nu, grid, counts, total);
        grid[i][c] = 0;
        counts[v] -= 1;
    }
}

fn check_dominant(w: &[i64], r: usize) -> Result<()> {
    if w.len() != r {
        return Err(Error::ShapeMismatch(format!("weight {w:?} has length {}, expected {r}", w.len())));
    }
    if w.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::NonDominantWeight(format!("{w:?}")));
    }
    Ok(())
}

fn shifted(w: &[i64], by: i64) -> Option<Partition> {
    let v: Vec<i64> = w.iter().map(|x| x - by).collect();
    if v.iter().any(|&x| x < 0) {
        return None;
    }
    Partition::new(v.into_iter().map(|x| x as usize).collect()).ok()
}

/// Multiplicity of the GL_r module `nu` in `mu` tensor `lam`, for rational dominant weights.
///
/// Weights are shifted by powers of the determinant to partitions, using the smallest shift.
pub fn tensor_multiplicity_gl(r: usize, nu: &[i64], mu: &[i64], lam: &[i64]) -> Result<BigInt> {
    check_dominant(nu, r)?;
    check_dominant(mu, r)?;
    check_dominant(lam, r)?;
    if r == 0 {
        return Ok(BigInt::one());
    }
    let total = |w: &[i64]| w.iter().sum::<i64>();
    if total(nu) != total(mu) + total(lam) {
        return Ok(BigInt::zero());
    }
    let (a, b) = (mu[r - 1], lam[r - 1]);
    let (Some(mu_p), Some(lam_p)) = (shifted(mu, a), shifted(lam, b)) else {
        return Ok(BigInt::zero());
    };
    let Some(nu_p) = shifted(nu, a + b) else {
        return Ok(BigInt::zero());
    };
    Ok(lr_coefficient(&nu_p, &mu_p, &lam_p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), BigInt::one());
        assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[2, 1]), &p(&[1])), BigInt::one());
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[])), BigInt::one());
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[2, 1]), &p(&[])), BigInt::zero());
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), BigInt::from(2));
    }

    #[test]
    fn pieri_rule() {
        // c^lam_{mu,(k)} is 1 exactly when lam/mu is a horizontal strip of size k
        for n in 0..6 {
            for lam in partitions_of(n, 6) {
                for k in 0..=n {
                    for mu in partitions_of(n - k, 6) {
                        let strip = lam.contains(&mu)
                            && (0..lam.len()).all(|i| i + 1 >= lam.len() || lam.part(i + 1) <= mu.part(i));
                        let expect = if strip { 1 } else { 0 };
                        assert_eq!(lr_coefficient(&lam, &mu, &p(&[k])), BigInt::from(expect));
                    }
                }
            }
        }
    }

    #[test]
    fn gl_tensor_examples() {
        assert_eq!(tensor_multiplicity_gl(2, &[0, 0], &[1, 0], &[0, -1]).unwrap(), BigInt::one());
        assert_eq!(tensor_multiplicity_gl(2, &[1, 1], &[1, 0], &[1, 0]).unwrap(), BigInt::one());
        assert_eq!(tensor_multiplicity_gl(3, &[2, 1, 0], &[1, 1, 0], &[1, 0, 0]).unwrap(), BigInt::one());
        assert_eq!(tensor_multiplicity_gl(2, &[1, 0], &[1, 0], &[1, 0]).unwrap(), BigInt::zero());
        assert_eq!(tensor_multiplicity_gl(3, &[1, 0, -1], &[1, 0, 0], &[0, 0, -1]).unwrap(), BigInt::one());
        assert!(tensor_multiplicity_gl(2, &[0, 1], &[0, 0], &[0, 1]).is_err());
    }

    #[test]
    fn shift_invariance() {
        let base = tensor_multiplicity_gl(3, &[2, 1, 0], &[1, 0, 0], &[1, 1, 0]).unwrap();
        let shifted = tensor_multiplicity_gl(3, &[1, 0, -1], &[1, 0, 0], &[0, 0, -1]).unwrap();
        assert_eq!(base, shifted);
    }
}
