use num::{BigInt, Zero};

use super::leading::OrbitFamily;
use crate::combinatorics::DualPair;
use crate::error::{Error, Result};
use crate::repdecomp::{decompose_regular_hol_lift, decompose_trivial_lift, HilbertSeries};

pub const FIT_START: usize = 6;
pub const FIT_STEP: usize = 4;

fn difference(v: &[BigInt]) -> Vec<BigInt> {
    v.windows(2).map(|w| &w[1] - &w[0]).collect()
}

/// Smallest d whose d-th finite difference is a nonzero constant over the last
/// min(4, len - d) entries (at least 3). Returns (d, that constant).
pub fn degree_hilbert_fit(series: &HilbertSeries) -> Result<(usize, BigInt)> {
    let mut diff = series.coefficients.clone();
    let mut d = 0;
    loop {
        let w = diff.len().min(4);
        if w < 3 {
            return Err(Error::NotStabilized(series.len()));
        }
        let tail = &diff[diff.len() - w..];
        if tail.iter().all(|x| *x == tail[0]) && !tail[0].is_zero() {
            return Ok((d, tail[0].clone()));
        }
        diff = difference(&diff);
        d += 1;
    }
}

pub fn lift_series(pair: &DualPair, orbit: OrbitFamily, k: usize) -> Result<HilbertSeries> {
    let dec = match orbit {
        OrbitFamily::Trivial => decompose_trivial_lift(pair, k)?,
        OrbitFamily::RegularHol => decompose_regular_hol_lift(pair, k)?,
    };
    Ok(dec.hilbert_series())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertFit {
    pub d: usize,
    pub degree: BigInt,
    /// Truncation at which the fit was confirmed.
    pub truncation: usize,
}

/// Fits at K = 6, 10, 14, ... and accepts once two consecutive truncations give the same (d, e).
pub fn adaptive_hilbert_fit(pair: &DualPair, orbit: OrbitFamily, k_max: usize) -> Result<HilbertFit> {
    let mut prev: Option<(usize, BigInt)> = None;
    let mut k = FIT_START;
    while k <= k_max {
        let fit = degree_hilbert_fit(&lift_series(pair, orbit, k)?).ok();
        if let (Some(a), Some(b)) = (&prev, &fit) {
            if a == b {
                return Ok(HilbertFit { d: b.0, degree: b.1.clone(), truncation: k });
            }
        }
        prev = fit;
        k += FIT_STEP;
    }
    Err(Error::NotStabilized(k_max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(v: &[i64]) -> HilbertSeries {
        HilbertSeries { coefficients: v.iter().map(|&x| BigInt::from(x)).collect() }
    }

    #[test]
    fn fits_polynomials() {
        // 1 + 4k: line of degree 4
        assert_eq!(degree_hilbert_fit(&series(&[1, 5, 9, 13, 17])).unwrap(), (1, BigInt::from(4)));
        // (k+1)^2 shifted start: H(0) off the polynomial
        assert_eq!(degree_hilbert_fit(&series(&[1, 3, 9, 16, 25, 36, 49, 64])).unwrap(), (2, BigInt::from(2)));
        assert!(matches!(degree_hilbert_fit(&series(&[1, 2])), Err(Error::NotStabilized(2))));
        assert_eq!(degree_hilbert_fit(&series(&[1, 9, 25, 49, 81])).unwrap(), (2, BigInt::from(8)));
        assert_eq!(degree_hilbert_fit(&series(&[1, 1, 1, 1])).unwrap(), (0, BigInt::from(1)));
        let cubic: Vec<i64> = (0..=8).map(|k| (k + 2) * (k + 1) / 2 * (2 * k + 1)).collect();
        assert_eq!(degree_hilbert_fit(&series(&cubic)).unwrap(), (3, BigInt::from(6)));
        let ci = HilbertSeries::complete_intersection(1, 3, 10);
        assert_eq!(degree_hilbert_fit(&ci).unwrap(), (1, BigInt::from(2)));
    }

    #[test]
    fn adaptive_small_pair() {
        let pair = DualPair::osp(3, 3, 1).unwrap();
        let fit = adaptive_hilbert_fit(&pair, OrbitFamily::Trivial, 30).unwrap();
        assert_eq!((fit.d, fit.degree), (2, BigInt::from(8)));
        let fit = adaptive_hilbert_fit(&pair, OrbitFamily::RegularHol, 30).unwrap();
        assert_eq!((fit.d, fit.degree), (3, BigInt::from(6)));
    }
}
