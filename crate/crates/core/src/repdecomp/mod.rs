//! Correspondence data, Littlewood-Richardson multiplicities and graded decompositions of
//! null cones and lifted orbit closures.

mod graded;
mod labels;
mod lr;

use std::collections::BTreeMap;

use num::{BigInt, Zero};
use rayon::prelude::*;

use crate::combinatorics::{partitions_up_to, DualPair, PairKind, Partition};
use crate::error::{Error, Result};

pub use graded::{Accumulator, GradedDecomposition, HilbertSeries, LabelEntry};
pub use labels::{
    dual_weight, kprime_dual_label, kprime_label, mixed_weight, r_kprime, rho_plus_dual, sigma_minus,
    sigma_plus_dual, tau_weight, LabelGroup, LabelWeight, RepLabel, Role, Tau,
};
pub use lr::{lr_coefficient, tensor_multiplicity_gl};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Plus,
    Minus,
}

/// Harmonics on W^+ (pairs sigma^+(tau*) with tau*) or on W^- (sigma^-(tau) with tau).
pub fn harmonics_series(pair: &DualPair, side: Side, k: usize) -> Result<GradedDecomposition> {
    let mut acc = Accumulator::new(k);
    for tau in r_kprime(pair, k) {
        let (a, b) = match side {
            Side::Plus => (sigma_plus_dual(pair, &tau), kprime_dual_label(pair, &tau)),
            Side::Minus => (sigma_minus(pair, &tau), kprime_label(pair, &tau)),
        };
        acc.add(tau.size(), a, Some(b), BigInt::from(1));
    }
    acc.finish()
}

/// (1 - t^2)^c / (1 - t)^{dim W^side} through degree k.
pub fn complete_intersection_series(pair: &DualPair, side: Side, k: usize) -> HilbertSeries {
    let (wp, wm) = pair.dim_w();
    let d = if side == Side::Plus { wp } else { wm };
    HilbertSeries::complete_intersection(pair.quadratic_invariants(), d, k)
}

pub fn nullcone_hilbert_check(pair: &DualPair, side: Side, k: usize) -> Result<bool> {
    Ok(harmonics_series(pair, side, k)?.hilbert_series() == complete_intersection_series(pair, side, k))
}

/// Closure of the lift of the zero orbit: sigma^+(tau*) x sigma^-(tau) in degree |tau|.
pub fn decompose_trivial_lift(pair: &DualPair, k: usize) -> Result<GradedDecomposition> {
    let mut acc = Accumulator::new(k);
    for tau in r_kprime(pair, k) {
        acc.add(tau.size(), sigma_plus_dual(pair, &tau), Some(sigma_minus(pair, &tau)), BigInt::from(1));
    }
    acc.finish()
}

/// Closure of the lift of the regular holomorphic orbit: rho^+(tau*) x sigma^-(tau) in degree |tau|.
pub fn decompose_regular_hol_lift(pair: &DualPair, k: usize) -> Result<GradedDecomposition> {
    if pair.kind == PairKind::UU && pair.m < pair.n {
        return Err(Error::InvalidInput(format!("{pair}: the regular holomorphic orbit needs m >= n")));
    }
    let mut acc = Accumulator::new(k);
    for tau in r_kprime(pair, k) {
        acc.add(tau.size(), rho_plus_dual(pair, &tau), Some(sigma_minus(pair, &tau)), BigInt::from(1));
    }
    acc.finish()
}

fn kprime_entry(pair: &DualPair, weight: LabelWeight) -> RepLabel {
    let group = match pair.kind {
        PairKind::UU => LabelGroup::GLxGL(pair.m, pair.n),
        _ => LabelGroup::GL(pair.n),
    };
    RepLabel { role: Role::Kprime, group, weight }
}

/// The zero orbit: the trivial K'_C-module in degree 0.
pub fn trivial_input(pair: &DualPair) -> GradedDecomposition {
    let mut acc = Accumulator::new(0);
    acc.add(0, kprime_label(pair, &Tau::trivial(pair)), None, BigInt::from(1));
    acc.finish().expect("trivial labels have dimension 1")
}

/// K'_C-decomposition of C[s'_+] through degree k. Labels are the weights occurring in the
/// polynomial ring, so they are duals of the weights of the symmetric powers.
pub fn flat_space_input(pair: &DualPair, k: usize) -> Result<GradedDecomposition> {
    let mut acc = Accumulator::new(k);
    let n = pair.n;
    match pair.kind {
        PairKind::OSp => {
            for lam in partitions_up_to(k, n) {
                let w = dual_weight(&lam.scaled(2).padded(n));
                acc.add(lam.size(), kprime_entry(pair, LabelWeight::Single(w)), None, BigInt::from(1));
            }
        }
        PairKind::SpOstar => {
            for lam in partitions_up_to(k, n / 2) {
                let w = dual_weight(&lam.doubled_rows().padded(n));
                acc.add(lam.size(), kprime_entry(pair, LabelWeight::Single(w)), None, BigInt::from(1));
            }
        }
        PairKind::UU => {
            for lam in partitions_up_to(k, pair.m.min(n)) {
                let w = LabelWeight::Pair(dual_weight(&lam.padded(pair.m)), lam.padded(n));
                acc.add(lam.size(), kprime_entry(pair, w), None, BigInt::from(1));
            }
        }
    }
    acc.finish()
}

/// dim s'_+ for the flat-space check.
pub fn flat_space_dim(pair: &DualPair) -> usize {
    let n = pair.n;
    match pair.kind {
        PairKind::OSp => n * (n + 1) / 2,
        PairKind::SpOstar => n * n.saturating_sub(1) / 2,
        PairKind::UU => pair.m * n,
    }
}

fn total(w: &[i64]) -> i64 {
    w.iter().sum()
}

/// Central character of a K'_C weight, used to index candidate tau_1.
fn central(w: &LabelWeight) -> (i64, i64) {
    match w {
        LabelWeight::Single(v) => (total(v), 0),
        LabelWeight::Pair(a, b) => (total(a), total(b)),
    }
}

/// Multiplicity of `t1` in `t2` tensor `t` for K'_C weights.
fn kprime_tensor(pair: &DualPair, t1: &LabelWeight, t2: &LabelWeight, t: &LabelWeight) -> Result<BigInt> {
    match (t1, t2, t) {
        (LabelWeight::Single(a), LabelWeight::Single(b), LabelWeight::Single(c)) => {
            tensor_multiplicity_gl(pair.n, a, b, c)
        }
        (LabelWeight::Pair(a1, a2), LabelWeight::Pair(b1, b2), LabelWeight::Pair(c1, c2)) => {
            let x = tensor_multiplicity_gl(pair.m, a1, b1, c1)?;
            if x.is_zero() {
                return Ok(x);
            }
            Ok(x * tensor_multiplicity_gl(pair.n, a2, b2, c2)?)
        }
        _ => Err(Error::ShapeMismatch(format!("K' weight {t} does not match {pair}"))),
    }
}

/// The lift formula: the multiplicity of sigma^+(tau_1*) x sigma^-(tau_2) at degree
/// (|tau_1| + |tau_2|)/2 + k is the sum over input labels tau at degree k of m(tau_1; tau_2 x tau).
pub fn decompose_general_lift(pair: &DualPair, input: &GradedDecomposition, k: usize) -> Result<GradedDecomposition> {
    let expected_group = kprime_entry(pair, LabelWeight::Single(vec![])).group;
    for (_, e) in input.iter() {
        if e.plus.group != expected_group || e.minus.is_some() {
            return Err(Error::ShapeMismatch(format!("input label {} is not a K' label for {pair}", e.plus)));
        }
    }
    let taus = r_kprime(pair, 2 * k);
    let weights: Vec<LabelWeight> = taus.iter().map(|t| tau_weight(pair, t)).collect();
    let mut by_central: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
    for (i, w) in weights.iter().enumerate() {
        by_central.entry(central(w)).or_default().push(i);
    }

    let inputs: Vec<(usize, &LabelEntry)> = input.iter().filter(|(d, _)| *d <= k).collect();
    let terms: Vec<Result<Vec<(usize, usize, usize, BigInt)>>> = inputs
        .par_iter()
        .map(|(deg_in, e)| {
            let budget = 2 * (k - deg_in);
            let c = central(&e.plus.weight);
            let mut out = Vec::new();
            for (i2, t2) in taus.iter().enumerate() {
                if t2.size() > budget {
                    continue;
                }
                let c2 = central(&weights[i2]);
                let Some(cands) = by_central.get(&(c2.0 + c.0, c2.1 + c.1)) else { continue };
                for &i1 in cands {
                    let s = taus[i1].size() + t2.size();
                    if s > budget {
                        continue;
                    }
                    let mult = kprime_tensor(pair, &weights[i1], &weights[i2], &e.plus.weight)?;
                    if mult.is_zero() {
                        continue;
                    }
                    if s % 2 == 1 {
                        return Err(Error::GradingParityViolation(format!(
                            "tau1 = {}, tau2 = {}, input {} at degree {deg_in}",
                            weights[i1], weights[i2], e.plus.weight
                        )));
                    }
                    out.push((s / 2 + deg_in, i1, i2, mult * &e.mult));
                }
            }
            Ok(out)
        })
        .collect();

    let mut acc = Accumulator::new(k);
    for batch in terms {
        for (deg, i1, i2, mult) in batch? {
            acc.add(deg, sigma_plus_dual(pair, &taus[i1]), Some(sigma_minus(pair, &taus[i2])), mult);
        }
    }
    acc.finish()
}

/// Convenience: partitions (gamma, delta) as a U(m) x U(n) tau.
pub fn tau_pair(gamma: &[usize], delta: &[usize]) -> Result<Tau> {
    Ok(Tau::Pair(Partition::new(gamma.to_vec())?, Partition::new(delta.to_vec())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(g: &GradedDecomposition) -> Vec<i64> {
        g.hilbert_series().coefficients.iter().map(|x| x.try_into().unwrap()).collect()
    }

    #[test]
    fn harmonics_examples() {
        let pair = DualPair::osp(3, 3, 1).unwrap();
        let g = harmonics_series(&pair, Side::Plus, 3).unwrap();
        assert_eq!(h(&g), vec![1, 3, 5, 7]);
        for d in 0..=3 {
            assert_eq!(g.degree(d).len(), 1);
        }
        let uu = DualPair::uu(2, 2, 1, 1).unwrap();
        let g = harmonics_series(&uu, Side::Plus, 1).unwrap();
        assert_eq!(g.degree(1).len(), 2);
        assert_eq!(g.degree(0).len(), 1);
        assert_eq!(g.degree(0)[0].dim, BigInt::from(1));
    }

    #[test]
    fn nullcone_checks() {
        for pair in [
            DualPair::osp(3, 3, 1).unwrap(),
            DualPair::osp(5, 5, 2).unwrap(),
            DualPair::uu(2, 2, 1, 1).unwrap(),
            DualPair::uu(4, 3, 2, 1).unwrap(),
            DualPair::sp_ostar(2, 2, 1).unwrap(),
            DualPair::sp_ostar(3, 2, 2).unwrap(),
        ] {
            for side in [Side::Plus, Side::Minus] {
                assert!(nullcone_hilbert_check(&pair, side, 8).unwrap(), "{pair} {side:?}");
            }
        }
        assert_eq!(
            complete_intersection_series(&DualPair::sp_ostar(2, 2, 1).unwrap(), Side::Plus, 2).coefficients,
            vec![BigInt::from(1), BigInt::from(4), BigInt::from(10)]
        );
    }

    #[test]
    fn trivial_lift_examples() {
        let g = decompose_trivial_lift(&DualPair::osp(3, 3, 1).unwrap(), 3).unwrap();
        assert_eq!(h(&g), vec![1, 9, 25, 49]);
        assert!(g.is_multiplicity_free());
        let g = decompose_trivial_lift(&DualPair::uu(2, 2, 1, 1).unwrap(), 1).unwrap();
        assert_eq!(h(&g), vec![1, 8]);
    }

    #[test]
    fn regular_lift_examples() {
        let g = decompose_regular_hol_lift(&DualPair::osp(3, 3, 1).unwrap(), 3).unwrap();
        assert_eq!(h(&g), vec![1, 9, 30, 70]);
        assert!(g.is_multiplicity_free());
        let g = decompose_regular_hol_lift(&DualPair::sp_ostar(2, 2, 1).unwrap(), 2).unwrap();
        assert_eq!(h(&g)[1], 16);
        assert_eq!(h(&g)[2], 10 * 10);
        assert!(matches!(
            decompose_regular_hol_lift(&DualPair::uu(3, 3, 1, 2).unwrap(), 2),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn general_lift_of_trivial_input_is_trivial_lift() {
        for pair in [
            DualPair::osp(5, 5, 2).unwrap(),
            DualPair::uu(3, 3, 1, 1).unwrap(),
            DualPair::uu(4, 4, 2, 1).unwrap(),
            DualPair::sp_ostar(3, 3, 2).unwrap(),
        ] {
            let a = decompose_general_lift(&pair, &trivial_input(&pair), 4).unwrap();
            assert_eq!(a, decompose_trivial_lift(&pair, 4).unwrap(), "{pair}");
        }
    }

    #[test]
    fn general_lift_of_flat_input_matches_regular() {
        for pair in [
            DualPair::osp(3, 3, 1).unwrap(),
            DualPair::osp(5, 5, 2).unwrap(),
            DualPair::sp_ostar(2, 2, 1).unwrap(),
            DualPair::sp_ostar(3, 3, 2).unwrap(),
            DualPair::uu(3, 3, 1, 1).unwrap(),
            DualPair::uu(4, 4, 2, 1).unwrap(),
        ] {
            let k = 5;
            let input = flat_space_input(&pair, k).unwrap();
            let g = decompose_general_lift(&pair, &input, k).unwrap();
            let r = decompose_regular_hol_lift(&pair, k).unwrap();
            assert_eq!(g.hilbert_series(), r.hilbert_series(), "{pair}");
        }
    }

    #[test]
    fn flat_space_series() {
        for pair in [
            DualPair::osp(5, 5, 2).unwrap(),
            DualPair::sp_ostar(4, 4, 3).unwrap(),
            DualPair::sp_ostar(4, 4, 4).unwrap(),
            DualPair::uu(4, 4, 2, 1).unwrap(),
            DualPair::uu(4, 4, 2, 2).unwrap(),
        ] {
            let g = flat_space_input(&pair, 6).unwrap();
            let expect = HilbertSeries::complete_intersection(0, flat_space_dim(&pair), 6);
            assert_eq!(g.hilbert_series(), expect, "{pair}");
        }
        let sp = DualPair::sp_ostar(2, 2, 1).unwrap();
        assert_eq!(flat_space_input(&sp, 4).unwrap().entries.len(), 1);
        let osp = DualPair::osp(3, 3, 1).unwrap();
        let g = flat_space_input(&osp, 2).unwrap();
        assert_eq!(g.degree(2)[0].plus.weight, LabelWeight::Single(vec![-4]));
    }

    #[test]
    fn single_entry_input() {
        let pair = DualPair::osp(5, 5, 2).unwrap();
        let mut acc = Accumulator::new(3);
        acc.add(1, kprime_entry(&pair, LabelWeight::Single(vec![1, 0])), None, BigInt::from(1));
        let input = acc.finish().unwrap();
        // an odd central character always forces |tau1| + |tau2| odd
        assert!(matches!(decompose_general_lift(&pair, &input, 3), Err(Error::GradingParityViolation(_))));
        let mut acc = Accumulator::new(3);
        acc.add(1, kprime_entry(&pair, LabelWeight::Single(vec![0, -2])), None, BigInt::from(1));
        let input = acc.finish().unwrap();
        let g = decompose_general_lift(&pair, &input, 3).unwrap();
        assert!(g.iter().all(|(_, e)| e.mult == BigInt::from(1)));
        // (tau1, tau2) = (0, (2)) sits at degree 1 + 1
        assert!(g.degree(2).iter().any(|e| e.plus.weight == LabelWeight::Single(vec![0, 0])
            && e.minus.as_ref().unwrap().weight == LabelWeight::Single(vec![2, 0])));
    }
}
