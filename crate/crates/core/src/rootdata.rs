//! Classical root systems in the epsilon basis, Weyl's dimension formula and rho-products.

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
}

/// Positive system of type A/B/C/D.
///
/// `rank` is the number of epsilon coordinates: type A with `rank = r` is A_{r-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub ty: RootType,
    pub rank: usize,
    pub positive_roots: Vec<Vec<i64>>,
}

pub type Weight = Vec<BigRational>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetMode {
    /// Roots not orthogonal to all of e_1..e_n.
    FirstN(usize),
    /// Type A only: e_i - e_j with i <= m or j > r - n.
    Block { m: usize, n: usize },
}

fn unit(r: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; r];
    v[i] = c;
    v
}

impl RootSystem {
    pub fn new(ty: RootType, rank: usize) -> Self {
        let r = rank;
        let mut roots = Vec::new();
        for i in 0..r {
            for j in i + 1..r {
                let mut v = unit(r, i, 1);
                v[j] = -1;
                roots.push(v);
                if ty != RootType::A {
                    let mut w = unit(r, i, 1);
                    w[j] = 1;
                    roots.push(w);
                }
            }
        }
        match ty {
            RootType::B => roots.extend((0..r).map(|i| unit(r, i, 1))),
            RootType::C => roots.extend((0..r).map(|i| unit(r, i, 2))),
            _ => {}
        }
        RootSystem { ty, rank, positive_roots: roots }
    }

    /// Root system governing O(p): B_{[p/2]} for odd p, D_{p/2} for even p.
    pub fn orthogonal(p: usize) -> Self {
        if p % 2 == 1 {
            RootSystem::new(RootType::B, p / 2)
        } else {
            RootSystem::new(RootType::D, p / 2)
        }
    }

    pub fn name(&self) -> String {
        match self.ty {
            RootType::A => format!("A{}", self.rank.saturating_sub(1)),
            RootType::B => format!("B{}", self.rank),
            RootType::C => format!("C{}", self.rank),
            RootType::D => format!("D{}", self.rank),
        }
    }
}

pub fn weight_from_ints(v: &[i64]) -> Weight {
    v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
}

pub fn inner(w: &[BigRational], root: &[i64]) -> BigRational {
    w.iter()
        .zip(root)
        .filter(|(_, &c)| c != 0)
        .fold(BigRational::zero(), |acc, (x, &c)| acc + x * BigRational::from_integer(c.into()))
}

/// Half the sum of the positive roots.
pub fn rho(rs: &RootSystem) -> Weight {
    let mut acc = vec![BigInt::zero(); rs.rank];
    for root in &rs.positive_roots {
        for (a, &c) in acc.iter_mut().zip(root) {
            *a += c;
        }
    }
    acc.into_iter().map(|x| BigRational::new(x, BigInt::from(2))).collect()
}

/// The subsets Phi^+_n (first_n) and Phi^+_{m,n} (block, type A).
pub fn phi_plus_subset(rs: &RootSystem, mode: SubsetMode) -> Result<Vec<Vec<i64>>> {
    match mode {
        SubsetMode::FirstN(n) => {
            if n > rs.rank {
                return Err(Error::IndexOutOfRange(format!("n = {n} exceeds rank of {}", rs.name())));
            }
            Ok(rs
                .positive_roots
                .iter()
                .filter(|a| a[..n].iter().any(|&c| c != 0))
                .cloned()
                .collect())
        }
        SubsetMode::Block { m, n } => {
            if rs.ty != RootType::A {
                return Err(Error::InvalidInput("block subsets are defined for type A only".into()));
            }
            let r = rs.rank;
            if m + n > r {
                return Err(Error::IndexOutOfRange(format!("m + n = {} exceeds {r}", m + n)));
            }
            Ok(rs
                .positive_roots
                .iter()
                .filter(|a| {
                    let i = a.iter().position(|&c| c == 1).expect("type A root");
                    let j = a.iter().position(|&c| c == -1).expect("type A root");
                    i < m || j >= r - n
                })
                .cloned()
                .collect())
        }
    }
}

/// Whether `w` lies in the closed dominant chamber.
pub fn is_dominant(rs: &RootSystem, w: &[BigRational]) -> bool {
    if w.len() != rs.rank {
        return false;
    }
    let decreasing = w.windows(2).all(|p| p[0] >= p[1]);
    let r = rs.rank;
    match rs.ty {
        RootType::A => decreasing,
        RootType::B | RootType::C => decreasing && (r == 0 || !w[r - 1].is_negative()),
        RootType::D => {
            if r < 2 {
                return true;
            }
            w[..r - 1].windows(2).all(|p| p[0] >= p[1]) && w[r - 2] >= w[r - 1].abs()
        }
    }
}

/// The dominant representative of the Weyl-group orbit of `w`.
pub fn dominant_representative(rs: &RootSystem, w: &[BigRational]) -> Weight {
    let mut v: Weight = w.to_vec();
    match rs.ty {
        RootType::A => v.sort_by(|a, b| b.cmp(a)),
        RootType::B | RootType::C => {
            v = v.into_iter().map(|x| x.abs()).collect();
            v.sort_by(|a, b| b.cmp(a));
        }
        RootType::D => {
            let negatives = v.iter().filter(|x| x.is_negative()).count();
            let has_zero = v.iter().any(|x| x.is_zero());
            v = v.into_iter().map(|x| x.abs()).collect();
            v.sort_by(|a, b| b.cmp(a));
            if negatives % 2 == 1 && !has_zero {
                if let Some(last) = v.last_mut() {
                    *last = -last.clone();
                }
            }
        }
    }
    v
}

/// Weyl's dimension formula, exact.
pub fn weyl_dim(rs: &RootSystem, lambda: &[BigRational]) -> Result<BigInt> {
    if lambda.len() != rs.rank {
        return Err(Error::IndexOutOfRange(format!(
            "weight of length {} for {}",
            lambda.len(),
            rs.name()
        )));
    }
    if !is_dominant(rs, lambda) {
        return Err(Error::NonDominantWeight(format!("{lambda:?} for {}", rs.name())));
    }
    let rh = rho(rs);
    let shifted: Weight = lambda.iter().zip(&rh).map(|(a, b)| a + b).collect();
    let mut num = BigRational::one();
    let mut den = BigRational::one();
    for a in &rs.positive_roots {
        num *= inner(&shifted, a);
        den *= inner(&rh, a);
    }
    let q = num / den;
    if !q.is_integer() {
        return Err(Error::NotIntegral(format!("dimension {q} for {lambda:?}")));
    }
    Ok(q.to_integer())
}

/// Product of <rho, alpha>^{-1} over `subset`.
pub fn rho_product_prefactor(rs: &RootSystem, subset: &[Vec<i64>]) -> BigRational {
    let rh = rho(rs);
    subset.iter().fold(BigRational::one(), |acc, a| acc / inner(&rh, a))
}

/// Dimension of the irreducible GL_r module with dominant integral weight `w`.
pub fn dim_gl(w: &[i64]) -> Result<BigInt> {
    let rs = RootSystem::new(RootType::A, w.len());
    weyl_dim(&rs, &weight_from_ints(w))
}

/// Dimension of the O(p) module attached to a partition of length < p/2.
pub fn dim_orthogonal(p: usize, lambda: &[usize]) -> Result<BigInt> {
    let len = lambda.iter().filter(|&&x| x > 0).count();
    if 2 * len >= p && len > 0 {
        return Err(Error::InvalidInput(format!(
            "partition of length {len} is outside the range where O({p}) restricts irreducibly"
        )));
    }
    let rs = RootSystem::orthogonal(p);
    let w: Vec<i64> = (0..rs.rank).map(|i| lambda.get(i).copied().unwrap_or(0) as i64).collect();
    weyl_dim(&rs, &weight_from_ints(&w))
}

/// Dimension of the Sp(2p) module with highest weight `lambda`.
pub fn dim_symplectic(p: usize, lambda: &[usize]) -> Result<BigInt> {
    if lambda.iter().filter(|&&x| x > 0).count() > p {
        return Err(Error::IndexOutOfRange(format!("partition longer than {p}")));
    }
    let rs = RootSystem::new(RootType::C, p);
    let w: Vec<i64> = (0..p).map(|i| lambda.get(i).copied().unwrap_or(0) as i64).collect();
    weyl_dim(&rs, &weight_from_ints(&w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn root_counts() {
        for r in 1..=6 {
            assert_eq!(RootSystem::new(RootType::A, r).positive_roots.len(), r * (r - 1) / 2);
            assert_eq!(RootSystem::new(RootType::B, r).positive_roots.len(), r * r);
            assert_eq!(RootSystem::new(RootType::C, r).positive_roots.len(), r * r);
            assert_eq!(RootSystem::new(RootType::D, r).positive_roots.len(), r * (r - 1));
        }
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&RootSystem::new(RootType::B, 1)), vec![q(1, 2)]);
        assert_eq!(rho(&RootSystem::new(RootType::A, 3)), weight_from_ints(&[1, 0, -1]));
        assert_eq!(rho(&RootSystem::new(RootType::B, 2)), vec![q(3, 2), q(1, 2)]);
    }

    #[test]
    fn subset_examples() {
        let b2 = RootSystem::new(RootType::B, 2);
        let s = phi_plus_subset(&b2, SubsetMode::FirstN(1)).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.contains(&vec![1, -1]) && s.contains(&vec![1, 1]) && s.contains(&vec![1, 0]));
        let a3 = RootSystem::new(RootType::A, 4);
        let s = phi_plus_subset(&a3, SubsetMode::Block { m: 1, n: 1 }).unwrap();
        let expect = vec![vec![1, -1, 0, 0], vec![1, 0, -1, 0], vec![1, 0, 0, -1], vec![0, 1, 0, -1], vec![0, 0, 1, -1]];
        assert_eq!(s.len(), 5);
        for e in expect {
            assert!(s.contains(&e));
        }
        assert!(phi_plus_subset(&b2, SubsetMode::FirstN(3)).is_err());
        assert!(phi_plus_subset(&a3, SubsetMode::Block { m: 3, n: 2 }).is_err());
    }

    #[test]
    fn subset_counts() {
        for r in 1..=8 {
            for n in 0..=r {
                let b = phi_plus_subset(&RootSystem::new(RootType::B, r), SubsetMode::FirstN(n)).unwrap();
                let c = phi_plus_subset(&RootSystem::new(RootType::C, r), SubsetMode::FirstN(n)).unwrap();
                let d = phi_plus_subset(&RootSystem::new(RootType::D, r), SubsetMode::FirstN(n)).unwrap();
                assert_eq!(b.len(), 2 * r * n - n * n);
                assert_eq!(c.len(), 2 * r * n - n * n);
                assert_eq!(d.len(), 2 * r * n - n * n - n);
            }
            let a = RootSystem::new(RootType::A, r);
            for m in 0..=r {
                for n in 0..=r - m {
                    let s = phi_plus_subset(&a, SubsetMode::Block { m, n }).unwrap();
                    let t = m + n;
                    assert_eq!(s.len(), t * r - t * (t + 1) / 2);
                    if m * n == t * t.saturating_sub(1) / 2 {
                        assert_eq!(s.len(), (m + n) * r - m * m - n * n - m * n);
                    }
                }
            }
        }
    }

    #[test]
    fn weyl_dim_examples() {
        let a2 = RootSystem::new(RootType::A, 3);
        assert_eq!(weyl_dim(&a2, &weight_from_ints(&[1, 0, 0])).unwrap(), 3.into());
        assert_eq!(weyl_dim(&a2, &weight_from_ints(&[2, 1, 0])).unwrap(), 8.into());
        let b1 = RootSystem::new(RootType::B, 1);
        assert_eq!(weyl_dim(&b1, &weight_from_ints(&[2])).unwrap(), 5.into());
        assert!(matches!(weyl_dim(&a2, &weight_from_ints(&[0, 1, 0])), Err(Error::NonDominantWeight(_))));
        assert!(matches!(weyl_dim(&a2, &weight_from_ints(&[1, 0])), Err(Error::IndexOutOfRange(_))));
        // spin representation of B2 and the vector of C2, D3 = A3
        let b2 = RootSystem::new(RootType::B, 2);
        assert_eq!(weyl_dim(&b2, &[q(1, 2), q(1, 2)]).unwrap(), 4.into());
        assert_eq!(dim_symplectic(2, &[1]).unwrap(), 4.into());
        let d3 = RootSystem::new(RootType::D, 3);
        assert_eq!(weyl_dim(&d3, &weight_from_ints(&[1, 1, 0])).unwrap(), 15.into());
    }

    #[test]
    fn trivial_weight_has_dimension_one() {
        for ty in [RootType::A, RootType::B, RootType::C, RootType::D] {
            for r in 1..=5 {
                let rs = RootSystem::new(ty, r);
                assert_eq!(weyl_dim(&rs, &vec![BigRational::zero(); r]).unwrap(), BigInt::one());
            }
        }
    }

    #[test]
    fn prefactor_examples() {
        let b1 = RootSystem::new(RootType::B, 1);
        let s = phi_plus_subset(&b1, SubsetMode::FirstN(1)).unwrap();
        assert_eq!(rho_product_prefactor(&b1, &s), q(2, 1));
        let b2 = RootSystem::new(RootType::B, 2);
        let s = phi_plus_subset(&b2, SubsetMode::FirstN(1)).unwrap();
        assert_eq!(rho_product_prefactor(&b2, &s), q(1, 3));
        let a2 = RootSystem::new(RootType::A, 3);
        assert_eq!(rho_product_prefactor(&a2, &a2.positive_roots), q(1, 2));
    }

    #[test]
    fn classical_dimension_identities() {
        // harmonic polynomials of degree k on C^p
        for p in 3..8usize {
            for k in 0..6usize {
                let binom = |a: usize, b: usize| -> i64 {
                    (0..b).fold(1i64, |acc, i| acc * (a - i) as i64 / (i as i64 + 1))
                };
                let harmonic = binom(k + p - 1, p - 1) - if k >= 2 { binom(k + p - 3, p - 1) } else { 0 };
                assert_eq!(dim_orthogonal(p, &[k]).unwrap(), harmonic.into(), "p={p} k={k}");
            }
        }
        assert!(dim_orthogonal(4, &[1, 1]).is_err());
        assert_eq!(dim_gl(&[1, 0, -1]).unwrap(), 8.into());
    }
}
