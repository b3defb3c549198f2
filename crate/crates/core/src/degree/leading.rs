use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};

use super::integrals::{product_simplex_integral, simplex_integral};
use super::polynomial::{difference_product, factorial, monomial_power, ExactPolynomial};
use crate::combinatorics::{DualPair, PairKind};
use crate::error::{Error, Result};
use crate::rootdata::{phi_plus_subset, rho_product_prefactor, RootSystem, RootType, SubsetMode};

pub const DEFAULT_MONOMIAL_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitFamily {
    Trivial,
    RegularHol,
}

impl OrbitFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            OrbitFamily::Trivial => "trivial",
            OrbitFamily::RegularHol => "regular-hol",
        }
    }
}

impl fmt::Display for OrbitFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OrbitFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" | "triv" => Ok(OrbitFamily::Trivial),
            "regular-hol" | "regular_hol" | "regular" => Ok(OrbitFamily::RegularHol),
            _ => Err(Error::Parse(format!("unknown orbit family {s:?}"))),
        }
    }
}

/// One Weyl-dimension factor: a root system and a weight whose coordinates are linear in the variables.
#[derive(Debug, Clone)]
pub struct WeightFactor {
    pub label: String,
    pub roots: RootSystem,
    pub subset_mode: SubsetMode,
    /// coordinate -> (variable index, coefficient)
    pub weight: Vec<Vec<(usize, i64)>>,
}

/// Leading form of the Hilbert function summand: prefactor * polynomial.
#[derive(Debug, Clone)]
pub struct LeadingForm {
    pub polynomial: ExactPolynomial,
    pub prefactor: BigRational,
    /// Sizes of the variable blocks on which the summand is symmetric (n, or m and n).
    pub blocks: Vec<usize>,
    pub factors: Vec<WeightFactor>,
}

impl LeadingForm {
    /// prefactor * polynomial
    pub fn full(&self) -> ExactPolynomial {
        self.polynomial.scale(&self.prefactor)
    }

    pub fn degree(&self) -> u32 {
        self.polynomial.homogeneous_degree().unwrap_or(0)
    }

    pub fn nvars(&self) -> usize {
        self.polynomial.nvars()
    }

    /// Projective dimension of the orbit closure.
    pub fn d_projective(&self) -> usize {
        self.degree() as usize + self.nvars() - 1
    }
}

fn weight_factors(pair: &DualPair, orbit: OrbitFamily) -> Vec<WeightFactor> {
    let DualPair { p, q, m, n, .. } = *pair;
    let first = |k: usize| -> Vec<Vec<(usize, i64)>> {
        // (x_1, .., x_n, 0, ..) in rank k
        (0..k).map(|c| if c < n { vec![(c, 1)] } else { vec![] }).collect()
    };
    let neg_rev = |k: usize, vars: &[usize]| -> Vec<Vec<(usize, i64)>> {
        // (0, .., 0, -v_last, .., -v_1) in rank k
        let mut w = vec![vec![]; k];
        for (j, &v) in vars.iter().enumerate() {
            w[k - 1 - j].push((v, -1));
        }
        w
    };
    let mixed = |k: usize, pos: &[usize], neg: &[usize]| -> Vec<Vec<(usize, i64)>> {
        let mut w = neg_rev(k, neg);
        for (i, &v) in pos.iter().enumerate() {
            w[i].push((v, 1));
        }
        w
    };
    let xs: Vec<usize> = (0..m).collect();
    let ys: Vec<usize> = (m..m + n).collect();
    let lam: Vec<usize> = (0..n).collect();
    let f = |label: String, roots: RootSystem, subset_mode: SubsetMode, weight| WeightFactor { label, roots, subset_mode, weight };
    match (pair.kind, orbit) {
        (PairKind::OSp, OrbitFamily::Trivial) => vec![
            f(format!("O({p})"), RootSystem::orthogonal(p), SubsetMode::FirstN(n), first(p / 2)),
            f(format!("O({q})"), RootSystem::orthogonal(q), SubsetMode::FirstN(n), first(q / 2)),
        ],
        (PairKind::OSp, OrbitFamily::RegularHol) => vec![
            f(format!("GL({p})"), RootSystem::new(RootType::A, p), SubsetMode::Block { m: 0, n }, neg_rev(p, &lam)),
            f(format!("O({q})"), RootSystem::orthogonal(q), SubsetMode::FirstN(n), first(q / 2)),
        ],
        (PairKind::SpOstar, OrbitFamily::Trivial) => vec![
            f(format!("Sp({})", 2 * p), RootSystem::new(RootType::C, p), SubsetMode::FirstN(n), first(p)),
            f(format!("Sp({})", 2 * q), RootSystem::new(RootType::C, q), SubsetMode::FirstN(n), first(q)),
        ],
        (PairKind::SpOstar, OrbitFamily::RegularHol) => vec![
            f(format!("GL({})", 2 * p), RootSystem::new(RootType::A, 2 * p), SubsetMode::Block { m: 0, n }, neg_rev(2 * p, &lam)),
            f(format!("Sp({})", 2 * q), RootSystem::new(RootType::C, q), SubsetMode::FirstN(n), first(q)),
        ],
        (PairKind::UU, OrbitFamily::Trivial) => vec![
            f(format!("GL({p})"), RootSystem::new(RootType::A, p), SubsetMode::Block { m: n, n: m }, mixed(p, &ys, &xs)),
            f(format!("GL({q})"), RootSystem::new(RootType::A, q), SubsetMode::Block { m, n }, mixed(q, &xs, &ys)),
        ],
        (PairKind::UU, OrbitFamily::RegularHol) => vec![
            f(format!("GL({p})"), RootSystem::new(RootType::A, p), SubsetMode::Block { m: 0, n: m }, neg_rev(p, &xs)),
            f(format!("GL({p})"), RootSystem::new(RootType::A, p), SubsetMode::Block { m: n, n: 0 }, mixed(p, &ys, &[])),
            f(format!("GL({q})"), RootSystem::new(RootType::A, q), SubsetMode::Block { m, n }, mixed(q, &xs, &ys)),
        ],
    }
}

fn variables(pair: &DualPair) -> (Vec<String>, Vec<usize>) {
    match pair.kind {
        PairKind::UU => {
            let mut v = ExactPolynomial::names("x", pair.m);
            v.extend(ExactPolynomial::names("y", pair.n));
            (v, vec![pair.m, pair.n])
        }
        _ => (ExactPolynomial::names("x", pair.n), vec![pair.n]),
    }
}

/// Top homogeneous part of the Weyl-dimension product summed in the Hilbert function of
/// the orbit closure: the product over roots with nonvanishing pairing of <lambda, alpha> / <rho, alpha>.
pub fn leading_degree_form(pair: &DualPair, orbit: OrbitFamily, cap: usize) -> Result<LeadingForm> {
    if orbit == OrbitFamily::RegularHol && pair.kind == PairKind::UU && pair.m < pair.n {
        return Err(Error::InvalidInput(format!("{pair}: the regular holomorphic orbit needs m >= n")));
    }
    let (vars, blocks) = variables(pair);
    let factors = weight_factors(pair, orbit);
    let mut poly = ExactPolynomial::one(&vars);
    let mut prefactor = BigRational::one();
    for fac in &factors {
        let mut subset = Vec::new();
        for root in &fac.roots.positive_roots {
            let mut coeffs = vec![BigRational::zero(); vars.len()];
            for (c, &a) in root.iter().enumerate() {
                if a != 0 {
                    for &(v, k) in &fac.weight[c] {
                        coeffs[v] += BigRational::from_integer(BigInt::from(a * k));
                    }
                }
            }
            if coeffs.iter().all(Zero::is_zero) {
                continue;
            }
            subset.push(root.clone());
            poly = poly.mul_capped(&ExactPolynomial::linear(&vars, &coeffs), cap)?;
        }
        let expected = phi_plus_subset(&fac.roots, fac.subset_mode)?;
        debug_assert_eq!(subset.len(), expected.len(), "nonvanishing roots for {}", fac.label);
        prefactor *= rho_product_prefactor(&fac.roots, &subset);
    }
    Ok(LeadingForm { polynomial: poly, prefactor, blocks, factors })
}

/// (deg + nvars)! / prod(block sizes)! * int_{Omega_nvars} P~.
pub fn degree_from_leading_form(form: &LeadingForm) -> BigRational {
    let top = form.degree() as u64 + form.nvars() as u64;
    let norm = form.blocks.iter().fold(BigInt::one(), |acc, &b| acc * factorial(b as u64));
    BigRational::new(factorial(top), norm) * &form.prefactor * simplex_integral(&form.polynomial)
}

pub fn degree_asymptotic(pair: &DualPair, orbit: OrbitFamily, cap: usize) -> Result<BigRational> {
    Ok(degree_from_leading_form(&leading_degree_form(pair, orbit, cap)?))
}

fn subset_prefactor(rs: &RootSystem, mode: SubsetMode) -> Result<BigRational> {
    Ok(rho_product_prefactor(rs, &phi_plus_subset(rs, mode)?))
}

fn exponent(e: i64) -> Result<u32> {
    u32::try_from(e).map_err(|_| Error::InvalidInput(format!("negative exponent {e}")))
}

/// Prefactor and integrand of the closed-form display, exponents taken literally.
pub fn literal_display_parts(pair: &DualPair, orbit: OrbitFamily, cap: usize) -> Result<(BigRational, ExactPolynomial)> {
    let DualPair { p, q, m, n, .. } = *pair;
    let (pi, qi, mi, ni) = (p as i64, q as i64, m as i64, n as i64);
    let (vars, _) = variables(pair);
    let all: Vec<usize> = (0..vars.len()).collect();
    let a = |r: usize| RootSystem::new(RootType::A, r);
    let c = |r: usize| RootSystem::new(RootType::C, r);
    let nf = BigRational::from_integer(factorial(n as u64));
    match pair.kind {
        PairKind::OSp | PairKind::SpOstar => {
            let d2 = difference_product(&vars, &all, 2, cap)?;
            let d1 = difference_product(&vars, &all, 1, cap)?;
            let (pre, body, e) = match (pair.kind, orbit) {
                (PairKind::OSp, OrbitFamily::Trivial) => (
                    subset_prefactor(&RootSystem::orthogonal(p), SubsetMode::FirstN(n))?
                        * subset_prefactor(&RootSystem::orthogonal(q), SubsetMode::FirstN(n))?
                        / &nf,
                    d2.mul_capped(&d2, cap)?,
                    pi + qi - 2 * ni,
                ),
                (PairKind::OSp, OrbitFamily::RegularHol) => (
                    subset_prefactor(&RootSystem::orthogonal(p), SubsetMode::FirstN(n))?
                        * subset_prefactor(&a(q), SubsetMode::FirstN(n))?
                        / &nf,
                    d2.mul_capped(&d1, cap)?,
                    pi + qi - 3 * ni,
                ),
                (_, OrbitFamily::Trivial) => (
                    BigRational::from_integer(BigInt::one() << (2 * n))
                        * subset_prefactor(&c(p), SubsetMode::FirstN(n))?
                        * subset_prefactor(&c(q), SubsetMode::FirstN(n))?
                        / &nf,
                    d2.mul_capped(&d2, cap)?,
                    2 * (pi + qi) - 4 * ni + 2,
                ),
                (_, OrbitFamily::RegularHol) => (
                    BigRational::from_integer(BigInt::one() << n)
                        * subset_prefactor(&c(p), SubsetMode::FirstN(n))?
                        * subset_prefactor(&a(2 * q), SubsetMode::FirstN(n))?
                        / &nf,
                    d2.mul_capped(&d1, cap)?,
                    2 * (pi + qi) - 3 * ni + 1,
                ),
            };
            let body = body.mul_capped(&monomial_power(&vars, &all, exponent(e)?), cap)?;
            Ok((pre, body))
        }
        PairKind::UU => {
            let xs: Vec<usize> = (0..m).collect();
            let ys: Vec<usize> = (m..m + n).collect();
            let dx = difference_product(&vars, &xs, 1, cap)?;
            let dy = difference_product(&vars, &ys, 1, cap)?;
            let mut cross = ExactPolynomial::one(&vars);
            for &i in &xs {
                for &j in &ys {
                    let f = ExactPolynomial::var(&vars, i).add(&ExactPolynomial::var(&vars, j));
                    cross = cross.mul_capped(&f, cap)?;
                }
            }
            let norm = BigRational::from_integer(factorial(m as u64) * factorial(n as u64));
            let base = dx.mul_capped(&dx, cap)?.mul_capped(&dy.mul_capped(&dy, cap)?, cap)?;
            let (pre, body, ex, ey) = match orbit {
                OrbitFamily::Trivial => (
                    subset_prefactor(&a(p), SubsetMode::Block { m, n })? * subset_prefactor(&a(q), SubsetMode::Block { m, n })?
                        / &norm,
                    base.mul_capped(&cross.mul_capped(&cross, cap)?, cap)?,
                    pi + qi - 2 * (mi + ni),
                    pi + qi - 2 * (mi + ni),
                ),
                OrbitFamily::RegularHol => (
                    subset_prefactor(&a(p), SubsetMode::Block { m, n })?
                        * subset_prefactor(&a(q), SubsetMode::FirstN(m))?
                        * subset_prefactor(&a(q), SubsetMode::FirstN(n))?
                        / &norm,
                    base.mul_capped(&cross, cap)?,
                    pi + qi - (2 * mi + ni),
                    pi + qi - (mi + 2 * ni),
                ),
            };
            let body = body
                .mul_capped(&monomial_power(&vars, &xs, exponent(ex)?), cap)?
                .mul_capped(&monomial_power(&vars, &ys, exponent(ey)?), cap)?;
            Ok((pre, body))
        }
    }
}

/// The closed-form display evaluated verbatim (no d! factor), for side-by-side reporting.
pub fn degree_paper_literal(pair: &DualPair, orbit: OrbitFamily, cap: usize) -> Result<BigRational> {
    let (pre, body) = literal_display_parts(pair, orbit, cap)?;
    let integral = match pair.kind {
        PairKind::UU => product_simplex_integral(&body, pair.m),
        _ => simplex_integral(&body),
    };
    Ok(pre * integral)
}
