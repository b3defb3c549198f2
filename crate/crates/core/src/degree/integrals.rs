use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::polynomial::{difference_product, factorial, monomial_power, ExactPolynomial};
use crate::error::{Error, Result};

fn fact_q(n: u64) -> BigRational {
    BigRational::from_integer(factorial(n))
}

/// Integral of prod x_i^{a_i} over the simplex Omega_n: prod a_i! / (n + sum a_i)!.
pub fn dirichlet_integral(exponents: &[u32]) -> BigRational {
    let n = exponents.len() as u64;
    let total: u64 = exponents.iter().map(|&a| a as u64).sum();
    let num = exponents.iter().fold(BigInt::one(), |acc, &a| acc * factorial(a as u64));
    BigRational::new(num, factorial(n + total))
}

/// Exact integral of a polynomial over Omega_n (n = number of variables).
pub fn simplex_integral(f: &ExactPolynomial) -> BigRational {
    let terms: Vec<(&Vec<u32>, &BigRational)> = f.terms().iter().collect();
    terms
        .par_iter()
        .map(|(e, c)| *c * dirichlet_integral(e))
        .reduce(BigRational::zero, |a, b| a + b)
}

/// Exact integral over Omega_m x Omega_n; the first `m` variables live on the first factor.
pub fn product_simplex_integral(f: &ExactPolynomial, m: usize) -> BigRational {
    let terms: Vec<(&Vec<u32>, &BigRational)> = f.terms().iter().collect();
    terms
        .par_iter()
        .map(|(e, c)| *c * dirichlet_integral(&e[..m]) * dirichlet_integral(&e[m..]))
        .reduce(BigRational::zero, |a, b| a + b)
}

fn positive_integer_kappa(kappa: &BigRational) -> Result<u32> {
    if !kappa.is_positive() {
        return Err(Error::NonPositiveKappa(kappa.to_string()));
    }
    if !kappa.is_integer() {
        return Err(Error::NotIntegral(format!("kappa = {kappa} is not an integer")));
    }
    kappa.to_integer().to_u32().ok_or_else(|| Error::InvalidInput(format!("kappa = {kappa} is too large")))
}

/// D_n(x^2) D_n(x) prod x_i^{kappa-1}
pub fn selberg_integrand(n: usize, kappa: u32, cap: usize) -> Result<ExactPolynomial> {
    let v = ExactPolynomial::names("x", n);
    let idx: Vec<usize> = (0..n).collect();
    let f = difference_product(&v, &idx, 2, cap)?.mul_capped(&difference_product(&v, &idx, 1, cap)?, cap)?;
    f.mul_capped(&monomial_power(&v, &idx, kappa - 1), cap)
}

/// D_n(x^2)^2 prod x_i^{kappa-1}
pub fn dsquared_integrand(n: usize, kappa: u32, cap: usize) -> Result<ExactPolynomial> {
    let v = ExactPolynomial::names("x", n);
    let idx: Vec<usize> = (0..n).collect();
    let d = difference_product(&v, &idx, 2, cap)?;
    d.mul_capped(&d, cap)?.mul_capped(&monomial_power(&v, &idx, kappa - 1), cap)
}

/// (1/n!) int_{Omega_n} D_n(x^2) D_n(x) prod x_i^{kappa-1} dx by monomial expansion.
pub fn selberg_lhs_exact(n: usize, kappa: &BigRational, cap: usize) -> Result<BigRational> {
    let k = positive_integer_kappa(kappa)?;
    let f = selberg_integrand(n, k, cap)?;
    Ok(simplex_integral(&f) / fact_q(n as u64))
}

/// 2^{n(n-1)/2} prod_{i<n} i! Gamma(kappa + 2i) / Gamma(3n(n-1)/2 + n kappa + 1), exact for integer kappa.
pub fn selberg_closed_form(n: usize, kappa: &BigRational) -> Result<BigRational> {
    let k = positive_integer_kappa(kappa)? as u64;
    let n64 = n as u64;
    let mut num = BigInt::one() << (n * n.saturating_sub(1) / 2);
    for i in 0..n64 {
        num *= factorial(i) * factorial(k + 2 * i - 1);
    }
    let den = factorial(3 * n64 * n64.saturating_sub(1) / 2 + n64 * k);
    Ok(BigRational::new(num, den))
}

/// Floating-point closed form, valid for any real kappa > 0.
pub fn selberg_closed_form_f64(n: usize, kappa: f64) -> Result<f64> {
    if kappa <= 0.0 || kappa.is_nan() {
        return Err(Error::NonPositiveKappa(kappa.to_string()));
    }
    use statrs::function::gamma::ln_gamma;
    let nf = n as f64;
    let mut log = nf * (nf - 1.0) / 2.0 * std::f64::consts::LN_2;
    for i in 0..n {
        log += ln_gamma(i as f64 + 1.0) + ln_gamma(kappa + 2.0 * i as f64);
    }
    log -= ln_gamma(3.0 * nf * (nf - 1.0) / 2.0 + nf * kappa + 1.0);
    Ok(log.exp())
}

/// (c)_k = c (c+1) ... (c+k-1)
fn pochhammer(c: i64, k: u32) -> BigInt {
    (0..k as i64).fold(BigInt::one(), |acc, j| acc * BigInt::from(c + j))
}

fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else { return BigRational::zero() };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c].clone();
        for i in c + 1..n {
            let f = &m[i][c] / &m[c][c];
            for j in c..n {
                let v = &m[c][j] * &f;
                m[i][j] -= v;
            }
        }
    }
    det
}

/// prod_{i<n} Gamma(kappa + 2i) / Gamma(2n(n-1) + n kappa + 1) * det((kappa + 2i - 2)_{2j-2})_{i,j=1..n}.
pub fn dsquared_closed_form(n: usize, kappa: &BigRational) -> Result<BigRational> {
    let k = positive_integer_kappa(kappa)? as u64;
    let n64 = n as u64;
    let num = (0..n64).fold(BigInt::one(), |acc, i| acc * factorial(k + 2 * i - 1));
    let den = factorial(2 * n64 * n64.saturating_sub(1) + n64 * k);
    let m: Vec<Vec<BigRational>> = (1..=n as i64)
        .map(|i| {
            (1..=n as u32)
                .map(|j| BigRational::from_integer(pochhammer(k as i64 + 2 * i - 2, 2 * j - 2)))
                .collect()
        })
        .collect();
    Ok(BigRational::new(num, den) * determinant(m))
}

/// (1/n!) int_{Omega_n} D_n(x^2)^2 prod x_i^{kappa-1} dx by monomial expansion.
pub fn dsquared_lhs_exact(n: usize, kappa: &BigRational, cap: usize) -> Result<BigRational> {
    let k = positive_integer_kappa(kappa)?;
    Ok(simplex_integral(&dsquared_integrand(n, k, cap)?) / fact_q(n as u64))
}

/// Gamma(a+1) int_{Omega_n} f = int_{(0,inf)^n} f e^{-sum y} dy, monomial by monomial,
/// for f homogeneous of degree a - n.
pub fn laplace_identity_check(f: &ExactPolynomial) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let deg = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let a = deg as u64 + f.nvars() as u64;
    let gamma_a1 = fact_q(a);
    Ok(f.terms().keys().all(|e| {
        let lhs = &gamma_a1 * dirichlet_integral(e);
        let rhs = e.iter().fold(BigRational::one(), |acc, &k| acc * fact_q(k as u64));
        lhs == rhs
    }))
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarlo {
    pub estimate: f64,
    pub std_error: f64,
    pub exact: f64,
    pub within: bool,
}

/// Uniform sampling of Omega_n through normalized exponential spacings.
pub fn monte_carlo_simplex(f: &ExactPolynomial, samples: usize, seed: u64) -> MonteCarlo {
    let n = f.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let volume = 1.0 / (1..=n).map(|k| k as f64).product::<f64>();
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    let mut x = vec![0.0; n];
    for _ in 0..samples {
        let e: Vec<f64> = (0..=n).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
        let total: f64 = e.iter().sum();
        for i in 0..n {
            x[i] = e[i] / total;
        }
        let v = f.eval_f64(&x);
        sum += v;
        sum_sq += v * v;
    }
    let s = samples.max(1) as f64;
    let mean = sum / s;
    let var = (sum_sq / s - mean * mean).max(0.0);
    let estimate = mean * volume;
    let std_error = (var / s).sqrt() * volume;
    let exact = simplex_integral(f).to_f64().unwrap_or(f64::NAN);
    let within = (estimate - exact).abs() <= 3.0 * std_error + 1e-12 * exact.abs();
    MonteCarlo { estimate, std_error, exact, within }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn dirichlet_examples() {
        assert_eq!(dirichlet_integral(&[3, 0]), q(1, 20));
        assert_eq!(dirichlet_integral(&[2, 1]), q(1, 60));
        assert_eq!(dirichlet_integral(&[0, 0, 0]), q(1, 6));
        assert_eq!(dirichlet_integral(&[]), q(1, 1));
    }

    #[test]
    fn selberg_examples() {
        let cap = 1_000_000;
        assert_eq!(selberg_lhs_exact(1, &q(5, 1), cap).unwrap(), q(1, 5));
        assert_eq!(selberg_closed_form(1, &q(5, 1)).unwrap(), q(1, 5));
        assert_eq!(selberg_lhs_exact(2, &q(1, 1), cap).unwrap(), q(1, 30));
        assert_eq!(selberg_closed_form(2, &q(1, 1)).unwrap(), q(1, 30));
        assert_eq!(selberg_lhs_exact(3, &q(2, 1), cap).unwrap(), selberg_closed_form(3, &q(2, 1)).unwrap());
        assert!(matches!(selberg_closed_form(2, &q(0, 1)), Err(Error::NonPositiveKappa(_))));
        assert!(matches!(selberg_closed_form(2, &q(1, 2)), Err(Error::NotIntegral(_))));
        let f = selberg_closed_form_f64(2, 1.0).unwrap();
        assert!((f - 1.0 / 30.0).abs() < 1e-12);
        assert!(selberg_closed_form_f64(2, 0.5).unwrap() > 0.0);
    }

    #[test]
    fn dsquared_examples() {
        assert_eq!(dsquared_closed_form(1, &q(3, 1)).unwrap(), q(1, 3));
        assert_eq!(dsquared_closed_form(2, &q(1, 1)).unwrap(), dsquared_lhs_exact(2, &q(1, 1), 1000).unwrap());
    }

    #[test]
    fn laplace_examples() {
        let v = ExactPolynomial::names("x", 1);
        let f = ExactPolynomial::from_terms(&v, [(vec![3], q(1, 1))]);
        assert!(laplace_identity_check(&f).unwrap());
        let v2 = ExactPolynomial::names("x", 2);
        let g = ExactPolynomial::from_terms(&v2, [(vec![1, 1], q(1, 1))]);
        assert!(laplace_identity_check(&g).unwrap());
        let h = ExactPolynomial::from_terms(&v2, [(vec![1, 1], q(1, 1)), (vec![1, 0], q(1, 1))]);
        assert_eq!(laplace_identity_check(&h), Err(Error::NotHomogeneous));
    }

    #[test]
    fn monte_carlo_agrees() {
        let f = selberg_integrand(2, 2, 1000).unwrap();
        let mc = monte_carlo_simplex(&f, 20_000, 5);
        assert!(mc.within, "{mc:?}");
    }
}
