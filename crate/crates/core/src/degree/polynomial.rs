use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Sparse polynomial with big-rational coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPolynomial {
    variables: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl ExactPolynomial {
    pub fn zero(variables: &[String]) -> Self {
        ExactPolynomial { variables: variables.to_vec(), terms: BTreeMap::new() }
    }

    pub fn constant(variables: &[String], c: BigRational) -> Self {
        let mut p = Self::zero(variables);
        if !c.is_zero() {
            p.terms.insert(vec![0; variables.len()], c);
        }
        p
    }

    pub fn one(variables: &[String]) -> Self {
        Self::constant(variables, BigRational::one())
    }

    /// Variables named x1..xn.
    pub fn names(prefix: &str, n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("{prefix}{i}")).collect()
    }

    pub fn var(variables: &[String], i: usize) -> Self {
        let mut e = vec![0; variables.len()];
        e[i] = 1;
        Self::from_terms(variables, [(e, BigRational::one())])
    }

    pub fn from_terms(variables: &[String], terms: impl IntoIterator<Item = (Vec<u32>, BigRational)>) -> Self {
        let mut p = Self::zero(variables);
        for (e, c) in terms {
            assert_eq!(e.len(), variables.len(), "exponent length");
            p.add_term(e, c);
        }
        p
    }

    /// sum_i coeffs[i] * x_i
    pub fn linear(variables: &[String], coeffs: &[BigRational]) -> Self {
        let terms = coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| {
            let mut e = vec![0; variables.len()];
            e[i] = 1;
            (e, c.clone())
        });
        Self::from_terms(variables, terms.collect::<Vec<_>>())
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree of the homogeneous polynomial, or None if it is not homogeneous (or zero).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum::<u32>()).max()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.variables);
        }
        ExactPolynomial { variables: self.variables.clone(), terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn add(&self, other: &ExactPolynomial) -> Self {
        assert_eq!(self.variables, other.variables, "variable lists");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ExactPolynomial) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    /// Product, refusing results with more than `cap` monomials.
    pub fn mul_capped(&self, other: &ExactPolynomial, cap: usize) -> Result<Self> {
        assert_eq!(self.variables, other.variables, "variable lists");
        let mut acc: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(BigRational::zero) += c1 * c2;
                if acc.len() > cap {
                    return Err(Error::CapExceeded(format!("polynomial product exceeds {cap} monomials")));
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(ExactPolynomial { variables: self.variables.clone(), terms: acc })
    }

    pub fn mul(&self, other: &ExactPolynomial) -> Self {
        self.mul_capped(other, usize::MAX).expect("uncapped product")
    }

    pub fn pow_capped(&self, k: u32, cap: usize) -> Result<Self> {
        let mut out = Self::one(&self.variables);
        for _ in 0..k {
            out = out.mul_capped(self, cap)?;
        }
        Ok(out)
    }

    /// Evaluates at rational values.
    pub fn eval(&self, x: &[BigRational]) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (e, c)| {
            let mono = e.iter().zip(x).fold(BigRational::one(), |m, (&k, v)| m * num::pow(v.clone(), k as usize));
            acc + c * mono
        })
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let c = c.to_f64().unwrap_or(f64::NAN);
                e.iter().zip(x).fold(c, |m, (&k, v)| m * v.powi(k as i32))
            })
            .sum()
    }

    /// Re-embeds into a longer variable list; `positions[i]` is the new index of variable i.
    pub fn embed(&self, variables: &[String], positions: &[usize]) -> Self {
        let terms = self.terms.iter().map(|(e, c)| {
            let mut ne = vec![0; variables.len()];
            for (i, &k) in e.iter().enumerate() {
                ne[positions[i]] += k;
            }
            (ne, c.clone())
        });
        Self::from_terms(variables, terms.collect::<Vec<_>>())
    }

    /// The coefficient of one monomial.
    pub fn coefficient(&self, e: &[u32]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }
}

/// prod_{i<j} (x_i - x_j) on the variables with indices `idx`, with each x replaced by x^power.
pub fn difference_product(variables: &[String], idx: &[usize], power: u32, cap: usize) -> Result<ExactPolynomial> {
    let mut out = ExactPolynomial::one(variables);
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            let mut ea = vec![0; variables.len()];
            let mut eb = vec![0; variables.len()];
            ea[idx[a]] = power;
            eb[idx[b]] = power;
            let f = ExactPolynomial::from_terms(variables, [(ea, BigRational::one()), (eb, -BigRational::one())]);
            out = out.mul_capped(&f, cap)?;
        }
    }
    Ok(out)
}

/// prod_{i in idx} x_i^k
pub fn monomial_power(variables: &[String], idx: &[usize], k: u32) -> ExactPolynomial {
    let mut e = vec![0; variables.len()];
    for &i in idx {
        e[i] += k;
    }
    ExactPolynomial::from_terms(variables, [(e, BigRational::one())])
}

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest degree first
        let mut ordered: Vec<(&Vec<u32>, &BigRational)> = self.terms.iter().collect();
        ordered.sort_by(|a, b| b.0.iter().sum::<u32>().cmp(&a.0.iter().sum::<u32>()).then(b.0.cmp(a.0)));
        for (k, (e, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mag = c.abs();
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &d)| d > 0)
                .map(|(i, &d)| if d == 1 { self.variables[i].clone() } else { format!("{}^{d}", self.variables[i]) })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&mag), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}
