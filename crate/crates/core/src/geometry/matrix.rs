use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, Complex, Integer, One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// A Gaussian rational a + bi.
pub type Gq = Complex<BigRational>;

pub fn gq(re: i64, im: i64) -> Gq {
    Complex::new(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
}

pub fn gq_rat(re: BigRational) -> Gq {
    Complex::new(re, BigRational::zero())
}

pub fn gq_zero() -> Gq {
    gq(0, 0)
}

pub fn gq_one() -> Gq {
    gq(1, 0)
}

pub fn gq_i() -> Gq {
    gq(0, 1)
}

/// Dense matrix over the Gaussian rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Gq>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![gq_zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, gq_one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Gq) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    /// Integer entries, row-major.
    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        Self::from_fn(rows, cols, |i, j| gq(entries[i * cols + j], 0))
    }

    /// Gaussian-integer entries (re, im), row-major.
    pub fn from_gaussian(rows: usize, cols: usize, entries: &[(i64, i64)]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        Self::from_fn(rows, cols, |i, j| {
            let (a, b) = entries[i * cols + j];
            gq(a, b)
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Gq {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Gq) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Gq) -> Self {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_alternating(&self) -> bool {
        self.is_square() && *self == -&self.transpose()
    }

    pub fn try_mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!("{:?} times {:?}", self.shape(), other.shape())));
        }
        Ok(self * other)
    }

    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn column(&self, j: usize) -> Self {
        self.submatrix(0, self.rows, j, j + 1)
    }

    /// Stack blocks given row by row; blocks in one row share a height.
    pub fn block(blocks: &[Vec<&ExactMatrix>]) -> Self {
        let rows: usize = blocks.iter().map(|r| r[0].rows).sum();
        let cols: usize = blocks[0].iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut r0 = 0;
        for row in blocks {
            let mut c0 = 0;
            for b in row {
                assert_eq!(b.rows, row[0].rows, "block heights");
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out.set(r0 + i, c0 + j, b.get(i, j).clone());
                    }
                }
                c0 += b.cols;
            }
            assert_eq!(c0, cols, "block widths");
            r0 += row[0].rows;
        }
        out
    }

    pub fn vstack(top: &ExactMatrix, bottom: &ExactMatrix) -> Self {
        Self::block(&[vec![top], vec![bottom]])
    }

    pub fn hstack(left: &ExactMatrix, right: &ExactMatrix) -> Self {
        Self::block(&[vec![left, right]])
    }

    /// Rank by fraction-free (Bareiss) elimination over the Gaussian integers.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Complex<BigInt>>> = (0..self.rows).map(|i| self.integral_row(i)).collect();
        let mut prev = Complex::new(BigInt::one(), BigInt::zero());
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(r, piv);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                    let q = &num / &prev;
                    debug_assert_eq!(&q * &prev, num, "inexact Bareiss step");
                    m[i][j] = q;
                }
                m[i][c] = Complex::zero();
            }
            prev = m[r][c].clone();
            r += 1;
        }
        r
    }

    fn integral_row(&self, i: usize) -> Vec<Complex<BigInt>> {
        let row = &self.data[i * self.cols..(i + 1) * self.cols];
        let l = row.iter().fold(BigInt::one(), |acc, z| acc.lcm(z.re.denom()).lcm(z.im.denom()));
        row.iter()
            .map(|z| {
                let re = (&z.re * BigRational::from_integer(l.clone())).to_integer();
                let im = (&z.im * BigRational::from_integer(l.clone())).to_integer();
                Complex::new(re, im)
            })
            .collect()
    }

    /// Inverse by Gauss-Jordan elimination, `None` if singular.
    pub fn inverse(&self) -> Option<ExactMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let piv = (c..n).find(|&i| !a.get(i, c).is_zero())?;
            a.swap_rows(c, piv);
            inv.swap_rows(c, piv);
            let s = gq_one() / a.get(c, c).clone();
            a.scale_row(c, &s);
            inv.scale_row(c, &s);
            for i in 0..n {
                if i != c && !a.get(i, c).is_zero() {
                    let f = a.get(i, c).clone();
                    a.add_row_multiple(i, c, &-f.clone());
                    inv.add_row_multiple(i, c, &-f);
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, i: usize, s: &Gq) {
        for j in 0..self.cols {
            let v = self.get(i, j) * s;
            self.set(i, j, v);
        }
    }

    /// row_i += f * row_src
    fn add_row_multiple(&mut self, i: usize, src: usize, f: &Gq) {
        for j in 0..self.cols {
            let v = self.get(i, j) + self.get(src, j) * f;
            self.set(i, j, v);
        }
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.rows)
            .map(|i| Value::Array((0..self.cols).map(|j| gq_to_json(self.get(i, j))).collect()))
            .collect();
        Value::Array(rows)
    }

    /// Parses a JSON array of rows of [re_num, re_den, im_num, im_den]; an empty array is a 0x0 matrix.
    pub fn from_json(value: &Value) -> Result<ExactMatrix> {
        let rows = value.as_array().ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
        let mut data = Vec::new();
        let mut cols = None;
        for row in rows {
            let row = row.as_array().ok_or_else(|| Error::Parse("matrix row must be an array".into()))?;
            if *cols.get_or_insert(row.len()) != row.len() {
                return Err(Error::Parse("ragged matrix".into()));
            }
            for e in row {
                data.push(gq_from_json(e)?);
            }
        }
        Ok(ExactMatrix { rows: rows.len(), cols: cols.unwrap_or(0), data })
    }
}

fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    if let Some(i) = v.as_i64() {
        return Ok(i.into());
    }
    v.as_str().and_then(|s| s.parse().ok()).ok_or_else(|| Error::Parse(format!("bad integer {v}")))
}

pub fn gq_to_json(z: &Gq) -> Value {
    json!([int_json(z.re.numer()), int_json(z.re.denom()), int_json(z.im.numer()), int_json(z.im.denom())])
}

pub fn gq_from_json(v: &Value) -> Result<Gq> {
    let q = v.as_array().filter(|a| a.len() == 4).ok_or_else(|| Error::Parse(format!("expected a quadruple, found {v}")))?;
    let parts: Vec<BigInt> = q.iter().map(int_from_json).collect::<Result<_>>()?;
    if parts[1].is_zero() || parts[3].is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Complex::new(
        BigRational::new(parts[0].clone(), parts[1].clone()),
        BigRational::new(parts[2].clone(), parts[3].clone()),
    ))
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shapes");
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * rhs.cols + j;
                        out.data[idx] = &out.data[idx] + a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;

    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shapes");
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;

    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shapes");
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;

    fn neg(self) -> ExactMatrix {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

fn fmt_gq(z: &Gq) -> String {
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => z.re.to_string(),
        (true, false) => format!("{}i", z.im),
        _ => {
            let sign = if z.im.is_negative() { "-" } else { "+" };
            format!("{}{sign}{}i", z.re, z.im.abs())
        }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| fmt_gq(self.get(i, j))).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// The alternating form [[0, I_k], [-I_k, 0]].
pub fn j_form(k: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(2 * k, 2 * k);
    for i in 0..k {
        m.set(i, k + i, gq_one());
        m.set(k + i, i, gq(-1, 0));
    }
    m
}
