use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use num::{BigRational, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::element::{assemble_w, moment_psi, w_blocks, Space, SymmetricSpaceElement};
use super::matrix::{gq, gq_i, gq_one, gq_rat, ExactMatrix, Gq};
use crate::combinatorics::{DualPair, PairKind};
use crate::error::{Error, Result};

pub const DEFAULT_RETRY_CAP: usize = 32;

fn small_rational(rng: &mut ChaCha8Rng) -> Gq {
    let num: i64 = rng.gen_range(-3..=3);
    let den: i64 = rng.gen_range(1..=3);
    gq_rat(BigRational::new(num.into(), den.into()))
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ExactMatrix {
    ExactMatrix::from_fn(rows, cols, |_, _| small_rational(rng))
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> (ExactMatrix, ExactMatrix) {
    loop {
        let g = random_matrix(rng, n, n);
        if let Some(inv) = g.inverse() {
            return (g, inv);
        }
    }
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> ExactMatrix {
    let m = random_matrix(rng, n, n);
    &m + &m.transpose()
}

/// Cayley transform of a random rational skew matrix: an element of SO(p) over Q.
fn random_orthogonal(rng: &mut ChaCha8Rng, p: usize) -> ExactMatrix {
    let m = random_matrix(rng, p, p);
    let s = &m - &m.transpose();
    let id = ExactMatrix::identity(p);
    let inv = (&id + &s).inverse().expect("I + S is invertible for real skew S");
    &(&id - &s) * &inv
}

/// A product of symplectic generators on C^{2p} for the form j_form(p).
fn random_symplectic(rng: &mut ChaCha8Rng, p: usize) -> ExactMatrix {
    let id = ExactMatrix::identity(p);
    let zero = ExactMatrix::zeros(p, p);
    let s1 = random_symmetric(rng, p);
    let s2 = random_symmetric(rng, p);
    let (g, g_inv) = random_invertible(rng, p);
    let upper = ExactMatrix::block(&[vec![&id, &s1], vec![&zero, &id]]);
    let lower = ExactMatrix::block(&[vec![&id, &zero], vec![&s2, &id]]);
    let levi = ExactMatrix::block(&[vec![&g, &zero], vec![&zero, &g_inv.transpose()]]);
    &(&upper * &lower) * &levi
}

/// Columns t_1..t_n with t^T X T diagonal, for X symmetric. Returns (T, diagonal).
fn congruence_diagonalize(x: &ExactMatrix) -> (ExactMatrix, Vec<Gq>) {
    let n = x.rows();
    let form = |u: &ExactMatrix, v: &ExactMatrix| (&(&u.transpose() * x) * v).get(0, 0).clone();
    let mut rest: Vec<ExactMatrix> = (0..n).map(|i| ExactMatrix::identity(n).column(i)).collect();
    let mut basis = Vec::new();
    let mut diag = Vec::new();
    while !rest.is_empty() {
        let pick = rest.iter().position(|u| !form(u, u).is_zero()).or_else(|| {
            // no anisotropic vector left: u + v is anisotropic whenever F(u, v) != 0
            let mut found = None;
            'outer: for i in 0..rest.len() {
                for j in i + 1..rest.len() {
                    if !form(&rest[i], &rest[j]).is_zero() {
                        found = Some((i, j));
                        break 'outer;
                    }
                }
            }
            found.map(|(i, j)| {
                rest[i] = &rest[i] + &rest[j];
                i
            })
        });
        let Some(k) = pick else {
            // what remains is the radical
            diag.extend(rest.iter().map(|_| gq(0, 0)));
            basis.append(&mut rest);
            break;
        };
        let u = rest.remove(k);
        let fu = form(&u, &u);
        for w in rest.iter_mut() {
            let c = form(w, &u) / fu.clone();
            *w = &*w - &u.scale(&c);
        }
        basis.push(u);
        diag.push(fu);
    }
    let t = ExactMatrix::from_fn(n, n, |i, j| basis[j].get(i, 0).clone());
    (t, diag)
}

/// Columns with t^T X T = diag([[0,1],[-1,0]] x r, 0), for X alternating. Returns (T, r).
fn alternating_normal_form(x: &ExactMatrix) -> (ExactMatrix, usize) {
    let n = x.rows();
    let form = |u: &ExactMatrix, v: &ExactMatrix| (&(&u.transpose() * x) * v).get(0, 0).clone();
    let mut rest: Vec<ExactMatrix> = (0..n).map(|i| ExactMatrix::identity(n).column(i)).collect();
    let mut basis = Vec::new();
    let mut r = 0;
    loop {
        let mut found = None;
        'outer: for i in 0..rest.len() {
            for j in i + 1..rest.len() {
                if !form(&rest[i], &rest[j]).is_zero() {
                    found = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = found else { break };
        let v = rest.remove(j);
        let u = rest.remove(i);
        let v = v.scale(&(gq_one() / form(&u, &v)));
        for w in rest.iter_mut() {
            let a = form(w, &v);
            let b = form(w, &u);
            *w = &(&*w - &u.scale(&a)) + &v.scale(&b);
        }
        basis.push(u);
        basis.push(v);
        r += 1;
    }
    basis.append(&mut rest);
    let t = ExactMatrix::from_fn(n, n, |i, j| basis[j].get(i, 0).clone());
    (t, r)
}

/// A p x n matrix A with A^T A = X (2n <= p).
fn orthogonal_factor(x: &ExactMatrix, p: usize) -> ExactMatrix {
    let n = x.rows();
    let (t, diag) = congruence_diagonalize(x);
    let half = gq_rat(BigRational::new(1.into(), 2.into()));
    let mut ad = ExactMatrix::zeros(p, n);
    for (k, d) in diag.iter().enumerate() {
        let (a1, a2) = if d.is_zero() {
            (gq_one(), gq_i())
        } else {
            ((d + gq_one()) * half.clone(), (d - gq_one()) * half.clone() / gq_i())
        };
        ad.set(2 * k, k, a1);
        ad.set(2 * k + 1, k, a2);
    }
    &ad * &t.inverse().expect("congruence basis is invertible")
}

/// A 2p x n matrix A with A^T J_p A = X (n <= p).
fn symplectic_factor(x: &ExactMatrix, p: usize) -> ExactMatrix {
    let n = x.rows();
    let (t, r) = alternating_normal_form(x);
    let mut a0 = ExactMatrix::zeros(2 * p, n);
    for j in 0..r {
        a0.set(j, 2 * j, gq_one());
        a0.set(p + j, 2 * j + 1, gq_one());
    }
    for (t_idx, col) in (2 * r..n).enumerate() {
        a0.set(r + t_idx, col, gq_one());
    }
    &a0 * &t.inverse().expect("normal-form basis is invertible")
}

fn seed_for(x: &SymmetricSpaceElement, seed: u64) -> u64 {
    let mut h = DefaultHasher::new();
    seed.hash(&mut h);
    x.pair.hash(&mut h);
    x.to_json().to_string().hash(&mut h);
    h.finish()
}

/// Whether w is a point of the open locus over which the psi-fibre is a single K_C-orbit.
pub fn is_generic(pair: &DualPair, w: &ExactMatrix) -> Result<bool> {
    let b = w_blocks(pair, w)?;
    Ok(match pair.kind {
        PairKind::OSp | PairKind::SpOstar => b[0].rank() == pair.n && b[1].rank() == pair.n,
        PairKind::UU => {
            let k = pair.m + pair.n;
            ExactMatrix::hstack(&b[0], &b[1]).rank() == k && ExactMatrix::hstack(&b[2], &b[3]).rank() == k
        }
    })
}

/// A generic w with psi(w) = x', randomized by a seeded element of K_C.
pub fn section(x: &SymmetricSpaceElement, seed: u64, retry_cap: usize) -> Result<ExactMatrix> {
    if x.space != Space::SPrime {
        return Err(Error::InvalidInput("section expects an element of s'".into()));
    }
    let pair = x.pair;
    let DualPair { p, q, m, n, .. } = pair;
    let base = match pair.kind {
        PairKind::OSp => vec![orthogonal_factor(&x.blocks[0], p), orthogonal_factor(&x.blocks[1], q)],
        PairKind::SpOstar => vec![symplectic_factor(&x.blocks[0], p), symplectic_factor(&x.blocks[1], q)],
        PairKind::UU => {
            let pad = |top: &ExactMatrix, mid: usize, total: usize| {
                let ident = ExactMatrix::identity(mid);
                let rest = ExactMatrix::zeros(total - top.rows() - mid, mid);
                let with_id = ExactMatrix::vstack(top, &ident);
                if rest.rows() == 0 {
                    with_id
                } else {
                    ExactMatrix::vstack(&with_id, &rest)
                }
            };
            let a = ExactMatrix::vstack(&ExactMatrix::identity(m), &ExactMatrix::zeros(p - m, m));
            let b = pad(&x.blocks[0], n, p);
            let c = pad(&x.blocks[1], m, q);
            let d = ExactMatrix::vstack(&ExactMatrix::identity(n), &ExactMatrix::zeros(q - n, n));
            vec![a, b, c, d]
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(x, seed));
    for _ in 0..retry_cap.max(1) {
        let blocks = match pair.kind {
            PairKind::OSp => vec![&random_orthogonal(&mut rng, p) * &base[0], &random_orthogonal(&mut rng, q) * &base[1]],
            PairKind::SpOstar => {
                vec![&random_symplectic(&mut rng, p) * &base[0], &random_symplectic(&mut rng, q) * &base[1]]
            }
            PairKind::UU => {
                let (g, g_inv) = random_invertible(&mut rng, p);
                let (h, h_inv) = random_invertible(&mut rng, q);
                vec![&g * &base[0], &g_inv.transpose() * &base[1], &h * &base[2], &h_inv.transpose() * &base[3]]
            }
        };
        let w = assemble_w(&pair, &blocks);
        if moment_psi(&pair, &w)? == *x && is_generic(&pair, &w)? {
            return Ok(w);
        }
    }
    Err(Error::DegenerateSample(retry_cap))
}
