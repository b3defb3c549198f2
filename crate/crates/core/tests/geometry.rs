use proptest::prelude::*;
use theta_lift::combinatorics::{DualPair, PairKind};
use theta_lift::geometry::*;

fn mat(rows: usize, cols: usize, seed: &[i64]) -> ExactMatrix {
    ExactMatrix::from_fn(rows, cols, |i, j| {
        let k = i * cols + j;
        gq(seed[k % seed.len()] + (k as i64 % 3) - 1, 0)
    })
}

fn orthogonal(p: usize, seed: &[i64]) -> ExactMatrix {
    let m = mat(p, p, seed);
    let s = &m - &m.transpose();
    let id = ExactMatrix::identity(p);
    &(&id - &s) * &(&id + &s).inverse().unwrap()
}

fn symplectic(p: usize, seed: &[i64]) -> ExactMatrix {
    let id = ExactMatrix::identity(p);
    let zero = ExactMatrix::zeros(p, p);
    let m = mat(p, p, seed);
    let s = &m + &m.transpose();
    let upper = ExactMatrix::block(&[vec![&id, &s], vec![&zero, &id]]);
    let lower = ExactMatrix::block(&[vec![&id, &zero], vec![&s.scale(&gq(2, 0)), &id]]);
    &upper * &lower
}

fn invertible(n: usize, seed: &[i64]) -> ExactMatrix {
    let base = mat(n, n, seed);
    (0..)
        .map(|k| &base + &ExactMatrix::identity(n).scale(&gq(k, 0)))
        .find(|g| g.inverse().is_some())
        .unwrap()
}

fn pairs() -> Vec<DualPair> {
    vec![
        DualPair::osp(3, 3, 1).unwrap(),
        DualPair::osp(5, 6, 2).unwrap(),
        DualPair::uu(2, 3, 1, 1).unwrap(),
        DualPair::uu(3, 3, 2, 1).unwrap(),
        DualPair::sp_ostar(2, 2, 1).unwrap(),
        DualPair::sp_ostar(2, 3, 2).unwrap(),
    ]
}

fn w_shape(pair: &DualPair) -> (usize, usize) {
    match pair.kind {
        PairKind::OSp => (pair.p + pair.q, pair.n),
        PairKind::UU => (pair.p + pair.q, pair.m + pair.n),
        PairKind::SpOstar => (2 * pair.p + 2 * pair.q, pair.n),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn moment_maps_are_equivariant(idx in 0usize..6, seed in prop::collection::vec(-3i64..=3, 4..9)) {
        let pair = pairs()[idx];
        let (rows, cols) = w_shape(&pair);
        let w = mat(rows, cols, &seed);
        let blocks = w_blocks(&pair, &w).unwrap();
        let psi = moment_psi(&pair, &w).unwrap();
        let phi = moment_phi(&pair, &w).unwrap();
        let (p, q) = (pair.p, pair.q);
        match pair.kind {
            PairKind::OSp | PairKind::SpOstar => {
                let (k1, k2) = if pair.kind == PairKind::OSp {
                    (orthogonal(p, &seed), orthogonal(q, &seed[1..]))
                } else {
                    (symplectic(p, &seed), symplectic(q, &seed[1..]))
                };
                let kw = assemble_w(&pair, &[&k1 * &blocks[0], &k2 * &blocks[1]]);
                prop_assert_eq!(moment_psi(&pair, &kw).unwrap(), psi.clone());
                let kphi = moment_phi(&pair, &kw).unwrap();
                prop_assert_eq!(&kphi.blocks[0], &(&(&k1 * &phi.blocks[0]) * &k2.transpose()));
                // K'_C = GL_n acts by A -> A g^{-1}, B -> B g^T
                let g = invertible(pair.n, &seed);
                let gi = g.inverse().unwrap();
                let gw = assemble_w(&pair, &[&blocks[0] * &gi, &blocks[1] * &g.transpose()]);
                prop_assert_eq!(moment_phi(&pair, &gw).unwrap(), phi.clone());
                let gpsi = moment_psi(&pair, &gw).unwrap();
                prop_assert_eq!(&gpsi.blocks[0], &(&(&gi.transpose() * &psi.blocks[0]) * &gi));
                prop_assert_eq!(&gpsi.blocks[1], &(&(&g * &psi.blocks[1]) * &g.transpose()));
            }
            PairKind::UU => {
                let g = invertible(p, &seed);
                let h = invertible(q, &seed[1..]);
                let gt = g.inverse().unwrap().transpose();
                let ht = h.inverse().unwrap().transpose();
                let kw = assemble_w(&pair, &[&g * &blocks[0], &gt * &blocks[1], &h * &blocks[2], &ht * &blocks[3]]);
                prop_assert_eq!(moment_psi(&pair, &kw).unwrap(), psi.clone());
                let kphi = moment_phi(&pair, &kw).unwrap();
                prop_assert_eq!(&kphi.blocks[0], &(&(&g * &phi.blocks[0]) * &h.transpose()));
                prop_assert_eq!(&kphi.blocks[1], &(&(&ht * &phi.blocks[1]) * &g.inverse().unwrap()));
            }
        }
        if pair.kind == PairKind::OSp {
            // the ambient operator is skew for diag(I_p, -I_q)
            let amb = phi.ambient();
            let f = ExactMatrix::block(&[
                vec![&ExactMatrix::identity(p), &ExactMatrix::zeros(p, q)],
                vec![&ExactMatrix::zeros(q, p), &ExactMatrix::identity(q).scale(&gq(-1, 0))],
            ]);
            prop_assert!((&(&amb.transpose() * &f) + &(&f * &amb)).is_zero());
        }
    }

    #[test]
    fn psi_lands_in_s_prime(idx in 0usize..6, seed in prop::collection::vec(-4i64..=4, 3..7)) {
        let pair = pairs()[idx];
        let (rows, cols) = w_shape(&pair);
        let x = moment_psi(&pair, &mat(rows, cols, &seed)).unwrap();
        match pair.kind {
            PairKind::OSp => prop_assert!(x.blocks.iter().all(ExactMatrix::is_symmetric)),
            PairKind::SpOstar => prop_assert!(x.blocks.iter().all(ExactMatrix::is_alternating)),
            PairKind::UU => prop_assert_eq!(x.blocks[0].shape(), (pair.m, pair.n)),
        }
    }
}

fn unit(rows: usize, i: usize, j: usize) -> ExactMatrix {
    let mut e = ExactMatrix::zeros(rows, rows);
    e.set(i, j, gq(1, 0));
    e
}

fn flatten(ms: &[ExactMatrix]) -> Vec<Gq> {
    ms.iter().flat_map(|m| (0..m.rows()).flat_map(move |i| (0..m.cols()).map(move |j| m.get(i, j).clone()))).collect()
}

fn span_rank(vectors: &[Vec<Gq>]) -> usize {
    let len = vectors[0].len();
    ExactMatrix::from_fn(vectors.len(), len, |i, j| vectors[i][j].clone()).rank()
}

/// Lie algebra of K_C on one side: so(p), gl(p) or sp(2p).
fn k_algebra(kind: PairKind, p: usize) -> Vec<ExactMatrix> {
    match kind {
        PairKind::OSp => {
            let mut out = Vec::new();
            for i in 0..p {
                for j in i + 1..p {
                    out.push(&unit(p, i, j) - &unit(p, j, i));
                }
            }
            out
        }
        PairKind::UU => (0..p).flat_map(|i| (0..p).map(move |j| unit(p, i, j))).collect(),
        PairKind::SpOstar => {
            let j = j_form(p);
            let mut out = Vec::new();
            for a in 0..2 * p {
                for b in a..2 * p {
                    let s = &unit(2 * p, a, b) + &unit(2 * p, b, a);
                    out.push(&j * &s);
                }
            }
            out
        }
    }
}

/// Dimension of the K_C x GL-orbit of a null-cone point on the plus side, via the tangent map.
fn tangent_dim(pair: &DualPair, a: &ExactMatrix, b: Option<&ExactMatrix>) -> usize {
    let mut vecs = Vec::new();
    for x in k_algebra(pair.kind, pair.p) {
        match b {
            None => vecs.push(flatten(&[&x * a])),
            Some(b) => vecs.push(flatten(&[&x * a, -&(&x.transpose() * b)])),
        }
    }
    let cols_a = a.cols();
    for i in 0..cols_a {
        for j in 0..cols_a {
            let y = unit(cols_a, i, j);
            match b {
                None => vecs.push(flatten(&[a * &y])),
                Some(b) => vecs.push(flatten(&[a * &y, ExactMatrix::zeros(b.rows(), b.cols())])),
            }
        }
    }
    if let Some(b) = b {
        for i in 0..b.cols() {
            for j in 0..b.cols() {
                let y = unit(b.cols(), i, j);
                vecs.push(flatten(&[ExactMatrix::zeros(a.rows(), a.cols()), b * &y]));
            }
        }
    }
    span_rank(&vecs)
}

#[test]
fn nullcone_dims_match_tangent_ranks() {
    for (p, n) in [(3, 1), (5, 2), (6, 2), (7, 3)] {
        let pair = DualPair::osp(p, p, n).unwrap();
        for r in 0..=n {
            let mut a = ExactMatrix::zeros(p, n);
            for k in 0..r {
                a.set(2 * k, k, gq(1, 0));
                a.set(2 * k + 1, k, gq(0, 1));
            }
            assert!((&a.transpose() * &a).is_zero());
            assert_eq!(tangent_dim(&pair, &a, None) as i64, nullcone_stratum_dim(&pair, p, &[r]), "{pair} r={r}");
        }
    }
    for (p, m, n) in [(2, 1, 1), (3, 2, 1), (4, 2, 2)] {
        let pair = DualPair::uu(p, p, m, n).unwrap();
        for r in 0..=m {
            for s in 0..=n {
                let mut a = ExactMatrix::zeros(p, m);
                let mut b = ExactMatrix::zeros(p, n);
                for k in 0..r {
                    a.set(k, k, gq(1, 0));
                }
                for k in 0..s {
                    b.set(r + k, k, gq(1, 0));
                }
                assert_eq!(tangent_dim(&pair, &a, Some(&b)) as i64, nullcone_stratum_dim(&pair, p, &[r, s]), "{pair} r={r} s={s}");
            }
        }
    }
    for (p, n) in [(1, 1), (2, 2), (3, 2), (3, 3)] {
        let pair = DualPair::sp_ostar(p, p, n).unwrap();
        for r in 0..=n {
            let mut a = ExactMatrix::zeros(2 * p, n);
            for k in 0..r {
                a.set(k, k, gq(1, 0));
            }
            assert!((&(&a.transpose() * &j_form(p)) * &a).is_zero());
            assert_eq!(tangent_dim(&pair, &a, None) as i64, nullcone_stratum_dim(&pair, p, &[r]), "{pair} r={r}");
        }
    }
}

#[test]
fn nullcone_orbit_reports_ranks() {
    let pair = DualPair::uu(3, 3, 2, 1).unwrap();
    let e = |i: usize, rows: usize| {
        let mut v = ExactMatrix::zeros(rows, 1);
        v.set(i, 0, gq(1, 0));
        v
    };
    let a = ExactMatrix::hstack(&e(0, 3), &ExactMatrix::zeros(3, 1));
    let b = e(1, 3);
    let c = ExactMatrix::zeros(3, 2);
    let d = ExactMatrix::zeros(3, 1);
    let w = assemble_w(&pair, &[a, b, c, d]);
    let o = nullcone_orbit_of(&pair, &w).unwrap();
    assert_eq!(o.plus.ranks, vec![1, 1]);
    assert_eq!(o.minus.ranks, vec![0, 0]);
    assert_eq!(o.plus.dim, nullcone_stratum_dim(&pair, 3, &[1, 1]));
    let j = o.to_json();
    assert_eq!(j["plus"]["ranks"], serde_json::json!([1, 1]));
}

#[test]
fn elements_round_trip_through_json() {
    let pair = DualPair::osp(5, 5, 2).unwrap();
    let x = ExactMatrix::from_gaussian(2, 2, &[(1, 0), (0, 1), (0, 1), (-2, 3)]);
    let el = SymmetricSpaceElement::new(pair, Space::SPrime, vec![x.clone(), x.clone()]).unwrap();
    let j = el.to_json();
    assert_eq!(j["space"], "s_prime");
    let back = ExactMatrix::from_json(&j["blocks"][0]).unwrap();
    assert_eq!(back, x);
    let bad = ExactMatrix::from_ints(2, 2, &[0, 1, 2, 0]);
    assert!(SymmetricSpaceElement::new(pair, Space::SPrime, vec![bad.clone(), bad]).is_err());
}
