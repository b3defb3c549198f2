use serde_json::{json, Value};

use super::matrix::{j_form, ExactMatrix};
use crate::combinatorics::{DualPair, PairKind};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    /// s, for the larger group G.
    S,
    /// s' = s'_+ + s'_-, for the smaller group G'.
    SPrime,
}

/// A point of s or s' in matrix form.
///
/// s: `[Z]` (OSp, SpOstar) or `[Z1, Z2]` (UU). s': `[X, Y]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricSpaceElement {
    pub pair: DualPair,
    pub space: Space,
    pub blocks: Vec<ExactMatrix>,
}

impl SymmetricSpaceElement {
    /// Checks block shapes and the symmetry constraints of s or s'.
    pub fn new(pair: DualPair, space: Space, blocks: Vec<ExactMatrix>) -> Result<Self> {
        let DualPair { p, q, m, n, .. } = pair;
        let shapes: Vec<(usize, usize)> = match (pair.kind, space) {
            (PairKind::OSp, Space::S) => vec![(p, q)],
            (PairKind::UU, Space::S) => vec![(p, q), (q, p)],
            (PairKind::SpOstar, Space::S) => vec![(2 * p, 2 * q)],
            (PairKind::OSp | PairKind::SpOstar, Space::SPrime) => vec![(n, n), (n, n)],
            (PairKind::UU, Space::SPrime) => vec![(m, n), (n, m)],
        };
        let got: Vec<(usize, usize)> = blocks.iter().map(ExactMatrix::shape).collect();
        if got != shapes {
            return Err(Error::ShapeMismatch(format!("blocks {got:?}, expected {shapes:?} for {pair}")));
        }
        if space == Space::SPrime {
            let ok = match pair.kind {
                PairKind::OSp => blocks.iter().all(ExactMatrix::is_symmetric),
                PairKind::SpOstar => blocks.iter().all(ExactMatrix::is_alternating),
                PairKind::UU => true,
            };
            if !ok {
                return Err(Error::InvalidInput(format!("blocks violate the symmetry of s' for {pair}")));
            }
        }
        Ok(SymmetricSpaceElement { pair, space, blocks })
    }

    pub fn zero(pair: DualPair, space: Space) -> Self {
        let DualPair { p, q, m, n, .. } = pair;
        let blocks = match (pair.kind, space) {
            (PairKind::OSp, Space::S) => vec![ExactMatrix::zeros(p, q)],
            (PairKind::UU, Space::S) => vec![ExactMatrix::zeros(p, q), ExactMatrix::zeros(q, p)],
            (PairKind::SpOstar, Space::S) => vec![ExactMatrix::zeros(2 * p, 2 * q)],
            (PairKind::OSp | PairKind::SpOstar, Space::SPrime) => vec![ExactMatrix::zeros(n, n); 2],
            (PairKind::UU, Space::SPrime) => vec![ExactMatrix::zeros(m, n), ExactMatrix::zeros(n, m)],
        };
        SymmetricSpaceElement { pair, space, blocks }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(ExactMatrix::is_zero)
    }

    /// The off-diagonal blocks (P, Q) of the ambient operator [[0, P], [Q, 0]] on V^+ + V^-.
    pub fn ambient_blocks(&self) -> (ExactMatrix, ExactMatrix) {
        let b = &self.blocks;
        match (self.pair.kind, self.space) {
            (PairKind::OSp, Space::S) => (b[0].clone(), b[0].transpose()),
            (PairKind::UU, Space::S) => (b[0].clone(), b[1].clone()),
            (PairKind::SpOstar, Space::S) => {
                let jp = j_form(self.pair.p);
                let jq = j_form(self.pair.q);
                (b[0].clone(), &(&jq * &b[0].transpose()) * &jp)
            }
            (PairKind::OSp | PairKind::SpOstar, Space::SPrime) => (b[1].clone(), b[0].clone()),
            (PairKind::UU, Space::SPrime) => (b[1].transpose(), b[0].transpose()),
        }
    }

    /// The ambient operator as one square matrix.
    pub fn ambient(&self) -> ExactMatrix {
        let (pm, qm) = self.ambient_blocks();
        let (a, b) = (pm.rows(), qm.rows());
        ExactMatrix::block(&[vec![&ExactMatrix::zeros(a, a), &pm], vec![&qm, &ExactMatrix::zeros(b, b)]])
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pair": self.pair.label(),
            "space": match self.space { Space::S => "s", Space::SPrime => "s_prime" },
            "blocks": self.blocks.iter().map(ExactMatrix::to_json).collect::<Vec<_>>(),
        })
    }
}

fn split_w(pair: &DualPair, w: &ExactMatrix) -> Result<Vec<ExactMatrix>> {
    let DualPair { p, q, m, n, .. } = *pair;
    let expect = match pair.kind {
        PairKind::OSp => (p + q, n),
        PairKind::UU => (p + q, m + n),
        PairKind::SpOstar => (2 * p + 2 * q, n),
    };
    if w.shape() != expect {
        return Err(Error::ShapeMismatch(format!("w has shape {:?}, expected {expect:?} for {pair}", w.shape())));
    }
    Ok(match pair.kind {
        PairKind::OSp => vec![w.submatrix(0, p, 0, n), w.submatrix(p, p + q, 0, n)],
        PairKind::SpOstar => vec![w.submatrix(0, 2 * p, 0, n), w.submatrix(2 * p, 2 * p + 2 * q, 0, n)],
        PairKind::UU => vec![
            w.submatrix(0, p, 0, m),
            w.submatrix(0, p, m, m + n),
            w.submatrix(p, p + q, 0, m),
            w.submatrix(p, p + q, m, m + n),
        ],
    })
}

/// The blocks of w: [A, B] (OSp, SpOstar) or [A, B, C, D] (UU).
pub fn w_blocks(pair: &DualPair, w: &ExactMatrix) -> Result<Vec<ExactMatrix>> {
    split_w(pair, w)
}

/// Assembles w from [A, B] or [A, B, C, D].
pub fn assemble_w(pair: &DualPair, blocks: &[ExactMatrix]) -> ExactMatrix {
    match pair.kind {
        PairKind::UU => ExactMatrix::block(&[vec![&blocks[0], &blocks[1]], vec![&blocks[2], &blocks[3]]]),
        _ => ExactMatrix::vstack(&blocks[0], &blocks[1]),
    }
}

/// psi: W -> s'.
pub fn moment_psi(pair: &DualPair, w: &ExactMatrix) -> Result<SymmetricSpaceElement> {
    let b = split_w(pair, w)?;
    let blocks = match pair.kind {
        PairKind::OSp => vec![&b[0].transpose() * &b[0], &b[1].transpose() * &b[1]],
        PairKind::UU => vec![&b[0].transpose() * &b[1], &b[3].transpose() * &b[2]],
        PairKind::SpOstar => vec![
            &(&b[0].transpose() * &j_form(pair.p)) * &b[0],
            &(&b[1].transpose() * &j_form(pair.q)) * &b[1],
        ],
    };
    SymmetricSpaceElement::new(*pair, Space::SPrime, blocks)
}

/// phi: W -> s.
pub fn moment_phi(pair: &DualPair, w: &ExactMatrix) -> Result<SymmetricSpaceElement> {
    let b = split_w(pair, w)?;
    let blocks = match pair.kind {
        PairKind::OSp | PairKind::SpOstar => vec![&b[0] * &b[1].transpose()],
        PairKind::UU => vec![&b[0] * &b[2].transpose(), &b[3] * &b[1].transpose()],
    };
    SymmetricSpaceElement::new(*pair, Space::S, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::matrix::gq;

    #[test]
    fn isotropic_column() {
        let pair = DualPair::osp(3, 3, 1).unwrap();
        let a = ExactMatrix::from_gaussian(3, 1, &[(1, 0), (0, 1), (0, 0)]);
        let w = ExactMatrix::vstack(&a, &a);
        assert!(moment_psi(&pair, &w).unwrap().is_zero());
        let z = moment_phi(&pair, &w).unwrap();
        assert_eq!(z.blocks[0].rank(), 1);
        assert_eq!(z.blocks[0], &a * &a.transpose());
        assert!(moment_phi(&pair, &ExactMatrix::zeros(6, 1)).unwrap().is_zero());
        assert!(matches!(moment_psi(&pair, &ExactMatrix::zeros(5, 1)), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn uu_phi_example() {
        let pair = DualPair::uu(2, 2, 1, 1).unwrap();
        let e1 = ExactMatrix::from_ints(2, 1, &[1, 0]);
        let e2 = ExactMatrix::from_ints(2, 1, &[0, 1]);
        let w = assemble_w(&pair, &[e1.clone(), e2.clone(), e1.clone(), e2.clone()]);
        let z = moment_phi(&pair, &w).unwrap();
        assert_eq!(z.blocks[0], &e1 * &e1.transpose());
        assert_eq!(z.blocks[1], &e2 * &e2.transpose());
    }

    #[test]
    fn sp_ostar_psi_alternating() {
        let pair = DualPair::sp_ostar(1, 1, 1).unwrap();
        let a = ExactMatrix::from_ints(2, 1, &[1, 0]);
        let w = ExactMatrix::vstack(&a, &a);
        assert!(moment_psi(&pair, &w).unwrap().is_zero());
        let pair = DualPair::sp_ostar(2, 2, 2).unwrap();
        let w = ExactMatrix::from_fn(8, 2, |i, j| gq((i * 3 + j * 5 % 7) as i64 - 4, (i % 2) as i64));
        let x = moment_psi(&pair, &w).unwrap();
        assert!(x.blocks.iter().all(ExactMatrix::is_alternating));
    }
}
