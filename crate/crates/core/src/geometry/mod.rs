//! Exact moment-map geometry over the Gaussian rationals.
//!
//! W carries psi: W -> s' and phi: W -> s. Lifting an orbit in s' means taking a generic point
//! of psi^{-1} of it and reading off the signed Jordan type of its phi-image.

mod element;
mod jordan;
mod matrix;
mod representative;
mod section;

use serde_json::{json, Value};

pub use element::{assemble_w, moment_phi, moment_psi, w_blocks, Space, SymmetricSpaceElement};
pub use jordan::{raw_signed_rows, signed_jordan_type};
pub use matrix::{gq, gq_from_json, gq_i, gq_one, gq_rat, gq_to_json, gq_zero, j_form, ExactMatrix, Gq};
pub use representative::build_representative;
pub use section::{is_generic, section, DEFAULT_RETRY_CAP};

use crate::combinatorics::{theta_lift_diagram, DualPair, PairKind, SignedDiagram};
use crate::error::{Error, Result};

/// Ranks and orbit dimension for one side of the null cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideOrbit {
    /// rank A (OSp, SpOstar) or (rank A, rank B) on W^+, (rank C, rank D) on W^- (UU).
    pub ranks: Vec<usize>,
    pub dim: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullconeOrbit {
    pub plus: SideOrbit,
    pub minus: SideOrbit,
}

impl NullconeOrbit {
    pub fn to_json(&self) -> Value {
        json!({
            "plus": {"ranks": self.plus.ranks, "dim": self.plus.dim},
            "minus": {"ranks": self.minus.ranks, "dim": self.minus.dim},
        })
    }
}

/// Dimension of the rank-r stratum of the null cone in W^+ (use q for W^-).
pub fn nullcone_stratum_dim(pair: &DualPair, size: usize, ranks: &[usize]) -> i64 {
    let p = size as i64;
    let (m, n) = (pair.m as i64, pair.n as i64);
    match pair.kind {
        PairKind::OSp => {
            let r = ranks[0] as i64;
            r * (p + n) - r * r - r * (r + 1) / 2
        }
        PairKind::UU => {
            let (r, s) = (ranks[0] as i64, ranks[1] as i64);
            r * (m + p) + s * (n + p) + r * s - (r + s) * (r + s)
        }
        PairKind::SpOstar => {
            let r = ranks[0] as i64;
            r * (2 * p + n) - r * r - r * (r - 1) / 2
        }
    }
}

/// The K_C x K'_C-orbit of a null-cone point, given by ranks.
pub fn nullcone_orbit_of(pair: &DualPair, w: &ExactMatrix) -> Result<NullconeOrbit> {
    if !moment_psi(pair, w)?.is_zero() {
        return Err(Error::NotInNullCone(format!("psi(w) != 0 for {pair}")));
    }
    let b = w_blocks(pair, w)?;
    let (plus_ranks, minus_ranks) = match pair.kind {
        PairKind::UU => (vec![b[0].rank(), b[1].rank()], vec![b[3].rank(), b[2].rank()]),
        _ => (vec![b[0].rank()], vec![b[1].rank()]),
    };
    Ok(NullconeOrbit {
        plus: SideOrbit { dim: nullcone_stratum_dim(pair, pair.p, &plus_ranks), ranks: plus_ranks },
        minus: SideOrbit { dim: nullcone_stratum_dim(pair, pair.q, &minus_ranks), ranks: minus_ranks },
    })
}

/// The lift of `d` computed through the moment maps.
pub fn lift_by_moment_maps(pair: &DualPair, d: &SignedDiagram, seed: u64, retry_cap: usize) -> Result<SignedDiagram> {
    let x = build_representative(pair, d)?;
    let w = section(&x, seed, retry_cap)?;
    signed_jordan_type(&moment_phi(pair, &w)?)
}

/// Whether the moment-map lift of `d` agrees with the combinatorial lift.
pub fn verify_lift(pair: &DualPair, d: &SignedDiagram, seed: u64) -> Result<bool> {
    let expected = theta_lift_diagram(pair, d)?;
    Ok(lift_by_moment_maps(pair, d, seed, DEFAULT_RETRY_CAP)? == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_orbits, regular_holomorphic_orbit, zero_orbit, DEFAULT_ENUMERATION_CAP};

    #[test]
    fn nullcone_examples() {
        let pair = DualPair::osp(3, 3, 1).unwrap();
        let a = ExactMatrix::from_gaussian(3, 1, &[(1, 0), (0, 1), (0, 0)]);
        let w = ExactMatrix::vstack(&a, &ExactMatrix::zeros(3, 1));
        let o = nullcone_orbit_of(&pair, &w).unwrap();
        assert_eq!(o.plus, SideOrbit { ranks: vec![1], dim: 2 });
        assert_eq!(o.minus, SideOrbit { ranks: vec![0], dim: 0 });
        let o = nullcone_orbit_of(&pair, &ExactMatrix::zeros(6, 1)).unwrap();
        assert_eq!(o.plus.dim, 0);
        let e = ExactMatrix::from_ints(6, 1, &[1, 0, 0, 0, 0, 0]);
        assert!(matches!(nullcone_orbit_of(&pair, &e), Err(Error::NotInNullCone(_))));
    }

    #[test]
    fn lifts_of_small_pairs() {
        for pair in [
            DualPair::osp(3, 3, 1).unwrap(),
            DualPair::osp(5, 5, 2).unwrap(),
            DualPair::uu(2, 2, 1, 1).unwrap(),
            DualPair::uu(3, 3, 2, 1).unwrap(),
            DualPair::sp_ostar(2, 2, 1).unwrap(),
            DualPair::sp_ostar(3, 3, 2).unwrap(),
        ] {
            for d in enumerate_orbits(pair.small_group(), DEFAULT_ENUMERATION_CAP).unwrap() {
                let got = lift_by_moment_maps(&pair, &d, 11, DEFAULT_RETRY_CAP).unwrap();
                assert_eq!(got, theta_lift_diagram(&pair, &d).unwrap(), "{pair} {d}");
            }
            assert!(verify_lift(&pair, &zero_orbit(&pair), 3).unwrap());
            assert!(verify_lift(&pair, &regular_holomorphic_orbit(&pair).unwrap(), 3).unwrap());
        }
    }
}
