use std::collections::BTreeMap;

use super::element::{Space, SymmetricSpaceElement};
use super::matrix::ExactMatrix;
use crate::combinatorics::{GroupTag, Sign, SignedDiagram, SignedRow};
use crate::error::{Error, Result};

/// Row counts (length, tail sign) -> multiplicity of a nilpotent [[0, P], [Q, 0]] on V^+ + V^-.
///
/// f_s(k) is the rank of the alternating word of length k starting on V^s. Its drop
/// f_s(k) - f_s(k+1) counts rows of length > k whose box at distance k from the tail lies in V^s.
pub fn raw_signed_rows(pm: &ExactMatrix, qm: &ExactMatrix) -> Result<BTreeMap<(usize, Sign), usize>> {
    let (dp, dm) = (pm.rows(), qm.rows());
    if pm.cols() != dm || qm.cols() != dp {
        return Err(Error::ShapeMismatch(format!("blocks {:?} and {:?}", pm.shape(), qm.shape())));
    }
    let total = dp + dm;
    let ranks = |start: Sign| -> Vec<i64> {
        let (mut word, dim) = match start {
            Sign::Plus => (ExactMatrix::identity(dp), dp),
            Sign::Minus => (ExactMatrix::identity(dm), dm),
        };
        let mut out = vec![dim as i64];
        let mut here = start;
        for _ in 0..=total {
            word = match here {
                Sign::Plus => qm * &word,
                Sign::Minus => pm * &word,
            };
            here = here.flip();
            out.push(word.rank() as i64);
        }
        out
    };
    let f_plus = ranks(Sign::Plus);
    let f_minus = ranks(Sign::Minus);
    if f_plus[total] != 0 || f_minus[total] != 0 {
        return Err(Error::NotNilpotent);
    }
    let f = |s: Sign, k: usize| if s == Sign::Plus { f_plus[k] } else { f_minus[k] };
    let g = |s: Sign, k: usize| f(s, k) - f(s, k + 1);
    // rows of length >= len with the given tail sign
    let at_least = |len: usize, tail: Sign| -> i64 {
        if len == 0 || len > total {
            return 0;
        }
        g(tail.alternate(len - 1), len - 1)
    };
    let mut rows = BTreeMap::new();
    for len in 1..=total {
        for tail in [Sign::Plus, Sign::Minus] {
            let c = at_least(len, tail) - at_least(len + 1, tail);
            if c < 0 {
                return Err(Error::InvalidInput("rank sequence is not that of a graded nilpotent".into()));
            }
            if c > 0 {
                rows.insert((len, tail), c as usize);
            }
        }
    }
    Ok(rows)
}

fn rows_from_counts(counts: &BTreeMap<(usize, Sign), usize>) -> Vec<SignedRow> {
    counts.iter().flat_map(|(&(len, lead), &c)| std::iter::repeat_n(SignedRow::new(len, lead), c)).collect()
}

/// Folds a doubled diagram on C^{2p} + C^{2q} (resp. C^n + C^n) to an Sp(p,q) (resp. O*(2n)) diagram.
fn halve(group: GroupTag, raw: &BTreeMap<(usize, Sign), usize>) -> Result<Vec<SignedRow>> {
    let get = |len: usize, s: Sign| raw.get(&(len, s)).copied().unwrap_or(0);
    let lens: std::collections::BTreeSet<usize> = raw.keys().map(|k| k.0).collect();
    let paired_parity = match group {
        GroupTag::Sppq { .. } => 0,
        GroupTag::OstarN { .. } => 1,
        _ => unreachable!("only quaternionic forms are halved"),
    };
    let bad = |len: usize| Error::InvalidInput(format!("rows of length {len} do not come in the pattern of {group}"));
    let mut rows = Vec::new();
    for len in lens {
        let (a, b) = (get(len, Sign::Plus), get(len, Sign::Minus));
        if len % 2 == paired_parity {
            if a != b {
                return Err(bad(len));
            }
            rows.extend(std::iter::repeat_n(SignedRow::new(len, Sign::Plus), a));
        } else {
            if a % 2 != 0 || b % 2 != 0 {
                return Err(bad(len));
            }
            rows.extend(std::iter::repeat_n(SignedRow::new(len, Sign::Plus), a / 2));
            rows.extend(std::iter::repeat_n(SignedRow::new(len, Sign::Minus), b / 2));
        }
    }
    Ok(rows)
}

/// Signed Jordan type of a nilpotent element of s or s', as a diagram for G or G'.
pub fn signed_jordan_type(x: &SymmetricSpaceElement) -> Result<SignedDiagram> {
    let group = match x.space {
        Space::S => x.pair.large_group(),
        Space::SPrime => x.pair.small_group(),
    };
    let (pm, qm) = x.ambient_blocks();
    let raw = raw_signed_rows(&pm, &qm)?;
    let rows = match group {
        GroupTag::Sppq { .. } | GroupTag::OstarN { .. } => halve(group, &raw)?,
        _ => rows_from_counts(&raw),
    };
    Ok(SignedDiagram::new(group, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::DualPair;
    use crate::geometry::matrix::gq;

    #[test]
    fn zero_is_all_singletons() {
        let pair = DualPair::osp(5, 3, 1).unwrap();
        let x = SymmetricSpaceElement::zero(pair, Space::S);
        let d = signed_jordan_type(&x).unwrap();
        assert_eq!(d.to_string(), "[(+)(+)(+)(+)(+)(-)(-)(-)]");
    }

    #[test]
    fn osp_rank_one_examples() {
        let pair = DualPair::osp(3, 3, 1).unwrap();
        let iso = ExactMatrix::from_gaussian(3, 1, &[(1, 0), (0, 1), (0, 0)]);
        let z = &iso * &iso.transpose();
        let x = SymmetricSpaceElement::new(pair, Space::S, vec![z]).unwrap();
        assert_eq!(signed_jordan_type(&x).unwrap().to_string(), "[(+-)(-+)(+)(-)]");
        // Z = a b^t with a isotropic in C^p and b anisotropic in C^q
        let b = ExactMatrix::from_ints(3, 1, &[1, 0, 0]);
        let z = &iso * &b.transpose();
        let x = SymmetricSpaceElement::new(pair, Space::S, vec![z]).unwrap();
        assert_eq!(signed_jordan_type(&x).unwrap().to_string(), "[(+-+)(+)(-)(-)]");
        // the roles swapped give the mirror row
        let z = &b * &iso.transpose();
        let x = SymmetricSpaceElement::new(pair, Space::S, vec![z]).unwrap();
        assert_eq!(signed_jordan_type(&x).unwrap().to_string(), "[(-+-)(+)(+)(-)]");
    }

    #[test]
    fn not_nilpotent() {
        let pair = DualPair::osp(3, 3, 1).unwrap();
        let z = ExactMatrix::from_fn(3, 3, |i, j| if i == j { gq(1, 0) } else { gq(0, 0) });
        let x = SymmetricSpaceElement::new(pair, Space::S, vec![z]).unwrap();
        assert_eq!(signed_jordan_type(&x), Err(Error::NotNilpotent));
    }
}
