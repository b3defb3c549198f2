use super::element::{Space, SymmetricSpaceElement};
use super::matrix::{gq, ExactMatrix};
use crate::combinatorics::{validate_diagram, DualPair, GroupTag, Sign, SignedDiagram};
use crate::error::{Error, Result};

/// A Jordan chain v_1 -> v_2 -> ... -> v_len -> 0; `tail` is the sign of v_len.
struct Chain {
    len: usize,
    tail: Sign,
    start: usize,
}

impl Chain {
    fn index(&self, i: usize) -> usize {
        self.start + i - 1
    }

    fn sign(&self, i: usize) -> Sign {
        self.tail.alternate(self.len - i)
    }
}

struct ChainModel {
    chains: Vec<Chain>,
    dim: usize,
    form: ExactMatrix,
}

impl ChainModel {
    fn new(specs: &[(usize, Sign)]) -> Self {
        let mut chains = Vec::new();
        let mut start = 0;
        for &(len, tail) in specs {
            chains.push(Chain { len, tail, start });
            start += len;
        }
        ChainModel { chains, dim: start, form: ExactMatrix::zeros(start, start) }
    }

    fn shift(&self) -> ExactMatrix {
        let mut x = ExactMatrix::zeros(self.dim, self.dim);
        for c in &self.chains {
            for i in 1..c.len {
                x.set(c.index(i + 1), c.index(i), gq(1, 0));
            }
        }
        x
    }

    fn indices(&self, s: Sign) -> Vec<usize> {
        let mut out = Vec::new();
        for c in &self.chains {
            for i in 1..=c.len {
                if c.sign(i) == s {
                    out.push(c.index(i));
                }
            }
        }
        out
    }

    fn pair_symmetric(&mut self, a: usize, b: usize, value: i64) {
        self.form.set(a, b, gq(value, 0));
        self.form.set(b, a, gq(value, 0));
    }

    /// Coordinates (X, Y) of the shift in a basis p of V^+ and the F-dual basis of V^-.
    fn coordinates(&self) -> (ExactMatrix, ExactMatrix) {
        let x = self.shift();
        let plus = self.indices(Sign::Plus);
        let minus = self.indices(Sign::Minus);
        let select = |idx: &[usize]| {
            let mut e = ExactMatrix::zeros(self.dim, idx.len());
            for (c, &i) in idx.iter().enumerate() {
                e.set(i, c, gq(1, 0));
            }
            e
        };
        let ep = select(&plus);
        let em = select(&minus);
        let h = &(&ep.transpose() * &self.form) * &em;
        let q = &em * &h.inverse().expect("the form pairs V^+ with V^- perfectly");
        let big_x = &(&ep.transpose() * &self.form) * &(&x * &ep);
        let big_y = &(&q.transpose() * &self.form) * &(&x * &q);
        (big_x, big_y)
    }
}

fn counts_by_length(d: &SignedDiagram) -> std::collections::BTreeMap<usize, (usize, usize)> {
    let mut m = std::collections::BTreeMap::new();
    for r in d.rows() {
        let e = m.entry(r.len).or_insert((0, 0));
        match r.lead {
            Sign::Plus => e.0 += 1,
            Sign::Minus => e.1 += 1,
        }
    }
    m
}

/// A nilpotent element of s' whose signed Jordan type is `d`.
pub fn build_representative(pair: &DualPair, d: &SignedDiagram) -> Result<SymmetricSpaceElement> {
    let group = pair.small_group();
    if d.group() != group {
        return Err(Error::InvalidInput(format!("diagram for {}, expected {group}", d.group())));
    }
    if !validate_diagram(d).valid {
        return Err(Error::InvalidInput(format!("{d} is not a valid diagram for {group}")));
    }
    let blocks = match group {
        GroupTag::Sp2nR { .. } => {
            // even rows: one chain paired with itself; odd rows: chains with opposite tails paired
            let mut specs = Vec::new();
            let mut pairing = Vec::new();
            for (len, (plus, minus)) in counts_by_length(d) {
                if len % 2 == 0 {
                    for _ in 0..plus {
                        pairing.push((specs.len(), None));
                        specs.push((len, Sign::Plus));
                    }
                    for _ in 0..minus {
                        pairing.push((specs.len(), None));
                        specs.push((len, Sign::Minus));
                    }
                } else {
                    for _ in 0..plus {
                        pairing.push((specs.len(), Some(specs.len() + 1)));
                        specs.push((len, Sign::Plus));
                        specs.push((len, Sign::Minus));
                    }
                }
            }
            let mut model = ChainModel::new(&specs);
            for (a, b) in pairing {
                let ca = &model.chains[a];
                let len = ca.len;
                let targets: Vec<(usize, usize)> = match b {
                    None => (1..=len).map(|i| (ca.index(i), ca.index(len + 1 - i))).collect(),
                    Some(b) => {
                        let cb = &model.chains[b];
                        (1..=len).map(|i| (ca.index(i), cb.index(len + 1 - i))).collect()
                    }
                };
                for (i, j) in targets {
                    model.pair_symmetric(i, j, 1);
                }
            }
            let (x, y) = model.coordinates();
            vec![x, y]
        }
        GroupTag::OstarN { .. } => {
            // each row is doubled: odd rows as chains with opposite tails, even rows with equal tails
            let mut specs = Vec::new();
            for r in d.rows() {
                let other = if r.len % 2 == 1 { r.lead.flip() } else { r.lead };
                specs.push((r.len, r.lead));
                specs.push((r.len, other));
            }
            let mut model = ChainModel::new(&specs);
            for k in 0..d.rows().len() {
                let (ca, cb) = (&model.chains[2 * k], &model.chains[2 * k + 1]);
                let len = ca.len;
                let entries: Vec<(usize, usize, i64)> = (1..=len)
                    .map(|i| (ca.index(i), cb.index(len + 1 - i), if i % 2 == 0 { 1 } else { -1 }))
                    .collect();
                for (i, j, v) in entries {
                    model.pair_symmetric(i, j, v);
                }
            }
            let (x, y) = model.coordinates();
            vec![x, y]
        }
        GroupTag::Umn { .. } => {
            let specs: Vec<(usize, Sign)> = d.rows().iter().map(|r| (r.len, r.lead)).collect();
            let model = ChainModel::new(&specs);
            let x = model.shift();
            let plus = model.indices(Sign::Plus);
            let minus = model.indices(Sign::Minus);
            // P: V^- -> V^+, Q: V^+ -> V^-
            let pm = ExactMatrix::from_fn(plus.len(), minus.len(), |c, a| x.get(plus[c], minus[a]).clone());
            let qm = ExactMatrix::from_fn(minus.len(), plus.len(), |a, c| x.get(minus[a], plus[c]).clone());
            vec![qm.transpose(), pm.transpose()]
        }
        _ => unreachable!("small members are Sp(2n,R), U(m,n) or O*(2n)"),
    };
    SymmetricSpaceElement::new(*pair, Space::SPrime, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_orbits, DEFAULT_ENUMERATION_CAP};
    use crate::geometry::jordan::signed_jordan_type;

    #[test]
    fn round_trip_every_orbit() {
        for pair in [
            DualPair::osp(7, 7, 3).unwrap(),
            DualPair::uu(5, 5, 3, 2).unwrap(),
            DualPair::uu(5, 5, 2, 3).unwrap(),
            DualPair::sp_ostar(4, 4, 4).unwrap(),
            DualPair::sp_ostar(5, 5, 5).unwrap(),
        ] {
            for d in enumerate_orbits(pair.small_group(), DEFAULT_ENUMERATION_CAP).unwrap() {
                let x = build_representative(&pair, &d).unwrap();
                assert_eq!(signed_jordan_type(&x).unwrap(), d, "{pair} {d}");
            }
        }
    }

    #[test]
    fn small_examples() {
        let pair = DualPair::osp(3, 3, 1).unwrap();
        let zero = SignedDiagram::parse(pair.small_group(), "(+)(-)").unwrap();
        assert!(build_representative(&pair, &zero).unwrap().is_zero());
        let reg = SignedDiagram::parse(pair.small_group(), "(+-)").unwrap();
        let x = build_representative(&pair, &reg).unwrap();
        assert!(x.blocks[0].is_zero());
        assert_eq!(x.blocks[1].rank(), 1);
        let uu = DualPair::uu(2, 2, 1, 1).unwrap();
        let reg = SignedDiagram::parse(uu.small_group(), "(+-)").unwrap();
        let x = build_representative(&uu, &reg).unwrap();
        assert!(x.blocks[0].is_zero());
        assert!((&x.blocks[1] * &x.blocks[0]).is_zero());
    }
}
