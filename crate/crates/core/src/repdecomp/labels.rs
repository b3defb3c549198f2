use std::fmt;

use num::BigInt;
use serde_json::{json, Value};

use crate::combinatorics::{partitions_up_to, DualPair, PairKind, Partition};
use crate::error::{Error, Result};
use crate::rootdata::{dim_gl, dim_orthogonal, dim_symplectic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Kplus,
    Kminus,
    Kprime,
    Lplus,
}

impl Role {
    pub fn as_str(&self) -> &'static str {
        match self {
            Role::Kplus => "Kplus",
            Role::Kminus => "Kminus",
            Role::Kprime => "Kprime",
            Role::Lplus => "Lplus",
        }
    }
}

/// Complex group carrying a label. `Sp(k)` is Sp(2k, C).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LabelGroup {
    GL(usize),
    O(usize),
    Sp(usize),
    GLxGL(usize, usize),
}

impl fmt::Display for LabelGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelGroup::GL(r) => write!(f, "GL({r})"),
            LabelGroup::O(p) => write!(f, "O({p})"),
            LabelGroup::Sp(p) => write!(f, "Sp({})", 2 * p),
            LabelGroup::GLxGL(a, b) => write!(f, "GL({a})xGL({b})"),
        }
    }
}

/// Highest weight, on one group or on a product of two general linear groups.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LabelWeight {
    Single(Vec<i64>),
    Pair(Vec<i64>, Vec<i64>),
}

impl LabelWeight {
    pub fn to_json(&self) -> Value {
        match self {
            LabelWeight::Single(w) => json!(w),
            LabelWeight::Pair(a, b) => json!([a, b]),
        }
    }
}

fn fmt_vec(v: &[i64]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", items.join(","))
}

impl fmt::Display for LabelWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelWeight::Single(w) => f.write_str(&fmt_vec(w)),
            LabelWeight::Pair(a, b) => write!(f, "({},{})", fmt_vec(a), fmt_vec(b)),
        }
    }
}

/// An irreducible representation label with its role in the correspondence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RepLabel {
    pub role: Role,
    pub group: LabelGroup,
    pub weight: LabelWeight,
}

impl RepLabel {
    pub fn dim(&self) -> Result<BigInt> {
        let as_partition = |w: &[i64]| -> Result<Vec<usize>> {
            if w.iter().any(|&x| x < 0) {
                return Err(Error::NonDominantWeight(format!("{w:?} is not a partition")));
            }
            Ok(w.iter().map(|&x| x as usize).collect())
        };
        match (&self.group, &self.weight) {
            (LabelGroup::GL(r), LabelWeight::Single(w)) if w.len() == *r => dim_gl(w),
            (LabelGroup::O(p), LabelWeight::Single(w)) => dim_orthogonal(*p, &as_partition(w)?),
            (LabelGroup::Sp(p), LabelWeight::Single(w)) => dim_symplectic(*p, &as_partition(w)?),
            (LabelGroup::GLxGL(a, b), LabelWeight::Pair(u, v)) if u.len() == *a && v.len() == *b => {
                Ok(dim_gl(u)? * dim_gl(v)?)
            }
            _ => Err(Error::ShapeMismatch(format!("weight {} does not fit {}", self.weight, self.group))),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "role": self.role.as_str(),
            "group": self.group.to_string(),
            "weight": self.weight.to_json(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("label: {what}"));
        let role = match value.get("role").and_then(Value::as_str) {
            Some("Kplus") => Role::Kplus,
            Some("Kminus") => Role::Kminus,
            Some("Kprime") | None => Role::Kprime,
            Some("Lplus") => Role::Lplus,
            Some(other) => return Err(bad(&format!("unknown role {other}"))),
        };
        let group_text = value.get("group").and_then(Value::as_str).ok_or_else(|| bad("missing group"))?;
        let group = parse_group(group_text).ok_or_else(|| bad(&format!("unknown group {group_text}")))?;
        let ints = |v: &Value| -> Result<Vec<i64>> {
            v.as_array()
                .ok_or_else(|| bad("weight must be an array"))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| bad("weight entries must be integers")))
                .collect()
        };
        let w = value.get("weight").ok_or_else(|| bad("missing weight"))?;
        let weight = match group {
            LabelGroup::GLxGL(..) => {
                let parts = w.as_array().ok_or_else(|| bad("pair weight must be an array"))?;
                if parts.len() != 2 {
                    return Err(bad("pair weight needs two components"));
                }
                LabelWeight::Pair(ints(&parts[0])?, ints(&parts[1])?)
            }
            _ => LabelWeight::Single(ints(w)?),
        };
        Ok(RepLabel { role, group, weight })
    }
}

fn parse_group(s: &str) -> Option<LabelGroup> {
    let num = |t: &str, prefix: &str| -> Option<usize> { t.strip_prefix(prefix)?.strip_suffix(')')?.parse().ok() };
    if let Some((a, b)) = s.split_once(")x") {
        return Some(LabelGroup::GLxGL(num(&format!("{a})"), "GL(")?, num(b, "GL(")?));
    }
    if let Some(r) = num(s, "GL(") {
        return Some(LabelGroup::GL(r));
    }
    if let Some(p) = num(s, "O(") {
        return Some(LabelGroup::O(p));
    }
    if let Some(k) = num(s, "Sp(") {
        return if k % 2 == 0 { Some(LabelGroup::Sp(k / 2)) } else { None };
    }
    None
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.group, self.weight)
    }
}

/// An element of R(K'_C): a partition, or a pair (gamma, delta) for U(m,n) meaning the
/// GL_m x GL_n weight (gamma ; -delta reversed).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tau {
    Single(Partition),
    Pair(Partition, Partition),
}

impl Tau {
    pub fn size(&self) -> usize {
        match self {
            Tau::Single(l) => l.size(),
            Tau::Pair(g, d) => g.size() + d.size(),
        }
    }

    pub fn trivial(pair: &DualPair) -> Tau {
        match pair.kind {
            PairKind::UU => Tau::Pair(Partition::empty(), Partition::empty()),
            _ => Tau::Single(Partition::empty()),
        }
    }
}

/// `padded` reversed and negated: the weight of the dual module.
pub fn dual_weight(w: &[i64]) -> Vec<i64> {
    w.iter().rev().map(|x| -x).collect()
}

/// (a_1..a_k, 0..0, -b_l..-b_1) in Z^r.
pub fn mixed_weight(a: &Partition, b: &Partition, r: usize) -> Vec<i64> {
    let mut w = vec![0i64; r];
    for i in 0..a.len() {
        w[i] = a.part(i) as i64;
    }
    for j in 0..b.len() {
        w[r - 1 - j] -= b.part(j) as i64;
    }
    w
}

/// R(K'_C) truncated at total size `max_size`, ordered by size.
pub fn r_kprime(pair: &DualPair, max_size: usize) -> Vec<Tau> {
    match pair.kind {
        PairKind::OSp | PairKind::SpOstar => {
            partitions_up_to(max_size, pair.n).into_iter().map(Tau::Single).collect()
        }
        PairKind::UU => {
            let mut out = Vec::new();
            for s in 0..=max_size {
                for a in 0..=s {
                    for g in crate::combinatorics::partitions_of(a, pair.m) {
                        for d in crate::combinatorics::partitions_of(s - a, pair.n) {
                            out.push(Tau::Pair(g.clone(), d));
                        }
                    }
                }
            }
            out
        }
    }
}

/// The K'_C weight of tau.
pub fn tau_weight(pair: &DualPair, tau: &Tau) -> LabelWeight {
    match tau {
        Tau::Single(l) => LabelWeight::Single(l.padded(pair.n)),
        Tau::Pair(g, d) => LabelWeight::Pair(g.padded(pair.m), dual_weight(&d.padded(pair.n))),
    }
}

fn kprime_group(pair: &DualPair) -> LabelGroup {
    match pair.kind {
        PairKind::UU => LabelGroup::GLxGL(pair.m, pair.n),
        _ => LabelGroup::GL(pair.n),
    }
}

pub fn kprime_label(pair: &DualPair, tau: &Tau) -> RepLabel {
    RepLabel { role: Role::Kprime, group: kprime_group(pair), weight: tau_weight(pair, tau) }
}

/// The label of tau*.
pub fn kprime_dual_label(pair: &DualPair, tau: &Tau) -> RepLabel {
    let weight = match tau_weight(pair, tau) {
        LabelWeight::Single(w) => LabelWeight::Single(dual_weight(&w)),
        LabelWeight::Pair(a, b) => LabelWeight::Pair(dual_weight(&a), dual_weight(&b)),
    };
    RepLabel { role: Role::Kprime, group: kprime_group(pair), weight }
}

/// sigma^+(tau*): the K^+_C module paired with tau* in the harmonics on W^+.
pub fn sigma_plus_dual(pair: &DualPair, tau: &Tau) -> RepLabel {
    let (group, weight) = match (pair.kind, tau) {
        (PairKind::OSp, Tau::Single(l)) => (LabelGroup::O(pair.p), LabelWeight::Single(l.padded(pair.n))),
        (PairKind::SpOstar, Tau::Single(l)) => (LabelGroup::Sp(pair.p), LabelWeight::Single(l.padded(pair.n))),
        (PairKind::UU, Tau::Pair(g, d)) => (LabelGroup::GL(pair.p), LabelWeight::Single(mixed_weight(d, g, pair.p))),
        _ => unreachable!("tau shape matches the pair kind"),
    };
    RepLabel { role: Role::Kplus, group, weight }
}

/// sigma^-(tau): the K^-_C module paired with tau in the harmonics on W^-.
pub fn sigma_minus(pair: &DualPair, tau: &Tau) -> RepLabel {
    let (group, weight) = match (pair.kind, tau) {
        (PairKind::OSp, Tau::Single(l)) => (LabelGroup::O(pair.q), LabelWeight::Single(l.padded(pair.n))),
        (PairKind::SpOstar, Tau::Single(l)) => (LabelGroup::Sp(pair.q), LabelWeight::Single(l.padded(pair.n))),
        (PairKind::UU, Tau::Pair(g, d)) => (LabelGroup::GL(pair.q), LabelWeight::Single(mixed_weight(g, d, pair.q))),
        _ => unreachable!("tau shape matches the pair kind"),
    };
    RepLabel { role: Role::Kminus, group, weight }
}

/// rho^+(tau*): the L^+_C module paired with tau* in C[W^+].
pub fn rho_plus_dual(pair: &DualPair, tau: &Tau) -> RepLabel {
    let (group, weight) = match (pair.kind, tau) {
        (PairKind::OSp, Tau::Single(l)) => (LabelGroup::GL(pair.p), LabelWeight::Single(dual_weight(&l.padded(pair.p)))),
        (PairKind::SpOstar, Tau::Single(l)) => {
            (LabelGroup::GL(2 * pair.p), LabelWeight::Single(dual_weight(&l.padded(2 * pair.p))))
        }
        (PairKind::UU, Tau::Pair(g, d)) => (
            LabelGroup::GLxGL(pair.p, pair.p),
            LabelWeight::Pair(dual_weight(&g.padded(pair.p)), d.padded(pair.p)),
        ),
        _ => unreachable!("tau shape matches the pair kind"),
    };
    RepLabel { role: Role::Lplus, group, weight }
}
