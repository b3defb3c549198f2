use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::{BigInt, One, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::labels::RepLabel;
use crate::error::{Error, Result};

/// One (label or label pair, multiplicity) term of a graded piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelEntry {
    pub plus: RepLabel,
    pub minus: Option<RepLabel>,
    pub mult: BigInt,
    pub dim: BigInt,
}

/// Degree-graded decomposition into irreducibles, truncated at `truncation`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedDecomposition {
    pub truncation: usize,
    pub entries: BTreeMap<usize, Vec<LabelEntry>>,
}

/// Graded dimensions H(0..=K).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub coefficients: Vec<BigInt>,
}

type Key = (RepLabel, Option<RepLabel>);

/// Accumulates multiplicities with a sorted, deterministic merge.
#[derive(Debug, Default)]
pub struct Accumulator {
    truncation: usize,
    terms: BTreeMap<usize, BTreeMap<Key, BigInt>>,
}

impl Accumulator {
    pub fn new(truncation: usize) -> Self {
        Accumulator { truncation, terms: BTreeMap::new() }
    }

    pub fn add(&mut self, deg: usize, plus: RepLabel, minus: Option<RepLabel>, mult: BigInt) {
        if mult.is_zero() {
            return;
        }
        *self.terms.entry(deg).or_default().entry((plus, minus)).or_insert_with(BigInt::zero) += mult;
    }

    pub fn finish(self) -> Result<GradedDecomposition> {
        let mut entries = BTreeMap::new();
        for (deg, terms) in self.terms {
            let mut list = Vec::with_capacity(terms.len());
            for ((plus, minus), mult) in terms {
                if mult.is_zero() {
                    continue;
                }
                let mut dim = plus.dim()?;
                if let Some(m) = &minus {
                    dim *= m.dim()?;
                }
                list.push(LabelEntry { plus, minus, mult, dim });
            }
            if !list.is_empty() {
                entries.insert(deg, list);
            }
        }
        Ok(GradedDecomposition { truncation: self.truncation, entries })
    }
}

fn big_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn big_from_json(v: &Value) -> Result<BigInt> {
    if let Some(i) = v.as_i64() {
        return Ok(BigInt::from(i));
    }
    v.as_str()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected an integer, found {v}")))
}

impl GradedDecomposition {
    pub fn hilbert_series(&self) -> HilbertSeries {
        let mut coefficients = vec![BigInt::zero(); self.truncation + 1];
        for (&deg, list) in &self.entries {
            if deg <= self.truncation {
                for e in list {
                    coefficients[deg] += &e.mult * &e.dim;
                }
            }
        }
        HilbertSeries { coefficients }
    }

    pub fn degree(&self, deg: usize) -> &[LabelEntry] {
        self.entries.get(&deg).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &LabelEntry)> {
        self.entries.iter().flat_map(|(&d, list)| list.iter().map(move |e| (d, e)))
    }

    /// All multiplicities are one and no label pair repeats across degrees.
    pub fn is_multiplicity_free(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.iter().all(|(_, e)| e.mult.is_one() && seen.insert((e.plus.clone(), e.minus.clone())))
    }

    pub fn to_json(&self) -> Value {
        let degrees: Vec<Value> = self
            .entries
            .iter()
            .map(|(deg, list)| {
                let labels: Vec<Value> = list
                    .iter()
                    .map(|e| {
                        json!({
                            "plus": e.plus.to_json(),
                            "minus": e.minus.as_ref().map(RepLabel::to_json),
                            "mult": big_to_json(&e.mult),
                            "dim": big_to_json(&e.dim),
                        })
                    })
                    .collect();
                json!({"deg": deg, "labels": labels})
            })
            .collect();
        json!({"truncation": self.truncation, "degrees": degrees})
    }

    /// Reads the JSON written by `to_json`. A bare array of degree objects is also accepted,
    /// in which case the truncation is the largest degree present.
    pub fn from_json(value: &Value) -> Result<Self> {
        let (degrees, truncation) = match value {
            Value::Array(a) => (a.clone(), None),
            Value::Object(o) => (
                o.get("degrees").and_then(Value::as_array).cloned().ok_or_else(|| Error::Parse("missing degrees".into()))?,
                o.get("truncation").and_then(Value::as_u64).map(|t| t as usize),
            ),
            _ => return Err(Error::Parse("expected an object or array".into())),
        };
        let mut max_deg = 0;
        let mut acc = Vec::new();
        for d in &degrees {
            let deg = d.get("deg").and_then(Value::as_u64).ok_or_else(|| Error::Parse("missing deg".into()))? as usize;
            max_deg = max_deg.max(deg);
            let labels = d.get("labels").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing labels".into()))?;
            for l in labels {
                let plus = RepLabel::from_json(l.get("plus").ok_or_else(|| Error::Parse("missing plus".into()))?)?;
                let minus = match l.get("minus") {
                    None | Some(Value::Null) => None,
                    Some(v) => Some(RepLabel::from_json(v)?),
                };
                let mult = match l.get("mult") {
                    None => BigInt::one(),
                    Some(v) => big_from_json(v)?,
                };
                if mult <= BigInt::zero() {
                    return Err(Error::Parse(format!("multiplicity {mult} is not positive")));
                }
                acc.push((deg, plus, minus, mult));
            }
        }
        let truncation = truncation.unwrap_or(max_deg);
        if max_deg > truncation {
            return Err(Error::Parse(format!("degree {max_deg} exceeds truncation {truncation}")));
        }
        let mut a = Accumulator::new(truncation);
        for (deg, plus, minus, mult) in acc {
            a.add(deg, plus, minus, mult);
        }
        a.finish()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("deg,plus,minus,mult,dim\n");
        for (deg, e) in self.iter() {
            let minus = e.minus.as_ref().map(ToString::to_string).unwrap_or_default();
            let _ = writeln!(out, "{deg},\"{}\",\"{minus}\",{},{}", e.plus, e.mult, e.dim);
        }
        out
    }
}

impl HilbertSeries {
    pub fn get(&self, k: usize) -> Option<&BigInt> {
        self.coefficients.get(k)
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Coefficients of (1 - t^2)^c / (1 - t)^d through t^k.
    pub fn complete_intersection(c: usize, d: usize, k: usize) -> HilbertSeries {
        // 1/(1-t)^d
        let mut coeffs: Vec<BigInt> = vec![BigInt::one(); k + 1];
        if d == 0 {
            coeffs = (0..=k).map(|i| if i == 0 { BigInt::one() } else { BigInt::zero() }).collect();
        } else {
            for _ in 1..d {
                for i in 1..=k {
                    let prev = coeffs[i - 1].clone();
                    coeffs[i] += prev;
                }
            }
        }
        for _ in 0..c {
            for i in (2..=k).rev() {
                let lower = coeffs[i - 2].clone();
                coeffs[i] -= lower;
            }
        }
        HilbertSeries { coefficients: coeffs }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,H(k)\n");
        for (k, h) in self.coefficients.iter().enumerate() {
            let _ = writeln!(out, "{k},{h}");
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coefficients.iter().map(big_to_json).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repdecomp::labels::{LabelGroup, LabelWeight, Role};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn complete_intersection_examples() {
        // (1+t)/(1-t)^2
        assert_eq!(HilbertSeries::complete_intersection(1, 3, 4).coefficients, ints(&[1, 3, 5, 7, 9]));
        assert_eq!(HilbertSeries::complete_intersection(0, 1, 3).coefficients, ints(&[1, 1, 1, 1]));
        assert_eq!(HilbertSeries::complete_intersection(0, 0, 2).coefficients, ints(&[1, 0, 0]));
        assert_eq!(HilbertSeries::complete_intersection(0, 4, 2).coefficients, ints(&[1, 4, 10]));
    }

    #[test]
    fn accumulator_merges_and_drops_zero() {
        let l = |w: Vec<i64>| RepLabel { role: Role::Kprime, group: LabelGroup::GL(1), weight: LabelWeight::Single(w) };
        let mut a = Accumulator::new(2);
        a.add(1, l(vec![1]), None, BigInt::one());
        a.add(1, l(vec![1]), None, BigInt::one());
        a.add(2, l(vec![2]), None, BigInt::zero());
        let g = a.finish().unwrap();
        assert_eq!(g.degree(1).len(), 1);
        assert_eq!(g.degree(1)[0].mult, BigInt::from(2));
        assert!(g.degree(2).is_empty());
        assert!(!g.is_multiplicity_free());
        let back = GradedDecomposition::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
        assert_eq!(g.hilbert_series().to_csv(), "k,H(k)\n0,0\n1,2\n2,0\n");
    }
}
