use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, trimming trailing zeros. Fails on increasing parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!("{parts:?} has interior zeros")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (zero beyond the length).
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`, as signed integers.
    pub fn padded(&self, n: usize) -> Vec<i64> {
        (0..n).map(|i| self.part(i) as i64).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (0..first)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Contains `other` as a Young diagram.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    pub fn scaled(&self, factor: usize) -> Partition {
        Partition { parts: self.parts.iter().map(|p| p * factor).collect() }
    }

    /// Each part repeated twice: the partition with all column lengths even.
    pub fn doubled_rows(&self) -> Partition {
        Partition { parts: self.parts.iter().flat_map(|&p| [p, p]).collect() }
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        if v.iter().any(|&x| x < 0) {
            return Err(Error::InvalidInput(format!("{v:?} has negative parts")));
        }
        Partition::new(v.into_iter().map(|x| x as usize).collect())
    }
}

impl From<Partition> for Vec<i64> {
    fn from(p: Partition) -> Self {
        p.parts.into_iter().map(|x| x as i64).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `k` with at most `max_len` parts, in reverse lexicographic order.
pub fn partitions_of(k: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(k, k, max_len, &mut cur, &mut out);
    out
}

fn fill(rem: usize, max_part: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=max_part.min(rem)).rev() {
        cur.push(p);
        fill(rem - p, p, slots - 1, cur, out);
        cur.pop();
    }
}

/// All partitions of size at most `k` with at most `max_len` parts, ordered by size.
pub fn partitions_up_to(k: usize, max_len: usize) -> Vec<Partition> {
    (0..=k).flat_map(|s| partitions_of(s, max_len)).collect()
}
