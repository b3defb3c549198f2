use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A classical symmetric pair whose nilpotent orbits are labelled by signed diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum GroupTag {
    Sp2nR { n: usize },
    Opq { p: usize, q: usize },
    Umn { m: usize, n: usize },
    OstarN { n: usize },
    Sppq { p: usize, q: usize },
}

impl GroupTag {
    /// Number of boxes of every diagram for this group.
    pub fn size(&self) -> usize {
        match *self {
            GroupTag::Sp2nR { n } => 2 * n,
            GroupTag::Opq { p, q } => p + q,
            GroupTag::Umn { m, n } => m + n,
            GroupTag::OstarN { n } => n,
            GroupTag::Sppq { p, q } => p + q,
        }
    }

    /// Required (plus, minus) box counts, when the group fixes them.
    pub fn signature(&self) -> Option<(usize, usize)> {
        match *self {
            GroupTag::Opq { p, q } => Some((p, q)),
            GroupTag::Umn { m, n } => Some((m, n)),
            GroupTag::Sppq { p, q } => Some((p, q)),
            GroupTag::Sp2nR { .. } | GroupTag::OstarN { .. } => None,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            GroupTag::Sp2nR { n } => format!("Sp({},R)", 2 * n),
            GroupTag::Opq { p, q } => format!("O({p},{q})"),
            GroupTag::Umn { m, n } => format!("U({m},{n})"),
            GroupTag::OstarN { n } => format!("O*({})", 2 * n),
            GroupTag::Sppq { p, q } => format!("Sp({p},{q})"),
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PairKind {
    OSp,
    UU,
    SpOstar,
}

/// One of the three stable-range dual pairs.
///
/// `m` is only meaningful for `UU`; it is zero otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DualPair {
    pub kind: PairKind,
    pub p: usize,
    pub q: usize,
    pub m: usize,
    pub n: usize,
}

impl DualPair {
    /// (O(p,q), Sp(2n,R)) with 2n < min(p,q).
    pub fn osp(p: usize, q: usize, n: usize) -> Result<Self> {
        Self::checked(DualPair { kind: PairKind::OSp, p, q, m: 0, n })
    }

    /// (U(p,q), U(m,n)) with m+n <= min(p,q).
    pub fn uu(p: usize, q: usize, m: usize, n: usize) -> Result<Self> {
        Self::checked(DualPair { kind: PairKind::UU, p, q, m, n })
    }

    /// (Sp(p,q), O*(2n)) with n <= min(p,q).
    pub fn sp_ostar(p: usize, q: usize, n: usize) -> Result<Self> {
        Self::checked(DualPair { kind: PairKind::SpOstar, p, q, m: 0, n })
    }

    fn checked(pair: DualPair) -> Result<Self> {
        let DualPair { kind, p, q, m, n } = pair;
        let ok = match kind {
            PairKind::OSp => n >= 1 && 2 * n < p.min(q),
            PairKind::UU => m + n >= 1 && m + n <= p.min(q),
            PairKind::SpOstar => n >= 1 && n <= p.min(q),
        };
        if ok {
            Ok(pair)
        } else {
            Err(Error::StableRange(pair.to_string()))
        }
    }

    /// The larger member G.
    pub fn large_group(&self) -> GroupTag {
        match self.kind {
            PairKind::OSp => GroupTag::Opq { p: self.p, q: self.q },
            PairKind::UU => GroupTag::Umn { m: self.p, n: self.q },
            PairKind::SpOstar => GroupTag::Sppq { p: self.p, q: self.q },
        }
    }

    /// The smaller member G'.
    pub fn small_group(&self) -> GroupTag {
        match self.kind {
            PairKind::OSp => GroupTag::Sp2nR { n: self.n },
            PairKind::UU => GroupTag::Umn { m: self.m, n: self.n },
            PairKind::SpOstar => GroupTag::OstarN { n: self.n },
        }
    }

    /// Complex dimension of W^+ and W^-.
    pub fn dim_w(&self) -> (usize, usize) {
        let DualPair { p, q, m, n, .. } = *self;
        match self.kind {
            PairKind::OSp => (p * n, q * n),
            PairKind::UU => (p * (m + n), q * (m + n)),
            PairKind::SpOstar => (2 * p * n, 2 * q * n),
        }
    }

    /// Number of quadratic generators of the invariants on each of W^+ and W^-.
    pub fn quadratic_invariants(&self) -> usize {
        let n = self.n;
        match self.kind {
            PairKind::OSp => n * (n + 1) / 2,
            PairKind::UU => self.m * n,
            PairKind::SpOstar => n * (n.saturating_sub(1)) / 2,
        }
    }

    pub fn label(&self) -> String {
        match self.kind {
            PairKind::OSp => format!("OSp({},{},{})", self.p, self.q, self.n),
            PairKind::UU => format!("UU({},{},{},{})", self.p, self.q, self.m, self.n),
            PairKind::SpOstar => format!("SpOstar({},{},{})", self.p, self.q, self.n),
        }
    }
}

impl fmt::Display for DualPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}
