use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::pair::{DualPair, GroupTag};
use crate::error::{Error, Result};

/// Default bound on the number of diagrams `enumerate_orbits` may return.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    /// Sign after `k` alternations.
    pub fn alternate(self, k: usize) -> Sign {
        if k % 2 == 0 {
            self
        } else {
            self.flip()
        }
    }
}

/// A row of alternating signs, stored by length and leading sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedRow {
    pub len: usize,
    pub lead: Sign,
}

impl SignedRow {
    pub fn new(len: usize, lead: Sign) -> Self {
        SignedRow { len, lead }
    }

    pub fn signs(&self) -> Vec<Sign> {
        (0..self.len).map(|k| self.lead.alternate(k)).collect()
    }

    pub fn plus_count(&self) -> usize {
        match self.lead {
            Sign::Plus => self.len.div_ceil(2),
            Sign::Minus => self.len / 2,
        }
    }

    pub fn minus_count(&self) -> usize {
        self.len - self.plus_count()
    }

    /// The row with one more box at its right end.
    pub fn extended(&self) -> SignedRow {
        SignedRow { len: self.len + 1, lead: self.lead }
    }
}

/// Canonical order: longer rows first; `+`-leading before `-`-leading among equal lengths.
impl Ord for SignedRow {
    fn cmp(&self, other: &Self) -> Ordering {
        other.len.cmp(&self.len).then(self.lead.cmp(&other.lead))
    }
}

impl PartialOrd for SignedRow {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignedRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for s in self.signs() {
            write!(f, "{}", s.as_char())?;
        }
        write!(f, ")")
    }
}

/// Signed Young diagram attached to a group, rows kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedDiagram {
    group: GroupTag,
    rows: Vec<SignedRow>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Size { expected: usize, found: usize },
    Signature { expected: (usize, usize), found: (usize, usize) },
    Parity { length: usize, rule: &'static str },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Size { expected, found } => {
                write!(f, "size: expected {expected} boxes, found {found}")
            }
            Violation::Signature { expected, found } => write!(
                f,
                "signature: expected ({},{}), found ({},{})",
                expected.0, expected.1, found.0, found.1
            ),
            Violation::Parity { length, rule } => write!(f, "parity at length {length}: {rule}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validation {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl SignedDiagram {
    /// Builds a diagram, sorting rows into canonical order. Zero-length rows are dropped.
    pub fn new(group: GroupTag, rows: Vec<SignedRow>) -> Self {
        let mut rows: Vec<SignedRow> = rows.into_iter().filter(|r| r.len > 0).collect();
        rows.sort();
        SignedDiagram { group, rows }
    }

    pub fn group(&self) -> GroupTag {
        self.group
    }

    pub fn rows(&self) -> &[SignedRow] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len).sum()
    }

    pub fn signature(&self) -> (usize, usize) {
        self.rows
            .iter()
            .fold((0, 0), |(a, b), r| (a + r.plus_count(), b + r.minus_count()))
    }

    /// Row-length multiset as a partition (descending).
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len).collect()
    }

    /// Count of rows with the given length and leading sign.
    pub fn count(&self, len: usize, lead: Sign) -> usize {
        self.rows.iter().filter(|r| r.len == len && r.lead == lead).count()
    }

    /// Re-sorts the rows; a no-op for diagrams built through `new`.
    pub fn canonicalize(&self) -> SignedDiagram {
        SignedDiagram::new(self.group, self.rows.clone())
    }

    pub fn is_canonical(&self) -> bool {
        self.rows.windows(2).all(|w| w[0] <= w[1]) && self.rows.iter().all(|r| r.len > 0)
    }

    /// Parses the text form `[(+-+)(+)(-)(-)]`; the brackets are optional.
    pub fn parse(group: GroupTag, text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = match t.strip_prefix('[') {
            Some(s) => s.strip_suffix(']').ok_or_else(|| Error::Parse(format!("unbalanced brackets in {t:?}")))?,
            None => t,
        };
        let mut rows = Vec::new();
        let mut chars = inner.chars().filter(|c| !c.is_whitespace()).peekable();
        while let Some(c) = chars.next() {
            if c != '(' {
                return Err(Error::Parse(format!("unexpected {c:?} in {t:?}")));
            }
            let mut signs = Vec::new();
            loop {
                match chars.next() {
                    Some('+') => signs.push(Sign::Plus),
                    Some('-') | Some('\u{2212}') => signs.push(Sign::Minus),
                    Some(')') => break,
                    Some(other) => return Err(Error::Parse(format!("unexpected {other:?} in {t:?}"))),
                    None => return Err(Error::Parse(format!("unterminated row in {t:?}"))),
                }
            }
            let Some(&lead) = signs.first() else {
                return Err(Error::Parse(format!("empty row in {t:?}")));
            };
            if signs.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Parse(format!("signs do not alternate in {t:?}")));
            }
            rows.push(SignedRow::new(signs.len(), lead));
        }
        Ok(SignedDiagram::new(group, rows))
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| json!({"len": r.len, "lead": r.lead.as_char().to_string()}))
            .collect();
        json!({"group": self.group.name(), "rows": rows})
    }

    /// Reads the JSON form; the group is taken from `group`, the `group` field is checked by name.
    pub fn from_json(group: GroupTag, value: &Value) -> Result<Self> {
        if let Some(name) = value.get("group").and_then(Value::as_str) {
            if name != group.name() {
                return Err(Error::Parse(format!("group {name} does not match {}", group.name())));
            }
        }
        let rows = value
            .get("rows")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing rows".into()))?;
        let mut out = Vec::new();
        for r in rows {
            let len = r
                .get("len")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Parse("row without len".into()))? as usize;
            let lead = match r.get("lead").and_then(Value::as_str) {
                Some("+") => Sign::Plus,
                Some("-") => Sign::Minus,
                _ => return Err(Error::Parse("row lead must be \"+\" or \"-\"".into())),
            };
            out.push(SignedRow::new(len, lead));
        }
        Ok(SignedDiagram::new(group, out))
    }
}

impl fmt::Display for SignedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in &self.rows {
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

impl PartialOrd for SignedDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SignedDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.group.cmp(&other.group).then_with(|| self.rows.cmp(&other.rows))
    }
}

/// Checks size, signature and the per-group parity rule.
pub fn validate_diagram(d: &SignedDiagram) -> Validation {
    let mut violations = Vec::new();
    let group = d.group();
    if d.size() != group.size() {
        violations.push(Violation::Size { expected: group.size(), found: d.size() });
    }
    if let Some(expected) = group.signature() {
        let found = d.signature();
        if found != expected {
            violations.push(Violation::Signature { expected, found });
        }
    }
    let mut lengths: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for r in d.rows() {
        let e = lengths.entry(r.len).or_default();
        match r.lead {
            Sign::Plus => e.0 += 1,
            Sign::Minus => e.1 += 1,
        }
    }
    for (&len, &(plus, minus)) in &lengths {
        let broken = match group {
            GroupTag::Sp2nR { .. } if len % 2 == 1 && plus != minus => {
                Some("odd rows of Sp(2n,R) must pair a +-leading row with a --leading row")
            }
            GroupTag::Opq { .. } if len % 2 == 0 && plus != minus => {
                Some("even rows of O(p,q) must pair a +-leading row with a --leading row")
            }
            GroupTag::OstarN { .. } if len % 2 == 1 && minus > 0 => {
                Some("odd rows of O*(2n) must lead with +")
            }
            GroupTag::Sppq { .. } if len % 2 == 0 && minus > 0 => {
                Some("even rows of Sp(p,q) must lead with +")
            }
            _ => None,
        };
        if let Some(rule) = broken {
            violations.push(Violation::Parity { length: len, rule });
        }
    }
    Validation { valid: violations.is_empty(), violations }
}

/// All valid diagrams for `group`, in canonical order.
pub fn enumerate_orbits(group: GroupTag, cap: usize) -> Result<Vec<SignedDiagram>> {
    let size = group.size();
    let mut kinds = Vec::new();
    for len in (1..=size).rev() {
        kinds.push(SignedRow::new(len, Sign::Plus));
        kinds.push(SignedRow::new(len, Sign::Minus));
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let sig = group.signature();
    search(group, &kinds, 0, size, (0, 0), sig, cap, &mut cur, &mut out)?;
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search(
    group: GroupTag,
    kinds: &[SignedRow],
    start: usize,
    remaining: usize,
    used: (usize, usize),
    sig: Option<(usize, usize)>,
    cap: usize,
    cur: &mut Vec<SignedRow>,
    out: &mut Vec<SignedDiagram>,
) -> Result<()> {
    if remaining == 0 {
        let d = SignedDiagram::new(group, cur.clone());
        if validate_diagram(&d).valid {
            if out.len() >= cap {
                return Err(Error::CapExceeded(format!("more than {cap} diagrams for {group}")));
            }
            out.push(d);
        }
        return Ok(());
    }
    for (i, row) in kinds.iter().enumerate().skip(start) {
        if row.len > remaining {
            continue;
        }
        let next = (used.0 + row.plus_count(), used.1 + row.minus_count());
        if let Some((p, q)) = sig {
            if next.0 > p || next.1 > q {
                continue;
            }
        }
        cur.push(*row);
        search(group, kinds, i, remaining - row.len, next, sig, cap, cur, out)?;
        cur.pop();
    }
    Ok(())
}

/// Adds one box to the right end of every row, then appends singletons to reach the signature of G.
pub fn theta_lift_diagram(pair: &DualPair, d: &SignedDiagram) -> Result<SignedDiagram> {
    let small = pair.small_group();
    if d.group() != small {
        return Err(Error::InvalidInput(format!(
            "diagram belongs to {}, expected {}",
            d.group(),
            small
        )));
    }
    let check = validate_diagram(d);
    if !check.valid {
        let msgs: Vec<String> = check.violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::InvalidInput(format!("{d} is not valid: {}", msgs.join("; "))));
    }
    let large = pair.large_group();
    let mut rows: Vec<SignedRow> = d.rows().iter().map(SignedRow::extended).collect();
    let (plus, minus) = rows
        .iter()
        .fold((0, 0), |(a, b), r| (a + r.plus_count(), b + r.minus_count()));
    let (p, q) = large.signature().expect("large members carry a signature");
    if plus > p || minus > q {
        return Err(Error::LiftInfeasible(format!(
            "extended rows of {d} use ({plus},{minus}) boxes, more than ({p},{q})"
        )));
    }
    rows.extend(std::iter::repeat_n(SignedRow::new(1, Sign::Plus), p - plus));
    rows.extend(std::iter::repeat_n(SignedRow::new(1, Sign::Minus), q - minus));
    let lifted = SignedDiagram::new(large, rows);
    let check = validate_diagram(&lifted);
    if !check.valid {
        return Err(Error::LiftInfeasible(format!("{lifted} fails validation for {large}")));
    }
    Ok(lifted)
}

/// The zero orbit of the smaller member of `pair`.
pub fn zero_orbit(pair: &DualPair) -> SignedDiagram {
    let g = pair.small_group();
    let rows = match g {
        GroupTag::Sp2nR { n } => {
            let mut r = vec![SignedRow::new(1, Sign::Plus); n];
            r.extend(vec![SignedRow::new(1, Sign::Minus); n]);
            r
        }
        GroupTag::Umn { m, n } => {
            let mut r = vec![SignedRow::new(1, Sign::Plus); m];
            r.extend(vec![SignedRow::new(1, Sign::Minus); n]);
            r
        }
        GroupTag::OstarN { n } => vec![SignedRow::new(1, Sign::Plus); n],
        _ => unreachable!("small members are Sp(2n,R), U(m,n) or O*(2n)"),
    };
    SignedDiagram::new(g, rows)
}

/// The open orbit in the holomorphic part of s' for the smaller member.
///
/// For U(m,n) this requires m >= n.
pub fn regular_holomorphic_orbit(pair: &DualPair) -> Result<SignedDiagram> {
    let g = pair.small_group();
    let rows = match g {
        GroupTag::Sp2nR { n } => vec![SignedRow::new(2, Sign::Plus); n],
        GroupTag::Umn { m, n } => {
            if m < n {
                return Err(Error::InvalidInput(format!("regular orbit of U({m},{n}) needs m >= n")));
            }
            let mut r = vec![SignedRow::new(2, Sign::Plus); n];
            r.extend(vec![SignedRow::new(1, Sign::Plus); m - n]);
            r
        }
        GroupTag::OstarN { n } => {
            let mut r = vec![SignedRow::new(2, Sign::Plus); n / 2];
            if n % 2 == 1 {
                r.push(SignedRow::new(1, Sign::Plus));
            }
            r
        }
        _ => unreachable!("small members are Sp(2n,R), U(m,n) or O*(2n)"),
    };
    Ok(SignedDiagram::new(g, rows))
}
