use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::Cell;

/// A strictly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for StrictPartition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        StrictPartition::new(parts)
    }
}

impl From<StrictPartition> for Vec<usize> {
    fn from(p: StrictPartition) -> Self {
        p.parts
    }
}

impl StrictPartition {
    /// Trailing zeros are dropped; anything else must be strictly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let strict = parts.windows(2).all(|w| w[0] > w[1]) && !parts.contains(&0);
        if !strict {
            return Err(Error::NotStrict(parts));
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Length of the partition, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// 1-based part, 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &StrictPartition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= c.row && c.col < self.part(c.row) + c.row
    }

    /// Cells of the shifted diagram in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (k, &p) in self.parts.iter().enumerate() {
            let i = k + 1;
            out.extend((i..i + p).map(|j| Cell::new(i, j)));
        }
        out
    }

    /// Recovers the partition whose shifted diagram is exactly `cells`.
    pub fn from_cells(cells: &BTreeSet<Cell>) -> Option<StrictPartition> {
        let mut parts = Vec::new();
        let mut row = 1;
        loop {
            let len = (row..).take_while(|&j| cells.contains(&Cell::new(row, j))).count();
            if len == 0 {
                break;
            }
            parts.push(len);
            row += 1;
        }
        let p = StrictPartition::new(parts).ok()?;
        (p.size() == cells.len()).then_some(p)
    }

    /// All strict partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<StrictPartition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
            if rest == 0 {
                out.push(StrictPartition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All strict partitions contained in `self`, including `self` and the empty one.
    pub fn subpartitions(&self) -> Vec<StrictPartition> {
        fn go(outer: &[usize], k: usize, prev: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
            out.push(StrictPartition { parts: cur.clone() });
            if k == outer.len() {
                return;
            }
            let cap = outer[k].min(prev.saturating_sub(1));
            for p in 1..=cap {
                cur.push(p);
                go(outer, k + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.parts, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parses `4,3,1`, `(4,3,1)` or the empty string.
impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(StrictPartition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::NotStrict(Vec::new())))
            .collect::<Result<Vec<_>>>()?;
        StrictPartition::new(parts)
    }
}
