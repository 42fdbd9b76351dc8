//! Integer partitions in French convention: part `i` is the length of row `i`
//! counted from the bottom.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts. The empty list is ∅.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

/// How `b / a` looks when `a ⊆ b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StripClass {
    /// `a == b`.
    Equal,
    SingleCell,
    HorizontalStrip,
    VerticalStrip,
    /// At most one cell per row and per column, more than one cell.
    Both,
    Neither,
}

/// Outcome of [`relation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "relation", content = "strip")]
pub enum Relation {
    NotContained,
    Contained(StripClass),
}

impl StripClass {
    pub fn is_horizontal(self) -> bool {
        matches!(self, Self::Equal | Self::SingleCell | Self::HorizontalStrip | Self::Both)
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, Self::Equal | Self::SingleCell | Self::VerticalStrip | Self::Both)
    }

    /// At most one cell added.
    pub fn is_cell(self) -> bool {
        matches!(self, Self::Equal | Self::SingleCell)
    }
}

impl Partition {
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Builds a partition, rejecting parts that increase. Zero parts are
    /// allowed only at the end and are dropped.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for (i, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::Shape(format!(
                    "parts {} and {} increase ({} < {})",
                    i + 1,
                    i + 2,
                    w[0],
                    w[1]
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::Shape("zero part before a positive part".into()));
        }
        Ok(Self { parts })
    }

    /// Like [`Partition::new`] but sorts the parts first.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part `i`, 1-based, with missing parts read as 0.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Sum of the first `k` parts.
    pub fn partial_sum(&self, k: usize) -> u32 {
        self.parts.iter().take(k).sum()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        self.part(row) as usize >= col
    }

    /// Cells `(row, col)`, both 1-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |c| (i + 1, c)))
    }

    /// Cells of `self / inner`, row by row, left to right.
    pub fn skew_cells(&self, inner: &Partition) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &p) in self.parts.iter().enumerate() {
            let q = inner.part(i + 1);
            for c in q + 1..=p {
                out.push((i + 1, c as usize));
            }
        }
        out
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Adds `delta` (±1) to part `k` (1-based).
    pub fn bump(&self, k: usize, delta: i32) -> Result<Partition> {
        if k == 0 {
            return Err(Error::Shape("row index is 1-based".into()));
        }
        let mut parts = self.parts.clone();
        match delta {
            1 => {
                if k > parts.len() + 1 {
                    return Err(Error::Shape(format!(
                        "cannot add to part {k}: part {} is 0",
                        k - 1
                    )));
                }
                if k == parts.len() + 1 {
                    parts.push(1);
                } else {
                    parts[k - 1] += 1;
                }
                if k >= 2 && parts[k - 2] < parts[k - 1] {
                    return Err(Error::Shape(format!(
                        "adding to part {k} makes it exceed part {}",
                        k - 1
                    )));
                }
            }
            -1 => {
                if k > parts.len() {
                    return Err(Error::Shape(format!("part {k} is absent")));
                }
                parts[k - 1] -= 1;
                if k < parts.len() && parts[k - 1] < parts[k] {
                    return Err(Error::Shape(format!(
                        "removing from part {k} makes it smaller than part {}",
                        k + 1
                    )));
                }
                if parts[k - 1] == 0 {
                    parts.pop();
                }
            }
            _ => return Err(Error::Shape(format!("delta must be +1 or -1, got {delta}"))),
        }
        Ok(Partition { parts })
    }

    /// Adds one cell in row `k` (1-based) if the result is a partition.
    pub fn add_cell(&self, k: usize) -> Option<Partition> {
        self.bump(k, 1).ok()
    }

    /// Removes one cell from row `k` if the result is a partition.
    pub fn remove_cell(&self, k: usize) -> Option<Partition> {
        self.bump(k, -1).ok()
    }

    /// All partitions obtained by adding one cell.
    pub fn outer_corners(&self) -> Vec<Partition> {
        (1..=self.len() + 1).filter_map(|k| self.add_cell(k)).collect()
    }

    /// All partitions obtained by removing one cell.
    pub fn inner_corners(&self) -> Vec<Partition> {
        (1..=self.len()).filter_map(|k| self.remove_cell(k)).collect()
    }

    /// Index (1-based) of the first part where `self` and `other` differ.
    pub fn first_difference(&self, other: &Partition) -> Option<usize> {
        let n = self.len().max(other.len());
        (1..=n).find(|&i| self.part(i) != other.part(i))
    }

    /// Every partition `p` with `lower ⊆ p ⊆ upper`.
    pub fn interval(lower: &Partition, upper: &Partition) -> Vec<Partition> {
        let mut out = Vec::new();
        if !upper.contains(lower) {
            return out;
        }
        let mut cur = Vec::with_capacity(upper.len());
        interval_rec(lower, upper, 1, u32::MAX, &mut cur, &mut out);
        out
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        size_rec(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of size at most `n`.
    pub fn all_up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Self::all_of_size).collect()
    }
}

fn interval_rec(
    lower: &Partition,
    upper: &Partition,
    i: usize,
    cap: u32,
    cur: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if i > upper.len() {
        out.push(Partition::from_unsorted(cur.clone()));
        return;
    }
    let lo = lower.part(i);
    let hi = upper.part(i).min(cap);
    if lo > hi {
        return;
    }
    for v in lo..=hi {
        cur.push(v);
        interval_rec(lower, upper, i + 1, v, cur, out);
        cur.pop();
    }
}

fn size_rec(rest: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=rest.min(cap)).rev() {
        cur.push(p);
        size_rec(rest - p, p, cur, out);
        cur.pop();
    }
}

/// Pointwise maximum.
pub fn union(a: &Partition, b: &Partition) -> Partition {
    let n = a.len().max(b.len());
    Partition { parts: (1..=n).map(|i| a.part(i).max(b.part(i))).collect() }
}

/// Pointwise minimum.
pub fn intersection(a: &Partition, b: &Partition) -> Partition {
    let n = a.len().min(b.len());
    Partition { parts: (1..=n).map(|i| a.part(i).min(b.part(i))).collect() }
}

pub fn transpose(a: &Partition) -> Partition {
    a.transpose()
}

/// Containment of `a` in `b` and the shape of `b / a`.
pub fn relation(a: &Partition, b: &Partition) -> Relation {
    if !b.contains(a) {
        return Relation::NotContained;
    }
    let cells = b.skew_cells(a);
    let class = match cells.len() {
        0 => StripClass::Equal,
        1 => StripClass::SingleCell,
        _ => {
            let mut rows: Vec<usize> = cells.iter().map(|c| c.0).collect();
            let mut cols: Vec<usize> = cells.iter().map(|c| c.1).collect();
            rows.sort_unstable();
            cols.sort_unstable();
            let distinct_rows = rows.windows(2).all(|w| w[0] != w[1]);
            let distinct_cols = cols.windows(2).all(|w| w[0] != w[1]);
            match (distinct_cols, distinct_rows) {
                (true, true) => StripClass::Both,
                (true, false) => StripClass::HorizontalStrip,
                (false, true) => StripClass::VerticalStrip,
                (false, false) => StripClass::Neither,
            }
        }
    };
    Relation::Contained(class)
}

/// Adds `delta` to part `k` (1-based).
pub fn bump(a: &Partition, k: usize, delta: i32) -> Result<Partition> {
    a.bump(k, delta)
}

impl PartialOrd<Partition> for Vec<u32> {
    fn partial_cmp(&self, other: &Partition) -> Option<Ordering> {
        self.as_slice().partial_cmp(other.parts())
    }
}

impl PartialEq<Partition> for Vec<u32> {
    fn eq(&self, other: &Partition) -> bool {
        self.as_slice() == other.parts()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `-` or `∅` for the empty partition, comma-separated parts, or a
    /// bare digit string such as `4211` when every part is a single digit.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<u32>, _> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<u32>()).collect()
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or(()))
                .collect::<std::result::Result<Vec<u32>, ()>>()
                .map_err(|_| "x".parse::<u32>().unwrap_err())
        };
        let parts = parts.map_err(|_| Error::Parse(format!("not a partition: {s:?}")))?;
        Partition::new(parts)
    }
}

/// Shorthand used throughout the tests and examples: `p("4211")`, `p("-")`.
pub fn p(s: &str) -> Partition {
    s.parse().unwrap_or_else(|e| panic!("bad partition literal {s:?}: {e}"))
}
