//! Partition chains, their tableau views, jeu de taquin, promotion and
//! evacuation.
//!
//! Every operation exists twice: once on chains (local rules) and, for jeu de
//! taquin, once as the classical sliding algorithm on tableaux. Each is the
//! other's oracle.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{relation, Partition, Relation, StripClass};

/// Which skews are allowed between consecutive partitions of a chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainMode {
    /// At most one cell per step.
    Cell,
    /// Each step is a horizontal strip.
    HStrip,
    /// Each step is a vertical strip.
    VStrip,
}

impl ChainMode {
    pub fn allows(self, class: StripClass) -> bool {
        match self {
            ChainMode::Cell => class.is_cell(),
            ChainMode::HStrip => class.is_horizontal(),
            ChainMode::VStrip => class.is_vertical(),
        }
    }

    pub fn transpose(self) -> ChainMode {
        match self {
            ChainMode::Cell => ChainMode::Cell,
            ChainMode::HStrip => ChainMode::VStrip,
            ChainMode::VStrip => ChainMode::HStrip,
        }
    }

    /// True if `a ⊆ b` and `b / a` is a legal step.
    pub fn step_ok(self, a: &Partition, b: &Partition) -> bool {
        match relation(a, b) {
            Relation::Contained(c) => self.allows(c),
            Relation::NotContained => false,
        }
    }
}

impl FromStr for ChainMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cell" => Ok(ChainMode::Cell),
            "hstrip" => Ok(ChainMode::HStrip),
            "vstrip" => Ok(ChainMode::VStrip),
            _ => Err(Error::Parse(format!("unknown chain mode {s:?} (cell, hstrip, vstrip)"))),
        }
    }
}

/// A weakly increasing sequence of partitions starting at ∅.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionChain {
    seq: Vec<Partition>,
    mode: ChainMode,
}

impl PartitionChain {
    pub fn new(seq: Vec<Partition>, mode: ChainMode) -> Result<Self> {
        match seq.first() {
            None => return Err(Error::Chain("a chain has at least the partition ∅".into())),
            Some(first) if !first.is_empty() => {
                return Err(Error::Chain(format!("chain starts at {first}, not ∅")))
            }
            _ => {}
        }
        for (i, w) in seq.windows(2).enumerate() {
            if !mode.step_ok(&w[0], &w[1]) {
                return Err(Error::Chain(format!(
                    "step {} from {} to {} is not a {:?} step",
                    i + 1,
                    w[0],
                    w[1],
                    mode
                )));
            }
        }
        Ok(Self { seq, mode })
    }

    /// Parses partitions separated by whitespace or newlines, e.g. `- 1 2 21`.
    pub fn parse(s: &str, mode: ChainMode) -> Result<Self> {
        let seq = s
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Partition>>>()?;
        Self::new(seq, mode)
    }

    pub fn seq(&self) -> &[Partition] {
        &self.seq
    }

    pub fn mode(&self) -> ChainMode {
        self.mode
    }

    /// Number of steps.
    pub fn steps(&self) -> usize {
        self.seq.len() - 1
    }

    pub fn last(&self) -> &Partition {
        self.seq.last().expect("chains are non-empty")
    }

    pub fn get(&self, i: usize) -> &Partition {
        &self.seq[i]
    }

    /// The first `k + 1` partitions.
    pub fn prefix(&self, k: usize) -> PartitionChain {
        Self { seq: self.seq[..=k].to_vec(), mode: self.mode }
    }

    pub fn transpose(&self) -> PartitionChain {
        Self {
            seq: self.seq.iter().map(Partition::transpose).collect(),
            mode: self.mode.transpose(),
        }
    }

    /// Same partitions, another mode. Fails if a step violates it.
    pub fn with_mode(&self, mode: ChainMode) -> Result<PartitionChain> {
        Self::new(self.seq.clone(), mode)
    }

    /// One partition per line.
    pub fn to_lines(&self) -> String {
        self.seq.iter().map(|p| format!("{p}\n")).collect()
    }
}

impl fmt::Display for PartitionChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.seq.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableauKind {
    Standard,
    Partial,
    Semistandard,
    TransposedSemistandard,
}

/// A tableau in French notation: `rows[0]` is the bottom row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
    kind: TableauKind,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>, kind: TableauKind) -> Result<Self> {
        let mut rows = rows;
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let t = Self { rows, kind };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Tableau(m));
        for w in self.rows.windows(2) {
            if w[0].len() < w[1].len() {
                return bad("row lengths increase upward".into());
            }
        }
        if self.rows.iter().any(|r| r.is_empty()) {
            return bad("empty row below a non-empty row".into());
        }
        if self.rows.iter().flatten().any(|&e| e == 0) {
            return bad("entries are positive".into());
        }
        let (row_strict, col_strict) = match self.kind {
            TableauKind::Standard | TableauKind::Partial => (true, true),
            TableauKind::Semistandard => (false, true),
            TableauKind::TransposedSemistandard => (true, false),
        };
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if j + 1 < row.len() {
                    let r = row[j + 1];
                    if r < e || (row_strict && r == e) {
                        return bad(format!("row {} not increasing at column {}", i + 1, j + 1));
                    }
                }
                if let Some(&u) = self.rows.get(i + 1).and_then(|up| up.get(j)) {
                    if u < e || (col_strict && u == e) {
                        return bad(format!("column {} not increasing at row {}", j + 1, i + 1));
                    }
                }
            }
        }
        if matches!(self.kind, TableauKind::Standard | TableauKind::Partial) {
            let mut all: Vec<u32> = self.rows.iter().flatten().copied().collect();
            all.sort_unstable();
            if all.windows(2).any(|w| w[0] == w[1]) {
                return bad("repeated entry".into());
            }
            if self.kind == TableauKind::Standard
                && all.iter().enumerate().any(|(i, &e)| e as usize != i + 1)
            {
                return bad("entries of a standard tableau are 1..n".into());
            }
        }
        Ok(())
    }

    /// Parses one row per line, bottom row first, entries separated by spaces.
    pub fn parse(s: &str, kind: TableauKind) -> Result<Self> {
        let mut rows = Vec::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
                .collect::<Result<Vec<u32>>>()?;
            rows.push(row);
        }
        Self::new(rows, kind)
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn kind(&self) -> TableauKind {
        self.kind
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn transpose(&self) -> Tableau {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width)
            .map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect())
            .collect();
        let kind = match self.kind {
            TableauKind::Semistandard => TableauKind::TransposedSemistandard,
            TableauKind::TransposedSemistandard => TableauKind::Semistandard,
            k => k,
        };
        Tableau { rows, kind }
    }

    /// The chain with `steps` steps (at least the largest entry).
    pub fn to_chain_len(&self, steps: usize) -> PartitionChain {
        let n = steps.max(self.max_entry() as usize);
        let seq = (0..=n)
            .map(|i| {
                Partition::from_unsorted(
                    self.rows
                        .iter()
                        .map(|r| r.iter().filter(|&&e| e as usize <= i).count() as u32)
                        .collect(),
                )
            })
            .collect();
        let mode = match self.kind {
            TableauKind::Standard | TableauKind::Partial => ChainMode::Cell,
            TableauKind::Semistandard => ChainMode::HStrip,
            TableauKind::TransposedSemistandard => ChainMode::VStrip,
        };
        PartitionChain { seq, mode }
    }

    /// Rows bottom to top, one per line.
    pub fn to_lines(&self) -> String {
        self.rows
            .iter()
            .map(|r| {
                let s: Vec<String> = r.iter().map(u32::to_string).collect();
                s.join(" ") + "\n"
            })
            .collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

/// Entry `i` fills the cells of `seq[i] / seq[i-1]`.
pub fn chain_to_tableau(c: &PartitionChain) -> Tableau {
    let last = c.last();
    let mut rows: Vec<Vec<u32>> = last.parts().iter().map(|&p| vec![0; p as usize]).collect();
    for (i, w) in c.seq.windows(2).enumerate() {
        for (r, col) in w[1].skew_cells(&w[0]) {
            rows[r - 1][col - 1] = i as u32 + 1;
        }
    }
    let kind = match c.mode {
        ChainMode::Cell => {
            if c.seq.windows(2).all(|w| w[1].size() == w[0].size() + 1) {
                TableauKind::Standard
            } else {
                TableauKind::Partial
            }
        }
        ChainMode::HStrip => TableauKind::Semistandard,
        ChainMode::VStrip => TableauKind::TransposedSemistandard,
    };
    Tableau { rows, kind }
}

/// The chain of `t` with as many steps as its largest entry.
pub fn tableau_to_chain(t: &Tableau) -> PartitionChain {
    t.to_chain_len(0)
}

fn empty_chain_error() -> Error {
    Error::Chain("jeu de taquin needs at least one step".into())
}

/// One square of the cell-mode jeu de taquin growth: `c ⊆ a ⊆ b`, returns `d`.
fn jdt_cell_square(c: &Partition, a: &Partition, b: &Partition) -> Partition {
    if a == b {
        return c.clone();
    }
    let candidates: Vec<Partition> = c
        .outer_corners()
        .into_iter()
        .filter(|x| b.contains(x))
        .collect();
    match candidates.as_slice() {
        [only] => only.clone(),
        _ => candidates
            .into_iter()
            .find(|x| x != a)
            .expect("two partitions lie between c and b"),
    }
}

/// One square of the horizontal-strip growth, by red/green recolouring.
fn jdt_hstrip_square(c: &Partition, a: &Partition, b: &Partition) -> Partition {
    if a == b {
        return c.clone();
    }
    let rows = b.len();
    let mut green = vec![0u32; rows + 1];
    // green cells b/a, red cells a/c; a column holds at most one of each
    let mut green_cols = std::collections::HashMap::new();
    for (r, col) in b.skew_cells(a) {
        green_cols.insert(col, r);
    }
    let mut red_cols = std::collections::HashMap::new();
    for (r, col) in a.skew_cells(c) {
        red_cols.insert(col, r);
    }
    for (&col, &r) in &green_cols {
        if !red_cols.contains_key(&col) {
            green[r] += 1;
        }
    }
    for (&col, &r) in &red_cols {
        if green_cols.contains_key(&col) {
            green[r] += 1;
        }
    }
    Partition::from_unsorted((1..=rows).map(|r| c.part(r) + green[r]).collect())
}

fn jdt_square(mode: ChainMode, c: &Partition, a: &Partition, b: &Partition) -> Partition {
    match mode {
        ChainMode::Cell => jdt_cell_square(c, a, b),
        ChainMode::HStrip => jdt_hstrip_square(c, a, b),
        ChainMode::VStrip => {
            jdt_hstrip_square(&c.transpose(), &a.transpose(), &b.transpose()).transpose()
        }
    }
}

/// Jeu de taquin on a chain: drops the entries equal to 1 and slides.
pub fn jdt_chain(c: &PartitionChain) -> Result<PartitionChain> {
    let n = c.steps();
    if n == 0 {
        return Err(empty_chain_error());
    }
    let lam = &c.seq;
    if lam[1].is_empty() {
        return Ok(PartitionChain { seq: lam[1..].to_vec(), mode: c.mode });
    }
    let mut mu = Vec::with_capacity(n);
    mu.push(Partition::empty());
    for i in 1..n {
        let d = jdt_square(c.mode, &mu[i - 1], &lam[i], &lam[i + 1]);
        mu.push(d);
    }
    Ok(PartitionChain { seq: mu, mode: c.mode })
}

/// Jeu de taquin by sliding cells. Standard, partial and semistandard
/// tableaux slide directly; transposed ones via the transpose.
pub fn jdt_slide(t: &Tableau) -> Tableau {
    match t.kind {
        TableauKind::TransposedSemistandard => {
            return jdt_slide(&t.transpose()).transpose();
        }
        TableauKind::Standard | TableauKind::Partial | TableauKind::Semistandard => {}
    }
    // None marks the empty cell being moved.
    let mut rows: Vec<Vec<Option<u32>>> = t
        .rows
        .iter()
        .map(|r| r.iter().map(|&e| Some(e - 1)).collect())
        .collect();
    let mut holes: Vec<(usize, usize)> = Vec::new();
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            if *cell == Some(0) {
                *cell = None;
                holes.push((i, j));
            }
        }
    }
    // rightmost hole first; for a horizontal strip that is also the lowest
    holes.sort_by(|a, b| b.1.cmp(&a.1));
    for (mut i, mut j) in holes {
        loop {
            let right = rows[i].get(j + 1).copied();
            let up = rows.get(i + 1).and_then(|r| r.get(j)).copied();
            let go_up = match (right, up) {
                (None, None) => {
                    rows[i].pop();
                    break;
                }
                (Some(_), None) => false,
                (None, Some(_)) => true,
                (Some(r), Some(u)) => u <= r,
            };
            if go_up {
                rows[i][j] = rows[i + 1][j];
                rows[i + 1][j] = None;
                i += 1;
            } else {
                rows[i][j] = rows[i][j + 1];
                rows[i][j + 1] = None;
                j += 1;
            }
        }
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
    }
    let rows = rows
        .into_iter()
        .map(|r| r.into_iter().map(|e| e.expect("holes left the tableau")).collect())
        .collect();
    Tableau { rows, kind: t.kind }
}

/// Promotion: jeu de taquin followed by the final partition again.
pub fn promotion(c: &PartitionChain) -> Result<PartitionChain> {
    let mut out = jdt_chain(c)?;
    out.seq.push(c.last().clone());
    Ok(out)
}

/// The unique chain whose promotion is `d`.
pub fn promotion_inverse(d: &PartitionChain) -> Result<PartitionChain> {
    let n = d.steps();
    if n == 0 {
        return Ok(d.clone());
    }
    let seq = &d.seq;
    if seq[n] == seq[n - 1] {
        let mut pre = vec![Partition::empty()];
        pre.extend_from_slice(&seq[..n]);
        return Ok(PartitionChain { seq: pre, mode: d.mode });
    }
    let r = seq[n].size() - seq[n - 1].size();
    let mut lam = vec![Partition::empty(); n + 1];
    lam[n] = seq[n].clone();
    if !preimage_search(d.mode, &seq[..n], r, n - 1, &mut lam) {
        return Err(Error::Chain(format!("{d} has no promotion preimage")));
    }
    let out = PartitionChain { seq: lam, mode: d.mode };
    debug_assert_eq!(promotion(&out).as_ref(), Ok(d));
    Ok(out)
}

/// Fills `lam[1..=i]` from the top down so that the jdt squares reproduce `mu`.
fn preimage_search(
    mode: ChainMode,
    mu: &[Partition],
    r: u32,
    i: usize,
    lam: &mut Vec<Partition>,
) -> bool {
    if i == 0 {
        return true;
    }
    let c = &mu[i - 1];
    let b = lam[i + 1].clone();
    for a in Partition::interval(c, &b) {
        if a.size() != c.size() + r || !mode.step_ok(c, &a) || !mode.step_ok(&a, &b) {
            continue;
        }
        if i == 1 && a.is_empty() {
            continue;
        }
        if jdt_square(mode, c, &a, &b) != mu[i] {
            continue;
        }
        lam[i] = a;
        if preimage_search(mode, mu, r, i - 1, lam) {
            return true;
        }
    }
    false
}

/// Evacuation: the partition `n - i` is the last partition of `jdt^i`.
pub fn evacuation(c: &PartitionChain) -> Result<PartitionChain> {
    let n = c.steps();
    let mut seq = vec![Partition::empty(); n + 1];
    seq[n] = c.last().clone();
    let mut cur = c.clone();
    for i in 1..=n {
        cur = jdt_chain(&cur)?;
        seq[n - i] = cur.last().clone();
    }
    PartitionChain::new(seq, c.mode)
}

/// Every cell-mode chain with `steps` steps and at most one cell per step.
pub fn all_cell_chains(steps: usize) -> Vec<PartitionChain> {
    let mut out = Vec::new();
    let mut cur = vec![Partition::empty()];
    fn rec(steps: usize, cur: &mut Vec<Partition>, out: &mut Vec<PartitionChain>) {
        if cur.len() == steps + 1 {
            out.push(PartitionChain { seq: cur.clone(), mode: ChainMode::Cell });
            return;
        }
        let last = cur.last().unwrap().clone();
        let mut next = vec![last.clone()];
        next.extend(last.outer_corners());
        for p in next {
            cur.push(p);
            rec(steps, cur, out);
            cur.pop();
        }
    }
    rec(steps, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::p;

    fn chain(s: &str, mode: ChainMode) -> PartitionChain {
        PartitionChain::parse(s, mode).unwrap()
    }

    #[test]
    fn right_border_gives_insertion_tableau() {
        let c = chain("- 1 2 21 31 311 3111 3211 4211", ChainMode::Cell);
        let t = chain_to_tableau(&c);
        assert_eq!(t.rows(), &[vec![1, 2, 4, 8], vec![3, 7], vec![5], vec![6]]);
        assert_eq!(t.kind(), TableauKind::Standard);
        assert_eq!(tableau_to_chain(&t), c);
    }

    #[test]
    fn hstrip_chain_to_semistandard() {
        let c = chain("- 4 51", ChainMode::HStrip);
        let t = chain_to_tableau(&c);
        assert_eq!(t.rows(), &[vec![1, 1, 1, 1, 2], vec![2]]);
        let c = chain("- 3 4 51", ChainMode::HStrip);
        assert_eq!(chain_to_tableau(&c).rows(), &[vec![1, 1, 1, 2, 3], vec![3]]);
    }

    #[test]
    fn small_tableaux() {
        let one = chain_to_tableau(&chain("- 1", ChainMode::Cell));
        assert_eq!(one.rows(), &[vec![1]]);
        let row = Tableau::new(vec![vec![1, 2, 3]], TableauKind::Standard).unwrap();
        assert_eq!(tableau_to_chain(&row), chain("- 1 2 3", ChainMode::Cell));
        let empty = Tableau::new(vec![], TableauKind::Standard).unwrap();
        assert_eq!(tableau_to_chain(&empty).steps(), 0);
    }

    #[test]
    fn tableau_validation() {
        assert!(Tableau::new(vec![vec![1, 1]], TableauKind::Semistandard).is_ok());
        assert!(Tableau::new(vec![vec![1, 1]], TableauKind::Partial).is_err());
        assert!(Tableau::new(vec![vec![1], vec![1]], TableauKind::Semistandard).is_err());
        assert!(Tableau::new(vec![vec![1], vec![1]], TableauKind::TransposedSemistandard).is_ok());
        assert!(Tableau::new(vec![vec![1, 3]], TableauKind::Standard).is_err());
        assert!(Tableau::new(vec![vec![2], vec![1]], TableauKind::Partial).is_err());
    }

    #[test]
    fn jdt_worked_chain() {
        let c = chain("- 1 2 21 211 211 311 321 3211 3311", ChainMode::Cell);
        let j = jdt_chain(&c).unwrap();
        assert_eq!(j, chain("- 1 11 111 111 211 221 2211 3211", ChainMode::Cell));
        let pr = promotion(&c).unwrap();
        assert_eq!(pr, chain("- 1 11 111 111 211 221 2211 3211 3311", ChainMode::Cell));
        assert_eq!(promotion_inverse(&pr).unwrap(), c);
    }

    #[test]
    fn jdt_small_cases() {
        let shifted = jdt_chain(&chain("- - 1 2", ChainMode::Cell)).unwrap();
        assert_eq!(shifted, chain("- 1 2", ChainMode::Cell));
        let col = jdt_chain(&chain("- 1 11 111", ChainMode::Cell)).unwrap();
        assert_eq!(col, chain("- 1 11", ChainMode::Cell));
        assert!(jdt_chain(&chain("-", ChainMode::Cell)).is_err());
    }

    #[test]
    fn promotion_of_recording_chain() {
        let q = chain("- 1 11 21 211 311 411 421 4211", ChainMode::Cell);
        let expected = chain("- 1 2 21 31 41 42 421 4211", ChainMode::Cell);
        assert_eq!(promotion(&q).unwrap(), expected);
        assert_eq!(promotion_inverse(&expected).unwrap(), q);
        let single = chain("- 1", ChainMode::Cell);
        assert_eq!(promotion(&single).unwrap(), single);
        assert_eq!(promotion_inverse(&single).unwrap(), single);
    }

    #[test]
    fn slide_examples() {
        let c = chain("- 1 2 21 211 211 311 321 3211 3311", ChainMode::Cell);
        let t = chain_to_tableau(&c);
        let s = jdt_slide(&t);
        assert_eq!(s.to_chain_len(8), jdt_chain(&c).unwrap());
        let col = Tableau::new(vec![vec![1], vec![2], vec![3]], TableauKind::Standard).unwrap();
        assert_eq!(jdt_slide(&col).rows(), &[vec![1], vec![2]]);
        let shifted = Tableau::new(vec![vec![2, 4], vec![3]], TableauKind::Partial).unwrap();
        assert_eq!(jdt_slide(&shifted).rows(), &[vec![1, 3], vec![2]]);
    }

    #[test]
    fn evacuation_small() {
        for s in ["- 1", "- 1 2", "- 1 11"] {
            let c = chain(s, ChainMode::Cell);
            assert_eq!(evacuation(&c).unwrap(), c);
        }
        let q = chain("- 1 11 21 211 311 411 421 4211", ChainMode::Cell);
        let e = evacuation(&q).unwrap();
        assert_eq!(e.last(), &p("4211"));
        assert_eq!(evacuation(&e).unwrap(), q);
    }

    #[test]
    fn cell_chains_exhaustive() {
        for n in 0..=6 {
            for c in all_cell_chains(n) {
                if n > 0 {
                    let pr = promotion(&c).unwrap();
                    assert_eq!(pr.last(), c.last());
                    assert_eq!(promotion_inverse(&pr).unwrap(), c, "{c}");
                    let j = jdt_chain(&c).unwrap();
                    let t = chain_to_tableau(&c);
                    assert_eq!(jdt_slide(&t).to_chain_len(n - 1), j, "{c}");
                }
                assert_eq!(evacuation(&evacuation(&c).unwrap()).unwrap(), c, "{c}");
            }
        }
    }

    #[test]
    fn strip_chains_keep_mode() {
        let c = chain("- 2 31 331", ChainMode::HStrip);
        let j = jdt_chain(&c).unwrap();
        assert_eq!(j.mode(), ChainMode::HStrip);
        assert_eq!(promotion_inverse(&promotion(&c).unwrap()).unwrap(), c);
        let v = c.transpose();
        assert_eq!(jdt_chain(&v).unwrap(), j.transpose());
        assert_eq!(promotion_inverse(&promotion(&v).unwrap()).unwrap(), v);
    }

    #[test]
    fn chain_validation() {
        assert!(PartitionChain::parse("- 2", ChainMode::Cell).is_err());
        assert!(PartitionChain::parse("- 2", ChainMode::HStrip).is_ok());
        assert!(PartitionChain::parse("- 11", ChainMode::HStrip).is_err());
        assert!(PartitionChain::parse("1 2", ChainMode::HStrip).is_err());
        assert!(PartitionChain::parse("- 2 1", ChainMode::HStrip).is_err());
    }
}
