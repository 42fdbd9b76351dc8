//! Rectangular growth diagrams, the four standardisation variants of RSK and
//! a brute-force Greene oracle.
//!
//! Corner `(i, j)` has `i` cells to its left and `j` cells below it. The right
//! border read upward is `P`, the top border read left to right is `Q`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fillings::{ChainKind, Filling};
use crate::partitions::{intersection, union, Partition};
use crate::tableaux::{ChainMode, PartitionChain};

/// Which way entries sharing a row or a column are spread out before the
/// local rules run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RskVariant {
    /// Columns and rows as north-east chains.
    Rsk,
    /// Columns and rows as south-east chains (Burge).
    DualRskPrime,
    /// Columns north-east, rows south-east. 0-1 fillings only.
    DualRsk,
    /// Columns south-east, rows north-east. 0-1 fillings only.
    RskPrime,
}

impl RskVariant {
    pub const ALL: [RskVariant; 4] =
        [RskVariant::Rsk, RskVariant::DualRskPrime, RskVariant::DualRsk, RskVariant::RskPrime];

    pub fn name(self) -> &'static str {
        match self {
            RskVariant::Rsk => "rsk",
            RskVariant::DualRskPrime => "dual-rsk-prime",
            RskVariant::DualRsk => "dual-rsk",
            RskVariant::RskPrime => "rsk-prime",
        }
    }

    pub fn zero_one_only(self) -> bool {
        matches!(self, RskVariant::DualRsk | RskVariant::RskPrime)
    }

    /// Entries of one column become a north-east chain.
    pub(crate) fn columns_ne(self) -> bool {
        matches!(self, RskVariant::Rsk | RskVariant::DualRsk)
    }

    /// Entries of one row become a north-east chain.
    pub(crate) fn rows_ne(self) -> bool {
        matches!(self, RskVariant::Rsk | RskVariant::RskPrime)
    }

    /// Step mode of the right border chain.
    pub fn p_mode(self) -> ChainMode {
        if self.rows_ne() {
            ChainMode::HStrip
        } else {
            ChainMode::VStrip
        }
    }

    /// Step mode of the top border chain.
    pub fn q_mode(self) -> ChainMode {
        if self.columns_ne() {
            ChainMode::HStrip
        } else {
            ChainMode::VStrip
        }
    }

    /// The variant of the reflected filling (rows and columns swap roles).
    pub fn reflected(self) -> RskVariant {
        match self {
            RskVariant::DualRsk => RskVariant::RskPrime,
            RskVariant::RskPrime => RskVariant::DualRsk,
            v => v,
        }
    }

    /// The variant whose border chains are the transposes of this one's.
    pub fn conjugate(self) -> RskVariant {
        match self {
            RskVariant::Rsk => RskVariant::DualRskPrime,
            RskVariant::DualRskPrime => RskVariant::Rsk,
            RskVariant::DualRsk => RskVariant::RskPrime,
            RskVariant::RskPrime => RskVariant::DualRsk,
        }
    }

    pub fn check(self, m: &[Vec<u32>]) -> Result<()> {
        if self.zero_one_only() && m.iter().flatten().any(|&v| v > 1) {
            return Err(Error::Precondition(format!("{} needs a 0-1 filling", self.name())));
        }
        Ok(())
    }
}

impl fmt::Display for RskVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RskVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('_', "-").to_lowercase();
        RskVariant::ALL.into_iter().find(|v| v.name() == norm).ok_or_else(|| {
            Error::Parse(format!("unknown variant {s:?} (rsk, dual-rsk-prime, dual-rsk, rsk-prime)"))
        })
    }
}

fn single_step(a: &Partition, b: &Partition) -> bool {
    b.contains(a) && b.size() <= a.size() + 1
}

/// Forward local rule: `λ` bottom left, `μ` top left, `ν` bottom right;
/// returns `ρ` for the top right corner.
pub fn forward_rule(lambda: &Partition, mu: &Partition, nu: &Partition, cross: bool) -> Result<Partition> {
    if !single_step(lambda, mu) || !single_step(lambda, nu) {
        return Err(Error::Rule(format!(
            "{lambda} must be contained in {mu} and {nu} with at most one cell difference"
        )));
    }
    if cross {
        if lambda != mu || lambda != nu {
            return Err(Error::Rule("a cross needs λ = μ = ν".into()));
        }
        return lambda.bump(1, 1);
    }
    if mu != nu {
        return Ok(union(mu, nu));
    }
    if lambda == mu {
        return Ok(lambda.clone());
    }
    let i = lambda.first_difference(mu).expect("λ ⊊ μ");
    mu.bump(i + 1, 1)
}

/// Backward local rule: from `μ` top left, `ν` bottom right and `ρ` top
/// right, recovers `λ` and whether the square holds a cross.
pub fn backward_rule(mu: &Partition, nu: &Partition, rho: &Partition) -> Result<(Partition, bool)> {
    if !single_step(mu, rho) || !single_step(nu, rho) {
        return Err(Error::Rule(format!(
            "{mu} and {nu} must be contained in {rho} with at most one cell difference"
        )));
    }
    if mu != nu {
        return Ok((intersection(mu, nu), false));
    }
    if mu == rho {
        return Ok((rho.clone(), false));
    }
    let i = mu.first_difference(rho).expect("μ ⊊ ρ");
    if i == 1 {
        return Ok((mu.clone(), true));
    }
    Ok((mu.bump(i - 1, -1)?, false))
}

/// Labels of a block given its bottom and left borders; `bottom[0]` and
/// `left[0]` are the same corner. Returns `labels[i][j]`.
pub fn grow_block(
    bottom: &[Partition],
    left: &[Partition],
    cross: impl Fn(usize, usize) -> bool,
) -> Result<Vec<Vec<Partition>>> {
    let w = bottom.len() - 1;
    let h = left.len() - 1;
    let mut lab = vec![vec![Partition::empty(); h + 1]; w + 1];
    for (i, b) in bottom.iter().enumerate() {
        lab[i][0] = b.clone();
    }
    for (j, l) in left.iter().enumerate() {
        lab[0][j] = l.clone();
    }
    for i in 0..w {
        for j in 0..h {
            lab[i + 1][j + 1] = forward_rule(&lab[i][j], &lab[i][j + 1], &lab[i + 1][j], cross(i, j))?;
        }
    }
    Ok(lab)
}

/// Labels and crosses of a block from its top and right borders;
/// `top[w]` and `right[h]` are the same corner.
#[allow(clippy::type_complexity)]
pub fn backward_block(top: &[Partition], right: &[Partition]) -> Result<(Vec<Vec<Partition>>, Vec<Vec<bool>>)> {
    let w = top.len() - 1;
    let h = right.len() - 1;
    if top[w] != right[h] {
        return Err(Error::Chain(format!("borders end in {} and {}", top[w], right[h])));
    }
    let mut lab = vec![vec![Partition::empty(); h + 1]; w + 1];
    let mut crosses = vec![vec![false; h]; w];
    for (i, t) in top.iter().enumerate() {
        lab[i][h] = t.clone();
    }
    for (j, r) in right.iter().enumerate() {
        lab[w][j] = r.clone();
    }
    for i in (0..w).rev() {
        for j in (0..h).rev() {
            let (l, c) = backward_rule(&lab[i][j + 1], &lab[i + 1][j], &lab[i + 1][j + 1])
                .map_err(|e| Error::Rule(format!("square ({i}, {j}): {e}")))?;
            lab[i][j] = l;
            crosses[i][j] = c;
        }
    }
    Ok((lab, crosses))
}

/// A standardised matrix with the compartment offsets of every original
/// column and row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Standardized {
    /// `crosses[c][r]` in the expanded diagram.
    pub crosses: Vec<Vec<bool>>,
    /// First expanded column of original column `c`; `cx[w]` is the total.
    pub cx: Vec<usize>,
    /// First expanded row of original row `r`; `ry[h]` is the total.
    pub ry: Vec<usize>,
}

pub(crate) fn offsets(masses: impl Iterator<Item = u32>) -> Vec<usize> {
    let mut v = vec![0];
    for m in masses {
        v.push(v.last().unwrap() + m as usize);
    }
    v
}

/// Spreads every entry over distinct rows and columns according to `v`.
pub fn standardize_matrix(m: &[Vec<u32>], v: RskVariant) -> Result<Standardized> {
    v.check(m)?;
    let w = m.len();
    let h = m.first().map_or(0, Vec::len);
    let cx = offsets(m.iter().map(|c| c.iter().sum()));
    let ry = offsets((0..h).map(|r| m.iter().map(|c| c[r]).sum()));
    let n = cx[w];
    let mut col_of = HashMap::new();
    for (c, col) in m.iter().enumerate() {
        let mut units: Vec<(usize, u32)> = Vec::new();
        for (r, &e) in col.iter().enumerate() {
            units.extend((0..e).map(|t| (r, t)));
        }
        if !v.columns_ne() {
            units.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        }
        for (k, &(r, t)) in units.iter().enumerate() {
            col_of.insert((c, r, t), cx[c] + k);
        }
    }
    let mut crosses = vec![vec![false; n]; n];
    for r in 0..h {
        let units: Vec<(usize, u32)> =
            (0..w).flat_map(|c| (0..m[c][r]).map(move |t| (c, t))).collect();
        let nr = units.len();
        for (k, &(c, t)) in units.iter().enumerate() {
            let row = if v.rows_ne() { ry[r] + k } else { ry[r] + nr - 1 - k };
            crosses[col_of[&(c, r, t)]][row] = true;
        }
    }
    Ok(Standardized { crosses, cx, ry })
}

/// The standardised filling; empty rows and columns disappear.
pub fn standardize(f: &Filling, v: RskVariant) -> Result<Filling> {
    let s = standardize_matrix(&f.matrix()?, v)?;
    if s.crosses.is_empty() {
        return Err(Error::Filling("an empty filling standardises to an empty diagram".into()));
    }
    let m: Vec<Vec<u32>> = s.crosses.iter().map(|c| c.iter().map(|&b| u32::from(b)).collect()).collect();
    Filling::from_matrix(&m)
}

/// A growth diagram of a rectangular filling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthDiagram {
    pub width: usize,
    pub height: usize,
    pub variant: RskVariant,
    /// `labels[i][j]`: `i` columns to the left, `j` rows below.
    labels: Vec<Vec<Partition>>,
    filling: Vec<Vec<u32>>,
}

impl GrowthDiagram {
    /// Growth diagram of a partial filling.
    pub fn grow(f: &Filling) -> Result<Self> {
        if !f.is_partial() {
            return Err(Error::Precondition("plain growth needs a partial filling".into()));
        }
        Self::build(f, RskVariant::Rsk)
    }

    /// Growth diagram through standardisation with variant `v`.
    pub fn build(f: &Filling, v: RskVariant) -> Result<Self> {
        Self::from_matrix(&f.matrix()?, v)
    }

    pub fn from_matrix(m: &[Vec<u32>], v: RskVariant) -> Result<Self> {
        let s = standardize_matrix(m, v)?;
        let n = s.cx.last().copied().unwrap_or(0);
        let full = grow_block(&vec![Partition::empty(); n + 1], &vec![Partition::empty(); n + 1], |i, j| {
            s.crosses[i][j]
        })?;
        let labels = s
            .cx
            .iter()
            .map(|&i| s.ry.iter().map(|&j| full[i][j].clone()).collect())
            .collect();
        Ok(Self {
            width: m.len(),
            height: m.first().map_or(0, Vec::len),
            variant: v,
            labels,
            filling: m.to_vec(),
        })
    }

    pub fn label(&self, i: usize, j: usize) -> &Partition {
        &self.labels[i][j]
    }

    pub fn labels(&self) -> &[Vec<Partition>] {
        &self.labels
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.filling
    }

    /// Right border, bottom to top.
    pub fn p_chain(&self) -> PartitionChain {
        let seq = self.labels[self.width].clone();
        PartitionChain::new(seq, self.variant.p_mode()).expect("growth borders are valid chains")
    }

    /// Top border, left to right.
    pub fn q_chain(&self) -> PartitionChain {
        let seq = self.labels.iter().map(|c| c[self.height].clone()).collect();
        PartitionChain::new(seq, self.variant.q_mode()).expect("growth borders are valid chains")
    }

    pub fn shape(&self) -> &Partition {
        &self.labels[self.width][self.height]
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "width": self.width,
            "height": self.height,
            "variant": self.variant.name(),
            "filling": self.filling,
            "labels": self.labels.iter()
                .map(|c| c.iter().map(|p| p.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Shape at the top right corner.
pub fn shape_of_matrix(m: &[Vec<u32>], v: RskVariant) -> Result<Partition> {
    Ok(GrowthDiagram::from_matrix(m, v)?.shape().clone())
}

/// Reconstructs a partial filling from cell-mode border chains.
pub fn ungrow(p: &PartitionChain, q: &PartitionChain) -> Result<Filling> {
    let m = ungrow_matrix(p.seq(), q.seq())?;
    if m.is_empty() || m[0].is_empty() {
        return Err(Error::Chain("borders with no steps have no rectangle".into()));
    }
    Filling::from_matrix(&m)
}

fn ungrow_matrix(p: &[Partition], q: &[Partition]) -> Result<Vec<Vec<u32>>> {
    for (name, c) in [("P", p), ("Q", q)] {
        if !c.windows(2).all(|w| single_step(&w[0], &w[1])) || !c[0].is_empty() {
            return Err(Error::Chain(format!("{name} is not a chain of single-cell steps")));
        }
    }
    let (lab, crosses) = backward_block(q, p)?;
    if lab.iter().any(|c| !c[0].is_empty()) || lab[0].iter().any(|l| !l.is_empty()) {
        return Err(Error::Chain("incompatible chains: left or bottom border not empty".into()));
    }
    Ok(crosses.iter().map(|c| c.iter().map(|&b| u32::from(b)).collect()).collect())
}

/// The border chains `(P, Q)` of a rectangular filling under `v`.
pub fn rsk_correspond(f: &Filling, v: RskVariant) -> Result<(PartitionChain, PartitionChain)> {
    let g = GrowthDiagram::build(f, v)?;
    Ok((g.p_chain(), g.q_chain()))
}

/// Splits every step of `seq` into single cells in the order standardisation
/// adds them: horizontal strips left to right, vertical strips bottom to top.
pub(crate) fn expand_steps(seq: &[Partition], mode: ChainMode) -> Result<Vec<Partition>> {
    let mut out = vec![seq[0].clone()];
    for w in seq.windows(2) {
        if !mode.step_ok(&w[0], &w[1]) {
            return Err(Error::Chain(format!("{} to {} is not a {mode:?} step", w[0], w[1])));
        }
        let mut cells = w[1].skew_cells(&w[0]);
        match mode {
            ChainMode::VStrip => cells.sort_by_key(|&(r, col)| (r, col)),
            _ => cells.sort_by_key(|&(r, col)| (col, r)),
        }
        let mut cur = w[0].clone();
        for (r, _) in cells {
            cur = cur.bump(r, 1)?;
            out.push(cur.clone());
        }
    }
    Ok(out)
}

/// The filling whose border chains under `v` are `(P, Q)`.
pub fn rsk_invert(p: &PartitionChain, q: &PartitionChain, v: RskVariant) -> Result<Filling> {
    let m = rsk_invert_matrix(p, q, v)?;
    Filling::from_matrix(&m)
}

pub(crate) fn rsk_invert_matrix(p: &PartitionChain, q: &PartitionChain, v: RskVariant) -> Result<Vec<Vec<u32>>> {
    let (w, h) = (q.steps(), p.steps());
    if w == 0 || h == 0 {
        return Err(Error::Chain("borders with no steps have no rectangle".into()));
    }
    if p.last() != q.last() {
        return Err(Error::Chain(format!("P ends in {} but Q in {}", p.last(), q.last())));
    }
    let pe = expand_steps(p.seq(), v.p_mode())?;
    let qe = expand_steps(q.seq(), v.q_mode())?;
    let cross = ungrow_matrix(&pe, &qe)?;
    let cx = offsets(q.seq().windows(2).map(|s| s[1].size() - s[0].size()));
    let ry = offsets(p.seq().windows(2).map(|s| s[1].size() - s[0].size()));
    let mut m = vec![vec![0u32; h]; w];
    for (c, col) in m.iter_mut().enumerate() {
        for (r, e) in col.iter_mut().enumerate() {
            *e = (cx[c]..cx[c + 1])
                .map(|i| (ry[r]..ry[r + 1]).filter(|&j| cross[i][j] == 1).count() as u32)
                .sum();
        }
    }
    let check = v.check(&m).and_then(|_| standardize_matrix(&m, v));
    match check {
        Ok(s) if s.crosses.iter().zip(&cross).all(|(a, b)| a.iter().zip(b).all(|(&x, &y)| u32::from(x) == y)) => Ok(m),
        _ => Err(Error::Chain(format!("incompatible chains for {}", v.name()))),
    }
}

/// Default number of multiplicity units the oracle accepts.
pub const GREENE_CAP: usize = 12;

/// Largest size of a union of `k` chains of `kind` inside a rectangular
/// filling, by exhaustive search.
pub fn greene_oracle(f: &Filling, kind: ChainKind, k: usize) -> Result<u32> {
    greene_oracle_capped(f, kind, k, GREENE_CAP)
}

pub fn greene_oracle_capped(f: &Filling, kind: ChainKind, k: usize, cap: usize) -> Result<u32> {
    if kind.zero_one_only() && !f.is_zero_one() {
        return Err(Error::Precondition(format!("{kind}-chains need a 0-1 filling")));
    }
    // items: (cell, weight)
    let mut items: Vec<((i32, i32), u32)> = Vec::new();
    for (cell, v) in f.support() {
        if kind.multiset() {
            items.extend((0..v).map(|_| (cell, 1)));
        } else {
            items.push((cell, if kind.weighted() { v } else { 1 }));
        }
    }
    let units: u32 = if kind.multiset() { items.len() as u32 } else { f.total() };
    if units as usize > cap {
        return Err(Error::Cap(format!("{units} units exceed the oracle cap of {cap}")));
    }
    let north = kind.is_north();
    items.sort_by_key(|&((x, y), _)| (x, if north { y } else { -y }));
    let mut memo = HashMap::new();
    Ok(greene_rec(&items, kind, 0, vec![usize::MAX; k], &mut memo))
}

fn greene_rec(
    items: &[((i32, i32), u32)],
    kind: ChainKind,
    idx: usize,
    lasts: Vec<usize>,
    memo: &mut HashMap<(usize, Vec<usize>), u32>,
) -> u32 {
    if idx == items.len() || lasts.is_empty() {
        return 0;
    }
    if let Some(&v) = memo.get(&(idx, lasts.clone())) {
        return v;
    }
    let mut best = greene_rec(items, kind, idx + 1, lasts.clone(), memo);
    let mut tried_empty = false;
    for c in 0..lasts.len() {
        let ok = if lasts[c] == usize::MAX {
            // all empty chains are interchangeable
            !std::mem::replace(&mut tried_empty, true)
        } else {
            kind.follows(items[lasts[c]].0, items[idx].0)
        };
        if ok {
            let mut next = lasts.clone();
            next[c] = idx;
            next.sort_unstable();
            best = best.max(items[idx].1 + greene_rec(items, kind, idx + 1, next, memo));
        }
    }
    memo.insert((idx, lasts), best);
    best
}
