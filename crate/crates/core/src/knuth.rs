//! Knuth and dual Knuth equivalence of fillings, Knuth moves on partial
//! fillings, and the triangle-shape test on three columns.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fillings::Filling;
use crate::growth::{rsk_correspond, shape_of_matrix, RskVariant};
use crate::partitions::{p, Partition};
use crate::tableaux::{chain_to_tableau, jdt_chain, PartitionChain, Tableau, TableauKind};

fn same_dims(f: &Filling, g: &Filling) -> Result<()> {
    if f.dims() != g.dims() || !f.poly().is_rectangle() || !g.poly().is_rectangle() {
        return Err(Error::Precondition(format!(
            "need two rectangles of the same size, got {:?} and {:?}",
            f.dims(),
            g.dims()
        )));
    }
    Ok(())
}

/// Equal right-border chains under `v`.
pub fn knuth_equivalent(f: &Filling, g: &Filling, v: RskVariant) -> Result<bool> {
    same_dims(f, g)?;
    Ok(rsk_correspond(f, v)?.0 == rsk_correspond(g, v)?.0)
}

/// Equal top-border chains under `v`.
pub fn dual_knuth_equivalent(f: &Filling, g: &Filling, v: RskVariant) -> Result<bool> {
    same_dims(f, g)?;
    Ok(rsk_correspond(f, v)?.1 == rsk_correspond(g, v)?.1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KnuthKind {
    /// Middle value in the first column, the other two columns trade rows.
    First,
    /// Middle value in the last column, the other two columns trade rows.
    Second,
}

/// A Knuth move on the three adjacent columns starting at local column `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KnuthMove {
    pub kind: KnuthKind,
    pub k: usize,
}

impl fmt::Display for KnuthMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            KnuthKind::First => "first",
            KnuthKind::Second => "second",
        };
        write!(f, "{kind}@{}", self.k)
    }
}

/// Row of the single cross in each column, `None` for empty columns.
fn cross_rows(f: &Filling) -> Result<Vec<Option<usize>>> {
    if !f.is_partial() {
        return Err(Error::Precondition("Knuth moves act on partial fillings".into()));
    }
    Ok(f.matrix()?.iter().map(|c| c.iter().position(|&e| e == 1)).collect())
}

/// Relative order of three distinct rows: the rank of each.
fn ranks(a: usize, b: usize, c: usize) -> [u8; 3] {
    let r = |x: usize| [a, b, c].iter().filter(|&&y| y < x).count() as u8;
    [r(a), r(b), r(c)]
}

fn kind_of(rows: [usize; 3]) -> Option<KnuthKind> {
    match ranks(rows[0], rows[1], rows[2]) {
        [1, 2, 0] | [1, 0, 2] => Some(KnuthKind::First),
        [0, 2, 1] | [2, 0, 1] => Some(KnuthKind::Second),
        _ => None,
    }
}

fn window(rows: &[Option<usize>], k: usize) -> Option<[usize; 3]> {
    match rows.get(k..k + 3)? {
        [Some(a), Some(b), Some(c)] => Some([*a, *b, *c]),
        _ => None,
    }
}

/// Applies `m`; the same move undoes it.
pub fn apply_knuth_move(f: &Filling, m: KnuthMove) -> Result<Filling> {
    let rows = cross_rows(f)?;
    let w = window(&rows, m.k).filter(|&w| kind_of(w) == Some(m.kind)).ok_or_else(|| {
        Error::Precondition(format!("columns {}..{} do not match a {m} pattern", m.k, m.k + 2))
    })?;
    let mut mat = f.matrix()?;
    let (a, b) = match m.kind {
        KnuthKind::First => (m.k + 1, m.k + 2),
        KnuthKind::Second => (m.k, m.k + 1),
    };
    let (ra, rb) = (w[a - m.k], w[b - m.k]);
    mat[a][ra] = 0;
    mat[b][rb] = 0;
    mat[a][rb] = 1;
    mat[b][ra] = 1;
    f.with_matrix(&mat)
}

/// Every applicable move, left to right.
pub fn find_knuth_moves(f: &Filling) -> Result<Vec<KnuthMove>> {
    let rows = cross_rows(f)?;
    Ok((0..rows.len().saturating_sub(2))
        .filter_map(|k| window(&rows, k).and_then(kind_of).map(|kind| KnuthMove { kind, k }))
        .collect())
}

/// True if the growth shape of a three-column partial filling with three
/// crosses is 21.
pub fn triangle_shape(f: &Filling) -> Result<bool> {
    let m = f.matrix()?;
    if m.len() != 3 || !f.is_partial() || f.total() != 3 {
        return Err(Error::Precondition(format!(
            "need three columns with three crosses, got {} columns and {} crosses",
            m.len(),
            f.total()
        )));
    }
    Ok(shape_of_matrix(&m, RskVariant::Rsk)? == p("21"))
}

/// [`triangle_shape`] on columns `k..k+3` of a rectangular partial filling.
pub fn window_is_triangle(f: &Filling, k: usize) -> Result<bool> {
    let m = f.matrix()?;
    let sub = m.get(k..k + 3).ok_or_else(|| Error::Precondition(format!("no columns {k}..{}", k + 2)))?;
    triangle_shape(&Filling::from_matrix(sub)?)
}

/// Indices where two chains of equal length differ.
pub fn differing_indices(a: &PartitionChain, b: &PartitionChain) -> Vec<usize> {
    a.seq().iter().zip(b.seq()).enumerate().filter(|(_, (x, y))| x != y).map(|(i, _)| i).collect()
}

/// The cell chain with entries `k` and `k + 1` of its tableau exchanged;
/// `None` if that is not a tableau.
pub fn swap_entries(c: &PartitionChain, k: u32) -> Option<PartitionChain> {
    let t = chain_to_tableau(c);
    let rows = t
        .rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|&e| match e {
                    _ if e == k => k + 1,
                    _ if e == k + 1 => k,
                    _ => e,
                })
                .collect()
        })
        .collect();
    let s = Tableau::new(rows, TableauKind::Partial).ok()?;
    Some(s.to_chain_len(c.steps()).with_mode(c.mode()).ok()?)
}

/// True if entries `k`, `k + 1`, `k + 2` of a cell chain are present and,
/// after sliding out the entries below them, fill the shape 21.
pub fn entries_triangle(c: &PartitionChain, k: usize) -> Result<bool> {
    if k == 0 || k + 2 > c.steps() {
        return Err(Error::Precondition(format!("entries {k}..{} are out of range", k + 2)));
    }
    let mut d = c.clone();
    for _ in 1..k {
        d = jdt_chain(&d)?;
    }
    let sizes: Vec<u32> = d.seq()[..4].iter().map(Partition::size).collect();
    Ok(sizes == [0, 1, 2, 3] && d.get(3) == &p("21"))
}
