//! Fillings of moon polyominoes, chain statistics and constrained
//! enumeration.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::growth::{self, RskVariant};
use crate::partitions::Partition;
use crate::polyomino::{parse_cell_grid, MaxRectangle, MoonPolyomino};

/// The eight chain kinds. Lower case means strict in that direction, upper
/// case means weak: `nE` allows two elements in one column, `Ne` in one row.
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ChainKind {
    ne,
    se,
    NE,
    SE,
    nE,
    Ne,
    sE,
    Se,
}

impl ChainKind {
    pub const ALL: [ChainKind; 8] = [
        ChainKind::ne,
        ChainKind::se,
        ChainKind::NE,
        ChainKind::SE,
        ChainKind::nE,
        ChainKind::Ne,
        ChainKind::sE,
        ChainKind::Se,
    ];

    /// Kinds that are only defined for 0-1 fillings.
    pub fn zero_one_only(self) -> bool {
        matches!(self, ChainKind::nE | ChainKind::Ne | ChainKind::sE | ChainKind::Se)
    }

    /// North-east kinds go up, south-east kinds go down.
    pub fn is_north(self) -> bool {
        matches!(self, ChainKind::ne | ChainKind::NE | ChainKind::nE | ChainKind::Ne)
    }

    /// Elements count with their multiplicity.
    pub fn weighted(self) -> bool {
        matches!(self, ChainKind::NE | ChainKind::SE)
    }

    /// An entry `e` may appear in up to `e` chains of a union (instead of
    /// chains being disjoint).
    pub fn multiset(self) -> bool {
        matches!(self, ChainKind::ne | ChainKind::se)
    }

    /// Whether `q = (x, y)` may follow `p` in a chain of this kind.
    pub fn follows(self, p: (i32, i32), q: (i32, i32)) -> bool {
        let (dx, dy) = (q.0 - p.0, q.1 - p.1);
        let distinct = dx != 0 || dy != 0;
        match self {
            ChainKind::ne => dx > 0 && dy > 0,
            ChainKind::se => dx > 0 && dy < 0,
            ChainKind::NE => distinct && dx >= 0 && dy >= 0,
            ChainKind::SE => distinct && dx >= 0 && dy <= 0,
            ChainKind::nE => dx >= 0 && dy > 0,
            ChainKind::Ne => dx > 0 && dy >= 0,
            ChainKind::sE => dx >= 0 && dy < 0,
            ChainKind::Se => dx > 0 && dy <= 0,
        }
    }

    /// The variant whose growth labels carry this kind's Greene numbers, and
    /// whether they are read from the transposed labels.
    pub fn greene_variant(self) -> (RskVariant, bool) {
        match self {
            ChainKind::NE => (RskVariant::Rsk, false),
            ChainKind::se => (RskVariant::Rsk, true),
            ChainKind::ne => (RskVariant::DualRskPrime, false),
            ChainKind::SE => (RskVariant::DualRskPrime, true),
            ChainKind::nE => (RskVariant::DualRsk, false),
            ChainKind::Se => (RskVariant::DualRsk, true),
            ChainKind::Ne => (RskVariant::RskPrime, false),
            ChainKind::sE => (RskVariant::RskPrime, true),
        }
    }

    /// Kind after reflecting about the diagonal `x = y`.
    pub fn reflected(self) -> ChainKind {
        match self {
            ChainKind::nE => ChainKind::Ne,
            ChainKind::Ne => ChainKind::nE,
            ChainKind::sE => ChainKind::Se,
            ChainKind::Se => ChainKind::sE,
            k => k,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ChainKind::ne => "ne",
            ChainKind::se => "se",
            ChainKind::NE => "NE",
            ChainKind::SE => "SE",
            ChainKind::nE => "nE",
            ChainKind::Ne => "Ne",
            ChainKind::sE => "sE",
            ChainKind::Se => "Se",
        }
    }
}

impl fmt::Display for ChainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChainKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ChainKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown chain kind {s:?} (ne se NE SE nE Ne sE Se)")))
    }
}

/// Non-negative multiplicities on the cells of a moon polyomino.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Filling {
    poly: MoonPolyomino,
    /// `cols[i][j]` is the entry in column `x0 + i`, `j` cells above its bottom.
    cols: Vec<Vec<u32>>,
}

impl Filling {
    pub fn empty(poly: MoonPolyomino) -> Self {
        let cols = poly.columns().map(|x| vec![0; poly.height_of(x) as usize]).collect();
        Self { poly, cols }
    }

    /// A `width × height` rectangle at the origin; `entries[x][y]`.
    pub fn from_matrix(entries: &[Vec<u32>]) -> Result<Self> {
        let w = entries.len();
        let h = entries.first().map_or(0, Vec::len);
        if w == 0 || h == 0 || entries.iter().any(|c| c.len() != h) {
            return Err(Error::Filling("matrix must be a non-empty rectangle".into()));
        }
        Ok(Self { poly: MoonPolyomino::rectangle(w, h), cols: entries.to_vec() })
    }

    /// Permutation matrix: column `i` holds a cross in row `perm[i] - 1`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &v in perm {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::Filling(format!("{perm:?} is not a permutation")));
            }
        }
        let m: Vec<Vec<u32>> = perm
            .iter()
            .map(|&v| (0..n).map(|r| u32::from(r + 1 == v)).collect())
            .collect();
        Self::from_matrix(&m)
    }

    /// Builds from a polyomino and its non-zero cells.
    pub fn from_cells(poly: MoonPolyomino, cells: &[((i32, i32), u32)]) -> Result<Self> {
        let mut f = Self::empty(poly);
        for &((x, y), v) in cells {
            f.set(x, y, v)?;
        }
        Ok(f)
    }

    /// Grid text, top row first: `.` for non-cells, digits or `x` for
    /// entries, `[12]` for entries of two or more digits.
    pub fn parse(s: &str) -> Result<Self> {
        let tokens = parse_cell_grid(s)?;
        let poly = MoonPolyomino::from_cells(&tokens.iter().map(|t| (t.0, t.1)).collect())?;
        let mut f = Self::empty(poly);
        for (x, y, t) in tokens {
            let v = match t.as_str() {
                "x" | "X" | "o" | "O" => u32::from(t == "x" || t == "X"),
                _ => t.parse::<u32>().map_err(|_| {
                    Error::Parse(format!("bad entry {t:?} at column {x}, row {y}"))
                })?,
            };
            f.set(x, y, v)?;
        }
        Ok(f)
    }

    pub fn to_grid(&self) -> String {
        let p = &self.poly;
        let mut out = String::new();
        for y in (p.ymin()..=p.ymax()).rev() {
            let mut line = String::new();
            for x in p.columns() {
                if p.contains(x, y) {
                    let v = self.get(x, y);
                    if v < 10 {
                        line.push_str(&v.to_string());
                    } else {
                        line.push_str(&format!("[{v}]"));
                    }
                } else {
                    line.push('.');
                }
            }
            out.push_str(line.trim_end_matches('.'));
            out.push('\n');
        }
        out
    }

    pub fn poly(&self) -> &MoonPolyomino {
        &self.poly
    }

    /// Entry at `(x, y)`; 0 outside the polyomino.
    pub fn get(&self, x: i32, y: i32) -> u32 {
        match self.poly.span(x) {
            Some((b, t)) if b <= y && y <= t => self.cols[(x - self.poly.x0()) as usize][(y - b) as usize],
            _ => 0,
        }
    }

    pub fn set(&mut self, x: i32, y: i32, v: u32) -> Result<()> {
        match self.poly.span(x) {
            Some((b, t)) if b <= y && y <= t => {
                self.cols[(x - self.poly.x0()) as usize][(y - b) as usize] = v;
                Ok(())
            }
            _ => Err(Error::Filling(format!("({x}, {y}) is not a cell"))),
        }
    }

    /// Non-zero cells, column by column, bottom to top.
    pub fn support(&self) -> Vec<((i32, i32), u32)> {
        self.poly
            .cells()
            .into_iter()
            .map(|(x, y)| ((x, y), self.get(x, y)))
            .filter(|&(_, v)| v > 0)
            .collect()
    }

    pub fn total(&self) -> u32 {
        self.cols.iter().flatten().sum()
    }

    pub fn is_zero_one(&self) -> bool {
        self.cols.iter().flatten().all(|&v| v <= 1)
    }

    /// At most one non-zero entry, equal to 1, per row and column.
    pub fn is_partial(&self) -> bool {
        let (rows, cols) = self.sums();
        self.is_zero_one() && rows.iter().all(|&r| r <= 1) && cols.iter().all(|&c| c <= 1)
    }

    /// A rectangular permutation matrix.
    pub fn is_standard(&self) -> bool {
        let (rows, cols) = self.sums();
        self.poly.is_rectangle()
            && self.is_zero_one()
            && rows.iter().all(|&r| r == 1)
            && cols.iter().all(|&c| c == 1)
    }

    /// Row sums bottom to top and column sums left to right.
    pub fn sums(&self) -> (Vec<u32>, Vec<u32>) {
        let p = &self.poly;
        let rows = (p.ymin()..=p.ymax())
            .map(|y| p.columns().map(|x| self.get(x, y)).sum())
            .collect();
        let cols = self.cols.iter().map(|c| c.iter().sum()).collect();
        (rows, cols)
    }

    /// Local matrix `m[i][j]` of the rectangle, `i` columns from its left
    /// edge and `j` rows from its bottom edge.
    pub fn rect_matrix(&self, r: &MaxRectangle) -> Vec<Vec<u32>> {
        (r.cols.0..=r.cols.1)
            .map(|x| (r.rows.0..=r.rows.1).map(|y| self.get(x, y)).collect())
            .collect()
    }

    /// The sub-filling on the cells inside both ranges (inclusive),
    /// coordinates kept. `None` when no cell is inside.
    pub fn restrict(&self, cols: (i32, i32), rows: (i32, i32)) -> Option<Filling> {
        let cells: std::collections::BTreeSet<(i32, i32)> = self
            .poly
            .cells()
            .into_iter()
            .filter(|&(x, y)| cols.0 <= x && x <= cols.1 && rows.0 <= y && y <= rows.1)
            .collect();
        let poly = MoonPolyomino::from_cells(&cells).ok()?;
        let mut f = Filling::empty(poly);
        for &(x, y) in &cells {
            f.set(x, y, self.get(x, y)).ok()?;
        }
        Some(f)
    }

    /// The rectangle's entries as a rectangular filling at the origin.
    pub fn rect_filling(&self, r: &MaxRectangle) -> Filling {
        Filling::from_matrix(&self.rect_matrix(r)).expect("rectangles are non-empty")
    }

    /// Writes a rectangular filling at the origin back into `r`.
    pub fn write_rect(&mut self, r: &MaxRectangle, g: &Filling) -> Result<()> {
        let m = g.matrix()?;
        if m.len() != r.width() || m[0].len() != r.height() {
            return Err(Error::Filling("rectangle dimensions differ".into()));
        }
        for (i, col) in m.iter().enumerate() {
            for (j, &v) in col.iter().enumerate() {
                self.set(r.cols.0 + i as i32, r.rows.0 + j as i32, v)?;
            }
        }
        Ok(())
    }

    /// Entries of a rectangular filling as `m[i][j]`, local coordinates.
    pub fn matrix(&self) -> Result<Vec<Vec<u32>>> {
        if !self.poly.is_rectangle() {
            return Err(Error::Filling("filling is not rectangular".into()));
        }
        Ok(self.cols.clone())
    }

    /// Same rectangle, new entries `m[i][j]` in local coordinates.
    pub fn with_matrix(&self, m: &[Vec<u32>]) -> Result<Filling> {
        let (w, h) = self.dims();
        if !self.poly.is_rectangle() || m.len() != w || m.iter().any(|c| c.len() != h) {
            return Err(Error::Filling(format!("expected a {w}×{h} matrix on a rectangle")));
        }
        Ok(Filling { poly: self.poly.clone(), cols: m.to_vec() })
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.poly.width(), (self.poly.ymax() - self.poly.ymin() + 1) as usize)
    }

    /// The filling reflected about `x = y`.
    pub fn reflect(&self) -> Filling {
        let poly = self.poly.reflect();
        let mut f = Filling::empty(poly);
        for ((x, y), v) in self.support() {
            f.set(y, x, v).expect("reflection maps cells to cells");
        }
        f
    }

    /// Columns in reverse order.
    pub fn reverse_columns(&self) -> Filling {
        let spans: Vec<_> = self.poly.spans().iter().rev().copied().collect();
        let poly = MoonPolyomino::new(self.poly.x0(), spans).expect("mirror of a moon is a moon");
        Filling { poly, cols: self.cols.iter().rev().cloned().collect() }
    }

    /// Moves everything so the bounding box starts at the origin.
    pub fn normalized(&self) -> Filling {
        Filling { poly: self.poly.normalized(), cols: self.cols.clone() }
    }

    /// Same entries, columns permuted: column `x0 + i` goes to `x0 + sigma[i]`.
    /// Fails if the result is not a moon polyomino.
    pub fn permute_columns(&self, sigma: &[usize]) -> Result<Filling> {
        match self.poly.reorder_columns(sigma)? {
            crate::polyomino::Reordered::Moon(poly) => {
                let mut cols = vec![Vec::new(); sigma.len()];
                for (i, &s) in sigma.iter().enumerate() {
                    cols[s] = self.cols[i].clone();
                }
                Ok(Filling { poly, cols })
            }
            crate::polyomino::Reordered::NotMoon(e) => Err(Error::Polyomino(e)),
        }
    }

    fn check_kind(&self, kind: ChainKind) -> Result<()> {
        if kind.zero_one_only() && !self.is_zero_one() {
            return Err(Error::Precondition(format!("{kind}-chains need a 0-1 filling")));
        }
        Ok(())
    }

    /// Length of the longest chain of the given kind.
    pub fn longest_chain(&self, kind: ChainKind) -> Result<u32> {
        self.check_kind(kind)?;
        Ok(self
            .poly
            .maximal_rectangles()
            .iter()
            .map(|r| longest_in_rect(self, r, kind))
            .max()
            .unwrap_or(0))
    }

    /// Greene shape of each maximal rectangle for this kind, from growth
    /// diagrams.
    pub fn lambda_statistic(&self, kind: ChainKind) -> Result<BTreeMap<MaxRectangle, Partition>> {
        self.check_kind(kind)?;
        let (v, transposed) = kind.greene_variant();
        let mut out = BTreeMap::new();
        for r in self.poly.maximal_rectangles() {
            let m = self.rect_matrix(&r);
            let shape = growth::shape_of_matrix(&m, v)?;
            out.insert(r, if transposed { shape.transpose() } else { shape });
        }
        Ok(out)
    }

    /// The same statistic keyed by `(width, height)`, which determines a
    /// maximal rectangle and survives column moves.
    pub fn lambda_by_size(&self, kind: ChainKind) -> Result<BTreeMap<(usize, usize), Partition>> {
        Ok(self
            .lambda_statistic(kind)?
            .into_iter()
            .map(|(r, p)| ((r.width(), r.height()), p))
            .collect())
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_grid())
    }
}

fn longest_in_rect(f: &Filling, r: &MaxRectangle, kind: ChainKind) -> u32 {
    let mut items: Vec<((i32, i32), u32)> = f
        .support()
        .into_iter()
        .filter(|&((x, y), _)| r.contains(x, y))
        .collect();
    let north = kind.is_north();
    items.sort_by_key(|&((x, y), _)| (x, if north { y } else { -y }));
    let w = |v: u32| if kind.weighted() { v } else { 1 };
    let mut best = vec![0u32; items.len()];
    for i in 0..items.len() {
        best[i] = w(items[i].1);
        for j in 0..i {
            if kind.follows(items[j].0, items[i].0) {
                best[i] = best[i].max(best[j] + w(items[i].1));
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Constraints for enumeration.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountQuery {
    /// Chain kind and required length of its longest chain.
    pub longest: Option<(ChainKind, u32)>,
    /// Row sums, bottom to top.
    pub row_sums: Option<Vec<u32>>,
    /// Column sums, left to right.
    pub col_sums: Option<Vec<u32>>,
    pub total: Option<u32>,
    /// Non-zero entries per row, bottom to top.
    pub row_nonzero: Option<Vec<u32>>,
    /// Number of non-zero entries.
    pub nonzero: Option<u32>,
    /// Largest multiplicity allowed in a cell; 1 for 0-1 fillings.
    pub max_entry: u32,
    /// Upper bound on the total when `total` is not given.
    pub max_mass: u32,
}

impl CountQuery {
    pub fn zero_one() -> Self {
        Self { max_entry: 1, max_mass: u32::MAX, ..Default::default() }
    }

    pub fn arbitrary(max_mass: u32) -> Self {
        Self { max_entry: max_mass, max_mass, ..Default::default() }
    }

    pub fn with_longest(mut self, kind: ChainKind, l: u32) -> Self {
        self.longest = Some((kind, l));
        self
    }

    pub fn with_rows(mut self, r: Vec<u32>) -> Self {
        self.row_sums = Some(r);
        self
    }

    pub fn with_cols(mut self, c: Vec<u32>) -> Self {
        self.col_sums = Some(c);
        self
    }

    pub fn with_total(mut self, n: u32) -> Self {
        self.total = Some(n);
        self
    }

    pub fn with_nonzero(mut self, m: u32) -> Self {
        self.nonzero = Some(m);
        self
    }
}

/// Default cell cap for 0-1 enumeration.
pub const MAX_ZERO_ONE_CELLS: usize = 22;
/// Default mass cap for arbitrary enumeration.
pub const MAX_MASS: u32 = 10;

/// Every filling of `m` satisfying `q`, in lexicographic order of the
/// entries read column by column, bottom to top.
pub fn enumerate(m: &MoonPolyomino, q: &CountQuery) -> Result<Vec<Filling>> {
    let mut out = Vec::new();
    for_each_filling(m, q, &mut |f| out.push(f.clone()))?;
    Ok(out)
}

pub fn count(m: &MoonPolyomino, q: &CountQuery) -> Result<u64> {
    let mut n = 0;
    for_each_filling(m, q, &mut |_| n += 1)?;
    Ok(n)
}

/// Streams the fillings of [`enumerate`] to a callback.
pub fn for_each_filling(m: &MoonPolyomino, q: &CountQuery, f: &mut dyn FnMut(&Filling)) -> Result<()> {
    let cells = m.cells();
    let max_entry = q.max_entry.max(1);
    let mass_cap = q.total.unwrap_or(q.max_mass);
    if max_entry == 1 && cells.len() > MAX_ZERO_ONE_CELLS {
        return Err(Error::Cap(format!(
            "{} cells exceed the 0-1 cap of {MAX_ZERO_ONE_CELLS} (--max-cells)",
            cells.len()
        )));
    }
    if max_entry > 1 && mass_cap > MAX_MASS {
        return Err(Error::Cap(format!(
            "mass {mass_cap} exceeds the cap of {MAX_MASS} (--max-mass)"
        )));
    }
    if let Some((kind, _)) = q.longest {
        if kind.zero_one_only() && max_entry > 1 {
            return Err(Error::Precondition(format!("{kind}-chains need 0-1 fillings")));
        }
    }
    let ymin = m.ymin();
    let nrows = (m.ymax() - ymin + 1) as usize;
    for (name, v, len) in [
        ("row sums", &q.row_sums, nrows),
        ("column sums", &q.col_sums, m.width()),
        ("row counts", &q.row_nonzero, nrows),
    ] {
        if let Some(v) = v {
            if v.len() != len {
                return Err(Error::Precondition(format!("{name} need {len} values, got {}", v.len())));
            }
        }
    }
    let mut st = EnumState {
        m,
        q,
        cells: &cells,
        ymin,
        max_entry,
        mass_cap,
        rows: vec![0; nrows],
        cols: vec![0; m.width()],
        row_nz: vec![0; nrows],
        nz: 0,
        mass: 0,
        cur: Filling::empty(m.clone()),
    };
    st.rec(0, f);
    Ok(())
}

struct EnumState<'a> {
    m: &'a MoonPolyomino,
    q: &'a CountQuery,
    cells: &'a [(i32, i32)],
    ymin: i32,
    max_entry: u32,
    mass_cap: u32,
    rows: Vec<u32>,
    cols: Vec<u32>,
    row_nz: Vec<u32>,
    nz: u32,
    mass: u32,
    cur: Filling,
}

impl EnumState<'_> {
    fn rec(&mut self, i: usize, f: &mut dyn FnMut(&Filling)) {
        if i == self.cells.len() {
            if self.accept() {
                f(&self.cur);
            }
            return;
        }
        let (x, y) = self.cells[i];
        let ri = (y - self.ymin) as usize;
        let ci = (x - self.m.x0()) as usize;
        for v in 0..=self.max_entry {
            if self.mass + v > self.mass_cap {
                break;
            }
            if let Some(r) = &self.q.row_sums {
                if self.rows[ri] + v > r[ri] {
                    break;
                }
            }
            if let Some(c) = &self.q.col_sums {
                if self.cols[ci] + v > c[ci] {
                    break;
                }
            }
            let nzv = u32::from(v > 0);
            if let Some(r) = &self.q.row_nonzero {
                if self.row_nz[ri] + nzv > r[ri] {
                    break;
                }
            }
            if let Some(nmax) = self.q.nonzero {
                if self.nz + nzv > nmax {
                    break;
                }
            }
            self.mass += v;
            self.rows[ri] += v;
            self.cols[ci] += v;
            self.row_nz[ri] += nzv;
            self.nz += nzv;
            self.cur.set(x, y, v).expect("cells come from the polyomino");
            // column finished: its sum must be exact now
            let col_done = i + 1 == self.cells.len() || self.cells[i + 1].0 != x;
            let col_ok = !col_done || self.q.col_sums.as_ref().map_or(true, |c| self.cols[ci] == c[ci]);
            if col_ok {
                self.rec(i + 1, f);
            }
            self.mass -= v;
            self.rows[ri] -= v;
            self.cols[ci] -= v;
            self.row_nz[ri] -= nzv;
            self.nz -= nzv;
        }
        self.cur.set(x, y, 0).expect("cells come from the polyomino");
    }

    fn accept(&self) -> bool {
        let q = self.q;
        q.total.map_or(true, |n| self.mass == n)
            && q.row_sums.as_ref().map_or(true, |r| &self.rows == r)
            && q.col_sums.as_ref().map_or(true, |c| &self.cols == c)
            && q.row_nonzero.as_ref().map_or(true, |r| &self.row_nz == r)
            && q.nonzero.map_or(true, |m| self.nz == m)
            && q.longest.map_or(true, |(kind, l)| {
                self.cur.longest_chain(kind).expect("kind checked up front") == l
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const LEFT: &str = ".01\n.013\n3010\n1100";
    const RIGHT: &str = ".01\n.010\n0010\n0100";

    #[test]
    fn chain_lengths_weighted_example() {
        let f = Filling::parse(LEFT).unwrap();
        let got: Vec<u32> = [ChainKind::ne, ChainKind::se, ChainKind::NE, ChainKind::SE]
            .iter()
            .map(|&k| f.longest_chain(k).unwrap())
            .collect();
        assert_eq!(got, vec![3, 2, 6, 5]);
    }

    #[test]
    fn chain_lengths_zero_one_example() {
        let f = Filling::parse(RIGHT).unwrap();
        let got: Vec<u32> = [ChainKind::nE, ChainKind::Ne, ChainKind::sE, ChainKind::Se]
            .iter()
            .map(|&k| f.longest_chain(k).unwrap())
            .collect();
        assert_eq!(got, vec![4, 2, 3, 1]);
        let left = Filling::parse(LEFT).unwrap();
        assert!(left.longest_chain(ChainKind::nE).is_err());
    }

    #[test]
    fn empty_filling_has_no_chains() {
        let f = Filling::empty(MoonPolyomino::rectangle(3, 2));
        for k in ChainKind::ALL {
            assert_eq!(f.longest_chain(k).unwrap(), 0);
        }
    }

    #[test]
    fn sums_bottom_to_top() {
        let f = Filling::parse("11\n0\n01\n30").unwrap_err();
        assert!(matches!(f, Error::Polyomino(_)));
        let f = Filling::parse("11\n01\n00\n30").unwrap();
        assert_eq!(f.sums(), (vec![3, 0, 1, 2], vec![4, 2]));
        let p = Filling::from_permutation(&[2, 3, 1]).unwrap();
        assert_eq!(p.sums(), (vec![1, 1, 1], vec![1, 1, 1]));
    }

    #[test]
    fn grid_round_trip() {
        for s in [LEFT, RIGHT, "[12]0\n01"] {
            let f = Filling::parse(s).unwrap();
            assert_eq!(Filling::parse(&f.to_grid()).unwrap(), f);
        }
        assert_eq!(Filling::parse("[12]0\n01").unwrap().get(0, 1), 12);
    }

    #[test]
    fn restrict_columns_of_permutation() {
        let f = Filling::from_permutation(&[6, 1, 5, 3, 7, 8, 4, 2]).unwrap();
        let r = f.restrict((1, 2), (0, 7)).unwrap();
        assert_eq!(r.support(), vec![((1, 0), 1), ((2, 4), 1)]);
        assert_eq!(f.restrict((0, 7), (0, 7)).unwrap(), f);
        assert!(f.restrict((9, 10), (0, 7)).is_none());
    }

    #[test]
    fn enumeration_examples() {
        let one = MoonPolyomino::rectangle(1, 1);
        assert_eq!(count(&one, &CountQuery::zero_one()).unwrap(), 2);
        let sq = MoonPolyomino::rectangle(2, 2);
        let q = CountQuery::zero_one().with_longest(ChainKind::ne, 2);
        assert_eq!(count(&sq, &q).unwrap(), 4);
        let q = CountQuery::zero_one().with_rows(vec![1, 1]).with_cols(vec![1, 1]);
        assert_eq!(count(&sq, &q).unwrap(), 2);
        let q = CountQuery::zero_one().with_longest(ChainKind::ne, 2).with_rows(vec![1, 1]);
        assert_eq!(count(&sq, &q).unwrap(), 1);
        let q = CountQuery::zero_one().with_longest(ChainKind::ne, 0).with_rows(vec![0, 0]);
        assert_eq!(count(&sq, &q).unwrap(), 1);
        let mut by_l = [0u64; 3];
        for f in enumerate(&sq, &CountQuery::zero_one()).unwrap() {
            by_l[f.longest_chain(ChainKind::ne).unwrap() as usize] += 1;
        }
        assert_eq!(by_l, [1, 11, 4]);
    }

    #[test]
    fn reflection_swaps_kinds() {
        let f = Filling::parse(RIGHT).unwrap();
        let g = f.reflect();
        for k in ChainKind::ALL {
            assert_eq!(g.longest_chain(k).unwrap(), f.longest_chain(k.reflected()).unwrap(), "{k}");
        }
    }
}
