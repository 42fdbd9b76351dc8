//! Moon polyominoes stored as per-column row intervals.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Inclusive row interval `[bottom, top]` of one column.
pub type Span = (i32, i32);

/// A convex polyomino whose columns are pairwise nested. Columns occupy the
/// contiguous index range `x0 .. x0 + spans.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MoonPolyomino {
    x0: i32,
    spans: Vec<Span>,
}

/// An inclusion-maximal rectangle, both ranges inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MaxRectangle {
    pub cols: (i32, i32),
    pub rows: (i32, i32),
}

impl MaxRectangle {
    pub fn width(&self) -> usize {
        (self.cols.1 - self.cols.0 + 1) as usize
    }

    pub fn height(&self) -> usize {
        (self.rows.1 - self.rows.0 + 1) as usize
    }

    pub fn contains(&self, x: i32, y: i32) -> bool {
        (self.cols.0..=self.cols.1).contains(&x) && (self.rows.0..=self.rows.1).contains(&y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeClass {
    GenericMoon,
    Stack,
    Ferrers,
}

/// Result of moving columns around: either a moon polyomino or the reason
/// it is not one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reordered {
    Moon(MoonPolyomino),
    NotMoon(String),
}

fn nested(a: Span, b: Span) -> bool {
    (a.0 <= b.0 && b.1 <= a.1) || (b.0 <= a.0 && a.1 <= b.1)
}

impl MoonPolyomino {
    /// Builds from the leftmost column index and the column spans.
    pub fn new(x0: i32, spans: Vec<Span>) -> Result<Self> {
        if spans.is_empty() {
            return Err(Error::Polyomino("no columns".into()));
        }
        for (i, &(b, t)) in spans.iter().enumerate() {
            if b > t {
                return Err(Error::Polyomino(format!("column {} is empty", x0 + i as i32)));
            }
        }
        for i in 0..spans.len() {
            for j in i + 1..spans.len() {
                if !nested(spans[i], spans[j]) {
                    return Err(Error::Polyomino(format!(
                        "columns {} and {} are incomparable",
                        x0 + i as i32,
                        x0 + j as i32
                    )));
                }
            }
        }
        let m = Self { x0, spans };
        for y in m.ymin()..=m.ymax() {
            let xs: Vec<i32> = m.columns().filter(|&x| m.contains(x, y)).collect();
            if xs.is_empty() || xs.windows(2).any(|w| w[1] != w[0] + 1) {
                return Err(Error::Polyomino(format!("row {y} is not convex")));
            }
        }
        Ok(m)
    }

    /// Validates an arbitrary cell set.
    pub fn from_cells(cells: &BTreeSet<(i32, i32)>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::Polyomino("no cells".into()));
        }
        let xmin = cells.iter().map(|c| c.0).min().unwrap();
        let xmax = cells.iter().map(|c| c.0).max().unwrap();
        let mut spans = Vec::new();
        for x in xmin..=xmax {
            let ys: Vec<i32> = cells.iter().filter(|c| c.0 == x).map(|c| c.1).collect();
            if ys.is_empty() {
                return Err(Error::Polyomino(format!("column {x} is empty")));
            }
            if ys.windows(2).any(|w| w[1] != w[0] + 1) {
                return Err(Error::Polyomino(format!("column {x} is not convex")));
            }
            spans.push((ys[0], *ys.last().unwrap()));
        }
        Self::new(xmin, spans)
    }

    pub fn rectangle(width: usize, height: usize) -> Self {
        assert!(width > 0 && height > 0, "rectangle needs positive sides");
        Self { x0: 0, spans: vec![(0, height as i32 - 1); width] }
    }

    /// Bottom-aligned columns of the given heights.
    pub fn stack(heights: &[u32]) -> Result<Self> {
        if heights.contains(&0) {
            return Err(Error::Polyomino("zero column height".into()));
        }
        Self::new(0, heights.iter().map(|&h| (0, h as i32 - 1)).collect())
    }

    /// The Ferrers shape whose column heights are the parts of `content`.
    pub fn ferrers(content: &Partition) -> Result<Self> {
        Self::stack(content.parts())
    }

    pub fn x0(&self) -> i32 {
        self.x0
    }

    pub fn spans(&self) -> &[Span] {
        &self.spans
    }

    pub fn width(&self) -> usize {
        self.spans.len()
    }

    pub fn columns(&self) -> std::ops::Range<i32> {
        self.x0..self.x0 + self.spans.len() as i32
    }

    pub fn span(&self, x: i32) -> Option<Span> {
        let i = x.checked_sub(self.x0)?;
        if i < 0 {
            return None;
        }
        self.spans.get(i as usize).copied()
    }

    pub fn height_of(&self, x: i32) -> u32 {
        self.span(x).map_or(0, |(b, t)| (t - b + 1) as u32)
    }

    pub fn ymin(&self) -> i32 {
        self.spans.iter().map(|s| s.0).min().unwrap()
    }

    pub fn ymax(&self) -> i32 {
        self.spans.iter().map(|s| s.1).max().unwrap()
    }

    pub fn contains(&self, x: i32, y: i32) -> bool {
        self.span(x).is_some_and(|(b, t)| b <= y && y <= t)
    }

    /// Inclusive column range of row `y`.
    pub fn row_span(&self, y: i32) -> Option<(i32, i32)> {
        let xs: Vec<i32> = self.columns().filter(|&x| self.contains(x, y)).collect();
        Some((*xs.first()?, *xs.last()?))
    }

    pub fn size(&self) -> usize {
        self.columns().map(|x| self.height_of(x) as usize).sum()
    }

    /// Cells column by column, bottom to top.
    pub fn cells(&self) -> Vec<(i32, i32)> {
        self.columns()
            .flat_map(|x| {
                let (b, t) = self.span(x).unwrap();
                (b..=t).map(move |y| (x, y))
            })
            .collect()
    }

    /// Column heights sorted decreasingly.
    pub fn content(&self) -> Partition {
        Partition::from_unsorted(self.columns().map(|x| self.height_of(x)).collect())
    }

    /// Moves column `x0 + i` to position `x0 + sigma[i]`.
    pub fn reorder_columns(&self, sigma: &[usize]) -> Result<Reordered> {
        let n = self.width();
        let mut seen = vec![false; n];
        if sigma.len() != n || sigma.iter().any(|&s| s >= n || std::mem::replace(&mut seen[s], true))
        {
            return Err(Error::Precondition("column map is not a permutation".into()));
        }
        let mut spans = vec![(0, 0); n];
        for (i, &s) in sigma.iter().enumerate() {
            spans[s] = self.spans[i];
        }
        Ok(match MoonPolyomino::new(self.x0, spans) {
            Ok(m) => Reordered::Moon(m),
            Err(e) => Reordered::NotMoon(e.to_string()),
        })
    }

    /// All inclusion-maximal rectangles, sorted.
    pub fn maximal_rectangles(&self) -> Vec<MaxRectangle> {
        let mut out = BTreeSet::new();
        for x in self.columns() {
            let s = self.span(x).unwrap();
            let inside = |c: i32| self.span(c).is_some_and(|t| t.0 <= s.0 && s.1 <= t.1);
            let mut lo = x;
            while inside(lo - 1) {
                lo -= 1;
            }
            let mut hi = x;
            while inside(hi + 1) {
                hi += 1;
            }
            out.insert(MaxRectangle { cols: (lo, hi), rows: s });
        }
        out.into_iter().collect()
    }

    /// The maximal rectangle with the rows of column `x`.
    pub fn rectangle_of_column(&self, x: i32) -> Option<MaxRectangle> {
        let s = self.span(x)?;
        self.maximal_rectangles().into_iter().find(|r| r.rows == s && r.cols.0 <= x && x <= r.cols.1)
    }

    /// Reflection about the diagonal `x = y`.
    pub fn reflect(&self) -> MoonPolyomino {
        let spans = (self.ymin()..=self.ymax())
            .map(|y| self.row_span(y).expect("moon rows are non-empty"))
            .collect();
        MoonPolyomino { x0: self.ymin(), spans }
    }

    /// Same shape moved so the bounding box starts at the origin.
    pub fn normalized(&self) -> MoonPolyomino {
        let y0 = self.ymin();
        MoonPolyomino { x0: 0, spans: self.spans.iter().map(|&(b, t)| (b - y0, t - y0)).collect() }
    }

    pub fn is_rectangle(&self) -> bool {
        self.spans.iter().all(|&s| s == self.spans[0])
    }

    pub fn is_stack(&self) -> bool {
        self.spans.iter().all(|s| s.0 == self.spans[0].0)
    }

    pub fn is_ferrers(&self) -> bool {
        self.is_stack() && self.spans.windows(2).all(|w| w[0].1 >= w[1].1)
    }

    pub fn classify(&self) -> ShapeClass {
        if self.is_ferrers() {
            ShapeClass::Ferrers
        } else if self.is_stack() {
            ShapeClass::Stack
        } else {
            ShapeClass::GenericMoon
        }
    }

    /// Parses a grid, top row first; `.` or space marks a non-cell and any
    /// other character a cell. The result is normalized to the origin.
    pub fn parse(s: &str) -> Result<Self> {
        let cells = parse_cell_grid(s)?;
        MoonPolyomino::from_cells(&cells.into_iter().map(|(x, y, _)| (x, y)).collect())
    }

    /// Grid text with `o` for cells, top row first.
    pub fn to_grid(&self) -> String {
        let mut out = String::new();
        for y in (self.ymin()..=self.ymax()).rev() {
            let line: String = self
                .columns()
                .map(|x| if self.contains(x, y) { 'o' } else { '.' })
                .collect();
            out.push_str(line.trim_end_matches('.'));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for MoonPolyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_grid())
    }
}

/// Reads a grid into `(x, y, token)` triples for every non-`.` position.
/// A token is a single character or a bracketed group like `[12]`. Lines are
/// rows, top first; the result is shifted so the minimal coordinates are 0.
pub(crate) fn parse_cell_grid(s: &str) -> Result<Vec<(i32, i32, String)>> {
    let lines: Vec<&str> = s
        .lines()
        .map(|l| l.trim_end())
        .skip_while(|l| l.trim().is_empty())
        .collect();
    let lines: Vec<&str> = {
        let mut v = lines;
        while v.last().is_some_and(|l| l.trim().is_empty()) {
            v.pop();
        }
        v
    };
    let h = lines.len() as i32;
    let mut out = Vec::new();
    for (li, line) in lines.iter().enumerate() {
        let y = h - 1 - li as i32;
        let mut x = 0;
        let mut chars = line.chars().peekable();
        while let Some(ch) = chars.next() {
            let token = if ch == '[' {
                let mut t = String::new();
                loop {
                    match chars.next() {
                        Some(']') => break,
                        Some(c) => t.push(c),
                        None => {
                            return Err(Error::Parse(format!(
                                "line {}, column {}: unclosed '['",
                                li + 1,
                                x + 1
                            )))
                        }
                    }
                }
                Some(t)
            } else if ch == '.' || ch == ' ' {
                None
            } else {
                Some(ch.to_string())
            };
            if let Some(t) = token {
                out.push((x, y, t));
            }
            x += 1;
        }
    }
    if out.is_empty() {
        return Err(Error::Parse("grid has no cells".into()));
    }
    let xmin = out.iter().map(|c| c.0).min().unwrap();
    let ymin = out.iter().map(|c| c.1).min().unwrap();
    for c in &mut out {
        c.0 -= xmin;
        c.1 -= ymin;
    }
    Ok(out)
}

/// Every moon polyomino with at most `max_cells` cells, normalized and
/// without repeats.
pub fn all_moons(max_cells: usize) -> Vec<MoonPolyomino> {
    let mut out = BTreeSet::new();
    let mut heights = Vec::new();
    compositions(max_cells, &mut heights, &mut |hs| {
        let mut spans = Vec::with_capacity(hs.len());
        offsets(hs, 0, &mut spans, &mut out);
    });
    out.into_iter().collect()
}

fn compositions(rest: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if !cur.is_empty() {
        f(cur);
    }
    for h in 1..=rest {
        cur.push(h);
        compositions(rest - h, cur, f);
        cur.pop();
    }
}

fn offsets(hs: &[usize], i: usize, spans: &mut Vec<Span>, out: &mut BTreeSet<MoonPolyomino>) {
    if i == hs.len() {
        if let Ok(m) = MoonPolyomino::new(0, spans.clone()) {
            out.insert(m.normalized());
        }
        return;
    }
    let h = hs[i] as i32;
    let range: Vec<i32> = if i == 0 {
        vec![0]
    } else {
        let (b, t) = spans[i - 1];
        // must nest with the previous column and share a row with it
        if h <= t - b + 1 {
            (b..=t - h + 1).collect()
        } else {
            (t - h + 1..=b).collect()
        }
    };
    for y in range {
        let s = (y, y + h - 1);
        if spans.iter().all(|&o| nested(o, s)) {
            spans.push(s);
            offsets(hs, i + 1, spans, out);
            spans.pop();
        }
    }
}
