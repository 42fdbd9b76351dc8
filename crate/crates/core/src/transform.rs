//! Promotion on fillings, column moves inside moon polyominoes, the Ferrers
//! normalisation, evacuation-type transforms and growth labels of stack
//! polyominoes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fillings::{ChainKind, Filling};
use crate::growth::{
    backward_block, expand_steps, offsets, rsk_invert_matrix, shape_of_matrix, standardize_matrix,
    GrowthDiagram, RskVariant,
};
use crate::partitions::Partition;
use crate::polyomino::{MaxRectangle, MoonPolyomino};
use crate::tableaux::{promotion, promotion_inverse, PartitionChain};

/// Which border chain promotion acts on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// Promote the top border, keep the right border. Column sums rotate.
    #[default]
    Top,
    /// Promote the right border, keep the top border. Row sums rotate.
    Right,
}

fn jbar_matrix(m: &[Vec<u32>], v: RskVariant, o: Orientation, inverse: bool) -> Result<Vec<Vec<u32>>> {
    let g = GrowthDiagram::from_matrix(m, v)?;
    let step = |c: &PartitionChain| if inverse { promotion_inverse(c) } else { promotion(c) };
    let (p, q) = match o {
        Orientation::Top => (g.p_chain(), step(&g.q_chain())?),
        Orientation::Right => (step(&g.p_chain())?, g.q_chain()),
    };
    rsk_invert_matrix(&p, &q, v)
}

/// Promotion on a rectangular filling: the right border stays, the top
/// border is promoted. Column sums rotate one step to the left.
pub fn jbar(f: &Filling, v: RskVariant) -> Result<Filling> {
    jbar_oriented(f, v, Orientation::Top)
}

/// Inverse of [`jbar`].
pub fn jbar_inverse(f: &Filling, v: RskVariant) -> Result<Filling> {
    jbar_inverse_oriented(f, v, Orientation::Top)
}

pub fn jbar_oriented(f: &Filling, v: RskVariant, o: Orientation) -> Result<Filling> {
    f.with_matrix(&jbar_matrix(&f.matrix()?, v, o, false)?)
}

pub fn jbar_inverse_oriented(f: &Filling, v: RskVariant, o: Orientation) -> Result<Filling> {
    f.with_matrix(&jbar_matrix(&f.matrix()?, v, o, true)?)
}

/// Spreads every row, and every column except the first, into as many rows
/// and columns as its mass; the first column keeps its cells but its entries
/// land in separate rows.
pub fn partial_standardize(f: &Filling, v: RskVariant) -> Result<Filling> {
    let s = standardize_matrix(&f.matrix()?, v)?;
    let n = *s.ry.last().unwrap();
    if n == 0 {
        return Err(Error::Filling("an empty filling standardises to an empty diagram".into()));
    }
    let first = (0..n)
        .map(|r| (0..s.cx[1]).filter(|&c| s.crosses[c][r]).count() as u32)
        .collect();
    let mut m = vec![first];
    m.extend(s.crosses[s.cx[1]..].iter().map(|c| c.iter().map(|&b| u32::from(b)).collect()));
    Filling::from_matrix(&m)
}

fn check_rect(f: &Filling, r: &MaxRectangle) -> Result<()> {
    let p = f.poly();
    let inside = (r.cols.0..=r.cols.1)
        .all(|x| p.span(x).is_some_and(|(b, t)| b <= r.rows.0 && r.rows.1 <= t));
    if r.cols.0 > r.cols.1 || r.rows.0 > r.rows.1 || !inside {
        return Err(Error::Polyomino(format!(
            "columns {}..{} and rows {}..{} do not form a rectangle inside the polyomino",
            r.cols.0, r.cols.1, r.rows.0, r.rows.1
        )));
    }
    Ok(())
}

fn apply_in_rect(f: &Filling, r: &MaxRectangle, v: RskVariant, inverse: bool) -> Result<Filling> {
    check_rect(f, r)?;
    let m = jbar_matrix(&f.rect_matrix(r), v, Orientation::Top, inverse)?;
    let mut g = f.clone();
    for (i, col) in m.iter().enumerate() {
        for (j, &e) in col.iter().enumerate() {
            g.set(r.cols.0 + i as i32, r.rows.0 + j as i32, e)?;
        }
    }
    Ok(g)
}

/// [`jbar`] applied to the entries inside `r`; the shape does not change.
pub fn jbar_rect(f: &Filling, r: &MaxRectangle, v: RskVariant) -> Result<Filling> {
    apply_in_rect(f, r, v, false)
}

/// [`jbar_inverse`] applied to the entries inside `r`.
pub fn jbar_inverse_rect(f: &Filling, r: &MaxRectangle, v: RskVariant) -> Result<Filling> {
    apply_in_rect(f, r, v, true)
}

/// Moves column `from` to position `to`, shifting the columns in between by
/// one. Cells travel with their columns.
fn relocate_column(f: &Filling, from: i32, to: i32) -> Result<Filling> {
    let x0 = f.poly().x0();
    let (a, b) = ((from - x0) as usize, (to - x0) as usize);
    let sigma: Vec<usize> = (0..f.poly().width())
        .map(|i| match i {
            _ if i == a => b,
            _ if a < b && a < i && i <= b => i - 1,
            _ if b < a && b <= i && i < a => i + 1,
            _ => i,
        })
        .collect();
    f.permute_columns(&sigma)
}

fn column_fills(f: &Filling, x: i32, r: &MaxRectangle) -> Result<()> {
    if f.poly().span(x) != Some(r.rows) {
        return Err(Error::Precondition(format!(
            "column {x} is not exactly as tall as the rectangle over rows {}..{}",
            r.rows.0, r.rows.1
        )));
    }
    Ok(())
}

/// Moves the first column of `r` to the end of `r` and refills `r` with
/// [`jbar`] of its old entries. The first column must be exactly as tall as
/// `r`; the parts of the other columns outside `r` shift with them.
pub fn rect_move(f: &Filling, r: &MaxRectangle, v: RskVariant) -> Result<Filling> {
    check_rect(f, r)?;
    column_fills(f, r.cols.0, r)?;
    let m = jbar_matrix(&f.rect_matrix(r), v, Orientation::Top, false)?;
    let mut g = relocate_column(f, r.cols.0, r.cols.1)?;
    g.write_rect(r, &Filling::from_matrix(&m)?)?;
    Ok(g)
}

/// Inverse of [`rect_move`]: last column of `r` to the front, [`jbar_inverse`]
/// inside `r`.
pub fn rect_move_inverse(f: &Filling, r: &MaxRectangle, v: RskVariant) -> Result<Filling> {
    check_rect(f, r)?;
    column_fills(f, r.cols.1, r)?;
    let m = jbar_matrix(&f.rect_matrix(r), v, Orientation::Top, true)?;
    let mut g = relocate_column(f, r.cols.1, r.cols.0)?;
    g.write_rect(r, &Filling::from_matrix(&m)?)?;
    Ok(g)
}

fn rectangle_of(p: &MoonPolyomino, x: i32) -> Result<MaxRectangle> {
    p.rectangle_of_column(x)
        .ok_or_else(|| Error::Precondition(format!("there is no column {x}")))
}

/// Columns that start their maximal rectangle and are strictly shorter than
/// some column to their right.
pub fn movable_columns(p: &MoonPolyomino) -> Vec<i32> {
    p.columns()
        .filter(|&x| {
            let r = p.rectangle_of_column(x).expect("every column has a rectangle");
            r.cols.0 == x && (x..=r.cols.1).any(|c| p.height_of(c) > p.height_of(x))
        })
        .collect()
}

/// Moves column `c1` to the end of the maximal rectangle of its height,
/// applying [`jbar`] to that rectangle.
pub fn moon_move(f: &Filling, c1: i32, v: RskVariant) -> Result<Filling> {
    let r = rectangle_of(f.poly(), c1)?;
    if r.cols.0 != c1 {
        return Err(Error::Precondition(format!(
            "column {c1} is not the first column of its maximal rectangle (which starts at {})",
            r.cols.0
        )));
    }
    if r.cols.1 == c1 {
        return Err(Error::Precondition(format!("column {c1} is not contained in a column to its right")));
    }
    rect_move(f, &r, v)
}

/// Inverse of [`moon_move`]: `c2` is the last column of its maximal
/// rectangle and goes back to the front.
pub fn moon_move_inverse(f: &Filling, c2: i32, v: RskVariant) -> Result<Filling> {
    let r = rectangle_of(f.poly(), c2)?;
    if r.cols.1 != c2 || r.cols.0 == c2 {
        return Err(Error::Precondition(format!(
            "column {c2} is not the last column of a maximal rectangle with two or more columns"
        )));
    }
    rect_move_inverse(f, &r, v)
}

/// Sorts columns into weakly decreasing height by moving the leftmost
/// movable column until none is left.
pub fn sort_columns(f: &Filling, v: RskVariant) -> Result<Filling> {
    let mut g = f.clone();
    while let Some(&x) = movable_columns(g.poly()).first() {
        g = moon_move(&g, x, v)?;
    }
    Ok(g)
}

/// Maps a filling of a moon polyomino to a filling of the Ferrers shape with
/// the same content, keeping the kind's Greene shapes on every maximal
/// rectangle and the total mass.
pub fn to_ferrers(f: &Filling, kind: ChainKind) -> Result<Filling> {
    if !matches!(kind, ChainKind::ne | ChainKind::NE | ChainKind::nE | ChainKind::Ne) {
        return Err(Error::Precondition(format!("to_ferrers supports ne, NE, nE and Ne, not {kind}")));
    }
    let g = sort_columns(f, kind.greene_variant().0)?.reflect();
    let g = sort_columns(&g, kind.reflected().greene_variant().0)?.reflect().normalized();
    debug_assert!(g.poly().is_ferrers());
    Ok(g)
}

/// Reverses the column order of a standard filling.
pub fn reverse_columns(f: &Filling) -> Result<Filling> {
    if !f.is_standard() {
        return Err(Error::Precondition("reverse_columns needs a standard filling".into()));
    }
    Ok(f.reverse_columns())
}

fn require_ferrers(f: &Filling) -> Result<()> {
    if !f.poly().is_ferrers() {
        return Err(Error::Precondition("the filling is not on a Ferrers shape".into()));
    }
    Ok(())
}

/// Applies [`jbar_inverse`] to the rectangle spanning all columns, then to the
/// one spanning all columns but the first, and so on. The result lives on
/// the mirror image of the Ferrers shape.
pub fn ev_t(f: &Filling, v: RskVariant) -> Result<Filling> {
    require_ferrers(f)?;
    let x0 = f.poly().x0();
    let last = x0 + f.poly().width() as i32 - 1;
    let mut g = f.clone();
    for k in x0..last {
        let span = g.poly().span(last).expect("the last column exists");
        g = rect_move_inverse(&g, &MaxRectangle { cols: (k, last), rows: span }, v)?;
    }
    Ok(g)
}

/// Transposes every border label of a Ferrers filling and rebuilds the
/// filling from the transposed labels with the conjugate variant.
pub fn e_transform(f: &Filling, v: RskVariant) -> Result<Filling> {
    require_ferrers(f)?;
    let labels = stack_growth_labels(f, v)?.transpose();
    stack_growth_reconstruct(&labels, f.poly(), v.conjugate())
}

/// One corner on the upper-right border of a stack polyomino.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StackCorner {
    pub x: i32,
    pub y: i32,
    /// One partition per possible left edge, narrowest rectangle first.
    pub labels: Vec<Partition>,
}

/// Labels of the upper-right border of a stack polyomino, from the left end
/// of the top row to the bottom-right corner.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StackGrowthLabels {
    pub corners: Vec<StackCorner>,
}

impl StackGrowthLabels {
    /// All partitions in border order, tuples expanded.
    pub fn flatten(&self) -> Vec<Partition> {
        self.corners.iter().flat_map(|c| c.labels.iter().cloned()).collect()
    }

    pub fn transpose(&self) -> StackGrowthLabels {
        let corners = self
            .corners
            .iter()
            .map(|c| StackCorner { x: c.x, y: c.y, labels: c.labels.iter().map(Partition::transpose).collect() })
            .collect();
        StackGrowthLabels { corners }
    }

    /// One corner per line: `x y: p1 p2 ...`.
    pub fn to_lines(&self) -> String {
        self.to_string()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut corners = Vec::new();
        for (n, line) in s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let bad = || Error::Parse(format!("line {}: expected `x y: partitions`", n + 1));
            let (pos, parts) = line.split_once(':').ok_or_else(bad)?;
            let mut xy = pos.split_whitespace().map(str::parse::<i32>);
            let (Some(Ok(x)), Some(Ok(y)), None) = (xy.next(), xy.next(), xy.next()) else {
                return Err(bad());
            };
            let labels = parts.split_whitespace().map(str::parse).collect::<Result<Vec<Partition>>>()?;
            if labels.is_empty() {
                return Err(bad());
            }
            corners.push(StackCorner { x, y, labels });
        }
        Ok(StackGrowthLabels { corners })
    }
}

impl fmt::Display for StackGrowthLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.corners {
            let l: Vec<String> = c.labels.iter().map(|p| p.to_string()).collect();
            writeln!(f, "{} {}: {}", c.x, c.y, l.join(" "))?;
        }
        Ok(())
    }
}

fn row_span(p: &MoonPolyomino, y: i32) -> (i32, i32) {
    p.row_span(y).expect("rows of a moon polyomino are non-empty")
}

/// Corners of the upper-right border of a stack polyomino with the size of
/// their label tuples.
pub fn stack_border(p: &MoonPolyomino) -> Result<Vec<(i32, i32, usize)>> {
    if !p.is_stack() {
        return Err(Error::Precondition("the polyomino is not a stack polyomino".into()));
    }
    let (ymin, ymax) = (p.ymin(), p.ymax());
    let (lt, rt) = row_span(p, ymax);
    let mut out: Vec<(i32, i32, usize)> = (lt..=rt + 1).map(|x| (x, ymax + 1, 1)).collect();
    for y in (ymin..=ymax).rev() {
        let (l, r) = row_span(p, y);
        if y == ymin {
            out.push((r + 1, y, 1));
            break;
        }
        let (lb, rb) = row_span(p, y - 1);
        out.push((r + 1, y, (l - lb) as usize + 1));
        out.extend((r + 2..=rb + 1).map(|x| (x, y, 1)));
    }
    Ok(out)
}

/// Greene shape of the rectangle with columns `a..x` (exclusive) and the
/// rows below `y`.
fn corner_shape(f: &Filling, a: i32, x: i32, y: i32, v: RskVariant) -> Result<Partition> {
    let ymin = f.poly().ymin();
    if a >= x || y <= ymin {
        return Ok(Partition::empty());
    }
    let m: Vec<Vec<u32>> = (a..x).map(|c| (ymin..y).map(|r| f.get(c, r)).collect()).collect();
    shape_of_matrix(&m, v)
}

/// Growth labels of a filling of a stack polyomino. A corner below an
/// indented row carries one partition for each possible left edge of the
/// rectangle below and to its left.
pub fn stack_growth_labels(f: &Filling, v: RskVariant) -> Result<StackGrowthLabels> {
    let p = f.poly();
    let border = stack_border(p)?;
    let mut corners = Vec::with_capacity(border.len());
    for (x, y, n) in border {
        let left = if y > p.ymin() { row_span(p, y - 1).0 } else { x };
        let labels = (1..=n)
            .map(|j| corner_shape(f, left + (n - j) as i32, x, y, v))
            .collect::<Result<Vec<_>>>()?;
        corners.push(StackCorner { x, y, labels });
    }
    Ok(StackGrowthLabels { corners })
}

fn at_corner(c: &StackCorner, e: Error) -> Error {
    Error::Chain(format!("corner ({}, {}): {e}", c.x, c.y))
}

fn check_border_steps(labels: &StackGrowthLabels, v: RskVariant) -> Result<()> {
    let (qm, pm) = (v.q_mode(), v.p_mode());
    let mut prev: Option<(&StackCorner, &Partition)> = None;
    for c in &labels.corners {
        for (j, lab) in c.labels.iter().enumerate() {
            if let Some((pc, pl)) = prev {
                let ok = if j > 0 || pc.y == c.y {
                    qm.step_ok(pl, lab)
                } else {
                    pm.step_ok(lab, pl)
                };
                if !ok {
                    let what = if j > 0 || pc.y == c.y { "adding" } else { "deleting" };
                    return Err(at_corner(
                        c,
                        Error::Chain(format!("{pl} to {lab} is not a {qm:?}/{pm:?} {what} step")),
                    ));
                }
            }
            prev = Some((c, lab));
        }
    }
    let flat = labels.flatten();
    if !flat.first().is_some_and(Partition::is_empty) || !flat.last().is_some_and(Partition::is_empty) {
        return Err(Error::Chain("the border must start and end with ∅".into()));
    }
    Ok(())
}

/// Inverts one row of a standardised diagram: `top` labels its upper edge
/// from the left end, `below` is the label under its right end. Returns the
/// labels of the lower edge and the row's entries.
fn invert_row(top: &[Partition], below: &Partition, v: RskVariant) -> Result<(Vec<Partition>, Vec<u32>)> {
    let qe = expand_steps(top, v.q_mode())?;
    let re = expand_steps(&[below.clone(), top.last().unwrap().clone()], v.p_mode())?;
    let (lab, crosses) = backward_block(&qe, &re)?;
    if lab[0].iter().any(|l| !l.is_empty()) {
        return Err(Error::Chain("the left end of the row is not ∅".into()));
    }
    let cx = offsets(top.windows(2).map(|w| w[1].size() - w[0].size()));
    let bottom = cx.iter().map(|&i| lab[i][0].clone()).collect();
    let mut entries = vec![0u32; top.len() - 1];
    let mut units = Vec::new();
    for (c, e) in entries.iter_mut().enumerate() {
        let cols: Vec<usize> = (cx[c]..cx[c + 1]).filter(|&i| crosses[i].iter().any(|&b| b)).collect();
        *e = cols.len() as u32;
        let expected: Vec<usize> = if v.columns_ne() {
            (cx[c + 1] - cols.len()..cx[c + 1]).collect()
        } else {
            (cx[c]..cx[c] + cols.len()).collect()
        };
        if cols != expected {
            return Err(Error::Chain("the labels do not come from a standardised filling".into()));
        }
        units.extend(cols.into_iter().map(|i| crosses[i].iter().position(|&b| b).unwrap()));
    }
    let monotone = units.windows(2).all(|w| if v.rows_ne() { w[0] < w[1] } else { w[0] > w[1] });
    if !monotone {
        return Err(Error::Chain("the labels do not come from a standardised filling".into()));
    }
    Ok((bottom, entries))
}

/// Rebuilds a filling of the stack polyomino `s` from its border labels,
/// row by row from the top, recovering jeu de taquin preimages under
/// indented rows.
pub fn stack_growth_reconstruct(labels: &StackGrowthLabels, s: &MoonPolyomino, v: RskVariant) -> Result<Filling> {
    let border = stack_border(s)?;
    for (i, &(x, y, n)) in border.iter().enumerate() {
        match labels.corners.get(i) {
            Some(c) if (c.x, c.y, c.labels.len()) == (x, y, n) => {}
            Some(c) => {
                return Err(Error::Chain(format!(
                    "corner {} is ({}, {}) with {} labels, expected ({x}, {y}) with {n}",
                    i,
                    c.x,
                    c.y,
                    c.labels.len()
                )))
            }
            None => return Err(Error::Chain(format!("missing label for corner ({x}, {y})"))),
        }
    }
    if labels.corners.len() != border.len() {
        return Err(Error::Chain(format!("{} corners given, the border has {}", labels.corners.len(), border.len())));
    }
    check_border_steps(labels, v)?;
    let corner = |x: i32, y: i32| -> &StackCorner {
        labels.corners.iter().find(|c| c.x == x && c.y == y).expect("border corners are present")
    };
    let (ymin, ymax) = (s.ymin(), s.ymax());
    let (lt, rt) = row_span(s, ymax);
    let mut q: Vec<Partition> = (lt..=rt + 1).map(|x| corner(x, ymax + 1).labels[0].clone()).collect();
    let mut f = Filling::empty(s.clone());
    for y in (ymin..=ymax).rev() {
        let (l, r) = row_span(s, y);
        let c = corner(r + 1, y);
        let (bottom, entries) = invert_row(&q, &c.labels[0], v).map_err(|e| at_corner(c, e))?;
        for (i, &e) in entries.iter().enumerate() {
            f.set(l + i as i32, y, e)?;
        }
        if y == ymin {
            if bottom.iter().any(|b| !b.is_empty()) {
                return Err(at_corner(c, Error::Chain("the bottom row does not close with ∅".into())));
            }
            break;
        }
        let mut seq = bottom;
        for lab in &c.labels[1..] {
            seq.push(lab.clone());
            let chain = PartitionChain::new(seq, v.q_mode()).map_err(|e| at_corner(c, e))?;
            seq = promotion_inverse(&chain).map_err(|e| at_corner(c, e))?.seq().to_vec();
        }
        let rb = row_span(s, y - 1).1;
        seq.extend((r + 2..=rb + 1).map(|x| corner(x, y).labels[0].clone()));
        q = seq;
    }
    if v.zero_one_only() && !f.is_zero_one() {
        return Err(Error::Chain(format!("{} needs a 0-1 filling", v.name())));
    }
    if &stack_growth_labels(&f, v)? != labels {
        return Err(Error::Chain("the labels are not realised by any filling".into()));
    }
    Ok(f)
}
