//! Shared enumerators and oracles that do not use the library's machinery.
#![allow(dead_code)]

/// Every `w × h` matrix (`m[col][row]`) with entries at most `max_entry` and
/// total at most `max_mass`.
pub fn all_matrices(w: usize, h: usize, max_entry: u32, max_mass: usize) -> Vec<Vec<Vec<u32>>> {
    let n = w * h;
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, rest: usize, max_entry: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=max_entry.min(rest as u32) {
            cur[i] = v;
            rec(i + 1, rest - v as usize, max_entry, cur, out);
        }
        cur[i] = 0;
    }
    let mut flat = Vec::new();
    rec(0, max_mass, max_entry, &mut cur, &mut flat);
    for v in flat {
        out.push((0..w).map(|c| v[c * h..(c + 1) * h].to_vec()).collect());
    }
    out
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

/// Schensted row insertion. Column `i` of the permutation matrix holds the
/// value `perm[i]`; rows are returned bottom row first.
pub fn row_insertion(perm: &[usize]) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (step, &v) in perm.iter().enumerate() {
        let mut x = v as u32;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![step as u32 + 1]);
                break;
            }
            match p[r].iter().position(|&y| y > x) {
                Some(pos) => {
                    std::mem::swap(&mut p[r][pos], &mut x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push(step as u32 + 1);
                    break;
                }
            }
        }
    }
    (p, q)
}

/// Cells as `(x, y)` with entries, read from a grid given top row first.
/// `.` is outside the shape, digits are entries, `o` is an empty cell.
pub fn grid_cells(s: &str) -> Vec<((i32, i32), u32)> {
    let lines: Vec<&str> = s.lines().filter(|l| !l.trim().is_empty()).collect();
    let h = lines.len() as i32;
    let mut out = Vec::new();
    for (i, line) in lines.iter().enumerate() {
        for (x, ch) in line.chars().enumerate() {
            let v = match ch {
                '.' => continue,
                'o' => 0,
                d => d.to_digit(10).expect("grid digit"),
            };
            out.push(((x as i32, h - 1 - i as i32), v));
        }
    }
    out
}

/// Row sums bottom to top and column sums left to right of a cell list.
pub fn line_sums(cells: &[((i32, i32), u32)]) -> (Vec<u32>, Vec<u32>) {
    let w = cells.iter().map(|c| c.0 .0).max().map_or(0, |x| x + 1) as usize;
    let h = cells.iter().map(|c| c.0 .1).max().map_or(0, |y| y + 1) as usize;
    let (mut r, mut c) = (vec![0; h], vec![0; w]);
    for &((x, y), v) in cells {
        r[y as usize] += v;
        c[x as usize] += v;
    }
    (r, c)
}

/// Whether `q` may come after `p` in a chain of `kind`. The first letter
/// governs the vertical step (`n`/`s` strict, `N`/`S` weak), the second the
/// horizontal step (`e` strict, `E` weak).
pub fn chain_step(kind: &str, p: (i32, i32), q: (i32, i32)) -> bool {
    let b = kind.as_bytes();
    let dx = q.0 - p.0;
    let dy = if b[0].eq_ignore_ascii_case(&b'n') { q.1 - p.1 } else { p.1 - q.1 };
    let vert = if b[0].is_ascii_lowercase() { dy > 0 } else { dy >= 0 };
    let horiz = if b[1].is_ascii_lowercase() { dx > 0 } else { dx >= 0 };
    vert && horiz && p != q
}

/// Items a chain union is built from: `ne`/`se` split entries into unit
/// copies (an entry `e` may lie on `e` chains); `NE`/`SE` weigh cells by
/// their entry; the mixed kinds see 0-1 fillings only.
fn chain_items(cells: &[((i32, i32), u32)], kind: &str) -> Vec<((i32, i32), u32)> {
    let mut out = Vec::new();
    for &(c, v) in cells.iter().filter(|c| c.1 > 0) {
        match kind {
            "ne" | "se" => out.extend((0..v).map(|_| (c, 1))),
            "NE" | "SE" => out.push((c, v)),
            _ => {
                assert_eq!(v, 1, "{kind} needs a 0-1 filling");
                out.push((c, 1));
            }
        }
    }
    out
}

/// Largest total of a union of at most `k` chains of `kind`, by exhaustive
/// search over subsets and their chain covers.
pub fn greene_brute(cells: &[((i32, i32), u32)], kind: &str, k: usize) -> u32 {
    let items = chain_items(cells, kind);
    let n = items.len();
    assert!(n <= 14, "{n} items is too many for the subset oracle");
    let comparable = |a: usize, b: usize| chain_step(kind, items[a].0, items[b].0) || chain_step(kind, items[b].0, items[a].0);
    let full = 1usize << n;
    let mut is_chain = vec![true; full];
    for mask in 1..full {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        is_chain[mask] = is_chain[rest] && (0..n).filter(|&j| rest >> j & 1 == 1).all(|j| comparable(low, j));
    }
    let mut cover = vec![usize::MAX; full];
    cover[0] = 0;
    let mut best = 0;
    for mask in 1..full {
        let low = mask & mask.wrapping_neg();
        let mut sub = mask;
        while sub > 0 {
            if sub & low != 0 && is_chain[sub] && cover[mask ^ sub] != usize::MAX {
                cover[mask] = cover[mask].min(cover[mask ^ sub] + 1);
            }
            sub = (sub - 1) & mask;
        }
        if cover[mask] <= k {
            let w: u32 = (0..n).filter(|&j| mask >> j & 1 == 1).map(|j| items[j].1).sum();
            best = best.max(w);
        }
    }
    best
}

/// Longest chain of `kind`, by memoised search over cells.
pub fn longest_brute(cells: &[((i32, i32), u32)], kind: &str) -> u32 {
    let items: Vec<((i32, i32), u32)> = chain_items(cells, kind)
        .into_iter()
        .fold(Vec::new(), |mut acc: Vec<((i32, i32), u32)>, (c, w)| {
            // unit copies of one cell never chain with each other
            if !acc.iter().any(|a| a.0 == c) {
                acc.push((c, w));
            }
            acc
        });
    let n = items.len();
    let mut memo = vec![None; n];
    fn go(i: usize, items: &[((i32, i32), u32)], kind: &str, memo: &mut Vec<Option<u32>>) -> u32 {
        if let Some(v) = memo[i] {
            return v;
        }
        let tail = (0..items.len())
            .filter(|&j| chain_step(kind, items[i].0, items[j].0))
            .map(|j| go(j, items, kind, memo))
            .max()
            .unwrap_or(0);
        memo[i] = Some(items[i].1 + tail);
        memo[i].unwrap()
    }
    (0..n).map(|i| go(i, &items, kind, &mut memo)).max().unwrap_or(0)
}

/// Every moon polyomino with at most `max_cells` cells as column spans,
/// translated so that the lowest cell is in row 0.
pub fn moon_spans(max_cells: usize) -> Vec<Vec<(i32, i32)>> {
    fn nested(a: (i32, i32), b: (i32, i32)) -> bool {
        (a.0 <= b.0 && b.1 <= a.1) || (b.0 <= a.0 && a.1 <= b.1)
    }
    fn rows_convex(cols: &[(i32, i32)]) -> bool {
        let top = cols.iter().map(|c| c.1).max().unwrap();
        (0..=top).all(|y| {
            let xs: Vec<usize> = (0..cols.len()).filter(|&x| cols[x].0 <= y && y <= cols[x].1).collect();
            xs.windows(2).all(|w| w[1] == w[0] + 1)
        })
    }
    fn rec(cur: &mut Vec<(i32, i32)>, left: usize, max: i32, out: &mut Vec<Vec<(i32, i32)>>) {
        if !cur.is_empty() && cur.iter().any(|c| c.0 == 0) && rows_convex(cur) {
            out.push(cur.clone());
        }
        for lo in 0..max {
            for hi in lo..max {
                let size = (hi - lo + 1) as usize;
                if size > left || !cur.iter().all(|&c| nested(c, (lo, hi))) {
                    continue;
                }
                cur.push((lo, hi));
                rec(cur, left - size, max, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), max_cells, max_cells as i32, &mut out);
    out
}

/// Shapes of the recording tableau after each step of row insertion.
pub fn recording_shapes(perm: &[usize]) -> Vec<Vec<usize>> {
    (0..=perm.len())
        .map(|i| {
            let (p, _) = row_insertion(&perm[..i].iter().map(|&v| v).collect::<Vec<_>>());
            p.iter().map(Vec::len).collect()
        })
        .collect()
}

/// Permutations reachable from `w` by one elementary Knuth relation.
pub fn knuth_neighbours(w: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..w.len().saturating_sub(2) {
        let (a, b, c) = (w[i], w[i + 1], w[i + 2]);
        // y z x <-> y x z and x z y <-> z x y, with x < y < z
        let mut v = w.to_vec();
        if (c < a && a < b) || (b < a && a < c) {
            v.swap(i + 1, i + 2);
            out.push(v);
        } else if (a < c && c < b) || (b < c && c < a) {
            v.swap(i, i + 1);
            out.push(v);
        }
    }
    out
}

/// Conjugate of a partition given by its parts.
pub fn conjugate(parts: &[usize]) -> Vec<usize> {
    let n = parts.first().copied().unwrap_or(0);
    (0..n).map(|i| parts.iter().filter(|&&p| p > i).count()).collect()
}

/// Longest chain of `kind` whose bounding box lies inside `shape`: the best
/// over every sub-rectangle of the shape, found by testing all corner pairs.
pub fn longest_in_shape(cells: &[((i32, i32), u32)], shape: &[(i32, i32)], kind: &str) -> u32 {
    let inside = |a: (i32, i32), b: (i32, i32)| {
        let (x0, x1) = (a.0.min(b.0), a.0.max(b.0));
        let (y0, y1) = (a.1.min(b.1), a.1.max(b.1));
        (x0..=x1).all(|x| (y0..=y1).all(|y| shape.contains(&(x, y))))
    };
    let mut best = 0;
    for &a in shape {
        for &b in shape {
            if a.0 > b.0 || a.1 > b.1 || !inside(a, b) {
                continue;
            }
            let sub: Vec<((i32, i32), u32)> = cells
                .iter()
                .filter(|&&((x, y), _)| a.0 <= x && x <= b.0 && a.1 <= y && y <= b.1)
                .copied()
                .collect();
            best = best.max(longest_brute(&sub, kind));
        }
    }
    best
}
