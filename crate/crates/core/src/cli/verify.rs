//! Named property suites. Every suite enumerates its instance universe in a
//! fixed order, checks instances in parallel and reports failures in
//! enumeration order, so reports are reproducible.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fillings::{count, enumerate, for_each_filling, ChainKind, CountQuery, Filling};
use crate::growth::{
    greene_oracle, rsk_correspond, rsk_invert, standardize, ungrow, GrowthDiagram, RskVariant,
};
use crate::knuth::{
    apply_knuth_move, differing_indices, dual_knuth_equivalent, entries_triangle, find_knuth_moves,
    knuth_equivalent, swap_entries, window_is_triangle,
};
use crate::partitions::Partition;
use crate::polyomino::{all_moons, MaxRectangle, MoonPolyomino, Span};
use crate::tableaux::{all_cell_chains, chain_to_tableau, evacuation, jdt_chain, ChainMode, PartitionChain};
use crate::transform::{
    ev_t, jbar, jbar_inverse, jbar_inverse_oriented, jbar_oriented, moon_move,
    moon_move_inverse, movable_columns, partial_standardize, reverse_columns, stack_growth_labels,
    stack_growth_reconstruct, to_ferrers, Orientation,
};

pub const SUITES: [&str; 12] = [
    "greene",
    "jakob",
    "jakob-weak",
    "commutation",
    "prop-chains",
    "lemma-commutation",
    "prop-equivalence",
    "prop-difference",
    "jdt-difference",
    "section6",
    "counterexamples",
    "roundtrips",
];

/// Failures kept in a report; the total is always counted.
pub const MAX_REPORTED: usize = 20;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    /// Cell cap for polyomino enumeration; each suite has its own default.
    pub max_cells: Option<usize>,
    /// Mass cap for arbitrary fillings; each suite has its own default.
    pub max_mass: Option<u32>,
    pub seed: u64,
    /// Size of randomised supplements.
    pub samples: usize,
}

impl VerifyConfig {
    pub fn new(seed: u64) -> Self {
        Self { max_cells: None, max_mass: None, seed, samples: 1000 }
    }

    fn resolve(&self, cells: usize, mass: u32) -> VerifyConfig {
        VerifyConfig {
            max_cells: Some(self.max_cells.unwrap_or(cells)),
            max_mass: Some(self.max_mass.unwrap_or(mass)),
            ..self.clone()
        }
    }

    fn cells(&self) -> usize {
        self.max_cells.unwrap_or(0)
    }

    fn mass(&self) -> u32 {
        self.max_mass.unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// The offending input, usually in grid text form.
    pub input: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub instances: u64,
    pub failure_count: u64,
    /// The first [`MAX_REPORTED`] failures.
    pub failures: Vec<Failure>,
    pub config: VerifyConfig,
    /// Only filled in on request, so that default reports are byte-identical.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u128>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0 && self.instances > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }

    pub fn csv_header() -> &'static str {
        "suite,status,instances,failures,max_cells,max_mass,seed,wall_ms"
    }

    pub fn to_csv_row(&self) -> String {
        let opt = |o: Option<String>| o.unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.suite,
            if self.passed() { "pass" } else { "fail" },
            self.instances,
            self.failure_count,
            opt(self.config.max_cells.map(|c| c.to_string())),
            opt(self.config.max_mass.map(|c| c.to_string())),
            self.config.seed,
            opt(self.wall_ms.map(|c| c.to_string())),
        )
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {} instances, {} failures", self.suite, self.instances, self.failure_count)?;
        if let Some(ms) = self.wall_ms {
            write!(f, " ({ms} ms)")?;
        }
        writeln!(f)?;
        for x in &self.failures {
            writeln!(f, "  {}", x.message)?;
            for line in x.input.lines() {
                writeln!(f, "    {line}")?;
            }
        }
        Ok(())
    }
}

type Checked = Vec<Failure>;

fn fail(input: impl fmt::Display, message: impl Into<String>) -> Checked {
    vec![Failure { input: input.to_string(), message: message.into() }]
}

/// Runs `check` on every item in parallel; failures keep item order.
fn run_all<T: Sync>(items: &[T], check: impl Fn(&T) -> Checked + Sync + Send) -> (u64, Vec<Failure>) {
    let out: Vec<Checked> = items.par_iter().map(check).collect();
    (items.len() as u64, out.into_iter().flatten().collect())
}

struct Tally {
    instances: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn new() -> Self {
        Tally { instances: 0, failures: Vec::new() }
    }

    fn add(&mut self, (n, f): (u64, Vec<Failure>)) {
        self.instances += n;
        self.failures.extend(f);
    }

    fn report(self, suite: &str, config: VerifyConfig) -> VerificationReport {
        let failure_count = self.failures.len() as u64;
        let mut failures = self.failures;
        failures.truncate(MAX_REPORTED);
        VerificationReport { suite: suite.into(), instances: self.instances, failure_count, failures, config, wall_ms: None }
    }
}

/// Runs a suite by name.
pub fn run_verify(suite: &str, config: &VerifyConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut r = match suite {
        "greene" => greene(config),
        "jakob" => jakob(config),
        "jakob-weak" => jakob_weak(config),
        "commutation" => commutation(config),
        "prop-chains" => prop_chains(config),
        "lemma-commutation" => lemma_commutation(config),
        "prop-equivalence" => prop_equivalence(config),
        "prop-difference" => prop_difference(config),
        "jdt-difference" => jdt_difference(config),
        "section6" => section6(config),
        "counterexamples" => counterexamples(config),
        "roundtrips" => roundtrips(config),
        _ => {
            return Err(Error::Precondition(format!(
                "unknown suite {suite:?}; available: {}, all",
                SUITES.join(", ")
            )))
        }
    }?;
    r.wall_ms = Some(start.elapsed().as_millis());
    Ok(r)
}

// ---------------------------------------------------------------- helpers

fn legal_variants(f: &Filling) -> Vec<RskVariant> {
    RskVariant::ALL.into_iter().filter(|v| !v.zero_one_only() || f.is_zero_one()).collect()
}

/// Kinds whose Greene numbers the growth diagrams of `v` carry.
fn kinds_of(v: RskVariant) -> Vec<ChainKind> {
    ChainKind::ALL.into_iter().filter(|k| k.greene_variant().0 == v).collect()
}

fn rect_fillings(w: usize, h: usize, q: &CountQuery) -> Vec<Filling> {
    enumerate(&MoonPolyomino::rectangle(w, h), q).expect("rectangle enumeration stays within caps")
}

/// Every partial filling (at most one cross per row and column) of a `w × h`
/// rectangle, generated directly.
pub fn partial_rect_fillings(w: usize, h: usize) -> Vec<Filling> {
    fn rec(c: usize, h: usize, used: &mut Vec<bool>, cur: &mut Vec<Vec<u32>>, out: &mut Vec<Filling>) {
        if c == cur.len() {
            out.push(Filling::from_matrix(cur).expect("non-empty"));
            return;
        }
        rec(c + 1, h, used, cur, out);
        for r in 0..h {
            if !used[r] {
                used[r] = true;
                cur[c][r] = 1;
                rec(c + 1, h, used, cur, out);
                cur[c][r] = 0;
                used[r] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(0, h, &mut vec![false; h], &mut vec![vec![0; h]; w], &mut out);
    out
}

fn zero_one_upto(mass: u32) -> CountQuery {
    CountQuery { max_mass: mass, ..CountQuery::zero_one() }
}

/// `m[cols][rows]` as a rectangular filling.
fn block(m: &[Vec<u32>], cols: std::ops::Range<usize>, rows: std::ops::Range<usize>) -> Filling {
    let sub: Vec<Vec<u32>> = m[cols].iter().map(|c| c[rows.clone()].to_vec()).collect();
    Filling::from_matrix(&sub).expect("blocks are non-empty")
}

fn err_to(f: &impl fmt::Display, what: &str, e: Error) -> Checked {
    fail(f, format!("{what}: {e}"))
}

/// Checks a boolean condition, recording `msg` against `f` when false.
macro_rules! ensure {
    ($out:expr, $cond:expr, $f:expr, $($msg:tt)+) => {
        if !$cond {
            $out.extend(fail($f, format!($($msg)+)));
        }
    };
}

macro_rules! tryf {
    ($e:expr, $f:expr, $what:expr) => {
        match $e {
            Ok(x) => x,
            Err(e) => return err_to($f, $what, e),
        }
    };
}

// ---------------------------------------------------------------- greene

fn greene_one(f: &Filling) -> Checked {
    let mut out = Vec::new();
    for kind in ChainKind::ALL {
        if kind.zero_one_only() && !f.is_zero_one() {
            continue;
        }
        let (v, transposed) = kind.greene_variant();
        let g = tryf!(GrowthDiagram::build(f, v), f, "growth");
        let shape = if transposed { g.shape().transpose() } else { g.shape().clone() };
        for k in 1..=(f.total() as usize).max(1) {
            let brute = tryf!(greene_oracle(f, kind, k), f, "oracle");
            ensure!(out, brute == shape.partial_sum(k), f, "{kind}, k={k}: oracle {brute}, growth {}", shape.partial_sum(k));
        }
    }
    out
}

fn random_filling(rng: &mut ChaCha8Rng, max_side: usize, max_mass: u32) -> Filling {
    let (w, h) = (rng.gen_range(1..=max_side), rng.gen_range(1..=max_side));
    let mut m = vec![vec![0u32; h]; w];
    for _ in 0..rng.gen_range(0..=max_mass) {
        m[rng.gen_range(0..w)][rng.gen_range(0..h)] += 1;
    }
    Filling::from_matrix(&m).expect("non-empty matrix")
}

/// Growth shapes against brute-force chain unions: every partial filling of
/// rectangles up to 4×4, plus random arbitrary fillings.
pub fn greene(config: &VerifyConfig) -> Result<VerificationReport> {
    let cfg = config.resolve(16, 8);
    let mut t = Tally::new();
    let mut partial = Vec::new();
    for w in 1..=4 {
        for h in 1..=4 {
            if w * h <= cfg.cells() {
                partial.extend(partial_rect_fillings(w, h));
            }
        }
    }
    t.add(run_all(&partial, greene_one));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let random: Vec<Filling> = (0..cfg.samples).map(|_| random_filling(&mut rng, 4, cfg.mass())).collect();
    t.add(run_all(&random, greene_one));
    Ok(t.report("greene", cfg))
}

// ---------------------------------------------------------------- jakob

type Census = BTreeMap<(u32, Vec<u32>), u64>;

fn ne_census(m: &MoonPolyomino) -> Result<Census> {
    let mut c = Census::new();
    let mut err = None;
    for_each_filling(m, &CountQuery::zero_one(), &mut |f| match f.longest_chain(ChainKind::ne) {
        Ok(l) => *c.entry((l, f.sums().0)).or_default() += 1,
        Err(e) => err = Some(e),
    })?;
    err.map_or(Ok(c), Err)
}

fn by_total(c: &Census) -> BTreeMap<(u32, u32), u64> {
    let mut out = BTreeMap::new();
    for ((l, rows), n) in c {
        *out.entry((rows.iter().sum::<u32>(), *l)).or_default() += n;
    }
    out
}

/// 0-1 census by longest ne-chain and row sums is the same for every column
/// order that gives a moon; by total and longest chain it depends only on
/// the content.
pub fn jakob(config: &VerifyConfig) -> Result<VerificationReport> {
    let cfg = config.resolve(9, 0);
    let moons = all_moons(cfg.cells());
    let census: Vec<Result<Census>> = moons.par_iter().map(ne_census).collect();
    let mut t = Tally::new();
    let mut by_spans: BTreeMap<Vec<Span>, Vec<usize>> = BTreeMap::new();
    let mut by_content: BTreeMap<Partition, Vec<usize>> = BTreeMap::new();
    for (i, m) in moons.iter().enumerate() {
        if let Err(e) = &census[i] {
            t.failures.extend(fail(m, format!("census: {e}")));
        }
        let mut s = m.spans().to_vec();
        s.sort_unstable();
        by_spans.entry(s).or_default().push(i);
        by_content.entry(m.content()).or_default().push(i);
    }
    t.instances = moons.len() as u64;
    let ok = |i: usize| census[i].as_ref().ok();
    for group in by_spans.values() {
        for &j in &group[1..] {
            if let (Some(a), Some(b)) = (ok(group[0]), ok(j)) {
                ensure!(t.failures, a == b, format!("{}\nvs\n{}", moons[group[0]], moons[j]), "(l, row sums) census differs between column orders");
            }
        }
    }
    for group in by_content.values() {
        for &j in &group[1..] {
            if let (Some(a), Some(b)) = (ok(group[0]), ok(j)) {
                ensure!(t.failures, by_total(a) == by_total(b), format!("{}\nvs\n{}", moons[group[0]], moons[j]), "(n, l) census differs for equal content");
            }
        }
    }
    Ok(t.report("jakob", cfg))
}

// ---------------------------------------------------------------- jakob-weak

fn movable(p: &MoonPolyomino) -> Vec<i32> {
    p.columns()
        .filter(|&x| p.rectangle_of_column(x).is_some_and(|r| r.cols.0 == x && r.cols.1 > x))
        .collect()
}

fn moon_move_one(f: &Filling) -> Checked {
    let mut out = Vec::new();
    let (rows, cols) = f.sums();
    let x0 = f.poly().x0();
    for c1 in movable(f.poly()) {
        let c2 = f.poly().rectangle_of_column(c1).expect("movable").cols.1;
        for v in legal_variants(f) {
            let g = tryf!(moon_move(f, c1, v), f, &format!("move {c1} under {v}"));
            let (grows, gcols) = g.sums();
            let (a, b) = ((c1 - x0) as usize, (c2 - x0) as usize);
            let mut want = cols.clone();
            want[a..=b].rotate_left(1);
            ensure!(out, grows == rows, f, "move {c1} under {v}: row sums {grows:?} != {rows:?}");
            ensure!(out, gcols == want, f, "move {c1} under {v}: column sums {gcols:?} != {want:?}");
            for kind in kinds_of(v) {
                let before = tryf!(f.lambda_by_size(kind), f, "Λ");
                let after = tryf!(g.lambda_by_size(kind), &g, "Λ");
                ensure!(out, before == after, f, "move {c1} under {v}: Λ for {kind} changes");
            }
            let back = tryf!(moon_move_inverse(&g, c2, v), &g, "inverse move");
            ensure!(out, &back == f, f, "move {c1} under {v}: inverse gives\n{back}");
        }
    }
    out
}

fn ferrers_class(kind: ChainKind, mass: u32) -> CountQuery {
    if kind.zero_one_only() {
        zero_one_upto(mass)
    } else {
        CountQuery::arbitrary(mass)
    }
}

const FERRERS_KINDS: [ChainKind; 4] = [ChainKind::ne, ChainKind::NE, ChainKind::nE, ChainKind::Ne];

/// to_ferrers maps the fillings of `m` bijectively onto those of the Ferrers
/// shape of the same content, keeping Λ and the total.
fn ferrers_one(m: &MoonPolyomino, mass: u32) -> Checked {
    let mut out = Vec::new();
    let target = MoonPolyomino::ferrers(&m.content()).expect("content is a partition");
    for kind in FERRERS_KINDS {
        let q = ferrers_class(kind, mass);
        let fs = enumerate(m, &q).expect("within caps");
        let mut images = HashSet::new();
        let mut census_m: BTreeMap<(BTreeMap<(usize, usize), Partition>, u32), u64> = BTreeMap::new();
        for f in &fs {
            let g = tryf!(to_ferrers(f, kind), f, &format!("to_ferrers {kind}"));
            ensure!(out, g.poly() == &target, f, "{kind}: image lies on\n{}", g.poly());
            let (lf, lg) = (tryf!(f.lambda_by_size(kind), f, "Λ"), tryf!(g.lambda_by_size(kind), &g, "Λ"));
            ensure!(out, lf == lg && f.total() == g.total(), f, "{kind}: Λ or total changes, image\n{g}");
            *census_m.entry((lf, f.total())).or_default() += 1;
            images.insert(g);
        }
        ensure!(out, images.len() == fs.len(), m, "{kind}: to_ferrers is not injective");
        let mut census_f: BTreeMap<(BTreeMap<(usize, usize), Partition>, u32), u64> = BTreeMap::new();
        for f in enumerate(&target, &q).expect("within caps") {
            let l = tryf!(f.lambda_by_size(kind), &f, "Λ");
            *census_f.entry((l, f.total())).or_default() += 1;
        }
        ensure!(out, census_m == census_f, m, "{kind}: (Λ, n) census differs from the Ferrers shape");
    }
    out
}

/// moon_move keeps Λ and row sums, rotates column sums and is inverted by
/// the mirrored move; to_ferrers is a Λ-preserving bijection.
pub fn jakob_weak(config: &VerifyConfig) -> Result<VerificationReport> {
    let cfg = config.resolve(8, 3);
    let moons = all_moons(cfg.cells());
    let mut fillings = Vec::new();
    for m in &moons {
        fillings.extend(enumerate(m, &CountQuery::arbitrary(cfg.mass()))?);
    }
    let mut t = Tally::new();
    t.add(run_all(&fillings, moon_move_one));
    t.add(run_all(&moons, |m| ferrers_one(m, cfg.mass())));
    Ok(t.report("jakob-weak", cfg))
}

// ---------------------------------------------------------------- commutation

/// Where column `x` sits after the move that sends `c` to the end of `r`.
fn tracked(x: i32, c: i32, r: &MaxRectangle) -> i32 {
    match x {
        _ if x == c => r.cols.1,
        _ if c < x && x <= r.cols.1 => x - 1,
        _ => x,
    }
}

fn move_pair(f: &Filling, a: i32, b: i32, v: RskVariant) -> Result<Filling> {
    let r = f.poly().rectangle_of_column(a).expect("movable columns have rectangles");
    let g = moon_move(f, a, v)?;
    moon_move(&g, tracked(b, a, &r), v)
}

fn commutation_one(f: &Filling) -> Checked {
    let mut out = Vec::new();
    let cols = movable_columns(f.poly());
    for v in legal_variants(f) {
        for (i, &a) in cols.iter().enumerate() {
            for &b in &cols[i + 1..] {
                let ab = tryf!(move_pair(f, a, b, v), f, &format!("{v}: moving {a} then {b}"));
                let ba = tryf!(move_pair(f, b, a, v), f, &format!("{v}: moving {b} then {a}"));
                ensure!(out, ab == ba, f, "{v}: moving columns {a} and {b} depends on the order");
            }
        }
    }
    out
}

/// Promotion on two rectangles whose first columns are full columns of the
/// polyomino, each moving its first column to its end, gives the same
/// result in either order.
pub fn commutation(config: &VerifyConfig) -> Result<VerificationReport> {
    let cfg = config.resolve(8, 3);
    let mut fillings = Vec::new();
    for m in all_moons(cfg.cells()) {
        if movable_columns(&m).len() >= 2 {
            fillings.extend(enumerate(&m, &CountQuery::arbitrary(cfg.mass()))?);
        }
    }
    let mut t = Tally::new();
    t.add(run_all(&fillings, commutation_one));
    Ok(t.report("commutation", cfg))
}

// ---------------------------------------------------------------- prop-chains

fn prop_chains_one(f: &Filling) -> Checked {
    let mut out = Vec::new();
    let (w, h) = f.dims();
    let m = f.matrix().expect("rectangle");
    let (rows, cols) = f.sums();
    for v in legal_variants(f) {
        let g = tryf!(jbar(f, v), f, "jbar");
        let gm = g.matrix().expect("rectangle");
        let (grows, gcols) = g.sums();
        let mut want = cols.clone();
        want.rotate_left(1);
        ensure!(out, grows == rows && gcols == want, f, "{v}: sums {grows:?}/{gcols:?}");
        for a in 1..w {
            for b in a + 1..=w {
                let eq = tryf!(dual_knuth_equivalent(&block(&m, a..b, 0..h), &block(&gm, a - 1..b - 1, 0..h), v), f, "dual Knuth");
                ensure!(out, eq, f, "{v}: columns {a}..{b} not dual Knuth equivalent to {}..{} of the image", a - 1, b - 1);
            }
        }
        for a in 0..h {
            for b in a + 1..=h {
                let eq = tryf!(knuth_equivalent(&block(&m, 0..w, a..b), &block(&gm, 0..w, a..b), v), f, "Knuth");
                ensure!(out, eq, f, "{v}: rows {a}..{b} not Knuth equivalent");
            }
        }
    }
    out
}

fn small_rectangles(max_cells: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for w in 1..=4 {
        for h in 1..=4 {
            if w * h <= max_cells {
                out.push((w, h));
            }
        }
    }
    out
}

/// Column blocks of a filling and its promotion are dual Knuth equivalent
/// after a shift by one; row blocks are Knuth equivalent.
pub fn prop_chains(config: &VerifyConfig) -> Result<VerificationReport> {
    let cfg = config.resolve(12, 0);
    let mut fillings = Vec::new();
    for (w, h) in small_rectangles(cfg.cells()) {
        fillings.extend(rect_fillings(w, h, &CountQuery::zero_one()));
    }
    let mut t = Tally::new();
    t.add(run_all(&fillings, prop_chains_one));
    Ok(t.report("prop-chains", cfg))
}

// ---------------------------------------------------------------- lemma-commutation

/// std(jbar(π)) = std(jbar(π̄)) for the partial standardisation π̄.
pub fn lemma_commutation(config: &VerifyConfig) -> Result<VerificationReport> {
    let cfg = config.resolve(6, 4);
    let mut fillings = Vec::new();
    for (w, h) in [(2, 2), (2, 3), (3, 2)] {
        if w * h <= cfg.cells() {
            fillings.extend(rect_fillings(w, h, &CountQuery::arbitrary(cfg.mass())).into_iter().filter(|f| f.total() > 0));
        }
    }
    let mut t = Tally::new();
    t.add(run_all(&fillings, |f| {
        let mut out = Vec::new();
        for v in [RskVariant::Rsk, RskVariant::DualRskPrime] {
            let a = tryf!(jbar(f, v).and_then(|g| standardize(&g, v)), f, "std(jbar)");
            let bar = tryf!(partial_standardize(f, v), f, "partial standardisation");
            let b = tryf!(jbar(&bar, v).and_then(|g| standardize(&g, v)), f, "std(jbar(bar))");
            ensure!(out, a == b, f, "{v}: std(jbar(π))\n{a}differs from std(jbar(π̄))\n{b}");
        }
        out
    }));
    Ok(t.report("lemma-commutation", cfg))
}

// ---------------------------------------------------------------- prop-equivalence

type Mat = Vec<Vec<u32>>;

fn transpose_mat(m: &[Vec<u32>]) -> Mat {
    let h = m[0].len();
    (0..h).map(|j| m.iter().map(|c| c[j]).collect()).collect()
}

/// For fillings α|β|δ with a three-column β, the chain of β' in jbar
/// depends only on α, δ and the chain of β. `rows` uses row blocks and top
/// borders instead.
fn equivalence_classes(fillings: &[Filling], rows: bool) -> Checked {
    type Key = (RskVariant, Mat, Mat, usize, PartitionChain);
    let per: Vec<Vec<(Key, PartitionChain, Filling)>> = fillings
        .par_iter()
        .map(|f| {
            let mut v_out = Vec::new();
            let m = f.matrix().expect("rectangle");
            let (w, h) = f.dims();
            for v in legal_variants(f) {
                let Ok(g) = jbar(f, v) else { continue };
                let gm = g.matrix().expect("rectangle");
                if rows {
                    for a in 1..h.saturating_sub(2) {
                        let beta = block(&m, 0..w, a..a + 3);
                        let beta2 = block(&gm, 0..w, a..a + 3);
                        let key_m = transpose_mat(&m);
                        let key = (v, key_m[..a].to_vec(), key_m[a + 3..].to_vec(), a, rsk_correspond(&beta, v).unwrap().1);
                        v_out.push((key, rsk_correspond(&beta2, v).unwrap().1, f.clone()));
                    }
                } else {
                    for a in 1..w.saturating_sub(2) {
                        let beta = block(&m, a..a + 3, 0..h);
                        let beta2 = block(&gm, a - 1..a + 2, 0..h);
                        let key = (v, m[..a].to_vec(), m[a + 3..].to_vec(), a, rsk_correspond(&beta, v).unwrap().0);
                        v_out.push((key, rsk_correspond(&beta2, v).unwrap().0, f.clone()));
                    }
                }
            }
            v_out
        })
        .collect();
    let mut seen: BTreeMap<String, (PartitionChain, Filling)> = BTreeMap::new();
    let mut out = Vec::new();
    for (key, val, f) in per.into_iter().flatten() {
        let k = format!("{:?}|{}|{:?}|{:?}|{}", key.0, key.3, key.1, key.2, key.4);
        match seen.get(&k) {
            Some((v0, f0)) if v0 != &val => {
                out.extend(fail(format!("{f0}vs\n{f}"), format!("{:?}: block at {} not {}equivalent after jbar", key.0, key.3, if rows { "dual Knuth " } else { "Knuth " })));
            }
            Some(_) => {}
            None => {
                seen.insert(k, (val, f));
            }
        }
    }
    out
}

/// All 0-1 fillings up to 12 cells, partial fillings beyond.
fn blocks_universe(w: usize, h: usize) -> Vec<Filling> {
    if w * h <= 12 {
        rect_fillings(w, h, &CountQuery::zero_one())
    } else {
        partial_rect_fillings(w, h)
    }
}

/// Knuth-equivalent middle blocks stay Knuth equivalent under jbar, with the
/// block shifted one column to the left; the dual statement for row blocks.
pub fn prop_equivalence(config: &VerifyConfig) -> Result<VerificationReport> {
    let cfg = config.resolve(20, 0);
    let mut fillings = Vec::new();
    for w in 4..=5 {
        for h in 1..=4 {
            if w * h <= cfg.cells() {
                fillings.extend(blocks_universe(w, h));
            }
        }
    }
    let mut tall = Vec::new();
    for w in 1..=4 {
        for h in 4..=5 {
            if w * h <= cfg.cells() {
                tall.extend(blocks_universe(w, h));
            }
        }
    }
    let mut t = Tally::new();
    t.instances = (fillings.len() + tall.len()) as u64;
    t.failures.extend(equivalence_classes(&fillings, false));
    t.failures.extend(equivalence_classes(&tall, true));
    Ok(t.report("prop-equivalence", cfg))
}

// ---------------------------------------------------------------- prop-difference

fn perm_of(f: &Filling) -> String {
    let m = f.matrix().expect("rectangle");
    let s: Vec<String> = m.iter().map(|c| (c.iter().position(|&e| e == 1).unwrap() + 1).to_string()).collect();
    s.join(",")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (1..=n).permutations(n).collect()
}

fn q_chain(f: &Filling) -> PartitionChain {
    rsk_correspond(f, RskVariant::Rsk).expect("permutations grow").1
}

fn p_chain(f: &Filling) -> PartitionChain {
    rsk_correspond(f, RskVariant::Rsk).expect("permutations grow").0
}

/// Forward: one Knuth move changes exactly one top-border partition, next
/// to the move, with triangle-shaped windows on both sides. Backward:
/// Knuth-equivalent permutations whose top borders differ once, with
/// triangle windows there, are one move apart.
fn difference_for(n: usize) -> (u64, Vec<Failure>) {
    let perms: Vec<Filling> = permutations(n).iter().map(|w| Filling::from_permutation(w).unwrap()).collect();
    let mut t = Tally::new();
    t.add(run_all(&perms, |f| {
        let mut out = Vec::new();
        let q = q_chain(f);
        for m in tryf!(find_knuth_moves(f), f, "moves") {
            let g = tryf!(apply_knuth_move(f, m), f, "apply");
            let d = differing_indices(&q, &q_chain(&g));
            ensure!(out, d.len() == 1 && (d[0] == m.k + 1 || d[0] == m.k + 2), f, "{m}: top borders differ at {d:?}");
            let tri = window_is_triangle(f, m.k).unwrap_or(false) && window_is_triangle(&g, m.k).unwrap_or(false);
            ensure!(out, tri, f, "{m}: windows are not triangle-shaped");
            ensure!(out, p_chain(f) == p_chain(&g), f, "{m}: not Knuth equivalent");
        }
        out
    }));
    let mut classes: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, f) in perms.iter().enumerate() {
        classes.entry(p_chain(f).to_string()).or_default().push(i);
    }
    let pairs: Vec<(usize, usize)> =
        classes.values().flat_map(|c| c.iter().flat_map(|&i| c.iter().filter(move |&&j| j != i).map(move |&j| (i, j)))).collect();
    t.add(run_all(&pairs, |&(i, j)| {
        let (f, g) = (&perms[i], &perms[j]);
        let d = differing_indices(&q_chain(f), &q_chain(g));
        if d.len() != 1 {
            return Vec::new();
        }
        let hyp = [d[0].wrapping_sub(2), d[0].wrapping_sub(1)].into_iter().any(|k| {
            k + 3 <= n && window_is_triangle(f, k).unwrap_or(false) && window_is_triangle(g, k).unwrap_or(false)
        });
        let one_move = find_knuth_moves(f).unwrap().into_iter().any(|m| apply_knuth_move(f, m).as_ref() == Ok(g));
        if hyp && !one_move {
            return fail(format!("{}\nvs\n{}", perm_of(f), perm_of(g)), "triangle hypothesis holds but no single Knuth move");
        }
        Vec::new()
    }));
    // the move graph connects exactly the Knuth classes
    let mut comp: Vec<usize> = (0..perms.len()).collect();
    fn find(c: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while c[r] != r {
            r = c[r];
        }
        c[x] = r;
        r
    }
    let index: BTreeMap<String, usize> = perms.iter().enumerate().map(|(i, f)| (perm_of(f), i)).collect();
    for (i, f) in perms.iter().enumerate() {
        for m in find_knuth_moves(f).unwrap() {
            let j = index[&perm_of(&apply_knuth_move(f, m).unwrap())];
            let (a, b) = (find(&mut comp, i), find(&mut comp, j));
            comp[a] = b;
        }
    }
    for class in classes.values() {
        let root = find(&mut comp, class[0]);
        let same = class.iter().all(|&i| find(&mut comp, i) == root);
        let size = (0..perms.len()).filter(|&i| find(&mut comp, i) == root).count();
        t.instances += 1;
        if !same || size != class.len() {
            t.failures.extend(fail(perm_of(&perms[class[0]]), "Knuth moves do not connect exactly one class"));
        }
    }
    (t.instances, t.failures)
}

/// The near miss: Knuth equivalent, top borders differ in one partition,
/// yet the last three columns of the second are not triangle-shaped and no
/// single move connects them.
pub fn near_miss_pair() -> (Filling, Filling) {
    (Filling::from_permutation(&[5, 3, 4, 1, 2]).unwrap(), Filling::from_permutation(&[3, 1, 5, 4, 2]).unwrap())
}

pub fn prop_difference(config: &VerifyConfig) -> Result<VerificationReport> {
    let cfg = config.resolve(5, 0);
    let mut t = Tally::new();
    for n in 3..=cfg.cells() {
        t.add(difference_for(n));
    }
    let (f, g) = near_miss_pair();
    let d = differing_indices(&q_chain(&f), &q_chain(&g));
    let one_move = find_knuth_moves(&f)?.into_iter().any(|m| apply_knuth_move(&f, m).as_ref() == Ok(&g));
    t.instances += 1;
    let ok = p_chain(&f) == p_chain(&g) && d.len() == 1 && !one_move && !window_is_triangle(&g, 2)?;
    ensure!(t.failures, ok, format!("{}\nvs\n{}", perm_of(&f), perm_of(&g)), "near-miss pair: differing indices {d:?}");
    Ok(t.report("prop-difference", cfg))
}

// ---------------------------------------------------------------- jdt-difference

fn triangle_both(r: &PartitionChain, s: &PartitionChain, k: usize) -> bool {
    entries_triangle(r, k - 1).unwrap_or(false) && entries_triangle(s, k - 1).unwrap_or(false)
}

/// Swapping k, k+1 under the triangle hypothesis on k-1, k, k+1 commutes
/// with jdt up to swapping k-1, k; swapping k-1, k gives a swap of k-2, k-1
/// or of k-1, k after jdt.
fn cell_of(c: &PartitionChain, e: u32) -> Option<(usize, usize)> {
    let t = chain_to_tableau(c);
    t.rows().iter().enumerate().find_map(|(i, r)| r.iter().position(|&x| x == e).map(|j| (i, j)))
}

fn cells_adjacent(c: &PartitionChain, a: u32, b: u32) -> bool {
    match (cell_of(c, a), cell_of(c, b)) {
        (Some((i, j)), Some((k, l))) => i.abs_diff(k) + j.abs_diff(l) == 1,
        _ => false,
    }
}

pub fn jdt_difference(config: &VerifyConfig) -> Result<VerificationReport> {
    let cfg = config.resolve(6, 0);
    let chains: Vec<PartitionChain> = (3..=cfg.cells()).flat_map(all_cell_chains).collect();
    let mut t = Tally::new();
    t.add(run_all(&chains, |r| {
        let mut out = Vec::new();
        let n = r.steps();
        let jr = tryf!(jdt_chain(r), r, "jdt");
        for k in 2..n {
            let k32 = k as u32;
            if let Some(s) = swap_entries(r, k32) {
                if triangle_both(r, &s, k) {
                    let js = tryf!(jdt_chain(&s), &s, "jdt");
                    let ok = swap_entries(&jr, k32 - 1).as_ref() == Some(&js);
                    if k > 2 {
                        ensure!(out, ok, r, "swap {k},{} : jdt differs by more than {},{k}", k + 1, k - 1);
                    } else {
                        // jdt starts its slide in the cell of entry 1 and
                        // compares its two neighbours; only then can it fail
                        let boxed = cells_adjacent(r, 1, 2) && cells_adjacent(r, 1, 3);
                        ensure!(out, ok || boxed, r, "swap 2,3 fails away from the cell of 1");
                    }
                }
            }
            if let Some(s) = swap_entries(r, k32 - 1) {
                if triangle_both(r, &s, k) {
                    let js = tryf!(jdt_chain(&s), &s, "jdt");
                    let ok = [k32 - 2, k32 - 1].iter().any(|&i| i > 0 && swap_entries(&jr, i).as_ref() == Some(&js));
                    ensure!(out, ok, r, "swap {},{k}: jdt results are not one swap apart", k - 1);
                }
            }
        }
        out
    }));
    Ok(t.report("jdt-difference", cfg))
}

// ---------------------------------------------------------------- section6

/// Every row and every column holds exactly one cross.
fn one_per_line(f: &Filling) -> bool {
    let (rows, cols) = f.sums();
    f.is_zero_one() && rows.iter().all(|&r| r == 1) && cols.iter().all(|&c| c == 1)
}

fn ferrers_shapes(max_cells: u32) -> Vec<MoonPolyomino> {
    (1..=max_cells)
        .flat_map(Partition::all_of_size)
        .map(|p| MoonPolyomino::ferrers(&p).expect("partitions give Ferrers shapes"))
        .collect()
}

fn section6_one(f: &Filling) -> Checked {
    let mut out = Vec::new();
    let v = RskVariant::Rsk;
    let lam = tryf!(stack_growth_labels(f, v), f, "labels").flatten();
    let k = f.poly().row_span(f.poly().ymax()).map_or(0, |(l, r)| (r - l + 1) as usize);
    let top = tryf!(PartitionChain::new(lam[..=k].to_vec(), ChainMode::Cell), f, "top row chain");
    let ev = tryf!(evacuation(&top), f, "evacuation");
    let mu = tryf!(stack_growth_labels(&f.reverse_columns(), v), f, "reflected labels").flatten();
    ensure!(out, mu.len() == lam.len(), f, "reflected border has {} labels, not {}", mu.len(), lam.len());
    let mu_t: Vec<Partition> = mu.iter().map(Partition::transpose).collect();
    ensure!(out, mu_t[..=k] == ev.seq()[..], f, "reflection: transposed prefix {:?} is not the evacuation", mu_t[..=k].iter().map(|p| p.to_string()).collect::<Vec<_>>());
    ensure!(out, mu_t[k..] == lam[k..], f, "reflection: transposed labels beyond the top row differ");
    let e = tryf!(ev_t(f, v), f, "ev_t");
    let nu = tryf!(stack_growth_labels(&e, v), &e, "ev_t labels").flatten();
    ensure!(out, nu.len() == lam.len() && nu[..=k] == ev.seq()[..], f, "ev_t: prefix is not the evacuation, image\n{e}");
    ensure!(out, nu.len() == lam.len() && nu[k..] == lam[k..], f, "ev_t: labels beyond the top row differ, image\n{e}");
    out
}

fn stack_roundtrip(f: &Filling) -> Checked {
    let mut out = Vec::new();
    for v in legal_variants(f) {
        let l = tryf!(stack_growth_labels(f, v), f, "labels");
        let back = tryf!(stack_growth_reconstruct(&l, f.poly(), v), f, &format!("reconstruct under {v}"));
        ensure!(out, &back == f, f, "{v}: reconstruction gives\n{back}");
    }
    out
}

fn reverse_one(f: &Filling) -> Checked {
    let mut out = Vec::new();
    let (p, q) = tryf!(rsk_correspond(f, RskVariant::Rsk), f, "growth");
    let r = tryf!(reverse_columns(f), f, "reverse");
    let (pr, qr) = tryf!(rsk_correspond(&r, RskVariant::Rsk), &r, "growth");
    let evq = tryf!(evacuation(&q.with_mode(ChainMode::Cell).unwrap()), f, "evacuation");
    ensure!(out, pr.seq() == p.transpose().seq() && qr.seq() == evq.transpose().seq(), f, "reversal is not (P^t, ev(Q)^t)");
    out
}

/// Reflection and ev_t act on the border labels of standard Ferrers fillings
/// through evacuation; stack labels round-trip; column reversal of a
/// permutation is (P^t, ev(Q)^t).
pub fn section6(config: &VerifyConfig) -> Result<VerificationReport> {
    let cfg = config.resolve(6, 0);
    let mut standard = Vec::new();
    for shape in ferrers_shapes(cfg.cells() as u32) {
        standard.extend(enumerate(&shape, &CountQuery::zero_one())?.into_iter().filter(one_per_line));
    }
    let mut t = Tally::new();
    t.add(run_all(&standard, section6_one));
    let mut stacks = Vec::new();
    for hs in [vec![1, 2, 1], vec![2, 2, 1], vec![1, 2, 2], vec![1, 3, 2]] {
        let s = MoonPolyomino::stack(&hs)?;
        stacks.extend(enumerate(&s, &CountQuery::zero_one())?.into_iter().filter(Filling::is_partial));
    }
    t.add(run_all(&stacks, stack_roundtrip));
    let perms: Vec<Filling> = (1..=5).flat_map(permutations).map(|w| Filling::from_permutation(&w).unwrap()).collect();
    t.add(run_all(&perms, reverse_one));
    Ok(t.report("section6", cfg))
}

// ---------------------------------------------------------------- counterexamples

pub struct CounterexampleFacts {
    /// Longest NE-chain of the seven-entry Ferrers filling.
    pub seven_entry_ne: u32,
    /// 0-1 fillings of the indented stack with seven entries and NE length 3.
    pub seven_entry_count: u64,
    /// Longest ne and se chains of the stack filling.
    pub row_pair_chains: (u32, u32),
    /// Fillings of the Ferrers shape with its row counts and chain lengths.
    pub row_pair_count: u64,
    /// Longest ne-chain of the original filling.
    pub sums_original_ne: u32,
    /// Fillings of the permuted shape with the same row and column sums.
    pub sums_count: u64,
    /// Longest ne-chain of that unique filling.
    pub sums_image_ne: u32,
}

pub fn counterexample_facts() -> Result<CounterexampleFacts> {
    let seven = Filling::parse("110\n111\n011")?;
    let indented = MoonPolyomino::parse(".oo\nooo\nooo")?;
    let q = CountQuery::zero_one().with_total(7).with_longest(ChainKind::NE, 3);
    let seven_entry_count = count(&indented, &q)?;

    let row_pair = Filling::parse(".001\n1111\n1000")?;
    let row_pair_chains = (row_pair.longest_chain(ChainKind::ne)?, row_pair.longest_chain(ChainKind::se)?);
    let ferrers = MoonPolyomino::parse("ooo\noooo\noooo")?;
    let mut row_pair_count = 0;
    let rows = row_pair.sums().0;
    for_each_filling(&ferrers, &CountQuery::zero_one().with_rows(rows), &mut |f| {
        if f.longest_chain(ChainKind::ne).ok() == Some(row_pair_chains.0) && f.longest_chain(ChainKind::se).ok() == Some(row_pair_chains.1) {
            row_pair_count += 1;
        }
    })?;

    let original = Filling::parse("10\n100\n111")?;
    let (r, _) = original.sums();
    let permuted = MoonPolyomino::parse(".oo\nooo\nooo")?;
    let q = CountQuery::zero_one().with_rows(r).with_cols(vec![1, 3, 1]);
    let images = enumerate(&permuted, &q)?;
    let sums_image_ne = images.first().map_or(Ok(0), |f| f.longest_chain(ChainKind::ne))?;
    Ok(CounterexampleFacts {
        seven_entry_ne: seven.longest_chain(ChainKind::NE)?,
        seven_entry_count,
        row_pair_chains,
        row_pair_count,
        sums_original_ne: original.longest_chain(ChainKind::ne)?,
        sums_count: images.len() as u64,
        sums_image_ne,
    })
}

/// The three natural generalisations that fail.
pub fn counterexamples(config: &VerifyConfig) -> Result<VerificationReport> {
    let cfg = config.resolve(0, 0);
    let c = counterexample_facts()?;
    let mut t = Tally::new();
    t.instances = 3;
    ensure!(t.failures, c.seven_entry_ne == 3 && c.seven_entry_count == 0, "110\n111\n011", "NE length {} and {} indented fillings", c.seven_entry_ne, c.seven_entry_count);
    ensure!(t.failures, c.row_pair_chains == (2, 1) && c.row_pair_count == 0, ".001\n1111\n1000", "chains {:?} and {} Ferrers fillings", c.row_pair_chains, c.row_pair_count);
    ensure!(t.failures, c.sums_original_ne == 1 && c.sums_count == 1 && c.sums_image_ne == 2, "10\n100\n111", "ne {} -> {} fillings with ne {}", c.sums_original_ne, c.sums_count, c.sums_image_ne);
    Ok(t.report("counterexamples", cfg))
}

// ---------------------------------------------------------------- roundtrips

fn rect_roundtrip(f: &Filling) -> Checked {
    let mut out = Vec::new();
    for v in legal_variants(f) {
        for o in [Orientation::Top, Orientation::Right] {
            let g = tryf!(jbar_oriented(f, v, o), f, "jbar");
            let back = tryf!(jbar_inverse_oriented(&g, v, o), &g, "jbar inverse");
            ensure!(out, &back == f, f, "{v} {o:?}: jbar_inverse(jbar) differs");
        }
        let g = tryf!(jbar_inverse(f, v), f, "jbar inverse");
        ensure!(out, jbar(&g, v).as_ref() == Ok(f), f, "{v}: jbar(jbar_inverse) differs");
        let (p, q) = tryf!(rsk_correspond(f, v), f, "rsk");
        ensure!(out, rsk_invert(&p, &q, v).as_ref() == Ok(f), f, "{v}: rsk_invert(rsk) differs");
    }
    if f.is_partial() {
        let g = tryf!(GrowthDiagram::grow(f), f, "grow");
        let back = ungrow(&g.p_chain().with_mode(ChainMode::Cell).unwrap(), &g.q_chain().with_mode(ChainMode::Cell).unwrap());
        ensure!(out, back.as_ref() == Ok(f), f, "ungrow(grow) differs");
    }
    out
}

/// jbar, rsk and grow against their inverses; moon_move against the
/// mirrored move; stack labels against reconstruction.
pub fn roundtrips(config: &VerifyConfig) -> Result<VerificationReport> {
    let cfg = config.resolve(8, 3);
    let mut rects = Vec::new();
    for (w, h) in small_rectangles(9) {
        rects.extend(rect_fillings(w, h, &CountQuery::zero_one()));
        rects.extend(rect_fillings(w, h, &CountQuery::arbitrary(cfg.mass())).into_iter().filter(|f| !f.is_zero_one()));
    }
    let mut t = Tally::new();
    t.add(run_all(&rects, rect_roundtrip));
    let mut moons = Vec::new();
    let mut stacks = Vec::new();
    for m in all_moons(cfg.cells()) {
        let fs = enumerate(&m, &CountQuery::arbitrary(cfg.mass()))?;
        if m.is_stack() && m.size() <= 6 {
            stacks.extend(fs.iter().filter(|f| f.is_partial()).cloned());
        }
        moons.extend(fs);
    }
    t.add(run_all(&moons, |f| {
        let mut out = Vec::new();
        for c1 in movable(f.poly()) {
            let c2 = f.poly().rectangle_of_column(c1).unwrap().cols.1;
            for v in legal_variants(f) {
                let g = tryf!(moon_move(f, c1, v), f, "move");
                ensure!(out, moon_move_inverse(&g, c2, v).as_ref() == Ok(f), f, "{v}: move {c1} is not undone");
            }
        }
        out
    }));
    t.add(run_all(&stacks, stack_roundtrip));
    Ok(t.report("roundtrips", cfg))
}
