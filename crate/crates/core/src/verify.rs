//! Corpus sweeps: check a named statement on every graph of a corpus and
//! report the graphs where it fails.
//!
//! Sweeps run on rayon. Counters are summed and violations sorted by
//! `(graph6, partner, k)` at the end, so a report does not depend on the
//! number of workers. Violations are also handed to a callback the moment
//! they are found.

use std::collections::{BTreeMap, HashSet};
use std::ops::RangeInclusive;
use std::path::Path;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::{cone_equality_criterion, join_equality_criterion};
use crate::graph::{cone, join, Graph};
use crate::graph6::{from_graph6, to_graph6};
use crate::metric::{cone_dimensionality, join_dimensionality, DistinguishTable};
use crate::solver::{solve_table, SolveOptions};
use crate::vertex_set::VertexSet;

/// Largest order for exhaustive labeled enumeration.
pub const MAX_LABELED_ORDER: usize = 7;

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The labeled graph on `n` vertices whose `i`-th pair in lexicographic
/// order `(0,1), (0,2), ..., (n-2,n-1)` is an edge iff bit `i` is set.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut adj = vec![VertexSet::empty(n); n];
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
            bit += 1;
        }
    }
    Graph::from_rows_unchecked(adj)
}

/// Every labeled graph on `n` vertices, in mask order.
pub fn enumerate_all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_LABELED_ORDER {
        return Err(Error::TooLarge {
            n,
            max: MAX_LABELED_ORDER,
        });
    }
    Ok((0..1u64 << pair_count(n)).map(move |m| graph_from_mask(n, m)))
}

/// AHU code of the tree rooted at `root`.
fn rooted_code(t: &Graph, root: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = t
        .neighbors(root)
        .iter()
        .filter(|&c| Some(c) != parent)
        .map(|c| rooted_code(t, c, Some(root)))
        .collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

fn tree_centers(t: &Graph) -> Vec<usize> {
    let n = t.order();
    let mut degree = t.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for u in t.neighbors(leaf) {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer
}

/// Isomorphism-invariant string for a tree.
pub fn tree_canonical_form(t: &Graph) -> String {
    tree_centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c, None))
        .min()
        .unwrap_or_default()
}

/// One tree per isomorphism class on `n >= 1` vertices.
pub fn enumerate_trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::from_edge_list(1, &[]).expect("K1")];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.order() {
                let mut edges = t.edges();
                edges.push((v, m - 1));
                let grown = Graph::from_edge_list(m, &edges).expect("leaf extension");
                if seen.insert(tree_canonical_form(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    if n == 0 {
        return Vec::new();
    }
    level
}

#[derive(Clone, Debug)]
enum Source {
    Labeled(RangeInclusive<usize>),
    Trees(RangeInclusive<usize>),
    List(Vec<Graph>),
}

/// A collection of graphs plus filters.
#[derive(Clone, Debug)]
pub struct Corpus {
    source: Source,
    pub connected_only: bool,
    pub min_degree: Option<usize>,
    pub orders: RangeInclusive<usize>,
}

impl Corpus {
    fn with(source: Source) -> Self {
        Corpus {
            source,
            connected_only: false,
            min_degree: None,
            orders: 0..=usize::MAX,
        }
    }

    /// Every labeled graph with order in `orders`.
    pub fn labeled(orders: RangeInclusive<usize>) -> Result<Self> {
        if *orders.end() > MAX_LABELED_ORDER {
            return Err(Error::TooLarge {
                n: *orders.end(),
                max: MAX_LABELED_ORDER,
            });
        }
        Ok(Corpus::with(Source::Labeled(orders)))
    }

    /// One tree per isomorphism class for each order in `orders`.
    pub fn trees(orders: RangeInclusive<usize>) -> Self {
        Corpus::with(Source::Trees(orders))
    }

    pub fn from_graphs(graphs: Vec<Graph>) -> Self {
        Corpus::with(Source::List(graphs))
    }

    /// One graph6 record per non-blank line.
    pub fn from_graph6_text(text: &str) -> Result<Self> {
        let graphs = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                from_graph6(l.trim())
                    .map_err(|e| Error::Parse(format!("graph6 line {}: {e}", i + 1)))
            })
            .collect::<Result<_>>()?;
        Ok(Corpus::from_graphs(graphs))
    }

    pub fn from_graph6_file(path: &Path) -> Result<Self> {
        Corpus::from_graph6_text(&std::fs::read_to_string(path)?)
    }

    pub fn connected(mut self) -> Self {
        self.connected_only = true;
        self
    }

    pub fn with_min_degree(mut self, d: usize) -> Self {
        self.min_degree = Some(d);
        self
    }

    pub fn with_orders(mut self, orders: RangeInclusive<usize>) -> Self {
        self.orders = orders;
        self
    }

    fn keeps(&self, g: &Graph) -> bool {
        self.orders.contains(&g.order())
            && (!self.connected_only || g.is_connected())
            && self
                .min_degree
                .is_none_or(|d| g.order() == 0 || g.min_degree() >= d)
    }

    /// Graphs passing the filters, materialised.
    pub fn graphs(&self) -> Vec<Graph> {
        let mut out = Vec::new();
        self.par_fold(|g| {
            Ok(Partial {
                graphs: vec![g.clone()],
                ..Partial::default()
            })
        })
        .map(|p| out = p.graphs)
        .expect("collecting cannot fail");
        out
    }

    pub fn count(&self) -> u64 {
        self.par_fold(|_| Ok(Partial::default()))
            .expect("counting cannot fail")
            .checked
    }

    /// Runs `f` on every kept graph and merges the results.
    fn par_fold<F>(&self, f: F) -> Result<Partial>
    where
        F: Fn(&Graph) -> Result<Partial> + Sync,
    {
        let run = |g: &Graph| -> Result<Partial> {
            let mut p = f(g)?;
            p.checked += 1;
            Ok(p)
        };
        let mut total = Partial::default();
        match &self.source {
            Source::Labeled(orders) => {
                for n in orders.clone() {
                    if !self.orders.contains(&n) {
                        continue;
                    }
                    let part = (0..1u64 << pair_count(n))
                        .into_par_iter()
                        .map(|m| graph_from_mask(n, m))
                        .filter(|g| self.keeps(g))
                        .map(|g| run(&g))
                        .try_reduce(Partial::default, |a, b| Ok(a.merge(b)))?;
                    total = total.merge(part);
                }
            }
            Source::Trees(orders) => {
                for n in orders.clone() {
                    let part = enumerate_trees(n)
                        .par_iter()
                        .filter(|g| self.keeps(g))
                        .map(run)
                        .try_reduce(Partial::default, |a, b| Ok(a.merge(b)))?;
                    total = total.merge(part);
                }
            }
            Source::List(graphs) => {
                total = graphs
                    .par_iter()
                    .filter(|g| self.keeps(g))
                    .map(run)
                    .try_reduce(Partial::default, |a, b| Ok(a.merge(b)))?;
            }
        }
        Ok(total)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub graph6: String,
    /// Second operand for statements about joins.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partner: Option<String>,
    pub k: u32,
    pub observed: usize,
    pub expected: usize,
    /// How `observed` should have compared with `expected`.
    pub relation: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub theorem: String,
    pub checked: u64,
    /// Instances where the statement holds with equality (or where the
    /// equality side of a biconditional is true).
    pub matches: u64,
    pub violations: Vec<Violation>,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialises")
    }
}

#[derive(Default)]
struct Partial {
    checked: u64,
    matches: u64,
    violations: Vec<Violation>,
    slack: BTreeMap<i64, u64>,
    graphs: Vec<Graph>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.checked += other.checked;
        self.matches += other.matches;
        self.violations.extend(other.violations);
        for (s, c) in other.slack {
            *self.slack.entry(s).or_insert(0) += c;
        }
        self.graphs.extend(other.graphs);
        self
    }
}

#[derive(Clone, Debug, Default)]
pub struct SweepOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    /// Node budget per exact solve.
    pub budget: Option<u64>,
}

impl SweepOptions {
    fn solve(&self) -> SolveOptions {
        SolveOptions {
            budget: self.budget,
            ..SolveOptions::default()
        }
    }

    fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.jobs {
            Some(j) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(j.max(1))
                    .build()
                    .map_err(|e| Error::BadParameter(e.to_string()))?;
                Ok(pool.install(f))
            }
            None => Ok(f()),
        }
    }
}

pub type ViolationSink<'a> = &'a (dyn Fn(&Violation) + Sync);

/// Every statement `sweep_theorem` understands.
pub const THEOREMS: &[&str] = &[
    "monotony",
    "k-plus-2",
    "adim1-ge-3",
    "complement",
    "dim-le-adim",
    "kdim-vs-kadj",
    "join-lower",
    "cone-lower",
    "adim3-eq-4",
    "adim4-eq-5",
    "adim-eq-k",
    "full-dimension",
    "cone-closed-form",
    "join-closed-form",
    "cone-equality",
    "join-equality",
    "disconnection",
    "K1T-trees",
];

/// `adim_k` for every feasible `k` of one table.
struct Ladder {
    max_k: u32,
    dims: Vec<usize>,
}

impl Ladder {
    fn new(table: &DistinguishTable, top: u32, opts: &SolveOptions) -> Result<Ladder> {
        let max_k = table.dimensionality()?.min(top);
        let dims = (1..=max_k)
            .map(|k| Ok(solve_table(table, k, opts)?.dimension))
            .collect::<Result<_>>()?;
        Ok(Ladder { max_k, dims })
    }

    fn of(g: &Graph, opts: &SolveOptions) -> Result<Ladder> {
        Ladder::new(&DistinguishTable::build(g, 2)?, u32::MAX, opts)
    }

    fn get(&self, k: u32) -> usize {
        self.dims[k as usize - 1]
    }

    fn levels(&self) -> RangeInclusive<u32> {
        1..=self.max_k
    }
}

/// Small second operands for join statements: every labeled graph of order 2 or 3.
fn join_partners() -> Vec<Graph> {
    (2..=3)
        .flat_map(|n| enumerate_all_graphs(n).expect("small order"))
        .collect()
}

fn is_path_graph(g: &Graph) -> bool {
    g.is_tree() && g.max_degree() <= 2
}

fn is_cycle_graph(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && g.degrees().iter().all(|&d| d == 2)
}

/// Leg lengths (ascending) of a tree with exactly one vertex of degree >= 3.
fn spider_legs(t: &Graph) -> Option<Vec<usize>> {
    let hubs: Vec<usize> = (0..t.order()).filter(|&v| t.degree(v) >= 3).collect();
    let &[hub] = hubs.as_slice() else {
        return None;
    };
    let mut legs: Vec<usize> = t
        .neighbors(hub)
        .iter()
        .map(|first| {
            let (mut prev, mut cur, mut len) = (hub, first, 1);
            while let Some(next) = t.neighbors(cur).iter().find(|&x| x != prev) {
                (prev, cur, len) = (cur, next, len + 1);
            }
            len
        })
        .collect();
    legs.sort_unstable();
    Some(legs)
}

/// Whether the tree `t` lies in the exceptional family for level `k`, i.e.
/// `adim_k(K1 + t) != adim_k(t)` is predicted.
pub fn in_k1t_family(t: &Graph, k: u32) -> bool {
    let n = t.order();
    let path = is_path_graph(t);
    let legs = spider_legs(t).unwrap_or_default();
    let star = !legs.is_empty() && legs.iter().all(|&l| l == 1);
    match k {
        1 => (path && matches!(n, 2 | 3 | 6)) || star || legs == [1, 2, 2],
        2 => {
            let long_leg = legs.last() == Some(&3)
                && legs.len() >= 3
                && legs[..legs.len() - 1].iter().all(|&l| l == 1);
            (path && (2..=5).contains(&n)) || star || long_leg
        }
        3 => path && matches!(n, 4 | 5),
        _ => false,
    }
}

struct Found {
    matches: u64,
    violations: Vec<Violation>,
}

impl Found {
    fn new() -> Self {
        Found {
            matches: 0,
            violations: Vec::new(),
        }
    }

    fn hit(&mut self, cond: bool) {
        self.matches += cond as u64;
    }

    fn fail(
        &mut self,
        g: &Graph,
        partner: Option<&Graph>,
        k: u32,
        observed: usize,
        expected: usize,
        relation: &'static str,
    ) {
        self.violations.push(Violation {
            graph6: to_graph6(g),
            partner: partner.map(to_graph6),
            k,
            observed,
            expected,
            relation,
        });
    }

    /// Records a failure of `left <=> right` at level `k`.
    fn iff(&mut self, g: &Graph, partner: Option<&Graph>, k: u32, left: bool, right: bool) {
        self.hit(left);
        if left != right {
            self.fail(g, partner, k, left as usize, right as usize, "iff");
        }
    }
}

fn check_graph(theorem: &str, g: &Graph, opts: &SolveOptions) -> Result<Found> {
    let mut f = Found::new();
    let n = g.order();
    if n < 2 {
        return Ok(f);
    }
    match theorem {
        "monotony" => {
            let l = Ladder::of(g, opts)?;
            for k in 2..=l.max_k {
                let (lo, hi) = (l.get(k - 1), l.get(k));
                f.hit(hi == lo + 1);
                if hi <= lo {
                    f.fail(g, None, k, hi, lo + 1, ">=");
                }
            }
            for k in 1..l.max_k {
                if l.get(k) >= n {
                    f.fail(g, None, k, l.get(k), n - 1, "<=");
                }
            }
        }
        "k-plus-2" => {
            if n >= 7 {
                let l = Ladder::of(g, opts)?;
                for k in l.levels() {
                    f.hit(l.get(k) == k as usize + 2);
                    if l.get(k) < k as usize + 2 {
                        f.fail(g, None, k, l.get(k), k as usize + 2, ">=");
                    }
                }
            }
        }
        "adim1-ge-3" => {
            if n >= 7 {
                let table = DistinguishTable::build(g, 2)?;
                let d = solve_table(&table, 1, opts)?.dimension;
                f.hit(d == 3);
                if d < 3 {
                    f.fail(g, None, 1, d, 3, ">=");
                }
            }
        }
        "complement" => {
            let l = Ladder::of(g, opts)?;
            let lc = Ladder::of(&g.complement(), opts)?;
            if lc.max_k != l.max_k {
                f.fail(g, None, 0, lc.max_k as usize, l.max_k as usize, "==");
            }
            for k in 1..=l.max_k.min(lc.max_k) {
                f.hit(l.get(k) == lc.get(k));
                if l.get(k) != lc.get(k) {
                    f.fail(g, None, k, lc.get(k), l.get(k), "==");
                }
            }
        }
        "dim-le-adim" => {
            if g.is_connected() {
                let adj = Ladder::of(g, opts)?;
                let met_table = DistinguishTable::build_full_metric(g)?;
                let met = Ladder::new(&met_table, adj.max_k, opts)?;
                let small_diameter = g.diameter().finite().is_some_and(|d| d <= 2);
                for k in adj.levels() {
                    let (d, a) = (met.get(k), adj.get(k));
                    f.hit(d == a);
                    if d > a {
                        f.fail(g, None, k, d, a, "<=");
                    } else if small_diameter && d != a {
                        f.fail(g, None, k, d, a, "==");
                    }
                }
            }
        }
        "kdim-vs-kadj" => {
            if g.is_connected() {
                let ca = DistinguishTable::build(g, 2)?.dimensionality()?;
                let cm = DistinguishTable::build_full_metric(g)?.dimensionality()?;
                let small_diameter = g.diameter().finite().is_some_and(|d| d <= 2);
                f.hit(ca == cm);
                if ca > cm {
                    f.fail(g, None, 0, ca as usize, cm as usize, "<=");
                } else if small_diameter && ca != cm {
                    f.fail(g, None, 0, ca as usize, cm as usize, "==");
                }
            }
        }
        "join-lower" => {
            let lg = Ladder::of(g, opts)?;
            let lcone = Ladder::of(&cone(g), opts)?;
            for h in join_partners() {
                let lh = Ladder::of(&h, opts)?;
                let lj = Ladder::of(&join(g, &h), opts)?;
                for k in lj.levels() {
                    let lower = lg.get(k) + lh.get(k);
                    f.hit(lj.get(k) == lower);
                    if lj.get(k) < lower {
                        f.fail(g, Some(&h), k, lj.get(k), lower, ">=");
                    }
                    if k <= lh.max_k.min(lcone.max_k) {
                        let upper = lcone.get(k) + lh.get(k);
                        if lj.get(k) > upper {
                            f.fail(g, Some(&h), k, lj.get(k), upper, "<=");
                        }
                    }
                }
            }
        }
        "cone-lower" => {
            let lg = Ladder::of(g, opts)?;
            let lc = Ladder::of(&cone(g), opts)?;
            for k in lc.levels() {
                f.hit(lc.get(k) == lg.get(k));
                if lc.get(k) < lg.get(k) {
                    f.fail(g, None, k, lc.get(k), lg.get(k), ">=");
                }
            }
        }
        "adim3-eq-4" | "adim4-eq-5" => {
            let (k, value, min_n) = if theorem == "adim3-eq-4" {
                (3, 4, 4)
            } else {
                (4, 5, 5)
            };
            if n >= min_n {
                let table = DistinguishTable::build(g, 2)?;
                let eq = table.dimensionality()? >= k
                    && solve_table(&table, k, opts)?.dimension == value;
                let member = if k == 3 {
                    (n == 4 && is_path_graph(g)) || (n == 5 && is_cycle_graph(g))
                } else {
                    n == 5 && is_cycle_graph(g)
                };
                f.iff(g, None, k, eq, member);
            }
        }
        "adim-eq-k" => {
            let l = Ladder::of(g, opts)?;
            let small = n == 2 || (n == 3 && matches!(g.size(), 1 | 2));
            for k in l.levels() {
                f.iff(g, None, k, l.get(k) == k as usize, k <= 2 && small);
            }
        }
        "full-dimension" => {
            let table = DistinguishTable::build(g, 2)?;
            let l = Ladder::new(&table, u32::MAX, opts)?;
            for k in l.levels() {
                let full = table.forced_set(k)?.len() == n;
                f.iff(g, None, k, l.get(k) == n, full);
            }
            f.iff(
                g,
                None,
                2,
                l.get(2) == n,
                g.twin_partition().all_non_singleton(),
            );
        }
        "cone-closed-form" => {
            let direct = DistinguishTable::build(&cone(g), 2)?.dimensionality()?;
            let closed = cone_dimensionality(g)?;
            f.hit(true);
            if direct != closed {
                f.fail(g, None, 0, closed as usize, direct as usize, "==");
            }
        }
        "join-closed-form" => {
            for h in join_partners() {
                let direct = DistinguishTable::build(&join(g, &h), 2)?.dimensionality()?;
                let closed = join_dimensionality(g, &h)?;
                f.hit(true);
                if direct != closed {
                    f.fail(g, Some(&h), 0, closed as usize, direct as usize, "==");
                }
            }
        }
        "cone-equality" => {
            let lg = Ladder::of(g, opts)?;
            let lc = Ladder::of(&cone(g), opts)?;
            for k in lc.levels() {
                let holds = cone_equality_criterion(g, k)?.holds;
                f.iff(g, None, k, holds, lc.get(k) == lg.get(k));
            }
        }
        "join-equality" => {
            let lg = Ladder::of(g, opts)?;
            for h in join_partners() {
                let lh = Ladder::of(&h, opts)?;
                let lj = Ladder::of(&join(g, &h), opts)?;
                for k in lj.levels() {
                    let holds = join_equality_criterion(g, &h, k)?.holds;
                    f.iff(g, Some(&h), k, holds, lj.get(k) == lg.get(k) + lh.get(k));
                }
            }
        }
        "disconnection" => {
            let lg = Ladder::of(g, opts)?;
            let lc = Ladder::of(&cone(g), opts)?;
            let parts = g.components();
            let allowed =
                parts.len() == 1 || (parts.len() == 2 && parts.iter().any(|c| c.len() == 1));
            for k in lc.levels() {
                let jump = lc.get(k) > lg.get(k);
                f.hit(jump);
                if jump && !allowed {
                    f.fail(g, None, k, parts.len(), 2, "<=");
                }
            }
        }
        "K1T-trees" => {
            if !g.is_tree() {
                return Ok(f);
            }
            let lt = Ladder::of(g, opts)?;
            let lc = Ladder::of(&cone(g), opts)?;
            for k in 1..=lc.max_k.min(3) {
                f.iff(g, None, k, lc.get(k) == lt.get(k), !in_k1t_family(g, k));
            }
        }
        other => return Err(Error::UnknownTheorem(other.to_string())),
    }
    Ok(f)
}

fn finish(theorem: &str, mut p: Partial, start: Instant) -> SweepReport {
    p.violations.sort();
    SweepReport {
        theorem: theorem.to_string(),
        checked: p.checked,
        matches: p.matches,
        violations: p.violations,
        elapsed: start.elapsed(),
    }
}

/// Checks `theorem` (one of [`THEOREMS`]) on every graph of `corpus`.
pub fn sweep_theorem(corpus: &Corpus, theorem: &str) -> Result<SweepReport> {
    sweep_theorem_with(corpus, theorem, &SweepOptions::default(), &|_| {})
}

pub fn sweep_theorem_with(
    corpus: &Corpus,
    theorem: &str,
    opts: &SweepOptions,
    sink: ViolationSink,
) -> Result<SweepReport> {
    if !THEOREMS.contains(&theorem) {
        return Err(Error::UnknownTheorem(theorem.to_string()));
    }
    let start = Instant::now();
    let solve = opts.solve();
    let partial = opts.install(|| {
        corpus.par_fold(|g| {
            let found = check_graph(theorem, g, &solve)?;
            found.violations.iter().for_each(sink);
            Ok(Partial {
                matches: found.matches,
                violations: found.violations,
                ..Partial::default()
            })
        })
    })??;
    Ok(finish(theorem, partial, start))
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    #[serde(flatten)]
    pub sweep: SweepReport,
    /// `(adim_k(H) + k - adim_k(K1 + H), count)`, ascending by slack.
    pub slack: Vec<(i64, u64)>,
}

impl ConjectureReport {
    pub fn min_slack(&self) -> Option<i64> {
        self.slack.first().map(|&(s, _)| s)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialises")
    }
}

/// Checks `adim_k(K1 + H) <= adim_k(H) + k` for every `H` in the corpus and
/// every `k` in `levels` up to the dimensionality of `K1 + H`. `matches`
/// counts the tight instances.
pub fn check_cone_conjecture(
    corpus: &Corpus,
    levels: RangeInclusive<u32>,
) -> Result<ConjectureReport> {
    check_cone_conjecture_with(corpus, levels, &SweepOptions::default(), &|_| {})
}

pub fn check_cone_conjecture_with(
    corpus: &Corpus,
    levels: RangeInclusive<u32>,
    opts: &SweepOptions,
    sink: ViolationSink,
) -> Result<ConjectureReport> {
    let start = Instant::now();
    let solve = opts.solve();
    let partial = opts.install(|| {
        corpus.par_fold(|h| {
            let mut p = Partial::default();
            if h.order() < 2 {
                return Ok(p);
            }
            let ht = DistinguishTable::build(h, 2)?;
            let ct = DistinguishTable::build(&cone(h), 2)?;
            let top = ct.dimensionality()?.min(*levels.end());
            for k in (*levels.start()).max(1)..=top {
                let a = solve_table(&ht, k, &solve)?.dimension;
                let c = solve_table(&ct, k, &solve)?.dimension;
                let slack = (a + k as usize) as i64 - c as i64;
                *p.slack.entry(slack).or_insert(0) += 1;
                if slack == 0 {
                    p.matches += 1;
                }
                if slack < 0 {
                    let v = Violation {
                        graph6: to_graph6(h),
                        partner: None,
                        k,
                        observed: c,
                        expected: a + k as usize,
                        relation: "<=",
                    };
                    sink(&v);
                    p.violations.push(v);
                }
            }
            Ok(p)
        })
    })??;
    let slack = partial.slack.iter().map(|(&s, &c)| (s, c)).collect();
    Ok(ConjectureReport {
        sweep: finish("cone-conjecture", partial, start),
        slack,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn labeled_counts() {
        assert_eq!(enumerate_all_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_all_graphs(4).unwrap().count(), 64);
        assert!(matches!(
            enumerate_all_graphs(8),
            Err(Error::TooLarge { .. })
        ));
        // mask bit i is the i-th lexicographic pair
        let g = graph_from_mask(4, 0b100001);
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn min_degree_filter_matches_recount() {
        let kept = Corpus::labeled(5..=5).unwrap().with_min_degree(2).count();
        let recount = (0..1u64 << 10)
            .filter(|&m| {
                let mut deg = [0; 5];
                let mut bit = 0;
                for u in 0..5 {
                    for v in u + 1..5 {
                        if m >> bit & 1 == 1 {
                            deg[u] += 1;
                            deg[v] += 1;
                        }
                        bit += 1;
                    }
                }
                deg.iter().all(|&d| d >= 2)
            })
            .count() as u64;
        assert_eq!(kept, recount);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| enumerate_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert!(enumerate_trees(8).iter().all(|t| t.is_tree()));
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let t = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)]).unwrap();
        let perm = [5, 3, 0, 1, 4, 2];
        assert_eq!(
            tree_canonical_form(&t),
            tree_canonical_form(&t.permuted(&perm))
        );
        assert_ne!(tree_canonical_form(&t), tree_canonical_form(&path(6)));
    }

    #[test]
    fn exceptional_trees() {
        let t1 = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]).unwrap();
        assert!(in_k1t_family(&t1, 1));
        assert!(!in_k1t_family(&t1, 2));
        let t2 = Graph::from_edge_list(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]).unwrap();
        assert!(in_k1t_family(&t2, 2));
        assert!(in_k1t_family(&star(4), 1) && in_k1t_family(&star(4), 2));
        assert!(in_k1t_family(&path(5), 3) && !in_k1t_family(&path(6), 3));
        assert!(in_k1t_family(&path(6), 1) && !in_k1t_family(&path(7), 1));
    }

    #[test]
    fn small_sweeps_pass() {
        let corpus = Corpus::labeled(2..=5).unwrap();
        for id in [
            "monotony",
            "complement",
            "cone-lower",
            "cone-closed-form",
            "full-dimension",
        ] {
            let r = sweep_theorem(&corpus, id).unwrap();
            assert!(r.passed(), "{id}: {:?}", r.violations);
            assert_eq!(r.checked, 2 + 8 + 64 + 1024);
        }
        assert!(matches!(
            sweep_theorem(&corpus, "nonsense"),
            Err(Error::UnknownTheorem(_))
        ));
    }

    #[test]
    fn reports_do_not_depend_on_workers() {
        let corpus = Corpus::labeled(2..=5).unwrap();
        let one = SweepOptions {
            jobs: Some(1),
            ..Default::default()
        };
        let four = SweepOptions {
            jobs: Some(4),
            ..Default::default()
        };
        let a = sweep_theorem_with(&corpus, "adim-eq-k", &one, &|_| {}).unwrap();
        let b = sweep_theorem_with(&corpus, "adim-eq-k", &four, &|_| {}).unwrap();
        assert_eq!((a.checked, a.matches), (b.checked, b.matches));
        assert_eq!(a.violations, b.violations);
    }

    #[test]
    fn violations_are_reported() {
        // a deliberately false statement: every graph has adim_1 >= 3 even below order 7
        let corpus = Corpus::from_graphs(vec![path(3), path(7)]);
        let r = sweep_theorem(&corpus, "adim1-ge-3").unwrap();
        assert!(r.passed());
        let streamed = std::sync::Mutex::new(Vec::new());
        let r = check_cone_conjecture_with(
            &Corpus::from_graphs(vec![fig5_graph(), fig3_graph()]),
            1..=4,
            &SweepOptions::default(),
            &|v| streamed.lock().unwrap().push(v.clone()),
        )
        .unwrap();
        assert!(r.sweep.passed());
        assert!(streamed.lock().unwrap().is_empty());
        assert!(r.min_slack().unwrap() >= 0);
    }

    #[test]
    fn graph6_corpus() {
        let text = format!("{}\n\n{}\n", to_graph6(&petersen()), to_graph6(&path(4)));
        let c = Corpus::from_graph6_text(&text).unwrap();
        assert_eq!(c.count(), 2);
        assert_eq!(c.clone().connected().with_orders(5..=20).count(), 1);
        assert!(matches!(
            Corpus::from_graph6_text("A_\n~?\n"),
            Err(Error::Parse(_))
        ));
    }
}
