//! Exact `k`-adjacency (and `k`-metric) dimension.
//!
//! A set `S` is a `k`-generator iff `|S ∩ C(x, y)| >= k` for every pair, so
//! finding a basis is a set multicover problem with uniform demand `k`: the
//! elements are vertex pairs and vertex `v` covers every pair whose
//! distinguishing set contains it. The search keeps a `chosen` set and an
//! `undecided` set; everything else is excluded.

use std::time::{Duration, Instant};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::DistinguishTable;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Maximum number of search nodes before giving up with `BudgetExhausted`.
    pub budget: Option<u64>,
    /// Collect every optimum generator into `all_bases`.
    pub enumerate: bool,
    /// Decide whether the optimum generator is unique.
    pub check_unique: bool,
    /// Enumeration aborts with `BasisCapExceeded` past this many bases.
    pub basis_cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: None,
            enumerate: false,
            check_unique: false,
            basis_cap: 1_000_000,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SolveStats {
    pub nodes: u64,
    pub forced: usize,
    pub greedy: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub k: u32,
    pub dimension: usize,
    /// Lexicographically smallest optimum generator.
    pub witness: VertexSet,
    pub all_bases: Option<Vec<VertexSet>>,
    pub unique: Option<bool>,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "dimension": self.dimension,
            "witness": self.witness,
            "unique": self.unique,
            "nodes": self.stats.nodes,
            "millis": self.stats.elapsed.as_millis() as u64,
        })
    }
}

pub fn is_k_generator(table: &DistinguishTable, k: u32, s: &VertexSet) -> bool {
    table
        .sets()
        .iter()
        .all(|c| c.intersection_len(s) >= k as usize)
}

fn check_k(table: &DistinguishTable, k: u32) -> Result<()> {
    let max = table.dimensionality()?;
    if k == 0 {
        return Err(Error::BadParameter("k must be >= 1".into()));
    }
    if k > max {
        return Err(Error::KExceedsDimensionality { k, max });
    }
    Ok(())
}

/// Repeatedly adds the vertex lying in the most still-deficient pair sets,
/// lowest index on ties, until every pair is covered `k` times.
pub fn greedy_bound(table: &DistinguishTable, k: u32) -> VertexSet {
    let n = table.order();
    let k = k as usize;
    let mut chosen = VertexSet::empty(n);
    loop {
        let deficient: Vec<&VertexSet> = table
            .sets()
            .iter()
            .filter(|c| c.intersection_len(&chosen) < k)
            .collect();
        if deficient.is_empty() {
            return chosen;
        }
        let best = (0..n)
            .filter(|&v| !chosen.contains(v))
            .map(|v| (deficient.iter().filter(|c| c.contains(v)).count(), v))
            .filter(|&(hits, _)| hits > 0)
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        match best {
            Some((_, v)) => chosen.insert(v),
            // k exceeds some pair's size; no generator exists
            None => return chosen,
        }
    }
}

enum Status {
    Infeasible,
    Covered,
    Open {
        lb: usize,
        pair: usize,
        residual: usize,
    },
}

struct Deficit {
    pair: usize,
    residual: usize,
    available: usize,
}

struct Search<'a> {
    sets: &'a [VertexSet],
    n: usize,
    k: usize,
    nodes: u64,
    budget: Option<u64>,
    deficits: Vec<Deficit>,
}

impl<'a> Search<'a> {
    fn new(table: &'a DistinguishTable, k: u32, budget: Option<u64>) -> Self {
        Search {
            sets: table.sets(),
            n: table.order(),
            k: k as usize,
            nodes: 0,
            budget,
            deficits: Vec::new(),
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        match self.budget {
            Some(b) if self.nodes > b => Err(Error::BudgetExhausted { budget: b }),
            _ => Ok(()),
        }
    }

    /// Unit propagation: a pair whose residual demand equals its number of
    /// undecided candidates forces all of them in. Runs to a fixpoint and
    /// leaves the remaining deficits in `self.deficits`.
    fn propagate(&mut self, chosen: &mut VertexSet, undecided: &mut VertexSet) -> Status {
        loop {
            let mut changed = false;
            self.deficits.clear();
            for (p, c) in self.sets.iter().enumerate() {
                let hit = c.intersection_len(chosen);
                if hit >= self.k {
                    continue;
                }
                let residual = self.k - hit;
                let available = c.intersection_len(undecided);
                if available < residual {
                    return Status::Infeasible;
                }
                if available == residual {
                    let forced = c.intersection(undecided);
                    chosen.union_with(&forced);
                    undecided.difference_with(&forced);
                    changed = true;
                } else {
                    self.deficits.push(Deficit {
                        pair: p,
                        residual,
                        available,
                    });
                }
            }
            if !changed {
                break;
            }
        }
        if self.deficits.is_empty() {
            return Status::Covered;
        }
        let branch = self
            .deficits
            .iter()
            .min_by_key(|d| (d.available - d.residual, d.pair))
            .expect("non-empty");
        let (pair, residual) = (branch.pair, branch.residual);
        let lb = self.lower_bound(undecided);
        Status::Open { lb, pair, residual }
    }

    /// Pairs whose undecided candidates are pairwise disjoint need their
    /// residual demands met by distinct vertices, so the demands add up.
    fn lower_bound(&mut self, undecided: &VertexSet) -> usize {
        let max_residual = self.deficits.iter().map(|d| d.residual).max().unwrap_or(0);
        self.deficits
            .sort_unstable_by_key(|d| (d.available, std::cmp::Reverse(d.residual), d.pair));
        let mut used = VertexSet::empty(self.n);
        let mut packed = 0;
        for d in &self.deficits {
            let cand = self.sets[d.pair].intersection(undecided);
            if cand.is_disjoint(&used) {
                used.union_with(&cand);
                packed += d.residual;
            }
        }
        max_residual.max(packed)
    }

    /// Candidates of `pair`, most useful first.
    fn branch_order(&self, pair: usize, undecided: &VertexSet) -> Vec<usize> {
        let mut cands: Vec<(usize, usize)> = self.sets[pair]
            .intersection(undecided)
            .iter()
            .map(|v| {
                let cover = self
                    .deficits
                    .iter()
                    .filter(|d| self.sets[d.pair].contains(v))
                    .count();
                (cover, v)
            })
            .collect();
        cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        cands.into_iter().map(|(_, v)| v).collect()
    }

    /// Branch and bound: improves `best` whenever a smaller generator turns up.
    fn minimize(
        &mut self,
        mut chosen: VertexSet,
        mut undecided: VertexSet,
        best: &mut VertexSet,
    ) -> Result<()> {
        self.tick()?;
        let (pair, residual) = match self.propagate(&mut chosen, &mut undecided) {
            Status::Infeasible => return Ok(()),
            Status::Covered => {
                if chosen.len() < best.len() {
                    *best = chosen;
                }
                return Ok(());
            }
            Status::Open { lb, pair, residual } => {
                if chosen.len() + lb >= best.len() {
                    return Ok(());
                }
                (pair, residual)
            }
        };
        let cands = self.branch_order(pair, &undecided);
        // one of the first `available - residual + 1` candidates must be taken
        let width = cands.len() - residual + 1;
        for &v in &cands[..width] {
            undecided.remove(v);
            let mut next = chosen.clone();
            next.insert(v);
            self.minimize(next, undecided.clone(), best)?;
        }
        Ok(())
    }

    /// Any generator of size at most `limit` extending `chosen` within
    /// `chosen ∪ undecided`.
    fn find_within(
        &mut self,
        mut chosen: VertexSet,
        mut undecided: VertexSet,
        limit: usize,
    ) -> Result<Option<VertexSet>> {
        self.tick()?;
        let (pair, residual) = match self.propagate(&mut chosen, &mut undecided) {
            Status::Infeasible => return Ok(None),
            Status::Covered => return Ok((chosen.len() <= limit).then_some(chosen)),
            Status::Open { lb, pair, residual } => {
                if chosen.len() + lb > limit {
                    return Ok(None);
                }
                (pair, residual)
            }
        };
        let cands = self.branch_order(pair, &undecided);
        let width = cands.len() - residual + 1;
        for &v in &cands[..width] {
            undecided.remove(v);
            let mut next = chosen.clone();
            next.insert(v);
            if let Some(found) = self.find_within(next, undecided.clone(), limit)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    /// Every generator of size exactly `size`, given that none is smaller.
    /// Include-first branching on the lowest undecided vertex emits them in
    /// ascending lexicographic order.
    fn enumerate(
        &mut self,
        mut chosen: VertexSet,
        mut undecided: VertexSet,
        size: usize,
        out: &mut Vec<VertexSet>,
        cap: usize,
    ) -> Result<()> {
        self.tick()?;
        match self.propagate(&mut chosen, &mut undecided) {
            Status::Infeasible => return Ok(()),
            Status::Covered => {
                if chosen.len() == size {
                    if out.len() == cap {
                        return Err(Error::BasisCapExceeded { cap });
                    }
                    out.push(chosen);
                }
                return Ok(());
            }
            Status::Open { lb, .. } => {
                if chosen.len() + lb > size {
                    return Ok(());
                }
            }
        }
        let v = undecided.first().expect("open node has undecided vertices");
        undecided.remove(v);
        let mut with = chosen.clone();
        with.insert(v);
        self.enumerate(with, undecided.clone(), size, out, cap)?;
        self.enumerate(chosen, undecided, size, out, cap)
    }
}

/// Exact solve on a prebuilt table (any truncation level).
pub fn solve_table(table: &DistinguishTable, k: u32, opts: &SolveOptions) -> Result<SolveResult> {
    let start = Instant::now();
    let n = table.order();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    check_k(table, k)?;

    let forced = table.forced_set(k)?;
    let greedy = greedy_bound(table, k);
    let mut search = Search::new(table, k, opts.budget);

    let full = VertexSet::full(n);
    let mut best = greedy.clone();
    search.minimize(forced.clone(), full.difference(&forced), &mut best)?;
    let dimension = best.len();

    // Fix vertices in ascending order, taking each one whenever an optimum
    // generator still exists with it.
    let mut chosen = forced.clone();
    let mut undecided = full.difference(&forced);
    for v in 0..n {
        if !undecided.contains(v) {
            continue;
        }
        undecided.remove(v);
        let mut with = chosen.clone();
        with.insert(v);
        if search
            .find_within(with.clone(), undecided.clone(), dimension)?
            .is_some()
        {
            chosen = with;
        }
        if chosen.len() == dimension && is_k_generator(table, k, &chosen) {
            break;
        }
    }
    let witness = chosen;
    debug_assert_eq!(witness.len(), dimension);
    debug_assert!(is_k_generator(table, k, &witness));

    let (all_bases, unique) = if opts.enumerate || opts.check_unique {
        let cap = if opts.enumerate { opts.basis_cap } else { 2 };
        let mut out = Vec::new();
        let res = search.enumerate(
            forced.clone(),
            full.difference(&forced),
            dimension,
            &mut out,
            cap,
        );
        let unique = match res {
            Ok(()) => out.len() == 1,
            Err(Error::BasisCapExceeded { .. }) if !opts.enumerate => false,
            Err(e) => return Err(e),
        };
        (opts.enumerate.then_some(out), Some(unique))
    } else {
        (None, None)
    };

    Ok(SolveResult {
        k,
        dimension,
        witness,
        all_bases,
        unique,
        stats: SolveStats {
            nodes: search.nodes,
            forced: forced.len(),
            greedy: greedy.len(),
            elapsed: start.elapsed(),
        },
    })
}

pub fn solve_adim(g: &Graph, k: u32) -> Result<SolveResult> {
    solve_adim_with(g, k, &SolveOptions::default())
}

pub fn solve_adim_with(g: &Graph, k: u32, opts: &SolveOptions) -> Result<SolveResult> {
    solve_table(&DistinguishTable::build(g, 2)?, k, opts)
}

/// `adim_k(g)` only.
pub fn adim(g: &Graph, k: u32) -> Result<usize> {
    Ok(solve_adim(g, k)?.dimension)
}

/// `k`-metric dimension of a connected graph: the same search on the
/// table for `t = diameter`.
pub fn solve_dim(g: &Graph, k: u32) -> Result<SolveResult> {
    solve_dim_with(g, k, &SolveOptions::default())
}

pub fn solve_dim_with(g: &Graph, k: u32, opts: &SolveOptions) -> Result<SolveResult> {
    if g.order() < 2 {
        return Err(Error::TooSmall {
            n: g.order(),
            min: 2,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    solve_table(&DistinguishTable::build_full_metric(g)?, k, opts)
}

/// All optimum `k`-adjacency generators in ascending lexicographic order.
pub fn enumerate_bases(g: &Graph, k: u32) -> Result<Vec<VertexSet>> {
    let table = DistinguishTable::build(g, 2)?;
    enumerate_table_bases(&table, k, &SolveOptions::default())
}

pub fn enumerate_table_bases(
    table: &DistinguishTable,
    k: u32,
    opts: &SolveOptions,
) -> Result<Vec<VertexSet>> {
    let opts = SolveOptions {
        enumerate: true,
        ..opts.clone()
    };
    Ok(solve_table(table, k, &opts)?
        .all_bases
        .expect("enumeration requested"))
}

/// Largest number of subsets brute force will test at one size once the
/// order exceeds 14.
pub const BRUTE_FORCE_EVALUATIONS: u128 = 5_000_000;

fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Independent oracle: tries every subset by increasing size, lexicographic
/// within a size; the first generator found wins.
pub fn brute_force_adim(g: &Graph, k: u32, size_cap: usize) -> Result<SolveResult> {
    brute_force_table(&DistinguishTable::build(g, 2)?, k, size_cap)
}

pub fn brute_force_table(table: &DistinguishTable, k: u32, size_cap: usize) -> Result<SolveResult> {
    let start = Instant::now();
    let n = table.order();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    if k == 0 {
        return Err(Error::BadParameter("k must be >= 1".into()));
    }
    let mut evaluated = 0u64;
    for size in (k as usize)..=size_cap.min(n) {
        if n > 14 && binomial(n, size) > BRUTE_FORCE_EVALUATIONS {
            return Err(Error::BruteForceLimit { n, size });
        }
        for combo in (0..n).combinations(size) {
            evaluated += 1;
            let s = VertexSet::from_indices(n, combo);
            if is_k_generator(table, k, &s) {
                return Ok(SolveResult {
                    k,
                    dimension: size,
                    witness: s,
                    all_bases: None,
                    unique: None,
                    stats: SolveStats {
                        nodes: evaluated,
                        elapsed: start.elapsed(),
                        ..SolveStats::default()
                    },
                });
            }
        }
    }
    Err(Error::CapExceeded { cap: size_cap })
}
