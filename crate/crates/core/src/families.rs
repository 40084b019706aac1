//! Graphs that keep every neighbourhood of a fixed vertex set `B` and vary
//! freely on the pairs outside it.
//!
//! Member `mask` has the `i`-th free pair (lexicographic order over `V - B`)
//! as an edge iff bit `i` of `mask` is set.

use std::ops::Range;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::DistinguishTable;
use crate::solver::{is_k_generator, solve_adim};
use crate::vertex_set::VertexSet;

/// Above this many free pairs an explicit limit is required.
pub const MAX_UNLIMITED_FREE_PAIRS: usize = 40;

#[derive(Clone, Debug)]
pub struct FamilySpec {
    base: Graph,
    basis: VertexSet,
    free: Vec<usize>,
    free_pairs: Vec<(usize, usize)>,
}

impl FamilySpec {
    pub fn new(g: &Graph, basis: &VertexSet) -> Result<Self> {
        let n = g.order();
        if let Some(v) = basis.iter().find(|&v| v >= n) {
            return Err(Error::OutOfRange { vertex: v, n });
        }
        let free: Vec<usize> = (0..n).filter(|&v| !basis.contains(v)).collect();
        let free_pairs = free
            .iter()
            .enumerate()
            .flat_map(|(i, &u)| free[i + 1..].iter().map(move |&v| (u, v)))
            .collect();
        Ok(FamilySpec {
            base: g.clone(),
            basis: VertexSet::from_indices(n, basis.iter()),
            free,
            free_pairs,
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn basis(&self) -> &VertexSet {
        &self.basis
    }

    pub fn free_vertices(&self) -> &[usize] {
        &self.free
    }

    pub fn free_pairs(&self) -> &[(usize, usize)] {
        &self.free_pairs
    }

    /// `2^(m(m-1)/2)` for `m` free vertices; `None` when it overflows `u128`.
    pub fn family_size(&self) -> Option<u128> {
        1u128.checked_shl(self.free_pairs.len() as u32)
    }

    /// Number of masks an unlimited enumeration would visit, if it fits `u64`.
    fn mask_count(&self) -> Option<u64> {
        1u64.checked_shl(self.free_pairs.len() as u32)
    }

    /// The member with edge set chosen by `mask` inside `V - B`.
    pub fn member(&self, mask: u64) -> Graph {
        let n = self.base.order();
        let mut adj: Vec<VertexSet> = (0..n).map(|v| self.base.neighbors(v).clone()).collect();
        for &(u, v) in &self.free_pairs {
            adj[u].remove(v);
            adj[v].remove(u);
        }
        for (i, &(u, v)) in self.free_pairs.iter().enumerate().take(64) {
            if mask >> i & 1 == 1 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        Graph::from_rows_unchecked(adj)
    }

    /// Whether `g` keeps every neighbourhood of the basis.
    pub fn contains(&self, g: &Graph) -> bool {
        g.order() == self.base.order()
            && self
                .basis
                .iter()
                .all(|x| g.neighbors(x) == self.base.neighbors(x))
    }

    /// Masks `0..limit`, or every mask when no limit is given.
    pub fn mask_range(&self, limit: Option<u64>) -> Result<Range<u64>> {
        match (limit, self.mask_count()) {
            (Some(l), Some(c)) => Ok(0..l.min(c)),
            (Some(l), None) => Ok(0..l),
            (None, Some(c)) if self.free_pairs.len() <= MAX_UNLIMITED_FREE_PAIRS => Ok(0..c),
            (None, _) => Err(Error::LimitRequired {
                free_pairs: self.free_pairs.len(),
            }),
        }
    }

    pub fn members(&self, masks: Range<u64>) -> impl Iterator<Item = Graph> + '_ {
        masks.map(move |m| self.member(m))
    }
}

/// Members of the family of `g` around `basis`, in mask order, at most `limit`.
pub fn enumerate_family(
    g: &Graph,
    basis: &VertexSet,
    limit: Option<u64>,
) -> Result<impl Iterator<Item = Graph>> {
    let spec = FamilySpec::new(g, basis)?;
    let range = spec.mask_range(limit)?;
    Ok(range.map(move |m| spec.member(m)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyFailure {
    /// The member changed a basis neighbourhood.
    NotInFamily,
    /// The basis stopped being a generator.
    NotGenerator,
    /// The member's dimension exceeds the base dimension.
    DimensionAbove,
    /// The dimension moved although it is pinned at `k + 1` or `k + 2`.
    NotRigid,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyViolation {
    pub mask: u64,
    pub failure: FamilyFailure,
    pub observed: usize,
    pub expected: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub k: u32,
    pub basis: VertexSet,
    pub base_dimension: usize,
    /// Exact dimension every member must have, when pinned.
    pub rigid: Option<usize>,
    pub family_size: Option<u128>,
    pub checked: u64,
    /// Member dimension histogram as `(dimension, count)`, ascending.
    pub dimensions: Vec<(usize, u64)>,
    pub violations: Vec<FamilyViolation>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Takes the lexicographically smallest `k`-basis `B` of `g` and checks
/// every member (up to `limit`) keeps `B` as a generator with dimension at
/// most `|B|`, and exactly `|B|` when that value is `k + 1` (`n >= 4`) or
/// `k + 2` (`n >= 7`).
pub fn verify_family_theorem(g: &Graph, k: u32, limit: Option<u64>) -> Result<FamilyReport> {
    let base = solve_adim(g, k)?;
    let spec = FamilySpec::new(g, &base.witness)?;
    let range = spec.mask_range(limit)?;
    verify_family_masks(&spec, k, range)
}

/// Checks a contiguous mask range; ranges may be verified independently
/// and their reports merged.
pub fn verify_family_masks(spec: &FamilySpec, k: u32, masks: Range<u64>) -> Result<FamilyReport> {
    let n = spec.base().order();
    let bound = spec.basis().len();
    let ku = k as usize;
    let rigid = ((bound == ku + 1 && n >= 4) || (bound == ku + 2 && n >= 7)).then_some(bound);

    let outcomes: Vec<(u64, usize, Vec<FamilyViolation>)> = masks
        .clone()
        .into_par_iter()
        .map(|mask| -> Result<_> {
            let member = spec.member(mask);
            let mut bad = Vec::new();
            let mut flag = |failure, observed, expected| {
                bad.push(FamilyViolation {
                    mask,
                    failure,
                    observed,
                    expected,
                })
            };
            if !spec.contains(&member) {
                flag(FamilyFailure::NotInFamily, 0, 0);
            }
            let table = DistinguishTable::build(&member, 2)?;
            if !is_k_generator(&table, k, spec.basis()) {
                flag(FamilyFailure::NotGenerator, 0, 0);
                return Ok((mask, 0, bad));
            }
            let d = crate::solver::solve_table(&table, k, &Default::default())?.dimension;
            if d > bound {
                flag(FamilyFailure::DimensionAbove, d, bound);
            }
            if let Some(r) = rigid {
                if d != r {
                    flag(FamilyFailure::NotRigid, d, r);
                }
            }
            Ok((mask, d, bad))
        })
        .collect::<Result<_>>()?;

    let mut hist = std::collections::BTreeMap::new();
    let mut violations = Vec::new();
    for (_, d, bad) in outcomes {
        if d > 0 {
            *hist.entry(d).or_insert(0u64) += 1;
        }
        violations.extend(bad);
    }
    Ok(FamilyReport {
        k,
        basis: spec.basis().clone(),
        base_dimension: bound,
        rigid,
        family_size: spec.family_size(),
        checked: masks.end - masks.start,
        dimensions: hist.into_iter().collect(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn sizes() {
        let g = fig3_graph();
        let b = VertexSet::from_indices(9, [1, 2, 3, 4]);
        let spec = FamilySpec::new(&g, &b).unwrap();
        assert_eq!(spec.free_vertices(), &[0, 5, 6, 7, 8]);
        assert_eq!(spec.family_size(), Some(1024));
        assert_eq!(enumerate_family(&g, &b, None).unwrap().count(), 1024);

        let all = VertexSet::full(9);
        let members: Vec<_> = enumerate_family(&g, &all, None).unwrap().collect();
        assert_eq!(members, vec![g.clone()]);

        let p4 = path(4);
        let members: Vec<_> = enumerate_family(&p4, &VertexSet::from_indices(4, [0, 1]), None)
            .unwrap()
            .collect();
        assert_eq!(members.len(), 2);
        assert!(!members[0].has_edge(2, 3));
        assert!(members[1].has_edge(2, 3));
    }

    #[test]
    fn members_are_distinct_and_agree_on_basis() {
        let g = fig3_graph();
        let spec = FamilySpec::new(&g, &VertexSet::from_indices(9, [1, 2, 3, 4])).unwrap();
        let members: Vec<_> = spec.members(0..1024).collect();
        assert!(members.iter().all(|m| spec.contains(m)));
        let distinct: std::collections::HashSet<_> =
            members.iter().map(crate::graph6::to_graph6).collect();
        assert_eq!(distinct.len(), 1024);
        assert!(members.contains(&g));
    }

    #[test]
    fn limit_required() {
        let g = empty_graph(10);
        let spec = FamilySpec::new(&g, &VertexSet::empty(10)).unwrap();
        assert_eq!(spec.free_pairs().len(), 45);
        assert_eq!(
            spec.mask_range(None),
            Err(Error::LimitRequired { free_pairs: 45 })
        );
        assert_eq!(spec.mask_range(Some(7)).unwrap(), 0..7);
        assert!(matches!(
            FamilySpec::new(&g, &VertexSet::from_indices(12, [11])),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn theorem_on_small_fixtures() {
        let r = verify_family_theorem(&cycle(5).unwrap(), 3, None).unwrap();
        assert_eq!(r.checked, 1);
        assert!(r.passed());
        let r = verify_family_theorem(&path(6), 1, None).unwrap();
        assert_eq!(r.checked, 1 << 6);
        assert!(r.passed());
        assert!(matches!(
            verify_family_theorem(&path(6), 4, None),
            Err(Error::KExceedsDimensionality { .. })
        ));
    }
}
