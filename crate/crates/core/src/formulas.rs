//! Closed-form values for named families and decidable criteria on cones
//! `K1 + H` and joins `G + H`.
//!
//! Formula queries outside the range where a value is known are refused
//! with `OutOfProvenRange`; they never extrapolate.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators;
use crate::graph::{cone, Graph};
use crate::metric::{cone_dimensionality, join_dimensionality, DistinguishTable};
use crate::solver::{adim, enumerate_table_bases, SolveOptions};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Empty,
    CompleteBipartite,
    Fan,
    Wheel,
    Petersen,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Empty,
        Family::CompleteBipartite,
        Family::Fan,
        Family::Wheel,
        Family::Petersen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Empty => "empty",
            Family::CompleteBipartite => "kbip",
            Family::Fan => "fan",
            Family::Wheel => "wheel",
            Family::Petersen => "petersen",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }

    /// Human-readable description of the `(params, k)` range with known values.
    pub fn proven_range(self) -> &'static str {
        match self {
            Family::Path => "k=1: n>=2; k=2,3: n>=4 (k=2 also n=2,3)",
            Family::Cycle => "k=1: n>=4; k=2,3,4: n>=5",
            Family::Complete | Family::Empty => "k=1,2: n>=2",
            Family::CompleteBipartite => "k=1,2: r,s>=2",
            Family::Fan => "k=1: n>=1; k=2: n>=2; k=3: n>=4",
            Family::Wheel => "k=1,2: n>=3; k=3,4: n>=5",
            Family::Petersen => "k=1..6",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::Petersen => 0,
            Family::CompleteBipartite => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaQuery {
    pub family: Family,
    pub params: Vec<usize>,
    pub k: u32,
}

impl FormulaQuery {
    pub fn new(family: Family, params: &[usize], k: u32) -> Self {
        FormulaQuery {
            family,
            params: params.to_vec(),
            k,
        }
    }

    /// The graph the query talks about.
    pub fn graph(&self) -> Result<Graph> {
        self.check_arity()?;
        let p = &self.params;
        match self.family {
            Family::Path => Ok(generators::path(p[0])),
            Family::Cycle => generators::cycle(p[0]),
            Family::Complete => Ok(generators::complete(p[0])),
            Family::Empty => Ok(generators::empty_graph(p[0])),
            Family::CompleteBipartite => generators::complete_bipartite(p[0], p[1]),
            Family::Fan => Ok(generators::fan(p[0])),
            Family::Wheel => generators::wheel(p[0]),
            Family::Petersen => Ok(generators::petersen()),
        }
    }

    fn check_arity(&self) -> Result<()> {
        if self.params.len() != self.family.arity() {
            return Err(Error::BadParameter(format!(
                "{} takes {} parameter(s), got {}",
                self.family.name(),
                self.family.arity(),
                self.params.len()
            )));
        }
        Ok(())
    }

    fn refuse(&self) -> Error {
        let params = self
            .params
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        Error::OutOfProvenRange {
            query: format!("{}({params}), k={}", self.family.name(), self.k),
            range: self.family.proven_range().to_string(),
        }
    }
}

fn adim1_path_like(n: usize) -> usize {
    (2 * n + 2) / 5
}

/// Closed-form `adim_k` for a family member.
pub fn formula_adim(q: &FormulaQuery) -> Result<usize> {
    q.check_arity()?;
    let k = q.k;
    let value = match q.family {
        Family::Path => {
            let n = q.params[0];
            match (k, n) {
                (1, 2 | 3) => Some(1),
                (2, 2 | 3) => Some(2),
                (1, n) if n >= 4 => Some(adim1_path_like(n)),
                (2, n) if n >= 4 => Some((n + 2) / 2),
                (3, n) if n >= 4 => Some(n - (n - 4) / 5),
                _ => None,
            }
        }
        Family::Cycle => {
            let n = q.params[0];
            match (k, n) {
                (1, n) if n >= 4 => Some(adim1_path_like(n)),
                (2, n) if n >= 5 => Some(n.div_ceil(2)),
                (3, n) if n >= 5 => Some(n - n / 5),
                (4, n) if n >= 5 => Some(n),
                _ => None,
            }
        }
        Family::Complete | Family::Empty => {
            let n = q.params[0];
            match (k, n) {
                (1, n) if n >= 2 => Some(n - 1),
                (2, n) if n >= 2 => Some(n),
                _ => None,
            }
        }
        Family::CompleteBipartite => {
            let (r, s) = (q.params[0], q.params[1]);
            match k {
                1 if r >= 2 && s >= 2 => Some(r + s - 2),
                2 if r >= 2 && s >= 2 => Some(r + s),
                _ => None,
            }
        }
        Family::Fan => {
            let n = q.params[0];
            match (k, n) {
                (1, 1) => Some(1),
                (1, 2..=5) => Some(2),
                (1, 6) => Some(3),
                (1, n) if n >= 7 => Some(adim1_path_like(n)),
                (2, 2) => Some(3),
                (2, 3..=5) => Some(4),
                (2, n) if n >= 6 => Some((n + 2) / 2),
                (3, 4 | 5) => Some(5),
                (3, n) if n >= 6 => Some(n - (n - 4) / 5),
                _ => None,
            }
        }
        Family::Wheel => {
            let n = q.params[0];
            match (k, n) {
                (1, 3 | 6) => Some(3),
                (1, n) if n >= 4 => Some(adim1_path_like(n)),
                (2, 3..=6) => Some(4),
                (2, n) if n >= 7 => Some(n.div_ceil(2)),
                (3, 5 | 6) => Some(5),
                (3, n) if n >= 7 => Some(n - n / 5),
                (4, 5 | 6) => Some(6),
                (4, n) if n >= 7 => Some(n),
                _ => None,
            }
        }
        Family::Petersen => match k {
            1..=6 => Some([3, 4, 7, 8, 9, 10][k as usize - 1]),
            _ => None,
        },
    };
    value.ok_or_else(|| q.refuse())
}

/// Every `(family, params, k)` with a closed form and order at most `max_n`.
pub fn formula_queries(max_n: usize) -> Vec<FormulaQuery> {
    let mut out = Vec::new();
    for family in Family::ALL {
        let param_sets: Vec<Vec<usize>> = match family {
            Family::Petersen if max_n >= 10 => vec![vec![]],
            Family::Petersen => vec![],
            Family::CompleteBipartite => (2..=max_n)
                .flat_map(|r| (r..=max_n.saturating_sub(r)).map(move |s| vec![r, s]))
                .collect(),
            Family::Fan | Family::Wheel => (1..max_n).map(|n| vec![n]).collect(),
            _ => (1..=max_n).map(|n| vec![n]).collect(),
        };
        for params in param_sets {
            for k in 1..=6 {
                let q = FormulaQuery::new(family, &params, k);
                if formula_adim(&q).is_ok() {
                    out.push(q);
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Basis(VertexSet),
    Vertex(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub id: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CriterionReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialises")
    }
}

fn check_feasible(k: u32, max: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::BadParameter("k must be >= 1".into()));
    }
    if k > max {
        return Err(Error::KExceedsDimensionality { k, max });
    }
    Ok(())
}

fn nontrivial(g: &Graph) -> Result<()> {
    if g.order() < 2 {
        return Err(Error::TooSmall {
            n: g.order(),
            min: 2,
        });
    }
    Ok(())
}

/// All `k`-adjacency bases of `g`, under the default basis cap.
fn bases(g: &Graph, k: u32) -> Result<Vec<VertexSet>> {
    enumerate_table_bases(&DistinguishTable::build(g, 2)?, k, &SolveOptions::default())
}

/// `min_y |A - N(y)|`: how many basis vertices the worst vertex misses.
fn worst_outside(g: &Graph, a: &VertexSet) -> usize {
    (0..g.order())
        .map(|y| a.difference(g.neighbors(y)).len())
        .min()
        .unwrap_or(0)
}

/// Holds iff some `k`-basis `A` of `h` has `|A - N(y)| >= k` for every `y`,
/// which is exactly when `adim_k(K1 + h) = adim_k(h)`.
pub fn cone_equality_criterion(h: &Graph, k: u32) -> Result<CriterionReport> {
    nontrivial(h)?;
    check_feasible(k, cone_dimensionality(h)?)?;
    let witness = bases(h, k)?
        .into_iter()
        .find(|a| worst_outside(h, a) >= k as usize);
    Ok(CriterionReport {
        id: "cone-equality",
        holds: witness.is_some(),
        witness: witness.map(Witness::Basis),
    })
}

/// Holds iff every `k`-basis `A` of `h` has a vertex `y` with
/// `|A - N(y)| = k - 1` while no vertex drops below `k - 1`. Then
/// `adim_k(K1 + h) = adim_k(h) + 1`. The witness is the critical vertex of
/// the first basis.
pub fn cone_plus_one_criterion(h: &Graph, k: u32) -> Result<CriterionReport> {
    nontrivial(h)?;
    check_feasible(k, cone_dimensionality(h)?)?;
    let k = k as usize;
    let mut witness = None;
    let mut holds = true;
    for a in bases(h, k as u32)? {
        let outside: Vec<usize> = (0..h.order())
            .map(|y| a.difference(h.neighbors(y)).len())
            .collect();
        let critical = outside.iter().position(|&c| c + 1 == k);
        match critical {
            Some(y) if outside.iter().all(|&c| c + 1 >= k) => {
                witness.get_or_insert(y);
            }
            _ => {
                holds = false;
                break;
            }
        }
    }
    Ok(CriterionReport {
        id: "cone-plus-one",
        holds,
        witness: if holds {
            witness.map(Witness::Vertex)
        } else {
            None
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeUpperBound {
    /// `adim_2(h) + 2`, an upper bound on `adim_2(K1 + h)`.
    pub bound: usize,
    /// A universal vertex of `h` lies in no 2-basis.
    pub universal_premise: bool,
    /// An isolated vertex and a vertex of degree `n - 2` both lie in no 2-basis.
    pub isolated_premise: bool,
}

impl ConeUpperBound {
    /// Either premise forces `adim_2(K1 + h)` to equal the bound.
    pub fn tight(&self) -> bool {
        self.universal_premise || self.isolated_premise
    }
}

pub fn adim2_upper_cone(h: &Graph) -> Result<ConeUpperBound> {
    nontrivial(h)?;
    let n = h.order();
    let all = bases(h, 2)?;
    let mut used = VertexSet::empty(n);
    for b in &all {
        used.union_with(b);
    }
    let unused_with_degree = |d: usize| (0..n).any(|v| h.degree(v) == d && !used.contains(v));
    Ok(ConeUpperBound {
        bound: all[0].len() + 2,
        universal_premise: unused_with_degree(n - 1),
        isolated_premise: unused_with_degree(0) && unused_with_degree(n - 2),
    })
}

/// `(adim_k(g) + adim_k(h), adim_k(K1 + g) + adim_k(h))`, which sandwich
/// `adim_k(g + h)`.
pub fn join_bounds(g: &Graph, h: &Graph, k: u32) -> Result<(usize, usize)> {
    nontrivial(g)?;
    nontrivial(h)?;
    let max = join_dimensionality(g, h)?.min(cone_dimensionality(g)?);
    check_feasible(k, max)?;
    let (ag, ah) = (adim(g, k)?, adim(h, k)?);
    Ok((ag + ah, adim(&cone(g), k)? + ah))
}

/// Holds iff some bases `A_g`, `A_h` satisfy
/// `|(A_g - N(x)) ∪ (A_h - N(y))| >= k` for all `x` in `g` and `y` in `h`,
/// which is exactly when `adim_k(g + h) = adim_k(g) + adim_k(h)`. The witness
/// is `A_g ∪ A_h` in the vertex numbering of `join(g, h)`.
pub fn join_equality_criterion(g: &Graph, h: &Graph, k: u32) -> Result<CriterionReport> {
    nontrivial(g)?;
    nontrivial(h)?;
    check_feasible(k, join_dimensionality(g, h)?)?;
    // the two differences are disjoint, so each side can be maximised alone
    let best = |x: &Graph| -> Result<(usize, VertexSet)> {
        let mut best: Option<(usize, VertexSet)> = None;
        for a in bases(x, k)? {
            let w = worst_outside(x, &a);
            if best.as_ref().is_none_or(|(b, _)| w > *b) {
                best = Some((w, a));
            }
        }
        Ok(best.expect("a feasible k has at least one basis"))
    };
    let (wg, ag) = best(g)?;
    let (wh, ah) = best(h)?;
    let holds = wg + wh >= k as usize;
    let n1 = g.order();
    let witness = holds.then(|| {
        VertexSet::from_indices(n1 + h.order(), ag.iter().chain(ah.iter().map(|v| v + n1)))
    });
    Ok(CriterionReport {
        id: "join-equality",
        holds,
        witness: witness.map(Witness::Basis),
    })
}

/// Holds iff `adim_k(g) = n`, decided by whether the forced set is all of
/// `V`. The witness, when it fails, is a vertex outside the forced set.
pub fn full_dimension_criteria(g: &Graph, k: u32) -> Result<CriterionReport> {
    nontrivial(g)?;
    let forced = DistinguishTable::build(g, 2)?.forced_set(k)?;
    let missing = (0..g.order()).find(|&v| !forced.contains(v));
    Ok(CriterionReport {
        id: "full-dimension-k",
        holds: missing.is_none(),
        witness: missing.map(Witness::Vertex),
    })
}

/// `adim_2(g) = n` iff every vertex has a twin.
pub fn full_dimension_by_twins(g: &Graph) -> bool {
    g.twin_partition().all_non_singleton()
}

/// `adim_2(K1 + h) = n + 1` iff `h` has a universal vertex and every
/// non-universal vertex has a twin.
pub fn cone_full_dimension(h: &Graph) -> bool {
    let n = h.order();
    let twins = h.twin_partition();
    h.max_degree() + 1 == n
        && (0..n).all(|v| h.degree(v) + 1 == n || twins.classes[twins.class_of(v)].len() > 1)
}

/// Dimensionality of a tree: 2 when two leaves share a support vertex,
/// otherwise 3.
pub fn tree_dimensionality(t: &Graph) -> Result<u32> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let shared = (0..n).any(|s| t.neighbors(s).iter().filter(|&l| t.degree(l) == 1).count() >= 2);
    Ok(if shared { 2 } else { 3 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::graph::join;
    use crate::solver::solve_adim;

    #[test]
    fn family_values() {
        let q = |f, p: &[usize], k| formula_adim(&FormulaQuery::new(f, p, k)).unwrap();
        assert_eq!(q(Family::Path, &[10], 2), 6);
        assert_eq!(q(Family::Wheel, &[6], 1), 3);
        assert_eq!(q(Family::Fan, &[5], 3), 5);
        assert_eq!(q(Family::Cycle, &[9], 4), 9);
        assert_eq!(q(Family::Petersen, &[], 3), 7);
    }

    #[test]
    fn refusals() {
        for (f, p, k) in [
            (Family::Path, vec![3], 3),
            (Family::Cycle, vec![4], 2),
            (Family::Wheel, vec![4], 3),
            (Family::Fan, vec![3], 3),
            (Family::Petersen, vec![], 7),
            (Family::Complete, vec![5], 3),
        ] {
            let err = formula_adim(&FormulaQuery::new(f, &p, k)).unwrap_err();
            assert!(matches!(err, Error::OutOfProvenRange { .. }), "{err}");
        }
        assert!(matches!(
            formula_adim(&FormulaQuery::new(Family::Path, &[], 1)),
            Err(Error::BadParameter(_))
        ));
    }

    #[test]
    fn small_formulas_match_solver() {
        for q in formula_queries(9) {
            let g = q.graph().unwrap();
            assert_eq!(formula_adim(&q).unwrap(), adim(&g, q.k).unwrap(), "{:?}", q);
        }
    }

    #[test]
    fn cone_equality_examples() {
        let r = cone_equality_criterion(&path(9), 2).unwrap();
        assert!(r.holds);
        assert_eq!(r.id, "cone-equality");
        let r = cone_equality_criterion(&fig3_graph(), 2).unwrap();
        assert!(!r.holds);
        assert_eq!(adim(&cone(&fig3_graph()), 2).unwrap(), 5);
        assert!(matches!(
            cone_equality_criterion(&path(5), 4),
            Err(Error::KExceedsDimensionality { k: 4, max: 3 })
        ));
    }

    #[test]
    fn cone_plus_one_examples() {
        let h = fig4_graph();
        let r = cone_plus_one_criterion(&h, 3).unwrap();
        assert!(r.holds);
        assert_eq!(adim(&cone(&h), 3).unwrap(), adim(&h, 3).unwrap() + 1);
        assert!(!cone_plus_one_criterion(&path(9), 2).unwrap().holds);
        // the only 2-basis of K3 is V and every vertex misses exactly one of it
        assert!(cone_plus_one_criterion(&complete(3), 2).unwrap().holds);
        assert_eq!(adim(&cone(&complete(3)), 2).unwrap(), 4);
    }

    #[test]
    fn upper_cone_examples() {
        for h in [fan(7), wheel(7).unwrap()] {
            let b = adim2_upper_cone(&h).unwrap();
            assert!(b.universal_premise);
            assert_eq!(adim(&cone(&h), 2).unwrap(), b.bound);
        }
        let b = adim2_upper_cone(&path(5)).unwrap();
        assert_eq!(b.bound, 5);
        assert!(!b.tight());
        assert!(adim(&cone(&path(5)), 2).unwrap() < 5);
    }

    #[test]
    fn join_examples() {
        let c7 = cycle(7).unwrap();
        assert_eq!(join_bounds(&c7, &c7, 2).unwrap().0, 8);
        assert_eq!(adim(&join(&complete(3), &c7), 2).unwrap(), 7);
        let p = petersen();
        assert_eq!(adim(&join(&p, &p), 2).unwrap(), 8);

        let c6 = cycle(6).unwrap();
        for g in [complete(2), empty_graph(2)] {
            let r = join_equality_criterion(&g, &c6, 2).unwrap();
            assert!(r.holds);
            let Some(Witness::Basis(w)) = r.witness else {
                panic!()
            };
            let j = join(&g, &c6);
            let table = DistinguishTable::build(&j, 2).unwrap();
            assert!(crate::solver::is_k_generator(&table, 2, &w));
            assert_eq!(w.len(), adim(&j, 2).unwrap());
        }
        let k2 = complete(2);
        assert!(!join_equality_criterion(&k2, &k2, 1).unwrap().holds);
        assert_eq!(adim(&join(&k2, &k2), 1).unwrap(), 3);
    }

    #[test]
    fn full_dimension_examples() {
        let kb = complete_bipartite(2, 3).unwrap();
        assert!(full_dimension_criteria(&kb, 2).unwrap().holds);
        assert!(full_dimension_by_twins(&kb));
        assert!(!full_dimension_criteria(&path(5), 2).unwrap().holds);
        assert!(
            full_dimension_criteria(&cycle(5).unwrap(), 4)
                .unwrap()
                .holds
        );
        assert!(matches!(
            full_dimension_criteria(&path(5), 4),
            Err(Error::KTooLarge { .. })
        ));
        for h in [complete(4), star(3), fan(3), path(4)] {
            assert_eq!(
                cone_full_dimension(&h),
                adim(&cone(&h), 2).unwrap() == h.order() + 1,
                "{:?}",
                h.name()
            );
        }
    }

    #[test]
    fn trees() {
        assert_eq!(tree_dimensionality(&star(3)).unwrap(), 2);
        assert_eq!(tree_dimensionality(&path(6)).unwrap(), 3);
        // spider with three legs of length two
        let spider =
            Graph::from_edge_list(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(tree_dimensionality(&spider).unwrap(), 3);
        assert_eq!(
            DistinguishTable::build(&spider, 2)
                .unwrap()
                .dimensionality()
                .unwrap(),
            3
        );
        assert_eq!(
            tree_dimensionality(&cycle(4).unwrap()),
            Err(Error::NotATree)
        );
        assert!(matches!(
            tree_dimensionality(&path(2)),
            Err(Error::TooSmall { .. })
        ));
        assert_eq!(solve_adim(&spider, 3).unwrap().dimension, 7);
    }
}
