//! Truncated metrics `d_t(x, y) = min(d(x, y), t)` and the sets of vertices
//! that distinguish each pair under them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub fn truncated_distance(g: &Graph, t: u32, x: usize, y: usize) -> Result<u32> {
    check_level(t)?;
    check_vertex(g, y)?;
    Ok(g.bfs_distances(x)?[y].truncate(t))
}

/// Every `z` with `d_t(x, z) != d_t(y, z)`, computed from BFS.
pub fn distinguishing_set(g: &Graph, t: u32, x: usize, y: usize) -> Result<VertexSet> {
    check_level(t)?;
    check_vertex(g, x)?;
    check_vertex(g, y)?;
    if x == y {
        return Err(Error::SamePair(x));
    }
    let dx = g.bfs_distances(x)?;
    let dy = g.bfs_distances(y)?;
    Ok(VertexSet::from_indices(
        g.order(),
        (0..g.order()).filter(|&z| dx[z].truncate(t) != dy[z].truncate(t)),
    ))
}

fn check_level(t: u32) -> Result<()> {
    if t == 0 {
        return Err(Error::BadParameter(
            "truncation level t must be >= 1".into(),
        ));
    }
    Ok(())
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.order() {
        return Err(Error::OutOfRange {
            vertex: v,
            n: g.order(),
        });
    }
    Ok(())
}

/// Index of the pair `x < y` in a flat upper-triangle array over `n` vertices.
#[inline]
pub fn pair_rank(n: usize, x: usize, y: usize) -> usize {
    debug_assert!(x < y && y < n);
    x * n - x * (x + 1) / 2 + (y - x - 1)
}

/// For a fixed graph and level `t`, the distinguishing set of every unordered pair.
#[derive(Clone, Debug)]
pub struct DistinguishTable {
    n: usize,
    t: u32,
    sets: Vec<VertexSet>,
    sizes: Vec<u32>,
}

impl DistinguishTable {
    pub fn build(g: &Graph, t: u32) -> Result<Self> {
        check_level(t)?;
        let n = g.order();
        let mut sets = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        if t == 2 {
            // z outside {x, y} distinguishes x, y iff it is adjacent to exactly one of them.
            for x in 0..n {
                for y in x + 1..n {
                    let mut s = g.neighbors(x).symmetric_difference(g.neighbors(y));
                    s.insert(x);
                    s.insert(y);
                    sets.push(s);
                }
            }
        } else {
            let dist: Vec<Vec<u32>> = g
                .distance_matrix()
                .into_iter()
                .map(|row| row.into_iter().map(|d| d.truncate(t)).collect())
                .collect();
            for x in 0..n {
                for y in x + 1..n {
                    sets.push(VertexSet::from_indices(
                        n,
                        (0..n).filter(|&z| dist[x][z] != dist[y][z]),
                    ));
                }
            }
        }
        let sizes = sets.iter().map(|s| s.len() as u32).collect();
        Ok(DistinguishTable { n, t, sets, sizes })
    }

    /// Table under the unbounded shortest-path metric, i.e. `t = diameter`.
    pub fn build_full_metric(g: &Graph) -> Result<Self> {
        let t = g.diameter().finite().ok_or(Error::Disconnected)?.max(1);
        Self::build(g, t)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn level(&self) -> u32 {
        self.t
    }

    pub fn pair_count(&self) -> usize {
        self.sets.len()
    }

    pub fn get(&self, x: usize, y: usize) -> &VertexSet {
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        &self.sets[pair_rank(self.n, a, b)]
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    /// `(x, y, set)` for every pair `x < y`, in rank order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, &VertexSet)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |x| (x + 1..n).map(move |y| (x, y)))
            .zip(&self.sets)
            .map(|((x, y), s)| (x, y, s))
    }

    /// Smallest distinguishing-set size: the largest `k` admitting a
    /// `k`-generator.
    pub fn dimensionality(&self) -> Result<u32> {
        self.sizes
            .iter()
            .copied()
            .min()
            .ok_or(Error::TooSmall { n: self.n, min: 2 })
    }

    /// Union of the pair sets of size exactly `k`; every `k`-basis contains it.
    pub fn forced_set(&self, k: u32) -> Result<VertexSet> {
        let max = self.dimensionality()?;
        if k > max {
            return Err(Error::KTooLarge { k, max });
        }
        let mut forced = VertexSet::empty(self.n);
        for (s, &len) in self.sets.iter().zip(&self.sizes) {
            if len == k {
                forced.union_with(s);
            }
        }
        Ok(forced)
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Pair<'a> {
            x: usize,
            y: usize,
            set: &'a VertexSet,
        }
        #[derive(Serialize)]
        struct Dump<'a> {
            n: usize,
            t: u32,
            pairs: Vec<Pair<'a>>,
        }
        let dump = Dump {
            n: self.n,
            t: self.t,
            pairs: self.pairs().map(|(x, y, set)| Pair { x, y, set }).collect(),
        };
        serde_json::to_value(dump).expect("table serialises")
    }
}

/// Dimensionality of `K1 + h` from `h` alone: `min(C(h), n - Δ(h) + 1)`.
pub fn cone_dimensionality(h: &Graph) -> Result<u32> {
    let n = h.order();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let ch = DistinguishTable::build(h, 2)?.dimensionality()?;
    Ok(ch.min((n - h.max_degree() + 1) as u32))
}

/// Dimensionality of `g + h`: `min(C(g), C(h), n1 - Δ(g) + n2 - Δ(h))`.
pub fn join_dimensionality(g: &Graph, h: &Graph) -> Result<u32> {
    for x in [g, h] {
        if x.order() < 2 {
            return Err(Error::TooSmall {
                n: x.order(),
                min: 2,
            });
        }
    }
    let cg = DistinguishTable::build(g, 2)?.dimensionality()?;
    let ch = DistinguishTable::build(h, 2)?.dimensionality()?;
    let cross = g.order() - g.max_degree() + h.order() - h.max_degree();
    Ok(cg.min(ch).min(cross as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::graph::{cone, disjoint_union, join};

    #[test]
    fn truncation() {
        let p5 = path(5);
        assert_eq!(truncated_distance(&p5, 2, 0, 4).unwrap(), 2);
        assert_eq!(truncated_distance(&p5, 4, 0, 4).unwrap(), 4);
        let g = disjoint_union(&complete(1), &complete(2));
        assert_eq!(truncated_distance(&g, 2, 0, 1).unwrap(), 2);
        assert!(matches!(
            truncated_distance(&p5, 0, 0, 1),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(
            truncated_distance(&p5, 2, 0, 9),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn pair_sets() {
        let k3 = complete(3);
        assert_eq!(
            distinguishing_set(&k3, 2, 0, 1).unwrap().to_vec(),
            vec![0, 1]
        );
        let p4 = path(4);
        assert_eq!(
            distinguishing_set(&p4, 2, 0, 1).unwrap().to_vec(),
            vec![0, 1, 2]
        );
        let c7 = cycle(7).unwrap();
        assert_eq!(
            distinguishing_set(&c7, 2, 3, 4).unwrap().to_vec(),
            vec![2, 3, 4, 5]
        );
        assert_eq!(distinguishing_set(&c7, 2, 3, 3), Err(Error::SamePair(3)));
    }

    #[test]
    fn pair_rank_is_dense() {
        let n = 9;
        let mut seen = vec![false; n * (n - 1) / 2];
        for x in 0..n {
            for y in x + 1..n {
                let r = pair_rank(n, x, y);
                assert!(!seen[r]);
                seen[r] = true;
            }
        }
        assert!(seen.into_iter().all(|b| b));
    }

    #[test]
    fn table_shapes() {
        let t = DistinguishTable::build(&complete(2), 2).unwrap();
        assert_eq!(t.pair_count(), 1);
        assert_eq!(t.get(0, 1).to_vec(), vec![0, 1]);

        // Petersen: 3-regular, girth 5, so every pair (adjacent or at
        // distance 2) is split by exactly 4 outside vertices
        let t = DistinguishTable::build(&petersen(), 2).unwrap();
        assert!(t.sizes().iter().all(|&s| s == 6));

        let t = DistinguishTable::build(&path(6), 2).unwrap();
        assert!(t.sizes().contains(&3));
        assert_eq!(t.get(0, 1).to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn dimensionality_values() {
        let dim = |g: &Graph| {
            DistinguishTable::build(g, 2)
                .unwrap()
                .dimensionality()
                .unwrap()
        };
        assert_eq!(dim(&hypercube(3).unwrap()), 4);
        assert_eq!(dim(&hypercube(4).unwrap()), 6);
        assert_eq!(dim(&cycle(8).unwrap()), 4);
        assert_eq!(dim(&path(7)), 3);
        assert_eq!(dim(&complete(5)), 2);
        assert_eq!(dim(&petersen()), 6);
        assert!(matches!(
            DistinguishTable::build(&complete(1), 2)
                .unwrap()
                .dimensionality(),
            Err(Error::TooSmall { .. })
        ));
    }

    #[test]
    fn forced_sets() {
        let t = DistinguishTable::build(&cycle(5).unwrap(), 2).unwrap();
        assert_eq!(t.forced_set(4).unwrap().len(), 5);
        let t = DistinguishTable::build(&path(6), 2).unwrap();
        assert_eq!(t.forced_set(3).unwrap().to_vec(), vec![0, 1, 2, 3, 4, 5]);
        let t = DistinguishTable::build(&petersen(), 2).unwrap();
        assert!(t.forced_set(2).unwrap().is_empty());
        assert_eq!(t.forced_set(6).unwrap().len(), 10);
        assert_eq!(t.forced_set(7), Err(Error::KTooLarge { k: 7, max: 6 }));
    }

    #[test]
    fn cone_and_join_closed_forms() {
        let c7 = cycle(7).unwrap();
        assert_eq!(cone_dimensionality(&c7).unwrap(), 4);
        let k3 = complete(3);
        assert_eq!(join_dimensionality(&k3, &k3).unwrap(), 2);
        let p9 = path(9);
        assert_eq!(cone_dimensionality(&p9).unwrap(), 3);
        for h in [
            c7.clone(),
            p9.clone(),
            petersen(),
            fig3_graph(),
            fig5_graph(),
        ] {
            let direct = DistinguishTable::build(&cone(&h), 2)
                .unwrap()
                .dimensionality()
                .unwrap();
            assert_eq!(cone_dimensionality(&h).unwrap(), direct);
        }
        let direct = DistinguishTable::build(&join(&c7, &p9), 2)
            .unwrap()
            .dimensionality()
            .unwrap();
        assert_eq!(join_dimensionality(&c7, &p9).unwrap(), direct);
    }

    #[test]
    fn json_dump() {
        let v = DistinguishTable::build(&path(3), 2).unwrap().to_json();
        assert_eq!(v["n"], 3);
        assert_eq!(v["t"], 2);
        assert_eq!(v["pairs"].as_array().unwrap().len(), 3);
        assert_eq!(v["pairs"][0]["set"], serde_json::json!([0, 1, 2]));
    }
}
