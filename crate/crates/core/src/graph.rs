use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// An immutable simple graph on vertices `0..n`, one neighbourhood bitset per vertex.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    name: Option<String>,
}

/// Shortest-path distance. Vertices in different components are `Infinite`,
/// which compares greater than every finite distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    /// `min(d, t)`, with `Infinite` saturating to `t`.
    #[inline]
    pub fn truncate(self, t: u32) -> u32 {
        match self {
            Distance::Finite(d) => d.min(t),
            Distance::Infinite => t,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwinKind {
    TrueTwin,
    FalseTwin,
    Singleton,
}

/// Twin equivalence classes, ordered by their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinPartition {
    pub classes: Vec<VertexSet>,
    pub kinds: Vec<TwinKind>,
}

impl TwinPartition {
    pub fn class_of(&self, v: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.contains(v))
            .expect("partition covers every vertex")
    }

    pub fn is_twins_free(&self) -> bool {
        self.kinds.iter().all(|&k| k == TwinKind::Singleton)
    }

    /// True when every vertex lies in a class of size at least two.
    pub fn all_non_singleton(&self) -> bool {
        self.kinds.iter().all(|&k| k != TwinKind::Singleton)
    }
}

impl Graph {
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj, name: None })
    }

    /// Build from neighbourhood rows, checking symmetry and irreflexivity.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        for (u, row) in adj.iter().enumerate() {
            for v in row {
                if v >= n {
                    return Err(Error::OutOfRange { vertex: v, n });
                }
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                if !adj[v].contains(u) {
                    return Err(Error::BadParameter(format!(
                        "adjacency is not symmetric at ({u}, {v})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj, name: None })
    }

    pub(crate) fn from_rows_unchecked(adj: Vec<VertexSet>) -> Graph {
        Graph {
            n: adj.len(),
            adj,
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Distance>> {
        if source >= self.n {
            return Err(Error::OutOfRange {
                vertex: source,
                n: self.n,
            });
        }
        let mut dist = vec![Distance::Infinite; self.n];
        dist[source] = Distance::Finite(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let Distance::Finite(du) = dist[u] else {
                unreachable!()
            };
            for v in &self.adj[u] {
                if dist[v] == Distance::Infinite {
                    dist[v] = Distance::Finite(du + 1);
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    pub fn distance_matrix(&self) -> Vec<Vec<Distance>> {
        (0..self.n)
            .map(|s| self.bfs_distances(s).expect("source in range"))
            .collect()
    }

    /// Largest distance between two vertices; `Infinite` when disconnected.
    pub fn diameter(&self) -> Distance {
        let mut best = Distance::Finite(0);
        for s in 0..self.n {
            let far = self
                .bfs_distances(s)
                .expect("source in range")
                .into_iter()
                .max()
                .unwrap_or(Distance::Finite(0));
            if far == Distance::Infinite {
                return far;
            }
            best = best.max(far);
        }
        best
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::singleton(self.n, s);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = VertexSet::empty(self.n);
                for u in &frontier {
                    next.union_with(&self.adj[u]);
                }
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() + 1 == self.n && self.is_connected()
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// `u` and `v` are twins iff `N(u) - {v} = N(v) - {u}`.
    pub fn are_twins(&self, u: usize, v: usize) -> bool {
        let mut nu = self.adj[u].clone();
        nu.remove(v);
        let mut nv = self.adj[v].clone();
        nv.remove(u);
        nu == nv
    }

    pub fn twin_partition(&self) -> TwinPartition {
        let mut assigned = VertexSet::empty(self.n);
        let mut classes = Vec::new();
        let mut kinds = Vec::new();
        for u in 0..self.n {
            if assigned.contains(u) {
                continue;
            }
            let mut class = VertexSet::singleton(self.n, u);
            for v in (u + 1..self.n).filter(|&v| !assigned.contains(v)) {
                if self.are_twins(u, v) {
                    class.insert(v);
                }
            }
            let kind = match class.iter().nth(1) {
                None => TwinKind::Singleton,
                Some(v) if self.has_edge(u, v) => TwinKind::TrueTwin,
                Some(_) => TwinKind::FalseTwin,
            };
            assigned.union_with(&class);
            classes.push(class);
            kinds.push(kind);
        }
        TwinPartition { classes, kinds }
    }

    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|v| {
                let mut row = self.adj[v].complement(self.n);
                row.remove(v);
                row
            })
            .collect();
        Graph::from_rows_unchecked(adj)
    }

    /// Relabel vertices so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::empty(self.n); self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph::from_rows_unchecked(adj)
    }

    /// The subgraph induced on `keep`, relabelled in ascending order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let verts = keep.to_vec();
        let m = verts.len();
        let mut adj = vec![VertexSet::empty(m); m];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i].insert(j);
                }
            }
        }
        Graph::from_rows_unchecked(adj)
    }

    /// Plain edge-list text: a line `n m`, then `m` lines `u v` (0-indexed).
    pub fn to_edge_list_text(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn from_edge_list_text(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let nums = parse_numbers(header)?;
        let [n, m] = nums[..] else {
            return Err(Error::Parse(format!("expected `n m`, got {header:?}")));
        };
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let nums = parse_numbers(line)?;
            let [u, v] = nums[..] else {
                return Err(Error::Parse(format!("expected `u v`, got {line:?}")));
            };
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header declares {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::from_edge_list(n, &edges)
    }
}

fn parse_numbers(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("not a number: {t:?}")))
        })
        .collect()
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("Graph");
        if let Some(name) = &self.name {
            d.field("name", name);
        }
        d.field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

/// Disjoint union plus every edge between the two sides. `g` keeps indices
/// `0..n1`, `h` is shifted by `n1`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let (n1, n) = (g.order(), g.order() + h.order());
    let mut adj = Vec::with_capacity(n);
    for u in 0..n1 {
        let mut row = VertexSet::from_indices(n, g.neighbors(u).iter());
        for v in n1..n {
            row.insert(v);
        }
        adj.push(row);
    }
    for u in 0..h.order() {
        let mut row = VertexSet::from_indices(n, h.neighbors(u).iter().map(|v| v + n1));
        for v in 0..n1 {
            row.insert(v);
        }
        adj.push(row);
    }
    Graph::from_rows_unchecked(adj)
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let (n1, n) = (g.order(), g.order() + h.order());
    let mut adj = Vec::with_capacity(n);
    for u in 0..n1 {
        adj.push(VertexSet::from_indices(n, g.neighbors(u).iter()));
    }
    for u in 0..h.order() {
        adj.push(VertexSet::from_indices(
            n,
            h.neighbors(u).iter().map(|v| v + n1),
        ));
    }
    Graph::from_rows_unchecked(adj)
}

/// `K1 + h`, with the cone vertex at index 0.
pub fn cone(h: &Graph) -> Graph {
    join(&Graph::from_rows_unchecked(vec![VertexSet::empty(1)]), h)
}
