//! Named graph families and the fixtures drawn in the figures.
//!
//! Figure fixtures are numbered from 1 in the drawings; here vertex `i`
//! of a drawing becomes index `i - 1` unless the drawing itself starts at 0.

use crate::error::{Error, Result};
use crate::graph::{join, Graph};

fn build(n: usize, edges: &[(usize, usize)], name: String) -> Graph {
    Graph::from_edge_list(n, edges)
        .expect("generator edges are valid")
        .with_name(name)
}

/// Edges given with 1-based labels.
fn build_one_based(n: usize, edges: &[(usize, usize)], name: &str) -> Graph {
    let edges: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    build(n, &edges, name.to_string())
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges, format!("P{n}"))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(n, &edges, format!("C{n}")))
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    build(n, &edges, format!("K{n}"))
}

pub fn empty_graph(n: usize) -> Graph {
    build(n, &[], format!("N{n}"))
}

pub fn complete_bipartite(r: usize, s: usize) -> Result<Graph> {
    if r == 0 || s == 0 {
        return Err(Error::BadParameter(format!(
            "complete bipartite needs r, s >= 1, got ({r}, {s})"
        )));
    }
    let edges: Vec<_> = (0..r)
        .flat_map(|u| (r..r + s).map(move |v| (u, v)))
        .collect();
    Ok(build(r + s, &edges, format!("K{r},{s}")))
}

/// `K_{1,n}` with the centre at index 0.
pub fn star(n: usize) -> Graph {
    let edges: Vec<_> = (1..=n).map(|v| (0, v)).collect();
    build(n + 1, &edges, format!("K1,{n}"))
}

pub fn hypercube(r: usize) -> Result<Graph> {
    if r == 0 || r > 16 {
        return Err(Error::BadParameter(format!(
            "hypercube needs 1 <= r <= 16, got {r}"
        )));
    }
    let n = 1usize << r;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (0..r).map(move |b| (u, u ^ (1 << b))))
        .filter(|&(u, v)| u < v)
        .collect();
    Ok(build(n, &edges, format!("Q{r}")))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    build(10, &edges, "Petersen".into())
}

/// `K1 + P_n`, hub at index 0.
pub fn fan(n: usize) -> Graph {
    join(&complete(1), &path(n)).with_name(format!("F1,{n}"))
}

/// `K1 + C_n`, hub at index 0.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameter(format!("wheel needs n >= 3, got {n}")));
    }
    Ok(join(&complete(1), &cycle(n)?).with_name(format!("W1,{n}")))
}

/// A 5-cycle with a pendant path: `v1..v4` are `0..3`, `u1..ut` are
/// `4..4+t`, `u1` closes the cycle with `v1` and `v4`, and the `u_i` form a path.
pub fn fig1_graph(t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::BadParameter("fig1 needs t >= 1".into()));
    }
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (4, 0), (4, 3)];
    edges.extend((1..t).map(|i| (3 + i, 4 + i)));
    Ok(build(4 + t, &edges, format!("fig1(t={t})")))
}

/// 24 vertices in four blocks. Hub `6b` is adjacent to `6b+1..6b+5`, which
/// form a path; the hubs form the path `0 - 6 - 12 - 18` (no closing edge).
/// With this topology the three drawn bases are valid and the stated
/// dimensions are exact; see the fixture tests.
pub fn fig2_graph() -> Graph {
    let mut edges = Vec::new();
    for b in 0..4 {
        let hub = 6 * b;
        for i in 1..=5 {
            edges.push((hub, hub + i));
            if i > 1 {
                edges.push((hub + i - 1, hub + i));
            }
        }
        if b > 0 {
            edges.push((hub - 6, hub));
        }
    }
    build(24, &edges, "fig2".into())
}

/// The 9-vertex graph whose unique 2-adjacency basis is `{v2,v3,v4,v5}`
/// (0-based `{1,2,3,4}`): `v1` sees `v2..v5`, and `v6..v9` each see two
/// consecutive vertices of `v2..v5`.
pub fn fig3_graph() -> Graph {
    build_one_based(
        9,
        &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (6, 2),
            (6, 3),
            (7, 3),
            (7, 4),
            (8, 4),
            (8, 5),
            (9, 2),
            (9, 5),
        ],
        "fig3",
    )
}

/// The 9-vertex graph with six 3-adjacency bases, one of which is
/// `{1,2,3,4,5,8,9}` in 1-based labels.
pub fn fig4_graph() -> Graph {
    build_one_based(
        9,
        &[
            (1, 2),
            (1, 3),
            (1, 5),
            (1, 6),
            (1, 7),
            (2, 3),
            (2, 4),
            (2, 6),
            (2, 7),
            (3, 4),
            (3, 5),
            (3, 8),
            (4, 5),
            (4, 6),
            (4, 8),
            (5, 6),
            (5, 9),
            (6, 9),
        ],
        "fig4",
    )
}

/// The 9-cycle `1..9` with chords `1-{3,5,6,7,8}` and `2-{6,7,8}` (1-based).
/// Its unique 3-adjacency basis is `{2,3,5,6,7,9}`, contained in `N(1)`.
pub fn fig5_graph() -> Graph {
    let mut edges: Vec<_> = (1..9).map(|i| (i, i + 1)).collect();
    edges.extend([3, 5, 6, 7, 8, 9].map(|v| (1, v)));
    edges.extend([6, 7, 8].map(|v| (2, v)));
    build_one_based(9, &edges, "fig5")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_simple(g: &Graph) {
        for u in 0..g.order() {
            assert!(!g.has_edge(u, u));
            for v in g.neighbors(u) {
                assert!(v < g.order());
                assert!(g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn families_are_simple() {
        let mut all = vec![
            path(5),
            complete(5),
            empty_graph(4),
            petersen(),
            fan(6),
            star(4),
        ];
        all.push(cycle(6).unwrap());
        all.push(wheel(6).unwrap());
        all.push(hypercube(4).unwrap());
        all.push(complete_bipartite(2, 3).unwrap());
        all.extend([
            fig1_graph(4).unwrap(),
            fig2_graph(),
            fig3_graph(),
            fig4_graph(),
            fig5_graph(),
        ]);
        for g in &all {
            assert_simple(g);
        }
    }

    #[test]
    fn basic_shapes() {
        assert_eq!(path(4).degrees(), vec![1, 2, 2, 1]);
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.order(), q3.size()), (8, 12));
        assert!(q3.degrees().iter().all(|&d| d == 3));
        let p = petersen();
        assert_eq!((p.order(), p.size()), (10, 15));
        assert!(p.degrees().iter().all(|&d| d == 3));
        assert_eq!(complete_bipartite(3, 4).unwrap().size(), 12);
        assert!(matches!(cycle(2), Err(Error::BadParameter(_))));
        assert!(matches!(wheel(2), Err(Error::BadParameter(_))));
    }

    #[test]
    fn figure_shapes() {
        let f2 = fig2_graph();
        assert_eq!(f2.order(), 24);
        // 4 blocks * (5 spokes + 4 path edges) + 3 hub edges
        assert_eq!(f2.size(), 39);
        let f1 = fig1_graph(3).unwrap();
        assert_eq!((f1.order(), f1.size()), (7, 7));
        let f5 = fig5_graph();
        assert_eq!(f5.degree(0), 7);
        assert!(!f5.has_edge(0, 3));
        assert_eq!(fig4_graph().size(), 18);
        assert_eq!(fig3_graph().size(), 12);
    }
}
