#![allow(dead_code)]

use adimlab::Graph;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) with the given generator.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Shortest-path distances by Floyd-Warshall, `u32::MAX` when unreachable.
pub fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let inf = u32::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                if d[u][w] + d[w][v] < d[u][v] {
                    d[u][v] = d[u][w] + d[w][v];
                }
            }
        }
    }
    d
}

/// Smallest subset (as a bitmask) resolving every pair at least `k` times
/// under `min(d, t)`, by plain enumeration in order of size. `None` if
/// some pair has fewer than `k` distinguishing vertices.
pub fn naive_dimension(g: &Graph, t: u32, k: u32) -> Option<usize> {
    let n = g.order();
    let d = floyd(g);
    let tr = |x: u32| x.min(t);
    let pairs: Vec<u32> = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .map(|(x, y)| {
            (0..n)
                .filter(|&z| tr(d[x][z]) != tr(d[y][z]))
                .fold(0u32, |m, z| m | 1 << z)
        })
        .collect();
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks
        .into_iter()
        .find(|m| pairs.iter().all(|p| (p & m).count_ones() >= k))
        .map(|m| m.count_ones() as usize)
}
