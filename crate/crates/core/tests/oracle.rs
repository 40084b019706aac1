//! The library against independent oracles: Floyd-Warshall distances and
//! plain subset enumeration written here, not in the crate.

mod common;

use adimlab::generators::*;
use adimlab::{
    distinguishing_set, solve_table, truncated_distance, DistinguishTable, Graph, SolveOptions,
};
use rand::Rng;

#[test]
fn bfs_matches_floyd() {
    let mut rng = common::rng(1);
    for _ in 0..200 {
        let n = rng.gen_range(1..=14);
        let p = rng.gen_range(0.05..0.7);
        let g = common::random_graph(&mut rng, n, p);
        let d = common::floyd(&g);
        for x in 0..n {
            let bfs = g.bfs_distances(x).unwrap();
            for y in 0..n {
                let want = if d[x][y] >= u32::MAX / 2 {
                    None
                } else {
                    Some(d[x][y])
                };
                assert_eq!(bfs[y].finite(), want);
                for t in 1..=4 {
                    assert_eq!(truncated_distance(&g, t, x, y).unwrap(), d[x][y].min(t));
                }
            }
        }
    }
}

#[test]
fn tables_match_direct_sets() {
    let mut rng = common::rng(2);
    for _ in 0..100 {
        let n = rng.gen_range(2..=11);
        let p = rng.gen_range(0.1..0.9);
        let g = common::random_graph(&mut rng, n, p);
        for t in 1..=4 {
            let table = DistinguishTable::build(&g, t).unwrap();
            for (x, y, set) in table.pairs() {
                assert_eq!(set, &distinguishing_set(&g, t, x, y).unwrap());
                assert!(set.contains(x) && set.contains(y));
            }
        }
    }
}

fn check_against_naive(g: &Graph, t: u32) {
    let table = DistinguishTable::build(g, t).unwrap();
    let c = table.dimensionality().unwrap();
    for k in 1..=c + 1 {
        let naive = common::naive_dimension(g, t, k);
        let exact = solve_table(&table, k, &SolveOptions::default())
            .ok()
            .map(|r| r.dimension);
        assert_eq!(exact, naive, "{g:?} t={t} k={k}");
    }
}

#[test]
fn solver_matches_naive_enumeration() {
    let mut rng = common::rng(3);
    for _ in 0..150 {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.1..0.9);
        let g = common::random_graph(&mut rng, n, p);
        check_against_naive(&g, 2);
        check_against_naive(&g, rng.gen_range(1..=4));
    }
}

#[test]
fn named_graphs_match_naive_enumeration() {
    let graphs = [
        petersen(),
        path(9),
        cycle(10).unwrap(),
        wheel(8).unwrap(),
        fan(8),
        complete_bipartite(3, 4).unwrap(),
        hypercube(3).unwrap(),
        fig1_graph(3).unwrap(),
        fig3_graph(),
        fig4_graph(),
        fig5_graph(),
    ];
    for g in &graphs {
        check_against_naive(g, 2);
        if g.is_connected() {
            check_against_naive(g, g.diameter().finite().unwrap().max(1));
        }
    }
}
