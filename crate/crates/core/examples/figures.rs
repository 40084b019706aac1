//! The small fixture graphs: metric vs adjacency dimension, unique bases,
//! and cones whose dimension jumps.

use adimlab::generators::*;
use adimlab::{adim, cone, enumerate_bases, solve_adim_with, solve_dim, SolveOptions};

fn main() -> adimlab::Result<()> {
    for t in 1..=4 {
        let g = fig1_graph(t)?;
        let dims: Vec<usize> = (1..=4)
            .map(|k| solve_dim(&g, k).map(|r| r.dimension))
            .collect::<Result<_, _>>()?;
        println!("fig1(t={t}): dim_1..4 = {dims:?}");
    }

    let g = fig2_graph();
    for k in 1..=3 {
        let d = solve_dim(&g, k)?.dimension;
        let a = adim(&g, k)?;
        println!("fig2: dim_{k} = {d:2}, adim_{k} = {a:2}");
    }
    let unique = SolveOptions {
        check_unique: true,
        ..Default::default()
    };
    let r = solve_adim_with(&g, 3, &unique)?;
    println!("fig2: 3-basis {} unique: {:?}", r.witness, r.unique);

    let h = fig4_graph();
    let bases = enumerate_bases(&h, 3)?;
    println!(
        "fig4: {} 3-bases, adim_3 = {}, adim_3(K1+H) = {}",
        bases.len(),
        adim(&h, 3)?,
        adim(&cone(&h), 3)?
    );
    for b in &bases {
        println!("  {:?}", b.to_one_based());
    }

    let h = fig5_graph();
    let bases = enumerate_bases(&h, 3)?;
    println!(
        "fig5: 3-bases (1-based) {:?}",
        bases.iter().map(|b| b.to_one_based()).collect::<Vec<_>>()
    );
    let cone_bases = enumerate_bases(&cone(&h), 3)?;
    println!(
        "K1 + fig5: adim_3 = {}, {} bases (apex is 0)",
        cone_bases[0].len(),
        cone_bases.len()
    );
    for b in &cone_bases {
        println!("  {b}");
    }
    Ok(())
}
