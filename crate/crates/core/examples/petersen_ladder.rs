//! adim_k of the Petersen graph for every feasible k.

use adimlab::generators::petersen;
use adimlab::{solve_table, DistinguishTable, SolveOptions};

fn main() -> adimlab::Result<()> {
    let g = petersen();
    let table = DistinguishTable::build(&g, 2)?;
    let c = table.dimensionality()?;
    println!("Petersen graph is {c}-dimensional");
    for k in 1..=c {
        let r = solve_table(&table, k, &SolveOptions::default())?;
        println!(
            "adim_{k} = {:2}  basis {}  ({} nodes)",
            r.dimension, r.witness, r.stats.nodes
        );
    }
    Ok(())
}
