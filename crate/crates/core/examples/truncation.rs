//! The same graph under increasing truncation levels t: the t = 2 case is
//! the adjacency dimension, large t the ordinary k-metric dimension.

use adimlab::generators::path;
use adimlab::{solve_table, DistinguishTable, SolveOptions};

fn main() -> adimlab::Result<()> {
    let g = path(12);
    for t in 1..=11 {
        let table = DistinguishTable::build(&g, t)?;
        let Ok(c) = table.dimensionality() else {
            continue;
        };
        let dims: Vec<usize> = (1..=c.min(3))
            .map(|k| solve_table(&table, k, &SolveOptions::default()).map(|r| r.dimension))
            .collect::<Result<_, _>>()?;
        println!("P12, t={t:2}: C={c}  dim_1..{} = {dims:?}", c.min(3));
    }
    Ok(())
}
