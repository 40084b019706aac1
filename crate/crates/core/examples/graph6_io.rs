//! Read graphs as graph6, dump a distinguishing table as JSON, write back.

use adimlab::{from_graph6, to_graph6, DistinguishTable};

fn main() -> adimlab::Result<()> {
    for code in ["@", "A_", "Bw", "DQc", "IheA@GUAo"] {
        let g = from_graph6(code)?;
        println!(
            "{code:10} n={:2} m={:2} -> {}",
            g.order(),
            g.size(),
            to_graph6(&g)
        );
    }
    let g = from_graph6("DQc")?;
    let table = DistinguishTable::build(&g, 2)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&table.to_json()).expect("json")
    );
    Ok(())
}
