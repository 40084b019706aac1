//! Fix a basis B and rewire everything outside it: every member keeps B as
//! a generator and never needs more vertices.

use adimlab::generators::fig3_graph;
use adimlab::verify_family_theorem;

fn main() -> adimlab::Result<()> {
    let report = verify_family_theorem(&fig3_graph(), 2, None)?;
    println!(
        "basis {} (adim_2 = {}), {} members checked",
        report.basis, report.base_dimension, report.checked
    );
    for (d, count) in &report.dimensions {
        println!("  adim_2 = {d}: {count} members");
    }
    println!("violations: {}", report.violations.len());
    Ok(())
}
