//! adim_k(K1 + H) - adim_k(H) <= k over every labeled graph H up to a
//! given order (first argument, default 5).

use adimlab::{check_cone_conjecture, Corpus};

fn main() -> adimlab::Result<()> {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let report = check_cone_conjecture(&Corpus::labeled(2..=max_n)?, 1..=4)?;
    println!(
        "{} graphs, {} tight instances, {} violations in {:?}",
        report.sweep.checked,
        report.sweep.matches,
        report.sweep.violations.len(),
        report.sweep.elapsed
    );
    for (slack, count) in &report.slack {
        println!("  slack {slack}: {count}");
    }
    Ok(())
}
