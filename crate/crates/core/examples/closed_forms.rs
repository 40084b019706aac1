//! Closed-form values for paths, cycles, fans, wheels and friends, checked
//! against the exact solver. Pass a maximum order as the first argument.

use adimlab::formulas::formula_queries;
use adimlab::{adim, formula_adim};

fn main() -> adimlab::Result<()> {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10);
    let mut bad = 0;
    for q in formula_queries(max_n) {
        let expected = formula_adim(&q)?;
        let got = adim(&q.graph()?, q.k)?;
        let mark = if expected == got {
            ""
        } else {
            "  <-- mismatch"
        };
        bad += (expected != got) as usize;
        println!(
            "{:<9} {:<8} k={}  formula {:2}  solver {:2}{mark}",
            q.family.name(),
            format!("{:?}", q.params),
            q.k,
            expected,
            got
        );
    }
    println!("{bad} mismatches");
    Ok(())
}
