//! Run every corpus check on the labeled graphs up to order 5 and on the
//! trees up to order 9.

use adimlab::verify::{sweep_theorem, Corpus, THEOREMS};

fn main() -> adimlab::Result<()> {
    let labeled = Corpus::labeled(2..=5)?;
    let trees = Corpus::trees(2..=9);
    for &id in THEOREMS {
        let corpus = if id == "K1T-trees" { &trees } else { &labeled };
        let r = sweep_theorem(corpus, id)?;
        println!(
            "{id:17} checked {:6}  matches {:6}  violations {}  {:?}",
            r.checked,
            r.matches,
            r.violations.len(),
            r.elapsed
        );
    }
    Ok(())
}
