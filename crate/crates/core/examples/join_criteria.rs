//! Cones and joins: when does adim_k stay additive, and by how much can
//! the cone exceed its base?

use adimlab::generators::*;
use adimlab::{
    adim, adim2_upper_cone, cone, cone_equality_criterion, cone_plus_one_criterion, join,
    join_bounds, join_equality_criterion, Graph,
};

fn main() -> adimlab::Result<()> {
    let bases: Vec<(&str, Graph)> = vec![
        ("P9", path(9)),
        ("C7", cycle(7)?),
        ("fig3", fig3_graph()),
        ("fig4", fig4_graph()),
        ("fig5", fig5_graph()),
    ];
    for (name, h) in &bases {
        for k in 1..=3 {
            let Ok(eq) = cone_equality_criterion(h, k) else {
                continue;
            };
            let plus = cone_plus_one_criterion(h, k)?;
            println!(
                "{name:5} k={k}: adim {} -> cone {}  equality criterion {}  plus-one premise {}",
                adim(h, k)?,
                adim(&cone(h), k)?,
                eq.holds,
                plus.holds
            );
        }
    }

    let w = wheel(7)?;
    let ub = adim2_upper_cone(&w)?;
    println!(
        "K1 + W7: adim_2 bound {} (tight: {}), actual {}",
        ub.bound,
        ub.tight(),
        adim(&cone(&w), 2)?
    );

    for t in 2..=3 {
        for (gname, g) in [("K", complete(t)), ("N", empty_graph(t))] {
            for n in [5, 7] {
                let h = cycle(n)?;
                let j = join(&g, &h);
                for k in 1..=2 {
                    let (lo, hi) = join_bounds(&g, &h, k)?;
                    let crit = join_equality_criterion(&g, &h, k)?;
                    println!(
                        "{gname}{t} + C{n} k={k}: {lo} <= {} <= {hi}, additive: {}",
                        adim(&j, k)?,
                        crit.holds
                    );
                }
            }
        }
    }
    Ok(())
}
