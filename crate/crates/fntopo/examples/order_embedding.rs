//! Embed one induced order inside another.
//!
//! Run with: cargo run --example order_embedding

use fntopo::{build_topology, embeds_into, EmbedDecision, FiniteFunction, Topology};

fn chain(k: u64) -> Topology {
    build_topology(&FiniteFunction::new((0..k).map(|x| (x, x.saturating_sub(1)))).unwrap())
}

fn star(leaves: u64) -> Topology {
    build_topology(&FiniteFunction::new((0..=leaves).map(|x| (x, leaves))).unwrap())
}

fn main() -> Result<(), fntopo::Error> {
    // any finite chain fits inside a longer one
    let short = chain(3);
    let long = chain(10);
    if let EmbedDecision::Yes(witness) = embeds_into(&short, &long)? {
        println!("chain of 3 classes into chain of 10:");
        for (a, b) in witness {
            println!(
                "  {} -> {}",
                short.classes()[a].label(),
                long.classes()[b].label()
            );
        }
    }
    println!(
        "chain of 10 into chain of 3: {:?}",
        embeds_into(&long, &short)?
    );

    // a chain has no two incomparable classes, so a star cannot fit
    println!(
        "\n2-leaf star into a 10-chain: {:?}",
        embeds_into(&star(2), &chain(10))?
    );
    println!(
        "2-leaf star into a 5-leaf star: {}",
        embeds_into(&star(2), &star(5))?.is_yes()
    );

    // mutual embedding of finite orders collapses into isomorphism
    let a = star(3);
    let b = star(3);
    let mutual = embeds_into(&a, &b)?.is_yes() && embeds_into(&b, &a)?.is_yes();
    println!("\n3-leaf star embeds both ways into itself: {mutual}");

    // the search is exact, so it refuses oversized inputs instead of guessing
    let err = embeds_into(&chain(500), &chain(600)).unwrap_err();
    println!("\noversized request: {err}");
    Ok(())
}
