//! Classify chain-shaped subjects: the ever-descending and ever-ascending
//! reference maps, their relatives, and finite chains.
//!
//! Run with: cargo run --example chain_classification

use fntopo::{
    build_topology, classify_chain, classify_chain_map, FiniteFunction, SymbolicMap, Window,
};

fn main() -> Result<(), fntopo::Error> {
    let window = Window::default();
    let subjects = [
        SymbolicMap::predecessor(),
        SymbolicMap::successor(),
        SymbolicMap::successor_on_integers(),
        SymbolicMap::split(),
        SymbolicMap::affine(2, 3),
        SymbolicMap::affine(1, 0),
        SymbolicMap::collatz(),
    ];
    println!("symbolic subjects:");
    for map in &subjects {
        let c = classify_chain_map(map, &window);
        println!("  {:<22} {:?}", map.name(), c.kind);
        println!("  {:<22}   {}", "", c.evidence);
    }

    // the two reference maps certify opposite fates
    let p = classify_chain_map(&SymbolicMap::predecessor(), &window);
    let s = classify_chain_map(&SymbolicMap::successor(), &window);
    println!(
        "\npredecessor certifies termination: {} / divergence: {}",
        p.kind.certifies_termination(),
        p.kind.certifies_divergence()
    );
    println!(
        "successor certifies termination:   {} / divergence: {}",
        s.kind.certifies_termination(),
        s.kind.certifies_divergence()
    );

    println!("\nfinite subjects:");
    let chain = FiniteFunction::new([(0, 0), (1, 0), (2, 1), (3, 2)])?;
    let c = classify_chain(&build_topology(&chain));
    println!("  descending 4-chain: {:?} ({})", c.kind, c.evidence);

    let star = FiniteFunction::new([(0, 2), (1, 2), (2, 2)])?;
    let c = classify_chain(&build_topology(&star));
    println!("  2-leaf star:        {:?} ({})", c.kind, c.evidence);
    Ok(())
}
