//! Explore orbits of the halve-or-(3x+1)/2 map.
//!
//! Every start value tried here descends to 1 eventually, but the verdict
//! machinery still refuses a global answer: reaching base on every probe is
//! observation, not proof.
//!
//! Run with: cargo run --example collatz_orbits

use fntopo::{classify_termination_symbolic, OrbitOutcome, SymbolicMap};
use num_bigint::BigInt;

fn main() -> Result<(), fntopo::Error> {
    let collatz = SymbolicMap::collatz();

    println!("orbits of small starts:");
    for x in [1u64, 6, 7, 27] {
        let r = collatz.orbit(&BigInt::from(x), 10_000)?;
        let trace: Vec<String> = r.trace.iter().map(|v| v.to_string()).collect();
        println!("  {x:>3}: {} ({})", trace.join(" "), r.outcome);
    }

    // longest descent among the first thousand starts
    let mut slowest = (BigInt::from(1u32), 0u64);
    for x in 1..=1000u64 {
        let r = collatz.orbit(&BigInt::from(x), 10_000)?;
        if let OrbitOutcome::ReachedBase { steps } = r.outcome {
            if steps > slowest.1 {
                slowest = (BigInt::from(x), steps);
            }
        }
    }
    println!(
        "\nslowest start in 1..=1000: {} with {} steps",
        slowest.0, slowest.1
    );

    let probes: Vec<BigInt> = (1..=1000).map(BigInt::from).collect();
    let verdict = classify_termination_symbolic(&collatz, &probes, 10_000)?;
    println!("\nglobal verdict: {}", verdict.status);
    println!("certificate: {}", verdict.certificate);
    Ok(())
}
