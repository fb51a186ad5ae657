//! Extract a ranking function from a finite table and use it as a
//! termination certificate.
//!
//! Run with: cargo run --example ranking_certificates

use fntopo::termination::termination_by_isomorphism;
use fntopo::{
    build_topology, classify_termination, extract_ranking, verify_ranking, FiniteFunction,
    RankCheck, RankMap,
};

fn main() -> Result<(), fntopo::Error> {
    let f = FiniteFunction::new([(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 3)])?;
    let t = build_topology(&f);

    let verdict = classify_termination(&f);
    println!("verdict: {}", verdict.status);
    println!("certificate: {}", verdict.certificate);

    let ranks = extract_ranking(&t, &f);
    println!("\nextracted ranks (applications left until the base set):");
    for (x, r) in ranks.iter() {
        println!("  {x}: {r}");
    }
    println!("check: {:?}", verify_ranking(&f, &ranks)?);

    // the rank map really is load-bearing: flatten it and descent breaks
    let flat = RankMap::new(f.domain().map(|x| (x, 0)).collect());
    match verify_ranking(&f, &flat)? {
        RankCheck::Violation(x) => {
            println!("\nall-zero ranks fail: no descent is possible at {x}")
        }
        RankCheck::Valid => unreachable!("a non-base element cannot descend from rank 0"),
    }

    // descent by more than one is fine; only strictness matters
    let chain = FiniteFunction::new([(0, 1), (1, 1)])?;
    let generous = RankMap::new([(0, 5), (1, 0)].into());
    println!(
        "generous ranks on a 2-chain: {:?}",
        verify_ranking(&chain, &generous)?
    );

    // verdicts travel across ordinal isomorphism
    let shifted =
        FiniteFunction::new([(10, 12), (11, 12), (12, 13), (13, 14), (14, 15), (15, 13)])?;
    if let Some(v) = termination_by_isomorphism(&shifted, &f) {
        println!("\nshifted copy: {} ({})", v.status, v.certificate);
    }
    Ok(())
}
