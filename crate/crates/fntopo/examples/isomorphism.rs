//! Decide whether two functions arrange their domains the same way.
//!
//! Run with: cargo run --example isomorphism

use fntopo::{
    build_topology, canonical_code, is_ordinally_isomorphic, CodeMode, FiniteFunction, IsoDecision,
};

fn main() -> Result<(), fntopo::Error> {
    let f = FiniteFunction::new([(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 3)])?;
    // the same shape drawn over different numbers
    let g = FiniteFunction::new([(10, 12), (11, 12), (12, 13), (13, 14), (14, 15), (15, 13)])?;

    let tf = build_topology(&f);
    let tg = build_topology(&g);
    println!("code of f: {}", canonical_code(&tf, CodeMode::ClassLevel));
    println!("code of g: {}", canonical_code(&tg, CodeMode::ClassLevel));

    match is_ordinally_isomorphic(&f, &g, CodeMode::ClassLevel) {
        IsoDecision::Yes(witness) => {
            println!("\nisomorphic; the bijection renames equivalence classes:");
            for (a, b) in witness {
                println!(
                    "  {} <-> {}",
                    tf.classes()[a].label(),
                    tg.classes()[b].label()
                );
            }
        }
        IsoDecision::No => println!("\nnot isomorphic"),
    }

    // a chain and a star have the same class count but different shapes
    let chain = FiniteFunction::new([(0, 1), (1, 2), (2, 2)])?;
    let star = FiniteFunction::new([(0, 2), (1, 2), (2, 2)])?;
    println!(
        "\nchain vs star: {:?}",
        is_ordinally_isomorphic(&chain, &star, CodeMode::ClassLevel)
    );

    // cycle length is invisible at class level and visible in strict mode
    let cycle3 = FiniteFunction::new([(0, 1), (1, 2), (2, 0)])?;
    let point = FiniteFunction::new([(0, 0)])?;
    println!(
        "\n3-cycle vs fixed point, class level: {}",
        is_ordinally_isomorphic(&cycle3, &point, CodeMode::ClassLevel).is_yes()
    );
    println!(
        "3-cycle vs fixed point, strict:      {}",
        is_ordinally_isomorphic(&cycle3, &point, CodeMode::StrictCycleLength).is_yes()
    );
    Ok(())
}
