//! Rewrite multi-call linear recurrences into single-call accumulator form.
//!
//! Run with: cargo run --example recurrence_transform

use fntopo::dot::export_dot;
use fntopo::recurrence::eval_accumulator_with_steps;
use fntopo::{
    accumulator_step, eval_accumulator, eval_naive, projected_topology, step_count,
    AccumulatorState, RecurrenceSpec,
};
use num_bigint::BigInt;

fn main() -> Result<(), fntopo::Error> {
    let fib = RecurrenceSpec::fibonacci();

    println!("fibonacci through the sliding window:");
    let mut state = AccumulatorState::initial(&fib, 8);
    println!("  start: window {:?}, index {}", state.window, state.index);
    while state.index as usize >= fib.memory() {
        state = accumulator_step(&fib, &state)?;
        println!("  step:  window {:?}, index {}", state.window, state.index);
    }
    println!("  f(8) = {}", state.window[state.index as usize]);

    // two evaluation routes, one answer
    for n in [0u64, 1, 10, 50] {
        let (fast, steps) = eval_accumulator_with_steps(&fib, n);
        assert_eq!(fast, eval_naive(&fib, n));
        println!("f({n}) = {fast} in {steps} window shifts");
    }
    println!(
        "f(300) has {} digits and still costs only {} shifts",
        eval_accumulator(&fib, 300).to_string().len(),
        step_count(&fib, 300)
    );

    // a three-term recurrence with a constant: f(n) = 1 + f(n-1) + 2 f(n-3)
    let spec = RecurrenceSpec::new(
        BigInt::from(1),
        vec![BigInt::from(1), BigInt::from(0), BigInt::from(2)],
        vec![BigInt::from(0), BigInt::from(1), BigInt::from(1)],
    )?;
    println!("\nthree-term recurrence:");
    for n in 0..=8u64 {
        println!("  f({n}) = {}", eval_accumulator(&spec, n));
    }

    // the index argument of the single-call form descends along a chain
    // into the supplied values
    let t = projected_topology(&fib, 8)?;
    println!(
        "\nindex topology up to 8: base conditions {:?}",
        t.base_conditions_required()
    );
    println!("{}", export_dot(&t));
    Ok(())
}
