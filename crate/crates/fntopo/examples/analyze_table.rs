//! Condense a small function table into its induced order.
//!
//! Run with: cargo run --example analyze_table

use fntopo::dot::export_dot;
use fntopo::{build_topology, AnalysisReport, CodeMode, FiniteFunction};

fn main() -> Result<(), fntopo::Error> {
    // 0 and 1 feed into 2, which leads onto the cycle 3 -> 4 -> 5 -> 3.
    let f = FiniteFunction::new([(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 3)])?;
    let t = build_topology(&f);

    println!("classes:");
    for class in t.classes() {
        let kind = if class.is_cycle { "cycle" } else { "tree node" };
        println!("  [{}] {} ({kind})", class.id, class.label());
    }

    println!("\nhasse edges (child -> parent):");
    for class in t.classes() {
        if let Some(p) = t.parent(class.id) {
            println!("  {} -> {}", class.label(), t.classes()[p].label());
        }
    }

    let show = |ids: &[usize]| {
        let labels: Vec<String> = ids.iter().map(|&c| t.classes()[c].label()).collect();
        labels.join(", ")
    };
    println!("\nbase set:        {}", show(t.base_set()));
    println!("generator set:   {}", show(t.generator_set()));
    println!("fixed-point set: {}", show(t.fixed_point_set()));
    println!("base conditions needed: {:?}", t.base_conditions_required());

    println!("\nclimb from each element to the base:");
    for (x, path) in t.element_rank_paths(&f) {
        let steps: Vec<String> = path.iter().map(|v| v.to_string()).collect();
        println!("  {x}: {}", steps.join(" -> "));
    }

    println!("\ngraphviz rendering:\n{}", export_dot(&t));

    let report = AnalysisReport::build("example", &f, CodeMode::ClassLevel);
    println!("json report:\n{}", report.to_json());
    Ok(())
}
