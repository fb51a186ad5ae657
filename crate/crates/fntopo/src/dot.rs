//! Graphviz rendering of the Hasse forest.

use crate::topology::Topology;

/// Renders the forest as a DOT digraph: one node per class labeled with its
/// members, one edge per Hasse cover pointing from child up to parent, and
/// base-set nodes drawn with a double border and a grey fill.
///
/// Output is byte-stable for a given topology.
pub fn export_dot(t: &Topology) -> String {
    let mut out = String::new();
    out.push_str("digraph induced_order {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=ellipse];\n");
    for class in t.classes() {
        if t.is_base_class(class.id) {
            out.push_str(&format!(
                "  c{} [label=\"{}\", peripheries=2, style=filled, fillcolor=lightgrey];\n",
                class.id,
                class.label()
            ));
        } else {
            out.push_str(&format!("  c{} [label=\"{}\"];\n", class.id, class.label()));
        }
    }
    for class in t.classes() {
        if let Some(p) = t.parent(class.id) {
            out.push_str(&format!("  c{} -> c{p};\n", class.id));
        }
    }
    out.push_str("}\n");
    out
}
