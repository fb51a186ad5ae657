//! The machine-readable analysis report.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::canonical::{canonical_code, CodeMode};
use crate::finite::FiniteFunction;
use crate::termination::{classify_termination, extract_ranking, TermVerdict};
use crate::topology::{build_topology, Topology};

/// Schema version of the JSON report.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub id: usize,
    pub members: Vec<u64>,
    pub is_cycle: bool,
}

/// One Hasse cover, pointing from child up to parent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeReport {
    pub child: usize,
    pub parent: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TerminationReport {
    pub status: String,
    /// Decimal strings; values may exceed any fixed machine width.
    pub required_base_conditions: Option<Vec<String>>,
    pub certificate: String,
}

impl From<&TermVerdict> for TerminationReport {
    fn from(v: &TermVerdict) -> Self {
        Self {
            status: v.status.to_string(),
            required_base_conditions: v
                .required_base_conditions
                .as_ref()
                .map(|set| set.iter().map(|b| b.to_string()).collect()),
            certificate: v.certificate.clone(),
        }
    }
}

/// Everything the `analyze` command computes, in one encodable bundle.
///
/// Field order is fixed by this struct, so encoding is deterministic, and
/// the report decodes from its own encoding without loss.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub version: u32,
    pub tool_version: String,
    pub input: String,
    pub classes: Vec<ClassReport>,
    pub parent_edges: Vec<EdgeReport>,
    pub base_classes: Vec<usize>,
    pub generator_classes: Vec<usize>,
    pub fixed_point_classes: Vec<usize>,
    pub base_elements: Vec<u64>,
    pub generator_elements: Vec<u64>,
    pub fixed_point_elements: Vec<u64>,
    pub canonical_code: String,
    pub code_mode: String,
    pub termination: TerminationReport,
    pub ranks: BTreeMap<u64, u64>,
}

fn elements_of(t: &Topology, ids: &[usize]) -> Vec<u64> {
    let mut v: Vec<u64> = ids
        .iter()
        .flat_map(|&c| t.classes()[c].members.iter().copied())
        .collect();
    v.sort_unstable();
    v
}

impl AnalysisReport {
    /// Runs the full analysis of `f` and bundles the results.
    pub fn build(input: &str, f: &FiniteFunction, mode: CodeMode) -> Self {
        let t = build_topology(f);
        let verdict = classify_termination(f);
        let ranks = extract_ranking(&t, f);
        Self {
            version: REPORT_SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input: input.to_string(),
            classes: t
                .classes()
                .iter()
                .map(|c| ClassReport {
                    id: c.id,
                    members: c.members.clone(),
                    is_cycle: c.is_cycle,
                })
                .collect(),
            parent_edges: t
                .classes()
                .iter()
                .filter_map(|c| {
                    t.parent(c.id).map(|p| EdgeReport {
                        child: c.id,
                        parent: p,
                    })
                })
                .collect(),
            base_classes: t.base_set().to_vec(),
            generator_classes: t.generator_set().to_vec(),
            fixed_point_classes: t.fixed_point_set().to_vec(),
            base_elements: elements_of(&t, t.base_set()),
            generator_elements: elements_of(&t, t.generator_set()),
            fixed_point_elements: elements_of(&t, t.fixed_point_set()),
            canonical_code: canonical_code(&t, mode).to_string(),
            code_mode: match mode {
                CodeMode::ClassLevel => "class".to_string(),
                CodeMode::StrictCycleLength => "strict".to_string(),
            },
            termination: TerminationReport::from(&verdict),
            ranks: ranks.as_map().clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Human-readable rendering of the same content.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("input: {}\n", self.input));
        out.push_str(&format!("classes ({}):\n", self.classes.len()));
        for c in &self.classes {
            let members: Vec<String> = c.members.iter().map(|m| m.to_string()).collect();
            let kind = if c.is_cycle { "cycle" } else { "tree node" };
            out.push_str(&format!(
                "  [{}] {{{}}} ({kind})\n",
                c.id,
                members.join(",")
            ));
        }
        out.push_str("hasse edges (child -> parent):\n");
        for e in &self.parent_edges {
            out.push_str(&format!("  [{}] -> [{}]\n", e.child, e.parent));
        }
        let fmt_elems = |v: &[u64]| {
            let parts: Vec<String> = v.iter().map(|m| m.to_string()).collect();
            format!("{{{}}}", parts.join(","))
        };
        out.push_str(&format!("base set: {}\n", fmt_elems(&self.base_elements)));
        out.push_str(&format!(
            "generator set: {}\n",
            fmt_elems(&self.generator_elements)
        ));
        out.push_str(&format!(
            "fixed-point set: {}\n",
            fmt_elems(&self.fixed_point_elements)
        ));
        out.push_str(&format!(
            "canonical code ({}): {}\n",
            self.code_mode, self.canonical_code
        ));
        out.push_str(&format!(
            "termination: {} ({})\n",
            self.termination.status, self.termination.certificate
        ));
        if let Some(base) = &self.termination.required_base_conditions {
            out.push_str(&format!(
                "required base conditions: {{{}}}\n",
                base.join(",")
            ));
        }
        out.push_str("ranks:\n");
        for (x, r) in &self.ranks {
            out.push_str(&format!("  {x}: {r}\n"));
        }
        out
    }
}
