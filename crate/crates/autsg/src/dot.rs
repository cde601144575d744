//! Graphviz export of a transducer. One node per state; transitions with
//! the same source and target are merged into a single edge whose label
//! joins the `input|output` pairs in symbol order. Output is byte-stable.

use std::fmt::Write;

use crate::mealy::MealyAutomaton;

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn export_dot(a: &MealyAutomaton) -> String {
    let mut out = String::from("digraph {\n  rankdir=LR;\n");
    for q in 0..a.state_count() {
        writeln!(out, "  q{q} [label=\"{}\"];", escape(a.state_name(q))).unwrap();
    }
    for q in 0..a.state_count() {
        let mut labels: Vec<(usize, Vec<String>)> = Vec::new();
        for b in 0..a.alphabet_len() {
            let (target, output) = a.transition(q, b);
            let label = format!(
                "{}|{}",
                escape(a.symbol_name(b)),
                escape(a.symbol_name(output))
            );
            match labels.iter_mut().find(|(t, _)| *t == target) {
                Some((_, list)) => list.push(label),
                None => labels.push((target, vec![label])),
            }
        }
        labels.sort_by_key(|(target, _)| *target);
        for (target, list) in labels {
            writeln!(out, "  q{q} -> q{target} [label=\"{}\"];", list.join(",")).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
