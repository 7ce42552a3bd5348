//! Graphviz export of the gap digraph.

use std::fmt::Write as _;

use mcomplexity_core::GapSet;

/// Node labels: letters `a..z` for `n <= 26`, otherwise `x1..xn`.
pub fn node_labels(n: usize) -> Vec<String> {
    if n <= 26 {
        (b'a'..).take(n).map(|b| char::from(b).to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// Digraph with one edge `i -> j` for every `j - i ∈ M`.
pub fn gap_digraph(n: usize, gaps: &GapSet) -> String {
    let labels = node_labels(n);
    let mut out = String::from("digraph gaps {\n    rankdir=LR;\n");
    for label in &labels {
        writeln!(out, "    {label};").unwrap();
    }
    for i in 0..n {
        for gap in gaps.iter().take_while(|g| i + g < n) {
            writeln!(out, "    {} -> {};", labels[i], labels[i + gap]).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
