//! Graphviz output. Nodes are emitted in id order and edges in sorted
//! order, so identical inputs give identical text.

use std::fmt::Write as _;

use ttgeom_core::spectra::FiniteSpace;

/// Escapes a string for use inside a double-quoted DOT identifier.
fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if matches!(c, '"' | '\\') {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// A directed graph with edges drawn from lower to upper element.
pub fn hasse(name: &str, labels: &[String], covers: &[(usize, usize)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(name));
    out.push_str("  rankdir=BT;\n  node [shape=box];\n");
    for (i, l) in labels.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label={}];", quote(l));
    }
    let mut edges = covers.to_vec();
    edges.sort_unstable();
    for (a, b) in edges {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

/// Covering pairs of the specialization preorder of a T0 space, as
/// `(x, y)` with `y` in the closure of `x`. Points that share a
/// neighbourhood are joined in both directions.
pub fn specialization_covers(space: &FiniteSpace) -> Vec<(usize, usize)> {
    let rel = space.specialization();
    let strict: Vec<(usize, usize)> =
        rel.iter().copied().filter(|&(x, y)| x != y && !rel.contains(&(y, x))).collect();
    let mut out: Vec<(usize, usize)> = strict
        .iter()
        .copied()
        .filter(|&(x, z)| !strict.iter().any(|&(a, y)| a == x && y != z && strict.contains(&(y, z))))
        .collect();
    out.extend(rel.iter().copied().filter(|&(x, y)| x != y && rel.contains(&(y, x))));
    out.sort_unstable();
    out
}

pub fn specialization(name: &str, labels: &[String], space: &FiniteSpace) -> String {
    hasse(name, labels, &specialization_covers(space))
}
