//! The left φ-mutation graph of complete τ-exceptional sequences.

use serde::Serialize;

use super::{enumerate_complete_exc, mutation::phi_mutate, Dir, SeqCategory};
use crate::bqa::auslander_rank;
use crate::error::Result;

#[derive(Clone, Debug, Serialize)]
pub struct MutationGraph {
    /// Term labels of each node in display order `(M_r, …, M_1)`.
    pub labels: Vec<Vec<String>>,
    pub exceptional: Vec<bool>,
    /// `(from, to, position)` for every left φ-mutation.
    pub edges: Vec<(usize, usize, usize)>,
}

/// Nodes are the sequences of `cat` in enumeration order. Exceptional
/// sequences are flagged when the algebra is some `A_t`.
pub fn mutation_graph(cat: &SeqCategory) -> Result<MutationGraph> {
    let exceptional = match auslander_rank(cat.algebra()) {
        Some(_) => {
            let exc = enumerate_complete_exc(cat.algebra())?;
            (0..cat.len()).map(|s| exc.iter().any(|e| e.terms == cat.seqs()[s].terms)).collect()
        }
        None => vec![false; cat.len()],
    };
    let mut edges = Vec::new();
    for s in 0..cat.len() {
        for i in 2..=cat.seqs()[s].terms.len() {
            edges.push((s, phi_mutate(cat, s, i, Dir::Left)?, i));
        }
    }
    let labels = (0..cat.len()).map(|s| cat.labels(s)).collect();
    Ok(MutationGraph { labels, exceptional, edges })
}

impl MutationGraph {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph mutations {\n  node [shape=box];\n");
        for (k, l) in self.labels.iter().enumerate() {
            let style = if self.exceptional[k] { ", style=filled, fillcolor=plum" } else { "" };
            out.push_str(&format!("  s{k} [label=\"({})\"{style}];\n", l.join(", ")));
        }
        for &(a, b, i) in &self.edges {
            out.push_str(&format!("  s{a} -> s{b} [label=\"{i}\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}
