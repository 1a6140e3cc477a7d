//! DOT rendering of Hasse diagrams.

use std::collections::BTreeMap;
use std::fmt::Write;

use qposet_core::HasseDag;

/// Renders the diagram with rank increasing left to right. Nodes are listed
/// by rank, then by bitmask; edges run from covered to covering element.
pub fn render(dag: &HasseDag) -> String {
    let nodes = dag.nodes();
    let mut by_rank: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for i in 0..nodes.len() {
        by_rank.entry(dag.rank_of(i)).or_default().push(i);
    }
    let mut out = String::new();
    writeln!(out, "digraph \"{}({})\" {{", dag.kind(), dag.n()).unwrap();
    out.push_str("  rankdir=LR;\n");
    out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
    for (rank, members) in &by_rank {
        write!(out, "  {{ rank=same; /* rank {rank} */").unwrap();
        for &i in members {
            write!(out, " \"{}\";", nodes[i]).unwrap();
        }
        out.push_str(" }\n");
    }
    for &(i, j) in dag.edge_indices() {
        writeln!(out, "  \"{}\" -> \"{}\";", nodes[i], nodes[j]).unwrap();
    }
    out.push_str("}\n");
    out
}
