//! Explicit cover graphs and their chain/antichain statistics.

use std::collections::{HashMap, VecDeque};

use super::{enumerate_unbounded, p_rank, p_upper_covers, PosetKind};
use crate::error::{Error, Result};
use crate::sign::SignVector;

/// Largest `n` for which [`build_hasse`] builds `P(n)` (and `R±(n)`).
pub const MAX_DAG_N_P: usize = 14;
/// Largest `n` for which [`build_hasse`] builds `Q(n)`.
pub const MAX_DAG_N_Q: usize = 16;
/// Node limit for the matching-based width computation.
pub const MAX_WIDTH_NODES: usize = 5000;

/// The cover relation of one of the posets, materialized.
///
/// Nodes are held in ascending bitmask order and edges `(i, j)` (indices into
/// the node list) mean node `j` covers node `i`. Edges are sorted.
#[derive(Clone, Debug)]
pub struct HasseDag {
    kind: PosetKind,
    n: usize,
    nodes: Vec<SignVector>,
    index: HashMap<u64, usize>,
    edges: Vec<(usize, usize)>,
    rank_of: Vec<i64>,
    succ: Vec<Vec<usize>>,
}

pub fn build_hasse(n: usize, kind: PosetKind) -> Result<HasseDag> {
    let limit = match kind {
        PosetKind::Q => MAX_DAG_N_Q,
        _ => MAX_DAG_N_P,
    };
    if n > limit {
        return Err(Error::TooLarge {
            what: "Hasse diagram",
            n: n as u64,
            limit: limit as u64,
        });
    }
    build_hasse_unbounded(n, kind)
}

/// [`build_hasse`] without the size guard.
pub fn build_hasse_unbounded(n: usize, kind: PosetKind) -> Result<HasseDag> {
    let nodes: Vec<SignVector> = enumerate_unbounded(n, kind)?.collect();
    let index: HashMap<u64, usize> = nodes
        .iter()
        .enumerate()
        .map(|(i, v)| (v.bits(), i))
        .collect();
    let mut edges = Vec::new();
    let mut succ = vec![Vec::new(); nodes.len()];
    for (i, v) in nodes.iter().enumerate() {
        for w in p_upper_covers(v) {
            if let Some(&j) = index.get(&w.bits()) {
                edges.push((i, j));
                succ[i].push(j);
            }
        }
    }
    edges.sort_unstable();
    let shift = if kind == PosetKind::Q { n as i64 } else { 0 };
    let rank_of = nodes.iter().map(|v| p_rank(v) - shift).collect();
    Ok(HasseDag {
        kind,
        n,
        nodes,
        index,
        edges,
        rank_of,
        succ,
    })
}

impl HasseDag {
    pub fn kind(&self) -> PosetKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> &[SignVector] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Index pairs `(covered, covering)`.
    pub fn edge_indices(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (SignVector, SignVector)> + '_ {
        self.edges
            .iter()
            .map(|&(i, j)| (self.nodes[i], self.nodes[j]))
    }

    pub fn index_of(&self, v: &SignVector) -> Option<usize> {
        self.index.get(&v.bits()).copied()
    }

    pub fn rank_of(&self, i: usize) -> i64 {
        self.rank_of[i]
    }

    pub fn successors(&self, i: usize) -> &[usize] {
        &self.succ[i]
    }

    /// Nodes with no covering node inside the poset.
    pub fn maximal_nodes(&self) -> Vec<SignVector> {
        (0..self.nodes.len())
            .filter(|&i| self.succ[i].is_empty())
            .map(|i| self.nodes[i])
            .collect()
    }

    /// Nodes covering nothing inside the poset.
    pub fn minimal_nodes(&self) -> Vec<SignVector> {
        let mut has_pred = vec![false; self.nodes.len()];
        for &(_, j) in &self.edges {
            has_pred[j] = true;
        }
        (0..self.nodes.len())
            .filter(|&i| !has_pred[i])
            .map(|i| self.nodes[i])
            .collect()
    }

    /// Node indices sorted by rank, which is a topological order because
    /// every edge raises rank.
    fn topological(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.nodes.len()).collect();
        order.sort_by_key(|&i| (self.rank_of[i], i));
        order
    }

    /// Size of the largest chain: one more than the longest path, 0 for an
    /// empty poset.
    pub fn height(&self) -> usize {
        let mut longest = vec![1usize; self.nodes.len()];
        for i in self.topological() {
            for &j in &self.succ[i] {
                longest[j] = longest[j].max(longest[i] + 1);
            }
        }
        longest.into_iter().max().unwrap_or(0)
    }

    /// Strict-upper-set bitsets from the cover edges.
    fn reachability(&self) -> Vec<Vec<u64>> {
        let count = self.nodes.len();
        let words = count.div_ceil(64);
        let mut reach = vec![vec![0u64; words]; count];
        for i in self.topological().into_iter().rev() {
            let mut row = vec![0u64; words];
            for &j in &self.succ[i] {
                row[j / 64] |= 1 << (j % 64);
                for (r, s) in row.iter_mut().zip(&reach[j]) {
                    *r |= s;
                }
            }
            reach[i] = row;
        }
        reach
    }

    /// Size of the largest antichain, by Dilworth's theorem: node count minus
    /// a maximum matching in the bipartite graph of strict comparabilities.
    pub fn width(&self) -> Result<usize> {
        let count = self.nodes.len();
        if count > MAX_WIDTH_NODES {
            return Err(Error::TooLarge {
                what: "width computation (node count)",
                n: count as u64,
                limit: MAX_WIDTH_NODES as u64,
            });
        }
        let reach = self.reachability();
        let adj: Vec<Vec<usize>> = reach
            .iter()
            .map(|row| {
                let mut out = Vec::new();
                for (w, &word) in row.iter().enumerate() {
                    let mut bits = word;
                    while bits != 0 {
                        out.push(w * 64 + bits.trailing_zeros() as usize);
                        bits &= bits - 1;
                    }
                }
                out
            })
            .collect();
        Ok(count - hopcroft_karp(&adj, count))
    }
}

/// Maximum bipartite matching, left and right sides both `0..right`.
fn hopcroft_karp(adj: &[Vec<usize>], right: usize) -> usize {
    const NIL: usize = usize::MAX;
    let left = adj.len();
    let mut match_l = vec![NIL; left];
    let mut match_r = vec![NIL; right];
    let mut dist = vec![0u32; left];
    let mut matched = 0;

    loop {
        // BFS layering from free left vertices.
        let mut queue = VecDeque::new();
        for u in 0..left {
            if match_l[u] == NIL {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = u32::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let m = match_r[v];
                if m == NIL {
                    found = true;
                } else if dist[m] == u32::MAX {
                    dist[m] = dist[u] + 1;
                    queue.push_back(m);
                }
            }
        }
        if !found {
            break;
        }
        // Iterative DFS along the layering.
        let mut it = vec![0usize; left];
        for root in 0..left {
            if match_l[root] != NIL {
                continue;
            }
            let mut stack = vec![root];
            while let Some(&u) = stack.last() {
                if it[u] == adj[u].len() {
                    dist[u] = u32::MAX;
                    stack.pop();
                    continue;
                }
                let v = adj[u][it[u]];
                it[u] += 1;
                let m = match_r[v];
                if m == NIL {
                    // augment along the stack
                    let mut v = v;
                    while let Some(u) = stack.pop() {
                        let prev = match_l[u];
                        match_l[u] = v;
                        match_r[v] = u;
                        v = prev;
                    }
                    matched += 1;
                    break;
                } else if dist[m] == dist[u] + 1 {
                    stack.push(m);
                }
            }
        }
    }
    matched
}

/// Cover pairs of an arbitrary finite order given as `leq`, found by brute
/// force: `(i, j)` is a cover iff `i ≺ j` and nothing lies strictly between.
/// Output pairs are sorted. Independent of the operator characterization.
pub fn transitive_reduction<F>(nodes: &[SignVector], leq: F) -> Vec<(usize, usize)>
where
    F: Fn(&SignVector, &SignVector) -> bool,
{
    let count = nodes.len();
    let words = count.div_ceil(64);
    let mut above = vec![vec![0u64; words]; count];
    let mut below = vec![vec![0u64; words]; count];
    for i in 0..count {
        for j in 0..count {
            if i != j && leq(&nodes[i], &nodes[j]) {
                above[i][j / 64] |= 1 << (j % 64);
                below[j][i / 64] |= 1 << (i % 64);
            }
        }
    }
    let mut out = Vec::new();
    for (i, up) in above.iter().enumerate() {
        for j in 0..count {
            if up[j / 64] >> (j % 64) & 1 == 0 {
                continue;
            }
            let between = up.iter().zip(&below[j]).any(|(a, b)| a & b != 0);
            if !between {
                out.push((i, j));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(e: &[i8]) -> SignVector {
        SignVector::from_entries(e).unwrap()
    }

    #[test]
    fn q3_is_an_incomparable_pair() {
        let dag = build_hasse(3, PosetKind::Q).unwrap();
        assert_eq!(dag.nodes(), &[sv(&[1, -1, -1]), sv(&[-1, 1, 1])]);
        assert_eq!(dag.edge_count(), 0);
        assert_eq!(dag.height(), 1);
        assert_eq!(dag.width().unwrap(), 2);
    }

    #[test]
    fn p5_matches_bruteforce_reduction() {
        let dag = build_hasse(5, PosetKind::P).unwrap();
        assert_eq!(dag.node_count(), 32);
        let brute = transitive_reduction(dag.nodes(), |a, b| a.leq(b).unwrap());
        assert_eq!(dag.edge_indices(), brute.as_slice());
    }

    #[test]
    fn q4_shape() {
        let dag = build_hasse(4, PosetKind::Q).unwrap();
        assert_eq!(dag.node_count(), 4);
        assert_eq!(dag.height(), 2);
        for &(i, j) in dag.edge_indices() {
            assert_eq!(dag.rank_of(j), dag.rank_of(i) + 1);
        }
    }

    #[test]
    fn small_heights_and_widths() {
        assert_eq!(build_hasse(5, PosetKind::P).unwrap().height(), 16);
        assert_eq!(build_hasse(8, PosetKind::Q).unwrap().height(), 16);
        assert_eq!(build_hasse(3, PosetKind::P).unwrap().width().unwrap(), 2);
        assert_eq!(build_hasse(5, PosetKind::P).unwrap().width().unwrap(), 3);
        assert_eq!(build_hasse(5, PosetKind::Q).unwrap().width().unwrap(), 3);
    }

    #[test]
    fn width_matches_bruteforce_antichain() {
        // exhaustive maximum antichain over all node subsets
        for (n, kind) in [(3, PosetKind::P), (4, PosetKind::P), (5, PosetKind::Q), (4, PosetKind::Q)] {
            let dag = build_hasse(n, kind).unwrap();
            let nodes = dag.nodes();
            let mut best = 0;
            for mask in 0u32..1 << nodes.len() {
                let members: Vec<_> = (0..nodes.len()).filter(|i| mask >> i & 1 == 1).collect();
                let antichain = members.iter().all(|&a| {
                    members
                        .iter()
                        .all(|&b| a == b || !nodes[a].leq(&nodes[b]).unwrap())
                });
                if antichain {
                    best = best.max(members.len());
                }
            }
            assert_eq!(dag.width().unwrap(), best, "{kind}({n})");
        }
    }

    #[test]
    fn matching_on_small_graphs() {
        assert_eq!(hopcroft_karp(&[vec![0, 1], vec![0], vec![]], 3), 2);
        assert_eq!(hopcroft_karp(&[vec![0], vec![0], vec![0]], 3), 1);
        assert_eq!(hopcroft_karp(&[vec![1, 2], vec![2], vec![]], 3), 2);
        assert_eq!(hopcroft_karp(&[], 0), 0);
    }

    #[test]
    fn guards() {
        assert!(matches!(
            build_hasse(15, PosetKind::P),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            build_hasse(17, PosetKind::Q),
            Err(Error::TooLarge { .. })
        ));
        assert!(build_hasse(13, PosetKind::P).unwrap().width().is_err());
    }

    #[test]
    fn reduction_of_a_chain() {
        let chain: Vec<SignVector> = (0..4).map(|b| SignVector::new(2, b).unwrap()).collect();
        // prefix sums put (-,-) < (-,+) < (+,-) < (+,+), i.e. bitmasks 0 < 2 < 1 < 3
        let red = transitive_reduction(&chain, |a, b| a.leq(b).unwrap());
        assert_eq!(red, vec![(0, 2), (1, 3), (2, 1)]);
    }
}
