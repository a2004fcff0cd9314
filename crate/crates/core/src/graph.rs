//! Simple undirected graphs over dense vertex indices `0..n`.
//!
//! Every [`Graph`] keeps two views of the same edge set: sorted neighbor
//! lists for iteration and per-vertex [`VertexSet`] rows for word-parallel
//! set algebra. Both are built once and never mutated; deleting vertices
//! produces a new, re-indexed graph together with the index maps.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

/// A set of vertices of a graph with `universe` vertices.
///
/// Graphs with at most 64 vertices use a single machine word; larger ones
/// spill into additional words transparently.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; words_for(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Self {
        let mut s = Self::new(universe);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// Number of vertices of the underlying graph.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} outside 0..{}", self.universe);
        let (w, b) = (v / WORD, v % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / WORD, v % WORD);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] & (1 << (v % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter().chain(std::iter::repeat(&0)))
            .all(|(a, b)| a & !b == 0)
    }

    /// Raw words, lowest vertices first.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        VertexSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Minimum and maximum degree together with the two degree classes the
/// toolkit cares about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    pub is_subcubic: bool,
    pub is_cubic: bool,
}

/// Outcome of checking a set for independence and domination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdCheck {
    pub independent: bool,
    pub dominating: bool,
}

impl IdCheck {
    pub fn is_id_set(&self) -> bool {
        self.independent && self.dominating
    }
}

/// Result of deleting vertices: the induced subgraph plus both index maps.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl Subgraph {
    /// Lift a vertex set of the subgraph back to the parent's indices.
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(
            self.old_to_new.len(),
            set.iter().map(|v| self.new_to_old[v]),
        )
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    adjacency_bits: Vec<VertexSet>,
}

impl Graph {
    /// Build a graph on `n` vertices. Repeated edges collapse to one;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adjacency_bits = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Construction(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Construction(format!("self-loop at vertex {u}")));
            }
            adjacency_bits[u].insert(v);
            adjacency_bits[v].insert(u);
        }
        let adjacency = adjacency_bits.iter().map(VertexSet::to_vec).collect();
        Ok(Graph {
            n,
            adjacency,
            adjacency_bits,
        })
    }

    /// Graph with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph::from_edge_list(n, &[]).expect("edgeless graph is always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.adjacency_bits[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adjacency_bits[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency_bits[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees = self.adjacency.iter().map(Vec::len);
        let min = degrees.clone().min().unwrap_or(0);
        let max = degrees.max().unwrap_or(0);
        DegreeProfile {
            min,
            max,
            is_subcubic: max <= 3,
            is_cubic: self.n > 0 && min == 3 && max == 3,
        }
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices().filter(|&v| self.degree(v) == 0)
    }

    /// Connected components, each listed once, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut blocks = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            let mut block = VertexSet::new(self.n);
            let mut stack = vec![root];
            seen[root] = true;
            while let Some(v) = stack.pop() {
                block.insert(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            blocks.push(block);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Breadth-first layering of every component, roots at the smallest
    /// vertex. Returns `(depth, parent)`.
    fn bfs_forest(&self) -> (Vec<usize>, Vec<Option<usize>>) {
        let mut depth = vec![usize::MAX; self.n];
        let mut parent = vec![None; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if depth[root] != usize::MAX {
                continue;
            }
            depth[root] = 0;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if depth[w] == usize::MAX {
                        depth[w] = depth[v] + 1;
                        parent[w] = Some(v);
                        queue.push_back(w);
                    }
                }
            }
        }
        (depth, parent)
    }

    /// Proper 2-coloring `(A, B)` if the graph is bipartite. Within each
    /// component the side holding the smallest vertex is `A`.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let (depth, _) = self.bfs_forest();
        if self.edges().any(|(u, v)| depth[u] % 2 == depth[v] % 2) {
            return None;
        }
        let mut a = VertexSet::new(self.n);
        let mut b = VertexSet::new(self.n);
        for (v, d) in depth.iter().enumerate() {
            if d % 2 == 0 {
                a.insert(v);
            } else {
                b.insert(v);
            }
        }
        Some((a, b))
    }

    /// Some odd cycle, in cycle order, or `None` if the graph is bipartite.
    ///
    /// Uses the first intra-layer edge `(u, v)` of the BFS forest (edges in
    /// lexicographic order) and closes it through the lowest common
    /// ancestor of `u` and `v`.
    pub fn find_odd_cycle(&self) -> Option<Vec<usize>> {
        let (depth, parent) = self.bfs_forest();
        let (u, v) = self.edges().find(|&(u, v)| depth[u] == depth[v])?;
        let mut left = vec![u];
        let mut right = vec![v];
        let (mut a, mut b) = (u, v);
        while a != b {
            a = parent[a].expect("non-root vertex has a parent");
            b = parent[b].expect("non-root vertex has a parent");
            left.push(a);
            right.push(b);
        }
        // left ends at the ancestor, right ends there too; drop the duplicate.
        right.pop();
        right.reverse();
        left.extend(right);
        Some(left)
    }

    /// Induced subgraph on the complement of `drop`, re-indexed in
    /// increasing order of the surviving vertices.
    pub fn remove_vertices(&self, drop: &VertexSet) -> Subgraph {
        let keep = VertexSet::full(self.n).difference(drop);
        self.induced(&keep)
    }

    /// Induced subgraph on `keep`, re-indexed in increasing order.
    pub fn induced(&self, keep: &VertexSet) -> Subgraph {
        let new_to_old: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .filter_map(|(u, v)| Some((old_to_new[u]?, old_to_new[v]?)))
            .collect();
        let graph = Graph::from_edge_list(new_to_old.len(), &edges)
            .expect("induced subgraph of a simple graph is simple");
        Subgraph {
            graph,
            old_to_new,
            new_to_old,
        }
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edge_list(self.n, &edges).expect("permutation preserves simplicity")
    }

    /// Disjoint union, `other`'s vertices shifted past this graph's.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges: Vec<_> = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)))
            .collect();
        Graph::from_edge_list(self.n + other.n, &edges).expect("union of simple graphs")
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adjacency_bits[v].intersects(s))
    }

    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        (0..self.n).all(|v| s.contains(v) || self.adjacency_bits[v].intersects(s))
    }

    pub fn is_id_set(&self, s: &VertexSet) -> IdCheck {
        IdCheck {
            independent: self.is_independent(s),
            dominating: self.is_dominating(s),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn k33() -> Graph {
        let mut edges = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                edges.push((a, b));
            }
        }
        Graph::from_edge_list(6, &edges).unwrap()
    }

    #[test]
    fn single_edge() {
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.degree_profile().max, 1);
    }

    #[test]
    fn four_cycle() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.m(), 4);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        let (a, b) = g.bipartition().unwrap();
        assert_eq!((a.to_vec(), b.to_vec()), (vec![0, 2], vec![1, 3]));
    }

    #[test]
    fn parallel_edges_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g, Graph::from_edge_list(3, &[(0, 1)]).unwrap());
        assert_eq!(g.degree(2), 0);
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(matches!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(Error::Construction(_))
        ));
        assert!(matches!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::Construction(_))
        ));
    }

    #[test]
    fn degree_profiles() {
        let p = k33().degree_profile();
        assert_eq!(
            (p.min, p.max, p.is_subcubic, p.is_cubic),
            (3, 3, true, true)
        );
        let p = path(4).degree_profile();
        assert_eq!(
            (p.min, p.max, p.is_subcubic, p.is_cubic),
            (1, 2, true, false)
        );
        let star = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let p = star.degree_profile();
        assert_eq!(
            (p.min, p.max, p.is_subcubic, p.is_cubic),
            (1, 4, false, false)
        );
    }

    #[test]
    fn components_examples() {
        assert_eq!(cycle(4).components().len(), 1);
        let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let blocks = two.components();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.len() == 2));

        // Drop vertex 0 of K_{3,3} and its three neighbors 3, 4, 5.
        let g = k33();
        let sub = g.remove_vertices(&g.closed_neighborhood(0));
        assert_eq!(sub.graph.n(), 2);
        assert_eq!(sub.graph.m(), 0);
        let blocks = sub.graph.components();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.len() == 1));
        assert_eq!(sub.new_to_old, vec![1, 2]);
    }

    #[test]
    fn bipartition_examples() {
        let (a, b) = cycle(6).bipartition().unwrap();
        assert_eq!((a.len(), b.len()), (3, 3));
        assert!(cycle(5).bipartition().is_none());
        let (a, b) = k33().bipartition().unwrap();
        assert_eq!((a.to_vec(), b.to_vec()), (vec![0, 1, 2], vec![3, 4, 5]));
    }

    fn assert_odd_cycle(g: &Graph, c: &[usize]) {
        assert!(c.len() % 2 == 1 && c.len() >= 3, "{c:?}");
        let distinct: std::collections::BTreeSet<_> = c.iter().collect();
        assert_eq!(distinct.len(), c.len());
        for i in 0..c.len() {
            assert!(g.has_edge(c[i], c[(i + 1) % c.len()]), "{c:?}");
        }
    }

    #[test]
    fn odd_cycle_examples() {
        let c5 = cycle(5);
        let c = c5.find_odd_cycle().unwrap();
        assert_eq!(c.len(), 5);
        assert_odd_cycle(&c5, &c);
        assert!(cycle(4).find_odd_cycle().is_none());
        let k4 =
            Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c = k4.find_odd_cycle().unwrap();
        assert_eq!(c.len(), 3);
        assert_odd_cycle(&k4, &c);
    }

    #[test]
    fn odd_cycle_in_later_component() {
        let g = path(3).disjoint_union(&cycle(7));
        let c = g.find_odd_cycle().unwrap();
        assert_eq!(c.len(), 7);
        assert_odd_cycle(&g, &c);
    }

    #[test]
    fn remove_vertices_examples() {
        let sub = cycle(5).remove_vertices(&VertexSet::from_vertices(5, [0]));
        assert_eq!(sub.graph, path(4));
        let g = k33();
        let same = g.remove_vertices(&VertexSet::new(6));
        assert_eq!(same.graph, g);
        assert_eq!(same.new_to_old, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn id_set_examples() {
        let g = k33();
        let side = VertexSet::from_vertices(6, [0, 1, 2]);
        assert_eq!(
            g.is_id_set(&side),
            IdCheck {
                independent: true,
                dominating: true
            }
        );
        let c5 = cycle(5);
        let check = c5.is_id_set(&VertexSet::from_vertices(5, [0, 1, 3]));
        assert_eq!((check.independent, check.dominating), (false, true));
        let c6 = cycle(6);
        let check = c6.is_id_set(&VertexSet::from_vertices(6, [0, 2]));
        assert_eq!((check.independent, check.dominating), (true, false));
        let check = c6.is_id_set(&VertexSet::from_vertices(6, [0, 3]));
        assert_eq!((check.independent, check.dominating), (true, true));
    }

    #[test]
    fn closed_neighborhood_contains_self() {
        let g = k33();
        for v in g.vertices() {
            assert!(g.closed_neighborhood(v).contains(v));
            assert!(!g.neighbor_set(v).contains(v));
        }
    }

    #[test]
    fn wide_sets_span_words() {
        let mut s = VertexSet::new(130);
        for v in [0, 63, 64, 127, 129] {
            s.insert(v);
        }
        assert_eq!(s.to_vec(), vec![0, 63, 64, 127, 129]);
        assert_eq!(s.len(), 5);
        let g = cycle(130);
        assert_eq!(g.neighbors(64), &[63, 65]);
        assert!(g.bipartition().is_some());
    }
}
