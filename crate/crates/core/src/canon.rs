//! Canonical labeling for small graphs.
//!
//! The canonical code is the lexicographically smallest packed upper
//! triangle over all vertex orders reachable by individualization and
//! equitable refinement. Refinement only ever looks at cell positions and
//! neighbor counts, never at vertex indices, so the set of reachable orders
//! (and hence the minimum) does not depend on the input labeling.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default largest order accepted by [`canonical_form`].
pub const DEFAULT_CEILING: usize = 14;
/// Hard limit of the single-word row representation.
pub const MAX_CEILING: usize = 64;

/// Relabel-invariant encoding: one byte of `n`, then the row-major upper
/// triangle of the canonically ordered adjacency matrix, MSB first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    code: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.code
    }

    pub fn order(&self) -> usize {
        self.code[0] as usize
    }

    /// The canonically labeled graph this code describes.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.code[1 + k / 8] & (0x80 >> (k % 8)) != 0 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edge_list(n, &edges).expect("canonical code encodes a simple graph")
    }
}

type Cells = Vec<Vec<usize>>;

struct Leaf {
    code: Vec<u8>,
    order: Vec<usize>,
    path: Vec<usize>,
}

struct Labeler {
    n: usize,
    rows: Vec<u64>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Automorphisms found so far, as vertex maps.
    autos: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Labeler {
    fn refine(&self, mut cells: Cells) -> Cells {
        loop {
            let masks: Vec<u64> = cells
                .iter()
                .map(|c| c.iter().fold(0u64, |m, &v| m | (1 << v)))
                .collect();
            let mut next: Cells = Vec::with_capacity(self.n);
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let key = masks
                            .iter()
                            .map(|m| (self.rows[v] & m).count_ones())
                            .collect();
                        (key, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn code_for(&self, order: &[usize]) -> Vec<u8> {
        let n = self.n;
        let mut code = vec![0u8; 1 + (n * n.saturating_sub(1) / 2).div_ceil(8)];
        code[0] = n as u8;
        let mut k = 0;
        for i in 0..n {
            let row = self.rows[order[i]];
            for &w in &order[i + 1..] {
                if row & (1 << w) != 0 {
                    code[1 + k / 8] |= 0x80 >> (k % 8);
                }
                k += 1;
            }
        }
        code
    }

    fn automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut map = vec![0; self.n];
        for (&a, &b) in from.iter().zip(to) {
            map[a] = b;
        }
        self.autos.push(map);
    }

    /// Orbit representatives under the automorphisms found so far that fix
    /// `path` pointwise.
    fn orbits(&self, path: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for map in &self.autos {
            if path.iter().any(|&v| map[v] != v) {
                continue;
            }
            for (v, &w) in map.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }

    /// Returns `Some(d)` to unwind the search to the node at depth `d`.
    fn search(&mut self, cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = self.code_for(&order);
            let leaf = Leaf {
                code,
                order,
                path: path.clone(),
            };
            let Some(first) = &self.first else {
                self.first = Some(Leaf {
                    code: leaf.code.clone(),
                    order: leaf.order.clone(),
                    path: leaf.path.clone(),
                });
                self.best = Some(leaf);
                return None;
            };
            if first.code == leaf.code {
                let (from, depth) = (first.order.clone(), common_prefix(&first.path, path));
                self.automorphism(&from, &leaf.order);
                return Some(depth);
            }
            let best = self.best.as_ref().expect("set with first");
            if best.code == leaf.code {
                let (from, depth) = (best.order.clone(), common_prefix(&best.path, path));
                self.automorphism(&from, &leaf.order);
                return Some(depth);
            }
            if leaf.code < best.code {
                self.best = Some(leaf);
            }
            return None;
        };
        let depth = path.len();
        let mut members = cells[target].clone();
        members.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        let mut seen_autos = usize::MAX;
        let mut orbit = Vec::new();
        for &v in &members {
            if !explored.is_empty() {
                if seen_autos != self.autos.len() {
                    orbit = self.orbits(path);
                    seen_autos = self.autos.len();
                }
                if explored.iter().any(|&u| orbit[u] == orbit[v]) {
                    continue;
                }
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            path.push(v);
            let jump = self.search(child, path);
            path.pop();
            explored.push(v);
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }
}

/// Canonical form with the default ceiling of [`DEFAULT_CEILING`] vertices.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_with_ceiling(g, DEFAULT_CEILING)
}

pub fn canonical_form_with_ceiling(g: &Graph, ceiling: usize) -> Result<CanonicalForm> {
    let limit = ceiling.min(MAX_CEILING);
    if g.n() > limit {
        return Err(Error::Capacity {
            what: "graph order for canonical labeling",
            got: g.n(),
            limit,
        });
    }
    let rows = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let mut labeler = Labeler {
        n: g.n(),
        rows,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let start = if g.n() == 0 {
        Vec::new()
    } else {
        vec![g.vertices().collect()]
    };
    labeler.search(start, &mut Vec::new());
    Ok(CanonicalForm {
        code: labeler.best.expect("search reaches at least one leaf").code,
    })
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.m() != h.m() {
        // Still enforce the ceiling so callers see consistent errors.
        canonical_form(g)?;
        canonical_form(h)?;
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}
