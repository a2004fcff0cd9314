//! Slow, independent reference implementations used to freeze expected
//! values and cross-check the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Adjacency bitmasks for `n <= 16` vertices.
pub type Adj = Vec<u16>;

pub fn adj_from_edges(n: usize, edges: &[(usize, usize)]) -> Adj {
    let mut adj = vec![0u16; n];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// Lexicographically largest adjacency string over all vertex orders, bits
/// taken column by column: (0,1), (0,2), (1,2), (0,3), ...
pub fn brute_canon(adj: &Adj) -> Vec<bool> {
    let n = adj.len();
    let mut best: Vec<bool> = Vec::new();
    let mut order = Vec::with_capacity(n);
    let mut cur = Vec::with_capacity(n * n / 2);
    extend(adj, &mut order, &mut cur, &mut best, 0);
    best
}

fn extend(adj: &Adj, order: &mut Vec<usize>, cur: &mut Vec<bool>, best: &mut Vec<bool>, used: u32) {
    let n = adj.len();
    if order.len() == n {
        if *cur > *best {
            *best = cur.clone();
        }
        return;
    }
    for v in 0..n {
        if used & (1 << v) != 0 {
            continue;
        }
        let mark = cur.len();
        for &u in order.iter() {
            cur.push(adj[u] & (1 << v) != 0);
        }
        // Prune when the prefix already loses to the best complete string.
        let prefix = &best[..cur.len().min(best.len())];
        if best.is_empty() || cur[..] >= *prefix {
            order.push(v);
            extend(adj, order, cur, best, used | (1 << v));
            order.pop();
        }
        cur.truncate(mark);
    }
}

pub fn is_connected(adj: &Adj) -> bool {
    let n = adj.len();
    if n == 0 {
        return true;
    }
    let mut seen: u32 = 1;
    let mut frontier: u32 = 1;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] as u32 & !seen;
        seen |= new;
        frontier |= new;
    }
    seen.count_ones() as usize == n
}

/// Connected cubic graphs on `n` vertices, labeled in breadth-first order:
/// vertex `i` takes its missing edges from later vertices, and a vertex no
/// earlier vertex has touched may only be used if it is the next fresh one.
/// Every connected cubic graph has such a labeling (any BFS order).
pub fn labeled_bfs_cubic(n: usize) -> Vec<Adj> {
    let mut out = Vec::new();
    if n < 4 || n % 2 == 1 || n > 16 {
        return out;
    }
    let mut adj = vec![0u16; n];
    fill(&mut adj, 0, 1, &mut out);
    out
}

/// `v` is the vertex being completed, `fresh` the smallest untouched label.
fn fill(adj: &mut Adj, v: usize, fresh: usize, out: &mut Vec<Adj>) {
    let n = adj.len();
    if v == n {
        out.push(adj.clone());
        return;
    }
    let deg = adj[v].count_ones();
    if deg == 3 {
        return fill(adj, v + 1, fresh, out);
    }
    if v >= fresh {
        // Untouched when its turn comes: the graph would be disconnected.
        return;
    }
    // Choose the smallest next neighbor greater than any already chosen
    // for `v` in this round, to avoid generating the same set twice.
    let floor = (0..n)
        .rev()
        .find(|&w| w > v && adj[v] & (1 << w) != 0)
        .map_or(v + 1, |w| w + 1);
    for w in floor..n.min(fresh + 1) {
        if adj[w].count_ones() == 3 {
            continue;
        }
        adj[v] |= 1 << w;
        adj[w] |= 1 << v;
        fill(adj, v, fresh.max(w + 1), out);
        adj[v] &= !(1 << w);
        adj[w] &= !(1 << v);
    }
}

/// Isomorphism classes of connected cubic graphs on `n` vertices.
pub fn cubic_classes(n: usize) -> BTreeSet<Vec<bool>> {
    labeled_bfs_cubic(n).iter().map(brute_canon).collect()
}

/// Every ID-set check done the slow way, straight from the definitions.
pub fn naive_is_id_set(n: usize, edges: &[(usize, usize)], set: &[usize]) -> (bool, bool) {
    let inside = |v: usize| set.contains(&v);
    let independent = edges.iter().all(|&(u, v)| !(inside(u) && inside(v)));
    let dominating = (0..n).all(|v| {
        inside(v)
            || edges
                .iter()
                .any(|&(a, b)| (a == v && inside(b)) || (b == v && inside(a)))
    });
    (independent, dominating)
}
