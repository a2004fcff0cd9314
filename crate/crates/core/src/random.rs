//! Seeded random subcubic graphs for property tests and sampling campaigns.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Random graph on `n >= 2` vertices with maximum degree at most 3 and no
/// isolated vertices. Not necessarily connected.
pub fn random_subcubic<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 2, "random_subcubic needs at least 2 vertices");
    let mut deg = vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let add = |u: usize, v: usize, deg: &mut Vec<usize>, edges: &mut Vec<(usize, usize)>| {
        let e = (u.min(v), u.max(v));
        if u != v && deg[u] < 3 && deg[v] < 3 && !edges.contains(&e) {
            deg[u] += 1;
            deg[v] += 1;
            edges.push(e);
            true
        } else {
            false
        }
    };
    let target = rng.gen_range(n / 2..=3 * n / 2);
    for _ in 0..4 * target {
        if edges.len() >= target {
            break;
        }
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        add(u, v, &mut deg, &mut edges);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for &v in &order {
        if deg[v] > 0 {
            continue;
        }
        // Prefer another isolated vertex, then any vertex with spare degree.
        let mut partners: Vec<usize> = (0..n).filter(|&u| u != v && deg[u] < 3).collect();
        partners.shuffle(rng);
        partners.sort_by_key(|&u| deg[u] > 0);
        if let Some(&u) = partners.first() {
            add(u, v, &mut deg, &mut edges);
        } else {
            // Every other vertex is saturated: free one by moving an edge.
            let i = edges
                .iter()
                .position(|&(a, b)| deg[a] > 1 && deg[b] > 1)
                .expect("a saturated graph has an edge between two degree-3 vertices");
            let (a, b) = edges.swap_remove(i);
            deg[a] -= 1;
            deg[b] -= 1;
            add(a, v, &mut deg, &mut edges);
        }
    }
    Graph::from_edge_list(n, &edges).expect("edges are simple and in range")
}
