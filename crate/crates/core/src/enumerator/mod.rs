//! Exhaustive generation of small connected subcubic and cubic graphs.
//!
//! Level `m` is grown from level `m - 1` by adding one vertex joined to one,
//! two or three existing vertices of degree at most 2, then deduplicated by
//! canonical form. Growing only connected graphs is complete: every
//! connected graph has a vertex whose removal leaves it connected (a leaf
//! of any spanning tree), so every connected graph of order `m` arises from
//! some connected graph of order `m - 1`.
//!
//! Each level is materialized and sorted by canonical form, so the output
//! order is deterministic regardless of worker count.

mod campaign;

pub use campaign::{
    campaign_characterization, campaign_conjecture, campaign_fcubic, campaign_fcubic_members,
    campaign_half_bound, CampaignConfig, CampaignReport, Record, Status,
};

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_form_with_ceiling, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default largest order for enumeration.
pub const DEFAULT_CEILING: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    Subcubic,
    /// Only keep graphs that can still grow into a cubic graph of this order.
    Cubic(usize),
}

fn check_ceiling(n: usize, ceiling: usize) -> Result<()> {
    if n > ceiling {
        return Err(Error::Capacity {
            what: "enumeration order",
            got: n,
            limit: ceiling,
        });
    }
    Ok(())
}

/// Sum of `3 - deg(v)`: edges still owed to vertices added later.
fn deficiency(g: &Graph) -> usize {
    g.vertices().map(|v| 3 - g.degree(v).min(3)).sum()
}

fn extensions(g: &Graph) -> impl Iterator<Item = Graph> + '_ {
    let open: Vec<usize> = g.vertices().filter(|&v| g.degree(v) <= 2).collect();
    let n = g.n();
    let base: Vec<(usize, usize)> = g.edges().collect();
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    for (i, &a) in open.iter().enumerate() {
        subsets.push(vec![a]);
        for (j, &b) in open.iter().enumerate().skip(i + 1) {
            subsets.push(vec![a, b]);
            for &c in &open[j + 1..] {
                subsets.push(vec![a, b, c]);
            }
        }
    }
    subsets.into_iter().map(move |nbrs| {
        let mut edges = base.clone();
        edges.extend(nbrs.iter().map(|&u| (u, n)));
        Graph::from_edge_list(n + 1, &edges).expect("extension stays simple")
    })
}

fn grow(level: &[CanonicalForm], target: Target, ceiling: usize) -> Vec<CanonicalForm> {
    let order = level.first().map_or(0, CanonicalForm::order) + 1;
    let keep = |g: &Graph| match target {
        Target::Subcubic => true,
        Target::Cubic(goal) => deficiency(g) <= 3 * (goal - order),
    };
    let mut forms: Vec<CanonicalForm> = level
        .par_iter()
        .fold(HashSet::new, |mut acc, form| {
            for g in extensions(&form.to_graph()) {
                if keep(&g) {
                    acc.insert(canonical_form_with_ceiling(&g, ceiling).expect("within ceiling"));
                }
            }
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return b.into_iter().chain(a).collect();
            }
            a.extend(b);
            a
        })
        .into_iter()
        .collect();
    forms.sort_unstable();
    forms
}

fn levels_up_to(n: usize, target: Target, ceiling: usize) -> Vec<CanonicalForm> {
    let single = canonical_form_with_ceiling(&Graph::empty(1), ceiling).expect("order 1");
    let mut level = vec![single];
    for _ in 2..=n {
        level = grow(&level, target, ceiling);
    }
    level
}

/// All connected graphs with maximum degree at most 3 on `n` vertices, one
/// per isomorphism class, canonically labeled and sorted by canonical form.
pub fn enumerate_connected_subcubic(n: usize) -> Result<Vec<Graph>> {
    enumerate_connected_subcubic_with(n, DEFAULT_CEILING)
}

pub fn enumerate_connected_subcubic_with(n: usize, ceiling: usize) -> Result<Vec<Graph>> {
    check_ceiling(n, ceiling)?;
    if n < 2 {
        return Err(Error::Precondition(format!(
            "enumeration starts at order 2, got {n}"
        )));
    }
    Ok(levels_up_to(n, Target::Subcubic, ceiling)
        .iter()
        .map(CanonicalForm::to_graph)
        .collect())
}

/// Connected cubic graphs on `n` vertices; empty for odd `n` or `n < 4`.
pub fn enumerate_connected_cubic(n: usize) -> Result<Vec<Graph>> {
    enumerate_connected_cubic_with(n, DEFAULT_CEILING)
}

pub fn enumerate_connected_cubic_with(n: usize, ceiling: usize) -> Result<Vec<Graph>> {
    check_ceiling(n, ceiling)?;
    if n % 2 == 1 || n < 4 {
        return Ok(Vec::new());
    }
    Ok(levels_up_to(n, Target::Cubic(n), ceiling)
        .iter()
        .map(CanonicalForm::to_graph)
        .filter(|g| g.degree_profile().is_cubic)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    #[test]
    fn small_orders() {
        let two = enumerate_connected_subcubic(2).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].m(), 1);
        let three = enumerate_connected_subcubic(3).unwrap();
        let mut sizes: Vec<_> = three.iter().map(Graph::m).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 3]);
    }

    #[test]
    fn cubic_small_orders() {
        assert_eq!(enumerate_connected_cubic(4).unwrap().len(), 1);
        assert!(enumerate_connected_cubic(5).unwrap().is_empty());
        let six = enumerate_connected_cubic(6).unwrap();
        assert_eq!(six.len(), 2);
        let has_triangle = |g: &Graph| {
            g.edges()
                .any(|(u, v)| g.neighbor_set(u).intersects(g.neighbor_set(v)))
        };
        assert_eq!(six.iter().filter(|g| has_triangle(g)).count(), 1);
        assert_eq!(six.iter().filter(|g| g.bipartition().is_some()).count(), 1);
    }

    #[test]
    fn ceiling_and_preconditions() {
        assert!(matches!(
            enumerate_connected_subcubic(13),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            enumerate_connected_subcubic(1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn output_is_sorted_and_distinct() {
        for n in 2..=8 {
            let graphs = enumerate_connected_subcubic(n).unwrap();
            let forms: Vec<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
            assert!(forms.windows(2).all(|w| w[0] < w[1]), "n={n}");
            for g in &graphs {
                assert!(g.is_connected() && g.degree_profile().is_subcubic);
            }
        }
    }
}
