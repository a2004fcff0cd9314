//! Polynomial-time construction of an ID-set of size at most `n/2` for any
//! subcubic graph without isolated vertices.
//!
//! The construction follows the inductive argument for the half bound and
//! works one connected component at a time:
//!
//! * order at most 6: solve exactly;
//! * bipartite: take the smaller side of the 2-coloring;
//! * otherwise fix an odd cycle `C` and apply the first reduction that
//!   fits:
//!   - (a) a cycle vertex `u` with a leaf `w`: recurse on `G - {u, w}`,
//!     add `w`;
//!   - (b) consecutive degree-2 cycle vertices `u, w`: recurse on
//!     `G - {u, w}`, then add `u` if its other neighbor is outside the
//!     recursive set, else `w` if its other neighbor is outside, else
//!     nothing;
//!   - (c) a degree-2 vertex `w` adjacent to consecutive cycle vertices
//!     `u, v`: recurse on `G - {u, v, w}`, add `w`;
//!   - (d) the first consecutive pair `u, v` of `C`: recurse on
//!     `G - {u, v}`, add `u` if it has no neighbor in the recursive set,
//!     else `v` under the same test, else nothing.
//!
//! Each step deletes at least two vertices and adds at most one, which is
//! where the `n/2` budget comes from. The budget is re-checked on every
//! component; a violation is reported as [`Error::BudgetExceeded`].

use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph, VertexSet};
use crate::solver::{self, IdCertificate, Provenance};

/// Reductions that can be switched off to build deliberately broken
/// variants for negative-control campaigns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    LeafOnCycle,
    TwoDegreeTwo,
    TriangleEar,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HalverConfig {
    /// Skip this reduction, falling through to the next one.
    pub skip: Option<Case>,
    /// Use the exact solver on components of at most this order.
    pub exact_base: Option<usize>,
}

impl HalverConfig {
    fn base_order(&self) -> usize {
        self.exact_base.unwrap_or(6)
    }
}

/// ID-set of size at most `⌊n/2⌋`.
pub fn half_bound_id_set(g: &Graph) -> Result<IdCertificate> {
    half_bound_id_set_with(g, &HalverConfig::default())
}

pub fn half_bound_id_set_with(g: &Graph, cfg: &HalverConfig) -> Result<IdCertificate> {
    let profile = g.degree_profile();
    if !profile.is_subcubic {
        return Err(Error::Precondition(format!(
            "maximum degree is {}, the construction needs at most 3",
            profile.max
        )));
    }
    if let Some(v) = g.isolated_vertices().next() {
        return Err(Error::Precondition(format!("vertex {v} is isolated")));
    }
    let set = Halver { cfg }.components(g)?;
    let budget = g.n() / 2;
    if set.len() > budget {
        return Err(Error::BudgetExceeded {
            size: set.len(),
            budget,
            order: g.n(),
        });
    }
    Ok(IdCertificate::new(set, Provenance::Halver))
}

struct Halver<'a> {
    cfg: &'a HalverConfig,
}

impl Halver<'_> {
    /// Union of the per-component results, with the budget checked on
    /// each component of order at least 2.
    fn components(&self, g: &Graph) -> Result<VertexSet> {
        let mut set = VertexSet::new(g.n());
        for block in g.components() {
            let sub = g.induced(&block);
            let order = sub.graph.n();
            let part = if order == 1 {
                // Isolated vertices can only dominate themselves.
                VertexSet::full(1)
            } else {
                let part = self.connected(&sub.graph)?;
                if part.len() > order / 2 {
                    return Err(Error::BudgetExceeded {
                        size: part.len(),
                        budget: order / 2,
                        order,
                    });
                }
                part
            };
            set = set.union(&sub.lift(&part));
        }
        Ok(set)
    }

    fn recurse(&self, g: &Graph, drop: &[usize]) -> Result<(Subgraph, VertexSet)> {
        let sub = g.remove_vertices(&VertexSet::from_vertices(g.n(), drop.iter().copied()));
        let part = self.components(&sub.graph)?;
        let lifted = sub.lift(&part);
        Ok((sub, lifted))
    }

    fn connected(&self, g: &Graph) -> Result<VertexSet> {
        let n = g.n();
        if n <= self.cfg.base_order() {
            return Ok(solver::min_id_set(g)?.set);
        }
        let Some(cycle) = g.find_odd_cycle() else {
            let (a, b) = g.bipartition().expect("no odd cycle means bipartite");
            return Ok(if b.len() < a.len() { b } else { a });
        };
        let len = cycle.len();
        let consecutive = || (0..len).map(|i| (cycle[i], cycle[(i + 1) % len]));
        let skip = |c: Case| self.cfg.skip == Some(c);

        if !skip(Case::LeafOnCycle) {
            let hit = cycle.iter().find_map(|&u| {
                g.neighbors(u)
                    .iter()
                    .find(|&&w| g.degree(w) == 1)
                    .map(|&w| (u, w))
            });
            if let Some((u, w)) = hit {
                let (_, mut s) = self.recurse(g, &[u, w])?;
                s.insert(w);
                return Ok(s);
            }
        }

        if !skip(Case::TwoDegreeTwo) {
            let hit = consecutive().find(|&(u, w)| g.degree(u) == 2 && g.degree(w) == 2);
            if let Some((u, w)) = hit {
                let other = |x: usize, y: usize| {
                    *g.neighbors(x).iter().find(|&&z| z != y).expect("degree 2")
                };
                let (u_out, w_out) = (other(u, w), other(w, u));
                let (_, mut s) = self.recurse(g, &[u, w])?;
                if !s.contains(u_out) {
                    s.insert(u);
                } else if !s.contains(w_out) {
                    s.insert(w);
                }
                return Ok(s);
            }
        }

        if !skip(Case::TriangleEar) {
            let hit = consecutive().find_map(|(u, v)| {
                g.neighbors(u)
                    .iter()
                    .find(|&&w| w != v && g.degree(w) == 2 && g.has_edge(w, v))
                    .map(|&w| (u, v, w))
            });
            if let Some((u, v, w)) = hit {
                let (_, mut s) = self.recurse(g, &[u, v, w])?;
                s.insert(w);
                return Ok(s);
            }
        }

        let (u, v) = (cycle[0], cycle[1]);
        let (_, mut s) = self.recurse(g, &[u, v])?;
        if !g.neighbor_set(u).intersects(&s) {
            s.insert(u);
        } else if !g.neighbor_set(v).intersects(&s) {
            s.insert(v);
        }
        Ok(s)
    }
}
