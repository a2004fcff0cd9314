//! Exact independent domination number.
//!
//! An ID-set is exactly a maximal independent set, so `i(G)` is the size of
//! a smallest maximal independent set. The search keeps a set of *free*
//! vertices (neither chosen nor adjacent to a chosen vertex) and branches on
//! the closed neighborhood of the free vertex with the fewest choosable
//! neighbors: some member of that neighborhood must join the set. Siblings
//! already explored are banned in later branches, so every maximal
//! independent set is reached at most once.
//!
//! [`oracle_min_id_set`] is an independent exhaustive check that shares no
//! code with the branch-and-bound path.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Where a certificate came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Exact,
    Oracle,
    Halver,
}

/// An independent dominating set together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdCertificate {
    pub set: VertexSet,
    pub size: usize,
    pub provenance: Provenance,
    /// True only when the set is known to be of minimum size.
    pub optimal: bool,
}

impl IdCertificate {
    pub fn new(set: VertexSet, provenance: Provenance) -> Self {
        IdCertificate {
            size: set.len(),
            optimal: matches!(provenance, Provenance::Exact | Provenance::Oracle),
            set,
            provenance,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SolverOptions {
    /// Explore the top-level branches on the rayon pool.
    pub parallel: bool,
}

/// Largest order the exact solver accepts.
pub const MAX_ORDER: usize = 1024;

// Fixed-width bit set used inside the search; W words cover 64 * W vertices.
#[derive(Clone, Copy, PartialEq, Eq)]
struct Bits<const W: usize>([u64; W]);

impl<const W: usize> Bits<W> {
    const EMPTY: Self = Bits([0; W]);

    fn from_set(s: &VertexSet) -> Self {
        let mut b = Self::EMPTY;
        b.0[..s.words().len()].copy_from_slice(s.words());
        b
    }

    fn to_set(self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.iter())
    }

    fn with(mut self, v: usize) -> Self {
        self.0[v / 64] |= 1 << (v % 64);
        self
    }

    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] & (1 << (v % 64)) != 0
    }

    fn and(self, o: Self) -> Self {
        let mut r = self;
        for i in 0..W {
            r.0[i] &= o.0[i];
        }
        r
    }

    fn and_not(self, o: Self) -> Self {
        let mut r = self;
        for i in 0..W {
            r.0[i] &= !o.0[i];
        }
        r
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn iter(self) -> impl Iterator<Item = usize> {
        (0..W).flat_map(move |i| {
            let mut rest = self.0[i];
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + b)
            })
        })
    }
}

/// What a search run is after.
enum Goal<const W: usize> {
    /// Smallest set; `best` holds the size to beat (shared across workers).
    Minimum,
    /// Any set of size at most the bound.
    Feasible,
    /// Every set of exactly the bound.
    All(Vec<Bits<W>>),
}

struct Search<'a, const W: usize> {
    closed: &'a [Bits<W>],
    /// Size to beat for `Minimum`, inclusive bound + 1 otherwise.
    best: &'a AtomicUsize,
    found: Option<Bits<W>>,
    goal: Goal<W>,
}

impl<const W: usize> Search<'_, W> {
    fn done(&self) -> bool {
        matches!(self.goal, Goal::Feasible) && self.found.is_some()
    }

    /// Lower bound on the chosen vertices still needed to cover `free`.
    fn remaining_bound(&self, free: Bits<W>, choosable: Bits<W>) -> usize {
        if free.is_empty() {
            return 0;
        }
        let cover = choosable
            .iter()
            .map(|u| self.closed[u].and(free).count())
            .max()
            .unwrap_or(0);
        if cover == 0 {
            usize::MAX / 2
        } else {
            free.count().div_ceil(cover)
        }
    }

    /// Branch vertex: the free vertex with the fewest choosable vertices in
    /// its closed neighborhood (smallest index on ties).
    fn branch_set(&self, free: Bits<W>, choosable: Bits<W>) -> Bits<W> {
        let mut best = (usize::MAX, Bits::EMPTY);
        for v in free.iter() {
            let options = self.closed[v].and(choosable);
            let c = options.count();
            if c < best.0 {
                best = (c, options);
                if c <= 1 {
                    break;
                }
            }
        }
        best.1
    }

    fn run(&mut self, chosen: Bits<W>, size: usize, free: Bits<W>, banned: Bits<W>) {
        if self.done() {
            return;
        }
        let bound = self.best.load(Ordering::Relaxed);
        if free.is_empty() {
            match &mut self.goal {
                Goal::Minimum => {
                    if size < bound {
                        self.best.fetch_min(size, Ordering::Relaxed);
                        self.found = Some(chosen);
                    }
                }
                Goal::Feasible => {
                    if size < bound {
                        self.found = Some(chosen);
                    }
                }
                Goal::All(sets) => {
                    if size + 1 == bound {
                        sets.push(chosen);
                    }
                }
            }
            return;
        }
        let choosable = free.and_not(banned);
        if size + self.remaining_bound(free, choosable) >= bound {
            return;
        }
        let options = self.branch_set(free, choosable);
        let mut banned = banned;
        for u in options.iter() {
            self.run(
                chosen.with(u),
                size + 1,
                free.and_not(self.closed[u]),
                banned,
            );
            banned = banned.with(u);
            if self.done() {
                return;
            }
        }
    }
}

struct Instance<const W: usize> {
    n: usize,
    closed: Vec<Bits<W>>,
}

impl<const W: usize> Instance<W> {
    fn new(g: &Graph) -> Self {
        Instance {
            n: g.n(),
            closed: g
                .vertices()
                .map(|v| Bits::from_set(&g.closed_neighborhood(v)))
                .collect(),
        }
    }

    fn all(&self) -> Bits<W> {
        (0..self.n).fold(Bits::EMPTY, |b, v| b.with(v))
    }

    /// Free vertices left after choosing `chosen`.
    fn free_after(&self, chosen: Bits<W>) -> Bits<W> {
        chosen
            .iter()
            .fold(self.all(), |f, u| f.and_not(self.closed[u]))
    }

    fn greedy_size(&self) -> usize {
        let mut free = self.all();
        let mut size = 0;
        while let Some(v) = free
            .iter()
            .min_by_key(|&v| (self.closed[v].and(free).count(), v))
        {
            free = free.and_not(self.closed[v]);
            size += 1;
        }
        size
    }

    fn minimum_size(&self, parallel: bool) -> usize {
        let best = AtomicUsize::new(self.greedy_size() + 1);
        let free = self.all();
        if !parallel || self.n < 16 {
            let mut s = self.search(&best, Goal::Minimum);
            s.run(Bits::EMPTY, 0, free, Bits::EMPTY);
            return best.load(Ordering::Relaxed).min(self.greedy_size());
        }
        // Reproduce the root branching, then hand each child to a worker.
        let root = self.search(&best, Goal::Minimum);
        let options: Vec<usize> = root.branch_set(free, free).iter().collect();
        options.par_iter().enumerate().for_each(|(i, &u)| {
            let banned = options[..i].iter().fold(Bits::EMPTY, |b, &w| b.with(w));
            let mut s = self.search(&best, Goal::Minimum);
            s.run(Bits::EMPTY.with(u), 1, free.and_not(self.closed[u]), banned);
        });
        best.load(Ordering::Relaxed).min(self.greedy_size())
    }

    fn search<'a>(&'a self, best: &'a AtomicUsize, goal: Goal<W>) -> Search<'a, W> {
        Search {
            closed: &self.closed,
            best,
            found: None,
            goal,
        }
    }

    /// Is there an ID-set of size at most `k` containing `forced` and
    /// avoiding `banned`?
    fn feasible(&self, forced: Bits<W>, banned: Bits<W>, k: usize) -> bool {
        let size = forced.count();
        if size > k {
            return false;
        }
        let best = AtomicUsize::new(k + 1);
        let mut s = self.search(&best, Goal::Feasible);
        s.run(forced, size, self.free_after(forced), banned);
        s.found.is_some()
    }

    /// Lexicographically smallest ID-set of size `k` (assumed optimal).
    fn lex_smallest(&self, k: usize) -> Bits<W> {
        let mut chosen = Bits::EMPTY;
        let mut banned = Bits::EMPTY;
        for v in 0..self.n {
            if !self.free_after(chosen).contains(v) {
                continue;
            }
            if self.feasible(chosen.with(v), banned, k) {
                chosen = chosen.with(v);
            } else {
                banned = banned.with(v);
            }
        }
        chosen
    }

    fn all_of_size(&self, k: usize) -> Vec<Bits<W>> {
        let best = AtomicUsize::new(k + 1);
        let mut s = self.search(&best, Goal::All(Vec::new()));
        s.run(Bits::EMPTY, 0, self.all(), Bits::EMPTY);
        match s.goal {
            Goal::All(sets) => sets,
            _ => unreachable!(),
        }
    }
}

macro_rules! dispatch {
    ($g:expr, $inst:ident => $body:expr) => {{
        let n = $g.n();
        if n > MAX_ORDER {
            Err(Error::Capacity {
                what: "graph order for the exact solver",
                got: n,
                limit: MAX_ORDER,
            })
        } else if n <= 64 {
            let $inst = Instance::<1>::new($g);
            Ok($body)
        } else if n <= 128 {
            let $inst = Instance::<2>::new($g);
            Ok($body)
        } else if n <= 256 {
            let $inst = Instance::<4>::new($g);
            Ok($body)
        } else if n <= 512 {
            let $inst = Instance::<8>::new($g);
            Ok($body)
        } else {
            let $inst = Instance::<16>::new($g);
            Ok($body)
        }
    }};
}

/// Minimum ID-set, lexicographically smallest among the minimum ones.
/// Isolated vertices are forced into the set.
pub fn min_id_set(g: &Graph) -> Result<IdCertificate> {
    min_id_set_with(g, &SolverOptions::default())
}

pub fn min_id_set_with(g: &Graph, opts: &SolverOptions) -> Result<IdCertificate> {
    dispatch!(g, inst => {
        let k = inst.minimum_size(opts.parallel);
        let set = inst.lex_smallest(k).to_set(g.n());
        debug_assert_eq!(set.len(), k);
        IdCertificate::new(set, Provenance::Exact)
    })
}

/// Just `i(G)`, skipping the lexicographic tie-break pass.
pub fn id_number(g: &Graph) -> Result<usize> {
    dispatch!(g, inst => inst.minimum_size(false))
}

/// Every ID-set of minimum size, in increasing lexicographic order.
pub fn all_min_id_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let mut sets = dispatch!(g, inst => {
        let k = inst.minimum_size(false);
        inst.all_of_size(k)
            .into_iter()
            .map(|b| b.to_set(g.n()))
            .collect::<Vec<_>>()
    })?;
    sets.sort_by_key(VertexSet::to_vec);
    Ok(sets)
}

/// Backend for [`oracle_min_id_set`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OracleMode {
    /// Enumerate all maximal independent sets (Bron–Kerbosch on the
    /// complement graph).
    #[default]
    MaximalSets,
    /// Scan every subset in order of size.
    Subsets,
}

pub const ORACLE_MAX_ORDER: usize = 20;
pub const ORACLE_SUBSET_MAX_ORDER: usize = 16;

/// Exhaustive reference: a minimum ID-set, lexicographically smallest among
/// the minimum ones.
pub fn oracle_min_id_set(g: &Graph) -> Result<IdCertificate> {
    oracle_min_id_set_with(g, OracleMode::MaximalSets)
}

pub fn oracle_min_id_set_with(g: &Graph, mode: OracleMode) -> Result<IdCertificate> {
    let limit = match mode {
        OracleMode::MaximalSets => ORACLE_MAX_ORDER,
        OracleMode::Subsets => ORACLE_SUBSET_MAX_ORDER,
    };
    if g.n() > limit {
        return Err(Error::Capacity {
            what: "graph order for the exhaustive oracle",
            got: g.n(),
            limit,
        });
    }
    let members = match mode {
        OracleMode::MaximalSets => oracle_maximal_sets(g),
        OracleMode::Subsets => oracle_subsets(g),
    };
    Ok(IdCertificate::new(
        VertexSet::from_vertices(g.n(), members),
        Provenance::Oracle,
    ))
}

fn mask_members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask & (1 << v) != 0).collect()
}

fn oracle_maximal_sets(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let all: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let non_adj: Vec<u32> = g
        .vertices()
        .map(|v| {
            let adj = g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w));
            all & !adj & !(1 << v)
        })
        .collect();
    let mut best: Option<Vec<usize>> = None;

    // Maximal cliques of the complement are the maximal independent sets.
    fn bron_kerbosch(non_adj: &[u32], r: u32, mut p: u32, mut x: u32, report: &mut dyn FnMut(u32)) {
        if p == 0 && x == 0 {
            report(r);
            return;
        }
        let pivot_pool = p | x;
        let pivot = (0..32)
            .filter(|&u| pivot_pool & (1 << u) != 0)
            .max_by_key(|&u| (p & non_adj[u]).count_ones())
            .expect("p or x is nonempty");
        let mut candidates = p & !non_adj[pivot];
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            bron_kerbosch(
                non_adj,
                r | (1 << v),
                p & non_adj[v],
                x & non_adj[v],
                report,
            );
            p &= !(1 << v);
            x |= 1 << v;
        }
    }

    let mut report = |r: u32| {
        let members = mask_members(r);
        let better = match best.as_ref() {
            None => true,
            Some(cur) => (members.len(), &members) < (cur.len(), cur),
        };
        if better {
            best = Some(members);
        }
    };
    bron_kerbosch(&non_adj, 0, all, 0, &mut report);
    best.unwrap_or_default()
}

fn oracle_subsets(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let is_id = |members: &[usize]| {
        let inside = |v: usize| members.contains(&v);
        let independent = members
            .iter()
            .all(|&a| members.iter().all(|&b| !g.has_edge(a, b)));
        let dominating = (0..n).all(|v| inside(v) || g.neighbors(v).iter().any(|&w| inside(w)));
        independent && dominating
    };
    for size in 0..=n {
        // Combinations of `size` vertices in lexicographic order.
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            if is_id(&idx) {
                return idx;
            }
            let Some(pos) = (0..size).rev().find(|&i| idx[i] < n - size + i) else {
                break;
            };
            idx[pos] += 1;
            for j in pos + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    unreachable!("the whole vertex set minus edges always contains an ID-set")
}

/// `|S ∩ V(copy_i)|` for every gadget copy of a labeled family member, in
/// copy order. Copies are identified by the `copy<i>:` label prefix.
pub fn per_copy_intersection(
    g: &crate::generators::LabeledGraph,
    cert: &IdCertificate,
) -> Result<Vec<usize>> {
    let copies = g.copy_index()?;
    let k = copies.iter().max().map_or(0, |&c| c + 1);
    let mut counts = vec![0; k];
    for v in cert.set.iter() {
        counts[copies[v]] += 1;
    }
    Ok(counts)
}
