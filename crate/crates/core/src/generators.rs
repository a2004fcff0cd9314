//! Named graphs and graph families.
//!
//! Every generator returns a [`LabeledGraph`] whose labels name each
//! vertex's role in the construction, so tests and audits can address
//! specific vertices (`"copy3:X:c-pair1"`, `"support2"`, `"leaf2"`, ...).
//!
//! Gadget layout (both gadgets contain `K_{2,3}` on `a1,a2 | b1,b2,b3`,
//! with `b_j` adjacent to `c_j`):
//!
//! * X: `c1 c2` adjacent. `c1`, `c2` are the degree-2 pair ports
//!   (`c-pair1`, `c-pair2`) and `c3` is the degree-1 leaf port (`c-leaf`).
//! * Y: path `c1 c2 c3`. `c1` and `c3` are the degree-2 ports (`c-port1`,
//!   `c-port2`) and `c2` is `c-mid`.
//!
//! In an F_cubic member, paired X copies join `c-pair1` to `c-pair1` and
//! `c-pair2` to `c-pair2`. Around the base cycle, copy `i` joins copy
//! `i+1` by one edge from its out-port (X: `c-leaf`, Y: `c-port2`) to the
//! next copy's in-port (X: `c-leaf`, Y: `c-port1`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }
}

/// Declarative description of one construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path {
        k: usize,
    },
    Cycle {
        k: usize,
    },
    CompleteBipartite {
        r: usize,
        s: usize,
    },
    CoronaPath {
        k: usize,
    },
    CoronaCycle {
        k: usize,
    },
    DoubleStar {
        r: usize,
        s: usize,
    },
    Sporadic {
        id: u8,
    },
    Prism5,
    K4MinusEdge,
    GadgetX,
    GadgetY,
    GCubic {
        k: usize,
    },
    HCubic {
        l: usize,
    },
    /// Colored base cycle plus a perfect matching on the red positions
    /// (0-based cycle positions).
    FCubic {
        coloring: Vec<Color>,
        pairing: Vec<(usize, usize)>,
    },
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "PATH",
            FamilySpec::Cycle { .. } => "CYCLE",
            FamilySpec::CompleteBipartite { .. } => "COMPLETE_BIPARTITE",
            FamilySpec::CoronaPath { .. } => "CORONA_PATH",
            FamilySpec::CoronaCycle { .. } => "CORONA_CYCLE",
            FamilySpec::DoubleStar { .. } => "DOUBLE_STAR",
            FamilySpec::Sporadic { .. } => "SPORADIC",
            FamilySpec::Prism5 => "PRISM5",
            FamilySpec::K4MinusEdge => "K4_MINUS_E",
            FamilySpec::GadgetX => "GADGET_X",
            FamilySpec::GadgetY => "GADGET_Y",
            FamilySpec::GCubic { .. } => "G_CUBIC",
            FamilySpec::HCubic { .. } => "H_CUBIC",
            FamilySpec::FCubic { .. } => "F_CUBIC",
        }
    }

    /// F_cubic spec with reds paired in cycle order (1st with 2nd, ...).
    pub fn fcubic(word: &str) -> Result<FamilySpec> {
        let coloring = parse_coloring(word)?;
        let reds: Vec<usize> = red_positions(&coloring);
        let pairing = reds.chunks(2).map(|c| (c[0], *c.last().unwrap())).collect();
        let spec = FamilySpec::FCubic { coloring, pairing };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Spec(m));
        match self {
            FamilySpec::Path { k } | FamilySpec::CoronaPath { k } if *k < 1 => {
                bad(format!("{}: k must be at least 1", self.tag()))
            }
            FamilySpec::Cycle { k } | FamilySpec::CoronaCycle { k } if *k < 3 => {
                bad(format!("{}: k must be at least 3", self.tag()))
            }
            FamilySpec::CompleteBipartite { r, s } | FamilySpec::DoubleStar { r, s }
                if *r < 1 || *s < 1 =>
            {
                bad(format!("{}: r and s must be at least 1", self.tag()))
            }
            FamilySpec::Sporadic { id } if !(1..=5).contains(id) => {
                bad(format!("SPORADIC: id {id} not in 1..=5"))
            }
            FamilySpec::GCubic { k } if *k < 1 => bad("G_CUBIC: k must be at least 1".into()),
            FamilySpec::HCubic { l } if *l < 1 => bad("H_CUBIC: l must be at least 1".into()),
            FamilySpec::FCubic { coloring, pairing } => validate_fcubic(coloring, pairing),
            _ => Ok(()),
        }
    }
}

fn red_positions(coloring: &[Color]) -> Vec<usize> {
    (0..coloring.len())
        .filter(|&i| coloring[i] == Color::Red)
        .collect()
}

fn validate_fcubic(coloring: &[Color], pairing: &[(usize, usize)]) -> Result<()> {
    let k = coloring.len();
    let bad = |m: String| Err(Error::Spec(format!("F_CUBIC: {m}")));
    if k < 2 {
        return bad(format!("base cycle needs k >= 2, got {k}"));
    }
    let reds = red_positions(coloring);
    if !reds.len().is_multiple_of(2) {
        return bad(format!(
            "{} red positions; the count must be even",
            reds.len()
        ));
    }
    if k == 2 && !reds.is_empty() {
        return bad(
            "k = 2 requires coloring BB (two red copies would need a parallel edge)".into(),
        );
    }
    let mut covered = BTreeSet::new();
    for &(p, q) in pairing {
        for x in [p, q] {
            if x >= k || coloring[x] != Color::Red {
                return bad(format!(
                    "pair ({p}-{q}) uses position {x}, which is not red"
                ));
            }
            if !covered.insert(x) {
                return bad(format!("position {x} is paired more than once"));
            }
        }
        if p == q {
            return bad(format!("pair ({p}-{q}) pairs a position with itself"));
        }
    }
    if covered.len() != reds.len() {
        let missing: Vec<_> = reds.iter().filter(|r| !covered.contains(r)).collect();
        return bad(format!("red positions {missing:?} are unpaired"));
    }
    Ok(())
}

fn parse_coloring(word: &str) -> Result<Vec<Color>> {
    word.chars()
        .map(|c| match c.to_ascii_uppercase() {
            'R' => Ok(Color::Red),
            'B' => Ok(Color::Blue),
            _ => Err(Error::parse(
                word,
                format!("color letter {c:?} is not R or B"),
            )),
        })
        .collect()
}

fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>> {
    let mut pairs = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| Error::parse(text, "pairs are written (i-j)(k-l)..."))?;
        let (body, tail) = inner;
        let (a, b) = body
            .split_once('-')
            .ok_or_else(|| Error::parse(body, "a pair is written i-j"))?;
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::parse(t, "expected a cycle position"))
        };
        pairs.push((num(a)?, num(b)?));
        rest = tail.trim();
    }
    Ok(pairs)
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Spec strings such as `fcubic:k=4,color=RBRB,pair=(0-2)`,
    /// `gcubic:k=2`, `hcubic:l=3`, `cor-path:k=5`, `sporadic:3`.
    fn from_str(s: &str) -> Result<FamilySpec> {
        let s = s.trim();
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let mut params: BTreeMap<String, String> = BTreeMap::new();
        let mut bare = Vec::new();
        for part in args.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part.split_once('=') {
                Some((k, v)) => {
                    params.insert(k.trim().to_ascii_lowercase(), v.trim().to_string());
                }
                None => bare.push(part.to_string()),
            }
        }
        let int = |key: &str| -> Result<usize> {
            let raw = params
                .get(key)
                .or(if key == "k" || key == "l" || key == "id" {
                    bare.first()
                } else {
                    None
                })
                .ok_or_else(|| Error::parse(s, format!("missing parameter {key}")))?;
            raw.parse()
                .map_err(|_| Error::parse(raw.as_str(), format!("{key} must be an integer")))
        };
        let spec = match name.to_ascii_lowercase().as_str() {
            "path" => FamilySpec::Path { k: int("k")? },
            "cycle" => FamilySpec::Cycle { k: int("k")? },
            "kbip" | "complete-bipartite" => FamilySpec::CompleteBipartite {
                r: int("r")?,
                s: int("s")?,
            },
            "cor-path" => FamilySpec::CoronaPath { k: int("k")? },
            "cor-cycle" => FamilySpec::CoronaCycle { k: int("k")? },
            "double-star" => FamilySpec::DoubleStar {
                r: int("r")?,
                s: int("s")?,
            },
            "sporadic" => {
                let id = int("id")?;
                FamilySpec::Sporadic {
                    id: u8::try_from(id).unwrap_or(u8::MAX),
                }
            }
            "prism5" => FamilySpec::Prism5,
            "k4-e" => FamilySpec::K4MinusEdge,
            "gadget-x" => FamilySpec::GadgetX,
            "gadget-y" => FamilySpec::GadgetY,
            "gcubic" => FamilySpec::GCubic { k: int("k")? },
            "hcubic" => FamilySpec::HCubic { l: int("l")? },
            "fcubic" => {
                let word = params
                    .get("color")
                    .ok_or_else(|| Error::parse(s, "missing parameter color"))?;
                let coloring = parse_coloring(word)?;
                if params.contains_key("k") && int("k")? != coloring.len() {
                    return Err(Error::parse(
                        word.as_str(),
                        format!(
                            "coloring has length {}, k says {}",
                            coloring.len(),
                            int("k")?
                        ),
                    ));
                }
                match params.get("pair") {
                    Some(p) => FamilySpec::FCubic {
                        coloring,
                        pairing: parse_pairs(p)?,
                    },
                    None => return FamilySpec::fcubic(word),
                }
            }
            other => return Err(Error::parse(other, "unknown family")),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path { k } => write!(f, "path:k={k}"),
            FamilySpec::Cycle { k } => write!(f, "cycle:k={k}"),
            FamilySpec::CompleteBipartite { r, s } => write!(f, "kbip:r={r},s={s}"),
            FamilySpec::CoronaPath { k } => write!(f, "cor-path:k={k}"),
            FamilySpec::CoronaCycle { k } => write!(f, "cor-cycle:k={k}"),
            FamilySpec::DoubleStar { r, s } => write!(f, "double-star:r={r},s={s}"),
            FamilySpec::Sporadic { id } => write!(f, "sporadic:{id}"),
            FamilySpec::Prism5 => write!(f, "prism5"),
            FamilySpec::K4MinusEdge => write!(f, "k4-e"),
            FamilySpec::GadgetX => write!(f, "gadget-x"),
            FamilySpec::GadgetY => write!(f, "gadget-y"),
            FamilySpec::GCubic { k } => write!(f, "gcubic:k={k}"),
            FamilySpec::HCubic { l } => write!(f, "hcubic:l={l}"),
            FamilySpec::FCubic { coloring, pairing } => {
                let word: String = coloring.iter().map(|c| c.letter()).collect();
                write!(f, "fcubic:k={},color={word}", coloring.len())?;
                if !pairing.is_empty() {
                    write!(f, ",pair=")?;
                    for (p, q) in pairing {
                        write!(f, "({p}-{q})")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// A generated graph with one role label per vertex.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
    pub spec: FamilySpec,
}

impl LabeledGraph {
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Copy index of every vertex, read from `copy<i>:` label prefixes.
    pub fn copy_index(&self) -> Result<Vec<usize>> {
        self.labels
            .iter()
            .map(|l| {
                parse_copy_label(l)
                    .map(|(i, _, _)| i)
                    .ok_or_else(|| Error::Usage(format!("vertex label {l:?} names no gadget copy")))
            })
            .collect()
    }
}

/// `copy<i>:<X|Y>:<name>` → `(i, kind, name)`.
fn parse_copy_label(label: &str) -> Option<(usize, char, &str)> {
    let rest = label.strip_prefix("copy")?;
    let (idx, rest) = rest.split_once(':')?;
    let (kind, name) = rest.split_once(':')?;
    let kind = match kind {
        "X" => 'X',
        "Y" => 'Y',
        _ => return None,
    };
    Some((idx.parse().ok()?, kind, name))
}

/// Incremental builder: named vertices and an edge list.
struct Builder {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            labels: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn vertex(&mut self, label: impl Into<String>) -> usize {
        self.labels.push(label.into());
        self.labels.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn cycle(&mut self, vs: &[usize]) {
        for i in 0..vs.len() {
            self.edge(vs[i], vs[(i + 1) % vs.len()]);
        }
    }

    fn finish(self, spec: FamilySpec) -> Result<LabeledGraph> {
        let mut seen = BTreeSet::new();
        for &(u, v) in &self.edges {
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Spec(format!(
                    "{}: construction would join {} and {} twice",
                    spec.tag(),
                    self.labels[u],
                    self.labels[v]
                )));
            }
        }
        Ok(LabeledGraph {
            graph: Graph::from_edge_list(self.labels.len(), &self.edges)?,
            labels: self.labels,
            spec,
        })
    }
}

const GADGET_NAMES_X: [&str; 8] = ["a1", "a2", "b1", "b2", "b3", "c-pair1", "c-pair2", "c-leaf"];
const GADGET_NAMES_Y: [&str; 8] = ["a1", "a2", "b1", "b2", "b3", "c-port1", "c-mid", "c-port2"];

/// Add one gadget; returns its eight vertices in `a1 a2 b1 b2 b3 c1 c2 c3`
/// order.
fn add_gadget(b: &mut Builder, prefix: &str, kind: char) -> [usize; 8] {
    let names = if kind == 'X' {
        GADGET_NAMES_X
    } else {
        GADGET_NAMES_Y
    };
    let vs = names.map(|name| b.vertex(format!("{prefix}{name}")));
    for a in &vs[0..2] {
        for bj in &vs[2..5] {
            b.edge(*a, *bj);
        }
    }
    for j in 0..3 {
        b.edge(vs[2 + j], vs[5 + j]);
    }
    b.edge(vs[5], vs[6]);
    if kind == 'Y' {
        b.edge(vs[6], vs[7]);
    }
    vs
}

/// Build the graph described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<LabeledGraph> {
    spec.validate()?;
    let mut b = Builder::new();
    match spec {
        FamilySpec::Path { k } => {
            let vs: Vec<_> = (0..*k).map(|i| b.vertex(format!("v{i}"))).collect();
            for w in vs.windows(2) {
                b.edge(w[0], w[1]);
            }
        }
        FamilySpec::Cycle { k } => {
            let vs: Vec<_> = (0..*k).map(|i| b.vertex(format!("v{i}"))).collect();
            b.cycle(&vs);
        }
        FamilySpec::CompleteBipartite { r, s } => {
            let left: Vec<_> = (0..*r).map(|i| b.vertex(format!("left{i}"))).collect();
            let right: Vec<_> = (0..*s).map(|i| b.vertex(format!("right{i}"))).collect();
            for &u in &left {
                for &v in &right {
                    b.edge(u, v);
                }
            }
        }
        FamilySpec::CoronaPath { k } | FamilySpec::CoronaCycle { k } => {
            let base: Vec<_> = (0..*k).map(|i| b.vertex(format!("support{i}"))).collect();
            for (i, &u) in base.iter().enumerate() {
                let leaf = b.vertex(format!("leaf{i}"));
                b.edge(u, leaf);
            }
            if matches!(spec, FamilySpec::CoronaCycle { .. }) {
                b.cycle(&base);
            } else {
                for w in base.windows(2) {
                    b.edge(w[0], w[1]);
                }
            }
        }
        FamilySpec::DoubleStar { r, s } => {
            let c0 = b.vertex("center0");
            let c1 = b.vertex("center1");
            b.edge(c0, c1);
            for i in 0..*r {
                let l = b.vertex(format!("leaf0-{i}"));
                b.edge(c0, l);
            }
            for i in 0..*s {
                let l = b.vertex(format!("leaf1-{i}"));
                b.edge(c1, l);
            }
        }
        FamilySpec::Sporadic { id } => return sporadic(*id),
        FamilySpec::Prism5 => {
            let outer: Vec<_> = (0..5).map(|i| b.vertex(format!("x{i}"))).collect();
            let inner: Vec<_> = (0..5).map(|i| b.vertex(format!("y{i}"))).collect();
            b.cycle(&outer);
            b.cycle(&inner);
            for i in 0..5 {
                b.edge(outer[i], inner[i]);
            }
        }
        FamilySpec::K4MinusEdge => {
            let vs: Vec<_> = (0..4).map(|i| b.vertex(format!("v{i}"))).collect();
            for (u, v) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)] {
                b.edge(vs[u], vs[v]);
            }
        }
        FamilySpec::GadgetX => {
            add_gadget(&mut b, "", 'X');
        }
        FamilySpec::GadgetY => {
            add_gadget(&mut b, "", 'Y');
        }
        FamilySpec::GCubic { k } => build_gcubic(&mut b, *k),
        FamilySpec::HCubic { l } => build_hcubic(&mut b, *l),
        FamilySpec::FCubic { coloring, pairing } => build_fcubic(&mut b, coloring, pairing),
    }
    b.finish(spec.clone())
}

fn build_gcubic(b: &mut Builder, k: usize) {
    // Outer cycle a1 b1 c1 d1 ... ak bk ck dk, inner w1 x1 y1 z1 ...
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    for i in 1..=k {
        for name in ["a", "b", "c", "d"] {
            outer.push(b.vertex(format!("{name}{i}")));
        }
    }
    for i in 1..=k {
        for name in ["w", "x", "y", "z"] {
            inner.push(b.vertex(format!("{name}{i}")));
        }
    }
    b.cycle(&outer);
    b.cycle(&inner);
    for i in 0..k {
        let o = &outer[4 * i..4 * i + 4];
        let n = &inner[4 * i..4 * i + 4];
        // a-w, b-x, c-z, d-y
        b.edge(o[0], n[0]);
        b.edge(o[1], n[1]);
        b.edge(o[2], n[3]);
        b.edge(o[3], n[2]);
    }
}

fn build_hcubic(b: &mut Builder, l: usize) {
    let mut cycle = Vec::new();
    for i in 1..=l {
        for name in ["a", "b", "c"] {
            cycle.push(b.vertex(format!("{name}{i}")));
        }
    }
    b.cycle(&cycle);
    for i in 0..l {
        let w = b.vertex(format!("w{}", i + 1));
        let x = b.vertex(format!("x{}", i + 1));
        let y = b.vertex(format!("y{}", i + 1));
        b.edge(cycle[3 * i], w);
        b.edge(cycle[3 * i + 1], x);
        b.edge(cycle[3 * i + 2], y);
        for j in 1..=2 {
            let z = b.vertex(format!("z{j}-{}", i + 1));
            for t in [w, x, y] {
                b.edge(z, t);
            }
        }
    }
}

fn build_fcubic(b: &mut Builder, coloring: &[Color], pairing: &[(usize, usize)]) {
    let k = coloring.len();
    let copies: Vec<[usize; 8]> = coloring
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let kind = if *c == Color::Red { 'X' } else { 'Y' };
            add_gadget(b, &format!("copy{i}:{kind}:"), kind)
        })
        .collect();
    for &(p, q) in pairing {
        b.edge(copies[p][5], copies[q][5]);
        b.edge(copies[p][6], copies[q][6]);
    }
    // X: the leaf serves both directions. Y: c1 in, c3 out.
    let out_port = |i: usize| copies[i][7];
    let in_port = |i: usize| match coloring[i] {
        Color::Red => copies[i][7],
        Color::Blue => copies[i][5],
    };
    for i in 0..k {
        let j = (i + 1) % k;
        b.edge(out_port(i), in_port(j));
    }
}

/// Human-readable name of a sporadic extremal graph.
pub fn sporadic_name(id: u8) -> &'static str {
    match id {
        1 => "K_{2,2}",
        2 => "K_{3,3}",
        3 => "K_{2,3}+pendant",
        4 => "S(2,2)",
        5 => "P_6+a2a5",
        _ => "?",
    }
}

/// The five sporadic graphs of order 4 and 6 with `i = n/2`.
pub fn sporadic(id: u8) -> Result<LabeledGraph> {
    let spec = FamilySpec::Sporadic { id };
    spec.validate()?;
    let mut b = Builder::new();
    match id {
        1 => {
            let vs: Vec<_> = (1..=4).map(|i| b.vertex(format!("a{i}"))).collect();
            b.cycle(&vs);
        }
        2 => {
            let left: Vec<_> = (1..=3).map(|i| b.vertex(format!("x{i}"))).collect();
            let right: Vec<_> = (1..=3).map(|i| b.vertex(format!("y{i}"))).collect();
            for &u in &left {
                for &v in &right {
                    b.edge(u, v);
                }
            }
        }
        3..=5 => {
            let vs: Vec<_> = (1..=6).map(|i| b.vertex(format!("a{i}"))).collect();
            let edges: &[(usize, usize)] = match id {
                // K_{2,3} on {a2,a4} | {a1,a3,a5}, pendant a6 on a5.
                3 => &[(2, 1), (2, 3), (2, 5), (4, 1), (4, 3), (4, 5), (5, 6)],
                // Double star S(2,2) with centers a3, a4.
                4 => &[(3, 1), (3, 2), (3, 4), (4, 5), (4, 6)],
                // Path a1..a6 plus the chord a2a5.
                _ => &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 5)],
            };
            for &(u, v) in edges {
                b.edge(vs[u - 1], vs[v - 1]);
            }
        }
        _ => unreachable!("validated above"),
    }
    b.finish(spec)
}

/// Wiring discovered by [`fcubic_connection_audit`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub copies: usize,
    /// Gadget kind per copy, in cycle order.
    pub kinds: Vec<char>,
    /// Partner pairs among the X copies, each as `(smaller, larger)`.
    pub pairing: Vec<(usize, usize)>,
    /// The chain edge from copy `i` to copy `i+1`, as labels.
    pub chain: Vec<(String, String)>,
}

/// Check an F_cubic member's wiring against its labels.
///
/// Verifies each gadget's internal edges, that X pair ports go to the pair
/// ports of a single partner X copy, that consecutive copies are joined by
/// exactly the expected chain edge, that no other cross-copy edges exist,
/// and that the whole graph is connected and cubic.
pub fn fcubic_connection_audit(g: &LabeledGraph) -> Result<AuditReport> {
    let graph = &g.graph;
    let fail = |copy: usize, detail: String| Err(Error::Audit { copy, detail });

    let mut members: BTreeMap<usize, (char, BTreeMap<String, usize>)> = BTreeMap::new();
    for (v, label) in g.labels.iter().enumerate() {
        let (i, kind, name) = parse_copy_label(label)
            .ok_or_else(|| Error::Usage(format!("label {label:?} is not a gadget copy label")))?;
        let entry = members.entry(i).or_insert((kind, BTreeMap::new()));
        if entry.0 != kind {
            return fail(i, format!("mixes X and Y labels ({label})"));
        }
        entry.1.insert(name.to_string(), v);
    }
    let k = members.len();
    if k < 2 || members.keys().copied().ne(0..k) {
        return Err(Error::Usage(format!(
            "copy indices must be 0..k with k >= 2, found {:?}",
            members.keys().collect::<Vec<_>>()
        )));
    }

    let mut copy_of = vec![usize::MAX; graph.n()];
    let mut slots: Vec<[usize; 8]> = Vec::with_capacity(k);
    let mut kinds = Vec::with_capacity(k);
    for (&i, (kind, names)) in &members {
        let expected = if *kind == 'X' {
            GADGET_NAMES_X
        } else {
            GADGET_NAMES_Y
        };
        if names.len() != 8 {
            return fail(i, format!("has {} vertices, expected 8", names.len()));
        }
        let mut slot = [0; 8];
        for (s, name) in expected.iter().enumerate() {
            slot[s] = *names.get(*name).ok_or_else(|| Error::Audit {
                copy: i,
                detail: format!("missing vertex {name}"),
            })?;
            copy_of[slot[s]] = i;
        }
        slots.push(slot);
        kinds.push(*kind);
    }

    // Internal edges must be exactly the gadget's.
    let mut reference = Builder::new();
    for &kind in &kinds {
        add_gadget(&mut reference, "", kind);
    }
    let reference_edges: BTreeSet<(usize, usize)> = reference
        .edges
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    for (i, slot) in slots.iter().enumerate() {
        for a in 0..8 {
            for c in a + 1..8 {
                let want = reference_edges.contains(&(8 * i + a, 8 * i + c));
                if graph.has_edge(slot[a], slot[c]) != want {
                    return fail(
                        i,
                        format!(
                            "internal edge {}-{} is {}",
                            g.labels[slot[a]],
                            g.labels[slot[c]],
                            if want { "missing" } else { "unexpected" }
                        ),
                    );
                }
            }
        }
    }

    let outside = |v: usize| -> Vec<usize> {
        graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| copy_of[w] != copy_of[v])
            .collect()
    };
    let mut expected_cross: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut add_cross = |u: usize, v: usize| expected_cross.insert((u.min(v), u.max(v)));

    // Pairing: c-pair1 -> partner c-pair1, c-pair2 -> the same partner's c-pair2.
    let mut partner = vec![None; k];
    for i in 0..k {
        if kinds[i] != 'X' {
            continue;
        }
        let mut found = None;
        for (port, name) in [(5, "c-pair1"), (6, "c-pair2")] {
            let out = outside(slots[i][port]);
            let target = out
                .iter()
                .copied()
                .find(|&w| kinds[copy_of[w]] == 'X' && slots[copy_of[w]][port] == w);
            let Some(w) = target else {
                return fail(
                    i,
                    format!("{name} is not joined to the {name} of another X copy"),
                );
            };
            match found {
                None => found = Some(copy_of[w]),
                Some(p) if p != copy_of[w] => {
                    return fail(
                        i,
                        format!("pair ports go to different copies {p} and {}", copy_of[w]),
                    )
                }
                _ => {}
            }
            add_cross(slots[i][port], w);
        }
        partner[i] = found;
    }
    for i in 0..k {
        if let Some(p) = partner[i] {
            if partner[p] != Some(i) {
                return fail(i, format!("partner {p} does not pair back"));
            }
        }
    }
    let pairing: Vec<(usize, usize)> = (0..k)
        .filter_map(|i| partner[i].filter(|&p| p > i).map(|p| (i, p)))
        .collect();

    // Chain: out-port of copy i to in-port of copy i+1.
    let out_port = |i: usize| slots[i][7];
    let in_port = |i: usize| {
        if kinds[i] == 'X' {
            slots[i][7]
        } else {
            slots[i][5]
        }
    };
    let mut chain = Vec::with_capacity(k);
    for i in 0..k {
        let j = (i + 1) % k;
        let (u, v) = (out_port(i), in_port(j));
        if !graph.has_edge(u, v) {
            return fail(
                i,
                format!(
                    "chain edge {}-{} to copy {j} is missing",
                    g.labels[u], g.labels[v]
                ),
            );
        }
        if !add_cross(u, v) {
            return fail(
                i,
                format!("chain edge to copy {j} coincides with another link"),
            );
        }
        chain.push((g.labels[u].clone(), g.labels[v].clone()));
    }

    for (u, v) in graph.edges() {
        if copy_of[u] != copy_of[v] && !expected_cross.contains(&(u, v)) {
            return fail(
                copy_of[u],
                format!(
                    "unexpected edge {}-{} between copies",
                    g.labels[u], g.labels[v]
                ),
            );
        }
    }
    if let Some(v) = graph.vertices().find(|&v| graph.degree(v) != 3) {
        return fail(
            copy_of[v],
            format!("{} has degree {}", g.labels[v], graph.degree(v)),
        );
    }
    if !graph.is_connected() {
        return fail(0, "graph is disconnected".into());
    }
    Ok(AuditReport {
        copies: k,
        kinds,
        pairing,
        chain,
    })
}

/// Every F_cubic spec on a base cycle of length `k`: all colorings with an
/// even number of reds and every perfect matching of the red positions.
pub fn fcubic_specs(k: usize) -> Vec<FamilySpec> {
    if k < 2 {
        return Vec::new();
    }
    if k == 2 {
        return vec![FamilySpec::FCubic {
            coloring: vec![Color::Blue; 2],
            pairing: Vec::new(),
        }];
    }
    let mut specs = Vec::new();
    for mask in 0u32..(1 << k) {
        if mask.count_ones() % 2 != 0 {
            continue;
        }
        let coloring: Vec<Color> = (0..k)
            .map(|i| {
                if mask & (1 << i) != 0 {
                    Color::Red
                } else {
                    Color::Blue
                }
            })
            .collect();
        for pairing in perfect_matchings(&red_positions(&coloring)) {
            specs.push(FamilySpec::FCubic {
                coloring: coloring.clone(),
                pairing,
            });
        }
    }
    specs
}

fn perfect_matchings(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for (idx, &other) in rest.iter().enumerate() {
        let remaining: Vec<usize> = rest
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != idx)
            .map(|(_, &v)| v)
            .collect();
        for mut m in perfect_matchings(&remaining) {
            m.insert(0, (first, other));
            out.push(m);
        }
    }
    out
}
