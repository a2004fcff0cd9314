//! Recognition of the connected subcubic graphs with `i(G) = n/2`.
//!
//! The extremal graphs are the five sporadic graphs `G_1..G_5`, the
//! coronas of paths `cor(P_k)` and the coronas of cycles `cor(C_k)` with
//! `k >= 3`. [`classify`] computes `i` exactly and then names the shape;
//! an extremal graph that matches no shape is reported as
//! [`ExtremalClass::ExtremalUncharacterized`].

use std::fmt;
use std::sync::OnceLock;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::generators::{sporadic, sporadic_name};
use crate::graph::Graph;
use crate::solver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtremalClass {
    Sporadic(u8),
    CoronaPath(usize),
    CoronaCycle(usize),
    NotExtremal,
    /// `i = n/2` but no known shape: a counterexample to the
    /// characterization, or a bug.
    ExtremalUncharacterized,
}

impl ExtremalClass {
    pub fn is_shape(&self) -> bool {
        matches!(
            self,
            ExtremalClass::Sporadic(_)
                | ExtremalClass::CoronaPath(_)
                | ExtremalClass::CoronaCycle(_)
        )
    }

    /// The shape's parameter: sporadic id or corona base length.
    pub fn parameter(&self) -> Option<usize> {
        match *self {
            ExtremalClass::Sporadic(id) => Some(id as usize),
            ExtremalClass::CoronaPath(k) | ExtremalClass::CoronaCycle(k) => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for ExtremalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtremalClass::Sporadic(id) => write!(f, "SPORADIC({id}) {}", sporadic_name(*id)),
            ExtremalClass::CoronaPath(k) => write!(f, "CORONA_PATH({k}) k={k}"),
            ExtremalClass::CoronaCycle(k) => write!(f, "CORONA_CYCLE({k}) k={k}"),
            ExtremalClass::NotExtremal => write!(f, "NOT_EXTREMAL"),
            ExtremalClass::ExtremalUncharacterized => write!(f, "EXTREMAL_UNCHARACTERIZED"),
        }
    }
}

fn sporadic_forms() -> &'static [(u8, CanonicalForm)] {
    static FORMS: OnceLock<Vec<(u8, CanonicalForm)>> = OnceLock::new();
    FORMS.get_or_init(|| {
        (1..=5)
            .map(|id| {
                let g = sporadic(id).expect("ids 1..=5 exist").graph;
                (id, canonical_form(&g).expect("sporadic graphs are small"))
            })
            .collect()
    })
}

/// Corona check: every vertex is a leaf or carries exactly one leaf, and
/// the supports induce a path or a cycle.
fn corona_shape(g: &Graph) -> Option<ExtremalClass> {
    let n = g.n();
    if n == 2 && g.m() == 1 {
        return Some(ExtremalClass::CoronaPath(1));
    }
    if n < 4 || !n.is_multiple_of(2) {
        return None;
    }
    let is_leaf = |v: usize| g.degree(v) == 1;
    let mut supports = Vec::new();
    for v in g.vertices() {
        if is_leaf(v) {
            if is_leaf(g.neighbors(v)[0]) {
                return None;
            }
        } else {
            if g.neighbors(v).iter().filter(|&&w| is_leaf(w)).count() != 1 {
                return None;
            }
            supports.push(v);
        }
    }
    let k = supports.len();
    if 2 * k != n {
        return None;
    }
    let base = g.induced(&crate::graph::VertexSet::from_vertices(n, supports));
    let core = &base.graph;
    if !core.is_connected() {
        return None;
    }
    let max = core.degree_profile().max;
    if core.m() == k - 1 && max <= 2 {
        Some(ExtremalClass::CoronaPath(k))
    } else if k >= 3 && core.m() == k && core.vertices().all(|v| core.degree(v) == 2) {
        Some(ExtremalClass::CoronaCycle(k))
    } else {
        None
    }
}

/// Structural match against the extremal shapes, without computing `i`.
pub fn recognize_shape(g: &Graph) -> Result<Option<ExtremalClass>> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Usage(
            "graph is disconnected; classify each component separately".into(),
        ));
    }
    if g.n() == 4 || g.n() == 6 {
        let form = canonical_form(g)?;
        if let Some((id, _)) = sporadic_forms().iter().find(|(_, f)| *f == form) {
            return Ok(Some(ExtremalClass::Sporadic(*id)));
        }
    }
    Ok(corona_shape(g))
}

/// Classify a connected subcubic graph of order at least 2.
pub fn classify(g: &Graph) -> Result<ExtremalClass> {
    classify_with_i(g).map(|(class, _)| class)
}

/// Like [`classify`], also returning `i(G)`, or `None` when the parity
/// shortcut made solving unnecessary.
pub fn classify_with_i(g: &Graph) -> Result<(ExtremalClass, Option<usize>)> {
    if g.n() < 2 {
        return Err(Error::Usage(
            "classification needs at least 2 vertices".into(),
        ));
    }
    if !g.degree_profile().is_subcubic {
        return Err(Error::Precondition(format!(
            "maximum degree {} exceeds 3",
            g.degree_profile().max
        )));
    }
    let shape = recognize_shape(g)?;
    if g.n() % 2 == 1 {
        return Ok((ExtremalClass::NotExtremal, None));
    }
    let i = solver::id_number(g)?;
    let class = if 2 * i < g.n() {
        ExtremalClass::NotExtremal
    } else {
        shape.unwrap_or(ExtremalClass::ExtremalUncharacterized)
    };
    Ok((class, Some(i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::generate;

    fn gen(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap().graph
    }

    #[test]
    fn shapes() {
        assert_eq!(
            recognize_shape(&gen("cor-path:k=5")).unwrap(),
            Some(ExtremalClass::CoronaPath(5))
        );
        assert_eq!(
            recognize_shape(&gen("cor-cycle:k=6")).unwrap(),
            Some(ExtremalClass::CoronaCycle(6))
        );
        assert_eq!(
            recognize_shape(&gen("sporadic:3")).unwrap(),
            Some(ExtremalClass::Sporadic(3))
        );
        assert_eq!(recognize_shape(&gen("cycle:k=6")).unwrap(), None);
        assert_eq!(
            recognize_shape(&gen("path:k=4")).unwrap(),
            Some(ExtremalClass::CoronaPath(2))
        );
    }

    #[test]
    fn classifications() {
        assert_eq!(
            classify(&gen("kbip:r=3,s=3")).unwrap(),
            ExtremalClass::Sporadic(2)
        );
        assert_eq!(
            classify(&gen("path:k=2")).unwrap(),
            ExtremalClass::CoronaPath(1)
        );
        assert_eq!(
            classify(&gen("prism5")).unwrap(),
            ExtremalClass::NotExtremal
        );
        let (class, i) = classify_with_i(&gen("sporadic:5")).unwrap();
        assert_eq!((class, i), (ExtremalClass::Sporadic(5), Some(3)));
        assert_eq!(
            classify(&gen("cycle:k=7")).unwrap(),
            ExtremalClass::NotExtremal
        );
    }

    #[test]
    fn rejects_disconnected() {
        let g = gen("path:k=2").disjoint_union(&gen("path:k=2"));
        assert!(matches!(recognize_shape(&g), Err(Error::Usage(_))));
        assert!(matches!(classify(&g), Err(Error::Usage(_))));
    }

    #[test]
    fn corona_near_misses() {
        // A leaf hanging off a leaf-free cycle vertex breaks the pairing.
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)]).unwrap();
        assert_eq!(recognize_shape(&g).unwrap(), None);
        // Spider: supports induce a claw, not a path.
        let spider =
            Graph::from_edge_list(8, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 6), (3, 7)])
                .unwrap();
        assert_eq!(recognize_shape(&spider).unwrap(), None);
    }

    #[test]
    fn display() {
        assert_eq!(
            ExtremalClass::Sporadic(2).to_string(),
            "SPORADIC(2) K_{3,3}"
        );
        assert_eq!(
            ExtremalClass::CoronaPath(5).to_string(),
            "CORONA_PATH(5) k=5"
        );
    }
}
