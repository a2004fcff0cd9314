//! Independent domination in subcubic graphs: exact solving, the half-bound
//! construction, extremal-graph recognition, family generators and
//! exhaustive verification campaigns.

pub mod canon;
pub mod classifier;
pub mod enumerator;
pub mod error;
pub mod generators;
pub mod graph;
pub mod halver;
pub mod io;
pub mod random;
pub mod solver;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use classifier::{classify, ExtremalClass};
pub use enumerator::{enumerate_connected_cubic, enumerate_connected_subcubic};
pub use error::{Error, Result};
pub use generators::{generate, Color, FamilySpec, LabeledGraph};
pub use graph::{Graph, VertexSet};
pub use halver::{half_bound_id_set, HalverConfig};
pub use solver::{id_number, min_id_set, IdCertificate, Provenance};
