//! Dismantlability in three categories (reflexive graphs, finite posets and
//! finite simplicial complexes), the functors relating them, and the
//! Hom-complex machinery built on graph morphisms.
//!
//! Every reduction in this crate produces a [`Certificate`]: an ordered list
//! of `(deleted, witness)` steps that can be replayed against the starting
//! object by [`verify_certificate`](graph::verify_certificate) and its
//! poset / complex counterparts.
//!
//! ```
//! use dismantle::{graph, Graph};
//!
//! let p3 = Graph::named("P3").unwrap();
//! let cert = graph::dismantles_onto(&p3, &["0", "1"]).unwrap().unwrap();
//! assert_eq!(cert.steps.len(), 1);
//! assert!(graph::verify_certificate(&p3, &cert).unwrap());
//! ```

pub mod budget;
pub mod certificate;
pub mod cli;
pub mod demo;
mod cliques;
pub mod error;
pub mod functors;
pub mod graph;
pub mod hom;
pub mod hom_complex;
pub mod label;
pub mod poset;
pub mod simplicial;
pub mod text;

pub use budget::Budget;
pub use certificate::{Category, Certificate, Step};
pub use error::{Error, Result};
pub use graph::Graph;
pub use hom::Morphism;
pub use hom_complex::IndexingFunction;
pub use label::Label;
pub use poset::{Direction, Mode, MonotoneMap, Poset};
pub use simplicial::SimplicialComplex;
