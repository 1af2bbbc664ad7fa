//! Three-page presentations of links.
//!
//! A three-page presentation places a link in three half-planes (pages)
//! around a common axis, each page holding pairwise disjoint arcs whose
//! endpoints lie on the axis. This crate models such presentations,
//! projects them to planar diagrams, identifies link types with Kauffman
//! bracket / Jones invariants, builds explicit presentations of torus
//! links and searches exhaustively for minimal presentations.

pub mod braid;
pub mod bracket;
pub mod diagram;
pub mod error;
pub mod format;
pub mod moves;
pub mod poly;
pub mod presentation;
pub mod profile;
pub mod search;
pub mod torus;

pub use braid::{torus_braid, torus_braid_small, BraidWord, Letter};
pub use diagram::{Orientation, PlanarDiagram};
pub use error::{Error, Result};
pub use poly::LaurentPoly;
pub use presentation::{
    validate, Arc, ComponentDecomposition, PageMatching, PagedArc, PresentationData, ThreePagePresentation,
    ValidationReport, Violation,
};
pub use profile::InvariantProfile;
