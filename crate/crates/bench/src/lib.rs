//! Shared inputs for the benchmarks.

use threepage::{torus_braid, PlanarDiagram, ThreePagePresentation};

/// Closure of the torus braid `(σ1…σ_{q-1})^p`.
pub fn torus_closure(p: u32, q: u32) -> PlanarDiagram {
    torus_braid(p, q).expect("valid torus parameters").closure()
}

/// The `T(n,n)` presentation projected to a diagram.
pub fn tnn_diagram(n: u32) -> PlanarDiagram {
    PlanarDiagram::project(&threepage::torus::tnn(n).expect("n >= 2"))
}

pub fn tpq(p: u32, q: u32) -> ThreePagePresentation {
    threepage::torus::tpq(p, q).expect("2 <= p <= q")
}
