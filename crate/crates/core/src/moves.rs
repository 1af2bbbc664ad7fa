//! Reidemeister moves on signed Gauss codes.
//!
//! Edges are addressed by global id (see [`PlanarDiagram::edge_offsets`]);
//! new crossings get the next free ids and removed ones are compacted away.

use crate::diagram::{Dart, Passage, PlanarDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// Adds a kink on `edge`, or on the free loop `component` when `edge`
    /// is `None`.
    R1Add { edge: Option<usize>, component: usize, sign: i8, over_first: bool },
    R1Remove { crossing: usize },
    /// Pushes the `over` dart's edge across the `under` dart's edge through
    /// the face both darts bound.
    R2Add { over: Dart, under: Dart },
    R2Remove { first: usize, second: usize },
    /// Slides a strand across the triangular face bounded by these edges.
    R3 { edges: [usize; 3] },
}

/// `(component, index)` of each global edge id.
fn edge_locations(d: &PlanarDiagram) -> Vec<(usize, usize)> {
    d.components().iter().enumerate().flat_map(|(c, seq)| (0..seq.len()).map(move |k| (c, k))).collect()
}

/// Passages at the tail and head of each edge.
fn edge_ends(d: &PlanarDiagram) -> Vec<(Passage, Passage)> {
    let mut out = Vec::new();
    for seq in d.components() {
        let m = seq.len();
        for k in 0..m {
            out.push((seq[k], seq[(k + 1) % m]));
        }
    }
    out
}

/// Crossing at which a dart arrives.
fn head(ends: &[(Passage, Passage)], dart: Dart) -> usize {
    let (t, h) = ends[dart.edge];
    if dart.forward {
        h.crossing
    } else {
        t.crossing
    }
}

fn r1_removable(d: &PlanarDiagram, x: usize) -> bool {
    d.components().iter().any(|seq| {
        let m = seq.len();
        (0..m).any(|k| seq[k].crossing == x && seq[(k + 1) % m].crossing == x && m >= 2)
    })
}

fn r2_pair(ends: &[(Passage, Passage)], face: &[Dart]) -> Option<(usize, usize)> {
    if face.len() != 2 || face[0].edge == face[1].edge {
        return None;
    }
    let (a0, a1) = ends[face[0].edge];
    let (b0, b1) = ends[face[1].edge];
    if a0.crossing == a1.crossing || a0.over != a1.over || b0.over != b1.over || a0.over == b0.over {
        return None;
    }
    let mut pa = [a0.crossing, a1.crossing];
    let mut pb = [b0.crossing, b1.crossing];
    pa.sort();
    pb.sort();
    (pa == pb).then_some((pa[0], pa[1]))
}

fn r3_edges(ends: &[(Passage, Passage)], face: &[Dart]) -> Option<[usize; 3]> {
    if face.len() != 3 {
        return None;
    }
    let mut edges = [face[0].edge, face[1].edge, face[2].edge];
    let mut xs = [head(ends, face[0]), head(ends, face[1]), head(ends, face[2])];
    xs.sort();
    edges.sort();
    if xs[0] == xs[1] || xs[1] == xs[2] || edges[0] == edges[1] || edges[1] == edges[2] {
        return None;
    }
    let non_alternating = edges.iter().any(|&e| ends[e].0.over == ends[e].1.over);
    non_alternating.then_some(edges)
}

/// Every move applicable to `d`, in a fixed order.
pub fn sites(d: &PlanarDiagram) -> Vec<Move> {
    let mut out = Vec::new();
    let locs = edge_locations(d);
    for (e, &(c, _)) in locs.iter().enumerate() {
        for sign in [1, -1] {
            for over_first in [true, false] {
                out.push(Move::R1Add { edge: Some(e), component: c, sign, over_first });
            }
        }
    }
    for (c, seq) in d.components().iter().enumerate() {
        if seq.is_empty() {
            for sign in [1, -1] {
                for over_first in [true, false] {
                    out.push(Move::R1Add { edge: None, component: c, sign, over_first });
                }
            }
        }
    }
    for x in 0..d.crossing_count() {
        if r1_removable(d, x) {
            out.push(Move::R1Remove { crossing: x });
        }
    }
    let ends = edge_ends(d);
    let faces = d.faces();
    for face in &faces {
        for &a in face {
            for &b in face {
                if a.edge != b.edge {
                    out.push(Move::R2Add { over: a, under: b });
                }
            }
        }
    }
    let mut seen = Vec::new();
    for face in &faces {
        if let Some((x, y)) = r2_pair(&ends, face) {
            if !seen.contains(&(x, y)) {
                seen.push((x, y));
                out.push(Move::R2Remove { first: x, second: y });
            }
        }
    }
    for face in &faces {
        if let Some(edges) = r3_edges(&ends, face) {
            out.push(Move::R3 { edges });
        }
    }
    out
}

fn not_applicable(mv: &Move) -> Error {
    Error::MoveNotApplicable(format!("{mv:?}"))
}

/// Drops every passage through the crossings in `gone` and renumbers the
/// remaining crossings in order.
fn remove_crossings(d: &PlanarDiagram, gone: &[usize]) -> PlanarDiagram {
    let mut map = vec![usize::MAX; d.crossing_count()];
    let mut signs = Vec::new();
    for (x, &s) in d.signs().iter().enumerate() {
        if !gone.contains(&x) {
            map[x] = signs.len();
            signs.push(s);
        }
    }
    let components = d
        .components()
        .iter()
        .map(|seq| {
            seq.iter()
                .filter(|p| map[p.crossing] != usize::MAX)
                .map(|p| Passage { crossing: map[p.crossing], over: p.over })
                .collect()
        })
        .collect();
    PlanarDiagram::from_parts_unchecked(signs, components)
}

/// Applies `mv`, or fails if it is not a legal move on `d`.
pub fn apply(d: &PlanarDiagram, mv: &Move) -> Result<PlanarDiagram> {
    let mut signs = d.signs().to_vec();
    let mut comps = d.components().to_vec();
    let locs = edge_locations(d);
    match *mv {
        Move::R1Add { edge, component, sign, over_first } => {
            if sign != 1 && sign != -1 {
                return Err(not_applicable(mv));
            }
            let x = signs.len();
            let kink = [Passage { crossing: x, over: over_first }, Passage { crossing: x, over: !over_first }];
            match edge {
                Some(e) => {
                    let &(c, k) = locs.get(e).ok_or_else(|| not_applicable(mv))?;
                    if c != component {
                        return Err(not_applicable(mv));
                    }
                    comps[c].splice(k + 1..k + 1, kink);
                }
                None => {
                    if comps.get(component).is_none_or(|s| !s.is_empty()) {
                        return Err(not_applicable(mv));
                    }
                    comps[component] = kink.to_vec();
                }
            }
            signs.push(sign);
            Ok(PlanarDiagram::from_parts_unchecked(signs, comps))
        }
        Move::R1Remove { crossing } => {
            if crossing >= d.crossing_count() || !r1_removable(d, crossing) {
                return Err(not_applicable(mv));
            }
            Ok(remove_crossings(d, &[crossing]))
        }
        Move::R2Add { over, under } => {
            let same_face = over.edge != under.edge
                && d.faces().iter().any(|f| f.contains(&over) && f.contains(&under));
            if !same_face {
                return Err(not_applicable(mv));
            }
            let (x, y) = (signs.len(), signs.len() + 1);
            let s = if under.forward { 1 } else { -1 };
            signs.push(s);
            signs.push(-s);
            let (c1, k1) = locs[over.edge];
            let (c2, k2) = locs[under.edge];
            let on_over = [Passage::over(x), Passage::over(y)];
            let on_under = if over.forward == under.forward {
                [Passage::under(y), Passage::under(x)]
            } else {
                [Passage::under(x), Passage::under(y)]
            };
            // later insertion first so the earlier index stays valid
            let mut ins = [(c1, k1, on_over), (c2, k2, on_under)];
            ins.sort_by_key(|&(c, k, _)| std::cmp::Reverse((c, k)));
            for (c, k, ps) in ins {
                comps[c].splice(k + 1..k + 1, ps);
            }
            Ok(PlanarDiagram::from_parts_unchecked(signs, comps))
        }
        Move::R2Remove { first, second } => {
            let ends = edge_ends(d);
            let key = (first.min(second), first.max(second));
            if !d.faces().iter().any(|f| r2_pair(&ends, f) == Some(key)) {
                return Err(not_applicable(mv));
            }
            Ok(remove_crossings(d, &[first, second]))
        }
        Move::R3 { edges } => {
            let ends = edge_ends(d);
            let mut sorted = edges;
            sorted.sort();
            if !d.faces().iter().any(|f| r3_edges(&ends, f) == Some(sorted)) {
                return Err(not_applicable(mv));
            }
            for e in edges {
                let (c, k) = locs[e];
                let m = comps[c].len();
                comps[c].swap(k, (k + 1) % m);
            }
            Ok(PlanarDiagram::from_parts_unchecked(signs, comps))
        }
    }
}
