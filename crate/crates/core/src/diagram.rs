//! Oriented planar link diagrams.
//!
//! A diagram is stored as a signed Gauss code: every component is the
//! cyclic sequence of crossings it passes through, each marked over or
//! under, and every crossing carries its sign with respect to the base
//! orientation (the order in which the sequences are stored). Components
//! without crossings are free loops.
//!
//! Sign convention (right-hand rule, over-strand direction first):
//!
//! ```text
//!     positive            negative
//!
//!    \     /            \     /
//!     \   /              \   /
//!      \ /                \ /
//!       /                  \
//!      / \                / \
//!     /   \              /   \
//!   over goes SW->NE    over goes SE->NW
//!   under goes SE->NW   under goes SW->NE
//!   (both strands drawn upward)
//! ```
//!
//! A crossing is positive when `over × under > 0` for the direction
//! vectors of the two strands.
//!
//! The embedding is recovered from the sign: listing the four half-edges
//! counterclockwise starting at the incoming under-edge gives
//! `[under_in, over_out, under_out, over_in]` for a positive crossing and
//! `[under_in, over_in, under_out, over_out]` for a negative one.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::braid::BraidWord;
use crate::presentation::{Arc, ThreePagePresentation};

/// One pass of a component through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Passage {
    pub crossing: usize,
    pub over: bool,
}

impl Passage {
    pub fn over(crossing: usize) -> Self {
        Passage { crossing, over: true }
    }

    pub fn under(crossing: usize) -> Self {
        Passage { crossing, over: false }
    }
}

/// Direction choice per component; `true` reverses the stored traversal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation(pub Vec<bool>);

impl Orientation {
    pub fn base(components: usize) -> Self {
        Orientation(vec![false; components])
    }

    /// All `2^components` assignments, in binary counting order.
    pub fn all(components: usize) -> impl Iterator<Item = Orientation> {
        (0u64..1 << components)
            .map(move |bits| Orientation((0..components).map(|c| bits >> c & 1 == 1).collect()))
    }
}

/// Where a directed edge starts or ends: a crossing and a slot `0..4` in
/// counterclockwise order starting at the incoming under-edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Endpoint {
    pub crossing: usize,
    pub slot: usize,
}

/// An edge side: the edge traversed forwards or backwards. A face lies to
/// the left of each of its darts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub edge: usize,
    pub forward: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    signs: Vec<i8>,
    components: Vec<Vec<Passage>>,
}

impl PlanarDiagram {
    /// Builds from a signed Gauss code. Panics if a crossing does not occur
    /// exactly once over and once under.
    pub fn from_gauss(signs: Vec<i8>, components: Vec<Vec<Passage>>) -> Self {
        let mut seen = vec![[0u8; 2]; signs.len()];
        for p in components.iter().flatten() {
            seen[p.crossing][p.over as usize] += 1;
        }
        assert!(seen.iter().all(|s| *s == [1, 1]), "each crossing needs one over and one under passage");
        assert!(signs.iter().all(|s| *s == 1 || *s == -1));
        assert!(!components.is_empty(), "a diagram needs at least one component");
        PlanarDiagram { signs, components }
    }

    /// Projection of a three-page presentation.
    ///
    /// The axis is horizontal with points `1..=n` left to right. Page 2's
    /// arcs are semicircles below the axis; pages 1 and 3 are semicircles
    /// above it, with page 3 passing over page 1 wherever two arcs
    /// interleave. Components are traversed as in
    /// [`ThreePagePresentation::components`].
    pub fn project(p: &ThreePagePresentation) -> Self {
        let crossings = projection_crossings(p);
        let mut id: BTreeMap<(Arc, Arc), usize> = BTreeMap::new();
        for (k, c) in crossings.iter().enumerate() {
            id.insert((c.under, c.over), k);
        }
        let mut signs = vec![0i8; crossings.len()];
        let mut components = Vec::new();
        for comp in p.components().cycles {
            let mut seq = Vec::new();
            for (k, pa) in comp.arcs.iter().enumerate() {
                let from = comp.points[k];
                let rightward = from == pa.arc.lo;
                // (crossing id, the other arc) for each crossing on this arc
                let mut hits: Vec<(usize, Arc)> = match pa.page {
                    0 => p.page(2).arcs().iter().filter(|o| o.interleaves(&pa.arc)).map(|o| (id[&(pa.arc, *o)], *o)).collect(),
                    2 => p.page(0).arcs().iter().filter(|u| u.interleaves(&pa.arc)).map(|u| (id[&(*u, pa.arc)], *u)).collect(),
                    _ => Vec::new(),
                };
                hits.sort_by(|a, b| cmp_intersection_x(&pa.arc, &a.1, &b.1));
                if !rightward {
                    hits.reverse();
                }
                for (x, _) in hits {
                    seq.push(Passage { crossing: x, over: pa.page == 2 });
                }
            }
            components.push(seq);
        }
        // signs need traversal directions of both strands
        let mut dir: Vec<[i8; 2]> = vec![[0; 2]; crossings.len()];
        for comp in p.components().cycles {
            for (k, pa) in comp.arcs.iter().enumerate() {
                let d = if comp.points[k] == pa.arc.lo { 1 } else { -1 };
                for (x, c) in crossings.iter().enumerate() {
                    if pa.page == 0 && c.under == pa.arc {
                        dir[x][0] = d;
                    } else if pa.page == 2 && c.over == pa.arc {
                        dir[x][1] = d;
                    }
                }
            }
        }
        for (x, c) in crossings.iter().enumerate() {
            // rightward tangents t = (y, m - x): over × under ∝ m_under - m_over
            let centre_order = (c.under.lo + c.under.hi) as i64 - (c.over.lo + c.over.hi) as i64;
            signs[x] = dir[x][0] * dir[x][1] * centre_order.signum() as i8;
        }
        PlanarDiagram { signs, components }
    }

    /// Closure of a braid drawn top to bottom with positions increasing to
    /// the right. `σ_i` is a positive crossing. Components are the
    /// permutation cycles, ordered by their smallest starting position.
    pub fn braid_closure(w: &BraidWord) -> Self {
        let strands = w.strands() as usize;
        let perm = w.permutation();
        let mut signs = Vec::with_capacity(w.len());
        for l in w.letters() {
            signs.push(if l.positive { 1 } else { -1 });
        }
        let mut components = Vec::new();
        let mut seen = vec![false; strands];
        for start in 0..strands {
            if seen[start] {
                continue;
            }
            let mut seq = Vec::new();
            let mut top = start;
            loop {
                seen[top] = true;
                let mut pos = top;
                for (x, l) in w.letters().iter().enumerate() {
                    let left = l.index as usize - 1;
                    if pos == left || pos == left + 1 {
                        let moving_left = pos == left + 1;
                        // σ_i: the strand moving left is over; σ_i^-1: the one moving right
                        let over = moving_left == l.positive;
                        seq.push(Passage { crossing: x, over });
                        pos = if moving_left { left } else { left + 1 };
                    }
                }
                debug_assert_eq!(pos, perm[top]);
                top = pos;
                if top == start {
                    break;
                }
            }
            components.push(seq);
        }
        PlanarDiagram { signs, components }
    }

    /// A single crossingless loop.
    pub fn unknot() -> Self {
        PlanarDiagram { signs: vec![], components: vec![vec![]] }
    }

    /// `k` disjoint crossingless loops.
    pub fn unlink(k: usize) -> Self {
        PlanarDiagram { signs: vec![], components: vec![vec![]; k] }
    }

    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Vec<Passage>] {
        &self.components
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn free_loops(&self) -> usize {
        self.components.iter().filter(|c| c.is_empty()).count()
    }

    /// `(over component, under component)` for each crossing.
    pub fn crossing_components(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0); self.signs.len()];
        for (c, seq) in self.components.iter().enumerate() {
            for p in seq {
                if p.over {
                    out[p.crossing].0 = c;
                } else {
                    out[p.crossing].1 = c;
                }
            }
        }
        out
    }

    /// Crossing signs under orientation `o`.
    pub fn oriented_signs(&self, o: &Orientation) -> Vec<i8> {
        assert_eq!(o.0.len(), self.components.len());
        self.crossing_components()
            .iter()
            .zip(&self.signs)
            .map(|(&(a, b), &s)| if o.0[a] != o.0[b] { -s } else { s })
            .collect()
    }

    pub fn writhe(&self, o: &Orientation) -> i64 {
        self.oriented_signs(o).iter().map(|&s| s as i64).sum()
    }

    /// Linking numbers; `lk[i][j]` is half the signed count of crossings
    /// between components `i` and `j`. The diagonal is zero.
    pub fn linking_matrix(&self, o: &Orientation) -> Vec<Vec<i64>> {
        let k = self.components.len();
        let mut twice = vec![vec![0i64; k]; k];
        for (&(a, b), s) in self.crossing_components().iter().zip(self.oriented_signs(o)) {
            if a != b {
                twice[a][b] += s as i64;
                twice[b][a] += s as i64;
            }
        }
        for row in &mut twice {
            for v in row.iter_mut() {
                debug_assert!(*v % 2 == 0, "inter-component crossings come in pairs");
                *v /= 2;
            }
        }
        twice
    }

    /// The same diagram seen in a mirror: every crossing changes sign and
    /// the over and under passages swap.
    pub fn mirror(&self) -> Self {
        PlanarDiagram {
            signs: self.signs.iter().map(|s| -s).collect(),
            components: self
                .components
                .iter()
                .map(|seq| seq.iter().map(|p| Passage { crossing: p.crossing, over: !p.over }).collect())
                .collect(),
        }
    }

    /// Global ids of edges: component `c`'s edge `k` runs from its passage
    /// `k` to passage `k + 1` (cyclically).
    pub fn edge_offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.components.len() + 1);
        let mut acc = 0;
        for seq in &self.components {
            off.push(acc);
            acc += seq.len();
        }
        off.push(acc);
        off
    }

    pub fn edge_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }

    /// Edge ids in each crossing's four slots (counterclockwise from the
    /// incoming under-edge), plus the tail and head endpoint of each edge.
    pub fn pd_slots(&self) -> (Vec<[usize; 4]>, Vec<(Endpoint, Endpoint)>) {
        let off = self.edge_offsets();
        let mut under_in = vec![0; self.signs.len()];
        let mut under_out = vec![0; self.signs.len()];
        let mut over_in = vec![0; self.signs.len()];
        let mut over_out = vec![0; self.signs.len()];
        for (c, seq) in self.components.iter().enumerate() {
            let m = seq.len();
            for (k, p) in seq.iter().enumerate() {
                let incoming = off[c] + (k + m - 1) % m;
                let outgoing = off[c] + k;
                if p.over {
                    over_in[p.crossing] = incoming;
                    over_out[p.crossing] = outgoing;
                } else {
                    under_in[p.crossing] = incoming;
                    under_out[p.crossing] = outgoing;
                }
            }
        }
        let mut slots = Vec::with_capacity(self.signs.len());
        let dummy = Endpoint { crossing: usize::MAX, slot: 0 };
        let mut ends = vec![(dummy, dummy); self.edge_count()];
        for x in 0..self.signs.len() {
            let s = if self.signs[x] > 0 {
                [under_in[x], over_out[x], under_out[x], over_in[x]]
            } else {
                [under_in[x], over_in[x], under_out[x], over_out[x]]
            };
            let (in_over_slot, out_over_slot) = if self.signs[x] > 0 { (3, 1) } else { (1, 3) };
            ends[under_in[x]].1 = Endpoint { crossing: x, slot: 0 };
            ends[under_out[x]].0 = Endpoint { crossing: x, slot: 2 };
            ends[over_in[x]].1 = Endpoint { crossing: x, slot: in_over_slot };
            ends[over_out[x]].0 = Endpoint { crossing: x, slot: out_over_slot };
            slots.push(s);
        }
        (slots, ends)
    }

    /// Faces of the embedding, each as the cyclic list of darts with the
    /// face on their left. Free loops contribute no darts.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let (slots, ends) = self.pd_slots();
        let e = self.edge_count();
        let mut used = vec![[false; 2]; e];
        let mut faces = Vec::new();
        for start_edge in 0..e {
            for start_fwd in [true, false] {
                if used[start_edge][start_fwd as usize] {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = Dart { edge: start_edge, forward: start_fwd };
                while !used[d.edge][d.forward as usize] {
                    used[d.edge][d.forward as usize] = true;
                    face.push(d);
                    let arrive = if d.forward { ends[d.edge].1 } else { ends[d.edge].0 };
                    let slot = (arrive.slot + 3) % 4;
                    let next = slots[arrive.crossing][slot];
                    let (tail, _head) = ends[next];
                    let forward = tail.crossing == arrive.crossing && tail.slot == slot;
                    d = Dart { edge: next, forward };
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Groups crossings into connected pieces of the underlying 4-valent
    /// graph; returns a piece id per crossing and the number of pieces.
    fn pieces(&self) -> (Vec<usize>, usize) {
        let n = self.signs.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for seq in &self.components {
            for w in seq.windows(2) {
                let (a, b) = (find(&mut parent, w[0].crossing), find(&mut parent, w[1].crossing));
                parent[a] = b;
            }
        }
        let mut ids = BTreeMap::new();
        let mut out = vec![0; n];
        for (x, slot) in out.iter_mut().enumerate() {
            let r = find(&mut parent, x);
            let len = ids.len();
            *slot = *ids.entry(r).or_insert(len);
        }
        (out, ids.len())
    }

    /// True if every connected piece of the diagram embeds in the sphere
    /// (`V - E + F = 2` per piece).
    pub fn is_planar(&self) -> bool {
        let (piece, count) = self.pieces();
        let mut v = vec![0i64; count];
        let mut e = vec![0i64; count];
        let mut f = vec![0i64; count];
        for &pc in &piece {
            v[pc] += 1;
            e[pc] += 2;
        }
        let edge_piece = {
            let mut ep = Vec::new();
            for seq in &self.components {
                for p in seq {
                    ep.push(piece[p.crossing]);
                }
            }
            ep
        };
        for face in self.faces() {
            f[edge_piece[face[0].edge]] += 1;
        }
        (0..count).all(|i| v[i] - e[i] + f[i] == 2)
    }

    /// PD-style interchange text: a header line followed by one
    /// `X e1 e2 e3 e4` line per crossing, edges 1-based, listed
    /// counterclockwise from the incoming under-edge.
    pub fn to_pd_string(&self) -> String {
        let (slots, _) = self.pd_slots();
        let mut out = format!("components={} crossings={}\n", self.component_count(), self.crossing_count());
        for s in slots {
            let _ = writeln!(out, "X {} {} {} {}", s[0] + 1, s[1] + 1, s[2] + 1, s[3] + 1);
        }
        out
    }

    /// Relabels crossings in order of first appearance along the
    /// components. Used to compare diagrams up to crossing numbering.
    pub fn normalized(&self) -> Self {
        let mut map = vec![usize::MAX; self.signs.len()];
        let mut next = 0;
        for p in self.components.iter().flatten() {
            if map[p.crossing] == usize::MAX {
                map[p.crossing] = next;
                next += 1;
            }
        }
        let mut signs = vec![0; self.signs.len()];
        for (x, &m) in map.iter().enumerate() {
            signs[m] = self.signs[x];
        }
        let components = self
            .components
            .iter()
            .map(|seq| seq.iter().map(|p| Passage { crossing: map[p.crossing], over: p.over }).collect())
            .collect();
        PlanarDiagram { signs, components }
    }

    pub(crate) fn from_parts_unchecked(signs: Vec<i8>, components: Vec<Vec<Passage>>) -> Self {
        PlanarDiagram { signs, components }
    }
}

/// A crossing of the projection: a page-3 arc over a page-1 arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjectedCrossing {
    pub over: Arc,
    pub under: Arc,
}

/// All interleaving (page 1, page 3) pairs, ordered by page-1 arc and then
/// page-3 arc.
pub fn projection_crossings(p: &ThreePagePresentation) -> Vec<ProjectedCrossing> {
    let mut out = Vec::new();
    for u in p.page(0).arcs() {
        for o in p.page(2).arcs() {
            if u.interleaves(o) {
                out.push(ProjectedCrossing { over: *o, under: *u });
            }
        }
    }
    out
}

/// x-coordinate where two interleaving upper semicircles meet, as an
/// exact fraction `(num, den)` with `den > 0`. The power of a point with
/// respect to the circle on diameter `[a, b]` is `(x - a)(x - b)`, so the
/// radical axis is `x = (cd - ab) / (c + d - a - b)`.
pub fn intersection_x(s: &Arc, t: &Arc) -> (i64, i64) {
    let (a, b, c, d) = (s.lo as i64, s.hi as i64, t.lo as i64, t.hi as i64);
    let (mut num, mut den) = (c * d - a * b, c + d - a - b);
    if den < 0 {
        num = -num;
        den = -den;
    }
    (num, den)
}

fn cmp_intersection_x(base: &Arc, s: &Arc, t: &Arc) -> Ordering {
    let (n1, d1) = intersection_x(base, s);
    let (n2, d2) = intersection_x(base, t);
    (n1 * d2).cmp(&(n2 * d1))
}
