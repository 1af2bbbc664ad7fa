//! Kauffman bracket by two independent algorithms, and the Jones
//! polynomial.
//!
//! Normalization: a single crossingless loop has bracket `1`; each extra
//! loop multiplies by `δ = -A^2 - A^-2`. At a crossing with slots
//! `[a, b, c, d]` (counterclockwise from the incoming under-edge) the
//! A-smoothing joins `a-b` and `c-d`, the B-smoothing joins `a-d` and
//! `b-c`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::diagram::{Orientation, PlanarDiagram};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// Default crossing limit for the state sum.
pub const DEFAULT_STATESUM_LIMIT: usize = 24;
/// Default crossing limit for the memoized skein recursion.
pub const DEFAULT_SKEIN_LIMIT: usize = 64;

fn check_limit(d: &PlanarDiagram, limit: usize) -> Result<()> {
    if d.crossing_count() > limit {
        return Err(Error::CrossingLimit { crossings: d.crossing_count(), limit });
    }
    Ok(())
}

/// Assembles `Σ counts[(a-b, loops)] A^(a-b) δ^(loops-1)`.
fn assemble(counts: &HashMap<(i32, usize), i64>) -> LaurentPoly {
    let max_loops = counts.keys().map(|k| k.1).max().unwrap_or(1);
    let delta = LaurentPoly::delta();
    let mut powers = vec![LaurentPoly::one()];
    for _ in 1..max_loops {
        let next = powers.last().unwrap() * &delta;
        powers.push(next);
    }
    let mut out = LaurentPoly::zero();
    for (&(e, loops), &c) in counts {
        out += &powers[loops - 1].scale(c, e);
    }
    out
}

/// Sum over all `2^c` smoothing states.
pub fn bracket_statesum(d: &PlanarDiagram) -> Result<LaurentPoly> {
    bracket_statesum_with_limit(d, DEFAULT_STATESUM_LIMIT)
}

pub fn bracket_statesum_with_limit(d: &PlanarDiagram, limit: usize) -> Result<LaurentPoly> {
    check_limit(d, limit)?;
    let c = d.crossing_count();
    let free = d.free_loops();
    if c == 0 {
        return Ok(LaurentPoly::delta().pow(free as u32 - 1));
    }
    let (slots, _) = d.pd_slots();
    let edges = d.edge_count();
    // split the state space into independent chunks over the high bits
    let chunk_bits = c.min(10);
    let low_bits = c - chunk_bits;
    let partials: Vec<HashMap<(i32, usize), i64>> = (0u64..1 << chunk_bits)
        .into_par_iter()
        .map(|high| {
            let mut counts: HashMap<(i32, usize), i64> = HashMap::new();
            let mut parent = vec![0usize; edges];
            for low in 0u64..1 << low_bits {
                let state = high << low_bits | low;
                for (i, p) in parent.iter_mut().enumerate() {
                    *p = i;
                }
                let mut merges = 0;
                let mut a_count = 0i32;
                for (x, s) in slots.iter().enumerate() {
                    let pairs = if state >> x & 1 == 0 {
                        a_count += 1;
                        [(s[0], s[1]), (s[2], s[3])]
                    } else {
                        [(s[0], s[3]), (s[1], s[2])]
                    };
                    for (u, v) in pairs {
                        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                        if ru != rv {
                            parent[ru] = rv;
                            merges += 1;
                        }
                    }
                }
                let loops = edges - merges + free;
                let e = a_count - (c as i32 - a_count);
                *counts.entry((e, loops)).or_insert(0) += 1;
            }
            counts
        })
        .collect();
    let mut total: HashMap<(i32, usize), i64> = HashMap::new();
    for part in partials {
        for (k, v) in part {
            *total.entry(k).or_insert(0) += v;
        }
    }
    Ok(assemble(&total))
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Skein recursion: smooth one crossing both ways, recurse, and memoize on
/// the remaining crossings with edges relabelled by first appearance.
pub fn bracket_skein(d: &PlanarDiagram) -> Result<LaurentPoly> {
    bracket_skein_with_limit(d, DEFAULT_SKEIN_LIMIT)
}

pub fn bracket_skein_with_limit(d: &PlanarDiagram, limit: usize) -> Result<LaurentPoly> {
    check_limit(d, limit)?;
    let free = d.free_loops() as u32;
    if d.crossing_count() == 0 {
        return Ok(LaurentPoly::delta().pow(free - 1));
    }
    let (slots, _) = d.pd_slots();
    let ordered = resolution_order(&slots);
    let mut memo = HashMap::new();
    let total = skein_rec(canonical(ordered), &mut memo);
    let scaled = &total * &LaurentPoly::delta().pow(free);
    Ok(scaled.div_exact(&LaurentPoly::delta()).expect("every state closes at least one loop"))
}

/// Orders crossings so that the ones resolved first (taken from the end of
/// the list) grow a connected region; this keeps the set of distinct
/// boundary patterns, and hence the memo table, small.
fn resolution_order(slots: &[[usize; 4]]) -> Vec<[usize; 4]> {
    let c = slots.len();
    let mut by_edge: HashMap<usize, Vec<usize>> = HashMap::new();
    for (x, s) in slots.iter().enumerate() {
        for &e in s {
            by_edge.entry(e).or_default().push(x);
        }
    }
    let mut taken = vec![false; c];
    let mut touch = vec![0usize; c];
    let mut order = Vec::with_capacity(c);
    for _ in 0..c {
        // most edges shared with the region so far; ties to lowest index
        let x = (0..c).filter(|&x| !taken[x]).max_by_key(|&x| (touch[x], std::cmp::Reverse(x))).unwrap();
        taken[x] = true;
        order.push(slots[x]);
        for &e in &slots[x] {
            for &y in &by_edge[&e] {
                if !taken[y] {
                    touch[y] += 1;
                }
            }
        }
    }
    order.reverse();
    order
}

fn canonical(mut xs: Vec<[usize; 4]>) -> Vec<[usize; 4]> {
    let mut map: HashMap<usize, usize> = HashMap::new();
    for s in xs.iter_mut() {
        for e in s.iter_mut() {
            let len = map.len();
            *e = *map.entry(*e).or_insert(len);
        }
    }
    xs
}

/// Removes the last crossing, joining its slots in the given pairs.
/// Returns the remaining crossings and the number of loops closed.
fn smooth_last(xs: &[[usize; 4]], pairs: [(usize, usize); 2]) -> (Vec<[usize; 4]>, u32) {
    let mut rest: Vec<[usize; 4]> = xs[..xs.len() - 1].to_vec();
    let s = xs[xs.len() - 1];
    let mut pending = [(s[pairs[0].0], s[pairs[0].1]), (s[pairs[1].0], s[pairs[1].1])];
    let mut loops = 0;
    for i in 0..2 {
        let (a, b) = pending[i];
        if a == b {
            loops += 1;
            continue;
        }
        for slot in rest.iter_mut().flat_map(|x| x.iter_mut()) {
            if *slot == b {
                *slot = a;
            }
        }
        for p in pending.iter_mut().skip(i + 1) {
            if p.0 == b {
                p.0 = a;
            }
            if p.1 == b {
                p.1 = a;
            }
        }
    }
    (rest, loops)
}

fn skein_rec(xs: Vec<[usize; 4]>, memo: &mut HashMap<Vec<[usize; 4]>, LaurentPoly>) -> LaurentPoly {
    if xs.is_empty() {
        return LaurentPoly::one();
    }
    if let Some(v) = memo.get(&xs) {
        return v.clone();
    }
    let delta = LaurentPoly::delta();
    let (rest_a, loops_a) = smooth_last(&xs, [(0, 1), (2, 3)]);
    let (rest_b, loops_b) = smooth_last(&xs, [(0, 3), (1, 2)]);
    let fa = skein_rec(canonical(rest_a), memo);
    let fb = skein_rec(canonical(rest_b), memo);
    let out = &(&fa * &delta.pow(loops_a)).scale(1, 1) + &(&fb * &delta.pow(loops_b)).scale(1, -1);
    memo.insert(xs, out.clone());
    out
}

/// `(-A^3)^(-writhe) · bracket`.
pub fn normalize(bracket: &LaurentPoly, writhe: i64) -> LaurentPoly {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    bracket.scale(sign, -3 * writhe as i32)
}

/// Jones polynomial in the variable `A` (substitute `t = A^-4`).
pub fn jones(d: &PlanarDiagram, o: &Orientation) -> Result<LaurentPoly> {
    Ok(normalize(&bracket_skein(d)?, d.writhe(o)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::presentation::ThreePagePresentation;

    fn hopf() -> PlanarDiagram {
        PlanarDiagram::project(
            &ThreePagePresentation::new(6, [&[(1, 3), (4, 6)], &[(2, 6), (3, 5)], &[(1, 5), (2, 4)]]).unwrap(),
        )
    }

    /// Independent oracle for braid closures: smooth every letter of the
    /// word directly. For σ_i the A-smoothing is the vertical (identity)
    /// resolution, for σ_i^-1 it is the cup-cap; loops are counted on the
    /// grid of strand positions.
    fn braid_oracle(w: &BraidWord) -> LaurentPoly {
        let s = w.strands() as usize;
        let len = w.len();
        let mut total = LaurentPoly::zero();
        for state in 0u64..1 << len {
            // node (level, position); level len wraps to level 0
            let node = |lvl: usize, pos: usize| (lvl % len.max(1)) * s + pos;
            let mut parent: Vec<usize> = (0..len.max(1) * s).collect();
            let mut a_minus_b = 0i32;
            for (lvl, l) in w.letters().iter().enumerate() {
                let i = l.index as usize - 1;
                let a_smoothing = state >> lvl & 1 == 0;
                a_minus_b += if a_smoothing { 1 } else { -1 };
                let vertical = a_smoothing == l.positive;
                for pos in 0..s {
                    if pos != i && pos != i + 1 {
                        union(&mut parent, node(lvl, pos), node(lvl + 1, pos));
                    }
                }
                if vertical {
                    union(&mut parent, node(lvl, i), node(lvl + 1, i));
                    union(&mut parent, node(lvl, i + 1), node(lvl + 1, i + 1));
                } else {
                    union(&mut parent, node(lvl, i), node(lvl, i + 1));
                    union(&mut parent, node(lvl + 1, i), node(lvl + 1, i + 1));
                }
            }
            let mut roots: Vec<usize> = (0..parent.len()).map(|x| find(&mut parent, x)).collect();
            roots.sort();
            roots.dedup();
            total += &LaurentPoly::delta().pow(roots.len() as u32 - 1).scale(1, a_minus_b);
        }
        total
    }

    fn union(p: &mut [usize], a: usize, b: usize) {
        let (ra, rb) = (find(p, a), find(p, b));
        p[ra] = rb;
    }

    #[test]
    fn normalization() {
        assert_eq!(bracket_statesum(&PlanarDiagram::unknot()).unwrap(), LaurentPoly::one());
        assert_eq!(bracket_skein(&PlanarDiagram::unknot()).unwrap(), LaurentPoly::one());
        assert_eq!(bracket_statesum(&PlanarDiagram::unlink(2)).unwrap(), LaurentPoly::delta());
    }

    #[test]
    fn hopf_bracket() {
        let want = LaurentPoly::from_terms([(4, -1), (-4, -1)]);
        assert_eq!(bracket_statesum(&hopf()).unwrap(), want);
        assert_eq!(bracket_skein(&hopf()).unwrap(), want);
    }

    #[test]
    fn trefoil_matches_grid_oracle() {
        let w = BraidWord::parse(2, "s1 s1 s1").unwrap();
        let oracle = braid_oracle(&w);
        // frozen from the oracle: A^-7 - A^-3 - A^5
        assert_eq!(oracle, LaurentPoly::from_terms([(-7, 1), (-3, -1), (5, -1)]));
        let d = w.closure();
        assert_eq!(bracket_statesum(&d).unwrap(), oracle);
        assert_eq!(bracket_skein(&d).unwrap(), oracle);
        let j = jones(&d, &Orientation::base(1)).unwrap();
        assert_eq!(j, LaurentPoly::from_terms([(-4, 1), (-12, 1), (-16, -1)]));
        assert_eq!(j.to_t_string().unwrap(), "-t^4 + t^3 + t");
    }

    #[test]
    fn oracle_agreement_on_mixed_words() {
        for (s, w) in [(3, "s1 -s2 s1 -s2"), (3, "s1 s2 s1 s2 s1 s2"), (4, "s1 s2 -s3 s2 s1 -s3 s2"), (2, "-s1 -s1")] {
            let w = BraidWord::parse(s, w).unwrap();
            let d = w.closure();
            let o = braid_oracle(&w);
            assert_eq!(bracket_statesum(&d).unwrap(), o, "{w}");
            assert_eq!(bracket_skein(&d).unwrap(), o, "{w}");
        }
    }

    #[test]
    fn hopf_jones_matches_braid_up_to_mirror() {
        let a = jones(&hopf(), &Orientation::base(2)).unwrap();
        let b = jones(&BraidWord::parse(2, "s1 s1").unwrap().closure(), &Orientation::base(2)).unwrap();
        assert_eq!(a.mirror(), b);
    }

    #[test]
    fn limits() {
        let w = BraidWord::positive(2, std::iter::repeat(1).take(25)).unwrap();
        assert!(matches!(bracket_statesum(&w.closure()), Err(Error::CrossingLimit { .. })));
        assert!(bracket_skein(&w.closure()).is_ok());
    }
}
