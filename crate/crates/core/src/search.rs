//! Exhaustive enumeration of canonical three-page presentations, the
//! census built on it, and minimal-presentation searches.
//!
//! Presentations are generated page by page: a page-1 matching, then a
//! page-2 matching, after which the page-3 endpoint set is forced (every
//! point needs exactly two pages) and only its non-crossing pairing is
//! free. Work is split across threads by page-1 matching and merged back
//! in a fixed order, so output is deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::format::serialize;
use crate::presentation::{Arc, PageMatching, ThreePagePresentation};
use crate::profile::InvariantProfile;

/// Largest point count accepted unless overridden.
pub const DEFAULT_MAX_N: u32 = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConstraints {
    pub n: u32,
    pub required_components: Option<usize>,
    /// Every component must have at least this many arcs.
    pub min_component_arcs: Option<usize>,
    /// Drop presentations with two arcs sharing both endpoints (split links).
    pub prune_split_pairs: bool,
    /// Every page must have at least this many arcs.
    pub min_page_arcs: Option<usize>,
    pub max_n: u32,
}

impl SearchConstraints {
    pub fn new(n: u32) -> Self {
        SearchConstraints {
            n,
            required_components: None,
            min_component_arcs: None,
            prune_split_pairs: false,
            min_page_arcs: None,
            max_n: DEFAULT_MAX_N,
        }
    }

    pub fn components(mut self, k: usize) -> Self {
        self.required_components = Some(k);
        self
    }

    pub fn min_component_arcs(mut self, m: usize) -> Self {
        self.min_component_arcs = Some(m);
        self
    }

    pub fn prune_split_pairs(mut self, yes: bool) -> Self {
        self.prune_split_pairs = yes;
        self
    }

    pub fn min_page_arcs(mut self, m: usize) -> Self {
        self.min_page_arcs = Some(m);
        self
    }

    pub fn max_n(mut self, m: u32) -> Self {
        self.max_n = m;
        self
    }

    fn check(&self) -> Result<()> {
        if self.n > self.max_n {
            return Err(Error::PointLimit { n: self.n, limit: self.max_n });
        }
        if let (Some(k), Some(m)) = (self.required_components, self.min_component_arcs) {
            if k * m > self.n as usize {
                return Err(Error::Parameter(format!(
                    "{k} components of at least {m} arcs cannot fit in {} points",
                    self.n
                )));
            }
        }
        Ok(())
    }

    fn accepts(&self, p: &ThreePagePresentation) -> bool {
        if let Some(m) = self.min_page_arcs {
            if p.page_sizes().iter().any(|&s| s < m) {
                return false;
            }
        }
        if self.prune_split_pairs && p.detect_split_pair().is_some() {
            return false;
        }
        if self.required_components.is_some() || self.min_component_arcs.is_some() {
            let sizes = p.components().sizes();
            if self.required_components.is_some_and(|k| sizes.len() != k) {
                return false;
            }
            if self.min_component_arcs.is_some_and(|m| sizes.iter().any(|&s| s < m)) {
                return false;
            }
        }
        true
    }
}

/// Every non-crossing partial matching of `1..=n` with its support bitmask
/// (bit `i - 1` for point `i`).
pub fn partial_matchings(n: u32) -> Vec<(u32, Vec<Arc>)> {
    fn rec(lo: u32, hi: u32) -> Vec<Vec<Arc>> {
        if lo > hi {
            return vec![vec![]];
        }
        // lo unmatched
        let mut out = rec(lo + 1, hi);
        // lo matched to j; inside and outside are independent
        for j in lo + 1..=hi {
            let inside = rec(lo + 1, j - 1);
            let outside = rec(j + 1, hi);
            for a in &inside {
                for b in &outside {
                    let mut m = Vec::with_capacity(a.len() + b.len() + 1);
                    m.push(Arc::new(lo, j));
                    m.extend_from_slice(a);
                    m.extend_from_slice(b);
                    out.push(m);
                }
            }
        }
        out
    }
    rec(1, n)
        .into_iter()
        .map(|mut m| {
            m.sort();
            let mask = m.iter().fold(0u32, |acc, a| acc | 1 << (a.lo - 1) | 1 << (a.hi - 1));
            (mask, m)
        })
        .collect()
}

/// Non-crossing perfect matchings of the points in `points` (sorted).
pub fn perfect_matchings(points: &[u32]) -> Vec<Vec<Arc>> {
    if points.is_empty() {
        return vec![vec![]];
    }
    if points.len() % 2 == 1 {
        return vec![];
    }
    let mut out = Vec::new();
    // points[0] pairs with an odd offset so that both sides are even
    for j in (1..points.len()).step_by(2) {
        let inside = perfect_matchings(&points[1..j]);
        let outside = perfect_matchings(&points[j + 1..]);
        for a in &inside {
            for b in &outside {
                let mut m = Vec::with_capacity(points.len() / 2);
                m.push(Arc::new(points[0], points[j]));
                m.extend_from_slice(a);
                m.extend_from_slice(b);
                m.sort();
                out.push(m);
            }
        }
    }
    out
}

/// Calls `visit` on every valid presentation with `n` points (not only
/// canonical ones), grouped by page-1 matching and processed in parallel.
/// Returns the per-group results in page-1 order.
fn generate<T, F>(n: u32, visit: F) -> Vec<T>
where
    T: Send,
    F: Fn(ThreePagePresentation) -> Option<T> + Sync,
{
    let all = partial_matchings(n);
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    all.par_iter()
        .filter(|(m1, arcs)| !arcs.is_empty() && *m1 != 0)
        .map(|(m1, arcs1)| {
            let mut local = Vec::new();
            for (m2, arcs2) in &all {
                if arcs2.is_empty() || m1 | m2 != full {
                    continue;
                }
                let m3 = m1 ^ m2;
                if m3 == 0 {
                    continue;
                }
                let pts: Vec<u32> = (1..=n).filter(|i| m3 >> (i - 1) & 1 == 1).collect();
                for arcs3 in perfect_matchings(&pts) {
                    let p = ThreePagePresentation::from_valid_parts(
                        n,
                        [
                            PageMatching::new(arcs1.clone()),
                            PageMatching::new(arcs2.clone()),
                            PageMatching::new(arcs3),
                        ],
                    );
                    if let Some(t) = visit(p) {
                        local.push(t);
                    }
                }
            }
            local
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Canonical presentations satisfying the constraints, each orbit of the
/// order-6 symmetry group once, in lexicographic order of
/// (page 1, page 2, page 3) arc lists.
pub fn enumerate(c: &SearchConstraints) -> Result<Vec<ThreePagePresentation>> {
    c.check()?;
    let mut out = generate(c.n, |p| (p.is_canonical() && c.accepts(&p)).then_some(p));
    out.sort();
    Ok(out)
}

/// Like [`enumerate`] but maps each accepted presentation through `f` in
/// parallel, keeping the `Some` results in enumeration order.
pub fn enumerate_map<T, F>(c: &SearchConstraints, f: F) -> Result<Vec<(ThreePagePresentation, T)>>
where
    T: Send,
    F: Fn(&ThreePagePresentation) -> Option<T> + Sync,
{
    c.check()?;
    let mut out = generate(c.n, |p| {
        if p.is_canonical() && c.accepts(&p) {
            f(&p).map(|t| (p, t))
        } else {
            None
        }
    });
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Adds one point and one arc without changing the link: the arc at
/// `point` on the lower-numbered page is moved to a new neighbouring point,
/// and a tiny arc on the third page joins the two.
pub fn add_trivial_kink(p: &ThreePagePresentation, point: u32) -> ThreePagePresentation {
    let [a, b] = p.arcs_at(point);
    let third = 3 - a.page - b.page;
    // new point sits immediately right of `point`
    let shift = |x: u32| if x > point { x + 1 } else { x };
    let new_point = point + 1;
    let mut data = p.to_data();
    data.n += 1;
    for (page, arcs) in data.pages.iter_mut().enumerate() {
        for arc in arcs.iter_mut() {
            let moved = page == a.page && Arc::new(arc.0, arc.1) == a.arc;
            let map = |x: u32| if moved && x == point { new_point } else { shift(x) };
            *arc = (map(arc.0).min(map(arc.1)), map(arc.0).max(map(arc.1)));
        }
    }
    data.pages[third].push((point, new_point));
    ThreePagePresentation::try_from(data).expect("a kink keeps the presentation valid")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexResult {
    /// Smallest point count with a matching presentation, if any up to the
    /// search bound.
    pub n: Option<u32>,
    pub witness: Option<ThreePagePresentation>,
    /// Canonical presentations examined per point count.
    pub examined: Vec<(u32, usize)>,
}

/// Smallest `n <= n_max` admitting a presentation whose profile equals
/// `target` up to mirror. Not finding one shows the index exceeds `n_max`
/// as far as the profile can tell links apart. With `non_split`, split
/// pairs are pruned and every component is required to have three arcs.
pub fn three_page_index(target: &InvariantProfile, n_max: u32, non_split: bool) -> Result<IndexResult> {
    three_page_index_with_limit(target, n_max, non_split, DEFAULT_MAX_N)
}

pub fn three_page_index_with_limit(
    target: &InvariantProfile,
    n_max: u32,
    non_split: bool,
    max_n: u32,
) -> Result<IndexResult> {
    if n_max > max_n {
        return Err(Error::PointLimit { n: n_max, limit: max_n });
    }
    let k = target.component_count;
    let mut examined = Vec::new();
    for n in 3..=n_max {
        let mut c = SearchConstraints::new(n).components(k).max_n(max_n).prune_split_pairs(non_split);
        if non_split {
            if 3 * k > n as usize {
                examined.push((n, 0));
                continue;
            }
            c = c.min_component_arcs(3);
        }
        let hits = enumerate_map(&c, |p| Some(matches_target(p, target)))?;
        examined.push((n, hits.len()));
        if let Some((p, _)) = hits.into_iter().find(|(_, hit)| *hit) {
            return Ok(IndexResult { n: Some(n), witness: Some(p), examined });
        }
    }
    Ok(IndexResult { n: None, witness: None, examined })
}

fn matches_target(p: &ThreePagePresentation, target: &InvariantProfile) -> bool {
    let d = crate::diagram::PlanarDiagram::project(p);
    // linking numbers are cheap; filter on them before any bracket
    let k = d.component_count();
    let lk = d.linking_matrix(&crate::diagram::Orientation::base(k));
    let mut abs: Vec<i64> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).map(|(i, j)| lk[i][j].abs()).collect();
    abs.sort();
    if abs != target.abs_linking {
        return false;
    }
    InvariantProfile::of_diagram(&d).is_ok_and(|prof| prof.equal_up_to_mirror(target))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub presentation: ThreePagePresentation,
    pub profile: InvariantProfile,
}

impl CensusEntry {
    pub fn n(&self) -> u32 {
        self.presentation.n()
    }
}

impl fmt::Display for CensusEntry {
    /// `<native presentation> | components=<k> | jones={...}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} | components={} | jones={}",
            serialize(&self.presentation),
            self.profile.component_count,
            self.profile.jones_string()
        )
    }
}

/// Every canonical presentation with `n` points and its profile, grouped
/// by profile (groups in profile order, members in enumeration order).
pub fn census(n: u32) -> Result<Vec<CensusEntry>> {
    census_with_limit(n, DEFAULT_MAX_N)
}

pub fn census_with_limit(n: u32, max_n: u32) -> Result<Vec<CensusEntry>> {
    let c = SearchConstraints::new(n).max_n(max_n);
    let rows = enumerate_map(&c, |p| InvariantProfile::of_presentation(p).ok())?;
    let mut groups: BTreeMap<InvariantProfile, Vec<ThreePagePresentation>> = BTreeMap::new();
    for (p, prof) in rows {
        groups.entry(prof).or_default().push(p);
    }
    Ok(groups
        .into_iter()
        .flat_map(|(profile, ps)| {
            ps.into_iter().map(move |presentation| CensusEntry { presentation, profile: profile.clone() })
        })
        .collect())
}

pub fn census_text(entries: &[CensusEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&e.to_string());
        out.push('\n');
    }
    out
}

pub fn write_census(path: &Path, entries: &[CensusEntry]) -> std::io::Result<()> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(census_text(entries).as_bytes())
}

/// Outcome of the exhaustive check that no nine-point presentation is the
/// (3,3) torus link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefutationReport {
    /// Canonical three-component presentations with nine points.
    pub examined: usize,
    /// Those with a doubled arc (a two-arc component), hence split.
    pub split_pruned: usize,
    /// Remaining presentations, all with three arcs per component.
    pub profile_checked: usize,
    pub witnesses: Vec<ThreePagePresentation>,
}

impl fmt::Display for RefutationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "examined={} split_pruned={} profile_checked={} witnesses={}",
            self.examined,
            self.split_pruned,
            self.profile_checked,
            self.witnesses.len()
        )
    }
}

/// Checks every canonical 9-point, 3-component presentation against the
/// profile of the closure of `(σ1σ2)^3`.
pub fn refute_t33_at_9() -> Result<RefutationReport> {
    let target = InvariantProfile::of_diagram(&crate::braid::torus_braid(3, 3)?.closure())?;
    let c = SearchConstraints::new(9).components(3);
    let rows = enumerate_map(&c, |p| {
        let split = p.detect_split_pair().is_some();
        let sizes = p.components().sizes();
        let hit = !split && matches_target(p, &target);
        Some((split, sizes, hit))
    })?;
    let mut report =
        RefutationReport { examined: rows.len(), split_pruned: 0, profile_checked: 0, witnesses: Vec::new() };
    for (p, (split, sizes, hit)) in rows {
        if split {
            report.split_pruned += 1;
            continue;
        }
        assert!(sizes.iter().all(|&s| s == 3), "a non-split component has at least three arcs");
        report.profile_checked += 1;
        if hit {
            report.witnesses.push(p);
        }
    }
    Ok(report)
}
