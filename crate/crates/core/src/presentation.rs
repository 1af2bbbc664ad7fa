//! Three-page presentations: binding points on an axis plus three pages of
//! pairwise disjoint arcs.
//!
//! Points are numbered `1..=n` along the binding axis. Pages are numbered
//! `0..3` internally and printed as `P1..P3`; their order is the cyclic order
//! of the half-planes around the axis.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;

/// Number of pages in a three-page presentation.
pub const PAGES: usize = 3;

/// An arc on a page, stored with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub lo: u32,
    pub hi: u32,
}

impl Arc {
    /// Builds an arc from its endpoints in either order.
    ///
    /// Panics if `a == b`.
    pub fn new(a: u32, b: u32) -> Self {
        assert_ne!(a, b, "arc endpoints must differ");
        Arc { lo: a.min(b), hi: a.max(b) }
    }

    /// True if the two arcs interleave (`a < c < b < d` or the reverse).
    pub fn interleaves(&self, other: &Arc) -> bool {
        (self.lo < other.lo && other.lo < self.hi && self.hi < other.hi)
            || (other.lo < self.lo && self.lo < other.hi && other.hi < self.hi)
    }

    pub fn shares_endpoint(&self, other: &Arc) -> bool {
        self.lo == other.lo || self.lo == other.hi || self.hi == other.lo || self.hi == other.hi
    }

    pub fn other_end(&self, p: u32) -> u32 {
        if p == self.lo {
            self.hi
        } else {
            self.lo
        }
    }

    pub fn contains_point(&self, p: u32) -> bool {
        self.lo == p || self.hi == p
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// An arc together with the page it lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PagedArc {
    pub page: usize,
    pub arc: Arc,
}

impl fmt::Display for PagedArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})@P{}", self.arc.lo, self.arc.hi, self.page + 1)
    }
}

/// The arcs of one page, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PageMatching {
    arcs: Vec<Arc>,
}

impl PageMatching {
    pub fn new(mut arcs: Vec<Arc>) -> Self {
        arcs.sort();
        PageMatching { arcs }
    }

    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        Self::new(pairs.iter().map(|&(a, b)| Arc::new(a, b)).collect())
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    fn map_points(&self, f: impl Fn(u32) -> u32) -> Self {
        Self::new(self.arcs.iter().map(|a| Arc::new(f(a.lo), f(a.hi))).collect())
    }
}

/// Raw candidate data: a point count and three arc lists, not yet checked.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PresentationData {
    pub n: u32,
    pub pages: [Vec<(u32, u32)>; PAGES],
}

/// A rule broken by candidate presentation data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// An endpoint lies outside `1..=n` or the arc has equal endpoints.
    BadArc { page: usize, arc: (u32, u32) },
    /// Two arcs on one page interleave.
    NonCrossingViolated { page: usize, a: Arc, b: Arc },
    /// Two arcs on one page share an endpoint.
    EndpointShared { page: usize, point: u32, a: Arc, b: Arc },
    /// A binding point does not meet exactly two arcs.
    DegreeViolated { point: u32, degree: usize },
    PageEmpty { page: usize },
    NoPoints,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BadArc { page, arc } => {
                write!(f, "BadArc: {}-{} on P{}", arc.0, arc.1, page + 1)
            }
            Violation::NonCrossingViolated { page, a, b } => {
                write!(f, "NonCrossingViolated: {a} and {b} interleave on P{}", page + 1)
            }
            Violation::EndpointShared { page, point, a, b } => write!(
                f,
                "EndpointShared: {a} and {b} meet at point {point} on P{}",
                page + 1
            ),
            Violation::DegreeViolated { point, degree } => {
                write!(f, "DegreeViolated: point {point} meets {degree} arcs")
            }
            Violation::PageEmpty { page } => write!(f, "PageEmpty: P{}", page + 1),
            Violation::NoPoints => write!(f, "NoPoints: n must be positive"),
        }
    }
}

/// Outcome of [`validate`]: empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks every presentation rule and reports all violations found.
pub fn validate(data: &PresentationData) -> ValidationReport {
    let mut violations = Vec::new();
    let n = data.n;
    if n == 0 {
        violations.push(Violation::NoPoints);
    }
    let mut degree = vec![0usize; n as usize + 1];
    for (page, pairs) in data.pages.iter().enumerate() {
        let mut good: Vec<Arc> = Vec::new();
        for &(a, b) in pairs {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                violations.push(Violation::BadArc { page, arc: (a, b) });
                continue;
            }
            good.push(Arc::new(a, b));
        }
        good.sort();
        for (i, x) in good.iter().enumerate() {
            degree[x.lo as usize] += 1;
            degree[x.hi as usize] += 1;
            for y in &good[i + 1..] {
                if x.interleaves(y) {
                    violations.push(Violation::NonCrossingViolated { page, a: *x, b: *y });
                }
                for p in [x.lo, x.hi] {
                    if y.contains_point(p) {
                        violations.push(Violation::EndpointShared { page, point: p, a: *x, b: *y });
                    }
                }
            }
        }
        if pairs.is_empty() {
            violations.push(Violation::PageEmpty { page });
        }
    }
    for point in 1..=n {
        let d = degree[point as usize];
        if d != 2 {
            violations.push(Violation::DegreeViolated { point, degree: d });
        }
    }
    violations.sort_by_key(violation_rank);
    ValidationReport { violations }
}

fn violation_rank(v: &Violation) -> (u8, u32) {
    match v {
        Violation::NoPoints => (0, 0),
        Violation::BadArc { page, .. } => (1, *page as u32),
        Violation::NonCrossingViolated { page, .. } => (2, *page as u32),
        Violation::EndpointShared { page, .. } => (3, *page as u32),
        Violation::DegreeViolated { point, .. } => (4, *point),
        Violation::PageEmpty { page } => (5, *page as u32),
    }
}

/// A validated three-page presentation.
///
/// Instances can only be obtained through validation, so every value
/// satisfies the degree, disjointness and non-crossing rules and has three
/// nonempty pages.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThreePagePresentation {
    n: u32,
    pages: [PageMatching; PAGES],
}

impl TryFrom<PresentationData> for ThreePagePresentation {
    type Error = Error;

    fn try_from(data: PresentationData) -> Result<Self, Error> {
        let report = validate(&data);
        if !report.is_ok() {
            return Err(Error::Invalid(report));
        }
        let pages = data.pages.map(|p| PageMatching::from_pairs(&p));
        Ok(ThreePagePresentation { n: data.n, pages })
    }
}

impl ThreePagePresentation {
    /// Validates and builds from arc lists.
    pub fn new(n: u32, pages: [&[(u32, u32)]; PAGES]) -> Result<Self, Error> {
        Self::try_from(PresentationData { n, pages: pages.map(|p| p.to_vec()) })
    }

    /// Builds from matchings already known to be valid (search internals).
    pub(crate) fn from_valid_parts(n: u32, pages: [PageMatching; PAGES]) -> Self {
        debug_assert!(validate(&Self { n, pages: pages.clone() }.to_data()).is_ok());
        ThreePagePresentation { n, pages }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn pages(&self) -> &[PageMatching; PAGES] {
        &self.pages
    }

    pub fn page(&self, i: usize) -> &PageMatching {
        &self.pages[i]
    }

    pub fn arc_count(&self) -> usize {
        self.pages.iter().map(PageMatching::len).sum()
    }

    pub fn page_sizes(&self) -> [usize; PAGES] {
        [self.pages[0].len(), self.pages[1].len(), self.pages[2].len()]
    }

    pub fn arcs(&self) -> impl Iterator<Item = PagedArc> + '_ {
        self.pages
            .iter()
            .enumerate()
            .flat_map(|(page, m)| m.arcs().iter().map(move |&arc| PagedArc { page, arc }))
    }

    pub fn to_data(&self) -> PresentationData {
        PresentationData {
            n: self.n,
            pages: std::array::from_fn(|i| {
                self.pages[i].arcs().iter().map(|a| (a.lo, a.hi)).collect()
            }),
        }
    }

    /// The two arcs meeting at `point`, in page order.
    pub fn arcs_at(&self, point: u32) -> [PagedArc; 2] {
        let mut found = self.arcs().filter(|pa| pa.arc.contains_point(point));
        let a = found.next().expect("degree 2");
        let b = found.next().expect("degree 2");
        [a, b]
    }

    /// Cyclic page rotation: page `i` receives the arcs of page `i + 1`.
    pub fn rotate_pages(&self) -> Self {
        ThreePagePresentation {
            n: self.n,
            pages: [self.pages[1].clone(), self.pages[2].clone(), self.pages[0].clone()],
        }
    }

    /// Reverses the point order (`i -> n + 1 - i`) together with the cyclic
    /// page order (P1 and P3 trade places). This is a half-turn of the open
    /// book about a line perpendicular to the axis.
    pub fn reverse(&self) -> Self {
        let n = self.n;
        let flip = |p: u32| n + 1 - p;
        ThreePagePresentation {
            n,
            pages: [
                self.pages[2].map_points(flip),
                self.pages[1].map_points(flip),
                self.pages[0].map_points(flip),
            ],
        }
    }

    /// Swaps two pages. This is a reflection and may mirror the link; it
    /// is not part of the canonicalization group.
    pub fn swap_pages(&self, a: usize, b: usize) -> Self {
        let mut pages = self.pages.clone();
        pages.swap(a, b);
        ThreePagePresentation { n: self.n, pages }
    }

    /// The six images under the group generated by [`Self::rotate_pages`]
    /// and [`Self::reverse`].
    pub fn symmetry_orbit(&self) -> [ThreePagePresentation; 6] {
        let r1 = self.rotate_pages();
        let r2 = r1.rotate_pages();
        let s0 = self.reverse();
        let s1 = s0.rotate_pages();
        let s2 = s1.rotate_pages();
        [self.clone(), r1, r2, s0, s1, s2]
    }

    /// Lexicographic minimum of the symmetry orbit.
    pub fn canonicalize(&self) -> ThreePagePresentation {
        self.symmetry_orbit().into_iter().min_by(|a, b| a.cmp_key(b)).expect("nonempty orbit")
    }

    pub fn is_canonical(&self) -> bool {
        self.symmetry_orbit().iter().all(|img| self.cmp_key(img) != Ordering::Greater)
    }

    /// Lexicographic order on (P1, P2, P3) arc lists.
    pub fn cmp_key(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.pages.cmp(&other.pages))
    }

    /// The cycles of the underlying degree-2 graph.
    pub fn components(&self) -> ComponentDecomposition {
        let n = self.n as usize;
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=self.n {
            if seen[start as usize] {
                continue;
            }
            let [a, b] = self.arcs_at(start);
            // leave toward the smaller neighbour; ties go to the lower page
            let first = match a.arc.other_end(start).cmp(&b.arc.other_end(start)) {
                Ordering::Greater => b,
                _ => a,
            };
            let mut points = vec![start];
            let mut arcs = vec![first];
            seen[start as usize] = true;
            let mut here = first.arc.other_end(start);
            let mut via = first;
            while here != start {
                seen[here as usize] = true;
                points.push(here);
                let [x, y] = self.arcs_at(here);
                let next = if x == via { y } else { x };
                arcs.push(next);
                here = next.arc.other_end(here);
                via = next;
            }
            cycles.push(Component { points, arcs });
        }
        ComponentDecomposition { cycles }
    }

    /// Two arcs on different pages with the same endpoints, if any. Their
    /// presence certifies that the link is split.
    pub fn detect_split_pair(&self) -> Option<(PagedArc, PagedArc)> {
        for i in 0..PAGES {
            for j in i + 1..PAGES {
                for a in self.pages[i].arcs() {
                    if self.pages[j].arcs().binary_search(a).is_ok() {
                        return Some((PagedArc { page: i, arc: *a }, PagedArc { page: j, arc: *a }));
                    }
                }
            }
        }
        None
    }
}

impl PartialOrd for ThreePagePresentation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ThreePagePresentation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_key(other)
    }
}

/// One link component: its binding points in traversal order and the arcs
/// joining consecutive points (`arcs[k]` joins `points[k]` and
/// `points[k + 1]`, cyclically).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub points: Vec<u32>,
    pub arcs: Vec<PagedArc>,
}

impl Component {
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub cycles: Vec<Component>,
}

impl ComponentDecomposition {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Arc counts per component, in component order.
    pub fn sizes(&self) -> Vec<usize> {
        self.cycles.iter().map(Component::len).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn hopf() -> ThreePagePresentation {
        ThreePagePresentation::new(6, [&[(1, 3), (4, 6)], &[(2, 6), (3, 5)], &[(1, 5), (2, 4)]]).unwrap()
    }

    fn triangle() -> ThreePagePresentation {
        ThreePagePresentation::new(3, [&[(1, 2)], &[(2, 3)], &[(1, 3)]]).unwrap()
    }

    #[test]
    fn hopf_fixture_is_valid() {
        let h = hopf();
        assert_eq!(h.arc_count(), 6);
        assert_eq!(h.page_sizes(), [2, 2, 2]);
    }

    #[test]
    fn interleaving_page_is_rejected() {
        let data = PresentationData {
            n: 4,
            pages: [vec![(1, 3), (2, 4)], vec![(1, 2), (3, 4)], vec![]],
        };
        let report = validate(&data);
        assert!(report.violations.contains(&Violation::NonCrossingViolated {
            page: 0,
            a: Arc::new(1, 3),
            b: Arc::new(2, 4)
        }));
    }

    #[test]
    fn degree_and_empty_page_violations() {
        let data = PresentationData { n: 3, pages: [vec![(1, 2)], vec![(2, 3)], vec![]] };
        let report = validate(&data);
        assert!(report.violations.contains(&Violation::DegreeViolated { point: 1, degree: 1 }));
        assert!(report.violations.contains(&Violation::PageEmpty { page: 2 }));
        assert!(report.violations.contains(&Violation::DegreeViolated { point: 3, degree: 1 }));
        assert!(!report.violations.contains(&Violation::DegreeViolated { point: 2, degree: 2 }));
    }

    #[test]
    fn shared_endpoint_on_one_page() {
        let data = PresentationData { n: 3, pages: [vec![(1, 2), (2, 3)], vec![(1, 3)], vec![(1, 3)]] };
        let report = validate(&data);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::EndpointShared { page: 0, point: 2, .. })));
    }

    #[test]
    fn out_of_range_and_degenerate_arcs() {
        let data = PresentationData { n: 3, pages: [vec![(1, 4)], vec![(2, 2)], vec![(1, 3)]] };
        let report = validate(&data);
        assert!(report.violations.contains(&Violation::BadArc { page: 0, arc: (1, 4) }));
        assert!(report.violations.contains(&Violation::BadArc { page: 1, arc: (2, 2) }));
    }

    #[test]
    fn components_of_fixtures() {
        let t = triangle().components();
        assert_eq!(t.len(), 1);
        assert_eq!(t.sizes(), vec![3]);

        let h = hopf().components();
        assert_eq!(h.len(), 2);
        assert_eq!(h.cycles[0].points, vec![1, 3, 5]);
        assert_eq!(h.cycles[1].points, vec![2, 4, 6]);
        assert_eq!(h.sizes(), vec![3, 3]);
    }

    #[test]
    fn split_pair_detection() {
        let unlink = ThreePagePresentation::new(4, [&[(1, 2)], &[(1, 2), (3, 4)], &[(3, 4)]]).unwrap();
        let (a, b) = unlink.detect_split_pair().unwrap();
        assert_eq!((a.page, a.arc, b.page, b.arc), (0, Arc::new(1, 2), 1, Arc::new(1, 2)));
        assert_eq!(unlink.components().sizes(), vec![2, 2]);
        assert!(hopf().detect_split_pair().is_none());
        assert!(triangle().detect_split_pair().is_none());
    }

    #[test]
    fn canonical_form_is_orbit_invariant() {
        let h = hopf();
        let c = h.canonicalize();
        assert_eq!(c.canonicalize(), c);
        assert!(c.is_canonical());
        assert_eq!(h.rotate_pages().canonicalize(), c);
        assert_eq!(h.reverse().canonicalize(), c);
        // i -> 7 - i with page order reversed
        let manual = ThreePagePresentation::new(
            6,
            [&[(2, 6), (3, 5)], &[(1, 5), (2, 4)], &[(1, 3), (4, 6)]],
        )
        .unwrap();
        assert_eq!(manual.canonicalize(), c);
    }

    #[test]
    fn group_has_order_six() {
        let h = hopf();
        // r^3 = id, s^2 = id, s r s = r^-1
        assert_eq!(h.rotate_pages().rotate_pages().rotate_pages(), h);
        assert_eq!(h.reverse().reverse(), h);
        assert_eq!(
            h.reverse().rotate_pages().reverse(),
            h.rotate_pages().rotate_pages()
        );
    }
}
