//! Explicit three-page presentations of torus links and the index bounds
//! that go with them.
//!
//! Every constructor is assembled from nested families of arcs: `fam(a, b, m)`
//! is the `m` arcs `(a, b), (a+1, b-1), …`. All outputs present the positive
//! torus link, i.e. the closure of `(σ1 … σ_{q-1})^p`.
//!
//! The bridge number `min(p, q)` of a torus link is a classical external
//! fact; it is used only in [`BoundsReport`].

use std::fmt;

use crate::braid::{gcd, torus_braid};
use crate::error::{Error, Result};
use crate::presentation::ThreePagePresentation;
use crate::profile::InvariantProfile;

/// Torus-link parameters normalized to `2 <= p <= q`, with `mirror` set
/// when the requested link is the mirror image of `T(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusParams {
    pub p: u32,
    pub q: u32,
    pub mirror: bool,
}

impl TorusParams {
    /// Normalizes `(p, q)` using `T(p, q) = T(q, p)` and
    /// `T(-p, q) = mirror T(p, q)`.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        let (a, b) = (p.unsigned_abs(), q.unsigned_abs());
        if a < 2 || b < 2 {
            return Err(Error::Parameter(format!(
                "T({p},{q}) is trivial; need |p|, |q| >= 2"
            )));
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let lo = u32::try_from(lo).map_err(|_| Error::Parameter(format!("p={lo} too large")))?;
        let hi = u32::try_from(hi).map_err(|_| Error::Parameter(format!("q={hi} too large")))?;
        Ok(TorusParams { p: lo, q: hi, mirror: (p < 0) != (q < 0) })
    }

    pub fn components(&self) -> u32 {
        gcd(self.p, self.q)
    }

    /// Profile of the closure of the torus braid, mirrored if requested.
    pub fn oracle_profile(&self) -> Result<InvariantProfile> {
        let prof = InvariantProfile::of_diagram(&torus_braid(self.p, self.q)?.closure())?;
        Ok(if self.mirror { prof.mirror() } else { prof })
    }
}

fn fam(a: u32, b: u32, m: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..m).map(move |i| (a + i, b - i))
}

// The families are laid out for the negative link; reading the axis
// backwards gives the positive one.
fn assemble(n: u32, mut pages: [Vec<(u32, u32)>; 3]) -> ThreePagePresentation {
    for arc in pages.iter_mut().flatten() {
        *arc = (n + 1 - arc.1, n + 1 - arc.0);
    }
    ThreePagePresentation::new(n, [&pages[0][..], &pages[1][..], &pages[2][..]])
        .expect("torus construction produced an invalid presentation")
}

fn check_normalized(p: u32, q: u32) -> Result<()> {
    if p < 2 || p > q {
        return Err(Error::Parameter(format!("need 2 <= p <= q (got p={p}, q={q})")));
    }
    Ok(())
}

/// `T(n, n)` with `4n - 2` arcs, page sizes `(2(n-1), n, n)`.
pub fn tnn(n: u32) -> Result<ThreePagePresentation> {
    if n < 2 {
        return Err(Error::Parameter(format!("tnn needs n >= 2 (got {n})")));
    }
    tpq(n, n)
}

/// `T(p, q)` with `2p + 2q - 2` arcs, page sizes `(q + p - 2, p, q)`.
///
/// The main loop of `q` parallel strands sits below the axis; the `p`
/// strands that cross the others also run once around a kink loop to the
/// right, and the two innermost loop arcs are contracted.
pub fn tpq(p: u32, q: u32) -> Result<ThreePagePresentation> {
    check_normalized(p, q)?;
    let n = 2 * p + 2 * q - 2;
    let main: Vec<_> = fam(1, 2 * q - 1, q - 1).chain(fam(2 * q, n, p - 1)).collect();
    let band: Vec<_> = fam(q - p + 1, 2 * q + p - 1, p).collect();
    let under: Vec<_> = fam(1, 2 * q - p - 1, q - p).chain(fam(2 * q - p, n, p)).collect();
    Ok(assemble(n, [main, band, under]))
}

/// `T(p, q)` for `q >= 2p` with `2p + 2q - 3` arcs, page sizes
/// `(q - 1, q - 1, 2p - 1)`.
pub fn tpq_tight(p: u32, q: u32) -> Result<ThreePagePresentation> {
    check_normalized(p, q)?;
    if q < 2 * p {
        return Err(Error::Parameter(format!("tpq_tight needs q >= 2p (got p={p}, q={q})")));
    }
    let n = 2 * p + 2 * q - 3;
    let r = q - 2 * p;
    let first: Vec<_> = fam(1, 4 * p - 2, p).chain(fam(4 * p - 1, n, q - p - 1)).collect();
    let second: Vec<_> = fam(p, 5 * p - 2, 2 * p - 1).chain(fam(5 * p - 1, n, r)).collect();
    let third: Vec<_> = fam(1, 2 * p - 1, p - 1).chain(fam(2 * p, n - r, p)).collect();
    Ok(assemble(n, [first, second, third]))
}

/// Presentation for normalized parameters; swapping the two upper pages
/// realizes the mirror image.
pub fn construct(params: &TorusParams, tight: bool) -> Result<ThreePagePresentation> {
    let pres = if params.p == params.q {
        tnn(params.p)?
    } else if tight {
        tpq_tight(params.p, params.q)?
    } else {
        tpq(params.p, params.q)?
    };
    Ok(if params.mirror { pres.swap_pages(0, 2) } else { pres })
}

/// Outcome of comparing a presentation against the braid-closure oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub exact: bool,
    pub up_to_mirror: bool,
}

pub fn verify(pres: &ThreePagePresentation, params: &TorusParams) -> Result<Verification> {
    let got = InvariantProfile::of_presentation(pres)?;
    let want = params.oracle_profile()?;
    Ok(Verification { exact: got == want, up_to_mirror: got.equal_up_to_mirror(&want) })
}

/// Known values and bounds for `T(p, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub p: u32,
    pub q: u32,
    pub components: u32,
    /// `p + q`.
    pub arc_index: u32,
    /// `min(p, q)`, external.
    pub bridge_number: u32,
    /// `3 · min(p, q)`, a lower bound for the three-page index.
    pub bridge_bound: u32,
    /// `2p + 2q - 2`.
    pub upper_general: u32,
    /// `2p + 2q - 3` when `q >= 2p`.
    pub upper_tight: Option<u32>,
    /// `4n - 2` when `p = q = n`.
    pub exact: Option<u32>,
}

impl BoundsReport {
    /// Best known upper bound (the exact value when known).
    pub fn best_upper(&self) -> u32 {
        self.exact.or(self.upper_tight).unwrap_or(self.upper_general)
    }

    /// Violated relations among the fields; empty when consistent.
    pub fn check(&self) -> Vec<String> {
        let mut bad = Vec::new();
        let uppers = [Some(self.upper_general), self.upper_tight, self.exact];
        for u in uppers.into_iter().flatten() {
            if self.bridge_bound > u {
                bad.push(format!("bridge bound {} exceeds upper bound {u}", self.bridge_bound));
            }
            if self.arc_index > u {
                bad.push(format!("arc index {} exceeds upper bound {u}", self.arc_index));
            }
        }
        if self.upper_general != 2 * self.arc_index - 2 {
            bad.push("upper_general differs from 2·arc_index - 2".into());
        }
        if let Some(t) = self.upper_tight {
            if t != 2 * self.arc_index - 3 {
                bad.push("upper_tight differs from 2·arc_index - 3".into());
            }
        }
        bad
    }
}

pub fn bounds(p: u32, q: u32) -> Result<BoundsReport> {
    check_normalized(p, q)?;
    Ok(BoundsReport {
        p,
        q,
        components: gcd(p, q),
        arc_index: p + q,
        bridge_number: p,
        bridge_bound: 3 * p,
        upper_general: 2 * p + 2 * q - 2,
        upper_tight: (q >= 2 * p).then_some(2 * p + 2 * q - 3),
        exact: (p == q).then_some(4 * p - 2),
    })
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<u32>| v.map_or("-".to_string(), |x| x.to_string());
        writeln!(f, "torus link      T({},{})", self.p, self.q)?;
        writeln!(f, "components      {}", self.components)?;
        writeln!(f, "arc_index       {}", self.arc_index)?;
        writeln!(f, "bridge_number   {}", self.bridge_number)?;
        writeln!(f, "bridge_bound    {}", self.bridge_bound)?;
        writeln!(f, "upper_general   {}", self.upper_general)?;
        writeln!(f, "upper_tight     {}", opt(self.upper_tight))?;
        writeln!(f, "exact           {}", opt(self.exact))?;
        write!(f, "relations       arc_index <= alpha3, 3*bridge <= alpha3")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: [usize; 3]) -> [usize; 3] {
        v.sort();
        v
    }

    #[test]
    fn tnn_shapes() {
        for n in 2..=6 {
            let t = tnn(n).unwrap();
            assert_eq!(t.arc_count(), (4 * n - 2) as usize);
            assert_eq!(t.page_sizes(), [2 * (n as usize - 1), n as usize, n as usize]);
            assert_eq!(t.components().cycles.len(), n as usize);
        }
        assert_eq!(tnn(4).unwrap().page_sizes(), [6, 4, 4]);
        assert!(tnn(1).is_err());
    }

    #[test]
    fn tnn2_is_six_arc_hopf() {
        let hopf = ThreePagePresentation::new(6, [&[(1, 3), (4, 6)], &[(2, 6), (3, 5)], &[(1, 5), (2, 4)]]).unwrap();
        let a = InvariantProfile::of_presentation(&tnn(2).unwrap()).unwrap();
        assert_eq!(a, InvariantProfile::of_presentation(&hopf).unwrap());
        assert_eq!(tpq(2, 2).unwrap(), tnn(2).unwrap());
    }

    #[test]
    fn positive_chirality() {
        for (p, q) in [(2, 3), (2, 2), (3, 3), (3, 4), (2, 5)] {
            let params = TorusParams::new(p as i64, q as i64).unwrap();
            let v = verify(&construct(&params, false).unwrap(), &params).unwrap();
            assert!(v.exact, "({p},{q})");
        }
        for (p, q) in [(2, 4), (2, 5), (3, 6)] {
            let params = TorusParams::new(p as i64, q as i64).unwrap();
            assert!(verify(&construct(&params, true).unwrap(), &params).unwrap().exact);
        }
    }

    #[test]
    fn mirror_flag() {
        let params = TorusParams::new(-2, 3).unwrap();
        assert!(params.mirror);
        let v = verify(&construct(&params, false).unwrap(), &params).unwrap();
        assert!(v.exact);
        let plain = TorusParams::new(3, 2).unwrap();
        assert_eq!((plain.p, plain.q, plain.mirror), (2, 3, false));
        assert!(!TorusParams::new(-3, -2).unwrap().mirror);
        assert!(TorusParams::new(1, 5).is_err());
    }

    #[test]
    fn general_counts_and_oracle() {
        for p in 2..=4 {
            for q in p..=p + 3 {
                let t = tpq(p, q).unwrap();
                assert_eq!(t.arc_count() as u32, 2 * p + 2 * q - 2);
                assert!(t.page_sizes().iter().all(|&s| s >= p as usize));
                let params = TorusParams { p, q, mirror: false };
                assert!(verify(&t, &params).unwrap().exact, "({p},{q})");
            }
        }
    }

    #[test]
    fn tight_counts_and_oracle() {
        for p in 2..=4 {
            for q in 2 * p..=2 * p + 3 {
                let t = tpq_tight(p, q).unwrap();
                let (pu, qu) = (p as usize, q as usize);
                assert_eq!(t.arc_count(), 2 * pu + 2 * qu - 3);
                assert_eq!(t.page_sizes(), [qu - 1, qu - 1, 2 * pu - 1]);
                assert_eq!(t.components().cycles.len(), gcd(p, q) as usize);
                let params = TorusParams { p, q, mirror: false };
                assert!(verify(&t, &params).unwrap().exact, "({p},{q})");
            }
        }
        assert_eq!(sorted(tpq_tight(2, 4).unwrap().page_sizes()), [3, 3, 3]);
        assert!(tpq_tight(3, 5).is_err());
    }

    #[test]
    fn bounds_table() {
        let b = bounds(2, 2).unwrap();
        assert_eq!((b.arc_index, b.bridge_bound, b.exact), (4, 6, Some(6)));
        let b = bounds(2, 3).unwrap();
        assert_eq!((b.arc_index, b.bridge_bound, b.upper_general, b.upper_tight), (5, 6, 8, None));
        assert_eq!(bounds(2, 5).unwrap().upper_tight, Some(11));
        for p in 2..8 {
            for q in p..20 {
                assert!(bounds(p, q).unwrap().check().is_empty());
            }
        }
        assert!(bounds(3, 2).is_err());
    }
}
