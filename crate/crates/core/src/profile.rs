//! Orientation-free identification records for links.
//!
//! A profile holds the component count, the multiset of absolute pairwise
//! linking numbers and the set of Jones polynomials over all orientation
//! assignments. Equal profiles do not prove two links equal; the record is
//! only as discriminating as those invariants.

use std::collections::BTreeSet;
use std::fmt;

use crate::bracket::{bracket_skein_with_limit, normalize, DEFAULT_SKEIN_LIMIT};
use crate::diagram::{Orientation, PlanarDiagram};
use crate::error::Result;
use crate::poly::LaurentPoly;
use crate::presentation::ThreePagePresentation;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InvariantProfile {
    pub component_count: usize,
    /// `|lk(i, j)|` over pairs `i < j`, sorted.
    pub abs_linking: Vec<i64>,
    pub jones_set: BTreeSet<LaurentPoly>,
}

impl InvariantProfile {
    pub fn of_diagram(d: &PlanarDiagram) -> Result<Self> {
        Self::of_diagram_with_limit(d, DEFAULT_SKEIN_LIMIT)
    }

    pub fn of_diagram_with_limit(d: &PlanarDiagram, limit: usize) -> Result<Self> {
        let k = d.component_count();
        let bracket = bracket_skein_with_limit(d, limit)?;
        let lk = d.linking_matrix(&Orientation::base(k));
        let mut abs_linking = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                abs_linking.push(lk[i][j].abs());
            }
        }
        abs_linking.sort();
        // reversing every component leaves the writhe unchanged
        let jones_set = Orientation::all(k)
            .filter(|o| o.0.first() != Some(&true))
            .map(|o| normalize(&bracket, d.writhe(&o)))
            .collect();
        Ok(InvariantProfile { component_count: k, abs_linking, jones_set })
    }

    pub fn of_presentation(p: &ThreePagePresentation) -> Result<Self> {
        Self::of_diagram(&PlanarDiagram::project(p))
    }

    /// Profile of the `k`-component unlink.
    pub fn unlink(k: usize) -> Self {
        InvariantProfile {
            component_count: k,
            abs_linking: vec![0; k * k.saturating_sub(1) / 2],
            jones_set: [LaurentPoly::delta().pow(k as u32 - 1)].into_iter().collect(),
        }
    }

    pub fn mirror(&self) -> Self {
        InvariantProfile {
            component_count: self.component_count,
            abs_linking: self.abs_linking.clone(),
            jones_set: self.jones_set.iter().map(LaurentPoly::mirror).collect(),
        }
    }

    /// Equal as is, or after `A -> A^-1` on every Jones polynomial of one side.
    pub fn equal_up_to_mirror(&self, other: &Self) -> bool {
        self == other || *self == other.mirror()
    }

    /// Representative of the mirror class: the smaller of the profile and
    /// its mirror.
    pub fn mirror_class(&self) -> Self {
        let m = self.mirror();
        if m < *self {
            m
        } else {
            self.clone()
        }
    }

    /// Every Jones polynomial in the set is that of the unlink with the
    /// same number of components.
    pub fn is_unlink_like(&self) -> bool {
        *self == Self::unlink(self.component_count)
    }

    /// `jones={p1, p2, ...}` in set order.
    pub fn jones_string(&self) -> String {
        let parts: Vec<String> = self.jones_set.iter().map(|p| p.to_string()).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

pub fn equal_up_to_mirror(a: &InvariantProfile, b: &InvariantProfile) -> bool {
    a.equal_up_to_mirror(b)
}

impl fmt::Display for InvariantProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lk: Vec<String> = self.abs_linking.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "components={} | |lk|={{{}}} | jones={}",
            self.component_count,
            lk.join(","),
            self.jones_string()
        )
    }
}
