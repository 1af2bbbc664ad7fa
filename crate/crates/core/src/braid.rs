//! Braid words, torus braids and the word identities used to turn torus
//! braids into three-page presentations.
//!
//! `s<i>` (written σ_i) is the crossing where strand `i + 1` passes over
//! strand `i`; `-s<i>` is its inverse.

use std::fmt;

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::profile::InvariantProfile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    /// Generator index, `1..strands`.
    pub index: u32,
    pub positive: bool,
}

impl Letter {
    pub fn pos(index: u32) -> Self {
        Letter { index, positive: true }
    }

    pub fn neg(index: u32) -> Self {
        Letter { index, positive: false }
    }

    pub fn exponent(&self) -> i64 {
        if self.positive {
            1
        } else {
            -1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: u32,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: u32, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Parameter("a braid needs at least one strand".into()));
        }
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(Error::GeneratorOutOfRange { index: l.index, strands });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Positive word from generator indices.
    pub fn positive(strands: u32, indices: impl IntoIterator<Item = u32>) -> Result<Self> {
        Self::new(strands, indices.into_iter().map(Letter::pos).collect())
    }

    /// Parses `s1 s2 s1 -s2`.
    pub fn parse(strands: u32, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (positive, rest) = match tok.strip_prefix('-') {
                Some(r) => (false, r),
                None => (true, tok),
            };
            let idx = rest
                .strip_prefix('s')
                .and_then(|d| d.parse::<u32>().ok())
                .ok_or_else(|| Error::Parse(format!("bad braid letter `{tok}`")))?;
            letters.push(Letter { index: idx, positive });
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(Letter::exponent).sum()
    }

    /// Concatenation; panics on strand mismatch.
    pub fn then(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    pub fn power(&self, k: u32) -> BraidWord {
        let mut letters = Vec::with_capacity(self.letters.len() * k as usize);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Word with every letter inverted (the mirror braid).
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| Letter { index: l.index, positive: !l.positive }).collect(),
        }
    }

    /// `perm[k]` is the final position (0-based) of the strand that starts at
    /// position `k`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands as usize).collect(); // at[pos] = strand
        for l in &self.letters {
            at.swap(l.index as usize - 1, l.index as usize);
        }
        let mut perm = vec![0; at.len()];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Number of cycles of the permutation, which is the number of
    /// components of the closure.
    pub fn cycle_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for s in 0..perm.len() {
            if !seen[s] {
                cycles += 1;
                let mut k = s;
                while !seen[k] {
                    seen[k] = true;
                    k = perm[k];
                }
            }
        }
        cycles
    }

    pub fn closure(&self) -> PlanarDiagram {
        PlanarDiagram::braid_closure(self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if !l.positive {
                f.write_str("-")?;
            }
            write!(f, "s{}", l.index)?;
        }
        Ok(())
    }
}

/// `(σ_lo σ_{lo+1} … σ_hi)`; empty if `hi < lo`.
fn ascending(strands: u32, lo: u32, hi: u32) -> BraidWord {
    BraidWord { strands, letters: (lo..=hi).map(Letter::pos).collect() }
}

/// `(σ_hi σ_{hi-1} … σ_lo)`; empty if `hi < lo`.
fn descending(strands: u32, hi: u32, lo: u32) -> BraidWord {
    BraidWord { strands, letters: (lo..=hi).rev().map(Letter::pos).collect() }
}

/// `(σ1 σ2 … σ_{q-1})^p` on `q` strands.
pub fn torus_braid(p: u32, q: u32) -> Result<BraidWord> {
    if q < 2 || p < 1 {
        return Err(Error::Parameter(format!("torus_braid needs q >= 2, p >= 1 (got p={p}, q={q})")));
    }
    Ok(ascending(q, 1, q - 1).power(p))
}

/// `(σ1 σ2 … σ_{p-1})^q` on `p` strands.
pub fn torus_braid_small(p: u32, q: u32) -> Result<BraidWord> {
    if p < 2 || q < 1 {
        return Err(Error::Parameter(format!("torus_braid_small needs p >= 2, q >= 1 (got p={p}, q={q})")));
    }
    Ok(ascending(p, 1, p - 1).power(q))
}

/// Full twist `(σ_lo … σ_{lo+k-2})^k` on the `k` strands starting at
/// position `lo`.
pub fn full_twist(strands: u32, lo: u32, k: u32) -> BraidWord {
    ascending(strands, lo, lo + k - 2).power(k)
}

/// The left block of `p` strands passing under the remaining `q - p`
/// strands: `(σ_p … σ_1)(σ_{p+1} … σ_2) ⋯ (σ_{q-1} … σ_{q-p})`.
pub fn block_crossing(p: u32, q: u32) -> BraidWord {
    let mut w = BraidWord { strands: q, letters: Vec::new() };
    for j in 1..=q - p {
        w = w.then(&descending(q, p + j - 1, j));
    }
    w
}

/// Right-hand side of the first torus-braid identity: the full twist on
/// the first `p` strands followed by the block crossing,
/// `(σ1…σ_{p-1})^p (σ_p…σ_1)(σ_{p+1}…σ_2)⋯(σ_{q-1}…σ_{q-p})`.
pub fn twist_then_block(p: u32, q: u32) -> Result<BraidWord> {
    if !(2 <= p && p < q) {
        return Err(Error::Parameter(format!("need 2 <= p < q (got p={p}, q={q})")));
    }
    Ok(full_twist(q, 1, p).then(&block_crossing(p, q)))
}

/// Right-hand side of the second identity: block crossing followed by the
/// full twist on the last `p` strands,
/// `(σ_p…σ_1)⋯(σ_{q-1}…σ_{q-p}) (σ_{q-p+1} … σ_{q-1})^p`.
pub fn block_then_twist(p: u32, q: u32) -> Result<BraidWord> {
    if !(2 <= p && p < q) {
        return Err(Error::Parameter(format!("need 2 <= p < q (got p={p}, q={q})")));
    }
    Ok(block_crossing(p, q).then(&full_twist(q, q - p + 1, p)))
}

/// `(σ1…σ_{p-1})^{⌊q/p⌋p} (σ1…σ_{p-1})^{q-⌊q/p⌋p}`: whole full twists
/// followed by the remainder, on `p` strands.
pub fn twists_then_remainder(p: u32, q: u32) -> Result<BraidWord> {
    let twists = torus_braid_small(p, (q / p) * p)?;
    let rest = ascending(p, 1, p - 1).power(q - (q / p) * p);
    Ok(twists.then(&rest))
}

/// Evidence that two words represent the same braid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationReport {
    pub permutation_equal: bool,
    pub exponent_sum_equal: bool,
    pub profile_equal: bool,
}

impl FactorizationReport {
    pub fn passed(&self) -> bool {
        self.permutation_equal && self.exponent_sum_equal && self.profile_equal
    }
}

impl fmt::Display for FactorizationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pf = |b: bool| if b { "PASS" } else { "FAIL" };
        write!(
            f,
            "permutation {}\nexponent-sum {}\nclosure-profile {}",
            pf(self.permutation_equal),
            pf(self.exponent_sum_equal),
            pf(self.profile_equal)
        )
    }
}

/// Compares permutations, exponent sums and closure profiles. This is
/// evidence, not a solution of the word problem.
pub fn verify_factorization(lhs: &BraidWord, rhs: &BraidWord) -> Result<FactorizationReport> {
    if lhs.strands != rhs.strands {
        return Err(Error::StrandMismatch(lhs.strands, rhs.strands));
    }
    let pl = InvariantProfile::of_diagram(&lhs.closure())?;
    let pr = InvariantProfile::of_diagram(&rhs.closure())?;
    Ok(FactorizationReport {
        permutation_equal: lhs.permutation() == rhs.permutation(),
        exponent_sum_equal: lhs.exponent_sum() == rhs.exponent_sum(),
        profile_equal: pl == pr,
    })
}

pub fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_words() {
        let hopf = torus_braid(2, 2).unwrap();
        assert_eq!(hopf.to_string(), "s1 s1");
        assert_eq!(hopf.strands(), 2);
        let t23 = torus_braid(2, 3).unwrap();
        assert_eq!(t23.to_string(), "s1 s2 s1 s2");
        assert_eq!(torus_braid(3, 3).unwrap().len(), 6);
        assert_eq!(torus_braid_small(2, 3).unwrap().to_string(), "s1 s1 s1");
        assert_eq!(torus_braid_small(3, 4).unwrap().len(), 8);
        assert!(torus_braid(1, 1).is_err());
        assert!(torus_braid_small(1, 3).is_err());
    }

    #[test]
    fn lengths_and_exponent_sums() {
        for p in 1..6 {
            for q in 2..7 {
                let w = torus_braid(p, q).unwrap();
                assert_eq!(w.len() as u32, p * (q - 1));
                assert_eq!(w.exponent_sum(), (p * (q - 1)) as i64);
            }
        }
    }

    #[test]
    fn cycle_counts_follow_gcd() {
        for p in 2..=7 {
            for q in p..=7 {
                assert_eq!(torus_braid(p, q).unwrap().cycle_count() as u32, gcd(p, q), "T({p},{q})");
            }
        }
    }

    #[test]
    fn small_permutations() {
        let e = BraidWord::new(3, vec![]).unwrap();
        assert_eq!(e.permutation(), vec![0, 1, 2]);
        assert_eq!(e.cycle_count(), 3);
        let s = BraidWord::positive(2, [1]).unwrap();
        assert_eq!(s.permutation(), vec![1, 0]);
        assert_eq!(s.cycle_count(), 1);
    }

    #[test]
    fn parse_and_print() {
        let w = BraidWord::parse(3, "s1 s2 s1 -s2").unwrap();
        assert_eq!(w.to_string(), "s1 s2 s1 -s2");
        assert_eq!(w.exponent_sum(), 2);
        assert!(matches!(
            BraidWord::parse(2, "s2"),
            Err(Error::GeneratorOutOfRange { index: 2, strands: 2 })
        ));
        assert!(BraidWord::parse(2, "x1").is_err());
    }

    #[test]
    fn identity_words_have_the_right_shape() {
        // at (3,5) the block crossing is (σ3σ2σ1)(σ4σ3σ2)
        assert_eq!(block_crossing(3, 5).to_string(), "s3 s2 s1 s4 s3 s2");
        assert_eq!(twist_then_block(3, 5).unwrap().len(), torus_braid(3, 5).unwrap().len());
        assert_eq!(
            block_then_twist(2, 5).unwrap().to_string(),
            "s2 s1 s3 s2 s4 s3 s4 s4"
        );
        assert_eq!(twists_then_remainder(3, 7).unwrap(), torus_braid_small(3, 7).unwrap());
    }

    #[test]
    fn factorizations_verify() {
        let r = verify_factorization(&torus_braid(3, 5).unwrap(), &twist_then_block(3, 5).unwrap()).unwrap();
        assert!(r.passed(), "{r}");
        let r = verify_factorization(&torus_braid(2, 5).unwrap(), &block_then_twist(2, 5).unwrap()).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn inverse_letter_fails_exponent_check() {
        let a = BraidWord::parse(2, "s1").unwrap();
        let b = BraidWord::parse(2, "-s1").unwrap();
        let r = verify_factorization(&a, &b).unwrap();
        assert!(r.permutation_equal);
        assert!(!r.exponent_sum_equal);
        assert!(!r.passed());
        assert!(verify_factorization(&a, &BraidWord::parse(3, "s1").unwrap()).is_err());
    }
}
