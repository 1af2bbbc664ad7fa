//! Integer Laurent polynomials in the bracket variable `A`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A Laurent polynomial with integer coefficients, stored sparsely.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff * A^exp`.
    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, exp);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(c, e);
        }
        p
    }

    /// The loop value `-A^2 - A^-2`.
    pub fn delta() -> Self {
        Self::from_terms([(2, -1), (-2, -1)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, coeff: i64, exp: i32) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies by `coeff * A^exp`.
    pub fn scale(&self, coeff: i64, exp: i32) -> Self {
        if coeff == 0 {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e + exp, c * coeff)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `A -> A^-1`.
    pub fn mirror(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Exact division; `None` if `divisor` is zero or does not divide `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let (d_lo, d_lead) = divisor.terms().next()?;
        let d_hi = divisor.max_exp()?;
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        // cancel lowest-degree terms; quotient exponents are bounded above
        let q_max = self.max_exp().unwrap_or(0) - d_hi;
        loop {
            let Some((e, c)) = rem.terms().next() else { break };
            let qe = e - d_lo;
            if qe > q_max || c % d_lead != 0 {
                return None;
            }
            let qc = c / d_lead;
            quot.add_term(qc, qe);
            rem = &rem - &divisor.scale(qc, qe);
        }
        Some(quot)
    }

    /// Renders the polynomial in `t = A^-4`. Exponents of `A` in a
    /// normalized Jones polynomial are even; odd exponents are an error.
    /// Half-integer powers of `t` (even-component links) print as `t^k/2`.
    pub fn to_t_string(&self) -> Result<String, String> {
        if let Some((e, _)) = self.terms().find(|(e, _)| e % 2 != 0) {
            return Err(format!("exponent A^{e} is odd; not a normalized Jones polynomial"));
        }
        if self.is_zero() {
            return Ok("0".into());
        }
        // t-exponent in halves: A^e = t^(-e/4) = t^((-e/2)/2)
        let mut terms: Vec<(i32, i64)> = self.terms().map(|(e, c)| (-e / 2, c)).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out = String::new();
        for (i, (halves, c)) in terms.into_iter().enumerate() {
            let exp = if halves % 2 == 0 {
                format!("{}", halves / 2)
            } else {
                format!("{halves}/2")
            };
            write_term(&mut out, i == 0, c, "t", halves == 0, &exp, halves == 2);
        }
        Ok(out)
    }
}

fn write_term(out: &mut String, first: bool, c: i64, var: &str, constant: bool, exp: &str, unit_exp: bool) {
    let mag = c.unsigned_abs();
    if first {
        if c < 0 {
            out.push('-');
        }
    } else {
        out.push_str(if c < 0 { " - " } else { " + " });
    }
    if constant {
        out.push_str(&mag.to_string());
        return;
    }
    if mag != 1 {
        out.push_str(&mag.to_string());
    }
    out.push_str(var);
    if !unit_exp {
        out.push('^');
        out.push_str(exp);
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending exponents with explicit signs, e.g. `-A^4 - A^-4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().rev().enumerate() {
            write_term(&mut out, i == 0, c, "A", e == 0, &e.to_string(), e == 1);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(c, e);
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(-c, e);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1, 0)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1, 0)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display_format() {
        let p = LaurentPoly::from_terms([(4, -1), (-4, -1)]);
        assert_eq!(p.to_string(), "-A^4 - A^-4");
        assert_eq!(LaurentPoly::one().to_string(), "1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let q = LaurentPoly::from_terms([(1, 2), (0, -3), (-1, 1)]);
        assert_eq!(q.to_string(), "2A - 3 + A^-1");
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut p = LaurentPoly::monomial(3, 2);
        p.add_term(-3, 2);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPoly::zero());
    }

    #[test]
    fn delta_squared() {
        let d2 = LaurentPoly::delta().pow(2);
        assert_eq!(d2, LaurentPoly::from_terms([(4, 1), (0, 2), (-4, 1)]));
    }

    #[test]
    fn divide_by_delta() {
        let p = &LaurentPoly::delta() * &LaurentPoly::from_terms([(7, 1), (-3, -2)]);
        assert_eq!(
            p.div_exact(&LaurentPoly::delta()),
            Some(LaurentPoly::from_terms([(7, 1), (-3, -2)]))
        );
        assert_eq!(LaurentPoly::one().div_exact(&LaurentPoly::delta()), None);
    }

    #[test]
    fn t_printing() {
        // trefoil A^-4 + A^-12 - A^-16  ->  t + t^3 - t^4
        let f = LaurentPoly::from_terms([(-4, 1), (-12, 1), (-16, -1)]);
        assert_eq!(f.to_t_string().unwrap(), "-t^4 + t^3 + t");
        // Hopf -A^2 - A^10  ->  -t^-1/2 - t^-5/2
        let h = LaurentPoly::from_terms([(2, -1), (10, -1)]);
        assert_eq!(h.to_t_string().unwrap(), "-t^-1/2 - t^-5/2");
        assert!(LaurentPoly::monomial(1, 3).to_t_string().is_err());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-12i32..12, -5i64..5), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).mirror(), &a.mirror() * &b.mirror());
        }

        #[test]
        fn exact_division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }
    }
}
