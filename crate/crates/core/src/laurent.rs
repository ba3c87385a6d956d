//! Sparse Laurent polynomials in two variables `q`, `t` with integer
//! coefficients.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// Exponent pair `(a, b)` for the monomial `q^a t^b`.
pub type Exponents = (i32, i32);

/// Terms are kept sorted by exponent with no zero coefficients, so structural
/// equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2 {
    terms: Vec<(Exponents, i128)>,
}

fn checked(c: Option<i128>) -> i128 {
    c.expect("Laurent polynomial coefficient overflow")
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        LaurentPoly2 { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `coeff · q^a t^b`.
    pub fn monomial(coeff: i128, a: i32, b: i32) -> Self {
        if coeff == 0 {
            Self::zero()
        } else {
            LaurentPoly2 {
                terms: alloc::vec![((a, b), coeff)],
            }
        }
    }

    /// `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    /// `t`.
    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn constant(c: i128) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// Builds from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Exponents, i128)>>(terms: I) -> Self {
        let mut v: Vec<(Exponents, i128)> = terms.into_iter().collect();
        v.sort_unstable_by_key(|t| t.0);
        let mut out: Vec<(Exponents, i128)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = checked(lc.checked_add(c)),
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        LaurentPoly2 { terms: out }
    }

    pub fn terms(&self) -> &[(Exponents, i128)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0] == ((0, 0), 1)
    }

    /// Units of `ℤ[q^±, t^±]` are `±q^a t^b`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && (self.terms[0].1 == 1 || self.terms[0].1 == -1)
    }

    /// Inverse of a unit.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let ((a, b), c) = self.terms[0];
        Some(Self::monomial(c, -a, -b))
    }

    /// Multiplies by `coeff · q^a t^b` without re-sorting.
    pub fn scale(&self, coeff: i128, a: i32, b: i32) -> Self {
        if coeff == 0 {
            return Self::zero();
        }
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|&((x, y), c)| ((x + a, y + b), checked(c.checked_mul(coeff))))
                .collect(),
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn merge(&self, other: &Self, sign: i128) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                core::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push((b[j].0, checked(b[j].1.checked_mul(sign))));
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let c = checked(a[i].1.checked_add(checked(b[j].1.checked_mul(sign))));
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(e, c)| (e, checked(c.checked_mul(sign)))));
        LaurentPoly2 { terms: out }
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        self.merge(rhs, 1)
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        self.merge(rhs, -1)
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        self.scale(-1, 0, 0)
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly2::zero();
        }
        if rhs.terms.len() == 1 {
            let ((a, b), c) = rhs.terms[0];
            return self.scale(c, a, b);
        }
        if self.terms.len() == 1 {
            let ((a, b), c) = self.terms[0];
            return rhs.scale(c, a, b);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for &((a1, b1), c1) in &self.terms {
            for &((a2, b2), c2) in &rhs.terms {
                prods.push(((a1 + a2, b1 + b2), checked(c1.checked_mul(c2))));
            }
        }
        LaurentPoly2::from_terms(prods)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly2 {
            type Output = LaurentPoly2;
            fn $m(self, rhs: LaurentPoly2) -> LaurentPoly2 { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for LaurentPoly2 {
    /// Terms in increasing exponent order, e.g. `-q^2*t + 1 - q^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (k, &((a, b), c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if k == 0 {
                if c < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if c < 0 { " - " } else { " + " });
            }
            let mut parts: Vec<String> = Vec::new();
            if mag != 1 || (a == 0 && b == 0) {
                parts.push(alloc::format!("{mag}"));
            }
            match a {
                0 => {}
                1 => parts.push("q".into()),
                _ => parts.push(alloc::format!("q^{a}")),
            }
            match b {
                0 => {}
                1 => parts.push("t".into()),
                _ => parts.push(alloc::format!("t^{b}")),
            }
            s.push_str(&parts.join("*"));
        }
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_cancels_exactly() {
        let q = LaurentPoly2::q();
        let one = LaurentPoly2::one();
        let a = &q - &one; // q - 1
        let b = &q + &one; // q + 1
        let prod = &a * &b; // q^2 - 1
        assert_eq!(prod, &LaurentPoly2::monomial(1, 2, 0) - &one);
        assert!((&prod - &prod).is_zero());
    }

    #[test]
    fn units_and_inverses() {
        let u = LaurentPoly2::monomial(-1, 4, 1);
        assert!(u.is_unit());
        assert!((&u * &u.unit_inverse().unwrap()).is_one());
        assert!(!LaurentPoly2::constant(2).is_unit());
        assert!(!(&LaurentPoly2::q() + &LaurentPoly2::t()).is_unit());
    }

    #[test]
    fn display_form() {
        let p = LaurentPoly2::from_terms([((2, 1), -1), ((0, 0), 1), ((-1, 0), -3)]);
        assert_eq!(alloc::format!("{p}"), "-3*q^-1 + 1 - q^2*t");
        assert_eq!(alloc::format!("{}", LaurentPoly2::zero()), "0");
    }

    #[test]
    fn from_terms_merges_and_drops_zero() {
        let p = LaurentPoly2::from_terms([((1, 1), 2), ((1, 1), -2), ((0, 3), 5)]);
        assert_eq!(p.terms(), &[((0, 3), 5)]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly() -> impl Strategy<Value = LaurentPoly2> {
            prop::collection::vec(((-3i32..4, -2i32..3), -5i128..6), 0..6).prop_map(LaurentPoly2::from_terms)
        }

        proptest! {
            #[test]
            fn ring_laws(a in poly(), b in poly(), c in poly()) {
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&(&a + &b) - &b, a.clone());
            }
        }
    }
}
