//! Exact sparse Laurent-polynomial and rational-function arithmetic over
//! arbitrary-precision integers.
//!
//! Everything downstream is built on two value types:
//!
//! - [`LaurentPoly`]: a sparse polynomial in `q` with integer exponents of
//!   either sign and nonzero [`BigInt`] coefficients. The representation is
//!   canonical (no zero coefficients are ever stored), so structural equality
//!   is polynomial equality.
//! - [`RationalFn`]: a quotient of two Laurent polynomials kept in a canonical
//!   reduced form: numerator and denominator gcd-reduced over primitive
//!   integer polynomials, denominator anchored at exponent zero with positive
//!   leading coefficient. Two equal rational functions are structurally equal.
//!
//! All operations are pure and all values are immutable after construction,
//! so everything here is safe to share across threads.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors from polynomial and rational-function arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// Division by the zero polynomial.
    #[error("division by the zero polynomial")]
    DivisionByZero,
    /// `exact_div` was asked for a quotient that leaves a remainder, i.e. a
    /// claimed divisibility does not actually hold.
    #[error("nonzero remainder in exact polynomial division")]
    NonzeroRemainder,
    /// A rational function with a non-unit denominator was coerced to a
    /// polynomial.
    #[error("rational function is not a polynomial (denominator {denominator})")]
    NotPolynomial { denominator: String },
}

/// A sparse Laurent polynomial in `q` with exact integer coefficients.
///
/// Exponents may be negative. The zero polynomial is the empty term map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The single-term polynomial `coeff * q^exp` (zero if `coeff` is zero).
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let coeff: BigInt = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// Build a polynomial from `(exponent, coefficient)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_terms<C: Into<BigInt>>(iter: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut poly = Self::zero();
        for (exp, coeff) in iter {
            poly.add_term(exp, &coeff.into());
        }
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Coefficient of `q^exp` (zero when the term is absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Lowest exponent present, `None` for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent present, `None` for the zero polynomial.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Add `coeff * q^exp` in place, keeping the representation canonical.
    pub fn add_term(&mut self, exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(slot) => {
                slot.insert(coeff.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Multiply by the monomial `q^offset`.
    pub fn shifted(&self, offset: i64) -> Self {
        if offset == 0 {
            return self.clone();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.checked_add(offset).expect("exponent overflow"), c.clone()))
                .collect(),
        }
    }

    /// Multiply every coefficient by `factor`.
    pub fn scaled(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        if factor.is_one() {
            return self.clone();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * factor)).collect(),
        }
    }

    /// Divide every coefficient by `divisor`, which must divide all of them.
    fn scaled_div_exact(&self, divisor: &BigInt) -> Self {
        if divisor.is_one() {
            return self.clone();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let (quot, rem) = c.div_rem(divisor);
                    debug_assert!(rem.is_zero(), "content division must be exact");
                    (*e, quot)
                })
                .collect(),
        }
    }

    /// `self^exp` by repeated multiplication; `exp = 0` gives 1.
    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    /// Exact division in the Laurent-polynomial ring.
    ///
    /// Returns `c` with `self = divisor * c` when the division is exact, and
    /// `NonzeroRemainder` otherwise. Failed divisibility is used throughout as
    /// a correctness signal, never silently truncated.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Shift both operands to ordinary polynomials; monomials are units of
        // the Laurent ring, so the net shift moves onto the quotient.
        let shift_num = self.min_exp().unwrap();
        let shift_den = divisor.min_exp().unwrap();
        let mut rem = self.shifted(-shift_num);
        let den = divisor.shifted(-shift_den);
        let den_deg = den.max_exp().unwrap();
        let den_lead = den.coeff(den_deg);

        let mut quot = Self::zero();
        while let Some(rem_deg) = rem.max_exp() {
            if rem_deg < den_deg {
                break;
            }
            let (q_coeff, q_rem) = rem.coeff(rem_deg).div_rem(&den_lead);
            if !q_rem.is_zero() {
                return Err(PolyError::NonzeroRemainder);
            }
            let q_exp = rem_deg - den_deg;
            for (e, c) in den.terms.iter() {
                rem.add_term(e + q_exp, &(-(c * &q_coeff)));
            }
            quot.add_term(q_exp, &q_coeff);
        }
        if !rem.is_zero() {
            return Err(PolyError::NonzeroRemainder);
        }
        Ok(quot.shifted(shift_num - shift_den))
    }

    /// The base change `q -> q^b`: every exponent is multiplied by `b`.
    pub fn substitute_power(&self, b: u64) -> Self {
        assert!(b >= 1, "substitute_power requires a positive power");
        if b == 1 {
            return self.clone();
        }
        let b = b as i64;
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.checked_mul(b).expect("exponent overflow"), c.clone()))
                .collect(),
        }
    }

    /// Value at `q = 1`, i.e. the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Nonnegative gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.terms.values() {
            acc = acc.gcd(c);
            if acc.is_one() {
                break;
            }
        }
        acc
    }

    /// Leading (highest-exponent) coefficient; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> BigInt {
        self.max_exp().map_or_else(BigInt::zero, |e| self.coeff(e))
    }

    /// Shift to lowest exponent zero and divide out the content, returning
    /// the primitive part. Sign is preserved.
    fn primitive_ordinary(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let shifted = self.shifted(-self.min_exp().unwrap());
        let content = shifted.content();
        shifted.scaled_div_exact(&content)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, &(-c));
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        // Iterate the smaller operand on the outside.
        let (small, large) = if self.num_terms() <= rhs.num_terms() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = LaurentPoly::zero();
        for (e1, c1) in small.terms.iter() {
            for (e2, c2) in large.terms.iter() {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for p in iter {
            for (e, c) in p.terms.iter() {
                out.add_term(*e, c);
            }
        }
        out
    }
}

/// Canonical text rendering: terms in ascending exponent order, `c*q^e` with
/// `q^0` elided to the bare coefficient, `q^1` written `q`, and a coefficient
/// of 1 elided (`1 + 2*q + q^2`, `q^-3 + 1`). This format is a fixed contract
/// used by the CLI and golden tests.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, coeff) in self.terms() {
            if first {
                write!(f, "{}", term_text(coeff, exp))?;
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - {}", term_text(&-coeff, exp))?;
            } else {
                write!(f, " + {}", term_text(coeff, exp))?;
            }
        }
        Ok(())
    }
}

fn term_text(coeff: &BigInt, exp: i64) -> String {
    let base = match exp {
        0 => return coeff.to_string(),
        1 => "q".to_string(),
        e => format!("q^{e}"),
    };
    let magnitude_one = coeff.magnitude().is_one();
    if coeff.is_one() {
        base
    } else if magnitude_one && coeff.is_negative() {
        format!("-{base}")
    } else {
        format!("{coeff}*{base}")
    }
}

/// Gcd of the primitive parts of `a` and `b`.
///
/// The result is a primitive ordinary polynomial (lowest exponent zero) with
/// positive leading coefficient; contents and monomial factors of the inputs
/// are ignored, which is the right notion of gcd up to units of the Laurent
/// ring. Computed by a primitive pseudo-remainder sequence, so all arithmetic
/// stays in the integers.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let normalize = |p: LaurentPoly| {
        if p.leading_coeff().is_negative() {
            -&p
        } else {
            p
        }
    };
    if a.is_zero() {
        return normalize(b.primitive_ordinary());
    }
    if b.is_zero() {
        return normalize(a.primitive_ordinary());
    }
    let mut u = a.primitive_ordinary();
    let mut v = b.primitive_ordinary();
    while !v.is_zero() {
        let r = pseudo_rem(&u, &v);
        u = v;
        v = r.primitive_ordinary();
    }
    normalize(u)
}

/// Pseudo-remainder of ordinary polynomials: a scalar multiple of `a mod b`.
fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let b_deg = b.max_exp().expect("divisor must be nonzero");
    let b_lead = b.coeff(b_deg);
    let mut rem = a.clone();
    while let Some(r_deg) = rem.max_exp() {
        if r_deg < b_deg {
            break;
        }
        let r_lead = rem.coeff(r_deg);
        // lead-elimination step: rem <- b_lead*rem - r_lead*q^(r_deg-b_deg)*b
        rem = rem.scaled(&b_lead) - b.shifted(r_deg - b_deg).scaled(&r_lead);
    }
    rem
}

/// A canonical-form quotient of two Laurent polynomials.
///
/// Invariants (hence structural equality is mathematical equality):
/// the denominator is nonzero, has lowest exponent zero and positive leading
/// coefficient; numerator and denominator share no polynomial factor and the
/// residual integer contents are coprime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    /// Canonicalize `num / den`. Errors with `DivisionByZero` when `den = 0`.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, PolyError> {
        rf_normalize(num, den)
    }

    /// A polynomial viewed as a rational function (denominator 1).
    pub fn from_poly(poly: LaurentPoly) -> Self {
        Self {
            num: poly,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Extract the underlying polynomial, erroring with `NotPolynomial` when
    /// the canonical denominator is not 1. This is the assertion that a value
    /// claimed to be polynomial genuinely is.
    pub fn to_poly(&self) -> Result<LaurentPoly, PolyError> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(PolyError::NotPolynomial {
                denominator: self.den.to_string(),
            })
        }
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        let num = &self.num * &rhs.den + &rhs.num * &self.den;
        let den = &self.den * &rhs.den;
        rf_normalize(num, den).expect("denominators are nonzero")
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        let num = &self.num * &rhs.den - &rhs.num * &self.den;
        let den = &self.den * &rhs.den;
        rf_normalize(num, den).expect("denominators are nonzero")
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        rf_normalize(num, den).expect("denominators are nonzero")
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Reduce `num / den` to the canonical form described on [`RationalFn`].
///
/// The gcd is taken over primitive integer polynomials; the integer contents
/// are reduced by their own gcd, and the leftover monomial unit is absorbed
/// into the numerator so the denominator starts at exponent zero.
pub fn rf_normalize(num: LaurentPoly, den: LaurentPoly) -> Result<RationalFn, PolyError> {
    if den.is_zero() {
        return Err(PolyError::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(RationalFn {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        });
    }
    let num_shift = num.min_exp().unwrap();
    let den_shift = den.min_exp().unwrap();
    let num_ord = num.shifted(-num_shift);
    let den_ord = den.shifted(-den_shift);

    let num_content = num_ord.content();
    let den_content = den_ord.content();
    let num_prim = num_ord.scaled_div_exact(&num_content);
    let den_prim = den_ord.scaled_div_exact(&den_content);

    let gcd = poly_gcd(&num_prim, &den_prim);
    let mut num_red = num_prim.exact_div(&gcd).expect("gcd divides numerator");
    let mut den_red = den_prim.exact_div(&gcd).expect("gcd divides denominator");

    let content_gcd = num_content.gcd(&den_content);
    num_red = num_red.scaled(&(num_content / &content_gcd));
    den_red = den_red.scaled(&(den_content / &content_gcd));

    if den_red.leading_coeff().is_negative() {
        num_red = -&num_red;
        den_red = -&den_red;
    }
    Ok(RationalFn {
        num: num_red.shifted(num_shift - den_shift),
        den: den_red,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied().map(|(e, c)| (e, c)))
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(LaurentPoly::monomial(1, 0), LaurentPoly::one());
        assert!(LaurentPoly::monomial(0, 5).is_zero());
        assert_eq!(LaurentPoly::monomial(2, -3), poly(&[(-3, 2)]));
    }

    #[test]
    fn ring_arithmetic_examples() {
        let one_plus_q = poly(&[(0, 1), (1, 1)]);
        let one_minus_q = poly(&[(0, 1), (1, -1)]);
        assert_eq!(&one_plus_q * &one_minus_q, poly(&[(0, 1), (2, -1)]));
        assert_eq!(
            LaurentPoly::monomial(1, -3) * LaurentPoly::monomial(1, 5),
            LaurentPoly::monomial(1, 2)
        );
        assert!((&one_plus_q - &one_plus_q).is_zero());
    }

    #[test]
    fn exact_div_examples() {
        let num = poly(&[(0, 1), (4, -1)]); // 1 - q^4
        let den = poly(&[(0, 1), (1, -1)]); // 1 - q
        assert_eq!(
            num.exact_div(&den).unwrap(),
            poly(&[(0, 1), (1, 1), (2, 1), (3, 1)])
        );

        let num = poly(&[(0, 1), (3, -1)]); // 1 - q^3
        let den = poly(&[(0, 1), (1, 1)]); // 1 + q
        assert_eq!(num.exact_div(&den), Err(PolyError::NonzeroRemainder));

        let num = poly(&[(2, 1), (6, -1)]); // q^2 - q^6
        let den = LaurentPoly::monomial(1, 2);
        assert_eq!(num.exact_div(&den).unwrap(), poly(&[(0, 1), (4, -1)]));

        assert_eq!(
            poly(&[(0, 1)]).exact_div(&LaurentPoly::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn substitute_power_examples() {
        let one_plus_q = poly(&[(0, 1), (1, 1)]);
        assert_eq!(one_plus_q.substitute_power(2), poly(&[(0, 1), (2, 1)]));
        let p = poly(&[(-1, 2), (3, 5)]);
        assert_eq!(p.substitute_power(1), p);
        assert_eq!(
            poly(&[(0, 1), (1, 1), (2, 1)]).substitute_power(3),
            poly(&[(0, 1), (3, 1), (6, 1)])
        );
    }

    #[test]
    fn eval_at_one_examples() {
        assert_eq!(poly(&[(0, 1), (1, 2), (2, 1)]).eval_at_one(), BigInt::from(4));
        assert_eq!(LaurentPoly::zero().eval_at_one(), BigInt::zero());
        assert_eq!(poly(&[(-1, 1), (1, 1)]).eval_at_one(), BigInt::from(2));
    }

    #[test]
    fn rf_normalize_examples() {
        let rf = RationalFn::new(poly(&[(0, 1), (2, -1)]), poly(&[(0, 1), (1, -1)])).unwrap();
        assert_eq!(rf.num(), &poly(&[(0, 1), (1, 1)]));
        assert!(rf.den().is_one());

        let rf = RationalFn::new(poly(&[(0, 1), (1, 1)]), poly(&[(0, 1), (1, 1)])).unwrap();
        assert!(rf.num().is_one() && rf.den().is_one());

        // q^3*(1 - q) over q reduces to an honest polynomial q^2 - q^3.
        let rf = RationalFn::new(poly(&[(3, 1), (4, -1)]), LaurentPoly::monomial(1, 1)).unwrap();
        assert_eq!(rf.num(), &poly(&[(2, 1), (3, -1)]));
        assert!(rf.den().is_one());

        assert_eq!(
            RationalFn::new(LaurentPoly::one(), LaurentPoly::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn rf_normalize_keeps_residual_content_in_denominator() {
        let rf = RationalFn::new(poly(&[(0, 2), (1, 2)]), poly(&[(0, 4)])).unwrap();
        assert_eq!(rf.num(), &poly(&[(0, 1), (1, 1)]));
        assert_eq!(rf.den(), &poly(&[(0, 2)]));
    }

    #[test]
    fn rf_to_poly_examples() {
        let rf = RationalFn::from_poly(poly(&[(0, 1), (1, 1)]));
        assert_eq!(rf.to_poly().unwrap(), poly(&[(0, 1), (1, 1)]));

        let pole = RationalFn::new(LaurentPoly::one(), poly(&[(0, 1), (1, -1)])).unwrap();
        assert!(matches!(pole.to_poly(), Err(PolyError::NotPolynomial { .. })));

        // (1+q+q^2)(1+q^2+q^3) / (1+q+q^2) collapses to 1+q^2+q^3.
        let a = poly(&[(0, 1), (1, 1), (2, 1)]);
        let b = poly(&[(0, 1), (2, 1), (3, 1)]);
        let rf = RationalFn::new(&a * &b, a).unwrap();
        assert_eq!(rf.to_poly().unwrap(), b);
    }

    #[test]
    fn rational_arithmetic_recombines() {
        // 1/(1-q) - q/(1-q) = 1
        let one = LaurentPoly::one();
        let den = poly(&[(0, 1), (1, -1)]);
        let a = RationalFn::new(one.clone(), den.clone()).unwrap();
        let b = RationalFn::new(LaurentPoly::monomial(1, 1), den).unwrap();
        let diff = &a - &b;
        assert!(diff.to_poly().unwrap().is_one());
    }

    #[test]
    fn rendering_contract() {
        assert_eq!(poly(&[(0, 1), (1, 2), (2, 1)]).to_string(), "1 + 2*q + q^2");
        assert_eq!(poly(&[(-3, 1), (0, 1)]).to_string(), "q^-3 + 1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(poly(&[(0, 3), (1, -1)]).to_string(), "3 - q");
        assert_eq!(poly(&[(2, -1), (3, 1)]).to_string(), "-q^2 + q^3");
        assert_eq!(poly(&[(1, -4)]).to_string(), "-4*q");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-8i64..=8, -9i64..=9), 0..6)
            .prop_map(|terms| LaurentPoly::from_terms(terms))
    }

    proptest! {
        #[test]
        fn add_commutes(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn mul_commutes(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn add_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn mul_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn mul_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn sub_is_additive_inverse(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(&(&a - &b) + &b, a);
        }

        #[test]
        fn exact_div_roundtrip(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let product = &a * &b;
            prop_assert_eq!(product.exact_div(&b).unwrap(), a);
        }

        #[test]
        fn eval_at_one_is_multiplicative(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        }

        #[test]
        fn substitute_power_composes(a in arb_poly(), b in 1u64..5, c in 1u64..5) {
            prop_assert_eq!(
                a.substitute_power(b).substitute_power(c),
                a.substitute_power(b * c)
            );
        }

        #[test]
        fn rf_normalize_idempotent(n in arb_poly(), d in arb_poly()) {
            prop_assume!(!d.is_zero());
            let rf = RationalFn::new(n, d).unwrap();
            let again = RationalFn::new(rf.num().clone(), rf.den().clone()).unwrap();
            prop_assert_eq!(rf, again);
        }

        #[test]
        fn rf_cross_multiplication_consistency(n1 in arb_poly(), d1 in arb_poly(),
                                               n2 in arb_poly(), d2 in arb_poly()) {
            prop_assume!(!d1.is_zero() && !d2.is_zero());
            let a = RationalFn::new(n1.clone(), d1.clone()).unwrap();
            let b = RationalFn::new(n2.clone(), d2.clone()).unwrap();
            // a == b exactly when n1*d2 == n2*d1
            prop_assert_eq!(a == b, &n1 * &d2 == &n2 * &d1);
        }
    }
}
