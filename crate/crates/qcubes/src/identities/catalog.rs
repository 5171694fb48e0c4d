//! The identity catalog: one descriptor per identity, with exact builders
//! for both sides and the classical integer value at q = 1.
//!
//! Summations are performed term by term in exact arithmetic. Sides whose
//! summands carry explicit denominators are accumulated as rational
//! functions and only collapsed to polynomials at the very end; per-term
//! polynomiality is never assumed.

use num_bigint::BigInt;

use super::{IdentityDescriptor, IdentityError, Params};
use crate::qcalc::{gauss_binomial, q_int};
use crate::qpoly::{LaurentPoly, RationalFn};
use crate::telescope::{backward_sum, forward_sum, SequenceSpec};

type Built = Result<RationalFn, IdentityError>;

fn too_big() -> IdentityError {
    IdentityError::InvalidParams("parameter magnitude exceeds the supported exponent range".into())
}

fn ck_add(a: i64, b: i64) -> Result<i64, IdentityError> {
    a.checked_add(b).ok_or_else(too_big)
}

fn ck_mul(a: i64, b: i64) -> Result<i64, IdentityError> {
    a.checked_mul(b).ok_or_else(too_big)
}

fn ck_pow(base: i64, exp: i64) -> Result<i64, IdentityError> {
    let exp = u32::try_from(exp).map_err(|_| too_big())?;
    base.checked_pow(exp).ok_or_else(too_big)
}

fn tri(n: i64) -> Result<i64, IdentityError> {
    Ok(ck_mul(n, ck_add(n, 1)?)? / 2)
}

/// `[n]` in base q; `n` is validated nonnegative before builders run.
fn qi(n: i64) -> LaurentPoly {
    q_int(n as u64, 1)
}

/// `[n]` in base `q^b` with `b >= 1`.
fn qib(n: i64, b: i64) -> LaurentPoly {
    q_int(n as u64, b as u64)
}

fn gauss(n: i64, k: i64) -> LaurentPoly {
    gauss_binomial(n as u64, k)
}

fn mono(exp: i64) -> LaurentPoly {
    LaurentPoly::monomial(1, exp)
}

fn rf(poly: LaurentPoly) -> RationalFn {
    RationalFn::from_poly(poly)
}

fn big_pow(base: i64, exp: i64) -> BigInt {
    let mut acc = BigInt::from(1);
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

fn big_tri(n: i64) -> BigInt {
    BigInt::from(n) * BigInt::from(n + 1) / 2
}

fn big_binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

// ---------------------------------------------------------------------------
// validity predicates
// ---------------------------------------------------------------------------

fn v_n1(p: &Params) -> Result<(), String> {
    match p.get("n") {
        Ok(n) if n >= 1 => Ok(()),
        _ => Err("requires n >= 1".to_string()),
    }
}

fn v_n0(p: &Params) -> Result<(), String> {
    match p.get("n") {
        Ok(n) if n >= 0 => Ok(()),
        _ => Err("requires n >= 0".to_string()),
    }
}

fn v_n1_k1(p: &Params) -> Result<(), String> {
    v_n1(p)?;
    match p.get("k") {
        Ok(k) if k >= 1 => Ok(()),
        _ => Err("requires k >= 1".to_string()),
    }
}

fn v_n1_k0(p: &Params) -> Result<(), String> {
    v_n1(p)?;
    match p.get("k") {
        Ok(k) if k >= 0 => Ok(()),
        _ => Err("requires k >= 0".to_string()),
    }
}

fn v_n0_m0(p: &Params) -> Result<(), String> {
    v_n0(p)?;
    match p.get("m") {
        Ok(m) if m >= 0 => Ok(()),
        _ => Err("requires m >= 0".to_string()),
    }
}

fn v_n1_m0(p: &Params) -> Result<(), String> {
    v_n1(p)?;
    match p.get("m") {
        Ok(m) if m >= 0 => Ok(()),
        _ => Err("requires m >= 0".to_string()),
    }
}

// ---------------------------------------------------------------------------
// side builders
// ---------------------------------------------------------------------------

fn eq6_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let two = qi(2);
    let mut acc = RationalFn::zero();
    for k in 1..=n {
        let num = (qi(k).pow(2) * (qi(k - 1) + qi(k + 1))).shifted(k - 1);
        acc = &acc + &RationalFn::new(num, two.clone()).expect("[2] is nonzero");
    }
    Ok(acc)
}

fn gauss_n1_2_squared(p: &Params) -> Built {
    let n = p.get("n")?;
    Ok(rf(gauss(n + 1, 2).pow(2)))
}

fn eq7_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let mut acc = LaurentPoly::zero();
    for k in 1..=n {
        acc = acc + (qi(k).pow(2) * qib(k, 2)).shifted(2 * (n - k));
    }
    Ok(rf(acc))
}

fn eq8_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let den = LaurentPoly::one() - mono(2);
    let mut acc = RationalFn::zero();
    for k in 0..=n {
        let factor = LaurentPoly::one() + mono(2) + LaurentPoly::monomial(-2, k + 1);
        let num = (qi(k).pow(2) * factor).shifted(4 * (n - k));
        acc = &acc + &RationalFn::new(num, den.clone()).expect("1 - q^2 is nonzero");
    }
    Ok(acc)
}

fn eq10_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let t_n = tri(n)?;
    let mut acc = LaurentPoly::zero();
    for j in 1..=n {
        acc = acc + (qi(j) * qi(ck_mul(j, j)?)).shifted(t_n - tri(j)?);
    }
    Ok(rf(acc))
}

fn eq10_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    Ok(rf(qi(tri(n)?).pow(2)))
}

fn eq11_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let mut acc = LaurentPoly::zero();
    for k in 1..=n {
        acc = acc + qi(2 * k - 1).shifted(n - k);
    }
    Ok(rf(acc))
}

fn eq11_rhs(p: &Params) -> Built {
    Ok(rf(qi(p.get("n")?).pow(2)))
}

fn eq14_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let n_sq = ck_mul(n, n)?;
    let mut acc = LaurentPoly::zero();
    for j in 1..=n {
        acc = acc + qi(n_sq - n + 2 * j - 1).shifted(n - j);
    }
    Ok(rf(acc))
}

fn eq14_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    Ok(rf(qi(n) * qi(ck_mul(n, n)?)))
}

fn cubes_sequence() -> SequenceSpec {
    SequenceSpec::new("j^3", |j| j * j * j)
}

fn eq17_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    Ok(rf(forward_sum(&cubes_sequence(), n as u64)))
}

fn eq18_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    Ok(rf(backward_sum(&cubes_sequence(), n as u64)))
}

fn cube_sum_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let t_n = tri(n)?;
    Ok(rf(qi(ck_mul(t_n, t_n)?)))
}

fn eq19_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let k = p.get("k")?;
    let mut acc = LaurentPoly::zero();
    for j in 1..=n {
        acc = acc + gauss(j, k).shifted(j - 1);
    }
    Ok(rf(acc))
}

fn eq19_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let k = p.get("k")?;
    Ok(rf(gauss(n + 1, k + 1).shifted(k - 1)))
}

fn eq20_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let k = p.get("k")?;
    let mut acc = LaurentPoly::zero();
    for j in 1..=n {
        acc = acc + gauss(j, k).shifted(ck_mul(k + 1, n - j)?);
    }
    Ok(rf(acc))
}

fn eq20_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let k = p.get("k")?;
    Ok(rf(gauss(n + 1, k + 1)))
}

fn cube_expansion_lhs(p: &Params) -> Built {
    Ok(rf(qi(p.get("n")?).pow(3)))
}

fn cube_expansion_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let factor = qi(2) * qi(3);
    let poly = (&factor * &gauss(n, 3)).shifted(3) + &factor * &gauss(n, 2) + qi(n).shifted(n - 1);
    Ok(rf(poly))
}

fn eq21_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let mut acc = LaurentPoly::zero();
    for j in 1..=n {
        acc = acc + qi(j).pow(3).shifted(j - 1);
    }
    Ok(rf(acc))
}

fn eq21_fraction(n: i64) -> RationalFn {
    let num = gauss(n + 1, 2) * (LaurentPoly::one() + mono(n) + mono(n + 1));
    let den = LaurentPoly::one() + mono(1) + mono(2);
    RationalFn::new(num, den).expect("1 + q + q^2 is nonzero")
}

fn eq21_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let factor = qi(2) * qi(3);
    let head = (&factor * &gauss(n + 1, 4)).shifted(5) + (&factor * &gauss(n + 1, 3)).shifted(1);
    Ok(&rf(head) + &eq21_fraction(n))
}

fn eq21_aux_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let mut acc = LaurentPoly::zero();
    for j in 1..=n {
        acc = acc + qi(j).shifted(2 * (j - 1));
    }
    Ok(rf(acc))
}

fn eq21_aux_rhs(p: &Params) -> Built {
    Ok(eq21_fraction(p.get("n")?))
}

fn eq24_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let k = p.get("k")?;
    let small = ck_pow(n, k)?;
    let large = ck_mul(small, n)?;
    let mut acc = LaurentPoly::zero();
    for j in 1..=small {
        acc = acc + qi(large - small + 2 * j - 1).shifted(small - j);
    }
    Ok(rf(acc))
}

fn eq24_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let k = p.get("k")?;
    let small = ck_pow(n, k)?;
    Ok(rf(qi(small) * qi(ck_mul(small, n)?)))
}

fn eq25_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let mut acc = LaurentPoly::zero();
    for j in 0..n {
        acc = acc + qi(n + 1 + 2 * j).shifted(n - 1 - j);
    }
    Ok(rf(acc))
}

fn eq25_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    Ok(rf(qi(2) * qi(n) * qib(n, 2)))
}

fn eq26_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let m = p.get("m")?;
    let mut acc = LaurentPoly::zero();
    for k in 0..=n {
        acc = acc + qib(ck_add(ck_mul(m, n)?, k)?, 2).shifted(n - k);
    }
    Ok(rf(acc))
}

fn eq26_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let m = p.get("m")?;
    // at n = 0 the base q^n degenerates: [2m+1] in base q^0 is the constant
    // 2m+1, and the Gaussian factor annihilates the product anyway
    let second = if n == 0 {
        LaurentPoly::monomial(2 * m + 1, 0)
    } else {
        qib(2 * m + 1, n)
    };
    Ok(rf(gauss(n + 1, 2) * second))
}

fn eq29_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let power = ck_pow(3, n + 1)?;
    let lo = (ck_pow(3, n)? + 1) / 2;
    let hi = (power - 1) / 2;
    let mut acc = LaurentPoly::zero();
    for j in lo..=hi {
        debug_assert_eq!((power - 1 - 2 * j) % 2, 0);
        acc = acc + qib(j, 2).shifted((power - 1 - 2 * j) / 2);
    }
    Ok(rf(acc))
}

fn eq29_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let power = ck_pow(3, n)?;
    Ok(rf(qi(power) * qib(power, 2)))
}

fn eq30_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let power = ck_pow(3, n + 1)?;
    let mut acc = LaurentPoly::zero();
    for j in 1..=(power - 1) / 2 {
        debug_assert_eq!((power - 2 * j - 1) % 2, 0);
        acc = acc + qib(j, 2).shifted((power - 2 * j - 1) / 2);
    }
    Ok(rf(acc))
}

fn eq30_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let power = ck_pow(3, n + 1)?;
    Ok(rf(gauss((power + 1) / 2, 2)))
}

/// The middle form of the Theorem 3 chain:
/// `sum_{k=0..n} q^((3^(n+1) - 3^(k+1))/2) [3^k] [3^k]_{q^2}`.
pub fn theorem3_middle_form(n: i64) -> Result<RationalFn, IdentityError> {
    if n < 0 {
        return Err(IdentityError::InvalidParams("requires n >= 0".into()));
    }
    let power = ck_pow(3, n + 1)?;
    let mut acc = LaurentPoly::zero();
    for k in 0..=n {
        let pk = ck_pow(3, k)?;
        acc = acc + (qi(pk) * qib(pk, 2)).shifted((power - 3 * pk) / 2);
    }
    Ok(rf(acc))
}

fn eq31_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let mut acc = LaurentPoly::zero();
    for k in 0..=n {
        acc = acc + qib(k, 2).shifted(n - k);
    }
    Ok(rf(acc))
}

fn eq31_rhs(p: &Params) -> Built {
    Ok(rf(gauss(p.get("n")? + 1, 2)))
}

fn eq32_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let n_sq = ck_mul(n, n)?;
    let mut acc = LaurentPoly::zero();
    for j in 0..n {
        let index = ck_add(ck_mul(2 * (n + 1), j)?, 1)?;
        acc = acc + qi(index).shifted(n_sq - 1 - (n + 1) * j);
    }
    Ok(rf(acc))
}

fn eq32_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    Ok(rf(qi(ck_mul(n, n)?) * qib(n, n + 1)))
}

fn eq33_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let mut acc = LaurentPoly::zero();
    for k in 0..n {
        acc = acc + qi(ck_mul(2 * k + 1, n)?).shifted(ck_mul(n, n - 1)? - n * k);
    }
    Ok(rf(acc))
}

fn eq33_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    Ok(rf(qi(ck_mul(n, n)?) * qib(n, n)))
}

fn eq34_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let m = p.get("m")?;
    let base = ck_pow(n, m)?;
    let mut acc = LaurentPoly::zero();
    for k in 0..n {
        let index = ck_mul(2 * k + 1, base)?;
        acc = acc + qi(index).shifted(ck_mul(base, n - 1)? - ck_mul(k, base)?);
    }
    Ok(rf(acc))
}

fn eq34_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let m = p.get("m")?;
    let base = ck_pow(n, m)?;
    Ok(rf(qi(ck_mul(base, n)?) * qib(n, base)))
}

fn eq35_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let t_n = tri(n)?;
    let t_prev = tri(n - 1)?;
    let mut acc = LaurentPoly::zero();
    for j in 0..n {
        acc = acc + qi(ck_add(t_n, ck_mul(n, j)?)?).shifted(t_prev - tri(j)?);
    }
    Ok(rf(acc))
}

fn eq35_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let t_prev = tri(n - 1)?;
    let mut weights = LaurentPoly::zero();
    for j in 0..n {
        weights = weights + mono(t_prev - tri(j)?);
    }
    Ok(rf(qi(ck_mul(n, n)?) * weights))
}

fn eq36_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let t_n = tri(n)?;
    let mut acc = LaurentPoly::zero();
    for j in 0..n {
        let index = ck_add(t_n, ck_mul(n, j)?)?;
        acc = acc + qib(index, 2).shifted(ck_mul(n, n - 1)? - n * j);
    }
    Ok(rf(acc))
}

fn eq36_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    Ok(rf(qib(ck_mul(n, n)?, 2) * qib(n, n)))
}

fn eq37_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let head = gauss(n + 1, 2);
    let mut acc = LaurentPoly::zero();
    for j in 0..n {
        acc = acc + head.shifted(n - 1 - j);
        acc = acc + (qi(n) * qib(j, 2)).shifted(2 * n - j);
    }
    Ok(rf(acc))
}

fn eq37_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    Ok(rf(qi(n).pow(2) * qib(n, 2)))
}

fn eq38_lhs(p: &Params) -> Built {
    let n = p.get("n")?;
    let square = ck_mul(2 * n - 1, 2 * n - 1)?;
    let mut acc = LaurentPoly::zero();
    for j in 0..=2 * n {
        acc = acc + qi(ck_add(square, 8 * j)?).shifted(8 * n - 4 * j);
    }
    Ok(rf(acc))
}

fn eq38_rhs(p: &Params) -> Built {
    let n = p.get("n")?;
    Ok(rf(qi(2 * n + 1) * qib(2 * n + 1, 4) * qib(2 * n + 1, 2 * n + 1)))
}

// ---------------------------------------------------------------------------
// classical values at q = 1
// ---------------------------------------------------------------------------

fn cv_tri_squared(p: &Params) -> BigInt {
    let t = big_tri(p.get("n").unwrap());
    &t * &t
}

fn cv_n_squared(p: &Params) -> BigInt {
    let n = BigInt::from(p.get("n").unwrap());
    &n * &n
}

fn cv_n_cubed(p: &Params) -> BigInt {
    big_pow(p.get("n").unwrap(), 3)
}

fn cv_hockey_stick(p: &Params) -> BigInt {
    big_binomial(p.get("n").unwrap() + 1, p.get("k").unwrap() + 1)
}

fn cv_triangular(p: &Params) -> BigInt {
    big_tri(p.get("n").unwrap())
}

fn cv_luthy(p: &Params) -> BigInt {
    big_pow(p.get("n").unwrap(), 2 * p.get("k").unwrap() + 1)
}

fn cv_two_n_squared(p: &Params) -> BigInt {
    2 * cv_n_squared(p)
}

fn cv_block_times_triangular(p: &Params) -> BigInt {
    BigInt::from(2 * p.get("m").unwrap() + 1) * big_tri(p.get("n").unwrap())
}

fn cv_nine_power(p: &Params) -> BigInt {
    big_pow(9, p.get("n").unwrap())
}

fn cv_nine_power_sum(p: &Params) -> BigInt {
    (big_pow(9, p.get("n").unwrap() + 1) - 1) / 8
}

fn cv_power_m_plus_two(p: &Params) -> BigInt {
    big_pow(p.get("n").unwrap(), p.get("m").unwrap() + 2)
}

fn cv_odd_cube(p: &Params) -> BigInt {
    big_pow(2 * p.get("n").unwrap() + 1, 3)
}

// ---------------------------------------------------------------------------
// the catalog
// ---------------------------------------------------------------------------

pub(super) static CATALOG: &[IdentityDescriptor] = &[
    IdentityDescriptor {
        id: "eq6_garrett_hummel",
        equation: "(6)",
        params: &["n"],
        classical: "1^3 + 2^3 + ... + n^3 = C(n+1,2)^2",
        note: Some(
            "right-hand side taken squared; the commonly printed unsquared form \
             already fails at n = 2, and the matching difference identity targets \
             the square",
        ),
        default_grid: &[("n", 1, 40)],
        validate: v_n1,
        lhs: eq6_lhs,
        rhs: gauss_n1_2_squared,
        classical_value: cv_tri_squared,
    },
    IdentityDescriptor {
        id: "eq7_warnaar",
        equation: "(7)",
        params: &["n"],
        classical: "1^3 + 2^3 + ... + n^3 = C(n+1,2)^2",
        note: None,
        default_grid: &[("n", 1, 40)],
        validate: v_n1,
        lhs: eq7_lhs,
        rhs: gauss_n1_2_squared,
        classical_value: cv_tri_squared,
    },
    IdentityDescriptor {
        id: "eq8_zhao_feng",
        equation: "(8)",
        params: &["n"],
        classical: "1^3 + 2^3 + ... + n^3 = C(n+1,2)^2",
        note: None,
        default_grid: &[("n", 0, 40)],
        validate: v_n0,
        lhs: eq8_lhs,
        rhs: gauss_n1_2_squared,
        classical_value: cv_tri_squared,
    },
    IdentityDescriptor {
        id: "eq10_theorem1",
        equation: "(10) Theorem 1",
        params: &["n"],
        classical: "1^3 + 2^3 + ... + n^3 = C(n+1,2)^2",
        note: None,
        default_grid: &[("n", 1, 40)],
        validate: v_n1,
        lhs: eq10_lhs,
        rhs: eq10_rhs,
        classical_value: cv_tri_squared,
    },
    IdentityDescriptor {
        id: "eq11_odd_sum",
        equation: "(11)",
        params: &["n"],
        classical: "1 + 3 + ... + (2n-1) = n^2",
        note: None,
        default_grid: &[("n", 1, 60)],
        validate: v_n1,
        lhs: eq11_lhs,
        rhs: eq11_rhs,
        classical_value: cv_n_squared,
    },
    IdentityDescriptor {
        id: "eq14_wheatstone_group",
        equation: "(14)",
        params: &["n"],
        classical: "(n^2-n+1) + (n^2-n+3) + ... + (n^2+n-1) = n^3",
        note: None,
        default_grid: &[("n", 1, 60)],
        validate: v_n1,
        lhs: eq14_lhs,
        rhs: eq14_rhs,
        classical_value: cv_n_cubed,
    },
    IdentityDescriptor {
        id: "eq17_cube_forward",
        equation: "(17) Theorem 2",
        params: &["n"],
        classical: "1^3 + 2^3 + ... + n^3 = C(n+1,2)^2",
        note: None,
        default_grid: &[("n", 1, 30)],
        validate: v_n1,
        lhs: eq17_lhs,
        rhs: cube_sum_rhs,
        classical_value: cv_tri_squared,
    },
    IdentityDescriptor {
        id: "eq18_cube_backward",
        equation: "(18) Theorem 2",
        params: &["n"],
        classical: "1^3 + 2^3 + ... + n^3 = C(n+1,2)^2",
        note: None,
        default_grid: &[("n", 1, 30)],
        validate: v_n1,
        lhs: eq18_lhs,
        rhs: cube_sum_rhs,
        classical_value: cv_tri_squared,
    },
    IdentityDescriptor {
        id: "eq19_binsum_a",
        equation: "(19)",
        params: &["n", "k"],
        classical: "C(k,k) + C(k+1,k) + ... + C(n,k) = C(n+1,k+1)",
        note: None,
        default_grid: &[("n", 1, 20), ("k", 1, 20)],
        validate: v_n1_k1,
        lhs: eq19_lhs,
        rhs: eq19_rhs,
        classical_value: cv_hockey_stick,
    },
    IdentityDescriptor {
        id: "eq20_binsum_b",
        equation: "(20)",
        params: &["n", "k"],
        classical: "C(k,k) + C(k+1,k) + ... + C(n,k) = C(n+1,k+1)",
        note: None,
        default_grid: &[("n", 1, 20), ("k", 1, 20)],
        validate: v_n1_k1,
        lhs: eq20_lhs,
        rhs: eq20_rhs,
        classical_value: cv_hockey_stick,
    },
    IdentityDescriptor {
        id: "cube_expansion",
        equation: "cube expansion",
        params: &["n"],
        classical: "n^3 = 6*C(n,3) + 6*C(n,2) + n",
        note: None,
        default_grid: &[("n", 1, 30)],
        validate: v_n1,
        lhs: cube_expansion_lhs,
        rhs: cube_expansion_rhs,
        classical_value: cv_n_cubed,
    },
    IdentityDescriptor {
        id: "eq21_qcube_sum",
        equation: "(21)",
        params: &["n"],
        classical: "1^3 + 2^3 + ... + n^3 = C(n+1,2)^2",
        note: None,
        default_grid: &[("n", 1, 30)],
        validate: v_n1,
        lhs: eq21_lhs,
        rhs: eq21_rhs,
        classical_value: cv_tri_squared,
    },
    IdentityDescriptor {
        id: "eq21_aux",
        equation: "(21) auxiliary",
        params: &["n"],
        classical: "1 + 2 + ... + n = C(n+1,2)",
        note: None,
        default_grid: &[("n", 1, 30)],
        validate: v_n1,
        lhs: eq21_aux_lhs,
        rhs: eq21_aux_rhs,
        classical_value: cv_triangular,
    },
    IdentityDescriptor {
        id: "eq24_luthy",
        equation: "(24)",
        params: &["n", "k"],
        classical: "sum_{j=1..n^k} (n^(k+1) - n^k + 2j - 1) = n^(2k+1)",
        note: None,
        default_grid: &[("n", 2, 5), ("k", 0, 4)],
        validate: v_n1_k0,
        lhs: eq24_lhs,
        rhs: eq24_rhs,
        classical_value: cv_luthy,
    },
    IdentityDescriptor {
        id: "eq25",
        equation: "(25)",
        params: &["n"],
        classical: "sum_{j=0..n-1} (n+1+2j) = 2n^2",
        note: None,
        default_grid: &[("n", 1, 40)],
        validate: v_n1,
        lhs: eq25_lhs,
        rhs: eq25_rhs,
        classical_value: cv_two_n_squared,
    },
    IdentityDescriptor {
        id: "eq26",
        equation: "(26)",
        params: &["n", "m"],
        classical: "sum_{k=0..n} (mn+k) = (2m+1)*C(n+1,2)",
        note: None,
        default_grid: &[("n", 0, 15), ("m", 0, 6)],
        validate: v_n0_m0,
        lhs: eq26_lhs,
        rhs: eq26_rhs,
        classical_value: cv_block_times_triangular,
    },
    IdentityDescriptor {
        id: "eq29_theorem3",
        equation: "(29) Theorem 3",
        params: &["n"],
        classical: "sum of j from (3^n+1)/2 to (3^(n+1)-1)/2 = 3^(2n)",
        note: None,
        default_grid: &[("n", 0, 6)],
        validate: v_n0,
        lhs: eq29_lhs,
        rhs: eq29_rhs,
        classical_value: cv_nine_power,
    },
    IdentityDescriptor {
        id: "eq30_theorem3",
        equation: "(30) Theorem 3",
        params: &["n"],
        classical: "1 + 2 + ... + (3^(n+1)-1)/2 = 1 + 9 + ... + 9^n",
        note: None,
        default_grid: &[("n", 0, 6)],
        validate: v_n0,
        lhs: eq30_lhs,
        rhs: eq30_rhs,
        classical_value: cv_nine_power_sum,
    },
    IdentityDescriptor {
        id: "eq31_schlosser",
        equation: "(31)",
        params: &["n"],
        classical: "0 + 1 + ... + n = C(n+1,2)",
        note: None,
        default_grid: &[("n", 0, 40)],
        validate: v_n0,
        lhs: eq31_lhs,
        rhs: eq31_rhs,
        classical_value: cv_triangular,
    },
    IdentityDescriptor {
        id: "eq32",
        equation: "(32)",
        params: &["n"],
        classical: "sum_{j=0..n-1} (2(n+1)j + 1) = n^3",
        note: None,
        default_grid: &[("n", 1, 20)],
        validate: v_n1,
        lhs: eq32_lhs,
        rhs: eq32_rhs,
        classical_value: cv_n_cubed,
    },
    IdentityDescriptor {
        id: "eq33",
        equation: "(33)",
        params: &["n"],
        classical: "sum_{k=0..n-1} (2k+1)n = n^3",
        note: None,
        default_grid: &[("n", 1, 20)],
        validate: v_n1,
        lhs: eq33_lhs,
        rhs: eq33_rhs,
        classical_value: cv_n_cubed,
    },
    IdentityDescriptor {
        id: "eq34",
        equation: "(34)",
        params: &["n", "m"],
        classical: "sum_{k=0..n-1} (2k+1)n^m = n^(m+2)",
        note: None,
        default_grid: &[("n", 1, 8), ("m", 0, 3)],
        validate: v_n1_m0,
        lhs: eq34_lhs,
        rhs: eq34_rhs,
        classical_value: cv_power_m_plus_two,
    },
    IdentityDescriptor {
        id: "eq35_theorem4a",
        equation: "(35) Theorem 4",
        params: &["n"],
        classical: "sum_{j=0..n-1} (C(n+1,2) + jn) = n^3",
        note: None,
        default_grid: &[("n", 1, 25)],
        validate: v_n1,
        lhs: eq35_lhs,
        rhs: eq35_rhs,
        classical_value: cv_n_cubed,
    },
    IdentityDescriptor {
        id: "eq36_theorem4b",
        equation: "(36) Theorem 4",
        params: &["n"],
        classical: "sum_{j=0..n-1} (C(n+1,2) + jn) = n^3",
        note: None,
        default_grid: &[("n", 1, 25)],
        validate: v_n1,
        lhs: eq36_lhs,
        rhs: eq36_rhs,
        classical_value: cv_n_cubed,
    },
    IdentityDescriptor {
        id: "eq37_theorem4c",
        equation: "(37) Theorem 4",
        params: &["n"],
        classical: "sum_{j=0..n-1} (C(n+1,2) + jn) = n^3",
        note: Some(
            "the first summand factor is the Gaussian binomial C(n+1,2)_q, not \
             the q-integer [C(n+1,2)]_q; the divide-by-[n] proof step forces the \
             Gaussian reading, and the q-integer reading fails at n = 3",
        ),
        default_grid: &[("n", 1, 25)],
        validate: v_n1,
        lhs: eq37_lhs,
        rhs: eq37_rhs,
        classical_value: cv_n_cubed,
    },
    IdentityDescriptor {
        id: "eq38_theorem5",
        equation: "(38) Theorem 5",
        params: &["n"],
        classical: "sum_{j=0..2n} ((2n-1)^2 + 8j) = (2n+1)^3",
        note: Some(
            "summand base taken as plain q; the sometimes-printed -q subscript is \
             inconsistent with the telescoping expansion, which forces base q",
        ),
        default_grid: &[("n", 1, 20)],
        validate: v_n1,
        lhs: eq38_lhs,
        rhs: eq38_rhs,
        classical_value: cv_odd_cube,
    },
];
