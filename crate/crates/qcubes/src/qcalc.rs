//! q-calculus primitives: q-integers in arbitrary power bases and Gaussian
//! binomial coefficients.
//!
//! The Gaussian binomial is deliberately computed along three independent
//! routes — the product formula (which exercises exact division) and the two
//! Pascal-style recurrences — and the routes are compared on every call. A
//! disagreement would mean a bug in the arithmetic layer, so it is treated as
//! an internal-consistency panic rather than a recoverable error.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::qpoly::LaurentPoly;

/// The q-integer `[n]` in base `q^b`: `1 + q^b + q^(2b) + ... + q^((n-1)b)`.
///
/// `[0]` is the zero polynomial. Built by explicit term summation so the
/// most-used primitive does not depend on polynomial division.
pub fn q_int(n: u64, base_power: u64) -> LaurentPoly {
    assert!(base_power >= 1, "base power must be positive");
    let b = base_power as i64;
    LaurentPoly::from_terms((0..n).map(|i| (i as i64 * b, 1)))
}

/// Triangular number `n(n+1)/2`.
pub fn triangular(n: u64) -> u64 {
    n.checked_mul(n + 1).expect("triangular overflow") / 2
}

/// Gaussian binomial by the product formula
/// `[n][n-1]...[n-k+1] / ([1][2]...[k])`, with the factors interleaved so
/// every intermediate quotient is itself a Gaussian binomial and divides
/// exactly.
pub fn gauss_by_product(n: u64, k: i64) -> LaurentPoly {
    if k < 0 || k as u64 > n {
        return LaurentPoly::zero();
    }
    let k = k as u64;
    let mut acc = LaurentPoly::one();
    for i in 1..=k {
        acc = (&acc * &q_int(n - k + i, 1))
            .exact_div(&q_int(i, 1))
            .expect("interleaved Gaussian product must divide exactly");
    }
    acc
}

/// Gaussian binomial by the recurrence `[m+1, c] = q^c [m, c] + [m, c-1]`,
/// built row by row from the base row.
pub fn gauss_by_pascal_low(n: u64, k: i64) -> LaurentPoly {
    gauss_by_pascal(n, k, |row, m: u64, c: u64| {
        let _ = m;
        row[c as usize].shifted(c as i64) + &row[c as usize - 1]
    })
}

/// Gaussian binomial by the complementary recurrence
/// `[m+1, c] = [m, c] + q^(m-c+1) [m, c-1]`.
pub fn gauss_by_pascal_high(n: u64, k: i64) -> LaurentPoly {
    gauss_by_pascal(n, k, |row, m: u64, c: u64| {
        &row[c as usize] + row[c as usize - 1].shifted(m as i64 - c as i64 + 1)
    })
}

fn gauss_by_pascal(
    n: u64,
    k: i64,
    step: impl Fn(&[LaurentPoly], u64, u64) -> LaurentPoly,
) -> LaurentPoly {
    if k < 0 || k as u64 > n {
        return LaurentPoly::zero();
    }
    let k = k as u64;
    // Only columns 0..=k are ever needed.
    let width = k as usize + 1;
    let mut row = vec![LaurentPoly::zero(); width];
    row[0] = LaurentPoly::one();
    for m in 0..n {
        let mut next = vec![LaurentPoly::zero(); width];
        next[0] = LaurentPoly::one();
        let cols = width.min(m as usize + 2);
        for c in 1..cols {
            next[c] = step(&row, m, c as u64);
        }
        row = next;
    }
    row[k as usize].clone()
}

fn gauss_memo() -> &'static Mutex<HashMap<(u64, u64), LaurentPoly>> {
    static MEMO: OnceLock<Mutex<HashMap<(u64, u64), LaurentPoly>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The Gaussian binomial coefficient as an ordinary polynomial of degree
/// `k(n-k)` with nonnegative integer coefficients; zero when `k < 0` or
/// `k > n`.
///
/// Computed by all three routes ([`gauss_by_product`], [`gauss_by_pascal_low`],
/// [`gauss_by_pascal_high`]) which must agree; results are memoized behind a
/// lock, which only short-circuits recomputation and never changes a result.
///
/// Panics if the three computation routes disagree — that is an internal
/// consistency guard, not a user error.
pub fn gauss_binomial(n: u64, k: i64) -> LaurentPoly {
    if k < 0 || k as u64 > n {
        return LaurentPoly::zero();
    }
    let key = (n, k as u64);
    if let Some(hit) = gauss_memo().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let by_product = gauss_by_product(n, k);
    let by_low = gauss_by_pascal_low(n, k);
    let by_high = gauss_by_pascal_high(n, k);
    assert!(
        by_product == by_low && by_product == by_high,
        "gauss_binomial({n}, {k}): computation routes disagree"
    );
    gauss_memo().lock().unwrap().insert(key, by_product.clone());
    by_product
}
