//! Weighted lattice squares, hooks, and regions: the combinatorial
//! enumeration oracle for the sum-of-cubes identities.
//!
//! The square `S_n` is the point set `{(i, j) : 0 <= i, j < n}` with point
//! weight `q^(i + (n-1-j))`, so the total weight is `[n]^2`. `S_n` decomposes
//! into hooks `h_1, ..., h_n` of weight `q^(n-k) [2k-1]`, and the square of a
//! triangular side length `S_T(n)` decomposes into regions `R_1, ..., R_n`
//! where `R_j` bundles `j` consecutive hooks, has exactly `j^3` points, and
//! carries weight `q^(T(n)-T(j)) [j] [j^2]`. Everything here is verified by
//! brute-force enumeration against those closed forms.

use std::collections::BTreeSet;
use std::time::Instant;

use thiserror::Error;

use crate::identities::VerificationReport;
use crate::qcalc::{q_int, triangular};
use crate::qpoly::{LaurentPoly, RationalFn};

/// A lattice point; members of `S_n` satisfy `0 <= i, j < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub i: u64,
    pub j: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("point ({i}, {j}) lies outside S_{n}")]
    PointOutOfRange { i: u64, j: u64, n: u64 },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: u64, max: u64 },
}

/// All points of the square `S_n`.
pub fn square_points(n: u64) -> BTreeSet<LatticePoint> {
    let mut points = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            points.insert(LatticePoint { i, j });
        }
    }
    points
}

/// Weight exponent `i + (n-1-j)` of a point of `S_n`.
fn weight_exponent(p: LatticePoint, n: u64) -> i64 {
    (p.i + (n - 1 - p.j)) as i64
}

/// Total weight `sum q^(i + (n-1-j))` of a point set inside `S_n`.
pub fn weight_of(points: &BTreeSet<LatticePoint>, n: u64) -> Result<LaurentPoly, LatticeError> {
    let mut total = LaurentPoly::zero();
    let one = num_bigint::BigInt::from(1);
    for &p in points {
        if p.i >= n || p.j >= n {
            return Err(LatticeError::PointOutOfRange { i: p.i, j: p.j, n });
        }
        total.add_term(weight_exponent(p, n), &one);
    }
    Ok(total)
}

/// The hook `h_k` of `S_n`: up the column `i = k-1` from `j = 0` to
/// `j = k-1`, then along the row `j = k-1` back to `i = 0`; `2k-1` points.
pub fn hook_points(k: u64, n: u64) -> Result<BTreeSet<LatticePoint>, LatticeError> {
    if k < 1 || k > n {
        return Err(LatticeError::IndexOutOfRange { index: k, max: n });
    }
    let mut points = BTreeSet::new();
    for j in 0..k {
        points.insert(LatticePoint { i: k - 1, j });
    }
    for i in 0..k - 1 {
        points.insert(LatticePoint { i, j: k - 1 });
    }
    Ok(points)
}

/// Closed form `q^(n-k) [2k-1]` for the weight of `h_k` in `S_n`.
pub fn hook_weight_closed_form(k: u64, n: u64) -> LaurentPoly {
    q_int(2 * k - 1, 1).shifted((n - k) as i64)
}

/// The region `R_j` inside the triangular square `S_T(n)`: the union of the
/// `j` hooks `h_(T(j-1)+1), ..., h_(T(j))`; exactly `j^3` points.
pub fn region_points(j: u64, n: u64) -> Result<BTreeSet<LatticePoint>, LatticeError> {
    if j < 1 || j > n {
        return Err(LatticeError::IndexOutOfRange { index: j, max: n });
    }
    let ambient = triangular(n);
    let mut points = BTreeSet::new();
    for k in triangular(j - 1) + 1..=triangular(j) {
        points.extend(hook_points(k, ambient)?);
    }
    Ok(points)
}

/// Closed form `q^(T(n)-T(j)) [j] [j^2]` for the weight of `R_j` in `S_T(n)`.
pub fn region_weight_closed_form(j: u64, n: u64) -> LaurentPoly {
    let shift = (triangular(n) - triangular(j)) as i64;
    (q_int(j, 1) * q_int(j * j, 1)).shifted(shift)
}

/// Check that the hooks `h_1, ..., h_n` are pairwise disjoint, cover `S_n`
/// exactly, match their closed-form weights, and sum to `[n]^2`.
pub fn verify_hook_partition(n: u64) -> VerificationReport {
    assert!(n >= 1, "hook partition requires n >= 1");
    let started = Instant::now();
    let id = "lattice.hook_partition";
    let params = vec![("n".to_string(), n as i64)];

    let mut seen: BTreeSet<LatticePoint> = BTreeSet::new();
    let mut total = LaurentPoly::zero();
    for k in 1..=n {
        let hook = hook_points(k, n).expect("1 <= k <= n");
        if hook.len() as u64 != 2 * k - 1 {
            let msg = format!("|h_{k}| = {} instead of {}", hook.len(), 2 * k - 1);
            return VerificationReport::error(id, params, msg, started);
        }
        if !seen.is_disjoint(&hook) {
            let msg = format!("hook h_{k} overlaps an earlier hook");
            return VerificationReport::error(id, params, msg, started);
        }
        seen.extend(hook.iter().copied());
        let weight = weight_of(&hook, n).expect("hook points lie inside S_n");
        let expected = hook_weight_closed_form(k, n);
        if weight != expected {
            return VerificationReport::fail(id, params, &weight, &expected, started);
        }
        total = total + weight;
    }
    if seen != square_points(n) {
        let msg = format!("hooks cover {} of {} points of S_{n}", seen.len(), n * n);
        return VerificationReport::error(id, params, msg, started);
    }
    let square_weight = q_int(n, 1).pow(2);
    if total == square_weight {
        VerificationReport::pass(id, params, started)
    } else {
        VerificationReport::fail(id, params, &total, &square_weight, started)
    }
}

/// Check one region against the summand closed form: the enumerated weight of
/// `R_j` inside `S_T(n)` must equal `q^(T(n)-T(j)) [j] [j^2]`, and the region
/// must contain exactly `j^3` points.
pub fn verify_region_weight(j: u64, n: u64) -> VerificationReport {
    assert!(j >= 1 && j <= n, "region index must satisfy 1 <= j <= n");
    let started = Instant::now();
    let id = "lattice.region_weight";
    let params = vec![("j".to_string(), j as i64), ("n".to_string(), n as i64)];

    let region = region_points(j, n).expect("1 <= j <= n");
    if region.len() as u64 != j * j * j {
        let msg = format!("|R_{j}| = {} instead of {}", region.len(), j * j * j);
        return VerificationReport::error(id, params, msg, started);
    }
    let weight = weight_of(&region, triangular(n)).expect("region lies inside S_T(n)");
    let expected = region_weight_closed_form(j, n);
    if weight == expected {
        VerificationReport::pass(id, params, started)
    } else {
        VerificationReport::fail(id, params, &weight, &expected, started)
    }
}

/// For odd `j`, the region decomposes into `j` squares of side `j`; check the
/// algebraic chain `[j]^2 (1 + q^j + ... + q^((j-1)j)) = [j]^2 [j]_{q^j}
/// = [j] [j^2]` exactly.
pub fn odd_region_identity(j: u64) -> VerificationReport {
    assert!(j >= 1 && j % 2 == 1, "odd_region_identity requires odd j >= 1");
    let started = Instant::now();
    let id = "lattice.odd_region";
    let params = vec![("j".to_string(), j as i64)];

    let base_point_sum = LaurentPoly::from_terms((0..j).map(|m| ((m * j) as i64, 1)));
    let squares_weight = q_int(j, 1).pow(2) * &base_point_sum;
    let via_base_change = q_int(j, 1).pow(2) * q_int(j, j);
    let closed = q_int(j, 1) * q_int(j * j, 1);
    if squares_weight != via_base_change {
        return VerificationReport::fail(id, params, &squares_weight, &via_base_change, started);
    }
    if via_base_change == closed {
        VerificationReport::pass(id, params, started)
    } else {
        VerificationReport::fail(id, params, &via_base_change, &closed, started)
    }
}

/// For even `j = 2l`, the region decomposes into `j-1` squares and two
/// rectangles; check the displayed weight chain
/// `[2l][l] ( sum_m q^(l+2lm) [2l]/[l] + q^(4l^2-l) + 1 ) = [2l][4l^2]`
/// with every intermediate quotient asserted polynomial.
pub fn even_region_identity(ell: u64) -> VerificationReport {
    assert!(ell >= 1, "even_region_identity requires l >= 1");
    let started = Instant::now();
    let id = "lattice.even_region";
    let params = vec![("l".to_string(), ell as i64)];
    let j = 2 * ell;

    // [2l]/[l] must divide exactly (it is 1 + q^l).
    let ratio = match RationalFn::new(q_int(j, 1), q_int(ell, 1)) {
        Ok(rf) => rf,
        Err(e) => return VerificationReport::error(id, params, e.to_string(), started),
    };
    if let Err(e) = ratio.to_poly() {
        return VerificationReport::error(id, params, e.to_string(), started);
    }

    // sum over the j-1 squares, as rational arithmetic
    let mut inner = RationalFn::zero();
    for m in 0..=j - 2 {
        let weight = LaurentPoly::monomial(1, (ell + 2 * ell * m) as i64);
        inner = &inner + &(&RationalFn::from_poly(weight) * &ratio);
    }
    // the geometric-series collapse step of the chain
    let collapsed_num =
        LaurentPoly::monomial(1, ell as i64) - LaurentPoly::monomial(1, (4 * ell * ell - ell) as i64);
    let collapsed_den = LaurentPoly::one() - LaurentPoly::monomial(1, ell as i64);
    let collapsed = RationalFn::new(collapsed_num, collapsed_den).expect("1 - q^l is nonzero");
    if inner != collapsed {
        let msg = format!(
            "square-sum chain step differs: {} vs {}",
            inner, collapsed
        );
        return VerificationReport::error(id, params, msg, started);
    }

    // add the two rectangles, then the whole parenthesized factor must be
    // polynomial
    let rectangles = LaurentPoly::monomial(1, (4 * ell * ell - ell) as i64) + LaurentPoly::one();
    inner = &inner + &RationalFn::from_poly(rectangles);
    let inner_poly = match inner.to_poly() {
        Ok(p) => p,
        Err(e) => return VerificationReport::error(id, params, e.to_string(), started),
    };

    let lhs = q_int(j, 1) * q_int(ell, 1) * inner_poly;
    let rhs = q_int(j, 1) * q_int(4 * ell * ell, 1);
    if lhs == rhs {
        VerificationReport::pass(id, params, started)
    } else {
        VerificationReport::fail(id, params, &lhs, &rhs, started)
    }
}

/// Render the weight matrix of `S_n` with rows printed top to bottom, so the
/// bottom-left entry is the unit weight `1`; entries are monomial texts
/// separated by single spaces.
pub fn weight_matrix_text(n: u64) -> String {
    let mut lines = Vec::with_capacity(n as usize);
    for j in 0..n {
        let row: Vec<String> = (0..n)
            .map(|i| LaurentPoly::monomial(1, weight_exponent(LatticePoint { i, j }, n)).to_string())
            .collect();
        lines.push(row.join(" "));
    }
    lines.join("\n")
}
