//! Telescoping-sum verification and the difference identities that drive the
//! induction proofs.
//!
//! For any sequence of positive integers `a(j)` the weighted sums
//!
//! ```text
//! sum_{j=1..n} q^(a(1)+...+a(j-1)) [a(j)]   and
//! sum_{j=1..n} q^(a(j+1)+...+a(n)) [a(j)]
//! ```
//!
//! both collapse to `[a(1)+...+a(n)]`. The difference identities are the
//! one-step versions: each expresses the gap between consecutive squared
//! partial products as the corresponding summand, which is exactly what the
//! telescoping proofs consume.

use std::fmt;
use std::time::Instant;

use crate::identities::VerificationReport;
use crate::qcalc::{gauss_binomial, q_int, triangular};
use crate::qpoly::{LaurentPoly, RationalFn};

/// A named sequence of positive integers, indexed from 1.
///
/// Term functions must be pure; values are demanded positive, matching the
/// hypothesis under which the telescoping identities are stated.
pub struct SequenceSpec {
    name: String,
    term: Box<dyn Fn(u64) -> u64 + Send + Sync>,
}

impl SequenceSpec {
    pub fn new(name: impl Into<String>, term: impl Fn(u64) -> u64 + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            term: Box::new(term),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `a(j)` for `j >= 1`. Panics if the underlying function returns zero,
    /// which is a caller bug by contract.
    pub fn term(&self, j: u64) -> u64 {
        let value = (self.term)(j);
        assert!(value >= 1, "sequence `{}` must be positive at j = {j}", self.name);
        value
    }
}

impl fmt::Debug for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SequenceSpec").field("name", &self.name).finish()
    }
}

/// `sum_{j=1..n} q^(a(1)+...+a(j-1)) [a(j)]` built exactly term by term.
pub fn forward_sum(seq: &SequenceSpec, n: u64) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    let mut prefix: u64 = 0;
    for j in 1..=n {
        let a = seq.term(j);
        let summand = q_int(a, 1).shifted(prefix as i64);
        acc = acc + summand;
        prefix = prefix.checked_add(a).expect("partial sum overflow");
    }
    acc
}

/// `sum_{j=1..n} q^(a(j+1)+...+a(n)) [a(j)]`, the reversed weighting.
pub fn backward_sum(seq: &SequenceSpec, n: u64) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    let mut suffix: u64 = 0;
    for j in (1..=n).rev() {
        let a = seq.term(j);
        acc = acc + q_int(a, 1).shifted(suffix as i64);
        suffix = suffix.checked_add(a).expect("partial sum overflow");
    }
    acc
}

/// `[a(1)+...+a(n)]`, the common value of both telescoped sums.
pub fn telescoped_total(seq: &SequenceSpec, n: u64) -> LaurentPoly {
    let mut total: u64 = 0;
    for j in 1..=n {
        total = total.checked_add(seq.term(j)).expect("partial sum overflow");
    }
    q_int(total, 1)
}

fn telescope_report(
    kind: &str,
    seq: &SequenceSpec,
    n: u64,
    lhs: LaurentPoly,
) -> VerificationReport {
    assert!(n >= 1, "telescoping requires n >= 1");
    let started = Instant::now();
    let rhs = telescoped_total(seq, n);
    let id = format!("telescope.{kind}({})", seq.name());
    let params = vec![("n".to_string(), n as i64)];
    if lhs == rhs {
        VerificationReport::pass(id, params, started)
    } else {
        VerificationReport::fail(id, params, &lhs, &rhs, started)
    }
}

/// Check the forward-weighted telescoping sum against its closed form.
pub fn forward_telescope(seq: &SequenceSpec, n: u64) -> VerificationReport {
    telescope_report("forward", seq, n, forward_sum(seq, n))
}

/// Check the backward-weighted telescoping sum against its closed form.
pub fn backward_telescope(seq: &SequenceSpec, n: u64) -> VerificationReport {
    telescope_report("backward", seq, n, backward_sum(seq, n))
}

/// The four difference identities used as induction steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DifferenceKind {
    /// `C(n+1,2)_q^2 - C(n,2)_q^2 = q^(n-1) [n]^2 ([n-1]+[n+1]) / [2]`
    /// (square brackets denote Gaussian binomials here).
    GarrettHummel,
    /// `C(n+1,2)_q^2 - q^2 C(n,2)_q^2 = [n]^2 [n]_{q^2}`.
    Warnaar,
    /// `C(n+1,2)_q^2 - q^4 C(n,2)_q^2 = [n]^2 (1+q^2-2q^(n+1)) / (1-q^2)`.
    ZhaoFeng,
    /// `[T(n)]^2 - q^n [T(n-1)]^2 = [n][n^2]` with q-integers of triangular
    /// numbers.
    TriangularQInt,
}

impl DifferenceKind {
    pub fn label(self) -> &'static str {
        match self {
            DifferenceKind::GarrettHummel => "garrett_hummel",
            DifferenceKind::Warnaar => "warnaar",
            DifferenceKind::ZhaoFeng => "zhao_feng",
            DifferenceKind::TriangularQInt => "triangular_qint",
        }
    }
}

/// The left-hand difference of [`difference_identity`], exposed for the
/// cross-checks that re-telescope the differences into the full sums.
pub fn difference_lhs(kind: DifferenceKind, n: u64) -> LaurentPoly {
    assert!(n >= 1);
    let ni = n as i64;
    match kind {
        DifferenceKind::GarrettHummel => {
            gauss_binomial(n + 1, 2).pow(2) - gauss_binomial(n, 2).pow(2)
        }
        DifferenceKind::Warnaar => {
            gauss_binomial(n + 1, 2).pow(2) - gauss_binomial(n, 2).pow(2).shifted(2)
        }
        DifferenceKind::ZhaoFeng => {
            gauss_binomial(n + 1, 2).pow(2) - gauss_binomial(n, 2).pow(2).shifted(4)
        }
        DifferenceKind::TriangularQInt => {
            q_int(triangular(n), 1).pow(2) - q_int(triangular(n - 1), 1).pow(2).shifted(ni)
        }
    }
}

/// The right-hand side of [`difference_identity`] as a rational function;
/// the fractional kinds must collapse to polynomials.
pub fn difference_rhs(kind: DifferenceKind, n: u64) -> RationalFn {
    assert!(n >= 1);
    let ni = n as i64;
    match kind {
        DifferenceKind::GarrettHummel => {
            let num = (q_int(n, 1).pow(2) * (q_int(n - 1, 1) + q_int(n + 1, 1))).shifted(ni - 1);
            RationalFn::new(num, q_int(2, 1)).expect("[2] is nonzero")
        }
        DifferenceKind::Warnaar => {
            RationalFn::from_poly(q_int(n, 1).pow(2) * q_int(n, 2))
        }
        DifferenceKind::ZhaoFeng => {
            let factor = LaurentPoly::from_terms([(0i64, 1i64), (2, 1)])
                + LaurentPoly::monomial(-2, ni + 1);
            let den = LaurentPoly::one() - LaurentPoly::monomial(1, 2);
            RationalFn::new(q_int(n, 1).pow(2) * factor, den).expect("1 - q^2 is nonzero")
        }
        DifferenceKind::TriangularQInt => {
            RationalFn::from_poly(q_int(n, 1) * q_int(n * n, 1))
        }
    }
}

/// Verify one difference identity exactly. A right-hand side that fails to
/// collapse to a polynomial is a violated divisibility claim and is reported
/// as an error outcome.
pub fn difference_identity(kind: DifferenceKind, n: u64) -> VerificationReport {
    assert!(n >= 1, "difference identities require n >= 1");
    let started = Instant::now();
    let id = format!("difference.{}", kind.label());
    let params = vec![("n".to_string(), n as i64)];
    let lhs = difference_lhs(kind, n);
    let rhs = match difference_rhs(kind, n).to_poly() {
        Ok(p) => p,
        Err(e) => return VerificationReport::error(id, params, e.to_string(), started),
    };
    if lhs == rhs {
        VerificationReport::pass(id, params, started)
    } else {
        VerificationReport::fail(id, params, &lhs, &rhs, started)
    }
}
