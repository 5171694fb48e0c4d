//! The identity catalog and the exact verification engine.
//!
//! Every identity is a catalog entry ([`IdentityDescriptor`]) with builders
//! that map a parameter assignment to the exact [`RationalFn`] value of each
//! side. Verification normalizes both sides, asserts that they are genuine
//! polynomials with nonnegative exponents, and compares canonical forms;
//! outcomes are reported through [`VerificationReport`], whose JSON rendering
//! is a fixed contract for the command-line front end.

mod catalog;

pub use catalog::theorem3_middle_form;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::time::Instant;

use num_bigint::BigInt;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::qpoly::{LaurentPoly, RationalFn};

/// Which side of an identity to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

/// Errors surfaced to callers of the verification engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

/// A named integer parameter assignment, e.g. `n = 3, k = 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<String, i64>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(name: &str, value: i64) -> Self {
        Self::new().with(name, value)
    }

    pub fn with(mut self, name: &str, value: i64) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn from_pairs(pairs: &[(&str, i64)]) -> Self {
        pairs
            .iter()
            .fold(Self::new(), |p, (name, value)| p.with(name, *value))
    }

    pub fn get(&self, name: &str) -> Result<i64, IdentityError> {
        self.0
            .get(name)
            .copied()
            .ok_or_else(|| IdentityError::InvalidParams(format!("missing parameter `{name}`")))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Pairs in the given declaration order (callers guarantee all present).
    fn ordered(&self, order: &[&str]) -> Vec<(String, i64)> {
        order
            .iter()
            .filter_map(|name| self.0.get(*name).map(|v| (name.to_string(), *v)))
            .collect()
    }
}

/// Verification outcome. `Pass` means the canonical forms are identical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Pass => write!(f, "PASS"),
            Outcome::Fail => write!(f, "FAIL"),
            Outcome::Error => write!(f, "ERROR"),
        }
    }
}

/// The outcome of checking one identity instance.
///
/// JSON field names (`id`, `params`, `outcome`, `lhs`, `rhs`, `error`,
/// `elapsed_ms`) are a fixed contract; `lhs`/`rhs` carry the canonical
/// polynomial text of both sides on failure, `error` carries a diagnostic
/// when the check could not be completed.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub id: String,
    /// Parameter pairs in declaration order.
    pub params: Vec<(String, i64)>,
    pub outcome: Outcome,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub error: Option<String>,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    pub fn pass(id: impl Into<String>, params: Vec<(String, i64)>, started: Instant) -> Self {
        Self {
            id: id.into(),
            params,
            outcome: Outcome::Pass,
            lhs: None,
            rhs: None,
            error: None,
            elapsed_ms: elapsed_ms(started),
        }
    }

    pub fn fail(
        id: impl Into<String>,
        params: Vec<(String, i64)>,
        lhs: &LaurentPoly,
        rhs: &LaurentPoly,
        started: Instant,
    ) -> Self {
        Self {
            id: id.into(),
            params,
            outcome: Outcome::Fail,
            lhs: Some(lhs.to_string()),
            rhs: Some(rhs.to_string()),
            error: None,
            elapsed_ms: elapsed_ms(started),
        }
    }

    pub fn error(
        id: impl Into<String>,
        params: Vec<(String, i64)>,
        message: impl Into<String>,
        started: Instant,
    ) -> Self {
        Self {
            id: id.into(),
            params,
            outcome: Outcome::Error,
            lhs: None,
            rhs: None,
            error: Some(message.into()),
            elapsed_ms: elapsed_ms(started),
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    /// One-line text rendering: `<id> <params> PASS|FAIL|ERROR`.
    pub fn text_line(&self) -> String {
        let mut line = self.id.clone();
        for (name, value) in &self.params {
            line.push_str(&format!(" {name}={value}"));
        }
        line.push_str(&format!(" {}", self.outcome));
        line
    }
}

fn elapsed_ms(started: Instant) -> f64 {
    started.elapsed().as_secs_f64() * 1e3
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let fields = 4
            + usize::from(self.lhs.is_some())
            + usize::from(self.rhs.is_some())
            + usize::from(self.error.is_some());
        let mut st = serializer.serialize_struct("VerificationReport", fields)?;
        st.serialize_field("id", &self.id)?;
        st.serialize_field("params", &ParamObject(&self.params))?;
        st.serialize_field("outcome", &self.outcome)?;
        if let Some(lhs) = &self.lhs {
            st.serialize_field("lhs", lhs)?;
        }
        if let Some(rhs) = &self.rhs {
            st.serialize_field("rhs", rhs)?;
        }
        if let Some(error) = &self.error {
            st.serialize_field("error", error)?;
        }
        st.serialize_field("elapsed_ms", &self.elapsed_ms)?;
        st.end()
    }
}

struct ParamObject<'a>(&'a [(String, i64)]);

impl Serialize for ParamObject<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (name, value) in self.0 {
            map.serialize_entry(name, value)?;
        }
        map.end()
    }
}

/// Aggregated result of a grid run: one report per instance, in deterministic
/// parameter order, plus the overall outcome.
#[derive(Clone, Debug, Serialize)]
pub struct GridReport {
    pub id: String,
    pub reports: Vec<VerificationReport>,
    pub elapsed_ms: f64,
}

impl GridReport {
    pub fn outcome(&self) -> Outcome {
        if self.reports.iter().all(VerificationReport::passed) {
            Outcome::Pass
        } else if self.reports.iter().any(|r| r.outcome == Outcome::Error) {
            Outcome::Error
        } else {
            Outcome::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome() == Outcome::Pass
    }

    /// The first non-passing instance, if any.
    pub fn first_failure(&self) -> Option<&VerificationReport> {
        self.reports.iter().find(|r| !r.passed())
    }
}

type BuildFn = fn(&Params) -> Result<RationalFn, IdentityError>;

/// One catalog entry: parameter signature, side builders, equation label,
/// and the classical (q = 1) statement it reduces to.
pub struct IdentityDescriptor {
    pub id: &'static str,
    /// Equation or theorem label used in listings, e.g. `"(10) Theorem 1"`.
    pub equation: &'static str,
    /// Parameter names in declaration order.
    pub params: &'static [&'static str],
    /// Human-readable statement of the q = 1 specialization.
    pub classical: &'static str,
    /// Catalog note, e.g. for identities whose commonly printed form needed
    /// a correction.
    pub note: Option<&'static str>,
    /// Default verification grid `(name, lo, hi)` used by `verify --all`.
    pub default_grid: &'static [(&'static str, i64, i64)],
    pub(crate) validate: fn(&Params) -> Result<(), String>,
    pub(crate) lhs: BuildFn,
    pub(crate) rhs: BuildFn,
    pub(crate) classical_value: fn(&Params) -> BigInt,
}

impl fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("equation", &self.equation)
            .field("params", &self.params)
            .finish()
    }
}

impl IdentityDescriptor {
    /// Check that `params` carries exactly the declared names with values
    /// admitted by this identity's validity predicate.
    pub fn check_params(&self, params: &Params) -> Result<(), IdentityError> {
        for name in self.params {
            params.get(name)?;
        }
        if params.len() != self.params.len() {
            let extra: Vec<&str> = params
                .names()
                .filter(|n| !self.params.contains(n))
                .collect();
            return Err(IdentityError::InvalidParams(format!(
                "unexpected parameter(s) {:?} for `{}`",
                extra, self.id
            )));
        }
        (self.validate)(params).map_err(IdentityError::InvalidParams)
    }

    /// Build one side exactly, as a canonical rational function.
    pub fn build(&self, side: Side, params: &Params) -> Result<RationalFn, IdentityError> {
        self.check_params(params)?;
        match side {
            Side::Lhs => (self.lhs)(params),
            Side::Rhs => (self.rhs)(params),
        }
    }

    /// The integer value both sides must take at q = 1.
    pub fn classical_value(&self, params: &Params) -> Result<BigInt, IdentityError> {
        self.check_params(params)?;
        Ok((self.classical_value)(params))
    }
}

/// The full identity catalog, in stable order with stable ids.
pub fn list_identities() -> &'static [IdentityDescriptor] {
    catalog::CATALOG
}

/// Look up a catalog entry by id.
pub fn find_identity(id: &str) -> Result<&'static IdentityDescriptor, IdentityError> {
    catalog::CATALOG
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| IdentityError::UnknownIdentity(id.to_string()))
}

/// Build one side of an identity for a parameter assignment.
pub fn build_side(id: &str, side: Side, params: &Params) -> Result<RationalFn, IdentityError> {
    find_identity(id)?.build(side, params)
}

/// Normalize a built side down to an ordinary polynomial, or explain why it
/// is not one.
fn side_to_ordinary_poly(side: &RationalFn, label: &str) -> Result<LaurentPoly, String> {
    let poly = side
        .to_poly()
        .map_err(|e| format!("{label} is not a polynomial: {e}"))?;
    if let Some(min) = poly.min_exp() {
        if min < 0 {
            return Err(format!("{label} has negative exponents (lowest {min})"));
        }
    }
    Ok(poly)
}

/// Verify one instance: both sides are built exactly, asserted to be ordinary
/// polynomials, and compared in canonical form.
pub fn verify_instance(id: &str, params: &Params) -> Result<VerificationReport, IdentityError> {
    let desc = find_identity(id)?;
    desc.check_params(params)?;
    let ordered = params.ordered(desc.params);
    let started = Instant::now();
    let lhs = (desc.lhs)(params)?;
    let rhs = (desc.rhs)(params)?;
    let lhs_poly = match side_to_ordinary_poly(&lhs, "lhs") {
        Ok(p) => p,
        Err(msg) => return Ok(VerificationReport::error(id, ordered, msg, started)),
    };
    let rhs_poly = match side_to_ordinary_poly(&rhs, "rhs") {
        Ok(p) => p,
        Err(msg) => return Ok(VerificationReport::error(id, ordered, msg, started)),
    };
    if lhs_poly == rhs_poly {
        Ok(VerificationReport::pass(id, ordered, started))
    } else {
        Ok(VerificationReport::fail(
            id, ordered, &lhs_poly, &rhs_poly, started,
        ))
    }
}

/// Verify an identity over the Cartesian product of per-parameter ranges.
///
/// Instances are enumerated in declaration order of the parameters with each
/// range ascending, so reports are deterministic regardless of how callers
/// consume them.
pub fn verify_grid(
    id: &str,
    ranges: &[(&str, RangeInclusive<i64>)],
) -> Result<GridReport, IdentityError> {
    let desc = find_identity(id)?;
    let started = Instant::now();
    let assignments = grid_assignments(desc, ranges)?;
    let mut reports = Vec::with_capacity(assignments.len());
    for params in &assignments {
        reports.push(verify_instance(id, params)?);
    }
    Ok(GridReport {
        id: id.to_string(),
        reports,
        elapsed_ms: elapsed_ms(started),
    })
}

/// Check the q = 1 specialization: both sides evaluated at one must agree
/// with each other and with the classical closed form on record.
pub fn classical_limit_check(
    id: &str,
    params: &Params,
) -> Result<VerificationReport, IdentityError> {
    let desc = find_identity(id)?;
    desc.check_params(params)?;
    let ordered = params.ordered(desc.params);
    let started = Instant::now();
    let lhs = (desc.lhs)(params)?;
    let rhs = (desc.rhs)(params)?;
    let lhs_poly = match side_to_ordinary_poly(&lhs, "lhs") {
        Ok(p) => p,
        Err(msg) => return Ok(VerificationReport::error(id, ordered, msg, started)),
    };
    let rhs_poly = match side_to_ordinary_poly(&rhs, "rhs") {
        Ok(p) => p,
        Err(msg) => return Ok(VerificationReport::error(id, ordered, msg, started)),
    };
    let lhs_value = lhs_poly.eval_at_one();
    let rhs_value = rhs_poly.eval_at_one();
    let expected = (desc.classical_value)(params);
    if lhs_value == rhs_value && lhs_value == expected {
        Ok(VerificationReport::pass(id, ordered, started))
    } else {
        Ok(VerificationReport {
            id: id.to_string(),
            params: ordered,
            outcome: Outcome::Fail,
            lhs: Some(lhs_value.to_string()),
            rhs: Some(rhs_value.to_string()),
            error: Some(format!("classical value should be {expected}")),
            elapsed_ms: elapsed_ms(started),
        })
    }
}

fn grid_assignments(
    desc: &IdentityDescriptor,
    ranges: &[(&str, RangeInclusive<i64>)],
) -> Result<Vec<Params>, IdentityError> {
    if ranges.is_empty() {
        return Err(IdentityError::InvalidParams("empty range list".into()));
    }
    let mut by_name: BTreeMap<&str, RangeInclusive<i64>> = BTreeMap::new();
    for (name, range) in ranges {
        if !desc.params.contains(name) {
            return Err(IdentityError::InvalidParams(format!(
                "`{}` has no parameter `{name}`",
                desc.id
            )));
        }
        if range.is_empty() {
            return Err(IdentityError::InvalidParams(format!(
                "empty range for parameter `{name}`"
            )));
        }
        by_name.insert(name, range.clone());
    }
    for name in desc.params {
        if !by_name.contains_key(name) {
            return Err(IdentityError::InvalidParams(format!(
                "missing range for parameter `{name}`"
            )));
        }
    }
    let mut assignments = vec![Params::new()];
    for name in desc.params {
        let range = by_name[name].clone();
        let mut next = Vec::with_capacity(assignments.len() * range.clone().count());
        for base in &assignments {
            for value in range.clone() {
                next.push(base.clone().with(name, value));
            }
        }
        assignments = next;
    }
    Ok(assignments)
}

/// Run an identity over its catalog default grid.
pub fn verify_default_grid(id: &str) -> Result<GridReport, IdentityError> {
    let desc = find_identity(id)?;
    let ranges: Vec<(&str, RangeInclusive<i64>)> = desc
        .default_grid
        .iter()
        .map(|(name, lo, hi)| (*name, *lo..=*hi))
        .collect();
    verify_grid(id, &ranges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcalc::q_int;

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn catalog_census() {
        let all = list_identities();
        assert!(all.len() >= 24, "catalog has {} entries", all.len());
        assert!(all.iter().any(|d| d.id == "eq10_theorem1"));
        let mut ids: Vec<&str> = all.iter().map(|d| d.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), all.len(), "ids must be unique");
        for desc in all {
            assert!(!desc.equation.is_empty(), "{} lacks a label", desc.id);
            assert!(!desc.params.is_empty());
            assert!(!desc.classical.is_empty());
            assert!(!desc.default_grid.is_empty());
        }
    }

    #[test]
    fn build_side_examples() {
        let lhs = build_side("eq11_odd_sum", Side::Lhs, &Params::single("n", 2)).unwrap();
        assert_eq!(lhs.to_poly().unwrap(), poly(&[(0, 1), (1, 2), (2, 1)]));

        let lhs = build_side("eq14_wheatstone_group", Side::Lhs, &Params::single("n", 2)).unwrap();
        let expected = q_int(3, 1).shifted(1) + q_int(5, 1);
        assert_eq!(lhs.to_poly().unwrap(), expected);

        let rhs = build_side("eq10_theorem1", Side::Rhs, &Params::single("n", 2)).unwrap();
        assert_eq!(
            rhs.to_poly().unwrap(),
            poly(&[(0, 1), (1, 2), (2, 3), (3, 2), (4, 1)])
        );
    }

    #[test]
    fn verify_instance_examples() {
        let report = verify_instance("eq10_theorem1", &Params::single("n", 2)).unwrap();
        assert!(report.passed(), "{report:?}");

        let report = verify_instance("eq38_theorem5", &Params::single("n", 1)).unwrap();
        assert!(report.passed());
        let side = build_side("eq38_theorem5", Side::Rhs, &Params::single("n", 1)).unwrap();
        let expected = q_int(3, 1) * q_int(3, 4) * q_int(3, 3);
        assert_eq!(side.to_poly().unwrap(), expected);
        // frozen expansion of the three-term left side
        let coeffs = [1, 1, 1, 1, 2, 2, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1];
        let frozen = LaurentPoly::from_terms(
            coeffs.iter().enumerate().map(|(e, c)| (e as i64, *c)),
        );
        assert_eq!(expected, frozen);

        assert_eq!(
            verify_instance("eq10_theorem1", &Params::single("n", 0)).unwrap_err(),
            IdentityError::InvalidParams("requires n >= 1".to_string())
        );
        assert!(matches!(
            verify_instance("nope", &Params::single("n", 1)),
            Err(IdentityError::UnknownIdentity(_))
        ));
        assert!(matches!(
            verify_instance("eq10_theorem1", &Params::from_pairs(&[("n", 2), ("k", 1)])),
            Err(IdentityError::InvalidParams(_))
        ));
    }

    #[test]
    fn verify_grid_small() {
        let grid = verify_grid("eq11_odd_sum", &[("n", 1..=12)]).unwrap();
        assert_eq!(grid.reports.len(), 12);
        assert!(grid.passed());
        assert!(grid.first_failure().is_none());

        let grid = verify_grid("eq19_binsum_a", &[("n", 1..=4), ("k", 1..=4)]).unwrap();
        assert_eq!(grid.reports.len(), 16);
        assert!(grid.passed());
        // declaration order: n outermost, k innermost
        assert_eq!(grid.reports[0].params, vec![("n".into(), 1), ("k".into(), 1)]);
        assert_eq!(grid.reports[1].params, vec![("n".into(), 1), ("k".into(), 2)]);
    }

    #[test]
    fn grid_rejects_bad_ranges() {
        assert!(matches!(
            verify_grid("eq11_odd_sum", &[]),
            Err(IdentityError::InvalidParams(_))
        ));
        assert!(matches!(
            verify_grid("eq11_odd_sum", &[("m", 1..=3)]),
            Err(IdentityError::InvalidParams(_))
        ));
        assert!(matches!(
            verify_grid("eq11_odd_sum", &[("n", 3..=1)]),
            Err(IdentityError::InvalidParams(_))
        ));
    }

    #[test]
    fn classical_limit_examples() {
        let report = classical_limit_check("eq10_theorem1", &Params::single("n", 4)).unwrap();
        assert!(report.passed());

        // Luthy grouping 3+5 = 2^3
        let report =
            classical_limit_check("eq24_luthy", &Params::from_pairs(&[("n", 2), ("k", 1)]))
                .unwrap();
        assert!(report.passed());
        let lhs = build_side("eq24_luthy", Side::Lhs, &Params::from_pairs(&[("n", 2), ("k", 1)]))
            .unwrap();
        assert_eq!(lhs.to_poly().unwrap().eval_at_one(), BigInt::from(8));

        // Luthy grouping 5+7+9+11 = 2^5
        let params = Params::from_pairs(&[("n", 2), ("k", 2)]);
        let report = classical_limit_check("eq24_luthy", &params).unwrap();
        assert!(report.passed());
        let lhs = build_side("eq24_luthy", Side::Lhs, &params).unwrap();
        assert_eq!(lhs.to_poly().unwrap().eval_at_one(), BigInt::from(32));
    }

    #[test]
    fn report_json_contract() {
        let report = verify_instance("eq10_theorem1", &Params::single("n", 3)).unwrap();
        let value: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        assert_eq!(value["id"], "eq10_theorem1");
        assert_eq!(value["params"]["n"], 3);
        assert_eq!(value["outcome"], "pass");
        assert!(value["elapsed_ms"].is_number());
        assert!(value.get("lhs").is_none());
        assert!(value.get("rhs").is_none());
        assert!(value.get("error").is_none());
    }

    #[test]
    fn eq30_three_forms_agree_small() {
        for n in 0..=3 {
            let params = Params::single("n", n);
            let lhs = build_side("eq30_theorem3", Side::Lhs, &params).unwrap();
            let rhs = build_side("eq30_theorem3", Side::Rhs, &params).unwrap();
            let mid = theorem3_middle_form(n).unwrap();
            assert_eq!(lhs, mid, "lhs vs middle at n = {n}");
            assert_eq!(mid, rhs, "middle vs rhs at n = {n}");
        }
    }

    #[test]
    fn eq11_at_triangular_matches_eq10() {
        for n in 1..=6i64 {
            let t = n * (n + 1) / 2;
            for side in [Side::Lhs, Side::Rhs] {
                let via_eq10 = build_side("eq10_theorem1", side, &Params::single("n", n)).unwrap();
                let via_eq11 = build_side("eq11_odd_sum", side, &Params::single("n", t)).unwrap();
                assert_eq!(via_eq10, via_eq11, "n = {n}, side {side:?}");
            }
        }
    }
}
