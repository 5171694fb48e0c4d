//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line. Everything is checked at exact equality; the only
//! tolerances are wall-clock budgets on the large grid runs.
//!
//! The tests serialize on a shared lock so the timed criteria measure clean
//! single-run wall time rather than scheduler contention.

use std::sync::{Mutex, MutexGuard, OnceLock};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qcubes::identities::{
    build_side, classical_limit_check, find_identity, list_identities, theorem3_middle_form,
    verify_grid, Params, Side,
};
use qcubes::lattice::{
    even_region_identity, hook_points, hook_weight_closed_form, odd_region_identity,
    region_points, region_weight_closed_form, square_points, verify_hook_partition,
    verify_region_weight, weight_matrix_text, weight_of,
};
use qcubes::qcalc::{
    gauss_by_pascal_high, gauss_by_pascal_low, gauss_by_product, q_int, triangular,
};
use qcubes::qpoly::LaurentPoly;
use qcubes::telescope::{
    backward_sum, backward_telescope, difference_identity, forward_sum, forward_telescope,
    DifferenceKind, SequenceSpec,
};

fn lock() -> MutexGuard<'static, ()> {
    static GUARD: OnceLock<Mutex<()>> = OnceLock::new();
    GUARD
        .get_or_init(|| Mutex::new(()))
        .lock()
        .unwrap_or_else(|poisoned| poisoned.into_inner())
}

fn conclude(criterion: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("acceptance {criterion}: PASS");
    } else {
        println!("acceptance {criterion}: FAIL ({} problem(s))", failures.len());
        for failure in &failures {
            println!("  - {failure}");
        }
        panic!("acceptance {criterion} failed");
    }
}

fn check_grid(failures: &mut Vec<String>, id: &str, ranges: &[(&str, std::ops::RangeInclusive<i64>)]) {
    match verify_grid(id, ranges) {
        Ok(grid) => {
            if let Some(witness) = grid.first_failure() {
                failures.push(format!("{}: {:?}", id, witness));
            }
        }
        Err(e) => failures.push(format!("{id}: {e}")),
    }
}

fn check_classical_grid(failures: &mut Vec<String>, id: &str, grid: &[(&str, Vec<i64>)]) {
    let mut assignments = vec![Params::new()];
    for (name, values) in grid {
        let mut next = Vec::new();
        for base in &assignments {
            for value in values {
                next.push(base.clone().with(name, *value));
            }
        }
        assignments = next;
    }
    for params in &assignments {
        match classical_limit_check(id, params) {
            Ok(report) if report.passed() => {}
            Ok(report) => failures.push(format!("{id} classical: {report:?}")),
            Err(e) => failures.push(format!("{id} classical: {e}")),
        }
    }
}

#[test]
fn criterion_01_main_theorem_grid() {
    let _guard = lock();
    let mut failures = Vec::new();
    let started = Instant::now();
    check_grid(&mut failures, "eq10_theorem1", &[("n", 1..=40)]);
    let elapsed = started.elapsed();

    let rhs = build_side("eq10_theorem1", Side::Rhs, &Params::single("n", 40))
        .unwrap()
        .to_poly()
        .unwrap();
    if rhs != q_int(820, 1).pow(2) {
        failures.push("RHS at n = 40 is not [820]^2".into());
    }
    if rhs.max_exp() != Some(1638) {
        failures.push(format!("RHS degree at n = 40 is {:?}, not 1638", rhs.max_exp()));
    }
    if elapsed > Duration::from_secs(2) {
        failures.push(format!("grid took {elapsed:?}, budget 2 s"));
    }
    conclude("criterion 01 (Theorem 1, n = 1..40, exact)", failures);
}

#[test]
fn criterion_02_prior_q_analogues() {
    let _guard = lock();
    let mut failures = Vec::new();
    let started = Instant::now();
    check_grid(&mut failures, "eq6_garrett_hummel", &[("n", 1..=40)]);
    check_grid(&mut failures, "eq7_warnaar", &[("n", 1..=40)]);
    check_grid(&mut failures, "eq8_zhao_feng", &[("n", 0..=40)]);
    let elapsed = started.elapsed();
    if elapsed > Duration::from_secs(3) {
        failures.push(format!("grids took {elapsed:?}, budget 3 s"));
    }
    conclude("criterion 02 (prior analogues (6)(7)(8), exact)", failures);
}

#[test]
fn criterion_03_odd_sum_and_wheatstone_grouping() {
    let _guard = lock();
    let mut failures = Vec::new();
    check_grid(&mut failures, "eq11_odd_sum", &[("n", 1..=60)]);
    check_grid(&mut failures, "eq14_wheatstone_group", &[("n", 1..=60)]);
    let range: Vec<i64> = (1..=60).collect();
    check_classical_grid(&mut failures, "eq11_odd_sum", &[("n", range.clone())]);
    check_classical_grid(&mut failures, "eq14_wheatstone_group", &[("n", range)]);
    // spot-check the classical content: sum of the first n odd numbers
    for n in [1i64, 7, 60] {
        let lhs = build_side("eq11_odd_sum", Side::Lhs, &Params::single("n", n))
            .unwrap()
            .to_poly()
            .unwrap();
        if lhs.eval_at_one() != BigInt::from(n * n) {
            failures.push(format!("odd-sum classical value wrong at n = {n}"));
        }
    }
    conclude("criterion 03 (identities (11) and (14), n = 1..60)", failures);
}

/// Forward and backward telescoping with step-by-step partial-sum
/// consistency, mirroring the two inductive manipulations.
fn exhaust_telescope(failures: &mut Vec<String>, seq: &SequenceSpec, max_n: u64) {
    let mut prefix: u64 = 0;
    let mut forward_prev = LaurentPoly::zero();
    let mut backward_prev = LaurentPoly::zero();
    for n in 1..=max_n {
        let fwd = forward_telescope(seq, n);
        if !fwd.passed() {
            failures.push(format!("forward {} fails at n = {n}", seq.name()));
        }
        let bwd = backward_telescope(seq, n);
        if !bwd.passed() {
            failures.push(format!("backward {} fails at n = {n}", seq.name()));
        }
        let a_n = seq.term(n);
        let forward_now = forward_sum(seq, n);
        let expected = &forward_prev + &q_int(a_n, 1).shifted(prefix as i64);
        if forward_now != expected {
            failures.push(format!(
                "forward partial-sum step fails for {} at n = {n}",
                seq.name()
            ));
        }
        let backward_now = backward_sum(seq, n);
        let expected = backward_prev.shifted(a_n as i64) + q_int(a_n, 1);
        if backward_now != expected {
            failures.push(format!(
                "backward partial-sum step fails for {} at n = {n}",
                seq.name()
            ));
        }
        prefix += a_n;
        forward_prev = forward_now;
        backward_prev = backward_now;
    }
}

#[test]
fn criterion_04_telescoping_families() {
    let _guard = lock();
    let mut failures = Vec::new();

    exhaust_telescope(&mut failures, &SequenceSpec::new("j", |j| j), 30);
    exhaust_telescope(&mut failures, &SequenceSpec::new("j^2", |j| j * j), 30);
    exhaust_telescope(&mut failures, &SequenceSpec::new("j^3", |j| j * j * j), 30);
    exhaust_telescope(&mut failures, &SequenceSpec::new("2j-1", |j| 2 * j - 1), 30);
    // The geometric sequence is capped at n = 12: its telescoped total at
    // n = 30 would be a polynomial with about 1.5e14 stored terms, far beyond
    // any memory budget. n = 12 already exercises ~4e5-term polynomials.
    exhaust_telescope(
        &mut failures,
        &SequenceSpec::new("(3^j-1)/2", |j| (3u64.pow(j as u32) - 1) / 2),
        12,
    );
    for seed in 0..20u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values: Vec<u64> = (0..30).map(|_| rng.gen_range(1..=40)).collect();
        let seq = SequenceSpec::new(format!("seeded{seed}"), move |j| values[j as usize - 1]);
        exhaust_telescope(&mut failures, &seq, 30);
    }

    // Theorem 2 is the j^3 instance, also pinned through the catalog.
    check_grid(&mut failures, "eq17_cube_forward", &[("n", 1..=30)]);
    check_grid(&mut failures, "eq18_cube_backward", &[("n", 1..=30)]);

    conclude(
        "criterion 04 (telescoping (15)(16) families + Theorem 2)",
        failures,
    );
}

#[test]
fn criterion_05_difference_identities() {
    let _guard = lock();
    let mut failures = Vec::new();
    for kind in [
        DifferenceKind::GarrettHummel,
        DifferenceKind::Warnaar,
        DifferenceKind::ZhaoFeng,
        DifferenceKind::TriangularQInt,
    ] {
        for n in 1..=40 {
            let report = difference_identity(kind, n);
            if !report.passed() {
                failures.push(format!("{kind:?} at n = {n}: {report:?}"));
            }
        }
    }
    conclude("criterion 05 (difference identities incl. (9), n = 1..40)", failures);
}

#[test]
fn criterion_06_lattice_oracle() {
    let _guard = lock();
    let mut failures = Vec::new();

    for n in 1..=12u64 {
        let report = verify_hook_partition(n);
        if !report.passed() {
            failures.push(format!("hook partition fails at n = {n}: {report:?}"));
        }
        for k in 1..=n {
            let hook = hook_points(k, n).unwrap();
            let weight = weight_of(&hook, n).unwrap();
            if weight != hook_weight_closed_form(k, n) {
                failures.push(format!("hook weight mismatch at (k, n) = ({k}, {n})"));
            }
        }
    }

    for n in 1..=8u64 {
        let ambient = triangular(n);
        let mut union = std::collections::BTreeSet::new();
        let mut total = LaurentPoly::zero();
        for j in 1..=n {
            let report = verify_region_weight(j, n);
            if !report.passed() {
                failures.push(format!("region weight fails at (j, n) = ({j}, {n})"));
            }
            let region = region_points(j, n).unwrap();
            if region.len() as u64 != j * j * j {
                failures.push(format!("|R_{j}| != {j}^3 at n = {n}"));
            }
            if !union.is_disjoint(&region) {
                failures.push(format!("R_{j} overlaps earlier regions at n = {n}"));
            }
            union.extend(region.iter().copied());
            total = total + weight_of(&region, ambient).unwrap();
            if weight_of(&region, ambient).unwrap() != region_weight_closed_form(j, n) {
                failures.push(format!("region closed form fails at (j, n) = ({j}, {n})"));
            }
        }
        if union != square_points(ambient) {
            failures.push(format!("regions do not cover S_{ambient} at n = {n}"));
        }
        if total != q_int(ambient, 1).pow(2) {
            failures.push(format!("region weights do not sum to [T({n})]^2"));
        }
    }

    let golden = "\
q^5 q^6 q^7 q^8 q^9 q^10
q^4 q^5 q^6 q^7 q^8 q^9
q^3 q^4 q^5 q^6 q^7 q^8
q^2 q^3 q^4 q^5 q^6 q^7
q q^2 q^3 q^4 q^5 q^6
1 q q^2 q^3 q^4 q^5";
    let matrix = weight_matrix_text(6);
    if matrix != golden {
        failures.push(format!("6x6 weight matrix mismatch:\n{matrix}"));
    }
    if matrix.split_whitespace().count() != 36 {
        failures.push("6x6 matrix does not have 36 entries".into());
    }

    conclude("criterion 06 (lattice oracle: hooks, regions, matrix)", failures);
}

#[test]
fn criterion_07_region_weight_chains() {
    let _guard = lock();
    let mut failures = Vec::new();
    for j in (1..=15u64).step_by(2) {
        let report = odd_region_identity(j);
        if !report.passed() {
            failures.push(format!("odd chain fails at j = {j}: {report:?}"));
        }
    }
    for ell in 1..=8u64 {
        let report = even_region_identity(ell);
        if !report.passed() {
            failures.push(format!("even chain fails at l = {ell}: {report:?}"));
        }
    }
    conclude("criterion 07 (odd/even region weight chains)", failures);
}

#[test]
fn criterion_08_binomial_sums_and_cubes() {
    let _guard = lock();
    let mut failures = Vec::new();
    for n in 1..=20i64 {
        check_grid(&mut failures, "eq19_binsum_a", &[("n", n..=n), ("k", 1..=n)]);
        check_grid(&mut failures, "eq20_binsum_b", &[("n", n..=n), ("k", 1..=n)]);
    }
    check_grid(&mut failures, "cube_expansion", &[("n", 1..=30)]);
    check_grid(&mut failures, "eq21_qcube_sum", &[("n", 1..=30)]);
    check_grid(&mut failures, "eq21_aux", &[("n", 1..=30)]);
    conclude("criterion 08 ((19)(20), cube expansion, (21))", failures);
}

#[test]
fn criterion_09_luthy_groupings() {
    let _guard = lock();
    let mut failures = Vec::new();
    check_grid(&mut failures, "eq24_luthy", &[("n", 2..=5), ("k", 0..=4)]);
    check_classical_grid(
        &mut failures,
        "eq24_luthy",
        &[("n", (2..=5).collect()), ("k", (0..=4).collect())],
    );
    // the odd-block groupings behind the identity: 3+5 = 2^3, 5+7+9+11 = 2^5
    for (k, expected) in [(1i64, 8i64), (2, 32), (4, 512)] {
        let params = Params::from_pairs(&[("n", 2), ("k", k)]);
        let lhs = build_side("eq24_luthy", Side::Lhs, &params)
            .unwrap()
            .to_poly()
            .unwrap();
        if lhs.eval_at_one() != BigInt::from(expected) {
            failures.push(format!("Luthy classical value at (2, {k}) is not {expected}"));
        }
    }
    conclude("criterion 09 (Luthy (24), n = 2..5, k = 0..4)", failures);
}

#[test]
fn criterion_10_later_sections_and_full_run() {
    let _guard = lock();
    let mut failures = Vec::new();
    check_grid(&mut failures, "eq25", &[("n", 1..=40)]);
    check_grid(&mut failures, "eq26", &[("n", 0..=15), ("m", 0..=6)]);
    check_grid(&mut failures, "eq29_theorem3", &[("n", 0..=6)]);
    check_grid(&mut failures, "eq30_theorem3", &[("n", 0..=6)]);
    check_grid(&mut failures, "eq31_schlosser", &[("n", 0..=40)]);
    check_grid(&mut failures, "eq32", &[("n", 1..=20)]);
    check_grid(&mut failures, "eq33", &[("n", 1..=20)]);
    check_grid(&mut failures, "eq34", &[("n", 1..=8), ("m", 0..=3)]);
    check_grid(&mut failures, "eq35_theorem4a", &[("n", 1..=25)]);
    check_grid(&mut failures, "eq36_theorem4b", &[("n", 1..=25)]);
    check_grid(&mut failures, "eq37_theorem4c", &[("n", 1..=25)]);
    check_grid(&mut failures, "eq38_theorem5", &[("n", 1..=20)]);

    // three-way equality of the Theorem 3 chain forms
    for n in 0..=6 {
        let params = Params::single("n", n);
        let lhs = build_side("eq30_theorem3", Side::Lhs, &params).unwrap();
        let rhs = build_side("eq30_theorem3", Side::Rhs, &params).unwrap();
        let mid = theorem3_middle_form(n).unwrap();
        if lhs != mid || mid != rhs {
            failures.push(format!("Theorem 3 three-way equality fails at n = {n}"));
        }
    }

    // the full default run, end to end through the CLI, inside the budget
    let started = Instant::now();
    let args: Vec<String> = vec!["verify".into(), "--all".into()];
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = qcubes::cli::run(&args, &mut out, &mut err);
    let elapsed = started.elapsed();
    if code != 0 {
        failures.push(format!(
            "verify --all exited {code}: {}",
            String::from_utf8_lossy(&err)
        ));
    }
    let text = String::from_utf8(out).unwrap();
    let expected_instances: usize = list_identities()
        .iter()
        .map(|d| {
            d.default_grid
                .iter()
                .map(|(_, lo, hi)| (hi - lo + 1) as usize)
                .product::<usize>()
        })
        .sum();
    let pass_lines = text.lines().filter(|l| l.ends_with(" PASS")).count();
    if pass_lines != expected_instances {
        failures.push(format!(
            "verify --all printed {pass_lines} pass lines, expected {expected_instances}"
        ));
    }
    if elapsed > Duration::from_secs(30) {
        failures.push(format!("verify --all took {elapsed:?}, budget 30 s"));
    }

    conclude("criterion 10 (later identities + full default run < 30 s)", failures);
}

#[test]
fn criterion_11_cross_oracle_agreement() {
    let _guard = lock();
    let mut failures = Vec::new();

    for n in 0..=30u64 {
        for k in 0..=n as i64 {
            let product = gauss_by_product(n, k);
            if product != gauss_by_pascal_low(n, k) || product != gauss_by_pascal_high(n, k) {
                failures.push(format!("Gaussian routes disagree at ({n}, {k})"));
            }
        }
    }

    // lattice-enumerated main-theorem LHS equals the symbolic LHS
    for n in 1..=8u64 {
        let ambient = triangular(n);
        let mut enumerated = LaurentPoly::zero();
        for j in 1..=n {
            let region = region_points(j, n).unwrap();
            enumerated = enumerated + weight_of(&region, ambient).unwrap();
        }
        let symbolic = build_side("eq10_theorem1", Side::Lhs, &Params::single("n", n as i64))
            .unwrap()
            .to_poly()
            .unwrap();
        if enumerated != symbolic {
            failures.push(format!("lattice vs symbolic LHS mismatch at n = {n}"));
        }
    }

    // the regrouping step: (11) at T(n) coincides with (10) at n, both sides
    for n in 1..=10i64 {
        let t = n * (n + 1) / 2;
        for side in [Side::Lhs, Side::Rhs] {
            let via_eq10 = build_side("eq10_theorem1", side, &Params::single("n", n)).unwrap();
            let via_eq11 = build_side("eq11_odd_sum", side, &Params::single("n", t)).unwrap();
            if via_eq10 != via_eq11 {
                failures.push(format!("eq10/eq11 chaining fails at n = {n} ({side:?})"));
            }
        }
    }

    conclude("criterion 11 (cross-oracle agreement)", failures);
}

#[test]
fn criterion_12_classical_limit_suite() {
    let _guard = lock();
    let mut failures = Vec::new();
    let to = |hi: i64| -> Vec<i64> { (1..=hi).collect() };

    // cube sums -> T(n)^2
    for id in ["eq6_garrett_hummel", "eq10_theorem1"] {
        check_classical_grid(&mut failures, id, &[("n", to(40))]);
    }
    check_classical_grid(&mut failures, "eq7_warnaar", &[("n", to(40))]);
    check_classical_grid(&mut failures, "eq8_zhao_feng", &[("n", (0..=40).collect())]);
    for id in ["eq17_cube_forward", "eq18_cube_backward", "eq21_qcube_sum"] {
        check_classical_grid(&mut failures, id, &[("n", to(30))]);
    }
    // odd numbers -> n^2, Wheatstone groups -> n^3
    check_classical_grid(&mut failures, "eq11_odd_sum", &[("n", to(60))]);
    check_classical_grid(&mut failures, "eq14_wheatstone_group", &[("n", to(60))]);
    // triangular sums -> C(n+1,2)
    check_classical_grid(&mut failures, "eq21_aux", &[("n", to(30))]);
    check_classical_grid(&mut failures, "eq31_schlosser", &[("n", (0..=40).collect())]);
    // Luthy blocks -> n^(2k+1)
    check_classical_grid(
        &mut failures,
        "eq24_luthy",
        &[("n", (2..=5).collect()), ("k", (0..=4).collect())],
    );
    // powers of three: block sums -> 9^n, cumulative -> 1 + 9 + ... + 9^n
    check_classical_grid(&mut failures, "eq29_theorem3", &[("n", (0..=6).collect())]);
    check_classical_grid(&mut failures, "eq30_theorem3", &[("n", (0..=6).collect())]);

    // pin a few closed-form values directly
    let t40 = BigInt::from(820);
    let lhs = build_side("eq10_theorem1", Side::Lhs, &Params::single("n", 40))
        .unwrap()
        .to_poly()
        .unwrap();
    if lhs.eval_at_one() != &t40 * &t40 {
        failures.push("sum of first 40 cubes is not 820^2".into());
    }
    let eq29 = find_identity("eq29_theorem3").unwrap();
    if eq29.classical_value(&Params::single("n", 6)).unwrap() != BigInt::from(531441i64) {
        failures.push("block sum at n = 6 is not 3^12".into());
    }

    conclude("criterion 12 (classical limits at q = 1)", failures);
}
