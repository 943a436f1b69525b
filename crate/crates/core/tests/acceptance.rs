//! Acceptance suite: every identity the library asserts, checked as exact
//! equalities in Q(q) over the stated parameter grids, one criterion per
//! test. Run with `--nocapture` to see the one-line verdicts.
//!
//! All comparisons are exact; there are no tolerances anywhere.

use planepart_core::parallel::Jobs;
use planepart_core::verify::{run_suite, Suite, SuiteOptions, VerificationReport};

fn opts(max_n: i64, max_c: i64) -> SuiteOptions {
    SuiteOptions {
        max_n,
        max_c,
        jobs: Jobs::Default,
        fast_filter: true,
    }
}

fn assert_all_pass(criterion: &str, report: &VerificationReport) {
    let verdict = if report.all_pass() { "PASS" } else { "FAIL" };
    println!(
        "ACCEPTANCE {criterion} [{} n<={} c<={}]: {verdict} ({} instances)",
        report.suite,
        report.max_n,
        report.max_c,
        report.instances.len()
    );
    if !report.all_pass() {
        for inst in report.instances.iter().filter(|i| !i.pass) {
            eprintln!(
                "  FAILED {} {:?}: detail={:?} lhs={:?} rhs={:?}",
                inst.identity, inst.params, inst.detail, inst.lhs, inst.rhs
            );
        }
        panic!("{criterion} failed with {} instances", report.failed());
    }
}

/// Criterion 1: the closed quasi-polynomial equals brute-force enumeration,
/// for all n in 1..=4, c in 0..=5, p in 0..=n, k in -n-1..=c+n+1.
#[test]
fn criterion_1_theorem1_grid() {
    let report = run_suite(Suite::Theorem1, &opts(4, 5));
    assert_eq!(
        report.instances.len(),
        (1..=4i64)
            .map(|n| (0..=5i64).map(|c| ((c + n + 1) - (-n - 1) + 1) * (n + 1)).sum::<i64>())
            .sum::<i64>() as usize,
        "grid covers every (n,c,p,k) cell"
    );
    assert_all_pass("1", &report);
}

/// Criterion 2: closed refined generating functions equal brute enumeration
/// for n <= 4, c <= 6, and their p-sum is the Bender-Knuth product, with the
/// frozen spot value at n = 2, c = 2.
#[test]
fn criterion_2_bender_knuth() {
    let report = run_suite(Suite::Bk, &opts(4, 6));
    assert!(report
        .instances
        .iter()
        .any(|i| i.identity == "bk/spot" && i.params == vec![("n", 2), ("c", 2)]));
    assert_all_pass("2", &report);
}

/// Criterion 3: the oracle triangle: brute enumeration equals the
/// iterated-sum recursion for n <= 3, all r, c <= 3, argument vectors in
/// [-2, c+2]^(n-r), signed regions included.
#[test]
fn criterion_3_oracle_triangle() {
    let report = run_suite(Suite::Oracle, &opts(3, 3));
    assert_all_pass("3", &report);
}

/// Criterion 4: the forced zeros and all four special-evaluation identities
/// on n <= 4, c <= 4.
#[test]
fn criterion_4_zeros_and_initial() {
    let report = run_suite(Suite::Zeros, &opts(4, 4));
    assert_all_pass("4a", &report);
    let report = run_suite(Suite::Initial, &opts(4, 4));
    assert_all_pass("4b", &report);
}

/// Criterion 5: the recursive and closed routes to L and M agree on n <= 4,
/// c <= 5, every p; the three recursion denominators match their closed
/// product forms on the same grid, nonzero exactly where the recursion
/// divides.
#[test]
fn criterion_5_recursion_vs_final() {
    let report = run_suite(Suite::RecursionVsFinal, &opts(4, 5));
    assert_all_pass("5a", &report);
    let report = run_suite(Suite::Denominator, &opts(4, 5));
    assert_all_pass("5b", &report);
}

/// Criterion 6: the summation and special-value identities (the two full
/// sums run one row of n further, to 5), c <= 6, both parities throughout.
#[test]
fn criterion_6_q_summation_identities() {
    let report = run_suite(Suite::Qsums, &opts(4, 6));
    for name in ["qsums/s1", "qsums/s2", "qsums/s3", "qsums/s4", "qsums/s5", "qsums/s6", "qsums/hypo", "qsums/hypo-companion"]
    {
        assert!(
            report.instances.iter().any(|i| i.identity == name),
            "{name} instances present"
        );
    }
    assert!(
        report
            .instances
            .iter()
            .any(|i| i.identity == "qsums/s2" && i.params.contains(&("n", 5))),
        "s2 reaches n = 5"
    );
    assert!(
        report
            .instances
            .iter()
            .any(|i| i.identity == "qsums/hypo" && i.params.contains(&("n", 5))),
        "hypo reaches n = 5"
    );
    assert_all_pass("6", &report);
}

/// Criterion 7: structure checks: the signed part of the closed form is
/// L * Y^{n-1}, and quasi-polynomial fitting of brute samples succeeds
/// within degree bound 2n-2 and predicts three held-out evaluations, n <= 4.
#[test]
fn criterion_7_structure_and_degree() {
    let report = run_suite(Suite::Degree, &opts(4, 5));
    assert!(report.instances.iter().any(|i| i.identity == "degree/fit"));
    assert!(report
        .instances
        .iter()
        .any(|i| i.identity == "degree/signed-part"));
    assert_all_pass("7", &report);
}

/// Criterion 8: the bijection round trips, preserves the norm, and carries
/// the statistics across, over full enumerations for n <= 4, c <= 4,
/// including the worked golden example.
#[test]
fn criterion_8_bijection() {
    let report = run_suite(Suite::Bijection, &opts(4, 4));
    assert!(report.instances.iter().any(|i| i.identity == "bijection/golden"));
    assert_all_pass("8", &report);
}

/// Beyond the stated grids: one extra row of n. Slow; run explicitly with
/// `cargo test --release -- --ignored`.
#[test]
#[ignore]
fn stress_theorem1_n5() {
    let report = run_suite(
        Suite::Theorem1,
        &SuiteOptions {
            max_n: 5,
            max_c: 2,
            jobs: Jobs::Default,
            fast_filter: true,
        },
    );
    assert_all_pass("stress-n5", &report);
}
