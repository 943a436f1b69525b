//! Grid-based verification suites with machine-readable reports.
//!
//! Every suite runs a family of exact identity checks over a parameter grid
//! and reports one record per instance. Instances are independently
//! computable, so the runner distributes them over the worker pool and
//! merges results in parameter order; all arithmetic is exact, which makes
//! reports identical for every `--jobs` value. Timing fields are rendered
//! only on request so that default output is byte-stable.
//!
//! The optional fast filter evaluates both sides of an equality at a fixed
//! sequence of rational points (skipping poles) and may short-circuit an
//! instance to *fail* early; equality is always decided by the exact
//! symbolic comparison.

use std::time::Instant;

use serde_json::{json, Value};

use crate::closedform::{
    bk_product, denominator_product_sides, f_closed, g_closed, hypo_companion, hypo_sum,
    l_closed, l_recursive, m_closed, m_recursive, signed_part_is_l_times_y, sum_over_p_l,
    sum_over_p_m, sum_u, sum_w, u_quasi, u_special, DenominatorKind, SpecialPoint,
};
use crate::exactq::{ratio, RationalFunction};
use crate::genfun::{f_brute_all, f_brute_general_all, g_brute, g_recursion_grid, TopRowFunction};
use crate::parallel::{map_ordered, with_jobs, Jobs};
use crate::patterns::{gt_enumerate, gt_to_spp, spp_enumerate, spp_to_gt, spp_validate};
use crate::qsymb::{fit_quasi, quasi_eval};
use crate::{Error, Result};

/// The verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Closed quasi-polynomial against brute enumeration on the full grid.
    Theorem1,
    /// Forced zeros of the signed generating function, brute and closed.
    Zeros,
    /// The four special-evaluation identities.
    Initial,
    /// Recursive L and M against their closed product forms.
    RecursionVsFinal,
    /// Summation and special-value identities for U and W.
    Qsums,
    /// Closed product forms of the three recursion denominators.
    Denominator,
    /// Round trips and statistics of the pattern bijection.
    Bijection,
    /// Refined generating functions and the Bender-Knuth product.
    Bk,
    /// The two sum-over-p consequences.
    SumOverP,
    /// Degree bound via quasi-polynomial fitting, and the signed-part shape.
    Degree,
    /// Brute enumeration against the iterated-sum recursion, all r.
    Oracle,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Zeros => "zeros",
            Suite::Initial => "initial",
            Suite::RecursionVsFinal => "recursion-vs-final",
            Suite::Qsums => "qsums",
            Suite::Denominator => "denominator",
            Suite::Bijection => "bijection",
            Suite::Bk => "bk",
            Suite::SumOverP => "sum-over-p",
            Suite::Degree => "degree",
            Suite::Oracle => "oracle",
        }
    }

    pub fn parse(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::all().to_vec());
        }
        Suite::all()
            .iter()
            .find(|suite| suite.name() == s)
            .map(|s| vec![*s])
            .ok_or_else(|| Error::InvalidParams(format!("unknown suite {s:?}")))
    }

    pub fn all() -> [Suite; 11] {
        [
            Suite::Theorem1,
            Suite::Zeros,
            Suite::Initial,
            Suite::RecursionVsFinal,
            Suite::Qsums,
            Suite::Denominator,
            Suite::Bijection,
            Suite::Bk,
            Suite::SumOverP,
            Suite::Degree,
            Suite::Oracle,
        ]
    }
}

/// Grid bounds and runner configuration.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub max_n: i64,
    pub max_c: i64,
    pub jobs: Jobs,
    pub fast_filter: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            max_n: 3,
            max_c: 4,
            jobs: Jobs::Default,
            fast_filter: true,
        }
    }
}

/// Outcome of a single identity instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub identity: String,
    pub params: Vec<(&'static str, i64)>,
    pub pass: bool,
    pub lhs: Option<RationalFunction>,
    pub rhs: Option<RationalFunction>,
    pub detail: Option<String>,
    pub elapsed_ms: u128,
}

impl Instance {
    fn to_json(&self, timings: bool) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("identity".into(), json!(self.identity));
        let params: serde_json::Map<String, Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect();
        obj.insert("params".into(), Value::Object(params));
        obj.insert(
            "status".into(),
            json!(if self.pass { "pass" } else { "fail" }),
        );
        if let Some(lhs) = &self.lhs {
            obj.insert("lhs".into(), lhs.to_json());
        }
        if let Some(rhs) = &self.rhs {
            obj.insert("rhs".into(), rhs.to_json());
        }
        if let Some(detail) = &self.detail {
            obj.insert("detail".into(), json!(detail));
        }
        if timings {
            obj.insert("elapsed_ms".into(), json!(self.elapsed_ms as u64));
        }
        Value::Object(obj)
    }
}

/// Machine-readable outcome of one suite over a parameter grid.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub max_n: i64,
    pub max_c: i64,
    pub instances: Vec<Instance>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> usize {
        self.instances.iter().filter(|i| i.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.instances.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    /// Failures are serialized with both sides; passing instances stay
    /// compact. Timings are included only when requested.
    pub fn to_json(&self, timings: bool) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("suite".into(), json!(self.suite));
        obj.insert("max_n".into(), json!(self.max_n));
        obj.insert("max_c".into(), json!(self.max_c));
        obj.insert("passed".into(), json!(self.passed()));
        obj.insert("failed".into(), json!(self.failed()));
        obj.insert(
            "instances".into(),
            Value::Array(self.instances.iter().map(|i| i.to_json(timings)).collect()),
        );
        if timings {
            obj.insert("elapsed_ms".into(), json!(self.elapsed_ms as u64));
        }
        Value::Object(obj)
    }
}

/// Fixed evaluation points for the fast filter, ordered; poles skip to the
/// next point.
const FILTER_POINTS: [(i64, i64); 6] = [(2, 1), (3, 2), (5, 3), (7, 5), (11, 7), (13, 11)];

fn sides_equal(fast: bool, lhs: &RationalFunction, rhs: &RationalFunction) -> bool {
    if fast {
        let mut used = 0;
        for (p, q) in FILTER_POINTS {
            if used == 3 {
                break;
            }
            let v = ratio(p, q);
            if let (Ok(a), Ok(b)) = (lhs.eval_at(&v), rhs.eval_at(&v)) {
                used += 1;
                if a != b {
                    return false;
                }
            }
        }
    }
    lhs == rhs
}

fn eq_instance(
    identity: &str,
    params: Vec<(&'static str, i64)>,
    lhs: RationalFunction,
    rhs: RationalFunction,
    fast: bool,
    started: Instant,
) -> Instance {
    let pass = sides_equal(fast, &lhs, &rhs);
    Instance {
        identity: identity.to_string(),
        params,
        pass,
        lhs: (!pass).then_some(lhs),
        rhs: (!pass).then_some(rhs),
        detail: None,
        elapsed_ms: started.elapsed().as_millis(),
    }
}

fn check_instance(
    identity: &str,
    params: Vec<(&'static str, i64)>,
    outcome: Result<()>,
    started: Instant,
) -> Instance {
    let (pass, detail) = match outcome {
        Ok(()) => (true, None),
        Err(e) => (false, Some(e.to_string())),
    };
    Instance {
        identity: identity.to_string(),
        params,
        pass,
        lhs: None,
        rhs: None,
        detail,
        elapsed_ms: started.elapsed().as_millis(),
    }
}

/// Runs one suite inside the worker pool configured by `opts.jobs`.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> VerificationReport {
    with_jobs(opts.jobs, || run_suite_inner(suite, opts))
}

/// Runs several suites inside a single worker pool, in the given order.
pub fn run_suites(suites: &[Suite], opts: &SuiteOptions) -> Vec<VerificationReport> {
    with_jobs(opts.jobs, || {
        suites.iter().map(|s| run_suite_inner(*s, opts)).collect()
    })
}

/// Runs suites with per-suite options inside a single worker pool.
pub fn run_each(jobs: Jobs, configs: &[(Suite, SuiteOptions)]) -> Vec<VerificationReport> {
    with_jobs(jobs, || {
        configs
            .iter()
            .map(|(suite, opts)| run_suite_inner(*suite, opts))
            .collect()
    })
}

fn run_suite_inner(suite: Suite, opts: &SuiteOptions) -> VerificationReport {
    let started = Instant::now();
    let instances = match suite {
        Suite::Theorem1 => theorem1_instances(opts),
        Suite::Zeros => zeros_instances(opts),
        Suite::Initial => initial_instances(opts),
        Suite::RecursionVsFinal => recursion_instances(opts),
        Suite::Qsums => qsums_instances(opts),
        Suite::Denominator => denominator_instances(opts),
        Suite::Bijection => bijection_instances(opts),
        Suite::Bk => bk_instances(opts),
        Suite::SumOverP => sum_over_p_instances(opts),
        Suite::Degree => degree_instances(opts),
        Suite::Oracle => oracle_instances(opts),
    };
    VerificationReport {
        suite: suite.name().to_string(),
        max_n: opts.max_n,
        max_c: opts.max_c,
        instances,
        elapsed_ms: started.elapsed().as_millis(),
    }
}

fn grid_nc(opts: &SuiteOptions) -> Vec<(i64, i64)> {
    let mut units = Vec::new();
    for n in 1..=opts.max_n {
        for c in 0..=opts.max_c {
            units.push((n, c));
        }
    }
    units
}

// ---------------------------------------------------------------------------

fn theorem1_instances(opts: &SuiteOptions) -> Vec<Instance> {
    // hoist the closed quasi-polynomials: one construction serves the whole
    // k-range of a (n,c) cell
    let closed: std::collections::HashMap<(i64, i64), Vec<crate::qsymb::QQuasiPolynomialK>> =
        grid_nc(opts)
            .into_iter()
            .map(|(n, c)| ((n, c), (0..=n).map(|p| f_closed(n, c, p)).collect()))
            .collect();
    let mut units = Vec::new();
    for n in 1..=opts.max_n {
        for c in 0..=opts.max_c {
            for k in -n - 1..=c + n + 1 {
                units.push((n, c, k));
            }
        }
    }
    let fast = opts.fast_filter;
    map_ordered(units, |(n, c, k)| {
        let brute = f_brute_all(n as usize, c, k);
        let fs = &closed[&(n, c)];
        (0..=n)
            .map(|p| {
                let started = Instant::now();
                let lhs = quasi_eval(&fs[p as usize], k);
                let rhs = RationalFunction::from_laurent(brute[p as usize].clone());
                eq_instance(
                    "theorem1",
                    vec![("n", n), ("c", c), ("p", p), ("k", k)],
                    lhs,
                    rhs,
                    fast,
                    started,
                )
            })
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

fn zeros_instances(opts: &SuiteOptions) -> Vec<Instance> {
    let fast = opts.fast_filter;
    map_ordered(grid_nc(opts), |(n, c)| {
        let mut out = Vec::new();
        let zero_ks: Vec<i64> = (-n + 1..=-1).chain(c + 1..=c + n - 1).collect();
        for k in zero_ks {
            let brute = f_brute_all(n as usize, c, k);
            for p in 0..=n {
                let started = Instant::now();
                out.push(eq_instance(
                    "zeros/brute",
                    vec![("n", n), ("c", c), ("p", p), ("k", k)],
                    RationalFunction::from_laurent(brute[p as usize].clone()),
                    RationalFunction::zero(),
                    fast,
                    started,
                ));
                let started = Instant::now();
                out.push(eq_instance(
                    "zeros/closed",
                    vec![("n", n), ("c", c), ("p", p), ("k", k)],
                    quasi_eval(&f_closed(n, c, p), k),
                    RationalFunction::zero(),
                    fast,
                    started,
                ));
            }
        }
        out
    })
    .into_iter()
    .flatten()
    .collect()
}

fn initial_instances(opts: &SuiteOptions) -> Vec<Instance> {
    let fast = opts.fast_filter;
    map_ordered(grid_nc(opts), |(n, c)| {
        let mut out = Vec::new();
        let nu = n as usize;
        let sgn = RationalFunction::from_int(if (n - 1) % 2 == 0 { 1 } else { -1 });

        let at0 = f_brute_all(nu, c, 0);
        for p in 0..n {
            let started = Instant::now();
            out.push(eq_instance(
                "initial/at-0",
                vec![("n", n), ("c", c), ("p", p)],
                RationalFunction::from_laurent(at0[p as usize].clone()),
                g_brute(nu - 1, c, p).expect("dual-route generating function"),
                fast,
                started,
            ));
        }

        let at_neg_n = f_brute_all(nu, c, -n);
        for p in 1..=n {
            let started = Instant::now();
            let rhs = &(&sgn * &RationalFunction::q_pow(-3 * n * (n - 1) / 2))
                * &g_brute(nu - 1, c + 2, p - 1).expect("dual-route generating function");
            out.push(eq_instance(
                "initial/at-neg-n",
                vec![("n", n), ("c", c), ("p", p)],
                RationalFunction::from_laurent(at_neg_n[p as usize].clone()),
                rhs,
                fast,
                started,
            ));
        }

        let started = Instant::now();
        let lhs = RationalFunction::from_laurent(f_brute_all(nu, c, 1)[n as usize].clone());
        let rhs = &RationalFunction::q_pow((n + 2) * (n - 1) / 2)
            * &g_brute(nu - 1, c - 1, 0).expect("dual-route generating function");
        out.push(eq_instance(
            "initial/p-n-at-1",
            vec![("n", n), ("c", c)],
            lhs,
            rhs,
            fast,
            started,
        ));

        let started = Instant::now();
        let lhs = RationalFunction::from_laurent(f_brute_all(nu, c, -n - 1)[0].clone());
        let rhs = &(&sgn * &RationalFunction::q_pow(-(n - 1) * (2 * n + 1)))
            * &g_brute(nu - 1, c + 3, n - 1).expect("dual-route generating function");
        out.push(eq_instance(
            "initial/p-0-at-neg-n-1",
            vec![("n", n), ("c", c)],
            lhs,
            rhs,
            fast,
            started,
        ));
        out
    })
    .into_iter()
    .flatten()
    .collect()
}

fn recursion_instances(opts: &SuiteOptions) -> Vec<Instance> {
    let mut units = Vec::new();
    for (n, c) in grid_nc(opts) {
        for p in 0..=n {
            units.push((n, c, p));
        }
    }
    let fast = opts.fast_filter;
    map_ordered(units, |(n, c, p)| {
        let params = vec![("n", n), ("c", c), ("p", p)];
        let started = Instant::now();
        let l = match l_recursive(n, c, p) {
            Ok(l) => eq_instance("recursion-vs-final/L", params.clone(), l, l_closed(n, c, p), fast, started),
            Err(e) => check_instance("recursion-vs-final/L", params.clone(), Err(e), started),
        };
        let started = Instant::now();
        let m = match m_recursive(n, c, p) {
            Ok(m) => eq_instance("recursion-vs-final/M", params.clone(), m, m_closed(n, c, p), fast, started),
            Err(e) => check_instance("recursion-vs-final/M", params, Err(e), started),
        };
        vec![l, m]
    })
    .into_iter()
    .flatten()
    .collect()
}

fn qsums_instances(opts: &SuiteOptions) -> Vec<Instance> {
    #[derive(Clone, Copy)]
    enum Unit {
        S1(i64, i64),
        S2(i64, i64),
        Special(i64, i64, SpecialPoint),
        Hypo(i64, i64),
        Companion(i64, i64),
    }
    let mut units = Vec::new();
    for n in 1..=opts.max_n {
        for c in 0..=opts.max_c {
            units.push(Unit::S1(n, c));
        }
    }
    // the pure summation identities carry one extra row of n
    for n in 1..=opts.max_n + 1 {
        for c in 0..=opts.max_c {
            units.push(Unit::S2(n, c));
        }
    }
    for n in 1..=opts.max_n {
        for c in 0..=opts.max_c {
            for point in SpecialPoint::all() {
                units.push(Unit::Special(n, c, point));
            }
        }
    }
    for n in 1..=opts.max_n + 1 {
        for c in 0..=opts.max_c {
            units.push(Unit::Hypo(n, c));
            units.push(Unit::Companion(n, c));
        }
    }
    let fast = opts.fast_filter;
    map_ordered(units, move |unit| {
        let started = Instant::now();
        match unit {
            Unit::S1(n, c) => check_instance(
                "qsums/s1",
                vec![("n", n), ("c", c)],
                sum_u(n, c).map(|_| ()),
                started,
            ),
            Unit::S2(n, c) => check_instance(
                "qsums/s2",
                vec![("n", n), ("c", c)],
                sum_w(n, c).map(|_| ()),
                started,
            ),
            Unit::Special(n, c, point) => {
                let name = match point {
                    SpecialPoint::AtZero => "qsums/s3",
                    SpecialPoint::AtMinusN => "qsums/s4",
                    SpecialPoint::AtOne => "qsums/s5",
                    SpecialPoint::AtMinusN1 => "qsums/s6",
                };
                eq_instance(
                    name,
                    vec![("n", n), ("c", c), ("k", point.k(n))],
                    u_special(n, c, point),
                    quasi_eval(&u_quasi(n, c), point.k(n)),
                    fast,
                    started,
                )
            }
            Unit::Hypo(n, c) => check_instance(
                "qsums/hypo",
                vec![("n", n), ("c", c)],
                hypo_sum(n, c),
                started,
            ),
            Unit::Companion(n, c) => check_instance(
                "qsums/hypo-companion",
                vec![("n", n), ("c", c)],
                hypo_companion(n, c),
                started,
            ),
        }
    })
}

fn denominator_instances(opts: &SuiteOptions) -> Vec<Instance> {
    let mut units = Vec::new();
    for (n, c) in grid_nc(opts) {
        for kind in [
            DenominatorKind::Main,
            DenominatorKind::P0,
            DenominatorKind::Pn,
        ] {
            units.push((n, c, kind));
        }
    }
    map_ordered(units, |(n, c, kind)| {
        let started = Instant::now();
        let name = match kind {
            DenominatorKind::Main => "denominator/main",
            DenominatorKind::P0 => "denominator/p0",
            DenominatorKind::Pn => "denominator/pn",
        };
        let (direct, closed) = denominator_product_sides(n, c, kind);
        // where the corresponding recursion branch divides, the product must
        // be nonzero; elsewhere it is identically zero and must stay so
        let expect_nonzero = match kind {
            DenominatorKind::Main => true,
            DenominatorKind::P0 => n >= 2,
            DenominatorKind::Pn => n >= 2 && c >= 2,
        };
        let equal = direct == closed;
        let zero_ok = closed.is_zero() != expect_nonzero;
        let pass = equal && zero_ok;
        let detail = if !equal {
            Some("closed product differs from recomputed value".to_string())
        } else if !zero_ok {
            Some(format!(
                "expected {} denominator",
                if expect_nonzero { "nonzero" } else { "zero" }
            ))
        } else {
            None
        };
        Instance {
            identity: name.to_string(),
            params: vec![("n", n), ("c", c)],
            pass,
            lhs: (!pass).then_some(direct),
            rhs: (!pass).then_some(closed),
            detail,
            elapsed_ms: started.elapsed().as_millis(),
        }
    })
}

fn bijection_instances(opts: &SuiteOptions) -> Vec<Instance> {
    let mut out = map_ordered(grid_nc(opts), |(n, c)| {
        let nu = n as usize;
        let started = Instant::now();
        let outcome = (|| -> Result<()> {
            let mut pattern_total = 0usize;
            for k in 0..=c {
                for g in gt_enumerate(nu - 1, nu, c, &[k]) {
                    pattern_total += 1;
                    if g.inversions() != 0 {
                        return Err(Error::InternalMismatch {
                            what: "bijection",
                            detail: format!("classical pattern with inversions at n={n} c={c} k={k}"),
                        });
                    }
                    let spp = gt_to_spp(&g)?;
                    let mismatch = spp.norm() != g.norm()
                        || spp.count_eq(n) as i64 != k
                        || spp.odd_rows() != g.bottom_odd_count()
                        || spp_to_gt(&spp, nu, c)? != g;
                    if mismatch {
                        return Err(Error::InternalMismatch {
                            what: "bijection",
                            detail: format!(
                                "statistics or round trip broken at n={n} c={c} k={k}: {:?}",
                                g.rows()
                            ),
                        });
                    }
                }
            }
            let mut spp_total = 0usize;
            for spp in spp_enumerate(n, c) {
                spp_total += 1;
                let g = spp_to_gt(&spp, nu, c)?;
                if gt_to_spp(&g)? != spp {
                    return Err(Error::InternalMismatch {
                        what: "bijection",
                        detail: format!("round trip broken at n={n} c={c}: {:?}", spp.rows()),
                    });
                }
            }
            if pattern_total != spp_total {
                return Err(Error::InternalMismatch {
                    what: "bijection",
                    detail: format!(
                        "object counts differ at n={n} c={c}: {pattern_total} patterns vs {spp_total} partitions"
                    ),
                });
            }
            Ok(())
        })();
        check_instance(
            "bijection/round-trip",
            vec![("n", n), ("c", c)],
            outcome,
            started,
        )
    });
    out.push(golden_bijection_instance());
    out
}

/// The worked example: the shape (5,4,2,2) partition of norm 47 and its
/// 7-row pattern.
fn golden_bijection_instance() -> Instance {
    let started = Instant::now();
    let outcome = (|| -> Result<()> {
        let spp = spp_validate(vec![
            vec![7, 6, 5, 5, 2],
            vec![5, 4, 2, 2],
            vec![4, 2],
            vec![2, 1],
        ])?;
        let expect = |cond: bool, what: &str| -> Result<()> {
            if cond {
                Ok(())
            } else {
                Err(Error::InternalMismatch {
                    what: "bijection golden",
                    detail: what.to_string(),
                })
            }
        };
        expect(spp.norm() == 47, "norm 47")?;
        expect(spp.shape().parts() == [5, 4, 2, 2], "shape (5,4,2,2)")?;
        expect(spp.odd_rows() == 1, "one odd row")?;
        expect(spp.count_eq(7) == 1, "one part equal to 7")?;
        let g = spp_to_gt(&spp, 7, 5)?;
        expect(g.norm() == 47, "pattern norm 47")?;
        expect(g.top_interior() == [1], "top entry 1")?;
        expect(
            g.rows()
                == [
                    vec![0, 0, 0, 0, 2, 2, 4, 5, 5],
                    vec![0, 0, 0, 1, 2, 4, 5, 5],
                    vec![0, 0, 0, 1, 2, 4, 5],
                    vec![0, 0, 1, 2, 4, 5],
                    vec![0, 0, 1, 4, 5],
                    vec![0, 0, 2, 5],
                    vec![0, 1, 5],
                ],
            "the 7-row pattern",
        )?;
        expect(gt_to_spp(&g)? == spp, "round trip")?;
        Ok(())
    })();
    check_instance(
        "bijection/golden",
        vec![("n", 7), ("c", 5)],
        outcome,
        started,
    )
}

fn bk_instances(opts: &SuiteOptions) -> Vec<Instance> {
    let fast = opts.fast_filter;
    let mut out: Vec<Instance> = map_ordered(grid_nc(opts), |(n, c)| {
        let mut out = Vec::new();
        let mut total = RationalFunction::zero();
        for p in 0..=n {
            let started = Instant::now();
            let closed = g_closed(n, c, p);
            total = &total + &closed;
            out.push(eq_instance(
                "bk/g-closed-vs-brute",
                vec![("n", n), ("c", c), ("p", p)],
                closed,
                g_brute(n as usize, c, p).expect("dual-route generating function"),
                fast,
                started,
            ));
        }
        let started = Instant::now();
        out.push(eq_instance(
            "bk/product",
            vec![("n", n), ("c", c)],
            total,
            bk_product(n, c),
            fast,
            started,
        ));
        out
    })
    .into_iter()
    .flatten()
    .collect();
    // frozen spot value at n = 2, c = 2
    if opts.max_n >= 2 && opts.max_c >= 2 {
        let started = Instant::now();
        let spot = RationalFunction::from_laurent(crate::exactq::LaurentPolynomial::from_integer_terms(
            [(0, 1), (1, 1), (2, 2), (3, 2), (4, 2), (5, 1), (6, 1)],
        ));
        out.push(eq_instance(
            "bk/spot",
            vec![("n", 2), ("c", 2)],
            bk_product(2, 2),
            spot,
            opts.fast_filter,
            started,
        ));
    }
    out
}

fn sum_over_p_instances(opts: &SuiteOptions) -> Vec<Instance> {
    map_ordered(grid_nc(opts), |(n, c)| {
        let params = vec![("n", n), ("c", c)];
        let started = Instant::now();
        let l = check_instance("sum-over-p/L", params.clone(), sum_over_p_l(n, c), started);
        let started = Instant::now();
        let m = check_instance("sum-over-p/M", params, sum_over_p_m(n, c), started);
        vec![l, m]
    })
    .into_iter()
    .flatten()
    .collect()
}

fn degree_instances(opts: &SuiteOptions) -> Vec<Instance> {
    let signed: Vec<Instance> = {
        let mut units = Vec::new();
        for (n, c) in grid_nc(opts) {
            for p in 0..=n {
                units.push((n, c, p));
            }
        }
        map_ordered(units, |(n, c, p)| {
            let started = Instant::now();
            let ok = signed_part_is_l_times_y(n, c, p);
            check_instance(
                "degree/signed-part",
                vec![("n", n), ("c", c), ("p", p)],
                if ok {
                    Ok(())
                } else {
                    Err(Error::InternalMismatch {
                        what: "signed part",
                        detail: format!("n={n} c={c} p={p}"),
                    })
                },
                started,
            )
        })
    };
    // fitting shares one brute window per (n,c) across every p; the column
    // range is capped to keep both parities covered without excess cost
    let mut fit_units = Vec::new();
    for n in 1..=opts.max_n {
        for c in 0..=opts.max_c.min(3) {
            fit_units.push((n, c));
        }
    }
    let fits = map_ordered(fit_units, |(n, c)| {
        let nu = n as usize;
        let bound = (2 * n - 2) as u32;
        let window: Vec<(i64, Vec<crate::exactq::LaurentPolynomial>)> = (-(2 * n - 1)..=2 * n)
            .map(|k| (k, f_brute_all(nu, c, k)))
            .collect();
        let holdout: Vec<(i64, Vec<crate::exactq::LaurentPolynomial>)> = (2 * n + 1..=2 * n + 3)
            .map(|k| (k, f_brute_all(nu, c, k)))
            .collect();
        (0..=n)
            .map(|p| {
                let started = Instant::now();
                let outcome = (|| -> Result<()> {
                    let samples: Vec<(i64, RationalFunction)> = window
                        .iter()
                        .map(|(k, by_p)| {
                            (*k, RationalFunction::from_laurent(by_p[p as usize].clone()))
                        })
                        .collect();
                    let fit = fit_quasi(&samples, bound, bound)?;
                    for (k, by_p) in &holdout {
                        let expected = RationalFunction::from_laurent(by_p[p as usize].clone());
                        if quasi_eval(&fit, *k) != expected {
                            return Err(Error::InternalMismatch {
                                what: "degree fit prediction",
                                detail: format!("n={n} c={c} p={p} k={k}"),
                            });
                        }
                    }
                    Ok(())
                })();
                check_instance(
                    "degree/fit",
                    vec![("n", n), ("c", c), ("p", p)],
                    outcome,
                    started,
                )
            })
            .collect::<Vec<_>>()
    });
    signed
        .into_iter()
        .chain(fits.into_iter().flatten())
        .collect()
}

fn oracle_instances(opts: &SuiteOptions) -> Vec<Instance> {
    // the oracle triangle is specified at n <= 3 (cost grows steeply with n)
    let max_n = opts.max_n.min(3);
    let max_c = opts.max_c.min(3);
    let mut units = Vec::new();
    for n in 1..=max_n {
        for r in 0..=n {
            for c in 0..=max_c {
                for p in 0..=n {
                    units.push((r as usize, n as usize, c, p));
                }
            }
        }
    }
    map_ordered(units, |(r, n, c, p)| {
        let started = Instant::now();
        let dims = n - r;
        let mut kvecs: Vec<Vec<i64>> = vec![Vec::new()];
        for _ in 0..dims {
            let mut next = Vec::new();
            for prefix in &kvecs {
                for k in -2..=c + 2 {
                    let mut v = prefix.clone();
                    v.push(k);
                    next.push(v);
                }
            }
            kvecs = next;
        }
        let base = TopRowFunction::parity_indicator(n, p);
        let recursions = g_recursion_grid(r, n, c, &base, &kvecs);
        let mut outcome = Ok(());
        for (kvec, via_recursion) in kvecs.iter().zip(recursions) {
            let brute = RationalFunction::from_laurent(
                f_brute_general_all(r, n, c, kvec)[p.max(0) as usize].clone(),
            );
            if brute != via_recursion {
                outcome = Err(Error::InternalMismatch {
                    what: "oracle triangle",
                    detail: format!("r={r} n={n} c={c} p={p} kvec={kvec:?}"),
                });
                break;
            }
        }
        check_instance(
            "oracle/brute-vs-recursion",
            vec![("r", r as i64), ("n", n as i64), ("c", c), ("p", p)],
            outcome,
            started,
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_opts() -> SuiteOptions {
        SuiteOptions {
            max_n: 2,
            max_c: 2,
            jobs: Jobs::Count(1),
            fast_filter: true,
        }
    }

    #[test]
    fn every_suite_passes_on_the_small_grid() {
        for suite in Suite::all() {
            let report = run_suite(suite, &small_opts());
            if let Some(inst) = report.instances.iter().find(|i| !i.pass) {
                panic!(
                    "{} {:?} failed: {:?}",
                    inst.identity, inst.params, inst.detail
                );
            }
            assert!(!report.instances.is_empty());
        }
    }

    #[test]
    fn reports_are_independent_of_jobs() {
        let seq = run_suite(Suite::Theorem1, &small_opts());
        let par = run_suite(
            Suite::Theorem1,
            &SuiteOptions {
                jobs: Jobs::Count(4),
                ..small_opts()
            },
        );
        assert_eq!(
            serde_json::to_string(&seq.to_json(false)).unwrap(),
            serde_json::to_string(&par.to_json(false)).unwrap()
        );
    }

    #[test]
    fn suite_parsing() {
        assert_eq!(Suite::parse("zeros").unwrap(), vec![Suite::Zeros]);
        assert_eq!(Suite::parse("all").unwrap().len(), 11);
        assert!(Suite::parse("bogus").is_err());
    }

    #[test]
    fn failure_serializes_both_sides() {
        let started = Instant::now();
        let inst = eq_instance(
            "t",
            vec![("n", 1)],
            RationalFunction::one(),
            RationalFunction::zero(),
            true,
            started,
        );
        assert!(!inst.pass);
        let v = inst.to_json(false);
        assert!(v.get("lhs").is_some() && v.get("rhs").is_some());
        assert!(v.get("elapsed_ms").is_none());
        assert_eq!(v["status"], "fail");
    }
}
