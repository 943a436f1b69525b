//! Brute-force oracles for the signed generating functions: direct pattern
//! enumeration, direct strict-plane-partition enumeration, the pointwise
//! recursion engine with extended-range sums, and the parity indicator
//! helpers they are compared against.
//!
//! `f_brute(n, c, p, k)` is the signed, norm-weighted count of all
//! (n-1,n,c)-patterns with top interior `k` and exactly `p` odd entries in
//! the bottom row interior, divided by `q^k`. The general form takes any
//! `0 <= r <= n` and a top-row vector of length `n - r`. Coefficients are
//! signed integer counts, so the result is always a Laurent polynomial.
//!
//! Boundary conventions for `g_brute(n, c, p)`: for `n == 0` only the empty
//! plane partition exists, for any `c` (even negative), giving `1` when
//! `p == 0`; for `n >= 1` and `c < 0` the defining sum over `k` in `0..=c`
//! is empty under the extended summation convention, giving `0`.

use std::collections::HashMap;

use crate::exactq::{LaurentPolynomial, RationalFunction};
use crate::parallel::map_ordered;
use crate::patterns::{rows_below, spp_enumerate, visit_below};
use crate::{Error, Result};

/// The residue indicator: 1 if `x = i (mod t)`, else 0.
pub fn e_indicator(i: i64, t: i64, x: i64) -> i64 {
    assert!(t >= 1, "modulus must be positive");
    i64::from((x - i).rem_euclid(t) == 0)
}

/// 1 if exactly `p` coordinates of `kvec` are odd, else 0 (in particular 0
/// whenever `p` is outside `0..=n`).
pub fn s_np(n: usize, p: i64, kvec: &[i64]) -> i64 {
    assert_eq!(kvec.len(), n);
    let odd = kvec.iter().filter(|k| k.rem_euclid(2) == 1).count() as i64;
    i64::from(odd == p)
}

/// Sum of `(-1)^{k_{j_1} + ... + k_{j_i}}` over all i-element index subsets:
/// the i-th elementary symmetric function of the signs `(-1)^{k_j}`.
pub fn t_ni(n: usize, i: i64, kvec: &[i64]) -> i64 {
    assert_eq!(kvec.len(), n);
    if i < 0 || i > n as i64 {
        return 0;
    }
    let mut elem = vec![0i64; n + 1];
    elem[0] = 1;
    for k in kvec {
        let s = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        for d in (1..=n).rev() {
            elem[d] += s * elem[d - 1];
        }
    }
    elem[i as usize]
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n || n < 0 {
        return 0;
    }
    let mut acc = 1i64;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Checks that the parity indicator decomposes into the stated linear
/// combination of the `t_ni` at the point `kvec`:
/// `2^n S(n,p) = sum_i sum_l (-1)^l C(i,l) C(n-i,p-l) T(n,i)`.
pub fn check_linear_combination(n: usize, p: i64, kvec: &[i64]) -> bool {
    let mut total = 0i64;
    for i in 0..=n as i64 {
        let mut weight = 0i64;
        let lo = 0.max(i - n as i64 + p);
        let hi = p.min(i);
        for l in lo..=hi {
            let sign = if l % 2 == 0 { 1 } else { -1 };
            weight += sign * binom(i, l) * binom(n as i64 - i, p - l);
        }
        total += weight * t_ni(n, i, kvec);
    }
    total == (1i64 << n) * s_np(n, p, kvec)
}

/// Signed norm-weighted counts of all (r,n,c)-patterns with the given top
/// row, split by the number of odd bottom-row entries: element `p` of the
/// result is `F(r,n,c,p; kvec)` as a Laurent polynomial. Enumeration splits
/// over the first generated row and runs on the ambient worker pool.
pub fn f_brute_general_all(r: usize, n: usize, c: i64, kvec: &[i64]) -> Vec<LaurentPolynomial> {
    assert!(r <= n, "need 0 <= r <= n");
    assert_eq!(kvec.len(), n - r, "top row has n - r entries");

    let mut top = Vec::with_capacity(n - r + 2);
    top.push(0);
    top.extend_from_slice(kvec);
    top.push(c);
    let top_norm: i64 = kvec.iter().sum();

    // (#odd bottom entries, norm) -> signed count
    let mut acc: HashMap<(usize, i64), i64> = HashMap::new();

    if r == 0 {
        let odd = kvec.iter().filter(|k| k.rem_euclid(2) == 1).count();
        acc.insert((odd, top_norm), 1);
    } else {
        let top_inv = top.windows(2).filter(|w| w[0] > w[1]).count();
        let firsts = rows_below(&top, c);
        let partials = map_ordered(firsts, |first| {
            let mut local: HashMap<(usize, i64), i64> = HashMap::new();
            let first_norm: i64 = first[1..first.len() - 1].iter().sum();
            // descents of the first generated row count unless it is row 1
            let first_inv = if r >= 2 {
                first.windows(2).filter(|w| w[0] > w[1]).count()
            } else {
                0
            };
            visit_below(&first, r - 1, &mut |inv, norm, bottom| {
                let total_inv = top_inv + first_inv + inv;
                let sign = if total_inv % 2 == 0 { 1 } else { -1 };
                let odd = bottom[1..bottom.len() - 1]
                    .iter()
                    .filter(|v| v.rem_euclid(2) == 1)
                    .count();
                *local
                    .entry((odd, top_norm + first_norm + norm))
                    .or_insert(0) += sign;
            });
            local
        });
        for partial in partials {
            for (key, count) in partial {
                *acc.entry(key).or_insert(0) += count;
            }
        }
    }

    let mut by_p: Vec<Vec<(i64, i64)>> = vec![Vec::new(); n + 1];
    for ((odd, norm), count) in acc {
        debug_assert!(odd <= n);
        by_p[odd].push((norm - top_norm, count)); // divide by q^{sum kvec}
    }
    by_p
        .into_iter()
        .map(LaurentPolynomial::from_integer_terms)
        .collect()
}

/// `F(r,n,c,p; kvec)` for a single `p` (zero outside `0..=n`).
pub fn f_brute_general(r: usize, n: usize, c: i64, p: i64, kvec: &[i64]) -> RationalFunction {
    if p < 0 || p > n as i64 {
        return RationalFunction::zero();
    }
    let all = f_brute_general_all(r, n, c, kvec);
    RationalFunction::from_laurent(all[p as usize].clone())
}

/// `F(n-1,n,c,p;k)`: the single-variable case of [`f_brute_general`].
pub fn f_brute(n: usize, c: i64, p: i64, k: i64) -> RationalFunction {
    assert!(n >= 1);
    f_brute_general(n - 1, n, c, p, &[k])
}

/// All `p` at once for `F(n-1,n,c,.;k)`; one enumeration serves every `p`.
pub fn f_brute_all(n: usize, c: i64, k: i64) -> Vec<LaurentPolynomial> {
    assert!(n >= 1);
    f_brute_general_all(n - 1, n, c, &[k])
}

/// The norm generating function of strict plane partitions with parts in
/// {1..n}, at most `c` columns and exactly `p` rows of odd length, computed
/// two independent ways (pattern sum over `k`, and direct enumeration) with
/// their equality asserted.
pub fn g_brute(n: usize, c: i64, p: i64) -> Result<RationalFunction> {
    if n == 0 {
        // only the empty plane partition, whatever the column bound
        return Ok(if p == 0 {
            RationalFunction::one()
        } else {
            RationalFunction::zero()
        });
    }
    if c < 0 {
        // empty defining sum under the extended convention
        return Ok(RationalFunction::zero());
    }
    if p < 0 || p > n as i64 {
        return Ok(RationalFunction::zero());
    }

    // route 1: sum_{k=0}^{c} F(n-1,n,c,p;k) q^k
    let mut via_patterns = LaurentPolynomial::zero();
    for k in 0..=c {
        let f = &f_brute_all(n, c, k)[p as usize];
        via_patterns = &via_patterns + &f.shifted(k);
    }

    // route 2: direct enumeration
    let mut via_spp = Vec::new();
    for spp in spp_enumerate(n as i64, c) {
        if spp.odd_rows() as i64 == p {
            via_spp.push((spp.norm(), 1));
        }
    }
    let via_spp = LaurentPolynomial::from_integer_terms(via_spp);

    if via_patterns != via_spp {
        return Err(Error::InternalMismatch {
            what: "g_brute",
            detail: format!(
                "pattern route {} != direct route {} at n={n} c={c} p={p}",
                via_patterns.to_canonical_text(),
                via_spp.to_canonical_text()
            ),
        });
    }
    Ok(RationalFunction::from_laurent(via_spp))
}

type TopRowEval = Box<dyn Fn(&[i64]) -> RationalFunction + Send + Sync>;

/// A function on integer vectors used as the base case of the recursion.
pub struct TopRowFunction {
    arity: usize,
    eval: TopRowEval,
}

impl TopRowFunction {
    pub fn new(
        arity: usize,
        eval: impl Fn(&[i64]) -> RationalFunction + Send + Sync + 'static,
    ) -> Self {
        Self {
            arity,
            eval: Box::new(eval),
        }
    }

    /// The parity indicator `S(n,p)` as a base case.
    pub fn parity_indicator(n: usize, p: i64) -> Self {
        Self::new(n, move |kvec| RationalFunction::from_int(s_np(n, p, kvec)))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn eval(&self, kvec: &[i64]) -> RationalFunction {
        assert_eq!(kvec.len(), self.arity);
        (self.eval)(kvec)
    }
}

/// Values of a summation range under the extended convention, as
/// `(value, sign)` pairs for `sum_{l=a}^{b}`.
fn signed_range(a: i64, b: i64) -> Vec<(i64, i64)> {
    if a <= b {
        (a..=b).map(|v| (v, 1)).collect()
    } else if b == a - 1 {
        Vec::new()
    } else {
        ((b + 1)..=(a - 1)).map(|v| (v, -1)).collect()
    }
}

/// Pointwise evaluation of the iterated-sum recursion
/// `G(r)(k_1..k_m) = sum_{l_1=0}^{k_1} sum_{l_2=k_1}^{k_2} ...
/// sum_{l_{m+1}=k_m}^{c} G(r-1)(l) q^{l_1+...+l_{m+1}}`
/// with every range read under the extended summation convention. The memo
/// table lives for a single call tree; the iterated sums revisit points
/// combinatorially often.
pub fn g_recursion(
    r: usize,
    n: usize,
    c: i64,
    base: &TopRowFunction,
    kvec: &[i64],
) -> RationalFunction {
    assert!(r <= n && base.arity() == n, "need arity n and 0 <= r <= n");
    assert_eq!(kvec.len(), n - r);
    let mut memo: HashMap<(usize, Vec<i64>), RationalFunction> = HashMap::new();
    eval_level(r, c, base, kvec, &mut memo)
}

/// Evaluates the recursion over a whole grid of argument vectors with one
/// shared memo table.
pub fn g_recursion_grid(
    r: usize,
    n: usize,
    c: i64,
    base: &TopRowFunction,
    kvecs: &[Vec<i64>],
) -> Vec<RationalFunction> {
    assert!(r <= n && base.arity() == n, "need arity n and 0 <= r <= n");
    let mut memo: HashMap<(usize, Vec<i64>), RationalFunction> = HashMap::new();
    kvecs
        .iter()
        .map(|kv| {
            assert_eq!(kv.len(), n - r);
            eval_level(r, c, base, kv, &mut memo)
        })
        .collect()
}

fn eval_level(
    level: usize,
    c: i64,
    base: &TopRowFunction,
    args: &[i64],
    memo: &mut HashMap<(usize, Vec<i64>), RationalFunction>,
) -> RationalFunction {
    if level == 0 {
        return base.eval(args);
    }
    let key = (level, args.to_vec());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }

    // l_i runs from bound i-1 to bound i where bounds = (0, args..., c)
    let m = args.len();
    let mut bounds = Vec::with_capacity(m + 2);
    bounds.push(0);
    bounds.extend_from_slice(args);
    bounds.push(c);

    let mut total = RationalFunction::zero();
    let mut lvec = vec![0i64; m + 1];
    rec_sum(
        0, 1, 0, &bounds, &mut lvec, level, c, base, memo, &mut total,
    );

    memo.insert(key, total.clone());
    total
}

#[allow(clippy::too_many_arguments)]
fn rec_sum(
    pos: usize,
    sign: i64,
    qshift: i64,
    bounds: &[i64],
    lvec: &mut Vec<i64>,
    level: usize,
    c: i64,
    base: &TopRowFunction,
    memo: &mut HashMap<(usize, Vec<i64>), RationalFunction>,
    total: &mut RationalFunction,
) {
    if pos == lvec.len() {
        let inner = eval_level(level - 1, c, base, lvec, memo);
        if !inner.is_zero() {
            let term = &inner * &RationalFunction::q_pow(qshift);
            let term = if sign < 0 { -&term } else { term };
            *total = &*total + &term;
        }
        return;
    }
    for (v, s) in signed_range(bounds[pos], bounds[pos + 1]) {
        lvec[pos] = v;
        rec_sum(
            pos + 1,
            sign * s,
            qshift + v,
            bounds,
            lvec,
            level,
            c,
            base,
            memo,
            total,
        );
    }
}
