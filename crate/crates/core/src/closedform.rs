//! The explicit formulas: the interpolation kernel polynomials `W`, `X`, `Y`
//! and the quasi-polynomial `U`, the interpolation constants `L` and `M`
//! (closed product form and, independently, the recursive form), the refined
//! generating function `G` in closed form, the Bender-Knuth product, the
//! special-value and summation identities for `U` and `W`, and instance
//! checks of the hypergeometric summation identities behind them.
//!
//! Everything is constructed from the q-bracket/factorial/binomial
//! primitives rather than hand-expanded, so a transcription error fails
//! loudly against the brute-force oracles.
//!
//! Degenerate corners, resolved once here and exercised by tests:
//! - `n = 1` uses the explicit initial values `L = (-1)^p/2`, `M = 1/2`, and
//!   the definitional special values of `U` (the product displays start at
//!   `n = 2`, where the empty product `prod_{i=1}^{n-2}` becomes standard).
//! - Ratios in which an identically-zero bracket appears in numerator and
//!   denominator simultaneously (only `[c+p;q]`-type factors at `c = 0`,
//!   `p = 0`) are resolved by cancelling whole matching bracket factors
//!   before expansion; the result is validated against the brute oracles.
//! - Brackets written over the base q² with half-integral arguments are
//!   taken with pre-multiplied exponents, e.g. `[(c+1)/2; q^2]` is
//!   `(1 - q^{c+1})/(1 - q^2)`.

use crate::exactq::{qbinom, qbracket, qfac, ratio, LaurentPolynomial, RationalFunction};
use crate::qsymb::{
    ext_range_sum, quasi_eval, signed_part, QPolynomialK, QQuasiPolynomialK,
};
use crate::{Error, Result};

fn rf_int(n: i64) -> RationalFunction {
    RationalFunction::from_int(n)
}

fn sign_pow(e: i64) -> RationalFunction {
    rf_int(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// `1 + q^i` as a rational function.
fn one_plus_qpow(i: i64) -> RationalFunction {
    RationalFunction::from_laurent(
        &LaurentPolynomial::one() + &LaurentPolynomial::q_pow(i),
    )
}

/// Base-q² factorial with pre-multiplied arguments:
/// `prod_{j=0}^{len-1} (1 - q^{m+2j})/(1 - q^2)`.
fn qfac2(m: i64, len: i64) -> RationalFunction {
    qfac(m, len, 2)
}

fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

// ---------------------------------------------------------------------------
// Factored bracket products.

/// A product of q-brackets with a scalar prefactor, kept factored so that
/// identical factors cancel between numerator and denominator before
/// expansion.
#[derive(Clone, Debug, Default)]
struct BracketProduct {
    zero: bool,
    scalar: Option<RationalFunction>,
    num: Vec<(i64, i64)>,
    den: Vec<(i64, i64)>,
}

impl BracketProduct {
    fn new() -> Self {
        Self::default()
    }

    fn scale(mut self, f: &RationalFunction) -> Self {
        if f.is_zero() {
            self.zero = true;
            return self;
        }
        self.scalar = Some(match self.scalar {
            Some(s) => &s * f,
            None => f.clone(),
        });
        self
    }

    fn scale_qpow(self, e: i64) -> Self {
        self.scale(&RationalFunction::q_pow(e))
    }

    /// Multiplies by `[a;q^t]_len` (pre-multiplied arguments, step `t`).
    fn num_fac(mut self, a: i64, len: i64, t: i64) -> Self {
        for j in 0..len {
            self.num.push((a + j * t, t));
        }
        self
    }

    /// Divides by `[a;q^t]_len`.
    fn den_fac(mut self, a: i64, len: i64, t: i64) -> Self {
        for j in 0..len {
            self.den.push((a + j * t, t));
        }
        self
    }

    /// Multiplies by the Gaussian binomial in factored form.
    fn num_qbinom(mut self, n: i64, k: i64) -> Self {
        if k < 0 || n < 0 || k > n {
            self.zero = true;
            return self;
        }
        self.num_fac(n - k + 1, k, 1).den_fac(1, k, 1)
    }

    /// Cancels matching factors and multiplies out. A zero bracket remaining
    /// in the denominator is an error; one in the numerator makes the result
    /// zero.
    fn expand(mut self) -> Result<RationalFunction> {
        if self.zero {
            return Ok(RationalFunction::zero());
        }
        let mut den = Vec::new();
        for d in self.den.drain(..) {
            if let Some(pos) = self.num.iter().position(|&f| f == d) {
                self.num.swap_remove(pos);
            } else {
                den.push(d);
            }
        }
        if let Some(&(m, t)) = den.iter().find(|&&(m, _)| m == 0) {
            return Err(Error::ZeroBracket { m, t });
        }
        let mut acc = self.scalar.unwrap_or_else(RationalFunction::one);
        for (m, t) in self.num {
            acc = &acc * &qbracket(m, t);
        }
        for (m, t) in den {
            acc = acc
                .checked_div(&qbracket(m, t))
                .expect("zero denominators were rejected above");
        }
        Ok(acc)
    }
}

// ---------------------------------------------------------------------------
// The kernel polynomials in Y = q^k.

/// `[k+a;q]` as a linear polynomial in `Y = q^k`: `(1 - q^a Y)/(1 - q)`.
fn bracket_shift(a: i64) -> QPolynomialK {
    let inv = RationalFunction::new(
        LaurentPolynomial::one(),
        LaurentPolynomial::one_minus_q_pow(1),
    )
    .expect("1 - q is nonzero");
    QPolynomialK::from_terms([
        (0, inv.clone()),
        (1, &(-&inv) * &RationalFunction::q_pow(a)),
    ])
}

/// `[k+a;q]_len` as a polynomial in `Y`.
fn qfac_shift(a: i64, len: i64) -> QPolynomialK {
    let mut acc = QPolynomialK::one();
    for j in 0..len {
        acc = &acc * &bracket_shift(a + j);
    }
    acc
}

/// `W(n,c)(k) = [k+1;q]_{n-1} [k-c-n+1;q]_{n-1}`, degree exactly 2n-2.
pub fn w_poly(n: i64, c: i64) -> QPolynomialK {
    assert!(n >= 1);
    &qfac_shift(1, n - 1) * &qfac_shift(-c - n + 1, n - 1)
}

/// The first interpolation sum; a plain polynomial of degree at most 2n-3.
pub fn x_poly(n: i64, c: i64) -> QPolynomialK {
    assert!(n >= 1);
    let mut acc = QPolynomialK::zero();
    for i in 1..n {
        let num = &(&qfac_shift(1, n - 1) * &qfac_shift(-c - i + 1, i - 1))
            * &qfac_shift(-c - n + 1, n - i - 1);
        let den = &(&qfac(1, i - 1, 1) * &qfac(1, n - 1 - i, 1)) * &qfac(c + i + 1, n - 1, 1);
        let scale = RationalFunction::q_pow(binom2(i))
            .checked_div(&den)
            .expect("denominator brackets have positive arguments");
        acc = &acc + &num.scaled(&scale);
    }
    acc
}

/// The second interpolation sum; a plain polynomial of degree at most 2n-3.
pub fn y_poly(n: i64, c: i64) -> QPolynomialK {
    assert!(n >= 1);
    let mut acc = QPolynomialK::zero();
    for i in 1..n {
        let num = &(&qfac_shift(1, i - 1) * &qfac_shift(i + 1, n - i - 1))
            * &qfac_shift(-c - n + 1, n - 1);
        let den = &(&qfac(1, i - 1, 1) * &qfac(1, n - 1 - i, 1)) * &qfac(c + i + 1, n - 1, 1);
        let scale = RationalFunction::q_pow(binom2(i))
            .checked_div(&den)
            .expect("denominator brackets have positive arguments");
        acc = &acc + &num.scaled(&scale);
    }
    acc
}

/// `U(n,c)(k) = (-1)^n q^{(n-1)(2c+n)/2} ((-1)^c X - Y) + (-1)^k q^{(n-1)k}`:
/// plain part from the interpolation sums, signed part the monomial Y^{n-1}.
pub fn u_quasi(n: i64, c: i64) -> QQuasiPolynomialK {
    assert!(n >= 1);
    let e = (n - 1) * (2 * c + n);
    assert!(e % 2 == 0, "(n-1)(2c+n) is always even");
    let xmy = &x_poly(n, c).scaled(&sign_pow(c)) - &y_poly(n, c);
    let plain = xmy.scaled(&(&sign_pow(n) * &RationalFunction::q_pow(e / 2)));
    let signed = QPolynomialK::monomial((n - 1) as u32, RationalFunction::one());
    QQuasiPolynomialK::from_parts(plain, signed)
}

// ---------------------------------------------------------------------------
// The interpolation constants in closed form.

/// Closed form of the coefficient of the signed kernel `U`.
/// Initial values at n = 1: `(-1)^p / 2`.
pub fn l_closed(n: i64, c: i64, p: i64) -> RationalFunction {
    assert!(n >= 1 && c >= 0);
    if p < 0 || p > n {
        return RationalFunction::zero();
    }
    if n == 1 {
        return RationalFunction::from_rational(ratio(if p == 0 { 1 } else { -1 }, 2));
    }
    if c % 2 == 0 {
        // prod_i [c+2i+1]_{n-i}/([2i]_{n-i}[2i]) * [c+1]_{n-1}[1]_{n-1}/2
        //   * (q^{b(p+1)} C(n-1,p) [c]/[c+p]_n - q^{b(p)} C(n-1,p-1) [c+2n]/[c+p+1]_n)
        let mut outer = BracketProduct::new()
            .scale(&RationalFunction::from_rational(ratio(1, 2)))
            .num_fac(c + 1, n - 1, 1)
            .num_fac(1, n - 1, 1);
        for i in 1..n {
            outer = outer
                .num_fac(c + 2 * i + 1, n - i, 1)
                .den_fac(2 * i, n - i, 1)
                .den_fac(2 * i, 1, 1);
        }
        let term_a = BracketProduct::new()
            .scale_qpow(binom2(p + 1))
            .num_qbinom(n - 1, p)
            .num_fac(c, 1, 1)
            .den_fac(c + p, n, 1)
            .expand()
            .expect("no zero bracket survives cancellation");
        let term_b = BracketProduct::new()
            .scale_qpow(binom2(p))
            .num_qbinom(n - 1, p - 1)
            .num_fac(c + 2 * n, 1, 1)
            .den_fac(c + p + 1, n, 1)
            .expand()
            .expect("arguments c+p+1..c+p+n are positive");
        &outer.expand().expect("positive bracket arguments") * &(&term_a - &term_b)
    } else {
        let mut outer = BracketProduct::new()
            .scale(&RationalFunction::from_rational(ratio(1, 2)))
            .num_fac(1, n - 1, 1);
        for i in 1..n {
            outer = outer
                .num_fac(c + 2 * i, n - i, 1)
                .den_fac(2 * i, n - i, 1)
                .den_fac(2 * i, 1, 1);
        }
        let inner = &(&RationalFunction::q_pow(binom2(p + 1)) * &qbinom(n - 1, p))
            - &(&RationalFunction::q_pow(binom2(p)) * &qbinom(n - 1, p - 1));
        &outer.expand().expect("positive bracket arguments") * &inner
    }
}

/// Closed form of the coefficient of the plain kernel `W`.
/// Initial values at n = 1: `1/2`.
pub fn m_closed(n: i64, c: i64, p: i64) -> RationalFunction {
    assert!(n >= 1 && c >= 0);
    if p < 0 || p > n {
        return RationalFunction::zero();
    }
    if n == 1 {
        return RationalFunction::from_rational(ratio(1, 2));
    }
    let e = (n - 1) * (2 * c + n);
    let pref = BracketProduct::new()
        .scale(&sign_pow(n - 1))
        .scale_qpow(e / 2)
        .den_fac(1, n - 2, 1);
    if c % 2 == 0 {
        // braces: T_a ( 1/[n-1] - [c+2n-1]/([c+n][2n-2]) ) + T_b [c+2n-1]_2/([c+n][2n-2])
        let mut prod = pref;
        for i in 1..n {
            prod = prod.num_fac(c + 2 * i, n - i, 1).den_fac(2 * i, n - i, 1);
        }
        let term_a = BracketProduct::new()
            .scale_qpow(binom2(p + 1))
            .num_qbinom(n - 1, p)
            .num_fac(c, 1, 1)
            .den_fac(c + p, n, 1)
            .expand()
            .expect("no zero bracket survives cancellation");
        let sub = &qbracket(n - 1, 1)
            .recip()
            .expect("n >= 2 makes [n-1;q] nonzero")
            - &qbracket(c + 2 * n - 1, 1)
                .checked_div(&(&qbracket(c + n, 1) * &qbracket(2 * n - 2, 1)))
                .expect("positive bracket arguments");
        let term_b = BracketProduct::new()
            .scale_qpow(binom2(p))
            .num_qbinom(n - 1, p - 1)
            .num_fac(c + 2 * n - 1, 2, 1)
            .den_fac(c + p + 1, n, 1)
            .den_fac(c + n, 1, 1)
            .den_fac(2 * n - 2, 1, 1)
            .expand()
            .expect("positive bracket arguments");
        &prod.expand().expect("positive bracket arguments") * &(&(&term_a * &sub) + &term_b)
    } else {
        let mut prod = pref.den_fac(2 * n - 2, 1, 1);
        for i in 1..n {
            prod = prod
                .num_fac(c + 2 * i + 1, n - i - 1, 1)
                .den_fac(2 * i, n - i, 1);
        }
        let inner = &(&RationalFunction::q_pow(binom2(p + 1) + n - 1) * &qbinom(n - 1, p))
            + &(&RationalFunction::q_pow(binom2(p)) * &qbinom(n - 1, p - 1));
        &prod.expand().expect("positive bracket arguments") * &inner
    }
}

/// The refined generating function in closed form,
/// `G(n,c,p) = q^{binom(p+1,2)} qbinom(n,p) * <parity product>`.
/// Supports `n >= 0` and `c >= -1` (where the value is 0 for `n >= 1`).
pub fn g_closed(n: i64, c: i64, p: i64) -> RationalFunction {
    assert!(n >= 0 && c >= -1);
    let lead = BracketProduct::new()
        .scale_qpow(binom2(p + 1))
        .num_qbinom(n, p);
    if c.rem_euclid(2) == 0 {
        let mut prod = lead.den_fac(c + p, n + 1, 1);
        for i in 0..=n {
            prod = prod
                .num_fac(c + 2 * i, n - i + 1, 1)
                .den_fac(2 + 2 * i, n - i, 1);
        }
        prod.expand()
            .expect("only the [c+p] factors can vanish and they cancel")
    } else {
        let mut prod = lead;
        for i in 1..=n {
            prod = prod
                .num_fac(c + 2 * i - 1, n - i + 1, 1)
                .den_fac(2 * i, n - i + 1, 1);
        }
        prod.expand().expect("positive denominator arguments")
    }
}

/// The full quasi-polynomial `F(n,c,p) = L*U + M*W`. Its value at integer
/// `k`, times `q^k`, is the norm generating function of strict plane
/// partitions with parts in {1..n}, at most c columns, p odd rows and k
/// parts equal to n (for k in 0..=c; outside, the signed extension).
pub fn f_closed(n: i64, c: i64, p: i64) -> QQuasiPolynomialK {
    assert!(n >= 1 && c >= 0);
    let u = u_quasi(n, c).scaled(&l_closed(n, c, p));
    let w = QQuasiPolynomialK::from_plain(w_poly(n, c).scaled(&m_closed(n, c, p)));
    &u + &w
}

// ---------------------------------------------------------------------------
// The recursion route to L and M.

fn u_at(n: i64, c: i64, k: i64) -> RationalFunction {
    quasi_eval(&u_quasi(n, c), k)
}

fn w_at(n: i64, c: i64, k: i64) -> RationalFunction {
    w_poly(n, c).eval_at_k(k)
}

/// `L` computed from the generating functions one level down and the special
/// values of `U` and `W`, by the p-dependent two-equation system. The `p = n`
/// system degenerates at `c = 0` (its determinant is exactly zero); there the
/// evaluation at 0 vanishes identically, which gives a replacement equation,
/// and the main determinant takes over.
pub fn l_recursive(n: i64, c: i64, p: i64) -> Result<RationalFunction> {
    assert!(n >= 1 && c >= 0);
    if p < 0 || p > n {
        return Ok(RationalFunction::zero());
    }
    if n == 1 {
        return Ok(RationalFunction::from_rational(ratio(
            if p == 0 { 1 } else { -1 },
            2,
        )));
    }
    let shift_neg = &sign_pow(n - 1) * &RationalFunction::q_pow(-3 * n * (n - 1) / 2);
    if p == 0 {
        let den = &(&u_at(n, c, -n - 1) * &w_at(n, c, 0)) - &(&u_at(n, c, 0) * &w_at(n, c, -n - 1));
        if den.is_zero() {
            return Err(Error::VanishingDenominator("p = 0 recursion"));
        }
        let rhs4 = &(&sign_pow(n - 1) * &RationalFunction::q_pow(-(n - 1) * (2 * n + 1)))
            * &g_closed(n - 1, c + 3, n - 1);
        let num = &(&rhs4 * &w_at(n, c, 0)) - &(&g_closed(n - 1, c, 0) * &w_at(n, c, -n - 1));
        return num.checked_div(&den);
    }
    if p == n {
        let den = &(&u_at(n, c, 1) * &w_at(n, c, -n)) - &(&u_at(n, c, -n) * &w_at(n, c, 1));
        let rhs2 = &shift_neg * &g_closed(n - 1, c + 2, n - 1);
        if !den.is_zero() {
            let rhs3 = &RationalFunction::q_pow((n + 2) * (n - 1) / 2) * &g_closed(n - 1, c - 1, 0);
            let num = &(&rhs3 * &w_at(n, c, -n)) - &(&rhs2 * &w_at(n, c, 1));
            return num.checked_div(&den);
        }
        // degenerate at c = 0: F(n-1,n,c,n;0) = 0 because the whole diagonal
        // is pinned to 0 and the first bottom entry is even; pair that with
        // the evaluation at -n and solve by the main determinant
        let den = &(&u_at(n, c, 0) * &w_at(n, c, -n)) - &(&u_at(n, c, -n) * &w_at(n, c, 0));
        if den.is_zero() {
            return Err(Error::VanishingDenominator("p = n recursion"));
        }
        let num = -&(&rhs2 * &w_at(n, c, 0));
        return num.checked_div(&den);
    }
    let den = &(&u_at(n, c, 0) * &w_at(n, c, -n)) - &(&u_at(n, c, -n) * &w_at(n, c, 0));
    if den.is_zero() {
        return Err(Error::VanishingDenominator("generic recursion"));
    }
    let rhs2 = &shift_neg * &g_closed(n - 1, c + 2, p - 1);
    let num = &(&g_closed(n - 1, c, p) * &w_at(n, c, -n)) - &(&rhs2 * &w_at(n, c, 0));
    num.checked_div(&den)
}

/// `M` from the same systems, using the recursive `L`.
pub fn m_recursive(n: i64, c: i64, p: i64) -> Result<RationalFunction> {
    assert!(n >= 1 && c >= 0);
    if p < 0 || p > n {
        return Ok(RationalFunction::zero());
    }
    if n == 1 {
        return Ok(RationalFunction::from_rational(ratio(1, 2)));
    }
    let l = l_recursive(n, c, p)?;
    if p != n {
        let num = &g_closed(n - 1, c, p) - &(&u_at(n, c, 0) * &l);
        num.checked_div(&w_at(n, c, 0))
    } else {
        let rhs2 = &(&sign_pow(n - 1) * &RationalFunction::q_pow(-3 * n * (n - 1) / 2))
            * &g_closed(n - 1, c + 2, p - 1);
        let num = &rhs2 - &(&u_at(n, c, -n) * &l);
        num.checked_div(&w_at(n, c, -n))
    }
}

// ---------------------------------------------------------------------------
// Special values and summation identities.

/// The four special evaluation points of `U` with closed product forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialPoint {
    /// k = 0
    AtZero,
    /// k = -n
    AtMinusN,
    /// k = 1
    AtOne,
    /// k = -n-1
    AtMinusN1,
}

impl SpecialPoint {
    pub fn k(self, n: i64) -> i64 {
        match self {
            SpecialPoint::AtZero => 0,
            SpecialPoint::AtMinusN => -n,
            SpecialPoint::AtOne => 1,
            SpecialPoint::AtMinusN1 => -n - 1,
        }
    }

    pub fn all() -> [SpecialPoint; 4] {
        [
            SpecialPoint::AtZero,
            SpecialPoint::AtMinusN,
            SpecialPoint::AtOne,
            SpecialPoint::AtMinusN1,
        ]
    }
}

/// Closed product/sum form of `U(n,c)` at the designated special point.
/// At n = 1 the displays degenerate and the definitional values `(-1)^k`
/// are returned directly.
pub fn u_special(n: i64, c: i64, point: SpecialPoint) -> RationalFunction {
    assert!(n >= 1 && c >= 0);
    if n == 1 {
        return sign_pow(point.k(1));
    }
    // 2 * prod_{i=1}^{n-2} (1 + q^i)
    let mut base = rf_int(2);
    for i in 1..=(n - 2) {
        base = &base * &one_plus_qpow(i);
    }
    let even = c % 2 == 0;
    let pow_1q = |e: i64| one_plus_qpow(1).pow(e).expect("1 + q is nonzero");
    match point {
        SpecialPoint::AtZero => {
            let pref = &base / &pow_1q(n - 1);
            let braces = if even {
                &qfac(c + 1, n - 1, 1) / &qfac2(c + 1, n - 1)
            } else {
                &qfac(c, n, 1) / &(&qfac2(c, n) * &one_plus_qpow(1))
            };
            &pref * &braces
        }
        SpecialPoint::AtMinusN => {
            // carries a sign (-1)^n like the companion value at -n-1
            let pref = &(&(&base * &sign_pow(n)) * &pow_1q(n - 1))
                * &RationalFunction::q_pow(-(n - 1) * (3 * n - 2) / 2);
            let braces = if even {
                &qfac2(c + 2, n - 1) / &qfac(c + 2, n - 1, 1)
            } else {
                &(&qfac2(c + 1, n) * &one_plus_qpow(1)) / &qfac(c + 1, n, 1)
            };
            &pref * &braces
        }
        SpecialPoint::AtOne => {
            let pref = &(&base * &RationalFunction::q_pow(n)) / &pow_1q(n - 1);
            let braces = if even {
                &(&qfac(c, n - 1, 1) * &qbracket(n - 2, 1)) / &qfac2(c + 1, n - 1)
            } else {
                let a = &(&qfac(c - 1, n - 1, 1) * &qbracket(n - 2, 1)) / &qfac2(c, n - 1);
                let b = &(&RationalFunction::q_pow(c + n - 3)
                    * &(&(&qfac(c, n - 2, 1) * &qbracket(2 * ((n - 1) / 2) + 1, 1))
                        * &qbracket(2 * (n / 2), 1)))
                    / &qfac2(c + 2, n - 1);
                &a - &b
            };
            &pref * &braces
        }
        SpecialPoint::AtMinusN1 => {
            let pref = &(&(&base * &sign_pow(n)) * &pow_1q(n - 1))
                * &RationalFunction::q_pow(-(n + 1) * (3 * n - 4) / 2);
            let braces = if even {
                &(&qfac2(c + 4, n - 1) * &qbracket(n - 2, 1)) / &qfac(c + 3, n - 1, 1)
            } else {
                // the second term carries no (1+q)^2 divisor
                let a = &(&qfac2(c + 3, n - 1) * &qbracket(n - 2, 1)) / &qfac(c + 2, n - 1, 1);
                let b = &(&RationalFunction::q_pow(c + n)
                    * &(&(&qfac2(c + 3, n - 1) * &qbracket(2 * ((n - 1) / 2) + 1, 1))
                        * &qbracket(2 * (n / 2), 1)))
                    / &qfac(c + 2, n, 1);
                &a + &b
            };
            &pref * &braces
        }
    }
}

/// `sum_{k=0}^{c} W(n,c)(k) q^k` in closed form, with the symbolic extended
/// sum recomputed and compared (a mismatch is a test signal).
pub fn sum_w(n: i64, c: i64) -> Result<RationalFunction> {
    assert!(n >= 1 && c >= 0);
    let closed = (&(&sign_pow(n - 1) * &RationalFunction::q_pow(-(n - 1) * (2 * c + n) / 2))
        * &(&qfac(1, n - 1, 1).pow(2).unwrap() * &qfac(c + 1, 2 * n - 1, 1)))
        .checked_div(&qfac(1, 2 * n - 1, 1))
        .expect("[1;q]_{2n-1} is nonzero");
    let direct = ext_range_sum(&QQuasiPolynomialK::from_plain(w_poly(n, c)), 0, c);
    if closed != direct {
        return Err(Error::InternalMismatch {
            what: "sum_w",
            detail: format!("n={n} c={c}"),
        });
    }
    Ok(closed)
}

/// `sum_{k=0}^{c} U(n,c)(k) q^k` in closed form, with the symbolic extended
/// sum recomputed and compared.
pub fn sum_u(n: i64, c: i64) -> Result<RationalFunction> {
    assert!(n >= 1 && c >= 0);
    let den = &(&qfac2(1, n - 1) * &one_plus_qpow(n - 1)) * &one_plus_qpow(n);
    let braces = if c % 2 == 0 {
        &qfac2(c + 2, n - 1) * &one_plus_qpow(c + n)
    } else {
        &qfac2(c + 1, n) * &(&RationalFunction::one() - &RationalFunction::q_pow(2))
    };
    let closed = (&rf_int(2) * &braces)
        .checked_div(&den)
        .expect("denominator factors are nonzero");
    let direct = ext_range_sum(&u_quasi(n, c), 0, c);
    if closed != direct {
        return Err(Error::InternalMismatch {
            what: "sum_u",
            detail: format!("n={n} c={c}"),
        });
    }
    Ok(closed)
}

/// The three recursion denominators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DenominatorKind {
    /// `U(0)W(-n) - U(-n)W(0)`, the generic-p determinant.
    Main,
    /// `U(-n-1)W(0) - U(0)W(-n-1)`, the p = 0 determinant.
    P0,
    /// `U(1)W(-n) - U(-n)W(1)`, the p = n determinant.
    Pn,
}

/// The closed product form of a recursion denominator together with the
/// value recomputed from the special values of `U` and `W`. Equality of the
/// two is the caller's test signal; [`denominator_product`] asserts it.
pub fn denominator_product_sides(
    n: i64,
    c: i64,
    kind: DenominatorKind,
) -> (RationalFunction, RationalFunction) {
    assert!(n >= 1 && c >= 0);
    let u = |p: SpecialPoint| u_special(n, c, p);
    let w = |k: i64| w_at(n, c, k);
    let even = c % 2 == 0;
    let pow_1q = |e: i64| one_plus_qpow(1).pow(e).expect("1 + q is nonzero");
    let common = &(&rf_int(2) * &qfac2(2, n - 1)) * &pow_1q(2 * n - 1);
    let (direct, closed) = match kind {
        DenominatorKind::Main => {
            let direct = &(&u(SpecialPoint::AtZero) * &w(-n)) - &(&u(SpecialPoint::AtMinusN) * &w(0));
            let braces = if even {
                &qfac2(c + 2, n - 1) / &one_plus_qpow(1)
            } else {
                &qfac2(c + 1, n) / &qbracket(c + n, 1)
            };
            let closed = &(&common * &RationalFunction::q_pow(-(c * (n - 1) + 2 * n * (n - 1))))
                * &braces;
            (direct, closed)
        }
        DenominatorKind::P0 => {
            let direct =
                &(&u(SpecialPoint::AtMinusN1) * &w(0)) - &(&u(SpecialPoint::AtZero) * &w(-n - 1));
            let braces = if even {
                qfac2(c + 2, n)
            } else {
                &(&qfac2(c + 1, n + 1) * &one_plus_qpow(1)) / &qbracket(c + n + 1, 1)
            };
            // like the p = n determinant, the common factor divides by [c+n;q]
            let closed = &(&(&(-&common) * &qbracket(n - 1, 1))
                .checked_div(&qbracket(c + n, 1))
                .expect("[c+n;q] is nonzero")
                * &RationalFunction::q_pow(-((n - 1) * c + 2 * (n - 1) * (n + 1))))
                * &braces;
            (direct, closed)
        }
        DenominatorKind::Pn => {
            let direct =
                &(&u(SpecialPoint::AtOne) * &w(-n)) - &(&u(SpecialPoint::AtMinusN) * &w(1));
            let braces = if even {
                qfac2(c, n)
            } else {
                &(&qfac2(c - 1, n + 1) * &one_plus_qpow(1)) / &qbracket(c + n - 1, 1)
            };
            let closed = &(&(&common * &qbracket(n - 1, 1))
                .checked_div(&qbracket(c + n, 1))
                .expect("[c+n;q] is nonzero")
                * &RationalFunction::q_pow(-((n - 1) * c + n * (2 * n - 3))))
                * &braces;
            (direct, closed)
        }
    };
    (direct, closed)
}

/// As [`denominator_product_sides`], asserting both sides are equal.
pub fn denominator_product(n: i64, c: i64, kind: DenominatorKind) -> Result<RationalFunction> {
    let (direct, closed) = denominator_product_sides(n, c, kind);
    if direct != closed {
        return Err(Error::InternalMismatch {
            what: "denominator_product",
            detail: format!(
                "n={n} c={c} kind={kind:?}: direct {} != closed {}",
                direct.to_canonical_text(),
                closed.to_canonical_text()
            ),
        });
    }
    Ok(closed)
}

/// The Bender-Knuth product `prod_{i=1}^{n} [c+i;q]_i / [i;q]_i`: the norm
/// generating function of all strict plane partitions with parts in {1..n}
/// and at most c columns.
pub fn bk_product(n: i64, c: i64) -> RationalFunction {
    assert!(n >= 0 && c >= 0);
    let mut acc = RationalFunction::one();
    for i in 1..=n {
        acc = &acc
            * &qfac(c + i, i, 1)
                .checked_div(&qfac(i, i, 1))
                .expect("[i;q]_i is nonzero");
    }
    acc
}

/// `sum_{p=0}^{n} L(n,c,p) = 0`.
pub fn sum_over_p_l(n: i64, c: i64) -> Result<()> {
    assert!(n >= 1 && c >= 0);
    let mut l_sum = RationalFunction::zero();
    for p in 0..=n {
        l_sum = &l_sum + &l_closed(n, c, p);
    }
    if !l_sum.is_zero() {
        return Err(Error::InternalMismatch {
            what: "sum_over_p L",
            detail: format!("n={n} c={c}: sum is {}", l_sum.to_canonical_text()),
        });
    }
    Ok(())
}

/// The M-sum identity, checked as polynomials in `Y = q^k` (both sides carry
/// the single monomial `Y^n`).
pub fn sum_over_p_m(n: i64, c: i64) -> Result<()> {
    assert!(n >= 1 && c >= 0);
    let mut m_sum = RationalFunction::zero();
    for p in 0..=n {
        m_sum = &m_sum + &m_closed(n, c, p);
    }
    // (-1)^{n-1} q^{(n-1)(k-c) - binom(n,2) + k} sum_p M
    //   = q^{kn}/[1;q]_{n-1} * prod_i [c+i+1;q]_{i-1}/[i;q]_i
    let lhs = QPolynomialK::monomial(
        n as u32,
        &(&sign_pow(n - 1) * &RationalFunction::q_pow(-(n - 1) * c - binom2(n))) * &m_sum,
    );
    let mut rhs_coeff = qfac(1, n - 1, 1)
        .recip()
        .expect("[1;q]_{n-1} is nonzero");
    for i in 1..n {
        rhs_coeff = &rhs_coeff
            * &qfac(c + i + 1, i - 1, 1)
                .checked_div(&qfac(i, i, 1))
                .expect("[i;q]_i is nonzero");
    }
    let rhs = QPolynomialK::monomial(n as u32, rhs_coeff);
    if lhs != rhs {
        return Err(Error::InternalMismatch {
            what: "sum_over_p M",
            detail: format!("n={n} c={c}"),
        });
    }
    Ok(())
}

/// Both sum-over-p consequences at once.
pub fn sum_over_p_checks(n: i64, c: i64) -> Result<()> {
    sum_over_p_l(n, c)?;
    sum_over_p_m(n, c)
}

/// The alternating hypergeometric sum with its closed right side:
/// `sum_{i=1}^{n} (-1)^i q^{binom(n-i+1,2)+i} / ([c+i]_n [1]_{i-1} [1]_{n-i})
///   = -q^{(n-1)c + (n+1)n/2} [1]_{2n-2} / ([1]_{n-1}^2 [c+1]_{2n-1})`.
pub fn hypo_sum(n: i64, c: i64) -> Result<()> {
    assert!(n >= 1 && c >= 0);
    let mut lhs = RationalFunction::zero();
    for i in 1..=n {
        let den = &(&qfac(c + i, n, 1) * &qfac(1, i - 1, 1)) * &qfac(1, n - i, 1);
        let term = &(&sign_pow(i) * &RationalFunction::q_pow(binom2(n - i + 1) + i))
            .checked_div(&den)
            .expect("positive bracket arguments");
        lhs = &lhs + term;
    }
    let rhs = &(&(-&RationalFunction::q_pow((n - 1) * c + (n + 1) * n / 2))
        * &qfac(1, 2 * n - 2, 1))
        .checked_div(&(&qfac(1, n - 1, 1).pow(2).unwrap() * &qfac(c + 1, 2 * n - 1, 1)))
        .expect("positive bracket arguments");
    if &lhs != rhs {
        return Err(Error::InternalMismatch {
            what: "hypo",
            detail: format!("n={n} c={c}"),
        });
    }
    Ok(())
}

/// The companion summation instance.
pub fn hypo_companion(n: i64, c: i64) -> Result<()> {
    assert!(n >= 1 && c >= 0);
    // companion: sum_{i=0}^{n-1} (-1)^i q^{binom(n+i,2)} / ([c+i+1]_n [1]_i [1]_{n-1-i})
    //   = q^{binom(n,2)} [1]_{2n-2} / ([c+1]_{2n-1} [1]_{n-1}^2)
    // (the [c+1;q] factorial runs to 2n-1; with 2n-2 the identity already
    // fails at n = 1 and at n = 2, c = 0)
    let mut lhs = RationalFunction::zero();
    for i in 0..n {
        let den = &(&qfac(c + i + 1, n, 1) * &qfac(1, i, 1)) * &qfac(1, n - 1 - i, 1);
        let term = &(&sign_pow(i) * &RationalFunction::q_pow(binom2(n + i)))
            .checked_div(&den)
            .expect("positive bracket arguments");
        lhs = &lhs + term;
    }
    let rhs = &(&RationalFunction::q_pow(binom2(n)) * &qfac(1, 2 * n - 2, 1))
        .checked_div(&(&qfac(c + 1, 2 * n - 1, 1) * &qfac(1, n - 1, 1).pow(2).unwrap()))
        .expect("positive bracket arguments");
    if &lhs != rhs {
        return Err(Error::InternalMismatch {
            what: "hypo companion",
            detail: format!("n={n} c={c}"),
        });
    }
    Ok(())
}

/// Both hypergeometric summation instances at once.
pub fn hypo_identities(n: i64, c: i64) -> Result<()> {
    hypo_sum(n, c)?;
    hypo_companion(n, c)
}

/// Structure check: the signed part of the closed quasi-polynomial is
/// exactly `L * Y^{n-1}`.
pub fn signed_part_is_l_times_y(n: i64, c: i64, p: i64) -> bool {
    let f = f_closed(n, c, p);
    signed_part(&f) == QPolynomialK::monomial((n - 1) as u32, l_closed(n, c, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::{f_brute, g_brute};

    fn rf_poly(terms: &[(i64, i64)]) -> RationalFunction {
        RationalFunction::from_laurent(LaurentPolynomial::from_integer_terms(
            terms.iter().copied(),
        ))
    }

    #[test]
    fn w_poly_examples() {
        assert_eq!(w_poly(1, 5), QPolynomialK::one());
        // n=2, c=0: [k+1][k-1] at k=2 is [3][1] = [3]
        assert_eq!(w_poly(2, 0).eval_at_k(2), qbracket(3, 1));
        assert!(w_poly(3, 2).eval_at_k(-1).is_zero());
        assert_eq!(w_poly(3, 2).degree(), Some(4));
    }

    #[test]
    fn u_quasi_examples() {
        // n = 1: X = Y = 0 and U(k) = (-1)^k
        let u = u_quasi(1, 3);
        assert!(u.plain.is_zero());
        assert_eq!(u.signed, QPolynomialK::one());
        assert_eq!(quasi_eval(&u, 4), RationalFunction::one());
        assert_eq!(quasi_eval(&u, -1), rf_int(-1));

        assert_eq!(
            signed_part(&u_quasi(3, 2)),
            QPolynomialK::monomial(2, RationalFunction::one())
        );
        // degree of X, Y at most 2n-3
        assert!(x_poly(3, 2).degree().unwrap_or(0) <= 3);
        assert!(y_poly(3, 2).degree().unwrap_or(0) <= 3);
    }

    #[test]
    fn l_m_initial_values() {
        assert_eq!(l_closed(1, 4, 1), RationalFunction::from_rational(ratio(-1, 2)));
        assert_eq!(l_closed(1, 4, 0), RationalFunction::from_rational(ratio(1, 2)));
        assert_eq!(m_closed(1, 7, 0), RationalFunction::from_rational(ratio(1, 2)));
        assert!(l_closed(2, 2, 5).is_zero());
    }

    #[test]
    fn g_closed_examples() {
        assert_eq!(g_closed(1, 2, 0), rf_poly(&[(0, 1), (2, 1)]));
        assert_eq!(
            g_closed(2, 2, 0),
            rf_poly(&[(0, 1), (2, 1), (3, 1), (4, 1), (6, 1)])
        );
        assert!(g_closed(2, 2, 3).is_zero());
        // boundary conventions shared with g_brute
        assert!(g_closed(0, 4, 0).is_one());
        assert!(g_closed(0, -1, 0).is_one());
        assert!(g_closed(2, -1, 0).is_zero());
        assert!(g_closed(3, 0, 0).is_one(), "only the empty object at c = 0");
    }

    #[test]
    fn g_closed_matches_brute_small() {
        for n in 0..=3usize {
            for c in 0..=3i64 {
                for p in 0..=n as i64 {
                    assert_eq!(
                        g_closed(n as i64, c, p),
                        g_brute(n, c, p).unwrap(),
                        "n={n} c={c} p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn f_closed_matches_brute_small() {
        for c in 0..=3i64 {
            for p in 0..=2i64 {
                let f = f_closed(2, c, p);
                for k in -3..=c + 3 {
                    assert_eq!(
                        quasi_eval(&f, k),
                        f_brute(2, c, p, k),
                        "c={c} p={p} k={k}"
                    );
                }
            }
        }
        assert_eq!(quasi_eval(&f_closed(2, 2, 0), 1), rf_poly(&[(2, 1)]));
        assert!(quasi_eval(&f_closed(3, 4, 1), -1).is_zero());
    }

    #[test]
    fn recursion_matches_closed_small() {
        for n in 1..=3i64 {
            for c in 0..=3i64 {
                for p in 0..=n {
                    assert_eq!(
                        l_recursive(n, c, p).unwrap(),
                        l_closed(n, c, p),
                        "L at n={n} c={c} p={p}"
                    );
                    assert_eq!(
                        m_recursive(n, c, p).unwrap(),
                        m_closed(n, c, p),
                        "M at n={n} c={c} p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn u_special_matches_u_quasi() {
        for n in 1..=4i64 {
            for c in 0..=5i64 {
                let u = u_quasi(n, c);
                for point in SpecialPoint::all() {
                    assert_eq!(
                        u_special(n, c, point),
                        quasi_eval(&u, point.k(n)),
                        "n={n} c={c} point={point:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn sum_identities() {
        assert_eq!(sum_w(1, 3).unwrap(), qbracket(4, 1));
        sum_w(2, 3).unwrap();
        sum_w(3, 2).unwrap();
        sum_u(1, 2).unwrap();
        sum_u(2, 2).unwrap();
        sum_u(2, 3).unwrap();
        sum_u(3, 4).unwrap();
    }

    #[test]
    fn denominator_instances() {
        denominator_product(2, 2, DenominatorKind::Main).unwrap();
        denominator_product(3, 3, DenominatorKind::P0).unwrap();
        // n = 1 degenerates: the main denominator is the constant 2
        assert_eq!(
            denominator_product(1, 4, DenominatorKind::Main).unwrap(),
            rf_int(2)
        );
        denominator_product(2, 3, DenominatorKind::Pn).unwrap();
    }

    #[test]
    fn bk_product_examples() {
        assert!(bk_product(0, 7).is_one());
        assert_eq!(bk_product(1, 4), qbracket(5, 1));
        assert_eq!(
            bk_product(2, 2),
            rf_poly(&[(0, 1), (1, 1), (2, 2), (3, 2), (4, 2), (5, 1), (6, 1)])
        );
    }

    #[test]
    fn sum_over_p_instances() {
        sum_over_p_checks(1, 3).unwrap();
        sum_over_p_checks(2, 2).unwrap();
        sum_over_p_checks(3, 3).unwrap();
    }

    #[test]
    fn hypo_instances() {
        hypo_identities(1, 0).unwrap();
        hypo_identities(1, 5).unwrap();
        hypo_identities(2, 0).unwrap();
        hypo_identities(3, 2).unwrap();
        hypo_identities(4, 5).unwrap();
    }

    #[test]
    fn signed_part_structure() {
        for n in 1..=3i64 {
            for c in 0..=3i64 {
                for p in 0..=n {
                    assert!(signed_part_is_l_times_y(n, c, p), "n={n} c={c} p={p}");
                }
            }
        }
    }

    #[test]
    fn fit_of_brute_samples_reconstructs_the_closed_form() {
        use crate::qsymb::fit_quasi;
        let samples: Vec<(i64, RationalFunction)> =
            (-2..=4).map(|k| (k, f_brute(2, 2, 0, k))).collect();
        let fit = fit_quasi(&samples, 2, 2).unwrap();
        assert_eq!(fit, f_closed(2, 2, 0));
    }
}
