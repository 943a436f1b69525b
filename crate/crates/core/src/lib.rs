//! Exact-arithmetic engine for refined enumeration of strict plane partitions.
//!
//! The crate computes norm generating functions of column-strict plane
//! partitions with bounded part size and column count, refined by the number
//! of odd-length rows and the number of maximal parts, and verifies the
//! closed product formulas for these generating functions against brute-force
//! enumeration. Everything is carried out over the exact coefficient tower
//! Q ⊂ Q[q, q⁻¹] ⊂ Q(q); there is no floating point anywhere.
//!
//! Module map:
//! - [`exactq`]: rationals, sparse Laurent polynomials in `q`, the field
//!   Q(q), and the q-bracket/factorial/binomial constructors.
//! - [`qsymb`]: polynomials and period-2 quasi-polynomials in a second
//!   integer variable `k` (monomial basis `Y = q^k`), weighted partial sums,
//!   extended-range summation and Lagrange interpolation over Q(q).
//! - [`patterns`]: strict plane partitions, generalized Gelfand-Tsetlin
//!   patterns, their statistics, the norm-preserving bijection between the
//!   two, and exhaustive enumerators.
//! - [`genfun`]: brute-force signed generating functions of patterns, the
//!   pointwise recursion engine, and parity indicator helpers.
//! - [`closedform`]: the explicit product/sum formulas (Bender-Knuth product,
//!   refined generating functions, interpolation constants) and instance
//!   checks of the q-summation identities backing them.
//! - [`verify`]: grid-based verification suites producing machine-readable
//!   reports with a deterministic parallel runner.

pub mod closedform;
pub mod exactq;
pub mod genfun;
pub mod parallel;
pub mod patterns;
pub mod qsymb;
pub mod verify;

mod error;

pub use error::{Error, Result};
