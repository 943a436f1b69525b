//! Combinatorial objects and their statistics: partitions, strict plane
//! partitions, generalized Gelfand-Tsetlin patterns, the norm-preserving
//! bijection between the two, and exhaustive enumerators.
//!
//! Conventions. A generalized (r,n,c)-pattern has rows indexed 1..=r+1 where
//! row 1 is the longest (displayed at the bottom) and row r+1 the shortest
//! (the top). Row i holds entries `a[i][j]` for `j` in `i-1 ..= n+1` with the
//! fixed boundary values `a[i][i-1] = 0` and `a[i][n+1] = c`; the remaining
//! entries are the interior. Every interior entry of a non-top row lies
//! between its northwest neighbour `w = a[i+1][j]` and northeast neighbour
//! `e = a[i+1][j+1]`: weakly when `w <= e`, strictly when `w > e`. In memory
//! rows are stored bottom-up (`rows[0]` is row 1) and include the boundaries.
//!
//! Enumeration is streaming with a deterministic order (lexicographic over
//! generated entries, row-major from the top down, smallest value first) so
//! dumps and parallel merges are reproducible.

use serde_json::{json, Value};

use crate::{Error, Result};

/// A partition: weakly decreasing positive parts (trailing zeros trimmed).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::ShapeNotPartition { row: 0 });
            }
        }
        if let Some(&bad) = parts.iter().find(|&&p| p < 0) {
            return Err(Error::PartOutOfRange {
                row: 0,
                col: 0,
                value: bad,
            });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// A strict plane partition: weakly decreasing rows, strictly decreasing
/// columns, positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrictPlanePartition {
    rows: Vec<Vec<i64>>,
}

/// Validates an array as a strict plane partition. The error names the
/// violated cell (0-based row and column).
pub fn spp_validate(rows: Vec<Vec<i64>>) -> Result<StrictPlanePartition> {
    for (i, row) in rows.iter().enumerate() {
        if row.is_empty() {
            return Err(Error::ShapeNotPartition { row: i });
        }
        if i > 0 && row.len() > rows[i - 1].len() {
            return Err(Error::ShapeNotPartition { row: i });
        }
        for (j, &v) in row.iter().enumerate() {
            if v < 1 {
                return Err(Error::PartOutOfRange {
                    row: i,
                    col: j,
                    value: v,
                });
            }
            if j > 0 && row[j - 1] < v {
                return Err(Error::RowNotDecreasing { row: i, col: j });
            }
            if i > 0 && rows[i - 1][j] <= v {
                return Err(Error::ColumnNotStrict { row: i, col: j });
            }
        }
    }
    Ok(StrictPlanePartition { rows })
}

impl StrictPlanePartition {
    pub fn empty() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as i64).collect())
            .expect("row lengths of a valid SPP form a partition")
    }

    /// Sum of all parts.
    pub fn norm(&self) -> i64 {
        self.rows.iter().flatten().sum()
    }

    /// Number of rows of odd length.
    pub fn odd_rows(&self) -> usize {
        self.rows.iter().filter(|r| r.len() % 2 == 1).count()
    }

    /// Number of parts equal to `v`.
    pub fn count_eq(&self, v: i64) -> usize {
        self.rows.iter().flatten().filter(|&&p| p == v).count()
    }

    pub fn max_part(&self) -> i64 {
        self.rows.first().and_then(|r| r.first()).copied().unwrap_or(0)
    }

    pub fn num_columns(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    /// CLI-facing JSON; `n` is the part-size bound the count statistic refers to.
    pub fn to_json(&self, n: i64) -> Value {
        json!({
            "rows": self.rows,
            "norm": self.norm(),
            "odd_rows": self.odd_rows(),
            "count_n": self.count_eq(n),
        })
    }
}

/// A generalized (r,n,c) Gelfand-Tsetlin pattern. Rows are stored bottom-up
/// and include the boundary entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GtPattern {
    r: usize,
    n: usize,
    c: i64,
    rows: Vec<Vec<i64>>,
}

/// Range of values allowed between a northwest neighbour `w` and a northeast
/// neighbour `e`: `[w, e]` weakly when `w <= e`, `(e, w)` strictly otherwise.
/// An empty range comes back with `lo > hi`.
#[inline]
pub(crate) fn allowed_range(w: i64, e: i64) -> (i64, i64) {
    if w <= e {
        (w, e)
    } else {
        (e + 1, w - 1)
    }
}

/// Validates an (r,n,c)-pattern given its full rows (bottom-up, boundaries
/// included). Betweenness errors name the entry by its (i, j) indices.
pub fn gt_validate(r: usize, n: usize, c: i64, rows: Vec<Vec<i64>>) -> Result<GtPattern> {
    if r > n {
        return Err(Error::InvalidParams(format!("r = {r} exceeds n = {n}")));
    }
    if rows.len() != r + 1 {
        return Err(Error::PatternShape {
            row: 1,
            got: rows.len(),
            expected: r + 1,
        });
    }
    for (idx, row) in rows.iter().enumerate() {
        let i = idx + 1; // 1-based row index
        let expected = n + 3 - i;
        if row.len() != expected {
            return Err(Error::PatternShape {
                row: i,
                got: row.len(),
                expected,
            });
        }
        if row[0] != 0 {
            return Err(Error::PatternBoundary {
                i,
                j: i as i64 - 1,
                got: row[0],
                expected: 0,
            });
        }
        if *row.last().unwrap() != c {
            return Err(Error::PatternBoundary {
                i,
                j: n as i64 + 1,
                got: *row.last().unwrap(),
                expected: c,
            });
        }
    }
    // betweenness of each interior entry of row i against row i+1
    for idx in 0..r {
        let lower = &rows[idx];
        let upper = &rows[idx + 1];
        for t in 1..lower.len() - 1 {
            let (lo, hi) = allowed_range(upper[t - 1], upper[t]);
            if lower[t] < lo || lower[t] > hi {
                return Err(Error::Betweenness {
                    i: idx + 1,
                    j: idx as i64 + t as i64,
                });
            }
        }
    }
    Ok(GtPattern { r, n, c, rows })
}

fn row_descents(row: &[i64]) -> usize {
    row.windows(2).filter(|w| w[0] > w[1]).count()
}

impl GtPattern {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    /// Full rows, bottom-up, boundaries included.
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Interior entries of row `i` (1-based, bottom-up).
    pub fn interior(&self, i: usize) -> &[i64] {
        let row = &self.rows[i - 1];
        &row[1..row.len() - 1]
    }

    /// Interior of the top row: the `k` vector.
    pub fn top_interior(&self) -> &[i64] {
        self.interior(self.r + 1)
    }

    /// Number of adjacent descending pairs in rows 2..=r+1 (pairs in row 1
    /// never count).
    pub fn inversions(&self) -> usize {
        self.rows.iter().skip(1).map(|row| row_descents(row)).sum()
    }

    /// `(-1)^inversions`.
    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Sum of all interior entries (the first and last entry of each row are
    /// omitted).
    pub fn norm(&self) -> i64 {
        self.rows
            .iter()
            .map(|row| row[1..row.len() - 1].iter().sum::<i64>())
            .sum()
    }

    /// Number of odd entries among the interiors of row 1.
    pub fn bottom_odd_count(&self) -> usize {
        self.interior(1).iter().filter(|v| v.rem_euclid(2) == 1).count()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "r": self.r,
            "n": self.n,
            "c": self.c,
            "rows": self.rows,
            "inversions": self.inversions(),
            "sign": self.sign(),
            "norm": self.norm(),
        })
    }
}

// ---------------------------------------------------------------------------
// Bijection with strict plane partitions.

/// Maps an inversion-free (n-1,n,c)-pattern to the strict plane partition in
/// which the cells holding parts greater than `i` form the shape read off row
/// `i+1` (interiors reversed, zeros trimmed). Inverse of [`spp_to_gt`];
/// preserves the norm.
pub fn gt_to_spp(g: &GtPattern) -> Result<StrictPlanePartition> {
    if g.r + 1 != g.n {
        return Err(Error::BijectionDomain(format!(
            "pattern has {} rows, need n = {} rows",
            g.r + 1,
            g.n
        )));
    }
    let inv = g.inversions();
    if inv != 0 {
        return Err(Error::PatternHasInversions(inv));
    }
    let n = g.n;
    // shapes[i] = shape filled by parts > i, read off row i+1
    let shapes: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut parts: Vec<i64> = g.interior(i + 1).iter().rev().copied().collect();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            parts
        })
        .collect();
    let outer = &shapes[0];
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(outer.len());
    for (row_idx, &len) in outer.iter().enumerate() {
        let mut row = Vec::with_capacity(len as usize);
        for col in 0..len as usize {
            // the part is the number of nested shapes containing this cell
            let v = shapes
                .iter()
                .take_while(|s| s.get(row_idx).copied().unwrap_or(0) as usize > col)
                .count() as i64;
            row.push(v);
        }
        rows.push(row);
    }
    spp_validate(rows)
}

/// Maps a strict plane partition with parts in {1..n} and at most `c` columns
/// to its Gelfand-Tsetlin pattern. Inverse of [`gt_to_spp`].
pub fn spp_to_gt(p: &StrictPlanePartition, n: usize, c: i64) -> Result<GtPattern> {
    if p.max_part() > n as i64 {
        return Err(Error::BijectionDomain(format!(
            "part {} exceeds n = {n}",
            p.max_part()
        )));
    }
    if p.num_columns() as i64 > c {
        return Err(Error::BijectionDomain(format!(
            "{} columns exceed c = {c}",
            p.num_columns()
        )));
    }
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(n);
    for i in 0..n {
        // shape filled by parts > i, padded to n - i entries, ascending
        let mut shape: Vec<i64> = p
            .rows
            .iter()
            .map(|row| row.iter().filter(|&&v| v > i as i64).count() as i64)
            .filter(|&l| l > 0)
            .collect();
        shape.resize(n - i, 0);
        let mut full = Vec::with_capacity(n - i + 2);
        full.push(0);
        full.extend(shape.iter().rev());
        full.push(c);
        rows.push(full);
    }
    gt_validate(n - 1, n, c, rows)
}

// ---------------------------------------------------------------------------
// Enumeration.

/// All candidate rows directly below `upper` (full rows, boundaries
/// included), in ascending lexicographic order of their entries.
pub(crate) fn rows_below(upper: &[i64], c: i64) -> Vec<Vec<i64>> {
    let m = upper.len() - 1; // interior entries of the new row
    let mut out = Vec::new();
    let mut buf: Vec<i64> = Vec::with_capacity(m + 2);
    buf.push(0);
    fn rec(upper: &[i64], c: i64, m: usize, buf: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let t = buf.len();
        if t == m + 1 {
            let mut row = buf.clone();
            row.push(c);
            out.push(row);
            return;
        }
        let (lo, hi) = allowed_range(upper[t - 1], upper[t]);
        for v in lo..=hi {
            buf.push(v);
            rec(upper, c, m, buf, out);
            buf.pop();
        }
    }
    rec(upper, c, m, &mut buf, &mut out);
    out
}

/// Depth-first visitor over every completion of a pattern below `upper` with
/// `remaining` more rows to generate. The callback receives the inversion
/// count and norm contributed by the generated rows and the full bottom row.
/// This is the allocation-light path used by the generating-function
/// enumerations; it shares the range logic with the public iterator.
pub(crate) fn visit_below<F: FnMut(usize, i64, &[i64])>(
    upper: &[i64],
    remaining: usize,
    f: &mut F,
) {
    if remaining == 0 {
        f(0, 0, upper);
        return;
    }
    let mut rows: Vec<Vec<i64>> = vec![upper.to_vec(), vec![0]];
    rec(0, 1, remaining, 0, 0, &mut rows, f);

    /// One recursion over entry positions; `rows[upper_idx]` is complete and
    /// `rows[upper_idx + 1]` is the partial row being generated at position `t`.
    fn rec<F: FnMut(usize, i64, &[i64])>(
        upper_idx: usize,
        t: usize,
        remaining: usize,
        inv_acc: usize,
        norm_acc: i64,
        rows: &mut Vec<Vec<i64>>,
        f: &mut F,
    ) {
        let m = rows[upper_idx].len() - 1; // interior entries of the new row
        if t == m + 1 {
            let c = *rows[upper_idx].last().unwrap();
            rows[upper_idx + 1].push(c);
            if remaining == 1 {
                // bottom row: its descents never count as inversions
                f(inv_acc, norm_acc, &rows[upper_idx + 1]);
            } else {
                let inv_add = row_descents(&rows[upper_idx + 1]);
                if rows.len() == upper_idx + 2 {
                    rows.push(Vec::new());
                }
                rows[upper_idx + 2].clear();
                rows[upper_idx + 2].push(0);
                rec(
                    upper_idx + 1,
                    1,
                    remaining - 1,
                    inv_acc + inv_add,
                    norm_acc,
                    rows,
                    f,
                );
            }
            rows[upper_idx + 1].pop();
            return;
        }
        let (lo, hi) = allowed_range(rows[upper_idx][t - 1], rows[upper_idx][t]);
        for v in lo..=hi {
            rows[upper_idx + 1].push(v);
            rec(upper_idx, t + 1, remaining, inv_acc, norm_acc + v, rows, f);
            rows[upper_idx + 1].pop();
        }
    }
}

/// Streaming enumerator of every (r,n,c)-pattern with the given top-row
/// interior, each exactly once, in deterministic order. Memory stays
/// proportional to a single pattern.
pub fn gt_enumerate(r: usize, n: usize, c: i64, top_row: &[i64]) -> GtEnumerator {
    assert!(r <= n, "need 0 <= r <= n");
    assert_eq!(top_row.len(), n - r, "top row has n - r interior entries");
    let mut top = Vec::with_capacity(n - r + 2);
    top.push(0);
    top.extend_from_slice(top_row);
    top.push(c);
    let bound_lo = top.iter().copied().min().unwrap().min(0);
    let bound_hi = top.iter().copied().max().unwrap().max(c);
    let mut rows_top_down = vec![top];
    if r > 0 {
        rows_top_down.push(vec![0]);
    }
    GtEnumerator {
        r,
        n,
        c,
        bound: (bound_lo, bound_hi),
        rows_top_down,
        frames: Vec::new(),
        state: EnumState::Fresh,
    }
}

#[derive(PartialEq)]
enum EnumState {
    Fresh,
    Running,
    Done,
}

struct Frame {
    value: i64,
    hi: i64,
    /// This entry completed its row (the closing boundary was appended).
    closed_row: bool,
    /// A fresh row was opened after closing this one.
    opened_new: bool,
}

/// See [`gt_enumerate`].
pub struct GtEnumerator {
    r: usize,
    n: usize,
    c: i64,
    bound: (i64, i64),
    /// Rows from the top down; the last one may be partial.
    rows_top_down: Vec<Vec<i64>>,
    frames: Vec<Frame>,
    state: EnumState,
}

impl GtEnumerator {
    fn total_entries(&self) -> usize {
        // generated row t (1-based, top down) has n - r + t interior entries
        (1..=self.r).map(|t| self.n - self.r + t).sum()
    }

    /// Appends `value` as the next generated entry and performs any row
    /// bookkeeping. `hi` is the remaining headroom for this position.
    fn push_value(&mut self, value: i64, hi: i64) {
        assert!(
            value >= self.bound.0 && value <= self.bound.1,
            "generated entry escapes the a-priori bound"
        );
        let depth = self.rows_top_down.len();
        let upper_len = self.rows_top_down[depth - 2].len();
        let cur = self.rows_top_down.last_mut().unwrap();
        cur.push(value);
        let mut closed_row = false;
        let mut opened_new = false;
        if cur.len() == upper_len {
            cur.push(self.c);
            closed_row = true;
            if depth - 1 < self.r {
                self.rows_top_down.push(vec![0]);
                opened_new = true;
            }
        }
        self.frames.push(Frame {
            value,
            hi,
            closed_row,
            opened_new,
        });
    }

    /// Removes the top frame and its row bookkeeping; returns it.
    fn pop_value(&mut self) -> Frame {
        let frame = self.frames.pop().expect("pop on empty frame stack");
        if frame.opened_new {
            self.rows_top_down.pop();
        }
        let cur = self.rows_top_down.last_mut().unwrap();
        if frame.closed_row {
            cur.pop(); // closing boundary
        }
        cur.pop(); // the value itself
        frame
    }

    /// Tries to open the next undetermined entry at its lowest value.
    fn push_next_lowest(&mut self) -> bool {
        let depth = self.rows_top_down.len();
        let upper = &self.rows_top_down[depth - 2];
        let t = self.rows_top_down.last().unwrap().len();
        let (lo, hi) = allowed_range(upper[t - 1], upper[t]);
        if lo > hi {
            return false;
        }
        self.push_value(lo, hi);
        true
    }

    /// Backtracks to the most recent frame with headroom and advances it.
    fn advance(&mut self) -> bool {
        while !self.frames.is_empty() {
            let frame = self.pop_value();
            if frame.value < frame.hi {
                self.push_value(frame.value + 1, frame.hi);
                return true;
            }
        }
        false
    }

    /// Extends the current prefix to a complete pattern, backtracking as
    /// needed; false when the search space is exhausted.
    fn complete(&mut self) -> bool {
        let total = self.total_entries();
        while self.frames.len() < total {
            if !self.push_next_lowest() && !self.advance() {
                return false;
            }
        }
        true
    }

    fn snapshot(&self) -> GtPattern {
        let mut rows = self.rows_top_down.clone();
        rows.reverse();
        GtPattern {
            r: self.r,
            n: self.n,
            c: self.c,
            rows,
        }
    }
}

impl Iterator for GtEnumerator {
    type Item = GtPattern;

    fn next(&mut self) -> Option<Self::Item> {
        match self.state {
            EnumState::Done => None,
            EnumState::Fresh => {
                self.state = EnumState::Running;
                if self.r == 0 {
                    self.state = EnumState::Done;
                    return Some(self.snapshot());
                }
                if self.complete() {
                    Some(self.snapshot())
                } else {
                    self.state = EnumState::Done;
                    None
                }
            }
            EnumState::Running => {
                if self.advance() && self.complete() {
                    Some(self.snapshot())
                } else {
                    self.state = EnumState::Done;
                    None
                }
            }
        }
    }
}

/// Streaming enumerator of all strict plane partitions with parts in
/// {1, ..., n} and at most `c` columns, the empty one first, in a
/// deterministic depth-first order (each partition directly precedes its
/// extensions by an additional row).
pub fn spp_enumerate(n: i64, c: i64) -> SppEnumerator {
    assert!(n >= 0 && c >= 0, "need n >= 0 and c >= 0");
    SppEnumerator {
        n,
        c,
        state: EnumState::Fresh,
        rows: Vec::new(),
        row_stacks: Vec::new(),
    }
}

/// See [`spp_enumerate`].
pub struct SppEnumerator {
    n: i64,
    c: i64,
    state: EnumState,
    rows: Vec<Vec<i64>>,
    /// Per level, the untried candidate rows in reverse order, so the next
    /// one pops off the end.
    row_stacks: Vec<Vec<Vec<i64>>>,
}

/// All nonempty weakly decreasing positive rows with `row[j] <= caps[j]` and
/// length at most `caps.len()`, ascending lexicographically with shorter
/// prefixes first.
fn candidate_rows(caps: &[i64]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut buf: Vec<i64> = Vec::new();
    fn rec(caps: &[i64], buf: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let j = buf.len();
        if j == caps.len() {
            return;
        }
        let max = caps[j].min(buf.last().copied().unwrap_or(i64::MAX));
        for v in 1..=max {
            buf.push(v);
            out.push(buf.clone());
            rec(caps, buf, out);
            buf.pop();
        }
    }
    rec(caps, &mut buf, &mut out);
    out
}

impl SppEnumerator {
    fn caps_below(&self) -> Vec<i64> {
        match self.rows.last() {
            None => vec![self.n; self.c as usize],
            Some(row) => row
                .iter()
                .map(|&v| v - 1)
                .take_while(|&v| v >= 1)
                .collect(),
        }
    }

    fn descend(&mut self) -> bool {
        let mut cands = candidate_rows(&self.caps_below());
        if cands.is_empty() {
            return false;
        }
        cands.reverse();
        let first = cands.pop().unwrap();
        self.rows.push(first);
        self.row_stacks.push(cands);
        true
    }

    fn advance(&mut self) -> bool {
        while let Some(stack) = self.row_stacks.last_mut() {
            if let Some(next) = stack.pop() {
                *self.rows.last_mut().unwrap() = next;
                return true;
            }
            self.row_stacks.pop();
            self.rows.pop();
        }
        false
    }
}

impl Iterator for SppEnumerator {
    type Item = StrictPlanePartition;

    fn next(&mut self) -> Option<Self::Item> {
        match self.state {
            EnumState::Done => None,
            EnumState::Fresh => {
                self.state = EnumState::Running;
                Some(StrictPlanePartition::empty())
            }
            EnumState::Running => {
                if self.descend() || self.advance() {
                    Some(StrictPlanePartition {
                        rows: self.rows.clone(),
                    })
                } else {
                    self.state = EnumState::Done;
                    None
                }
            }
        }
    }
}
