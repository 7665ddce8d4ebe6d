//! Exact dense linear algebra over the rationals.
//!
//! Rank, kernel and span-membership computations used by every algebraic
//! module in the crate. Rows are scaled to primitive integer vectors and
//! eliminated by exact cross-multiplication; after each row operation the
//! row is divided by its content, which keeps entries small in practice.
//! Elimination first runs on `i128` entries and transparently restarts on
//! `BigInt` rows if any product overflows, so results are always exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rat;

/// A dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(data: Vec<Vec<Rat>>) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        for row in &data {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
        }
        Ok(Self {
            rows,
            cols,
            entries: data.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = crate::rational::rat(1);
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, row: usize, col: usize) -> &Rat {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        &self.entries[row * self.cols + col]
    }

    /// Matrix-vector product, used by tests as an independent check on
    /// kernel vectors.
    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    let e = &self.entries[i * self.cols + j];
                    if !e.is_zero() && !v[j].is_zero() {
                        acc += e * &v[j];
                    }
                }
                acc
            })
            .collect())
    }

    /// Rank over the rationals, computed exactly.
    pub fn rank(&self) -> usize {
        int_rank(&self.integer_rows(), self.cols)
    }

    /// A basis of the right null space; its size is `cols - rank`. Vectors
    /// are returned as primitive integer directions (no fixed normalization
    /// is promised beyond exactness).
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        int_kernel(&self.integer_rows(), self.cols)
            .into_iter()
            .map(|v| v.into_iter().map(Rat::from_integer).collect())
            .collect()
    }

    /// Clears denominators row by row; row scaling changes neither rank nor
    /// kernel.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| integerize(&self.entries[i * self.cols..(i + 1) * self.cols]))
            .collect()
    }
}

/// True iff `v` lies in the rational span of `basis`.
pub fn in_span(v: &[Rat], basis: &[Vec<Rat>]) -> Result<bool> {
    for b in basis {
        if b.len() != v.len() {
            return Err(Error::DimensionMismatch {
                expected: v.len(),
                got: b.len(),
            });
        }
    }
    if v.iter().all(Rat::is_zero) {
        return Ok(true);
    }
    let mut rows: Vec<Vec<BigInt>> = basis.iter().map(|b| integerize(b)).collect();
    let base_rank = int_rank(&rows, v.len());
    rows.push(integerize(v));
    Ok(int_rank(&rows, v.len()) == base_rank)
}

fn integerize(row: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::from(1);
    for x in row {
        lcm = lcm.lcm(x.denom());
    }
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

// ---------------------------------------------------------------------------
// Integer elimination core, generic over the entry type.
// ---------------------------------------------------------------------------

pub(crate) trait Entry: Clone + Sized {
    fn zero_value() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    /// `a*x - b*y`, or None on overflow.
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn exact_div(&self, d: &Self) -> Self;
    fn negate(&self) -> Self;
    fn to_big(&self) -> BigInt;
}

impl Entry for i128 {
    fn zero_value() -> Self {
        0
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn is_negative(&self) -> bool {
        *self < 0
    }

    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        let r = a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)?;
        // i128::MIN has no absolute value; treat it as overflow too.
        (r != i128::MIN).then_some(r)
    }

    fn gcd(&self, other: &Self) -> Self {
        let mut a = self.unsigned_abs();
        let mut b = other.unsigned_abs();
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a as i128
    }

    fn exact_div(&self, d: &Self) -> Self {
        self / d
    }

    fn negate(&self) -> Self {
        -self
    }

    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Entry for BigInt {
    fn zero_value() -> Self {
        BigInt::ZERO
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }

    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }

    fn exact_div(&self, d: &Self) -> Self {
        self / d
    }

    fn negate(&self) -> Self {
        -self
    }

    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

struct EchelonForm<T> {
    rows: Vec<Vec<T>>,
    /// (row, column) of each pivot, in increasing column order.
    pivots: Vec<(usize, usize)>,
}

/// Divide a row by its content and flip signs so the first nonzero entry is
/// positive.
fn normalize_row<T: Entry>(row: &mut [T]) {
    let mut g: Option<T> = None;
    let mut first_negative = false;
    for x in row.iter() {
        if x.is_zero() {
            continue;
        }
        g = Some(match g {
            None => {
                first_negative = x.is_negative();
                x.gcd(x)
            }
            Some(g) => g.gcd(x),
        });
    }
    let Some(mut g) = g else { return };
    if first_negative {
        g = g.negate();
    }
    for x in row.iter_mut() {
        *x = x.exact_div(&g);
    }
}

fn count_nonzero<T: Entry>(row: &[T]) -> usize {
    row.iter().filter(|x| !x.is_zero()).count()
}

/// target := pivot[col] * target - target[col] * pivot, zeroing target[col].
/// Full-pivot cross-multiplication keeps a Bareiss-style common factor in
/// the row for the content reduction to strip; reducing the two coefficients
/// by their gcd first destroys that factor and lets entries snowball.
fn eliminate_row<T: Entry>(target: &mut [T], pivot: &[T], col: usize, start: usize) -> Option<()> {
    let t_col = target[col].clone();
    let p_col = pivot[col].clone();
    for j in start..target.len() {
        if j == col {
            continue;
        }
        let value = T::cross(&p_col, &target[j], &t_col, &pivot[j])?;
        target[j] = value;
    }
    target[col] = T::zero_value();
    Some(())
}

/// Gaussian (or Gauss-Jordan, when `reduced`) elimination. Returns None if
/// the entry type overflowed.
fn eliminate<T: Entry>(
    mut rows: Vec<Vec<T>>,
    cols: usize,
    reduced: bool,
) -> Option<EchelonForm<T>> {
    for row in &mut rows {
        normalize_row(row);
    }
    let mut weight: Vec<usize> = rows.iter().map(|r| count_nonzero(r)).collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next = 0usize;
    for col in 0..cols {
        if next == rows.len() {
            break;
        }
        // Sparsest candidate row keeps fill-in and entry growth down.
        let mut best: Option<usize> = None;
        for i in next..rows.len() {
            if !rows[i][col].is_zero() && best.is_none_or(|b| weight[i] < weight[b]) {
                best = Some(i);
            }
        }
        let Some(b) = best else { continue };
        rows.swap(next, b);
        weight.swap(next, b);
        let pivot = rows[next].clone();
        let start = if reduced { 0 } else { col };
        for r in 0..rows.len() {
            if r == next || rows[r][col].is_zero() || (!reduced && r < next) {
                continue;
            }
            eliminate_row(&mut rows[r], &pivot, col, start)?;
            normalize_row(&mut rows[r]);
            weight[r] = count_nonzero(&rows[r]);
        }
        pivots.push((next, col));
        next += 1;
    }
    Some(EchelonForm { rows, pivots })
}

fn kernel_from_reduced<T: Entry>(ech: &EchelonForm<T>, cols: usize) -> Vec<Vec<BigInt>> {
    let mut pivot_cols = vec![false; cols];
    for &(_, c) in &ech.pivots {
        pivot_cols[c] = true;
    }
    let mut basis = Vec::with_capacity(cols - ech.pivots.len());
    for free in 0..cols {
        if pivot_cols[free] {
            continue;
        }
        // v[free] = lcm of pivot entries; v[pivot col] = -entry * lcm / pivot.
        let mut scale = BigInt::from(1);
        for &(ri, ci) in &ech.pivots {
            if !ech.rows[ri][free].is_zero() {
                scale = scale.lcm(&ech.rows[ri][ci].to_big());
            }
        }
        let mut v = vec![BigInt::zero(); cols];
        v[free] = scale.clone();
        for &(ri, ci) in &ech.pivots {
            let num = ech.rows[ri][free].to_big();
            if !Zero::is_zero(&num) {
                v[ci] = -num * (&scale / ech.rows[ri][ci].to_big());
            }
        }
        normalize_row(&mut v);
        basis.push(v);
    }
    basis
}

fn to_small_rows(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    rows.iter()
        .map(|row| row.iter().map(|x| i128::try_from(x).ok()).collect())
        .collect()
}

enum Echelon {
    Small(EchelonForm<i128>),
    Big(EchelonForm<BigInt>),
}

fn echelonize(rows: &[Vec<BigInt>], cols: usize, reduced: bool) -> Echelon {
    if let Some(small) = to_small_rows(rows) {
        if let Some(e) = eliminate::<i128>(small, cols, reduced) {
            return Echelon::Small(e);
        }
    }
    let e = eliminate::<BigInt>(rows.to_vec(), cols, reduced)
        .expect("BigInt elimination cannot overflow");
    Echelon::Big(e)
}

// ---------------------------------------------------------------------------
// Online echelonization.
//
// Rows arrive one at a time and are reduced against the rows already held,
// like polynomial division: find the leading (first nonzero) column, cross
// with the row holding that lead, repeat until the lead is free or the row
// dies. On the shifted-partial matrices built by the syzygy module almost
// every column has at most a handful of candidate rows, so reduction chains
// stay short and entries small where a column-scan elimination would swell.
// An optional suffix block (untouched by lead selection) tracks the row
// combination, which yields kernel vectors when rows reduce to zero.
// ---------------------------------------------------------------------------

struct OnlineEchelon<T> {
    /// Leading columns are searched in 0..lead_cols only; anything beyond is
    /// carried combination bookkeeping.
    lead_cols: usize,
    rows_by_lead: std::collections::BTreeMap<usize, Vec<T>>,
    /// Suffixes (beyond lead_cols) of rows that reduced to zero.
    kernel_suffixes: Vec<Vec<T>>,
}

impl<T: Entry> OnlineEchelon<T> {
    fn new(lead_cols: usize) -> Self {
        Self {
            lead_cols,
            rows_by_lead: std::collections::BTreeMap::new(),
            kernel_suffixes: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows_by_lead.len()
    }

    /// Reduce and insert one row; None signals entry-type overflow.
    fn insert(&mut self, mut row: Vec<T>) -> Option<()> {
        normalize_row(&mut row);
        loop {
            let lead = match row[..self.lead_cols].iter().position(|x| !x.is_zero()) {
                Some(lead) => lead,
                None => {
                    let suffix: Vec<T> = row[self.lead_cols..].to_vec();
                    if suffix.iter().any(|x| !x.is_zero()) {
                        self.kernel_suffixes.push(suffix);
                    }
                    return Some(());
                }
            };
            match self.rows_by_lead.get(&lead) {
                None => {
                    self.rows_by_lead.insert(lead, row);
                    return Some(());
                }
                Some(pivot) => {
                    eliminate_row(&mut row, pivot, lead, lead)?;
                    normalize_row(&mut row);
                }
            }
        }
    }
}

/// Result of an online reduction over `BigInt` coordinates.
pub(crate) struct OnlineResult {
    pub rank: usize,
    /// Sorted leading columns of the surviving rows.
    pub pivots: Vec<usize>,
    /// The surviving echelon rows, by leading column; filled only on request.
    pub rows: Vec<Vec<BigInt>>,
    /// Suffix blocks (columns past `lead_cols`) of rows that reduced to
    /// zero: the tracked kernel combinations.
    pub kernels: Vec<Vec<BigInt>>,
}

/// Feed `n_rows` rows (produced by `row_fn`, each `total_cols` long with
/// leading-column search restricted to the first `lead_cols`) through online
/// echelonization. Runs on i128 entries first and restarts on BigInt if
/// anything overflows, so `row_fn` must be pure.
pub(crate) fn online_reduce(
    n_rows: usize,
    lead_cols: usize,
    total_cols: usize,
    mut row_fn: impl FnMut(usize) -> Vec<BigInt>,
    want_rows: bool,
) -> OnlineResult {
    debug_assert!(lead_cols <= total_cols);
    let small_attempt = (|| {
        let mut ech = OnlineEchelon::<i128>::new(lead_cols);
        for i in 0..n_rows {
            let row = row_fn(i);
            debug_assert_eq!(row.len(), total_cols);
            let row: Option<Vec<i128>> = row.iter().map(|x| i128::try_from(x).ok()).collect();
            ech.insert(row?)?;
        }
        Some(ech)
    })();
    match small_attempt {
        Some(ech) => OnlineResult {
            rank: ech.rank(),
            pivots: ech.rows_by_lead.keys().copied().collect(),
            rows: if want_rows {
                ech.rows_by_lead
                    .values()
                    .map(|r| r.iter().map(Entry::to_big).collect())
                    .collect()
            } else {
                Vec::new()
            },
            kernels: ech
                .kernel_suffixes
                .iter()
                .map(|r| r.iter().map(Entry::to_big).collect())
                .collect(),
        },
        None => {
            let mut ech = OnlineEchelon::<BigInt>::new(lead_cols);
            for i in 0..n_rows {
                ech.insert(row_fn(i)).expect("BigInt cannot overflow");
            }
            OnlineResult {
                rank: ech.rank(),
                pivots: ech.rows_by_lead.keys().copied().collect(),
                rows: if want_rows {
                    ech.rows_by_lead.into_values().collect()
                } else {
                    Vec::new()
                },
                kernels: ech.kernel_suffixes,
            }
        }
    }
}

/// Rank of integer rows (each of length `cols`).
pub(crate) fn int_rank(rows: &[Vec<BigInt>], cols: usize) -> usize {
    match echelonize(rows, cols, false) {
        Echelon::Small(e) => e.pivots.len(),
        Echelon::Big(e) => e.pivots.len(),
    }
}

/// Kernel basis of the matrix with the given integer rows, as primitive
/// integer vectors with positive leading entry.
pub(crate) fn int_kernel(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    match echelonize(rows, cols, true) {
        Echelon::Small(e) => kernel_from_reduced(&e, cols),
        Echelon::Big(e) => kernel_from_reduced(&e, cols),
    }
}
