//! Sparse exact linear algebra over ℚ.
//!
//! Matrices act on column vectors: an `r × c` matrix maps `ℚ^c → ℚ^r`.
//! Two independent rank routes are provided: fraction-free (Bareiss)
//! elimination over the integers, and pivoted rational elimination with a
//! deterministic pivot rule (fewest nonzeros first, then lowest index).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number; always normalized (positive denominator, reduced).
pub type Rational = BigRational;

pub fn rat(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn rat_frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Sparse matrix with exact rational entries; zero entries are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, Rational>>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![BTreeMap::new(); rows] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Result<Self> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        let dense: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect();
        Self::from_dense(&dense)
    }

    /// Builds a matrix from columns given as dense vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch(format!("column {j} has length {}, expected {rows}", col.len())));
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.data[row].get(&col).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        assert!(row < self.rows && col < self.cols, "index ({row},{col}) out of range");
        if value.is_zero() {
            self.data[row].remove(&col);
        } else {
            self.data[row].insert(col, value);
        }
    }

    /// Adds `value` to the entry at `(row, col)`.
    pub fn add_to(&mut self, row: usize, col: usize, value: &Rational) {
        let current = self.get(row, col);
        self.set(row, col, current + value);
    }

    pub fn row_entries(&self, row: usize) -> impl Iterator<Item = (usize, &Rational)> {
        self.data[row].iter().map(|(c, v)| (*c, v))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn column(&self, col: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, col)).collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c)).collect()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (r, c, v) in self.entries() {
            t.data[c].insert(r, v.clone());
        }
        t
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &RationalMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, a) in &self.data[r] {
                for (c, b) in &other.data[*k] {
                    *acc.entry(*c).or_insert_with(Rational::zero) += a * b;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.data[r] = acc;
        }
        Ok(out)
    }

    /// `self · v` for a dense column vector.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok(self
            .data
            .iter()
            .map(|row| row.iter().fold(Rational::zero(), |acc, (c, x)| acc + x * &v[*c]))
            .collect())
    }

    /// Permutes rows and columns: entry `(r, c)` moves to `(row_perm[r], col_perm[c])`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        for (r, c, v) in self.entries() {
            out.data[row_perm[r]].insert(col_perm[c], v.clone());
        }
        out
    }

    fn is_integral_small(&self) -> bool {
        self.entries().all(|(_, _, v)| v.is_integer() && v.numer().to_i64().is_some())
    }

    /// Rank over ℚ. Integer matrices go through fraction-free elimination, others
    /// through pivoted rational elimination.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 || self.is_zero() {
            return 0;
        }
        if self.is_integral_small() {
            self.rank_bareiss()
        } else {
            self.rank_pivoted()
        }
    }

    /// Rank by fraction-free Bareiss elimination on the denominator-cleared matrix.
    pub fn rank_bareiss(&self) -> usize {
        if self.rows == 0 || self.cols == 0 || self.is_zero() {
            return 0;
        }
        // narrow to the nonzero rows/columns first
        let used_cols: Vec<usize> = {
            let mut seen: Vec<usize> = self.entries().map(|(_, c, _)| c).collect();
            seen.sort_unstable();
            seen.dedup();
            seen
        };
        let col_index: BTreeMap<usize, usize> = used_cols.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let rows: Vec<&BTreeMap<usize, Rational>> = self.data.iter().filter(|r| !r.is_empty()).collect();
        let scaled: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| {
                let lcm = row.values().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                let mut dense = vec![BigInt::zero(); used_cols.len()];
                for (c, v) in row.iter() {
                    dense[col_index[c]] = (v * Rational::from_integer(lcm.clone())).to_integer();
                }
                dense
            })
            .collect();
        if let Some(small) = to_i128(&scaled) {
            if let Some(rank) = bareiss_rank_i128(small) {
                return rank;
            }
        }
        bareiss_rank_bigint(scaled)
    }

    /// Rank by sparse pivoted elimination over ℚ.
    pub fn rank_pivoted(&self) -> usize {
        Echelon::compute(self).pivots.len()
    }

    /// Basis of the null space, one vector per free column (deterministic).
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        Echelon::compute(self).kernel_basis(self.cols)
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }
}

fn to_i128(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    rows.iter().map(|r| r.iter().map(|v| v.to_i64().map(|x| x as i128)).collect()).collect()
}

fn bareiss_rank_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let nrows = a.len();
    let ncols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, p);
        let pivot = a[rank][c];
        for i in rank + 1..nrows {
            let lead = a[i][c];
            for j in c + 1..ncols {
                let lhs = a[i][j].checked_mul(pivot)?;
                let rhs = lead.checked_mul(a[rank][j])?;
                a[i][j] = lhs.checked_sub(rhs)? / prev;
            }
            a[i][c] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_rank_bigint(mut a: Vec<Vec<BigInt>>) -> usize {
    let nrows = a.len();
    let ncols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for i in rank + 1..nrows {
            let lead = a[i][c].clone();
            for j in c + 1..ncols {
                let value = (&a[i][j] * &pivot - &lead * &a[rank][j]) / &prev;
                a[i][j] = value;
            }
            a[i][c] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Reduced row echelon form computed with the deterministic pivot rule.
struct Echelon {
    /// (pivot column, normalized row) pairs, sorted by pivot column.
    pivots: Vec<(usize, BTreeMap<usize, Rational>)>,
}

impl Echelon {
    fn compute(m: &RationalMatrix) -> Self {
        let mut remaining: Vec<BTreeMap<usize, Rational>> =
            m.data.iter().filter(|r| !r.is_empty()).cloned().collect();
        let mut done: Vec<(usize, BTreeMap<usize, Rational>)> = Vec::new();
        while !remaining.is_empty() {
            // fewest nonzeros, then lowest index
            let (idx, _) = remaining
                .iter()
                .enumerate()
                .min_by_key(|(i, r)| (r.len(), *i))
                .expect("nonempty");
            let mut row = remaining.remove(idx);
            let (&col, lead) = row.iter().next().expect("rows kept nonzero");
            let inv = lead.recip();
            for v in row.values_mut() {
                *v *= &inv;
            }
            for other in remaining.iter_mut().chain(done.iter_mut().map(|(_, r)| r)) {
                if let Some(factor) = other.get(&col).cloned() {
                    axpy(other, &row, &factor);
                }
            }
            remaining.retain(|r| !r.is_empty());
            done.push((col, row));
        }
        done.sort_by_key(|(c, _)| *c);
        Echelon { pivots: done }
    }

    fn kernel_basis(&self, cols: usize) -> Vec<Vec<Rational>> {
        let pivot_cols: BTreeMap<usize, usize> = self.pivots.iter().enumerate().map(|(i, (c, _))| (*c, i)).collect();
        (0..cols)
            .filter(|c| !pivot_cols.contains_key(c))
            .map(|free| {
                let mut v = vec![Rational::zero(); cols];
                v[free] = Rational::one();
                for (pc, row) in &self.pivots {
                    if let Some(x) = row.get(&free) {
                        v[*pc] = -x.clone();
                    }
                }
                v
            })
            .collect()
    }
}

/// `target -= factor * source` on sparse rows, dropping zeros.
fn axpy(target: &mut BTreeMap<usize, Rational>, source: &BTreeMap<usize, Rational>, factor: &Rational) {
    for (c, v) in source {
        let delta = factor * v;
        match target.get_mut(c) {
            Some(t) => {
                *t -= delta;
                if t.is_zero() {
                    target.remove(c);
                }
            }
            None => {
                target.insert(*c, -delta);
            }
        }
    }
}

/// Incrementally maintained echelon basis of a subspace, tracking how each
/// echelon vector is written in terms of the inserted generators.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    dim: usize,
    rows: Vec<(usize, Vec<Rational>, Vec<Rational>)>,
    generators: usize,
}

impl SpanBasis {
    pub fn new(dim: usize) -> Self {
        SpanBasis { dim, rows: Vec::new(), generators: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of generators accepted so far.
    pub fn generators(&self) -> usize {
        self.generators
    }

    /// Reduces `v` against the basis; returns the residue and the combination
    /// of accepted generators that was subtracted.
    fn reduce(&self, v: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut residue = v.to_vec();
        let mut combo = vec![Rational::zero(); self.generators];
        for (pivot, row, row_combo) in &self.rows {
            if residue[*pivot].is_zero() {
                continue;
            }
            let factor = residue[*pivot].clone();
            for (r, x) in residue.iter_mut().zip(row) {
                if !x.is_zero() {
                    *r -= &factor * x;
                }
            }
            for (c, x) in combo.iter_mut().zip(row_combo) {
                if !x.is_zero() {
                    *c += &factor * x;
                }
            }
        }
        (residue, combo)
    }

    /// Adds `v` if it is independent of the current span. Returns whether it was added.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.dim);
        let (residue, combo) = self.reduce(v);
        let Some(pivot) = residue.iter().position(|x| !x.is_zero()) else { return false };
        let inv = residue[pivot].recip();
        let row: Vec<Rational> = residue.iter().map(|x| x * &inv).collect();
        // row = (v - Σ combo_k g_k) / lead
        let idx = self.generators;
        self.generators += 1;
        for (_, _, c) in &mut self.rows {
            c.push(Rational::zero());
        }
        let mut row_combo: Vec<Rational> = combo.iter().map(|c| -(c * &inv)).collect();
        row_combo.push(inv.clone());
        debug_assert_eq!(row_combo.len(), idx + 1);
        // keep existing rows reduced at the new pivot
        for (_, other, other_combo) in &mut self.rows {
            if other[pivot].is_zero() {
                continue;
            }
            let factor = other[pivot].clone();
            for (o, x) in other.iter_mut().zip(&row) {
                if !x.is_zero() {
                    *o -= &factor * x;
                }
            }
            for (o, x) in other_combo.iter_mut().zip(&row_combo) {
                if !x.is_zero() {
                    *o -= &factor * x;
                }
            }
        }
        self.rows.push((pivot, row, row_combo));
        true
    }

    /// Coordinates of `v` in terms of the accepted generators, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let (residue, combo) = self.reduce(v);
        if residue.iter().all(|x| x.is_zero()) {
            Some(combo)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }
}

/// Homology of `C_{i+1} --d_in--> C_i --d_out--> C_{i-1}` at `C_i`.
#[derive(Clone, Debug)]
pub struct Homology {
    pub dimension: usize,
    /// Cycles whose classes form a basis of homology.
    pub basis: Vec<Vec<Rational>>,
    /// Span of boundaries followed by `basis`, for re-expressing cycles.
    span: SpanBasis,
    boundary_rank: usize,
}

impl Homology {
    /// Coordinates of the class of `cycle` in the representative basis.
    pub fn class_of(&self, cycle: &[Rational]) -> Result<Vec<Rational>> {
        let coords = self
            .span
            .coordinates(cycle)
            .ok_or_else(|| Error::Internal("vector is not a cycle of this complex".into()))?;
        Ok(coords[self.boundary_rank..].to_vec())
    }

    pub fn boundary_rank(&self) -> usize {
        self.boundary_rank
    }
}

/// Dimension of homology only: `dim ker(d_out) - rank(d_in)`, with the composite checked.
pub fn homology_dim(d_in: &RationalMatrix, d_out: &RationalMatrix) -> Result<usize> {
    check_composable(d_in, d_out)?;
    let kernel = d_out.cols() - d_out.rank();
    let image = d_in.rank();
    Ok(kernel - image)
}

/// Homology with a deterministic representative basis.
pub fn homology(d_in: &RationalMatrix, d_out: &RationalMatrix) -> Result<Homology> {
    check_composable(d_in, d_out)?;
    let mut seeded = SpanBasis::new(d_in.rows());
    for c in 0..d_in.cols() {
        seeded.insert(&d_in.column(c));
    }
    let boundary_rank = seeded.rank();
    let mut basis = Vec::new();
    for z in d_out.kernel_basis() {
        if seeded.insert(&z) {
            basis.push(z);
        }
    }
    Ok(Homology { dimension: basis.len(), basis, span: seeded, boundary_rank })
}

fn check_composable(d_in: &RationalMatrix, d_out: &RationalMatrix) -> Result<()> {
    if d_out.cols() != d_in.rows() {
        return Err(Error::DimensionMismatch(format!(
            "outgoing map has {} columns but incoming map has {} rows",
            d_out.cols(),
            d_in.rows()
        )));
    }
    let composite = d_out.mul(d_in)?;
    if let Some((_, col, _)) = composite.entries().min_by_key(|(_, c, _)| *c) {
        return Err(Error::NonzeroComposite { column: col });
    }
    Ok(())
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_zero())
}
