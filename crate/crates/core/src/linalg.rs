//! Exact rational linear algebra.
//!
//! Everything here works over `BigRational`. Elimination is carried out on
//! integer rows: each row has its denominators cleared and is kept primitive
//! (content 1, positive leading entry) after every combination, which keeps
//! intermediate swell in check without any division in the inner loop.
//! Rows are stored sparsely while reducing because the slices produced by the
//! Koszul and De Rham builders are overwhelmingly zero.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from row vectors. `cols` is needed for the empty case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            entries,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect();
        Self::from_rows(cols, data).expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
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

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn add_to(&mut self, r: usize, c: usize, value: &Rational) {
        let e = &mut self.entries[r * self.cols + c];
        *e += value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * s).collect(),
        }
    }

    /// Square matrix power; `pow(0)` is the identity.
    pub fn pow(&self, e: usize) -> Matrix {
        assert_eq!(self.rows, self.cols, "pow of a non-square matrix");
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self).expect("square");
        }
        acc
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Sparse primitive integer row used inside elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
struct IntRow {
    entries: Vec<(usize, BigInt)>,
}

impl IntRow {
    fn from_rational(v: &[Rational]) -> Self {
        let den = v
            .iter()
            .filter(|x| !x.is_zero())
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let entries = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.numer() * (&den / x.denom())))
            .collect();
        let mut row = IntRow { entries };
        row.make_primitive();
        row
    }

    fn lead(&self) -> Option<usize> {
        self.entries.first().map(|(c, _)| *c)
    }

    fn get(&self, col: usize) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&col, |(c, _)| *c)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn make_primitive(&mut self) {
        let Some(first) = self.entries.first() else {
            return;
        };
        let mut g = first.1.abs();
        for (_, x) in &self.entries[1..] {
            if g.is_one() {
                break;
            }
            g = g.gcd(x);
        }
        let negate = first.1.is_negative();
        if !g.is_one() {
            for (_, x) in &mut self.entries {
                *x = &*x / &g;
            }
        }
        if negate {
            for (_, x) in &mut self.entries {
                *x = -&*x;
            }
        }
    }

    /// `self <- a*self - b*pivot` where the combination cancels column `col`.
    fn eliminate(&mut self, pivot: &IntRow, col: usize) {
        let Some(s) = self.get(col).cloned() else {
            return;
        };
        let p = pivot.get(col).expect("pivot entry").clone();
        let g = s.gcd(&p);
        let a = &p / &g;
        let b = &s / &g;
        let mut out = Vec::with_capacity(self.entries.len() + pivot.entries.len());
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.entries, &pivot.entries);
        while i < x.len() || j < y.len() {
            let cx = x.get(i).map(|e| e.0);
            let cy = y.get(j).map(|e| e.0);
            match (cx, cy) {
                (Some(ci), Some(cj)) if ci == cj => {
                    let v = &a * &x[i].1 - &b * &y[j].1;
                    if !v.is_zero() {
                        out.push((ci, v));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(ci), Some(cj)) if ci < cj => {
                    out.push((ci, &a * &x[i].1));
                    i += 1;
                }
                (Some(ci), None) => {
                    out.push((ci, &a * &x[i].1));
                    i += 1;
                }
                (_, Some(cj)) => {
                    out.push((cj, -(&b * &y[j].1)));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        self.entries = out;
        self.make_primitive();
    }

    fn to_rational(&self, dim: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); dim];
        for (c, x) in &self.entries {
            v[*c] = Rational::from_integer(x.clone());
        }
        v
    }
}

/// Incrementally maintained row space in echelon form (distinct leading
/// columns). Supports membership, rank, and reduced echelon extraction.
#[derive(Clone, Debug)]
pub struct RowSpace {
    dim: usize,
    rows: BTreeMap<usize, IntRow>,
}

impl RowSpace {
    pub fn new(dim: usize) -> Self {
        RowSpace {
            dim,
            rows: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn check(&self, v: &[Rational]) -> Result<(), LinalgError> {
        if v.len() != self.dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    fn reduce(&self, mut row: IntRow) -> IntRow {
        let mut from = 0;
        loop {
            // first column >= from carrying both an entry and a pivot
            let next = row
                .entries
                .iter()
                .map(|(c, _)| *c)
                .filter(|c| *c >= from)
                .find(|c| self.rows.contains_key(c));
            match next {
                Some(c) => {
                    row.eliminate(&self.rows[&c], c);
                    from = c + 1;
                }
                None => return row,
            }
        }
    }

    /// Adds `v` to the space; returns whether it was independent.
    pub fn insert(&mut self, v: &[Rational]) -> Result<bool, LinalgError> {
        self.check(v)?;
        let row = self.reduce(IntRow::from_rational(v));
        match row.lead() {
            Some(l) => {
                self.rows.insert(l, row);
                Ok(true)
            }
            None => Ok(false),
        }
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool, LinalgError> {
        self.check(v)?;
        Ok(self.reduce(IntRow::from_rational(v)).is_zero())
    }

    /// Leading columns of the echelon basis, ascending.
    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    /// Echelon basis vectors (primitive integer entries), ordered by pivot.
    pub fn basis(&self) -> Vec<Vec<Rational>> {
        self.rows.values().map(|r| r.to_rational(self.dim)).collect()
    }

    /// Reduced row echelon form: rows sorted by pivot column, pivot entry 1,
    /// zero in every other pivot column.
    pub fn reduced(&self) -> Vec<(usize, Vec<Rational>)> {
        let mut rows: Vec<(usize, IntRow)> =
            self.rows.iter().map(|(c, r)| (*c, r.clone())).collect();
        for k in (0..rows.len()).rev() {
            let (col, pivot) = (rows[k].0, rows[k].1.clone());
            for (_, other) in rows.iter_mut().take(k) {
                other.eliminate(&pivot, col);
            }
        }
        rows.into_iter()
            .map(|(c, r)| {
                let lead = Rational::from_integer(r.get(c).expect("pivot").clone());
                let v = r.to_rational(self.dim).into_iter().map(|x| x / &lead).collect();
                (c, v)
            })
            .collect()
    }
}

fn row_space_of(m: &Matrix) -> RowSpace {
    let mut space = RowSpace::new(m.cols());
    for r in 0..m.rows() {
        space.insert(m.row(r)).expect("row length matches");
    }
    space
}

/// Rank over the rationals.
pub fn rank(m: &Matrix) -> usize {
    row_space_of(m).rank()
}

/// Rank of the span of a list of vectors of common length `dim`.
pub fn span_rank(dim: usize, vectors: &[Vec<Rational>]) -> Result<usize, LinalgError> {
    let mut space = RowSpace::new(dim);
    for v in vectors {
        space.insert(v)?;
    }
    Ok(space.rank())
}

/// Basis of the right kernel `{v : m v = 0}`.
///
/// One vector per free column (ascending); each has integer entries with
/// gcd 1 and a positive first nonzero entry.
pub fn nullspace_basis(m: &Matrix) -> Vec<Vec<Rational>> {
    let reduced = row_space_of(m).reduced();
    let pivots: Vec<usize> = reduced.iter().map(|(c, _)| *c).collect();
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols())
        .filter(|c| !is_pivot[*c])
        .map(|free| {
            let mut v = vec![Rational::zero(); m.cols()];
            v[free] = Rational::one();
            for (p, row) in &reduced {
                v[*p] = -row[free].clone();
            }
            primitive_integer(&v)
        })
        .collect()
}

/// Rescales a rational vector to integer entries with gcd 1 and a positive
/// first nonzero entry. The zero vector is returned unchanged.
pub fn primitive_integer(v: &[Rational]) -> Vec<Rational> {
    let row = IntRow::from_rational(v);
    row.to_rational(v.len())
}

/// Solves `v = sum c_i basis_i + sum d_j subspace_j` and returns the
/// coefficients `c` of one solution (free unknowns set to zero), or `None`
/// when `v` is not in `span(basis) + span(subspace)`.
pub fn in_affine(
    v: &[Rational],
    basis: &[Vec<Rational>],
    subspace: &[Vec<Rational>],
) -> Result<Option<Vec<Rational>>, LinalgError> {
    let len = v.len();
    for g in basis.iter().chain(subspace) {
        if g.len() != len {
            return Err(LinalgError::DimensionMismatch {
                expected: len,
                found: g.len(),
            });
        }
    }
    let unknowns = basis.len() + subspace.len();
    let mut space = RowSpace::new(unknowns + 1);
    for i in 0..len {
        let mut row: Vec<Rational> = basis
            .iter()
            .chain(subspace)
            .map(|g| g[i].clone())
            .collect();
        row.push(v[i].clone());
        space.insert(&row)?;
    }
    let reduced = space.reduced();
    if reduced.iter().any(|(c, _)| *c == unknowns) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); basis.len()];
    for (c, row) in &reduced {
        if *c < basis.len() {
            x[*c] = row[unknowns].clone();
        }
    }
    Ok(Some(x))
}

/// `sum coeffs_i * vectors_i`.
pub fn combine(dim: usize, coeffs: &[Rational], vectors: &[Vec<Rational>]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o += c * x;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::identity(2)), 2);
        assert_eq!(rank(&Matrix::zeros(3, 4)), 0);
        assert_eq!(rank(&Matrix::from_i64(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn nullspace_examples() {
        let ns = nullspace_basis(&Matrix::from_i64(&[&[1, 1]]));
        assert_eq!(ns, vec![vec![q(1), q(-1)]]);
        assert!(nullspace_basis(&Matrix::identity(2)).is_empty());

        let m = Matrix::from_i64(&[&[1, 2, 3]]);
        let ns = nullspace_basis(&m);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
        assert_eq!(span_rank(3, &ns).unwrap(), 2);
    }

    #[test]
    fn nullspace_is_primitive() {
        let m = Matrix::from_rows(
            3,
            vec![vec![ratio(1, 2), ratio(1, 3), q(0)], vec![q(0), q(0), q(0)]],
        )
        .unwrap();
        let ns = nullspace_basis(&m);
        // 3a + 2b = 0 -> (2, -3, 0); c free -> (0, 0, 1)
        assert_eq!(ns, vec![vec![q(2), q(-3), q(0)], vec![q(0), q(0), q(1)]]);
    }

    #[test]
    fn in_affine_examples() {
        let zero = vec![q(0), q(0)];
        let got = in_affine(&zero, &[vec![q(1), q(2)]], &[vec![q(3), q(4)]]).unwrap();
        assert_eq!(got, Some(vec![q(0)]));

        let got = in_affine(&[q(2), q(4)], &[], &[vec![q(1), q(2)]]).unwrap();
        assert_eq!(got, Some(vec![]));

        let got = in_affine(&[q(1), q(0)], &[vec![q(1), q(1)]], &[vec![q(0), q(1)]]).unwrap();
        assert_eq!(got, Some(vec![q(1)]));

        let got = in_affine(&[q(1), q(0)], &[], &[vec![q(0), q(1)]]).unwrap();
        assert_eq!(got, None);
    }

    #[test]
    fn in_affine_rejects_ragged() {
        let err = in_affine(&[q(1)], &[vec![q(1), q(2)]], &[]).unwrap_err();
        assert_eq!(
            err,
            LinalgError::DimensionMismatch {
                expected: 1,
                found: 2
            }
        );
    }

    #[test]
    fn reduced_echelon_has_unit_pivots() {
        let m = Matrix::from_i64(&[&[2, 4, 6], &[1, 3, 5], &[3, 7, 11]]);
        let red = row_space_of(&m).reduced();
        assert_eq!(red.len(), 2);
        assert_eq!(red[0], (0, vec![q(1), q(0), q(-1)]));
        assert_eq!(red[1], (1, vec![q(0), q(1), q(2)]));
    }

    #[test]
    fn matrix_product_and_transpose() {
        let a = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), Matrix::from_i64(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), Matrix::from_i64(&[&[1, 3], &[2, 4]]));
        assert_eq!(a.pow(0), Matrix::identity(2));
        assert!(a.mul(&Matrix::zeros(3, 1)).is_err());
    }
}
