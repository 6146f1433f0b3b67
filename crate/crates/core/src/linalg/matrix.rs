use std::fmt;

use super::rational::Rational;

/// Sorted `(column, value)` pairs with no explicit zeros.
pub type SparseRow = Vec<(usize, Rational)>;

/// A sparse rational matrix stored row-wise. Dimensions never change after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    nrows: usize,
    ncols: usize,
    data: Vec<SparseRow>,
}

impl Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Matrix { nrows, ncols, data: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::diagonal(&vec![Rational::one(); n])
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let n = diag.len();
        let data =
            diag.iter().enumerate().map(|(i, d)| if d.is_zero() { Vec::new() } else { vec![(i, d.clone())] }).collect();
        Matrix { nrows: n, ncols: n, data }
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated positions are summed.
    pub fn from_triplets<I>(nrows: usize, ncols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); nrows];
        for (i, j, v) in triplets {
            assert!(i < nrows && j < ncols, "triplet ({i}, {j}) outside {nrows}x{ncols}");
            rows[i].push((j, v));
        }
        let data = rows.into_iter().map(normalize_row).collect();
        Matrix { nrows, ncols, data }
    }

    pub fn from_sparse_rows(ncols: usize, rows: Vec<SparseRow>) -> Self {
        let nrows = rows.len();
        let data = rows
            .into_iter()
            .map(|r| {
                assert!(r.iter().all(|(j, _)| *j < ncols));
                normalize_row(r)
            })
            .collect();
        Matrix { nrows, ncols, data }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        Self::from_dense_with_cols(ncols, rows)
    }

    pub fn from_dense_with_cols(ncols: usize, rows: &[Vec<Rational>]) -> Self {
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "ragged dense matrix");
                r.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j, v.clone())).collect()
            })
            .collect();
        Matrix { nrows: rows.len(), ncols, data }
    }

    /// Convenience constructor from integer rows.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Rational>> =
            rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect();
        Matrix::from_dense(&dense)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(nrows: usize, columns: &[Vec<Rational>]) -> Self {
        let triplets = columns.iter().enumerate().flat_map(|(j, col)| {
            assert_eq!(col.len(), nrows);
            col.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(i, v)| (i, j, v.clone()))
        });
        Matrix::from_triplets(nrows, columns.len(), triplets)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        assert!(i < self.nrows && j < self.ncols);
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) => self.data[i][pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    /// Iterates over stored (nonzero) entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data.iter().enumerate().flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut rows: Vec<SparseRow> = vec![Vec::new(); self.ncols];
        for (i, j, v) in self.iter() {
            rows[j].push((i, v.clone()));
        }
        Matrix { nrows: self.ncols, ncols: self.nrows, data: rows }
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.nrows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.ncols]; self.nrows];
        for (i, j, v) in self.iter() {
            out[i][j] = v.clone();
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ncols, "matrix-vector dimension mismatch");
        self.data
            .iter()
            .map(|row| {
                let mut acc = Rational::zero();
                for (j, a) in row {
                    if !v[*j].is_zero() {
                        acc += a * &v[*j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ncols, other.nrows, "matrix product dimension mismatch");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: std::collections::BTreeMap<usize, Rational> = Default::default();
                for (k, a) in row {
                    for (j, b) in &other.data[*k] {
                        *acc.entry(*j).or_insert_with(Rational::zero) += a * b;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Matrix { nrows: self.nrows, ncols: other.ncols, data }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.combine(other, &Rational::one())
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.combine(other, &-Rational::one())
    }

    /// `self + factor * other`.
    pub fn combine(&self, other: &Matrix, factor: &Rational) -> Matrix {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols), "shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| axpy_row(a, factor, b)).collect();
        Matrix { nrows: self.nrows, ncols: self.ncols, data }
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        if s.is_zero() {
            return Matrix::zeros(self.nrows, self.ncols);
        }
        let data = self.data.iter().map(|row| row.iter().map(|(j, v)| (*j, v * s)).collect()).collect();
        Matrix { nrows: self.nrows, ncols: self.ncols, data }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-Rational::one())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Submatrix on the given row and column index lists (in the given order).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut col_pos = vec![usize::MAX; self.ncols];
        for (new, &old) in cols.iter().enumerate() {
            col_pos[old] = new;
        }
        let data = rows
            .iter()
            .map(|&i| {
                let mut r: SparseRow = self.data[i]
                    .iter()
                    .filter(|(j, _)| col_pos[*j] != usize::MAX)
                    .map(|(j, v)| (col_pos[*j], v.clone()))
                    .collect();
                r.sort_by_key(|(j, _)| *j);
                r
            })
            .collect();
        Matrix { nrows: rows.len(), ncols: cols.len(), data }
    }

    /// Places `self` into a larger zero matrix at the given row/column index maps.
    pub fn embed(&self, nrows: usize, ncols: usize, row_map: &[usize], col_map: &[usize]) -> Matrix {
        Matrix::from_triplets(nrows, ncols, self.iter().map(|(i, j, v)| (row_map[i], col_map[j], v.clone())))
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.nrows, other.nrows);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.extend(b.iter().map(|(j, v)| (j + self.ncols, v.clone())));
                r
            })
            .collect();
        Matrix { nrows: self.nrows, ncols: self.ncols + other.ncols, data }
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ncols, other.ncols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { nrows: self.nrows + other.nrows, ncols: self.ncols, data }
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square());
        (0..self.nrows).map(|i| self.get(i, i)).sum()
    }

    pub(crate) fn into_rows(self) -> Vec<SparseRow> {
        self.data
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.nrows, self.ncols)?;
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

fn normalize_row(mut row: Vec<(usize, Rational)>) -> SparseRow {
    row.sort_by_key(|(j, _)| *j);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (j, v) in row {
        match out.last_mut() {
            Some((lj, lv)) if *lj == j => *lv += v,
            _ => out.push((j, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// `a + factor * b` for sorted sparse rows.
pub(crate) fn axpy_row(a: &[(usize, Rational)], factor: &Rational, b: &[(usize, Rational)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut ia, mut ib) = (0, 0);
    while ia < a.len() || ib < b.len() {
        let ca = a.get(ia).map_or(usize::MAX, |e| e.0);
        let cb = b.get(ib).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push(a[ia].clone());
            ia += 1;
        } else if cb < ca {
            let v = factor * &b[ib].1;
            if !v.is_zero() {
                out.push((cb, v));
            }
            ib += 1;
        } else {
            let v = &a[ia].1 + factor * &b[ib].1;
            if !v.is_zero() {
                out.push((ca, v));
            }
            ia += 1;
            ib += 1;
        }
    }
    out
}

/// Dense dot product.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len());
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// `⟨a, b⟩_gram = aᵀ · gram · b`.
pub fn gram_inner(gram: &Matrix, a: &[Rational], b: &[Rational]) -> Rational {
    dot(a, &gram.mul_vec(b))
}

pub fn vec_add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rational], s: &Rational) -> Vec<Rational> {
    a.iter().map(|x| x * s).collect()
}

pub fn is_zero_vec(a: &[Rational]) -> bool {
    a.iter().all(Rational::is_zero)
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}
