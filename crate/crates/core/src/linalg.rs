//! Dense complex matrices.
//!
//! Everything downstream (representation matrices, the braiding matrix,
//! linear systems for cochains) is stored as a [`CMatrix`]. Rank and
//! nullspace use Gaussian elimination with partial pivoting; a pivot is
//! accepted iff its modulus exceeds `tol * max|entry|` of the input, and
//! ties between equally large candidates go to the lowest row so the
//! returned bases are reproducible.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);

/// Row-major dense complex matrix.
#[derive(Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CMatrix { rows, cols, data }
    }

    /// Builds a matrix from row-major data; `data.len()` must equal `rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Shape("non-finite matrix entry".into()));
        }
        Ok(CMatrix { rows, cols, data })
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        Self::from_fn(r, c, |i, j| C64::new(rows[i][j], 0.0))
    }

    /// A single column built from a vector.
    pub fn column(v: &[C64]) -> Self {
        CMatrix {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<C64>]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn col(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn scale(&self, s: C64) -> Self {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Entrywise max-norm of `self - other`; infinite if the shapes differ.
    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        if self.rows != other.rows || self.cols != other.cols {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn matvec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.cols, "matvec: vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                row.iter().zip(v).map(|(a, b)| a * b).sum()
            })
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &CMatrix) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Shape(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)]
            } else {
                other[(i, j - self.cols)]
            }
        }))
    }

    /// Vertical concatenation of blocks sharing a column count.
    pub fn vstack(blocks: &[CMatrix]) -> Result<Self> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::Shape(format!(
                    "vstack of {} and {} columns",
                    cols, b.cols
                )));
            }
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Ok(CMatrix { rows, cols, data })
    }

    /// Inverse of a square matrix, or `None` when singular at `tol`.
    pub fn inverse(&self, tol: f64) -> Option<CMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&CMatrix::identity(n)).ok()?;
        let ech = Echelon::reduce(&aug, tol, n);
        if ech.pivots.len() != n {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| ech.matrix[(i, n + j)]))
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Matrix product; fails on inner-dimension mismatch.
pub fn matmul(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    if a.cols != b.rows {
        return Err(Error::Shape(format!(
            "matmul of {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out = CMatrix::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.data[i * a.cols + k];
            if aik == ZERO {
                continue;
            }
            let brow = &b.data[k * b.cols..(k + 1) * b.cols];
            let orow = &mut out.data[i * b.cols..(i + 1) * b.cols];
            for (o, bk) in orow.iter_mut().zip(brow) {
                *o += aik * bk;
            }
        }
    }
    Ok(out)
}

/// Kronecker product with `(A⊗B)[(i,k),(j,l)] = A[i,j] * B[k,l]`, where the
/// composite row index is `i * rows_B + k` and the column index `j * cols_B + l`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (br, bc) = (b.rows, b.cols);
    CMatrix::from_fn(a.rows * br, a.cols * bc, |r, c| {
        a[(r / br, c / bc)] * b[(r % br, c % bc)]
    })
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        matmul(self, rhs).expect("matrix product shape mismatch")
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix sum shape mismatch"
        );
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix difference shape mismatch"
        );
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Reduced row echelon form restricted to the first `limit` columns.
struct Echelon {
    matrix: CMatrix,
    pivots: Vec<usize>,
}

impl Echelon {
    fn reduce(a: &CMatrix, tol: f64, limit: usize) -> Echelon {
        let mut m = a.clone();
        let threshold = tol * a.max_abs();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..limit.min(m.cols) {
            if row == m.rows {
                break;
            }
            let mut best = row;
            let mut best_abs = m[(row, col)].norm();
            for r in row + 1..m.rows {
                let v = m[(r, col)].norm();
                if v > best_abs {
                    best = r;
                    best_abs = v;
                }
            }
            if best_abs <= threshold || best_abs == 0.0 {
                continue;
            }
            if best != row {
                for c in 0..m.cols {
                    m.data.swap(row * m.cols + c, best * m.cols + c);
                }
            }
            let inv = ONE / m[(row, col)];
            for c in col..m.cols {
                m[(row, c)] *= inv;
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m[(r, col)];
                if factor == ZERO {
                    continue;
                }
                for c in col..m.cols {
                    let v = m[(row, c)];
                    m[(r, c)] -= factor * v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { matrix: m, pivots }
    }
}

pub fn rank(a: &CMatrix, tol: f64) -> usize {
    Echelon::reduce(a, tol, a.cols).pivots.len()
}

/// Basis of `{v : A v = 0}`, one vector per free column of the echelon form.
pub fn nullspace(a: &CMatrix, tol: f64) -> Vec<Vec<C64>> {
    let ech = Echelon::reduce(a, tol, a.cols);
    let mut is_pivot = vec![None; a.cols];
    for (r, &c) in ech.pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    (0..a.cols)
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut v = vec![ZERO; a.cols];
            v[free] = ONE;
            for (r, &pc) in ech.pivots.iter().enumerate() {
                v[pc] = -ech.matrix[(r, free)];
            }
            v
        })
        .collect()
}

/// True iff the column spans of `u` and `v` coincide at tolerance `tol`.
pub fn same_column_space(u: &CMatrix, v: &CMatrix, tol: f64) -> Result<bool> {
    let joint = u.hstack(v)?;
    let ru = rank(u, tol);
    let rv = rank(v, tol);
    Ok(ru == rv && rank(&joint, tol) == ru)
}

/// Dimension of `{M : M X = X M for every X in mats}` for square `d x d` inputs.
pub fn commutant_dimension(mats: &[CMatrix], tol: f64) -> usize {
    let Some(first) = mats.first() else {
        return 0;
    };
    let d = first.rows;
    let unknowns = d * d;
    let mut blocks = Vec::with_capacity(mats.len());
    for x in mats {
        // row (p,q) of M X - X M, column (r,s) for the unknown M[r,s]
        let mut block = CMatrix::zeros(unknowns, unknowns);
        for p in 0..d {
            for q in 0..d {
                let row = p * d + q;
                for r in 0..d {
                    block[(row, p * d + r)] += x[(r, q)];
                    block[(row, r * d + q)] -= x[(p, r)];
                }
            }
        }
        blocks.push(block);
    }
    let system = CMatrix::vstack(&blocks).expect("commutant blocks share a width");
    nullspace(&system, tol).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(rows: &[&[f64]]) -> CMatrix {
        CMatrix::from_real_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn identity_is_neutral() {
        let a = CMatrix::from_fn(2, 3, |i, j| C64::new(i as f64, j as f64));
        assert_eq!(matmul(&CMatrix::identity(2), &a).unwrap(), a);
    }

    #[test]
    fn flip_squares_to_identity() {
        let x = real(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert_eq!(&x * &x, CMatrix::identity(2));
    }

    #[test]
    fn matmul_rejects_bad_shapes() {
        assert!(matmul(&CMatrix::zeros(2, 3), &CMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn kron_of_identities_and_scalars() {
        assert_eq!(
            kron(&CMatrix::identity(2), &CMatrix::identity(3)),
            CMatrix::identity(6)
        );
        let b = CMatrix::from_fn(2, 2, |i, j| C64::new((i + 2 * j) as f64, 1.0));
        let two = CMatrix::from_fn(1, 1, |_, _| C64::new(2.0, 0.0));
        assert_eq!(kron(&two, &b), b.scale(C64::new(2.0, 0.0)));
    }

    #[test]
    fn kron_index_convention() {
        let a = CMatrix::from_fn(2, 2, |i, j| C64::new((10 * i + j) as f64, 0.0));
        let b = CMatrix::from_fn(2, 2, |k, l| C64::new(1.0, (10 * k + l) as f64));
        let m = kron(&a, &b);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        assert_eq!(m[(i * 2 + k, j * 2 + l)], a[(i, j)] * b[(k, l)]);
                    }
                }
            }
        }
    }

    #[test]
    fn rank_and_nullspace_examples() {
        let z = CMatrix::zeros(3, 3);
        assert_eq!(rank(&z, 1e-9), 0);
        assert_eq!(nullspace(&z, 1e-9).len(), 3);

        let id = CMatrix::identity(4);
        assert_eq!(rank(&id, 1e-9), 4);
        assert!(nullspace(&id, 1e-9).is_empty());

        let ones = real(&[&[1.0, 1.0], &[1.0, 1.0]]);
        assert_eq!(rank(&ones, 1e-9), 1);
        let ns = nullspace(&ones, 1e-9);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![C64::new(-1.0, 0.0), ONE]);
    }

    #[test]
    fn column_space_examples() {
        let e0 = real(&[&[1.0], &[0.0]]);
        let e1 = real(&[&[0.0], &[1.0]]);
        assert!(!same_column_space(&e0, &e1, 1e-9).unwrap());
        let d1 = real(&[&[1.0], &[1.0]]);
        let d2 = real(&[&[2.0], &[2.0]]);
        assert!(same_column_space(&d1, &d2, 1e-9).unwrap());
        let u = real(&[&[1.0, 0.0], &[2.0, 1.0], &[0.0, 3.0]]);
        let p = real(&[&[2.0, 1.0], &[1.0, 1.0]]);
        assert!(same_column_space(&u, &(&u * &p), 1e-9).unwrap());
        assert!(same_column_space(&CMatrix::zeros(3, 0), &CMatrix::zeros(3, 0), 1e-9).unwrap());
        assert!(same_column_space(&e0, &CMatrix::zeros(3, 1), 1e-9).is_err());
    }

    #[test]
    fn commutant_of_scalars_is_everything() {
        assert_eq!(commutant_dimension(&[CMatrix::identity(2)], 1e-9), 4);
        let x = real(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let z = real(&[&[1.0, 0.0], &[0.0, -1.0]]);
        assert_eq!(commutant_dimension(&[x, z], 1e-9), 1);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = real(&[&[1.0, 1.0, -1.0], &[1.0, -1.0, 1.0], &[1.0, -1.0, -1.0]]);
        let inv = a.inverse(1e-12).unwrap();
        assert!((&a * &inv).max_abs_diff(&CMatrix::identity(3)) < 1e-14);
        assert!(real(&[&[1.0, 2.0], &[2.0, 4.0]]).inverse(1e-12).is_none());
    }
}
