//! Exact linear algebra over F_p: dense matrices, reduced row echelon
//! form, kernels, and subspaces represented by canonical RREF bases.

use crate::error::{Error, Result};
use crate::exactalg::PrimeField;

/// Dense row-major matrix over F_p.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FpMat {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FpMat {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(field: PrimeField, rows: Vec<Vec<u64>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch {
                    left: ncols,
                    right: r.len(),
                });
            }
            data.extend(r.iter().map(|&v| field.canon_u(v)));
        }
        Ok(Self {
            field,
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0;
                for (j, &c) in self.row(i).iter().enumerate() {
                    acc = f.add(acc, f.mul(c, v[j]));
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, rhs: &FpMat) -> FpMat {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let f = self.field;
        let mut out = FpMat::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] = f.add(out[(i, j)], f.mul(a, rhs[(k, j)]));
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> FpMat {
        assert_eq!(self.rows, self.cols);
        let mut acc = FpMat::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn transpose(&self) -> FpMat {
        let mut out = FpMat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row >= self.rows {
                break;
            }
            let found = (pivot_row..self.rows).find(|&r| self[(r, col)] != 0);
            let Some(src) = found else { continue };
            self.swap_rows(src, pivot_row);
            let inv = f.inv(self[(pivot_row, col)]).unwrap();
            for j in col..self.cols {
                self[(pivot_row, j)] = f.mul(self[(pivot_row, j)], inv);
            }
            for r in 0..self.rows {
                if r == pivot_row || self[(r, col)] == 0 {
                    continue;
                }
                let factor = self[(r, col)];
                for j in col..self.cols {
                    let sub = f.mul(factor, self[(pivot_row, j)]);
                    self[(r, j)] = f.sub(self[(r, j)], sub);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (FpMat, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {v : A·v = 0}.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (col, slot) in pivot_set.iter().enumerate() {
                if let Some(row) = slot {
                    v[col] = f.neg(r[(*row, free)]);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of A·x = b, if any.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows);
        let f = self.field;
        let mut aug = FpMat::zeros(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, self.cols)] = b[i];
        }
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None; // inconsistent system
        }
        let mut x = vec![0u64; self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug[(row, self.cols)];
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Row space as a subspace of F_p^cols.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_spanning(self.field, self.cols, (0..self.rows).map(|i| self.row(i).to_vec()))
    }

    /// Column space, i.e. the image of the map v ↦ A·v.
    pub fn column_space(&self) -> Subspace {
        self.transpose().row_space()
    }
}

impl std::ops::Index<(usize, usize)> for FpMat {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FpMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        &mut self.data[i * self.cols + j]
    }
}

/// A subspace of F_p^n held as a reduced row echelon basis, so equal
/// subspaces have equal representations and membership tests are exact.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    /// RREF rows, no zero rows.
    rows: Vec<Vec<u64>>,
    /// Pivot column of each row.
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Self {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        let id = FpMat::identity(field, ambient);
        Self::from_spanning(field, ambient, (0..ambient).map(|i| id.row(i).to_vec()))
    }

    pub fn from_spanning<I: IntoIterator<Item = Vec<u64>>>(
        field: PrimeField,
        ambient: usize,
        rows: I,
    ) -> Self {
        let rows: Vec<Vec<u64>> = rows.into_iter().collect();
        for r in &rows {
            assert_eq!(r.len(), ambient, "spanning vector length mismatch");
        }
        let mat = FpMat::from_rows(field, rows).expect("uniform row lengths");
        let (r, pivots) = if mat.nrows() == 0 {
            (FpMat::zeros(field, 0, ambient), Vec::new())
        } else {
            mat.rref()
        };
        let kept: Vec<Vec<u64>> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Self {
            field,
            ambient,
            rows: kept,
            pivots,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots; these coordinates parametrize the
    /// quotient of the ambient space by this subspace.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Remainder of v after eliminating this subspace's pivots. Zero iff
    /// v lies in the subspace.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field;
        let mut out = v.to_vec();
        for (row, &pcol) in self.rows.iter().zip(&self.pivots) {
            let c = out[pcol];
            if c == 0 {
                continue;
            }
            for j in 0..self.ambient {
                out[j] = f.sub(out[j], f.mul(c, row[j]));
            }
        }
        out
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }

    /// Coefficients of v in this basis, if v is a member. Because the basis
    /// is in RREF, the coefficient of each row is just v at its pivot.
    pub fn coords_in_basis(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p]).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_spanning(
            self.field,
            self.ambient,
            self.rows.iter().chain(other.rows.iter()).cloned(),
        )
    }

    /// Intersection via the kernel of the stacked bases: a relation
    /// x·U + y·V = 0 yields the intersection vector x·U.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let k = self.dim();
        let stacked: Vec<Vec<u64>> = self
            .rows
            .iter()
            .chain(other.rows.iter())
            .cloned()
            .collect();
        if stacked.is_empty() {
            return Subspace::zero(self.field, self.ambient);
        }
        let mat = FpMat::from_rows(self.field, stacked).unwrap().transpose();
        let f = self.field;
        let members = mat.kernel().into_iter().map(|w| {
            let mut v = vec![0u64; self.ambient];
            for (i, &coef) in w.iter().take(k).enumerate() {
                for j in 0..self.ambient {
                    v[j] = f.add(v[j], f.mul(coef, self.rows[i][j]));
                }
            }
            v
        });
        Subspace::from_spanning(self.field, self.ambient, members)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// All p^dim members, enumerated over coefficient vectors in base-p
    /// counter order. Starts at zero.
    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        let p = self.field.modulus();
        let k = self.dim();
        let total = (p as u128).checked_pow(k as u32).expect("subspace too large to enumerate");
        let f = self.field;
        (0..total).map(move |idx| {
            let mut rest = idx;
            let mut v = vec![0u64; self.ambient];
            for row in &self.rows {
                let c = (rest % p as u128) as u64;
                rest /= p as u128;
                if c != 0 {
                    for (j, &b) in row.iter().enumerate() {
                        v[j] = f.add(v[j], f.mul(c, b));
                    }
                }
            }
            v
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let m = FpMat::zeros(fp(2), 4, 4);
        let kernel = m.kernel();
        assert_eq!(kernel.len(), 4);
        let space = Subspace::from_spanning(fp(2), 4, kernel);
        assert_eq!(space, Subspace::full(fp(2), 4));
    }

    #[test]
    fn intersection_of_coordinate_planes() {
        let f = fp(3);
        let u = Subspace::from_spanning(f, 3, vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let v = Subspace::from_spanning(f, 3, vec![vec![0, 1, 0], vec![0, 0, 1]]);
        let w = u.intersect(&v);
        assert_eq!(w.dim(), 1);
        assert!(w.contains(&[0, 1, 0]));
    }

    #[test]
    fn rref_is_idempotent() {
        let f = fp(3);
        // Deterministic pseudo-random 8x8 matrix.
        let mut state = 1u64;
        let mut rows = Vec::new();
        for _ in 0..8 {
            let mut row = Vec::new();
            for _ in 0..8 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                row.push(state >> 33);
            }
            rows.push(row);
        }
        let m = FpMat::from_rows(f, rows).unwrap();
        let (r1, _) = m.rref();
        let (r2, _) = r1.rref();
        assert_eq!(r1, r2);
    }

    #[test]
    fn solve_finds_solutions_and_detects_inconsistency() {
        let f = fp(5);
        let m = FpMat::from_rows(f, vec![vec![1, 2], vec![3, 4]]).unwrap();
        let x = m.solve(&[4, 2]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![4, 2]);

        let singular = FpMat::from_rows(f, vec![vec![1, 1], vec![2, 2]]).unwrap();
        assert!(singular.solve(&[1, 3]).is_none());
    }

    #[test]
    fn sum_and_intersection_dimensions_are_dual() {
        // dim(U+V) + dim(U∩V) = dim U + dim V, spot-checked.
        let f = fp(2);
        let u = Subspace::from_spanning(f, 4, vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        let v = Subspace::from_spanning(f, 4, vec![vec![1, 1, 0, 0], vec![0, 0, 1, 0]]);
        assert_eq!(
            u.sum(&v).dim() + u.intersect(&v).dim(),
            u.dim() + v.dim()
        );
    }

    #[test]
    fn reduce_and_membership() {
        let f = fp(5);
        let u = Subspace::from_spanning(f, 3, vec![vec![1, 2, 0], vec![0, 0, 1]]);
        assert!(u.contains(&[2, 4, 3]));
        assert!(!u.contains(&[1, 0, 0]));
        assert_eq!(u.coords_in_basis(&[2, 4, 3]), Some(vec![2, 3]));
    }
}
