//! Exact dense linear algebra over a [`FieldSpec`].
//!
//! Everything here is deterministic: reduced row echelon form picks the first
//! nonzero entry scanning top to bottom as each pivot, kernel bases list free
//! columns in increasing order, and solvers zero all free variables. Matrices
//! are row-major with entries in the element encoding of their field.

use crate::error::{Error, Result};
use crate::field::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zero(spec: &FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { spec: spec.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(spec: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zero(spec, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(spec: &FieldSpec, cols: usize, rows: &[Vec<u64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row of length {} in a {}-column matrix",
                    r.len(),
                    cols
                )));
            }
            if r.iter().any(|&v| v >= spec.q()) {
                return Err(Error::Shape("entry outside the field".into()));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { spec: spec.clone(), rows: rows.len(), cols, data })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        debug_assert!(v < self.spec.q());
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(&self.spec, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.spec, other.spec, "field mismatch in matrix product");
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let f = &self.spec;
        let mut out = Matrix::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, other.get(l, j))));
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply_left(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows);
        let f = &self.spec;
        let mut out = vec![0u64; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for j in 0..self.cols {
                out[j] = f.add(out[j], f.mul(c, self.get(i, j)));
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply_right(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let f = &self.spec;
        (0..self.rows).map(|i| f.dot(self.row(i), v)).collect()
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.spec, other.spec);
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zero(&self.spec, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.spec, other.spec);
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { spec: self.spec.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Submatrix keeping the listed columns, in the listed order.
    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zero(&self.spec, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.get(i, j));
            }
        }
        out
    }

    /// Reduced row echelon form. Returns (R, pivot columns, rank). Pivoting is
    /// first-nonzero top-to-bottom, so the result is canonical for the row
    /// space: two matrices have equal rref iff they span the same space.
    pub fn rref(&self) -> (Matrix, Vec<usize>, usize) {
        let f = self.spec.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let mut sel = None;
            for i in r..m.rows {
                if m.get(i, col) != 0 {
                    sel = Some(i);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            if sel != r {
                for j in 0..m.cols {
                    let (a, b) = (m.get(r, j), m.get(sel, j));
                    m.set(r, j, b);
                    m.set(sel, j, a);
                }
            }
            let inv = f.inv(m.get(r, col)).expect("pivot is nonzero");
            if inv != 1 {
                for j in 0..m.cols {
                    m.set(r, j, f.mul(m.get(r, j), inv));
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let c = m.get(i, col);
                if c == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(c, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, pivots, r)
    }

    pub fn rank(&self) -> usize {
        self.rref().2
    }

    /// Basis of the right kernel {v : M v = 0}, one basis vector per row,
    /// free columns taken in increasing order.
    pub fn kernel_basis(&self) -> Matrix {
        let f = self.spec.clone();
        let (r, pivots, rank) = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (pi, &pc) in pivots.iter().enumerate() {
                v[pc] = Some(pi);
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|c| pivot_of_col[*c].is_none()).collect();
        let mut out = Matrix::zero(&f, free.len(), self.cols);
        for (bi, &fc) in free.iter().enumerate() {
            out.set(bi, fc, 1);
            for (pi, &pc) in pivots.iter().enumerate() {
                out.set(bi, pc, f.neg(r.get(pi, fc)));
            }
        }
        debug_assert_eq!(out.rows + rank, self.cols);
        out
    }

    /// One solution of M x = b with every free variable set to zero, or None
    /// when the system is inconsistent.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows);
        let col =
            Matrix::from_rows(&self.spec, b.len(), &[b.to_vec()]).expect("given vector").transpose();
        let aug = self.hstack(&col);
        let (r, pivots, rank) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u64; self.cols];
        for pi in 0..rank {
            x[pivots[pi]] = r.get(pi, self.cols);
        }
        Some(x)
    }

    /// Row-operations image of a full-row-rank matrix with columns permuted
    /// into systematic form (I_k | P). The permutation moves the minimal set
    /// of columns: position i < k keeps its column whenever it is a pivot, and
    /// each non-pivot position is swapped with the leftmost unused pivot
    /// column from the right block. Returns (Gsys, colperm) where Gsys column
    /// j is original column colperm[j]; colperm is the identity whenever the
    /// first k columns are independent.
    pub fn systematic_form(&self) -> Result<(Matrix, Vec<usize>)> {
        let k = self.rows;
        let (_, pivots, rank) = self.rref();
        if rank < k {
            return Err(Error::RankDeficient);
        }
        let mut perm: Vec<usize> = (0..self.cols).collect();
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut spares = pivots.iter().copied().filter(|&p| p >= k);
        for i in 0..k {
            if !is_pivot[i] {
                let s = spares.next().expect("rank k guarantees enough pivot columns");
                perm.swap(i, s);
            }
        }
        let permuted = self.select_cols(&perm);
        let (gsys, pv, _) = permuted.rref();
        debug_assert_eq!(pv, (0..k).collect::<Vec<_>>());
        Ok((gsys, perm))
    }

    /// Inverse of a square matrix, or None when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(&self.spec, n));
        let (r, pivots, _) = aug.rref();
        // invertible iff every pivot lands in the left block
        if pivots.len() < n || pivots[..n] != (0..n).collect::<Vec<_>>() {
            return None;
        }
        let inv_cols: Vec<usize> = (n..2 * n).collect();
        Some(r.select_cols(&inv_cols))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64, e: usize) -> FieldSpec {
        FieldSpec::with_default_modulus(p, e).unwrap()
    }

    fn random_matrix(spec: &FieldSpec, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
        let rows: Vec<Vec<u64>> =
            (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..spec.q())).collect()).collect();
        Matrix::from_rows(spec, cols, &rows).unwrap()
    }

    #[test]
    fn rref_of_identity_is_identity() {
        let f = gf(7, 1);
        let m = Matrix::identity(&f, 3);
        let (r, pivots, rank) = m.rref();
        assert_eq!(r, m);
        assert_eq!(pivots, vec![0, 1, 2]);
        assert_eq!(rank, 3);
    }

    #[test]
    fn rref_of_zero_matrix() {
        let f = gf(7, 1);
        let m = Matrix::zero(&f, 2, 3);
        let (r, pivots, rank) = m.rref();
        assert!(r.is_zero());
        assert!(pivots.is_empty());
        assert_eq!(rank, 0);
    }

    #[test]
    fn kernel_of_single_row() {
        let f = gf(7, 1);
        let m = Matrix::from_rows(&f, 3, &[vec![1, 2, 3]]).unwrap();
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 2);
        for i in 0..k.rows() {
            assert_eq!(f.dot(m.row(0), k.row(i)), 0);
        }
    }

    #[test]
    fn rank_nullity_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for f in [gf(2, 1), gf(7, 1), gf(2, 4)] {
            for _ in 0..40 {
                let rows = rng.gen_range(1..7);
                let cols = rng.gen_range(1..9);
                let m = random_matrix(&f, rows, cols, &mut rng);
                let k = m.kernel_basis();
                assert_eq!(m.rank() + k.rows(), cols);
                for i in 0..k.rows() {
                    assert!(m.apply_right(k.row(i)).iter().all(|&v| v == 0));
                }
                assert_eq!(k.rank(), k.rows());
            }
        }
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for f in [gf(2, 1), gf(7, 1), gf(2, 4)] {
            for _ in 0..50 {
                let rows = rng.gen_range(1..8);
                let cols = rng.gen_range(1..8);
                let m = random_matrix(&f, rows, cols, &mut rng);
                assert_eq!(m.rank(), m.transpose().rank());
            }
        }
    }

    #[test]
    fn solve_underdetermined_zeroes_free_variables() {
        let f = gf(7, 1);
        let m = Matrix::from_rows(&f, 2, &[vec![1, 1]]).unwrap();
        assert_eq!(m.solve(&[3]).unwrap(), vec![3, 0]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let f = gf(7, 1);
        let m = Matrix::from_rows(&f, 2, &[vec![1, 1], vec![2, 2]]).unwrap();
        assert_eq!(m.solve(&[1, 3]), None);
    }

    #[test]
    fn solve_solutions_verify_on_random_consistent_systems() {
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        for f in [gf(13, 1), gf(2, 4)] {
            for _ in 0..50 {
                let rows = rng.gen_range(1..6);
                let cols = rng.gen_range(1..7);
                let m = random_matrix(&f, rows, cols, &mut rng);
                let x0: Vec<u64> = (0..cols).map(|_| rng.gen_range(0..f.q())).collect();
                let b = m.apply_right(&x0);
                let x = m.solve(&b).expect("consistent by construction");
                assert_eq!(m.apply_right(&x), b);
            }
        }
    }

    #[test]
    fn empty_column_system_is_consistent_only_for_zero() {
        let f = gf(5, 1);
        let m = Matrix::zero(&f, 3, 0);
        assert_eq!(m.solve(&[0, 0, 0]), Some(vec![]));
        assert_eq!(m.solve(&[0, 1, 0]), None);
    }

    #[test]
    fn systematic_form_keeps_identity_when_front_is_independent() {
        let f = gf(7, 1);
        let m = Matrix::from_rows(&f, 4, &[vec![2, 0, 1, 1], vec![0, 3, 2, 5]]).unwrap();
        let (gsys, perm) = m.systematic_form().unwrap();
        assert_eq!(perm, vec![0, 1, 2, 3]);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(gsys.get(i, j), u64::from(i == j));
            }
        }
    }

    #[test]
    fn systematic_form_swaps_minimal_columns() {
        let f = gf(7, 1);
        // column 0 is zero, so position 0 must take the leftmost spare pivot
        let m = Matrix::from_rows(&f, 4, &[vec![0, 1, 0, 2], vec![0, 0, 1, 3]]).unwrap();
        let (gsys, perm) = m.systematic_form().unwrap();
        assert_eq!(perm, vec![2, 1, 0, 3]);
        assert_eq!(gsys.get(0, 0), 1);
        assert_eq!(gsys.get(1, 1), 1);
        assert_eq!(gsys.get(0, 1), 0);
        assert_eq!(gsys.get(1, 0), 0);
    }

    #[test]
    fn systematic_form_preserves_row_space() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let f = gf(2, 4);
        let mut done = 0;
        while done < 20 {
            let m = random_matrix(&f, 3, 6, &mut rng);
            if m.rank() < 3 {
                continue;
            }
            done += 1;
            let (gsys, perm) = m.systematic_form().unwrap();
            // oracle: permuting the original by colperm must give the same
            // canonical rref as the systematic form
            let permuted = m.select_cols(&perm);
            assert_eq!(permuted.rref().0, gsys.rref().0);
            for i in 0..3 {
                for j in 0..3 {
                    assert_eq!(gsys.get(i, j), u64::from(i == j));
                }
            }
        }
    }

    #[test]
    fn systematic_form_rejects_rank_deficient_input() {
        let f = gf(7, 1);
        let m = Matrix::from_rows(&f, 3, &[vec![1, 2, 3], vec![2, 4, 6]]).unwrap();
        assert!(matches!(m.systematic_form(), Err(Error::RankDeficient)));
    }

    #[test]
    fn inverse_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(91);
        let f = gf(13, 1);
        let mut done = 0;
        while done < 20 {
            let m = random_matrix(&f, 4, 4, &mut rng);
            let Some(inv) = m.inverse() else { continue };
            done += 1;
            assert_eq!(m.mul(&inv), Matrix::identity(&f, 4));
            assert_eq!(inv.mul(&m), Matrix::identity(&f, 4));
        }
        let singular = Matrix::from_rows(&f, 2, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn product_shapes_and_identity() {
        let f = gf(7, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let a = random_matrix(&f, 3, 5, &mut rng);
        let i3 = Matrix::identity(&f, 3);
        let i5 = Matrix::identity(&f, 5);
        assert_eq!(i3.mul(&a), a);
        assert_eq!(a.mul(&i5), a);
        let v = vec![1, 2, 3];
        assert_eq!(a.apply_left(&v), i3.mul(&a).apply_left(&v));
    }
}
