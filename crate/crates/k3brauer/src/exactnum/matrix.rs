//! Integer matrices with the normal forms needed for lattice arithmetic:
//! Smith normal form with unimodular transforms, a canonical Hermite form
//! for sublattice bases, kernels and exact determinants.

use super::{rounded_div, Int, NumError};
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

/// Result of `IntMatrix::smith_normal_form`: `u * m * v = d` with `u`, `v`
/// unimodular and `d` diagonal, entries nonnegative with `d1 | d2 | ...`.
pub struct SmithNormalForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Int>) -> Result<Self, NumError> {
        if data.len() != rows * cols {
            return Err(NumError::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Int::from(1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Int>]) -> Result<Self, NumError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(NumError::Dimension("ragged rows".into()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().cloned().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let r: Vec<Vec<Int>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| Int::from(x)).collect())
            .collect();
        IntMatrix::from_rows(&r).expect("literal rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, NumError> {
        if self.cols != rhs.rows {
            return Err(NumError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * rhs.at(k, j);
                    *out.at_mut(i, j) += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    /// Block-diagonal assembly.
    pub fn block_diag(blocks: &[&IntMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = IntMatrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    *out.at_mut(r0 + i, c0 + j) = b.at(i, j).clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// `v^T * self * w` for column vectors given as slices.
    pub fn pair(&self, v: &[Int], w: &[Int]) -> Result<Int, NumError> {
        if v.len() != self.rows || w.len() != self.cols {
            return Err(NumError::Dimension("vector length mismatch".into()));
        }
        let mut acc = Int::zero();
        for i in 0..self.rows {
            if v[i].is_zero() {
                continue;
            }
            for j in 0..self.cols {
                if w[j].is_zero() {
                    continue;
                }
                acc += &v[i] * self.at(i, j) * &w[j];
            }
        }
        Ok(acc)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[it] += q * row[is]
    fn row_addmul(&mut self, it: usize, is: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let add = q * self.at(is, j);
            *self.at_mut(it, j) += add;
        }
    }

    /// col[jt] += q * col[js]
    fn col_addmul(&mut self, jt: usize, js: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let add = q * self.at(i, js);
            *self.at_mut(i, jt) += add;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.at(i, j).clone();
            *self.at_mut(i, j) = v;
        }
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> Result<Int, NumError> {
        if !self.is_square() {
            return Err(NumError::Dimension("determinant of non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Int::from(1));
        }
        let mut a = self.clone();
        let mut sign = 1i64;
        let mut prev = Int::from(1);
        for k in 0..n - 1 {
            if a.at(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.at(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(Int::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                    *a.at_mut(i, j) = num / &prev;
                }
                *a.at_mut(i, k) = Int::zero();
            }
            prev = a.at(k, k).clone();
        }
        Ok(a.at(n - 1, n - 1).clone() * sign)
    }

    /// Smith normal form with transforms. Pivoting always selects the entry
    /// of smallest nonzero absolute value in the remaining block, which keeps
    /// intermediate entries small in practice.
    pub fn smith_normal_form(&self) -> SmithNormalForm {
        let mut a = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut v = IntMatrix::identity(self.cols);
        let steps = self.rows.min(self.cols);

        'outer: for t in 0..steps {
            loop {
                // Smallest-|.|-nonzero pivot in the remaining block.
                let mut pivot: Option<(usize, usize)> = None;
                for i in t..self.rows {
                    for j in t..self.cols {
                        if a.at(i, j).is_zero() {
                            continue;
                        }
                        let better = match pivot {
                            None => true,
                            Some((pi, pj)) => a.at(i, j).abs() < a.at(pi, pj).abs(),
                        };
                        if better {
                            pivot = Some((i, j));
                        }
                    }
                }
                let Some((pi, pj)) = pivot else {
                    break 'outer; // remaining block is zero
                };
                a.swap_rows(t, pi);
                u.swap_rows(t, pi);
                a.swap_cols(t, pj);
                v.swap_cols(t, pj);

                let mut dirty = false;
                for i in t + 1..self.rows {
                    if !a.at(i, t).is_zero() {
                        let q = -rounded_div(a.at(i, t), a.at(t, t));
                        a.row_addmul(i, t, &q);
                        u.row_addmul(i, t, &q);
                        if !a.at(i, t).is_zero() {
                            dirty = true;
                        }
                    }
                }
                for j in t + 1..self.cols {
                    if !a.at(t, j).is_zero() {
                        let q = -rounded_div(a.at(t, j), a.at(t, t));
                        a.col_addmul(j, t, &q);
                        v.col_addmul(j, t, &q);
                        if !a.at(t, j).is_zero() {
                            dirty = true;
                        }
                    }
                }
                if dirty {
                    continue;
                }

                // Enforce the divisibility chain: the pivot must divide every
                // entry of the remaining block.
                let offender = (t + 1..self.rows)
                    .flat_map(|i| (t + 1..self.cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !(a.at(i, j) % a.at(t, t)).is_zero());
                match offender {
                    Some((i, _)) => {
                        a.row_addmul(t, i, &Int::from(1));
                        u.row_addmul(t, i, &Int::from(1));
                    }
                    None => break,
                }
            }
        }

        for t in 0..steps {
            if a.at(t, t).is_negative() {
                a.negate_row(t);
                u.negate_row(t);
            }
        }

        debug_assert!({
            let lhs = u.mul(self).unwrap().mul(&v).unwrap();
            lhs == a
        });
        SmithNormalForm { u, d: a, v }
    }

    /// Rank over ℚ (number of nonzero Smith invariants).
    pub fn rank(&self) -> usize {
        let snf = self.smith_normal_form();
        (0..self.rows.min(self.cols))
            .filter(|&i| !snf.d.at(i, i).is_zero())
            .count()
    }

    /// Basis of the integer kernel `{x : self * x = 0}`, returned as the
    /// columns of an n x k matrix in canonical Hermite form.
    pub fn kernel_basis(&self) -> IntMatrix {
        let snf = self.smith_normal_form();
        let n = self.cols;
        let m = self.rows.min(n);
        let kernel_cols: Vec<usize> = (0..n)
            .filter(|&j| j >= m || snf.d.at(j, j).is_zero())
            .collect();
        let mut b = IntMatrix::zeros(n, kernel_cols.len());
        for (k, &j) in kernel_cols.iter().enumerate() {
            for i in 0..n {
                *b.at_mut(i, k) = snf.v.at(i, j).clone();
            }
        }
        hnf_basis_columns(&b)
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Row Hermite normal form: pivots positive, entries above each pivot reduced
/// into `[0, pivot)`, rows ordered by pivot column. Zero rows are dropped.
fn row_hnf(mut m: IntMatrix) -> IntMatrix {
    let rows = m.rows();
    let cols = m.cols();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        // Euclidean reduction within this column, below pivot_row.
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..rows {
                if m.at(i, col).is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some(b) => m.at(i, col).abs() < m.at(b, col).abs(),
                };
                if better {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            m.swap_rows(pivot_row, b);
            let mut dirty = false;
            for i in pivot_row + 1..rows {
                if !m.at(i, col).is_zero() {
                    let q = -rounded_div(m.at(i, col), m.at(pivot_row, col));
                    m.row_addmul(i, pivot_row, &q);
                    if !m.at(i, col).is_zero() {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        if m.at(pivot_row, col).is_zero() {
            continue;
        }
        if m.at(pivot_row, col).is_negative() {
            m.negate_row(pivot_row);
        }
        // Reduce the entries above the pivot into [0, pivot).
        for i in 0..pivot_row {
            let q = -m.at(i, col).div_floor(m.at(pivot_row, col));
            m.row_addmul(i, pivot_row, &q);
        }
        pivot_row += 1;
    }
    // Drop zero rows (all rows from pivot_row on are zero).
    let kept: Vec<Vec<Int>> = (0..pivot_row).map(|i| m.row(i).to_vec()).collect();
    IntMatrix::from_rows(&kept).expect("rectangular")
}

/// Canonical form for a sublattice basis given as matrix columns.
///
/// The basis is normalized so that each vector's bottom-most nonzero entry is
/// a positive pivot, pivot rows strictly increase across the basis, and
/// entries below earlier pivots are reduced. This is the Hermite normal form
/// taken from the bottom coordinate up; it makes kernel and complement bases
/// deterministic.
pub fn hnf_basis_columns(basis: &IntMatrix) -> IntMatrix {
    let n = basis.rows();
    let k = basis.cols();
    // Rows of m are the basis vectors with coordinates reversed.
    let mut m = IntMatrix::zeros(k, n);
    for c in 0..k {
        for r in 0..n {
            *m.at_mut(c, r) = basis.at(n - 1 - r, c).clone();
        }
    }
    let h = row_hnf(m);
    // Un-reverse; reverse the row order so pivot rows ascend in the original
    // coordinates.
    let kk = h.rows();
    let mut out = IntMatrix::zeros(n, kk);
    for c in 0..kk {
        for r in 0..n {
            *out.at_mut(r, c) = h.at(kk - 1 - c, n - 1 - r).clone();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::int;
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    fn assert_unimodular(a: &IntMatrix) {
        let d = a.det().unwrap();
        assert!(d == int(1) || d == int(-1), "det = {d}");
    }

    fn check_snf(mat: &IntMatrix) -> IntMatrix {
        let snf = mat.smith_normal_form();
        assert_unimodular(&snf.u);
        assert_unimodular(&snf.v);
        let lhs = snf.u.mul(mat).unwrap().mul(&snf.v).unwrap();
        assert_eq!(lhs, snf.d);
        let steps = mat.rows().min(mat.cols());
        for t in 0..steps {
            assert!(!snf.d.at(t, t).is_negative());
            if t + 1 < steps && !snf.d.at(t, t).is_zero() {
                assert!(
                    (snf.d.at(t + 1, t + 1) % snf.d.at(t, t)).is_zero(),
                    "chain broken at {t}"
                );
            }
            if snf.d.at(t, t).is_zero() && t + 1 < steps {
                assert!(snf.d.at(t + 1, t + 1).is_zero());
            }
        }
        for i in 0..mat.rows() {
            for j in 0..mat.cols() {
                if i != j {
                    assert!(snf.d.at(i, j).is_zero());
                }
            }
        }
        snf.d
    }

    #[test]
    fn snf_already_diagonal() {
        let d = check_snf(&m(&[&[2, 0], &[0, 2]]));
        assert_eq!(d, m(&[&[2, 0], &[0, 2]]));
    }

    #[test]
    fn snf_hand_reduced() {
        let d = check_snf(&m(&[&[0, 5], &[5, 2]]));
        assert_eq!(d, m(&[&[1, 0], &[0, 25]]));
    }

    #[test]
    fn snf_zero_matrix() {
        let d = check_snf(&m(&[&[0, 0], &[0, 0]]));
        assert_eq!(d, m(&[&[0, 0], &[0, 0]]));
    }

    #[test]
    fn snf_rectangular_and_rank() {
        let a = m(&[&[2, 4, 6], &[4, 8, 12]]);
        check_snf(&a);
        assert_eq!(a.rank(), 1);
        assert_eq!(m(&[&[1, 0], &[0, 1], &[1, 1]]).rank(), 2);
    }

    #[test]
    fn det_matches_snf_product() {
        let a = m(&[&[3, 1, 2], &[0, -4, 7], &[5, 5, 5]]);
        let d = check_snf(&a);
        let prod = d.at(0, 0) * d.at(1, 1) * d.at(2, 2);
        assert_eq!(prod, a.det().unwrap().abs());
    }

    #[test]
    fn kernel_of_congruence_row() {
        // kernel of (1 1 | -2): x1 + x2 even, projected later by caller
        let a = m(&[&[1, 1, -2]]);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 2);
        let prod = a.mul(&k).unwrap();
        assert!(prod.col(0).iter().all(|x| x.is_zero()));
        assert!(prod.col(1).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn hnf_canonical_complement_orientation() {
        // Basis {(1,0,0,0), (0,-2,-2,1)} must come back unchanged: bottom
        // pivots ascending, trailing pivot positive.
        let b = m(&[&[1, 0], &[0, -2], &[0, -2], &[0, 1]]);
        let h = hnf_basis_columns(&b);
        assert_eq!(h, b);
        // Same lattice given with flipped sign and mixed columns normalizes
        // to the same canonical basis.
        let b2 = m(&[&[0, 1], &[2, 0], &[2, 0], &[-1, 0]]);
        assert_eq!(hnf_basis_columns(&b2), b);
    }

    #[test]
    fn bareiss_det() {
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), int(-1));
        assert_eq!(m(&[&[2, 0], &[0, 3]]).det().unwrap(), int(6));
        assert_eq!(
            m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).det().unwrap(),
            int(0)
        );
    }
}
