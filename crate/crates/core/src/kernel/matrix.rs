//! Dense exact matrices over a [`Field`].

use std::fmt;

use super::{Field, KernelError};
use crate::kernel::poly::ParamPoly;
use crate::kernel::ratfunc::RatFunc;
use crate::kernel::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, KernelError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(KernelError::DimensionMismatch);
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn diagonal(diag: &[F]) -> Self {
        let mut m = ExactMatrix::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn set_column(&mut self, c: usize, v: &[F]) {
        for (r, x) in v.iter().enumerate() {
            self.set(r, c, x.clone());
        }
    }

    pub fn mul(&self, other: &ExactMatrix<F>) -> Result<ExactMatrix<F>, KernelError> {
        if self.cols != other.rows {
            return Err(KernelError::DimensionMismatch);
        }
        let mut out = ExactMatrix::<F>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).fadd(&a.fmul(b));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols.min(r)).all(|c| self.get(r, c).is_zero()))
    }

    /// Inverse of an upper-triangular matrix with nonzero diagonal, by
    /// back-substitution.
    pub fn inverse_upper(&self) -> Result<ExactMatrix<F>, KernelError> {
        if self.rows != self.cols {
            return Err(KernelError::DimensionMismatch);
        }
        if !self.is_upper_triangular() {
            return Err(KernelError::NotTriangular);
        }
        let n = self.rows;
        let mut inv = ExactMatrix::<F>::zeros(n, n);
        for j in 0..n {
            // Solve U x = e_j from the bottom up.
            for i in (0..=j).rev() {
                let mut acc = if i == j { F::one() } else { F::zero() };
                for k in i + 1..=j {
                    acc = acc.fsub(&self.get(i, k).fmul(inv.get(k, j)));
                }
                let d = self.get(i, i).finv().ok_or(KernelError::Singular)?;
                inv.set(i, j, acc.fmul(&d));
            }
        }
        Ok(inv)
    }

    /// Exact eigendecomposition of an upper-triangular matrix with pairwise
    /// distinct diagonal entries.
    ///
    /// Returns the diagonal and a unit upper-triangular `P` whose column `j`
    /// is the eigenvector for the `j`-th diagonal entry, so `P^-1 M P` is
    /// diagonal.
    pub fn eig_triangular(&self) -> Result<(Vec<F>, ExactMatrix<F>), KernelError> {
        if self.rows != self.cols {
            return Err(KernelError::DimensionMismatch);
        }
        if !self.is_upper_triangular() {
            return Err(KernelError::NotTriangular);
        }
        let n = self.rows;
        let diag: Vec<F> = (0..n).map(|i| self.get(i, i).clone()).collect();
        for i in 0..n {
            for j in i + 1..n {
                if diag[i] == diag[j] {
                    return Err(KernelError::DegenerateSpectrum { first: i, second: j });
                }
            }
        }
        let mut p = ExactMatrix::<F>::identity(n);
        for j in 0..n {
            for i in (0..j).rev() {
                let mut acc = F::zero();
                for k in i + 1..=j {
                    acc = acc.fadd(&self.get(i, k).fmul(p.get(k, j)));
                }
                let gap = diag[j].fsub(&diag[i]);
                let inv = gap.finv().expect("distinct diagonal");
                p.set(i, j, acc.fmul(&inv));
            }
        }
        Ok((diag, p))
    }

    /// Solve `A x = b` exactly for square or overdetermined consistent systems.
    pub fn solve(&self, b: &[F]) -> Result<Vec<F>, KernelError> {
        if b.len() != self.rows {
            return Err(KernelError::DimensionMismatch);
        }
        let (rows, cols) = (self.rows, self.cols);
        let mut aug: Vec<Vec<F>> = (0..rows)
            .map(|r| {
                let mut row: Vec<F> = (0..cols).map(|c| self.get(r, c).clone()).collect();
                row.push(b[r].clone());
                row
            })
            .collect();
        let mut pivot_row = 0;
        for col in 0..cols {
            let Some(p) = (pivot_row..rows).find(|&r| !aug[r][col].is_zero()) else {
                return Err(KernelError::Singular);
            };
            aug.swap(pivot_row, p);
            let inv = aug[pivot_row][col].finv().expect("nonzero pivot");
            for entry in aug[pivot_row].iter_mut().skip(col) {
                *entry = entry.fmul(&inv);
            }
            let pivot = aug[pivot_row].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r == pivot_row || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for c in col..=cols {
                    row[c] = row[c].fsub(&factor.fmul(&pivot[c]));
                }
            }
            pivot_row += 1;
        }
        if aug[cols..].iter().any(|row| !row[cols].is_zero()) {
            return Err(KernelError::Inconsistent);
        }
        Ok(aug[..cols].iter().map(|row| row[cols].clone()).collect())
    }
}

/// Solve `A x = b` for a square or overdetermined consistent system with
/// polynomial entries, by fraction-free (Bareiss) elimination. Only the
/// final quotients are reduced.
pub fn solve_polynomial_system(
    a: &[Vec<ParamPoly>],
    b: &[ParamPoly],
) -> Result<Vec<RatFunc>, KernelError> {
    if a.len() != b.len() {
        return Err(KernelError::DimensionMismatch);
    }
    let cols = a.first().map_or(0, Vec::len);
    if a.iter().any(|row| row.len() != cols) {
        return Err(KernelError::DimensionMismatch);
    }
    let mut m: Vec<Vec<ParamPoly>> = a
        .iter()
        .zip(b)
        .map(|(row, r)| {
            let mut row = row.clone();
            row.push(r.clone());
            row
        })
        .collect();
    let rows = m.len();
    let mut prev = ParamPoly::one();
    for k in 0..cols {
        // Prefer the sparsest available pivot.
        let p = (k..rows)
            .filter(|&r| !m[r][k].is_zero())
            .min_by_key(|&r| m[r][k].len())
            .ok_or(KernelError::Singular)?;
        m.swap(k, p);
        let pivot = m[k][k].clone();
        for r in k + 1..rows {
            let f = m[r][k].clone();
            for c in k..=cols {
                let v = &(&pivot * &m[r][c]) - &(&f * &m[k][c]);
                m[r][c] = v.div_exact(&prev).expect("Bareiss step divides");
            }
        }
        prev = pivot;
    }
    if m[cols..].iter().any(|row| !row[cols].is_zero()) {
        return Err(KernelError::Inconsistent);
    }
    if cols == 0 {
        return Ok(Vec::new());
    }
    // det * x_i is a polynomial for every i.
    let det = m[cols - 1][cols - 1].clone();
    let mut y = vec![ParamPoly::zero(); cols];
    for i in (0..cols).rev() {
        let mut acc = &det * &m[i][cols];
        for j in i + 1..cols {
            acc = &acc - &(&m[i][j] * &y[j]);
        }
        y[i] = acc.div_exact(&m[i][i]).expect("Cramer numerator divides");
    }
    y.into_iter().map(|yi| RatFunc::normalize(yi, det.clone())).collect()
}

impl ExactMatrix<Scalar> {
    /// CSV dump: header `# rows=<r> cols=<c> basis=<name>`, then one row per
    /// line with entries as `p/q` strings.
    pub fn to_csv(&self, basis: &str) -> String {
        let mut out = format!("# rows={} cols={} basis={}\n", self.rows, self.cols, basis);
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_pq_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

impl<F: Field> fmt::Debug for ExactMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", line.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix<Scalar> {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|v| Scalar::from_int(*v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn diagonal_input_has_identity_eigenbasis() {
        let d = m(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        let (diag, p) = d.eig_triangular().unwrap();
        assert_eq!(diag, vec![Scalar::from_int(1), Scalar::from_int(2), Scalar::from_int(3)]);
        assert_eq!(p, ExactMatrix::identity(3));
    }

    #[test]
    fn two_by_two_eigenvectors() {
        let a = m(&[&[1, 1], &[0, 2]]);
        let (diag, p) = a.eig_triangular().unwrap();
        assert_eq!(diag, vec![Scalar::from_int(1), Scalar::from_int(2)]);
        assert_eq!(p, m(&[&[1, 1], &[0, 1]]));
    }

    #[test]
    fn repeated_diagonal_is_degenerate() {
        let a = m(&[&[1, 1], &[0, 1]]);
        assert!(matches!(
            a.eig_triangular(),
            Err(KernelError::DegenerateSpectrum { .. })
        ));
        assert!(matches!(
            m(&[&[1, 0], &[1, 2]]).eig_triangular(),
            Err(KernelError::NotTriangular)
        ));
    }

    #[test]
    fn solve_cases() {
        let id = ExactMatrix::<Scalar>::identity(3);
        let b = vec![Scalar::from_int(4), Scalar::ratio(1, 3), Scalar::from_int(-2)];
        assert_eq!(id.solve(&b).unwrap(), b);
        assert_eq!(
            m(&[&[2]]).solve(&[Scalar::one()]).unwrap(),
            vec![Scalar::ratio(1, 2)]
        );
        // x = 1 and x = 2 together
        assert!(matches!(
            m(&[&[1], &[1]]).solve(&[Scalar::one(), Scalar::from_int(2)]),
            Err(KernelError::Inconsistent)
        ));
        assert!(matches!(
            m(&[&[1, 1], &[2, 2]]).solve(&[Scalar::one(), Scalar::from_int(2)]),
            Err(KernelError::Singular)
        ));
        // consistent overdetermined
        let x = m(&[&[1, 0], &[0, 1], &[1, 1]])
            .solve(&[Scalar::from_int(2), Scalar::from_int(3), Scalar::from_int(5)])
            .unwrap();
        assert_eq!(x, vec![Scalar::from_int(2), Scalar::from_int(3)]);
    }

    #[test]
    fn csv_header_and_entries() {
        let a = ExactMatrix::from_rows(vec![vec![Scalar::ratio(1, 2), Scalar::from_int(0)]]).unwrap();
        assert_eq!(a.to_csv("z"), "# rows=1 cols=2 basis=z\n1/2,0/1\n");
    }
}
