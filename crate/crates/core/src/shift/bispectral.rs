//! Exact matrices of the realizations on polynomial bases: the difference
//! operator is triangular, its eigenvectors are the orthogonal polynomials,
//! and multiplication acts tridiagonally on them.

use crate::kernel::{ExactMatrix, ParamPoly, Scalar, Symbol};

use super::realization::{BiRealization, RacahParams, RacahRealization};
use super::{ShiftError, ShiftOperator};

/// Coefficients of `p(x)` over `{λ(x)^k}`.
pub fn to_lambda_basis(p: &ParamPoly, params: &RacahParams) -> Result<Vec<ParamPoly>, ShiftError> {
    if p.substitute(Symbol::X, &params.lambda_reflection()) != *p {
        return Err(ShiftError::NotSymmetric);
    }
    let lambda = params.lambda();
    let mut rest = p.clone();
    let mut out = Vec::new();
    while !rest.is_zero() {
        let deg = rest.degree_in(Symbol::X).unwrap_or(0) as usize;
        if deg % 2 == 1 {
            return Err(ShiftError::NotSymmetric);
        }
        let k = deg / 2;
        if out.len() <= k {
            out.resize(k + 1, ParamPoly::zero());
        }
        let lc = rest.lc_in(Symbol::X);
        rest = &rest - &(&lc * &lambda.pow(k as u32));
        out[k] = lc;
    }
    if out.is_empty() {
        out.push(ParamPoly::zero());
    }
    Ok(out)
}

fn numeric(p: &ParamPoly) -> Result<Scalar, ShiftError> {
    p.constant_value().ok_or(ShiftError::SymbolicParameters)
}

/// Results of the bispectrality computation on a basis of size `M + 2`.
#[derive(Debug, Clone)]
pub struct BispectralMatrices {
    /// Name of the polynomial basis (`lambda` or `z`).
    pub basis: &'static str,
    /// Upper-triangular matrix of the difference operator.
    pub triangular: ExactMatrix<Scalar>,
    /// Columns are the eigenpolynomials in the basis.
    pub eigenbasis: ExactMatrix<Scalar>,
    pub eigenvalues: Vec<Scalar>,
    /// `P^-1 K P`.
    pub diag_op_matrix: ExactMatrix<Scalar>,
    /// Multiplication operator in the eigenbasis, truncated to `M + 2` rows.
    pub mult_op_matrix_in_eigenbasis: ExactMatrix<Scalar>,
}

impl BispectralMatrices {
    /// First entry in columns `0..=last_col` outside the three central diagonals.
    pub fn tridiagonal_violation(&self, last_col: usize) -> Option<(usize, usize)> {
        let m = &self.mult_op_matrix_in_eigenbasis;
        (0..=last_col.min(m.cols().saturating_sub(1)))
            .flat_map(|c| (0..m.rows()).map(move |r| (r, c)))
            .find(|&(r, c)| r.abs_diff(c) > 1 && !m.get(r, c).is_zero())
    }

    /// First nonzero off-diagonal entry of `P^-1 K P`.
    pub fn diagonal_violation(&self) -> Option<(usize, usize)> {
        let m = &self.diag_op_matrix;
        (0..m.cols())
            .flat_map(|c| (0..m.rows()).map(move |r| (r, c)))
            .find(|&(r, c)| r != c && !m.get(r, c).is_zero())
    }
}

fn finish(
    basis: &'static str,
    triangular: ExactMatrix<Scalar>,
    mult: ExactMatrix<Scalar>,
    m: usize,
) -> Result<BispectralMatrices, ShiftError> {
    let (eigenvalues, p) = triangular.eig_triangular()?;
    let p_inv = p.inverse_upper()?;
    let diag = p_inv.mul(&triangular)?.mul(&p)?;
    let mult_eig = p_inv.mul(&mult)?.mul(&p)?;
    let out = BispectralMatrices {
        basis,
        triangular,
        eigenbasis: p,
        eigenvalues,
        diag_op_matrix: diag,
        mult_op_matrix_in_eigenbasis: mult_eig,
    };
    if let Some((row, col)) = out.tridiagonal_violation(m) {
        return Err(ShiftError::NotTridiagonal { row, col });
    }
    Ok(out)
}

/// Matrix of an operator on the basis `{b_k}` for `k < n`, with `coords`
/// expressing a polynomial in that basis. Coordinates past `n` must vanish.
fn operator_matrix<F>(
    op: &ShiftOperator,
    n: usize,
    basis_elem: impl Fn(usize) -> ParamPoly,
    coords: F,
) -> Result<ExactMatrix<Scalar>, ShiftError>
where
    F: Fn(&ParamPoly) -> Result<Vec<ParamPoly>, ShiftError>,
{
    let mut mat = ExactMatrix::<Scalar>::zeros(n, n);
    for k in 0..n {
        let image = op.apply_to_polynomial(&basis_elem(k))?;
        for (r, c) in coords(&image)?.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if r >= n {
                return Err(ShiftError::NotPolynomialPreserving);
            }
            mat.set(r, k, numeric(c)?);
        }
    }
    Ok(mat)
}

/// Bispectrality for the Racah realization on `{λ^k}` with `k ≤ M + 1`.
pub fn racah_bispectral(r: &RacahRealization, m: usize) -> Result<BispectralMatrices, ShiftError> {
    let n = m + 2;
    let lambda = r.params.lambda();
    let tri = operator_matrix(&r.k1, n, |k| lambda.pow(k as u32), |p| to_lambda_basis(p, &r.params))?;
    let mut mult = ExactMatrix::<Scalar>::zeros(n, n);
    for k in 0..n - 1 {
        mult.set(k + 1, k, Scalar::one());
    }
    finish("lambda", tri, mult, m)
}

/// Bispectrality for the Bannai-Ito realization on `{z^k}` with `k ≤ M + 1`.
pub fn bi_bispectral(r: &BiRealization, m: usize) -> Result<BispectralMatrices, ShiftError> {
    let n = m + 2;
    let z = ParamPoly::var(Symbol::Z);
    let coords = |p: &ParamPoly| Ok(p.coeffs_in(Symbol::Z));
    let tri = operator_matrix(&r.x, n, |k| z.pow(k as u32), coords)?;
    let y = r.y.coeff((0, false));
    let y = y.as_poly().ok_or(ShiftError::NotPolynomialPreserving)?.clone();
    let mut mult = ExactMatrix::<Scalar>::zeros(n, n);
    for k in 0..n {
        for (row, c) in (&y * &z.pow(k as u32)).coeffs_in(Symbol::Z).iter().enumerate() {
            if row < n && !c.is_zero() {
                mult.set(row, k, numeric(c)?);
            }
        }
    }
    finish("z", tri, mult, m)
}

/// Either realization, with rational parameters.
pub fn bispectral_matrices(
    realization: &super::Realization,
    m: usize,
) -> Result<BispectralMatrices, ShiftError> {
    match realization {
        super::Realization::Racah(r) => racah_bispectral(r, m),
        super::Realization::BannaiIto(r) => bi_bispectral(r, m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shift::{build_standard_bi, build_standard_racah, BiParams};

    fn racah_sample() -> RacahRealization {
        build_standard_racah(RacahParams::numeric(
            Scalar::ratio(1, 3),
            Scalar::ratio(1, 5),
            Scalar::ratio(1, 7),
            Scalar::ratio(1, 11),
        ))
    }

    #[test]
    fn lambda_basis_round_trip() {
        let params = RacahParams::symbolic();
        let l2 = params.lambda().pow(2);
        let c = to_lambda_basis(&l2, &params).unwrap();
        assert_eq!(c, vec![ParamPoly::zero(), ParamPoly::zero(), ParamPoly::one()]);
        assert_eq!(to_lambda_basis(&ParamPoly::one(), &params).unwrap(), vec![ParamPoly::one()]);
        assert_eq!(
            to_lambda_basis(&ParamPoly::var(Symbol::X), &params),
            Err(ShiftError::NotSymmetric)
        );
    }

    #[test]
    fn racah_small_basis_is_tridiagonal() {
        let out = racah_bispectral(&racah_sample(), 4).unwrap();
        assert_eq!(out.diagonal_violation(), None);
        let mm = &out.mult_op_matrix_in_eigenbasis;
        for n in 0..=4usize {
            assert!(!mm.get(n + 1, n).is_zero());
        }
    }

    #[test]
    fn bi_small_basis_is_tridiagonal() {
        let r = build_standard_bi(BiParams::numeric(
            Scalar::from_int(1),
            Scalar::ratio(3, 2),
            Scalar::ratio(1, 2),
            Scalar::from_int(2),
        ));
        let out = bi_bispectral(&r, 4).unwrap();
        assert_eq!(out.diagonal_violation(), None);
        assert_eq!(out.tridiagonal_violation(4), None);
    }

    #[test]
    fn zero_size_uses_rows_zero_and_one() {
        let out = racah_bispectral(&racah_sample(), 0).unwrap();
        let mm = &out.mult_op_matrix_in_eigenbasis;
        assert_eq!(mm.rows(), 2);
        assert!(!mm.get(1, 0).is_zero());
    }

    #[test]
    fn symbolic_parameters_are_rejected() {
        let r = build_standard_racah(RacahParams::symbolic());
        assert!(matches!(racah_bispectral(&r, 1), Err(ShiftError::SymbolicParameters)));
    }
}
