//! Dense linear-algebra plumbing shared by the samplers and estimators:
//! eigenvalues of general (nonsymmetric) real and complex matrices via the
//! Schur decomposition, Hermitian eigendecompositions, and matrix square
//! roots of positive-definite matrices.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::{Error, Result};

pub type C64 = Complex64;
pub type CMatrix = DMatrix<C64>;
pub type RMatrix = DMatrix<f64>;

/// Eigenvalues of a general real square matrix (complex output).
pub fn eigenvalues_real(m: &RMatrix) -> Vec<C64> {
    m.clone().complex_eigenvalues().iter().copied().collect()
}

/// Eigenvalues of a general complex square matrix: diagonal of the
/// (fully triangular) complex Schur form.
pub fn eigenvalues_complex(m: &CMatrix) -> Vec<C64> {
    let (_, t) = m.clone().schur().unpack();
    (0..t.nrows()).map(|i| t[(i, i)]).collect()
}

/// Eigenvalues of a Hermitian complex matrix, ascending.
pub fn eigenvalues_hermitian(m: &CMatrix) -> Vec<f64> {
    let mut evs: Vec<f64> = m.clone().symmetric_eigen().eigenvalues.iter().copied().collect();
    evs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    evs
}

/// Hermitian square root of a positive-definite matrix by eigendecomposition.
/// Rejects matrices whose smallest eigenvalue is not strictly positive.
pub fn sqrt_hermitian_pd(m: &CMatrix) -> Result<CMatrix> {
    let se = m.clone().symmetric_eigen();
    let scale = se.eigenvalues.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
    if se.eigenvalues.iter().any(|&ev| ev <= scale * 1e-14 || ev <= 0.0) {
        return Err(Error::SigmaNotPositiveDefinite);
    }
    let sqrt_d = CMatrix::from_diagonal(
        &se.eigenvalues.map(|ev| C64::new(ev.sqrt(), 0.0)).map(|c| c),
    );
    let q = se.eigenvectors;
    Ok(&q * sqrt_d * q.adjoint())
}

/// Real symmetric square root of a real SPD matrix.
pub fn sqrt_symmetric_pd(m: &RMatrix) -> Result<RMatrix> {
    let c = to_complex(m);
    let s = sqrt_hermitian_pd(&c)?;
    Ok(RMatrix::from_fn(m.nrows(), m.ncols(), |i, j| s[(i, j)].re))
}

/// Real matrix lifted to complex entries.
pub fn to_complex(m: &RMatrix) -> CMatrix {
    CMatrix::from_fn(m.nrows(), m.ncols(), |i, j| C64::new(m[(i, j)], 0.0))
}

/// Pairs up a conjugate-symmetric spectrum and returns one representative
/// per pair (the one with nonnegative imaginary part). Errors if some
/// eigenvalue cannot be matched with its conjugate to within `tol`
/// relative to the spectrum scale.
pub fn half_spectrum_conjugate_pairs(evs: &[C64], tol: f64) -> Result<Vec<C64>> {
    if evs.len() % 2 != 0 {
        return Err(Error::DimensionMismatch("odd spectrum cannot pair".into()));
    }
    let scale = evs.iter().fold(1.0f64, |a, e| a.max(e.norm()));
    let mut pool: Vec<C64> = evs.to_vec();
    let mut out = Vec::with_capacity(evs.len() / 2);
    while let Some(e) = pool.pop() {
        let target = e.conj();
        let (idx, dist) = pool
            .iter()
            .enumerate()
            .map(|(i, f)| (i, (f - target).norm()))
            .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .ok_or_else(|| Error::DimensionMismatch("odd spectrum cannot pair".into()))?;
        if dist > tol * scale {
            return Err(Error::QuaternionStructure(dist / scale));
        }
        pool.swap_remove(idx);
        out.push(if e.im >= 0.0 { e } else { e.conj() });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_eigenvalues_rotation() {
        // rotation by 90 degrees has eigenvalues +-i
        let m = RMatrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0]);
        let mut evs = eigenvalues_real(&m);
        evs.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
        assert!((evs[0] - C64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((evs[1] - C64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn complex_eigenvalues_triangular() {
        let m = CMatrix::from_row_slice(
            3,
            3,
            &[
                C64::new(1.0, 2.0),
                C64::new(5.0, 0.0),
                C64::new(0.0, 1.0),
                C64::new(0.0, 0.0),
                C64::new(-2.0, 0.5),
                C64::new(3.0, 3.0),
                C64::new(0.0, 0.0),
                C64::new(0.0, 0.0),
                C64::new(0.25, -1.0),
            ],
        );
        let mut evs = eigenvalues_complex(&m);
        evs.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        let mut expect = [C64::new(1.0, 2.0), C64::new(-2.0, 0.5), C64::new(0.25, -1.0)];
        expect.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        for (e, x) in evs.iter().zip(expect.iter()) {
            assert!((e - x).norm() < 1e-10, "{e} vs {x}");
        }
    }

    #[test]
    fn spd_sqrt_round_trip() {
        let a = RMatrix::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 2.0]);
        let s = sqrt_symmetric_pd(&a).unwrap();
        assert!(((&s * &s) - &a).norm() < 1e-12);
        let bad = RMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 1.0]);
        assert!(sqrt_symmetric_pd(&bad).is_err());
    }

    #[test]
    fn conjugate_pairing() {
        let evs = vec![
            C64::new(1.0, 2.0),
            C64::new(3.0, 0.0),
            C64::new(1.0, -2.0),
            C64::new(3.0, 0.0),
        ];
        let half = half_spectrum_conjugate_pairs(&evs, 1e-8).unwrap();
        assert_eq!(half.len(), 2);
        let unpaired = vec![C64::new(1.0, 2.0), C64::new(0.5, -0.1)];
        assert!(half_spectrum_conjugate_pairs(&unpaired, 1e-8).is_err());
    }
}
