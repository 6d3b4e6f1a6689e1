//! Generalized Gauss-Laguerre quadrature (weight `t^gamma e^{-t}`) via the
//! Golub-Welsch algorithm on the symmetric Jacobi matrix.

use nalgebra::DMatrix;
use statrs::function::gamma::gamma;

/// Nodes and weights of the `n`-point rule for `int_0^inf t^gamma e^{-t} f(t) dt`.
/// Requires `gamma > -1` and `n >= 1`. Weights sum to `Gamma(gamma + 1)`.
pub fn gauss_laguerre(n: usize, gamma_exp: f64) -> (Vec<f64>, Vec<f64>) {
    assert!(gamma_exp > -1.0, "Gauss-Laguerre needs gamma > -1");
    assert!(n >= 1);
    // Monic recurrence p_{k+1} = (t - (2k + gamma + 1)) p_k - k (k + gamma) p_{k-1}
    let mut jacobi = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        jacobi[(k, k)] = 2.0 * k as f64 + gamma_exp + 1.0;
        if k + 1 < n {
            let off = ((k as f64 + 1.0) * (k as f64 + 1.0 + gamma_exp)).sqrt();
            jacobi[(k, k + 1)] = off;
            jacobi[(k + 1, k)] = off;
        }
    }
    let eig = jacobi.symmetric_eigen();
    let mu0 = gamma(gamma_exp + 1.0);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| (eig.eigenvalues[i], mu0 * eig.eigenvectors[(0, i)].powi(2)))
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    pairs.into_iter().unzip()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn integrate(n: usize, g: f64, f: impl Fn(f64) -> f64) -> f64 {
        let (x, w) = gauss_laguerre(n, g);
        x.iter().zip(&w).map(|(&t, &wt)| wt * f(t)).sum()
    }

    #[test]
    fn moments_plain_laguerre() {
        // int t^k e^{-t} = k!
        for (k, expect) in [(0u32, 1.0), (1, 1.0), (2, 2.0), (5, 120.0)] {
            let got = integrate(20, 0.0, |t| t.powi(k as i32));
            assert!((got - expect).abs() < 1e-9 * expect.max(1.0), "k={k}: {got}");
        }
    }

    #[test]
    fn moments_generalized() {
        // int t^{1/2} e^{-t} t = Gamma(5/2) = 3 sqrt(pi) / 4
        let got = integrate(30, 0.5, |t| t);
        let expect = 0.75 * std::f64::consts::PI.sqrt();
        assert!((got - expect).abs() < 1e-12, "{got} vs {expect}");
    }

    #[test]
    fn smooth_non_polynomial() {
        // int e^{-t} / (1 + t) dt = e * E_1(1) ~ 0.596347362323194
        let got = integrate(80, 0.0, |t| 1.0 / (1.0 + t));
        assert!((got - 0.596_347_362_323_194).abs() < 1e-8, "{got}");
    }
}
