//! Gauss-Legendre rules on [-1, 1] and their tensor products.
//!
//! Cells are axis-aligned rectangles, so an n-point rule per direction is
//! exact for polynomials of degree 2n-1 per direction. Three points per
//! direction integrate Q2 x Q2 products exactly; five points are used where
//! errors against closed forms are measured.

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
pub fn gauss_1d(n: usize) -> (Vec<f64>, Vec<f64>) {
    match n {
        1 => (vec![0.0], vec![2.0]),
        2 => {
            let a = 1.0 / 3.0_f64.sqrt();
            (vec![-a, a], vec![1.0, 1.0])
        }
        3 => {
            let a = (3.0_f64 / 5.0).sqrt();
            (vec![-a, 0.0, a], vec![5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0])
        }
        4 => {
            let a = (3.0 / 7.0 - 2.0 / 7.0 * (6.0_f64 / 5.0).sqrt()).sqrt();
            let b = (3.0 / 7.0 + 2.0 / 7.0 * (6.0_f64 / 5.0).sqrt()).sqrt();
            let wa = (18.0 + 30.0_f64.sqrt()) / 36.0;
            let wb = (18.0 - 30.0_f64.sqrt()) / 36.0;
            (vec![-b, -a, a, b], vec![wb, wa, wa, wb])
        }
        5 => {
            let a = (5.0 - 2.0 * (10.0_f64 / 7.0).sqrt()).sqrt() / 3.0;
            let b = (5.0 + 2.0 * (10.0_f64 / 7.0).sqrt()).sqrt() / 3.0;
            let wa = (322.0 + 13.0 * 70.0_f64.sqrt()) / 900.0;
            let wb = (322.0 - 13.0 * 70.0_f64.sqrt()) / 900.0;
            (
                vec![-b, -a, 0.0, a, b],
                vec![wb, wa, 128.0 / 225.0, wa, wb],
            )
        }
        _ => panic!("gauss_1d: unsupported point count {n}"),
    }
}

/// Tensor-product rule on the reference square [-1,1]^2.
/// Returns (xi, eta, weight) triples.
pub fn gauss_2d(n: usize) -> Vec<(f64, f64, f64)> {
    let (x, w) = gauss_1d(n);
    let mut out = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n {
            out.push((x[i], x[j], w[i] * w[j]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn integrate_1d(n: usize, f: impl Fn(f64) -> f64) -> f64 {
        let (x, w) = gauss_1d(n);
        x.iter().zip(&w).map(|(xi, wi)| wi * f(*xi)).sum()
    }

    #[test]
    fn exactness_degree_2n_minus_1() {
        for n in 1..=5 {
            let deg = 2 * n - 1;
            // integral of x^deg over [-1,1] is 0 for odd deg, 2/(deg+1) for even
            for d in 0..=deg {
                let exact = if d % 2 == 1 { 0.0 } else { 2.0 / (d as f64 + 1.0) };
                let got = integrate_1d(n, |x| x.powi(d as i32));
                assert!(
                    (got - exact).abs() < 1e-14,
                    "n={n} d={d}: {got} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn tensor_rule_area() {
        for n in 1..=5 {
            let total: f64 = gauss_2d(n).iter().map(|(_, _, w)| w).sum();
            assert!((total - 4.0).abs() < 1e-14);
        }
    }
}
