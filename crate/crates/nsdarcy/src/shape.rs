//! Tensor-product Lagrange shape functions Q1 and Q2 on the reference
//! square [-1,1]^2.
//!
//! Local node ordering is x-fastest over the tensor grid:
//! Q1 nodes at xi, eta in {-1, +1} (4 nodes), Q2 at {-1, 0, +1} (9 nodes).

/// 1D Lagrange basis on {-1, +1}.
#[inline]
fn lin(i: usize, x: f64) -> f64 {
    match i {
        0 => 0.5 * (1.0 - x),
        1 => 0.5 * (1.0 + x),
        _ => unreachable!(),
    }
}

#[inline]
fn dlin(i: usize) -> f64 {
    match i {
        0 => -0.5,
        1 => 0.5,
        _ => unreachable!(),
    }
}

/// 1D Lagrange basis on {-1, 0, +1}.
#[inline]
fn quad(i: usize, x: f64) -> f64 {
    match i {
        0 => 0.5 * x * (x - 1.0),
        1 => 1.0 - x * x,
        2 => 0.5 * x * (x + 1.0),
        _ => unreachable!(),
    }
}

#[inline]
fn dquad(i: usize, x: f64) -> f64 {
    match i {
        0 => x - 0.5,
        1 => -2.0 * x,
        2 => x + 0.5,
        _ => unreachable!(),
    }
}

/// Values of the 4 Q1 shape functions at (xi, eta).
pub fn q1_values(xi: f64, eta: f64) -> [f64; 4] {
    let mut v = [0.0; 4];
    for jy in 0..2 {
        for jx in 0..2 {
            v[jy * 2 + jx] = lin(jx, xi) * lin(jy, eta);
        }
    }
    v
}

/// Reference-space gradients (d/dxi, d/deta) of the 4 Q1 shape functions.
pub fn q1_grads(xi: f64, eta: f64) -> [[f64; 2]; 4] {
    let mut g = [[0.0; 2]; 4];
    for jy in 0..2 {
        for jx in 0..2 {
            g[jy * 2 + jx] = [dlin(jx) * lin(jy, eta), lin(jx, xi) * dlin(jy)];
        }
    }
    g
}

/// Values of the 9 Q2 shape functions at (xi, eta).
pub fn q2_values(xi: f64, eta: f64) -> [f64; 9] {
    let mut v = [0.0; 9];
    for jy in 0..3 {
        for jx in 0..3 {
            v[jy * 3 + jx] = quad(jx, xi) * quad(jy, eta);
        }
    }
    v
}

/// Reference-space gradients of the 9 Q2 shape functions.
pub fn q2_grads(xi: f64, eta: f64) -> [[f64; 2]; 9] {
    let mut g = [[0.0; 2]; 9];
    for jy in 0..3 {
        for jx in 0..3 {
            g[jy * 3 + jx] = [
                dquad(jx, xi) * quad(jy, eta),
                quad(jx, xi) * dquad(jy, eta),
            ];
        }
    }
    g
}
