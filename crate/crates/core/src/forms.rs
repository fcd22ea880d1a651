//! Bilinear and quadratic forms on presentation coordinates.
//!
//! The coefficient of `d1(i) d2(j)` is the dimension of `Hom(e_j Λ, e_i Λ)`
//! for `0 < i <= j` and `i = j = 0`; the coefficient of `d1(0) d2(i)` is
//! minus `hom_dim(0, i)`.

use num_traits::Zero;

use crate::algebra::AlgebraModel;
use crate::vector::{rat, Rat};

/// Coefficient matrix `B` with `bilinear(d1, d2) = d1^T B d2`.
pub fn gram(model: &AlgebraModel) -> Vec<Vec<Rat>> {
    let n = model.len();
    let poset = model.poset();
    let z = model.zero();
    let mut b = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let h = model.hom_dim(i, j) as i64;
            if i == z && j == z {
                b[i][j] = rat(h);
            } else if i == z {
                b[i][j] = rat(-h);
            } else if j != z && poset.leq(i, j) {
                b[i][j] = rat(h);
            }
        }
    }
    b
}

pub fn bilinear(model: &AlgebraModel, d1: &[Rat], d2: &[Rat]) -> Rat {
    let b = gram(model);
    let mut acc = Rat::zero();
    for (i, row) in b.iter().enumerate() {
        if d1[i].is_zero() {
            continue;
        }
        for (j, coeff) in row.iter().enumerate() {
            if !coeff.is_zero() && !d2[j].is_zero() {
                acc += &d1[i] * coeff * &d2[j];
            }
        }
    }
    acc
}

pub fn quadratic(model: &AlgebraModel, d: &[Rat]) -> Rat {
    bilinear(model, d, d)
}

/// `dim Hom(X, Y) - dim Ext(X, Y)` for presentations with coordinates
/// `cd_x` and `cd_y`.
pub fn euler_pairing(model: &AlgebraModel, cd_x: &[Rat], cd_y: &[Rat]) -> Rat {
    bilinear(model, cd_y, cd_x)
}
