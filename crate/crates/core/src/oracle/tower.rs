//! Degree-`p` field extensions `G = F(ξ)` with `ξ^p = c`, together with the
//! matrix algebra `A = End_F(G)` acting on the basis `1, ξ, ..., ξ^(p-1)`.
//!
//! Elements of `A` are `p x p` matrices acting on column vectors, stored
//! row-major. Multiplication in `A` is opposite composition:
//! `a * b` means "first `a`, then `b`".

use thiserror::Error;

use super::field::{Field, PrimeField};
use super::linalg::{span, Subspace};
use crate::poset::is_prime;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// `F = F_q` with `p | q - 1`; `ϑ` is the automorphism `ξ -> ω ξ`.
    Cyclic,
    /// `F = F_p(t)`, `c = t`; `ϑ` is the derivation `d/dξ`.
    Inseparable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u32,
    pub q: u64,
    pub c: i64,
    pub omega: Option<i64>,
    pub mode: Mode,
}

impl FieldSpec {
    pub fn cyclic(p: u32, q: u64, c: i64) -> Self {
        FieldSpec {
            p,
            q,
            c,
            omega: None,
            mode: Mode::Cyclic,
        }
    }

    pub fn inseparable(p: u32) -> Self {
        FieldSpec {
            p,
            q: p as u64,
            c: 0,
            omega: None,
            mode: Mode::Inseparable,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TowerError {
    #[error("p = {0} is not prime")]
    NotPrimeDegree(u32),
    #[error("q = {0} must be a prime below 2^32")]
    UnsupportedOrder(u64),
    #[error("p = {p} does not divide q - 1 = {}", q - 1)]
    NoRootsOfUnity { p: u32, q: u64 },
    #[error("c = {c} is zero or a {p}-th power in F_{q}")]
    Reducible { p: u32, q: u64, c: i64 },
    #[error("omega = {omega} is not a primitive {p}-th root of unity in F_{q}")]
    BadOmega { p: u32, q: u64, omega: i64 },
    #[error("this build has no support for the inseparable mode")]
    InseparableDisabled,
}

#[derive(Clone, Debug)]
pub struct Tower<F: Field> {
    pub field: F,
    pub p: usize,
    pub c: F::Elem,
    /// Matrix of `ϑ`.
    pub theta: Vec<F::Elem>,
    pub description: String,
}

pub type Mat<E> = Vec<E>;

impl<F: Field> Tower<F> {
    pub fn dim_a(&self) -> usize {
        self.p * self.p
    }

    pub fn zero_mat(&self) -> Mat<F::Elem> {
        vec![self.field.zero(); self.dim_a()]
    }

    pub fn identity(&self) -> Mat<F::Elem> {
        let mut m = self.zero_mat();
        for i in 0..self.p {
            m[i * self.p + i] = self.field.one();
        }
        m
    }

    /// Composition `a ∘ b` of endomorphisms.
    pub fn compose(&self, a: &[F::Elem], b: &[F::Elem]) -> Mat<F::Elem> {
        let p = self.p;
        let f = &self.field;
        let mut out = self.zero_mat();
        for i in 0..p {
            for k in 0..p {
                let aik = &a[i * p + k];
                if f.is_zero(aik) {
                    continue;
                }
                for j in 0..p {
                    let t = f.mul(aik, &b[k * p + j]);
                    out[i * p + j] = f.add(&out[i * p + j], &t);
                }
            }
        }
        out
    }

    /// Product in `A`: first `a`, then `b`.
    pub fn star(&self, a: &[F::Elem], b: &[F::Elem]) -> Mat<F::Elem> {
        self.compose(b, a)
    }

    /// Multiplication by `ξ^a`.
    pub fn mu_xi(&self, a: usize) -> Mat<F::Elem> {
        let p = self.p;
        let mut m = self.zero_mat();
        for k in 0..p {
            let (row, coeff) = if a + k < p {
                (a + k, self.field.one())
            } else {
                (a + k - p, self.c.clone())
            };
            m[row * p + k] = coeff;
        }
        m
    }

    /// The idempotent `ε`: projection onto the coefficient of `1`.
    pub fn epsilon(&self) -> Mat<F::Elem> {
        let mut m = self.zero_mat();
        m[0] = self.field.one();
        m
    }

    /// `μ_{ξ^a} ∘ ϑ^i` for `a < p`, `i < ell`.
    pub fn a_ell_basis(&self, ell: usize) -> Vec<Mat<F::Elem>> {
        let mut out = Vec::new();
        let mut theta_i = self.identity();
        for _ in 0..ell {
            for a in 0..self.p {
                out.push(self.compose(&self.mu_xi(a), &theta_i));
            }
            theta_i = self.compose(&self.theta, &theta_i);
        }
        out
    }

    pub fn a_ell(&self, ell: usize) -> Subspace<F::Elem> {
        span(&self.field, self.dim_a(), &self.a_ell_basis(ell))
    }

    /// `μ(span{1, ξ, ..., ξ^(ell-1)})`.
    pub fn b_ell(&self, ell: usize) -> Subspace<F::Elem> {
        let basis: Vec<_> = (0..ell).map(|a| self.mu_xi(a)).collect();
        span(&self.field, self.dim_a(), &basis)
    }
}

pub fn build_cyclic(spec: &FieldSpec) -> Result<Tower<PrimeField>, TowerError> {
    let p = spec.p;
    let q = spec.q;
    if !is_prime(p) {
        return Err(TowerError::NotPrimeDegree(p));
    }
    if !(2..1 << 32).contains(&q) || !is_prime(q as u32) {
        return Err(TowerError::UnsupportedOrder(q));
    }
    if !(q - 1).is_multiple_of(p as u64) {
        return Err(TowerError::NoRootsOfUnity { p, q });
    }
    let f = PrimeField::new(q);
    let c = f.from_int(spec.c);
    let e = (q - 1) / p as u64;
    if c == 0 || f.pow(&c, e) == 1 {
        return Err(TowerError::Reducible { p, q, c: spec.c });
    }
    let primitive = |w: u64| w != 1 && f.pow(&w, p as u64) == 1;
    let omega = match spec.omega {
        Some(w) => {
            let w = f.from_int(w);
            if !primitive(w) {
                return Err(TowerError::BadOmega {
                    p,
                    q,
                    omega: spec.omega.unwrap(),
                });
            }
            w
        }
        None => (2..q)
            .find(|&w| primitive(w))
            .expect("p | q - 1 gives a primitive root"),
    };
    let pu = p as usize;
    let mut theta = vec![0; pu * pu];
    for k in 0..pu {
        theta[k * pu + k] = f.pow(&omega, k as u64);
    }
    Ok(Tower {
        field: f,
        p: pu,
        c,
        theta,
        description: format!("F_{q} < F_{q}(x), x^{p} = {c}, sigma(x) = {omega} x"),
    })
}

#[cfg(feature = "inseparable")]
pub fn build_inseparable(p: u32) -> Result<Tower<super::field::RationalFunctions>, TowerError> {
    use super::field::RationalFunctions;
    if !is_prime(p) {
        return Err(TowerError::NotPrimeDegree(p));
    }
    let f = RationalFunctions::new(p as u64);
    let pu = p as usize;
    let mut theta = vec![f.zero(); pu * pu];
    for k in 1..pu {
        theta[(k - 1) * pu + k] = f.from_int(k as i64);
    }
    Ok(Tower {
        c: f.t(),
        field: f,
        p: pu,
        theta,
        description: format!("F_{p}(t) < F_{p}(t)(x), x^{p} = t, derivation d/dx"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_ell_dimensions() {
        for (p, q, c) in [(2, 3, -1), (3, 7, 3), (5, 11, 2)] {
            let t = build_cyclic(&FieldSpec::cyclic(p, q, c)).unwrap();
            for ell in 1..=p as usize {
                assert_eq!(t.a_ell(ell).dim(), ell * p as usize);
            }
        }
    }

    #[test]
    fn field_spec_errors() {
        assert_eq!(
            build_cyclic(&FieldSpec::cyclic(3, 5, 2)).unwrap_err(),
            TowerError::NoRootsOfUnity { p: 3, q: 5 }
        );
        assert!(matches!(
            build_cyclic(&FieldSpec::cyclic(3, 7, 1)),
            Err(TowerError::Reducible { .. })
        ));
    }

    #[test]
    fn explicit_omega() {
        let mut spec = FieldSpec::cyclic(3, 7, 3);
        spec.omega = Some(2);
        let t = build_cyclic(&spec).unwrap();
        assert_eq!(t.theta, vec![1, 0, 0, 0, 2, 0, 0, 0, 4]);
        spec.omega = Some(3);
        assert!(matches!(
            build_cyclic(&spec),
            Err(TowerError::BadOmega { .. })
        ));
    }

    #[test]
    fn mu_xi_generates_the_field() {
        let t = build_cyclic(&FieldSpec::cyclic(3, 7, 3)).unwrap();
        let x = t.mu_xi(1);
        let x3 = t.compose(&x, &t.compose(&x, &x));
        let expect: Vec<u64> = t.identity().iter().map(|v| v * 3).collect();
        assert_eq!(x3, expect);
    }

    #[cfg(feature = "inseparable")]
    #[test]
    fn inseparable_a_ell_dimensions() {
        let t = build_inseparable(3).unwrap();
        for ell in 1..=3 {
            assert_eq!(t.a_ell(ell).dim(), 3 * ell);
        }
    }
}
