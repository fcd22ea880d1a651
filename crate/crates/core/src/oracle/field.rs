//! Base fields for the oracle: prime fields, and rational functions over a
//! prime field.

use std::fmt;

pub trait Field: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// All elements, when the field is finite.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// `Z / qZ` for a prime `q < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub fn new(q: u64) -> Self {
        assert!((2..1 << 32).contains(&q));
        PrimeField { q }
    }

    pub fn order(&self) -> u64 {
        self.q
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.q as i64) as u64
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.q
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.q - b) % self.q
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.q
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(a, self.q - 2)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.q).collect())
    }
}

/// Polynomials over `Z / pZ`, lowest degree first, no trailing zeros.
#[cfg(feature = "inseparable")]
mod poly {
    pub type Poly = Vec<u64>;

    pub fn trim(mut a: Poly) -> Poly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn add(p: u64, a: &[u64], b: &[u64]) -> Poly {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| (a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)) % p)
            .collect();
        trim(out)
    }

    pub fn neg(p: u64, a: &[u64]) -> Poly {
        a.iter().map(|&x| (p - x) % p).collect()
    }

    pub fn mul(p: u64, a: &[u64], b: &[u64]) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    pub fn inv_mod(p: u64, a: u64) -> u64 {
        let mut acc = 1;
        let (mut base, mut e) = (a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    }

    pub fn scale(p: u64, a: &[u64], c: u64) -> Poly {
        trim(a.iter().map(|&x| x * c % p).collect())
    }

    pub fn divrem(p: u64, a: &[u64], b: &[u64]) -> (Poly, Poly) {
        assert!(!b.is_empty(), "division by the zero polynomial");
        let mut rem = a.to_vec();
        let db = b.len() - 1;
        let lead_inv = inv_mod(p, b[db]);
        if rem.len() < b.len() {
            return (Vec::new(), trim(rem));
        }
        let mut quot = vec![0; rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = rem[k + db] * lead_inv % p;
            quot[k] = c;
            if c != 0 {
                for (j, &bj) in b.iter().enumerate() {
                    rem[k + j] = (rem[k + j] + p - c * bj % p) % p;
                }
            }
        }
        (trim(quot), trim(rem))
    }

    pub fn monic(p: u64, a: &[u64]) -> Poly {
        match a.last() {
            None => Vec::new(),
            Some(&lead) => scale(p, a, inv_mod(p, lead)),
        }
    }

    pub fn gcd(p: u64, a: &[u64], b: &[u64]) -> Poly {
        let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
        while !y.is_empty() {
            let (_, r) = divrem(p, &x, &y);
            x = y;
            y = r;
        }
        monic(p, &x)
    }
}

/// Reduced fraction of polynomials with monic denominator.
#[cfg(feature = "inseparable")]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFn {
    pub num: Vec<u64>,
    pub den: Vec<u64>,
}

/// The rational function field `F_p(t)`.
#[cfg(feature = "inseparable")]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalFunctions {
    p: u64,
}

#[cfg(feature = "inseparable")]
impl RationalFunctions {
    pub fn new(p: u64) -> Self {
        RationalFunctions { p }
    }

    /// The transcendental `t`.
    pub fn t(&self) -> RatFn {
        RatFn {
            num: vec![0, 1],
            den: vec![1],
        }
    }

    fn make(&self, num: Vec<u64>, den: Vec<u64>) -> RatFn {
        let p = self.p;
        let num = poly::trim(num);
        if num.is_empty() {
            return self.zero();
        }
        let g = poly::gcd(p, &num, &den);
        let (n, _) = poly::divrem(p, &num, &g);
        let (d, _) = poly::divrem(p, &den, &g);
        let lead = *d.last().unwrap();
        let inv = poly::inv_mod(p, lead);
        RatFn {
            num: poly::scale(p, &n, inv),
            den: poly::scale(p, &d, inv),
        }
    }
}

#[cfg(feature = "inseparable")]
impl Field for RationalFunctions {
    type Elem = RatFn;

    fn zero(&self) -> RatFn {
        RatFn {
            num: Vec::new(),
            den: vec![1],
        }
    }

    fn one(&self) -> RatFn {
        RatFn {
            num: vec![1],
            den: vec![1],
        }
    }

    fn from_int(&self, n: i64) -> RatFn {
        let c = n.rem_euclid(self.p as i64) as u64;
        self.make(vec![c], vec![1])
    }

    fn add(&self, a: &RatFn, b: &RatFn) -> RatFn {
        let p = self.p;
        if a.den == b.den {
            return self.make(poly::add(p, &a.num, &b.num), a.den.clone());
        }
        let num = poly::add(
            p,
            &poly::mul(p, &a.num, &b.den),
            &poly::mul(p, &b.num, &a.den),
        );
        self.make(num, poly::mul(p, &a.den, &b.den))
    }

    fn sub(&self, a: &RatFn, b: &RatFn) -> RatFn {
        let nb = RatFn {
            num: poly::neg(self.p, &b.num),
            den: b.den.clone(),
        };
        self.add(a, &nb)
    }

    fn mul(&self, a: &RatFn, b: &RatFn) -> RatFn {
        let p = self.p;
        if a.num.is_empty() || b.num.is_empty() {
            return self.zero();
        }
        self.make(poly::mul(p, &a.num, &b.num), poly::mul(p, &a.den, &b.den))
    }

    fn inv(&self, a: &RatFn) -> RatFn {
        assert!(!a.num.is_empty(), "inverse of zero");
        self.make(a.den.clone(), a.num.clone())
    }

    fn is_zero(&self, a: &RatFn) -> bool {
        a.num.is_empty()
    }

    fn elements(&self) -> Option<Vec<RatFn>> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(7);
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.from_int(-1), 6);
    }

    #[cfg(feature = "inseparable")]
    #[test]
    fn rational_functions_field_ops() {
        let f = RationalFunctions::new(3);
        let t = f.t();
        let one = f.one();
        let x = f.add(&t, &one);
        let y = f.inv(&x);
        assert_eq!(f.mul(&x, &y), one);
        let z = f.sub(&f.mul(&x, &x), &f.mul(&t, &t));
        // (t + 1)^2 - t^2 = 2t + 1
        assert_eq!(
            z,
            RatFn {
                num: vec![1, 2],
                den: vec![1]
            }
        );
        assert!(f.is_zero(&f.sub(&y, &y)));
    }
}
