//! Exact integer and rational vectors indexed by poset points.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;
pub type RatVec = Vec<Rat>;
/// Dimension vector over the base field; entries are natural numbers.
pub type DimVec = Vec<BigInt>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn dim_vec(entries: &[i64]) -> DimVec {
    entries.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn rat_vec(entries: &[i64]) -> RatVec {
    entries.iter().map(|&x| rat(x)).collect()
}

pub fn to_rat_vec(v: &[BigInt]) -> RatVec {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

/// Converts back to integers, or `None` if some entry is fractional.
pub fn to_dim_vec(v: &[Rat]) -> Option<DimVec> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect()
}

pub fn unit(n: usize, i: usize) -> RatVec {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

pub fn is_nonnegative(v: &[BigInt]) -> bool {
    v.iter().all(|x| !x.is_negative())
}

/// `(a, b, c)` style rendering used in reports and DOT labels.
pub fn format_vec<T: std::fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}
