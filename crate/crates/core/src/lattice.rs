//! Exact integer-vector and rational arithmetic shared by every other module.
//!
//! Everything downstream is decided by sharp equalities and strict
//! inequalities between rationals, so this crate never touches floating
//! point. Rationals are `num`'s `BigRational`, which canonicalizes to
//! lowest terms with a positive denominator on construction.

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{usage, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_from_ints(n: Int, d: Int) -> Rat {
    Rat::new(n, d)
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Canonical text form: plain integer when the denominator is 1,
/// otherwise `num/den`. Never decimal.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// gcd of a nonempty list of nonnegative integers; gcd of all zeros is 0.
pub fn gcd_of(values: &[Int]) -> Result<Int> {
    if values.is_empty() {
        return Err(usage("gcd of an empty list"));
    }
    if values.iter().any(|v| v.is_negative()) {
        return Err(usage("gcd arguments must be nonnegative"));
    }
    Ok(values.iter().fold(Int::zero(), |acc, v| acc.gcd(v)))
}

/// lcm of a nonempty list of positive integers.
pub fn lcm_of(values: &[Int]) -> Result<Int> {
    if values.is_empty() {
        return Err(usage("lcm of an empty list"));
    }
    if values.iter().any(|v| !v.is_positive()) {
        return Err(usage("lcm arguments must be positive"));
    }
    Ok(values.iter().fold(Int::one(), |acc, v| acc.lcm(v)))
}

/// A fixed-dimension vector of arbitrary-precision integers.
///
/// Stands in for both lattice exponents and blow-up weights; immutable
/// after construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVec(Vec<Int>);

impl IntVec {
    pub fn new(entries: Vec<Int>) -> Result<Self> {
        if entries.is_empty() {
            return Err(usage("vector must have dimension >= 1"));
        }
        Ok(IntVec(entries))
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntVec(entries.iter().map(|&e| Int::from(e)).collect())
    }

    pub fn from_u64(entries: &[u64]) -> Self {
        IntVec(entries.iter().map(|&e| Int::from(e)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Int] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &Int {
        &self.0[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Int> {
        self.0.iter()
    }

    pub fn all_ones(n: usize) -> Self {
        IntVec(vec![Int::one(); n])
    }

    /// j-th standard basis vector of dimension n.
    pub fn unit(n: usize, j: usize) -> Self {
        let mut v = vec![Int::zero(); n];
        v[j] = Int::one();
        IntVec(v)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|e| !e.is_negative())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|e| e.is_positive())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|e| e.is_zero())
    }

    pub fn sum(&self) -> Int {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &IntVec) -> IntVec {
        debug_assert_eq!(self.dim(), other.dim());
        IntVec(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Divides every entry by the gcd of the entries (no-op on the zero vector).
    pub fn primitive(&self) -> IntVec {
        let g = self.0.iter().fold(Int::zero(), |acc, v| acc.gcd(v));
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntVec(self.0.iter().map(|e| e / &g).collect())
    }

    pub fn to_string_csv(&self) -> String {
        self.0
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl std::fmt::Display for IntVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Canonical pairing `<p, m>` between weight space and exponent space.
pub fn pairing(p: &IntVec, m: &IntVec) -> Result<Int> {
    if p.dim() != m.dim() {
        return Err(usage(format!(
            "pairing of vectors of different dimensions {} and {}",
            p.dim(),
            m.dim()
        )));
    }
    Ok(p.iter().zip(m.iter()).map(|(a, b)| a * b).sum())
}

/// A primitive strictly positive integer vector defining a weighted blow-up.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(IntVec);

impl Weight {
    /// Requires every entry positive and the entries coprime as a whole.
    pub fn new(v: IntVec) -> Result<Self> {
        if !v.is_positive() {
            return Err(usage("weight entries must all be positive"));
        }
        let g = gcd_of(v.entries())?;
        if !g.is_one() {
            return Err(usage(format!("weight {v} is not primitive (gcd {g})")));
        }
        Ok(Weight(v))
    }

    /// Scales a positive vector down to its primitive representative.
    pub fn primitive_from(v: IntVec) -> Result<Self> {
        if !v.is_positive() {
            return Err(usage("weight entries must all be positive"));
        }
        Ok(Weight(v.primitive()))
    }

    pub fn as_vec(&self) -> &IntVec {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Extended-gcd based inverse of `a` modulo `m` (requires gcd(a, m) = 1, m >= 2).
pub fn mod_inverse(a: &Int, m: &Int) -> Option<Int> {
    let a = a.mod_floor(m);
    let ext = a.extended_gcd(m);
    if !ext.gcd.is_one() {
        return None;
    }
    Some(ext.x.mod_floor(m))
}

/// Sign of a big integer as -1, 0, 1 for terse comparisons.
pub fn int_sign(v: &Int) -> i32 {
    match v.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_of(&ints(&[6, 2, 2])).unwrap(), Int::from(2));
        assert_eq!(gcd_of(&ints(&[1, 1, 1])).unwrap(), Int::from(1));
        assert_eq!(gcd_of(&ints(&[15, 6, 5])).unwrap(), Int::from(1));
        assert_eq!(gcd_of(&ints(&[0, 0])).unwrap(), Int::from(0));
        assert!(gcd_of(&[]).is_err());
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm_of(&ints(&[2, 3, 7, 41])).unwrap(), Int::from(1722));
        assert_eq!(lcm_of(&ints(&[2, 2, 2, 2])).unwrap(), Int::from(2));
        assert_eq!(lcm_of(&ints(&[2, 4, 6, 10])).unwrap(), Int::from(60));
        assert!(lcm_of(&ints(&[2, 0])).is_err());
        assert!(lcm_of(&[]).is_err());
    }

    #[test]
    fn pairing_examples() {
        let p = IntVec::from_i64(&[15, 10, 6]);
        let m = IntVec::from_i64(&[1, 1, 1]);
        assert_eq!(pairing(&p, &m).unwrap(), Int::from(31));

        let p = IntVec::from_i64(&[1, 0]);
        let m = IntVec::from_i64(&[0, 7]);
        assert_eq!(pairing(&p, &m).unwrap(), Int::from(0));

        let p = IntVec::from_i64(&[861, 574, 246, 42]);
        let m = IntVec::from_i64(&[1, 1, 1, 1]);
        assert_eq!(pairing(&p, &m).unwrap(), Int::from(1723));

        let short = IntVec::from_i64(&[1, 2]);
        assert!(pairing(&p, &short).is_err());
    }

    #[test]
    fn weight_validation() {
        assert!(Weight::new(IntVec::from_i64(&[15, 10, 6])).is_ok());
        assert!(Weight::new(IntVec::from_i64(&[2, 4, 6])).is_err());
        assert!(Weight::new(IntVec::from_i64(&[1, 0, 1])).is_err());
        let w = Weight::primitive_from(IntVec::from_i64(&[4, 8, 12])).unwrap();
        assert_eq!(w.as_vec(), &IntVec::from_i64(&[1, 2, 3]));
    }

    #[test]
    fn rat_round_trip() {
        let a = rat(1, 3);
        let c = rat(5, 7);
        assert_eq!((&a + &c) - &c, a);
        assert_eq!(format_rat(&rat(4, 2)), "2");
        assert_eq!(format_rat(&rat(-1, 2)), "-1/2");
    }

    #[test]
    fn mod_inverse_basics() {
        assert_eq!(
            mod_inverse(&Int::from(3), &Int::from(5)).unwrap(),
            Int::from(2)
        );
        assert!(mod_inverse(&Int::from(2), &Int::from(4)).is_none());
    }
}
