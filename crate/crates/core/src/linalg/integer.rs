//! Exact integers with a checked 64-bit fast path.
//!
//! Values are stored as `i64` whenever they fit and are promoted to a
//! [`BigInt`] as soon as an operation would overflow. Results are demoted
//! again when they fit, so the representation of a value is canonical and
//! equality can compare variants directly.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone)]
pub enum Integer {
    Small(i64),
    Big(BigInt),
}

use Integer::{Big, Small};

impl Integer {
    pub const ZERO: Integer = Small(0);
    pub const ONE: Integer = Small(1);

    fn from_big(b: BigInt) -> Integer {
        match b.to_i64() {
            Some(v) => Small(v),
            None => Big(b),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Small(v) => BigInt::from(*v),
            Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Small(v) => Some(*v),
            Big(_) => None,
        }
    }

    pub fn is_small(&self) -> bool {
        matches!(self, Small(_))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Small(1))
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn signum(&self) -> i32 {
        match self {
            Small(v) => v.signum() as i32,
            Big(b) => {
                if b.is_positive() {
                    1
                } else if b.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn abs(&self) -> Integer {
        match self {
            Small(v) => match v.checked_abs() {
                Some(a) => Small(a),
                None => Big(BigInt::from(*v).abs()),
            },
            Big(b) => Big(b.abs()),
        }
    }

    /// Floor division. Panics on division by zero.
    pub fn div_floor(&self, other: &Integer) -> Integer {
        assert!(!other.is_zero(), "division by zero");
        if let (Small(a), Small(b)) = (self, other) {
            if let Some(q) = a.checked_div_euclid(*b) {
                // euclidean and floor quotients differ for negative divisors
                let r = a.rem_euclid(*b);
                let q = if *b < 0 && r != 0 { q - 1 } else { q };
                return Small(q);
            }
        }
        Integer::from_big(self.to_bigint().div_floor(&other.to_bigint()))
    }

    /// Remainder with the sign of the divisor (pairs with [`div_floor`]).
    ///
    /// [`div_floor`]: Integer::div_floor
    pub fn mod_floor(&self, other: &Integer) -> Integer {
        assert!(!other.is_zero(), "division by zero");
        if let (Small(a), Small(b)) = (self, other) {
            if let Some(r) = a.checked_rem_euclid(*b) {
                let r = if *b < 0 && r != 0 { r + b } else { r };
                return Small(r);
            }
        }
        Integer::from_big(self.to_bigint().mod_floor(&other.to_bigint()))
    }

    /// Division that must be exact; panics otherwise.
    pub fn div_exact(&self, other: &Integer) -> Integer {
        let (q, r) = self.div_rem_trunc(other);
        assert!(r.is_zero(), "inexact division {self} / {other}");
        q
    }

    /// Truncating division with remainder.
    pub fn div_rem_trunc(&self, other: &Integer) -> (Integer, Integer) {
        assert!(!other.is_zero(), "division by zero");
        if let (Small(a), Small(b)) = (self, other) {
            if let (Some(q), Some(r)) = (a.checked_div(*b), a.checked_rem(*b)) {
                return (Small(q), Small(r));
            }
        }
        let (q, r) = self.to_bigint().div_rem(&other.to_bigint());
        (Integer::from_big(q), Integer::from_big(r))
    }

    pub fn divides(&self, other: &Integer) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem_trunc(self).1.is_zero()
    }

    /// Nonnegative gcd.
    pub fn gcd(&self, other: &Integer) -> Integer {
        if let (Small(a), Small(b)) = (self, other) {
            let (mut x, mut y) = (a.unsigned_abs(), b.unsigned_abs());
            while y != 0 {
                let t = x % y;
                x = y;
                y = t;
            }
            return match i64::try_from(x) {
                Ok(v) => Small(v),
                Err(_) => Big(BigInt::from(x)),
            };
        }
        Integer::from_big(self.to_bigint().gcd(&other.to_bigint()))
    }

    /// Nonnegative lcm.
    pub fn lcm(&self, other: &Integer) -> Integer {
        if self.is_zero() || other.is_zero() {
            return Integer::ZERO;
        }
        let g = self.gcd(other);
        (self.div_exact(&g) * other).abs()
    }

    /// Extended gcd: returns `(g, x, y)` with `g = x*self + y*other`, `g >= 0`.
    pub fn extended_gcd(&self, other: &Integer) -> (Integer, Integer, Integer) {
        let (mut old_r, mut r) = (self.clone(), other.clone());
        let (mut old_s, mut s) = (Integer::ONE, Integer::ZERO);
        let (mut old_t, mut t) = (Integer::ZERO, Integer::ONE);
        while !r.is_zero() {
            let q = old_r.div_rem_trunc(&r).0;
            let nr = &old_r - &(&q * &r);
            old_r = std::mem::replace(&mut r, nr);
            let ns = &old_s - &(&q * &s);
            old_s = std::mem::replace(&mut s, ns);
            let nt = &old_t - &(&q * &t);
            old_t = std::mem::replace(&mut t, nt);
        }
        if old_r.is_negative() {
            (-old_r, -old_s, -old_t)
        } else {
            (old_r, old_s, old_t)
        }
    }

    pub fn pow(&self, exp: u32) -> Integer {
        let mut acc = Integer::ONE;
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl Default for Integer {
    fn default() -> Self {
        Integer::ZERO
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Small(v)
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Small(v as i64)
    }
}

impl From<usize> for Integer {
    fn from(v: usize) -> Self {
        match i64::try_from(v) {
            Ok(v) => Small(v),
            Err(_) => Big(BigInt::from(v)),
        }
    }
}

impl From<u64> for Integer {
    fn from(v: u64) -> Self {
        match i64::try_from(v) {
            Ok(v) => Small(v),
            Err(_) => Big(BigInt::from(v)),
        }
    }
}

impl From<BigInt> for Integer {
    fn from(b: BigInt) -> Self {
        Integer::from_big(b)
    }
}

impl From<&Integer> for BigInt {
    fn from(v: &Integer) -> Self {
        v.to_bigint()
    }
}

impl FromStr for Integer {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.parse::<i64>() {
            Ok(v) => Ok(Small(v)),
            Err(_) => s.parse::<BigInt>().map(Integer::from_big),
        }
    }
}

impl PartialEq for Integer {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Small(a), Small(b)) => a == b,
            (Big(a), Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Integer {}

impl PartialEq<i64> for Integer {
    fn eq(&self, other: &i64) -> bool {
        matches!(self, Small(a) if a == other)
    }
}

impl Hash for Integer {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Small(v) => {
                0u8.hash(state);
                v.hash(state)
            }
            Big(b) => {
                1u8.hash(state);
                b.hash(state)
            }
        }
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Small(a), Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Small(v) => fmt::Display::fmt(v, f),
            Big(b) => fmt::Display::fmt(b, f),
        }
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident, $big:tt) => {
        impl<'a> $trait<&'a Integer> for &'a Integer {
            type Output = Integer;

            fn $method(self, rhs: &'a Integer) -> Integer {
                if let (Small(a), Small(b)) = (self, rhs) {
                    if let Some(v) = a.$checked(*b) {
                        return Small(v);
                    }
                }
                Integer::from_big(self.to_bigint() $big rhs.to_bigint())
            }
        }

        impl $trait<Integer> for Integer {
            type Output = Integer;

            fn $method(self, rhs: Integer) -> Integer {
                (&self).$method(&rhs)
            }
        }

        impl<'a> $trait<&'a Integer> for Integer {
            type Output = Integer;

            fn $method(self, rhs: &'a Integer) -> Integer {
                (&self).$method(rhs)
            }
        }

        impl<'a> $trait<Integer> for &'a Integer {
            type Output = Integer;

            fn $method(self, rhs: Integer) -> Integer {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add, +);
binop!(Sub, sub, checked_sub, -);
binop!(Mul, mul, checked_mul, *);

impl AddAssign<&Integer> for Integer {
    fn add_assign(&mut self, rhs: &Integer) {
        *self = &*self + rhs;
    }
}

impl AddAssign for Integer {
    fn add_assign(&mut self, rhs: Integer) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Integer> for Integer {
    fn sub_assign(&mut self, rhs: &Integer) {
        *self = &*self - rhs;
    }
}

impl SubAssign for Integer {
    fn sub_assign(&mut self, rhs: Integer) {
        *self = &*self - &rhs;
    }
}

impl MulAssign<&Integer> for Integer {
    fn mul_assign(&mut self, rhs: &Integer) {
        *self = &*self * rhs;
    }
}

impl Neg for &Integer {
    type Output = Integer;

    fn neg(self) -> Integer {
        match self {
            Small(v) => match v.checked_neg() {
                Some(n) => Small(n),
                None => Big(-BigInt::from(*v)),
            },
            Big(b) => Integer::from_big(-b),
        }
    }
}

impl Neg for Integer {
    type Output = Integer;

    fn neg(self) -> Integer {
        -&self
    }
}

impl Zero for Integer {
    fn zero() -> Self {
        Integer::ZERO
    }

    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
}

impl One for Integer {
    fn one() -> Self {
        Integer::ONE
    }
}

impl Sum for Integer {
    fn sum<I: Iterator<Item = Integer>>(iter: I) -> Self {
        iter.fold(Integer::ZERO, |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Integer> for Integer {
    fn sum<I: Iterator<Item = &'a Integer>>(iter: I) -> Self {
        iter.fold(Integer::ZERO, |acc, x| acc + x)
    }
}

impl Product for Integer {
    fn product<I: Iterator<Item = Integer>>(iter: I) -> Self {
        iter.fold(Integer::ONE, |acc, x| acc * x)
    }
}

/// Shorthand for building integer vectors in tests and examples.
pub fn ivec(v: &[i64]) -> Vec<Integer> {
    v.iter().map(|&x| Integer::from(x)).collect()
}

/// Dot product of two equally long vectors.
pub fn dot(a: &[Integer], b: &[Integer]) -> Integer {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Integer::ZERO;
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// Gcd of all entries (0 for the zero vector).
pub fn content(v: &[Integer]) -> Integer {
    let mut g = Integer::ZERO;
    for x in v {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
    }
    g
}

/// Divides a vector by the gcd of its entries. The zero vector is returned unchanged.
pub fn make_primitive(v: &mut [Integer]) {
    let g = content(v);
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = x.div_exact(&g);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotes_on_overflow_and_demotes_back() {
        let big = Integer::from(i64::MAX) + Integer::from(1);
        assert!(!big.is_small());
        assert_eq!(big.to_string(), "9223372036854775808");
        let back = &big - &Integer::from(1);
        assert!(back.is_small());
        assert_eq!(back, Integer::from(i64::MAX));

        let sq = Integer::from(i64::MIN) * Integer::from(-1);
        assert_eq!(sq.to_bigint(), -BigInt::from(i64::MIN));
        assert_eq!((-Integer::from(i64::MIN)).to_string(), "9223372036854775808");
    }

    #[test]
    fn floor_division_signs() {
        let cases = [(7, 2), (-7, 2), (7, -2), (-7, -2), (6, 3), (-6, 3), (0, 5)];
        for (a, b) in cases {
            let (ia, ib) = (Integer::from(a), Integer::from(b));
            assert_eq!(ia.div_floor(&ib), Integer::from(num_integer::div_floor(a, b)));
            assert_eq!(ia.mod_floor(&ib), Integer::from(num_integer::mod_floor(a, b)));
        }
    }

    #[test]
    fn gcd_and_extended_gcd() {
        let a = Integer::from(240);
        let b = Integer::from(-46);
        let (g, x, y) = a.extended_gcd(&b);
        assert_eq!(g, Integer::from(2));
        assert_eq!(&x * &a + &y * &b, g);
        assert_eq!(a.gcd(&b), g);
        assert_eq!(Integer::from(4).lcm(&Integer::from(6)), Integer::from(12));
        assert_eq!(
            Integer::from(i64::MIN).gcd(&Integer::ZERO).to_string(),
            "9223372036854775808"
        );
    }

    #[test]
    fn primitive_vectors() {
        let mut v = ivec(&[4, -6, 0]);
        make_primitive(&mut v);
        assert_eq!(v, ivec(&[2, -3, 0]));
    }

    proptest::proptest! {
        #[test]
        fn matches_bigint_arithmetic(a in proptest::num::i64::ANY, b in proptest::num::i64::ANY) {
            let (ia, ib) = (Integer::from(a), Integer::from(b));
            let (ba, bb) = (BigInt::from(a), BigInt::from(b));
            proptest::prop_assert_eq!((&ia + &ib).to_bigint(), &ba + &bb);
            proptest::prop_assert_eq!((&ia - &ib).to_bigint(), &ba - &bb);
            let prod = &ia * &ib;
            proptest::prop_assert_eq!(prod.to_bigint(), &ba * &bb);
            proptest::prop_assert_eq!(prod.is_small(), (&ba * &bb).to_i64().is_some());
            if b != 0 {
                proptest::prop_assert_eq!(ia.div_floor(&ib).to_bigint(), ba.div_floor(&bb));
                proptest::prop_assert_eq!(ia.mod_floor(&ib).to_bigint(), ba.mod_floor(&bb));
            }
        }
    }
}
