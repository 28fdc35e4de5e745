//! Exact scalar types and the runtime field selector.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_traits::{FromPrimitive, Num, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, SparseMatrix};

/// Element of the prime field GF(P).
///
/// `P` must be prime; this is checked when a `FieldSpec` is constructed, the
/// type itself only asserts it in debug builds.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        debug_assert!(P >= 2);
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Self {
        assert!(self.0 != 0, "division by zero in GF({P})");
        self.pow(P - 2)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl<const P: u64> Rem for Fp<P> {
    type Output = Self;
    fn rem(self, _rhs: Self) -> Self {
        // every nonzero element is a unit
        Self::zero()
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> std::result::Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Fp::new)
    }
}

impl<const P: u64> FromPrimitive for Fp<P> {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Fp::new(n))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(Fp(n % P))
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Calls `$body` with `$t` bound to the `Fp` type of the runtime prime `$p`.
macro_rules! with_prime_field {
    ($p:expr, $t:ident => $body:expr, $fallback:expr) => {
        match $p {
            2 => { type $t = Fp<2>; $body }
            3 => { type $t = Fp<3>; $body }
            5 => { type $t = Fp<5>; $body }
            7 => { type $t = Fp<7>; $body }
            11 => { type $t = Fp<11>; $body }
            13 => { type $t = Fp<13>; $body }
            17 => { type $t = Fp<17>; $body }
            19 => { type $t = Fp<19>; $body }
            23 => { type $t = Fp<23>; $body }
            29 => { type $t = Fp<29>; $body }
            31 => { type $t = Fp<31>; $body }
            37 => { type $t = Fp<37>; $body }
            41 => { type $t = Fp<41>; $body }
            43 => { type $t = Fp<43>; $body }
            47 => { type $t = Fp<47>; $body }
            53 => { type $t = Fp<53>; $body }
            59 => { type $t = Fp<59>; $body }
            61 => { type $t = Fp<61>; $body }
            67 => { type $t = Fp<67>; $body }
            71 => { type $t = Fp<71>; $body }
            73 => { type $t = Fp<73>; $body }
            79 => { type $t = Fp<79>; $body }
            83 => { type $t = Fp<83>; $body }
            89 => { type $t = Fp<89>; $body }
            97 => { type $t = Fp<97>; $body }
            101 => { type $t = Fp<101>; $body }
            103 => { type $t = Fp<103>; $body }
            107 => { type $t = Fp<107>; $body }
            109 => { type $t = Fp<109>; $body }
            113 => { type $t = Fp<113>; $body }
            127 => { type $t = Fp<127>; $body }
            251 => { type $t = Fp<251>; $body }
            257 => { type $t = Fp<257>; $body }
            32003 => { type $t = Fp<32003>; $body }
            65521 => { type $t = Fp<65521>; $body }
            2147483647 => { type $t = Fp<2147483647>; $body }
            _ => $fallback,
        }
    };
}

/// Prime characteristics accepted by [`FieldSpec::prime`].
pub const SUPPORTED_PRIMES: &[u64] = &[
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 251, 257, 32003, 65521, 2147483647,
];

/// Base field of a Betti computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        if !SUPPORTED_PRIMES.contains(&p) {
            return Err(Error::UnsupportedField(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p,
        }
    }

    /// The default verdict pair: the rationals and GF(2).
    pub fn default_pair() -> [FieldSpec; 2] {
        [FieldSpec::Rationals, FieldSpec::PrimeField(2)]
    }

    /// Exact rank of an integer matrix over this field.
    ///
    /// Over the rationals the rank is computed by fraction-free elimination,
    /// using `i128` when the Hadamard bound proves it cannot overflow and
    /// arbitrary precision otherwise.
    pub fn rank(self, m: &SparseMatrix) -> Result<usize> {
        match self {
            FieldSpec::Rationals => {
                if linalg::hadamard_fits_i64(m) {
                    Ok(linalg::rank_fraction_free::<i128>(m))
                } else {
                    Ok(linalg::rank_fraction_free::<num_bigint::BigInt>(m))
                }
            }
            FieldSpec::PrimeField(p) => with_prime_field!(
                p,
                F => Ok(linalg::rank_over_field::<F>(m)),
                Err(Error::UnsupportedField(p))
            ),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q`, `QQ`, `GF:p`, `GFp` and `GF(p)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("qq") {
            return Ok(FieldSpec::Rationals);
        }
        let upper = t.to_ascii_uppercase();
        let rest = upper
            .strip_prefix("GF")
            .ok_or_else(|| Error::input(format!("unknown field `{s}`")))?;
        let digits = rest
            .trim_start_matches(':')
            .trim_start_matches('(')
            .trim_end_matches(')');
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::input(format!("unknown field `{s}`")))?;
        FieldSpec::prime(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
