//! Exact scalar fields: arbitrary-precision rationals and the small prime
//! fields `F_2, F_3, F_5, F_7`.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which exact field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

pub const SUPPORTED_PRIMES: [u32; 4] = [2, 3, 5, 7];

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        if SUPPORTED_PRIMES.contains(&p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::InvalidPrime(p))
        }
    }

    /// `0` for the rationals.
    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Command-line token: `q`, `f2`, `f3`, ...
    pub fn token(&self) -> String {
        match self {
            FieldSpec::Rationals => "q".into(),
            FieldSpec::Prime(p) => format!("f{p}"),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "q" | "Q" => Ok(FieldSpec::Rationals),
            _ => {
                let p = s
                    .strip_prefix('f')
                    .or_else(|| s.strip_prefix('F'))
                    .and_then(|r| r.parse::<u32>().ok())
                    .ok_or_else(|| Error::Usage(format!("unknown field `{s}`")))?;
                FieldSpec::prime(p)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

/// An exact field. Every matrix and map in the crate is generic over this.
pub trait ExactField:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + 'static
{
    fn from_i64(v: i64) -> Self;

    fn field_spec() -> FieldSpec;

    /// `None` for zero.
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    /// Text form used by the matrix export format.
    fn render(&self) -> String;

    /// Rank of the span of the given sparse vectors, each sorted by index
    /// with nonzero entries.
    fn rank_of_vectors(vectors: &[Vec<(usize, Self)>]) -> usize {
        crate::linalg::echelon_rank(vectors)
    }
}

pub type Q = BigRational;

impl ExactField for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn field_spec() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn render(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }

    fn rank_of_vectors(vectors: &[Vec<(usize, Self)>]) -> usize {
        crate::linalg::fraction_free_rank(vectors)
    }
}

/// Residue class modulo the prime `P`, stored in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    const VALID: () = assert!(P == 2 || P == 3 || P == 5 || P == 7);

    pub fn new(v: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::VALID;
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(&self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {P})", self.0)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp((self.0 * rhs.0) % P)
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "division by zero in F_{P}");
        // Fermat: a^(P-2) = a^-1
        self * rhs.pow(P - 2)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> ExactField for Fp<P> {
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }

    fn field_spec() -> FieldSpec {
        FieldSpec::Prime(P)
    }

    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn render(&self) -> String {
        self.0.to_string()
    }
}

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;

/// Reduce a rational modulo `P`.
pub fn rational_mod<const P: u32>(q: &BigRational) -> Result<Fp<P>> {
    let p = BigInt::from(P);
    let den = q.denom().mod_floor_big(&p);
    if den.is_zero() {
        return Err(Error::DenominatorDivisible {
            den: q.denom().to_string(),
            p: P,
        });
    }
    let num = q.numer().mod_floor_big(&p);
    let num = Fp::<P>::new(to_i64(&num));
    let den = Fp::<P>::new(to_i64(&den));
    Ok(num / den)
}

trait ModFloorBig {
    fn mod_floor_big(&self, m: &BigInt) -> BigInt;
}

impl ModFloorBig for BigInt {
    fn mod_floor_big(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

fn to_i64(v: &BigInt) -> i64 {
    i64::try_from(v).expect("residue fits in i64")
}

/// Run a generic body with `$F` bound to the scalar type selected by a
/// runtime [`FieldSpec`].
#[macro_export]
macro_rules! with_field {
    ($spec:expr, $F:ident => $body:expr) => {
        match $spec {
            $crate::FieldSpec::Rationals => {
                type $F = $crate::Q;
                $body
            }
            $crate::FieldSpec::Prime(2) => {
                type $F = $crate::F2;
                $body
            }
            $crate::FieldSpec::Prime(3) => {
                type $F = $crate::F3;
                $body
            }
            $crate::FieldSpec::Prime(5) => {
                type $F = $crate::F5;
                $body
            }
            $crate::FieldSpec::Prime(7) => {
                type $F = $crate::F7;
                $body
            }
            $crate::FieldSpec::Prime(p) => panic!("unsupported prime {p}"),
        }
    };
}
