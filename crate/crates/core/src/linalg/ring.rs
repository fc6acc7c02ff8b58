use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact scalar. Integers and prime-field representatives are stored with
/// denominator one; every scalar held by a [`crate::linalg::Matrix`] is in
/// the canonical form of its ring.
pub type Scalar = BigRational;

/// The base ring of a computation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Rationals,
    PrimeField(u64),
    Integers,
}

fn is_prime(p: u64) -> bool {
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

impl RingSpec {
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(RingSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, RingSpec::Integers)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            RingSpec::PrimeField(p) => *p,
            _ => 0,
        }
    }

    pub fn ensure_same(&self, other: &RingSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.clone(),
                right: other.clone(),
            })
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.reduce_int(BigInt::from(v))
    }

    fn reduce_int(&self, v: BigInt) -> Scalar {
        match self {
            RingSpec::PrimeField(p) => Scalar::from_integer(v.mod_floor(&BigInt::from(*p))),
            _ => Scalar::from_integer(v),
        }
    }

    /// Brings an arbitrary rational into canonical form, failing when the
    /// value does not live in the ring (a fraction over the integers, or a
    /// denominator divisible by p).
    pub fn canonical(&self, v: Scalar) -> Result<Scalar> {
        match self {
            RingSpec::Rationals => Ok(v),
            RingSpec::Integers => {
                if v.is_integer() {
                    Ok(v)
                } else {
                    Err(Error::NotInRing {
                        value: v.to_string(),
                        ring: self.clone(),
                    })
                }
            }
            RingSpec::PrimeField(p) => {
                let pb = BigInt::from(*p);
                let den = v.denom().mod_floor(&pb);
                if den.is_zero() {
                    return Err(Error::NotInRing {
                        value: v.to_string(),
                        ring: self.clone(),
                    });
                }
                let inv = mod_inverse(&den, &pb).expect("p is prime");
                Ok(Scalar::from_integer((v.numer() * inv).mod_floor(&pb)))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            RingSpec::PrimeField(p) => {
                let s = a.numer() + b.numer();
                let pb = BigInt::from(*p);
                Scalar::from_integer(if s >= pb { s - pb } else { s })
            }
            _ => a + b,
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            RingSpec::PrimeField(p) => {
                let s = a.numer() - b.numer();
                Scalar::from_integer(if s.is_negative() {
                    s + BigInt::from(*p)
                } else {
                    s
                })
            }
            _ => a - b,
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            RingSpec::PrimeField(p) => {
                Scalar::from_integer((a.numer() * b.numer()).mod_floor(&BigInt::from(*p)))
            }
            _ => a * b,
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            RingSpec::PrimeField(p) => {
                if a.is_zero() {
                    a.clone()
                } else {
                    Scalar::from_integer(BigInt::from(*p) - a.numer())
                }
            }
            _ => -a,
        }
    }

    /// Multiplicative inverse when it exists in the ring.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            RingSpec::Rationals => Some(a.recip()),
            RingSpec::Integers => {
                if a.is_one() || (-a).is_one() {
                    Some(a.clone())
                } else {
                    None
                }
            }
            RingSpec::PrimeField(p) => {
                mod_inverse(a.numer(), &BigInt::from(*p)).map(Scalar::from_integer)
            }
        }
    }

    pub fn is_unit(&self, a: &Scalar) -> bool {
        self.inv(a).is_some()
    }

    /// `(-1)^k` in the ring.
    pub fn sign(&self, k: i64) -> Scalar {
        if k.rem_euclid(2) == 0 {
            self.one()
        } else {
            self.neg(&self.one())
        }
    }
}

pub(crate) fn mod_inverse(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let g = a.extended_gcd(p);
    if g.gcd.is_one() {
        Some(g.x.mod_floor(p))
    } else {
        None
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Rationals => write!(f, "Q"),
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

impl std::str::FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" => Ok(RingSpec::Rationals),
            "Z" => Ok(RingSpec::Integers),
            _ => {
                let p = s
                    .strip_prefix('F')
                    .and_then(|t| t.parse::<u64>().ok())
                    .ok_or_else(|| Error::shape(format!("unknown ring `{s}`")))?;
                RingSpec::prime_field(p)
            }
        }
    }
}
