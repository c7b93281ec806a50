use std::fmt;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const MAX_PRIME: u64 = 1 << 31;

/// A coefficient field: the rationals (characteristic 0) or GF(p) for a prime p < 2^31.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    characteristic: u32,
}

impl Field {
    pub const RATIONAL: Field = Field { characteristic: 0 };
    pub const GF2: Field = Field { characteristic: 2 };
    pub const GF3: Field = Field { characteristic: 3 };

    pub fn new(characteristic: u64) -> Result<Field> {
        if characteristic == 0 {
            return Ok(Field::RATIONAL);
        }
        if characteristic >= MAX_PRIME || !is_prime(characteristic) {
            return Err(Error::InvalidField(characteristic));
        }
        Ok(Field {
            characteristic: characteristic as u32,
        })
    }

    pub fn characteristic(self) -> u64 {
        self.characteristic as u64
    }

    pub fn is_rational(self) -> bool {
        self.characteristic == 0
    }

    /// Map an integer into the field.
    pub fn scalar_from_i64(self, v: i64) -> Scalar {
        if self.is_rational() {
            Scalar::Rational(BigRational::from_integer(BigInt::from(v)))
        } else {
            Scalar::Residue(v.rem_euclid(self.characteristic as i64) as u32)
        }
    }

    /// Bring a scalar into this field, reducing rationals modulo p if needed.
    pub fn coerce(self, s: &Scalar) -> Result<Scalar> {
        match (self.is_rational(), s) {
            (true, Scalar::Rational(_)) => Ok(s.clone()),
            (true, Scalar::Residue(r)) => Err(Error::FieldMismatch(
                format!("residue {r}"),
                self.to_string(),
            )),
            (false, Scalar::Residue(r)) => {
                if (*r as u64) < self.characteristic() {
                    Ok(s.clone())
                } else {
                    Err(Error::ShapeError(format!(
                        "residue {r} is not reduced modulo {}",
                        self.characteristic
                    )))
                }
            }
            (false, Scalar::Rational(q)) => {
                let p = BigInt::from(self.characteristic);
                let num = mod_big(q.numer(), &p);
                let den = mod_big(q.denom(), &p);
                if den == 0 {
                    return Err(Error::FieldMismatch(
                        format!("rational {q}"),
                        self.to_string(),
                    ));
                }
                let inv = pow_mod(den, self.characteristic() - 2, self.characteristic());
                Ok(Scalar::Residue(
                    ((num * inv) % self.characteristic()) as u32,
                ))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "Q")
        } else {
            write!(f, "GF({})", self.characteristic)
        }
    }
}

/// A single field element, tagged by representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Residue(u32),
    Rational(BigRational),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Residue(r) => *r == 0,
            Scalar::Rational(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Residue(r) => *r == 1,
            Scalar::Rational(q) => q.is_one(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Residue(r) => write!(f, "{r}"),
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

fn mod_big(v: &BigInt, p: &BigInt) -> u64 {
    let mut r = v % p;
    if r.is_negative() {
        r += p;
    }
    r.to_u64().expect("residue fits in u64")
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
