//! Scalars in the prime field GF(p).

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("modulus {p} is not prime")));
    }
    if p > (1 << 31) {
        return Err(Error::Precondition(format!("modulus {p} too large")));
    }
    Ok(())
}

/// An element of GF(p), stored reduced.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FieldScalar {
    value: u64,
    modulus: u64,
}

impl FieldScalar {
    pub fn new(value: u64, modulus: u64) -> Result<Self> {
        check_prime(modulus)?;
        Ok(FieldScalar { value: value % modulus, modulus })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn add(&self, other: &FieldScalar) -> Result<FieldScalar> {
        self.check(other)?;
        Ok(FieldScalar { value: (self.value + other.value) % self.modulus, modulus: self.modulus })
    }

    pub fn mul(&self, other: &FieldScalar) -> Result<FieldScalar> {
        self.check(other)?;
        Ok(FieldScalar { value: (self.value * other.value) % self.modulus, modulus: self.modulus })
    }

    pub fn neg(&self) -> FieldScalar {
        FieldScalar { value: neg_mod(self.value, self.modulus), modulus: self.modulus }
    }

    pub fn inv(&self) -> Result<FieldScalar> {
        if self.value == 0 {
            return Err(Error::Precondition("inverse of zero in GF(p)".into()));
        }
        Ok(FieldScalar { value: inv_mod(self.value, self.modulus), modulus: self.modulus })
    }

    fn check(&self, other: &FieldScalar) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(())
    }
}

pub(crate) fn neg_mod(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

/// Inverse mod prime p by Fermat's little theorem.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    base %= p;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
