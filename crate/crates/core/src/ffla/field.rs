use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The field `F_p` of residues modulo a prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn f2() -> Self {
        PrimeField { p: 2 }
    }

    pub fn p(self) -> u32 {
        self.p
    }

    /// Number of elements of `F_p^n`, or `None` on overflow.
    pub fn count(self, n: usize) -> Option<u64> {
        u32::try_from(n).ok().and_then(|n| u64::from(self.p).checked_pow(n))
    }

    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(i64::from(self.p)) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        ((u64::from(a) + u64::from(b)) % u64::from(self.p)) as u32
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        (u64::from(a) * u64::from(b) % u64::from(self.p)) as u32
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        (!a.is_multiple_of(self.p)).then(|| self.pow(a, u64::from(self.p) - 2))
    }

    /// The vector of `F_p^n` with index `k` in base-`p` little-endian order.
    pub fn vector(self, n: usize, mut k: u64) -> Vec<u32> {
        let p = u64::from(self.p);
        (0..n)
            .map(|_| {
                let d = (k % p) as u32;
                k /= p;
                d
            })
            .collect()
    }
}

impl TryFrom<u32> for PrimeField {
    type Error = Error;

    fn try_from(p: u32) -> Result<Self> {
        PrimeField::new(p)
    }
}

impl From<PrimeField> for u32 {
    fn from(f: PrimeField) -> u32 {
        f.p
    }
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.p)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = u64::from(p);
    (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_is_checked() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(7919).is_ok());
        for n in [0, 1, 4, 9, 91] {
            assert!(matches!(PrimeField::new(n), Err(Error::NotPrime(m)) if m == n));
        }
    }

    #[test]
    fn inverses_mod_seven() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
        assert_eq!(f.inv(0), None);
        assert_eq!(f.reduce(-1), 6);
    }
}
