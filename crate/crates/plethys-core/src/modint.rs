//! Residue-ring elements with an explicit modulus.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

/// An element of Z/m, stored reduced to `[0, m)`. The modulus is at least 2.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ModInt {
    modulus: BigInt,
    value: BigInt,
}

/// Mathematical remainder in `[0, m)` for `m > 0`.
pub fn reduce_mod(value: &BigInt, modulus: &BigInt) -> BigInt {
    let r = value % modulus;
    if r.is_zero() || r.sign() != num_bigint::Sign::Minus {
        r
    } else {
        r + modulus
    }
}

impl ModInt {
    pub fn new(value: BigInt, modulus: BigInt) -> Self {
        assert!(modulus >= BigInt::from(2), "modulus must be at least 2");
        let value = reduce_mod(&value, &modulus);
        ModInt { modulus, value }
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    fn check_compatible(&self, other: &ModInt) {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
    }
}

impl Add for &ModInt {
    type Output = ModInt;
    fn add(self, rhs: &ModInt) -> ModInt {
        self.check_compatible(rhs);
        ModInt::new(&self.value + &rhs.value, self.modulus.clone())
    }
}

impl Sub for &ModInt {
    type Output = ModInt;
    fn sub(self, rhs: &ModInt) -> ModInt {
        self.check_compatible(rhs);
        ModInt::new(&self.value - &rhs.value, self.modulus.clone())
    }
}

impl Mul for &ModInt {
    type Output = ModInt;
    fn mul(self, rhs: &ModInt) -> ModInt {
        self.check_compatible(rhs);
        ModInt::new(&self.value * &rhs.value, self.modulus.clone())
    }
}

impl Neg for &ModInt {
    type Output = ModInt;
    fn neg(self) -> ModInt {
        ModInt::new(-self.value.clone(), self.modulus.clone())
    }
}

impl fmt::Display for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_handles_negatives() {
        let m = BigInt::from(7);
        assert_eq!(*ModInt::new(BigInt::from(-1), m.clone()).value(), BigInt::from(6));
        assert_eq!(*ModInt::new(BigInt::from(14), m.clone()).value(), BigInt::from(0));
        let a = ModInt::new(BigInt::from(5), m.clone());
        let b = ModInt::new(BigInt::from(4), m);
        assert_eq!(*(&a * &b).value(), BigInt::from(6));
        assert_eq!(*(&a - &b).value(), BigInt::from(1));
    }
}
