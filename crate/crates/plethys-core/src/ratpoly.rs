//! Dense univariate polynomials over the rationals.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::Rat;

/// A univariate polynomial with exact rational coefficients, stored densely
/// by degree. The trailing coefficient is nonzero unless the polynomial is
/// zero, so `coeffs.len() - 1` is the degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rat::one())
    }

    /// The polynomial `X`.
    pub fn x() -> Self {
        RatPoly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        RatPoly::from_coeffs(vec![c])
    }

    /// `c * X^deg`.
    pub fn monomial(deg: usize, c: Rat) -> Self {
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        RatPoly::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients indexed by degree, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the convention that the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, a: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c;
        }
        acc
    }

    pub fn eval_int(&self, a: &BigInt) -> Rat {
        self.eval(&Rat::from(a.clone()))
    }

    /// `f(g(X))` by Horner's rule over polynomials.
    pub fn compose(&self, g: &RatPoly) -> RatPoly {
        let mut acc = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &RatPoly::constant(c.clone());
        }
        acc
    }

    /// `f(cX)`: scales the degree-`k` coefficient by `c^k`.
    pub fn scale_arg(&self, c: &Rat) -> RatPoly {
        let mut pow = Rat::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a * &pow;
                pow = &pow * c;
                out
            })
            .collect();
        RatPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        RatPoly::from_coeffs(coeffs)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        RatPoly::from_coeffs(coeffs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})*X", c)?,
                _ => write!(f, "({})*X^{}", c, k)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn eval_examples() {
        // X^2 - 1 at 3
        let f = RatPoly::from_coeffs(vec![rat(-1, 1), rat(0, 1), rat(1, 1)]);
        assert_eq!(f.eval(&rat(3, 1)), rat(8, 1));
        // zero polynomial at 7
        assert_eq!(RatPoly::zero().eval(&rat(7, 1)), rat(0, 1));
        // X/2 at 1/3
        let g = RatPoly::from_coeffs(vec![rat(0, 1), rat(1, 2)]);
        assert_eq!(g.eval(&rat(1, 3)), rat(1, 6));
    }

    #[test]
    fn compose_and_scale_arg() {
        // f = X^2, g = X + 1  =>  f(g) = X^2 + 2X + 1
        let f = RatPoly::monomial(2, rat(1, 1));
        let g = RatPoly::from_coeffs(vec![rat(1, 1), rat(1, 1)]);
        assert_eq!(
            f.compose(&g),
            RatPoly::from_coeffs(vec![rat(1, 1), rat(2, 1), rat(1, 1)])
        );
        assert_eq!(
            g.scale_arg(&rat(3, 1)),
            RatPoly::from_coeffs(vec![rat(1, 1), rat(3, 1)])
        );
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        // all arithmetic is exact: no precision parameter exists anywhere here
        #[test]
        fn rational_arithmetic_is_exact(a in arb_rat(), b in arb_rat()) {
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&(&a * &b) / &b, a);
            }
        }

        #[test]
        fn eval_is_ring_hom(
            f in proptest::collection::vec(arb_rat(), 0..6),
            g in proptest::collection::vec(arb_rat(), 0..6),
            a in arb_rat(),
        ) {
            let f = RatPoly::from_coeffs(f);
            let g = RatPoly::from_coeffs(g);
            prop_assert_eq!((&f + &g).eval(&a), f.eval(&a) + g.eval(&a));
            prop_assert_eq!((&f * &g).eval(&a), f.eval(&a) * g.eval(&a));
        }
    }

}
