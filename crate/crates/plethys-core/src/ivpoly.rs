//! The ring of integer-valued polynomials over Z in the binomial basis.
//!
//! An element is a finite integer combination `sum c_n * C(X,n)` of the
//! binomial-coefficient polynomials `C(X,n) = X(X-1)...(X-n+1)/n!`. The ring
//! of rational polynomials mapping Z into Z is free on this basis, so
//! membership and equality are coefficient checks, and conversion from the
//! monomial basis is a forward-difference transform.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ratpoly::RatPoly;
use crate::Rat;

/// Default cap on the degree of a composition `f(g(X))`.
pub const DEFAULT_COMPOSE_CAP: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IvPolyError {
    /// The rational polynomial takes a non-integer value at the witness.
    NotIntegerValued { witness: BigInt },
    /// A composition would exceed the configured degree cap.
    DegreeExceeded { degree: usize, cap: usize },
}

impl fmt::Display for IvPolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IvPolyError::NotIntegerValued { witness } => {
                write!(f, "not integer-valued: non-integer value at X = {}", witness)
            }
            IvPolyError::DegreeExceeded { degree, cap } => {
                write!(f, "composed degree {} exceeds cap {}", degree, cap)
            }
        }
    }
}

impl core::error::Error for IvPolyError {}

/// `C(a, n)` for an arbitrary integer `a`, by the product formula; every
/// intermediate division is exact, so no rationals appear.
pub fn binom_int(a: &BigInt, n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 0..n {
        acc *= a - BigInt::from(k);
        let (q, r) = num_integer::Integer::div_rem(&acc, &BigInt::from(k + 1));
        debug_assert!(r.is_zero(), "binomial product division must be exact");
        acc = q;
    }
    acc
}

/// `[C(a,0), C(a,1), ..., C(a,max)]`.
pub fn binom_row(a: &BigInt, max: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(max + 1);
    let mut acc = BigInt::one();
    row.push(acc.clone());
    for k in 0..max {
        acc *= a - BigInt::from(k);
        let (q, r) = num_integer::Integer::div_rem(&acc, &BigInt::from(k + 1));
        debug_assert!(r.is_zero());
        acc = q;
        row.push(acc.clone());
    }
    row
}

/// In-place forward-difference transform: on return `values[k]` is the k-th
/// forward difference at 0, i.e. the coefficient of `C(X,k)` in the
/// interpolating polynomial.
pub fn forward_differences<T>(values: &mut [T])
where
    T: Clone,
    for<'a> &'a T: Sub<&'a T, Output = T>,
{
    let n = values.len();
    for level in 1..n {
        for i in (level..n).rev() {
            values[i] = &values[i] - &values[i - 1];
        }
    }
}

/// An element of Int(Z): a finite map degree -> nonzero integer coefficient
/// in the binomial basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IvPoly {
    coeffs: BTreeMap<usize, BigInt>,
}

impl IvPoly {
    pub fn zero() -> Self {
        IvPoly::default()
    }

    pub fn one() -> Self {
        IvPoly::constant(BigInt::one())
    }

    /// The plethory unit `X = C(X,1)`.
    pub fn x() -> Self {
        IvPoly::binomial(1)
    }

    pub fn constant(c: BigInt) -> Self {
        IvPoly::from_coeffs([(0usize, c)])
    }

    /// The basis element `C(X,n)`.
    pub fn binomial(n: usize) -> Self {
        IvPoly::from_coeffs([(n, BigInt::one())])
    }

    pub fn from_coeffs<I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = (usize, BigInt)>,
    {
        let mut map = BTreeMap::new();
        for (n, c) in coeffs {
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(n).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                map.remove(&n);
            }
        }
        IvPoly { coeffs: map }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(&n).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, BigInt> {
        &self.coeffs
    }

    /// Exact evaluation at an integer, via the binomial product formula; no
    /// rational intermediates.
    pub fn eval_int(&self, a: &BigInt) -> BigInt {
        if self.coeffs.is_empty() {
            return BigInt::zero();
        }
        let row = binom_row(a, self.degree());
        let mut acc = BigInt::zero();
        for (n, c) in &self.coeffs {
            acc += c * &row[*n];
        }
        acc
    }

    /// Converts a rational polynomial into the binomial basis.
    ///
    /// The coefficients are the forward differences of the values
    /// `f(0), ..., f(deg f)`; they are all integers exactly when `f` maps Z
    /// into Z. On failure the witness is the smallest non-negative integer
    /// where `f` takes a non-integer value (one always exists in
    /// `0..=deg f`).
    pub fn from_rational_poly(f: &RatPoly) -> Result<IvPoly, IvPolyError> {
        if f.is_zero() {
            return Ok(IvPoly::zero());
        }
        let d = f.degree();
        // clear denominators once; f(a) is an integer iff lcm | (lcm*f)(a)
        let mut lcm = BigInt::one();
        for c in f.coeffs() {
            lcm = num_integer::Integer::lcm(&lcm, c.denom());
        }
        let scaled: Vec<BigInt> = f
            .coeffs()
            .iter()
            .map(|c| (c * Rat::from(lcm.clone())).to_integer())
            .collect();
        let mut values: Vec<BigInt> = Vec::with_capacity(d + 1);
        for a in 0..=d {
            let a = BigInt::from(a);
            let mut acc = BigInt::zero();
            for c in scaled.iter().rev() {
                acc = acc * &a + c;
            }
            let (q, r) = num_integer::Integer::div_rem(&acc, &lcm);
            if !r.is_zero() {
                return Err(IvPolyError::NotIntegerValued { witness: a });
            }
            values.push(q);
        }
        forward_differences(&mut values);
        // integer values have integer differences
        Ok(IvPoly::from_coeffs(values.into_iter().enumerate()))
    }

    /// Expands into the monomial basis over Q. Exact inverse of
    /// [`IvPoly::from_rational_poly`].
    pub fn to_rational_poly(&self) -> RatPoly {
        let mut acc = RatPoly::zero();
        // falling-factorial polynomials X(X-1)...(X-n+1)/n!, built incrementally
        let mut basis = RatPoly::one();
        let mut last_deg = 0usize;
        for (n, c) in &self.coeffs {
            while last_deg < *n {
                let shift = RatPoly::from_coeffs(vec![
                    Rat::from(-BigInt::from(last_deg)),
                    Rat::one(),
                ]);
                basis = &basis * &shift;
                last_deg += 1;
                basis = basis.scale(&Rat::new(BigInt::one(), BigInt::from(last_deg)));
            }
            acc = &acc + &basis.scale(&Rat::from(c.clone()));
        }
        acc
    }

    /// Product in Int(Z), computed by evaluating on `0..=deg f + deg g` and
    /// reconstructing through forward differences. Closure under
    /// multiplication makes every output coefficient an integer.
    pub fn mul_iv(&self, other: &IvPoly) -> IvPoly {
        if self.is_zero() || other.is_zero() {
            return IvPoly::zero();
        }
        let d = self.degree() + other.degree();
        let mut values: Vec<BigInt> = (0..=d)
            .map(|a| {
                let a = BigInt::from(a);
                self.eval_int(&a) * other.eval_int(&a)
            })
            .collect();
        forward_differences(&mut values);
        IvPoly::from_coeffs(values.into_iter().enumerate())
    }

    /// `f(g(X))` with the default degree cap.
    pub fn compose(&self, g: &IvPoly) -> Result<IvPoly, IvPolyError> {
        self.compose_capped(g, DEFAULT_COMPOSE_CAP)
    }

    /// `f(g(X))`. Int(Z) is closed under composition, so the result always
    /// has integer coefficients; the cap only bounds the work.
    pub fn compose_capped(&self, g: &IvPoly, cap: usize) -> Result<IvPoly, IvPolyError> {
        if self.degree() == 0 {
            // constant (or zero) outer polynomial
            return Ok(IvPoly::constant(self.coeff(0)));
        }
        if g.degree() == 0 {
            return Ok(IvPoly::constant(self.eval_int(&g.coeff(0))));
        }
        let d = self.degree().saturating_mul(g.degree());
        if d > cap {
            return Err(IvPolyError::DegreeExceeded { degree: d, cap });
        }
        let mut values: Vec<BigInt> = (0..=d)
            .map(|a| self.eval_int(&g.eval_int(&BigInt::from(a))))
            .collect();
        forward_differences(&mut values);
        Ok(IvPoly::from_coeffs(values.into_iter().enumerate()))
    }

    /// Drops all coefficients above degree `d`.
    pub fn truncate(&self, d: usize) -> IvPoly {
        IvPoly {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(n, _)| **n <= d)
                .map(|(n, c)| (*n, c.clone()))
                .collect(),
        }
    }
}

impl Add for &IvPoly {
    type Output = IvPoly;
    fn add(self, rhs: &IvPoly) -> IvPoly {
        let mut out = self.clone();
        for (n, c) in &rhs.coeffs {
            let entry = out.coeffs.entry(*n).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                out.coeffs.remove(n);
            }
        }
        out
    }
}

impl Sub for &IvPoly {
    type Output = IvPoly;
    fn sub(self, rhs: &IvPoly) -> IvPoly {
        self + &(-rhs)
    }
}

impl Neg for &IvPoly {
    type Output = IvPoly;
    fn neg(self) -> IvPoly {
        IvPoly {
            coeffs: self.coeffs.iter().map(|(n, c)| (*n, -c.clone())).collect(),
        }
    }
}

impl Mul for &IvPoly {
    type Output = IvPoly;
    fn mul(self, rhs: &IvPoly) -> IvPoly {
        self.mul_iv(rhs)
    }
}

impl fmt::Display for IvPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{}", c)?,
                _ => write!(f, "{}*C(X,{})", c, n)?,
            }
        }
        Ok(())
    }
}
