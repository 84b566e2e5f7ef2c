//! Sparse multivariate polynomials over the rationals.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::ratpoly::RatPoly;
use crate::Rat;

/// A polynomial in `arity` variables, stored as a map from exponent tuples to
/// nonzero rational coefficients. All exponent tuples have length `arity`.
///
/// The internal map is ordered lexicographically; the globally fixed term
/// order for serialization and display is graded lexicographic, exposed by
/// [`MultiRatPoly::terms_graded_lex`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiRatPoly {
    arity: usize,
    terms: BTreeMap<Vec<usize>, Rat>,
}

impl MultiRatPoly {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "arity must be positive");
        MultiRatPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rat) -> Self {
        let mut p = MultiRatPoly::zero(arity);
        p.add_term(alloc::vec![0; arity], c);
        p
    }

    /// The variable `X_i` (0-based).
    pub fn variable(arity: usize, i: usize) -> Self {
        assert!(i < arity);
        let mut exp = alloc::vec![0; arity];
        exp[i] = 1;
        let mut p = MultiRatPoly::zero(arity);
        p.add_term(exp, Rat::one());
        p
    }

    /// Accumulates `c * X^exp`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, exp: Vec<usize>, c: Rat) {
        assert_eq!(exp.len(), self.arity, "exponent tuple length != arity");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded lexicographic order (total degree first, then lex).
    pub fn terms_graded_lex(&self) -> Vec<(&Vec<usize>, &Rat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(e1, _), (e2, _)| {
            let d1: usize = e1.iter().sum();
            let d2: usize = e2.iter().sum();
            match d1.cmp(&d2) {
                Ordering::Equal => e1.cmp(e2),
                o => o,
            }
        });
        v
    }

    /// Largest exponent of variable `i` over all terms.
    pub fn degree_in(&self, i: usize) -> usize {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.arity);
        let mut acc = Rat::zero();
        for (exp, c) in &self.terms {
            let mut t = c.clone();
            for (e, a) in exp.iter().zip(point) {
                for _ in 0..*e {
                    t = &t * a;
                }
            }
            acc += t;
        }
        acc
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&alloc::vec![0; self.arity])
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> MultiRatPoly {
        let mut out = MultiRatPoly::zero(self.arity);
        for (exp, a) in &self.terms {
            out.add_term(exp.clone(), a * c);
        }
        out
    }

    pub fn pow(&self, k: usize) -> MultiRatPoly {
        let mut acc = MultiRatPoly::constant(self.arity, Rat::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes the polynomial `args[i]` for variable `i`. All `args`
    /// must share one arity, which becomes the arity of the result.
    pub fn eval_poly(&self, args: &[MultiRatPoly]) -> MultiRatPoly {
        assert_eq!(args.len(), self.arity);
        let out_arity = args.first().map(|p| p.arity()).unwrap_or(1);
        assert!(args.iter().all(|p| p.arity() == out_arity));
        let mut acc = MultiRatPoly::zero(out_arity);
        for (exp, c) in &self.terms {
            let mut t = MultiRatPoly::constant(out_arity, c.clone());
            for (e, arg) in exp.iter().zip(args) {
                if *e > 0 {
                    t = &t * &arg.pow(*e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Embeds a univariate polynomial as a polynomial in variable `var`.
    pub fn from_univariate(f: &RatPoly, arity: usize, var: usize) -> MultiRatPoly {
        assert!(var < arity);
        let mut p = MultiRatPoly::zero(arity);
        for (k, c) in f.coeffs().iter().enumerate() {
            let mut exp = alloc::vec![0; arity];
            exp[var] = k;
            p.add_term(exp, c.clone());
        }
        p
    }
}

impl Add for &MultiRatPoly {
    type Output = MultiRatPoly;
    fn add(self, rhs: &MultiRatPoly) -> MultiRatPoly {
        assert_eq!(self.arity, rhs.arity);
        let mut out = self.clone();
        for (exp, c) in &rhs.terms {
            out.add_term(exp.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiRatPoly {
    type Output = MultiRatPoly;
    fn sub(self, rhs: &MultiRatPoly) -> MultiRatPoly {
        assert_eq!(self.arity, rhs.arity);
        let mut out = self.clone();
        for (exp, c) in &rhs.terms {
            out.add_term(exp.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiRatPoly {
    type Output = MultiRatPoly;
    fn neg(self) -> MultiRatPoly {
        let mut out = MultiRatPoly::zero(self.arity);
        for (exp, c) in &self.terms {
            out.add_term(exp.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiRatPoly {
    type Output = MultiRatPoly;
    fn mul(self, rhs: &MultiRatPoly) -> MultiRatPoly {
        assert_eq!(self.arity, rhs.arity);
        let mut out = MultiRatPoly::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let exp: Vec<usize> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn graded_lex_ordering() {
        // X0^2 + X0*X1 + X1 : graded lex lists X1 (deg 1) before the deg-2 terms
        let mut p = MultiRatPoly::zero(2);
        p.add_term(alloc::vec![2, 0], rat(1, 1));
        p.add_term(alloc::vec![1, 1], rat(1, 1));
        p.add_term(alloc::vec![0, 1], rat(1, 1));
        let order: Vec<Vec<usize>> = p
            .terms_graded_lex()
            .into_iter()
            .map(|(e, _)| e.clone())
            .collect();
        assert_eq!(
            order,
            alloc::vec![
                alloc::vec![0, 1],
                alloc::vec![1, 1],
                alloc::vec![2, 0]
            ]
        );
    }

    #[test]
    fn eval_and_mul() {
        // (X + Y)^2 evaluated at (1/2, 1/2) = 1
        let x = MultiRatPoly::variable(2, 0);
        let y = MultiRatPoly::variable(2, 1);
        let s = &x + &y;
        let sq = &s * &s;
        assert_eq!(sq.eval(&[rat(1, 2), rat(1, 2)]), rat(1, 1));
        assert_eq!(sq.degree_in(0), 2);
        assert_eq!(sq.degree_in(1), 2);
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = MultiRatPoly::variable(2, 0);
        let d = &x - &x;
        assert!(d.is_zero());
    }

    #[test]
    fn eval_poly_substitution() {
        // f(u) = u^2 with u := X + Y gives (X+Y)^2
        let f = MultiRatPoly::variable(1, 0).pow(2);
        let x = MultiRatPoly::variable(2, 0);
        let y = MultiRatPoly::variable(2, 1);
        let sub = f.eval_poly(&[&x + &y]);
        assert_eq!(sub, (&x + &y).pow(2));
    }
}
