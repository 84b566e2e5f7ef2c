//! Evaluation homomorphisms from Int(Z) into Z/p^k, indexed by truncated
//! p-adic integers, with the ring structure the co-operations induce on
//! them.
//!
//! The working precision rule comes from the valuation bound
//! `v_p(C(x,n) - C(y,n)) >= v_p(x - y) - v_p(n!)`: a residue known mod
//! `p^M` determines `f(alpha) mod p^k` for every `f` of degree at most `d`
//! as soon as `M >= k + v_p(d!)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::biring::{coadd, comul};
use crate::ivpoly::{binom_row, IvPoly};
use crate::modint::{reduce_mod, ModInt};
use crate::multipoly::MultiRatPoly;
use crate::plethory::{p_ring_action, FinOrder};
use crate::ratpoly::RatPoly;
use crate::Rat;

/// Default enumeration budget for the census-style operations.
pub const DEFAULT_BUDGET: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WittError {
    NotPrime(u64),
    PrecisionInsufficient { needed: u32, have: u32 },
    DegreeExceeded { degree: usize, cap: usize },
    ParameterMismatch,
    BudgetExceeded { needed: u128, budget: u64 },
}

impl fmt::Display for WittError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WittError::NotPrime(p) => write!(f, "{} is not prime", p),
            WittError::PrecisionInsufficient { needed, have } => {
                write!(f, "needs precision {}, have {}", needed, have)
            }
            WittError::DegreeExceeded { degree, cap } => {
                write!(f, "degree {} exceeds the capability {}", degree, cap)
            }
            WittError::ParameterMismatch => write!(f, "mismatched (p, k, d, M) parameters"),
            WittError::BudgetExceeded { needed, budget } => {
                write!(f, "enumeration needs {} values, budget is {}", needed, budget)
            }
        }
    }
}

impl core::error::Error for WittError {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `v_p(d!)` by Legendre's formula.
pub fn vp_factorial(p: u64, d: u32) -> u32 {
    let mut s = 0u64;
    let mut q = p;
    while q <= d as u64 {
        s += d as u64 / q;
        match q.checked_mul(p) {
            Some(next) => q = next,
            None => break,
        }
    }
    s as u32
}

/// A truncated p-adic integer: a residue known modulo `p^precision`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicTrunc {
    prime: u64,
    precision: u32,
    residue: BigInt,
}

impl PadicTrunc {
    pub fn new(prime: u64, precision: u32, residue: BigInt) -> Result<Self, WittError> {
        if !is_prime(prime) {
            return Err(WittError::NotPrime(prime));
        }
        if precision == 0 {
            return Err(WittError::PrecisionInsufficient { needed: 1, have: 0 });
        }
        let modulus = BigInt::from(prime).pow(precision);
        Ok(PadicTrunc {
            prime,
            precision,
            residue: reduce_mod(&residue, &modulus),
        })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn residue(&self) -> &BigInt {
        &self.residue
    }

    pub fn modulus(&self) -> BigInt {
        BigInt::from(self.prime).pow(self.precision)
    }
}

/// A Z-algebra homomorphism Int(Z) -> Z/p^k given by evaluation at a
/// truncated p-adic integer, valid on polynomials up to the degree
/// capability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalHom {
    alpha: PadicTrunc,
    target_exp: u32,
    degree_cap: u32,
}

impl EvalHom {
    /// Wraps a residue as a homomorphism into Z/p^k valid up to degree `d`,
    /// enforcing the precision invariant `M >= k + v_p(d!)`.
    pub fn new(alpha: PadicTrunc, k: u32, d: u32) -> Result<Self, WittError> {
        let needed = k + vp_factorial(alpha.prime(), d);
        if alpha.precision() < needed {
            return Err(WittError::PrecisionInsufficient {
                needed,
                have: alpha.precision(),
            });
        }
        Ok(EvalHom {
            alpha,
            target_exp: k,
            degree_cap: d,
        })
    }

    /// Evaluation at an ordinary integer, carried at the minimal sufficient
    /// precision.
    pub fn at_integer(p: u64, k: u32, d: u32, a: &BigInt) -> Result<Self, WittError> {
        let m = k + vp_factorial(p, d);
        EvalHom::new(PadicTrunc::new(p, m, a.clone())?, k, d)
    }

    pub fn alpha(&self) -> &PadicTrunc {
        &self.alpha
    }

    pub fn prime(&self) -> u64 {
        self.alpha.prime()
    }

    pub fn target_exp(&self) -> u32 {
        self.target_exp
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn target_modulus(&self) -> BigInt {
        BigInt::from(self.alpha.prime()).pow(self.target_exp)
    }

    /// `f(alpha) mod p^k`; well defined for `deg f` up to the capability by
    /// the precision invariant.
    pub fn apply(&self, f: &IvPoly) -> Result<ModInt, WittError> {
        if f.degree() > self.degree_cap as usize && !f.is_zero() {
            return Err(WittError::DegreeExceeded {
                degree: f.degree(),
                cap: self.degree_cap as usize,
            });
        }
        let value = f.eval_int(self.alpha.residue());
        Ok(ModInt::new(value, self.target_modulus()))
    }

    fn same_parameters(&self, other: &EvalHom) -> bool {
        self.prime() == other.prime()
            && self.target_exp == other.target_exp
            && self.degree_cap == other.degree_cap
            && self.alpha.precision() == other.alpha.precision()
    }
}

/// Sum of homomorphisms under the co-addition-induced ring structure:
/// evaluation at `alpha + beta`.
pub fn witt_add(x: &EvalHom, y: &EvalHom) -> Result<EvalHom, WittError> {
    if !x.same_parameters(y) {
        return Err(WittError::ParameterMismatch);
    }
    let alpha = PadicTrunc::new(
        x.prime(),
        x.alpha.precision(),
        x.alpha.residue() + y.alpha.residue(),
    )?;
    EvalHom::new(alpha, x.target_exp, x.degree_cap)
}

/// Product of homomorphisms: evaluation at `alpha * beta`.
pub fn witt_mul(x: &EvalHom, y: &EvalHom) -> Result<EvalHom, WittError> {
    if !x.same_parameters(y) {
        return Err(WittError::ParameterMismatch);
    }
    let alpha = PadicTrunc::new(
        x.prime(),
        x.alpha.precision(),
        x.alpha.residue() * y.alpha.residue(),
    )?;
    EvalHom::new(alpha, x.target_exp, x.degree_cap)
}

/// Applies the sum through the co-addition expansion instead of adding the
/// residues; the two pipelines must agree, which is the soundness property
/// the tests pin down.
pub fn witt_add_via_coadd(x: &EvalHom, y: &EvalHom, f: &IvPoly) -> Result<ModInt, WittError> {
    if !x.same_parameters(y) {
        return Err(WittError::ParameterMismatch);
    }
    let modulus = x.target_modulus();
    let mut acc = BigInt::zero();
    for (deg, c) in coadd(f).coeffs() {
        let a = x.apply(&IvPoly::binomial(deg[0]))?;
        let b = y.apply(&IvPoly::binomial(deg[1]))?;
        acc += c * a.value() * b.value();
    }
    Ok(ModInt::new(acc, modulus))
}

/// Product analogue of [`witt_add_via_coadd`], through co-multiplication.
pub fn witt_mul_via_comul(x: &EvalHom, y: &EvalHom, f: &IvPoly) -> Result<ModInt, WittError> {
    if !x.same_parameters(y) {
        return Err(WittError::ParameterMismatch);
    }
    let modulus = x.target_modulus();
    let mut acc = BigInt::zero();
    for (deg, c) in comul(f).coeffs() {
        let a = x.apply(&IvPoly::binomial(deg[0]))?;
        let b = y.apply(&IvPoly::binomial(deg[1]))?;
        acc += c * a.value() * b.value();
    }
    Ok(ModInt::new(acc, modulus))
}

/// The left action `f . phi = (g -> phi(g o f))`: evaluation at `f(alpha)`,
/// with the degree capability divided by `deg f` and the precision reduced
/// by `v_p((deg f)!)`.
pub fn witt_action(f: &IvPoly, x: &EvalHom) -> Result<EvalHom, WittError> {
    let df = f.degree().max(1) as u32;
    let new_cap = x.degree_cap / df;
    let spent = vp_factorial(x.prime(), f.degree() as u32);
    let new_precision =
        x.alpha
            .precision()
            .checked_sub(spent)
            .ok_or(WittError::PrecisionInsufficient {
                needed: spent,
                have: x.alpha.precision(),
            })?;
    let needed = x.target_exp + vp_factorial(x.prime(), new_cap);
    if new_precision < needed {
        return Err(WittError::DegreeExceeded {
            degree: f.degree(),
            cap: x.degree_cap as usize,
        });
    }
    let alpha = PadicTrunc::new(x.prime(), new_precision, f.eval_int(x.alpha.residue()))?;
    EvalHom::new(alpha, x.target_exp, new_cap)
}

/// Results of the brute-force census of distinct restriction tuples
/// `(C(alpha,1), ..., C(alpha,d)) mod p^k`.
#[derive(Clone, Debug)]
pub struct CensusReport {
    pub p: u64,
    pub k: u32,
    pub d: u32,
    /// Enumeration range `[0, p^(k + v_p(d!) + 1))`.
    pub base_range: u128,
    pub count: usize,
    pub doubled_count: usize,
    /// Minimal `M` such that the tuple depends only on `alpha mod p^M`,
    /// over the doubled range.
    pub min_precision: u32,
    pub add_well_defined: bool,
    pub mul_well_defined: bool,
}

impl CensusReport {
    pub fn stable(&self) -> bool {
        self.count == self.doubled_count
    }

    pub fn pass(&self) -> bool {
        self.stable() && self.add_well_defined && self.mul_well_defined
    }
}

fn restriction_tuple(alpha: &BigInt, d: u32, modulus: &BigInt) -> Vec<BigInt> {
    binom_row(alpha, d as usize)
        .into_iter()
        .skip(1)
        .map(|v| reduce_mod(&v, modulus))
        .collect()
}

/// Enumerates evaluation homomorphisms Int(Z) -> Z/p^k restricted to
/// degrees `1..=d` and counts the distinct restriction tuples; the count is
/// an output of the enumeration, not an assumption. Also verifies that the
/// induced addition and multiplication are well defined on tuples.
pub fn hom_census(p: u64, k: u32, d: u32, budget: u64) -> Result<CensusReport, WittError> {
    if !is_prime(p) {
        return Err(WittError::NotPrime(p));
    }
    let exponent = k + vp_factorial(p, d) + 1;
    let base_range = (p as u128).checked_pow(exponent).ok_or(WittError::BudgetExceeded {
        needed: u128::MAX,
        budget,
    })?;
    let doubled = base_range * 2;
    if doubled > budget as u128 {
        return Err(WittError::BudgetExceeded { needed: doubled, budget });
    }
    let modulus = BigInt::from(p).pow(k);

    let tuples: Vec<Vec<BigInt>> = (0..doubled)
        .map(|a| restriction_tuple(&BigInt::from(a), d, &modulus))
        .collect();

    let mut base_classes: BTreeMap<&[BigInt], usize> = BTreeMap::new();
    for t in tuples.iter().take(base_range as usize) {
        let next = base_classes.len();
        base_classes.entry(t.as_slice()).or_insert(next);
    }
    let mut all_classes: BTreeMap<&[BigInt], usize> = BTreeMap::new();
    for t in &tuples {
        let next = all_classes.len();
        all_classes.entry(t.as_slice()).or_insert(next);
    }

    // minimal precision at which tuples factor through alpha mod p^M
    let mut min_precision = exponent;
    'outer: for m in 0..=exponent {
        let pm = (p as u128).pow(m);
        let mut seen: BTreeMap<u128, &[BigInt]> = BTreeMap::new();
        for (a, t) in tuples.iter().enumerate() {
            let key = a as u128 % pm;
            match seen.get(&key) {
                Some(prev) if *prev != t.as_slice() => continue 'outer,
                _ => {
                    seen.insert(key, t.as_slice());
                }
            }
        }
        min_precision = m;
        break;
    }

    // well-definedness of induced addition/multiplication on tuple classes
    let class_of = |a: u128| -> usize { all_classes[tuples[a as usize].as_slice()] };
    let mut add_table: BTreeMap<(usize, usize), Vec<BigInt>> = BTreeMap::new();
    let mut mul_table: BTreeMap<(usize, usize), Vec<BigInt>> = BTreeMap::new();
    let mut add_ok = true;
    let mut mul_ok = true;
    for a in 0..base_range {
        for b in 0..base_range {
            let key = (class_of(a), class_of(b));
            let sum_t = restriction_tuple(&BigInt::from(a + b), d, &modulus);
            match add_table.get(&key) {
                Some(prev) => add_ok &= *prev == sum_t,
                None => {
                    add_table.insert(key, sum_t);
                }
            }
            let prod_t = restriction_tuple(&(BigInt::from(a) * BigInt::from(b)), d, &modulus);
            match mul_table.get(&key) {
                Some(prev) => mul_ok &= *prev == prod_t,
                None => {
                    mul_table.insert(key, prod_t);
                }
            }
        }
    }

    Ok(CensusReport {
        p,
        k,
        d,
        base_range,
        count: base_classes.len(),
        doubled_count: all_classes.len(),
        min_precision,
        add_well_defined: add_ok,
        mul_well_defined: mul_ok,
    })
}

/// Report from the torsion-freeness argument instantiated at q = p, pi = p.
#[derive(Clone, Debug)]
pub struct TorsionReport {
    pub p: u64,
    /// Binomial-basis form of F = (X^p - X)/p, if conversion succeeded.
    pub binomial_form: Option<IvPoly>,
    pub cross_term_integral: bool,
    pub cross_term_constant_zero: bool,
    pub scaling_identity: bool,
    pub action_kills_zero: bool,
}

impl TorsionReport {
    pub fn pass(&self) -> bool {
        self.binomial_form.is_some()
            && self.cross_term_integral
            && self.cross_term_constant_zero
            && self.scaling_identity
            && self.action_kills_zero
    }
}

/// Symbolically verifies the ingredients of the torsion-freeness argument
/// for F = (X^p - X)/p: membership in Int(Z), the cross term
/// `F(X+Y) - F(X) - F(Y)` having integer coefficients and no constant term,
/// the exact identity `F(pX) = p^(p-1) X^p - X`, and `F . 0 = 0` under the
/// action on Z.
pub fn torsion_argument_check(p: u64) -> Result<TorsionReport, WittError> {
    if !is_prime(p) {
        return Err(WittError::NotPrime(p));
    }
    let pi = Rat::from(BigInt::from(p));
    let inv_p = Rat::new(BigInt::one(), BigInt::from(p));
    // F = (X^p - X)/p
    let f_rat = (&RatPoly::monomial(p as usize, Rat::one()) - &RatPoly::x()).scale(&inv_p);
    let binomial_form = IvPoly::from_rational_poly(&f_rat).ok();

    // F(X+Y) - F(X) - F(Y)
    let x = MultiRatPoly::variable(2, 0);
    let y = MultiRatPoly::variable(2, 1);
    let f_of = |arg: &MultiRatPoly| -> MultiRatPoly {
        let mut acc = MultiRatPoly::zero(2);
        for (k, c) in f_rat.coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &arg.pow(k).scale(c);
            }
        }
        acc
    };
    let cross = &(&f_of(&(&x + &y)) - &f_of(&x)) - &f_of(&y);
    let cross_term_integral = cross.has_integer_coeffs();
    let cross_term_constant_zero = cross.constant_term().is_zero();

    // F(pX) = p^(p-1) X^p - X
    let lhs = f_rat.scale_arg(&pi);
    let coeff = Rat::from(BigInt::from(p).pow(p as u32 - 1));
    let rhs = &RatPoly::monomial(p as usize, coeff) - &RatPoly::x();
    let scaling_identity = lhs == rhs;

    // F . 0 = 0 in the P-ring Z
    let action_kills_zero = match (&binomial_form, p_ring_action(&FinOrder::integers(), 4)) {
        (Some(f_iv), Ok(action)) => action
            .act(f_iv, &[Rat::zero()])
            .map(|v| v.iter().all(|c| c.is_zero()))
            .unwrap_or(false),
        _ => false,
    };

    Ok(TorsionReport {
        p,
        binomial_form,
        cross_term_integral,
        cross_term_constant_zero,
        scaling_identity,
        action_kills_zero,
    })
}
