//! Co-operations on Int(Z) and the concrete tensor powers.
//!
//! The n-fold tensor power of Int(Z) is represented concretely as the ring
//! of integer-valued polynomials on Z^n in the product-binomial basis
//! `prod_i C(X_i, d_i)` (the canonical map between the two is an isomorphism
//! over Z). All co-operations are computed by multivariate forward
//! differences on evaluation grids; the classical closed forms (Vandermonde
//! and friends) are property-tested against them rather than trusted.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Sub;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ivpoly::{binom_row, IvPoly};
use crate::multipoly::MultiRatPoly;
use crate::report::{AxiomReport, CheckItem};
use crate::Rat;

/// Default cap on the per-variable degree of any expansion grid.
pub const DEFAULT_VAR_DEGREE_CAP: usize = 16;
/// Hard bound on the number of grid points any expansion may sample.
pub const MAX_GRID_POINTS: usize = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BiringError {
    /// The polynomial takes a non-integer value at the witness grid point.
    NotIntegerValued { witness: Vec<BigInt> },
    /// A per-variable expansion degree exceeds the cap.
    DegreeExceeded { var: usize, degree: usize, cap: usize },
    /// Integer grid values produced a non-integer expansion coefficient.
    /// Cannot happen over Z; kept as a defensive assertion.
    ThetaObstruction { at: Vec<usize> },
    /// A substituted polynomial must have integer coefficients.
    NonIntegerPolynomial,
    ArityMismatch { expected: usize, found: usize },
}

impl fmt::Display for BiringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BiringError::NotIntegerValued { witness } => {
                write!(f, "not integer-valued at grid point {:?}", witness)
            }
            BiringError::DegreeExceeded { var, degree, cap } => {
                write!(f, "degree {} in variable {} exceeds cap {}", degree, var, cap)
            }
            BiringError::ThetaObstruction { at } => {
                write!(f, "non-integer expansion coefficient at {:?}", at)
            }
            BiringError::NonIntegerPolynomial => {
                write!(f, "substituted polynomial must have integer coefficients")
            }
            BiringError::ArityMismatch { expected, found } => {
                write!(f, "arity mismatch: expected {}, found {}", expected, found)
            }
        }
    }
}

impl core::error::Error for BiringError {}

/// An element of Int(Z^n) in the product-binomial basis: a finite map from
/// degree tuples `(d_1, ..., d_n)` to nonzero integer coefficients,
/// representing `sum c * prod_i C(X_i, d_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorIvPoly {
    arity: usize,
    coeffs: BTreeMap<Vec<usize>, BigInt>,
}

/// Odometer over `prod_i {0..=degs[i]}` with the first coordinate varying
/// fastest; this order also fixes which witness a membership failure
/// reports.
pub(crate) fn grid_points(degs: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = degs.iter().map(|d| d + 1).product();
    let mut current = vec![0usize; degs.len()];
    let mut emitted = 0usize;
    core::iter::from_fn(move || {
        if emitted >= total {
            return None;
        }
        let out = current.clone();
        emitted += 1;
        for (c, d) in current.iter_mut().zip(degs) {
            if *c < *d {
                *c += 1;
                break;
            }
            *c = 0;
        }
        Some(out)
    })
}

fn strides(degs: &[usize]) -> Vec<usize> {
    let mut s = Vec::with_capacity(degs.len());
    let mut acc = 1usize;
    for d in degs {
        s.push(acc);
        acc *= d + 1;
    }
    s
}

/// In-place multivariate forward differences: afterwards the flat entry at
/// tuple `k` is the product-binomial coefficient of `prod C(X_i, k_i)`.
fn multi_differences<T>(values: &mut [T], degs: &[usize])
where
    T: Clone,
    for<'a> &'a T: Sub<&'a T, Output = T>,
{
    let st = strides(degs);
    let total = values.len();
    for (axis, d) in degs.iter().enumerate() {
        let stride = st[axis];
        let size = d + 1;
        for level in 1..size {
            // descending coordinate along `axis`; other axes arbitrary order
            for i in (0..total).rev() {
                let coord = (i / stride) % size;
                if coord >= level {
                    values[i] = &values[i] - &values[i - stride];
                }
            }
        }
    }
}

/// Expands an integer-valued function sampled on `prod {0..=degs[i]}` into
/// the product-binomial basis. Integer in, integer out.
fn expand_int_grid<F>(degs: &[usize], mut eval: F) -> TensorIvPoly
where
    F: FnMut(&[BigInt]) -> BigInt,
{
    let mut values: Vec<BigInt> = grid_points(degs)
        .map(|pt| {
            let pt: Vec<BigInt> = pt.into_iter().map(BigInt::from).collect();
            eval(&pt)
        })
        .collect();
    multi_differences(&mut values, degs);
    let mut coeffs = BTreeMap::new();
    let st = strides(degs);
    for pt in grid_points(degs) {
        let idx: usize = pt.iter().zip(&st).map(|(c, s)| c * s).sum();
        if !values[idx].is_zero() {
            coeffs.insert(pt, values[idx].clone());
        }
    }
    TensorIvPoly {
        arity: degs.len().max(1),
        coeffs,
    }
}

/// Rational-valued variant: fails with the first grid point (first
/// coordinate fastest) where the value is not an integer. If all sampled
/// values are integers the expansion coefficients are integers too; a
/// violation of that is reported as a [`BiringError::ThetaObstruction`].
fn expand_rat_grid<F>(degs: &[usize], mut eval: F) -> Result<TensorIvPoly, BiringError>
where
    F: FnMut(&[BigInt]) -> Rat,
{
    let mut values: Vec<Rat> = Vec::new();
    for pt in grid_points(degs) {
        let ipt: Vec<BigInt> = pt.iter().map(|&c| BigInt::from(c)).collect();
        let v = eval(&ipt);
        if !v.denom().is_one() {
            return Err(BiringError::NotIntegerValued { witness: ipt });
        }
        values.push(v);
    }
    multi_differences(&mut values, degs);
    let mut coeffs = BTreeMap::new();
    let st = strides(degs);
    for pt in grid_points(degs) {
        let idx: usize = pt.iter().zip(&st).map(|(c, s)| c * s).sum();
        let v = &values[idx];
        if !v.denom().is_one() {
            return Err(BiringError::ThetaObstruction { at: pt });
        }
        if !v.numer().is_zero() {
            coeffs.insert(pt, v.numer().clone());
        }
    }
    Ok(TensorIvPoly {
        arity: degs.len().max(1),
        coeffs,
    })
}

impl TensorIvPoly {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1);
        TensorIvPoly {
            arity,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: BigInt) -> Self {
        let mut t = TensorIvPoly::zero(arity);
        if !c.is_zero() {
            t.coeffs.insert(vec![0; arity], c);
        }
        t
    }

    pub fn from_coeffs<I>(arity: usize, coeffs: I) -> Result<Self, BiringError>
    where
        I: IntoIterator<Item = (Vec<usize>, BigInt)>,
    {
        let mut map: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for (deg, c) in coeffs {
            if deg.len() != arity {
                return Err(BiringError::ArityMismatch {
                    expected: arity,
                    found: deg.len(),
                });
            }
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(deg).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                map.retain(|_, v| !v.is_zero());
            }
        }
        Ok(TensorIvPoly { arity, coeffs: map })
    }

    pub fn from_ivpoly(f: &IvPoly) -> Self {
        TensorIvPoly {
            arity: 1,
            coeffs: f.coeffs().iter().map(|(n, c)| (vec![*n], c.clone())).collect(),
        }
    }

    /// Inverse of [`TensorIvPoly::from_ivpoly`]; the tensor must have arity 1.
    pub fn to_ivpoly(&self) -> IvPoly {
        assert_eq!(self.arity, 1, "to_ivpoly requires arity 1");
        IvPoly::from_coeffs(self.coeffs.iter().map(|(d, c)| (d[0], c.clone())))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient tuples in lexicographic order.
    pub fn coeffs(&self) -> &BTreeMap<Vec<usize>, BigInt> {
        &self.coeffs
    }

    pub fn degree_in(&self, var: usize) -> usize {
        self.coeffs.keys().map(|d| d[var]).max().unwrap_or(0)
    }

    pub fn eval_int(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.arity);
        let rows: Vec<Vec<BigInt>> = point
            .iter()
            .enumerate()
            .map(|(i, a)| binom_row(a, self.degree_in(i)))
            .collect();
        let mut acc = BigInt::zero();
        for (deg, c) in &self.coeffs {
            let mut t = c.clone();
            for (i, k) in deg.iter().enumerate() {
                t *= &rows[i][*k];
            }
            acc += t;
        }
        acc
    }

    /// Exact expansion into the monomial basis of Q[X_1..X_n].
    pub fn to_multi_rat(&self) -> MultiRatPoly {
        // univariate binomial-basis polys per axis, then products
        let mut out = MultiRatPoly::zero(self.arity);
        for (deg, c) in &self.coeffs {
            let mut term = MultiRatPoly::constant(self.arity, Rat::from(c.clone()));
            for (var, k) in deg.iter().enumerate() {
                if *k > 0 {
                    let uni = IvPoly::binomial(*k).to_rational_poly();
                    term = &term * &MultiRatPoly::from_univariate(&uni, self.arity, var);
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Replaces variable `axis` by the sum of two fresh variables, yielding
    /// an arity `n+1` tensor: the comultiplication leg of co-addition.
    pub fn apply_coadd_axis(&self, axis: usize) -> TensorIvPoly {
        assert!(axis < self.arity);
        let mut degs: Vec<usize> = (0..self.arity).map(|i| self.degree_in(i)).collect();
        let d = degs[axis];
        degs.insert(axis + 1, d);
        expand_int_grid(&degs, |pt| {
            let mut inner: Vec<BigInt> = Vec::with_capacity(self.arity);
            for (i, x) in pt.iter().enumerate() {
                if i == axis {
                    inner.push(x + &pt[axis + 1]);
                } else if i != axis + 1 {
                    inner.push(x.clone());
                }
            }
            self.eval_int(&inner)
        })
    }

    /// Same as [`TensorIvPoly::apply_coadd_axis`] with a product instead of
    /// a sum: the leg of co-multiplication.
    pub fn apply_comul_axis(&self, axis: usize) -> TensorIvPoly {
        assert!(axis < self.arity);
        let mut degs: Vec<usize> = (0..self.arity).map(|i| self.degree_in(i)).collect();
        let d = degs[axis];
        degs.insert(axis + 1, d);
        expand_int_grid(&degs, |pt| {
            let mut inner: Vec<BigInt> = Vec::with_capacity(self.arity);
            for (i, x) in pt.iter().enumerate() {
                if i == axis {
                    inner.push(x * &pt[axis + 1]);
                } else if i != axis + 1 {
                    inner.push(x.clone());
                }
            }
            self.eval_int(&inner)
        })
    }

    /// Evaluates variable `axis` at the integer `a`, dropping one arity;
    /// on arity 1 the result is returned as a constant of arity 1.
    pub fn collapse_eval_axis(&self, axis: usize, a: &BigInt) -> TensorIvPoly {
        assert!(axis < self.arity);
        let row = binom_row(a, self.degree_in(axis));
        let new_arity = (self.arity - 1).max(1);
        let mut out = TensorIvPoly::zero(new_arity);
        for (deg, c) in &self.coeffs {
            let mut nd: Vec<usize> = deg.clone();
            let k = nd.remove(axis);
            if self.arity == 1 {
                nd = vec![0];
            }
            let contrib = c * &row[k];
            if contrib.is_zero() {
                continue;
            }
            let entry = out.coeffs.entry(nd).or_insert_with(BigInt::zero);
            *entry += contrib;
        }
        out.coeffs.retain(|_, v| !v.is_zero());
        out
    }

    pub fn swap_axes(&self, i: usize, j: usize) -> TensorIvPoly {
        assert!(i < self.arity && j < self.arity);
        let coeffs = self
            .coeffs
            .iter()
            .map(|(deg, c)| {
                let mut nd = deg.clone();
                nd.swap(i, j);
                (nd, c.clone())
            })
            .collect();
        TensorIvPoly {
            arity: self.arity,
            coeffs,
        }
    }

    /// For an arity-2 tensor `sum c_ij C(X,i) (x) C(Y,j)`, applies a map to
    /// each leg and multiplies the legs back together in Int(Z):
    /// `sum c_ij m1(C(X,i)) * m2(C(X,j))`.
    pub fn fold2<F, G>(&self, m1: F, m2: G) -> IvPoly
    where
        F: Fn(&IvPoly) -> IvPoly,
        G: Fn(&IvPoly) -> IvPoly,
    {
        assert_eq!(self.arity, 2, "fold2 requires arity 2");
        let mut acc = IvPoly::zero();
        for (deg, c) in &self.coeffs {
            let a = m1(&IvPoly::binomial(deg[0]));
            let b = m2(&IvPoly::binomial(deg[1]));
            let prod = a.mul_iv(&b);
            let scaled = IvPoly::from_coeffs(
                prod.coeffs().iter().map(|(n, x)| (*n, c * x)),
            );
            acc = &acc + &scaled;
        }
        acc
    }
}

impl fmt::Display for TensorIvPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*", c)?;
            for (i, k) in deg.iter().enumerate() {
                if i > 0 {
                    write!(f, "(x)")?;
                }
                write!(f, "C(X{},{})", i + 1, k)?;
            }
        }
        Ok(())
    }
}

/// Co-addition: the expansion of `f(X+Y)`. Evaluating the result at `(a,b)`
/// equals `f(a+b)` for all integers.
pub fn coadd(f: &IvPoly) -> TensorIvPoly {
    let d = f.degree();
    expand_int_grid(&[d, d], |pt| f.eval_int(&(&pt[0] + &pt[1])))
}

/// Co-multiplication: the expansion of `f(XY)`.
pub fn comul(f: &IvPoly) -> TensorIvPoly {
    let d = f.degree();
    expand_int_grid(&[d, d], |pt| f.eval_int(&(&pt[0] * &pt[1])))
}

/// Co-zero: `f(0)`.
pub fn cozero(f: &IvPoly) -> BigInt {
    f.coeff(0)
}

/// Co-unit: `f(1)`.
pub fn counit(f: &IvPoly) -> BigInt {
    f.eval_int(&BigInt::one())
}

/// Co-additive-inverse: the binomial expansion of `f(-X)` (always integral).
pub fn coinv(f: &IvPoly) -> IvPoly {
    let d = f.degree();
    let mut values: Vec<BigInt> = (0..=d)
        .map(|a| f.eval_int(&-BigInt::from(a)))
        .collect();
    crate::ivpoly::forward_differences(&mut values);
    IvPoly::from_coeffs(values.into_iter().enumerate())
}

/// The evaluation functional `f -> f(a)` attached to the integer `a` by the
/// co-linear structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalFunctional {
    point: BigInt,
}

impl EvalFunctional {
    pub fn point(&self) -> &BigInt {
        &self.point
    }

    pub fn apply(&self, f: &IvPoly) -> BigInt {
        f.eval_int(&self.point)
    }
}

/// The co-linear structure `a -> (f -> f(a))`.
pub fn colinear(a: BigInt) -> EvalFunctional {
    EvalFunctional { point: a }
}

/// Expansion of `f(P(X_1..X_n))` in the product-binomial basis for an
/// integer-coefficient polynomial `P`. Specializes to [`coadd`] at
/// `P = X+Y` and to [`comul`] at `P = XY`.
pub fn substitute_poly(
    f: &IvPoly,
    p: &MultiRatPoly,
    cap: usize,
) -> Result<TensorIvPoly, BiringError> {
    if !p.has_integer_coeffs() {
        return Err(BiringError::NonIntegerPolynomial);
    }
    let df = f.degree();
    let degs: Vec<usize> = (0..p.arity()).map(|i| df.saturating_mul(p.degree_in(i))).collect();
    for (var, d) in degs.iter().enumerate() {
        if *d > cap {
            return Err(BiringError::DegreeExceeded {
                var,
                degree: *d,
                cap,
            });
        }
    }
    // high arity multiplies grid sizes; refuse rather than thrash
    let mut total: usize = 1;
    for d in &degs {
        total = total.saturating_mul(d + 1);
    }
    if total > MAX_GRID_POINTS {
        return Err(BiringError::DegreeExceeded {
            var: 0,
            degree: total,
            cap: MAX_GRID_POINTS,
        });
    }
    Ok(expand_int_grid(&degs, |pt| {
        let rpt: Vec<Rat> = pt.iter().map(|a| Rat::from(a.clone())).collect();
        let v = p.eval(&rpt);
        debug_assert!(v.denom().is_one());
        f.eval_int(v.numer())
    }))
}

/// Membership test for Int(Z^n): a rational polynomial lies in it iff it is
/// integer-valued on the finite grid `prod {0..=deg_i}`, in which case its
/// product-binomial expansion is returned.
pub fn int_zn_member(f: &MultiRatPoly) -> Result<TensorIvPoly, BiringError> {
    let degs: Vec<usize> = (0..f.arity()).map(|i| f.degree_in(i)).collect();
    expand_rat_grid(&degs, |pt| {
        let rpt: Vec<Rat> = pt.iter().map(|a| Rat::from(a.clone())).collect();
        f.eval(&rpt)
    })
}

/// Report from [`theta_check`].
#[derive(Clone, Debug)]
pub struct ThetaReport {
    pub arity: usize,
    pub degree: usize,
    pub members_checked: usize,
    pub doubled_grid_points: usize,
    pub counterexample: Option<String>,
}

impl ThetaReport {
    pub fn pass(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks that every element of Int(Z^arity) with per-variable degree at
/// most `degree` has an integer product-binomial expansion.
///
/// The elements integer-valued on the defining grid form a free Z-module
/// with one basis member per grid point (the polynomial that is 1 there and
/// 0 elsewhere on the grid), so it suffices to expand each of those: their
/// multivariate forward differences must be integers, and the expansion must
/// reproduce the interpolating polynomial on the doubled grid
/// `prod {0..=2*degree}`, where the oracle is a product of univariate
/// Lagrange polynomials evaluated over Q.
pub fn theta_check(arity: usize, degree: usize, cap: usize) -> Result<ThetaReport, BiringError> {
    assert!(arity >= 2 && degree >= 1);
    if arity.saturating_mul(degree) > cap {
        return Err(BiringError::DegreeExceeded {
            var: 0,
            degree: arity * degree,
            cap,
        });
    }
    let d = degree;
    // lagrange[j][t] = L_j(t) over Q, nodes 0..=d, sampled at t in 0..=2d
    let lagrange: Vec<Vec<Rat>> = (0..=d)
        .map(|j| {
            (0..=2 * d)
                .map(|t| {
                    let mut v = Rat::one();
                    for i in 0..=d {
                        if i == j {
                            continue;
                        }
                        let num = Rat::from(BigInt::from(t as i64 - i as i64));
                        let den = Rat::from(BigInt::from(j as i64 - i as i64));
                        v *= num / den;
                    }
                    v
                })
                .collect()
        })
        .collect();
    let binoms: Vec<Vec<BigInt>> = (0..=2 * d)
        .map(|t| binom_row(&BigInt::from(t), d))
        .collect();

    let degs = vec![d; arity];
    let mut members = 0usize;
    let mut counterexample = None;
    'members: for v in grid_points(&degs) {
        members += 1;
        // indicator values on the defining grid
        let expansion = expand_rat_grid(&degs, |pt| {
            let hit = pt
                .iter()
                .zip(&v)
                .all(|(x, c)| *x == BigInt::from(*c));
            if hit {
                Rat::one()
            } else {
                Rat::zero()
            }
        });
        let expansion = match expansion {
            Ok(t) => t,
            Err(e) => {
                counterexample = Some(format!("member {:?}: {}", v, e));
                break 'members;
            }
        };
        // cross-check on the doubled grid against the Lagrange oracle
        let doubled = vec![2 * d; arity];
        for t in grid_points(&doubled) {
            let mut oracle = Rat::one();
            for (i, ti) in t.iter().enumerate() {
                oracle *= &lagrange[v[i]][*ti];
            }
            let mut got = BigInt::zero();
            for (deg, c) in expansion.coeffs() {
                let mut term = c.clone();
                for (i, k) in deg.iter().enumerate() {
                    term *= &binoms[t[i]][*k];
                }
                got += term;
            }
            if Rat::from(got) != oracle {
                counterexample = Some(format!(
                    "member {:?}: expansion disagrees with interpolation at {:?}",
                    v, t
                ));
                break 'members;
            }
        }
    }
    let doubled_points = (2 * d + 1).pow(arity as u32);
    Ok(ThetaReport {
        arity,
        degree,
        members_checked: members,
        doubled_grid_points: doubled_points,
        counterexample,
    })
}

/// Runs the biring axiom battery on the basis elements `C(X,n)`, `n <= degree`.
///
/// All comparisons are structural equalities of canonical tensors, so a pass
/// is an exact statement about polynomials, not a sampled one; only the
/// co-linear compatibility check uses sampled integer points.
pub fn verify_biring_axioms(degree: usize) -> AxiomReport {
    let mut checks: Vec<CheckItem> = Vec::new();
    let mut rng = crate::rng::SplitMix64::new(0x5eed_b121);

    let sample_pairs: Vec<(BigInt, BigInt)> = (0..10)
        .map(|_| (BigInt::from(rng.int_in(-20, 20)), BigInt::from(rng.int_in(-20, 20))))
        .collect();

    for n in 0..=degree {
        let f = IvPoly::binomial(n);
        let ca = coadd(&f);
        let cm = comul(&f);

        checks.push(CheckItem::named(
            format!("coassociativity of coadd at n={}", n),
            ca.apply_coadd_axis(0) == ca.apply_coadd_axis(1),
        ));
        checks.push(CheckItem::named(
            format!("cocommutativity of coadd at n={}", n),
            ca.swap_axes(0, 1) == ca,
        ));
        checks.push(CheckItem::named(
            format!("coassociativity of comul at n={}", n),
            cm.apply_comul_axis(0) == cm.apply_comul_axis(1),
        ));
        checks.push(CheckItem::named(
            format!("cocommutativity of comul at n={}", n),
            cm.swap_axes(0, 1) == cm,
        ));
        // counit laws: collapsing one leg of coadd at 0 / of comul at 1
        let f1 = TensorIvPoly::from_ivpoly(&f);
        checks.push(CheckItem::named(
            format!("cozero counit law at n={}", n),
            ca.collapse_eval_axis(0, &BigInt::zero()) == f1
                && ca.collapse_eval_axis(1, &BigInt::zero()) == f1,
        ));
        checks.push(CheckItem::named(
            format!("counit law at n={}", n),
            cm.collapse_eval_axis(0, &BigInt::one()) == f1
                && cm.collapse_eval_axis(1, &BigInt::one()) == f1,
        ));
        // co-inverse: folding coadd through coinv lands on the constant f(0)
        let folded = ca.fold2(coinv, |g| g.clone());
        checks.push(CheckItem::named(
            format!("co-inverse law at n={}", n),
            folded == IvPoly::constant(cozero(&f)),
        ));
        // co-distributivity: f(X(Y+Z)) both ways
        let x = MultiRatPoly::variable(3, 0);
        let y = MultiRatPoly::variable(3, 1);
        let z = MultiRatPoly::variable(3, 2);
        let xyz = &(&x * &y) + &(&x * &z);
        let direct = substitute_poly(&f, &xyz, DEFAULT_VAR_DEGREE_CAP.max(2 * degree));
        let via_coops = cm.apply_coadd_axis(1);
        checks.push(CheckItem::named(
            format!("co-distributivity at n={}", n),
            direct.map(|t| t == via_coops).unwrap_or(false),
        ));
        // compatibility: functionals built from colinear add/multiply
        // through the co-operations
        let mut compat = true;
        for (a, b) in &sample_pairs {
            let pa = colinear(a.clone());
            let pb = colinear(b.clone());
            let mut add_val = BigInt::zero();
            for (deg, c) in ca.coeffs() {
                add_val += c
                    * pa.apply(&IvPoly::binomial(deg[0]))
                    * pb.apply(&IvPoly::binomial(deg[1]));
            }
            let mut mul_val = BigInt::zero();
            for (deg, c) in cm.coeffs() {
                mul_val += c
                    * pa.apply(&IvPoly::binomial(deg[0]))
                    * pb.apply(&IvPoly::binomial(deg[1]));
            }
            compat &= add_val == f.eval_int(&(a + b)) && mul_val == f.eval_int(&(a * b));
        }
        checks.push(CheckItem::named(
            format!("colinear compatibility at n={}", n),
            compat,
        ));
    }

    AxiomReport {
        degree,
        checks,
    }
}
