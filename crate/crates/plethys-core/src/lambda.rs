//! Truncated big-Witt vectors: universal sum/product/Adams tables built
//! once over Q through ghost components, then specialized into Z/m without
//! any division.
//!
//! Convention: a truncated element `1 + a_1 T + ... + a_N T^N` is read as a
//! truncation of `prod_i (1 - x_i T)^{-1}`, so the coefficients are the
//! complete homogeneous symmetric functions of the roots and the ghost
//! components are the power sums. Under this convention the series attached
//! to an integer-like element `c` is `(1 - T)^{-c}` with coefficients
//! `C(c+n-1, n)`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ivpoly::binom_int;
use crate::modint::reduce_mod;
use crate::multipoly::MultiRatPoly;
use crate::witt::{hom_census, is_prime, vp_factorial, EvalHom, WittError};
use crate::Rat;

/// Largest truncation length the symbolic table generator accepts; the
/// tables grow like two-colored partition counts.
pub const MAX_TABLE_LENGTH: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaError {
    InvalidModulus,
    ParameterMismatch,
    BudgetExceeded { needed: u128, budget: u64 },
    PrecisionInsufficient { needed: u32, have: u32 },
    /// A universal table coefficient came out non-integral. Cannot happen;
    /// kept as a hard check on the construction.
    NonIntegralTable { index: usize },
    Witt(WittError),
}

impl fmt::Display for LambdaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaError::InvalidModulus => write!(f, "modulus must be at least 2"),
            LambdaError::ParameterMismatch => {
                write!(f, "operands disagree in modulus or truncation length")
            }
            LambdaError::BudgetExceeded { needed, budget } => {
                write!(f, "enumeration needs {} values, budget is {}", needed, budget)
            }
            LambdaError::PrecisionInsufficient { needed, have } => {
                write!(f, "needs p-adic precision {}, have {}", needed, have)
            }
            LambdaError::NonIntegralTable { index } => {
                write!(f, "universal table entry {} is not integral", index)
            }
            LambdaError::Witt(e) => write!(f, "{}", e),
        }
    }
}

impl core::error::Error for LambdaError {}

impl From<WittError> for LambdaError {
    fn from(e: WittError) -> Self {
        LambdaError::Witt(e)
    }
}

/// A truncated series `1 + a_1 T + ... + a_N T^N` with coefficients in Z/m.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LambdaTrunc {
    modulus: BigInt,
    coeffs: Vec<BigInt>,
}

impl LambdaTrunc {
    pub fn new<I>(modulus: BigInt, coeffs: I) -> Result<Self, LambdaError>
    where
        I: IntoIterator<Item = BigInt>,
    {
        if modulus < BigInt::from(2) {
            return Err(LambdaError::InvalidModulus);
        }
        let coeffs = coeffs
            .into_iter()
            .map(|c| reduce_mod(&c, &modulus))
            .collect();
        Ok(LambdaTrunc { modulus, coeffs })
    }

    /// The unit series 1.
    pub fn one(modulus: BigInt, len: usize) -> Result<Self, LambdaError> {
        LambdaTrunc::new(modulus, vec![BigInt::zero(); len])
    }

    /// `(1 - T)^{-1} = 1 + T + T^2 + ...`, truncated.
    pub fn geometric(modulus: BigInt, len: usize) -> Result<Self, LambdaError> {
        LambdaTrunc::new(modulus, vec![BigInt::one(); len])
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn truncate(&self, len: usize) -> LambdaTrunc {
        LambdaTrunc {
            modulus: self.modulus.clone(),
            coeffs: self.coeffs.iter().take(len).cloned().collect(),
        }
    }
}

impl fmt::Display for LambdaTrunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                write!(f, " + {}*T^{}", c, i + 1)?;
            }
        }
        write!(f, " (mod {})", self.modulus)
    }
}

/// Ghost components (power sums) of a rational-coefficient series by the
/// Newton recurrence `g_k = k*a_k - sum_{i<k} g_i * a_{k-i}`.
pub fn ghost_rational(coeffs: &[Rat]) -> Vec<Rat> {
    let n = coeffs.len();
    let mut g: Vec<Rat> = Vec::with_capacity(n);
    for k in 1..=n {
        let mut s = Rat::from(BigInt::from(k as u64)) * &coeffs[k - 1];
        for i in 1..k {
            s -= &g[i - 1] * &coeffs[k - i - 1];
        }
        g.push(s);
    }
    g
}

/// Inverse of [`ghost_rational`]: coefficients from ghost components, by
/// `a_k = (g_k + sum_{i<k} g_i * a_{k-i}) / k`.
pub fn ghost_to_coeffs(ghosts: &[Rat]) -> Vec<Rat> {
    let n = ghosts.len();
    let mut a: Vec<Rat> = Vec::with_capacity(n);
    let one = Rat::one();
    for k in 1..=n {
        let mut s = ghosts[k - 1].clone();
        for i in 1..k {
            let prev = if k - i == 0 { &one } else { &a[k - i - 1] };
            s += &ghosts[i - 1] * prev;
        }
        a.push(s / Rat::from(BigInt::from(k as u64)));
    }
    a
}

fn shifted(poly: &MultiRatPoly, arity: usize, offset: usize) -> MultiRatPoly {
    let mut out = MultiRatPoly::zero(arity);
    for (exp, c) in poly.terms() {
        let mut e = vec![0usize; arity];
        for (i, v) in exp.iter().enumerate() {
            e[offset + i] = *v;
        }
        out.add_term(e, c.clone());
    }
    out
}

fn symbolic_ghosts(n: usize, arity: usize, offset: usize) -> Vec<MultiRatPoly> {
    let var = |k: usize| MultiRatPoly::variable(arity, offset + k - 1);
    let mut g: Vec<MultiRatPoly> = Vec::with_capacity(n);
    for k in 1..=n {
        let mut s = var(k).scale(&Rat::from(BigInt::from(k as u64)));
        for i in 1..k {
            s = &s - &(&g[i - 1] * &var(k - i));
        }
        g.push(s);
    }
    g
}

fn symbolic_from_ghosts(ghosts: &[MultiRatPoly], arity: usize) -> Vec<MultiRatPoly> {
    let n = ghosts.len();
    let one = MultiRatPoly::constant(arity, Rat::one());
    let mut a: Vec<MultiRatPoly> = Vec::with_capacity(n);
    for k in 1..=n {
        let mut s = ghosts[k - 1].clone();
        for i in 1..k {
            let prev = if k - i == 0 { &one } else { &a[k - i - 1] };
            s = &s + &(&ghosts[i - 1] * prev);
        }
        a.push(s.scale(&Rat::new(BigInt::one(), BigInt::from(k as u64))));
    }
    a
}

/// The universal polynomials for sum, product, and Adams operations at one
/// truncation length, generated once over Q and verified integral, so that
/// specializing them in Z/m needs no division.
#[derive(Clone, Debug)]
pub struct LambdaTables {
    n: usize,
    /// Sum coefficients in variables a_1..a_n, b_1..b_n (arity 2n).
    sum: Vec<MultiRatPoly>,
    /// Product coefficients in the same 2n variables.
    prod: Vec<MultiRatPoly>,
    /// `adams[m-1]` = coefficients of psi_m, length `n / m`, arity n.
    adams: Vec<Vec<MultiRatPoly>>,
    /// Ghost polynomials g_1..g_n, arity n (rational, used symbolically).
    ghost: Vec<MultiRatPoly>,
}

impl LambdaTables {
    pub fn new(n: usize) -> Result<Self, LambdaError> {
        assert!(n >= 1);
        if n > MAX_TABLE_LENGTH {
            return Err(LambdaError::BudgetExceeded {
                needed: n as u128,
                budget: MAX_TABLE_LENGTH as u64,
            });
        }
        let ghost = symbolic_ghosts(n, n, 0);

        // sum: series multiplication with a_0 = b_0 = 1
        let arity2 = 2 * n;
        let var_a = |i: usize| MultiRatPoly::variable(arity2, i - 1);
        let var_b = |j: usize| MultiRatPoly::variable(arity2, n + j - 1);
        let mut sum = Vec::with_capacity(n);
        for k in 1..=n {
            let mut s = &var_a(k) + &var_b(k);
            for i in 1..k {
                s = &s + &(&var_a(i) * &var_b(k - i));
            }
            sum.push(s);
        }

        // product: ghostwise multiplication, then back to coefficients
        let ga: Vec<MultiRatPoly> = ghost.iter().map(|g| shifted(g, arity2, 0)).collect();
        let gb: Vec<MultiRatPoly> = ghost.iter().map(|g| shifted(g, arity2, n)).collect();
        let gamma: Vec<MultiRatPoly> = ga.iter().zip(&gb).map(|(x, y)| x * y).collect();
        let prod = symbolic_from_ghosts(&gamma, arity2);

        // Adams: gh_k(psi_m x) = gh_{mk}(x)
        let mut adams = Vec::with_capacity(n);
        for m in 1..=n {
            let ghosts_m: Vec<MultiRatPoly> =
                (1..=n / m).map(|k| ghost[m * k - 1].clone()).collect();
            adams.push(symbolic_from_ghosts(&ghosts_m, n));
        }

        // integrality: half the point of generating over Q is this check
        for (index, p) in sum
            .iter()
            .chain(&prod)
            .chain(adams.iter().flatten())
            .enumerate()
        {
            if !p.has_integer_coeffs() {
                return Err(LambdaError::NonIntegralTable { index });
            }
        }

        Ok(LambdaTables { n, sum, prod, adams, ghost })
    }

    pub fn truncation(&self) -> usize {
        self.n
    }

    pub fn sum_polys(&self) -> &[MultiRatPoly] {
        &self.sum
    }

    pub fn prod_polys(&self) -> &[MultiRatPoly] {
        &self.prod
    }

    pub fn adams_polys(&self, m: usize) -> &[MultiRatPoly] {
        &self.adams[m - 1]
    }

    pub fn ghost_polys(&self) -> &[MultiRatPoly] {
        &self.ghost
    }

    fn specialize(poly: &MultiRatPoly, values: &[BigInt], modulus: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (exp, c) in poly.terms() {
            debug_assert!(c.denom().is_one());
            let mut t = reduce_mod(c.numer(), modulus);
            for (e, v) in exp.iter().zip(values) {
                for _ in 0..*e {
                    t = reduce_mod(&(&t * v), modulus);
                }
            }
            acc = reduce_mod(&(&acc + &t), modulus);
        }
        acc
    }

    fn check_operand(&self, x: &LambdaTrunc) -> Result<(), LambdaError> {
        if x.len() != self.n {
            return Err(LambdaError::ParameterMismatch);
        }
        Ok(())
    }

    /// The group law (series multiplication) on truncated elements.
    pub fn lambda_add(
        &self,
        x: &LambdaTrunc,
        y: &LambdaTrunc,
    ) -> Result<LambdaTrunc, LambdaError> {
        self.check_operand(x)?;
        self.check_operand(y)?;
        if x.modulus != y.modulus {
            return Err(LambdaError::ParameterMismatch);
        }
        let values: Vec<BigInt> = x.coeffs.iter().chain(&y.coeffs).cloned().collect();
        LambdaTrunc::new(
            x.modulus.clone(),
            self.sum
                .iter()
                .map(|p| Self::specialize(p, &values, &x.modulus)),
        )
    }

    /// The ring product, defined ghost-componentwise.
    pub fn lambda_mul(
        &self,
        x: &LambdaTrunc,
        y: &LambdaTrunc,
    ) -> Result<LambdaTrunc, LambdaError> {
        self.check_operand(x)?;
        self.check_operand(y)?;
        if x.modulus != y.modulus {
            return Err(LambdaError::ParameterMismatch);
        }
        let values: Vec<BigInt> = x.coeffs.iter().chain(&y.coeffs).cloned().collect();
        LambdaTrunc::new(
            x.modulus.clone(),
            self.prod
                .iter()
                .map(|p| Self::specialize(p, &values, &x.modulus)),
        )
    }

    /// The Adams operation `psi_m`, landing at truncation length
    /// `floor(n / m)`.
    pub fn adams(&self, m: usize, x: &LambdaTrunc) -> Result<LambdaTrunc, LambdaError> {
        assert!(m >= 1);
        self.check_operand(x)?;
        if m == 1 {
            return Ok(x.clone());
        }
        if m > self.n {
            return LambdaTrunc::new(x.modulus.clone(), Vec::new());
        }
        LambdaTrunc::new(
            x.modulus.clone(),
            self.adams[m - 1]
                .iter()
                .map(|p| Self::specialize(p, &x.coeffs, &x.modulus)),
        )
    }
}

/// The binomial series `(1 - T)^{-c}` with coefficients `C(c+n-1, n) mod m`
/// for an ordinary integer `c`.
pub fn binomial_embed_int(
    c: &BigInt,
    modulus: &BigInt,
    len: usize,
) -> Result<LambdaTrunc, LambdaError> {
    LambdaTrunc::new(
        modulus.clone(),
        (1..=len).map(|n| binom_int(&(c + BigInt::from(n as u64 - 1)), n)),
    )
}

/// The binomial series of a truncated p-adic integer, into Z/p^k; requires
/// the same precision margin as the evaluation homomorphisms, since
/// `C(X+n-1, n)` has degree `n`.
pub fn binomial_embed_padic(
    alpha: &crate::witt::PadicTrunc,
    k: u32,
    len: usize,
) -> Result<LambdaTrunc, LambdaError> {
    let needed = k + vp_factorial(alpha.prime(), len as u32);
    if alpha.precision() < needed {
        return Err(LambdaError::PrecisionInsufficient {
            needed,
            have: alpha.precision(),
        });
    }
    let modulus = BigInt::from(alpha.prime()).pow(k);
    binomial_embed_int(alpha.residue(), &modulus, len)
}

/// Report from the truncated Adams-fixed-point enumeration.
#[derive(Clone, Debug)]
pub struct BinFixedReport {
    pub modulus: u64,
    pub len: usize,
    /// All series fixed by every truncated Adams operation. Truncated
    /// fixedness is a necessary condition for coming from the Adams-fixed
    /// subring, so this set can only overshoot the embedded one.
    pub fixed: Vec<LambdaTrunc>,
    /// Distinct embedded binomial series over a full residue sweep.
    pub embedded: Vec<LambdaTrunc>,
    pub embedded_subset_of_fixed: bool,
    pub sweep_range: u128,
}

impl BinFixedReport {
    pub fn fixed_count(&self) -> usize {
        self.fixed.len()
    }

    pub fn embedded_count(&self) -> usize {
        self.embedded.len()
    }
}

/// Sweep length after which the embedded series repeats:
/// `m * prod_{p | m} p^(v_p(len!))`.
fn embed_sweep_range(m: u64, len: usize) -> u128 {
    let mut range = m as u128;
    let mut rest = m;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            range *= (p as u128).pow(vp_factorial(p, len as u32));
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        range *= (rest as u128).pow(vp_factorial(rest, len as u32));
    }
    range
}

/// Enumerates every coefficient vector in (Z/m)^len, keeps those fixed by
/// all truncated Adams operations, and computes the embedded binomial
/// series over a full residue sweep. Both cardinalities are reported;
/// equality at a finite truncation is an observation, not a theorem.
pub fn bin_fixed_points(
    tables: &LambdaTables,
    m: u64,
    budget: u64,
) -> Result<BinFixedReport, LambdaError> {
    if m < 2 {
        return Err(LambdaError::InvalidModulus);
    }
    let n = tables.truncation();
    let total = (m as u128)
        .checked_pow(n as u32)
        .filter(|t| *t <= budget as u128)
        .ok_or(LambdaError::BudgetExceeded { needed: u128::MAX, budget })?;
    let sweep = embed_sweep_range(m, n);
    if sweep > budget as u128 {
        return Err(LambdaError::BudgetExceeded { needed: sweep, budget });
    }

    let modulus = BigInt::from(m);
    let mut fixed = Vec::new();
    for index in 0..total {
        let mut digits = Vec::with_capacity(n);
        let mut rest = index;
        for _ in 0..n {
            digits.push(BigInt::from((rest % m as u128) as u64));
            rest /= m as u128;
        }
        let x = LambdaTrunc::new(modulus.clone(), digits)?;
        let mut ok = true;
        for j in 2..=n {
            if tables.adams(j, &x)? != x.truncate(n / j) {
                ok = false;
                break;
            }
        }
        if ok {
            fixed.push(x);
        }
    }

    let mut embedded: BTreeSet<LambdaTrunc> = BTreeSet::new();
    for c in 0..sweep {
        embedded.insert(binomial_embed_int(&BigInt::from(c), &modulus, n)?);
    }
    let embedded: Vec<LambdaTrunc> = embedded.into_iter().collect();
    let subset = embedded.iter().all(|e| fixed.contains(e));

    Ok(BinFixedReport {
        modulus: m,
        len: n,
        fixed,
        embedded,
        embedded_subset_of_fixed: subset,
        sweep_range: sweep,
    })
}

/// Report from matching the embedded binomial series against the census of
/// evaluation homomorphisms into Z/p.
#[derive(Clone, Debug)]
pub struct BinCompareReport {
    pub p: u64,
    pub len: usize,
    pub embedded_count: usize,
    pub census_count: usize,
    /// Two residues embed to the same series exactly when they give the
    /// same homomorphism, over the whole sweep.
    pub indexing_consistent: bool,
    pub additive_ok: bool,
    pub multiplicative_ok: bool,
    pub identities_ok: bool,
}

impl BinCompareReport {
    pub fn pass(&self) -> bool {
        self.embedded_count == self.census_count
            && self.indexing_consistent
            && self.additive_ok
            && self.multiplicative_ok
            && self.identities_ok
    }
}

/// Matches the embedded series mod p with the evaluation-homomorphism
/// census at k = 1 and degree = truncation length: the two families are
/// indexed by the same truncated p-adic residues, and the series sum and
/// product must track homomorphism addition and multiplication on every
/// pair in the sweep.
pub fn bin_compare_witt(
    p: u64,
    tables: &LambdaTables,
    budget: u64,
) -> Result<BinCompareReport, LambdaError> {
    if !is_prime(p) {
        return Err(LambdaError::Witt(WittError::NotPrime(p)));
    }
    let n = tables.truncation();
    let census = hom_census(p, 1, n as u32, budget)?;
    let modulus = BigInt::from(p);
    let sweep = (p as u128).pow(1 + vp_factorial(p, n as u32));
    if sweep * sweep > budget as u128 {
        return Err(LambdaError::BudgetExceeded { needed: sweep * sweep, budget });
    }

    let series: Vec<LambdaTrunc> = (0..sweep)
        .map(|c| binomial_embed_int(&BigInt::from(c), &modulus, n))
        .collect::<Result<_, _>>()?;
    let hom_tuple = |c: u128| -> Result<Vec<BigInt>, LambdaError> {
        let phi =
            EvalHom::at_integer(p, 1, n as u32, &BigInt::from(c)).map_err(LambdaError::Witt)?;
        (1..=n)
            .map(|j| {
                phi.apply(&crate::ivpoly::IvPoly::binomial(j))
                    .map(|v| v.value().clone())
                    .map_err(LambdaError::Witt)
            })
            .collect()
    };
    let tuples: Vec<Vec<BigInt>> = (0..sweep).map(hom_tuple).collect::<Result<_, _>>()?;

    let mut indexing = true;
    for a in 0..sweep as usize {
        for b in 0..sweep as usize {
            indexing &= (series[a] == series[b]) == (tuples[a] == tuples[b]);
        }
    }
    let embedded_count = series.iter().collect::<BTreeSet<_>>().len();

    let mut additive = true;
    let mut multiplicative = true;
    for a in 0..sweep {
        for b in 0..sweep {
            let sum_series = tables.lambda_add(&series[a as usize], &series[b as usize])?;
            additive &= sum_series == binomial_embed_int(&BigInt::from(a + b), &modulus, n)?;
            let pa =
                EvalHom::at_integer(p, 1, n as u32, &BigInt::from(a)).map_err(LambdaError::Witt)?;
            let pb =
                EvalHom::at_integer(p, 1, n as u32, &BigInt::from(b)).map_err(LambdaError::Witt)?;
            let sum_hom = crate::witt::witt_add(&pa, &pb).map_err(LambdaError::Witt)?;
            additive &= *sum_hom.alpha().residue()
                == reduce_mod(&BigInt::from(a + b), &sum_hom.alpha().modulus());

            let prod_series = tables.lambda_mul(&series[a as usize], &series[b as usize])?;
            multiplicative &=
                prod_series == binomial_embed_int(&BigInt::from(a * b), &modulus, n)?;
            let prod_hom = crate::witt::witt_mul(&pa, &pb).map_err(LambdaError::Witt)?;
            multiplicative &= *prod_hom.alpha().residue()
                == reduce_mod(&BigInt::from(a * b), &prod_hom.alpha().modulus());
        }
    }

    // additive and multiplicative identities correspond to c = 0 and c = 1
    let identities_ok = series[0] == LambdaTrunc::one(modulus.clone(), n)?
        && series[1] == LambdaTrunc::geometric(modulus, n)?;

    Ok(BinCompareReport {
        p,
        len: n,
        embedded_count,
        census_count: census.count,
        indexing_consistent: indexing,
        additive_ok: additive,
        multiplicative_ok: multiplicative,
        identities_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witt::DEFAULT_BUDGET;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn ghost_examples() {
        // (1-T)^{-1}: all coefficients 1, all ghosts 1
        let ones = vec![rat(1, 1); 6];
        assert_eq!(ghost_rational(&ones), vec![rat(1, 1); 6]);
        // the unit series: all ghosts 0
        let zeros = vec![rat(0, 1); 5];
        assert_eq!(ghost_rational(&zeros), vec![rat(0, 1); 5]);
        // 1 + aT with a = 3: ghosts alternate (3, -9, 27, -81) under the
        // homogeneous convention
        let mut coeffs = vec![rat(0, 1); 4];
        coeffs[0] = rat(3, 1);
        assert_eq!(
            ghost_rational(&coeffs),
            vec![rat(3, 1), rat(-9, 1), rat(27, 1), rat(-81, 1)]
        );
        // roundtrip
        let g = ghost_rational(&[rat(2, 1), rat(-1, 3), rat(7, 2)]);
        assert_eq!(ghost_to_coeffs(&g), vec![rat(2, 1), rat(-1, 3), rat(7, 2)]);
    }

    #[test]
    fn tables_integral_to_8() {
        // also the frozen product coefficient c2 = a1^2 b1^2 - a1^2 b2 - a2 b1^2 + 2 a2 b2
        let t = LambdaTables::new(8).unwrap();
        let c2 = &t.prod_polys()[1];
        let mut expect = MultiRatPoly::zero(16);
        expect.add_term({ let mut e = vec![0; 16]; e[0] = 2; e[8] = 2; e }, rat(1, 1));
        expect.add_term({ let mut e = vec![0; 16]; e[0] = 2; e[9] = 1; e }, rat(-1, 1));
        expect.add_term({ let mut e = vec![0; 16]; e[1] = 1; e[8] = 2; e }, rat(-1, 1));
        expect.add_term({ let mut e = vec![0; 16]; e[1] = 1; e[9] = 1; e }, rat(2, 1));
        assert_eq!(c2, &expect);
        // sum coefficient 1 is a1 + b1
        let s1 = &t.sum_polys()[0];
        let mut expect = MultiRatPoly::zero(16);
        expect.add_term({ let mut e = vec![0; 16]; e[0] = 1; e }, rat(1, 1));
        expect.add_term({ let mut e = vec![0; 16]; e[8] = 1; e }, rat(1, 1));
        assert_eq!(s1, &expect);
    }

    #[test]
    fn ghost_laws_symbolic() {
        let n = 8;
        let t = LambdaTables::new(n).unwrap();
        let arity2 = 2 * n;
        // ghost of the sum is the sum of ghosts, as polynomials in 2n vars
        for k in 1..=n {
            let g_of_sum = t.ghost_polys()[k - 1].eval_poly(t.sum_polys());
            let expect = &shifted(&t.ghost_polys()[k - 1], arity2, 0)
                + &shifted(&t.ghost_polys()[k - 1], arity2, n);
            assert_eq!(g_of_sum, expect, "ghost additivity fails at k={}", k);
        }
        // ghost of the product is the product of ghosts
        for k in 1..=n {
            let g_of_prod = t.ghost_polys()[k - 1].eval_poly(t.prod_polys());
            let expect = &shifted(&t.ghost_polys()[k - 1], arity2, 0)
                * &shifted(&t.ghost_polys()[k - 1], arity2, n);
            assert_eq!(g_of_prod, expect, "ghost multiplicativity fails at k={}", k);
        }
    }

    #[test]
    fn adams_examples() {
        let t = LambdaTables::new(8).unwrap();
        let m = BigInt::from(101);
        // geometric series is fixed by every Adams operation
        let geo = LambdaTrunc::geometric(m.clone(), 8).unwrap();
        for j in 2..=8usize {
            assert_eq!(t.adams(j, &geo).unwrap(), geo.truncate(8 / j));
        }
        // psi_1 is the identity
        let x = LambdaTrunc::new(m.clone(), (1..=8).map(BigInt::from)).unwrap();
        assert_eq!(t.adams(1, &x).unwrap(), x);
        // psi_2(1 + aT) starts with -a^2 (ghost g2 = -a^2 under the
        // homogeneous convention)
        let mut coeffs = vec![BigInt::zero(); 8];
        coeffs[0] = BigInt::from(3);
        let line = LambdaTrunc::new(m.clone(), coeffs).unwrap();
        let psi2 = t.adams(2, &line).unwrap();
        assert_eq!(psi2.coeffs()[0], reduce_mod(&BigInt::from(-9), &m));
    }

    #[test]
    fn adams_multiplicativity() {
        let t = LambdaTables::new(8).unwrap();
        let m = BigInt::from(64);
        let mut rng = crate::rng::SplitMix64::new(4242);
        for _ in 0..20 {
            let x = LambdaTrunc::new(m.clone(), (0..8).map(|_| BigInt::from(rng.int_in(0, 63))))
                .unwrap();
            for (a, b) in [(2usize, 2usize), (2, 3), (2, 4), (3, 2)] {
                if a * b > 8 {
                    continue;
                }
                // psi_a needs tables at the intermediate truncation length
                let sub = LambdaTables::new(8 / b).unwrap();
                let lhs = sub.adams(a, &t.adams(b, &x).unwrap()).unwrap();
                let rhs = t.adams(a * b, &x).unwrap();
                assert_eq!(lhs.truncate(8 / (a * b)), rhs);
            }
        }
    }

    #[test]
    fn embed_examples() {
        let m = BigInt::from(5);
        // c = 1: geometric series
        assert_eq!(
            binomial_embed_int(&BigInt::one(), &m, 4).unwrap(),
            LambdaTrunc::geometric(m.clone(), 4).unwrap()
        );
        // c = 0: the unit series
        assert_eq!(
            binomial_embed_int(&BigInt::zero(), &m, 4).unwrap(),
            LambdaTrunc::one(m.clone(), 4).unwrap()
        );
        // c = 2, m = 5, N = 3: coefficients C(2,1), C(3,2), C(4,3) = 2, 3, 4
        let e = binomial_embed_int(&BigInt::from(2), &m, 3).unwrap();
        assert_eq!(e.coeffs(), &[BigInt::from(2), BigInt::from(3), BigInt::from(4)]);
    }

    #[test]
    fn embed_padic_precision_rule() {
        let alpha = crate::witt::PadicTrunc::new(2, 4, BigInt::from(7)).unwrap();
        // k=1, len=4 needs 1 + v_2(4!) = 4
        assert!(binomial_embed_padic(&alpha, 1, 4).is_ok());
        assert!(matches!(
            binomial_embed_padic(&alpha, 2, 4),
            Err(LambdaError::PrecisionInsufficient { needed: 5, have: 4 })
        ));
    }

    #[test]
    fn embedded_set_closure() {
        let t = LambdaTables::new(6).unwrap();
        let m = BigInt::from(9);
        let mut rng = crate::rng::SplitMix64::new(808);
        for _ in 0..30 {
            let a = BigInt::from(rng.int_in(0, 500));
            let b = BigInt::from(rng.int_in(0, 500));
            let ea = binomial_embed_int(&a, &m, 6).unwrap();
            let eb = binomial_embed_int(&b, &m, 6).unwrap();
            assert_eq!(
                t.lambda_add(&ea, &eb).unwrap(),
                binomial_embed_int(&(&a + &b), &m, 6).unwrap()
            );
            assert_eq!(
                t.lambda_mul(&ea, &eb).unwrap(),
                binomial_embed_int(&(&a * &b), &m, 6).unwrap()
            );
        }
    }

    #[test]
    fn fixed_points_m2_n4() {
        let t = LambdaTables::new(4).unwrap();
        let r = bin_fixed_points(&t, 2, DEFAULT_BUDGET).unwrap();
        // frozen from the independent enumeration: both sets have 8 elements
        assert_eq!(r.fixed_count(), 8);
        assert_eq!(r.embedded_count(), 8);
        assert!(r.embedded_subset_of_fixed);
        // the unit and geometric series are fixed
        let m = BigInt::from(2);
        assert!(r.fixed.contains(&LambdaTrunc::one(m.clone(), 4).unwrap()));
        assert!(r.fixed.contains(&LambdaTrunc::geometric(m, 4).unwrap()));
        // sweeping only [0, 8) already produces the full embedded set
        let small: BTreeSet<LambdaTrunc> = (0..8u32)
            .map(|c| binomial_embed_int(&BigInt::from(c), &BigInt::from(2), 4).unwrap())
            .collect();
        assert_eq!(small.len(), r.embedded_count());
    }

    #[test]
    fn fixed_points_m3_n3() {
        let t = LambdaTables::new(3).unwrap();
        let r = bin_fixed_points(&t, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.fixed_count(), 9);
        assert_eq!(r.embedded_count(), 9);
        assert!(r.embedded_subset_of_fixed);
    }

    #[test]
    fn compare_witt_p2_n4() {
        let t = LambdaTables::new(4).unwrap();
        let r = bin_compare_witt(2, &t, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.embedded_count, 8);
        assert_eq!(r.census_count, 8);
        assert!(r.pass());
    }

    #[test]
    fn budget_guards() {
        let t = LambdaTables::new(4).unwrap();
        assert!(matches!(
            bin_fixed_points(&t, 2, 8),
            Err(LambdaError::BudgetExceeded { .. })
        ));
        assert!(matches!(
            LambdaTables::new(MAX_TABLE_LENGTH + 1),
            Err(LambdaError::BudgetExceeded { .. })
        ));
    }
}
