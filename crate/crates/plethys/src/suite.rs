//! Acceptance and quick verification batteries, shared by the `plethys
//! suite` subcommand and the integration test target.
//!
//! Each criterion is exact: it either holds as an identity of exact objects
//! or it fails. The stated wall-clock limits are part of each criterion and
//! are enforced.

use std::time::Instant;

use plethys_core::biring::{
    coadd, comul, int_zn_member, substitute_poly, theta_check, verify_biring_axioms,
    TensorIvPoly, DEFAULT_VAR_DEGREE_CAP,
};
use plethys_core::ivpoly::IvPoly;
use plethys_core::lambda::{bin_compare_witt, bin_fixed_points, LambdaTables};
use plethys_core::multipoly::MultiRatPoly;
use plethys_core::plethory::{
    is_wpc, verify_plethory_axioms, w_lower, w_upper, ClosureStatus, FinOrder, WpcVerdict,
};
use plethys_core::ratpoly::RatPoly;
use plethys_core::rng::SplitMix64;
use plethys_core::witt::{
    hom_census, torsion_argument_check, witt_add, witt_add_via_coadd, witt_mul,
    witt_mul_via_comul, EvalHom, DEFAULT_BUDGET,
};
use plethys_core::num_traits::Zero;
use plethys_core::{BigInt, Rat};

#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    pub exact_ok: bool,
    pub millis: u128,
    pub limit_ms: u128,
    pub detail: String,
}

impl CriterionOutcome {
    pub fn passed(&self) -> bool {
        self.exact_ok && self.millis < self.limit_ms
    }
}

fn run_criterion(
    id: usize,
    name: &'static str,
    limit_ms: u128,
    f: impl FnOnce() -> (bool, String),
) -> CriterionOutcome {
    let start = Instant::now();
    let (exact_ok, detail) = f();
    CriterionOutcome {
        id,
        name,
        exact_ok,
        millis: start.elapsed().as_millis(),
        limit_ms,
        detail,
    }
}

fn random_ivpoly(rng: &mut SplitMix64, max_deg: usize, max_coeff: i64) -> IvPoly {
    let deg = rng.usize_in(0, max_deg);
    IvPoly::from_coeffs((0..=deg).map(|n| (n, BigInt::from(rng.int_in(-max_coeff, max_coeff)))))
}

// 1. basis round-trip with witnessed rejections
fn basis_roundtrip(good: usize, bad: usize, max_deg: usize) -> (bool, String) {
    let mut rng = SplitMix64::new(0x0001);
    let binomials: Vec<RatPoly> = (0..=max_deg)
        .map(|n| IvPoly::binomial(n).to_rational_poly())
        .collect();
    for i in 0..good {
        let f = random_ivpoly(&mut rng, max_deg, 9);
        let back = match IvPoly::from_rational_poly(&f.to_rational_poly()) {
            Ok(g) => g,
            Err(e) => return (false, format!("sample {i}: conversion failed: {e}")),
        };
        if back != f {
            return (false, format!("sample {i}: round-trip mismatch"));
        }
    }
    for i in 0..bad {
        // rational binomial-basis coefficients with at least one non-integer
        let deg = rng.usize_in(0, max_deg);
        let mut coeffs: Vec<Rat> = (0..=deg)
            .map(|_| Rat::new(BigInt::from(rng.int_in(-9, 9)), BigInt::from(rng.int_in(1, 4))))
            .collect();
        if coeffs.iter().all(|c| c.denom() == &BigInt::from(1)) {
            let spoil = rng.usize_in(0, deg);
            coeffs[spoil] = &coeffs[spoil] + &Rat::new(BigInt::from(1), BigInt::from(2));
        }
        let mut f = RatPoly::zero();
        for (n, c) in coeffs.iter().enumerate() {
            f = &f + &binomials[n].scale(c);
        }
        match IvPoly::from_rational_poly(&f) {
            Ok(_) => return (false, format!("bad sample {i}: accepted a non-member")),
            Err(plethys_core::ivpoly::IvPolyError::NotIntegerValued { witness }) => {
                if f.eval_int(&witness).denom() == &BigInt::from(1) {
                    return (false, format!("bad sample {i}: witness {witness} is not a witness"));
                }
            }
            Err(e) => return (false, format!("bad sample {i}: unexpected error {e}")),
        }
    }
    (true, format!("{good} members round-tripped, {bad} non-members rejected with valid witnesses"))
}

// 2. co-operation soundness with a rational-route integrality cross-check
fn cooperation_soundness(max_deg: usize, pairs: usize) -> (bool, String) {
    let mut rng = SplitMix64::new(0x0002);
    let x = MultiRatPoly::variable(2, 0);
    let y = MultiRatPoly::variable(2, 1);
    for n in 0..=max_deg {
        let f = IvPoly::binomial(n);
        let ca = coadd(&f);
        let cm = comul(&f);
        // dual route: expand f(X+Y) and f(XY) over Q and check membership
        let f_rat = f.to_rational_poly();
        let expand = |arg: &MultiRatPoly| {
            let mut acc = MultiRatPoly::zero(2);
            for (k, c) in f_rat.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    acc = &acc + &arg.pow(k).scale(c);
                }
            }
            acc
        };
        match int_zn_member(&expand(&(&x + &y))) {
            Ok(t) if t == ca => {}
            _ => return (false, format!("coadd C(X,{n}) disagrees with the rational route")),
        }
        match int_zn_member(&expand(&(&x * &y))) {
            Ok(t) if t == cm => {}
            _ => return (false, format!("comul C(X,{n}) disagrees with the rational route")),
        }
        for _ in 0..pairs {
            let a = BigInt::from(rng.int_in(-50, 50));
            let b = BigInt::from(rng.int_in(-50, 50));
            if ca.eval_int(&[a.clone(), b.clone()]) != f.eval_int(&(&a + &b)) {
                return (false, format!("coadd value mismatch at n={n}"));
            }
            if cm.eval_int(&[a.clone(), b.clone()]) != f.eval_int(&(&a * &b)) {
                return (false, format!("comul value mismatch at n={n}"));
            }
        }
    }
    (true, format!("basis degrees 0..={max_deg}, {pairs} integer pairs each, both routes agree"))
}

// 3. Vandermonde identity
fn vandermonde(max_n: usize) -> (bool, String) {
    for n in 0..=max_n {
        let got = coadd(&IvPoly::binomial(n));
        let expect = TensorIvPoly::from_coeffs(
            2,
            (0..=n).map(|i| (vec![i, n - i], BigInt::from(1))),
        )
        .expect("valid tuples");
        if got != expect {
            return (false, format!("fails at n = {n}"));
        }
    }
    (true, format!("structural equality for n <= {max_n}"))
}

// 4. biring axiom battery
fn biring_axioms(degree: usize) -> (bool, String) {
    let report = verify_biring_axioms(degree);
    let failures: Vec<String> = report.failures().map(|c| c.name.clone()).collect();
    if failures.is_empty() {
        (true, format!("{} checks at degree {degree}", report.checks.len()))
    } else {
        (false, format!("failed: {}", failures.join("; ")))
    }
}

// 5. plethory axiom battery
fn plethory_axioms(degree: usize, samples: usize) -> (bool, String) {
    let report = verify_plethory_axioms(degree, samples, 0x0005);
    let failures: Vec<String> = report.failures().map(|c| c.name.clone()).collect();
    if failures.is_empty() {
        (true, format!("composed degree <= {degree}, {samples} sampled triples"))
    } else {
        (false, format!("failed: {}", failures.join("; ")))
    }
}

// 6. theta surjectivity with the doubled-grid oracle
fn theta_surjectivity(degree: usize) -> (bool, String) {
    match theta_check(2, degree, DEFAULT_VAR_DEGREE_CAP) {
        Ok(r) if r.pass() => (
            true,
            format!(
                "{} basis members, cross-checked on {} doubled-grid points",
                r.members_checked, r.doubled_grid_points
            ),
        ),
        Ok(r) => (false, r.counterexample.unwrap_or_default()),
        Err(e) => (false, e.to_string()),
    }
}

// 7. WPC verdicts and the closure functors
fn wpc_verdicts(bound: usize) -> (bool, String) {
    let rat = |n: i64, d: i64| Rat::new(BigInt::from(n), BigInt::from(d));

    if !is_wpc(&FinOrder::integers(), bound).is_yes() {
        return (false, "Z must be WPC".into());
    }
    let zi = FinOrder::gaussian_integers();
    match is_wpc(&zi, bound) {
        WpcVerdict::No { n: 2, value, .. }
            if value == vec![rat(-1, 2), rat(-1, 2)] => {}
        v => return (false, format!("Z[i] verdict wrong: {v:?}")),
    }
    match is_wpc(&FinOrder::z_inverted(2), 12) {
        WpcVerdict::YesUpTo(12) => {}
        v => return (false, format!("Z[1/2] verdict wrong: {v:?}")),
    }
    // w_upper(Z[i], {1, i}, 10) = Z
    let one = vec![rat(1, 1), rat(0, 1)];
    let i = vec![rat(0, 1), rat(1, 1)];
    match w_upper(&zi, &[one.clone(), i], 10) {
        Ok(r) => {
            if r.lattice().rank() != 1 || !r.lattice().contains(&one).unwrap_or(false) {
                return (false, "w_upper(Z[i]) is not Z".into());
            }
        }
        Err(e) => return (false, format!("w_upper failed: {e}")),
    }
    // w_lower(Z[i], 3, 4): denominators 2 and 6 from C(i,2), C(i,3); no fixed point
    match w_lower(&zi, 3, 4) {
        Ok(out) => {
            if out.status != ClosureStatus::NotStabilized {
                return (false, "w_lower(Z[i]) unexpectedly stabilized".into());
            }
            if !out.passes[0].binomial_added.contains(&vec![rat(-1, 2), rat(-1, 2)]) {
                return (false, "C(i,2) = (-1-i)/2 not joined in pass 1".into());
            }
            if !out.passes[0].binomial_added.contains(&vec![rat(1, 2), rat(1, 6)]) {
                return (false, "C(i,3) = (3+i)/6 not joined in pass 1".into());
            }
            let dens = out.denominators_seen();
            if !dens.contains(&BigInt::from(2)) || !dens.contains(&BigInt::from(6)) {
                return (false, format!("denominators 2 and 6 not exhibited: {dens:?}"));
            }
        }
        Err(e) => return (false, format!("w_lower failed: {e}")),
    }
    (true, "Z yes, Z[i] no with witness (-1-i)/2, Z[1/2] yes to 12, closures as expected".into())
}

// 8. Witt ring at truncation
fn witt_ring(cases: usize) -> (bool, String) {
    let census = match hom_census(2, 1, 4, DEFAULT_BUDGET) {
        Ok(c) => c,
        Err(e) => return (false, e.to_string()),
    };
    if census.count != 8 || !census.stable() {
        return (
            false,
            format!("census(2,1,4): count {} (doubled {})", census.count, census.doubled_count),
        );
    }
    if !census.add_well_defined || !census.mul_well_defined {
        return (false, "induced operations not well defined on tuples".into());
    }
    // frozen example: (eval_3 + eval_5)(C(X,2)) = 28 both ways, = 4 mod 8
    let c2 = IvPoly::binomial(2);
    let x = EvalHom::at_integer(2, 3, 2, &BigInt::from(3)).unwrap();
    let y = EvalHom::at_integer(2, 3, 2, &BigInt::from(5)).unwrap();
    let direct = witt_add(&x, &y).unwrap().apply(&c2).unwrap();
    let expanded = witt_add_via_coadd(&x, &y, &c2).unwrap();
    if *direct.value() != BigInt::from(4) || direct != expanded {
        return (false, "eval_3 + eval_5 example failed".into());
    }
    // random agreement between the residue pipeline and the expansion pipeline
    let mut rng = SplitMix64::new(0x0008);
    for _ in 0..cases {
        let p = [2u64, 3][rng.usize_in(0, 1)];
        let k = rng.int_in(1, 3) as u32;
        let d = rng.int_in(1, 4) as u32;
        let a = EvalHom::at_integer(p, k, d, &BigInt::from(rng.int_in(0, 300))).unwrap();
        let b = EvalHom::at_integer(p, k, d, &BigInt::from(rng.int_in(0, 300))).unwrap();
        let f = IvPoly::from_coeffs(
            (0..=d as usize).map(|n| (n, BigInt::from(rng.int_in(-9, 9)))),
        );
        if witt_add(&a, &b).unwrap().apply(&f).unwrap() != witt_add_via_coadd(&a, &b, &f).unwrap()
        {
            return (false, "addition pipelines disagree".into());
        }
        if witt_mul(&a, &b).unwrap().apply(&f).unwrap() != witt_mul_via_comul(&a, &b, &f).unwrap()
        {
            return (false, "multiplication pipelines disagree".into());
        }
    }
    (true, format!("census(2,1,4) = 8 homs (stable), {cases} random expansion agreements"))
}

// 9. torsion-freeness argument
fn torsion_argument(primes: &[u64]) -> (bool, String) {
    for &p in primes {
        match torsion_argument_check(p) {
            Ok(r) if r.pass() => {}
            Ok(_) => return (false, format!("argument fails at p = {p}")),
            Err(e) => return (false, e.to_string()),
        }
    }
    (true, format!("F = (X^p - X)/p checks out for p in {primes:?}"))
}

// 10. Bin at truncation plus table integrality
fn bin_truncation(max_table: usize) -> (bool, String) {
    // integrality for all lengths up to max_table (construction fails otherwise)
    for n in 1..=max_table {
        if let Err(e) = LambdaTables::new(n) {
            return (false, format!("tables at N = {n}: {e}"));
        }
    }
    let tables = LambdaTables::new(4).expect("already built");
    let fixed = match bin_fixed_points(&tables, 2, DEFAULT_BUDGET) {
        Ok(r) => r,
        Err(e) => return (false, e.to_string()),
    };
    if !fixed.embedded_subset_of_fixed {
        return (false, "embedded set escapes the Adams-fixed set".into());
    }
    let compare = match bin_compare_witt(2, &tables, DEFAULT_BUDGET) {
        Ok(r) => r,
        Err(e) => return (false, e.to_string()),
    };
    if !compare.pass() {
        return (false, "embedding does not respect the Witt ring operations".into());
    }
    (
        true,
        format!(
            "tables integral to N = {max_table}; p=2, N=4: fixed {} / embedded {}, census {}",
            fixed.fixed_count(),
            fixed.embedded_count(),
            compare.census_count
        ),
    )
}

// substitution-compatibility spot check shared by the quick suite
fn substitution_spot() -> (bool, String) {
    let x = MultiRatPoly::variable(2, 0);
    let y = MultiRatPoly::variable(2, 1);
    let p = &x + &y;
    for n in 0..=6usize {
        let f = IvPoly::binomial(n);
        if substitute_poly(&f, &p, DEFAULT_VAR_DEGREE_CAP) != Ok(coadd(&f)) {
            return (false, format!("substitute(X+Y) != coadd at n={n}"));
        }
    }
    (true, "substitute(X+Y) matches coadd".into())
}

/// The full acceptance battery, one outcome per criterion.
pub fn run_acceptance() -> Vec<CriterionOutcome> {
    vec![
        run_criterion(1, "basis round-trip", 5_000, || basis_roundtrip(500, 500, 30)),
        run_criterion(2, "co-operation soundness", 10_000, || {
            cooperation_soundness(12, 100)
        }),
        run_criterion(3, "Vandermonde identity", 1_000, || vandermonde(20)),
        run_criterion(4, "biring axiom suite", 30_000, || biring_axioms(8)),
        run_criterion(5, "plethory axioms", 30_000, || plethory_axioms(24, 200)),
        run_criterion(6, "theta surjectivity", 20_000, || theta_surjectivity(8)),
        run_criterion(7, "WPC verdicts", 5_000, || wpc_verdicts(10)),
        run_criterion(8, "Witt ring census", 10_000, || witt_ring(200)),
        run_criterion(9, "torsion argument", 1_000, || torsion_argument(&[2, 3, 5])),
        run_criterion(10, "Bin at truncation", 60_000, || bin_truncation(8)),
    ]
}

/// Reduced-bound battery; the whole run stays well under ten seconds.
pub fn run_quick() -> Vec<CriterionOutcome> {
    vec![
        run_criterion(1, "basis round-trip", 5_000, || basis_roundtrip(50, 50, 10)),
        run_criterion(2, "co-operation soundness", 10_000, || {
            cooperation_soundness(6, 20)
        }),
        run_criterion(3, "Vandermonde identity", 1_000, || vandermonde(10)),
        run_criterion(4, "biring axiom suite", 30_000, || biring_axioms(4)),
        run_criterion(5, "plethory axioms", 30_000, || plethory_axioms(8, 30)),
        run_criterion(6, "theta surjectivity", 20_000, || theta_surjectivity(4)),
        run_criterion(7, "WPC verdicts", 5_000, || wpc_verdicts(10)),
        run_criterion(8, "Witt ring census", 10_000, || witt_ring(40)),
        run_criterion(9, "torsion argument", 1_000, || torsion_argument(&[2, 3])),
        run_criterion(10, "Bin at truncation", 60_000, || bin_truncation(4)),
        run_criterion(11, "substitution compatibility", 5_000, substitution_spot),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_is_green() {
        for outcome in run_quick() {
            assert!(
                outcome.passed(),
                "criterion {} ({}) failed: {}",
                outcome.id,
                outcome.name,
                outcome.detail
            );
        }
    }
}
