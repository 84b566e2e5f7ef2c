//! Cross-module invariants that tie the expansion machinery to independent
//! evaluation oracles.

use plethys_core::biring::{coadd, colinear, comul, int_zn_member, BiringError};
use plethys_core::ivpoly::IvPoly;
use plethys_core::multipoly::MultiRatPoly;
use plethys_core::num_traits::One;
use plethys_core::rng::SplitMix64;
use plethys_core::{BigInt, Rat};

fn random_ivpoly(rng: &mut SplitMix64, max_deg: usize, max_coeff: i64) -> IvPoly {
    IvPoly::from_coeffs(
        (0..=rng.usize_in(0, max_deg)).map(|n| (n, BigInt::from(rng.int_in(-max_coeff, max_coeff)))),
    )
}

#[test]
fn cooperation_soundness_on_random_polynomials() {
    // expansions of f(X+Y) and f(XY) evaluate correctly on random integer
    // pairs in [-50, 50]^2, for random f of degree up to 12
    let mut rng = SplitMix64::new(61);
    for _ in 0..25 {
        let f = random_ivpoly(&mut rng, 12, 9);
        let ca = coadd(&f);
        let cm = comul(&f);
        for _ in 0..100 {
            let a = BigInt::from(rng.int_in(-50, 50));
            let b = BigInt::from(rng.int_in(-50, 50));
            assert_eq!(ca.eval_int(&[a.clone(), b.clone()]), f.eval_int(&(&a + &b)));
            assert_eq!(cm.eval_int(&[a.clone(), b.clone()]), f.eval_int(&(&a * &b)));
        }
    }
}

#[test]
fn membership_agrees_with_doubled_grid_evaluation() {
    // int_zn_member verdicts cross-checked against dense evaluation on the
    // grid with every degree doubled
    let mut rng = SplitMix64::new(62);
    let mut members = 0usize;
    let mut rejected = 0usize;
    for _ in 0..200 {
        let arity = rng.usize_in(2, 3);
        let mut f = MultiRatPoly::zero(arity);
        for _ in 0..rng.usize_in(1, 6) {
            let exp: Vec<usize> = (0..arity).map(|_| rng.usize_in(0, 3)).collect();
            let den = if rng.int_in(0, 3) == 0 { rng.int_in(2, 4) } else { 1 };
            f.add_term(
                exp,
                Rat::new(BigInt::from(rng.int_in(-6, 6)), BigInt::from(den)),
            );
        }
        let degs: Vec<usize> = (0..arity).map(|i| f.degree_in(i)).collect();
        match int_zn_member(&f) {
            Ok(expansion) => {
                members += 1;
                // walk the doubled grid and compare both values exactly
                let mut point = vec![0usize; arity];
                loop {
                    let ipt: Vec<BigInt> = point.iter().map(|&c| BigInt::from(c)).collect();
                    let rpt: Vec<Rat> = ipt.iter().map(|c| Rat::from(c.clone())).collect();
                    let direct = f.eval(&rpt);
                    assert!(direct.denom().is_one(), "member not integral off-grid");
                    assert_eq!(Rat::from(expansion.eval_int(&ipt)), direct);
                    let mut axis = 0;
                    loop {
                        if axis == arity {
                            break;
                        }
                        point[axis] += 1;
                        if point[axis] <= 2 * degs[axis] {
                            break;
                        }
                        point[axis] = 0;
                        axis += 1;
                    }
                    if axis == arity {
                        break;
                    }
                }
            }
            Err(BiringError::NotIntegerValued { witness }) => {
                rejected += 1;
                let rpt: Vec<Rat> = witness.iter().map(|c| Rat::from(c.clone())).collect();
                assert!(!f.eval(&rpt).denom().is_one(), "witness is not a witness");
            }
            Err(e) => panic!("unexpected error: {e}"),
        }
    }
    assert!(members > 20 && rejected > 20, "generator imbalance: {members}/{rejected}");
}

#[test]
fn colinear_functionals_form_a_ring_on_random_polynomials() {
    // the co-operation-induced sum and product of evaluation functionals
    // agree with evaluation at the sum and product of the points
    let mut rng = SplitMix64::new(63);
    for _ in 0..40 {
        let f = random_ivpoly(&mut rng, 8, 9);
        let ca = coadd(&f);
        let cm = comul(&f);
        let a = BigInt::from(rng.int_in(-25, 25));
        let b = BigInt::from(rng.int_in(-25, 25));
        let pa = colinear(a.clone());
        let pb = colinear(b.clone());
        let mut through_coadd = BigInt::from(0);
        for (deg, c) in ca.coeffs() {
            through_coadd += c
                * pa.apply(&IvPoly::binomial(deg[0]))
                * pb.apply(&IvPoly::binomial(deg[1]));
        }
        let mut through_comul = BigInt::from(0);
        for (deg, c) in cm.coeffs() {
            through_comul += c
                * pa.apply(&IvPoly::binomial(deg[0]))
                * pb.apply(&IvPoly::binomial(deg[1]));
        }
        assert_eq!(through_coadd, f.eval_int(&(&a + &b)));
        assert_eq!(through_comul, f.eval_int(&(&a * &b)));
    }
}
