//! Integer lattices with rational coordinates, in canonical Hermite form.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    DimensionMismatch { expected: usize, found: usize },
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {}, found {}", expected, found)
            }
        }
    }
}

impl core::error::Error for LatticeError {}

/// A finitely generated subgroup of Q^dim, i.e. the set of integer
/// combinations of the basis vectors.
///
/// The basis is kept in a canonical row-style Hermite form over Q: scale a
/// generating set by the least common denominator, bring the integer matrix
/// to row Hermite normal form (positive pivots, entries above each pivot
/// reduced into `[0, pivot)`), and scale back. Two generating sets of the
/// same lattice always produce the same basis matrix, so structural equality
/// is lattice equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    basis: Vec<Vec<Rat>>,
}

/// Canonical row Hermite normal form of an integer matrix; zero rows are
/// dropped, pivots are positive, and entries above each pivot are reduced
/// into `[0, pivot)`.
pub fn hnf_rows(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    if rows.is_empty() {
        return rows;
    }
    let ncols = rows[0].len();
    let mut r = 0;
    for c in 0..ncols {
        if r >= rows.len() {
            break;
        }
        // euclidean-reduce column c over rows[r..] until one nonzero entry remains
        loop {
            let mut nz: Vec<usize> = (r..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by_key(|&i| rows[i][c].abs());
            let pivot_row = rows[nz[0]].clone();
            for &i in &nz[1..] {
                let q = rows[i][c].div_floor(&pivot_row[c]);
                for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= p * &q;
                }
            }
            rows.retain(|row| row.iter().any(|x| !x.is_zero()));
            if r >= rows.len() {
                break;
            }
        }
        if r >= rows.len() {
            break;
        }
        let Some(i) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, i);
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -core::mem::take(x);
            }
        }
        // reduce entries above the pivot into [0, pivot)
        let pivot_row = rows[r].clone();
        for row in rows.iter_mut().take(r) {
            let q = row[c].div_floor(&pivot_row[c]);
            if q.is_zero() {
                continue;
            }
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= p * &q;
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

fn denominator_lcm(vecs: &[Vec<Rat>]) -> BigInt {
    let mut l = BigInt::one();
    for v in vecs {
        for x in v {
            l = l.lcm(x.denom());
        }
    }
    l
}

impl Lattice {
    /// The zero lattice in Q^dim.
    pub fn zero(dim: usize) -> Self {
        Lattice { dim, basis: Vec::new() }
    }

    /// The standard lattice Z^dim.
    pub fn standard(dim: usize) -> Self {
        let basis = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        Lattice { dim, basis }
    }

    pub fn from_generators(dim: usize, gens: &[Vec<Rat>]) -> Result<Self, LatticeError> {
        for g in gens {
            if g.len() != dim {
                return Err(LatticeError::DimensionMismatch {
                    expected: dim,
                    found: g.len(),
                });
            }
        }
        let l = denominator_lcm(gens);
        let lr = Rat::from(l.clone());
        let int_rows: Vec<Vec<BigInt>> = gens
            .iter()
            .map(|g| g.iter().map(|x| (x * &lr).to_integer()).collect())
            .collect();
        let h = hnf_rows(int_rows);
        let basis = h
            .into_iter()
            .map(|row| row.into_iter().map(|x| Rat::new(x, l.clone())).collect())
            .collect();
        Ok(Lattice { dim, basis })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Canonical basis vectors (rows).
    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    /// Expresses `v` in the basis, if it lies in the Q-span at all. The
    /// canonical basis rows are linearly independent, so the rational
    /// coefficient vector is unique.
    pub fn solve(&self, v: &[Rat]) -> Result<Option<Vec<Rat>>, LatticeError> {
        if v.len() != self.dim {
            return Err(LatticeError::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        let mut rem: Vec<Rat> = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.basis.len());
        for row in &self.basis {
            let pc = row.iter().position(|x| !x.is_zero()).expect("no zero rows");
            let a = &rem[pc] / &row[pc];
            if !a.is_zero() {
                for (r, b) in rem.iter_mut().zip(row) {
                    *r = &*r - &(&a * b);
                }
            }
            coeffs.push(a);
        }
        if rem.iter().all(|x| x.is_zero()) {
            Ok(Some(coeffs))
        } else {
            Ok(None)
        }
    }

    /// Exact membership: is `v` an integer combination of the basis?
    pub fn contains(&self, v: &[Rat]) -> Result<bool, LatticeError> {
        Ok(self
            .solve(v)?
            .is_some_and(|cs| cs.iter().all(|a| a.denom().is_one())))
    }

    pub fn join(&self, other: &Lattice) -> Result<Lattice, LatticeError> {
        if other.dim != self.dim {
            return Err(LatticeError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Lattice::from_generators(self.dim, &gens)
    }

    pub fn join_vectors(&self, vs: &[Vec<Rat>]) -> Result<Lattice, LatticeError> {
        let mut gens = self.basis.clone();
        gens.extend(vs.iter().cloned());
        Lattice::from_generators(self.dim, &gens)
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> Result<bool, LatticeError> {
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Scales every basis vector by `c`.
    pub fn scaled(&self, c: &Rat) -> Lattice {
        let gens: Vec<Vec<Rat>> = self
            .basis
            .iter()
            .map(|row| row.iter().map(|x| x * c).collect())
            .collect();
        Lattice::from_generators(self.dim, &gens).expect("dimensions preserved")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    fn vecr(xs: &[(i64, i64)]) -> Vec<Rat> {
        xs.iter().map(|&(n, d)| rat(n, d)).collect()
    }

    #[test]
    fn standard_lattice_membership() {
        let z2 = Lattice::standard(2);
        assert!(z2.contains(&vecr(&[(3, 1), (-5, 1)])).unwrap());
        assert!(!z2.contains(&vecr(&[(1, 2), (0, 1)])).unwrap());
        assert!(matches!(
            z2.contains(&vecr(&[(1, 1)])),
            Err(LatticeError::DimensionMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn span_membership_solves_exactly() {
        // L spanned by (2,0),(1,1): (3,1) = 1*(2,0) + 1*(1,1)
        let l = Lattice::from_generators(2, &[vecr(&[(2, 1), (0, 1)]), vecr(&[(1, 1), (1, 1)])])
            .unwrap();
        assert!(l.contains(&vecr(&[(3, 1), (1, 1)])).unwrap());
        assert!(!l.contains(&vecr(&[(0, 1), (1, 1)])).unwrap());
    }

    #[test]
    fn join_examples() {
        let z2 = Lattice::standard(2);
        assert_eq!(z2.join(&z2).unwrap(), z2);

        // join(2Z, 3Z) = Z in dimension 1
        let two = Lattice::from_generators(1, &[vecr(&[(2, 1)])]).unwrap();
        let three = Lattice::from_generators(1, &[vecr(&[(3, 1)])]).unwrap();
        assert_eq!(two.join(&three).unwrap(), Lattice::standard(1));

        // join(span{(2,0),(0,2)}, span{(1,1)}) = span{(1,1),(0,2)}
        let a = Lattice::from_generators(2, &[vecr(&[(2, 1), (0, 1)]), vecr(&[(0, 1), (2, 1)])])
            .unwrap();
        let b = Lattice::from_generators(2, &[vecr(&[(1, 1), (1, 1)])]).unwrap();
        let j = a.join(&b).unwrap();
        let expect =
            Lattice::from_generators(2, &[vecr(&[(1, 1), (1, 1)]), vecr(&[(0, 1), (2, 1)])])
                .unwrap();
        assert_eq!(j, expect);
    }

    fn arb_vec2() -> impl Strategy<Value = Vec<Rat>> {
        (
            (-6i64..7, 1i64..4),
            (-6i64..7, 1i64..4),
        )
            .prop_map(|((a, b), (c, d))| alloc::vec![rat(a, b), rat(c, d)])
    }

    proptest! {
        // canonical form is a normal form: shuffled / redundant generating
        // sets of the same lattice canonicalize identically
        #[test]
        fn canonical_form_is_normal_form(
            g1 in arb_vec2(),
            g2 in arb_vec2(),
            c1 in -3i64..4,
            c2 in -3i64..4,
        ) {
            let l = Lattice::from_generators(2, &[g1.clone(), g2.clone()]).unwrap();
            // extra generator = integer combination of the first two
            let extra: Vec<Rat> = g1
                .iter()
                .zip(&g2)
                .map(|(a, b)| a * &rat(c1, 1) + b * &rat(c2, 1))
                .collect();
            let l2 = Lattice::from_generators(2, &[g2, extra, g1]).unwrap();
            prop_assert_eq!(l, l2);
        }

        #[test]
        fn join_preserves_membership(g1 in arb_vec2(), g2 in arb_vec2(), g3 in arb_vec2()) {
            let l1 = Lattice::from_generators(2, &[g1.clone(), g2]).unwrap();
            let l2 = Lattice::from_generators(2, &[g3]).unwrap();
            let j = l1.join(&l2).unwrap();
            prop_assert!(j.contains(&g1).unwrap());
            prop_assert!(l1.is_sublattice_of(&j).unwrap());
            prop_assert!(l2.is_sublattice_of(&j).unwrap());
            // idempotent, commutative
            prop_assert_eq!(j.join(&l2).unwrap(), j.clone());
            prop_assert_eq!(l2.join(&l1).unwrap(), j);
        }
    }
}
