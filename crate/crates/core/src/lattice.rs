//! Full-rank integer lattices inside a rational vector space.
//!
//! A lattice is stored by a basis of exact rational vectors. Hermite normal
//! form is computed on the integer matrix obtained by clearing denominators,
//! with basis vectors as rows in echelon form: positive pivots, entries above
//! a pivot reduced into `[0, pivot)`. Read with basis vectors as columns this
//! is the lower-triangular convention.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::Q;
use crate::linalg::{coords_in, span_rank, Mat};

#[derive(Clone, Debug, PartialEq)]
pub struct IntegerLattice {
    basis: Vec<Vec<Q>>,
    ambient_dim: usize,
}

impl IntegerLattice {
    pub fn new(basis: Vec<Vec<Q>>, ambient_dim: usize) -> Result<Self> {
        for v in &basis {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, got: v.len() });
            }
        }
        if span_rank(&basis) != basis.len() {
            return Err(Error::DependentBasis);
        }
        Ok(IntegerLattice { basis, ambient_dim })
    }

    /// The standard lattice `Z^n`.
    pub fn standard(n: usize) -> Self {
        let basis = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
            .collect();
        IntegerLattice { basis, ambient_dim: n }
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Coordinates of `v` in the lattice basis, if `v` is in the rational span.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        coords_in(&self.basis, v)
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.coordinates(v).is_some_and(|c| c.iter().all(Q::is_integer))
    }

    /// Whether `other` is a sublattice of `self`.
    pub fn contains_lattice(&self, other: &IntegerLattice) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }
}

/// Hermite normal form of a lattice basis. Fails on a dependent basis.
pub fn hnf(lattice: &IntegerLattice) -> Result<IntegerLattice> {
    if span_rank(&lattice.basis) != lattice.basis.len() {
        return Err(Error::DependentBasis);
    }
    let den = lattice
        .basis
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let rows: Vec<Vec<BigInt>> = lattice
        .basis
        .iter()
        .map(|v| v.iter().map(|x| (x * Q::from_integer(den.clone())).to_integer()).collect())
        .collect();
    let h = integer_hnf(rows);
    let basis = h
        .into_iter()
        .map(|row| row.into_iter().map(|x| Q::new(x, den.clone())).collect())
        .collect();
    Ok(IntegerLattice { basis, ambient_dim: lattice.ambient_dim })
}

/// Row-echelon Hermite normal form of an integer matrix with independent rows.
fn integer_hnf(mut m: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Euclid on column c among rows r.. until a single nonzero remains.
        loop {
            let nonzero: Vec<usize> = (r..rows).filter(|&i| !m[i][c].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&i| m[i][c].abs()).unwrap();
            m.swap(r, p);
            if nonzero.len() == 1 {
                break;
            }
            for i in r + 1..rows {
                if m[i][c].is_zero() {
                    continue;
                }
                let f = m[i][c].div_floor(&m[r][c]);
                let pivot = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot) {
                    *x -= p * &f;
                }
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            for x in m[r].iter_mut() {
                *x = -x.clone();
            }
        }
        for i in 0..r {
            let f = m[i][c].div_floor(&m[r][c]);
            if f.is_zero() {
                continue;
            }
            let pivot = m[r].clone();
            for (x, p) in m[i].iter_mut().zip(&pivot) {
                *x -= p * &f;
            }
        }
        r += 1;
    }
    m
}

/// Index `[sup : sub]` of a sublattice of equal rank.
pub fn lattice_index(sub: &IntegerLattice, sup: &IntegerLattice) -> Result<BigInt> {
    if sub.rank() != sup.rank() {
        return Err(Error::RankMismatch(sub.rank(), sup.rank()));
    }
    if sub.ambient_dim != sup.ambient_dim {
        return Err(Error::DimensionMismatch { expected: sup.ambient_dim, got: sub.ambient_dim });
    }
    let mut rows = Vec::with_capacity(sub.rank());
    for v in &sub.basis {
        let c = sup.coordinates(v).ok_or(Error::NotSublattice)?;
        if !c.iter().all(Q::is_integer) {
            return Err(Error::NotSublattice);
        }
        rows.push(c);
    }
    let det = Mat::from_rows(rows).det();
    Ok(det.abs().to_integer())
}
