//! Root systems of types A–E7 in their standard orthonormal-coordinate models.
//!
//! Coordinates:
//! - `A_n`: sum-zero hyperplane of `R^{n+1}`, `α_i = e_i - e_{i+1}`;
//! - `B_n`, `C_n`, `D_n`: `R^n` with the usual simple roots (`e_n`, `2e_n`,
//!   `e_{n-1} + e_n` for the last node);
//! - `E6`, `E7`: the first six / seven Bourbaki simple roots of `E8` in `R^8`:
//!   `α1 = ½(e1 + e8) - ½(e2 + … + e7)`, `α2 = e1 + e2`, `α_k = e_{k-1} - e_{k-2}` for `k ≥ 3`.
//!
//! Roots and Cartan elements share the ambient space through the standard dot
//! product, so `α(Y) = α · Y`. Every invariant form used by the crate is a
//! rational multiple of that dot product on the span of the roots.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{q, qi, Q};
use crate::linalg::{coords_in, Mat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    ambient_dim: usize,
    simple_roots: Vec<Vec<Q>>,
    cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, lexicographically sorted.
    positive_coords: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<Q>>,
    highest: usize,
    marks: Vec<i64>,
    comarks: Vec<i64>,
    norm_scale: Q,
    killing_coeff: Q,
    root_set: HashSet<Vec<i64>>,
}

/// Build a root system; `(family, rank)` must name a simple root system with
/// a standard model (`A_n` n≥1, `B_n` n≥2, `C_n` n≥2, `D_n` n≥3, `E6`, `E7`).
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    let ok = match family {
        Family::A => rank >= 1,
        Family::B | Family::C => rank >= 2,
        Family::D => rank >= 3,
        Family::E6 => rank == 6,
        Family::E7 => rank == 7,
    };
    if !ok {
        return Err(Error::InvalidRootSystem { family: family.to_string(), rank });
    }
    Ok(RootSystem::construct(family, rank))
}

/// 1 + sum of the comarks.
pub fn dual_coxeter(rs: &RootSystem) -> i64 {
    rs.dual_coxeter()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()
}

fn diff(n: usize, i: usize, j: usize) -> Vec<Q> {
    let mut v = unit(n, i);
    v[j] -= Q::one();
    v
}

fn simple_roots(family: Family, rank: usize) -> (usize, Vec<Vec<Q>>) {
    match family {
        Family::A => {
            let n = rank + 1;
            (n, (0..rank).map(|i| diff(n, i, i + 1)).collect())
        }
        Family::B | Family::C | Family::D => {
            let n = rank;
            let mut roots: Vec<Vec<Q>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let last = match family {
                Family::B => unit(n, n - 1),
                Family::C => {
                    let mut v = unit(n, n - 1);
                    v[n - 1] = qi(2);
                    v
                }
                _ => {
                    let mut v = unit(n, n - 1);
                    v[n - 2] = Q::one();
                    v
                }
            };
            roots.push(last);
            (n, roots)
        }
        Family::E6 | Family::E7 => {
            let h = q(1, 2);
            let mut a1 = vec![-h.clone(); 8];
            a1[0] = h.clone();
            a1[7] = h;
            let mut a2 = unit(8, 0);
            a2[1] = Q::one();
            let mut roots = vec![a1, a2];
            for k in 3..=rank {
                // α_k = e_{k-1} - e_{k-2} (1-based coordinates)
                roots.push(diff(8, k - 2, k - 3));
            }
            (8, roots)
        }
    }
}

impl RootSystem {
    /// Unvalidated constructor; also accepts `C_1` (≅ `A_1`) for the `CI(1)` case.
    pub(crate) fn construct(family: Family, rank: usize) -> RootSystem {
        let (ambient_dim, simple) = simple_roots(family, rank);
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let v = qi(2) * dot(&simple[i], &simple[j]) / dot(&simple[j], &simple[j]);
                        assert!(v.is_integer());
                        v.to_integer().try_into().unwrap()
                    })
                    .collect()
            })
            .collect();
        let positive_coords = positive_roots_from_cartan(&cartan);
        let to_vec = |c: &Vec<i64>| -> Vec<Q> {
            let mut v = vec![Q::zero(); ambient_dim];
            for (k, &ck) in c.iter().enumerate() {
                if ck != 0 {
                    for (x, s) in v.iter_mut().zip(&simple[k]) {
                        *x += s * qi(ck);
                    }
                }
            }
            v
        };
        let positive_roots: Vec<Vec<Q>> = positive_coords.iter().map(to_vec).collect();
        let highest = (0..positive_coords.len())
            .max_by_key(|&i| positive_coords[i].iter().sum::<i64>())
            .unwrap();
        let marks = positive_coords[highest].clone();
        let theta = &positive_roots[highest];
        let theta_sq = dot(theta, theta);
        let comarks: Vec<i64> = (0..rank)
            .map(|i| {
                let c = qi(marks[i]) * dot(&simple[i], &simple[i]) / &theta_sq;
                assert!(c.is_integer());
                c.to_integer().try_into().unwrap()
            })
            .collect();
        let norm_scale = qi(2) / &theta_sq;
        let killing_coeff = {
            let s: Q = positive_roots.iter().map(|a| {
                let x = dot(a, theta);
                &x * &x
            }).fold(Q::zero(), |acc, x| acc + x);
            qi(2) * s / &theta_sq
        };
        let mut root_set = HashSet::new();
        for c in &positive_coords {
            root_set.insert(c.clone());
            root_set.insert(c.iter().map(|x| -x).collect());
        }
        RootSystem {
            family,
            rank,
            ambient_dim,
            simple_roots: simple,
            cartan,
            positive_coords,
            positive_roots,
            highest,
            marks,
            comarks,
            norm_scale,
            killing_coeff,
            root_set,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }
    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn simple_roots(&self) -> &[Vec<Q>] {
        &self.simple_roots
    }
    /// `A_ij = 2(α_i, α_j)/(α_j, α_j)`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }
    pub fn positive_roots(&self) -> &[Vec<Q>] {
        &self.positive_roots
    }
    /// Positive roots in simple-root coordinates, same order as [`Self::positive_roots`].
    pub fn positive_coords(&self) -> &[Vec<i64>] {
        &self.positive_coords
    }
    pub fn highest_root(&self) -> &[Q] {
        &self.positive_roots[self.highest]
    }
    /// Coefficients of the highest root in the simple roots.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }
    /// Coefficients of the highest coroot in the simple coroots.
    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }
    pub fn dual_coxeter(&self) -> i64 {
        1 + self.comarks.iter().sum::<i64>()
    }
    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    /// Invariant form on roots normalized so long roots have squared length 2.
    pub fn norm_form(&self, a: &[Q], b: &[Q]) -> Q {
        &self.norm_scale * dot(a, b)
    }

    /// The scalar `k` with `Killing(Y, Y') = k (Y · Y')` on the Cartan.
    pub fn killing_coeff(&self) -> &Q {
        &self.killing_coeff
    }

    /// Killing form on the Cartan subalgebra, `Σ_{α∈Δ} α(Y) α(Y')`.
    pub fn killing_cartan(&self, y: &[Q], z: &[Q]) -> Q {
        &self.killing_coeff * dot(y, z)
    }

    /// Form on roots dual to the Killing form.
    pub fn killing_dual(&self, a: &[Q], b: &[Q]) -> Q {
        dot(a, b) / &self.killing_coeff
    }

    /// `1/(2N)`: the factor with `killing_dual = norm_form · killing_scale`.
    pub fn killing_scale(&self) -> Q {
        Q::one() / qi(2 * self.dual_coxeter())
    }

    /// The coroot `h_α = 2α/(α·α)` as a Cartan element.
    pub fn coroot(&self, a: &[Q]) -> Vec<Q> {
        let s = qi(2) / dot(a, a);
        a.iter().map(|x| x * &s).collect()
    }

    /// Whether an integer vector of simple-root coordinates is a root.
    pub fn is_root_coords(&self, c: &[i64]) -> bool {
        self.root_set.contains(c)
    }

    /// Simple-root coordinates of a vector in the root lattice span.
    pub fn coords_of(&self, v: &[Q]) -> Option<Vec<Q>> {
        coords_in(&self.simple_roots, v)
    }

    /// Cartan element `Y` in the span of the roots with `α_i(Y) = target[i]`.
    pub fn coweight_with_values(&self, target: &[Q]) -> Vec<Q> {
        let gram = Mat::from_fn(self.rank, self.rank, |i, j| {
            dot(&self.simple_roots[i], &self.simple_roots[j])
        });
        let c = gram.solve(target).expect("Gram matrix of simple roots is invertible");
        let mut y = vec![Q::zero(); self.ambient_dim];
        for (k, ck) in c.iter().enumerate() {
            for (x, s) in y.iter_mut().zip(&self.simple_roots[k]) {
                *x += s * ck;
            }
        }
        y
    }

    /// Fundamental coweight dual to simple root `i`.
    pub fn fundamental_coweight(&self, i: usize) -> Vec<Q> {
        let target: Vec<Q> = (0..self.rank).map(|j| if i == j { Q::one() } else { Q::zero() }).collect();
        self.coweight_with_values(&target)
    }

    pub fn simple_coroots(&self) -> Vec<Vec<Q>> {
        self.simple_roots.iter().map(|a| self.coroot(a)).collect()
    }

    /// Short label such as `C3` or `E6`.
    pub fn label(&self) -> String {
        match self.family {
            Family::E6 | Family::E7 => self.family.to_string(),
            f => format!("{}{}", f, self.rank),
        }
    }
}

/// Enumerate positive roots from a Cartan matrix by root strings.
fn positive_roots_from_cartan(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cartan.len();
    let simple: Vec<Vec<i64>> =
        (0..rank).map(|i| (0..rank).map(|j| i64::from(i == j)).collect()).collect();
    let mut all: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut layer = simple.clone();
    while !layer.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &layer {
            for i in 0..rank {
                if beta == &simple[i] {
                    continue;
                }
                // p: how far down the α_i-string through β goes.
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..rank).map(|k| beta[k] * cartan[k][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !all.contains(&up) && !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    let mut out: Vec<Vec<i64>> = all.into_iter().collect();
    out.sort();
    out
}
