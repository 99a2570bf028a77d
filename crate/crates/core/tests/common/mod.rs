//! Seeded generators of exact test data for the matrix models.
#![allow(dead_code)]

use hermsym_core::field::{qi, Field, Gauss};
use hermsym_core::hermitian::HermitianFamily;
use hermsym_core::linalg::Mat;
use hermsym_core::matrixreal::{HElement, JordanElement, MatrixModel, Shape};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn gauss_int(rng: &mut ChaCha8Rng, k: i64) -> Gauss {
    let re = rng.gen_range(-k..=k);
    let im = if rng.gen_bool(0.5) { rng.gen_range(-k..=k) } else { 0 };
    Gauss::new(qi(re), qi(im))
}

pub fn random_mat(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Mat<Gauss> {
    Mat::from_fn(rows, cols, |_, _| gauss_int(rng, 3))
}

pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Mat<Gauss> {
    loop {
        let m = random_mat(rng, n, n);
        if !m.det().is_zero() {
            return m;
        }
    }
}

pub fn random_skew(rng: &mut ChaCha8Rng, n: usize) -> Mat<Gauss> {
    let a = random_mat(rng, n, n);
    &a - &a.transpose()
}

/// `D = (I − S)(I + S)⁻¹ ∈ SO(n, C)` for a random skew `S`.
pub fn random_so(rng: &mut ChaCha8Rng, n: usize) -> Mat<Gauss> {
    let id = Mat::identity(n);
    loop {
        let s = random_skew(rng, n);
        if let Some(inv) = (&id + &s).inverse() {
            return &(&id - &s) * &inv;
        }
    }
}

pub fn random_h(rng: &mut ChaCha8Rng, model: &MatrixModel) -> HElement {
    match model.shape() {
        Shape::Rect(p, q) => HElement::Unitary { a: random_invertible(rng, p), d: random_invertible(rng, q) },
        Shape::Sym(n) | Shape::Skew(n) => HElement::General { a: random_invertible(rng, n) },
        Shape::Row(n) => {
            let lambda = loop {
                let l = gauss_int(rng, 3);
                if !l.is_zero() {
                    break l;
                }
            };
            HElement::Orthogonal { lambda, d: random_so(rng, n) }
        }
    }
}

/// A random element of `m⁺` whose rank is at most `k` (and generically `k`).
pub fn random_x_of_rank(rng: &mut ChaCha8Rng, model: &MatrixModel, k: usize) -> JordanElement {
    let entries = match model.shape() {
        Shape::Rect(p, q) => &random_mat(rng, p, k) * &random_mat(rng, k, q),
        Shape::Sym(n) => {
            let u = random_mat(rng, n, k);
            let d = Mat::from_fn(k, k, |i, j| if i == j { Gauss::from_i64(i as i64 + 1) } else { Gauss::zero() });
            &(&u * &d) * &u.transpose()
        }
        Shape::Skew(n) => {
            let u = random_mat(rng, n, 2 * k);
            let j = Mat::from_fn(2 * k, 2 * k, |a, b| {
                if a % 2 == 0 && b == a + 1 {
                    Gauss::one()
                } else if b % 2 == 0 && a == b + 1 {
                    -Gauss::one()
                } else {
                    Gauss::zero()
                }
            });
            &(&u * &j) * &u.transpose()
        }
        Shape::Row(n) => match k {
            0 => Mat::zeros(1, n),
            1 => {
                let mut v = vec![Gauss::zero(); n];
                v[0] = Gauss::one();
                v[1] = Gauss::i();
                let w = random_so(rng, n).mul_vec(&v);
                let t = gauss_int(rng, 2) + Gauss::from_i64(4);
                Mat::from_fn(1, n, |_, j| w[j].clone() * t.clone())
            }
            _ => random_mat(rng, 1, n),
        },
    };
    JordanElement::new(model, entries).expect("generated element has the model's shape")
}

pub fn random_x(rng: &mut ChaCha8Rng, model: &MatrixModel) -> JordanElement {
    let k = rng.gen_range(0..=model.r());
    random_x_of_rank(rng, model, k)
}

/// Matrix models with parameters up to 5.
pub fn models_up_to_5() -> Vec<MatrixModel> {
    let mut fams = Vec::new();
    for p in 1..=5 {
        for q in p..=5 {
            fams.push(HermitianFamily::AIII { p, q });
        }
    }
    fams.extend((1..=5).map(|n| HermitianFamily::CI { n }));
    fams.extend((3..=5).map(|n| HermitianFamily::DIII { n }));
    fams.extend((3..=5).map(|n| HermitianFamily::BDI { n }));
    fams.into_iter().map(|f| MatrixModel::new(f).expect("classical family")).collect()
}
