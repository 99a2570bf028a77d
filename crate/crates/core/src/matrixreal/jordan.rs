//! Jordan determinant and rank on `m⁺`, and the action of `H^C`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{MatrixModel, Shape};
use crate::error::{Error, Result};
use crate::field::{fmt_q, parse_q, Field, Gauss};
use crate::hermitian::HermitianFamily;
use crate::linalg::{pfaffian, Mat};

/// An element of `m⁺` in the shape of its model.
#[derive(Clone, Debug, PartialEq)]
pub struct JordanElement {
    family: HermitianFamily,
    entries: Mat<Gauss>,
}

impl JordanElement {
    pub fn new(model: &MatrixModel, entries: Mat<Gauss>) -> Result<Self> {
        if !model.shape().contains(&entries) {
            return Err(Error::NotInModel(format!(
                "{} expects shape {:?}",
                model.family(),
                model.shape()
            )));
        }
        Ok(JordanElement { family: model.family(), entries })
    }

    pub fn zero(model: &MatrixModel) -> Self {
        let (r, c) = model.shape().dims();
        JordanElement { family: model.family(), entries: Mat::zeros(r, c) }
    }

    /// `e_Γ` as an element of the shape.
    pub fn e_gamma(model: &MatrixModel) -> Self {
        let e = model.extract(&model.e_gamma()).expect("e_Γ lies in m+");
        JordanElement { family: model.family(), entries: e }
    }

    pub fn family(&self) -> HermitianFamily {
        self.family
    }
    pub fn entries(&self) -> &Mat<Gauss> {
        &self.entries
    }
    pub fn scale(&self, t: &Gauss) -> Self {
        JordanElement { family: self.family, entries: self.entries.scale(t) }
    }
    pub fn add(&self, other: &Self) -> Self {
        JordanElement { family: self.family, entries: &self.entries + &other.entries }
    }

    fn check(&self, model: &MatrixModel) -> Result<()> {
        if self.family != model.family() {
            return Err(Error::NotInModel(format!("element of {} used with {}", self.family, model.family())));
        }
        Ok(())
    }

    pub fn to_record(&self) -> JordanElementRecord {
        let (family, params) = self.family.to_parts();
        let entries = self
            .entries
            .entries()
            .iter()
            .map(|z| [fmt_q(&z.re), fmt_q(&z.im)])
            .collect();
        JordanElementRecord { family, params, entries }
    }

    pub fn from_record(rec: &JordanElementRecord) -> Result<(MatrixModel, Self)> {
        let family = HermitianFamily::from_parts(&rec.family, &rec.params)?;
        let model = MatrixModel::new(family)?;
        let (rows, cols) = model.shape().dims();
        if rec.entries.len() != rows * cols {
            return Err(Error::Parse(format!("expected {} entries, got {}", rows * cols, rec.entries.len())));
        }
        let mut vals = Vec::with_capacity(rows * cols);
        for [re, im] in &rec.entries {
            let re = parse_q(re).ok_or_else(|| Error::Parse(format!("bad rational {re:?}")))?;
            let im = parse_q(im).ok_or_else(|| Error::Parse(format!("bad rational {im:?}")))?;
            vals.push(Gauss::new(re, im));
        }
        let m = Mat::from_fn(rows, cols, |i, j| vals[i * cols + j].clone());
        let x = JordanElement::new(&model, m)?;
        Ok((model, x))
    }
}

/// JSON form: `{"family": "CI", "params": {"n": 3}, "entries": [["1/1","0/1"], …]}`,
/// entries row-major as `[re, im]` pairs of `"num/den"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanElementRecord {
    pub family: String,
    pub params: BTreeMap<String, usize>,
    pub entries: Vec<[String; 2]>,
}

/// Jordan determinant, normalized so `det(e_Γ) = 1`. Tube models only.
pub fn jordan_det(model: &MatrixModel, x: &JordanElement) -> Result<Gauss> {
    x.check(model)?;
    if !model.tube() {
        return Err(Error::NonTube);
    }
    let b = &x.entries;
    Ok(match model.shape() {
        Shape::Rect(..) | Shape::Sym(_) => b.det(),
        Shape::Skew(_) => pfaffian(b),
        Shape::Row(_) => b.entries().iter().fold(Gauss::zero(), |acc, z| acc + z.clone() * z.clone()),
    })
}

/// Rank of `x`: number of nonzero coefficients in its normal form.
pub fn jordan_rank(model: &MatrixModel, x: &JordanElement) -> Result<usize> {
    x.check(model)?;
    let b = &x.entries;
    Ok(match model.shape() {
        Shape::Rect(..) | Shape::Sym(_) => b.rank(),
        Shape::Skew(_) => b.rank() / 2,
        Shape::Row(_) => {
            if b.is_zero() {
                0
            } else if b.entries().iter().fold(Gauss::zero(), |acc, z| acc + z.clone() * z.clone()).is_zero() {
                1
            } else {
                2
            }
        }
    })
}

/// Rank from polarizations of the determinant: the largest degree in `s` of
/// `det(s·x + y)` over the probes `y` (and `e_Γ`). Tube models only.
pub fn polarized_rank(model: &MatrixModel, x: &JordanElement, probes: &[JordanElement]) -> Result<usize> {
    x.check(model)?;
    let r = model.r();
    let mut best = 0;
    let eg = JordanElement::e_gamma(model);
    for y in std::iter::once(&eg).chain(probes) {
        y.check(model)?;
        let nodes: Vec<Gauss> = (0..=r).map(|s| Gauss::from_i64(s as i64)).collect();
        let mut vals = Vec::with_capacity(r + 1);
        for s in &nodes {
            vals.push(jordan_det(model, &x.scale(s).add(y))?);
        }
        let vandermonde = Mat::from_fn(r + 1, r + 1, |i, k| {
            let mut p = Gauss::one();
            for _ in 0..k {
                p = p * nodes[i].clone();
            }
            p
        });
        let coeffs = vandermonde.solve(&vals).expect("distinct interpolation nodes");
        if let Some(deg) = (0..=r).rev().find(|&k| !coeffs[k].is_zero()) {
            best = best.max(deg);
        }
    }
    Ok(best)
}

/// An element of `H^C` in block form.
#[derive(Clone, Debug)]
pub enum HElement {
    /// `diag(A, D)`, acting by `B ↦ A B D⁻¹`.
    Unitary { a: Mat<Gauss>, d: Mat<Gauss> },
    /// `diag(A, A^{−T})`, acting by `B ↦ A B Aᵀ` (symmetric or skew `B`).
    General { a: Mat<Gauss> },
    /// `R(λ) ⊕ D` with `R(λ) ∈ SO(2,C)` the rotation with `R u = λ u` and
    /// `D ∈ SO(n,C)`, acting by `z ↦ λ D z`.
    Orthogonal { lambda: Gauss, d: Mat<Gauss> },
}

impl HElement {
    /// The matrix in `G^C`.
    pub fn group_matrix(&self, model: &MatrixModel) -> Result<Mat<Gauss>> {
        let n = model.size();
        let block = |a: &Mat<Gauss>, b: &Mat<Gauss>| {
            let k = a.rows();
            Mat::from_fn(n, n, |i, j| match (i < k, j < k) {
                (true, true) => a[(i, j)].clone(),
                (false, false) => b[(i - k, j - k)].clone(),
                _ => Gauss::zero(),
            })
        };
        match (self, model.shape()) {
            (HElement::Unitary { a, d }, Shape::Rect(p, q)) => {
                if a.rows() != p || a.cols() != p || d.rows() != q || d.cols() != q {
                    return Err(Error::NotInModel("block sizes do not match".into()));
                }
                if a.det().is_zero() || d.det().is_zero() {
                    return Err(Error::Singular);
                }
                Ok(block(a, d))
            }
            (HElement::General { a }, Shape::Sym(k) | Shape::Skew(k)) => {
                if a.rows() != k || a.cols() != k {
                    return Err(Error::NotInModel("block size does not match".into()));
                }
                let inv = a.inverse().ok_or(Error::Singular)?;
                Ok(block(a, &inv.transpose()))
            }
            (HElement::Orthogonal { lambda, d }, Shape::Row(k)) => {
                if d.rows() != k || d.cols() != k {
                    return Err(Error::NotInModel("block size does not match".into()));
                }
                if lambda.is_zero() {
                    return Err(Error::Singular);
                }
                if d.transpose() * d.clone() != Mat::identity(k) || d.det() != Gauss::one() {
                    return Err(Error::NotInModel("D must lie in SO(n,C)".into()));
                }
                let li = lambda.inv();
                let half = Gauss::real(crate::field::q(1, 2));
                let a = (lambda.clone() + li.clone()) * half.clone();
                let b = (lambda.clone() - li) * half * Gauss::i().inv();
                let r = Mat::from_rows(vec![vec![a.clone(), -b.clone()], vec![b, a]]);
                Ok(block(&r, d))
            }
            _ => Err(Error::NotInModel(format!("H^C element does not match {}", model.family()))),
        }
    }

    /// The explicit character by which the Jordan determinant transforms:
    /// `det A / det D`, `det(A)²`, `det A`, `λ²` in the four models.
    pub fn character(&self, model: &MatrixModel) -> Result<Gauss> {
        match (self, model.shape()) {
            (HElement::Unitary { a, d }, Shape::Rect(..)) => Ok(a.det() * d.det().inv()),
            (HElement::General { a }, Shape::Sym(_)) => Ok(a.det() * a.det()),
            (HElement::General { a }, Shape::Skew(_)) => Ok(a.det()),
            (HElement::Orthogonal { lambda, .. }, Shape::Row(_)) => Ok(lambda.clone() * lambda.clone()),
            _ => Err(Error::NotInModel(format!("H^C element does not match {}", model.family()))),
        }
    }
}

/// `Ad(h) x`, computed by conjugation in `G^C`.
pub fn act(model: &MatrixModel, h: &HElement, x: &JordanElement) -> Result<JordanElement> {
    x.check(model)?;
    let g = h.group_matrix(model)?;
    let gi = g.inverse().ok_or(Error::Singular)?;
    let y = &(&g * &model.embed(&x.entries)?) * &gi;
    Ok(JordanElement { family: x.family, entries: model.extract(&y)? })
}

/// Determinant of `Ad(h)` on `m⁺`.
pub fn det_on_mplus(model: &MatrixModel, h: &HElement) -> Result<Gauss> {
    let g = h.group_matrix(model)?;
    let gi = g.inverse().ok_or(Error::Singular)?;
    let cols: Vec<Vec<Gauss>> = model
        .mplus_basis()
        .iter()
        .map(|b| model.mplus_coords(&(&(&g * b) * &gi)).expect("H^C preserves m+"))
        .collect();
    Ok(Mat::from_cols(&cols).det())
}

/// Whether `det(Ad(h) x) = χ(h) det(x)` with the model's explicit character.
pub fn equivariance_check(model: &MatrixModel, h: &HElement, x: &JordanElement) -> Result<bool> {
    let lhs = jordan_det(model, &act(model, h, x)?)?;
    let rhs = h.character(model)? * jordan_det(model, x)?;
    Ok(lhs == rhs)
}

impl HermitianFamily {
    /// Split into a family name and named integer parameters.
    pub fn to_parts(&self) -> (String, BTreeMap<String, usize>) {
        let mut m = BTreeMap::new();
        let name = match *self {
            HermitianFamily::AIII { p, q } => {
                m.insert("p".to_string(), p);
                m.insert("q".to_string(), q);
                "AIII"
            }
            HermitianFamily::CI { n } => {
                m.insert("n".to_string(), n);
                "CI"
            }
            HermitianFamily::DIII { n } => {
                m.insert("n".to_string(), n);
                "DIII"
            }
            HermitianFamily::BDI { n } => {
                m.insert("n".to_string(), n);
                "BDI"
            }
            HermitianFamily::EIII => "EIII",
            HermitianFamily::EVII => "EVII",
        };
        (name.to_string(), m)
    }

    pub fn from_parts(name: &str, params: &BTreeMap<String, usize>) -> Result<Self> {
        let get = |k: &str| {
            params
                .get(k)
                .copied()
                .ok_or_else(|| Error::InvalidParameters(format!("{name} needs parameter {k}")))
        };
        let f = match name {
            "AIII" => HermitianFamily::AIII { p: get("p")?, q: get("q")? },
            "CI" => HermitianFamily::CI { n: get("n")? },
            "DIII" => HermitianFamily::DIII { n: get("n")? },
            "BDI" => HermitianFamily::BDI { n: get("n")? },
            "EIII" => HermitianFamily::EIII,
            "EVII" => HermitianFamily::EVII,
            other => return Err(Error::InvalidParameters(format!("unknown family {other}"))),
        };
        f.validate()?;
        Ok(f)
    }
}
