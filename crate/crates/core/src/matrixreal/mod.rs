//! Matrix models of the classical Hermitian families.
//!
//! | family      | `g^C`          | `m⁺` shape          | `J`                      |
//! |-------------|----------------|---------------------|--------------------------|
//! | `SU(p,q)`   | `sl(p+q)`      | `p×q`, upper right  | `i·diag(q/(p+q), −p/(p+q))` |
//! | `Sp(2n,R)`  | `sp(2n)`       | `S²C^n`, upper right | `(i/2)·diag(I, −I)`     |
//! | `SO*(2n)`   | `so(2n)`       | `Λ²C^n`, upper right | `(i/2)·diag(I, −I)`     |
//! | `SO₀(2,n)`  | `so(n+2)`      | row `z ∈ C^n`       | `E₂₁ − E₁₂`              |
//!
//! `sp(2n)` and `so(2n)` are realized as `[[A, B], [C, −Aᵀ]]` with `B, C`
//! symmetric, resp. skew. In `so(n+2)` (skew matrices) the vector `z` embeds
//! as `[[0, u zᵀ], [−z uᵀ, 0]]` with `u = (1, −i)`, and `det` is `z₁² + … + z_n²`.
//!
//! In every model `f_k = e_k^*` (conjugate transpose), `h_k = [e_k, f_k]`, and
//! the compact conjugation is `X ↦ −X^*`.

mod cayley;
mod curvature;
mod jordan;
mod sl2;

pub use cayley::{cayley_element, cayley_iso, cayley_power, i_y_gamma, CayleyIso, CayleyReport};
pub use curvature::{curvature_check, frame_vector};
pub use jordan::{
    act, det_on_mplus, equivariance_check, jordan_det, jordan_rank, polarized_rank, HElement,
    JordanElement, JordanElementRecord,
};
pub use sl2::{
    antidominant_eigen_check, antidominant_root_check, normal_form, sl2_and_parabolic, AntidominanceReport, NormalForm,
    Sl2Parabolic,
};


use crate::error::{Error, Result};
use crate::field::{q, qi, Field, Gauss, Q};
use crate::hermitian::HermitianFamily;
use crate::linalg::{Coords, Mat};

/// How `m⁺` is parametrized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// `p × q` matrices.
    Rect(usize, usize),
    /// Symmetric `n × n`.
    Sym(usize),
    /// Skew-symmetric `n × n`.
    Skew(usize),
    /// Row vectors of length `n`.
    Row(usize),
}

impl Shape {
    pub fn dims(&self) -> (usize, usize) {
        match *self {
            Shape::Rect(p, q) => (p, q),
            Shape::Sym(n) | Shape::Skew(n) => (n, n),
            Shape::Row(n) => (1, n),
        }
    }

    pub fn contains(&self, x: &Mat<Gauss>) -> bool {
        if (x.rows(), x.cols()) != self.dims() {
            return false;
        }
        match *self {
            Shape::Sym(_) => x.transpose() == *x,
            Shape::Skew(_) => x.transpose() == -x.clone(),
            _ => true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct MatrixModel {
    family: HermitianFamily,
    size: usize,
    shape: Shape,
    mplus: Vec<Mat<Gauss>>,
    mminus: Vec<Mat<Gauss>>,
    hc: Vec<Mat<Gauss>>,
    j: Mat<Gauss>,
    frame: Vec<Mat<Gauss>>,
    tube: bool,
    killing_trace: Q,
    dual_coxeter: i64,
    hc_coords: Coords<Gauss>,
    mplus_coords: Coords<Gauss>,
    mminus_coords: Coords<Gauss>,
}

fn g(re: Q) -> Gauss {
    Gauss::real(re)
}

fn unit(n: usize, i: usize, j: usize) -> Mat<Gauss> {
    Mat::unit(n, n, i, j)
}

fn flat(ms: &[Mat<Gauss>]) -> Vec<Vec<Gauss>> {
    ms.iter().map(|m| m.entries().to_vec()).collect()
}

impl MatrixModel {
    pub fn new(family: HermitianFamily) -> Result<Self> {
        family.validate()?;
        let (size, shape, tube, r, killing_trace, dual_coxeter) = match family {
            HermitianFamily::AIII { p, q } => {
                let d = p + q;
                (d, Shape::Rect(p, q), p == q, p, qi(2 * d as i64), d as i64)
            }
            HermitianFamily::CI { n } => (2 * n, Shape::Sym(n), true, n, qi(2 * n as i64 + 2), n as i64 + 1),
            HermitianFamily::DIII { n } => {
                (2 * n, Shape::Skew(n), n % 2 == 0, n / 2, qi(2 * n as i64 - 2), 2 * n as i64 - 2)
            }
            HermitianFamily::BDI { n } => (n + 2, Shape::Row(n), true, 2, qi(n as i64), n as i64),
            HermitianFamily::EIII | HermitianFamily::EVII => {
                return Err(Error::UnsupportedForm(format!("{family} has no matrix model")))
            }
        };
        let mut model = MatrixModel {
            family,
            size,
            shape,
            mplus: Vec::new(),
            mminus: Vec::new(),
            hc: Vec::new(),
            j: Mat::zeros(size, size),
            frame: Vec::new(),
            tube,
            killing_trace,
            dual_coxeter,
            hc_coords: Coords::new(Vec::new()).unwrap(),
            mplus_coords: Coords::new(Vec::new()).unwrap(),
            mminus_coords: Coords::new(Vec::new()).unwrap(),
        };
        let (rows, cols) = shape.dims();
        let mut shapes = Vec::new();
        match shape {
            Shape::Rect(..) | Shape::Row(_) => {
                for i in 0..rows {
                    for j in 0..cols {
                        shapes.push(Mat::unit(rows, cols, i, j));
                    }
                }
            }
            Shape::Sym(n) => {
                for i in 0..n {
                    for j in i..n {
                        let mut m = Mat::unit(n, n, i, j);
                        m[(j, i)] = Gauss::one();
                        shapes.push(m);
                    }
                }
            }
            Shape::Skew(n) => {
                for i in 0..n {
                    for j in i + 1..n {
                        let mut m = Mat::unit(n, n, i, j);
                        m[(j, i)] = -Gauss::one();
                        shapes.push(m);
                    }
                }
            }
        }
        model.mplus = shapes.iter().map(|s| model.embed_unchecked(s)).collect();
        model.mminus = model.mplus.iter().map(Mat::adjoint).collect();
        model.hc = model.hc_basis();
        model.j = model.j_matrix();
        model.frame = model.frame_shapes(r).iter().map(|s| model.embed_unchecked(s)).collect();
        model.hc_coords = Coords::new(flat(&model.hc)).expect("h^C basis is independent");
        model.mplus_coords = Coords::new(flat(&model.mplus)).expect("m+ basis is independent");
        model.mminus_coords = Coords::new(flat(&model.mminus)).expect("m- basis is independent");
        Ok(model)
    }

    fn embed_unchecked(&self, s: &Mat<Gauss>) -> Mat<Gauss> {
        let d = self.size;
        let mut x = Mat::zeros(d, d);
        match self.shape {
            Shape::Rect(p, _) => {
                for i in 0..s.rows() {
                    for j in 0..s.cols() {
                        x[(i, p + j)] = s[(i, j)].clone();
                    }
                }
            }
            Shape::Sym(n) | Shape::Skew(n) => {
                for i in 0..n {
                    for j in 0..n {
                        x[(i, n + j)] = s[(i, j)].clone();
                    }
                }
            }
            Shape::Row(n) => {
                // [[0, u zᵀ], [−z uᵀ, 0]] with u = (1, −i)
                let u = [Gauss::one(), -Gauss::i()];
                for k in 0..n {
                    let z = s[(0, k)].clone();
                    for a in 0..2 {
                        x[(a, 2 + k)] = u[a].clone() * z.clone();
                        x[(2 + k, a)] = -(u[a].clone() * z.clone());
                    }
                }
            }
        }
        x
    }

    fn hc_basis(&self) -> Vec<Mat<Gauss>> {
        let d = self.size;
        let mut out = Vec::new();
        match self.shape {
            Shape::Rect(p, _) => {
                for i in 0..d {
                    for j in 0..d {
                        let same_block = (i < p) == (j < p);
                        if i != j && same_block {
                            out.push(unit(d, i, j));
                        }
                    }
                }
                for i in 0..d - 1 {
                    out.push(&unit(d, i, i) - &unit(d, i + 1, i + 1));
                }
            }
            Shape::Sym(n) | Shape::Skew(n) => {
                for i in 0..n {
                    for j in 0..n {
                        out.push(&unit(d, i, j) - &unit(d, n + j, n + i));
                    }
                }
            }
            Shape::Row(n) => {
                out.push(&unit(d, 0, 1) - &unit(d, 1, 0));
                for a in 0..n {
                    for b in a + 1..n {
                        out.push(&unit(d, 2 + a, 2 + b) - &unit(d, 2 + b, 2 + a));
                    }
                }
            }
        }
        out
    }

    fn j_matrix(&self) -> Mat<Gauss> {
        let d = self.size;
        match self.shape {
            Shape::Rect(p, qq) => {
                let s = (p + qq) as i64;
                Mat::from_fn(d, d, |i, j| {
                    if i != j {
                        Gauss::zero()
                    } else if i < p {
                        Gauss::new(qi(0), q(qq as i64, s))
                    } else {
                        Gauss::new(qi(0), q(-(p as i64), s))
                    }
                })
            }
            Shape::Sym(n) | Shape::Skew(n) => Mat::from_fn(d, d, |i, j| {
                if i != j {
                    Gauss::zero()
                } else if i < n {
                    Gauss::new(qi(0), q(1, 2))
                } else {
                    Gauss::new(qi(0), q(-1, 2))
                }
            }),
            Shape::Row(_) => &unit(d, 1, 0) - &unit(d, 0, 1),
        }
    }

    fn frame_shapes(&self, r: usize) -> Vec<Mat<Gauss>> {
        match self.shape {
            Shape::Rect(p, qq) => (0..r).map(|k| Mat::unit(p, qq, k, k)).collect(),
            Shape::Sym(n) => (0..r).map(|k| Mat::unit(n, n, k, k)).collect(),
            Shape::Skew(n) => (0..r)
                .map(|k| {
                    let mut m = Mat::unit(n, n, 2 * k, 2 * k + 1);
                    m[(2 * k + 1, 2 * k)] = -Gauss::one();
                    m
                })
                .collect(),
            Shape::Row(n) => {
                let half = q(1, 2);
                let mut e1 = Mat::zeros(1, n);
                e1[(0, 0)] = g(half.clone());
                e1[(0, 1)] = Gauss::new(qi(0), -half.clone());
                let mut e2 = Mat::zeros(1, n);
                e2[(0, 0)] = g(half.clone());
                e2[(0, 1)] = Gauss::new(qi(0), half);
                vec![e1, e2]
            }
        }
    }

    pub fn family(&self) -> HermitianFamily {
        self.family
    }
    /// Size of the defining matrices of `g^C`.
    pub fn size(&self) -> usize {
        self.size
    }
    pub fn shape(&self) -> Shape {
        self.shape
    }
    pub fn r(&self) -> usize {
        self.frame.len()
    }
    pub fn tube(&self) -> bool {
        self.tube
    }
    pub fn dual_coxeter(&self) -> i64 {
        self.dual_coxeter
    }
    pub fn mplus_basis(&self) -> &[Mat<Gauss>] {
        &self.mplus
    }
    pub fn mminus_basis(&self) -> &[Mat<Gauss>] {
        &self.mminus
    }
    pub fn hc_basis_matrices(&self) -> &[Mat<Gauss>] {
        &self.hc
    }
    /// Basis of `g^C = h^C ⊕ m⁺ ⊕ m⁻`.
    pub fn gc_basis(&self) -> Vec<Mat<Gauss>> {
        self.hc.iter().chain(&self.mplus).chain(&self.mminus).cloned().collect()
    }
    pub fn j(&self) -> &Mat<Gauss> {
        &self.j
    }
    /// `e_{γ_k}` for `k < r`.
    pub fn frame(&self) -> &[Mat<Gauss>] {
        &self.frame
    }
    /// `e_{−γ_k} = e_{γ_k}^*`.
    pub fn frame_minus(&self) -> Vec<Mat<Gauss>> {
        self.frame.iter().map(Mat::adjoint).collect()
    }
    /// `h_{γ_k} = [e_{γ_k}, e_{−γ_k}]`.
    pub fn frame_h(&self) -> Vec<Mat<Gauss>> {
        self.frame.iter().map(|e| e.bracket(&e.adjoint())).collect()
    }
    /// `e_Γ = Σ e_{γ_k}`.
    pub fn e_gamma(&self) -> Mat<Gauss> {
        self.frame.iter().fold(Mat::zeros(self.size, self.size), |acc, e| &acc + e)
    }

    /// Embed an element of the `m⁺` shape into `g^C`.
    pub fn embed(&self, s: &Mat<Gauss>) -> Result<Mat<Gauss>> {
        if !self.shape.contains(s) {
            return Err(Error::NotInModel(format!("expected shape {:?}", self.shape)));
        }
        Ok(self.embed_unchecked(s))
    }

    /// Recover the `m⁺` shape from a matrix of `g^C`, which must lie in `m⁺`.
    pub fn extract(&self, x: &Mat<Gauss>) -> Result<Mat<Gauss>> {
        let (rows, cols) = self.shape.dims();
        let s = match self.shape {
            Shape::Rect(p, _) => Mat::from_fn(rows, cols, |i, j| x[(i, p + j)].clone()),
            Shape::Sym(n) | Shape::Skew(n) => Mat::from_fn(rows, cols, |i, j| x[(i, n + j)].clone()),
            Shape::Row(_) => Mat::from_fn(1, cols, |_, k| x[(0, 2 + k)].clone()),
        };
        if self.shape.contains(&s) && self.embed_unchecked(&s) == *x {
            Ok(s)
        } else {
            Err(Error::NotInModel("matrix is not in m+".into()))
        }
    }

    /// Coordinates in the `h^C` basis, if `x ∈ h^C`.
    pub fn hc_coords(&self, x: &Mat<Gauss>) -> Option<Vec<Gauss>> {
        self.hc_coords.coords(x.entries())
    }
    pub fn mplus_coords(&self, x: &Mat<Gauss>) -> Option<Vec<Gauss>> {
        self.mplus_coords.coords(x.entries())
    }
    pub fn mminus_coords(&self, x: &Mat<Gauss>) -> Option<Vec<Gauss>> {
        self.mminus_coords.coords(x.entries())
    }

    pub fn from_hc_coords(&self, c: &[Gauss]) -> Mat<Gauss> {
        combine(&self.hc, c, self.size)
    }
    pub fn from_mplus_coords(&self, c: &[Gauss]) -> Mat<Gauss> {
        combine(&self.mplus, c, self.size)
    }
    pub fn from_mminus_coords(&self, c: &[Gauss]) -> Mat<Gauss> {
        combine(&self.mminus, c, self.size)
    }

    /// Compact conjugation `X ↦ −X^*` (fixes `h ⊕ i m`).
    pub fn tau_compact(&self, x: &Mat<Gauss>) -> Mat<Gauss> {
        -x.adjoint()
    }

    /// Cartan involution `θ`: `+1` on `h^C`, `−1` on `m^C`, i.e. `X + 2 ad(J)² X`.
    pub fn theta(&self, x: &Mat<Gauss>) -> Mat<Gauss> {
        let aj = self.j.bracket(x);
        let aj2 = self.j.bracket(&aj);
        x + &aj2.scale(&Gauss::from_i64(2))
    }

    /// Conjugation fixing the real form `g = h ⊕ m`: `θ ∘ τ_c`. On `H^C` it is
    /// the compact conjugation defining `H`.
    pub fn tau_real(&self, x: &Mat<Gauss>) -> Mat<Gauss> {
        self.theta(&self.tau_compact(x))
    }

    /// Invariant form normalized to the Killing form: `B(X, Y) = c · tr(XY)`.
    pub fn killing(&self, x: &Mat<Gauss>, y: &Mat<Gauss>) -> Gauss {
        (x * y).trace() * g(self.killing_trace.clone())
    }

    /// `χ_T(Y) = B(−iJ, Y) / N`.
    pub fn toledo(&self, y: &Mat<Gauss>) -> Gauss {
        let zeta = self.j.scale(&-Gauss::i());
        self.killing(&zeta, y) * g(Q::new(1.into(), self.dual_coxeter.into()))
    }

    /// Killing form computed literally as `tr(ad X ad Y)` on `g^C`.
    pub fn killing_by_ad(&self, x: &Mat<Gauss>, y: &Mat<Gauss>) -> Gauss {
        let basis = self.gc_basis();
        let coords = Coords::new(flat(&basis)).expect("g^C basis is independent");
        let mut tr = Gauss::zero();
        for (k, b) in basis.iter().enumerate() {
            let v = x.bracket(&y.bracket(b));
            let c = coords.coords(v.entries()).expect("bracket stays in g^C");
            tr = tr + c[k].clone();
        }
        tr
    }

    /// The model with `r = r′` sitting in the upper-left corner: `SU(r′,r′)`,
    /// `Sp(2r′)`, `SO*(4⌊r′⌋)`.
    pub fn subtube_model(&self, rprime: usize) -> Result<MatrixModel> {
        let r = self.r();
        if rprime == 0 || rprime > r {
            return Err(Error::SubtubeOutOfRange { got: rprime, max: r });
        }
        let fam = match self.family {
            HermitianFamily::AIII { .. } => HermitianFamily::AIII { p: rprime, q: rprime },
            HermitianFamily::CI { .. } => HermitianFamily::CI { n: rprime },
            HermitianFamily::DIII { .. } => HermitianFamily::DIII { n: 2 * rprime },
            HermitianFamily::BDI { n } if rprime == 2 => HermitianFamily::BDI { n },
            other => return Err(Error::UnsupportedForm(format!("no matrix sub-tube of {other} with r' = {rprime}"))),
        };
        if matches!(fam, HermitianFamily::DIII { n } if n < 3) {
            return Err(Error::UnsupportedForm("SO*(4) is not simple".into()));
        }
        MatrixModel::new(fam)
    }

    /// Pad a sub-tube shape into this model's shape (upper-left block).
    pub fn embed_subtube_shape(&self, s: &Mat<Gauss>) -> Result<Mat<Gauss>> {
        let (rows, cols) = self.shape.dims();
        if s.rows() > rows || s.cols() > cols {
            return Err(Error::NotInModel("sub-tube element too large".into()));
        }
        let out = Mat::from_fn(rows, cols, |i, j| {
            if i < s.rows() && j < s.cols() {
                s[(i, j)].clone()
            } else {
                Gauss::zero()
            }
        });
        if self.shape.contains(&out) {
            Ok(out)
        } else {
            Err(Error::NotInModel("sub-tube element has the wrong symmetry".into()))
        }
    }
}

fn combine(basis: &[Mat<Gauss>], c: &[Gauss], d: usize) -> Mat<Gauss> {
    let mut out = Mat::zeros(d, d);
    for (b, x) in basis.iter().zip(c) {
        if !x.is_zero() {
            out = &out + &b.scale(x);
        }
    }
    out
}

/// Whether every pair of basis elements commutes.
pub fn is_abelian(basis: &[Mat<Gauss>]) -> bool {
    basis.iter().all(|a| basis.iter().all(|b| a.bracket(b).is_zero()))
}

/// `[e_Γ, τ(e_Γ)] = −2iJ`, with `τ` the conjugation of the real form.
///
/// The left side is always `Σ h_{γ_k}`, so this holds exactly in tube models.
pub fn moment_identity(model: &MatrixModel) -> bool {
    let e = model.e_gamma();
    let lhs = e.bracket(&model.tau_real(&e));
    lhs == model.j().scale(&Gauss::new(qi(0), qi(-2)))
}

/// Eigenspaces of `m` for eigenvalues in `½Z ∩ [−4, 4]`, provided they
/// exhaust the space. Vectors are coordinate vectors in the basis of `m`.
pub(crate) fn rational_spectrum(m: &Mat<Gauss>) -> Option<Vec<(Q, Vec<Vec<Gauss>>)>> {
    let n = m.rows();
    let mut out = Vec::new();
    let mut total = 0;
    for k in -8..=8 {
        let lam = q(k, 2);
        let ker = (m - &Mat::identity(n).scale(&g(lam.clone()))).kernel();
        if !ker.is_empty() {
            total += ker.len();
            out.push((lam, ker));
        }
    }
    (total == n).then_some(out)
}

/// Matrix of `ad(x)` restricted to a subspace, in the coordinates of `target`.
pub(crate) fn ad_matrix(
    x: &Mat<Gauss>,
    domain: &[Mat<Gauss>],
    target: impl Fn(&Mat<Gauss>) -> Option<Vec<Gauss>>,
) -> Option<Mat<Gauss>> {
    let cols: Option<Vec<Vec<Gauss>>> = domain.iter().map(|b| target(&x.bracket(b))).collect();
    Some(Mat::from_cols(&cols?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn models() -> Vec<MatrixModel> {
        [
            HermitianFamily::AIII { p: 2, q: 2 },
            HermitianFamily::AIII { p: 1, q: 3 },
            HermitianFamily::CI { n: 1 },
            HermitianFamily::CI { n: 3 },
            HermitianFamily::DIII { n: 4 },
            HermitianFamily::DIII { n: 5 },
            HermitianFamily::BDI { n: 3 },
            HermitianFamily::BDI { n: 4 },
        ]
        .into_iter()
        .map(|f| MatrixModel::new(f).unwrap())
        .collect()
    }

    #[test]
    fn grading_and_abelian() {
        for m in models() {
            assert!(is_abelian(m.mplus_basis()), "{}", m.family());
            assert!(is_abelian(m.mminus_basis()));
            let i = Gauss::i();
            for x in m.mplus_basis() {
                assert_eq!(m.j().bracket(x), x.scale(&i));
            }
            for x in m.mminus_basis() {
                assert_eq!(m.j().bracket(x), x.scale(&-i.clone()));
            }
            for h in m.hc_basis_matrices() {
                assert!(m.j().bracket(h).is_zero());
                for x in m.mplus_basis() {
                    assert!(m.mplus_coords(&h.bracket(x)).is_some());
                }
            }
        }
    }

    #[test]
    fn frame_is_strongly_orthogonal_sl2s() {
        for m in models() {
            let e = m.frame();
            let f = m.frame_minus();
            let h = m.frame_h();
            let two = Gauss::from_i64(2);
            for k in 0..m.r() {
                assert_eq!(h[k].bracket(&e[k]), e[k].scale(&two), "{}", m.family());
                assert!(m.hc_coords(&h[k]).is_some());
                for l in 0..m.r() {
                    if k != l {
                        assert!(e[k].bracket(&f[l]).is_zero());
                        assert!(h[k].bracket(&e[l]).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn dimensions() {
        let m = MatrixModel::new(HermitianFamily::AIII { p: 2, q: 3 }).unwrap();
        assert_eq!((m.hc_basis_matrices().len(), m.mplus_basis().len()), (12, 6));
        let m = MatrixModel::new(HermitianFamily::BDI { n: 5 }).unwrap();
        assert_eq!((m.hc_basis_matrices().len(), m.mplus_basis().len()), (11, 5));
    }

    #[test]
    fn killing_constant_matches_ad_trace() {
        for m in models().into_iter().take(5) {
            let h = m.frame_h();
            assert_eq!(m.killing(&h[0], &h[0]), m.killing_by_ad(&h[0], &h[0]), "{}", m.family());
            assert_eq!(m.toledo(&h[0]), Gauss::from_i64(2));
        }
    }

    #[test]
    fn exceptional_has_no_model() {
        assert!(MatrixModel::new(HermitianFamily::EIII).is_err());
    }
}
