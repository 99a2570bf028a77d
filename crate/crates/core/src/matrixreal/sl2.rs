//! Normal forms of elements of `m⁺` under `H^C`, the `sl2` triple through a
//! given `x`, the parabolic `p_x = ker(ad x|h^C) + im(ad x|m⁻)`, and the
//! eigenvalue checks for the antidominant element `s_χ`.
//!
//! The normal form is `Σ_{k<r′} d_k e_{γ_k}` with nonzero `d_k`. Symmetric
//! congruence and the quadratic form of `SO(2,n)` cannot reach `d_k = 1` over
//! Q(i) without square roots, so the coefficients are kept and absorbed into
//! the triple: `u = Σ d_k e_k`, `v = Σ d_k⁻¹ f_k`, `h = Σ h_k`.

use super::jordan::{act, jordan_rank, HElement, JordanElement};
use super::{ad_matrix, rational_spectrum, MatrixModel, Shape};
use crate::error::{Error, Result};
use crate::field::{q, qi, Field, Gauss, Q};
use crate::hermitian::HermitianStructure;
use crate::linalg::{independent_subset, same_span, Coords, Mat};
use crate::rootsys::dot;

#[derive(Clone, Debug)]
pub struct NormalForm {
    pub rank: usize,
    /// `g ∈ H^C` with `Ad(g) x = Σ_{k<rank} d_k e_{γ_k}`.
    pub g: HElement,
    pub coefficients: Vec<Gauss>,
}

#[derive(Clone, Debug)]
pub struct Sl2Parabolic {
    pub rank: usize,
    /// Set when `x = 0`; the parabolic is then all of `h^C` and the triple is zero.
    pub zero: bool,
    pub normal_form: NormalForm,
    pub h: Mat<Gauss>,
    pub u: Mat<Gauss>,
    pub v: Mat<Gauss>,
    pub relations_hold: bool,
    pub kernel_dim: usize,
    pub image_dim: usize,
    pub parabolic: Vec<Mat<Gauss>>,
    pub is_subalgebra: bool,
    /// `p_x` equals the sum of the nonnegative eigenspaces of `ad h` on `h^C`.
    pub matches_eigenspaces: bool,
}

#[derive(Clone, Debug)]
pub struct AntidominanceReport {
    pub rprime: usize,
    /// Distinct eigenvalues of `ad s_χ / ⟨γ,γ⟩` on `p`.
    pub p_eigenvalues: Vec<Q>,
    /// Distinct eigenvalues of `ad s_χ / ⟨γ,γ⟩` on `m⁻`.
    pub m_minus_eigenvalues: Vec<Q>,
    pub commutes_with_u: bool,
}

impl AntidominanceReport {
    pub fn passed(&self) -> bool {
        self.commutes_with_u
            && self.p_eigenvalues.iter().all(|x| *x <= Q::zero())
            && self.m_minus_eigenvalues.iter().all(|x| *x <= Q::zero())
    }
}

/// Row and column operations `x ↦ E x Eᵀ`, recorded in `a ↦ E a`.
struct Congruence {
    x: Mat<Gauss>,
    a: Mat<Gauss>,
}

impl Congruence {
    fn new(x: &Mat<Gauss>) -> Self {
        Congruence { x: x.clone(), a: Mat::identity(x.rows()) }
    }

    fn swap(&mut self, i: usize, j: usize) {
        if i != j {
            self.x.swap_rows(i, j);
            self.x.swap_cols(i, j);
            self.a.swap_rows(i, j);
        }
    }

    /// Row and column `m` += `t` times row and column `i`.
    fn add(&mut self, m: usize, i: usize, t: &Gauss) {
        if t.is_zero() {
            return;
        }
        let n = self.x.rows();
        for c in 0..n {
            let v = self.x[(i, c)].clone() * t.clone();
            self.x[(m, c)] = self.x[(m, c)].clone() + v;
            let v = self.a[(i, c)].clone() * t.clone();
            self.a[(m, c)] = self.a[(m, c)].clone() + v;
        }
        for r in 0..n {
            let v = self.x[(r, i)].clone() * t.clone();
            self.x[(r, m)] = self.x[(r, m)].clone() + v;
        }
    }

    fn scale(&mut self, i: usize, t: &Gauss) {
        let n = self.x.rows();
        for c in 0..n {
            self.x[(i, c)] = self.x[(i, c)].clone() * t.clone();
            self.a[(i, c)] = self.a[(i, c)].clone() * t.clone();
        }
        for r in 0..n {
            self.x[(r, i)] = self.x[(r, i)].clone() * t.clone();
        }
    }
}

/// `A x D⁻¹ = diag(I_r, 0)`.
fn rect_form(x: &Mat<Gauss>) -> (Mat<Gauss>, Mat<Gauss>, usize) {
    let (p, qq) = (x.rows(), x.cols());
    let aug = Mat::from_fn(p, qq + p, |i, j| {
        if j < qq {
            x[(i, j)].clone()
        } else if j - qq == i {
            Gauss::one()
        } else {
            Gauss::zero()
        }
    });
    let (red, pivots) = aug.rref();
    let pivots: Vec<usize> = pivots.into_iter().filter(|&c| c < qq).collect();
    let r = pivots.len();
    let a = Mat::from_fn(p, p, |i, j| red[(i, qq + j)].clone());
    let mut rows: Vec<Vec<Gauss>> = (0..r).map(|k| (0..qq).map(|j| red[(k, j)].clone()).collect()).collect();
    for c in (0..qq).filter(|c| !pivots.contains(c)) {
        let mut e = vec![Gauss::zero(); qq];
        e[c] = Gauss::one();
        rows.push(e);
    }
    (a, Mat::from_rows(rows), r)
}

/// `A x Aᵀ = diag(d_1, …, d_r, 0, …)` for symmetric `x`.
fn sym_form(x: &Mat<Gauss>) -> (Mat<Gauss>, Vec<Gauss>) {
    let n = x.rows();
    let mut c = Congruence::new(x);
    let mut d = Vec::new();
    for k in 0..n {
        if let Some(i) = (k..n).find(|&i| !c.x[(i, i)].is_zero()) {
            c.swap(i, k);
        } else if let Some((i, j)) =
            (k..n).flat_map(|i| (k..n).map(move |j| (i, j))).find(|&(i, j)| i != j && !c.x[(i, j)].is_zero())
        {
            c.add(i, j, &Gauss::one());
            c.swap(i, k);
        } else {
            break;
        }
        let p = c.x[(k, k)].clone();
        for m in k + 1..n {
            let t = -(c.x[(m, k)].clone().div(&p));
            c.add(m, k, &t);
        }
        d.push(p);
    }
    (c.a, d)
}

/// `A x Aᵀ = Σ_{k<r} (E_{2k,2k+1} − E_{2k+1,2k})` for skew `x`.
fn skew_form(x: &Mat<Gauss>) -> (Mat<Gauss>, usize) {
    let n = x.rows();
    let mut c = Congruence::new(x);
    let mut r = 0;
    while 2 * r + 1 < n {
        let (a, b) = (2 * r, 2 * r + 1);
        let Some((i, j)) =
            (a..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !c.x[(i, j)].is_zero())
        else {
            break;
        };
        c.swap(i, a);
        let j = if j == a { i } else { j };
        c.swap(j, b);
        let t = c.x[(a, b)].inv();
        c.scale(b, &t);
        for m in b + 1..n {
            let t = c.x[(m, a)].clone();
            c.add(m, b, &t);
            let s = -c.x[(m, b)].clone();
            c.add(m, a, &s);
        }
        r += 1;
    }
    (c.a, r)
}

fn bilinear(a: &[Gauss], b: &[Gauss]) -> Gauss {
    a.iter().zip(b).fold(Gauss::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Reflection `z ↦ z − 2 B(v,z)/B(v,v) v` for the form `Σ z_i w_i`.
fn reflection(v: &[Gauss]) -> Mat<Gauss> {
    let n = v.len();
    let f = Gauss::from_i64(2).div(&bilinear(v, v));
    Mat::from_fn(n, n, |i, j| {
        let id = if i == j { Gauss::one() } else { Gauss::zero() };
        id - f.clone() * v[i].clone() * v[j].clone()
    })
}

fn sub(a: &[Gauss], b: &[Gauss]) -> Vec<Gauss> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

fn unit_vec(n: usize, i: usize) -> Vec<Gauss> {
    let mut e = vec![Gauss::zero(); n];
    e[i] = Gauss::one();
    e
}

/// `D ∈ SO(n, C)` with `D z = w`, for `B(z,z) = B(w,w)`, `n ≥ 3`, `w` supported
/// on the first two coordinates and `w ≠ 0`.
fn orthogonal_to(z: &[Gauss], w: &[Gauss]) -> Result<Mat<Gauss>> {
    let n = z.len();
    let mut d = Mat::identity(n);
    let mut z = z.to_vec();
    let mut flips = 0;
    let isotropic = bilinear(w, w).is_zero();
    if isotropic && bilinear(&z, w).is_zero() {
        let mut candidates = Vec::new();
        for i in 0..n {
            candidates.push(unit_vec(n, i));
            for j in 0..n {
                if i != j {
                    for t in [Gauss::one(), Gauss::i(), Gauss::from_i64(2)] {
                        let mut v = unit_vec(n, i);
                        v[j] = t;
                        candidates.push(v);
                    }
                }
            }
        }
        let v = candidates
            .into_iter()
            .find(|v| {
                !bilinear(v, v).is_zero() && !bilinear(v, &z).is_zero() && !bilinear(v, w).is_zero()
            })
            .ok_or_else(|| Error::NotInModel("no reflection found".into()))?;
        let s = reflection(&v);
        z = s.mul_vec(&z);
        d = &s * &d;
        flips += 1;
    }
    let diff = sub(&z, w);
    if !bilinear(&diff, &diff).is_zero() {
        d = &reflection(&diff) * &d;
        flips += 1;
    } else if !diff.iter().all(Gauss::is_zero) {
        let sum: Vec<Gauss> = z.iter().zip(w).map(|(x, y)| x.clone() + y.clone()).collect();
        d = &(&reflection(w) * &reflection(&sum)) * &d;
        flips += 2;
    }
    if flips % 2 == 1 {
        d = &reflection(&unit_vec(n, n - 1)) * &d;
    }
    Ok(d)
}

/// Reduce `x` to `Σ d_k e_{γ_k}` by an explicit element of `H^C`.
pub fn normal_form(model: &MatrixModel, x: &JordanElement) -> Result<NormalForm> {
    let rank = jordan_rank(model, x)?;
    let s = x.entries();
    let (g, coefficients) = match model.shape() {
        Shape::Rect(..) => {
            let (a, d, r) = rect_form(s);
            debug_assert_eq!(r, rank);
            (HElement::Unitary { a, d }, vec![Gauss::one(); r])
        }
        Shape::Sym(_) => {
            let (a, d) = sym_form(s);
            (HElement::General { a }, d)
        }
        Shape::Skew(_) => {
            let (a, r) = skew_form(s);
            (HElement::General { a }, vec![Gauss::one(); r])
        }
        Shape::Row(n) => {
            let z = s.row(0);
            let qz = bilinear(&z, &z);
            let half = Gauss::real(q(1, 2));
            let mut w = vec![Gauss::zero(); n];
            let coeffs = match rank {
                0 => Vec::new(),
                1 => {
                    w[0] = half.clone();
                    w[1] = -(half * Gauss::i());
                    vec![Gauss::one()]
                }
                _ => {
                    w[0] = half.clone() * (Gauss::one() + qz.clone());
                    w[1] = half * Gauss::i() * (qz.clone() - Gauss::one());
                    vec![Gauss::one(), qz]
                }
            };
            let d = if rank == 0 { Mat::identity(n) } else { orthogonal_to(&z, &w)? };
            (HElement::Orthogonal { lambda: Gauss::one(), d }, coeffs)
        }
    };
    let nf = NormalForm { rank, g, coefficients };
    let target = nf.target(model)?;
    if act(model, &nf.g, x)?.entries() != &target {
        return Err(Error::NotInModel("normal form reduction failed".into()));
    }
    Ok(nf)
}

impl NormalForm {
    /// `Σ d_k e_{γ_k}` in the `m⁺` shape.
    pub fn target(&self, model: &MatrixModel) -> Result<Mat<Gauss>> {
        let (rows, cols) = model.shape().dims();
        let mut t = Mat::zeros(rows, cols);
        for (e, d) in model.frame().iter().zip(&self.coefficients) {
            t = &t + &model.extract(e)?.scale(d);
        }
        Ok(t)
    }
}

fn flat(ms: &[Mat<Gauss>]) -> Vec<Vec<Gauss>> {
    ms.iter().map(|m| m.entries().to_vec()).collect()
}

/// The `sl2` triple `(h, u = x, v)` and the parabolic `p_x`.
pub fn sl2_and_parabolic(model: &MatrixModel, x: &JordanElement) -> Result<Sl2Parabolic> {
    let nf = normal_form(model, x)?;
    let size = model.size();
    let hc = model.hc_basis_matrices();
    if nf.rank == 0 {
        let zero = Mat::zeros(size, size);
        return Ok(Sl2Parabolic {
            rank: 0,
            zero: true,
            normal_form: nf,
            h: zero.clone(),
            u: zero.clone(),
            v: zero,
            relations_hold: true,
            kernel_dim: hc.len(),
            image_dim: 0,
            parabolic: hc.to_vec(),
            is_subalgebra: true,
            matches_eigenspaces: true,
        });
    }
    let r = nf.rank;
    let e = &model.frame()[..r];
    let hs = model.frame_h();
    let mut h0 = Mat::zeros(size, size);
    let mut u0 = Mat::zeros(size, size);
    let mut v0 = Mat::zeros(size, size);
    for k in 0..r {
        let d = &nf.coefficients[k];
        h0 = &h0 + &hs[k];
        u0 = &u0 + &e[k].scale(d);
        v0 = &v0 + &e[k].adjoint().scale(&d.inv());
    }
    let g = nf.g.group_matrix(model)?;
    let gi = g.inverse().ok_or(Error::Singular)?;
    let conj = |m: &Mat<Gauss>| &(&gi * m) * &g;
    let (h, u, v) = (conj(&h0), conj(&u0), conj(&v0));
    let two = Gauss::from_i64(2);
    let relations_hold = h.bracket(&u) == u.scale(&two)
        && h.bracket(&v) == v.scale(&-two)
        && u.bracket(&v) == h
        && u == model.embed(x.entries())?;

    let to_mplus = ad_matrix(&u, hc, |m| model.mplus_coords(m)).expect("[m+, h^C] ⊆ m+");
    let kernel = to_mplus.kernel();
    let to_hc = ad_matrix(&u, model.mminus_basis(), |m| model.hc_coords(m)).expect("[m+, m-] ⊆ h^C");
    let image = independent_subset(&(0..to_hc.cols()).map(|j| to_hc.col(j)).collect::<Vec<_>>());
    let mut span = kernel.clone();
    span.extend(image.iter().cloned());
    let p_coords = independent_subset(&span);
    let parabolic: Vec<Mat<Gauss>> = p_coords.iter().map(|c| model.from_hc_coords(c)).collect();

    let pc = Coords::new(flat(&parabolic)).expect("independent basis");
    let is_subalgebra = parabolic
        .iter()
        .all(|a| parabolic.iter().all(|b| pc.coords(a.bracket(b).entries()).is_some()));

    let ad_h = ad_matrix(&h, hc, |m| model.hc_coords(m)).expect("h ∈ h^C");
    let matches_eigenspaces = match rational_spectrum(&ad_h) {
        Some(spectrum) => {
            let nonneg: Vec<Vec<Gauss>> =
                spectrum.into_iter().filter(|(l, _)| *l >= Q::zero()).flat_map(|(_, v)| v).collect();
            same_span(&nonneg, &p_coords)
        }
        None => false,
    };
    Ok(Sl2Parabolic {
        rank: r,
        zero: false,
        normal_form: nf,
        h,
        u,
        v,
        relations_hold,
        kernel_dim: kernel.len(),
        image_dim: image.len(),
        parabolic,
        is_subalgebra,
        matches_eigenspaces,
    })
}

fn distinct_eigenvalues(m: &Mat<Gauss>) -> Option<Vec<Q>> {
    rational_spectrum(m).map(|s| s.into_iter().map(|(l, _)| l).collect())
}

/// Eigenvalues of `s_χ / ⟨γ,γ⟩ = −iJ − ½ Σ_{k<r′} h_{γ_k}` on `p` and `m⁻`, with
/// `u = Σ_{k<r′} e_{γ_k}`.
pub fn antidominant_eigen_check(model: &MatrixModel, rprime: usize) -> Result<AntidominanceReport> {
    let r = model.r();
    if rprime == 0 || rprime > r {
        return Err(Error::SubtubeOutOfRange { got: rprime, max: r });
    }
    let size = model.size();
    let mut u = Mat::zeros(size, size);
    for e in &model.frame()[..rprime] {
        u = &u + e;
    }
    let x = JordanElement::new(model, model.extract(&u)?)?;
    let sl = sl2_and_parabolic(model, &x)?;
    let half = Gauss::real(q(-1, 2));
    let mut s = model.j().scale(&-Gauss::i());
    for h in &model.frame_h()[..rprime] {
        s = &s + &h.scale(&half);
    }
    let pc = Coords::new(flat(&sl.parabolic)).expect("independent basis");
    let on_p = ad_matrix(&s, &sl.parabolic, |m| pc.coords(m.entries()))
        .ok_or_else(|| Error::NotInModel("p is not ad(s)-stable".into()))?;
    let on_m = ad_matrix(&s, model.mminus_basis(), |m| model.mminus_coords(m)).expect("s ∈ h^C");
    let spectrum = |m: &Mat<Gauss>| {
        distinct_eigenvalues(m).ok_or_else(|| Error::NotInModel("ad(s) is not diagonalizable over ½Z".into()))
    };
    Ok(AntidominanceReport {
        rprime,
        p_eigenvalues: spectrum(&on_p)?,
        m_minus_eigenvalues: spectrum(&on_m)?,
        commutes_with_u: s.bracket(&u).is_zero(),
    })
}

/// Root-level antidominance table for `1 ≤ r′ ≤ r`: with `h = Σ_{k<r′} h_{γ_k}`,
/// `α(s_χ)/⟨γ,γ⟩` is `1 − ½α(h)` on `Δ_Q⁺`, `−½α(h)` on compact roots and
/// `−1 − ½α(h)` on `Δ_Q⁻`. Also checks `γ_k(s_χ) = 0` for `k < r′` and that the
/// value is `≤ 0` on the roots of `p` and on `Δ_Q⁻`.
pub fn antidominant_root_check(hs: &HermitianStructure, rprime: usize) -> Result<bool> {
    let s = hs.antidominant_element(rprime)?;
    let gn = hs.gamma_norm();
    let h = hs.cascade_coroot_sum(rprime);
    let rs = hs.root_system();
    let half = q(1, 2);
    let mut ok = true;
    for (k, root) in rs.positive_roots().iter().enumerate() {
        let noncompact = hs.noncompact_pos().contains(&k);
        for sign in [1i64, -1] {
            let alpha: Vec<Q> = root.iter().map(|x| x * qi(sign)).collect();
            let value = dot(&alpha, &s) / &gn;
            let ah = dot(&alpha, &h);
            let expected = match (noncompact, sign) {
                (false, _) => -(&half * &ah),
                (true, 1) => qi(1) - &half * &ah,
                (true, _) => qi(-1) - &half * &ah,
            };
            ok &= value == expected;
            if noncompact && sign == -1 {
                ok &= value <= Q::zero();
            }
            if !noncompact && ah >= Q::zero() {
                ok &= value <= Q::zero();
            }
        }
    }
    for &c in &hs.cascade_indices()[..rprime] {
        ok &= dot(&rs.positive_roots()[c], &s).is_zero();
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::{hermitian_structure, HermitianFamily};

    fn elem(model: &MatrixModel, rows: Vec<Vec<i64>>) -> JordanElement {
        let m = Mat::from_rows(rows.into_iter().map(|r| r.into_iter().map(Gauss::from_i64).collect()).collect());
        JordanElement::new(model, m).unwrap()
    }

    #[test]
    fn rect_reduction() {
        let m = MatrixModel::new(HermitianFamily::AIII { p: 2, q: 3 }).unwrap();
        let x = elem(&m, vec![vec![1, 2, 3], vec![2, 4, 6]]);
        let nf = normal_form(&m, &x).unwrap();
        assert_eq!(nf.rank, 1);
    }

    #[test]
    fn sym_reduction_without_diagonal() {
        let m = MatrixModel::new(HermitianFamily::CI { n: 3 }).unwrap();
        let x = elem(&m, vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]]);
        let nf = normal_form(&m, &x).unwrap();
        assert_eq!(nf.rank, 2);
        assert_eq!(nf.coefficients.len(), 2);
    }

    #[test]
    fn skew_reduction() {
        let m = MatrixModel::new(HermitianFamily::DIII { n: 5 }).unwrap();
        let x = elem(
            &m,
            vec![vec![0, 0, 1, 0, 2], vec![0, 0, 0, 3, 0], vec![-1, 0, 0, 0, 1], vec![0, -3, 0, 0, 0], vec![-2, 0, -1, 0, 0]],
        );
        assert_eq!(normal_form(&m, &x).unwrap().rank, 2);
    }

    #[test]
    fn orthogonal_reduction() {
        let m = MatrixModel::new(HermitianFamily::BDI { n: 4 }).unwrap();
        for z in [vec![vec![1, 2, 3, 4]], vec![vec![3, 0, 4, 0]], vec![vec![0, 0, 1, 0]]] {
            normal_form(&m, &elem(&m, z)).unwrap();
        }
        let i = Gauss::i();
        let iso = Mat::from_rows(vec![vec![Gauss::zero(), Gauss::zero(), Gauss::one(), i]]);
        let nf = normal_form(&m, &JordanElement::new(&m, iso).unwrap()).unwrap();
        assert_eq!(nf.rank, 1);
    }

    #[test]
    fn first_root_in_sp4() {
        let m = MatrixModel::new(HermitianFamily::CI { n: 2 }).unwrap();
        let x = JordanElement::new(&m, m.extract(&m.frame()[0]).unwrap()).unwrap();
        let sl = sl2_and_parabolic(&m, &x).unwrap();
        assert_eq!(sl.rank, 1);
        assert_eq!(sl.h, m.frame_h()[0]);
        assert!(sl.relations_hold && sl.is_subalgebra && sl.matches_eigenspaces);
    }

    #[test]
    fn zero_is_flagged() {
        let m = MatrixModel::new(HermitianFamily::CI { n: 2 }).unwrap();
        let sl = sl2_and_parabolic(&m, &JordanElement::zero(&m)).unwrap();
        assert!(sl.zero);
        assert_eq!(sl.parabolic.len(), m.hc_basis_matrices().len());
    }

    #[test]
    fn antidominance() {
        let m = MatrixModel::new(HermitianFamily::AIII { p: 2, q: 3 }).unwrap();
        for rp in 1..=2 {
            assert!(antidominant_eigen_check(&m, rp).unwrap().passed());
        }
        assert!(antidominant_eigen_check(&m, 3).is_err());
        let hs = hermitian_structure(HermitianFamily::EIII).unwrap();
        assert!(antidominant_root_check(&hs, 1).unwrap());
        assert!(antidominant_root_check(&hs, 2).unwrap());
    }
}
