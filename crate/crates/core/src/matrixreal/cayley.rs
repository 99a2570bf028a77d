//! The Cayley element `c = exp(π/4 · i y_Γ)` and its eigenspace data.
//!
//! `i y_Γ = Σ (e_{−γ} − e_γ)` is diagonalizable with eigenvalues in
//! `{0, ±i, ±2i}`, so `exp(t · i y_Γ)` is assembled from spectral projectors.
//! `c` itself needs `e^{iπ/4} = (1+i)/√2` and lives over Q(i, √2); its even
//! powers are Gaussian.


use super::MatrixModel;
use crate::error::{Error, Result};
use crate::field::{q, qi, Field, Gauss, Surd};
use crate::linalg::{Coords, Mat};

#[derive(Clone, Debug)]
pub struct CayleyReport {
    pub c: Mat<Surd>,
    pub ad_c8_identity: bool,
    pub ad_c4_identity: bool,
    /// `+1` eigenspace of `Ad(c²)` on `h^C` (tube models).
    pub h_prime: Option<Vec<Mat<Gauss>>>,
    /// `−1` eigenspace of `Ad(c²)` on `h^C`, i.e. `m′^C` (tube models).
    pub m_prime: Option<Vec<Mat<Gauss>>>,
    /// Whether `h′^C` equals the centralizer of `e_Γ` in `h^C` (tube models).
    pub h_prime_is_stabilizer: Option<bool>,
    /// Dimension of the `−1` eigenspace of `Ad(c⁴)` on `m^C`.
    pub dim_m2: usize,
}

#[derive(Clone, Debug)]
pub struct CayleyIso {
    /// `ad(e_Γ): m⁻ → m′^C` in the `m⁻` basis and the `m′^C` basis of the report.
    pub map: Mat<Gauss>,
    /// `ad(e_Γ)²: m⁻ → m⁺` in the `m⁻` and `m⁺` bases.
    pub square_map: Mat<Gauss>,
    pub invertible: bool,
    pub square_invertible: bool,
}

/// `i y_Γ = Σ (e_{−γ_k} − e_{γ_k})`.
pub fn i_y_gamma(model: &MatrixModel) -> Mat<Gauss> {
    let n = model.size();
    model
        .frame()
        .iter()
        .fold(Mat::zeros(n, n), |acc, e| &(&acc + &e.adjoint()) - e)
}

/// Eigenvalues `m·i` of `Y` with their spectral projectors. Fails if `Y` is
/// not diagonalizable with eigenvalues in `{0, ±i, ±2i}`.
fn spectral(y: &Mat<Gauss>) -> Result<Vec<(i64, Mat<Gauss>)>> {
    let n = y.rows();
    let id = Mat::<Gauss>::identity(n);
    let lam = |m: i64| Gauss::new(qi(0), qi(m));
    let present: Vec<i64> = [-2, -1, 0, 1, 2]
        .into_iter()
        .filter(|&m| (y - &id.scale(&lam(m))).rank() < n)
        .collect();
    let total: usize = present.iter().map(|&m| n - (y - &id.scale(&lam(m))).rank()).sum();
    if total != n {
        return Err(Error::NotInModel("i y_Γ is not diagonalizable with expected spectrum".into()));
    }
    let mut out = Vec::new();
    for &m in &present {
        let mut p = id.clone();
        for &k in &present {
            if k != m {
                let f = (lam(m) - lam(k)).inv();
                p = &p * &(y - &id.scale(&lam(k))).scale(&f);
            }
        }
        out.push((m, p));
    }
    Ok(out)
}

/// `e^{iπk/4}` for integer `k`.
fn eighth_root(k: i64) -> Surd {
    let half = Gauss::real(q(1, 2));
    let w = Surd::new(Gauss::zero(), Gauss::new(qi(1), qi(1)) * half);
    let mut out = Surd::one();
    for _ in 0..k.rem_euclid(8) {
        out = out * w.clone();
    }
    out
}

/// `c^k = exp(kπ/4 · i y_Γ)`.
pub fn cayley_power(model: &MatrixModel, k: i64) -> Result<Mat<Surd>> {
    let y = i_y_gamma(model);
    let n = model.size();
    let mut c = Mat::<Surd>::zeros(n, n);
    for (m, p) in spectral(&y)? {
        let coef = eighth_root(k * m);
        c = &c + &p.map(|x| Surd::from_gauss(x.clone())).scale(&coef);
    }
    Ok(c)
}

fn to_gauss(m: &Mat<Surd>) -> Option<Mat<Gauss>> {
    let entries: Option<Vec<Gauss>> = m.entries().iter().map(Surd::to_gauss).collect();
    let e = entries?;
    Some(Mat::from_fn(m.rows(), m.cols(), |i, j| e[i * m.cols() + j].clone()))
}

fn commutes_with_all(c: &Mat<Surd>, basis: &[Mat<Gauss>]) -> bool {
    basis.iter().all(|x| {
        let xs = x.map(|v| Surd::from_gauss(v.clone()));
        c * &xs == &xs * c
    })
}

fn flat(ms: &[Mat<Gauss>]) -> Vec<Vec<Gauss>> {
    ms.iter().map(|m| m.entries().to_vec()).collect()
}

/// Eigenspace of a linear map given as a matrix in some basis.
fn eigenspace(m: &Mat<Gauss>, lambda: i64) -> Vec<Vec<Gauss>> {
    let n = m.rows();
    (m - &Mat::identity(n).scale(&Gauss::from_i64(lambda))).kernel()
}

/// Build `c`, check `Ad(c)⁸ = Id` and `Ad(c)⁴ = Id` (the latter exactly in
/// tube models), and split `h^C` under `Ad(c²)`.
pub fn cayley_element(model: &MatrixModel) -> Result<CayleyReport> {
    let c = cayley_power(model, 1)?;
    let gc = model.gc_basis();
    let c8 = c.pow(8);
    let c4 = c.pow(4);
    let ad_c8_identity = commutes_with_all(&c8, &gc);
    let ad_c4_identity = commutes_with_all(&c4, &gc);

    let c4g = to_gauss(&c4).ok_or_else(|| Error::NotInModel("c⁴ is not Gaussian".into()))?;
    let c4i = c4g.inverse().ok_or(Error::Singular)?;
    let m_basis: Vec<Mat<Gauss>> = model.mplus_basis().iter().chain(model.mminus_basis()).cloned().collect();
    let m_coords = Coords::new(flat(&m_basis)).expect("m^C basis is independent");
    let cols: Vec<Vec<Gauss>> = m_basis
        .iter()
        .map(|x| m_coords.coords((&(&c4g * x) * &c4i).entries()).expect("Ad(c⁴) preserves m^C"))
        .collect();
    let dim_m2 = eigenspace(&Mat::from_cols(&cols), -1).len();

    let (mut h_prime, mut m_prime, mut h_prime_is_stabilizer) = (None, None, None);
    if model.tube() {
        let c2 = to_gauss(&c.pow(2)).ok_or_else(|| Error::NotInModel("c² is not Gaussian".into()))?;
        let c2i = c2.inverse().ok_or(Error::Singular)?;
        let hc = model.hc_basis_matrices();
        let mut cols = Vec::with_capacity(hc.len());
        for x in hc {
            let y = &(&c2 * x) * &c2i;
            cols.push(model.hc_coords(&y).ok_or_else(|| Error::NotInModel("Ad(c²) leaves h^C".into()))?);
        }
        let a = Mat::from_cols(&cols);
        let hp: Vec<Mat<Gauss>> = eigenspace(&a, 1).iter().map(|v| model.from_hc_coords(v)).collect();
        let mp: Vec<Mat<Gauss>> = eigenspace(&a, -1).iter().map(|v| model.from_hc_coords(v)).collect();

        let eg = model.e_gamma();
        let ad_cols: Vec<Vec<Gauss>> = hc
            .iter()
            .map(|x| model.mplus_coords(&eg.bracket(x)).expect("[m+, h^C] ⊆ m+"))
            .collect();
        let stab: Vec<Vec<Gauss>> = Mat::from_cols(&ad_cols).kernel();
        let stab_m: Vec<Mat<Gauss>> = stab.iter().map(|v| model.from_hc_coords(v)).collect();
        h_prime_is_stabilizer = Some(crate::linalg::same_span(&flat(&hp), &flat(&stab_m)));
        h_prime = Some(hp);
        m_prime = Some(mp);
    }
    Ok(CayleyReport { c, ad_c8_identity, ad_c4_identity, h_prime, m_prime, h_prime_is_stabilizer, dim_m2 })
}

/// `ad(e_Γ): m⁻ → m′^C` and `ad(e_Γ)²: m⁻ → m⁺`. Tube models only.
pub fn cayley_iso(model: &MatrixModel) -> Result<CayleyIso> {
    if !model.tube() {
        return Err(Error::NonTube);
    }
    let report = cayley_element(model)?;
    let mp = report.m_prime.expect("tube models carry m'");
    let mp_coords = Coords::new(flat(&mp)).expect("eigenspace basis is independent");
    let eg = model.e_gamma();
    let mut cols = Vec::new();
    let mut sq_cols = Vec::new();
    for f in model.mminus_basis() {
        let once = eg.bracket(f);
        cols.push(
            mp_coords
                .coords(once.entries())
                .ok_or_else(|| Error::NotInModel("ad(e_Γ) m⁻ is not in m'^C".into()))?,
        );
        let twice = eg.bracket(&once);
        sq_cols.push(model.mplus_coords(&twice).expect("[m+, h^C] ⊆ m+"));
    }
    let map = Mat::from_cols(&cols);
    let square_map = Mat::from_cols(&sq_cols);
    let invertible = map.is_square() && !map.det().is_zero();
    let square_invertible = square_map.is_square() && !square_map.det().is_zero();
    Ok(CayleyIso { map, square_map, invertible, square_invertible })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::HermitianFamily;

    #[test]
    fn sl2_cayley() {
        let m = MatrixModel::new(HermitianFamily::CI { n: 1 }).unwrap();
        let rep = cayley_element(&m).unwrap();
        assert!(rep.ad_c8_identity && rep.ad_c4_identity);
        assert_eq!(rep.m_prime.unwrap().len(), 1);
        let iso = cayley_iso(&m).unwrap();
        assert_eq!((iso.map.rows(), iso.map.cols()), (1, 1));
        assert!(iso.invertible && iso.square_invertible);
    }

    #[test]
    fn c_squared_matches_product() {
        let m = MatrixModel::new(HermitianFamily::BDI { n: 3 }).unwrap();
        let c = cayley_power(&m, 1).unwrap();
        assert_eq!(&c * &c, cayley_power(&m, 2).unwrap());
        assert_eq!(c.pow(8), Mat::identity(m.size()));
    }

    #[test]
    fn non_tube_c4() {
        let m = MatrixModel::new(HermitianFamily::AIII { p: 1, q: 3 }).unwrap();
        let rep = cayley_element(&m).unwrap();
        assert!(rep.ad_c8_identity);
        assert!(!rep.ad_c4_identity);
        // 2rb with r = 1, b = 2
        assert_eq!(rep.dim_m2, 4);
        assert!(cayley_iso(&m).is_err());
    }
}
