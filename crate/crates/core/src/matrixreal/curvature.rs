//! Holomorphic sectional curvature of the invariant metric `g(X, Y) = i χ_T([X, JY])`
//! on `m`, evaluated on `X = Σ λ_k x_{γ_k}` with `x_γ = e_γ + e_{−γ}`.

use super::MatrixModel;
use crate::error::{Error, Result};
use crate::field::{Field, Gauss, Q};
use crate::linalg::Mat;

/// `X = Σ λ_k x_{γ_k}`.
pub fn frame_vector(model: &MatrixModel, lambdas: &[Q]) -> Result<Mat<Gauss>> {
    if lambdas.len() > model.r() {
        return Err(Error::RankOutOfRange { got: lambdas.len(), max: model.r() });
    }
    let n = model.size();
    let mut x = Mat::zeros(n, n);
    for (e, l) in model.frame().iter().zip(lambdas) {
        let xg = e + &e.adjoint();
        x = &x + &xg.scale(&Gauss::real(l.clone()));
    }
    Ok(x)
}

/// `κ(X) = −i χ_T([[[X, JX], X], X]) / g(X, X)²` with `JX = [J, X]`.
///
/// On a single `x_γ` this is `−1`; on `Σ λ_k x_{γ_k}` it is `−Σλ⁴ / (Σλ²)²`.
pub fn curvature_check(model: &MatrixModel, lambdas: &[Q]) -> Result<Q> {
    let x = frame_vector(model, lambdas)?;
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let jx = model.j().bracket(&x);
    let xjx = x.bracket(&jx);
    let metric = Gauss::i() * model.toledo(&xjx);
    let quartic = -Gauss::i() * model.toledo(&xjx.bracket(&x).bracket(&x));
    let kappa = quartic.div(&(metric.clone() * metric));
    if !kappa.is_real() {
        return Err(Error::NotInModel("curvature is not real".into()));
    }
    Ok(kappa.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, qi};
    use crate::hermitian::HermitianFamily;

    #[test]
    fn single_root_is_minus_one() {
        for f in [HermitianFamily::CI { n: 1 }, HermitianFamily::AIII { p: 2, q: 3 }, HermitianFamily::BDI { n: 4 }] {
            let m = MatrixModel::new(f).unwrap();
            assert_eq!(curvature_check(&m, &[qi(1)]).unwrap(), qi(-1));
        }
    }

    #[test]
    fn general_lambda() {
        let m = MatrixModel::new(HermitianFamily::CI { n: 3 }).unwrap();
        assert_eq!(curvature_check(&m, &[qi(1), qi(1)]).unwrap(), q(-1, 2));
        assert_eq!(curvature_check(&m, &[qi(1), qi(1), qi(1)]).unwrap(), q(-1, 3));
        // −(1 + 16)/(1 + 4)²
        assert_eq!(curvature_check(&m, &[qi(1), qi(2)]).unwrap(), q(-17, 25));
        assert!(curvature_check(&m, &[qi(0)]).is_err());
        assert!(curvature_check(&m, &vec![qi(1); 4]).is_err());
    }
}
