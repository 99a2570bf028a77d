//! Milnor–Wood type bounds on the Toledo invariant, Cayley eligibility and
//! the rigidity data of non-tube groups.
//!
//! With `D = dim m / N`, `δ = 2g − 2` and `α = iλJ`:
//!
//! ```text
//! lower = −rk⁺ δ − (D − rk⁺) λ
//! upper =  rk⁻ δ − (D − rk⁻) λ
//! envelope = (δ + λ) r − D λ   if λ > −δ
//!          = −D λ              if λ ≤ −δ
//! ```
//!
//! In twisted mode `δ` is replaced by `deg L` and only `λ = 0` is accepted.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{qi, qstr, qstr_opt, Q};
use crate::groupform::GroupForm;
use crate::hermitian::{HermitianFamily, HermitianStructure};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuery {
    pub genus: i64,
    pub lambda: Q,
    pub rk_plus: usize,
    pub rk_minus: usize,
    /// `deg L` for the `L`-twisted bound.
    pub twist_degree: Option<i64>,
}

impl BoundQuery {
    pub fn new(genus: i64, lambda: Q, rk_plus: usize, rk_minus: usize) -> Self {
        BoundQuery { genus, lambda, rk_plus, rk_minus, twist_degree: None }
    }

    /// Full ranks `rk⁺ = rk⁻ = r` at `λ = 0`.
    pub fn maximal(hs: &HermitianStructure, genus: i64) -> Self {
        Self::new(genus, Q::zero(), hs.r(), hs.r())
    }

    /// `2g − 2`, or `deg L` in twisted mode.
    pub fn degree(&self) -> i64 {
        self.twist_degree.unwrap_or(2 * self.genus - 2)
    }
}

/// Compact part and finite part of the group `L′` of Table 5.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LPrime {
    pub compact: String,
    pub finite: Option<String>,
}

impl std::fmt::Display for LPrime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.finite {
            Some(z) => write!(f, "{} ⋉ {}", self.compact, z),
            None => f.write_str(&self.compact),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityData {
    /// The maximal tube-type subgroup `G_T`.
    pub group_t: String,
    pub l_prime: LPrime,
}

/// Table 5 data; `None` for tube families.
pub fn rigidity_data(family: HermitianFamily) -> Option<RigidityData> {
    let (group_t, compact, finite) = match family {
        HermitianFamily::AIII { p, q } if p < q => {
            (format!("SU({p},{p})"), format!("U({})", q - p), Some(format!("Z_{}", 2 * p)))
        }
        HermitianFamily::DIII { n } if n % 2 == 1 => (format!("SO*({})", 2 * n - 2), "U(1)".into(), None),
        HermitianFamily::EIII => ("Spin0(2,8)".into(), "U(1)".into(), None),
        _ => return None,
    };
    Some(RigidityData { group_t, l_prime: LPrime { compact, finite } })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eligibility {
    #[serde(with = "qstr")]
    pub o_j: Q,
    pub degree: i64,
    pub eligible: bool,
}

/// Whether `o_J` divides `degree` (`2g − 2`, or `deg L`).
pub fn cayley_eligibility(gf: &GroupForm, degree: i64) -> Eligibility {
    let eligible = (BigInt::from(degree) % gf.o_j()).is_zero();
    Eligibility { o_j: Q::from_integer(gf.o_j().clone()), degree, eligible }
}

/// The piecewise envelope in `λ` at full rank.
pub fn bound_envelope(hs: &HermitianStructure, degree: i64, lambda: &Q) -> Q {
    let d = hs.dim_m_over_n();
    let delta = qi(degree);
    if *lambda > -delta.clone() {
        (delta + lambda) * qi(hs.r() as i64) - d * lambda
    } else {
        -(d * lambda)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    #[serde(flatten)]
    pub family: HermitianFamily,
    pub group: Option<String>,
    pub genus: i64,
    #[serde(with = "qstr")]
    pub lambda: Q,
    pub rk_plus: usize,
    pub rk_minus: usize,
    pub twist_degree: Option<i64>,
    pub r: usize,
    pub degree: i64,
    #[serde(with = "qstr")]
    pub lower: Q,
    #[serde(with = "qstr")]
    pub upper: Q,
    #[serde(with = "qstr")]
    pub envelope: Q,
    #[serde(with = "qstr")]
    pub tau_max: Q,
    pub tube_simplification_used: bool,
    #[serde(with = "qstr")]
    pub dim_m_over_n: Q,
    #[serde(with = "qstr_opt")]
    pub o_j: Option<Q>,
    #[serde(with = "qstr_opt")]
    pub q_t: Option<Q>,
    pub cayley_eligible: Option<bool>,
    pub rigidity: Option<RigidityData>,
}

fn validate(hs: &HermitianStructure, q: &BoundQuery) -> Result<()> {
    if q.genus < 2 {
        return Err(Error::InvalidGenus(q.genus));
    }
    let r = hs.r();
    for rk in [q.rk_plus, q.rk_minus] {
        if rk > r {
            return Err(Error::RankOutOfRange { got: rk, max: r });
        }
    }
    if let Some(deg) = q.twist_degree {
        if !q.lambda.is_zero() {
            return Err(Error::NonzeroLambda);
        }
        if deg < 0 {
            return Err(Error::InvalidParameters(format!("deg L must be >= 0, got {deg}")));
        }
    }
    Ok(())
}

/// Bounds from the Lie algebra alone; no group-level data.
pub fn bound_algebra(hs: &HermitianStructure, q: &BoundQuery) -> Result<BoundReport> {
    validate(hs, q)?;
    let r = hs.r();
    let d = hs.dim_m_over_n();
    let tube = hs.tube();
    if tube && d != qi(r as i64) {
        return Err(Error::Classification(format!("tube family with dim m / N = {d} != r = {r}")));
    }
    let delta = qi(q.degree());
    let side = |rk: usize| -> (Q, Q) {
        let rk = qi(rk as i64);
        // In tube type D = r and the λ-term reads (r − rk) λ.
        let coeff = if tube { qi(r as i64) - &rk } else { &d - &rk };
        (rk * &delta, coeff * &q.lambda)
    };
    let (lp, lc) = side(q.rk_plus);
    let (up, uc) = side(q.rk_minus);
    Ok(BoundReport {
        family: hs.family(),
        group: None,
        genus: q.genus,
        lambda: q.lambda.clone(),
        rk_plus: q.rk_plus,
        rk_minus: q.rk_minus,
        twist_degree: q.twist_degree,
        r,
        degree: q.degree(),
        lower: -lp - lc,
        upper: up - uc,
        envelope: bound_envelope(hs, q.degree(), &q.lambda),
        tau_max: qi(r as i64) * delta,
        tube_simplification_used: tube,
        dim_m_over_n: d,
        o_j: None,
        q_t: None,
        cayley_eligible: None,
        rigidity: rigidity_data(hs.family()),
    })
}

/// Bounds together with the group-level data of `gf`.
pub fn bound_general(gf: &GroupForm, q: &BoundQuery) -> Result<BoundReport> {
    let mut rep = bound_algebra(gf.hermitian(), q)?;
    rep.group = Some(gf.group_name());
    rep.o_j = Some(Q::from_integer(gf.o_j().clone()));
    rep.q_t = Some(gf.q_t().clone());
    rep.cayley_eligible = Some(cayley_eligibility(gf, q.degree()).eligible);
    Ok(rep)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalityVerdict {
    #[serde(with = "qstr")]
    pub tau: Q,
    #[serde(with = "qstr")]
    pub tau_max: Q,
    pub within_bound: bool,
    pub is_maximal: bool,
    /// `r` when maximal: the relevant Higgs field must be regular everywhere.
    pub required_rank: Option<usize>,
    /// `"phi+"` for `τ < 0`, `"phi-"` for `τ > 0`.
    pub side: Option<String>,
    #[serde(with = "qstr_opt")]
    pub d: Option<Q>,
    pub d_integral: Option<bool>,
}

impl BoundReport {
    pub fn is_maximal_possible(&self, tau: &Q) -> bool {
        tau.abs() == self.tau_max
    }

    /// `d = q_T τ` and whether it is an integer.
    pub fn d_of_tau(&self, tau: &Q) -> Option<(Q, bool)> {
        self.q_t.as_ref().map(|qt| {
            let d = qt * tau;
            let integral = d.is_integer();
            (d, integral)
        })
    }
}

/// Maximality verdict for `τ` at `λ = 0`.
pub fn maximality_regularity_note(report: &BoundReport, tau: &Q) -> Result<MaximalityVerdict> {
    if !report.lambda.is_zero() {
        return Err(Error::NonzeroLambda);
    }
    let is_maximal = !report.tau_max.is_zero() && report.is_maximal_possible(tau);
    let side = if tau.is_negative() {
        Some("phi+".to_string())
    } else if tau.is_positive() {
        Some("phi-".to_string())
    } else {
        None
    };
    let (d, d_integral) = match report.d_of_tau(tau) {
        Some((d, i)) => (Some(d), Some(i)),
        None => (None, None),
    };
    Ok(MaximalityVerdict {
        tau: tau.clone(),
        tau_max: report.tau_max.clone(),
        within_bound: tau.abs() <= report.tau_max,
        is_maximal,
        required_rank: is_maximal.then_some(report.r),
        side,
        d,
        d_integral,
    })
}
