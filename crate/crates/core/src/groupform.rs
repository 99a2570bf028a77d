//! Groups in an isogeny class, encoded by the cocharacter lattice `K` of a
//! maximal torus of `H^C`.
//!
//! A Cartan element `Y` lies in `K` when `exp(2πi Y) = 1`. Since `e^{2πJ} =
//! exp(2πi ζ)`, the order `o_J` is the least `k > 0` with `kζ ∈ K`. The element
//! `exp(2πi tζ)` lies in `[H^C, H^C]` exactly when `tζ` is the projection of a
//! lattice vector onto `Rζ`, so `ℓ = [π_z(K) : Z·o_J ζ]`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{gcd_q, qi, Q};
use crate::hermitian::{HermitianFamily, HermitianStructure};
use crate::lattice::{lattice_index, IntegerLattice};
use crate::rootsys::dot;

#[derive(Clone, Debug, PartialEq)]
pub enum GroupLabel {
    /// The matrix group of the family (`SU(p,q)`, `Sp(2n,R)`, `SO*(2n)`,
    /// `SO₀(2,n)`, and the simply connected exceptional groups).
    Matrix,
    Adjoint,
    SimplyConnected,
    Custom(IntegerLattice),
}

impl GroupLabel {
    pub fn name(&self) -> &'static str {
        match self {
            GroupLabel::Matrix => "matrix",
            GroupLabel::Adjoint => "adjoint",
            GroupLabel::SimplyConnected => "simply-connected",
            GroupLabel::Custom(_) => "custom",
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct GroupForm {
    hs: HermitianStructure,
    label: GroupLabel,
    lattice: IntegerLattice,
    o_j: BigInt,
    ell: BigInt,
    q_t: Q,
}

fn coroot_lattice(hs: &HermitianStructure) -> IntegerLattice {
    let rs = hs.root_system();
    IntegerLattice::new(rs.simple_coroots(), rs.ambient_dim()).expect("simple coroots are independent")
}

fn coweight_lattice(hs: &HermitianStructure) -> IntegerLattice {
    let rs = hs.root_system();
    let basis = (0..rs.rank()).map(|i| rs.fundamental_coweight(i)).collect();
    IntegerLattice::new(basis, rs.ambient_dim()).expect("fundamental coweights are independent")
}

fn matrix_lattice(hs: &HermitianStructure) -> IntegerLattice {
    let rs = hs.root_system();
    match hs.family() {
        // Diagonal torus of S(U(p) × U(q)): integer vectors with zero sum,
        // which is the coroot lattice of A_{p+q-1}.
        HermitianFamily::AIII { .. } => coroot_lattice(hs),
        HermitianFamily::CI { .. } | HermitianFamily::DIII { .. } | HermitianFamily::BDI { .. } => {
            IntegerLattice::standard(rs.ambient_dim())
        }
        HermitianFamily::EIII | HermitianFamily::EVII => coroot_lattice(hs),
    }
}

/// Build a group form. Custom lattices must satisfy coroot ⊆ K ⊆ coweight.
pub fn group_form(hs: &HermitianStructure, label: GroupLabel) -> Result<GroupForm> {
    let lattice = match &label {
        GroupLabel::Matrix => matrix_lattice(hs),
        GroupLabel::Adjoint => coweight_lattice(hs),
        GroupLabel::SimplyConnected => coroot_lattice(hs),
        GroupLabel::Custom(k) => {
            let rs = hs.root_system();
            if k.ambient_dim() != rs.ambient_dim() || k.rank() != rs.rank() {
                return Err(Error::UnsupportedForm(format!(
                    "lattice must have rank {} in dimension {}",
                    rs.rank(),
                    rs.ambient_dim()
                )));
            }
            if !k.contains_lattice(&coroot_lattice(hs)) || !coweight_lattice(hs).contains_lattice(k) {
                return Err(Error::UnsupportedForm(
                    "lattice must lie between the coroot and coweight lattices".into(),
                ));
            }
            k.clone()
        }
    };
    let zeta = hs.zeta();
    let coords = lattice.coordinates(zeta).expect("ζ lies in the span of the Cartan");
    let o_j = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));

    let zz = dot(zeta, zeta);
    let g = lattice
        .basis()
        .iter()
        .fold(Q::zero(), |acc, b| gcd_q(&acc, &(dot(b, zeta) / &zz)));
    let line = |t: Q| IntegerLattice::new(vec![zeta.iter().map(|x| x * &t).collect()], zeta.len());
    let ell = lattice_index(&line(Q::from_integer(o_j.clone()))?, &line(g)?)?;

    let n = qi(hs.dual_coxeter());
    let dim_m = qi(hs.dim_m() as i64);
    let q_t = Q::from_integer(ell.clone()) * n / (Q::from_integer(o_j.clone()) * dim_m);
    Ok(GroupForm { hs: hs.clone(), label, lattice, o_j, ell, q_t })
}

impl GroupForm {
    pub fn hermitian(&self) -> &HermitianStructure {
        &self.hs
    }
    pub fn label(&self) -> &GroupLabel {
        &self.label
    }
    pub fn cochar_lattice(&self) -> &IntegerLattice {
        &self.lattice
    }
    /// Order of `e^{2πJ}` in `H^C`.
    pub fn o_j(&self) -> &BigInt {
        &self.o_j
    }
    /// `|Z₀^C ∩ [H^C, H^C]|`.
    pub fn ell(&self) -> &BigInt {
        &self.ell
    }
    pub fn q_t(&self) -> &Q {
        &self.q_t
    }

    /// `q_T` computed directly as `1 / gcd{χ_T(b) : b ∈ K}`.
    pub fn q_t_direct(&self) -> Q {
        let g = self.lattice.basis().iter().fold(Q::zero(), |acc, b| {
            gcd_q(&acc, &self.hs.toledo_on_coweight(b).expect("dimension checked at construction"))
        });
        Q::one() / g
    }

    pub fn group_name(&self) -> String {
        match self.label {
            GroupLabel::Matrix => self.hs.family().group_name(),
            GroupLabel::Adjoint => self.hs.family().adjoint_name(),
            GroupLabel::SimplyConnected => format!("simply connected {}", self.hs.family().group_name()),
            GroupLabel::Custom(_) => format!("{} (custom lattice)", self.hs.family().group_name()),
        }
    }
}

/// `τ = d / q_T`.
pub fn toledo_from_class(gf: &GroupForm, d: &BigInt) -> Q {
    Q::from_integer(d.clone()) / gf.q_t()
}

/// Whether `q·χ_T` lifts to a character of `H^C`, i.e. `q / q_T ∈ Z`.
pub fn lifting_multiples(gf: &GroupForm, q: &Q) -> bool {
    (q / gf.q_t()).is_integer()
}

/// Serializable summary of a group form; rationals as `"num/den"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFormRecord {
    #[serde(flatten)]
    pub family: HermitianFamily,
    pub label: String,
    pub group: String,
    pub o_j: String,
    pub ell: String,
    pub q_t: String,
}

impl From<&GroupForm> for GroupFormRecord {
    fn from(gf: &GroupForm) -> Self {
        use crate::field::fmt_q;
        GroupFormRecord {
            family: gf.hs.family(),
            label: gf.label.name().into(),
            group: gf.group_name(),
            o_j: fmt_q(&Q::from_integer(gf.o_j.clone())),
            ell: fmt_q(&Q::from_integer(gf.ell.clone())),
            q_t: fmt_q(&gf.q_t),
        }
    }
}

/// Parse a group label; `custom` is only available through [`GroupLabel::Custom`].
pub fn parse_label(s: &str) -> Result<GroupLabel> {
    match s {
        "matrix" => Ok(GroupLabel::Matrix),
        "adjoint" => Ok(GroupLabel::Adjoint),
        "simply-connected" | "sc" => Ok(GroupLabel::SimplyConnected),
        other => Err(Error::UnsupportedForm(other.into())),
    }
}
