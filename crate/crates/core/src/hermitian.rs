//! Hermitian structure on a simple Lie algebra: the compact / non-compact
//! split of the positive roots, the grading coweight ζ = −iJ, the strongly
//! orthogonal cascade, restricted-root classes and sub-tube data.
//!
//! Distinguished nodes (0-based in the simple-root list of [`crate::rootsys`]):
//!
//! | family      | root system                      | node      | ζ                     |
//! |-------------|----------------------------------|-----------|-----------------------|
//! | `AIII(p,q)` | `A_{p+q-1}`                      | `p-1`     | `(q,…,q,-p,…,-p)/(p+q)` |
//! | `CI(n)`     | `C_n`                            | `n-1`     | `(½,…,½)`             |
//! | `DIII(n)`   | `D_n`                            | `n-1`     | `(½,…,½)`             |
//! | `BDI(2,n)`  | `B_{(n+1)/2}` or `D_{(n+2)/2}`   | `0`       | `e_1`                 |
//! | `EIII`      | `E6`                             | `0`       | computed              |
//! | `EVII`      | `E7`                             | `6`       | computed              |
//!
//! ζ is never stored by hand; it is solved from `α_node(ζ) = 1`, `α_i(ζ) = 0`.
//! For `DIII` the node `e_{n-1} + e_n` is used; the other spinor node gives
//! isomorphic data.
//!
//! The cascade is built from the bottom: γ₁ is the lowest non-compact root and
//! γ_{k+1} the lowest non-compact root strongly orthogonal to γ₁..γ_k (height
//! first, then lexicographic in simple-root coordinates). With this ordering
//! the compact positive roots project onto `0`, `−½γ_i` and `½(γ_j − γ_i)` with
//! `i < j`, so that `C_i + γ_i = Q_i` and `C_ij + γ_i = Q_ij`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{q, qi, Q};
use crate::rootsys::{dot, Family, RootSystem};

/// One of the six families of irreducible Hermitian symmetric spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum HermitianFamily {
    /// `SU(p,q)`, `1 ≤ p ≤ q`.
    AIII { p: usize, q: usize },
    /// `Sp(2n,R)`, `n ≥ 1`.
    CI { n: usize },
    /// `SO*(2n)`, `n ≥ 3` (`so*(4)` is not simple).
    DIII { n: usize },
    /// `SO₀(2,n)`, `n ≥ 3`.
    BDI { n: usize },
    EIII,
    EVII,
}

impl HermitianFamily {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameters(m));
        match *self {
            HermitianFamily::AIII { p, q } if p == 0 || p > q => {
                bad(format!("AIII needs 1 <= p <= q, got p={p}, q={q}"))
            }
            HermitianFamily::CI { n: 0 } => bad("CI needs n >= 1".into()),
            HermitianFamily::DIII { n } if n < 3 => bad(format!("DIII needs n >= 3, got {n}")),
            HermitianFamily::BDI { n } if n < 3 => bad(format!("BDI(2,n) needs n >= 3, got {n}")),
            _ => Ok(()),
        }
    }

    /// Name of the matrix group of the family, e.g. `Sp(6,R)`.
    pub fn group_name(&self) -> String {
        match *self {
            HermitianFamily::AIII { p, q } => format!("SU({p},{q})"),
            HermitianFamily::CI { n } => format!("Sp({},R)", 2 * n),
            HermitianFamily::DIII { n } => format!("SO*({})", 2 * n),
            HermitianFamily::BDI { n } => format!("SO0(2,{n})"),
            HermitianFamily::EIII => "E6(-14)".into(),
            HermitianFamily::EVII => "E7(-25)".into(),
        }
    }

    /// Name of the adjoint group, e.g. `PSU(2,3)`.
    pub fn adjoint_name(&self) -> String {
        match *self {
            HermitianFamily::AIII { p, q } => format!("PSU({p},{q})"),
            HermitianFamily::CI { n } => format!("PSp({},R)", 2 * n),
            HermitianFamily::DIII { n } => format!("PSO*({})", 2 * n),
            HermitianFamily::BDI { n } => format!("PSO0(2,{n})"),
            HermitianFamily::EIII => "E6(-14)/Z3".into(),
            HermitianFamily::EVII => "E7(-25)/Z2".into(),
        }
    }

    /// Rank of the complexified Lie algebra.
    pub fn lie_rank(&self) -> usize {
        self.root_data().1
    }

    fn root_data(&self) -> (Family, usize, usize) {
        match *self {
            HermitianFamily::AIII { p, q } => (Family::A, p + q - 1, p - 1),
            HermitianFamily::CI { n } => (Family::C, n, n - 1),
            HermitianFamily::DIII { n } => (Family::D, n, n - 1),
            HermitianFamily::BDI { n } if n % 2 == 1 => (Family::B, n.div_ceil(2), 0),
            HermitianFamily::BDI { n } => (Family::D, (n + 2) / 2, 0),
            HermitianFamily::EIII => (Family::E6, 6, 0),
            HermitianFamily::EVII => (Family::E7, 7, 6),
        }
    }
}

impl fmt::Display for HermitianFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HermitianFamily::AIII { p, q } => write!(f, "AIII({p},{q})"),
            HermitianFamily::CI { n } => write!(f, "CI({n})"),
            HermitianFamily::DIII { n } => write!(f, "DIII({n})"),
            HermitianFamily::BDI { n } => write!(f, "BDI(2,{n})"),
            HermitianFamily::EIII => f.write_str("EIII"),
            HermitianFamily::EVII => f.write_str("EVII"),
        }
    }
}

/// Restricted-root class of a positive root; indices are 0-based cascade positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootClass {
    C0,
    Ci(usize),
    Cij(usize, usize),
    Gamma(usize),
    Qi(usize),
    Qij(usize, usize),
}

impl RootClass {
    pub fn is_compact(&self) -> bool {
        matches!(self, RootClass::C0 | RootClass::Ci(_) | RootClass::Cij(..))
    }
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RootClass::C0 => f.write_str("C_0"),
            RootClass::Ci(i) => write!(f, "C_{}", i + 1),
            RootClass::Cij(i, j) => write!(f, "C_{},{}", i + 1, j + 1),
            RootClass::Gamma(i) => write!(f, "gamma_{}", i + 1),
            RootClass::Qi(i) => write!(f, "Q_{}", i + 1),
            RootClass::Qij(i, j) => write!(f, "Q_{},{}", i + 1, j + 1),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RestrictedClassification {
    /// Class of each positive root, indexed like `rs.positive_roots()`.
    pub classes: Vec<RootClass>,
    /// Coefficients `c_i` with `π(α) = Σ c_i γ_i`.
    pub projections: Vec<Vec<Q>>,
}

impl RestrictedClassification {
    pub fn members(&self, class: RootClass) -> Vec<usize> {
        (0..self.classes.len()).filter(|&k| self.classes[k] == class).collect()
    }
}

#[derive(Clone, Debug)]
pub struct HermitianStructure {
    rs: RootSystem,
    family: HermitianFamily,
    node: usize,
    zeta: Vec<Q>,
    compact_pos: Vec<usize>,
    noncompact_pos: Vec<usize>,
    cascade: Vec<usize>,
    classification: RestrictedClassification,
    mult_a: usize,
    mult_b: usize,
}

pub fn hermitian_structure(family: HermitianFamily) -> Result<HermitianStructure> {
    family.validate()?;
    let (fam, rank, node) = family.root_data();
    let rs = RootSystem::construct(fam, rank);
    let target: Vec<Q> = (0..rank).map(|i| if i == node { Q::one() } else { Q::zero() }).collect();
    let zeta = rs.coweight_with_values(&target);

    let mut compact_pos = Vec::new();
    let mut noncompact_pos = Vec::new();
    for (k, c) in rs.positive_coords().iter().enumerate() {
        match c[node] {
            0 => compact_pos.push(k),
            1 => noncompact_pos.push(k),
            _ => return Err(Error::Classification(format!("{:?} has node coefficient > 1", c))),
        }
    }
    let cascade = ascending_cascade(&rs, &noncompact_pos);
    let classification = classify(&rs, &cascade, &noncompact_pos)?;

    let r = cascade.len();
    let count = |cl: RootClass| classification.classes.iter().filter(|&&c| c == cl).count();
    let mult_b = count(RootClass::Qi(0));
    for i in 0..r {
        if count(RootClass::Qi(i)) != mult_b {
            return Err(Error::Classification("unequal multiplicities b".into()));
        }
    }
    let mult_a = if r > 1 { count(RootClass::Qij(0, 1)) } else { 0 };
    for i in 0..r {
        for j in i + 1..r {
            if count(RootClass::Qij(i, j)) != mult_a {
                return Err(Error::Classification("unequal multiplicities a".into()));
            }
        }
    }
    let hs = HermitianStructure {
        rs,
        family,
        node,
        zeta,
        compact_pos,
        noncompact_pos,
        cascade,
        classification,
        mult_a,
        mult_b,
    };
    hs.check_translations()?;
    Ok(hs)
}

fn height(c: &[i64]) -> i64 {
    c.iter().sum()
}

/// Strong orthogonality on simple-root coordinates.
pub fn strongly_orthogonal(rs: &RootSystem, a: &[i64], b: &[i64]) -> bool {
    let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
    let dif: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    !rs.is_root_coords(&sum) && !rs.is_root_coords(&dif) && dif.iter().any(|&x| x != 0)
}

fn ascending_cascade(rs: &RootSystem, noncompact: &[usize]) -> Vec<usize> {
    let coords = rs.positive_coords();
    let mut order = noncompact.to_vec();
    order.sort_by(|&i, &j| {
        height(&coords[i]).cmp(&height(&coords[j])).then_with(|| coords[i].cmp(&coords[j]))
    });
    let mut chosen: Vec<usize> = Vec::new();
    for k in order {
        if chosen.iter().all(|&c| strongly_orthogonal(rs, &coords[c], &coords[k])) {
            chosen.push(k);
        }
    }
    chosen
}

fn classify(
    rs: &RootSystem,
    cascade: &[usize],
    noncompact: &[usize],
) -> Result<RestrictedClassification> {
    let roots = rs.positive_roots();
    let gammas: Vec<&Vec<Q>> = cascade.iter().map(|&k| &roots[k]).collect();
    let nonc: HashSet<usize> = noncompact.iter().copied().collect();
    let half = q(1, 2);
    let mut classes = Vec::with_capacity(roots.len());
    let mut projections = Vec::with_capacity(roots.len());
    for (k, alpha) in roots.iter().enumerate() {
        let c: Vec<Q> = gammas.iter().map(|g| dot(alpha, g) / dot(g, g)).collect();
        let nz: Vec<usize> = (0..c.len()).filter(|&i| !c[i].is_zero()).collect();
        let fail = || Error::Classification(format!("{:?}", rs.positive_coords()[k]));
        let class = if nonc.contains(&k) {
            match nz.as_slice() {
                [i] if c[*i] == Q::one() => {
                    if cascade[*i] != k {
                        return Err(fail());
                    }
                    RootClass::Gamma(*i)
                }
                [i] if c[*i] == half => RootClass::Qi(*i),
                [i, j] if c[*i] == half && c[*j] == half => RootClass::Qij(*i, *j),
                _ => return Err(fail()),
            }
        } else {
            match nz.as_slice() {
                [] => RootClass::C0,
                [i] if c[*i] == -half.clone() => RootClass::Ci(*i),
                [i, j] if c[*i] == -half.clone() && c[*j] == half => RootClass::Cij(*i, *j),
                _ => return Err(fail()),
            }
        };
        classes.push(class);
        projections.push(c);
    }
    Ok(RestrictedClassification { classes, projections })
}

impl HermitianStructure {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }
    pub fn family(&self) -> HermitianFamily {
        self.family
    }
    /// 0-based index of the distinguished simple root.
    pub fn distinguished_node(&self) -> usize {
        self.node
    }
    /// The grading coweight ζ = −iJ.
    pub fn zeta(&self) -> &[Q] {
        &self.zeta
    }
    /// Indices into `rs.positive_roots()` of Δ_C⁺.
    pub fn compact_pos(&self) -> &[usize] {
        &self.compact_pos
    }
    /// Indices into `rs.positive_roots()` of Δ_Q⁺.
    pub fn noncompact_pos(&self) -> &[usize] {
        &self.noncompact_pos
    }
    /// Indices into `rs.positive_roots()` of γ₁, …, γ_r.
    pub fn cascade_indices(&self) -> &[usize] {
        &self.cascade
    }
    pub fn cascade(&self) -> Vec<Vec<Q>> {
        self.cascade.iter().map(|&k| self.rs.positive_roots()[k].clone()).collect()
    }
    pub fn classification(&self) -> &RestrictedClassification {
        &self.classification
    }
    pub fn r(&self) -> usize {
        self.cascade.len()
    }
    /// Multiplicity `a = |Q_ij|`; reported as 0 when `r = 1` (no pairs).
    pub fn mult_a(&self) -> usize {
        self.mult_a
    }
    /// Multiplicity `b = |Q_i|`.
    pub fn mult_b(&self) -> usize {
        self.mult_b
    }
    pub fn tube(&self) -> bool {
        self.mult_b == 0
    }
    pub fn dim_m_plus(&self) -> usize {
        self.noncompact_pos.len()
    }
    pub fn dim_m_t_plus(&self) -> usize {
        let r = self.r();
        r * (r - 1) * self.mult_a / 2 + r
    }
    pub fn dim_m(&self) -> usize {
        2 * self.dim_m_plus()
    }
    pub fn dual_coxeter(&self) -> i64 {
        self.rs.dual_coxeter()
    }
    /// `dim m / N`.
    pub fn dim_m_over_n(&self) -> Q {
        Q::new((self.dim_m() as i64).into(), self.dual_coxeter().into())
    }

    /// Killing-dual length ⟨γ,γ⟩ of a long non-compact root.
    pub fn gamma_norm(&self) -> Q {
        let g = &self.rs.positive_roots()[self.cascade[0]];
        self.rs.killing_dual(g, g)
    }

    /// χ_T(Y) = ⟨ζ, Y⟩ · ⟨γ, γ⟩ for a Cartan element Y.
    pub fn toledo_on_coweight(&self, y: &[Q]) -> Result<Q> {
        if y.len() != self.rs.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: self.rs.ambient_dim(), got: y.len() });
        }
        Ok(self.rs.killing_cartan(&self.zeta, y) * self.gamma_norm())
    }

    /// Check `C_i + γ_i = Q_i` and `C_ij + γ_i = Q_ij` as sets of roots.
    fn check_translations(&self) -> Result<()> {
        let coords = self.rs.positive_coords();
        let cls = &self.classification;
        let r = self.r();
        let shifted = |members: Vec<usize>, i: usize| -> Vec<Vec<i64>> {
            let g = &coords[self.cascade[i]];
            let mut v: Vec<Vec<i64>> =
                members.iter().map(|&k| coords[k].iter().zip(g).map(|(x, y)| x + y).collect()).collect();
            v.sort();
            v
        };
        let plain = |members: Vec<usize>| -> Vec<Vec<i64>> {
            let mut v: Vec<Vec<i64>> = members.iter().map(|&k| coords[k].clone()).collect();
            v.sort();
            v
        };
        for i in 0..r {
            if shifted(cls.members(RootClass::Ci(i)), i) != plain(cls.members(RootClass::Qi(i))) {
                return Err(Error::Classification(format!("C_{} + gamma_{} != Q_{}", i + 1, i + 1, i + 1)));
            }
            for j in i + 1..r {
                if shifted(cls.members(RootClass::Cij(i, j)), i)
                    != plain(cls.members(RootClass::Qij(i, j)))
                {
                    return Err(Error::Classification(format!("C_ij + gamma_i != Q_ij at ({i},{j})")));
                }
            }
        }
        Ok(())
    }

    /// Root data of the tube-type subalgebra spanned by the first `r′` cascade roots.
    pub fn subtube_roots(&self, rprime: usize) -> Result<SubtubeData> {
        let r = self.r();
        if rprime == 0 || rprime > r {
            return Err(Error::SubtubeOutOfRange { got: rprime, max: r });
        }
        let cls = &self.classification.classes;
        let mut compact = Vec::new();
        let mut noncompact = Vec::new();
        for (k, c) in cls.iter().enumerate() {
            match *c {
                RootClass::Cij(i, j) if j < rprime && i < j => compact.push(k),
                RootClass::Gamma(i) if i < rprime => noncompact.push(k),
                RootClass::Qij(i, j) if j < rprime && i < j => noncompact.push(k),
                _ => {}
            }
        }
        // The i = j terms: roots of C_0 reached as differences of roots in Q_{r′}.
        let coords = self.rs.positive_coords();
        for (k, c) in cls.iter().enumerate() {
            if *c != RootClass::C0 {
                continue;
            }
            let hit = noncompact.iter().any(|&a| {
                noncompact.iter().any(|&b| {
                    let d: Vec<i64> = coords[a].iter().zip(&coords[b]).map(|(x, y)| x - y).collect();
                    d == coords[k]
                })
            });
            if hit {
                compact.push(k);
            }
        }
        compact.sort_unstable();
        Ok(SubtubeData {
            rprime,
            mult_a: self.mult_a,
            compact,
            noncompact,
            cascade: self.cascade[..rprime].to_vec(),
        })
    }

    /// Killing-normalized values α(s)/⟨γ,γ⟩ used by the antidominance table.
    ///
    /// `s_χ` is the Cartan element dual to χ_T − (γ₁ + … + γ_{r′}), the roots
    /// being read as characters through the Killing-dual form.
    pub fn antidominant_element(&self, rprime: usize) -> Result<Vec<Q>> {
        let r = self.r();
        if rprime == 0 || rprime > r {
            return Err(Error::SubtubeOutOfRange { got: rprime, max: r });
        }
        // χ_T = ⟨ζ,·⟩⟨γ,γ⟩ has Killing dual ⟨γ,γ⟩ζ; a root β has Killing dual β/k.
        let k = self.rs.killing_coeff().clone();
        let gn = self.gamma_norm();
        let mut s: Vec<Q> = self.zeta.iter().map(|x| x * &gn).collect();
        for &c in &self.cascade[..rprime] {
            for (x, g) in s.iter_mut().zip(&self.rs.positive_roots()[c]) {
                *x -= g / &k;
            }
        }
        Ok(s)
    }

    /// Expected value of α(s_χ)/⟨γ,γ⟩ from the antidominance table:
    /// `1 − ½α(h)` on Δ_Q⁺, `−½α(h)` on Δ_C, `−1 − ½α(h)` on Δ_Q⁻,
    /// with `h = h_{γ₁} + … + h_{γ_{r′}}`.
    pub fn antidominant_table_value(&self, alpha: &[Q], rprime: usize) -> Q {
        let h = self.cascade_coroot_sum(rprime);
        let ah = dot(alpha, &h);
        let grade = dot(alpha, &self.zeta);
        &grade - ah / qi(2)
    }

    /// `h_{γ₁} + … + h_{γ_{r′}}` as a Cartan element.
    pub fn cascade_coroot_sum(&self, rprime: usize) -> Vec<Q> {
        let mut h = vec![Q::zero(); self.rs.ambient_dim()];
        for &c in &self.cascade[..rprime] {
            for (x, y) in h.iter_mut().zip(self.rs.coroot(&self.rs.positive_roots()[c])) {
                *x += y;
            }
        }
        h
    }

    /// Number of positive roots in each class, keyed by the class label.
    pub fn class_counts(&self) -> BTreeMap<RootClass, usize> {
        let mut m = BTreeMap::new();
        for c in &self.classification.classes {
            *m.entry(*c).or_insert(0) += 1;
        }
        m
    }
}

/// Roots of the sub-tube 𝔤_{r′}: `Q_{r′} = {γ_i} ∪ ⋃ Q_ij` over `i < j ≤ r′`, and
/// `C_{r′}` the `C_ij` with `i < j ≤ r′` together with the roots of `C_0` that are
/// differences of two roots of `Q_{r′}`.
#[derive(Clone, Debug)]
pub struct SubtubeData {
    pub rprime: usize,
    pub mult_a: usize,
    pub compact: Vec<usize>,
    pub noncompact: Vec<usize>,
    pub cascade: Vec<usize>,
}

impl SubtubeData {
    pub fn dim_m_plus(&self) -> usize {
        self.noncompact.len()
    }
    /// `N` of the sub-tube from its tube-type bookkeeping, `a(r′−1) + 2`.
    pub fn dual_coxeter(&self) -> usize {
        self.mult_a * (self.rprime - 1) + 2
    }

    /// All roots (both signs) of the sub-tube, in simple-root coordinates.
    pub fn root_coords(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        let coords = rs.positive_coords();
        let mut out = Vec::new();
        for &k in self.compact.iter().chain(&self.noncompact) {
            out.push(coords[k].clone());
            out.push(coords[k].iter().map(|x| -x).collect());
        }
        out
    }

    /// Whether the root set is closed under addition inside Δ.
    pub fn is_closed(&self, rs: &RootSystem) -> bool {
        let roots = self.root_coords(rs);
        let set: HashSet<&Vec<i64>> = roots.iter().collect();
        roots.iter().all(|a| {
            roots.iter().all(|b| {
                let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                !rs.is_root_coords(&s) || set.contains(&s)
            })
        })
    }

    /// `N` of the sub-tube computed from its own Killing form:
    /// `Σ_{α} (α·γ)² / (γ·γ)` over all its roots.
    pub fn killing_dual_coxeter(&self, rs: &RootSystem) -> Q {
        let g = &rs.positive_roots()[self.cascade[0]];
        let gg = dot(g, g);
        let mut s = Q::zero();
        for &k in self.compact.iter().chain(&self.noncompact) {
            let x = dot(&rs.positive_roots()[k], g);
            s += qi(2) * &x * &x;
        }
        s / (&gg * &gg)
    }
}
