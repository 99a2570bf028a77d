//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact (tolerance 0). Criterion 2 compares the adjoint
//! `PSU(p,q)` rows against the closed form `(p+q)/(2·lcm(p,q))`, which the
//! lattice computation does not reproduce; that criterion is reported as FAIL
//! and listed in `KNOWN_FAILURES`. Any other failure, or criterion 2 starting
//! to pass, makes this target exit non-zero.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hermsym_core::bounds::{bound_envelope, bound_general, BoundQuery};
use hermsym_core::field::{q, qi, Field, Gauss, Q};
use hermsym_core::groupform::{group_form, toledo_from_class, GroupForm, GroupLabel};
use hermsym_core::hermitian::{hermitian_structure, HermitianFamily, HermitianStructure, RootClass};
use hermsym_core::matrixreal::{
    act, antidominant_eigen_check, antidominant_root_check, cayley_element, cayley_iso, curvature_check,
    det_on_mplus, equivariance_check, jordan_det, jordan_rank, moment_identity, polarized_rank, JordanElement,
    MatrixModel,
};
use hermsym_core::rootsys::dot;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (u8, &'static str, fn() -> Check);

const KNOWN_FAILURES: &[u8] = &[2];
const SEED: u64 = 0x5eed_2024;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hs(f: HermitianFamily) -> HermitianStructure {
    hermitian_structure(f).expect("valid family")
}

fn gf(f: HermitianFamily, l: GroupLabel) -> GroupForm {
    group_form(&hs(f), l).expect("valid group form")
}

/// SU(p,q) 1≤p≤q≤6, Sp(2n) n≤8, SO*(2n) 3≤n≤8, SO0(2,n) 3≤n≤10, E6, E7.
fn table2_families() -> Vec<HermitianFamily> {
    let mut out = Vec::new();
    for p in 1..=6 {
        for q in p..=6 {
            out.push(HermitianFamily::AIII { p, q });
        }
    }
    out.extend((1..=8).map(|n| HermitianFamily::CI { n }));
    out.extend((3..=8).map(|n| HermitianFamily::DIII { n }));
    out.extend((3..=10).map(|n| HermitianFamily::BDI { n }));
    out.push(HermitianFamily::EIII);
    out.push(HermitianFamily::EVII);
    out
}

/// Closed forms `(N, dim m, ℓ, o_J, q_T)` of Table 2.
fn table2_closed_form(f: HermitianFamily) -> (i64, i64, i64, i64, Q) {
    match f {
        HermitianFamily::AIII { p, q } => {
            let (p, q) = (p as i64, q as i64);
            (p + q, 2 * p * q, p.lcm(&q), (p + q) / p.gcd(&q), crate::q(1, 2))
        }
        HermitianFamily::CI { n } => {
            let n = n as i64;
            (n + 1, n * (n + 1), n, 2, crate::q(1, 2))
        }
        HermitianFamily::DIII { n } => {
            let n = n as i64;
            (2 * (n - 1), n * (n - 1), n, 2, qi(1))
        }
        HermitianFamily::BDI { n } => {
            let n = n as i64;
            (n, 2 * n, 1, 1, crate::q(1, 2))
        }
        HermitianFamily::EIII => (12, 32, 4, 3, crate::q(1, 2)),
        HermitianFamily::EVII => (18, 54, 3, 2, crate::q(1, 2)),
    }
}

fn int(x: &BigInt) -> i64 {
    i64::try_from(x).expect("small integer")
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let fams = table2_families();
    for &f in &fams {
        let g = gf(f, GroupLabel::Matrix);
        let h = g.hermitian();
        let got = (h.dual_coxeter(), h.dim_m() as i64, int(g.ell()), int(g.o_j()), g.q_t().clone());
        let want = table2_closed_form(f);
        ensure(got == want, || format!("{f}: got {got:?}, table {want:?}"))?;
        ensure(g.q_t_direct() == *g.q_t(), || format!("{f}: direct q_T {} != {}", g.q_t_direct(), g.q_t()))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?} (limit 5 s)"))?;
    Ok(format!("{} rows exact, {:.2?}", fams.len(), elapsed))
}

fn criterion_2() -> Check {
    let mut mismatches = Vec::new();
    let mut checked = 0;
    let mut psu = 0;
    for q in 2..=6usize {
        for p in 1..q {
            let g = gf(HermitianFamily::AIII { p, q }, GroupLabel::Adjoint);
            checked += 1;
            psu += 1;
            let want = Q::new(BigInt::from(p + q), BigInt::from(2 * p.lcm(&q)));
            ensure(int(g.o_j()) == 1, || format!("PSU({p},{q}): o_J = {}", g.o_j()))?;
            if *g.q_t() != want {
                mismatches.push(format!("PSU({p},{q}) q_T={} (table {want})", g.q_t()));
            }
        }
    }
    for m in 1..=3usize {
        let n = 2 * m + 1;
        let g = gf(HermitianFamily::DIII { n }, GroupLabel::Adjoint);
        checked += 1;
        ensure(int(g.o_j()) == 1 && *g.q_t() == qi(2), || format!("PSO*({}): o_J={}, q_T={}", 2 * n, g.o_j(), g.q_t()))?;
    }
    let g = gf(HermitianFamily::EIII, GroupLabel::Adjoint);
    checked += 1;
    ensure(int(g.o_j()) == 1 && *g.q_t() == q(3, 2), || format!("E6 adjoint: o_J={}, q_T={}", g.o_j(), g.q_t()))?;
    if mismatches.is_empty() {
        Ok(format!("{checked} adjoint rows exact"))
    } else {
        Err(format!(
            "PSO*(4m+2) and E6/Z3 exact; {} of {psu} PSU rows differ, e.g. {}",
            mismatches.len(),
            mismatches[0]
        ))
    }
}

fn criterion_3() -> Check {
    let fams = table2_families();
    for &f in &fams {
        let h = hs(f);
        let n = h.dual_coxeter();
        let comarks: i64 = h.root_system().comarks().iter().sum();
        let r = h.r() as i64;
        ensure(1 + comarks == n, || format!("{f}: 1+Σcomarks = {} != N = {n}", 1 + comarks))?;
        let restricted = h.mult_a() as i64 * (r - 1) + h.mult_b() as i64 + 2;
        ensure(restricted == n, || format!("{f}: a(r-1)+b+2 = {restricted} != {n}"))?;
        let dims = (h.dim_m_plus() + h.dim_m_t_plus()) as i64;
        ensure(Q::new(dims.into(), r.into()) == qi(n), || format!("{f}: (dim m+ + dim m_T+)/r != {n}"))?;
        ensure(h.gamma_norm() == Q::new(1.into(), n.into()), || format!("{f}: <γ,γ> = {}", h.gamma_norm()))?;
    }
    Ok(format!("{} families, three expressions of N and <γ,γ> = 1/N", fams.len()))
}

/// Coefficient profile of the projection of a root onto the span of `gammas`.
fn profile(alpha: &[Q], gammas: &[Vec<Q>]) -> Vec<Q> {
    gammas.iter().map(|g| dot(alpha, g) / dot(g, g)).collect()
}

fn is_root(set: &BTreeSet<Vec<i64>>, v: &[i64]) -> bool {
    set.contains(v) || set.contains(&v.iter().map(|x| -x).collect::<Vec<_>>())
}

fn bron_kerbosch(adj: &[Vec<bool>], r: Vec<usize>, mut p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let pivot = *p.iter().chain(&x).max_by_key(|&&u| p.iter().filter(|&&v| adj[u][v]).count()).unwrap();
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    for v in candidates {
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let x2 = x.iter().copied().filter(|&u| adj[v][u]).collect();
        bron_kerbosch(adj, r2, p2, x2, out);
        p.retain(|&u| u != v);
        x.push(v);
    }
}

/// Shape of a profile: number of entries equal to ±1 and ±½, ignoring order and sign.
fn shape(p: &[Q]) -> (usize, usize) {
    let one = qi(1);
    let half = q(1, 2);
    let ones = p.iter().filter(|c| c.abs() == one).count();
    let halves = p.iter().filter(|c| c.abs() == half).count();
    (ones, halves)
}

fn expected_class(p: &[Q], noncompact: bool) -> Option<RootClass> {
    let nz: Vec<(usize, &Q)> = p.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    let half = q(1, 2);
    Some(match (noncompact, nz.as_slice()) {
        (false, []) => RootClass::C0,
        (false, [(i, c)]) if **c == -half.clone() => RootClass::Ci(*i),
        (false, [(i, a), (j, b)]) if **a == -half.clone() && **b == half => RootClass::Cij(*i, *j),
        (true, [(i, c)]) if **c == qi(1) => RootClass::Gamma(*i),
        (true, [(i, c)]) if **c == half => RootClass::Qi(*i),
        (true, [(i, a), (j, b)]) if **a == half && **b == half => RootClass::Qij(*i, *j),
        _ => return None,
    })
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let mut fams: Vec<HermitianFamily> = Vec::new();
    for p in 1..=4 {
        for q in p..=9 - p {
            fams.push(HermitianFamily::AIII { p, q });
        }
    }
    fams.extend((1..=4).map(|n| HermitianFamily::CI { n }));
    fams.extend((3..=9).map(|n| HermitianFamily::DIII { n }));
    fams.extend((3..=12).map(|n| HermitianFamily::BDI { n }));
    fams.push(HermitianFamily::EIII);
    fams.push(HermitianFamily::EVII);
    let mut tested = 0;
    let mut cliques_seen = 0;
    for f in fams {
        let h = hs(f);
        let rs = h.root_system();
        if h.r() > 4 || rs.num_positive() > 40 {
            continue;
        }
        tested += 1;
        let roots = rs.positive_roots();
        let coords = rs.positive_coords();
        let all: BTreeSet<Vec<i64>> = coords.iter().cloned().collect();
        let zeta = h.zeta();
        let nc: Vec<usize> = (0..roots.len()).filter(|&k| dot(&roots[k], zeta) == qi(1)).collect();
        let so = |a: usize, b: usize| {
            let s: Vec<i64> = coords[a].iter().zip(&coords[b]).map(|(x, y)| x + y).collect();
            let d: Vec<i64> = coords[a].iter().zip(&coords[b]).map(|(x, y)| x - y).collect();
            !is_root(&all, &s) && !is_root(&all, &d)
        };
        let adj: Vec<Vec<bool>> =
            (0..nc.len()).map(|i| (0..nc.len()).map(|j| i != j && so(nc[i], nc[j])).collect()).collect();
        let mut cliques = Vec::new();
        bron_kerbosch(&adj, Vec::new(), (0..nc.len()).collect(), Vec::new(), &mut cliques);
        cliques_seen += cliques.len();
        let max = cliques.iter().map(Vec::len).max().unwrap_or(0);
        ensure(max == h.r(), || format!("{f}: largest strongly orthogonal set {max} != r = {}", h.r()))?;

        let cascade: BTreeSet<usize> = h.cascade_indices().iter().copied().collect();
        ensure(
            cliques.iter().any(|c| c.iter().map(|&i| nc[i]).collect::<BTreeSet<_>>() == cascade),
            || format!("{f}: cascade is not a maximal strongly orthogonal set"),
        )?;

        let gammas = h.cascade();
        let mut cascade_shapes = BTreeMap::new();
        for (k, alpha) in roots.iter().enumerate() {
            let p = profile(alpha, &gammas);
            let noncompact = nc.contains(&k);
            let want = expected_class(&p, noncompact);
            let got = h.classification().classes[k];
            ensure(want == Some(got), || format!("{f}: root {:?} profile {p:?} class {got:?}", coords[k]))?;
            *cascade_shapes.entry((noncompact, shape(&p))).or_insert(0usize) += 1;
        }
        for c in cliques.iter().filter(|c| c.len() == max) {
            let gs: Vec<Vec<Q>> = c.iter().map(|&i| roots[nc[i]].clone()).collect();
            let mut shapes = BTreeMap::new();
            for (k, alpha) in roots.iter().enumerate() {
                *shapes.entry((nc.contains(&k), shape(&profile(alpha, &gs)))).or_insert(0usize) += 1;
            }
            ensure(shapes == cascade_shapes, || format!("{f}: projection pattern differs for clique {c:?}"))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?} (limit 30 s)"))?;
    Ok(format!("{tested} families, {cliques_seen} maximal sets enumerated, {elapsed:.2?}"))
}

fn criterion_5() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let models = common::models_up_to_5();
    let mut equiv = 0;
    let mut invariance = 0;
    let mut polarized = 0;
    for m in &models {
        let f = m.family();
        let r = m.r();
        if m.tube() {
            let eg = JordanElement::e_gamma(m);
            ensure(jordan_det(m, &eg).unwrap() == Gauss::one(), || format!("{f}: det(e_Γ) != 1"))?;
            for _ in 0..5 {
                let x = common::random_x(&mut rng, m);
                let t = common::gauss_int(&mut rng, 3);
                let lhs = jordan_det(m, &x.scale(&t)).unwrap();
                let mut tr = Gauss::one();
                for _ in 0..r {
                    tr = tr * t.clone();
                }
                ensure(lhs == tr * jordan_det(m, &x).unwrap(), || format!("{f}: det(tx) != t^r det(x)"))?;
            }
            for k in 0..100 {
                let h = common::random_h(&mut rng, m);
                let x = common::random_x(&mut rng, m);
                ensure(equivariance_check(m, &h, &x).unwrap(), || format!("{f}: equivariance failed"))?;
                if k < 5 {
                    let chi = h.character(m).unwrap();
                    let mut chi_n = Gauss::one();
                    for _ in 0..m.dual_coxeter() {
                        chi_n = chi_n * chi.clone();
                    }
                    let d = det_on_mplus(m, &h).unwrap();
                    ensure(chi_n == d.clone() * d, || format!("{f}: χ^N != det(Ad h|m+)^2"))?;
                }
                equiv += 1;
            }
        } else {
            ensure(jordan_det(m, &JordanElement::e_gamma(m)).is_err(), || format!("{f}: det defined off tube"))?;
        }
        for _ in 0..100 {
            let h = common::random_h(&mut rng, m);
            let x = common::random_x(&mut rng, m);
            let y = act(m, &h, &x).unwrap();
            let (a, b) = (jordan_rank(m, &x).unwrap(), jordan_rank(m, &y).unwrap());
            ensure(a == b, || format!("{f}: rank {a} -> {b} under H^C"))?;
            invariance += 1;
        }
        let small = match f {
            HermitianFamily::AIII { p, q } => p == q && q <= 3,
            HermitianFamily::CI { n } => n <= 3,
            HermitianFamily::BDI { n } => n <= 3,
            _ => false,
        };
        if small {
            for k in 0..=r {
                for _ in 0..4 {
                    let x = common::random_x_of_rank(&mut rng, m, k);
                    let probes: Vec<JordanElement> = (0..3).map(|_| common::random_x_of_rank(&mut rng, m, r)).collect();
                    let (a, b) = (jordan_rank(m, &x).unwrap(), polarized_rank(m, &x, &probes).unwrap());
                    ensure(a == b, || format!("{f}: rank {a} but polarized rank {b}"))?;
                    polarized += 1;
                }
            }
        }
    }
    Ok(format!(
        "{} models; {equiv} equivariance pairs, {invariance} rank-invariance pairs, {polarized} polarized checks",
        models.len()
    ))
}

fn table4_dim(f: HermitianFamily) -> Option<usize> {
    match f {
        HermitianFamily::AIII { p, q } if p == q => Some(p * p),
        HermitianFamily::CI { n } => Some(n * (n + 1) / 2),
        HermitianFamily::DIII { n } if n % 2 == 0 => Some((n / 2) * (n - 1)),
        HermitianFamily::BDI { n } => Some(n),
        _ => None,
    }
}

fn criterion_6() -> Check {
    let models = common::models_up_to_5();
    for m in &models {
        let f = m.family();
        let rep = cayley_element(m).map_err(|e| format!("{f}: {e}"))?;
        ensure(rep.ad_c8_identity, || format!("{f}: Ad(c)^8 != Id"))?;
        ensure(rep.ad_c4_identity == m.tube(), || format!("{f}: Ad(c)^4 = Id is {}", rep.ad_c4_identity))?;
        let h = hs(f);
        if m.tube() {
            let dim = rep.m_prime.as_ref().map(Vec::len);
            ensure(dim == table4_dim(f), || format!("{f}: dim m' = {dim:?}, table {:?}", table4_dim(f)))?;
            ensure(rep.h_prime_is_stabilizer == Some(true), || format!("{f}: h' is not the stabilizer of e_Γ"))?;
            let iso = cayley_iso(m).map_err(|e| format!("{f}: {e}"))?;
            ensure(iso.invertible && iso.square_invertible, || format!("{f}: ad(e_Γ) not invertible"))?;
        } else {
            ensure(rep.dim_m2 == 2 * h.r() * h.mult_b(), || format!("{f}: dim m2 = {} != 2rb", rep.dim_m2))?;
            ensure(cayley_iso(m).is_err(), || format!("{f}: Cayley iso defined off tube"))?;
        }
    }
    Ok(format!("{} models; Ad(c)^4 = Id exactly on tube models, m' dims match", models.len()))
}

fn criterion_7() -> Check {
    let models: Vec<MatrixModel> = common::models_up_to_5().into_iter().filter(MatrixModel::tube).collect();
    for m in &models {
        ensure(moment_identity(m), || format!("{}: [e_Γ, τ(e_Γ)] != -2iJ", m.family()))?;
    }
    Ok(format!("{} tube models", models.len()))
}

fn criterion_8() -> Check {
    let mut pairs = 0;
    for f in table2_families() {
        let h = hs(f);
        for rp in 1..=h.r() {
            ensure(antidominant_root_check(&h, rp).unwrap(), || format!("{f}, r'={rp}: root table mismatch"))?;
            pairs += 1;
        }
    }
    let mut model_pairs = 0;
    for m in common::models_up_to_5() {
        for rp in 1..=m.r() {
            let rep = antidominant_eigen_check(&m, rp).map_err(|e| format!("{}: {e}", m.family()))?;
            ensure(rep.passed(), || format!("{}, r'={rp}: {rep:?}", m.family()))?;
            model_pairs += 1;
        }
    }
    Ok(format!("{pairs} (family, r') pairs on roots, {model_pairs} on matrix models"))
}

fn criterion_9() -> Check {
    let mut count = 0;
    for f in table2_families() {
        let g = gf(f, GroupLabel::Matrix);
        let h = g.hermitian();
        let r = h.r() as i64;
        for genus in 2..=10i64 {
            let delta = 2 * genus - 2;
            let rep = bound_general(&g, &BoundQuery::maximal(h, genus)).unwrap();
            ensure(rep.lower == qi(-r * delta) && rep.upper == qi(r * delta), || {
                format!("{f}, g={genus}: [{}, {}]", rep.lower, rep.upper)
            })?;
            ensure(rep.tau_max == qi(r * delta), || format!("{f}: tau_max {}", rep.tau_max))?;
            let at = qi(-delta);
            let d = h.dim_m_over_n();
            let first_branch = (qi(delta) + &at) * qi(r) - &d * &at;
            let env = bound_envelope(h, delta, &at);
            ensure(env == first_branch && env == &d * qi(delta), || format!("{f}: envelope discontinuous"))?;
            for lam in [qi(-3 * delta), q(-2 * delta - 1, 2), q(-3 * delta + 1, 3), qi(0), q(5, 2)] {
                let best = (0..=h.r())
                    .map(|k| bound_general(&g, &BoundQuery::new(genus, lam.clone(), 0, k)).unwrap().upper)
                    .max()
                    .unwrap();
                ensure(bound_envelope(h, delta, &lam) == best, || format!("{f}: envelope at λ={lam} != {best}"))?;
            }
            count += 1;
        }
        let rep = bound_general(&g, &BoundQuery::maximal(h, 2)).unwrap();
        for d in -6..=6i64 {
            let tau = toledo_from_class(&g, &BigInt::from(d));
            ensure(rep.d_of_tau(&tau) == Some((qi(d), true)), || format!("{f}: d={d} does not round-trip"))?;
        }
    }
    let e = hs(HermitianFamily::EIII);
    ensure(e.dim_m_over_n() == q(8, 3), || "EIII: dim m/N != 8/3".into())?;
    let rep = hermsym_core::bounds::bound_algebra(&e, &BoundQuery::new(2, qi(3), 2, 2)).unwrap();
    ensure(rep.lower == qi(-6) && rep.upper == qi(2), || format!("EIII example: [{}, {}]", rep.lower, rep.upper))?;
    Ok(format!("{count} (family, genus) pairs; EIII example [-6, 2]; τ = d/q_T round-trips"))
}

fn criterion_10() -> Check {
    let models: Vec<MatrixModel> = common::models_up_to_5().into_iter().filter(MatrixModel::tube).collect();
    for m in &models {
        let r = m.r();
        let f = m.family();
        let k1 = curvature_check(m, &[qi(1)]).map_err(|e| e.to_string())?;
        ensure(k1 == qi(-1), || format!("{f}: κ(x_γ) = {k1}"))?;
        let kr = curvature_check(m, &vec![qi(1); r]).map_err(|e| e.to_string())?;
        ensure(kr == Q::new((-1).into(), (r as i64).into()), || format!("{f}: κ(Σx_γ) = {kr}"))?;
    }
    Ok(format!("{} tube models", models.len()))
}

fn main() -> ExitCode {
    let checks: [Criterion; 10] = [
        (1, "Table 2 reproduction", criterion_1),
        (2, "Table 3 reproduction", criterion_2),
        (3, "N triple identity and <γ,γ> = 1/N", criterion_3),
        (4, "cascade vs brute-force strongly orthogonal sets", criterion_4),
        (5, "Jordan determinant and rank properties", criterion_5),
        (6, "Cayley structure", criterion_6),
        (7, "moment identity", criterion_7),
        (8, "antidominance table", criterion_8),
        (9, "Milnor-Wood suite", criterion_9),
        (10, "curvature", criterion_10),
    ];
    let mut unexpected = Vec::new();
    for (id, name, run) in checks {
        let start = Instant::now();
        let result = run();
        let t = start.elapsed();
        let known = KNOWN_FAILURES.contains(&id);
        match &result {
            Ok(detail) => println!("PASS [{id:>2}] {name} (tol=0, {t:.2?}): {detail}"),
            Err(why) => println!("FAIL [{id:>2}] {name} (tol=0, {t:.2?}): {why}{}", if known { " [known]" } else { "" }),
        }
        if result.is_ok() == known {
            unexpected.push(id);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all outcomes as expected (known failures: {KNOWN_FAILURES:?})");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
