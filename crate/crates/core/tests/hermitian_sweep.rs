use hermsym_core::field::{qi, Q};
use hermsym_core::hermitian::{hermitian_structure, strongly_orthogonal, HermitianFamily, RootClass};
use hermsym_core::rootsys::dot;

fn families() -> Vec<HermitianFamily> {
    let mut v = Vec::new();
    for p in 1..=6 {
        for q in p..=6 {
            v.push(HermitianFamily::AIII { p, q });
        }
    }
    for n in 1..=8 {
        v.push(HermitianFamily::CI { n });
    }
    for n in 3..=8 {
        v.push(HermitianFamily::DIII { n });
    }
    for n in 3..=10 {
        v.push(HermitianFamily::BDI { n });
    }
    v.push(HermitianFamily::EIII);
    v.push(HermitianFamily::EVII);
    v
}

fn known_rank(f: HermitianFamily) -> usize {
    match f {
        HermitianFamily::AIII { p, q } => p.min(q),
        HermitianFamily::CI { n } => n,
        HermitianFamily::DIII { n } => n / 2,
        HermitianFamily::BDI { .. } | HermitianFamily::EIII => 2,
        HermitianFamily::EVII => 3,
    }
}

#[test]
fn rank_matches_classification() {
    for f in families() {
        let hs = hermitian_structure(f).unwrap();
        assert_eq!(hs.r(), known_rank(f), "{f}");
    }
}

#[test]
fn grading_and_strong_orthogonality() {
    for f in families() {
        let hs = hermitian_structure(f).unwrap();
        let rs = hs.root_system();
        for &k in hs.noncompact_pos() {
            assert_eq!(dot(&rs.positive_roots()[k], hs.zeta()), qi(1));
        }
        for &k in hs.compact_pos() {
            assert_eq!(dot(&rs.positive_roots()[k], hs.zeta()), qi(0));
        }
        let c = hs.cascade_indices();
        for i in 0..c.len() {
            for j in 0..c.len() {
                if i != j {
                    let (a, b) = (&rs.positive_coords()[c[i]], &rs.positive_coords()[c[j]]);
                    assert!(strongly_orthogonal(rs, a, b), "{f}");
                }
            }
        }
    }
}

#[test]
fn n_identities_and_killing() {
    for f in families() {
        let hs = hermitian_structure(f).unwrap();
        let n = hs.dual_coxeter() as usize;
        let r = hs.r();
        assert_eq!(n, hs.mult_a() * (r - 1) + hs.mult_b() + 2, "{f}");
        assert_eq!(n * r, hs.dim_m_plus() + hs.dim_m_t_plus(), "{f}");
        assert_eq!(hs.dim_m_plus(), hs.dim_m_t_plus() + r * hs.mult_b(), "{f}");
        let rs = hs.root_system();
        for g in hs.cascade() {
            assert_eq!(rs.killing_dual(&g, &g), Q::new(1.into(), (n as i64).into()), "{f}");
        }
    }
}

#[test]
fn subtubes_are_closed_tube_systems() {
    for f in families() {
        let hs = hermitian_structure(f).unwrap();
        let rs = hs.root_system();
        for rp in 1..=hs.r() {
            let st = hs.subtube_roots(rp).unwrap();
            assert!(st.is_closed(rs), "{f} r'={rp}");
            assert_eq!(st.dim_m_plus(), rp + rp * (rp - 1) * hs.mult_a() / 2);
            assert_eq!(st.killing_dual_coxeter(rs), qi(st.dual_coxeter() as i64), "{f} r'={rp}");
        }
    }
}

#[test]
fn classes_partition_and_compact_flag() {
    for f in families() {
        let hs = hermitian_structure(f).unwrap();
        let cls = &hs.classification().classes;
        assert_eq!(cls.len(), hs.root_system().num_positive());
        for &k in hs.compact_pos() {
            assert!(cls[k].is_compact());
        }
        for &k in hs.noncompact_pos() {
            assert!(!cls[k].is_compact());
        }
        let gammas = cls.iter().filter(|c| matches!(c, RootClass::Gamma(_))).count();
        assert_eq!(gammas, hs.r());
    }
}
