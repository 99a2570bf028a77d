use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read;

use hermsym_core::bounds::{bound_general, maximality_regularity_note, rigidity_data, BoundQuery};
use hermsym_core::field::{fmt_q, parse_q, Q};
use hermsym_core::groupform::{group_form, GroupFormRecord, GroupLabel};
use hermsym_core::hermitian::{hermitian_structure, HermitianFamily, HermitianStructure};
use hermsym_core::lattice::hnf;
use hermsym_core::matrixreal::{
    cayley_element, cayley_iso, curvature_check, jordan_det, jordan_rank, moment_identity, normal_form,
    sl2_and_parabolic, JordanElement, JordanElementRecord, MatrixModel,
};
use hermsym_core::tables::{build_table, families_up_to};
use hermsym_core::{Error, Result};
use serde_json::{json, Map, Value};

use crate::{resolve_family, Cli, Command, FormName, Format, JordanOp};

pub struct Output {
    text: String,
    json: Value,
    csv: Option<String>,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output { text, json, csv: None }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&self.json).expect("serializable")),
            Format::Csv => self.csv.clone().unwrap_or_else(|| json_to_csv(&self.json)),
        }
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.replace(',', ";"),
        Value::Array(items) => items.iter().map(csv_cell).collect::<Vec<_>>().join(";"),
        other => other.to_string().replace(',', ";"),
    }
}

/// Two-column `key,value` listing of an object (or `index,value` for a list).
fn json_to_csv(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(m) => {
            out.push_str("key,value\n");
            for (k, v) in m {
                let _ = writeln!(out, "{k},{}", csv_cell(v));
            }
        }
        Value::Array(items) => {
            out.push_str("index,value\n");
            for (i, v) in items.iter().enumerate() {
                let _ = writeln!(out, "{},{}", i + 1, csv_cell(v));
            }
        }
        other => {
            let _ = writeln!(out, "{}", csv_cell(other));
        }
    }
    out
}

fn label(form: FormName) -> GroupLabel {
    match form {
        FormName::Matrix => GroupLabel::Matrix,
        FormName::Adjoint => GroupLabel::Adjoint,
        FormName::SimplyConnected => GroupLabel::SimplyConnected,
    }
}

fn rational(s: &str, flag: &str) -> Result<Q> {
    parse_q(s).ok_or_else(|| Error::InvalidParameters(format!("--{flag} expects num/den or an integer, got {s:?}")))
}

fn family_object(f: HermitianFamily) -> Map<String, Value> {
    match serde_json::to_value(f).expect("serializable") {
        Value::Object(m) => m,
        _ => unreachable!("families serialize as objects"),
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Info(a) => info(a.resolve()?),
        Command::Tables { which, max_rank, family, p, q, n } => {
            let fams = match family {
                Some(name) => vec![resolve_family(*name, *p, *q, *n)?],
                None => families_up_to(*max_rank),
            };
            let t = build_table(*which, &fams)?;
            Ok(Output { text: t.to_text(), json: t.to_json(), csv: Some(t.to_csv()) })
        }
        Command::Cascade(a) => cascade(a.resolve()?),
        Command::Restricted(a) => restricted(a.resolve()?),
        Command::Lattice { family, form } => lattice(family.resolve()?, *form),
        Command::Bound { family, form, genus, lambda, rk_plus, rk_minus, twist_degree, tau } => {
            let f = family.resolve()?;
            let hs = hermitian_structure(f)?;
            let gf = group_form(&hs, label(*form))?;
            let mut q = BoundQuery::new(
                *genus,
                rational(lambda, "lambda")?,
                rk_plus.unwrap_or(hs.r()),
                rk_minus.unwrap_or(hs.r()),
            );
            q.twist_degree = *twist_degree;
            let tau = tau.as_deref().map(|t| rational(t, "tau")).transpose()?;
            bound(&gf, &q, tau)
        }
        Command::Jordan { input, op } => jordan(input, *op),
        Command::Cayley(a) => cayley(a.resolve()?),
        Command::Fibration(a) => fibration(a.resolve()?),
    }
}

fn info(f: HermitianFamily) -> Result<Output> {
    let hs = hermitian_structure(f)?;
    let rs = hs.root_system();
    let zeta: Vec<String> = hs.zeta().iter().map(fmt_q).collect();
    let mut m = family_object(f);
    let fields = json!({
        "group": f.group_name(),
        "algebra": rs.label(),
        "lie_rank": rs.rank(),
        "node": hs.distinguished_node() + 1,
        "dim_m_plus": hs.dim_m_plus(),
        "dim_m": hs.dim_m(),
        "r": hs.r(),
        "a": hs.mult_a(),
        "b": hs.mult_b(),
        "tube": hs.tube(),
        "N": hs.dual_coxeter(),
        "gamma_norm": fmt_q(&hs.gamma_norm()),
        "dim_m_over_n": fmt_q(&hs.dim_m_over_n()),
        "zeta": zeta,
    });
    if let Value::Object(extra) = fields {
        m.extend(extra);
    }
    let text = format!(
        "{}: algebra {}, node {}, r={}, a={}, b={}, tube={}\n\
         dim m+={}, dim m={}, N={}, <γ,γ>={}, dim m/N={}\n",
        f.group_name(),
        rs.label(),
        hs.distinguished_node() + 1,
        hs.r(),
        hs.mult_a(),
        hs.mult_b(),
        hs.tube(),
        hs.dim_m_plus(),
        hs.dim_m(),
        hs.dual_coxeter(),
        hs.gamma_norm(),
        hs.dim_m_over_n(),
    );
    Ok(Output::new(text, Value::Object(m)))
}

fn cascade_coords(hs: &HermitianStructure) -> Vec<Vec<i64>> {
    let coords = hs.root_system().positive_coords();
    hs.cascade_indices().iter().map(|&k| coords[k].clone()).collect()
}

fn cascade(f: HermitianFamily) -> Result<Output> {
    let hs = hermitian_structure(f)?;
    let roots = cascade_coords(&hs);
    let mut text = String::new();
    for (i, c) in roots.iter().enumerate() {
        let parts: Vec<String> = c.iter().map(i64::to_string).collect();
        let _ = writeln!(text, "gamma_{} = ({})", i + 1, parts.join(", "));
    }
    Ok(Output::new(text, json!(roots)))
}

fn restricted(f: HermitianFamily) -> Result<Output> {
    let hs = hermitian_structure(f)?;
    let counts: BTreeMap<String, usize> = hs.class_counts().into_iter().map(|(c, n)| (c.to_string(), n)).collect();
    let mut text = format!("{}: r={}, a={}, b={}, tube={}\n", f.group_name(), hs.r(), hs.mult_a(), hs.mult_b(), hs.tube());
    for (c, n) in hs.class_counts() {
        let _ = writeln!(text, "{c}: {n}");
    }
    let mut m = family_object(f);
    m.insert("r".into(), json!(hs.r()));
    m.insert("a".into(), json!(hs.mult_a()));
    m.insert("b".into(), json!(hs.mult_b()));
    m.insert("tube".into(), json!(hs.tube()));
    m.insert("classes".into(), json!(counts));
    Ok(Output::new(text, Value::Object(m)))
}

fn lattice(f: HermitianFamily, form: FormName) -> Result<Output> {
    let hs = hermitian_structure(f)?;
    let gf = group_form(&hs, label(form))?;
    let rec = GroupFormRecord::from(&gf);
    let k = hnf(gf.cochar_lattice())?;
    let basis: Vec<Vec<String>> = k.basis().iter().map(|v| v.iter().map(fmt_q).collect()).collect();
    let mut text = format!("{} [{}]: o_J={}, ℓ={}, q_T={}\n", rec.group, rec.label, gf.o_j(), gf.ell(), gf.q_t());
    for v in k.basis() {
        let shown: Vec<String> = v.iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "  ({})", shown.join(", "));
    }
    let mut m = match serde_json::to_value(&rec).expect("serializable") {
        Value::Object(m) => m,
        _ => unreachable!(),
    };
    m.insert("basis".into(), json!(basis));
    Ok(Output::new(text, Value::Object(m)))
}

fn bound(gf: &hermsym_core::groupform::GroupForm, q: &BoundQuery, tau: Option<Q>) -> Result<Output> {
    let rep = bound_general(gf, q)?;
    let mut text = format!(
        "{}: g={}, λ={}, rk+={}, rk-={}, degree={}\n{} ≤ τ ≤ {}\n",
        gf.group_name(),
        rep.genus,
        rep.lambda,
        rep.rk_plus,
        rep.rk_minus,
        rep.degree,
        rep.lower,
        rep.upper
    );
    if rep.lower == -rep.upper.clone() {
        let _ = writeln!(text, "|τ| ≤ {}", rep.upper);
    }
    let _ = writeln!(
        text,
        "envelope={}, τ_max={}, o_J={}, q_T={}, Cayley eligible={}",
        rep.envelope,
        rep.tau_max,
        gf.o_j(),
        gf.q_t(),
        rep.cayley_eligible.unwrap_or(false)
    );
    let report = serde_json::to_value(&rep).expect("serializable");
    let json = match tau {
        None => report,
        Some(t) => {
            let v = maximality_regularity_note(&rep, &t)?;
            let _ = writeln!(
                text,
                "τ={}: within bound={}, maximal={}{}",
                v.tau,
                v.within_bound,
                v.is_maximal,
                match (&v.d, v.d_integral) {
                    (Some(d), Some(i)) => format!(", d={d} (integral={i})"),
                    _ => String::new(),
                }
            );
            if let (Some(rk), Some(side)) = (v.required_rank, &v.side) {
                let _ = writeln!(text, "maximal: {side} must have rank {rk} everywhere");
            }
            json!({ "report": report, "maximality": v })
        }
    };
    Ok(Output::new(text, json))
}

fn read_input(input: &str) -> Result<String> {
    let mut s = String::new();
    let res = if input == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(input).map(|c| s = c)
    };
    res.map_err(|e| Error::Parse(format!("{input}: {e}")))?;
    Ok(s)
}

fn jordan(input: &str, op: JordanOp) -> Result<Output> {
    let raw = read_input(input)?;
    let rec: JordanElementRecord = serde_json::from_str(&raw).map_err(|e| Error::Parse(e.to_string()))?;
    let (model, x) = JordanElement::from_record(&rec)?;
    let f = model.family();
    Ok(match op {
        JordanOp::Det => {
            let d = jordan_det(&model, &x)?;
            let json = json!({ "family": rec.family, "params": rec.params, "det": [fmt_q(&d.re), fmt_q(&d.im)] });
            Output::new(format!("det = {d}\n"), json)
        }
        JordanOp::Rank => {
            let r = jordan_rank(&model, &x)?;
            let json = json!({ "family": rec.family, "params": rec.params, "rank": r, "r": model.r() });
            Output::new(format!("rank = {r} (of {} in {f})\n", model.r()), json)
        }
        JordanOp::NormalForm => {
            let nf = normal_form(&model, &x)?;
            let coeffs: Vec<[String; 2]> = nf.coefficients.iter().map(|c| [fmt_q(&c.re), fmt_q(&c.im)]).collect();
            let shown: Vec<String> = nf.coefficients.iter().map(ToString::to_string).collect();
            let text = format!("rank = {}\nAd(h) x = Σ d_k e_(γ_k) with d = ({})\n", nf.rank, shown.join(", "));
            Output::new(text, json!({ "family": rec.family, "params": rec.params, "rank": nf.rank, "coefficients": coeffs }))
        }
        JordanOp::Parabolic => {
            let s = sl2_and_parabolic(&model, &x)?;
            let dim_h = model.hc_basis_matrices().len();
            let json = json!({
                "family": rec.family,
                "params": rec.params,
                "rank": s.rank,
                "zero": s.zero,
                "relations_hold": s.relations_hold,
                "kernel_dim": s.kernel_dim,
                "image_dim": s.image_dim,
                "dim_p": s.parabolic.len(),
                "dim_h": dim_h,
                "is_subalgebra": s.is_subalgebra,
                "matches_eigenspaces": s.matches_eigenspaces,
            });
            let text = format!(
                "rank = {}, sl2 relations hold = {}\ndim p_x = {} of dim h^C = {} (dim ker ad u = {}, dim ad u(m-) = {})\nsubalgebra = {}, matches ad h eigenspaces = {}\n",
                s.rank,
                s.relations_hold,
                s.parabolic.len(),
                dim_h,
                s.kernel_dim,
                s.image_dim,
                s.is_subalgebra,
                s.matches_eigenspaces
            );
            Output::new(text, json)
        }
        JordanOp::Echo => {
            let out = x.to_record();
            let text = format!("{f}: {} entries\n", out.entries.len());
            Output::new(text, serde_json::to_value(&out).expect("serializable"))
        }
    })
}

fn cayley(f: HermitianFamily) -> Result<Output> {
    let model = MatrixModel::new(f)?;
    let rep = cayley_element(&model)?;
    let tube = model.tube();
    let (iso, moment, curvature) = if tube {
        let iso = cayley_iso(&model)?;
        let k = curvature_check(&model, &[Q::from_integer(1.into())])?;
        (Some(iso.invertible && iso.square_invertible), Some(moment_identity(&model)), Some(k))
    } else {
        (None, None, None)
    };
    let dim_m_prime = rep.m_prime.as_ref().map(Vec::len);
    let dim_h_prime = rep.h_prime.as_ref().map(Vec::len);
    let mut m = family_object(f);
    let fields = json!({
        "group": f.group_name(),
        "tube": tube,
        "ad_c8_identity": rep.ad_c8_identity,
        "ad_c4_identity": rep.ad_c4_identity,
        "dim_m2": rep.dim_m2,
        "dim_h_prime": dim_h_prime,
        "dim_m_prime": dim_m_prime,
        "h_prime_is_stabilizer": rep.h_prime_is_stabilizer,
        "iso_invertible": iso,
        "moment_identity": moment,
        "curvature": curvature.as_ref().map(fmt_q),
    });
    if let Value::Object(extra) = fields {
        m.extend(extra);
    }
    let mut text = format!(
        "{}: Ad(c)^8 = Id: {}, Ad(c)^4 = Id: {}, dim m2 = {}\n",
        f.group_name(),
        rep.ad_c8_identity,
        rep.ad_c4_identity,
        rep.dim_m2
    );
    if let (Some(hp), Some(mp)) = (dim_h_prime, dim_m_prime) {
        let _ = writeln!(
            text,
            "dim h' = {hp}, dim m' = {mp}, h' = stabilizer of e_Γ: {}",
            rep.h_prime_is_stabilizer.unwrap_or(false)
        );
        let _ = writeln!(
            text,
            "ad(e_Γ) isomorphisms: {}, [e_Γ, τ(e_Γ)] = -2iJ: {}, κ(x_γ) = {}",
            iso.unwrap_or(false),
            moment.unwrap_or(false),
            curvature.map_or_else(|| "-".to_string(), |k| k.to_string())
        );
    }
    Ok(Output::new(text, Value::Object(m)))
}

fn fibration(f: HermitianFamily) -> Result<Output> {
    let hs = hermitian_structure(f)?;
    let rd = rigidity_data(f);
    let mut m = family_object(f);
    m.insert("group".into(), json!(f.group_name()));
    m.insert("tube".into(), json!(hs.tube()));
    let text = match &rd {
        Some(d) => {
            m.insert("group_t".into(), json!(d.group_t));
            m.insert("l_prime".into(), json!(d.l_prime.to_string()));
            format!("{}: G_T = {}, L' = {}\n", f.group_name(), d.group_t, d.l_prime)
        }
        None => {
            m.insert("group_t".into(), Value::Null);
            m.insert("l_prime".into(), Value::Null);
            format!("{}: tube type, no fibration\n", f.group_name())
        }
    };
    Ok(Output::new(text, Value::Object(m)))
}
