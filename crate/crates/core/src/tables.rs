//! The five reference tables, computed for parameter sweeps.
//!
//! | table | rows                       | columns                                    |
//! |-------|----------------------------|--------------------------------------------|
//! | 1     | all families               | `G, H, H^C, m^C, dim m+`                   |
//! | 2     | all families, matrix group | `G, H, N, dim m, ℓ, o_J, q_T`              |
//! | 3     | non-tube, adjoint group    | `G, H, N, dim m, ℓ, o_J, q_T`              |
//! | 4     | tube families              | `G, H, H*, H', m', m'^C, dim m'`           |
//! | 5     | non-tube families          | `G, H, G_T, L'`                            |
//!
//! Every number is computed; only the group-theoretic names are text.

use std::fmt::Write as _;

use serde_json::{Map, Value};

use crate::bounds::rigidity_data;
use crate::error::{Error, Result};
use crate::field::{fmt_q, Q};
use crate::groupform::{group_form, GroupLabel};
use crate::hermitian::{hermitian_structure, HermitianFamily, HermitianStructure};

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    Rat(Q),
    Text(String),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Rat(x) => x.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }
    fn csv(&self) -> String {
        match self {
            Cell::Rat(x) => fmt_q(x),
            other => other.text(),
        }
    }
    fn json(&self) -> Value {
        match self {
            Cell::Int(n) => Value::from(*n),
            Cell::Rat(x) => Value::from(fmt_q(x)),
            Cell::Text(s) => Value::from(s.clone()),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Column {
    /// Header used in text and CSV output.
    pub header: &'static str,
    /// Key used in JSON output.
    pub key: &'static str,
    /// Shown in the one-line text form after the group name.
    pub in_text: bool,
}

const fn col(header: &'static str, key: &'static str, in_text: bool) -> Column {
    Column { header, key, in_text }
}

#[derive(Clone, Debug)]
pub struct Table {
    pub id: u8,
    pub title: &'static str,
    pub columns: Vec<Column>,
    pub rows: Vec<(HermitianFamily, Vec<Cell>)>,
}

const GROUP_COLS: [Column; 7] = [
    col("G", "group", false),
    col("H", "H", false),
    col("N", "N", true),
    col("dim m", "dim_m", true),
    col("ℓ", "ell", true),
    col("o_J", "o_J", true),
    col("q_T", "q_T", true),
];

impl Table {
    fn new(id: u8) -> Result<Table> {
        let (title, columns) = match id {
            1 => (
                "Irreducible Hermitian symmetric spaces G/H",
                vec![
                    col("G", "group", false),
                    col("H", "H", true),
                    col("H^C", "H_C", true),
                    col("m^C", "m_C", true),
                    col("dim m+", "dim_m_plus", true),
                ],
            ),
            2 => ("Toledo character data for the classical and exceptional groups", GROUP_COLS.to_vec()),
            3 => ("Toledo character data for adjoint groups of non-tube type", GROUP_COLS.to_vec()),
            4 => (
                "Irreducible Hermitian symmetric spaces G/H of tube type",
                vec![
                    col("G", "group", false),
                    col("H", "H", true),
                    col("H*", "H_star", true),
                    col("H'", "H_prime", true),
                    col("m'", "m_prime", true),
                    col("m'^C", "m_prime_C", true),
                    col("dim m'", "dim_m_prime", true),
                ],
            ),
            5 => (
                "Irreducible Hermitian symmetric spaces G/H of non-tube type",
                vec![
                    col("G", "group", false),
                    col("H", "H", true),
                    col("G_T", "G_T", true),
                    col("L'", "L_prime", true),
                ],
            ),
            other => return Err(Error::InvalidParameters(format!("no table {other}; expected 1-5"))),
        };
        Ok(Table { id, title, columns, rows: Vec::new() })
    }

    /// One line per row: `G: col=value, …`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (_, cells) in &self.rows {
            let parts: Vec<String> = self
                .columns
                .iter()
                .zip(cells)
                .filter(|(c, _)| c.in_text)
                .map(|(c, v)| format!("{}={}", c.header, v.text()))
                .collect();
            let _ = writeln!(out, "{}: {}", cells[0].text(), parts.join(", "));
        }
        out
    }

    /// Unquoted CSV with a header line; rationals as `num/den`. Commas inside
    /// names such as `SU(2,3)` are written as `;`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let headers: Vec<&str> = self.columns.iter().map(|c| c.header).collect();
        let _ = writeln!(out, "{}", headers.join(","));
        for (_, cells) in &self.rows {
            let vals: Vec<String> = cells.iter().map(|c| c.csv().replace(',', ";")).collect();
            let _ = writeln!(out, "{}", vals.join(","));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|(f, cells)| {
                let mut m = Map::new();
                m.insert("family".into(), Value::from(f.to_string()));
                for (c, v) in self.columns.iter().zip(cells) {
                    m.insert(c.key.into(), v.json());
                }
                Value::Object(m)
            })
            .collect();
        serde_json::json!({ "table": self.id, "title": self.title, "rows": rows })
    }
}

/// Families whose complex Lie algebra has rank at most `max_rank`, in a fixed
/// order: `AIII` by `(p, q)`, then `CI`, `DIII`, `BDI` by `n`, then `EIII`, `EVII`.
pub fn families_up_to(max_rank: usize) -> Vec<HermitianFamily> {
    let mut out = Vec::new();
    for p in 1..=max_rank {
        for q in p..=max_rank + 1 - p {
            out.push(HermitianFamily::AIII { p, q });
        }
    }
    out.extend((1..=max_rank).map(|n| HermitianFamily::CI { n }));
    out.extend((3..=max_rank).map(|n| HermitianFamily::DIII { n }));
    out.extend((3..=2 * max_rank).map(|n| HermitianFamily::BDI { n }).filter(|f| f.lie_rank() <= max_rank));
    if max_rank >= 6 {
        out.push(HermitianFamily::EIII);
    }
    if max_rank >= 7 {
        out.push(HermitianFamily::EVII);
    }
    out.retain(|f| f.lie_rank() <= max_rank);
    out
}

fn compact_name(f: HermitianFamily) -> String {
    match f {
        HermitianFamily::AIII { p, q } => format!("S(U({p})×U({q}))"),
        HermitianFamily::CI { n } | HermitianFamily::DIII { n } => format!("U({n})"),
        HermitianFamily::BDI { n } => format!("SO(2)×SO({n})"),
        HermitianFamily::EIII => "Spin(10)×_Z4 U(1)".into(),
        HermitianFamily::EVII => "E6(-78)×_Z3 U(1)".into(),
    }
}

fn complexified_name(f: HermitianFamily) -> (String, String) {
    match f {
        HermitianFamily::AIII { p, q } => {
            (format!("S(GL({p},C)×GL({q},C))"), format!("Hom(C^{q},C^{p})+Hom(C^{p},C^{q})"))
        }
        HermitianFamily::CI { n } => (format!("GL({n},C)"), format!("S²(C^{n})+S²(C^{n}*)")),
        HermitianFamily::DIII { n } => (format!("GL({n},C)"), format!("Λ²(C^{n})+Λ²(C^{n}*)")),
        HermitianFamily::BDI { n } => (format!("SO(2,C)×SO({n},C)"), format!("Hom(C^{n},C)+Hom(C,C^{n})")),
        HermitianFamily::EIII => ("Spin(10,C)×_Z4 C*".into(), "Δ+⊗η^3+Δ-⊗η^-3".into()),
        HermitianFamily::EVII => ("E6×_Z3 C*".into(), "M⊗η^2+M*⊗η^-2".into()),
    }
}

fn group_cells(hs: &HermitianStructure, label: GroupLabel) -> Result<Vec<Cell>> {
    let gf = group_form(hs, label)?;
    let f = hs.family();
    let name = match gf.label() {
        GroupLabel::Adjoint => f.adjoint_name(),
        _ => f.group_name(),
    };
    let compact = match (gf.label(), f) {
        (GroupLabel::Adjoint, HermitianFamily::AIII { .. }) => format!("P{}", compact_name(f)),
        _ => compact_name(f),
    };
    let int = |x: &num_bigint::BigInt| Cell::Int(i64::try_from(x).expect("small integer"));
    Ok(vec![
        Cell::Text(name),
        Cell::Text(compact),
        Cell::Int(hs.dual_coxeter()),
        Cell::Int(hs.dim_m() as i64),
        int(gf.ell()),
        int(gf.o_j()),
        Cell::Rat(gf.q_t().clone()),
    ])
}

fn tube_names(f: HermitianFamily) -> Option<[String; 4]> {
    Some(match f {
        HermitianFamily::AIII { p, q } if p == q => [
            format!("{{A∈GL({p},C) : det(A)²∈R+}}"),
            format!("{{A∈U({p}) : det(A)²=1}}"),
            format!("Herm({p},C)"),
            format!("Mat({p},C)"),
        ],
        HermitianFamily::CI { n } => {
            [format!("GL({n},R)"), format!("O({n})"), format!("Sym({n},R)"), format!("Sym({n},C)")]
        }
        HermitianFamily::DIII { n } if n % 2 == 0 => {
            [format!("U*({n})"), format!("Sp({})", n / 2), format!("Herm({},H)", n / 2), format!("Skew({n},C)")]
        }
        HermitianFamily::BDI { n } => [
            format!("SO0(1,1)×SO(1,{})", n - 1),
            format!("O({})", n - 1),
            format!("R×R^{}", n - 1),
            format!("C×C^{}", n - 1),
        ],
        HermitianFamily::EVII => {
            ["E6(-26)⋉R*".into(), "F4×Z2".into(), "Herm(3,O)".into(), "Herm(3,O)⊗C".into()]
        }
        _ => return None,
    })
}

/// The row of table `id` for a family, or `None` if the family has no row there.
pub fn table_row(id: u8, family: HermitianFamily) -> Result<Option<Vec<Cell>>> {
    let hs = hermitian_structure(family)?;
    let g = Cell::Text(family.group_name());
    let h = Cell::Text(compact_name(family));
    Ok(match id {
        1 => {
            let (hc, mc) = complexified_name(family);
            Some(vec![g, h, Cell::Text(hc), Cell::Text(mc), Cell::Int(hs.dim_m_plus() as i64)])
        }
        2 => Some(group_cells(&hs, GroupLabel::Matrix)?),
        3 if !hs.tube() => Some(group_cells(&hs, GroupLabel::Adjoint)?),
        4 => tube_names(family).map(|[hstar, hprime, mp, mpc]| {
            vec![
                g,
                h,
                Cell::Text(hstar),
                Cell::Text(hprime),
                Cell::Text(mp),
                Cell::Text(mpc),
                Cell::Int(hs.dim_m_t_plus() as i64),
            ]
        }),
        5 => rigidity_data(family).map(|rd| vec![g, h, Cell::Text(rd.group_t), Cell::Text(rd.l_prime.to_string())]),
        other if !(1..=5).contains(&other) => return Err(Error::InvalidParameters(format!("no table {other}; expected 1-5"))),
        _ => None,
    })
}

/// Table `id` over the given families, skipping families without a row.
pub fn build_table(id: u8, families: &[HermitianFamily]) -> Result<Table> {
    let mut t = Table::new(id)?;
    for &f in families {
        if let Some(cells) = table_row(id, f)? {
            t.rows.push((f, cells));
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sp8_text_row() {
        let t = build_table(2, &[HermitianFamily::CI { n: 4 }]).unwrap();
        assert_eq!(t.to_text(), "Sp(8,R): N=5, dim m=20, ℓ=4, o_J=2, q_T=1/2\n");
    }

    #[test]
    fn sweep_order_and_ranks() {
        let fs = families_up_to(3);
        assert_eq!(fs[0], HermitianFamily::AIII { p: 1, q: 1 });
        assert!(fs.iter().all(|f| f.lie_rank() <= 3));
        assert!(fs.contains(&HermitianFamily::BDI { n: 5 }));
        assert!(!fs.contains(&HermitianFamily::BDI { n: 6 }));
        assert!(families_up_to(7).contains(&HermitianFamily::EVII));
    }

    #[test]
    fn partial_tables() {
        let fs = families_up_to(4);
        let t4 = build_table(4, &fs).unwrap();
        assert!(t4.rows.iter().all(|(f, _)| hermitian_structure(*f).unwrap().tube()));
        let t5 = build_table(5, &fs).unwrap();
        assert_eq!(t5.rows.len(), build_table(3, &fs).unwrap().rows.len());
        assert!(build_table(6, &fs).is_err());
    }

    #[test]
    fn csv_and_json() {
        let t = build_table(3, &[HermitianFamily::EIII]).unwrap();
        assert_eq!(t.to_csv().lines().nth(1).unwrap(), "E6(-14)/Z3,Spin(10)×_Z4 U(1),12,32,4,1,3/2");
        assert_eq!(t.to_json()["rows"][0]["q_T"], "3/2");
    }
}
