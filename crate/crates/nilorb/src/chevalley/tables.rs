//! Rational class tables for G2 (p = 3) and F4 (p = 2), shipped as JSON.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::qpoly::QPoly;
use super::roots::{Group, RootSystem};
use crate::error::{Error, Result};

/// The bundled table resource.
pub const TABLES_JSON: &str = include_str!("tables.json");

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableFile {
    pub version: u32,
    pub groups: Vec<GroupData>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupData {
    pub group: Group,
    pub characteristic: u32,
    /// Listed structure constants `N_{a,b}`, by root name.
    pub constants: Vec<(String, String, i64)>,
    pub rows: Vec<RowData>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RowData {
    pub name: String,
    pub orbit: String,
    /// `(coefficient, root)` pairs of the representative `Σ a_γ e'_γ`.
    pub rep: Vec<(Coef, String)>,
    pub centralizer: String,
}

/// Coefficients appearing in the representatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Coef {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "-1")]
    MinusOne,
    #[serde(rename = "eta")]
    Eta,
    #[serde(rename = "-zeta")]
    MinusZeta,
    #[serde(rename = "varpi")]
    Varpi,
    #[serde(rename = "-varpi")]
    MinusVarpi,
}

impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coef::One => "1",
            Coef::MinusOne => "-1",
            Coef::Eta => "eta",
            Coef::MinusZeta => "-zeta",
            Coef::Varpi => "varpi",
            Coef::MinusVarpi => "-varpi",
        })
    }
}

/// A parsed table row.
#[derive(Clone, Debug)]
pub struct RationalClassRow {
    pub name: String,
    pub orbit: String,
    /// `(coefficient, root index)`, roots positive.
    pub rep: Vec<(Coef, usize)>,
    pub centralizer: QPoly,
    /// `|Z|` as printed in the table, factored.
    pub centralizer_text: String,
}

pub fn table_file() -> Result<TableFile> {
    serde_json::from_str(TABLES_JSON).map_err(|e| Error::Internal(format!("bundled tables are malformed: {e}")))
}

pub fn group_data(group: Group) -> Result<GroupData> {
    table_file()?
        .groups
        .into_iter()
        .find(|g| g.group == group)
        .ok_or_else(|| Error::Internal(format!("no table for {group}")))
}

/// The rows of the table, with roots resolved and centralizer orders parsed.
pub fn table(group: Group) -> Result<Vec<RationalClassRow>> {
    let rs = RootSystem::new(group);
    let data = group_data(group)?;
    if data.characteristic != group.characteristic() {
        return Err(Error::Internal(format!("table for {group} has the wrong characteristic")));
    }
    data.rows
        .into_iter()
        .map(|r| {
            let rep = r
                .rep
                .iter()
                .map(|(c, root)| {
                    let i = rs.parse(root)?;
                    if !rs.is_positive(i) {
                        return Err(Error::Internal(format!("row {} uses the negative root {root}", r.name)));
                    }
                    Ok((*c, i))
                })
                .collect::<Result<_>>()?;
            Ok(RationalClassRow {
                name: r.name,
                orbit: r.orbit,
                rep,
                centralizer: QPoly::parse(&r.centralizer)?,
                centralizer_text: r.centralizer,
            })
        })
        .collect()
}

pub fn row(group: Group, name: &str) -> Result<RationalClassRow> {
    table(group)?
        .into_iter()
        .find(|r| r.name == name || r.name.strip_prefix("xi_") == Some(name))
        .ok_or_else(|| Error::Domain(format!("row {name} of {group}")))
}

/// Number of positive roots.
pub fn n_pos(group: Group) -> usize {
    RootSystem::new(group).n_pos
}

#[derive(Clone, Debug, Serialize)]
pub struct MassReport {
    pub group: Group,
    pub rows: usize,
    pub group_order: String,
    pub sum: String,
    pub expected: String,
    pub ok: bool,
    pub failures: Vec<String>,
}

/// `Σ |G|/|Z(ξ)|` over the given rows, `|G|` taken from the zero-orbit row.
pub fn mass_sum(rows: &[RationalClassRow]) -> Result<(QPoly, QPoly, Vec<String>)> {
    let zero = rows
        .iter()
        .find(|r| r.rep.is_empty())
        .ok_or_else(|| Error::Domain("table has no zero-orbit row".into()))?;
    let g = zero.centralizer.clone();
    let mut sum = QPoly::zero();
    let mut failures = Vec::new();
    for r in rows {
        match g.div_exact(&r.centralizer) {
            Ok(size) => sum = &sum + &size,
            Err(_) => failures.push(format!("{}: |Z| = {} does not divide |G|", r.name, r.centralizer)),
        }
    }
    Ok((g, sum, failures))
}

pub fn mass_check(group: Group) -> Result<MassReport> {
    let rows = table(group)?;
    let (g, sum, failures) = mass_sum(&rows)?;
    let expected = QPoly::monomial(1, 2 * n_pos(group));
    Ok(MassReport {
        group,
        rows: rows.len(),
        group_order: g.to_string(),
        ok: failures.is_empty() && sum == expected,
        sum: sum.to_string(),
        expected: expected.to_string(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts() {
        assert_eq!(table(Group::G2).unwrap().len(), 7);
        assert_eq!(table(Group::F4).unwrap().len(), 26);
    }

    #[test]
    fn masses() {
        for g in [Group::G2, Group::F4] {
            let r = mass_check(g).unwrap();
            assert!(r.ok, "{r:?}");
        }
        assert_eq!(mass_check(Group::G2).unwrap().sum, "q^12");
        assert_eq!(mass_check(Group::F4).unwrap().sum, "q^48");
    }

    #[test]
    fn singleton_zero_table() {
        let rows: Vec<_> = table(Group::G2).unwrap().into_iter().filter(|r| r.rep.is_empty()).collect();
        let (_, sum, _) = mass_sum(&rows).unwrap();
        assert_eq!(sum, QPoly::constant(1));
    }

    #[test]
    fn g2a1_reciprocals() {
        let rows = table(Group::G2).unwrap();
        let q4 = QPoly::monomial(1, 4);
        let mut total = QPoly::zero();
        for r in rows.iter().filter(|r| r.orbit == "G2(a1)") {
            total = &total + &q4.div_exact(&r.centralizer).unwrap();
        }
        assert_eq!(total, QPoly::constant(1));
    }
}
