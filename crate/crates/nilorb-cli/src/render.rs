//! Output formats. Everything is exact; nothing goes through floats.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

use nilorb::chevalley::{Census, Group, MassReport, RationalClassRow, RootSystem};
use nilorb::pieces::{PieceReport, UpsilonSeq};
use nilorb::{f2, Bipartition, Error, LieType, OrbitSymbol, Result, UnipotentClass};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Csv,
    Text,
}

fn json<T: Serialize + ?Sized>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Error::Internal(e.to_string()))
}

fn csv_table<R: AsRef<[u8]>>(header: &[&str], rows: impl IntoIterator<Item = Vec<R>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Internal(e.to_string());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(&r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

fn unsupported(what: &str) -> Error {
    Error::Domain(format!("{what} has no such output format"))
}

fn chi_list(s: &OrbitSymbol) -> String {
    let vals: Vec<String> = s.chi.iter().rev().map(|(_, c)| c.to_string()).collect();
    format!("[{}]", vals.join(","))
}

fn label(s: &OrbitSymbol) -> String {
    s.label.map(|l| format!("{l:?}")).unwrap_or_default()
}

pub fn enumerate(orbits: &[OrbitSymbol], f: Format) -> Result<String> {
    match f {
        Format::Json => json(orbits),
        Format::Csv => csv_table(
            &["type", "n", "m", "lambda", "chi", "label", "centralizer_dim"],
            orbits.iter().map(|s| {
                vec![
                    s.ty.letter().to_string(),
                    s.n.to_string(),
                    s.m.to_string(),
                    s.lambda.to_string(),
                    chi_list(s),
                    label(s),
                    s.centralizer_dim().map(|d| d.to_string()).unwrap_or_default(),
                ]
            }),
        ),
        Format::Text => Ok(orbits.iter().map(|s| format!("{s}\n")).collect()),
        Format::Dot => Err(unsupported("enumerate")),
    }
}

#[derive(Serialize)]
pub struct SpringerRow {
    pub symbol: OrbitSymbol,
    pub gamma: Bipartition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi: Option<UnipotentClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upsilon: Option<UpsilonSeq>,
}

pub fn springer(rows: &[SpringerRow], f: Format) -> Result<String> {
    let opt = |x: Option<String>| x.unwrap_or_default();
    match f {
        Format::Json => json(rows),
        Format::Csv => csv_table(
            &["symbol", "gamma", "psi", "upsilon"],
            rows.iter().map(|r| {
                vec![
                    r.symbol.to_string(),
                    r.gamma.to_string(),
                    opt(r.psi.as_ref().map(ToString::to_string)),
                    opt(r.upsilon.as_ref().map(ToString::to_string)),
                ]
            }),
        ),
        Format::Text => {
            let mut out = String::new();
            for r in rows {
                write!(out, "{}  γ*={}", r.symbol, r.gamma).unwrap();
                if let (Some(p), Some(u)) = (&r.psi, &r.upsilon) {
                    write!(out, "  Ψ*={p}  Υ={u}").unwrap();
                }
                out.push('\n');
            }
            Ok(out)
        }
        Format::Dot => Err(unsupported("springer")),
    }
}

/// Nodes sorted by decreasing centralizer dimension, then serialized symbol.
/// Type D has no centralizer formula and falls back to the serialized symbol.
fn node_order(orbits: &[OrbitSymbol]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..orbits.len()).collect();
    idx.sort_by_cached_key(|&i| {
        let c = orbits[i].centralizer_dim().unwrap_or(0);
        (std::cmp::Reverse(c), orbits[i].to_json())
    });
    idx
}

pub fn hasse(orbits: &[OrbitSymbol], edges: &[(usize, usize)], f: Format) -> Result<String> {
    let order = node_order(orbits);
    let mut pos = vec![0; orbits.len()];
    for (k, &i) in order.iter().enumerate() {
        pos[i] = k;
    }
    let mut edges: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (pos[a], pos[b])).collect();
    edges.sort_unstable();
    let nodes: Vec<&OrbitSymbol> = order.iter().map(|&i| &orbits[i]).collect();
    match f {
        Format::Dot => {
            let mut out = String::from("digraph closure {\n  rankdir=BT;\n  node [shape=box];\n");
            for (k, s) in nodes.iter().enumerate() {
                let tooltip = s.to_json().replace('"', "\\\"");
                writeln!(out, "  n{k} [label=\"{s}\", tooltip=\"{tooltip}\"];").unwrap();
            }
            for (a, b) in &edges {
                writeln!(out, "  n{a} -> n{b};").unwrap();
            }
            out.push_str("}\n");
            Ok(out)
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Graph<'a> {
                nodes: Vec<&'a OrbitSymbol>,
                /// `(lower, upper)` node indices.
                covers: Vec<(usize, usize)>,
            }
            json(&Graph { nodes, covers: edges })
        }
        Format::Csv => csv_table(
            &["lower", "upper"],
            edges.iter().map(|&(a, b)| vec![nodes[a].to_string(), nodes[b].to_string()]),
        ),
        Format::Text => Ok(edges.iter().map(|&(a, b)| format!("{} < {}\n", nodes[a], nodes[b])).collect()),
    }
}

pub fn pieces(r: &PieceReport, f: Format) -> Result<String> {
    match f {
        Format::Json => json(r),
        Format::Csv => csv_table(
            &["piece", "upsilon", "member"],
            r.pieces.iter().flat_map(|p| {
                p.members.iter().map(move |m| vec![p.label.to_string(), p.upsilon.to_string(), m.to_string()])
            }),
        ),
        Format::Text => {
            let mut out = String::new();
            for p in &r.pieces {
                writeln!(out, "{}  Υ={}", p.label, p.upsilon).unwrap();
                for m in &p.members {
                    writeln!(out, "  {m}").unwrap();
                }
            }
            let verdict = if r.agree { "agree" } else { "DISAGREE" };
            writeln!(out, "{} pieces; descriptions {verdict}", r.pieces.len()).unwrap();
            for d in &r.discrepancies {
                writeln!(out, "  {d}").unwrap();
            }
            Ok(out)
        }
        Format::Dot => Err(unsupported("pieces")),
    }
}

pub fn oracle(ty: LieType, n: u32, counts: &BTreeMap<OrbitSymbol, u64>, f: Format) -> Result<String> {
    let total: u64 = counts.values().sum();
    match f {
        Format::Json => {
            #[derive(Serialize)]
            struct Entry<'a> {
                symbol: &'a OrbitSymbol,
                forms: u64,
            }
            #[derive(Serialize)]
            struct Out<'a> {
                #[serde(rename = "type")]
                ty: LieType,
                n: u32,
                forms_scanned: u64,
                nilpotent: u64,
                orbits: Vec<Entry<'a>>,
            }
            json(&Out {
                ty,
                n,
                forms_scanned: f2::form_count(ty, n),
                nilpotent: total,
                orbits: counts.iter().map(|(symbol, &forms)| Entry { symbol, forms }).collect(),
            })
        }
        Format::Csv => csv_table(
            &["symbol", "forms"],
            counts.iter().map(|(s, c)| vec![s.to_string(), c.to_string()]),
        ),
        Format::Text => {
            let mut out = String::new();
            for (s, c) in counts {
                writeln!(out, "{s}  {c}").unwrap();
            }
            writeln!(out, "{} orbits, {total} nilpotent forms of {}", counts.len(), f2::form_count(ty, n)).unwrap();
            Ok(out)
        }
        Format::Dot => Err(unsupported("oracle")),
    }
}

/// `form_bits,symbol` for every nilpotent form, in index order.
pub fn dump_forms(path: &Path, ty: LieType, n: u32) -> Result<()> {
    let bits = match ty {
        LieType::C => f2::forms::quadratic_bits(2 * n as usize),
        LieType::B => f2::forms::alternating_bits(2 * n as usize + 1),
        LieType::D => f2::forms::alternating_bits(2 * n as usize),
    } as usize;
    let io = |e: csv::Error| Error::Domain(format!("cannot write {}: {e}", path.display()));
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    w.write_record(["form_bits", "symbol"]).map_err(io)?;
    for idx in 0..f2::form_count(ty, n) {
        if let Some(s) = f2::form_invariant(ty, n, idx)? {
            w.write_record([format!("{idx:0bits$b}"), s.to_json()]).map_err(io)?;
        }
    }
    w.flush().map_err(|e| Error::Domain(e.to_string()))
}

pub fn mass(r: &MassReport, f: Format) -> Result<String> {
    match f {
        Format::Json => json(r),
        Format::Csv => csv_table(
            &["group", "rows", "sum", "expected", "ok"],
            [vec![r.group.to_string(), r.rows.to_string(), r.sum.clone(), r.expected.clone(), r.ok.to_string()]],
        ),
        Format::Text => {
            let mut out = if r.ok {
                format!("mass = {} OK\n", r.sum)
            } else {
                format!("mass = {} FAIL (expected {})\n", r.sum, r.expected)
            };
            for e in &r.failures {
                writeln!(out, "  {e}").unwrap();
            }
            Ok(out)
        }
        Format::Dot => Err(unsupported("mass")),
    }
}

pub fn census(c: &Census, f: Format) -> Result<String> {
    let h = c.histogram();
    match f {
        Format::Json => json(&h),
        Format::Csv => csv_table(&["orbit_size", "multiplicity"], h.iter().map(|(s, m)| vec![s.to_string(), m.to_string()])),
        Format::Text => {
            let mut out = String::new();
            for o in &c.orbits {
                writeln!(out, "{:>8}  seed {:?}", o.size, o.seed).unwrap();
            }
            writeln!(out, "{} orbits, {} states over F_{}", c.orbits.len(), c.total, c.q).unwrap();
            Ok(out)
        }
        Format::Dot => Err(unsupported("census")),
    }
}

#[derive(Serialize)]
pub struct BfsRow {
    pub row: String,
    pub q: u32,
    pub size: u64,
    pub expected: Option<u64>,
}

pub fn bfs(rows: &[BfsRow], f: Format) -> Result<String> {
    let exp = |r: &BfsRow| r.expected.map(|e| e.to_string()).unwrap_or_default();
    match f {
        Format::Json => json(rows),
        Format::Csv => csv_table(
            &["row", "q", "size", "expected"],
            rows.iter().map(|r| vec![r.row.clone(), r.q.to_string(), r.size.to_string(), exp(r)]),
        ),
        Format::Text => Ok(rows
            .iter()
            .map(|r| {
                let mark = if Some(r.size) == r.expected { "OK" } else { "MISMATCH" };
                format!("{}  q={}  size {}  expected {}  {mark}\n", r.row, r.q, r.size, exp(r))
            })
            .collect()),
        Format::Dot => Err(unsupported("bfs")),
    }
}

pub fn table(group: Group, rows: &[RationalClassRow], f: Format) -> Result<String> {
    let rs = RootSystem::new(group);
    let rep = |r: &RationalClassRow| -> String {
        if r.rep.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (c, i)) in r.rep.iter().enumerate() {
            let c = c.to_string();
            let (neg, mag) = match c.strip_prefix('-') {
                Some(m) => (true, m),
                None => (false, c.as_str()),
            };
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if mag != "1" {
                write!(out, "{mag}*").unwrap();
            }
            write!(out, "e'_{}", rs.name(*i)).unwrap();
        }
        out
    };
    match f {
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                name: &'a str,
                orbit: &'a str,
                rep: String,
                centralizer: String,
            }
            let out: Vec<Row> = rows
                .iter()
                .map(|r| Row { name: &r.name, orbit: &r.orbit, rep: rep(r), centralizer: r.centralizer_text.clone() })
                .collect();
            json(&out)
        }
        Format::Csv => csv_table(
            &["name", "orbit", "rep", "centralizer"],
            rows.iter().map(|r| vec![r.name.clone(), r.orbit.clone(), rep(r), r.centralizer_text.clone()]),
        ),
        Format::Text => Ok(rows
            .iter()
            .map(|r| format!("{:<8} {:<8} |Z| = {:<40} {}\n", r.name, r.orbit, r.centralizer_text, rep(r)))
            .collect()),
        Format::Dot => Err(unsupported("table")),
    }
}
