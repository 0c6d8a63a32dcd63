//! `nilorb`: batch front end for the orbit catalogue, Springer maps, closure
//! diagrams, nilpotent pieces, the F2 oracle, and the G2/F4 checks.
//!
//! Exit status: 0 on success, 1 when a verification fails (a JSON failure
//! report goes to stdout), 2 on usage errors and out-of-budget requests.

mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use nilorb::checks::{self, Check};
use nilorb::chevalley::{self, ChevalleyAlgebra, CoadjointAction, Gf, Group};
use nilorb::{f2, pieces, springer, Error, LieType, OrbitSymbol};

use render::Format;

#[derive(Parser)]
#[command(name = "nilorb", version, about = "Nilpotent coadjoint orbits in bad characteristic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the orbit symbols of a classical algebra.
    Enumerate(Classical),
    /// Orbit symbols with their bipartitions, Ψ* classes and Υ sequences.
    Springer(Classical),
    /// Covering relations of the closure order.
    Hasse(Classical),
    /// Nilpotent pieces (types B and C).
    Pieces(Classical),
    /// Brute-force classification of nilpotent forms over F2.
    Oracle(OracleArgs),
    /// Class tables, masses and orbit counts for G2 and F4.
    Exceptional(ExceptionalArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
    #[value(name = "D")]
    D,
}

impl From<TypeArg> for LieType {
    fn from(t: TypeArg) -> Self {
        match t {
            TypeArg::B => LieType::B,
            TypeArg::C => LieType::C,
            TypeArg::D => LieType::D,
        }
    }
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Run the relevant invariant suites; exit 1 on the first failing one.
    #[arg(long)]
    verify: bool,
    /// Report progress and check results on stderr.
    #[arg(long)]
    verbose: bool,
}

#[derive(Args)]
struct Classical {
    #[arg(long = "type", value_enum, ignore_case = true)]
    ty: TypeArg,
    #[arg(long)]
    n: u32,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    classical: Classical,
    /// Write one `form_bits,symbol` row per nilpotent form to this file.
    #[arg(long)]
    dump: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct ExceptionalArgs {
    #[arg(long)]
    group: Group,
    /// Field size; defaults to the characteristic of the table.
    #[arg(long)]
    q: Option<u32>,
    /// Check `Σ |G|/|Z| = q^{2N}` over the table.
    #[arg(long)]
    mass: bool,
    /// Orbit census of the nilpotent cone by BFS (G2, q = 3).
    #[arg(long)]
    census: bool,
    /// BFS the orbit of a table row, e.g. `--bfs 17` or `--bfs xi_16,1`.
    #[arg(long)]
    bfs: Vec<String>,
    /// Give up on a BFS after this many states.
    #[arg(long, default_value_t = 10_000_000)]
    cap: u64,
    #[command(flatten)]
    common: Common,
}

/// Largest rank each subcommand accepts.
fn rank_budget(cmd: &str, ty: LieType) -> u32 {
    match (cmd, ty) {
        ("oracle", _) => 3,
        ("hasse", _) => 8,
        ("pieces", _) => 10,
        _ => 12,
    }
}

enum Failure {
    Usage(String),
    Verify(Vec<Check>),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::Construction(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verify(failures)) => {
            #[derive(Serialize)]
            struct Report {
                status: &'static str,
                failures: Vec<Check>,
            }
            let report = Report { status: "verification-failed", failures };
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            println!("{}", serde_json::json!({ "status": "internal-error", "message": msg }));
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Enumerate(a) => classical("enumerate", a, |ty, n, f| render::enumerate(&OrbitSymbol::enumerate(ty, n), f)),
        Command::Springer(a) => classical("springer", a, springer_rows),
        Command::Hasse(a) => classical("hasse", a, |ty, n, f| {
            let orbits = OrbitSymbol::enumerate(ty, n);
            let edges = nilorb::orbits::hasse_indices(&orbits)?;
            render::hasse(&orbits, &edges, f)
        }),
        Command::Pieces(a) => {
            if matches!(a.ty, TypeArg::D) {
                return Err(Failure::Usage("pieces are defined for types B and C only".into()));
            }
            classical("pieces", a, |ty, n, f| render::pieces(&pieces::piece_report(ty, n)?, f))
        }
        Command::Oracle(a) => oracle(a),
        Command::Exceptional(a) => exceptional(a),
    }
}

fn check_rank(cmd: &str, ty: LieType, n: u32) -> Result<(), Failure> {
    let max = rank_budget(cmd, ty);
    if n > max {
        return Err(Failure::Usage(format!("{cmd} accepts n ≤ {max} for type {}", ty.letter())));
    }
    if cmd == "oracle" && n == 0 {
        return Err(Failure::Usage("oracle needs n ≥ 1".into()));
    }
    Ok(())
}

fn verify(checks: Vec<Check>, verbose: bool) -> Result<(), Failure> {
    for c in &checks {
        if verbose {
            eprintln!("{} {}: {}", if c.ok { "ok  " } else { "FAIL" }, c.name, c.detail);
        }
        if !c.ok {
            return Err(Failure::Verify(vec![c.clone()]));
        }
    }
    Ok(())
}

fn classical(
    cmd: &str,
    a: Classical,
    body: impl FnOnce(LieType, u32, Format) -> nilorb::Result<String>,
) -> Outcome {
    let ty = LieType::from(a.ty);
    check_rank(cmd, ty, a.n)?;
    if a.common.format == Format::Dot && cmd != "hasse" {
        return Err(Failure::Usage("dot output is only available for hasse".into()));
    }
    if a.common.verify {
        let suite = match cmd {
            "enumerate" | "hasse" => vec![checks::closure_sanity(ty, a.n)],
            "springer" if ty != LieType::D => vec![checks::springer_bijection(ty, a.n)],
            "pieces" => vec![checks::pieces_coincide(ty, a.n)],
            _ => vec![],
        };
        verify(suite, a.common.verbose)?;
    }
    Ok(body(ty, a.n, a.common.format)?)
}

fn springer_rows(ty: LieType, n: u32, f: Format) -> nilorb::Result<String> {
    let mut rows = Vec::new();
    for s in OrbitSymbol::enumerate(ty, n) {
        let gamma = springer::gamma_star(&s);
        let (psi, ups) = if ty == LieType::D {
            (None, None)
        } else {
            (Some(springer::psi_star(&s)?), Some(pieces::upsilon(&s)?))
        };
        rows.push(render::SpringerRow { symbol: s, gamma, psi, upsilon: ups });
    }
    render::springer(&rows, f)
}

fn oracle(a: OracleArgs) -> Outcome {
    let ty = LieType::from(a.classical.ty);
    let n = a.classical.n;
    let common = &a.classical.common;
    check_rank("oracle", ty, n)?;
    if common.format == Format::Dot {
        return Err(Failure::Usage("dot output is only available for hasse".into()));
    }
    if common.verbose {
        eprintln!("classifying {} forms", f2::form_count(ty, n));
    }
    let counts = f2::classify_all(ty, n)?;
    if let Some(path) = &a.dump {
        render::dump_forms(path, ty, n)?;
    }
    if common.verify {
        let mut suite = vec![checks::oracle_census(ty, n)];
        if ty != LieType::D {
            suite.push(checks::filtration_agrees(ty, n));
        }
        verify(suite, common.verbose)?;
    }
    Ok(render::oracle(ty, n, &counts, common.format)?)
}

fn exceptional(a: ExceptionalArgs) -> Outcome {
    let group = a.group;
    let p = group.characteristic();
    let q = a.q.unwrap_or(p);
    if Gf::new(q).map(|gf| gf.p) != Ok(p) {
        return Err(Failure::Usage(format!("the {group} tables are for powers of {p}, not q = {q}")));
    }
    let f = a.common.format;
    if f == Format::Dot {
        return Err(Failure::Usage("dot output is only available for hasse".into()));
    }
    if a.census && !(group == Group::G2 && q == 3) {
        return Err(Failure::Usage("the census is budgeted for G2 over F_3 only".into()));
    }
    if a.common.verify {
        verify(vec![checks::mass(group), checks::chevalley_self(group, &[p])], a.common.verbose)?;
    }
    let mut out = String::new();
    let mut failures = Vec::new();
    if a.mass {
        let r = chevalley::mass_check(group)?;
        if a.common.verify && !r.ok {
            failures.push(checks::mass(group));
        }
        out += &render::mass(&r, f)?;
    }
    if a.census {
        if a.common.verbose {
            eprintln!("sweeping {}^{} seeds", q, chevalley::tables::n_pos(group));
        }
        let c = chevalley::nilpotent_sweep_g2(q)?;
        out += &render::census(&c, f)?;
    }
    if !a.bfs.is_empty() {
        let alg = ChevalleyAlgebra::build(group)?;
        let action = CoadjointAction::new(&alg, q)?;
        let rows = chevalley::table(group)?;
        let zero = rows.iter().find(|r| r.rep.is_empty()).expect("every table has a zero row");
        let mut results = Vec::new();
        for name in &a.bfs {
            let row = chevalley::tables::row(group, name)?;
            let v = chevalley::materialize_rep(&alg, &row, &action.gf)?;
            let expected = zero.centralizer.div_exact(&row.centralizer)?.eval_u64(i64::from(q));
            if a.common.verbose {
                eprintln!("bfs {} (expected {expected:?})", row.name);
            }
            let res = chevalley::orbit_bfs(&action, &v, a.cap, expected);
            if !res.complete {
                return Err(Failure::Usage(format!("orbit of {} exceeds the cap of {} states", row.name, a.cap)));
            }
            if a.common.verify && Some(res.size) != expected {
                failures.push(Check {
                    name: format!("bfs {}", row.name),
                    ok: false,
                    detail: match expected {
                        Some(e) => format!("orbit has {} elements, table gives {e}", res.size),
                        None => format!("orbit has {} elements, table size does not fit a word", res.size),
                    },
                });
            }
            results.push(render::BfsRow { row: row.name, q, size: res.size, expected });
        }
        out += &render::bfs(&results, f)?;
    }
    if !a.mass && !a.census && a.bfs.is_empty() {
        out += &render::table(group, &chevalley::table(group)?, f)?;
    }
    if !failures.is_empty() {
        return Err(Failure::Verify(failures));
    }
    Ok(out)
}
