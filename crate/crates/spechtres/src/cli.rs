//! Command-line front end: build, verify, inspect, straighten, and export.
//!
//! Exit codes: 0 all requested work passed, 1 a verification check failed,
//! 2 usage or I/O error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::SpechtError;
use crate::polyring::Polynomial;
use crate::resolution::{assemble, Family, GradedComplex};
use crate::specht::Straightener;
use crate::tableau::{Partition, Tableau};
use crate::verify::{
    betti_expected, check_betti, check_chain, check_decomposition, check_hilbert_numerator,
    check_irreducible_strand, check_minimal, check_strand_exactness, check_well_defined,
    VerificationReport, WellDefScope,
};

#[derive(Parser)]
#[command(
    name = "spechtres",
    about = "Exact minimal free resolutions of Specht ideals for shapes (n-2,2) and (d,d,1)",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Assemble a resolution and write it as an artifact.
    Build(BuildArgs),
    /// Run verification checks against a family instance or an artifact.
    Verify(VerifyArgs),
    /// Print the graded Betti table from the closed-form formulas.
    Betti(FamilyArgs),
    /// Expand a polytabloid in the standard basis.
    Straighten(StraightenArgs),
    /// Export an assembled resolution for an external system.
    Export(ExportArgs),
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// Resolution family: n22 for (n-2,2), dd1 for (d,d,1).
    #[arg(long)]
    family: FamilyKind,
    /// Number of variables (n22 family, n >= 4).
    #[arg(long)]
    n: Option<usize>,
    /// Size parameter of the (d,d,1) family (d >= 1, 2d+1 variables).
    #[arg(long)]
    d: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    N22,
    Dd1,
}

impl FamilyArgs {
    fn family(&self) -> Result<Family, SpechtError> {
        match self.family {
            FamilyKind::N22 => {
                let n = self.n.ok_or_else(|| {
                    SpechtError::InvalidParameter("--family n22 requires --n".into())
                })?;
                if n < 4 {
                    return Err(SpechtError::InvalidParameter(format!(
                        "n22 family needs n >= 4, got {n}"
                    )));
                }
                Ok(Family::N22 { n })
            }
            FamilyKind::Dd1 => {
                let d = self.d.ok_or_else(|| {
                    SpechtError::InvalidParameter("--family dd1 requires --d".into())
                })?;
                if d < 1 {
                    return Err(SpechtError::InvalidParameter(
                        "dd1 family needs d >= 1".into(),
                    ));
                }
                Ok(Family::Dd1 { d })
            }
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
    M2,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckName {
    Chain,
    Minimal,
    Betti,
    Strands,
    Hilbert,
    Decomposition,
    Irreducible,
    Welldef,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Comma-separated subset of checks; all of them when omitted.
    #[arg(long, value_delimiter = ',')]
    checks: Vec<CheckName>,
    /// Internal-degree bound for strand and decomposition checks.
    #[arg(long)]
    max_degree: Option<u32>,
    /// Seed for randomized well-definedness sampling.
    #[arg(long, default_value = "0")]
    seed: u64,
    /// Verify a previously built JSON artifact instead of rebuilding.
    #[arg(long)]
    artifact: Option<PathBuf>,
    /// Write the full report as JSON here in addition to the summary.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StraightenArgs {
    /// Shape as comma-separated parts, e.g. 3,2,1.
    #[arg(long)]
    shape: String,
    /// Tableau rows separated by '/', entries by ',', e.g. "2,1,6/3,5/4".
    #[arg(long)]
    tableau: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, value_enum, default_value = "m2")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn write_output(out: &Option<PathBuf>, data: &str) -> Result<(), SpechtError> {
    match out {
        Some(path) => fs::write(path, data)?,
        None => {
            let mut stdout = std::io::stdout();
            stdout.write_all(data.as_bytes())?;
        }
    }
    Ok(())
}

fn complex_to_text(c: &GradedComplex) -> String {
    let mut s = format!("family: {}\n", c.family.label());
    for (i, m) in c.modules.iter().enumerate() {
        s.push_str(&format!(
            "F_{i}: shape {} twist {} rank {}\n",
            m.shape, m.twist, m.rank
        ));
    }
    for (k, d) in c.differentials.iter().enumerate() {
        s.push_str(&format!("d_{} ({}x{}):\n", k + 1, d.rows(), d.cols()));
        for r in 0..d.rows() {
            let row: Vec<String> = (0..d.cols())
                .map(|cc| d.entry(r, cc).map_or("0".to_string(), |p| p.to_string()))
                .collect();
            s.push_str(&format!("  [{}]\n", row.join(", ")));
        }
    }
    s
}

fn poly_to_m2(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = p
        .terms()
        .map(|(m, c)| {
            let mut factors = vec![format!("({})", c)];
            for (v, e) in m.exponents() {
                if e == 1 {
                    factors.push(format!("x_{v}"));
                } else {
                    factors.push(format!("x_{v}^{e}"));
                }
            }
            factors.join("*")
        })
        .collect();
    terms.join(" + ")
}

/// Macaulay2 script defining the ring and the differential matrices, with
/// assertions replaying the chain and Betti checks externally.
fn complex_to_m2(c: &GradedComplex) -> String {
    let mut s = String::new();
    s.push_str(&format!("-- resolution of the Specht ideal, {}\n", c.family.label()));
    s.push_str(&format!("R = QQ[x_1..x_{}];\n", c.nvars));
    for (k, d) in c.differentials.iter().enumerate() {
        let rows: Vec<String> = (0..d.rows())
            .map(|r| {
                let entries: Vec<String> = (0..d.cols())
                    .map(|cc| d.entry(r, cc).map_or("0".to_string(), poly_to_m2))
                    .collect();
                format!("{{{}}}", entries.join(", "))
            })
            .collect();
        s.push_str(&format!("d{} = matrix {{{}}};\n", k + 1, rows.join(", ")));
    }
    for k in 1..c.differentials.len() {
        s.push_str(&format!("assert(d{} * d{} == 0);\n", k, k + 1));
    }
    s.push_str("C = chainComplex(");
    s.push_str(
        &(1..=c.differentials.len())
            .map(|k| format!("d{k}"))
            .collect::<Vec<_>>()
            .join(", "),
    );
    s.push_str(");\nprint betti C;\n");
    s
}

fn complex_json(c: &GradedComplex) -> Result<String, SpechtError> {
    let mut s = serde_json::to_string_pretty(c)?;
    s.push('\n');
    Ok(s)
}

fn cmd_build(args: &BuildArgs) -> Result<i32, SpechtError> {
    let c = assemble(args.family.family()?)?;
    let data = match args.format {
        Format::Json => complex_json(&c)?,
        Format::Text => complex_to_text(&c),
        Format::M2 => complex_to_m2(&c),
    };
    write_output(&args.out, &data)?;
    Ok(0)
}

fn default_welldef_scope(family: Family, seed: u64) -> WellDefScope {
    // exhaustive stays cheap through six variables
    if family.nvars() <= 6 {
        WellDefScope::Exhaustive
    } else {
        WellDefScope::Randomized { samples: 500, seed }
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32, SpechtError> {
    let family = args.family.family()?;
    let complex: GradedComplex = match &args.artifact {
        Some(path) => {
            let data = fs::read_to_string(path)?;
            let mut c: GradedComplex = serde_json::from_str(&data)?;
            c.normalize_nvars()?;
            if c.family != family {
                return Err(SpechtError::InvalidParameter(format!(
                    "artifact holds {} but flags request {}",
                    c.family.label(),
                    family.label()
                )));
            }
            c.validate()?;
            c
        }
        None => assemble(family)?,
    };

    let requested: Vec<CheckName> = if args.checks.is_empty() {
        vec![
            CheckName::Chain,
            CheckName::Minimal,
            CheckName::Betti,
            CheckName::Strands,
            CheckName::Hilbert,
            CheckName::Decomposition,
            CheckName::Irreducible,
            CheckName::Welldef,
        ]
    } else {
        args.checks.clone()
    };

    let mut reports: Vec<VerificationReport> = Vec::new();
    for check in requested {
        match check {
            CheckName::Chain => reports.push(check_chain(&complex)),
            CheckName::Minimal => reports.push(check_minimal(&complex)),
            CheckName::Betti => reports.push(check_betti(&complex)),
            CheckName::Strands => {
                reports.push(check_strand_exactness(&complex, args.max_degree))
            }
            CheckName::Hilbert => reports.push(check_hilbert_numerator(&complex)),
            CheckName::Decomposition => {
                reports.push(check_decomposition(family, args.max_degree))
            }
            CheckName::Irreducible => {
                for i in 1..=complex.family.top_index() {
                    reports.push(check_irreducible_strand(&complex, i));
                }
            }
            CheckName::Welldef => reports.push(check_well_defined(
                family,
                default_welldef_scope(family, args.seed),
            )),
        }
    }

    for r in &reports {
        println!("{}", r.summary_line());
    }
    if let Some(path) = &args.out {
        let mut s = serde_json::to_string_pretty(&reports)?;
        s.push('\n');
        fs::write(path, s)?;
    }
    Ok(if reports.iter().all(|r| r.passed) { 0 } else { 1 })
}

fn cmd_betti(args: &FamilyArgs) -> Result<i32, SpechtError> {
    let family = args.family()?;
    let table = betti_expected(family);
    println!("graded Betti numbers, {}", family.label());
    for ((i, j), b) in &table.0 {
        println!("beta_{{{i},{j}}} = {b}");
    }
    Ok(0)
}

fn cmd_straighten(args: &StraightenArgs) -> Result<i32, SpechtError> {
    let shape: Partition = args.shape.parse()?;
    let t: Tableau = args.tableau.parse()?;
    if t.shape() != &shape {
        return Err(SpechtError::InvalidTableau(format!(
            "tableau has shape {}, expected {shape}",
            t.shape()
        )));
    }
    let mut st = Straightener::new(shape);
    let v = st.straighten(&t);
    match args.format {
        Format::Json => {
            let terms: Vec<serde_json::Value> = st
                .syt()
                .iter()
                .zip(v.coords())
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(s, c)| {
                    serde_json::json!({ "tableau": s.to_string(), "coefficient": c.to_string() })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&terms)?);
        }
        _ => {
            if v.is_zero() {
                println!("e({t}) = 0");
            } else {
                let terms: Vec<String> = st
                    .syt()
                    .iter()
                    .zip(v.coords())
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(s, c)| format!("({c})*e({s})"))
                    .collect();
                println!("e({t}) = {}", terms.join(" + "));
            }
        }
    }
    Ok(0)
}

fn cmd_export(args: &ExportArgs) -> Result<i32, SpechtError> {
    let c = assemble(args.family.family()?)?;
    let data = match args.format {
        Format::M2 => complex_to_m2(&c),
        Format::Json => complex_json(&c)?,
        Format::Text => complex_to_text(&c),
    };
    write_output(&args.out, &data)?;
    Ok(0)
}

/// Runs the CLI; returns the process exit code.
pub fn run() -> i32 {
    if let Ok(threads) = std::env::var("SPECHTRES_THREADS") {
        if let Ok(k) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
        }
    }
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Build(a) => cmd_build(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Betti(a) => cmd_betti(a),
        Command::Straighten(a) => cmd_straighten(a),
        Command::Export(a) => cmd_export(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
