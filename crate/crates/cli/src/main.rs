use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sl3gk::gamma::{gamma_matrix, GammaMatrix};
use sl3gk::ktype::{ktype_info, multiplicity, SeriesParams};
use sl3gk::lie::{adjoint_table, Parabolic};
use sl3gk::sl2::{classify, Sign};
use sl3gk::standard::{random_point, verify_brackets, VerifyOptions, VerifyReport};
use sl3gk::su2::{injector_csv, projector_csv};
use sl3gk::{GaussianRational, Point, Scalar};

#[derive(Parser)]
#[command(name = "sl3gk", version, about = "Exact (g,K)-module tables and checks for SL(3,R)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Clebsch-Gordan coefficient table as CSV
    Coeffs {
        #[arg(long, value_enum, default_value_t = Table::A)]
        table: Table,
        #[arg(long, default_value_t = 10)]
        lmax: i64,
    },
    /// Contiguous-relation matrix R(Gamma_{l,m})
    Gamma {
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long)]
        l: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// K-type multiplicities and block labels
    Ktypes {
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long)]
        lmax: i64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Check the bracket relations on a truncated module
    Verify {
        #[command(flatten)]
        series: SeriesArgs,
        /// Comma-separated values of nu (two for p0, one for p1/p2)
        #[arg(long, allow_hyphen_values = true, conflicts_with = "seed")]
        nu: Option<String>,
        /// Draw nu at a reproducible random Gaussian-rational point
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        lmax: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        report: Format,
        /// Also check the [k,k] relations
        #[arg(long)]
        include_kk: bool,
    },
    /// Reducibility type of an SL(2,R) principal series
    #[command(name = "classify-sl2")]
    ClassifySl2 {
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long, allow_hyphen_values = true)]
        sign: String,
    },
    /// Write coefficient, K-type, adjoint and Gamma tables to a directory
    Export {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 20)]
        lmax: i64,
        #[arg(long, default_value_t = 8)]
        gamma_lmax: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    A,
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct SeriesArgs {
    /// p0, p1 or p2
    #[arg(long)]
    series: Parabolic,
    /// sigma bits for p0, e.g. 0,1
    #[arg(long, default_value = "0,0")]
    sigma: String,
    /// Blattner parameter for p1/p2
    #[arg(long)]
    k: Option<i64>,
}

impl SeriesArgs {
    fn params(&self) -> Result<SeriesParams, String> {
        match self.series {
            Parabolic::P0 => {
                let bits: Vec<u8> = self
                    .sigma
                    .split(',')
                    .map(|s| s.trim().parse::<u8>().map_err(|_| format!("bad sigma {:?}", self.sigma)))
                    .collect::<Result<_, _>>()?;
                let [s1, s2] = bits[..] else {
                    return Err(format!("sigma needs two bits, got {:?}", self.sigma));
                };
                SeriesParams::p0(s1, s2).map_err(|e| e.to_string())
            }
            par => {
                let k = self.k.ok_or_else(|| format!("--k is required for {par}"))?;
                SeriesParams::maximal(par, k).map_err(|e| e.to_string())
            }
        }
    }
}

enum Failure {
    Checks(String),
    Usage(String),
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Usage(s)
    }
}

impl From<sl3gk::Error> for Failure {
    fn from(e: sl3gk::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable value")
}

fn gamma_text(g: &GammaMatrix) -> String {
    let mut out = format!("R(Gamma) l={} m={} {}x{} n={} delta={}\n", g.l, g.m, g.rows, g.cols, g.n, g.delta);
    for row in &g.entries {
        let cells: Vec<String> = row.iter().map(Scalar::to_string).collect();
        let _ = writeln!(out, "[{}]", cells.join(", "));
    }
    out
}

fn ktypes_csv(params: &SeriesParams, lmax: i64, header: bool) -> String {
    let mut out = String::new();
    if header {
        out.push_str("series,l,d,p_list,delta,epsilon\n");
    }
    for l in 0..=lmax {
        let info = ktype_info(params, l);
        let labels: Vec<String> = info.p_list.iter().map(i64::to_string).collect();
        let eps = info.epsilon.map(|e| e.to_string()).unwrap_or_default();
        let _ = writeln!(out, "{params},{l},{},{},{},{eps}", info.multiplicity, labels.join(" "), info.delta);
    }
    out
}

fn nu_point(params: &SeriesParams, nu: &str) -> Result<Point, String> {
    let values: Vec<GaussianRational> =
        nu.split(',').map(|s| s.parse::<GaussianRational>().map_err(|e| e.to_string())).collect::<Result<_, _>>()?;
    let symbols = params.symbols();
    if values.len() != symbols.len() {
        return Err(format!("{params} takes {} value(s) of nu, got {}", symbols.len(), values.len()));
    }
    Ok(symbols.into_iter().zip(values).collect())
}

fn report_text(report: &VerifyReport) -> String {
    let mut out = format!("{} l_max={}\n", report.series, report.l_max);
    for c in &report.classes {
        let _ = writeln!(out, "{} checked={} failures={}", c.class, c.checked, c.failures);
        if let Some(f) = &c.first_failure {
            let _ = writeln!(out, "  first failure: {} on {}", f.identity, f.vector);
            if let Some(e) = &f.error {
                let _ = writeln!(out, "    error: {e}");
            }
            for d in &f.diff {
                let _ = writeln!(out, "    {}: {} != {}", d.index, d.lhs, d.rhs);
            }
        }
    }
    out.push_str(if report.passed { "PASS\n" } else { "FAIL\n" });
    out
}

fn export_series() -> Vec<(String, SeriesParams)> {
    let mut out = Vec::new();
    for (s1, s2) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        out.push((format!("p0_{s1}{s2}"), SeriesParams::p0(s1, s2).unwrap()));
    }
    for par in [Parabolic::P1, Parabolic::P2] {
        for k in 2..=4 {
            out.push((format!("{par}_k{k}"), SeriesParams::maximal(par, k).unwrap()));
        }
    }
    out
}

fn write_file(path: &Path, contents: &str) -> Result<String, String> {
    fs::write(path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    Ok(format!("{}\n", path.display()))
}

fn export(out: &Path, lmax: i64, gamma_lmax: i64) -> Result<String, Failure> {
    fs::create_dir_all(out.join("gamma")).map_err(|e| format!("cannot create {}: {e}", out.display()))?;
    let mut written = String::new();
    written += &write_file(&out.join("cg_a.csv"), &injector_csv(lmax))?;
    written += &write_file(&out.join("cg_b.csv"), &projector_csv(lmax))?;
    let mut ktypes = String::from("series,l,d,p_list,delta,epsilon\n");
    for (_, params) in export_series() {
        ktypes += &ktypes_csv(&params, lmax, false);
    }
    written += &write_file(&out.join("ktypes.csv"), &ktypes)?;
    written += &write_file(&out.join("adjoint.json"), &(json(&adjoint_table()) + "\n"))?;
    for (name, params) in export_series() {
        let mut mats = Vec::new();
        for l in 0..=gamma_lmax {
            for m in -2..=2 {
                if l + m >= 0 && multiplicity(&params, l) > 0 && multiplicity(&params, l + m) > 0 {
                    mats.push(gamma_matrix(&params, l, m)?);
                }
            }
        }
        written += &write_file(&out.join("gamma").join(format!("{name}.json")), &(json(&mats) + "\n"))?;
    }
    Ok(written)
}

fn run(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Coeffs { table, lmax } => Ok(match table {
            Table::A => injector_csv(lmax),
            Table::B => projector_csv(lmax),
        }),
        Command::Gamma { series, l, m, format } => {
            let g = gamma_matrix(&series.params()?, l, m)?;
            Ok(match format {
                Format::Json => json(&g) + "\n",
                Format::Text => gamma_text(&g),
            })
        }
        Command::Ktypes { series, lmax, format } => {
            let params = series.params()?;
            Ok(match format {
                TableFormat::Csv => ktypes_csv(&params, lmax, true),
                TableFormat::Json => json(&(0..=lmax).map(|l| ktype_info(&params, l)).collect::<Vec<_>>()) + "\n",
            })
        }
        Command::Verify { series, nu, seed, lmax, report, include_kk } => {
            let mut params = series.params()?;
            if let Some(nu) = nu {
                params = params.substitute(&nu_point(&params, &nu)?);
            } else if let Some(seed) = seed {
                params = params.substitute(&random_point(seed, &params.symbols()));
            }
            let result = verify_brackets(&params, VerifyOptions { l_max: lmax, include_kk })?;
            let text = match report {
                Format::Json => json(&result) + "\n",
                Format::Text => report_text(&result),
            };
            if result.passed {
                Ok(text)
            } else {
                Err(Failure::Checks(text))
            }
        }
        Command::ClassifySl2 { nu, sign } => {
            let nu: GaussianRational = nu.parse()?;
            let sign: Sign = sign.parse()?;
            Ok(json(&classify(&nu, sign)) + "\n")
        }
        Command::Export { out, lmax, gamma_lmax } => export(&out, lmax, gamma_lmax),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("GK_SL3_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Checks(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
