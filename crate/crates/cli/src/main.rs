//! `gessel`: exact counts of quarter-plane walks with steps E, W, NE, SW.
//!
//! Exit codes: 0 success, 1 a verification found a counterexample,
//! 2 usage error (including methods that do not apply to a point).

mod cache;

/// `println!` that stops quietly when stdout is closed (e.g. piped to `head`).
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        if writeln!(std::io::stdout().lock(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gessel::arith::gessel_closed_form;
use gessel::lab::{self, Family, FitReport};
use gessel::series::{self, IdentityReport};
use gessel::system::{self, Route, DEFAULT_MAX_SPAN};
use gessel::walks::{self, shortest_walk, WalkRecord};
use gessel::{ClosedForm, ExactInt, ExactRat};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "gessel", version, about = "Exact Gessel-walk counting and verification")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Walk-table cache file (JSON lines). Defaults to
    /// $GESSEL_CACHE_DIR/walks.jsonl when that variable is set.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Dynamic programming over the step recurrence.
    Dp,
    /// Printed closed forms (shortest walks, origin, axis families).
    Closed,
    /// Hessenberg determinants of the boundary system.
    Det,
    /// Chain sums for the inverse of the boundary system.
    Multisum,
    /// Forward substitution in the boundary system.
    Solve,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Suite {
    Gessel,
    Kernel,
    Hkernel,
    Root,
    CrossPipeline,
    RecurrenceG,
    Families,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count m-step walks from the origin to (n1, n2).
    Count {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        n1: i64,
        #[arg(long, allow_hyphen_values = true)]
        n2: i64,
        #[arg(long, value_enum, default_value_t = Method::Dp)]
        method: Method,
        /// Largest index span enumerated by the multisum method.
        #[arg(long, default_value_t = DEFAULT_MAX_SPAN)]
        max_span: usize,
    },
    /// Run a verification suite; exit 1 on the first counterexample.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Range bound for the gessel and recurrence_g suites.
        #[arg(long = "N", visible_alias = "n")]
        n: Option<u64>,
        /// Largest packed index for cross_pipeline.
        #[arg(long, default_value_t = 200)]
        k_max: usize,
        /// Truncation caps dx,dy,dz for the series suites.
        #[arg(long, value_parser = parse_caps, default_value = "10,10,10")]
        caps: [u32; 3],
    },
    /// Print the i-th universal sequence.
    Universal {
        #[arg(long)]
        i: usize,
    },
    /// Fit a polynomial family member and check its claimed structure.
    Fit {
        /// One of p, q, r, s, rt.
        #[arg(long)]
        family: Family,
        #[arg(long)]
        k: u32,
    },
    /// Export every nonzero F(m; n1, n2) with m <= m-max.
    Table {
        #[arg(long)]
        m_max: usize,
    },
    /// The Hessenberg matrix whose determinant is F(2n; 0, 0).
    Hessenberg {
        #[arg(long)]
        n: usize,
        /// Print the matrix instead of its determinant.
        #[arg(long)]
        dump: bool,
    },
}

fn parse_caps(s: &str) -> Result<[u32; 3], String> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|v: Vec<u32>| format!("expected three caps dx,dy,dz, got {}", v.len()))
}

/// A failed run: exit code plus message for stderr.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = cache::resolve(cli.cache.clone());
    let result = match cli.command {
        Command::Count {
            m,
            n1,
            n2,
            method,
            max_span,
        } => cmd_count(&cli, cache.as_deref(), m, n1, n2, method, max_span),
        Command::Verify { suite, n, k_max, caps } => cmd_verify(&cli, suite, n, k_max, caps),
        Command::Universal { i } => cmd_universal(&cli, i),
        Command::Fit { family, k } => cmd_fit(&cli, cache.as_deref(), family, k),
        Command::Table { m_max } => cmd_table(&cli, cache.as_deref(), m_max),
        Command::Hessenberg { n, dump } => cmd_hessenberg(&cli, n, dump),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn closed_value(m: usize, n1: i64, n2: i64) -> Option<(ExactInt, String)> {
    if !walks::reachable(m as i64, n1, n2) {
        return Some((ExactInt::from(0), "support".into()));
    }
    let (m64, a, b) = (m as u64, n1 as u64, n2 as u64);
    let s = shortest_walk(a, b);
    if s.length == m64 {
        return Some((s.count, "shortest".into()));
    }
    let integral = |r: ExactRat| r.is_integer().then(|| r.to_integer());
    if a == 0 && b == 0 {
        return integral(gessel_closed_form(m64 / 2)).map(|v| (v, "gessel".into()));
    }
    let (form, n) = *ClosedForm::covering(m64, a, b).first()?;
    let value = gessel::conjectured_value(form, n).ok()?;
    integral(value).map(|v| (v, form.to_string()))
}

fn cmd_count(
    cli: &Cli,
    cache: Option<&std::path::Path>,
    m: usize,
    n1: i64,
    n2: i64,
    method: Method,
    max_span: usize,
) -> Outcome {
    let (value, label) = match method {
        Method::Dp => {
            let value = if walks::reachable(m as i64, n1, n2) {
                cache::walk_table(cache, m).get(m, n1, n2).clone()
            } else {
                ExactInt::from(0)
            };
            (value, "dp".to_string())
        }
        Method::Closed => {
            let (value, formula) = closed_value(m, n1, n2).ok_or_else(|| {
                usage(format!("no closed form covers F({m};{n1},{n2})"))
            })?;
            (value, format!("closed:{formula}"))
        }
        Method::Det | Method::Solve | Method::Multisum => {
            if n1 < 0 || n2 < 0 {
                (ExactInt::from(0), format!("{method:?}").to_lowercase())
            } else {
                let route = match method {
                    Method::Det => Route::Determinant,
                    Method::Solve => Route::Forward,
                    _ => Route::Multisum { max_span },
                };
                let value = system::boundary_count(m, n1 as usize, n2 as usize, route)
                    .map_err(|e| usage(e.to_string()))?;
                (value, format!("{method:?}").to_lowercase())
            }
        }
    };
    match cli.format {
        Format::Text => out!("F({m};{n1},{n2}) = {value}  [{label}]"),
        Format::Json => out!(
            "{}",
            json!({"m": m, "n1": n1, "n2": n2, "F": value.to_string(), "method": label})
        ),
        Format::Csv => out!("m,n1,n2,F,method\n{m},{n1},{n2},{value},{label}"),
    }
    Ok(())
}

fn identity_json(r: &IdentityReport) -> serde_json::Value {
    serde_json::to_value(r).expect("serializable")
}

fn cmd_verify(cli: &Cli, suite: Suite, n: Option<u64>, k_max: usize, caps: [u32; 3]) -> Outcome {
    let (passed, details) = match suite {
        Suite::Gessel => {
            let r = lab::verify_gessel(n.unwrap_or(16));
            (r.agree, serde_json::to_value(&r).expect("serializable"))
        }
        Suite::Kernel | Suite::Hkernel | Suite::Root => {
            let g = series::build_g(caps);
            let r = match suite {
                Suite::Kernel => series::verify_kernel_equation(&g),
                Suite::Hkernel => series::verify_h_equation(&g),
                _ => series::verify_root_identity(&g),
            };
            (r.holds, identity_json(&r))
        }
        Suite::CrossPipeline => {
            let r = system::cross_check(k_max);
            (r.agree, serde_json::to_value(&r).expect("serializable"))
        }
        Suite::RecurrenceG => {
            let r = lab::verify_recurrence_g(n.unwrap_or(30));
            (r.holds, serde_json::to_value(&r).expect("serializable"))
        }
        Suite::Families => families_suite(),
    };
    let name = suite
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    match cli.format {
        Format::Json => out!("{}", json!({"suite": name, "passed": passed, "details": details})),
        Format::Csv => out!("suite,passed\n{name},{passed}"),
        Format::Text => {
            out!("suite {name}: {}", if passed { "PASS" } else { "FAIL" });
            out!("{}", serde_json::to_string_pretty(&details).expect("serializable"));
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: format!("suite {name} found a counterexample"),
        })
    }
}

/// Fits every family member small enough to run in a few seconds and checks
/// the printed closed forms against the DP table.
fn families_suite() -> (bool, serde_json::Value) {
    let table = gessel::WalkTable::new(48);
    let mut reports: Vec<serde_json::Value> = Vec::new();
    let mut passed = true;
    let members = [
        (Family::S, 0..=4),
        (Family::R, 1..=4),
        (Family::RTilde, 0..=3),
        (Family::P, 1..=3),
        (Family::Q, 0..=3),
    ];
    for (family, ks) in members {
        for k in ks {
            match lab::fit_family_with(&table, family, k) {
                Ok(fit) => {
                    let report: FitReport = fit.report();
                    passed &= report.claims.all_hold() && report.held_out_ok;
                    reports.push(serde_json::to_value(&report).expect("serializable"));
                }
                Err(e) => {
                    passed = false;
                    reports.push(json!({"family": family, "k": k, "error": e.to_string()}));
                }
            }
        }
    }
    let r0 = lab::verify_r0(20);
    passed &= r0;
    let mut forms = vec![ClosedForm::ZeroOne];
    forms.extend((0..=3).map(ClosedForm::Vertical));
    forms.extend((0..=3).map(ClosedForm::Horizontal));
    let mut printed = Vec::new();
    for form in forms {
        let bad = (0..=16u64).find(|&n| {
            let (m, a, b) = form.point(n);
            let dp = ExactRat::from_integer(table.get(m as usize, a as i64, b as i64).clone());
            gessel::conjectured_value(form, n).ok() != Some(dp)
        });
        passed &= bad.is_none();
        printed.push(json!({"form": form.to_string(), "checked_to_n": 16, "first_failure": bad}));
    }
    (passed, json!({"fits": reports, "r0_closed_form": r0, "printed_forms": printed}))
}

fn cmd_universal(cli: &Cli, i: usize) -> Outcome {
    let seq = system::universal_sequence(i).map_err(|e| usage(e.to_string()))?;
    let strings: Vec<String> = seq.iter().map(|v| v.to_string()).collect();
    match cli.format {
        Format::Text => out!("{}", strings.join(", ")),
        Format::Csv => out!("{}", strings.join(",")),
        Format::Json => out!("{}", json!({"i": i, "sequence": strings})),
    }
    Ok(())
}

fn cmd_fit(cli: &Cli, cache: Option<&std::path::Path>, family: Family, k: u32) -> Outcome {
    let table = cache::walk_table(cache, lab::table_extent(family, k));
    let fit = lab::fit_family_with(&table, family, k).map_err(|e| match e {
        gessel::Error::HeldOutMismatch { .. } | gessel::Error::SingularAnsatz { .. } => Failure {
            code: 1,
            message: e.to_string(),
        },
        other => usage(other.to_string()),
    })?;
    let report = fit.report();
    match cli.format {
        Format::Json => out!("{}", serde_json::to_string(&report).expect("serializable")),
        Format::Csv => {
            out!("degree,coeff");
            for (d, c) in report.coeffs.iter().enumerate() {
                out!("{d},{c}");
            }
        }
        Format::Text => {
            out!("{family}_{k}(n) = {}", fit.poly);
            out!(
                "samples n = 0..={}, held-out points verified: {}",
                fit.sample_points.last().copied().unwrap_or(0),
                fit.verified_extra
            );
            out!("{}", serde_json::to_string_pretty(&report.claims).expect("serializable"));
        }
    }
    Ok(())
}

fn cmd_table(cli: &Cli, cache: Option<&std::path::Path>, m_max: usize) -> Outcome {
    let table = cache::walk_table(cache, m_max);
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let io = |e: std::io::Error| {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        Failure {
            code: 2,
            message: e.to_string(),
        }
    };
    use std::io::Write;
    match cli.format {
        Format::Csv => {
            writeln!(out, "m,n1,n2,F").map_err(io)?;
            for (m, n1, n2, v) in table.nonzero().filter(|r| r.0 <= m_max) {
                writeln!(out, "{m},{n1},{n2},{v}").map_err(io)?;
            }
        }
        Format::Json | Format::Text => {
            for (m, n1, n2, v) in table.nonzero().filter(|r| r.0 <= m_max) {
                let record = WalkRecord {
                    m: m as u64,
                    n1: n1 as u64,
                    n2: n2 as u64,
                    count: v.to_string(),
                };
                let line = serde_json::to_string(&record).expect("serializable");
                writeln!(out, "{line}").map_err(io)?;
            }
        }
    }
    out.flush().map_err(io)
}

fn cmd_hessenberg(cli: &Cli, n: usize, dump: bool) -> Outcome {
    let k = system::SystemIndexer::rho(2 * n + 1, 2 * n + 1);
    let h = system::hessenberg_for(k).map_err(|e| usage(e.to_string()))?;
    if dump {
        match cli.format {
            Format::Json => {
                let rows: Vec<Vec<String>> = h
                    .rows()
                    .iter()
                    .map(|r| r.iter().map(|v| v.to_string()).collect())
                    .collect();
                out!("{}", json!(rows));
            }
            Format::Csv | Format::Text => {
                for row in h.rows() {
                    let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                    out!("{}", line.join(","));
                }
            }
        }
        return Ok(());
    }
    let det = h.det();
    match cli.format {
        Format::Text => out!("det H^({k}) = {det}  (size {}, F({};0,0))", h.size(), 2 * n),
        Format::Json => out!(
            "{}",
            json!({"n": n, "k": k, "size": h.size(), "det": det.to_string()})
        ),
        Format::Csv => out!("n,k,size,det\n{n},{k},{},{det}", h.size()),
    }
    Ok(())
}
