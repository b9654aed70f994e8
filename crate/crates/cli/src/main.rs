use std::process::ExitCode;

use bfc::{
    cauchy_decompose, corrupted_u0, epoly_to_schur, g, g_vee, gamma, gamma_vee, kp_residual_of,
    run_suite, schur_to_epoly, u_gen, u_gen_infinite, EPoly, Error, HPoly, LaurentBoson, Partition,
    SchurVector, Suite, TSeries,
};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "bfc",
    version,
    about = "Schur determinants, vertex operators and wedge identities in exact arithmetic"
)]
struct Cli {
    /// Also print a human-readable rendering to standard error.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between the Schur and elementary-symmetric bases of B_r.
    #[command(group(ArgGroup::new("input").required(true).args(["partition", "epoly"])))]
    Expand {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        partition: Option<Partition>,
        /// A polynomial in e_1..e_r as JSON: {"r":..,"terms":[{"exps":[..],"coeff":".."}]}.
        #[arg(long)]
        epoly: Option<String>,
        #[arg(long, value_enum)]
        to: Basis,
    },
    /// Apply a vertex operator to a Schur determinant.
    Vertex {
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        partition: Partition,
        /// Highest power of z kept; required for Gamma.
        #[arg(long)]
        zorder: Option<usize>,
    },
    /// Coordinates of a kernel element in the basis u_0, u_-1, ..., u_{-r+1}.
    #[command(group(ArgGroup::new("input").required(true).args(["series", "u"])))]
    Decompose {
        #[arg(long)]
        r: usize,
        /// A series over e-polynomials as JSON: {"N":..,"ring":"epoly","coeffs":[..]}.
        #[arg(long)]
        series: Option<String>,
        /// Decompose the universal solution u_J instead.
        #[arg(long, allow_negative_numbers = true, requires = "torder")]
        u: Option<i64>,
        #[arg(long)]
        torder: Option<usize>,
    },
    /// Run a verification suite over all partitions up to a weight.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        max_weight: usize,
    },
    /// Evaluate the KP residual of u_j in B_∞.
    KpCheck {
        #[arg(long, default_value_t = 0)]
        j: i64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        torder: usize,
        /// Index bound for h_n; defaults to j + torder.
        #[arg(long)]
        m: Option<usize>,
        /// Use a perturbed u_0 that is not a solution.
        #[arg(long)]
        corrupt: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    E,
    Schur,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    #[value(name = "G")]
    G,
    #[value(name = "Gvee")]
    Gvee,
    #[value(name = "Gamma")]
    Gamma,
    #[value(name = "Gammavee")]
    Gammavee,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(msg) => Failure::Usage(msg),
            other => Failure::Domain(other),
        }
    }
}

struct Output {
    json: serde_json::Value,
    pretty: String,
    ok: bool,
}

impl Output {
    fn new(value: &impl Serialize, pretty: String) -> Self {
        Output {
            json: serde_json::to_value(value).expect("output is serializable"),
            pretty,
            ok: true,
        }
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Usage(format!("invalid {what} JSON: {e}")))
}

fn render_laurent(l: &LaurentBoson) -> String {
    if l.is_empty() {
        return "0".into();
    }
    let mut parts: Vec<_> = l
        .terms()
        .map(|(e, v)| match e {
            0 => format!("({v})"),
            _ => format!("({v}) z^{e}"),
        })
        .collect();
    parts.reverse();
    parts.join(" + ")
}

fn expand(
    r: usize,
    partition: Option<Partition>,
    epoly: Option<String>,
    to: Basis,
) -> Result<Output, Failure> {
    let schur = match (partition, epoly) {
        (Some(p), _) => SchurVector::basis(p, r)?,
        (None, Some(text)) => {
            let e: EPoly = parse_json("epoly", &text)?;
            if e.r() != r {
                return Err(Error::TruncationMismatch {
                    left: e.r(),
                    right: r,
                }
                .into());
            }
            epoly_to_schur(&e)
        }
        (None, None) => unreachable!("clap requires one input"),
    };
    Ok(match to {
        Basis::Schur => Output::new(&schur, schur.to_string()),
        Basis::E => {
            let e = schur_to_epoly(&schur);
            Output::new(&e, e.to_string())
        }
    })
}

fn vertex(
    r: usize,
    op: Op,
    partition: Partition,
    zorder: Option<usize>,
) -> Result<Output, Failure> {
    let v = SchurVector::basis(partition, r)?;
    let out = match op {
        Op::G => g(&v),
        Op::Gvee => g_vee(&v),
        Op::Gammavee => gamma_vee(&v),
        Op::Gamma => {
            let n = zorder
                .ok_or_else(|| Failure::Usage("--zorder is required for --op Gamma".into()))?;
            gamma(&v, n)
        }
    };
    Ok(Output::new(&out, render_laurent(&out)))
}

fn decompose(
    r: usize,
    series: Option<String>,
    u: Option<i64>,
    torder: Option<usize>,
) -> Result<Output, Failure> {
    let phi: TSeries<EPoly> = match (series, u) {
        (Some(text), _) => parse_json("series", &text)?,
        (None, Some(j)) => u_gen(j, r, torder.expect("clap requires --torder with --u")),
        (None, None) => unreachable!("clap requires one input"),
    };
    let coords = cauchy_decompose(&phi, r)?;
    let pretty = coords
        .iter()
        .enumerate()
        .map(|(i, c)| format!("u_{}: {c}", -(i as i64)))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output::new(
        &json!({ "r": r, "coefficients": coords }),
        pretty,
    ))
}

fn verify(suite: Suite, r: usize, max_weight: usize) -> Result<Output, Failure> {
    if r == 0 {
        return Err(Failure::Usage("--r must be at least 1".into()));
    }
    let report = run_suite(suite, r, max_weight);
    let pretty = format!(
        "{suite}: r={r} max-weight={max_weight} cases={} failures={}",
        report.cases,
        report.failures.len()
    );
    let mut out = Output::new(&report, pretty);
    out.ok = report.passed();
    Ok(out)
}

fn kp_check(
    j: i64,
    n: usize,
    torder: usize,
    m: Option<usize>,
    corrupt: bool,
) -> Result<Output, Failure> {
    if j < 0 {
        return Err(Failure::Usage("--j must be non-negative".into()));
    }
    let m = m.unwrap_or(j as usize + torder);
    let phi: TSeries<HPoly> = if corrupt {
        corrupted_u0(torder, m)?
    } else {
        u_gen_infinite(j, torder, m)?
    };
    let residual = kp_residual_of(&phi, n);
    let nonzero: Vec<usize> = (0..=residual.order())
        .filter(|&k| !bfc::Ring::is_zero(&residual.coeffs()[k]))
        .collect();
    let max_nonzero = nonzero
        .last()
        .map(|&k| json!({ "order": k, "coeff": residual.coeffs()[k] }));
    let zero = nonzero.is_empty();
    let pretty = match nonzero.last() {
        None => format!("KP residual of u_{j} (n={n}) vanishes through t^{torder}"),
        Some(k) => format!("KP residual nonzero at t^{k}: {}", residual.coeffs()[*k]),
    };
    let report = json!({
        "j": j,
        "n": n,
        "torder": torder,
        "m": m,
        "corrupt": corrupt,
        "zero": zero,
        "nonzero_orders": nonzero,
        "max_nonzero": max_nonzero,
    });
    let mut out = Output::new(&report, pretty);
    out.ok = zero;
    Ok(out)
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Expand {
            r,
            partition,
            epoly,
            to,
        } => expand(r, partition, epoly, to),
        Command::Vertex {
            r,
            op,
            partition,
            zorder,
        } => vertex(r, op, partition, zorder),
        Command::Decompose {
            r,
            series,
            u,
            torder,
        } => decompose(r, series, u, torder),
        Command::Verify {
            suite,
            r,
            max_weight,
        } => verify(suite, r, max_weight),
        Command::KpCheck {
            j,
            n,
            torder,
            m,
            corrupt,
        } => kp_check(j, n as usize, torder, m, corrupt),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pretty = cli.pretty;
    match run(cli) {
        Ok(out) => {
            println!("{}", out.json);
            if pretty {
                eprintln!("{}", out.pretty);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
