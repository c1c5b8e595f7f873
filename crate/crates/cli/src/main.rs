use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::mpsc;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bcinterp::arith::{Poly, RatFunc};
use bcinterp::interp::{norm_h, pstar, Route};
use bcinterp::macdonald::macdonald_p;
use bcinterp::params::Params;
use bcinterp::partition::{partitions_upto, Partition};
use bcinterp::refute::{refute, verify_certificate};
use bcinterp::serial::{flatten, flatten_rat, to_json, to_json_value, to_text, Alphabet};
use bcinterp::suites::{parse_suites, run_suite, PointSpec, SuiteConfig};

#[derive(Parser)]
#[command(name = "bcinterp", version, about = "BC-type interpolation Macdonald polynomials, exactly")]
struct Cli {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, env = "BCINTERP_WORKERS")]
    workers: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct a polynomial and print it.
    Compute {
        #[arg(value_enum)]
        what: What,
        #[command(flatten)]
        args: ComputeArgs,
    },
    /// Run a verification suite; exit 1 on any failing case.
    Verify(VerifyArgs),
    /// Emit a certificate against bounded q-difference equations.
    Refute {
        #[arg(value_enum)]
        what: RefuteWhat,
        #[command(flatten)]
        args: RefuteArgs,
    },
    /// Write canonical JSON for P*_mu over a grid into a directory.
    Golden {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_weight: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Pstar,
    Macdonald,
    Norm,
}

#[derive(Clone, Copy, ValueEnum)]
enum RefuteWhat {
    Qde,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct ComputeArgs {
    /// Comma-separated parts, e.g. `2,1`; `0` for the empty partition.
    #[arg(long, value_parser = parse_partition)]
    mu: Partition,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "comb", value_parser = parse_route)]
    method: Route,
    /// `t = q^(2k+1)` for the integral method.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Numeric point, e.g. `q_half=1/2,t_half=1/3,s=5`.
    #[arg(long, value_parser = parse_spec)]
    spec: Option<PointSpec>,
}

#[derive(Args)]
struct VerifyArgs {
    suite: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    max_weight: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Numeric points per case off the symbolic grid.
    #[arg(long, default_value_t = 5)]
    points: usize,
    #[arg(long, value_parser = parse_spec)]
    spec: Option<PointSpec>,
    /// Wall-clock limit such as `30s` or `5m`.
    #[arg(long, value_parser = humantime::parse_duration)]
    timeout: Option<Duration>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct RefuteArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    d: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    deg: u64,
    /// Defaults to `deg + 1`.
    #[arg(long)]
    probes: Option<usize>,
    #[arg(long)]
    json: bool,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_route(s: &str) -> Result<Route, String> {
    s.parse::<Route>().map_err(|e| e.to_string())
}

fn parse_spec(s: &str) -> Result<PointSpec, String> {
    s.parse::<PointSpec>().map_err(|e| e.to_string())
}

/// Exit code 2 with a diagnostic.
fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn render(r: &RatFunc, n: usize, format: Format) -> String {
    let a = Alphabet::new(n);
    match format {
        Format::Text => to_text(r, &a),
        Format::Json => to_json(r, &a),
    }
}

fn compute(what: What, a: ComputeArgs) -> ExitCode {
    let route = match (a.method, a.k) {
        (Route::Integral { .. }, Some(k)) => Route::Integral { k },
        (r, _) => r,
    };
    if let Err(e) = a.mu.check_length(a.n) {
        return usage(e);
    }
    let numeric = match a.spec.as_ref().map(PointSpec::params).transpose() {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let out: bcinterp::Result<RatFunc> = match numeric {
        Some(p) => compute_at(what, route, &a.mu, a.n, &p).map(|f| flatten_rat(&f)),
        None => {
            let p = match route {
                Route::Integral { k } => Params::symbolic_theta(k),
                _ => Params::symbolic(),
            };
            compute_at(what, route, &a.mu, a.n, &p).map(|f| flatten(&f))
        }
    };
    match out {
        Ok(r) => {
            println!("{}", render(&r, a.n, a.format));
            ExitCode::SUCCESS
        }
        Err(e) => usage(e),
    }
}

fn compute_at<K: bcinterp::arith::Field>(
    what: What,
    route: Route,
    mu: &Partition,
    n: usize,
    p: &Params<K>,
) -> bcinterp::Result<Poly<K>> {
    match what {
        What::Pstar => Ok(pstar(route, mu, n, p)?.value),
        What::Macdonald => Ok(macdonald_p(mu, n, p)),
        What::Norm => Ok(Poly::constant(norm_h(mu, n, p)?)),
    }
}

fn verify(a: VerifyArgs) -> ExitCode {
    let suites = match parse_suites(&a.suite) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let cfg = SuiteConfig {
        n: a.n,
        m: a.m,
        k: a.k,
        max_weight: a.max_weight,
        seed: a.seed,
        points: a.points,
        spec: a.spec,
    };
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        let mut all = Vec::new();
        for s in suites {
            match run_suite(s, &cfg) {
                Ok(r) => all.extend(r),
                Err(e) => {
                    let _ = tx.send(Err(e));
                    return;
                }
            }
        }
        let _ = tx.send(Ok(all));
    });
    let got = match a.timeout {
        Some(d) => match rx.recv_timeout(d) {
            Ok(r) => r,
            Err(_) => {
                eprintln!("timed out after {}", humantime::format_duration(d));
                return ExitCode::from(1);
            }
        },
        None => rx.recv().expect("suite thread finished"),
    };
    let results = match got {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let failed = results.iter().filter(|r| !r.passed()).count();
    match a.format {
        Format::Text => {
            for r in &results {
                println!("{r}");
            }
            println!("{} of {} cases passed", results.len() - failed, results.len());
        }
        Format::Json => {
            let v: Vec<_> = results
                .iter()
                .map(|r| serde_json::json!({ "id": r.id, "pass": r.passed(), "report": r.to_string() }))
                .collect();
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn refute_cmd(a: RefuteArgs) -> ExitCode {
    let (d, deg) = (a.d as usize, a.deg as usize);
    let c = match refute(d, deg, a.probes.unwrap_or(deg + 1)) {
        Ok(c) => c,
        Err(e @ bcinterp::Error::Precondition(_)) => {
            // a vanishing witness would contradict the closed form
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
        Err(e) => return usage(e),
    };
    let ok = verify_certificate(&c);
    if a.json {
        println!("{}", serde_json::to_string_pretty(&c).expect("serializable"));
    } else {
        println!("order d = {}, coefficient degree span <= {}", c.d, c.deg_bound);
        for (k, m) in c.probes.iter().enumerate() {
            let (rp, rm) = (c.roots_plus[k], c.roots_minus[k]);
            println!(
                "m = {m}: roots q^{} and q^{} s^{}; f_m(q^m) = {}",
                rp.q_exp, rm.q_exp, rm.s_exp, c.witnesses[k]
            );
        }
        println!("certificate {}", if ok { "valid" } else { "INVALID" });
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn golden(out: PathBuf, n: usize, max_weight: usize) -> ExitCode {
    if let Err(e) = std::fs::create_dir_all(&out) {
        return usage(e);
    }
    let p = Params::<RatFunc>::symbolic();
    let a = Alphabet::new(n);
    for mu in partitions_upto(max_weight, n) {
        let f = match pstar(Route::Comb, &mu, n, &p) {
            Ok(f) => f.value,
            Err(e) => return usage(e),
        };
        let name = format!("pstar_n{n}_{}.json", mu.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join("_"));
        let name = if mu.is_empty() { format!("pstar_n{n}_empty.json") } else { name };
        let body = serde_json::to_string_pretty(&to_json_value(&flatten(&f), &a)).expect("serializable");
        if let Err(e) = std::fs::write(out.join(name), body + "\n") {
            return usage(e);
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        if w == 0 {
            return usage("--workers must be at least 1");
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w).build_global() {
            return usage(e);
        }
    }
    match cli.cmd {
        Cmd::Compute { what, args } => compute(what, args),
        Cmd::Verify(a) => verify(a),
        Cmd::Refute { args, .. } => refute_cmd(args),
        Cmd::Golden { out, n, max_weight } => golden(out, n, max_weight),
    }
}
