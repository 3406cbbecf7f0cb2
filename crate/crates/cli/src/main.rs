use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use jordan_limits::chains::ie::{brute_check, i_of_h, solve_ie, window_sum};
use jordan_limits::chains::{all_configurations, run_suite, Suite};
use jordan_limits::ideals::{enumerate_ideals, Partition};
use jordan_limits::liealg::LieModel;
use jordan_limits::roots::TypeTag;

/// Exact verification of limits of the Jordan subalgebra.
#[derive(Parser, Debug)]
#[command(name = "jordan-limits", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the n-dimensional abelian ideals of a Borel subalgebra.
    Ideals(Target),
    /// Run every deformation chain and write certificates.
    Verify(Target),
    /// Solve the inequality system for a partition, e.g. `4,4,1`.
    Iemu { partition: String },
}

#[derive(Args, Debug)]
struct Target {
    /// Root system type.
    #[arg(long = "type", value_parser = parse_tag)]
    tag: Option<TypeTag>,
    /// Rank (classical types; optional for exceptional ones).
    #[arg(long)]
    rank: Option<usize>,
    /// Default sweep: A1..8, B2..7, C2..7, D4..7 and every exceptional type.
    #[arg(long, conflicts_with_all = ["tag", "rank"])]
    all: bool,
    /// Directory for JSON output.
    #[arg(long, env = "JORDAN_LIMITS_OUT", default_value = "certificates")]
    out: PathBuf,
    /// Worker threads; 1 runs sequentially.
    #[arg(long)]
    jobs: Option<usize>,
    /// Write `millis: 0` so output is byte-identical across runs.
    #[arg(long)]
    no_timing: bool,
}

/// `A5`, `E8`: the rank is omitted when the type already fixes it.
fn config_label(tag: TypeTag, rank: usize) -> String {
    match tag.fixed_rank() {
        Some(_) => tag.to_string(),
        None => format!("{tag}{rank}"),
    }
}

fn parse_tag(s: &str) -> std::result::Result<TypeTag, String> {
    s.parse().map_err(|e: jordan_limits::Error| e.to_string())
}

impl Target {
    fn configs(&self) -> Result<Vec<(TypeTag, usize)>> {
        if self.all {
            return Ok(all_configurations());
        }
        let Some(tag) = self.tag else { bail!("either --type or --all is required") };
        Ok(vec![(tag, tag.resolve_rank(self.rank)?)])
    }

    fn parallel(&self) -> Result<bool> {
        match self.jobs {
            Some(0) => bail!("--jobs must be positive"),
            Some(1) => Ok(false),
            #[cfg(feature = "parallel")]
            Some(n) => {
                rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("thread pool")?;
                Ok(true)
            }
            #[cfg(not(feature = "parallel"))]
            Some(_) => Ok(false),
            None => Ok(cfg!(feature = "parallel")),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    // `Ok(false)` is a failed verification; `Err` is a usage or build error.
    let outcome = match &cli.command {
        Command::Ideals(t) => ideals(t),
        Command::Verify(t) => verify(t),
        Command::Iemu { partition } => iemu(partition),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn write_json(path: &Path, value: &impl serde::Serialize) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn ideals(t: &Target) -> Result<bool> {
    let mut listing = Vec::new();
    for (tag, rank) in t.configs()? {
        let model = LieModel::build(tag, rank)?;
        let sys = model.sys();
        let found = enumerate_ideals(&model);
        println!("{}: {} abelian ideals of dimension {rank}", config_label(tag, rank), found.len());
        for (k, ideal) in found.iter().enumerate() {
            let class = ideal.type_class.map(|c| format!("  [{c}]")).unwrap_or_default();
            println!("  {:>3}  {{{}}}{class}", k + 1, ideal.labels(sys).join(", "));
        }
        listing.push(serde_json::json!({
            "type": tag.to_string(),
            "rank": rank,
            "ideals": found.iter().map(|i| serde_json::json!({
                "roots": i.labels(sys),
                "class": i.type_class.map(|c| c.to_string()),
            })).collect::<Vec<_>>(),
        }));
    }
    fs::create_dir_all(&t.out).with_context(|| format!("creating {}", t.out.display()))?;
    write_json(&t.out.join("ideals.json"), &listing)?;
    Ok(true)
}

fn certificate_name(label: &str, k: usize) -> String {
    format!("{label}_{:03}.json", k + 1)
}

fn verify(t: &Target) -> Result<bool> {
    let configs = t.configs()?;
    let parallel = t.parallel()?;
    let suite: Suite = run_suite(&configs, parallel, !t.no_timing)?;
    fs::create_dir_all(&t.out).with_context(|| format!("creating {}", t.out.display()))?;

    println!("{:<5} {:>6} {:>6} {:>6}  {:<6} K heights", "type", "ideals", "pass", "fail", "ranee");
    let mut certs = suite.certificates.iter();
    for summary in &suite.configs {
        let label = config_label(parse_tag(&summary.type_name).map_err(anyhow::Error::msg)?, summary.rank);
        println!(
            "{:<5} {:>6} {:>6} {:>6}  {:<6} {:?}",
            label,
            summary.ideals,
            summary.passed,
            summary.ideals - summary.passed,
            if summary.ranee { "ok" } else { "FAIL" },
            summary.k_heights,
        );
        for k in 0..summary.ideals {
            let c = certs.next().expect("one certificate per ideal");
            if !c.pass {
                println!("      FAIL {{{}}}", c.ideal.join(", "));
            }
            write_json(&t.out.join(certificate_name(&label, k)), c)?;
        }
    }
    write_json(&t.out.join("summary.json"), &suite.configs)?;
    let total = suite.certificates.len();
    let passed = suite.certificates.iter().filter(|c| c.pass).count();
    println!("{passed}/{total} certificates pass; JSON in {}", t.out.display());
    Ok(suite.all_pass())
}

fn iemu(text: &str) -> Result<bool> {
    let mu: Partition = text.parse()?;
    let sol = solve_ie(&mu)?;
    let n = mu.size();
    let fmt = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    println!("mu = {mu}");
    println!("z  = ({})", fmt(&sol.z));
    println!("w  = ({})", fmt(&sol.w));
    println!("{:>3} {:>5} {:>8} {:>12}", "h", "i(h)", "z_i(h)", "min other");
    for h in 1..=n {
        let ih = i_of_h(&mu, h);
        let base = window_sum(&sol.z, ih, h);
        let other = (1..=n + 1 - h).filter(|&j| j != ih).map(|j| window_sum(&sol.z, j, h)).min();
        let other = other.map_or("-".to_string(), |v| v.to_string());
        println!("{h:>3} {ih:>5} {base:>8} {other:>12}");
    }
    let ok = brute_check(&mu, &sol.z).is_ok();
    println!("brute check: {}", if ok { "pass" } else { "FAIL" });
    Ok(ok)
}
