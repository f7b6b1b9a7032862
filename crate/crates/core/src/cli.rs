//! Command-line front end: `analyze`, `build`, `verify`, `export`, `demo`.
//!
//! Instances are read as JSON (`-` for stdin). Set `PBP_LOG=info` (or
//! `debug`) for progress on stderr.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::acyclicity::DEFAULT_CYCLE_CAP;
use crate::analysis::analyze;
use crate::formulation::{
    formulation_from_json, formulation_to_json, rid_build, to_lp_format, ExtendedFormulation, Strategy, StrategyKind,
    DEFAULT_BLOWUP_BUDGET, DEFAULT_GAP_MAX,
};
use crate::hypergraph::{hypergraph_from_json, hypergraph_to_json, NodeId, NodeSet, SignedHypergraph};
use crate::instances::{overlapping_pairs, two_components, LongCycle};
use crate::verify::verify_hull;

#[derive(Debug, Parser)]
#[command(name = "pbp", version, about = "Extended formulations for pseudo-Boolean polytopes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Acyclicity verdicts, β-cycles and gaps of an instance.
    Analyze(AnalyzeArgs),
    /// Build a formulation and write it as LP or JSON.
    Build(BuildArgs),
    /// Build (or load) a formulation and check it against brute force.
    Verify(VerifyArgs),
    /// Build a formulation and write it in LP format.
    Export(ExportArgs),
    /// Build and verify the bundled example instances.
    Demo(DemoArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Instance JSON, `-` for stdin.
    pub input: String,
    #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
    pub cycle_cap: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StrategyArgs {
    #[arg(long, default_value = "auto")]
    pub strategy: StrategyKind,
    #[arg(long, default_value_t = DEFAULT_GAP_MAX)]
    pub gap_max: usize,
    #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
    pub cycle_cap: usize,
    #[arg(long, default_value_t = DEFAULT_BLOWUP_BUDGET)]
    pub blowup_budget: u128,
    /// Inflate only the largest edge of components with equivalent cycles.
    #[arg(long)]
    pub equivalent_cycles: bool,
    /// Inflation target for split_cor4, comma separated nodes; repeatable.
    #[arg(long = "target", value_delimiter = ';')]
    pub targets: Vec<String>,
}

impl StrategyArgs {
    pub fn strategy(&self) -> Strategy {
        let targets = (!self.targets.is_empty()).then(|| {
            self.targets
                .iter()
                .map(|t| t.split(',').map(str::trim).filter(|s| !s.is_empty()).map(NodeId::new).collect::<NodeSet>())
                .collect()
        });
        Strategy {
            kind: self.strategy,
            gap_max: self.gap_max,
            blowup_budget: self.blowup_budget,
            cycle_cap: self.cycle_cap,
            equivalent_cycles: self.equivalent_cycles,
            targets,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Lp,
    Json,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    pub input: String,
    #[command(flatten)]
    pub strategy: StrategyArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub input: String,
    #[command(flatten)]
    pub strategy: StrategyArgs,
    /// Check this formulation JSON instead of building one.
    #[arg(long)]
    pub formulation: Option<PathBuf>,
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the full report as JSON here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    pub input: String,
    #[command(flatten)]
    pub strategy: StrategyArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also write each demo instance as JSON into this directory.
    #[arg(long)]
    pub write_instances: Option<PathBuf>,
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<SignedHypergraph> {
    let text = if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    };
    hypergraph_from_json(&text).with_context(|| format!("parsing {path}"))
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            stdout.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

fn build(h: &SignedHypergraph, args: &StrategyArgs) -> Result<ExtendedFormulation> {
    let ef = rid_build(h, &args.strategy())?;
    for note in &ef.report.notes {
        log::info!("{note}");
    }
    Ok(ef)
}

/// Runs one parsed command. Returns `false` when a verification failed.
pub fn execute(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<bool> {
    match cli.command {
        Command::Analyze(a) => {
            let h = read_input(&a.input, stdin)?;
            let report = analyze(&h, a.cycle_cap)?;
            emit(&a.out, &serde_json::to_string_pretty(&report)?, stdout)?;
        }
        Command::Build(a) => {
            let h = read_input(&a.input, stdin)?;
            let ef = build(&h, &a.strategy)?;
            let text = match a.format {
                Format::Lp => to_lp_format(&ef),
                Format::Json => formulation_to_json(&ef),
            };
            emit(&a.out, &text, stdout)?;
        }
        Command::Export(a) => {
            let h = read_input(&a.input, stdin)?;
            let ef = build(&h, &a.strategy)?;
            emit(&a.out, &to_lp_format(&ef), stdout)?;
        }
        Command::Verify(a) => {
            let h = read_input(&a.input, stdin)?;
            let ef = match &a.formulation {
                Some(p) => {
                    let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                    formulation_from_json(&text).with_context(|| format!("parsing {}", p.display()))?
                }
                None => build(&h, &a.strategy)?,
            };
            let report = verify_hull(&h, &ef, a.trials, a.seed)?;
            writeln!(stdout, "{}", report.summary())?;
            if let Some(p) = &a.out {
                fs::write(p, serde_json::to_string_pretty(&report)?)?;
            }
            return Ok(report.all_pass);
        }
        Command::Demo(a) => return demo(&a, stdout),
    }
    Ok(true)
}

fn demo(a: &DemoArgs, stdout: &mut dyn Write) -> Result<bool> {
    let cases: [(&str, SignedHypergraph, StrategyKind); 3] = [
        ("long_cycle_4", LongCycle::new(4).signed(), StrategyKind::GapMaximal),
        ("two_components_12", two_components(12), StrategyKind::GapCycles),
        ("overlapping_pairs_5", overlapping_pairs(5), StrategyKind::Beta),
    ];
    if let Some(dir) = &a.write_instances {
        fs::create_dir_all(dir)?;
    }
    let mut ok = true;
    for (name, h, kind) in cases {
        if let Some(dir) = &a.write_instances {
            fs::write(dir.join(format!("{name}.json")), hypergraph_to_json(&h))?;
        }
        let ef = rid_build(&h, &Strategy::new(kind))?;
        let report = verify_hull(&h, &ef, a.trials, a.seed)?;
        writeln!(
            stdout,
            "{name}: strategy {kind}, {} vars, {} rows, {}",
            ef.report.variables,
            ef.report.rows,
            if report.all_pass { "PASS" } else { "FAIL" }
        )?;
        ok &= report.all_pass;
    }
    Ok(ok)
}

/// Entry point for the `pbp` binary.
pub fn main_entry() -> ExitCode {
    let _ = env_logger::Builder::from_env(env_logger::Env::new().filter_or("PBP_LOG", "warn")).try_init();
    let cli = Cli::parse();
    match execute(cli, &mut io::stdin().lock(), &mut io::stdout().lock()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Parses `args` (without the program name) and runs them.
pub fn run_args<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<bool>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("pbp")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => bail!("{e}"),
    };
    execute(cli, stdin, stdout)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str], input: &str) -> (Result<bool>, String) {
        let mut out = Vec::new();
        let r = run_args(args.iter().copied(), &mut input.as_bytes(), &mut out);
        (r, String::from_utf8(out).unwrap())
    }

    const PATH: &str = r#"{"nodes":["a","b","c"],"edges":[{"a":1,"b":-1},{"b":1,"c":1}]}"#;

    #[test]
    fn build_lp_from_stdin() {
        let (r, out) = run(&["build", "-", "--format", "lp"], PATH);
        assert!(r.unwrap());
        assert!(out.contains("Subject To") && out.ends_with("End\n"));
    }

    #[test]
    fn verify_passes() {
        let (r, out) = run(&["verify", "-", "--trials", "5"], PATH);
        assert!(r.unwrap(), "{out}");
    }

    #[test]
    fn targets_parse() {
        let cli = Cli::try_parse_from(["pbp", "build", "x.json", "--strategy", "split_cor4", "--target", "a,b;a,b,c"])
            .unwrap();
        let Command::Build(b) = cli.command else { panic!() };
        assert_eq!(b.strategy.strategy().targets.unwrap().len(), 2);
    }

    #[test]
    fn bad_strategy_is_rejected() {
        assert!(run(&["build", "-", "--strategy", "nested"], PATH).0.is_err());
    }
}
