//! `hecke-blocks`: enumerate multipartitions, classify blocks of G(r,1,n) and
//! G(r,p,n) Hecke algebras, and run the verification sweeps.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a verification found a
//! counterexample.

mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use cyclotomic_blocks::clifford::GrpnParams;
use cyclotomic_blocks::residue::parse_rational;
use cyclotomic_blocks::sweep::{self, SweepReport};
use cyclotomic_blocks::{
    enumerate_multipartitions, grpn_blocks, residue_classes, verify_full_period_claim, HeckeParamsG1, Rational,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "hecke-blocks", version, about = "Blocks of cyclotomic Hecke algebras of types G(r,1,n) and G(r,p,n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; json and csv are byte-stable, table is for reading.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List all r-partitions of n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Blocks of type G(r,1,n): residue classes of multipartitions.
    #[command(name = "blocks-r1")]
    BlocksR1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Blocks of type G(r,p,n) on the label set Λ⁺.
    #[command(name = "blocks-rpn")]
    BlocksRpn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Run a verification, on one instance (when --h is given) or over a sweep.
    Verify {
        #[arg(value_enum)]
        check: CheckKind,
        #[command(flatten)]
        args: VerifyArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    /// Jantzen rim-hook closure equals residue classes.
    Lm,
    /// Shifting components rotates residue contents by −i/p.
    Shift,
    /// Non-Γ multipartitions have a residue partner of full shift period.
    Claim,
}

#[derive(Debug, Args)]
struct ParamArgs {
    /// The parameter h, as "a/b".
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_arg)]
    h: Rational,
    /// Comma-separated k_1,k_2,… (defaults to all zero).
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_list)]
    k: Option<RationalList>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_arg)]
    h: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_list)]
    k: Option<RationalList>,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    /// Largest rank in the sweep [default: 2 for lm, 4 otherwise].
    #[arg(long)]
    max_r: Option<usize>,
    #[arg(long, default_value_t = 6)]
    max_den: i64,
}

#[derive(Debug, Clone)]
struct RationalList(Vec<Rational>);

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_rational_list(s: &str) -> Result<RationalList, String> {
    if s.trim().is_empty() {
        return Ok(RationalList(Vec::new()));
    }
    s.split(',').map(parse_rational_arg).collect::<Result<Vec<_>, _>>().map(RationalList)
}

fn k_values(k: Option<RationalList>, len: usize) -> Vec<Rational> {
    k.map(|l| l.0).unwrap_or_else(|| vec![Rational::from_integer(0); len])
}

enum Outcome {
    Done(String),
    Counterexample(String),
}

fn run(cli: Cli) -> Result<Outcome> {
    let fmt = cli.format;
    let text = match cli.command {
        Command::Enumerate { n, r } => {
            if r == 0 {
                bail!("--r must be positive");
            }
            output::enumeration(n, r, &enumerate_multipartitions(n, r), fmt)?
        }
        Command::BlocksR1 { n, r, params } => {
            if r == 0 {
                bail!("--r must be positive");
            }
            let hp = HeckeParamsG1::new(r, params.h, k_values(params.k, r - 1))?;
            output::r1_report(&residue_classes(n, r, &hp)?, fmt)?
        }
        Command::BlocksRpn { n, r, p, params } => {
            let d = if p > 0 && r % p == 0 { r / p } else { 1 };
            let gp = GrpnParams::new(n, r, p, params.h, k_values(params.k, d.saturating_sub(1)))?;
            output::rpn_report(&grpn_blocks(&gp)?, fmt)?
        }
        Command::Verify { check, args } => return verify(check, args, fmt),
    };
    Ok(Outcome::Done(text))
}

fn verify(check: CheckKind, a: VerifyArgs, fmt: Format) -> Result<Outcome> {
    let text_and_pass = match (check, a.h) {
        (CheckKind::Lm, Some(h)) => {
            let (n, r) = (a.n.context("--n is required with --h")?, a.r.context("--r is required with --h")?);
            if r == 0 {
                bail!("--r must be positive");
            }
            let hp = HeckeParamsG1::new(r, h, k_values(a.k, r - 1))?;
            sweep_out(sweep::check_lm(n, &hp)?, fmt)?
        }
        (CheckKind::Lm, None) => sweep_out(sweep::sweep_lm(a.max_n, a.max_r.unwrap_or(2), a.max_den)?, fmt)?,
        (CheckKind::Shift | CheckKind::Claim, Some(h)) => {
            let n = a.n.context("--n is required with --h")?;
            let r = a.r.context("--r is required with --h")?;
            let p = a.p.context("--p is required with --h")?;
            let d = if p > 0 && r % p == 0 { r / p } else { 1 };
            let gp = GrpnParams::new(n, r, p, h, k_values(a.k, d.saturating_sub(1)))?;
            if check == CheckKind::Shift {
                let out = sweep::check_shift(&gp)?;
                sweep_out(sweep::single_grpn("shift", &gp, out.pass, out.clone()), fmt)?
            } else {
                let out = verify_full_period_claim(&gp)?;
                sweep_out(sweep::single_grpn("claim", &gp, out.pass, out.clone()), fmt)?
            }
        }
        (CheckKind::Shift | CheckKind::Claim, None) => {
            let ranks: Vec<usize> = (1..=a.max_r.unwrap_or(4)).collect();
            let ps: Vec<usize> = match a.p {
                Some(p) => vec![p],
                None => (2..=*ranks.last().unwrap_or(&1)).collect(),
            };
            if check == CheckKind::Shift {
                sweep_out(sweep::sweep_shift(a.max_n, &ranks, &ps, a.max_den)?, fmt)?
            } else {
                sweep_out(sweep::sweep_claim(a.max_n, &ranks, &ps, a.max_den)?, fmt)?
            }
        }
    };
    let (text, pass) = text_and_pass;
    Ok(if pass { Outcome::Done(text) } else { Outcome::Counterexample(text) })
}

fn sweep_out<W: serde::Serialize>(rep: SweepReport<W>, fmt: Format) -> Result<(String, bool)> {
    Ok((output::sweep(&rep, fmt)?, rep.pass))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = cli.out.clone();
    let result = run(cli).and_then(|outcome| match outcome {
        Outcome::Done(text) => emit(&text, out.as_ref()).map(|_| 0),
        Outcome::Counterexample(text) => emit(&text, out.as_ref()).map(|_| 2),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
