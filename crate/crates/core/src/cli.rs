//! Command-line front end. Ranks are given as printed in the group name:
//! `--n` for `Sp_2n`, `--N` for `GL_N`, `O_N` and `SO_N`.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::characters::{irreducible_character, PowerKind};
use crate::error::{Error, Result};
use crate::group::{Family, GroupId};
use crate::modification::modify;
use crate::partition::Partition;
use crate::pieri::{dual_pieri_set, pieri_set, tensor_decomposition};
use crate::schur::{lr_coefficient, nl_coefficient};
use crate::tableau::{burrill_count, main2_count, Side};
use crate::verify::{run_suites, GridOverrides};

#[derive(Parser, Debug)]
#[command(name = "classical-pieri", version, about = "Pieri rules for symplectic and orthogonal groups")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose V_mu tensor the one-row irreducible (r); with --lambda, list the witnesses.
    Pieri(PieriArgs),
    /// Decompose V_mu tensor the r-th exterior power; with --lambda, list the witnesses.
    DualPieri(PieriArgs),
    /// Decompose V_mu tensor a power of the defining representation.
    Tensor(TensorArgs),
    /// Apply the modification rule to a label.
    Modify(ModifyArgs),
    /// Print an irreducible character as a Laurent polynomial.
    Character(CharacterArgs),
    /// Littlewood-Richardson coefficient.
    Lr(TripleArgs),
    /// Newell-Littlewood coefficient.
    Nl(TripleArgs),
    /// Count both sides of an equinumeration.
    Count(CountArgs),
    /// Run a verification suite by name or number, or `all`.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GroupArg {
    Gl,
    Sp,
    So,
    O,
}

#[derive(Args, Debug)]
struct GroupSel {
    #[arg(long, value_enum)]
    group: GroupArg,
    /// Rank of Sp_2n.
    #[arg(long = "n")]
    n: Option<u32>,
    /// Dimension for GL_N, O_N and SO_N.
    #[arg(long = "N")]
    big_n: Option<u32>,
}

impl GroupSel {
    fn resolve(&self) -> Result<GroupId> {
        let need = |v: Option<u32>, flag: &str| {
            v.ok_or_else(|| Error::InvalidParameters(format!("--group {:?} needs {flag}", self.group).to_lowercase()))
        };
        match self.group {
            GroupArg::Sp => GroupId::new(Family::Sp, need(self.n, "--n")?),
            GroupArg::Gl => GroupId::new(Family::GL, need(self.big_n, "--N")?),
            GroupArg::O => GroupId::new(Family::O, need(self.big_n, "--N")?),
            GroupArg::So => GroupId::so(need(self.big_n, "--N")?),
        }
    }
}

#[derive(Args, Debug)]
struct PieriArgs {
    #[command(flatten)]
    group: GroupSel,
    #[arg(long)]
    mu: Partition,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    lambda: Option<Partition>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Sym,
    Ext,
    Row,
}

#[derive(Args, Debug)]
struct TensorArgs {
    #[command(flatten)]
    group: GroupSel,
    #[arg(long)]
    mu: Partition,
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long)]
    r: u32,
}

#[derive(Args, Debug)]
struct ModifyArgs {
    #[command(flatten)]
    group: GroupSel,
    #[arg(long)]
    lambda: Partition,
}

#[derive(Args, Debug)]
struct CharacterArgs {
    #[command(flatten)]
    group: GroupSel,
    #[arg(long)]
    lambda: Partition,
}

#[derive(Args, Debug)]
struct TripleArgs {
    #[arg(long)]
    mu: Partition,
    #[arg(long)]
    nu: Partition,
    #[arg(long)]
    lambda: Partition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    A,
    B,
    Both,
}

#[derive(Args, Debug)]
struct CountArgs {
    /// main1 to main5 (strip chains) or burrill1 to burrill4 (single cells).
    #[arg(long)]
    variant: String,
    /// Weight, for the strip-chain variants.
    #[arg(long)]
    alpha: Option<String>,
    /// Number of steps, for the single-cell variants.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long = "n")]
    n: Option<u32>,
    #[arg(long = "N")]
    big_n: Option<u32>,
    #[arg(long)]
    m: u32,
    #[arg(long, value_enum, default_value = "both")]
    side: SideArg,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    suite: String,
    #[arg(long)]
    max_size: Option<u32>,
    #[arg(long)]
    max_r: Option<u32>,
    #[arg(long)]
    max_rank: Option<u32>,
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code: 0 on success, 1 on a usage error, 2 when a
/// verification suite fails.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn emit(out: &mut dyn Write, text: impl std::fmt::Display) -> Result<()> {
    writeln!(out, "{text}").map_err(|e| Error::Internal(e.to_string()))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let json = cli.json;
    match &cli.command {
        Command::Pieri(a) | Command::DualPieri(a) => {
            let dual = matches!(cli.command, Command::DualPieri(_));
            let g = a.group.resolve()?;
            let kind = if dual { PowerKind::Ext } else { PowerKind::Row };
            let product = tensor_decomposition(g, &a.mu, kind, a.r)?;
            match &a.lambda {
                None if json => emit(out, serde_json::to_string(&product).unwrap())?,
                None => emit(out, &product)?,
                Some(lambda) => {
                    g.check_label(lambda)?;
                    let set = if dual { dual_pieri_set(&a.mu, lambda, a.r, g.rank) } else { pieri_set(&a.mu, lambda, a.r) };
                    let coefficient = product.coefficient(lambda);
                    if json {
                        emit(out, json!({"coefficient": coefficient.to_string(), "witnesses": set.witnesses}))?;
                    } else {
                        let list: Vec<String> = set.witnesses.iter().map(|w| w.to_string()).collect();
                        emit(out, format!("coefficient {coefficient}\nwitnesses {}", list.join(" ")))?;
                    }
                }
            }
        }
        Command::Tensor(a) => {
            let g = a.group.resolve()?;
            let kind = match a.kind {
                KindArg::Sym => PowerKind::Sym,
                KindArg::Ext => PowerKind::Ext,
                KindArg::Row => PowerKind::Row,
            };
            let product = tensor_decomposition(g, &a.mu, kind, a.r)?;
            if json {
                emit(out, serde_json::to_string(&product).unwrap())?;
            } else {
                emit(out, &product)?;
            }
        }
        Command::Modify(a) => {
            let image = modify(a.group.resolve()?, &a.lambda)?;
            if json {
                emit(out, serde_json::to_string(&image).unwrap())?;
            } else {
                emit(out, &image)?;
            }
        }
        Command::Character(a) => {
            let g = a.group.resolve()?;
            let chi = irreducible_character(g, &a.lambda)?;
            if json {
                emit(out, json!({"group": g, "label": a.lambda, "character": chi.to_string()}))?;
            } else {
                emit(out, &chi)?;
            }
        }
        Command::Lr(a) | Command::Nl(a) => {
            let value = if matches!(cli.command, Command::Lr(_)) {
                lr_coefficient(&a.mu, &a.nu, &a.lambda)
            } else {
                nl_coefficient(&a.mu, &a.nu, &a.lambda)
            };
            if json {
                emit(out, json!({"coefficient": value}))?;
            } else {
                emit(out, value)?;
            }
        }
        Command::Count(a) => count(a, json, out)?,
        Command::Verify(a) => {
            let overrides = GridOverrides { max_size: a.max_size, max_r: a.max_r, max_rank: a.max_rank };
            let reports = run_suites(&a.suite, overrides)?;
            let passed = reports.iter().all(|r| r.passed);
            if json {
                let text = match reports.as_slice() {
                    [one] => one.to_json(),
                    all => serde_json::to_string_pretty(all).unwrap(),
                };
                emit(out, text)?;
            } else {
                for r in &reports {
                    emit(out, r.summary())?;
                    for m in &r.mismatches {
                        emit(out, format!("  {}: expected {}, got {}", m.case, m.expected, m.actual))?;
                    }
                }
            }
            return Ok(if passed { 0 } else { 2 });
        }
    }
    Ok(0)
}

fn count(a: &CountArgs, json: bool, out: &mut dyn Write) -> Result<()> {
    let bad = |msg: &str| Error::InvalidParameters(msg.to_string());
    let (family, variant) = a
        .variant
        .strip_prefix("main")
        .map(|v| ("main", v))
        .or_else(|| a.variant.strip_prefix("burrill").map(|v| ("burrill", v)))
        .ok_or_else(|| bad("variant must be main1..main5 or burrill1..burrill4"))?;
    let variant: u8 = variant.parse().map_err(|_| bad("variant must end in a number"))?;
    let uses_big_n = (family, variant) == ("main", 3) || (family, variant) == ("burrill", 2);
    let rank = if uses_big_n { a.big_n.ok_or_else(|| bad("this variant needs --N"))? } else { a.n.ok_or_else(|| bad("this variant needs --n"))? };
    let side_count = |side| -> Result<u64> {
        if family == "main" {
            let alpha: Vec<u32> = serde_json::from_str(a.alpha.as_deref().ok_or_else(|| bad("main variants need --alpha"))?)
                .map_err(|e| Error::Parse { input: a.alpha.clone().unwrap_or_default(), reason: e.to_string() })?;
            main2_count(variant, side, &alpha, rank, a.m)
        } else {
            burrill_count(variant, side, a.k.ok_or_else(|| bad("burrill variants need --k"))?, rank, a.m)
        }
    };
    let sides: Vec<(&str, Side)> = match a.side {
        SideArg::A => vec![("a", Side::A)],
        SideArg::B => vec![("b", Side::B)],
        SideArg::Both => vec![("a", Side::A), ("b", Side::B)],
    };
    let mut values = serde_json::Map::new();
    let mut text = Vec::new();
    for (name, side) in sides {
        let v = side_count(side)?;
        values.insert(name.to_string(), v.into());
        text.push(format!("{name}={v}"));
    }
    if json {
        emit(out, serde_json::Value::Object(values))
    } else {
        emit(out, text.join(", "))
    }
}
