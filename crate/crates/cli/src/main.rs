use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use hnt_cli::{run_claims, ClaimOptions, Status};
use hnt_core::analysis::{
    analyze, classify_diagonal_2nt, project_code, verify_table1_row, Strategy, Table1Row,
};
use hnt_core::constructions::{
    all_code, block_diagonal_group, diag_full_group, full_aut_group, inj, k2_group, prod_code, rep,
    rep_l_code, section4_group, singleton, w_code,
};
use hnt_core::groups::GroupGens;
use hnt_core::hamming::{distance_partition, min_distance, Code};
use hnt_core::io::{read_code, read_group, write_code, write_group};
use hnt_core::{Budgets, HntError};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "hnt",
    version,
    about = "Codes in Hamming graphs and their automorphism groups"
)]
struct Cli {
    /// Override every enumeration budget (vertices, group elements, search nodes).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Seed for randomised checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a code from one of the families to a .hc file.
    Build(BuildArgs),
    /// Write generators of a standard group to a .hg file.
    Group(GroupArgs),
    /// Distance partition and transitivity report for a code under a group.
    Analyze {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        group: PathBuf,
        /// Highest level to check; defaults to the covering radius.
        #[arg(long)]
        s: Option<usize>,
    },
    /// Check the witness tables.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Brute-force classification of diagonally 2-neighbour-transitive codes.
    Classify {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum)]
        strategy: StrategyArg,
    },
    /// Project a code onto a set of entries.
    Project {
        #[arg(long)]
        code: PathBuf,
        /// Comma-separated 0-based entries.
        #[arg(long, value_delimiter = ',', required = true)]
        block: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the regression claims; exit status 1 if any fails.
    Claims {
        /// Shell-style pattern on claim ids, e.g. "table1-*".
        #[arg(long)]
        filter: Option<String>,
        /// Skip the clique search.
        #[arg(long)]
        skip_stretch: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Rep,
    Inj,
    W,
    All,
    Prod,
    RepL,
    Singleton,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    /// Symbol of a single-word code.
    #[arg(long, default_value_t = 0)]
    a: u32,
    /// Inner code for prod and rep-l.
    #[arg(long)]
    inner: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupName {
    /// Diag_m(S_q) x S_m.
    Diag,
    /// S_q wr S_m.
    Full,
    /// (Diag_2(S_q))^l x (S_2 wr S_l).
    K2,
    /// (Diag_k(S_q))^l x (S_k wr S_l).
    BlockDiagonal,
    /// Product construction over Diag_k(S_q) x S_k.
    Section4,
}

#[derive(Args)]
struct GroupArgs {
    #[arg(value_enum)]
    name: GroupName,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Witnesses mu, nu in C_2 with different Num profiles.
    Table1 {
        #[arg(long)]
        row: Table1Row,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// For the allpq row: m = p*q.
        #[arg(long)]
        p: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    AllSubsets,
    SubgroupOrbits,
}

fn need(value: Option<usize>, name: &str) -> anyhow::Result<usize> {
    value.with_context(|| format!("--{name} is required here"))
}

fn load_code(path: &Path) -> anyhow::Result<Code> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_code(&text).with_context(|| format!("parsing {}", path.display()))
}

fn load_group(path: &Path) -> anyhow::Result<GroupGens> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_group(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(text: &str, output: Option<&Path>) -> anyhow::Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn words_json(code: &Code) -> Vec<Vec<u32>> {
    code.words().map(|w| w.symbols().to_vec()).collect()
}

fn build(a: &BuildArgs) -> anyhow::Result<Code> {
    let code = match a.family {
        Family::Rep => rep(need(a.m, "m")?, need(a.q, "q")?)?,
        Family::Inj => inj(need(a.m, "m")?, need(a.q, "q")?)?,
        Family::W => w_code(need(a.m, "m")?)?,
        Family::All => all_code(need(a.p, "p")?, need(a.q, "q")?)?,
        Family::Singleton => singleton(need(a.m, "m")?, need(a.q, "q")?, a.a)?,
        Family::Prod | Family::RepL => {
            let inner = load_code(
                a.inner
                    .as_deref()
                    .context("--inner <file> is required here")?,
            )?;
            let l = need(a.l, "l")?;
            if matches!(a.family, Family::Prod) {
                prod_code(&inner, l)?
            } else {
                rep_l_code(&inner, l)?
            }
        }
    };
    Ok(code)
}

fn group(a: &GroupArgs, budgets: &Budgets) -> anyhow::Result<GroupGens> {
    let g = match a.name {
        GroupName::Diag => diag_full_group(need(a.m, "m")?, need(a.q, "q")?)?,
        GroupName::Full => full_aut_group(need(a.m, "m")?, need(a.q, "q")?)?,
        GroupName::K2 => k2_group(need(a.l, "l")?, need(a.q, "q")?)?,
        GroupName::BlockDiagonal => {
            block_diagonal_group(need(a.k, "k")?, need(a.l, "l")?, need(a.q, "q")?)?
        }
        GroupName::Section4 => {
            let x = diag_full_group(need(a.k, "k")?, need(a.q, "q")?)?;
            section4_group(&x, None, need(a.l, "l")?, budgets.elements)?
        }
    };
    Ok(g)
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let budgets = match cli.budget {
        Some(n) => Budgets {
            vertices: n,
            elements: n,
            search_nodes: n,
        },
        None => Budgets::default(),
    };
    match cli.command {
        Command::Build(a) => {
            let code = build(&a)?;
            emit(&write_code(&code), a.output.as_deref())?;
        }
        Command::Group(a) => {
            let g = group(&a, &budgets)?;
            emit(&write_group(&g), a.output.as_deref())?;
        }
        Command::Analyze { code, group, s } => {
            let (c, x) = (load_code(&code)?, load_group(&group)?);
            let r = analyze(&x, &c, s, &budgets)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                println!("H({},{}), |C| = {}", r.m, r.q, r.code_size);
                match r.delta {
                    Some(d) => println!("delta = {d}"),
                    None => println!("delta undefined (single codeword)"),
                }
                println!("rho = {}", r.rho);
                for l in &r.levels {
                    println!(
                        "C_{}: {} vertices, transitive: {}",
                        l.r, l.size, l.transitive
                    );
                }
                println!(
                    "diagonal: {}, transitive on entries: {}",
                    r.diagonal, r.entry_transitive
                );
                match (r.alphabet_group_order, r.almost_simple) {
                    (Some(n), Some(a)) => println!("alphabet group order {n}, almost simple: {a}"),
                    _ => println!("alphabet group not enumerated within budget"),
                }
                println!("verdict: {}", r.verdict);
            }
            return Ok(if r.verdict { 0 } else { 1 });
        }
        Command::Verify {
            what: VerifyCommand::Table1 { row, m, q, p },
        } => {
            let (m0, q0) = row.smallest_params();
            let q = q.unwrap_or(q0);
            let m = match (m, p) {
                (Some(m), _) => m,
                (None, Some(p)) => p * q,
                (None, None) => m0,
            };
            let r = verify_table1_row(row, m, q)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                println!("{} row, (m,q) = ({m},{q})", r.row);
                println!("mu = {:?}  Num {}", r.mu, r.num_mu);
                println!("nu = {:?}  Num {}", r.nu, r.num_nu);
                for (name, dm, dn) in &r.distances {
                    println!("d(mu, {name}) = {dm}, d(nu, {name}) = {dn}");
                }
                println!(
                    "profiles differ: {}, orbits separate: {}",
                    r.profiles_differ, r.orbit_separates
                );
                println!("{}", if r.pass { "PASS" } else { "FAIL" });
            }
            return Ok(if r.pass { 0 } else { 1 });
        }
        Command::Classify { m, q, strategy } => {
            let strategy = match strategy {
                StrategyArg::AllSubsets => Strategy::AllSubsets,
                StrategyArg::SubgroupOrbits => Strategy::SubgroupOrbits,
            };
            let c = classify_diagonal_2nt(m, q, strategy, &budgets)?;
            if cli.json {
                let codes: Vec<_> = c.codes.iter().map(words_json).collect();
                let out = json!({
                    "m": c.m, "q": c.q, "strategy": c.strategy, "codes": codes,
                    "candidates": c.candidates, "positives": c.positives,
                    "subgroups": c.subgroups, "generation_stable": c.generation_stable, "notes": c.notes,
                });
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                println!(
                    "# H({m},{q}) {}: {} candidates, {} pass, {} up to equivalence",
                    c.strategy,
                    c.candidates,
                    c.positives,
                    c.codes.len()
                );
                for note in &c.notes {
                    println!("# note: {note}");
                }
                for (i, code) in c.codes.iter().enumerate() {
                    println!("# class {} (size {})", i + 1, code.len());
                    print!("{}", write_code(code));
                }
            }
        }
        Command::Project {
            code,
            block,
            output,
        } => {
            let c = load_code(&code)?;
            let p = project_code(&c, &block)?;
            let rho = distance_partition(&p, budgets.vertices)?.covering_radius();
            let delta = match min_distance(&p) {
                Ok(d) => Some(d),
                Err(HntError::UndefinedForSingleton) => None,
                Err(e) => return Err(e.into()),
            };
            if cli.json {
                let out = json!({
                    "block": block, "size": p.len(), "delta": delta, "rho": rho,
                    "complete": p.is_complete(), "words": words_json(&p),
                });
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                let delta = delta.map_or("undefined".to_string(), |d| d.to_string());
                let text = format!(
                    "# |pi_J(C)| = {}, delta = {delta}, rho = {rho}\n{}",
                    p.len(),
                    write_code(&p)
                );
                emit(&text, output.as_deref())?;
            }
        }
        Command::Claims {
            filter,
            skip_stretch,
        } => {
            let opts = ClaimOptions {
                seed: cli.seed,
                budgets,
                skip_stretch,
            };
            let r = run_claims(filter.as_deref(), &opts);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                for c in &r.claims {
                    let tag = match c.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Skipped => "SKIPPED",
                    };
                    println!("{tag:<7} {:<34} {:>7} ms  {}", c.id, c.elapsed_ms, c.detail);
                }
                println!("{} claims, {} failed", r.claims.len(), r.failed());
            }
            return Ok(r.exit_code());
        }
    }
    Ok(0)
}

fn exit_code_for(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<HntError>() {
        Some(h) if h.is_budget() => 3,
        _ => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
