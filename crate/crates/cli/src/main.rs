use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use bcrystal::characters::{super_character_sx, super_schur, verify_branching_expansion, verify_product_expansion};
use bcrystal::decompose::{branch_levi, enumerate_lr_pairs, lr_pair_decomposition, tensor_decompose};
use bcrystal::lr::{enumerate_lr, lr_coefficient};
use bcrystal::oracle::tensor_components;
use bcrystal::rsk::{rsk, rsk_inverse, SupportMatrix};
use bcrystal::stats::{delta_lr, nabla};
use bcrystal::verify::{self, component_dimension};
use bcrystal::{generate_crystal, CrystalGraph, Eps, GradedAlphabet, LrTableau, Partition, SkewShape, Tableau};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bctab", version, about = "Tableau models for type B and C crystals")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Crystal graphs, tensor products and Levi branching
    #[command(subcommand)]
    Crystal(CrystalCmd),
    /// The statistics Δ and ∇ of an LR tableau file
    #[command(subcommand)]
    Stat(StatCmd),
    /// Littlewood-Richardson coefficients and tableaux
    #[command(subcommand)]
    Lr(LrCmd),
    /// RSK on matrices given as "i j count" lines
    #[command(subcommand)]
    Rsk(RskCmd),
    /// Truncated characters
    #[command(subcommand)]
    Char(CharCmd),
    /// Acceptance checks
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args, Clone)]
struct TypeArg {
    /// Type tag: b (ε = 1) or c (ε = 2)
    #[arg(short = 't', long = "type", visible_alias = "epsilon", value_parser = parse_eps)]
    eps: Eps,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum CrystalCmd {
    /// Generate T(λ, n) truncated at rank k
    Graph {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(short = 'k', long)]
        rank: usize,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(short = 'n', long)]
        level: u32,
        #[arg(short = 'o', long, value_enum, default_value = "text")]
        output: Format,
    },
    /// Decompose T(μ, m) ⊗ T(ν, n) at rank k
    Tensor {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(short = 'k', long)]
        rank: usize,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(short = 'm', long)]
        m: u32,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        #[arg(short = 'n', long)]
        n: u32,
        /// Cross-check against LR pairs and component extraction
        #[arg(long)]
        check: bool,
    },
    /// Branching multiplicity of σ in T(λ, n)
    Branch {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(short = 'n', long)]
        level: u32,
        #[arg(long, value_parser = parse_partition)]
        sigma: Partition,
        /// Print the LR tableaux as well
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand)]
enum StatCmd {
    Delta {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(short = 'f', long)]
        file: PathBuf,
    },
    Nabla {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(short = 'f', long)]
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum LrCmd {
    Coeff {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
    },
    Enumerate {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        /// With a type and levels, list the LR pairs of the generalized rule instead
        #[arg(short = 't', long = "type", visible_alias = "epsilon", value_parser = parse_eps, requires_all = ["m", "n"])]
        eps: Option<Eps>,
        #[arg(short = 'm', long)]
        m: Option<u32>,
        #[arg(short = 'n', long)]
        n: Option<u32>,
    },
}

#[derive(Subcommand)]
enum RskCmd {
    /// Print κ(A) for a matrix file
    Map {
        #[arg(short = 'f', long)]
        file: PathBuf,
    },
    /// Round-trip and crystal checks on seeded random matrices
    Check {
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Args, Clone)]
struct AlphabetArg {
    /// Number of even letters
    #[arg(long, default_value_t = 2)]
    even: usize,
    /// Number of odd letters, placed after the even ones
    #[arg(long, default_value_t = 0)]
    odd: usize,
    /// Total degree cutoff
    #[arg(short = 'D', long, default_value_t = 4)]
    cutoff: usize,
}

#[derive(Subcommand)]
enum CharCmd {
    /// Super Schur polynomial of a straight shape
    Schur {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[command(flatten)]
        alphabet: AlphabetArg,
        #[arg(long)]
        json: bool,
    },
    /// The character S(λ, n)
    Sx {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(short = 'n', long)]
        level: u32,
        #[command(flatten)]
        alphabet: AlphabetArg,
        #[arg(long)]
        json: bool,
    },
    /// Check the branching expansion of S(λ, n), or with --mu/--m the product rule
    Verify {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(short = 'n', long)]
        level: u32,
        #[arg(long, value_parser = parse_partition, requires = "m")]
        mu: Option<Partition>,
        #[arg(short = 'm', long)]
        m: Option<u32>,
        #[command(flatten)]
        alphabet: AlphabetArg,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Run criteria 1 to 10
    All {
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// Run only these criteria
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
        #[arg(long)]
        json: bool,
    },
}

fn parse_eps(s: &str) -> Result<Eps, String> {
    s.parse().map_err(|e: bcrystal::Error| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: bcrystal::Error| e.to_string())
}

enum Failure {
    /// Invalid input: exit code 2.
    Usage(String),
    /// A check did not hold: exit code 1.
    Check(String),
}

impl From<bcrystal::Error> for Failure {
    fn from(e: bcrystal::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn alphabet(a: &AlphabetArg) -> GradedAlphabet {
    GradedAlphabet::mixed(a.even, a.odd)
}

fn crystal(cmd: CrystalCmd) -> Outcome {
    match cmd {
        CrystalCmd::Graph { ty, rank, lambda, level, output } => {
            let g = generate_crystal(&lambda, level, ty.eps, rank)?;
            match output {
                Format::Text => print!("{}", g.to_text()),
                Format::Json => println!("{}", serde_json::to_string_pretty(&g.to_json()).expect("json")),
                Format::Dot => print!("{}", g.to_dot()),
            }
        }
        CrystalCmd::Tensor { ty, rank, mu, m, nu, n, check } => {
            let b1 = generate_crystal(&mu, m, ty.eps, rank)?;
            let b2 = generate_crystal(&nu, n, ty.eps, rank)?;
            let d = tensor_decompose(&b1, &b2)?;
            for ((l, lev), c) in &d {
                let dim = component_dimension(l, *lev, ty.eps, rank).map_or("?".into(), |x| x.to_string());
                println!("(({l}),{lev}) x{c} dim {dim}");
            }
            if check {
                return tensor_check(&b1, &b2, &d, &mu, m, &nu, n, ty.eps, rank);
            }
        }
        CrystalCmd::Branch { ty, lambda, level, sigma, list } => {
            let us = branch_levi(&lambda, level, ty.eps, &sigma)?;
            println!("{}", us.len());
            if list {
                for u in &us {
                    println!("{}", u.base);
                }
            }
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn tensor_check(
    b1: &CrystalGraph,
    b2: &CrystalGraph,
    d: &bcrystal::decompose::Decomposition,
    mu: &Partition,
    m: u32,
    nu: &Partition,
    n: u32,
    eps: Eps,
    rank: usize,
) -> Outcome {
    let comps = tensor_components(b1, b2)?;
    let pairs = lr_pair_decomposition(mu, m, nu, n, eps, rank)?;
    if &comps != d || &pairs != d {
        return Err(Failure::Check(format!("components {comps:?}, LR pairs {pairs:?}")));
    }
    eprintln!("check: component extraction and LR pairs agree");
    Ok(())
}

fn lr_file(path: &PathBuf) -> Result<LrTableau, Failure> {
    let t: Tableau = read(path)?.parse()?;
    Ok(LrTableau::new(t)?)
}

fn stat(cmd: StatCmd) -> Outcome {
    match cmd {
        StatCmd::Delta { ty, file } => {
            let u = lr_file(&file)?;
            if !u.inner().is_in_px(ty.eps) {
                return Err(Failure::Usage(format!("inner shape {} is not in P_x (parts must be divisible by ε)", u.inner())));
            }
            println!("{}", delta_lr(&u, ty.eps));
        }
        StatCmd::Nabla { ty, file } => println!("{}", nabla(&lr_file(&file)?, ty.eps)?),
    }
    Ok(())
}

fn lr(cmd: LrCmd) -> Outcome {
    match cmd {
        LrCmd::Coeff { lambda, mu, nu } => println!("{}", lr_coefficient(&lambda, &mu, &nu)),
        LrCmd::Enumerate { lambda, mu, nu, eps: Some(eps), m: Some(m), n: Some(n) } => {
            let pairs = enumerate_lr_pairs(&lambda, &mu, &nu, m, n, eps)?;
            println!("{}", pairs.len());
            for (u, v) in &pairs {
                println!("U:\n{}V:\n{}", u.base, v.base);
            }
        }
        LrCmd::Enumerate { lambda, mu, nu, .. } => {
            let all = enumerate_lr(&lambda, &mu, &nu);
            println!("{}", all.len());
            for u in &all {
                println!("{}", u.base);
            }
        }
    }
    Ok(())
}

fn rsk_cmd(cmd: RskCmd) -> Outcome {
    match cmd {
        RskCmd::Map { file } => {
            let a: SupportMatrix = read(&file)?.parse()?;
            let (p, q) = rsk(&a);
            print!("P:\n{p}Q:\n{q}");
            if rsk_inverse(&p, &q)? != a {
                return Err(Failure::Check("inverse does not recover the matrix".into()));
            }
        }
        RskCmd::Check { seed } => report(&[verify::criterion_7(seed)], false)?,
    }
    Ok(())
}

fn char_cmd(cmd: CharCmd) -> Outcome {
    let show = |p: bcrystal::characters::CharacterPoly, json: bool| {
        if json {
            println!("{}", p.to_json());
        } else {
            println!("{p}");
        }
    };
    match cmd {
        CharCmd::Schur { shape, alphabet: a, json } => show(super_schur(&SkewShape::straight(shape), &alphabet(&a), a.cutoff), json),
        CharCmd::Sx { ty, lambda, level, alphabet: a, json } => {
            show(super_character_sx(&lambda, level, ty.eps, &alphabet(&a), a.cutoff)?, json)
        }
        CharCmd::Verify { ty, lambda, level, mu, m, alphabet: a } => {
            let ok = match (mu, m) {
                (Some(mu), Some(m)) => verify_product_expansion(&mu, m, &lambda, level, ty.eps, &alphabet(&a), a.cutoff)?,
                _ => verify_branching_expansion(&lambda, level, ty.eps, &alphabet(&a), a.cutoff)?,
            };
            println!("{}", if ok { "ok" } else { "mismatch" });
            if !ok {
                return Err(Failure::Check("expansion does not hold".into()));
            }
        }
    }
    Ok(())
}

fn report(reports: &[verify::Report], json: bool) -> Outcome {
    if json {
        println!("{}", serde_json::to_string_pretty(reports).expect("json"));
    } else {
        for r in reports {
            println!("{}", r.line());
        }
    }
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed).map(|r| r.id.to_string()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("failing criteria: {}", failed.join(", "))))
    }
}

fn verify_cmd(cmd: VerifyCmd) -> Outcome {
    let VerifyCmd::All { seed, only, json } = cmd;
    let ids: Vec<u8> = if only.is_empty() { (1..=10).collect() } else { only };
    let mut reports = Vec::new();
    for id in ids {
        reports.push(verify::run(id, seed).ok_or_else(|| Failure::Usage(format!("no criterion {id}")))?);
    }
    report(&reports, json)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = std::env::var("CRYSTAL_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second initialisation can only fail if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build_global();
    }
    let result = match cli.cmd {
        Cmd::Crystal(c) => crystal(c),
        Cmd::Stat(c) => stat(c),
        Cmd::Lr(c) => lr(c),
        Cmd::Rsk(c) => rsk_cmd(c),
        Cmd::Char(c) => char_cmd(c),
        Cmd::Verify(c) => verify_cmd(c),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
