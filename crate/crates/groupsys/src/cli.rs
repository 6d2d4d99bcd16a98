//! The `groupsys` command line.
//!
//! Every command reads its inputs, runs the analysis with all invariant
//! checks enabled and returns its report as a string. `--out` additionally
//! writes the command's machine-readable dump to a file, and `--format dump`
//! prints that dump instead of the text report.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chain::{
    block_code_chains, normal_chain, parse_walk, reconstruct_from_chain, standard_filling, write_chain_report,
    FillingKind, FillingSequence,
};
use crate::elementary::{
    construct_elementary_system, extract_elementary_system, global_group_system, global_product, parse_esys, recover_original,
    slice_sequence, structurally_equal, validate, write_esys, ConstructionStrategy, ElementarySystem, GlobalGroup,
};
use crate::error::{Error, Result};
use crate::generator::{elementary_group, parse_egrp_list, write_egrp, GeneratorContext};
use crate::group::{parse_grp, write_grp, FiniteGroup, GroupOps};
use crate::index::IndexPair;
use crate::system::{
    decode_to_tensor, encode_spectral_domain, encode_time_domain, extract_basis, parse_gsys, write_gsys, GroupSystem,
    TensorR,
};
use crate::text::{read_file, write_file, Lines};
use crate::Bounds;

const STRUCTURAL_BUDGET: usize = 5_000_000;

/// Command-line arguments.
#[derive(Debug, Parser)]
#[command(name = "groupsys", version, about = "Generator groups, normal chains and elementary systems of group systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

/// Flags shared by every command.
#[derive(Debug, Args)]
pub struct Options {
    /// Window `T0:T1`; restricts loaded systems, sets the window of `construct`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub window: Option<String>,
    /// Largest number of members or tensors enumerated.
    #[arg(long, global = true, default_value_t = Bounds::default().member_cap)]
    pub member_cap: usize,
    /// Largest group order built by extension searches.
    #[arg(long, global = true, default_value_t = Bounds::default().order_cap)]
    pub order_cap: usize,
    /// Largest number of filling orders enumerated.
    #[arg(long, global = true, default_value_t = Bounds::default().ordering_cap)]
    pub ordering_cap: usize,
    /// Seed for randomized spot checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Writes the machine-readable dump to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// What to print on standard output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Output selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable report.
    Text,
    /// Machine-readable dump.
    Dump,
}

/// The subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Checks a .grp, .egrp, .gsys or .esys file and summarizes it.
    Validate { path: PathBuf },
    /// Lists the generator basis; the dump holds every elementary group.
    Generators { path: PathBuf },
    /// Encodes label tensors, one per line in layout order, into members.
    Encode {
        path: PathBuf,
        tensors: PathBuf,
        /// Also runs the spectral-domain encoder and compares.
        #[arg(long)]
        spectral: bool,
    },
    /// Decodes members, one per line, into label tensors.
    Decode { path: PathBuf, sequences: PathBuf },
    /// Builds the normal chain of a filling and rebuilds the system from it.
    Chains {
        path: PathBuf,
        /// Standard filling: time_rev, time_fwd, spec_rev or spec_fwd.
        #[arg(long, conflicts_with = "walk")]
        filling: Option<FillingKind>,
        /// File holding a walk of `k,t` pairs.
        #[arg(long)]
        walk: Option<PathBuf>,
        /// Treats the system as a block code and runs every normal filling order.
        #[arg(long, conflicts_with_all = ["walk", "filling"])]
        block_code: bool,
    },
    /// Extracts the elementary system of a group system.
    Esys { path: PathBuf },
    /// Builds an elementary system from top-row seeds.
    Construct(ConstructArgs),
    /// Runs the extraction and assembly round trip on a .gsys or .esys file.
    Roundtrip {
        path: PathBuf,
        /// Number of randomly sampled product checks.
        #[arg(long, default_value_t = 64)]
        samples: usize,
    },
}

/// Arguments of `construct`.
#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Name of the constructed system.
    #[arg(long, default_value = "constructed")]
    pub name: String,
    /// Depth minus one.
    #[arg(long, default_value_t = 1)]
    pub ell: usize,
    /// Top-row seed group, a builtin name or a .grp file; once to replicate,
    /// or once per top-row pair.
    #[arg(long = "top", required = true)]
    pub top: Vec<String>,
    /// Kernel for a row, `M:GROUP[:EXT]`.
    #[arg(long = "kernel")]
    pub kernels: Vec<String>,
    /// Kernel for one pair, `K,T:GROUP[:EXT]`.
    #[arg(long = "override")]
    pub overrides: Vec<String>,
}

impl Options {
    /// The bounds selected by the flags.
    pub fn bounds(&self) -> Bounds {
        Bounds {
            member_cap: self.member_cap,
            order_cap: self.order_cap,
            ordering_cap: self.ordering_cap,
        }
    }

    fn window(&self) -> Result<Option<(i64, i64)>> {
        let Some(w) = &self.window else { return Ok(None) };
        let bad = || Error::parse(0, format!("cannot parse window `{w}`, expected T0:T1"));
        let (a, b) = w.split_once(':').ok_or_else(bad)?;
        Ok(Some((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)))
    }
}

/// Runs a parsed command line and returns what to print.
pub fn run(cli: &Cli) -> Result<String> {
    let o = &cli.options;
    let (text, dump) = match &cli.command {
        Command::Validate { path } => cmd_validate(path, o)?,
        Command::Generators { path } => cmd_generators(path, o)?,
        Command::Encode { path, tensors, spectral } => cmd_encode(path, tensors, *spectral, o)?,
        Command::Decode { path, sequences } => cmd_decode(path, sequences, o)?,
        Command::Chains {
            path,
            filling,
            walk,
            block_code,
        } => cmd_chains(path, *filling, walk.as_deref(), *block_code, o)?,
        Command::Esys { path } => cmd_esys(path, o)?,
        Command::Construct(args) => cmd_construct(args, o)?,
        Command::Roundtrip { path, samples } => cmd_roundtrip(path, *samples, o)?,
    };
    if let Some(out) = &o.out {
        write_file(out, &dump)?;
    }
    Ok(match o.format {
        Format::Text => text,
        Format::Dump => dump,
    })
}

fn extension(path: &Path) -> &str {
    path.extension().and_then(|e| e.to_str()).unwrap_or("")
}

/// Loads a `.gsys` file, restricted to `--window` when given.
pub fn load_system(path: &Path, o: &Options) -> Result<GroupSystem> {
    if extension(path) != "gsys" {
        return Err(Error::parse(0, format!("{} is not a .gsys file", path.display())));
    }
    let sys = parse_gsys(&read_file(path)?, &o.bounds())?;
    match o.window()? {
        Some((a, b)) => sys.restricted(a, b),
        None => Ok(sys),
    }
}

fn load_group(arg: &str) -> Result<FiniteGroup> {
    if let Some(g) = FiniteGroup::builtin(arg) {
        return Ok(g);
    }
    let path = Path::new(arg);
    if extension(path) == "grp" {
        return parse_grp(&read_file(path)?);
    }
    Err(Error::parse(0, format!("`{arg}` is neither a builtin group nor a .grp file")))
}

fn line(out: &mut String, args: std::fmt::Arguments<'_>) {
    out.write_fmt(args).expect("writing to a string");
    out.push('\n');
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn system_summary(out: &mut String, sys: &GroupSystem) -> Result<()> {
    let (t0, t1) = sys.window();
    line(out, format_args!("system {} window {t0} {t1}", sys.name()));
    line(out, format_args!("order={} ell={}", sys.order(), sys.ell()?));
    for t in sys.times() {
        let g = sys.alphabet(t);
        line(out, format_args!("alphabet {t} {} order {}", g.name(), g.order()));
    }
    Ok(())
}

/// `validate`: summary of a group, group system or elementary system.
pub fn cmd_validate(path: &Path, o: &Options) -> Result<(String, String)> {
    let mut out = String::new();
    match extension(path) {
        "grp" => {
            let g = parse_grp(&read_file(path)?)?;
            line(&mut out, format_args!("group {} order={} abelian={}", g.name(), g.order(), g.is_abelian()));
            Ok((out, write_grp(&g)))
        }
        "egrp" => {
            let tables = parse_egrp_list(&read_file(path)?)?;
            let mut dump = String::new();
            for t in &tables {
                line(&mut out, format_args!("egrp {} order={} positions={}", t.anchor, t.order(), t.positions.len()));
                dump.push_str(&write_egrp(t));
            }
            Ok((out, dump))
        }
        "esys" => {
            let es = parse_esys(&read_file(path)?, &o.bounds())?;
            let global = GlobalGroup::new(&es, &o.bounds())?;
            esys_summary(&mut out, &es);
            line(&mut out, format_args!("global order={}", global.order()));
            line(&mut out, format_args!("homomorphism condition holds"));
            Ok((out, write_esys(&es)))
        }
        _ => {
            let sys = load_system(path, o)?;
            system_summary(&mut out, &sys)?;
            let basis = extract_basis(&sys)?;
            line(&mut out, format_args!("complete generators={}", basis.sizes().iter().map(|s| s - 1).sum::<usize>()));
            Ok((out, write_gsys(&sys)))
        }
    }
}

/// `generators`: the generator basis, grouped by start time.
pub fn cmd_generators(path: &Path, o: &Options) -> Result<(String, String)> {
    let sys = load_system(path, o)?;
    let ctx = GeneratorContext::from_system(&sys)?;
    let basis = ctx.basis();
    let layout = basis.layout();
    let mut out = String::new();
    let (t0, t1) = sys.window();
    line(&mut out, format_args!("system {} window {t0} {t1} ell={}", sys.name(), basis.ell()));
    for t in sys.times() {
        let count = |keep: &dyn Fn(&IndexPair) -> bool| -> usize {
            layout
                .pairs()
                .iter()
                .enumerate()
                .filter(|(_, p)| keep(p))
                .map(|(i, _)| basis.transversal(i).len() - 1)
                .sum()
        };
        let starting = count(&|p| p.t == t);
        let active = count(&|p| p.t <= t && t <= p.end());
        line(&mut out, format_args!("time {t} starting {starting} active {active}"));
    }
    for (i, p) in layout.pairs().iter().enumerate() {
        for label in 1..basis.transversal(i).len() {
            line(&mut out, format_args!("gen ({},{}) label {label} seq {}", p.k, p.t, join(basis.generator(i, label))));
        }
    }
    line(&mut out, format_args!("tensors={}", basis.tensor_count()));
    let mut dump = String::new();
    for p in layout.pairs() {
        dump.push_str(&write_egrp(elementary_group(&ctx, p.k, p.t)?.as_ref()));
    }
    Ok((out, dump))
}

fn read_rows(path: &Path) -> Result<Vec<Vec<usize>>> {
    let text = read_file(path)?;
    Lines::new(&text).map(|l| l.parse_rest(0)).collect()
}

/// `encode`: members of label tensors.
pub fn cmd_encode(path: &Path, tensors: &Path, spectral: bool, o: &Options) -> Result<(String, String)> {
    let sys = load_system(path, o)?;
    let basis = extract_basis(&sys)?;
    let mut out = String::new();
    let mut dump = String::new();
    let mut differ = 0;
    for row in read_rows(tensors)? {
        let r = TensorR { choice: row };
        let a = encode_time_domain(&basis, &r)?;
        line(&mut dump, format_args!("{}", join(&a)));
        if spectral {
            let b = encode_spectral_domain(&basis, &r)?;
            let verdict = if a == b { "agree" } else { "differ" };
            differ += usize::from(a != b);
            line(&mut out, format_args!("time {} spectral {} {verdict}", join(&a), join(&b)));
        } else {
            line(&mut out, format_args!("{}", join(&a)));
        }
    }
    if spectral {
        line(&mut out, format_args!("disagreements {differ}"));
    }
    Ok((out, dump))
}

/// `decode`: label tensors of members.
pub fn cmd_decode(path: &Path, sequences: &Path, o: &Options) -> Result<(String, String)> {
    let sys = load_system(path, o)?;
    let basis = extract_basis(&sys)?;
    let mut out = String::new();
    for row in read_rows(sequences)? {
        line(&mut out, format_args!("{}", join(&decode_to_tensor(&basis, &row)?.choice)));
    }
    Ok((out.clone(), out))
}

/// `chains`: a normal chain with its reconstruction, or every block-code chain.
pub fn cmd_chains(
    path: &Path,
    filling: Option<FillingKind>,
    walk: Option<&Path>,
    block_code: bool,
    o: &Options,
) -> Result<(String, String)> {
    let sys = load_system(path, o)?;
    let ctx = GeneratorContext::from_system(&sys)?;
    if block_code {
        let chains = block_code_chains(&ctx, &o.bounds())?;
        let mut out = String::new();
        line(&mut out, format_args!("# block code {} length {} size {}", sys.name(), chains.length, ctx.order()));
        line(&mut out, format_args!("# full span generator {}", chains.full_span_generator));
        for (i, (walk, chain)) in chains.chains.iter().enumerate() {
            let pairs: Vec<String> = walk.iter().map(|p| format!("{},{}", p.k, p.t)).collect();
            let q = chain.quotient_orders();
            line(
                &mut out,
                format_args!("ordering {} walk {} quotients {} product {}", i + 1, pairs.join(" "), join(&q), q.iter().product::<usize>()),
            );
        }
        line(&mut out, format_args!("# orderings {} truncated {}", chains.chains.len(), chains.truncated));
        return Ok((out.clone(), out));
    }
    let (f, label): (FillingSequence, String) = match walk {
        Some(w) => (parse_walk(ctx.layout(), &read_file(w)?)?, format!("walk {}", w.display())),
        None => {
            let kind = filling.unwrap_or(FillingKind::TimeRev);
            (standard_filling(ctx.layout(), kind), format!("filling {kind}"))
        }
    };
    let chain = normal_chain(&ctx, &f)?;
    let rebuilt = reconstruct_from_chain(&ctx, &chain)?;
    let headers = vec![
        format!("system {}", sys.name()),
        label,
        format!("order {}", ctx.order()),
    ];
    let mut report = write_chain_report(&chain, &headers);
    line(&mut report, format_args!("# reconstructed {} members exactly", rebuilt.order()));
    Ok((report.clone(), report))
}

fn esys_summary(out: &mut String, es: &ElementarySystem) {
    let (t0, t1) = es.window();
    line(out, format_args!("esys {} depth {} window {t0} {t1}", es.name(), es.depth()));
    for (p, table) in es.layout().pairs().iter().zip(es.tables()) {
        let size = es.label_sizes()[es.layout().position(*p).expect("layout pair")];
        line(out, format_args!("pair ({},{}) labels {size} group order {}", p.k, p.t, table.order()));
    }
}

/// `esys`: the elementary system of a group system.
pub fn cmd_esys(path: &Path, o: &Options) -> Result<(String, String)> {
    let sys = load_system(path, o)?;
    let ctx = GeneratorContext::from_system(&sys)?;
    let es = extract_elementary_system(&ctx)?;
    let mut out = String::new();
    esys_summary(&mut out, &es);
    Ok((out, write_esys(&es)))
}

fn parse_choice(arg: &str) -> Result<(&str, FiniteGroup, usize)> {
    let bad = || Error::parse(0, format!("cannot parse kernel `{arg}`"));
    let mut parts = arg.splitn(3, ':');
    let at = parts.next().ok_or_else(bad)?;
    let group = load_group(parts.next().ok_or_else(bad)?)?;
    let ext = match parts.next() {
        Some(e) => e.parse().map_err(|_| bad())?,
        None => 0,
    };
    Ok((at, group, ext))
}

/// Parses the kernel and override flags of `construct`.
pub fn strategy_from_args(args: &ConstructArgs) -> Result<ConstructionStrategy> {
    let mut strategy = ConstructionStrategy::default();
    for arg in &args.kernels {
        let (m, g, ext) = parse_choice(arg)?;
        let m = m.parse().map_err(|_| Error::parse(0, format!("cannot parse row in `{arg}`")))?;
        strategy = strategy.with_row(m, g, ext);
    }
    for arg in &args.overrides {
        let (at, g, ext) = parse_choice(arg)?;
        let bad = || Error::parse(0, format!("cannot parse pair in `{arg}`"));
        let (k, t) = at.split_once(',').ok_or_else(bad)?;
        strategy = strategy.with_override(IndexPair::new(k.parse().map_err(|_| bad())?, t.parse().map_err(|_| bad())?), g, ext);
    }
    Ok(strategy)
}

fn verify_assembly(out: &mut String, es: &ElementarySystem, o: &Options) -> Result<GroupSystem> {
    let sys = global_group_system(es, &o.bounds())?;
    line(out, format_args!("global system order={} ell={}", sys.order(), sys.ell()?));
    let ctx = GeneratorContext::from_system(&sys)?;
    let back = extract_elementary_system(&ctx)?;
    if structurally_equal(es, &back, STRUCTURAL_BUDGET)?.is_none() {
        return Err(Error::InvariantViolation(
            "the re-extracted elementary system is not structurally equal to the input".into(),
        ));
    }
    line(out, format_args!("re-extracted elementary system is structurally equal"));
    Ok(sys)
}

/// `construct`: an elementary system built from seeds, with its assembled
/// group system verified and re-extracted.
pub fn cmd_construct(args: &ConstructArgs, o: &Options) -> Result<(String, String)> {
    let window = o.window()?.unwrap_or((0, 3));
    let seeds = args.top.iter().map(|s| load_group(s)).collect::<Result<Vec<_>>>()?;
    let strategy = strategy_from_args(args)?;
    let es = construct_elementary_system(&args.name, args.ell, window, &seeds, &strategy, &o.bounds())?;
    validate(&es, &o.bounds())?;
    let mut out = String::new();
    esys_summary(&mut out, &es);
    verify_assembly(&mut out, &es, o)?;
    Ok((out, write_esys(&es)))
}

/// `roundtrip`: extraction, recovery and reassembly, with sampled product checks.
pub fn cmd_roundtrip(path: &Path, samples: usize, o: &Options) -> Result<(String, String)> {
    let mut out = String::new();
    let es = if extension(path) == "esys" {
        parse_esys(&read_file(path)?, &o.bounds())?
    } else {
        let sys = load_system(path, o)?;
        let ctx = GeneratorContext::from_system(&sys)?;
        let es = extract_elementary_system(&ctx)?;
        let back = recover_original(&es, &ctx, &o.bounds())?;
        line(&mut out, format_args!("recovered {} members exactly", back.order()));
        es
    };
    esys_summary(&mut out, &es);
    let sys = verify_assembly(&mut out, &es, o)?;
    let global = GlobalGroup::new(&es, &o.bounds())?;
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let indices: Vec<usize> = (0..global.order()).collect();
    for _ in 0..samples {
        let a = *indices.choose(&mut rng).expect("nonempty group");
        let b = *indices.choose(&mut rng).expect("nonempty group");
        let (va, vb) = (&global.tensors()[a], &global.tensors()[b]);
        let product = slice_sequence(&es, &global_product(&es, va, vb)?)?;
        let expected = sys.multiply(&slice_sequence(&es, va)?, &slice_sequence(&es, vb)?);
        if product != expected || sys.index_of(&product).is_none() {
            return Err(Error::InvariantViolation(format!("sampled product of tensors {a} and {b} disagrees")));
        }
    }
    line(&mut out, format_args!("sampled products {samples} seed {} agree", o.seed));
    Ok((out, write_esys(&es)))
}
