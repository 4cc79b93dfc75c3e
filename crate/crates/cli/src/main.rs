use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use qrlab::codes::{
    extended_qr_code, is_prime, low_weight_codewords, minimum_distance, qr_code, Cache,
    MAX_ENUMERATION_DIMENSION,
};
use qrlab::designs::{
    derived_design, incidence_profile, linear_span, read_design, residual_at_point, verify_design,
    write_design,
};
use qrlab::groups::{design_automorphism_group, orbits_on_subsets, psl2, write_permutations};
use qrlab::{CodewordSet, Design, LinearCode, PermutationGroup};

mod report;

use report::{reproduce, Parameters};

#[derive(Parser)]
#[command(
    name = "qrlab",
    version,
    about = "Quadratic residue codes, their designs and automorphism groups"
)]
struct Cli {
    /// Worker threads for enumeration (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full [42,21,10] pipeline and check every claim
    Reproduce(ReproduceArgs),
    /// Build a quadratic residue code and enumerate its words
    Code(CodeArgs),
    /// Inspect a design file
    Design(DesignArgs),
    /// Permutation groups: PSL(2,p) or the automorphism group of a design
    Group(GroupArgs),
}

#[derive(Args)]
struct ReproduceArgs {
    /// Skip the automorphism search (triple orbits then use PSL(2,41))
    #[arg(long)]
    skip_aut: bool,
    /// 41 runs the length-42 pipeline; 73 runs only the length-74 check
    #[arg(long, default_value_t = 41)]
    p: u64,
    /// Include the length-74 minimum-weight check
    #[arg(long)]
    long: bool,
    /// Print the report as one JSON document
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum WordFormat {
    /// One 0/1 string per word, coordinate 0 first
    Bits,
    /// Support of each word as ascending point indices
    Points,
    /// Design exchange file (header line plus supports)
    Design,
}

#[derive(Args)]
struct CodeArgs {
    /// Prime length, p ≡ ±1 mod 8
    p: u64,
    /// Append the overall parity bit
    #[arg(long)]
    extended: bool,
    /// Print the full weight distribution
    #[arg(long, group = "action")]
    weights: bool,
    /// Print the minimum weight and the number of minimum-weight words
    #[arg(long, group = "action")]
    min_weight: bool,
    /// Print every codeword of this weight
    #[arg(long, value_name = "W", group = "action")]
    dump_words: Option<usize>,
    #[arg(long, value_enum, default_value_t = WordFormat::Bits)]
    format: WordFormat,
}

#[derive(Args)]
struct DesignArgs {
    /// Design exchange file
    file: PathBuf,
    /// Check for a t-design and print its parameters
    #[arg(long, value_name = "T", group = "action")]
    verify: Option<usize>,
    /// Write the derived design at point X (or "inf")
    #[arg(long, value_name = "X", group = "action")]
    derived: Option<String>,
    /// Write the residual design at point X (or "inf")
    #[arg(long, value_name = "X", group = "action")]
    residual: Option<String>,
    /// Dimension of the GF(2) span of the blocks
    #[arg(long, group = "action")]
    span: bool,
    /// Output file for --derived and --residual (default: stdout)
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["psl", "aut"])))]
struct GroupArgs {
    /// PSL(2,p) on the projective line, ∞ = point p
    #[arg(long, value_name = "P")]
    psl: Option<u64>,
    /// Automorphism group of a design file
    #[arg(long, value_name = "FILE")]
    aut: Option<PathBuf>,
    /// Print the group order
    #[arg(long, group = "action")]
    order: bool,
    /// Print the orbits on S-subsets
    #[arg(long, value_name = "S", group = "action")]
    orbits: Option<usize>,
    /// Print generators in the permutation exchange format
    #[arg(long, group = "action")]
    generators: bool,
}

fn load_design(path: &Path) -> Result<Design> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    read_design(BufReader::new(file)).with_context(|| format!("reading {}", path.display()))
}

fn parse_point(text: &str, d: &Design) -> Result<usize> {
    if matches!(text, "inf" | "∞" | "infinity") {
        return Ok(d.points() - 1);
    }
    let x: usize = text
        .parse()
        .with_context(|| format!("bad point {text:?}"))?;
    if x >= d.points() {
        bail!("point {x} out of range for {} points", d.points());
    }
    Ok(x)
}

fn build_code(p: u64, extended: bool) -> Result<(qrlab::QrCodeSpec, LinearCode)> {
    Ok(if extended {
        extended_qr_code(p)?
    } else {
        qr_code(p)?
    })
}

fn words_of_weight(cache: &Cache, code: &LinearCode, w: usize) -> Result<CodewordSet> {
    if code.dimension() <= MAX_ENUMERATION_DIMENSION {
        Ok(cache.codewords_of_weight(code, w)?)
    } else {
        let mut sets = low_weight_codewords(code, w)?;
        Ok(sets.swap_remove(w))
    }
}

fn cmd_code(args: &CodeArgs, cache: &Cache, out: &mut impl Write) -> Result<()> {
    let (spec, code) = build_code(args.p, args.extended)?;
    let (n, k) = (code.len(), code.dimension());
    if let Some(w) = args.dump_words {
        let words = words_of_weight(cache, &code, w)?;
        match args.format {
            WordFormat::Bits => {
                for word in &words.words {
                    writeln!(out, "{word}")?;
                }
            }
            WordFormat::Points => {
                for word in &words.words {
                    let pts: Vec<String> = word.ones_iter().map(|p| p.to_string()).collect();
                    writeln!(out, "{}", pts.join(" "))?;
                }
            }
            WordFormat::Design => {
                let d = Design::new(n, w, words.words)?;
                write_design(&d, &mut *out)?;
            }
        }
        return Ok(());
    }
    if args.weights {
        let wd = cache.weight_distribution(&code)?;
        writeln!(out, "{wd}")?;
        return Ok(());
    }
    let d = match minimum_distance(&code)? {
        Some(md) => md.distance,
        None => 0,
    };
    if args.min_weight {
        let count = words_of_weight(cache, &code, d)?.len();
        writeln!(out, "minimum weight {d}, {count} words")?;
        return Ok(());
    }
    writeln!(out, "[{n},{k},{d}]")?;
    writeln!(out, "g = {}", spec.generator_poly)?;
    writeln!(out, "field GF(2^{}) modulo {}", spec.m, spec.field_modulus)?;
    Ok(())
}

fn cmd_design(args: &DesignArgs, out: &mut impl Write) -> Result<()> {
    let d = load_design(&args.file)?;
    let mut emit = |d: &Design| -> Result<()> {
        match &args.output {
            Some(path) => {
                let file =
                    File::create(path).with_context(|| format!("creating {}", path.display()))?;
                write_design(d, io::BufWriter::new(file))?;
            }
            None => write_design(d, &mut *out)?,
        }
        Ok(())
    };
    if let Some(x) = &args.derived {
        return emit(&derived_design(&d, parse_point(x, &d)?)?);
    }
    if let Some(x) = &args.residual {
        return emit(&residual_at_point(&d, parse_point(x, &d)?)?);
    }
    if args.span {
        let span = linear_span(&d);
        write!(out, "dimension {}", span.dimension())?;
        let p = d.points() as u64 - 1;
        if d.points() > 1 && is_prime(p) && (p % 8 == 1 || p % 8 == 7) {
            let (_, c) = extended_qr_code(p)?;
            let equal = span.rref_generator() == c.rref_generator();
            write!(
                out,
                ", equals extended QR({p}): {}",
                if equal { "yes" } else { "no" }
            )?;
        }
        writeln!(out)?;
        return Ok(());
    }
    let t = args.verify.unwrap_or(2);
    let v = verify_design(&d, t)?;
    match v.params() {
        Some(p) => writeln!(out, "{p}")?,
        None => writeln!(out, "not a {t}-design: {}", incidence_profile(&d, t)?)?,
    }
    Ok(())
}

fn cmd_group(args: &GroupArgs, out: &mut impl Write) -> Result<()> {
    let g: PermutationGroup = match (&args.psl, &args.aut) {
        (Some(p), _) => psl2(*p)?,
        (None, Some(path)) => design_automorphism_group(&load_design(path)?),
        (None, None) => bail!("one of --psl or --aut is required"),
    };
    if let Some(s) = args.orbits {
        let part = orbits_on_subsets(&g, s)?;
        let sizes: Vec<String> = part.sizes().iter().map(|s| s.to_string()).collect();
        writeln!(out, "{} orbits: {}", part.orbits.len(), sizes.join(", "))?;
        for o in &part.orbits {
            writeln!(out, "  {:?} size {}", o.representative, o.size)?;
        }
        return Ok(());
    }
    if args.generators {
        write_permutations(g.generators(), &mut *out)?;
        return Ok(());
    }
    writeln!(out, "{}", g.order())?;
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring worker threads")?;
    }
    let cache = Cache::from_env();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match &cli.command {
        Command::Reproduce(args) => {
            if args.p != 41 && args.p != 73 {
                bail!("reproduce covers p = 41 and p = 73, not {}", args.p);
            }
            if args.p == 73 && !args.long {
                bail!("--p 73 runs the length-74 check; pass --long to confirm");
            }
            let params = Parameters {
                p: args.p,
                long: args.long || args.p == 73,
                skip_aut: args.skip_aut,
                threads: rayon::current_num_threads(),
            };
            let doc = reproduce(params, &cache, !args.json);
            if args.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                write!(out, "{}", doc.render_text())?;
            }
            Ok(doc.passed)
        }
        Command::Code(args) => cmd_code(args, &cache, &mut out).map(|_| true),
        Command::Design(args) => cmd_design(args, &mut out).map(|_| true),
        Command::Group(args) => cmd_group(args, &mut out).map(|_| true),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
