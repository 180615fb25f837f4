//! Command line front end.
//!
//! Exit codes: 0 success or verified, 1 usage error or malformed input,
//! 2 property violated or not a member, 3 inconclusive (descent stalled).

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{parse_rational, AlgebraSpec, Family, MassVector, Rational};
use crate::cartan::ConsecutiveSet;
use crate::chains::{blowup_step, chain_word, closed_form, CaseTag, Decomposition};
use crate::error::Error;
use crate::orbit::{
    descend_to_zero, enumerate_with, export_graph, EnumerateOptions, GraphFormat, Verdict,
};
use crate::permutations::{fold_ct_to_a, rotate_vector, CyclicRotation, SPermC};
use crate::weyl::{apply_word, pohozaev_residual, presentation_relations};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATED: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "toda-weyl",
    version,
    about = "Exact affine Weyl group local-mass calculus for affine Toda systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    A,
    Ct,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::A => Family::AffineA,
            FamilyArg::Ct => Family::AffineCt,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutArg {
    Dot,
    Json,
    Csv,
}

impl From<OutArg> for GraphFormat {
    fn from(o: OutArg) -> Self {
        match o {
            OutArg::Dot => GraphFormat::Dot,
            OutArg::Json => GraphFormat::Json,
            OutArg::Csv => GraphFormat::Csv,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate the orbit of zero up to a word length.
    Orbit {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value = "json")]
        out: OutArg,
        /// Numeric weights for csv and dot output: `ones` or `v1,v2,..`.
        #[arg(long)]
        mu: Option<String>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Certify orbit membership of a vector by descent to zero.
    Member {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = crate::orbit::DEFAULT_MAX_STEPS)]
        max_steps: usize,
    },
    /// Print a set-chain word and its closed-form target.
    Chain {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        rank: usize,
        /// Consecutive set `j:l`, meaning `{j..j+l}`.
        #[arg(long)]
        set: Option<String>,
        /// Wrap-around set `r2,r1`, meaning `{r2..n+1, 1..r1}` (type A).
        #[arg(long)]
        wrap: Option<String>,
        /// Compare the word applied to generic sigma with the closed form.
        #[arg(long)]
        verify: bool,
    },
    /// Check every defining relation of the group on generic sigma.
    Relations {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        rank: usize,
    },
    /// Print the Pohozaev residual of a vector.
    Pohozaev {
        #[arg(long)]
        input: PathBuf,
    },
    /// Fold a C^t vector into type A of rank 2n-1.
    Fold {
        #[arg(long)]
        input: PathBuf,
    },
    /// Rotate a type A vector: entry i of the output is entry f(i) of the input, f(1) = r.
    Rotate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long = "r")]
        r: usize,
    },
    /// Compose simple palindromic permutations f_{i0} o f_{i1} o ..
    Sperm {
        #[arg(long = "l")]
        l: usize,
        #[arg(long, value_delimiter = ',')]
        word: Vec<usize>,
        /// Check the constraint f(j) + f(2l+1-j) = 2l+1.
        #[arg(long)]
        check: bool,
    },
    /// Apply one blow-up step for a decomposition into blocks.
    BlowupStep {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        rank: usize,
        /// Block `j:l`; repeat for several blocks, listed in word order.
        #[arg(long = "block")]
        blocks: Vec<String>,
        /// Wrap-around block `r2,r1`, placed first (type A).
        #[arg(long)]
        wrap: Option<String>,
        /// Case tag (A-I, A-II, Ct-I .. Ct-IV); inferred when absent.
        #[arg(long)]
        case: Option<String>,
        /// Starting vector; zero when absent.
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

/// Usage failures carry exit code 1, everything else is reported by the
/// subcommand itself.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Decomposition { .. } | Error::Symmetry(_) => EXIT_VIOLATED,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Run with process arguments, writing to stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Run with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn io_fail(e: std::io::Error) -> Failure {
    Failure(EXIT_USAGE, format!("write failed: {e}"))
}

fn read_vector(path: &Path) -> Result<MassVector, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure(EXIT_USAGE, format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    }
    MassVector::from_json_str(&text)
        .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn parse_pair(text: &str, sep: char, what: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure(EXIT_USAGE, format!("malformed {what} {text:?}"));
    let (a, b) = text.split_once(sep).ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

fn parse_set(text: &str, size: usize) -> Result<ConsecutiveSet, Failure> {
    let (j, l) = parse_pair(text, ':', "set (expected j:l)")?;
    Ok(ConsecutiveSet::new(j, l, size)?)
}

fn parse_wrap(text: &str, size: usize) -> Result<ConsecutiveSet, Failure> {
    let (r2, r1) = parse_pair(text, ',', "wrap set (expected r2,r1)")?;
    Ok(ConsecutiveSet::wrap(r2, r1, size)?)
}

fn parse_mu(text: &str, spec: AlgebraSpec) -> Result<Vec<Rational>, Failure> {
    if text == "ones" {
        return Ok(crate::orbit::ones(spec));
    }
    let vals = text
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()?;
    if vals.len() != spec.size() {
        return Err(Failure(
            EXIT_USAGE,
            format!("--mu needs {} values, got {}", spec.size(), vals.len()),
        ));
    }
    Ok(vals)
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Orbit {
            family,
            rank,
            depth,
            out: fmt,
            mu,
            workers,
        } => {
            let spec = AlgebraSpec::new(family.into(), rank)?;
            let mu = mu.map(|m| parse_mu(&m, spec)).transpose()?;
            let nodes = enumerate_with(
                spec,
                depth,
                EnumerateOptions {
                    workers,
                    prune_repeats: true,
                },
            );
            let bytes = export_graph(&nodes, fmt.into(), mu.as_deref())?;
            out.write_all(&bytes).map_err(io_fail)?;
            Ok(EXIT_OK)
        }
        Command::Member { input, max_steps } => {
            let v = read_vector(&input)?;
            let report = descend_to_zero(&v, max_steps);
            writeln!(out, "{report}").map_err(io_fail)?;
            Ok(match report.verdict {
                Verdict::Member(w) => {
                    writeln!(out, "witness: {} applied to 0", w.inverse()).map_err(io_fail)?;
                    EXIT_OK
                }
                Verdict::NotInGammaN(_) => EXIT_VIOLATED,
                Verdict::DescentStalled(_) => EXIT_INCONCLUSIVE,
            })
        }
        Command::Chain {
            family,
            rank,
            set,
            wrap,
            verify,
        } => {
            let spec = AlgebraSpec::new(family.into(), rank)?;
            let set = match (set, wrap) {
                (Some(_), Some(_)) => {
                    return Err(Failure(EXIT_USAGE, "give either --set or --wrap".into()))
                }
                (Some(s), None) => parse_set(&s, spec.size())?,
                (None, Some(w)) => parse_wrap(&w, spec.size())?,
                (None, None) => {
                    return Err(Failure(
                        EXIT_USAGE,
                        "one of --set or --wrap is required".into(),
                    ))
                }
            };
            let plan = chain_word(&set, spec)?;
            let g = MassVector::generic(spec);
            let target = closed_form(&g, &set)?;
            writeln!(out, "set: {set}").map_err(io_fail)?;
            writeln!(out, "word: {}", plan.word).map_err(io_fail)?;
            writeln!(out, "length: {}", plan.word.len()).map_err(io_fail)?;
            writeln!(out, "closed form: {target}").map_err(io_fail)?;
            if !verify {
                return Ok(EXIT_OK);
            }
            let applied = apply_word(&plan.word, &g)?;
            writeln!(out, "word on generic: {applied}").map_err(io_fail)?;
            if applied == target {
                writeln!(out, "verdict: EQUAL").map_err(io_fail)?;
                Ok(EXIT_OK)
            } else {
                writeln!(out, "verdict: DIFFERENT").map_err(io_fail)?;
                Ok(EXIT_VIOLATED)
            }
        }
        Command::Relations { family, rank } => {
            let spec = AlgebraSpec::new(family.into(), rank)?;
            let mut failed = 0;
            let rels = presentation_relations(spec);
            for r in &rels {
                let ok = r.holds(spec);
                failed += usize::from(!ok);
                writeln!(out, "{} {r}", if ok { "PASS" } else { "FAIL" }).map_err(io_fail)?;
            }
            writeln!(out, "{} relations, {} failed", rels.len(), failed).map_err(io_fail)?;
            Ok(if failed == 0 { EXIT_OK } else { EXIT_VIOLATED })
        }
        Command::Pohozaev { input } => {
            let v = read_vector(&input)?;
            let q = pohozaev_residual(&v)?;
            writeln!(out, "residual: {q}").map_err(io_fail)?;
            Ok(if q.is_zero() { EXIT_OK } else { EXIT_VIOLATED })
        }
        Command::Fold { input } => {
            let v = read_vector(&input)?;
            let w = fold_ct_to_a(&v)?;
            writeln!(out, "{}", w.to_json_string()).map_err(io_fail)?;
            Ok(EXIT_OK)
        }
        Command::Rotate { input, r } => {
            let v = read_vector(&input)?;
            let rot = CyclicRotation::new(r, v.spec().size())?;
            let w = rotate_vector(&v, &rot)?;
            writeln!(out, "{}", w.to_json_string()).map_err(io_fail)?;
            Ok(EXIT_OK)
        }
        Command::Sperm { l, word, check } => {
            let f = SPermC::from_word(l, &word)?;
            writeln!(out, "f = {f}").map_err(io_fail)?;
            if !check {
                return Ok(EXIT_OK);
            }
            let ok = f.satisfies_constraint();
            writeln!(
                out,
                "f(j) + f({}-j) = {}: {}",
                2 * l + 1,
                2 * l + 1,
                if ok { "PASS" } else { "FAIL" }
            )
            .map_err(io_fail)?;
            Ok(if ok { EXIT_OK } else { EXIT_VIOLATED })
        }
        Command::BlowupStep {
            family,
            rank,
            blocks,
            wrap,
            case,
            input,
        } => {
            let spec = AlgebraSpec::new(family.into(), rank)?;
            let mut sets = Vec::new();
            if let Some(w) = wrap {
                sets.push(parse_wrap(&w, spec.size())?);
            }
            for b in &blocks {
                sets.push(parse_set(b, spec.size())?);
            }
            let d = match case {
                Some(c) => Decomposition::new(spec, c.parse::<CaseTag>()?, sets)?,
                None => Decomposition::classify(spec, sets)?,
            };
            let v = match input {
                Some(p) => read_vector(&p)?,
                None => MassVector::zero(spec),
            };
            let (word, result) = blowup_step(&v, &d)?;
            writeln!(out, "decomposition: {d}").map_err(io_fail)?;
            writeln!(out, "word: {word}").map_err(io_fail)?;
            writeln!(out, "{}", result.to_json_string()).map_err(io_fail)?;
            Ok(EXIT_OK)
        }
    }
}
