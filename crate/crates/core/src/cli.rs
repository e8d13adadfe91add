//! Command-line front end. The binary only forwards to [`run`].

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::error::{Error, Result};
use crate::fixtures;
use crate::io::{groupoid_to_json, read_groupoid, read_structure, StructureFile};
use crate::module::{initial_monoid_explorer, sagbi_finite, truncated_freeness};
use crate::orbits::orbits_of_degree_with_order;
use crate::polynomial::{OrderKind, Polynomial, TermOrder};
use crate::relational::layered::profile_values;
use crate::relational::{canonical_decomposition_with_guard, profile_series, profile_with_guard, Multiplicity, DEFAULT_GUARD};
use crate::reynolds::{reynolds, reynolds_is_sym_morphism};
use crate::series::{hilbert_series, quasi_polynomial, DEFAULT_MARGIN};
use crate::subset;

#[derive(Parser)]
#[command(name = "pgroupoid", version, about = "Invariant rings of permutation groupoids and profiles of relational structures")]
struct Cli {
    /// Worker threads for parallel parts of a computation.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GroupoidArg {
    /// Groupoid file: {"ground": [...], "generators": [{"map": {...}}]}.
    #[arg(long)]
    groupoid: PathBuf,
}

#[derive(Args)]
struct StructureArg {
    /// Structure file, finite or layered.
    #[arg(long)]
    structure: PathBuf,
    /// Raise the size limit for exhaustive isomorphism search.
    #[arg(long)]
    guard_override: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// List every element of the generated groupoid.
    Close(GroupoidArg),
    /// Orbits of monomials of one degree: leading monomial and orbit size.
    Orbits {
        #[command(flatten)]
        g: GroupoidArg,
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value = "shape")]
        order: OrderKind,
    },
    /// Hilbert series of the invariant ring over a chosen denominator.
    Hilbert {
        #[command(flatten)]
        g: GroupoidArg,
        /// Exponents n_i of the factors (1-Z^{n_i}); defaults to 1,2,..,|X|.
        #[arg(long, value_delimiter = ',')]
        den: Vec<u32>,
        #[arg(long, default_value_t = DEFAULT_MARGIN)]
        margin: usize,
        /// Also print the quasi-polynomial form.
        #[arg(long)]
        quasi: bool,
    },
    /// Profile of a relational structure.
    Profile {
        #[command(flatten)]
        s: StructureArg,
        #[arg(long, default_value_t = 8)]
        upto: usize,
        /// Also fit the generating series (layered structures).
        #[arg(long)]
        series: bool,
        #[arg(long, default_value_t = DEFAULT_MARGIN)]
        margin: usize,
    },
    /// Canonical monomorphic decomposition of a finite structure.
    Decompose {
        #[command(flatten)]
        s: StructureArg,
        /// Points kept per component when the structure is layered.
        #[arg(long, default_value_t = 3)]
        truncate: usize,
    },
    /// Truncated freeness test over the symmetric polynomials.
    Freeness {
        #[command(flatten)]
        g: GroupoidArg,
        #[arg(long, default_value_t = 8)]
        dmax: u32,
    },
    /// The Reynolds operator, optionally applied to a polynomial.
    Reynolds {
        #[command(flatten)]
        g: GroupoidArg,
        /// Polynomial such as "3/2*x1^2*x2 - x3".
        #[arg(long)]
        poly: Option<String>,
        #[arg(long, default_value_t = 4)]
        dmax: u32,
    },
    /// SAGBI criterion and initial monomials that are not products.
    Sagbi {
        #[command(flatten)]
        g: GroupoidArg,
        #[arg(long, default_value = "lex")]
        order: OrderKind,
        #[arg(long, default_value_t = 6)]
        dmax: u32,
    },
    /// Replay the example corpus and print one line per acceptance criterion.
    Fixtures,
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to standard error. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        // a second initialization in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::GuardExceeded { .. } = e {
                eprintln!("hint: pass --guard-override N to raise the limit; the search is exhaustive");
            }
            1
        }
    }
}

fn load_guard(guard: Option<usize>) -> usize {
    match guard {
        Some(g) => {
            eprintln!("warning: size guard raised to {g}; exhaustive search may be slow");
            g
        }
        None => DEFAULT_GUARD,
    }
}

fn emit(out: &mut dyn Write, text: impl std::fmt::Display) -> Result<()> {
    writeln!(out, "{text}")?;
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Close(a) => {
            let g = read_groupoid(&a.groupoid)?;
            if cli.json {
                emit(out, groupoid_to_json(&g))?;
            } else {
                for f in g.elements() {
                    emit(out, f.display(g.labels()))?;
                }
            }
        }
        Command::Orbits { g, degree, order } => {
            let g = read_groupoid(&g.groupoid)?;
            let orbits = orbits_of_degree_with_order(&g, *degree, &TermOrder::new(*order));
            if cli.json {
                let rows: Vec<_> =
                    orbits.iter().map(|o| json!({"leading": o.leading().to_string(), "size": o.len()})).collect();
                emit(out, serde_json::to_string_pretty(&rows)?)?;
            } else {
                for o in orbits {
                    emit(out, format_args!("{} {}", o.leading(), o.len()))?;
                }
            }
        }
        Command::Hilbert { g, den, margin, quasi } => {
            let g = read_groupoid(&g.groupoid)?;
            let den: Vec<u32> = if den.is_empty() { (1..=g.size() as u32).collect() } else { den.clone() };
            let s = hilbert_series(&g, &den, *margin)?;
            if cli.json {
                emit(out, serde_json::to_string(&s)?)?;
            } else {
                emit(out, &s)?;
                if *quasi {
                    emit(out, quasi_polynomial(&s)?)?;
                }
            }
        }
        Command::Profile { s, upto, series, margin } => {
            let guard = load_guard(s.guard_override);
            let (values, fitted) = match read_structure(&s.structure)? {
                StructureFile::Finite(r) => {
                    if *series {
                        return Err(Error::Invalid("--series needs a layered structure".into()));
                    }
                    let upto = (*upto).min(r.size());
                    ((0..=upto).map(|n| profile_with_guard(&r, n, guard)).collect::<Result<Vec<_>>>()?, None)
                }
                StructureFile::Layered(l) => {
                    let fitted = if *series { Some(profile_series(&l, *margin)?) } else { None };
                    (profile_values(&l, *upto), fitted)
                }
            };
            if cli.json {
                emit(out, serde_json::to_string(&json!({"profile": values, "series": fitted}))?)?;
            } else {
                let shown: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                emit(out, shown.join(" "))?;
                if let Some(s) = fitted {
                    emit(out, s)?;
                }
            }
        }
        Command::Decompose { s, truncate } => {
            let guard = load_guard(s.guard_override);
            let r = match read_structure(&s.structure)? {
                StructureFile::Finite(r) => r,
                StructureFile::Layered(l) => {
                    let sizes: Vec<usize> = l
                        .multiplicities()
                        .iter()
                        .map(|m| match m {
                            Multiplicity::Finite(c) => (*c).min(*truncate),
                            Multiplicity::Unbounded => *truncate,
                        })
                        .collect();
                    l.realize(&sizes)?
                }
            };
            let d = canonical_decomposition_with_guard(&r, guard)?;
            let blocks: Vec<Vec<String>> = d
                .blocks()
                .iter()
                .map(|&b| subset::points(b).map(|p| r.labels()[p].clone()).collect())
                .collect();
            if cli.json {
                emit(out, serde_json::to_string(&json!({"blocks": blocks}))?)?;
            } else {
                for b in blocks {
                    emit(out, format_args!("{{{}}}", b.join(", ")))?;
                }
            }
        }
        Command::Freeness { g, dmax } => {
            let g = read_groupoid(&g.groupoid)?;
            emit(out, serde_json::to_string_pretty(&truncated_freeness(&g, *dmax))?)?;
        }
        Command::Reynolds { g, poly, dmax } => {
            let g = read_groupoid(&g.groupoid)?;
            let r = reynolds(&g);
            let check = reynolds_is_sym_morphism(&g, *dmax);
            let image = match poly {
                Some(p) => Some(r.apply(&Polynomial::parse(p)?)),
                None => None,
            };
            if cli.json {
                let witness = check.witness.as_ref().map(|(d, m)| json!({"d": d, "monomial": m.to_string()}));
                let mut v = json!({"sym_morphism": check.holds, "dmax": dmax, "witness": witness});
                if let Some(p) = &image {
                    v["image"] = json!(p.to_string());
                }
                emit(out, serde_json::to_string_pretty(&v)?)?;
            } else {
                match &image {
                    Some(p) => emit(out, p)?,
                    None => {
                        for (f, c) in r.element().terms() {
                            emit(out, format_args!("{c} gr({})", f.display(g.labels())))?;
                        }
                    }
                }
                match check.witness {
                    None => emit(out, format_args!("Sym-module morphism up to degree {dmax}: true"))?,
                    Some((d, m)) => emit(out, format_args!("Sym-module morphism: false, R(e{d}*{m}) != e{d}*R({m})"))?,
                }
            }
        }
        Command::Sagbi { g, order, dmax } => {
            let g = read_groupoid(&g.groupoid)?;
            let finite = sagbi_finite(&g);
            let report = initial_monoid_explorer(&g, &TermOrder::new(*order), *dmax);
            let gens: Vec<String> = report.generators.iter().map(|m| m.to_string()).collect();
            if cli.json {
                emit(out, serde_json::to_string_pretty(&json!({"finite": finite, "dmax": dmax, "indecomposable": gens}))?)?;
            } else {
                emit(out, format_args!("finite SAGBI basis: {finite}"))?;
                emit(out, format_args!("indecomposable initial monomials up to degree {dmax}: {}", gens.join(", ")))?;
            }
        }
        Command::Fixtures => {
            let results = fixtures::run_criteria();
            if cli.json {
                let rows: Vec<_> = results
                    .iter()
                    .map(|c| json!({"criterion": c.number, "title": c.title, "passed": c.passed, "detail": c.detail}))
                    .collect();
                emit(out, serde_json::to_string_pretty(&rows)?)?;
            } else {
                for c in &results {
                    emit(out, c.line())?;
                }
            }
            if results.iter().any(|c| !c.passed) {
                return Ok(1);
            }
        }
    }
    Ok(0)
}
