//! `flatlat`: flats of simplicial complexes and realizability of lattices
//! from the command line.
//!
//! Exit codes: 0 decided true or success, 1 decided false, 2 input or usage
//! error, 3 size limit exceeded, 4 an `--oracle` cross-check disagreed.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use flatlat::flats::{oracle_flats, oracle_is_transversal, set_label};
use flatlat::io::{self, Document};
use flatlat::realize::{
    boolean_matrix, is_realizable, is_realizable_by, lsc_construct, oracle_transversal_chain, transversal_complex,
    verify_lsc, Method,
};
use flatlat::{Error, FiniteLattice, FlatFamily, IndexSet, Limits, SimpleGraph, SimplicialComplex};

#[derive(Parser)]
#[command(
    name = "flatlat",
    version,
    about = "Flats of simplicial complexes and realizability of finite lattices"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cross-check fast paths against brute-force oracles.
    #[arg(long, global = true)]
    oracle: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Height2,
    Boolean,
    Height3,
    General,
}

#[derive(Subcommand)]
enum Command {
    /// Atoms, height, and the atomistic/semimodular/geometric/Boolean tests.
    Classify { input: PathBuf },
    /// All flats of a complex and their lattice.
    Flats {
        input: PathBuf,
        /// Print the Hasse diagram of the flats in DOT instead.
        #[arg(long)]
        dot: bool,
    },
    /// Closure of a vertex set.
    Closure {
        input: PathBuf,
        /// Vertex labels separated by commas or spaces; empty for the empty set.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Decide boolean representability.
    Brsc {
        input: PathBuf,
        /// Show a chain of flats for every facet.
        #[arg(long)]
        verbose: bool,
    },
    /// Decide whether a lattice is the lattice of flats of a boolean
    /// representable complex.
    Realizable {
        input: PathBuf,
        /// Skip the shortcuts and compare |Fl T_L| with |L|.
        #[arg(long, conflicts_with = "method")]
        force_general: bool,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// A complex whose lattice of flats is isomorphic to the input lattice.
    Construct {
        input: PathBuf,
        /// Check the isomorphism.
        #[arg(long)]
        verify: bool,
    },
    /// The canonical transversal complex of an atomistic lattice.
    Tl { input: PathBuf },
    /// The 0/1 matrix with rows the elements and columns the atoms.
    Matrix { input: PathBuf },
    /// Supercliques of a graph, or of the atom graph of a lattice.
    Superclique {
        input: PathBuf,
        /// Use brute force over all vertex subsets.
        #[arg(long)]
        naive: bool,
    },
    /// Hasse diagram of a lattice in DOT.
    Hasse { input: PathBuf },
}

enum Failure {
    Input(String),
    Limit(String),
    Oracle(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LimitExceeded { .. } => Failure::Limit(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, decided)) => {
            print!("{out}");
            ExitCode::from(if decided { 0 } else { 1 })
        }
        Err(f) => {
            let (code, msg) = match f {
                Failure::Input(m) => (2, m),
                Failure::Limit(m) => (3, m),
                Failure::Oracle(m) => (4, format!("oracle disagreement: {m}")),
            };
            eprintln!("flatlat: {msg}");
            ExitCode::from(code)
        }
    }
}

fn read_input(path: &PathBuf) -> Result<Document, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    io::parse(&text).map_err(|e| match e {
        Error::Syntax { .. } => Failure::Input(format!("{}: {e}", path.display())),
        other => other.into(),
    })
}

fn lattice(path: &PathBuf) -> Result<FiniteLattice, Failure> {
    match read_input(path)? {
        Document::Lattice(l) => Ok(l),
        other => Err(Failure::Input(format!("expected a lattice, found a {}", other.kind()))),
    }
}

fn complex(path: &PathBuf) -> Result<SimplicialComplex, Failure> {
    match read_input(path)? {
        Document::Complex(c) => Ok(c),
        other => Err(Failure::Input(format!("expected a complex, found a {}", other.kind()))),
    }
}

fn check(agree: bool, what: impl FnOnce() -> String) -> Result<(), Failure> {
    if agree {
        Ok(())
    } else {
        Err(Failure::Oracle(what()))
    }
}

fn braces(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(","))
}

fn run(cli: &Cli) -> Outcome {
    let limits = Limits::from_env();
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Classify { input } => classify(&lattice(input)?, json, cli.oracle),
        Command::Flats { input, dot } => flats(&complex(input)?, &limits, json, *dot, cli.oracle),
        Command::Closure { input, set } => closure(&complex(input)?, set, &limits, json, cli.oracle),
        Command::Brsc { input, verbose } => brsc(&complex(input)?, &limits, json, *verbose, cli.oracle),
        Command::Realizable {
            input,
            force_general,
            method,
        } => {
            let method = if *force_general { MethodArg::General } else { *method };
            realizable(&lattice(input)?, method, &limits, json, cli.oracle)
        }
        Command::Construct { input, verify } => construct(&lattice(input)?, &limits, json, *verify, cli.oracle),
        Command::Tl { input } => tl(&lattice(input)?, &limits, json, cli.oracle),
        Command::Matrix { input } => {
            let l = lattice(input)?;
            let m = boolean_matrix(&l)?;
            if cli.oracle {
                for (i, row) in m.rows.iter().enumerate() {
                    for (j, &a) in l.atoms().iter().enumerate() {
                        check((row[j] == 0) == l.leq(a, i), || format!("matrix entry ({i}, {j})"))?;
                    }
                }
            }
            let out = if json {
                io::emit_json(&io::MatrixReport::new(&m))
            } else {
                m.to_text()
            };
            Ok((out, true))
        }
        Command::Superclique { input, naive } => superclique(read_input(input)?, json, *naive, cli.oracle),
        Command::Hasse { input } => Ok((io::emit_dot_hasse(&lattice(input)?), true)),
    }
}

fn classify(l: &FiniteLattice, json: bool, oracle: bool) -> Outcome {
    let r = io::ClassifyReport::new(l);
    if oracle {
        check(r.semimodular == l.satisfies_cover_semimodularity(), || {
            "pentagon and cover semimodularity".into()
        })?;
    }
    if json {
        return Ok((io::emit_json(&r), true));
    }
    let mut out = String::new();
    writeln!(out, "elements: {}", r.elements).unwrap();
    writeln!(out, "atoms: {}", r.atoms.join(" ")).unwrap();
    writeln!(out, "height: {}", r.height).unwrap();
    writeln!(out, "atomistic: {}", r.atomistic).unwrap();
    if let Some(x) = &r.non_atomistic_element {
        writeln!(out, "  not a join of atoms: {x}").unwrap();
    }
    writeln!(out, "semimodular: {}", r.semimodular).unwrap();
    if let Some(p) = &r.pentagon {
        writeln!(out, "  pentagon: {}", p.join(" ")).unwrap();
    }
    writeln!(out, "geometric: {}", r.geometric).unwrap();
    writeln!(out, "boolean: {}", r.boolean).unwrap();
    Ok((out, true))
}

fn flats(c: &SimplicialComplex, limits: &Limits, json: bool, dot: bool, oracle: bool) -> Outcome {
    let family = FlatFamily::compute(c, limits)?;
    if oracle {
        let literal = oracle_flats(c)?;
        check(
            literal.len() == family.len() && literal.iter().all(|&f| family.contains(f)),
            || "flat scan against the literal predicate".into(),
        )?;
    }
    if dot {
        return Ok((io::emit_dot_hasse(family.lattice()), true));
    }
    let r = io::FlatsReport::new(&family);
    if json {
        return Ok((io::emit_json(&r), true));
    }
    let mut out = String::new();
    writeln!(out, "flats: {}", r.count).unwrap();
    for f in &r.flats {
        writeln!(out, "  {}", braces(f)).unwrap();
    }
    writeln!(out, "covers:").unwrap();
    for [x, y] in &r.covers {
        writeln!(out, "  {x} < {y}").unwrap();
    }
    Ok((out, true))
}

fn closure(c: &SimplicialComplex, set: &str, limits: &Limits, json: bool, oracle: bool) -> Outcome {
    let labels: Vec<&str> = set
        .split(|ch: char| ch == ',' || ch.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    let x = c.set_of(&labels)?;
    let family = FlatFamily::compute(c, limits)?;
    if oracle {
        check(family.closure(x) == family.closure_by_intersection(x), || {
            "closure against intersection of flats".into()
        })?;
    }
    let r = io::ClosureReport::new(&family, x);
    let out = if json {
        io::emit_json(&r)
    } else {
        format!("closure: {}\nflat: {}\n", braces(&r.closure), r.flat)
    };
    Ok((out, true))
}

fn brsc(c: &SimplicialComplex, limits: &Limits, json: bool, verbose: bool, oracle: bool) -> Outcome {
    let family = FlatFamily::compute(c, limits)?;
    let r = io::BrReport::new(&family, verbose);
    if oracle {
        for &f in c.facets() {
            let fast = family.transversal_witness(f).is_some();
            check(fast == oracle_is_transversal(c, f)?, || {
                format!("transversal status of {}", set_label(c, f))
            })?;
        }
    }
    let decided = r.boolean_representable;
    if json {
        return Ok((io::emit_json(&r), decided));
    }
    let mut out = format!("boolean representable: {decided}\n");
    if let Some(f) = &r.non_representable_face {
        writeln!(out, "  not a transversal: {}", braces(f)).unwrap();
    }
    for w in r.witnesses.iter().flatten() {
        writeln!(
            out,
            "  {}: order {} chain {}",
            braces(&w.face),
            w.ordering.join(" "),
            w.chain.join(" < ")
        )
        .unwrap();
    }
    Ok((out, decided))
}

fn realizable(l: &FiniteLattice, method: MethodArg, limits: &Limits, json: bool, oracle: bool) -> Outcome {
    let report = match method {
        MethodArg::Auto => is_realizable(l, limits)?,
        MethodArg::Height2 => is_realizable_by(l, Method::Height2, limits)?,
        MethodArg::Boolean => is_realizable_by(l, Method::Boolean, limits)?,
        MethodArg::Height3 => is_realizable_by(l, Method::Height3, limits)?,
        MethodArg::General => is_realizable_by(l, Method::General, limits)?,
    };
    if oracle {
        let general = is_realizable_by(l, Method::General, limits)?;
        check(general.realizable == report.realizable, || {
            format!("{} path against the general path", report.method.name())
        })?;
    }
    let r = io::RealizabilityJson::new(l, &report);
    let decided = r.realizable;
    if json {
        return Ok((io::emit_json(&r), decided));
    }
    let mut out = format!(
        "realizable: {decided}\natomistic: {}\nmethod: {}\n",
        r.atomistic,
        r.method.name()
    );
    if let Some(m) = r.requested {
        writeln!(out, "requested: {}", m.name()).unwrap();
    }
    if let Some(x) = &r.non_atomistic_element {
        writeln!(out, "not a join of atoms: {x}").unwrap();
    }
    if let Some(h) = r.height {
        writeln!(out, "height: {h}").unwrap();
    }
    if let (Some(a), Some(b)) = (r.atoms, r.boolean) {
        writeln!(out, "atoms: {a}\nboolean: {b}").unwrap();
    }
    if let Some(s) = &r.supercliques {
        let sets: Vec<String> = s.iter().map(|w| braces(w)).collect();
        writeln!(out, "supercliques: {}", sets.join(" ")).unwrap();
    }
    if let Some(f) = r.flats {
        writeln!(out, "flats of T_L: {f}").unwrap();
    }
    if let Some(n) = r.size {
        writeln!(out, "elements: {n}").unwrap();
    }
    Ok((out, decided))
}

fn construct(l: &FiniteLattice, limits: &Limits, json: bool, verify: bool, oracle: bool) -> Outcome {
    let c = lsc_construct(l)?.complex;
    let verified = if verify || oracle {
        match verify_lsc(l, limits) {
            Ok(_) => Some(true),
            Err(Error::ConstructionMismatch(m)) if oracle => return Err(Failure::Oracle(m)),
            Err(Error::ConstructionMismatch(m)) => {
                eprintln!("flatlat: {m}");
                Some(false)
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    let decided = verified.unwrap_or(true);
    if json {
        let mut r = io::ComplexReport::new(&c);
        r.verified = verified;
        return Ok((io::emit_json(&r), decided));
    }
    Ok((io::print_complex(&c), decided))
}

fn tl(l: &FiniteLattice, limits: &Limits, json: bool, oracle: bool) -> Outcome {
    let t = transversal_complex(l, limits)?;
    let c = t.complex();
    if oracle {
        let atoms = t.atoms();
        for s in c.vertices().subsets() {
            let members: Vec<usize> = s.iter().map(|i| atoms[i]).collect();
            check(c.is_face(s) == oracle_transversal_chain(l, &members)?, || {
                format!("membership of {}", set_label(c, s))
            })?;
        }
    }
    let out = if json {
        io::emit_json(&io::ComplexReport::new(c))
    } else {
        io::print_complex(c)
    };
    Ok((out, true))
}

fn superclique(doc: Document, json: bool, naive: bool, oracle: bool) -> Outcome {
    let g = match doc {
        Document::Graph(g) => g,
        Document::Lattice(l) => SimpleGraph::gamma(&l),
        Document::Complex(_) => return Err(Failure::Input("expected a graph or a lattice, found a complex".into())),
    };
    let sets: Vec<IndexSet> = if naive {
        g.naive_supercliques()?
    } else {
        g.find_supercliques()
    };
    if oracle {
        let other = if naive {
            g.find_supercliques()
        } else {
            g.naive_supercliques()?
        };
        check(other == sets, || "fast and naive superclique search".into())?;
    }
    let r = io::SupercliqueReport::new(&g, &sets);
    if json {
        return Ok((io::emit_json(&r), true));
    }
    let mut out = format!("supercliques: {}\n", r.supercliques.len());
    for w in &r.supercliques {
        writeln!(out, "  {}", braces(w)).unwrap();
    }
    Ok((out, true))
}
