//! Command-line front end. `run` does all the work and returns the captured
//! output so that tests can drive it without spawning a process.
//!
//! Exit codes: 0 success, 1 validation or check failure, 2 parse or usage
//! error, 3 computation refused by a resource cap.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use trisect_core::diagram::{connected_sum, stabilize, standard_diagram, StandardManifold};
use trisect_core::group::{
    abelianize_presentation, build_cube, count_homs, pi1_presentation, simplify_with_report,
    verify_cube, vertex_name, GroupError, SymmetricGroup, DEFAULT_HOM_CAP,
};
use trisect_core::invariants::{
    euler_characteristic, form_invariants, homology_of_x, intersection_form, k_triple, pair_k,
    poincare_candidate_check, InvariantError, DEFAULT_POINCARE_BUDGET,
};
use trisect_core::io::{emit_cube_dot, parse, serialize_trisection, IoError, ParsedDiagram};
use trisect_core::linalg::quotient_invariants;
use trisect_core::{Family, TrisectionDiagram, Word};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_REFUSED: u8 = 3;

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "trisect",
    version,
    about = "Trisection diagrams of 4-manifolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a diagram file is well formed and valid.
    Validate { file: String },
    /// Genus, k-triple, Euler characteristic, homology and intersection form.
    Invariants { file: String },
    /// Presentation of the fundamental group.
    Pi1 {
        file: String,
        /// Run Tietze simplification with this step budget.
        #[arg(long, value_name = "BUDGET")]
        simplify: Option<usize>,
    },
    /// Intersection form matrix and its rank, signature and parity.
    Form { file: String },
    /// Stabilize along one family.
    Stabilize {
        file: String,
        #[arg(long, value_enum)]
        family: FamilyArg,
    },
    /// Slide curve CURVE over curve OVER (1-based) inside one family.
    Slide {
        file: String,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        curve: usize,
        #[arg(long)]
        over: usize,
        /// Conjugating arc word; defaults to the empty word.
        #[arg(long, default_value = "e")]
        conj: String,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        sign: i8,
    },
    /// Connected sum of two diagrams.
    ConnectSum { first: String, second: String },
    /// Print a diagram from the built-in library.
    Standard {
        /// One of S4, CP2, CP2BAR, S1xS3, S2xS2.
        name: String,
    },
    /// Count homomorphisms from the fundamental group to a symmetric group.
    Homcount {
        file: String,
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long, default_value_t = DEFAULT_HOM_CAP)]
        cap: u64,
        /// Tietze budget applied before counting; 0 counts on the raw presentation.
        #[arg(long, default_value_t = 10_000)]
        simplify: usize,
    },
    /// The cube of groups of the trisection.
    Cube {
        file: String,
        /// Emit Graphviz DOT instead of a vertex listing.
        #[arg(long)]
        dot: bool,
        /// Check surjectivity and the pushout faces with this Tietze budget.
        #[arg(long, value_name = "BUDGET")]
        verify: Option<usize>,
    },
    /// Screen a diagram as a homotopy 4-sphere candidate.
    PoincareCheck {
        file: String,
        #[arg(long, default_value_t = DEFAULT_POINCARE_BUDGET)]
        budget: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Alpha,
    Beta,
    Gamma,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Alpha => Family::Alpha,
            FamilyArg::Beta => Family::Beta,
            FamilyArg::Gamma => Family::Gamma,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    S3,
    S4,
    S5,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        let code = match e {
            IoError::Validation { .. } => EXIT_FAILED,
            IoError::Syntax { .. } | IoError::Arity { .. } => EXIT_USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        Failure::new(EXIT_FAILED, e.to_string())
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        let code = match e {
            GroupError::Refused { .. } => EXIT_REFUSED,
            GroupError::Invariant(_) | GroupError::MalformedCube(_) => EXIT_FAILED,
            GroupError::GeneratorOutOfRange { .. } | GroupError::UnsupportedTarget(_) => EXIT_USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

type CmdResult = Result<(u8, String), Failure>;

/// Runs the CLI on `args` (including the program name), reading `-` files from `stdin`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut input = Input {
        stdin,
        consumed: false,
    };
    match dispatch(cli.command, &mut input) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

struct Input<'a> {
    stdin: &'a mut dyn Read,
    consumed: bool,
}

impl Input<'_> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            if self.consumed {
                return Err(Failure::new(
                    EXIT_USAGE,
                    "standard input can only be read once",
                ));
            }
            self.consumed = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::new(EXIT_USAGE, format!("stdin: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| Failure::new(EXIT_USAGE, format!("{path}: {e}")))
        }
    }

    fn diagram(&mut self, path: &str) -> Result<ParsedDiagram, Failure> {
        Ok(parse(&self.read(path)?)?)
    }

    fn trisection(&mut self, path: &str) -> Result<TrisectionDiagram, Failure> {
        match self.diagram(path)? {
            ParsedDiagram::Trisection(d) => Ok(d),
            ParsedDiagram::Heegaard(_) => Err(Failure::new(
                EXIT_USAGE,
                format!("{path}: expected a trisection diagram, found heegaard"),
            )),
        }
    }
}

fn line(out: &mut String, key: &str, value: impl std::fmt::Display) {
    writeln!(out, "{key}: {value}").expect("write to string");
}

fn dispatch(cmd: Command, input: &mut Input<'_>) -> CmdResult {
    match cmd {
        Command::Validate { file } => validate(input.diagram(&file)?),
        Command::Invariants { file } => invariants(input.diagram(&file)?),
        Command::Pi1 { file, simplify } => {
            let p = pi1_presentation(&input.trisection(&file)?);
            let p = match simplify {
                Some(budget) => simplify_with_report(&p, budget).presentation,
                None => p,
            };
            Ok((EXIT_OK, format!("{p}\n")))
        }
        Command::Form { file } => form(&input.trisection(&file)?),
        Command::Stabilize { file, family } => {
            let d = stabilize(&input.trisection(&file)?, family.into());
            Ok((EXIT_OK, serialize_trisection(&d)))
        }
        Command::Slide {
            file,
            family,
            curve,
            over,
            conj,
            sign,
        } => {
            let d = input.trisection(&file)?;
            let conj: Word = conj
                .parse()
                .map_err(|e| Failure::new(EXIT_USAGE, format!("--conj: {e}")))?;
            let g = d.genus();
            for (flag, v) in [("--curve", curve), ("--over", over)] {
                if v == 0 || v > g {
                    return Err(Failure::new(
                        EXIT_USAGE,
                        format!("{flag} {v} outside 1..={g}"),
                    ));
                }
            }
            let slid = d
                .slide(family.into(), curve - 1, over - 1, &conj, sign)
                .map_err(|e| Failure::new(EXIT_FAILED, e.to_string()))?;
            Ok((EXIT_OK, serialize_trisection(&slid)))
        }
        Command::ConnectSum { first, second } => {
            let a = input.trisection(&first)?;
            let b = input.trisection(&second)?;
            Ok((EXIT_OK, serialize_trisection(&connected_sum(&a, &b))))
        }
        Command::Standard { name } => {
            let m = StandardManifold::ALL
                .iter()
                .find(|m| m.name().eq_ignore_ascii_case(&name))
                .ok_or_else(|| {
                    Failure::new(EXIT_USAGE, format!("unknown standard manifold `{name}`"))
                })?;
            Ok((EXIT_OK, serialize_trisection(&standard_diagram(*m))))
        }
        Command::Homcount {
            file,
            target,
            cap,
            simplify,
        } => {
            let d = input.trisection(&file)?;
            let degree = match target {
                Target::S3 => 3,
                Target::S4 => 4,
                Target::S5 => 5,
            };
            let group = SymmetricGroup::new(degree)?;
            let p = simplify_with_report(&pi1_presentation(&d), simplify).presentation;
            let n = count_homs(&p, &group, cap)?;
            Ok((EXIT_OK, format!("{n}\n")))
        }
        Command::Cube { file, dot, verify } => cube(&input.trisection(&file)?, dot, verify),
        Command::PoincareCheck { file, budget } => {
            let r = poincare_candidate_check(&input.trisection(&file)?, budget);
            let mut out = String::new();
            line(&mut out, "homology_matches_s4", r.homology_matches_s4);
            line(&mut out, "pi1_trivialized", r.pi1_trivialized);
            line(&mut out, "tietze_steps", r.tietze_steps);
            line(&mut out, "verdict", r.verdict);
            Ok((EXIT_OK, out))
        }
    }
}

fn validate(d: ParsedDiagram) -> CmdResult {
    let mut out = String::new();
    match d {
        ParsedDiagram::Trisection(d) => {
            line(&mut out, "kind", "trisection");
            line(&mut out, "genus", d.genus());
            let k = k_triple(&d)?;
            line(&mut out, "k", format!("{} {} {}", k[0], k[1], k[2]));
        }
        ParsedDiagram::Heegaard(h) => {
            line(&mut out, "kind", "heegaard");
            line(&mut out, "genus", h.genus());
        }
    }
    line(&mut out, "status", "valid");
    Ok((EXIT_OK, out))
}

fn invariants(d: ParsedDiagram) -> CmdResult {
    let mut out = String::new();
    let d = match d {
        ParsedDiagram::Trisection(d) => d,
        ParsedDiagram::Heegaard(h) => {
            line(&mut out, "kind", "heegaard");
            line(&mut out, "genus", h.genus());
            let q = quotient_invariants(2 * h.genus(), &h.stacked_matrix())
                .expect("stack has 2g columns");
            line(&mut out, "H1", &q);
            if let Ok(k) = pair_k(&h) {
                line(&mut out, "k", k);
            }
            return Ok((EXIT_OK, out));
        }
    };
    line(&mut out, "kind", "trisection");
    line(&mut out, "genus", d.genus());
    let k = k_triple(&d)?;
    line(&mut out, "k", format!("{} {} {}", k[0], k[1], k[2]));
    line(&mut out, "euler_characteristic", euler_characteristic(&d)?);
    let h = homology_of_x(&d)?;
    for (i, g) in h.groups.iter().enumerate() {
        line(&mut out, &format!("H{i}"), g);
    }
    match intersection_form(&d) {
        Ok(q) => {
            let f = form_invariants(&q)?;
            line(&mut out, "form_rank", f.rank);
            line(&mut out, "signature", f.signature);
            line(&mut out, "parity", f.parity);
        }
        Err(InvariantError::Unsupported(_)) => {
            line(&mut out, "form", "unsupported (H1 has torsion)")
        }
        Err(e) => return Err(e.into()),
    }
    Ok((EXIT_OK, out))
}

fn form(d: &TrisectionDiagram) -> CmdResult {
    let q = intersection_form(d)?;
    let f = form_invariants(&q)?;
    let mut out = String::new();
    for i in 0..q.rows() {
        let row: Vec<String> = q.row(i).iter().map(ToString::to_string).collect();
        writeln!(out, "{}", row.join(" ")).expect("write to string");
    }
    line(&mut out, "rank", f.rank);
    line(&mut out, "signature", f.signature);
    line(&mut out, "parity", f.parity);
    Ok((EXIT_OK, out))
}

fn cube(d: &TrisectionDiagram, dot: bool, verify: Option<usize>) -> CmdResult {
    let c = build_cube(d)?;
    let mut out = if dot {
        emit_cube_dot(&c)
    } else {
        let mut out = String::new();
        for (mask, p) in c.vertices.iter().enumerate() {
            writeln!(
                out,
                "{}: {} {}",
                vertex_name(mask),
                abelianize_presentation(p),
                p
            )
            .expect("write to string");
        }
        out
    };
    let Some(budget) = verify else {
        return Ok((EXIT_OK, out));
    };
    let report = verify_cube(&c, budget)?;
    if dot {
        // keep the DOT on stdout parseable
        out.clear();
        out.push_str(&emit_cube_dot(&c));
        for f in report
            .faces
            .iter()
            .filter(|f| f.status == trisect_core::group::CheckStatus::Failed)
        {
            writeln!(out, "// failed face {}: {}", f.label(), f.detail).expect("write to string");
        }
    } else {
        for m in &report.maps {
            writeln!(
                out,
                "map {} -> {}: {}",
                vertex_name(m.source),
                vertex_name(m.target),
                m.status
            )
            .expect("write to string");
        }
        for f in &report.faces {
            writeln!(out, "face {}: {}", f.label(), f.status).expect("write to string");
        }
    }
    let code = if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    };
    Ok((code, out))
}
