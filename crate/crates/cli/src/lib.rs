//! The `eqposet` command line: validation, model tables, knitting, flavor
//! comparison and the finite-field oracle.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

use eqposet_core::correspond::{corrupt_label, pair_components};
use eqposet_core::forms::{gram, quadratic};
use eqposet_core::io::{emit, parse_poset, EmitFormat, ReadError};
use eqposet_core::knit::{derive_v_level, knit_component, DEFAULT_MAX_SECTIONS, MAX_SECTIONS_ENV};
use eqposet_core::oracle::{verify, FieldSpec, Mode, OracleError};
use eqposet_core::poset::is_slender;
use eqposet_core::vector::format_vec;
use eqposet_core::{build_model, AlgebraModel, EquippedPoset, Flavor};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const USAGE: i32 = 2;
}

#[derive(Parser, Debug)]
#[command(
    name = "eqposet",
    version,
    about = "Equipped posets and their preprojective components"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    R,
    C,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::R => Flavor::R,
            FlavorArg::C => Flavor::C,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Cyclic,
    Inseparable,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a poset file and report every violated condition.
    Validate { path: PathBuf },
    /// Print the hom table, radicals and heredity of each point.
    Info {
        path: PathBuf,
        #[arg(long, value_enum)]
        flavor: Option<FlavorArg>,
        /// Also print Gram matrices and the form on projective coordinates.
        #[arg(long)]
        forms: bool,
    },
    /// Knit the component of the simple projective.
    Knit {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "r")]
        flavor: FlavorArg,
        #[arg(long, env = MAX_SECTIONS_ENV, default_value_t = DEFAULT_MAX_SECTIONS)]
        max_sections: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Attach the dimension vectors on the top-injective side.
        #[arg(long)]
        v_level: bool,
    },
    /// Knit both flavors and check the correspondence between them.
    Compare {
        path: PathBuf,
        #[arg(long, env = MAX_SECTIONS_ENV, default_value_t = DEFAULT_MAX_SECTIONS)]
        max_sections: usize,
        /// Flip the label of one flavor-R vertex before pairing.
        #[arg(long, hide = true)]
        corrupt_label: Option<usize>,
    },
    /// Check the model against explicit linear algebra over a field tower.
    Oracle {
        path: PathBuf,
        /// Order of the base field in cyclic mode; defaults to the least prime q with p | q - 1.
        #[arg(long)]
        q: Option<u64>,
        /// The constant c with x^p = c; defaults to the least non-p-th power.
        #[arg(long, allow_hyphen_values = true)]
        c: Option<i64>,
        /// Primitive p-th root of unity used for the automorphism.
        #[arg(long, allow_hyphen_values = true)]
        omega: Option<i64>,
        #[arg(long, value_enum, default_value = "cyclic")]
        mode: ModeArg,
        /// Check one flavor only.
        #[arg(long, value_enum)]
        flavor: Option<FlavorArg>,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            exit::USAGE
        }
    }
}

fn flavors(choice: Option<FlavorArg>) -> Vec<Flavor> {
    match choice {
        Some(f) => vec![f.into()],
        None => vec![Flavor::R, Flavor::C],
    }
}

enum Loaded {
    Poset(EquippedPoset),
    Exit(i32),
}

/// Reads a poset; content problems exit 1, unreadable files exit 2.
fn load(path: &Path, err: &mut dyn Write) -> Result<Loaded> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            writeln!(err, "error: {}: {e}", path.display())?;
            return Ok(Loaded::Exit(exit::USAGE));
        }
    };
    match parse_poset(&text) {
        Ok(p) => Ok(Loaded::Poset(p)),
        Err(e) => {
            writeln!(err, "{}: {e}", path.display())?;
            let code = if matches!(e, ReadError::Io { .. }) {
                exit::USAGE
            } else {
                exit::FAILURE
            };
            Ok(Loaded::Exit(code))
        }
    }
}

macro_rules! load_or_exit {
    ($path:expr, $err:expr) => {
        match load($path, $err)? {
            Loaded::Poset(p) => p,
            Loaded::Exit(code) => return Ok(code),
        }
    };
}

fn execute(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Validate { path } => {
            let poset = load_or_exit!(path, err);
            writeln!(out, "valid: p = {}, {} points", poset.p(), poset.len())?;
            Ok(exit::OK)
        }
        Command::Info {
            path,
            flavor,
            forms,
        } => {
            let poset = load_or_exit!(path, err);
            for f in flavors(*flavor) {
                let model = build_model(&poset, f)?;
                print_info(&model, *forms, out)?;
            }
            Ok(exit::OK)
        }
        Command::Knit {
            path,
            flavor,
            max_sections,
            format,
            v_level,
        } => {
            let poset = load_or_exit!(path, err);
            let model = build_model(&poset, (*flavor).into())?;
            let mut graph = match knit_component(&model, *max_sections) {
                Ok(g) => g,
                Err(e) => {
                    writeln!(err, "knitting failed: {e}")?;
                    return Ok(exit::FAILURE);
                }
            };
            if *v_level {
                graph = derive_v_level(&model, &graph)?;
            }
            let format = match format {
                FormatArg::Json => EmitFormat::Json,
                FormatArg::Dot => EmitFormat::Dot,
            };
            write!(out, "{}", emit(&graph, format))?;
            writeln!(err, "status: {}", graph.status)?;
            Ok(exit::OK)
        }
        Command::Compare {
            path,
            max_sections,
            corrupt_label: corrupt,
        } => {
            let poset = load_or_exit!(path, err);
            let mr = build_model(&poset, Flavor::R)?;
            let mc = build_model(&poset, Flavor::C)?;
            let knit = |m: &AlgebraModel| knit_component(m, *max_sections);
            let (gr, gc) = std::thread::scope(|s| {
                let r = s.spawn(|| knit(&mr));
                let c = knit(&mc);
                (r.join().expect("knitting thread"), c)
            });
            let (mut gr, gc) = match (gr, gc) {
                (Ok(r), Ok(c)) => (r, c),
                (Err(e), _) | (_, Err(e)) => {
                    writeln!(err, "knitting failed: {e}")?;
                    return Ok(exit::FAILURE);
                }
            };
            if let Some(id) = corrupt {
                corrupt_label(&mut gr, *id);
            }
            let report = pair_components(&gr, &gc, &mr, &mc);
            writeln!(
                out,
                "flavor R: {} vertices, {}",
                gr.vertices.len(),
                gr.status
            )?;
            writeln!(
                out,
                "flavor C: {} vertices, {}",
                gc.vertices.len(),
                gc.status
            )?;
            for c in &report.checks {
                let mark = if c.passed { "pass" } else { "FAIL" };
                match &c.witness {
                    Some(w) if !c.passed => writeln!(out, "{mark}  {}: {w}", c.name)?,
                    _ => writeln!(out, "{mark}  {}", c.name)?,
                }
            }
            for &(r, c) in &report.pairs {
                writeln!(
                    out,
                    "  {} {} <-> {} {}",
                    format_vec(&gr.vertices[r].udim_f),
                    gr.vertices[r].label.short(),
                    format_vec(&gc.vertices[c].udim_f),
                    gc.vertices[c].label.short()
                )?;
            }
            writeln!(
                out,
                "verdict: {}",
                if report.verdict { "pass" } else { "FAIL" }
            )?;
            Ok(if report.verdict {
                exit::OK
            } else {
                exit::FAILURE
            })
        }
        Command::Oracle {
            path,
            q,
            c,
            omega,
            mode,
            flavor,
        } => {
            let poset = load_or_exit!(path, err);
            let spec = match mode {
                ModeArg::Inseparable => FieldSpec::inseparable(poset.p()),
                ModeArg::Cyclic => {
                    let q = q.unwrap_or_else(|| default_order(poset.p()));
                    FieldSpec {
                        p: poset.p(),
                        q,
                        c: c.unwrap_or_else(|| default_constant(poset.p(), q)),
                        omega: *omega,
                        mode: Mode::Cyclic,
                    }
                }
            };
            let mut all = true;
            for f in flavors(*flavor) {
                let report = match verify(&poset, f, &spec) {
                    Ok(r) => r,
                    Err(
                        e @ (OracleError::Tower(_)
                        | OracleError::TooLarge { .. }
                        | OracleError::DegreeMismatch { .. }),
                    ) => {
                        writeln!(err, "error: {e}")?;
                        return Ok(exit::USAGE);
                    }
                    Err(e) => return Err(e.into()),
                };
                writeln!(out, "flavor {f} over {}", report.tower)?;
                for c in &report.checks {
                    let mark = if c.passed { "pass" } else { "FAIL" };
                    if c.passed {
                        writeln!(out, "  {mark}  {}", c.name)?;
                    } else {
                        writeln!(out, "  {mark}  {}: {}", c.name, c.detail)?;
                    }
                }
                all &= report.passed();
            }
            Ok(if all { exit::OK } else { exit::FAILURE })
        }
    }
}

fn is_prime(q: u64) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

fn default_order(p: u32) -> u64 {
    (2..)
        .find(|&q| is_prime(q) && (q - 1) % p as u64 == 0)
        .expect("primes exist")
}

/// The least positive `c` that is not a `p`-th power mod `q`.
fn default_constant(p: u32, q: u64) -> i64 {
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= q;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % q;
            }
            b = b * b % q;
            e >>= 1;
        }
        acc
    };
    (2..q)
        .find(|&c| pow(c, (q - 1) / p as u64) != 1)
        .unwrap_or(0) as i64
}

fn print_info(model: &AlgebraModel, forms: bool, out: &mut dyn Write) -> Result<()> {
    let poset = model.poset();
    let n = model.len();
    let names: Vec<&str> = (0..n).map(|x| poset.name(x)).collect();
    let width = names.iter().map(|s| s.len()).max().unwrap_or(1).max(3);
    writeln!(out, "flavor {} (p = {})", model.flavor(), model.p())?;
    writeln!(out, "hom dimensions (row i, column j: dim e_i Λ e_j):")?;
    write!(out, "  {:width$}", "")?;
    for name in &names {
        write!(out, " {name:>width$}")?;
    }
    writeln!(out)?;
    for i in 0..n {
        write!(out, "  {:width$}", names[i])?;
        for j in 0..n {
            write!(out, " {:>width$}", model.hom_dim(i, j))?;
        }
        writeln!(out, "   udimF {}", format_vec(&model.projective_udim_f(i)))?;
    }
    writeln!(out, "points:")?;
    for i in 0..n {
        let label = model.projective_label(i).short();
        let up = poset.up_set(i);
        let slender = is_slender(poset, &up);
        let hereditary = model.is_hereditary(i);
        let radical = if i == model.top() {
            "radical 0".to_string()
        } else {
            match model.radical_info(i) {
                Ok(r) => {
                    let proj = r
                        .is_projective
                        .map_or("not projective".into(), |j| format!("= P_{}", names[j]));
                    format!(
                        "radical {} x {} {} ({proj}), cd {}",
                        r.multiplicity,
                        format_vec(&r.summand_udim_f),
                        r.summand_label.short(),
                        format_vec(&r.cd)
                    )
                }
                Err(e) => format!("radical: {e}"),
            }
        };
        writeln!(
            out,
            "  {:width$} {label}  hereditary {}  slender up-set {}  {radical}",
            names[i],
            yes_no(hereditary),
            yes_no(slender)
        )?;
    }
    if forms {
        writeln!(out, "gram matrix:")?;
        for row in gram(model) {
            writeln!(out, "  {}", format_vec(&row))?;
        }
        writeln!(out, "form on projective coordinates:")?;
        for i in (0..n).filter(|&i| i != model.zero()) {
            let cd = model.projective_cd(i);
            writeln!(
                out,
                "  q{} = {}  (P_{})",
                format_vec(&cd),
                quadratic(model, &cd),
                names[i]
            )?;
        }
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
