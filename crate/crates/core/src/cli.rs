//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::additive::{quasideterminant, quasideterminant_via_inverse, solve_additive, ComplexAdditiveMap};
use crate::algebra::{AlgElement, AlgebraKind, FreeAlgebra};
use crate::error::{Error, Result};
use crate::io::{builtin_algebra, load_algebra, read_matrix_file, AdditiveSystem, AlgebraFile};
use crate::linmap::{b_matrix, representation_basis, standard_from_coords, LinearMap, Nesting};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::verify::{self, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SINGULAR: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "fdalgebra", version, about = "Exact computations in free finite-dimensional algebras")]
struct Cli {
    /// Emit `key=value` lines instead of text tables.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve a square system of additive equations from a JSON file.
    Solve {
        file: PathBuf,
        /// Also print every quasideterminant of the matrix.
        #[arg(long)]
        quasidets: bool,
    },
    /// Print conversion tables recomputed from the structure constants.
    Tables {
        which: TableName,
        /// Also list every relation in both directions.
        #[arg(long)]
        relations: bool,
        #[arg(long, default_value = "left")]
        order: Nesting,
    },
    /// Recompute identities and tables; exits 1 if any check fails.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Generators of the linear maps under the tensor action.
    Basis {
        algebra: String,
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value = "left")]
        order: Nesting,
    },
    /// Algebra definition files.
    #[command(subcommand)]
    Algebra(AlgebraCommand),
    /// Conversions between coordinates and standard components.
    #[command(subcommand)]
    Map(MapCommand),
}

#[derive(Debug, Subcommand)]
enum AlgebraCommand {
    /// Print the definition file of a built-in algebra.
    Builtin {
        name: String,
        #[command(flatten)]
        params: Params,
    },
}

#[derive(Debug, Subcommand)]
enum MapCommand {
    /// Standard components of the map whose coordinate matrix is in a file.
    Convert {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        coords: PathBuf,
        #[arg(long, default_value = "left")]
        order: Nesting,
        #[command(flatten)]
        params: Params,
    },
    /// Generators of the linear maps under the tensor action.
    Basis {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = "left")]
        order: Nesting,
        #[command(flatten)]
        params: Params,
    },
}

#[derive(Debug, clap::Args)]
struct Params {
    /// Quaternion parameter `a` (i² = a).
    #[arg(long, allow_hyphen_values = true)]
    a: Option<Rational>,
    /// Quaternion parameter `b` (j² = b).
    #[arg(long, allow_hyphen_values = true)]
    b: Option<Rational>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableName {
    Complex,
    Quaternion,
    Octonion,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    Ch4,
    Teichmueller,
    Shifts,
    Quasidet,
    Tensor,
    Orbits,
    Bases,
    CauchyRiemann,
    All,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let mut w = Out { out, machine: cli.machine };
    let result = match cli.command {
        Command::Solve { file, quasidets } => cmd_solve(&mut w, &file, quasidets),
        Command::Tables { which, relations, order } => cmd_tables(&mut w, which, relations, order),
        Command::Verify { suite, seed } => cmd_verify(&mut w, suite, seed),
        Command::Basis { algebra, params, order } | Command::Map(MapCommand::Basis { algebra, params, order }) => {
            cmd_basis(&mut w, &algebra, params, order)
        }
        Command::Algebra(AlgebraCommand::Builtin { name, params }) => cmd_builtin(&mut w, &name, params),
        Command::Map(MapCommand::Convert { algebra, coords, order, params }) => {
            cmd_convert(&mut w, &algebra, &coords, order, params)
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SingularSystem { .. }
        | Error::MinorSingular { .. }
        | Error::SingularMap
        | Error::SingularTensor(_)
        | Error::NotRepresentable { .. } => EXIT_SINGULAR,
        _ => EXIT_INPUT,
    }
}

struct Out<'a> {
    out: &'a mut dyn Write,
    machine: bool,
}

impl Out<'_> {
    fn line(&mut self, s: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", s.as_ref()).map_err(|e| Error::Io(e.to_string()))
    }

    fn kv(&mut self, key: impl AsRef<str>, value: impl std::fmt::Display) -> Result<()> {
        self.line(format!("{}={value}", key.as_ref()))
    }

    fn matrix(&mut self, key: &str, m: &Matrix) -> Result<()> {
        if self.machine {
            for r in 0..m.rows() {
                let row: Vec<String> = m.row(r).iter().map(ToString::to_string).collect();
                self.kv(format!("{key}.row.{r}"), row.join(" "))?;
            }
            Ok(())
        } else {
            self.line(m.to_string().trim_end())
        }
    }
}

fn coords_string(x: &AlgElement) -> String {
    x.coords().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn entry_string(f: &LinearMap) -> String {
    if matches!(f.source().kind(), AlgebraKind::Complex) {
        if let Ok(c) = ComplexAdditiveMap::from_linear_map(f) {
            return c.to_string();
        }
    }
    f.coords().to_string()
}

/// Names the first unknown coordinate without a pivot in the flattened system.
fn singular_pivot(sys: &AdditiveSystem) -> Option<String> {
    let n = sys.algebra.dim();
    let (_, pivots) = sys.matrix.flatten().rref();
    let col = (0..sys.matrix.cols() * n).find(|c| !pivots.contains(c))?;
    Some(format!("no pivot for coordinate {} of {}", col % n, sys.variables[col / n]))
}

fn singular_minor(sys: &AdditiveSystem) -> Option<String> {
    let n = sys.matrix.rows();
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find_map(|(i, j)| match quasideterminant(&sys.matrix, i, j) {
        Err(e @ Error::MinorSingular { .. }) => Some(format!("quasideterminant ({i}, {j}): {e}")),
        _ => None,
    })
}

fn cmd_solve(w: &mut Out, file: &std::path::Path, quasidets: bool) -> Result<i32> {
    let sys = AdditiveSystem::load(file)?;
    let x = match solve_additive(&sys.matrix, &sys.rhs) {
        Ok(x) => x,
        Err(e @ Error::SingularSystem { .. }) => {
            for d in [singular_pivot(&sys), singular_minor(&sys)].into_iter().flatten() {
                if w.machine {
                    w.kv("singular", d)?;
                } else {
                    w.line(format!("singular: {d}"))?;
                }
            }
            return Err(e);
        }
        Err(e) => return Err(e),
    };
    if w.machine {
        w.kv("status", "ok")?;
        for (name, v) in sys.variables.iter().zip(&x) {
            w.kv(format!("solution.{name}"), v)?;
            w.kv(format!("solution.{name}.coords"), coords_string(v))?;
        }
    } else {
        for (name, v) in sys.variables.iter().zip(&x) {
            w.line(format!("{name} = {v}"))?;
        }
        w.line("substitution check:")?;
    }
    for (r, rhs) in sys.rhs.iter().enumerate() {
        let mut lhs = AlgElement::zero(&sys.algebra);
        for (c, v) in x.iter().enumerate() {
            lhs = lhs.checked_add(&sys.matrix.get(r, c).apply(v)?)?;
        }
        let ok = &lhs == rhs;
        if w.machine {
            w.kv(format!("check.{}", r + 1), if ok { "ok" } else { "failed" })?;
        } else {
            w.line(format!("  equation {}: {lhs} = {rhs}  {}", r + 1, if ok { "ok" } else { "FAILED" }))?;
        }
        if !ok {
            return Err(Error::SubstitutionCheckFailed { equation: r + 1 });
        }
    }
    if quasidets {
        let n = sys.matrix.rows();
        if !w.machine {
            w.line("quasideterminants:")?;
        }
        for i in 0..n {
            for j in 0..n {
                let (q, path) = match quasideterminant(&sys.matrix, i, j) {
                    Ok(q) => (q, "recursion"),
                    Err(Error::MinorSingular { .. }) => (quasideterminant_via_inverse(&sys.matrix, i, j)?, "inverse"),
                    Err(e) => return Err(e),
                };
                if w.machine {
                    w.kv(format!("quasidet.{i}.{j}"), entry_string(&q))?;
                } else {
                    w.line(format!("  |M|_({i},{j}) = {}  [{path}]", entry_string(&q)))?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_tables(w: &mut Out, which: TableName, relations: bool, order: Nesting) -> Result<i32> {
    let alg = match which {
        TableName::Complex => crate::builtin::complex_algebra(),
        TableName::Quaternion => crate::builtin::hamilton(),
        TableName::Octonion => crate::builtin::octonion_algebra(),
    };
    let b = b_matrix(&alg, order);
    if w.machine {
        w.kv("algebra", format!("{which:?}").to_lowercase())?;
        w.kv("order", order)?;
        w.kv("b.rank", b.rank())?;
    } else {
        w.line(format!("{} ({order} nesting), rank of B = {}", alg.labels().join(" "), b.rank()))?;
    }
    let tables = match which {
        TableName::Complex => None,
        TableName::Quaternion => Some(verify::quaternion_sign_tables()?),
        TableName::Octonion => Some(verify::octonion_sign_tables()?),
    };
    if let Some(t) = &tables {
        if order == Nesting::Right && !w.machine {
            w.line("sign matrices use the left-nested block layout")?;
        }
        let factor = t.denominator.recip().unwrap_or_else(Rational::one);
        if w.machine {
            w.matrix("f", &t.f)?;
            w.kv("f_inv.factor", &factor)?;
            w.matrix("f_inv.scaled", &t.scaled_inverse())?;
            w.kv("blocks.consistent", t.consistent)?;
        } else {
            w.line("F =")?;
            w.matrix("f", &t.f)?;
            w.line(format!("F^-1 = {factor} *"))?;
            w.matrix("f_inv", &t.scaled_inverse())?;
            w.line(format!("every block gives the same F: {}", if t.consistent { "yes" } else { "no" }))?;
        }
    }
    if relations || tables.is_none() {
        let forward = verify::forward_relations(&alg, order);
        let inverse = verify::inverse_relations(&alg, order);
        if w.machine {
            for (n, r) in forward.iter().enumerate() {
                w.kv(format!("forward.{n}"), r)?;
            }
            for (n, r) in inverse.iter().flatten().enumerate() {
                w.kv(format!("inverse.{n}"), r)?;
            }
        } else {
            w.line("coordinates:")?;
            for r in &forward {
                w.line(format!("  {r}"))?;
            }
            match &inverse {
                Some(inv) => {
                    w.line("standard components:")?;
                    for r in inv {
                        w.line(format!("  {r}"))?;
                    }
                }
                None => w.line("B is singular; standard components are not determined by coordinates")?,
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(w: &mut Out, suite: Suite, seed: u64) -> Result<i32> {
    let reports: Vec<VerificationReport> = match suite {
        Suite::Ch4 => vec![verify::tables_suite()?],
        Suite::Teichmueller => vec![verify::teichmueller(200, seed)?],
        Suite::Shifts => vec![verify::shift_laws(200, seed)?],
        Suite::Quasidet => vec![verify::quasideterminant_agreement(100, seed)?],
        Suite::Tensor => vec![verify::tensor_structure()?, verify::twisted_homomorphism(100, seed)?],
        Suite::Orbits => vec![verify::orbit_invariance(50, seed)?],
        Suite::Bases => vec![verify::representation_bases()?],
        Suite::CauchyRiemann => vec![verify::cauchy_riemann(50, seed)?],
        Suite::All => vec![
            verify::tables_suite()?,
            verify::teichmueller(200, seed)?,
            verify::shift_laws(200, seed)?,
            verify::quasideterminant_agreement(100, seed)?,
            verify::tensor_structure()?,
            verify::twisted_homomorphism(100, seed)?,
            verify::orbit_invariance(50, seed)?,
            verify::representation_bases()?,
            verify::cauchy_riemann(50, seed)?,
        ],
    };
    let mut first_failure = None;
    for r in &reports {
        if w.machine {
            w.kv("subject", &r.subject)?;
            for (n, c) in r.checks.iter().enumerate() {
                w.kv(format!("check.{n}.name"), &c.name)?;
                w.kv(format!("check.{n}.expected"), &c.expected)?;
                w.kv(format!("check.{n}.actual"), &c.actual)?;
                w.kv(format!("check.{n}.pass"), c.pass)?;
            }
            for (n, note) in r.notes.iter().enumerate() {
                w.kv(format!("note.{n}"), note)?;
            }
            w.kv("passed", r.pass_count())?;
            w.kv("total", r.checks.len())?;
        } else {
            w.line(r.to_string().trim_end())?;
        }
        if first_failure.is_none() {
            first_failure = r.first_failure().map(|c| c.name.clone());
        }
    }
    match first_failure {
        Some(name) => {
            if w.machine {
                w.kv("first_failure", &name)?;
            } else {
                w.line(format!("first failing check: {name}"))?;
            }
            Ok(EXIT_VERIFY)
        }
        None => Ok(EXIT_OK),
    }
}

fn algebra_arg(spec: &str, params: Params) -> Result<FreeAlgebra> {
    load_algebra(spec, params.a, params.b)
}

fn cmd_basis(w: &mut Out, spec: &str, params: Params, order: Nesting) -> Result<i32> {
    let alg = algebra_arg(spec, params)?;
    let gens = representation_basis(&alg, order)?;
    if w.machine {
        w.kv("order", order)?;
        w.kv("generators", gens.len())?;
    } else {
        w.line(format!("{} generator(s), {order} nesting", gens.len()))?;
    }
    for (n, g) in gens.iter().enumerate() {
        if !w.machine {
            w.line(format!("generator {}:", n + 1))?;
        }
        w.matrix(&format!("generator.{n}"), g.coords())?;
    }
    Ok(EXIT_OK)
}

fn cmd_builtin(w: &mut Out, name: &str, params: Params) -> Result<i32> {
    let alg = builtin_algebra(name, params.a, params.b)?
        .ok_or_else(|| Error::Parse(format!("unknown built-in algebra `{name}` (complex, quaternion, hamilton, octonion)")))?;
    let file = AlgebraFile::from_algebra(&alg);
    if w.machine {
        w.kv("dim", file.dim)?;
        w.kv("labels", file.labels.join(" "))?;
        if let Some(u) = file.unit {
            w.kv("unit", u)?;
        }
        for (i, j, k, v) in &file.constants {
            w.kv(format!("constant.{i}.{j}.{k}"), v)?;
        }
    } else {
        write!(w.out, "{}", file.to_json()).map_err(|e| Error::Io(e.to_string()))?;
    }
    Ok(EXIT_OK)
}

fn cmd_convert(w: &mut Out, spec: &str, coords: &std::path::Path, order: Nesting, params: Params) -> Result<i32> {
    let alg = algebra_arg(spec, params)?;
    let m = read_matrix_file(coords)?;
    let g = LinearMap::endo(&alg, m)?;
    let sol = standard_from_coords(&g, order)?;
    if w.machine {
        w.kv("order", order)?;
        w.kv("rank", sol.rank)?;
        w.kv("unique", sol.is_unique())?;
        w.matrix("particular", sol.particular.components())?;
        for (n, t) in sol.nullspace.iter().enumerate() {
            w.matrix(&format!("nullspace.{n}"), t.components())?;
        }
    } else {
        w.line(format!("rank of B = {}, {order} nesting", sol.rank))?;
        w.line("standard components:")?;
        w.matrix("particular", sol.particular.components())?;
        if sol.is_unique() {
            w.line("unique")?;
        } else {
            w.line(format!("plus any combination of {} free direction(s):", sol.nullspace.len()))?;
            for t in &sol.nullspace {
                w.matrix("", t.components())?;
                w.line("")?;
            }
        }
    }
    Ok(EXIT_OK)
}
