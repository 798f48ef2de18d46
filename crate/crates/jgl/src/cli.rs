//! Argument parsing and dispatch for the `jgl` binary.

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jgl_core::catalog::CatalogSpec;
use jgl_core::flags::{bijection_check, inner_filtration_check, LieFiltration};
use jgl_core::geom::{
    verify_affine_independence_sampled, Atlas, ChartStyle, FlagGeometry, GrassGeometry,
    Orthopolarity, PairGeometry, Point, ProductLineGeometry,
};
use jgl_core::jordan::Sign;
use jgl_core::kernel::Method;
use jgl_core::liealg::{elementary_orbit, tkk};
use jgl_core::report::{Check, Report};
use jgl_core::states::{
    classify_intrinsic, flags_of_type, pure_states, standard_flag, states_equivalence,
};
use jgl_core::{Error, Ring};
use serde_json::{json, Value};

use crate::json::{self, Node, SchemaError, Structure};
use crate::named_algebra;
use crate::output::{Format, Output};
use crate::suites::{self, Ctx};

#[derive(Parser, Debug)]
#[command(
    name = "jgl",
    version,
    about = "Exact checks for Jordan pairs, graded Lie algebras and their geometries"
)]
pub struct Cli {
    /// q, or f<p> for a prime p >= 5.
    #[arg(long, global = true, value_parser = parse_ring)]
    pub ring: Option<Ring>,
    /// Seed for every sampled computation.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write the report (or built structure) here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub report_format: Format,
    /// Worker threads for `suite --name all`; output does not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the axioms of a structure read from JSON.
    Verify(VerifyArgs),
    /// Write a catalog Jordan pair as JSON.
    Catalog {
        family: String,
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
    },
    /// Write the TKK algebra of a pair as JSON.
    Tkk {
        #[arg(long)]
        input: PathBuf,
    },
    /// Grassmannian geometries: structure maps, charts, symmetric spaces.
    #[command(subcommand)]
    Geom(GeomCommand),
    /// Module flags and inner filtrations of graded Lie algebras.
    #[command(subcommand)]
    Flags(FlagsCommand),
    /// Inner ideals, intrinsic subspaces and states.
    #[command(subcommand)]
    States(StatesCommand),
    /// Elementary-group orbit of the base filtration.
    Orbit {
        #[arg(long)]
        algebra: String,
    },
    /// Intrinsic closure of a point set.
    Closure(ClosureArgs),
    /// Run a named acceptance suite (`list` shows them, `all` runs 1-13).
    Suite {
        #[arg(long)]
        name: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MethodArg {
    Basis,
    Polarized,
    Exhaustive,
    Sampled,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = MethodArg::Basis)]
    pub method: MethodArg,
    #[arg(long, default_value_t = 200)]
    pub samples: u64,
    /// Also check the fundamental formula (pairs only).
    #[arg(long)]
    pub fundamental: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GeometryKind {
    Gras,
    Lines,
    Flags,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ChartArg {
    Graph,
    Exp,
}

#[derive(Subcommand, Debug)]
pub enum GeomCommand {
    /// M1-M3 for the dot-form orthopolarity of Gras_a(F^w).
    VerifySs {
        #[arg(long, default_value_t = 4)]
        w: usize,
        #[arg(long, default_value_t = 2)]
        a: usize,
    },
    /// Origin independence of affine combinations.
    VerifyAffine {
        #[arg(long, value_enum, default_value_t = GeometryKind::Gras)]
        geometry: GeometryKind,
        #[arg(long, default_value_t = 4)]
        w: usize,
        #[arg(long, default_value_t = 2)]
        a: usize,
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Member dimensions of the flags, e.g. 1,3.
        #[arg(long, value_delimiter = ',')]
        dims: Vec<usize>,
        #[arg(long, value_enum, default_value_t = ChartArg::Graph)]
        chart: ChartArg,
        /// Number of duals, spread over the enumeration.
        #[arg(long)]
        duals: Option<usize>,
        /// Origins visited per dual.
        #[arg(long)]
        origins: Option<usize>,
    },
    /// Chart law `chart(P_r(x, α, y)) = r chart(y)`.
    ChartLaw {
        #[arg(long, default_value_t = 4)]
        w: usize,
        #[arg(long, default_value_t = 2)]
        a: usize,
        /// Use every dual instead of one per pivot pattern.
        #[arg(long)]
        all_duals: bool,
    },
    /// `P_r(x, α, y)` from JSON representatives.
    Pr {
        #[arg(long)]
        w: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        r: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum FlagsCommand {
    /// Grading -> flags -> grading on seeded random gradings.
    Roundtrip {
        #[arg(long, default_value_t = 4)]
        w: usize,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 4)]
        max_blocks: usize,
    },
    /// The transversal-filtration theorem for the reference pair.
    Theorem {
        #[arg(long)]
        algebra: String,
    },
    /// x -> exp(x)e is a bijection onto the transversal filtrations.
    Bijection {
        #[arg(long)]
        algebra: String,
    },
    /// Inner filtrations through the base one.
    Inner {
        #[arg(long)]
        algebra: String,
    },
}

#[derive(Args, Debug)]
pub struct ClosureArgs {
    #[arg(long, value_enum, default_value_t = GeometryKind::Gras)]
    pub geometry: GeometryKind,
    #[arg(long, default_value_t = 3)]
    pub w: usize,
    #[arg(long, default_value_t = 1)]
    pub a: usize,
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    /// `{"schema_version":1,"kind":"points","points":[…]}`.
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum StatesCommand {
    /// Inner ideals of the base chart against intrinsic subspaces.
    Classify {
        #[arg(long, value_enum, default_value_t = GeometryKind::Gras)]
        geometry: GeometryKind,
        #[arg(long, default_value_t = 4)]
        w: usize,
        #[arg(long, default_value_t = 2)]
        a: usize,
    },
    /// Intrinsic closure of a point set (same as the top-level `closure`).
    Closure(ClosureArgs),
    /// Minimal intrinsic subspaces of the product-line geometry.
    Pure {
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Transversality of states against that of flags, for a base flag type.
    Equivalence {
        #[arg(long, default_value_t = 4)]
        w: usize,
        #[arg(long, default_value_t = 2)]
        a: usize,
        #[arg(long)]
        d1: usize,
        #[arg(long)]
        d2: usize,
    },
}

fn parse_ring(s: &str) -> Result<Ring, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Anything that makes a command unusable; always exit code 2.
#[derive(Debug)]
pub enum UsageError {
    Message(String),
    Schema(SchemaError),
    Core(Error),
    Io(PathBuf, std::io::Error),
}

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UsageError::Message(m) => f.write_str(m),
            UsageError::Schema(e) => write!(f, "schema violation at {e}"),
            UsageError::Core(e) => write!(f, "{e}"),
            UsageError::Io(p, e) => write!(f, "{}: {e}", p.display()),
        }
    }
}

impl std::error::Error for UsageError {}

impl From<SchemaError> for UsageError {
    fn from(e: SchemaError) -> Self {
        UsageError::Schema(e)
    }
}

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError::Core(e)
    }
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError::Message(msg.into())
}

/// What a command produced.
pub enum Outcome {
    Report(Box<Output>),
    /// A built structure; always a success.
    Document(Value),
    Listing(String),
}

/// The command line without `--out` and `--jobs`, which do not affect content.
pub fn command_echo(args: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for a in args {
        if skip {
            skip = false;
            continue;
        }
        if a == "--out" || a == "--jobs" {
            skip = true;
            continue;
        }
        if a.starts_with("--out=") || a.starts_with("--jobs=") {
            continue;
        }
        out.push(a.clone());
    }
    out
}

fn read_file(path: &PathBuf) -> Result<String, UsageError> {
    std::fs::read_to_string(path).map_err(|e| UsageError::Io(path.clone(), e))
}

pub fn run(cli: &Cli, limit: u64) -> Result<Outcome, UsageError> {
    let ring_or = |default: Ring| cli.ring.unwrap_or(default);
    let f5 = Ring::Prime(5);
    let report = |out: Output| Ok(Outcome::Report(Box::new(out)));
    match &cli.command {
        Command::Verify(args) => verify(cli, args),
        Command::Catalog { family, params } => {
            let p = CatalogSpec::parse(family, params)?.build(ring_or(Ring::Rational))?;
            Ok(Outcome::Document(json::pair_json(&p)))
        }
        Command::Tkk { input } => match json::read_structure(&read_file(input)?)? {
            Structure::Pair(p) => Ok(Outcome::Document(json::lie_json(&tkk(&p)))),
            _ => Err(usage("tkk expects a pair document")),
        },
        Command::Geom(g) => geom(g, ring_or(f5), limit),
        Command::Flags(f) => flags(f, ring_or(f5), cli.seed, limit),
        Command::States(s) => states(s, ring_or(f5), limit),
        Command::Orbit { algebra } => {
            let ring = ring_or(f5);
            let g = named_algebra(algebra, ring)?;
            let seed = LieFiltration::from_grading(&g).chain;
            let o = elementary_orbit(&g, &seed, usize::MAX, limit)?;
            let mut r = Report::new();
            r.push(
                Check::new("OrbitClosed", o.closed)
                    .note("orbit_size", o.len())
                    .note("depth", o.depth),
            );
            report(Output::new(r).ring(ring).with("orbit_size", json!(o.len())))
        }
        Command::Closure(args) => closure(args, ring_or(f5), limit),
        Command::Suite { name } => suite(name, cli, limit),
    }
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Result<Outcome, UsageError> {
    let s = json::read_structure(&read_file(&args.input)?)?;
    if let Some(r) = cli.ring {
        if r != s.ring() {
            return Err(usage(format!(
                "--ring {r} does not match the document ring {}",
                s.ring()
            )));
        }
    }
    let method = match args.method {
        MethodArg::Basis => Method::Basis,
        MethodArg::Polarized => Method::Polarized,
        MethodArg::Exhaustive => Method::Exhaustive {
            limit: jgl_core::DEFAULT_MAX_ENUM,
        },
        MethodArg::Sampled => match cli.seed {
            Some(seed) => Method::Sampled {
                seed,
                samples: args.samples,
            },
            None => return Err(usage("--method sampled requires --seed")),
        },
    };
    let mut r = match &s {
        Structure::Pair(p) => p.verify(method)?,
        Structure::Jts(t) => t.verify(method)?,
        Structure::Lts(t) => t.verify(method)?,
        Structure::Algebra(a) => a.verify(method)?,
        Structure::Lie(g) => g.verify_lie()?,
    };
    if args.fundamental {
        let Structure::Pair(p) = &s else {
            return Err(usage("--fundamental applies to pairs"));
        };
        for sign in Sign::both() {
            r.push(p.check_fundamental(sign, method)?);
        }
    }
    Ok(Outcome::Report(Box::new(Output::new(r).ring(s.ring()))))
}

fn flag_geometry(
    ring: Ring,
    w: usize,
    dims: &[usize],
    chart: ChartArg,
) -> Result<FlagGeometry, UsageError> {
    if dims.is_empty() {
        return Err(usage("--dims is required for flag geometries"));
    }
    let style = match chart {
        ChartArg::Graph => ChartStyle::Graph,
        ChartArg::Exp => ChartStyle::Exp,
    };
    Ok(FlagGeometry::new(ring, w, dims)?.with_style(style))
}

fn spread<T: Clone>(items: Vec<T>, n: Option<usize>) -> Vec<T> {
    match n {
        Some(n) if n < items.len() => {
            let step = items.len().div_ceil(n.max(1));
            items.into_iter().step_by(step).take(n).collect()
        }
        _ => items,
    }
}

fn geom(cmd: &GeomCommand, ring: Ring, limit: u64) -> Result<Outcome, UsageError> {
    let out = match cmd {
        GeomCommand::VerifySs { w, a } => {
            let op = Orthopolarity::dot(GrassGeometry::new(ring, *w, *a)?)?;
            Output::new(op.verify_symmetric_space(limit)?)
        }
        GeomCommand::VerifyAffine {
            geometry,
            w,
            a,
            m,
            dims,
            chart,
            duals,
            origins,
        } => {
            let origins = origins.unwrap_or(usize::MAX);
            let r = match geometry {
                GeometryKind::Gras => {
                    let g = GrassGeometry::new(ring, *w, *a)?;
                    let ds = match duals {
                        Some(_) => spread(g.duals(limit)?, *duals),
                        None => g.pivot_representatives(limit)?,
                    };
                    verify_affine_independence_sampled(&g, &ds, origins, limit)?
                }
                GeometryKind::Lines => {
                    let g = ProductLineGeometry::new(ring, *m)?;
                    verify_affine_independence_sampled(
                        &g,
                        &spread(g.duals(limit)?, *duals),
                        origins,
                        limit,
                    )?
                }
                GeometryKind::Flags => {
                    let g = flag_geometry(ring, *w, dims, *chart)?;
                    let ds = spread(g.duals(limit)?, Some(duals.unwrap_or(3)));
                    verify_affine_independence_sampled(&g, &ds, origins.min(20), limit)?
                }
            };
            Output::new(r)
        }
        GeomCommand::ChartLaw { w, a, all_duals } => {
            let g = GrassGeometry::new(ring, *w, *a)?;
            let ds = if *all_duals {
                g.duals(limit)?
            } else {
                g.pivot_representatives(limit)?
            };
            Output::new(g.chart_law(&ds, limit)?)
        }
        GeomCommand::Pr {
            w,
            a,
            x,
            alpha,
            y,
            r,
        } => {
            let g = GrassGeometry::new(ring, *w, *a)?;
            let parse = |name: &str, text: &str| -> Result<Value, UsageError> {
                json::parse(text).map_err(|e| usage(format!("--{name}: {}", e.message)))
            };
            let (xv, av, yv) = (parse("x", x)?, parse("alpha", alpha)?, parse("y", y)?);
            let xp = json::read_point(
                &Node {
                    value: &xv,
                    path: "--x".into(),
                },
                &g,
            )?;
            let ap = json::read_dual(
                &Node {
                    value: &av,
                    path: "--alpha".into(),
                },
                &g,
            )?;
            let yp = json::read_point(
                &Node {
                    value: &yv,
                    path: "--y".into(),
                },
                &g,
            )?;
            let r = ring.parse_scalar(r)?;
            if !g.transversal(&xp, &ap) || !g.transversal(&yp, &ap) {
                return Err(usage("x and y must both be transversal to alpha"));
            }
            let z = g.p_r(&xp, &ap, &yp, r)?;
            let mut rep = Report::new();
            rep.push(Check::pass("Transversal"));
            Output::new(rep).with("point", json::point_json(&z))
        }
    };
    Ok(Outcome::Report(Box::new(out.ring(ring))))
}

fn flags(
    cmd: &FlagsCommand,
    ring: Ring,
    seed: Option<u64>,
    limit: u64,
) -> Result<Outcome, UsageError> {
    let mut r = Report::new();
    match cmd {
        FlagsCommand::Roundtrip {
            w,
            count,
            max_blocks,
        } => {
            let seed =
                seed.ok_or_else(|| usage("flags roundtrip samples gradings and requires --seed"))?;
            if *w == 0 || *max_blocks == 0 {
                return Err(usage("--w and --max-blocks must be positive"));
            }
            r.push(suites::grading_roundtrip(
                ring,
                *w,
                *max_blocks,
                seed,
                *count,
            )?);
        }
        FlagsCommand::Theorem { algebra } => {
            let g = named_algebra(algebra, ring)?;
            let f = LieFiltration::from_grading(&g);
            let e = LieFiltration::opposite_from_grading(&g);
            r = jgl_core::flags::lie_flag_theorem_check(&g, &e, &f)?;
        }
        FlagsCommand::Bijection { algebra } => {
            r = bijection_check(&named_algebra(algebra, ring)?, limit)?
        }
        FlagsCommand::Inner { algebra } => {
            let g = named_algebra(algebra, ring)?;
            r = inner_filtration_check(&g, &LieFiltration::from_grading(&g), limit)?;
        }
    }
    Ok(Outcome::Report(Box::new(Output::new(r).ring(ring))))
}

fn states(cmd: &StatesCommand, ring: Ring, limit: u64) -> Result<Outcome, UsageError> {
    let out = match cmd {
        StatesCommand::Classify { geometry, w, a } => {
            if *geometry != GeometryKind::Gras {
                return Err(usage("classify works on Grassmannians (--geometry gras)"));
            }
            let g = GrassGeometry::new(ring, *w, *a)?;
            let sr = classify_intrinsic(&g, limit)?;
            let rows: Vec<Value> = sr
                .rows
                .iter()
                .map(|row| {
                    let mut v =
                        json!({"ideal": json::subspace_json(&row.ideal), "inner": row.inner});
                    if let Some(c) = &row.closure {
                        v["closure_size"] = json!(c.len());
                    }
                    if let Some((f1, f2)) = &row.flag {
                        v["flag"] = json::flag_json(g.w, &[f1.clone(), f2.clone()]);
                    }
                    v
                })
                .collect();
            Output::new(sr.report).with("rows", Value::Array(rows))
        }
        StatesCommand::Closure(args) => return closure(args, ring, limit),
        StatesCommand::Pure { m } => {
            Output::new(pure_states(&ProductLineGeometry::new(ring, *m)?, limit)?.report)
        }
        StatesCommand::Equivalence { w, a, d1, d2 } => {
            if !(d1 <= a && a <= d2 && d2 <= w) {
                return Err(usage("need d1 <= a <= d2 <= w"));
            }
            let g = GrassGeometry::new(ring, *w, *a)?;
            let base = standard_flag(ring, *w, *d1, *d2);
            let es = flags_of_type(ring, *w, w - d2, w - d1);
            Output::new(states_equivalence(&g, &[base], &es)?)
        }
    };
    Ok(Outcome::Report(Box::new(out.ring(ring))))
}

fn closure_report<G: PairGeometry>(
    g: &G,
    pts: Vec<G::Point>,
    limit: u64,
    show: impl Fn(&G::Point) -> Value,
) -> Result<Output, UsageError> {
    let atlas = Atlas::new(g, limit)?;
    let intrinsic = jgl_core::states::is_intrinsic(&atlas, &pts)?;
    let closure = jgl_core::states::intrinsic_closure(&atlas, &pts)?;
    let mut r = Report::new();
    r.push(
        Check::pass("Closure")
            .note("input_size", pts.len())
            .note("closure_size", closure.len())
            .note("input_intrinsic", intrinsic),
    );
    Ok(Output::new(r).with("closure", Value::Array(closure.iter().map(show).collect())))
}

fn closure(args: &ClosureArgs, ring: Ring, limit: u64) -> Result<Outcome, UsageError> {
    let value = json::parse(&read_file(&args.input)?)?;
    let root = Node::root(&value);
    root.only(&["schema_version", "kind", "points"])?;
    if json::header(&root)? != "points" {
        return Err(root.get("kind")?.err("expected a points document").into());
    }
    let items = root.get("points")?.items()?;
    if items.is_empty() {
        return Err(root
            .get("points")?
            .err("at least one point is required")
            .into());
    }
    let out = match args.geometry {
        GeometryKind::Gras => {
            let g = GrassGeometry::new(ring, args.w, args.a)?;
            let pts: Vec<Point> = items
                .iter()
                .map(|n| json::read_point(n, &g))
                .collect::<Result<_, _>>()?;
            closure_report(&g, pts, limit, json::point_json)?
        }
        GeometryKind::Lines => {
            let g = ProductLineGeometry::new(ring, args.m)?;
            let mut pts = Vec::new();
            for n in &items {
                n.only(&["factors"])?;
                let factors = n.get("factors")?;
                let fs = factors.items()?;
                if fs.len() != args.m {
                    return Err(factors.err(format!("expected {} factors", args.m)).into());
                }
                pts.push(
                    fs.iter()
                        .map(|f| json::read_point(f, &g.line))
                        .collect::<Result<Vec<_>, _>>()?,
                );
            }
            closure_report(
                &g,
                pts,
                limit,
                |p| json!({"factors": p.iter().map(json::point_json).collect::<Vec<_>>()}),
            )?
        }
        GeometryKind::Flags => {
            return Err(usage("closures are computed for gras and lines geometries"))
        }
    };
    Ok(Outcome::Report(Box::new(out.ring(ring))))
}

fn suite(name: &str, cli: &Cli, limit: u64) -> Result<Outcome, UsageError> {
    let ctx = Ctx {
        seed: cli.seed.unwrap_or(suites::DEFAULT_SEED),
        limit,
    };
    match name {
        "list" => {
            let lines: Vec<String> = suites::SUITES
                .iter()
                .map(|s| format!("{:>2}  {:<16} {}", s.criterion, s.id, s.title))
                .collect();
            Ok(Outcome::Listing(lines.join("\n") + "\n"))
        }
        "all" => {
            let chosen: Vec<&'static suites::Suite> = suites::SUITES
                .iter()
                .filter(|s| s.id != "determinism")
                .collect();
            let outs = suites::run_many(&chosen, &ctx, cli.jobs as usize);
            let mut r = Report::new();
            for (s, o) in chosen.iter().zip(outs) {
                r.extend_prefixed(s.id, o.report);
            }
            Ok(Outcome::Report(Box::new(Output::new(r))))
        }
        id => match suites::find(id) {
            Some(s) => Ok(Outcome::Report(Box::new(s.run(&ctx)))),
            None => Err(usage(format!(
                "unknown suite `{id}` (try `suite --name list`)"
            ))),
        },
    }
}
