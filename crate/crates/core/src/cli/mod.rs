//! The `dehn` command-line front end.
//!
//! [`run`] parses arguments, executes one command and returns the exit code
//! with the rendered document, so the binary is a thin wrapper around it.
//! Exit codes: 0 success, 2 input that does not parse (including usage
//! errors), 3 well-formed input that violates a precondition.

mod examples;

use std::ffi::OsString;
use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bounds::{self, BoundContext, FillingClaim, FiniteType, MultiplicityCertificate};
use crate::cable::{self, CableSpace};
use crate::charvar::{self, ComponentIndex, Tolerance, C64};
use crate::lattice::{h1_filling_order, PeripheralClass, Slope};
use crate::pretzel::{self, EdgePathSystem};
use crate::seifert::SeifertData;
use crate::seminorm::{BallGeometry, Classification, CullerShalenSeminorm, IdealFunctional};
use crate::word::Word;
use crate::{Error, Result};

pub use examples::{list_examples, ExampleInfo};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SCHEMA: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Parser)]
#[command(name = "dehn", version, about = "Exact Dehn filling arithmetic: slopes, seminorms, filling bounds, characters, Seifert spaces, cables and pretzel slopes")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for sampled parameter grids.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Half-width of the square drawn by SVG output.
    #[arg(long, global = true, default_value_t = 10.0)]
    pub viewport: f64,
    /// Tolerance for numeric locus membership (reducible, dihedral).
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical form and |H1| of a slope, and its distance to a second slope.
    Slope { a: String, b: Option<String> },
    /// Seminorm from ideal-point functionals.
    Seminorm(SeminormArgs),
    /// Filling bounds and torus-knot surgeries.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Characters of Z/p * Z/q.
    #[command(subcommand)]
    Charvar(CharvarCommand),
    /// Invariants of a closed Seifert fibered space.
    Seifert(InputArgs),
    /// Cable space fillings.
    #[command(subcommand)]
    Cable(CableCommand),
    /// Edge-path twist numbers and pretzel boundary slopes.
    #[command(subcommand)]
    Pretzel(PretzelCommand),
    /// Run a built-in example, or list them.
    Examples(ExampleArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Inline JSON document.
    #[arg(long)]
    pub json: Option<String>,
    /// JSON file, `-` for stdin.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SeminormArgs {
    /// Inline JSON: a list of functionals or `{"functionals": [...]}`.
    #[arg(long)]
    pub functionals: Option<String>,
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub classify: bool,
    #[arg(long)]
    pub ball: bool,
    #[arg(long)]
    pub vertex_slopes: bool,
    /// Evaluate at a class `p,q` (repeatable).
    #[arg(long, value_name = "P,Q", allow_hyphen_values = true)]
    pub eval: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum BoundsCommand {
    /// Classify surgeries on the (p, q) torus knot over a slope grid.
    TorusKnot {
        p: u64,
        q: u64,
        /// `|m| <= M`, `0 <= n <= N`.
        #[arg(long, num_args = 2, value_names = ["M", "N"], default_values_t = [10, 2])]
        grid: Vec<i64>,
        /// Only list finite and cyclic fillings.
        #[arg(long)]
        finite_only: bool,
    },
    /// Norm and distance bounds for every type.
    Table {
        #[arg(long, default_value_t = 5)]
        s_max: i64,
        #[arg(long, default_value_t = 4)]
        n_max: u64,
        /// Assume X0 is index 2 virtually irreducible.
        #[arg(long)]
        vi2: bool,
    },
    /// Type of the (p, q, e) triangle group.
    Triangle { p: u64, q: u64, e: u64 },
    /// Audit claimed finite fillings against the bounds.
    Audit(AuditArgs),
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// `{"functionals": [...], "claims": [...]}`.
    #[arg(long)]
    pub json: Option<String>,
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Audit the trefoil band against its finite and cyclic surgeries.
    #[arg(long)]
    pub trefoil: bool,
}

#[derive(Debug, Subcommand)]
pub enum CharvarCommand {
    /// Number of components and of curve components.
    Counts { p: u64, q: u64 },
    /// Sample the curve component C(j, k) at random parameters plus the
    /// reducible ones.
    Sample {
        p: u32,
        q: u32,
        j: u32,
        k: u32,
        #[arg(long, default_value_t = 10)]
        points: usize,
        /// Sample radius around the origin.
        #[arg(long, default_value_t = 2.0)]
        radius: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CableCommand {
    /// Fill T+ of the (m, n) cable along (kmn+1, k).
    Fill {
        #[arg(allow_hyphen_values = true)]
        m: i64,
        n: i64,
        #[arg(allow_hyphen_values = true)]
        k: i64,
    },
    /// The cable on a D2(2,3,5) Seifert space over a range of k.
    Toroidal {
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, default_value_t = 2)]
        n: i64,
        #[arg(long, default_value_t = -5, allow_hyphen_values = true)]
        k_min: i64,
        #[arg(long, default_value_t = 5, allow_hyphen_values = true)]
        k_max: i64,
    },
    /// The (1,2) cable on the twisted I-bundle over the Klein bottle.
    Klein {
        #[arg(long, default_value_t = -5, allow_hyphen_values = true)]
        k_min: i64,
        #[arg(long, default_value_t = 5, allow_hyphen_values = true)]
        k_max: i64,
    },
    /// Feasible (n, Δ, Δφ) triples with n·Δ·Δφ in {1, 3}.
    Triples,
}

#[derive(Debug, Subcommand)]
pub enum PretzelCommand {
    /// Slope and |H1| for K_{4n+6}, n from N to TO.
    Family {
        #[arg(allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<i64>,
    },
    /// Twist number of an edge-path system.
    Tau(InputArgs),
    /// τ(S), τ(S0) and the boundary slope of the K_m templates.
    Boundary { m: i64 },
    /// Emit a K_m template as JSON.
    Template {
        m: i64,
        #[arg(long, value_enum, default_value_t = TemplateKind::Candidate)]
        kind: TemplateKind,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TemplateKind {
    Candidate,
    Seifert,
}

#[derive(Debug, Args)]
pub struct ExampleArgs {
    pub key: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
    #[arg(long)]
    pub n: Option<i64>,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A rendered result in every format it supports.
#[derive(Debug, Clone)]
pub(crate) struct Doc {
    text: String,
    json: Value,
    csv: Option<String>,
    svg: Option<String>,
}

impl Doc {
    fn new(text: impl Into<String>, json: Value) -> Doc {
        Doc { text: text.into(), json, csv: None, svg: None }
    }

    fn with_csv(mut self, csv: String) -> Doc {
        self.csv = Some(csv);
        self
    }

    fn render(&self, format: Format) -> Result<String> {
        let mut out = match format {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("json values serialize"),
            Format::Csv => self.csv.clone().ok_or_else(|| Error::Parse("csv output is not available for this command".into()))?,
            Format::Svg => self.svg.clone().ok_or_else(|| Error::Parse("svg output is only available for `seminorm --ball`".into()))?,
        };
        if !out.ends_with('\n') {
            out.push('\n');
        }
        Ok(out)
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_SCHEMA } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: rendered, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    let result = execute(&cli).and_then(|doc| doc.render(cli.format));
    match result {
        Ok(text) => match &cli.output {
            Some(path) => match fs::write(path, &text) {
                Ok(()) => Outcome { code: EXIT_OK, stdout: String::new(), stderr: String::new() },
                Err(e) => Outcome {
                    code: EXIT_SCHEMA,
                    stdout: String::new(),
                    stderr: format!("error: cannot write {}: {e}\n", path.display()),
                },
            },
            None => Outcome { code: EXIT_OK, stdout: text, stderr: String::new() },
        },
        Err(e) if e.is_schema() => Outcome { code: EXIT_SCHEMA, stdout: String::new(), stderr: format!("error: {e}\n") },
        Err(e) => Outcome {
            code: EXIT_PRECONDITION,
            stdout: String::new(),
            stderr: format!("precondition violated: {e}\n"),
        },
    }
}

fn execute(cli: &Cli) -> Result<Doc> {
    let tol = Tolerance { locus: cli.tolerance.unwrap_or(Tolerance::default().locus), ..Tolerance::default() };
    match &cli.command {
        Command::Slope { a, b } => slope_cmd(a, b.as_deref()),
        Command::Seminorm(args) => seminorm_cmd(args, cli.viewport),
        Command::Bounds(cmd) => bounds_cmd(cmd),
        Command::Charvar(cmd) => charvar_cmd(cmd, cli.seed, tol),
        Command::Seifert(input) => seifert_cmd(input),
        Command::Cable(cmd) => cable_cmd(cmd),
        Command::Pretzel(cmd) => pretzel_cmd(cmd),
        Command::Examples(args) => examples::run_example(args),
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn read_input(inline: Option<&str>, file: Option<&PathBuf>) -> Result<String> {
    match (inline, file) {
        (Some(text), _) => Ok(text.to_string()),
        (None, Some(path)) if path.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(e.to_string()))?;
            Ok(s)
        }
        (None, Some(path)) => fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display()))),
        (None, None) => Err(Error::Parse("no input given (use --json or --input)".into())),
    }
}

fn parse_slope(s: &str) -> Result<Slope> {
    s.parse::<Slope>().map_err(|e| match e {
        Error::ZeroVector => Error::ZeroVector,
        other => Error::Parse(other.to_string()),
    })
}

fn slope_cmd(a: &str, b: Option<&str>) -> Result<Doc> {
    let a = parse_slope(a)?;
    let order = h1_filling_order(&a);
    let mut text = format!("slope {a}\n|H1| of {a} surgery on a knot in S3: {order}\n");
    let mut json = json!({ "slope": a, "h1_order": order.to_string() });
    if let Some(b) = b {
        let b = parse_slope(b)?;
        let d = a.distance(&b);
        text.push_str(&format!("distance({a}, {b}) = {d}\n"));
        json["other"] = json!(b);
        json["distance"] = json!(d.to_string());
    }
    Ok(Doc::new(text, json))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FunctionalInput {
    List(Vec<IdealFunctional>),
    Object(CullerShalenSeminorm),
}

fn parse_seminorm(text: &str) -> Result<CullerShalenSeminorm> {
    Ok(match parse_json::<FunctionalInput>(text)? {
        FunctionalInput::List(functionals) => CullerShalenSeminorm::new(functionals),
        FunctionalInput::Object(sn) => sn,
    })
}

fn parse_class(s: &str) -> Result<PeripheralClass> {
    let bad = || Error::Parse(format!("expected P,Q, got {s:?}"));
    let (p, q) = s.split_once(',').ok_or_else(bad)?;
    let p: BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: BigInt = q.trim().parse().map_err(|_| bad())?;
    Ok(PeripheralClass::new(p, q))
}

fn classification_text(c: &Classification, s: &BigInt) -> String {
    match c {
        Classification::Norm => format!("Norm, s={s}"),
        Classification::Indefinite { kernel } => format!("Indefinite kernel {kernel}, s={s}"),
        Classification::Zero => format!("Zero, s={s}"),
    }
}

fn ball_text(ball: &BallGeometry) -> String {
    match ball {
        BallGeometry::Polygon { vertices } => {
            let v: Vec<String> = vertices.iter().map(ToString::to_string).collect();
            format!("polygon with vertices {}", v.join(" "))
        }
        BallGeometry::Band { kernel, halfwidth } => format!("band along {kernel} with halfwidth {halfwidth}"),
        BallGeometry::Plane => "the whole plane".to_string(),
    }
}

fn seminorm_cmd(args: &SeminormArgs, viewport: f64) -> Result<Doc> {
    let sn = parse_seminorm(&read_input(args.functionals.as_deref(), args.input.as_ref())?)?;
    let class = sn.classify();
    let s = sn.minimal_value();
    let all = !(args.classify || args.ball || args.vertex_slopes || !args.eval.is_empty());
    let mut lines = Vec::new();
    let mut json = json!({});
    if args.classify || all {
        lines.push(classification_text(&class, &s));
        json["classification"] = json!(class);
        json["s"] = json!(s.to_string());
    }
    let mut svg = None;
    if args.ball || all {
        let ball = sn.fundamental_ball();
        lines.push(format!("ball: {}", ball_text(&ball)));
        svg = Some(ball.to_svg(viewport));
        json["ball"] = json!(ball);
    }
    if args.vertex_slopes {
        let vs = sn.vertex_slopes()?;
        let names: Vec<String> = vs.iter().map(ToString::to_string).collect();
        lines.push(format!("vertex slopes: {}", names.join(", ")));
        json["vertex_slopes"] = json!(vs);
    }
    if !args.eval.is_empty() {
        let mut evals = Vec::new();
        for e in &args.eval {
            let v = parse_class(e)?;
            let val = sn.evaluate(&v);
            lines.push(format!("||{v}|| = {val}"));
            evals.push(json!({ "class": v, "value": val.to_string() }));
        }
        json["evaluations"] = json!(evals);
    }
    let mut doc = Doc::new(lines.join("\n"), json);
    if args.ball || all {
        doc.svg = svg;
    }
    Ok(doc)
}

fn bounds_cmd(cmd: &BoundsCommand) -> Result<Doc> {
    match cmd {
        BoundsCommand::TorusKnot { p, q, grid, finite_only } => {
            let (m_max, n_max) = (grid[0], grid[1]);
            if m_max < 0 || n_max < 0 {
                return Err(Error::Parse("grid bounds must be nonnegative".into()));
            }
            let fiber = bounds::torus_fiber_slope(*p, *q);
            let mut rows = Vec::new();
            let mut text = format!("surgeries on the ({p},{q}) torus knot, fiber slope {}/1\n", fiber.p);
            let mut csv = String::from("slope,m,n,distance_to_fiber,class,finite_or_cyclic\n");
            for r in bounds::primitive_grid(m_max, n_max) {
                let class = bounds::torus_knot_surgery(*p, *q, &r)?;
                if *finite_only && !class.is_finite_or_cyclic() {
                    continue;
                }
                let d = r.class().distance(&fiber);
                text.push_str(&format!("{:>10}  {d:>5}  {class}\n", r.to_string()));
                csv.push_str(&format!("{r},{},{},{d},\"{class}\",{}\n", r.p(), r.q(), class.is_finite_or_cyclic()));
                rows.push(json!({
                    "slope": r,
                    "distance_to_fiber": d.to_string(),
                    "finite_or_cyclic": class.is_finite_or_cyclic(),
                    "class": class,
                }));
            }
            Ok(Doc::new(text, Value::Array(rows)).with_csv(csv))
        }
        BoundsCommand::Table { s_max, n_max, vi2 } => {
            let mut rows = Vec::new();
            let mut text = String::from("type  s  n  norm bound  distance bound\n");
            let mut csv = String::from("type,s,n_dihedral,vi2,norm_bound_kind,norm_bound,distance_bound,distance_floor\n");
            for t in FiniteType::ALL {
                for s in 1..=*s_max {
                    for n in 0..=*n_max {
                        let mut ctx = BoundContext::new(s, MultiplicityCertificate::NotBoundarySlope).with_dihedral(n);
                        if *vi2 {
                            ctx = ctx.with_virtually_irreducible(2);
                        }
                        let nb = bounds::norm_bound(t, &ctx)?;
                        let db = bounds::distance_bound(t, &ctx)?;
                        text.push_str(&format!("{t:>4} {s:>2} {n:>2}  {nb:>10}  <= {}\n", db.exact));
                        let kind = match nb {
                            bounds::NormBound::Exact(_) => "exact",
                            bounds::NormBound::AtMost(_) => "at_most",
                        };
                        csv.push_str(&format!("{t},{s},{n},{vi2},{kind},{},{},{}\n", nb.value(), db.exact, db.floor));
                        rows.push(json!({ "type": t, "s": s, "n_dihedral": n, "vi2": vi2, "norm_bound": nb, "distance_bound": db }));
                    }
                }
            }
            Ok(Doc::new(text, Value::Array(rows)).with_csv(csv))
        }
        BoundsCommand::Triangle { p, q, e } => {
            let t = bounds::triangle_type(*p, *q, *e)?;
            Ok(Doc::new(format!("({p},{q},{e}) triangle group: {t}"), json!({ "triple": [p, q, e], "type": t })))
        }
        BoundsCommand::Audit(args) => {
            #[derive(Deserialize)]
            struct AuditInput {
                #[serde(default)]
                functionals: Vec<IdealFunctional>,
                #[serde(default)]
                claims: Vec<FillingClaim>,
            }
            let (sn, claims) = if args.trefoil {
                (CullerShalenSeminorm::from_coefficients(&[(1, -6)]), bounds::torus_knot_claims(3, 2, 100, 10, 1, 1)?)
            } else {
                let input: AuditInput = parse_json(&read_input(args.json.as_deref(), args.input.as_ref())?)?;
                (CullerShalenSeminorm::new(input.functionals), input.claims)
            };
            let report = bounds::audit_fillings(&sn, &claims);
            Ok(Doc::new(audit_text(&report, claims.len()), json!(report)))
        }
    }
}

pub(crate) fn audit_text(report: &bounds::AuditReport, claims: usize) -> String {
    let mut text = format!(
        "{claims} claims, {} violations, {} attaining their bound, {} skipped\n",
        report.violations.len(),
        report.sharp.len(),
        report.skipped.len()
    );
    for v in &report.violations {
        text.push_str(&format!("violation: {} ({}-type): {}\n", v.slope, v.finite_type, v.reason));
    }
    for t in FiniteType::ALL {
        let hits: Vec<&bounds::Attained> = report.sharp.iter().filter(|a| a.finite_type == t).collect();
        if let Some(first) = hits.first() {
            let at = first.distance.as_ref().map(|d| format!("distance {d}")).unwrap_or_else(|| format!("norm {}", first.norm));
            text.push_str(&format!("{t}-type bound attained by {} slope(s), e.g. {} at {at}\n", hits.len(), first.slope));
        }
    }
    for (s, why) in &report.skipped {
        text.push_str(&format!("skipped {s}: {why}\n"));
    }
    text
}

fn c64_json(z: C64) -> Value {
    json!([z.re, z.im])
}

fn fmt_c64(z: C64) -> String {
    format!("{:.6}{:+.6}i", z.re, z.im)
}

fn charvar_cmd(cmd: &CharvarCommand, seed: u64, tol: Tolerance) -> Result<Doc> {
    match cmd {
        CharvarCommand::Counts { p, q } => {
            if *p < 2 || *q < 2 {
                return Err(Error::InvalidComponent(format!("orders ({p}, {q}) must be >= 2")));
            }
            let (total, curves) = charvar::component_counts(*p, *q);
            Ok(Doc::new(
                format!("Z/{p} * Z/{q}: {total} components, {curves} curves"),
                json!({ "p": p, "q": q, "components": total, "curves": curves }),
            )
            .with_csv(format!("p,q,components,curves\n{p},{q},{total},{curves}\n")))
        }
        CharvarCommand::Sample { p, q, j, k, points, radius } => {
            let ci = ComponentIndex::new(*p, *q, *j, *k)?;
            let reducible = charvar::reducible_parameters(&ci)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut params: Vec<C64> =
                (0..*points).map(|_| C64::new(rng.gen_range(-radius..=*radius), rng.gen_range(-radius..=*radius))).collect();
            params.extend(reducible.values);
            params.push(charvar::g1_critical_point(&ci)?);
            let xy = Word::from_syllables([(0, 1), (1, 1)]);
            let mut rows = Vec::new();
            let mut csv = String::from("a_re,a_im,tr_x_re,tr_x_im,tr_y_re,tr_y_im,tr_xy_re,tr_xy_im,f_xy_re,f_xy_im,reducible,dihedral\n");
            let mut text = format!(
                "C({j},{k}) of Z/{p} * Z/{q}: lambda = {}, mu = {}, tau = {}\n",
                fmt_c64(ci.lambda()),
                fmt_c64(ci.mu()),
                fmt_c64(ci.tau())
            );
            for a in params {
                let rep = charvar::rho_a(&ci, a)?;
                let traces = charvar::trace_tuple(&rep);
                let f = charvar::f_gamma(&rep, &xy)?;
                let red = charvar::is_reducible(&rep, tol.locus);
                let dih = charvar::is_dihedral(&rep, tol.locus)?;
                text.push_str(&format!(
                    "a = {:>22}  tr(xy) = {:>22}  f_xy = {:>22}  reducible={red} dihedral={dih}\n",
                    fmt_c64(a),
                    fmt_c64(traces[2]),
                    fmt_c64(f)
                ));
                csv.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{red},{dih}\n",
                    a.re, a.im, traces[0].re, traces[0].im, traces[1].re, traces[1].im, traces[2].re, traces[2].im, f.re, f.im
                ));
                rows.push(json!({
                    "a": c64_json(a),
                    "traces": traces.iter().map(|&t| c64_json(t)).collect::<Vec<_>>(),
                    "f_xy": c64_json(f),
                    "reducible": red,
                    "dihedral": dih,
                }));
            }
            Ok(Doc::new(text, json!({ "component": ci, "rows": rows })).with_csv(csv))
        }
    }
}

fn seifert_cmd(input: &InputArgs) -> Result<Doc> {
    let text = read_input(input.json.as_deref(), input.input.as_ref())?;
    let sd: SeifertData = parse_json(&text)?;
    let orb = sd.orbifold();
    let geometry = orb.classify();
    let teich = orb.teichmuller_dim().ok();
    let presentation = sd.presentation();
    let h1 = sd.h1();
    let irr = sd.irreducible_curve_exists();
    let virt = sd.virtually_irreducible_curve_exists();
    let haken = sd.is_haken();
    let mut lines = vec![
        format!("{sd}"),
        format!("base orbifold {orb}: chi_orb = {}, {geometry:?}", orb.chi_orb()),
        format!("listed parabolic: {}", orb.is_listed_parabolic()),
    ];
    if let Some(t) = teich {
        lines.push(format!("Teichmuller dimension: {t}"));
    }
    lines.push(format!("pi1 = {presentation}"));
    lines.push(format!("H1 = {h1}"));
    lines.push(format!("Haken: {haken}"));
    lines.push(format!("curve through an irreducible character: {irr}"));
    lines.push(format!("virtually irreducible curve: {virt}"));
    let json = json!({
        "data": sd,
        "orbifold": orb.to_string(),
        "chi_orb": orb.chi_orb().to_string(),
        "geometry": geometry,
        "listed_parabolic": orb.is_listed_parabolic(),
        "teichmuller_dim": teich,
        "presentation": presentation,
        "presentation_text": presentation.to_string(),
        "h1": h1,
        "h1_text": h1.to_string(),
        "haken": haken,
        "irreducible_curve": irr,
        "virtually_irreducible_curve": virt,
    });
    Ok(Doc::new(lines.join("\n"), json))
}

fn cable_cmd(cmd: &CableCommand) -> Result<Doc> {
    match cmd {
        CableCommand::Fill { m, n, k } => {
            let cs = CableSpace::new(*m, *n)?;
            let (input, output) = cs.fill_plus(&BigInt::from(*k));
            let text = format!(
                "({m},{n}) cable, k = {k}: filling T+ along {input} gives a solid torus with meridian {output} on T-\n\
                 distance to phi+ = {}, distance of meridian to phi- = {}",
                input.distance(&cs.phi_plus()),
                output.distance(&cs.phi_minus())
            );
            Ok(Doc::new(text, json!({ "m": m, "n": n, "k": k, "input": input, "meridian": output })))
        }
        CableCommand::Toroidal { m, n, k_min, k_max } => {
            let mut rows = Vec::new();
            let mut text = String::from("    k  Δ(r1,r2)  Δ(r1',φ1)  vertical torus  r2 finite\n");
            let mut csv = String::from("k,distance,r1_fiber_distance,r1_vertical_torus,r2_finite\n");
            for k in *k_min..=*k_max {
                let r = cable::cable_toroidal(k, *m, *n)?;
                text.push_str(&format!(
                    "{k:>5}  {:>8}  {:>9}  {:>14}  {:>9}\n",
                    r.distance, r.r1_fiber_distance, r.r1_vertical_torus, r.r2_finite
                ));
                csv.push_str(&format!("{k},{},{},{},{}\n", r.distance, r.r1_fiber_distance, r.r1_vertical_torus, r.r2_finite));
                rows.push(json!(r));
            }
            Ok(Doc::new(text, Value::Array(rows)).with_csv(csv))
        }
        CableCommand::Klein { k_min, k_max } => {
            let mut rows = Vec::new();
            let mut text = String::from("    k  α(r1)        Δ(r1,r2)  Δ(r1,φ+)  r2 finite\n");
            let mut csv = String::from("k,r1_p,r1_q,distance,r1_fiber_distance,r2_finite\n");
            for k in *k_min..=*k_max {
                let r = cable::cable_klein(k);
                text.push_str(&format!(
                    "{k:>5}  {:<12} {:>8}  {:>8}  {:>9}\n",
                    r.r1.to_string(),
                    r.distance,
                    r.r1_fiber_distance,
                    r.r2_finite
                ));
                csv.push_str(&format!("{k},{},{},{},{},{}\n", r.r1.p, r.r1.q, r.distance, r.r1_fiber_distance, r.r2_finite));
                rows.push(json!(r));
            }
            Ok(Doc::new(text, Value::Array(rows)).with_csv(csv))
        }
        CableCommand::Triples => {
            let set = cable::unit_triples();
            let items: Vec<String> = set.iter().map(|(n, d, f)| format!("(n={n}, Δ={d}, Δφ={f})")).collect();
            Ok(Doc::new(format!("feasible: {}", items.join(", ")), json!(set)))
        }
    }
}

#[derive(Serialize)]
struct FamilyRow {
    n: i64,
    m: i64,
    slope: String,
    h1_order: String,
    edge_path_slope: Option<String>,
}

fn pretzel_cmd(cmd: &PretzelCommand) -> Result<Doc> {
    match cmd {
        PretzelCommand::Family { n, to } => {
            let hi = to.unwrap_or(*n);
            let mut rows = Vec::new();
            let mut text = String::from("    n      m  slope               |H1|\n");
            let mut csv = String::from("n,m,slope,h1_order,edge_path_slope\n");
            for k in *n..=hi {
                let f = pretzel::pretzel_family(k)?;
                let ep = f.edge_path_slope.as_ref().map(ToString::to_string);
                text.push_str(&format!("{:>5}  {:>5}  {:<18}  {}\n", f.n, f.m, f.slope.to_string(), f.h1_order));
                csv.push_str(&format!("{},{},{},{},{}\n", f.n, f.m, f.slope, f.h1_order, ep.clone().unwrap_or_default()));
                rows.push(FamilyRow { n: f.n, m: f.m, slope: f.slope.to_string(), h1_order: f.h1_order.to_string(), edge_path_slope: ep });
            }
            Ok(Doc::new(text, json!(rows)).with_csv(csv))
        }
        PretzelCommand::Tau(input) => {
            let sys: EdgePathSystem = parse_json(&read_input(input.json.as_deref(), input.input.as_ref())?)?;
            let t = pretzel::tau(&sys)?;
            let totals: Vec<String> = sys.path_totals().iter().map(ToString::to_string).collect();
            Ok(Doc::new(
                format!("tau = {t} (path totals {})", totals.join(", ")),
                json!({ "tau": t.to_string(), "path_totals": totals }),
            ))
        }
        PretzelCommand::Boundary { m } => {
            let cand = pretzel::km_candidate(*m)?;
            let seif = pretzel::km_seifert(*m)?;
            let (ts, t0) = (pretzel::tau(&cand)?, pretzel::tau(&seif)?);
            let r = &ts - &t0;
            Ok(Doc::new(
                format!("K_{m}: tau(S) = {ts}, tau(S0) = {t0}, boundary slope {r}"),
                json!({ "m": m, "tau_s": ts.to_string(), "tau_s0": t0.to_string(), "slope": r.to_string() }),
            ))
        }
        PretzelCommand::Template { m, kind } => {
            let sys = match kind {
                TemplateKind::Candidate => pretzel::km_candidate(*m)?,
                TemplateKind::Seifert => pretzel::km_seifert(*m)?,
            };
            let text = serde_json::to_string_pretty(&sys).expect("serializable");
            Ok(Doc::new(text, json!(sys)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("dehn").chain(args.iter().copied()))
    }

    #[test]
    fn trefoil_band_classification() {
        let out = run_args(&["seminorm", "--functionals", r#"[{"c1":1,"c2":-6}]"#, "--classify"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout.trim(), "Indefinite kernel 6/1, s=1");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["seminorm", "--functionals", "not json"]).code, EXIT_SCHEMA);
        assert_eq!(run_args(&["nonsense"]).code, EXIT_SCHEMA);
        let out = run_args(&["seminorm", "--functionals", r#"[{"c1":1,"c2":0}]"#, "--vertex-slopes"]);
        assert_eq!(out.code, EXIT_PRECONDITION);
        assert!(out.stderr.contains("precondition violated"));
        assert_eq!(run_args(&["pretzel", "family", "2"]).code, EXIT_PRECONDITION);
        assert_eq!(run_args(&["slope", "0/0"]).code, EXIT_PRECONDITION);
        assert_eq!(run_args(&["slope", "x/2"]).code, EXIT_SCHEMA);
        assert_eq!(run_args(&["--format", "svg", "slope", "1/2"]).code, EXIT_SCHEMA);
        assert_eq!(run_args(&["--help"]).code, EXIT_OK);
    }

    #[test]
    fn json_output_reparses() {
        let out = run_args(&["--format", "json", "seminorm", "--functionals", r#"[{"c1":1,"c2":0},{"c1":0,"c2":1}]"#]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        let ball: BallGeometry = serde_json::from_value(v["ball"].clone()).unwrap();
        assert!(matches!(ball, BallGeometry::Polygon { ref vertices } if vertices.len() == 4));
        let c: Classification = serde_json::from_value(v["classification"].clone()).unwrap();
        assert_eq!(c, Classification::Norm);
    }

    #[test]
    fn svg_ball() {
        let out = run_args(&["--format", "svg", "--viewport", "5", "seminorm", "--functionals", r#"[{"c1":1,"c2":-6}]"#, "--ball"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.starts_with("<svg"));
    }

    #[test]
    fn negative_arguments() {
        let out = run_args(&["cable", "fill", "-3", "2", "-1"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("(7, -1)"));
        let out = run_args(&["seminorm", "--functionals", r#"[{"c1":1,"c2":-6}]"#, "--eval", "-1,3"]);
        assert!(out.stdout.contains("||(-1, 3)|| = 19"));
    }
}
