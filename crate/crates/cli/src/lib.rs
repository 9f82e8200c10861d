//! The `foldsig` command-line tool.

pub mod render;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use foldsig_core::wronski::{TriangulationSource, WronskiInput};
use foldsig_core::{
    build_wronski, for_each_dense_triangulation, hexagon_fig1, rectangle_grid, staircase, DiagonalPattern, EnumerationOptions,
    Error, Foldability, OrientationPolicy, PolygonFile, SegmentType, Triangulation, TriangulationFile, WronskiCoefficients,
    WronskiSystem, DEFAULT_ENUMERATION_LIMIT,
};
use serde::Serialize;
use serde_json::json;

use render::{render_svg, RenderOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NON_GENERIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "foldsig", version, about = "Signatures of foldable lattice triangulations and Wronski systems")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a triangulation and test foldability.
    Check { file: PathBuf },
    /// Signature by triangle coloring and by each boundary edge type.
    Signature { file: PathBuf },
    /// Pick data and the signature upper bound of a polygon.
    Bound { file: PathBuf },
    /// Write a generated triangulation as JSON.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output file (standard output if absent).
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Enumerate every dense triangulation of a polygon.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        foldable_only: bool,
        /// Maximum number of lattice points in the polygon.
        #[arg(long, env = "FOLDSIG_LIMIT", default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: usize,
    },
    /// Build or solve Wronski polynomial systems.
    Wronski {
        #[command(subcommand)]
        action: WronskiAction,
    },
    /// Draw a triangulation as SVG.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Label boundary edges with their type.
        #[arg(long)]
        labels: bool,
    },
}

#[derive(Debug, Subcommand)]
enum GenKind {
    /// The n-th dilate of the unit triangle, cut by the lines x = k, y = k, x + y = k.
    Staircase { n: usize },
    /// An m by n grid of unit squares, each cut by a diagonal.
    Rectangle {
        m: usize,
        n: usize,
        #[arg(long)]
        alternating: bool,
    },
    /// The hexagon triangulation of the first figure.
    #[command(name = "hexagon-fig1")]
    HexagonFig1,
}

#[derive(Debug, Subcommand)]
enum WronskiAction {
    /// Print the Wronski polynomial of a triangulation.
    Build {
        file: PathBuf,
        /// Coefficients of the three color classes, as `a,b,c`.
        #[arg(long, allow_hyphen_values = true)]
        gamma: WronskiCoefficients,
    },
    /// Count and isolate the common roots of a Wronski system.
    Solve { file: PathBuf },
}

/// A failed command: its exit code and a message for standard error.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn io(path: &Path, e: impl std::fmt::Display) -> Self {
        Self { code: EXIT_USAGE, message: format!("{}: {e}", path.display()) }
    }

    fn math(e: impl std::fmt::Display) -> Self {
        Self { code: EXIT_FAILURE, message: e.to_string() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonGeneric(_) => EXIT_NON_GENERIC,
            _ => EXIT_FAILURE,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self { code: EXIT_USAGE, message: e.to_string() }
    }
}

type CmdResult = Result<i32, Failure>;

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let mut out = io::stdout().lock();
    match dispatch(cli, &mut out) {
        Ok(code) => code,
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: Cli, out: &mut impl Write) -> CmdResult {
    let json = cli.json;
    match cli.command {
        Command::Check { file } => check(&file, json, out),
        Command::Signature { file } => signature(&file, json, out),
        Command::Bound { file } => bound(&file, json, out),
        Command::Gen { kind, output } => generate(kind, output.as_deref(), out),
        Command::Enumerate { file, foldable_only, limit } => enumerate(&file, foldable_only, limit, json, out),
        Command::Wronski { action: WronskiAction::Build { file, gamma } } => wronski_build(&file, &gamma, json, out),
        Command::Wronski { action: WronskiAction::Solve { file } } => wronski_solve(&file, json, out),
        Command::Render { file, output, labels } => {
            let t = load_triangulation(&file)?;
            let svg = render_svg(&t, RenderOptions { labels }).map_err(Failure::math)?;
            fs::write(&output, svg).map_err(|e| Failure::io(&output, e))?;
            Ok(EXIT_OK)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::io(path, e))
}

fn parse_triangulation(file: TriangulationFile, origin: &Path) -> Result<Triangulation, Failure> {
    let (t, warnings) = file.into_triangulation(OrientationPolicy::Reorient).map_err(|e| Failure::io(origin, e))?;
    for w in warnings {
        eprintln!("warning: {}: {w}", origin.display());
    }
    Ok(t)
}

fn load_triangulation(path: &Path) -> Result<Triangulation, Failure> {
    let file = TriangulationFile::from_json(&read(path)?).map_err(|e| Failure::io(path, e))?;
    parse_triangulation(file, path)
}

fn print_json(out: &mut impl Write, value: &impl Serialize) -> io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value).expect("reports serialize"))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn check(path: &Path, json: bool, out: &mut impl Write) -> CmdResult {
    let t = load_triangulation(path)?;
    let diag = t.validate();
    let fold = diag.is_valid.then(|| t.is_foldable()).transpose()?;
    let foldable = fold.as_ref().is_some_and(Foldability::is_foldable);
    let odd_cycle = match &fold {
        Some(Foldability::OddCycle(w)) => Some(w.clone()),
        _ => None,
    };
    if json {
        print_json(
            out,
            &json!({
                "diagnostics": diag,
                "foldable": foldable,
                "interior_degrees_even": diag.is_valid.then(|| t.interior_degrees_even()),
                "odd_cycle": odd_cycle,
            }),
        )?;
    } else {
        writeln!(out, "points: {}, triangles: {}", t.points().len(), t.triangles().len())?;
        writeln!(out, "valid: {}", yes_no(diag.is_valid))?;
        for m in diag.messages() {
            writeln!(out, "  {m}")?;
        }
        if diag.is_valid {
            writeln!(out, "dense: {}", yes_no(diag.is_dense))?;
            writeln!(out, "unimodular: {}", yes_no(diag.is_unimodular))?;
            writeln!(out, "foldable: {}", yes_no(foldable))?;
            if let Some(w) = &odd_cycle {
                writeln!(out, "  odd dual cycle through triangles {w:?}")?;
            }
        }
    }
    Ok(if diag.is_valid && foldable { EXIT_OK } else { EXIT_FAILURE })
}

#[derive(Serialize)]
struct SignatureReport {
    signature_via_triangles: usize,
    signature_via_boundary: [(SegmentType, usize); 3],
    agree: bool,
    black_triangles: usize,
    white_triangles: usize,
    boundary_profile: foldsig_core::BoundaryProfile,
}

fn signature(path: &Path, json: bool, out: &mut impl Write) -> CmdResult {
    let t = load_triangulation(path)?;
    let coloring = t.two_coloring()?;
    let by_triangles = t.signature_via_triangles()?;
    let profile = t.boundary_profile()?;
    let by_boundary = SegmentType::PRIMITIVE.map(|ty| (ty, profile.get(ty).expect("primitive type").difference()));
    let agree = by_boundary.iter().all(|&(_, s)| s == by_triangles);
    let report = SignatureReport {
        signature_via_triangles: by_triangles,
        signature_via_boundary: by_boundary,
        agree,
        black_triangles: coloring.black_count(),
        white_triangles: coloring.white_count(),
        boundary_profile: profile,
    };
    if json {
        print_json(out, &report)?;
    } else {
        writeln!(out, "signature (triangles): {by_triangles}")?;
        writeln!(out, "triangles: {} black, {} white", report.black_triangles, report.white_triangles)?;
        for (ty, s) in by_boundary {
            let c = profile.get(ty).expect("primitive type");
            writeln!(out, "boundary {:<2}: {}/{} (black/white), signature {s}", ty.label(), c.black, c.white)?;
        }
        writeln!(out, "methods agree: {}", yes_no(agree))?;
    }
    if !agree {
        return Err(Failure::math("signature computations disagree"));
    }
    Ok(EXIT_OK)
}

fn bound(path: &Path, json: bool, out: &mut impl Write) -> CmdResult {
    let file: PolygonFile = serde_json::from_str(&read(path)?).map_err(|e| Failure::io(path, e))?;
    let poly = file.to_polygon()?;
    let pick = poly.lattice_census().pick;
    let bound = poly.signature_upper_bound();
    if json {
        print_json(out, &json!({ "vertices": poly.vertices(), "pick": pick, "signature_upper_bound": bound }))?;
    } else {
        let vs: Vec<String> = poly.vertices().iter().map(ToString::to_string).collect();
        writeln!(out, "vertices: {}", vs.join(" "))?;
        writeln!(out, "normalized area: {}", pick.twice_area)?;
        writeln!(out, "interior points: {}", pick.interior_count)?;
        writeln!(out, "boundary points: {}", pick.boundary_count)?;
        writeln!(out, "signature bound: {bound}")?;
    }
    Ok(EXIT_OK)
}

fn generate(kind: GenKind, output: Option<&Path>, out: &mut impl Write) -> CmdResult {
    let t = match kind {
        GenKind::Staircase { n } => staircase(n)?,
        GenKind::Rectangle { m, n, alternating } => {
            rectangle_grid(m, n, if alternating { DiagonalPattern::Alternating } else { DiagonalPattern::Uniform })?
        }
        GenKind::HexagonFig1 => hexagon_fig1(),
    };
    let text = t.to_file().to_json() + "\n";
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::io(p, e))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn enumerate(path: &Path, foldable_only: bool, limit: usize, json: bool, out: &mut impl Write) -> CmdResult {
    let file: PolygonFile = serde_json::from_str(&read(path)?).map_err(|e| Failure::io(path, e))?;
    let poly = file.to_polygon()?;
    let mut index = 0usize;
    let mut write_err = None;
    let report = for_each_dense_triangulation(&poly, EnumerationOptions { foldable_only, limit }, |t, fold| {
        index += 1;
        let sig = fold.is_foldable().then(|| t.signature_via_triangles().expect("foldable"));
        let line = if json {
            serde_json::to_string(&json!({
                "index": index,
                "foldable": fold.is_foldable(),
                "signature": sig,
                "triangulation": t.to_file(),
            }))
            .expect("serializes")
        } else {
            let mut s = format!("#{index} ");
            match sig {
                Some(v) => write!(s, "foldable signature={v}:").unwrap(),
                None => s.push_str("not foldable:"),
            }
            for tri in t.canonical_form() {
                write!(s, " [{} {} {}]", tri[0], tri[1], tri[2]).unwrap();
            }
            s
        };
        if write_err.is_none() {
            write_err = writeln!(out, "{line}").err();
        }
    })?;
    if let Some(e) = write_err {
        return Err(e.into());
    }
    if json {
        writeln!(out, "{}", serde_json::to_string(&json!({ "report": report })).expect("serializes"))?;
    } else {
        writeln!(out, "dense triangulations: {}", report.total_dense_count)?;
        writeln!(out, "foldable: {}", report.foldable_count)?;
        for (sig, count) in &report.signature_histogram {
            writeln!(out, "  signature {sig}: {count}")?;
        }
    }
    Ok(EXIT_OK)
}

fn wronski_build(path: &Path, gamma: &WronskiCoefficients, json: bool, out: &mut impl Write) -> CmdResult {
    let t = load_triangulation(path)?;
    let p = build_wronski(&t, gamma)?;
    if json {
        let terms: Vec<_> = p.terms().iter().map(|(&(i, j), c)| json!([i, j, c.to_string()])).collect();
        print_json(out, &json!({ "gamma": gamma, "polynomial": p.to_string(), "terms": terms }))?;
    } else {
        writeln!(out, "{p}")?;
    }
    Ok(EXIT_OK)
}

fn wronski_solve(path: &Path, json: bool, out: &mut impl Write) -> CmdResult {
    let input = WronskiInput::from_json(&read(path)?).map_err(|e| Failure::io(path, e))?;
    let t = match input.triangulation {
        TriangulationSource::Inline(file) => parse_triangulation(file, path)?,
        TriangulationSource::Path(rel) => {
            let base = path.parent().unwrap_or(Path::new("."));
            load_triangulation(&base.join(rel))?
        }
    };
    let system = WronskiSystem::new(&t, input.gamma_a, input.gamma_b)?;
    let report = system.solve();
    if json {
        print_json(out, &json!({ "f": system.f.to_string(), "g": system.g.to_string(), "report": report }))?;
    } else {
        writeln!(out, "f = {}", system.f)?;
        writeln!(out, "g = {}", system.g)?;
        writeln!(out, "Kushnirenko number: {}", report.kushnirenko_number)?;
        writeln!(out, "torus solutions (with multiplicity): {}", report.torus_solution_count)?;
        writeln!(out, "distinct torus solutions: {}", report.distinct_torus_solution_count)?;
        writeln!(out, "solutions off the torus: {}", report.affine_non_torus_count)?;
        writeln!(out, "real solutions: {}", report.real_count)?;
        for b in &report.distinct_real_solutions {
            let (x, y) = b.center();
            writeln!(out, "  ({x:.12}, {y:.12})  x in {}  y in {}", b.x, b.y)?;
        }
        writeln!(out, "generic: {}", yes_no(report.generic))?;
        for n in &report.notes {
            writeln!(out, "note: {n}")?;
        }
    }
    if !report.generic {
        eprintln!("error: system is not generic; counts are not reliable");
        return Ok(EXIT_NON_GENERIC);
    }
    Ok(EXIT_OK)
}
