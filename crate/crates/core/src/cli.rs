//! The `penta` command line.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails,
//! 2 on usage or input errors.

use std::f64::consts::PI;
use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::aad::{canonical_set, deduce_adjacent_layer, parse_word};
use crate::avc::{
    alpha4_case_assignment, alpha4_case_lower_bounds, enumerate_avc, SearchOptions, ALPHA4_CASE_BOUNDS,
};
use crate::counting::{audit_counting_lemmas, check_euler_identities};
use crate::error::{Error, Result};
use crate::geom::export::{coords_json, to_obj, DEFAULT_ARC_SEGMENTS};
use crate::geom::{
    realize_double_subdivision, realize_pentagonal_subdivision, solve_double_pentagon, verify_geometry,
    DoublePentagonSolution, SphTiling,
};
use crate::map::{degree_census, CombMap, Platonic};
use crate::pentagon::{
    verify_labeled_tiling, AngleAssignment, Check, LabeledTiling, LabeledTilingJson, PentagonProto, Placement,
    ProtoKind, VerifyReport,
};
use crate::subdivision::{
    double_pentagonal_subdivision, label_subdivision, pentagonal_subdivision, Chirality, Construction, Provenance,
};

/// Default position of the free edge vertex in the pentagonal family.
pub const DEFAULT_PARAM: [f64; 2] = [0.3, 0.4];

#[derive(Parser, Debug)]
#[command(name = "penta", version, about = "Pentagonal subdivision tilings of the sphere")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build, label and (for triangular sources) place a subdivision tiling.
    Generate(GenerateArgs),
    /// Check a generated tiling, optionally with coordinates.
    Verify(VerifyArgs),
    /// Enumerate vertex combinations for an angle assignment.
    Avc(AvcArgs),
    /// Adjacent angle deduction for one vertex word.
    Aad(AadArgs),
    /// Arc lengths of the double pentagon.
    Solve(SolveArgs),
    /// Write a tiling as OBJ polylines and/or a coordinate file.
    Export(ExportArgs),
    /// Run every construction and print a summary.
    Report(ReportArgs),
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(long)]
    construction: Construction,
    #[arg(long)]
    solid: Platonic,
    /// Edge vertex position `u,v` (pentagonal construction only).
    #[arg(long, value_delimiter = ',')]
    param: Option<Vec<f64>>,
    #[arg(long, default_value = "ccw")]
    chirality: Chirality,
    /// Output file; standard output when absent or `-`.
    #[arg(short, long)]
    output: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Generated tiling; `-` for standard input.
    #[arg(default_value = "-")]
    input: String,
    /// Coordinates file (`{"coords": ...}` or a generated bundle); `-` for
    /// standard input.
    #[arg(long)]
    geom: Option<String>,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Print the full report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct AvcArgs {
    /// Angle assignment; `1.3-a4` (alias `alpha4`) is the a³bc case whose
    /// special vertex is α⁴.
    #[arg(long = "case")]
    case: String,
    /// Show the combinations available at one tile count.
    #[arg(long)]
    f: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    bounds: Option<Vec<u32>>,
    #[arg(long, default_value_t = 16)]
    f_min: u64,
    #[arg(long, default_value_t = 1000)]
    f_max: u64,
    /// Only list tile counts above this value (plus the rows for every f).
    #[arg(long)]
    above: Option<u64>,
    /// Also require β > π/3 and ε > π/3.
    #[arg(long)]
    lower_bounds: bool,
}

#[derive(Args, Debug)]
struct AadArgs {
    #[arg(long)]
    proto: ProtoKind,
    #[arg(long, allow_hyphen_values = true)]
    word: String,
    /// Print results up to rotation and reflection.
    #[arg(long)]
    canonical: bool,
    /// Print ASCII instead of Greek.
    #[arg(long)]
    ascii: bool,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long, required = true)]
    double_pentagon: bool,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ExportArgs {
    /// OBJ output path.
    #[arg(long)]
    obj: Option<String>,
    /// Coordinate JSON output path.
    #[arg(long = "coords-out")]
    coords_out: Option<String>,
    #[arg(long, default_value_t = DEFAULT_ARC_SEGMENTS)]
    segments: usize,
    /// Generated tiling.
    input: String,
    /// Coordinates; taken from the tiling file when absent.
    coords: Option<String>,
}

#[derive(Args, Debug)]
struct ReportArgs {
    #[arg(long)]
    json: bool,
}

/// Everything `generate` writes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Bundle {
    pub map: CombMap,
    pub proto: ProtoKind,
    pub placement: Vec<Placement>,
    pub f: u64,
    pub construction: Construction,
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chirality: Option<Chirality>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub param: Option<[f64; 2]>,
    pub assignment: AngleAssignment,
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solution: Option<DoublePentagonSolution>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_equals_c: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<[f64; 3]>>,
}

impl Bundle {
    fn new(tiling: LabeledTiling, construction: Construction, source: Platonic) -> Self {
        let j = LabeledTilingJson::from(tiling);
        Bundle {
            map: j.map,
            proto: j.proto,
            placement: j.placement,
            f: j.f,
            construction,
            source: source.name().into(),
            chirality: None,
            param: None,
            assignment: AngleAssignment::partial([None; 5], Vec::new()),
            provenance: Provenance::default(),
            solution: None,
            b_equals_c: None,
            coords: None,
        }
    }

    pub fn labeled(&self) -> Result<LabeledTiling> {
        LabeledTiling::new(self.map.clone(), PentagonProto::new(self.proto), self.placement.clone(), self.f)
    }

    pub fn sph_tiling(&self) -> Option<SphTiling> {
        self.coords.as_ref().map(|c| SphTiling { coords: c.iter().map(|p| Vector3::from(*p)).collect() })
    }
}

fn coords_of(st: &SphTiling) -> Vec<[f64; 3]> {
    st.coords.iter().map(|p| [p.x, p.y, p.z]).collect()
}

/// Builds the bundle for `generate`.
pub fn generate(
    construction: Construction,
    solid: Platonic,
    param: Option<[f64; 2]>,
    chirality: Chirality,
) -> Result<Bundle> {
    let triangular = solid.face_size() == 3;
    if param.is_some() && !(construction == Construction::Pentagonal && triangular) {
        return Err(Error::Syntax {
            input: "--param".into(),
            reason: "only the pentagonal construction on a triangular solid takes a parameter".into(),
        });
    }
    let (realization, output) = match (construction, triangular) {
        (Construction::Pentagonal, true) => {
            (Some(realize_pentagonal_subdivision(solid, param.unwrap_or(DEFAULT_PARAM))?), None)
        }
        (Construction::Double, true) => (Some(realize_double_subdivision(solid, chirality)?), None),
        (Construction::Pentagonal, false) => (None, Some(pentagonal_subdivision(&solid.map())?)),
        (Construction::Double, false) => (None, Some(double_pentagonal_subdivision(&solid.map(), chirality)?)),
    };
    let mut bundle = match (realization, output) {
        (Some(r), _) => {
            let mut b = Bundle::new(r.labeled, construction, solid);
            b.assignment = r.assignment;
            b.provenance = r.output.provenance;
            b.coords = Some(coords_of(&r.tiling));
            if construction == Construction::Double {
                b.solution = r.solution;
                b.b_equals_c = Some(r.b_equals_c);
            }
            b
        }
        (None, Some(out)) => {
            let (lt, asg) = label_subdivision(&out, construction, solid.vertex_degree())?;
            let mut b = Bundle::new(lt, construction, solid);
            b.assignment = asg;
            b.provenance = out.provenance;
            b
        }
        (None, None) => unreachable!(),
    };
    match construction {
        Construction::Pentagonal if triangular => bundle.param = Some(param.unwrap_or(DEFAULT_PARAM)),
        Construction::Double => bundle.chirality = Some(chirality),
        _ => {}
    }
    Ok(bundle)
}

/// Combinatorial checks plus, when coordinates are given, geometric ones.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BundleReport {
    pub pass: bool,
    pub labels: VerifyReport,
    pub identities: Vec<Check>,
    pub lemmas: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub geometry: Option<crate::geom::GeomReport>,
}

pub fn verify_bundle(bundle: &Bundle, geom: Option<&SphTiling>, tol: f64) -> Result<BundleReport> {
    let lt = &bundle.labeled()?;
    let labels = verify_labeled_tiling(lt, Some(&bundle.assignment));
    let identities: Vec<Check> = check_euler_identities(&degree_census(lt.map()), lt.f())?
        .entries
        .into_iter()
        .map(|e| Check { name: e.lemma, pass: e.pass, detail: e.detail })
        .collect();
    let lemmas: Vec<Check> = audit_counting_lemmas(lt, Some(&bundle.assignment))
        .entries
        .into_iter()
        .map(|e| Check { name: e.lemma, pass: e.pass, detail: e.detail })
        .collect();
    let geometry = geom.map(|st| verify_geometry(st, lt, tol));
    let pass = labels.pass
        && identities.iter().all(|c| c.pass)
        && lemmas.iter().all(|c| c.pass)
        && geometry.as_ref().is_none_or(|g| g.pass);
    Ok(BundleReport { pass, labels, identities, lemmas, geometry })
}

fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Input sources, reading standard input at most once.
struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    cached: Option<String>,
}

impl Inputs<'_> {
    fn read(&mut self, path: &str) -> Result<String> {
        if path == "-" {
            if self.cached.is_none() {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s)?;
                self.cached = Some(s);
            }
            Ok(self.cached.clone().unwrap_or_default())
        } else {
            Ok(std::fs::read_to_string(path)?)
        }
    }
}

fn write_output(path: Option<&str>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match path {
        None | Some("-") => stdout.write_all(text.as_bytes())?,
        Some(p) => std::fs::write(p, text)?,
    }
    Ok(())
}

/// Runs the command line with the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the command line with explicit streams.
pub fn run_with<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut inputs = Inputs { stdin, cached: None };
    match dispatch(cli.command, &mut inputs, stdout) {
        Ok(pass) => {
            if pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::Syntax { .. } | Error::UnknownSolid(_) | Error::Json(_) | Error::Io(_) | Error::MismatchedKind(_) => 2,
                _ => 1,
            }
        }
    }
}

fn dispatch(command: Command, inputs: &mut Inputs, out: &mut dyn Write) -> Result<bool> {
    match command {
        Command::Generate(a) => {
            let param = match a.param.as_deref() {
                None => None,
                Some(&[u, v]) => Some([u, v]),
                Some(_) => return Err(Error::Syntax { input: "--param".into(), reason: "expected u,v".into() }),
            };
            let bundle = generate(a.construction, a.solid, param, a.chirality)?;
            let mut text = serde_json::to_string(&bundle)?;
            text.push('\n');
            write_output(a.output.as_deref(), &text, out)?;
            Ok(true)
        }
        Command::Verify(a) => {
            let bundle: Bundle = serde_json::from_str(&inputs.read(&a.input)?)?;
            let geom = match a.geom.as_deref() {
                None => None,
                Some(path) => {
                    let st: SphTiling = serde_json::from_str(&inputs.read(path)?)?;
                    Some(st)
                }
            };
            let report = verify_bundle(&bundle, geom.as_ref(), a.tol)?;
            if a.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                let mut all: Vec<&Check> = report.labels.checks.iter().collect();
                all.extend(&report.identities);
                all.extend(&report.lemmas);
                if let Some(g) = &report.geometry {
                    all.extend(&g.checks);
                }
                for c in all {
                    writeln!(out, "{} {}: {}", status(c.pass), c.name, c.detail)?;
                }
                if let Some(v) = report.geometry.as_ref().and_then(|g| g.worst_vertex) {
                    writeln!(out, "worst vertex: {v}")?;
                }
                writeln!(out, "verify: {}", status(report.pass))?;
            }
            Ok(report.pass)
        }
        Command::Avc(a) => {
            let (asg, proto, default_bounds) = match a.case.as_str() {
                "1.3-a4" | "alpha4" => (alpha4_case_assignment(), PentagonProto::new(ProtoKind::A3BC), ALPHA4_CASE_BOUNDS),
                other => {
                    return Err(Error::Syntax { input: other.into(), reason: "known cases: 1.3-a4".into() });
                }
            };
            let bounds = match a.bounds.as_deref() {
                None => default_bounds,
                Some(&[b0, b1, b2, b3, b4]) => [b0, b1, b2, b3, b4],
                Some(_) => {
                    return Err(Error::Syntax { input: "--bounds".into(), reason: "expected five exponents".into() });
                }
            };
            let mut opts = SearchOptions::with_range(a.f_min, a.f_max);
            if a.lower_bounds {
                opts.lower = alpha4_case_lower_bounds();
            }
            let mut table = enumerate_avc(&asg, &proto, bounds, &opts)?;
            if let Some(min) = a.above {
                table = table.above(min);
            }
            let text = match a.f {
                Some(f) => {
                    #[derive(Serialize)]
                    struct AtF {
                        f: u64,
                        #[serde(flatten)]
                        row: crate::avc::AvcRow,
                    }
                    serde_json::to_string_pretty(&AtF { f, row: table.at(f) })?
                }
                None => serde_json::to_string_pretty(&table)?,
            };
            writeln!(out, "{text}")?;
            Ok(true)
        }
        Command::Aad(a) => {
            let proto = PentagonProto::new(a.proto);
            let word = parse_word(&a.word)?;
            let mut layers = deduce_adjacent_layer(&word, &proto)?;
            if a.canonical {
                layers = canonical_set(&layers);
            }
            for l in layers {
                if a.ascii {
                    writeln!(out, "{}", l.ascii())?;
                } else {
                    writeln!(out, "{l}")?;
                }
            }
            Ok(true)
        }
        Command::Solve(a) => {
            let s = solve_double_pentagon(a.n)?;
            if a.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&s)?)?;
            } else {
                writeln!(out, "n = {}, f = {}", s.n, s.f)?;
                for (name, v) in [("a", s.a), ("b", s.b), ("c", s.c)] {
                    writeln!(out, "{name} ≈ {:.6}π ({v:.12} rad)", v / PI)?;
                }
                writeln!(out, "cos a = {:.15} (bisection)", s.cos_a_bisection)?;
                if let Some(c) = s.cos_a_closed_form {
                    writeln!(out, "cos a = {c:.15} (radicals)")?;
                }
            }
            Ok(true)
        }
        Command::Export(a) => {
            let bundle: Bundle = serde_json::from_str(&inputs.read(&a.input)?)?;
            let st = match a.coords.as_deref() {
                Some(path) => serde_json::from_str::<SphTiling>(&inputs.read(path)?)?,
                None => bundle.sph_tiling().ok_or_else(|| Error::Syntax {
                    input: a.input.clone(),
                    reason: "no coordinates in the tiling file; pass a coordinates file".into(),
                })?,
            };
            if a.obj.is_none() && a.coords_out.is_none() {
                return Err(Error::Syntax { input: "export".into(), reason: "nothing to write: use --obj or --coords-out".into() });
            }
            if let Some(path) = &a.obj {
                write_output(Some(path), &to_obj(&st, &bundle.map, a.segments), out)?;
            }
            if let Some(path) = &a.coords_out {
                write_output(Some(path), &coords_json(&st), out)?;
            }
            Ok(true)
        }
        Command::Report(a) => report(a.json, out),
    }
}

#[derive(Serialize)]
struct ReportLine {
    name: String,
    pass: bool,
    detail: String,
}

fn report(json: bool, out: &mut dyn Write) -> Result<bool> {
    let mut lines = Vec::new();
    let runs: Vec<(Construction, Platonic)> = Platonic::ALL
        .iter()
        .map(|&s| (Construction::Pentagonal, s))
        .chain([Platonic::Tetrahedron, Platonic::Octahedron, Platonic::Icosahedron].map(|s| (Construction::Double, s)))
        .collect();
    for (construction, solid) in runs {
        let bundle = generate(construction, solid, None, Chirality::Ccw)?;
        let geom = bundle.sph_tiling();
        let r = verify_bundle(&bundle, geom.as_ref(), 1e-9)?;
        let mut detail = format!("f = {}, vertex types:", bundle.f);
        for (combo, n) in bundle.labeled()?.vertex_types() {
            detail.push_str(&format!(" {combo}×{n}"));
        }
        if geom.is_some() {
            detail.push_str(", geometry checked");
        }
        lines.push(ReportLine { name: format!("{construction}/{solid}"), pass: r.pass, detail });
    }
    for n in 3..=5 {
        let s = solve_double_pentagon(n)?;
        lines.push(ReportLine {
            name: format!("double-pentagon/n={n}"),
            pass: true,
            detail: format!("a ≈ {:.6}π, b ≈ {:.6}π, c ≈ {:.6}π", s.a / PI, s.b / PI, s.c / PI),
        });
    }
    let table = enumerate_avc(
        &alpha4_case_assignment(),
        &PentagonProto::new(ProtoKind::A3BC),
        ALPHA4_CASE_BOUNDS,
        &SearchOptions::default(),
    )?;
    for f in [48, 72, 120] {
        let row = table.at(f);
        let list = |s: &std::collections::BTreeSet<crate::avc::VertexCombo>| {
            s.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
        };
        lines.push(ReportLine {
            name: format!("avc/alpha4/f={f}"),
            pass: true,
            detail: format!("{{{}}}, rejected by edges {{{}}}", list(&row.vertices), list(&row.rejected_by_edges)),
        });
    }
    let pass = lines.iter().all(|l| l.pass);
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&lines)?)?;
    } else {
        for l in &lines {
            writeln!(out, "{} {}: {}", status(l.pass), l.name, l.detail)?;
        }
        writeln!(out, "report: {}", status(pass))?;
    }
    Ok(pass)
}
