//! The `dehnfill` command line.
//!
//! Every subcommand builds a [`Report`]: a versioned JSON object holding the
//! echoed input and the computed payload. `--json` prints it verbatim;
//! otherwise it is rendered as an indented listing. Output is a pure
//! function of the arguments.
//!
//! Exit codes: 0 when the computation completes (whatever the verdicts
//! say), 1 when it fails, 2 for usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::calculus::{fill_cusps, CuspSelection};
use crate::covers::{
    component_count, find_cyclic_cover, find_prime_cover, hyperplane_census, CoverHom, HyperplaneCensus,
};
use crate::error::Error;
use crate::families::{build_xe, build_ye, hirzebruch_base, hirzebruch_planes, verify_cover_viewpoint, AbelianConfig};
use crate::lattice::{Plane, Vec4};
use crate::numbers::{CharNumbers, CuspedManifold};
use crate::obstructions::{dai_wei, hitchin_thorpe, l2_signature, splitting_report};

pub const SCHEMA: &str = "dehnfill.report/1";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "dehnfill", version, about = "Surface families, covers, fillings and Einstein obstructions")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Hirzebruch,
    Xe,
    Ye,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Prime,
    Cyclic,
    Census,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a family member: configuration, blown-up pair, cusped manifold.
    Family {
        name: Family,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        e: Option<i64>,
    },
    /// Dehn fill cusps of a family member and test the result.
    Fill {
        name: Family,
        /// all, none, euler=E, or comma-separated cusp indices.
        #[arg(default_value = "all")]
        select: CuspSelection,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        e: Option<i64>,
    },
    /// Evaluate the obstructions on given numbers.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long, allow_hyphen_values = true)]
        tau: i64,
        /// Comma-separated positive Euler numbers of the cusps.
        #[arg(long, value_delimiter = ',')]
        cusps: Vec<i64>,
        /// Optional c1^2, checked against chi and tau.
        #[arg(long, allow_hyphen_values = true)]
        c1sq: Option<i64>,
    },
    /// Search for covers with connected preimages, or count hyperplanes.
    CoverSearch {
        mode: SearchMode,
        #[arg(long)]
        p: Option<i64>,
        #[arg(long)]
        e: Option<i64>,
        /// JSON file with four planes; defaults to Hirzebruch's.
        #[arg(long)]
        seed_planes: Option<PathBuf>,
    },
    /// List the multiple points of a family member's configuration.
    Points {
        name: Family,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        e: Option<i64>,
    },
}

/// Failure of a subcommand, split by exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotPrime(_) | Error::BadModulus(_) | Error::BadIndex(_) | Error::EmptySelection => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Compute(other),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool: String,
    pub command: &'static str,
    pub input: Value,
    pub result: Value,
}

impl Report {
    fn new(command: &'static str, input: Value, result: Value) -> Self {
        Report { schema: SCHEMA, tool: format!("dehnfill {VERSION}"), command, input, result }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are plain JSON")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}  [{}]\n", self.tool, self.command, self.schema);
        render(&mut out, "input", &self.input, 0);
        render(&mut out, "result", &self.result, 0);
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Object(m) if m.len() == 2 && m.contains_key("num") && m.contains_key("den") => {
            let (n, d) = (&m["num"], &m["den"]);
            Some(if d == 1 { n.to_string() } else { format!("{n}/{d}") })
        }
        Value::Array(a) => {
            let parts: Option<Vec<String>> = a.iter().map(scalar).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Object(_) => None,
    }
}

fn render(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    out.push_str(&format!("{pad}{key}:\n"));
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                render(out, k, x, depth + 1);
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                render(out, &format!("[{i}]"), x, depth + 1);
            }
        }
        _ => unreachable!(),
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn family_e(name: Family, e: Option<i64>) -> CliResult<i64> {
    match (name, e) {
        (Family::Hirzebruch, None | Some(1)) => Ok(1),
        (Family::Hirzebruch, Some(e)) => Err(CliError::Usage(format!("hirzebruch is the e = 1 member, got --e {e}"))),
        (_, Some(e)) => Ok(e),
        (_, None) => Err(CliError::Usage("--e is required for xe and ye".into())),
    }
}

/// The cusped manifold of a family member and the numbers of its
/// compactified pair.
fn family_manifold(name: Family, e: i64) -> CliResult<(CuspedManifold, Value)> {
    Ok(match name {
        Family::Hirzebruch | Family::Xe => {
            let x = build_xe(e)?;
            (x.cusped.clone(), to_value(&x.pair.chars()))
        }
        Family::Ye => {
            let y = build_ye(e)?;
            (y.cusped.clone(), to_value(&y.pair.chars()))
        }
    })
}

fn configuration(name: Family, e: i64) -> CliResult<AbelianConfig> {
    Ok(match name {
        Family::Hirzebruch => hirzebruch_base()?,
        Family::Xe => build_xe(e)?.config,
        Family::Ye => build_ye(e)?.config,
    })
}

fn cmd_family(name: Family, e: Option<i64>) -> CliResult<Report> {
    let e = family_e(name, e)?;
    let input = json!({ "family": name, "e": e });
    let result = match name {
        Family::Hirzebruch | Family::Xe => {
            let x = build_xe(e)?;
            json!({
                "cover": x.cover,
                "configuration": x.config,
                "pairwise_intersections": x.config.pairwise_intersections()?,
                "pair": x.pair,
                "log_bmy": x.log_bmy,
                "cusped": x.cusped,
            })
        }
        Family::Ye => {
            let y = build_ye(e)?;
            let mut m = Map::new();
            m.insert("configuration".into(), to_value(&y.config));
            m.insert("pair".into(), to_value(&y.pair));
            m.insert("log_canonical_sq".into(), json!(y.log_canonical_sq));
            m.insert("log_bmy".into(), to_value(&y.log_bmy));
            m.insert("cusped".into(), to_value(&y.cusped));
            if e >= 2 {
                m.insert("cover_viewpoint".into(), to_value(&verify_cover_viewpoint(e)?));
            }
            Value::Object(m)
        }
    };
    Ok(Report::new("family", input, result))
}

fn cmd_fill(name: Family, select: &CuspSelection, e: Option<i64>) -> CliResult<Report> {
    let e = family_e(name, e)?;
    let input = json!({ "family": name, "e": e, "select": select.to_string() });
    let (before, compact) = family_manifold(name, e)?;
    let indices = select.resolve(&before)?;
    let after = fill_cusps(&before, &indices)?;
    let dw = dai_wei(&after)?;
    let test = if after.is_closed() { "hitchin_thorpe" } else { "dai_wei" };
    let result = json!({
        "compact": compact,
        "before": before,
        "filled": indices,
        "after": after,
        "l2_signature": l2_signature(after.tau(), after.cusps())?,
        "test": test,
        "verdict": dw,
        "splitting": splitting_report(&after, &dw)?,
    });
    Ok(Report::new("fill", input, result))
}

fn cmd_check(chi: i64, tau: i64, cusps: Vec<i64>, c1sq: Option<i64>) -> CliResult<Report> {
    let input = json!({ "chi": chi, "tau": tau, "cusps": cusps, "c1sq": c1sq });
    let m = CuspedManifold::new(chi, tau, cusps).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut r = Map::new();
    if let Some(c) = c1sq {
        let chars = CharNumbers::new(chi, tau, Some(c)).map_err(|e| CliError::Usage(e.to_string()))?;
        r.insert("noether".into(), json!(chars.satisfies_noether()));
    }
    let dw = dai_wei(&m)?;
    if m.is_closed() {
        r.insert("hitchin_thorpe".into(), to_value(&hitchin_thorpe(chi, tau)?));
    } else {
        r.insert("l2_signature".into(), to_value(&l2_signature(tau, m.cusps())?));
        r.insert("dai_wei".into(), to_value(&dw));
    }
    r.insert("splitting".into(), to_value(&splitting_report(&m, &dw)?));
    Ok(Report::new("check", input, Value::Object(r)))
}

/// Accepts either eight 4-vectors (two per plane) or four pairs.
pub fn parse_planes(text: &str) -> std::result::Result<[Plane; 4], String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("plane file is not JSON: {e}"))?;
    let flat: Vec<Vec4> = match serde_json::from_value::<Vec<Vec4>>(v.clone()) {
        Ok(f) => f,
        Err(_) => serde_json::from_value::<Vec<[Vec4; 2]>>(v)
            .map_err(|_| "expected an array of integer 4-vectors".to_string())?
            .into_iter()
            .flatten()
            .collect(),
    };
    if flat.len() != 8 {
        return Err(format!("expected 8 vectors (two per plane), found {}", flat.len()));
    }
    let planes = flat
        .chunks(2)
        .map(|c| Plane::new(c[0], c[1]).map_err(|e| e.to_string()))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(planes.try_into().expect("four chunks"))
}

fn load_planes(path: Option<&Path>) -> CliResult<([Plane; 4], Value)> {
    match path {
        None => Ok((hirzebruch_planes(), json!("hirzebruch"))),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?;
            let planes = parse_planes(&text).map_err(CliError::Usage)?;
            Ok((planes, to_value(&planes)))
        }
    }
}

fn certificate(phi: &CoverHom, planes: &[Plane; 4]) -> CliResult<Value> {
    let mut per_plane = Vec::new();
    for plane in planes {
        let [u, v] = plane.basis();
        per_plane.push(json!({
            "plane": plane,
            "image_of_basis": [phi.eval(&u)?, phi.eval(&v)?],
            "components": component_count(phi, plane)?,
        }));
    }
    Ok(json!({ "cover": phi, "planes": per_plane }))
}

fn cmd_cover_search(mode: SearchMode, p: Option<i64>, e: Option<i64>, seed: Option<&Path>) -> CliResult<Report> {
    let (planes, source) = load_planes(seed)?;
    let n = match mode {
        SearchMode::Prime | SearchMode::Census => {
            p.ok_or_else(|| CliError::Usage(format!("--p is required for {mode:?}").to_lowercase()))?
        }
        SearchMode::Cyclic => e.ok_or_else(|| CliError::Usage("--e is required for cyclic".into()))?,
    };
    let input = json!({ "mode": mode, "n": n, "planes": source });
    let result = match mode {
        SearchMode::Prime => certificate(&find_prime_cover(n, &planes)?, &planes)?,
        SearchMode::Cyclic => certificate(&find_cyclic_cover(n, &planes)?, &planes)?,
        SearchMode::Census => {
            let c: HyperplaneCensus = hyperplane_census(n, &planes)?;
            let bound = HyperplaneCensus::lower_bound(n);
            json!({
                "census": c,
                "lower_bound": bound,
                "bound_positive": bound > 0,
                "bound_holds": c.good >= bound,
            })
        }
    };
    Ok(Report::new("cover-search", input, result))
}

fn cmd_points(name: Family, e: Option<i64>) -> CliResult<Report> {
    let e = family_e(name, e)?;
    let config = configuration(name, e)?;
    let input = json!({ "family": name, "e": e });
    let points: Vec<Value> = config
        .incidences()
        .iter()
        .map(|inc| json!({ "point": inc.point.to_string(), "coords": inc.point, "curves": inc.curves }))
        .collect();
    let result = json!({
        "labels": config.labels(),
        "count": points.len(),
        "points": points,
        "pairwise_intersections": config.pairwise_intersections()?,
    });
    Ok(Report::new("points", input, result))
}

pub fn execute(cli: &Cli) -> CliResult<Report> {
    match &cli.command {
        Command::Family { name, e } => cmd_family(*name, *e),
        Command::Fill { name, select, e } => cmd_fill(*name, select, *e),
        Command::Check { chi, tau, cusps, c1sq } => cmd_check(*chi, *tau, cusps.clone(), *c1sq),
        Command::CoverSearch { mode, p, e, seed_planes } => cmd_cover_search(*mode, *p, *e, seed_planes.as_deref()),
        Command::Points { name, e } => cmd_points(*name, *e),
    }
}

/// Parses `args` (including the program name), runs, and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind::{DisplayHelp, DisplayVersion};
            return match e.kind() {
                DisplayHelp | DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let text = if cli.json { report.to_json() + "\n" } else { report.to_text() };
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
        Err(CliError::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
