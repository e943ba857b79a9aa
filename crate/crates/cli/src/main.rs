//! Command-line front end: enumeration dumps, hull reports, full proof
//! verification, cone queries, corollary reproduction, and a deterministic
//! SVG plot of the ratio region.
//!
//! Exit codes: 0 when the requested run succeeds and every mathematical
//! check passes (discrepancy findings are informational); 1 when a
//! mathematical check fails; 2 for usage, parse, and I/O errors.

use clap::{Parser, Subcommand, ValueEnum};
use num::ToPrimitive;
use sci_chern::*;
use serde_json::{json, Value};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

/// CLI-level results; errors are user-facing strings mapped to exit code 2.
type CliResult<T> = std::result::Result<T, String>;

#[derive(Parser)]
#[command(
    name = "sci-chern",
    version,
    about = "Exact Chern-ratio geography of smooth complete intersection threefolds with ample canonical class"
)]
struct Cli {
    /// Largest s1 = sum of the degrees enumerated (>= 5)
    #[arg(long = "max-s1", global = true, default_value_t = 40)]
    max_s1: u32,
    /// Largest finite line/edge index (>= 6)
    #[arg(long = "m-max", global = true, default_value_t = 200)]
    m_max: u32,
    /// Seed for the randomized reduction spot checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format (enumerate defaults to csv, everything else emits json)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Output path (stdout when omitted)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Dump every degree tuple with 5 <= s1 <= max-s1 and its exact invariants
    Enumerate,
    /// Exact convex hull of the enumerated ratio points, reconciled with the corners
    Hull,
    /// Run every verification step and emit the JSON report
    Verify,
    /// Decide dual-cone membership of l1*c1^3 + l2*c1c2 + l3*c3 >= 0
    ConeCheck {
        /// Coefficient of c1^3, as "p" or "p/q"
        #[arg(allow_hyphen_values = true)]
        l1: String,
        /// Coefficient of c1c2
        #[arg(allow_hyphen_values = true)]
        l2: String,
        /// Coefficient of c3
        #[arg(allow_hyphen_values = true)]
        l3: String,
    },
    /// Reproduce the two edge-combination identities and the inequality sweep
    Corollary,
    /// Deterministic SVG of the ratio region with corners and supporting lines
    Plot,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> CliResult<ExitCode> {
    match &cli.command {
        Command::Enumerate => {
            let cloud = enumerate_points(cli.max_s1).map_err(|e| e.to_string())?;
            let text = match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => enumerate_csv(&cloud),
                Format::Json => pretty(&enumerate_json(&cloud)),
            };
            emit(cli, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Hull => {
            require_json(cli, "hull")?;
            let cloud = enumerate_points(cli.max_s1).map_err(|e| e.to_string())?;
            let h = convex_hull(&cloud.points());
            let rep =
                corner_report(&h, &cloud, cli.m_max.min(cli.max_s1)).map_err(|e| e.to_string())?;
            emit(cli, &pretty(&hull_json(&cloud, &h, &rep)))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify => {
            require_json(cli, "verify")?;
            let cfg = RunConfig {
                s1_max: cli.max_s1,
                m_max: cli.m_max,
                seed: cli.seed,
            };
            let report = full_verify(&cfg).map_err(|e| e.to_string())?;
            let text = serde_json::to_string_pretty(&report).expect("report is serializable");
            emit(cli, &text)?;
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::ConeCheck { l1, l2, l3 } => {
            require_json(cli, "cone-check")?;
            let parse = |s: &str| parse_q(s).map_err(|e| e.to_string());
            let v = ConeVector::new(parse(l1)?, parse(l2)?, parse(l3)?);
            let cone = Cone::new(cli.m_max).map_err(|e| e.to_string())?;
            let verdict = cone.contains(&v);
            emit(cli, &pretty(&cone_json(&v, &verdict)))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Corollary => {
            require_json(cli, "corollary")?;
            let cone = Cone::new(cli.m_max).map_err(|e| e.to_string())?;
            let cloud = enumerate_points(cli.max_s1).map_err(|e| e.to_string())?;
            let rep = corollary_check(&cone, &cloud).map_err(|e| e.to_string())?;
            emit(cli, &pretty(&corollary_json(&rep)))?;
            Ok(if rep.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Plot => {
            if cli.format.is_some() {
                return Err("plot emits svg; --format does not apply".into());
            }
            let cloud = enumerate_points(cli.max_s1).map_err(|e| e.to_string())?;
            emit(cli, &svg_plot(&cloud, cli.max_s1, cli.m_max))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn require_json(cli: &Cli, cmd: &str) -> CliResult<()> {
    match cli.format {
        None | Some(Format::Json) => Ok(()),
        Some(Format::Csv) => Err(format!("the {cmd} subcommand only emits json")),
    }
}

fn emit(cli: &Cli, text: &str) -> CliResult<()> {
    match &cli.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value")
}

fn parts_string(t: &DegreeTuple) -> String {
    t.parts()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

fn enumerate_csv(cloud: &PointCloud) -> String {
    let mut out = String::from("n,parts,s1,c1cubed,c1c2,c3,x,y,x_dec,y_dec\n");
    for (t, c) in &cloud.entries {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            t.n(),
            parts_string(t),
            t.s1(),
            fmt_q(&c.c1_cubed),
            fmt_q(&c.c1c2),
            fmt_q(&c.c3),
            fmt_q(&c.x),
            fmt_q(&c.y),
            dec6(&c.x),
            dec6(&c.y),
        ));
    }
    out.pop();
    out
}

fn enumerate_json(cloud: &PointCloud) -> Value {
    let rows: Vec<Value> = cloud
        .entries
        .iter()
        .map(|(t, c)| {
            json!({
                "n": t.n(),
                "parts": parts_string(t),
                "s1": t.s1(),
                "c1cubed": fmt_q(&c.c1_cubed),
                "c1c2": fmt_q(&c.c1c2),
                "c3": fmt_q(&c.c3),
                "x": fmt_q(&c.x),
                "y": fmt_q(&c.y),
                "x_dec": dec6(&c.x),
                "y_dec": dec6(&c.y),
            })
        })
        .collect();
    Value::Array(rows)
}

fn points_json(pts: &[RatioPoint]) -> Value {
    Value::Array(
        pts.iter()
            .map(|p| json!({ "x": fmt_q(&p.x), "y": fmt_q(&p.y) }))
            .collect(),
    )
}

fn hull_json(cloud: &PointCloud, h: &Hull, rep: &CornerReport) -> Value {
    json!({
        "s1_max": cloud.s1_max,
        "points": cloud.len(),
        "vertices": points_json(&h.vertices),
        "lower_chain": points_json(&h.lower_chain),
        "upper_chain": points_json(&h.upper_chain),
        "matched_corners": rep
            .matched
            .iter()
            .map(|(i, t)| json!([i.to_string(), t.label()]))
            .collect::<Vec<_>>(),
        "extra_lower_vertices": rep.extra_vertices.len(),
        "missing_corners": rep.missing.len(),
        "truncation_artifacts": rep.truncation_artifacts.len(),
        "clean": rep.clean(),
    })
}

fn certificate_json(c: &ConeCertificate) -> Value {
    json!({
        "edges": c.edges.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        "weights": c.weights.iter().map(fmt_q).collect::<Vec<_>>(),
    })
}

fn cone_json(v: &ConeVector, verdict: &MembershipVerdict) -> Value {
    json!({
        "vector": { "l1": fmt_q(&v.l1), "l2": fmt_q(&v.l2), "l3": fmt_q(&v.l3) },
        "member": verdict.member,
        "certificate": verdict.certificate.as_ref().map(certificate_json),
        "counterexample": verdict.counterexample.as_ref().map(DegreeTuple::label),
        "equalities": verdict
            .equalities
            .iter()
            .map(DegreeTuple::label)
            .collect::<Vec<_>>(),
        "corner_values": verdict
            .corner_values
            .iter()
            .map(|(i, h)| json!([format!("p_{i}"), fmt_q(h)]))
            .collect::<Vec<_>>(),
        "tail": {
            "cleared": verdict.tail.cleared.render("n"),
            "bounded": verdict.tail.bounded,
            "identically_zero": verdict.tail.identically_zero,
            "equality_at": verdict.tail.equality_at,
            "violation_at": verdict.tail.violation_at,
            "limit_value": fmt_q(&verdict.tail.limit_value),
        },
    })
}

fn corollary_json(rep: &CorollaryReport) -> Value {
    json!({
        "identity1": rep.identity1,
        "identity2": rep.identity2,
        "certificate1": certificate_json(&rep.cert1),
        "certificate2": certificate_json(&rep.cert2),
        "sextic_bound_ok": rep.sextic_bound_ok,
        "sextic_equalities": rep
            .sextic_equalities
            .iter()
            .map(DegreeTuple::label)
            .collect::<Vec<_>>(),
        "sixth_strict": rep.sixth_strict,
        "eighteenth_strict": rep.eighteenth_strict,
        "pass": rep.pass,
    })
}

// --- SVG plot -------------------------------------------------------------

const SVG_W: i64 = 800;
const SVG_H: i64 = 600;
const MARGIN: i64 = 60;

/// Fixed 2-decimal pixel coordinate, rounded half-up in exact arithmetic so
/// the output is byte-identical across runs and platforms.
fn px(v: &Q) -> String {
    let scaled = v * qi(100) + q(1, 2);
    let f = scaled
        .floor()
        .to_integer()
        .to_i64()
        .expect("pixel coordinates are small");
    let sign = if f < 0 { "-" } else { "" };
    format!("{sign}{}.{:02}", f.abs() / 100, f.abs() % 100)
}

/// World -> screen mapping over a fixed box that contains the whole region,
/// x in [0, 11/5] and y in [0, 29/5].
struct Frame {
    xmin: Q,
    xmax: Q,
    ymin: Q,
    ymax: Q,
}

impl Frame {
    fn sx(&self, x: &Q) -> Q {
        qi(MARGIN) + (x - &self.xmin) * qi(SVG_W - 2 * MARGIN) / (&self.xmax - &self.xmin)
    }

    fn sy(&self, y: &Q) -> Q {
        qi(MARGIN) + qi(SVG_H - 2 * MARGIN)
            - (y - &self.ymin) * qi(SVG_H - 2 * MARGIN) / (&self.ymax - &self.ymin)
    }

    fn map(&self, p: &RatioPoint) -> (String, String) {
        (px(&self.sx(&p.x)), px(&self.sy(&p.y)))
    }
}

fn svg_plot(cloud: &PointCloud, s1_max: u32, m_max: u32) -> String {
    let f = Frame {
        xmin: qi(0),
        xmax: q(11, 5),
        ymin: qi(0),
        ymax: q(29, 5),
    };
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SVG_W}\" height=\"{SVG_H}\" viewBox=\"0 0 {SVG_W} {SVG_H}\">\n"
    ));
    svg.push_str(
        "<style>.pt{fill:#555;}.corner{fill:#c0392b;}.pinf{fill:none;stroke:#c0392b;stroke-width:1.5;}\
.edge{stroke:#2980b9;stroke-width:1;fill:none;}.l0{stroke:#27ae60;}.linf{stroke:#8e44ad;stroke-dasharray:4 3;}\
.axis{font:14px monospace;fill:#222;}.frame{fill:none;stroke:#999;}</style>\n",
    );
    svg.push_str(&format!(
        "<defs><clipPath id=\"plot\"><rect x=\"{MARGIN}\" y=\"{MARGIN}\" width=\"{}\" height=\"{}\"/></clipPath></defs>\n",
        SVG_W - 2 * MARGIN,
        SVG_H - 2 * MARGIN
    ));
    svg.push_str(&format!(
        "<rect class=\"frame\" x=\"{MARGIN}\" y=\"{MARGIN}\" width=\"{}\" height=\"{}\"/>\n",
        SVG_W - 2 * MARGIN,
        SVG_H - 2 * MARGIN
    ));

    svg.push_str("<g clip-path=\"url(#plot)\">\n");
    let draw_line = |svg: &mut String, line: &Line, class: &str| {
        let y_left = line.eval(&f.xmin);
        let y_right = line.eval(&f.xmax);
        svg.push_str(&format!(
            "<line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
            px(&f.sx(&f.xmin)),
            px(&f.sy(&y_left)),
            px(&f.sx(&f.xmax)),
            px(&f.sy(&y_right)),
        ));
    };
    draw_line(&mut svg, &edge_line(LineIndex::Finite(0)), "edge l0");
    for m in 1..=m_max.min(8) {
        draw_line(&mut svg, &edge_line(LineIndex::Finite(m)), "edge");
    }
    draw_line(&mut svg, &edge_line(LineIndex::Infinity), "edge linf");

    // 1px grid dedup keeps the point layer bounded on large budgets
    let mut seen = std::collections::HashSet::new();
    for p in cloud.points() {
        let (cx, cy) = f.map(&p);
        let key = (
            cx[..cx.len() - 3].to_string(),
            cy[..cy.len() - 3].to_string(),
        );
        if seen.insert(key) {
            svg.push_str(&format!(
                "<circle class=\"pt\" cx=\"{cx}\" cy=\"{cy}\" r=\"1.5\"/>\n"
            ));
        }
    }
    svg.push_str("</g>\n");

    for i in (1..=5).chain(6..=s1_max.max(6)) {
        let idx = CornerIndex::Finite(i);
        if corner_min_s1(idx).map_or(true, |min| min > s1_max) {
            continue;
        }
        let p = corner(idx).expect("corner within budget");
        let (cx, cy) = f.map(&p);
        svg.push_str(&format!(
            "<circle class=\"corner\" cx=\"{cx}\" cy=\"{cy}\" r=\"3\"/>\n"
        ));
    }
    let p_inf = corner(CornerIndex::Infinity).expect("limit corner");
    let (cx, cy) = f.map(&p_inf);
    svg.push_str(&format!(
        "<circle class=\"pinf\" cx=\"{cx}\" cy=\"{cy}\" r=\"4\"/>\n<text class=\"axis\" x=\"{}\" y=\"{}\">p_inf</text>\n",
        px(&(f.sx(&p_inf.x) + qi(8))),
        px(&(f.sy(&p_inf.y) - qi(8))),
    ));

    svg.push_str(&format!(
        "<text class=\"axis\" x=\"{}\" y=\"{}\">x = c1^3/(c1 c2)</text>\n",
        SVG_W / 2 - 70,
        SVG_H - 20
    ));
    svg.push_str(&format!(
        "<text class=\"axis\" x=\"20\" y=\"{}\" transform=\"rotate(-90 20 {})\">y = c3/(c1 c2)</text>\n",
        SVG_H / 2,
        SVG_H / 2
    ));
    svg.push_str("</svg>\n");
    svg
}
