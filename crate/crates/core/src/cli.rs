//! Command-line front end.
//!
//! [`run_command`] turns a parsed [`CommandRequest`] into the bytes the
//! binary writes and its exit code, so the whole surface is testable without
//! spawning a process. Exit codes: 0 ok, 1 verification failure, 2 input error.

use clap::{Parser, ValueEnum};
use serde_json::{Map, Number, Value};

use crate::classes::{bs_radius, check_janowski_a, inclusion_holds, FunctionClass};
use crate::disc::{circumscribed_radius, inscribed_radius_with_branch, CenterParam};
use crate::error::Error;
use crate::format::{fixed12, sig12};
use crate::oracles::{
    sharpness_witness, verify_bs_radius, verify_disc_radii, ContainmentReport, OracleConfig, Verdict,
};
use crate::region::{polyline_angle, RegionParam};
use crate::tolerance;

pub const SCHEMA_VERSION: &str = "1";

const DEFAULT_BOUNDARY_SAMPLES: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Subcommand {
    /// Booth lemniscate starlikeness radius of a class.
    Radius,
    /// Inscribed and circumscribed disc radii about a real center.
    Inscribed,
    /// Sufficient test for S*[A,B] ⊂ BS(alpha).
    Inclusion,
    /// Closed form against its brute-force oracle.
    Verify,
    /// Boundary touch point of the extremal function.
    Sharpness,
    /// Boundary curve samples for plotting.
    Boundary,
}

impl Subcommand {
    fn name(self) -> &'static str {
        match self {
            Subcommand::Radius => "radius",
            Subcommand::Inscribed => "inscribed",
            Subcommand::Inclusion => "inclusion",
            Subcommand::Verify => "verify",
            Subcommand::Sharpness => "sharpness",
            Subcommand::Boundary => "boundary",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassName {
    StarlikeOrder,
    Starlike,
    Convex,
    MClass,
    Janowski,
    Parvatham,
    Fournier,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Parser)]
#[command(
    name = "booth-radius",
    version,
    about = "Booth lemniscate disc radii and starlikeness radii, with oracle verification",
    allow_negative_numbers = true
)]
pub struct CommandRequest {
    #[arg(value_enum)]
    pub subcommand: Subcommand,

    /// Region parameter, 0 ≤ alpha < 1.
    #[arg(long)]
    pub alpha: f64,

    #[arg(long, value_enum)]
    pub class: Option<ClassName>,

    #[arg(long)]
    pub beta: Option<f64>,

    /// Janowski A.
    #[arg(long = "A")]
    pub a: Option<f64>,

    /// Janowski B.
    #[arg(long = "B")]
    pub b: Option<f64>,

    /// Real disc center for `inscribed` and `verify`.
    #[arg(long)]
    pub center: Option<f64>,

    /// Boundary samples, at least 8.
    #[arg(long)]
    pub samples: Option<usize>,

    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,

    /// Acceptance threshold on |closed form − oracle| for `verify`.
    #[arg(long)]
    pub tolerance: Option<f64>,

    /// Radius override for `sharpness`.
    #[arg(long)]
    pub radius: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fail,
    Error,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

/// What the binary writes and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

#[derive(Debug, Clone, PartialEq)]
struct InputError {
    parameter: String,
    message: String,
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        Self { parameter: e.parameter().unwrap_or("input").to_owned(), message: e.to_string() }
    }
}

fn missing(parameter: &str, why: &str) -> InputError {
    InputError { parameter: parameter.to_owned(), message: format!("missing --{parameter}: {why}") }
}

/// A results value; rendered to JSON, CSV or text.
#[derive(Debug, Clone, PartialEq)]
enum Field {
    Num(f64),
    Int(usize),
    Str(String),
    Bool(bool),
    Null,
    Obj(Vec<(&'static str, Field)>),
    List(Vec<Field>),
}

impl Field {
    fn to_json(&self) -> Value {
        match self {
            Field::Num(x) => number(*x),
            Field::Int(n) => Value::from(*n),
            Field::Str(s) => Value::from(s.as_str()),
            Field::Bool(b) => Value::from(*b),
            Field::Null => Value::Null,
            Field::Obj(entries) => {
                Value::Object(entries.iter().map(|(k, v)| ((*k).to_owned(), v.to_json())).collect::<Map<_, _>>())
            }
            Field::List(items) => Value::Array(items.iter().map(Field::to_json).collect()),
        }
    }

    fn to_cell(&self) -> String {
        match self {
            Field::Num(x) => sig12(*x),
            Field::Int(n) => n.to_string(),
            Field::Str(s) => s.clone(),
            Field::Bool(b) => b.to_string(),
            Field::Null => String::new(),
            Field::Obj(_) | Field::List(_) => unreachable!("flattened before rendering"),
        }
    }
}

fn number(x: f64) -> Value {
    if x.is_finite() {
        Value::Number(sig12(x).parse::<Number>().expect("formatted float is a JSON number"))
    } else {
        Value::Null
    }
}

fn flatten(prefix: &str, fields: &[(&'static str, Field)], out: &mut Vec<(String, String)>) {
    for (key, value) in fields {
        let name = if prefix.is_empty() { (*key).to_owned() } else { format!("{prefix}.{key}") };
        match value {
            Field::Obj(inner) => flatten(&name, inner, out),
            other => out.push((name, other.to_cell())),
        }
    }
}

struct Report {
    results: Vec<(&'static str, Field)>,
    status: Status,
    text: String,
}

enum Response {
    Report(Report),
    Boundary(Vec<[f64; 3]>),
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match CommandRequest::try_parse_from(args) {
        Ok(request) => run_command(&request),
        Err(e) => {
            let rendered = e.render().to_string();
            let code = if e.use_stderr() { Status::Error.exit_code() } else { 0 };
            if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: rendered, exit_code: code }
            } else {
                Outcome { stdout: rendered, stderr: String::new(), exit_code: code }
            }
        }
    }
}

pub fn run_command(request: &CommandRequest) -> Outcome {
    let inputs = echo_inputs(request);
    match dispatch(request) {
        Ok(Response::Report(report)) => render_report(request, inputs, report),
        Ok(Response::Boundary(points)) => render_boundary(request, inputs, &points),
        Err(error) => render_error(request, inputs, &error),
    }
}

fn echo_inputs(request: &CommandRequest) -> Vec<(&'static str, Field)> {
    let mut inputs = vec![("alpha", Field::Num(request.alpha))];
    if let Some(class) = request.class {
        let name = class.to_possible_value().expect("no skipped variants").get_name().to_owned();
        inputs.push(("class", Field::Str(name)));
    }
    let optional = [
        ("beta", request.beta),
        ("A", request.a),
        ("B", request.b),
        ("center", request.center),
        ("tolerance", request.tolerance),
        ("radius", request.radius),
    ];
    for (key, value) in optional {
        if let Some(v) = value {
            inputs.push((key, Field::Num(v)));
        }
    }
    if let Some(n) = request.samples {
        inputs.push(("samples", Field::Int(n)));
    }
    inputs
}

fn dispatch(request: &CommandRequest) -> Result<Response, InputError> {
    let region = RegionParam::new(request.alpha)?;
    match request.subcommand {
        Subcommand::Radius => radius(request, region),
        Subcommand::Inscribed => inscribed(request, region),
        Subcommand::Inclusion => inclusion(request, region),
        Subcommand::Verify => verify(request, region),
        Subcommand::Sharpness => sharpness(request, region),
        Subcommand::Boundary => boundary(request, region),
    }
}

fn resolve_class(request: &CommandRequest) -> Result<Option<FunctionClass>, InputError> {
    let Some(name) = request.class else {
        return Ok(None);
    };
    let beta = || request.beta.ok_or_else(|| missing("beta", "this class is parametrised by beta"));
    let class = match name {
        ClassName::StarlikeOrder => FunctionClass::starlike_order(beta()?)?,
        ClassName::Starlike => FunctionClass::Starlike,
        ClassName::Convex => FunctionClass::Convex,
        ClassName::MClass => FunctionClass::m_class(beta()?)?,
        ClassName::Janowski => {
            let a = request.a.ok_or_else(|| missing("A", "janowski needs --A and --B"))?;
            check_janowski_a(a)?;
            let b = request.b.ok_or_else(|| missing("B", "janowski needs --A and --B"))?;
            FunctionClass::janowski(a, b)?
        }
        ClassName::Parvatham => FunctionClass::parvatham(beta()?)?,
        ClassName::Fournier => FunctionClass::fournier(beta()?)?,
    };
    Ok(Some(class))
}

fn require_class(request: &CommandRequest) -> Result<FunctionClass, InputError> {
    resolve_class(request)?.ok_or_else(|| missing("class", "this subcommand needs a function class"))
}

fn require_center(request: &CommandRequest, region: RegionParam) -> Result<CenterParam, InputError> {
    let a = request.center.ok_or_else(|| missing("center", "this subcommand needs a real disc center"))?;
    Ok(CenterParam::new(region, a)?)
}

fn radius(request: &CommandRequest, region: RegionParam) -> Result<Response, InputError> {
    let class = require_class(request)?;
    let result = bs_radius(class, region)?;
    Ok(Response::Report(Report {
        results: vec![
            ("radius", Field::Num(result.value)),
            ("raw", Field::Num(result.raw)),
            ("branch", Field::Str(result.branch.label().to_owned())),
            ("clamped", Field::Bool(result.clamped)),
        ],
        status: Status::Ok,
        text: format!("R = {}  branch = {}  clamped = {}\n", fixed12(result.value), result.branch, result.clamped),
    }))
}

fn inscribed(request: &CommandRequest, region: RegionParam) -> Result<Response, InputError> {
    let center = require_center(request, region)?;
    let (inner, branch) = inscribed_radius_with_branch(region, center)?;
    let outer = circumscribed_radius(region, center)?;
    Ok(Response::Report(Report {
        results: vec![
            ("inscribed", Field::Num(inner)),
            ("inscribed_branch", Field::Str(branch.label().to_owned())),
            ("circumscribed", Field::Num(outer)),
        ],
        status: Status::Ok,
        text: format!("r_a = {}  R_a = {}\n", fixed12(inner), fixed12(outer)),
    }))
}

fn inclusion(request: &CommandRequest, region: RegionParam) -> Result<Response, InputError> {
    let (a, b) = match (request.a, request.b) {
        (Some(a), Some(b)) => (a, b),
        _ => match resolve_class(request)? {
            Some(class) => class.janowski_params().ok_or_else(|| InputError {
                parameter: "class".to_owned(),
                message: format!("invalid parameter class: {} is not a Janowski class", class.name()),
            })?,
            None => return Err(missing("A", "inclusion needs --A and --B, or a Janowski-type --class")),
        },
    };
    let verdict = inclusion_holds(region, a, b)?;
    let via = verdict.via_condition.map(|c| c.label());
    let text = match via {
        Some(label) => format!("holds via ({label})\n"),
        None => "not established by conditions (i) or (ii)\n".to_owned(),
    };
    Ok(Response::Report(Report {
        results: vec![
            ("holds", Field::Bool(verdict.holds)),
            ("via_condition", via.map_or(Field::Null, |l| Field::Str(l.to_owned()))),
        ],
        status: Status::Ok,
        text,
    }))
}

fn check_tolerance(request: &CommandRequest, default: f64) -> Result<f64, InputError> {
    let tol = request.tolerance.unwrap_or(default);
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(Error::OutOfRange { name: "tolerance", value: tol, requirement: "must be positive and finite".to_owned() }
            .into())
    }
}

fn report_fields(report: &ContainmentReport) -> Field {
    Field::Obj(vec![
        ("closed_form", Field::Num(report.closed_form)),
        ("oracle", Field::Num(report.oracle)),
        ("abs_gap", Field::Num(report.abs_gap)),
        ("tolerance", Field::Num(report.tolerance)),
        ("touch_parameter", report.touch_parameter.map_or(Field::Null, Field::Num)),
        ("verdict", Field::Str(report.verdict.label().to_owned())),
    ])
}

fn report_line(name: &str, report: &ContainmentReport) -> String {
    format!(
        "{name}: closed_form = {}  oracle = {}  abs_gap = {}  tolerance = {}  verdict = {}\n",
        fixed12(report.closed_form),
        fixed12(report.oracle),
        sig12(report.abs_gap),
        sig12(report.tolerance),
        report.verdict.label()
    )
}

fn verify(request: &CommandRequest, region: RegionParam) -> Result<Response, InputError> {
    let config = OracleConfig::default();
    match (resolve_class(request)?, request.center) {
        (Some(class), None) => {
            let tol = check_tolerance(request, tolerance::RADIUS)?;
            let (report, witness) = match verify_bs_radius(class, region, tol, &config) {
                Ok(found) => found,
                Err(e) if e.is_diagnostic() => {
                    return Ok(Response::Report(Report {
                        results: vec![("diagnostic", Field::Str(e.to_string()))],
                        status: Status::Fail,
                        text: format!("oracle diagnostic: {e}\n"),
                    }))
                }
                Err(e) => return Err(e.into()),
            };
            let sharp = witness.map_or(Field::Null, |w| {
                Field::Obj(vec![
                    ("x0", Field::Num(w.x0)),
                    ("t_star", Field::Num(w.t_star)),
                    ("margin", Field::Num(w.margin)),
                    ("witnessed", Field::Bool(w.witnessed)),
                ])
            });
            let sharp_ok = witness.is_none_or(|w| w.witnessed);
            let status = if report.verdict == Verdict::Pass && sharp_ok { Status::Ok } else { Status::Fail };
            let mut text = report_line("radius", &report);
            if let Some(w) = witness {
                text.push_str(&format!(
                    "sharpness: t* = {}  margin = {}  witnessed = {}\n",
                    fixed12(w.t_star),
                    sig12(w.margin),
                    w.witnessed
                ));
            }
            Ok(Response::Report(Report {
                results: vec![("radius", report_fields(&report)), ("sharpness", sharp)],
                status,
                text,
            }))
        }
        (None, Some(_)) => {
            let center = require_center(request, region)?;
            let tol = check_tolerance(request, tolerance::DISC_RADII)?;
            let (inner, outer) = verify_disc_radii(region, center, tol, &config)?;
            let pass = inner.verdict == Verdict::Pass && outer.verdict == Verdict::Pass;
            Ok(Response::Report(Report {
                results: vec![("inscribed", report_fields(&inner)), ("circumscribed", report_fields(&outer))],
                status: if pass { Status::Ok } else { Status::Fail },
                text: report_line("inscribed", &inner) + &report_line("circumscribed", &outer),
            }))
        }
        (Some(_), Some(_)) => Err(InputError {
            parameter: "center".to_owned(),
            message: "invalid parameter center: verify takes either --class or --center, not both".to_owned(),
        }),
        (None, None) => Err(missing("class", "verify needs --class (radius) or --center (disc radii)")),
    }
}

fn sharpness(request: &CommandRequest, region: RegionParam) -> Result<Response, InputError> {
    let class = require_class(request)?;
    let r = match request.radius {
        Some(r) => r,
        None => {
            let closed = bs_radius(class, region)?;
            if closed.clamped {
                return Err(InputError {
                    parameter: "class".to_owned(),
                    message: format!(
                        "invalid parameter class: the radius of {class} is clamped at 1, so no boundary touch exists; pass --radius"
                    ),
                });
            }
            closed.value
        }
    };
    let w = sharpness_witness(class, region, r)?;
    Ok(Response::Report(Report {
        results: vec![
            ("radius", Field::Num(r)),
            ("x0", Field::Num(w.x0)),
            ("t_star", Field::Num(w.t_star)),
            ("margin", Field::Num(w.margin)),
            ("analytic", Field::Bool(w.analytic)),
            ("sweep_t", Field::Num(w.sweep_t)),
            ("sweep_margin", Field::Num(w.sweep_margin)),
            ("witnessed", Field::Bool(w.witnessed)),
        ],
        status: if w.witnessed { Status::Ok } else { Status::Fail },
        text: format!(
            "r = {}  x0 = {}  t* = {}  margin = {}  sweep_margin = {}  witnessed = {}\n",
            fixed12(r),
            fixed12(w.x0),
            fixed12(w.t_star),
            sig12(w.margin),
            sig12(w.sweep_margin),
            w.witnessed
        ),
    }))
}

fn boundary(request: &CommandRequest, region: RegionParam) -> Result<Response, InputError> {
    let n = request.samples.unwrap_or(DEFAULT_BOUNDARY_SAMPLES);
    let points = region.boundary_polyline(n)?;
    Ok(Response::Boundary(points.iter().enumerate().map(|(k, p)| [polyline_angle(k, n), p.re, p.im]).collect()))
}

fn document(
    request: &CommandRequest,
    inputs: Vec<(&'static str, Field)>,
    body: Vec<(&'static str, Field)>,
    status: Status,
) -> String {
    let mut fields = vec![
        ("schema_version", Field::Str(SCHEMA_VERSION.to_owned())),
        ("command", Field::Str(request.subcommand.name().to_owned())),
        ("inputs", Field::Obj(inputs)),
    ];
    fields.extend(body);
    fields.push(("status", Field::Str(status.label().to_owned())));
    let mut out = serde_json::to_string_pretty(&Field::Obj(fields).to_json()).expect("JSON values serialize");
    out.push('\n');
    out
}

fn render_report(request: &CommandRequest, inputs: Vec<(&'static str, Field)>, report: Report) -> Outcome {
    let stdout = match request.format {
        OutputFormat::Text => report.text,
        OutputFormat::Json => document(request, inputs, vec![("results", Field::Obj(report.results))], report.status),
        OutputFormat::Csv => {
            let mut cells = vec![("status".to_owned(), report.status.label().to_owned())];
            flatten("", &report.results, &mut cells);
            let header: Vec<_> = cells.iter().map(|(k, _)| k.as_str()).collect();
            let row: Vec<_> = cells.iter().map(|(_, v)| v.as_str()).collect();
            format!("{}\n{}\n", header.join(","), row.join(","))
        }
    };
    Outcome { stdout, stderr: String::new(), exit_code: report.status.exit_code() }
}

fn render_boundary(request: &CommandRequest, inputs: Vec<(&'static str, Field)>, points: &[[f64; 3]]) -> Outcome {
    let stdout = match request.format {
        OutputFormat::Json => {
            let list = points
                .iter()
                .map(|[t, u, v]| Field::Obj(vec![("t", Field::Num(*t)), ("u", Field::Num(*u)), ("v", Field::Num(*v))]))
                .collect();
            document(request, inputs, vec![("results", Field::Obj(vec![("points", Field::List(list))]))], Status::Ok)
        }
        OutputFormat::Csv | OutputFormat::Text => {
            let separator = if request.format == OutputFormat::Csv { "," } else { " " };
            let mut out = ["t", "u", "v"].join(separator);
            out.push('\n');
            for point in points {
                let row: Vec<String> = point.iter().map(|x| sig12(*x)).collect();
                out.push_str(&row.join(separator));
                out.push('\n');
            }
            out
        }
    };
    Outcome { stdout, stderr: String::new(), exit_code: Status::Ok.exit_code() }
}

fn render_error(request: &CommandRequest, inputs: Vec<(&'static str, Field)>, error: &InputError) -> Outcome {
    let code = Status::Error.exit_code();
    match request.format {
        OutputFormat::Json => Outcome {
            stdout: document(
                request,
                inputs,
                vec![(
                    "error",
                    Field::Obj(vec![
                        ("parameter", Field::Str(error.parameter.clone())),
                        ("message", Field::Str(error.message.clone())),
                    ]),
                )],
                Status::Error,
            ),
            stderr: String::new(),
            exit_code: code,
        },
        OutputFormat::Text | OutputFormat::Csv => {
            Outcome { stdout: String::new(), stderr: format!("error: {}\n", error.message), exit_code: code }
        }
    }
}
