//! Command dispatch. [`run`] is pure apart from reading `--file` and
//! writing `--out`; it returns the exit code and both output streams.

use std::fmt::Write as _;
use std::ops::Range;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ttgeom_core::frames::{check_frame_laws, points, principal_witnesses, zar_frame_of, FiniteFrame};
use ttgeom_core::ideals::{PrimeClassification, DEFAULT_ENUMERATION_BOUND};
use ttgeom_core::spectra::{hochster_dual, is_spectral, spc_of, FiniteSpace, PointPayload};
use ttgeom_core::support::{check_frame_support, check_top_support, nvy_support_of, universal_support_of};
use ttgeom_core::tensys::{boolean_matrices, builtin, degenerate, random_system, TensorSystem, MAX_RANDOM_OBJECTS};
use ttgeom_core::verify::{run_suite, CheckStatus, SuiteConfig, SuiteReport};
use ttgeom_core::{BitSet, IdealLattice, ObjectId, RadicalMethod};

use crate::{dot, format, json};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Names accepted by `--builtin`.
pub const SYSTEM_NAMES: [&str; 6] = ["trivial", "two_idem", "chain3", "noncomm4", "degenerate", "boolean_matrices"];

#[derive(Parser, Clone, Debug)]
#[command(name = "ttgeom", version, about = "Finite tensor-triangular geometry: ideals, spectra, frames and supports")]
pub struct Cli {
    #[command(flatten)]
    pub input: InputArgs,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Write the output to this path instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Treat failure of the complete-primality assumption as a verification failure.
    #[arg(long, global = true)]
    pub strict: bool,

    /// Largest object count for which thick ideals are enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_BOUND as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub enum_bound: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Clone, Debug, Default)]
pub struct InputArgs {
    /// Use a named system.
    #[arg(long, global = true, value_name = "NAME")]
    pub builtin: Option<String>,

    /// Load a system from a description file (`.json` or the text format).
    #[arg(long, global = true, value_name = "PATH")]
    pub file: Option<PathBuf>,

    /// Generate a random system from this seed.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Object bound for generated systems.
    #[arg(long, global = true, default_value_t = 8,
          value_parser = clap::value_parser!(u64).range(2..=MAX_RANDOM_OBJECTS as u64))]
    pub max_objects: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Clone, Debug)]
pub enum Command {
    /// Check the structural axioms of the system.
    Validate,
    /// List the thick tensor ideals and their inclusion order.
    Ideals,
    /// Classify every thick ideal as prime and completely prime.
    Primes,
    /// Radical of the ideal generated by the given objects, by both methods.
    Radical {
        /// Comma-separated object labels.
        #[arg(long, value_name = "LABELS", allow_hyphen_values = true)]
        ideal: String,
    },
    /// The frame of radical ideals.
    Zar,
    /// The spectrum of prime ideals with its Zariski topology.
    Spc,
    /// The Hochster dual of the spectrum.
    Dual,
    /// The universal frame-valued support and the space-valued support on the spectrum.
    Support,
    /// Run the theorem checks on one system or on a range of random systems.
    Verify {
        /// Seeds `A..B` (half-open) or `A..=B`, generated with `--max-objects`.
        #[arg(long, value_name = "RANGE")]
        seed_range: Option<String>,
        /// Supports of each kind checked for initiality and finality.
        #[arg(long, default_value_t = 20)]
        supports: usize,
    },
    /// Everything at once: a JSON bundle, all DOT graphs, or the text description.
    Emit,
}

/// What a run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

/// One command result in each output format.
struct Rendered {
    code: i32,
    text: String,
    json: Value,
    dot: Option<String>,
}

pub fn run(cli: &Cli) -> Outcome {
    let result = dispatch(cli).and_then(|r| {
        let body = match cli.format {
            OutputFormat::Text => r.text,
            OutputFormat::Json => json::to_text(&r.json),
            OutputFormat::Dot => r
                .dot
                .ok_or_else(|| InputError(format!("--format dot is not available for `{}`", command_name(&cli.command))))?,
        };
        Ok((r.code, body))
    });
    match result {
        Ok((code, body)) => match &cli.out {
            Some(path) => match std::fs::write(path, &body) {
                Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
                Err(e) => input_failure(format!("cannot write {}: {e}", path.display())),
            },
            None => Outcome { code, stdout: body, stderr: String::new() },
        },
        Err(InputError(message)) => input_failure(message),
    }
}

fn input_failure(message: String) -> Outcome {
    Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {message}\n") }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate => "validate",
        Command::Ideals => "ideals",
        Command::Primes => "primes",
        Command::Radical { .. } => "radical",
        Command::Zar => "zar",
        Command::Spc => "spc",
        Command::Dual => "dual",
        Command::Support => "support",
        Command::Verify { .. } => "verify",
        Command::Emit => "emit",
    }
}

fn dispatch(cli: &Cli) -> Result<Rendered, InputError> {
    if let Command::Verify { seed_range: Some(range), supports } = &cli.command {
        if cli.input.builtin.is_some() || cli.input.file.is_some() || cli.input.seed.is_some() {
            return Err(InputError("--seed-range cannot be combined with another input source".into()));
        }
        return campaign(cli, parse_range(range)?, *supports);
    }
    let sys = load(&cli.input)?;
    if let Command::Validate = cli.command {
        return Ok(validate(&sys));
    }
    let report = sys.validate();
    if !report.ok() {
        let mut msg = String::from("the system is invalid");
        for v in &report.violations {
            let _ = write!(msg, "\n  {}: {}", v.axiom, tuple(&sys, &v.witness));
        }
        return Err(InputError(msg));
    }
    let lattice = IdealLattice::with_bound(&sys, cli.enum_bound as usize)?;
    Ok(match &cli.command {
        Command::Validate => unreachable!("handled above"),
        Command::Ideals => ideals(&lattice),
        Command::Primes => primes(&lattice),
        Command::Radical { ideal } => radical(&lattice, ideal)?,
        Command::Zar => assumption_gate(cli, &lattice, "zar").unwrap_or_else(|| zar(&lattice)),
        Command::Spc => space_command(&lattice, false),
        Command::Dual => space_command(&lattice, true),
        Command::Support => assumption_gate(cli, &lattice, "support").unwrap_or_else(|| support(&lattice)),
        Command::Verify { supports, .. } => verify_one(cli, &sys, *supports)?,
        Command::Emit => emit(cli, &lattice),
    })
}

/// Resolves `--builtin`, `--file` or `--seed`; exactly one must be given.
pub fn load_input(input: &InputArgs) -> Result<TensorSystem, String> {
    load(input).map_err(|InputError(m)| m)
}

fn load(input: &InputArgs) -> Result<TensorSystem, InputError> {
    let given = [input.builtin.is_some(), input.file.is_some(), input.seed.is_some()];
    match given.iter().filter(|g| **g).count() {
        0 => return Err(InputError("no input: give one of --builtin, --file or --seed".into())),
        1 => {}
        _ => return Err(InputError("give exactly one of --builtin, --file or --seed".into())),
    }
    if let Some(name) = &input.builtin {
        return named_system(name).ok_or_else(|| {
            InputError(format!("unknown builtin system `{name}` (known: {})", SYSTEM_NAMES.join(", ")))
        });
    }
    if let Some(path) = &input.file {
        let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
        let is_json = path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{');
        return if is_json {
            json::load_system(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
        } else {
            format::parse_system(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
        };
    }
    let seed = input.seed.expect("one source is present");
    Ok(random_system(seed, input.max_objects as usize)?)
}

pub fn named_system(name: &str) -> Option<TensorSystem> {
    match name {
        "degenerate" => Some(degenerate()),
        "boolean_matrices" => Some(boolean_matrices()),
        other => builtin(other).ok(),
    }
}

fn parse_range(text: &str) -> Result<Range<u64>, InputError> {
    let bad = || InputError(format!("invalid seed range `{text}`: expected A..B or A..=B"));
    let (a, b, inclusive) = if let Some((a, b)) = text.split_once("..=") {
        (a, b, true)
    } else if let Some((a, b)) = text.split_once("..") {
        (a, b, false)
    } else {
        return Err(bad());
    };
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    let end = if inclusive { b.checked_add(1).ok_or_else(bad)? } else { b };
    if end <= a {
        return Err(InputError(format!("seed range `{text}` is empty")));
    }
    Ok(a..end)
}

// rendering helpers

fn set_text(sys: &TensorSystem, set: BitSet) -> String {
    format!("{{{}}}", sys.set_labels(set).join(", "))
}

fn ids_text(prefix: &str, set: BitSet) -> String {
    let items: Vec<String> = set.iter().map(|i| format!("{prefix}{i}")).collect();
    format!("{{{}}}", items.join(", "))
}

fn tuple(sys: &TensorSystem, w: &[ObjectId]) -> String {
    let items: Vec<&str> = w.iter().map(|&o| sys.label(o)).collect();
    format!("({})", items.join(", "))
}

/// Covering pairs of the inclusion order on distinct sets.
fn inclusion_covers(sets: &[BitSet]) -> Vec<(usize, usize)> {
    let below = |a: usize, b: usize| a != b && sets[a].is_subset(sets[b]);
    let n = sets.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if below(a, b) && !(0..n).any(|c| below(a, c) && below(c, b)) {
                out.push((a, b));
            }
        }
    }
    out
}

fn assumption_gate(cli: &Cli, lattice: &IdealLattice<'_>, what: &str) -> Option<Rendered> {
    let check = lattice.check_assumption();
    if check.holds {
        return None;
    }
    let sys = lattice.system();
    let primes: Vec<String> = check.counterexamples.iter().map(|p| set_text(sys, p.members())).collect();
    let reason = format!("{} prime(s) are not completely prime: {}", primes.len(), primes.join(" "));
    let code = if cli.strict { EXIT_VERIFICATION } else { EXIT_OK };
    let status = if cli.strict { "FAILED" } else { "SKIPPED" };
    Some(Rendered {
        code,
        text: format!("{what}: {status} ({reason})\n"),
        json: json::document("ttgeom.skipped/1", json!({ "command": what, "status": status, "reason": reason })),
        dot: None,
    })
}

// commands

fn validate(sys: &TensorSystem) -> Rendered {
    let report = sys.validate();
    let mut text = format!("objects: {} {}\n", sys.len(), set_text(sys, sys.all()));
    if report.ok() {
        text.push_str("valid\n");
    } else {
        let _ = writeln!(text, "invalid: {} violation(s)", report.violations.len());
        for v in &report.violations {
            let _ = writeln!(text, "  {}: {}", v.axiom, tuple(sys, &v.witness));
        }
    }
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| json!({ "axiom": v.axiom, "witness": v.witness.iter().map(|&o| sys.label(o)).collect::<Vec<_>>() }))
        .collect();
    Rendered {
        code: if report.ok() { EXIT_OK } else { EXIT_VERIFICATION },
        text,
        json: json::document("ttgeom.validation/1", json!({ "valid": report.ok(), "violations": violations })),
        dot: None,
    }
}

fn ideal_sets(lattice: &IdealLattice<'_>) -> Vec<BitSet> {
    lattice.ideals().iter().map(|i| i.members()).collect()
}

fn ideals_parts(lattice: &IdealLattice<'_>) -> (String, Value, String) {
    let sys = lattice.system();
    let sets = ideal_sets(lattice);
    let covers = inclusion_covers(&sets);
    let mut text = format!("thick ideals: {}\n", sets.len());
    for (i, s) in sets.iter().enumerate() {
        let _ = writeln!(text, "  I{i} = {}", set_text(sys, *s));
    }
    text.push_str("covers:\n");
    for (a, b) in &covers {
        let _ = writeln!(text, "  I{a} < I{b}");
    }
    let value = json!({
        "ideals": sets.iter().enumerate().map(|(i, s)| json!({ "id": i, "members": json::labels(sys, *s) })).collect::<Vec<_>>(),
        "covers": covers,
    });
    let labels: Vec<String> = sets.iter().map(|s| set_text(sys, *s)).collect();
    (text, value, dot::hasse("ideals", &labels, &covers))
}

fn ideals(lattice: &IdealLattice<'_>) -> Rendered {
    let (text, value, dot) = ideals_parts(lattice);
    Rendered { code: EXIT_OK, text, json: json::document("ttgeom.ideals/1", value), dot: Some(dot) }
}

fn classification_value(sys: &TensorSystem, c: &PrimeClassification) -> Value {
    json!({
        "proper": c.is_proper,
        "prime": c.is_prime,
        "completely_prime": c.is_completely_prime,
        "prime_witness": c.prime_witness.map(|(a, b)| [json::labels(sys, a.members()), json::labels(sys, b.members())]),
        "complete_witness": c.complete_witness.map(|(a, b)| [sys.label(a), sys.label(b)]),
    })
}

fn primes_parts(lattice: &IdealLattice<'_>) -> (String, Value) {
    let sys = lattice.system();
    let check = lattice.check_assumption();
    let mut text = String::new();
    let mut rows = Vec::new();
    for (i, &ideal) in lattice.ideals().iter().enumerate() {
        let c = lattice.classify(ideal);
        let mut line = format!("  I{i} {}:", set_text(sys, ideal.members()));
        if !c.is_proper {
            line.push_str(" not proper");
        } else {
            line.push_str(if c.is_prime { " prime" } else { " not prime" });
            line.push_str(if c.is_completely_prime { ", completely prime" } else { ", not completely prime" });
            if let Some((a, b)) = c.prime_witness {
                let _ = write!(line, "; {} * {} lies in it", set_text(sys, a.members()), set_text(sys, b.members()));
            }
            if let Some((a, b)) = c.complete_witness {
                let _ = write!(line, "; {} (x) {} lies in it", sys.label(a), sys.label(b));
            }
        }
        text.push_str(&line);
        text.push('\n');
        let mut row = classification_value(sys, &c);
        row["id"] = json!(i);
        row["members"] = json!(json::labels(sys, ideal.members()));
        rows.push(row);
    }
    let head = format!(
        "primes: {}\nassumption (every prime is completely prime): {}\n",
        lattice.primes().len(),
        if check.holds { "holds" } else { "fails" }
    );
    let value = json!({ "assumption_holds": check.holds, "prime_count": lattice.primes().len(), "ideals": rows });
    (head + &text, value)
}

fn primes(lattice: &IdealLattice<'_>) -> Rendered {
    let (text, value) = primes_parts(lattice);
    Rendered { code: EXIT_OK, text, json: json::document("ttgeom.primes/1", value), dot: None }
}

fn radical(lattice: &IdealLattice<'_>, spec: &str) -> Result<Rendered, InputError> {
    let sys = lattice.system();
    let mut generators = BitSet::empty();
    for label in spec.split(',').map(str::trim).filter(|l| !l.is_empty()) {
        let o = sys.find(label).ok_or_else(|| InputError(format!("undeclared object {label}")))?;
        generators.insert(o.index());
    }
    let ideal = lattice.close(generators);
    let via_primes = lattice.radical(ideal, RadicalMethod::ViaPrimes);
    let via_roots = lattice.radical(ideal, RadicalMethod::ViaRoots);
    let agree = via_primes == via_roots;
    let text = format!(
        "generators: {}\nideal: {}\nvia primes: {}\nvia roots: {}\nagree: {agree}\n",
        set_text(sys, generators),
        set_text(sys, ideal.members()),
        set_text(sys, via_primes.members()),
        set_text(sys, via_roots.members()),
    );
    let value = json!({
        "generators": json::labels(sys, generators),
        "ideal": json::labels(sys, ideal.members()),
        "via_primes": json::labels(sys, via_primes.members()),
        "via_roots": json::labels(sys, via_roots.members()),
        "agree": agree,
    });
    Ok(Rendered { code: EXIT_OK, text, json: json::document("ttgeom.radical/1", value), dot: None })
}

fn zar_labels(sys: &TensorSystem, frame: &FiniteFrame) -> Vec<String> {
    frame.payload().expect("Zariski frames carry payloads").iter().map(|s| set_text(sys, *s)).collect()
}

fn zar_parts(lattice: &IdealLattice<'_>) -> Result<(String, Value, String), ttgeom_core::Error> {
    let sys = lattice.system();
    let frame = zar_frame_of(lattice)?;
    let witnesses = principal_witnesses(sys, &frame)?;
    let labels = zar_labels(sys, &frame);
    let covers = frame.covers();
    let pts = points(&frame);
    let laws = check_frame_laws(&frame);
    let mut text = format!("Zariski frame: {} elements\n", frame.len());
    for e in frame.elements() {
        let _ = writeln!(text, "  Z{e} = {}  (radical of {})", labels[e], sys.label(witnesses[e]));
    }
    text.push_str("covers:\n");
    for (a, b) in &covers {
        let _ = writeln!(text, "  Z{a} < Z{b}");
    }
    let _ = writeln!(text, "points: {}", pts.len());
    for (i, p) in pts.iter().enumerate() {
        let _ = writeln!(text, "  x{i}: prime element Z{}", p.prime_element);
    }
    let _ = writeln!(text, "frame laws: {}", if laws.ok() { "hold" } else { "violated" });
    let payload = frame.payload().expect("payload").to_vec();
    let mut value = json::frame_value(&frame, &|e| {
        json!({ "members": json::labels(sys, payload[e]), "witness": sys.label(witnesses[e]) })
    });
    value["points"] = json!(pts
        .iter()
        .map(|p| json!({ "prime_element": p.prime_element, "prime_ideal": p.prime_ideal }))
        .collect::<Vec<_>>());
    value["laws_hold"] = json!(laws.ok());
    Ok((text, value, dot::hasse("zar", &labels, &covers)))
}

fn zar(lattice: &IdealLattice<'_>) -> Rendered {
    match zar_parts(lattice) {
        Ok((text, value, dot)) => Rendered { code: EXIT_OK, text, json: json::document("ttgeom.zar/1", value), dot: Some(dot) },
        Err(e) => failure("zar", e),
    }
}

fn failure(what: &str, e: ttgeom_core::Error) -> Rendered {
    Rendered {
        code: EXIT_VERIFICATION,
        text: format!("{what}: FAILED ({e})\n"),
        json: json::document("ttgeom.failure/1", json!({ "command": what, "reason": e.to_string() })),
        dot: None,
    }
}

fn point_labels(sys: &TensorSystem, space: &FiniteSpace) -> Vec<String> {
    space
        .payload()
        .iter()
        .enumerate()
        .map(|(i, p)| match p {
            PointPayload::Prime(ideal) => format!("P{i} {}", set_text(sys, ideal.members())),
            _ => format!("P{i}"),
        })
        .collect()
}

fn space_parts(sys: &TensorSystem, space: &FiniteSpace, title: &str) -> (String, Value, String) {
    let labels = point_labels(sys, space);
    let mut text = format!("{title}: {} point(s)\n", space.len());
    for l in &labels {
        let _ = writeln!(text, "  {l}");
    }
    let _ = writeln!(text, "opens: {}", space.opens().len());
    for o in space.opens() {
        let _ = writeln!(text, "  {}", ids_text("P", *o));
    }
    text.push_str("specialization:\n");
    for (x, y) in space.specialization() {
        let _ = writeln!(text, "  P{x} ~> P{y}");
    }
    let _ = writeln!(text, "spectral: {}", is_spectral(space));
    (text, json::space_value(sys, space), dot::specialization(title, &labels, space))
}

fn space_command(lattice: &IdealLattice<'_>, dual: bool) -> Rendered {
    let sys = lattice.system();
    let space = match spc_of(lattice) {
        Ok(s) => s,
        Err(e) => return failure(if dual { "dual" } else { "spc" }, e),
    };
    let (space, title, schema) =
        if dual { (hochster_dual(&space), "dual", "ttgeom.dual/1") } else { (space, "spc", "ttgeom.spc/1") };
    let (text, value, dot) = space_parts(sys, &space, title);
    Rendered { code: EXIT_OK, text, json: json::document(schema, value), dot: Some(dot) }
}

fn support_parts(lattice: &IdealLattice<'_>) -> Result<(String, Value), ttgeom_core::Error> {
    let sys = lattice.system();
    let universal = universal_support_of(lattice)?;
    let nvy = nvy_support_of(lattice)?;
    let fs_report = check_frame_support(sys, &universal);
    let ts_report = check_top_support(sys, &nvy);
    let mut text = String::from("universal support (values in the Zariski frame):\n");
    let labels = zar_labels(sys, &universal.frame);
    for a in sys.objects() {
        let e = universal.d[a.index()];
        let _ = writeln!(text, "  d({}) = Z{e} {}", sys.label(a), labels[e]);
    }
    let _ = writeln!(text, "axioms: {}", if fs_report.ok() { "hold" } else { "violated" });
    text.push_str("space-valued support on the spectrum:\n");
    for a in sys.objects() {
        let _ = writeln!(text, "  sigma({}) = {}", sys.label(a), ids_text("P", nvy.sigma[a.index()]));
    }
    let _ = writeln!(text, "axioms: {}", if ts_report.ok() { "hold" } else { "violated" });
    let names = |r: &ttgeom_core::ValidationReport<ObjectId>| r.axioms_violated();
    let value = json!({
        "universal": {
            "frame": json::frame_value(&universal.frame, &|e| json!(json::labels(sys, universal.frame.payload().expect("payload")[e]))),
            "d": sys.objects().map(|a| json!([sys.label(a), universal.d[a.index()]])).collect::<Vec<_>>(),
            "violations": names(&fs_report),
        },
        "nvy": {
            "space": json::space_value(sys, &nvy.space),
            "sigma": sys.objects().map(|a| json!([sys.label(a), json::ids(nvy.sigma[a.index()])])).collect::<Vec<_>>(),
            "violations": names(&ts_report),
        },
    });
    Ok((text, value))
}

fn support(lattice: &IdealLattice<'_>) -> Rendered {
    match support_parts(lattice) {
        Ok((text, value)) => Rendered { code: EXIT_OK, text, json: json::document("ttgeom.support/1", value), dot: None },
        Err(e) => failure("support", e),
    }
}

fn suite_text(report: &SuiteReport) -> String {
    let mut text = String::new();
    for c in &report.checks {
        let _ = writeln!(text, "{}: {} ({} instances)", c.name, json::status_name(c.status), c.instances);
        for f in &c.failures {
            let _ = writeln!(text, "    {f}");
        }
    }
    for n in &report.notes {
        let _ = writeln!(text, "note: {n}");
    }
    let passed = report.checks.iter().filter(|c| c.status == CheckStatus::Passed).count();
    if report.assumption_holds {
        let _ = writeln!(text, "{passed}/{} checks passed", report.checks.len());
    } else {
        text.push_str("SKIPPED: the complete-primality assumption fails\n");
    }
    text
}

fn suite_code(cli: &Cli, report: &SuiteReport) -> i32 {
    if !report.passed() || (cli.strict && !report.assumption_holds) {
        EXIT_VERIFICATION
    } else {
        EXIT_OK
    }
}

fn verify_one(cli: &Cli, sys: &TensorSystem, supports: usize) -> Result<Rendered, InputError> {
    let report = run_suite(sys, SuiteConfig { supports, ..SuiteConfig::default() })
        .map_err(|e| InputError(format!("verification could not run: {e}")))?;
    Ok(Rendered {
        code: suite_code(cli, &report),
        text: suite_text(&report),
        json: json::document("ttgeom.verify/1", json::suite_value(&report)),
        dot: None,
    })
}

/// Object count and suite report of one generated system.
type SeedResult = Result<(usize, SuiteReport), String>;

fn campaign(cli: &Cli, seeds: Range<u64>, supports: usize) -> Result<Rendered, InputError> {
    let max = cli.input.max_objects as usize;
    let bound = cli.enum_bound as usize;
    let config = SuiteConfig { supports, ..SuiteConfig::default() };
    let all: Vec<u64> = seeds.clone().collect();
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(all.len()).max(1);
    let chunk = all.len().div_ceil(workers);
    let run_seed = |seed: u64| -> SeedResult {
        let sys = random_system(seed, max).map_err(|e| e.to_string())?;
        IdealLattice::with_bound(&sys, bound).map_err(|e| e.to_string())?;
        let report = run_suite(&sys, config).map_err(|e| e.to_string())?;
        Ok((sys.len(), report))
    };
    // chunks are joined in order, so results stay in seed order
    let results: Vec<(u64, SeedResult)> = std::thread::scope(|scope| {
        let handles: Vec<_> = all
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(|&s| (s, run_seed(s))).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("campaign worker panicked")).collect()
    });
    let mut text = String::new();
    let mut entries = Vec::new();
    let (mut passed, mut failed, mut skipped) = (0, 0, 0);
    let mut code = EXIT_OK;
    for (seed, result) in results {
        let (objects, report) = result.map_err(|e| InputError(format!("seed {seed}: {e}")))?;
        let status = if !report.passed() {
            failed += 1;
            let names: Vec<&str> =
                report.checks.iter().filter(|c| c.status == CheckStatus::Failed).map(|c| c.name).collect();
            format!("FAILED ({})", names.join(", "))
        } else if !report.assumption_holds {
            skipped += 1;
            "SKIPPED (assumption fails)".to_string()
        } else {
            passed += 1;
            "PASSED".to_string()
        };
        code = code.max(suite_code(cli, &report));
        let _ = writeln!(text, "seed {seed}: {objects} objects, {status}");
        let mut entry = json::suite_value(&report);
        entry["seed"] = json!(seed);
        entry["objects"] = json!(objects);
        entries.push(entry);
    }
    let _ = writeln!(text, "{} seeds: {passed} passed, {failed} failed, {skipped} skipped", entries.len());
    let value = json!({
        "seeds": [seeds.start, seeds.end],
        "max_objects": max,
        "passed": passed,
        "failed": failed,
        "skipped": skipped,
        "entries": entries,
    });
    Ok(Rendered { code, text, json: json::document("ttgeom.campaign/1", value), dot: None })
}

fn emit(cli: &Cli, lattice: &IdealLattice<'_>) -> Rendered {
    let sys = lattice.system();
    let gate = assumption_gate(cli, lattice, "zar");
    let (_, ideals_value, ideals_dot) = ideals_parts(lattice);
    let (_, primes_value) = primes_parts(lattice);
    let mut code = gate.as_ref().map_or(EXIT_OK, |g| g.code);
    let mut dots = vec![ideals_dot];
    let mut bundle = json!({
        "system": json::system_value(sys),
        "validation": validate(sys).json,
        "ideals": ideals_value,
        "primes": primes_value,
    });
    match (&gate, zar_parts(lattice), support_parts(lattice)) {
        (None, Ok((_, zar_value, zar_dot)), Ok((_, support_value))) => {
            bundle["zar"] = zar_value;
            bundle["support"] = support_value;
            dots.push(zar_dot);
        }
        (Some(g), _, _) => {
            bundle["zar"] = g.json.clone();
            bundle["support"] = g.json.clone();
        }
        (None, Err(e), _) | (None, _, Err(e)) => {
            code = EXIT_VERIFICATION;
            bundle["zar"] = json!({ "status": "FAILED", "reason": e.to_string() });
        }
    }
    for (name, dual) in [("spc", false), ("dual", true)] {
        if let Ok(space) = spc_of(lattice) {
            let space = if dual { hochster_dual(&space) } else { space };
            let (_, value, dot) = space_parts(sys, &space, name);
            bundle[name] = value;
            dots.push(dot);
        }
    }
    Rendered {
        code,
        text: format::write_system(sys),
        json: json::document(json::BUNDLE_SCHEMA, bundle),
        dot: Some(dots.concat()),
    }
}
