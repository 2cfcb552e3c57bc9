//! The `latrect` command line.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 verification mismatch,
//! 4 failure of an external source (network, cache).

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use latrect_core::bijections::{verify_bijection, MAP_NAMES, MAX_VERIFY_ORDER};
use latrect_core::counting::{count_family, Method};
use latrect_core::formulas::SequenceId;
use latrect_core::oeis::IDENTIFIED;
use latrect_core::{bounding_box, build, parse_shape_spec, Family, ShapeSpec};

use crate::fetch::{FetchError, Fetcher, SourcePolicy};
use crate::render;
use crate::report::{CountRecord, ExitCode, Outcome, RunReport};

/// Largest order the brute-force counter is allowed to run on.
pub const NAIVE_MAX_ORDER: u32 = 40;
/// Largest bounding box `render` will draw.
const RENDER_MAX_AREA: i64 = 4_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "latrect",
    version,
    about = "Count lattice rectangles in Aztec diamonds, square biscuits and staircases"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Leave wall-clock timings out of the JSON report.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count the rectangles inside one shape.
    Count {
        /// Shape, e.g. aztec:5, staircase:3:ul, biscuit-half:4:larger.
        spec: String,
        #[arg(long, value_enum, default_value = "fast")]
        method: MethodArg,
    },
    /// Check brute force, fast counter and closed forms against each other.
    Verify {
        #[arg(long)]
        max_n: u32,
        /// Comma separated subset of s, a_half, b_half, a, b.
        #[arg(long, value_delimiter = ',')]
        families: Option<Vec<String>>,
    },
    /// Exhaustively check the bijections.
    Bijections {
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        /// One of quadruple, type_l, type_r, type_c, biscuit_expand.
        #[arg(long)]
        map: Option<String>,
    },
    /// Compare the closed forms with OEIS terms.
    Oeis {
        /// Comma separated OEIS ids (default: all four).
        #[arg(long, value_delimiter = ',')]
        ids: Option<Vec<String>>,
        #[arg(long, default_value_t = 20)]
        terms: u64,
        #[arg(long, value_enum, default_value = "fixture")]
        source: SourceArg,
    },
    /// Draw a shape.
    Render {
        spec: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: FormatArg,
        /// Overlay the vertical symmetry axis (svg only).
        #[arg(long)]
        axis: bool,
        /// Write the picture here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Naive,
    Fast,
    Formula,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SourceArg {
    Fixture,
    Cache,
    Network,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Ascii,
    Svg,
}

/// Accumulates output for one invocation.
struct Session {
    report: RunReport,
    text: String,
    errors: Vec<String>,
    code: ExitCode,
}

impl Session {
    fn fail(&mut self, code: ExitCode, message: impl Into<String>) {
        self.errors.push(message.into());
        self.code = self.code.max(code);
    }

    fn line(&mut self, line: impl AsRef<str>) {
        self.text.push_str(line.as_ref());
        self.text.push('\n');
    }
}

/// Run the command line. `args` includes the program name.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                ExitCode::Usage
            } else {
                ExitCode::Success
            };
            let rendered = e.render().to_string();
            let _ = if code == ExitCode::Success {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code as i32;
        }
    };

    let mut session = Session {
        report: RunReport {
            command: args.iter().skip(1).cloned().collect(),
            ..RunReport::default()
        },
        text: String::new(),
        errors: Vec::new(),
        code: ExitCode::Success,
    };
    let started = Instant::now();
    match cli.command {
        Command::Count { spec, method } => cmd_count(&mut session, &spec, method),
        Command::Verify { max_n, families } => cmd_verify(&mut session, max_n, families),
        Command::Bijections { max_n, map } => cmd_bijections(&mut session, max_n, map),
        Command::Oeis { ids, terms, source } => cmd_oeis(&mut session, ids, terms, source),
        Command::Render {
            spec,
            format,
            axis,
            out,
        } => cmd_render(&mut session, &spec, format, axis, out),
    }
    if !cli.no_timing {
        session.report.timing_ms = Some(started.elapsed().as_secs_f64() * 1000.0);
    }
    session.report.exit_status = session.code as i32;

    let stdout = if cli.json {
        session.report.to_json()
    } else {
        session.text
    };
    let _ = out.write_all(stdout.as_bytes());
    for e in &session.errors {
        let _ = writeln!(err, "error: {e}");
    }
    session.code as i32
}

fn parse_spec(session: &mut Session, text: &str) -> Option<ShapeSpec> {
    match parse_shape_spec(text) {
        Ok(spec) => {
            session.report.shapes.push(spec.to_string());
            Some(spec)
        }
        Err(e) => {
            session.fail(ExitCode::Usage, format!("cannot parse shape '{text}' {e}"));
            None
        }
    }
}

fn cmd_count(session: &mut Session, text: &str, method: MethodArg) {
    let Some(spec) = parse_spec(session, text) else {
        return;
    };
    let methods: Vec<Method> = match method {
        MethodArg::Naive => vec![Method::Naive],
        MethodArg::Fast => vec![Method::Fast],
        MethodArg::Formula => vec![Method::Formula],
        MethodArg::All => Method::ALL.to_vec(),
    };
    session.report.methods = methods.iter().map(|m| m.name().to_string()).collect();
    if methods.contains(&Method::Naive) && spec.order() > NAIVE_MAX_ORDER {
        session.fail(
            ExitCode::Usage,
            format!("the naive method is limited to order <= {NAIVE_MAX_ORDER}"),
        );
        return;
    }

    let mut values = Vec::new();
    for &m in &methods {
        match count_family(&spec, m) {
            Ok(v) => values.push((m, v.get())),
            Err(e) => {
                session.fail(
                    ExitCode::Mismatch,
                    format!("{} count of {spec} failed: {e}", m.name()),
                );
                return;
            }
        }
    }
    let first = values[0].1;
    if values.iter().any(|&(_, v)| v != first) {
        let listing = values
            .iter()
            .map(|(m, v)| format!("{}={v}", m.name()))
            .collect::<Vec<_>>()
            .join(" ");
        session
            .report
            .verification
            .push(Outcome::new("agreement", false, Some(listing.clone())));
        session.fail(
            ExitCode::Mismatch,
            format!("methods disagree for {spec}: {listing}"),
        );
        return;
    }
    for &(m, v) in &values {
        session.report.counts.push(CountRecord {
            method: m.name().to_string(),
            shape: spec.to_string(),
            value: v,
        });
    }
    if values.len() > 1 {
        session
            .report
            .verification
            .push(Outcome::new("agreement", true, None));
        let names: Vec<_> = values.iter().map(|(m, _)| m.name()).collect();
        session.line(format!("{spec} {first} ({} agree)", names.join(", ")));
    } else {
        session.line(format!("{spec} {first}"));
    }
}

fn family_for(id: SequenceId) -> Family {
    match id {
        SequenceId::S => Family::Staircase,
        SequenceId::AHalf => Family::AztecHalf,
        SequenceId::BHalf => Family::BiscuitHalf,
        SequenceId::A => Family::Aztec,
        SequenceId::B => Family::Biscuit,
    }
}

fn parse_family(token: &str) -> Option<SequenceId> {
    match token.trim().to_ascii_lowercase().as_str() {
        "s" => Some(SequenceId::S),
        "a_half" | "ah" => Some(SequenceId::AHalf),
        "b_half" | "bh" => Some(SequenceId::BHalf),
        "a" => Some(SequenceId::A),
        "b" => Some(SequenceId::B),
        _ => None,
    }
}

/// First shape of `family` with orders `1..=max_n` on which the three
/// methods disagree, with the values found.
fn sweep_family(family: Family, max_n: u32) -> Result<usize, String> {
    let mut checked = 0;
    for n in 1..=max_n {
        for spec in ShapeSpec::variants(family, n) {
            let values: Result<Vec<_>, _> = Method::ALL
                .iter()
                .map(|&m| count_family(&spec, m))
                .collect();
            let values = values.map_err(|e| format!("{spec}: {e}"))?;
            if values.iter().any(|v| *v != values[0]) {
                return Err(format!(
                    "{spec}: naive={} fast={} formula={}",
                    values[0], values[1], values[2]
                ));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn cmd_verify(session: &mut Session, max_n: u32, families: Option<Vec<String>>) {
    if !(1..=NAIVE_MAX_ORDER).contains(&max_n) {
        session.fail(
            ExitCode::Usage,
            format!("--max-n must be between 1 and {NAIVE_MAX_ORDER}, got {max_n}"),
        );
        return;
    }
    let ids: Vec<SequenceId> = match families {
        None => SequenceId::ALL.to_vec(),
        Some(tokens) => {
            let mut ids = Vec::new();
            for t in &tokens {
                match parse_family(t) {
                    Some(id) if !ids.contains(&id) => ids.push(id),
                    Some(_) => {}
                    None => {
                        session.fail(
                            ExitCode::Usage,
                            format!("unknown family '{t}' (expected s, a_half, b_half, a or b)"),
                        );
                        return;
                    }
                }
            }
            ids
        }
    };
    session.report.methods = Method::ALL.iter().map(|m| m.name().to_string()).collect();

    // one thread per family; results are collected in request order
    let results: Vec<Result<usize, String>> = std::thread::scope(|scope| {
        let handles: Vec<_> = ids
            .iter()
            .map(|&id| scope.spawn(move || sweep_family(family_for(id), max_n)))
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .unwrap_or_else(|_| Err("sweep panicked".to_string()))
            })
            .collect()
    });

    for (id, result) in ids.iter().zip(results) {
        let name = format!("{id} n=1..{max_n}");
        match result {
            Ok(checked) => {
                session.line(format!(
                    "{:<7} n=1..{max_n:<3} {checked:>4} shapes  ok",
                    id.name()
                ));
                session.report.verification.push(Outcome::new(
                    name,
                    true,
                    Some(format!("{checked} shapes")),
                ));
            }
            Err(detail) => {
                session.line(format!(
                    "{:<7} n=1..{max_n:<3} MISMATCH {detail}",
                    id.name()
                ));
                session
                    .report
                    .verification
                    .push(Outcome::new(name, false, Some(detail.clone())));
                session.fail(
                    ExitCode::Mismatch,
                    format!("verification failed for {id}: {detail}"),
                );
            }
        }
    }
}

fn cmd_bijections(session: &mut Session, max_n: u32, map: Option<String>) {
    if max_n == 0 || u64::from(max_n) > MAX_VERIFY_ORDER {
        session.fail(
            ExitCode::Usage,
            format!("--max-n must be between 1 and {MAX_VERIFY_ORDER}, got {max_n}"),
        );
        return;
    }
    let names: Vec<&str> = match &map {
        None => MAP_NAMES.to_vec(),
        Some(name) if MAP_NAMES.contains(&name.as_str()) => vec![name.as_str()],
        Some(name) => {
            session.fail(
                ExitCode::Usage,
                format!(
                    "unknown map '{name}' (expected one of {})",
                    MAP_NAMES.join(", ")
                ),
            );
            return;
        }
    };
    for name in names {
        let mut sizes = Vec::new();
        let mut failure = None;
        for n in 1..=max_n {
            let report = match verify_bijection(name, n) {
                Ok(r) => r,
                Err(e) => {
                    session.fail(ExitCode::Usage, e.to_string());
                    return;
                }
            };
            let detail = format!("domain {} image {}", report.domain_size, report.image_size);
            session.report.verification.push(Outcome::new(
                format!("{name} n={n}"),
                report.verified(),
                Some(detail),
            ));
            sizes.push(report.domain_size.to_string());
            if !report.verified() && failure.is_none() {
                let example = report
                    .counterexample
                    .map(|c| match c.output {
                        Some(o) => format!("{}: {} -> {o}", c.reason, c.input),
                        None => format!("{}: {}", c.reason, c.input),
                    })
                    .unwrap_or_else(|| "set sizes differ".to_string());
                failure = Some(format!("{name} fails at n={n}: {example}"));
            }
        }
        match failure {
            None => session.line(format!(
                "{name:<15} n=1..{max_n:<3} verified  domain sizes {}",
                sizes.join(",")
            )),
            Some(msg) => {
                session.line(format!("{name:<15} n=1..{max_n:<3} FAILED"));
                session.fail(ExitCode::Mismatch, msg);
            }
        }
    }
}

fn cmd_oeis(session: &mut Session, ids: Option<Vec<String>>, terms: u64, source: SourceArg) {
    if terms == 0 {
        session.fail(ExitCode::Usage, "--terms must be at least 1");
        return;
    }
    let requested: Vec<String> = match ids {
        None => IDENTIFIED.iter().map(|(id, _)| id.to_string()).collect(),
        Some(ids) => ids
            .into_iter()
            .map(|s| s.trim().to_ascii_uppercase())
            .collect(),
    };
    let mut pairs = Vec::new();
    for id in &requested {
        match IDENTIFIED.iter().find(|(k, _)| k == id) {
            Some(&(k, seq)) => pairs.push((k, seq)),
            None => {
                session.fail(
                    ExitCode::Usage,
                    format!("{id} is not one of the identified sequences (A004320, A002417, A330805, A213840)"),
                );
                return;
            }
        }
    }
    let policy = match source {
        SourceArg::Fixture => SourcePolicy::FixtureOnly,
        SourceArg::Cache => SourcePolicy::CacheOnly,
        SourceArg::Network => SourcePolicy::NetworkThenCache,
    };
    let fetcher = Fetcher::from_env();
    for (id, seq) in pairs {
        match fetcher.check(id, seq, terms, policy) {
            Ok(report) => {
                let verdict = if report.passed() { "ok" } else { "MISMATCH" };
                let summary = format!("{}/{terms} from {}", report.matches, report.source.name());
                session.line(format!("{id}  {:<6}  {summary}  {verdict}", seq.name()));
                let detail = match &report.first_mismatch {
                    None => summary,
                    Some(m) => {
                        let msg = format!(
                            "{id} n={}: OEIS has {}, {} gives {}",
                            m.n, m.expected, seq, m.got
                        );
                        session.fail(ExitCode::Mismatch, msg.clone());
                        msg
                    }
                };
                session.report.verification.push(Outcome::new(
                    format!("{id} {seq}"),
                    report.passed(),
                    Some(detail),
                ));
            }
            Err(e) => {
                let code = match &e {
                    FetchError::Sequence(latrect_core::Error::InsufficientTerms { .. })
                    | FetchError::Sequence(latrect_core::Error::MalformedLine { .. })
                    | FetchError::Sequence(latrect_core::Error::NonMonotonicIndex { .. }) => {
                        ExitCode::Mismatch
                    }
                    FetchError::Sequence(_) => ExitCode::Usage,
                    _ => ExitCode::External,
                };
                session.line(format!("{id}  {:<6}  unavailable", seq.name()));
                session.report.verification.push(Outcome::new(
                    format!("{id} {seq}"),
                    false,
                    Some(e.to_string()),
                ));
                session.fail(code, e.to_string());
            }
        }
    }
}

fn cmd_render(
    session: &mut Session,
    text: &str,
    format: FormatArg,
    axis: bool,
    out: Option<PathBuf>,
) {
    let Some(spec) = parse_spec(session, text) else {
        return;
    };
    let region = match build(&spec) {
        Ok(r) => r,
        Err(e) => {
            session.fail(ExitCode::Usage, e.to_string());
            return;
        }
    };
    if let Ok(bb) = bounding_box(&region) {
        if bb.width().saturating_mul(bb.height()) > RENDER_MAX_AREA {
            session.fail(ExitCode::Usage, format!("{spec} is too large to render"));
            return;
        }
    }
    let overlay = if axis {
        if format != FormatArg::Svg {
            session.fail(ExitCode::Usage, "--axis needs --format svg");
            return;
        }
        match spec.vertical_axis() {
            Some(a) => Some(a),
            None => {
                session.fail(
                    ExitCode::Usage,
                    format!("{spec} has no vertical symmetry axis"),
                );
                return;
            }
        }
    } else {
        None
    };
    let picture = match format {
        FormatArg::Ascii => render::ascii(&region),
        FormatArg::Svg => render::svg(&region, overlay),
    };
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, &picture) {
                session.fail(
                    ExitCode::Usage,
                    format!("cannot write {}: {e}", path.display()),
                );
            }
        }
        None => {
            session.text.push_str(&picture);
            session.report.output = Some(picture);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("latrect").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn count_all_agrees() {
        let (code, out, _) = run_cli(&["count", "aztec:1", "--method", "all"]);
        assert_eq!(code, 0);
        assert_eq!(out, "aztec:1 9 (naive, fast, formula agree)\n");
        let (code, out, _) = run_cli(&["count", "biscuit:2", "--method", "all"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("biscuit:2 11 "));
    }

    #[test]
    fn count_rejects_bad_input() {
        let (code, out, err) = run_cli(&["count", "staircase:0"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("position 10"), "{err}");
        let (code, _, _) = run_cli(&["count", "aztec:41", "--method", "naive"]);
        assert_eq!(code, 2);
        let (code, out, _) = run_cli(&["count", "aztec:2000", "--method", "formula"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("aztec:2000 "));
    }

    #[test]
    fn verify_ranges() {
        let (code, out, _) = run_cli(&["verify", "--max-n", "6"]);
        assert_eq!(code, 0, "{out}");
        assert_eq!(out.lines().count(), 5);
        let (code, _, _) = run_cli(&["verify", "--max-n", "0"]);
        assert_eq!(code, 2);
        let (code, out, _) = run_cli(&["verify", "--max-n", "12", "--families", "s,a"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 2);
        let (code, _, _) = run_cli(&["verify", "--max-n", "3", "--families", "q"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn bijection_runs() {
        let (code, out, _) = run_cli(&["bijections", "--map", "type_l", "--max-n", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("verified  domain sizes 0,1"), "{out}");
        let (code, _, err) = run_cli(&["bijections", "--map", "nosuch"]);
        assert_eq!(code, 2);
        assert!(err.contains("unknown map"));
        let (code, _, _) = run_cli(&["bijections", "--max-n", "21"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn oeis_fixture_runs() {
        let (code, out, _) = run_cli(&["oeis", "--source", "fixture", "--terms", "20"]);
        assert_eq!(code, 0);
        assert_eq!(out.matches("20/20 from fixture  ok").count(), 4, "{out}");
        let (code, out, _) = run_cli(&["oeis", "--ids", "A004320", "--terms", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("1/1"));
        let (code, _, _) = run_cli(&["oeis", "--ids", "A999999"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_cli(&["oeis", "--ids", "A004320", "--terms", "500"]);
        assert_eq!(code, 3);
    }

    #[test]
    fn render_outputs() {
        let (code, out, _) = run_cli(&["render", "aztec:1", "--format", "ascii"]);
        assert_eq!((code, out.as_str()), (0, "##\n##\n"));
        let (code, out, _) = run_cli(&["render", "biscuit:3", "--format", "svg", "--axis"]);
        assert_eq!(code, 0);
        assert!(out.contains("<line"));
        let (code, _, _) = run_cli(&["render", "staircase:3", "--format", "svg", "--axis"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_cli(&["render", "aztec:2", "--axis"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn json_reports_are_stable() {
        let args = [
            "--json",
            "--no-timing",
            "count",
            "aztec:2",
            "--method",
            "all",
        ];
        let (code, first, _) = run_cli(&args);
        assert_eq!(code, 0);
        let (_, second, _) = run_cli(&args);
        assert_eq!(first, second);
        let v: serde_json::Value = serde_json::from_str(&first).unwrap();
        assert_eq!(v["exit_status"], 0);
        assert_eq!(v["counts"].as_array().unwrap().len(), 3);
        assert!(v.get("timing_ms").is_none());

        let (_, timed, _) = run_cli(&["--json", "count", "aztec:2"]);
        let v: serde_json::Value = serde_json::from_str(&timed).unwrap();
        assert!(v["timing_ms"].is_number());
    }

    #[test]
    fn help_and_unknown_commands() {
        let (code, out, _) = run_cli(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("render"));
        let (code, _, _) = run_cli(&["frobnicate"]);
        assert_eq!(code, 2);
    }
}
