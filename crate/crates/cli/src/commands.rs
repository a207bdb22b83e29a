use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;
use std::process::ExitCode;

use gbo_core::{
    make_function, optimize_benchmark, Benchmark, EvaluationMode, FunctionId, GboConfig, OutOfBoundsPolicy, RadiusRule,
    SplitRule,
};
use gbo_harness::{emit, run_experiment, stability_report, ExperimentSpec, Format, ResultTable, STABILITY_FUNCTIONS};

use crate::{CompareArgs, FormatArg, GboArgs, ModeArg, OobArg, RadiusArg, RunArgs, SplitArg, StabilityArgs};

pub enum Outcome {
    Success,
    Error,
    Budget,
    PartialFailure,
}

impl Outcome {
    pub fn code(self) -> ExitCode {
        ExitCode::from(match self {
            Outcome::Success => 0,
            Outcome::Error => 1,
            Outcome::Budget => 2,
            Outcome::PartialFailure => 3,
        })
    }

    fn of(table: &ResultTable) -> Self {
        if table.failures() > 0 {
            Outcome::PartialFailure
        } else if table.budget_hits() > 0 {
            Outcome::Budget
        } else {
            Outcome::Success
        }
    }
}

type Result<T> = std::result::Result<T, Box<dyn std::error::Error>>;

fn config_from(args: &GboArgs) -> GboConfig {
    GboConfig {
        mode: match args.mode {
            ModeArg::Basic => EvaluationMode::Basic,
            ModeArg::Prime => EvaluationMode::PrimeConcentric,
        },
        split: match args.split {
            SplitArg::Own => SplitRule::OwnShell,
            SplitArg::Every => SplitRule::EveryShell,
        },
        radius_rule: match args.radius {
            RadiusArg::Euclidean => RadiusRule::Euclidean,
            RadiusArg::Root => RadiusRule::DimensionRoot,
        },
        oob_policy: match args.oob {
            OobArg::Clamp => OutOfBoundsPolicy::Clamp,
            OobArg::Raw => OutOfBoundsPolicy::EvaluateRaw,
        },
        max_evaluations: args.max_evaluations,
        max_rounds: args.max_rounds,
        noise_seed: 0,
    }
}

fn format_from(f: FormatArg) -> Format {
    match f {
        FormatArg::Csv => Format::Csv,
        FormatArg::Markdown => Format::Markdown,
        FormatArg::Json => Format::Json,
    }
}

fn write_or_print(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()).into()),
        None => {
            let mut stdout = std::io::stdout().lock();
            let written = stdout.write_all(text.as_bytes()).and_then(|_| {
                if text.ends_with('\n') {
                    Ok(())
                } else {
                    stdout.write_all(b"\n")
                }
            });
            match written {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
                _ => Ok(()),
            }
        }
    }
}

fn point(p: &[f64]) -> String {
    let parts: Vec<String> = p.iter().map(|v| format!("{v:?}")).collect();
    format!("({})", parts.join(", "))
}

pub fn list_functions() -> Result<Outcome> {
    let mut text = format!(
        "{:<4} {:<36} {:>9} {:>10} {:>8}\n",
        "id", "name", "dimension", "box", "optimum"
    );
    for id in FunctionId::ALL {
        let dim = match id.dimension_rule() {
            gbo_core::DimensionRule::Fixed(d) => d.to_string(),
            gbo_core::DimensionRule::Variable { .. } => format!("{}+", id.default_dimension()),
        };
        let stochastic = if id.is_deterministic() { "" } else { " (noisy)" };
        let _ = writeln!(
            text,
            "{:<4} {:<36} {:>9} {:>10} {:>8}{stochastic}",
            id.to_string(),
            id.name(),
            dim,
            format!("±{}", id.halfwidth()),
            id.optimum_value()
        );
    }
    write_or_print(&text, None)?;
    Ok(Outcome::Success)
}

pub fn run(args: RunArgs) -> Result<Outcome> {
    let id = crate::parse_function(&args.function)?;
    let f: Benchmark = make_function(id, args.dim)?;
    let config = GboConfig {
        noise_seed: args.seed,
        ..config_from(&args.gbo)
    };
    let rec = optimize_benchmark(&f, &config)?;
    let error = rec.error(f.optimum_value());
    let mut text = String::new();
    let _ = writeln!(text, "function     {id} ({}, d={})", id.name(), f.dimension());
    let _ = writeln!(text, "best value   {:?}", rec.best_value);
    let _ = writeln!(text, "best point   {}", point(&rec.best_point));
    let _ = writeln!(text, "error        {error:?}");
    let _ = writeln!(text, "evaluations  {}", rec.evaluations);
    let _ = writeln!(text, "rounds       {}", rec.rounds);
    let _ = writeln!(text, "time         {:.6} s", rec.wall_time);
    let _ = writeln!(text, "termination  {}", rec.termination.as_str());
    write_or_print(&text, None)?;
    if let Some(path) = &args.out {
        write_or_print(&serde_json::to_string_pretty(&rec)?, Some(path))?;
    }
    Ok(if rec.termination.is_budget_exhausted() {
        Outcome::Budget
    } else {
        Outcome::Success
    })
}

pub fn compare(args: CompareArgs) -> Result<Outcome> {
    let mut spec = match &args.config {
        Some(path) => ExperimentSpec::from_json_file(path)?,
        None => {
            let functions = args
                .functions
                .iter()
                .map(|s| crate::parse_function(s))
                .collect::<gbo_core::Result<Vec<_>>>()?;
            ExperimentSpec {
                seed_base: args.seed,
                gbo: config_from(&args.gbo),
                output: args.journal.clone(),
                ..ExperimentSpec::new(functions, args.algorithms.clone(), args.repeats as usize)
            }
        }
    };
    if args.timing {
        spec.parallel = false;
    }
    let table = run_experiment(&spec)?;
    write_or_print(&emit(&table, format_from(args.format))?, args.out.as_deref())?;
    report_failures(&table);
    Ok(Outcome::of(&table))
}

fn report_failures(table: &ResultTable) {
    for r in table.rows.iter().filter(|r| !r.status.succeeded()) {
        eprintln!(
            "gbo: {}/{} repeat {} failed: {}",
            r.function,
            r.algorithm,
            r.repeat,
            r.message.as_deref().unwrap_or("unknown error")
        );
    }
}

pub fn stability(args: StabilityArgs) -> Result<Outcome> {
    let spec = ExperimentSpec {
        seed_base: args.seed,
        gbo: config_from(&args.gbo),
        parallel: !args.timing,
        ..ExperimentSpec::new(
            STABILITY_FUNCTIONS.to_vec(),
            args.algorithms.clone(),
            args.repeats as usize,
        )
    };
    let table = run_experiment(&spec)?;
    report_failures(&table);
    let report = stability_report(&table, &STABILITY_FUNCTIONS)?;
    write_or_print(&report.to_csv()?, args.out.as_deref())?;
    let summary = report.summary_csv()?;
    if args.out.is_some() {
        print!("{summary}");
    } else {
        eprint!("{summary}");
    }
    Ok(Outcome::of(&table))
}
