use std::fs;
use std::path::Path;

use sepcode::{
    averaging_attack, build_length3, coalition_feasible_set, correlate, embed, is_fpc, is_sc,
    is_ssc, is_ssc_naive, lacc_identify, make_context, one_hot_compose, optimal_s, predicted_size,
    ssc_trace, threshold, Coalition, Code, FeasibleSet, Outcome,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{
    Algorithm, ComposeArgs, ConstructArgs, Property, SimulateArgs, TraceArgs, VerifyArgs,
};
use crate::view::{TraceView, VerdictView};
use crate::Failure;

/// Process exit status carried alongside a successful run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    DoesNotHold,
    Overflow,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::DoesNotHold => 1,
            Status::Overflow => 2,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub version: &'static str,
    pub inputs: Value,
    pub result: Value,
}

pub struct Run {
    pub report: RunReport,
    pub status: Status,
}

fn run<I: Serialize, R: Serialize>(
    command: &'static str,
    inputs: &I,
    result: R,
    status: Status,
) -> Run {
    Run {
        report: RunReport {
            command,
            version: env!("CARGO_PKG_VERSION"),
            inputs: serde_json::to_value(inputs).expect("arguments serialize"),
            result: serde_json::to_value(result).expect("results serialize"),
        },
        status,
    }
}

fn read_code(path: &Path) -> Result<Code, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    Code::parse_text(&text).map_err(|e| Failure::parse(path, e))
}

fn write_code(path: &Path, code: &Code) -> Result<(), Failure> {
    fs::write(path, code.to_text()).map_err(|e| Failure::io(path, e))
}

fn shape(code: &Code) -> Value {
    json!({ "n": code.length(), "M": code.size(), "q": code.q() })
}

pub fn construct(args: &ConstructArgs) -> Result<Run, Failure> {
    let (s, plan) = match args.s {
        Some(s) => (s, optimal_s(args.q).ok()),
        None => {
            let plan = optimal_s(args.q)?;
            (plan.s, Some(plan))
        }
    };
    let code = build_length3(args.q, s)?;
    write_code(&args.out, &code)?;
    let result = json!({
        "q": args.q,
        "s": s,
        "m": args.q % 8,
        "w": plan.map(|p| p.w),
        "M": code.size(),
        "predicted_M": predicted_size(args.q, s)?,
        "optimal": plan.is_some_and(|p| p.s == s),
        "code": shape(&code),
    });
    Ok(run("construct", args, result, Status::Ok))
}

pub fn verify(args: &VerifyArgs) -> Result<Run, Failure> {
    if args.oracle && args.property != Property::Ssc {
        return Err(Failure::usage("--oracle applies only to --property ssc"));
    }
    let code = read_code(&args.code)?;
    let verdict = match (args.property, args.oracle) {
        (Property::Fpc, _) => is_fpc(&code, args.t)?,
        (Property::Sc, _) => is_sc(&code, args.t)?,
        (Property::Ssc, false) => is_ssc(&code, args.t)?,
        (Property::Ssc, true) => is_ssc_naive(&code, args.t)?,
    };
    let status = if verdict.holds() {
        Status::Ok
    } else {
        Status::DoesNotHold
    };
    let result = json!({
        "code": shape(&code),
        "verdict": VerdictView::from(&verdict),
    });
    Ok(run("verify", args, result, status))
}

fn parse_r(pattern: &str) -> Result<FeasibleSet, Failure> {
    FeasibleSet::from_pattern(pattern).map_err(|e| Failure::parse(Path::new("--r"), e))
}

fn status_of(outcome: &Outcome) -> Status {
    match outcome {
        Outcome::Identified { .. } => Status::Ok,
        Outcome::Overflow { .. } => Status::Overflow,
    }
}

pub fn trace(args: &TraceArgs) -> Result<Run, Failure> {
    let code = read_code(&args.code)?;
    let r = parse_r(&args.r)?;
    let report = match args.algorithm {
        Algorithm::Fpc => lacc_identify(&code, &r, args.t)?,
        Algorithm::Ssc => ssc_trace(&code, &r, args.t)?,
    };
    let status = status_of(&report.outcome);
    Ok(run("trace", args, TraceView::from(&report), status))
}

pub fn simulate(args: &SimulateArgs) -> Result<Run, Failure> {
    let code = read_code(&args.code)?;
    let members = args
        .colluders
        .iter()
        .map(|&i| {
            if (1..=code.size()).contains(&i) {
                Ok(i - 1)
            } else {
                Err(Failure::usage(format!(
                    "colluder {i} outside 1..={}",
                    code.size()
                )))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let coalition = Coalition::new(&code, members)?;
    let dim = args.dim.unwrap_or(2 * code.length());
    let ctx = make_context(dim, code.length(), args.alpha, args.seed)?;
    let copies = coalition
        .members()
        .iter()
        .map(|&i| embed(&ctx, &code.words()[i]))
        .collect::<Result<Vec<_>, _>>()?;
    let y = averaging_attack(&copies)?;
    let stats = correlate(&ctx, &y)?;
    let r = threshold(&stats, args.eps)?;
    let expected = coalition_feasible_set(&code, &coalition)?;

    let mut status = Status::Ok;
    let mut result = json!({
        "colluders": coalition.members().iter().map(|i| i + 1).collect::<Vec<_>>(),
        "dim": dim,
        "statistics": stats.values(),
        "r": r.to_pattern()?,
        "matches_coalition_descendant": r == expected,
    });
    if args.then_trace {
        let report = ssc_trace(&code, &r, args.t)?;
        let matched = report.identified() == Some(coalition.members());
        status = match status_of(&report.outcome) {
            Status::Ok if !matched => Status::DoesNotHold,
            other => other,
        };
        result["trace"] = serde_json::to_value(TraceView::from(&report)).expect("trace serializes");
        result["match"] = Value::Bool(matched);
    }
    Ok(run("simulate", args, result, status))
}

pub fn compose(args: &ComposeArgs) -> Result<Run, Failure> {
    let code = read_code(&args.code)?;
    let binary = one_hot_compose(&code);
    write_code(&args.out, &binary)?;
    let result = json!({ "input": shape(&code), "output": shape(&binary) });
    Ok(run("compose", args, result, Status::Ok))
}
