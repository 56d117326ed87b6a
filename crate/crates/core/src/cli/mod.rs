//! The `scv` command line. Exit codes: 0 pass, 1 check failed, 2 usage or
//! configuration error.

pub mod format;
pub mod input;
pub mod reproduce;
pub mod sweep;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::instances::{named_family, FamilyParams, Instance, InstanceKind, FAMILY_IDS};
use crate::mechanism::{by_name, Mechanism, Outcome, MECHANISM_NAMES};
use crate::model::{
    committee_social_cost, opt_committee, ratio, truthful_actions, Committee, LocationProfile,
};
use crate::verify::search::{distortion_search, float_json, SearchConfig};
use crate::verify::sp::{check_strategy_proof, SpConfig};
use crate::verify::suite::SuiteConfig;

use format::{fmt_g, fmt_point, join_usize};
use input::{load_instance, parse_actions, parse_f64_list, parse_positions, parse_usize_list, simplex_r};
use reproduce::{run_claim, ClaimOutcome, ClaimParams, CLAIMS};
use sweep::{run_sweep, SweepPoint, CSV_HEADER};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Model(#[from] crate::error::Error),
}

#[derive(Parser, Debug)]
#[command(
    name = "scv",
    version,
    about = "Distortion and strategy-proofness checks for two-winner elections with single-candidate votes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct InstanceArgs {
    /// line3, line4, simplex, multi4, or a JSON instance file
    #[arg(long, default_value = "line3")]
    pub instance: String,
    /// sigma for line4, or the simplex sigma (converted to r)
    #[arg(long)]
    pub sigma: Option<f64>,
    /// far-point coordinate for simplex instances
    #[arg(long)]
    pub r: Option<f64>,
    /// number of candidates for simplex instances
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct SuiteArgs {
    /// grid step for one-dimensional test positions
    #[arg(long, default_value_t = 0.05)]
    pub grid_step: f64,
    /// alpha step for the simplex tie points
    #[arg(long, default_value_t = 0.1)]
    pub alpha_step: f64,
    /// uniform random test positions
    #[arg(long, default_value_t = 200)]
    pub random_points: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

impl SuiteArgs {
    fn config(&self) -> SuiteConfig {
        SuiteConfig {
            grid_step: self.grid_step,
            grid_range: None,
            alpha_step: self.alpha_step,
            random_points: self.random_points,
            seed: self.seed,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// write to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a mechanism on one election
    Run {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long)]
        mechanism: String,
        /// 1-based votes, comma separated
        #[arg(long)]
        actions: Option<String>,
        /// voter positions: points separated by ';', coordinates by ','
        #[arg(long, allow_hyphen_values = true)]
        positions: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Search for profitable deviations
    CheckSp {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long)]
        mechanism: String,
        /// largest electorate checked
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[command(flatten)]
        suite: SuiteArgs,
        /// stop after this many cost evaluations
        #[arg(long)]
        max_evaluations: Option<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Search for the worst-case distortion
    Distortion {
        #[command(flatten)]
        inst: InstanceArgs,
        #[arg(long)]
        mechanism: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        suite: SuiteArgs,
        /// random truthful profiles tried after the structured search
        #[arg(long, default_value_t = 200)]
        random_profiles: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a named claim, or print a named profile family
    Reproduce {
        /// claim id, profile family id, "all" or "list"
        id: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<f64>,
        #[arg(long)]
        sigma: Option<f64>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        grid_step: Option<f64>,
        /// mechanism evaluated on a profile family
        #[arg(long)]
        mechanism: Option<String>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Distortion search over a parameter grid, one row per point
    Sweep {
        #[arg(long, default_value = "multi4")]
        instance: String,
        /// comma-separated mechanism ids
        #[arg(long)]
        mechanism: String,
        /// electorate sizes: "3,5", "3..8" or "6..60:6"
        #[arg(long)]
        n: String,
        /// sigma values: "3,5,9" or "3..9:2"
        #[arg(long)]
        sigma: Option<String>,
        /// far-point coordinates for simplex instances
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        suite: SuiteArgs,
        #[arg(long, default_value_t = 200)]
        random_profiles: usize,
        /// fill runtime_ms (output is then no longer reproducible)
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Parses `std::env::args` and runs; returns the exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Runs a parsed command; `Ok(false)` means a check failed.
pub fn execute(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Run {
            inst,
            mechanism,
            actions,
            positions,
            output,
        } => cmd_run(&inst, &mechanism, actions.as_deref(), positions.as_deref(), &output),
        Command::CheckSp {
            inst,
            mechanism,
            n,
            suite,
            max_evaluations,
            output,
        } => {
            let loaded = load_instance(&inst.instance, inst.sigma, inst.r, inst.m)?;
            let mech = mechanism_by_name(&mechanism)?;
            let cfg = SpConfig {
                max_n: n,
                suite: suite.config(),
                max_evaluations,
                ..SpConfig::default()
            };
            let rep = check_strategy_proof(mech.as_ref(), &loaded.instance, &cfg)?;
            let text = match output.format.unwrap_or(Format::Text) {
                Format::Json => json_string(&json!({
                    "instance": loaded.label,
                    "mechanism": mech.name(),
                    "max_n": n,
                    "strategy_proof": rep.is_strategy_proof(),
                    "violation_count": rep.violation_count,
                    "truncated": rep.truncated,
                    "contexts": rep.contexts,
                    "evaluations": rep.evaluations,
                    "positions": rep.positions,
                    "violations": rep.violations.iter().map(|v| v.record()).collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    let mut s = String::from("actions,voter,truthful_action,deviation,position,truthful_cost,deviation_cost\n");
                    for v in &rep.violations {
                        s.push_str(&format!(
                            "{},{},{},{},{},{},{}\n",
                            join_usize(&v.election.one_based_actions(), " "),
                            v.voter + 1,
                            v.truthful_action + 1,
                            v.deviation + 1,
                            v.position.coords().iter().map(|&c| fmt_g(c)).collect::<Vec<_>>().join(" "),
                            fmt_g(v.truthful_cost),
                            fmt_g(v.deviation_cost)
                        ));
                    }
                    s
                }
                Format::Text => {
                    let mut s = format!(
                        "{} on {}, n <= {n}: {} contexts, {} positions, {} evaluations\n",
                        mech.name(),
                        loaded.label,
                        rep.contexts,
                        rep.positions,
                        rep.evaluations
                    );
                    if rep.truncated {
                        s.push_str("budget exhausted: result is partial\n");
                    }
                    s.push_str(&format!("violations: {}\n", rep.violation_count));
                    for v in rep.violations.iter().take(10) {
                        s.push_str(&format!(
                            "  actions ({}) voter {} at {}: y{} costs {}, y{} costs {}\n",
                            join_usize(&v.election.one_based_actions(), ", "),
                            v.voter + 1,
                            fmt_point(v.position.coords()),
                            v.truthful_action + 1,
                            fmt_g(v.truthful_cost),
                            v.deviation + 1,
                            fmt_g(v.deviation_cost)
                        ));
                    }
                    s.push_str(if rep.is_strategy_proof() { "PASS\n" } else { "FAIL\n" });
                    s
                }
            };
            emit(&output, &text)?;
            Ok(rep.is_strategy_proof())
        }
        Command::Distortion {
            inst,
            mechanism,
            n,
            suite,
            random_profiles,
            output,
        } => {
            let loaded = load_instance(&inst.instance, inst.sigma, inst.r, inst.m)?;
            let mech = mechanism_by_name(&mechanism)?;
            let cfg = SearchConfig {
                suite: suite.config(),
                random_profiles,
                seed: suite.seed,
                ..SearchConfig::default()
            };
            let rep = distortion_search(mech.as_ref(), &loaded.instance, n, &cfg)?;
            let text = match output.format.unwrap_or(Format::Text) {
                Format::Json => json_string(&rep.to_json()),
                Format::Csv => format!(
                    "mechanism,n,sigma,best_ratio,expected_cost,opt_cost,search_budget\n{},{n},{},{},{},{},{}\n",
                    rep.mechanism,
                    fmt_g(loaded.instance.sigma()),
                    fmt_g(rep.best_ratio),
                    fmt_g(rep.expected_cost),
                    fmt_g(rep.opt_cost),
                    rep.search_budget
                ),
                Format::Text => format!(
                    "{} on {}, n = {n}\nbest ratio: {}\nactions: ({})\npositions: {}\nexpected cost: {}\nOPT: {} = {}\nsearched {} action profiles, {} positions, budget {}\n",
                    rep.mechanism,
                    loaded.label,
                    fmt_g(rep.best_ratio),
                    join_usize(&rep.election.one_based_actions(), ", "),
                    rep.profile.positions().iter().map(|p| fmt_point(p.coords())).collect::<Vec<_>>().join(" "),
                    fmt_g(rep.expected_cost),
                    rep.opt_committee,
                    fmt_g(rep.opt_cost),
                    rep.elections,
                    rep.positions,
                    rep.search_budget
                ),
            };
            emit(&output, &text)?;
            Ok(true)
        }
        Command::Reproduce {
            id,
            n,
            r,
            sigma,
            m,
            k,
            t,
            grid_step,
            mechanism,
            seed,
            output,
        } => {
            if id == "list" {
                let mut s = String::from("claims:\n");
                for (c, what) in CLAIMS {
                    s.push_str(&format!("  {c:<20} {what}\n"));
                }
                s.push_str("profile families:\n");
                for f in FAMILY_IDS {
                    s.push_str(&format!("  {f}\n"));
                }
                emit(&output, &s)?;
                return Ok(true);
            }
            if FAMILY_IDS.contains(&id.as_str()) {
                let defaults = FamilyParams::default();
                let p = FamilyParams {
                    n: n.unwrap_or(defaults.n),
                    sigma: sigma.unwrap_or(defaults.sigma),
                    r: r.unwrap_or(defaults.r),
                    m: m.unwrap_or(defaults.m),
                    k,
                    t: t.unwrap_or(defaults.t),
                };
                let mech = mechanism_by_name(mechanism.as_deref().unwrap_or("pair-independent"))?;
                return cmd_family(&id, &p, mech.as_ref(), &output);
            }
            let params = ClaimParams {
                n,
                r,
                m,
                grid_step,
                seed,
            };
            let ids: Vec<&str> = if id == "all" {
                CLAIMS.iter().map(|(c, _)| *c).collect()
            } else {
                vec![id.as_str()]
            };
            let mut outcomes = Vec::new();
            for c in ids {
                match run_claim(c, &params)? {
                    Some(o) => outcomes.push(o),
                    None => {
                        let known: Vec<&str> = CLAIMS.iter().map(|(c, _)| *c).chain(FAMILY_IDS.iter().copied()).collect();
                        return Err(CliError::Usage(format!(
                            "unknown claim '{c}'; available: {}, all, list",
                            known.join(", ")
                        )));
                    }
                }
            }
            let pass = outcomes.iter().all(|o| o.pass);
            let text = match output.format.unwrap_or(Format::Text) {
                Format::Json => json_string(&Value::Array(outcomes.iter().map(claim_json).collect())),
                Format::Csv => {
                    let mut s = String::from("claim,expected,observed,result\n");
                    for o in &outcomes {
                        s.push_str(&format!(
                            "{},\"{}\",\"{}\",{}\n",
                            o.id,
                            o.expected,
                            o.observed,
                            verdict(o.pass)
                        ));
                    }
                    s
                }
                Format::Text => outcomes.iter().map(claim_text).collect::<Vec<_>>().join("\n"),
            };
            emit(&output, &text)?;
            Ok(pass)
        }
        Command::Sweep {
            instance,
            mechanism,
            n,
            sigma,
            r,
            m,
            suite,
            random_profiles,
            timing,
            output,
        } => {
            let ns = parse_usize_list(&n)?;
            let mechs: Vec<String> = mechanism.split(',').map(|s| s.trim().to_string()).collect();
            for name in &mechs {
                mechanism_by_name(name)?;
            }
            let instances = sweep_instances(&instance, sigma.as_deref(), r.as_deref(), m)?;
            let mut points = Vec::new();
            for mech in &mechs {
                for inst in &instances {
                    for &n in &ns {
                        points.push(SweepPoint {
                            mechanism: mech.clone(),
                            instance: inst.clone(),
                            n,
                        });
                    }
                }
            }
            let cfg = SearchConfig {
                suite: suite.config(),
                random_profiles,
                seed: suite.seed,
                ..SearchConfig::default()
            };
            let rows = run_sweep(&points, &cfg, timing);
            let text = match output.format.unwrap_or(Format::Csv) {
                Format::Json => json_string(&Value::Array(rows.iter().map(|r| r.json()).collect())),
                _ => {
                    let mut s = format!("{CSV_HEADER}\n");
                    for row in &rows {
                        s.push_str(&row.csv());
                        s.push('\n');
                    }
                    s
                }
            };
            emit(&output, &text)?;
            Ok(true)
        }
    }
}

fn mechanism_by_name(name: &str) -> Result<Box<dyn Mechanism>, CliError> {
    by_name(name).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown mechanism '{name}'; available: {}",
            MECHANISM_NAMES.join(", ")
        ))
    })
}

fn sweep_instances(
    name: &str,
    sigma: Option<&str>,
    r: Option<&str>,
    m: Option<usize>,
) -> Result<Vec<Instance>, CliError> {
    let sigmas = sigma.map(parse_f64_list).transpose()?;
    let rs = r.map(parse_f64_list).transpose()?;
    let mut out = Vec::new();
    let mut push = |res: crate::error::Result<Instance>, what: String| match res {
        Ok(i) => out.push(i),
        Err(e) => log::warn!("skipping {what}: {e}"),
    };
    match name {
        "line3" => push(Ok(Instance::line3()), "line3".into()),
        "line4" => {
            if rs.is_some() {
                return Err(CliError::Usage("line4 takes --sigma, not --r".into()));
            }
            for s in sigmas.unwrap_or(vec![input::DEFAULT_LINE4_SIGMA]) {
                push(Instance::line4(s), format!("sigma={}", fmt_g(s)));
            }
        }
        "simplex" | "multi4" => {
            let m = if name == "multi4" { 4 } else { m.unwrap_or(input::DEFAULT_M) };
            match (sigmas, rs) {
                (Some(_), Some(_)) => {
                    return Err(CliError::Usage("give either --r or --sigma, not both".into()))
                }
                (Some(ss), None) => {
                    for s in ss {
                        push(
                            simplex_r(m, Some(s), None)
                                .map_err(|e| crate::error::Error::InvalidParameter(e.to_string()))
                                .and_then(|r| Instance::simplex(m, r)),
                            format!("sigma={}", fmt_g(s)),
                        );
                    }
                }
                (None, rs) => {
                    for r in rs.unwrap_or(vec![input::DEFAULT_R]) {
                        push(Instance::simplex(m, r), format!("r={}", fmt_g(r)));
                    }
                }
            }
        }
        path => {
            let loaded = load_instance(path, None, None, None)?;
            out.push(loaded.instance);
        }
    }
    Ok(out)
}

fn cmd_run(
    inst: &InstanceArgs,
    mechanism: &str,
    actions: Option<&str>,
    positions: Option<&str>,
    output: &OutputArgs,
) -> Result<bool, CliError> {
    let loaded = load_instance(&inst.instance, inst.sigma, inst.r, inst.m)?;
    let cs = &loaded.instance.candidates;
    let mech = mechanism_by_name(mechanism)?;
    let positions = match positions {
        Some(s) => Some(parse_positions(s, cs.dim())?),
        None => loaded.positions.clone(),
    };
    let profile = positions.map(LocationProfile::new);
    let actions = match (actions, &loaded.actions, &profile) {
        (Some(s), _, _) => parse_actions(s, cs.m())?,
        (None, Some(a), _) => a.clone(),
        (None, None, Some(x)) => {
            let a = truthful_actions(x, cs)?;
            for (i, p) in x.positions().iter().enumerate() {
                let near = crate::model::nearest_candidates(p, cs)?;
                if near.len() > 1 {
                    log::warn!(
                        "voter {} is tied between {}; voting y{}",
                        i + 1,
                        near.iter().map(|k| format!("y{}", k + 1)).collect::<Vec<_>>().join(", "),
                        a[i] + 1
                    );
                }
            }
            a
        }
        (None, None, None) => {
            return Err(CliError::Usage("run needs --actions or --positions".into()));
        }
    };
    let election = loaded.instance.election(actions)?;
    if let Some(x) = &profile {
        crate::model::check_consistent(x, &election)?;
    }
    let outcome = mech.elect(&election)?;
    let lottery = outcome.lottery();

    let mut costs: Vec<(Committee, f64)> = Vec::new();
    let mut summary = None;
    if let Some(x) = &profile {
        for c in Committee::all(cs.m(), outcome.committee_size()) {
            costs.push((c, committee_social_cost(c, x, cs)?));
        }
        let e = outcome.expected_social_cost(x, cs)?;
        let (oc, o) = opt_committee(x, cs, outcome.committee_size())?;
        summary = Some((e, oc, o, ratio(e, o)?));
    }

    let text = match output.format.unwrap_or(Format::Text) {
        Format::Json => {
            let mut v = json!({
                "instance": loaded.label,
                "mechanism": mech.name(),
                "actions": election.one_based_actions(),
                "outcome": lottery.iter().map(|(c, p)| json!({"committee": c.one_based(), "probability": p})).collect::<Vec<_>>(),
            });
            if let Some((e, oc, o, r)) = summary {
                v["social_costs"] = Value::Array(
                    costs.iter().map(|(c, s)| json!({"committee": c.one_based(), "social_cost": s})).collect(),
                );
                v["expected_social_cost"] = json!(e);
                v["opt_committee"] = json!(oc.one_based());
                v["opt"] = json!(o);
                v["ratio"] = float_json(r);
            }
            json_string(&v)
        }
        Format::Csv => {
            let mut s = String::from("committee,probability,social_cost\n");
            for c in Committee::all(cs.m(), outcome.committee_size()) {
                let p = lottery.iter().find(|(d, _)| *d == c).map_or(0.0, |(_, p)| *p);
                let sc = costs.iter().find(|(d, _)| *d == c).map(|(_, s)| fmt_g(*s)).unwrap_or_default();
                s.push_str(&format!("{},{},{sc}\n", join_usize(&c.one_based(), " "), fmt_g(p)));
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "{} on {}\nactions: ({})\n",
                mech.name(),
                loaded.label,
                join_usize(&election.one_based_actions(), ", ")
            );
            match &outcome {
                Outcome::Pair(p) => s.push_str(&format!("elected: {}\n", p.sorted())),
                _ => {
                    s.push_str("lottery:\n");
                    for (c, p) in &lottery {
                        s.push_str(&format!("  {c}: {}\n", fmt_g(*p)));
                    }
                }
            }
            if let Some((e, oc, o, r)) = summary {
                s.push_str("social cost:\n");
                for (c, sc) in &costs {
                    s.push_str(&format!("  {c}: {}\n", fmt_g(*sc)));
                }
                s.push_str(&format!(
                    "expected social cost: {}\nOPT: {oc} = {}\nratio: {}\n",
                    fmt_g(e),
                    fmt_g(o),
                    fmt_g(r)
                ));
            }
            s
        }
    };
    emit(output, &text)?;
    Ok(true)
}

fn cmd_family(id: &str, p: &FamilyParams, mech: &dyn Mechanism, output: &OutputArgs) -> Result<bool, CliError> {
    let fam = named_family(id, p)?;
    let mut rows = Vec::new();
    for prof in &fam {
        let cs = prof.election.candidates();
        let (oc, o) = opt_committee(&prof.profile, cs, 2)?;
        let r = mech
            .elect(&prof.election)
            .and_then(|out| {
                let e = out.expected_social_cost(&prof.profile, cs)?;
                let (_, o) = opt_committee(&prof.profile, cs, out.committee_size())?;
                ratio(e, o)
            })
            .ok();
        rows.push((prof, oc, o, r));
    }
    let text = match output.format.unwrap_or(Format::Text) {
        Format::Json => json_string(&Value::Array(
            rows.iter()
                .map(|(prof, oc, o, r)| {
                    json!({
                        "id": prof.id,
                        "actions": prof.election.one_based_actions(),
                        "positions": prof.profile.positions().iter().map(|x| x.coords().to_vec()).collect::<Vec<_>>(),
                        "opt_pair": oc.one_based(),
                        "opt": o,
                        "mechanism": mech.name(),
                        "ratio": r.map(float_json),
                    })
                })
                .collect(),
        )),
        _ => {
            let mut s = String::new();
            for (prof, oc, o, r) in &rows {
                s.push_str(&format!(
                    "{}\n  actions: ({})\n  positions: {}\n  OPT: {oc} = {}\n  {}: {}\n",
                    prof.id,
                    join_usize(&prof.election.one_based_actions(), ", "),
                    prof.profile.positions().iter().map(|x| fmt_point(x.coords())).collect::<Vec<_>>().join(" "),
                    fmt_g(*o),
                    mech.name(),
                    r.map_or("n/a".to_string(), fmt_g)
                ));
            }
            s
        }
    };
    emit(output, &text)?;
    Ok(true)
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn claim_text(o: &ClaimOutcome) -> String {
    let mut s = format!("{}\n  expected: {}\n  observed: {}\n", o.id, o.expected, o.observed);
    for d in &o.details {
        s.push_str(&format!("  {d}\n"));
    }
    s.push_str(&format!("  {}\n", verdict(o.pass)));
    s
}

fn claim_json(o: &ClaimOutcome) -> Value {
    json!({
        "claim": o.id,
        "expected": o.expected,
        "observed": o.observed,
        "pass": o.pass,
        "details": o.details,
    })
}

fn json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), CliError> {
    match &output.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .map_err(|e| CliError::Usage(format!("cannot write to stdout: {e}")))
        }
    }
}

/// Short name of a builtin instance kind.
pub fn kind_label(kind: InstanceKind) -> &'static str {
    match kind {
        InstanceKind::Line3 => "line3",
        InstanceKind::Line4 { .. } => "line4",
        InstanceKind::Simplex { m: 4, .. } => "multi4",
        InstanceKind::Simplex { .. } => "simplex",
        InstanceKind::Custom => "custom",
    }
}
