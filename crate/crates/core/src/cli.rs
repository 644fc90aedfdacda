//! Command-line front end: load instances, run checks, representations,
//! galleries, sweeps and limit comparisons, and emit machine-readable
//! reports. Exit codes: 0 all claims matched, 1 claim mismatch or failed
//! verification, 2 malformed input.

use std::collections::BTreeMap;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::conditions::{ConditionId, Subject, Verdict, WitnessItem};
use crate::error::Error;
use crate::gallery::{Instance, Payload};
use crate::laws::{LawReport, SweepOptions};
use crate::logic::{models_of_theory, Formula, Language};
use crate::represent::{Flavor, NondpFlavor, RepOutcome, VerifyMode};
use crate::structures::ConsequenceVariant;

#[derive(Parser, Debug)]
#[command(name = "preflab", version, about = "finite-model laboratory for preferential consequence")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check named conditions against an instance.
    Check(CheckArgs),
    /// Build a representing structure and verify it.
    Represent(RepresentArgs),
    /// Round-trip a Booth structure through its (μ⁺, μ⁻) data.
    Booth(BoothArgs),
    /// Generate a gallery instance and write it as JSON.
    Gallery(GalleryArgs),
    /// Run exhaustive invariant sweeps.
    Sweep(SweepArgs),
    /// Compare minimal and limit consequence side by side.
    Limit(LimitArgs),
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long)]
    instance: std::path::PathBuf,
    /// Comma-separated condition tags, e.g. MU_CUM,MU_CUM_ALPHA:1.
    #[arg(long, value_delimiter = ',')]
    conditions: Vec<String>,
}

#[derive(Args, Debug)]
struct RepresentArgs {
    #[arg(long)]
    instance: std::path::PathBuf,
    /// One of: general, smooth, smooth_transitive, ranked.
    #[arg(long)]
    flavor: String,
    /// Use the hat (approximate) representation instead of the exact one.
    #[arg(long)]
    hat: bool,
}

#[derive(Args, Debug)]
struct BoothArgs {
    #[arg(long)]
    instance: std::path::PathBuf,
    /// Variable names for the model space, e.g. p,q. Defaults to v0,v1,…
    #[arg(long, value_delimiter = ',')]
    vars: Vec<String>,
}

#[derive(Args, Debug)]
struct GalleryArgs {
    #[arg(long)]
    name: String,
    /// Repeatable key=value pairs, e.g. --param k=2.
    #[arg(long = "param")]
    params: Vec<String>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, default_value_t = 3)]
    max_points: usize,
    #[arg(long, default_value_t = 6)]
    max_family: usize,
    /// Suite names or condition tags; `all` runs everything.
    #[arg(long, value_delimiter = ',')]
    conditions: Vec<String>,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
}

#[derive(Args, Debug)]
struct LimitArgs {
    #[arg(long)]
    instance: std::path::PathBuf,
    /// Variable names for the model space. Defaults to v0,v1,…
    #[arg(long, value_delimiter = ',')]
    vars: Vec<String>,
    #[arg(long)]
    theory: String,
    #[arg(long)]
    formula: String,
}

/// The emitted report. `timing_ms` is the only field allowed to differ
/// between identical runs.
#[derive(Serialize, Deserialize, Debug)]
pub struct Report {
    pub command: String,
    pub items: Vec<ReportItem>,
    pub status: i32,
    pub timing_ms: u64,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct ReportItem {
    pub subject: String,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, serde_json::Value>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn verdict_item(v: &Verdict, expected: Option<bool>) -> ReportItem {
    let witness = v.witness.as_ref().map(|w| {
        w.bindings
            .iter()
            .map(|(role, item)| {
                let val = match item {
                    WitnessItem::Point(p) => serde_json::json!(p),
                    WitnessItem::Set(s) => serde_json::json!(s),
                    WitnessItem::Sets(ss) => serde_json::json!(ss),
                };
                (role.clone(), val)
            })
            .collect()
    });
    ReportItem {
        subject: v.condition.to_string(),
        holds: v.holds,
        expected,
        witness,
        notes: v.notes.clone(),
    }
}

fn law_item(r: &LawReport) -> ReportItem {
    let mut notes = vec![format!("cases: {}", r.cases)];
    if let Some(ce) = &r.first_counterexample {
        notes.push(format!("first counterexample: {ce}"));
    }
    ReportItem {
        subject: r.name.clone(),
        holds: r.violations == 0,
        expected: Some(true),
        witness: None,
        notes,
    }
}

/// Entry point used by the binary and by tests. Returns the exit code and
/// the rendered report.
pub fn run<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let started = Instant::now();
    let cli = match Cli::try_parse_from(
        std::iter::once(std::ffi::OsString::from("preflab"))
            .chain(args.into_iter().map(Into::into)),
    ) {
        Ok(cli) => cli,
        Err(e) => return (2, e.to_string()),
    };
    let command_echo = format!("{:?}", cli.command);
    let outcome = dispatch(&cli.command);
    match outcome {
        Err(e) => {
            let code = 2;
            let report = Report {
                command: command_echo,
                items: vec![ReportItem {
                    subject: "error".into(),
                    holds: false,
                    expected: None,
                    witness: None,
                    notes: vec![e.to_string()],
                }],
                status: code,
                timing_ms: started.elapsed().as_millis() as u64,
            };
            (code, render(&cli.out, &report))
        }
        Ok((items, extra_text)) => {
            let status = if items
                .iter()
                .all(|i| i.expected.map(|e| e == i.holds).unwrap_or(true))
            {
                0
            } else {
                1
            };
            let report = Report {
                command: command_echo,
                items,
                status,
                timing_ms: started.elapsed().as_millis() as u64,
            };
            let mut text = render(&cli.out, &report);
            if let Some(extra) = extra_text {
                text = extra + &text;
            }
            (status, text)
        }
    }
}

fn render(out: &Option<std::path::PathBuf>, report: &Report) -> String {
    let text = serde_json::to_string_pretty(report).expect("serializable") + "\n";
    if let Some(path) = out {
        if let Err(e) = std::fs::write(path, &text) {
            return format!("failed to write {}: {e}\n", path.display());
        }
        format!("report written to {}\n", path.display())
    } else {
        text
    }
}

type Items = (Vec<ReportItem>, Option<String>);

fn dispatch(cmd: &Command) -> crate::Result<Items> {
    match cmd {
        Command::Check(args) => check_cmd(args),
        Command::Represent(args) => represent_cmd(args),
        Command::Booth(args) => booth_cmd(args),
        Command::Gallery(args) => gallery_cmd(args),
        Command::Sweep(args) => sweep_cmd(args),
        Command::Limit(args) => limit_cmd(args),
    }
}

fn load_instance(path: &std::path::Path) -> crate::Result<Instance> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "instance".into());
    crate::instance::read_instance(&text, &name)
}

fn subject_of(payload: &Payload) -> Subject<'_> {
    match payload {
        Payload::Choice(c) => Subject::Choice(c),
        Payload::Pref(s) => Subject::Pref(s),
        Payload::Ranked(r) => Subject::Ranked(r),
        Payload::Booth(b) => Subject::Booth(b),
        Payload::Distance(d) => Subject::Distance(d),
    }
}

fn check_cmd(args: &CheckArgs) -> crate::Result<Items> {
    let inst = load_instance(&args.instance)?;
    let mut items = Vec::new();
    let expected: BTreeMap<ConditionId, bool> = inst.expected.iter().copied().collect();
    for tag in &args.conditions {
        let id: ConditionId = tag.parse()?;
        let v = crate::conditions::check(id, &subject_of(&inst.payload), &inst.family)?;
        items.push(verdict_item(&v, expected.get(&id).copied()));
    }
    if args.conditions.is_empty() {
        // no explicit list: verify every expected claim of the instance
        for &(id, holds) in &inst.expected {
            let v = crate::conditions::check(id, &subject_of(&inst.payload), &inst.family)?;
            items.push(verdict_item(&v, Some(holds)));
        }
    }
    Ok((items, None))
}

fn represent_cmd(args: &RepresentArgs) -> crate::Result<Items> {
    let inst = load_instance(&args.instance)?;
    let mu = match &inst.payload {
        Payload::Choice(c) => c.clone(),
        Payload::Pref(s) => crate::conditions::ChoiceFunction::from_structure(s, &inst.family),
        Payload::Ranked(r) => crate::conditions::ChoiceFunction::from_ranked(r, &inst.family),
        _ => return Err(Error::input("represent needs a choice function or structure payload")),
    };
    let mut items = Vec::new();
    if args.hat {
        let flavor = match args.flavor.as_str() {
            "general" => NondpFlavor::General,
            "smooth" => NondpFlavor::Smooth,
            "ranked" => NondpFlavor::Ranked,
            f => return Err(Error::input(format!("unknown hat flavor {f:?}"))),
        };
        match crate::represent::represent_nondp(&mu, flavor)? {
            RepOutcome::Built((_, report)) => items.push(ReportItem {
                subject: format!("represent_nondp {}", args.flavor),
                holds: report.ok,
                expected: Some(true),
                witness: None,
                notes: vec![format!("{} member sets verified up to hat", report.rows.len())],
            }),
            RepOutcome::Rejected(v) => {
                let mut item = verdict_item(&v, None);
                item.expected = Some(true);
                item.notes.push("rejected by the hat-representation gate".into());
                items.push(item);
            }
        }
    } else {
        let flavor = match args.flavor.as_str() {
            "general" => Flavor::General,
            "smooth" => Flavor::Smooth,
            "smooth_transitive" => Flavor::SmoothTransitive,
            "ranked" => Flavor::Ranked,
            f => return Err(Error::input(format!("unknown flavor {f:?}"))),
        };
        match crate::represent::represent(&mu, flavor)? {
            RepOutcome::Built(built) => {
                let report = crate::represent::verify_representation(&built, &mu, VerifyMode::Exact)?;
                items.push(ReportItem {
                    subject: format!("represent {}", args.flavor),
                    holds: report.ok,
                    expected: Some(true),
                    witness: None,
                    notes: vec![format!("{} member sets verified exactly", report.rows.len())],
                });
            }
            RepOutcome::Rejected(v) => {
                let mut item = verdict_item(&v, None);
                item.expected = Some(true);
                item.notes.push("rejected by the representation gate".into());
                items.push(item);
            }
        }
    }
    Ok((items, None))
}

fn language_for(universe_len: usize, vars: &[String]) -> crate::Result<Language> {
    let n = universe_len.trailing_zeros() as usize;
    if 1 << n != universe_len {
        return Err(Error::input("the universe must be a full model space (2^n points)"));
    }
    if vars.is_empty() {
        Language::new((0..n).map(|i| format!("v{i}")))
    } else if vars.len() == n {
        Language::new(vars.iter().cloned())
    } else {
        Err(Error::input(format!("expected {n} variables for {universe_len} models")))
    }
}

fn booth_cmd(args: &BoothArgs) -> crate::Result<Items> {
    let inst = load_instance(&args.instance)?;
    let booth = match &inst.payload {
        Payload::Booth(b) => b,
        _ => return Err(Error::input("booth needs a booth payload")),
    };
    let lang = language_for(inst.universe().len(), &args.vars)?;
    let nu = crate::conditions::NuData::from_booth(booth, &lang)?;
    let mut items = Vec::new();
    match crate::represent::represent_booth(&nu)? {
        RepOutcome::Built(rebuilt) => {
            let fam = &nu.family;
            let same = fam.members().iter().all(|&m| {
                rebuilt.mu_plus(m) == booth.mu_plus(m) && rebuilt.mu_minus(m) == booth.mu_minus(m)
            });
            items.push(ReportItem {
                subject: "booth round trip".into(),
                holds: same,
                expected: Some(true),
                witness: None,
                notes: vec![format!(
                    "rebuilt ranks {:?}, {} ◁-edges",
                    rebuilt.ranked().ranks(),
                    rebuilt.sub().len()
                )],
            });
        }
        RepOutcome::Rejected(v) => {
            let mut item = verdict_item(&v, None);
            item.expected = Some(true);
            items.push(item);
        }
    }
    Ok((items, None))
}

fn gallery_cmd(args: &GalleryArgs) -> crate::Result<Items> {
    let mut params: BTreeMap<&str, &str> = BTreeMap::new();
    for p in &args.params {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| Error::input(format!("bad --param {p:?}, expected key=value")))?;
        params.insert(k, v);
    }
    let inst = crate::gallery::gallery(&args.name, &params)?;
    let mut items = Vec::new();
    for &(id, holds) in &inst.expected {
        let v = crate::conditions::check(id, &subject_of(&inst.payload), &inst.family)?;
        items.push(verdict_item(&v, Some(holds)));
    }
    let text = crate::instance::write_instance(&inst);
    Ok((items, Some(text)))
}

fn sweep_cmd(args: &SweepArgs) -> crate::Result<Items> {
    let opts = SweepOptions {
        max_points: args.max_points,
        max_family: args.max_family,
        samples: args.samples,
        seed: args.seed,
    };
    let mut items = Vec::new();
    let suites: Vec<String> = if args.conditions.is_empty()
        || args.conditions.iter().any(|c| c == "all")
    {
        crate::laws::SUITE_NAMES.iter().map(|s| s.to_string()).collect()
    } else {
        args.conditions.clone()
    };
    for suite in &suites {
        for report in crate::laws::run_suite(suite, &opts)? {
            items.push(law_item(&report));
        }
    }
    Ok((items, None))
}

fn limit_cmd(args: &LimitArgs) -> crate::Result<Items> {
    let inst = load_instance(&args.instance)?;
    let s = match &inst.payload {
        Payload::Pref(s) => s.clone(),
        Payload::Ranked(r) => r.to_pref(),
        _ => return Err(Error::input("limit needs a preferential or ranked payload")),
    };
    let lang = language_for(inst.universe().len(), &args.vars)?;
    let theory = Formula::parse(&args.theory)?;
    let formula = Formula::parse(&args.formula)?;
    let t_models = models_of_theory(&[theory], &lang)?;
    let phi_models = models_of_theory(&[formula], &lang)?;
    let minimal =
        crate::structures::consequence(&s, t_models, phi_models, ConsequenceVariant::Minimal)?;
    let limit =
        crate::structures::consequence(&s, t_models, phi_models, ConsequenceVariant::Limit)?;
    let items = vec![
        ReportItem {
            subject: format!("minimal: {} |~ {}", args.theory, args.formula),
            holds: minimal,
            expected: None,
            witness: None,
            notes: Vec::new(),
        },
        ReportItem {
            subject: format!("limit: {} |~ {}", args.theory, args.formula),
            holds: limit,
            expected: None,
            witness: None,
            notes: Vec::new(),
        },
    ];
    Ok((items, None))
}
