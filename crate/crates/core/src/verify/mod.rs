//! Reproducible verification suites.
//!
//! A suite is a fixed list of instances for a scale profile. Instances run
//! on the current rayon pool and are reported sorted by id; wall times live
//! in [`SuiteReport::timing`] so two runs can be compared with
//! [`SuiteReport::without_timing`].

mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;
use crate::TOOL_VERSION;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Soundness,
    Schrijver,
    Mycielski,
    Hedetniemi,
    StahlChen,
    Gale,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Soundness, Suite::Schrijver, Suite::Mycielski, Suite::Hedetniemi, Suite::StahlChen, Suite::Gale, Suite::All];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Soundness => "soundness",
            Suite::Schrijver => "schrijver",
            Suite::Mycielski => "mycielski",
            Suite::Hedetniemi => "hedetniemi",
            Suite::StahlChen => "stahl-chen",
            Suite::Gale => "gale",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scale {
    /// Seconds; a subset of every suite.
    Tiny,
    /// Every instance of the acceptance profile.
    Desk,
}

impl FromStr for Scale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "tiny" => Ok(Scale::Tiny),
            "desk" => Ok(Scale::Desk),
            _ => Err(Error::invalid(format!("unknown scale {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub scale: Scale,
    pub seed: u64,
    /// Per exact-solver call.
    pub timeout_ms: Option<u64>,
    /// Overrides the sample count of the Gale instances.
    pub gale_trials: Option<usize>,
}

impl VerifyConfig {
    pub fn new(scale: Scale, seed: u64) -> Self {
        VerifyConfig { scale, seed, timeout_ms: None, gale_trials: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIPPED-capacity")]
    SkippedCapacity,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::SkippedCapacity => "SKIPPED-capacity",
        })
    }
}

/// A certified lower bound set against the exact chromatic number of the
/// graph it represents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SoundnessCheck {
    pub representation: String,
    pub bound: usize,
    pub chi: usize,
}

impl SoundnessCheck {
    pub fn holds(&self) -> bool {
        self.bound <= self.chi
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceResult {
    pub id: String,
    pub description: String,
    pub expected: Value,
    pub computed: Value,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub soundness: Vec<SoundnessCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportTiming {
    pub wall_ms: u128,
    pub threads: usize,
    pub instance_ms: BTreeMap<String, u128>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub suite: Suite,
    pub scale: Scale,
    pub seed: u64,
    pub summary: Summary,
    pub instances: Vec<InstanceResult>,
    pub timing: ReportTiming,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn instance(&self, id: &str) -> Option<&InstanceResult> {
        self.instances.iter().find(|i| i.id == id)
    }

    /// The report as JSON with the timing block removed.
    pub fn without_timing(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().expect("report is an object").remove("timing");
        v
    }

    pub fn to_csv(&self) -> String {
        let quote = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
        let mut out = String::from("id,status,expected,computed\n");
        for i in &self.instances {
            out.push_str(&format!(
                "{},{},{},{}\n",
                quote(&i.id),
                i.status,
                quote(&i.expected.to_string()),
                quote(&i.computed.to_string())
            ));
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let cell = |s: String| s.replace('|', "\\|");
        let mut out = format!(
            "# {} ({:?}, seed {})\n\n{} pass, {} fail, {} skipped\n\n| id | status | expected | computed |\n|---|---|---|---|\n",
            self.suite, self.scale, self.seed, self.summary.pass, self.summary.fail, self.summary.skipped
        );
        for i in &self.instances {
            out.push_str(&format!(
                "| {} | {} | {} | {} |\n",
                cell(i.id.clone()),
                i.status,
                cell(i.expected.to_string()),
                cell(i.computed.to_string())
            ));
        }
        out
    }
}

/// What an instance produced; `Skip` marks capacity limits and timeouts.
pub(crate) enum JobError {
    Skip(String),
    Fail(String),
}

impl From<Error> for JobError {
    fn from(e: Error) -> Self {
        match e {
            Error::Capacity { .. } => JobError::Skip(e.to_string()),
            other => JobError::Fail(other.to_string()),
        }
    }
}

pub(crate) struct Outcome {
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
    pub soundness: Vec<SoundnessCheck>,
    pub note: Option<String>,
}

impl Outcome {
    pub fn new(expected: Value, computed: Value, pass: bool) -> Self {
        Outcome { expected, computed, pass, soundness: Vec::new(), note: None }
    }

    pub fn with_soundness(mut self, checks: Vec<SoundnessCheck>) -> Self {
        self.soundness = checks;
        self
    }
}

pub(crate) type Run = Box<dyn Fn() -> Result<Outcome, JobError> + Send + Sync>;

pub(crate) struct Job {
    pub id: String,
    pub description: String,
    pub run: Run,
}

impl Job {
    pub fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        run: impl Fn() -> Result<Outcome, JobError> + Send + Sync + 'static,
    ) -> Self {
        Job { id: id.into(), description: description.into(), run: Box::new(run) }
    }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> SuiteReport {
    let start = Instant::now();
    let jobs = suites::jobs(suite, config);
    let mut results: Vec<(InstanceResult, u128)> = jobs
        .into_par_iter()
        .map(|job| {
            let t = Instant::now();
            let result = run_job(&job);
            (result, t.elapsed().as_millis())
        })
        .collect();
    results.sort_by(|a, b| a.0.id.cmp(&b.0.id));

    let mut instances: Vec<InstanceResult> = results.iter().map(|(r, _)| r.clone()).collect();
    let mut instance_ms: BTreeMap<String, u128> = results.into_iter().map(|(r, ms)| (r.id, ms)).collect();
    let sweep = global_sweep(&instances);
    instance_ms.insert(sweep.id.clone(), 0);
    instances.push(sweep);
    instances.sort_by(|a, b| a.id.cmp(&b.id));

    let mut summary = Summary::default();
    for i in &instances {
        match i.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::SkippedCapacity => summary.skipped += 1,
        }
    }
    SuiteReport {
        schema_version: REPORT_SCHEMA_VERSION,
        tool_version: TOOL_VERSION.to_string(),
        suite,
        scale: config.scale,
        seed: config.seed,
        summary,
        instances,
        timing: ReportTiming {
            wall_ms: start.elapsed().as_millis(),
            threads: rayon::current_num_threads(),
            instance_ms,
        },
    }
}

fn run_job(job: &Job) -> InstanceResult {
    let base = |expected, computed, status, note| InstanceResult {
        id: job.id.clone(),
        description: job.description.clone(),
        expected,
        computed,
        status,
        soundness: Vec::new(),
        note,
    };
    match (job.run)() {
        Ok(o) => {
            let sound = o.soundness.iter().all(SoundnessCheck::holds);
            let status = if o.pass && sound { Status::Pass } else { Status::Fail };
            InstanceResult { soundness: o.soundness, ..base(o.expected, o.computed, status, o.note) }
        }
        Err(JobError::Skip(note)) => base(Value::Null, Value::Null, Status::SkippedCapacity, Some(note)),
        Err(JobError::Fail(note)) => base(Value::Null, Value::Null, Status::Fail, Some(note)),
    }
}

/// Every soundness check recorded by the other instances, in one place.
fn global_sweep(instances: &[InstanceResult]) -> InstanceResult {
    let checks: Vec<(&str, &SoundnessCheck)> =
        instances.iter().flat_map(|i| i.soundness.iter().map(move |c| (i.id.as_str(), c))).collect();
    let violations: Vec<Value> = checks
        .iter()
        .filter(|(_, c)| !c.holds())
        .map(|(id, c)| serde_json::json!({ "instance": id, "representation": c.representation, "bound": c.bound, "chi": c.chi }))
        .collect();
    let status = if violations.is_empty() { Status::Pass } else { Status::Fail };
    InstanceResult {
        id: "soundness/global-sweep".into(),
        description: "every certified bound in this report is at most the exact chromatic number".into(),
        expected: serde_json::json!({ "violations": 0 }),
        computed: serde_json::json!({ "checks": checks.len(), "violations": violations.len(), "violating": violations }),
        status,
        soundness: Vec::new(),
        note: None,
    }
}
