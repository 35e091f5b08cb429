//! Suite registry, configuration and report emission for batch
//! verification.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::bigon::rewrite::verify_confluence;
use crate::bigon::{verify_cobraiding, verify_hopf_axioms};
use crate::braided::{verify_braided_associativity, verify_phi_braided, BraidSlots};
use crate::frobenius::{
    negative_control, verify_annulus_tn, verify_phi_homomorphism, verify_phi_multiplicative,
    verify_square_collapse, verify_square_expansion,
};
use crate::qcomb::{verify_pascal, verify_qbinom_vanishing, verify_root_identities};
use crate::report::{Case, Report};
use crate::scalar::{Ring, RootSpec};
use crate::torus::{
    verify_freshman_dream, verify_monogon_noncentrality, verify_torus_chebyshev, verify_torus_frobenius,
};
use crate::uq::{verify_pairing_tables, verify_dual_frobenius, verify_pairing_consistency};

/// Largest root order accepted on the command line or in a config file.
pub const MAX_ORDER: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("unknown option '{0}'")]
    UnknownOption(String),
    #[error("missing value for '{0}'")]
    MissingValue(String),
    #[error("malformed value for '{key}': '{value}' ({reason})")]
    BadValue { key: String, value: String, reason: String },
    #[error("config file line {line}: {msg}")]
    File { line: usize, msg: String },
    #[error("cannot read config file '{path}': {msg}")]
    Io { path: String, msg: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Qfacts,
    RootIdentities,
    FreshmanDream,
    TorusChebyshev,
    TorusFrobenius,
    Monogon,
    Annulus,
    Square,
    Confluence,
    HopfAxioms,
    Cobraiding,
    PairingTables,
    PairingConsistency,
    DualFrobenius,
    PhiHomomorphism,
    NegativeControl,
    Braided,
}

impl Suite {
    pub const ALL: [Suite; 17] = [
        Suite::Qfacts,
        Suite::RootIdentities,
        Suite::FreshmanDream,
        Suite::TorusChebyshev,
        Suite::TorusFrobenius,
        Suite::Monogon,
        Suite::Annulus,
        Suite::Square,
        Suite::Confluence,
        Suite::HopfAxioms,
        Suite::Cobraiding,
        Suite::PairingTables,
        Suite::PairingConsistency,
        Suite::DualFrobenius,
        Suite::PhiHomomorphism,
        Suite::NegativeControl,
        Suite::Braided,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Qfacts => "qfacts",
            Suite::RootIdentities => "root-identities",
            Suite::FreshmanDream => "freshman-dream",
            Suite::TorusChebyshev => "torus-chebyshev",
            Suite::TorusFrobenius => "torus-frobenius",
            Suite::Monogon => "monogon",
            Suite::Annulus => "annulus",
            Suite::Square => "square",
            Suite::Confluence => "confluence",
            Suite::HopfAxioms => "hopf-axioms",
            Suite::Cobraiding => "cobraiding",
            Suite::PairingTables => "pairing-tables",
            Suite::PairingConsistency => "pairing-consistency",
            Suite::DualFrobenius => "dual-frobenius",
            Suite::PhiHomomorphism => "phi-homomorphism",
            Suite::NegativeControl => "negative-control",
            Suite::Braided => "braided",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| ConfigError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    #[serde(skip)]
    pub suites: Vec<Suite>,
    pub orders: Vec<u32>,
    pub degree_bound: u32,
    pub m_max: u32,
    pub samples: usize,
    pub seed: u64,
    #[serde(skip)]
    pub format: Format,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suites: Vec::new(),
            orders: (1..=12).collect(),
            degree_bound: 2,
            m_max: 8,
            samples: 20,
            seed: 0,
            format: Format::Text,
        }
    }
}

fn bad(key: &str, value: &str, reason: impl Into<String>) -> ConfigError {
    ConfigError::BadValue {
        key: key.to_string(),
        value: value.to_string(),
        reason: reason.into(),
    }
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T, ConfigError> {
    value.trim().parse().map_err(|_| bad(key, value, "expected a non-negative integer"))
}

/// `3,5,12`, `1..40` or a mix such as `1..4,8`; sorted and deduplicated.
pub fn parse_orders(value: &str) -> Result<Vec<u32>, ConfigError> {
    let mut out = Vec::new();
    for part in value.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(bad("orders", value, "empty list entry"));
        }
        let (lo, hi) = match part.split_once("..") {
            Some((a, b)) => (parse_num::<u32>("orders", a)?, parse_num::<u32>("orders", b)?),
            None => {
                let v = parse_num::<u32>("orders", part)?;
                (v, v)
            }
        };
        if lo == 0 || hi > MAX_ORDER || lo > hi {
            return Err(bad("orders", value, format!("orders must satisfy 1 <= a <= b <= {MAX_ORDER}")));
        }
        out.extend(lo..=hi);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Comma-separated suite names; `all` expands to every suite.
pub fn parse_suites(value: &str) -> Result<Vec<Suite>, ConfigError> {
    let mut out = Vec::new();
    for name in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if name == "all" {
            out.extend(Suite::ALL);
        } else {
            out.push(name.parse()?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

impl SuiteConfig {
    /// Applies one `key = value` setting; keys accept `-` or `_`.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        match key.replace('_', "-").as_str() {
            "suites" => self.suites = parse_suites(value)?,
            "orders" => self.orders = parse_orders(value)?,
            "degree-bound" => self.degree_bound = parse_num("degree-bound", value)?,
            "m-max" => self.m_max = parse_num("m-max", value)?,
            "samples" => {
                self.samples = parse_num("samples", value)?;
                if self.samples == 0 {
                    return Err(bad("samples", value, "samples must be at least 1"));
                }
            }
            "seed" => self.seed = parse_num("seed", value)?,
            "format" => {
                self.format = match value.trim() {
                    "text" => Format::Text,
                    "json" => Format::Json,
                    _ => return Err(bad("format", value, "expected 'text' or 'json'")),
                }
            }
            other => return Err(ConfigError::UnknownOption(other.to_string())),
        }
        Ok(())
    }
}

/// Line-oriented `key = value` pairs; `#` starts a comment.
pub fn parse_config_text(text: &str) -> Result<Vec<(String, String)>, ConfigError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| ConfigError::File {
            line: i + 1,
            msg: "expected 'key = value'".into(),
        })?;
        let k = k.trim();
        if k.is_empty() {
            return Err(ConfigError::File {
                line: i + 1,
                msg: "empty key".into(),
            });
        }
        out.push((k.to_string(), v.trim().to_string()));
    }
    Ok(out)
}

/// Parses `verify` arguments: suite names, then `--key value` flags. Values
/// from `--config PATH` are applied first and flags override them.
pub fn parse_config<S: AsRef<str>>(args: &[S]) -> Result<SuiteConfig, ConfigError> {
    let mut suites: Option<Vec<Suite>> = None;
    let mut flags = Vec::new();
    let mut file = None;
    let mut i = 0;
    while i < args.len() {
        let a = args[i].as_ref();
        if let Some(key) = a.strip_prefix("--") {
            let (key, value) = match key.split_once('=') {
                Some((k, v)) => (k.to_string(), v.to_string()),
                None => {
                    i += 1;
                    let v = args.get(i).ok_or_else(|| ConfigError::MissingValue(a.to_string()))?;
                    (key.to_string(), v.as_ref().to_string())
                }
            };
            if key == "config" {
                file = Some(value);
            } else {
                flags.push((key, value));
            }
        } else {
            let parsed = parse_suites(a)?;
            suites.get_or_insert_with(Vec::new).extend(parsed);
        }
        i += 1;
    }
    let mut cfg = SuiteConfig::default();
    if let Some(path) = file {
        for (k, v) in read_config_file(Path::new(&path))? {
            cfg.set(&k, &v)?;
        }
    }
    for (k, v) in flags {
        cfg.set(&k, &v)?;
    }
    if let Some(mut s) = suites {
        s.sort_unstable();
        s.dedup();
        cfg.suites = s;
    }
    Ok(cfg)
}

fn read_config_file(path: &Path) -> Result<Vec<(String, String)>, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    parse_config_text(&text)
}

fn specs(cfg: &SuiteConfig) -> Vec<RootSpec> {
    cfg.orders.iter().map(|&n| RootSpec::new(n).expect("orders are validated")).collect()
}

/// Runs one suite over the configured orders.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Report {
    let mut report = Report::new(suite.name());
    let generic = Ring::generic();
    let (samples, seed) = (cfg.samples, cfg.seed);
    match suite {
        Suite::Qfacts => {
            report.merge(verify_pascal(cfg.m_max as i64));
            for spec in specs(cfg) {
                report.merge(verify_qbinom_vanishing(&spec));
            }
        }
        Suite::RootIdentities => {
            for spec in specs(cfg) {
                report.merge(verify_root_identities(&spec));
            }
        }
        Suite::FreshmanDream => {
            for &n in &cfg.orders {
                report.merge(verify_freshman_dream(n, n));
            }
        }
        Suite::TorusChebyshev => {
            for spec in specs(cfg) {
                report.merge(verify_torus_chebyshev(&spec));
            }
        }
        Suite::TorusFrobenius => {
            for spec in specs(cfg) {
                report.merge(verify_torus_frobenius(&spec, samples, seed));
            }
        }
        Suite::Monogon => {
            for m in 0..=cfg.m_max {
                report.merge(verify_monogon_noncentrality(m));
            }
        }
        Suite::Annulus => {
            for spec in specs(cfg) {
                report.merge(verify_annulus_tn(&spec));
            }
        }
        Suite::Square => {
            report.merge(verify_square_expansion(cfg.m_max, None));
            for spec in specs(cfg) {
                report.merge(verify_square_collapse(&spec));
            }
        }
        Suite::Confluence => report.merge(verify_confluence(&generic, samples, 6, seed)),
        Suite::HopfAxioms => report.merge(verify_hopf_axioms(&generic, cfg.degree_bound)),
        Suite::Cobraiding => report.merge(verify_cobraiding(&generic, cfg.degree_bound, samples, seed)),
        Suite::PairingTables => report.merge(verify_pairing_tables(cfg.m_max, cfg.m_max)),
        Suite::PairingConsistency => report.merge(verify_pairing_consistency(&generic, cfg.degree_bound, samples, seed)),
        Suite::DualFrobenius => {
            for spec in specs(cfg) {
                report.merge(verify_dual_frobenius(&spec, cfg.degree_bound, samples, seed));
            }
        }
        Suite::PhiHomomorphism => {
            for spec in specs(cfg) {
                report.merge(verify_phi_homomorphism(&spec));
                report.merge(verify_phi_multiplicative(&spec, samples, seed));
            }
        }
        Suite::NegativeControl => {
            report.merge(negative_control(None));
            for spec in specs(cfg) {
                report.merge(negative_control(Some(&spec)));
            }
        }
        Suite::Braided => {
            report.merge(verify_braided_associativity(samples, seed, BraidSlots::STANDARD));
            for spec in specs(cfg) {
                report.merge(verify_phi_braided(&spec, samples, seed, BraidSlots::STANDARD));
            }
        }
    }
    report
}

/// Runs every configured suite, one thread per suite; reports come back in
/// suite order.
pub fn run_all(cfg: &SuiteConfig) -> Vec<Report> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = cfg.suites.iter().map(|&s| scope.spawn(move || run_suite(s, cfg))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    })
}

#[derive(Serialize)]
struct JsonReport<'a> {
    suite: &'a str,
    params: &'a SuiteConfig,
    cases: &'a [Case],
    passed: usize,
    failed: usize,
    skipped: usize,
}

/// One JSON object for the report.
pub fn report_json(report: &Report, cfg: &SuiteConfig) -> String {
    let doc = JsonReport {
        suite: &report.suite,
        params: cfg,
        cases: &report.cases,
        passed: report.passed(),
        failed: report.failed(),
        skipped: report.skipped(),
    };
    serde_json::to_string(&doc).expect("report serializes")
}

/// Text: one line per case plus a summary line. JSON: one object per line.
pub fn emit(reports: &[Report], cfg: &SuiteConfig) -> String {
    let mut out = String::new();
    for r in reports {
        match cfg.format {
            Format::Text => out.push_str(&r.to_string()),
            Format::Json => {
                out.push_str(&report_json(r, cfg));
                out.push('\n');
            }
        }
    }
    out
}

/// 0 when nothing failed, 1 otherwise.
pub fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().all(Report::all_passed) {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_examples() {
        let cfg = parse_config(&["all", "--orders", "1..40"]).unwrap();
        assert_eq!(cfg.suites.len(), Suite::ALL.len());
        assert_eq!(cfg.orders, (1..=40).collect::<Vec<_>>());
        let cfg = parse_config(&["dual-frobenius", "--orders", "3,5,12", "--format", "json"]).unwrap();
        assert_eq!(cfg.suites, vec![Suite::DualFrobenius]);
        assert_eq!(cfg.orders, vec![3, 5, 12]);
        assert_eq!(cfg.format, Format::Json);
        let cfg = parse_config(&["square", "--m-max=10"]).unwrap();
        assert_eq!(cfg.m_max, 10);
        assert!(parse_config::<&str>(&[]).unwrap().suites.is_empty());
        assert_eq!(parse_config(&["nope"]), Err(ConfigError::UnknownSuite("nope".into())));
        assert!(matches!(parse_config(&["qfacts", "--orders", "0..3"]), Err(ConfigError::BadValue { .. })));
        assert!(matches!(parse_config(&["qfacts", "--samples", "0"]), Err(ConfigError::BadValue { .. })));
        assert!(matches!(parse_config(&["qfacts", "--seed"]), Err(ConfigError::MissingValue(_))));
        assert!(matches!(parse_config(&["qfacts", "--colour", "red"]), Err(ConfigError::UnknownOption(_))));
    }

    #[test]
    fn config_file_then_flags() {
        let dir = std::env::temp_dir().join(format!("qfrob-cfg-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.cfg");
        std::fs::write(&path, "# demo\nsuites = qfacts, annulus\norders = 3,5\nseed = 9\n").unwrap();
        let p = path.to_str().unwrap();
        let cfg = parse_config(&["--config", p, "--seed", "4"]).unwrap();
        assert_eq!(cfg.suites, vec![Suite::Qfacts, Suite::Annulus]);
        assert_eq!(cfg.orders, vec![3, 5]);
        assert_eq!(cfg.seed, 4);
        std::fs::remove_dir_all(&dir).unwrap();
        assert!(matches!(parse_config_text("orders 3"), Err(ConfigError::File { line: 1, .. })));
    }

    #[test]
    fn json_shape_and_determinism() {
        let cfg = parse_config(&["negative-control,qfacts", "--orders", "1,5", "--format", "json"]).unwrap();
        let strip = |s: String| -> Vec<serde_json::Value> {
            s.lines()
                .map(|l| {
                    let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
                    for c in v["cases"].as_array_mut().unwrap() {
                        c.as_object_mut().unwrap().remove("duration_ms");
                    }
                    v
                })
                .collect()
        };
        let first = strip(emit(&run_all(&cfg), &cfg));
        let second = strip(emit(&run_all(&cfg), &cfg));
        assert_eq!(first, second);
        let neg = first.iter().find(|v| v["suite"] == "negative-control").unwrap();
        let keys: Vec<&String> = neg.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 6);
        assert_eq!(neg["failed"], 0);
        assert_eq!(neg["skipped"], 1);
        assert!(neg["cases"].as_array().unwrap().iter().any(|c| c["status"] == "skip"));
        assert_eq!(neg["params"]["orders"], serde_json::json!([1, 5]));
        assert_eq!(exit_code(&run_all(&cfg)), 0);
        assert_eq!(exit_code(&[]), 0);
    }
}
