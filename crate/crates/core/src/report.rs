//! Verification reports shared by every suite and by the CLI.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Case {
    pub id: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub duration_ms: f64,
}

/// Rendered sides of passing cases are cut to this many characters.
const PASS_RENDER_LIMIT: usize = 160;

fn abbreviate(s: String) -> String {
    if s.chars().count() <= PASS_RENDER_LIMIT {
        return s;
    }
    let head: String = s.chars().take(PASS_RENDER_LIMIT).collect();
    format!("{head}... ({} chars)", s.chars().count())
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            cases: Vec::new(),
        }
    }

    /// Runs `f`, compares the two sides and records the outcome.
    pub fn check<T, F>(&mut self, id: impl Into<String>, f: F) -> bool
    where
        T: PartialEq + fmt::Display,
        F: FnOnce() -> (T, T),
    {
        self.check_with(id, || {
            let (l, r) = f();
            (l == r, l.to_string(), r.to_string())
        })
    }

    /// Like [`Report::check`] but the closure decides pass/fail itself and
    /// returns the renderings of both sides.
    pub fn check_with<F>(&mut self, id: impl Into<String>, f: F) -> bool
    where
        F: FnOnce() -> (bool, String, String),
    {
        let start = Instant::now();
        let (ok, lhs, rhs) = f();
        let duration_ms = start.elapsed().as_secs_f64() * 1e3;
        let (lhs, rhs) = if ok {
            (abbreviate(lhs), abbreviate(rhs))
        } else {
            (lhs, rhs)
        };
        self.cases.push(Case {
            id: id.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            lhs,
            rhs,
            duration_ms,
        });
        ok
    }

    pub fn skip(&mut self, id: impl Into<String>, reason: impl Into<String>) {
        self.cases.push(Case {
            id: id.into(),
            status: Status::Skip,
            lhs: reason.into(),
            rhs: String::new(),
            duration_ms: 0.0,
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.cases.extend(other.cases);
    }

    fn count(&self, s: Status) -> usize {
        self.cases.iter().filter(|c| c.status == s).count()
    }

    pub fn passed(&self) -> usize {
        self.count(Status::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count(Status::Fail)
    }

    pub fn skipped(&self) -> usize {
        self.count(Status::Skip)
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn first_failure(&self) -> Option<&Case> {
        self.cases.iter().find(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            match c.status {
                Status::Fail => writeln!(f, "[{}] {} {}: lhs = {} ; rhs = {}", self.suite, c.status, c.id, c.lhs, c.rhs)?,
                Status::Skip => writeln!(f, "[{}] {} {}: {}", self.suite, c.status, c.id, c.lhs)?,
                Status::Pass => writeln!(f, "[{}] {} {}", self.suite, c.status, c.id)?,
            }
        }
        writeln!(
            f,
            "[{}] passed={} failed={} skipped={}",
            self.suite,
            self.passed(),
            self.failed(),
            self.skipped()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_renderings() {
        let mut r = Report::new("t");
        assert!(r.check("eq", || (1, 1)));
        assert!(!r.check("neq", || (1, 2)));
        r.skip("s", "nothing to do");
        assert_eq!((r.passed(), r.failed(), r.skipped()), (1, 1, 1));
        let fail = r.first_failure().unwrap();
        assert_eq!((fail.lhs.as_str(), fail.rhs.as_str()), ("1", "2"));
    }

    #[test]
    fn long_pass_renderings_are_cut() {
        let mut r = Report::new("t");
        let long = "x".repeat(500);
        r.check("long", || (long.clone(), long.clone()));
        assert!(r.cases[0].lhs.len() < 200);
    }
}
