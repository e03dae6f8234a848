//! Pass/fail bookkeeping shared by the verification sweeps.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::Error;

/// One failed or passed statement, with the weight it was checked at.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub statement: String,
    pub at: String,
    pub passed: bool,
    pub detail: String,
}

/// Check counts per statement and every failure.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub statements: BTreeMap<String, usize>,
    pub failures: Vec<CheckOutcome>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Total number of checks.
    pub fn checks(&self) -> usize {
        self.statements.values().sum()
    }

    pub fn failures_of(&self, statement: &str) -> usize {
        self.failures.iter().filter(|f| f.statement == statement).count()
    }

    pub fn record(&mut self, statement: &str, at: impl fmt::Display, passed: bool, detail: impl Into<String>) {
        match self.statements.get_mut(statement) {
            Some(c) => *c += 1,
            None => {
                self.statements.insert(statement.to_string(), 1);
            }
        }
        if !passed {
            self.failures.push(CheckOutcome { statement: statement.into(), at: at.to_string(), passed, detail: detail.into() });
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        for (statement, c) in other.statements {
            *self.statements.entry(statement).or_default() += c;
        }
        self.failures.extend(other.failures);
    }

    pub fn record_error(&mut self, statement: &str, at: impl fmt::Display, err: &Error) {
        self.record(statement, at, false, err.to_string());
    }
}

impl FromIterator<CheckReport> for CheckReport {
    fn from_iter<T: IntoIterator<Item = CheckReport>>(iter: T) -> Self {
        let mut out = CheckReport::default();
        for r in iter {
            out.merge(r);
        }
        out
    }
}

impl rayon::iter::FromParallelIterator<CheckReport> for CheckReport {
    fn from_par_iter<I>(iter: I) -> Self
    where
        I: rayon::iter::IntoParallelIterator<Item = CheckReport>,
    {
        use rayon::iter::ParallelIterator;
        iter.into_par_iter().reduce(CheckReport::default, |mut a, b| {
            a.merge(b);
            a
        })
    }
}
