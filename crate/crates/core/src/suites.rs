//! Named verification suites: each sweeps every size up to `n` and every
//! weight in a window, and folds the results into one deterministic report.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::glaction::{hilbert_identity_check, ideal_invariance_check, oracle_equivalence_check, relation_report, weight_dim_report};
use crate::identities::verify_identity_suite;
use crate::quotient::{
    coinvariant_quotient, ideals_equal, is_nonzero, tanisaki_generators_e, tanisaki_generators_h, tanisaki_quotient, GeneratorForm,
};
use crate::report::{CheckOutcome, CheckReport};
use crate::shapes::{compositions_of, factorial, transpose, Composition, IndexWindow, Partition};
use crate::tableaux::count_column_strict;
use crate::traces::{trace_formula_check, delta_check, delta_linearity_check, triangle_check};

/// Failures listed in full in a report; the rest are only counted.
const FAILURE_SAMPLE: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Identities,
    IdealsEqual,
    Dims,
    Relations,
    IdealInvariance,
    Weights,
    Hilbert,
    Traces,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Identities,
        Suite::IdealsEqual,
        Suite::Dims,
        Suite::Relations,
        Suite::IdealInvariance,
        Suite::Weights,
        Suite::Hilbert,
        Suite::Traces,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::IdealsEqual => "ideals-equal",
            Suite::Dims => "dims",
            Suite::Relations => "relations",
            Suite::IdealInvariance => "ideal-invariance",
            Suite::Weights => "weights",
            Suite::Hilbert => "hilbert",
            Suite::Traces => "traces",
            Suite::All => "all",
        }
    }

    /// What the suite establishes, printed in the report header.
    pub fn topic(self) -> &'static str {
        match self {
            Suite::Identities => "symmetric-function identities in P and their consequences in C_nu",
            Suite::IdealsEqual => "h-form and e-form presentations of I^mu_nu generate the same ideal",
            Suite::Dims => "dimensions and vanishing of C_nu and C^mu_nu",
            Suite::Relations => "gl relations for E_i, F_i, D_i on the sum of C_nu and of C^mu_nu",
            Suite::IdealInvariance => "E_i and F_i preserve the Tanisaki ideals",
            Suite::Weights => "dimension, top degree and top dimension of every weight space",
            Suite::Hilbert => "Hilbert series of C^mu_nu against Kostka and Kostka-Foulkes numbers",
            Suite::Traces => "units, counits, the isomorphisms delta and the trace formulas for E_i, F_i",
            Suite::All => "every suite, with the center dimension table",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StatementCount {
    pub suite: Suite,
    pub statement: String,
    pub checks: usize,
    pub failed: usize,
}

/// `dim C^mu_nu` for positive-part `nu` next to the column-strict tableau count.
#[derive(Clone, Debug, Serialize)]
pub struct CenterRow {
    pub lambda: Partition,
    pub nu: Vec<usize>,
    pub dim: usize,
    pub column_strict: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub topics: Vec<String>,
    pub n: usize,
    pub window: IndexWindow,
    pub passed: bool,
    pub checks: usize,
    pub failed: usize,
    pub statements: Vec<StatementCount>,
    pub failures: Vec<CheckOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center_dimensions: Option<Vec<CenterRow>>,
}

/// The window used when none is given: wide enough for every composition of `n`.
pub fn default_window(n: usize) -> IndexWindow {
    IndexWindow::new(1, n.max(4) as i64).expect("non-empty window")
}

fn mus(m: usize) -> Vec<Composition> {
    Partition::all(m).iter().map(Partition::to_composition).collect()
}

fn pairs(m: usize, window: IndexWindow) -> Vec<(Composition, Composition)> {
    let nus = compositions_of(m, window);
    mus(m).into_iter().flat_map(|mu| nus.iter().map(move |nu| (mu.clone(), nu.clone()))).collect()
}

fn fallible(statement: &str, at: impl fmt::Display, f: impl FnOnce(&mut CheckReport) -> Result<()>) -> CheckReport {
    let mut report = CheckReport::default();
    if let Err(e) = f(&mut report) {
        report.record_error(statement, at, &e);
    }
    report
}

fn ideals_equal_at(m: usize, window: IndexWindow) -> CheckReport {
    pairs(m, window)
        .par_iter()
        .map(|(mu, nu)| {
            let name = "h-form and e-form generate the same ideal";
            fallible(name, format!("mu={mu}, nu={nu}"), |r| {
                let ok = ideals_equal(&tanisaki_generators_h(mu, nu)?, &tanisaki_generators_e(mu, nu)?, nu)?;
                r.record(name, format!("mu={mu}, nu={nu}"), ok, "");
                Ok(())
            })
        })
        .collect()
}

fn dims_at(m: usize, window: IndexWindow) -> CheckReport {
    let coinvariant: CheckReport = compositions_of(m, window)
        .par_iter()
        .map(|nu| {
            fallible("coinvariant dimensions", nu, |r| {
                let q = coinvariant_quotient(nu)?;
                let expected = factorial(m) / nu.parabolic_order();
                r.record("dim C_nu is the index of S_nu", nu, q.dim() as u64 == expected, format!("{} vs {expected}", q.dim()));
                let series = q.hilbert();
                let dims = series.coeffs();
                let symmetric = dims.iter().eq(dims.iter().rev());
                r.record("graded dimensions of C_nu are palindromic", nu, symmetric, format!("{dims:?}"));
                if nu.is_regular() {
                    r.record("dim C is n!", nu, q.dim() as u64 == factorial(m), "");
                }
                Ok(())
            })
        })
        .collect();
    let tanisaki: CheckReport = pairs(m, window)
        .par_iter()
        .map(|(mu, nu)| {
            let at = format!("mu={mu}, nu={nu}");
            fallible("Tanisaki dimensions", &at, |r| {
                let q = tanisaki_quotient(mu, nu, GeneratorForm::H)?;
                let count = count_column_strict(&transpose(mu), nu);
                r.record(
                    "dim C^mu_nu equals the column-strict tableau count",
                    &at,
                    q.dim() as u64 == count,
                    format!("{} vs {count}", q.dim()),
                );
                let nonzero = is_nonzero(mu, nu)?;
                r.record("C^mu_nu vanishes exactly when dominance fails", &at, (q.dim() > 0) == nonzero, "");
                Ok(())
            })
        })
        .collect();
    [coinvariant, tanisaki].into_iter().collect()
}

fn relations_at(m: usize, window: IndexWindow) -> CheckReport {
    let mut report = relation_report(m, window, None);
    for mu in mus(m) {
        report.merge(relation_report(m, window, Some(&mu)));
    }
    report.merge(oracle_equivalence_check(m, window));
    report
}

fn invariance_at(m: usize, window: IndexWindow) -> CheckReport {
    mus(m).iter().map(|mu| ideal_invariance_check(mu, window)).collect()
}

fn weights_at(m: usize, window: IndexWindow) -> CheckReport {
    mus(m)
        .iter()
        .map(|mu| {
            fallible("weight spaces", mu, |r| {
                for row in weight_dim_report(mu, window)? {
                    let at = format!("mu={mu}, nu={}", row.nu);
                    r.record("dim C^mu_nu equals the column-strict tableau count", &at, row.dim as u64 == row.column_strict, "");
                    r.record(
                        "top degree of C^mu_nu is d(mu,nu)",
                        &at,
                        row.top_degree == row.expected_top_degree,
                        format!("{:?} vs {:?}", row.top_degree, row.expected_top_degree),
                    );
                    r.record(
                        "top component of C^mu_nu has Kostka dimension",
                        &at,
                        row.top_dim as u64 == row.kostka,
                        format!("{} vs {}", row.top_dim, row.kostka),
                    );
                }
                Ok(())
            })
        })
        .collect()
}

fn hilbert_at(m: usize, window: IndexWindow) -> CheckReport {
    pairs(m, window)
        .par_iter()
        .map(|(mu, nu)| {
            let name = "Hilbert series equals the Kostka-Foulkes prediction";
            let at = format!("mu={mu}, nu={nu}");
            if !is_nonzero(mu, nu).unwrap_or(false) {
                return fallible(name, &at, |r| {
                    r.record(name, &at, tanisaki_quotient(mu, nu, GeneratorForm::H)?.dim() == 0, "zero algebra");
                    Ok(())
                });
            }
            fallible(name, &at, |r| {
                let c = hilbert_identity_check(mu, nu)?;
                r.record(name, &at, c.ok(), format!("computed {:?}, predicted {:?}", c.computed.coeffs(), c.predicted.coeffs()));
                Ok(())
            })
        })
        .collect()
}

/// Largest size at which the bimodule-linearity checks of delta run.
const DELTA_LINEARITY_MAX: usize = 3;

fn traces_at(m: usize, window: IndexWindow) -> CheckReport {
    let mut report = trace_formula_check(m, window);
    report.merge(triangle_check(m, window));
    report.merge(delta_check(m, window));
    if m <= DELTA_LINEARITY_MAX {
        report.merge(delta_linearity_check(m, window));
    }
    report
}

fn run_one(suite: Suite, m: usize, window: IndexWindow) -> CheckReport {
    match suite {
        Suite::Identities => verify_identity_suite(m, 2 * m),
        Suite::IdealsEqual => ideals_equal_at(m, window),
        Suite::Dims => dims_at(m, window),
        Suite::Relations => relations_at(m, window),
        Suite::IdealInvariance => invariance_at(m, window),
        Suite::Weights => weights_at(m, window),
        Suite::Hilbert => hilbert_at(m, window),
        Suite::Traces => traces_at(m, window),
        Suite::All => unreachable!("expanded by the caller"),
    }
}

/// The center dimension table for every `lambda |- m <= n` and every
/// composition of `m` into positive parts.
pub fn center_dimensions(n: usize) -> Result<Vec<CenterRow>> {
    let mut rows = Vec::new();
    for m in 1..=n {
        // trimming makes (2,1,0) and (0,2,1) both (2,1); keep one of each
        let shapes: BTreeSet<Composition> = compositions_of(m, IndexWindow::new(1, m as i64)?)
            .into_iter()
            .filter(|c| c.parts().iter().all(|&p| p > 0))
            .map(|c| Composition::from_parts(c.parts()))
            .collect();
        for lambda in Partition::all(m) {
            let mu = lambda.transpose().to_composition();
            for nu in &shapes {
                rows.push(CenterRow {
                    lambda: lambda.clone(),
                    nu: nu.parts().to_vec(),
                    dim: tanisaki_quotient(&mu, nu, GeneratorForm::H)?.dim(),
                    column_strict: count_column_strict(&lambda, nu),
                });
            }
        }
    }
    Ok(rows)
}

/// Runs `suite` for every size `1..=n` over `window` (default: [`default_window`]).
pub fn run_suite(suite: Suite, n: usize, window: Option<IndexWindow>) -> SuiteReport {
    let window = window.unwrap_or_else(|| default_window(n));
    let members: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut statements = Vec::new();
    let mut failures = Vec::new();
    let mut failed = 0;
    for &member in &members {
        let report: CheckReport = (1..=n).map(|m| run_one(member, m, window)).collect();
        for (statement, &checks) in &report.statements {
            statements.push(StatementCount { suite: member, statement: statement.clone(), checks, failed: report.failures_of(statement) });
        }
        failed += report.failures.len();
        failures.extend(report.failures);
    }
    let center_dimensions = (suite == Suite::All).then(|| {
        center_dimensions(n).unwrap_or_else(|e| {
            failed += 1;
            failures.push(CheckOutcome {
                statement: "center dimension table".into(),
                at: format!("n={n}"),
                passed: false,
                detail: e.to_string(),
            });
            Vec::new()
        })
    });
    if let Some(rows) = &center_dimensions {
        let bad: Vec<&CenterRow> = rows.iter().filter(|r| r.dim as u64 != r.column_strict).collect();
        statements.push(StatementCount {
            suite: Suite::All,
            statement: "center dimension equals the column-strict tableau count".into(),
            checks: rows.len(),
            failed: bad.len(),
        });
        failed += bad.len();
        failures.extend(bad.into_iter().map(|r| CheckOutcome {
            statement: "center dimension equals the column-strict tableau count".into(),
            at: format!("lambda={}, nu={:?}", r.lambda, r.nu),
            passed: false,
            detail: format!("{} vs {}", r.dim, r.column_strict),
        }));
    }
    failures.truncate(FAILURE_SAMPLE);
    SuiteReport {
        suite,
        topics: members.iter().map(|s| format!("{}: {}", s.name(), s.topic())).collect(),
        n,
        window,
        passed: failed == 0,
        checks: statements.iter().map(|s| s.checks).sum(),
        failed,
        statements,
        failures,
        center_dimensions,
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} for n <= {} on [{}, {}]", self.suite, self.n, self.window.lo, self.window.hi)?;
        for topic in &self.topics {
            writeln!(f, "  {topic}")?;
        }
        for s in &self.statements {
            let mark = if s.failed == 0 { "ok  " } else { "FAIL" };
            writeln!(f, "{mark} [{}] {}: {} checks, {} failed", s.suite, s.statement, s.checks, s.failed)?;
        }
        if let Some(rows) = &self.center_dimensions {
            writeln!(f, "center dimensions:")?;
            writeln!(f, "  {:<12} {:<12} {:>5} {:>14}", "lambda", "nu", "dim", "column-strict")?;
            for r in rows {
                let nu = r.nu.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                writeln!(f, "  {:<12} {:<12} {:>5} {:>14}", r.lambda.to_string(), format!("({nu})"), r.dim, r.column_strict)?;
            }
        }
        for fail in &self.failures {
            writeln!(f, "failure: {} at {}: {}", fail.statement, fail.at, fail.detail)?;
        }
        write!(f, "{}: {} checks, {} failed", if self.passed { "PASS" } else { "FAIL" }, self.checks, self.failed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn every_suite_passes_for_two() {
        let report = run_suite(Suite::All, 2, None);
        assert!(report.passed, "{report}");
        assert!(report.statements.iter().all(|s| s.checks > 0));
        for suite in Suite::EACH {
            assert!(report.statements.iter().any(|s| s.suite == suite), "{suite} ran nothing");
        }
    }

    #[test]
    fn center_table_for_three() {
        let rows = center_dimensions(3).unwrap();
        // partitions of 1, 2, 3 times positive compositions of 1, 2, 3
        assert_eq!(rows.len(), 1 + 2 * 2 + 3 * 4);
        let row = rows.iter().find(|r| r.lambda == Partition::new(vec![2, 1]) && r.nu == [1, 1, 1]).unwrap();
        assert_eq!((row.dim, row.column_strict), (3, 3));
        assert!(rows.iter().all(|r| r.dim as u64 == r.column_strict));
    }

    #[test]
    fn reports_are_deterministic() {
        let a = serde_json::to_string(&run_suite(Suite::Traces, 3, None)).unwrap();
        let b = serde_json::to_string(&run_suite(Suite::Traces, 3, None)).unwrap();
        assert_eq!(a, b);
    }
}
