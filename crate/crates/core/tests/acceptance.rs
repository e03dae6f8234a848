//! One PASS/FAIL line per acceptance criterion, with its runtime.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use tanisaki::glaction::{oracle_equivalence_check, relation_report};
use tanisaki::identities::verify_identity_suite;
use tanisaki::linalg::{Echelon, SparseVec};
use tanisaki::poly::int;
use tanisaki::quotient::{coinvariant_quotient, contains, is_nonzero, normal_form, tanisaki_quotient, GeneratorForm};
use tanisaki::report::CheckReport;
use tanisaki::shapes::{compositions_of, factorial, transpose};
use tanisaki::suites::{center_dimensions, run_suite, Suite, SuiteReport};
use tanisaki::tableaux::count_column_strict;
use tanisaki::traces::{trace_formula_check, delta_check, triangle_check};
use tanisaki::{Composition, IndexWindow, Partition, Poly};

fn width4() -> IndexWindow {
    IndexWindow::new(1, 4).unwrap()
}

fn summary(report: &CheckReport) -> (bool, String) {
    let mut detail = format!("{} checks", report.checks());
    if let Some(f) = report.failures.first() {
        detail += &format!(", {} failed; first: {} at {}: {}", report.failures.len(), f.statement, f.at, f.detail);
    }
    (report.passed(), detail)
}

fn suite_summary(report: &SuiteReport) -> (bool, String) {
    let mut detail = format!("{} checks", report.checks);
    if let Some(f) = report.failures.first() {
        detail += &format!(", {} failed; first: {} at {}: {}", report.failed, f.statement, f.at, f.detail);
    }
    (report.passed, detail)
}

fn up_to(n: usize, f: impl Fn(usize) -> CheckReport) -> CheckReport {
    (1..=n).map(f).collect()
}

fn small_example() -> (bool, String) {
    let mu = Composition::from_parts(&[1, 2, 1]);
    let q = tanisaki_quotient(&mu, &mu, GeneratorForm::H).unwrap();
    let x = |j: usize, e: usize| Poly::var(4, j).pow(e);
    let dim_ok = q.dim() == 5;
    let hilbert_ok = q.hilbert().coeffs() == [1, 0, 2, 0, 2];
    let zeros_ok = [x(0, 3), x(3, 3), &x(0, 1) * &x(3, 1)].iter().all(|f| contains(f, &q).unwrap());
    let mut span = Echelon::new(q.dim());
    let independent = [Poly::one(4), x(0, 1), x(0, 2), x(3, 1), x(3, 2)].iter().all(|f| {
        let coords = normal_form(f, &q).unwrap().coordinates();
        span.insert(coords.into_iter().enumerate().filter(|(_, c)| *c != int(0)).collect::<SparseVec>())
    });
    let ok = dim_ok && hilbert_ok && zeros_ok && independent;
    (ok, format!("dim {}, hilbert {:?}, relations vanish {zeros_ok}, monomials independent {independent}", q.dim(), q.hilbert().coeffs()))
}

fn coinvariant_dimensions() -> (bool, String) {
    let report = up_to(5, |m| {
        let mut r = CheckReport::default();
        for nu in compositions_of(m, IndexWindow::new(1, m as i64).unwrap()) {
            let q = coinvariant_quotient(&nu).unwrap();
            r.record("dim C_nu", &nu, q.dim() as u64 == factorial(m) / nu.parabolic_order(), "");
            let h = q.hilbert();
            r.record("palindromic", &nu, h.coeffs().iter().eq(h.coeffs().iter().rev()), "");
        }
        let q = coinvariant_quotient(&Composition::regular(m)).unwrap();
        r.record("dim C = n!", m, q.dim() as u64 == factorial(m), "");
        r
    });
    summary(&report)
}

/// Pairs of every partition `mu` of `m` with every composition in the window.
fn tanisaki_sweep(m: usize, window: IndexWindow, check: impl Fn(&Composition, &Composition, &mut CheckReport)) -> CheckReport {
    let mut r = CheckReport::default();
    for mu in Partition::all(m).iter().map(Partition::to_composition) {
        for nu in compositions_of(m, window) {
            check(&mu, &nu, &mut r);
        }
    }
    r
}

fn dimension_formula() -> (bool, String) {
    let check = |mu: &Composition, nu: &Composition, r: &mut CheckReport| {
        let dim = tanisaki_quotient(mu, nu, GeneratorForm::H).unwrap().dim();
        r.record("dim = column-strict count", format!("{mu}, {nu}"), dim as u64 == count_column_strict(&transpose(mu), nu), "");
    };
    let mut report = up_to(4, |m| tanisaki_sweep(m, width4(), check));
    // every pair at n = 5 in the window [1, 5]: 7 partitions times 126 compositions
    report.merge(tanisaki_sweep(5, IndexWindow::new(1, 5).unwrap(), check));
    summary(&report)
}

fn vanishing() -> (bool, String) {
    let report = up_to(4, |m| {
        tanisaki_sweep(m, width4(), |mu, nu, r| {
            let dim = tanisaki_quotient(mu, nu, GeneratorForm::H).unwrap().dim();
            r.record("vanishing = failure of dominance", format!("{mu}, {nu}"), (dim > 0) == is_nonzero(mu, nu).unwrap(), "");
        })
    });
    summary(&report)
}

fn relations() -> (bool, String) {
    let report = up_to(4, |m| {
        let mut r = relation_report(m, width4(), None);
        for mu in compositions_of(m, width4()) {
            r.merge(relation_report(m, width4(), Some(&mu)));
        }
        r
    });
    summary(&report)
}

fn delta_and_triangles() -> (bool, String) {
    summary(&up_to(4, |m| {
        let mut r = delta_check(m, width4());
        r.merge(triangle_check(m, width4()));
        r
    }))
}

fn center_table() -> (bool, String) {
    let rows = center_dimensions(4).unwrap();
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| r.dim as u64 != r.column_strict)
        .map(|r| format!("{} {:?}: {} vs {}", r.lambda, r.nu, r.dim, r.column_strict))
        .collect();
    (bad.is_empty(), format!("{} rows{}", rows.len(), if bad.is_empty() { String::new() } else { format!(", mismatches {bad:?}") }))
}

type Criterion = (&'static str, fn() -> (bool, String));

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("small example C^(1,2,1)_(1,2,1): dimension, Hilbert series, relations, independence", small_example),
        ("coinvariant dimensions n!/|S_nu| and palindromic Hilbert series, n <= 5", coinvariant_dimensions),
        ("dim C^mu_nu equals the column-strict tableau count, n <= 4 and all pairs at n = 5", dimension_formula),
        ("C^mu_nu is zero exactly when dominance fails, n <= 4", vanishing),
        ("h-form and e-form generate the same ideal, n <= 4", || suite_summary(&run_suite(Suite::IdealsEqual, 4, Some(width4())))),
        ("top degree d(mu,nu) and top dimension K_(lambda,nu), n <= 4", || suite_summary(&run_suite(Suite::Weights, 4, Some(width4())))),
        ("Hilbert series against Kostka-Foulkes polynomials, n <= 4", || suite_summary(&run_suite(Suite::Hilbert, 4, Some(width4())))),
        ("polynomial E_i, F_i agree with the basis formulas, n <= 4", || summary(&up_to(4, |m| oracle_equivalence_check(m, width4())))),
        ("commutator and Serre relations on sum C_nu and every sum C^mu_nu, n <= 4", relations),
        ("E_i, F_i preserve the Tanisaki ideals, n <= 4", || suite_summary(&run_suite(Suite::IdealInvariance, 4, Some(width4())))),
        ("delta is invertible with the stated inverse; triangle identities, n <= 4", delta_and_triangles),
        ("trace maps equal the E_i, F_i formulas, n <= 4", || summary(&up_to(4, |m| trace_formula_check(m, width4())))),
        ("symmetric-function identity suite, n <= 5, r <= 2n", || summary(&up_to(5, |m| verify_identity_suite(m, 2 * m)))),
        ("center dimension table equals column-strict counts, n <= 4", center_table),
    ];
    let mut failed = 0;
    let mut total = Duration::ZERO;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = run();
        let elapsed = start.elapsed();
        total += elapsed;
        if !ok {
            failed += 1;
        }
        println!("{} {:>2}. {name} [{elapsed:.2?}] {detail}", if ok { "PASS" } else { "FAIL" }, k + 1);
    }
    println!("{} of {} criteria passed in {total:.2?}", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
