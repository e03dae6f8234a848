use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tanisaki::glaction::{apply_operator_family, parse_op_word, AlgebraKind, WeightFamily};
use tanisaki::json::poly_from_json;
use tanisaki::quotient::{basis, coinvariant_generators, graded_basis, tanisaki_generators_e, tanisaki_generators_h, GeneratorForm};
use tanisaki::shapes::{transpose, DEFAULT_N_MAX};
use tanisaki::suites::{run_suite, Suite};
use tanisaki::tableaux::{count_column_strict, enumerate_column_strict, enumerate_semistandard, kostka, kostka_foulkes};
use tanisaki::{Composition, Error, IndexWindow, Partition, Poly};

/// Largest `n` for `verify` unless COINV_NMAX says otherwise.
const SUITE_N_MAX: usize = 5;

#[derive(Parser)]
#[command(name = "tanisaki", version, about = "Partial coinvariant algebras, Tanisaki quotients and the gl action on them")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

/// `mu` and `nu` as comma lists with an optional `@offset` (default 1).
#[derive(Args)]
struct Weights {
    /// Composition mu, or `regular` for (1,...,1); omit for the coinvariant algebra C_nu.
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// Composition nu.
    #[arg(long, allow_hyphen_values = true)]
    nu: String,
}

#[derive(Subcommand)]
enum Command {
    /// Generators of the Tanisaki ideal.
    Present {
        #[command(flatten)]
        weights: Weights,
        #[arg(long, default_value = "h")]
        form: String,
    },
    /// Dimension, with the column-strict tableau count next to it.
    Dim {
        #[command(flatten)]
        weights: Weights,
    },
    /// Graded dimensions, indexed by the doubled degree.
    Hilbert {
        #[command(flatten)]
        weights: Weights,
    },
    /// Normal-form basis, optionally of one (doubled) degree.
    Basis {
        #[command(flatten)]
        weights: Weights,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Applies a word in E_i, F_i, D_i (rightmost first) to an element at weight nu.
    Act {
        #[arg(long)]
        op: String,
        #[command(flatten)]
        weights: Weights,
        /// Expected size of nu.
        #[arg(long)]
        n: Option<usize>,
        /// Index window as `lo,hi`.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        #[arg(long, default_value = "h")]
        form: String,
        /// Element as a JSON term list; defaults to 1.
        #[arg(long)]
        elem: Option<String>,
    },
    /// Kostka number K_{lam,nu}.
    Kostka {
        #[arg(long)]
        lam: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// Kostka-Foulkes polynomial K_{lam,mu}(t).
    Kf {
        #[arg(long)]
        lam: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Column-strict (or semistandard) tableaux of shape lam and type nu.
    Tableaux {
        #[arg(long)]
        lam: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long)]
        semistandard: bool,
    },
    /// Runs a verification suite for every size up to n.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
}

enum Failure {
    BadInput(String),
    Internal(String),
    Window(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonTerminating { .. } | Error::NoSolution | Error::NotDivisible => Failure::Internal(e.to_string()),
            Error::WindowOverflow { .. } => Failure::Window(e.to_string()),
            _ => Failure::BadInput(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn n_max() -> Result<Option<usize>, Failure> {
    match std::env::var("COINV_NMAX") {
        Ok(v) => v.parse().map(Some).map_err(|_| Failure::BadInput(format!("COINV_NMAX={v:?} is not a number"))),
        Err(_) => Ok(None),
    }
}

fn check_n(n: usize, default: usize) -> Outcome {
    let limit = n_max()?.unwrap_or(default);
    if n > limit {
        return Err(Failure::BadInput(format!("n = {n} exceeds the limit {limit} (set COINV_NMAX to raise it)")));
    }
    Ok(())
}

fn composition(s: &str) -> Result<Composition, Failure> {
    Ok(s.parse::<Composition>()?)
}

fn partition(s: &str) -> Result<Partition, Failure> {
    Ok(s.parse::<Partition>()?)
}

fn form(s: &str) -> Result<GeneratorForm, Failure> {
    Ok(s.parse::<GeneratorForm>()?)
}

fn window(s: &str) -> Result<IndexWindow, Failure> {
    let bad = || Failure::BadInput(format!("window must be lo,hi, got {s:?}"));
    let (lo, hi) = s.split_once(',').ok_or_else(bad)?;
    let lo = lo.trim().parse().map_err(|_| bad())?;
    let hi = hi.trim().parse().map_err(|_| bad())?;
    Ok(IndexWindow::new(lo, hi)?)
}

impl Weights {
    fn nu(&self) -> Result<Composition, Failure> {
        let nu = composition(&self.nu)?;
        check_n(nu.size(), DEFAULT_N_MAX)?;
        Ok(nu)
    }

    fn mu(&self, n: usize) -> Result<Option<Composition>, Failure> {
        match self.mu.as_deref() {
            None => Ok(None),
            Some("regular") => Ok(Some(Composition::regular(n))),
            Some(s) => {
                let mu = composition(s)?;
                if mu.size() != n {
                    return Err(Failure::BadInput(format!("mu has size {} but nu has size {n}", mu.size())));
                }
                Ok(Some(mu))
            }
        }
    }

    fn kind(&self, form: GeneratorForm) -> Result<(AlgebraKind, Composition), Failure> {
        let nu = self.nu()?;
        let kind = match self.mu(nu.size())? {
            None => AlgebraKind::Coinvariant,
            Some(mu) => AlgebraKind::Tanisaki(mu, form),
        };
        Ok((kind, nu))
    }
}

fn emit(output: Output, value: Value, text: String) {
    let body = match output {
        Output::Json => serde_json::to_string_pretty(&value).expect("serializable"),
        Output::Text => text,
    };
    // a closed pipe (e.g. `| head`) is not an error worth a panic
    if let Err(e) = writeln!(std::io::stdout().lock(), "{body}") {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
        }
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn run(cli: Cli) -> Outcome {
    let out = cli.output;
    match cli.command {
        Command::Present { weights, form: f } => {
            let f = form(&f)?;
            let nu = weights.nu()?;
            let mu = weights.mu(nu.size())?.unwrap_or_else(|| Composition::regular(nu.size()));
            // for regular mu the ideal is I_nu, presented by e_1..e_n of all variables
            let gens = match f {
                _ if mu.is_regular() => coinvariant_generators(&nu),
                GeneratorForm::H => tanisaki_generators_h(&mu, &nu)?,
                GeneratorForm::E => tanisaki_generators_e(&mu, &nu)?,
            };
            let text = gens.iter().map(Poly::to_string).collect::<Vec<_>>().join("\n");
            emit(out, json!({ "mu": mu, "nu": nu, "form": f, "generators": gens }), text);
        }
        Command::Dim { weights } => {
            let (kind, nu) = weights.kind(GeneratorForm::H)?;
            let dim = kind.quotient(&nu)?.dim();
            match &kind {
                AlgebraKind::Coinvariant => emit(out, json!({ "nu": nu, "dim": dim }), dim.to_string()),
                AlgebraKind::Tanisaki(mu, _) => {
                    let count = count_column_strict(&transpose(mu), &nu);
                    let ok = dim as u64 == count;
                    let verdict = if ok { "OK" } else { "MISMATCH" };
                    emit(
                        out,
                        json!({ "mu": mu, "nu": nu, "dim": dim, "column_strict": count, "ok": ok }),
                        format!("{dim}\ncolumn-strict tableaux: {count}\n{verdict}"),
                    );
                    if !ok {
                        return Err(Failure::Verification(format!("dim {dim} but {count} column-strict tableaux")));
                    }
                }
            }
        }
        Command::Hilbert { weights } => {
            let (kind, nu) = weights.kind(GeneratorForm::H)?;
            let series = kind.quotient(&nu)?.hilbert();
            emit(out, json!({ "nu": nu, "hilbert": series }), format!("[{}]  {series}", join(series.coeffs())));
        }
        Command::Basis { weights, degree } => {
            let (kind, nu) = weights.kind(GeneratorForm::H)?;
            let q = kind.quotient(&nu)?;
            let elements = match degree {
                Some(d) => graded_basis(&q, d),
                None => basis(&q),
            };
            let reps: Vec<&Poly> = elements.iter().map(|z| z.rep()).collect();
            let text = reps.iter().map(|p| format!("{} (degree {})", p, p.degree())).collect::<Vec<_>>().join("\n");
            emit(out, json!({ "algebra": q.label(), "basis": reps }), text);
        }
        Command::Act { op, weights, n, window: w, form: f, elem } => {
            let word = parse_op_word(&op)?;
            let (kind, nu) = weights.kind(form(&f)?)?;
            let size = nu.size();
            if let Some(n) = n {
                if n != size {
                    return Err(Failure::BadInput(format!("--n {n} but nu has size {size}")));
                }
            }
            let w = match w {
                Some(w) => window(&w)?,
                None => IndexWindow::new(nu.lo().min(1), nu.hi().max(size as i64) + 1)?,
            };
            let f = match elem {
                Some(s) => {
                    let value: Value = serde_json::from_str(&s).map_err(|e| Failure::BadInput(format!("bad element JSON: {e}")))?;
                    poly_from_json(&value, size)?
                }
                None => Poly::one(size),
            };
            let mut family = WeightFamily::new(size, w, kind);
            family.insert_poly(&nu, &f)?;
            let image = apply_operator_family(&word, &family)?;
            let text = if image.is_zero() {
                "0".to_string()
            } else {
                image.components().iter().map(|(nu, z)| format!("{nu}: {}", z.rep())).collect::<Vec<_>>().join("\n")
            };
            emit(out, serde_json::to_value(&image).expect("serializable"), text);
        }
        Command::Kostka { lam, nu } => {
            let (lam, nu) = (partition(&lam)?, composition(&nu)?);
            let k = kostka(&lam, &nu);
            emit(out, json!({ "lambda": lam, "nu": nu, "kostka": k }), k.to_string());
        }
        Command::Kf { lam, mu } => {
            let (lam, mu) = (partition(&lam)?, composition(&mu)?);
            if lam.size() != mu.size() {
                return Err(Failure::BadInput(format!("sizes differ: {} and {}", lam.size(), mu.size())));
            }
            let kf = kostka_foulkes(&lam, &mu);
            emit(out, json!({ "lambda": lam, "mu": mu, "kostka_foulkes": kf }), kf.to_string());
        }
        Command::Tableaux { lam, nu, semistandard } => {
            let (lam, nu) = (partition(&lam)?, composition(&nu)?);
            let tableaux = if semistandard { enumerate_semistandard(&lam, &nu) } else { enumerate_column_strict(&lam, &nu) };
            let text = tableaux
                .iter()
                .map(|t| t.rows.iter().map(|r| join(r)).collect::<Vec<_>>().join(" / "))
                .chain([format!("{} tableaux", tableaux.len())])
                .collect::<Vec<_>>()
                .join("\n");
            emit(out, json!({ "lambda": lam, "nu": nu, "count": tableaux.len(), "tableaux": tableaux }), text);
        }
        Command::Verify { suite, n, window: w } => {
            let suite: Suite = suite.parse()?;
            check_n(n, SUITE_N_MAX)?;
            let w = w.as_deref().map(window).transpose()?;
            let start = Instant::now();
            let report = run_suite(suite, n, w);
            eprintln!("{} finished in {:.2?}", suite, start.elapsed());
            let failed = report.failed;
            emit(out, serde_json::to_value(&report).expect("serializable"), report.to_string());
            if failed > 0 {
                return Err(Failure::Verification(format!("{failed} checks failed")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| {
        let code = if e.use_stderr() { 2 } else { 0 };
        let _ = e.print();
        std::process::exit(code);
    });
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Verification(m) => (1, m),
                Failure::BadInput(m) => (2, m),
                Failure::Internal(m) => (3, format!("internal invariant broken: {m}")),
                Failure::Window(m) => (4, m),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
