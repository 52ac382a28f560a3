//! Thin command-line front end over the library. Subcommands map one-to-one
//! onto library entry points; all arithmetic stays exact and all output is
//! deterministic. Exit codes: 0 success, 1 verification failure, 2 usage or
//! domain error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use quadfactor::elliptic;
use quadfactor::error::Result;
use quadfactor::families::{self, Div22Case, SpecialQuadratic};
use quadfactor::models;
use quadfactor::quadrem::QuadrinomialSpec;
use quadfactor::rational::{self, parse_rational};
use quadfactor::search::{self, OracleOutcome};
use quadfactor::table;
use quadfactor::UniPoly;

#[derive(Parser)]
#[command(
    name = "quadfactor",
    version,
    about = "Exact reducibility analysis for quadrinomials x^n + x^m + x^k + a over Q"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all rational linear and quadratic factors of x^n + x^m + x^k + a
    Reduce {
        n: u32,
        m: u32,
        k: u32,
        #[arg(allow_hyphen_values = true)]
        a: String,
        /// Also run the interpolation oracle for a minimum-degree certificate
        #[arg(long)]
        certify: bool,
    },
    /// Print the curve model whose rational points index quadratic factors
    Curve {
        /// n m k for the quadratic-factor model, or n m with --t-model
        exponents: Vec<u32>,
        /// Use the substitution q = t p^2 for the triple (n, n-m, n-2m)
        #[arg(long)]
        t_model: bool,
    },
    /// Height-bounded sweep for rational points on a curve model
    Points {
        /// n m k for the quadratic-factor model, or n m with --t-model
        exponents: Vec<u32>,
        #[arg(long)]
        t_model: bool,
        #[arg(long, default_value_t = 1000)]
        height: u64,
    },
    /// Stream reducible members of a triple from its positive-rank curve
    Generate {
        n: u32,
        m: u32,
        k: u32,
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Instantiate a closed-form reducible family
    Family {
        #[command(subcommand)]
        family: FamilyCmd,
    },
    /// Minimum factor degree by exhaustive interpolation, with certificate
    Oracle {
        n: u32,
        m: u32,
        k: u32,
        #[arg(allow_hyphen_values = true)]
        a: String,
        /// Largest factor degree to search (default: the certifiable maximum)
        #[arg(long)]
        max_deg: Option<u32>,
    },
    /// Squarefree decomposition and maximum factor multiplicity
    Multiplicity {
        n: u32,
        m: u32,
        k: u32,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Re-verify every row of the minimum-degree factor table
    VerifyTable {
        /// Alternative JSONL dataset (defaults to the shipped table)
        #[arg(long)]
        data: Option<PathBuf>,
    },
    /// Scan the model discriminant polynomials for squarefreeness
    ConjectureScan {
        #[arg(long, default_value_t = 20)]
        max_n: u32,
    },
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Degree-4 quadratic-pair family for (m, k) at parameter p
    Deg4 {
        m: u32,
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
    },
    /// Shifted special-quadratic divisor family (minus22, plus22_a, plus22_b,
    /// plus33_a, plus33_b)
    Div22 {
        #[arg(long)]
        case: String,
        #[arg(long)]
        s: u32,
        #[arg(long, default_value_t = 0)]
        t: u32,
    },
    /// Scaled special quadratic dividing a triple in its vanishing class
    Scaled {
        n: u32,
        m: u32,
        k: u32,
        /// minus22, plus22 or plus33
        #[arg(long)]
        case: String,
        #[arg(long, default_value_t = 0)]
        s: u32,
    },
    /// x^10 + x^6 + x^2 - (u^5 + u^3 + u) with factor x^2 - u
    Deg10 {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
    },
    /// The (x^n + x^m - 1/3) product identity and its quadrinomial witness
    Redquad {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(json: bool, value: serde_json::Value, text: impl FnOnce()) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        text();
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Reduce { n, m, k, a, certify } => cmd_reduce(cli.json, *n, *m, *k, a, *certify),
        Command::Curve { exponents, t_model } => cmd_curve(cli.json, exponents, *t_model),
        Command::Points {
            exponents,
            t_model,
            height,
        } => cmd_points(cli.json, exponents, *t_model, *height),
        Command::Generate { n, m, k, count } => cmd_generate(cli.json, (*n, *m, *k), *count),
        Command::Family { family } => cmd_family(cli.json, family),
        Command::Oracle { n, m, k, a, max_deg } => cmd_oracle(cli.json, *n, *m, *k, a, *max_deg),
        Command::Multiplicity { n, m, k, a } => cmd_multiplicity(cli.json, *n, *m, *k, a),
        Command::VerifyTable { data } => cmd_verify_table(cli.json, data.as_deref()),
        Command::ConjectureScan { max_n } => cmd_conjecture_scan(cli.json, *max_n),
    }
}

fn witness_lines(factor: &UniPoly, cofactor: &UniPoly) -> String {
    format!("({}) * ({})", factor.render("x"), cofactor.render("x"))
}

fn cmd_reduce(json: bool, n: u32, m: u32, k: u32, a: &str, certify: bool) -> Result<ExitCode> {
    let a = parse_rational(a)?;
    let spec = QuadrinomialSpec::new(n, m, k, a)?;
    let f = spec.to_unipoly();
    let roots = search::linear_factors_of(&spec);
    let quadratics = search::quadratic_factors_of(&spec)?;
    let certificate = if certify {
        let bound = ((f.degree().unwrap_or(0) / 2) as u32).min(7).max(1);
        Some((bound, search::kronecker_factor(&f, bound)?))
    } else {
        None
    };

    let cert_json = certificate.as_ref().map(|(bound, outcome)| match outcome {
        OracleOutcome::Factor { factor, cofactor } => serde_json::json!({
            "min_factor_degree": factor.degree(),
            "factor": factor.render("x"),
            "cofactor": cofactor.render("x"),
            "searched_up_to": bound,
        }),
        OracleOutcome::NoFactorUpTo(b) => serde_json::json!({
            "min_factor_degree": serde_json::Value::Null,
            "irreducible": true,
            "searched_up_to": b,
        }),
    });
    let value = serde_json::json!({
        "spec": spec.render(),
        "linear_factors": roots
            .iter()
            .map(|(r, mult)| serde_json::json!({"root": rational::render(r), "multiplicity": mult}))
            .collect::<Vec<_>>(),
        "quadratic_factors": quadratics
            .iter()
            .map(|w| serde_json::json!({
                "p": rational::render(&w.p),
                "q": rational::render(&w.q),
                "factor": w.factor.render("x"),
                "cofactor": w.cofactor.render("x"),
            }))
            .collect::<Vec<_>>(),
        "certificate": cert_json,
    });
    emit(json, value, || {
        println!("f = {}", spec.render());
        if roots.is_empty() {
            println!("no rational root");
        }
        for (r, mult) in &roots {
            println!(
                "root {} (multiplicity {})",
                rational::render(r),
                mult
            );
        }
        if quadratics.is_empty() {
            println!("no quadratic factor found");
        }
        for w in &quadratics {
            println!("quadratic factor: {}", witness_lines(&w.factor, &w.cofactor));
        }
        if let Some((bound, outcome)) = &certificate {
            match outcome {
                OracleOutcome::Factor { factor, cofactor } => println!(
                    "min factor degree {}, factor {}, cofactor {}",
                    factor.degree().unwrap_or(0),
                    factor.render("x"),
                    cofactor.render("x")
                ),
                OracleOutcome::NoFactorUpTo(_) => println!(
                    "irreducible (no factor of degree <= {bound}, which certifies all degrees)"
                ),
            }
        }
    });
    Ok(ExitCode::SUCCESS)
}

fn model_for(exponents: &[u32], t_model: bool) -> Result<models::HyperellipticModel> {
    use quadfactor::error::Error;
    if t_model {
        match exponents {
            [n, m] => models::t_model(*n, *m),
            _ => Err(Error::Parse("--t-model takes exactly two exponents: n m".into())),
        }
    } else {
        match exponents {
            [n, m, k] => models::quadratic_factor_curve(*n, *m, *k),
            _ => Err(Error::Parse("expected three exponents: n m k".into())),
        }
    }
}

fn cmd_curve(json: bool, exponents: &[u32], t_model: bool) -> Result<ExitCode> {
    use quadfactor::error::Error;
    match model_for(exponents, t_model) {
        Ok(model) => {
            emit(json, model.json(), || {
                println!("{}", model.equation_display());
                println!("construction: {}", model.construction);
                let removed = model.removed_content();
                if removed != "1" {
                    println!("normalized content removed: {removed}");
                }
                println!("recovery: {}", model.back_sub_display());
            });
            Ok(ExitCode::SUCCESS)
        }
        // constraint loci that factor: print the family branch plus residual
        Err(Error::NotQuadraticInQ) => {
            let [n, m, k] = exponents else { unreachable!() };
            let case = models::square_content_cases(*n, *m, *k)?;
            let value = serde_json::json!({
                "note": case.note,
                "zero_branch": case.zero_branch.as_ref().map(|z| serde_json::json!({
                    "family": "p = 0 line",
                    "a_of_q": z.a_of_q.render("q"),
                    "factor": "x^2 + q",
                })),
                "residual": case.residual.json(),
            });
            emit(json, value, || {
                if let Some(z) = &case.zero_branch {
                    println!(
                        "family: every q gives a member with factor x^2 + q and a = {}",
                        z.a_of_q.render("q")
                    );
                }
                println!("residual model: {}", case.residual.equation_display());
                println!("note: {}", case.note);
            });
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => Err(e),
    }
}

fn cmd_points(json: bool, exponents: &[u32], t_model: bool, height: u64) -> Result<ExitCode> {
    let model = model_for(exponents, t_model)?;
    let report = search::search_points(&model, height)?;
    emit(json, report.json(), || {
        println!("{}", model.equation_display());
        if report.points.is_empty() {
            println!("no rational points up to height {height}");
        }
        for (x, y) in &report.points {
            println!("({}, {})", rational::render(x), rational::render(y));
        }
        println!(
            "exhaustive over {} of height <= {}",
            model.variable, report.exhaustive_up_to
        );
    });
    Ok(ExitCode::SUCCESS)
}

fn cmd_generate(json: bool, triple: (u32, u32, u32), count: usize) -> Result<ExitCode> {
    let generated = elliptic::generate_reducible(triple, count)?;
    let value = serde_json::Value::Array(generated.iter().map(|g| g.json()).collect());
    emit(json, value, || {
        for g in &generated {
            let w = &g.witness;
            println!(
                "a = {}: {} = {}   [from {}]",
                rational::render(&w.spec.a),
                w.spec.render(),
                witness_lines(&w.factor, &w.cofactor),
                g.source_point
            );
        }
    });
    Ok(ExitCode::SUCCESS)
}

fn family_witness(json: bool, w: &families::FamilyWitness) {
    emit(json, w.json(), || {
        println!("family {}", w.family_id);
        println!("f = {}", w.spec.render());
        println!("  = {}", witness_lines(&w.factor, &w.cofactor));
        if w.degenerate {
            println!("degenerate member: a = 0");
        }
        if let Some(flag) = w.coprime_exponents {
            println!("gcd(n, m, k) = 1: {flag}");
        }
    });
}

fn cmd_family(json: bool, family: &FamilyCmd) -> Result<ExitCode> {
    match family {
        FamilyCmd::Deg4 { m, k, p } => {
            let w = families::deg4_family(*m, *k, &parse_rational(p)?)?;
            family_witness(json, &w);
        }
        FamilyCmd::Div22 { case, s, t } => {
            let w = families::div22_family(Div22Case::parse(case)?, *s, *t)?;
            family_witness(json, &w);
        }
        FamilyCmd::Scaled { n, m, k, case, s } => {
            let w = families::scaled_member(SpecialQuadratic::parse(case)?, *s, *n, *m, *k)?;
            family_witness(json, &w);
        }
        FamilyCmd::Deg10 { u } => {
            let w = families::deg10_family(&parse_rational(u)?)?;
            family_witness(json, &w);
        }
        FamilyCmd::Redquad { n, m } => {
            let id = families::redquad_family(*n, *m)?;
            emit(json, id.json(), || {
                println!(
                    "({}) * ({})",
                    id.factor.render("x"),
                    id.cofactor.render("x")
                );
                println!("  = {}", id.product.render("x"));
                if id.collision {
                    println!("exponent collision (n = 2m): the product is not a quadrinomial");
                }
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(
    json: bool,
    n: u32,
    m: u32,
    k: u32,
    a: &str,
    max_deg: Option<u32>,
) -> Result<ExitCode> {
    let a = parse_rational(a)?;
    let spec = QuadrinomialSpec::new(n, m, k, a)?;
    let f = spec.to_unipoly();
    let bound = max_deg.unwrap_or_else(|| ((f.degree().unwrap_or(0) / 2) as u32).min(7).max(1));
    let min_degree = search::min_factor_degree(&f, bound)?;
    let factor = match min_degree {
        Some(d) => search::kronecker_factor_of_degree(&f, d)?,
        None => None,
    };
    let value = serde_json::json!({
        "spec": spec.render(),
        "searched_up_to": bound,
        "min_factor_degree": min_degree,
        "factor": factor.as_ref().map(|(g, _)| g.render("x")),
        "cofactor": factor.as_ref().map(|(_, h)| h.render("x")),
    });
    emit(json, value, || {
        println!("f = {}", spec.render());
        match (min_degree, &factor) {
            (Some(d), Some((g, h))) => {
                println!("min factor degree {d}");
                println!("{}", witness_lines(g, h));
            }
            (Some(d), None) => println!("min factor degree {d}"),
            (None, _) => println!("no factor of degree <= {bound} (exhaustive certificate)"),
        }
    });
    Ok(ExitCode::SUCCESS)
}

fn cmd_multiplicity(json: bool, n: u32, m: u32, k: u32, a: &str) -> Result<ExitCode> {
    let a = parse_rational(a)?;
    let spec = QuadrinomialSpec::new(n, m, k, a)?;
    let (max, parts) = families::multiplicity_profile(&spec);
    let value = serde_json::json!({
        "spec": spec.render(),
        "max_multiplicity": max,
        "parts": parts
            .iter()
            .map(|(g, e)| serde_json::json!({"factor": g.render("x"), "multiplicity": e}))
            .collect::<Vec<_>>(),
    });
    emit(json, value, || {
        println!("f = {}", spec.render());
        println!("max multiplicity {max}");
        for (g, e) in &parts {
            println!("multiplicity {e}: {}", g.render("x"));
        }
    });
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_table(json: bool, data: Option<&std::path::Path>) -> Result<ExitCode> {
    let rows = match data {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| quadfactor::error::Error::TableData(format!("{e}")))?;
            table::parse_rows(&text)?
        }
        None => table::builtin_rows(),
    };
    let reports = table::verify_rows(&rows)?;
    let all_pass = reports.iter().all(|r| r.pass);
    let value = serde_json::json!({
        "rows": reports.iter().map(|r| r.json()).collect::<Vec<_>>(),
        "pass": all_pass,
    });
    emit(json, value, || {
        for r in &reports {
            println!("{}", r.display_line());
        }
        println!(
            "{}/{} rows pass",
            reports.iter().filter(|r| r.pass).count(),
            reports.len()
        );
    });
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_conjecture_scan(json: bool, max_n: u32) -> Result<ExitCode> {
    let mut checked = 0u32;
    let mut counterexamples = Vec::new();
    for n in 3..=max_n {
        for m in 1..=(n.saturating_sub(1) / 2) {
            if n <= 2 * m {
                continue;
            }
            checked += 1;
            if !families::conjecture_fmn_squarefree(m, n)? {
                counterexamples.push((m, n));
            }
        }
    }
    let value = serde_json::json!({
        "max_n": max_n,
        "checked": checked,
        "counterexamples": counterexamples
            .iter()
            .map(|(m, n)| serde_json::json!({"m": m, "n": n}))
            .collect::<Vec<_>>(),
    });
    emit(json, value, || {
        println!("checked {checked} pairs (m, n) with n <= {max_n}, n > 2m");
        if counterexamples.is_empty() {
            println!("all discriminant polynomials squarefree");
        } else {
            for (m, n) in &counterexamples {
                println!("POTENTIAL COUNTEREXAMPLE: (m, n) = ({m}, {n}) not squarefree");
            }
        }
    });
    Ok(ExitCode::SUCCESS)
}
