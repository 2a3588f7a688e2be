//! Argument parsing and the subcommands. Exit codes: 0 success, 1 a check
//! failed, 2 usage error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::exactmath::Rational;
use crate::mrbsym::{bsym_idempotents, bsym_zetas};
use crate::peakcore::{peak_idempotents, solve_zeta_r};
use crate::reptheory::{
    bsym_cartan, bsym_model, check_system_in, conjecture_matrix, peak_cartan, quiver, type_a_cartan, CartanMatrix,
};
use crate::symcore::{check_system, product_fast, type_a_idempotents, zassenhaus, Elem, System};

use super::checks::{run_checks, Scope};
use super::render::{element_latex, ElementJson, MatrixJson};
use super::report::{RunReport, Section};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "peakalg", version, about = "Idempotents and q-Cartan matrices of descent and peak algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "level")]
    Level,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "peak")]
    Peak,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Zassenhaus-type elements on the S basis.
    Zeta {
        #[arg(long, value_enum, ignore_case = true)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// A complete system of orthogonal idempotents, with its checks.
    Idempotents {
        #[arg(long, value_enum, ignore_case = true)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The q-Cartan matrix (rows and columns in decreasing label order).
    Cartan {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, value_enum, ignore_case = true, default_value = "peak")]
        family: Family,
        #[arg(long, value_enum, default_value = "latex")]
        format: Format,
    },
    /// Arrows of the quiver, source -> target with multiplicity.
    Quiver {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, value_enum, ignore_case = true, default_value = "peak")]
        family: Family,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The combinatorial matrix built from cycle transforms, compared with
    /// the computed q-Cartan matrix at t = 1.
    Conjecture {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Weight each rearrangement by t^{(lost parts)/2}.
        #[arg(long)]
        graded: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Recomputes the published tables and every property check.
    VerifyPaper {
        /// Comma-separated subset of tables,typeA,typeB,peak,bridge,ano,conjecture.
        #[arg(long, value_delimiter = ',')]
        sections: Vec<Section>,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

struct Usage(String);

type Outcome = Result<(String, i32), Usage>;

/// Parses `args` (program name first), runs the command and writes its
/// output; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Zeta { kind, n, r, format } => zeta(kind, n, r, format),
        Command::Idempotents { family, n, r, format } => idempotents(family, n, r, format),
        Command::Cartan { n, r, family, format } => {
            let (name, m) = cartan(family, n, r)?;
            Ok((render_matrix(&name, &m, format), EXIT_OK))
        }
        Command::Quiver { n, r, family, format } => {
            let (_, m) = cartan(family, n, r)?;
            Ok((render_quiver(&m, format), EXIT_OK))
        }
        Command::Conjecture { n, r, graded, format } => conjecture(n, r, graded, format),
        Command::VerifyPaper { sections, max_n, jobs, format } => verify(sections, max_n, jobs, format),
    }
}

fn need_n(n: usize) -> Result<(), Usage> {
    if n == 0 {
        Err(Usage("--n must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn need_r(r: Option<usize>) -> Result<usize, Usage> {
    match r {
        Some(r) if r >= 2 => Ok(r),
        Some(_) => Err(Usage("--r must be at least 2".into())),
        None => Err(Usage("--r is required here".into())),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializes");
    s.push('\n');
    s
}

fn render_elements(named: &[(String, Elem<Rational>)], format: Format) -> String {
    match format {
        Format::Json => {
            let m: BTreeMap<&str, ElementJson> =
                named.iter().map(|(k, e)| (k.as_str(), ElementJson::new(e))).collect();
            json(&m)
        }
        Format::Latex => named.iter().map(|(k, e)| format!("{k} = {}\n", element_latex(e))).collect(),
        Format::Text => named.iter().map(|(k, e)| format!("{k} = {e}\n")).collect(),
    }
}

fn zeta(kind: Kind, n: usize, r: Option<usize>, format: Format) -> Outcome {
    need_n(n)?;
    let named = match kind {
        Kind::A => vec![(format!("zeta_{n}"), zassenhaus(n)[n].clone())],
        Kind::B => {
            let z = bsym_zetas(n);
            vec![
                (format!("zeta_{n}"), z.zeta[n].clone()),
                (format!("zeta~_{n}"), z.tilde[n].clone()),
            ]
        }
        Kind::Level => {
            let r = need_r(r)?;
            vec![(format!("zeta^({r})_{n}"), solve_zeta_r(n, r)[n].clone())]
        }
    };
    Ok((render_elements(&named, format), EXIT_OK))
}

#[derive(Serialize)]
struct IdempotentsJson {
    family: String,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    idempotent: bool,
    orthogonal: bool,
    complete: bool,
    elements: Vec<LabeledElement>,
}

#[derive(Serialize)]
struct LabeledElement {
    label: String,
    element: ElementJson,
}

fn idempotents(family: Family, n: usize, r: Option<usize>, format: Format) -> Outcome {
    need_n(n)?;
    let (sys, r): (Result<System<Rational>, _>, Option<usize>) = match family {
        Family::A => (type_a_idempotents(n), None),
        Family::B => (bsym_idempotents(n), None),
        Family::Peak => {
            let r = need_r(r)?;
            (peak_idempotents(n, r), Some(r))
        }
    };
    let sys = match sys {
        Ok(s) => s,
        Err(e) => return Ok((format!("{e}\n"), EXIT_FAILED)),
    };
    let rep = if family == Family::B && n >= 6 {
        match bsym_model(n).and_then(|m| check_system_in(&m, &sys)) {
            Ok(r) => r,
            Err(e) => return Ok((format!("{e}\n"), EXIT_FAILED)),
        }
    } else {
        let elems: Vec<Elem<Rational>> = sys.iter().map(|(_, e)| e.clone()).collect();
        check_system(&elems, &Elem::s(n), |a, b| product_fast(a, b).expect("same weight"))
    };
    let code = if rep.all() { EXIT_OK } else { EXIT_FAILED };
    let text = match format {
        Format::Json => json(&IdempotentsJson {
            family: format!("{family:?}"),
            n,
            r,
            idempotent: rep.idempotent,
            orthogonal: rep.orthogonal,
            complete: rep.complete,
            elements: sys
                .iter()
                .map(|(l, e)| LabeledElement {
                    label: l.to_string(),
                    element: ElementJson::new(e),
                })
                .collect(),
        }),
        _ => {
            let named: Vec<(String, Elem<Rational>)> =
                sys.iter().map(|(l, e)| (format!("e_{{{l}}}"), e.clone())).collect();
            let mut s = render_elements(&named, format);
            s.push_str(&format!(
                "{} idempotents; idempotent: {}, orthogonal: {}, complete: {}\n",
                sys.len(),
                rep.idempotent,
                rep.orthogonal,
                rep.complete
            ));
            s
        }
    };
    Ok((text, code))
}

fn cartan(family: Family, n: usize, r: usize) -> Result<(String, CartanMatrix), Usage> {
    need_n(n)?;
    let fail = |e: crate::symcore::AlgebraError| Usage(e.to_string());
    Ok(match family {
        Family::A => (format!("C_{n}"), type_a_cartan(n).map_err(fail)?.matrix()),
        Family::B => (format!("C^B_{n}"), bsym_cartan(n).map_err(fail)?.matrix()),
        Family::Peak => {
            need_r(Some(r))?;
            (format!("C_{n}^{{({r})}}"), peak_cartan(n, r).map_err(fail)?.1.matrix())
        }
    })
}

fn render_matrix(name: &str, m: &CartanMatrix, format: Format) -> String {
    match format {
        Format::Json => json(&MatrixJson::new(name, m)),
        Format::Latex => m.to_latex(name),
        Format::Text => m.to_text(),
    }
}

#[derive(Serialize)]
struct Arrow {
    source: String,
    target: String,
    multiplicity: i64,
}

fn render_quiver(m: &CartanMatrix, format: Format) -> String {
    let arrows: Vec<Arrow> = quiver(m)
        .into_iter()
        .map(|(s, t, k)| Arrow {
            source: s.to_string(),
            target: t.to_string(),
            multiplicity: k,
        })
        .collect();
    match format {
        Format::Json => json(&arrows),
        _ => arrows
            .iter()
            .map(|a| format!("{} -> {} x{}\n", a.source, a.target, a.multiplicity))
            .collect(),
    }
}

fn conjecture(n: usize, r: usize, graded: bool, format: Format) -> Outcome {
    need_n(n)?;
    need_r(Some(r))?;
    let c = conjecture_matrix(n, r, graded);
    let computed = peak_cartan(n, r).map_err(|e| Usage(e.to_string()))?.1.matrix();
    let agree = if graded { c == computed } else { c.at_one() == computed.at_one() };
    let mut s = render_matrix(&format!("K_{n}^{{({r})}}"), &c, format);
    if format != Format::Json {
        s.push_str(&format!(
            "{} the computed q-Cartan matrix{}\n",
            if agree { "agrees with" } else { "differs from" },
            if graded { "" } else { " at t = 1" }
        ));
    }
    Ok((s, if agree { EXIT_OK } else { EXIT_FAILED }))
}

fn verify(sections: Vec<Section>, max_n: usize, jobs: usize, format: Format) -> Outcome {
    let mut scope = if sections.is_empty() {
        Scope::default()
    } else {
        Scope::with_sections(&sections)
    };
    scope.max_n = max_n;
    scope.jobs = jobs.max(1);
    let report = verify_report(&scope);
    let text = match format {
        Format::Json => report.to_json() + "\n",
        _ => report.to_text(),
    };
    Ok((text, if report.ok() { EXIT_OK } else { EXIT_FAILED }))
}

/// Runs the battery for `scope`; the parameters recorded are exactly those
/// that determine the checks, so reports from different `jobs` agree.
pub fn verify_report(scope: &Scope) -> RunReport {
    let start = Instant::now();
    let checks = run_checks(scope);
    let mut params = BTreeMap::new();
    let names: Vec<&str> = scope.sections.iter().map(|s| s.name()).collect();
    params.insert("sections".to_string(), names.join(","));
    params.insert("max_n".to_string(), scope.max_n.to_string());
    let mut report = RunReport::new("verify-paper", params, checks);
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    report
}
