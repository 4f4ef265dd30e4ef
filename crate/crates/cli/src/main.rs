use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use liedim::counterexamples::{build_ln, verify_with_degree};
use liedim::exactlinalg::{quotient_structure, Int, SparseVec};
use liedim::freealgebra::LyndonBasis;
use liedim::presentation::{instantiate_metabelian, parse, preabelianize, Presentation};
use liedim::series::{
    check_corollary, check_lemma2, check_sjogren, check_theorem1, quotient_report, sjogren, CheckOutcome,
    NilpotentQuotient,
};

/// Lower central series and dimension subrings of finitely presented Lie
/// rings, computed exactly.
#[derive(Parser)]
#[command(name = "liedim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Claim {
    Theorem1,
    Corollary,
    Lemma2,
    Sjogren,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a presentation and print its canonical form.
    Parse { file: PathBuf },
    /// Rewrite a presentation in pre-abelian form.
    Preabelianize {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Report delta_n / gamma_n for n = 1..=N.
    Series {
        file: PathBuf,
        #[arg(long = "max-n")]
        max_n: usize,
        /// Nilpotency class of the quotient to work in [default: N-1].
        #[arg(long)]
        class: Option<usize>,
        /// Add the relators forcing [[L, L], [L, L]] = 0 first.
        #[arg(long)]
        metabelian: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print a basis of delta_n in Lyndon-bracket coordinates.
    Delta {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        class: usize,
    },
    /// Check one of the containment claims.
    Check {
        #[arg(value_enum)]
        claim: Claim,
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        class: Option<usize>,
    },
    /// Build the ring L(n) and optionally certify its properties.
    Counterexample {
        #[arg(long)]
        n: usize,
        /// Cut-off degree for the infinite relator families [default: 2n-4].
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        verify: bool,
        #[arg(long = "emit-presentation")]
        emit_presentation: Option<PathBuf>,
        /// Leave timing out of the certificate so output is reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Print the constant c_n.
    Sjogren {
        #[arg(long)]
        n: usize,
    },
}

/// What a successful run found: `Holds` exits 0, `Violated` exits 1.
enum Verdict {
    Holds,
    Violated,
}

type CliResult = Result<(String, Verdict), String>;

fn read_presentation(path: &Path) -> Result<Presentation, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_output(path: &Path, text: &str) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn default_class(n: usize) -> usize {
    n.saturating_sub(1).max(1)
}

/// Renders a Lie coordinate vector with bracket labels.
fn render_vector(basis: &LyndonBasis, names: &[String], v: &SparseVec) -> String {
    let mut out = String::new();
    for (i, (c, x)) in v.iter().enumerate() {
        let label = bracket_label(basis, names, *c);
        match (i, x.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = x.abs();
        if !a.is_one() {
            let _ = write!(out, "{a}*");
        }
        out.push_str(&label);
    }
    out
}

fn bracket_label(basis: &LyndonBasis, names: &[String], i: usize) -> String {
    fn go(w: &liedim::freealgebra::LyndonWord, names: &[String]) -> String {
        match w.std_factorization() {
            None => names[w.word().letters()[0] as usize].clone(),
            Some((u, v)) => format!("[{}, {}]", go(&u, names), go(&v, names)),
        }
    }
    go(&basis.words()[i], names)
}

fn outcome(label: &str, c: &CheckOutcome, basis: &LyndonBasis, names: &[String]) -> (String, Verdict) {
    match &c.witness {
        None => (format!("{label}: holds\n"), Verdict::Holds),
        Some(w) => (format!("{label}: fails\nwitness: {}\n", render_vector(basis, names, w)), Verdict::Violated),
    }
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Parse { file } => Ok((read_presentation(&file)?.serialize(), Verdict::Holds)),
        Command::Preabelianize { file, output } => {
            let p = preabelianize(&read_presentation(&file)?);
            let form = p.preabelian().expect("just computed");
            let e: Vec<String> = form.e.iter().map(Int::to_string).collect();
            let mut text = format!("# pre-abelian exponents: {}\n", e.join(" "));
            for (name, row) in p.generators().iter().zip(&form.substitution) {
                let v: SparseVec = row.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                let basis = LyndonBasis::new(p.rank(), 1);
                let _ = writeln!(text, "# old {name} = {}", render_vector(&basis, p.generators(), &v));
            }
            text.push_str(&p.serialize());
            match output {
                Some(path) => {
                    write_output(&path, &text)?;
                    Ok((String::new(), Verdict::Holds))
                }
                None => Ok((text, Verdict::Holds)),
            }
        }
        Command::Series { file, max_n, class, metabelian, format } => {
            if max_n == 0 {
                return Err("--max-n must be at least 1".into());
            }
            let class = class.unwrap_or(default_class(max_n));
            let mut p = read_presentation(&file)?;
            if metabelian {
                p = instantiate_metabelian(&p, class);
            }
            let report = quotient_report(&p, max_n, class).map_err(|e| e.to_string())?;
            let verdict = if report.all_checks_hold() && report.entries.iter().all(|e| !metabelian || e.checks.theorem1) {
                Verdict::Holds
            } else {
                Verdict::Violated
            };
            let text = match format {
                Format::Json => report.to_json() + "\n",
                Format::Text => report.to_text(),
            };
            Ok((text, verdict))
        }
        Command::Delta { file, n, class } => {
            let p = read_presentation(&file)?;
            if n == 0 || class + 1 < n {
                return Err(format!("need 1 ≤ n ≤ class + 1 (got n = {n}, class = {class})"));
            }
            let q = NilpotentQuotient::new(&p, class).map_err(|e| e.to_string())?;
            let delta = q.delta(n).map_err(|e| e.to_string())?;
            let quotient = quotient_structure(&delta, &q.gamma(n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let mut out = format!(
                "delta_{n} in class {class}: rank {} over {} Lyndon brackets\nquotient by gamma_{n}: {}\n",
                delta.rank(),
                q.lie_dim(),
                serde_json::to_string(&quotient).expect("serializable")
            );
            for row in delta.rows() {
                out.push_str(&render_vector(q.context().basis(), p.generators(), row));
                out.push('\n');
            }
            Ok((out, Verdict::Holds))
        }
        Command::Check { claim, file, n, class } => {
            let mut p = read_presentation(&file)?;
            let class = class.unwrap_or(default_class(n));
            let err = |e: liedim::series::SeriesError| e.to_string();
            let basis = LyndonBasis::new(p.rank(), class.max(n));
            match claim {
                Claim::Theorem1 => Ok(outcome("2 delta_n in gamma_n", &check_theorem1(&p, n, class).map_err(err)?, &basis, p.generators())),
                Claim::Sjogren => Ok(outcome("c_n delta_n in gamma_n", &check_sjogren(&p, n, class).map_err(err)?, &basis, p.generators())),
                Claim::Corollary => {
                    let holds = check_corollary(&p, n, class).map_err(err)?;
                    let verdict = if holds { Verdict::Holds } else { Verdict::Violated };
                    Ok((format!("[delta_n, L] = gamma_(n+1): {}\n", if holds { "holds" } else { "fails" }), verdict))
                }
                Claim::Lemma2 => {
                    if p.preabelian().is_none() {
                        p = preabelianize(&p);
                    }
                    let r = check_lemma2(&p, n, class).map_err(err)?;
                    let verdict = if r.part_i && r.part_iii { Verdict::Holds } else { Verdict::Violated };
                    let word = |b: bool| if b { "holds" } else { "fails" };
                    Ok((format!("part (i): {}\npart (iii): {}\n", word(r.part_i), word(r.part_iii)), verdict))
                }
            }
        }
        Command::Counterexample { n, degree, verify, emit_presentation, no_timing } => {
            let degree = degree.unwrap_or(2 * n.max(2) - 4);
            let p = build_ln(n, degree).map_err(|e| e.to_string())?;
            if let Some(path) = &emit_presentation {
                write_output(path, &p.serialize())?;
            }
            if !verify {
                return Ok((if emit_presentation.is_some() { String::new() } else { p.serialize() }, Verdict::Holds));
            }
            let mut cert = verify_with_degree(n, degree).map_err(|e| e.to_string())?;
            if no_timing {
                cert = cert.without_timing();
            }
            let verdict = if cert.passes() { Verdict::Holds } else { Verdict::Violated };
            Ok((cert.to_json() + "\n", verdict))
        }
        Command::Sjogren { n } => {
            let s = sjogren(n).map_err(|e| e.to_string())?;
            Ok((format!("{}\n", s.c), Verdict::Holds))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, verdict)) => {
            print!("{text}");
            match verdict {
                Verdict::Holds => ExitCode::SUCCESS,
                Verdict::Violated => ExitCode::from(1),
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
