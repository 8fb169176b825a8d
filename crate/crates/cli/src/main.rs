use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use shadow_bracket::bfile::{compare, parse_bfile, write_bfile};
use shadow_bracket::bracket::{charpoly, closure, power, pq_invariants, states_matrix};
use shadow_bracket::oracle::{enumerate_states_with, EnumerationOptions, DEFAULT_CROSSING_LIMIT};
use shadow_bracket::verify::{
    verify_charpoly, verify_oracle, verify_recurrence, verify_tables, VerifyError,
};
use shadow_bracket::{
    gf_from_tuple, BracketVector, CoefficientTriangle, Generator, Polynomial, ShadowDiagram,
    StateSum, TangleWord,
};

/// Exact Kauffman brackets of 3-tangle shadow diagrams.
#[derive(Parser)]
#[command(name = "shadow-bracket", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bracket tuple of the n-th power, or the bracket of its closure.
    Bracket {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Print the bracket of the closure instead of the tuple.
        #[arg(long)]
        closure: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Coefficient triangle of the closures, rows 0..=ROWS.
    Table {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 10)]
        rows: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Rational generating function of the closures and its first terms.
    Gf {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// States matrix, its invariants and characteristic polynomial.
    Charpoly {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run self-checks. With no suite flags every suite runs.
    Verify {
        /// Restrict to one generator (default: all).
        #[arg(long)]
        generator: Option<Generator>,
        /// Compare against the published coefficient tables.
        #[arg(long)]
        tables: bool,
        /// Compare brute-force state sums against the algebra.
        #[arg(long)]
        oracle: bool,
        /// Check the factored characteristic polynomial.
        #[arg(long)]
        charpoly: bool,
        /// Check closed form, series and tuple recurrence against powers.
        #[arg(long)]
        recurrence: bool,
        #[arg(long, default_value_t = 10)]
        rows: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_CROSSING_LIMIT)]
        max_crossings: usize,
    },
    /// Write the triangle (row by row) or one column as a b-file or CSV, or
    /// compare it with a reference b-file.
    Export {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 10)]
        rows: usize,
        /// Export only the x^K column.
        #[arg(long, value_name = "K")]
        column: Option<usize>,
        /// Index of the first exported value.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        offset: i64,
        /// Reference b-file; every entry in it must match.
        #[arg(long, value_name = "FILE")]
        compare: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Bfile)]
        format: Format,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InputArgs {
    #[arg(long)]
    generator: Option<Generator>,
    /// Word in X1, X2, U1, U2, e.g. "X1 X2".
    #[arg(long)]
    word: Option<String>,
    /// Bracket tuple as JSON: {"a": [...], ..., "e": [...]}.
    #[arg(long)]
    tuple: Option<String>,
    /// Diagram file: {"crossings": [...], "boundary": [...], "free_loops": N}.
    #[arg(long, value_name = "FILE.json")]
    pd: Option<PathBuf>,
    /// Refuse diagrams with more crossings than this.
    #[arg(long, default_value_t = DEFAULT_CROSSING_LIMIT)]
    max_crossings: usize,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Bfile,
}

enum Failure {
    /// Exit 1.
    Check(String),
    /// Exit 2.
    Usage(String),
}

type CliResult<T> = Result<T, Failure>;

type Check<'a> = &'a dyn Fn() -> Result<String, VerifyError>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

/// What an input resolves to: a tangle tuple, or the bracket of a closed
/// diagram.
enum Resolved {
    Tangle(BracketVector),
    Closed(Polynomial),
}

impl InputArgs {
    fn resolve(&self) -> CliResult<Resolved> {
        let given = [
            self.generator.is_some(),
            self.word.is_some(),
            self.tuple.is_some(),
            self.pd.is_some(),
        ];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(usage(
                "give exactly one of --generator, --word, --tuple, --pd",
            ));
        }
        if let Some(g) = self.generator {
            return Ok(Resolved::Tangle(g.tuple()));
        }
        if let Some(w) = &self.word {
            return Ok(Resolved::Tangle(
                w.parse::<TangleWord>().map_err(usage)?.tuple(),
            ));
        }
        if let Some(t) = &self.tuple {
            let v: BracketVector =
                serde_json::from_str(t).map_err(|e| usage(format!("--tuple: {e}")))?;
            return Ok(Resolved::Tangle(v));
        }
        let path = self.pd.as_ref().expect("one input is present");
        let text = read(path)?;
        let d: ShadowDiagram =
            serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let opts = EnumerationOptions {
            max_crossings: self.max_crossings,
            ..Default::default()
        };
        match enumerate_states_with(&d, opts).map_err(usage)? {
            StateSum::Tangle(v) => Ok(Resolved::Tangle(v)),
            StateSum::Closed(p) => Ok(Resolved::Closed(p)),
        }
    }

    fn tangle(&self) -> CliResult<BracketVector> {
        match self.resolve()? {
            Resolved::Tangle(v) => Ok(v),
            Resolved::Closed(_) => Err(usage("this command needs a tangle, not a closed diagram")),
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn to_json(value: &impl serde::Serialize) -> String {
    line(serde_json::to_string(value).expect("serialisable"))
}

fn unsupported(cmd: &str, format: Format) -> Failure {
    let name = format.to_possible_value().expect("no skipped variants");
    usage(format!(
        "{cmd} does not support --format {}",
        name.get_name()
    ))
}

fn triangle_for(v: &BracketVector, rows: usize) -> CliResult<CoefficientTriangle> {
    let gf = gf_from_tuple(v).map_err(usage)?;
    Ok(CoefficientTriangle::from_polynomials(&gf.expand(rows)))
}

fn cmd_bracket(
    input: &InputArgs,
    n: usize,
    want_closure: bool,
    format: Format,
) -> CliResult<String> {
    let result = match input.resolve()? {
        Resolved::Closed(p) if n == 1 => Resolved::Closed(p),
        Resolved::Closed(_) => return Err(usage("--n must be 1 for a closed diagram")),
        Resolved::Tangle(v) => {
            let b = power(&v, n);
            if want_closure {
                Resolved::Closed(closure(&b))
            } else {
                Resolved::Tangle(b)
            }
        }
    };
    match (format, result) {
        (Format::Text, Resolved::Tangle(v)) => Ok(line(v)),
        (Format::Text, Resolved::Closed(p)) => Ok(line(p)),
        (Format::Json, Resolved::Tangle(v)) => Ok(to_json(&v)),
        (Format::Json, Resolved::Closed(p)) => Ok(to_json(&p)),
        (f, _) => Err(unsupported("bracket", f)),
    }
}

fn cmd_table(input: &InputArgs, rows: usize, format: Format) -> CliResult<String> {
    let t = triangle_for(&input.tangle()?, rows)?;
    Ok(match format {
        Format::Text => t.to_string(),
        Format::Csv => t.to_csv(),
        Format::Json => to_json(&t),
        Format::Bfile => write_bfile(&t.row_major(), 0),
    })
}

fn cmd_gf(input: &InputArgs, terms: usize, format: Format) -> CliResult<String> {
    let v = input.tangle()?;
    let gf = gf_from_tuple(&v).map_err(usage)?;
    let series = gf.expand(terms);
    match format {
        Format::Text => {
            let mut out = line(format!("G(y) = {gf}"));
            for (n, c) in series.iter().enumerate() {
                out.push_str(&line(format!("{n}: {c}")));
            }
            Ok(out)
        }
        Format::Json => Ok(to_json(&json!({
            "gf": gf.to_string(),
            "terms": gf.terms,
            "series": series,
        }))),
        f => Err(unsupported("gf", f)),
    }
}

fn cmd_charpoly(input: &InputArgs, format: Format) -> CliResult<String> {
    let v = input.tangle()?;
    let pq = pq_invariants(&v);
    let m = pq.eigen_product().map_err(usage)?;
    let matrix = states_matrix(&v);
    let chi = charpoly(&matrix);
    match format {
        Format::Text => Ok(format!(
            "p = {}\nq^2 = {}\nm = {}\nstates matrix:\n{}\ndet(M - λI) = {}\n",
            pq.p,
            pq.qsq,
            m,
            matrix.to_string().trim_end(),
            chi.render("λ")
        )),
        Format::Json => Ok(to_json(&json!({
            "p": pq.p,
            "qsq": pq.qsq,
            "m": m,
            "matrix": matrix.entries,
            "charpoly": chi,
        }))),
        f => Err(unsupported("charpoly", f)),
    }
}

struct Suites {
    tables: bool,
    oracle: bool,
    charpoly: bool,
    recurrence: bool,
}

fn cmd_verify(
    generator: Option<Generator>,
    mut suites: Suites,
    rows: usize,
    max_n: usize,
    max_crossings: usize,
) -> CliResult<String> {
    if !(suites.tables || suites.oracle || suites.charpoly || suites.recurrence) {
        suites = Suites {
            tables: true,
            oracle: true,
            charpoly: true,
            recurrence: true,
        };
    }
    let generators = match generator {
        Some(g) => vec![g],
        None => Generator::ALL.to_vec(),
    };
    let opts = EnumerationOptions {
        max_crossings,
        ..Default::default()
    };
    let mut report = String::new();
    for g in generators {
        let checks: [(bool, Check); 4] = [
            (suites.tables, &|| verify_tables(g, rows)),
            (suites.oracle, &|| verify_oracle(g, max_n, opts)),
            (suites.charpoly, &|| verify_charpoly(g)),
            (suites.recurrence, &|| verify_recurrence(g, max_n)),
        ];
        for (enabled, check) in checks {
            if !enabled {
                continue;
            }
            match check() {
                Ok(pass) => report.push_str(&line(pass)),
                Err(VerifyError::Refused(e)) => {
                    print!("{report}");
                    return Err(usage(e));
                }
                Err(e) => {
                    report.push_str(&line(e));
                    return Err(Failure::Check(report));
                }
            }
        }
    }
    Ok(report)
}

struct ExportArgs<'a> {
    rows: usize,
    column: Option<usize>,
    offset: i64,
    compare_with: Option<&'a Path>,
    format: Format,
    out: Option<&'a Path>,
}

fn cmd_export(input: &InputArgs, args: ExportArgs<'_>) -> CliResult<()> {
    let t = triangle_for(&input.tangle()?, args.rows)?;
    let values = match args.column {
        Some(k) => t.column(k),
        None => t.row_major(),
    };
    let text = match args.format {
        Format::Bfile => write_bfile(&values, args.offset),
        Format::Csv if args.column.is_some() => values.iter().map(line).collect::<String>(),
        Format::Csv => t.to_csv(),
        f => return Err(unsupported("export", f)),
    };
    let Some(reference_path) = args.compare_with else {
        return emit(&text, args.out);
    };
    if let Some(out) = args.out {
        emit(&text, Some(out))?;
    }
    let reference = parse_bfile(&read(reference_path)?).map_err(usage)?;
    let actual: Vec<(i64, _)> = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| (args.offset + i as i64, v))
        .collect();
    match compare(&reference, &actual) {
        Ok(count) => {
            println!(
                "PASS compare: {count} entries match {}",
                reference_path.display()
            );
            Ok(())
        }
        Err(e) => Err(Failure::Check(line(format!(
            "FAIL compare against {}: {e}",
            reference_path.display()
        )))),
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Bracket {
            input,
            n,
            closure,
            output,
        } => emit(
            &cmd_bracket(&input, n, closure, output.format)?,
            output.out.as_deref(),
        ),
        Command::Table {
            input,
            rows,
            output,
        } => emit(
            &cmd_table(&input, rows, output.format)?,
            output.out.as_deref(),
        ),
        Command::Gf {
            input,
            terms,
            output,
        } => emit(
            &cmd_gf(&input, terms, output.format)?,
            output.out.as_deref(),
        ),
        Command::Charpoly { input, output } => {
            emit(&cmd_charpoly(&input, output.format)?, output.out.as_deref())
        }
        Command::Verify {
            generator,
            tables,
            oracle,
            charpoly,
            recurrence,
            rows,
            max_n,
            max_crossings,
        } => {
            let suites = Suites {
                tables,
                oracle,
                charpoly,
                recurrence,
            };
            emit(
                &cmd_verify(generator, suites, rows, max_n, max_crossings)?,
                None,
            )
        }
        Command::Export {
            input,
            rows,
            column,
            offset,
            compare,
            format,
            out,
        } => cmd_export(
            &input,
            ExportArgs {
                rows,
                column,
                offset,
                compare_with: compare.as_deref(),
                format,
                out: out.as_deref(),
            },
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(report)) => {
            print!("{report}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
