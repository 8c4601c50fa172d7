mod output;
mod render;

use std::fs;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use quiddity_core::asymptotics::{constants, periodic_constants};
use quiddity_core::enumerate::{
    count_dissections, count_quiddities, find_dissection_with_quiddity, for_each_dissection,
    periodic_filter,
};
use quiddity_core::formulas::{
    blowup_count, d_l_nm, d_l_total, p_nk, p_total, q_n3, q_n6, q_nk, q_total, KNOWN_MISPRINTS,
};
use quiddity_core::matrixeq::{
    cc_product, enumerate_positive_solutions_bounded, hj_value, is_cc_solution,
};
use quiddity_core::series::{d_ell_biv, p_biv, q_biv, BSeries};
use quiddity_core::surgery::canonicalize_with_trace;
use quiddity_core::toric::{
    classify_type, enumerate_blowups_bounded, expected_type_counts, type_census,
    DEFAULT_BLOWUP_BOUND,
};
use quiddity_core::{Dissection, Error};
use serde_json::json;

use output::{number, Entry, Format, Grid, Sequence};
use render::{Labels, Style};

/// Largest polygon handed to the witness search in `verify`.
const WITNESS_LIMIT: usize = 16;

#[derive(Parser)]
#[command(
    name = "quiddity",
    version,
    about = "Quiddities, dissections and the Conway-Coxeter equation"
)]
struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write to this file; relative paths resolve under QUIDDITY_OUT_DIR when set.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for parallel commands.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Q,
    P,
    D,
    Qnk,
    Pnk,
    Dlnm,
    Blowups,
    Qn3,
    Qn6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    Q,
    P,
    D,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate a sequence or coefficient table from closed forms.
    Table {
        #[arg(value_enum, ignore_case = true)]
        kind: TableKind,
        #[arg(long)]
        min_n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        /// Period for D and Dlnm.
        #[arg(long, default_value_t = 3)]
        l: usize,
    },
    /// Check a sequence against the Conway-Coxeter equation.
    Verify {
        /// Comma-separated integers.
        #[arg(allow_hyphen_values = true)]
        sequence: String,
    },
    /// Canonical maximally open representative of a 3-periodic dissection.
    Canonicalize {
        /// Serialized dissection, or `-` to read one per line from stdin.
        dissection: String,
        #[arg(long)]
        trace: bool,
    },
    /// Draw a dissection.
    Render {
        dissection: String,
        #[arg(long, value_enum, default_value = "ascii")]
        style: Style,
        /// Label vertices with the quiddity.
        #[arg(long)]
        quiddity: bool,
        /// Label sides with their Z3-index.
        #[arg(long)]
        z3_labels: bool,
    },
    /// Stream every l-periodic dissection of the (n+2)-gon.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        l: usize,
    },
    /// List positive solutions of length N, one per line.
    Solutions {
        #[arg(long)]
        len: usize,
        /// Largest accepted length.
        #[arg(long, default_value_t = quiddity_core::matrixeq::DEFAULT_SOLUTION_BOUND)]
        bound: usize,
    },
    /// Count dissections (or distinct quiddities) by number of cells.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        l: usize,
        #[arg(long)]
        quiddities: bool,
    },
    /// Growth constants as JSON.
    Constants {
        /// Constants of the l-periodic family instead.
        #[arg(long)]
        l: Option<usize>,
    },
    /// Fans reachable from the projective plane by n blow-ups.
    Fans {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        types: bool,
        #[arg(long, default_value_t = DEFAULT_BLOWUP_BOUND)]
        bound: usize,
    },
    /// Coefficients of a generating function solved by fixed-point iteration.
    Series {
        #[arg(value_enum, ignore_case = true)]
        kind: SeriesKind,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, default_value_t = 3)]
        l: usize,
        /// Emit rows of w-coefficients.
        #[arg(long)]
        bivariate: bool,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(m) => Failure::Usage(m),
            other => Failure::Domain(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn usage<T>(message: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(message.into()))
}

fn sequence_table(kind: TableKind, lo: usize, hi: usize, l: usize) -> Sequence {
    let (name, f): (&str, Box<dyn Fn(usize) -> BigInt>) = match kind {
        TableKind::Q => ("Q", Box::new(q_total)),
        TableKind::P => ("P", Box::new(p_total)),
        TableKind::D => ("D", Box::new(move |n| d_l_total(l, n))),
        TableKind::Blowups => ("blowups", Box::new(blowup_count)),
        TableKind::Qn3 => ("Qn3", Box::new(q_n3)),
        TableKind::Qn6 => ("Qn6", Box::new(q_n6)),
        _ => unreachable!("two-index tables are handled separately"),
    };
    Sequence {
        name: name.to_string(),
        terms: (lo..=hi).map(|n| (n, f(n))).collect(),
    }
}

fn grid_table(kind: TableKind, lo: usize, hi: usize, l: usize) -> Grid {
    let mut entries = Vec::new();
    for n in lo..=hi {
        match kind {
            TableKind::Dlnm => {
                for m in 0..=n {
                    entries.push(Entry {
                        n,
                        row: m,
                        value: d_l_nm(l, n, m),
                        printed: None,
                    });
                }
            }
            _ => {
                for k in 0..=n / 3 {
                    let (value, printed) = if kind == TableKind::Qnk {
                        let printed = KNOWN_MISPRINTS
                            .iter()
                            .find(|&&(pn, pk, _)| (pn, pk) == (n, k))
                            .map(|t| t.2);
                        (q_nk(n, k), printed)
                    } else {
                        (p_nk(n, k), None)
                    };
                    entries.push(Entry {
                        n,
                        row: k,
                        value,
                        printed,
                    });
                }
            }
        }
    }
    let name = match kind {
        TableKind::Qnk => "Qnk".to_string(),
        TableKind::Pnk => "Pnk".to_string(),
        _ => format!("D[{l}]nm"),
    };
    Grid {
        name,
        row_label: if kind == TableKind::Dlnm { "m" } else { "k" },
        entries,
    }
}

fn cmd_table(
    kind: TableKind,
    min_n: Option<usize>,
    max_n: Option<usize>,
    l: usize,
    format: Format,
    out: &mut dyn Write,
) -> Outcome {
    if l == 0 {
        return usage("--l must be at least 1");
    }
    let default_max = match kind {
        TableKind::Q | TableKind::Qnk => 14,
        TableKind::P | TableKind::Pnk => 10,
        TableKind::Blowups => 6,
        _ => 20,
    };
    let lo = min_n.unwrap_or(if kind == TableKind::Blowups { 1 } else { 0 });
    let hi = max_n.unwrap_or(default_max);
    if lo > hi {
        return usage(format!("empty range {lo}..={hi}"));
    }
    if kind == TableKind::Blowups && lo == 0 {
        return usage("blow-up counts start at n = 1");
    }
    let text = match kind {
        TableKind::Qnk | TableKind::Pnk | TableKind::Dlnm => {
            match grid_table(kind, lo, hi, l).render(format) {
                Some(text) => text,
                None => return usage("b-file output needs a one-index sequence"),
            }
        }
        _ => sequence_table(kind, lo, hi, l).render(format),
    };
    out.write_all(text.as_bytes())?;
    Ok(true)
}

fn parse_sequence(text: &str) -> Result<Vec<i64>, Failure> {
    let values: Result<Vec<i64>, _> = text.split(',').map(|t| t.trim().parse::<i64>()).collect();
    match values {
        Ok(v) if !v.is_empty() => Ok(v),
        _ => usage(format!("expected comma-separated integers, got {text:?}")),
    }
}

fn cmd_verify(sequence: &str, format: Format, out: &mut dyn Write) -> Outcome {
    let a = parse_sequence(sequence)?;
    let product = cc_product(&a)?;
    let class = is_cc_solution(&a);
    let hj = hj_value(&a)?;
    let positive = a.iter().all(|&x| x > 0);
    let witness = match class {
        Some(_) if positive && a.len() <= WITNESS_LIMIT => find_dissection_with_quiddity(&a, 3),
        _ => None,
    };
    let joined = a
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",");
    if format == Format::Json {
        let value = json!({
            "sequence": a,
            "product": [[number(&product.a), number(&product.b)], [number(&product.c), number(&product.d)]],
            "solution": class.is_some(),
            "class": class,
            "hirzebruch_jung": hj.to_string(),
            "witness": witness.as_ref().map(|d| d.to_string()),
        });
        writeln!(out, "{value}")?;
    } else {
        writeln!(out, "sequence ({joined})")?;
        writeln!(out, "product {product}")?;
        match class {
            Some(c) => writeln!(
                out,
                "solution yes N={} T={} k={} sign={:+}",
                c.len, c.total, c.k, c.sign
            )?,
            None => writeln!(out, "solution no")?,
        }
        writeln!(out, "hirzebruch-jung {hj}")?;
        if let Some(d) = &witness {
            writeln!(out, "witness {d}")?;
        }
    }
    Ok(class.is_some())
}

fn parse_dissection(text: &str, line: Option<usize>) -> Result<Dissection, Failure> {
    text.parse::<Dissection>().map_err(|e| {
        let place = |column: usize| {
            let column = column + text.len() - text.trim_start().len();
            match line {
                Some(l) => format!("line {l}, column {column}"),
                None => format!("column {column}"),
            }
        };
        match e {
            Error::Parse { column, message } => {
                Failure::Domain(format!("{}: {message}", place(column)))
            }
            other => Failure::Domain(match line {
                Some(l) => format!("line {l}: {other}"),
                None => other.to_string(),
            }),
        }
    })
}

fn canonicalize_one(
    d: &Dissection,
    trace: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let (canon, moves) = canonicalize_with_trace(d)?;
    if format == Format::Json {
        let value = json!({
            "input": d.to_string(),
            "canonical": canon.to_string(),
            "trace": if trace { Some(moves.iter().map(|m| m.to_string()).collect::<Vec<_>>()) } else { None },
        });
        writeln!(out, "{value}")?;
    } else {
        writeln!(out, "{canon}")?;
        if trace {
            for m in &moves {
                writeln!(out, "{m}")?;
            }
        }
    }
    Ok(())
}

fn cmd_canonicalize(input: &str, trace: bool, format: Format, out: &mut dyn Write) -> Outcome {
    if input != "-" {
        let d = parse_dissection(input, None)?;
        canonicalize_one(&d, trace, format, out)?;
        return Ok(true);
    }
    for (t, line) in io::stdin().lock().lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let d = parse_dissection(&line, Some(t + 1))?;
        canonicalize_one(&d, trace, format, out)?;
    }
    Ok(true)
}

fn cmd_enumerate(n: usize, l: usize, format: Format, out: &mut dyn Write) -> Outcome {
    if l == 0 {
        return usage("--l must be at least 1");
    }
    let mut failed = None;
    let mut all = Vec::new();
    for_each_dissection(n, periodic_filter(l), |d| {
        if format == Format::Json {
            all.push(d.to_string());
        } else if failed.is_none() {
            if let Err(e) = writeln!(out, "{d}") {
                failed = Some(e);
            }
        }
    })?;
    if let Some(e) = failed {
        return Err(e.into());
    }
    if format == Format::Json {
        writeln!(out, "{}", json!(all))?;
    }
    Ok(true)
}

fn cmd_solutions(len: usize, bound: usize, format: Format, out: &mut dyn Write) -> Outcome {
    let sols = enumerate_positive_solutions_bounded(len, bound)?;
    if format == Format::Json {
        writeln!(out, "{}", json!(sols))?;
    } else {
        for s in sols {
            writeln!(
                out,
                "{}",
                s.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )?;
        }
    }
    Ok(true)
}

fn cmd_count(n: usize, l: usize, quiddities: bool, format: Format, out: &mut dyn Write) -> Outcome {
    if l == 0 {
        return usage("--l must be at least 1");
    }
    let table = if quiddities {
        count_quiddities(n, l)?
    } else {
        count_dissections(n, l)?
    };
    let name = if quiddities {
        "quiddities"
    } else {
        "dissections"
    };
    match format {
        Format::Json => {
            let by_m: serde_json::Map<String, serde_json::Value> = table
                .by_m
                .iter()
                .map(|(m, c)| (m.to_string(), number(c)))
                .collect();
            writeln!(
                out,
                "{}",
                json!({ "n": n, "l": l, "counting": name, "by_m": by_m, "total": number(&table.total()) })
            )?;
        }
        Format::Csv => {
            writeln!(out, "m,{name}")?;
            for (m, c) in &table.by_m {
                writeln!(out, "{m},{c}")?;
            }
        }
        Format::Bfile => {
            for (m, c) in &table.by_m {
                writeln!(out, "{m} {c}")?;
            }
        }
        Format::Text => {
            for (m, c) in &table.by_m {
                writeln!(out, "m={m} {c}")?;
            }
            writeln!(out, "total {}", table.total())?;
        }
    }
    Ok(true)
}

fn cmd_constants(l: Option<usize>, out: &mut dyn Write) -> Outcome {
    let value = match l {
        Some(0) => return usage("--l must be at least 1"),
        Some(l) => serde_json::to_value(periodic_constants(l)?),
        None => serde_json::to_value(constants()?),
    }
    .map_err(|e| Failure::Domain(e.to_string()))?;
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&value).map_err(|e| Failure::Domain(e.to_string()))?
    )?;
    Ok(true)
}

fn cmd_fans(n: usize, types: bool, bound: usize, format: Format, out: &mut dyn Write) -> Outcome {
    let fans = enumerate_blowups_bounded(n, bound)?;
    if format == Format::Json {
        let list: Vec<serde_json::Value> = fans
            .iter()
            .map(|a| {
                let ty = classify_type(a).ok().map(|t| t.to_string());
                if types {
                    json!({ "sequence": a.values(), "type": ty })
                } else {
                    json!(a.values())
                }
            })
            .collect();
        writeln!(out, "{}", json!(list))?;
    } else {
        for a in &fans {
            if types {
                let ty = classify_type(a).map(|t| t.to_string())?;
                writeln!(out, "{a} {ty}")?;
            } else {
                writeln!(out, "{a}")?;
            }
        }
    }
    if types && n >= 1 {
        let census = type_census(&fans)?;
        let expected = expected_type_counts(n);
        let summary = json!({
            "n": n,
            "total": fans.len(),
            "counts": { "a": census[0], "b": census[1], "c": census[2], "d": census[3] },
            "expected": {
                "a": number(&expected[0]), "b": number(&expected[1]),
                "c": number(&expected[2]), "d": number(&expected[3]),
            },
        });
        writeln!(out, "{summary}")?;
    }
    Ok(true)
}

fn cmd_series(
    kind: SeriesKind,
    order: usize,
    l: usize,
    bivariate: bool,
    format: Format,
    out: &mut dyn Write,
) -> Outcome {
    if l == 0 {
        return usage("--l must be at least 1");
    }
    let (name, s): (String, BSeries) = match kind {
        SeriesKind::Q => ("Q".into(), q_biv(order)),
        SeriesKind::P => ("P".into(), p_biv(order)),
        SeriesKind::D => (format!("D[{l}]"), d_ell_biv(l, order)),
    };
    if bivariate {
        let rows: Vec<Vec<serde_json::Value>> = (0..=order)
            .map(|n| s.row(n).iter().map(number).collect())
            .collect();
        match format {
            Format::Json => writeln!(
                out,
                "{}",
                json!({ "series": name, "order": order, "rows": rows })
            )?,
            Format::Csv => {
                writeln!(out, "n,m,coefficient")?;
                for ((n, m), c) in s.terms() {
                    writeln!(out, "{n},{m},{c}")?;
                }
            }
            Format::Bfile => return usage("b-file output needs a one-index sequence"),
            Format::Text => {
                for n in 0..=order {
                    let row: Vec<String> = s.row(n).iter().map(|c| c.to_string()).collect();
                    writeln!(out, "z^{n}: [{}]", row.join(", "))?;
                }
            }
        }
        return Ok(true);
    }
    let u = s.eval_w1();
    let seq = Sequence {
        name,
        terms: (0..=order).map(|n| (n, u.coeff(n))).collect(),
    };
    out.write_all(seq.render(format).as_bytes())?;
    Ok(true)
}

fn cmd_render(text: &str, style: Style, labels: Labels, out: &mut dyn Write) -> Outcome {
    let d = parse_dissection(text, None)?;
    out.write_all(render::render(&d, style, &labels)?.as_bytes())?;
    Ok(true)
}

fn open_output(path: Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    match path {
        None => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
        Some(p) => {
            let p = match std::env::var_os("QUIDDITY_OUT_DIR") {
                Some(dir) if p.is_relative() => PathBuf::from(dir).join(p),
                _ => p,
            };
            if let Some(parent) = p.parent().filter(|q| !q.as_os_str().is_empty()) {
                fs::create_dir_all(parent)?;
            }
            Ok(Box::new(BufWriter::new(fs::File::create(&p)?)))
        }
    }
}

fn run(cli: Cli) -> Outcome {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return usage("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Domain(e.to_string()))?;
    }
    let mut out = open_output(cli.output)?;
    let format = cli.format;
    let pick = |default: Format| format.unwrap_or(default);
    let outcome = match cli.command {
        Command::Table {
            kind,
            min_n,
            max_n,
            l,
        } => {
            let default = if matches!(kind, TableKind::Qnk | TableKind::Pnk | TableKind::Dlnm) {
                Format::Text
            } else {
                Format::Bfile
            };
            cmd_table(kind, min_n, max_n, l, pick(default), &mut out)
        }
        Command::Verify { sequence } => cmd_verify(&sequence, pick(Format::Text), &mut out),
        Command::Canonicalize { dissection, trace } => {
            cmd_canonicalize(&dissection, trace, pick(Format::Text), &mut out)
        }
        Command::Render {
            dissection,
            style,
            quiddity,
            z3_labels,
        } => cmd_render(
            &dissection,
            style,
            Labels {
                quiddity,
                z3: z3_labels,
            },
            &mut out,
        ),
        Command::Enumerate { n, l } => cmd_enumerate(n, l, pick(Format::Text), &mut out),
        Command::Solutions { len, bound } => {
            cmd_solutions(len, bound, pick(Format::Text), &mut out)
        }
        Command::Count { n, l, quiddities } => {
            cmd_count(n, l, quiddities, pick(Format::Text), &mut out)
        }
        Command::Constants { l } => cmd_constants(l, &mut out),
        Command::Fans { n, types, bound } => {
            cmd_fans(n, types, bound, pick(Format::Text), &mut out)
        }
        Command::Series {
            kind,
            order,
            l,
            bivariate,
        } => {
            let default = if bivariate {
                Format::Text
            } else {
                Format::Bfile
            };
            cmd_series(kind, order, l, bivariate, pick(default), &mut out)
        }
    };
    out.flush()?;
    outcome
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
    }
}
