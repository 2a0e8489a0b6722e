use std::fmt::Write as _;
use std::io::{self, BufWriter, Write};
use std::time::Instant;

use serde_json::{json, Value};
use tournament_core::analysis::{estimate_count_parallel, growth_csv, growth_series};
use tournament_core::counting::{count, published_count, Method};
use tournament_core::sequences::{
    candidates, enumerate_tree, validate_meeussen, validate_tournament, ValidationMode,
};
use tournament_core::{phi, phi_inverse, CountTable, Kind, Sequence, ValidationReport};

use crate::args::{Cli, Command, SequenceInput};
use crate::input::read_sequences;
use crate::{color_enabled, Failure, Output, SCHEMA};

pub fn run(cli: &Cli) -> Result<Option<Output>, Failure> {
    let output = match &cli.command {
        Command::Validate { kind, mode, input } => validate((*kind).into(), (*mode).into(), input)?,
        Command::Map { input } => transform("map", input, phi)?,
        Command::Invmap { input } => transform("invmap", input, phi_inverse)?,
        Command::Candidates { input } => list_candidates(input)?,
        Command::Enumerate { kind, depth } => {
            enumerate((*kind).into(), *depth, cli.json)?;
            return Ok(None);
        }
        Command::Count {
            n: Some(n), method, ..
        } => count_one(*n, (*method).into())?,
        Command::Count {
            upto,
            bfile,
            method,
            ..
        } => count_upto(
            upto.expect("clap requires -n or --upto"),
            *bfile,
            (*method).into(),
        )?,
        Command::Estimate {
            n,
            samples,
            seed,
            threads,
        } => estimate(*n, *samples, *seed, *threads)?,
        Command::Growth {
            upto,
            base,
            digits,
            precision,
        } => {
            let series = growth_series(*upto, (*base).into(), *precision)?;
            let rows: Vec<Value> = series
                .points
                .iter()
                .map(|p| {
                    json!({
                        "n": p.n,
                        "lg_s": p.lg_s.to_decimal(*digits),
                        "c": p.c_value.to_decimal(*digits),
                    })
                })
                .collect();
            let peak = series.peak().n;
            Output {
                text: growth_csv(&series, *digits),
                json: envelope(
                    "growth",
                    json!({ "base": series.base.to_string(), "peak": peak, "rows": rows }),
                ),
                ok: true,
            }
        }
        Command::OeisCheck { max } => oeis_check(*max as usize),
        Command::Bench { upto } => bench(*upto),
    };
    Ok(Some(output))
}

fn envelope(verb: &str, body: Value) -> Value {
    let mut doc = json!({ "schema": SCHEMA, "verb": verb });
    if let (Value::Object(doc), Value::Object(body)) = (&mut doc, body) {
        doc.extend(body);
    }
    doc
}

fn terms_json(s: &Sequence) -> Value {
    s.terms()
        .iter()
        .map(|t| Value::String(t.to_string()))
        .collect()
}

fn paint(word: &str, code: &str) -> String {
    if color_enabled() {
        format!("\x1b[{code}m{word}\x1b[0m")
    } else {
        word.to_string()
    }
}

fn validate(kind: Kind, mode: ValidationMode, input: &SequenceInput) -> Result<Output, Failure> {
    let sequences = read_sequences(input)?;
    let mut text = String::new();
    let mut results = Vec::new();
    let mut all_valid = true;
    for s in &sequences {
        let report: ValidationReport = match kind {
            Kind::Tournament => validate_tournament(s),
            Kind::Meeussen => validate_meeussen(s, mode)?,
        };
        all_valid &= report.is_valid();
        if report.is_valid() {
            writeln!(text, "{s}: {}", paint("valid", "32")).unwrap();
        } else {
            writeln!(text, "{s}: {} ({report})", paint("invalid", "31")).unwrap();
        }
        let violations: Vec<Value> = report
            .violations
            .iter()
            .map(|v| json!({ "index": v.index, "rule": v.rule.as_str(), "detail": v.detail }))
            .collect();
        results.push(json!({
            "sequence": terms_json(s),
            "valid": report.is_valid(),
            "violations": violations,
        }));
    }
    let mode_name = match (kind, mode) {
        (Kind::Tournament, _) => Value::Null,
        (_, ValidationMode::Dp) => "dp".into(),
        (_, ValidationMode::Structural) => "structural".into(),
    };
    Ok(Output {
        text,
        json: envelope(
            "validate",
            json!({ "kind": kind.as_str(), "mode": mode_name, "results": results }),
        ),
        ok: all_valid,
    })
}

fn transform(
    verb: &str,
    input: &SequenceInput,
    f: fn(&Sequence) -> tournament_core::Result<Sequence>,
) -> Result<Output, Failure> {
    let sequences = read_sequences(input)?;
    let mut text = String::new();
    let mut results = Vec::new();
    for s in &sequences {
        let image = f(s).map_err(|e| Failure::Invalid(format!("{s}: {e}")))?;
        writeln!(text, "{image}").unwrap();
        results.push(json!({ "input": terms_json(s), "output": terms_json(&image) }));
    }
    Ok(Output {
        text,
        json: envelope(verb, json!({ "results": results })),
        ok: true,
    })
}

fn list_candidates(input: &SequenceInput) -> Result<Output, Failure> {
    let sequences = read_sequences(input)?;
    let mut text = String::new();
    let mut results = Vec::new();
    for s in &sequences {
        let list = candidates(s).map_err(|e| Failure::Invalid(format!("{s}: {e}")))?;
        let words: Vec<String> = list.iter().map(ToString::to_string).collect();
        writeln!(text, "{}", words.join(" ")).unwrap();
        results.push(json!({ "sequence": terms_json(s), "candidates": words }));
    }
    Ok(Output {
        text,
        json: envelope("candidates", json!({ "results": results })),
        ok: true,
    })
}

/// Streams sequences as they are generated. The depth is checked before the
/// first visit and nothing is written until then, so a failure never leaves
/// partial output behind.
fn enumerate(kind: Kind, depth: usize, as_json: bool) -> Result<(), Failure> {
    let mut out = BufWriter::new(io::stdout().lock());
    let mut first = true;
    let total = enumerate_tree(kind, depth, |terms| {
        let mut line = String::new();
        if as_json {
            if first {
                writeln!(
                    line,
                    "{{\"schema\":\"{SCHEMA}\",\"verb\":\"enumerate\",\"kind\":\"{}\",\"depth\":{depth},\"sequences\":[",
                    kind.as_str()
                )
                .unwrap();
            } else {
                line.push_str(",\n");
            }
            let items: Vec<String> = terms.iter().map(|t| format!("\"{t}\"")).collect();
            write!(line, "[{}]", items.join(",")).unwrap();
        } else {
            let words: Vec<String> = terms.iter().map(u64::to_string).collect();
            writeln!(line, "{}", words.join(" ")).unwrap();
        }
        first = false;
        if out.write_all(line.as_bytes()).is_err() {
            // The reader went away; nothing left to do.
            std::process::exit(0);
        }
    })?;
    if as_json {
        let _ = write!(out, "\n],\"count\":\"{total}\"}}\n");
    }
    let _ = out.flush();
    Ok(())
}

fn count_one(n: usize, method: Method) -> Result<Output, Failure> {
    if n == 0 {
        return Err(Failure::Invalid("n must be at least 1".into()));
    }
    let value = count(n, method)?;
    Ok(Output {
        text: format!("{value}\n"),
        json: envelope(
            "count",
            json!({ "method": method.as_str(), "values": [{ "n": n, "value": value.to_string() }] }),
        ),
        ok: true,
    })
}

fn count_upto(upto: usize, bfile: bool, method: Method) -> Result<Output, Failure> {
    if upto == 0 {
        return Err(Failure::Invalid("--upto must be at least 1".into()));
    }
    let mut table = CountTable::new();
    let mut text = String::new();
    let mut values = Vec::with_capacity(upto);
    for n in 1..=upto {
        let value = match method {
            Method::Fast => table.count(n),
            other => count(n, other)?,
        };
        if bfile {
            writeln!(text, "{n} {value}").unwrap();
        } else {
            writeln!(text, "{value}").unwrap();
        }
        values.push(json!({ "n": n, "value": value.to_string() }));
    }
    Ok(Output {
        text,
        json: envelope(
            "count",
            json!({ "method": method.as_str(), "values": values }),
        ),
        ok: true,
    })
}

fn estimate(n: usize, samples: u64, seed: u64, threads: usize) -> Result<Output, Failure> {
    let e = estimate_count_parallel(n, samples, seed, threads)?;
    let mean = e.mean.to_decimal(6);
    let std_error = e.std_error.to_decimal(6);
    Ok(Output {
        text: format!("mean {mean}\nstd_error {std_error}\n"),
        json: envelope(
            "estimate",
            json!({ "n": n, "samples": samples, "seed": seed, "mean": mean, "std_error": std_error }),
        ),
        ok: true,
    })
}

fn oeis_check(max: usize) -> Output {
    let mut table = CountTable::new();
    let mut text = String::new();
    let mut mismatches = Vec::new();
    for n in 1..=max {
        let computed = table.count(n);
        let published = published_count(n).expect("max is at most 22");
        if computed != published {
            writeln!(text, "s({n}): computed {computed}, published {published}").unwrap();
            mismatches.push(json!({ "n": n, "computed": computed.to_string(), "published": published.to_string() }));
        }
    }
    if mismatches.is_empty() {
        writeln!(text, "s(1..{max}) matches A008934").unwrap();
    }
    Output {
        text,
        json: envelope(
            "oeis-check",
            json!({ "sequence": "A008934", "max": max, "matches": mismatches.is_empty(), "mismatches": mismatches }),
        ),
        ok: mismatches.is_empty(),
    }
}

fn bench(upto: usize) -> Output {
    let mut table = CountTable::new();
    let mut text = String::from("row,seconds\n");
    let mut rows = Vec::with_capacity(upto);
    for row in 1..=upto {
        let start = Instant::now();
        table.push_row();
        let seconds = start.elapsed().as_secs_f64();
        writeln!(text, "{row},{seconds:.6}").unwrap();
        rows.push(json!({ "row": row, "seconds": seconds }));
    }
    Output {
        text,
        json: envelope("bench", json!({ "rows": rows })),
        ok: true,
    }
}
