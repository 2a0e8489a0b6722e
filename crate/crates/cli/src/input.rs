use std::fs;
use std::io::{self, Read};

use tournament_core::Sequence;

use crate::args::SequenceInput;
use crate::Failure;

/// Reads every sequence up front so a bad line fails the run before any
/// output is produced.
pub fn read_sequences(input: &SequenceInput) -> Result<Vec<Sequence>, Failure> {
    if !input.terms.is_empty() {
        let line = input.terms.join(" ");
        return parse_line(&line, None).map(|s| vec![s]);
    }
    let text = match &input.file {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
            text
        }
    };
    let sequences = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim_end_matches('\r')))
        .filter(|(_, line)| !line.is_empty())
        .map(|(number, line)| parse_line(line, Some(number)))
        .collect::<Result<Vec<_>, _>>()?;
    if sequences.is_empty() {
        return Err(Failure::Usage("no sequences given".into()));
    }
    Ok(sequences)
}

fn parse_line(line: &str, number: Option<usize>) -> Result<Sequence, Failure> {
    line.parse::<Sequence>().map_err(|e| match number {
        Some(n) => Failure::Invalid(format!("line {n}: {e}")),
        None => Failure::Invalid(e.to_string()),
    })
}
