use std::fs;
use std::path::Path;

use rayon::prelude::*;

use crate::error::CliError;
use crate::output::{BatchEntry, BatchSummary};
use crate::{classify_matrix, parse_matrix, Settings, TableFormat};

/// Classifies every non-comment line of `input` and writes a JSON array of
/// results to `output`.
pub fn run_batch(input: &Path, output: &Path) -> Result<BatchSummary, CliError> {
    run_batch_with(input, output, TableFormat::Json, &Settings::default())
}

pub fn run_batch_with(
    input: &Path,
    output: &Path,
    format: TableFormat,
    settings: &Settings,
) -> Result<BatchSummary, CliError> {
    let text = fs::read_to_string(input).map_err(|e| CliError::io(input, e))?;
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();

    // collect() on an indexed parallel iterator keeps input order
    let entries: Vec<BatchEntry> = lines
        .par_iter()
        .map(|&(line, l)| {
            let outcome = parse_matrix(l, settings).and_then(|m| classify_matrix(&m));
            let (result, error) = match outcome {
                Ok(r) => (Some(r), None),
                Err(e) => (None, Some(e.to_json())),
            };
            BatchEntry {
                line,
                input: l.to_string(),
                result,
                error,
            }
        })
        .collect();

    let mut summary = BatchSummary {
        total: entries.len(),
        ..BatchSummary::default()
    };
    for e in &entries {
        match &e.result {
            Some(r) if r.cremona => summary.cremona += 1,
            Some(_) => summary.non_cremona += 1,
            None => summary.errors += 1,
        }
    }

    let bytes = match format {
        TableFormat::Json => {
            let mut s =
                serde_json::to_string(&entries).map_err(|e| CliError::Internal(e.to_string()))?;
            s.push('\n');
            s.into_bytes()
        }
        TableFormat::Csv => to_csv(&entries)?,
    };
    fs::write(output, bytes).map_err(|e| CliError::io(output, e))?;
    Ok(summary)
}

fn to_csv(entries: &[BatchEntry]) -> Result<Vec<u8>, CliError> {
    let internal = |e: csv::Error| CliError::Internal(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "line", "input", "cremona", "family", "delta", "gamma0", "gamma1", "gamma2", "error",
    ])
    .map_err(internal)?;
    for e in entries {
        let mut record = vec![e.line.to_string(), e.input.clone()];
        match (&e.result, &e.error) {
            (Some(r), _) => {
                let md = r.multidegree.map(|g| g.map(|x| x.to_string()));
                record.extend([
                    r.cremona.to_string(),
                    r.family.clone(),
                    r.delta.map(|d| d.to_string()).unwrap_or_default(),
                ]);
                record.extend(md.unwrap_or_default());
                record.push(String::new());
            }
            (None, err) => {
                record.extend(std::iter::repeat_n(String::new(), 6));
                record.push(err.as_ref().map(|x| x.message.clone()).unwrap_or_default());
            }
        }
        w.write_record(&record).map_err(internal)?;
    }
    w.into_inner()
        .map_err(|e| CliError::Internal(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn batch(contents: &str) -> (BatchSummary, serde_json::Value) {
        let dir = tempfile::tempdir().unwrap();
        let input = dir.path().join("in.txt");
        let output = dir.path().join("out.json");
        fs::File::create(&input)
            .unwrap()
            .write_all(contents.as_bytes())
            .unwrap();
        let summary = run_batch(&input, &output).unwrap();
        let json = serde_json::from_str(&fs::read_to_string(&output).unwrap()).unwrap();
        (summary, json)
    }

    #[test]
    fn both_degree_two_maps() {
        let (s, json) = batch("0,1,1;1,0,1;1,1,0\n0,0,2;1,1,0;0,1,1\n");
        assert_eq!(
            s,
            BatchSummary {
                total: 2,
                cremona: 2,
                non_cremona: 0,
                errors: 0
            }
        );
        assert_eq!(json[0]["result"]["family"], "I");
        assert_eq!(json[1]["result"]["family"], "II");
    }

    #[test]
    fn empty_file() {
        let (s, json) = batch("");
        assert_eq!(s, BatchSummary::default());
        assert_eq!(json, serde_json::json!([]));
    }

    #[test]
    fn malformed_line_is_isolated() {
        let (s, json) = batch("# header\n0,0,5;4,1,0;3,1,1\n0,0;1,1\n\n0,2,5;4,3,0;1,0,6\n");
        assert_eq!(s.total, 3);
        assert_eq!(s.errors, 1);
        assert_eq!(s.cremona, 1);
        assert_eq!(s.non_cremona, 1);
        assert_eq!(json[1]["line"], 3);
        assert_eq!(json[1]["error"]["error"], "parse_error");
        assert_eq!(json[2]["line"], 5);
    }

    #[test]
    fn unreadable_input() {
        let dir = tempfile::tempdir().unwrap();
        let err = run_batch(&dir.path().join("missing"), &dir.path().join("out")).unwrap_err();
        assert_eq!(err.exit_code(), 1);
        assert_eq!(err.code(), "io_error");
    }
}
