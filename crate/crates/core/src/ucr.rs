//! Reading and writing UCR-archive style text files: one series per line,
//! class label first, samples after.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::dataset::{DatasetPair, LabeledDataset};
use crate::error::{invalid, Error, Result};
use crate::series::TimeSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Delimiter {
    /// Comma, then tab, then whitespace runs: the first that splits line 1
    /// into at least two fields.
    #[default]
    Auto,
    Comma,
    Tab,
    Whitespace,
}

impl Delimiter {
    fn split<'a>(self, line: &'a str) -> Box<dyn Iterator<Item = &'a str> + 'a> {
        match self {
            Delimiter::Comma => Box::new(line.split(',').map(str::trim)),
            Delimiter::Tab => Box::new(line.split('\t').map(str::trim)),
            Delimiter::Whitespace | Delimiter::Auto => Box::new(line.split_whitespace()),
        }
    }

    fn detect(first_line: &str) -> Delimiter {
        [Delimiter::Comma, Delimiter::Tab, Delimiter::Whitespace]
            .into_iter()
            .find(|d| d.split(first_line).count() >= 2)
            .unwrap_or(Delimiter::Whitespace)
    }

    fn separator(self) -> &'static str {
        match self {
            Delimiter::Comma => ",",
            Delimiter::Tab => "\t",
            Delimiter::Whitespace | Delimiter::Auto => " ",
        }
    }
}

pub fn load_ucr_file(path: impl AsRef<Path>, delimiter: Delimiter) -> Result<LabeledDataset> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_ucr(&text, delimiter, path)
}

/// Parses UCR text. `origin` only labels error messages.
pub fn parse_ucr(text: &str, delimiter: Delimiter, origin: &Path) -> Result<LabeledDataset> {
    let rows: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let Some(&(_, first)) = rows.first() else {
        return Err(invalid(format!("{}: no data rows", origin.display())));
    };
    let delimiter = match delimiter {
        Delimiter::Auto => Delimiter::detect(first),
        d => d,
    };

    let mut series = Vec::with_capacity(rows.len());
    let mut labels = Vec::with_capacity(rows.len());
    let mut width = None;
    for (line, row) in rows {
        let format_err = |message: String| Error::Format {
            path: origin.to_owned(),
            line,
            message,
        };
        let parse = |field: &str| -> Result<f64> {
            field.parse::<f64>().map_err(|_| Error::Parse {
                path: origin.to_owned(),
                line,
                field: field.to_owned(),
            })
        };

        let mut fields = delimiter.split(row);
        let label_field = fields.next().unwrap_or_default();
        let label = parse(label_field)?;
        if !label.is_finite() || label.fract() != 0.0 {
            return Err(Error::Parse {
                path: origin.to_owned(),
                line,
                field: label_field.to_owned(),
            });
        }
        let values = fields.map(parse).collect::<Result<Vec<f64>>>()?;
        match width {
            None if values.is_empty() => {
                return Err(format_err("row has a label but no samples".into()))
            }
            None => width = Some(values.len()),
            Some(w) if w != values.len() => {
                return Err(format_err(format!(
                    "row has {} samples but earlier rows have {w}",
                    values.len()
                )))
            }
            Some(_) => {}
        }
        let ts = TimeSeries::new(values).map_err(|e| format_err(e.to_string()))?;
        series.push(ts);
        labels.push(label as i64);
    }
    LabeledDataset::new(series, labels)
}

/// Writes `ds` in UCR layout. Samples use the shortest decimal form that
/// parses back to the same `f64`.
pub fn write_ucr(
    ds: &LabeledDataset,
    delimiter: Delimiter,
    mut out: impl Write,
) -> std::io::Result<()> {
    let sep = delimiter.separator();
    for (ts, label) in ds.iter() {
        write!(out, "{label}")?;
        for v in ts.iter() {
            write!(out, "{sep}{v}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

pub fn save_ucr_file(
    ds: &LabeledDataset,
    delimiter: Delimiter,
    path: impl AsRef<Path>,
) -> Result<()> {
    let path = path.as_ref();
    let io_err = |source| Error::Io {
        path: path.to_owned(),
        source,
    };
    let file = fs::File::create(path).map_err(io_err)?;
    let mut out = std::io::BufWriter::new(file);
    write_ucr(ds, delimiter, &mut out).map_err(io_err)?;
    out.flush().map_err(io_err)
}

/// Locates `<name>_<SPLIT>` under `dir`, either directly or inside a
/// `<name>/` subdirectory, with a `.tsv`, `.txt`, `.csv` or no extension.
pub fn find_split(dir: &Path, name: &str, split: &str) -> Option<PathBuf> {
    let stem = format!("{name}_{split}");
    [dir.join(name), dir.to_owned()]
        .into_iter()
        .flat_map(|d| {
            ["tsv", "txt", "csv", ""].map(|ext| {
                if ext.is_empty() {
                    d.join(&stem)
                } else {
                    d.join(format!("{stem}.{ext}"))
                }
            })
        })
        .find(|p| p.is_file())
}

/// Loads the named train/test pair from an archive directory.
pub fn load_pair(dir: impl AsRef<Path>, name: &str) -> Result<DatasetPair> {
    let dir = dir.as_ref();
    let locate = |split: &str| {
        find_split(dir, name, split).ok_or_else(|| Error::Io {
            path: dir.join(format!("{name}_{split}")),
            source: std::io::Error::new(std::io::ErrorKind::NotFound, "dataset split not found"),
        })
    };
    let train = load_ucr_file(locate("TRAIN")?, Delimiter::Auto)?;
    let test = load_ucr_file(locate("TEST")?, Delimiter::Auto)?;
    DatasetPair::new(name, train, test)
}
