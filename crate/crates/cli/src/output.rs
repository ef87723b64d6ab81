use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::Result;
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::config::Format;

/// Serializes records as CSV with a header row, or as newline-delimited JSON.
pub fn render<T: Serialize>(records: &[T], format: Format) -> Result<Vec<u8>> {
    let mut buf = vec![];
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut buf);
            for r in records {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut buf, r)?;
                buf.push(b'\n');
            }
        }
    }
    Ok(buf)
}

pub fn parse<T: DeserializeOwned>(bytes: &[u8], format: Format) -> Result<Vec<T>> {
    match format {
        Format::Csv => {
            let mut r = csv::Reader::from_reader(bytes);
            Ok(r.deserialize().collect::<std::result::Result<Vec<T>, _>>()?)
        }
        Format::Json => {
            let mut out = vec![];
            for line in bytes.split(|b| *b == b'\n').filter(|l| !l.is_empty()) {
                out.push(serde_json::from_slice(line)?);
            }
            Ok(out)
        }
    }
}

/// Writes to `out`, or to stdout when no path is given.
pub fn emit(bytes: &[u8], out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => {
            let mut f = BufWriter::new(File::create(p)?);
            f.write_all(bytes)?;
            f.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut h = stdout.lock();
            h.write_all(bytes)?;
            h.flush()?;
        }
    }
    Ok(())
}
