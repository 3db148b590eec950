//! Report serialization: JSON lines (records, then one summary object) and
//! a CSV projection of the records.

use std::io::{self, Write};

use serde::Serialize;

use super::{Record, Summary, VerificationReport};

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum Line<'a> {
    Record(&'a Record),
    Summary(&'a Summary),
}

pub fn write_jsonl<W: Write>(report: &VerificationReport, mut out: W) -> io::Result<()> {
    for rec in &report.records {
        serde_json::to_writer(&mut out, &Line::Record(rec))?;
        out.write_all(b"\n")?;
    }
    serde_json::to_writer(&mut out, &Line::Summary(&report.summary))?;
    out.write_all(b"\n")?;
    out.flush()
}

pub fn write_csv<W: Write>(report: &VerificationReport, out: W) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for rec in &report.records {
        w.serialize(rec).map_err(io::Error::other)?;
    }
    w.flush()
}
