//! CSV emission and parsing of sweep tables.

use crate::sweep::{Row, SweepTable};
use anyhow::{bail, Context, Result};
use std::io::{Read, Write};

pub const HEADER: [&str; 7] = [
    "n",
    "exact_logmod",
    "exact_phase",
    "pred_logmod",
    "pred_phase",
    "ratio_minus_1",
    "status",
];

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_csv<W: Write>(table: &SweepTable, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for r in &table.rows {
        w.write_record([
            r.n.to_string(),
            num(r.exact_logmod),
            num(r.exact_phase),
            num(r.pred_logmod),
            num(r.pred_phase),
            num(r.ratio_minus_1),
            r.status.clone(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn emit_csv(table: &SweepTable, path: &std::path::Path) -> Result<()> {
    let f = std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
    write_csv(table, f)
}

pub fn parse_csv<R: Read>(input: R) -> Result<SweepTable> {
    let mut rd = csv::Reader::from_reader(input);
    if rd.headers()?.iter().ne(HEADER) {
        bail!("unexpected header {:?}", rd.headers()?);
    }
    let mut rows = Vec::new();
    for rec in rd.records() {
        let rec = rec?;
        let f = |i: usize| -> Result<f64> {
            rec[i].parse::<f64>().with_context(|| format!("column {} value '{}'", HEADER[i], &rec[i]))
        };
        rows.push(Row {
            n: rec[0].parse().with_context(|| format!("bad n '{}'", &rec[0]))?,
            exact_logmod: f(1)?,
            exact_phase: f(2)?,
            pred_logmod: f(3)?,
            pred_phase: f(4)?,
            ratio_minus_1: f(5)?,
            status: rec[6].to_string(),
        });
    }
    Ok(SweepTable { rows })
}
