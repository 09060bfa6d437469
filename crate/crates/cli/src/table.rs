//! Function values along a straight segment in the `z` plane.

use std::io::Write;

use bizeta_core::complex::ComplexValue;
use clap::ValueEnum;
use serde::Serialize;

use crate::function::{evaluate, EvalOutput, EvalRequest};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Row {
    pub z_re: f64,
    pub z_im: f64,
    pub f_re: f64,
    pub f_im: f64,
    pub abs: f64,
    pub arg: f64,
}

/// `count` points from `from` to `to`; the endpoints are exact.
pub fn axis(from: ComplexValue, to: ComplexValue, count: usize) -> Vec<ComplexValue> {
    match count {
        0 => Vec::new(),
        1 => vec![from],
        _ => (0..count)
            .map(|i| {
                if i == count - 1 {
                    return to;
                }
                let t = i as f64 / (count - 1) as f64;
                from * (1.0 - t) + to * t
            })
            .collect(),
    }
}

/// Evaluates `req` at every point; the first failing point aborts.
pub fn build(req: &EvalRequest, points: &[ComplexValue]) -> Result<Vec<Row>, CliError> {
    points
        .iter()
        .enumerate()
        .map(|(index, &z)| {
            let v = evaluate(&req.with_z(z)).map_err(|e| match e {
                CliError::Domain(source) => CliError::Point {
                    index,
                    z: format!("{}{:+}i", z.re, z.im),
                    source,
                },
                other => other,
            })?;
            let o = EvalOutput::from(v);
            Ok(Row {
                z_re: z.re,
                z_im: z.im,
                f_re: o.re,
                f_im: o.im,
                abs: o.abs,
                arg: o.arg,
            })
        })
        .collect()
}

pub fn write<W: Write>(rows: &[Row], format: TableFormat, out: W) -> Result<(), CliError> {
    match format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in rows {
                w.serialize(row)?;
            }
            if rows.is_empty() {
                w.write_record(["z_re", "z_im", "f_re", "f_im", "abs", "arg"])?;
            }
            w.flush()?;
        }
        TableFormat::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}
