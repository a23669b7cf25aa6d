//! Rendering of evaluations, suite reports and the case list.
//!
//! Machine formats carry 17 significant digits so every double round-trips;
//! text carries 10.

use std::io::Write;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::value::RawValue;

use foxwright_harness::{IdentityCase, IdentityReport, Point};

use crate::config::Format;
use crate::error::CliError;
use crate::eval::Evaluated;

/// 17 significant digits in exponent form; empty for non-finite values.
pub fn machine(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        String::new()
    }
}

/// 10 significant digits, positional when the magnitude allows it.
pub fn text(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if (-4..10).contains(&mag) {
        format!("{x:.*}", (9 - mag) as usize)
    } else {
        format!("{x:.9e}")
    }
}

fn text_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        text(z.re)
    } else {
        format!("{} {} {}i", text(z.re), if z.im < 0.0 { "-" } else { "+" }, text(z.im.abs()))
    }
}

fn raw(x: f64) -> Box<RawValue> {
    let s = if x.is_finite() { machine(x) } else { "null".into() };
    RawValue::from_string(s).expect("formatted float is valid JSON")
}

#[derive(Serialize)]
struct JsonReport<'a> {
    id: &'a str,
    point: &'a Point,
    lhs_re: Box<RawValue>,
    lhs_im: Box<RawValue>,
    rhs_re: Box<RawValue>,
    rhs_im: Box<RawValue>,
    abs_err: Box<RawValue>,
    rel_err: Box<RawValue>,
    pass: bool,
}

pub fn write_reports(out: &mut dyn Write, reports: &[IdentityReport], format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let records: Vec<JsonReport> = reports
                .iter()
                .map(|r| JsonReport {
                    id: &r.id,
                    point: &r.point,
                    lhs_re: raw(r.lhs.re),
                    lhs_im: raw(r.lhs.im),
                    rhs_re: raw(r.rhs.re),
                    rhs_im: raw(r.rhs.im),
                    abs_err: raw(r.abs_err),
                    rel_err: raw(r.rel_err),
                    pass: r.pass(),
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &records).map_err(|e| CliError::Io(e.to_string()))?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["id", "point", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "rel_err", "pass"])
                .map_err(csv_error)?;
            for r in reports {
                w.write_record([
                    r.id.clone(),
                    r.point.to_string(),
                    machine(r.lhs.re),
                    machine(r.lhs.im),
                    machine(r.rhs.re),
                    machine(r.rhs.im),
                    machine(r.abs_err),
                    machine(r.rel_err),
                    r.pass().to_string(),
                ])
                .map_err(csv_error)?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in reports {
                let verdict = match &r.outcome {
                    foxwright_harness::Outcome::Pass => "PASS".to_string(),
                    foxwright_harness::Outcome::Fail => "FAIL".to_string(),
                    foxwright_harness::Outcome::Skipped(why) => format!("SKIP ({why})"),
                };
                writeln!(
                    out,
                    "{verdict} {} [{}] lhs={} rhs={} abs_err={} rel_err={}",
                    r.id,
                    r.point,
                    text_complex(r.lhs),
                    text_complex(r.rhs),
                    text(r.abs_err),
                    text(r.rel_err)
                )?;
                if r.outcome == foxwright_harness::Outcome::Fail && !r.diagnostics.is_empty() {
                    writeln!(out, "    {}", r.diagnostics)?;
                }
            }
        }
    }
    Ok(())
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::Io(e.to_string())
}

pub fn write_evaluation(out: &mut dyn Write, function: &str, v: &Evaluated, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Record<'a> {
                function: &'a str,
                value_re: Box<RawValue>,
                value_im: Box<RawValue>,
                terms_used: usize,
                tail_estimate: Box<RawValue>,
                converged: bool,
            }
            let record = Record {
                function,
                value_re: raw(v.value.re),
                value_im: raw(v.value.im),
                terms_used: v.terms_used,
                tail_estimate: raw(v.tail_estimate),
                converged: v.converged,
            };
            serde_json::to_writer_pretty(&mut *out, &record).map_err(|e| CliError::Io(e.to_string()))?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["function", "value_re", "value_im", "terms_used", "tail_estimate", "converged"])
                .map_err(csv_error)?;
            w.write_record([
                function.to_string(),
                machine(v.value.re),
                machine(v.value.im),
                v.terms_used.to_string(),
                machine(v.tail_estimate),
                v.converged.to_string(),
            ])
            .map_err(csv_error)?;
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "{function} = {}", text_complex(v.value))?;
            writeln!(out, "terms_used = {}", v.terms_used)?;
            writeln!(out, "tail_estimate = {}", text(v.tail_estimate))?;
            writeln!(out, "converged = {}", v.converged)?;
        }
    }
    Ok(())
}

pub fn write_list(out: &mut dyn Write, cases: &[IdentityCase], format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Entry<'a> {
                id: &'a str,
                anchor: &'a str,
                kind: &'a str,
                grid_size: usize,
            }
            let entries: Vec<Entry> = cases
                .iter()
                .map(|c| Entry { id: c.id, anchor: c.anchor, kind: c.kind.name(), grid_size: c.grid.len() })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &entries).map_err(|e| CliError::Io(e.to_string()))?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["id", "anchor", "kind", "grid_size"]).map_err(csv_error)?;
            for c in cases {
                w.write_record([c.id, c.anchor, c.kind.name(), &c.grid.len().to_string()]).map_err(csv_error)?;
            }
            w.flush()?;
        }
        Format::Text => {
            let width = cases.iter().map(|c| c.id.len()).max().unwrap_or(0);
            for c in cases {
                writeln!(out, "{:<width$}  {:>3} points  {}", c.id, c.grid.len(), c.anchor)?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_numbers_round_trip() {
        for x in [std::f64::consts::PI, 1.0 / 3.0, 6.02214076e23, -2.2250738585072014e-308, 0.1 + 0.2] {
            let s = machine(x);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), x.to_bits(), "{s}");
            let digits = s.split('e').next().unwrap().chars().filter(char::is_ascii_digit).count();
            assert_eq!(digits, 17);
        }
        assert_eq!(machine(f64::NAN), "");
    }

    #[test]
    fn text_numbers_have_ten_digits() {
        assert_eq!(text(std::f64::consts::PI * std::f64::consts::PI / 6.0), "1.644934067");
        assert_eq!(text(123.456789012345), "123.4567890");
        assert_eq!(text(1.5e-12), "1.500000000e-12");
        assert_eq!(text(0.0), "0");
        assert_eq!(text_complex(Complex64::new(1.0, -0.5)), "1.000000000 - 0.5000000000i");
    }
}
