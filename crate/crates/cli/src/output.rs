use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;
use zagreb::bounds::{BoundCheck, Quantity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    /// One JSON object per line
    Json,
}

#[derive(Serialize)]
struct Record<'a, P: Serialize> {
    command: &'a str,
    input: &'a str,
    payload: &'a P,
}

pub struct Emitter {
    pub format: OutputFormat,
    pub command: &'static str,
}

impl Emitter {
    /// Prints one record; `text` is only rendered for text output.
    pub fn emit<P: Serialize>(&self, input: &str, payload: &P, text: impl FnOnce() -> String) -> Result<()> {
        let line = match self.format {
            OutputFormat::Json => serde_json::to_string(&Record { command: self.command, input, payload })?,
            OutputFormat::Text => text(),
        };
        writeln!(std::io::stdout().lock(), "{line}")?;
        Ok(())
    }
}

/// Rounds to 12 significant digits.
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub fn fmt_real(x: f64) -> String {
    sig12(x).to_string()
}

pub fn fmt_quantity(q: Quantity) -> String {
    match q {
        Quantity::Exact(f) => f.to_string(),
        Quantity::Real(x) => fmt_real(x),
    }
}

/// Floating quantities rounded for display.
pub fn rounded(mut c: BoundCheck) -> BoundCheck {
    for q in [&mut c.lhs, &mut c.rhs] {
        if let Quantity::Real(x) = q {
            *x = sig12(*x);
        }
    }
    c
}

pub fn describe_check(c: &BoundCheck) -> String {
    let lambda = c.lambda.map(|l| format!("@{l}")).unwrap_or_default();
    format!(
        "  {:<24} {} <= {}  satisfied={} tight={} equality_condition={}",
        format!("{}{lambda}", c.name.key()),
        fmt_quantity(c.lhs),
        fmt_quantity(c.rhs),
        c.satisfied,
        c.tight,
        c.equality_condition_met
    )
}
