use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

use casimir_density::QuadratureConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

pub fn quad_json(cfg: &QuadratureConfig) -> Value {
    json!({
        "rel_tol": cfg.rel_tol,
        "abs_tol": cfg.abs_tol,
        "tail_exponent_budget": cfg.tail_exponent_budget,
        "max_subdivisions": cfg.max_subdivisions,
        "inner_rule_order": cfg.inner_rule_order,
        "min_decay_scale": cfg.min_decay_scale,
    })
}

/// Tabular output with its configuration header.
pub struct Document {
    command: &'static str,
    argv: String,
    columns: Vec<&'static str>,
    config: Vec<(String, String)>,
    quad: Option<QuadratureConfig>,
    rows: Vec<Vec<f64>>,
}

impl Document {
    pub fn new(command: &'static str, argv: String, columns: &[&'static str]) -> Self {
        Document { command, argv, columns: columns.to_vec(), config: Vec::new(), quad: None, rows: Vec::new() }
    }

    pub fn config(&mut self, key: &str, value: String) {
        self.config.push((key.to_string(), value));
    }

    pub fn quad_config(&mut self, cfg: &QuadratureConfig) {
        self.quad = Some(*cfg);
    }

    pub fn row(&mut self, values: &[f64]) {
        self.rows.push(values.to_vec());
    }

    pub fn write(&self, format: Format, path: Option<&Path>) -> Result<(), crate::CliError> {
        let mut sink: Box<dyn Write> = match path {
            Some(p) => Box::new(io::BufWriter::new(File::create(p)?)),
            None => Box::new(io::stdout().lock()),
        };
        match format {
            Format::Csv => self.write_csv(&mut sink)?,
            Format::Json => self.write_json(&mut sink)?,
        }
        sink.flush()?;
        Ok(())
    }

    fn write_csv(&self, sink: &mut dyn Write) -> Result<(), crate::CliError> {
        writeln!(sink, "# casimir-density {} {}", env!("CARGO_PKG_VERSION"), self.command)?;
        writeln!(sink, "# argv: {}", self.argv)?;
        for (k, v) in &self.config {
            writeln!(sink, "# {k} = {v}")?;
        }
        if let Some(q) = &self.quad {
            writeln!(sink, "# quadrature = {}", quad_json(q))?;
        }
        let mut w = csv::Writer::from_writer(sink);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|v| format!("{v:e}")))?;
        }
        w.flush()?;
        Ok(())
    }

    fn write_json(&self, sink: &mut dyn Write) -> Result<(), crate::CliError> {
        let mut config = Map::new();
        config.insert("command".into(), json!(self.command));
        config.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        config.insert("argv".into(), json!(self.argv));
        for (k, v) in &self.config {
            config.insert(k.clone(), json!(v));
        }
        if let Some(q) = &self.quad {
            config.insert("quadrature".into(), quad_json(q));
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(r)
                    // JSON has no infinity; the reference row carries null
                    .map(|(c, v)| (c.to_string(), if v.is_finite() { json!(v) } else { Value::Null }))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let doc = json!({ "config": config, "rows": rows, "checks": [] });
        serde_json::to_writer_pretty(&mut *sink, &doc)?;
        writeln!(sink)?;
        Ok(())
    }
}
