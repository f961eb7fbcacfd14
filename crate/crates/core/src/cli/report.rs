use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use super::config::RunConfig;
use crate::error::{Error, Result};
use crate::properties::{FixtureReport, Outcome, PropertyVerdict};

/// What a subcommand produced: a machine-readable body plus Markdown lines.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub exit_code: i32,
    pub status: String,
    pub config: RunConfig,
    pub result: Value,
    #[serde(skip)]
    pub markdown: String,
}

impl Report {
    pub fn new(command: impl Into<String>, config: &RunConfig) -> Self {
        Report {
            command: command.into(),
            exit_code: 0,
            status: "ok".into(),
            config: config.clone(),
            result: Value::Null,
            markdown: String::new(),
        }
    }

    pub fn fail(&mut self, code: i32, status: impl Into<String>) {
        self.exit_code = self.exit_code.max(code);
        self.status = status.into();
    }

    pub fn line(&mut self, text: impl AsRef<str>) {
        self.markdown.push_str(text.as_ref());
        self.markdown.push('\n');
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# menger {}\n", self.command);
        let _ = writeln!(out, "status: **{}** (exit {})\n", self.status, self.exit_code);
        out.push_str(&self.markdown);
        let _ = writeln!(out, "\n## Configuration\n\n```toml\n{}```", self.config.to_toml());
        out
    }

    /// Writes `report.json` and `report.md` into `dir`.
    pub fn write(&self, dir: &Path) -> Result<()> {
        let io = |e: std::io::Error| Error::Io(format!("{}: {e}", dir.display()));
        std::fs::create_dir_all(dir).map_err(io)?;
        std::fs::write(dir.join("report.json"), self.to_json()).map_err(io)?;
        std::fs::write(dir.join("report.md"), self.to_markdown()).map_err(io)?;
        Ok(())
    }
}

pub fn fixture_markdown(r: &mut Report, f: &FixtureReport) {
    r.line(format!("## Fixture `{}` on `{}`\n", f.name, f.space));
    r.line(format!("{}\n", f.summary));
    r.line("| claim | computed | expected | reproduced |");
    r.line("|---|---|---|---|");
    for c in &f.claims {
        r.line(format!("| {} | {} | {} | {} |", c.statement, c.value, c.expected, if c.reproduced { "yes" } else { "NO" }));
    }
    if !f.verdicts.is_empty() {
        r.line("");
        verdict_table(r, &f.verdicts);
    }
}

pub fn verdict_table(r: &mut Report, verdicts: &[PropertyVerdict]) {
    r.line("| property | space | status | samples | detail |");
    r.line("|---|---|---|---|---|");
    for v in verdicts {
        let detail = match &v.outcome {
            Outcome::Holds { max_slack, .. } => match max_slack {
                Some(s) => format!("tightest lhs - rhs {s}"),
                None => String::new(),
            },
            Outcome::Fails { certificate, sample_index } => format!(
                "lhs {} vs rhs {} ({:?}){}",
                certificate.lhs,
                certificate.rhs,
                certificate.relation,
                sample_index.map(|i| format!(" at sample {i}")).unwrap_or_default()
            ),
            Outcome::Refused { reason } => reason.clone(),
        };
        r.line(format!("| {} | {} | {} | {} | {} |", v.property.name(), v.space, v.status(), v.samples(), detail));
    }
}
