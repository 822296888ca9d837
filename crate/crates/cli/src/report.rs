//! Report tree shared by every verb. The JSON layout is described in
//! `docs/report-schema.md`.

use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

use symrep::modrep::GroupModule;

use crate::config::{Cli, Command, Format, RunConfig};
use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ModuleRef {
    pub label: String,
    pub d: usize,
    pub p: u32,
    pub dim: usize,
    pub hash: String,
}

impl ModuleRef {
    pub fn of(m: &GroupModule) -> Self {
        ModuleRef { label: m.label().to_string(), d: m.d(), p: m.p(), dim: m.dim(), hash: m.content_hash() }
    }
}

/// What a verb hands back: a verdict, a JSON tree and its table rendering.
pub struct Outcome {
    pub passed: bool,
    pub degree: Option<usize>,
    pub result: Value,
    pub table: String,
    pub modules: Vec<ModuleRef>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool: String,
    pub command: String,
    pub arguments: Vec<String>,
    pub config: Option<RunConfig>,
    pub degree: Option<usize>,
    pub passed: bool,
    pub exit_code: i32,
    pub error: Option<String>,
    pub result: Value,
    pub modules: Vec<ModuleRef>,
    pub wall_time_ms: u64,
    #[serde(skip)]
    table: String,
}

impl Report {
    pub fn new(cli: &Cli) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            tool: format!("symrep {}", env!("CARGO_PKG_VERSION")),
            command: cli.command.name().to_string(),
            arguments: arguments(&cli.command),
            config: None,
            degree: None,
            passed: false,
            exit_code: 2,
            error: None,
            result: Value::Null,
            modules: Vec::new(),
            wall_time_ms: 0,
            table: String::new(),
        }
    }

    pub fn finish(&mut self, o: Outcome) {
        self.passed = o.passed;
        self.exit_code = if o.passed { 0 } else { 1 };
        self.degree = o.degree;
        self.result = o.result;
        self.table = o.table;
        let mut modules = o.modules;
        modules.sort();
        modules.dedup();
        self.modules = modules;
    }

    pub fn fail(&mut self, e: &CliError) {
        self.passed = false;
        self.exit_code = e.exit_code();
        self.error = Some(e.to_string());
        self.table = format!("error: {e}\n");
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Table => self.render_table(),
        }
    }

    fn render_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}  {} {}", self.tool, self.command, self.arguments.join(" "));
        if let Some(c) = &self.config {
            let _ = writeln!(
                s,
                "p={} d={} seed={} limit-regular={} budget={} cache-dir={}",
                c.p,
                self.degree.or(c.d).map_or("-".into(), |d| d.to_string()),
                c.seed,
                c.regular_limit,
                c.budget,
                c.cache_dir.as_ref().map_or("-".into(), |p| p.display().to_string())
            );
        }
        s.push('\n');
        s.push_str(&self.table);
        if !self.modules.is_empty() {
            s.push_str("\nmodules:\n");
            for m in &self.modules {
                let _ = writeln!(s, "  {:<24} d={} p={} dim={:<4} {}", m.label, m.d, m.p, m.dim, m.hash);
            }
        }
        let _ = writeln!(
            s,
            "\n{} (exit {})  {} ms",
            if self.passed { "PASS" } else { "FAIL" },
            self.exit_code,
            self.wall_time_ms
        );
        s
    }
}

fn arguments(c: &Command) -> Vec<String> {
    match c {
        Command::Specht { partition } | Command::Perm { partition } | Command::Young { partition } => {
            vec![partition.clone()]
        }
        Command::Simple { partition, labeling } => vec![partition.clone(), format!("--labeling {labeling:?}").to_lowercase()],
        Command::SignedPerm { spec } => vec![spec.clone()],
        Command::Criteria { expr, require } => {
            let mut v = vec![expr.clone()];
            if !require.is_empty() {
                let r: Vec<String> = require.iter().map(|c| format!("{c:?}").to_lowercase()).collect();
                v.push(format!("--require {}", r.join(",")));
            }
            v
        }
        Command::Filtration { expr, kind } => vec![expr.clone(), format!("--kind {kind:?}").to_lowercase()],
        Command::VerifyPaper { section } => vec![format!("--section {}", section_name(*section))],
        Command::SweepSigned => Vec::new(),
    }
}

pub fn section_name(s: crate::config::Section) -> &'static str {
    use crate::config::Section;
    match s {
        Section::Four => "4",
        Section::Six => "6",
        Section::Seven => "7",
        Section::All => "all",
    }
}
