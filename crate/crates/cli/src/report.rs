use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Value};
use skeinpos_core::positivity::{AuditRow, ConstraintReport};
use skeinpos_core::SkeinVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

/// Output of one command in all three renderings.
pub struct Report {
    pub passed: bool,
    text: Vec<String>,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    json: Value,
}

pub fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

impl Report {
    pub fn new(command: &str, header: Vec<&'static str>) -> Self {
        Report {
            passed: true,
            text: Vec::new(),
            header,
            rows: Vec::new(),
            json: json!({ "command": command }),
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells);
    }

    pub fn set(&mut self, key: &str, v: Value) {
        self.json[key] = v;
    }

    pub fn push(&mut self, key: &str, v: Value) {
        match self.json.get_mut(key).and_then(Value::as_array_mut) {
            Some(arr) => arr.push(v),
            None => self.json[key] = Value::Array(vec![v]),
        }
    }

    pub fn fail_if(&mut self, failed: bool) {
        self.passed &= !failed;
    }

    pub fn render(mut self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Text => {
                for l in &self.text {
                    writeln!(out, "{l}").unwrap();
                }
                writeln!(out, "{}", status(self.passed)).unwrap();
            }
            Format::Tsv => {
                writeln!(out, "{}", self.header.join("\t")).unwrap();
                for r in &self.rows {
                    writeln!(out, "{}", r.join("\t")).unwrap();
                }
            }
            Format::Json => {
                self.json["passed"] = Value::Bool(self.passed);
                writeln!(out, "{}", serde_json::to_string_pretty(&self.json).unwrap()).unwrap();
            }
        }
        out
    }
}

pub fn vector_json(v: &SkeinVector) -> Value {
    serde_json::to_value(v).expect("vector serializes")
}

/// Adds a constraint report: table lines, TSV rows and the JSON object.
pub fn add_constraints(r: &mut Report, heading: &str, c: &ConstraintReport) {
    r.line(heading.to_string());
    r.line(format!("sequence: {}  n = {}", c.sequence, c.n));
    if let Some(a) = &c.a {
        r.line(format!("a = {a}"));
    }
    if !c.c.is_empty() {
        let cs: Vec<String> = c.c.iter().map(|x| x.to_string()).collect();
        r.line(format!("c = ({})", cs.join(", ")));
    }
    if !c.expansion.is_empty() {
        let terms: Vec<String> = c
            .expansion
            .iter()
            .map(|e| match e.coeff.num_terms() {
                1 => format!("{}·{}", e.coeff, e.symbol),
                _ => format!("({})·{}", e.coeff, e.symbol),
            })
            .collect();
        r.line(format!("expansion: {}", terms.join(" + ")));
    }
    let width = c.constraints.iter().map(|x| x.label.len()).max().unwrap_or(0);
    for x in &c.constraints {
        r.line(format!(
            "  {:<width$}  {:>24}  in {:<10} {}",
            x.label,
            x.value.to_string(),
            x.requirement.to_string(),
            status(x.satisfied)
        ));
        r.row(vec![
            x.label.clone(),
            x.value.to_string(),
            x.requirement.to_string(),
            status(x.satisfied).into(),
        ]);
    }
    for x in &c.cross_checks {
        r.line(format!("  diagram: {}  {}", x.label, status(x.agrees)));
        if !x.agrees {
            r.line(format!("    expected {}", x.expected));
            r.line(format!("    computed {}", x.computed));
        }
        r.row(vec![
            x.label.clone(),
            x.computed.to_string(),
            x.expected.to_string(),
            status(x.agrees).into(),
        ]);
    }
    r.line(format!("conclusion: {}", c.conclusion));
    r.push("reports", serde_json::to_value(c).expect("report serializes"));
    r.fail_if(!c.passed());
}

pub fn add_audit_row(r: &mut Report, row: &AuditRow) {
    let cs: Vec<String> = row.coeffs.iter().map(|x| x.to_string()).collect();
    let coeffs = format!("({})", cs.join(", "));
    r.line(format!(
        "P_{} P_{} = {}  {}",
        row.m,
        row.n,
        coeffs,
        status(row.all_positive)
    ));
    r.row(vec![
        row.m.to_string(),
        row.n.to_string(),
        coeffs,
        status(row.all_positive).into(),
    ]);
    r.push("rows", serde_json::to_value(row).expect("row serializes"));
    r.fail_if(!row.all_positive);
}
