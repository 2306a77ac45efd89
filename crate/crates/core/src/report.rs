//! Serializable results of a script run or a single-shot query.
//!
//! Numbers are rounded to 12 significant digits when a section is built, so
//! JSON output is stable and round-trips exactly. Complex numbers are
//! `[re, im]` pairs and matrices are row-major.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::entangle::Concurrence;
use crate::matrix::ComplexMatrix;
use crate::membership::MembershipModel;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub model: String,
    pub sections: Vec<Section>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum Section {
    Probabilities(Vec<Listing>),
    Memberships(Vec<Listing>),
    Density(Vec<DensityEntry>),
    Expectations(Vec<ExpectationEntry>),
    Concurrence(ConcurrenceRecord),
    Norm(NormRecord),
}

impl Section {
    pub fn kind(&self) -> &'static str {
        match self {
            Section::Probabilities(_) => "probabilities",
            Section::Memberships(_) => "memberships",
            Section::Density(_) => "density",
            Section::Expectations(_) => "expectations",
            Section::Concurrence(_) => "concurrence",
            Section::Norm(_) => "norm",
        }
    }
}

/// Per-basis-state values for one qubit or register.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Listing {
    pub target: String,
    pub labels: Vec<String>,
    pub values: Vec<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Listing {
    pub fn new(
        target: impl Into<String>,
        labels: Vec<String>,
        values: impl IntoIterator<Item = f64>,
    ) -> Self {
        Listing {
            target: target.into(),
            labels,
            values: values.into_iter().map(round12).collect(),
            notes: Vec::new(),
        }
    }

    pub fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityEntry {
    pub target: String,
    pub matrix: Vec<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl DensityEntry {
    pub fn new(target: impl Into<String>, m: &ComplexMatrix<f64>) -> Self {
        DensityEntry {
            target: target.into(),
            matrix: m
                .rows()
                .map(|row| row.iter().map(|z| complex_pair(*z)).collect())
                .collect(),
            notes: Vec::new(),
        }
    }

    pub fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpectationEntry {
    pub target: String,
    pub values: Vec<NamedValue>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ExpectationEntry {
    pub fn new<S: ToString>(
        target: impl Into<String>,
        values: impl IntoIterator<Item = (S, f64)>,
    ) -> Self {
        ExpectationEntry {
            target: target.into(),
            values: values
                .into_iter()
                .map(|(n, v)| NamedValue {
                    name: n.to_string(),
                    value: round12(v),
                })
                .collect(),
            notes: Vec::new(),
        }
    }

    pub fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConcurrenceRecord {
    pub target: String,
    pub c_q: f64,
    pub c_mu: f64,
    pub c_scal: f64,
}

impl ConcurrenceRecord {
    pub fn new(target: impl Into<String>, c: Concurrence<f64>) -> Self {
        ConcurrenceRecord {
            target: target.into(),
            c_q: round12(c.c_q),
            c_mu: round12(c.c_mu),
            c_scal: round12(c.c_scal),
        }
    }
}

/// Product-form norm `Σ α_i² |a_i|²` next to its Bloch closed form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormRecord {
    pub target: String,
    pub norm: f64,
    pub closed_form: f64,
}

impl NormRecord {
    pub fn new(target: impl Into<String>, norm: f64, closed_form: f64) -> Self {
        NormRecord {
            target: target.into(),
            norm: round12(norm),
            closed_form: round12(closed_form),
        }
    }
}

impl Report {
    pub fn new(model: MembershipModel) -> Self {
        Report {
            model: model.name().to_string(),
            sections: Vec::new(),
        }
    }

    pub fn push(&mut self, section: Section) {
        self.sections.push(section);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is always serializable")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    /// Human-readable rendering. Values within 1e-12 of a fraction with
    /// denominator at most 32 are shown as that fraction.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "model: {}", self.model);
        for section in &self.sections {
            let _ = writeln!(out, "\n[{}]", section.kind());
            match section {
                Section::Probabilities(entries) | Section::Memberships(entries) => {
                    for e in entries {
                        let _ = writeln!(out, "{}", e.target);
                        for (label, v) in e.labels.iter().zip(&e.values) {
                            let _ = writeln!(out, "  {label:<5} {}", format_value(*v));
                        }
                        write_notes(&mut out, &e.notes);
                    }
                }
                Section::Density(entries) => {
                    for e in entries {
                        let _ = writeln!(out, "{}", e.target);
                        let cells: Vec<Vec<String>> = e
                            .matrix
                            .iter()
                            .map(|row| row.iter().map(|&[re, im]| format_complex(re, im)).collect())
                            .collect();
                        let width = cells
                            .iter()
                            .flatten()
                            .map(|c| c.chars().count())
                            .max()
                            .unwrap_or(0);
                        for row in cells {
                            let line: Vec<String> =
                                row.iter().map(|c| format!("{c:>width$}")).collect();
                            let _ = writeln!(out, "  {}", line.join("  "));
                        }
                        write_notes(&mut out, &e.notes);
                    }
                }
                Section::Expectations(entries) => {
                    for e in entries {
                        let _ = writeln!(out, "{}", e.target);
                        for nv in &e.values {
                            let _ = writeln!(out, "  {:<5} {}", nv.name, format_value(nv.value));
                        }
                        write_notes(&mut out, &e.notes);
                    }
                }
                Section::Concurrence(c) => {
                    let _ = writeln!(out, "{}", c.target);
                    for (name, v) in [("c_q", c.c_q), ("c_mu", c.c_mu), ("c_scal", c.c_scal)] {
                        let _ = writeln!(out, "  {name:<6} {}", format_value(v));
                    }
                }
                Section::Norm(n) => {
                    let _ = writeln!(out, "{}", n.target);
                    let _ = writeln!(out, "  norm        {}", format_value(n.norm));
                    let _ = writeln!(out, "  closed form {}", format_value(n.closed_form));
                }
            }
        }
        out
    }
}

fn write_notes(out: &mut String, notes: &[String]) {
    for n in notes {
        let _ = writeln!(out, "  note: {n}");
    }
}

/// Rounds to 12 significant digits; `-0` becomes `0`.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn complex_pair(z: Complex64) -> [f64; 2] {
    [round12(z.re), round12(z.im)]
}

/// Small fraction `n/d` (d ≤ 32) within 1e-12 of `x`, in lowest terms.
pub fn as_small_fraction(x: f64) -> Option<(i64, i64)> {
    (1..=32i64).find_map(|d| {
        let n = (x * d as f64).round();
        ((x - n / d as f64).abs() <= 1e-12).then_some((n as i64, d))
    })
}

pub fn format_value(x: f64) -> String {
    match as_small_fraction(x) {
        Some((n, 1)) => n.to_string(),
        Some((n, d)) => format!("{n}/{d}"),
        None => format!("{}", round12(x)),
    }
}

fn format_complex(re: f64, im: f64) -> String {
    if im == 0.0 {
        return format_value(re);
    }
    let imag = match format_value(im.abs()).as_str() {
        "1" => "i".to_string(),
        s => format!("{s}i"),
    };
    match (re == 0.0, im < 0.0) {
        (true, false) => imag,
        (true, true) => format!("-{imag}"),
        (false, false) => format!("{}+{imag}", format_value(re)),
        (false, true) => format!("{}-{imag}", format_value(re)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round12(0.1 + 0.2), 0.3);
        assert_eq!(round12(-0.0), 0.0);
        assert_eq!(round12(1.0 / 3.0), 0.333333333333);
        assert_eq!(round12(123456.7890123456), 123456.789012);
        assert_eq!(round12(2.0 / 7.0), 0.285714285714);
    }

    #[test]
    fn fractions() {
        assert_eq!(format_value(0.25), "1/4");
        assert_eq!(format_value(3.0 / 16.0), "3/16");
        assert_eq!(format_value(1.0), "1");
        assert_eq!(format_value(0.0), "0");
        assert_eq!(format_value(-0.5), "-1/2");
        assert_eq!(format_value(1.0 / 3.0), "1/3");
        assert_eq!(format_value(1.0 / 33.0), "0.030303030303");
        assert_eq!(
            format_value(std::f64::consts::FRAC_1_SQRT_2),
            "0.707106781187"
        );
        assert_eq!(format_complex(0.5, -0.5), "1/2-1/2i");
        assert_eq!(format_complex(0.0, 1.0), "i");
    }

    #[test]
    fn json_round_trip() {
        let mut r = Report::new(MembershipModel::Arc);
        r.push(Section::Probabilities(vec![Listing::new(
            "q0",
            vec!["0".into(), "1".into()],
            [0.5, 0.5],
        )
        .with_notes(vec!["n".into()])]));
        r.push(Section::Density(vec![DensityEntry::new(
            "q0",
            &ComplexMatrix::identity(2),
        )]));
        r.push(Section::Expectations(vec![ExpectationEntry::new(
            "q0",
            [("P0", 0.1 + 0.2)],
        )]));
        r.push(Section::Concurrence(ConcurrenceRecord::new(
            "a,b",
            Concurrence {
                c_q: 1.0,
                c_mu: 2.0f64.sqrt() / 3.0,
                c_scal: 0.5,
            },
        )));
        let json = r.to_json();
        assert_eq!(Report::from_json(&json).unwrap(), r);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["sections"][0]["kind"], "probabilities");
        assert_eq!(v["sections"][3]["payload"]["c_q"], 1.0);
        assert_eq!(
            v["sections"][1]["payload"][0]["matrix"][0][0],
            serde_json::json!([1.0, 0.0])
        );
    }
}
