//! JSON and text reports.
//!
//! JSON output has keys sorted at every level, LF line endings and a
//! trailing newline, so identical inputs give byte-identical output.

use serde::{Deserialize, Serialize};

use crate::group::{fixed_two_torsion, FiniteGroup, GroupAutomorphism};
use crate::quandle::FiniteQuandle;
use crate::symq::SqClassification;
use crate::torus::TorusSummary;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Summary of one quandle: its basic properties, good involutions and
/// symmetric quandle classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub agreement: Option<bool>,
    pub automorphism: Option<Vec<usize>>,
    pub elapsed_ms: Option<u64>,
    pub fixed_two_torsion: Option<Vec<usize>>,
    pub good_involutions: Option<Vec<Vec<usize>>>,
    pub group_spec: Option<String>,
    pub is_connected: bool,
    pub is_kei: bool,
    pub kei_witness: Option<[usize; 2]>,
    pub notes: Vec<String>,
    pub orbit_count: usize,
    pub order: usize,
    pub sq_classes_bruteforce: Option<usize>,
    pub sq_classes_theorem: Option<usize>,
    pub tool_version: String,
}

impl Report {
    /// Properties of `q` with nothing classified yet.
    pub fn for_quandle(q: &FiniteQuandle) -> Self {
        Report {
            agreement: None,
            automorphism: None,
            elapsed_ms: None,
            fixed_two_torsion: None,
            good_involutions: None,
            group_spec: None,
            is_connected: q.is_connected(),
            is_kei: q.is_kei(),
            kei_witness: q.kei_witness().map(|(x, y)| [x, y]),
            notes: Vec::new(),
            orbit_count: q.inner_orbits().count(),
            order: q.order(),
            sq_classes_bruteforce: None,
            sq_classes_theorem: None,
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn for_galex(
        q: &FiniteQuandle,
        group_spec: &str,
        group: &FiniteGroup,
        phi: &GroupAutomorphism,
    ) -> Self {
        Report {
            automorphism: Some(phi.perm().to_vec()),
            fixed_two_torsion: Some(fixed_two_torsion(group, phi).members().to_vec()),
            group_spec: Some(group_spec.to_string()),
            ..Report::for_quandle(q)
        }
    }

    /// Copies a classification into the report.
    pub fn absorb(&mut self, c: SqClassification) {
        if c.fixed_two_torsion.is_some() {
            self.fixed_two_torsion = c.fixed_two_torsion;
        }
        self.sq_classes_bruteforce = c.classes_bruteforce.as_ref().map(Vec::len);
        self.sq_classes_theorem = c.classes_theorem.as_ref().map(Vec::len);
        self.agreement = c.agreement;
        self.good_involutions = Some(c.good_involutions);
        self.notes.extend(c.notes);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusReport {
    pub class_count: usize,
    /// Null in dimension 1.
    pub e1_orbit_is_all_nonzero: Option<bool>,
    pub n: usize,
    pub notes: Vec<String>,
    /// Smallest member of each orbit, as bit strings (most significant
    /// coordinate first).
    pub orbit_representatives: Vec<String>,
    pub orbit_sizes: Vec<usize>,
    pub tool_version: String,
    pub two_torsion_size: usize,
}

impl From<TorusSummary> for TorusReport {
    fn from(s: TorusSummary) -> Self {
        TorusReport {
            class_count: s.class_count,
            e1_orbit_is_all_nonzero: s.unit_orbit_is_all_nonzero,
            n: s.n,
            notes: s.notes,
            orbit_representatives: s
                .orbit_representatives
                .iter()
                .map(ToString::to_string)
                .collect(),
            orbit_sizes: s.orbit_sizes,
            tool_version: TOOL_VERSION.to_string(),
            two_torsion_size: s.two_torsion_size,
        }
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    // serde_json::Value keeps object keys in a BTreeMap.
    let v = serde_json::to_value(value).expect("report types serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn text_value(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::Null => "-".into(),
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// `key: value` lines in key order; arrays of arrays get one line per item.
pub fn to_text<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report types serialize");
    let mut out = String::new();
    let serde_json::Value::Object(map) = v else {
        return text_value(&v) + "\n";
    };
    for (key, val) in &map {
        match val {
            serde_json::Value::Array(items)
                if items.iter().any(|i| i.is_array() || i.is_string()) =>
            {
                out.push_str(&format!("{key}: {} item(s)\n", items.len()));
                for item in items {
                    out.push_str(&format!("  {}\n", text_value(item)));
                }
            }
            _ => out.push_str(&format!("{key}: {}\n", text_value(val))),
        }
    }
    out
}

pub fn emit<T: Serialize>(value: &T, format: Format) -> String {
    match format {
        Format::Json => to_json(value),
        Format::Text => to_text(value),
    }
}

pub fn emit_report(r: &Report, format: Format) -> String {
    emit(r, format)
}
