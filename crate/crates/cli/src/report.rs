//! JSON documents. Exact integers travel as decimal strings.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use tbk_core::{IntPolynomial, PrepReport};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        // -0.0 and 0.0 print differently; keep output stable.
        let clean = |x: f64| if x == 0.0 { 0.0 } else { x };
        ComplexValue {
            re: clean(z.re),
            im: clean(z.im),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq)]
pub struct RootEntry {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct ClassEntry {
    pub factor: Vec<String>,
    pub roots: Vec<ComplexValue>,
    pub g: Vec<ComplexValue>,
    /// The common value of `g` when it is a rational integer.
    pub g_exact: Option<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct ReportDocument {
    pub schema_version: String,
    pub form: [String; 2],
    pub lambda: Vec<String>,
    pub roots: Vec<RootEntry>,
    pub classes: Vec<ClassEntry>,
    /// Milliseconds per stage; empty unless requested.
    pub timings: BTreeMap<String, f64>,
}

pub fn coeff_strings(p: &IntPolynomial) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

impl ReportDocument {
    pub fn from_report(r: &PrepReport, timings: BTreeMap<String, f64>) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.into(),
            form: [r.form.alpha().to_string(), r.form.beta().to_string()],
            lambda: coeff_strings(&r.lambda),
            roots: r
                .roots
                .iter()
                .map(|(z, residual)| {
                    let z = ComplexValue::from(z);
                    RootEntry {
                        re: z.re,
                        im: z.im,
                        residual,
                    }
                })
                .collect(),
            classes: r.classes.iter().map(class_entry).collect(),
            timings,
        }
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

pub fn class_entry(c: &tbk_core::PRepClass) -> ClassEntry {
    ClassEntry {
        factor: coeff_strings(&c.factor),
        roots: c.roots.iter().map(|&z| z.into()).collect(),
        g: c.longitude_entries.iter().map(|&z| z.into()).collect(),
        g_exact: c.g_constant().map(|g| g.to_string()),
    }
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("documents contain only finite floats")
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct WordDocument {
    pub form: [String; 2],
    pub exponents: Vec<i8>,
    pub relator: String,
    pub longitude: String,
    pub sigma: i64,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct PrepDocument {
    pub form: [String; 2],
    pub lambda: Vec<String>,
    pub degree: usize,
    pub squarefree: bool,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct RootsDocument {
    pub polynomial: Vec<String>,
    pub roots: Vec<RootEntry>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct FactorsDocument {
    pub form: [String; 2],
    pub classes: Vec<ClassEntry>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct LongitudeEntry {
    pub index: usize,
    pub omega: ComplexValue,
    pub g: ComplexValue,
    pub g_abs: f64,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct LongitudeDocument {
    pub form: [String; 2],
    pub entries: Vec<LongitudeEntry>,
    /// Residue of `g` modulo the factor, when one was given.
    pub g_residue: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct SphereEntry {
    pub label: String,
    pub aliases: Vec<String>,
    pub center: ComplexValue,
    pub radius: f64,
    pub visible_fraction: f64,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct FordDocument {
    pub form: [String; 2],
    pub omega: ComplexValue,
    pub t1: ComplexValue,
    pub t2: ComplexValue,
    pub degenerate: bool,
    pub coverage: f64,
    pub samples: usize,
    pub spheres: Vec<SphereEntry>,
    pub svg: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ShimizuDocument {
    pub omega: ComplexValue,
    pub max_len: usize,
    pub witness: Option<String>,
    pub c_abs: Option<f64>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct VerifyDocument {
    pub factor: Vec<String>,
    pub checks: BTreeMap<String, bool>,
    pub all_hold: bool,
}
