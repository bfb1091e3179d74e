//! Checksummed fixture files in the data directory.
//!
//! `MANIFEST.sha256` lists `<hex digest>  <file name>` per line, in the
//! format of `sha256sum`. Every fixture read goes through it.

use lode_catalog::StandardEquation;
use lode_diffop::{LinODE, RatFun};
use lode_exactnum::{parse_rat, QPoly, Rat};
use lode_invariants::SyzygyFixture;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

pub const MANIFEST: &str = "MANIFEST.sha256";
pub const EXAMPLE_FILE: &str = "example.json";
pub const STANDARD_FILE: &str = "standard_equations.json";
pub const SYZYGY_FILE: &str = "syzygies.json";

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum FixtureError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{0} is not listed in {MANIFEST}")]
    Unlisted(String),
    #[error("checksum mismatch for {file}: manifest {expected}, file {actual}")]
    Checksum { file: String, expected: String, actual: String },
    #[error("malformed manifest line {0:?}")]
    Manifest(String),
    #[error("cannot parse {file}: {message}")]
    Parse { file: String, message: String },
}

/// The repository's data directory.
pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn read(path: &Path) -> Result<Vec<u8>, FixtureError> {
    std::fs::read(path).map_err(|e| FixtureError::Io { path: path.display().to_string(), message: e.to_string() })
}

/// Manifest entries as `(file, digest)`.
pub fn manifest(dir: &Path) -> Result<Vec<(String, String)>, FixtureError> {
    let text = String::from_utf8_lossy(&read(&dir.join(MANIFEST))?).into_owned();
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| match l.split_once("  ") {
            Some((h, f)) if h.len() == 64 => Ok((f.trim().to_string(), h.to_ascii_lowercase())),
            _ => Err(FixtureError::Manifest(l.to_string())),
        })
        .collect()
}

/// Reads a fixture after checking its digest against the manifest.
pub fn read_checked(dir: &Path, file: &str) -> Result<String, FixtureError> {
    let entries = manifest(dir)?;
    let expected = entries
        .iter()
        .find(|(f, _)| f == file)
        .map(|(_, h)| h.clone())
        .ok_or_else(|| FixtureError::Unlisted(file.to_string()))?;
    let bytes = read(&dir.join(file))?;
    let actual = sha256_hex(&bytes);
    if actual != expected {
        return Err(FixtureError::Checksum { file: file.to_string(), expected, actual });
    }
    String::from_utf8(bytes).map_err(|e| FixtureError::Parse { file: file.to_string(), message: e.to_string() })
}

fn parse_json<T: for<'de> Deserialize<'de>>(file: &str, text: &str) -> Result<T, FixtureError> {
    serde_json::from_str(text).map_err(|e| FixtureError::Parse { file: file.to_string(), message: e.to_string() })
}

fn rat_field(file: &str, s: &str) -> Result<Rat, FixtureError> {
    parse_rat(s).map_err(|e| FixtureError::Parse { file: file.to_string(), message: e.to_string() })
}

fn poly_field(file: &str, v: &[String]) -> Result<QPoly, FixtureError> {
    Ok(QPoly::new(v.iter().map(|s| rat_field(file, s)).collect::<Result<_, _>>()?))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct PrefactorRepr {
    poly: Vec<String>,
    exp: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct FactorRepr {
    poly: Vec<String>,
    exp: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct CoefficientRepr {
    derivative: usize,
    scalars: Vec<String>,
    factors: Vec<FactorRepr>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct ClosedFormRepr {
    scalar: String,
    prefactor: Vec<PrefactorRepr>,
    coefficients: Vec<CoefficientRepr>,
    marked_root: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct CurveRepr {
    terms: Vec<String>,
    printed: Vec<String>,
    alternative: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct ExampleRepr {
    schema: String,
    name: String,
    operator: LinODE,
    f1: RatFun,
    f: RatFun,
    h: RatFun,
    lambda: u32,
    closed_form: ClosedFormRepr,
    curve: CurveRepr,
    #[serde(default)]
    notes: Vec<String>,
}

/// The printed solution `x = C * prod p_i^e_i * sum_k A_k F^(k)(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedClosedForm {
    pub scalar: Rat,
    /// Fractional-power prefactor as `(polynomial, exponent)` pairs.
    pub prefactor: Vec<(QPoly, Rat)>,
    /// `A_0, A_1, ...` indexed by derivative order, expanded.
    pub coefficients: Vec<QPoly>,
    pub marked_root: Rat,
}

/// Coefficients of the printed curve relation for two readings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveRelation {
    pub terms: Vec<String>,
    pub printed: Vec<Rat>,
    pub alternative: Vec<Rat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleFixture {
    pub name: String,
    pub operator: LinODE,
    pub f1: RatFun,
    pub f: RatFun,
    pub h: RatFun,
    pub lambda: u32,
    pub closed_form: PrintedClosedForm,
    pub curve: CurveRelation,
    pub notes: Vec<String>,
}

impl ExampleFixture {
    pub fn parse(text: &str) -> Result<ExampleFixture, FixtureError> {
        let file = EXAMPLE_FILE;
        let r: ExampleRepr = parse_json(file, text)?;
        if r.schema != "lode-atlas/example/v1" {
            return Err(FixtureError::Parse { file: file.into(), message: format!("unsupported schema {:?}", r.schema) });
        }
        let cf = &r.closed_form;
        let mut coefficients = vec![QPoly::zero(); cf.coefficients.len()];
        for c in &cf.coefficients {
            if c.derivative >= coefficients.len() {
                return Err(FixtureError::Parse { file: file.into(), message: "derivative order out of range".into() });
            }
            let mut p = QPoly::one();
            for s in &c.scalars {
                p = p.scale(&rat_field(file, s)?);
            }
            for fa in &c.factors {
                p = p.mul(&poly_field(file, &fa.poly)?.pow(fa.exp));
            }
            coefficients[c.derivative] = p;
        }
        let prefactor = cf
            .prefactor
            .iter()
            .map(|p| Ok((poly_field(file, &p.poly)?, rat_field(file, &p.exp)?)))
            .collect::<Result<_, FixtureError>>()?;
        let rats = |v: &[String]| v.iter().map(|s| rat_field(file, s)).collect::<Result<Vec<_>, _>>();
        Ok(ExampleFixture {
            name: r.name,
            operator: r.operator,
            f1: r.f1,
            f: r.f,
            h: r.h,
            lambda: r.lambda,
            closed_form: PrintedClosedForm {
                scalar: rat_field(file, &cf.scalar)?,
                prefactor,
                coefficients,
                marked_root: rat_field(file, &cf.marked_root)?,
            },
            curve: CurveRelation { terms: r.curve.terms, printed: rats(&r.curve.printed)?, alternative: rats(&r.curve.alternative)? },
            notes: r.notes,
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct StandardRepr {
    schema: String,
    equations: Vec<StandardEquation>,
}

/// Everything loaded from one data directory.
#[derive(Clone, Debug)]
pub struct FixtureSet {
    pub dir: PathBuf,
    pub example: ExampleFixture,
    /// Printed records first, then alternative readings.
    pub standard: Vec<StandardEquation>,
    pub syzygies: SyzygyFixture,
}

impl FixtureSet {
    pub fn load(dir: &Path) -> Result<FixtureSet, FixtureError> {
        let example = ExampleFixture::parse(&read_checked(dir, EXAMPLE_FILE)?)?;
        let s: StandardRepr = parse_json(STANDARD_FILE, &read_checked(dir, STANDARD_FILE)?)?;
        if s.schema != "lode-atlas/standard/v1" {
            return Err(FixtureError::Parse { file: STANDARD_FILE.into(), message: format!("unsupported schema {:?}", s.schema) });
        }
        let syzygies = SyzygyFixture::parse(&read_checked(dir, SYZYGY_FILE)?)
            .map_err(|e| FixtureError::Parse { file: SYZYGY_FILE.into(), message: e.to_string() })?;
        Ok(FixtureSet { dir: dir.to_path_buf(), example, standard: s.equations, syzygies })
    }

    pub fn load_default() -> Result<FixtureSet, FixtureError> {
        FixtureSet::load(&default_dir())
    }

    /// The printed record of a group, resolving `x C3` aliases.
    pub fn standard_equation(&self, id: lode_groups::GroupId) -> Option<&StandardEquation> {
        self.standard.iter().find(|e| e.group == id.base() && e.reading == "printed")
    }

    pub fn readings(&self, id: lode_groups::GroupId) -> Vec<&StandardEquation> {
        self.standard.iter().filter(|e| e.group == id.base()).collect()
    }
}

/// Serializes the built-in standard records in the fixture layout.
pub fn standard_fixture_json() -> String {
    let mut equations = lode_catalog::all_standard_equations();
    for id in lode_groups::GroupId::ALL {
        equations.extend(lode_catalog::alternative_readings(id));
    }
    let mut s = serde_json::to_string_pretty(&StandardRepr { schema: "lode-atlas/standard/v1".into(), equations }).unwrap();
    s.push('\n');
    s
}
