//! JSON representations of lattices, polygons, slopes, maps and reports.
//!
//! Matrices are written row by row; lattice bases are the matrix columns.
//! Vectors are `[x1, x2]` pairs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sublattice_core::polygon::convex_hull;
use sublattice_core::reduction::Classification;
use sublattice_core::slopes::{validate_slope, Slope};
use sublattice_core::verifier::{SearchBox, VerificationReport};
use sublattice_core::{AffineMap, IntMat2, IntVec, Polygon, Report, Sublattice};

use crate::Error;

pub type Pair = [i64; 2];
pub type Matrix = [[i64; 2]; 2];

pub fn pair(v: IntVec) -> Pair {
    [v.x1, v.x2]
}

pub fn vec(p: Pair) -> IntVec {
    IntVec::new(p[0], p[1])
}

pub fn matrix(m: &IntMat2) -> Matrix {
    [[m.a11, m.a12], [m.a21, m.a22]]
}

pub fn mat(m: Matrix) -> IntMat2 {
    IntMat2::new(m[0][0], m[0][1], m[1][0], m[1][1])
}

/// `{"matrix": [[a11,a12],[a21,a22]]}` or `{"delta": d, "n": n}` for `δℤ × nℤ`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum LatticeJson {
    Matrix { matrix: Matrix },
    Factors { delta: i64, n: i64 },
}

impl LatticeJson {
    pub fn to_lattice(&self) -> Result<Sublattice, Error> {
        Ok(match *self {
            LatticeJson::Matrix { matrix } => Sublattice::new(mat(matrix))?,
            LatticeJson::Factors { delta, n } => Sublattice::from_invariants(delta, n)?,
        })
    }
}

/// Written form of a lattice: the basis plus its invariant factors.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct LatticeOut {
    pub matrix: Matrix,
    pub delta: i64,
    pub n: i64,
}

impl From<&Sublattice> for LatticeOut {
    fn from(l: &Sublattice) -> Self {
        let (delta, n) = l.invariant_factors();
        LatticeOut {
            matrix: matrix(&l.basis()),
            delta,
            n,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PolygonJson {
    pub vertices: Vec<Pair>,
}

impl PolygonJson {
    /// Canonicalizes via the convex hull; every input point must be a vertex.
    pub fn to_polygon(&self) -> Result<Polygon, Error> {
        let mut pts: Vec<IntVec> = self.vertices.iter().map(|&p| vec(p)).collect();
        pts.sort();
        pts.dedup();
        let hull = convex_hull(&pts)?;
        if hull.vertex_count() != pts.len() {
            return Err(Error::Input(
                "polygon vertices are not in strictly convex position".into(),
            ));
        }
        Ok(hull)
    }
}

impl From<&Polygon> for PolygonJson {
    fn from(p: &Polygon) -> Self {
        PolygonJson {
            vertices: p.vertices().iter().map(|&v| pair(v)).collect(),
        }
    }
}

/// `basis` rows are `f1` and `f2`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SlopeJson {
    pub vertices: Vec<Pair>,
    #[serde(default = "standard_basis")]
    pub basis: Matrix,
}

fn standard_basis() -> Matrix {
    [[1, 0], [0, 1]]
}

impl SlopeJson {
    pub fn to_slope(&self) -> Result<Slope, Error> {
        let f1 = vec(self.basis[0]);
        let f2 = vec(self.basis[1]);
        Ok(validate_slope(
            self.vertices.iter().map(|&p| vec(p)).collect(),
            f1,
            f2,
        )?)
    }
}

impl From<&Slope> for SlopeJson {
    fn from(q: &Slope) -> Self {
        let (f1, f2) = q.basis();
        SlopeJson {
            vertices: q.vertices().iter().map(|&v| pair(v)).collect(),
            basis: [pair(f1), pair(f2)],
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AffineMapJson {
    pub linear: Matrix,
    pub translation: Pair,
}

impl From<&AffineMap> for AffineMapJson {
    fn from(m: &AffineMap) -> Self {
        AffineMapJson {
            linear: matrix(&m.linear),
            translation: pair(m.translation),
        }
    }
}

impl AffineMapJson {
    pub fn to_map(&self) -> AffineMap {
        AffineMap::new(mat(self.linear), vec(self.translation))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckJson {
    pub label: String,
    pub lhs: i128,
    pub relation: String,
    pub rhs: i128,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Counterexample {
    pub failed: Vec<CheckJson>,
    pub witnesses: BTreeMap<String, i128>,
}

/// `"ok"` or `{"counterexample": {...}}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Counterexample(Counterexample),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportJson {
    pub subject: String,
    pub status: Status,
    pub checks: Vec<CheckJson>,
    pub witnesses: BTreeMap<String, i128>,
}

impl From<&Report> for ReportJson {
    fn from(r: &Report) -> Self {
        let check = |c: &sublattice_core::Check| CheckJson {
            label: c.label.clone(),
            lhs: c.lhs,
            relation: c.relation.symbol().to_string(),
            rhs: c.rhs,
            holds: c.holds(),
        };
        let witnesses: BTreeMap<String, i128> = r.witnesses.iter().cloned().collect();
        let status = if r.is_ok() {
            Status::Ok
        } else {
            Status::Counterexample(Counterexample {
                failed: r.failures().map(check).collect(),
                witnesses: witnesses.clone(),
            })
        };
        ReportJson {
            subject: r.subject.clone(),
            status,
            checks: r.checks.iter().map(check).collect(),
            witnesses,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassificationJson {
    #[serde(rename = "type")]
    pub kind: String,
    pub n: i64,
    pub map: AffineMapJson,
    pub image: PolygonJson,
}

impl From<&Classification> for ClassificationJson {
    fn from(c: &Classification) -> Self {
        ClassificationJson {
            kind: c.tag.kind.as_str().to_string(),
            n: c.tag.n,
            map: (&c.map).into(),
            image: (&c.image).into(),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
pub struct BoxJson {
    pub x1_min: i64,
    pub x1_max: i64,
    pub x2_min: i64,
    pub x2_max: i64,
}

impl From<SearchBox> for BoxJson {
    fn from(b: SearchBox) -> Self {
        BoxJson {
            x1_min: b.x1_min,
            x1_max: b.x1_max,
            x2_min: b.x2_min,
            x2_max: b.x2_max,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerificationJson {
    pub lattice: LatticeOut,
    #[serde(rename = "box")]
    pub search_box: BoxJson,
    pub max_vertices_found: usize,
    pub witness: Option<PolygonJson>,
    pub nu: i64,
    pub consistent: bool,
    pub instances_checked: u64,
    pub elapsed_ms: Option<f64>,
    pub jobs: usize,
}

impl VerificationJson {
    pub fn new(r: &VerificationReport, jobs: usize) -> Self {
        VerificationJson {
            lattice: (&r.lattice).into(),
            search_box: r.search_box.into(),
            max_vertices_found: r.max_vertices_found,
            witness: r.witness.as_ref().map(PolygonJson::from),
            nu: r.nu,
            consistent: r.consistent,
            instances_checked: r.instances_checked,
            elapsed_ms: r.elapsed.map(|d| d.as_secs_f64() * 1e3),
            jobs,
        }
    }
}

/// Parses inline JSON (anything starting with `{`) or reads the named file.
pub fn read_json<T: serde::de::DeserializeOwned>(arg: &str) -> Result<T, Error> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::Io(arg.to_string(), e))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("{arg}: {e}")))
}
