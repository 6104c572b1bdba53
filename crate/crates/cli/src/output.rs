//! JSON payloads. Matrices are serialized as row-major arrays of arrays.

use cremona_core::{Classification, ExponentMatrix, Params};
use serde::Serialize;

pub type MatrixJson = [[u64; 3]; 3];

pub fn matrix_json(m: &ExponentMatrix) -> MatrixJson {
    *m.rows()
}

#[derive(Debug, Serialize)]
pub struct Report<'a, T: Serialize> {
    pub command: &'a str,
    pub input: serde_json::Value,
    pub result: T,
    pub elapsed_ms: f64,
    pub version: &'a str,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParamsJson {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub e: u64,
    pub delta: u64,
}

impl From<Params> for ParamsJson {
    fn from(p: Params) -> Self {
        ParamsJson {
            a: p.a,
            b: p.b,
            c: p.c,
            d: p.d,
            e: p.e,
            delta: p.delta,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyJson {
    pub cremona: bool,
    pub family: String,
    pub delta: Option<u64>,
    pub params: Option<ParamsJson>,
    pub multidegree: Option<[u64; 3]>,
    /// Input after dividing out the common monomial factor.
    pub reduced: MatrixJson,
    /// Row and column permutations (one-line notation) onto the normal form.
    pub witness: Option<[String; 2]>,
    pub reason: Option<String>,
}

impl ClassifyJson {
    pub fn new(m: &ExponentMatrix, c: Classification, multidegree: Option<[u64; 3]>) -> Self {
        ClassifyJson {
            cremona: c.is_cremona,
            family: c.family.to_string(),
            delta: c.delta,
            params: c.params.map(ParamsJson::from),
            multidegree,
            reduced: matrix_json(&m.reduce()),
            witness: c.witness.map(|(r, col)| [r.to_string(), col.to_string()]),
            reason: c.reason,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MultidegreeJson {
    pub delta: u64,
    pub multidegree: [u64; 3],
    pub det: i128,
    /// Absent for non-dominant maps.
    pub torus_degree: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct TriangulationJson {
    pub vertex: String,
    pub cells: Vec<String>,
    pub multidegree: [u64; 3],
}

#[derive(Debug, Serialize)]
pub struct InverseJson {
    pub delta: u64,
    pub inverse: MatrixJson,
}

#[derive(Debug, Serialize)]
pub struct IterationJson {
    pub degrees: Vec<u64>,
    pub iterates: Vec<MatrixJson>,
}

#[derive(Debug, Serialize)]
pub struct OrbitJson {
    pub canonical_form: MatrixJson,
    pub orbit: Vec<MatrixJson>,
    pub stabilizer: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BatchSummary {
    pub total: usize,
    pub cremona: usize,
    pub non_cremona: usize,
    pub errors: usize,
}

#[derive(Debug, Serialize)]
pub struct BatchEntry {
    pub line: usize,
    pub input: String,
    pub result: Option<ClassifyJson>,
    pub error: Option<crate::error::ErrorJson>,
}
