//! File formats shared by the subcommands.
//!
//! Everything is JSON with a trailing newline. Complex numbers are always
//! [re, im] pairs; reals serialize with the shortest round-trip decimal
//! representation, so identical inputs produce byte-identical files.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use qck_core::bloch::BlochVector;
use qck_core::density::ValidationReport;
use qck_core::ggm::GgmBasis;
use qck_core::matrix::ComplexMatrix;
use qck_core::sectors::SectorReport;
use qck_core::spin1::SampleResult;
use qck_core::vopt::Trajectory;

use crate::CliError;

/// A complex matrix: `dim` and dim^2 row-major [re, im] entries.
#[derive(Debug, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub dim: usize,
    pub entries: Vec<[f64; 2]>,
}

impl MatrixDocument {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        Self {
            dim: m.dim(),
            entries: m.entries().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix, CliError> {
        if self.entries.len() != self.dim * self.dim {
            return Err(CliError::Parse(format!(
                "matrix document: expected {} entries for dim {}, found {}",
                self.dim * self.dim,
                self.dim,
                self.entries.len()
            )));
        }
        ComplexMatrix::new(
            self.dim,
            self.entries
                .iter()
                .map(|[re, im]| Complex64::new(*re, *im))
                .collect(),
        )
        .map_err(|e| CliError::Parse(e.to_string()))
    }
}

/// An ordered basis: all d^2 - 1 elements as matrix documents.
#[derive(Debug, Serialize, Deserialize)]
pub struct BasisDocument {
    pub d: usize,
    pub matrices: Vec<MatrixDocument>,
}

impl BasisDocument {
    pub fn from_basis(basis: &GgmBasis) -> Self {
        Self {
            d: basis.d(),
            matrices: basis
                .elements()
                .iter()
                .map(MatrixDocument::from_matrix)
                .collect(),
        }
    }
}

/// A Bloch vector: `d` and the d^2 - 1 coefficients in basis order.
#[derive(Debug, Serialize, Deserialize)]
pub struct BlochDocument {
    pub d: usize,
    pub tau: Vec<f64>,
}

impl BlochDocument {
    pub fn from_vector(v: &BlochVector) -> Self {
        Self {
            d: v.d,
            tau: v.tau.clone(),
        }
    }

    pub fn to_vector(&self) -> Result<BlochVector, CliError> {
        BlochVector::new(self.d, self.tau.clone()).map_err(|e| CliError::Parse(e.to_string()))
    }
}

/// Constraint-check report for one matrix.
#[derive(Debug, Serialize, Deserialize)]
pub struct ValidationDocument {
    pub hermitian: bool,
    pub psd: bool,
    pub normalized: bool,
    pub det_nonneg: bool,
    pub valid: bool,
    pub min_eigenvalue: f64,
    pub trace: [f64; 2],
    pub determinant: [f64; 2],
    pub violations: Vec<String>,
}

impl ValidationDocument {
    pub fn from_report(r: &ValidationReport) -> Self {
        Self {
            hermitian: r.hermitian,
            psd: r.psd,
            normalized: r.normalized,
            det_nonneg: r.det_nonneg,
            valid: r.is_valid(),
            min_eigenvalue: r.min_eigenvalue,
            trace: [r.trace.re, r.trace.im],
            determinant: [r.determinant.re, r.determinant.im],
            violations: r.violations.clone(),
        }
    }
}

/// One basis state: occupations as a bitstring (site 0 first) and fields as
/// base-3 digits with -1 -> 0, 0 -> 1, +1 -> 2 (link 0 first).
#[derive(Debug, Serialize, Deserialize)]
pub struct StateDocument {
    pub occupations: String,
    pub fields: String,
}

/// One charge sector with its parity split and qubit budget.
#[derive(Debug, Serialize, Deserialize)]
pub struct SectorDocument {
    pub charge: i64,
    pub dim: usize,
    pub parity_even_dim: usize,
    pub parity_odd_dim: usize,
    pub reduced_qubits_even: Option<u32>,
    pub reduced_qubits_odd: Option<u32>,
    pub states: Vec<StateDocument>,
}

/// The full pipeline report for one chain.
#[derive(Debug, Serialize, Deserialize)]
pub struct SectorReportDocument {
    pub n_sites: usize,
    pub total_states: usize,
    pub naive_qubits: usize,
    pub physical_states: usize,
    pub headline_reduced_qubits: u32,
    pub sectors: Vec<SectorDocument>,
}

impl SectorReportDocument {
    pub fn from_report(r: &SectorReport) -> Self {
        Self {
            n_sites: r.n_sites,
            total_states: r.total_states,
            naive_qubits: r.naive_qubits,
            physical_states: r.physical_states,
            headline_reduced_qubits: r.headline_reduced_qubits,
            sectors: r
                .sectors
                .iter()
                .map(|(charge, s)| SectorDocument {
                    charge: *charge,
                    dim: s.dim,
                    parity_even_dim: s.parity_even_dim,
                    parity_odd_dim: s.parity_odd_dim,
                    reduced_qubits_even: s.reduced_qubits_even,
                    reduced_qubits_odd: s.reduced_qubits_odd,
                    states: s
                        .states
                        .iter()
                        .map(|state| StateDocument {
                            occupations: state.occupation_string(),
                            fields: state.field_string(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

/// Serializes a document as pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(doc)
        .map_err(|e| CliError::Parse(format!("serialization failed: {e}")))?;
    text.push('\n');
    Ok(text)
}

/// Parses a JSON document, reporting position information on failure.
pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| {
        CliError::Parse(format!(
            "invalid document at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })
}

/// CSV of sampled three-level states, one row per state.
pub fn spin1_samples_csv(result: &SampleResult) -> String {
    let mut out = String::from("a,b,c,f_re,f_im,g_re,g_im,h_re,h_im,det\n");
    for p in &result.states {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            p.a,
            p.b,
            p.c,
            p.f.re,
            p.f.im,
            p.g.re,
            p.g.im,
            p.h.re,
            p.h.im,
            p.determinant()
        ));
    }
    out
}

/// CSV of one optimizer trajectory.
pub fn trajectory_csv(trajectory: &Trajectory) -> String {
    let components = trajectory
        .iterates
        .first()
        .map(|it| it.tau.tau.len())
        .unwrap_or(0);
    let mut header = String::from("iter,objective,projected");
    for i in 0..components {
        header.push_str(&format!(",tau_{i}"));
    }
    header.push('\n');

    let mut out = header;
    for (iter, it) in trajectory.iterates.iter().enumerate() {
        out.push_str(&format!(
            "{},{},{}",
            iter,
            it.objective_value,
            if it.projected { 1 } else { 0 }
        ));
        for t in &it.tau.tau {
            out.push_str(&format!(",{t}"));
        }
        out.push('\n');
    }
    out
}

/// CSV of the basis states of one sector.
pub fn sector_states_csv(states: &[StateDocument]) -> String {
    let mut out = String::from("index,occupations,fields\n");
    for (i, s) in states.iter().enumerate() {
        out.push_str(&format!("{},{},{}\n", i, s.occupations, s.fields));
    }
    out
}
