//! Physical-state enumeration for small periodic gauge chains.
//!
//! The model is a staggered-fermion chain: `n` sites with occupation 0/1 and
//! `n` links carrying an electric field truncated to {-1, 0, +1}. Site `k`
//! carries charge q_k = occupation_k - (k mod 2); link `k` sits to the right
//! of site `k`.
//!
//! Gauss's law relates field differences to charges, E_k - E_{k-1} = q_k.
//! Around a periodic chain those differences telescope to zero, so imposing
//! the law at every site would pin the total charge to zero and erase the
//! charge-sector structure. The filter therefore imposes the law at every
//! site except the reference site 0; the leftover violation at site 0 equals
//! minus the total charge Q, and the Q = 0 sector is exactly the fully
//! Gauss-invariant space.
//!
//! Parity reflects the chain through site 0 (site k -> -k mod n, link
//! k -> n-1-k with field sign flip). Reflecting through a site rather than a
//! bond keeps even sites even, so the staggered charge assignment, the Gauss
//! constraints, and every charge sector are preserved.

use std::collections::BTreeMap;
use std::collections::HashMap;

use crate::error::{Error, Result};

/// A periodic staggered chain with one gauge link per site.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeModel {
    n_sites: usize,
}

impl LatticeModel {
    /// Periodic chain with `n_sites` fermion sites and as many links.
    /// The site count must be even so the staggered pattern closes.
    pub fn periodic(n_sites: usize) -> Result<Self> {
        if !n_sites.is_multiple_of(2) {
            return Err(Error::domain(format!(
                "staggered periodic chain needs an even site count, got {n_sites}"
            )));
        }
        Ok(Self { n_sites })
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn n_links(&self) -> usize {
        self.n_sites
    }

    /// Staggered vacuum charge: 0 on even sites, 1 on odd sites.
    pub fn staggered_offset(&self, site: usize) -> i64 {
        (site % 2) as i64
    }

    /// Qubits needed to store the raw product space, one degree of freedom
    /// at a time: 1 per two-state site plus 2 per three-state link.
    pub fn naive_qubit_count(&self) -> usize {
        self.n_sites + 2 * self.n_links()
    }
}

/// One product-basis state: site occupations and link fields.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisState {
    /// 0 or 1 per site.
    pub occupations: Vec<u8>,
    /// -1, 0, or +1 per link.
    pub fields: Vec<i8>,
}

impl BasisState {
    /// Charge at one site: occupation minus the staggered offset.
    pub fn site_charge(&self, model: &LatticeModel, site: usize) -> i64 {
        self.occupations[site] as i64 - model.staggered_offset(site)
    }

    /// Total charge Q.
    pub fn total_charge(&self, model: &LatticeModel) -> i64 {
        (0..model.n_sites())
            .map(|site| self.site_charge(model, site))
            .sum()
    }

    /// Occupations as a bitstring, site 0 first.
    pub fn occupation_string(&self) -> String {
        self.occupations
            .iter()
            .map(|&o| if o == 0 { '0' } else { '1' })
            .collect()
    }

    /// Fields as base-3 digits with -1 -> 0, 0 -> 1, +1 -> 2, link 0 first.
    pub fn field_string(&self) -> String {
        self.fields
            .iter()
            .map(|&e| char::from_digit((e + 1) as u32, 3).expect("field in -1..=1"))
            .collect()
    }
}

/// All 2^n * 3^n product states in lexicographic order: occupation vectors
/// major (site 0 most significant), field vectors minor (link 0 most
/// significant, digits ordered -1 < 0 < +1).
pub fn enumerate_basis(model: &LatticeModel) -> Result<Vec<BasisState>> {
    let n = model.n_sites();
    if n < 2 {
        return Err(Error::domain(format!(
            "enumeration needs at least 2 sites, got {n}"
        )));
    }
    let l = model.n_links();
    let occ_total = 1usize << n;
    let field_total = 3usize.pow(l as u32);

    let mut states = Vec::with_capacity(occ_total * field_total);
    for occ_code in 0..occ_total {
        let occupations: Vec<u8> = (0..n)
            .map(|site| ((occ_code >> (n - 1 - site)) & 1) as u8)
            .collect();
        for field_code in 0..field_total {
            let mut rest = field_code;
            let mut fields = vec![0i8; l];
            for link in (0..l).rev() {
                fields[link] = (rest % 3) as i8 - 1;
                rest /= 3;
            }
            states.push(BasisState {
                occupations: occupations.clone(),
                fields,
            });
        }
    }
    Ok(states)
}

/// True iff the Gauss constraint E_k - E_{k-1} = q_k holds at site `k`.
pub fn gauss_constraint_holds(model: &LatticeModel, state: &BasisState, site: usize) -> bool {
    let n = model.n_sites();
    let left = state.fields[(site + n - 1) % n] as i64;
    let right = state.fields[site] as i64;
    right - left == state.site_charge(model, site)
}

/// Keeps the physical states: Gauss's law at every site except the
/// reference site 0, whose residual violation is the total charge.
pub fn gauss_filter(model: &LatticeModel, states: &[BasisState]) -> Vec<BasisState> {
    states
        .iter()
        .filter(|s| (1..model.n_sites()).all(|site| gauss_constraint_holds(model, s, site)))
        .cloned()
        .collect()
}

/// Partitions physical states by total charge.
pub fn charge_sectors(
    model: &LatticeModel,
    states: &[BasisState],
) -> BTreeMap<i64, Vec<BasisState>> {
    let mut sectors: BTreeMap<i64, Vec<BasisState>> = BTreeMap::new();
    for s in states {
        sectors
            .entry(s.total_charge(model))
            .or_default()
            .push(s.clone());
    }
    sectors
}

/// Chain reflection through site 0: site k -> -k mod n, link k -> n-1-k
/// with the field sign flipped. An involution that commutes with the total
/// charge and with every Gauss constraint.
pub fn parity_image(model: &LatticeModel, state: &BasisState) -> BasisState {
    let n = model.n_sites();
    let l = model.n_links();
    let occupations: Vec<u8> = (0..n)
        .map(|site| state.occupations[(n - site) % n])
        .collect();
    let fields: Vec<i8> = (0..l).map(|link| -state.fields[l - 1 - link]).collect();
    BasisState {
        occupations,
        fields,
    }
}

/// A parity eigenvector as (index, coefficient) pairs over the sector basis.
#[derive(Debug, Clone, PartialEq)]
pub struct ParityVector {
    pub components: Vec<(usize, f64)>,
}

/// A charge sector split into parity eigenspaces.
#[derive(Debug, Clone, PartialEq)]
pub struct ParityDecomposition {
    pub even: Vec<ParityVector>,
    pub odd: Vec<ParityVector>,
}

impl ParityDecomposition {
    pub fn even_dim(&self) -> usize {
        self.even.len()
    }

    pub fn odd_dim(&self) -> usize {
        self.odd.len()
    }
}

/// Splits a charge sector into parity-even and parity-odd subspaces.
///
/// Fixed points of the reflection contribute one even vector each; the
/// remaining states pair up into (|s> + |Ps>)/sqrt(2) even and
/// (|s> - |Ps>)/sqrt(2) odd combinations. Errors if the reflection maps any
/// state outside the sector, which cannot happen for a charge-preserving
/// reflection on correctly filtered input.
pub fn parity_decompose(
    model: &LatticeModel,
    sector: &[BasisState],
) -> Result<ParityDecomposition> {
    let index_of: HashMap<&BasisState, usize> =
        sector.iter().enumerate().map(|(i, s)| (s, i)).collect();

    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let mut even = Vec::new();
    let mut odd = Vec::new();
    let mut visited = vec![false; sector.len()];

    for (i, state) in sector.iter().enumerate() {
        if visited[i] {
            continue;
        }
        visited[i] = true;
        let image = parity_image(model, state);
        let j = *index_of.get(&image).ok_or_else(|| Error::Internal {
            what: format!(
                "parity image of {}|{} left the sector",
                state.occupation_string(),
                state.field_string()
            ),
        })?;
        if j == i {
            even.push(ParityVector {
                components: vec![(i, 1.0)],
            });
        } else {
            visited[j] = true;
            even.push(ParityVector {
                components: vec![(i, inv_sqrt2), (j, inv_sqrt2)],
            });
            odd.push(ParityVector {
                components: vec![(i, inv_sqrt2), (j, -inv_sqrt2)],
            });
        }
    }
    Ok(ParityDecomposition { even, odd })
}

/// Qubits needed for a space of the given dimension: ceil(log2 dim),
/// with a one-dimensional space needing none.
pub fn reduced_qubit_count(dim: usize) -> Result<u32> {
    if dim == 0 {
        return Err(Error::domain("cannot size a zero-dimensional space"));
    }
    Ok(usize::BITS - (dim - 1).leading_zeros())
}

/// Dimensions and qubit budget of one charge sector.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorSummary {
    pub dim: usize,
    pub states: Vec<BasisState>,
    pub parity_even_dim: usize,
    pub parity_odd_dim: usize,
    /// None when the corresponding parity subspace is empty.
    pub reduced_qubits_even: Option<u32>,
    pub reduced_qubits_odd: Option<u32>,
}

/// The full enumeration / filter / sector / parity pipeline in one report.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorReport {
    pub n_sites: usize,
    pub total_states: usize,
    pub naive_qubits: usize,
    pub physical_states: usize,
    pub sectors: BTreeMap<i64, SectorSummary>,
    /// Largest parity-subsector qubit count within the Q = 0 sector: the
    /// working register size after the full reduction.
    pub headline_reduced_qubits: u32,
}

/// Runs the whole pipeline for a model.
pub fn full_report(model: &LatticeModel) -> Result<SectorReport> {
    let all = enumerate_basis(model)?;
    let total_states = all.len();
    let physical = gauss_filter(model, &all);
    let physical_states = physical.len();
    let by_charge = charge_sectors(model, &physical);

    let mut sectors = BTreeMap::new();
    for (charge, states) in by_charge {
        let decomposition = parity_decompose(model, &states)?;
        let even_dim = decomposition.even_dim();
        let odd_dim = decomposition.odd_dim();
        sectors.insert(
            charge,
            SectorSummary {
                dim: states.len(),
                parity_even_dim: even_dim,
                parity_odd_dim: odd_dim,
                reduced_qubits_even: (even_dim > 0)
                    .then(|| reduced_qubit_count(even_dim))
                    .transpose()?,
                reduced_qubits_odd: (odd_dim > 0)
                    .then(|| reduced_qubit_count(odd_dim))
                    .transpose()?,
                states,
            },
        );
    }

    let neutral = sectors.get(&0).ok_or_else(|| Error::Internal {
        what: "Q = 0 sector is empty".to_string(),
    })?;
    let headline_reduced_qubits = neutral
        .reduced_qubits_even
        .into_iter()
        .chain(neutral.reduced_qubits_odd)
        .max()
        .unwrap_or(0);

    Ok(SectorReport {
        n_sites: model.n_sites(),
        total_states,
        naive_qubits: model.naive_qubit_count(),
        physical_states,
        sectors,
        headline_reduced_qubits,
    })
}
