//! Quantum cohomology of `Gr(k,n)` at `q = 1`: multiplication by the
//! one-box class, its Schur-basis eigenvectors and the spectrum of `c_1`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cyclotomic::{CycInt, FLOAT_TOLERANCE};
use crate::error::{Error, Result};
use crate::symmetric::{RootSet, SchurTable};
use crate::young::{enumerate_diagrams, GridShape, YoungDiagram};

/// Sign `s` such that the quantum-side root sets of `Gr(k,n)` are roots of
/// `x^n = s`: `(-1)^(k+1)`.
pub fn qh_sign(k: usize) -> i8 {
    if k % 2 == 1 {
        1
    } else {
        -1
    }
}

/// Matrix of quantum multiplication by the one-box class in the Schubert
/// basis, stored by columns.
#[derive(Clone, Debug)]
pub struct PieriMatrix {
    grid: GridShape,
    diagrams: Vec<YoungDiagram>,
    index: HashMap<YoungDiagram, usize>,
    columns: Vec<Vec<usize>>,
}

impl PieriMatrix {
    pub fn new(grid: GridShape) -> PieriMatrix {
        let diagrams = enumerate_diagrams(grid);
        let index: HashMap<YoungDiagram, usize> =
            diagrams.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
        let columns = diagrams
            .iter()
            .map(|d| {
                let mut rows: Vec<usize> = d.pieri_expand().terms().map(|t| index[t]).collect();
                rows.sort_unstable();
                rows
            })
            .collect();
        PieriMatrix {
            grid,
            diagrams,
            index,
            columns,
        }
    }

    pub fn grid(&self) -> GridShape {
        self.grid
    }

    pub fn dim(&self) -> usize {
        self.diagrams.len()
    }

    /// Row/column labels, in [`enumerate_diagrams`] order.
    pub fn diagrams(&self) -> &[YoungDiagram] {
        &self.diagrams
    }

    pub fn index_of(&self, d: &YoungDiagram) -> Option<usize> {
        self.index.get(d).copied()
    }

    /// Row indices of the nonzero entries in column `col`.
    pub fn column(&self, col: usize) -> &[usize] {
        &self.columns[col]
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        u8::from(self.columns[col].binary_search(&row).is_ok())
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        (0..self.dim())
            .map(|r| (0..self.dim()).map(|c| self.entry(r, c)).collect())
            .collect()
    }

    /// Matrix-vector product over `Z[ζ_N]`.
    pub fn apply(&self, v: &[CycInt]) -> Result<Vec<CycInt>> {
        if v.len() != self.dim() {
            return Err(Error::SizeMismatch {
                expected: self.dim(),
                actual: v.len(),
            });
        }
        let order = v.first().map_or(1, CycInt::order);
        let mut out = vec![CycInt::zero(order); self.dim()];
        for (col, rows) in self.columns.iter().enumerate() {
            for &r in rows {
                out[r] = out[r].try_add(&v[col])?;
            }
        }
        Ok(out)
    }
}

pub fn pieri_matrix(grid: GridShape) -> PieriMatrix {
    PieriMatrix::new(grid)
}

fn check_qh_rootset(grid: GridShape, j: &RootSet) -> Result<()> {
    if j.n() != grid.n() {
        return Err(Error::InvalidRootSet(format!("{j} is not a set of roots for n = {}", grid.n())));
    }
    if j.len() != grid.k() {
        return Err(Error::SizeMismatch {
            expected: grid.k(),
            actual: j.len(),
        });
    }
    let expected = qh_sign(grid.k());
    if j.sign() != expected {
        return Err(Error::WrongSign {
            expected,
            actual: j.sign(),
        });
    }
    Ok(())
}

/// Schur-basis vector `σ_J = Σ_d conj(S_d(J)) σ_d`.
#[derive(Clone, Debug)]
pub struct SchurVector {
    pub grid: GridShape,
    pub roots: RootSet,
    pub components: Vec<CycInt>,
}

pub fn schur_vector(grid: GridShape, j: &RootSet) -> Result<SchurVector> {
    check_qh_rootset(grid, j)?;
    Ok(SchurVector {
        grid,
        roots: j.clone(),
        components: schur_components(&enumerate_diagrams(grid), j),
    })
}

fn schur_components(diagrams: &[YoungDiagram], j: &RootSet) -> Vec<CycInt> {
    let table = SchurTable::grid(j);
    diagrams
        .iter()
        .map(|d| table.get(d.rows()).expect("diagram fits the grid").conj())
        .collect()
}

/// `n · Σ_{ζ ∈ J} ζ`, the eigenvalue of `c_1 ⋆` on `σ_J`.
pub fn closed_form_eigenvalue(grid: GridShape, j: &RootSet) -> Result<CycInt> {
    check_qh_rootset(grid, j)?;
    Ok(j.sum().scale(&BigInt::from(grid.n())))
}

/// Checks `σ_□ ⋆ σ_J = S_□(J) σ_J` exactly, component by component.
pub fn verify_schur_eigenvector(matrix: &PieriMatrix, j: &RootSet) -> Result<bool> {
    check_qh_rootset(matrix.grid(), j)?;
    let v = schur_components(matrix.diagrams(), j);
    let lhs = matrix.apply(&v)?;
    let eigen = j.sum();
    Ok(lhs
        .iter()
        .zip(&v)
        .all(|(l, c)| (l - &(&eigen * c)).is_zero()))
}

/// One eigenvalue of `c_1 ⋆` with the root sets producing it.
#[derive(Clone, Debug)]
pub struct SpectralGroup {
    pub eigenvalue: CycInt,
    pub value: Complex64,
    pub modulus: f64,
    /// Argument in `[0, 2π)`.
    pub argument: f64,
    pub multiplicity: usize,
    pub max_modulus: bool,
    pub root_sets: Vec<RootSet>,
}

#[derive(Clone, Debug)]
pub struct SpectralSummary {
    pub grid: GridShape,
    pub tolerance: f64,
    pub groups: Vec<SpectralGroup>,
}

impl SpectralSummary {
    pub fn total_multiplicity(&self) -> usize {
        self.groups.iter().map(|g| g.multiplicity).sum()
    }

    pub fn max_modulus_count(&self) -> usize {
        self.groups.iter().filter(|g| g.max_modulus).count()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.multiplicity).collect()
    }

    /// Index of the group holding an exact eigenvalue.
    pub fn find(&self, value: &CycInt) -> Option<usize> {
        self.groups.iter().position(|g| &g.eigenvalue == value)
    }
}

pub(crate) fn snap(x: f64, tol: f64) -> f64 {
    if x.abs() < tol {
        0.0
    } else {
        x
    }
}

pub(crate) fn argument(z: Complex64, tol: f64) -> f64 {
    if z.norm() < tol {
        return 0.0;
    }
    let a = z.im.atan2(z.re).rem_euclid(TAU);
    if TAU - a < tol {
        0.0
    } else {
        a
    }
}

/// Ordering by decreasing modulus, then increasing argument, both compared
/// up to `tol`.
pub(crate) fn spectral_order(a: (f64, f64), b: (f64, f64), tol: f64) -> Ordering {
    if (a.0 - b.0).abs() > tol {
        return b.0.partial_cmp(&a.0).unwrap_or(Ordering::Equal);
    }
    if (a.1 - b.1).abs() > tol {
        return a.1.partial_cmp(&b.1).unwrap_or(Ordering::Equal);
    }
    Ordering::Equal
}

/// Groups `(value, root set)` pairs by exact equality of the values and
/// sorts the groups.
pub(crate) fn group_values(values: Vec<(CycInt, RootSet)>, tol: f64) -> Vec<SpectralGroup> {
    let mut slots: HashMap<CycInt, usize> = HashMap::new();
    let mut groups: Vec<SpectralGroup> = Vec::new();
    for (value, roots) in values {
        match slots.get(&value) {
            Some(&i) => {
                groups[i].multiplicity += 1;
                groups[i].root_sets.push(roots);
            }
            None => {
                let z = value.to_complex();
                slots.insert(value.clone(), groups.len());
                groups.push(SpectralGroup {
                    value: Complex64::new(snap(z.re, tol), snap(z.im, tol)),
                    modulus: snap(z.norm(), tol),
                    argument: argument(z, tol),
                    eigenvalue: value,
                    multiplicity: 1,
                    max_modulus: false,
                    root_sets: vec![roots],
                });
            }
        }
    }
    groups.sort_by(|a, b| {
        spectral_order((a.modulus, a.argument), (b.modulus, b.argument), tol)
            .then_with(|| a.eigenvalue.canonical().cmp(&b.eigenvalue.canonical()))
    });
    let max = groups.iter().map(|g| g.modulus).fold(0.0, f64::max);
    for g in &mut groups {
        g.max_modulus = (max - g.modulus).abs() <= tol;
        g.root_sets.sort();
    }
    groups
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Closed-form eigenvalues for every `J`, grouped exactly; checks that
/// exactly `n` groups reach the maximal modulus, each with multiplicity
/// one, and that all multiplicities are one for prime `n`.
pub fn spectral_decomposition(grid: GridShape) -> Result<SpectralSummary> {
    spectral_decomposition_with_tolerance(grid, FLOAT_TOLERANCE)
}

pub fn spectral_decomposition_with_tolerance(grid: GridShape, tol: f64) -> Result<SpectralSummary> {
    let roots = RootSet::enumerate(grid.n(), grid.k(), qh_sign(grid.k()));
    let values = roots
        .into_par_iter()
        .map(|j| closed_form_eigenvalue(grid, &j).map(|v| (v, j)))
        .collect::<Result<Vec<_>>>()?;
    let summary = SpectralSummary {
        grid,
        tolerance: tol,
        groups: group_values(values, tol),
    };
    let n = grid.n();
    let top: Vec<&SpectralGroup> = summary.groups.iter().filter(|g| g.max_modulus).collect();
    if top.len() != n || top.iter().any(|g| g.multiplicity != 1) {
        return Err(Error::SpectralInvariant(format!(
            "{grid}: expected {n} simple eigenvalues of maximal modulus, found {} groups with multiplicities {:?}",
            top.len(),
            top.iter().map(|g| g.multiplicity).collect::<Vec<_>>()
        )));
    }
    if is_prime(n) && summary.groups.iter().any(|g| g.multiplicity != 1) {
        return Err(Error::SpectralInvariant(format!(
            "{grid}: n is prime but some eigenvalue is repeated"
        )));
    }
    Ok(summary)
}

impl Serialize for SpectralGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SpectralGroup", 7)?;
        st.serialize_field("re", &self.value.re)?;
        st.serialize_field("im", &self.value.im)?;
        st.serialize_field("modulus", &self.modulus)?;
        st.serialize_field("multiplicity", &self.multiplicity)?;
        st.serialize_field("max_modulus", &self.max_modulus)?;
        st.serialize_field("exact", &self.eigenvalue)?;
        let sets: Vec<&[u32]> = self.root_sets.iter().map(RootSet::exponents).collect();
        st.serialize_field("root_sets", &sets)?;
        st.end()
    }
}

impl Serialize for SpectralSummary {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SpectralSummary", 3)?;
        st.serialize_field("k", &self.grid.k())?;
        st.serialize_field("n", &self.grid.n())?;
        st.serialize_field("eigenvalues", &self.groups)?;
        st.end()
    }
}
