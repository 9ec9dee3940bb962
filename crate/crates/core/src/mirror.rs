//! The Landau–Ginzburg side: critical points of the superpotential on the
//! dual Grassmannian, their membership in the rectangular torus chart, the
//! dihedral action and occupancy of the spectral summands.
//!
//! Critical points are labelled by sets `I` of `n-k` distinct roots of
//! `x^n = (-1)^(n-k+1)`. The Plücker coordinate of the point at a diagram
//! `d` is `vandermonde(I) · S_{d^T}(I)`, so ratios to `p_∅` are the Schur
//! values `S_{d^T}(I)`.

use num_bigint::BigInt;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cyclotomic::{CycInt, FLOAT_TOLERANCE};
use crate::error::{Error, Result};
use crate::quantum::{group_values, spectral_decomposition_with_tolerance, SpectralSummary};
use crate::symmetric::{alternant, conjugate_partition, determinant, RootSet, SchurTable};
use crate::young::{enumerate_diagrams, rectangles, GridShape, YoungDiagram};

/// Sign `(-1)^(n-k+1)` of the mirror-side root sets.
pub fn mirror_sign(grid: GridShape) -> i8 {
    if grid.cols() % 2 == 1 {
        1
    } else {
        -1
    }
}

fn check_mirror_rootset(grid: GridShape, roots: &RootSet) -> Result<()> {
    if roots.n() != grid.n() {
        return Err(Error::InvalidRootSet(format!("{roots} is not a set of roots for n = {}", grid.n())));
    }
    if roots.len() != grid.cols() {
        return Err(Error::SizeMismatch {
            expected: grid.cols(),
            actual: roots.len(),
        });
    }
    let expected = mirror_sign(grid);
    if roots.sign() != expected {
        return Err(Error::WrongSign {
            expected,
            actual: roots.sign(),
        });
    }
    Ok(())
}

/// All mirror-side root sets of the grid, ordered by exponent tuple.
pub fn critical_points(grid: GridShape) -> Vec<RootSet> {
    RootSet::enumerate(grid.n(), grid.cols(), mirror_sign(grid))
}

/// Determinant of the rows `d^-` (horizontal steps) of the `n × (n-k)`
/// Vandermonde matrix whose row `r` holds `ζ_j^(r-1)`.
pub fn plucker_minor(grid: GridShape, roots: &RootSet, d: &YoungDiagram) -> Result<CycInt> {
    check_mirror_rootset(grid, roots)?;
    let order = roots.order();
    let matrix: Vec<Vec<CycInt>> = d
        .horizontal_steps()
        .iter()
        .map(|&r| {
            roots
                .exponents()
                .iter()
                .map(|&x| CycInt::root(order, x as i64 * (r as i64 - 1)))
                .collect()
        })
        .collect();
    determinant(&matrix, order)
}

/// Schur values of one critical point on the rectangles of the grid.
#[derive(Clone, Debug)]
pub struct ChartReport {
    pub grid: GridShape,
    pub roots: RootSet,
    /// `(d, S_{d^T}(I))` for the `k(n-k)+1` rectangles, in [`rectangles`] order.
    pub values: Vec<(YoungDiagram, CycInt)>,
    pub member: bool,
    /// `n · S_□(I)`.
    pub critical_value: CycInt,
    pub value: Complex64,
}

impl ChartReport {
    /// Rectangles whose Plücker coordinate vanishes at the point.
    pub fn failing(&self) -> Vec<&YoungDiagram> {
        self.values
            .iter()
            .filter(|(_, v)| v.is_zero())
            .map(|(d, _)| d)
            .collect()
    }

    pub fn value_at(&self, d: &YoungDiagram) -> Option<&CycInt> {
        self.values.iter().find(|(r, _)| r == d).map(|(_, v)| v)
    }
}

pub fn chart_report(grid: GridShape, roots: &RootSet) -> Result<ChartReport> {
    check_mirror_rootset(grid, roots)?;
    let table = SchurTable::grid(roots);
    let values: Vec<(YoungDiagram, CycInt)> = rectangles(grid)
        .into_iter()
        .map(|d| {
            let v = table.get(d.transpose().rows()).expect("rectangle fits the grid").clone();
            (d, v)
        })
        .collect();
    let member = values.iter().all(|(_, v)| !v.is_zero());
    let critical_value = roots.sum().scale(&BigInt::from(grid.n()));
    let value = critical_value.to_complex();
    Ok(ChartReport {
        grid,
        roots: roots.clone(),
        values,
        member,
        critical_value,
        value,
    })
}

/// Membership decided from alternants alone: the point lies in the chart
/// iff `det(ζ_j^{d^T_{m+1-i} + i - 1}) ≠ 0` for every rectangle `d`.
/// Exponential in `n-k`; meant for cross-checking [`chart_report`].
pub fn member_via_alternants(grid: GridShape, roots: &RootSet) -> Result<bool> {
    check_mirror_rootset(grid, roots)?;
    for d in rectangles(grid) {
        if alternant(d.transpose().rows(), roots)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The `m` roots of `x^n = sign` closest to 1, i.e. maximizing the sum of
/// cosines.
pub fn closest_to_one(n: usize, m: usize, sign: i8) -> RootSet {
    let offset = if sign == 1 { 0 } else { 1 };
    let mut candidates: Vec<i64> = (0..n as i64).map(|t| 2 * t + offset).collect();
    let cos = |e: i64| (std::f64::consts::PI * e as f64 / n as f64).cos();
    candidates.sort_by(|a, b| cos(*b).partial_cmp(&cos(*a)).unwrap().then(a.cmp(b)));
    candidates.truncate(m);
    RootSet::new(n, &candidates, sign).expect("distinct roots of one sign")
}

/// The distinguished critical point `I_0` of the grid.
pub fn positive_critical_point(grid: GridShape) -> RootSet {
    closest_to_one(grid.n(), grid.cols(), mirror_sign(grid))
}

/// `r^t s^f` in `D_n = <r, s | r^n = s^2 = 1, rs = sr^{-1}>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    n: usize,
    t: usize,
    flip: bool,
}

impl DihedralElement {
    pub fn new(n: usize, t: i64, flip: bool) -> Self {
        assert!(n >= 1);
        DihedralElement {
            n,
            t: t.rem_euclid(n as i64) as usize,
            flip,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, 0, false)
    }

    pub fn rotation(n: usize) -> Self {
        Self::new(n, 1, false)
    }

    pub fn reflection(n: usize) -> Self {
        Self::new(n, 0, true)
    }

    /// The `2n` elements: rotations first, then reflections.
    pub fn all(n: usize) -> Vec<Self> {
        [false, true]
            .into_iter()
            .flat_map(|f| (0..n as i64).map(move |t| Self::new(n, t, f)))
            .collect()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn flip(&self) -> bool {
        self.flip
    }

    /// `self · other`, using `s r^b = r^{-b} s`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "elements of different dihedral groups");
        let b = if self.flip { -(other.t as i64) } else { other.t as i64 };
        Self::new(self.n, self.t as i64 + b, self.flip ^ other.flip)
    }

    pub fn inverse(&self) -> Self {
        if self.flip {
            *self
        } else {
            Self::new(self.n, -(self.t as i64), false)
        }
    }

    /// Action on root sets: `s` conjugates, `r` multiplies by `e^{2πi/n}`.
    pub fn act(&self, roots: &RootSet) -> RootSet {
        let base = if self.flip { roots.conj() } else { roots.clone() };
        base.shift(2 * self.t as i64)
    }

    /// Action on critical values.
    pub fn act_value(&self, value: &CycInt) -> CycInt {
        let base = if self.flip { value.conj() } else { value.clone() };
        base.mul_root(2 * self.t as i64)
    }

    /// Young action on a vector of Plücker coordinates indexed by
    /// `diagrams`: `r` scales `p_d` by `e^{2πi|d|/n}`, `s` permutes by
    /// Poincaré duality.
    pub fn act_plucker(&self, diagrams: &[YoungDiagram], coords: &[CycInt]) -> Vec<CycInt> {
        diagrams
            .iter()
            .map(|d| {
                let src = if self.flip { d.poincare_dual() } else { d.clone() };
                let idx = diagrams.iter().position(|x| *x == src).expect("closed under duality");
                coords[idx].mul_root(2 * (self.t * d.size()) as i64)
            })
            .collect()
    }
}

impl std::fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.t, self.flip) {
            (0, false) => write!(f, "1"),
            (0, true) => write!(f, "s"),
            (t, false) => write!(f, "r^{t}"),
            (t, true) => write!(f, "r^{t}s"),
        }
    }
}

/// Plücker coordinates of a critical point divided by `p_∅`:
/// `(S_{d^T}(I))_d` over all diagrams `d`.
pub fn normalized_plucker(diagrams: &[YoungDiagram], roots: &RootSet) -> Vec<CycInt> {
    let table = SchurTable::grid(roots);
    diagrams
        .iter()
        .map(|d| table.get(&conjugate_partition(d.rows())).expect("diagram fits").clone())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub roots: Vec<u32>,
    pub element: String,
    pub check: &'static str,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct EquivarianceReport {
    pub pairs_checked: usize,
    pub violations: Vec<Violation>,
}

/// For every critical point `I` and every `g ∈ D_n`: membership of `gI`
/// equals that of `I`, `value(gI) = g · value(I)`, and the Plücker vector
/// of `gI` is proportional to the Young action of `g` on that of `I`
/// (checked by cross-multiplication against the `∅` coordinate).
pub fn verify_equivariance(grid: GridShape) -> Result<EquivarianceReport> {
    let diagrams = enumerate_diagrams(grid);
    let group = DihedralElement::all(grid.n());
    let points = critical_points(grid);
    let per_point: Vec<Vec<Violation>> = points
        .par_iter()
        .map(|roots| -> Result<Vec<Violation>> {
            let mut bad = Vec::new();
            let report = chart_report(grid, roots)?;
            let coords = normalized_plucker(&diagrams, roots);
            for g in &group {
                let image = g.act(roots);
                let mut flag = |check| {
                    bad.push(Violation {
                        roots: roots.exponents().to_vec(),
                        element: g.to_string(),
                        check,
                    })
                };
                let image_report = chart_report(grid, &image)?;
                if image_report.member != report.member {
                    flag("membership");
                }
                if image_report.critical_value != g.act_value(&report.critical_value) {
                    flag("critical value");
                }
                let moved = g.act_plucker(&diagrams, &coords);
                let target = normalized_plucker(&diagrams, &image);
                let scale = &moved[0];
                let proportional = !scale.is_zero()
                    && moved
                        .iter()
                        .zip(&target)
                        .all(|(a, b)| (a - &(scale * b)).is_zero());
                if !proportional {
                    flag("plucker proportionality");
                }
            }
            Ok(bad)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EquivarianceReport {
        pairs_checked: points.len() * group.len(),
        violations: per_point.into_iter().flatten().collect(),
    })
}

/// Spectrum of `c_1 ⋆` joined with chart membership of the critical points.
#[derive(Clone, Debug)]
pub struct BranesSummary {
    pub spectrum: SpectralSummary,
    /// Per spectral group: is some chart member's critical value equal to it.
    pub occupied: Vec<bool>,
    /// Per spectral group: chart members with that critical value.
    pub witnesses: Vec<Vec<RootSet>>,
    /// Critical values over all points equal the eigenvalues with multiplicity.
    pub values_match: bool,
    pub reports: Vec<ChartReport>,
}

impl BranesSummary {
    /// Occupied groups are closed under `λ ↦ e^{2πi/n}λ` and `λ ↦ conj(λ)`.
    pub fn occupancy_is_dihedral(&self) -> bool {
        let n = self.spectrum.grid.n();
        let rot = DihedralElement::rotation(n);
        let refl = DihedralElement::reflection(n);
        self.spectrum.groups.iter().zip(&self.occupied).all(|(g, &occ)| {
            [rot, refl].iter().all(|h| {
                let image = h.act_value(&g.eigenvalue);
                match self.spectrum.find(&image) {
                    Some(i) => self.occupied[i] == occ,
                    None => false,
                }
            })
        })
    }

    /// Moduli levels (in spectrum order) with their occupancy flags.
    pub fn levels(&self) -> Vec<(f64, Vec<bool>)> {
        let tol = self.spectrum.tolerance;
        let mut out: Vec<(f64, Vec<bool>)> = Vec::new();
        for (g, &occ) in self.spectrum.groups.iter().zip(&self.occupied) {
            match out.last_mut() {
                Some((m, flags)) if (*m - g.modulus).abs() <= tol => flags.push(occ),
                _ => out.push((g.modulus, vec![occ])),
            }
        }
        out
    }
}

pub fn branes_summary(grid: GridShape) -> Result<BranesSummary> {
    branes_summary_with_tolerance(grid, FLOAT_TOLERANCE)
}

pub fn branes_summary_with_tolerance(grid: GridShape, tol: f64) -> Result<BranesSummary> {
    let spectrum = spectral_decomposition_with_tolerance(grid, tol)?;
    let reports: Vec<ChartReport> = critical_points(grid)
        .par_iter()
        .map(|roots| chart_report(grid, roots))
        .collect::<Result<Vec<_>>>()?;
    let mut occupied = vec![false; spectrum.groups.len()];
    let mut witnesses = vec![Vec::new(); spectrum.groups.len()];
    for report in reports.iter().filter(|r| r.member) {
        if let Some(i) = spectrum.find(&report.critical_value) {
            occupied[i] = true;
            witnesses[i].push(report.roots.clone());
        }
    }
    let critical = group_values(
        reports
            .iter()
            .map(|r| (r.critical_value.clone(), r.roots.clone()))
            .collect(),
        tol,
    );
    let values_match = critical.len() == spectrum.groups.len()
        && critical.iter().all(|c| {
            spectrum
                .find(&c.eigenvalue)
                .is_some_and(|i| spectrum.groups[i].multiplicity == c.multiplicity)
        });
    Ok(BranesSummary {
        spectrum,
        occupied,
        witnesses,
        values_match,
        reports,
    })
}

/// Holonomy of the torus-chart object at the coordinate `(i, j)`.
#[derive(Clone, Debug, Serialize)]
pub struct Holonomy {
    pub i: usize,
    pub j: usize,
    /// `S_{((k+1-i) × j)^T}(I)`.
    pub numerator: CycInt,
    /// `S_{((k-i) × (j-1))^T}(I)`, or 1 when the rectangle is empty.
    pub denominator: CycInt,
    pub re: f64,
    pub im: f64,
}

/// Holonomies `x_{i,j}` of a chart member, one per torus coordinate in
/// row-major order, as exact numerator/denominator pairs.
pub fn holonomy(grid: GridShape, roots: &RootSet) -> Result<Vec<Holonomy>> {
    let report = chart_report(grid, roots)?;
    if !report.member {
        return Err(Error::NotInChart(roots.to_string()));
    }
    let table = SchurTable::grid(roots);
    let k = grid.k();
    // S_{(a × b)^T}: b rows of length a, in n-k variables
    let rect = |a: usize, b: usize| -> CycInt {
        if a == 0 || b == 0 {
            CycInt::one(roots.order())
        } else {
            table.get(&vec![a; b]).expect("rectangle fits").clone()
        }
    };
    let mut out = Vec::with_capacity(grid.area());
    for i in 1..=k {
        for j in 1..=grid.cols() {
            let numerator = rect(k + 1 - i, j);
            let denominator = rect(k - i, j - 1);
            let z = numerator.to_complex() / denominator.to_complex();
            out.push(Holonomy {
                i,
                j,
                numerator,
                denominator,
                re: z.re,
                im: z.im,
            });
        }
    }
    Ok(out)
}

impl Serialize for BranesSummary {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Group<'a> {
            #[serde(flatten)]
            spectral: &'a crate::quantum::SpectralGroup,
            occupied: bool,
            witnesses: Vec<&'a [u32]>,
            witness_duals: Vec<Vec<u32>>,
        }
        let groups: Vec<Group> = self
            .spectrum
            .groups
            .iter()
            .zip(&self.occupied)
            .zip(&self.witnesses)
            .map(|((g, &occupied), w)| Group {
                spectral: g,
                occupied,
                witnesses: w.iter().map(RootSet::exponents).collect(),
                witness_duals: w.iter().map(|r| r.dual().exponents().to_vec()).collect(),
            })
            .collect();
        let mut st = serializer.serialize_struct("BranesSummary", 6)?;
        st.serialize_field("k", &self.spectrum.grid.k())?;
        st.serialize_field("n", &self.spectrum.grid.n())?;
        st.serialize_field("mirror_sign", &mirror_sign(self.spectrum.grid))?;
        st.serialize_field("values_match", &self.values_match)?;
        st.serialize_field("occupancy_is_dihedral", &self.occupancy_is_dihedral())?;
        st.serialize_field("eigenvalues", &groups)?;
        st.end()
    }
}
