//! Codimension-one faces of the Gelfand–Cetlin polytope of `Gr(k,n)`, the
//! disk potential they determine, the superpotential on the rectangular
//! chart and the monomial map between the two.
//!
//! Torus coordinates are indexed by `(i, j)` with `1 ≤ i ≤ k` and
//! `1 ≤ j ≤ n-k`, in row-major order. Chart variables are the rectangular
//! Plücker coordinates `p_{i×j}` with `p_∅ = 1`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::Result;
use crate::laurent::{LaurentPoly, SignedMonomial, VarRegistry};
use crate::young::GridShape;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FaceKind {
    /// Between rows `i` and `i+1` of column `j`.
    HBrick { i: usize, j: usize },
    /// Between columns `j` and `j+1` of row `i`.
    VBrick { i: usize, j: usize },
    CornerTopRight,
    CornerBottomLeft,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceGraph {
    #[serde(flatten)]
    pub kind: FaceKind,
    pub normal: Vec<i32>,
}

/// Position of the coordinate `(i, j)` (1-based) in a normal vector.
pub fn coordinate_index(grid: GridShape, i: usize, j: usize) -> usize {
    (i - 1) * grid.cols() + (j - 1)
}

/// `(k-1)(n-k) + k(n-k-1) + 2`.
pub fn expected_face_count(grid: GridShape) -> usize {
    let (k, c) = (grid.k(), grid.cols());
    (k - 1) * c + k * (c - 1) + 2
}

pub fn codim1_faces(grid: GridShape) -> Vec<FaceGraph> {
    let (k, c) = (grid.k(), grid.cols());
    let mut out = Vec::with_capacity(expected_face_count(grid));
    let blank = || vec![0i32; grid.area()];
    for i in 1..k {
        for j in 1..=c {
            let mut normal = blank();
            normal[coordinate_index(grid, i, j)] = 1;
            normal[coordinate_index(grid, i + 1, j)] = -1;
            out.push(FaceGraph {
                kind: FaceKind::HBrick { i, j },
                normal,
            });
        }
    }
    for i in 1..=k {
        for j in 1..c {
            let mut normal = blank();
            normal[coordinate_index(grid, i, j)] = -1;
            normal[coordinate_index(grid, i, j + 1)] = 1;
            out.push(FaceGraph {
                kind: FaceKind::VBrick { i, j },
                normal,
            });
        }
    }
    let mut normal = blank();
    normal[coordinate_index(grid, 1, c)] = -1;
    out.push(FaceGraph {
        kind: FaceKind::CornerTopRight,
        normal,
    });
    let mut normal = blank();
    normal[coordinate_index(grid, k, 1)] = 1;
    out.push(FaceGraph {
        kind: FaceKind::CornerBottomLeft,
        normal,
    });
    out
}

pub fn torus_variable(i: usize, j: usize) -> String {
    format!("x_{{{i},{j}}}")
}

pub fn chart_variable(i: usize, j: usize) -> String {
    format!("p_{{{i}×{j}}}")
}

/// Variables `x_{i,j}` in row-major order.
pub fn torus_registry(grid: GridShape) -> Arc<VarRegistry> {
    let names = (1..=grid.k()).flat_map(|i| (1..=grid.cols()).map(move |j| torus_variable(i, j)));
    VarRegistry::new(names).expect("distinct names")
}

/// Variables `p_{i×j}` in row-major order.
pub fn chart_registry(grid: GridShape) -> Arc<VarRegistry> {
    let names = (1..=grid.k()).flat_map(|i| (1..=grid.cols()).map(move |j| chart_variable(i, j)));
    VarRegistry::new(names).expect("distinct names")
}

/// `Σ x_{i,j}/x_{i+1,j} + Σ x_{i,j+1}/x_{i,j} + 1/x_{1,n-k} + x_{k,1}`.
pub fn disk_potential(grid: GridShape) -> LaurentPoly {
    let reg = torus_registry(grid);
    let (k, c) = (grid.k(), grid.cols());
    let x = |i, j| torus_variable(i, j);
    let mut terms: Vec<(Vec<String>, Vec<String>)> = Vec::new();
    for i in 1..k {
        for j in 1..=c {
            terms.push((vec![x(i, j)], vec![x(i + 1, j)]));
        }
    }
    for i in 1..=k {
        for j in 1..c {
            terms.push((vec![x(i, j + 1)], vec![x(i, j)]));
        }
    }
    terms.push((vec![], vec![x(1, c)]));
    terms.push((vec![x(k, 1)], vec![]));
    sum_of_ratios(&reg, &terms)
}

/// One monomial per face, with exponent vector the face normal.
pub fn disk_potential_from_faces(grid: GridShape) -> LaurentPoly {
    let reg = torus_registry(grid);
    codim1_faces(grid).into_iter().fold(LaurentPoly::zero(&reg), |acc, f| {
        acc + LaurentPoly::monomial(&reg, f.normal, 1).expect("normal has one entry per coordinate")
    })
}

fn sum_of_ratios(reg: &Arc<VarRegistry>, terms: &[(Vec<String>, Vec<String>)]) -> LaurentPoly {
    terms.iter().fold(LaurentPoly::zero(reg), |acc, (num, den)| {
        let num: Vec<&str> = num.iter().map(String::as_str).collect();
        let den: Vec<&str> = den.iter().map(String::as_str).collect();
        let m = SignedMonomial::ratio(reg, &num, &den).expect("names come from the registry");
        acc + LaurentPoly::monomial(reg, m.exponents, 1).expect("registry length")
    })
}

/// Name of `p_{a×b}`, or `None` for a rectangle with a zero side (`p = 1`).
fn rect(a: usize, b: usize) -> Option<String> {
    (a > 0 && b > 0).then(|| chart_variable(a, b))
}

/// The superpotential restricted to the rectangular chart:
/// `p_{1×1} + Σ_{i≥2} p_{i×j} p_{(i-2)×(j-1)} / (p_{(i-1)×(j-1)} p_{(i-1)×j})
///  + p_{(k-1)×(n-k-1)} / p_{k×(n-k)}
///  + Σ_{j≥2} p_{i×j} p_{(i-1)×(j-2)} / (p_{(i-1)×(j-1)} p_{i×(j-1)})`.
pub fn chart_potential(grid: GridShape) -> LaurentPoly {
    let reg = chart_registry(grid);
    let (k, c) = (grid.k(), grid.cols());
    let pick = |names: &[Option<String>]| -> Vec<String> { names.iter().flatten().cloned().collect() };
    let mut terms: Vec<(Vec<String>, Vec<String>)> = vec![(pick(&[rect(1, 1)]), vec![])];
    for i in 2..=k {
        for j in 1..=c {
            terms.push((
                pick(&[rect(i, j), rect(i - 2, j - 1)]),
                pick(&[rect(i - 1, j - 1), rect(i - 1, j)]),
            ));
        }
    }
    terms.push((pick(&[rect(k - 1, c - 1)]), pick(&[rect(k, c)])));
    for i in 1..=k {
        for j in 2..=c {
            terms.push((
                pick(&[rect(i, j), rect(i - 1, j - 2)]),
                pick(&[rect(i - 1, j - 1), rect(i, j - 1)]),
            ));
        }
    }
    sum_of_ratios(&reg, &terms)
}

/// `x_{i,j} ↦ p_{(k+1-i)×j} / p_{(k-i)×(j-1)}`, in row-major order of the
/// torus coordinates.
pub fn theta_substitution(grid: GridShape) -> Vec<(String, SignedMonomial)> {
    let reg = chart_registry(grid);
    let k = grid.k();
    let mut out = Vec::with_capacity(grid.area());
    for i in 1..=k {
        for j in 1..=grid.cols() {
            let num: Vec<String> = rect(k + 1 - i, j).into_iter().collect();
            let den: Vec<String> = rect(k - i, j - 1).into_iter().collect();
            let num: Vec<&str> = num.iter().map(String::as_str).collect();
            let den: Vec<&str> = den.iter().map(String::as_str).collect();
            let m = SignedMonomial::ratio(&reg, &num, &den).expect("chart variables");
            out.push((torus_variable(i, j), m));
        }
    }
    out
}

/// Pullback of the disk potential along the chart map.
pub fn pullback(grid: GridShape) -> Result<LaurentPoly> {
    let map: HashMap<String, SignedMonomial> = theta_substitution(grid).into_iter().collect();
    disk_potential(grid).substitute_monomials(&map, &chart_registry(grid))
}

/// Exact check that the pulled-back disk potential is the chart potential.
pub fn verify_pullback(grid: GridShape) -> Result<bool> {
    pullback(grid)?.equals(&chart_potential(grid))
}

/// Relabeling carrying the torus variables of `Gr(n-k, n)` to those of
/// `Gr(k, n)`: `x'_{a,b} ↦ x_{k+1-b, n-k+1-a}`.
pub fn self_duality_relabeling(grid: GridShape) -> Vec<(String, SignedMonomial)> {
    let reg = torus_registry(grid);
    let dual = grid.transposed();
    let (k, c) = (grid.k(), grid.cols());
    let mut out = Vec::with_capacity(grid.area());
    for a in 1..=dual.k() {
        for b in 1..=dual.cols() {
            let target = torus_variable(k + 1 - b, c + 1 - a);
            let m = SignedMonomial::ratio(&reg, &[target.as_str()], &[]).expect("torus variable");
            out.push((torus_variable(a, b), m));
        }
    }
    out
}

/// Both potentials of a grid together with the chart map.
#[derive(Clone, Debug, Serialize)]
pub struct PotentialPair {
    pub k: usize,
    pub n: usize,
    pub disk: LaurentPoly,
    pub chart: LaurentPoly,
    pub faces: Vec<FaceGraph>,
    pub substitution: Vec<(String, String)>,
    pub pullback_matches: bool,
}

pub fn potential_pair(grid: GridShape) -> Result<PotentialPair> {
    let chart_reg = chart_registry(grid);
    let substitution = theta_substitution(grid)
        .into_iter()
        .map(|(name, m)| {
            let image = LaurentPoly::monomial(&chart_reg, m.exponents, 1).expect("registry length");
            (name, image.to_string())
        })
        .collect();
    Ok(PotentialPair {
        k: grid.k(),
        n: grid.n(),
        disk: disk_potential(grid),
        chart: chart_potential(grid),
        faces: codim1_faces(grid),
        substitution,
        pullback_matches: verify_pullback(grid)?,
    })
}
