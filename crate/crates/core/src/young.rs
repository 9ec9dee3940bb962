//! Young diagrams inside the `k x (n-k)` grid.
//!
//! A diagram is stored as its row lengths `d_1 >= ... >= d_k >= 0`. The
//! lattice-path encoding walks the southeast border of the diagram from the
//! top-right corner of the grid to its bottom-left corner; step `t` (counted
//! from 1) is vertical when the path moves down. The positions of the
//! vertical steps satisfy `d_j = (n-k) - v_j + j`.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The ambient `k x (n-k)` grid of `Gr(k,n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridShape {
    k: usize,
    n: usize,
}

impl GridShape {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidGrid { k, n });
        }
        Ok(GridShape { k, n })
    }

    /// Number of rows.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of columns, `n - k`.
    pub fn cols(&self) -> usize {
        self.n - self.k
    }

    /// `k(n-k)`, the complex dimension of the Grassmannian.
    pub fn area(&self) -> usize {
        self.k * self.cols()
    }

    /// The `(n-k) x k` grid of the dual Grassmannian.
    pub fn transposed(&self) -> GridShape {
        GridShape {
            k: self.cols(),
            n: self.n,
        }
    }

    /// `C(n, k)`.
    pub fn num_diagrams(&self) -> u128 {
        binomial(self.n, self.k)
    }
}

impl fmt::Display for GridShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({},{})", self.k, self.n)
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    // saturates at u128::MAX
    let mut acc: u128 = 1;
    for i in 0..k {
        match acc.checked_mul((n - i) as u128) {
            Some(v) => acc = v / (i + 1) as u128,
            None => return u128::MAX,
        }
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    Vertical,
    Horizontal,
}

/// Positions (1-based, increasing) of one kind of border step.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StepSet {
    pub kind: StepKind,
    pub elements: Vec<usize>,
}

impl StepSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RectangleKind {
    NotRectangular,
    Boundary,
    Interior,
}

/// Result of multiplying a Schubert class by the one-box class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieriExpansion {
    /// Diagrams obtained by adding one box.
    pub classical: Vec<YoungDiagram>,
    /// The diagram with full first row and column erased, when both are full.
    pub quantum: Option<YoungDiagram>,
}

impl PieriExpansion {
    pub fn terms(&self) -> impl Iterator<Item = &YoungDiagram> {
        self.classical.iter().chain(self.quantum.iter())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungDiagram {
    grid: GridShape,
    rows: Vec<usize>,
}

impl YoungDiagram {
    /// Builds a diagram from row lengths; missing trailing rows are zero.
    pub fn new(grid: GridShape, rows: &[usize]) -> Result<Self> {
        let invalid = |reason| Error::InvalidDiagram {
            rows: rows.to_vec(),
            k: grid.k(),
            cols: grid.cols(),
            reason,
        };
        if rows.len() > grid.k() && rows[grid.k()..].iter().any(|&r| r != 0) {
            return Err(invalid("more than k nonzero rows"));
        }
        let mut padded: Vec<usize> = rows.iter().copied().take(grid.k()).collect();
        padded.resize(grid.k(), 0);
        if padded.first().is_some_and(|&r| r > grid.cols()) {
            return Err(invalid("row longer than n-k"));
        }
        if padded.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid("rows not weakly decreasing"));
        }
        Ok(YoungDiagram { grid, rows: padded })
    }

    pub fn empty(grid: GridShape) -> Self {
        YoungDiagram {
            grid,
            rows: vec![0; grid.k()],
        }
    }

    pub fn full(grid: GridShape) -> Self {
        YoungDiagram {
            grid,
            rows: vec![grid.cols(); grid.k()],
        }
    }

    /// The `height x width` rectangle; a zero side gives the empty diagram.
    pub fn rectangle(grid: GridShape, height: usize, width: usize) -> Result<Self> {
        if height == 0 || width == 0 {
            return Ok(Self::empty(grid));
        }
        Self::new(grid, &vec![width; height])
    }

    /// Inverse of [`vertical_steps`](Self::vertical_steps).
    pub fn from_vertical_steps(grid: GridShape, steps: &[usize]) -> Result<Self> {
        let bad = || Error::InvalidDiagram {
            rows: steps.to_vec(),
            k: grid.k(),
            cols: grid.cols(),
            reason: "not a strictly increasing k-subset of 1..=n",
        };
        if steps.len() != grid.k()
            || steps.windows(2).any(|w| w[0] >= w[1])
            || steps.first().is_some_and(|&v| v < 1)
            || steps.last().is_some_and(|&v| v > grid.n())
        {
            return Err(bad());
        }
        let rows = steps
            .iter()
            .enumerate()
            .map(|(j, &v)| grid.cols() + j + 1 - v)
            .collect::<Vec<_>>();
        Self::new(grid, &rows)
    }

    pub fn grid(&self) -> GridShape {
        self.grid
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// Number of nonzero rows.
    pub fn height(&self) -> usize {
        self.rows.iter().take_while(|&&r| r > 0).count()
    }

    pub fn width(&self) -> usize {
        self.rows[0]
    }

    pub fn vertical_steps(&self) -> Vec<usize> {
        let cols = self.grid.cols();
        self.rows
            .iter()
            .enumerate()
            .map(|(j, &d)| cols - d + j + 1)
            .collect()
    }

    pub fn horizontal_steps(&self) -> Vec<usize> {
        let vertical = self.vertical_steps();
        (1..=self.grid.n())
            .filter(|t| vertical.binary_search(t).is_err())
            .collect()
    }

    /// Walks the border path and records the vertical and horizontal steps.
    pub fn border_steps(&self) -> (StepSet, StepSet) {
        let mut vertical = Vec::with_capacity(self.grid.k());
        let mut horizontal = Vec::with_capacity(self.grid.cols());
        let (mut x, mut y) = (self.grid.cols(), 0usize);
        for t in 1..=self.grid.n() {
            if y < self.grid.k() && self.rows[y] == x {
                vertical.push(t);
                y += 1;
            } else {
                horizontal.push(t);
                x -= 1;
            }
        }
        (
            StepSet {
                kind: StepKind::Vertical,
                elements: vertical,
            },
            StepSet {
                kind: StepKind::Horizontal,
                elements: horizontal,
            },
        )
    }

    /// Conjugate partition, living in the `(n-k) x k` grid.
    pub fn transpose(&self) -> YoungDiagram {
        let grid = self.grid.transposed();
        let rows = (1..=grid.k())
            .map(|j| self.rows.iter().filter(|&&d| d >= j).count())
            .collect();
        YoungDiagram { grid, rows }
    }

    /// Complement in the grid, rotated by a half turn.
    pub fn poincare_dual(&self) -> YoungDiagram {
        let cols = self.grid.cols();
        let rows = self.rows.iter().rev().map(|&d| cols - d).collect();
        YoungDiagram {
            grid: self.grid,
            rows,
        }
    }

    pub fn is_rectangular(&self) -> bool {
        let h = self.height();
        self.rows[..h].iter().all(|&r| r == self.rows[0])
    }

    pub fn classify_rectangle(&self) -> RectangleKind {
        if !self.is_rectangular() {
            RectangleKind::NotRectangular
        } else if self.is_empty()
            || self.height() == self.grid.k()
            || self.width() == self.grid.cols()
        {
            RectangleKind::Boundary
        } else {
            RectangleKind::Interior
        }
    }

    /// Quantum Pieri rule for the one-box class at `q = 1`.
    pub fn pieri_expand(&self) -> PieriExpansion {
        let k = self.grid.k();
        let mut classical = Vec::new();
        for i in 0..k {
            let fits_row = self.rows[i] < self.grid.cols();
            let fits_above = i == 0 || self.rows[i - 1] > self.rows[i];
            if fits_row && fits_above {
                let mut rows = self.rows.clone();
                rows[i] += 1;
                classical.push(YoungDiagram {
                    grid: self.grid,
                    rows,
                });
            }
        }
        let quantum = (self.rows[0] == self.grid.cols() && self.rows[k - 1] >= 1).then(|| {
            let mut rows: Vec<usize> = self.rows[1..].iter().map(|&d| d - 1).collect();
            rows.push(0);
            YoungDiagram {
                grid: self.grid,
                rows,
            }
        });
        PieriExpansion { classical, quantum }
    }

    /// Box coordinates `(row, col)`, 0-based, row-major.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
    }

    /// Parses the text form `(d1,...,dk)`; `()` and `∅` denote the empty diagram.
    pub fn parse(grid: GridShape, text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed == "∅" {
            return Ok(Self::empty(grid));
        }
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected `(d1,...,dk)`, got `{text}`")))?;
        let rows = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|p| usize::from_str(p.trim()))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse(e.to_string()))?
        };
        Self::new(grid, &rows)
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}@{}", self.grid)
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    rows: Vec<usize>,
    k: usize,
    n: usize,
}

impl Serialize for YoungDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramRepr {
            rows: self.rows.clone(),
            k: self.grid.k(),
            n: self.grid.n(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for YoungDiagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = DiagramRepr::deserialize(deserializer)?;
        let grid = GridShape::new(repr.k, repr.n).map_err(D::Error::custom)?;
        YoungDiagram::new(grid, &repr.rows).map_err(D::Error::custom)
    }
}

/// All `C(n,k)` diagrams of the grid, graded by size and ordered
/// lexicographically by vertical-step set within each size.
pub fn enumerate_diagrams(grid: GridShape) -> Vec<YoungDiagram> {
    let mut out = Vec::with_capacity(grid.num_diagrams() as usize);
    let mut rows = vec![0usize; grid.k()];
    fill_rows(grid, 0, grid.cols(), &mut rows, &mut out);
    out.sort_by_cached_key(|d| (d.size(), d.vertical_steps()));
    out
}

fn fill_rows(
    grid: GridShape,
    i: usize,
    max: usize,
    rows: &mut Vec<usize>,
    out: &mut Vec<YoungDiagram>,
) {
    if i == rows.len() {
        out.push(YoungDiagram {
            grid,
            rows: rows.clone(),
        });
        return;
    }
    for v in 0..=max {
        rows[i] = v;
        fill_rows(grid, i + 1, v, rows, out);
    }
    rows[i] = 0;
}

/// The `k(n-k)+1` rectangles: the empty diagram, then `i x j` in
/// lexicographic order of `(i, j)`.
pub fn rectangles(grid: GridShape) -> Vec<YoungDiagram> {
    let mut out = vec![YoungDiagram::empty(grid)];
    for i in 1..=grid.k() {
        for j in 1..=grid.cols() {
            out.push(YoungDiagram {
                grid,
                rows: (0..grid.k()).map(|r| if r < i { j } else { 0 }).collect(),
            });
        }
    }
    out
}

/// The `n` boundary rectangles `p_1, ..., p_n`; the `t`-th has horizontal
/// steps `{1,...,n-k}` shifted cyclically by `t-1`.
pub fn boundary_rectangles(grid: GridShape) -> Vec<YoungDiagram> {
    let n = grid.n();
    (0..n)
        .map(|shift| {
            let horizontal: Vec<usize> = (1..=grid.cols()).map(|h| (h - 1 + shift) % n + 1).collect();
            let vertical: Vec<usize> = (1..=n).filter(|t| !horizontal.contains(t)).collect();
            YoungDiagram::from_vertical_steps(grid, &vertical)
                .expect("complement of a cyclic interval is a valid step set")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(k: usize, n: usize) -> GridShape {
        GridShape::new(k, n).unwrap()
    }

    fn d(grid: GridShape, rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(grid, rows).unwrap()
    }

    #[test]
    fn grid_validation() {
        assert!(GridShape::new(0, 3).is_err());
        assert!(GridShape::new(3, 3).is_err());
        assert!(GridShape::new(1, 2).is_ok());
    }

    #[test]
    fn diagram_validation() {
        let grid = g(2, 5);
        assert!(YoungDiagram::new(grid, &[4]).is_err());
        assert!(YoungDiagram::new(grid, &[1, 2]).is_err());
        assert!(YoungDiagram::new(grid, &[1, 1, 1]).is_err());
        assert_eq!(YoungDiagram::new(grid, &[2, 1, 0]).unwrap().rows(), &[2, 1]);
    }

    #[test]
    fn gr25_enumeration_matches_display() {
        let grid = g(2, 5);
        let got: Vec<String> = enumerate_diagrams(grid).iter().map(|d| d.to_string()).collect();
        let want = [
            "(0,0)", "(1,0)", "(2,0)", "(1,1)", "(3,0)", "(2,1)", "(3,1)", "(2,2)", "(3,2)",
            "(3,3)",
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn small_enumerations() {
        let ds = enumerate_diagrams(g(1, 2));
        assert_eq!(ds, vec![d(g(1, 2), &[0]), d(g(1, 2), &[1])]);
        assert_eq!(enumerate_diagrams(g(3, 6)).len(), 20);
        let all = enumerate_diagrams(g(3, 7));
        assert_eq!(all.first().unwrap(), &YoungDiagram::empty(g(3, 7)));
        assert_eq!(all.last().unwrap(), &YoungDiagram::full(g(3, 7)));
    }

    #[test]
    fn border_steps_anchors() {
        let grid = g(3, 7);
        let (v, h) = YoungDiagram::empty(grid).border_steps();
        assert_eq!(h.elements, vec![1, 2, 3, 4]);
        assert_eq!(v.elements, vec![5, 6, 7]);
        let (v, _) = YoungDiagram::full(grid).border_steps();
        assert_eq!(v.elements, vec![1, 2, 3]);
    }

    #[test]
    fn boundary_rectangles_are_cyclic_shifts() {
        let grid = g(2, 5);
        let got: Vec<String> = boundary_rectangles(grid).iter().map(|d| d.to_string()).collect();
        assert_eq!(got, ["(0,0)", "(3,0)", "(3,3)", "(2,2)", "(1,1)"]);
        for (i, r) in boundary_rectangles(grid).iter().enumerate() {
            let want: Vec<usize> = (1..=3).map(|h| (h - 1 + i) % 5 + 1).collect();
            let mut got = r.horizontal_steps();
            got.sort();
            let mut want_sorted = want.clone();
            want_sorted.sort();
            assert_eq!(got, want_sorted);
            assert_eq!(r.classify_rectangle(), RectangleKind::Boundary);
        }
    }

    #[test]
    fn transpose_examples() {
        let grid = g(2, 5);
        let t = d(grid, &[3, 1]).transpose();
        assert_eq!(t.grid(), g(3, 5));
        assert_eq!(t.rows(), &[2, 1, 1]);
        assert_eq!(YoungDiagram::empty(grid).transpose(), YoungDiagram::empty(g(3, 5)));
        assert_eq!(YoungDiagram::full(grid).transpose(), YoungDiagram::full(g(3, 5)));
    }

    #[test]
    fn poincare_dual_example() {
        let grid = g(3, 7);
        assert_eq!(d(grid, &[4, 3, 0]).poincare_dual().rows(), &[4, 1, 0]);
        assert_eq!(YoungDiagram::empty(grid).poincare_dual(), YoungDiagram::full(grid));
    }

    #[test]
    fn rectangle_classification() {
        let grid = g(3, 7);
        let interior: Vec<String> = rectangles(grid)
            .into_iter()
            .filter(|r| r.classify_rectangle() == RectangleKind::Interior)
            .map(|r| r.to_string())
            .collect();
        assert_eq!(
            interior,
            ["(1,0,0)", "(2,0,0)", "(3,0,0)", "(1,1,0)", "(2,2,0)", "(3,3,0)"]
        );
        assert_eq!(d(g(2, 5), &[2, 1]).classify_rectangle(), RectangleKind::NotRectangular);
        let boundary: Vec<String> = enumerate_diagrams(g(2, 5))
            .into_iter()
            .filter(|r| r.classify_rectangle() == RectangleKind::Boundary)
            .map(|r| r.to_string())
            .collect();
        assert_eq!(boundary, ["(0,0)", "(1,1)", "(3,0)", "(2,2)", "(3,3)"]);
    }

    #[test]
    fn pieri_examples() {
        let grid = g(2, 5);
        let e = d(grid, &[2, 1]).pieri_expand();
        assert_eq!(e.classical, vec![d(grid, &[3, 1]), d(grid, &[2, 2])]);
        assert_eq!(e.quantum, None);
        assert_eq!(d(grid, &[3, 2]).pieri_expand().quantum, Some(d(grid, &[1, 0])));
        assert_eq!(d(grid, &[2, 2]).pieri_expand().quantum, None);
        let one = g(1, 2);
        let e = d(one, &[1]).pieri_expand();
        assert!(e.classical.is_empty());
        assert_eq!(e.quantum, Some(YoungDiagram::empty(one)));
    }

    #[test]
    fn text_and_json_forms() {
        let grid = g(2, 5);
        let x = d(grid, &[3, 1]);
        assert_eq!(YoungDiagram::parse(grid, "(3,1)").unwrap(), x);
        assert_eq!(YoungDiagram::parse(grid, "()").unwrap(), YoungDiagram::empty(grid));
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"{"rows":[3,1],"k":2,"n":5}"#);
        let back: YoungDiagram = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<YoungDiagram>(r#"{"rows":[1,3],"k":2,"n":5}"#).is_err());
    }
}
