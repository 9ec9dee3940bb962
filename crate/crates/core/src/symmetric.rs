//! Schur polynomials evaluated at sets of roots of `x^n = ±1`.
//!
//! Three independent routes are provided: semistandard tableaux
//! ([`schur_ssyt`]), the dual Jacobi–Trudi determinant
//! ([`schur_jacobi_trudi`]) and the bialternant ([`alternant`] divided by
//! [`vandermonde`], which is never divided here, only compared after
//! cross-multiplication). [`SchurTable`] evaluates a whole box of
//! partitions at once by the branching rule and is what the rest of the
//! crate uses in bulk.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};

/// `m` distinct roots of `x^n = sign`, stored as exponents of `ζ_{2n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootSet {
    n: usize,
    sign: i8,
    exponents: Vec<u32>,
}

impl RootSet {
    pub fn new(n: usize, exponents: &[i64], sign: i8) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRootSet("n must be positive".into()));
        }
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidRootSet(format!("sign must be ±1, got {sign}")));
        }
        let order = 2 * n as i64;
        let parity = if sign == 1 { 0 } else { 1 };
        let mut exps: Vec<u32> = exponents.iter().map(|e| e.rem_euclid(order) as u32).collect();
        if let Some(bad) = exps.iter().find(|e| (**e % 2) as i64 != parity) {
            return Err(Error::InvalidRootSet(format!(
                "exponent {bad} mod {order} is not a root of x^{n} = {sign}"
            )));
        }
        exps.sort_unstable();
        if exps.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidRootSet(format!("repeated exponent in {exponents:?}")));
        }
        Ok(RootSet {
            n,
            sign,
            exponents: exps,
        })
    }

    /// All `C(n,m)` root sets of the given size and sign, ordered by their
    /// sorted exponent tuples.
    pub fn enumerate(n: usize, m: usize, sign: i8) -> Vec<RootSet> {
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        assert!(m <= n, "cannot choose {m} of {n} roots");
        let offset = if sign == 1 { 0 } else { 1 };
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..m).collect();
        loop {
            out.push(RootSet {
                n,
                sign,
                exponents: idx.iter().map(|&t| (2 * t + offset) as u32).collect(),
            });
            // advance to the next m-subset of 0..n in lex order
            let mut i = m;
            while i > 0 && idx[i - 1] == n - m + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..m {
                idx[j] = idx[j - 1] + 1;
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Order `2n` of the cyclotomic ring the roots live in.
    pub fn order(&self) -> u32 {
        2 * self.n as u32
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn roots(&self) -> Vec<CycInt> {
        self.exponents
            .iter()
            .map(|&e| CycInt::root(self.order(), e as i64))
            .collect()
    }

    pub fn complex_roots(&self) -> Vec<Complex64> {
        let n = self.order() as f64;
        self.exponents
            .iter()
            .map(|&e| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e as f64 / n))
            .collect()
    }

    /// Sum of the roots, i.e. `S_□`.
    /// All n roots sum to zero for n >= 2, so the shorter side is summed.
    pub fn sum(&self) -> CycInt {
        if self.n >= 2 && 2 * self.exponents.len() > self.n {
            return -self.complement().sum();
        }
        self.roots()
            .iter()
            .fold(CycInt::zero(self.order()), |acc, z| acc + z)
    }

    /// Adds `e` to every exponent (multiplies every root by `ζ_{2n}^e`).
    /// Since `(ζ_{2n}^e)^n = (-1)^e`, the sign flips for odd `e`.
    pub fn shift(&self, e: i64) -> RootSet {
        let order = self.order() as i64;
        let mut exponents: Vec<u32> = self
            .exponents
            .iter()
            .map(|&x| (x as i64 + e).rem_euclid(order) as u32)
            .collect();
        exponents.sort_unstable();
        RootSet {
            n: self.n,
            sign: if e.rem_euclid(2) == 1 { -self.sign } else { self.sign },
            exponents,
        }
    }

    /// Multiplication by `e^{2πi/n}`.
    pub fn rotate(&self) -> RootSet {
        self.shift(2)
    }

    /// Complex conjugation of every root.
    pub fn conj(&self) -> RootSet {
        let exps: Vec<i64> = self.exponents.iter().map(|&x| -(x as i64)).collect();
        RootSet::new(self.n, &exps, self.sign).expect("conjugation preserves validity")
    }

    /// The other roots of `x^n = sign`.
    pub fn complement(&self) -> RootSet {
        let offset = if self.sign == 1 { 0 } else { 1 };
        let exps: Vec<i64> = (0..self.n as i64)
            .map(|t| 2 * t + offset)
            .filter(|e| !self.exponents.contains(&(*e as u32)))
            .collect();
        RootSet {
            n: self.n,
            sign: self.sign,
            exponents: exps.into_iter().map(|e| e as u32).collect(),
        }
    }

    /// `-I^c`: negated complement. This carries root sets of size `m`
    /// with sign `(-1)^(n-m+1)` to size `n-m` with sign `(-1)^(m+1)`, and
    /// satisfies `S_λ(I) = S_{λ^T}(-I^c)` whenever `λ_1 ≤ n - m`.
    pub fn dual(&self) -> RootSet {
        self.complement().shift(self.n as i64)
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}} mod {}", parts.join(","), self.order())
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSet({self})")
    }
}

/// Same as [`RootSet::enumerate`].
pub fn enumerate_rootsets(n: usize, m: usize, sign: i8) -> Vec<RootSet> {
    RootSet::enumerate(n, m, sign)
}

fn trimmed(lam: &[usize]) -> &[usize] {
    let len = lam.iter().rposition(|&r| r > 0).map_or(0, |p| p + 1);
    &lam[..len]
}

fn check_partition(lam: &[usize], vars: usize) -> Result<&[usize]> {
    let lam = trimmed(lam);
    if lam.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Parse(format!("{lam:?} is not weakly decreasing")));
    }
    if lam.len() > vars {
        return Err(Error::TooManyRows {
            partition: lam.to_vec(),
            vars,
        });
    }
    Ok(lam)
}

/// Transpose of a partition given by row lengths.
pub fn conjugate_partition(lam: &[usize]) -> Vec<usize> {
    let lam = trimmed(lam);
    let width = lam.first().copied().unwrap_or(0);
    (1..=width).map(|j| lam.iter().filter(|&&r| r >= j).count()).collect()
}

/// Calls `visit` with the label content (number of entries equal to
/// `1..=m`) of every semistandard tableau of shape `lam` with labels
/// at most `m`.
pub fn for_each_ssyt(lam: &[usize], m: usize, mut visit: impl FnMut(&[usize])) {
    let lam = trimmed(lam);
    let cells: Vec<(usize, usize)> = lam
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let width = lam.first().copied().unwrap_or(0);
    let mut grid = vec![vec![0usize; width]; lam.len()];
    let mut content = vec![0usize; m];

    fn fill(
        pos: usize,
        cells: &[(usize, usize)],
        grid: &mut [Vec<usize>],
        content: &mut [usize],
        m: usize,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if pos == cells.len() {
            visit(content);
            return;
        }
        let (r, c) = cells[pos];
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in left.max(above)..=m {
            grid[r][c] = v;
            content[v - 1] += 1;
            fill(pos + 1, cells, grid, content, m, visit);
            content[v - 1] -= 1;
        }
    }

    fill(0, &cells, &mut grid, &mut content, m, &mut visit);
}

/// Number of semistandard tableaux of shape `lam` with labels at most `m`.
pub fn ssyt_count(lam: &[usize], m: usize) -> u64 {
    let mut count = 0u64;
    for_each_ssyt(lam, m, |_| count += 1);
    count
}

/// `S_λ(I)` as a sum over semistandard tableaux, labels ordered like the
/// sorted exponents of `I`.
pub fn schur_ssyt(lam: &[usize], roots: &RootSet) -> Result<CycInt> {
    let lam = check_partition(lam, roots.len())?;
    let order = roots.order() as u64;
    let exps = roots.exponents();
    let mut counts = vec![0u64; order as usize];
    for_each_ssyt(lam, roots.len(), |content| {
        let e: u64 = content
            .iter()
            .zip(exps)
            .map(|(&c, &x)| c as u64 * x as u64)
            .sum();
        counts[(e % order) as usize] += 1;
    });
    let coeffs: Vec<BigInt> = counts.into_iter().map(BigInt::from).collect();
    CycInt::from_coeffs(roots.order(), &coeffs)
}

/// Elementary symmetric values `e_0, ..., e_m` of the roots.
pub fn elementary(roots: &RootSet) -> Vec<CycInt> {
    let order = roots.order();
    let mut e = vec![CycInt::one(order)];
    for z in roots.roots() {
        // multiply the generating polynomial by (1 + z t)
        let mut next = e.clone();
        next.push(CycInt::zero(order));
        for (r, prev) in e.iter().enumerate() {
            next[r + 1] += &(prev * &z);
        }
        e = next;
    }
    e
}

/// Determinant by Laplace expansion along rows, memoized over column
/// subsets. Division-free; exponential in the size, intended for matrices
/// up to roughly 12×12.
pub fn determinant(matrix: &[Vec<CycInt>], order: u32) -> Result<CycInt> {
    let size = matrix.len();
    if let Some(row) = matrix.iter().find(|r| r.len() != size) {
        return Err(Error::SizeMismatch {
            expected: size,
            actual: row.len(),
        });
    }
    if size == 0 {
        return Ok(CycInt::one(order));
    }
    assert!(size < 24, "determinant too large for subset expansion");
    let full = (1usize << size) - 1;
    let mut dp: Vec<Option<CycInt>> = vec![None; 1 << size];
    dp[0] = Some(CycInt::one(order));
    for mask in 0..full {
        let Some(minor) = dp[mask].take() else { continue };
        if minor.is_trivially_zero() {
            continue;
        }
        let r = mask.count_ones() as usize;
        for c in 0..size {
            if mask & (1 << c) != 0 || matrix[r][c].is_trivially_zero() {
                continue;
            }
            let above = (mask >> (c + 1)).count_ones();
            let mut term = matrix[r][c].try_mul(&minor)?;
            if above % 2 == 1 {
                term = -term;
            }
            let slot = &mut dp[mask | (1 << c)];
            *slot = Some(match slot.take() {
                Some(acc) => acc + term,
                None => term,
            });
        }
    }
    Ok(dp[full].take().unwrap_or_else(|| CycInt::zero(order)))
}

/// Dual Jacobi–Trudi determinant `det(e_{λ^T_i - i + j})`.
pub fn schur_jacobi_trudi(lam: &[usize], roots: &RootSet) -> Result<CycInt> {
    let lam = check_partition(lam, roots.len())?;
    let order = roots.order();
    let e = elementary(roots);
    let cols = conjugate_partition(lam);
    let size = cols.len();
    let entry = |idx: i64| -> CycInt {
        if idx < 0 || idx as usize >= e.len() {
            CycInt::zero(order)
        } else {
            e[idx as usize].clone()
        }
    };
    let matrix: Vec<Vec<CycInt>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| entry(cols[i] as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    determinant(&matrix, order)
}

/// `det(ζ_j^{λ_{m+1-i} + i - 1})` for `i, j = 1..m`, with the roots in
/// sorted exponent order. Equals `vandermonde(I) · S_λ(I)`.
pub fn alternant(lam: &[usize], roots: &RootSet) -> Result<CycInt> {
    let lam = check_partition(lam, roots.len())?;
    let m = roots.len();
    let mut padded = lam.to_vec();
    padded.resize(m, 0);
    let order = roots.order();
    let matrix: Vec<Vec<CycInt>> = (0..m)
        .map(|i| {
            let power = (padded[m - 1 - i] + i) as i64;
            roots
                .exponents()
                .iter()
                .map(|&x| CycInt::root(order, x as i64 * power))
                .collect()
        })
        .collect();
    determinant(&matrix, order)
}

/// `∏_{i<j} (ζ_j - ζ_i)` over the sorted roots.
pub fn vandermonde(roots: &RootSet) -> CycInt {
    let z = roots.roots();
    let mut acc = CycInt::one(roots.order());
    for j in 0..z.len() {
        for i in 0..j {
            acc = acc * (&z[j] - &z[i]);
        }
    }
    acc
}

/// `∏_u (m + c(u)) / h(u)` over the boxes of `lam`, divided exactly at the end.
pub fn hook_content_count(lam: &[usize], m: usize) -> BigInt {
    let lam = trimmed(lam);
    let cols = conjugate_partition(lam);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (r, &len) in lam.iter().enumerate() {
        for c in 0..len {
            let content = c as i64 - r as i64;
            let hook = (len - c - 1) + (cols[c] - r - 1) + 1;
            num *= BigInt::from(m as i64 + content);
            den *= BigInt::from(hook);
        }
    }
    let (q, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "hook-content quotient is not an integer");
    q
}

/// `S_λ(I)` for every partition `λ` with at most `|I|` rows and at most
/// `width` columns, computed level by level with the branching rule
/// `S_λ(x_1..x_t) = Σ_{μ ≺ λ} S_μ(x_1..x_{t-1}) x_t^{|λ|-|μ|}`.
/// Multiplying by a power of a root is an exponent shift, so the whole
/// table is built from additions.
pub struct SchurTable {
    vars: usize,
    transposed: bool,
    values: HashMap<Vec<usize>, CycInt>,
}

impl SchurTable {
    pub fn new(roots: &RootSet, width: usize) -> SchurTable {
        let order = roots.order();
        let mut level: HashMap<Vec<usize>, CycInt> = HashMap::new();
        level.insert(Vec::new(), CycInt::one(order));
        for (t, &x) in roots.exponents().iter().enumerate() {
            let rows = t + 1;
            let mut next = HashMap::new();
            for lam in partitions_in_box(rows, width) {
                let size: usize = lam.iter().sum();
                let mut acc = CycInt::zero(order);
                for mu in interlaced_below(&lam) {
                    let key = trimmed(&mu).to_vec();
                    if let Some(prev) = level.get(&key) {
                        let shift = (size - mu.iter().sum::<usize>()) as i64 * x as i64;
                        acc += &prev.mul_root(shift);
                    }
                }
                next.insert(trimmed(&lam).to_vec(), acc);
            }
            level = next;
        }
        SchurTable {
            vars: roots.len(),
            transposed: false,
            values: level,
        }
    }

    /// Values on the `m × (n-m)` box for `m = |I|`. When `m > n - m` the
    /// table is built on `-I^c` (fewer variables) and lookups are
    /// transposed, using `S_λ(I) = S_{λ^T}(-I^c)`.
    pub fn grid(roots: &RootSet) -> SchurTable {
        let m = roots.len();
        let n = roots.n();
        if m <= n - m {
            return SchurTable::new(roots, n - m);
        }
        let mut table = SchurTable::new(&roots.dual(), m);
        table.vars = m;
        table.transposed = true;
        table
    }

    /// `S_λ(I)`, or `None` when `λ` lies outside the table's box.
    pub fn get(&self, lam: &[usize]) -> Option<&CycInt> {
        if self.transposed {
            self.values.get(&conjugate_partition(lam))
        } else {
            self.values.get(trimmed(lam))
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Partitions with at most `rows` parts, each at most `width`, as
/// length-`rows` vectors.
fn partitions_in_box(rows: usize, width: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == rows {
            out.push(cur.clone());
            return;
        }
        for v in 0..=max {
            cur.push(v);
            rec(rows, v, cur, out);
            cur.pop();
        }
    }
    rec(rows, width, &mut cur, &mut out);
    out
}

/// All `μ` with `λ_1 ≥ μ_1 ≥ λ_2 ≥ ... ≥ μ_{t-1} ≥ λ_t` (length `t-1`).
fn interlaced_below(lam: &[usize]) -> Vec<Vec<usize>> {
    let t = lam.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(t.saturating_sub(1));
    fn rec(lam: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = cur.len();
        if i + 1 >= lam.len() {
            out.push(cur.clone());
            return;
        }
        for v in lam[i + 1]..=lam[i] {
            cur.push(v);
            rec(lam, cur, out);
            cur.pop();
        }
    }
    if t == 0 {
        return vec![Vec::new()];
    }
    rec(lam, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(n: usize, exps: &[i64], sign: i8) -> RootSet {
        RootSet::new(n, exps, sign).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let odd = RootSet::enumerate(5, 2, -1);
        assert_eq!(odd.len(), 10);
        assert!(odd.iter().all(|r| r.exponents().iter().all(|e| e % 2 == 1)));
        assert!(odd.windows(2).all(|w| w[0].exponents() < w[1].exponents()));
        let four = RootSet::enumerate(4, 2, -1);
        assert_eq!(four.len(), 6);
        assert!(four.iter().all(|r| r.exponents().iter().all(|e| [1, 3, 5, 7].contains(e))));
        let two: Vec<Vec<u32>> = RootSet::enumerate(2, 1, 1).iter().map(|r| r.exponents().to_vec()).collect();
        assert_eq!(two, vec![vec![0], vec![2]]);
    }

    #[test]
    fn root_set_validation() {
        assert!(RootSet::new(4, &[1, 2], -1).is_err());
        assert!(RootSet::new(4, &[1, 9], -1).is_err());
        assert!(RootSet::new(4, &[0], 0).is_err());
        assert_eq!(rs(5, &[-1, 1], -1).exponents(), &[1, 9]);
    }

    #[test]
    fn shifts_and_duals() {
        let i = rs(5, &[1, 3], -1);
        assert_eq!(i.shift(5).sign(), 1);
        assert_eq!(i.shift(5).exponents(), &[6, 8]);
        let j = rs(4, &[1, 5], -1);
        assert_eq!(j.shift(1).sign(), 1);
        assert_eq!(j.shift(4).exponents(), &[1, 5]);
        assert_eq!(i.rotate().exponents(), &[3, 5]);
        assert_eq!(i.conj().exponents(), &[7, 9]);
        assert_eq!(i.complement().exponents(), &[5, 7, 9]);
        // -I^c for n=5, |I|=2 (sign -1) has size 3 and sign +1
        let d = i.dual();
        assert_eq!((d.len(), d.sign()), (3, 1));
        assert_eq!(d.exponents(), &[0, 2, 4]);
    }

    #[test]
    fn ssyt_example_in_two_variables() {
        let i = rs(5, &[1, 3], -1);
        // x1^3 x2 + x1^2 x2^2 + x1 x2^3 with x1 = ζ^1, x2 = ζ^3
        let expected = CycInt::root(10, 6) + CycInt::root(10, 8) + CycInt::root(10, 10);
        assert_eq!(schur_ssyt(&[3, 1], &i).unwrap(), expected);
        assert_eq!(ssyt_count(&[3, 1], 2), 3);
        assert_eq!(schur_ssyt(&[], &i).unwrap(), CycInt::one(10));
        assert_eq!(schur_ssyt(&[1], &i).unwrap(), i.sum());
        assert!(matches!(schur_ssyt(&[1, 1, 1], &i), Err(Error::TooManyRows { .. })));
    }

    #[test]
    fn jacobi_trudi_small_cases() {
        let i = rs(7, &[0, 4, 6, 10], 1);
        let e = elementary(&i);
        assert_eq!(schur_jacobi_trudi(&[1], &i).unwrap(), i.sum());
        for c in 0..=4 {
            let column = vec![1; c];
            assert_eq!(schur_jacobi_trudi(&column, &i).unwrap(), e[c]);
        }
    }

    #[test]
    fn alternant_and_vandermonde() {
        let i = rs(4, &[1, 5], -1);
        assert_eq!(alternant(&[], &i).unwrap(), vandermonde(&i));
        assert_eq!(vandermonde(&i), CycInt::root(8, 5) - CycInt::root(8, 1));
        assert!(!vandermonde(&i).is_zero());
        for lam in [vec![1], vec![2, 1], vec![3, 3], vec![2]] {
            let lhs = alternant(&lam, &i).unwrap();
            let rhs = vandermonde(&i) * schur_ssyt(&lam, &i).unwrap();
            assert_eq!(lhs, rhs, "{lam:?}");
        }
    }

    #[test]
    fn hook_content() {
        assert_eq!(hook_content_count(&[1, 1], 3), BigInt::from(3));
        assert_eq!(hook_content_count(&[], 5), BigInt::from(1));
        assert_eq!(hook_content_count(&[1], 7), BigInt::from(7));
        assert_eq!(hook_content_count(&[2, 1], 3), BigInt::from(ssyt_count(&[2, 1], 3)));
    }

    #[test]
    fn table_matches_ssyt() {
        for (n, m, sign) in [(5, 2, -1), (6, 3, 1), (7, 3, 1), (4, 2, -1)] {
            for roots in RootSet::enumerate(n, m, sign).into_iter().take(6) {
                let table = SchurTable::new(&roots, n - m);
                for lam in partitions_in_box(m, n - m) {
                    let got = table.get(&lam).unwrap();
                    assert_eq!(*got, schur_ssyt(&lam, &roots).unwrap(), "{lam:?} at {roots}");
                }
            }
        }
    }

    #[test]
    fn grid_table_uses_smaller_side() {
        for roots in RootSet::enumerate(7, 5, 1) {
            let table = SchurTable::grid(&roots);
            for lam in partitions_in_box(5, 2) {
                assert_eq!(table.get(&lam).unwrap(), &schur_ssyt(&lam, &roots).unwrap());
            }
            assert!(table.get(&[3]).is_none());
        }
    }

    #[test]
    fn complement_identity() {
        for n in 2..=7usize {
            for m in 1..n {
                let sign = if (n - m + 1) % 2 == 0 { 1 } else { -1 };
                for roots in RootSet::enumerate(n, m, sign) {
                    let dual = roots.dual();
                    assert_eq!(dual.sign(), if (m + 1) % 2 == 0 { 1 } else { -1 });
                    let direct = SchurTable::new(&roots, n - m);
                    let other = SchurTable::new(&dual, m);
                    for lam in partitions_in_box(m, n - m) {
                        let t = conjugate_partition(&lam);
                        assert_eq!(direct.get(&lam), other.get(&t), "{lam:?} at {roots}");
                    }
                }
            }
        }
    }
}
