//! Exact arithmetic in the cyclotomic ring `Z[ζ_N]`.
//!
//! Elements are kept in group-ring form: an integer combination of the
//! powers `ζ^0, ..., ζ^(N-1)`, multiplied with exponents added mod `N`.
//! Only the nonzero coefficients are stored. Two group-ring elements can
//! describe the same cyclotomic integer (`1 + ζ^(N/2)` is zero), so
//! equality, hashing and zero tests go through the canonical remainder
//! modulo the cyclotomic polynomial `Φ_N`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Absolute tolerance for every floating-point comparison in the crate.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

/// Dense integer polynomial, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycPoly {
    coeffs: Vec<BigInt>,
}

impl CycPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        CycPoly { coeffs }
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] = BigInt::one();
        CycPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn mul(&self, other: &CycPoly) -> CycPoly {
        if self.is_zero() || other.is_zero() {
            return CycPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CycPoly::new(out)
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &CycPoly) -> (CycPoly, CycPoly) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.degree();
        if self.coeffs.len() <= dd {
            return (CycPoly::new(Vec::new()), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = std::mem::take(&mut rem[top]);
            if c.is_zero() {
                continue;
            }
            let shift = top - dd;
            for (i, p) in divisor.coeffs[..dd].iter().enumerate() {
                if !p.is_zero() {
                    rem[shift + i] -= &c * p;
                }
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        (CycPoly::new(quot), CycPoly::new(rem))
    }
}

impl fmt::Display for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{abs}x")?,
                (_, true) => write!(f, "x^{e}")?,
                (_, false) => write!(f, "{abs}x^{e}")?,
            }
        }
        Ok(())
    }
}

pub fn euler_totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

type PhiCache = RwLock<HashMap<u32, Arc<CycPoly>>>;

fn phi_cache() -> &'static PhiCache {
    static CACHE: OnceLock<PhiCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The cyclotomic polynomial `Φ_N`, obtained by dividing `x^N - 1` by `Φ_d`
/// for every proper divisor `d` of `N`. Results are cached per order.
pub fn cyclotomic_polynomial(order: u32) -> Arc<CycPoly> {
    assert!(order >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = phi_cache().read().expect("phi cache poisoned").get(&order) {
        return Arc::clone(p);
    }
    let mut acc = CycPoly::x_pow_minus_one(order as usize);
    for d in divisors(order) {
        if d == order {
            continue;
        }
        let (q, r) = acc.div_rem_monic(&cyclotomic_polynomial(d));
        debug_assert!(r.is_zero());
        acc = q;
    }
    let mut cache = phi_cache().write().expect("phi cache poisoned");
    Arc::clone(cache.entry(order).or_insert_with(|| Arc::new(acc)))
}

/// Element of `Z[ζ_N]` in group-ring form.
#[derive(Clone)]
pub struct CycInt {
    order: u32,
    /// Nonzero coefficients, sorted by exponent in `0..order`.
    terms: Vec<(u32, BigInt)>,
}

impl CycInt {
    pub fn zero(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        CycInt {
            order,
            terms: Vec::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::root(order, 0)
    }

    pub fn from_integer(order: u32, value: impl Into<BigInt>) -> Self {
        let value = value.into();
        let mut out = Self::zero(order);
        if !value.is_zero() {
            out.terms.push((0, value));
        }
        out
    }

    /// `ζ_N^e`; the exponent is taken mod `N`.
    pub fn root(order: u32, exponent: i64) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let e = exponent.rem_euclid(order as i64) as u32;
        CycInt {
            order,
            terms: vec![(e, BigInt::one())],
        }
    }

    /// From a dense coefficient list of length at most `N`.
    pub fn from_coeffs(order: u32, coeffs: &[BigInt]) -> Result<Self> {
        if coeffs.len() > order as usize {
            return Err(Error::SizeMismatch {
                expected: order as usize,
                actual: coeffs.len(),
            });
        }
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u32, c.clone()))
            .collect();
        Ok(CycInt { order, terms })
    }

    pub fn from_i64_coeffs(order: u32, coeffs: &[i64]) -> Result<Self> {
        let big: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        Self::from_coeffs(order, &big)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Dense group-ring coefficients, length `N`.
    pub fn coeffs(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.order as usize];
        for (e, c) in &self.terms {
            out[*e as usize] = c.clone();
        }
        out
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> &[(u32, BigInt)] {
        &self.terms
    }

    /// True when the group-ring form has no terms at all (stronger than
    /// [`is_zero`](Self::is_zero)).
    pub fn is_trivially_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c.abs()).sum()
    }

    fn check_order(&self, other: &CycInt) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &CycInt) -> Result<CycInt> {
        self.check_order(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &CycInt) -> Result<CycInt> {
        self.check_order(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &CycInt) -> Result<CycInt> {
        self.check_order(other)?;
        Ok(self.convolve(other))
    }

    fn merge(&self, other: &CycInt, negate_other: bool) -> CycInt {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let theirs = |c: &BigInt| if negate_other { -c } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            match ea.cmp(eb) {
                Ordering::Less => {
                    terms.push((*ea, ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    terms.push((*eb, theirs(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        terms.push((*ea, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(self.terms[i..].iter().cloned());
        terms.extend(other.terms[j..].iter().map(|(e, c)| (*e, theirs(c))));
        CycInt {
            order: self.order,
            terms,
        }
    }

    fn convolve(&self, other: &CycInt) -> CycInt {
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        match small.terms.as_slice() {
            [] => return CycInt::zero(self.order),
            [(e, c)] if c.is_one() => return large.mul_root(*e as i64),
            [(e, c)] if (-c).is_one() => return -large.mul_root(*e as i64),
            _ => {}
        }
        let n = self.order as usize;
        let mut acc = vec![BigInt::zero(); n];
        for (ea, ca) in &small.terms {
            for (eb, cb) in &large.terms {
                let idx = (*ea as usize + *eb as usize) % n;
                acc[idx] += ca * cb;
            }
        }
        CycInt {
            order: self.order,
            terms: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as u32, c))
                .collect(),
        }
    }

    /// Multiplies by `ζ_N^e`.
    pub fn mul_root(&self, exponent: i64) -> CycInt {
        let n = self.order as i64;
        let shift = exponent.rem_euclid(n) as u32;
        if shift == 0 {
            return self.clone();
        }
        let mut terms: Vec<(u32, BigInt)> = self
            .terms
            .iter()
            .map(|(e, c)| ((e + shift) % self.order, c.clone()))
            .collect();
        terms.sort_unstable_by_key(|(e, _)| *e);
        CycInt {
            order: self.order,
            terms,
        }
    }

    /// Multiplies by `ζ_N^2`, which is `e^(2πi/n)` when `N = 2n`.
    pub fn rotate(&self) -> CycInt {
        self.mul_root(2)
    }

    /// Complex conjugation: `ζ^e ↦ ζ^(N-e)`.
    pub fn conj(&self) -> CycInt {
        let mut terms: Vec<(u32, BigInt)> = self
            .terms
            .iter()
            .map(|(e, c)| ((self.order - e) % self.order, c.clone()))
            .collect();
        terms.sort_unstable_by_key(|(e, _)| *e);
        CycInt {
            order: self.order,
            terms,
        }
    }

    pub fn scale(&self, factor: &BigInt) -> CycInt {
        if factor.is_zero() {
            return CycInt::zero(self.order);
        }
        CycInt {
            order: self.order,
            terms: self.terms.iter().map(|(e, c)| (*e, c * factor)).collect(),
        }
    }

    /// Power by repeated squaring.
    pub fn pow(&self, mut exp: u32) -> CycInt {
        let mut base = self.clone();
        let mut acc = CycInt::one(self.order);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.convolve(&base);
            }
            base = base.convolve(&base);
            exp >>= 1;
        }
        acc
    }

    /// Folds the group-ring form modulo `x^L ± 1` where `L = N/2` for even
    /// `N` (using `ζ^(N/2) = -1`) and `L = N` otherwise. Returns a dense
    /// vector of length `L`.
    fn folded(&self) -> Vec<BigInt> {
        let n = self.order as usize;
        let half = if n.is_multiple_of(2) { n / 2 } else { n };
        let mut out = vec![BigInt::zero(); half];
        for (e, c) in &self.terms {
            let e = *e as usize;
            if e < half {
                out[e] += c;
            } else {
                out[e - half] -= c;
            }
        }
        out
    }

    /// Canonical remainder modulo `Φ_N`: `φ(N)` integers, lowest degree first.
    pub fn canonical(&self) -> Vec<BigInt> {
        let phi = cyclotomic_polynomial(self.order);
        let deg = phi.degree();
        let low: Vec<(usize, &BigInt)> = phi.coeffs()[..deg]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut v = self.folded();
        for top in (deg..v.len()).rev() {
            let c = std::mem::take(&mut v[top]);
            if c.is_zero() {
                continue;
            }
            let shift = top - deg;
            for (i, p) in &low {
                v[shift + i] -= &c * *p;
            }
        }
        v.resize(deg, BigInt::zero());
        v
    }

    /// Exact zero test in `Z[ζ_N]`.
    pub fn is_zero(&self) -> bool {
        if self.terms.is_empty() {
            return true;
        }
        let folded = self.folded();
        if folded.iter().all(Zero::is_zero) {
            return true;
        }
        self.canonical().iter().all(Zero::is_zero)
    }

    /// Evaluates at `ζ_N = exp(2πi/N)`. The absolute error is at most
    /// `l1_norm() * 1e-14`.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        self.terms
            .iter()
            .map(|(e, c)| {
                let angle = 2.0 * std::f64::consts::PI * (*e as f64) / n;
                let (s, co) = angle.sin_cos();
                let c = c.to_f64().unwrap_or(f64::NAN);
                Complex64::new(c * co, c * s)
            })
            .sum()
    }
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.merge(other, true).is_zero()
    }
}

impl Eq for CycInt {}

impl Hash for CycInt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.canonical().hash(state);
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&CycInt> for &CycInt {
            type Output = CycInt;
            /// Panics when the orders differ; use the `try_` form to get an error.
            fn $method(self, rhs: &CycInt) -> CycInt {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<CycInt> for CycInt {
            type Output = CycInt;
            fn $method(self, rhs: CycInt) -> CycInt {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycInt> for CycInt {
            type Output = CycInt;
            fn $method(self, rhs: &CycInt) -> CycInt {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl AddAssign<&CycInt> for CycInt {
    fn add_assign(&mut self, rhs: &CycInt) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycInt> for CycInt {
    fn sub_assign(&mut self, rhs: &CycInt) {
        *self = &*self - rhs;
    }
}

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(mut self) -> CycInt {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        -self.clone()
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "ζ{}^{e}", self.order)?,
                (_, false) => write!(f, "{abs}·ζ{}^{e}", self.order)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt[{}]({self})", self.order)
    }
}

#[derive(Serialize, Deserialize)]
struct CycIntRepr {
    order: u32,
    coeffs: Vec<String>,
}

impl Serialize for CycInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CycIntRepr {
            order: self.order,
            coeffs: self.coeffs().iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = CycIntRepr::deserialize(deserializer)?;
        if repr.order == 0 {
            return Err(D::Error::custom("order must be positive"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        CycInt::from_coeffs(repr.order, &coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> CycPoly {
        CycPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Schoolbook long division on i128, written independently of
    /// `div_rem_monic`.
    fn brute_phi(n: usize) -> Vec<i128> {
        fn divide(num: &[i128], den: &[i128]) -> Vec<i128> {
            let mut r = num.to_vec();
            let dd = den.len() - 1;
            let mut q = vec![0i128; num.len() - dd];
            for i in (0..q.len()).rev() {
                let c = r[i + dd] / den[dd];
                q[i] = c;
                for j in 0..=dd {
                    r[i + j] -= c * den[j];
                }
            }
            assert!(r.iter().all(|&c| c == 0), "inexact division");
            q
        }
        let mut num = vec![0i128; n + 1];
        num[0] = -1;
        num[n] = 1;
        for d in 1..n {
            if n.is_multiple_of(d) {
                num = divide(&num, &brute_phi(d));
            }
        }
        num
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), poly(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2), poly(&[1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), poly(&[1, 0, 1]));
        let brute: Vec<i64> = brute_phi(10).iter().map(|&c| c as i64).collect();
        assert_eq!(brute, vec![1, -1, 1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(10), poly(&brute));
        assert_eq!(cyclotomic_polynomial(10).to_string(), "x^4 - x^3 + x^2 - x + 1");
    }

    #[test]
    fn phi_matches_brute_force_and_totient() {
        for n in 1..=60u32 {
            let phi = cyclotomic_polynomial(n);
            let brute: Vec<BigInt> = brute_phi(n as usize).into_iter().map(BigInt::from).collect();
            assert_eq!(phi.coeffs(), brute.as_slice(), "Φ_{n}");
            assert!(phi.is_monic());
            assert_eq!(phi.degree() as u64, euler_totient(n as u64));
        }
    }

    #[test]
    fn product_of_phis_is_x_pow_minus_one() {
        for n in 1..=48u32 {
            let prod = divisors(n)
                .into_iter()
                .fold(poly(&[1]), |acc, d| acc.mul(&cyclotomic_polynomial(d)));
            assert_eq!(prod, CycPoly::x_pow_minus_one(n as usize));
            let (_, r) = CycPoly::x_pow_minus_one(n as usize).div_rem_monic(&cyclotomic_polynomial(n));
            assert!(r.is_zero());
        }
    }

    #[test]
    fn zero_tests() {
        for n in 2..=12u32 {
            let order = 2 * n;
            let half = CycInt::root(order, n as i64) + CycInt::one(order);
            assert!(half.is_zero());
            assert!(!half.is_trivially_zero());
            let all: CycInt = (0..n).fold(CycInt::zero(order), |acc, t| acc + CycInt::root(order, 2 * t as i64));
            assert!(all.is_zero(), "sum of {n}-th roots");
            assert!(!CycInt::one(order).is_zero());
        }
    }

    #[test]
    fn prime_vanishing_sums_need_all_terms() {
        for p in [2u32, 3, 5, 7, 11, 13] {
            let order = 2 * p;
            let full: CycInt = (0..p).fold(CycInt::zero(order), |acc, t| acc + CycInt::root(order, 2 * t as i64));
            assert!(full.is_zero());
            // every proper nonempty sub-sum
            for mask in 1u32..((1 << p) - 1) {
                let partial = (0..p)
                    .filter(|t| mask & (1 << t) != 0)
                    .fold(CycInt::zero(order), |acc, t| acc + CycInt::root(order, 2 * t as i64));
                assert!(!partial.is_zero(), "p={p} mask={mask:b}");
            }
        }
    }

    #[test]
    fn arithmetic_identities() {
        let order = 10;
        let n = 5;
        let a = CycInt::from_i64_coeffs(order, &[1, -2, 0, 3, 0, 0, 1, 0, 0, 4]).unwrap();
        let mut r = a.clone();
        for _ in 0..n {
            r = r.rotate();
        }
        assert_eq!(r, a);
        assert_eq!(a.conj().conj().terms(), a.terms());
        for e in 0..order as i64 {
            let z = CycInt::root(order, e);
            assert_eq!(&z.conj() * &z, CycInt::one(order));
        }
        let other = CycInt::one(12);
        assert!(matches!(a.try_add(&other), Err(Error::OrderMismatch { .. })));
        assert!(a.try_mul(&other).is_err());
    }

    #[test]
    fn to_complex_examples() {
        let z = CycInt::root(8, 1).to_complex();
        assert!((z.re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((z.im - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert_eq!(CycInt::zero(8).to_complex(), Complex64::new(0.0, 0.0));
        let w = (CycInt::one(10) + CycInt::root(10, 2)).to_complex();
        let oracle = Complex64::new(1.0 + (0.4 * std::f64::consts::PI).cos(), (0.4 * std::f64::consts::PI).sin());
        assert!((w - oracle).norm() < 1e-12);
        assert!((w.re - 1.309016994).abs() < 1e-9);
        assert!((w.im - 0.951056516).abs() < 1e-9);
        let v = (CycInt::one(10) + CycInt::root(10, 1)).to_complex();
        assert!((v.re - 1.809016994).abs() < 1e-9);
        assert!((v.im - 0.587785252).abs() < 1e-9);
    }

    #[test]
    fn json_form() {
        let a = CycInt::from_i64_coeffs(4, &[1, 0, -3]).unwrap();
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"order":4,"coeffs":["1","0","-3","0"]}"#);
        let back: CycInt = serde_json::from_str(&json).unwrap();
        assert_eq!(back.terms(), a.terms());
    }

    #[test]
    fn equality_uses_reduction() {
        // 1 + ζ_6^2 = ζ_6 in Z[ζ_6]
        let lhs = CycInt::one(6) + CycInt::root(6, 2);
        assert_eq!(lhs, CycInt::root(6, 1));
        use std::collections::HashSet;
        let set: HashSet<CycInt> = [lhs, CycInt::root(6, 1)].into_iter().collect();
        assert_eq!(set.len(), 1);
    }
}
