//! Sparse Laurent polynomials with integer coefficients in named variables.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Ordered list of distinct variable names.
#[derive(Debug, PartialEq, Eq)]
pub struct VarRegistry {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VarRegistry {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<VarRegistry>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Arc::new(VarRegistry { names, index }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

/// `±1` times a monomial, used as the image of a variable under substitution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMonomial {
    pub negative: bool,
    pub exponents: Vec<i32>,
}

impl SignedMonomial {
    /// `∏ numerator / ∏ denominator` over the named variables of `target`.
    pub fn ratio(target: &VarRegistry, numerator: &[&str], denominator: &[&str]) -> Result<Self> {
        let mut exponents = vec![0i32; target.len()];
        for (names, step) in [(numerator, 1), (denominator, -1)] {
            for name in names {
                let i = target
                    .position(name)
                    .ok_or_else(|| Error::UnmappedVariable((*name).to_string()))?;
                exponents[i] += step;
            }
        }
        Ok(SignedMonomial {
            negative: false,
            exponents,
        })
    }
}

#[derive(Clone, Debug)]
pub struct LaurentPoly {
    registry: Arc<VarRegistry>,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(registry: &Arc<VarRegistry>) -> Self {
        LaurentPoly {
            registry: Arc::clone(registry),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(registry: &Arc<VarRegistry>, c: impl Into<BigInt>) -> Self {
        Self::monomial(registry, vec![0; registry.len()], c).expect("length matches")
    }

    pub fn one(registry: &Arc<VarRegistry>) -> Self {
        Self::constant(registry, 1)
    }

    pub fn var(registry: &Arc<VarRegistry>, name: &str) -> Result<Self> {
        let i = registry
            .position(name)
            .ok_or_else(|| Error::UnmappedVariable(name.to_string()))?;
        let mut e = vec![0; registry.len()];
        e[i] = 1;
        Self::monomial(registry, e, 1)
    }

    pub fn monomial(registry: &Arc<VarRegistry>, exponents: Vec<i32>, c: impl Into<BigInt>) -> Result<Self> {
        if exponents.len() != registry.len() {
            return Err(Error::SizeMismatch {
                expected: registry.len(),
                actual: exponents.len(),
            });
        }
        let mut out = Self::zero(registry);
        let c = c.into();
        if !c.is_zero() {
            out.terms.insert(exponents, c);
        }
        Ok(out)
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.registry
    }

    /// Terms in increasing lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_registry(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.registry, &other.registry) || self.registry == other.registry {
            Ok(())
        } else {
            Err(Error::RegistryMismatch)
        }
    }

    fn add_term(&mut self, e: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_registry(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_registry(other)?;
        let mut out = Self::zero(&self.registry);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(&self.registry), |acc, _| &acc * self)
    }

    /// Exact comparison; errors when the registries differ.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.same_registry(other)?;
        Ok(self.terms == other.terms)
    }

    /// Replaces every variable by a signed monomial over `target`. The map
    /// is keyed by source variable name.
    pub fn substitute_monomials(
        &self,
        map: &HashMap<String, SignedMonomial>,
        target: &Arc<VarRegistry>,
    ) -> Result<Self> {
        let images: Vec<&SignedMonomial> = self
            .registry
            .names()
            .iter()
            .map(|name| map.get(name).ok_or_else(|| Error::UnmappedVariable(name.clone())))
            .collect::<Result<_>>()?;
        if let Some(bad) = images.iter().find(|m| m.exponents.len() != target.len()) {
            return Err(Error::SizeMismatch {
                expected: target.len(),
                actual: bad.exponents.len(),
            });
        }
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut image = vec![0i32; target.len()];
            let mut negative = false;
            for (&power, m) in e.iter().zip(&images) {
                if power == 0 {
                    continue;
                }
                for (slot, &x) in image.iter_mut().zip(&m.exponents) {
                    *slot += power * x;
                }
                negative ^= m.negative && power % 2 != 0;
            }
            out.add_term(image, if negative { -c } else { c.clone() });
        }
        Ok(out)
    }

    /// Floating-point evaluation at nonzero complex values, one per variable.
    pub fn evaluate(&self, values: &[Complex64]) -> Result<Complex64> {
        if values.len() != self.registry.len() {
            return Err(Error::SizeMismatch {
                expected: self.registry.len(),
                actual: values.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| {
                let c = c.to_f64().unwrap_or(f64::NAN);
                e.iter()
                    .zip(values)
                    .fold(Complex64::new(c, 0.0), |acc, (&p, v)| acc * v.powi(p))
            })
            .sum())
    }

    /// Canonical text form: terms in decreasing lexicographic order of
    /// exponent vectors, joined by `" + "`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    fn term_text(&self, e: &[i32], c: &BigInt) -> String {
        let mut factors: Vec<String> = Vec::new();
        let vars: Vec<String> = e
            .iter()
            .zip(self.registry.names())
            .filter(|(p, _)| **p != 0)
            .map(|(&p, name)| if p == 1 { name.clone() } else { format!("{name}^{p}") })
            .collect();
        if vars.is_empty() {
            return c.to_string();
        }
        if c.abs() != BigInt::one() {
            factors.push(c.to_string());
        }
        factors.extend(vars);
        let body = factors.join(" * ");
        if c == &BigInt::from(-1) {
            format!("-{body}")
        } else {
            body
        }
    }
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other).unwrap_or(false)
    }
}

impl Eq for LaurentPoly {}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| self.term_text(e, c))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            coefficient: String,
            exponents: &'a [i32],
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| Term {
                coefficient: c.to_string(),
                exponents: e,
            })
            .collect();
        let mut st = serializer.serialize_struct("LaurentPoly", 3)?;
        st.serialize_field("variables", self.registry.names())?;
        st.serialize_field("terms", &terms)?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics on registry mismatch; the `try_` form returns an error.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            registry: Arc::clone(&self.registry),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reg(names: &[&str]) -> Arc<VarRegistry> {
        VarRegistry::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let r = reg(&["x", "y"]);
        let x = LaurentPoly::var(&r, "x").unwrap();
        let y = LaurentPoly::var(&r, "y").unwrap();
        let xinv = LaurentPoly::monomial(&r, vec![-1, 0], 1).unwrap();
        let one = LaurentPoly::one(&r);
        assert_eq!(&(&x + &xinv) * &x, &(&x * &x) + &one);
        assert!((&x + &(-&x)).is_zero());
        let s = &x + &y;
        let two = LaurentPoly::constant(&r, 2);
        assert_eq!(&s * &s, &(&(&x * &x) + &(&two * &(&x * &y))) + &(&y * &y));
        assert_eq!(&x + &y, &y + &x);
        let zero_y = LaurentPoly::monomial(&r, vec![0, 1], 0).unwrap();
        assert_eq!(&x + &zero_y, x);
    }

    #[test]
    fn registry_rules() {
        assert!(matches!(VarRegistry::new(["a", "a"]), Err(Error::DuplicateVariable(_))));
        let a = reg(&["x"]);
        let b = reg(&["z"]);
        let pa = LaurentPoly::var(&a, "x").unwrap();
        let pb = LaurentPoly::var(&b, "z").unwrap();
        assert!(matches!(pa.try_add(&pb), Err(Error::RegistryMismatch)));
        assert!(pa.equals(&pb).is_err());
    }

    #[test]
    fn substitution_examples() {
        let src = reg(&["x"]);
        let dst = reg(&["p", "q"]);
        let x = LaurentPoly::var(&src, "x").unwrap();
        let poly = &x + &LaurentPoly::monomial(&src, vec![-1], 1).unwrap();
        let mut map = HashMap::new();
        map.insert("x".to_string(), SignedMonomial::ratio(&dst, &["p"], &["q"]).unwrap());
        let out = poly.substitute_monomials(&map, &dst).unwrap();
        assert_eq!(out.to_string(), "p * q^-1 + p^-1 * q");

        let mut id = HashMap::new();
        id.insert("x".to_string(), SignedMonomial::ratio(&src, &["x"], &[]).unwrap());
        assert_eq!(poly.substitute_monomials(&id, &src).unwrap(), poly);

        let y = reg(&["y"]);
        let mut sq = HashMap::new();
        sq.insert("x".to_string(), SignedMonomial::ratio(&y, &["y", "y"], &[]).unwrap());
        assert_eq!(x.pow(3).substitute_monomials(&sq, &y).unwrap().to_string(), "y^6");

        let mut neg = HashMap::new();
        neg.insert(
            "x".to_string(),
            SignedMonomial {
                negative: true,
                exponents: vec![1],
            },
        );
        assert_eq!(x.pow(3).substitute_monomials(&neg, &y).unwrap().to_string(), "-y^3");
        assert!(matches!(
            x.substitute_monomials(&HashMap::new(), &y),
            Err(Error::UnmappedVariable(_))
        ));
    }

    #[test]
    fn text_form() {
        let r = reg(&["x_{1,1}"]);
        let x = LaurentPoly::var(&r, "x_{1,1}").unwrap();
        let p = &x + &LaurentPoly::monomial(&r, vec![-1], 1).unwrap();
        assert_eq!(p.to_string(), "x_{1,1} + x_{1,1}^-1");
        let q = &LaurentPoly::constant(&r, -3) + &(&LaurentPoly::constant(&r, 2) * &x);
        assert_eq!(q.to_string(), "2 * x_{1,1} + -3");
        assert_eq!(LaurentPoly::zero(&r).to_string(), "0");
    }
}
