//! Exact arithmetic in `C[t^{±1}, s^{±1}]` and square matrices over it.
//!
//! Polynomials are sparse maps from exponent pairs `(t, s)` to nonzero
//! coefficients, kept in a `BTreeMap` so iteration (and therefore every
//! printed or serialized form) is ordered lexicographically by
//! `(t-exponent, s-exponent)`.
//!
//! The coefficient ring is a type parameter. Everything in this crate is
//! exact, so only exact rings make sense here: `BigInt` is the default
//! (see [`crate::Poly`]), `i64` is fine when coefficients are known to be
//! small, and `BigRational` also works.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{Num, Signed};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient ring for [`LaurentPoly`].
pub trait Coeff:
    Num + Signed + Clone + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

impl<T> Coeff for T where
    T: Num + Signed + Clone + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

/// Exponent pair `(t, s)` of a monomial `t^a s^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub t: i64,
    pub s: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { t: 0, s: 0 };

    pub fn new(t: i64, s: i64) -> Self {
        Monomial { t, s }
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial { t: self.t + other.t, s: self.s + other.s }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let power = |f: &mut fmt::Formatter<'_>, var: &str, e: i64| match e {
            1 => write!(f, "{var}"),
            _ => write!(f, "{var}^{e}"),
        };
        match (self.t, self.s) {
            (0, 0) => write!(f, "1"),
            (t, 0) => power(f, "t", t),
            (0, s) => power(f, "s", s),
            (t, s) => {
                power(f, "t", t)?;
                write!(f, "*")?;
                power(f, "s", s)
            }
        }
    }
}

/// A Laurent polynomial in `t` and `s`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: C, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// `t^a s^b`.
    pub fn monomial(t: i64, s: i64) -> Self {
        Self::term(C::one(), Monomial::new(t, s))
    }

    pub fn t() -> Self {
        Self::monomial(1, 0)
    }

    pub fn t_inv() -> Self {
        Self::monomial(-1, 0)
    }

    pub fn s() -> Self {
        Self::monomial(0, 1)
    }

    pub fn s_inv() -> Self {
        Self::monomial(0, -1)
    }

    /// Builds a polynomial from arbitrary terms, merging repeats and
    /// dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending `(t, s)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> C {
        self.terms.get(&m).cloned().unwrap_or_else(C::zero)
    }

    /// True when no term has a nonzero `s` exponent.
    pub fn is_free_of_s(&self) -> bool {
        self.terms.keys().all(|m| m.s == 0)
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, a.clone() * c.clone())).collect();
        LaurentPoly { terms }
    }

    /// Multiplies by the monomial `t^a s^b`.
    pub fn shift(&self, m: Monomial) -> Self {
        let terms = self.terms.iter().map(|(k, c)| (k.times(m), c.clone())).collect();
        LaurentPoly { terms }
    }

    /// Exact evaluation at `t, s ∈ {-1, 1}`.
    pub fn evaluate_at_units(&self, t: i64, s: i64) -> Result<C> {
        if !matches!(t, -1 | 1) || !matches!(s, -1 | 1) {
            return Err(Error::EvaluationPoint { t, s });
        }
        let sign = |base: i64, e: i64| base == -1 && e.rem_euclid(2) == 1;
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            if sign(t, m.t) != sign(s, m.s) {
                acc = acc - c.clone();
            } else {
                acc = acc + c.clone();
            }
        }
        Ok(acc)
    }
}

impl<C: Coeff> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> From<C> for LaurentPoly<C> {
    fn from(c: C) -> Self {
        Self::constant(c)
    }
}

impl<C: Coeff> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coeff> Add for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(mut self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        self += &rhs;
        self
    }
}

impl<C: Coeff> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(self) -> LaurentPoly<C> {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect();
        LaurentPoly { terms }
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

impl<C: Coeff> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn sub(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(*mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self * &rhs
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    /// Human form, e.g. `1-t`, `-t^-1+2*t*s^-1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if negative {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let magnitude = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Serialized as a list of `[t_exp, s_exp, "coeff"]`, ascending.
impl<C: Coeff> Serialize for LaurentPoly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&(m.t, m.s, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de, C: Coeff> Deserialize<'de> for LaurentPoly<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(i64, i64, String)> = Vec::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (t, s, c) in raw {
            let c = C::from_str_radix(&c, 10)
                .map_err(|_| de::Error::custom(format!("bad coefficient {c:?}")))?;
            terms.push((Monomial::new(t, s), c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

/// Square matrix of Laurent polynomials, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix<C> {
    n: usize,
    entries: Vec<LaurentPoly<C>>,
}

impl<C: Coeff> PolyMatrix<C> {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be positive");
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = LaurentPoly::one();
        }
        m
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be positive");
        PolyMatrix { n, entries: vec![LaurentPoly::zero(); n * n] }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly<C>>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Malformed("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { left: n, right: row.len() });
            }
            entries.extend(row);
        }
        Ok(PolyMatrix { n, entries })
    }

    /// Integer matrix embedded as constant polynomials.
    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| {
                            let c = C::from_str_radix(&v.to_string(), 10)
                                .unwrap_or_else(|_| unreachable!("decimal integer"));
                            LaurentPoly::constant(c)
                        })
                        .collect()
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly<C> {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: LaurentPoly<C>) {
        self.entries[row * self.n + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[LaurentPoly<C>]> {
        self.entries.chunks(self.n)
    }

    pub fn product(&self, other: &PolyMatrix<C>) -> Result<PolyMatrix<C>> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let term = a * b;
                    out.entries[i * n + j] += &term;
                }
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(idx, e)| {
            if idx / self.n == idx % self.n {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Determinant by cofactor expansion; dimension must be at most 8.
    pub fn det(&self) -> Result<LaurentPoly<C>> {
        if self.n > MAX_DET_DIM {
            return Err(Error::DeterminantBudget(self.n));
        }
        let cols: Vec<usize> = (0..self.n).collect();
        Ok(self.minor_det(0, &cols))
    }

    fn minor_det(&self, row: usize, cols: &[usize]) -> LaurentPoly<C> {
        if cols.len() == 1 {
            return self.get(row, cols[0]).clone();
        }
        let mut acc = LaurentPoly::zero();
        for (pos, &c) in cols.iter().enumerate() {
            let entry = self.get(row, c);
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry * &self.minor_det(row + 1, &rest);
            if pos % 2 == 0 {
                acc += &term;
            } else {
                acc += &(-term);
            }
        }
        acc
    }

    /// Evaluates every entry at `t = t0`, `s = s0` with `t0, s0 ∈ {-1, 1}`.
    pub fn specialize(&self, t0: i64, s0: i64) -> Result<Vec<Vec<C>>> {
        self.rows()
            .map(|row| row.iter().map(|p| p.evaluate_at_units(t0, s0)).collect())
            .collect()
    }

    /// True when no entry involves `s`.
    pub fn is_free_of_s(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_free_of_s)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("matrix serialization is infallible")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        serde_json::from_value(value.clone()).map_err(|e| Error::Malformed(e.to_string()))
    }
}

const MAX_DET_DIM: usize = 8;

#[derive(Serialize, Deserialize)]
#[serde(bound(serialize = "C: Coeff", deserialize = "C: Coeff"))]
struct MatrixRepr<C> {
    n: usize,
    entries: Vec<Vec<LaurentPoly<C>>>,
}

impl<C: Coeff> Serialize for PolyMatrix<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr { n: self.n, entries: self.rows().map(<[_]>::to_vec).collect() }
            .serialize(serializer)
    }
}

impl<'de, C: Coeff> Deserialize<'de> for PolyMatrix<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::<C>::deserialize(deserializer)?;
        if repr.entries.len() != repr.n {
            return Err(de::Error::custom("row count does not match n"));
        }
        PolyMatrix::from_rows(repr.entries).map_err(de::Error::custom)
    }
}

impl<C: Coeff> fmt::Display for PolyMatrix<C> {
    /// One bracketed row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for PolyMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix({})\n{self}", self.n)
    }
}
