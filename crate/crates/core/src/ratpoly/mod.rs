//! Sparse multivariate polynomials over an exact field.
//!
//! A [`MultiPoly`] lives over an explicit, ordered [`VarTable`]. Binary
//! operations between polynomials over different tables are errors; moving a
//! polynomial into a larger table is explicit via [`MultiPoly::retable`].

mod parse;
pub mod univariate;

pub use parse::{parse, parse_with, VariablePolicy};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;


use crate::error::{Error, Result};
use crate::scalar::{primitive_scale, Scalar};

/// Ordered list of variable names shared by polynomials.
#[derive(Clone)]
pub struct VarTable(Arc<[String]>);

impl VarTable {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(VarTable(names.into()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// A new table with `extra` appended after the existing names.
    pub fn extended<I, S>(&self, extra: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        VarTable::new(self.0.iter().cloned().chain(extra.into_iter().map(Into::into)))
    }

    fn describe(&self) -> String {
        self.0.join(", ")
    }
}

impl PartialEq for VarTable {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for VarTable {}

impl fmt::Debug for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Exponent vector. Ordered graded-lexicographically: higher total degree is
/// larger, ties broken lexicographically with the first variable most
/// significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    /// All exponent vectors of total degree `d` in `nvars` variables, in
    /// descending monomial order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial(vec![]));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Sparse polynomial with exact coefficients. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<C> {
    vars: VarTable,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> MultiPoly<C> {
    pub fn zero(vars: &VarTable) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &VarTable, c: C) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &VarTable) -> Self {
        Self::constant(vars, C::one())
    }

    pub fn var_at(vars: &VarTable, i: usize) -> Self {
        Self::monomial(vars, Monomial::var(vars.len(), i), C::one())
    }

    pub fn var(vars: &VarTable, name: &str) -> Result<Self> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(vars, i))
    }

    pub fn monomial(vars: &VarTable, m: Monomial, c: C) -> Self {
        assert_eq!(m.0.len(), vars.len(), "monomial arity");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I>(vars: &VarTable, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), vars.len(), "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficient of the all-zero monomial.
    pub fn constant_term(&self) -> C {
        self.coefficient(&Monomial::one(self.vars.len()))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    /// Indices of variables that occur with positive exponent.
    pub fn occurring_vars(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_table(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::TableMismatch {
                left: self.vars.describe(),
                right: other.vars.describe(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut out = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    /// `self += c * m * other`, tables assumed equal.
    pub(crate) fn add_scaled_shifted(&mut self, c: &C, m: &Monomial, other: &Self) {
        for (m2, c2) in &other.terms {
            self.add_term(m.mul(m2), c.clone() * c2.clone());
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Rewrite over `target`, matching variables by name. Fails when an
    /// occurring variable is absent from `target`.
    pub fn retable(&self, target: &VarTable) -> Result<Self> {
        if &self.vars == target {
            return Ok(self.clone());
        }
        let mut map = vec![None; self.vars.len()];
        for i in self.occurring_vars() {
            let name = self.vars.name(i);
            map[i] = Some(
                target
                    .index_of(name)
                    .ok_or_else(|| Error::UnknownVariable(name.to_string()))?,
            );
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.0.iter().enumerate() {
                if x > 0 {
                    e[map[i].unwrap()] += x;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Ring homomorphism sending each variable to a polynomial. All images
    /// must share one table. Variables that do not occur need no image.
    pub fn substitute(&self, assign: &BTreeMap<String, MultiPoly<C>>) -> Result<Self> {
        let target = match assign.values().next() {
            Some(p) => p.vars.clone(),
            None => {
                if self.is_constant() {
                    return Ok(self.clone());
                }
                let i = self.occurring_vars()[0];
                return Err(Error::MissingAssignment(self.vars.name(i).to_string()));
            }
        };
        let mut images = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            match assign.get(name) {
                Some(p) => {
                    if p.vars != target {
                        return Err(Error::TableMismatch {
                            left: target.describe(),
                            right: p.vars.describe(),
                        });
                    }
                    images.push(Some(p.clone()));
                }
                None => images.push(None),
            }
        }
        self.substitute_indexed(&images, &target)
    }

    /// Substitution with images given per variable index.
    pub fn substitute_indexed(
        &self,
        images: &[Option<MultiPoly<C>>],
        target: &VarTable,
    ) -> Result<Self> {
        for i in self.occurring_vars() {
            match &images[i] {
                None => return Err(Error::MissingAssignment(self.vars.name(i).to_string())),
                Some(p) if &p.vars != target => {
                    return Err(Error::TableMismatch {
                        left: target.describe(),
                        right: p.vars.describe(),
                    })
                }
                _ => {}
            }
        }
        let mut powers: Vec<Vec<MultiPoly<C>>> = vec![Vec::new(); self.vars.len()];
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                let img = images[i].as_ref().unwrap();
                if cache.is_empty() {
                    cache.push(Self::one(target));
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * img;
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            for (m2, c2) in t.terms {
                out.add_term(m2, c2);
            }
        }
        Ok(out)
    }

    /// Set the variables in `values` to constants, keeping the table.
    pub fn specialize(&self, values: &[(usize, C)]) -> Self {
        let mut out = Self::zero(&self.vars);
        'terms: for (m, c) in &self.terms {
            let mut c = c.clone();
            let mut e = m.0.clone();
            for (i, v) in values {
                let k = e[*i];
                if k > 0 {
                    if v.is_zero() {
                        continue 'terms;
                    }
                    c = c * num_traits::pow(v.clone(), k as usize);
                    e[*i] = 0;
                }
            }
            out.add_term(Monomial(e), c);
        }
        out
    }

    /// Evaluate at a point given for every variable.
    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.vars.len(), "point arity");
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = t * num_traits::pow(x.clone(), e as usize);
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.0.clone();
            m2[i] -= 1;
            out.add_term(Monomial(m2), c.clone() * C::from_int(e as i64));
        }
        out
    }

    /// Exact quotient `self / q`, or `NotDivisible`.
    pub fn exact_divide(&self, q: &Self) -> Result<Self> {
        self.check_table(q)?;
        let (lm, lc) = match q.leading_term() {
            None => return Err(Error::DivisionByZero),
            Some((m, c)) => (m.clone(), c.clone()),
        };
        if q.terms.len() == 1 {
            let mut out = Self::zero(&self.vars);
            for (m, c) in &self.terms {
                let m2 = lm.quotient_of(m).ok_or(Error::NotDivisible)?;
                out.terms.insert(m2, c.clone() / lc.clone());
            }
            return Ok(out);
        }
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        let neg_q = -q;
        while let Some((m, c)) = rem.leading_term() {
            let m2 = lm.quotient_of(m).ok_or(Error::NotDivisible)?;
            let c2 = c.clone() / lc.clone();
            rem.add_scaled_shifted(&c2, &m2, &neg_q);
            quot.add_term(m2, c2);
        }
        Ok(quot)
    }

    /// Split into pieces of equal total degree, ascending by degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Self::zero(&self.vars))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// Keep only the terms selected by `keep`.
    pub fn filter_terms<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Scalar multiple with coprime integer coefficients and a positive
    /// leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut s = primitive_scale(self.terms.values());
        if self.leading_term().unwrap().1.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    /// True when `other` is a non-zero scalar multiple of `self`.
    pub fn is_scalar_multiple_of(&self, other: &Self) -> bool {
        if self.vars != other.vars || self.terms.len() != other.terms.len() {
            return false;
        }
        match (self.leading_term(), other.leading_term()) {
            (None, None) => true,
            (Some((m1, c1)), Some((m2, c2))) if m1 == m2 => {
                let r = c1.clone() / c2.clone();
                other.scale(&r) == *self
            }
            _ => false,
        }
    }
}

impl<C: Scalar> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<C: Scalar> $trait<&MultiPoly<C>> for &MultiPoly<C> {
            type Output = MultiPoly<C>;
            /// Panics on a variable-table mismatch; use the `checked_` form
            /// for fallible arithmetic.
            fn $method(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
                self.$checked(rhs).expect("polynomial operands over the same table")
            }
        }
        impl<C: Scalar> $trait<MultiPoly<C>> for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $method(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
                (&self).$method(&rhs)
            }
        }
        impl<C: Scalar> $trait<&MultiPoly<C>> for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $method(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<C: Scalar> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        self.scale(&-C::one())
    }
}

impl<C: Scalar> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        -&self
    }
}

impl<C: Scalar> serde::Serialize for MultiPoly<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::Zero;

    type P = MultiPoly<Rational>;

    fn table(n: usize) -> VarTable {
        VarTable::new((0..n).map(|i| format!("w{i}"))).unwrap()
    }

    fn p(t: &VarTable, s: &str) -> P {
        parse_with(s, t, VariablePolicy::Strict).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let t = table(2);
        assert_eq!(p(&t, "(w0 + w1)*(w0 - w1)"), p(&t, "w0^2 - w1^2"));
        assert_eq!(&p(&t, "w0 + w1") * &P::zero(&t), P::zero(&t));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let t = table(3);
        let s = &p(&t, "w1^2 - 4*w0*w2") + &p(&t, "4*w0*w2");
        assert_eq!(s, p(&t, "w1^2"));
        assert_eq!(s.num_terms(), 1);
    }

    #[test]
    fn mismatched_tables_are_rejected() {
        let a = P::var_at(&table(2), 0);
        let b = P::var_at(&table(3), 0);
        assert!(matches!(a.checked_add(&b), Err(Error::TableMismatch { .. })));
    }

    #[test]
    fn substitute_graph_coordinate() {
        let w = table(6);
        let z = VarTable::new(["z1", "z2", "z3", "z4", "z5"]).unwrap();
        let mut assign = BTreeMap::new();
        assign.insert("w0".to_string(), p(&z, "1 + z2*z5 - z3*z4"));
        let r = p(&w, "w0").substitute(&assign).unwrap();
        assert_eq!(r, p(&z, "1 + z2*z5 - z3*z4"));
    }

    #[test]
    fn substitute_identity_and_shift() {
        let t = VarTable::new(["w0", "w1", "t"]).unwrap();
        let mut id = BTreeMap::new();
        for n in ["w0", "w1", "t"] {
            id.insert(n.to_string(), P::var(&t, n).unwrap());
        }
        assert_eq!(p(&t, "w0*w1").substitute(&id).unwrap(), p(&t, "w0*w1"));
        id.insert("w1".to_string(), p(&t, "w1 + t*w0"));
        assert_eq!(
            p(&t, "w1^2").substitute(&id).unwrap(),
            p(&t, "w1^2 + 2*t*w0*w1 + t^2*w0^2")
        );
    }

    #[test]
    fn missing_assignment_is_an_error() {
        let t = table(2);
        let mut a = BTreeMap::new();
        a.insert("w0".to_string(), P::var_at(&t, 0));
        assert_eq!(
            p(&t, "w0*w1").substitute(&a),
            Err(Error::MissingAssignment("w1".into()))
        );
    }

    #[test]
    fn constant_terms() {
        let t = table(4);
        assert_eq!(p(&t, "1 - w0*w3 + w1*w2").constant_term(), Rational::from_int(1));
        assert_eq!(p(&t, "w0").constant_term(), Rational::zero());
        assert_eq!(p(&t, "7/3").constant_term(), Rational::new(7.into(), 3.into()));
    }

    #[test]
    fn exact_division() {
        let t = VarTable::new(["w0", "w1", "v"]).unwrap();
        assert_eq!(p(&t, "v^2*w0").exact_divide(&p(&t, "v^2")).unwrap(), p(&t, "w0"));
        assert_eq!(
            p(&t, "w0^2 - w1^2").exact_divide(&p(&t, "w0 - w1")).unwrap(),
            p(&t, "w0 + w1")
        );
        assert_eq!(p(&t, "w0 + v").exact_divide(&p(&t, "v")), Err(Error::NotDivisible));
        assert_eq!(p(&t, "w0").exact_divide(&P::zero(&t)), Err(Error::DivisionByZero));
    }

    #[test]
    fn grlex_order() {
        let t = table(4);
        let lt = p(&t, "w1*w2 - w0*w3 + w0 + 3").leading_term().unwrap().0.clone();
        assert_eq!(lt, Monomial::from_exponents(vec![1, 0, 0, 1]));
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(3, 2)[0], Monomial::from_exponents(vec![2, 0, 0]));
    }

    #[test]
    fn retable_and_primitive() {
        let small = VarTable::new(["w1"]).unwrap();
        let big = VarTable::new(["u", "w1"]).unwrap();
        let q = p(&small, "w1/2").retable(&big).unwrap();
        assert_eq!(q, p(&big, "w1/2"));
        assert_eq!(p(&big, "-w1/2 + u/3").primitive(), p(&big, "2*u - 3*w1"));
        assert!(p(&big, "u").retable(&small).is_err());
    }
}
