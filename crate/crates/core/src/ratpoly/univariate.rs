//! Dense univariate helpers: gcd-based squarefree analysis and rational roots.

use num_integer::Integer;
use num_traits::Zero;

use super::MultiPoly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Coefficients low-to-high, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly<C>(Vec<C>);

impl<C: Scalar> UniPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    /// View a polynomial in at most one variable as univariate. Constant
    /// input yields a degree-0 (or zero) polynomial.
    pub fn from_multi(p: &MultiPoly<C>) -> Result<Self> {
        let occ = p.occurring_vars();
        if occ.len() > 1 {
            return Err(Error::NotUnivariate(
                occ.iter().map(|&i| p.vars().name(i).to_string()).collect(),
            ));
        }
        let mut c = vec![C::zero(); p.total_degree().unwrap_or(0) as usize + 1];
        for (m, x) in p.terms() {
            c[m.degree() as usize] = x.clone();
        }
        Ok(UniPoly::new(c))
    }

    pub fn coeffs(&self) -> &[C] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &C) -> C {
        self.0.iter().rev().fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * C::from_int(i as i64))
                .collect(),
        )
    }

    fn monic(&self) -> Self {
        match self.0.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = C::one() / lc.clone();
                UniPoly(self.0.iter().map(|c| c.clone() * inv.clone()).collect())
            }
        }
    }

    /// Quotient and remainder by a non-zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        let dl = d.0.len();
        if r.len() < dl {
            return (UniPoly(vec![]), self.clone());
        }
        let lc = d.0.last().unwrap().clone();
        let mut q = vec![C::zero(); r.len() - dl + 1];
        for i in (0..q.len()).rev() {
            let c = r[i + dl - 1].clone() / lc.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                r[i + j] = r[i + j].clone() - c.clone() * dc.clone();
            }
            q[i] = c;
        }
        (UniPoly::new(q), UniPoly::new(r))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Number of distinct roots over the algebraic closure, and whether the
/// polynomial is squarefree. The input must be univariate and non-constant.
pub fn squarefree_distinct_root_count<C: Scalar>(phi: &MultiPoly<C>) -> Result<(usize, bool)> {
    let u = UniPoly::from_multi(phi)?;
    if u.degree() == 0 {
        return Err(Error::ConstantInput);
    }
    let g = u.gcd(&u.derivative());
    Ok((u.degree() - g.degree(), g.degree() == 0))
}

/// Rational roots via the rational root theorem. Returns `None` when the
/// cleared integer coefficients are too large for the divisor enumeration.
pub fn rational_roots<C: Scalar>(u: &UniPoly<C>) -> Option<Vec<C>> {
    const LIMIT: i64 = 1_000_000;
    if u.is_zero() {
        return Some(vec![]);
    }
    let mut roots = Vec::new();
    // strip x^k factors
    let lead_zeros = u.0.iter().take_while(|c| c.is_zero()).count();
    if lead_zeros > 0 {
        roots.push(C::zero());
    }
    let core = UniPoly::new(u.0[lead_zeros..].to_vec());
    if core.degree() == 0 {
        return Some(roots);
    }
    let scale = crate::scalar::primitive_scale(core.0.iter());
    let ints: Vec<C> = core.0.iter().map(|c| c.clone() * scale.clone()).collect();
    let a0 = C::int_to_i64(ints[0].numer())?.abs();
    let an = C::int_to_i64(ints.last().unwrap().numer())?.abs();
    if a0 > LIMIT || an > LIMIT {
        return None;
    }
    let divisors = |n: i64| -> Vec<i64> { (1..=n).filter(|d| n % d == 0).collect() };
    let mut cands: Vec<C> = Vec::new();
    for p in divisors(a0) {
        for q in divisors(an) {
            if p.gcd(&q) != 1 {
                continue;
            }
            let r = C::from_int(p) / C::from_int(q);
            cands.push(r.clone());
            cands.push(-r);
        }
    }
    cands.sort_by(|a, b| a.abs().cmp(&b.abs()).then(b.cmp(a)));
    for r in cands {
        if core.eval(&r).is_zero() && !roots.contains(&r) {
            roots.push(r);
        }
    }
    Some(roots)
}
