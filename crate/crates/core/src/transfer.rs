//! Extension of a `G_a`-invariant `f` on `W` to an SL2-invariant `F` on
//! `V × W`, and the boundary class read off from `F` at `u = v = 0`.
//!
//! `F` is `f` pulled back along the inverse of the section
//! `g(u, v) = [[1/v, u], [0, v]]`, so `F(0, 1, w) = f(w)`.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratpoly::VarTable;
use crate::sl2rep::{GroupMatrix, RepSpec};
use crate::{Poly, Rational};

pub const U: &str = "u";
pub const V: &str = "v";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    /// `F00` is a non-zero constant.
    Misses,
    /// `F00` is not constant.
    Intersects,
    /// `F00` is zero.
    Contains,
}

impl Boundary {
    pub fn of(f00: &Poly) -> Boundary {
        if f00.is_zero() {
            Boundary::Contains
        } else if f00.is_constant() {
            Boundary::Misses
        } else {
            Boundary::Intersects
        }
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Boundary::Misses => "misses",
            Boundary::Intersects => "intersects",
            Boundary::Contains => "contains",
        })
    }
}

/// Section of `SL2 → SL2/G_a` used for the pull-back. Every choice with
/// second column `(u, v)` gives the same `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Section {
    /// `[[1/v, u], [0, v]]`.
    Triangular,
    /// `[[1/v, u], [0, v]] · [[1, 0], [s, 1]]`.
    Sheared(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransferResult {
    /// Over `u, v` followed by the coordinates of `W`.
    #[serde(rename = "F")]
    pub big_f: Poly,
    #[serde(rename = "F00")]
    pub f00: Poly,
    pub g: Poly,
    pub boundary: Boundary,
}

/// Table of `V × W`: `u, v` then the coordinates.
pub fn plane_table(spec: &RepSpec) -> Result<VarTable> {
    VarTable::new([U, V])?.extended(spec.table().names().iter().cloned())
}

fn inverse_section(section: &Section) -> Result<GroupMatrix<Rational>> {
    let uv = VarTable::new([U, V])?;
    let u = Poly::var_at(&uv, 0);
    let v = Poly::var_at(&uv, 1);
    let one = Poly::one(&uv);
    // inverse of the section, times v
    let entries = match section {
        Section::Triangular => [[&v * &v, -(&u * &v)], [Poly::zero(&uv), one]],
        Section::Sheared(s) => [
            [&v * &v, -(&u * &v)],
            [-(&v * &v).scale(s), &one + &(&u * &v).scale(s)],
        ],
    };
    GroupMatrix::new(entries, v)
}

pub fn extend(spec: &RepSpec, f: &Poly) -> Result<TransferResult> {
    extend_with_section(spec, f, &Section::Triangular)
}

pub fn extend_with_section(spec: &RepSpec, f: &Poly, section: &Section) -> Result<TransferResult> {
    let f = f.retable(spec.table())?;
    let df = spec.derivation::<Rational>().apply(&f)?;
    if !df.is_zero() {
        return Err(Error::NotInvariant(df.to_string()));
    }
    let sub = spec.group_substitution(&inverse_section(section)?)?;
    let big_f = match sub.apply_exact(&f) {
        Ok(p) => p,
        Err(Error::NotDivisible) => {
            return Err(Error::NotInvariant("v-denominators do not cancel".into()))
        }
        Err(e) => return Err(e),
    };
    let f00 = big_f
        .filter_terms(|m| m.exponents()[0] == 0 && m.exponents()[1] == 0)
        .retable(spec.table())?;
    let g = &f - &f00;
    let boundary = Boundary::of(&f00);
    Ok(TransferResult { big_f, f00, g, boundary })
}

/// `F` at `u = 0, v = 1`, over the coordinates of `W`.
pub fn restrict_to_identity(spec: &RepSpec, big_f: &Poly) -> Result<Poly> {
    let t = big_f.vars();
    let (iu, iv) = match (t.index_of(U), t.index_of(V)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::UnknownVariable(format!("{U}/{V}"))),
    };
    big_f
        .specialize(&[(iu, Rational::zero()), (iv, Rational::one())])
        .retable(spec.table())
}

/// True when the sl2 triple of `V × W` kills `F`.
pub fn verify_invariance(spec: &RepSpec, big_f: &Poly) -> Result<bool> {
    let plane = spec.with_plane(U, V)?;
    let p = match big_f.retable(plane.table()) {
        Ok(p) => p,
        Err(Error::UnknownVariable(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    plane.sl2_triple::<Rational>()?.annihilates(&p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{parse_with, VariablePolicy};
    use crate::sl2rep::Normalization;
    use crate::Scalar;

    fn spec(ks: &[u32]) -> RepSpec {
        RepSpec::new(ks.to_vec(), Normalization::Binomial).unwrap()
    }

    fn poly(t: &VarTable, s: &str) -> Poly {
        parse_with(s, t, VariablePolicy::Strict).unwrap()
    }

    #[test]
    fn sym1_coordinate() {
        let s = spec(&[1]);
        let r = extend(&s, &poly(s.table(), "w0")).unwrap();
        let pt = plane_table(&s).unwrap();
        assert_eq!(r.big_f, poly(&pt, "v*w0 - u*w1"));
        assert!(r.f00.is_zero());
        assert_eq!(r.boundary, Boundary::Contains);
        assert!(verify_invariance(&s, &r.big_f).unwrap());
    }

    #[test]
    fn constant() {
        let s = spec(&[1]);
        let r = extend(&s, &poly(s.table(), "1")).unwrap();
        assert_eq!(r.big_f, Poly::one(&plane_table(&s).unwrap()));
        assert_eq!(r.f00, poly(s.table(), "1"));
        assert!(r.g.is_zero());
        assert_eq!(r.boundary, Boundary::Misses);
    }

    #[test]
    fn already_invariant() {
        let s = spec(&[1, 1]);
        let f = poly(s.table(), "1 - w0*w3 + w1*w2");
        let r = extend(&s, &f).unwrap();
        assert_eq!(r.big_f, f.retable(&plane_table(&s).unwrap()).unwrap());
        assert_eq!(r.f00, f);
        assert_eq!(r.boundary, Boundary::Intersects);
    }

    #[test]
    fn invariance_predicate() {
        let s = spec(&[1]);
        let pt = plane_table(&s).unwrap();
        assert!(verify_invariance(&s, &poly(&pt, "v*w0 - u*w1")).unwrap());
        assert!(!verify_invariance(&s, &poly(&pt, "u*w0")).unwrap());
        assert!(verify_invariance(&s, &poly(&pt, "1")).unwrap());
    }

    #[test]
    fn rejects_non_invariant() {
        let s = spec(&[1]);
        assert!(matches!(extend(&s, &poly(s.table(), "w1")), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn sections_agree() {
        let s = spec(&[1, 2]);
        let f = poly(s.table(), "w3^2 - 4*w2*w4 + w0*w2 + w0");
        let a = extend(&s, &f).unwrap();
        let b = extend_with_section(&s, &f, &Section::Sheared(Rational::from_int(3))).unwrap();
        assert_eq!(a, b);
        assert_eq!(restrict_to_identity(&s, &a.big_f).unwrap(), f);
    }
}
