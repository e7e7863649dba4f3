//! Bounded search for rational common zeros.
//!
//! Integer points of growing max-norm are tried first; at each of them every
//! occurring variable is in turn freed and the rational roots of the first
//! polynomial in that variable are tried as well.

use num_traits::Zero;

use crate::ratpoly::univariate::{rational_roots, UniPoly};
use crate::{Poly, Rational, Scalar};

/// A common zero of `polys` (all over one table), or `None` once `budget`
/// candidate points have been examined.
pub fn find_common_zero(polys: &[Poly], budget: usize) -> Option<Vec<Rational>> {
    let vars = polys.first()?.vars().clone();
    let mut occ: Vec<usize> = polys.iter().flat_map(|p| p.occurring_vars()).collect();
    occ.sort_unstable();
    occ.dedup();

    let is_zero_at = |pt: &[Rational]| polys.iter().all(|p| p.eval(pt).is_zero());
    let mut point = vec![Rational::zero(); vars.len()];
    if occ.is_empty() {
        return is_zero_at(&point).then_some(point);
    }
    let pivot = polys.iter().find(|p| !p.is_zero())?;

    let mut spent = 0usize;
    let mut radius = 0i64;
    while spent < budget {
        for tuple in shell(occ.len(), radius) {
            if spent >= budget {
                return None;
            }
            spent += 1;
            for (&i, &x) in occ.iter().zip(&tuple) {
                point[i] = Rational::from_int(x);
            }
            if is_zero_at(&point) {
                return Some(point);
            }
            for &free in &occ {
                let fixed: Vec<(usize, Rational)> = occ
                    .iter()
                    .filter(|&&j| j != free)
                    .map(|&j| (j, point[j].clone()))
                    .collect();
                let restricted = pivot.specialize(&fixed);
                if restricted.is_zero() || restricted.is_constant() {
                    continue;
                }
                let Ok(u) = UniPoly::from_multi(&restricted) else { continue };
                let Some(roots) = rational_roots(&u) else { continue };
                for r in roots {
                    let mut cand = point.clone();
                    cand[free] = r;
                    if is_zero_at(&cand) {
                        return Some(cand);
                    }
                }
            }
        }
        radius += 1;
        if radius > 64 {
            return None;
        }
    }
    None
}

/// Integer tuples of length `n` with max-norm exactly `r`.
fn shell(n: usize, r: i64) -> impl Iterator<Item = Vec<i64>> {
    let side = (2 * r + 1) as u64;
    let total = side.checked_pow(n as u32).unwrap_or(u64::MAX);
    (0..total).filter_map(move |mut code| {
        let mut t = Vec::with_capacity(n);
        for _ in 0..n {
            // order 0, -1, 1, -2, 2, ...
            let k = (code % side) as i64;
            code /= side;
            t.push(if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 });
        }
        (t.iter().any(|x| x.abs() == r)).then_some(t)
    })
}
