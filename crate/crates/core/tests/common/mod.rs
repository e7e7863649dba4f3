//! Shared oracles and corpora for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use gaquot::{parse_with, Derivation, Monomial, Normalization, Poly, Rational, RepSpec, VarTable, VariablePolicy};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn poly(t: &VarTable, s: &str) -> Poly {
    parse_with(s, t, VariablePolicy::Strict).unwrap()
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rank of a dense rational matrix by plain Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Rational::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let m = rows[i][c].clone();
                for j in c..ncols {
                    let d = &rows[r][j] * &m;
                    rows[i][j] = &rows[i][j] - &d;
                }
            }
        }
        r += 1;
    }
    r
}

fn weight_of(weights: &[i64], m: &Monomial) -> i64 {
    m.exponents().iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum()
}

/// Whether `target` is `D(x)` for some polynomial `x`, decided by dense
/// elimination over every monomial of the right degree and weight. `D` must
/// be linear and raise weight by 2.
pub fn in_image_dense(d: &Derivation<Rational>, weights: &[i64], target: &Poly) -> bool {
    let t = d.vars();
    let mut pieces: BTreeMap<(u32, i64), Vec<(Monomial, Rational)>> = BTreeMap::new();
    for (m, c) in target.terms() {
        pieces.entry((m.degree(), weight_of(weights, m))).or_default().push((m.clone(), c.clone()));
    }
    pieces.into_iter().all(|((deg, w), terms)| {
        let unknowns: Vec<Monomial> = Monomial::all_of_degree(t.len(), deg)
            .into_iter()
            .filter(|m| weight_of(weights, m) == w - 2)
            .collect();
        let images: Vec<Poly> = unknowns
            .iter()
            .map(|m| d.apply(&Poly::monomial(t, m.clone(), Rational::one())).unwrap())
            .collect();
        let mut rows_of: BTreeMap<Monomial, usize> = BTreeMap::new();
        for p in &images {
            for (m, _) in p.terms() {
                let n = rows_of.len();
                rows_of.entry(m.clone()).or_insert(n);
            }
        }
        for (m, _) in &terms {
            let n = rows_of.len();
            rows_of.entry(m.clone()).or_insert(n);
        }
        let mut a = vec![vec![Rational::zero(); unknowns.len() + 1]; rows_of.len()];
        for (j, p) in images.iter().enumerate() {
            for (m, c) in p.terms() {
                a[rows_of[m]][j] = c.clone();
            }
        }
        let without = rank(a.clone());
        for (m, c) in &terms {
            a[rows_of[m]][unknowns.len()] = c.clone();
        }
        rank(a) == without
    })
}

/// Specs used for the randomized invariant corpus, all of dimension at most 8.
pub fn corpus_specs() -> Vec<RepSpec> {
    let s5 = Normalization::Binomial;
    let unit = Normalization::Unit;
    [
        (vec![1], s5),
        (vec![2], s5),
        (vec![1, 1], s5),
        (vec![3], s5),
        (vec![1, 1, 1], s5),
        (vec![1, 2], unit),
        (vec![1, 3], s5),
        (vec![4], unit),
        (vec![2, 2], s5),
        (vec![5], s5),
        (vec![1, 1, 3], unit),
        (vec![3, 3], s5),
        (vec![1, 5], s5),
    ]
    .into_iter()
    .map(|(k, n)| RepSpec::new(k, n).unwrap())
    .collect()
}

/// Kernel generators up to degree 2 together with the catalog invariants.
pub fn generators(spec: &RepSpec) -> Vec<Poly> {
    let mut gens = spec.derivation::<Rational>().graded_kernel_generators(2).unwrap();
    if let Ok(cat) = spec.catalog_invariants() {
        for (p, _) in cat {
            if !gens.contains(&p) {
                gens.push(p);
            }
        }
    }
    gens
}

/// A random invariant: a constant plus a few scaled products of
/// generators, of total degree at most `maxdeg`.
pub fn random_invariant<R: Rng>(rng: &mut R, spec: &RepSpec, gens: &[Poly], maxdeg: u32) -> Poly {
    let t = spec.table();
    let mut f = Poly::constant(t, int(rng.gen_range(-3..=3)));
    for _ in 0..rng.gen_range(1..=3) {
        let mut term = Poly::constant(t, Rational::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=3).into()));
        let mut deg = 0;
        for _ in 0..rng.gen_range(1..=3) {
            let g = gens.choose(rng).unwrap();
            let gd = g.total_degree().unwrap_or(0);
            if deg + gd <= maxdeg {
                term = &term * g;
                deg += gd;
            }
        }
        f = &f + &term;
    }
    f
}

