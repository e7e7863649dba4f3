//! Derivations of polynomial rings and the linear algebra around them:
//! application, exponential action, graded image and kernel computations,
//! restriction to graph subvarieties, and bounded slice search.

use std::collections::BTreeMap;
use std::fmt;


use crate::error::{Error, Result};
use crate::linalg::{reduced_basis, Echelon, SparseVec};
use crate::ratpoly::{Monomial, MultiPoly, VarTable};
use crate::scalar::Scalar;

/// Grading key of a monomial: degree in each variable block, and torus
/// weight when the derivation carries one.
pub type PieceKey = (Vec<u32>, i64);

/// A derivation, determined by its values on the variables.
#[derive(Clone)]
pub struct Derivation<C> {
    vars: VarTable,
    images: Vec<MultiPoly<C>>,
    graded_linear: bool,
    /// Variable blocks: connected components of "x occurs in the image of y".
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    weights: Option<Vec<i64>>,
    weight_shift: i64,
}

/// Outcome of an image-membership question with an exact witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ImageMembership<C: Scalar> {
    Preimage(MultiPoly<C>),
    NotInImage,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PowerInImage<C: Scalar> {
    /// `h^k = D(preimage)` with `k` minimal.
    Found { k: u32, preimage: MultiPoly<C> },
    /// No power up to the bound lies in the image.
    NoneUpTo(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SliceOutcome<C: Scalar> {
    Found(MultiPoly<C>),
    NoneUpTo(u32),
}

impl<C: Scalar> SliceOutcome<C> {
    pub fn slice(&self) -> Option<&MultiPoly<C>> {
        match self {
            SliceOutcome::Found(s) => Some(s),
            SliceOutcome::NoneUpTo(_) => None,
        }
    }
}

impl<C: Scalar> Derivation<C> {
    /// `images[i]` is the value on variable `i`.
    pub fn new(vars: &VarTable, images: Vec<MultiPoly<C>>) -> Result<Self> {
        if images.len() != vars.len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} images for {} variables",
                images.len(),
                vars.len()
            )));
        }
        for p in &images {
            if p.vars() != vars {
                return Err(Error::TableMismatch {
                    left: vars.names().join(", "),
                    right: p.vars().names().join(", "),
                });
            }
        }
        let graded_linear = images
            .iter()
            .all(|p| p.terms().all(|(m, _)| m.degree() == 1));

        // union-find over variables
        let n = vars.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], i: usize) -> usize {
            let mut r = i;
            while p[r] != r {
                r = p[r];
            }
            p[i] = r;
            r
        }
        for (i, img) in images.iter().enumerate() {
            for j in img.occurring_vars() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut block_of = vec![0; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut root_to_block = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            let b = *root_to_block.entry(r).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            block_of[i] = b;
            blocks[b].push(i);
        }
        Ok(Derivation {
            vars: vars.clone(),
            images,
            graded_linear,
            block_of,
            blocks,
            weights: None,
            weight_shift: 0,
        })
    }

    /// Attach a torus grading: variable `i` has weight `weights[i]` and the
    /// derivation shifts weight by `shift`. Checked on every image.
    pub fn with_weights(mut self, weights: Vec<i64>, shift: i64) -> Result<Self> {
        assert_eq!(weights.len(), self.vars.len(), "weight arity");
        for (i, img) in self.images.iter().enumerate() {
            for (m, _) in img.terms() {
                if monomial_weight(&weights, m) != weights[i] + shift {
                    return Err(Error::InvalidRepresentation(format!(
                        "image of `{}` is not of weight {}",
                        self.vars.name(i),
                        weights[i] + shift
                    )));
                }
            }
        }
        self.weights = Some(weights);
        self.weight_shift = shift;
        Ok(self)
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn images(&self) -> &[MultiPoly<C>] {
        &self.images
    }

    pub fn image_of(&self, name: &str) -> Option<&MultiPoly<C>> {
        self.vars.index_of(name).map(|i| &self.images[i])
    }

    /// Every image is a linear form, so total degree is preserved.
    pub fn is_graded_linear(&self) -> bool {
        self.graded_linear
    }

    pub fn weights(&self) -> Option<&[i64]> {
        self.weights.as_deref()
    }

    pub fn weight_shift(&self) -> i64 {
        self.weight_shift
    }

    fn check(&self, p: &MultiPoly<C>) -> Result<()> {
        if p.vars() == &self.vars {
            Ok(())
        } else {
            Err(Error::TableMismatch {
                left: self.vars.names().join(", "),
                right: p.vars().names().join(", "),
            })
        }
    }

    /// Leibniz extension to an arbitrary polynomial.
    pub fn apply(&self, p: &MultiPoly<C>) -> Result<MultiPoly<C>> {
        self.check(p)?;
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in p.terms() {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 || self.images[i].is_zero() {
                    continue;
                }
                let mut rest = m.exponents().to_vec();
                rest[i] -= 1;
                let coeff = c.clone() * C::from_int(e as i64);
                out.add_scaled_shifted(&coeff, &Monomial::from_exponents(rest), &self.images[i]);
            }
        }
        Ok(out)
    }

    pub fn apply_n(&self, p: &MultiPoly<C>, n: u32) -> Result<MultiPoly<C>> {
        let mut q = p.clone();
        for _ in 0..n {
            q = self.apply(&q)?;
        }
        Ok(q)
    }

    /// `sum_m t^m D^m(p) / m!` over the table extended by the fresh variable
    /// `t`. Fails if `D^m(p)` is still non-zero after `bound` steps.
    pub fn exp_action_bounded(&self, p: &MultiPoly<C>, t: &str, bound: usize) -> Result<MultiPoly<C>> {
        self.check(p)?;
        let ext = self.vars.extended([t])?;
        let tvar = MultiPoly::var(&ext, t)?;
        let mut out = MultiPoly::zero(&ext);
        let mut term = p.clone();
        let mut tpow = MultiPoly::one(&ext);
        let mut fact = C::one();
        for m in 0..=bound {
            if term.is_zero() {
                return Ok(out);
            }
            if m > 0 {
                fact = fact * C::from_int(m as i64);
                tpow = &tpow * &tvar;
            }
            let lifted = term.retable(&ext)?.scale(&(C::one() / fact.clone()));
            out = &out + &(&lifted * &tpow);
            term = self.apply(&term)?;
        }
        Err(Error::IterationBound(bound))
    }

    pub fn exp_action(&self, p: &MultiPoly<C>, t: &str) -> Result<MultiPoly<C>> {
        self.exp_action_bounded(p, t, 1024)
    }

    /// `[self, other]` evaluated on every variable.
    pub fn bracket_on_generators(&self, other: &Derivation<C>) -> Result<Vec<MultiPoly<C>>> {
        (0..self.vars.len())
            .map(|i| {
                let x = MultiPoly::var_at(&self.vars, i);
                Ok(&self.apply(&other.apply(&x)?)? - &other.apply(&self.apply(&x)?)?)
            })
            .collect()
    }

    fn piece_key(&self, m: &Monomial) -> PieceKey {
        let mut degs = vec![0u32; self.blocks.len()];
        for (i, &e) in m.exponents().iter().enumerate() {
            degs[self.block_of[i]] += e;
        }
        let w = self.weights.as_ref().map_or(0, |w| monomial_weight(w, m));
        (degs, w)
    }

    /// Monomials with the given block degrees and (if graded) weight.
    fn piece_monomials(&self, degs: &[u32], weight: i64) -> Vec<Monomial> {
        let n = self.vars.len();
        let mut acc: Vec<Vec<u32>> = vec![vec![0; n]];
        for (b, vars) in self.blocks.iter().enumerate() {
            let local = Monomial::all_of_degree(vars.len(), degs[b]);
            let mut next = Vec::with_capacity(acc.len() * local.len());
            for a in &acc {
                for l in &local {
                    let mut e = a.clone();
                    for (k, &v) in vars.iter().enumerate() {
                        e[v] = l.exponents()[k];
                    }
                    next.push(e);
                }
            }
            acc = next;
        }
        acc.into_iter()
            .map(Monomial::from_exponents)
            .filter(|m| self.weights.as_ref().is_none_or(|w| monomial_weight(w, m) == weight))
            .collect()
    }

    fn split_pieces(&self, p: &MultiPoly<C>) -> BTreeMap<PieceKey, SparseVec<Monomial, C>> {
        let mut out: BTreeMap<PieceKey, SparseVec<Monomial, C>> = BTreeMap::new();
        for (m, c) in p.terms() {
            out.entry(self.piece_key(m)).or_default().insert(m.clone(), c.clone());
        }
        out
    }

    fn image_vector(&self, m: &Monomial) -> SparseVec<Monomial, C> {
        let mono = MultiPoly::monomial(&self.vars, m.clone(), C::one());
        let img = self.apply(&mono).expect("same table");
        img.terms().map(|(k, c)| (k.clone(), c.clone())).collect()
    }

    /// Decide `p ∈ Im(D)` exactly, one graded piece at a time.
    pub fn graded_image_membership(&self, p: &MultiPoly<C>) -> Result<ImageMembership<C>> {
        self.check(p)?;
        if !self.graded_linear {
            return Err(Error::NotGradedLinear);
        }
        let mut pre = MultiPoly::zero(&self.vars);
        for ((degs, w), target) in self.split_pieces(p) {
            let domain = self.piece_monomials(&degs, w - self.weight_shift);
            let mut ech = Echelon::new();
            for m in &domain {
                ech.push(self.image_vector(m));
            }
            match ech.solve(target) {
                None => return Ok(ImageMembership::NotInImage),
                Some(x) => {
                    let part = MultiPoly::from_terms(
                        &self.vars,
                        x.into_iter().map(|(i, c)| (domain[i].clone(), c)),
                    );
                    pre = &pre + &part;
                }
            }
        }
        Ok(ImageMembership::Preimage(pre))
    }

    /// Smallest `k <= kmax` with `h^k ∈ Im(D)`, for an invariant `h`.
    pub fn power_in_image(&self, h: &MultiPoly<C>, kmax: u32) -> Result<PowerInImage<C>> {
        let dh = self.apply(h)?;
        if !dh.is_zero() {
            return Err(Error::NotInvariant(dh.to_string()));
        }
        let mut hk = MultiPoly::one(&self.vars);
        for k in 1..=kmax {
            hk = &hk * h;
            if let ImageMembership::Preimage(g) = self.graded_image_membership(&hk)? {
                return Ok(PowerInImage::Found { k, preimage: g });
            }
        }
        Ok(PowerInImage::NoneUpTo(kmax))
    }

    /// Kernel of `D` on one graded piece, as a reduced basis.
    fn kernel_of_piece(&self, degs: &[u32], w: i64) -> Vec<SparseVec<Monomial, C>> {
        let domain = self.piece_monomials(degs, w);
        let mut ech: Echelon<Monomial, C> = Echelon::new();
        for m in &domain {
            ech.push(self.image_vector(m));
        }
        let vecs: Vec<SparseVec<Monomial, C>> = ech
            .kernel()
            .iter()
            .map(|k| k.iter().map(|(i, c)| (domain[*i].clone(), c.clone())).collect())
            .collect();
        reduced_basis(&vecs)
    }

    /// Homogeneous kernel elements of degree `1..=maxdeg` which, with
    /// products of lower-degree members, span the kernel in every degree up
    /// to `maxdeg`. Each generator is scaled to coprime integer coefficients
    /// with positive leading coefficient; output is sorted by degree, then by
    /// leading monomial (descending).
    pub fn graded_kernel_generators(&self, maxdeg: u32) -> Result<Vec<MultiPoly<C>>> {
        if !self.graded_linear {
            return Err(Error::NotGradedLinear);
        }
        let mut gens: Vec<MultiPoly<C>> = Vec::new();
        for d in 1..=maxdeg {
            let mut keys: Vec<PieceKey> = Monomial::all_of_degree(self.vars.len(), d)
                .iter()
                .map(|m| self.piece_key(m))
                .collect();
            keys.sort();
            keys.dedup();

            let mut products: BTreeMap<PieceKey, Vec<SparseVec<Monomial, C>>> = BTreeMap::new();
            for prod in products_of_degree(&gens, d) {
                for (k, v) in self.split_pieces(&prod) {
                    products.entry(k).or_default().push(v);
                }
            }

            let mut fresh = Vec::new();
            for (degs, w) in keys {
                let kernel = self.kernel_of_piece(&degs, w);
                if kernel.is_empty() {
                    continue;
                }
                let mut ech: Echelon<Monomial, C> = Echelon::new();
                for v in products.remove(&(degs.clone(), w)).unwrap_or_default() {
                    ech.push(v);
                }
                for v in kernel {
                    if ech.push(v.clone()) {
                        fresh.push(MultiPoly::from_terms(&self.vars, v).primitive());
                    }
                }
            }
            fresh.sort_by(|a, b| b.leading_term().unwrap().0.cmp(a.leading_term().unwrap().0));
            gens.extend(fresh);
        }
        Ok(gens)
    }

    /// Restrict to a subvariety given as a graph `w_i = h_i(z)`, where every
    /// `z` variable is identified with some coordinate through `w_i = z`.
    /// The result acts on the `z` variables and intertwines substitution.
    pub fn restrict_to_graph(&self, graph: &BTreeMap<String, MultiPoly<C>>) -> Result<Derivation<C>> {
        let z = match graph.values().next() {
            Some(p) => p.vars().clone(),
            None => return Err(Error::MissingAssignment(self.vars.name(0).to_string())),
        };
        let mut images_w = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            let img = graph.get(name).ok_or_else(|| Error::MissingAssignment(name.clone()))?;
            if img.vars() != &z {
                return Err(Error::TableMismatch {
                    left: z.names().join(", "),
                    right: img.vars().names().join(", "),
                });
            }
            images_w.push(Some(img.clone()));
        }
        let mut ident: Vec<Option<usize>> = vec![None; z.len()];
        for (i, img) in images_w.iter().enumerate() {
            let img = img.as_ref().unwrap();
            if img.num_terms() == 1 {
                let (m, c) = img.leading_term().unwrap();
                if m.degree() == 1 && c.is_one() {
                    let j = m.exponents().iter().position(|&e| e == 1).unwrap();
                    if ident[j].is_none() {
                        ident[j] = Some(i);
                    }
                }
            }
        }
        let mut images_z = Vec::with_capacity(z.len());
        for (j, id) in ident.iter().enumerate() {
            let i = id.ok_or_else(|| Error::UnidentifiedGraphVariable(z.name(j).to_string()))?;
            images_z.push(self.images[i].substitute_indexed(&images_w, &z)?);
        }
        let restricted = Derivation::new(&z, images_z)?;
        for (i, img) in images_w.iter().enumerate() {
            let lhs = restricted.apply(img.as_ref().unwrap())?;
            let rhs = self.images[i].substitute_indexed(&images_w, &z)?;
            if lhs != rhs {
                return Err(Error::InconsistentGraph(self.vars.name(i).to_string()));
            }
        }
        Ok(restricted)
    }

    /// Search for `s` with `D(s) = 1` among polynomials of degree at most
    /// `deg_bound`. Degrees are added one at a time, so a returned slice has
    /// the smallest possible degree.
    pub fn slice_search(&self, deg_bound: u32) -> SliceOutcome<C> {
        let mut domain: Vec<Monomial> = Vec::new();
        let mut ech: Echelon<Monomial, C> = Echelon::new();
        let mut one = SparseVec::new();
        one.insert(Monomial::one(self.vars.len()), C::one());
        for d in 0..=deg_bound {
            for m in Monomial::all_of_degree(self.vars.len(), d) {
                ech.push(self.image_vector(&m));
                domain.push(m);
            }
            if let Some(x) = ech.solve(one.clone()) {
                return SliceOutcome::Found(MultiPoly::from_terms(
                    &self.vars,
                    x.into_iter().map(|(i, c)| (domain[i].clone(), c)),
                ));
            }
        }
        SliceOutcome::NoneUpTo(deg_bound)
    }
}

pub(crate) fn monomial_weight(weights: &[i64], m: &Monomial) -> i64 {
    m.exponents()
        .iter()
        .zip(weights)
        .map(|(&e, &w)| e as i64 * w)
        .sum()
}

/// All products of at least two of `gens` (with repetition) of total degree `d`.
fn products_of_degree<C: Scalar>(gens: &[MultiPoly<C>], d: u32) -> Vec<MultiPoly<C>> {
    fn rec<C: Scalar>(
        gens: &[MultiPoly<C>],
        start: usize,
        left: u32,
        count: usize,
        acc: &MultiPoly<C>,
        out: &mut Vec<MultiPoly<C>>,
    ) {
        if left == 0 {
            if count >= 2 {
                out.push(acc.clone());
            }
            return;
        }
        for i in start..gens.len() {
            let gd = gens[i].total_degree().unwrap_or(0);
            if gd == 0 || gd > left {
                continue;
            }
            rec(gens, i, left - gd, count + 1, &(acc * &gens[i]), out);
        }
    }
    let mut out = Vec::new();
    if let Some(g) = gens.first() {
        rec(gens, 0, d, 0, &MultiPoly::one(g.vars()), &mut out);
    }
    out
}

impl<C: Scalar> fmt::Display for Derivation<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, img) in self.images.iter().enumerate() {
            if img.is_zero() {
                continue;
            }
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "D({}) = {}", self.vars.name(i), img)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for Derivation<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Derivation[{self}]")
    }
}

impl<C: Scalar> PartialEq for Derivation<C> {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.images == other.images
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{parse_with, VariablePolicy};
    use crate::sl2rep::{Normalization, RepSpec};
    use crate::{Poly, Rational};

    fn poly(t: &VarTable, s: &str) -> Poly {
        parse_with(s, t, VariablePolicy::Strict).unwrap()
    }

    fn sym(ks: &[u32]) -> (RepSpec, Derivation<Rational>) {
        let spec = RepSpec::new(ks.to_vec(), Normalization::Binomial).unwrap();
        let d = spec.derivation();
        (spec, d)
    }

    #[test]
    fn leibniz_on_sym2() {
        let (spec, d) = sym(&[2]);
        let t = spec.table();
        assert_eq!(d.apply(&poly(t, "w2^2")).unwrap(), poly(t, "2*w1*w2"));
        assert!(d.apply(&poly(t, "w0")).unwrap().is_zero());
        assert!(d.apply(&poly(t, "w1^2 - 4*w0*w2")).unwrap().is_zero());
    }

    #[test]
    fn exponential_action() {
        let (spec, d) = sym(&[2]);
        let t = spec.table();
        let ext = t.extended(["t"]).unwrap();
        assert_eq!(d.exp_action(&poly(t, "w2"), "t").unwrap(), poly(&ext, "w2 + t*w1 + t^2*w0"));
        assert_eq!(d.exp_action(&poly(t, "w0"), "t").unwrap(), poly(&ext, "w0"));
        let disc = poly(t, "w1^2 - 4*w0*w2");
        assert_eq!(d.exp_action(&disc, "t").unwrap(), disc.retable(&ext).unwrap());
    }

    #[test]
    fn exp_action_flags_non_nilpotent_input() {
        let t = VarTable::new(["x"]).unwrap();
        let d = Derivation::new(&t, vec![poly(&t, "x")]).unwrap();
        assert_eq!(d.exp_action_bounded(&poly(&t, "x"), "t", 10), Err(Error::IterationBound(10)));
    }

    #[test]
    fn image_membership_examples() {
        let (spec, d) = sym(&[1]);
        let t = spec.table();
        assert_eq!(
            d.graded_image_membership(&poly(t, "w0")).unwrap(),
            ImageMembership::Preimage(poly(t, "w1"))
        );
        assert_eq!(d.graded_image_membership(&poly(t, "1")).unwrap(), ImageMembership::NotInImage);
        assert_eq!(
            d.graded_image_membership(&poly(t, "w0^2")).unwrap(),
            ImageMembership::Preimage(poly(t, "w0*w1"))
        );
    }

    #[test]
    fn power_in_image_examples() {
        let (spec, d) = sym(&[1]);
        let t = spec.table();
        assert_eq!(
            d.power_in_image(&poly(t, "w0"), 3).unwrap(),
            PowerInImage::Found { k: 1, preimage: poly(t, "w1") }
        );
        assert_eq!(d.power_in_image(&poly(t, "1"), 2).unwrap(), PowerInImage::NoneUpTo(2));
        let (spec, d) = sym(&[1, 1]);
        let t = spec.table();
        assert_eq!(
            d.power_in_image(&poly(t, "w0*w3 - w1*w2"), 3).unwrap(),
            PowerInImage::NoneUpTo(3)
        );
        assert!(matches!(d.power_in_image(&poly(t, "w1"), 1), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn kernel_generators() {
        let (spec, d) = sym(&[1]);
        let t = spec.table();
        assert_eq!(d.graded_kernel_generators(2).unwrap(), vec![poly(t, "w0")]);

        let (spec, d) = sym(&[1, 1]);
        let t = spec.table();
        assert_eq!(
            d.graded_kernel_generators(2).unwrap(),
            vec![poly(t, "w0"), poly(t, "w2"), poly(t, "w0*w3 - w1*w2")]
        );
    }

    #[test]
    fn sym3_kernel_has_covariant_and_discriminant() {
        let (spec, d) = sym(&[3]);
        let t = spec.table();
        let g = d.graded_kernel_generators(4).unwrap();
        assert_eq!(g[0], poly(t, "w0"));
        assert_eq!(g[1], poly(t, "3*w0*w2 - w1^2"));
        assert_eq!(g.len(), 4);
        for p in &g {
            assert!(d.apply(p).unwrap().is_zero());
        }
    }

    #[test]
    fn graph_restrictions() {
        let (spec, d) = sym(&[1, 1, 1]);
        let z = VarTable::new(["z1", "z2", "z3", "z4", "z5"]).unwrap();
        let mut graph = BTreeMap::new();
        graph.insert("w0".to_string(), poly(&z, "1 + z2*z5 - z3*z4"));
        for i in 1..6 {
            graph.insert(format!("w{i}"), poly(&z, &format!("z{i}")));
        }
        let dx = d.restrict_to_graph(&graph).unwrap();
        assert_eq!(dx.image_of("z1").unwrap(), &poly(&z, "1 + z2*z5 - z3*z4"));
        assert_eq!(dx.image_of("z3").unwrap(), &poly(&z, "z2"));
        assert!(!dx.is_graded_linear());

        let t = spec.table();
        let ident: BTreeMap<_, _> =
            t.names().iter().map(|n| (n.clone(), poly(t, n))).collect();
        assert_eq!(d.restrict_to_graph(&ident).unwrap(), d);

        graph.insert("w0".to_string(), poly(&z, "1 + z2*z5"));
        assert_eq!(d.restrict_to_graph(&graph), Err(Error::InconsistentGraph("w0".into())));
    }

    #[test]
    fn slice_search_examples() {
        let (_, d) = sym(&[1]);
        let z = VarTable::new(["z1"]).unwrap();
        let mut graph = BTreeMap::new();
        graph.insert("w0".to_string(), poly(&z, "1"));
        graph.insert("w1".to_string(), poly(&z, "z1"));
        let dx = d.restrict_to_graph(&graph).unwrap();
        assert_eq!(dx.slice_search(1), SliceOutcome::Found(poly(&z, "z1")));
        assert_eq!(d.slice_search(2), SliceOutcome::NoneUpTo(2));
    }
}
