//! Linear representations `W = ⊕ Sym^k V` of SL2 in a weight basis, the
//! derivation of the upper unipotent subgroup, the full sl2 triple, the
//! substitution action of group elements, and catalogs of invariants.
//!
//! Coordinate `i` of a `Sym^k` summand has torus weight `k - 2i` and is
//! identified with `λ_i · X^(k-i) Y^i`, where `λ_i = C(k, i)` for
//! [`Normalization::Binomial`] and `λ_i = 1/i!` for [`Normalization::Unit`].
//! With those choices the derivation reads
//!
//! ```text
//! Binomial:  D(w_{i+1}) = (k - i) w_i
//! Unit:      D(w_{i+1}) = w_i
//! ```
//!
//! and D raises weight by 2.

use std::collections::BTreeMap;
use std::ops::Range;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::ratpoly::{Monomial, MultiPoly, VarTable};
use crate::scalar::{binomial, factorial, Scalar};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    /// `D(w_{i+1}) = (k - i) w_i`.
    #[serde(alias = "section5")]
    Binomial,
    /// `D(w_{i+1}) = w_i`.
    Unit,
}

/// One entry of a serialized representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Block {
    /// A single `Sym^k V`.
    Sym(u32),
    /// `count` copies of `V`.
    Vblock(u32),
}

/// A direct sum of symmetric powers with named weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSpec {
    summands: Vec<u32>,
    normalization: Normalization,
    table: VarTable,
    weights: Vec<i64>,
    offsets: Vec<usize>,
}

impl RepSpec {
    /// Coordinates named `w0, w1, ...` in summand order.
    pub fn new(summands: Vec<u32>, normalization: Normalization) -> Result<Self> {
        let n: u32 = summands.iter().map(|k| k + 1).sum();
        let names = (0..n).map(|i| format!("w{i}"));
        Self::with_names(summands, normalization, names)
    }

    pub fn with_names<I, S>(summands: Vec<u32>, normalization: Normalization, names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        if summands.is_empty() {
            return Err(Error::InvalidRepresentation("no summands".into()));
        }
        let table = VarTable::new(names)?;
        let n: usize = summands.iter().map(|&k| k as usize + 1).sum();
        if table.len() != n {
            return Err(Error::InvalidRepresentation(format!(
                "{} names for {n} coordinates",
                table.len()
            )));
        }
        let mut weights = Vec::with_capacity(n);
        let mut offsets = Vec::with_capacity(summands.len());
        for &k in &summands {
            offsets.push(weights.len());
            weights.extend((0..=k).map(|i| k as i64 - 2 * i as i64));
        }
        let spec = RepSpec { summands, normalization, table, weights, offsets };
        spec.check_substitution_matches_derivation()?;
        Ok(spec)
    }

    pub fn from_blocks(blocks: &[Block], normalization: Normalization) -> Result<Self> {
        let mut summands = Vec::new();
        for b in blocks {
            match *b {
                Block::Sym(k) => summands.push(k),
                Block::Vblock(c) => summands.extend(std::iter::repeat_n(1, c as usize)),
            }
        }
        Self::new(summands, normalization)
    }

    pub fn summands(&self) -> &[u32] {
        &self.summands
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn table(&self) -> &VarTable {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.table.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Coordinate indices of summand `j`.
    pub fn summand_range(&self, j: usize) -> Range<usize> {
        let start = self.offsets[j];
        start..start + self.summands[j] as usize + 1
    }

    /// Index of the coordinate with inner index `i` in summand `j`.
    pub fn coordinate(&self, j: usize, i: usize) -> usize {
        assert!(i <= self.summands[j] as usize, "inner index out of range");
        self.offsets[j] + i
    }

    /// `(summand, inner index)` of a coordinate.
    pub fn locate(&self, coord: usize) -> (usize, usize) {
        let j = self.offsets.partition_point(|&o| o <= coord) - 1;
        (j, coord - self.offsets[j])
    }

    /// Basis scale `λ_i` of inner index `i` in a `Sym^k` summand.
    pub fn basis_scale<C: Scalar>(&self, k: u32, i: u32) -> C {
        match self.normalization {
            Normalization::Binomial => binomial(k, i),
            Normalization::Unit => C::one() / factorial::<C>(i),
        }
    }

    /// The same representation with a copy of `V` in front, coordinates
    /// `u` (weight 1) and `v` (weight -1) followed by this spec's names.
    pub fn with_plane(&self, u: &str, v: &str) -> Result<RepSpec> {
        let mut summands = vec![1];
        summands.extend(&self.summands);
        let names = [u.to_string(), v.to_string()]
            .into_iter()
            .chain(self.table.names().iter().cloned());
        RepSpec::with_names(summands, self.normalization, names)
    }

    /// The derivation `D`, with its torus grading attached.
    pub fn derivation<C: Scalar>(&self) -> Derivation<C> {
        let t = &self.table;
        let mut images = vec![MultiPoly::zero(t); t.len()];
        for (j, &k) in self.summands.iter().enumerate() {
            for i in 0..k {
                let c = match self.normalization {
                    Normalization::Binomial => C::from_int((k - i) as i64),
                    Normalization::Unit => C::one(),
                };
                images[self.coordinate(j, i as usize + 1)] =
                    MultiPoly::var_at(t, self.coordinate(j, i as usize)).scale(&c);
            }
        }
        Derivation::new(t, images)
            .and_then(|d| d.with_weights(self.weights.clone(), 2))
            .expect("derivation matches its own table and grading")
    }

    /// Multiplication of each coordinate by its weight.
    pub fn weight_operator<C: Scalar>(&self) -> Derivation<C> {
        let t = &self.table;
        let images = (0..t.len())
            .map(|i| MultiPoly::var_at(t, i).scale(&C::from_int(self.weights[i])))
            .collect();
        Derivation::new(t, images).expect("diagonal operator")
    }

    /// Complete `D` to an sl2 triple. The partner `f` is solved from
    /// `[h, f] = -2f` and `[e, f] = h`; all three relations are then checked.
    pub fn sl2_triple<C: Scalar>(&self) -> Result<Sl2Triple<C>> {
        let e = self.derivation::<C>();
        let h = self.weight_operator::<C>();
        let t = &self.table;
        let n = t.len();

        // linear coefficients of D: d[i] = [(m, c)] with D(w_i) = sum c w_m
        let lin = |p: &MultiPoly<C>| -> Vec<(usize, C)> {
            p.terms()
                .map(|(m, c)| (m.exponents().iter().position(|&x| x == 1).unwrap(), c.clone()))
                .collect()
        };
        let d: Vec<Vec<(usize, C)>> = e.images().iter().map(lin).collect();

        // unknown r_(j,l): coefficient of w_l in f(w_j), only for weight drop 2
        let unknowns: Vec<(usize, usize)> = (0..n)
            .flat_map(|j| (0..n).map(move |l| (j, l)))
            .filter(|&(j, l)| self.weights[l] == self.weights[j] - 2)
            .collect();
        // equation (i, p): coefficient of w_p in e(f(w_i)) - f(e(w_i))
        let mut ech: Echelon<(usize, usize), C> = Echelon::new();
        for &(j, l) in &unknowns {
            let mut col: SparseVec<(usize, usize), C> = SparseVec::new();
            for (p, c) in &d[l] {
                let x = col.entry((j, *p)).or_insert_with(C::zero);
                *x = x.clone() + c.clone();
            }
            for (i, di) in d.iter().enumerate() {
                for (m, c) in di {
                    if *m == j {
                        let x = col.entry((i, l)).or_insert_with(C::zero);
                        *x = x.clone() - c.clone();
                    }
                }
            }
            col.retain(|_, c| !c.is_zero());
            ech.push(col);
        }
        if !ech.kernel().is_empty() {
            return Err(Error::InternalInconsistency(
                "the sl2 partner of D is not unique".into(),
            ));
        }
        let target: SparseVec<(usize, usize), C> = (0..n)
            .filter(|&i| self.weights[i] != 0)
            .map(|i| ((i, i), C::from_int(self.weights[i])))
            .collect();
        let sol = ech.solve(target).ok_or_else(|| Error::BracketViolation {
            relation: "[e,f] = h".into(),
            generator: "(no solution)".into(),
        })?;
        let mut images = vec![MultiPoly::zero(t); n];
        for (idx, c) in sol {
            let (j, l) = unknowns[idx];
            images[j] = &images[j] + &MultiPoly::var_at(t, l).scale(&c);
        }
        let f = Derivation::new(t, images)?.with_weights(self.weights.clone(), -2)?;
        let triple = Sl2Triple { e, f, h };
        triple.verify()?;
        Ok(triple)
    }

    /// Substitution action of a group element on the coordinates. The image
    /// of coordinate `w_i` of a `Sym^k` summand is `images[i] / den^k`.
    pub fn group_substitution<C: Scalar>(&self, m: &GroupMatrix<C>) -> Result<Substitution<C>> {
        let target = m.vars().extended(self.table.names().iter().cloned())?;
        let lift = |p: &MultiPoly<C>| p.retable(&target).expect("matrix table is a prefix");
        let [[a, b], [c, d]] = m.entries.clone().map(|row| row.map(|x| lift(&x)));
        let mut images = Vec::with_capacity(self.dim());
        let mut den_powers = Vec::with_capacity(self.dim());
        for (j, &k) in self.summands.iter().enumerate() {
            for i in 0..=k {
                // coefficients of (aX + bY)^(k-i) (cX + dY)^i by Y-degree
                let mut coef = vec![MultiPoly::one(&target)];
                let factors = std::iter::repeat_n((&a, &b), (k - i) as usize)
                    .chain(std::iter::repeat_n((&c, &d), i as usize));
                for (x, y) in factors {
                    let mut next = vec![MultiPoly::zero(&target); coef.len() + 1];
                    for (s, p) in coef.iter().enumerate() {
                        next[s] = &next[s] + &(p * x);
                        next[s + 1] = &next[s + 1] + &(p * y);
                    }
                    coef = next;
                }
                let li: C = self.basis_scale(k, i);
                let mut img = MultiPoly::zero(&target);
                for (s, p) in coef.iter().enumerate() {
                    let ls: C = self.basis_scale(k, s as u32);
                    let w = MultiPoly::var_at(&target, m.vars().len() + self.coordinate(j, s));
                    img = &img + &(p * &w).scale(&(li.clone() / ls));
                }
                images.push(img);
                den_powers.push(k);
            }
        }
        Ok(Substitution {
            source: self.table.clone(),
            target: target.clone(),
            images,
            den_powers,
            denominator: lift(&m.denominator),
        })
    }

    /// Coordinates of strictly positive weight.
    pub fn nonstable_coordinates(&self) -> Vec<String> {
        (0..self.dim())
            .filter(|&i| self.weights[i] > 0)
            .map(|i| self.table.name(i).to_string())
            .collect()
    }

    /// Known SL2-invariants: the `V`-pair minors and the discriminants of
    /// odd binary forms of degree 3 and 5. Each is paired with a flag saying
    /// every invariant of its kind is stable; each is checked against the
    /// full triple.
    pub fn catalog_invariants(&self) -> Result<Vec<(MultiPoly<Rational>, bool)>> {
        let t = &self.table;
        let mut out = Vec::new();
        let vs: Vec<usize> = (0..self.summands.len()).filter(|&j| self.summands[j] == 1).collect();
        for (a, &i) in vs.iter().enumerate() {
            for &j in &vs[a + 1..] {
                let x = |s: usize, r: usize| MultiPoly::var_at(t, self.coordinate(s, r));
                out.push((&(&x(i, 0) * &x(j, 1)) - &(&x(i, 1) * &x(j, 0)), true));
            }
        }
        for (j, &k) in self.summands.iter().enumerate() {
            if k == 3 || k == 5 {
                out.push((self.discriminant(j)?, true));
            }
        }
        if out.is_empty() {
            return Err(Error::UnsupportedBlock(format!("summands {:?}", self.summands)));
        }
        let triple = self.sl2_triple::<Rational>()?;
        for (p, _) in &out {
            if !triple.annihilates(p)? {
                return Err(Error::InternalInconsistency(format!(
                    "catalog polynomial {p} is not sl2-invariant"
                )));
            }
        }
        Ok(out)
    }

    /// Discriminant of the binary form carried by summand `j`, with coprime
    /// integer coefficients.
    pub fn discriminant(&self, j: usize) -> Result<MultiPoly<Rational>> {
        let k = self.summands[j];
        if k < 2 {
            return Err(Error::UnsupportedBlock(format!("discriminant of Sym^{k}")));
        }
        let t = &self.table;
        // P(x) = sum c_i x^(k-i), c_i the coefficient of X^(k-i) Y^i
        let c: Vec<MultiPoly<Rational>> = (0..=k)
            .map(|i| {
                let s = binomial::<Rational>(k, i) / self.basis_scale::<Rational>(k, i);
                MultiPoly::var_at(t, self.coordinate(j, i as usize)).scale(&s)
            })
            .collect();
        let dp: Vec<MultiPoly<Rational>> = (0..k)
            .map(|i| c[i as usize].scale(&Rational::from_int((k - i) as i64)))
            .collect();
        let res = sylvester_resultant(&c, &dp, t);
        let sign = if (k * (k - 1) / 2).is_multiple_of(2) { 1 } else { -1 };
        let disc = res.exact_divide(&c[0])?.scale(&Rational::from_int(sign));
        // content removed, sign kept
        let s = crate::scalar::primitive_scale(disc.terms().map(|(_, c)| c));
        Ok(disc.scale(&s))
    }

    /// Check that differentiating the substitution of `[[1,0],[t,1]]` at
    /// `t = 0` reproduces `D`.
    fn check_substitution_matches_derivation(&self) -> Result<()> {
        let tt = VarTable::new(["t"])?;
        let one = MultiPoly::<Rational>::one(&tt);
        let tv = MultiPoly::var_at(&tt, 0);
        let m = GroupMatrix::new([[one.clone(), MultiPoly::zero(&tt)], [tv, one.clone()]], one)?;
        let sub = self.group_substitution(&m)?;
        let d = self.derivation::<Rational>();
        for (i, img) in sub.images.iter().enumerate() {
            let tangent = img.partial(0).specialize(&[(0, Rational::zero())]);
            let expected = d.images()[i].retable(&sub.target)?;
            if tangent != expected {
                return Err(Error::InternalInconsistency(format!(
                    "group action and derivation disagree on `{}`",
                    self.table.name(i)
                )));
            }
        }
        Ok(())
    }
}

impl Serialize for RepSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RepSpec", 4)?;
        st.serialize_field("summands", &self.summands)?;
        st.serialize_field("coordinates", self.table.names())?;
        st.serialize_field("normalization", &self.normalization)?;
        st.serialize_field("weights", &self.weights)?;
        st.end()
    }
}

/// Resultant of two univariate polynomials with polynomial coefficients,
/// given from the leading coefficient down.
fn sylvester_resultant(
    p: &[MultiPoly<Rational>],
    q: &[MultiPoly<Rational>],
    t: &VarTable,
) -> MultiPoly<Rational> {
    let (m, n) = (p.len() - 1, q.len() - 1);
    let size = m + n;
    let zero = MultiPoly::zero(t);
    let mut rows: Vec<Vec<MultiPoly<Rational>>> = Vec::with_capacity(size);
    for r in 0..n {
        let mut row = vec![zero.clone(); size];
        for (i, c) in p.iter().enumerate() {
            row[r + i] = c.clone();
        }
        rows.push(row);
    }
    for r in 0..m {
        let mut row = vec![zero.clone(); size];
        for (i, c) in q.iter().enumerate() {
            row[r + i] = c.clone();
        }
        rows.push(row);
    }
    let mut memo = BTreeMap::new();
    laplace(&rows, 0, &mut memo, t)
}

/// Determinant of the rows below `used.count_ones()` restricted to the
/// columns not in `used`, by first-row expansion.
fn laplace(
    rows: &[Vec<MultiPoly<Rational>>],
    used: u64,
    memo: &mut BTreeMap<u64, MultiPoly<Rational>>,
    t: &VarTable,
) -> MultiPoly<Rational> {
    let r = used.count_ones() as usize;
    if r == rows.len() {
        return MultiPoly::one(t);
    }
    if let Some(v) = memo.get(&used) {
        return v.clone();
    }
    let mut acc = MultiPoly::zero(t);
    let mut free_before = 0;
    for col in 0..rows.len() {
        if used & (1 << col) != 0 {
            continue;
        }
        let entry = &rows[r][col];
        if !entry.is_zero() {
            let minor = laplace(rows, used | (1 << col), memo, t);
            let term = entry * &minor;
            acc = if free_before % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        free_before += 1;
    }
    memo.insert(used, acc.clone());
    acc
}

/// The sl2 triple acting on a representation. `e` is the derivation `D`
/// and raises weight by 2; `h` multiplies each coordinate by its weight.
#[derive(Clone, Debug)]
pub struct Sl2Triple<C: Scalar> {
    pub e: Derivation<C>,
    pub f: Derivation<C>,
    pub h: Derivation<C>,
}

impl<C: Scalar> Sl2Triple<C> {
    /// Check `[h,e] = 2e`, `[h,f] = -2f` and `[e,f] = h` on every generator.
    pub fn verify(&self) -> Result<()> {
        let t = self.e.vars();
        let two = C::from_int(2);
        let checks: [(&str, Vec<MultiPoly<C>>, Vec<MultiPoly<C>>); 3] = [
            (
                "[h,e] = 2e",
                self.h.bracket_on_generators(&self.e)?,
                self.e.images().iter().map(|p| p.scale(&two)).collect(),
            ),
            (
                "[h,f] = -2f",
                self.h.bracket_on_generators(&self.f)?,
                self.f.images().iter().map(|p| p.scale(&-two.clone())).collect(),
            ),
            ("[e,f] = h", self.e.bracket_on_generators(&self.f)?, self.h.images().to_vec()),
        ];
        for (relation, lhs, rhs) in checks {
            for i in 0..t.len() {
                if lhs[i] != rhs[i] {
                    return Err(Error::BracketViolation {
                        relation: relation.into(),
                        generator: t.name(i).into(),
                    });
                }
            }
        }
        Ok(())
    }

    /// All three operators kill `p`.
    pub fn annihilates(&self, p: &MultiPoly<C>) -> Result<bool> {
        for op in [&self.e, &self.f, &self.h] {
            if !op.apply(p)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A matrix `entries / den` of determinant one, with polynomial entries and
/// a polynomial denominator (usually a power of one variable).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMatrix<C: Scalar> {
    entries: [[MultiPoly<C>; 2]; 2],
    denominator: MultiPoly<C>,
}

impl<C: Scalar> GroupMatrix<C> {
    pub fn new(entries: [[MultiPoly<C>; 2]; 2], denominator: MultiPoly<C>) -> Result<Self> {
        let t = denominator.vars();
        for p in entries.iter().flatten() {
            if p.vars() != t {
                return Err(Error::TableMismatch {
                    left: t.names().join(", "),
                    right: p.vars().names().join(", "),
                });
            }
        }
        let [[a, b], [c, d]] = &entries;
        if &(a * d) - &(b * c) != &denominator * &denominator {
            return Err(Error::DeterminantNotOne);
        }
        Ok(GroupMatrix { entries, denominator })
    }

    /// Matrix with scalar entries over `vars`.
    pub fn scalar(vars: &VarTable, m: [[C; 2]; 2]) -> Result<Self> {
        let entries = m.map(|row| row.map(|x| MultiPoly::constant(vars, x)));
        Self::new(entries, MultiPoly::one(vars))
    }

    pub fn vars(&self) -> &VarTable {
        self.denominator.vars()
    }

    pub fn entries(&self) -> &[[MultiPoly<C>; 2]; 2] {
        &self.entries
    }

    pub fn denominator(&self) -> &MultiPoly<C> {
        &self.denominator
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (x, y) = (&self.entries, &other.entries);
        let e = |i: usize, j: usize| -> Result<MultiPoly<C>> {
            x[i][0].checked_mul(&y[0][j])?.checked_add(&x[i][1].checked_mul(&y[1][j])?)
        };
        Self::new(
            [[e(0, 0)?, e(0, 1)?], [e(1, 0)?, e(1, 1)?]],
            self.denominator.checked_mul(&other.denominator)?,
        )
    }
}

/// Images of the coordinates under a group element, over the matrix
/// variables followed by the coordinates.
#[derive(Clone, Debug)]
pub struct Substitution<C: Scalar> {
    source: VarTable,
    target: VarTable,
    images: Vec<MultiPoly<C>>,
    den_powers: Vec<u32>,
    denominator: MultiPoly<C>,
}

impl<C: Scalar> Substitution<C> {
    pub fn target(&self) -> &VarTable {
        &self.target
    }

    /// Numerator of the image of coordinate `i`; its denominator is
    /// `denominator^k` for the summand degree `k`.
    pub fn image(&self, i: usize) -> (&MultiPoly<C>, u32) {
        (&self.images[i], self.den_powers[i])
    }

    pub fn denominator(&self) -> &MultiPoly<C> {
        &self.denominator
    }

    /// `f` after substitution as `numerator / denominator^n`.
    pub fn apply(&self, f: &MultiPoly<C>) -> Result<(MultiPoly<C>, u32)> {
        if f.vars() != &self.source {
            return Err(Error::TableMismatch {
                left: self.source.names().join(", "),
                right: f.vars().names().join(", "),
            });
        }
        let weight = |m: &Monomial| -> u32 {
            m.exponents().iter().zip(&self.den_powers).map(|(e, k)| e * k).sum()
        };
        let n = f.terms().map(|(m, _)| weight(m)).max().unwrap_or(0);
        let images: Vec<Option<MultiPoly<C>>> = self.images.iter().cloned().map(Some).collect();
        let mut num = MultiPoly::zero(&self.target);
        let mut den_pows = vec![MultiPoly::one(&self.target)];
        for (m, c) in f.terms() {
            let term = MultiPoly::monomial(f.vars(), m.clone(), c.clone())
                .substitute_indexed(&images, &self.target)?;
            let pad = (n - weight(m)) as usize;
            while den_pows.len() <= pad {
                let next = den_pows.last().unwrap() * &self.denominator;
                den_pows.push(next);
            }
            num = &num + &(&term * &den_pows[pad]);
        }
        Ok((num, n))
    }

    /// `f` after substitution, when the denominators cancel.
    pub fn apply_exact(&self, f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
        let (num, n) = self.apply(f)?;
        num.exact_divide(&self.denominator.pow(n))
    }

    /// Plain substitution for integral matrices, back over the coordinate
    /// table when the matrix has no variables.
    pub fn apply_polynomial(&self, f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
        let p = self.apply_exact(f)?;
        if self.target.len() == self.source.len() {
            p.retable(&self.source)
        } else {
            Ok(p)
        }
    }
}
