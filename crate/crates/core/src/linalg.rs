//! Exact sparse linear algebra.
//!
//! Vectors are sparse maps from an ordered key type to exact scalars. The
//! [`Echelon`] accumulator takes columns one at a time and keeps them in
//! triangular form (distinct leading keys), recording for every stored vector
//! the combination of input columns that produced it. That single structure
//! answers span membership with an explicit preimage, and yields a nullspace
//! basis from the columns that reduced to zero.

use std::collections::BTreeMap;


use crate::scalar::Scalar;

pub type SparseVec<K, C> = BTreeMap<K, C>;

/// `acc += c * v`, dropping zeros.
pub fn axpy<K: Ord + Clone, C: Scalar>(acc: &mut SparseVec<K, C>, c: &C, v: &SparseVec<K, C>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in v {
        let s = acc.get(k).cloned().unwrap_or_else(C::zero) + c.clone() * x.clone();
        if s.is_zero() {
            acc.remove(k);
        } else {
            acc.insert(k.clone(), s);
        }
    }
}

#[derive(Clone, Debug)]
struct Pivot<K, C> {
    vector: SparseVec<K, C>,
    combo: SparseVec<usize, C>,
}

/// Incremental column echelon form.
#[derive(Clone, Debug)]
pub struct Echelon<K, C> {
    pivots: BTreeMap<K, Pivot<K, C>>,
    kernel: Vec<SparseVec<usize, C>>,
    columns: usize,
}

impl<K: Ord + Clone, C: Scalar> Default for Echelon<K, C> {
    fn default() -> Self {
        Echelon { pivots: BTreeMap::new(), kernel: Vec::new(), columns: 0 }
    }
}

impl<K: Ord + Clone, C: Scalar> Echelon<K, C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    /// Nullspace basis, as combinations of column indices.
    pub fn kernel(&self) -> &[SparseVec<usize, C>] {
        &self.kernel
    }

    /// Eliminate leading keys while a pivot exists for them. Returns the
    /// residual and the combination `x` with `v = sum x_i col_i + residual`.
    fn reduce(&self, mut v: SparseVec<K, C>) -> (SparseVec<K, C>, SparseVec<usize, C>) {
        let mut combo = SparseVec::new();
        while let Some((lead, c)) = v.iter().next_back() {
            let Some(p) = self.pivots.get(lead) else { break };
            let c = c.clone();
            axpy(&mut v, &-c.clone(), &p.vector);
            axpy(&mut combo, &c, &p.combo);
        }
        (v, combo)
    }

    /// Append a column. Returns `true` when it raised the rank.
    pub fn push(&mut self, col: SparseVec<K, C>) -> bool {
        let id = self.columns;
        self.columns += 1;
        let (res, combo) = self.reduce(col);
        // residual = col - sum combo_i col_i
        let mut own = SparseVec::new();
        own.insert(id, C::one());
        axpy(&mut own, &-C::one(), &combo);
        match res.iter().next_back() {
            None => {
                self.kernel.push(own);
                false
            }
            Some((lead, lc)) => {
                let inv = C::one() / lc.clone();
                let lead = lead.clone();
                let vector = res.into_iter().map(|(k, x)| (k, x * inv.clone())).collect();
                let combo = own.into_iter().map(|(k, x)| (k, x * inv.clone())).collect();
                self.pivots.insert(lead, Pivot { vector, combo });
                true
            }
        }
    }

    /// Coefficients `x` with `sum x_i col_i = v`, if `v` is in the span.
    pub fn solve(&self, v: SparseVec<K, C>) -> Option<SparseVec<usize, C>> {
        let (res, combo) = self.reduce(v);
        if res.is_empty() {
            Some(combo)
        } else {
            None
        }
    }

    pub fn contains(&self, v: SparseVec<K, C>) -> bool {
        self.reduce(v).0.is_empty()
    }
}

/// Reduced row echelon basis of the span of `vectors`: leading keys strictly
/// decreasing, each leading coefficient 1 and absent from every other row.
pub fn reduced_basis<K: Ord + Clone, C: Scalar>(vectors: &[SparseVec<K, C>]) -> Vec<SparseVec<K, C>> {
    let mut rows: BTreeMap<K, SparseVec<K, C>> = BTreeMap::new();
    for v in vectors {
        let mut v = v.clone();
        while let Some((lead, c)) = v.iter().next_back() {
            match rows.get(lead) {
                Some(r) => {
                    let c = c.clone();
                    axpy(&mut v, &-c, r);
                }
                None => break,
            }
        }
        if let Some((lead, lc)) = v.iter().next_back() {
            let inv = C::one() / lc.clone();
            let lead = lead.clone();
            rows.insert(lead, v.into_iter().map(|(k, x)| (k, x * inv.clone())).collect());
        }
    }
    let leads: Vec<K> = rows.keys().cloned().collect();
    for i in 0..leads.len() {
        let (lower, upper) = leads.split_at(i + 1);
        let lead = lower.last().unwrap();
        let row = rows[lead].clone();
        for other in upper {
            let c = rows[other].get(lead).cloned();
            if let Some(c) = c {
                let r = rows.get_mut(other).unwrap();
                axpy(r, &-c, &row);
            }
        }
    }
    rows.into_values().rev().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn sv(pairs: &[(u32, i64)]) -> SparseVec<u32, Rational> {
        pairs.iter().map(|&(k, x)| (k, r(x))).collect()
    }

    #[test]
    fn membership_and_preimage() {
        let mut e = Echelon::new();
        assert!(e.push(sv(&[(0, 1), (1, 1)])));
        assert!(e.push(sv(&[(1, 1), (2, 1)])));
        assert!(!e.push(sv(&[(0, 1), (2, -1)]))); // col0 - col1
        assert_eq!(e.rank(), 2);
        assert_eq!(e.kernel().len(), 1);
        let k = &e.kernel()[0];
        assert_eq!(k.get(&0), Some(&r(-1)));
        assert_eq!(k.get(&1), Some(&r(1)));
        assert_eq!(k.get(&2), Some(&r(1)));

        let target = sv(&[(0, 2), (1, 5), (2, 3)]);
        let x = e.solve(target.clone()).unwrap();
        let mut back = SparseVec::new();
        let cols = [sv(&[(0, 1), (1, 1)]), sv(&[(1, 1), (2, 1)]), sv(&[(0, 1), (2, -1)])];
        for (i, c) in &x {
            axpy(&mut back, c, &cols[*i]);
        }
        assert_eq!(back, target);
        assert!(e.solve(sv(&[(0, 1)])).is_none());
    }

    #[test]
    fn reduced_basis_is_canonical() {
        let a = reduced_basis(&[sv(&[(0, 2), (1, 2)]), sv(&[(1, 3), (2, 3)])]);
        let b = reduced_basis(&[sv(&[(1, 1), (2, 1)]), sv(&[(0, 1), (2, -1)])]);
        assert_eq!(a, b);
        assert_eq!(a[0], sv(&[(0, -1), (2, 1)]));
    }
}
