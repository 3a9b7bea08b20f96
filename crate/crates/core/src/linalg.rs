//! Exact elimination over a [`Coeff`] field: expanding vectors in a fixed family of columns.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fock::{FockState, PMonomial};
use crate::scalar::Coeff;

/// A linearly independent family of columns, reduced once and reused for many targets.
#[derive(Clone, Debug)]
pub struct SpanBasis<F: Coeff> {
    level: usize,
    rows: usize,
    /// reduced vectors, each with `reduced[i][pivots[i]] == 1` and zero at earlier pivots
    reduced: Vec<Vec<F>>,
    pivots: Vec<usize>,
    /// `reduced[i] = sum_j transform[i][j] * column_j`
    transform: Vec<Vec<F>>,
}

impl<F: Coeff> SpanBasis<F> {
    /// Fails with `RankDeficient` when the columns are dependent.
    pub fn new(columns: &[Vec<F>], rows: usize, level: usize) -> Result<Self> {
        let k = columns.len();
        let mut basis: SpanBasis<F> = SpanBasis { level, rows, reduced: Vec::with_capacity(k), pivots: Vec::new(), transform: Vec::new() };
        let mut dependent = 0;
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            let mut v = col.clone();
            let mut t = vec![F::zero(); k];
            t[j] = F::one();
            for i in 0..basis.reduced.len() {
                let f = v[basis.pivots[i]].clone();
                if f.is_zero() {
                    continue;
                }
                for (a, b) in v.iter_mut().zip(&basis.reduced[i]) {
                    if !b.is_zero() {
                        *a -= &(f.clone() * b);
                    }
                }
                for (a, b) in t.iter_mut().zip(&basis.transform[i]) {
                    if !b.is_zero() {
                        *a -= &(f.clone() * b);
                    }
                }
            }
            let pivot = v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .min_by_key(|(_, x)| x.complexity())
                .map(|(i, _)| i);
            let Some(p) = pivot else {
                dependent += 1;
                continue;
            };
            let inv = v[p].inv()?;
            for a in v.iter_mut() {
                if !a.is_zero() {
                    *a *= &inv;
                }
            }
            for a in t.iter_mut() {
                if !a.is_zero() {
                    *a *= &inv;
                }
            }
            basis.reduced.push(v);
            basis.pivots.push(p);
            basis.transform.push(t);
        }
        if dependent > 0 {
            return Err(Error::RankDeficient { level, kernel: dependent });
        }
        Ok(basis)
    }

    pub fn rank(&self) -> usize {
        self.reduced.len()
    }

    /// Coefficients `x` with `target = sum_j x_j column_j`, or `NotInSpan` with the residual.
    pub fn expand(&self, target: &[F]) -> Result<Vec<F>> {
        assert_eq!(target.len(), self.rows, "target length mismatch");
        let mut v = target.to_vec();
        let mut x = vec![F::zero(); self.reduced.len()];
        for i in 0..self.reduced.len() {
            let f = v[self.pivots[i]].clone();
            if f.is_zero() {
                continue;
            }
            for (a, b) in v.iter_mut().zip(&self.reduced[i]) {
                if !b.is_zero() {
                    *a -= &(f.clone() * b);
                }
            }
            x[i] = f;
        }
        if let Some((row, r)) = v.iter().enumerate().find(|(_, r)| !r.is_zero()) {
            return Err(Error::NotInSpan { level: self.level, residual: format!("row {row}: {r}") });
        }
        let mut out = vec![F::zero(); self.transform.len()];
        for (xi, t) in x.iter().zip(&self.transform) {
            if xi.is_zero() {
                continue;
            }
            for (o, tij) in out.iter_mut().zip(t) {
                if !tij.is_zero() {
                    *o += &(xi.clone() * tij);
                }
            }
        }
        Ok(out)
    }
}

/// Dense coordinates for Fock states over a fixed monomial list.
#[derive(Clone, Debug)]
pub struct MonomialIndex {
    index: BTreeMap<PMonomial, usize>,
}

impl MonomialIndex {
    pub fn new(monomials: &[PMonomial]) -> Self {
        MonomialIndex { index: monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect() }
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn dense<F: Coeff>(&self, s: &FockState<F>) -> Result<Vec<F>> {
        let mut v = vec![F::zero(); self.index.len()];
        for (m, c) in s.iter() {
            let i = self
                .index
                .get(m)
                .ok_or_else(|| Error::Consistency(format!("monomial {m} outside the coordinate range")))?;
            v[*i] = c.clone();
        }
        Ok(v)
    }
}

/// Expansion basis for a family of Fock states of one degree.
pub fn state_basis<F: Coeff>(states: &[FockState<F>], monomials: &[PMonomial], level: usize) -> Result<(SpanBasis<F>, MonomialIndex)> {
    let idx = MonomialIndex::new(monomials);
    let cols = states.iter().map(|s| idx.dense(s)).collect::<Result<Vec<_>>>()?;
    Ok((SpanBasis::new(&cols, idx.len(), level)?, idx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn expand_in_columns() {
        let cols = vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]];
        let b = SpanBasis::new(&cols, 3, 0).unwrap();
        let x = b.expand(&[q(2), q(5), q(3)]).unwrap();
        assert_eq!(x, vec![q(2), q(3)]);
        assert!(matches!(b.expand(&[q(1), q(0), q(0)]), Err(Error::NotInSpan { .. })));
    }

    #[test]
    fn dependent_columns() {
        let cols = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(matches!(SpanBasis::new(&cols, 2, 3), Err(Error::RankDeficient { level: 3, kernel: 1 })));
    }
}
