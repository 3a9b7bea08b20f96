//! The N-slice boson Fock space: polynomials in `p_{j,n}`, the modes `a_{j,n}`
//! and normal-ordered mode operators.
//!
//! `a_{j,-n}` multiplies by `p_{j,n}`, `a_{j,n}` acts as `kappa n d/dp_{j,n}` with
//! `kappa = -1/(h1 h2)`, and `a_{j,0} = 0`. All slices share one vacuum.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::config::ModelConfig;
use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// A mode label `(slice, n)` with `slice` in `1..=N`, `n >= 1`.
pub type Mode = (u8, u32);

/// A monomial in the `p_{j,n}`: sorted multiset of mode labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct PMonomial(Vec<Mode>);

impl PMonomial {
    pub fn vacuum() -> Self {
        PMonomial(Vec::new())
    }

    pub fn new(mut modes: Vec<Mode>) -> Self {
        modes.sort();
        PMonomial(modes)
    }

    pub fn modes(&self) -> &[Mode] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|m| m.1).sum()
    }

    pub fn is_vacuum(&self) -> bool {
        self.0.is_empty()
    }

    fn times(&self, other: &[Mode]) -> PMonomial {
        if other.is_empty() {
            return self.clone();
        }
        let mut v = Vec::with_capacity(self.0.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        v.sort();
        PMonomial(v)
    }

    /// Remove the multiset `sub`; returns the quotient and `prod e!/(e-a)!`, or `None`.
    fn differentiate(&self, sub: &[Mode]) -> Option<(PMonomial, u64)> {
        let mut rest = self.0.clone();
        let mut falling = 1u64;
        let mut i = 0;
        while i < sub.len() {
            let m = sub[i];
            let mut k = 0;
            while i < sub.len() && sub[i] == m {
                k += 1;
                i += 1;
            }
            let have = rest.iter().filter(|x| **x == m).count();
            if have < k {
                return None;
            }
            for t in 0..k {
                falling *= (have - t) as u64;
            }
            for _ in 0..k {
                let pos = rest.iter().position(|x| *x == m).unwrap();
                rest.remove(pos);
            }
        }
        Some((PMonomial(rest), falling))
    }
}

impl fmt::Display for PMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let m = self.0[i];
            let mut k = 0;
            while i < self.0.len() && self.0[i] == m {
                k += 1;
                i += 1;
            }
            if k == 1 {
                parts.push(format!("p{}_{}", m.0, m.1));
            } else {
                parts.push(format!("p{}_{}^{}", m.0, m.1, k));
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for PMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Finite linear combination of `p`-monomials.
#[derive(Clone, PartialEq)]
pub struct FockState<F: Coeff> {
    terms: BTreeMap<PMonomial, F>,
}

impl<F: Coeff> Default for FockState<F> {
    fn default() -> Self {
        FockState { terms: BTreeMap::new() }
    }
}

impl<F: Coeff> FockState<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::monomial(PMonomial::vacuum(), F::one())
    }

    pub fn monomial(m: PMonomial, c: F) -> Self {
        let mut s = Self::zero();
        s.add_term(m, c);
        s
    }

    pub fn add_term(&mut self, m: PMonomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn get(&self, m: &PMonomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PMonomial, &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of the highest monomial (0 for the zero state).
    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// `Some(d)` when every monomial has degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let d = it.next().unwrap_or(0);
        it.all(|x| x == d).then_some(d)
    }

    pub fn add_scaled(&mut self, other: &Self, k: &F) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone() * k);
        }
    }

    pub fn scaled(&self, k: &F) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, k);
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &F::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-F::one());
        out
    }

    /// Ordinary product of polynomials.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.times(&b.0), ca.clone() * cb);
            }
        }
        out
    }

    pub fn try_map<G: Coeff>(&self, f: impl Fn(&F) -> Result<G>) -> Result<FockState<G>> {
        let mut out = FockState::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// JSON-friendly form: `(mode list, canonical scalar)`.
    pub fn to_serial(&self) -> Vec<(Vec<Mode>, String)> {
        self.terms.iter().map(|(m, c)| (m.0.clone(), c.to_canonical())).collect()
    }

    pub fn from_serial(v: &[(Vec<Mode>, String)]) -> Result<Self> {
        let mut out = Self::zero();
        for (m, c) in v {
            out.add_term(PMonomial::new(m.clone()), F::parse_canonical(c)?);
        }
        Ok(out)
    }
}

impl<F: Coeff> fmt::Display for FockState<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("{c}*{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<F: Coeff> fmt::Debug for FockState<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Coefficient of the vacuum monomial.
pub fn vacuum_coefficient<F: Coeff>(s: &FockState<F>) -> F {
    s.get(&PMonomial::vacuum())
}

/// One normal-ordered term `coeff * (prod creations) (prod annihilations)`.
#[derive(Clone, Debug, PartialEq)]
pub struct OpTerm<F: Coeff> {
    pub coeff: F,
    pub creations: Vec<Mode>,
    pub annihilations: Vec<Mode>,
}

type TermKey = (Vec<Mode>, Vec<Mode>);

/// Sum of normal-ordered mode monomials with a fixed degree shift.
///
/// Operators built from infinite mode sums are truncated: `valid_up_to` is the
/// largest input degree on which the stored terms give the exact action.
#[derive(Clone, Debug)]
pub struct ModeOperator<F: Coeff> {
    pub degree: i64,
    pub valid_up_to: u32,
    /// keyed by (annihilations, creations)
    terms: BTreeMap<TermKey, F>,
}

impl<F: Coeff> ModeOperator<F> {
    pub fn zero(degree: i64) -> Self {
        ModeOperator { degree, valid_up_to: u32::MAX, terms: BTreeMap::new() }
    }

    /// The single mode `a_{j,n}`; `a_{j,0}` is the zero operator.
    pub fn mode(j: u8, n: i64) -> Self {
        let mut op = ModeOperator::zero(-n);
        op.push_product(F::one(), &[(j, n)]);
        op
    }

    /// The identity operator.
    pub fn identity() -> Self {
        let mut op = ModeOperator::zero(0);
        op.terms.insert((Vec::new(), Vec::new()), F::one());
        op
    }

    pub fn terms(&self) -> Vec<OpTerm<F>> {
        self.terms
            .iter()
            .map(|((ann, cre), c)| OpTerm { coeff: c.clone(), creations: cre.clone(), annihilations: ann.clone() })
            .collect()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn with_cutoff(mut self, valid_up_to: u32) -> Self {
        self.valid_up_to = valid_up_to;
        self
    }

    fn insert(&mut self, key: TermKey, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// Add `c * :prod a_{j,n}:`; factors with `n = 0` make the term vanish.
    ///
    /// Panics when the product's degree differs from the operator's.
    pub fn push_product(&mut self, c: F, modes: &[(u8, i64)]) {
        if c.is_zero() || modes.iter().any(|m| m.1 == 0) {
            return;
        }
        let deg: i64 = modes.iter().map(|m| -m.1).sum();
        assert_eq!(deg, self.degree, "mode product has the wrong degree");
        let mut creations: Vec<Mode> = modes.iter().filter(|m| m.1 < 0).map(|m| (m.0, (-m.1) as u32)).collect();
        let mut annihilations: Vec<Mode> = modes.iter().filter(|m| m.1 > 0).map(|m| (m.0, m.1 as u32)).collect();
        creations.sort();
        annihilations.sort();
        self.insert((annihilations, creations), c);
    }

    pub fn add_scaled(&mut self, other: &ModeOperator<F>, k: &F) {
        assert_eq!(self.degree, other.degree, "adding operators of different degree");
        self.valid_up_to = self.valid_up_to.min(other.valid_up_to);
        for (key, c) in &other.terms {
            self.insert(key.clone(), c.clone() * k);
        }
    }

    pub fn scaled(&self, k: &F) -> Self {
        let mut out = ModeOperator::zero(self.degree);
        out.valid_up_to = self.valid_up_to;
        out.add_scaled(self, k);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Apply `a_{j,n}` to a state.
pub fn apply_mode<F: Coeff>(j: u8, n: i64, s: &FockState<F>, cfg: &ModelConfig<F>) -> FockState<F> {
    apply_operator(&ModeOperator::mode(j, n), s, cfg).expect("single modes have no cutoff")
}

/// Apply a normal-ordered operator to a state.
pub fn apply_operator<F: Coeff>(op: &ModeOperator<F>, s: &FockState<F>, cfg: &ModelConfig<F>) -> Result<FockState<F>> {
    let top = s.max_degree();
    if top > op.valid_up_to {
        return Err(Error::Consistency(format!(
            "operator truncated at degree {} applied to a state of degree {top}",
            op.valid_up_to
        )));
    }
    let mut kappa_pows: Vec<F> = vec![F::one()];
    let mut out = FockState::zero();
    let mut iter = op.terms.iter().peekable();
    while let Some(((ann, _), _)) = iter.peek() {
        let ann = ann.clone();
        let mut group: Vec<(&Vec<Mode>, &F)> = Vec::new();
        while let Some(((a, cre), c)) = iter.peek() {
            if *a != ann {
                break;
            }
            group.push((cre, *c));
            iter.next();
        }
        let ann_deg: u32 = ann.iter().map(|m| m.1).sum();
        if ann_deg > top {
            continue;
        }
        while kappa_pows.len() <= ann.len() {
            let next = kappa_pows.last().unwrap().clone() * &cfg.kappa;
            kappa_pows.push(next);
        }
        let nprod: u64 = ann.iter().map(|m| m.1 as u64).product();
        for (m, c) in s.iter() {
            let Some((rest, falling)) = m.differentiate(&ann) else { continue };
            let base = c.clone() * &kappa_pows[ann.len()] * &F::from_i64((nprod * falling) as i64);
            for (cre, tc) in &group {
                out.add_term(rest.times(cre), base.clone() * *tc);
            }
        }
    }
    Ok(out)
}

/// `[A, B] s = A(B s) - B(A s)`.
pub fn commutator_on<F: Coeff>(a: &ModeOperator<F>, b: &ModeOperator<F>, s: &FockState<F>, cfg: &ModelConfig<F>) -> Result<FockState<F>> {
    let ab = apply_operator(a, &apply_operator(b, s, cfg)?, cfg)?;
    let ba = apply_operator(b, &apply_operator(a, s, cfg)?, cfg)?;
    Ok(ab.sub(&ba))
}

/// All monomials of the given degree in slices `1..=n_slices`, sorted.
pub fn basis_monomials(degree: u32, n_slices: usize) -> Vec<PMonomial> {
    let modes: Vec<Mode> = (1..=degree).flat_map(|n| (1..=n_slices as u8).map(move |j| (j, n))).collect();
    fn rec(rem: u32, start: usize, modes: &[Mode], cur: &mut Vec<Mode>, out: &mut Vec<PMonomial>) {
        if rem == 0 {
            out.push(PMonomial::new(cur.clone()));
            return;
        }
        for (i, m) in modes.iter().enumerate().skip(start) {
            if m.1 <= rem {
                cur.push(*m);
                rec(rem - m.1, i, modes, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(degree, 0, &modes, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn basis_states<F: Coeff>(max_degree: u32, n_slices: usize) -> Vec<FockState<F>> {
    (0..=max_degree)
        .flat_map(|d| basis_monomials(d, n_slices))
        .map(|m| FockState::monomial(m, F::one()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::RatFunc;

    fn cfg() -> ModelConfig<RatFunc> {
        ModelConfig::symbolic(2).unwrap()
    }

    #[test]
    fn basis_counts() {
        let dims: Vec<usize> = (0..=5).map(|d| basis_monomials(d, 3).len()).collect();
        assert_eq!(dims, vec![1, 3, 9, 22, 51, 108]);
        assert_eq!(basis_monomials(4, 1).len(), 5);
    }

    #[test]
    fn mode_actions() {
        let c = cfg();
        let vac = FockState::<RatFunc>::vacuum();
        let p12 = apply_mode(1, -2, &vac, &c);
        assert_eq!(p12, FockState::monomial(PMonomial::new(vec![(1, 2)]), RatFunc::one()));
        let back = apply_mode(1, 2, &p12, &c);
        assert_eq!(back, vac.scaled(&c.kappa.scale_i64(2)));
        let p21 = FockState::monomial(PMonomial::new(vec![(2, 1)]), RatFunc::one());
        assert!(apply_mode(1, 1, &p21, &c).is_zero());
    }

    #[test]
    fn commutator_on_vacuum() {
        let c = cfg();
        let vac = FockState::<RatFunc>::vacuum();
        let r = commutator_on(&ModeOperator::mode(1, 1), &ModeOperator::mode(1, -1), &vac, &c).unwrap();
        assert_eq!(r, vac.scaled(&c.kappa));
        let r = commutator_on(&ModeOperator::mode(1, 1), &ModeOperator::mode(2, -1), &vac, &c).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn second_derivative_factor() {
        let c = cfg();
        let s = FockState::monomial(PMonomial::new(vec![(1, 1), (1, 1), (1, 1)]), RatFunc::one());
        let mut op = ModeOperator::zero(-2);
        op.push_product(RatFunc::one(), &[(1, 1), (1, 1)]);
        let r = apply_operator(&op, &s, &c).unwrap();
        let expect = c.kappa.clone() * &c.kappa * &RatFunc::from_i64(6);
        assert_eq!(r, FockState::monomial(PMonomial::new(vec![(1, 1)]), expect));
    }

    use num_traits::One;
}
