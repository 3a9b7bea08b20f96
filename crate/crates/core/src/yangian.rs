//! The affine Yangian of gl(1) acting on plane partitions in the Jack gauge,
//! and a checker for its defining relations.
//!
//! `e_j J_pi = sum_{b in pi+} h_b^j c(pi,b) J_{pi+b}` and
//! `f_j J_pi = sum_{b in pi-} h_b^j d(pi,b) J_{pi-b}` with
//! `d(pi,b) = -amp_sq(pi-b, b) / c(pi-b, b)`, so that every edge carries
//! `e * f = -amp_sq`. `c` is [`gauge_c`]; it equals 1 on canonical tree edges.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use serde::Serialize;

use crate::config::ModelConfig;
use crate::error::Result;
use crate::planepart::{amp_sq, content, enumerate, eigenvalues, gauge_c, PlanePartition};
use crate::scalar::Coeff;

/// Finite linear combination of plane partitions.
#[derive(Clone, PartialEq)]
pub struct PPVector<F: Coeff> {
    terms: BTreeMap<PlanePartition, F>,
}

impl<F: Coeff> Default for PPVector<F> {
    fn default() -> Self {
        PPVector { terms: BTreeMap::new() }
    }
}

impl<F: Coeff> PPVector<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(pi: PlanePartition) -> Self {
        let mut v = Self::zero();
        v.terms.insert(pi, F::one());
        v
    }

    pub fn add_term(&mut self, pi: PlanePartition, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&pi) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&pi);
                }
            }
            None => {
                self.terms.insert(pi, c);
            }
        }
    }

    pub fn get(&self, pi: &PlanePartition) -> F {
        self.terms.get(pi).cloned().unwrap_or_else(F::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PlanePartition, &F)> {
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

    pub fn add_scaled(&mut self, other: &Self, k: &F) {
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c.clone() * k);
        }
    }

    pub fn scaled(&self, k: &F) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, k);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-F::one());
        out
    }

    /// Map the coefficients into another field.
    pub fn try_map<G: Coeff>(&self, f: impl Fn(&F) -> Result<G>) -> Result<PPVector<G>> {
        let mut out = PPVector::zero();
        for (p, c) in &self.terms {
            out.add_term(p.clone(), f(c)?);
        }
        Ok(out)
    }
}

impl<F: Coeff> fmt::Display for PPVector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(p, c)| format!("{c}*|{p}>")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<F: Coeff> fmt::Debug for PPVector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A Yangian generator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Gen {
    E(usize),
    F(usize),
    Psi(usize),
}

/// The representation on plane partitions with heights at most `N`, with memoized matrix elements.
pub struct YangianRep<F: Coeff> {
    cfg: ModelConfig<F>,
    eig: Mutex<HashMap<PlanePartition, Vec<F>>>,
    act: Mutex<HashMap<(Gen, PlanePartition), PPVector<F>>>,
}

impl<F: Coeff> YangianRep<F> {
    pub fn new(cfg: ModelConfig<F>) -> Self {
        YangianRep { cfg, eig: Mutex::new(HashMap::new()), act: Mutex::new(HashMap::new()) }
    }

    pub fn config(&self) -> &ModelConfig<F> {
        &self.cfg
    }

    /// `psi_j` eigenvalue of `|pi>`.
    pub fn eigenvalue(&self, pi: &PlanePartition, j: usize) -> Result<F> {
        if let Some(v) = self.eig.lock().unwrap().get(pi) {
            if j < v.len() {
                return Ok(v[j].clone());
            }
        }
        let v = eigenvalues(pi, &self.cfg, (j + 1).max(8))?;
        let out = v[j].clone();
        self.eig.lock().unwrap().insert(pi.clone(), v);
        Ok(out)
    }

    fn act_basis(&self, g: Gen, pi: &PlanePartition) -> Result<PPVector<F>> {
        let key = (g, pi.clone());
        if let Some(v) = self.act.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let cfg = &self.cfg;
        let mut out = PPVector::zero();
        match g {
            Gen::E(j) => {
                for b in pi.addable(cfg.n) {
                    let h = content(&b, cfg);
                    let c = Coeff::pow(&h, j as u32) * &gauge_c(pi, &b, cfg)?;
                    out.add_term(pi.add_box(&b)?, c);
                }
            }
            Gen::F(j) => {
                for b in pi.removable() {
                    let smaller = pi.remove_box(&b)?;
                    let h = content(&b, cfg);
                    let d = -amp_sq(&smaller, &b, cfg)?.checked_div(&gauge_c(&smaller, &b, cfg)?)?;
                    out.add_term(smaller, Coeff::pow(&h, j as u32) * &d);
                }
            }
            Gen::Psi(j) => out.add_term(pi.clone(), self.eigenvalue(pi, j)?),
        }
        self.act.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }

    pub fn apply(&self, g: Gen, v: &PPVector<F>) -> Result<PPVector<F>> {
        let mut out = PPVector::zero();
        for (p, c) in v.iter() {
            out.add_scaled(&self.act_basis(g, p)?, c);
        }
        Ok(out)
    }

    pub fn apply_e(&self, j: usize, v: &PPVector<F>) -> Result<PPVector<F>> {
        self.apply(Gen::E(j), v)
    }

    pub fn apply_f(&self, j: usize, v: &PPVector<F>) -> Result<PPVector<F>> {
        self.apply(Gen::F(j), v)
    }

    pub fn apply_psi(&self, j: usize, v: &PPVector<F>) -> Result<PPVector<F>> {
        self.apply(Gen::Psi(j), v)
    }

    /// Apply a word; the last generator acts first.
    pub fn apply_word(&self, word: &[Gen], v: &PPVector<F>) -> Result<PPVector<F>> {
        let mut cur = v.clone();
        for g in word.iter().rev() {
            cur = self.apply(*g, &cur)?;
        }
        Ok(cur)
    }

    /// Evaluate a linear combination of words on a vector.
    pub fn eval(&self, expr: &OpExpr<F>, v: &PPVector<F>) -> Result<PPVector<F>> {
        let mut out = PPVector::zero();
        for (c, w) in &expr.terms {
            out.add_scaled(&self.apply_word(w, v)?, c);
        }
        Ok(out)
    }
}

/// Linear combination of generator words.
#[derive(Clone, Debug)]
pub struct OpExpr<F: Coeff> {
    pub terms: Vec<(F, Vec<Gen>)>,
}

impl<F: Coeff> OpExpr<F> {
    pub fn zero() -> Self {
        OpExpr { terms: Vec::new() }
    }

    pub fn word(c: F, w: Vec<Gen>) -> Self {
        OpExpr { terms: vec![(c, w)] }
    }

    pub fn plus(mut self, other: OpExpr<F>) -> Self {
        self.terms.extend(other.terms);
        self
    }

    pub fn scaled(mut self, k: &F) -> Self {
        for t in self.terms.iter_mut() {
            t.0 = t.0.clone() * k;
        }
        self
    }

    pub fn single(g: Gen) -> Self {
        OpExpr::word(F::one(), vec![g])
    }

    /// `[a, b]` for single generators scaled by `c`.
    pub fn comm(c: F, a: Gen, b: Gen) -> Self {
        OpExpr { terms: vec![(c.clone(), vec![a, b]), (-c, vec![b, a])] }
    }

    /// `{a, b}` scaled by `c`.
    pub fn anti(c: F, a: Gen, b: Gen) -> Self {
        OpExpr { terms: vec![(c.clone(), vec![a, b]), (c, vec![b, a])] }
    }

    /// `[a, X]` where `X` is itself an expression.
    pub fn comm_left(a: Gen, x: &OpExpr<F>) -> Self {
        let mut terms = Vec::new();
        for (c, w) in &x.terms {
            let mut l = vec![a];
            l.extend(w.iter().copied());
            let mut r = w.clone();
            r.push(a);
            terms.push((c.clone(), l));
            terms.push((-c.clone(), r));
        }
        OpExpr { terms }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub instances: usize,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub max_size: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Cubic relation template shared by the e-e, f-f, psi-e, psi-f families.
///
/// `[A_{j+3}, B_k] - 3[A_{j+2}, B_{k+1}] + 3[A_{j+1}, B_{k+2}] - [A_j, B_{k+3}]
///  + s2 [A_{j+1}, B_k] - s2 [A_j, B_{k+1}] + sign s3 {A_j, B_k}`
fn cubic<K: Coeff>(a: impl Fn(usize) -> Gen, b: impl Fn(usize) -> Gen, j: usize, k: usize, sign: i64, cfg: &ModelConfig<K>) -> OpExpr<K> {
    let one = K::one();
    OpExpr::comm(one.clone(), a(j + 3), b(k))
        .plus(OpExpr::comm(K::from_i64(-3), a(j + 2), b(k + 1)))
        .plus(OpExpr::comm(K::from_i64(3), a(j + 1), b(k + 2)))
        .plus(OpExpr::comm(-one, a(j), b(k + 3)))
        .plus(OpExpr::comm(cfg.sigma2.clone(), a(j + 1), b(k)))
        .plus(OpExpr::comm(-cfg.sigma2.clone(), a(j), b(k + 1)))
        .plus(OpExpr::anti(cfg.sigma3.scale_i64(sign), a(j), b(k)))
}

/// All relation instances with generator base indices up to `max_index`, as `(family, label, lhs - rhs)`.
pub fn relation_instances<K: Coeff>(cfg: &ModelConfig<K>, max_index: usize) -> Vec<(&'static str, String, OpExpr<K>)> {
    use Gen::*;
    let mut out = Vec::new();
    let r = 0..=max_index;
    for j in r.clone() {
        for k in r.clone() {
            out.push(("[psi_j, psi_k] = 0", format!("j={j},k={k}"), OpExpr::comm(K::one(), Psi(j), Psi(k))));
            out.push(("e-e cubic", format!("j={j},k={k}"), cubic(E, E, j, k, -1, cfg)));
            out.push(("f-f cubic", format!("j={j},k={k}"), cubic(F, F, j, k, 1, cfg)));
            out.push((
                "[e_j, f_k] = psi_{j+k}",
                format!("j={j},k={k}"),
                OpExpr::comm(K::one(), E(j), F(k)).plus(OpExpr::word(-K::one(), vec![Psi(j + k)])),
            ));
            out.push(("psi-e cubic", format!("j={j},k={k}"), cubic(Psi, E, j, k, -1, cfg)));
            out.push(("psi-f cubic", format!("j={j},k={k}"), cubic(Psi, F, j, k, 1, cfg)));
        }
        out.push(("[psi_0, e_j] = 0", format!("j={j}"), OpExpr::comm(K::one(), Psi(0), E(j))));
        out.push(("[psi_1, e_j] = 0", format!("j={j}"), OpExpr::comm(K::one(), Psi(1), E(j))));
        out.push((
            "[psi_2, e_j] = 2 e_j",
            format!("j={j}"),
            OpExpr::comm(K::one(), Psi(2), E(j)).plus(OpExpr::word(K::from_i64(-2), vec![E(j)])),
        ));
        out.push(("[psi_0, f_j] = 0", format!("j={j}"), OpExpr::comm(K::one(), Psi(0), F(j))));
        out.push(("[psi_1, f_j] = 0", format!("j={j}"), OpExpr::comm(K::one(), Psi(1), F(j))));
        out.push((
            "[psi_2, f_j] = -2 f_j",
            format!("j={j}"),
            OpExpr::comm(K::one(), Psi(2), F(j)).plus(OpExpr::word(K::from_i64(2), vec![F(j)])),
        ));
    }
    for j1 in r.clone() {
        for j2 in j1..=max_index {
            for j3 in j2..=max_index {
                let label = format!("j=({j1},{j2},{j3})");
                out.push(("e Serre", label.clone(), serre(E, [j1, j2, j3])));
                out.push(("f Serre", label, serre(F, [j1, j2, j3])));
            }
        }
    }
    out
}

fn serre<K: Coeff>(g: impl Fn(usize) -> Gen, js: [usize; 3]) -> OpExpr<K> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = OpExpr::zero();
    for p in PERMS {
        let (a, b, c) = (js[p[0]], js[p[1]], js[p[2]]);
        let inner = OpExpr::comm(K::one(), g(b), g(c + 1));
        out = out.plus(OpExpr::comm_left(g(a), &inner));
    }
    out
}

/// Check every relation on every basis state of size at most `max_size`.
pub fn check_relations<F: Coeff>(rep: &YangianRep<F>, max_size: usize, max_index: usize) -> Result<RelationReport> {
    let cfg = rep.config();
    let states: Vec<PlanePartition> = (0..=max_size).flat_map(|n| enumerate(n, cfg.n)).collect();
    let mut families: Vec<RelationCheck> = Vec::new();
    let mut index: HashMap<&'static str, usize> = HashMap::new();
    for (family, label, expr) in relation_instances(cfg, max_index) {
        let slot = *index.entry(family).or_insert_with(|| {
            families.push(RelationCheck { relation: family.to_string(), instances: 0, passed: true, witness: None });
            families.len() - 1
        });
        for pi in &states {
            let v = rep.eval(&expr, &PPVector::basis(pi.clone()))?;
            let chk = &mut families[slot];
            chk.instances += 1;
            if !v.is_zero() && chk.passed {
                chk.passed = false;
                chk.witness = Some(format!("{label} on |{pi}>: {v}"));
            }
        }
    }
    Ok(RelationReport { n: cfg.n, max_size, checks: families })
}

/// Convenience: check with a fresh representation.
pub fn check_relations_for<F: Coeff>(cfg: &ModelConfig<F>, max_size: usize, max_index: usize) -> Result<RelationReport> {
    let rep = YangianRep::new(cfg.clone());
    check_relations(&rep, max_size, max_index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::RatFunc;
    use num_traits::One;

    fn rep(n: usize) -> YangianRep<RatFunc> {
        YangianRep::new(ModelConfig::symbolic(n).unwrap())
    }

    #[test]
    fn e0_on_vacuum_and_one_box() {
        let r = rep(3);
        let v = r.apply_e(0, &PPVector::basis(PlanePartition::empty())).unwrap();
        assert_eq!(v, PPVector::basis("[[1]]".parse().unwrap()));
        let w = r.apply_e(0, &v).unwrap();
        assert_eq!(w.len(), 3);
        assert!(w.iter().all(|(_, c)| c.is_one()));
        assert!(r.apply_e(1, &PPVector::basis(PlanePartition::empty())).unwrap().is_zero());
    }

    #[test]
    fn f0_e0_on_vacuum_is_psi0() {
        let r = rep(2);
        let vac = PPVector::basis(PlanePartition::empty());
        let v = r.apply_f(0, &r.apply_e(0, &vac).unwrap()).unwrap();
        assert_eq!(v, vac.scaled(&-r.config().psi0.clone()));
        assert!(r.apply_f(0, &vac).unwrap().is_zero());
        let one = PPVector::basis("[[1]]".parse().unwrap());
        assert!(r.apply_f(1, &one).unwrap().is_zero());
    }

    #[test]
    fn psi_eigen_examples() {
        let r = rep(3);
        let p: PlanePartition = "[[2,1],[1]]".parse().unwrap();
        let v = PPVector::basis(p);
        assert_eq!(r.apply_psi(0, &v).unwrap(), v.scaled(&r.config().psi0));
        assert_eq!(r.apply_psi(2, &v).unwrap(), v.scaled(&RatFunc::from_i64(8)));
        assert!(r.apply_psi(1, &PPVector::basis(PlanePartition::empty())).unwrap().is_zero());
    }

    #[test]
    fn relations_small() {
        let report = check_relations_for(&ModelConfig::symbolic(2).unwrap(), 2, 1).unwrap();
        for c in &report.checks {
            assert!(c.passed, "{}: {:?}", c.relation, c.witness);
        }
    }
}
