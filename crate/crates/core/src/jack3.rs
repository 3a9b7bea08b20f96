//! 3-Jack polynomials as Fock-space vectors, the `P_{n,j}` coordinates and the
//! Littlewood-Richardson product.
//!
//! `J_pi` at level `n+1` is the `psi_3`-eigencomponent of `e_0 J_parent`, where the parent
//! removes the last box of the canonical path. The gauge is that of [`crate::planepart::gauge_c`]:
//! tree edges carry coefficient 1.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::config::ModelConfig;
use crate::error::{Error, Result};
use crate::fock::{apply_operator, basis_monomials, FockState, Mode, ModeOperator};
use crate::linalg::{MonomialIndex, SpanBasis};
use crate::planepart::{enumerate, psi3_eigenvalue, PlanePartition};
use crate::ratfunc::RatFunc;
use crate::scalar::Coeff;
use crate::wfields::{e0_boson, e1_boson, mode_b, mode_sum, psi3_boson};
use crate::yangian::{Gen, OpExpr, PPVector, YangianRep};

/// Bumped whenever the stored expansion conventions change.
pub const SCHEMA_VERSION: u32 = 1;

/// `J_pi` for every plane partition up to some size, as polynomials in `p_{j,n}`.
pub struct JackTable<F: Coeff> {
    cfg: ModelConfig<F>,
    levels: Vec<BTreeMap<PlanePartition, FockState<F>>>,
}

impl<F: Coeff> JackTable<F> {
    /// Only `J_empty = 1`.
    pub fn new(cfg: &ModelConfig<F>) -> Self {
        let mut l0 = BTreeMap::new();
        l0.insert(PlanePartition::empty(), FockState::vacuum());
        JackTable { cfg: cfg.clone(), levels: vec![l0] }
    }

    /// Build levels `0..=up_to`, checking the e0, e1 and psi3 equations after each level.
    pub fn compute(up_to: usize, cfg: &ModelConfig<F>) -> Result<Self> {
        let mut t = JackTable::new(cfg);
        t.extend_to(up_to)?;
        Ok(t)
    }

    pub fn config(&self) -> &ModelConfig<F> {
        &self.cfg
    }

    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn extend_to(&mut self, up_to: usize) -> Result<()> {
        while self.max_level() < up_to {
            self.push_level()?;
            self.verify_transition(self.max_level() - 1)?;
        }
        Ok(())
    }

    fn push_level(&mut self) -> Result<()> {
        let cfg = &self.cfg;
        let target = self.max_level() + 1;
        let psi3 = psi3_boson(cfg, target as u32);
        let e0 = e0_boson(cfg);
        let mut raised: HashMap<PlanePartition, FockState<F>> = HashMap::new();
        let mut out = BTreeMap::new();
        for pi in enumerate(target, cfg.n) {
            let (parent, _) = pi.canonical_parent().expect("non-empty");
            if !raised.contains_key(&parent) {
                let v = apply_operator(&e0, &self.levels[target - 1][&parent], cfg)?;
                raised.insert(parent.clone(), v);
            }
            let mut w = raised[&parent].clone();
            let lam = psi3_eigenvalue(&pi, cfg);
            for b in parent.addable(cfg.n) {
                let sib = parent.add_box(&b)?;
                if sib == pi {
                    continue;
                }
                let ls = psi3_eigenvalue(&sib, cfg);
                let gap = lam.clone() - &ls;
                if gap.is_zero() {
                    return Err(Error::ContentCollision { partition: parent.to_string(), a: pi.to_string(), b: sib.to_string() });
                }
                let mut next = apply_operator(&psi3, &w, cfg)?;
                next.add_scaled(&w, &-ls);
                w = next.scaled(&gap.inv()?);
            }
            out.insert(pi, w);
        }
        self.levels.push(out);
        Ok(())
    }

    /// The e0 and e1 equations from level `n` to `n+1`, and the psi3 eigen-equation at `n+1`.
    pub fn verify_transition(&self, n: usize) -> Result<()> {
        let cfg = &self.cfg;
        if n + 1 > self.max_level() {
            return Err(Error::Unsupported(format!("level {} is not computed", n + 1)));
        }
        let rep = YangianRep::new(cfg.clone());
        let e0 = e0_boson(cfg);
        let e1 = e1_boson(cfg, n as u32);
        for (pi, v) in &self.levels[n] {
            if v.homogeneous_degree().map_or(!v.is_zero(), |d| d as usize != n) {
                return Err(Error::Consistency(format!("J_{pi} is not homogeneous of degree {n}")));
            }
            for (j, op) in [(0usize, &e0), (1, &e1)] {
                let lhs = apply_operator(op, v, cfg)?;
                let rhs = self.to_fock(&rep.apply_e(j, &PPVector::basis(pi.clone()))?)?;
                if lhs != rhs {
                    return Err(Error::Consistency(format!("e{j} J_{pi} differs from the Yangian action: {}", lhs.sub(&rhs))));
                }
            }
        }
        let psi3 = psi3_boson(cfg, (n + 1) as u32);
        for (pi, v) in &self.levels[n + 1] {
            let lhs = apply_operator(&psi3, v, cfg)?;
            if lhs != v.scaled(&psi3_eigenvalue(pi, cfg)) {
                return Err(Error::Consistency(format!("J_{pi} is not a psi3 eigenvector")));
            }
        }
        Ok(())
    }

    /// Re-run every transition check; used after loading from disk.
    pub fn verify_all(&self) -> Result<()> {
        for n in 0..self.max_level() {
            self.verify_transition(n)?;
        }
        Ok(())
    }

    /// Cheaper load-time check: only the e0 equations.
    pub fn verify_e0(&self) -> Result<()> {
        let rep = YangianRep::new(self.cfg.clone());
        let e0 = e0_boson(&self.cfg);
        for n in 0..self.max_level() {
            for (pi, v) in &self.levels[n] {
                let lhs = apply_operator(&e0, v, &self.cfg)?;
                let rhs = self.to_fock(&rep.apply_e(0, &PPVector::basis(pi.clone()))?)?;
                if lhs != rhs {
                    return Err(Error::Consistency(format!("cached J_{pi} fails the e0 equation")));
                }
            }
        }
        Ok(())
    }

    pub fn get(&self, pi: &PlanePartition) -> Option<&FockState<F>> {
        self.levels.get(pi.size())?.get(pi)
    }

    pub fn jack(&self, pi: &PlanePartition) -> Result<&FockState<F>> {
        self.get(pi).ok_or_else(|| {
            Error::Unsupported(format!("J_{pi} is not in the table (N = {}, max level {})", self.cfg.n, self.max_level()))
        })
    }

    pub fn level(&self, n: usize) -> Option<&BTreeMap<PlanePartition, FockState<F>>> {
        self.levels.get(n)
    }

    /// `sum c_pi J_pi` as a Fock state.
    pub fn to_fock(&self, v: &PPVector<F>) -> Result<FockState<F>> {
        let mut out = FockState::zero();
        for (pi, c) in v.iter() {
            out.add_scaled(self.jack(pi)?, c);
        }
        Ok(out)
    }

    /// Elimination data for re-expanding level-`n` states in 3-Jacks.
    pub fn basis(&self, n: usize) -> Result<JackBasis<F>> {
        let level = self.level(n).ok_or_else(|| Error::Unsupported(format!("level {n} is not computed")))?;
        let monomials = basis_monomials(n as u32, self.cfg.n);
        let index = MonomialIndex::new(&monomials);
        let partitions: Vec<PlanePartition> = level.keys().cloned().collect();
        let cols = level.values().map(|s| index.dense(s)).collect::<Result<Vec<_>>>()?;
        let span = SpanBasis::new(&cols, index.len(), n)?;
        Ok(JackBasis { partitions, span, index })
    }

    pub fn to_serial(&self) -> JackTableSerial {
        JackTableSerial {
            schema: SCHEMA_VERSION,
            n: self.cfg.n,
            tag: self.cfg.tag.clone(),
            h1: self.cfg.h1.to_canonical(),
            h2: self.cfg.h2.to_canonical(),
            levels: self
                .levels
                .iter()
                .map(|l| l.iter().map(|(pi, s)| (pi.clone(), s.to_serial())).collect())
                .collect(),
        }
    }

    /// Rebuild from a serialized table; the parameters must match `cfg` exactly.
    pub fn from_serial(s: &JackTableSerial, cfg: &ModelConfig<F>) -> Result<Self> {
        if s.schema != SCHEMA_VERSION {
            return Err(Error::Parse(format!("schema version {} (expected {SCHEMA_VERSION})", s.schema)));
        }
        if s.n != cfg.n || F::parse_canonical(&s.h1)? != cfg.h1 || F::parse_canonical(&s.h2)? != cfg.h2 {
            return Err(Error::Parse("stored table was computed for different parameters".into()));
        }
        let mut levels = Vec::new();
        for (k, l) in s.levels.iter().enumerate() {
            let mut m = BTreeMap::new();
            for (pi, st) in l {
                if pi.size() != k || pi.max_height() as usize > cfg.n {
                    return Err(Error::Parse(format!("partition {pi} stored at level {k}")));
                }
                m.insert(pi.clone(), FockState::from_serial(st)?);
            }
            if m.len() != enumerate(k, cfg.n).len() {
                return Err(Error::Parse(format!("level {k} is incomplete")));
            }
            levels.push(m);
        }
        if levels.is_empty() {
            return Err(Error::Parse("empty table".into()));
        }
        Ok(JackTable { cfg: cfg.clone(), levels })
    }
}

/// On-disk form of a [`JackTable`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JackTableSerial {
    pub schema: u32,
    pub n: usize,
    pub tag: String,
    pub h1: String,
    pub h2: String,
    pub levels: Vec<Vec<(PlanePartition, Vec<(Vec<Mode>, String)>)>>,
}

/// Reduced 3-Jack columns of one level.
pub struct JackBasis<F: Coeff> {
    partitions: Vec<PlanePartition>,
    span: SpanBasis<F>,
    index: MonomialIndex,
}

impl<F: Coeff> JackBasis<F> {
    pub fn partitions(&self) -> &[PlanePartition] {
        &self.partitions
    }

    /// The unique 3-Jack expansion of `s`, or `NotInSpan`.
    pub fn expand(&self, s: &FockState<F>) -> Result<PPVector<F>> {
        let x = self.span.expand(&self.index.dense(s)?)?;
        let mut out = PPVector::zero();
        for (pi, c) in self.partitions.iter().zip(x) {
            out.add_term(pi.clone(), c);
        }
        Ok(out)
    }
}

/// `P_{n,j} = b_{-n,j} |0>`.
pub fn compute_p<F: Coeff>(n: u32, j: usize, cfg: &ModelConfig<F>) -> Result<FockState<F>> {
    let op = mode_b(j, -(n as i64), cfg, n)?;
    apply_operator(&op, &FockState::vacuum(), cfg)
}

/// A monomial in the `P_{n,j}`: sorted `(j, n)` pairs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct PWord(Vec<(u8, u32)>);

impl PWord {
    pub fn new(mut f: Vec<(u8, u32)>) -> Self {
        f.sort();
        PWord(f)
    }

    pub fn factors(&self) -> &[(u8, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|f| f.1).sum()
    }

    fn grouped(&self) -> Vec<((u8, u32), usize)> {
        let mut out: Vec<((u8, u32), usize)> = Vec::new();
        for f in &self.0 {
            match out.last_mut() {
                Some((g, k)) if g == f => *k += 1,
                _ => out.push((*f, 1)),
            }
        }
        out
    }

    pub fn to_latex(&self) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.grouped()
            .iter()
            .map(|((j, n), k)| if *k == 1 { format!("P_{{{n},{j}}}") } else { format!("P_{{{n},{j}}}^{{{k}}}") })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for PWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = self
            .grouped()
            .iter()
            .map(|((j, n), k)| if *k == 1 { format!("P{n}_{j}") } else { format!("P{n}_{j}^{k}") })
            .collect();
        write!(f, "{}", s.join("*"))
    }
}

impl fmt::Debug for PWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All P-words of a degree with spins up to `max_j`, `n >= j`.
pub fn p_words(degree: u32, max_j: u8) -> Vec<PWord> {
    let gens: Vec<(u8, u32)> = (1..=max_j).flat_map(|j| (j as u32..=degree).map(move |n| (j, n))).collect();
    fn rec(rem: u32, start: usize, gens: &[(u8, u32)], cur: &mut Vec<(u8, u32)>, out: &mut Vec<PWord>) {
        if rem == 0 {
            out.push(PWord::new(cur.clone()));
            return;
        }
        for (i, g) in gens.iter().enumerate().skip(start) {
            if g.1 <= rem {
                cur.push(*g);
                rec(rem - g.1, i, gens, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(degree, 0, &gens, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The P-coordinate system up to a level: generators, word expansions and elimination data.
pub struct PBasis<F: Coeff> {
    cfg: ModelConfig<F>,
    generators: BTreeMap<(u8, u32), FockState<F>>,
    levels: Vec<PLevel<F>>,
}

struct PLevel<F: Coeff> {
    words: Vec<PWord>,
    states: Vec<FockState<F>>,
    span: SpanBasis<F>,
    index: MonomialIndex,
}

impl<F: Coeff> PBasis<F> {
    /// Spins up to `min(3, N)`. Fails with `RankDeficient` if some level's words are dependent.
    pub fn compute(up_to: usize, cfg: &ModelConfig<F>) -> Result<Self> {
        let max_j = cfg.n.min(3) as u8;
        let mut generators = BTreeMap::new();
        for j in 1..=max_j {
            for n in j as u32..=up_to as u32 {
                generators.insert((j, n), compute_p(n, j as usize, cfg)?);
            }
        }
        let mut levels = Vec::new();
        for d in 0..=up_to as u32 {
            let words = p_words(d, max_j);
            let states: Vec<FockState<F>> = words
                .iter()
                .map(|w| w.factors().iter().fold(FockState::vacuum(), |acc, g| acc.mul(&generators[g])))
                .collect();
            let index = MonomialIndex::new(&basis_monomials(d, cfg.n));
            let cols = states.iter().map(|s| index.dense(s)).collect::<Result<Vec<_>>>()?;
            let span = SpanBasis::new(&cols, index.len(), d as usize)?;
            levels.push(PLevel { words, states, span, index });
        }
        Ok(PBasis { cfg: cfg.clone(), generators, levels })
    }

    pub fn config(&self) -> &ModelConfig<F> {
        &self.cfg
    }

    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn generator(&self, j: u8, n: u32) -> Option<&FockState<F>> {
        self.generators.get(&(j, n))
    }

    /// Words and their Fock expansions at a level.
    pub fn words(&self, d: usize) -> Vec<(&PWord, &FockState<F>)> {
        self.levels.get(d).map(|l| l.words.iter().zip(&l.states).collect()).unwrap_or_default()
    }

    /// The unique expansion of a level-`d` state over P-words (zero coefficients dropped).
    pub fn to_p_basis(&self, v: &FockState<F>, d: usize) -> Result<Vec<(PWord, F)>> {
        let l = self.levels.get(d).ok_or_else(|| Error::Unsupported(format!("P-basis level {d} is not computed")))?;
        if let Some(k) = v.homogeneous_degree() {
            if k as usize != d {
                return Err(Error::Consistency(format!("state of degree {k} expanded at level {d}")));
            }
        }
        let x = l.span.expand(&l.index.dense(v)?)?;
        Ok(l.words.iter().cloned().zip(x).filter(|(_, c)| !c.is_zero()).collect())
    }
}

/// Apply `prod b_{-n,j}` for a P-word; the last factor acts first.
pub fn apply_b_word<F: Coeff>(
    w: &PWord,
    s: &FockState<F>,
    cfg: &ModelConfig<F>,
    cutoff: u32,
    cache: &mut HashMap<(u8, u32), ModeOperator<F>>,
) -> Result<FockState<F>> {
    let mut cur = s.clone();
    for (j, n) in w.factors().iter().rev() {
        if !cache.contains_key(&(*j, *n)) {
            cache.insert((*j, *n), mode_b(*j as usize, -(*n as i64), cfg, cutoff)?);
        }
        cur = apply_operator(&cache[&(*j, *n)], &cur, cfg)?;
    }
    Ok(cur)
}

/// `J_pi x J_pi' := J_pi({b_{-n,j}}) . J_pi'`, re-expanded in 3-Jacks.
///
/// The table must reach `|pi| + |pi'|` and the P-basis `|pi|`.
pub fn lr_product<F: Coeff>(table: &JackTable<F>, pb: &PBasis<F>, pi: &PlanePartition, rho: &PlanePartition) -> Result<PPVector<F>> {
    let cfg = table.config();
    let total = pi.size() + rho.size();
    let coeffs = pb.to_p_basis(table.jack(pi)?, pi.size())?;
    let mut cache = HashMap::new();
    let mut acc = FockState::zero();
    for (w, c) in &coeffs {
        acc.add_scaled(&apply_b_word(w, table.jack(rho)?, cfg, total as u32, &mut cache)?, c);
    }
    table.basis(total)?.expand(&acc)
}

/// Parameter specializations on the line `N = 1`, `h2 = -1/h1`.
#[derive(Clone, Debug, PartialEq)]
pub enum Degeneration {
    /// `h1 = 1, h2 = -1`
    Schur,
    /// `h1 = h, h2 = -1/h`
    Jack2d(BigRational),
}

impl Degeneration {
    pub fn h1(&self) -> BigRational {
        match self {
            Degeneration::Schur => BigRational::from_integer(1.into()),
            Degeneration::Jack2d(h) => h.clone(),
        }
    }
}

fn check_jack_line(cfg: &ModelConfig<RatFunc>) -> Result<()> {
    let expected = -(RatFunc::h1().inv()?);
    if cfg.n != 1 || cfg.h1 != RatFunc::h1() || cfg.h2 != expected {
        return Err(Error::Unsupported("degenerations need N = 1 and h2 = -1/h1".into()));
    }
    Ok(())
}

/// Specialize a symbolic expansion; keys become 2D partitions (row lengths).
///
/// Fails if a coefficient has a pole at the point or a multi-layer diagram survives.
pub fn degenerate(v: &PPVector<RatFunc>, cfg: &ModelConfig<RatFunc>, target: &Degeneration) -> Result<BTreeMap<Vec<u32>, BigRational>> {
    check_jack_line(cfg)?;
    let h1 = target.h1();
    let h2 = -h1.recip();
    let mut out = BTreeMap::new();
    for (pi, c) in v.iter() {
        let x = c
            .eval(&h1, &h2)
            .map_err(|e| Error::Consistency(format!("coefficient of {pi} at h1 = {h1}: {e}")))?;
        if x.is_zero() {
            continue;
        }
        let rows = pi
            .as_young_rows()
            .ok_or_else(|| Error::Consistency(format!("multi-layer diagram {pi} survives with coefficient {x}")))?;
        out.insert(rows, x);
    }
    Ok(out)
}

/// Specialize a symbolic Fock state at a point of the same line.
pub fn degenerate_state(s: &FockState<RatFunc>, cfg: &ModelConfig<RatFunc>, target: &Degeneration) -> Result<FockState<BigRational>> {
    check_jack_line(cfg)?;
    let h1 = target.h1();
    let h2 = -h1.recip();
    s.try_map(|c| c.eval(&h1, &h2).map_err(Error::from))
}

/// One identity between boson operators and Yangian words.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    pub evaluations: usize,
    pub witness: Option<String>,
}

fn factorial<F: Coeff>(n: usize) -> F {
    (1..=n as i64).fold(F::one(), |a, k| a * F::from_i64(k))
}

/// `ad_{e1}^k e0` applied to a state.
fn ad_e1_e0<F: Coeff>(k: usize, s: &FockState<F>, e0: &ModeOperator<F>, e1: &ModeOperator<F>, cfg: &ModelConfig<F>) -> Result<FockState<F>> {
    if k == 0 {
        return apply_operator(e0, s, cfg);
    }
    let a = apply_operator(e1, &ad_e1_e0(k - 1, s, e0, e1, cfg)?, cfg)?;
    let b = ad_e1_e0(k - 1, &apply_operator(e1, s, cfg)?, e0, e1, cfg)?;
    Ok(a.sub(&b))
}

/// `sum_{i+j=n} :b_{i,1} b_{j,1}:` truncated for inputs of degree `<= cutoff`.
pub fn b1_pair_sum<F: Coeff>(n: i64, cfg: &ModelConfig<F>, cutoff: u32) -> ModeOperator<F> {
    let mut op = ModeOperator::zero(-n).with_cutoff(cutoff);
    for j in 1..=cfg.n as u8 {
        for l in 1..=cfg.n as u8 {
            mode_sum(&mut op, &F::one(), &[j, l], n, cutoff, |_| 1);
        }
    }
    op
}

/// `sum_{m>=1} b_{-m-1,1} b_{m,1}` truncated for inputs of degree `<= cutoff`.
fn b1_lowering_sum<F: Coeff>(cfg: &ModelConfig<F>, cutoff: u32) -> ModeOperator<F> {
    let mut op = ModeOperator::zero(1).with_cutoff(cutoff);
    for j in 1..=cfg.n as u8 {
        for l in 1..=cfg.n as u8 {
            for m in 1..=cutoff as i64 {
                op.push_product(F::one(), &[(j, -m - 1), (l, m)]);
            }
        }
    }
    op
}

fn compare_on_states<F: Coeff>(
    name: String,
    states: &[FockState<F>],
    lhs: impl Fn(&FockState<F>) -> Result<FockState<F>>,
    rhs: impl Fn(&FockState<F>) -> Result<FockState<F>>,
) -> Result<IdentityCheck> {
    for (i, s) in states.iter().enumerate() {
        let (a, b) = (lhs(s)?, rhs(s)?);
        if a != b {
            return Ok(IdentityCheck { name, passed: false, evaluations: i + 1, witness: Some(format!("on {s}: {a} vs {b}")) });
        }
    }
    Ok(IdentityCheck { name, passed: true, evaluations: states.len(), witness: None })
}

/// Boson-side identities: `b_{-n,1} = ad_{e1}^{n-1} e0 / (n-1)!` for `n <= n_max`, and the two
/// forms of `b_{-1,2}` in terms of `e1`, on states of degree `<= max_level`.
pub fn b_ad_boson_checks<F: Coeff>(n_max: usize, max_level: u32, cfg: &ModelConfig<F>) -> Result<Vec<IdentityCheck>> {
    let states: Vec<FockState<F>> = crate::fock::basis_states(max_level, cfg.n);
    let top = max_level + n_max as u32;
    let e0 = e0_boson(cfg);
    let e1 = e1_boson(cfg, top);
    let mut out = Vec::new();
    for n in 1..=n_max {
        let b = mode_b(1, -(n as i64), cfg, top)?;
        let scale = factorial::<F>(n - 1).inv()?;
        out.push(compare_on_states(
            format!("b_{{-{n},1}} = ad_e1^{} e0 / {}!", n - 1, n - 1),
            &states,
            |s| apply_operator(&b, s, cfg),
            |s| Ok(ad_e1_e0(n - 1, s, &e0, &e1, cfg)?.scaled(&scale)),
        )?);
    }
    let b12 = mode_b(2, -1, cfg, top)?;
    let low = b1_lowering_sum(cfg, top);
    for (label, e1_scale, sum_scale) in [
        ("b_{-1,2} = e1 - 2 sum b_{-m-1,1} b_{m,1}", F::one(), F::from_i64(-2)),
        ("b_{-1,2} = 2 e1 - (2/psi0) sum b_{-m-1,1} b_{m,1}", F::from_i64(2), F::from_i64(-2).checked_div(&cfg.psi0)?),
    ] {
        out.push(compare_on_states(
            label.to_string(),
            &states,
            |s| apply_operator(&b12, s, cfg),
            |s| {
                let mut r = apply_operator(&e1, s, cfg)?.scaled(&e1_scale);
                r.add_scaled(&apply_operator(&low, s, cfg)?, &sum_scale);
                Ok(r)
            },
        )?);
    }
    Ok(out)
}

/// `ad_{e1}^{k}([e2, e0] - sigma3 [e1, e0]) / k!` as a Yangian expression.
pub fn spin2_yangian_expr<F: Coeff>(k: usize, cfg: &ModelConfig<F>) -> Result<OpExpr<F>> {
    let mut x = OpExpr::comm(F::one(), Gen::E(2), Gen::E(0)).plus(OpExpr::comm(-cfg.sigma3.clone(), Gen::E(1), Gen::E(0)));
    for _ in 0..k {
        x = OpExpr::comm_left(Gen::E(1), &x);
    }
    Ok(x.scaled(&factorial::<F>(k).inv()?))
}

/// `b_{-(n+1),2} = ad_{e1}^{n-1}([e2,e0] - sigma3 [e1,e0])/(n-1)! - sum_{i+j=-(n+1)} :b_{i,1} b_{j,1}:`,
/// compared in the 3-Jack basis on every `J_pi` with `|pi| + n + 1 <= table level`.
pub fn b_ad_spin2_check<F: Coeff>(n: usize, table: &JackTable<F>) -> Result<IdentityCheck> {
    if n == 0 {
        return Err(Error::Unsupported("the spin-2 ad formula starts at n = 1".into()));
    }
    let cfg = table.config();
    let rep = YangianRep::new(cfg.clone());
    let top = table.max_level();
    let expr = spin2_yangian_expr(n - 1, cfg)?;
    let name = format!("b_{{-{},2}} = ad_e1^{} ([e2,e0] - s3 [e1,e0]) / {}! - sum :b b:", n + 1, n - 1, n - 1);
    if top < n + 1 {
        return Err(Error::Unsupported(format!("{name}: the table stops at level {top}")));
    }
    let deg = n as i64 + 1;
    let b2 = mode_b(2, -deg, cfg, top as u32)?;
    let pairs = b1_pair_sum(-deg, cfg, top as u32);
    let mut evaluations = 0;
    for size in 0..=top - n - 1 {
        let basis = table.basis(size + n + 1)?;
        for (pi, v) in table.level(size).expect("computed") {
            let lhs = basis.expand(&apply_operator(&b2, v, cfg)?)?;
            let mut rhs = rep.eval(&expr, &PPVector::basis(pi.clone()))?;
            let bb = basis.expand(&apply_operator(&pairs, v, cfg)?)?;
            rhs = rhs.sub(&bb);
            evaluations += 1;
            if lhs != rhs {
                return Ok(IdentityCheck { name, passed: false, evaluations, witness: Some(format!("on J_{pi}: difference {}", lhs.sub(&rhs))) });
            }
        }
    }
    Ok(IdentityCheck { name, passed: true, evaluations, witness: None })
}

/// All identities relating boson modes to Yangian generators, up to `n_max <= 4`.
pub fn b_ad_identity_check<F: Coeff>(n_max: usize, table: &JackTable<F>) -> Result<Vec<IdentityCheck>> {
    if n_max > 4 {
        return Err(Error::Unsupported("ad-identities are checked for n <= 4".into()));
    }
    let cfg = table.config();
    let mut out = b_ad_boson_checks(n_max, 3, cfg)?;
    for n in 1..n_max {
        if n + 1 <= table.max_level() {
            out.push(b_ad_spin2_check(n, table)?);
        }
    }
    Ok(out)
}
