//! Sparse bivariate integer polynomials in `h1`, `h2`.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`] under graded
//! lexicographic order, so two equal polynomials always have identical
//! term maps and the leading term is the last entry.
//!
//! The gcd is the heuristic integer gcd (evaluate, take integer gcd,
//! reinterpolate, verify by division) with a primitive-PRS fallback.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exponent pair `h1^d1 * h2^d2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub d1: u32,
    pub d2: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { d1: 0, d2: 0 };

    pub fn new(d1: u32, d2: u32) -> Self {
        Monomial { d1, d2 }
    }

    pub fn degree(&self) -> u32 {
        self.d1 + self.d2
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.d1 <= other.d1 && self.d2 <= other.d2
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.d1.cmp(&other.d1))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `Z[h1, h2]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn one() -> Self {
        ParamPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = ParamPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::ONE, c);
        }
        p
    }

    pub fn h1() -> Self {
        ParamPoly::monomial(BigInt::one(), Monomial::new(1, 0))
    }

    pub fn h2() -> Self {
        ParamPoly::monomial(BigInt::one(), Monomial::new(0, 1))
    }

    pub fn monomial(c: BigInt, m: Monomial) -> Self {
        let mut p = ParamPoly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(it: I) -> Self {
        let mut p = ParamPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::ONE)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().next_back().map(|m| m.degree()).unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_default()
    }

    /// Positive gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Divide every coefficient by `c`; the division must be exact.
    pub fn div_integer(&self, c: &BigInt) -> Self {
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| {
                    debug_assert!((v % c).is_zero());
                    (*m, v / c)
                })
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        ParamPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, -v)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ParamPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = Monomial::new(ma.d1 + mb.d1, ma.d2 + mb.d2);
                let prod = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(m, prod);
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        ParamPoly { terms: acc }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = ParamPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return Some(ParamPoly::zero());
        }
        if let Some(c) = divisor.as_constant() {
            if self.terms.values().all(|v| (v % &c).is_zero()) {
                return Some(ParamPoly {
                    terms: self.terms.iter().map(|(m, v)| (*m, v / &c)).collect(),
                });
            }
            return None;
        }
        let (lm, lc) = divisor.leading().map(|(m, c)| (*m, c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = ParamPoly::zero();
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            if !lm.divides(&rm) {
                return None;
            }
            let (q, r) = rc.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let qm = Monomial::new(rm.d1 - lm.d1, rm.d2 - lm.d2);
            for (m, c) in &divisor.terms {
                rem.add_term(Monomial::new(m.d1 + qm.d1, m.d2 + qm.d2), -(c * &q));
            }
            quot.add_term(qm, q);
        }
        Some(quot)
    }

    pub fn eval(&self, h1: &BigRational, h2: &BigRational) -> BigRational {
        let mut p1: Vec<BigRational> = vec![BigRational::one()];
        let mut p2: Vec<BigRational> = vec![BigRational::one()];
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            while p1.len() <= m.d1 as usize {
                let next = p1.last().unwrap() * h1;
                p1.push(next);
            }
            while p2.len() <= m.d2 as usize {
                let next = p2.last().unwrap() * h2;
                p2.push(next);
            }
            acc += BigRational::from_integer(c.clone()) * &p1[m.d1 as usize] * &p2[m.d2 as usize];
        }
        acc
    }

    /// Substitute `h2 -> value` where value is itself a polynomial.
    pub fn substitute_h2(&self, value: &ParamPoly) -> ParamPoly {
        let mut powers = vec![ParamPoly::one()];
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            while powers.len() <= m.d2 as usize {
                let next = powers.last().unwrap().mul(value);
                powers.push(next);
            }
            let t = ParamPoly::monomial(c.clone(), Monomial::new(m.d1, 0)).mul(&powers[m.d2 as usize]);
            out = out.add(&t);
        }
        out
    }

    /// Make the leading coefficient positive, returning the sign flip applied.
    pub fn normalize_sign(&self) -> (Self, bool) {
        if self.leading_coeff().is_negative() {
            (self.neg(), true)
        } else {
            (self.clone(), false)
        }
    }

    fn max_norm(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Greatest common divisor with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_sign().0;
        }
        if other.is_zero() {
            return self.normalize_sign().0;
        }
        let ca = self.content();
        let cb = other.content();
        let c = ca.gcd(&cb);
        if self.is_constant() || other.is_constant() {
            return ParamPoly::constant(c);
        }
        // common monomial factor handles the frequent h1^a h2^b denominators cheaply
        if self.terms.len() == 1 || other.terms.len() == 1 {
            let d1 = self.terms.keys().chain(other.terms.keys()).map(|m| m.d1).min().unwrap();
            let d2 = self.terms.keys().chain(other.terms.keys()).map(|m| m.d2).min().unwrap();
            return ParamPoly::monomial(c, Monomial::new(d1, d2));
        }
        if self == other {
            return self.normalize_sign().0;
        }
        let a = self.div_integer(&ca);
        let b = other.div_integer(&cb);
        let g = match heu_gcd(&a, &b) {
            Some(g) => g,
            None => prs_gcd(&a, &b),
        };
        let g = g.scale(&c);
        g.normalize_sign().0
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.div_integer(&c).normalize_sign().0
    }

    fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let deg2 = self.terms.keys().map(|m| m.d2).max().unwrap_or(0) as usize;
        let mut out: Vec<Vec<BigInt>> = vec![Vec::new(); deg2 + 1];
        for (m, c) in &self.terms {
            let row = &mut out[m.d2 as usize];
            if row.len() <= m.d1 as usize {
                row.resize(m.d1 as usize + 1, BigInt::zero());
            }
            row[m.d1 as usize] = c.clone();
        }
        out
    }

    fn from_dense(d: &[Vec<BigInt>]) -> Self {
        let mut p = ParamPoly::zero();
        for (d2, row) in d.iter().enumerate() {
            for (d1, c) in row.iter().enumerate() {
                p.add_term(Monomial::new(d1 as u32, d2 as u32), c.clone());
            }
        }
        p
    }

    fn deg2(&self) -> u32 {
        self.terms.keys().map(|m| m.d2).max().unwrap_or(0)
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for ParamPoly {
    /// Terms in descending graded-lex order, e.g. `h1^2*h2 - 3*h1 + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || *m == Monomial::ONE {
                factors.push(abs.to_string());
            }
            match m.d1 {
                0 => {}
                1 => factors.push("h1".into()),
                d => factors.push(format!("h1^{d}")),
            }
            match m.d2 {
                0 => {}
                1 => factors.push("h2".into()),
                d => factors.push(format!("h2^{d}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// univariate helpers over Z (dense, ascending)

type UPoly = Vec<BigInt>;

fn u_trim(p: &mut UPoly) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn u_content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn u_eval(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn u_max_norm(p: &[BigInt]) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}

/// Pseudo-remainder of `a` by `b` over Z.
fn u_prem(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let mut r: UPoly = a.to_vec();
    u_trim(&mut r);
    let db = b.len() - 1;
    let lb = b[db].clone();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * bc;
        }
        u_trim(&mut r);
    }
    r
}

fn u_primitive(p: &[BigInt]) -> UPoly {
    let c = u_content(p);
    if c.is_zero() {
        return Vec::new();
    }
    let mut out: UPoly = p.iter().map(|v| v / &c).collect();
    if out.last().map(|v| v.is_negative()).unwrap_or(false) {
        for v in out.iter_mut() {
            *v = -v.clone();
        }
    }
    out
}

/// gcd over Z[x] by primitive PRS; positive leading coefficient.
fn u_gcd(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let mut a: UPoly = a.to_vec();
    let mut b: UPoly = b.to_vec();
    u_trim(&mut a);
    u_trim(&mut b);
    if a.is_empty() {
        return u_primitive_signed(&b);
    }
    if b.is_empty() {
        return u_primitive_signed(&a);
    }
    let c = u_content(&a).gcd(&u_content(&b));
    let mut f = u_primitive(&a);
    let mut g = u_primitive(&b);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_empty() {
        let r = u_prem(&f, &g);
        f = g;
        g = u_primitive(&r);
    }
    let mut out = u_primitive(&f);
    for v in out.iter_mut() {
        *v *= &c;
    }
    out
}

fn u_primitive_signed(p: &[BigInt]) -> UPoly {
    let mut out = p.to_vec();
    if out.last().map(|v| v.is_negative()).unwrap_or(false) {
        for v in out.iter_mut() {
            *v = -v.clone();
        }
    }
    out
}

fn u_exact_div(a: &[BigInt], b: &[BigInt]) -> Option<UPoly> {
    let mut r: UPoly = a.to_vec();
    u_trim(&mut r);
    if r.is_empty() {
        return Some(Vec::new());
    }
    let db = b.len() - 1;
    if r.len() < b.len() {
        return None;
    }
    let lb = &b[db];
    let mut q: UPoly = vec![BigInt::zero(); r.len() - db];
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let (qc, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (i, bc) in b.iter().enumerate() {
            r[dr - db + i] -= &qc * bc;
        }
        q[dr - db] = qc;
        u_trim(&mut r);
    }
    if r.is_empty() {
        u_trim(&mut q);
        Some(q)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// heuristic gcd

fn symmetric_mod(v: &BigInt, x: &BigInt) -> BigInt {
    let mut r = v.mod_floor(x);
    if &r * 2 > *x {
        r -= x;
    }
    r
}

/// Rebuild the polynomial whose value at `x` is `h` (integer case).
fn interpolate_int(mut h: BigInt, x: &BigInt) -> UPoly {
    let mut out = Vec::new();
    while !h.is_zero() {
        let g = symmetric_mod(&h, x);
        h = (h - &g) / x;
        out.push(g);
    }
    out
}

/// Rebuild a dense bivariate (outer index = power of the evaluated variable).
fn interpolate_poly(mut h: UPoly, x: &BigInt) -> Vec<UPoly> {
    let mut out = Vec::new();
    u_trim(&mut h);
    while !h.is_empty() {
        let g: UPoly = h.iter().map(|c| symmetric_mod(c, x)).collect();
        for (hc, gc) in h.iter_mut().zip(g.iter()) {
            *hc = (&*hc - gc) / x;
        }
        u_trim(&mut h);
        let mut g = g;
        u_trim(&mut g);
        out.push(g);
    }
    out
}

fn heu_start(fn_: &BigInt, gn: &BigInt, flc: &BigInt, glc: &BigInt) -> BigInt {
    let b: BigInt = 2 * fn_.clone().min(gn.clone()) + 29;
    let sqrt_b = num_integer::Roots::sqrt(&b);
    let cand = b.clone().min(99 * sqrt_b);
    let alt = 2 * (fn_ / flc.abs()).min(gn / glc.abs()) + 2;
    cand.max(alt)
}

fn heu_next(x: &BigInt) -> BigInt {
    let s = num_integer::Roots::sqrt(&num_integer::Roots::sqrt(x));
    (BigInt::from(73794) * x * s) / BigInt::from(27011)
}

fn u_heu_gcd(f: &[BigInt], g: &[BigInt]) -> Option<UPoly> {
    let fnorm = u_max_norm(f);
    let gnorm = u_max_norm(g);
    let mut x = heu_start(&fnorm, &gnorm, f.last().unwrap(), g.last().unwrap());
    for _ in 0..6 {
        let ff = u_eval(f, &x);
        let gg = u_eval(g, &x);
        if !ff.is_zero() && !gg.is_zero() {
            let h = ff.gcd(&gg);
            let cand = u_primitive(&interpolate_int(h.clone(), &x));
            if !cand.is_empty() && u_exact_div(f, &cand).is_some() && u_exact_div(g, &cand).is_some() {
                return Some(cand);
            }
            let cff = interpolate_int(&ff / &h, &x);
            if !cff.is_empty() {
                if let Some(hh) = u_exact_div(f, &cff) {
                    let hh = u_primitive(&hh);
                    if !hh.is_empty() && u_exact_div(g, &hh).is_some() {
                        return Some(hh);
                    }
                }
            }
        }
        x = heu_next(&x);
    }
    None
}

/// Heuristic gcd of two primitive bivariate polynomials.
fn heu_gcd(a: &ParamPoly, b: &ParamPoly) -> Option<ParamPoly> {
    let fnorm = a.max_norm();
    let gnorm = b.max_norm();
    let mut x = heu_start(&fnorm, &gnorm, &a.leading_coeff(), &b.leading_coeff());
    let da = a.to_dense();
    let db = b.to_dense();
    for _ in 0..6 {
        let fa = eval_outer(&da, &x);
        let fb = eval_outer(&db, &x);
        if !fa.is_empty() && !fb.is_empty() {
            let h = match u_heu_gcd(&fa, &fb) {
                Some(h) => {
                    // u_heu_gcd returns a primitive gcd; restore the integer gcd of contents
                    let c = u_content(&fa).gcd(&u_content(&fb));
                    h.into_iter().map(|v| v * &c).collect::<UPoly>()
                }
                None => u_gcd(&fa, &fb),
            };
            let cand = ParamPoly::from_dense(&interpolate_poly(h.clone(), &x)).primitive();
            if !cand.is_zero() && a.exact_div(&cand).is_some() && b.exact_div(&cand).is_some() {
                return Some(cand);
            }
            if let Some(cf) = u_exact_div(&fa, &h) {
                let cff = ParamPoly::from_dense(&interpolate_poly(cf, &x));
                if !cff.is_zero() {
                    if let Some(hh) = a.exact_div(&cff) {
                        let hh = hh.primitive();
                        if !hh.is_zero() && b.exact_div(&hh).is_some() {
                            return Some(hh);
                        }
                    }
                }
            }
        }
        x = heu_next(&x);
    }
    None
}

/// Evaluate h2 at `x`, leaving a univariate polynomial in h1.
fn eval_outer(d: &[Vec<BigInt>], x: &BigInt) -> UPoly {
    let len = d.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut out: UPoly = vec![BigInt::zero(); len];
    for row in d.iter().rev() {
        for c in out.iter_mut() {
            *c *= x;
        }
        for (i, c) in row.iter().enumerate() {
            out[i] += c;
        }
    }
    u_trim(&mut out);
    out
}

// ---------------------------------------------------------------------------
// primitive PRS fallback in Z[h1][h2]

type BPoly = Vec<UPoly>; // index = power of h2, entries in Z[h1]

fn b_trim(p: &mut BPoly) {
    while p.last().map(|c| c.is_empty()).unwrap_or(false) {
        p.pop();
    }
}

fn b_content(p: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        g = u_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn u_mul(a: &[BigInt], b: &[BigInt]) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(&mut out);
    out
}

fn u_sub(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    u_trim(&mut out);
    out
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    b_trim(&mut r);
    let db = b.len() - 1;
    let lb = b[db].clone();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = u_mul(c, &lb);
        }
        for (i, bc) in b.iter().enumerate() {
            let t = u_mul(&lr, bc);
            r[dr - db + i] = u_sub(&r[dr - db + i], &t);
        }
        b_trim(&mut r);
    }
    r
}

fn b_div_content(p: &BPoly, c: &UPoly) -> BPoly {
    p.iter()
        .map(|x| if x.is_empty() { Vec::new() } else { u_exact_div(x, c).expect("content divides") })
        .collect()
}

fn prs_gcd(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    let mut f = a.to_dense();
    let mut g = b.to_dense();
    b_trim(&mut f);
    b_trim(&mut g);
    let cf = b_content(&f);
    let cg = b_content(&g);
    let c = u_gcd(&cf, &cg);
    f = b_div_content(&f, &cf);
    g = b_div_content(&g, &cg);
    if a.deg2() < b.deg2() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_empty() {
        let r = b_prem(&f, &g);
        f = g;
        if r.is_empty() {
            g = Vec::new();
        } else {
            let cr = b_content(&r);
            g = b_div_content(&r, &cr);
        }
    }
    let cf = b_content(&f);
    let f = b_div_content(&f, &cf);
    let out: BPoly = f.iter().map(|x| u_mul(x, &c)).collect();
    ParamPoly::from_dense(&out).primitive()
}

/// Force the fallback path; exposed for tests.
#[doc(hidden)]
pub fn gcd_prs_only(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    let ca = a.content();
    let cb = b.content();
    prs_gcd(&a.div_integer(&ca), &b.div_integer(&cb)).scale(&ca.gcd(&cb))
}

/// Small-integer view used by the parser and tests.
pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

#[allow(dead_code)]
fn to_i64(v: &BigInt) -> Option<i64> {
    v.to_i64()
}
