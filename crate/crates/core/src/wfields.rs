//! Composite fields of the N boson currents and their modes.
//!
//! A [`Field`] is a linear combination of normal-ordered monomials in the
//! derivatives `d^k J_j` of the slice currents. Its modes follow
//! `X(z) = sum_n X_n z^{-n-weight}`. Normal ordering is mode normal ordering
//! (creations left); for products where one factor is linear in the currents
//! this is the OPE normal-ordered product.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::config::ModelConfig;
use crate::error::{Error, Result};
use crate::fock::{apply_operator, basis_states, FockState, ModeOperator};
use crate::scalar::Coeff;

/// `(slice, derivative order)`.
pub type Factor = (u8, u32);

#[derive(Clone, PartialEq)]
pub struct Field<F: Coeff> {
    pub name: String,
    pub weight: u32,
    /// an overall factor `psi0^{-1/2}` kept outside the coefficients
    pub half_power: bool,
    terms: BTreeMap<Vec<Factor>, F>,
}

fn term_weight(factors: &[Factor]) -> u32 {
    factors.iter().map(|f| 1 + f.1).sum()
}

impl<F: Coeff> Field<F> {
    pub fn zero(name: impl Into<String>, weight: u32) -> Self {
        Field { name: name.into(), weight, half_power: false, terms: BTreeMap::new() }
    }

    pub fn identity() -> Self {
        let mut f = Field::zero("1", 0);
        f.terms.insert(Vec::new(), F::one());
        f
    }

    /// `d^deriv J_j`.
    pub fn current(j: u8, deriv: u32) -> Self {
        Field::monomial(F::one(), &[(j, deriv)])
    }

    pub fn monomial(c: F, factors: &[Factor]) -> Self {
        let mut key = factors.to_vec();
        key.sort();
        let mut f = Field::zero("", term_weight(&key));
        f.push(key, c);
        f
    }

    fn push(&mut self, key: Vec<Factor>, c: F) {
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

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_half_power(mut self) -> Self {
        self.half_power = true;
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Factor>, &F)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Panics on mismatched weights or square-root factors, which would be a construction bug.
    pub fn add_scaled(&mut self, other: &Field<F>, k: &F) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            self.weight = other.weight;
            self.half_power = other.half_power;
        }
        assert_eq!(self.weight, other.weight, "adding fields of different weight");
        assert_eq!(self.half_power, other.half_power, "adding fields with different sqrt(psi0) factors");
        for (key, c) in &other.terms {
            self.push(key.clone(), c.clone() * k);
        }
    }

    pub fn plus(mut self, other: &Field<F>, k: &F) -> Self {
        self.add_scaled(other, k);
        self
    }

    pub fn scaled(&self, k: &F) -> Self {
        let mut out = Field::zero(self.name.clone(), self.weight);
        out.half_power = self.half_power;
        out.add_scaled(self, k);
        out
    }

    pub fn derivative(&self) -> Self {
        let mut out = Field::zero(format!("{}'", self.name), self.weight + 1);
        out.half_power = self.half_power;
        for (key, c) in &self.terms {
            for i in 0..key.len() {
                let mut k = key.clone();
                k[i].1 += 1;
                k.sort();
                out.push(k, c.clone());
            }
        }
        out
    }

    pub fn derivative_n(&self, d: u32) -> Self {
        (0..d).fold(self.clone(), |f, _| f.derivative())
    }

    /// Normal-ordered product.
    pub fn product(&self, other: &Field<F>, cfg: &ModelConfig<F>) -> Result<Self> {
        let mut out = Field::zero(format!("({} {})", self.name, other.name), self.weight + other.weight);
        let mut scale = F::one();
        match (self.half_power, other.half_power) {
            (true, true) => scale = cfg.psi0.inv()?,
            (false, false) => {}
            _ => out.half_power = true,
        }
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut k = ka.clone();
                k.extend_from_slice(kb);
                k.sort();
                out.push(k, ca.clone() * cb * &scale);
            }
        }
        Ok(out)
    }

    /// The mode `X_n`, exact on states of degree at most `cutoff`.
    pub fn mode(&self, n: i64, cutoff: u32) -> ModeOperator<F> {
        let mut op = ModeOperator::zero(-n).with_cutoff(cutoff);
        for (key, c) in &self.terms {
            let slices: Vec<u8> = key.iter().map(|f| f.0).collect();
            let derivs: Vec<u32> = key.iter().map(|f| f.1).collect();
            mode_sum(&mut op, c, &slices, n, cutoff, |m| {
                m.iter().zip(&derivs).map(|(mi, d)| deriv_weight(*d, *mi)).product()
            });
        }
        op
    }
}

impl<F: Coeff> fmt::Display for Field<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let fs: Vec<String> = k.iter().map(|(j, d)| format!("J{}{}", j, "'".repeat(*d as usize))).collect();
                if fs.is_empty() {
                    format!("{c}")
                } else {
                    format!("({c}) :{}:", fs.join(" "))
                }
            })
            .collect();
        if self.half_power {
            write!(f, "psi0^(-1/2) [{}]", parts.join(" + "))
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl<F: Coeff> fmt::Debug for Field<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.name, self)
    }
}

/// `(d^d J)_m = (-m-1)(-m-2)...(-m-d) a_m`.
fn deriv_weight(d: u32, m: i64) -> i64 {
    (0..d as i64).map(|i| -m - 1 - i).product()
}

/// Add `c * sum_{m_1+..+m_k = n} w(m) :a_{s_1,m_1} .. a_{s_k,m_k}:` restricted to terms
/// that act on states of degree at most `cutoff`.
pub fn mode_sum<F: Coeff>(op: &mut ModeOperator<F>, c: &F, slices: &[u8], n: i64, cutoff: u32, w: impl Fn(&[i64]) -> i64) {
    let k = slices.len();
    if k == 0 {
        if n == 0 {
            op.add_scaled(&ModeOperator::identity(), c);
        }
        return;
    }
    let bound = cutoff as i64 + n.abs();
    let mut m = vec![0i64; k];
    fn rec<F: Coeff>(
        i: usize,
        partial: i64,
        pos: i64,
        m: &mut Vec<i64>,
        ctx: &mut (&mut ModeOperator<F>, &F, &[u8], i64, i64, i64),
        w: &dyn Fn(&[i64]) -> i64,
    ) {
        let (_, _, slices, n, bound, cutoff) = *ctx;
        let k = slices.len();
        if i + 1 == k {
            let last = n - partial;
            if last == 0 || last.abs() > bound {
                return;
            }
            let pos = pos + last.max(0);
            if pos > cutoff {
                return;
            }
            m[i] = last;
            let weight = w(m);
            if weight != 0 {
                let modes: Vec<(u8, i64)> = slices.iter().copied().zip(m.iter().copied()).collect();
                let coeff = ctx.1.clone() * &F::from_i64(weight);
                ctx.0.push_product(coeff, &modes);
            }
            return;
        }
        for v in -bound..=bound {
            if v == 0 {
                continue;
            }
            let np = pos + v.max(0);
            if np > cutoff {
                break;
            }
            m[i] = v;
            rec(i + 1, partial + v, np, m, ctx, w);
        }
    }
    let mut ctx = (op, c, slices, n, bound, cutoff as i64);
    rec(0, 0, 0, &mut m, &mut ctx, &w);
}

fn c<F: Coeff>(n: i64, d: i64) -> F {
    F::from_ratio(n, d)
}

/// Fock slice carrying the Miura current `J_j`. The Miura factors are ordered opposite
/// to the slice labels of the Yangian boson realization.
pub fn miura_slice(n: usize, j: u8) -> u8 {
    n as u8 + 1 - j
}

fn u1<F: Coeff>(cfg: &ModelConfig<F>) -> Field<F> {
    let mut f = Field::zero("U1", 1);
    for j in 1..=cfg.n as u8 {
        f.add_scaled(&Field::current(j, 0), &F::one());
    }
    f.named("U1")
}

/// `U_k` from the Miura transformation, `k <= 3`.
pub fn u_field<F: Coeff>(k: usize, cfg: &ModelConfig<F>) -> Result<Field<F>> {
    let n = cfg.n as u8;
    let a0 = &cfg.alpha0;
    let r = |j: u8| miura_slice(cfg.n, j);
    let mut f = Field::zero(format!("U{k}"), k as u32);
    match k {
        0 => return Ok(Field::identity().named("U0")),
        1 => return Ok(u1(cfg)),
        2 => {
            for j in 1..=n {
                for l in j + 1..=n {
                    f.add_scaled(&Field::monomial(F::one(), &[(r(j), 0), (r(l), 0)]), &F::one());
                }
                f.add_scaled(&Field::current(r(j), 1), &(a0.clone() * F::from_i64(j as i64 - 1)));
            }
        }
        3 => {
            for j in 1..=n {
                for l in j + 1..=n {
                    for q in l + 1..=n {
                        f.add_scaled(&Field::monomial(F::one(), &[(r(j), 0), (r(l), 0), (r(q), 0)]), &F::one());
                    }
                    f.add_scaled(&Field::monomial(F::one(), &[(r(j), 1), (r(l), 0)]), &(a0.clone() * F::from_i64(j as i64 - 1)));
                    f.add_scaled(&Field::monomial(F::one(), &[(r(j), 0), (r(l), 1)]), &(a0.clone() * F::from_i64(l as i64 - 2)));
                }
                let w = (j as i64 - 1) * (j as i64 - 2);
                f.add_scaled(&Field::current(r(j), 2), &(a0.clone() * a0 * c::<F>(w, 2)));
            }
        }
        _ => return Err(Error::Unsupported(format!("U{k} is not constructed beyond spin 3"))),
    }
    if f.is_zero() {
        f.weight = k as u32;
    }
    Ok(f.named(format!("U{k}")))
}

/// `V_k` in terms of the `U` fields.
pub fn v_field<F: Coeff>(k: usize, cfg: &ModelConfig<F>) -> Result<Field<F>> {
    let nn = cfg.n as i64;
    let a0 = &cfg.alpha0;
    let h1h2 = cfg.h1.clone() * &cfg.h2;
    let u1 = u_field(1, cfg)?;
    match k {
        1 => Ok(u1.named("V1")),
        2 => {
            let u2 = u_field(2, cfg)?;
            let inner = u2
                .scaled(&-F::one())
                .plus(&u1.derivative(), &(a0.clone() * c::<F>(nn - 1, 2)))
                .plus(&u1.product(&u1, cfg)?, &c(1, 2));
            Ok(inner.scaled(&-h1h2).named("V2"))
        }
        3 => {
            let u2 = u_field(2, cfg)?;
            let u3 = u_field(3, cfg)?;
            let inner = u3
                .scaled(&-F::one())
                .plus(&u1.product(&u2, cfg)?, &F::one())
                .plus(&u1.product(&u1, cfg)?.product(&u1, cfg)?, &c(-1, 3))
                .plus(&u2.derivative(), &(a0.clone() * c::<F>(nn - 2, 2)))
                .plus(&u1.derivative_n(2), &(a0.clone() * a0 * c::<F>(-(nn - 1) * (nn - 2), 12)))
                .plus(&u1.derivative().product(&u1, cfg)?, &(a0.clone() * c::<F>(-(nn - 1), 2)));
            Ok(inner.scaled(&(h1h2.clone() * &h1h2)).named("V3"))
        }
        _ => Err(Error::Unsupported(format!("V{k} is not defined beyond spin 3"))),
    }
}

/// `V2` written directly in the currents.
pub fn v2_current_form<F: Coeff>(cfg: &ModelConfig<F>) -> Field<F> {
    let nn = cfg.n as i64;
    let h1h2 = cfg.h1.clone() * &cfg.h2;
    let r = |j: u8| miura_slice(cfg.n, j);
    let mut f = Field::zero("V2", 2);
    for j in 1..=cfg.n as u8 {
        f.add_scaled(&Field::monomial(F::one(), &[(r(j), 0), (r(j), 0)]), &(h1h2.clone() * c::<F>(-1, 2)));
        f.add_scaled(&Field::current(r(j), 1), &(cfg.h3.clone() * c::<F>(nn + 1 - 2 * j as i64, 2)));
    }
    f
}

/// The `Vbar_k` tower built on `J = U1`, `k <= 4`.
pub fn vbar_field<F: Coeff>(k: usize, cfg: &ModelConfig<F>) -> Result<Field<F>> {
    let j = u1(cfg);
    let p = &cfg.psi0;
    let pinv = p.inv()?;
    let f = match k {
        1 => j.clone().with_half_power(),
        2 => j.product(&j, cfg)?.scaled(&(pinv.clone() * c::<F>(1, 2))),
        3 => j.product(&j, cfg)?.product(&j, cfg)?.scaled(&(pinv.clone() * c::<F>(1, 3))).with_half_power(),
        4 => {
            let j2 = j.product(&j, cfg)?;
            let jp = j.derivative();
            j2.product(&j2, cfg)?
                .scaled(&(pinv.clone() * &pinv * c::<F>(1, 4)))
                .plus(&jp.product(&jp, cfg)?, &(pinv.clone() * c::<F>(-3, 20)))
                .plus(&j.derivative_n(2).product(&j, cfg)?, &(pinv.clone() * c::<F>(1, 10)))
        }
        _ => return Err(Error::Unsupported(format!("Vbar{k} is not defined"))),
    };
    Ok(f.named(format!("Vbar{k}")))
}

/// The 3D boson fields `B_k` in terms of the `U` fields.
pub fn b_field<F: Coeff>(k: usize, cfg: &ModelConfig<F>) -> Result<Field<F>> {
    let nn = cfg.n as i64;
    let a0 = &cfg.alpha0;
    let h1h2 = cfg.h1.clone() * &cfg.h2;
    let u1 = u_field(1, cfg)?;
    match k {
        1 => Ok(u1.named("B1")),
        2 => {
            let inner = u_field(2, cfg)?
                .scaled(&-F::one())
                .plus(&u1.derivative(), &(a0.clone() * c::<F>(nn - 1, 2)))
                .plus(&u1.product(&u1, cfg)?, &c(nn - 1, 2 * nn));
            Ok(inner.scaled(&(h1h2 * c::<F>(-2, 1))).named("B2"))
        }
        3 => {
            let u2 = u_field(2, cfg)?;
            let inner = u_field(3, cfg)?
                .scaled(&-F::one())
                .plus(&u1.product(&u2, cfg)?, &c(nn - 2, nn))
                .plus(&u1.product(&u1, cfg)?.product(&u1, cfg)?, &c(-(nn - 1) * (nn - 2), 3 * nn * nn))
                .plus(&u2.derivative(), &(a0.clone() * c::<F>(nn - 2, 2)))
                .plus(&u1.derivative_n(2), &(a0.clone() * a0 * c::<F>(-(nn - 1) * (nn - 2), 12)))
                .plus(&u1.derivative().product(&u1, cfg)?, &(a0.clone() * c::<F>(-(nn - 1) * (nn - 2), 2 * nn)));
            Ok(inner.scaled(&(h1h2.clone() * &h1h2 * F::from_i64(6))).named("B3"))
        }
        _ => Err(Error::Unsupported(format!("B{k} is not defined beyond spin 3"))),
    }
}

pub fn mode_u<F: Coeff>(k: usize, n: i64, cfg: &ModelConfig<F>, cutoff: u32) -> Result<ModeOperator<F>> {
    Ok(u_field(k, cfg)?.mode(n, cutoff))
}

pub fn mode_v<F: Coeff>(k: usize, n: i64, cfg: &ModelConfig<F>, cutoff: u32) -> Result<ModeOperator<F>> {
    Ok(v_field(k, cfg)?.mode(n, cutoff))
}

/// Rational part of `Vbar_{k,n}`; for odd `k` the true mode carries an extra `psi0^{-1/2}`.
pub fn mode_vbar<F: Coeff>(k: usize, n: i64, cfg: &ModelConfig<F>, cutoff: u32) -> Result<ModeOperator<F>> {
    Ok(vbar_field(k, cfg)?.mode(n, cutoff))
}

/// `b_{n,k}` from the explicit mode expansion.
pub fn mode_b<F: Coeff>(k: usize, n: i64, cfg: &ModelConfig<F>, cutoff: u32) -> Result<ModeOperator<F>> {
    let nn = cfg.n as i64;
    let ns = cfg.n as u8;
    let a0 = cfg.alpha0.clone();
    let h1h2 = cfg.h1.clone() * &cfg.h2;
    let mut op = ModeOperator::zero(-n).with_cutoff(cutoff);
    let one = |_: &[i64]| 1i64;
    let r = |j: u8| miura_slice(cfg.n, j);
    match k {
        1 => {
            for j in 1..=ns {
                mode_sum(&mut op, &F::one(), &[r(j)], n, cutoff, one);
            }
        }
        2 => {
            for j in 1..=ns {
                mode_sum(&mut op, &(h1h2.clone() * c::<F>(-(nn - 1), nn)), &[r(j), r(j)], n, cutoff, one);
                for l in j + 1..=ns {
                    mode_sum(&mut op, &(h1h2.clone() * c::<F>(2, nn)), &[r(j), r(l)], n, cutoff, one);
                }
                let w = (nn + 1 - 2 * j as i64) * (-n - 1);
                mode_sum(&mut op, &(cfg.h3.clone() * F::from_i64(w)), &[r(j)], n, cutoff, one);
            }
        }
        3 => {
            let a02 = a0.clone() * &a0;
            let s = |x: i64, y: i64| c::<F>(x, y);
            for j in 1..=ns {
                let ji = j as i64;
                for l in 1..=ns {
                    let li = l as i64;
                    if j < l {
                        for q in l + 1..=ns {
                            mode_sum(&mut op, &-F::one(), &[r(j), r(l), r(q)], n, cutoff, one);
                        }
                        mode_sum(&mut op, &(a0.clone() * F::from_i64(-(ji - 1))), &[r(j), r(l)], n, cutoff, |m| -m[0] - 1);
                        mode_sum(&mut op, &(a0.clone() * F::from_i64(-(li - 2))), &[r(j), r(l)], n, cutoff, |m| -m[1] - 1);
                        mode_sum(&mut op, &(a0.clone() * s(nn - 2, 2)), &[r(j), r(l)], n, cutoff, |m| -m[0] - m[1] - 2);
                    }
                    for q in l + 1..=ns {
                        mode_sum(&mut op, &s(nn - 2, nn), &[r(j), r(l), r(q)], n, cutoff, one);
                    }
                    mode_sum(&mut op, &(a0.clone() * s((nn - 2) * (li - 1), nn)), &[r(j), r(l)], n, cutoff, |m| -m[1] - 1);
                    for q in 1..=ns {
                        mode_sum(&mut op, &s(-(nn - 1) * (nn - 2), 3 * nn * nn), &[r(j), r(l), r(q)], n, cutoff, one);
                    }
                    mode_sum(&mut op, &(a0.clone() * s(-(nn - 1) * (nn - 2), 2 * nn)), &[r(j), r(l)], n, cutoff, |m| -m[0] - 1);
                }
                let d2 = (-n - 1) * (-n - 2);
                mode_sum(&mut op, &(a02.clone() * s(-(ji - 1) * (ji - 2) * d2, 2)), &[r(j)], n, cutoff, one);
                mode_sum(&mut op, &(a02.clone() * s((nn - 2) * (ji - 1) * d2, 2)), &[r(j)], n, cutoff, one);
                mode_sum(&mut op, &(a02.clone() * s(-(nn - 1) * (nn - 2) * d2, 12)), &[r(j)], n, cutoff, one);
            }
            op = op.scaled(&(h1h2.clone() * &h1h2 * F::from_i64(6)));
        }
        _ => return Err(Error::Unsupported(format!("b-modes of spin {k} are not defined"))),
    }
    Ok(op)
}

/// `e0 = sum_j a_{j,-1}`.
pub fn e0_boson<F: Coeff>(cfg: &ModelConfig<F>) -> ModeOperator<F> {
    let mut op = ModeOperator::zero(1);
    for j in 1..=cfg.n as u8 {
        op.push_product(F::one(), &[(j, -1)]);
    }
    op
}

/// `e1 = -h1 h2 sum_j sum_{k>0} a_{j,-k-1} a_{j,k}`.
pub fn e1_boson<F: Coeff>(cfg: &ModelConfig<F>, cutoff: u32) -> ModeOperator<F> {
    let mut op = ModeOperator::zero(1).with_cutoff(cutoff);
    let c = -(cfg.h1.clone() * &cfg.h2);
    for j in 1..=cfg.n as u8 {
        for k in 1..=cutoff as i64 {
            op.push_product(c.clone(), &[(j, -k - 1), (j, k)]);
        }
    }
    op
}

/// `psi2 = -2 h1 h2 sum_j sum_{k>0} a_{j,-k} a_{j,k}`.
pub fn psi2_boson<F: Coeff>(cfg: &ModelConfig<F>, cutoff: u32) -> ModeOperator<F> {
    let mut op = ModeOperator::zero(0).with_cutoff(cutoff);
    let c = cfg.h1.clone() * &cfg.h2 * F::from_i64(-2);
    for j in 1..=cfg.n as u8 {
        for k in 1..=cutoff as i64 {
            op.push_product(c.clone(), &[(j, -k), (j, k)]);
        }
    }
    op
}

/// The cubic Cartan generator `psi3` in the boson realization.
pub fn psi3_boson<F: Coeff>(cfg: &ModelConfig<F>, cutoff: u32) -> ModeOperator<F> {
    let mut op = ModeOperator::zero(0).with_cutoff(cutoff);
    let h1h2 = cfg.h1.clone() * &cfg.h2;
    let cubic = h1h2.clone() * &h1h2 * F::from_i64(3);
    let s3 = &cfg.sigma3;
    let nn = cfg.n as i64;
    let l = cutoff as i64;
    for i in 1..=cfg.n as u8 {
        for j in 1..=l {
            for k in 1..=l - j {
                op.push_product(cubic.clone(), &[(i, -j - k), (i, j), (i, k)]);
                op.push_product(cubic.clone(), &[(i, -j), (i, -k), (i, j + k)]);
            }
        }
        for i2 in i + 1..=cfg.n as u8 {
            for k in 1..=l {
                op.push_product(s3.clone() * F::from_i64(6 * k), &[(i, -k), (i2, k)]);
            }
        }
        let diag = -4 * nn + 6 * i as i64 - 3;
        for k in 1..=l {
            op.push_product(s3.clone() * F::from_i64(diag + 3 * k), &[(i, -k), (i, k)]);
        }
    }
    op
}

/// `binom(x, k)` for any integer `x`.
pub fn binom(x: i64, k: u32) -> BigInt {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..k as i64 {
        num *= x - i;
        den *= i + 1;
    }
    num.div_floor(&den)
}

/// Expected singular part of `A(z) B(w)`: for each pole order, a sum of fields at `w`.
#[derive(Clone, Debug)]
pub struct OpeSpec<F: Coeff> {
    pub name: String,
    pub a: Field<F>,
    pub b: Field<F>,
    pub poles: Vec<(u32, Vec<Field<F>>)>,
    /// every pole up to `weight(A) + weight(B)` is listed (missing orders mean zero)
    pub complete: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct OpeOutcome {
    pub name: String,
    pub passed: bool,
    pub evaluations: usize,
    pub witness: Option<String>,
}

struct ModeCache<'a, F: Coeff> {
    fields: Vec<&'a Field<F>>,
    cutoff: u32,
    ops: HashMap<(usize, i64), ModeOperator<F>>,
}

impl<'a, F: Coeff> ModeCache<'a, F> {
    fn op(&mut self, f: usize, n: i64) -> &ModeOperator<F> {
        let (fields, cutoff) = (&self.fields, self.cutoff);
        self.ops.entry((f, n)).or_insert_with(|| fields[f].mode(n, cutoff))
    }

    fn apply(&mut self, f: usize, n: i64, s: &FockState<F>, cfg: &ModelConfig<F>) -> Result<FockState<F>> {
        let op = self.op(f, n);
        apply_operator(op, s, cfg)
    }
}

/// Check an OPE through mode commutators on all basis states of degree `<= max_level`.
///
/// Complete specs are compared as `[A_m, B_n] = sum_k binom(m+wA-1, k-1) (P_k)_{m+n}` for
/// `|m|, |n| <= range`. For partial specs each listed pole is isolated by forward differences
/// in `m` at fixed `m + n`.
pub fn ope_check<F: Coeff>(spec: &OpeSpec<F>, cfg: &ModelConfig<F>, max_level: u32, range: i64) -> Result<OpeOutcome> {
    let total = spec.a.half_power as u32 + spec.b.half_power as u32;
    let mut fields: Vec<&Field<F>> = vec![&spec.a, &spec.b];
    // (pole, field index, scale)
    let mut rhs: Vec<(u32, usize, F)> = Vec::new();
    for (k, fs) in &spec.poles {
        for f in fs {
            if f.is_zero() {
                continue;
            }
            if f.weight + k != spec.a.weight + spec.b.weight {
                return Err(Error::Consistency(format!("{}: pole {k} field {} has weight {}", spec.name, f.name, f.weight)));
            }
            let e = f.half_power as u32;
            if total < e || (total - e) % 2 == 1 {
                return Err(Error::Consistency(format!("{}: pole {k} has the wrong sqrt(psi0) parity", spec.name)));
            }
            let scale = if total - e == 2 { cfg.psi0.clone() } else { F::one() };
            fields.push(f);
            rhs.push((*k, fields.len() - 1, scale));
        }
    }
    let max_pole = spec.a.weight + spec.b.weight;
    let mut cache = ModeCache { fields, cutoff: max_level + 3 * range as u32 + max_pole, ops: HashMap::new() };
    let states: Vec<FockState<F>> = basis_states(max_level, cfg.n);
    let wa = spec.a.weight as i64;
    let mut evaluations = 0;
    let fail = |w: String| OpeOutcome { name: spec.name.clone(), passed: false, evaluations: 0, witness: Some(w) };

    if spec.complete {
        for m in -range..=range {
            for n in -range..=range {
                for s in &states {
                    let bs = cache.apply(1, n, s, cfg)?;
                    let abs = cache.apply(0, m, &bs, cfg)?;
                    let as_ = cache.apply(0, m, s, cfg)?;
                    let bas = cache.apply(1, n, &as_, cfg)?;
                    let lhs = abs.sub(&bas);
                    let mut expect = FockState::zero();
                    for (k, fi, scale) in &rhs {
                        let b = binom(m + wa - 1, k - 1);
                        if b == BigInt::from(0) {
                            continue;
                        }
                        let ps = cache.apply(*fi, m + n, s, cfg)?;
                        expect.add_scaled(&ps, &(scale.clone() * F::from_bigint(b)));
                    }
                    evaluations += 1;
                    if lhs != expect {
                        return Ok(fail(format!("m={m}, n={n}, state {s}: got {lhs}, expected {expect}")));
                    }
                }
            }
        }
    } else {
        for (k, _) in &spec.poles {
            for t in -range..=range {
                for s in &states {
                    let mut got = FockState::zero();
                    for i in 0..*k as i64 {
                        let m = i - wa + 1;
                        let n = t - m;
                        let bs = cache.apply(1, n, s, cfg)?;
                        let abs = cache.apply(0, m, &bs, cfg)?;
                        let as_ = cache.apply(0, m, s, cfg)?;
                        let bas = cache.apply(1, n, &as_, cfg)?;
                        let sign = if (*k as i64 - 1 - i) % 2 == 0 { 1 } else { -1 };
                        let coef = F::from_bigint(binom(*k as i64 - 1, i as u32) * sign);
                        got.add_scaled(&abs.sub(&bas), &coef);
                    }
                    let mut expect = FockState::zero();
                    for (kk, fi, scale) in &rhs {
                        if kk == k {
                            let ps = cache.apply(*fi, t, s, cfg)?;
                            expect.add_scaled(&ps, scale);
                        }
                    }
                    evaluations += 1;
                    if got != expect {
                        return Ok(fail(format!("pole {k}, mode {t}, state {s}: got {got}, expected {expect}")));
                    }
                }
            }
        }
    }
    Ok(OpeOutcome { name: spec.name.clone(), passed: true, evaluations, witness: None })
}

/// Compare two operators on every basis state of degree `<= max_level`.
pub fn operators_agree<F: Coeff>(a: &ModeOperator<F>, b: &ModeOperator<F>, cfg: &ModelConfig<F>, max_level: u32) -> Result<Option<String>> {
    for s in basis_states::<F>(max_level, cfg.n) {
        let x = apply_operator(a, &s, cfg)?;
        let y = apply_operator(b, &s, cfg)?;
        if x != y {
            return Ok(Some(format!("state {s}: {x} vs {y}")));
        }
    }
    Ok(None)
}

/// `c2 = -(psi0 sigma2 + psi0^3 sigma3^2)`.
pub fn c2_value<F: Coeff>(cfg: &ModelConfig<F>) -> F {
    let p = &cfg.psi0;
    -(p.clone() * &cfg.sigma2 + p.pow(3) * &cfg.sigma3 * &cfg.sigma3)
}

/// `prod (k + psi0 h_a h_b)` over the three pairs.
pub fn lambda_product<F: Coeff>(k: i64, cfg: &ModelConfig<F>) -> F {
    let p = &cfg.psi0;
    let kk = F::from_i64(k);
    let f = |x: &F, y: &F| kk.clone() + p.clone() * x * y;
    f(&cfg.h1, &cfg.h2) * f(&cfg.h1, &cfg.h3) * f(&cfg.h2, &cfg.h3)
}

/// `c2^B = -2 (1 + psi0 sigma2 + psi0^3 sigma3^2)`.
pub fn c2b_value<F: Coeff>(cfg: &ModelConfig<F>) -> F {
    (F::one() - c2_value(cfg)) * F::from_i64(-2)
}

/// `c3^B = (6/psi0) prod (1 + psi0 h h) prod (2 + psi0 h h)`.
pub fn c3b_value<F: Coeff>(cfg: &ModelConfig<F>) -> Result<F> {
    Ok(F::from_i64(6).checked_div(&cfg.psi0)? * lambda_product(1, cfg) * lambda_product(2, cfg))
}

/// One OPE as displayed, plus a corrected form when the display does not hold.
#[derive(Clone, Debug)]
pub struct OpeEntry<F: Coeff> {
    pub displayed: OpeSpec<F>,
    pub corrected: Option<OpeSpec<F>>,
    pub note: &'static str,
}

fn spec<F: Coeff>(name: &str, a: &Field<F>, b: &Field<F>, poles: Vec<(u32, Vec<Field<F>>)>, complete: bool) -> OpeSpec<F> {
    OpeSpec { name: name.to_string(), a: a.clone(), b: b.clone(), poles, complete }
}

fn entry<F: Coeff>(displayed: OpeSpec<F>) -> OpeEntry<F> {
    OpeEntry { displayed, corrected: None, note: "" }
}

/// V1..V3 and their OPEs.
pub fn w_opes<F: Coeff>(cfg: &ModelConfig<F>) -> Result<Vec<OpeEntry<F>>> {
    let id = Field::<F>::identity();
    let q = |x: i64, y: i64| F::from_ratio(x, y);
    let v1 = v_field(1, cfg)?;
    let v2 = v_field(2, cfg)?;
    let v3 = v_field(3, cfg)?;
    let u1 = u_field(1, cfg)?;
    let psi0 = cfg.psi0.clone();
    let pinv = psi0.inv()?;
    let nn = cfg.n as i64;
    let c2 = c2_value(cfg);
    let v2v3 = |pref: &F| {
        spec(
            "V2 V3",
            &v2,
            &v3,
            vec![(4, vec![v1.scaled(&(-(pref.clone() * &c2)))]), (2, vec![v3.scaled(&q(3, 1))]), (1, vec![v3.derivative()])],
            true,
        )
    };
    // 4N + (N+2)N(N-2) alpha0^2 h1 h2
    let a2h = cfg.alpha0.clone() * &cfg.alpha0 * &cfg.h1 * &cfg.h2;
    let y = F::from_i64(4 * nn) + a2h.clone() * F::from_i64((nn + 2) * nn * (nn - 2));
    let x = F::from_i64(nn) + a2h * F::from_i64((nn + 1) * nn * (nn - 1));
    let c3 = x * &y * &pinv * q(1, 6) - cfg.h3.clone() * &cfg.h3 * q(nn * nn, 2);
    let uu = u1.product(&u1, cfg)?;
    let s = cfg.h3.clone() * &cfg.sigma3 * q(3 * nn, 2);
    let v3v3 = |pref: &F| {
        let p4 = v2.scaled(&(pref.clone() * &y)).plus(&uu, &s);
        spec(
            "V3 V3",
            &v3,
            &v3,
            vec![(6, vec![id.scaled(&c3)]), (5, vec![]), (4, vec![p4.clone()]), (3, vec![p4.derivative().scaled(&q(1, 2))])],
            false,
        )
    };
    Ok(vec![
        entry(spec("V1 V1", &v1, &v1, vec![(2, vec![id.scaled(&psi0)])], true)),
        entry(spec("V2 V1", &v2, &v1, vec![(2, vec![v1.clone()]), (1, vec![v1.derivative()])], true)),
        entry(spec(
            "V2 V2",
            &v2,
            &v2,
            vec![(4, vec![id.scaled(&(c2.clone() * q(1, 2)))]), (2, vec![v2.scaled(&q(2, 1))]), (1, vec![v2.derivative()])],
            true,
        )),
        entry(spec("V1 V3", &v1, &v3, vec![(2, vec![v2.scaled(&q(-2, 1))])], true)),
        OpeEntry {
            displayed: v2v3(&psi0),
            corrected: Some(v2v3(&pinv)),
            note: "quartic pole carries 1/psi0, not psi0",
        },
        OpeEntry {
            displayed: v3v3(&psi0),
            corrected: Some(v3v3(&pinv)),
            note: "V2 term at the quartic pole carries 1/psi0, not psi0; central term sits at the sixth-order pole",
        },
    ])
}

/// The `Vbar` tower OPEs.
pub fn vbar_opes<F: Coeff>(cfg: &ModelConfig<F>) -> Result<Vec<OpeEntry<F>>> {
    let id = Field::<F>::identity();
    let q = |x: i64, y: i64| F::from_ratio(x, y);
    let vb: Vec<Field<F>> = (1..=4).map(|k| vbar_field(k, cfg)).collect::<Result<_>>()?;
    let v2 = v_field(2, cfg)?;
    let v1_poles = vec![(2, vec![vb[0].clone()]), (1, vec![vb[0].derivative()])];
    Ok(vec![
        entry(spec("Vbar1 Vbar1", &vb[0], &vb[0], vec![(2, vec![id.clone()])], true)),
        OpeEntry {
            displayed: spec("Vbar1 Vbar2", &vb[0], &vb[1], v1_poles.clone(), true),
            corrected: Some(spec("Vbar2 Vbar1", &vb[1], &vb[0], v1_poles, true)),
            note: "the displayed singular part is that of Vbar2(z) Vbar1(w)",
        },
        entry(spec(
            "Vbar2 Vbar2",
            &vb[1],
            &vb[1],
            vec![(4, vec![id.scaled(&q(1, 2))]), (2, vec![vb[1].scaled(&q(2, 1))]), (1, vec![vb[1].derivative()])],
            true,
        )),
        entry(spec("Vbar1 Vbar3", &vb[0], &vb[2], vec![(2, vec![vb[1].scaled(&q(2, 1))])], true)),
        entry(spec(
            "Vbar2 Vbar3",
            &vb[1],
            &vb[2],
            vec![(4, vec![vb[0].clone()]), (2, vec![vb[2].scaled(&q(3, 1))]), (1, vec![vb[2].derivative()])],
            true,
        )),
        entry(spec(
            "Vbar3 Vbar3",
            &vb[2],
            &vb[2],
            vec![
                (6, vec![id.scaled(&q(2, 3))]),
                (4, vec![vb[1].scaled(&q(4, 1))]),
                (3, vec![vb[1].derivative().scaled(&q(2, 1))]),
                (2, vec![vb[3].scaled(&q(4, 1)), vb[1].derivative_n(2).scaled(&q(3, 5))]),
                (1, vec![vb[3].derivative().scaled(&q(2, 1)), vb[1].derivative_n(3).scaled(&q(2, 15))]),
            ],
            true,
        )),
        entry(spec(
            "Vbar1 Vbar4",
            &vb[0],
            &vb[3],
            vec![
                (4, vec![vb[0].scaled(&q(3, 5))]),
                (3, vec![vb[0].derivative().scaled(&q(-3, 5))]),
                (2, vec![vb[2].scaled(&q(3, 1)), vb[0].derivative_n(2).scaled(&q(1, 10))]),
            ],
            true,
        )),
        entry(spec(
            "Vbar2 Vbar4",
            &vb[1],
            &vb[3],
            vec![(4, vec![vb[1].scaled(&q(21, 5))]), (2, vec![vb[3].scaled(&q(4, 1))]), (1, vec![vb[3].derivative()])],
            true,
        )),
        entry(spec(
            "Vbar3 Vbar4",
            &vb[2],
            &vb[3],
            vec![(6, vec![vb[0].scaled(&q(2, 1))]), (4, vec![vb[2].scaled(&q(54, 5))]), (3, vec![vb[2].derivative().scaled(&q(18, 5))])],
            false,
        )),
        entry(spec(
            "Vbar4 Vbar4",
            &vb[3],
            &vb[3],
            vec![
                (8, vec![id.scaled(&q(9, 5))]),
                (6, vec![vb[1].scaled(&q(72, 5))]),
                (5, vec![vb[1].derivative().scaled(&q(36, 5))]),
                (4, vec![vb[3].scaled(&q(114, 5)), vb[1].derivative_n(2).scaled(&q(108, 50))]),
                (3, vec![vb[3].derivative().scaled(&q(57, 5)), vb[1].derivative_n(3).scaled(&q(12, 25))]),
            ],
            false,
        )),
        entry(spec(
            "V2 Vbar2",
            &v2,
            &vb[1],
            vec![(4, vec![id.scaled(&q(1, 2))]), (2, vec![vb[1].scaled(&q(2, 1))]), (1, vec![vb[1].derivative()])],
            true,
        )),
    ])
}

/// The 3D boson field OPEs.
pub fn b_opes<F: Coeff>(cfg: &ModelConfig<F>) -> Result<Vec<OpeEntry<F>>> {
    let id = Field::<F>::identity();
    let q = |x: i64, y: i64| F::from_ratio(x, y);
    let b1 = b_field(1, cfg)?;
    let b2 = b_field(2, cfg)?;
    let b3 = b_field(3, cfg)?;
    let l2_over_psi0 = lambda_product(2, cfg) * &cfg.psi0.inv()?;
    let b3b3 = |lead: F| {
        spec(
            "B3 B3",
            &b3,
            &b3,
            vec![
                (6, vec![id.scaled(&c3b_value(cfg).expect("psi0 is nonzero"))]),
                (5, vec![]),
                (4, vec![b2.scaled(&lead)]),
                (3, vec![b2.derivative().scaled(&(lead.clone() * q(1, 2)))]),
            ],
            false,
        )
    };
    Ok(vec![
        entry(spec("B1 B2", &b1, &b2, vec![], true)),
        entry(spec(
            "B2 B2",
            &b2,
            &b2,
            vec![(4, vec![id.scaled(&c2b_value(cfg))]), (2, vec![b2.scaled(&q(4, 1))]), (1, vec![b2.derivative().scaled(&q(2, 1))])],
            true,
        )),
        entry(spec("B1 B3", &b1, &b3, vec![], true)),
        entry(spec("B2 B3", &b2, &b3, vec![(2, vec![b3.scaled(&q(6, 1))]), (1, vec![b3.derivative().scaled(&q(2, 1))])], true)),
        OpeEntry {
            displayed: b3b3(l2_over_psi0.clone() * F::from_i64(2 * (cfg.n as i64 - 1))),
            corrected: Some(b3b3(l2_over_psi0 * F::from_i64(-18))),
            note: "quartic-pole prefactor is -18, the value fixed by c3^B and c2^B, not 2(N-1)",
        },
    ])
}

/// The B3 B3 central term alone.
pub fn b3b3_central<F: Coeff>(cfg: &ModelConfig<F>) -> Result<OpeSpec<F>> {
    let b3 = b_field(3, cfg)?;
    Ok(spec("B3 B3 central", &b3, &b3, vec![(6, vec![Field::identity().scaled(&c3b_value(cfg)?)])], false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{vacuum_coefficient, FockState};
    use crate::ratfunc::RatFunc;
    use num_traits::Zero;

    #[test]
    fn u1_mode_is_sum_of_slices() {
        let cfg = ModelConfig::symbolic(2).unwrap();
        let a = mode_u(1, -1, &cfg, 4).unwrap();
        let s = apply_operator(&a, &FockState::vacuum(), &cfg).unwrap();
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn u2_vanishes_at_one_slice() {
        let cfg = ModelConfig::symbolic(1).unwrap();
        assert!(u_field(2, &cfg).unwrap().is_zero());
    }

    #[test]
    fn u1_two_point_function() {
        let cfg = ModelConfig::symbolic(3).unwrap();
        let up = mode_u(1, 1, &cfg, 2).unwrap();
        let dn = mode_u(1, -1, &cfg, 2).unwrap();
        let s = apply_operator(&up, &apply_operator(&dn, &FockState::vacuum(), &cfg).unwrap(), &cfg).unwrap();
        assert_eq!(vacuum_coefficient(&s), cfg.psi0);
    }

    #[test]
    fn b_modes_match_field_form() {
        let cfg = ModelConfig::symbolic(3).unwrap();
        for k in 1..=3 {
            let f = b_field(k, &cfg).unwrap();
            for n in [-2i64, 0, 1] {
                let a = mode_b(k, n, &cfg, 4).unwrap();
                let b = f.mode(n, 4);
                assert_eq!(operators_agree(&a, &b, &cfg, 3).unwrap(), None, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn p12_vanishes() {
        let cfg = ModelConfig::symbolic(2).unwrap();
        let op = mode_b(2, -1, &cfg, 2).unwrap();
        assert!(apply_operator(&op, &FockState::vacuum(), &cfg).unwrap().is_zero());
    }

    #[test]
    fn binomial_negative_top() {
        assert_eq!(binom(-1, 2), BigInt::from(1));
        assert_eq!(binom(-2, 3), BigInt::from(-4));
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(2, 3), BigInt::zero());
    }

    #[test]
    fn psi3_on_one_box() {
        let cfg = ModelConfig::<RatFunc>::symbolic(2).unwrap();
        let op = psi3_boson(&cfg, 3);
        let e0 = e0_boson(&cfg);
        let s = apply_operator(&e0, &FockState::vacuum(), &cfg).unwrap();
        let t = apply_operator(&op, &s, &cfg).unwrap();
        let lam = cfg.sigma3.clone() * &cfg.psi0 * RatFunc::from_i64(2);
        assert_eq!(t, s.scaled(&lam));
    }
}
