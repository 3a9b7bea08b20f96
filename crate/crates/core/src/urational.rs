//! Rational functions of the spectral variable `u` with coefficients in a [`Coeff`] field.

use std::fmt;

use crate::error::ScalarError;
use crate::scalar::Coeff;

/// Dense polynomial in `u`, ascending powers, no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct UPoly<F: Coeff> {
    coeffs: Vec<F>,
}

impl<F: Coeff> UPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn constant(c: F) -> Self {
        UPoly::new(vec![c])
    }

    /// `u - root`.
    pub fn linear(root: &F) -> Self {
        UPoly::new(vec![-root.clone(), F::one()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UPoly::new(Vec::new());
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a.clone() * b);
            }
        }
        UPoly::new(out)
    }

    pub fn eval(&self, u: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * u + c;
        }
        acc
    }

    /// Quotient and remainder of division by `u - root`.
    pub fn div_linear(&self, root: &F) -> (Self, F) {
        if self.coeffs.is_empty() {
            return (self.clone(), F::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![F::zero(); n - 1];
        let mut carry = F::zero();
        for i in (0..n).rev() {
            let v = self.coeffs[i].clone() + &(carry.clone() * root);
            if i == 0 {
                return (UPoly::new(q), v);
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Euclidean division over the coefficient field.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), ScalarError> {
        let dd = d.degree().ok_or(ScalarError::DivisionByZero)?;
        let lead_inv = d.lead().inv()?;
        let mut r = self.coeffs.clone();
        let mut q = vec![F::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap().clone() * &lead_inv;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] -= &(c.clone() * dc);
            }
            q[k] = c;
            r.pop();
            while r.last().map(|x| x.is_zero()).unwrap_or(false) {
                r.pop();
            }
        }
        Ok((UPoly::new(q), UPoly::new(r)))
    }

    fn monic(&self) -> Result<Self, ScalarError> {
        let inv = self.lead().inv()?;
        Ok(UPoly::new(self.coeffs.iter().map(|c| c.clone() * &inv).collect()))
    }

    pub fn gcd(&self, other: &Self) -> Result<Self, ScalarError> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return Ok(a);
        }
        a.monic()
    }
}

/// `num(u) / den(u)` kept reduced.
#[derive(Clone, PartialEq, Debug)]
pub struct URational<F: Coeff> {
    num: UPoly<F>,
    den: UPoly<F>,
}

impl<F: Coeff> URational<F> {
    pub fn new(num: UPoly<F>, den: UPoly<F>) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let g = num.gcd(&den)?;
        if g.degree().unwrap_or(0) == 0 {
            return Ok(URational { num, den });
        }
        let (n, _) = num.div_rem(&g)?;
        let (d, _) = den.div_rem(&g)?;
        Ok(URational { num: n, den: d })
    }

    /// `lead * prod(u - a) / prod(u - b)`, cancelling equal roots first.
    pub fn from_linear_factors(lead: F, num_roots: &[F], den_roots: &[F]) -> Self {
        let (nr, dr) = cancel_roots(num_roots, den_roots);
        let mut num = UPoly::constant(lead);
        for r in &nr {
            num = num.mul(&UPoly::linear(r));
        }
        let mut den = UPoly::constant(F::one());
        for r in &dr {
            den = den.mul(&UPoly::linear(r));
        }
        URational { num, den }
    }

    pub fn num(&self) -> &UPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &UPoly<F> {
        &self.den
    }

    pub fn eval(&self, u: &F) -> Result<F, ScalarError> {
        self.num.eval(u).checked_div(&self.den.eval(u))
    }

    /// `res_{u = pole}`; zero where the function is regular, an error for a pole of order two or more.
    pub fn residue_at(&self, pole: &F) -> Result<F, ScalarError> {
        let mut den = self.den.clone();
        let mut order = 0usize;
        loop {
            let (q, r) = den.div_linear(pole);
            if !r.is_zero() {
                break;
            }
            den = q;
            order += 1;
        }
        match order {
            0 => Ok(F::zero()),
            1 => self.num.eval(pole).checked_div(&den.eval(pole)),
            k => Err(ScalarError::HigherOrderPole { pole: pole.to_string(), order: k }),
        }
    }

    /// Coefficients of `u^-1 .. u^-order` in the expansion at infinity.
    pub fn u_series(&self, order: usize) -> Result<Vec<F>, ScalarError> {
        let dn = self.num.degree();
        let dd = self.den.degree().unwrap();
        if dn.map(|d| d > dd).unwrap_or(false) {
            return Err(ScalarError::NotRegularAtInfinity);
        }
        // in t = 1/u: num = u^dd * N(t), den = u^dd * D(t), N_k = num_{dd-k}
        let nt = |k: usize| -> F {
            if k > dd {
                F::zero()
            } else {
                self.num.coeffs().get(dd - k).cloned().unwrap_or_else(F::zero)
            }
        };
        let dt = |k: usize| -> F {
            if k > dd {
                F::zero()
            } else {
                self.den.coeffs()[dd - k].clone()
            }
        };
        let d0_inv = dt(0).inv()?;
        let mut s: Vec<F> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = nt(k);
            for i in 1..=k.min(dd) {
                acc -= &(dt(i) * &s[k - i]);
            }
            s.push(acc * &d0_inv);
        }
        Ok(s.into_iter().skip(1).collect())
    }
}

/// Remove roots common to both lists (with multiplicity).
pub fn cancel_roots<F: Coeff>(num: &[F], den: &[F]) -> (Vec<F>, Vec<F>) {
    let mut nr: Vec<F> = num.to_vec();
    let mut dr: Vec<F> = Vec::with_capacity(den.len());
    for d in den {
        if let Some(pos) = nr.iter().position(|x| x == d) {
            nr.swap_remove(pos);
        } else {
            dr.push(d.clone());
        }
    }
    (nr, dr)
}

impl<F: Coeff> fmt::Display for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*u"),
                _ => format!("{c}*u^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<F: Coeff> fmt::Display for URational<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}
