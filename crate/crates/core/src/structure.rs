//! Structure constants of the W_{1+infinity} mode algebra:
//! `[V_{j,m}, V_{k,n}] = sum_l C^l_{jk} N^l_{jk}(m, n) V_{l,m+n}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::config::ModelConfig;
use crate::error::{Error, Result};
use crate::fock::{apply_operator, basis_states, FockState, ModeOperator};
use crate::scalar::Coeff;
use crate::wfields::v_field;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `(a)_n = a (a+1) ... (a+n-1)`.
pub fn pochhammer(a: &BigRational, n: u32) -> BigRational {
    let mut out = BigRational::one();
    let mut x = a.clone();
    for _ in 0..n {
        out *= &x;
        x += BigRational::one();
    }
    out
}

/// `[a]_n = a (a-1) ... (a-n+1)`.
pub fn falling(a: &BigRational, n: u32) -> BigRational {
    let mut out = BigRational::one();
    let mut x = a.clone();
    for _ in 0..n {
        out *= &x;
        x -= BigRational::one();
    }
    out
}

fn factorial(n: u32) -> BigRational {
    pochhammer(&BigRational::one(), n)
}

/// `n!! `, with `(-1)!! = 0!! = 1`.
fn double_factorial(n: i64) -> BigRational {
    let mut out = BigRational::one();
    let mut k = n;
    while k > 1 {
        out *= q(k);
        k -= 2;
    }
    out
}

/// Hypergeometric `4F3(a; b; 1)`. Errors unless some upper parameter is a non-positive integer.
pub fn hyp4f3(a: &[BigRational; 4], b: &[BigRational; 3]) -> Result<BigRational> {
    let terms = a
        .iter()
        .filter(|x| x.is_integer() && *x <= &BigRational::zero())
        .map(|x| (-x).to_integer())
        .min()
        .ok_or_else(|| Error::Unsupported("4F3 series does not terminate".into()))?;
    let terms: u32 = terms.try_into().map_err(|_| Error::Unsupported("4F3 series too long".into()))?;
    let mut sum = BigRational::zero();
    for k in 0..=terms {
        let mut num = BigRational::one();
        for x in a {
            num *= pochhammer(x, k);
        }
        let mut den = factorial(k);
        for x in b {
            den *= pochhammer(x, k);
        }
        if den.is_zero() {
            return Err(Error::Unsupported("4F3 lower parameter hits a pole".into()));
        }
        sum += num / den;
    }
    Ok(sum)
}

fn check_indices(j: u32, k: u32, l: u32) -> Result<()> {
    if j == 0 || k == 0 || l + 2 > j + k || (j + k - l) % 2 == 1 {
        return Err(Error::Unsupported(format!("no structure constant for (j, k, l) = ({j}, {k}, {l})")));
    }
    Ok(())
}

/// `N^l_{jk}(m, n)`.
pub fn n_coefficient(j: u32, k: u32, l: u32, m: i64, n: i64) -> Result<BigRational> {
    check_indices(j, k, l)?;
    let (ji, ki) = (j as i64, k as i64);
    if l == 0 {
        if m + n != 0 {
            return Ok(BigRational::zero());
        }
        return Ok(BigRational::from_integer(crate::wfields::binom(m + ji - 1, j + k - 1)));
    }
    let d = j + k - l - 1;
    let pre = factorial(d) * pochhammer(&q(2 * l as i64), d);
    let mut sum = BigRational::zero();
    for s in 0..=d {
        let sign = if s % 2 == 0 { q(1) } else { q(-1) };
        let t = sign
            * BigRational::from_integer(crate::wfields::binom(d as i64, s))
            * falling(&q(ji + m - 1), d - s)
            * falling(&q(ji - m - 1), s)
            * falling(&q(ki + n - 1), s)
            * falling(&q(ki - n - 1), d - s);
        sum += t;
    }
    Ok(sum / pre)
}

/// `C^l_{jk}`; for `l = 0` the value multiplies the central charge `c_j`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum StructureConstant {
    Number(String),
    Central { coefficient: String, spin: u32 },
}

/// Rational value of `C^l_{jk}` (as a multiple of `c_j` when `l = 0`).
pub fn c_coefficient(j: u32, k: u32, l: u32) -> Result<BigRational> {
    check_indices(j, k, l)?;
    if l == 0 {
        if j != k {
            return Ok(BigRational::zero());
        }
        let jj = j as i64;
        let f = factorial(j - 1);
        let num = f.clone() * f * factorial(2 * j - 1);
        let den = BigRational::from_integer(BigInt::from(4).pow(j - 1)) * double_factorial(2 * jj - 1) * double_factorial(2 * jj - 3);
        return Ok(num / den);
    }
    let e = j + k - l;
    let half = BigRational::new(1.into(), 2.into());
    let a = [half.clone(), half.clone(), -half.clone() * q(e as i64 - 2), -half.clone() * q(e as i64 - 1)];
    let b = [q(3) * &half - q(j as i64), q(3) * &half - q(k as i64), half + q(l as i64)];
    let pre = pochhammer(&q(2 * l as i64), e - 1) / (q(2) * BigRational::from_integer(BigInt::from(4).pow(e - 2)));
    Ok(pre * hyp4f3(&a, &b)?)
}

/// Both factors of the `l` term, the second kept symbolic in `c_j`.
pub fn w_structure(j: u32, k: u32, l: u32, m: i64, n: i64) -> Result<(BigRational, StructureConstant)> {
    let nv = n_coefficient(j, k, l, m, n)?;
    let c = c_coefficient(j, k, l)?;
    let sc = if l == 0 { StructureConstant::Central { coefficient: c.to_string(), spin: j } } else { StructureConstant::Number(c.to_string()) };
    Ok((nv, sc))
}

/// Right side of `[V_{j,m}, V_{k,n}]` as `(l, coefficient)` pairs; `l = 0` is the identity
/// with the central charge `central[j]` already multiplied in.
pub fn commutator_terms<F: Coeff>(j: u32, k: u32, m: i64, n: i64, central: &dyn Fn(u32) -> F) -> Result<Vec<(u32, F)>> {
    let mut out = Vec::new();
    let mut l = (j + k) % 2;
    while l + 2 <= j + k {
        let c = c_coefficient(j, k, l)? * n_coefficient(j, k, l, m, n)?;
        if !c.is_zero() {
            let mut v = F::from_rational(&c);
            if l == 0 {
                v *= &central(j);
            }
            out.push((l, v));
        }
        l += 2;
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct StructureCheck {
    pub pair: (u32, u32),
    pub passed: bool,
    pub evaluations: usize,
    pub witness: Option<String>,
}

/// Compare the structure-constant prediction for `[V_{j,m}, V_{k,n}]` with the boson realization,
/// on states of degree `<= max_level`. Supported for spins `<= 2` (`V1` has `c1 = psi0`, `V2` has `c2`).
pub fn check_against_bosons<F: Coeff>(j: u32, k: u32, cfg: &ModelConfig<F>, range: i64, max_level: u32) -> Result<StructureCheck> {
    if j > 2 || k > 2 {
        return Err(Error::Unsupported("boson cross-check is limited to spins 1 and 2".into()));
    }
    let cutoff = max_level + 2 * range as u32 + 4;
    let fields = [v_field(1, cfg)?, v_field(2, cfg)?];
    let central = |s: u32| if s == 1 { cfg.psi0.clone() } else { crate::wfields::c2_value(cfg) };
    let states: Vec<FockState<F>> = basis_states(max_level, cfg.n);
    let mut evaluations = 0;
    let op = |s: u32, n: i64| -> ModeOperator<F> { fields[s as usize - 1].mode(n, cutoff) };
    for m in -range..=range {
        let a = op(j, m);
        for n in -range..=range {
            let b = op(k, n);
            let rhs = commutator_terms(j, k, m, n, &central)?;
            for s in &states {
                let lhs = apply_operator(&a, &apply_operator(&b, s, cfg)?, cfg)?
                    .sub(&apply_operator(&b, &apply_operator(&a, s, cfg)?, cfg)?);
                let mut expect = FockState::zero();
                for (l, c) in &rhs {
                    let v = if *l == 0 { s.clone() } else { apply_operator(&op(*l, m + n), s, cfg)? };
                    expect.add_scaled(&v, c);
                }
                evaluations += 1;
                if lhs != expect {
                    return Ok(StructureCheck {
                        pair: (j, k),
                        passed: false,
                        evaluations,
                        witness: Some(format!("m={m}, n={n}, state {s}: {lhs} vs {expect}")),
                    });
                }
            }
        }
    }
    Ok(StructureCheck { pair: (j, k), passed: true, evaluations, witness: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_two_spin_one() {
        for m in -4..=4 {
            for n in -4..=4 {
                let t = commutator_terms::<BigRational>(2, 1, m, n, &|_| q(7)).unwrap();
                let want = if n == 0 { vec![] } else { vec![(1, q(-n))] };
                assert_eq!(t, want);
            }
        }
    }

    #[test]
    fn virasoro_from_structure_constants() {
        for m in -4..=4 {
            for n in -4..=4 {
                let c = q(5);
                let t = commutator_terms::<BigRational>(2, 2, m, n, &|_| c.clone()).unwrap();
                let mut want = Vec::new();
                if m + n == 0 && m * m * m != m {
                    want.push((0, q(m * m * m - m) / q(12) * &c));
                }
                if m != n {
                    want.push((2, q(m - n)));
                }
                assert_eq!(t, want);
            }
        }
    }

    #[test]
    fn heisenberg_and_zero_level_binomial() {
        assert!(c_coefficient(1, 1, 0).unwrap().is_one());
        assert_eq!(n_coefficient(1, 1, 0, 3, -3).unwrap(), q(3));
        assert!(n_coefficient(1, 1, 0, 3, -2).unwrap().is_zero());
    }

    #[test]
    fn parity_is_enforced() {
        assert!(n_coefficient(2, 1, 0, 1, -1).is_err());
        assert!(c_coefficient(2, 2, 3).is_err());
    }

    #[test]
    fn pochhammer_and_falling() {
        assert_eq!(pochhammer(&q(3), 3), q(60));
        assert_eq!(falling(&q(3), 4), q(0));
        assert_eq!(falling(&q(-2), 2), q(6));
        assert_eq!(double_factorial(-1), q(1));
        assert_eq!(double_factorial(5), q(15));
    }
}
