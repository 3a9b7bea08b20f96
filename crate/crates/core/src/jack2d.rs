//! Symmetric functions in power sums over Q and the Laplace-Beltrami operator whose
//! eigenvectors are the classical Jack polynomials.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fock::FockState;

/// `sum c_mu p_mu`, keyed by partitions in weakly decreasing order.
pub type SymPoly = BTreeMap<Vec<u32>, BigRational>;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn push(f: &mut SymPoly, mut key: Vec<u32>, c: BigRational) {
    if c.is_zero() {
        return;
    }
    key.sort_unstable_by(|a, b| b.cmp(a));
    let e = f.entry(key.clone()).or_insert_with(BigRational::zero);
    *e += c;
    if e.is_zero() {
        f.remove(&key);
    }
}

/// `n(lambda) = sum (i - 1) lambda_i`.
pub fn n_of(lambda: &[u32]) -> i64 {
    lambda.iter().enumerate().map(|(i, &l)| i as i64 * l as i64).sum()
}

pub fn conjugate(lambda: &[u32]) -> Vec<u32> {
    let top = lambda.first().copied().unwrap_or(0);
    (1..=top).map(|k| lambda.iter().filter(|&&l| l >= k).count() as u32).collect()
}

/// `D(alpha) = (alpha/2) sum mn p_{m+n} d_m d_n + (1/2) sum (m+n) p_m p_n d_{m+n}
///  + ((alpha-1)/2) sum n(n-1) p_n d_n`.
pub fn laplace_beltrami(f: &SymPoly, alpha: &BigRational) -> SymPoly {
    let half = BigRational::new(1.into(), 2.into());
    let mut out = SymPoly::new();
    for (mu, c) in f {
        let l = mu.len();
        for i in 0..l {
            for j in 0..l {
                if i == j {
                    continue;
                }
                let mut key: Vec<u32> = mu.iter().enumerate().filter(|(k, _)| *k != i && *k != j).map(|(_, v)| *v).collect();
                key.push(mu[i] + mu[j]);
                push(&mut out, key, alpha.clone() * &half * q(mu[i] as i64 * mu[j] as i64) * c);
            }
            let s = mu[i];
            for m in 1..s {
                let mut key: Vec<u32> = mu.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, v)| *v).collect();
                key.push(m);
                key.push(s - m);
                push(&mut out, key, half.clone() * q(s as i64) * c);
            }
            let w = (alpha - BigRational::one()) * &half * q(s as i64 * (s as i64 - 1));
            push(&mut out, mu.clone(), w * c);
        }
    }
    out
}

/// Eigenvalue of `D(alpha)` on the Jack polynomial of shape `lambda`.
pub fn jack_eigenvalue(lambda: &[u32], alpha: &BigRational) -> BigRational {
    alpha.clone() * q(n_of(&conjugate(lambda))) - q(n_of(lambda))
}

/// A one-slice Fock state in the variables `q_n = h p_n`.
pub fn from_fock_scaled(s: &FockState<BigRational>, h: &BigRational) -> Result<SymPoly> {
    let mut out = SymPoly::new();
    for (m, c) in s.iter() {
        let mut key = Vec::new();
        for &(j, n) in m.modes() {
            if j != 1 {
                return Err(Error::Unsupported(format!("monomial {m} uses more than one slice")));
            }
            key.push(n);
        }
        let scale = h.pow(key.len() as i32);
        push(&mut out, key, c.clone() / scale);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_two_eigenvalues() {
        let a = q(3);
        // (2) has eigenvalue alpha, (1,1) has -1
        assert_eq!(jack_eigenvalue(&[2], &a), a);
        assert_eq!(jack_eigenvalue(&[1, 1], &a), q(-1));
        // J_(1,1) is proportional to p1^2 - p2
        let mut f = SymPoly::new();
        push(&mut f, vec![1, 1], q(1));
        push(&mut f, vec![2], q(-1));
        let d = laplace_beltrami(&f, &a);
        let want: SymPoly = f.iter().map(|(k, v)| (k.clone(), -v.clone())).collect();
        assert_eq!(d, want);
    }

    #[test]
    fn conjugate_shapes() {
        assert_eq!(conjugate(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(conjugate(&[]), Vec::<u32>::new());
        assert_eq!(n_of(&[2, 1, 1]), 3);
    }
}
