//! Parameters of the model: the layer bound `N` and the values of `h1`, `h2`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result, ScalarError};
use crate::ratfunc::RatFunc;
use crate::scalar::Coeff;

/// All derived constants are precomputed from `h1`, `h2` and `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelConfig<F: Coeff> {
    pub n: usize,
    pub h1: F,
    pub h2: F,
    pub h3: F,
    /// `-N / (h1 h2)`
    pub psi0: F,
    pub sigma2: F,
    pub sigma3: F,
    /// `-h3 / (h1 h2)`
    pub alpha0: F,
    /// `-1 / (h1 h2)`, the boson commutator normalization
    pub kappa: F,
    /// short label used in cache keys
    pub tag: String,
}

impl<F: Coeff> ModelConfig<F> {
    pub fn new(n: usize, h1: F, h2: F, tag: impl Into<String>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Unsupported("N must be at least 1".into()));
        }
        let h3 = -(h1.clone() + &h2);
        let h1h2 = h1.clone() * &h2;
        if h1h2.is_zero() {
            return Err(ScalarError::DivisionByZero.into());
        }
        let kappa = (-F::one()).checked_div(&h1h2)?;
        let psi0 = kappa.clone() * &F::from_i64(n as i64);
        let sigma2 = h1h2.clone() + &(h1.clone() * &h3) + &(h2.clone() * &h3);
        let sigma3 = h1h2.clone() * &h3;
        let alpha0 = (-h3.clone()).checked_div(&h1h2)?;
        Ok(ModelConfig { n, h1, h2, h3, psi0, sigma2, sigma3, alpha0, kappa, tag: tag.into() })
    }

    pub fn h(&self, i: usize) -> &F {
        match i {
            1 => &self.h1,
            2 => &self.h2,
            _ => &self.h3,
        }
    }
}

impl ModelConfig<RatFunc> {
    /// Fully symbolic `h1`, `h2`.
    pub fn symbolic(n: usize) -> Result<Self> {
        ModelConfig::new(n, RatFunc::h1(), RatFunc::h2(), "sym")
    }

    /// `h2 = -N / h1`, so `psi0 = 1`; `h1` stays symbolic.
    pub fn psi0_one(n: usize) -> Result<Self> {
        let h2 = RatFunc::from_i64(-(n as i64)).checked_div(&RatFunc::h1())?;
        ModelConfig::new(n, RatFunc::h1(), h2, "psi1")
    }
}

impl ModelConfig<BigRational> {
    pub fn probe(n: usize, h1: BigRational, h2: BigRational) -> Result<Self> {
        if h1 == h2 || h1.is_zero() || h2.is_zero() {
            return Err(Error::Unsupported(format!("probe point ({h1}, {h2}) is degenerate")));
        }
        let tag = format!("p{}_{}", h1, h2).replace('/', "o").replace('-', "m");
        ModelConfig::new(n, h1, h2, tag)
    }

    /// `h2 = -N / h1` at a rational `h1`.
    pub fn probe_psi0_one(n: usize, h1: BigRational) -> Result<Self> {
        let h2 = -BigRational::from_integer((n as i64).into()) / &h1;
        ModelConfig::probe(n, h1, h2)
    }
}

/// Evaluate a symbolic config's parameters at a rational point; used by probe-mode cross checks.
pub fn specialize(cfg: &ModelConfig<RatFunc>, h1: &BigRational, h2: &BigRational) -> Result<ModelConfig<BigRational>> {
    ModelConfig::probe(cfg.n, cfg.h1.eval(h1, h2)?, cfg.h2.eval(h1, h2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn psi0_one_realization() {
        let cfg = ModelConfig::psi0_one(2).unwrap();
        assert!(cfg.psi0.is_one());
    }

    #[test]
    fn symbolic_constants() {
        let cfg = ModelConfig::symbolic(3).unwrap();
        assert_eq!(cfg.psi0, RatFunc::parse_canonical("-3/(h1*h2)").unwrap());
        assert_eq!(cfg.alpha0, RatFunc::parse_canonical("(h1+h2)/(h1*h2)").unwrap());
        assert!((cfg.h1.clone() + &cfg.h2 + &cfg.h3).is_zero());
    }
}
