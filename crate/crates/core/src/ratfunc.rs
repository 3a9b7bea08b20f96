//! Elements of Q(h1, h2) as reduced fractions of integer polynomials.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::ScalarError;
use crate::poly::ParamPoly;
use crate::scalar::Coeff;

/// `num / den` with `gcd(num, den) = 1` and a positive leading coefficient on `den`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: ParamPoly,
    den: ParamPoly,
}

impl RatFunc {
    pub fn h1() -> Self {
        RatFunc::from_poly(ParamPoly::h1())
    }

    pub fn h2() -> Self {
        RatFunc::from_poly(ParamPoly::h2())
    }

    /// `h3 = -h1 - h2`.
    pub fn h3() -> Self {
        -(RatFunc::h1() + RatFunc::h2())
    }

    pub fn from_poly(p: ParamPoly) -> Self {
        RatFunc { num: p, den: ParamPoly::one() }
    }

    pub fn numer(&self) -> &ParamPoly {
        &self.num
    }

    pub fn denom(&self) -> &ParamPoly {
        &self.den
    }

    /// Build and reduce `num / den`.
    pub fn new(num: ParamPoly, den: ParamPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(RatFunc::reduce(num, den))
    }

    fn reduce(num: ParamPoly, den: ParamPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        RatFunc::sign_normalized(num, den)
    }

    fn sign_normalized(num: ParamPoly, den: ParamPoly) -> Self {
        let (den, flipped) = den.normalize_sign();
        let num = if flipped { num.neg() } else { num };
        RatFunc { num, den }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Exact value at a rational point.
    pub fn eval(&self, h1: &BigRational, h2: &BigRational) -> Result<BigRational, ScalarError> {
        let d = self.den.eval(h1, h2);
        if d.is_zero() {
            return Err(ScalarError::Pole {
                h1: h1.to_string(),
                h2: h2.to_string(),
                den: self.den.to_string(),
            });
        }
        Ok(self.num.eval(h1, h2) / d)
    }

    /// Substitute `h2 -> value(h1)` where `value` is a rational function of h1 alone.
    pub fn substitute_h2(&self, value: &RatFunc) -> Result<RatFunc, ScalarError> {
        let sub = |p: &ParamPoly| -> RatFunc {
            // Horner in h2 with coefficients in Z[h1]
            let mut by_d2: std::collections::BTreeMap<u32, ParamPoly> = Default::default();
            for (m, c) in p.terms() {
                let e = by_d2.entry(m.d2).or_default();
                *e = e.add(&ParamPoly::monomial(c.clone(), crate::poly::Monomial::new(m.d1, 0)));
            }
            let top = by_d2.keys().next_back().copied().unwrap_or(0);
            let mut acc = RatFunc::zero();
            for d in (0..=top).rev() {
                acc = acc * value;
                if let Some(c) = by_d2.get(&d) {
                    acc += &RatFunc::from_poly(c.clone());
                }
            }
            acc
        };
        let n = sub(&self.num);
        let d = sub(&self.den);
        n.checked_div(&d)
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let c_num = if negate { other.num.neg() } else { other.num.clone() };
        if self.num.is_zero() {
            return RatFunc { num: c_num, den: other.den.clone() };
        }
        if other.num.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&c_num);
            if self.den.is_one() {
                return RatFunc { num, den: self.den.clone() };
            }
            return RatFunc::reduce(num, self.den.clone());
        }
        if self.den.is_one() {
            // a + c/d is already reduced
            return RatFunc { num: self.num.mul(&other.den).add(&c_num), den: other.den.clone() };
        }
        if other.den.is_one() {
            return RatFunc { num: self.num.add(&c_num.mul(&self.den)), den: self.den.clone() };
        }
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&c_num.mul(&self.den));
            let den = self.den.mul(&other.den);
            return RatFunc::sign_normalized(num, den);
        }
        let b1 = self.den.exact_div(&g).unwrap();
        let d1 = other.den.exact_div(&g).unwrap();
        let num = self.num.mul(&d1).add(&c_num.mul(&b1));
        if num.is_zero() {
            return RatFunc::zero();
        }
        let den = b1.mul(&other.den);
        let g2 = num.gcd(&g);
        if g2.is_one() {
            RatFunc::sign_normalized(num, den)
        } else {
            RatFunc::sign_normalized(num.exact_div(&g2).unwrap(), den.exact_div(&g2).unwrap())
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.num.is_zero() || other.num.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { num: self.num.mul(&other.num), den: ParamPoly::one() };
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let a = if g1.is_one() { self.num.clone() } else { self.num.exact_div(&g1).unwrap() };
        let d = if g1.is_one() { other.den.clone() } else { other.den.exact_div(&g1).unwrap() };
        let c = if g2.is_one() { other.num.clone() } else { other.num.exact_div(&g2).unwrap() };
        let b = if g2.is_one() { self.den.clone() } else { self.den.exact_div(&g2).unwrap() };
        RatFunc::sign_normalized(a.mul(&c), b.mul(&d))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if self.num.num_terms() > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc { num: ParamPoly::zero(), den: ParamPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc { num: ParamPoly::one(), den: ParamPoly::one() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                $body(&self, &o)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &'a RatFunc) -> RatFunc {
                $body(&self, o)
            }
        }
        impl<'a, 'b> $tr<&'b RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &'b RatFunc) -> RatFunc {
                $body(self, o)
            }
        }
    };
}

binop!(Add, add, |a: &RatFunc, b: &RatFunc| a.add_impl(b, false));
binop!(Sub, sub, |a: &RatFunc, b: &RatFunc| a.add_impl(b, true));
binop!(Mul, mul, |a: &RatFunc, b: &RatFunc| a.mul_impl(b));

/// Panics on division by zero; use [`Coeff::checked_div`] for a fallible form.
impl Div<RatFunc> for RatFunc {
    type Output = RatFunc;
    fn div(self, o: RatFunc) -> RatFunc {
        self.checked_div(&o).expect("division by zero")
    }
}

impl<'a> AddAssign<&'a RatFunc> for RatFunc {
    fn add_assign(&mut self, o: &'a RatFunc) {
        *self = self.add_impl(o, false);
    }
}

impl<'a> SubAssign<&'a RatFunc> for RatFunc {
    fn sub_assign(&mut self, o: &'a RatFunc) {
        *self = self.add_impl(o, true);
    }
}

impl<'a> MulAssign<&'a RatFunc> for RatFunc {
    fn mul_assign(&mut self, o: &'a RatFunc) {
        *self = self.mul_impl(o);
    }
}

impl Coeff for RatFunc {
    fn from_bigint(v: BigInt) -> Self {
        RatFunc::from_poly(ParamPoly::constant(v))
    }

    fn from_rational(v: &BigRational) -> Self {
        RatFunc::sign_normalized(ParamPoly::constant(v.numer().clone()), ParamPoly::constant(v.denom().clone()))
    }

    fn complexity(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }

    fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        if other.num.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let inv = RatFunc::sign_normalized(other.den.clone(), other.num.clone());
        Ok(self.mul_impl(&inv))
    }

    fn to_canonical(&self) -> String {
        if self.den.is_one() {
            self.num.to_string()
        } else {
            format!("({})/({})", self.num, self.den)
        }
    }

    fn parse_canonical(s: &str) -> Result<Self, ScalarError> {
        Parser::new(s).parse()
    }
}

/// Recursive-descent parser for expressions in `h1`, `h2`, `h3`, integers,
/// `+ - * / ^` and parentheses.
struct Parser<'a> {
    src: &'a str,
    toks: Vec<Tok>,
    pos: usize,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(u8),
    Op(char),
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, toks: Vec::new(), pos: 0 }
    }

    fn err(&self) -> ScalarError {
        ScalarError::Parse(self.src.to_string())
    }

    fn lex(&mut self) -> Result<(), ScalarError> {
        let b = self.src.as_bytes();
        let mut i = 0;
        while i < b.len() {
            let c = b[i] as char;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let st = i;
                while i < b.len() && (b[i] as char).is_ascii_digit() {
                    i += 1;
                }
                self.toks.push(Tok::Int(self.src[st..i].parse().map_err(|_| self.err())?));
            } else if c == 'h' {
                let d = b.get(i + 1).copied().ok_or_else(|| self.err())?;
                match d {
                    b'1' | b'2' | b'3' => self.toks.push(Tok::Var(d - b'0')),
                    _ => return Err(self.err()),
                }
                i += 2;
            } else if "+-*/^()".contains(c) {
                self.toks.push(Tok::Op(c));
                i += 1;
            } else {
                return Err(self.err());
            }
        }
        Ok(())
    }

    fn parse(mut self) -> Result<RatFunc, ScalarError> {
        self.lex()?;
        let v = self.expr()?;
        if self.pos != self.toks.len() {
            return Err(self.err());
        }
        Ok(v)
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<RatFunc, ScalarError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek_op() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc, ScalarError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek_op() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                '/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.checked_div(&d)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFunc, ScalarError> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc, ScalarError> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some(Tok::Int(e)) => {
                    let e: u32 = e.try_into().map_err(|_| self.err())?;
                    self.pos += 1;
                    return Ok(Coeff::pow(&base, e));
                }
                _ => return Err(self.err()),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc, ScalarError> {
        let t = self.toks.get(self.pos).cloned().ok_or_else(|| self.err())?;
        self.pos += 1;
        match t {
            Tok::Int(v) => Ok(RatFunc::from_bigint(v)),
            Tok::Var(1) => Ok(RatFunc::h1()),
            Tok::Var(2) => Ok(RatFunc::h2()),
            Tok::Var(_) => Ok(RatFunc::h3()),
            Tok::Op('(') => {
                let v = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.err());
                }
                self.pos += 1;
                Ok(v)
            }
            Tok::Op(_) => Err(self.err()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> RatFunc {
        RatFunc::parse_canonical(s).unwrap()
    }

    #[test]
    fn sigma1_vanishes() {
        assert!((RatFunc::h1() + RatFunc::h2() + RatFunc::h3()).is_zero());
    }

    #[test]
    fn sigma3_expands() {
        let s3 = RatFunc::h1() * RatFunc::h2() * RatFunc::h3();
        assert_eq!(s3.to_canonical(), "-h1^2*h2 - h1*h2^2");
    }

    #[test]
    fn cancellation() {
        assert_eq!(q("(h1^2 - h2^2)/(h1 - h2)"), q("h1 + h2"));
    }

    #[test]
    fn denominator_sign_and_content() {
        let a = q("(2*h1)/(-4*h2 + 6)");
        assert_eq!(a.to_canonical(), "(-h1)/(2*h2 - 3)");
    }

    #[test]
    fn evaluate_examples() {
        let h1h2 = RatFunc::h1() * RatFunc::h2();
        let v = h1h2.eval(&BigRational::from_integer(3.into()), &BigRational::new((-1).into(), 3.into())).unwrap();
        assert_eq!(v, -BigRational::one());
        let s2 = q("h1*h2 + h1*h3 + h2*h3");
        assert_eq!(s2.eval(&BigRational::one(), &-BigRational::one()).unwrap(), -BigRational::one());
    }

    #[test]
    fn evaluate_names_vanishing_denominator() {
        let a = q("1/(h1 + h2)");
        let e = a.eval(&BigRational::one(), &-BigRational::one()).unwrap_err();
        assert!(e.to_string().contains("h1 + h2"), "{e}");
    }

    #[test]
    fn substitute_h2() {
        let a = q("h1*h2");
        let v = a.substitute_h2(&q("-2/h1")).unwrap();
        assert_eq!(v, RatFunc::from_i64(-2));
    }

    #[test]
    fn canonical_roundtrip() {
        for s in ["0", "1", "-h1", "(h1 - h2)/(h1^2 + 3)", "h1^3*h2 - 7"] {
            let a = q(s);
            assert_eq!(q(&a.to_canonical()), a);
        }
    }
}
