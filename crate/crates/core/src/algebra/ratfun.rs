//! Rational functions in canonical form.
//!
//! A [`RationalFunction`] is stored as `num / den` with `gcd(num, den) = 1`
//! and a monic denominator; zero is `0 / 1`. Every constructor and operation
//! returns this form, so structural equality is equality of functions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{Polynomial, PolynomialJson};
use super::series::PowerSeries;
use super::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Polynomial, den: Polynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let g = Polynomial::gcd(&num, &den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(Polynomial::from_int(c))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// The identity function `x`.
    pub fn x() -> Self {
        Self::from_poly(Polynomial::x())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.den.is_one().then_some(&self.num)
    }

    /// The numerator, or [`Error::NotPolynomial`] if a denominator remains.
    pub fn into_polynomial(self) -> Result<Polynomial> {
        if self.den.is_one() {
            Ok(self.num)
        } else {
            Err(Error::NotPolynomial(self.den.display("x").to_string()))
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, e: u32) -> Self {
        // Powers of coprime polynomials stay coprime.
        RationalFunction {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// `p(r)` for a polynomial `p`. With `r = u/v` and `d = deg p` this is
    /// `(sum p_i u^i v^(d-i)) / v^d`, reduced.
    pub fn compose_poly(p: &Polynomial, r: &RationalFunction) -> RationalFunction {
        let Some(d) = p.degree() else {
            return Self::zero();
        };
        let (u, v) = (&r.num, &r.den);
        let mut u_pow = Polynomial::one();
        let mut v_pows = Vec::with_capacity(d + 1);
        v_pows.push(Polynomial::one());
        for i in 1..=d {
            v_pows.push(&v_pows[i - 1] * v);
        }
        let mut num = Polynomial::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                num = &num + &(&u_pow * &v_pows[d - i]).scale(c);
            }
            if i < d {
                u_pow = &u_pow * u;
            }
        }
        Self::canonical(num, v_pows.pop().expect("d+1 powers"))
    }

    /// `self(inner(x))`, clearing denominators and reducing.
    pub fn compose(&self, inner: &RationalFunction) -> Result<RationalFunction> {
        let top = Self::compose_poly(&self.num, inner);
        let bottom = Self::compose_poly(&self.den, inner);
        if bottom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        top.checked_div(&bottom)
    }

    /// `self(a*x + b)`.
    pub fn affine_substitute(&self, a: &Rational, b: &Rational) -> RationalFunction {
        Self::canonical(
            self.num.affine_substitute(a, b),
            self.den.affine_substitute(a, b),
        )
    }

    /// `self(1/x)`.
    pub fn reciprocal_substitute(&self) -> RationalFunction {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let d = dn.max(dd);
        // x^d num(1/x) / (x^d den(1/x))
        Self::canonical(
            self.num.reversed(dn).shift_up(d - dn),
            self.den.reversed(dd).shift_up(d - dd),
        )
    }

    /// Taylor coefficients `c_0..c_order` at the origin.
    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        PowerSeries::expand(self, order)
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    pub fn display<'a>(&'a self, var: &'a str) -> RatFunDisplay<'a> {
        RatFunDisplay { r: self, var }
    }

    pub fn to_json(&self, var: &str) -> RationalFunctionJson {
        RationalFunctionJson {
            num: self.num.to_json(var),
            den: self.den.to_json(var),
        }
    }

    pub fn from_json(json: &RationalFunctionJson) -> std::result::Result<Self, String> {
        let num = Polynomial::from_json(&json.num)?;
        let den = Polynomial::from_json(&json.den)?;
        Self::new(num, den).map_err(|e| e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalFunctionJson {
    pub num: PolynomialJson,
    pub den: PolynomialJson,
}

pub struct RatFunDisplay<'a> {
    r: &'a RationalFunction,
    var: &'a str,
}

impl fmt::Display for RatFunDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.r.num.display(self.var);
        if self.r.den.is_one() {
            return write!(f, "{num}");
        }
        write!(f, "({num}) / ({})", self.r.den.display(self.var))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display("x").fmt(f)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

/// Applies `op` to two rational functions, returning the canonical result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn ratfun_arith(
    op: ArithOp,
    x: &RationalFunction,
    y: &RationalFunction,
) -> Result<RationalFunction> {
    match op {
        ArithOp::Add => Ok(x + y),
        ArithOp::Sub => Ok(x - y),
        ArithOp::Mul => Ok(x * y),
        ArithOp::Div => x.checked_div(y),
    }
}
