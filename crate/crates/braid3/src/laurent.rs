//! Exact integer Laurent polynomials in one variable, and 2x2 matrices over them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division is not exact")]
    NonExactDivision,
    #[error("no unit ±t^k makes the polynomial symmetric with value 1 at t = 1")]
    NoSymmetricUnit,
    #[error("polynomial is not expressible in the target variable")]
    NotExpressible,
    #[error("polynomial parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Integer Laurent polynomial, stored densely from `min_exp` upward.
///
/// Canonical form: the coefficient vector is empty for zero, otherwise its
/// first and last entries are nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    /// c * t^exp
    pub fn monomial(c: i64, exp: i64) -> Self {
        LaurentPoly::new(exp, vec![BigInt::from(c)])
    }

    /// Build from a dense coefficient run starting at `min_exp`; trims to canonical form.
    pub fn new(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { min_exp, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_exp += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.min_exp == 0 && self.coeffs[0].is_one()
    }

    /// Smallest exponent with nonzero coefficient; None for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_exp)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_exp + self.coeffs.len() as i64 - 1)
    }

    /// max_exp - min_exp; 0 for constants and for zero.
    pub fn exponent_span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        if self.is_zero() || exp < self.min_exp {
            return BigInt::zero();
        }
        let i = (exp - self.min_exp) as usize;
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    /// Multiply by t^k.
    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// p''(1) = sum of c_e * e * (e - 1), exact.
    pub fn second_derivative_at_one(&self) -> BigInt {
        self.terms()
            .map(|(e, c)| c * BigInt::from(e) * BigInt::from(e - 1))
            .sum()
    }

    /// t -> t^{-1}
    pub fn invert_variable(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly {
            min_exp: -(self.min_exp + self.coeffs.len() as i64 - 1),
            coeffs,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.invert_variable()
    }

    /// Exact division; errors unless `q` divides `self` in Z[t, t^-1].
    pub fn divide_exact(&self, q: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        if q.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let mut rem = self.coeffs.clone();
        let qc = &q.coeffs;
        let qlead = qc.last().unwrap();
        if rem.len() < qc.len() {
            return Err(PolyError::NonExactDivision);
        }
        let qn = rem.len() - qc.len() + 1;
        let mut quot = vec![BigInt::zero(); qn];
        for i in (0..qn).rev() {
            let top = rem[i + qc.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (d, r) = num_integer::div_rem(top, qlead.clone());
            if !r.is_zero() {
                return Err(PolyError::NonExactDivision);
            }
            for (j, qj) in qc.iter().enumerate() {
                rem[i + j] -= &d * qj;
            }
            quot[i] = d;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NonExactDivision);
        }
        Ok(LaurentPoly::new(self.min_exp - q.min_exp, quot))
    }

    /// Multiply by the unique unit ±t^k that makes the result symmetric under
    /// t -> t^{-1} with value 1 at t = 1. Errors when no such unit exists.
    pub fn symmetrize_normalize(&self) -> Result<LaurentPoly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::NoSymmetricUnit);
        }
        let span_sum = self.min_exp + self.max_exp().unwrap();
        if span_sum % 2 != 0 {
            return Err(PolyError::NoSymmetricUnit);
        }
        let centered = self.shifted(-span_sum / 2);
        if !centered.is_symmetric() {
            return Err(PolyError::NoSymmetricUnit);
        }
        let v = centered.eval_at_one();
        if v.is_one() {
            Ok(centered)
        } else if (-&v).is_one() {
            Ok(-&centered)
        } else {
            Err(PolyError::NoSymmetricUnit)
        }
    }

    /// Render with terms in increasing exponent, e.g. `t^-1 - 1 + t`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit_coeff = mag.is_one();
            if !unit_coeff || e == 0 {
                out.push_str(&mag.to_string());
            }
            if e != 0 {
                if !unit_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if e != 1 {
                    out.push('^');
                    out.push_str(&e.to_string());
                }
            }
        }
        out
    }

    /// Parse the `render` format back; used for test fixtures.
    pub fn parse(text: &str, var: char) -> Result<LaurentPoly, PolyError> {
        let bytes = text.as_bytes();
        let mut i = 0usize;
        let mut acc = LaurentPoly::zero();
        let skip_ws = |i: &mut usize| {
            while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        skip_ws(&mut i);
        if i == bytes.len() {
            return Err(PolyError::Parse {
                pos: i,
                msg: "empty input".into(),
            });
        }
        let mut first = true;
        while i < bytes.len() {
            skip_ws(&mut i);
            if i == bytes.len() {
                break;
            }
            let mut sign = 1i64;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
                skip_ws(&mut i);
            } else if !first {
                return Err(PolyError::Parse {
                    pos: i,
                    msg: "expected '+' or '-' between terms".into(),
                });
            }
            first = false;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: BigInt = if i > start {
                text[start..i].parse().map_err(|_| PolyError::Parse {
                    pos: start,
                    msg: "bad coefficient".into(),
                })?
            } else {
                BigInt::one()
            };
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
            }
            let mut exp = 0i64;
            if i < bytes.len() && bytes[i] == var as u8 {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let estart = i;
                    if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = text[estart..i].parse().map_err(|_| PolyError::Parse {
                        pos: estart,
                        msg: "bad exponent".into(),
                    })?;
                }
            } else if i == start {
                return Err(PolyError::Parse {
                    pos: i,
                    msg: "expected coefficient or variable".into(),
                });
            }
            let term = LaurentPoly::new(exp, vec![coeff * sign]);
            acc = &acc + &term;
        }
        Ok(acc)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = (self.min_exp + self.coeffs.len() as i64)
            .max(rhs.min_exp + rhs.coeffs.len() as i64);
        let mut coeffs = vec![BigInt::zero(); (hi - lo) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - lo) as usize] += c;
        }
        for (e, c) in rhs.terms() {
            coeffs[(e - lo) as usize] += c;
        }
        LaurentPoly::new(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::new(self.min_exp + rhs.min_exp, coeffs)
    }
}

/// 2x2 matrix over Laurent polynomials; row-major entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat2 {
    pub entries: [[LaurentPoly; 2]; 2],
}

impl Mat2 {
    pub fn identity() -> Self {
        Mat2 {
            entries: [
                [LaurentPoly::one(), LaurentPoly::zero()],
                [LaurentPoly::zero(), LaurentPoly::one()],
            ],
        }
    }

    pub fn new(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly, d: LaurentPoly) -> Self {
        Mat2 {
            entries: [[a, b], [c, d]],
        }
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let e = &self.entries;
        let f = &rhs.entries;
        Mat2 {
            entries: [
                [
                    &(&e[0][0] * &f[0][0]) + &(&e[0][1] * &f[1][0]),
                    &(&e[0][0] * &f[0][1]) + &(&e[0][1] * &f[1][1]),
                ],
                [
                    &(&e[1][0] * &f[0][0]) + &(&e[1][1] * &f[1][0]),
                    &(&e[1][0] * &f[0][1]) + &(&e[1][1] * &f[1][1]),
                ],
            ],
        }
    }

    pub fn det(&self) -> LaurentPoly {
        let e = &self.entries;
        &(&e[0][0] * &e[1][1]) - &(&e[0][1] * &e[1][0])
    }

    /// self - identity
    pub fn minus_identity(&self) -> Mat2 {
        let one = LaurentPoly::one();
        Mat2 {
            entries: [
                [&self.entries[0][0] - &one, self.entries[0][1].clone()],
                [self.entries[1][0].clone(), &self.entries[1][1] - &one],
            ],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, 't').unwrap()
    }

    #[test]
    fn mul_basic() {
        // (t - 1) * t^-1 = 1 - t^-1
        let p = lp("t - 1");
        let q = lp("t^-1");
        assert_eq!(&p * &q, lp("-t^-1 + 1"));
    }

    #[test]
    fn factor_identity() {
        // (1 + t + t^2)(t - 1) = t^3 - 1
        let p = lp("1 + t + t^2");
        let q = lp("t - 1");
        assert_eq!(&p * &q, lp("t^3 - 1"));
    }

    #[test]
    fn divide_exact_works() {
        let p = lp("t^3 - 1");
        let q = lp("1 + t + t^2");
        assert_eq!(p.divide_exact(&q).unwrap(), lp("t - 1"));
        let any = lp("3t^2 - t^-4 + 7");
        assert_eq!(any.divide_exact(&LaurentPoly::one()).unwrap(), any);
    }

    #[test]
    fn divide_non_exact_errors() {
        let p = lp("t^2 + 1");
        let q = lp("t + 1");
        assert_eq!(p.divide_exact(&q), Err(PolyError::NonExactDivision));
        assert_eq!(
            p.divide_exact(&LaurentPoly::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn eval_and_derivative() {
        let p = lp("t - 1 + t^-1");
        assert_eq!(p.eval_at_one(), BigInt::from(1));
        assert_eq!(p.second_derivative_at_one(), BigInt::from(2));
        let one = LaurentPoly::one();
        assert_eq!(one.second_derivative_at_one(), BigInt::from(0));
    }

    #[test]
    fn invert_variable_works() {
        assert_eq!(lp("t^2 + 3t").invert_variable(), lp("t^-2 + 3t^-1"));
        assert!(lp("t - 1 + t^-1").is_symmetric());
        assert!(!lp("t - 1").is_symmetric());
    }

    #[test]
    fn symmetrize_normalize_cases() {
        // -t^2 + t - 1 -> t - 1 + t^-1 via unit -t^-1
        let p = lp("-t^2 + t - 1");
        assert_eq!(p.symmetrize_normalize().unwrap(), lp("t^-1 - 1 + t"));
        assert_eq!(
            LaurentPoly::one().symmetrize_normalize().unwrap(),
            LaurentPoly::one()
        );
        assert_eq!(
            lp("t + 1").symmetrize_normalize(),
            Err(PolyError::NoSymmetricUnit)
        );
    }

    #[test]
    fn mat2_identity_det() {
        assert_eq!(Mat2::identity().det(), LaurentPoly::one());
    }

    #[test]
    fn render_roundtrip() {
        let p = lp("t^-1 - 1 + t");
        assert_eq!(p.render("t"), "t^-1 - 1 + t");
        assert_eq!(LaurentPoly::zero().render("t"), "0");
        assert_eq!(lp("0"), LaurentPoly::zero());
        let q = lp("-2t^-3 + 5 - 7t^2");
        assert_eq!(LaurentPoly::parse(&q.render("t"), 't').unwrap(), q);
    }
}
