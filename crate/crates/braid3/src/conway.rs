//! Conway polynomials of knots, obtained from normalized Alexander
//! polynomials through the substitution x^2 = t - 2 + t^-1.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::laurent::{LaurentPoly, PolyError};

/// Integer polynomial in x, constant term first. Knot closures produce only
/// even powers; 2-component links would carry odd ones.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ConwayPoly {
    coeffs: Vec<BigInt>,
}

impl ConwayPoly {
    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The x^2 coefficient, which for knots is the Casson invariant.
    pub fn x2_coefficient(&self) -> BigInt {
        self.coeff(2)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Terms in increasing power, e.g. `1 + x^2`.
    pub fn render(&self) -> String {
        LaurentPoly::new(0, self.coeffs.clone()).render("x")
    }

    /// Substitute x^2 = t - 2 + t^-1 back; defined for even polynomials.
    pub fn substitute_x_squared(&self) -> Result<LaurentPoly, PolyError> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return Err(PolyError::NotExpressible);
        }
        let y = LaurentPoly::parse("t - 2 + t^-1", 't').unwrap();
        let mut acc = LaurentPoly::zero();
        let mut y_pow = LaurentPoly::one();
        for (k, c) in self.coeffs.iter().step_by(2).enumerate() {
            if k > 0 {
                y_pow = &y_pow * &y;
            }
            acc = &acc + &y_pow.scaled(c);
        }
        Ok(acc)
    }
}

impl fmt::Display for ConwayPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Express a normalized symmetric Alexander polynomial as a polynomial in
/// x^2 = t - 2 + t^-1, yielding the Conway polynomial of the knot.
///
/// The expansion writes p = c_0 + sum c_k (t^k + t^-k) and converts each
/// power sum through the recurrence s_{k+1} = (y + 2) s_k - s_{k-1}.
pub fn conway_from_alexander(p: &LaurentPoly) -> Result<ConwayPoly, PolyError> {
    if p.is_zero() || !p.is_symmetric() || !p.eval_at_one().is_one() {
        return Err(PolyError::NotExpressible);
    }
    let d = p.max_exp().unwrap();
    // power sums s_k(y) = t^k + t^-k as integer polynomials in y
    let y_plus_2 = LaurentPoly::parse("t + 2", 't').unwrap(); // y stands in for t here
    let mut s_prev = LaurentPoly::constant(2);
    let mut s_cur = y_plus_2.clone();
    let mut acc = LaurentPoly::new(0, vec![p.coeff(0)]);
    for k in 1..=d {
        acc = &acc + &s_cur.scaled(&p.coeff(k));
        let next = &(&y_plus_2 * &s_cur) - &s_prev;
        s_prev = std::mem::replace(&mut s_cur, next);
    }
    debug_assert!(acc.min_exp().map_or(true, |e| e >= 0));
    let coeffs: Vec<BigInt> = (0..=acc.max_exp().unwrap_or(0))
        .map(|e| acc.coeff(e))
        .collect();
    // spread coefficients onto even powers of x
    let mut out = vec![BigInt::zero(); 2 * coeffs.len() - 1];
    for (j, c) in coeffs.into_iter().enumerate() {
        out[2 * j] = c;
    }
    while out.last().is_some_and(|c| c.is_zero()) && out.len() > 1 {
        out.pop();
    }
    let nabla = ConwayPoly { coeffs: out };
    debug_assert_eq!(nabla.substitute_x_squared().as_ref(), Ok(p));
    Ok(nabla)
}
