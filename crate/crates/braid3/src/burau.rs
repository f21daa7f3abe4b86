//! Reduced Burau representation of the 3-braid group.
//!
//! One fixed matrix convention is used throughout:
//! s1 -> [[-t, 1], [0, 1]], s2 -> [[1, 0], [t, -t]], with a3 represented
//! through its projection s1^-1 s2 s1. The representation is multiplicative
//! left to right and faithful on 3-braids, so matrix equality (with the
//! strand permutation) decides braid equality. The unit ambiguity this
//! convention leaves in Alexander polynomials is removed downstream by
//! symmetrize-normalization.

use crate::laurent::{LaurentPoly, Mat2};
use crate::perm::closure_permutation;
use crate::word::BraidWord;

/// Burau matrix of one Artin generator.
pub fn generator_matrix(subscript: u8, sign: i8) -> Mat2 {
    let t = || LaurentPoly::monomial(1, 1);
    let tinv = || LaurentPoly::monomial(1, -1);
    let one = LaurentPoly::one;
    let zero = LaurentPoly::zero;
    match (subscript, sign > 0) {
        (1, true) => Mat2::new(-&t(), one(), zero(), one()),
        (1, false) => Mat2::new(-&tinv(), tinv(), zero(), one()),
        (2, true) => Mat2::new(one(), zero(), t(), -&t()),
        (2, false) => Mat2::new(one(), zero(), one(), -&tinv()),
        _ => panic!("artin subscript must be 1 or 2"),
    }
}

/// Burau matrix of a word: the product of generator matrices over the
/// canonical projection, taken left to right.
pub fn burau(w: &BraidWord) -> Mat2 {
    let mut m = Mat2::identity();
    for l in w.artin_letters() {
        // right-multiplying by a generator matrix is two column operations
        let [[a, b], [c, d]] = &m.entries;
        m = match (l.subscript, l.sign > 0) {
            // col0 <- -t col0; col1 <- col0 + col1
            (1, true) => Mat2::new(-&a.shifted(1), a + b, -&c.shifted(1), c + d),
            // col0 <- -t^-1 col0; col1 <- t^-1 col0 + col1
            (1, false) => Mat2::new(
                -&a.shifted(-1),
                &a.shifted(-1) + b,
                -&c.shifted(-1),
                &c.shifted(-1) + d,
            ),
            // col0 <- col0 + t col1; col1 <- -t col1
            (2, true) => Mat2::new(a + &b.shifted(1), -&b.shifted(1), c + &d.shifted(1), -&d.shifted(1)),
            // col0 <- col0 + col1; col1 <- -t^-1 col1
            (2, false) => Mat2::new(a + b, -&b.shifted(-1), c + d, -&d.shifted(-1)),
            _ => unreachable!(),
        };
    }
    m
}

/// Equality of braids via the faithful reduced Burau representation together
/// with the strand permutation.
pub fn braid_eq(u: &BraidWord, v: &BraidWord) -> bool {
    closure_permutation(u) == closure_permutation(v) && burau(u) == burau(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::word;

    #[test]
    fn empty_word_is_identity() {
        assert_eq!(burau(&BraidWord::empty()), Mat2::identity());
    }

    #[test]
    fn generators_invert() {
        assert_eq!(burau(&word("a1 a1^-1")), Mat2::identity());
        assert_eq!(
            generator_matrix(1, 1).mul(&generator_matrix(1, -1)),
            Mat2::identity()
        );
        assert_eq!(
            generator_matrix(2, 1).mul(&generator_matrix(2, -1)),
            Mat2::identity()
        );
    }

    #[test]
    fn column_ops_match_matrix_products() {
        let w = word("a1 a2^-1 a3^2 a1^-1 a2");
        let mut m = Mat2::identity();
        for l in w.artin_letters() {
            m = m.mul(&generator_matrix(l.subscript, l.sign));
        }
        assert_eq!(burau(&w), m);
    }

    #[test]
    fn multiplicative() {
        let u = word("a1 a3^-1 a2");
        let v = word("a2^2 a1^-1");
        assert_eq!(burau(&u.concat(&v)), burau(&u).mul(&burau(&v)));
    }

    #[test]
    fn braid_relation_holds() {
        assert!(braid_eq(&word("a1 a2 a1"), &word("a2 a1 a2")));
        assert!(braid_eq(&word("a2 a1"), &word("a3 a2")));
        assert!(braid_eq(&word("a2 a1"), &word("a1 a3")));
        assert!(!braid_eq(&word("a1"), &word("a2")));
    }

    #[test]
    fn determinant_tracks_exponent_sum() {
        // det of each generator matrix is -t, so det(burau) = (-t)^e
        for text in ["a1 a2 a1 a2", "a3^2 a1^-1", "a2^-3 a3 a1"] {
            let w = word(text);
            let e = w.exponent_sum();
            let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
            assert_eq!(burau(&w).det(), LaurentPoly::monomial(sign, e), "word {text}");
        }
    }
}
