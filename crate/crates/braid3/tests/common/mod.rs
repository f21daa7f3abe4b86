//! Brute-force oracle: Alexander polynomial of a 3-braid closure from the
//! Wirtinger presentation of the closed-braid diagram via Fox calculus.
//!
//! This route is kept independent of the Burau computation used by the
//! library. Arcs of the closure diagram are tracked top to bottom, each
//! crossing contributes the abelianized Fox-derivative row of its Wirtinger
//! relation, and the Alexander polynomial is a maximal minor of the resulting
//! matrix. Only the Laurent-polynomial arithmetic is shared with the library.

use braid3::{closure_info, BraidWord, LaurentPoly};

struct Relation {
    over: usize,
    under_in: usize,
    under_out: usize,
    positive: bool,
}

/// Arc-labelled Wirtinger relations of the closure of `w`.
///
/// The strand entering each crossing on the left passes over when the letter
/// is positive (the diagram convention is pinned by the anchor tests; the
/// opposite choice draws the mirror image, whose normalized Alexander
/// polynomial is the same).
fn wirtinger_relations(letters: &[(u8, i8)]) -> (Vec<Relation>, usize) {
    let mut current = [0usize, 1, 2];
    let mut next_id = 3;
    let mut rels = Vec::with_capacity(letters.len());
    for &(sub, sign) in letters {
        let p = (sub - 1) as usize;
        let (left, right) = (current[p], current[p + 1]);
        let left_over = sign > 0;
        let (over, under_in) = if left_over { (left, right) } else { (right, left) };
        let under_out = next_id;
        next_id += 1;
        rels.push(Relation {
            over,
            under_in,
            under_out,
            positive: sign > 0,
        });
        if left_over {
            current[p] = under_out;
            current[p + 1] = left;
        } else {
            current[p] = right;
            current[p + 1] = under_out;
        }
    }
    // Closing the braid identifies the arc leaving the bottom of position j
    // with the arc that entered the top of position j.
    let mut resolve: Vec<usize> = (0..next_id).collect();
    for j in 0..3 {
        resolve[j] = current[j];
    }
    let find = |mut i: usize, resolve: &[usize]| {
        while resolve[i] != i {
            i = resolve[i];
        }
        i
    };
    // compact the surviving ids
    let mut index = vec![usize::MAX; next_id];
    let mut arcs = 0;
    for r in &mut rels {
        for id in [&mut r.over, &mut r.under_in, &mut r.under_out] {
            let root = find(*id, &resolve);
            if index[root] == usize::MAX {
                index[root] = arcs;
                arcs += 1;
            }
            *id = index[root];
        }
    }
    (rels, arcs)
}

/// det(M) by fraction-free (Bareiss) elimination; exact over Z[t, t^-1].
fn bareiss_det(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut sign = 1i64;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .divide_exact(&prev)
                    .expect("bareiss step divides exactly");
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -&det
    } else {
        det
    }
}

/// Alexander polynomial of the closure up to a unit: a maximal minor of the
/// abelianized Fox-derivative matrix of the Wirtinger presentation.
pub fn fox_alexander_raw(w: &BraidWord) -> LaurentPoly {
    let letters = w.to_artin().band_letters();
    let (rels, arcs) = wirtinger_relations(&letters);
    assert_eq!(rels.len(), arcs, "closed 3-braid has one arc per crossing");
    if arcs <= 1 {
        return LaurentPoly::one();
    }
    let n = arcs - 1; // delete the last row and the last column
    let t = LaurentPoly::monomial(1, 1);
    let tinv = LaurentPoly::monomial(1, -1);
    let mut m = vec![vec![LaurentPoly::zero(); n]; n];
    for (row, r) in rels.iter().take(n).enumerate() {
        let (over_c, in_c) = if r.positive {
            (&LaurentPoly::one() - &t, t.clone())
        } else {
            (&LaurentPoly::one() - &tinv, tinv.clone())
        };
        for (col, c) in [(r.over, over_c), (r.under_in, in_c)] {
            if col < n {
                m[row][col] = &m[row][col] + &c;
            }
        }
        if r.under_out < n {
            m[row][r.under_out] = &m[row][r.under_out] - &LaurentPoly::one();
        }
    }
    bareiss_det(m)
}

/// Normalized Alexander polynomial of a knot closure; None when the closure
/// is not a knot.
pub fn oracle_alexander(w: &BraidWord) -> Option<LaurentPoly> {
    if closure_info(w).component_count != 1 {
        return None;
    }
    Some(
        fox_alexander_raw(w)
            .symmetrize_normalize()
            .expect("knot Alexander minor normalizes"),
    )
}

/// Casson invariant from the oracle's Alexander polynomial: half its second
/// derivative at 1, evaluated term by term.
pub fn oracle_casson(w: &BraidWord) -> Option<i64> {
    let delta = oracle_alexander(w)?;
    let mut acc = 0i64;
    for (e, c) in delta.terms() {
        let c: i64 = c.try_into().expect("oracle coefficient fits i64");
        acc += c * e * (e - 1);
    }
    assert!(acc % 2 == 0, "second derivative at 1 must be even");
    Some(acc / 2)
}

/// The torus-knot Alexander polynomial
/// (t^{3n} - 1)(t - 1) / ((t^3 - 1)(t^n - 1) t^{n-1}), computed exactly.
pub fn torus_alexander(n: u32) -> LaurentPoly {
    let tn = |k: u32| &LaurentPoly::monomial(1, k as i64) - &LaurentPoly::one();
    let num = &tn(3 * n) * &tn(1);
    let den = &tn(3) * &tn(n);
    num.divide_exact(&den)
        .expect("torus formula divides exactly")
        .shifted(-(n as i64 - 1))
}

/// Deterministic word generator for oracle cross-checks, independent of the
/// library's sampling helpers.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 11
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn random_word(&mut self, max_letters: usize) -> BraidWord {
        let len = 1 + self.below(max_letters as u64) as usize;
        BraidWord::from_letters((0..len).map(|_| {
            let sub = 1 + self.below(3) as u8;
            let sign = if self.below(2) == 0 { 1i64 } else { -1 };
            (sub, sign)
        }))
    }
}
