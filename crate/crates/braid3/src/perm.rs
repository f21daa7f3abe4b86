//! Strand permutations of 3-braids and closure component bookkeeping.

use serde::Serialize;

use crate::word::BraidWord;

/// A permutation of the strand positions {1,2,3}.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Permutation3 {
    /// image[i - 1] is where strand position i is sent.
    image: [u8; 3],
}

impl Permutation3 {
    pub fn identity() -> Self {
        Permutation3 { image: [1, 2, 3] }
    }

    pub fn transposition(i: u8, j: u8) -> Self {
        let mut image = [1, 2, 3];
        image[i as usize - 1] = j;
        image[j as usize - 1] = i;
        Permutation3 { image }
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.image[i as usize - 1]
    }

    /// Left-to-right composition in word order: `self` acts first, then `rhs`.
    pub fn compose(&self, rhs: &Permutation3) -> Permutation3 {
        Permutation3 {
            image: [
                rhs.apply(self.image[0]),
                rhs.apply(self.image[1]),
                rhs.apply(self.image[2]),
            ],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image == [1, 2, 3]
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = [false; 3];
        let mut cycles = 0;
        for start in 1..=3u8 {
            if seen[start as usize - 1] {
                continue;
            }
            cycles += 1;
            let mut cur = start;
            while !seen[cur as usize - 1] {
                seen[cur as usize - 1] = true;
                cur = self.apply(cur);
            }
        }
        cycles
    }
}

/// The transposition induced by one band generator; signs are irrelevant.
pub fn generator_transposition(subscript: u8) -> Permutation3 {
    match subscript {
        1 => Permutation3::transposition(1, 2),
        2 => Permutation3::transposition(2, 3),
        3 => Permutation3::transposition(1, 3),
        _ => panic!("subscript out of range"),
    }
}

/// Closure data of a braid word: the strand permutation (left-to-right
/// composition of one transposition per band letter), the number of link
/// components, and a component label per strand.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClosureInfo {
    pub permutation: Permutation3,
    pub component_count: usize,
    /// strand_component[i - 1] is the component label (1-based, in order of
    /// first appearance: strand 1 always lies in component 1).
    pub strand_component: [u8; 3],
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ClosureKind {
    Knot,
    TwoComponentLink,
    ThreeComponentLink,
}

impl ClosureInfo {
    pub fn is_knot(&self) -> bool {
        self.component_count == 1
    }

    pub fn kind(&self) -> ClosureKind {
        match self.component_count {
            1 => ClosureKind::Knot,
            2 => ClosureKind::TwoComponentLink,
            _ => ClosureKind::ThreeComponentLink,
        }
    }
}

pub fn closure_permutation(w: &BraidWord) -> Permutation3 {
    let mut p = Permutation3::identity();
    for s in w.syllables() {
        if s.power % 2 != 0 {
            p = p.compose(&generator_transposition(s.subscript));
        }
    }
    p
}

pub fn closure_info(w: &BraidWord) -> ClosureInfo {
    let permutation = closure_permutation(w);
    let mut strand_component = [0u8; 3];
    let mut count = 0u8;
    for start in 1..=3u8 {
        if strand_component[start as usize - 1] != 0 {
            continue;
        }
        count += 1;
        let mut cur = start;
        while strand_component[cur as usize - 1] == 0 {
            strand_component[cur as usize - 1] = count;
            cur = permutation.apply(cur);
        }
    }
    ClosureInfo {
        permutation,
        component_count: count as usize,
        strand_component,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::word;

    #[test]
    fn generator_closures() {
        let info = closure_info(&word("a1"));
        assert_eq!(info.permutation, Permutation3::transposition(1, 2));
        assert_eq!(info.component_count, 2);
        assert_eq!(info.strand_component, [1, 1, 2]);

        let info = closure_info(&word("a3"));
        assert_eq!(info.permutation, Permutation3::transposition(1, 3));
        assert_eq!(info.component_count, 2);
    }

    #[test]
    fn trefoil_is_knot() {
        let info = closure_info(&word("a1 a2 a1 a2"));
        assert_eq!(info.component_count, 1);
        assert!(info.is_knot());
    }

    #[test]
    fn permutation_is_word_homomorphism() {
        let u = word("a1 a3^2 a2^-1");
        let v = word("a2 a1^-3");
        let uv = u.concat(&v);
        assert_eq!(
            closure_permutation(&uv),
            closure_permutation(&u).compose(&closure_permutation(&v))
        );
    }

    #[test]
    fn a3_matches_its_artin_expansion() {
        assert_eq!(
            closure_permutation(&word("a3^5")),
            closure_permutation(&word("a3^5").to_artin())
        );
    }

    #[test]
    fn empty_word_closure() {
        let info = closure_info(&BraidWord::empty());
        assert!(info.permutation.is_identity());
        assert_eq!(info.component_count, 3);
    }
}
