//! Deterministic enumeration of band-generator words by total letter count.
//!
//! Words are emitted by total letters, then lexicographically on their
//! (subscript, power) syllable sequences (powers in ascending integer order,
//! negatives first). Every stored word appears exactly once.

use rand::Rng;

use crate::classes::{delta_syllable_count, in_n, in_p, in_pa};
use crate::word::{BraidWord, Syllable};

/// Word families the enumerator can produce.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WordClass {
    /// Every syllable-reduced word.
    All,
    /// Positive words in non-decreasing cyclic subscript order.
    P,
    /// Negative words in non-increasing cyclic subscript order.
    N,
    /// Positive words with a1 and a2 between consecutive a3 syllables.
    Pstar,
    /// Cyclically reduced a_i^-q delta with delta index-3 reduced in P*.
    Pa,
    /// Pa with at least four syllables in delta.
    PaDelta4,
    /// Positive words in the Artin generators a1, a2 only.
    PositiveArtin,
}

impl WordClass {
    fn admits(&self, w: &BraidWord) -> bool {
        match self {
            WordClass::All => true,
            WordClass::P => in_p(w),
            WordClass::N => in_n(w),
            WordClass::Pstar => w.is_pstar(),
            WordClass::Pa => in_pa(w),
            WordClass::PaDelta4 => in_pa(w) && delta_syllable_count(w) >= 4,
            WordClass::PositiveArtin => {
                w.is_positive() && w.syllables().iter().all(|s| s.subscript != 3)
            }
        }
    }

    /// Candidate syllables to try at one DFS node, in lexicographic order.
    fn candidates(&self, prefix: &[Syllable], remaining: usize, out: &mut Vec<Syllable>) {
        out.clear();
        let last = prefix.last().map(|s| s.subscript);
        let rem = remaining as i64;
        let first = prefix.is_empty();
        for subscript in 1..=3u8 {
            if last == Some(subscript) {
                continue;
            }
            match self {
                WordClass::All => {
                    for power in -rem..=rem {
                        if power != 0 {
                            out.push(Syllable::new(subscript, power));
                        }
                    }
                }
                WordClass::P => {
                    if let Some(prev) = last {
                        if subscript != prev % 3 + 1 {
                            continue;
                        }
                    }
                    for power in 1..=rem {
                        out.push(Syllable::new(subscript, power));
                    }
                }
                WordClass::N => {
                    if let Some(prev) = last {
                        if subscript != (prev + 1) % 3 + 1 {
                            continue;
                        }
                    }
                    for power in -rem..=-1 {
                        out.push(Syllable::new(subscript, power));
                    }
                }
                WordClass::Pstar => {
                    for power in 1..=rem {
                        out.push(Syllable::new(subscript, power));
                    }
                }
                WordClass::Pa | WordClass::PaDelta4 => {
                    if first {
                        out.push(Syllable::new(subscript, -1));
                    }
                    for power in 1..=rem {
                        out.push(Syllable::new(subscript, power));
                    }
                }
                WordClass::PositiveArtin => {
                    if subscript == 3 {
                        continue;
                    }
                    for power in 1..=rem {
                        out.push(Syllable::new(subscript, power));
                    }
                }
            }
        }
        out.sort();
    }
}

/// Iterator over all words of a class with at most `max_letters` letters.
pub struct WordEnumerator {
    class: WordClass,
    max_letters: usize,
    target: usize,
    // DFS over syllable prefixes for the current target letter count:
    // each frame holds the candidate list for that depth and the next index.
    stack: Vec<(Vec<Syllable>, usize)>,
    prefix: Vec<Syllable>,
    used: usize,
    scratch: Vec<Syllable>,
}

pub fn enumerate_words(class: WordClass, max_letters: usize) -> WordEnumerator {
    let mut e = WordEnumerator {
        class,
        max_letters,
        target: 0,
        stack: Vec::new(),
        prefix: Vec::new(),
        used: 0,
        scratch: Vec::new(),
    };
    e.advance_target();
    e
}

impl WordEnumerator {
    fn advance_target(&mut self) -> bool {
        while self.target < self.max_letters {
            self.target += 1;
            self.prefix.clear();
            self.used = 0;
            let mut root = Vec::new();
            self.class.candidates(&[], self.target, &mut root);
            self.stack.clear();
            self.stack.push((root, 0));
            return true;
        }
        false
    }
}

impl Iterator for WordEnumerator {
    type Item = BraidWord;

    fn next(&mut self) -> Option<BraidWord> {
        loop {
            let Some((cands, idx)) = self.stack.last_mut() else {
                if !self.advance_target() {
                    return None;
                }
                continue;
            };
            let Some(&syl) = cands.get(*idx) else {
                self.stack.pop();
                if let Some(s) = self.prefix.pop() {
                    self.used -= s.power.unsigned_abs() as usize;
                }
                continue;
            };
            *idx += 1;
            let letters = syl.power.unsigned_abs() as usize;
            if self.used + letters == self.target {
                let mut syllables = self.prefix.clone();
                syllables.push(syl);
                let w = BraidWord::from_syllables(syllables);
                debug_assert_eq!(w.letter_count(), self.target);
                if self.class.admits(&w) {
                    return Some(w);
                }
            } else {
                self.prefix.push(syl);
                self.used += letters;
                let remaining = self.target - self.used;
                let mut cands = std::mem::take(&mut self.scratch);
                self.class.candidates(&self.prefix, remaining, &mut cands);
                self.stack.push((cands, 0));
            }
        }
    }
}

/// Uniform random word with at most `max_letters` letters (fewer after
/// reduction); letters are sampled independently.
pub fn random_word<R: Rng>(rng: &mut R, max_letters: usize) -> BraidWord {
    let len = rng.gen_range(1..=max_letters);
    BraidWord::from_letters((0..len).map(|_| {
        let subscript = rng.gen_range(1..=3u8);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        (subscript, sign)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::word;

    fn collect(class: WordClass, max: usize) -> Vec<BraidWord> {
        enumerate_words(class, max).collect()
    }

    #[test]
    fn p_words_up_to_two_letters() {
        let got = collect(WordClass::P, 2);
        let want: Vec<BraidWord> = [
            "a1", "a2", "a3", "a1 a2", "a1^2", "a2 a3", "a2^2", "a3 a1", "a3^2",
        ]
        .iter()
        .map(|t| word(t))
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn pa_one_letter() {
        assert_eq!(
            collect(WordClass::Pa, 1),
            vec![word("a1"), word("a2"), word("a3")]
        );
    }

    #[test]
    fn zero_letters_is_empty_stream() {
        assert_eq!(collect(WordClass::All, 0), vec![]);
    }

    #[test]
    fn all_words_are_distinct_and_bounded() {
        let words = collect(WordClass::All, 4);
        let mut seen = std::collections::HashSet::new();
        for w in &words {
            assert!(w.letter_count() >= 1 && w.letter_count() <= 4);
            assert!(seen.insert(w.clone()), "duplicate {w}");
        }
        // 6 * 5^(n-1) syllable-reduced words of exactly n letters
        assert_eq!(words.len(), 6 + 30 + 150 + 750);
    }

    #[test]
    fn emission_order_is_letters_then_lex() {
        let words = collect(WordClass::All, 3);
        for pair in words.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            let key = |w: &BraidWord| (w.letter_count(), w.syllables().to_vec());
            assert!(key(a) < key(b), "{a} !< {b}");
        }
    }

    #[test]
    fn classes_match_filters() {
        for w in collect(WordClass::Pstar, 5) {
            assert!(w.is_pstar());
        }
        for w in collect(WordClass::PaDelta4, 6) {
            assert!(in_pa(&w) && delta_syllable_count(&w) >= 4);
        }
        for w in collect(WordClass::PositiveArtin, 5) {
            assert!(w.is_positive());
            assert!(w.syllables().iter().all(|s| s.subscript != 3));
        }
        for w in collect(WordClass::N, 4) {
            assert!(in_n(&w));
        }
    }

    #[test]
    fn filtered_classes_are_subsets_of_all() {
        let all: std::collections::HashSet<_> = collect(WordClass::All, 4).into_iter().collect();
        for class in [WordClass::P, WordClass::N, WordClass::Pstar, WordClass::Pa] {
            for w in collect(class, 4) {
                assert!(all.contains(&w), "{w} missing from All");
            }
        }
    }

    #[test]
    fn pa_counts_are_monotone_in_letter_bound() {
        let mut prev = 0;
        for max in 1..=6 {
            let n = enumerate_words(WordClass::Pa, max).count();
            assert!(n >= prev);
            prev = n;
        }
    }
}
