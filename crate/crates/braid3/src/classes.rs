//! Word classes over the band generators: P, N, P*, P^a, the excluded set,
//! and normal-form recognition.
//!
//! P is the set of positive words whose letter subscripts are in cyclically
//! non-decreasing order (each step repeats or advances 1 -> 2 -> 3 -> 1); N
//! is the negative, non-increasing counterpart. P* asks a positive word to
//! contain both a1 and a2 between consecutive a3 syllables. P^a contains the
//! cyclically reduced words a_i^-q delta with q in {0,1} and delta a
//! non-empty index-3 reduced P* word. The excluded set is a fixed list of
//! twelve five-syllable words treated separately by the verifier.

use std::sync::OnceLock;

use serde::Serialize;

use crate::word::{BraidWord, Syllable};

/// Recognized normal-form shape of a word, if any.
///
/// `FormI(k)`: alpha^k followed by a P word, k >= 0; `FormII(k)`: alpha^k
/// followed by an N word, k <= 0; `FormIII`: a P word followed by an N word
/// (alpha = a2 a1). Recognition is syntactic on the stored word; shapes are
/// tried in the order I, II, III and at most one exponent k can match a form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NormalForm {
    FormI(i64),
    FormII(i64),
    FormIII,
}

impl Serialize for NormalForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            NormalForm::FormI(k) => s.serialize_str(&format!("I({k})")),
            NormalForm::FormII(k) => s.serialize_str(&format!("II({k})")),
            NormalForm::FormIII => s.serialize_str("III"),
        }
    }
}

/// Class membership flags and syllable counts of one word.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ClassReport {
    pub in_p: bool,
    pub in_n: bool,
    pub in_pstar: bool,
    pub index3_reduced: bool,
    pub in_pa: bool,
    pub in_excluded: bool,
    pub normal_form: Option<NormalForm>,
    pub syllable_count: usize,
    pub a3_syllable_count: usize,
}

fn nd_step(cur: u8, next: u8) -> bool {
    next == cur || next == cur % 3 + 1
}

fn ni_step(cur: u8, next: u8) -> bool {
    next == cur || next == (cur + 1) % 3 + 1
}

fn is_nd(subs: &[u8]) -> bool {
    subs.windows(2).all(|p| nd_step(p[0], p[1]))
}

fn is_ni(subs: &[u8]) -> bool {
    subs.windows(2).all(|p| ni_step(p[0], p[1]))
}

pub fn in_p(w: &BraidWord) -> bool {
    let subs: Vec<u8> = w.syllables().iter().map(|s| s.subscript).collect();
    w.is_positive() && is_nd(&subs)
}

pub fn in_n(w: &BraidWord) -> bool {
    let subs: Vec<u8> = w.syllables().iter().map(|s| s.subscript).collect();
    w.is_negative() && is_ni(&subs)
}

/// Split a P^a word into (q, i, delta); q = 0 gives i = 0.
pub fn pa_split(w: &BraidWord) -> Option<(u8, u8, BraidWord)> {
    let syl = w.syllables();
    if syl.is_empty() {
        return None;
    }
    if w.is_positive() {
        let delta = w.clone();
        (delta.is_pstar() && delta.is_index3_reduced()).then_some((0, 0, delta))
    } else {
        let head = syl[0];
        if head.power != -1 || syl.len() < 2 {
            return None;
        }
        let i = head.subscript;
        let delta = BraidWord::from_syllables(syl[1..].iter().copied());
        if !delta.is_positive() {
            return None;
        }
        // cyclic reduction: the trailing letter must not cancel the leading a_i^-1
        if syl.last().unwrap().subscript == i {
            return None;
        }
        (delta.is_pstar() && delta.is_index3_reduced()).then_some((1, i, delta))
    }
}

pub fn in_pa(w: &BraidWord) -> bool {
    pa_split(w).is_some()
}

/// The twelve excluded five-syllable words.
pub fn excluded_set() -> &'static [BraidWord; 12] {
    static SET: OnceLock<[BraidWord; 12]> = OnceLock::new();
    SET.get_or_init(|| {
        [
            "a1^-1 a2 a3^2 a1 a2",
            "a1^-1 a3^2 a1 a2 a3",
            "a1^-1 a3 a1 a2^2 a3",
            "a1^-1 a2 a3 a1 a2^2",
            "a2^-1 a3 a1 a2 a3^2",
            "a2^-1 a3 a1^2 a2 a3",
            "a2^-1 a1 a2 a3^2 a1",
            "a2^-1 a1^2 a2 a3 a1",
            "a3^-1 a1 a2 a3 a1^2",
            "a3^-1 a1 a2^2 a3 a1",
            "a3^-1 a2 a3 a1^2 a2",
            "a3^-1 a2^2 a3 a1 a2",
        ]
        .map(|t| BraidWord::parse(t).unwrap())
    })
}

pub fn in_excluded(w: &BraidWord) -> bool {
    excluded_set().iter().any(|e| e == w)
}

fn letters_positive_nd(letters: &[(u8, i8)]) -> bool {
    letters.iter().all(|&(_, s)| s > 0)
        && letters
            .windows(2)
            .all(|p| nd_step(p[0].0, p[1].0))
}

fn letters_negative_ni(letters: &[(u8, i8)]) -> bool {
    letters.iter().all(|&(_, s)| s < 0)
        && letters
            .windows(2)
            .all(|p| ni_step(p[0].0, p[1].0))
}

pub fn normal_form(w: &BraidWord) -> Option<NormalForm> {
    let letters = w.band_letters();
    // Form I: (a2 a1)^k then a P word. At most one k admits a P remainder,
    // since a P word never contains the descending step 2 -> 1.
    for k in 0..=letters.len() / 2 {
        let prefix_ok = (0..k).all(|j| letters[2 * j] == (2, 1) && letters[2 * j + 1] == (1, 1));
        if !prefix_ok {
            break;
        }
        if letters_positive_nd(&letters[2 * k..]) {
            return Some(NormalForm::FormI(k as i64));
        }
    }
    // Form II: (a1^-1 a2^-1)^k then an N word.
    for k in 0..=letters.len() / 2 {
        let prefix_ok =
            (0..k).all(|j| letters[2 * j] == (1, -1) && letters[2 * j + 1] == (2, -1));
        if !prefix_ok {
            break;
        }
        if letters_negative_ni(&letters[2 * k..]) {
            return Some(NormalForm::FormII(-(k as i64)));
        }
    }
    // Form III: a P word then an N word.
    let split = letters.iter().position(|&(_, s)| s < 0).unwrap_or(letters.len());
    if letters_positive_nd(&letters[..split]) && letters_negative_ni(&letters[split..]) {
        return Some(NormalForm::FormIII);
    }
    None
}

pub fn classify(w: &BraidWord) -> ClassReport {
    ClassReport {
        in_p: in_p(w),
        in_n: in_n(w),
        in_pstar: w.is_pstar(),
        index3_reduced: w.is_index3_reduced(),
        in_pa: in_pa(w),
        in_excluded: in_excluded(w),
        normal_form: normal_form(w),
        syllable_count: w.syllable_count(),
        a3_syllable_count: w.a3_syllable_count(),
    }
}

/// Syllable count of the delta part of a P^a word (all of it when q = 0).
pub fn delta_syllable_count(w: &BraidWord) -> usize {
    match w.syllables().first() {
        Some(Syllable { power, .. }) if *power < 0 => w.syllable_count() - 1,
        _ => w.syllable_count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::word;

    #[test]
    fn p_membership() {
        assert!(in_p(&word("a1 a2 a3 a1")));
        assert!(in_p(&word("a1^2 a2 a3^3")));
        assert!(in_p(&word("a3 a1")));
        assert!(!in_p(&word("a2 a1")));
        assert!(!in_p(&word("a1^-1 a2")));
        assert!(in_p(&BraidWord::empty()));
    }

    #[test]
    fn n_membership() {
        assert!(in_n(&word("a3^-1 a2^-2 a1^-1 a3^-1")));
        assert!(!in_n(&word("a1^-1 a2^-1")));
        assert!(!in_n(&word("a1 a2")));
    }

    #[test]
    fn pstar_and_index3() {
        assert!(word("a3 a1 a2 a3").is_pstar());
        assert!(!word("a3 a1 a3").is_pstar());
        assert!(word("a2 a3 a1").is_index3_reduced());
        assert!(!word("a1 a3^2 a2").is_index3_reduced());
        assert!(!word("a1 a3").is_index3_reduced());
        assert!(!word("a3 a2").is_index3_reduced());
    }

    #[test]
    fn pa_membership() {
        // spec example: the first excluded word is in P^a with 5 syllables
        let e = word("a1^-1 a2 a3^2 a1 a2");
        let report = classify(&e);
        assert!(report.in_pa);
        assert!(report.in_excluded);
        assert_eq!(report.syllable_count, 5);
        assert_eq!(delta_syllable_count(&e), 4);

        assert!(in_pa(&word("a3 a1 a2 a3")));
        assert!(!in_pa(&word("a1^-1 a2 a1^2"))); // ends with a1: not cyclically reduced
        assert!(!in_pa(&word("a1^-2 a2 a3"))); // q must be 0 or 1
        assert!(!in_pa(&BraidWord::empty()));
        assert!(!in_pa(&word("a1^-1 a3 a1 a3 a2"))); // delta not in P*
    }

    #[test]
    fn every_excluded_word_is_pa() {
        for e in excluded_set() {
            let r = classify(e);
            assert!(r.in_pa, "{e}");
            assert!(r.in_excluded);
            assert_eq!(r.syllable_count, 5);
        }
    }

    #[test]
    fn p_implies_pstar_and_index3_reduced() {
        // ND order never puts a1 before or a2 after an a3 syllable
        for w in ["a1 a2 a3 a1", "a3 a1 a2 a3", "a1^2 a2^3", "a2 a3^2 a1"] {
            let w = word(w);
            if in_p(&w) {
                assert!(w.is_pstar());
                assert!(w.is_index3_reduced());
            }
        }
    }

    #[test]
    fn normal_form_recognition() {
        assert_eq!(normal_form(&word("a1 a2 a3")), Some(NormalForm::FormI(0)));
        // a2 a1 a2 a3 = alpha * (a2 a3)
        assert_eq!(normal_form(&word("a2 a1 a2 a3")), Some(NormalForm::FormI(1)));
        assert_eq!(normal_form(&word("a2 a1 a2 a1")), Some(NormalForm::FormI(2)));
        assert_eq!(
            normal_form(&word("a1^-1 a2^-1 a3^-1 a2^-1")),
            Some(NormalForm::FormII(-1))
        );
        assert_eq!(normal_form(&word("a1 a2 a2^-1 a1^-1")), Some(NormalForm::FormI(0))); // reduces to empty
        assert_eq!(normal_form(&word("a1 a2 a1^-1")), Some(NormalForm::FormIII));
        assert_eq!(normal_form(&word("a1^-1 a2")), None);
        // positive but 1 -> 3 breaks non-decreasing order
        assert_eq!(normal_form(&word("a3 a1 a3")), None);
        assert_eq!(normal_form(&word("a2 a1 a1^-1 a2")), Some(NormalForm::FormI(0))); // reduces to a2^2
    }

    #[test]
    fn classify_spec_examples() {
        assert!(classify(&word("a1 a2 a3 a1")).in_p);
        let e = classify(&word("a1^-1 a2 a3^2 a1 a2"));
        assert!(e.in_pa && e.in_excluded);
        assert_eq!(e.syllable_count, 5);
        assert!(!classify(&word("a3 a1 a3")).in_pstar);
    }
}
