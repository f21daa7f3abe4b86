//! Verification campaigns: exact identities on fixed word families and
//! exhaustive or randomized checks over enumerated words.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::burau::braid_eq;
use crate::classes::{excluded_set, in_excluded, in_pa};
use crate::conway::conway_from_alexander;
use crate::enumerate::{enumerate_words, random_word, WordClass};
use crate::invariants::{
    alexander, alexander_raw, bennequin_genus, casson, linking_number, skein_check,
};
use crate::perm::closure_info;
use crate::rewrite::conjugate_within;
use crate::word::{word, BraidWord};

/// Bounds for the full verification run; defaults are desk scale.
#[derive(Clone, Copy, Debug)]
pub struct VerifyBounds {
    /// letter bound for campaigns over the reduced class.
    pub max_letters: usize,
    /// letter bound for the positive-word campaign.
    pub positive_max_letters: usize,
    /// largest torus parameter n.
    pub n_max: u32,
    /// largest telescope parameter p.
    pub p_max: u32,
    /// letter bound for the normalization sweep.
    pub sweep_letters: usize,
    /// number of randomized trials per randomized campaign.
    pub samples: usize,
    /// seed for all randomized campaigns.
    pub seed: u64,
    /// node budget for conjugacy searches.
    pub search_budget: usize,
}

impl Default for VerifyBounds {
    fn default() -> Self {
        VerifyBounds {
            max_letters: 12,
            positive_max_letters: 14,
            n_max: 10,
            p_max: 4,
            sweep_letters: 10,
            samples: 200,
            seed: 0,
            search_budget: 200_000,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Failure {
    pub word: String,
    pub expected: String,
    pub got: String,
}

impl Failure {
    fn new(w: &BraidWord, expected: impl ToString, got: impl ToString) -> Failure {
        Failure {
            word: w.format(),
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignResult {
    pub claim_id: String,
    pub instances_checked: u64,
    pub failures: Vec<Failure>,
    /// wall time; excluded from JSON so reports are byte-reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CampaignResult {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}: {} on {} instances in {:.2?}{}",
            self.claim_id,
            if self.pass() { "pass" } else { "FAIL" },
            self.instances_checked,
            self.elapsed,
            if self.pass() {
                String::new()
            } else {
                format!(" ({} failures, first: {})", self.failures.len(), self.failures[0].word)
            }
        )
    }
}

/// Smallest failing word first.
fn sort_failures(failures: &mut [Failure]) {
    failures.sort_by_cached_key(|f| {
        let w = BraidWord::parse(&f.word).unwrap_or_default();
        (w.letter_count(), w.syllables().to_vec(), f.word.clone())
    });
}

struct Campaign {
    claim_id: String,
    instances: u64,
    failures: Vec<Failure>,
    start: Instant,
}

impl Campaign {
    fn new(claim_id: &str) -> Campaign {
        Campaign {
            claim_id: claim_id.to_string(),
            instances: 0,
            failures: Vec::new(),
            start: Instant::now(),
        }
    }

    fn check(&mut self, w: &BraidWord, expected: impl ToString, got: impl ToString) {
        self.check_named(&w.format(), expected, got);
    }

    fn check_named(&mut self, name: &str, expected: impl ToString, got: impl ToString) {
        self.instances += 1;
        let (expected, got) = (expected.to_string(), got.to_string());
        if expected != got {
            self.failures.push(Failure {
                word: name.to_string(),
                expected,
                got,
            });
        }
    }

    fn finish(mut self) -> CampaignResult {
        sort_failures(&mut self.failures);
        CampaignResult {
            claim_id: self.claim_id,
            instances_checked: self.instances,
            failures: self.failures,
            elapsed: self.start.elapsed(),
        }
    }
}

/// Run `check` over a word stream in parallel chunks. `check` returns None
/// for filtered-out words, which do not count as instances.
fn run_over_words<I, F>(claim_id: &str, words: I, check: F) -> CampaignResult
where
    I: Iterator<Item = BraidWord>,
    F: Fn(&BraidWord) -> Option<Result<(), Failure>> + Sync,
{
    const CHUNK: usize = 8192;
    let start = Instant::now();
    let mut instances = 0u64;
    let mut failures: Vec<Failure> = Vec::new();
    let mut words = words;
    let mut buf: Vec<BraidWord> = Vec::with_capacity(CHUNK);
    loop {
        buf.clear();
        buf.extend(words.by_ref().take(CHUNK));
        if buf.is_empty() {
            break;
        }
        let (count, mut fails) = buf
            .par_iter()
            .map(|w| match check(w) {
                None => (0u64, Vec::new()),
                Some(Ok(())) => (1, Vec::new()),
                Some(Err(f)) => (1, vec![f]),
            })
            .reduce(
                || (0, Vec::new()),
                |mut a, mut b| {
                    a.0 += b.0;
                    a.1.append(&mut b.1);
                    a
                },
            );
        instances += count;
        failures.append(&mut fails);
    }
    sort_failures(&mut failures);
    CampaignResult {
        claim_id: claim_id.to_string(),
        instances_checked: instances,
        failures,
        elapsed: start.elapsed(),
    }
}

/// Casson of the (3,n) torus-knot closure (a1 a2)^n equals (n^2 - 1)/3 for
/// every n coprime to 3.
pub fn verify_torus_formula(n_max: u32) -> CampaignResult {
    let mut c = Campaign::new("torus-casson-formula");
    for n in 2..=n_max {
        if n % 3 == 0 {
            continue; // closure is not a knot
        }
        let w = word(&"a1 a2 ".repeat(n as usize));
        let expected = ((n * n - 1) / 3) as i64;
        c.check(&w, expected, casson(&w).unwrap());
    }
    c.finish()
}

/// The telescope word family for one even m = 2p.
pub struct TelescopeWords {
    pub base: BraidWord,
    pub steps: [BraidWord; 6],
    pub smoothings: [BraidWord; 6],
}

pub fn telescope_words(p: u32) -> TelescopeWords {
    let m = 2 * p as usize;
    let tail = "a3 a1 a2 ".repeat(m - 2);
    let w = |text: &str| word(&format!("{text} {tail}"));
    TelescopeWords {
        base: word(&format!("a1^-1 a2 {}", "a3 a1 a2 ".repeat(m))),
        steps: [
            word(&format!("a1 a2 {}", "a3 a1 a2 ".repeat(m))),
            w("a1 a2 a1^-1 a2^2 a1^-1 a2 a1^2 a2"),
            w("a1 a2 a1^-2 a2 a1^2 a2"),
            w("a1 a2^2 a1^2 a2"),
            w("a1^3 a2"),
            w("a1 a2"),
        ],
        smoothings: [
            word(&format!("a2 {}", "a3 a1 a2 ".repeat(m))),
            w("a1 a2 a1^-1 a2 a1 a2 a1^-1 a2 a1^2 a2"),
            w("a1 a2 a1^-1 a2 a1^-1 a2 a1^2 a2"),
            w("a1 a2 a1^-1 a2 a1^2 a2"),
            w("a1 a2 a1^2 a2"),
            w("a1^2 a2"),
        ],
    }
}

fn telescope_linking_values(p: i64) -> [i64; 6] {
    [-p, -4 * p + 1, -p - 1, -p, -4 * (p - 1) - 2, -p]
}

/// Linking numbers of the six smoothing words of the telescope family.
pub fn verify_telescope_linking(p_max: u32) -> CampaignResult {
    let mut c = Campaign::new("telescope-linking-values");
    for p in 1..=p_max {
        let words = telescope_words(p);
        let expected = telescope_linking_values(p as i64);
        for (lambda, want) in words.smoothings.iter().zip(expected) {
            c.check(lambda, want, linking_number(lambda).unwrap());
        }
    }
    c.finish()
}

/// The five crossing-change steps, their telescoped sum, and the base
/// identity C(base) = C(step1) - p on the telescope family.
pub fn verify_telescope_casson(p_max: u32) -> CampaignResult {
    let mut c = Campaign::new("telescope-casson-steps");
    for p in 1..=p_max {
        let p_i = p as i64;
        let words = telescope_words(p);
        let cs: Vec<i64> = words.steps.iter().map(|w| casson(w).unwrap()).collect();
        let gaps = [4 * p_i - 1, p_i + 1, -p_i, 4 * (p_i - 1) + 2, p_i];
        for (i, gap) in gaps.iter().enumerate() {
            c.check(&words.steps[i], cs[i], cs[i + 1] + gap);
        }
        c.check(&words.steps[0], cs[0] - cs[5], 9 * p_i - 2);
        c.check(&words.base, casson(&words.base).unwrap(), cs[0] - p_i);
    }
    c.finish()
}

/// Both telescope campaigns as one result.
pub fn verify_claim_d4(p_max: u32) -> CampaignResult {
    let start = Instant::now();
    let a = verify_telescope_linking(p_max);
    let b = verify_telescope_casson(p_max);
    let mut failures = [a.failures, b.failures].concat();
    sort_failures(&mut failures);
    CampaignResult {
        claim_id: "crossing-change-telescope".to_string(),
        instances_checked: a.instances_checked + b.instances_checked,
        failures,
        elapsed: start.elapsed(),
    }
}

/// Positive words in a1, a2 with both generators present and 2-component
/// closure have negative linking number.
pub fn verify_lemma_lk0(max_letters: usize) -> CampaignResult {
    run_over_words(
        "positive-artin-linking-negative",
        enumerate_words(WordClass::PositiveArtin, max_letters),
        |w| {
            let has_both = w.syllables().iter().any(|s| s.subscript == 1)
                && w.syllables().iter().any(|s| s.subscript == 2);
            if !has_both || closure_info(w).component_count != 2 {
                return None;
            }
            let lk = linking_number(w).unwrap();
            Some((lk < 0).then_some(()).ok_or_else(|| Failure::new(w, "lk < 0", lk)))
        },
    )
}

/// Reduced-class words a_i^-1 delta with delta free of a3, at least four
/// syllables in delta, and 2-component closure have negative linking number.
pub fn verify_lemma_lk(max_letters: usize) -> CampaignResult {
    run_over_words(
        "single-inverse-artin-linking-negative",
        enumerate_words(WordClass::PaDelta4, max_letters),
        |w| {
            let q1 = w.syllables().first().is_some_and(|s| s.power < 0);
            let no_a3 = w.a3_syllable_count() == 0;
            if !q1 || !no_a3 || closure_info(w).component_count != 2 {
                return None;
            }
            let lk = linking_number(w).unwrap();
            Some((lk < 0).then_some(()).ok_or_else(|| Failure::new(w, "lk < 0", lk)))
        },
    )
}

/// Reduced-class words with at least four syllables in delta and
/// 2-component closure have non-positive linking number.
pub fn verify_lemma_lk1(max_letters: usize) -> CampaignResult {
    run_over_words(
        "reduced-class-linking-nonpositive",
        enumerate_words(WordClass::PaDelta4, max_letters),
        |w| {
            if closure_info(w).component_count != 2 {
                return None;
            }
            let lk = linking_number(w).unwrap();
            Some((lk <= 0).then_some(()).ok_or_else(|| Failure::new(w, "lk <= 0", lk)))
        },
    )
}

/// All three linking campaigns as one result.
pub fn verify_linking_lemmas(max_letters: usize) -> CampaignResult {
    let start = Instant::now();
    let parts = [
        verify_lemma_lk0(max_letters),
        verify_lemma_lk(max_letters),
        verify_lemma_lk1(max_letters),
    ];
    let instances = parts.iter().map(|p| p.instances_checked).sum();
    let mut failures: Vec<Failure> = parts.into_iter().flat_map(|p| p.failures).collect();
    sort_failures(&mut failures);
    CampaignResult {
        claim_id: "linking-lemmas".to_string(),
        instances_checked: instances,
        failures,
        elapsed: start.elapsed(),
    }
}

/// Reduced-class knots with at least four syllables in delta, outside the
/// excluded set, have positive Casson invariant.
pub fn verify_prop3(max_letters: usize) -> CampaignResult {
    run_over_words(
        "reduced-class-casson-positive",
        enumerate_words(WordClass::PaDelta4, max_letters),
        |w| {
            if !closure_info(w).is_knot() || in_excluded(w) {
                return None;
            }
            let c = casson(w).unwrap();
            Some((c > 0).then_some(()).ok_or_else(|| Failure::new(w, "casson > 0", c)))
        },
    )
}

/// Positive Artin knots with nontrivial Alexander polynomial have positive
/// Casson invariant.
pub fn verify_positive_knots(max_letters: usize) -> CampaignResult {
    run_over_words(
        "positive-knot-casson-positive",
        enumerate_words(WordClass::PositiveArtin, max_letters),
        |w| {
            if !closure_info(w).is_knot() {
                return None;
            }
            let delta = alexander(w).unwrap();
            if delta.is_one() {
                return None;
            }
            let c = casson(w).unwrap();
            Some((c > 0).then_some(()).ok_or_else(|| Failure::new(w, "casson > 0", c)))
        },
    )
}

/// Invariant report for one word of the excluded set.
#[derive(Clone, Debug, Serialize)]
pub struct ExcludedEntry {
    pub word: String,
    pub components: usize,
    pub in_pa: bool,
    pub delta: String,
    pub nabla: String,
    pub casson: i64,
    pub genus: i64,
}

/// Compute invariants of all twelve excluded words, asserting only that each
/// closure is a knot in the reduced class; Casson values are reported
/// without any sign claim.
pub fn report_excluded_set() -> (Vec<ExcludedEntry>, CampaignResult) {
    let mut c = Campaign::new("excluded-set-report");
    let mut entries = Vec::new();
    for w in excluded_set() {
        let info = closure_info(w);
        c.check(w, 1usize, info.component_count);
        c.check(w, true, in_pa(w));
        if !info.is_knot() {
            continue;
        }
        let delta = alexander(w).unwrap();
        let nabla = conway_from_alexander(&delta).unwrap();
        entries.push(ExcludedEntry {
            word: w.format(),
            components: info.component_count,
            in_pa: in_pa(w),
            delta: delta.render("t"),
            nabla: nabla.render(),
            casson: casson(w).unwrap(),
            genus: bennequin_genus(w),
        });
    }
    c.check_named("excluded set size", 12usize, entries.len());
    (entries, c.finish())
}

/// Fixed rewrite pairs: equal or conjugate words must share the raw
/// Alexander value, agree on Casson when knots, and meet in a bounded
/// conjugacy search.
pub fn verify_rewrite_conjugacy(budget: usize) -> CampaignResult {
    let mut c = Campaign::new("rewrite-conjugacy-checks");
    let mut pairs: Vec<(BraidWord, BraidWord, bool)> = Vec::new();
    // a3^2 absorbed into the a2 syllable after rotating past a1^-1
    for j in 1..=2 {
        for k in 1..=2 {
            for m in 1..=2 {
                pairs.push((
                    word(&format!("a1^-1 a2^{j} a1^{k} a2^{m} a3^2")),
                    word(&format!("a1^-1 a2^{} a1^{k} a2^{m}", j + 2)),
                    false,
                ));
            }
        }
    }
    // rotations are conjugations
    for text in ["a1^-1 a2 a3^2 a1 a2", "a3 a1 a2 a3", "a1 a2 a1 a2 a1 a2"] {
        let w = word(text);
        pairs.push((w.cyclic_rotate(1), w, false));
    }
    // the shift identity a3^-1 a2^k ... = a2 a1^-1 a2^(k-1) ... as elements
    pairs.push((word("a3^-1 a2^2 a1 a2"), word("a2 a1^-1 a2 a1 a2"), true));
    pairs.push((word("a3^-1 a2 a1 a2"), word("a2^2"), true));
    // and its conjugate reduced form
    pairs.push((word("a3^-1 a2^2 a1 a2"), word("a1^-1 a2 a1 a2^2"), false));

    for (u, v, equal_elements) in &pairs {
        c.check(
            u,
            format!("raw Alexander of {v}"),
            if alexander_raw(u) == alexander_raw(v) {
                format!("raw Alexander of {v}")
            } else {
                format!("{:?}", alexander_raw(u))
            },
        );
        if *equal_elements {
            c.check(u, true, braid_eq(u, v));
        }
        let u_knot = closure_info(u).is_knot();
        if u_knot && closure_info(v).is_knot() {
            c.check(u, casson(v).unwrap(), casson(u).unwrap());
        }
        match conjugate_within(u, v, budget) {
            Some(found) => c.check(u, true, found),
            None => c.failures.push(Failure::new(
                u,
                format!("conjugate to {v} within budget"),
                "search budget exhausted",
            )),
        }
    }
    c.finish()
}

/// Seeded random crossing-change trials: C(K+) - C(K-) = lk(L0) at a random
/// site of a random knot word.
pub fn verify_skein_random(samples: usize, seed: u64) -> CampaignResult {
    let mut c = Campaign::new("crossing-change-identity");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < samples {
        let w = random_word(&mut rng, 10);
        if !closure_info(&w).is_knot() || w.artin_letter_count() == 0 {
            continue;
        }
        let site = rng.gen_range(0..w.artin_letter_count());
        let r = skein_check(&w, site).unwrap();
        c.check(
            &w,
            format!("C+ - C- = lk at site {site}"),
            if r.holds {
                format!("C+ - C- = lk at site {site}")
            } else {
                format!("{} - {} != {}", r.c_plus, r.c_minus, r.lk0)
            },
        );
        done += 1;
    }
    c.finish()
}

/// Seeded random invariance trials: Alexander, Conway and Casson are
/// unchanged by conjugation, rotation and mirroring on knot closures, and
/// the linking number is unchanged on 2-component closures.
pub fn verify_invariance_random(samples: usize, seed: u64) -> CampaignResult {
    let mut c = Campaign::new("conjugation-invariance");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < samples {
        let w = random_word(&mut rng, 10);
        let g = random_word(&mut rng, 4);
        let conj = w.conjugate(&g);
        let rot = w.cyclic_rotate(rng.gen_range(0..=w.letter_count().max(1)));
        let info = closure_info(&w);
        match info.component_count {
            1 => {
                let delta = alexander(&w).unwrap();
                let nabla = conway_from_alexander(&delta).unwrap();
                for other in [&conj, &rot] {
                    c.check(&w, delta.render("t"), alexander(other).unwrap().render("t"));
                    c.check(
                        &w,
                        nabla.render(),
                        conway_from_alexander(&alexander(other).unwrap()).unwrap().render(),
                    );
                    c.check(&w, casson(&w).unwrap(), casson(other).unwrap());
                }
                c.check(&w, casson(&w).unwrap(), casson(&w.mirror()).unwrap());
            }
            2 => {
                let lk = linking_number(&w).unwrap();
                c.check(&w, lk, linking_number(&conj).unwrap());
                c.check(&w, lk, linking_number(&rot).unwrap());
            }
            _ => continue,
        }
        done += 1;
    }
    c.finish()
}

/// Exhaustive sweep: every knot closure with at most `max_letters` letters
/// has a normalized symmetric Alexander polynomial, the Conway conversion
/// round-trips exactly, and the two Casson routes agree.
pub fn verify_normalization_sweep(max_letters: usize) -> CampaignResult {
    run_over_words(
        "normalization-sweep",
        enumerate_words(WordClass::All, max_letters),
        |w| {
            if !closure_info(w).is_knot() {
                return None;
            }
            let delta = alexander(w).unwrap();
            if !num_traits::One::is_one(&delta.eval_at_one()) || !delta.is_symmetric() {
                return Some(Err(Failure::new(w, "normalized symmetric delta", delta.render("t"))));
            }
            let nabla = match conway_from_alexander(&delta) {
                Ok(n) => n,
                Err(e) => return Some(Err(Failure::new(w, "conway conversion", e))),
            };
            if nabla.substitute_x_squared().as_ref() != Ok(&delta) {
                return Some(Err(Failure::new(w, "conway round-trip", nabla.render())));
            }
            let second = delta.second_derivative_at_one();
            let two = num_bigint::BigInt::from(2);
            if !num_traits::Zero::is_zero(&(&second % &two)) || second / two != nabla.x2_coefficient() {
                return Some(Err(Failure::new(w, "dual casson agreement", nabla.render())));
            }
            Some(Ok(()))
        },
    )
}

/// Alexander exponent spans of normal-form knot words are bounded by twice
/// the canonical surface genus.
pub fn verify_genus_bound(max_letters: usize) -> CampaignResult {
    run_over_words(
        "genus-degree-bound",
        enumerate_words(WordClass::All, max_letters),
        |w| {
            if !closure_info(w).is_knot() || crate::classes::normal_form(w).is_none() {
                return None;
            }
            let delta = alexander(w).unwrap();
            let half_span = delta.exponent_span() / 2;
            let genus = bennequin_genus(w);
            Some(
                (half_span <= genus)
                    .then_some(())
                    .ok_or_else(|| Failure::new(w, format!("span/2 <= {genus}"), half_span)),
            )
        },
    )
}

/// Every campaign at the given bounds, in a fixed order.
pub fn verify_all(bounds: &VerifyBounds) -> Vec<CampaignResult> {
    vec![
        verify_torus_formula(bounds.n_max),
        verify_telescope_linking(bounds.p_max),
        verify_telescope_casson(bounds.p_max),
        verify_lemma_lk0(bounds.max_letters),
        verify_lemma_lk(bounds.max_letters),
        verify_lemma_lk1(bounds.max_letters),
        verify_prop3(bounds.max_letters),
        verify_positive_knots(bounds.positive_max_letters),
        report_excluded_set().1,
        verify_rewrite_conjugacy(bounds.search_budget),
        verify_skein_random(bounds.samples, bounds.seed),
        verify_invariance_random(bounds.samples, bounds.seed),
        verify_genus_bound(bounds.sweep_letters.min(8)),
        verify_normalization_sweep(bounds.sweep_letters),
    ]
}
