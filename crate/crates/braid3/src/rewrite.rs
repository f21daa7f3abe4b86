//! Best-effort search for short conjugacy representatives.
//!
//! States are cyclically reduced words; moves are single applications of the
//! two-letter identities generated by a2 a1 = a3 a2 = a1 a3 (including their
//! inverse and shift forms), plus one-step cyclic rotation. All moves
//! preserve or shorten letter count, so the search never certifies
//! minimality; it is a bounded breadth-first search.

use std::collections::{HashSet, VecDeque};

use crate::word::BraidWord;

/// Directed two-letter rewrites ((s1, e1), (s2, e2)) -> ((s1', e1'), (s2', e2')).
///
/// Rows come from the defining relation a2 a1 = a3 a2 = a1 a3, its inverses,
/// and the six shift identities obtained by moving one generator across.
const MOVES: &[[(u8, i8); 4]] = &[
    // a2 a1 = a3 a2 = a1 a3
    [(2, 1), (1, 1), (3, 1), (2, 1)],
    [(3, 1), (2, 1), (2, 1), (1, 1)],
    [(2, 1), (1, 1), (1, 1), (3, 1)],
    [(1, 1), (3, 1), (2, 1), (1, 1)],
    [(3, 1), (2, 1), (1, 1), (3, 1)],
    [(1, 1), (3, 1), (3, 1), (2, 1)],
    // inverses: a1^-1 a2^-1 = a2^-1 a3^-1 = a3^-1 a1^-1
    [(1, -1), (2, -1), (2, -1), (3, -1)],
    [(2, -1), (3, -1), (1, -1), (2, -1)],
    [(1, -1), (2, -1), (3, -1), (1, -1)],
    [(3, -1), (1, -1), (1, -1), (2, -1)],
    [(2, -1), (3, -1), (3, -1), (1, -1)],
    [(3, -1), (1, -1), (2, -1), (3, -1)],
    // shifts: a1^-1 a2 = a3 a1^-1, a2^-1 a3 = a1 a2^-1, a3^-1 a1 = a2 a3^-1,
    //         a1^-1 a3 = a3 a2^-1, a2^-1 a1 = a1 a3^-1, a3^-1 a2 = a2 a1^-1
    [(1, -1), (2, 1), (3, 1), (1, -1)],
    [(3, 1), (1, -1), (1, -1), (2, 1)],
    [(2, -1), (3, 1), (1, 1), (2, -1)],
    [(1, 1), (2, -1), (2, -1), (3, 1)],
    [(3, -1), (1, 1), (2, 1), (3, -1)],
    [(2, 1), (3, -1), (3, -1), (1, 1)],
    [(1, -1), (3, 1), (3, 1), (2, -1)],
    [(3, 1), (2, -1), (1, -1), (3, 1)],
    [(2, -1), (1, 1), (1, 1), (3, -1)],
    [(1, 1), (3, -1), (2, -1), (1, 1)],
    [(3, -1), (2, 1), (2, 1), (1, -1)],
    [(2, 1), (1, -1), (3, -1), (2, 1)],
];

fn neighbors(w: &BraidWord, out: &mut Vec<BraidWord>) {
    out.clear();
    let letters = w.band_letters();
    if !letters.is_empty() {
        out.push(w.cyclic_rotate(1));
    }
    for i in 0..letters.len().saturating_sub(1) {
        let pair = (letters[i], letters[i + 1]);
        for mv in MOVES {
            if pair == (mv[0], mv[1]) {
                let mut next = letters.clone();
                next[i] = mv[2];
                next[i + 1] = mv[3];
                out.push(
                    BraidWord::from_letters(next.into_iter().map(|(s, e)| (s, e as i64)))
                        .cyclic_reduce(),
                );
            }
        }
    }
}

/// Result of the bounded search: the best word found and whether the node
/// budget ran out with frontier states unexplored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortestSearch {
    pub word: BraidWord,
    pub budget_exhausted: bool,
}

fn search_key(w: &BraidWord) -> (usize, Vec<(u8, i64)>) {
    (
        w.letter_count(),
        w.syllables().iter().map(|s| (s.subscript, s.power)).collect(),
    )
}

/// Breadth-first search for a short cyclic representative of the conjugacy
/// class of `w`, expanding at most `budget` states. Deterministic for a
/// fixed budget; the result is conjugate to `w` and never longer. The
/// cyclically reduced input is kept unless a strictly shorter word turns up.
pub fn shortest_cyclic_representative(w: &BraidWord, budget: usize) -> ShortestSearch {
    assert!(budget > 0, "budget must be positive");
    let start = w.cyclic_reduce();
    let (orbit, exhausted) = conjugate_orbit(&start, budget);
    let best = orbit
        .iter()
        .filter(|c| c.letter_count() < start.letter_count())
        .min_by_key(|c| search_key(c))
        .cloned()
        .unwrap_or(start);
    ShortestSearch {
        word: best,
        budget_exhausted: exhausted,
    }
}

/// Explore the conjugacy class of `w` (words no longer than the reduced
/// start), expanding at most `budget` states.
pub fn conjugate_orbit(w: &BraidWord, budget: usize) -> (HashSet<BraidWord>, bool) {
    let start = w.cyclic_reduce();
    let mut visited = HashSet::new();
    let mut queue = VecDeque::new();
    visited.insert(start.clone());
    queue.push_back(start);
    let mut expanded = 0;
    let mut scratch = Vec::new();
    while let Some(cur) = queue.pop_front() {
        if expanded >= budget {
            queue.push_front(cur);
            break;
        }
        expanded += 1;
        neighbors(&cur, &mut scratch);
        for n in scratch.drain(..) {
            if !visited.contains(&n) {
                visited.insert(n.clone());
                queue.push_back(n);
            }
        }
    }
    (visited, !queue.is_empty())
}

/// Try to certify that `u` and `v` are conjugate by meeting their bounded
/// orbits. `Some(true)` when the orbits intersect; `None` when both budgets
/// ran out without an intersection (inconclusive).
pub fn conjugate_within(u: &BraidWord, v: &BraidWord, budget: usize) -> Option<bool> {
    let (orbit_u, ex_u) = conjugate_orbit(u, budget);
    if orbit_u.contains(&v.cyclic_reduce()) {
        return Some(true);
    }
    let (orbit_v, ex_v) = conjugate_orbit(v, budget);
    if orbit_u.intersection(&orbit_v).next().is_some() {
        return Some(true);
    }
    if ex_u || ex_v {
        None
    } else {
        Some(false)
    }
}
