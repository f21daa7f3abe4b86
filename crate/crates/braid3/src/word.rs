//! Words in the band generators a1, a2, a3 of the 3-braid group.
//!
//! The three generators satisfy a2 a1 = a3 a2 = a1 a3, with a3 = s1^-1 s2 s1
//! in the Artin generators s1, s2. Words are stored syllable-compressed:
//! adjacent syllables always have distinct subscripts and nonzero powers, so
//! the stored form is freely reduced.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("zero power at byte {pos}")]
    ZeroPower { pos: usize },
    #[error("word is not a positive word with a1 and a2 between consecutive a3 syllables")]
    NotInPstar,
}

/// A maximal run of one generator: subscript in {1,2,3}, nonzero power.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub subscript: u8,
    pub power: i64,
}

impl Syllable {
    pub fn new(subscript: u8, power: i64) -> Self {
        assert!((1..=3).contains(&subscript), "subscript must be 1, 2 or 3");
        assert!(power != 0, "syllable power must be nonzero");
        Syllable { subscript, power }
    }
}

impl fmt::Debug for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}^{}", self.subscript, self.power)
    }
}

/// One letter of the Artin projection: subscript in {1,2}, sign ±1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ArtinLetter {
    pub subscript: u8,
    pub sign: i8,
}

/// A word in the band generators, stored syllable-compressed and freely reduced.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct BraidWord {
    syllables: Vec<Syllable>,
}

impl BraidWord {
    pub fn empty() -> Self {
        BraidWord::default()
    }

    pub fn from_syllables<I: IntoIterator<Item = Syllable>>(iter: I) -> Self {
        let mut w = BraidWord::empty();
        for s in iter {
            w.push(s.subscript, s.power);
        }
        w
    }

    /// Band letters given as (subscript, sign-or-power) pairs.
    pub fn from_letters<I: IntoIterator<Item = (u8, i64)>>(iter: I) -> Self {
        let mut w = BraidWord::empty();
        for (sub, p) in iter {
            if p != 0 {
                w.push(sub, p);
            }
        }
        w
    }

    /// Append a power of one generator, merging with the last syllable and
    /// cascading cancellations so the stored form stays reduced.
    fn push(&mut self, subscript: u8, power: i64) {
        assert!((1..=3).contains(&subscript));
        if power == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(last) if last.subscript == subscript => {
                last.power += power;
                if last.power == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push(Syllable::new(subscript, power)),
        }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }

    /// Total band letters: sum of |power| over syllables.
    pub fn letter_count(&self) -> usize {
        self.syllables.iter().map(|s| s.power.unsigned_abs() as usize).sum()
    }

    /// Band letters, one (subscript, ±1) per letter.
    pub fn band_letters(&self) -> Vec<(u8, i8)> {
        let mut out = Vec::with_capacity(self.letter_count());
        for s in &self.syllables {
            let sign = s.power.signum() as i8;
            for _ in 0..s.power.unsigned_abs() {
                out.push((s.subscript, sign));
            }
        }
        out
    }

    /// The canonical Artin projection, letter by letter, without free reduction.
    ///
    /// a1^k and a2^k expand to |k| letters; a3^k expands to
    /// a1^-1 a2^(sign k * |k| letters) a1, mirroring the plane projection used
    /// for every crossing-level operation.
    pub fn artin_letters(&self) -> Vec<ArtinLetter> {
        let mut out = Vec::new();
        for s in &self.syllables {
            let sign = s.power.signum() as i8;
            let n = s.power.unsigned_abs();
            match s.subscript {
                1 | 2 => {
                    for _ in 0..n {
                        out.push(ArtinLetter { subscript: s.subscript, sign });
                    }
                }
                3 => {
                    out.push(ArtinLetter { subscript: 1, sign: -1 });
                    for _ in 0..n {
                        out.push(ArtinLetter { subscript: 2, sign });
                    }
                    out.push(ArtinLetter { subscript: 1, sign: 1 });
                }
                _ => unreachable!(),
            }
        }
        out
    }

    pub fn artin_letter_count(&self) -> usize {
        self.syllables
            .iter()
            .map(|s| {
                let n = s.power.unsigned_abs() as usize;
                if s.subscript == 3 {
                    n + 2
                } else {
                    n
                }
            })
            .sum()
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut w = self.clone();
        for s in &other.syllables {
            w.push(s.subscript, s.power);
        }
        w
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord::from_syllables(
            self.syllables
                .iter()
                .rev()
                .map(|s| Syllable::new(s.subscript, -s.power)),
        )
    }

    /// g^-1 * self * g, freely reduced.
    pub fn conjugate(&self, g: &BraidWord) -> BraidWord {
        g.inverse().concat(self).concat(g)
    }

    /// Invert the exponent of every crossing in the canonical projection; the
    /// closure is the mirror-image link.
    ///
    /// This acts on the projected letters, not on band exponents: negating a
    /// whole a3 syllable is not a mirror, since the a1^-1 ... a1 conjugating
    /// pair in its projection must stay fixed while the crossings inside flip.
    pub fn mirror(&self) -> BraidWord {
        BraidWord::from_letters(
            self.artin_letters()
                .into_iter()
                .map(|l| (l.subscript, -l.sign as i64)),
        )
    }

    /// Exponent sum over band letters (equals the Artin exponent sum).
    pub fn exponent_sum(&self) -> i64 {
        self.syllables.iter().map(|s| s.power).sum()
    }

    /// Re-run the reduction pass. Stored words are already freely reduced, so
    /// this is the identity; it exists as the named operation.
    pub fn free_reduce(&self) -> BraidWord {
        BraidWord::from_syllables(self.syllables.iter().copied())
    }

    /// Cancel inverse first/last letters until none remain; conjugate result.
    pub fn cyclic_reduce(&self) -> BraidWord {
        let mut syl = self.syllables.clone();
        loop {
            if syl.len() < 2 {
                return BraidWord::from_syllables(syl);
            }
            let first = syl[0];
            let last = *syl.last().unwrap();
            if first.subscript != last.subscript || first.power.signum() == last.power.signum() {
                return BraidWord::from_syllables(syl);
            }
            // cancel min(|first|, |last|) letters from both ends
            let k = first.power.abs().min(last.power.abs());
            let fs = first.power.signum();
            let ls = last.power.signum();
            let new_first = first.power - fs * k;
            let new_last = last.power - ls * k;
            if new_last == 0 {
                syl.pop();
            } else {
                syl.last_mut().unwrap().power = new_last;
            }
            if new_first == 0 {
                syl.remove(0);
            } else {
                syl[0].power = new_first;
            }
            // a full cancellation can expose a mergeable pair at either end
            syl = BraidWord::from_syllables(syl).syllables;
        }
    }

    /// Move k leading band letters to the end (a conjugation), then reduce.
    pub fn cyclic_rotate(&self, k: usize) -> BraidWord {
        let letters = self.band_letters();
        if letters.is_empty() {
            return self.clone();
        }
        let k = k % letters.len();
        BraidWord::from_letters(
            letters[k..]
                .iter()
                .chain(letters[..k].iter())
                .map(|&(s, sg)| (s, sg as i64)),
        )
    }

    /// Substitute a3^k -> a1^-1 a2^k a1 and freely reduce; result uses
    /// subscripts {1,2} only.
    pub fn to_artin(&self) -> BraidWord {
        BraidWord::from_letters(
            self.artin_letters()
                .into_iter()
                .map(|l| (l.subscript, l.sign as i64)),
        )
    }

    /// True when every power is positive.
    pub fn is_positive(&self) -> bool {
        self.syllables.iter().all(|s| s.power > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.syllables.iter().all(|s| s.power < 0)
    }

    /// Number of a3 syllables.
    pub fn a3_syllable_count(&self) -> usize {
        self.syllables.iter().filter(|s| s.subscript == 3).count()
    }

    /// Positive word with both a1 and a2 occurring between any two
    /// consecutive a3 syllables.
    pub fn is_pstar(&self) -> bool {
        if !self.is_positive() {
            return false;
        }
        let mut last_a3: Option<usize> = None;
        for (i, s) in self.syllables.iter().enumerate() {
            if s.subscript != 3 {
                continue;
            }
            if let Some(j) = last_a3 {
                let between = &self.syllables[j + 1..i];
                let has1 = between.iter().any(|s| s.subscript == 1);
                let has2 = between.iter().any(|s| s.subscript == 2);
                if !(has1 && has2) {
                    return false;
                }
            }
            last_a3 = Some(i);
        }
        true
    }

    /// No a3 syllable directly after a positive a1 syllable or directly
    /// before a positive a2 syllable (the two index-3 rewrite patterns).
    pub fn is_index3_reduced(&self) -> bool {
        for (i, s) in self.syllables.iter().enumerate() {
            if s.subscript != 3 {
                continue;
            }
            if i > 0 {
                let prev = self.syllables[i - 1];
                if prev.subscript == 1 && prev.power > 0 {
                    return false;
                }
            }
            if let Some(next) = self.syllables.get(i + 1) {
                if next.subscript == 2 && next.power > 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Eliminate a3 syllables with a1 a3^k = a2^k a1 and a3^k a2 = a2 a1^k
    /// until neither pattern applies. Requires a P* word; the result is in P*,
    /// represents the same braid, and has strictly fewer a3 syllables whenever
    /// a pattern fired.
    pub fn index3_reduce(&self) -> Result<BraidWord, WordError> {
        if !self.is_pstar() {
            return Err(WordError::NotInPstar);
        }
        let mut cur = self.clone();
        'outer: loop {
            for i in 0..cur.syllables.len() {
                let s = cur.syllables[i];
                if s.subscript != 3 {
                    continue;
                }
                let k = s.power;
                if i > 0 && cur.syllables[i - 1].subscript == 1 {
                    // ... a1^m a3^k ... -> ... a1^(m-1) a2^k a1 ...
                    let m = cur.syllables[i - 1].power;
                    let mut next = BraidWord::from_syllables(cur.syllables[..i - 1].iter().copied());
                    if m > 1 {
                        next.push(1, m - 1);
                    }
                    next.push(2, k);
                    next.push(1, 1);
                    for t in &cur.syllables[i + 1..] {
                        next.push(t.subscript, t.power);
                    }
                    cur = next;
                    continue 'outer;
                }
                if let Some(next_s) = cur.syllables.get(i + 1) {
                    if next_s.subscript == 2 {
                        // ... a3^k a2^m ... -> ... a2 a1^k a2^(m-1) ...
                        let m = next_s.power;
                        let mut next = BraidWord::from_syllables(cur.syllables[..i].iter().copied());
                        next.push(2, 1);
                        next.push(1, k);
                        if m > 1 {
                            next.push(2, m - 1);
                        }
                        for t in &cur.syllables[i + 2..] {
                            next.push(t.subscript, t.power);
                        }
                        cur = next;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        debug_assert!(cur.is_index3_reduced());
        Ok(cur)
    }

    /// Parse the word grammar: tokens `a1|a2|a3` with optional `^<signed int>`,
    /// separated by whitespace; powers default to 1 and must be nonzero.
    pub fn parse(text: &str) -> Result<BraidWord, WordError> {
        let bytes = text.as_bytes();
        let mut i = 0usize;
        let mut w = BraidWord::empty();
        while i < bytes.len() {
            if bytes[i].is_ascii_whitespace() {
                i += 1;
                continue;
            }
            let tok_start = i;
            if bytes[i] != b'a' {
                return Err(WordError::Parse {
                    pos: tok_start,
                    msg: "expected generator token like a1, a2 or a3".into(),
                });
            }
            i += 1;
            if i >= bytes.len() || !(b'1'..=b'3').contains(&bytes[i]) {
                return Err(WordError::Parse {
                    pos: tok_start,
                    msg: "generator subscript must be 1, 2 or 3".into(),
                });
            }
            let subscript = bytes[i] - b'0';
            i += 1;
            let mut power = 1i64;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let num_start = i;
                if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == num_start || (i == num_start + 1 && !bytes[num_start].is_ascii_digit()) {
                    return Err(WordError::Parse {
                        pos: num_start,
                        msg: "expected integer power after '^'".into(),
                    });
                }
                power = text[num_start..i].parse().map_err(|_| WordError::Parse {
                    pos: num_start,
                    msg: "power out of range".into(),
                })?;
                if power == 0 {
                    return Err(WordError::ZeroPower { pos: num_start });
                }
            }
            if i < bytes.len() && !bytes[i].is_ascii_whitespace() {
                return Err(WordError::Parse {
                    pos: i,
                    msg: "expected whitespace after token".into(),
                });
            }
            w.push(subscript, power);
        }
        Ok(w)
    }

    /// Inverse of `parse`: `a3 a1 a2`, `a1^-2`.
    pub fn format(&self) -> String {
        self.syllables
            .iter()
            .map(|s| {
                if s.power == 1 {
                    format!("a{}", s.subscript)
                } else {
                    format!("a{}^{}", s.subscript, s.power)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self.format())
    }
}

/// Shorthand used across tests and the verifier: parse or panic.
pub fn word(text: &str) -> BraidWord {
    BraidWord::parse(text).unwrap_or_else(|e| panic!("bad word {text:?}: {e}"))
}
