//! Words over the four-letter step alphabet and circular words over it.
//!
//! A word encodes a path on the square grid: '0' steps east, '1' north,
//! '2' west, '3' south. Opposite directions are *conjugate* letters
//! (0 <-> 2, 1 <-> 3). Three involutions drive the whole algebra:
//! conjugation (flip every letter), reversal, and the *hat* operation
//! (reversal composed with conjugation), which traverses a path backwards.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("empty word")]
    Empty,
    #[error("invalid letter {letter:?} at position {position}, expected one of '0', '1', '2', '3'")]
    InvalidLetter { position: usize, letter: char },
}

/// A unit step on the square grid. The derived order matches the letter
/// order '0' < '1' < '2' < '3' used for canonical rotations.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Step {
    East,
    North,
    West,
    South,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::East, Step::North, Step::West, Step::South];

    /// The opposite direction.
    pub fn conjugate(self) -> Step {
        match self {
            Step::East => Step::West,
            Step::North => Step::South,
            Step::West => Step::East,
            Step::South => Step::North,
        }
    }

    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::East => (1, 0),
            Step::North => (0, 1),
            Step::West => (-1, 0),
            Step::South => (0, -1),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Step::East => '0',
            Step::North => '1',
            Step::West => '2',
            Step::South => '3',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            '0' => Some(Step::East),
            '1' => Some(Step::North),
            '2' => Some(Step::West),
            '3' => Some(Step::South),
            _ => None,
        }
    }
}

/// A finite word over the step alphabet. May be empty.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Step>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_steps(steps: Vec<Step>) -> Word {
        Word(steps)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn repeat(&self, n: usize) -> Word {
        let mut v = Vec::with_capacity(self.len() * n);
        for _ in 0..n {
            v.extend_from_slice(&self.0);
        }
        Word(v)
    }

    /// Flip every letter to its opposite direction.
    pub fn conjugate(&self) -> Word {
        Word(self.0.iter().map(|s| s.conjugate()).collect())
    }

    pub fn reversal(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Reversal composed with conjugation: the same path walked backwards.
    pub fn hat(&self) -> Word {
        Word(self.0.iter().rev().map(|s| s.conjugate()).collect())
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.len();
        (0..n / 2).all(|i| self.0[i] == self.0[n - 1 - i])
    }

    /// Net translation of the path spelled by the word.
    pub fn displacement(&self) -> (i64, i64) {
        let mut d = (0i64, 0i64);
        for s in &self.0 {
            let (dx, dy) = s.delta();
            d.0 += dx;
            d.1 += dy;
        }
        d
    }

    pub fn rotate_left(&self, k: usize) -> Word {
        if self.is_empty() {
            return Word::empty();
        }
        let k = k % self.len();
        let mut v = Vec::with_capacity(self.len());
        v.extend_from_slice(&self.0[k..]);
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    /// The factor of length `len` starting at position `start` on the circle.
    pub fn circular_slice(&self, start: usize, len: usize) -> Word {
        assert!(len <= self.len(), "slice longer than the word");
        if self.is_empty() {
            return Word::empty();
        }
        let n = self.len();
        let start = start % n;
        let mut v = Vec::with_capacity(len);
        for i in 0..len {
            v.push(self.0[(start + i) % n]);
        }
        Word(v)
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.0.ends_with(&suffix.0)
    }

    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.0.strip_prefix(prefix.0.as_slice()).map(|rest| Word(rest.to_vec()))
    }

    pub fn strip_suffix(&self, suffix: &Word) -> Option<Word> {
        self.0.strip_suffix(suffix.0.as_slice()).map(|rest| Word(rest.to_vec()))
    }

    /// Lexicographically least rotation, as in Booth's algorithm
    /// (https://cp-algorithms.com/string/lyndon_factorization.html).
    pub fn canonical_rotation(&self) -> Result<Word, WordError> {
        if self.is_empty() {
            return Err(WordError::Empty);
        }
        let n = self.len();
        let mut doubled = Vec::with_capacity(2 * n);
        doubled.extend_from_slice(&self.0);
        doubled.extend_from_slice(&self.0);
        let mut best = 0;
        let mut i = 0;
        while i < n {
            best = i;
            let (mut j, mut k) = (i + 1, i);
            while j < 2 * n && doubled[k] <= doubled[j] {
                if doubled[k] < doubled[j] {
                    k = i;
                } else {
                    k += 1;
                }
                j += 1;
            }
            while i <= k {
                i += j - k;
            }
        }
        Ok(self.rotate_left(best))
    }

    /// Split `self` as q^n u with u a proper prefix of `q` (possibly empty).
    /// The pair (n, u) is unique when it exists; `None` signals that `self`
    /// is not of this shape.
    pub fn period_split(&self, q: &Word) -> Option<(usize, Word)> {
        if q.is_empty() {
            return None;
        }
        for (i, s) in self.0.iter().enumerate() {
            if *s != q.0[i % q.len()] {
                return None;
            }
        }
        let n = self.len() / q.len();
        let rem = self.len() % q.len();
        Some((n, Word(q.0[..rem].to_vec())))
    }
}

impl Index<usize> for Word {
    type Output = Step;

    fn index(&self, i: usize) -> &Step {
        &self.0[i]
    }
}

impl FromIterator<Step> for Word {
    fn from_iter<T: IntoIterator<Item = Step>>(iter: T) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Word, WordError> {
        let mut steps = Vec::with_capacity(s.len());
        for (position, letter) in s.chars().enumerate() {
            match Step::from_char(letter) {
                Some(step) => steps.push(step),
                None => return Err(WordError::InvalidLetter { position, letter }),
            }
        }
        Ok(Word(steps))
    }
}

/// A nonempty word considered up to rotation, stored by its least rotation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CircularWord {
    canonical: Word,
}

impl CircularWord {
    pub fn new(word: Word) -> Result<CircularWord, WordError> {
        Ok(CircularWord { canonical: word.canonical_rotation()? })
    }

    pub fn canonical(&self) -> &Word {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True when no letter is circularly followed by itself. A length-one
    /// word is its own circular successor, so it is never couple free.
    pub fn is_couple_free(&self) -> bool {
        let n = self.canonical.len();
        (0..n).all(|i| self.canonical[i] != self.canonical[(i + 1) % n])
    }
}

impl fmt::Display for CircularWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical)
    }
}

impl fmt::Debug for CircularWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CircularWord(\"{}\")", self.canonical)
    }
}

/// True when the two words are rotations of one another.
pub fn rotation_equivalent(a: &Word, b: &Word) -> bool {
    a.len() == b.len()
        && match (a.canonical_rotation(), b.canonical_rotation()) {
            (Ok(ca), Ok(cb)) => ca == cb,
            _ => a.is_empty() && b.is_empty(),
        }
}

#[cfg(test)]
impl Word {
    fn rotations_contain(&self, target: &Word) -> bool {
        (0..self.len()).any(|k| self.rotate_left(k) == *target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parse_rejects_foreign_letters() {
        match "01x3".parse::<Word>() {
            Err(WordError::InvalidLetter { position: 2, letter: 'x' }) => {}
            other => panic!("unexpected parse result: {other:?}"),
        }
    }

    #[test]
    fn conjugate_flips_letters() {
        assert_eq!(w("0123").conjugate(), w("2301"));
        assert_eq!(w("0").conjugate(), w("2"));
        assert_eq!(Word::empty().conjugate(), Word::empty());
    }

    #[test]
    fn reversal_reverses() {
        assert_eq!(w("001").reversal(), w("100"));
        assert_eq!(w("0").reversal(), w("0"));
        assert_eq!(Word::empty().reversal(), Word::empty());
    }

    #[test]
    fn hat_reads_the_path_backwards() {
        assert_eq!(w("01").hat(), w("32"));
        assert_eq!(w("0123").hat(), w("1032"));
        assert_eq!(w("10101").hat(), w("32323"));
    }

    #[test]
    fn palindrome_checks() {
        assert!(w("010").is_palindrome());
        assert!(!w("011").is_palindrome());
        assert!(Word::empty().is_palindrome());
        // A factor of a known double square, palindromic by inspection.
        assert!(w("1012210122101").is_palindrome());
    }

    #[test]
    fn displacement_sums_steps() {
        assert_eq!(w("0123").displacement(), (0, 0));
        assert_eq!(w("0011").displacement(), (2, 2));
        assert_eq!(w("22").displacement(), (-2, 0));
    }

    #[test]
    fn canonical_rotation_picks_least() {
        assert_eq!(w("210").canonical_rotation().unwrap(), w("021"));
        assert_eq!(w("0123").canonical_rotation().unwrap(), w("0123"));
        // Least of the twelve rotations of the cross word.
        assert_eq!(
            w("121010303232").canonical_rotation().unwrap(),
            w("010303232121")
        );
        assert_eq!(Word::empty().canonical_rotation(), Err(WordError::Empty));
    }

    #[test]
    fn canonical_rotation_handles_uniform_words() {
        assert_eq!(w("0000").canonical_rotation().unwrap(), w("0000"));
        assert_eq!(w("1010").canonical_rotation().unwrap(), w("0101"));
    }

    #[test]
    fn period_split_examples() {
        assert_eq!(w("01010").period_split(&w("01")), Some((2, w("0"))));
        assert_eq!(w("0101").period_split(&w("01")), Some((2, Word::empty())));
        assert_eq!(w("0110").period_split(&w("01")), None);
        assert_eq!(w("0").period_split(&w("0123")), Some((0, w("0"))));
        assert_eq!(w("01").period_split(&Word::empty()), None);
        assert_eq!(Word::empty().period_split(&w("01")), Some((0, Word::empty())));
    }

    #[test]
    fn couple_freedom_is_circular() {
        let circ = |s: &str| CircularWord::new(w(s)).unwrap();
        assert!(circ("121010303232").is_couple_free());
        assert!(!circ("1012210122101").is_couple_free());
        assert!(!circ("0").is_couple_free());
        // The wrap-around pair is a couple here even though no inner pair is.
        assert!(!circ("010").is_couple_free());
    }

    #[test]
    fn circular_words_compare_up_to_rotation() {
        let a = CircularWord::new(w("121010303232")).unwrap();
        let b = CircularWord::new(w("010303232121")).unwrap();
        assert_eq!(a, b);
        assert!(rotation_equivalent(&w("2100"), &w("0021")));
        assert!(!rotation_equivalent(&w("2100"), &w("0012")));
    }

    #[cfg(test)]
    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_step() -> impl Strategy<Value = Step> {
            prop_oneof![
                Just(Step::East),
                Just(Step::North),
                Just(Step::West),
                Just(Step::South),
            ]
        }

        fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
            prop::collection::vec(arb_step(), 0..=max_len).prop_map(Word::from_steps)
        }

        proptest! {
            #[test]
            fn operators_are_involutions(word in arb_word(32)) {
                prop_assert_eq!(word.conjugate().conjugate(), word.clone());
                prop_assert_eq!(word.reversal().reversal(), word.clone());
                prop_assert_eq!(word.hat().hat(), word);
            }

            #[test]
            fn operators_commute(word in arb_word(32)) {
                prop_assert_eq!(word.conjugate().reversal(), word.reversal().conjugate());
                prop_assert_eq!(word.conjugate().reversal(), word.hat());
            }

            #[test]
            fn hat_antihomomorphism(u in arb_word(16), v in arb_word(16)) {
                prop_assert_eq!(u.concat(&v).hat(), v.hat().concat(&u.hat()));
            }

            #[test]
            fn hat_negates_displacement(word in arb_word(32)) {
                let (dx, dy) = word.displacement();
                prop_assert_eq!(word.hat().displacement(), (-dx, -dy));
            }

            #[test]
            fn canonical_rotation_is_rotation_invariant(word in arb_word(24), k in 0usize..24) {
                prop_assume!(!word.is_empty());
                let canon = word.canonical_rotation().unwrap();
                prop_assert_eq!(word.rotate_left(k).canonical_rotation().unwrap(), canon.clone());
                prop_assert!(word.rotations_contain(&canon));
            }

            #[test]
            fn period_split_round_trips(q in arb_word(6), n in 0usize..5, extra in 0usize..6) {
                prop_assume!(!q.is_empty());
                let extra = extra % q.len();
                let u = Word::from_steps(q.steps()[..extra].to_vec());
                let word = q.repeat(n).concat(&u);
                prop_assert_eq!(word.period_split(&q), Some((n, u)));
            }
        }
    }
}
