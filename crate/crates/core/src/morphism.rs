//! Morphisms that respect the hat operation, and the primality test they
//! induce on double squares.
//!
//! A morphism here is determined by the images of '0' and '1'; the images of
//! '2' and '3' are forced to be their hats, which makes φ(hat(w)) = hat(φ(w))
//! hold for every word. A double square P is prime when no such morphism,
//! other than the identity, produces P from a strictly smaller double
//! square.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::bn::{find_square_factorizations, DoubleSquareStructure};
use crate::polyomino::BoundaryWord;
use crate::word::{Step, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorphismError {
    #[error("morphism images must be nonempty")]
    EmptyImage,
    #[error("primality is defined for double squares only")]
    NotADoubleSquare,
}

/// A hat-preserving morphism, stored as the full four-letter image table.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct HomologousMorphism {
    images: [Word; 4],
}

impl HomologousMorphism {
    pub fn new(img0: Word, img1: Word) -> Result<HomologousMorphism, MorphismError> {
        if img0.is_empty() || img1.is_empty() {
            return Err(MorphismError::EmptyImage);
        }
        let images = [img0.clone(), img1.clone(), img0.hat(), img1.hat()];
        Ok(HomologousMorphism { images })
    }

    pub fn identity() -> HomologousMorphism {
        HomologousMorphism::new("0".parse().unwrap(), "1".parse().unwrap()).unwrap()
    }

    pub fn is_identity(&self) -> bool {
        self.images[0].to_string() == "0" && self.images[1].to_string() == "1"
    }

    pub fn image(&self, s: Step) -> &Word {
        &self.images[s as usize]
    }

    pub fn img0(&self) -> &Word {
        &self.images[0]
    }

    pub fn img1(&self) -> &Word {
        &self.images[1]
    }

    pub fn apply(&self, w: &Word) -> Word {
        let len: usize = w.steps().iter().map(|&s| self.image(s).len()).sum();
        let mut out = Vec::with_capacity(len);
        for &s in w.steps() {
            out.extend_from_slice(self.image(s).steps());
        }
        Word::from_steps(out)
    }
}

/// The morphism acting as `outer` after `inner`:
/// apply(compose(outer, inner), w) = apply(outer, apply(inner, w)).
pub fn compose(outer: &HomologousMorphism, inner: &HomologousMorphism) -> HomologousMorphism {
    HomologousMorphism::new(outer.apply(inner.img0()), outer.apply(inner.img1()))
        .expect("images of nonempty words are nonempty")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FactorizationChoice {
    First,
    Second,
}

/// The morphism 0 ↦ A, 1 ↦ B for the chosen factorization of a double
/// square; it maps the unit square's boundary word onto a rotation of P.
pub fn trivial_morphism(
    s: &DoubleSquareStructure,
    which: FactorizationChoice,
) -> HomologousMorphism {
    let f = match which {
        FactorizationChoice::First => s.f1(),
        FactorizationChoice::Second => s.f2(),
    };
    HomologousMorphism::new(f.factor_a().clone(), f.factor_b().clone())
        .expect("factors of a factorization are nonempty")
}

/// One way of producing P from a smaller double square.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Preimage {
    pub morphism: HomologousMorphism,
    /// The source word U, spelled so that apply(morphism, source) equals
    /// P's canonical word rotated left by `offset`.
    pub source: Word,
    pub offset: usize,
}

/// All (φ, U) with U a valid double-square boundary word of length in
/// [min_len, max_len], φ a non-identity hat-preserving morphism, and
/// φ(U) a rotation of P. The range is clamped to [4, |P|-1]; an empty range
/// yields an empty set. Deterministic order: by (|U|, canonical U, |img0|,
/// img0, img1).
pub fn find_preimages(p: &BoundaryWord, min_len: usize, max_len: usize) -> Vec<Preimage> {
    let min_len = min_len.max(4);
    let max_len = max_len.min(p.perimeter() - 1);
    if min_len > max_len {
        return Vec::new();
    }
    let canonical = p.word();
    let n = canonical.len();
    let found: Vec<(Word, Word, Word, Word, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|offset| {
            let target = canonical.rotate_left(offset);
            let mut search = PreimageSearch {
                target: target.steps().to_vec(),
                min_len,
                max_len,
                source: Vec::new(),
                found: Vec::new(),
            };
            search.parse(0, None, None);
            search
                .found
                .into_iter()
                .map(move |(source, img0, img1)| {
                    let key = source.canonical_rotation().expect("sources are nonempty");
                    (key, img0, img1, source, offset)
                })
        })
        .collect();
    // One representative per (source up to rotation, φ): smallest offset.
    let mut dedup: BTreeMap<(Word, Word, Word), (Word, usize)> = BTreeMap::new();
    for (key, img0, img1, source, offset) in found {
        dedup
            .entry((key, img0, img1))
            .and_modify(|kept| {
                if offset < kept.1 {
                    *kept = (source.clone(), offset);
                }
            })
            .or_insert((source, offset));
    }
    let mut result: Vec<Preimage> = dedup
        .into_iter()
        .map(|((_, img0, img1), (source, offset))| Preimage {
            morphism: HomologousMorphism::new(img0, img1).expect("bound images are nonempty"),
            source,
            offset,
        })
        .collect();
    result.sort_by(|a, b| {
        let ka = (a.source.len(), a.source.canonical_rotation().unwrap(), a.morphism.img0().len());
        let kb = (b.source.len(), b.source.canonical_rotation().unwrap(), b.morphism.img0().len());
        ka.cmp(&kb)
            .then_with(|| a.morphism.img0().cmp(b.morphism.img0()))
            .then_with(|| a.morphism.img1().cmp(b.morphism.img1()))
    });
    result
}

struct PreimageSearch {
    target: Vec<Step>,
    min_len: usize,
    max_len: usize,
    source: Vec<Step>,
    found: Vec<(Word, Word, Word)>,
}

impl PreimageSearch {
    /// Depth-first parse of the target: each source letter either reuses an
    /// already-bound image or binds a fresh one of every feasible length.
    /// The images of '2' and '3' are the hats of those of '0' and '1'.
    fn parse(&mut self, pos: usize, img0: Option<Word>, img1: Option<Word>) {
        if pos == self.target.len() {
            if self.source.len() < self.min_len {
                return;
            }
            let (Some(img0), Some(img1)) = (img0, img1) else {
                // An unbound image means the source uses one axis only and
                // cannot be a closed, non-degenerate boundary.
                return;
            };
            if img0.to_string() == "0" && img1.to_string() == "1" {
                return;
            }
            let source = Word::from_steps(self.source.clone());
            if is_double_square_word(&source) {
                self.found.push((source, img0, img1));
            }
            return;
        }
        if self.source.len() == self.max_len {
            return;
        }
        let remaining = self.target.len() - pos;
        if let (Some(a), Some(b)) = (&img0, &img1) {
            if !feasible(remaining, a.len(), b.len()) {
                return;
            }
        }
        for letter in Step::ALL {
            let base = Step::ALL[letter as usize % 2];
            let bound = match base {
                Step::East => img0.as_ref(),
                _ => img1.as_ref(),
            };
            match bound {
                Some(img) => {
                    let image = if letter == base { img.clone() } else { img.hat() };
                    if self.target[pos..].starts_with(image.steps()) {
                        self.source.push(letter);
                        self.parse(pos + image.len(), img0.clone(), img1.clone());
                        self.source.pop();
                    }
                }
                None => {
                    for len in 1..=remaining {
                        let slice = Word::from_steps(self.target[pos..pos + len].to_vec());
                        let fresh = if letter == base { slice } else { slice.hat() };
                        let (next0, next1) = match base {
                            Step::East => (Some(fresh), img1.clone()),
                            _ => (img0.clone(), Some(fresh)),
                        };
                        self.source.push(letter);
                        self.parse(pos + len, next0, next1);
                        self.source.pop();
                    }
                }
            }
        }
    }
}

/// Can `remaining` be written as a·m0 + b·m1 with a, b ≥ 0?
fn feasible(remaining: usize, m0: usize, m1: usize) -> bool {
    (0..=remaining / m0).any(|a| (remaining - a * m0).is_multiple_of(m1))
}

fn is_double_square_word(source: &Word) -> bool {
    match BoundaryWord::validate(source) {
        Ok(boundary) => find_square_factorizations(&boundary).len() == 2,
        Err(_) => false,
    }
}

/// True when no smaller double square maps onto P through a non-identity
/// hat-preserving morphism. The unit square source (length 4) is always
/// available through the trivial morphisms and does not count.
pub fn is_prime(p: &BoundaryWord) -> Result<bool, MorphismError> {
    if find_square_factorizations(p).len() != 2 {
        return Err(MorphismError::NotADoubleSquare);
    }
    Ok(find_preimages(p, 5, p.perimeter() - 1).is_empty())
}
