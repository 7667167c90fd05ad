//! Catalogs of double squares: exhaustive enumeration up to a perimeter
//! bound, parametric generation from the seven form templates, conjecture
//! verification, and a line-oriented text format.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;
use thiserror::Error;

use crate::bn::{
    as_double_square, build_from_form, find_square_factorizations, BnError, FormClassification,
    FormParams, FormTag,
};
use crate::morphism::is_prime;
use crate::polyomino::BoundaryWord;
use crate::word::{Step, Word};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("perimeter bound {0} must be an even number of at least 8")]
    BoundTooSmall(usize),
    #[error(transparent)]
    IoError(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    FormatError { line: usize, message: String },
    #[error(transparent)]
    Structure(#[from] BnError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DedupMode {
    /// Words identified up to rotation only (the default notion).
    Rotation,
    /// Additionally identified up to the eight symmetries of the grid.
    Dihedral,
}

impl DedupMode {
    pub fn as_str(self) -> &'static str {
        match self {
            DedupMode::Rotation => "rotation",
            DedupMode::Dihedral => "dihedral",
        }
    }

    pub fn parse(s: &str) -> Option<DedupMode> {
        match s {
            "rotation" => Some(DedupMode::Rotation),
            "dihedral" => Some(DedupMode::Dihedral),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatalogEntry {
    pub canonical_word: Word,
    pub perimeter: usize,
    pub area: u64,
    pub prime: bool,
    pub couple_free: bool,
    pub classification: Option<FormClassification>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub max_perimeter: usize,
    pub dedup: DedupMode,
}

impl Catalog {
    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.entries.iter().map(|e| &e.canonical_word)
    }

    pub fn prime_words(&self) -> impl Iterator<Item = &Word> {
        self.entries.iter().filter(|e| e.prime).map(|e| &e.canonical_word)
    }
}

fn check_bound(max_perimeter: usize) -> Result<(), CatalogError> {
    if max_perimeter < 8 || !max_perimeter.is_multiple_of(2) {
        return Err(CatalogError::BoundTooSmall(max_perimeter));
    }
    Ok(())
}

/// Every double square of perimeter ≤ `max_perimeter`, found by extending
/// self-avoiding half-paths W and closing each split W = A·B into
/// A·B·hat(A)·hat(B). Every double square is reached this way because any of
/// its cuts provides such a half-path. Workers shard on the first two steps;
/// the merged set is independent of scheduling.
pub fn enumerate_bruteforce(
    max_perimeter: usize,
    dedup: DedupMode,
) -> Result<Catalog, CatalogError> {
    check_bound(max_perimeter)?;
    let shards: Vec<(Step, Step)> = Step::ALL
        .into_iter()
        .flat_map(|s0| {
            Step::ALL
                .into_iter()
                .filter(move |&s1| s1 != s0.conjugate())
                .map(move |s1| (s0, s1))
        })
        .collect();
    let words = shards
        .into_par_iter()
        .map(|(s0, s1)| {
            let mut shard = Shard::new(max_perimeter / 2);
            shard.push(s0);
            shard.push(s1);
            shard.explore();
            shard.pop();
            shard.pop();
            shard.found
        })
        .reduce(BTreeSet::new, |mut acc, set| {
            acc.extend(set);
            acc
        });
    let words: Vec<Word> = match dedup {
        DedupMode::Rotation => words.into_iter().collect(),
        DedupMode::Dihedral => {
            words.iter().map(dihedral_representative).collect::<BTreeSet<_>>().into_iter().collect()
        }
    };
    let mut entries = words
        .par_iter()
        .map(build_entry)
        .collect::<Result<Vec<_>, _>>()?;
    entries.sort_by(|a, b| {
        (a.perimeter, &a.canonical_word).cmp(&(b.perimeter, &b.canonical_word))
    });
    Ok(Catalog { entries, max_perimeter, dedup })
}

/// Depth-first extension of one self-avoiding half-path.
struct Shard {
    half_max: usize,
    steps: Vec<Step>,
    visited: HashSet<(i64, i64)>,
    pos: (i64, i64),
    found: BTreeSet<Word>,
}

impl Shard {
    fn new(half_max: usize) -> Shard {
        let mut visited = HashSet::new();
        visited.insert((0, 0));
        Shard { half_max, steps: Vec::new(), visited, pos: (0, 0), found: BTreeSet::new() }
    }

    fn push(&mut self, s: Step) -> bool {
        let (dx, dy) = s.delta();
        let next = (self.pos.0 + dx, self.pos.1 + dy);
        if !self.visited.insert(next) {
            return false;
        }
        self.steps.push(s);
        self.pos = next;
        true
    }

    fn pop(&mut self) {
        let s = self.steps.pop().expect("pop matches push");
        self.visited.remove(&self.pos);
        let (dx, dy) = s.delta();
        self.pos = (self.pos.0 - dx, self.pos.1 - dy);
    }

    fn explore(&mut self) {
        self.harvest();
        if self.steps.len() == self.half_max {
            return;
        }
        for s in Step::ALL {
            if self.push(s) {
                self.explore();
                self.pop();
            }
        }
    }

    /// Closes every split of the current half-path and keeps double squares.
    fn harvest(&mut self) {
        let half = Word::from_steps(self.steps.clone());
        for split in 1..half.len() {
            let a = Word::from_steps(self.steps[..split].to_vec());
            let b = Word::from_steps(self.steps[split..].to_vec());
            let candidate = half.concat(&a.hat()).concat(&b.hat());
            let Ok(boundary) = BoundaryWord::validate(&candidate) else { continue };
            if find_square_factorizations(&boundary).len() == 2 {
                self.found.insert(boundary.word().clone());
            }
        }
    }
}

/// Letterwise 90° counterclockwise turn (E→N→W→S→E).
fn quarter_turn(w: &Word) -> Word {
    w.steps()
        .iter()
        .map(|&s| match s {
            Step::East => Step::North,
            Step::North => Step::West,
            Step::West => Step::South,
            Step::South => Step::East,
        })
        .collect()
}

/// Mirror image across the x axis, re-oriented counterclockwise.
fn reflect(w: &Word) -> Word {
    let mirrored: Word = w
        .steps()
        .iter()
        .map(|&s| match s {
            Step::North => Step::South,
            Step::South => Step::North,
            other => other,
        })
        .collect();
    mirrored.hat()
}

/// The least canonical word among the eight grid symmetries of `w`.
pub fn dihedral_representative(w: &Word) -> Word {
    let mut best: Option<Word> = None;
    let mut current = w.clone();
    for _ in 0..4 {
        for variant in [current.clone(), reflect(&current)] {
            let canon = variant.canonical_rotation().expect("nonempty");
            if best.as_ref().is_none_or(|b| canon < *b) {
                best = Some(canon);
            }
        }
        current = quarter_turn(&current);
    }
    best.expect("at least one variant")
}

fn build_entry(word: &Word) -> Result<CatalogEntry, CatalogError> {
    let boundary = BoundaryWord::validate(word).expect("catalogs hold valid boundaries");
    let classification = match as_double_square(&boundary) {
        Ok(structure) => {
            let s = structure.expect("catalogs hold double squares");
            s.classification().cloned()
        }
        // A non-interleaving cut pattern leaves the entry unclassified but
        // still a double square; surfaced by the structural test suite.
        Err(BnError::StructureViolation(_)) => None,
        Err(fatal) => return Err(fatal.into()),
    };
    let prime = is_prime(&boundary).expect("catalogs hold double squares");
    Ok(CatalogEntry {
        canonical_word: boundary.word().clone(),
        perimeter: boundary.perimeter(),
        area: boundary.area(),
        prime,
        couple_free: boundary.is_couple_free(),
        classification,
    })
}

/// Every double square of perimeter ≤ `max_perimeter` reachable by
/// instantiating the seven form templates over all parameter words and
/// exponents that fit the perimeter budget.
pub fn enumerate_parametric(max_perimeter: usize) -> Result<Catalog, CatalogError> {
    check_bound(max_perimeter)?;
    let half_budget = max_perimeter / 2;
    let mut jobs: Vec<(FormTag, [usize; 4], [usize; 4])> = Vec::new();
    for tag in FormTag::ALL {
        for lengths in length_tuples(half_budget) {
            for exponents in exponent_tuples(tag, lengths, half_budget) {
                jobs.push((tag, lengths, exponents));
            }
        }
    }
    let words = jobs
        .into_par_iter()
        .map(|(tag, lengths, exponents)| {
            let mut found = BTreeSet::new();
            let [lu1, lu3, lk, lp] = lengths;
            for u1 in words_of_length(lu1) {
                for u3 in words_of_length(lu3) {
                    for k in words_of_length(lk) {
                        for p in words_of_length(lp) {
                            let params = FormParams {
                                u1: u1.clone(),
                                u3: u3.clone(),
                                k: k.clone(),
                                p,
                                exponents,
                            };
                            let candidate = build_from_form(tag, &params)
                                .expect("exponent pattern fits by construction");
                            if candidate.len() > max_perimeter {
                                continue;
                            }
                            let Ok(boundary) = BoundaryWord::validate(&candidate) else {
                                continue;
                            };
                            if find_square_factorizations(&boundary).len() == 2 {
                                found.insert(boundary.word().clone());
                            }
                        }
                    }
                }
            }
            found
        })
        .reduce(BTreeSet::new, |mut acc, set| {
            acc.extend(set);
            acc
        });
    let words: Vec<Word> = words.into_iter().collect();
    let mut entries = words
        .par_iter()
        .map(build_entry)
        .collect::<Result<Vec<_>, _>>()?;
    entries.sort_by(|a, b| {
        (a.perimeter, &a.canonical_word).cmp(&(b.perimeter, &b.canonical_word))
    });
    Ok(Catalog { entries, max_perimeter, dedup: DedupMode::Rotation })
}

/// All (|u₁|, |u₃|, |k|, |p|) with k, p nonempty that can fit the half
/// budget even with all exponents at their minimum.
fn length_tuples(half_budget: usize) -> Vec<[usize; 4]> {
    let mut tuples = Vec::new();
    for lu1 in 0..=half_budget {
        for lu3 in 0..=half_budget {
            for lk in 1..=half_budget {
                for lp in 1..=half_budget {
                    // Leanest template, form a: u₁ + ku₁ + u₃ + u₁p.
                    if 3 * lu1 + lu3 + lk + lp <= half_budget {
                        tuples.push([lu1, lu3, lk, lp]);
                    }
                }
            }
        }
    }
    tuples
}

/// All exponent tuples for `tag` whose template fits the half budget. A
/// zero-length repeated block contributes nothing, so exponent 1 covers it.
fn exponent_tuples(tag: FormTag, lengths: [usize; 4], half_budget: usize) -> Vec<[usize; 4]> {
    let positive = tag.positive_exponents();
    let mut tuples = vec![[0usize; 4]];
    for slot in 0..4 {
        if !positive[slot] {
            continue;
        }
        let mut grown = Vec::new();
        for t in &tuples {
            let mut n = 1;
            loop {
                let mut candidate = *t;
                candidate[slot] = n;
                if template_half_len(tag, lengths, candidate) > half_budget {
                    break;
                }
                grown.push(candidate);
                if block_len(slot, lengths) == 0 {
                    break;
                }
                n += 1;
            }
        }
        tuples = grown;
    }
    tuples.retain(|t| template_half_len(tag, lengths, *t) <= half_budget);
    tuples
}

fn block_len(slot: usize, [lu1, lu3, lk, lp]: [usize; 4]) -> usize {
    match slot {
        0 => 2 * lu1 + lk + lp,
        1 => lu3 + lu1,
        2 => lp + 2 * lu1 + lk,
        _ => lu1 + lu3,
    }
}

fn template_half_len(tag: FormTag, lengths: [usize; 4], n: [usize; 4]) -> usize {
    let [lu1, lu3, lk, lp] = lengths;
    let positive = tag.positive_exponents();
    let mut total = lu1 + (lk + lu1) + lu3 + (lu1 + lp);
    for slot in 0..4 {
        if positive[slot] {
            total += n[slot] * block_len(slot, lengths);
        }
    }
    total
}

fn words_of_length(len: usize) -> Vec<Word> {
    let mut words = Vec::with_capacity(4usize.pow(len as u32));
    let mut steps = vec![Step::East; len];
    loop {
        words.push(Word::from_steps(steps.clone()));
        let mut i = len;
        loop {
            if i == 0 {
                return words;
            }
            i -= 1;
            let next = match steps[i] {
                Step::East => Some(Step::North),
                Step::North => Some(Step::West),
                Step::West => Some(Step::South),
                Step::South => None,
            };
            match next {
                Some(s) => {
                    steps[i] = s;
                    break;
                }
                None => steps[i] = Step::East,
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PerimeterRow {
    pub perimeter: usize,
    pub double_squares: usize,
    pub prime: usize,
    pub prime_couple_free: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConjectureReport {
    pub max_perimeter: usize,
    pub rows: Vec<PerimeterRow>,
    /// Prime entries that are not couple-free, verbatim.
    pub counterexamples: Vec<Word>,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Enumerates all double squares up to the bound and checks that every prime
/// one is couple-free.
pub fn verify_conjecture(max_perimeter: usize) -> Result<ConjectureReport, CatalogError> {
    let catalog = enumerate_bruteforce(max_perimeter, DedupMode::Rotation)?;
    let mut rows = Vec::new();
    for perimeter in (8..=max_perimeter).step_by(2) {
        let entries = catalog.entries.iter().filter(|e| e.perimeter == perimeter);
        let mut row = PerimeterRow {
            perimeter,
            double_squares: 0,
            prime: 0,
            prime_couple_free: 0,
        };
        for e in entries {
            row.double_squares += 1;
            if e.prime {
                row.prime += 1;
                if e.couple_free {
                    row.prime_couple_free += 1;
                }
            }
        }
        rows.push(row);
    }
    let counterexamples = catalog
        .entries
        .iter()
        .filter(|e| e.prime && !e.couple_free)
        .map(|e| e.canonical_word.clone())
        .collect();
    Ok(ConjectureReport { max_perimeter: catalog.max_perimeter, rows, counterexamples })
}

const HEADER_MAGIC: &str = "#tileforge-catalog";
const HEADER_VERSION: &str = "v1";

impl Catalog {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "{HEADER_MAGIC} {HEADER_VERSION} max={} dedup={}",
            self.max_perimeter,
            self.dedup.as_str()
        )
        .unwrap();
        for e in &self.entries {
            let prime = u8::from(e.prime);
            let couple_free = u8::from(e.couple_free);
            write!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                e.canonical_word, e.perimeter, e.area, prime, couple_free
            )
            .unwrap();
            match &e.classification {
                Some(c) => {
                    let [n1, n2, n3, n4] = c.params.exponents;
                    writeln!(
                        out,
                        "\t{}\t{}\t{}\t{}\t{}\t{n1}\t{n2}\t{n3}\t{n4}",
                        c.tag, c.params.u1, c.params.u3, c.params.k, c.params.p
                    )
                    .unwrap();
                }
                None => {
                    writeln!(out, "{}", "\t-".repeat(9)).unwrap();
                }
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Catalog, CatalogError> {
        let format_err = |line: usize, message: String| CatalogError::FormatError { line, message };
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| format_err(1, "missing header".into()))?;
        let parts: Vec<&str> = header.split(' ').collect();
        let [magic, version, max_part, dedup_part] = parts.as_slice() else {
            return Err(format_err(1, format!("malformed header {header:?}")));
        };
        if *magic != HEADER_MAGIC || *version != HEADER_VERSION {
            return Err(format_err(1, format!("unrecognized catalog header {header:?}")));
        }
        let max_perimeter: usize = max_part
            .strip_prefix("max=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| format_err(1, format!("bad max field {max_part:?}")))?;
        let dedup = dedup_part
            .strip_prefix("dedup=")
            .and_then(DedupMode::parse)
            .ok_or_else(|| format_err(1, format!("bad dedup field {dedup_part:?}")))?;
        let mut entries: Vec<CatalogEntry> = Vec::new();
        for (idx, raw) in lines {
            let line = idx + 1;
            if raw.is_empty() {
                return Err(format_err(line, "empty line".into()));
            }
            let fields: Vec<&str> = raw.split('\t').collect();
            if fields.len() != 14 {
                return Err(format_err(
                    line,
                    format!("expected 14 tab-separated fields, found {}", fields.len()),
                ));
            }
            let word: Word = fields[0]
                .parse()
                .map_err(|e| format_err(line, format!("bad word: {e}")))?;
            if word.is_empty() {
                return Err(format_err(line, "empty word".into()));
            }
            if !word.len().is_multiple_of(2) {
                return Err(format_err(line, format!("odd word length {}", word.len())));
            }
            if word.canonical_rotation().unwrap() != word {
                return Err(format_err(line, format!("word {word} is not in canonical rotation")));
            }
            let perimeter: usize = fields[1]
                .parse()
                .map_err(|_| format_err(line, format!("bad perimeter {:?}", fields[1])))?;
            if perimeter != word.len() {
                return Err(format_err(
                    line,
                    format!("perimeter {} does not match word length {}", perimeter, word.len()),
                ));
            }
            if perimeter > max_perimeter {
                return Err(format_err(
                    line,
                    format!("perimeter {perimeter} exceeds declared max {max_perimeter}"),
                ));
            }
            let area: u64 = fields[2]
                .parse()
                .map_err(|_| format_err(line, format!("bad area {:?}", fields[2])))?;
            let flag = |i: usize| match fields[i] {
                "0" => Ok(false),
                "1" => Ok(true),
                other => Err(format_err(line, format!("bad flag {other:?}"))),
            };
            let prime = flag(3)?;
            let couple_free = flag(4)?;
            let classification = match fields[5] {
                "-" => {
                    if fields[6..].iter().any(|f| *f != "-") {
                        return Err(format_err(
                            line,
                            "unclassified entries must have '-' in every parameter field".into(),
                        ));
                    }
                    None
                }
                tag => {
                    let tag: FormTag = tag
                        .parse()
                        .map_err(|()| format_err(line, format!("bad form tag {tag:?}")))?;
                    let param_word = |i: usize| -> Result<Word, CatalogError> {
                        fields[i]
                            .parse()
                            .map_err(|e| format_err(line, format!("bad parameter word: {e}")))
                    };
                    let exponent = |i: usize| -> Result<usize, CatalogError> {
                        fields[i]
                            .parse()
                            .map_err(|_| format_err(line, format!("bad exponent {:?}", fields[i])))
                    };
                    Some(FormClassification {
                        tag,
                        params: FormParams {
                            u1: param_word(6)?,
                            u3: param_word(7)?,
                            k: param_word(8)?,
                            p: param_word(9)?,
                            exponents: [exponent(10)?, exponent(11)?, exponent(12)?, exponent(13)?],
                        },
                    })
                }
            };
            if let Some(prev) = entries.last() {
                if (prev.perimeter, &prev.canonical_word) >= (perimeter, &word) {
                    return Err(format_err(
                        line,
                        format!("entry {word} out of (perimeter, word) order"),
                    ));
                }
            }
            entries.push(CatalogEntry {
                canonical_word: word,
                perimeter,
                area,
                prime,
                couple_free,
                classification,
            });
        }
        Ok(Catalog { entries, max_perimeter, dedup })
    }

    pub fn save(&self, path: &Path) -> Result<(), CatalogError> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Catalog, CatalogError> {
        Catalog::from_text(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn bound_is_checked() {
        assert!(matches!(
            enumerate_bruteforce(6, DedupMode::Rotation),
            Err(CatalogError::BoundTooSmall(6))
        ));
        assert!(matches!(
            enumerate_bruteforce(13, DedupMode::Rotation),
            Err(CatalogError::BoundTooSmall(13))
        ));
        assert!(matches!(enumerate_parametric(7), Err(CatalogError::BoundTooSmall(7))));
    }

    #[test]
    fn no_double_squares_below_the_cross() {
        let catalog = enumerate_bruteforce(10, DedupMode::Rotation).unwrap();
        assert!(catalog.entries.is_empty());
    }

    #[test]
    fn catalog_12_contains_exactly_the_cross() {
        let catalog = enumerate_bruteforce(12, DedupMode::Rotation).unwrap();
        let words: Vec<String> = catalog.words().map(Word::to_string).collect();
        assert_eq!(words, ["010121232303"]);
        let entry = &catalog.entries[0];
        assert!(entry.prime);
        assert!(entry.couple_free);
        assert_eq!(entry.area, 5);
        assert_eq!(entry.classification.as_ref().unwrap().tag, FormTag::F);
    }

    #[test]
    fn dihedral_collapses_symmetric_variants() {
        let cross = w("010121232303");
        assert_eq!(dihedral_representative(&cross), dihedral_representative(&quarter_turn(&cross)));
        assert_eq!(dihedral_representative(&cross), dihedral_representative(&reflect(&cross)));
        let rotation = enumerate_bruteforce(12, DedupMode::Rotation).unwrap();
        let dihedral = enumerate_bruteforce(12, DedupMode::Dihedral).unwrap();
        assert!(dihedral.entries.len() <= rotation.entries.len());
        let reps: BTreeSet<Word> = dihedral.words().cloned().collect();
        for word in rotation.words() {
            assert!(reps.contains(&dihedral_representative(word)));
        }
    }

    #[test]
    fn parametric_12_produces_the_cross() {
        let catalog = enumerate_parametric(12).unwrap();
        assert!(catalog.words().any(|word| word == &w("010121232303")));
    }

    #[test]
    fn conjecture_holds_at_12() {
        let report = verify_conjecture(12).unwrap();
        assert!(report.holds());
        assert_eq!(report.rows.len(), 3);
        let last = report.rows.last().unwrap();
        assert_eq!(last.perimeter, 12);
        assert_eq!(last.double_squares, 1);
        assert_eq!(last.prime, 1);
        assert_eq!(last.prime_couple_free, 1);
    }

    #[test]
    fn text_round_trip() {
        let catalog = enumerate_bruteforce(12, DedupMode::Rotation).unwrap();
        let text = catalog.to_text();
        let reloaded = Catalog::from_text(&text).unwrap();
        assert_eq!(reloaded, catalog);
        assert_eq!(reloaded.to_text(), text);
    }

    #[test]
    fn save_load_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("catalog.tsv");
        let catalog = enumerate_bruteforce(12, DedupMode::Dihedral).unwrap();
        catalog.save(&path).unwrap();
        assert_eq!(Catalog::load(&path).unwrap(), catalog);
    }

    #[test]
    fn format_errors_carry_line_numbers() {
        let header = "#tileforge-catalog v1 max=12 dedup=rotation";
        let entry = "010121232303\t12\t5\t1\t1\tf\t\t\t0\t3\t1\t0\t1\t0";
        let cases: Vec<(String, usize)> = vec![
            ("#other v1 max=12 dedup=rotation\n".into(), 1),
            ("#tileforge-catalog v2 max=12 dedup=rotation\n".into(), 1),
            (format!("#tileforge-catalog v1 max=x dedup=rotation\n{entry}\n"), 1),
            (format!("{header}\n010\t3\t1\t1\t1\t-\t-\t-\t-\t-\t-\t-\t-\t-\n"), 2),
            (format!("{header}\n0123x\t5\t1\t1\t1\t-\t-\t-\t-\t-\t-\t-\t-\t-\n"), 2),
            (format!("{header}\n1030\t4\t1\t1\t1\t-\t-\t-\t-\t-\t-\t-\t-\t-\n"), 2),
            (format!("{header}\n0123\t6\t1\t1\t1\t-\t-\t-\t-\t-\t-\t-\t-\t-\n"), 2),
            (format!("{header}\n0123\t4\t1\t1\t1\t-\t-\n"), 2),
            (format!("{header}\n{entry}\n{entry}\n"), 3),
            (format!("{header}\n{entry}\n0123\t4\t1\t1\t1\t-\t-\t-\t-\t-\t-\t-\t-\t-\n"), 3),
        ];
        for (text, expected_line) in cases {
            match Catalog::from_text(&text) {
                Err(CatalogError::FormatError { line, .. }) => {
                    assert_eq!(line, expected_line, "input {text:?}");
                }
                other => panic!("expected a format error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn loads_a_handwritten_catalog() {
        let text = "#tileforge-catalog v1 max=12 dedup=rotation\n\
                    010121232303\t12\t5\t1\t1\tf\t\t\t0\t3\t1\t0\t1\t0\n";
        let catalog = Catalog::from_text(text).unwrap();
        assert_eq!(catalog.entries.len(), 1);
        let c = catalog.entries[0].classification.as_ref().unwrap();
        assert_eq!(c.tag, FormTag::F);
        assert!(c.params.u1.is_empty());
        assert_eq!(c.params.k, w("0"));
        assert_eq!(c.params.p, w("3"));
        assert_eq!(c.params.exponents, [1, 0, 1, 0]);
    }
}
