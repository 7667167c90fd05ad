//! Boundary words as polyomino boundaries.
//!
//! A valid boundary word traces a closed, self-avoiding path on the grid
//! enclosing positive area. Validation normalizes the traversal to
//! counterclockwise (via hat, which walks the same curve backwards) and the
//! starting point to the least rotation, so equal polyominoes compare equal.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashSet};

use thiserror::Error;

use crate::bn::SquareFactorization;
use crate::word::{CircularWord, Step, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyominoError {
    #[error("empty word")]
    EmptyWord,
    #[error("word is not closed, net displacement ({0}, {1})")]
    NotClosed(i64, i64),
    #[error("boundary intersects itself at ({0}, {1})")]
    SelfIntersecting(i64, i64),
    #[error("closed path encloses no area")]
    DegenerateArea,
    #[error("factorization does not belong to this boundary word")]
    FactorizationMismatch,
}

/// The boundary of a polyomino: a closed, self-avoiding, counterclockwise
/// circular word with positive enclosed area.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BoundaryWord {
    word: CircularWord,
}

impl BoundaryWord {
    /// Checks closure, self-avoidance and positive area, in that order, then
    /// normalizes orientation and starting point.
    pub fn validate(word: &Word) -> Result<BoundaryWord, PolyominoError> {
        if word.is_empty() {
            return Err(PolyominoError::EmptyWord);
        }
        let (dx, dy) = word.displacement();
        if (dx, dy) != (0, 0) {
            return Err(PolyominoError::NotClosed(dx, dy));
        }
        let mut seen = HashSet::with_capacity(word.len());
        let mut pos = (0i64, 0i64);
        for s in word.steps() {
            if !seen.insert(pos) {
                return Err(PolyominoError::SelfIntersecting(pos.0, pos.1));
            }
            let (sx, sy) = s.delta();
            pos = (pos.0 + sx, pos.1 + sy);
        }
        let doubled = signed_area_doubled(word);
        if doubled == 0 {
            return Err(PolyominoError::DegenerateArea);
        }
        let oriented = if doubled < 0 { word.hat() } else { word.clone() };
        let word = CircularWord::new(oriented).expect("nonempty by the checks above");
        Ok(BoundaryWord { word })
    }

    /// The canonical counterclockwise word.
    pub fn word(&self) -> &Word {
        self.word.canonical()
    }

    pub fn circular(&self) -> &CircularWord {
        &self.word
    }

    pub fn perimeter(&self) -> usize {
        self.word.len()
    }

    pub fn is_couple_free(&self) -> bool {
        self.word.is_couple_free()
    }

    /// The |P|+1 vertices visited from `origin`; first = last.
    pub fn trace(&self, origin: (i64, i64)) -> Vec<(i64, i64)> {
        let mut vertices = Vec::with_capacity(self.perimeter() + 1);
        let mut pos = origin;
        vertices.push(pos);
        for s in self.word().steps() {
            let (dx, dy) = s.delta();
            pos = (pos.0 + dx, pos.1 + dy);
            vertices.push(pos);
        }
        vertices
    }

    /// Enclosed area; positive because the traversal is counterclockwise.
    pub fn area(&self) -> u64 {
        (signed_area_doubled(self.word()) / 2) as u64
    }

    /// The unit cells enclosed by the boundary, via scanline parity over the
    /// vertical edges: cell (x, y) is inside iff an odd number of vertical
    /// edges cross row y at columns ≤ x.
    pub fn rasterize(&self) -> CellSet {
        let mut rows: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        let mut pos = (0i64, 0i64);
        for s in self.word().steps() {
            match s {
                Step::North => rows.entry(pos.1).or_default().push(pos.0),
                Step::South => rows.entry(pos.1 - 1).or_default().push(pos.0),
                _ => {}
            }
            let (dx, dy) = s.delta();
            pos = (pos.0 + dx, pos.1 + dy);
        }
        let mut cells = BTreeSet::new();
        for (y, mut xs) in rows {
            xs.sort_unstable();
            // A simple closed curve crosses each horizontal line evenly.
            debug_assert!(xs.len() % 2 == 0);
            for pair in xs.chunks(2) {
                for x in pair[0]..pair[1] {
                    cells.insert((x, y));
                }
            }
        }
        CellSet { cells }
    }
}

fn signed_area_doubled(word: &Word) -> i64 {
    let mut doubled = 0i64;
    let mut pos = (0i64, 0i64);
    for s in word.steps() {
        let (dx, dy) = s.delta();
        doubled += pos.0 * dy - pos.1 * dx;
        pos = (pos.0 + dx, pos.1 + dy);
    }
    doubled
}

/// A finite set of unit cells, each named by its lower-left corner.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CellSet {
    cells: BTreeSet<(i64, i64)>,
}

impl CellSet {
    pub fn from_cells<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> CellSet {
        CellSet { cells: iter.into_iter().collect() }
    }

    pub fn cells(&self) -> &BTreeSet<(i64, i64)> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: (i64, i64)) -> bool {
        self.cells.contains(&cell)
    }

    pub fn translate(&self, by: (i64, i64)) -> CellSet {
        CellSet { cells: self.cells.iter().map(|&(x, y)| (x + by.0, y + by.1)).collect() }
    }
}

/// One translated copy of a polyomino: its translation vector and its cells.
pub type PlacedCopy = ((i64, i64), CellSet);

/// A rows×cols patch of copies of P translated along the lattice spanned by
/// the displacements of the factors A and B of `f`. Returns each copy with
/// its translation vector. The interior of the patch is checked to be
/// overlap-free: every cell of a copy that is surrounded by neighbor copies
/// on all sides must be covered exactly once.
pub fn tiling_patch(
    p: &BoundaryWord,
    f: &SquareFactorization,
    rows: usize,
    cols: usize,
) -> Result<Vec<PlacedCopy>, PolyominoError> {
    if !f.belongs_to(p) {
        return Err(PolyominoError::FactorizationMismatch);
    }
    let base = p.rasterize();
    let da = f.factor_a().displacement();
    let db = f.factor_b().displacement();
    let mut copies = Vec::with_capacity(rows * cols);
    for m in 0..rows as i64 {
        for n in 0..cols as i64 {
            let t = (m * da.0 + n * db.0, m * da.1 + n * db.1);
            copies.push((t, base.translate(t)));
        }
    }
    let mut coverage: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for (_, copy) in &copies {
        for &cell in copy.cells() {
            *coverage.entry(cell).or_insert(0) += 1;
        }
    }
    for m in 1..rows.saturating_sub(1) {
        for n in 1..cols.saturating_sub(1) {
            let copy = &copies[m * cols + n].1;
            if copy.cells().iter().any(|cell| coverage[cell] != 1) {
                // A doubly covered interior cell means the cuts do not induce
                // a translation tiling, so f cannot belong to P.
                return Err(PolyominoError::FactorizationMismatch);
            }
        }
    }
    Ok(copies)
}

/// Multiset coverage of a patch, exposed for overlap assertions in tests.
pub fn patch_coverage(copies: &[((i64, i64), CellSet)]) -> BTreeMap<(i64, i64), usize> {
    let mut coverage = BTreeMap::new();
    for (_, copy) in copies {
        for &cell in copy.cells() {
            match coverage.entry(cell) {
                Entry::Vacant(e) => {
                    e.insert(1);
                }
                Entry::Occupied(mut e) => *e.get_mut() += 1,
            }
        }
    }
    coverage
}
