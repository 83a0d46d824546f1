//! Admissible orders on cell sets and the reading words they induce.
//!
//! A total order on a set of boxes is admissible when every box comes
//! before all boxes lying weakly southwest of it. Orders are materialized
//! as explicit sequences so arbitrary user-supplied ones can be validated
//! and replayed.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::diagram::{Cell, SkewShape};
use crate::error::{Error, Result};
use crate::tableau::{Letter, Tableau};

/// An admissible total order on the cells of a skew shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdmissibleOrder {
    shape: SkewShape,
    sequence: Vec<Cell>,
    /// rank of each cell, indexed by row-major position in `shape`
    rank: Vec<usize>,
}

impl AdmissibleOrder {
    /// Validate `sequence` as an admissible order on `shape`.
    pub fn new(shape: SkewShape, sequence: Vec<Cell>) -> Result<Self> {
        let rank = ranks(&shape, &sequence)?;
        if let Some((first, second)) = first_violation(&sequence) {
            return Err(Error::NotAdmissible { first, second });
        }
        Ok(AdmissibleOrder { shape, sequence, rank })
    }

    fn from_sorted(shape: SkewShape, sequence: Vec<Cell>) -> Self {
        let rank = ranks(&shape, &sequence).expect("sequence built from the shape's own cells");
        debug_assert!(first_violation(&sequence).is_none());
        AdmissibleOrder { shape, sequence, rank }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Cells from smallest to largest.
    pub fn sequence(&self) -> &[Cell] {
        &self.sequence
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// Position of `c` in the order.
    pub fn rank_of(&self, c: Cell) -> Option<usize> {
        self.shape.index_of(c).map(|k| self.rank[k])
    }

    /// Ranks indexed by the row-major index of each cell.
    pub fn ranks_row_major(&self) -> &[usize] {
        &self.rank
    }
}

fn ranks(shape: &SkewShape, sequence: &[Cell]) -> Result<Vec<usize>> {
    if sequence.len() != shape.size() {
        return Err(Error::NotAPermutation(format!(
            "{} cells listed for a shape with {} cells",
            sequence.len(),
            shape.size()
        )));
    }
    let mut rank = vec![usize::MAX; shape.size()];
    for (r, &c) in sequence.iter().enumerate() {
        let k = shape.index_of(c).ok_or_else(|| Error::NotAPermutation(format!("{c} is not a cell of {shape}")))?;
        if rank[k] != usize::MAX {
            return Err(Error::NotAPermutation(format!("{c} listed twice")));
        }
        rank[k] = r;
    }
    Ok(rank)
}

/// A pair `(a, b)` where `a` is listed after `b` although `a` is northeast of `b`.
fn first_violation(sequence: &[Cell]) -> Option<(Cell, Cell)> {
    for (i, &earlier) in sequence.iter().enumerate() {
        for &later in &sequence[i + 1..] {
            if later.northeast_of(earlier) {
                return Some((later, earlier));
            }
        }
    }
    None
}

/// Whether `sequence` is an admissible order on `shape`. Errors if it is not
/// a permutation of the shape's cells.
pub fn is_admissible(sequence: &[Cell], shape: &SkewShape) -> Result<bool> {
    ranks(shape, sequence)?;
    Ok(first_violation(sequence).is_none())
}

/// Rows top to bottom, each read right to left.
pub fn middle_eastern(shape: &SkewShape) -> AdmissibleOrder {
    let mut cells = shape.cells();
    cells.sort_by(|a, b| a.row.cmp(&b.row).then(b.col.cmp(&a.col)));
    AdmissibleOrder::from_sorted(shape.clone(), cells)
}

/// Columns right to left, each read top to bottom.
pub fn far_eastern(shape: &SkewShape) -> AdmissibleOrder {
    let mut cells = shape.cells();
    cells.sort_by(|a, b| b.col.cmp(&a.col).then(a.row.cmp(&b.row)));
    AdmissibleOrder::from_sorted(shape.clone(), cells)
}

/// A seeded random linear extension of the admissibility constraints,
/// built by repeatedly picking uniformly among the currently minimal cells.
pub fn random_admissible_order(shape: &SkewShape, seed: u64) -> AdmissibleOrder {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut remaining = shape.cells();
    let mut sequence = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let minimal: Vec<usize> = (0..remaining.len())
            .filter(|&i| {
                let c = remaining[i];
                remaining.iter().all(|&d| d == c || !d.northeast_of(c))
            })
            .collect();
        let pick = minimal[rng.gen_range(0..minimal.len())];
        sequence.push(remaining.remove(pick));
    }
    AdmissibleOrder::from_sorted(shape.clone(), sequence)
}

/// How to choose an admissible order for a shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrderSpec {
    MiddleEastern,
    FarEastern,
    Seed(u64),
    Explicit(Vec<Cell>),
}

impl OrderSpec {
    pub fn realize(&self, shape: &SkewShape) -> Result<AdmissibleOrder> {
        Ok(match self {
            OrderSpec::MiddleEastern => middle_eastern(shape),
            OrderSpec::FarEastern => far_eastern(shape),
            OrderSpec::Seed(s) => random_admissible_order(shape, *s),
            OrderSpec::Explicit(cells) => AdmissibleOrder::new(shape.clone(), cells.clone())?,
        })
    }
}

impl FromStr for OrderSpec {
    type Err = Error;

    /// `ME`, `FE` or `seed:<n>`; explicit orders come from files and are
    /// resolved by the caller.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "ME" | "me" => Ok(OrderSpec::MiddleEastern),
            "FE" | "fe" => Ok(OrderSpec::FarEastern),
            other => other
                .strip_prefix("seed:")
                .and_then(|n| n.parse().ok())
                .map(OrderSpec::Seed)
                .ok_or_else(|| Error::InvalidOrderSpec(s.to_string())),
        }
    }
}

impl fmt::Display for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderSpec::MiddleEastern => write!(f, "ME"),
            OrderSpec::FarEastern => write!(f, "FE"),
            OrderSpec::Seed(s) => write!(f, "seed:{s}"),
            OrderSpec::Explicit(_) => write!(f, "explicit"),
        }
    }
}

/// A word `(i_1, ..., i_N)` of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_lattice_permutation(&self) -> bool {
        is_lattice_permutation(&self.0)
    }
}

/// Entries of `t` listed in `order`.
pub fn reading<E: Letter>(t: &Tableau<E>, order: &AdmissibleOrder) -> Result<Vec<E>> {
    if t.shape() != order.shape() {
        return Err(Error::ShapeMismatch(format!(
            "tableau of shape {} read with an order on {}",
            t.shape(),
            order.shape()
        )));
    }
    Ok(order.sequence().iter().map(|&c| t.get(c).expect("order covers the shape")).collect())
}

/// Reading of a classical tableau as a [`Word`].
pub fn reading_word(t: &Tableau, order: &AdmissibleOrder) -> Result<Word> {
    reading(t, order).map(Word)
}

/// Every prefix contains at least as many `i`'s as `(i+1)`'s, for all `i`.
pub fn is_lattice_permutation(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &letter in word {
        if letter == 0 {
            return false;
        }
        if counts.len() < letter {
            counts.resize(letter, 0);
        }
        counts[letter - 1] += 1;
        if letter > 1 && counts[letter - 1] > counts[letter - 2] {
            return false;
        }
    }
    true
}
