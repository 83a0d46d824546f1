//! Young diagrams, skew shapes and the box-addition procedure.
//!
//! Coordinates are 1-based: row `i` grows downward, column `j` rightward,
//! so a diagram is a finite subset of `N x N` in the usual English
//! convention.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{BoxFailure, Error, Result};

/// A box `(row, col)` of a diagram, both coordinates starting at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "(usize, usize)", into = "(usize, usize)")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Result<Self> {
        if row == 0 || col == 0 {
            return Err(Error::InvalidCell { row, col });
        }
        Ok(Cell { row, col })
    }

    /// The componentwise order `<=_P`.
    #[inline]
    pub fn le_p(self, other: Cell) -> bool {
        self.row <= other.row && self.col <= other.col
    }

    /// True when `self` lies weakly northeast of `other`, i.e. every
    /// admissible order must put `self` first.
    #[inline]
    pub fn northeast_of(self, other: Cell) -> bool {
        self.row <= other.row && self.col >= other.col
    }
}

impl TryFrom<(usize, usize)> for Cell {
    type Error = Error;

    fn try_from((row, col): (usize, usize)) -> Result<Self> {
        Cell::new(row, col)
    }
}

impl From<Cell> for (usize, usize) {
    fn from(c: Cell) -> Self {
        (c.row, c.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A partition `Y_1 >= Y_2 >= ... > 0`, stored without trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(rows));
        }
        Ok(Partition { rows })
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Length of row `i` (1-based); zero past the last row.
    #[inline]
    pub fn row_len(&self, i: usize) -> usize {
        debug_assert!(i >= 1);
        self.rows.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero rows.
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `other ⊆ self` as diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.rows.len() <= self.rows.len() && other.rows.iter().zip(&self.rows).all(|(a, b)| a <= b)
    }

    /// `Y[j]`: add one box at the end of row `j`.
    pub fn add_box(&self, j: usize) -> Result<Partition, BoxFailure> {
        let fail = BoxFailure { step: 1, row: j };
        if j == 0 || j > self.rows.len() + 1 {
            return Err(fail);
        }
        if j > 1 && self.row_len(j) + 1 > self.row_len(j - 1) {
            return Err(fail);
        }
        let mut rows = self.rows.clone();
        if j == rows.len() + 1 {
            rows.push(1);
        } else {
            rows[j - 1] += 1;
        }
        Ok(Partition { rows })
    }

    /// `Y[j_1, ..., j_N]`, failing at the first step that leaves the
    /// class of Young diagrams.
    pub fn add_boxes(&self, js: &[usize]) -> Result<Partition, BoxFailure> {
        let mut rows = self.rows.clone();
        for (k, &j) in js.iter().enumerate() {
            if !push_box(&mut rows, j) {
                return Err(BoxFailure { step: k + 1, row: j });
            }
        }
        Ok(Partition { rows })
    }

    /// No box at position `(m+1, n+1)`.
    pub fn is_hook(&self, m: usize, n: usize) -> bool {
        self.row_len(m + 1) <= n
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { rows: cur.clone() });
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                cur.push(part);
                go(rest - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`, smallest sizes first.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// All partitions contained in `self`.
    pub fn subdiagrams(&self) -> Vec<Partition> {
        fn go(outer: &[usize], i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::new(cur.clone()).expect("bounded by previous row"));
                return;
            }
            for len in 0..=outer[i].min(cap) {
                cur.push(len);
                go(outer, i + 1, len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.rows, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }
}

/// In-place `add_box` on a raw row vector; returns false (leaving `rows`
/// untouched) when the result is not a Young diagram.
#[inline]
pub(crate) fn push_box(rows: &mut Vec<usize>, j: usize) -> bool {
    if j == 0 || j > rows.len() + 1 {
        return false;
    }
    if j == rows.len() + 1 {
        if j > 1 && rows[j - 2] < 1 {
            return false;
        }
        rows.push(1);
        return true;
    }
    if j > 1 && rows[j - 1] + 1 > rows[j - 2] {
        return false;
    }
    rows[j - 1] += 1;
    true
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Partition::new(rows)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.rows
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// The skew diagram `outer / inner`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSkewShape", into = "RawSkewShape")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Serialize, Deserialize)]
struct RawSkewShape {
    outer: Partition,
    #[serde(default)]
    inner: Partition,
}

impl TryFrom<RawSkewShape> for SkewShape {
    type Error = Error;

    fn try_from(raw: RawSkewShape) -> Result<Self> {
        SkewShape::new(raw.outer, raw.inner)
    }
}

impl From<SkewShape> for RawSkewShape {
    fn from(s: SkewShape) -> Self {
        RawSkewShape { outer: s.outer, inner: s.inner }
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows of the outer diagram (some may be empty in the skew).
    pub fn num_rows(&self) -> usize {
        self.outer.num_rows()
    }

    /// Columns occupied in row `i`, as the half-open range `inner_i+1 ..= outer_i`.
    #[inline]
    pub fn row_cols(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        self.inner.row_len(i) + 1..=self.outer.row_len(i)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for i in 1..=self.num_rows() {
            for j in self.row_cols(i) {
                out.push(Cell { row: i, col: j });
            }
        }
        out
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col > self.inner.row_len(c.row) && c.col <= self.outer.row_len(c.row)
    }

    /// Position of `c` in the row-major cell list.
    pub fn index_of(&self, c: Cell) -> Option<usize> {
        if !self.contains(c) {
            return None;
        }
        let before: usize = (1..c.row).map(|i| self.outer.row_len(i) - self.inner.row_len(i)).sum();
        Some(before + c.col - self.inner.row_len(c.row) - 1)
    }

    /// Row-major index table: `offset(i)` is the index of the first cell of row `i`.
    pub(crate) fn row_offsets(&self) -> Vec<usize> {
        let mut offs = Vec::with_capacity(self.num_rows() + 1);
        let mut acc = 0;
        for i in 1..=self.num_rows() {
            offs.push(acc);
            acc += self.outer.row_len(i) - self.inner.row_len(i);
        }
        offs.push(acc);
        offs
    }

    /// All skew shapes `outer/inner` with `outer` inside the `rows x cols`
    /// box, deduplicated as cell sets (the canonical representative has the
    /// smallest possible outer diagram).
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<SkewShape> {
        let boxed = Partition::new(vec![cols; rows]).expect("rectangle");
        let mut seen = std::collections::BTreeMap::<Vec<Cell>, SkewShape>::new();
        for outer in boxed.subdiagrams() {
            for inner in outer.subdiagrams() {
                let s = SkewShape { outer: outer.clone(), inner };
                seen.entry(s.cells()).or_insert(s);
            }
        }
        seen.into_values().collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl From<Partition> for SkewShape {
    fn from(p: Partition) -> Self {
        SkewShape::straight(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn c(row: usize, col: usize) -> Cell {
        Cell::new(row, col).unwrap()
    }

    #[test]
    fn cells_of_straight_and_skew_shapes() {
        let x = SkewShape::straight(p(&[2, 2]));
        assert_eq!(x.cells(), vec![c(1, 1), c(1, 2), c(2, 1), c(2, 2)]);
        let y = SkewShape::new(p(&[4, 3]), p(&[2, 1])).unwrap();
        assert_eq!(y.cells(), vec![c(1, 3), c(1, 4), c(2, 2), c(2, 3)]);
        assert!(SkewShape::default().cells().is_empty());
    }

    #[test]
    fn index_of_matches_cell_list() {
        let s = SkewShape::new(p(&[6, 4, 2, 2, 2]), p(&[5, 2, 1])).unwrap();
        for (k, cell) in s.cells().into_iter().enumerate() {
            assert_eq!(s.index_of(cell), Some(k));
        }
        assert_eq!(s.index_of(c(1, 5)), None);
        assert_eq!(s.index_of(c(6, 1)), None);
    }

    #[test]
    fn partitions_are_canonical() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert!(p(&[0]).is_empty());
    }

    #[test]
    fn skew_shape_requires_containment() {
        assert!(SkewShape::new(p(&[2]), p(&[1, 1])).is_err());
    }

    #[test]
    fn add_box_examples() {
        assert_eq!(p(&[2, 2]).add_box(1).unwrap(), p(&[3, 2]));
        assert_eq!(p(&[2, 2]).add_box(3).unwrap(), p(&[2, 2, 1]));
        assert_eq!(p(&[2, 2]).add_box(4), Err(BoxFailure { step: 1, row: 4 }));
        assert_eq!(p(&[2, 2]).add_box(2), Err(BoxFailure { step: 1, row: 2 }));
        assert_eq!(Partition::empty().add_box(1).unwrap(), p(&[1]));
    }

    #[test]
    fn add_boxes_examples() {
        assert_eq!(p(&[2, 2]).add_boxes(&[1, 3, 1, 2]).unwrap(), p(&[4, 3, 1]));
        assert_eq!(p(&[2, 2]).add_boxes(&[]).unwrap(), p(&[2, 2]));
        assert_eq!(Partition::empty().add_boxes(&[1, 1]).unwrap(), p(&[2]));
        assert_eq!(Partition::empty().add_boxes(&[2]), Err(BoxFailure { step: 1, row: 2 }));
        assert_eq!(Partition::empty().add_boxes(&[1, 2, 2]), Err(BoxFailure { step: 3, row: 2 }));
    }

    #[test]
    fn hook_examples() {
        assert!(p(&[5, 2, 1]).is_hook(3, 3));
        assert!(p(&[3, 2, 2, 1]).is_hook(3, 3));
        assert!(p(&[6, 4, 2, 2, 2]).is_hook(3, 3));
        assert!(!p(&[1, 1, 1, 1]).is_hook(3, 0));
        assert!(!p(&[2, 2]).is_hook(1, 1));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(p(&[2, 1]).subdiagrams().len(), 5);
    }

    #[test]
    fn skew_shapes_in_box_are_distinct_cell_sets() {
        let shapes = SkewShape::all_in_box(2, 2);
        let mut cell_sets: Vec<_> = shapes.iter().map(|s| s.cells()).collect();
        cell_sets.sort();
        cell_sets.dedup();
        assert_eq!(cell_sets.len(), shapes.len());

        // oracle: subsets of the 3x3 box that are convex for <=_P
        let boxed: Vec<Cell> = (1..=3).flat_map(|i| (1..=3).map(move |j| c(i, j))).collect();
        let mut convex = Vec::new();
        for mask in 0u32..(1 << 9) {
            let set: Vec<Cell> = (0..9).filter(|b| mask >> b & 1 == 1).map(|b| boxed[b]).collect();
            let ok = set.iter().all(|&a| {
                set.iter()
                    .all(|&b| !a.le_p(b) || (a.row..=b.row).all(|x| (a.col..=b.col).all(|y| set.contains(&c(x, y)))))
            });
            if ok {
                let mut s = set;
                s.sort();
                convex.push(s);
            }
        }
        convex.sort();
        let mut ours: Vec<_> = SkewShape::all_in_box(3, 3).iter().map(|s| s.cells()).collect();
        ours.sort();
        assert_eq!(ours, convex);
        assert_eq!(SkewShape::all_in_box(2, 2).len(), 13);
    }

    fn arb_skew() -> impl Strategy<Value = SkewShape> {
        prop::collection::vec(0usize..6, 0..6).prop_flat_map(|mut outer| {
            outer.sort_unstable_by(|a, b| b.cmp(a));
            let outer = Partition::new(outer).unwrap();
            let subs = outer.subdiagrams();
            (Just(outer), 0..subs.len()).prop_map(move |(o, k)| SkewShape::new(o, subs[k].clone()).unwrap())
        })
    }

    proptest! {
        #[test]
        fn skew_interval_property(s in arb_skew()) {
            let cells = s.cells();
            for &a in &cells {
                for &b in &cells {
                    if a.le_p(b) {
                        for x in a.row..=b.row {
                            for y in a.col..=b.col {
                                prop_assert!(s.contains(c(x, y)));
                            }
                        }
                    }
                }
            }
        }

        #[test]
        fn add_boxes_is_prefix_closed(rows in prop::collection::vec(0usize..5, 0..4),
                                      js in prop::collection::vec(1usize..5, 0..8)) {
            let mut rows = rows;
            rows.sort_unstable_by(|a, b| b.cmp(a));
            let y = Partition::new(rows).unwrap();
            let full = y.add_boxes(&js);
            let prefixes_ok = (0..=js.len()).all(|k| y.add_boxes(&js[..k]).is_ok());
            prop_assert_eq!(full.is_ok(), prefixes_ok);
            if let Ok(z) = full {
                prop_assert_eq!(z.size(), y.size() + js.len());
            }
        }

        #[test]
        fn add_box_changes_one_row_by_one(rows in prop::collection::vec(0usize..5, 0..4), j in 1usize..6) {
            let mut rows = rows;
            rows.sort_unstable_by(|a, b| b.cmp(a));
            let y = Partition::new(rows).unwrap();
            if let Ok(z) = y.add_box(j) {
                let changed: Vec<usize> = (1..=z.num_rows())
                    .filter(|&i| z.row_len(i) != y.row_len(i))
                    .collect();
                prop_assert_eq!(changed, vec![j]);
                prop_assert_eq!(z.row_len(j), y.row_len(j) + 1);
            }
        }
    }
}
