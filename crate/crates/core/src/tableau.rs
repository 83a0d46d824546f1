//! Fillings of skew shapes: classical and `gl(m,n)`-semistandard tableaux.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagram::{Cell, SkewShape};
use crate::error::{Error, Result};

type Pairs<E> = Vec<(E, E)>;

/// A letter of the `gl(m,n)` alphabet `1 < ... < m < 1' < ... < n'`.
///
/// The derived order is exactly the alphabet order: every unbarred letter
/// precedes every barred one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Entry {
    Unbarred(usize),
    Barred(usize),
}

impl Entry {
    pub fn is_barred(self) -> bool {
        matches!(self, Entry::Barred(_))
    }

    pub fn index(self) -> usize {
        match self {
            Entry::Unbarred(k) | Entry::Barred(k) => k,
        }
    }

    pub fn in_alphabet(self, m: usize, n: usize) -> bool {
        match self {
            Entry::Unbarred(k) => (1..=m).contains(&k),
            Entry::Barred(k) => (1..=n).contains(&k),
        }
    }

    /// The alphabet of `gl(m,n)` in increasing order.
    pub fn alphabet(m: usize, n: usize) -> Vec<Entry> {
        (1..=m).map(Entry::Unbarred).chain((1..=n).map(Entry::Barred)).collect()
    }

    /// Signed integer encoding: `k` for unbarred, `-k` for barred.
    pub fn to_signed(self) -> i64 {
        match self {
            Entry::Unbarred(k) => k as i64,
            Entry::Barred(k) => -(k as i64),
        }
    }

    pub fn from_signed(v: i64) -> Result<Self> {
        match v {
            0 => Err(Error::InvalidEntry("0 is not a letter".into())),
            v if v > 0 => Ok(Entry::Unbarred(v as usize)),
            v => Ok(Entry::Barred(v.unsigned_abs() as usize)),
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Unbarred(k) => write!(f, "{k}"),
            Entry::Barred(k) => write!(f, "{k}'"),
        }
    }
}

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i64(self.to_signed())
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = i64::deserialize(d)?;
        Entry::from_signed(v).map_err(serde::de::Error::custom)
    }
}

/// Values that can fill a tableau box.
pub trait Letter: Copy + Ord + fmt::Display {
    /// Text for the renderer; `unicode` selects overbars for barred letters.
    fn render(&self, unicode: bool) -> String;
}

impl Letter for usize {
    fn render(&self, _unicode: bool) -> String {
        self.to_string()
    }
}

impl Letter for Entry {
    fn render(&self, unicode: bool) -> String {
        match (self, unicode) {
            (Entry::Barred(k), true) => {
                // combining overline on every digit
                k.to_string().chars().flat_map(|c| [c, '\u{0305}']).collect()
            }
            _ => self.to_string(),
        }
    }
}

/// A filling of a skew shape. Entries are stored in row-major cell order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau<E = usize> {
    shape: SkewShape,
    entries: Vec<E>,
}

/// A `gl(m,n)` tableau.
pub type SuperTableau = Tableau<Entry>;

impl<E: Letter> Tableau<E> {
    pub fn from_entries(shape: SkewShape, entries: Vec<E>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::ShapeMismatch(format!(
                "shape {shape} has {} cells, got {} entries",
                shape.size(),
                entries.len()
            )));
        }
        Ok(Tableau { shape, entries })
    }

    /// Build from per-row entry lists; row `i` lists only the cells of the
    /// skew shape in that row. Rows past the last one may be omitted.
    pub fn from_rows(shape: SkewShape, rows: Vec<Vec<E>>) -> Result<Self> {
        if rows.len() > shape.num_rows() {
            return Err(Error::ShapeMismatch(format!(
                "shape {shape} has {} rows, got {}",
                shape.num_rows(),
                rows.len()
            )));
        }
        let mut entries = Vec::with_capacity(shape.size());
        for i in 1..=shape.num_rows() {
            let want = shape.row_cols(i).count();
            let got = rows.get(i - 1).map_or(&[][..], |r| r.as_slice());
            if got.len() != want {
                return Err(Error::ShapeMismatch(format!("row {i} of {shape} has {want} cells, got {}", got.len())));
            }
            entries.extend_from_slice(got);
        }
        Ok(Tableau { shape, entries })
    }

    /// Build from a cell-to-entry assignment covering the shape exactly.
    pub fn from_cells(shape: SkewShape, cells: impl IntoIterator<Item = (Cell, E)>) -> Result<Self> {
        let mut slots: Vec<Option<E>> = vec![None; shape.size()];
        for (cell, e) in cells {
            let k = shape.index_of(cell).ok_or(Error::CellNotInShape(cell))?;
            if slots[k].replace(e).is_some() {
                return Err(Error::ShapeMismatch(format!("cell {cell} assigned twice")));
            }
        }
        let entries = slots
            .into_iter()
            .zip(shape.cells())
            .map(|(e, cell)| e.ok_or_else(|| Error::ShapeMismatch(format!("cell {cell} left empty"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Tableau { shape, entries })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Entries in row-major cell order.
    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, c: Cell) -> Option<E> {
        self.shape.index_of(c).map(|k| self.entries[k])
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, E)> + '_ {
        self.shape.cells().into_iter().zip(self.entries.iter().copied())
    }

    pub fn rows(&self) -> Vec<Vec<E>> {
        let offs = self.shape.row_offsets();
        offs.windows(2).map(|w| self.entries[w[0]..w[1]].to_vec()).collect()
    }

    /// Adjacent pairs `(left, right)` and `(top, bottom)` inside the shape.
    /// Skew shapes are convex, so these suffice for row/column conditions.
    fn adjacent_pairs(&self) -> (Pairs<E>, Pairs<E>) {
        let mut horiz = Vec::new();
        let mut vert = Vec::new();
        for (cell, e) in self.iter() {
            let right = Cell { row: cell.row, col: cell.col + 1 };
            if let Some(r) = self.get(right) {
                horiz.push((e, r));
            }
            let below = Cell { row: cell.row + 1, col: cell.col };
            if let Some(b) = self.get(below) {
                vert.push((e, b));
            }
        }
        (horiz, vert)
    }
}

impl Tableau<usize> {
    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let (horiz, vert) = self.adjacent_pairs();
        self.entries.iter().all(|&e| e >= 1) && horiz.iter().all(|(a, b)| a <= b) && vert.iter().all(|(a, b)| a < b)
    }

    /// `cont(T)`: multiplicity of each entry `1, 2, ...` up to the largest one.
    pub fn content(&self) -> Vec<usize> {
        let max = self.entries.iter().copied().max().unwrap_or(0);
        let mut mu = vec![0; max];
        for &e in &self.entries {
            mu[e - 1] += 1;
        }
        mu
    }

    /// `p(T; c)`: how many boxes carrying the entry at `c` lie in column
    /// `col(c)` or to its right, counted over the whole tableau.
    pub fn p_index(&self, c: Cell) -> Result<usize> {
        let k = self.get(c).ok_or(Error::CellNotInShape(c))?;
        let mut count = 0;
        for (cell, e) in self.iter() {
            if e != k {
                continue;
            }
            if cell.col == c.col && cell != c {
                return Err(Error::RepeatedInColumn { entry: k, col: c.col });
            }
            if cell.col >= c.col {
                count += 1;
            }
        }
        Ok(count)
    }

    /// `p` for every cell, in row-major order. Same result as calling
    /// [`Tableau::p_index`] on each cell, in one pass per entry value.
    pub fn p_indices(&self) -> Result<Vec<usize>> {
        let cells = self.shape.cells();
        let mut out = vec![0; cells.len()];
        let mut by_entry: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (k, &e) in self.entries.iter().enumerate() {
            by_entry.entry(e).or_default().push(k);
        }
        for (entry, mut idx) in by_entry {
            idx.sort_by_key(|&k| std::cmp::Reverse(cells[k].col));
            for (rank, w) in idx.iter().enumerate() {
                out[*w] = rank + 1;
            }
            if let Some(pair) = idx.windows(2).find(|p| cells[p[0]].col == cells[p[1]].col) {
                return Err(Error::RepeatedInColumn { entry, col: cells[pair[0]].col });
            }
        }
        Ok(out)
    }
}

impl Tableau<Entry> {
    /// The three `gl(m,n)` conditions: weakly increasing rows and columns,
    /// unbarred letters strict down columns, barred letters strict along rows.
    pub fn is_glmn_semistandard(&self, m: usize, n: usize) -> bool {
        if !self.entries.iter().all(|e| e.in_alphabet(m, n)) {
            return false;
        }
        let (horiz, vert) = self.adjacent_pairs();
        horiz.iter().all(|&(a, b)| a < b || (a == b && !a.is_barred()))
            && vert.iter().all(|&(a, b)| a < b || (a == b && a.is_barred()))
    }
}

#[derive(Serialize, Deserialize)]
struct RawTableau<E> {
    shape: SkewShape,
    rows: Vec<Vec<E>>,
}

impl<E: Letter + Serialize> Serialize for Tableau<E> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RawTableau { shape: self.shape.clone(), rows: self.rows() }.serialize(s)
    }
}

impl<'de, E: Letter + Deserialize<'de>> Deserialize<'de> for Tableau<E> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawTableau::<E>::deserialize(d)?;
        Tableau::from_rows(raw.shape, raw.rows).map_err(serde::de::Error::custom)
    }
}

/// Neighbour indices used by the row-major backtracking enumerators.
struct Neighbours {
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
}

impl Neighbours {
    fn of(shape: &SkewShape) -> Self {
        let cells = shape.cells();
        let left = cells.iter().map(|c| shape.index_of(Cell { row: c.row, col: c.col.wrapping_sub(1) })).collect();
        let up = cells.iter().map(|c| shape.index_of(Cell { row: c.row.wrapping_sub(1), col: c.col })).collect();
        Neighbours { left, up }
    }
}

/// All semistandard tableaux of `shape` with entries in `1..=max_entry`,
/// in lexicographic order of their row-major entry sequences.
pub fn enumerate_ssyt(shape: &SkewShape, max_entry: usize) -> Vec<Tableau> {
    fn go(k: usize, nb: &Neighbours, max: usize, buf: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == nb.left.len() {
            out.push(buf.clone());
            return;
        }
        let lo_left = nb.left[k].map_or(1, |l| buf[l]);
        let lo_up = nb.up[k].map_or(1, |u| buf[u] + 1);
        for e in lo_left.max(lo_up)..=max {
            buf.push(e);
            go(k + 1, nb, max, buf, out);
            buf.pop();
        }
    }
    let nb = Neighbours::of(shape);
    let mut raw = Vec::new();
    go(0, &nb, max_entry, &mut Vec::with_capacity(shape.size()), &mut raw);
    raw.into_iter().map(|entries| Tableau { shape: shape.clone(), entries }).collect()
}

/// All `gl(m,n)`-semistandard tableaux of `shape`, in lexicographic order of
/// their row-major entry sequences.
pub fn enumerate_glmn(shape: &SkewShape, m: usize, n: usize) -> Vec<SuperTableau> {
    fn go(k: usize, nb: &Neighbours, alphabet: &[Entry], buf: &mut Vec<Entry>, out: &mut Vec<Vec<Entry>>) {
        if k == nb.left.len() {
            out.push(buf.clone());
            return;
        }
        let left = nb.left[k].map(|l| buf[l]);
        let up = nb.up[k].map(|u| buf[u]);
        for &e in alphabet {
            let row_ok = left.is_none_or(|l| l < e || (l == e && !e.is_barred()));
            let col_ok = up.is_none_or(|u| u < e || (u == e && e.is_barred()));
            if row_ok && col_ok {
                buf.push(e);
                go(k + 1, nb, alphabet, buf, out);
                buf.pop();
            }
        }
    }
    let nb = Neighbours::of(shape);
    let alphabet = Entry::alphabet(m, n);
    let mut raw = Vec::new();
    go(0, &nb, &alphabet, &mut Vec::with_capacity(shape.size()), &mut raw);
    raw.into_iter().map(|entries| Tableau { shape: shape.clone(), entries }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Partition;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn straight(rows: &[usize]) -> SkewShape {
        SkewShape::straight(p(rows))
    }

    fn t(shape: &[usize], rows: Vec<Vec<usize>>) -> Tableau {
        Tableau::from_rows(straight(shape), rows).unwrap()
    }

    fn c(row: usize, col: usize) -> Cell {
        Cell::new(row, col).unwrap()
    }

    const U1: Entry = Entry::Unbarred(1);
    const B1: Entry = Entry::Barred(1);
    const B2: Entry = Entry::Barred(2);

    #[test]
    fn semistandard_examples() {
        assert!(t(&[3, 2], vec![vec![2, 2, 5], vec![3, 4]]).is_semistandard());
        assert!(!t(&[2, 2], vec![vec![1, 1], vec![1, 2]]).is_semistandard());
        assert!(Tableau::<usize>::from_rows(SkewShape::default(), vec![]).unwrap().is_semistandard());
    }

    #[test]
    fn semistandard_skew_ignores_missing_cells() {
        // (2,1)/(1): cells (1,2) and (2,1) are not adjacent
        let s = SkewShape::new(p(&[2, 1]), p(&[1])).unwrap();
        assert!(Tableau::from_rows(s, vec![vec![2], vec![1]]).unwrap().is_semistandard());
    }

    #[test]
    fn glmn_examples() {
        let s = Tableau::from_rows(straight(&[2, 2]), vec![vec![U1, B1], vec![B1, B2]]).unwrap();
        assert!(s.is_glmn_semistandard(1, 2));
        let col = Tableau::from_rows(straight(&[1, 1]), vec![vec![U1], vec![U1]]).unwrap();
        assert!(!col.is_glmn_semistandard(2, 0));
        let row = Tableau::from_rows(straight(&[2]), vec![vec![B1, B1]]).unwrap();
        assert!(!row.is_glmn_semistandard(0, 2));
        // letters outside the alphabet
        assert!(!s.is_glmn_semistandard(1, 1));
    }

    #[test]
    fn content_examples() {
        assert_eq!(t(&[2, 1], vec![vec![1, 1], vec![2]]).content(), vec![2, 1]);
        assert!(Tableau::<usize>::from_rows(SkewShape::default(), vec![]).unwrap().content().is_empty());
    }

    #[test]
    fn p_index_examples() {
        let tab = t(&[3, 2], vec![vec![1, 1, 2], vec![2, 2]]);
        assert_eq!(tab.p_index(c(1, 1)).unwrap(), 2);
        assert_eq!(tab.p_index(c(1, 2)).unwrap(), 1);
        assert_eq!(tab.p_index(c(1, 3)).unwrap(), 1);
        assert_eq!(tab.p_index(c(2, 1)).unwrap(), 3);
        assert_eq!(tab.p_index(c(2, 2)).unwrap(), 2);
        assert_eq!(tab.p_indices().unwrap(), vec![2, 1, 1, 3, 2]);
        assert_eq!(t(&[1], vec![vec![7]]).p_index(c(1, 1)).unwrap(), 1);
    }

    #[test]
    fn p_index_rejects_repeated_column() {
        let tab = t(&[1, 1], vec![vec![3], vec![3]]);
        assert_eq!(tab.p_index(c(1, 1)), Err(Error::RepeatedInColumn { entry: 3, col: 1 }));
        assert!(tab.p_indices().is_err());
        assert_eq!(tab.p_index(c(3, 1)), Err(Error::CellNotInShape(c(3, 1))));
    }

    #[test]
    fn ssyt_examples() {
        let col = enumerate_ssyt(&straight(&[1, 1]), 2);
        assert_eq!(col, vec![t(&[1, 1], vec![vec![1], vec![2]])]);
        let row: Vec<Vec<usize>> = enumerate_ssyt(&straight(&[2]), 2).iter().map(|t| t.entries().to_vec()).collect();
        assert_eq!(row, vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
        assert_eq!(enumerate_ssyt(&straight(&[2, 2]), 2).len(), 1);
        assert_eq!(enumerate_ssyt(&SkewShape::default(), 3).len(), 1);
    }

    #[test]
    fn glmn_enumeration_examples() {
        let one = enumerate_glmn(&straight(&[1]), 1, 1);
        assert_eq!(one.iter().map(|t| t.entries()[0]).collect::<Vec<_>>(), vec![U1, B1]);
        assert!(enumerate_glmn(&straight(&[2, 2, 2]), 1, 1).is_empty());
        let col: Vec<Vec<Entry>> =
            enumerate_glmn(&straight(&[1, 1]), 1, 1).iter().map(|t| t.entries().to_vec()).collect();
        assert_eq!(col, vec![vec![U1, B1], vec![B1, B1]]);
    }

    #[test]
    fn json_encoding_uses_negative_integers_for_barred_letters() {
        let s = Tableau::from_rows(straight(&[2, 1]), vec![vec![U1, B2], vec![B1]]).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"shape":{"outer":[2,1],"inner":[]},"rows":[[1,-2],[-1]]}"#);
        let back: SuperTableau = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<SuperTableau>(r#"{"shape":{"outer":[2]},"rows":[[1,0]]}"#).is_err());
    }

    #[test]
    fn from_cells_requires_exact_cover() {
        let s = straight(&[2]);
        assert!(Tableau::from_cells(s.clone(), [(c(1, 1), 1usize)]).is_err());
        assert!(Tableau::from_cells(s.clone(), [(c(1, 1), 1usize), (c(2, 1), 1)]).is_err());
        let ok = Tableau::from_cells(s, [(c(1, 2), 2usize), (c(1, 1), 1)]).unwrap();
        assert_eq!(ok.entries(), &[1, 2]);
    }
}
