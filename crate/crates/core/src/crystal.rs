//! `gl(r)` crystal operators on words and the tensor-product decomposition
//! checks for `gl(r)` and `gl(m,n)`.
//!
//! Words are read left to right as tensor factors. For the operators at `i`,
//! each letter `i` is a `+` and each `i+1` a `-`; every `-` cancels the
//! nearest uncancelled `+` on its left. What survives has the shape
//! `- ... - + ... +`. Lowering turns the leftmost surviving `+` into `i+1`,
//! raising turns the rightmost surviving `-` into `i`. With this convention a
//! word is highest weight exactly when it is a lattice permutation.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::diagram::{Partition, SkewShape};
use crate::error::{Error, Result};
use crate::lr::glmn_lr_tableaux;
use crate::reading::{far_eastern, middle_eastern, reading, AdmissibleOrder};
use crate::tableau::{enumerate_glmn, enumerate_ssyt, Entry, Tableau};

/// An element of `B^{⊗N}` for the vector crystal `B` of `gl(r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorWord {
    letters: Vec<usize>,
    rank: usize,
}

/// Surviving signs at index `i`: (positions of `-`, positions of `+`).
fn reduced_signature(letters: &[usize], i: usize) -> (Vec<usize>, Vec<usize>) {
    let mut minus = Vec::new();
    let mut plus: Vec<usize> = Vec::new();
    for (pos, &l) in letters.iter().enumerate() {
        if l == i {
            plus.push(pos);
        } else if l == i + 1 && plus.pop().is_none() {
            minus.push(pos);
        }
    }
    (minus, plus)
}

impl TensorWord {
    pub fn new(letters: Vec<usize>, rank: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l > rank) {
            return Err(Error::InvalidEntry(format!("letter {bad} outside 1..={rank}")));
        }
        Ok(TensorWord { letters, rank })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `f_i`, together with the position of the letter it changed.
    pub fn lower_at(&self, i: usize) -> Option<(TensorWord, usize)> {
        if i == 0 || i >= self.rank {
            return None;
        }
        let (_, plus) = reduced_signature(&self.letters, i);
        let &pos = plus.first()?;
        let mut letters = self.letters.clone();
        letters[pos] = i + 1;
        Some((TensorWord { letters, rank: self.rank }, pos))
    }

    /// `e_i`, together with the position of the letter it changed.
    pub fn raise_at(&self, i: usize) -> Option<(TensorWord, usize)> {
        if i == 0 || i >= self.rank {
            return None;
        }
        let (minus, _) = reduced_signature(&self.letters, i);
        let &pos = minus.last()?;
        let mut letters = self.letters.clone();
        letters[pos] = i;
        Some((TensorWord { letters, rank: self.rank }, pos))
    }

    pub fn lower(&self, i: usize) -> Option<TensorWord> {
        self.lower_at(i).map(|(w, _)| w)
    }

    pub fn raise(&self, i: usize) -> Option<TensorWord> {
        self.raise_at(i).map(|(w, _)| w)
    }

    /// Annihilated by every raising operator.
    pub fn is_highest_weight(&self) -> bool {
        (1..self.rank).all(|i| reduced_signature(&self.letters, i).0.is_empty())
    }

    /// Letter multiplicities `(wt_1, ..., wt_r)`.
    pub fn weight(&self) -> Vec<usize> {
        let mut wt = vec![0; self.rank];
        for &l in &self.letters {
            wt[l - 1] += 1;
        }
        wt
    }
}

/// Apply `f_i` (or `e_i` when `raise` is set) to a tableau through its
/// `order`-reading, writing the changed letter back into its cell.
pub fn act_on_tableau(
    t: &Tableau,
    i: usize,
    rank: usize,
    order: &AdmissibleOrder,
    raise: bool,
) -> Result<Option<Tableau>> {
    let word = TensorWord::new(reading(t, order)?, rank)?;
    let moved = if raise { word.raise_at(i) } else { word.lower_at(i) };
    let Some((_, pos)) = moved else {
        return Ok(None);
    };
    let cell = order.sequence()[pos];
    let new_letter = if raise { i } else { i + 1 };
    let cells = t.iter().map(|(c, e)| (c, if c == cell { new_letter } else { e }));
    Ok(Some(Tableau::from_cells(t.shape().clone(), cells)?))
}

/// Outcome of a tensor-product decomposition check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    /// `|B(Y)| * |B(W)|`
    pub lhs_card: usize,
    /// `Σ_Z mult(Z) * |B(Z)|`
    pub rhs_card: usize,
    /// multiplicity of each summand, keyed by the partition written `(a,b,...)`
    pub per_shape: BTreeMap<String, usize>,
    pub pass: bool,
}

fn tally(shapes: impl IntoIterator<Item = Partition>) -> BTreeMap<Partition, usize> {
    let mut out = BTreeMap::new();
    for s in shapes {
        *out.entry(s).or_insert(0) += 1;
    }
    out
}

/// Check `B(Y) ⊗ B(W) ≅ ⊕_T B(Y[R_A(T)])` for `gl(r)`.
///
/// The summands obtained by growing `Y` along the Middle-Eastern and the
/// Far-Eastern readings of each `T ∈ B(W)` are compared, tableau by tableau,
/// and as a multiset against the weights of the highest-weight elements of
/// `B(Y) ⊗ B(W)` found by brute force over all pairs. The cardinalities of
/// both sides must match as well.
pub fn verify_decomposition_glr(y: &Partition, w: &Partition, r: usize) -> Result<DecompositionReport> {
    if y.num_rows() > r || w.num_rows() > r {
        return Err(Error::Contract(format!("{y} and {w} must have at most {r} rows")));
    }
    let ys = SkewShape::straight(y.clone());
    let ws = SkewShape::straight(w.clone());
    let b_y = enumerate_ssyt(&ys, r);
    let b_w = enumerate_ssyt(&ws, r);

    let grow = |order: &AdmissibleOrder| -> Result<Vec<Option<Partition>>> {
        b_w.iter().map(|t| Ok(y.add_boxes(&reading(t, order)?).ok())).collect()
    };
    let via_me = grow(&middle_eastern(&ws))?;
    let via_fe = grow(&far_eastern(&ws))?;
    let readings_agree = via_me == via_fe;
    let from_readings = tally(via_me.into_iter().flatten());

    let mut highest = Vec::new();
    for (sy, sw) in [(middle_eastern(&ys), middle_eastern(&ws)), (far_eastern(&ys), far_eastern(&ws))] {
        let mut found = Vec::new();
        for s in &b_y {
            let head = reading(s, &sy)?;
            for t in &b_w {
                let mut letters = head.clone();
                letters.extend(reading(t, &sw)?);
                let word = TensorWord::new(letters, r)?;
                if word.is_highest_weight() {
                    found.push(Partition::new(word.weight())?);
                }
            }
        }
        highest.push(tally(found));
    }
    let hw_agree = highest[0] == highest[1];

    let lhs_card = b_y.len() * b_w.len();
    let rhs_card =
        from_readings.iter().map(|(z, mult)| mult * enumerate_ssyt(&SkewShape::straight(z.clone()), r).len()).sum();
    let pass = readings_agree && hw_agree && from_readings == highest[0] && lhs_card == rhs_card;
    Ok(DecompositionReport {
        lhs_card,
        rhs_card,
        per_shape: from_readings.iter().map(|(z, m)| (z.to_string(), *m)).collect(),
        pass,
    })
}

/// Weight of a `gl(m,n)` tableau: multiplicities of `1..m` then `1'..n'`.
fn super_weight(t: &Tableau<Entry>, m: usize, n: usize) -> Vec<usize> {
    let mut wt = vec![0; m + n];
    for &e in t.entries() {
        match e {
            Entry::Unbarred(k) => wt[k - 1] += 1,
            Entry::Barred(k) => wt[m + k - 1] += 1,
        }
    }
    wt
}

fn weight_multiset(shape: &Partition, m: usize, n: usize) -> HashMap<Vec<usize>, usize> {
    let mut out = HashMap::new();
    for t in enumerate_glmn(&SkewShape::straight(shape.clone()), m, n) {
        *out.entry(super_weight(&t, m, n)).or_insert(0) += 1;
    }
    out
}

/// Character-level check of `B(Y) ⊗ B(W) ≅ ⊕_{Z ∈ H(m,n)} B(Z)^{N_{Y,W}^Z}`
/// for `gl(m,n)`: the weight multiset of all pairs must equal the union of
/// `N_{Y,W}^Z` copies of the weight multiset of each `B(Z)`.
pub fn verify_decomposition_glmn(y: &Partition, w: &Partition, m: usize, n: usize) -> Result<DecompositionReport> {
    for d in [y, w] {
        if !d.is_hook(m, n) {
            return Err(Error::NotHook { shape: d.clone(), m, n });
        }
    }
    let wy = weight_multiset(y, m, n);
    let ww = weight_multiset(w, m, n);
    let mut lhs: HashMap<Vec<usize>, usize> = HashMap::new();
    for (a, ca) in &wy {
        for (b, cb) in &ww {
            let sum: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            *lhs.entry(sum).or_insert(0) += ca * cb;
        }
    }
    let lhs_card = wy.values().sum::<usize>() * ww.values().sum::<usize>();

    let mut rhs: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut rhs_card = 0;
    let mut per_shape = BTreeMap::new();
    for z in Partition::all_of_size(y.size() + w.size()) {
        if !z.is_hook(m, n) || !z.contains(y) {
            continue;
        }
        let order = middle_eastern(&SkewShape::new(z.clone(), y.clone())?);
        let mult = glmn_lr_tableaux(y, w, &z, &order).len();
        if mult == 0 {
            continue;
        }
        per_shape.insert(z.to_string(), mult);
        for (wt, k) in weight_multiset(&z, m, n) {
            *rhs.entry(wt).or_insert(0) += mult * k;
            rhs_card += mult * k;
        }
    }
    Ok(DecompositionReport { lhs_card, rhs_card, per_shape, pass: lhs == rhs && lhs_card == rhs_card })
}
