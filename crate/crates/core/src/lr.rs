//! Littlewood-Richardson tableaux for `gl(r)` and `gl(m,n)`, and the
//! bijections between them and admissible pictures.
//!
//! Conventions for the two families:
//!
//! * `gl(r)`: `B(W)_Y^Z[A]` is the set of semistandard tableaux `T` of the
//!   (possibly skew) shape `W` whose reading `R_A(T) = (j_1, ..., j_N)` adds
//!   boxes to `Y` one row at a time, staying a Young diagram at every step and
//!   ending at `Z`.
//! * `gl(m,n)`: `LR(Y,W)^Z[A]` is the set of semistandard tableaux `Q` of
//!   shape `Z/Y` with content `W` whose `A`-reading is a lattice permutation.
//!
//! `Φ`/`Ψ` relate `B(W)_Y^Z[A']` with pictures `W -> Z/Y`; the tilde maps
//! relate `LR(Y,W)^Z[A']` with pictures `Z/Y -> W`.

use serde::{Deserialize, Serialize};

use crate::diagram::{push_box, Cell, Partition, SkewShape};
use crate::error::{Error, Result};
use crate::picture::{is_admissible_picture, omega, Picture};
use crate::reading::{is_lattice_permutation, middle_eastern, reading, AdmissibleOrder, OrderSpec};
use crate::tableau::Tableau;

/// Whether `t ∈ B(W)_Y^Z[order]`, `W` being the shape of `t`.
pub fn is_glr_lr_tableau(t: &Tableau, y: &Partition, z: &Partition, order: &AdmissibleOrder) -> Result<bool> {
    let word = reading(t, order)?;
    Ok(t.is_semistandard() && y.add_boxes(&word).is_ok_and(|grown| &grown == z))
}

/// Whether `q ∈ LR(Y,W)^Z[order]`.
pub fn is_glmn_lr_tableau(
    q: &Tableau,
    y: &Partition,
    w: &Partition,
    z: &Partition,
    order: &AdmissibleOrder,
) -> Result<bool> {
    if !z.contains(y) || q.shape() != &SkewShape::new(z.clone(), y.clone())? {
        return Ok(false);
    }
    if !q.is_semistandard() || q.content() != w.rows() {
        return Ok(false);
    }
    Ok(is_lattice_permutation(&reading(q, order)?))
}

/// Cells visited in an admissible order together with the row-major indices
/// of their four neighbours. Northeast neighbours (up, right) are always
/// filled before a cell; southwest ones (down, left) may or may not be,
/// depending on the order, so all four are checked when present.
struct OrderedFill {
    visit: Vec<usize>,
    up: Vec<Option<usize>>,
    down: Vec<Option<usize>>,
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
}

impl OrderedFill {
    fn new(order: &AdmissibleOrder) -> Self {
        let shape = order.shape();
        let cells = shape.cells();
        let at = |c: &Cell, dr: isize, dc: isize| {
            let row = c.row as isize + dr;
            let col = c.col as isize + dc;
            if row < 1 || col < 1 {
                return None;
            }
            shape.index_of(Cell { row: row as usize, col: col as usize })
        };
        OrderedFill {
            visit: order.sequence().iter().map(|&c| shape.index_of(c).expect("own cell")).collect(),
            up: cells.iter().map(|c| at(c, -1, 0)).collect(),
            down: cells.iter().map(|c| at(c, 1, 0)).collect(),
            left: cells.iter().map(|c| at(c, 0, -1)).collect(),
            right: cells.iter().map(|c| at(c, 0, 1)).collect(),
        }
    }

    /// Range of entries allowed at cell `k` by its filled neighbours
    /// (0 marks an empty cell).
    #[inline]
    fn bounds(&self, k: usize, buf: &[usize], max: usize) -> (usize, usize) {
        let get = |n: Option<usize>| n.map(|i| buf[i]).filter(|&e| e != 0);
        let mut lo = 1;
        let mut hi = max;
        if let Some(e) = get(self.up[k]) {
            lo = lo.max(e + 1);
        }
        if let Some(e) = get(self.left[k]) {
            lo = lo.max(e);
        }
        if let Some(e) = get(self.down[k]) {
            hi = hi.min(e - 1);
        }
        if let Some(e) = get(self.right[k]) {
            hi = hi.min(e);
        }
        (lo, hi)
    }
}

/// `B(W)_Y^Z[order]` with entries in `1..=max_entry`, `W` the shape of
/// `order`. Sorted by row-major entries; empty when `|Y| + |W| != |Z|`.
///
/// Cells are filled in `order`, so the reading word grows one letter at a
/// time and the box-addition condition prunes every partial filling.
pub fn glr_lr_tableaux(y: &Partition, z: &Partition, order: &AdmissibleOrder, max_entry: usize) -> Vec<Tableau> {
    let w = order.shape();
    if y.size() + w.size() != z.size() || !z.contains(y) {
        return Vec::new();
    }
    struct Ctx<'a> {
        fill: OrderedFill,
        z: &'a Partition,
        max: usize,
    }
    fn go(ctx: &Ctx, depth: usize, buf: &mut [usize], rows: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if depth == ctx.fill.visit.len() {
            out.push(buf.to_vec());
            return;
        }
        let k = ctx.fill.visit[depth];
        let (lo, hi) = ctx.fill.bounds(k, buf, ctx.max);
        for j in lo..=hi {
            if j > ctx.z.num_rows() {
                break;
            }
            if rows.get(j - 1).copied().unwrap_or(0) >= ctx.z.row_len(j) {
                continue;
            }
            let before = rows.len();
            if !push_box(rows, j) {
                continue;
            }
            buf[k] = j;
            go(ctx, depth + 1, buf, rows, out);
            buf[k] = 0;
            if rows.len() > before {
                rows.pop();
            } else {
                rows[j - 1] -= 1;
            }
        }
    }
    let ctx = Ctx { fill: OrderedFill::new(order), z, max: max_entry };
    let mut raw = Vec::new();
    go(&ctx, 0, &mut vec![0; w.size()], &mut y.rows().to_vec(), &mut raw);
    raw.sort();
    raw.into_iter().map(|e| Tableau::from_entries(w.clone(), e).expect("sized to shape")).collect()
}

/// `LR(Y,W)^Z[order]`, `order` being on `Z/Y`. Sorted by row-major entries;
/// empty when `Y ⊄ Z` or `|Y| + |W| != |Z|`.
///
/// The search tracks letter multiplicities directly: every prefix of the
/// reading keeps `#i >= #(i+1)` and never exceeds the content `W`.
pub fn glmn_lr_tableaux(y: &Partition, w: &Partition, z: &Partition, order: &AdmissibleOrder) -> Vec<Tableau> {
    if !z.contains(y) || y.size() + w.size() != z.size() {
        return Vec::new();
    }
    let shape = SkewShape::new(z.clone(), y.clone()).expect("checked containment");
    assert_eq!(order.shape(), &shape, "order must be on Z/Y");
    fn go(
        fill: &OrderedFill,
        w: &Partition,
        depth: usize,
        buf: &mut [usize],
        counts: &mut [usize],
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == fill.visit.len() {
            out.push(buf.to_vec());
            return;
        }
        let k = fill.visit[depth];
        let (lo, hi) = fill.bounds(k, buf, w.num_rows());
        for letter in lo..=hi {
            let i = letter - 1;
            if counts[i] + 1 > w.row_len(letter) || (i > 0 && counts[i] + 1 > counts[i - 1]) {
                continue;
            }
            counts[i] += 1;
            buf[k] = letter;
            go(fill, w, depth + 1, buf, counts, out);
            buf[k] = 0;
            counts[i] -= 1;
        }
    }
    let fill = OrderedFill::new(order);
    let mut raw = Vec::new();
    go(&fill, w, 0, &mut vec![0; shape.size()], &mut vec![0; w.num_rows()], &mut raw);
    raw.sort();
    raw.into_iter().map(|e| Tableau::from_entries(shape.clone(), e).expect("sized to shape")).collect()
}

/// `Φ(f)_{ij} = f_1(i,j)`: the row of each image, written into the domain.
pub fn phi(p: &Picture) -> Tableau {
    let entries = p.forward().iter().map(|c| c.row).collect();
    Tableau::from_entries(p.domain().clone(), entries).expect("one image per domain cell")
}

/// [`phi`] with its postcondition checked: the result must lie in
/// `B(W)_Y^Z[a_prime]`, where the picture goes `W -> Z/Y`.
pub fn phi_checked(p: &Picture, y: &Partition, z: &Partition, a_prime: &AdmissibleOrder) -> Result<Tableau> {
    let t = phi(p);
    if !is_glr_lr_tableau(&t, y, z, a_prime)? {
        return Err(Error::Contract(format!("Φ(f) = {:?} is not in B(W)_Y^Z", t.rows())));
    }
    Ok(t)
}

/// `Ψ(T)(i,j) = (T_ij, Y_{T_ij} + p(T; i,j))`, a picture `W -> Z/Y`.
///
/// Fails when the images do not form a bijection onto `Z/Y`, which happens
/// exactly when `T` is outside `B(W)_Y^Z`.
pub fn psi(t: &Tableau, y: &Partition, z: &Partition) -> Result<Picture> {
    let target = SkewShape::new(z.clone(), y.clone())?;
    let ps = t.p_indices()?;
    let forward = t.entries().iter().zip(ps).map(|(&e, p)| Cell { row: e, col: y.row_len(e) + p }).collect();
    Picture::from_forward(t.shape().clone(), target, forward)
        .map_err(|e| Error::Contract(format!("Ψ(T) is not a picture onto Z/Y: {e}")))
}

/// [`psi`] with its postcondition checked: the result must be an
/// `(a, a_prime)`-admissible picture.
pub fn psi_checked(
    t: &Tableau,
    y: &Partition,
    z: &Partition,
    a: &AdmissibleOrder,
    a_prime: &AdmissibleOrder,
) -> Result<Picture> {
    let f = psi(t, y, z)?;
    if !is_admissible_picture(&f, a, a_prime)? {
        return Err(Error::Contract("Ψ(T) is not an admissible picture".into()));
    }
    Ok(f)
}

/// `Φ̃(f)_{ij} = f_1(i,j)` for pictures `Z/Y -> W`.
pub fn phi_tilde(p: &Picture) -> Tableau {
    phi(p)
}

/// `Ψ̃(Q)(i,j) = (Q_ij, p(Q; i,j))`, a picture `Z/Y -> W`. This is `Ψ` with
/// an empty first diagram and `W` in the role of the outer diagram.
pub fn psi_tilde(q: &Tableau, w: &Partition) -> Result<Picture> {
    psi(q, &Partition::empty(), w)
}

/// `Φ̂ = Φ ∘ Ω ∘ Ψ̃`: each box of `Q` at `(i,j)` becomes a box with entry `i`
/// at `(Q_ij, p(Q; i,j))`.
pub fn phi_hat(q: &Tableau, w: &Partition) -> Result<Tableau> {
    Ok(phi(&omega(&psi_tilde(q, w)?)))
}

/// The two Littlewood-Richardson numbers of a triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrCoefficient {
    /// `c_{Y,W}^Z`, counted on the `gl(r)` side
    pub c: usize,
    /// `N_{Y,W}^Z`, counted on the `gl(m,n)` side
    pub n_super: usize,
}

impl LrCoefficient {
    pub fn agree(&self) -> bool {
        self.c == self.n_super
    }
}

/// `r = max(#rows W, #rows Z)`, the rank used on the `gl(r)` side.
pub fn glr_rank(w: &Partition, z: &Partition) -> usize {
    w.num_rows().max(z.num_rows())
}

/// `c_{Y,W}^Z` and `N_{Y,W}^Z` using Middle-Eastern readings.
pub fn lr_coefficient(y: &Partition, w: &Partition, z: &Partition, m: usize, n: usize) -> Result<LrCoefficient> {
    lr_coefficient_with_order(y, w, z, m, n, &OrderSpec::MiddleEastern)
}

/// As [`lr_coefficient`], reading with `spec` on both `W` and `Z/Y`.
pub fn lr_coefficient_with_order(
    y: &Partition,
    w: &Partition,
    z: &Partition,
    m: usize,
    n: usize,
    spec: &OrderSpec,
) -> Result<LrCoefficient> {
    for d in [y, w, z] {
        if !d.is_hook(m, n) {
            return Err(Error::NotHook { shape: d.clone(), m, n });
        }
    }
    if y.size() + w.size() != z.size() || !z.contains(y) {
        return Ok(LrCoefficient { c: 0, n_super: 0 });
    }
    let w_shape = SkewShape::straight(w.clone());
    let skew = SkewShape::new(z.clone(), y.clone())?;
    let c = glr_lr_tableaux(y, z, &spec.realize(&w_shape)?, glr_rank(w, z)).len();
    let n_super = glmn_lr_tableaux(y, w, z, &spec.realize(&skew)?).len();
    Ok(LrCoefficient { c, n_super })
}

/// Convenience: the Middle-Eastern order on `Z/Y`.
pub fn skew_me(y: &Partition, z: &Partition) -> Result<AdmissibleOrder> {
    Ok(middle_eastern(&SkewShape::new(z.clone(), y.clone())?))
}
