//! Verification sweeps over families of triples `(Y, W, Z)`.
//!
//! Each check enumerates both sides of a bijection independently and then
//! pushes every element through the maps, so a report only says `true` when
//! the enumerations agree elementwise.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::crystal::{verify_decomposition_glmn, verify_decomposition_glr, DecompositionReport, TensorWord};
use crate::diagram::{Partition, SkewShape};
use crate::error::Result;
use crate::exec::{self, Execution};
use crate::lr::{glmn_lr_tableaux, glr_lr_tableaux, glr_rank, phi, phi_tilde, psi, psi_tilde};
use crate::picture::{enumerate_pictures, is_admissible_picture};
use crate::reading::{is_lattice_permutation, AdmissibleOrder, OrderSpec};
use crate::tableau::Tableau;

/// Diagrams `(Y, W, Z)` with `|Y| + |W| = |Z|`. `Y` need not lie in `Z`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub y: Partition,
    pub w: Partition,
    pub z: Partition,
}

impl Triple {
    pub fn is_skew(&self) -> bool {
        self.z.contains(&self.y)
    }
}

/// All triples with `|Z| <= max_size` whose three diagrams satisfy `keep`.
pub fn triples(max_size: usize, keep: impl Fn(&Partition) -> bool) -> Vec<Triple> {
    let mut out = Vec::new();
    for zs in 0..=max_size {
        let zz: Vec<Partition> = Partition::all_of_size(zs).into_iter().filter(&keep).collect();
        for ys in 0..=zs {
            let yy: Vec<Partition> = Partition::all_of_size(ys).into_iter().filter(&keep).collect();
            let ww: Vec<Partition> = Partition::all_of_size(zs - ys).into_iter().filter(&keep).collect();
            for z in &zz {
                for y in &yy {
                    for w in &ww {
                        out.push(Triple { y: y.clone(), w: w.clone(), z: z.clone() });
                    }
                }
            }
        }
    }
    out
}

/// Triples of `(m,n)`-hook diagrams.
pub fn hook_triples(m: usize, n: usize, max_size: usize) -> Vec<Triple> {
    triples(max_size, |p| p.is_hook(m, n))
}

/// One line of a verification report: a triple checked under one order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleReport {
    pub y: Partition,
    pub w: Partition,
    pub z: Partition,
    pub m: usize,
    pub n: usize,
    pub order: String,
    /// `|B(W)_Y^Z[A]|`
    pub c: usize,
    /// `|LR(Y,W)^Z[A]|`
    pub n_super: usize,
    /// `|P(W, Z/Y; A, A)|`
    pub pictures: usize,
    /// `|P(Z/Y, W; A, A)|`
    pub pictures_tilde: usize,
    /// `Φ∘Ψ = id`, `Ψ∘Φ = id` and the same for the tilde pair
    pub roundtrip_ok: bool,
    /// both LR sets equal their Middle-Eastern counterparts
    pub order_independent: bool,
    /// `LR(Y,W)^Z[A] = B(Z/Y)_∅^W[A]`
    pub set_identity_ok: bool,
}

impl TripleReport {
    pub fn coefficients_agree(&self) -> bool {
        self.c == self.n_super && self.c == self.pictures && self.c == self.pictures_tilde
    }

    pub fn all_ok(&self) -> bool {
        self.coefficients_agree() && self.roundtrip_ok && self.order_independent && self.set_identity_ok
    }
}

/// Elementwise check of `Φ: P(W, Z/Y; A, A') <-> B(W)_Y^Z[A'] :Ψ`, with
/// `a` on `Z/Y` and `a_prime` on `W` (which may be skew). Returns the two
/// cardinalities and whether every round trip closed.
pub fn glr_roundtrip(
    y: &Partition,
    z: &Partition,
    a: &AdmissibleOrder,
    a_prime: &AdmissibleOrder,
    max_entry: usize,
) -> Result<(usize, usize, bool)> {
    let w = a_prime.shape();
    let skew = a.shape();
    let tableaux = glr_lr_tableaux(y, z, a_prime, max_entry);
    let pictures = enumerate_pictures(w, skew, a, a_prime);
    let mut ok = tableaux.len() == pictures.len();
    for f in &pictures {
        let t = phi(f);
        ok &= tableaux.binary_search(&t).is_ok();
        ok &= psi(&t, y, z).ok().as_ref() == Some(f);
    }
    for t in &tableaux {
        match psi(t, y, z) {
            Ok(f) => {
                ok &= is_admissible_picture(&f, a, a_prime)?;
                ok &= &phi(&f) == t;
            }
            Err(_) => ok = false,
        }
    }
    Ok((tableaux.len(), pictures.len(), ok))
}

/// Elementwise check of `Φ̃: P(Z/Y, W; A, A') <-> LR(Y,W)^Z[A'] :Ψ̃`, with
/// `a` on `W` and `a_prime` on `Z/Y`.
pub fn glmn_roundtrip(
    y: &Partition,
    w: &Partition,
    z: &Partition,
    a: &AdmissibleOrder,
    a_prime: &AdmissibleOrder,
) -> Result<(Vec<Tableau>, usize, bool)> {
    let tableaux = glmn_lr_tableaux(y, w, z, a_prime);
    let pictures = enumerate_pictures(a_prime.shape(), a.shape(), a, a_prime);
    let mut ok = tableaux.len() == pictures.len();
    for f in &pictures {
        let q = phi_tilde(f);
        ok &= tableaux.binary_search(&q).is_ok();
        ok &= psi_tilde(&q, w).ok().as_ref() == Some(f);
    }
    for q in &tableaux {
        match psi_tilde(q, w) {
            Ok(f) => {
                ok &= is_admissible_picture(&f, a, a_prime)?;
                ok &= &phi_tilde(&f) == q;
            }
            Err(_) => ok = false,
        }
    }
    let n = pictures.len();
    Ok((tableaux, n, ok))
}

/// Run every check on one triple, once per order spec. The spec is realized
/// separately on `W` and on `Z/Y`.
pub fn check_triple(t: &Triple, m: usize, n: usize, orders: &[OrderSpec]) -> Result<Vec<TripleReport>> {
    let blank = |order: &OrderSpec| TripleReport {
        y: t.y.clone(),
        w: t.w.clone(),
        z: t.z.clone(),
        m,
        n,
        order: order.to_string(),
        c: 0,
        n_super: 0,
        pictures: 0,
        pictures_tilde: 0,
        roundtrip_ok: true,
        order_independent: true,
        set_identity_ok: true,
    };
    if !t.is_skew() || t.y.size() + t.w.size() != t.z.size() {
        return Ok(orders.iter().map(blank).collect());
    }
    let w_shape = SkewShape::straight(t.w.clone());
    let skew = SkewShape::new(t.z.clone(), t.y.clone())?;
    let r = glr_rank(&t.w, &t.z);

    let me_w = OrderSpec::MiddleEastern.realize(&w_shape)?;
    let me_skew = OrderSpec::MiddleEastern.realize(&skew)?;
    let b_me = glr_lr_tableaux(&t.y, &t.z, &me_w, r);
    let lr_me = glmn_lr_tableaux(&t.y, &t.w, &t.z, &me_skew);

    let mut out = Vec::with_capacity(orders.len());
    for spec in orders {
        let on_w = spec.realize(&w_shape)?;
        let on_skew = spec.realize(&skew)?;
        let (c, pictures, ok_glr) = glr_roundtrip(&t.y, &t.z, &on_skew, &on_w, r)?;
        let (lr, pictures_tilde, ok_glmn) = glmn_roundtrip(&t.y, &t.w, &t.z, &on_w, &on_skew)?;
        let b = glr_lr_tableaux(&t.y, &t.z, &on_w, r);
        let via_empty = glr_lr_tableaux(&Partition::empty(), &t.w, &on_skew, r);
        out.push(TripleReport {
            c,
            n_super: lr.len(),
            pictures,
            pictures_tilde,
            roundtrip_ok: ok_glr && ok_glmn,
            order_independent: b == b_me && lr == lr_me,
            set_identity_ok: lr == via_empty,
            ..blank(spec)
        });
    }
    Ok(out)
}

/// [`check_triple`] over many triples; output follows input order.
pub fn sweep(
    triples: &[Triple],
    m: usize,
    n: usize,
    orders: &[OrderSpec],
    exec: Execution,
) -> Result<Vec<TripleReport>> {
    let per: Vec<Result<Vec<TripleReport>>> = exec::map_collect(triples, exec, |t| check_triple(t, m, n, orders));
    let mut out = Vec::new();
    for r in per {
        out.extend(r?);
    }
    Ok(out)
}

/// Straight `Y`, `Z` and skew `W` with `|Y| + |W| = |Z|` and `Y ⊆ Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewTriple {
    pub y: Partition,
    pub w: SkewShape,
    pub z: Partition,
}

/// Skew `W` inside the `box_rows x box_cols` box with `1 <= |W| <= max_w`,
/// `|Y| <= max_y`, and every `Z ⊇ Y` of the right size.
pub fn skew_triples(box_rows: usize, box_cols: usize, max_w: usize, max_y: usize) -> Vec<SkewTriple> {
    let mut out = Vec::new();
    for w in SkewShape::all_in_box(box_rows, box_cols) {
        if w.size() == 0 || w.size() > max_w {
            continue;
        }
        for y in Partition::all_up_to(max_y) {
            for z in Partition::all_of_size(y.size() + w.size()) {
                if z.contains(&y) {
                    out.push(SkewTriple { y: y.clone(), w: w.clone(), z });
                }
            }
        }
    }
    out
}

/// Result of the `Φ/Ψ` round trip for one skew triple and order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewReport {
    pub y: Partition,
    pub w: SkewShape,
    pub z: Partition,
    pub order: String,
    pub tableaux: usize,
    pub pictures: usize,
    pub roundtrip_ok: bool,
}

pub fn check_skew_triple(t: &SkewTriple, orders: &[OrderSpec]) -> Result<Vec<SkewReport>> {
    let skew = SkewShape::new(t.z.clone(), t.y.clone())?;
    let r = t.z.num_rows().max(t.w.num_rows());
    orders
        .iter()
        .map(|spec| {
            let (tableaux, pictures, ok) = glr_roundtrip(&t.y, &t.z, &spec.realize(&skew)?, &spec.realize(&t.w)?, r)?;
            Ok(SkewReport {
                y: t.y.clone(),
                w: t.w.clone(),
                z: t.z.clone(),
                order: spec.to_string(),
                tableaux,
                pictures,
                roundtrip_ok: ok,
            })
        })
        .collect()
}

pub fn skew_sweep(triples: &[SkewTriple], orders: &[OrderSpec], exec: Execution) -> Result<Vec<SkewReport>> {
    let per = exec::map_collect(triples, exec, |t| check_skew_triple(t, orders));
    let mut out = Vec::new();
    for r in per {
        out.extend(r?);
    }
    Ok(out)
}

/// A decomposition report tagged with its inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub y: Partition,
    pub w: Partition,
    #[serde(flatten)]
    pub report: DecompositionReport,
}

fn pairs(max_size: usize, keep: impl Fn(&Partition) -> bool) -> Vec<(Partition, Partition)> {
    let ps: Vec<Partition> = Partition::all_up_to(max_size).into_iter().filter(keep).collect();
    ps.iter().flat_map(|y| ps.iter().map(move |w| (y.clone(), w.clone()))).collect()
}

/// `gl(r)` decomposition for all `Y, W` with at most `r` rows and size at most `max_size`.
pub fn decomposition_glr_sweep(max_size: usize, r: usize, exec: Execution) -> Result<Vec<PairReport>> {
    let todo = pairs(max_size, |p| p.num_rows() <= r);
    exec::map_collect(&todo, exec, |(y, w)| {
        Ok(PairReport { y: y.clone(), w: w.clone(), report: verify_decomposition_glr(y, w, r)? })
    })
    .into_iter()
    .collect()
}

/// `gl(m,n)` decomposition for all hook `Y, W` of size at most `max_size`.
pub fn decomposition_glmn_sweep(max_size: usize, m: usize, n: usize, exec: Execution) -> Result<Vec<PairReport>> {
    let todo = pairs(max_size, |p| p.is_hook(m, n));
    exec::map_collect(&todo, exec, |(y, w)| {
        Ok(PairReport { y: y.clone(), w: w.clone(), report: verify_decomposition_glmn(y, w, m, n)? })
    })
    .into_iter()
    .collect()
}

/// Outcome of the random lattice-word comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub words: usize,
    pub lattice: usize,
    pub mismatches: Vec<Vec<usize>>,
}

/// For `count` seeded random words over `1..=alphabet` of length at most
/// `max_len`, compare the lattice test with `∅[w]` being a Young diagram and
/// with `w` being highest weight.
pub fn lattice_characterization(count: usize, max_len: usize, alphabet: usize, seed: u64) -> LatticeReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lattice = 0;
    let mut mismatches = Vec::new();
    for _ in 0..count {
        let len = rng.gen_range(0..=max_len);
        let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=alphabet)).collect();
        let a = is_lattice_permutation(&letters);
        let b = Partition::empty().add_boxes(&letters).is_ok();
        let c = TensorWord::new(letters.clone(), alphabet).expect("letters in range").is_highest_weight();
        lattice += a as usize;
        if a != b || a != c {
            mismatches.push(letters);
        }
    }
    LatticeReport { words: count, lattice, mismatches }
}
