//! PA-standard maps and admissible pictures.
//!
//! A map `f: X -> Y` between cell sets is PA-standard for an admissible order
//! `A` on `Y` when `u <=_P v` implies `f(u) <=_A f(v)`. An `(A, A')`-admissible
//! picture is a bijection that is PA-standard and whose inverse is
//! PA'-standard.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagram::{Cell, SkewShape};
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::reading::AdmissibleOrder;

/// A bijection between the cells of two skew shapes, stored in both
/// directions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Picture {
    domain: SkewShape,
    codomain: SkewShape,
    /// image of each domain cell, in row-major domain order
    forward: Vec<Cell>,
    /// preimage of each codomain cell, in row-major codomain order
    backward: Vec<Cell>,
}

impl Picture {
    /// Build from the images of the domain cells listed in row-major order.
    pub fn from_forward(domain: SkewShape, codomain: SkewShape, forward: Vec<Cell>) -> Result<Self> {
        if domain.size() != codomain.size() {
            return Err(Error::NotBijective(format!(
                "|{domain}| = {} but |{codomain}| = {}",
                domain.size(),
                codomain.size()
            )));
        }
        if forward.len() != domain.size() {
            return Err(Error::NotBijective(format!(
                "{} images given for {} domain cells",
                forward.len(),
                domain.size()
            )));
        }
        let dom_cells = domain.cells();
        let mut backward: Vec<Option<Cell>> = vec![None; codomain.size()];
        for (&src, &dst) in dom_cells.iter().zip(&forward) {
            let k = codomain
                .index_of(dst)
                .ok_or_else(|| Error::NotBijective(format!("image {dst} of {src} is not in {codomain}")))?;
            if let Some(prev) = backward[k].replace(src) {
                return Err(Error::NotBijective(format!("{prev} and {src} both map to {dst}")));
            }
        }
        let backward = backward.into_iter().map(|c| c.expect("counted")).collect();
        Ok(Picture { domain, codomain, forward, backward })
    }

    /// Build from explicit `(source, image)` pairs in any order.
    pub fn from_pairs(
        domain: SkewShape,
        codomain: SkewShape,
        pairs: impl IntoIterator<Item = (Cell, Cell)>,
    ) -> Result<Self> {
        let mut forward: Vec<Option<Cell>> = vec![None; domain.size()];
        for (src, dst) in pairs {
            let k = domain.index_of(src).ok_or(Error::CellNotInShape(src))?;
            if forward[k].replace(dst).is_some() {
                return Err(Error::NotBijective(format!("{src} mapped twice")));
            }
        }
        let forward = forward
            .into_iter()
            .zip(domain.cells())
            .map(|(d, c)| d.ok_or_else(|| Error::NotBijective(format!("{c} has no image"))))
            .collect::<Result<Vec<_>>>()?;
        Picture::from_forward(domain, codomain, forward)
    }

    pub fn domain(&self) -> &SkewShape {
        &self.domain
    }

    pub fn codomain(&self) -> &SkewShape {
        &self.codomain
    }

    pub fn forward(&self) -> &[Cell] {
        &self.forward
    }

    pub fn backward(&self) -> &[Cell] {
        &self.backward
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn apply(&self, c: Cell) -> Option<Cell> {
        self.domain.index_of(c).map(|k| self.forward[k])
    }

    pub fn apply_inverse(&self, c: Cell) -> Option<Cell> {
        self.codomain.index_of(c).map(|k| self.backward[k])
    }

    /// `(source, image)` pairs in row-major domain order.
    pub fn pairs(&self) -> impl Iterator<Item = (Cell, Cell)> + '_ {
        self.domain.cells().into_iter().zip(self.forward.iter().copied())
    }

    fn inverse_pairs(&self) -> impl Iterator<Item = (Cell, Cell)> + '_ {
        self.codomain.cells().into_iter().zip(self.backward.iter().copied())
    }
}

/// `Ω: f ↦ f⁻¹`.
pub fn omega(p: &Picture) -> Picture {
    Picture {
        domain: p.codomain.clone(),
        codomain: p.domain.clone(),
        forward: p.backward.clone(),
        backward: p.forward.clone(),
    }
}

/// Whether the map given by `pairs` is PA-standard for `target`.
/// Errors when an image is not a cell of the target order's shape.
pub fn is_pa_standard(pairs: &[(Cell, Cell)], target: &AdmissibleOrder) -> Result<bool> {
    let ranked = pairs
        .iter()
        .map(|&(src, dst)| target.rank_of(dst).map(|r| (src, r)).ok_or(Error::CellNotInShape(dst)))
        .collect::<Result<Vec<_>>>()?;
    for &(u, ru) in &ranked {
        for &(v, rv) in &ranked {
            if u != v && u.le_p(v) && ru > rv {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `p ∈ P(X, Y; A, A')` with `a` on the codomain `Y` and `a_prime` on the
/// domain `X`.
pub fn is_admissible_picture(p: &Picture, a: &AdmissibleOrder, a_prime: &AdmissibleOrder) -> Result<bool> {
    if a.shape() != p.codomain() || a_prime.shape() != p.domain() {
        return Err(Error::ShapeMismatch(format!(
            "picture {} -> {} checked with orders on {} and {}",
            p.domain(),
            p.codomain(),
            a_prime.shape(),
            a.shape()
        )));
    }
    let fwd: Vec<_> = p.pairs().collect();
    let bwd: Vec<_> = p.inverse_pairs().collect();
    Ok(is_pa_standard(&fwd, a)? && is_pa_standard(&bwd, a_prime)?)
}

/// Precomputed comparability data for the backtracking search.
struct Search {
    /// domain cells in `A'` order (indices into row-major domain cells)
    visit: Vec<usize>,
    dom_lt: Vec<Vec<bool>>,
    cod_lt: Vec<Vec<bool>>,
    rank_a: Vec<usize>,
    rank_a_prime: Vec<usize>,
}

impl Search {
    fn new(x: &SkewShape, y: &SkewShape, a: &AdmissibleOrder, a_prime: &AdmissibleOrder) -> Self {
        let lt = |cells: &[Cell]| -> Vec<Vec<bool>> {
            cells.iter().map(|&u| cells.iter().map(|&v| u != v && u.le_p(v)).collect()).collect()
        };
        let dom = x.cells();
        let cod = y.cells();
        let visit = a_prime.sequence().iter().map(|&c| x.index_of(c).expect("order on domain")).collect();
        Search {
            visit,
            dom_lt: lt(&dom),
            cod_lt: lt(&cod),
            rank_a: a.ranks_row_major().to_vec(),
            rank_a_prime: a_prime.ranks_row_major().to_vec(),
        }
    }

    /// Whether `u -> y` is consistent with every assignment made so far.
    #[inline]
    fn compatible(&self, u: usize, y: usize, image: &[usize]) -> bool {
        for &u2 in &self.visit {
            let y2 = image[u2];
            if y2 == usize::MAX {
                continue;
            }
            if self.dom_lt[u][u2] && self.rank_a[y] > self.rank_a[y2] {
                return false;
            }
            if self.dom_lt[u2][u] && self.rank_a[y2] > self.rank_a[y] {
                return false;
            }
            if self.cod_lt[y][y2] && self.rank_a_prime[u] > self.rank_a_prime[u2] {
                return false;
            }
            if self.cod_lt[y2][y] && self.rank_a_prime[u2] > self.rank_a_prime[u] {
                return false;
            }
        }
        true
    }

    fn run(&self, depth: usize, image: &mut [usize], used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if depth == self.visit.len() {
            out.push(image.to_vec());
            return;
        }
        let u = self.visit[depth];
        for y in 0..used.len() {
            if used[y] || !self.compatible(u, y, image) {
                continue;
            }
            used[y] = true;
            image[u] = y;
            self.run(depth + 1, image, used, out);
            image[u] = usize::MAX;
            used[y] = false;
        }
    }
}

/// All `(A, A')`-admissible pictures `x -> y` (`a` on `y`, `a_prime` on `x`),
/// sorted by their row-major image lists.
pub fn enumerate_pictures(
    x: &SkewShape,
    y: &SkewShape,
    a: &AdmissibleOrder,
    a_prime: &AdmissibleOrder,
) -> Vec<Picture> {
    enumerate_pictures_with(x, y, a, a_prime, Execution::Sequential)
}

/// As [`enumerate_pictures`], fanning out over the image of the first
/// visited cell when `exec` is parallel.
pub fn enumerate_pictures_with(
    x: &SkewShape,
    y: &SkewShape,
    a: &AdmissibleOrder,
    a_prime: &AdmissibleOrder,
    exec: Execution,
) -> Vec<Picture> {
    if x.size() != y.size() {
        return Vec::new();
    }
    assert_eq!(a.shape(), y, "order A must be on the codomain");
    assert_eq!(a_prime.shape(), x, "order A' must be on the domain");
    let n = x.size();
    let search = Search::new(x, y, a, a_prime);
    let raw: Vec<Vec<usize>> = if n == 0 {
        vec![Vec::new()]
    } else {
        let first = search.visit[0];
        let roots: Vec<usize> = (0..n).collect();
        exec::map_collect(&roots, exec, |&y0| {
            let mut image = vec![usize::MAX; n];
            let mut used = vec![false; n];
            image[first] = y0;
            used[y0] = true;
            let mut out = Vec::new();
            search.run(1, &mut image, &mut used, &mut out);
            out
        })
        .into_iter()
        .flatten()
        .collect()
    };
    let cod = y.cells();
    let dom = x.cells();
    let mut pics: Vec<Picture> = raw
        .into_iter()
        .map(|image| {
            let forward: Vec<Cell> = image.iter().map(|&k| cod[k]).collect();
            let mut backward = vec![Cell { row: 1, col: 1 }; n];
            for (src, &k) in image.iter().enumerate() {
                backward[k] = dom[src];
            }
            Picture { domain: x.clone(), codomain: y.clone(), forward, backward }
        })
        .collect();
    pics.sort_by(|p, q| p.forward.cmp(&q.forward));
    pics
}

#[derive(Serialize, Deserialize)]
struct RawPicture {
    domain: SkewShape,
    codomain: SkewShape,
    map: Vec<(Cell, Cell)>,
}

impl Serialize for Picture {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RawPicture { domain: self.domain.clone(), codomain: self.codomain.clone(), map: self.pairs().collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Picture {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawPicture::deserialize(d)?;
        Picture::from_pairs(raw.domain, raw.codomain, raw.map).map_err(serde::de::Error::custom)
    }
}
