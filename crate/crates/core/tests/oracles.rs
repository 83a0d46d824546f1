//! Brute-force oracles for the pruned enumerators. Each oracle is written
//! from the definitions alone and shares no search code with the library.

use std::collections::BTreeSet;

use lrpic::diagram::{Cell, Partition, SkewShape};
use lrpic::lr::{glmn_lr_tableaux, glr_lr_tableaux, lr_coefficient};
use lrpic::picture::{enumerate_pictures, is_admissible_picture, Picture};
use lrpic::reading::{far_eastern, is_admissible, middle_eastern, random_admissible_order, reading, AdmissibleOrder};
use lrpic::tableau::{enumerate_glmn, enumerate_ssyt, Entry, Tableau};

/// Every word of length `len` over `alphabet`, in lexicographic order.
fn all_words<T: Copy>(alphabet: &[T], len: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

fn neighbours<E: Copy>(cells: &[Cell], entries: &[E]) -> Vec<(E, E, bool)> {
    // (west/north entry, east/south entry, is_vertical pair)
    let mut out = Vec::new();
    for (i, a) in cells.iter().enumerate() {
        for (j, b) in cells.iter().enumerate() {
            if b.row == a.row && b.col == a.col + 1 {
                out.push((entries[i], entries[j], false));
            }
            if b.col == a.col && b.row == a.row + 1 {
                out.push((entries[i], entries[j], true));
            }
        }
    }
    out
}

fn brute_ssyt(shape: &SkewShape, k: usize) -> Vec<Vec<usize>> {
    let cells = shape.cells();
    let alphabet: Vec<usize> = (1..=k).collect();
    all_words(&alphabet, cells.len())
        .into_iter()
        .filter(|w| neighbours(&cells, w).iter().all(|&(a, b, v)| if v { a < b } else { a <= b }))
        .collect()
}

fn brute_glmn(shape: &SkewShape, m: usize, n: usize) -> Vec<Vec<Entry>> {
    let cells = shape.cells();
    let mut alphabet: Vec<Entry> = (1..=m).map(Entry::Unbarred).collect();
    alphabet.extend((1..=n).map(Entry::Barred));
    all_words(&alphabet, cells.len())
        .into_iter()
        .filter(|w| {
            neighbours(&cells, w).iter().all(|&(a, b, vertical)| {
                a <= b && (a != b || (vertical && a.is_barred()) || (!vertical && !a.is_barred()))
            })
        })
        .collect()
}

fn small_shapes() -> Vec<SkewShape> {
    SkewShape::all_in_box(3, 3).into_iter().filter(|s| s.size() <= 5).collect()
}

#[test]
fn ssyt_enumeration_matches_brute_force() {
    for shape in small_shapes() {
        let got: Vec<Vec<usize>> = enumerate_ssyt(&shape, 3).iter().map(|t| t.entries().to_vec()).collect();
        assert_eq!(got, brute_ssyt(&shape, 3), "shape {shape}");
    }
}

#[test]
fn ssyt_counts_match_hook_content_formula() {
    // |SSYT(λ, ≤k)| = Π (k + c(u)) / h(u)
    for lambda in Partition::all_up_to(6) {
        for k in 1..=4usize {
            let mut num: i64 = 1;
            let mut den: i64 = 1;
            for i in 1..=lambda.num_rows() {
                for j in 1..=lambda.row_len(i) {
                    let arm = lambda.row_len(i) - j;
                    let leg = (i + 1..=lambda.num_rows()).filter(|&r| lambda.row_len(r) >= j).count();
                    num *= k as i64 + j as i64 - i as i64;
                    den *= (arm + leg + 1) as i64;
                }
            }
            let expected = (num / den) as usize;
            assert_eq!(enumerate_ssyt(&SkewShape::straight(lambda.clone()), k).len(), expected, "{lambda} k={k}");
        }
    }
}

#[test]
fn glmn_enumeration_matches_brute_force() {
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        for shape in small_shapes().into_iter().filter(|s| s.size() <= 4) {
            let got: Vec<Vec<Entry>> = enumerate_glmn(&shape, m, n).iter().map(|t| t.entries().to_vec()).collect();
            assert_eq!(got, brute_glmn(&shape, m, n), "shape {shape} gl({m},{n})");
        }
    }
}

#[test]
fn glmn_tableaux_exist_exactly_on_hooks() {
    for lambda in Partition::all_up_to(7) {
        for (m, n) in [(0, 1), (1, 0), (1, 1), (2, 1), (1, 2), (2, 2)] {
            let nonempty = !enumerate_glmn(&SkewShape::straight(lambda.clone()), m, n).is_empty();
            assert_eq!(nonempty, lambda.is_hook(m, n), "{lambda} gl({m},{n})");
        }
    }
}

#[test]
fn p_index_ranks_equal_entries_from_the_right() {
    for shape in small_shapes() {
        for t in enumerate_ssyt(&shape, 3) {
            let ps = t.p_indices().unwrap();
            let cells = shape.cells();
            for e in 1..=3 {
                let mut same: Vec<(usize, usize)> =
                    cells.iter().zip(&ps).filter(|(c, _)| t.get(**c) == Some(e)).map(|(c, &q)| (c.col, q)).collect();
                same.sort_by_key(|s| std::cmp::Reverse(s.0));
                let ranks: Vec<usize> = same.iter().map(|&(_, q)| q).collect();
                assert_eq!(ranks, (1..=same.len()).collect::<Vec<_>>(), "{t:?}");
            }
        }
    }
}

#[test]
fn admissible_orders_match_brute_force_definition() {
    for shape in small_shapes().into_iter().filter(|s| s.size() <= 5) {
        let cells = shape.cells();
        let brute: Vec<Vec<Cell>> = permutations(&cells)
            .into_iter()
            .filter(|seq| {
                seq.iter().enumerate().all(|(i, u)| seq[i + 1..].iter().all(|v| !(v.row <= u.row && v.col >= u.col)))
            })
            .collect();
        for seq in permutations(&cells) {
            assert_eq!(is_admissible(&seq, &shape).unwrap(), brute.contains(&seq));
        }
        for s in [middle_eastern(&shape), far_eastern(&shape), random_admissible_order(&shape, 7)] {
            assert!(brute.iter().any(|b| b.as_slice() == s.sequence()));
        }
    }
}

fn brute_pictures(x: &SkewShape, y: &SkewShape, a: &AdmissibleOrder, a_prime: &AdmissibleOrder) -> Vec<Picture> {
    let mut out: Vec<Picture> = permutations(&y.cells())
        .into_iter()
        .map(|fwd| Picture::from_forward(x.clone(), y.clone(), fwd).unwrap())
        .filter(|f| is_admissible_picture(f, a, a_prime).unwrap())
        .collect();
    out.sort_by(|f, g| f.forward().cmp(g.forward()));
    out
}

#[test]
fn picture_enumeration_matches_brute_force() {
    let shapes = small_shapes();
    for x in shapes.iter().filter(|s| s.size() <= 5) {
        for y in shapes.iter().filter(|s| s.size() == x.size()) {
            for (ax, ay) in [(middle_eastern(x), middle_eastern(y)), (far_eastern(x), random_admissible_order(y, 3))] {
                let got = enumerate_pictures(x, y, &ay, &ax);
                assert_eq!(got, brute_pictures(x, y, &ay, &ax), "{x} -> {y}");
            }
        }
    }
}

#[test]
fn glr_lr_enumeration_matches_filter() {
    for z in Partition::all_up_to(6) {
        for y in z.subdiagrams() {
            let size = z.size() - y.size();
            for w in Partition::all_of_size(size) {
                let w_shape = SkewShape::straight(w.clone());
                let r = w.num_rows().max(z.num_rows());
                for order in [middle_eastern(&w_shape), far_eastern(&w_shape)] {
                    let expected: Vec<Tableau> = enumerate_ssyt(&w_shape, r)
                        .into_iter()
                        .filter(|t| {
                            let word = reading(t, &order).unwrap();
                            y.add_boxes(&word).is_ok_and(|g| g == z)
                        })
                        .collect();
                    assert_eq!(glr_lr_tableaux(&y, &z, &order, r), expected, "Y={y} W={w} Z={z}");
                }
            }
        }
    }
}

#[test]
fn glmn_lr_enumeration_matches_filter() {
    for z in Partition::all_up_to(6) {
        for y in z.subdiagrams() {
            let skew = SkewShape::new(z.clone(), y.clone()).unwrap();
            let all = enumerate_ssyt(&skew, skew.size());
            for w in Partition::all_of_size(skew.size()) {
                for order in [middle_eastern(&skew), far_eastern(&skew), random_admissible_order(&skew, 11)] {
                    let expected: Vec<Tableau> = all
                        .iter()
                        .filter(|q| {
                            q.content() == w.rows() && {
                                let word = reading(*q, &order).unwrap();
                                Partition::empty().add_boxes(&word).is_ok()
                            }
                        })
                        .cloned()
                        .collect();
                    assert_eq!(glmn_lr_tableaux(&y, &w, &z, &order), expected, "Y={y} W={w} Z={z}");
                }
            }
        }
    }
}

/// Skew Kostka numbers determine the coefficients: `K_{Z/Y,μ} = Σ_λ c_λ K_{λ,μ}`
/// with `K` unitriangular in dominance order, which refines reverse lex.
#[test]
fn coefficients_match_kostka_inversion() {
    let kostka = |shape: &SkewShape, mu: &Partition| {
        enumerate_ssyt(shape, mu.num_rows()).iter().filter(|t| t.content() == mu.rows()).count() as i64
    };
    for z in Partition::all_up_to(6) {
        for y in z.subdiagrams() {
            let skew = SkewShape::new(z.clone(), y.clone()).unwrap();
            let lambdas = Partition::all_of_size(skew.size()); // decreasing lex
            let mut c: Vec<i64> = Vec::new();
            for (k, mu) in lambdas.iter().enumerate() {
                let mut v = kostka(&skew, mu);
                for (j, lambda) in lambdas[..k].iter().enumerate() {
                    v -= c[j] * kostka(&SkewShape::straight(lambda.clone()), mu);
                }
                c.push(v);
            }
            for (lambda, &expected) in lambdas.iter().zip(&c) {
                let got = lr_coefficient(&y, lambda, &z, 6, 6).unwrap();
                assert_eq!(got.c as i64, expected, "Y={y} W={lambda} Z={z}");
                assert!(got.agree());
            }
        }
    }
}

#[test]
fn coefficients_are_symmetric() {
    for z in Partition::all_up_to(7) {
        let mut seen = BTreeSet::new();
        for y in z.subdiagrams() {
            for w in Partition::all_of_size(z.size() - y.size()) {
                if !seen.insert((y.clone(), w.clone())) {
                    continue;
                }
                let a = lr_coefficient(&y, &w, &z, 7, 7).unwrap();
                let b = lr_coefficient(&w, &y, &z, 7, 7).unwrap();
                assert_eq!(a.c, b.c, "Y={y} W={w} Z={z}");
            }
        }
    }
}
