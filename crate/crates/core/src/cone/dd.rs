//! Double description: conversion between inequalities and generators.
//!
//! Inequalities are inserted one at a time. The current cone is kept as a
//! lineality basis plus extreme rays of the pointed part, together with the
//! set of already inserted inequalities each ray is tight on. New rays are
//! formed only from adjacent pairs, tested combinatorially.

use crate::linalg::{dot, make_primitive, Integer, Matrix};

/// Cone `{x : a·x >= 0 for all rows a}` as lineality basis plus extreme rays.
#[derive(Clone, Debug)]
pub struct Generators {
    pub lineality: Matrix,
    pub rays: Matrix,
}

#[derive(Clone)]
struct Ray {
    v: Vec<Integer>,
    tight: Vec<u64>,
}

fn set_bit(bits: &mut Vec<u64>, i: usize) {
    let w = i / 64;
    if bits.len() <= w {
        bits.resize(w + 1, 0);
    }
    bits[w] |= 1 << (i % 64);
}

fn intersect(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn popcount(a: &[u64]) -> usize {
    a.iter().map(|x| x.count_ones() as usize).sum()
}

fn contains(sup: &[u64], sub: &[u64]) -> bool {
    sub.iter()
        .enumerate()
        .all(|(i, w)| w & !sup.get(i).copied().unwrap_or(0) == 0)
}

/// `p·b - q·a` made primitive, for scalars computed by the caller.
fn combine(a: &[Integer], fa: &Integer, b: &[Integer], fb: &Integer) -> Vec<Integer> {
    let mut v: Vec<Integer> = a.iter().zip(b).map(|(x, y)| fa * x + fb * y).collect();
    make_primitive(&mut v);
    v
}

/// Computes generators of `{x in R^n : rows·x >= 0}`.
pub fn generators_of_inequalities(n: usize, inequalities: &Matrix) -> Generators {
    let mut lineality: Vec<Vec<Integer>> = (0..n)
        .map(|i| {
            let mut e = vec![Integer::ZERO; n];
            e[i] = Integer::ONE;
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();
    let words = inequalities.nrows().div_ceil(64).max(1);
    let mut processed = vec![0u64; words];

    for (idx, a) in inequalities.rows().enumerate() {
        if a.iter().all(Integer::is_zero) {
            continue;
        }
        let pivot = lineality
            .iter()
            .enumerate()
            .filter(|(_, l)| !dot(a, l).is_zero())
            .min_by(|(_, x), (_, y)| dot(a, x).abs().cmp(&dot(a, y).abs()))
            .map(|(i, _)| i);

        if let Some(pi) = pivot {
            let mut p = lineality.swap_remove(pi);
            let mut ap = dot(a, &p);
            if ap.is_negative() {
                p.iter_mut().for_each(|x| *x = -&*x);
                ap = -ap;
            }
            for l in lineality.iter_mut() {
                let al = dot(a, l);
                if !al.is_zero() {
                    *l = combine(l, &ap, &p, &-al);
                }
            }
            for r in rays.iter_mut() {
                let ar = dot(a, &r.v);
                if !ar.is_zero() {
                    r.v = combine(&r.v, &ap, &p, &-ar);
                }
                set_bit(&mut r.tight, idx);
            }
            // p was in the lineality space, so it is tight on every earlier inequality
            let tight = processed.clone();
            set_bit(&mut processed, idx);
            make_primitive(&mut p);
            rays.push(Ray { v: p, tight });
            continue;
        }

        set_bit(&mut processed, idx);
        let values: Vec<Integer> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    set_bit(&mut r.tight, idx);
                }
            }
            continue;
        }
        let pointed_dim = n - lineality.len();
        let mut new_rays: Vec<Ray> = Vec::new();
        for &pi in &pos {
            for &ni in &neg {
                let common = intersect(&rays[pi].tight, &rays[ni].tight);
                if pointed_dim >= 2 && popcount(&common) + 2 < pointed_dim {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .filter(|&k| k != pi && k != ni)
                    .all(|k| !contains(&rays[k].tight, &common));
                if !adjacent {
                    continue;
                }
                let v = combine(&rays[ni].v, &values[pi], &rays[pi].v, &-&values[ni]);
                let mut tight = common;
                tight.resize(words, 0);
                set_bit(&mut tight, idx);
                new_rays.push(Ray { v, tight });
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + new_rays.len());
        for (mut r, v) in rays.into_iter().zip(values) {
            if v.is_negative() {
                continue;
            }
            if v.is_zero() {
                set_bit(&mut r.tight, idx);
            }
            kept.push(r);
        }
        kept.extend(new_rays);
        rays = kept;
    }

    let mut ray_rows: Vec<Vec<Integer>> = rays.into_iter().map(|r| r.v).collect();
    ray_rows.sort();
    ray_rows.dedup();
    Generators {
        lineality: Matrix::from_rows(n, lineality),
        rays: Matrix::from_rows(n, ray_rows),
    }
}

/// Support forms of a cone given by generators.
#[derive(Clone, Debug)]
pub struct Dual {
    /// Irredundant primitive support forms, sorted lexicographically.
    pub forms: Matrix,
    /// Linear forms vanishing on the span of the generators.
    pub equations: Matrix,
}

/// Dualizes `cone(rays)`: returns the support forms, together with equations
/// of the linear span when the cone is not full dimensional.
pub fn dualize(n: usize, rays: &Matrix) -> Dual {
    let g = generators_of_inequalities(n, rays);
    Dual {
        forms: g.rays,
        equations: g.lineality,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(m: &Matrix) -> Vec<Vec<Integer>> {
        let mut r = m.to_rows();
        r.sort();
        r
    }

    #[test]
    fn dualize_examples() {
        let d = dualize(2, &Matrix::from_i64(&[&[1, 2], &[2, 1]]));
        assert_eq!(sorted(&d.forms), sorted(&Matrix::from_i64(&[&[-1, 2], &[2, -1]])));
        assert!(d.equations.is_empty());

        let d = dualize(3, &Matrix::identity(3));
        assert_eq!(sorted(&d.forms), sorted(&Matrix::identity(3)));

        let d = dualize(2, &Matrix::from_i64(&[&[1, 0], &[-1, 0], &[0, 1]]));
        assert_eq!(d.forms, Matrix::from_i64(&[&[0, 1]]));
        assert!(d.equations.is_empty());
    }

    #[test]
    fn halfplane_generators() {
        let g = generators_of_inequalities(2, &Matrix::from_i64(&[&[2, 1]]));
        assert_eq!(g.lineality.nrows(), 1);
        assert_eq!(dot(g.lineality.row(0), &crate::linalg::ivec(&[2, 1])), Integer::ZERO);
        assert_eq!(g.rays.nrows(), 1);
        assert!(dot(g.rays.row(0), &crate::linalg::ivec(&[2, 1])).is_positive());
    }

    #[test]
    fn lower_dimensional_cone_has_equations() {
        let d = dualize(3, &Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(d.equations.nrows(), 1);
        assert_eq!(d.forms.nrows(), 2);
    }

    #[test]
    fn square_cone_facets() {
        let gens = Matrix::from_i64(&[&[0, 1, 1], &[1, 1, 1], &[0, 0, 1], &[1, 0, 1]]);
        let d = dualize(3, &gens);
        assert_eq!(d.forms.nrows(), 4);
        let back = generators_of_inequalities(3, &d.forms);
        assert!(back.lineality.is_empty());
        assert_eq!(sorted(&back.rays), sorted(&gens));
    }
}
