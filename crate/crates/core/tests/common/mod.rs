//! Brute-force oracles over small machine integers, independent of the
//! library's linear algebra.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use latk::linalg::{Integer, Matrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type V = Vec<i64>;

pub fn to_matrix(rows: &[V]) -> Matrix {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Matrix::from_i64(&refs)
}

pub fn to_i64(v: &[Integer]) -> V {
    v.iter().map(|x| x.to_i64().expect("small")).collect()
}

pub fn ints(v: &[i64]) -> Vec<Integer> {
    v.iter().map(|&x| Integer::from(x)).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn det(m: &[V]) -> i128 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0] as i128,
        _ => (0..n)
            .map(|j| {
                let minor: Vec<V> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| *x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] as i128 * det(&minor)
            })
            .sum(),
    }
}

pub fn rank(rows: &[V]) -> usize {
    // fraction-free elimination in i128
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let (f, g) = (a[i][c], a[r][c]);
                let pivot = a[r].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot) {
                    *x = *x * g - p * f;
                }
                let gcd = a[i].iter().fold(0i128, |acc, &x| num_gcd(acc, x.abs()));
                if gcd > 1 {
                    a[i].iter_mut().for_each(|x| *x /= gcd);
                }
            }
        }
        r += 1;
    }
    r
}

fn num_gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Cofactor normal of `d - 1` vectors in `Z^d`.
pub fn normal(rows: &[V], d: usize) -> V {
    (0..d)
        .map(|j| {
            let minor: Vec<V> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| *x).collect())
                .collect();
            let s = if (j + d - 1).is_multiple_of(2) { 1 } else { -1 };
            (s * det(&minor)) as i64
        })
        .collect()
}

/// Facets of a full-dimensional pointed cone, as sets of the rays on them.
pub fn facets(rays: &[V]) -> Vec<(V, BTreeSet<usize>)> {
    let d = rays[0].len();
    if d == 1 {
        return vec![(vec![1], BTreeSet::new())];
    }
    let mut out: Vec<(V, BTreeSet<usize>)> = Vec::new();
    for s in subsets(rays.len(), d - 1) {
        let rows: Vec<V> = s.iter().map(|&i| rays[i].clone()).collect();
        if rank(&rows) < d - 1 {
            continue;
        }
        let mut n = normal(&rows, d);
        let vals: Vec<i64> = rays.iter().map(|r| dot(&n, r)).collect();
        if vals.iter().all(|&v| v <= 0) {
            n.iter_mut().for_each(|x| *x = -*x);
        } else if !vals.iter().all(|&v| v >= 0) {
            continue;
        }
        let on: BTreeSet<usize> = (0..rays.len()).filter(|&i| dot(&n, &rays[i]) == 0).collect();
        if !out.iter().any(|(_, f)| *f == on) {
            out.push((n, on));
        }
    }
    out
}

/// `x ∈ cone(rays)`, decided over all simplicial subcones by Cramer's rule.
pub fn in_cone(rays: &[V], x: &[i64]) -> bool {
    let d = x.len();
    if x.iter().all(|&c| c == 0) {
        return true;
    }
    for s in subsets(rays.len(), d) {
        let m: Vec<V> = s.iter().map(|&i| rays[i].clone()).collect();
        let dm = det(&m);
        if dm == 0 {
            continue;
        }
        let ok = (0..d).all(|i| {
            let mut mi = m.clone();
            mi[i] = x.to_vec();
            let di = det(&mi);
            di == 0 || (di > 0) == (dm > 0)
        });
        if ok {
            return true;
        }
    }
    false
}

/// Support forms of `cone(gens)`, from the facet oracle.
pub fn support_forms(gens: &[V]) -> Vec<V> {
    facets(gens).into_iter().map(|(n, _)| primitive(&n)).collect()
}

pub fn inside(forms: &[V], x: &[i64]) -> bool {
    forms.iter().all(|f| dot(f, x) >= 0)
}

/// Nonnegative vectors with coordinate sum at most `bound`.
pub fn simplex_box(d: usize, bound: i64) -> Vec<V> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        let mut next = Vec::new();
        for v in &out {
            let used: i64 = v.iter().sum();
            for c in 0..=bound - used {
                let mut w = v.clone();
                w.push(c);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// A random full-dimensional cone in the nonnegative orthant with entries
/// at most 7 and a grading with entries in 1..=3, so every lattice point of
/// degree `k` has coordinate sum at most `k`.
#[derive(Clone, Debug)]
pub struct RandomCone {
    pub gens: Vec<V>,
    pub grading: V,
}

pub fn random_cone(rng: &mut ChaCha8Rng, max_dim: usize, max_gens: usize) -> RandomCone {
    loop {
        let d = rng.gen_range(1..=max_dim);
        let n = rng.gen_range(d..=max_gens);
        let mut gens: Vec<V> = Vec::new();
        for _ in 0..n {
            let v: V = (0..d).map(|_| rng.gen_range(0..=7)).collect();
            if v.iter().any(|&x| x != 0) && !gens.contains(&v) {
                gens.push(v);
            }
        }
        if gens.is_empty() || rank(&gens) < d {
            continue;
        }
        let grading = (0..d).map(|_| rng.gen_range(1..=3)).collect();
        return RandomCone { gens, grading };
    }
}

pub fn primitive(v: &[i64]) -> V {
    let g = v.iter().fold(0i64, |a, &x| gcd(a, x.abs()));
    if g <= 1 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Primitive extreme rays of `cone(gens)`, deduplicated.
pub fn extreme_rays(gens: &[V]) -> Vec<V> {
    let fs = facets(gens);
    let d = gens[0].len();
    let mut out: Vec<V> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let on: Vec<V> = fs
            .iter()
            .filter(|(_, f)| f.contains(&i))
            .map(|(n, _)| n.clone())
            .collect();
        let extreme = if d == 1 { true } else { rank(&on) == d - 1 };
        let p = primitive(g);
        if extreme && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Counts lattice points of the cone by degree, for degrees `0..=max_deg`.
pub fn count_by_degree(c: &RandomCone, denom: i64, max_deg: i64) -> Vec<i64> {
    let d = c.grading.len();
    let forms = support_forms(&c.gens);
    let mut counts = vec![0i64; max_deg as usize + 1];
    for x in simplex_box(d, max_deg * denom) {
        let deg = dot(&c.grading, &x);
        if deg % denom != 0 || deg / denom > max_deg {
            continue;
        }
        if inside(&forms, &x) {
            counts[(deg / denom) as usize] += 1;
        }
    }
    counts
}

/// Every point of the cone in the box is a sum of basis elements.
pub fn generates_box(gens: &[V], basis: &[V], bound: i64) -> bool {
    let d = gens[0].len();
    let forms = support_forms(gens);
    let pts: Vec<V> = simplex_box(d, bound)
        .into_iter()
        .filter(|x| inside(&forms, x))
        .collect();
    let mut reach: HashSet<V> = HashSet::new();
    reach.insert(vec![0; d]);
    let mut sorted = pts.clone();
    sorted.sort_by_key(|v| v.iter().sum::<i64>());
    for x in &sorted {
        if reach.contains(x) {
            continue;
        }
        let ok = basis.iter().any(|h| {
            let y: V = x.iter().zip(h).map(|(a, b)| a - b).collect();
            y.iter().all(|&c| c >= 0) && reach.contains(&y)
        });
        if ok {
            reach.insert(x.clone());
        }
    }
    pts.iter().all(|x| reach.contains(x))
}

/// `y` is not a sum of two nonzero lattice points of the cone (orthant case).
pub fn irreducible(gens: &[V], y: &[i64]) -> bool {
    let d = y.len();
    let forms = support_forms(gens);
    let ranges: Vec<Vec<i64>> = y.iter().map(|&c| (0..=c).collect()).collect();
    let mut parts: Vec<V> = vec![Vec::new()];
    for r in ranges.iter().take(d) {
        parts = parts
            .into_iter()
            .flat_map(|p| {
                r.iter().map(move |&c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    !parts.iter().any(|a| {
        let b: V = y.iter().zip(a).map(|(u, v)| u - v).collect();
        a.iter().any(|&c| c != 0) && b.iter().any(|&c| c != 0) && inside(&forms, a) && inside(&forms, &b)
    })
}

/// Heights by exhaustive face enumeration: faces are intersections of
/// facet sets; `h_j = d - max dim` over faces avoiding the first `j` rays.
pub fn heights_by_faces(rays: &[V]) -> Vec<usize> {
    let d = rays[0].len();
    let fs: Vec<BTreeSet<usize>> = facets(rays).into_iter().map(|(_, f)| f).collect();
    let mut faces: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    faces.insert((0..rays.len()).collect());
    let mut frontier: Vec<BTreeSet<usize>> = faces.iter().cloned().collect();
    while let Some(f) = frontier.pop() {
        for g in &fs {
            let h: BTreeSet<usize> = f.intersection(g).copied().collect();
            if faces.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    (1..=rays.len())
        .map(|j| {
            let best = faces
                .iter()
                .filter(|f| f.iter().all(|&i| i >= j))
                .map(|f| {
                    let rows: Vec<V> = f.iter().map(|&i| rays[i].clone()).collect();
                    if rows.is_empty() {
                        0
                    } else {
                        rank(&rows)
                    }
                })
                .max()
                .unwrap_or(0);
            d - best
        })
        .collect()
}

/// Power series coefficients of `t^shift · num / Π (1 - t^g)` up to `max_deg`.
pub fn expand(num: &[Integer], shift: i64, den: &[u64], max_deg: i64) -> Vec<i64> {
    let len = (max_deg - shift + 1).max(0) as usize;
    let mut c = vec![0i64; len];
    for (i, x) in num.iter().enumerate().take(len) {
        c[i] = x.to_i64().unwrap();
    }
    for &g in den {
        for i in g as usize..len {
            c[i] += c[i - g as usize];
        }
    }
    (0..=max_deg)
        .map(|k| if k < shift { 0 } else { c[(k - shift) as usize] })
        .collect()
}
