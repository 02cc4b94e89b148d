use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::linalg::{dot, Matrix};

type GenSet = BTreeSet<usize>;

#[derive(Clone, Debug)]
struct Face {
    gens: GenSet,
    dim: usize,
}

fn face_dim(gens: &Matrix, set: &GenSet) -> usize {
    let idx: Vec<usize> = set.iter().copied().collect();
    gens.select_rows(&idx).rank()
}

/// Keeps the faces not strictly contained in another one, deduplicated.
fn maximal(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by(|a, b| b.gens.len().cmp(&a.gens.len()).then_with(|| a.gens.cmp(&b.gens)));
    let mut out: Vec<Face> = Vec::new();
    for f in faces {
        if !out.iter().any(|g| f.gens.is_subset(&g.gens)) {
            out.push(f);
        }
    }
    out
}

/// Heights `h_j` of the monomial ideals `(x_1, ..., x_j)` for the rows of
/// `gens`, which must be the extreme rays of the full-dimensional pointed
/// cone with support forms `forms`.
///
/// Tracks the faces maximal among those avoiding `x_1, ..., x_j`; the
/// height is the least codimension among them.
pub fn hsop_heights(gens: &Matrix, forms: &Matrix) -> Result<Vec<usize>> {
    let d = gens.ncols();
    if gens.rank() < d {
        return Err(Error::NotFullDimensional);
    }
    let n = gens.nrows();
    let facets: Vec<GenSet> = forms
        .rows()
        .map(|f| (0..n).filter(|&i| dot(f, gens.row(i)).is_zero()).collect())
        .collect();
    for x in 0..n {
        if facets.iter().all(|f| f.contains(&x)) {
            return Err(Error::NotPointed);
        }
    }
    // facets still useful for intersections
    let mut live: Vec<usize> = (0..facets.len()).collect();
    let mut faces: Vec<Face> = facets
        .iter()
        .map(|g| Face {
            gens: g.clone(),
            dim: d - 1,
        })
        .collect();
    let mut m = d;
    let mut h_prev = 0;
    let mut seen = GenSet::new();
    let mut heights = Vec::with_capacity(n);
    for j in 0..n {
        seen.insert(j);
        let (g1, g2): (Vec<Face>, Vec<Face>) = faces.into_iter().partition(|f| !f.gens.contains(&j));
        let bump = match g1.iter().map(|f| f.dim).max() {
            Some(top) => top < m,
            None => true,
        };
        let h = if bump {
            m -= 1;
            h_prev + 1
        } else {
            h_prev
        };
        heights.push(h);
        h_prev = h;

        live.retain(|&l| !facets[l].is_subset(&seen));
        let mut cut: Vec<Face> = Vec::new();
        for &l in live.iter().filter(|&&l| !facets[l].contains(&j)) {
            for g in &g2 {
                let common: GenSet = g.gens.intersection(&facets[l]).copied().collect();
                if !cut.iter().any(|c| c.gens == common) {
                    cut.push(Face {
                        dim: face_dim(gens, &common),
                        gens: common,
                    });
                }
            }
        }
        let mut next = g1;
        next.extend(cut);
        if next.is_empty() {
            next.push(Face {
                gens: GenSet::new(),
                dim: 0,
            });
        }
        faces = maximal(next);
        debug_assert_eq!(h, d - faces.iter().map(|f| f.dim).max().unwrap_or(0));
    }
    Ok(heights)
}

/// Degrees of the homogeneous system of parameters built from the extreme
/// rays with the given heights and degrees.
///
/// With `ℓ` the first index where the heights stall, `θ_i = x_i` for
/// `i ≤ ℓ`; past it, `θ_i` combines powers of `x_{ℓ+1}, ..., x_{j_i}`,
/// `j_i` being the first index of height `i`.
pub fn hsop_degrees(heights: &[usize], degrees: &[u64]) -> Vec<u64> {
    assert_eq!(heights.len(), degrees.len());
    let n = heights.len();
    let Some(&d) = heights.last() else {
        return Vec::new();
    };
    let ell = (1..n).find(|&i| heights[i - 1] == heights[i]).unwrap_or(n);
    (1..=d)
        .map(|i| {
            if i <= ell {
                degrees[i - 1]
            } else {
                let j = heights.iter().position(|&h| h == i).expect("heights reach every value") + 1;
                degrees[ell..j].iter().fold(1, |acc, &g| super::poly::lcm(acc, g))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Matrix {
        // degrees 1, 2, 3, 4 under (1, -2, 3)
        Matrix::from_i64(&[&[0, 1, 1], &[1, 1, 1], &[0, 0, 1], &[1, 0, 1]])
    }

    fn forms_of(gens: &Matrix) -> Matrix {
        crate::cone::dualize(gens.ncols(), gens).forms
    }

    #[test]
    fn square_cone() {
        let g = square();
        let h = hsop_heights(&g, &forms_of(&g)).unwrap();
        assert_eq!(h, vec![1, 1, 2, 3]);
        assert_eq!(hsop_degrees(&h, &[1, 2, 3, 4]), vec![1, 6, 12]);

        let g = g.select_rows(&[1, 2, 0, 3]);
        let h = hsop_heights(&g, &forms_of(&g)).unwrap();
        assert_eq!(h, vec![1, 2, 2, 3]);
        assert_eq!(hsop_degrees(&h, &[2, 3, 1, 4]), vec![2, 3, 4]);
    }

    #[test]
    fn simplicial_heights_count_up() {
        let g = Matrix::from_i64(&[&[1, 2], &[2, 1]]);
        let h = hsop_heights(&g, &forms_of(&g)).unwrap();
        assert_eq!(h, vec![1, 2]);
        assert_eq!(hsop_degrees(&h, &[3, 3]), vec![3, 3]);

        let g = Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(hsop_heights(&g, &forms_of(&g)).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn ray() {
        let g = Matrix::from_i64(&[&[2]]);
        assert_eq!(hsop_heights(&g, &forms_of(&g)).unwrap(), vec![1]);
    }

    #[test]
    fn redundant_generator_is_dropped() {
        // diamond with a redundant generator
        let g = Matrix::from_i64(&[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1], &[1, 1, 2]]);
        let forms = forms_of(&g);
        let ext = crate::cone::extreme_ray_indices(&g, &forms, &Matrix::zeros(0, 3));
        let g = g.select_rows(&ext);
        let h = hsop_heights(&g, &forms).unwrap();
        assert_eq!(h, vec![1, 1, 2, 3]);
    }
}
