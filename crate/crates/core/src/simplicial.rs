//! Evaluation of a single simplicial cone: lattice points of its
//! fundamental parallelotope, local Hilbert basis candidates and the
//! Stanley components feeding the Hilbert series.

use crate::error::{Error, Result};
use crate::linalg::{dot, smith_normal_form, Integer, Matrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelotopeSet {
    /// Index of the simplex in its triangulation.
    pub simplex: usize,
    pub points: Vec<Vec<Integer>>,
}

/// Lattice points `Σ a_i v_i` with `a_i ∈ [0,1)`, or `a_i ∈ (0,1]` for the
/// excluded facets, one per residue class of `Z^k` modulo the ray lattice.
pub fn parallelotope_points(rays: &Matrix, excluded: &[bool]) -> Result<Vec<Vec<Integer>>> {
    let k = rays.ncols();
    assert_eq!(rays.nrows(), k, "a simplex has as many rays as the dimension");
    assert_eq!(excluded.len(), k);
    if k == 0 {
        return Ok(vec![Vec::new()]);
    }
    let det = rays.determinant();
    if det.is_zero() {
        return Err(Error::SingularSimplex);
    }
    let d = det.abs();
    let mut adj = rays.adjugate();
    if det.is_negative() {
        for i in 0..k {
            adj.negate_row(i);
        }
    }
    // Z^k / Z^k·V ≅ ⊕ Z/s_i via x ↦ x·W; representatives c·W^{-1}
    let snf = smith_normal_form(rays);
    let moduli: Vec<Integer> = snf.diag.clone();
    let mut points = Vec::new();
    let mut c = vec![Integer::ZERO; k];
    loop {
        let x = snf.right_inverse.left_mul_vec(&c);
        let n = adj.left_mul_vec(&x);
        let mut p = vec![Integer::ZERO; k];
        for (i, ni) in n.iter().enumerate() {
            let mut r = ni.mod_floor(&d);
            if r.is_zero() && excluded[i] {
                r = d.clone();
            }
            if !r.is_zero() {
                for (pj, vj) in p.iter_mut().zip(rays.row(i)) {
                    *pj += &(&r * vj);
                }
            }
        }
        for pj in p.iter_mut() {
            *pj = pj.div_exact(&d);
        }
        points.push(p);

        // odometer over Π [0, s_i)
        let mut i = 0;
        loop {
            if i == k {
                return Ok(points);
            }
            c[i] += &Integer::ONE;
            if c[i] < moduli[i] {
                break;
            }
            c[i] = Integer::ZERO;
            i += 1;
        }
    }
}

/// Is `x` in the closed simplicial cone with rays `rays` (given the
/// sign-corrected adjugate)?
fn in_simplex(adj: &Matrix, x: &[Integer]) -> bool {
    adj.left_mul_vec(x).iter().all(|a| !a.is_negative())
}

fn positive_adjugate(rays: &Matrix) -> Matrix {
    let mut adj = rays.adjugate();
    if rays.determinant().is_negative() {
        for i in 0..adj.nrows() {
            adj.negate_row(i);
        }
    }
    adj
}

/// Parallelotope points together with the rays, minus everything that is
/// reducible inside the simplicial monoid. Contains the Hilbert basis of the
/// simplicial monoid.
pub fn local_candidates(points: &[Vec<Integer>], rays: &Matrix) -> Vec<Vec<Integer>> {
    let adj = positive_adjugate(rays);
    let mut cands: Vec<Vec<Integer>> = Vec::new();
    for p in points.iter().map(Vec::as_slice).chain(rays.rows()) {
        if p.iter().all(Integer::is_zero) || cands.iter().any(|c| c == p) {
            continue;
        }
        cands.push(p.to_vec());
    }
    let reducible = |y: &Vec<Integer>| {
        cands.iter().any(|x| {
            x != y && {
                let diff: Vec<Integer> = y.iter().zip(x).map(|(a, b)| a - b).collect();
                in_simplex(&adj, &diff)
            }
        })
    };
    let keep: Vec<bool> = cands.iter().map(|y| !reducible(y)).collect();
    cands
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

/// `offset + Σ Z₊ rays`, with the data needed for its series term
/// `t^{deg offset} / Π (1 - t^{deg ray})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyComponent {
    pub offset: Vec<Integer>,
    /// Indices of the rays in the generator list of the triangulation.
    pub rays: Vec<usize>,
    pub offset_degree: Integer,
    pub ray_degrees: Vec<Integer>,
}

/// One component per parallelotope point of the simplex spanned by
/// `generators[ray_indices]`.
pub fn stanley_components(
    generators: &Matrix,
    ray_indices: &[usize],
    points: &[Vec<Integer>],
    grading: &[Integer],
) -> Result<Vec<StanleyComponent>> {
    let ray_degrees: Vec<Integer> = ray_indices.iter().map(|&i| dot(grading, generators.row(i))).collect();
    if let Some(pos) = ray_degrees.iter().position(|d| !d.is_positive()) {
        let v: Vec<String> = generators.row(ray_indices[pos]).iter().map(|x| x.to_string()).collect();
        return Err(Error::NonPositiveDegree(v.join(" ")));
    }
    Ok(points
        .iter()
        .map(|p| StanleyComponent {
            offset: p.clone(),
            rays: ray_indices.to_vec(),
            offset_degree: dot(grading, p),
            ray_degrees: ray_degrees.clone(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ivec;

    fn sorted(mut v: Vec<Vec<Integer>>) -> Vec<Vec<Integer>> {
        v.sort();
        v
    }

    fn pts(rows: &[&[i64]]) -> Vec<Vec<Integer>> {
        sorted(rows.iter().map(|r| ivec(r)).collect())
    }

    #[test]
    fn half_open_box_of_two_rays() {
        let rays = Matrix::from_i64(&[&[2, 1], &[1, 3]]);
        let p = parallelotope_points(&rays, &[false, false]).unwrap();
        assert_eq!(sorted(p), pts(&[&[0, 0], &[1, 1], &[1, 2], &[2, 2], &[2, 3]]));
    }

    #[test]
    fn exclusions_shift_points() {
        let rays = Matrix::identity(2);
        assert_eq!(parallelotope_points(&rays, &[false, false]).unwrap(), pts(&[&[0, 0]]));
        assert_eq!(parallelotope_points(&rays, &[true, true]).unwrap(), pts(&[&[1, 1]]));

        let rays = Matrix::from_i64(&[&[1, 0], &[1, 2]]);
        let p = parallelotope_points(&rays, &[false, true]).unwrap();
        assert_eq!(sorted(p), pts(&[&[1, 1], &[1, 2]]));
    }

    #[test]
    fn singular_simplex() {
        let rays = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(
            parallelotope_points(&rays, &[false, false]).unwrap_err(),
            Error::SingularSimplex
        );
    }

    #[test]
    fn local_reduction() {
        let rays = Matrix::from_i64(&[&[2, 1], &[1, 3]]);
        let p = parallelotope_points(&rays, &[false, false]).unwrap();
        let c = local_candidates(&p, &rays);
        assert_eq!(sorted(c), pts(&[&[1, 1], &[1, 2], &[1, 3], &[2, 1]]));

        let rays = Matrix::identity(2);
        let p = parallelotope_points(&rays, &[true, false]).unwrap();
        assert_eq!(sorted(local_candidates(&p, &rays)), pts(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn components_of_simplex() {
        let gens = Matrix::from_i64(&[&[1, 2], &[2, 1]]);
        let p = parallelotope_points(&gens, &[false, false]).unwrap();
        let comps = stanley_components(&gens, &[0, 1], &p, &ivec(&[1, 1])).unwrap();
        let mut degs: Vec<Integer> = comps.iter().map(|c| c.offset_degree.clone()).collect();
        degs.sort();
        assert_eq!(degs, ivec(&[0, 2, 4]));
        assert!(comps.iter().all(|c| c.ray_degrees == ivec(&[3, 3])));
        assert!(stanley_components(&gens, &[0, 1], &p, &ivec(&[1, -1])).is_err());
    }
}
