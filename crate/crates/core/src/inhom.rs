//! Polyhedra through their homogenization: level splitting, module rank
//! and the lattice-point series.

use std::collections::BTreeSet;

use crate::cone::CoordinateMap;
use crate::error::{Error, Result};
use crate::linalg::{dot, hermite_normal_form, saturation, Integer, Matrix};
use crate::simplicial::parallelotope_points;
use crate::triangulation::lex_triangulation;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LevelSplit {
    /// Elements of level 1: the module generators over the recession monoid.
    pub module_generators: Vec<Vec<Integer>>,
    /// Elements of level 0: the Hilbert basis of the recession monoid.
    pub recession: Vec<Vec<Integer>>,
}

/// Splits a Hilbert basis of the homogenized monoid by level; anything of
/// level above 1 is dropped.
pub fn split_levels(hilbert_basis: &[Vec<Integer>], level: &[Integer]) -> LevelSplit {
    let mut out = LevelSplit::default();
    for v in hilbert_basis {
        let l = dot(level, v);
        if l.is_zero() {
            out.recession.push(v.clone());
        } else if l.is_one() {
            out.module_generators.push(v.clone());
        }
    }
    out
}

/// Number of residue classes of the module generators modulo the group
/// generated by the recession monoid.
pub fn module_rank_by_residues(module_generators: &[Vec<Integer>], recession: &[Vec<Integer>]) -> Result<usize> {
    let Some(first) = module_generators.first() else {
        return Err(Error::EmptyModule);
    };
    if recession.is_empty() {
        let distinct: BTreeSet<&Vec<Integer>> = module_generators.iter().collect();
        return Ok(distinct.len());
    }
    let h = hermite_normal_form(&Matrix::from_rows(first.len(), recession.to_vec()));
    let classes: BTreeSet<Vec<Integer>> = module_generators.iter().map(|y| h.reduce(y)).collect();
    Ok(classes.len())
}

/// Lattice points of level 1 in the pointed cone generated by `gens`, all
/// of which have positive level.
fn count_level_one(gens: &Matrix, level: &[Integer]) -> Result<usize> {
    let tri = lex_triangulation(gens)?;
    let mut count = 0;
    for s in &tri.simplices {
        let rays = gens.select_rows(&s.gens);
        for p in parallelotope_points(&rays, &s.excluded)? {
            let l = dot(level, &p);
            if l.is_one() {
                count += 1;
            } else if l.is_zero() {
                count += rays.rows().filter(|v| dot(level, v).is_one()).count();
            }
        }
    }
    Ok(count)
}

/// Module rank as the number of lattice points in the projection of the
/// polyhedron along its recession space.
///
/// `rays` are the extreme rays of the pointed homogenized cone, `level` the
/// dehomogenizing form, both in the coordinates of its lattice.
pub fn module_rank_by_polytope(rays: &Matrix, level: &[Integer]) -> Result<usize> {
    let k = rays.ncols();
    let (flat, lifted): (Vec<&[Integer]>, Vec<&[Integer]>) = rays.rows().partition(|r| dot(level, r).is_zero());
    if lifted.is_empty() {
        return Err(Error::EmptyModule);
    }
    let recession = Matrix::from_rows(k, flat.iter().map(|r| r.to_vec()).collect());
    let q = if recession.is_empty() {
        CoordinateMap::identity(k)
    } else {
        CoordinateMap::quotient(k, &saturation(&recession))
    };
    let kq = q.working_dim();
    let image = Matrix::from_rows(
        kq,
        lifted
            .iter()
            .map(|r| q.to_working(r).expect("quotient maps are integral"))
            .collect(),
    );
    let count = count_level_one(&image, &q.form_to_working(level))?;
    if count == 0 {
        return Err(Error::EmptyModule);
    }
    Ok(count)
}

fn small(x: &Integer) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Arithmetic(format!("degree {x} out of range")))
}

/// Series terms of the level-1 points of `offset + Σ Z₊ rays`: an offset
/// of level 1 keeps the level-0 rays, an offset of level 0 moves up along
/// each level-1 ray, anything else contributes nothing.
pub fn inhom_terms(
    offset: &[Integer],
    rays: &Matrix,
    level: &[Integer],
    grading: &[Integer],
) -> Result<Vec<(i64, Vec<u64>)>> {
    let mut flat = Vec::new();
    let mut lifted = Vec::new();
    for r in rays.rows() {
        let l = dot(level, r);
        if l.is_zero() {
            let d = dot(grading, r);
            if !d.is_positive() {
                let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                return Err(Error::NonPositiveDegree(s.join(" ")));
            }
            flat.push(small(&d)? as u64);
        } else if l.is_one() {
            lifted.push(r);
        }
    }
    let deg = small(&dot(grading, offset))?;
    let lev = dot(level, offset);
    Ok(if lev.is_one() {
        vec![(deg, flat)]
    } else if lev.is_zero() {
        lifted
            .into_iter()
            .map(|v| Ok((deg + small(&dot(grading, v))?, flat.clone())))
            .collect::<Result<_>>()?
    } else {
        Vec::new()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ivec;

    // homogenized polyhedron -1/2 <= y <= 3/2, x >= y - 3/2
    fn strip_rays() -> Matrix {
        Matrix::from_i64(&[&[1, 0, 0], &[-4, -1, 2], &[0, 3, 2]])
    }

    #[test]
    fn residues_and_polytope_agree() {
        let level = ivec(&[0, 0, 1]);
        let gens = vec![ivec(&[-1, 0, 1]), ivec(&[0, 1, 1])];
        let rec = vec![ivec(&[1, 0, 0])];
        assert_eq!(module_rank_by_residues(&gens, &rec).unwrap(), 2);
        assert_eq!(module_rank_by_polytope(&strip_rays(), &level).unwrap(), 2);
    }

    #[test]
    fn polytope_rank_counts_points() {
        // segment [0, 3] at level 1
        let rays = Matrix::from_i64(&[&[0, 1], &[3, 1]]);
        assert_eq!(module_rank_by_polytope(&rays, &ivec(&[0, 1])).unwrap(), 4);
        let flat = Matrix::from_i64(&[&[1, 0]]);
        assert_eq!(
            module_rank_by_polytope(&flat, &ivec(&[0, 1])).unwrap_err(),
            Error::EmptyModule
        );
        assert_eq!(module_rank_by_residues(&[], &[]).unwrap_err(), Error::EmptyModule);
    }

    #[test]
    fn split() {
        let hb = vec![ivec(&[1, 0, 0]), ivec(&[-1, 0, 1]), ivec(&[0, 1, 1]), ivec(&[1, 1, 2])];
        let s = split_levels(&hb, &ivec(&[0, 0, 1]));
        assert_eq!(s.recession, vec![ivec(&[1, 0, 0])]);
        assert_eq!(s.module_generators.len(), 2);
    }

    #[test]
    fn terms_by_offset_level() {
        let rays = Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 1]]);
        let level = ivec(&[0, 0, 1]);
        let g = ivec(&[1, 0, 0]);
        assert_eq!(
            inhom_terms(&ivec(&[-1, 0, 1]), &rays, &level, &g).unwrap(),
            vec![(-1, vec![1])]
        );
        assert_eq!(
            inhom_terms(&ivec(&[0, 0, 0]), &rays, &level, &g).unwrap(),
            vec![(0, vec![1])]
        );
        assert!(inhom_terms(&ivec(&[0, 1, 2]), &rays, &level, &g).unwrap().is_empty());
        assert!(inhom_terms(&ivec(&[0, 0, 0]), &rays, &level, &ivec(&[-1, 0, 0])).is_err());
    }
}
