//! Placing (lexicographic) triangulations, bottom decomposition and the
//! half-open exclusions that make a triangulation a disjoint cover.

use num_rational::BigRational;

use crate::cone::dualize;
use crate::error::{Error, Result};
use crate::linalg::{dot, kernel_basis, make_primitive, Integer, Matrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialCone {
    /// Indices into the generator list, ascending.
    pub gens: Vec<usize>,
    pub det: Integer,
    /// `excluded[i]`: the facet opposite `gens[i]` is left out of the cone.
    pub excluded: Vec<bool>,
}

#[derive(Clone, Debug)]
pub struct Triangulation {
    pub generators: Matrix,
    pub simplices: Vec<SimplicialCone>,
    pub detsum: Integer,
}

/// Primitive linear form vanishing on `facet`, positive on `apex`.
fn facet_normal(facet: &[&[Integer]], apex: &[Integer]) -> Vec<Integer> {
    let k = apex.len();
    let m = Matrix::from_rows(k, facet.iter().map(|r| r.to_vec()).collect());
    let ker = kernel_basis(&m);
    debug_assert_eq!(ker.nrows(), 1);
    let mut n = ker.row(0).to_vec();
    if dot(&n, apex).is_negative() {
        n.iter_mut().for_each(|x| *x = -&*x);
    }
    make_primitive(&mut n);
    n
}

fn simplex_matrix(gens: &Matrix, idx: &[usize]) -> Matrix {
    gens.select_rows(idx)
}

struct Boundary {
    verts: Vec<usize>,
    normal: Vec<Integer>,
}

/// Placing triangulation of the cone over the selected generators, in the
/// order given. The selection must span a pointed full-dimensional cone.
fn place(gens: &Matrix, order: &[usize]) -> Vec<Vec<usize>> {
    let k = gens.ncols();
    let mut first = Vec::new();
    let mut acc = Matrix::zeros(0, k);
    for &i in order {
        let mut trial = acc.clone();
        trial.push_row(gens.row(i));
        if trial.rank() > acc.nrows() {
            acc = trial;
            first.push(i);
            if first.len() == k {
                break;
            }
        }
    }
    assert_eq!(first.len(), k, "generators do not span");

    let mut boundary: Vec<Boundary> = (0..k)
        .map(|i| {
            let verts: Vec<usize> = first.iter().copied().filter(|&v| v != first[i]).collect();
            let rows: Vec<&[Integer]> = verts.iter().map(|&v| gens.row(v)).collect();
            Boundary {
                normal: facet_normal(&rows, gens.row(first[i])),
                verts,
            }
        })
        .collect();
    let mut simplices = vec![first.clone()];

    for &x in order {
        if first.contains(&x) {
            continue;
        }
        let xv = gens.row(x);
        let visible: Vec<usize> = (0..boundary.len())
            .filter(|&f| dot(&boundary[f].normal, xv).is_negative())
            .collect();
        if visible.is_empty() {
            continue;
        }
        // candidate facets through x, with the apex opposite them
        let mut ridges: Vec<(Vec<usize>, usize, usize)> = Vec::new();
        for &f in &visible {
            let verts = &boundary[f].verts;
            let mut s = verts.clone();
            s.push(x);
            s.sort_unstable();
            simplices.push(s);
            for &y in verts {
                let mut h: Vec<usize> = verts.iter().copied().filter(|&v| v != y).collect();
                h.push(x);
                h.sort_unstable();
                match ridges.iter_mut().find(|(r, _, _)| *r == h) {
                    Some(entry) => entry.2 += 1,
                    None => ridges.push((h, y, 1)),
                }
            }
        }
        let mut kept: Vec<Boundary> = boundary
            .into_iter()
            .enumerate()
            .filter(|(i, _)| !visible.contains(i))
            .map(|(_, b)| b)
            .collect();
        for (verts, apex, count) in ridges {
            if count == 1 {
                let rows: Vec<&[Integer]> = verts.iter().map(|&v| gens.row(v)).collect();
                kept.push(Boundary {
                    normal: facet_normal(&rows, gens.row(apex)),
                    verts,
                });
            }
        }
        boundary = kept;
    }
    for s in simplices.iter_mut() {
        s.sort_unstable();
    }
    simplices
}

/// Sign of `form` at the order vector `o + ε e_1 + ε² e_2 + ...`.
fn perturbed_sign(form: &[Integer], o: &[Integer]) -> i32 {
    let s = dot(form, o).signum();
    if s != 0 {
        return s;
    }
    form.iter().map(Integer::signum).find(|&s| s != 0).unwrap_or(0)
}

/// Builds the triangulation record, choosing excluded facets by the side of
/// each facet hyperplane the order vector lies on. Facets on the boundary of
/// the cone are never excluded; of two simplices sharing an inner facet
/// exactly one excludes it.
fn with_exclusions(gens: &Matrix, simplices: Vec<Vec<usize>>) -> Triangulation {
    let k = gens.ncols();
    let mut order_vector = vec![Integer::ZERO; k];
    if let Some(s) = simplices.first() {
        for &i in s {
            for (o, x) in order_vector.iter_mut().zip(gens.row(i)) {
                *o += x;
            }
        }
    }
    let mut detsum = Integer::ZERO;
    let mut out = Vec::with_capacity(simplices.len());
    for s in simplices {
        let m = simplex_matrix(gens, &s);
        let det = m.determinant();
        // column i of the adjugate (times sign det) is the normal of facet i
        let adj = m.adjugate();
        let excluded = (0..k)
            .map(|i| {
                let mut normal: Vec<Integer> = (0..k).map(|r| adj[(r, i)].clone()).collect();
                if det.is_negative() {
                    normal.iter_mut().for_each(|x| *x = -&*x);
                }
                perturbed_sign(&normal, &order_vector) < 0
            })
            .collect();
        let det = det.abs();
        detsum += &det;
        out.push(SimplicialCone { gens: s, det, excluded });
    }
    Triangulation {
        generators: gens.clone(),
        simplices: out,
        detsum,
    }
}

fn check_cone(gens: &Matrix) -> Result<Vec<usize>> {
    let k = gens.ncols();
    let nonzero: Vec<usize> = (0..gens.nrows())
        .filter(|&i| gens.row(i).iter().any(|x| !x.is_zero()))
        .collect();
    if k == 0 {
        return Ok(nonzero);
    }
    if nonzero.is_empty() {
        return Err(Error::NotFullDimensional);
    }
    let dual = dualize(k, &gens.select_rows(&nonzero));
    if !dual.equations.is_empty() {
        return Err(Error::NotFullDimensional);
    }
    if !kernel_basis(&dual.forms).is_empty() {
        return Err(Error::NotPointed);
    }
    Ok(nonzero)
}

/// Placing triangulation in the order of the rows of `gens`.
pub fn lex_triangulation(gens: &Matrix) -> Result<Triangulation> {
    let order = check_cone(gens)?;
    if gens.ncols() == 0 {
        return Ok(Triangulation {
            generators: gens.clone(),
            simplices: vec![SimplicialCone {
                gens: Vec::new(),
                det: Integer::ONE,
                excluded: Vec::new(),
            }],
            detsum: Integer::ONE,
        });
    }
    Ok(with_exclusions(gens, place(gens, &order)))
}

/// A facet of the bottom: the generators on it and its affine form
/// `normal·x + constant` (nonnegative on `G`, zero on the facet).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BottomFacet {
    pub gens: Vec<usize>,
    pub normal: Vec<Integer>,
    pub constant: Integer,
}

/// Facets of `conv(G) + R₊z` visible from the origin. With `z = 0` these are
/// the compact facets of the upper convex hull of `G`.
pub fn bottom_facets(gens: &Matrix, z: &[Integer]) -> Result<Vec<BottomFacet>> {
    let nonzero = check_cone(gens)?;
    let k = gens.ncols();
    let mut lifted = Matrix::zeros(0, k + 1);
    for &i in &nonzero {
        let mut v = gens.row(i).to_vec();
        v.push(Integer::ONE);
        lifted.push_row(&v);
    }
    let z_is_zero = z.iter().all(Integer::is_zero);
    if !z_is_zero {
        let mut v = z.to_vec();
        v.push(Integer::ZERO);
        lifted.push_row(&v);
    }
    let dual = dualize(k + 1, &lifted);
    let mut forms: Vec<Vec<Integer>> = dual.forms.to_rows();
    if !dual.equations.is_empty() {
        // all generators on one affine hyperplane: it is the only bottom facet
        debug_assert!(z_is_zero && dual.equations.nrows() == 1);
        let mut eq = dual.equations.row(0).to_vec();
        if !eq[k].is_negative() {
            eq.iter_mut().for_each(|x| *x = -&*x);
        }
        forms = vec![eq];
    }
    let mut out = Vec::new();
    for f in forms {
        let constant = f[k].clone();
        if !constant.is_negative() {
            continue;
        }
        let normal = f[..k].to_vec();
        let on: Vec<usize> = nonzero
            .iter()
            .copied()
            .filter(|&i| (dot(&normal, gens.row(i)) + &constant).is_zero())
            .collect();
        out.push(BottomFacet {
            gens: on,
            normal,
            constant,
        });
    }
    out.sort_by(|a, b| a.gens.cmp(&b.gens));
    Ok(out)
}

/// The first generator spanning an extreme ray; the default roof-removing
/// direction for the bottom decomposition.
pub fn default_roof_direction(gens: &Matrix) -> Option<Vec<Integer>> {
    let k = gens.ncols();
    let nonzero: Vec<usize> = (0..gens.nrows())
        .filter(|&i| gens.row(i).iter().any(|x| !x.is_zero()))
        .collect();
    if nonzero.is_empty() {
        return None;
    }
    let forms = dualize(k, &gens.select_rows(&nonzero)).forms;
    let idx = crate::cone::extreme_ray_indices(&gens.select_rows(&nonzero), &forms, &Matrix::zeros(0, k));
    idx.first().map(|&i| gens.row(nonzero[i]).to_vec())
}

/// Triangulation over the bottom facets, each triangulated by placing in
/// the global generator order.
pub fn bottom_triangulation(gens: &Matrix) -> Result<Triangulation> {
    bottom_triangulation_with(gens, None)
}

pub fn bottom_triangulation_with(gens: &Matrix, z: Option<&[Integer]>) -> Result<Triangulation> {
    if gens.ncols() == 0 {
        return lex_triangulation(gens);
    }
    check_cone(gens)?;
    let z = match z {
        Some(z) => z.to_vec(),
        None => default_roof_direction(gens).expect("nonempty"),
    };
    let facets = bottom_facets(gens, &z)?;
    let mut simplices = Vec::new();
    for f in facets {
        for s in place(gens, &f.gens) {
            if !simplices.contains(&s) {
                simplices.push(s);
            }
        }
    }
    Ok(with_exclusions(gens, simplices))
}

/// Ratio of the largest to the smallest degree of a generator.
pub fn roughness(gens: &Matrix, grading: &[Integer]) -> Result<BigRational> {
    let mut degs = Vec::new();
    for g in gens.rows() {
        if g.iter().all(Integer::is_zero) {
            continue;
        }
        let d = dot(g, grading);
        if !d.is_positive() {
            let s: Vec<String> = g.iter().map(|x| x.to_string()).collect();
            return Err(Error::NonPositiveDegree(s.join(" ")));
        }
        degs.push(d);
    }
    let (Some(max), Some(min)) = (degs.iter().max(), degs.iter().min()) else {
        return Ok(BigRational::from_integer(1.into()));
    };
    Ok(BigRational::new(max.to_bigint(), min.to_bigint()))
}

impl Triangulation {
    /// Barycentric numerators of `x` in simplex `s` (over the simplex determinant).
    pub fn barycentric(&self, s: &SimplicialCone, x: &[Integer]) -> Vec<Integer> {
        let m = simplex_matrix(&self.generators, &s.gens);
        let det = m.determinant();
        let mut a = m.adjugate().left_mul_vec(x);
        if det.is_negative() {
            a.iter_mut().for_each(|v| *v = -&*v);
        }
        a
    }

    /// Indices of the simplices whose half-open cone contains `x`.
    pub fn locate(&self, x: &[Integer]) -> Vec<usize> {
        self.simplices
            .iter()
            .enumerate()
            .filter(|(_, s)| {
                let a = self.barycentric(s, x);
                a.iter()
                    .zip(&s.excluded)
                    .all(|(ai, &ex)| if ex { ai.is_positive() } else { !ai.is_negative() })
            })
            .map(|(i, _)| i)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ivec;

    fn box_points(k: usize, r: i64) -> Vec<Vec<Integer>> {
        let mut pts = vec![vec![]];
        for _ in 0..k {
            pts = pts
                .into_iter()
                .flat_map(|p: Vec<Integer>| {
                    (-r..=r).map(move |c| {
                        let mut q = p.clone();
                        q.push(Integer::from(c));
                        q
                    })
                })
                .collect();
        }
        pts
    }

    fn assert_partition(t: &Triangulation, radius: i64) {
        let k = t.generators.ncols();
        let forms = dualize(k, &t.generators).forms;
        for x in box_points(k, radius) {
            let inside = forms.rows().all(|f| !dot(f, &x).is_negative());
            let hits = t.locate(&x).len();
            assert_eq!(hits, usize::from(inside), "point {x:?}");
        }
    }

    #[test]
    fn simplicial_cone() {
        let t = lex_triangulation(&Matrix::from_i64(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(t.simplices.len(), 1);
        assert_eq!(t.detsum, Integer::ONE);
        assert_eq!(t.simplices[0].excluded, vec![false, false]);

        let t = lex_triangulation(&Matrix::from_i64(&[&[1, 2], &[2, 1]])).unwrap();
        assert_eq!(t.detsum, Integer::from(3));
    }

    #[test]
    fn placing_order_matters() {
        let t = lex_triangulation(&Matrix::from_i64(&[&[1, 0], &[1, 1], &[0, 1]])).unwrap();
        assert_eq!(t.simplices.len(), 2);
        assert_eq!(t.simplices[0].gens, vec![0, 1]);
        assert_eq!(t.simplices[1].gens, vec![1, 2]);
        assert_eq!(t.detsum, Integer::from(2));
        // the second simplex excludes the shared facet spanned by (1,1)
        assert_eq!(t.simplices[1].excluded, vec![false, true]);
        assert_eq!(t.simplices[0].excluded, vec![false, false]);
        assert_partition(&t, 5);
    }

    #[test]
    fn three_dimensional_partition() {
        let gens = Matrix::from_i64(&[&[0, 1, 1], &[1, 1, 1], &[0, 0, 1], &[1, 0, 1], &[1, 2, 3]]);
        let t = lex_triangulation(&gens).unwrap();
        assert_partition(&t, 4);
        let b = bottom_triangulation(&gens).unwrap();
        assert_partition(&b, 4);
        assert!(b.detsum <= t.detsum);
    }

    #[test]
    fn errors() {
        assert_eq!(
            lex_triangulation(&Matrix::from_i64(&[&[1, 0], &[-1, 0], &[0, 1]])).unwrap_err(),
            Error::NotPointed
        );
        assert_eq!(
            lex_triangulation(&Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0]])).unwrap_err(),
            Error::NotFullDimensional
        );
    }

    #[test]
    fn bottom_examples() {
        let g = Matrix::from_i64(&[&[1, 0], &[0, 1], &[1, 1]]);
        let f = bottom_facets(&g, &ivec(&[0, 0])).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].gens, vec![0, 1]);
        let b = bottom_triangulation(&g).unwrap();
        assert_eq!(b.simplices.len(), 1);
        assert_eq!(b.detsum, Integer::ONE);
        assert_eq!(lex_triangulation(&g).unwrap().detsum, Integer::ONE);
        let reordered = Matrix::from_i64(&[&[1, 0], &[1, 1], &[0, 1]]);
        assert_eq!(lex_triangulation(&reordered).unwrap().detsum, Integer::from(2));

        let g = Matrix::from_i64(&[&[1, 0], &[0, 1]]);
        assert_eq!(bottom_facets(&g, &ivec(&[0, 0])).unwrap().len(), 1);

        let g = Matrix::from_i64(&[&[0, 2], &[2, 0], &[1, 1]]);
        let b = bottom_triangulation(&g).unwrap();
        assert_eq!(b.detsum, Integer::from(4));
        // the three points are collinear: a single bottom facet
        let f = bottom_facets(&g, &ivec(&[0, 0])).unwrap();
        assert_eq!(
            f.iter().map(|f| f.gens.clone()).collect::<Vec<_>>(),
            vec![vec![0, 1, 2]]
        );
    }

    #[test]
    fn bottom_chain() {
        let g = Matrix::from_i64(&[&[-3, 5], &[-1, 3], &[1, 3], &[1, 2], &[3, 2]]);
        for z in [ivec(&[0, 0]), default_roof_direction(&g).unwrap()] {
            let f = bottom_facets(&g, &z).unwrap();
            let mut on: Vec<usize> = f.iter().flat_map(|f| f.gens.clone()).collect();
            on.sort_unstable();
            on.dedup();
            assert_eq!(on, vec![0, 1, 3, 4], "z = {z:?}");
        }
    }

    #[test]
    fn roughness_ratio() {
        let g = Matrix::from_i64(&[&[0, 1, 1], &[1, 1, 1], &[0, 0, 1], &[1, 0, 1]]);
        let r = roughness(&g, &ivec(&[1, -2, 3])).unwrap();
        assert_eq!(r, BigRational::from_integer(4.into()));
        assert!(roughness(&g, &ivec(&[0, 0, -1])).is_err());
    }
}
