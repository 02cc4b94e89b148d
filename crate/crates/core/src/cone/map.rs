use crate::linalg::{dot, smith_normal_form, Integer, Matrix};

/// Linear map between working coordinates `Z^k` and ambient `Z^n`.
///
/// `to_ambient(y) = y · lift`; `to_working(x) = x · project / denom`. For
/// sublattice embeddings `to_working` inverts `to_ambient` on the image; for
/// quotient maps `to_ambient` is a section and `to_working` the projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateMap {
    lift: Matrix,
    project: Matrix,
    denom: Integer,
}

impl CoordinateMap {
    pub fn identity(n: usize) -> CoordinateMap {
        CoordinateMap {
            lift: Matrix::identity(n),
            project: Matrix::identity(n),
            denom: Integer::ONE,
        }
    }

    /// Embedding of the lattice spanned by the (linearly independent) rows of `basis`.
    pub fn sublattice(basis: &Matrix) -> CoordinateMap {
        let (k, n) = (basis.nrows(), basis.ncols());
        if k == 0 {
            return CoordinateMap {
                lift: Matrix::zeros(0, n),
                project: Matrix::zeros(n, 0),
                denom: Integer::ONE,
            };
        }
        let cols = basis.pivot_columns();
        assert_eq!(cols.len(), k, "sublattice basis must be linearly independent");
        let square = basis.select_cols(&cols);
        let mut det = square.determinant();
        let mut adj = square.adjugate();
        if det.is_negative() {
            det = -det;
            for i in 0..k {
                adj.negate_row(i);
            }
        }
        let mut project = Matrix::zeros(n, k);
        for (i, &c) in cols.iter().enumerate() {
            for j in 0..k {
                project[(c, j)] = adj[(i, j)].clone();
            }
        }
        let mut map = CoordinateMap {
            lift: basis.clone(),
            project,
            denom: det,
        };
        map.simplify();
        map
    }

    /// Quotient of `Z^k` by the saturated sublattice spanned by `kernel`.
    ///
    /// Working coordinates of the result are those of `Z^k / kernel`.
    pub fn quotient(k: usize, kernel: &Matrix) -> CoordinateMap {
        if kernel.is_empty() {
            return CoordinateMap::identity(k);
        }
        let snf = smith_normal_form(kernel);
        let u = snf.rank();
        assert!(
            snf.diag[..u].iter().all(Integer::is_one),
            "quotient by a non-saturated sublattice"
        );
        let rest: Vec<usize> = (u..k).collect();
        CoordinateMap {
            lift: snf.right_inverse.select_rows(&rest),
            project: snf.right.select_cols(&rest),
            denom: Integer::ONE,
        }
    }

    fn simplify(&mut self) {
        let mut g = self.denom.clone();
        for r in self.project.rows() {
            for x in r {
                g = g.gcd(x);
            }
        }
        if !g.is_one() && !g.is_zero() {
            self.denom = self.denom.div_exact(&g);
            let (n, k) = (self.project.nrows(), self.project.ncols());
            for i in 0..n {
                for j in 0..k {
                    self.project[(i, j)] = self.project[(i, j)].div_exact(&g);
                }
            }
        }
    }

    pub fn working_dim(&self) -> usize {
        self.lift.nrows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.lift.ncols()
    }

    pub fn lift_matrix(&self) -> &Matrix {
        &self.lift
    }

    /// `self` maps W1 <-> ambient, `inner` maps W2 <-> W1; the result maps W2 <-> ambient.
    pub fn compose(&self, inner: &CoordinateMap) -> CoordinateMap {
        let mut map = CoordinateMap {
            lift: inner.lift.mul(&self.lift),
            project: self.project.mul(&inner.project),
            denom: &self.denom * &inner.denom,
        };
        map.simplify();
        map
    }

    pub fn to_ambient(&self, y: &[Integer]) -> Vec<Integer> {
        self.lift.left_mul_vec(y)
    }

    /// Projection to working coordinates; `None` if the result is not integral.
    pub fn to_working(&self, x: &[Integer]) -> Option<Vec<Integer>> {
        let raw = self.project.left_mul_vec(x);
        if self.denom.is_one() {
            return Some(raw);
        }
        raw.iter()
            .map(|v| self.denom.divides(v).then(|| v.div_exact(&self.denom)))
            .collect()
    }

    /// Working coordinates of `x` if `x` lies in the image lattice.
    pub fn preimage(&self, x: &[Integer]) -> Option<Vec<Integer>> {
        let y = self.to_working(x)?;
        (self.to_ambient(&y) == x).then_some(y)
    }

    /// Pulls back a linear form on the ambient space: `form(to_ambient(y))`.
    pub fn form_to_working(&self, form: &[Integer]) -> Vec<Integer> {
        self.lift.rows().map(|r| dot(r, form)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ivec;

    #[test]
    fn sublattice_round_trip() {
        let basis = Matrix::from_i64(&[&[2, 0, 1], &[0, 3, 1]]);
        let m = CoordinateMap::sublattice(&basis);
        let x = m.to_ambient(&ivec(&[5, -2]));
        assert_eq!(m.preimage(&x), Some(ivec(&[5, -2])));
        assert_eq!(m.preimage(&ivec(&[1, 0, 0])), None);
        assert_eq!(m.form_to_working(&ivec(&[1, 1, 1])), ivec(&[3, 4]));
    }

    #[test]
    fn quotient_by_line() {
        let q = CoordinateMap::quotient(2, &Matrix::from_i64(&[&[1, -2]]));
        assert_eq!(q.working_dim(), 1);
        assert_eq!(q.to_working(&ivec(&[1, -2])), Some(ivec(&[0])));
        let z = q.to_working(&ivec(&[0, 1])).unwrap();
        assert_eq!(z[0].abs(), Integer::ONE);
        // section followed by projection is the identity
        assert_eq!(q.to_working(&q.to_ambient(&ivec(&[7]))), Some(ivec(&[7])));
    }

    #[test]
    fn composition() {
        // 2Z x Z, then quotient by the second coordinate
        let outer = CoordinateMap::sublattice(&Matrix::from_i64(&[&[2, 0], &[0, 1]]));
        let inner = CoordinateMap::quotient(2, &Matrix::from_i64(&[&[0, 1]]));
        let c = outer.compose(&inner);
        assert_eq!(c.working_dim(), 1);
        let x = c.to_ambient(&ivec(&[1]));
        assert_eq!(x[0].abs(), Integer::from(2));
        assert_eq!(c.to_working(&ivec(&[4, 7])).map(|v| v[0].abs()), Some(Integer::from(2)));
        assert_eq!(c.to_working(&ivec(&[3, 0])), None);
    }
}
