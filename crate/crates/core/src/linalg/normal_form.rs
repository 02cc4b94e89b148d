//! Hermite and Smith normal forms with unimodular transforms.
//!
//! Both reductions pick the nonzero entry of least absolute value as pivot,
//! which keeps intermediate entries small on the inputs this crate sees.

use super::integer::Integer;
use super::matrix::Matrix;

/// Row-style Hermite normal form: `transform · input = hermite`.
#[derive(Clone, Debug)]
pub struct HermiteForm {
    pub hermite: Matrix,
    pub transform: Matrix,
    /// Pivot column of each nonzero row of `hermite`.
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Nonzero rows of the Hermite form, a canonical basis of the row lattice.
    pub fn basis(&self) -> Matrix {
        self.hermite.select_rows(&(0..self.rank()).collect::<Vec<_>>())
    }

    /// Rows of the transform that map the input to zero, a basis of the
    /// left kernel `{x : x · input = 0}`.
    pub fn left_kernel(&self) -> Matrix {
        let n = self.transform.nrows();
        self.transform.select_rows(&(self.rank()..n).collect::<Vec<_>>())
    }

    /// Solves `y · input = target` over the integers.
    pub fn solve_left(&self, target: &[Integer]) -> Option<Vec<Integer>> {
        let h = &self.hermite;
        assert_eq!(target.len(), h.ncols(), "dimension mismatch");
        let mut w = vec![Integer::ZERO; h.nrows()];
        for (k, &p) in self.pivots.iter().enumerate() {
            let mut rest = target[p].clone();
            for (kk, wk) in w.iter().enumerate().take(k) {
                if !wk.is_zero() {
                    rest -= &(wk * &h[(kk, p)]);
                }
            }
            let piv = &h[(k, p)];
            if !piv.divides(&rest) {
                return None;
            }
            w[k] = rest.div_exact(piv);
        }
        if h.left_mul_vec(&w) != target {
            return None;
        }
        Some(self.transform.left_mul_vec(&w))
    }

    /// Reduces `v` modulo the row lattice: entries at pivot columns end up in
    /// `[0, pivot)`. The result is a canonical representative of the coset.
    pub fn reduce(&self, v: &[Integer]) -> Vec<Integer> {
        let mut out = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            let piv = &self.hermite[(k, p)];
            let q = out[p].div_floor(piv);
            if !q.is_zero() {
                for (c, o) in out.iter_mut().enumerate() {
                    let s = &q * &self.hermite[(k, c)];
                    *o -= &s;
                }
            }
        }
        out
    }
}

pub fn hermite_normal_form(a: &Matrix) -> HermiteForm {
    let (m, n) = (a.nrows(), a.ncols());
    let mut h = a.clone();
    let mut u = Matrix::identity(m);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            let best = (r..m)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&i, &j| h[(i, c)].abs().cmp(&h[(j, c)].abs()));
            let Some(p) = best else { break };
            h.swap_rows(p, r);
            u.swap_rows(p, r);
            let mut clean = true;
            for i in r + 1..m {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                let f = -q;
                h.add_row_multiple(i, r, &f);
                u.add_row_multiple(i, r, &f);
                if !h[(i, c)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            if !q.is_zero() {
                let f = -q;
                h.add_row_multiple(i, r, &f);
                u.add_row_multiple(i, r, &f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    HermiteForm {
        hermite: h,
        transform: u,
        pivots,
    }
}

/// Smith normal form: `left · input · right = diagonal`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diagonal: Matrix,
    pub left: Matrix,
    pub right: Matrix,
    /// Inverse of `right`, maintained alongside it.
    pub right_inverse: Matrix,
    /// Diagonal entries `d_1 | d_2 | ...`, length `min(rows, cols)`.
    pub diag: Vec<Integer>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(a: &Matrix) -> SmithForm {
    let (m, n) = (a.nrows(), a.ncols());
    let mut s = a.clone();
    let mut left = Matrix::identity(m);
    let mut right = Matrix::identity(n);
    let mut right_inv = Matrix::identity(n);

    // column operations must be mirrored on `right` and, inverted, on `right_inv`
    let swap_cols = |s: &mut Matrix, right: &mut Matrix, right_inv: &mut Matrix, a: usize, b: usize| {
        s.swap_cols(a, b);
        right.swap_cols(a, b);
        right_inv.swap_rows(a, b);
    };
    let add_col =
        |s: &mut Matrix, right: &mut Matrix, right_inv: &mut Matrix, target: usize, source: usize, f: &Integer| {
            s.add_col_multiple(target, source, f);
            right.add_col_multiple(target, source, f);
            right_inv.add_row_multiple(source, target, &-f);
        };

    let k = m.min(n);
    for t in 0..k {
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if s[(i, j)].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        s.swap_rows(pi, t);
        left.swap_rows(pi, t);
        swap_cols(&mut s, &mut right, &mut right_inv, pj, t);

        loop {
            let mut clean = true;
            for i in t + 1..m {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let f = -s[(i, t)].div_floor(&s[(t, t)]);
                s.add_row_multiple(i, t, &f);
                left.add_row_multiple(i, t, &f);
                if !s[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let f = -s[(t, j)].div_floor(&s[(t, t)]);
                add_col(&mut s, &mut right, &mut right_inv, j, t, &f);
                if !s[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // move the smallest remainder in row/column t to the pivot
                let mut best = (t, t);
                for i in t + 1..m {
                    if !s[(i, t)].is_zero() && s[(i, t)].abs() < s[best].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    if !s[(t, j)].is_zero() && s[(t, j)].abs() < s[best].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    s.swap_rows(best.0, t);
                    left.swap_rows(best.0, t);
                } else if best.1 != t {
                    swap_cols(&mut s, &mut right, &mut right_inv, best.1, t);
                }
                continue;
            }
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !s[(t, t)].divides(&s[(i, j)])));
            match offender {
                Some(i) => {
                    s.add_row_multiple(t, i, &Integer::ONE);
                    left.add_row_multiple(t, i, &Integer::ONE);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            left.negate_row(t);
        }
    }
    let diag = (0..k).map(|i| s[(i, i)].clone()).collect();
    SmithForm {
        diagonal: s,
        left,
        right,
        right_inverse: right_inv,
        diag,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::integer::ivec;

    fn check_smith(a: &Matrix) -> SmithForm {
        let snf = smith_normal_form(a);
        assert_eq!(snf.left.mul(a).mul(&snf.right), snf.diagonal);
        assert_eq!(snf.right.mul(&snf.right_inverse), Matrix::identity(a.ncols()));
        assert_eq!(snf.left.determinant().abs(), Integer::ONE);
        assert_eq!(snf.right.determinant().abs(), Integer::ONE);
        for i in 0..snf.diagonal.nrows() {
            for j in 0..snf.diagonal.ncols() {
                if i != j {
                    assert!(snf.diagonal[(i, j)].is_zero());
                }
            }
        }
        for w in snf.diag.windows(2) {
            assert!(w[0].divides(&w[1]), "{:?}", snf.diag);
        }
        assert!(snf.diag.iter().all(|d| !d.is_negative()));
        snf
    }

    #[test]
    fn smith_examples() {
        let snf = check_smith(&Matrix::from_i64(&[&[2, 1], &[1, 3]]));
        assert_eq!(snf.diag, ivec(&[1, 5]));
        let snf = check_smith(&Matrix::identity(3));
        assert_eq!(snf.diag, ivec(&[1, 1, 1]));
        let snf = check_smith(&Matrix::zeros(2, 3));
        assert_eq!(snf.diag, ivec(&[0, 0]));
        let snf = check_smith(&Matrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(snf.diag, ivec(&[1, 6]));
        let snf = check_smith(&Matrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(snf.diag, ivec(&[2, 6, 12]));
    }

    #[test]
    fn hermite_examples() {
        let h = hermite_normal_form(&Matrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(h.hermite, Matrix::from_i64(&[&[2, 0], &[0, 3]]));
        let a = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let h = hermite_normal_form(&a);
        assert_eq!(h.hermite, Matrix::from_i64(&[&[1, 0], &[0, 2]]));
        assert_eq!(h.transform.mul(&a), h.hermite);
        let h = hermite_normal_form(&Matrix::from_i64(&[&[0, 0]]));
        assert_eq!(h.hermite, Matrix::from_i64(&[&[0, 0]]));
        assert_eq!(h.rank(), 0);
    }

    #[test]
    fn hermite_solve_and_reduce() {
        let b = Matrix::from_i64(&[&[2, 0, 1], &[0, 3, 1]]);
        let h = hermite_normal_form(&b);
        let y = h.solve_left(&ivec(&[4, -3, 1])).unwrap();
        assert_eq!(b.left_mul_vec(&y), ivec(&[4, -3, 1]));
        assert!(h.solve_left(&ivec(&[1, 0, 0])).is_none());
        let r = h.reduce(&ivec(&[5, 7, 2]));
        // same coset, canonical
        assert_eq!(h.reduce(&r), r);
        let diff: Vec<Integer> = ivec(&[5, 7, 2]).iter().zip(&r).map(|(a, b)| a - b).collect();
        assert!(h.solve_left(&diff).is_some());
    }
}
