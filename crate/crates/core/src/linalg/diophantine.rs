use super::integer::Integer;
use super::matrix::Matrix;
use super::normal_form::hermite_normal_form;

/// Basis of the lattice `{x in Z^n : A·x = 0}`, in Hermite normal form.
///
/// The basis comes from rows of a unimodular transform, so the kernel is
/// saturated: `Z^n / kernel` is torsion free.
pub fn kernel_basis(a: &Matrix) -> Matrix {
    let n = a.ncols();
    if a.nrows() == 0 {
        return Matrix::identity(n);
    }
    let kernel = hermite_normal_form(&a.transpose()).left_kernel();
    if kernel.is_empty() {
        return Matrix::zeros(0, n);
    }
    hermite_normal_form(&kernel).basis()
}

/// Basis (Hermite normal form) of the lattice generated by the rows of `a`.
pub fn row_lattice_basis(a: &Matrix) -> Matrix {
    hermite_normal_form(a).basis()
}

/// Basis of `(R · rows) ∩ Z^n`, the saturation of the row lattice.
pub fn saturation(a: &Matrix) -> Matrix {
    let n = a.ncols();
    if a.nrows() == 0 || a.is_zero() {
        return Matrix::zeros(0, n);
    }
    let eqs = kernel_basis(a);
    if eqs.is_empty() {
        return Matrix::identity(n);
    }
    kernel_basis(&eqs)
}

/// Affine lattice `particular + Z·basis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineLattice {
    pub particular: Vec<Integer>,
    pub basis: Matrix,
}

/// Congruences `rows · x ≡ rhs (mod moduli)`.
#[derive(Clone, Debug, Default)]
pub struct Congruences {
    pub rows: Matrix,
    pub rhs: Vec<Integer>,
    pub moduli: Vec<Integer>,
}

/// Solves `B·x = b`, `C·x ≡ c (mod m)` over `Z^n`.
///
/// Returns `None` when there is no integer solution. The particular solution
/// is reduced modulo the lattice basis, so it is canonical.
pub fn solve_diophantine(n: usize, eqs: &Matrix, eq_rhs: &[Integer], congs: &Congruences) -> Option<AffineLattice> {
    assert_eq!(eqs.nrows(), eq_rhs.len());
    assert_eq!(congs.rows.nrows(), congs.rhs.len());
    assert_eq!(congs.rows.nrows(), congs.moduli.len());
    assert!(eqs.nrows() == 0 || eqs.ncols() == n);
    assert!(congs.rows.nrows() == 0 || congs.rows.ncols() == n);
    let f = eqs.nrows();
    let g = congs.rows.nrows();
    if f + g == 0 {
        return Some(AffineLattice {
            particular: vec![Integer::ZERO; n],
            basis: Matrix::identity(n),
        });
    }
    // one slack variable per congruence: C·x - m·y = c
    let vars = n + g;
    let mut system = Matrix::zeros(f + g, vars);
    let mut rhs = Vec::with_capacity(f + g);
    for i in 0..f {
        for j in 0..n {
            system[(i, j)] = eqs[(i, j)].clone();
        }
        rhs.push(eq_rhs[i].clone());
    }
    for i in 0..g {
        assert!(congs.moduli[i].is_positive(), "modulus must be positive");
        for j in 0..n {
            system[(f + i, j)] = congs.rows[(i, j)].clone();
        }
        system[(f + i, n + i)] = -&congs.moduli[i];
        rhs.push(congs.rhs[i].clone());
    }
    // z · system^T = rhs^T
    let hf = hermite_normal_form(&system.transpose());
    let z = hf.solve_left(&rhs)?;
    let kernel = hf.left_kernel();
    let projected = kernel.select_cols(&(0..n).collect::<Vec<_>>());
    let basis = if projected.is_empty() || projected.is_zero() {
        Matrix::zeros(0, n)
    } else {
        row_lattice_basis(&projected)
    };
    let mut particular = z[..n].to_vec();
    if !basis.is_empty() {
        particular = hermite_normal_form(&basis).reduce(&particular);
    }
    Some(AffineLattice { particular, basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::integer::{dot, ivec};
    use crate::linalg::normal_form::smith_normal_form;

    fn assert_saturated(basis: &Matrix) {
        if basis.is_empty() {
            return;
        }
        let snf = smith_normal_form(basis);
        assert!(snf.diag.iter().all(|d| d.is_one()), "not saturated: {basis:?}");
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&Matrix::from_i64(&[&[2, 1]]));
        assert_eq!(k, Matrix::from_i64(&[&[1, -2]]));
        assert!(kernel_basis(&Matrix::identity(2)).is_empty());
        let k = kernel_basis(&Matrix::from_i64(&[&[1, 1, 1]]));
        assert_eq!(k.nrows(), 2);
        for r in k.rows() {
            assert_eq!(dot(r, &ivec(&[1, 1, 1])), Integer::ZERO);
        }
        assert_saturated(&k);
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x + 4y + 6z = 0 has the saturated kernel spanned by (1,1,-1),(2,-1,0) etc.
        let k = kernel_basis(&Matrix::from_i64(&[&[2, 4, 6]]));
        assert_eq!(k.nrows(), 2);
        assert_saturated(&k);
    }

    #[test]
    fn diophantine_examples() {
        let sol = solve_diophantine(2, &Matrix::from_i64(&[&[1, 1]]), &ivec(&[2]), &Congruences::default()).unwrap();
        assert_eq!(dot(&sol.particular, &ivec(&[1, 1])), Integer::from(2));
        assert_eq!(sol.basis.nrows(), 1);
        assert_eq!(dot(sol.basis.row(0), &ivec(&[1, 1])), Integer::ZERO);
        assert_eq!(sol.basis.row(0)[0].abs(), Integer::ONE);

        let congs = Congruences {
            rows: Matrix::from_i64(&[&[1]]),
            rhs: ivec(&[1]),
            moduli: ivec(&[2]),
        };
        let sol = solve_diophantine(1, &Matrix::zeros(0, 1), &[], &congs).unwrap();
        assert_eq!(sol.particular, ivec(&[1]));
        assert_eq!(sol.basis, Matrix::from_i64(&[&[2]]));

        assert!(solve_diophantine(1, &Matrix::from_i64(&[&[2]]), &ivec(&[1]), &Congruences::default()).is_none());
    }

    #[test]
    fn saturation_of_sublattice() {
        let s = saturation(&Matrix::from_i64(&[&[2, 4], &[1, 2]]));
        assert_eq!(s, Matrix::from_i64(&[&[1, 2]]));
    }
}
