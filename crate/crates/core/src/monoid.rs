//! Global results on the monoid: Hilbert basis, module generators of the
//! integral closure, divisor class group.

use std::fmt;

use crate::linalg::{dot, smith_normal_form, Integer, Matrix};

fn in_cone(forms: &Matrix, v: &[Integer]) -> bool {
    forms.rows().all(|f| !dot(f, v).is_negative())
}

fn difference(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Sort key: the degree if a grading is given, otherwise the sum of the
/// support forms (positive on the nonzero elements of a pointed cone).
fn reduction_key(forms: &Matrix, grading: Option<&[Integer]>, v: &[Integer]) -> Integer {
    match grading {
        Some(g) => dot(g, v),
        None => forms.rows().map(|f| dot(f, v)).sum(),
    }
}

/// Reduces a candidate set containing all irreducibles of `C ∩ Z^k` to the
/// Hilbert basis. `C` must be pointed; the result is sorted by key, then
/// lexicographically.
pub fn global_reduce(candidates: Vec<Vec<Integer>>, forms: &Matrix, grading: Option<&[Integer]>) -> Vec<Vec<Integer>> {
    let mut keyed: Vec<(Integer, Vec<Integer>)> = candidates
        .into_iter()
        .filter(|c| c.iter().any(|x| !x.is_zero()))
        .map(|c| (reduction_key(forms, grading, &c), c))
        .collect();
    keyed.sort();
    keyed.dedup();
    let mut kept: Vec<(Integer, Vec<Integer>)> = Vec::new();
    for (key, y) in keyed {
        // elements of equal key cannot reduce each other in a pointed cone
        let reducible = kept
            .iter()
            .take_while(|(k, _)| *k < key)
            .any(|(_, x)| in_cone(forms, &difference(&y, x)));
        if !reducible {
            kept.push((key, y));
        }
    }
    kept.into_iter().map(|(_, v)| v).collect()
}

/// Minimal system of generators of the integral closure as a module over
/// the monoid generated by `generators`: the points `y` of `closed_points`
/// with `y - x` outside the cone for every generator `x`.
pub fn minimal_module_generators(
    closed_points: &[Vec<Integer>],
    generators: &Matrix,
    forms: &Matrix,
) -> Vec<Vec<Integer>> {
    let mut out: Vec<Vec<Integer>> = Vec::new();
    for y in closed_points {
        if out.contains(y) {
            continue;
        }
        let minimal = generators
            .rows()
            .filter(|x| x.iter().any(|c| !c.is_zero()))
            .all(|x| !in_cone(forms, &difference(y, x)));
        if minimal {
            out.push(y.clone());
        }
    }
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroup {
    pub rank: usize,
    /// Elementary divisors `c_1 | c_2 | ...`, all greater than 1.
    pub torsion: Vec<Integer>,
}

impl ClassGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group, if finite.
    pub fn order(&self) -> Option<Integer> {
        (self.rank == 0).then(|| self.torsion.iter().cloned().product())
    }
}

impl fmt::Display for ClassGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|c| format!("Z/{c}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `Z^s` modulo the image of the standard map `x ↦ (σ_1(x), ..., σ_s(x))`.
pub fn class_group(forms: &Matrix) -> ClassGroup {
    let s = forms.nrows();
    if s == 0 {
        return ClassGroup {
            rank: 0,
            torsion: Vec::new(),
        };
    }
    let snf = smith_normal_form(forms);
    let r = snf.rank();
    ClassGroup {
        rank: s - r,
        torsion: snf.diag[..r].iter().filter(|d| !d.is_one()).cloned().collect(),
    }
}
