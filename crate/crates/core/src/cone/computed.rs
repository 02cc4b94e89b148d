use super::dd::{dualize, generators_of_inequalities};
use super::input::ConeSystem;
use super::map::CoordinateMap;
use crate::error::{Error, Result};
use crate::linalg::{
    content, dot, hermite_normal_form, kernel_basis, make_primitive, row_lattice_basis, saturation, solve_diophantine,
    HermiteForm, Integer, Matrix,
};

/// A full-dimensional cone in working coordinates `Z^dim`.
///
/// The lattice of the original problem is identified with `Z^dim` through
/// `map`. Rays are extreme rays modulo the maximal subspace `units`.
#[derive(Clone, Debug)]
pub struct ComputedCone {
    map: CoordinateMap,
    pub forms: Matrix,
    pub units: Matrix,
    pub rays: Matrix,
    /// Input generators in working coordinates, if they all lie in the lattice.
    pub generators: Option<Matrix>,
    pub grading: Option<Vec<Integer>>,
    pub grading_denom: Integer,
    pub level: Option<Vec<Integer>>,
    /// Maximal subspaces divided out so far, as an ambient lattice basis.
    ambient_units: Matrix,
    unit_reducer: Option<HermiteForm>,
}

fn format_vec(v: &[Integer]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Equations, congruences and the span of the cone fold into a sublattice;
/// its basis becomes the working coordinate system.
pub fn preprocess(sys: &ConeSystem) -> Result<ComputedCone> {
    let n = sys.dim;
    let mut inequalities = if sys.inequalities.is_empty() {
        Matrix::zeros(0, n)
    } else {
        sys.inequalities.clone()
    };
    let mut equations = if sys.equations.is_empty() {
        Matrix::zeros(0, n)
    } else {
        sys.equations.clone()
    };
    if let Some(gens) = &sys.generators {
        let nonzero: Vec<Vec<Integer>> = gens
            .rows()
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .map(<[Integer]>::to_vec)
            .collect();
        if nonzero.is_empty() {
            equations = equations.vstack(&Matrix::identity(n));
        } else {
            let dual = dualize(n, &Matrix::from_rows(n, nonzero));
            inequalities = inequalities.vstack(&dual.forms);
            equations = equations.vstack(&dual.equations);
        }
    }

    let rhs = vec![Integer::ZERO; equations.nrows()];
    let lattice = solve_diophantine(n, &equations, &rhs, &sys.congruences).expect("homogeneous systems are solvable");
    let mut map = CoordinateMap::sublattice(&lattice.basis);
    let k0 = map.working_dim();

    let pulled = Matrix::from_rows(k0, inequalities.rows().map(|a| map.form_to_working(a)).collect());
    let g = generators_of_inequalities(k0, &pulled);
    let span = g.lineality.vstack(&g.rays);
    if span.rank() < k0 {
        let inner = CoordinateMap::sublattice(&saturation(&span));
        map = map.compose(&inner);
    }
    let k = map.working_dim();

    let ambient_of = |m: &Matrix| -> Vec<Vec<Integer>> { m.rows().map(|r| lattice.basis.left_mul_vec(r)).collect() };
    // express lineality and rays in the final working coordinates
    let to_final = |rows: Vec<Vec<Integer>>| -> Vec<Vec<Integer>> {
        rows.iter()
            .map(|x| map.preimage(x).expect("cone lies in its own span"))
            .collect()
    };
    let lineality = to_final(ambient_of(&g.lineality));
    let rays = to_final(ambient_of(&g.rays));

    let mut spanning: Vec<Vec<Integer>> = rays;
    for l in &lineality {
        spanning.push(l.clone());
        spanning.push(l.iter().map(|x| -x).collect());
    }
    let forms = if spanning.is_empty() {
        Matrix::zeros(0, k)
    } else {
        dualize(k, &Matrix::from_rows(k, spanning)).forms
    };
    let units = kernel_basis(&forms);
    let rays = generators_of_inequalities(k, &forms).rays;

    let generators = sys.generators.as_ref().and_then(|gens| {
        let rows: Option<Vec<Vec<Integer>>> = gens
            .rows()
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .map(|r| map.preimage(r))
            .collect();
        rows.map(|r| Matrix::from_rows(k, r))
    });

    let (grading, grading_denom) = match &sys.grading {
        Some(g) if k > 0 => {
            let mut w = map.form_to_working(g);
            let c = content(&w);
            if c.is_zero() {
                return Err(Error::NonPositiveDegree("the whole lattice".into()));
            }
            make_primitive(&mut w);
            (Some(w), c)
        }
        _ => (None, Integer::ONE),
    };
    let level = sys.level.as_ref().map(|l| map.form_to_working(l));

    Ok(ComputedCone {
        map,
        forms,
        units,
        rays,
        generators,
        grading,
        grading_denom,
        level,
        ambient_units: Matrix::zeros(0, n),
        unit_reducer: None,
    })
}

/// Indices of the vectors spanning extreme rays of the cone cut out by
/// `forms`, one index per ray class modulo `units`.
///
/// A vector spans an extreme ray iff the forms vanishing on it have rank
/// `dim - dim U - 1`.
pub fn extreme_ray_indices(vectors: &Matrix, forms: &Matrix, units: &Matrix) -> Vec<usize> {
    let k = vectors.ncols();
    let pointed_dim = k - units.nrows();
    if pointed_dim == 0 {
        return Vec::new();
    }
    let quotient = CoordinateMap::quotient(k, units);
    let mut seen: Vec<Vec<Integer>> = Vec::new();
    let mut out = Vec::new();
    for (i, v) in vectors.rows().enumerate() {
        let values: Vec<Integer> = forms.rows().map(|f| dot(f, v)).collect();
        if values.iter().any(Integer::is_negative) {
            continue;
        }
        let mut image = quotient.to_working(v).expect("quotient maps are integral");
        if image.iter().all(Integer::is_zero) {
            continue;
        }
        let tight: Vec<usize> = (0..forms.nrows()).filter(|&j| values[j].is_zero()).collect();
        if forms.select_rows(&tight).rank() + 1 != pointed_dim {
            continue;
        }
        make_primitive(&mut image);
        if !seen.contains(&image) {
            seen.push(image);
            out.push(i);
        }
    }
    out
}

impl ComputedCone {
    pub fn dim(&self) -> usize {
        self.map.working_dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.map.ambient_dim()
    }

    pub fn is_pointed(&self) -> bool {
        self.units.is_empty()
    }

    pub fn is_inhomogeneous(&self) -> bool {
        self.level.is_some()
    }

    pub fn map(&self) -> &CoordinateMap {
        &self.map
    }

    /// Ambient coordinates of a working vector, reduced modulo the maximal
    /// subspaces divided out earlier (so the lift is canonical).
    pub fn to_ambient(&self, y: &[Integer]) -> Vec<Integer> {
        let x = self.map.to_ambient(y);
        match &self.unit_reducer {
            Some(h) => h.reduce(&x),
            None => x,
        }
    }

    /// Working coordinates of an ambient lattice point, if it lies in the lattice.
    pub fn to_working(&self, x: &[Integer]) -> Option<Vec<Integer>> {
        match &self.unit_reducer {
            None => self.map.preimage(x),
            Some(h) => {
                let y = self.map.to_working(x)?;
                let section = self.map.to_ambient(&y);
                let diff: Vec<Integer> = x.iter().zip(&section).map(|(a, b)| a - b).collect();
                h.reduce(&diff).iter().all(Integer::is_zero).then_some(y)
            }
        }
    }

    /// Basis of the maximal subspace in ambient coordinates (Hermite normal form).
    pub fn maximal_subspace(&self) -> Matrix {
        let own: Vec<Vec<Integer>> = self.units.rows().map(|u| self.map.to_ambient(u)).collect();
        let all = self.ambient_units.vstack(&Matrix::from_rows(self.ambient_dim(), own));
        if all.is_empty() {
            all
        } else {
            row_lattice_basis(&all)
        }
    }

    pub fn degree(&self, v: &[Integer]) -> Option<Integer> {
        self.grading.as_ref().map(|g| dot(g, v))
    }

    pub fn level_of(&self, v: &[Integer]) -> Option<Integer> {
        self.level.as_ref().map(|l| dot(l, v))
    }

    pub fn contains(&self, v: &[Integer]) -> bool {
        self.forms.rows().all(|f| !dot(f, v).is_negative())
    }

    pub fn pointed_quotient(&self) -> Result<ComputedCone> {
        if self.is_pointed() {
            return Err(Error::AlreadyPointed);
        }
        self.quotient_by_units()
    }

    /// Quotient by the maximal subspace; the identity coordinate change when
    /// the cone is pointed already.
    pub fn quotient_by_units(&self) -> Result<ComputedCone> {
        for u in self.units.rows() {
            if let Some(g) = &self.grading {
                if !dot(g, u).is_zero() {
                    return Err(Error::NonPositiveDegree(format!(
                        "the maximal subspace ({})",
                        format_vec(&self.map.to_ambient(u))
                    )));
                }
            }
            if let Some(l) = &self.level {
                if !dot(l, u).is_zero() {
                    return Err(Error::NonPointedHomogenization);
                }
            }
        }
        let k = self.dim();
        let q = CoordinateMap::quotient(k, &self.units);
        let kq = q.working_dim();
        let forms = Matrix::from_rows(kq, self.forms.rows().map(|f| q.form_to_working(f)).collect());
        let ambient_units = self.maximal_subspace();
        let rays = generators_of_inequalities(kq, &forms).rays;
        let project = |v: &[Integer]| q.to_working(v).expect("quotient maps are integral");
        let generators = self.generators.as_ref().map(|g| {
            Matrix::from_rows(
                kq,
                g.rows()
                    .map(project)
                    .filter(|v| v.iter().any(|x| !x.is_zero()))
                    .collect(),
            )
        });
        let unit_reducer = (!ambient_units.is_empty()).then(|| hermite_normal_form(&ambient_units));
        Ok(ComputedCone {
            map: self.map.compose(&q),
            forms,
            units: Matrix::zeros(0, kq),
            rays,
            generators,
            grading: self.grading.as_ref().map(|g| q.form_to_working(g)),
            grading_denom: self.grading_denom.clone(),
            level: self.level.as_ref().map(|l| q.form_to_working(l)),
            ambient_units,
            unit_reducer,
        })
    }

    /// The linear form that is 1 on every extreme ray, scaled to be
    /// primitive, when the extreme rays lie on a hyperplane.
    pub fn implicit_grading(&self) -> Option<Vec<Integer>> {
        let k = self.dim();
        if !self.is_pointed() || self.rays.is_empty() || self.rays.rank() < k {
            return None;
        }
        let rows = self
            .rays
            .rows()
            .map(|r| {
                let mut v = r.to_vec();
                v.push(-Integer::ONE);
                v
            })
            .collect();
        let kernel = kernel_basis(&Matrix::from_rows(k + 1, rows));
        if kernel.nrows() != 1 {
            return None;
        }
        let mut g = kernel.row(0).to_vec();
        let c = g.pop().expect("nonempty");
        if c.is_zero() {
            return None;
        }
        if c.is_negative() {
            g.iter_mut().for_each(|x| *x = -&*x);
        }
        make_primitive(&mut g);
        Some(g)
    }

    pub fn set_grading(&mut self, grading: Vec<Integer>) {
        self.grading = Some(grading);
        self.grading_denom = Integer::ONE;
    }

    /// Grading must be positive on every extreme ray of a pointed cone.
    pub fn check_grading(&self) -> Result<()> {
        let g = self.grading.as_ref().ok_or(Error::NotGraded)?;
        for r in self.rays.rows() {
            if !dot(g, r).is_positive() {
                return Err(Error::NonPositiveDegree(format_vec(&self.to_ambient(r))));
            }
        }
        Ok(())
    }
}
