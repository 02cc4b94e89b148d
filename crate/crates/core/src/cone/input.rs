use crate::error::{Error, Result};
use crate::linalg::{solve_diophantine, Congruences, Integer, Matrix};

/// A system of linear constraints and generators in `Z^dim`.
///
/// Inequalities read `A·x >= a`, equations `B·x = b` and congruences
/// `C·x ≡ c (mod m)`. Vertices are rational points `row / denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputSystem {
    pub dim: usize,
    pub cone: Matrix,
    pub vertices: Matrix,
    pub vertex_denominators: Vec<Integer>,
    pub inequalities: Matrix,
    pub inequality_rhs: Vec<Integer>,
    pub equations: Matrix,
    pub equation_rhs: Vec<Integer>,
    pub congruences: Matrix,
    pub congruence_rhs: Vec<Integer>,
    pub moduli: Vec<Integer>,
    pub grading: Option<Vec<Integer>>,
    pub dehomogenization: Option<Vec<Integer>>,
}

impl InputSystem {
    pub fn new(dim: usize) -> InputSystem {
        InputSystem {
            dim,
            cone: Matrix::zeros(0, dim),
            vertices: Matrix::zeros(0, dim),
            vertex_denominators: Vec::new(),
            inequalities: Matrix::zeros(0, dim),
            inequality_rhs: Vec::new(),
            equations: Matrix::zeros(0, dim),
            equation_rhs: Vec::new(),
            congruences: Matrix::zeros(0, dim),
            congruence_rhs: Vec::new(),
            moduli: Vec::new(),
            grading: None,
            dehomogenization: None,
        }
    }

    pub fn add_cone_ray(&mut self, v: &[Integer]) {
        self.cone.push_row(v);
    }

    pub fn add_vertex(&mut self, v: &[Integer], denominator: Integer) {
        self.vertices.push_row(v);
        self.vertex_denominators.push(denominator);
    }

    pub fn add_inequality(&mut self, a: &[Integer], rhs: Integer) {
        self.inequalities.push_row(a);
        self.inequality_rhs.push(rhs);
    }

    pub fn add_equation(&mut self, b: &[Integer], rhs: Integer) {
        self.equations.push_row(b);
        self.equation_rhs.push(rhs);
    }

    pub fn add_congruence(&mut self, c: &[Integer], rhs: Integer, modulus: Integer) {
        self.congruences.push_row(c);
        self.congruence_rhs.push(rhs);
        self.moduli.push(modulus);
    }

    pub fn is_homogeneous(&self) -> bool {
        self.inequality_rhs.iter().all(Integer::is_zero)
            && self.equation_rhs.iter().all(Integer::is_zero)
            && self.congruence_rhs.iter().all(Integer::is_zero)
            && self.vertices.is_empty()
            && self.dehomogenization.is_none()
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.dim;
        let shapes = [
            ("cone", &self.cone),
            ("vertices", &self.vertices),
            ("inequalities", &self.inequalities),
            ("equations", &self.equations),
            ("congruences", &self.congruences),
        ];
        for (name, m) in shapes {
            if m.nrows() > 0 && m.ncols() != d {
                return Err(Error::Input(format!("{name} rows must have {d} entries")));
            }
        }
        if self.moduli.iter().any(|m| !m.is_positive()) {
            return Err(Error::Input("congruence modulus must be positive".into()));
        }
        if self.vertex_denominators.iter().any(|m| !m.is_positive()) {
            return Err(Error::Input("vertex denominator must be positive".into()));
        }
        for (name, f) in [("grading", &self.grading), ("dehomogenization", &self.dehomogenization)] {
            if let Some(f) = f {
                if f.len() != d {
                    return Err(Error::Input(format!("{name} must have {d} entries")));
                }
            }
        }
        if self.dehomogenization.is_some() {
            if !self.vertices.is_empty() {
                return Err(Error::Input(
                    "vertices cannot be combined with a dehomogenization".into(),
                ));
            }
            let rhs_zero = self.inequality_rhs.iter().all(Integer::is_zero)
                && self.equation_rhs.iter().all(Integer::is_zero)
                && self.congruence_rhs.iter().all(Integer::is_zero);
            if !rhs_zero {
                return Err(Error::Input(
                    "inhomogeneous constraints cannot be combined with a dehomogenization".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Homogeneous constraints and generators; the common input of the cone
/// computations. `level` is set for (homogenized) inhomogeneous systems.
#[derive(Clone, Debug)]
pub struct ConeSystem {
    pub dim: usize,
    pub generators: Option<Matrix>,
    pub inequalities: Matrix,
    pub equations: Matrix,
    pub congruences: Congruences,
    pub grading: Option<Vec<Integer>>,
    pub level: Option<Vec<Integer>>,
}

/// Brings an input system into homogeneous form.
///
/// Homogeneous systems pass through unchanged. Otherwise the polyhedron is
/// replaced by the cone over it in one more dimension, with the level as the
/// new last coordinate; if a dehomogenization is given the system is taken to
/// be homogenized already.
pub fn homogenize(input: &InputSystem) -> Result<ConeSystem> {
    input.validate()?;
    let d = input.dim;
    let zero_rhs = |m: &Matrix, moduli: &[Integer]| Congruences {
        rows: m.clone(),
        rhs: vec![Integer::ZERO; m.nrows()],
        moduli: moduli.to_vec(),
    };
    let generators = |m: &Matrix| (!m.is_empty()).then(|| m.clone());

    if input.is_homogeneous() {
        return Ok(ConeSystem {
            dim: d,
            generators: generators(&input.cone),
            inequalities: input.inequalities.clone(),
            equations: input.equations.clone(),
            congruences: zero_rhs(&input.congruences, &input.moduli),
            grading: input.grading.clone(),
            level: None,
        });
    }

    if let Some(delta) = &input.dehomogenization {
        let mut inequalities = input.inequalities.clone();
        inequalities.push_row(delta);
        return Ok(ConeSystem {
            dim: d,
            generators: generators(&input.cone),
            inequalities,
            equations: input.equations.clone(),
            congruences: zero_rhs(&input.congruences, &input.moduli),
            grading: input.grading.clone(),
            level: Some(delta.clone()),
        });
    }

    // no lattice point at all: nothing to homogenize
    let congs = Congruences {
        rows: input.congruences.clone(),
        rhs: input.congruence_rhs.clone(),
        moduli: input.moduli.clone(),
    };
    if solve_diophantine(d, &input.equations, &input.equation_rhs, &congs).is_none() {
        return Err(Error::EmptyLattice);
    }

    let extend = |m: &Matrix, last: &[Integer]| {
        let rows = m
            .rows()
            .zip(last)
            .map(|(r, c)| {
                let mut v = r.to_vec();
                v.push(c.clone());
                v
            })
            .collect();
        Matrix::from_rows(d + 1, rows)
    };
    let negated = |v: &[Integer]| v.iter().map(|x| -x).collect::<Vec<_>>();

    let mut inequalities = extend(&input.inequalities, &negated(&input.inequality_rhs));
    let mut level = vec![Integer::ZERO; d + 1];
    level[d] = Integer::ONE;
    inequalities.push_row(&level);

    let mut gens = Matrix::zeros(0, d + 1);
    if !input.vertices.is_empty() || !input.cone.is_empty() {
        if input.vertices.is_empty() {
            // a pure cone is the polyhedron with the single vertex 0
            gens.push_row(&level);
        }
        for (v, den) in input.vertices.rows().zip(&input.vertex_denominators) {
            let mut g = v.to_vec();
            g.push(den.clone());
            gens.push_row(&g);
        }
        for r in input.cone.rows() {
            let mut g = r.to_vec();
            g.push(Integer::ZERO);
            gens.push_row(&g);
        }
    }

    let grading = input.grading.as_ref().map(|g| {
        let mut g = g.clone();
        g.push(Integer::ZERO);
        g
    });

    Ok(ConeSystem {
        dim: d + 1,
        generators: generators(&gens),
        inequalities,
        equations: extend(&input.equations, &negated(&input.equation_rhs)),
        congruences: Congruences {
            rows: extend(&input.congruences, &negated(&input.congruence_rhs)),
            rhs: vec![Integer::ZERO; input.congruences.nrows()],
            moduli: input.moduli.clone(),
        },
        grading,
        level: Some(level),
    })
}
