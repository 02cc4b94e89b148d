use std::cmp::Ordering;

use num_rational::BigRational;
use rayon::prelude::*;

use crate::cone::{homogenize, preprocess, ComputedCone, InputSystem};
use crate::error::{Error, Result};
use crate::inhom::{inhom_terms, module_rank_by_polytope, module_rank_by_residues, split_levels};
use crate::linalg::{dot, make_primitive, Integer, Matrix};
use crate::monoid::{class_group, global_reduce, minimal_module_generators, ClassGroup};
use crate::series::{hsop_degrees, hsop_heights, quasipolynomial, HilbertSeries, Quasipolynomial};
use crate::simplicial::{local_candidates, parallelotope_points};
use crate::triangulation::{bottom_triangulation, lex_triangulation, roughness, Triangulation};

/// Roughness from which the bottom decomposition is used by default.
const ROUGHNESS_FOR_BOTTOM: i64 = 10;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Goals {
    pub hilbert_basis: bool,
    pub hilbert_series: bool,
    pub hsop: bool,
    pub class_group: bool,
    pub module_generators: bool,
    pub triangulation: bool,
}

impl Goals {
    pub fn is_empty(&self) -> bool {
        *self == Goals::default()
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunConfig {
    /// No goal at all means: Hilbert basis, and the series if there is a grading.
    pub goals: Goals,
    pub bottom: bool,
    pub verbose: bool,
    pub threads: Option<usize>,
    /// Route the cone through the quotient by its maximal subspace even if
    /// that is zero.
    pub force_quotient: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Complete,
    EmptyLattice,
    EmptyModule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HsopReport {
    pub heights: Vec<usize>,
    pub degrees: Vec<u64>,
    pub numerator: Vec<Integer>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationReport {
    pub bottom: bool,
    pub generators: Vec<Vec<Integer>>,
    /// Generator indices and determinant of each simplicial cone.
    pub simplices: Vec<(Vec<usize>, Integer)>,
    pub detsum: Integer,
}

/// Everything computed for one input, vectors in ambient (homogenized)
/// coordinates and in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub outcome: Outcome,
    pub inhomogeneous: bool,
    pub embedding_dim: usize,
    pub rank: usize,
    pub grading_denom: Option<Integer>,
    /// Elements with their degree, if graded.
    pub hilbert_basis: Option<Vec<(Option<Integer>, Vec<Integer>)>>,
    pub extreme_rays: Vec<Vec<Integer>>,
    /// Inhomogeneous case: extreme rays of positive level.
    pub vertices: Vec<Vec<Integer>>,
    pub maximal_subspace: Vec<Vec<Integer>>,
    pub module_generators: Option<Vec<Vec<Integer>>>,
    pub recession_basis: Option<Vec<Vec<Integer>>>,
    pub module_rank: Option<usize>,
    pub module_rank_by_polytope: Option<usize>,
    /// Generators of the integral closure over the monoid of the input generators.
    pub closure_generators: Option<Vec<Vec<Integer>>>,
    pub series: Option<HilbertSeries>,
    pub hsop: Option<HsopReport>,
    pub quasipolynomial: Option<Quasipolynomial>,
    pub class_group: Option<ClassGroup>,
    pub triangulation: Option<TriangulationReport>,
    pub transforms: Vec<String>,
}

impl Report {
    fn empty(outcome: Outcome, inhomogeneous: bool, embedding_dim: usize) -> Report {
        Report {
            outcome,
            inhomogeneous,
            embedding_dim,
            rank: 0,
            grading_denom: None,
            hilbert_basis: None,
            extreme_rays: Vec::new(),
            vertices: Vec::new(),
            maximal_subspace: Vec::new(),
            module_generators: None,
            recession_basis: None,
            module_rank: None,
            module_rank_by_polytope: None,
            closure_generators: None,
            series: None,
            hsop: None,
            quasipolynomial: None,
            class_group: None,
            triangulation: None,
            transforms: Vec::new(),
        }
    }
}

fn small(x: &Integer) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Arithmetic(format!("degree {x} out of range")))
}

fn is_zero_vec(v: &[Integer]) -> bool {
    v.iter().all(Integer::is_zero)
}

/// The input generators, deduplicated, if they lie in the lattice and
/// generate the cone.
fn input_generators(cone: &ComputedCone) -> Option<Matrix> {
    let g = cone.generators.as_ref()?;
    let mut rows: Vec<Vec<Integer>> = Vec::new();
    for r in g.rows() {
        if !is_zero_vec(r) && !rows.iter().any(|x| x.as_slice() == r) {
            rows.push(r.to_vec());
        }
    }
    let primitive: Vec<Vec<Integer>> = rows
        .iter()
        .map(|r| {
            let mut p = r.clone();
            make_primitive(&mut p);
            p
        })
        .collect();
    let inside = rows.iter().all(|r| cone.contains(r));
    let spans = cone
        .rays
        .rows()
        .all(|ray| primitive.iter().any(|p| p.as_slice() == ray));
    (inside && spans && !rows.is_empty()).then(|| Matrix::from_rows(cone.dim(), rows))
}

/// Sorts working vectors by degree (if given), then by ambient coordinates.
fn canonical_order(cone: &ComputedCone, grading: Option<&[Integer]>, rows: Vec<Vec<Integer>>) -> Vec<Vec<Integer>> {
    let mut keyed: Vec<(Option<Integer>, Vec<Integer>, Vec<Integer>)> = rows
        .into_iter()
        .map(|v| (grading.map(|g| dot(g, &v)), cone.to_ambient(&v), v))
        .collect();
    keyed.sort_by(|a, b| match a.0.cmp(&b.0) {
        Ordering::Equal => a.1.cmp(&b.1),
        o => o,
    });
    keyed.into_iter().map(|(_, _, v)| v).collect()
}

struct SimplexOutput {
    candidates: Vec<Vec<Integer>>,
    terms: Vec<(i64, Vec<u64>)>,
}

pub fn run(input: &InputSystem, cfg: &RunConfig) -> Result<Report> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::Input(format!("thread pool: {e}")))?;
    pool.install(|| run_in_pool(input, cfg))
}

fn run_in_pool(input: &InputSystem, cfg: &RunConfig) -> Result<Report> {
    let inhomogeneous = !input.is_homogeneous();
    let sys = match homogenize(input) {
        Err(Error::EmptyLattice) => {
            let mut r = Report::empty(Outcome::EmptyLattice, inhomogeneous, input.dim);
            if inhomogeneous {
                r.module_generators = Some(Vec::new());
            } else {
                r.hilbert_basis = Some(Vec::new());
            }
            return Ok(r);
        }
        other => other?,
    };
    let goals = if cfg.goals.is_empty() {
        Goals {
            hilbert_basis: true,
            ..Goals::default()
        }
    } else {
        cfg.goals
    };
    let series_requested = goals.hilbert_series || goals.hsop;
    if goals.hsop && inhomogeneous {
        return Err(Error::Input("hsop needs a homogeneous system".into()));
    }

    let mut cone = preprocess(&sys)?;
    if inhomogeneous {
        // degrees of polyhedron points are taken as given
        if let Some(g) = cone.grading.clone() {
            let c = cone.grading_denom.clone();
            cone.set_grading(g.iter().map(|x| x * &c).collect());
        }
    }
    let mut report = Report::empty(Outcome::Complete, inhomogeneous, sys.dim);
    report.rank = cone.dim();
    if cone.dim() < sys.dim {
        report.transforms.push("sublattice".into());
    }
    report.maximal_subspace = cone.maximal_subspace().to_rows();
    if !cone.is_pointed() || cfg.force_quotient {
        if !cone.is_pointed() {
            report.transforms.push("quotient by maximal subspace".into());
        }
        cone = cone.quotient_by_units()?;
    }
    let k = cone.dim();
    if !inhomogeneous && cone.grading.is_none() {
        if k == 0 {
            cone.set_grading(Vec::new());
        } else if let Some(g) = cone.implicit_grading() {
            cone.set_grading(g);
        }
    }
    if !inhomogeneous && cone.grading.is_some() && k > 0 {
        cone.check_grading()?;
    }
    let grading = cone.grading.clone();
    let level = cone.level.clone();
    if grading.is_some() {
        report.grading_denom = Some(cone.grading_denom.clone());
    }
    if series_requested && grading.is_none() {
        return Err(Error::NotGraded);
    }
    let want_series = grading.is_some() && (series_requested || cfg.goals.is_empty());
    let homogeneous_grading = if inhomogeneous { None } else { grading.as_deref() };

    // rays for the report
    let rays = canonical_order(&cone, homogeneous_grading, cone.rays.to_rows());
    match &level {
        Some(l) => {
            for r in &rays {
                let a = cone.to_ambient(r);
                if dot(l, r).is_zero() {
                    report.extreme_rays.push(a);
                } else {
                    report.vertices.push(a);
                }
            }
        }
        None => report.extreme_rays = rays.iter().map(|r| cone.to_ambient(r)).collect(),
    }

    // triangulation
    let gens = canonical_order(
        &cone,
        homogeneous_grading,
        input_generators(&cone).unwrap_or_else(|| cone.rays.clone()).to_rows(),
    );
    let gens = Matrix::from_rows(k, gens);
    let rough = match homogeneous_grading {
        Some(g) if k > 0 => roughness(&gens, g)? >= BigRational::from_integer(ROUGHNESS_FOR_BOTTOM.into()),
        _ => false,
    };
    let use_bottom = (cfg.bottom || rough) && k > 0;
    let tri = if use_bottom {
        bottom_triangulation(&gens)?
    } else {
        lex_triangulation(&gens)?
    };
    if cfg.verbose {
        eprintln!(
            "{} triangulation: {} simplicial cones, determinant sum {}",
            if use_bottom { "bottom" } else { "lex" },
            tri.simplices.len(),
            tri.detsum
        );
    }

    let want_hb = goals.hilbert_basis || inhomogeneous;
    let outputs: Vec<SimplexOutput> = tri
        .simplices
        .par_iter()
        .map(|s| {
            let rays = gens.select_rows(&s.gens);
            let points = parallelotope_points(&rays, &s.excluded)?;
            let low = |v: &[Integer]| level.as_ref().is_none_or(|l| dot(l, v) <= Integer::ONE);
            let candidates = if want_hb {
                let pts: Vec<Vec<Integer>> = points.iter().filter(|p| low(p)).cloned().collect();
                local_candidates(&pts, &rays).into_iter().filter(|c| low(c)).collect()
            } else {
                Vec::new()
            };
            let mut terms = Vec::new();
            if want_series {
                let g = grading.as_deref().expect("graded");
                match &level {
                    Some(l) => {
                        for p in &points {
                            terms.extend(inhom_terms(p, &rays, l, g)?);
                        }
                    }
                    None => {
                        let ray_degrees: Vec<u64> = rays
                            .rows()
                            .map(|r| small(&dot(g, r)).map(|x| x as u64))
                            .collect::<Result<_>>()?;
                        for p in &points {
                            terms.push((small(&dot(g, p))?, ray_degrees.clone()));
                        }
                    }
                }
            }
            Ok(SimplexOutput { candidates, terms })
        })
        .collect::<Result<_>>()?;

    if want_hb {
        let candidates: Vec<Vec<Integer>> = outputs.iter().flat_map(|o| o.candidates.iter().cloned()).collect();
        let hb = global_reduce(candidates, &cone.forms, homogeneous_grading);
        match &level {
            Some(l) => {
                let split = split_levels(&hb, l);
                let ambient = |v: &[Vec<Integer>]| -> Vec<Vec<Integer>> {
                    let mut out: Vec<Vec<Integer>> = v.iter().map(|x| cone.to_ambient(x)).collect();
                    out.sort();
                    out
                };
                report.module_generators = Some(ambient(&split.module_generators));
                report.recession_basis = Some(ambient(&split.recession));
                if split.module_generators.is_empty() {
                    report.outcome = Outcome::EmptyModule;
                } else {
                    report.module_rank = Some(module_rank_by_residues(&split.module_generators, &split.recession)?);
                    report.module_rank_by_polytope = Some(module_rank_by_polytope(&cone.rays, l)?);
                }
            }
            None => {
                let hb = canonical_order(&cone, homogeneous_grading, hb);
                report.hilbert_basis = Some(
                    hb.iter()
                        .map(|v| (homogeneous_grading.map(|g| dot(g, v)), cone.to_ambient(v)))
                        .collect(),
                );
            }
        }
    }

    if want_series {
        let series = HilbertSeries::from_terms(outputs.into_iter().flat_map(|o| o.terms));
        if !inhomogeneous {
            report.quasipolynomial = Some(quasipolynomial(&series));
        }
        if goals.hsop {
            report.hsop = Some(hsop(&cone, &rays, &series, cfg.verbose)?);
        }
        report.series = Some(series);
    }

    if goals.class_group {
        report.class_group = Some(class_group(&cone.forms));
    }

    if goals.module_generators {
        if inhomogeneous {
            return Err(Error::Input(
                "module generators over the input monoid need a homogeneous system".into(),
            ));
        }
        let g = input_generators(&cone).ok_or_else(|| {
            Error::Input("module generators need input generators in the lattice that span the cone".into())
        })?;
        let g = Matrix::from_rows(k, canonical_order(&cone, homogeneous_grading, g.to_rows()));
        report.closure_generators = Some(closure_generators(&cone, &g)?);
    }

    if goals.triangulation {
        report.triangulation = Some(describe(&cone, &tri, use_bottom));
    }
    Ok(report)
}

fn hsop(cone: &ComputedCone, rays: &[Vec<Integer>], series: &HilbertSeries, verbose: bool) -> Result<HsopReport> {
    let g = cone.grading.as_deref().ok_or(Error::NotGraded)?;
    let k = cone.dim();
    let rays_m = Matrix::from_rows(k, rays.to_vec());
    let heights = if k == 0 {
        Vec::new()
    } else {
        hsop_heights(&rays_m, &cone.forms)?
    };
    let degs: Vec<u64> = rays
        .iter()
        .map(|r| small(&dot(g, r)).map(|x| x as u64))
        .collect::<Result<_>>()?;
    let degrees = hsop_degrees(&heights, &degs);
    if verbose {
        let h: Vec<String> = heights.iter().map(|x| x.to_string()).collect();
        let d: Vec<String> = degrees.iter().map(|x| x.to_string()).collect();
        eprintln!("Heights vector: {}\n\nDegrees of HSOP: {}", h.join(" "), d.join(" "));
    }
    let numerator = series.renumerate(&degrees)?;
    Ok(HsopReport {
        heights,
        degrees,
        numerator,
    })
}

/// Minimal generators of `C ∩ L` as a module over the monoid generated by `gens`.
fn closure_generators(cone: &ComputedCone, gens: &Matrix) -> Result<Vec<Vec<Integer>>> {
    let tri = lex_triangulation(gens)?;
    let closed: Vec<Vec<Vec<Integer>>> = tri
        .simplices
        .par_iter()
        .map(|s| parallelotope_points(&gens.select_rows(&s.gens), &vec![false; s.gens.len()]))
        .collect::<Result<_>>()?;
    let points: Vec<Vec<Integer>> = closed.into_iter().flatten().collect();
    let mins = minimal_module_generators(&points, gens, &cone.forms);
    let mut out: Vec<Vec<Integer>> = mins.iter().map(|v| cone.to_ambient(v)).collect();
    out.sort();
    Ok(out)
}

fn describe(cone: &ComputedCone, tri: &Triangulation, bottom: bool) -> TriangulationReport {
    TriangulationReport {
        bottom,
        generators: tri.generators.rows().map(|g| cone.to_ambient(g)).collect(),
        simplices: tri.simplices.iter().map(|s| (s.gens.clone(), s.det.clone())).collect(),
        detsum: tri.detsum.clone(),
    }
}
