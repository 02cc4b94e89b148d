use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::run::{Outcome, Report};
use crate::linalg::Integer;
use crate::series::HilbertSeries;

fn row(v: &[Integer]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn block(out: &mut String, header: &str, rows: &[Vec<Integer>]) {
    let _ = writeln!(out, "{} {header}:", rows.len());
    for r in rows {
        let _ = writeln!(out, "{}", row(r));
    }
    out.push('\n');
}

fn denominator(out: &mut String, exponents: &[u64]) {
    let mut mult: BTreeMap<u64, usize> = BTreeMap::new();
    for &g in exponents {
        *mult.entry(g).or_default() += 1;
    }
    let _ = writeln!(out, "denominator with {} factors:", exponents.len());
    for (g, m) in mult {
        let _ = writeln!(out, "{g}: {m}");
    }
    out.push('\n');
}

fn numerator(out: &mut String, num: &[Integer]) {
    if num.is_empty() {
        out.push_str("0\n");
    } else {
        let _ = writeln!(out, "{}", row(num));
    }
}

fn series(out: &mut String, hs: &HilbertSeries, inhomogeneous: bool) {
    let (num, gs) = hs.standard_denominator();
    out.push_str("Hilbert series:\n");
    numerator(out, &num);
    denominator(out, &gs);
    if inhomogeneous {
        let _ = writeln!(out, "shift = {}\n", hs.shift());
    }
}

/// Renders a report. Sections appear in a fixed order and only when computed.
pub fn write_report(r: &Report) -> String {
    let mut out = String::new();
    match r.outcome {
        Outcome::EmptyLattice => out.push_str("the system of equations and congruences has no integer solution\n\n"),
        Outcome::EmptyModule => out.push_str("the polyhedron contains no lattice points\n\n"),
        Outcome::Complete => {}
    }
    if let Some(hb) = &r.hilbert_basis {
        if r.grading_denom.is_some() {
            let (low, high): (Vec<_>, Vec<_>) = hb.iter().partition(|(d, _)| d.as_ref().is_some_and(Integer::is_one));
            let low: Vec<Vec<Integer>> = low.into_iter().map(|(_, v)| v.clone()).collect();
            let high: Vec<Vec<Integer>> = high.into_iter().map(|(_, v)| v.clone()).collect();
            block(&mut out, "Hilbert basis elements of degree 1", &low);
            block(&mut out, "further Hilbert basis elements of higher degree", &high);
        } else {
            let all: Vec<Vec<Integer>> = hb.iter().map(|(_, v)| v.clone()).collect();
            block(&mut out, "Hilbert basis elements", &all);
        }
    }
    if r.outcome != Outcome::EmptyLattice {
        if r.inhomogeneous {
            block(&mut out, "vertices of polyhedron", &r.vertices);
            block(&mut out, "extreme rays of recession cone", &r.extreme_rays);
        } else {
            block(&mut out, "extreme rays", &r.extreme_rays);
        }
    }
    if !r.maximal_subspace.is_empty() {
        block(&mut out, "basis elements of maximal subspace", &r.maximal_subspace);
    }
    if let Some(m) = &r.module_generators {
        block(&mut out, "module generators", m);
    }
    if let Some(m) = &r.closure_generators {
        block(&mut out, "module generators over original monoid", m);
    }
    if let Some(rec) = &r.recession_basis {
        block(&mut out, "Hilbert basis elements of recession monoid", rec);
    }
    if r.module_generators.is_some() {
        let _ = writeln!(out, "module rank = {}\n", r.module_rank.unwrap_or(0));
    }
    if let Some(hs) = &r.series {
        series(&mut out, hs, r.inhomogeneous);
    }
    if let Some(h) = &r.hsop {
        out.push_str("Hilbert series (HSOP):\n");
        numerator(&mut out, &h.numerator);
        let mut gs = h.degrees.clone();
        gs.sort_unstable();
        denominator(&mut out, &gs);
    }
    if let Some(q) = &r.quasipolynomial {
        let _ = writeln!(out, "Hilbert quasi-polynomial of period {}:", q.period);
        for (j, c) in q.rows.iter().enumerate() {
            let _ = writeln!(out, "{j}: {}", row(c));
        }
        let _ = writeln!(out, "with common denominator = {}\n", q.denominator);
    }
    if let Some(cl) = &r.class_group {
        let _ = writeln!(out, "class group = {cl}\n");
    }
    if let Some(t) = &r.triangulation {
        block(&mut out, "triangulation generators", &t.generators);
        let _ = writeln!(
            out,
            "{} simplicial cones in {} triangulation, determinant sum = {}:",
            t.simplices.len(),
            if t.bottom { "bottom" } else { "lex" },
            t.detsum
        );
        for (gens, det) in &t.simplices {
            let idx: Vec<String> = gens.iter().map(|i| (i + 1).to_string()).collect();
            let _ = writeln!(out, "{} : {det}", idx.join(" "));
        }
        out.push('\n');
    }
    let _ = writeln!(out, "embedding dimension = {}", r.embedding_dim);
    if r.outcome != Outcome::EmptyLattice {
        let _ = writeln!(out, "rank = {}", r.rank);
        if let Some(c) = &r.grading_denom {
            if !c.is_one() {
                let _ = writeln!(out, "grading denominator = {c}");
            }
        }
        let t = if r.transforms.is_empty() {
            "none".to_string()
        } else {
            r.transforms.join(", ")
        };
        let _ = writeln!(out, "coordinate transformations: {t}");
    }
    out
}
