use std::collections::BTreeMap;

use super::poly::{self, cyclotomic, divisors, Poly};
use crate::error::{Error, Result};
use crate::linalg::Integer;

/// A Hilbert series `t^shift · N(t) / Π_q ζ_q^{e_q}` in lowest terms.
///
/// `ζ_1 = 1 - t` and `ζ_q` is the q-th cyclotomic polynomial otherwise, so
/// every denominator `Π (1 - t^g)` is such a product. The numerator is
/// coprime to every factor present and has a nonzero constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Poly,
    shift: i64,
    factors: BTreeMap<u64, u32>,
}

fn cyclotomic_exponents(denominator: &[u64]) -> BTreeMap<u64, u32> {
    let mut e = BTreeMap::new();
    for &g in denominator {
        for q in divisors(g) {
            *e.entry(q).or_insert(0) += 1;
        }
    }
    e
}

/// Laurent polynomial with lowest exponent `shift`.
#[derive(Clone, Debug, Default)]
struct Laurent {
    shift: i64,
    coeffs: Poly,
}

impl Laurent {
    fn monomial(exp: i64) -> Laurent {
        Laurent {
            shift: exp,
            coeffs: vec![Integer::ONE],
        }
    }

    fn add(&self, other: &Laurent) -> Laurent {
        if self.coeffs.is_empty() {
            return other.clone();
        }
        if other.coeffs.is_empty() {
            return self.clone();
        }
        let shift = self.shift.min(other.shift);
        let pad = |l: &Laurent| {
            let mut v = vec![Integer::ZERO; (l.shift - shift) as usize];
            v.extend(l.coeffs.iter().cloned());
            v
        };
        let mut out = Laurent {
            shift,
            coeffs: poly::add(&pad(self), &pad(other)),
        };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        poly::trim(&mut self.coeffs);
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.shift += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.shift = 0;
        }
    }
}

impl HilbertSeries {
    pub fn zero() -> HilbertSeries {
        HilbertSeries {
            numerator: Vec::new(),
            shift: 0,
            factors: BTreeMap::new(),
        }
    }

    /// Sum of the terms `t^offset / Π_{g in denominator} (1 - t^g)`,
    /// brought to lowest terms.
    pub fn from_terms<I>(terms: I) -> HilbertSeries
    where
        I: IntoIterator<Item = (i64, Vec<u64>)>,
    {
        let mut groups: BTreeMap<Vec<u64>, Laurent> = BTreeMap::new();
        for (offset, mut denominator) in terms {
            denominator.sort_unstable();
            let entry = groups.entry(denominator).or_default();
            *entry = entry.add(&Laurent::monomial(offset));
        }
        let parts: Vec<(BTreeMap<u64, u32>, Laurent)> = groups
            .into_iter()
            .filter(|(_, l)| !l.coeffs.is_empty())
            .map(|(d, l)| (cyclotomic_exponents(&d), l))
            .collect();
        HilbertSeries::combine(parts)
    }

    /// Adds series of the form `Laurent / Π ζ_q^{e_q}` over a common denominator.
    fn combine(parts: Vec<(BTreeMap<u64, u32>, Laurent)>) -> HilbertSeries {
        let mut common: BTreeMap<u64, u32> = BTreeMap::new();
        for (e, _) in &parts {
            for (&q, &m) in e {
                let c = common.entry(q).or_insert(0);
                *c = (*c).max(m);
            }
        }
        let mut total = Laurent::default();
        for (e, mut l) in parts {
            for (&q, &m) in &common {
                for _ in e.get(&q).copied().unwrap_or(0)..m {
                    l.coeffs = poly::mul(&l.coeffs, &cyclotomic(q));
                }
            }
            total = total.add(&l);
        }
        total.normalize();
        if total.coeffs.is_empty() {
            return HilbertSeries::zero();
        }
        let mut series = HilbertSeries {
            numerator: total.coeffs,
            shift: total.shift,
            factors: common,
        };
        series.reduce();
        series
    }

    fn reduce(&mut self) {
        let orders: Vec<u64> = self.factors.keys().rev().copied().collect();
        for q in orders {
            let z = cyclotomic(q);
            while self.factors[&q] > 0 {
                match poly::div_exact(&self.numerator, &z) {
                    Some(quot) => {
                        self.numerator = quot;
                        *self.factors.get_mut(&q).unwrap() -= 1;
                    }
                    None => break,
                }
            }
        }
        self.factors.retain(|_, m| *m > 0);
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        let as_part = |s: &HilbertSeries| {
            (
                s.factors.clone(),
                Laurent {
                    shift: s.shift,
                    coeffs: s.numerator.clone(),
                },
            )
        };
        let parts = [self, other]
            .into_iter()
            .filter(|s| !s.is_zero())
            .map(as_part)
            .collect();
        HilbertSeries::combine(parts)
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Numerator of the reduced form.
    pub fn numerator(&self) -> &[Integer] {
        &self.numerator
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Cyclotomic orders and multiplicities of the reduced denominator.
    pub fn cyclotomic_factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    /// Order of the pole at `t = 1`; the Krull dimension for a monoid.
    pub fn pole_order(&self) -> u32 {
        self.factors.get(&1).copied().unwrap_or(0)
    }

    /// Degree of the series as a rational function.
    pub fn rational_degree(&self) -> i64 {
        let den: u64 = self
            .factors
            .iter()
            .map(|(&q, &m)| poly::euler_phi(q) * u64::from(m))
            .sum();
        self.shift + self.numerator.len() as i64 - 1 - den as i64
    }

    /// The first `len` power series coefficients of `N(t) · Π (1 - t^g) / Π ζ_q^{e_q}`.
    fn truncated(&self, gs: &[u64], len: usize) -> Poly {
        let mut c = self.numerator.clone();
        c.resize(len.max(c.len()), Integer::ZERO);
        c.truncate(len);
        for &g in gs {
            poly::mul_binomial(&mut c, g as usize);
        }
        for (&q, &m) in &self.factors {
            for _ in 0..m {
                poly::div_cyclotomic(&mut c, q);
            }
        }
        c
    }

    /// Numerator over `Π (1 - t^g)`, whose cyclotomic exponents must
    /// dominate the reduced ones.
    fn over(&self, gs: &[u64]) -> Poly {
        let removed: u64 = self
            .factors
            .iter()
            .map(|(&q, &m)| poly::euler_phi(q) * u64::from(m))
            .sum();
        let deg = self.numerator.len() as u64 + gs.iter().sum::<u64>() - removed;
        let mut num = self.truncated(gs, deg as usize);
        poly::trim(&mut num);
        num
    }

    /// Rewrites the series over `(1 - t^{g_1}) ⋯ (1 - t^{g_r})`, exponents
    /// ascending, by repeatedly taking `g` as the lcm of the remaining
    /// cyclotomic orders. Returns the new numerator and the exponents.
    pub fn standard_denominator(&self) -> (Poly, Vec<u64>) {
        let mut e = self.factors.clone();
        let mut gs = Vec::new();
        while !e.is_empty() {
            let g = e.keys().fold(1, |acc, &q| poly::lcm(acc, q));
            for q in divisors(g) {
                if let Some(m) = e.get_mut(&q) {
                    *m -= 1;
                    if *m == 0 {
                        e.remove(&q);
                    }
                }
            }
            gs.push(g);
        }
        gs.sort_unstable();
        (self.over(&gs), gs)
    }

    /// Numerator of the series over `Π (1 - t^{g_i})`.
    pub fn renumerate(&self, gs: &[u64]) -> Result<Poly> {
        let target = cyclotomic_exponents(gs);
        for (q, &m) in &self.factors {
            if target.get(q).copied().unwrap_or(0) < m {
                return Err(Error::InexactDivision);
            }
        }
        Ok(self.over(gs))
    }

    /// Coefficients of `t^lo, ..., t^hi` of the power series expansion.
    pub fn coefficients(&self, lo: i64, hi: i64) -> Vec<Integer> {
        if hi < lo {
            return Vec::new();
        }
        let c = self.truncated(&[], (hi - self.shift + 1).max(0) as usize);
        (lo..=hi)
            .map(|k| match usize::try_from(k - self.shift) {
                Ok(i) => c[i].clone(),
                Err(_) => Integer::ZERO,
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ivec;

    fn simplex_12_21() -> HilbertSeries {
        HilbertSeries::from_terms([(0, vec![3, 3]), (2, vec![3, 3]), (4, vec![3, 3])])
    }

    #[test]
    fn reduced_and_standard_forms() {
        let h = simplex_12_21();
        assert_eq!(h.numerator(), ivec(&[1, -1, 1]).as_slice());
        let (num, gs) = h.standard_denominator();
        assert_eq!(num, ivec(&[1, -1, 1]));
        assert_eq!(gs, vec![1, 3]);
        assert_eq!(h.renumerate(&[3, 3]).unwrap(), ivec(&[1, 0, 1, 0, 1]));
        assert_eq!(h.renumerate(&[1, 3]).unwrap(), ivec(&[1, -1, 1]));
        assert_eq!(h.renumerate(&[1, 1]).unwrap_err(), Error::InexactDivision);
        assert_eq!(h.coefficients(0, 6), ivec(&[1, 0, 1, 2, 1, 2, 3]));
    }

    #[test]
    fn two_simplex_orthant() {
        // (1,0),(1,1) and (1,1),(0,1) under the total degree; the second excludes its facet R₊(1,1)
        let h = HilbertSeries::from_terms([(0, vec![1, 2]), (1, vec![2, 1])]);
        assert_eq!(h.numerator(), ivec(&[1]).as_slice());
        assert_eq!(h.cyclotomic_factors().clone(), BTreeMap::from([(1, 2)]));
        assert_eq!(h.coefficients(0, 15), (1..=16).map(Integer::from).collect::<Vec<_>>());
    }

    #[test]
    fn shifted_series() {
        let h = HilbertSeries::from_terms([(-1, vec![1]), (0, vec![1])]);
        assert_eq!(h.shift(), -1);
        assert_eq!(h.numerator(), ivec(&[1, 1]).as_slice());
        let (_, gs) = h.standard_denominator();
        assert_eq!(gs, vec![1]);
    }

    #[test]
    fn polynomial_and_zero() {
        let h = HilbertSeries::from_terms([(2, vec![]), (3, vec![])]);
        assert_eq!(h.shift(), 2);
        assert!(h.cyclotomic_factors().is_empty());
        assert!(HilbertSeries::from_terms(Vec::new()).is_zero());
        assert_eq!(h.add(&HilbertSeries::zero()), h);
    }
}
