use super::hilbert::HilbertSeries;
use super::poly;
use crate::linalg::Integer;

/// `q(k) = (Σ_i c_i^{(k mod period)} k^i) / denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quasipolynomial {
    pub period: u64,
    /// One row per residue class, coefficients in ascending powers of `k`.
    pub rows: Vec<Vec<Integer>>,
    pub denominator: Integer,
    /// The formula is exact for all `k > valid_from`.
    pub valid_from: i64,
}

impl Quasipolynomial {
    /// Degree of the quasipolynomial, `None` for the zero function.
    pub fn degree(&self) -> Option<usize> {
        self.rows.first().map(|r| r.len()).filter(|&n| n > 0).map(|n| n - 1)
    }

    pub fn eval(&self, k: i64) -> Integer {
        if self.rows.is_empty() {
            return Integer::ZERO;
        }
        let row = &self.rows[k.rem_euclid(self.period as i64) as usize];
        let kk = Integer::from(k);
        let mut acc = Integer::ZERO;
        for c in row.iter().rev() {
            acc = &(&acc * &kk) + c;
        }
        acc.div_exact(&self.denominator)
    }
}

/// Integer polynomial `D · p(k)` through `(a + tL, y_t)`, `t = 0..r`, for
/// `D = (r-1)! · L^{r-1}`, by Newton's forward differences: `p(k) =
/// Σ_t Δ^t y_0 · Π_{s<t} (k - a - sL) / (t! L^t)`.
fn interpolate(a: i64, l: i64, ys: &[Integer], scale: &Integer) -> Vec<Integer> {
    let r = ys.len();
    let mut diffs = ys.to_vec();
    let mut out = vec![Integer::ZERO; r];
    let mut basis = vec![Integer::ONE]; // Π_{s<t} (k - a - sL)
    let mut t_fact_l = Integer::ONE; // t! L^t
    for t in 0..r {
        let f = &scale.div_exact(&t_fact_l) * &diffs[0];
        for (i, b) in basis.iter().enumerate() {
            out[i] += &(&f * b);
        }
        for i in 0..r - 1 - t {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        let root = Integer::from(a + t as i64 * l);
        let mut next = vec![Integer::ZERO; basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] += b;
            next[i] -= &(b * &root);
        }
        basis = next;
        t_fact_l = &(&t_fact_l * &Integer::from(t as i64 + 1)) * &Integer::from(l);
    }
    out
}

/// The Hilbert quasipolynomial: interpolates the series coefficients on
/// each residue class modulo the lcm of the cyclotomic orders, past the
/// degree of the rational function.
pub fn quasipolynomial(hs: &HilbertSeries) -> Quasipolynomial {
    let valid_from = hs.rational_degree();
    let r = hs.pole_order() as usize;
    if r == 0 {
        return Quasipolynomial {
            period: 1,
            rows: Vec::new(),
            denominator: Integer::ONE,
            valid_from,
        };
    }
    let big_l = hs.cyclotomic_factors().keys().fold(1, |a, &q| poly::lcm(a, q));
    let l = big_l as i64;
    let k0 = (valid_from.div_euclid(l) + 1) * l;
    let hi = k0 + l * r as i64;
    let coeffs = hs.coefficients(k0, hi);
    let mut scale = Integer::ONE;
    for t in 1..r as i64 {
        scale = &(&scale * &Integer::from(t)) * &Integer::from(l);
    }
    let rows: Vec<Vec<Integer>> = (0..l)
        .map(|j| {
            let ys: Vec<Integer> = (0..r as i64).map(|t| coeffs[(j + t * l) as usize].clone()).collect();
            interpolate(k0 + j, l, &ys, &scale)
        })
        .collect();
    let period = poly::divisors(big_l)
        .into_iter()
        .find(|&p| (0..big_l as usize).all(|j| rows[j] == rows[j % p as usize]))
        .unwrap_or(big_l);
    let mut rows = rows;
    rows.truncate(period as usize);
    let g = rows.iter().flatten().fold(scale.clone(), |acc, c| acc.gcd(c));
    let rows = rows
        .into_iter()
        .map(|row| row.iter().map(|c| c.div_exact(&g)).collect())
        .collect();
    let denominator = scale.div_exact(&g);
    Quasipolynomial {
        period,
        rows,
        denominator,
        valid_from,
    }
}
