//! Dense integer polynomials and the cyclotomic factors of `1 - t^g`.

use std::cell::RefCell;
use std::collections::HashMap;

use num_integer::Integer as _;

use crate::linalg::Integer;

/// Coefficients in ascending order of degree.
pub type Poly = Vec<Integer>;

pub fn trim(p: &mut Poly) {
    while p.last().is_some_and(Integer::is_zero) {
        p.pop();
    }
}

pub fn add(a: &[Integer], b: &[Integer]) -> Poly {
    let mut out: Poly = (0..a.len().max(b.len()))
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(&mut out);
    out
}

pub fn mul(a: &[Integer], b: &[Integer]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Integer::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trim(&mut out);
    out
}

/// Exact quotient `p / d` for a divisor with leading coefficient ±1, or
/// `None` if the division leaves a remainder.
pub fn div_exact(p: &[Integer], d: &[Integer]) -> Option<Poly> {
    let lead = d.last().expect("nonzero divisor");
    assert!(lead.abs().is_one(), "divisor must have unit leading coefficient");
    if p.is_empty() {
        return Some(Vec::new());
    }
    if p.len() < d.len() {
        return None;
    }
    let mut rem = p.to_vec();
    let mut q = vec![Integer::ZERO; p.len() - d.len() + 1];
    for i in (0..q.len()).rev() {
        let c = &rem[i + d.len() - 1] * lead;
        if c.is_zero() {
            continue;
        }
        for (j, dj) in d.iter().enumerate() {
            rem[i + j] -= &(&c * dj);
        }
        q[i] = c;
    }
    rem.iter().all(Integer::is_zero).then(|| {
        trim(&mut q);
        q
    })
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).take_while(|i| i * i <= n).filter(|i| n.is_multiple_of(*i)).collect();
    let large: Vec<u64> = out.iter().rev().map(|i| n / i).filter(|&j| j * j != n).collect();
    out.extend(large);
    out
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn euler_phi(n: u64) -> u64 {
    let (mut m, mut phi, mut p) = (n, n, 2);
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

thread_local! {
    static CYCLOTOMIC: RefCell<HashMap<u64, Poly>> = RefCell::new(HashMap::new());
}

/// The factor `ζ_q` of `1 - t^g = Π_{q | g} ζ_q`: `ζ_1 = 1 - t` and the
/// cyclotomic polynomial `Φ_q` for `q > 1`.
pub fn cyclotomic(q: u64) -> Poly {
    assert!(q > 0);
    if let Some(p) = CYCLOTOMIC.with(|c| c.borrow().get(&q).cloned()) {
        return p;
    }
    let p = if q == 1 {
        vec![Integer::ONE, -Integer::ONE]
    } else {
        let mut p = one_minus_t_pow(q);
        for d in divisors(q) {
            if d < q {
                p = div_exact(&p, &cyclotomic(d)).expect("cyclotomic factor");
            }
        }
        p
    };
    CYCLOTOMIC.with(|c| c.borrow_mut().insert(q, p.clone()));
    p
}

/// `1 - t^g`.
pub fn one_minus_t_pow(g: u64) -> Poly {
    let mut p = vec![Integer::ZERO; g as usize + 1];
    p[0] = Integer::ONE;
    p[g as usize] = -Integer::ONE;
    p
}

fn mobius(mut n: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        -sign
    } else {
        sign
    }
}

/// `c ← c · (1 - t^d)` as a power series truncated to `c.len()` terms.
pub fn mul_binomial(c: &mut [Integer], d: usize) {
    for i in (d..c.len()).rev() {
        let prev = c[i - d].clone();
        c[i] -= &prev;
    }
}

/// `c ← c / (1 - t^d)`, truncated.
pub fn div_binomial(c: &mut [Integer], d: usize) {
    for i in d..c.len() {
        let prev = c[i - d].clone();
        c[i] += &prev;
    }
}

/// `c ← c / ζ_q`, truncated, via `ζ_q = Π_{d | q} (1 - t^d)^{μ(q/d)}`.
/// Costs `O(len · #divisors)` however large `q` is.
pub fn div_cyclotomic(c: &mut [Integer], q: u64) {
    for d in divisors(q) {
        match mobius(q / d) {
            1 => div_binomial(c, d as usize),
            -1 => mul_binomial(c, d as usize),
            _ => {}
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ivec;

    #[test]
    fn cyclotomics_multiply_to_binomials() {
        assert_eq!(cyclotomic(1), ivec(&[1, -1]));
        assert_eq!(cyclotomic(3), ivec(&[1, 1, 1]));
        assert_eq!(cyclotomic(6), ivec(&[1, -1, 1]));
        for g in 1..=24 {
            let prod = divisors(g)
                .into_iter()
                .fold(ivec(&[1]), |acc, q| mul(&acc, &cyclotomic(q)));
            assert_eq!(prod, one_minus_t_pow(g));
        }
    }

    #[test]
    fn exact_division() {
        let p = mul(&ivec(&[1, 2, 3]), &cyclotomic(4));
        assert_eq!(div_exact(&p, &cyclotomic(4)), Some(ivec(&[1, 2, 3])));
        assert_eq!(div_exact(&ivec(&[1, 1]), &cyclotomic(1)), None);
    }

    #[test]
    fn truncated_series_operations() {
        // 1 / (1-t)^2
        let mut c = ivec(&[1, 0, 0, 0, 0]);
        div_binomial(&mut c, 1);
        div_binomial(&mut c, 1);
        assert_eq!(c, ivec(&[1, 2, 3, 4, 5]));
        mul_binomial(&mut c, 1);
        assert_eq!(c, ivec(&[1, 1, 1, 1, 1]));
        for q in 1..=30 {
            let mut c = cyclotomic(q);
            c.resize(3 * q as usize + 2, Integer::ZERO);
            div_cyclotomic(&mut c, q);
            assert!(c[0].is_one() && c[1..].iter().all(Integer::is_zero), "q = {q}");
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(9), vec![1, 3, 9]);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(97), 96);
        assert_eq!(euler_phi(127512), 127512 / 2 * 2 / 3 * 6 / 7 * 22 / 23 * 10 / 11);
        assert_eq!(
            (1..=12).map(mobius).collect::<Vec<_>>(),
            [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
        );
    }
}
