//! Exact-integer series for singular overpartition counts, plus an
//! independent brute-force enumerator.
//!
//! [`singular_series`] expands the generating function
//! `prod (1 - q^{km})(1 + q^{k(m-1)+i})(1 + q^{km-i}) / (1 - q^m)` with
//! arbitrary-precision coefficients; [`brute_force_count`] counts
//! overpartitions directly by recursive enumeration. The two paths share no
//! code, so agreement between them is meaningful.

use num_bigint::BigInt;

use crate::fps_gf2::BitSeries;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("invalid (k, i) = ({k}, {i}): need 0 < i < k/2")]
    InvalidSpec { k: u64, i: u64 },
    #[error("n = {0} exceeds the brute-force guardrail of 40")]
    TooLarge(u64),
}

/// Parameters `(k, i)` of a singular overpartition family. The `(4k, k)`
/// family that feeds the theorem pipelines is [`SingularSpec::four_k`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingularSpec {
    k: u64,
    i: u64,
}

impl SingularSpec {
    pub fn new(k: u64, i: u64) -> Result<Self, OracleError> {
        if i == 0 || 2 * i >= k {
            return Err(OracleError::InvalidSpec { k, i });
        }
        Ok(SingularSpec { k, i })
    }

    /// The `(4k, k)` family.
    pub fn four_k(k: u64) -> Self {
        assert!(k >= 1);
        SingularSpec { k: 4 * k, i: k }
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn i(&self) -> u64 {
        self.i
    }
}

/// Truncated power series with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    pub fn one(trunc: usize) -> Self {
        assert!(trunc > 0);
        let mut coeffs = vec![BigInt::from(0); trunc];
        coeffs[0] = BigInt::from(1);
        IntSeries { coeffs }
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    /// Multiply in place by `1 + sign * q^e`.
    fn apply_binomial(&mut self, e: usize, sign: i8) {
        let n = self.coeffs.len();
        if e == 0 || e >= n {
            return;
        }
        for idx in (e..n).rev() {
            let t = self.coeffs[idx - e].clone();
            if sign > 0 {
                self.coeffs[idx] += t;
            } else {
                self.coeffs[idx] -= t;
            }
        }
    }

    /// Divide in place by `1 - q^e`, i.e. multiply by the geometric series.
    fn apply_geometric(&mut self, e: usize) {
        let n = self.coeffs.len();
        for idx in e..n {
            let t = self.coeffs[idx - e].clone();
            self.coeffs[idx] += t;
        }
    }

    /// Reduce every coefficient mod 2.
    pub fn reduce_mod2(&self) -> BitSeries {
        BitSeries::from_support(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| c.bit(0))
                .map(|(n, _)| n),
            self.coeffs.len(),
        )
    }
}

/// Coefficients `C_{k,i}(0..N-1)`: the number of overpartitions with no part
/// divisible by `k` and only parts congruent to `+-i` mod `k` overlinable.
///
/// Factors are applied in increasing exponent order; division by `1 - q^m`
/// is multiplication by a truncated geometric series, so every intermediate
/// stays integral.
pub fn singular_series(spec: SingularSpec, n: usize) -> IntSeries {
    let k = spec.k as usize;
    let i = spec.i as usize;
    let mut s = IntSeries::one(n);
    let mut m = 1usize;
    loop {
        let e_neg = k * m; // (1 - q^{km})
        let e_lo = k * (m - 1) + i; // (1 + q^{k(m-1)+i})
        let e_hi = k * m - i; // (1 + q^{km-i})
        if m >= n && e_lo >= n {
            break;
        }
        if e_neg < n {
            s.apply_binomial(e_neg, -1);
        }
        if e_lo < n {
            s.apply_binomial(e_lo, 1);
        }
        if e_hi < n {
            s.apply_binomial(e_hi, 1);
        }
        if m < n {
            s.apply_geometric(m);
        }
        m += 1;
    }
    s
}

/// Count `(k, i)`-singular overpartitions of `n` by direct recursive
/// enumeration of non-increasing part lists, with the first occurrence of a
/// part congruent to `+-i` mod `k` optionally overlined. Shares no code with
/// [`singular_series`].
pub fn brute_force_count(k: u64, i: u64, n: u64) -> Result<u64, OracleError> {
    if i == 0 || i >= k {
        return Err(OracleError::InvalidSpec { k, i });
    }
    if n > 40 {
        return Err(OracleError::TooLarge(n));
    }
    fn rec(n: u64, max_part: u64, k: u64, i: u64) -> u64 {
        if n == 0 {
            return 1;
        }
        let mut total = 0u64;
        for p in 1..=max_part.min(n) {
            if p % k == 0 {
                continue;
            }
            let overlinable = p % k == i % k || p % k == (k - i) % k;
            let ways = if overlinable { 2 } else { 1 };
            // choose the exact multiplicity of part p
            let mut used = p;
            while used <= n {
                total += ways * rec(n - used, p - 1, k, i);
                used += p;
            }
        }
        total
    }
    Ok(rec(n, n.max(1), k, i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fps_gf2::{eta_power, BitSeries};

    #[test]
    fn constant_term_is_one() {
        let s = singular_series(SingularSpec::four_k(1), 8);
        assert_eq!(*s.coeff(0), BigInt::from(1));
        assert_eq!(brute_force_count(4, 1, 0).unwrap(), 1);
    }

    #[test]
    fn four_one_small_values() {
        // n = 1: {1}, {1bar}
        assert_eq!(brute_force_count(4, 1, 1).unwrap(), 2);
        let s = singular_series(SingularSpec::four_k(1), 8);
        assert_eq!(*s.coeff(1), BigInt::from(2));
        // n = 2 = 1*(3*1 - 1) must be odd
        assert!(s.coeff(2).bit(0));
        assert_eq!(*s.coeff(2), BigInt::from(brute_force_count(4, 1, 2).unwrap()));
    }

    #[test]
    fn oracle_equivalence() {
        for (k, i) in [(4u64, 1u64), (8, 2), (12, 3), (20, 5), (7, 2), (9, 4)] {
            let s = singular_series(SingularSpec::new(k, i).unwrap(), 26);
            for n in 0..26u64 {
                assert_eq!(
                    *s.coeff(n as usize),
                    BigInt::from(brute_force_count(k, i, n).unwrap()),
                    "(k,i,n) = ({k},{i},{n})"
                );
            }
        }
    }

    #[test]
    fn positivity() {
        for k in [1u64, 3, 7] {
            let s = singular_series(SingularSpec::four_k(k), 120);
            for n in 0..120 {
                assert!(*s.coeff(n) >= BigInt::from(1), "k={k}, n={n}");
            }
        }
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!(SingularSpec::new(4, 0).is_err());
        assert!(SingularSpec::new(4, 2).is_err());
        assert!(brute_force_count(4, 0, 3).is_err());
        assert!(brute_force_count(4, 1, 41).is_err());
    }

    #[test]
    fn reduce_mod2_basics() {
        let mut s = IntSeries::one(8);
        s.apply_geometric(1); // 1/(1-q): all coefficients 1
        let bits = s.reduce_mod2();
        assert_eq!(bits.support(), (0..8).collect::<Vec<_>>());
        let even = IntSeries { coeffs: vec![BigInt::from(2); 6] };
        assert!(even.reduce_mod2().is_zero());
    }

    #[test]
    fn genfcn_reduction_small_k() {
        // sum C(4k,k)(n) q^n = f_k^3 / f_1 mod 2
        let n = 400;
        for k in [1usize, 2, 3, 5, 7] {
            let bits = singular_series(SingularSpec::four_k(k as u64), n).reduce_mod2();
            let eta = if k == 1 {
                eta_power(1, 2, n).unwrap()
            } else {
                eta_power(k, 3, n)
                    .unwrap()
                    .mul(&eta_power(1, -1, n).unwrap())
                    .unwrap()
            };
            assert_eq!(bits, eta, "k = {k}");
        }
        let _ = BitSeries::one(1);
    }
}
