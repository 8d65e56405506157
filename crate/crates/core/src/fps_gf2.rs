//! Truncated formal power series over GF(2), bit-packed into 64-bit words.
//!
//! A [`BitSeries`] stores the coefficients `c_0..c_{N-1}` of a series known
//! modulo `q^N`. All arithmetic is carryless: addition is XOR, multiplication
//! is the GF(2) Cauchy product, and squaring doubles every exponent
//! (Frobenius). Binary operations require equal truncation; shortening is an
//! explicit [`BitSeries::retrunc`].

use std::fmt;

use thiserror::Error;

const WORD_BITS: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("truncation mismatch: {left} vs {right}")]
    TruncMismatch { left: usize, right: usize },
    #[error("series not invertible: constant term is 0")]
    NonInvertible,
    #[error("eta exponent must be nonzero (write q^0 for the unit series)")]
    ZeroExponent,
    #[error("residue {r} out of range for modulus {m}")]
    ResidueOutOfRange { m: usize, r: usize },
    #[error("need truncation >= {need}, have {have}")]
    InsufficientTrunc { need: usize, have: usize },
    #[error("invalid parameter: {0}")]
    Invalid(String),
}

/// `n -> (a2*n^2 + a1*n + a0) / denom`, evaluated over all integers `n`,
/// with `a2 > 0` so that only finitely many exponents land below any bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraticForm {
    pub a2: i64,
    pub a1: i64,
    pub a0: i64,
    pub denom: i64,
}

impl QuadraticForm {
    pub fn new(a2: i64, a1: i64, a0: i64, denom: i64) -> Result<Self, SeriesError> {
        if a2 <= 0 {
            return Err(SeriesError::Invalid(format!("a2 must be positive, got {a2}")));
        }
        if denom <= 0 {
            return Err(SeriesError::Invalid(format!("denominator must be positive, got {denom}")));
        }
        let f = QuadraticForm { a2, a1, a0, denom };
        // integrality spot-check on 0, 1, -1, 2, -2
        for n in [0i64, 1, -1, 2, -2] {
            if f.numerator(n) % denom != 0 {
                return Err(SeriesError::Invalid(format!(
                    "({a2}n^2 + {a1}n + {a0}) not divisible by {denom} at n = {n}"
                )));
            }
        }
        Ok(f)
    }

    /// Exponent form of `f_t`: `t*r(3r-1)/2`, the generalized pentagonal
    /// numbers scaled by `t`.
    pub fn pentagonal(t: i64) -> Self {
        QuadraticForm { a2: 3 * t, a1: -t, a0: 0, denom: 2 }
    }

    /// Exponent form of `f_t^3`: `t*s(s+1)/2`, scaled triangular numbers.
    pub fn triangular(t: i64) -> Self {
        QuadraticForm { a2: t, a1: t, a0: 0, denom: 2 }
    }

    fn numerator(&self, n: i64) -> i64 {
        self.a2 * n * n + self.a1 * n + self.a0
    }

    pub fn eval(&self, n: i64) -> i64 {
        self.numerator(n) / self.denom
    }
}

/// Truncated power series over GF(2). Value-semantic: operations never
/// mutate their inputs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSeries {
    trunc: usize,
    words: Vec<u64>,
}

impl fmt::Debug for BitSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitSeries(N={}, support={:?})", self.trunc, self.support_up_to(32))
    }
}

fn words_for(trunc: usize) -> usize {
    trunc.div_ceil(WORD_BITS)
}

impl BitSeries {
    pub fn zero(trunc: usize) -> Self {
        assert!(trunc > 0, "truncation must be positive");
        BitSeries { trunc, words: vec![0; words_for(trunc)] }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.set(0);
        s
    }

    /// Build a series from the exponents of its set coefficients.
    pub fn from_support<I: IntoIterator<Item = usize>>(support: I, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        for i in support {
            assert!(i < trunc, "support index {i} >= truncation {trunc}");
            s.toggle(i);
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn get(&self, i: usize) -> bool {
        i < self.trunc && (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
    }

    fn toggle(&mut self, i: usize) {
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Zero out the bits at positions >= trunc in the last word.
    fn mask_tail(&mut self) {
        let extra = self.words.len() * WORD_BITS - self.trunc;
        if extra > 0 {
            let last = self.words.len() - 1;
            self.words[last] &= u64::MAX >> extra;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Ascending exponents of the set coefficients.
    pub fn support(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }

    fn support_up_to(&self, n: usize) -> Vec<usize> {
        self.iter_ones().take_while(|&i| i < n).collect()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    fn check_same_trunc(&self, other: &Self) -> Result<(), SeriesError> {
        if self.trunc != other.trunc {
            return Err(SeriesError::TruncMismatch { left: self.trunc, right: other.trunc });
        }
        Ok(())
    }

    /// Coefficient-wise XOR.
    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same_trunc(other)?;
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect();
        Ok(BitSeries { trunc: self.trunc, words })
    }

    /// Carryless Cauchy product, truncated. Baseline word-level shift-XOR
    /// convolution driven by the operand with fewer set coefficients.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same_trunc(other)?;
        let (sparse, dense) = if self.count_ones() <= other.count_ones() {
            (self, other)
        } else {
            (other, self)
        };
        let wlen = self.words.len();
        let mut res = vec![0u64; wlen];
        for i in sparse.iter_ones() {
            let wo = i / WORD_BITS;
            let bo = i % WORD_BITS;
            if bo == 0 {
                for j in 0..wlen - wo {
                    res[wo + j] ^= dense.words[j];
                }
            } else {
                for j in 0..wlen - wo {
                    res[wo + j] ^= dense.words[j] << bo;
                    if wo + j + 1 < wlen {
                        res[wo + j + 1] ^= dense.words[j] >> (WORD_BITS - bo);
                    }
                }
            }
        }
        let mut out = BitSeries { trunc: self.trunc, words: res };
        out.mask_tail();
        Ok(out)
    }

    /// Sub-quadratic (Karatsuba on word blocks) product. Bit-identical to
    /// [`BitSeries::mul`]; kept separate so the baseline stays the reference.
    pub fn mul_karatsuba(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same_trunc(other)?;
        let full = karatsuba::clmul(&self.words, &other.words);
        let wlen = self.words.len();
        let mut out = BitSeries { trunc: self.trunc, words: full[..wlen].to_vec() };
        out.mask_tail();
        Ok(out)
    }

    /// Frobenius squaring: over GF(2) the square doubles every exponent.
    pub fn square(&self) -> Self {
        let mut r = Self::zero(self.trunc);
        for i in self.iter_ones() {
            if 2 * i >= self.trunc {
                break;
            }
            r.set(2 * i);
        }
        r
    }

    /// Newton inversion with precision doubling: if `x` inverts `a` modulo
    /// `q^m`, then `a*x^2` inverts it modulo `q^{2m}`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        if !self.get(0) {
            return Err(SeriesError::NonInvertible);
        }
        let n = self.trunc;
        let mut x = BitSeries::one(1);
        let mut m = 1usize;
        while m < n {
            let m2 = (2 * m).min(n);
            let xsq = x.grow(m2).square();
            x = self.clone_retrunc(m2).mul(&xsq)?;
            m = m2;
        }
        Ok(x)
    }

    /// Schoolbook O(N^2) inversion recurrence; the independent cross-check
    /// for the Newton path.
    pub fn inverse_schoolbook(&self) -> Result<Self, SeriesError> {
        if !self.get(0) {
            return Err(SeriesError::NonInvertible);
        }
        let n = self.trunc;
        let a_support: Vec<usize> = self.iter_ones().filter(|&i| i > 0).collect();
        let mut b = Self::one(n);
        for i in 1..n {
            let mut bit = false;
            for &j in &a_support {
                if j > i {
                    break;
                }
                bit ^= b.get(i - j);
            }
            if bit {
                b.set(i);
            }
        }
        Ok(b)
    }

    /// Coefficient at `n` becomes the input coefficient at `m*n + r`:
    /// divide by `q^r`, then replace `q` by `q^{1/m}`.
    pub fn extract(&self, m: usize, r: usize) -> Result<Self, SeriesError> {
        if m == 0 || r >= m {
            return Err(SeriesError::ResidueOutOfRange { m, r });
        }
        if r >= self.trunc {
            return Err(SeriesError::InsufficientTrunc { need: r + 1, have: self.trunc });
        }
        let nt = (self.trunc - r).div_ceil(m);
        let mut out = Self::zero(nt);
        for i in 0..nt {
            if self.get(m * i + r) {
                out.set(i);
            }
        }
        Ok(out)
    }

    /// Substitute `q -> q^t`: coefficient at `t*n` is the input coefficient
    /// at `n`. The truncation scales to `t * trunc`.
    pub fn magnify(&self, t: usize) -> Self {
        assert!(t >= 1, "magnification factor must be >= 1");
        if t == 1 {
            return self.clone();
        }
        let nt = t * self.trunc;
        let mut out = Self::zero(nt);
        for i in self.iter_ones() {
            out.set(t * i);
        }
        out
    }

    /// Multiply by `q^c` within the same truncation window; the top `c`
    /// coefficients fall off.
    pub fn shift(&self, c: usize) -> Self {
        let mut out = Self::zero(self.trunc);
        for i in self.iter_ones() {
            match i.checked_add(c) {
                Some(j) if j < self.trunc => out.set(j),
                _ => break,
            }
        }
        out
    }

    /// Explicitly shorten to `n` terms.
    pub fn retrunc(&self, n: usize) -> Result<Self, SeriesError> {
        if n == 0 || n > self.trunc {
            return Err(SeriesError::InsufficientTrunc { need: n, have: self.trunc });
        }
        Ok(self.clone_retrunc(n))
    }

    fn clone_retrunc(&self, n: usize) -> Self {
        let mut out = BitSeries { trunc: n, words: self.words[..words_for(n)].to_vec() };
        out.mask_tail();
        out
    }

    /// Extend with zero coefficients up to `n` terms (internal: the padded
    /// tail is not a claim about the true series).
    fn grow(&self, n: usize) -> Self {
        debug_assert!(n >= self.trunc);
        let mut words = self.words.clone();
        words.resize(words_for(n), 0);
        BitSeries { trunc: n, words }
    }

    /// Least index where the two series differ, on the common prefix.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        let n = self.trunc.min(other.trunc);
        for i in 0..words_for(n) {
            let d = self.words[i] ^ other.words[i];
            if d != 0 {
                let idx = i * WORD_BITS + d.trailing_zeros() as usize;
                if idx < n {
                    return Some(idx);
                }
            }
        }
        None
    }

    /// `#{1 <= n <= m : c_n = 0} / m` as an exact `(zeros, m)` count.
    /// The range starts at `n = 1`.
    pub fn zero_density(&self, m: usize) -> Result<(u64, u64), SeriesError> {
        if m >= self.trunc {
            return Err(SeriesError::InsufficientTrunc { need: m + 1, have: self.trunc });
        }
        let ones = self.iter_ones().filter(|&i| i >= 1 && i <= m).count() as u64;
        Ok((m as u64 - ones, m as u64))
    }
}

/// `sum over n in Z (or n >= 0 if one_sided) of q^{form(n)}` for exponents in
/// `[0, N)`, coefficients mod 2: colliding exponents cancel (XOR).
///
/// One-sided enumeration matters for forms whose orbit pairs up over Z, such
/// as the triangular `(s^2+s)/2` where `s` and `-s-1` collide: two-sided they
/// cancel to nothing, one-sided each exponent is counted once.
pub fn theta_sided(form: &QuadraticForm, n: usize, one_sided: bool) -> BitSeries {
    let mut out = BitSeries::zero(n);
    let limit = (n as i64) * form.denom + form.a0.abs();
    // |m| bound from the quadratic formula, with a safety margin
    let disc = (form.a1 as f64).powi(2) + 4.0 * form.a2 as f64 * limit as f64;
    let bound = ((form.a1.abs() as f64 + disc.sqrt()) / (2.0 * form.a2 as f64)).ceil() as i64 + 1;
    let lo = if one_sided { 0 } else { -bound };
    for m in lo..=bound {
        let num = form.numerator(m);
        if num % form.denom != 0 {
            debug_assert!(false, "non-integral theta exponent at n = {m}");
            continue;
        }
        let e = num / form.denom;
        if e >= 0 && (e as usize) < n {
            out.toggle(e as usize);
        }
    }
    out
}

pub fn theta(form: &QuadraticForm, n: usize) -> BitSeries {
    theta_sided(form, n, false)
}

/// `(f_t)^e` mod 2 truncated to `n` terms. Positive powers are assembled by
/// Frobenius squaring (square = index doubling), negative powers via the
/// Newton inverse.
pub fn eta_power(t: usize, e: i64, n: usize) -> Result<BitSeries, SeriesError> {
    if t == 0 {
        return Err(SeriesError::Invalid("eta index t must be >= 1".into()));
    }
    if n == 0 {
        return Err(SeriesError::Invalid("truncation must be >= 1".into()));
    }
    if e == 0 {
        return Err(SeriesError::ZeroExponent);
    }
    if e < 0 {
        return eta_power(t, -e, n)?.inverse();
    }
    if e == 1 {
        return Ok(theta(&QuadraticForm::pentagonal(t as i64), n));
    }
    let half = eta_power(t, e / 2, n.div_ceil(2))?;
    let sq = half.magnify(2).retrunc(n).unwrap_or_else(|_| half.magnify(2));
    if e % 2 == 0 {
        Ok(sq)
    } else {
        sq.mul(&eta_power(t, 1, n)?)
    }
}

mod karatsuba {
    const THRESHOLD: usize = 24;

    /// Full carryless product of two word slices, length `a.len() + b.len()`.
    pub fn clmul(a: &[u64], b: &[u64]) -> Vec<u64> {
        let out_len = a.len() + b.len();
        if a.len().min(b.len()) <= THRESHOLD {
            return naive(a, b, out_len);
        }
        let h = a.len().max(b.len()).div_ceil(2);
        let (a0, a1) = split(a, h);
        let (b0, b1) = split(b, h);
        let z0 = clmul(a0, b0);
        let z2 = clmul(a1, b1);
        let z1 = clmul(&xor_slices(a0, a1), &xor_slices(b0, b1));
        let mut out = vec![0u64; out_len];
        xor_into(&mut out, 0, &z0);
        xor_into(&mut out, h, &z1);
        xor_into(&mut out, h, &z0);
        xor_into(&mut out, h, &z2);
        xor_into(&mut out, 2 * h, &z2);
        out
    }

    fn split(a: &[u64], h: usize) -> (&[u64], &[u64]) {
        if a.len() <= h {
            (a, &[])
        } else {
            a.split_at(h)
        }
    }

    fn xor_slices(a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; a.len().max(b.len())];
        out[..a.len()].copy_from_slice(a);
        for (o, x) in out.iter_mut().zip(b) {
            *o ^= x;
        }
        out
    }

    fn xor_into(out: &mut [u64], off: usize, src: &[u64]) {
        for (i, &w) in src.iter().enumerate() {
            if off + i < out.len() {
                out[off + i] ^= w;
            }
        }
    }

    fn naive(a: &[u64], b: &[u64], out_len: usize) -> Vec<u64> {
        let mut out = vec![0u64; out_len];
        let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        for (i, &w) in small.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let bo = w.trailing_zeros() as usize;
                w &= w - 1;
                for (j, &bw) in big.iter().enumerate() {
                    if i + j < out.len() {
                        out[i + j] ^= bw << bo;
                    }
                    if bo > 0 && i + j + 1 < out.len() {
                        out[i + j + 1] ^= bw >> (64 - bo);
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(support: &[usize], n: usize) -> BitSeries {
        BitSeries::from_support(support.iter().copied(), n)
    }

    #[test]
    fn add_is_char_2() {
        let s = series(&[0, 3, 7], 16);
        assert!(s.add(&s).unwrap().is_zero());
        assert_eq!(s.add(&BitSeries::zero(16)).unwrap(), s);
    }

    #[test]
    fn add_rejects_trunc_mismatch() {
        let a = BitSeries::one(8);
        let b = BitSeries::one(9);
        assert_eq!(a.add(&b), Err(SeriesError::TruncMismatch { left: 8, right: 9 }));
    }

    #[test]
    fn mul_one_plus_q_squared() {
        // (1 + q)^2 = 1 + q^2 over GF(2)
        let a = series(&[0, 1], 8);
        assert_eq!(a.mul(&a).unwrap(), series(&[0, 2], 8));
    }

    #[test]
    fn mul_matches_power() {
        let f1 = eta_power(1, 1, 256).unwrap();
        let f1sq = eta_power(1, 2, 256).unwrap();
        assert_eq!(f1.mul(&f1).unwrap(), f1sq);
    }

    #[test]
    fn square_is_self_mul() {
        let a = series(&[0, 1, 4, 9, 33, 100], 256);
        assert_eq!(a.square(), a.mul(&a).unwrap());
    }

    #[test]
    fn inverse_of_one() {
        let one = BitSeries::one(32);
        assert_eq!(one.inverse().unwrap(), one);
    }

    #[test]
    fn inverse_rejects_zero_constant() {
        let a = series(&[1, 2], 8);
        assert_eq!(a.inverse(), Err(SeriesError::NonInvertible));
    }

    #[test]
    fn inverse_round_trip() {
        let a = series(&[0, 1, 5, 17, 80, 511], 512);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), BitSeries::one(512));
        assert_eq!(inv.mul(&a).unwrap(), BitSeries::one(512));
    }

    #[test]
    fn inverse_newton_matches_schoolbook() {
        let f1 = eta_power(1, 1, 300).unwrap();
        assert_eq!(f1.inverse().unwrap(), f1.inverse_schoolbook().unwrap());
        let a = series(&[0, 2, 3, 11, 40], 300);
        assert_eq!(a.inverse().unwrap(), a.inverse_schoolbook().unwrap());
    }

    #[test]
    fn inverse_f1_gives_partition_parity() {
        // p(n) = 1,1,2,3,5,7 for n = 0..5, so mod 2: 1,1,0,1,1,1
        let inv = eta_power(1, 1, 64).unwrap().inverse().unwrap();
        let expect = [true, true, false, true, true, true];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(inv.get(n), e, "p({n}) mod 2");
        }
    }

    #[test]
    fn eta_f1_is_pentagonal() {
        let f1 = eta_power(1, 1, 8).unwrap();
        assert_eq!(f1.support(), vec![0, 1, 2, 5, 7]);
    }

    #[test]
    fn eta_f1_cubed_is_triangular() {
        let c = eta_power(1, 3, 12).unwrap();
        assert_eq!(c.support(), vec![0, 1, 3, 6, 10]);
    }

    #[test]
    fn eta_f2_is_magnified_f1() {
        let f2 = eta_power(2, 1, 100).unwrap();
        let f1 = eta_power(1, 1, 50).unwrap();
        assert_eq!(f2, f1.magnify(2));
    }

    #[test]
    fn eta_rejects_zero_exponent() {
        assert_eq!(eta_power(1, 0, 8), Err(SeriesError::ZeroExponent));
    }

    #[test]
    fn theta_pentagonal_is_f1() {
        let n = 500;
        assert_eq!(theta(&QuadraticForm::pentagonal(1), n), eta_power(1, 1, n).unwrap());
    }

    #[test]
    fn theta_three_core() {
        // f_3^3 / f_1 = sum q^{3m^2 + 2m} (3-core support m(3m + 2))
        let n = 2000;
        let lhs = eta_power(3, 3, n)
            .unwrap()
            .mul(&eta_power(1, -1, n).unwrap())
            .unwrap();
        let rhs = theta(&QuadraticForm::new(3, 2, 0, 1).unwrap(), n);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn theta_squares() {
        // two-sided: n and -n collide and cancel, leaving only n = 0
        let form = QuadraticForm::new(1, 0, 0, 1).unwrap();
        assert_eq!(theta(&form, 100).support(), vec![0]);
        // one-sided enumeration keeps each perfect square once
        let s = theta_sided(&form, 100, true);
        assert_eq!(s.support(), vec![0, 1, 4, 9, 16, 25, 36, 49, 64, 81]);
    }

    #[test]
    fn quadratic_form_rejects_bad_input() {
        assert!(QuadraticForm::new(0, 1, 0, 1).is_err());
        assert!(QuadraticForm::new(1, 0, 1, 2).is_err()); // n^2+1 odd at n=0
    }

    #[test]
    fn extract_identity_and_even_support() {
        let a = series(&[0, 3, 5, 10], 16);
        assert_eq!(a.extract(1, 0).unwrap(), a);
        let f2 = eta_power(2, 1, 64).unwrap();
        assert!(f2.extract(2, 1).unwrap().is_zero());
    }

    #[test]
    fn extract_rejects_bad_residue() {
        let a = BitSeries::one(8);
        assert_eq!(a.extract(2, 2), Err(SeriesError::ResidueOutOfRange { m: 2, r: 2 }));
    }

    #[test]
    fn extract_trunc_len() {
        let a = BitSeries::zero(10);
        assert_eq!(a.extract(3, 1).unwrap().trunc(), 3);
        assert_eq!(a.extract(2, 0).unwrap().trunc(), 5);
    }

    #[test]
    fn magnify_extract_adjunction() {
        let a = series(&[0, 1, 4, 7], 32);
        assert_eq!(a.magnify(1), a);
        assert_eq!(a.magnify(3).extract(3, 0).unwrap(), a);
        assert!(a.magnify(3).extract(3, 1).unwrap().is_zero());
        assert!(a.magnify(3).extract(3, 2).unwrap().is_zero());
    }

    #[test]
    fn shift_bookkeeping() {
        let a = series(&[0, 2, 5], 16);
        assert_eq!(a.shift(0), a);
        assert_eq!(a.shift(1).extract(2, 1).unwrap(), a.extract(2, 0).unwrap());
        // top coefficients fall off
        assert_eq!(series(&[15], 16).shift(1), BitSeries::zero(16));
    }

    #[test]
    fn zero_density_of_one() {
        let one = BitSeries::one(128);
        assert_eq!(one.zero_density(100).unwrap(), (100, 100));
        assert_eq!(one.zero_density(128), Err(SeriesError::InsufficientTrunc { need: 129, have: 128 }));
    }

    #[test]
    fn karatsuba_matches_baseline() {
        let n = 4096;
        let f1 = eta_power(1, 5, n).unwrap();
        let inv = eta_power(1, -1, n).unwrap();
        assert_eq!(f1.mul(&inv).unwrap(), f1.mul_karatsuba(&inv).unwrap());
    }

    #[test]
    fn keith_f1f3_cubed() {
        // (f_1 f_3)^3 = f_1^12 + q f_3^12
        let n = 2000;
        let lhs = eta_power(1, 3, n).unwrap().mul(&eta_power(3, 3, n).unwrap()).unwrap();
        let rhs = eta_power(1, 12, n)
            .unwrap()
            .add(&eta_power(3, 12, n).unwrap().shift(1))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn c7_extraction_chain() {
        // c_7(4n) series: extract (2,0) twice from f_7^7/f_1 equals
        // (extract (2,0) twice from f_7^3/f_1) * f_7
        let n = 4000;
        let c7 = eta_power(7, 7, n).unwrap().mul(&eta_power(1, -1, n).unwrap()).unwrap();
        let lhs = c7.extract(2, 0).unwrap().extract(2, 0).unwrap();
        let base = eta_power(7, 3, n).unwrap().mul(&eta_power(1, -1, n).unwrap()).unwrap();
        let chain = base.extract(2, 0).unwrap().extract(2, 0).unwrap();
        let m = chain.trunc();
        let rhs = chain.mul(&eta_power(7, 1, m).unwrap()).unwrap();
        assert_eq!(lhs.retrunc(m).unwrap(), rhs);
    }
}
