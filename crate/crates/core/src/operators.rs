//! Named dissection pipelines: ordered chains of extract/shift/magnify/
//! multiply/add steps applied to an eta-quotient start series, compared
//! against a claimed closed form.

use crate::fps_gf2::{theta_sided, BitSeries, QuadraticForm, SeriesError};
use crate::fps_int::{singular_series, SingularSpec};
use crate::qexpr::QExpr;

/// Final truncation below this is rejected: too short to mean anything.
pub const MIN_FINAL_TRUNC: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PipelineStep {
    /// Keep coefficients at indices `m*n + r`, reindexed by `n`.
    Extract { m: usize, r: usize },
    /// Multiply by `q^c`.
    Shift(usize),
    /// Substitute `q -> q^t`.
    Magnify(usize),
    /// Shorten the truncation window.
    Retrunc(usize),
    /// Multiply by an eta-monomial sum evaluated at the current truncation.
    MulExpr(QExpr),
    /// Add an eta-monomial sum evaluated at the current truncation.
    AddExpr(QExpr),
}

/// Where a pipeline starts: a written eta-quotient, or the parity series of
/// the `(4k, k)` singular overpartition counts expanded from exact integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Start {
    Expr(QExpr),
    Singular(u64),
}

#[derive(Debug, Clone)]
pub struct Pipeline {
    pub start: Start,
    pub steps: Vec<PipelineStep>,
    pub claim: QExpr,
}

#[derive(Debug)]
pub struct RunOutcome {
    pub result: BitSeries,
    pub claimed: BitSeries,
    pub first_mismatch: Option<usize>,
}

impl RunOutcome {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl Pipeline {
    pub fn new(start: QExpr, steps: Vec<PipelineStep>, claim: QExpr) -> Self {
        Pipeline { start: Start::Expr(start), steps, claim }
    }

    pub fn with_start(start: Start, steps: Vec<PipelineStep>, claim: QExpr) -> Self {
        Pipeline { start, steps, claim }
    }

    /// Truncation after applying the steps to a start series of `n` terms.
    pub fn final_trunc(&self, n: usize) -> usize {
        self.steps.iter().fold(n, |t, s| match s {
            PipelineStep::Extract { m, r } => t.saturating_sub(*r).div_ceil(*m),
            PipelineStep::Magnify(t2) => t * t2,
            PipelineStep::Retrunc(n2) => (*n2).min(t),
            _ => t,
        })
    }

    /// Smallest start truncation for which the final truncation is at least
    /// `want`.
    pub fn required_start_trunc(&self, want: usize) -> usize {
        required_start_trunc(&self.steps, want)
    }

    /// Evaluate the start at `n` terms, apply the steps, evaluate the claim
    /// at the final truncation, and report the first differing index.
    pub fn run(&self, n: usize) -> Result<RunOutcome, SeriesError> {
        let ft = self.final_trunc(n);
        if ft < MIN_FINAL_TRUNC {
            return Err(SeriesError::InsufficientTrunc {
                need: self.required_start_trunc(MIN_FINAL_TRUNC),
                have: n,
            });
        }
        let mut s = match &self.start {
            Start::Expr(e) => e.evaluate(n)?,
            Start::Singular(k) => singular_series(SingularSpec::four_k(*k), n).reduce_mod2(),
        };
        for step in &self.steps {
            s = apply_step(&s, step)?;
        }
        let claimed = self.claim.evaluate(s.trunc())?;
        let first_mismatch = s.first_mismatch(&claimed);
        Ok(RunOutcome { result: s, claimed, first_mismatch })
    }
}

/// Smallest start truncation for which applying `steps` leaves at least
/// `want` terms.
pub fn required_start_trunc(steps: &[PipelineStep], want: usize) -> usize {
    steps.iter().rev().fold(want, |t, s| match s {
        PipelineStep::Extract { m, r } => m * t + r,
        PipelineStep::Magnify(t2) => t.div_ceil(*t2),
        PipelineStep::Retrunc(_) => t,
        _ => t,
    })
}

pub fn apply_step(s: &BitSeries, step: &PipelineStep) -> Result<BitSeries, SeriesError> {
    Ok(match step {
        PipelineStep::Extract { m, r } => s.extract(*m, *r)?,
        PipelineStep::Shift(c) => s.shift(*c),
        PipelineStep::Magnify(t) => s.magnify(*t),
        PipelineStep::Retrunc(n) => s.retrunc(*n)?,
        PipelineStep::MulExpr(e) => s.mul(&e.evaluate(s.trunc())?)?,
        PipelineStep::AddExpr(e) => s.add(&e.evaluate(s.trunc())?)?,
    })
}

/// One summand of a theta certificate: `q^shift` times a product of theta
/// series with quadratic exponents (each optionally summed over n >= 1 only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaTerm {
    pub shift: usize,
    pub forms: Vec<(QuadraticForm, bool)>,
}

impl ThetaTerm {
    pub fn product(forms: &[(i64, i64, i64, i64)]) -> Self {
        ThetaTerm {
            shift: 0,
            forms: forms
                .iter()
                .map(|&(a2, a1, a0, d)| (QuadraticForm::new(a2, a1, a0, d).expect("valid form"), false))
                .collect(),
        }
    }

    pub fn shifted(mut self, c: usize) -> Self {
        self.shift = c;
        self
    }

    pub fn one_sided(mut self) -> Self {
        for f in &mut self.forms {
            f.1 = true;
        }
        self
    }
}

/// Sum of the certificate terms, truncated to `n`.
pub fn evaluate_certificate(terms: &[ThetaTerm], n: usize) -> Result<BitSeries, SeriesError> {
    let mut acc = BitSeries::zero(n);
    for term in terms {
        let mut prod = BitSeries::one(n);
        for (form, one_sided) in &term.forms {
            prod = prod.mul(&theta_sided(form, n, *one_sided))?;
        }
        acc = acc.add(&prod.shift(term.shift))?;
    }
    Ok(acc)
}

/// True when distinct integers can share a form value (the orbit pairs up
/// around a half-integer axis); such forms are enumerated over `n >= 0` so
/// each exponent is counted once instead of cancelling.
fn collides_on_integers(f: &QuadraticForm) -> bool {
    f.a1 % f.a2 == 0
}

/// Check a series against a two-factor Landau product and sample its parity
/// densities at powers of ten, the numerical lacunarity trend.
pub fn landau_check(
    result: &BitSeries,
    left: &QuadraticForm,
    right: &QuadraticForm,
) -> Result<(bool, Vec<(u64, (u64, u64))>), SeriesError> {
    if result.trunc() < 1000 {
        return Err(SeriesError::InsufficientTrunc { need: 1000, have: result.trunc() });
    }
    let term = ThetaTerm {
        shift: 0,
        forms: vec![
            (*left, collides_on_integers(left)),
            (*right, collides_on_integers(right)),
        ],
    };
    let cert = evaluate_certificate(std::slice::from_ref(&term), result.trunc())?;
    let equal = result.first_mismatch(&cert).is_none() && result.trunc() == cert.trunc();
    Ok((equal, density_trend(result)?))
}

/// Zero-density samples at `M = 100, 1000, ...` strictly below the
/// truncation.
pub fn density_trend(s: &BitSeries) -> Result<Vec<(u64, (u64, u64))>, SeriesError> {
    let mut out = Vec::new();
    let mut m = 100usize;
    while m < s.trunc() {
        out.push((m as u64, s.zero_density(m)?));
        m = m.saturating_mul(10);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fps_gf2::QuadraticForm;

    fn expr(s: &str) -> QExpr {
        QExpr::parse(s).unwrap()
    }

    #[test]
    fn k5_even_pipeline() {
        let p = Pipeline::new(
            expr("f5^3/f1"),
            vec![PipelineStep::Extract { m: 2, r: 0 }],
            expr("f2*f5"),
        );
        let out = p.run(2048).unwrap();
        assert!(out.passed(), "mismatch at {:?}", out.first_mismatch);
    }

    #[test]
    fn k7_odd_pipeline() {
        let p = Pipeline::new(
            expr("f7^3/f1"),
            vec![PipelineStep::Extract { m: 2, r: 1 }],
            expr("f1*f7^3"),
        );
        assert!(p.run(2048).unwrap().passed());
    }

    #[test]
    fn k11_4n1_pipeline() {
        let p = Pipeline::new(
            expr("f11^3/f1"),
            vec![
                PipelineStep::Extract { m: 2, r: 1 },
                PipelineStep::Extract { m: 2, r: 0 },
            ],
            expr("f1^3*f11"),
        );
        assert!(p.run(4100).unwrap().passed());
    }

    #[test]
    fn pipeline_rejects_short_final_trunc() {
        let p = Pipeline::new(
            expr("f5^3/f1"),
            vec![PipelineStep::Extract { m: 2, r: 0 }],
            expr("f2*f5"),
        );
        match p.run(100) {
            Err(SeriesError::InsufficientTrunc { need, have: 100 }) => {
                assert!(need >= 2 * MIN_FINAL_TRUNC, "hint {need}");
            }
            other => panic!("expected truncation error, got {other:?}"),
        }
    }

    #[test]
    fn final_trunc_bookkeeping() {
        let p = Pipeline::new(
            expr("f1"),
            vec![
                PipelineStep::Extract { m: 2, r: 1 },
                PipelineStep::Magnify(3),
                PipelineStep::Extract { m: 2, r: 0 },
            ],
            expr("f1"),
        );
        let n = p.required_start_trunc(500);
        assert!(p.final_trunc(n) >= 500);
        assert!(p.final_trunc(n - 4) < 500 || n < 8);
    }

    #[test]
    fn landau_k2_base_case() {
        // f_2^3/f_1 = f_1^5 = f_1^2 * f_1^3
        let s = expr("f2^3/f1").evaluate(2000).unwrap();
        let left = QuadraticForm::new(3, -1, 0, 1).unwrap(); // q^{r(3r-1)}
        let right = QuadraticForm::new(1, 1, 0, 2).unwrap(); // q^{(s^2+s)/2}
        let (equal, trend) = landau_check(&s, &left, &right).unwrap();
        assert!(equal);
        assert!(!trend.is_empty());
    }

    #[test]
    fn landau_detects_perturbation() {
        let s = expr("f2^3/f1").evaluate(2000).unwrap();
        let left = QuadraticForm::new(3, -1, 0, 1).unwrap();
        let wrong = QuadraticForm::new(1, 1, 2, 2).unwrap(); // shifted by q
        let (equal, _) = landau_check(&s, &left, &wrong).unwrap();
        assert!(!equal);
    }

    #[test]
    fn one_sided_certificate_f5_pow5() {
        // f_5^5/f_1 = sum_{c in {1,2,5,10}} sum_{n>=1} q^{c n^2 - 1}
        let n = 3000;
        let lhs = expr("f5^5/f1").evaluate(n).unwrap();
        let terms: Vec<ThetaTerm> = [1i64, 2, 5, 10]
            .iter()
            .map(|&c| ThetaTerm::product(&[(c, 0, -1, 1)]).one_sided())
            .collect();
        let cert = evaluate_certificate(&terms, n).unwrap();
        assert_eq!(lhs, cert);
    }
}
