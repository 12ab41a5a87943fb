//! Distillation-factory error analysis under i.i.d. Z errors: leading-order
//! infidelity, exact truncated-weight enumeration and Monte Carlo.
//!
//! Error model: each qubit independently suffers a Z error with probability
//! `p` (a faulty input T gate). An error `e` is *accepted* when it has trivial
//! syndrome (`e ⊥` every row of `hx`) and is an *undetected logical error* when
//! it is accepted and `e ∉ rowspace(hz)`. Both predicates are evaluated through
//! one precomputed column per qubit, packed into a `u128`: the low bits hold
//! the qubit's entries in a basis of `rowspace(hx)`, the high bits its entries
//! in a basis of `ker(hz)` (`e ∈ rowspace(hz)` iff `e ⊥ ker(hz)`).
//!
//! Monte Carlo randomness: ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64(seed)`. Sample `i` starts at 32-bit word position `2·n·i`
//! and draws one `u64` per qubit in qubit order; qubit `j` errs iff
//! `(x >> 11) · 2^-53 < p`. Streams are therefore independent of how samples
//! are sharded across threads, and counts are reduced as exact integers.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::distance::{
    big_unfolded_census, punctured_min_logicals, qrm_min_logicals, WeightCensus,
};
use crate::error::{Error, Result};
use crate::f2core::F2Matrix;
use crate::qrm::{big_unfolded, binomial, puncture_code, qrm_code, CssCode, QrmParams};

/// Maximum number of error supports [`truncated_rates`] will enumerate.
pub const ENUMERATION_BUDGET: u64 = 100_000_000;

/// Normal quantile used for the reported Wilson intervals (95%).
pub const WILSON_Z: f64 = 1.959_963_984_540_054;

/// A factory: its code, input/output description, and Z distance with the
/// number of minimum-weight nontrivial Z logicals (the leading-order prefactor).
#[derive(Clone, Debug, Serialize)]
pub struct FactorySpec {
    /// Short name.
    pub name: &'static str,
    /// Registry label of the code.
    pub code_label: &'static str,
    /// Input states.
    pub inputs: &'static str,
    /// Output states.
    pub outputs: &'static str,
    /// Z distance.
    pub d_z: usize,
    /// Number of minimum-weight nontrivial Z logicals.
    pub prefactor: u64,
    /// Code (not serialized).
    #[serde(skip)]
    pub code: CssCode,
}

impl FactorySpec {
    /// Leading-order output infidelity at input error rate `p`.
    #[must_use]
    pub fn leading_order(&self, p: f64) -> f64 {
        leading_order(self.prefactor, self.d_z, p)
    }
}

/// Wilson score interval.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Interval {
    /// Lower end.
    pub lo: f64,
    /// Upper end.
    pub hi: f64,
}

/// Wilson score interval for `successes` out of `trials` at normal quantile `z`.
#[must_use]
pub fn wilson(successes: u64, trials: u64, z: f64) -> Interval {
    if trials == 0 {
        return Interval { lo: 0.0, hi: 1.0 };
    }
    let n = trials as f64;
    let phat = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (phat + z2 / (2.0 * n)) / denom;
    let half = z * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    // The exact bounds at 0 and n are 0 and 1; the formula only reaches them
    // up to rounding.
    Interval {
        lo: if successes == 0 { 0.0 } else { (center - half).max(0.0) },
        hi: if successes >= trials { 1.0 } else { (center + half).min(1.0) },
    }
}

/// How a [`RateReport`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RateMethod {
    /// Exact sum over error supports up to a weight cutoff.
    Truncated,
    /// Sampling.
    MonteCarlo,
}

/// Acceptance and logical-error rates of a code at input error rate `p`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RateReport {
    /// Code label.
    pub code: String,
    /// Number of qubits.
    pub n: usize,
    /// Input error probability per qubit.
    pub p: f64,
    /// How the numbers were obtained.
    pub method: RateMethod,
    /// Probability of a trivial syndrome.
    pub p_accept: f64,
    /// Probability of an accepted error that is a nontrivial logical
    /// (unconditional output infidelity).
    pub p_undetected_logical: f64,
    /// `p_undetected_logical / p_accept` (output infidelity given acceptance).
    pub conditional_infidelity: f64,
    /// Truncation weight (truncated method).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_max: Option<usize>,
    /// Probability mass of errors heavier than `w_max` (truncated method).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation_bound: Option<f64>,
    /// Accepted supports per weight `0..=w_max` (truncated method).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub accepted_by_weight: Option<Vec<u64>>,
    /// Undetected logical supports per weight (truncated method).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub logical_by_weight: Option<Vec<u64>>,
    /// Samples drawn (Monte Carlo).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    /// Seed (Monte Carlo).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Accepted samples (Monte Carlo).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub accepted: Option<u64>,
    /// Accepted samples with a logical error (Monte Carlo).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub logical: Option<u64>,
    /// 95% Wilson interval for `p_accept` (Monte Carlo).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_accept_ci: Option<Interval>,
    /// 95% Wilson interval for `p_undetected_logical` (Monte Carlo).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_undetected_logical_ci: Option<Interval>,
    /// 95% Wilson interval for `conditional_infidelity` (Monte Carlo).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conditional_infidelity_ci: Option<Interval>,
}

impl RateReport {
    fn base(code: &CssCode, p: f64, method: RateMethod) -> Self {
        Self {
            code: code.label().to_string(),
            n: code.n(),
            p,
            method,
            p_accept: 0.0,
            p_undetected_logical: 0.0,
            conditional_infidelity: 0.0,
            w_max: None,
            truncation_bound: None,
            accepted_by_weight: None,
            logical_by_weight: None,
            samples: None,
            seed: None,
            accepted: None,
            logical: None,
            p_accept_ci: None,
            p_undetected_logical_ci: None,
            conditional_infidelity_ci: None,
        }
    }
}

/// Leading-order output infidelity `prefactor · p^d`.
#[must_use]
pub fn leading_order(prefactor: u64, d: usize, p: f64) -> f64 {
    prefactor as f64 * p.powi(i32::try_from(d).unwrap_or(i32::MAX))
}

fn check_p(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::Validation(format!("probability must lie in [0, 1], got {p}")))
    }
}

/// Per-qubit syndrome columns and the mask of the X-syndrome bits.
struct Columns {
    cols: Vec<u128>,
    syndrome_mask: u128,
}

impl Columns {
    fn new(code: &CssCode) -> Result<Self> {
        let sx = code.hx().echelon().basis();
        let kz = crate::f2core::kernel_basis(code.hz());
        let bits = sx.nrows() + kz.nrows();
        if bits > 128 {
            return Err(Error::Unsupported(format!(
                "{} needs {bits} check bits; at most 128 are supported",
                code.label()
            )));
        }
        let all = F2Matrix::from_rows(code.n(), sx.rows().iter().chain(kz.rows()).cloned().collect())?;
        let cols = (0..code.n())
            .map(|j| {
                all.rows()
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| r.get(j))
                    .fold(0u128, |acc, (i, _)| acc | 1u128 << i)
            })
            .collect();
        let syndrome_mask = if sx.nrows() == 128 {
            u128::MAX
        } else {
            (1u128 << sx.nrows()) - 1
        };
        Ok(Self {
            cols,
            syndrome_mask,
        })
    }

    /// (accepted, logical) for an accumulated column sum.
    fn judge(&self, s: u128) -> (bool, bool) {
        let accepted = s & self.syndrome_mask == 0;
        (accepted, accepted && s != 0)
    }
}

/// Accumulates accepted/logical counts by weight over supports extending a prefix.
fn dfs(cols: &Columns, start: usize, acc: u128, weight: usize, w_max: usize, a: &mut [u64], l: &mut [u64]) {
    let (ok, logical) = cols.judge(acc);
    if ok {
        a[weight] += 1;
    }
    if logical {
        l[weight] += 1;
    }
    if weight == w_max {
        return;
    }
    for j in start..cols.cols.len() {
        dfs(cols, j + 1, acc ^ cols.cols[j], weight + 1, w_max, a, l);
    }
}

fn ln_binomial(n: usize, k: usize) -> f64 {
    (0..k).map(|i| ((n - i) as f64).ln() - ((i + 1) as f64).ln()).sum()
}

/// `count · p^w (1−p)^(n−w)`, evaluated in the log domain.
fn weighted(count: f64, n: usize, w: usize, p: f64) -> f64 {
    if count == 0.0 {
        return 0.0;
    }
    if p == 0.0 {
        return if w == 0 { count } else { 0.0 };
    }
    if p == 1.0 {
        return if w == n { count } else { 0.0 };
    }
    (count.ln() + w as f64 * p.ln() + (n - w) as f64 * (-p).ln_1p()).exp()
}

/// Exact acceptance and logical-error probabilities summed over every error
/// support of weight at most `w_max`, plus the omitted binomial tail.
///
/// # Errors
///
/// Returns [`Error::Budget`] when more than [`ENUMERATION_BUDGET`] supports
/// would be enumerated, and [`Error::Validation`] for `p ∉ [0,1]` or
/// `w_max > n`.
pub fn truncated_rates(code: &CssCode, p: f64, w_max: usize) -> Result<RateReport> {
    check_p(p)?;
    let n = code.n();
    if w_max > n {
        return Err(Error::Validation(format!("w_max = {w_max} exceeds n = {n}")));
    }
    let supports: u64 = (0..=w_max as u64)
        .map(|w| binomial(n as u64, w))
        .fold(0u64, u64::saturating_add);
    if supports > ENUMERATION_BUDGET {
        return Err(Error::Budget(format!(
            "{}: {supports} error supports up to weight {w_max} exceed the enumeration budget of {ENUMERATION_BUDGET}",
            code.label()
        )));
    }
    let cols = Columns::new(code)?;
    let zero = || (vec![0u64; w_max + 1], vec![0u64; w_max + 1]);
    let (mut a, mut l) = zero();
    let (ok0, log0) = cols.judge(0);
    a[0] += u64::from(ok0);
    l[0] += u64::from(log0);
    if w_max > 0 {
        let (a1, l1) = (0..n)
            .into_par_iter()
            .map(|j| {
                let (mut a, mut l) = zero();
                dfs(&cols, j + 1, cols.cols[j], 1, w_max, &mut a, &mut l);
                (a, l)
            })
            .reduce(zero, |(mut a, mut l), (b, m)| {
                a.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
                l.iter_mut().zip(&m).for_each(|(x, y)| *x += y);
                (a, l)
            });
        a.iter_mut().zip(&a1).for_each(|(x, y)| *x += y);
        l.iter_mut().zip(&l1).for_each(|(x, y)| *x += y);
    }
    let p_accept: f64 = (0..=w_max).map(|w| weighted(a[w] as f64, n, w, p)).sum();
    let p_logical: f64 = (0..=w_max).map(|w| weighted(l[w] as f64, n, w, p)).sum();
    let tail: f64 = ((w_max + 1)..=n)
        .map(|w| weighted(ln_binomial(n, w).exp(), n, w, p))
        .sum();
    let mut r = RateReport::base(code, p, RateMethod::Truncated);
    r.p_accept = p_accept;
    r.p_undetected_logical = p_logical;
    r.conditional_infidelity = if p_accept > 0.0 { p_logical / p_accept } else { 0.0 };
    r.w_max = Some(w_max);
    r.truncation_bound = Some(tail);
    r.accepted_by_weight = Some(a);
    r.logical_by_weight = Some(l);
    Ok(r)
}

/// Monte Carlo estimate with Wilson intervals; bitwise reproducible given the
/// seed and independent of thread count (see the module docs for the stream
/// layout).
///
/// # Errors
///
/// Returns [`Error::Validation`] for `samples = 0` or `p ∉ [0,1]`.
pub fn monte_carlo(code: &CssCode, p: f64, samples: u64, seed: u64) -> Result<RateReport> {
    monte_carlo_sharded(code, p, samples, seed, DEFAULT_SHARD)
}

/// Samples per parallel work item in [`monte_carlo`].
pub const DEFAULT_SHARD: u64 = 4096;

/// [`monte_carlo`] with an explicit number of samples per work item; the
/// report does not depend on `shard`.
///
/// # Errors
///
/// Returns [`Error::Validation`] for `samples = 0`, `shard = 0` or `p ∉ [0,1]`.
pub fn monte_carlo_sharded(
    code: &CssCode,
    p: f64,
    samples: u64,
    seed: u64,
    shard: u64,
) -> Result<RateReport> {
    check_p(p)?;
    if samples == 0 || shard == 0 {
        return Err(Error::Validation("samples and shard size must be at least 1".into()));
    }
    let cols = Columns::new(code)?;
    let n = code.n() as u64;
    let shards = samples.div_ceil(shard);
    let (accepted, logical) = (0..shards)
        .into_par_iter()
        .map(|s| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut counts = (0u64, 0u64);
            for i in s * shard..((s + 1) * shard).min(samples) {
                rng.set_word_pos(u128::from(2 * n) * u128::from(i));
                let mut acc = 0u128;
                for col in &cols.cols {
                    let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
                    if u < p {
                        acc ^= col;
                    }
                }
                let (ok, bad) = cols.judge(acc);
                counts.0 += u64::from(ok);
                counts.1 += u64::from(bad);
            }
            counts
        })
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    let mut r = RateReport::base(code, p, RateMethod::MonteCarlo);
    r.p_accept = accepted as f64 / samples as f64;
    r.p_undetected_logical = logical as f64 / samples as f64;
    r.conditional_infidelity = if accepted > 0 {
        logical as f64 / accepted as f64
    } else {
        0.0
    };
    r.samples = Some(samples);
    r.seed = Some(seed);
    r.accepted = Some(accepted);
    r.logical = Some(logical);
    r.p_accept_ci = Some(wilson(accepted, samples, WILSON_Z));
    r.p_undetected_logical_ci = Some(wilson(logical, samples, WILSON_Z));
    r.conditional_infidelity_ci = Some(wilson(logical, accepted, WILSON_Z));
    Ok(r)
}

fn spec(
    name: &'static str,
    code_label: &'static str,
    inputs: &'static str,
    outputs: &'static str,
    code: CssCode,
    census: &WeightCensus,
) -> Result<FactorySpec> {
    let d_z = census
        .d
        .ok_or_else(|| Error::Internal(format!("{name}: census found no logical")))?;
    Ok(FactorySpec {
        name,
        code_label,
        inputs,
        outputs,
        d_z,
        prefactor: census.count,
        code,
    })
}

/// The five factories, with `(d_z, prefactor)` recomputed through the
/// distance module.
///
/// # Errors
///
/// Propagates code construction and census errors.
pub fn factory_catalog() -> Result<Vec<FactorySpec>> {
    let small = puncture_code(&qrm_code(QrmParams::new(4, 1, 1)?)?, 0)?;
    let qrm301 = qrm_code(QrmParams::new(3, 0, 1)?)?;
    let big = big_unfolded()?;
    let rubik = qrm_code(QrmParams::new(6, 1, 2)?)?;
    let p722 = puncture_code(&qrm_code(QrmParams::new(7, 2, 2)?)?, 0)?;
    Ok(vec![
        spec("small unfolded", "small-unfolded", "15 T", "1 T", small.clone(), &punctured_min_logicals(&small)?)?,
        spec("QRM_3(0,1)", "qrm301", "8 T", "1 CCZ", qrm301, &qrm_min_logicals(QrmParams::new(3, 0, 1)?)?)?,
        spec("big unfolded", "big-unfolded", "64 T", "1 CCZ", big, &big_unfolded_census()?)?,
        spec("rubik", "rubik", "64 T", "15 CCZ", rubik, &qrm_min_logicals(QrmParams::new(6, 1, 2)?)?)?,
        spec("punctured QRM_7(2,2)", "qrm722-punctured", "127 T", "1 T", p722.clone(), &punctured_min_logicals(&p722)?)?,
    ])
}
