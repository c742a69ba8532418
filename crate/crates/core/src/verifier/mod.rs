//! Registry of executable identity and congruence checks.
//!
//! Every check reduces to exact equality of truncated series, or to a
//! coefficient predicate over a finite range, and reports the first index at
//! which it breaks.

pub mod convolution;
pub mod sequences;

mod modular;
mod quintisection;
mod shifts;
mod two_adic;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::qproducts::{eta_expand_mod, EtaQuotientSpec, ProductError};
use crate::series::{Series, SeriesError};

pub use quintisection::determinant;

/// Smallest order a check may be run at.
pub const MIN_ORDER: i64 = 20;

/// Largest `n` for which exhaustive partition enumeration is attempted.
pub const BRUTEFORCE_LIMIT: i64 = 80;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("order {order} is too small for `{id}` (minimum {MIN_ORDER})")]
    OrderTooSmall { id: String, order: i64 },
    #[error("invalid job count {0}")]
    InvalidJobs(usize),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Product(#[from] ProductError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

/// Where a check first broke.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    /// Which part of a multi-part check failed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clause: Option<String>,
    pub index: i64,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    pub fn new(clause: &str, index: i64, expected: impl ToString, actual: impl ToString) -> Failure {
        Failure {
            clause: (!clause.is_empty()).then(|| clause.to_string()),
            index,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

/// `None` when everything agreed.
pub type Outcome = Option<Failure>;

type Runner = fn(&Context, i64) -> Result<Outcome, VerifyError>;

/// One catalogued identity or congruence.
#[derive(Clone, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub description: &'static str,
    /// The verified statement, in plain-text notation (`f_d = (q^d;q^d)_inf`).
    pub statement: &'static str,
    /// Truncation order, or the range of `n` for statements about `X(mn+r)`.
    pub default_order: i64,
    pub modulus: Option<u64>,
    pub requires_bruteforce: bool,
    /// Set when the verified form differs from the commonly printed one.
    pub erratum: Option<&'static str>,
    #[serde(skip)]
    run: Runner,
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check").field("id", &self.id).field("default_order", &self.default_order).finish()
    }
}

/// Outcome of one check run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub statement: String,
    pub status: Status,
    pub order_used: i64,
    pub first_failure: Option<Failure>,
    pub runtime_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Shared, thread-safe cache of expensive series.
#[derive(Default)]
pub struct Context {
    memo: Mutex<HashMap<String, Arc<Series>>>,
}

impl Context {
    pub fn new() -> Context {
        Context::default()
    }

    /// Builds `key` once; concurrent first requests may both compute it.
    pub fn memo(&self, key: String, build: impl FnOnce() -> Result<Series, VerifyError>) -> Result<Arc<Series>, VerifyError> {
        if let Some(s) = self.memo.lock().expect("cache lock").get(&key) {
            return Ok(s.clone());
        }
        let s = Arc::new(build()?);
        Ok(self.memo.lock().expect("cache lock").entry(key).or_insert(s).clone())
    }

    pub fn eta(&self, factors: &[(u64, i64)], shift: i64, order: i64, modulus: Option<u64>) -> Result<Arc<Series>, VerifyError> {
        let spec = EtaQuotientSpec::new(factors, shift)?;
        self.memo(format!("eta[{spec}]@{order}%{modulus:?}"), || {
            Ok(eta_expand_mod(&spec, order, modulus.map(BigInt::from).as_ref())?)
        })
    }

    /// `sum C(n) q^n` to `order`.
    pub fn c_series(&self, order: i64, modulus: Option<u64>) -> Result<Arc<Series>, VerifyError> {
        self.memo(format!("C@{order}%{modulus:?}"), || Ok(sequences::c_series(order, modulus)?))
    }

    /// `sum a(n) q^n` to `order`.
    pub fn a_series(&self, order: i64, modulus: Option<u64>) -> Result<Arc<Series>, VerifyError> {
        self.memo(format!("a@{order}%{modulus:?}"), || Ok(sequences::a_series(order, modulus)?))
    }

    /// `B(n) = C(5n+4)` for `n <= order`.
    pub fn b_series(&self, order: i64, modulus: Option<u64>) -> Result<Arc<Series>, VerifyError> {
        self.memo(format!("B@{order}%{modulus:?}"), || Ok(self.c_series(5 * order + 4, modulus)?.dissect(5, 4)?))
    }
}

/// Linear combination `sum c * q^s * f-quotient` over eta quotients.
pub(crate) fn eta_sum(ctx: &Context, terms: &[(i64, &[(u64, i64)], i64)], order: i64, modulus: Option<u64>) -> Result<Series, VerifyError> {
    let mut acc = Series::zero(order);
    if let Some(m) = modulus {
        acc = acc.reduce_mod_u64(m)?;
    }
    for &(c, factors, shift) in terms {
        acc = acc.add(&ctx.eta(factors, shift, order, modulus)?.scale_i64(c))?;
    }
    Ok(acc)
}

/// Coefficientwise comparison up to `upto`.
pub(crate) fn series_eq(clause: &str, lhs: &Series, rhs: &Series, upto: i64) -> Result<Outcome, VerifyError> {
    Ok(lhs
        .first_difference(rhs, upto)?
        .map(|m| Failure::new(clause, m.exponent, &m.right, &m.left)))
}

/// What a coefficient must satisfy.
pub(crate) enum Expect<'a> {
    /// Divisible by the given modulus.
    DivisibleBy(u64),
    /// Identically zero (exact integer series only).
    Zero,
    /// Odd exactly when the predicate holds.
    OddIff(&'a dyn Fn(i64) -> bool),
}

pub(crate) fn residue(x: &BigInt, m: u64) -> u64 {
    x.mod_floor(&BigInt::from(m)).to_u64().expect("residue fits")
}

/// Checks `expect` on `s[at(n)]` for every `0 <= n <= n_max` with `applies(n)`.
pub(crate) fn sweep(
    clause: &str,
    s: &Series,
    n_max: i64,
    at: impl Fn(i64) -> i64,
    applies: impl Fn(i64) -> bool,
    expect: Expect<'_>,
) -> Result<Outcome, VerifyError> {
    for n in (0..=n_max).filter(|&n| applies(n)) {
        let v = s.coeff_at(at(n))?;
        let broken = match &expect {
            Expect::DivisibleBy(m) => (residue(&v, *m) != 0).then(|| (format!("0 mod {m}"), format!("{} mod {m}", residue(&v, *m)))),
            Expect::Zero => (!v.is_zero()).then(|| ("0".to_string(), v.to_string())),
            Expect::OddIff(pred) => {
                let want = pred(n);
                ((residue(&v, 2) == 1) != want)
                    .then(|| (if want { "odd" } else { "even" }.to_string(), if want { "even" } else { "odd" }.to_string()))
            }
        };
        if let Some((expected, actual)) = broken {
            return Ok(Some(Failure::new(clause, n, expected, actual)));
        }
    }
    Ok(None)
}

/// Returns the first failing outcome among sub-checks.
macro_rules! first_failure {
    ($($e:expr),+ $(,)?) => {{
        $(
            if let Some(f) = $e? {
                return Ok(Some(f));
            }
        )+
        Ok(None)
    }};
}
pub(crate) use first_failure;

/// All registered checks in catalogue order.
pub fn registry() -> &'static [Check] {
    static REGISTRY: OnceLock<Vec<Check>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut all = Vec::new();
        all.extend(quintisection::checks());
        all.extend(modular::checks());
        all.extend(two_adic::checks());
        all.extend(shifts::checks());
        all
    })
}

pub fn find(id: &str) -> Option<&'static Check> {
    registry().iter().find(|c| c.id == id)
}

impl Check {
    /// Runs the check at `order` (its default when `None`).
    pub fn run(&self, ctx: &Context, order: Option<i64>) -> Result<CheckResult, VerifyError> {
        let order = order.unwrap_or(self.default_order);
        if order < MIN_ORDER {
            return Err(VerifyError::OrderTooSmall { id: self.id.to_string(), order });
        }
        let mut result = CheckResult {
            id: self.id.to_string(),
            statement: self.statement.to_string(),
            status: Status::Skipped,
            order_used: order,
            first_failure: None,
            runtime_ms: 0.0,
            note: self.erratum.map(str::to_string),
        };
        if self.requires_bruteforce && order > BRUTEFORCE_LIMIT {
            result.note = Some(format!("exhaustive enumeration is capped at n <= {BRUTEFORCE_LIMIT}"));
            return Ok(result);
        }
        let start = Instant::now();
        let outcome = (self.run)(ctx, order)?;
        result.runtime_ms = start.elapsed().as_secs_f64() * 1e3;
        result.status = if outcome.is_some() { Status::Fail } else { Status::Pass };
        result.first_failure = outcome;
        Ok(result)
    }
}

/// Runs one check by id with a fresh cache.
pub fn run_check(id: &str, order: Option<i64>) -> Result<CheckResult, VerifyError> {
    let check = find(id).ok_or_else(|| VerifyError::UnknownCheck(id.to_string()))?;
    check.run(&Context::new(), order)
}

/// Runs checks on `jobs` worker threads sharing one cache. Results come back
/// in input order; unknown ids yield errors in their slot.
pub fn run_checks(ids: &[&str], order: Option<i64>, jobs: usize) -> Result<Vec<Result<CheckResult, VerifyError>>, VerifyError> {
    if jobs == 0 {
        return Err(VerifyError::InvalidJobs(jobs));
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|_| VerifyError::InvalidJobs(jobs))?;
    let ctx = Context::new();
    Ok(pool.install(|| {
        ids.par_iter()
            .map(|id| {
                let check = find(id).ok_or_else(|| VerifyError::UnknownCheck(id.to_string()))?;
                check.run(&ctx, order)
            })
            .collect()
    }))
}
