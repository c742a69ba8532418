//! Named infinite products and theta series as truncated [`Series`].
//!
//! Euler products and theta series are built term by term from their sparse
//! expansions, never by multiplying out the product. Eta quotients are expanded
//! by repeated sparse multiplication and division by Euler factors, which costs
//! `O(N^1.5)` per unit of exponent instead of `O(N^2)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::series::{Series, SeriesError};

/// Largest `order + |q_shift|` accepted by [`eta_expand`].
pub const MAX_ORDER: i64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("order {order} with q-shift {shift} exceeds the cap of {cap}")]
    OrderOverflow { order: i64, shift: i64, cap: i64 },
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
    #[error("unknown theta kind `{0}`")]
    UnknownTheta(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Generalized pentagonal number `ceil(k/2) * ceil((3k+1)/2) / 2`.
///
/// Even indices give `n(3n+1)/2`, odd indices `n(3n-1)/2`, so the sequence runs
/// 0, 1, 2, 5, 7, 12, 15, 22, 26, ...
pub fn pentagonal(k: u64) -> u64 {
    k.div_ceil(2) * (3 * k + 1).div_ceil(2) / 2
}

/// Triangular number `k(k+1)/2`.
pub fn triangular(k: u64) -> u64 {
    k * (k + 1) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigurateKind {
    GeneralizedPentagonal,
    Triangular,
}

/// Sorted table of pentagonal or triangular numbers up to a bound.
#[derive(Debug, Clone)]
pub struct FigurateTable {
    kind: FigurateKind,
    values: Vec<u64>,
}

impl FigurateTable {
    pub fn up_to(kind: FigurateKind, bound: u64) -> FigurateTable {
        let f = match kind {
            FigurateKind::GeneralizedPentagonal => pentagonal,
            FigurateKind::Triangular => triangular,
        };
        let values = (0..).map(f).take_while(|&v| v <= bound).collect();
        FigurateTable { kind, values }
    }

    pub fn kind(&self) -> FigurateKind {
        self.kind
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn contains(&self, x: u64) -> bool {
        self.values.binary_search(&x).is_ok()
    }

    /// Index `k` with `value(k) == x`, if any.
    pub fn index_of(&self, x: u64) -> Option<usize> {
        self.values.binary_search(&x).ok()
    }
}

/// `(q^delta; q^delta)_inf` to `order` via the pentagonal number theorem.
pub fn euler_product(delta: u64, order: i64) -> Series {
    assert!(delta > 0, "euler_product needs a positive delta");
    let terms = (0u64..)
        .map(|n| (n, delta * pentagonal(n)))
        .take_while(|&(_, e)| e as i64 <= order)
        .map(|(n, e)| {
            let sign = if (n * (n + 1) / 2) % 2 == 0 { 1 } else { -1 };
            (e as i64, BigInt::from(sign))
        });
    Series::from_terms(terms, order)
}

/// Formal product `q^q_shift * prod (q^delta; q^delta)_inf^exponent`.
///
/// Constructed through [`EtaQuotientSpec::new`], which sorts the factors by
/// delta, merges repeated deltas and drops zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EtaQuotientSpec {
    factors: Vec<(u64, i64)>,
    q_shift: i64,
}

impl EtaQuotientSpec {
    pub fn new(factors: &[(u64, i64)], q_shift: i64) -> Result<EtaQuotientSpec, ProductError> {
        let mut merged: Vec<(u64, i64)> = Vec::new();
        let mut sorted = factors.to_vec();
        sorted.sort_by_key(|&(d, _)| d);
        for (delta, exponent) in sorted {
            if delta == 0 {
                return Err(ProductError::OutOfRange("eta factor delta must be positive".into()));
            }
            match merged.last_mut() {
                Some((d, e)) if *d == delta => *e += exponent,
                _ => merged.push((delta, exponent)),
            }
        }
        merged.retain(|&(_, e)| e != 0);
        Ok(EtaQuotientSpec { factors: merged, q_shift })
    }

    /// Shorthand for specs known to be valid; panics on a zero delta.
    pub fn of(factors: &[(u64, i64)]) -> EtaQuotientSpec {
        EtaQuotientSpec::new(factors, 0).expect("valid eta quotient")
    }

    pub fn with_shift(mut self, q_shift: i64) -> EtaQuotientSpec {
        self.q_shift = q_shift;
        self
    }

    pub fn factors(&self) -> &[(u64, i64)] {
        &self.factors
    }

    pub fn q_shift(&self) -> i64 {
        self.q_shift
    }

    /// Product of two quotients (exponents and shifts add).
    pub fn times(&self, other: &EtaQuotientSpec) -> EtaQuotientSpec {
        let mut all = self.factors.clone();
        all.extend_from_slice(&other.factors);
        EtaQuotientSpec::new(&all, self.q_shift + other.q_shift).expect("deltas already validated")
    }

    /// The quotient with every exponent (and the shift) multiplied by `k`.
    pub fn power(&self, k: i64) -> EtaQuotientSpec {
        let factors: Vec<_> = self.factors.iter().map(|&(d, e)| (d, e * k)).collect();
        EtaQuotientSpec::new(&factors, self.q_shift * k).expect("deltas already validated")
    }
}

impl fmt::Display for EtaQuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.factors.iter().map(|(d, e)| format!("{d}:{e}")).collect();
        write!(f, "{}", body.join(","))?;
        if self.q_shift != 0 {
            write!(f, ";qshift={}", self.q_shift)?;
        }
        Ok(())
    }
}

/// Syntax error in the `delta:exponent[,...][;qshift=s]` notation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct SpecParseError {
    pub position: usize,
    pub message: String,
}

impl FromStr for EtaQuotientSpec {
    type Err = SpecParseError;

    /// Parses `1:-3,2:2` or `1:20,2:-8;qshift=-8`. The shift may also be
    /// given as a comma-separated `qshift=s` item.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut factors = Vec::new();
        let mut q_shift: Option<i64> = None;
        let mut position = 0;
        for item in text.split([',', ';']) {
            let start = position + (item.len() - item.trim_start().len());
            position += item.len() + 1;
            let item = item.trim();
            if item.is_empty() {
                if text.trim().is_empty() {
                    break;
                }
                return Err(SpecParseError { position: start, message: "empty factor".into() });
            }
            if let Some(rest) = item.strip_prefix("qshift=") {
                if q_shift.is_some() {
                    return Err(SpecParseError { position: start, message: "qshift given twice".into() });
                }
                let value = rest.trim().parse::<i64>().map_err(|_| SpecParseError {
                    position: start + "qshift=".len(),
                    message: format!("invalid qshift `{rest}`"),
                })?;
                q_shift = Some(value);
                continue;
            }
            let Some((d, e)) = item.split_once(':') else {
                return Err(SpecParseError { position: start, message: format!("expected `delta:exponent`, got `{item}`") });
            };
            let delta = d.trim().parse::<u64>().ok().filter(|&d| d > 0).ok_or_else(|| SpecParseError {
                position: start,
                message: format!("delta must be a positive integer, got `{}`", d.trim()),
            })?;
            let exponent = e.trim().parse::<i64>().map_err(|_| SpecParseError {
                position: start + d.len() + 1,
                message: format!("exponent must be an integer, got `{}`", e.trim()),
            })?;
            factors.push((delta, exponent));
        }
        EtaQuotientSpec::new(&factors, q_shift.unwrap_or(0))
            .map_err(|e| SpecParseError { position: 0, message: e.to_string() })
    }
}

/// Expands an eta quotient to `order`, optionally over `Z/mZ`.
///
/// Positive exponents multiply by the sparse Euler factor, negative ones divide
/// by it through the convolution recurrence.
pub fn eta_expand(spec: &EtaQuotientSpec, order: i64) -> Result<Series, ProductError> {
    eta_expand_mod(spec, order, None)
}

pub fn eta_expand_mod(spec: &EtaQuotientSpec, order: i64, modulus: Option<&BigInt>) -> Result<Series, ProductError> {
    let shift = spec.q_shift;
    if order.checked_add(shift.abs()).is_none_or(|total| total > MAX_ORDER) {
        return Err(ProductError::OrderOverflow { order, shift, cap: MAX_ORDER });
    }
    let local = order - shift;
    let ring = |s: Series| -> Result<Series, SeriesError> {
        match modulus {
            Some(m) => s.reduce_mod(m),
            None => Ok(s),
        }
    };
    if local < 0 {
        return Ok(ring(Series::zero(order))?);
    }
    let mut acc = ring(Series::one(local))?;
    // negative exponents first keeps the dividend dense only once
    let mut factors = spec.factors.clone();
    factors.sort_by_key(|&(_, e)| e);
    for (delta, exponent) in factors {
        let euler = ring(euler_product(delta, local))?;
        for _ in 0..exponent.unsigned_abs() {
            acc = if exponent > 0 { acc.mul(&euler)? } else { acc.div(&euler)? };
        }
    }
    Ok(acc.shift(shift))
}

/// Sparse theta expansions used by the shifted-sum checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThetaKind {
    /// `sum_{n in Z} (-1)^n q^(n^2) = (q;q)/(-q;q)`.
    GaussSquares,
    /// `sum_{n >= 0} q^(n(n+1)/2) = (q^2;q^2)^2/(q;q)`.
    Triangular,
    /// `sum_{n >= 0} (-1)^n (2n+1) q^(n(n+1)/2) = (q;q)^3`.
    Jacobi,
    /// `sum_{n in Z} (1-6n) q^(n(3n-1)/2) = (q;q)^5/(q^2;q^2)^2`.
    WeightedPent,
    /// `sum_{n in Z} (-1)^n (3n+1) q^(3n^2+2n) = (q^2;q^2)^5/(q;q)^2`.
    Ramanujan3n2_2n,
    /// `(q;q)^3/(-q;q)^2` written as the negated sum `-sum_{n in Z} (6n-1) q^(n(3n-1)/2)`.
    Fine32_6,
}

impl ThetaKind {
    pub const ALL: [ThetaKind; 6] = [
        ThetaKind::GaussSquares,
        ThetaKind::Triangular,
        ThetaKind::Jacobi,
        ThetaKind::WeightedPent,
        ThetaKind::Ramanujan3n2_2n,
        ThetaKind::Fine32_6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ThetaKind::GaussSquares => "gauss_squares",
            ThetaKind::Triangular => "triangular",
            ThetaKind::Jacobi => "jacobi",
            ThetaKind::WeightedPent => "weighted_pent",
            ThetaKind::Ramanujan3n2_2n => "ramanujan_3n2_2n",
            ThetaKind::Fine32_6 => "fine_32_6",
        }
    }

    /// The eta quotient this theta series equals.
    pub fn product_form(self) -> EtaQuotientSpec {
        match self {
            ThetaKind::GaussSquares => EtaQuotientSpec::of(&[(1, 2), (2, -1)]),
            ThetaKind::Triangular => EtaQuotientSpec::of(&[(1, -1), (2, 2)]),
            ThetaKind::Jacobi => EtaQuotientSpec::of(&[(1, 3)]),
            ThetaKind::WeightedPent | ThetaKind::Fine32_6 => EtaQuotientSpec::of(&[(1, 5), (2, -2)]),
            ThetaKind::Ramanujan3n2_2n => EtaQuotientSpec::of(&[(1, -2), (2, 5)]),
        }
    }

    /// `(exponent, weight)` pairs, with exponents at most `bound`.
    ///
    /// Bilateral sums emit `n` and `-n` as separate terms.
    pub fn terms(self, bound: i64) -> Vec<(i64, BigInt)> {
        let bilateral = |exp: fn(i64) -> i64, weight: fn(i64) -> i64| -> Vec<(i64, BigInt)> {
            let mut out = Vec::new();
            for n in 0i64.. {
                let mut hit = false;
                for k in if n == 0 { vec![0] } else { vec![n, -n] } {
                    let e = exp(k);
                    if e <= bound {
                        out.push((e, BigInt::from(weight(k))));
                        hit = true;
                    }
                }
                if !hit {
                    break;
                }
            }
            out
        };
        let alt = |n: i64| if n % 2 == 0 { 1 } else { -1 };
        match self {
            ThetaKind::GaussSquares => bilateral(|n| n * n, |n| if n % 2 == 0 { 1 } else { -1 }),
            ThetaKind::Triangular => (0..).map(|n| n * (n + 1) / 2).take_while(|&e| e <= bound).map(|e| (e, BigInt::from(1))).collect(),
            ThetaKind::Jacobi => (0i64..)
                .take_while(|n| n * (n + 1) / 2 <= bound)
                .map(|n| (n * (n + 1) / 2, BigInt::from(alt(n) * (2 * n + 1))))
                .collect(),
            ThetaKind::WeightedPent => bilateral(|n| n * (3 * n - 1) / 2, |n| 1 - 6 * n),
            ThetaKind::Ramanujan3n2_2n => {
                bilateral(|n| 3 * n * n + 2 * n, |n| if n % 2 == 0 { 3 * n + 1 } else { -(3 * n + 1) })
            }
            ThetaKind::Fine32_6 => bilateral(|n| n * (3 * n - 1) / 2, |n| -(6 * n - 1)),
        }
    }
}

impl FromStr for ThetaKind {
    type Err = ProductError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ThetaKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| ProductError::UnknownTheta(s.to_string()))
    }
}

/// Sparse theta series of the given kind, truncated to `order`.
pub fn theta(kind: ThetaKind, order: i64) -> Series {
    Series::from_terms(kind.terms(order), order)
}

/// `(q^a; q^m)_inf` to `order` by direct truncated product.
pub fn q_pochhammer(a: u64, m: u64, order: i64) -> Result<Series, ProductError> {
    if a == 0 || m == 0 {
        return Err(ProductError::OutOfRange(format!("(q^{a};q^{m}) needs positive a and m")));
    }
    let len = (order + 1).max(0) as usize;
    let mut c = vec![BigInt::zero(); len];
    if len > 0 {
        c[0] = BigInt::from(1);
    }
    let mut e = a as usize;
    while e < len {
        for i in (e..len).rev() {
            if !c[i - e].is_zero() {
                let t = c[i - e].clone();
                c[i] -= t;
            }
        }
        e += m as usize;
    }
    Ok(Series::from_coeffs(0, c, order))
}

/// `(q^a, q^(m-a), q^m; q^m)_inf`, the Jacobi triple product factor.
pub fn triple_product(a: u64, m: u64, order: i64) -> Result<Series, ProductError> {
    if a == 0 || a >= m {
        return Err(ProductError::OutOfRange(format!("triple product needs 0 < a < m, got a={a}, m={m}")));
    }
    let p = q_pochhammer(a, m, order)?;
    let q = q_pochhammer(m - a, m, order)?;
    let r = q_pochhammer(m, m, order)?;
    Ok(p.mul(&q)?.mul(&r)?)
}
