//! The counting sequences under study, as generating-function expansions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::qproducts::{eta_expand_mod, EtaQuotientSpec, ProductError};
use crate::series::Series;

/// `(q;q) / (-q;q)^2 = f1^3 / f2^2`.
fn crank_quotient() -> EtaQuotientSpec {
    EtaQuotientSpec::of(&[(1, 3), (2, -2)])
}

/// `(-q;q)^2 / (q;q) = f2^2 / f1^3`.
pub fn a_spec() -> EtaQuotientSpec {
    EtaQuotientSpec::of(&[(1, -3), (2, 2)])
}

fn big(m: Option<u64>) -> Option<BigInt> {
    m.map(BigInt::from)
}

/// `sum C(n) q^n = 2q + (q;q) / (-q;q)^2`, where `C(n) = c_e(n) - c_o(n)`.
pub fn c_series(order: i64, modulus: Option<u64>) -> Result<Series, ProductError> {
    let m = big(modulus);
    let quotient = eta_expand_mod(&crank_quotient(), order, m.as_ref())?;
    let mut correction = Series::monomial(BigInt::from(2), 1, order);
    if let Some(m) = &m {
        correction = correction.reduce_mod(m)?;
    }
    Ok(quotient.add(&correction)?)
}

/// `sum a(n) q^n = (-q;q)^2 / (q;q)`.
pub fn a_series(order: i64, modulus: Option<u64>) -> Result<Series, ProductError> {
    eta_expand_mod(&a_spec(), order, big(modulus).as_ref())
}

/// `sum p(n) q^n = 1 / (q;q)`.
pub fn p_series(order: i64, modulus: Option<u64>) -> Result<Series, ProductError> {
    eta_expand_mod(&EtaQuotientSpec::of(&[(1, -1)]), order, big(modulus).as_ref())
}

/// Even-crank counts `c_e(n) = (p(n) + C(n)) / 2`.
pub fn ce_series(order: i64, modulus: Option<u64>) -> Result<Series, ProductError> {
    parity_half(order, modulus, 1)
}

/// Odd-crank counts `c_o(n) = (p(n) - C(n)) / 2`.
pub fn co_series(order: i64, modulus: Option<u64>) -> Result<Series, ProductError> {
    parity_half(order, modulus, -1)
}

/// `(p + sign * C) / 2`, computed modulo `2m` so the halving is exact.
fn parity_half(order: i64, modulus: Option<u64>, sign: i64) -> Result<Series, ProductError> {
    let doubled = modulus.map(|m| 2 * m);
    let p = p_series(order, doubled)?;
    let c = c_series(order, doubled)?.scale_i64(sign);
    let sum = p.add(&c)?.lift();
    let mut halves = Vec::with_capacity(order as usize + 1);
    for e in 0..=order {
        let (h, r) = sum.coeff_at(e)?.div_rem(&BigInt::from(2));
        if r != BigInt::from(0) {
            return Err(ProductError::OutOfRange(format!("p({e}) and C({e}) have different parity")));
        }
        halves.push(h);
    }
    let s = Series::from_coeffs(0, halves, order);
    Ok(match modulus {
        Some(m) => s.reduce_mod_u64(m)?,
        None => s,
    })
}

/// Sequences exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceName {
    A,
    C,
    Ce,
    Co,
    P,
}

impl SequenceName {
    pub const ALL: [SequenceName; 5] = [SequenceName::A, SequenceName::C, SequenceName::Ce, SequenceName::Co, SequenceName::P];

    pub fn name(self) -> &'static str {
        match self {
            SequenceName::A => "a",
            SequenceName::C => "C",
            SequenceName::Ce => "ce",
            SequenceName::Co => "co",
            SequenceName::P => "p",
        }
    }

    pub fn series(self, order: i64, modulus: Option<u64>) -> Result<Series, ProductError> {
        match self {
            SequenceName::A => a_series(order, modulus),
            SequenceName::C => c_series(order, modulus),
            SequenceName::Ce => ce_series(order, modulus),
            SequenceName::Co => co_series(order, modulus),
            SequenceName::P => p_series(order, modulus),
        }
    }

    /// Terms `0..=limit`, as canonical residues when a modulus is given.
    pub fn terms(self, limit: i64, modulus: Option<u64>) -> Result<Vec<BigInt>, ProductError> {
        Ok(self.series(limit, modulus)?.coefficients_from(0))
    }
}

impl fmt::Display for SequenceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SequenceName::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| format!("unknown sequence `{s}` (expected one of a, C, ce, co, p)"))
    }
}
