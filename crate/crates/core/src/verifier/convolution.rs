//! Theta-weighted shifted sums `A(n) = sum_k w(k) base(n - scale * index(k))`.
//!
//! A sum of this shape is the coefficient sequence of `base * K`, where `K`
//! is the sparse kernel `sum_k w(k) q^(scale * index(k))`, so it is computed
//! as one sparse product.

use num_bigint::BigInt;

use crate::qproducts::pentagonal;
use crate::series::{Series, SeriesError};

/// Index sets the shifted sums range over.
#[derive(Debug, Clone, Copy)]
pub enum ShiftKind {
    /// `k(3k-1)/2` for `k` in Z.
    Pentagonal,
    /// `omega_k` from the ceiling formula for `k >= 0`: the same set as
    /// [`ShiftKind::Pentagonal`], indexed differently.
    PentagonalOneSided,
    /// `k(k+1)/2` for `k >= 0`.
    Triangular,
    /// `k^2` for `k` in Z.
    Squares,
    /// `k(3k+2)` for `k` in Z.
    Ramanujan,
    /// Any index function that grows with `|k|`.
    Custom { index: fn(i64) -> i64, bilateral: bool },
}

impl ShiftKind {
    fn index(self, k: i64) -> i64 {
        match self {
            ShiftKind::Pentagonal => k * (3 * k - 1) / 2,
            ShiftKind::PentagonalOneSided => pentagonal(k as u64) as i64,
            ShiftKind::Triangular => k * (k + 1) / 2,
            ShiftKind::Squares => k * k,
            ShiftKind::Ramanujan => k * (3 * k + 2),
            ShiftKind::Custom { index, .. } => index(k),
        }
    }

    fn bilateral(self) -> bool {
        match self {
            ShiftKind::Pentagonal | ShiftKind::Squares | ShiftKind::Ramanujan => true,
            ShiftKind::PentagonalOneSided | ShiftKind::Triangular => false,
            ShiftKind::Custom { bilateral, .. } => bilateral,
        }
    }

    /// `(k, index(k))` for every `k` with `index(k) <= bound`.
    pub fn indices(self, bound: i64) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for n in 0i64.. {
            let ks: &[i64] = if n == 0 || !self.bilateral() { &[n] } else { &[n, -n] };
            let mut hit = false;
            for &k in ks {
                let e = self.index(k);
                if e <= bound {
                    out.push((k, e));
                    hit = true;
                }
            }
            if !hit {
                break;
            }
        }
        out
    }
}

/// Weights `w(k)` attached to each shift.
#[derive(Debug, Clone, Copy)]
pub enum Weight {
    Unit,
    /// `(-1)^k`.
    Alternating,
    /// `(-1)^k (2k+1)`.
    Jacobi,
    /// `(-1)^k (3k+1)`.
    Ramanujan,
    /// `1 - k`.
    OneMinusK,
    /// `1 - 6k`.
    OneMinusSixK,
    Custom(fn(i64) -> i64),
}

impl Weight {
    pub fn at(self, k: i64) -> i64 {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        match self {
            Weight::Unit => 1,
            Weight::Alternating => sign,
            Weight::Jacobi => sign * (2 * k + 1),
            Weight::Ramanujan => sign * (3 * k + 1),
            Weight::OneMinusK => 1 - k,
            Weight::OneMinusSixK => 1 - 6 * k,
            Weight::Custom(w) => w(k),
        }
    }
}

/// The sparse kernel `sum_k w(k) q^(scale * index(k))` up to `order`.
pub fn kernel(shifts: ShiftKind, scale: i64, weight: Weight, order: i64) -> Result<Series, SeriesError> {
    if scale < 1 {
        return Err(SeriesError::InvalidParameter(format!("shift scale must be positive, got {scale}")));
    }
    let terms = shifts
        .indices(order.div_euclid(scale))
        .into_iter()
        .map(|(k, e)| (scale * e, BigInt::from(weight.at(k))));
    Ok(Series::from_terms(terms, order))
}

/// `sum_k w(k) base(n - scale * index(k))` as a series in `n`, in the
/// coefficient ring of `base`.
pub fn theta_convolution(base: &Series, shifts: ShiftKind, scale: i64, weight: Weight) -> Result<Series, SeriesError> {
    let mut k = kernel(shifts, scale, weight, base.order() - base.valuation().min(0))?;
    if let Some(m) = base.modulus() {
        k = k.reduce_mod(&m)?;
    }
    base.mul(&k)
}
