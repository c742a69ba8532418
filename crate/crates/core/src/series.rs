//! Truncated Laurent series in one variable `q` with exact coefficients.
//!
//! A [`Series`] stands for `q^valuation * (c_0 + c_1 q + c_2 q^2 + ...)` where every
//! coefficient of `q^e` with `e <= order` is known and everything above `order` is
//! unknown. Coefficients are arbitrary-precision integers, or residues modulo `m`
//! once a modulus is attached with [`Series::reduce_mod`].
//!
//! Series are normalized on construction: the stored range always starts at a
//! nonzero coefficient, and the zero series has an empty range with
//! `valuation == order + 1`. Two series with the same known range therefore
//! compare equal with `==` exactly when they agree coefficientwise.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Moduli below this bound are stored as machine words.
const WORD_MODULUS_LIMIT: u64 = 1 << 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: String, right: String },
    #[error("leading coefficient {0} is not invertible")]
    NotInvertible(BigInt),
    #[error("cannot invert the zero series")]
    ZeroDivisor,
    #[error("coefficient of q^{index} lies beyond the truncation order {order}")]
    BeyondOrder { index: i64, order: i64 },
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(BigInt),
    #[error("cannot reduce modulo {requested}: coefficients already live modulo {current}")]
    IncompatibleModulus { requested: BigInt, current: BigInt },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// First exponent at which two series disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: i64,
    pub left: BigInt,
    pub right: BigInt,
}

/// Coefficient arithmetic backing one storage variant.
trait Ring {
    type Elem: Clone + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_int(&self, x: &BigInt) -> Self::Elem;
    fn unit_inverse(&self, x: &Self::Elem) -> Option<Self::Elem>;

    /// `out[k] = sum_{i+j=k} a[i] b[j]` for `k < len`.
    fn convolve(&self, a: &[Self::Elem], b: &[Self::Elem], len: usize) -> Vec<Self::Elem> {
        let (nz_a, nz_b) = (nonzero(self, a, len), nonzero(self, b, len));
        let mut out = vec![self.zero(); len];
        // iterate the sparser operand against the other one
        let (sparse, dense, dense_nz) = if nz_a.len() <= nz_b.len() {
            (nz_a, b, nz_b)
        } else {
            (nz_b, a, nz_a)
        };
        if dense_nz.len() * 4 < len {
            for &(i, ref x) in &sparse {
                for &(j, ref y) in &dense_nz {
                    if i + j >= len {
                        break;
                    }
                    out[i + j] = self.add(&out[i + j], &self.mul(x, y));
                }
            }
        } else {
            for &(i, ref x) in &sparse {
                for (j, y) in dense.iter().enumerate().take(len - i) {
                    if !self.is_zero(y) {
                        out[i + j] = self.add(&out[i + j], &self.mul(x, y));
                    }
                }
            }
        }
        out
    }

    /// Solves `b * out = a` term by term (`b[0]` must be a unit).
    fn divide(&self, a: &[Self::Elem], b: &[Self::Elem], len: usize) -> Option<Vec<Self::Elem>> {
        let inv = self.unit_inverse(b.first()?)?;
        let tail: Vec<(usize, Self::Elem)> = nonzero(self, b, len).into_iter().filter(|(i, _)| *i > 0).collect();
        let mut out: Vec<Self::Elem> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = a.get(k).cloned().unwrap_or_else(|| self.zero());
            for (i, bi) in &tail {
                if *i > k {
                    break;
                }
                acc = self.add(&acc, &self.neg(&self.mul(bi, &out[k - i])));
            }
            out.push(self.mul(&acc, &inv));
        }
        Some(out)
    }
}

fn nonzero<R: Ring + ?Sized>(ring: &R, v: &[R::Elem], len: usize) -> Vec<(usize, R::Elem)> {
    v.iter()
        .take(len)
        .enumerate()
        .filter(|(_, x)| !ring.is_zero(x))
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

struct IntRing;

impl Ring for IntRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_int(&self, x: &BigInt) -> BigInt {
        x.clone()
    }
    fn unit_inverse(&self, x: &BigInt) -> Option<BigInt> {
        (x.abs().is_one()).then(|| x.clone())
    }

    fn convolve(&self, a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
        let (nz_a, nz_b) = (nonzero(self, a, len), nonzero(self, b, len));
        let mut out = vec![BigInt::zero(); len];
        let (sparse, dense, dense_nz) = if nz_a.len() <= nz_b.len() {
            (nz_a, b, nz_b)
        } else {
            (nz_b, a, nz_a)
        };
        if dense_nz.len() * 4 < len {
            for (i, x) in &sparse {
                for (j, y) in &dense_nz {
                    if i + j >= len {
                        break;
                    }
                    out[i + j] += x * y;
                }
            }
        } else {
            for (i, x) in &sparse {
                for (slot, y) in out[*i..].iter_mut().zip(dense) {
                    if !y.is_zero() {
                        *slot += x * y;
                    }
                }
            }
        }
        out
    }

    fn divide(&self, a: &[BigInt], b: &[BigInt], len: usize) -> Option<Vec<BigInt>> {
        let lead = b.first()?;
        if !lead.abs().is_one() {
            return None;
        }
        let negate = lead.is_negative();
        let tail: Vec<(usize, BigInt)> = nonzero(self, b, len).into_iter().filter(|(i, _)| *i > 0).collect();
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = a.get(k).cloned().unwrap_or_default();
            for (i, bi) in &tail {
                if *i > k {
                    break;
                }
                acc -= bi * &out[k - i];
            }
            out.push(if negate { -acc } else { acc });
        }
        Some(out)
    }
}

/// Residues modulo a word-sized modulus, canonical in `0..m`.
struct WordRing(u64);

impl WordRing {
    fn small(&self) -> bool {
        self.0 <= u32::MAX as u64
    }
}

impl Ring for WordRing {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.0 as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.0 - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn from_int(&self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.0)).to_u64().expect("residue fits in a word")
    }
    fn unit_inverse(&self, x: &u64) -> Option<u64> {
        let m = BigInt::from(self.0);
        let e = BigInt::from(*x).extended_gcd(&m);
        e.gcd.is_one().then(|| self.from_int(&e.x))
    }

    fn convolve(&self, a: &[u64], b: &[u64], len: usize) -> Vec<u64> {
        let m = self.0 as u128;
        let (nz_a, nz_b) = (nonzero(self, a, len), nonzero(self, b, len));
        let (sparse, dense) = if nz_a.len() <= nz_b.len() { (nz_a, b) } else { (nz_b, a) };
        let mut acc = vec![0u128; len];
        let small = self.small();
        for (i, x) in &sparse {
            let x = *x as u128;
            for (slot, y) in acc[*i..].iter_mut().zip(dense) {
                if small {
                    *slot += x * *y as u128;
                } else {
                    *slot = (*slot + x * *y as u128) % m;
                }
            }
        }
        acc.into_iter().map(|v| (v % m) as u64).collect()
    }

    fn divide(&self, a: &[u64], b: &[u64], len: usize) -> Option<Vec<u64>> {
        let inv = self.unit_inverse(b.first()?)? as u128;
        let m = self.0 as u128;
        let small = self.small();
        let tail: Vec<(usize, u128)> = nonzero(self, b, len)
            .into_iter()
            .filter(|(i, _)| *i > 0)
            .map(|(i, x)| (i, (self.0 - x) as u128))
            .collect();
        let mut out: Vec<u64> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = a.get(k).copied().unwrap_or(0) as u128;
            for (i, neg_bi) in &tail {
                if *i > k {
                    break;
                }
                acc += neg_bi * out[k - i] as u128;
                if !small {
                    acc %= m;
                }
            }
            out.push(((acc % m) * inv % m) as u64);
        }
        Some(out)
    }
}

/// Residues modulo an arbitrary-precision modulus.
struct BigModRing(BigInt);

impl Ring for BigModRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a + b).mod_floor(&self.0)
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        (-a).mod_floor(&self.0)
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b).mod_floor(&self.0)
    }
    fn from_int(&self, x: &BigInt) -> BigInt {
        x.mod_floor(&self.0)
    }
    fn unit_inverse(&self, x: &BigInt) -> Option<BigInt> {
        let e = x.extended_gcd(&self.0);
        e.gcd.is_one().then(|| e.x.mod_floor(&self.0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Coeffs {
    Int(Vec<BigInt>),
    Word { modulus: u64, values: Vec<u64> },
    Big { modulus: BigInt, values: Vec<BigInt> },
}

/// Runs `$body` with `$ring` bound to the ring of `$coeffs` and `$vals` to its values,
/// rebuilding a `Coeffs` of the same variant from the `Vec` the body returns.
macro_rules! map_coeffs {
    ($coeffs:expr, |$ring:ident, $vals:ident| $body:expr) => {
        match $coeffs {
            Coeffs::Int(values) => {
                let $ring = IntRing;
                let $vals = values;
                Coeffs::Int($body)
            }
            Coeffs::Word { modulus, values } => {
                let $ring = WordRing(*modulus);
                let $vals = values;
                Coeffs::Word { modulus: *modulus, values: $body }
            }
            Coeffs::Big { modulus, values } => {
                let $ring = BigModRing(modulus.clone());
                let $vals = values;
                Coeffs::Big { modulus: modulus.clone(), values: $body }
            }
        }
    };
}

/// Same as `map_coeffs!` for two operands that must share a modulus.
macro_rules! zip_coeffs {
    ($a:expr, $b:expr, |$ring:ident, $x:ident, $y:ident| $body:expr) => {
        match ($a, $b) {
            (Coeffs::Int($x), Coeffs::Int($y)) => {
                let $ring = IntRing;
                Ok(Coeffs::Int($body))
            }
            (Coeffs::Word { modulus: m1, values: $x }, Coeffs::Word { modulus: m2, values: $y }) if m1 == m2 => {
                let $ring = WordRing(*m1);
                Ok(Coeffs::Word { modulus: *m1, values: $body })
            }
            (Coeffs::Big { modulus: m1, values: $x }, Coeffs::Big { modulus: m2, values: $y }) if m1 == m2 => {
                let $ring = BigModRing(m1.clone());
                Ok(Coeffs::Big { modulus: m1.clone(), values: $body })
            }
            (l, r) => Err(SeriesError::ModulusMismatch { left: l.modulus_label(), right: r.modulus_label() }),
        }
    };
}

impl Coeffs {
    fn len(&self) -> usize {
        match self {
            Coeffs::Int(v) => v.len(),
            Coeffs::Word { values, .. } => values.len(),
            Coeffs::Big { values, .. } => values.len(),
        }
    }

    fn modulus(&self) -> Option<BigInt> {
        match self {
            Coeffs::Int(_) => None,
            Coeffs::Word { modulus, .. } => Some(BigInt::from(*modulus)),
            Coeffs::Big { modulus, .. } => Some(modulus.clone()),
        }
    }

    fn modulus_label(&self) -> String {
        self.modulus().map_or_else(|| "none".to_string(), |m| m.to_string())
    }

    fn empty_like(&self) -> Coeffs {
        map_coeffs!(self, |_r, _v| Vec::new())
    }

    fn get(&self, i: usize) -> BigInt {
        match self {
            Coeffs::Int(v) => v[i].clone(),
            Coeffs::Word { values, .. } => BigInt::from(values[i]),
            Coeffs::Big { values, .. } => values[i].clone(),
        }
    }

    fn is_zero_at(&self, i: usize) -> bool {
        match self {
            Coeffs::Int(v) => v[i].is_zero(),
            Coeffs::Word { values, .. } => values[i] == 0,
            Coeffs::Big { values, .. } => values[i].is_zero(),
        }
    }

    /// Reduces into `Z/mZ`; the caller has checked compatibility.
    fn reduce(&self, m: &BigInt) -> Coeffs {
        let ints: Vec<BigInt> = match self {
            Coeffs::Int(v) => v.clone(),
            Coeffs::Word { values, .. } => values.iter().map(|&x| BigInt::from(x)).collect(),
            Coeffs::Big { values, .. } => values.clone(),
        };
        match m.to_u64() {
            Some(w) if w < WORD_MODULUS_LIMIT => {
                let ring = WordRing(w);
                Coeffs::Word { modulus: w, values: ints.iter().map(|x| ring.from_int(x)).collect() }
            }
            _ => Coeffs::Big { modulus: m.clone(), values: ints.iter().map(|x| x.mod_floor(m)).collect() },
        }
    }
}

/// A truncated Laurent series with exact (or residue) coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    valuation: i64,
    order: i64,
    coeffs: Coeffs,
}

impl Series {
    fn from_parts(valuation: i64, order: i64, coeffs: Coeffs) -> Series {
        let mut s = Series { valuation, order, coeffs };
        s.normalize();
        s
    }

    /// Builds a series from coefficients of `q^valuation, q^(valuation+1), ...`.
    ///
    /// Coefficients past `order` are dropped; missing ones up to `order` are zero.
    pub fn from_coeffs(valuation: i64, coeffs: Vec<BigInt>, order: i64) -> Series {
        let len = (order - valuation + 1).max(0) as usize;
        let mut coeffs = coeffs;
        coeffs.resize(len, BigInt::zero());
        Series::from_parts(valuation, order, Coeffs::Int(coeffs))
    }

    /// Integer polynomial `c[0] + c[1] q + ...` known to `order`.
    pub fn polynomial(coeffs: &[i64], order: i64) -> Series {
        Series::from_coeffs(0, coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    /// Accumulates `(exponent, coefficient)` terms; exponents above `order` are ignored.
    pub fn from_terms<I>(terms: I, order: i64) -> Series
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().filter(|(e, _)| *e <= order).collect();
        let Some(low) = terms.iter().map(|(e, _)| *e).min() else {
            return Series::zero(order);
        };
        let mut coeffs = vec![BigInt::zero(); (order - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Series::from_coeffs(low, coeffs, order)
    }

    pub fn zero(order: i64) -> Series {
        Series { valuation: order + 1, order, coeffs: Coeffs::Int(Vec::new()) }
    }

    pub fn one(order: i64) -> Series {
        Series::monomial(BigInt::one(), 0, order)
    }

    /// `c * q^exponent`, known to `order`.
    pub fn monomial(c: BigInt, exponent: i64, order: i64) -> Series {
        Series::from_terms([(exponent, c)], order)
    }

    fn normalize(&mut self) {
        let len = self.coeffs.len();
        let lead = (0..len).find(|&i| !self.coeffs.is_zero_at(i));
        match lead {
            None => {
                self.valuation = self.order + 1;
                self.coeffs = self.coeffs.empty_like();
            }
            Some(0) => {}
            Some(k) => {
                self.valuation += k as i64;
                self.coeffs = map_coeffs!(&self.coeffs, |_r, v| v[k..].to_vec());
            }
        }
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn modulus(&self) -> Option<BigInt> {
        self.coeffs.modulus()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 0
    }

    /// Number of nonzero stored coefficients.
    pub fn nnz(&self) -> usize {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs.is_zero_at(i)).count()
    }

    /// Coefficient of `q^e`; zero below the valuation, an error above the order.
    pub fn coeff_at(&self, e: i64) -> Result<BigInt, SeriesError> {
        if e > self.order {
            return Err(SeriesError::BeyondOrder { index: e, order: self.order });
        }
        if e < self.valuation {
            return Ok(BigInt::zero());
        }
        Ok(self.coeffs.get((e - self.valuation) as usize))
    }

    /// Coefficients of `q^from ..= q^order` (zeros included).
    pub fn coefficients_from(&self, from: i64) -> Vec<BigInt> {
        (from..=self.order).map(|e| self.coeff_at(e).expect("within order")).collect()
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> Vec<(i64, BigInt)> {
        (0..self.coeffs.len())
            .filter(|&i| !self.coeffs.is_zero_at(i))
            .map(|i| (self.valuation + i as i64, self.coeffs.get(i)))
            .collect()
    }

    fn check_same_modulus(&self, other: &Series) -> Result<(), SeriesError> {
        if self.modulus() == other.modulus() {
            Ok(())
        } else {
            Err(SeriesError::ModulusMismatch {
                left: self.coeffs.modulus_label(),
                right: other.coeffs.modulus_label(),
            })
        }
    }

    /// Coefficient vector realigned to start at `valuation` with `len` entries.
    fn aligned(&self, valuation: i64, len: usize) -> Coeffs {
        let offset = (self.valuation - valuation).max(0) as usize;
        map_coeffs!(&self.coeffs, |ring, v| {
            let mut out = vec![ring.zero(); len];
            for (i, x) in v.iter().enumerate() {
                if offset + i < len {
                    out[offset + i] = x.clone();
                }
            }
            out
        })
    }

    pub fn add(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check_same_modulus(other)?;
        let order = self.order.min(other.order);
        let valuation = self.valuation.min(other.valuation);
        if valuation > order {
            return Ok(self.truncate(order));
        }
        let len = (order - valuation + 1) as usize;
        let (a, b) = (self.aligned(valuation, len), other.aligned(valuation, len));
        let coeffs = zip_coeffs!(&a, &b, |ring, x, y| x.iter().zip(y).map(|(p, q)| ring.add(p, q)).collect())?;
        Ok(Series::from_parts(valuation, order, coeffs))
    }

    pub fn neg(&self) -> Series {
        let coeffs = map_coeffs!(&self.coeffs, |ring, v| v.iter().map(|x| ring.neg(x)).collect());
        Series { valuation: self.valuation, order: self.order, coeffs }
    }

    pub fn sub(&self, other: &Series) -> Result<Series, SeriesError> {
        self.add(&other.neg())
    }

    /// Multiplies every coefficient by the integer `c`.
    pub fn scale(&self, c: &BigInt) -> Series {
        let coeffs = map_coeffs!(&self.coeffs, |ring, v| {
            let c = ring.from_int(c);
            v.iter().map(|x| ring.mul(x, &c)).collect()
        });
        Series::from_parts(self.valuation, self.order, coeffs)
    }

    pub fn scale_i64(&self, c: i64) -> Series {
        self.scale(&BigInt::from(c))
    }

    /// Multiplication by `q^s`.
    pub fn shift(&self, s: i64) -> Series {
        Series { valuation: self.valuation + s, order: self.order + s, coeffs: self.coeffs.clone() }
    }

    /// Forgets every coefficient above `order` (never raises the order).
    pub fn truncate(&self, order: i64) -> Series {
        if order >= self.order {
            return self.clone();
        }
        let keep = (order - self.valuation + 1).max(0) as usize;
        let coeffs = map_coeffs!(&self.coeffs, |_r, v| v[..keep.min(v.len())].to_vec());
        Series::from_parts(self.valuation.min(order + 1), order, coeffs)
    }

    /// Relative precision: number of coefficients known from the valuation on.
    fn relative_len(&self) -> i64 {
        self.order - self.valuation + 1
    }

    /// Cauchy product; keeps only coefficients both factors determine.
    pub fn mul(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check_same_modulus(other)?;
        let order = (self.order + other.valuation).min(other.order + self.valuation);
        if self.is_zero() || other.is_zero() {
            return Ok(Series { valuation: order + 1, order, coeffs: self.coeffs.empty_like() });
        }
        let valuation = self.valuation + other.valuation;
        let len = self.relative_len().min(other.relative_len()) as usize;
        let coeffs = zip_coeffs!(&self.coeffs, &other.coeffs, |ring, x, y| ring.convolve(x, y, len))?;
        Ok(Series::from_parts(valuation, order, coeffs))
    }

    /// Quotient `self / other` by the convolution recurrence.
    ///
    /// The lowest coefficient of `other` must be a unit (`±1` over the integers).
    pub fn div(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check_same_modulus(other)?;
        if other.is_zero() {
            return Err(SeriesError::ZeroDivisor);
        }
        let valuation = self.valuation - other.valuation;
        let len = self.relative_len().min(other.relative_len()).max(0) as usize;
        let order = valuation + len as i64 - 1;
        let numerator = self.aligned(self.valuation, len);
        let lead = other.coeffs.get(0);
        let coeffs = zip_coeffs!(&numerator, &other.coeffs, |ring, x, y| {
            ring.divide(x, y, len).ok_or_else(|| SeriesError::NotInvertible(lead.clone()))?
        })?;
        Ok(Series::from_parts(valuation, order, coeffs))
    }

    /// The constant 1 in the same coefficient ring, known to `q^(rel - 1)`.
    fn unit(&self, rel: i64) -> Series {
        let rel = rel.max(0);
        let one = BigInt::one();
        let coeffs = map_coeffs!(&self.coeffs, |ring, _v| {
            let mut v = vec![ring.zero(); rel as usize];
            if let Some(first) = v.first_mut() {
                *first = ring.from_int(&one);
            }
            v
        });
        Series::from_parts(0, rel - 1, coeffs)
    }

    /// Multiplicative inverse, valid to `order - 2 * valuation`.
    pub fn invert(&self) -> Result<Series, SeriesError> {
        if self.is_zero() {
            return Err(SeriesError::ZeroDivisor);
        }
        self.unit(self.relative_len()).div(self)
    }

    /// Integer power by repeated squaring; negative exponents go through [`Series::invert`].
    pub fn pow(&self, k: i64) -> Result<Series, SeriesError> {
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut result = base.unit(base.relative_len());
        let mut square = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&square)?;
            }
            e >>= 1;
            if e > 0 {
                square = square.mul(&square)?;
            }
        }
        Ok(result)
    }

    /// Substitutes `q -> q^k`.
    pub fn subst_qk(&self, k: i64) -> Result<Series, SeriesError> {
        if k < 1 {
            return Err(SeriesError::InvalidParameter(format!("substitution power must be positive, got {k}")));
        }
        let order = k * self.order;
        if self.is_zero() {
            return Ok(Series::zero(order).with_storage_of(self));
        }
        let step = k as usize;
        let coeffs = map_coeffs!(&self.coeffs, |ring, v| {
            let mut out = vec![ring.zero(); (v.len() - 1) * step + 1];
            for (i, x) in v.iter().enumerate() {
                out[i * step] = x.clone();
            }
            out
        });
        Ok(Series::from_parts(k * self.valuation, order, coeffs))
    }

    /// The re-indexed residue class `sum_n a[m n + r] q^n`.
    pub fn dissect(&self, m: i64, r: i64) -> Result<Series, SeriesError> {
        if m < 1 || r < 0 || r >= m {
            return Err(SeriesError::InvalidParameter(format!("dissection needs m >= 1 and 0 <= r < m, got m={m}, r={r}")));
        }
        let order = (self.order - r).div_euclid(m);
        if self.is_zero() {
            return Ok(Series::zero(order).with_storage_of(self));
        }
        let valuation = -(r - self.valuation).div_euclid(m);
        let first = (m * valuation + r - self.valuation) as usize;
        let step = m as usize;
        let coeffs = map_coeffs!(&self.coeffs, |_r, v| v.iter().skip(first).step_by(step).cloned().collect());
        Ok(Series::from_parts(valuation, order, coeffs))
    }

    /// Canonical residues modulo `m`; `m` must divide any modulus already present.
    pub fn reduce_mod(&self, m: &BigInt) -> Result<Series, SeriesError> {
        if *m < BigInt::from(2) {
            return Err(SeriesError::InvalidModulus(m.clone()));
        }
        if let Some(current) = self.modulus() {
            if !current.is_multiple_of(m) {
                return Err(SeriesError::IncompatibleModulus { requested: m.clone(), current });
            }
        }
        Ok(Series::from_parts(self.valuation, self.order, self.coeffs.reduce(m)))
    }

    pub fn reduce_mod_u64(&self, m: u64) -> Result<Series, SeriesError> {
        self.reduce_mod(&BigInt::from(m))
    }

    /// Lifts residues back to integers in `0..m`, dropping the modulus.
    pub fn lift(&self) -> Series {
        let values = (0..self.coeffs.len()).map(|i| self.coeffs.get(i)).collect();
        Series { valuation: self.valuation, order: self.order, coeffs: Coeffs::Int(values) }
    }

    /// Zero series with the same coefficient ring as `like`.
    fn with_storage_of(mut self, like: &Series) -> Series {
        self.coeffs = like.coeffs.empty_like();
        self
    }

    /// Compares coefficients of `q^e` for all `e <= upto`.
    ///
    /// Returns the lowest exponent where the two series differ, if any.
    pub fn first_difference(&self, other: &Series, upto: i64) -> Result<Option<Mismatch>, SeriesError> {
        self.check_same_modulus(other)?;
        let known = self.order.min(other.order);
        if upto > known {
            return Err(SeriesError::BeyondOrder { index: upto, order: known });
        }
        let start = self.valuation.min(other.valuation);
        for e in start..=upto {
            let (l, r) = (self.coeff_at(e)?, other.coeff_at(e)?);
            if l != r {
                return Ok(Some(Mismatch { exponent: e, left: l, right: r }));
            }
        }
        Ok(None)
    }

    /// True when both series agree on every coefficient up to `upto`.
    pub fn agrees_to(&self, other: &Series, upto: i64) -> Result<bool, SeriesError> {
        Ok(self.first_difference(other, upto)?.is_none())
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series({self}")?;
        if let Some(m) = self.modulus() {
            write!(f, " mod {m}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SHOWN: usize = 12;
        let terms = self.terms();
        if terms.is_empty() {
            write!(f, "0")?;
        }
        for (k, (e, c)) in terms.iter().take(SHOWN).enumerate() {
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            match (*e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{abs}q^{e}")?,
            }
        }
        if terms.len() > SHOWN {
            write!(f, " + ...")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

// Operator sugar for series that share a coefficient ring. These panic on a
// modulus mismatch; use the named methods to get a `Result` instead.

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::add(self, rhs).expect("series addition")
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::sub(self, rhs).expect("series subtraction")
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs).expect("series multiplication")
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Dense Euler product prod_{n>=1} (1 - q^n) by direct multiplication.
    fn dense_euler(order: i64) -> Series {
        let mut acc = Series::one(order);
        for n in 1..=order {
            let mut factor = vec![0i64; n as usize + 1];
            factor[0] = 1;
            factor[n as usize] = -1;
            acc = &acc * &Series::polynomial(&factor, order);
        }
        acc
    }

    #[test]
    fn cancellation_in_add() {
        let a = Series::polynomial(&[1, -1], 10);
        let b = Series::polynomial(&[0, 1], 10);
        let s = &a + &b;
        assert_eq!(s, Series::one(10));
        assert_eq!(s.order(), 10);
    }

    #[test]
    fn one_minus_one_is_canonical_zero() {
        let s = &Series::one(5) + &Series::polynomial(&[-1], 5);
        assert!(s.is_zero());
        assert_eq!(s, Series::zero(5));
        assert_eq!(s.valuation(), 6);
        assert_eq!(s.coeff_at(3).unwrap(), BigInt::zero());
    }

    #[test]
    fn add_takes_min_order_and_raises_valuation_after_trim() {
        let a = Series::polynomial(&[1, 2, 3], 8);
        let b = Series::polynomial(&[-1, 0, 1], 4);
        let s = &a + &b;
        assert_eq!(s.order(), 4);
        assert_eq!(s.valuation(), 1);
        assert_eq!(s.coefficients_from(0), ints(&[0, 2, 4, 0, 0]));
    }

    #[test]
    fn pentagonal_plus_negation_is_zero() {
        let f = dense_euler(40);
        assert_eq!(&f + &f.neg(), Series::zero(40));
    }

    #[test]
    fn telescoping_product() {
        let geometric = Series::from_coeffs(0, vec![BigInt::one(); 21], 20);
        let p = &Series::polynomial(&[1, -1], 20) * &geometric;
        assert_eq!(p, Series::one(20));
    }

    #[test]
    fn distinct_parts_squared() {
        // (-q;q)_inf to q^4 counts partitions into distinct parts: 1,1,1,2,2
        let d = Series::polynomial(&[1, 1, 1, 2, 2], 4);
        let sq = &d * &d;
        assert_eq!(sq.coefficients_from(0), ints(&[1, 2, 3, 6, 9]));
        let inv = sq.invert().unwrap();
        assert_eq!(inv.coefficients_from(0), ints(&[1, -2, 1, -2, 4]));
    }

    #[test]
    fn inverse_of_euler_product() {
        let f = dense_euler(10);
        let inv = f.invert().unwrap();
        assert_eq!(&f * &inv, Series::one(10));
        assert_eq!(inv.coefficients_from(0), ints(&[1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]));
    }

    #[test]
    fn geometric_series_inverse() {
        let inv = Series::polynomial(&[1, -1], 12).invert().unwrap();
        assert_eq!(inv.coefficients_from(0), vec![BigInt::one(); 13]);
    }

    #[test]
    fn invert_is_an_involution() {
        let f = dense_euler(30);
        assert_eq!(f.invert().unwrap().invert().unwrap(), f);
    }

    #[test]
    fn invert_laurent_series() {
        // q^-2 (1 - q) known to q^5 -> q^2 (1 + q + ...) known to q^9
        let a = Series::from_coeffs(-2, ints(&[1, -1]), 5);
        let inv = a.invert().unwrap();
        assert_eq!(inv.valuation(), 2);
        assert_eq!(inv.order(), 9);
        assert_eq!(inv.coefficients_from(2), vec![BigInt::one(); 8]);
        assert_eq!((&a * &inv).truncate(5), Series::one(5));
    }

    #[test]
    fn non_unit_leading_coefficient_rejected() {
        let a = Series::polynomial(&[2, 1], 5);
        assert_eq!(a.invert(), Err(SeriesError::NotInvertible(BigInt::from(2))));
        assert_eq!(Series::zero(4).invert(), Err(SeriesError::ZeroDivisor));
        assert!(a.pow(-1).is_err());
        // 2 is a unit modulo 5
        let inv = a.reduce_mod_u64(5).unwrap().invert().unwrap();
        assert_eq!(&a.reduce_mod_u64(5).unwrap() * &inv, Series::one(5).reduce_mod_u64(5).unwrap());
    }

    #[test]
    fn pow_basics() {
        let a = Series::polynomial(&[1, 1], 6);
        assert_eq!(a.pow(2).unwrap().coefficients_from(0), ints(&[1, 2, 1, 0, 0, 0, 0]));
        assert_eq!(a.pow(0).unwrap(), Series::one(6));
        let f = dense_euler(40).subst_qk(2).unwrap().truncate(40);
        assert_eq!(f.pow(-1).unwrap(), f.invert().unwrap());
    }

    #[test]
    fn cube_of_euler_product_is_jacobi() {
        let order = 100;
        let cube = dense_euler(order).pow(3).unwrap();
        let mut terms = Vec::new();
        let mut n = 0i64;
        while n * (n + 1) / 2 <= order {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            terms.push((n * (n + 1) / 2, BigInt::from(sign * (2 * n + 1))));
            n += 1;
        }
        assert_eq!(cube, Series::from_terms(terms, order));
    }

    #[test]
    fn substitution() {
        let s = Series::polynomial(&[1, 1], 3).subst_qk(5).unwrap();
        assert_eq!(s.order(), 15);
        assert_eq!(s.terms(), vec![(0, BigInt::one()), (5, BigInt::one())]);
        let f = dense_euler(30);
        assert_eq!(f.subst_qk(2).unwrap().truncate(60), {
            let mut acc = Series::one(60);
            for n in 1..=30 {
                let mut v = vec![0i64; 2 * n + 1];
                v[0] = 1;
                v[2 * n] = -1;
                acc = &acc * &Series::polynomial(&v, 60);
            }
            acc
        });
    }

    #[test]
    fn dissection_basics() {
        let s = Series::polynomial(&[1, 0, 0, 0, 0, 0, 0, 1], 14);
        let d = s.dissect(7, 0).unwrap();
        assert_eq!(d, Series::polynomial(&[1, 1], 2));
        assert_eq!(s.dissect(7, 3).unwrap(), Series::zero(1));
        assert!(s.dissect(0, 0).is_err());
        assert!(s.dissect(3, 3).is_err());
    }

    #[test]
    fn dissection_of_laurent_series() {
        // q^-3 + 2 q^-1 + 5 q^4, order 7
        let s = Series::from_terms([(-3, BigInt::from(1)), (-1, BigInt::from(2)), (4, BigInt::from(5))], 7);
        let d = s.dissect(5, 2).unwrap();
        // exponents -3 = 5*(-1) + 2 and 7 = 5*1 + 2
        assert_eq!(d.order(), 1);
        assert_eq!(d.terms(), vec![(-1, BigInt::from(1))]);
        let d4 = s.dissect(5, 4).unwrap();
        assert_eq!(d4.terms(), vec![(-1, BigInt::from(2)), (0, BigInt::from(5))]);
    }

    #[test]
    fn reduce_mod_rules() {
        let x = Series::polynomial(&[3, -7, 12, 4], 3);
        assert!(x.scale_i64(5).reduce_mod_u64(5).unwrap().is_zero());
        let r = x.reduce_mod_u64(4).unwrap();
        assert_eq!(r.coefficients_from(0), ints(&[3, 1, 0, 0]));
        assert_eq!(r.modulus(), Some(BigInt::from(4)));
        assert!(r.reduce_mod_u64(2).is_ok());
        assert!(matches!(r.reduce_mod_u64(3), Err(SeriesError::IncompatibleModulus { .. })));
        assert!(matches!(x.reduce_mod_u64(1), Err(SeriesError::InvalidModulus(_))));
        assert!(matches!(Series::add(&r, &x), Err(SeriesError::ModulusMismatch { .. })));
    }

    #[test]
    fn big_modulus_storage() {
        let m = BigInt::from(2).pow(70) + 1u32;
        let x = Series::polynomial(&[1, -1], 10).reduce_mod(&m).unwrap();
        let inv = x.invert().unwrap();
        assert_eq!(inv.coefficients_from(0), vec![BigInt::one(); 11]);
        assert_eq!(x.neg().coeff_at(0).unwrap(), &m - 1);
    }

    #[test]
    fn coeff_at_ranges() {
        let s = Series::from_coeffs(2, ints(&[4, 5]), 6);
        assert_eq!(s.coeff_at(-10).unwrap(), BigInt::zero());
        assert_eq!(s.coeff_at(3).unwrap(), BigInt::from(5));
        assert_eq!(s.coeff_at(6).unwrap(), BigInt::zero());
        assert_eq!(s.coeff_at(7), Err(SeriesError::BeyondOrder { index: 7, order: 6 }));
    }

    #[test]
    fn mul_order_rule() {
        let a = Series::from_coeffs(-2, ints(&[1, 1]), 10);
        let b = Series::from_coeffs(3, ints(&[1]), 8);
        let p = &a * &b;
        assert_eq!(p.valuation(), 1);
        assert_eq!(p.order(), (10 + 3).min(8 - 2));
    }

    #[test]
    fn first_difference_reports_lowest_exponent() {
        let a = Series::polynomial(&[1, 2, 3, 4], 3);
        let b = Series::polynomial(&[1, 2, 0, 5], 5);
        let m = a.first_difference(&b, 3).unwrap().unwrap();
        assert_eq!(m, Mismatch { exponent: 2, left: BigInt::from(3), right: BigInt::zero() });
        assert!(a.first_difference(&b, 4).is_err());
        assert!(a.agrees_to(&b, 1).unwrap());
    }

    #[test]
    fn word_modulus_above_u32() {
        let m = (1u64 << 40) + 15;
        let f = dense_euler(60);
        let exact = f.pow(5).unwrap().reduce_mod_u64(m).unwrap();
        let modular = f.reduce_mod_u64(m).unwrap().pow(5).unwrap();
        assert_eq!(exact, modular);
        let inv = modular.invert().unwrap();
        assert_eq!(&inv * &modular, Series::one(60).reduce_mod_u64(m).unwrap());
    }

    #[test]
    fn display_is_readable() {
        let s = Series::polynomial(&[1, -1, -1, 0, 0, 1], 5);
        assert_eq!(s.to_string(), "1 - q - q^2 + q^5 + O(q^6)");
    }
}
