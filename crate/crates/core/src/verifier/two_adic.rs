//! `a(n)` modulo 2, 4, 8 and 16: vanishing off the pentagonal numbers and the
//! residue of `a(w_n)` as a function of `n mod 2^m`.

use num_bigint::BigInt;

use super::{residue, series_eq, sweep, Check, Context, Expect, Failure, Outcome, VerifyError};
use crate::qproducts::{euler_product, pentagonal, theta, FigurateKind, FigurateTable, ThetaKind};
use crate::series::Series;

/// Residue `r` of `a(w_n) mod 2^m`, the smallest `m` it is claimed for, and the
/// classes of `n mod 2^m` that produce it.
struct ResidueClause {
    label: &'static str,
    residue: u64,
    min_m: u32,
    classes: fn(i64) -> [i64; 2],
}

const CLAUSES: [ResidueClause; 8] = [
    ResidueClause { label: "b", residue: 1, min_m: 1, classes: |_| [-1, 0] },
    ResidueClause { label: "c", residue: 3, min_m: 2, classes: |_| [-2, 1] },
    ResidueClause { label: "d1", residue: 5, min_m: 3, classes: |m| [-m - 1, m] },
    ResidueClause { label: "d2", residue: 7, min_m: 3, classes: |_| [-3, 2] },
    ResidueClause { label: "e", residue: 9, min_m: 4, classes: |_| [-8, 7] },
    ResidueClause { label: "f", residue: 11, min_m: 4, classes: |_| [-7, 6] },
    ResidueClause { label: "g", residue: 13, min_m: 4, classes: |_| [-4, 3] },
    ResidueClause { label: "h", residue: 15, min_m: 4, classes: |_| [-6, 5] },
];

fn clauses_for(m: u32) -> impl Iterator<Item = &'static ResidueClause> {
    CLAUSES.iter().filter(move |c| c.min_m <= m)
}

fn check(id: &'static str, statement: &'static str, run: super::Runner) -> Check {
    Check {
        id,
        description: "a(n) mod 2^m: zero off the generalized pentagonal numbers, and a(w_n) determined by n mod 2^m",
        statement,
        default_order: 20_000,
        modulus: Some(16),
        requires_bruteforce: false,
        erratum: None,
        run,
    }
}

pub(super) fn checks() -> Vec<Check> {
    vec![
        check(
            "thm4_m1",
            "a(n) = 0 (mod 2) iff n is not a generalized pentagonal number; a(w_n) = 1 (mod 2) otherwise; a = f1 (mod 2)",
            |ctx, order| thm4(ctx, order, 1),
        ),
        check(
            "thm4_m2",
            "mod 4: a(n) = 0 off the pentagonal numbers; a(w_n) = 1 iff n = -1, 0 and a(w_n) = 3 iff n = -2, 1 (mod 4); a = f1 (mod 4)",
            |ctx, order| thm4(ctx, order, 2),
        ),
        check(
            "thm4_m3",
            "mod 8: a(n) = 0 off the pentagonal numbers; a(w_n) = 1, 3, 5, 7 iff n = {-1,0}, {-2,1}, {-4,3}, {-3,2} (mod 8); a = sum (-1)^(n(n+1)/2) (2(-1)^(w_n) - 1) q^(w_n) (mod 8)",
            |ctx, order| thm4(ctx, order, 3),
        ),
        check(
            "thm4_m4",
            "mod 16: a(n) = 0 off the pentagonal numbers; a(w_n) = 1, 3, 5, 7, 9, 11, 13, 15 iff n = {-1,0}, {-2,1}, {-5,4}, {-3,2}, {-8,7}, {-7,6}, {-4,3}, {-6,5} (mod 16); a = 2 f1 - f1^5/f2^2 (mod 16)",
            |ctx, order| thm4(ctx, order, 4),
        ),
        Check {
            id: "cor5_periodicity",
            description: "a at pentagonal numbers is periodic in the index modulo powers of two",
            statement: "a(w_(n + 2^m)) = a(w_n) (mod 2^m) for m = 1, 2, 3, 4",
            default_order: 20_000,
            modulus: Some(16),
            requires_bruteforce: false,
            erratum: None,
            run: cor5_periodicity,
        },
    ]
}

/// `w_k` for every `k` with `w_k <= order`.
fn pentagonal_indices(order: i64) -> Vec<i64> {
    (0u64..).map(|k| pentagonal(k) as i64).take_while(|&w| w <= order).collect()
}

/// Closed forms `a mod 2^m` is congruent to.
fn closed_forms(m: u32, order: i64) -> Result<Vec<(&'static str, Series)>, VerifyError> {
    let sign = |k: i64| if k.rem_euclid(2) == 0 { 1 } else { -1 };
    let forms = match m {
        1 | 2 => vec![("a = f1", theta_pentagonal(order, |k, _| sign(k * (k + 1) / 2)))],
        3 => vec![("a = sum (-1)^(k(k+1)/2) (2(-1)^w - 1) q^w", theta_pentagonal(order, |k, w| sign(k * (k + 1) / 2) * (2 * sign(w) - 1)))],
        _ => vec![
            ("a = 2 f1 - f1^5/f2^2", euler_product(1, order).scale_i64(2).sub(&theta(ThetaKind::Fine32_6, order))?),
            (
                "a = sum (2(-1)^(k(k+1)/2) - (-1)^k (3k+1) + (1 - (-1)^k)/2) q^w",
                theta_pentagonal(order, |k, _| 2 * sign(k * (k + 1) / 2) - sign(k) * (3 * k + 1) + (1 - sign(k)) / 2),
            ),
        ],
    };
    forms.into_iter().map(|(label, s)| Ok((label, s.reduce_mod_u64(1 << m)?))).collect()
}

/// `sum_k weight(k, w_k) q^(w_k)` over the one-sided pentagonal indexing.
fn theta_pentagonal(order: i64, weight: impl Fn(i64, i64) -> i64) -> Series {
    let terms = pentagonal_indices(order).into_iter().enumerate().map(|(k, w)| (w, BigInt::from(weight(k as i64, w))));
    Series::from_terms(terms, order)
}

fn thm4(ctx: &Context, order: i64, m: u32) -> Result<Outcome, VerifyError> {
    let modulus = 1u64 << m;
    let a = ctx.a_series(order, Some(16))?.reduce_mod_u64(modulus)?;
    let table = FigurateTable::up_to(FigurateKind::GeneralizedPentagonal, order as u64);
    let off_pentagonal = |n: i64| !table.contains(n as u64);
    let divisible = sweep("(a) a(n) = 0 off the pentagonal numbers", &a, order, |n| n, off_pentagonal, Expect::DivisibleBy(modulus))?;
    if divisible.is_some() {
        return Ok(divisible);
    }
    let p = modulus as i64;
    for (n, w) in pentagonal_indices(order).into_iter().enumerate() {
        let n = n as i64;
        let v = residue(&a.coeff_at(w)?, modulus);
        if v == 0 {
            return Ok(Some(Failure::new("(a) a(w_n) is a unit", n, "odd", v)));
        }
        for clause in clauses_for(m) {
            let predicted = (clause.classes)(m as i64).iter().any(|c| c.rem_euclid(p) == n.rem_euclid(p));
            if (v == clause.residue) != predicted {
                let expected = if predicted { format!("{}", clause.residue) } else { format!("not {}", clause.residue) };
                return Ok(Some(Failure::new(&format!("({})", clause.label), n, expected, v)));
            }
        }
    }
    for (label, form) in closed_forms(m, order)? {
        if let Some(f) = series_eq(label, &a, &form, order)? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

fn cor5_periodicity(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let a = ctx.a_series(order, Some(16))?;
    let w = pentagonal_indices(order);
    for m in 1..=4u32 {
        let period = 1usize << m;
        for n in 0..w.len().saturating_sub(period) {
            let (x, y) = (residue(&a.coeff_at(w[n + period])?, period as u64), residue(&a.coeff_at(w[n])?, period as u64));
            if x != y {
                return Ok(Some(Failure::new(&format!("m = {m}"), n as i64, y, x)));
            }
        }
    }
    Ok(None)
}
