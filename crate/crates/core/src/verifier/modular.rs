//! Eta-quotient identities at levels 10 and 14, and the 7n+2 class of `a`.

use super::{eta_sum, first_failure, series_eq, sweep, Check, Context, Expect, Outcome, VerifyError};
use crate::series::Series;

type Term = (i64, &'static [(u64, i64)], i64);

/// `sum a(7n+2) q^n = 7 * sum` of these `(coefficient, quotient, q-shift)` terms.
const SEVEN_N_PLUS_2: [Term; 8] = [
    (1024, &[(2, 8), (14, 18), (1, -20), (7, -7)], 8),
    (1344, &[(2, 9), (14, 11), (1, -21)], 6),
    (-1024, &[(2, 16), (14, 10), (1, -24), (7, -3)], 5),
    (72, &[(2, 10), (7, 7), (14, 4), (1, -22)], 4),
    (-320, &[(2, 17), (7, 4), (14, 3), (1, -25)], 3),
    (-40, &[(2, 11), (7, 14), (1, -23), (14, -3)], 2),
    (56, &[(2, 18), (7, 11), (1, -26), (14, -4)], 1),
    (1, &[(2, 12), (7, 21), (1, -24), (14, -10)], 0),
];

const BASIS_C: [i64; 5] = [7168, -19264, -8456, 1288, 7];
const BASIS_D: [i64; 3] = [-7168, -2240, 392];

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check {
            id: "thm3",
            description: "a level-10 eta-quotient identity",
            statement: "f2^3 f10 / (f1 f5^3) - q f1 f10^5 / (f2 f5^5) = 1",
            default_order: 500,
            modulus: None,
            requires_bruteforce: false,
            erratum: None,
            run: thm3,
        },
        Check {
            id: "thm8",
            description: "a level-14 eta-quotient identity",
            statement: "f2^7 f7 / (f1^7 f14) - 7q f7^4 / f1^4 + 7q^3 f14^7 / (f1^3 f2 f7^3) = 1",
            default_order: 500,
            modulus: None,
            requires_bruteforce: false,
            erratum: None,
            run: thm8,
        },
        Check {
            id: "thm6",
            description: "the 7n+2 class of a(n) as seven times eight eta quotients",
            statement: "sum a(7n+2) q^n = 7 [1024 q^8 f2^8 f14^18/(f1^20 f7^7) + 1344 q^6 f2^9 f14^11/f1^21 - 1024 q^5 f2^16 f14^10/(f1^24 f7^3) + 72 q^4 f2^10 f7^7 f14^4/f1^22 - 320 q^3 f2^17 f7^4 f14^3/f1^25 - 40 q^2 f2^11 f7^14/(f1^23 f14^3) + 56 q f2^18 f7^11/(f1^26 f14^4) + f2^12 f7^21/(f1^24 f14^10)]",
            default_order: 120,
            modulus: None,
            requires_bruteforce: false,
            erratum: None,
            run: thm6,
        },
        Check {
            id: "rk_basis_identity",
            description: "the 7n+2 class of a(n) in the basis t, g of level-14 modular functions",
            statement: "F sum a(7n+2) q^n = sum c_k t^k + g sum d_k t^k with F = q^-8 f1^20 f7^7/(f2^8 f14^18), t = q^-2 f2 f7^7/(f1 f14^7), g = q^-3 f2^8 f7^4/(f1^4 f14^8) - 4t, c = (7168, -19264, -8456, 1288, 7), d = (-7168, -2240, 392)",
            default_order: 80,
            modulus: None,
            requires_bruteforce: false,
            erratum: None,
            run: rk_basis_identity,
        },
        Check {
            id: "cor7",
            description: "a(7n+2) vanishes mod 7",
            statement: "a(7n+2) = 0 (mod 7)",
            default_order: 10_000,
            modulus: Some(7),
            requires_bruteforce: false,
            erratum: None,
            run: cor7,
        },
    ]
}

fn thm3(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let lhs = eta_sum(ctx, &[(1, &[(2, 3), (10, 1), (1, -1), (5, -3)], 0), (-1, &[(1, 1), (10, 5), (2, -1), (5, -5)], 1)], order, None)?;
    series_eq("", &lhs, &Series::one(order), order)
}

fn thm8(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let lhs = eta_sum(
        ctx,
        &[
            (1, &[(2, 7), (7, 1), (1, -7), (14, -1)], 0),
            (-7, &[(7, 4), (1, -4)], 1),
            (7, &[(14, 7), (1, -3), (2, -1), (7, -3)], 3),
        ],
        order,
        None,
    )?;
    series_eq("", &lhs, &Series::one(order), order)
}

fn seven_n_plus_2(ctx: &Context, n_max: i64, modulus: Option<u64>) -> Result<Series, VerifyError> {
    Ok(ctx.a_series(7 * n_max + 2, modulus)?.dissect(7, 2)?)
}

fn thm6(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let lhs = seven_n_plus_2(ctx, order, None)?;
    let rhs = eta_sum(ctx, &SEVEN_N_PLUS_2, order, None)?.scale_i64(7);
    series_eq("", &lhs, &rhs, order)
}

fn rk_basis_identity(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    // the Laurent prefactors lose up to 2 * 2 + 4 orders along the way
    let work = order + 8;
    let a = seven_n_plus_2(ctx, work, None)?;
    let f = ctx.eta(&[(1, 20), (7, 7), (2, -8), (14, -18)], -8, work, None)?;
    let t = ctx.eta(&[(2, 1), (7, 7), (1, -1), (14, -7)], -2, work, None)?;
    let g = ctx.eta(&[(2, 8), (7, 4), (1, -4), (14, -8)], -3, work, None)?.sub(&t.scale_i64(4))?;

    let mut rhs = Series::zero(work);
    let mut t_pow = Series::one(work);
    for (k, &c) in BASIS_C.iter().enumerate() {
        rhs = rhs.add(&t_pow.scale_i64(c))?;
        if k < BASIS_D.len() {
            rhs = rhs.add(&g.mul(&t_pow)?.scale_i64(BASIS_D[k]))?;
        }
        t_pow = t_pow.mul(&t)?;
    }
    let lhs = f.mul(&a)?;
    series_eq("", &lhs, &rhs, order.min(lhs.order()).min(rhs.order()))
}

fn cor7(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let s = seven_n_plus_2(ctx, order, Some(7))?;
    first_failure!(sweep("a(7n+2)", &s, order, |n| n, |_| true, Expect::DivisibleBy(7)))
}
