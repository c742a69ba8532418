//! Crank-parity generating function, its 5-dissection and the determinant
//! computation behind it.

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{eta_sum, first_failure, series_eq, sweep, Check, Context, Expect, Failure, Outcome, VerifyError};
use crate::crank::crank_tally;
use crate::qproducts::q_pochhammer;
use crate::series::{Series, SeriesError};
use crate::verifier::sequences;

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check {
            id: "cgen_bruteforce",
            description: "crank-parity generating function against exhaustive crank tallies",
            statement: "c_e(n) - c_o(n) = [q^n](2q + (q;q)/(-q;q)^2) and c_e(n) + c_o(n) = p(n)",
            default_order: 45,
            modulus: None,
            requires_bruteforce: true,
            erratum: None,
            run: cgen_bruteforce,
        },
        Check {
            id: "thm1",
            description: "the 5n+4 class of the crank-parity series as a single eta quotient",
            statement: "sum C(5n+4) q^(5n+4) = 5 q^4 f5^2 f25 f50^2 / f10^4",
            default_order: 300,
            modulus: None,
            requires_bruteforce: false,
            erratum: None,
            run: thm1,
        },
        Check {
            id: "lemma1a",
            description: "quintisection of f2^2 into products over q^50",
            statement: "f2^2 = f50^2 [P(20)^2 P(30)^2 / P(10)^2 P(40)^2 + 2q^6 P(10)P(40)/P(20)P(30) - 2q^2 P(20)P(30)/P(10)P(40) + q^8 P(10)^2 P(40)^2 / P(20)^2 P(30)^2 - q^4], P(a) = (q^a;q^50)",
            default_order: 300,
            modulus: None,
            requires_bruteforce: false,
            erratum: None,
            run: lemma1a,
        },
        Check {
            id: "lemma1b",
            description: "quintisection of f1^3 into products over q^25",
            statement: "f1^3 = f25^3 [R^3 - 3q R^2 - 3q^5 R^-2 - q^6 R^-3 + 5q^3], R = (q^15;q^25)(q^10;q^25) / (q^20;q^25)(q^5;q^25)",
            default_order: 300,
            modulus: None,
            requires_bruteforce: false,
            erratum: None,
            run: lemma1b,
        },
        Check {
            id: "ramanujan_quint",
            description: "the classical 5-dissection of f1",
            statement: "f1 = f25 [R - q - q^2 / R], R = (q^15;q^25)(q^10;q^25) / (q^20;q^25)(q^5;q^25)",
            default_order: 300,
            modulus: None,
            requires_bruteforce: false,
            erratum: None,
            run: ramanujan_quint,
        },
        Check {
            id: "circulant_D",
            description: "5x5 circulant determinant of the 5-dissection components g_s of f2^2",
            statement: "det[g_((i-j) mod 5)] = f10^12 / f50^2",
            default_order: 150,
            modulus: None,
            requires_bruteforce: false,
            erratum: None,
            run: circulant_d,
        },
        Check {
            id: "mdl_delta",
            description: "the 4x4 minors delta(g0..g4), their bordered-matrix expansion, and D4 = D P4",
            statement: "delta = -v^T M v + g4 |A|; D4 = h0 delta(g0,..) + h1 delta(g1,..) + h3 delta(g3,..); D4 = D * P4",
            default_order: 150,
            modulus: None,
            requires_bruteforce: false,
            erratum: None,
            run: mdl_delta,
        },
        Check {
            id: "quint_vanishing",
            description: "empty residue classes of f1 and f1^3 modulo 5",
            statement: "e3 = e4 = 0 for f1; h2 = h4 = 0 and h3 != 0 for f1^3",
            default_order: 300,
            modulus: None,
            requires_bruteforce: false,
            erratum: Some(
                "n(n+1)/2 mod 5 takes the values {0, 1, 3}; the vanishing classes of f1^3 are 2 and 4, not +-2 (2 and 3)",
            ),
            run: quint_vanishing,
        },
        Check {
            id: "cor_mod5",
            description: "C, c_e and c_o vanish mod 5 on 5n+4, with c_e = (p + C)/2 integral",
            statement: "C(5n+4) = c_e(5n+4) = c_o(5n+4) = 0 (mod 5); p(n) = C(n) (mod 2)",
            default_order: 2000,
            modulus: Some(10),
            requires_bruteforce: false,
            erratum: None,
            run: cor_mod5,
        },
    ]
}

/// `prod (q^a; q^m)^e` over the given triples.
pub(super) fn pochhammer_product(factors: &[(u64, u64, i64)], order: i64) -> Result<Series, VerifyError> {
    let mut acc = Series::one(order);
    for &(a, m, e) in factors {
        acc = acc.mul(&q_pochhammer(a, m, order)?.pow(e)?)?;
    }
    Ok(acc)
}

fn pochhammer_sum(terms: &[(i64, i64, &[(u64, u64, i64)])], order: i64) -> Result<Series, VerifyError> {
    let mut acc = Series::zero(order);
    for &(c, shift, factors) in terms {
        acc = acc.add(&pochhammer_product(factors, order)?.scale_i64(c).shift(shift))?;
    }
    Ok(acc)
}

fn product(factors: &[&Series]) -> Result<Series, SeriesError> {
    let (first, rest) = factors.split_first().expect("nonempty product");
    rest.iter().try_fold((*first).clone(), |acc, s| acc.mul(s))
}

/// Residue-class components `sum_{e = s mod m} c_e q^e`, kept in place.
pub(super) fn components(s: &Series, m: i64) -> Vec<Series> {
    (0..m)
        .map(|r| Series::from_terms(s.terms().into_iter().filter(|(e, _)| e.rem_euclid(m) == r), s.order()))
        .collect()
}

/// Determinant over the series ring by cofactor expansion along the first row.
pub fn determinant(matrix: &[Vec<Series>]) -> Result<Series, SeriesError> {
    let n = matrix.len();
    if n == 0 || matrix.iter().any(|row| row.len() != n) {
        return Err(SeriesError::InvalidParameter("determinant needs a nonempty square matrix".into()));
    }
    if n == 1 {
        return Ok(matrix[0][0].clone());
    }
    let order = matrix.iter().flatten().map(Series::order).min().expect("nonempty");
    let mut acc = Series::zero(order);
    for (j, entry) in matrix[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Series>> = matrix[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, s)| s.clone()).collect())
            .collect();
        let term = entry.mul(&determinant(&minor)?)?;
        acc = if j % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
    }
    Ok(acc)
}

fn cgen_bruteforce(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let c = ctx.c_series(order, None)?;
    let p = sequences::p_series(order, None)?;
    let tallies: Vec<_> = (0..=order as u32).into_par_iter().map(crank_tally).collect();
    for t in tallies {
        let n = t.n as i64;
        let (cn, pn) = (c.coeff_at(n)?, p.coeff_at(n)?);
        if cn != BigInt::from(t.c_diff) {
            return Ok(Some(Failure::new("c_e - c_o", n, cn, t.c_diff)));
        }
        if pn != BigInt::from(t.total()) {
            return Ok(Some(Failure::new("c_e + c_o", n, pn, t.total())));
        }
    }
    Ok(None)
}

fn thm1(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let c = ctx.c_series(order, None)?;
    let lhs = Series::from_terms(c.terms().into_iter().filter(|(e, _)| e % 5 == 4), order);
    let rhs = eta_sum(ctx, &[(5, &[(5, 2), (25, 1), (50, 2), (10, -4)], 4)], order, None)?;
    // the low coefficients of the product side against exhaustive tallies
    let tallied: Vec<i64> = (4..=order.min(THM1_TALLY_LIMIT)).step_by(5).collect();
    let tallies: Vec<_> = tallied.par_iter().map(|&n| crank_tally(n as u32)).collect();
    for t in tallies {
        let v = rhs.coeff_at(t.n as i64)?;
        if v != BigInt::from(t.c_diff) {
            return Ok(Some(Failure::new("tally", t.n as i64, t.c_diff, v)));
        }
    }
    series_eq("", &lhs, &rhs, order)
}

const THM1_TALLY_LIMIT: i64 = 45;

fn lemma1a(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let inner = pochhammer_sum(
        &[
            (1, 0, &[(20, 50, 2), (30, 50, 2), (10, 50, -2), (40, 50, -2)]),
            (2, 6, &[(10, 50, 1), (40, 50, 1), (20, 50, -1), (30, 50, -1)]),
            (-2, 2, &[(20, 50, 1), (30, 50, 1), (10, 50, -1), (40, 50, -1)]),
            (1, 8, &[(10, 50, 2), (40, 50, 2), (20, 50, -2), (30, 50, -2)]),
            (-1, 4, &[]),
        ],
        order,
    )?;
    let rhs = inner.mul(&*ctx.eta(&[(50, 2)], 0, order, None)?)?;
    series_eq("", &*ctx.eta(&[(2, 2)], 0, order, None)?, &rhs, order)
}

fn lemma1b(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let inner = pochhammer_sum(
        &[
            (1, 0, &[(15, 25, 3), (10, 25, 3), (20, 25, -3), (5, 25, -3)]),
            (-3, 5, &[(20, 25, 2), (5, 25, 2), (15, 25, -2), (10, 25, -2)]),
            (-3, 1, &[(15, 25, 2), (10, 25, 2), (20, 25, -2), (5, 25, -2)]),
            (-1, 6, &[(20, 25, 3), (5, 25, 3), (15, 25, -3), (10, 25, -3)]),
            (5, 3, &[]),
        ],
        order,
    )?;
    let rhs = inner.mul(&*ctx.eta(&[(25, 3)], 0, order, None)?)?;
    series_eq("", &*ctx.eta(&[(1, 3)], 0, order, None)?, &rhs, order)
}

fn ramanujan_quint(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let inner = pochhammer_sum(
        &[
            (1, 0, &[(15, 25, 1), (10, 25, 1), (20, 25, -1), (5, 25, -1)]),
            (-1, 1, &[]),
            (-1, 2, &[(5, 25, 1), (20, 25, 1), (15, 25, -1), (10, 25, -1)]),
        ],
        order,
    )?;
    let rhs = inner.mul(&*ctx.eta(&[(25, 1)], 0, order, None)?)?;
    series_eq("", &*ctx.eta(&[(1, 1)], 0, order, None)?, &rhs, order)
}

fn circulant(g: &[Series]) -> Vec<Vec<Series>> {
    (0..5).map(|i| (0..5).map(|j| g[(i + 5 - j) % 5].clone()).collect()).collect()
}

fn circulant_d(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let g = components(&*ctx.eta(&[(2, 2)], 0, order, None)?, 5);
    let d = determinant(&circulant(&g))?;
    series_eq("", &d, &*ctx.eta(&[(10, 12), (50, -2)], 0, order, None)?, order)
}

/// The 4x4 minor `delta(g0, .., g4)`.
fn delta(g: [&Series; 5]) -> Result<Series, SeriesError> {
    let [g0, g1, g2, g3, g4] = g.map(Clone::clone);
    determinant(&[
        vec![g1.clone(), g0.clone(), g4.clone(), g3.clone()],
        vec![g2.clone(), g1.clone(), g0.clone(), g4.clone()],
        vec![g3.clone(), g2.clone(), g1.clone(), g0.clone()],
        vec![g4, g3, g2, g1],
    ])
}

fn rotate(g: &[Series], k: usize) -> [&Series; 5] {
    std::array::from_fn(|i| &g[(i + k) % 5])
}

fn mdl_delta(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let g = components(&*ctx.eta(&[(2, 2)], 0, order, None)?, 5);
    let h = components(&*ctx.eta(&[(1, 3)], 0, order, None)?, 5);
    let [g0, g1, g2, g3, g4] = rotate(&g, 0);

    let direct = delta(rotate(&g, 0))?;
    let permuted = determinant(&[
        vec![g1.clone(), g3.clone(), g4.clone(), g0.clone()],
        vec![g2.clone(), g4.clone(), g0.clone(), g1.clone()],
        vec![g3.clone(), g0.clone(), g1.clone(), g2.clone()],
        vec![g4.clone(), g1.clone(), g2.clone(), g3.clone()],
    ])?
    .neg();

    // bordered form: -v^T M v + g4 |A| with v = (g1, g2, g3)
    let minus = |a: Series, b: Series| a.sub(&b);
    let abs_a = product(&[g0, g2, g3])?
        .add(&product(&[g0, g1, g4])?.scale_i64(2))?
        .sub(&product(&[g0, g0, g0])?)?
        .sub(&product(&[g1, g1, g3])?)?
        .sub(&product(&[g2, g4, g4])?)?;
    let m01 = minus(g1.mul(g0)?, g4.mul(g2)?)?;
    let m02 = minus(g1.mul(g4)?, g0.mul(g0)?)?;
    let m12 = minus(g0.mul(g4)?, g1.mul(g3)?)?;
    let m = [
        [minus(g0.mul(g2)?, g1.mul(g1)?)?, m01.clone(), m02.clone()],
        [m01, minus(g3.mul(g2)?, g0.mul(g0)?)?, m12.clone()],
        [m02, m12, minus(g0.mul(g3)?, g4.mul(g4)?)?],
    ];
    let v = [g1, g2, g3];
    let mut quadratic = Series::zero(order);
    for i in 0..3 {
        for j in 0..3 {
            quadratic = quadratic.add(&product(&[v[i], &m[i][j], v[j]])?)?;
        }
    }
    let bordered = g4.mul(&abs_a)?.sub(&quadratic)?;

    let zero = Series::zero(order);
    let last = [&h[0], &h[1], &zero, &h[3], &zero];
    let d4_matrix: Vec<Vec<Series>> = circulant(&g)
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row[4] = last[i].clone();
            row
        })
        .collect();
    let d4 = determinant(&d4_matrix)?;
    let expansion = h[0]
        .mul(&direct)?
        .add(&h[1].mul(&delta(rotate(&g, 1))?)?)?
        .add(&h[3].mul(&delta(rotate(&g, 3))?)?)?;

    let d = determinant(&circulant(&g))?;
    let u = ctx.eta(&[(1, 3), (2, -2)], 0, order, None)?;
    let p4 = &components(&u, 5)[4];

    first_failure!(
        series_eq("delta = -(permuted minor)", &direct, &permuted, order),
        series_eq("delta = -v^T M v + g4 |A|", &direct, &bordered, order),
        series_eq("D4 = sum h_s delta", &d4, &expansion, order),
        series_eq("D4 = D P4", &d.mul(p4)?, &d4, order),
    )
}

fn quint_vanishing(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let f1 = ctx.eta(&[(1, 1)], 0, order, None)?;
    let f1_cubed = ctx.eta(&[(1, 3)], 0, order, None)?;
    let class = |r: i64| move |n: i64| 5 * n + r;
    let n_max = |r: i64| (order - r).div_euclid(5);
    let h3_nonzero = (0..=n_max(3)).any(|n| f1_cubed.coeff_at(5 * n + 3).is_ok_and(|c| c != BigInt::from(0)));
    first_failure!(
        sweep("e3", &f1, n_max(3), class(3), |_| true, Expect::Zero),
        sweep("e4", &f1, n_max(4), class(4), |_| true, Expect::Zero),
        sweep("h2", &f1_cubed, n_max(2), class(2), |_| true, Expect::Zero),
        sweep("h4", &f1_cubed, n_max(4), class(4), |_| true, Expect::Zero),
        Ok::<_, VerifyError>((!h3_nonzero).then(|| Failure::new("h3", 3, "some nonzero coefficient", "all zero"))),
    )
}

fn cor_mod5(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let c = ctx.c_series(order, Some(10))?;
    let p = sequences::p_series(order, Some(10))?;
    let parity = series_eq("p = C (mod 2)", &p.reduce_mod_u64(2)?, &c.reduce_mod_u64(2)?, order)?;
    if parity.is_some() {
        return Ok(parity);
    }
    let ce = sequences::ce_series(order, Some(5))?;
    let co = sequences::co_series(order, Some(5))?;
    let n_max = (order - 4).div_euclid(5);
    let at = |n: i64| 5 * n + 4;
    first_failure!(
        sweep("C(5n+4)", &c, n_max, at, |_| true, Expect::DivisibleBy(5)),
        sweep("c_e(5n+4)", &ce, n_max, at, |_| true, Expect::DivisibleBy(5)),
        sweep("c_o(5n+4)", &co, n_max, at, |_| true, Expect::DivisibleBy(5)),
    )
}
