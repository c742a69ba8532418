//! The twelve acceptance criteria. Each prints one PASS/FAIL line with its
//! runtime bound; the test fails if any criterion does.
//!
//! Values are recomputed here by oracles that share no code with the library:
//! eta quotients are built factor by factor, congruences use sparse pentagonal
//! division over `u64` residues, and partitions are enumerated from scratch.

use std::collections::BTreeSet;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use qcrank::crank::{a_oracle, colored_objects, crank_tally, Interpretation};
use qcrank::qproducts::euler_product;
use qcrank::verifier::sequences::{a_series, c_series};
use qcrank::verifier::{registry, run_check, run_checks, CheckResult, Status};
use qcrank::Series;

type Outcome = Result<(), String>;

/// Exact power series `sum_{i <= n} s[i] q^i`, built by multiplying in one
/// binomial factor `(1 - q^k)^e` at a time.
mod exact {
    use num_bigint::BigInt;
    use num_traits::Zero;

    pub type Ps = Vec<BigInt>;

    pub fn one(n: usize) -> Ps {
        let mut s = vec![BigInt::zero(); n + 1];
        s[0] = BigInt::from(1);
        s
    }

    /// `s *= (1 - q^k)^e`.
    pub fn binomial(s: &mut Ps, k: usize, e: i64) {
        let n = s.len() - 1;
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                for i in (k..=n).rev() {
                    let lower = s[i - k].clone();
                    s[i] -= lower;
                }
            } else {
                for i in k..=n {
                    let lower = s[i - k].clone();
                    s[i] += lower;
                }
            }
        }
    }

    /// `q^shift prod_delta (q^delta; q^delta)^e`.
    pub fn eta(factors: &[(usize, i64)], shift: usize, n: usize) -> Ps {
        poch(&factors.iter().map(|&(d, e)| (d, d, e)).collect::<Vec<_>>(), shift, n)
    }

    /// `q^shift prod (q^a; q^m)^e` over `(a, m, e)`.
    pub fn poch(factors: &[(usize, usize, i64)], shift: usize, n: usize) -> Ps {
        let mut s = one(n);
        for &(a, m, e) in factors {
            let mut k = a;
            while k <= n {
                binomial(&mut s, k, e);
                k += m;
            }
        }
        shifted(&s, shift)
    }

    pub fn shifted(s: &Ps, shift: usize) -> Ps {
        let n = s.len() - 1;
        (0..=n).map(|i| if i >= shift { s[i - shift].clone() } else { BigInt::zero() }).collect()
    }

    pub fn mul(a: &Ps, b: &Ps) -> Ps {
        let n = a.len().min(b.len()) - 1;
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, x) in a.iter().enumerate().take(n + 1).filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().take(n + 1 - i) {
                out[i + j] += x * y;
            }
        }
        out
    }

    pub fn add(a: &Ps, b: &Ps) -> Ps {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn scale(a: &Ps, c: i64) -> Ps {
        a.iter().map(|x| x * c).collect()
    }

    pub fn linear(terms: &[(i64, Ps)]) -> Ps {
        let n = terms[0].1.len() - 1;
        terms.iter().fold(vec![BigInt::zero(); n + 1], |acc, (c, s)| add(&acc, &scale(s, *c)))
    }

    pub fn small(s: &Ps) -> Vec<i64> {
        s.iter().map(|x| i64::try_from(x).expect("fits")).collect()
    }
}

/// Residues mod `m` of eta products via the pentagonal number theorem.
mod residues {
    /// `(q^delta; q^delta)` as sparse terms `(exponent, +-1)` up to `n`.
    pub fn euler_terms(delta: usize, n: usize) -> Vec<(usize, i64)> {
        let mut terms = vec![(0, 1)];
        for k in 1i64.. {
            let (w1, w2) = ((k * (3 * k - 1) / 2) as usize * delta, (k * (3 * k + 1) / 2) as usize * delta);
            if w1 > n {
                break;
            }
            let sign = if k % 2 == 0 { 1 } else { -1 };
            terms.push((w1, sign));
            if w2 <= n {
                terms.push((w2, sign));
            }
        }
        terms
    }

    pub struct Ring {
        pub m: u64,
        pub n: usize,
    }

    impl Ring {
        fn lift(&self, c: i64) -> u64 {
            c.rem_euclid(self.m as i64) as u64
        }

        pub fn one(&self) -> Vec<u64> {
            let mut s = vec![0; self.n + 1];
            s[0] = 1 % self.m;
            s
        }

        /// `s *= (q^delta; q^delta)`.
        pub fn times_euler(&self, s: &mut [u64], delta: usize) {
            let terms = euler_terms(delta, self.n);
            for i in (0..=self.n).rev() {
                let mut acc = 0;
                for &(t, c) in terms.iter().take_while(|(t, _)| *t <= i) {
                    acc = (acc + self.lift(c) * s[i - t]) % self.m;
                }
                s[i] = acc;
            }
        }

        /// `s /= (q^delta; q^delta)`.
        pub fn over_euler(&self, s: &mut [u64], delta: usize) {
            let terms = euler_terms(delta, self.n);
            for i in 0..=self.n {
                let mut acc = s[i];
                for &(t, c) in terms.iter().skip(1).take_while(|(t, _)| *t <= i) {
                    acc = (acc + self.m * self.m - self.lift(c) * s[i - t]) % self.m;
                }
                s[i] = acc;
            }
        }

        pub fn eta(&self, factors: &[(usize, i64)]) -> Vec<u64> {
            let mut s = self.one();
            for &(d, e) in factors {
                for _ in 0..e.unsigned_abs() {
                    if e > 0 {
                        self.times_euler(&mut s, d)
                    } else {
                        self.over_euler(&mut s, d)
                    }
                }
            }
            s
        }
    }
}

// ---- shared helpers ----------------------------------------------------

fn expect_pass(r: &CheckResult) -> Outcome {
    match r.status {
        Status::Pass => Ok(()),
        _ => Err(format!("{} at N={}: {:?} {:?}", r.id, r.order_used, r.status, r.first_failure)),
    }
}

fn run_pass(id: &str, min_order: i64) -> Outcome {
    let r = run_check(id, None).map_err(|e| e.to_string())?;
    if r.order_used < min_order {
        return Err(format!("{id} ran at N={} < {min_order}", r.order_used));
    }
    expect_pass(&r)
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn lib_coeffs(s: &Series, n: i64) -> Vec<BigInt> {
    (0..=n).map(|i| s.coeff_at(i).unwrap()).collect()
}

fn compare(label: &str, ours: &[BigInt], theirs: &[BigInt]) -> Outcome {
    match ours.iter().zip(theirs).position(|(x, y)| x != y) {
        None => Ok(()),
        Some(i) => Err(format!("{label}: q^{i}: {} vs {}", ours[i], theirs[i])),
    }
}

/// `2q + f1^3/f2^2`.
fn crank_parity_series(n: usize) -> exact::Ps {
    let mut s = exact::eta(&[(1, 3), (2, -2)], 0, n);
    if n >= 1 {
        s[1] += 2;
    }
    s
}

// ---- the criteria ------------------------------------------------------

/// Partitions of `n` with parts at most `max`, visiting each.
fn each_partition(n: u32, max: u32, parts: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if n == 0 {
        visit(parts);
        return;
    }
    for part in (1..=max.min(n)).rev() {
        parts.push(part);
        each_partition(n - part, part, parts, visit);
        parts.pop();
    }
}

fn crank_of(parts: &[u32]) -> i64 {
    let ones = parts.iter().filter(|&&p| p == 1).count() as i64;
    if ones == 0 {
        parts.iter().copied().max().unwrap_or(0) as i64
    } else {
        parts.iter().filter(|&&p| p as i64 > ones).count() as i64 - ones
    }
}

fn c1_bruteforce() -> Outcome {
    let limit = 45;
    let series = exact::small(&crank_parity_series(limit));
    let p = exact::small(&exact::eta(&[(1, -1)], 0, limit));
    for n in 0..=limit as u32 {
        let (mut even, mut odd) = (0i64, 0i64);
        each_partition(n, n, &mut Vec::new(), &mut |parts| {
            if crank_of(parts) % 2 == 0 {
                even += 1
            } else {
                odd += 1
            }
        });
        let i = n as usize;
        ensure(even + odd == p[i], || format!("n={n}: c_e + c_o = {} but p = {}", even + odd, p[i]))?;
        ensure(even - odd == series[i], || format!("n={n}: c_e - c_o = {} but series has {}", even - odd, series[i]))?;
        let t = crank_tally(n);
        ensure((t.c_even as i64, t.c_odd as i64) == (even, odd), || format!("n={n}: library tally {t:?}"))?;
    }
    ensure(series[3] == -1 && series[4] == 5, || format!("C(3), C(4) = {}, {}", series[3], series[4]))?;
    run_pass("cgen_bruteforce", 45)
}

fn c2_thm1() -> Outcome {
    let n = 300;
    let lhs: exact::Ps = crank_parity_series(n)
        .into_iter()
        .enumerate()
        .map(|(i, c)| if i % 5 == 4 { c } else { BigInt::zero() })
        .collect();
    let rhs = exact::scale(&exact::eta(&[(5, 2), (25, 1), (50, 2), (10, -4)], 4, n), 5);
    compare("thm1 oracle", &lhs, &rhs)?;
    ensure(lhs[4] == BigInt::from(5) && rhs[4] == BigInt::from(5), || "q^4 coefficient is not 5".into())?;
    compare("library C", &lib_coeffs(&c_series(n as i64, None).unwrap(), n as i64), &crank_parity_series(n))?;
    run_pass("thm1", 300)
}

fn c3_mod5() -> Outcome {
    // p and C mod 10 determine c_e = (p + C)/2 and c_o = (p - C)/2 mod 5
    let ring = residues::Ring { m: 10, n: 2000 };
    let p = ring.eta(&[(1, -1)]);
    let mut c = ring.eta(&[(1, 3), (2, -2)]);
    c[1] = (c[1] + 2) % 10;
    for n in (4..=2000).step_by(5) {
        let (ce, co) = ((p[n] + c[n]) % 10, (p[n] + 10 - c[n]) % 10);
        ensure(c[n] % 5 == 0, || format!("C({n}) = {} mod 10", c[n]))?;
        ensure(ce % 2 == 0 && co % 2 == 0, || format!("p({n}) +- C({n}) is odd"))?;
        ensure((ce / 2) % 5 == 0 && (co / 2) % 5 == 0, || format!("c_e/c_o({n}) not divisible by 5"))?;
    }
    run_pass("cor_mod5", 2000)
}

fn c4_quintisections() -> Outcome {
    let n = 300;
    let quotient = |num: &[usize], den: &[usize], m: usize, e: i64| -> Vec<(usize, usize, i64)> {
        num.iter().map(|&a| (a, m, e)).chain(den.iter().map(|&a| (a, m, -e))).collect()
    };
    // f2^2 against the products over q^50
    let lemma_a = exact::mul(
        &exact::eta(&[(50, 2)], 0, n),
        &exact::linear(&[
            (1, exact::poch(&quotient(&[20, 30], &[10, 40], 50, 2), 0, n)),
            (2, exact::poch(&quotient(&[10, 40], &[20, 30], 50, 1), 6, n)),
            (-2, exact::poch(&quotient(&[20, 30], &[10, 40], 50, 1), 2, n)),
            (1, exact::poch(&quotient(&[10, 40], &[20, 30], 50, 2), 8, n)),
            (-1, exact::shifted(&exact::one(n), 4)),
        ]),
    );
    compare("f2^2 quintisection", &exact::eta(&[(2, 2)], 0, n), &lemma_a)?;
    // f1^3 and f1 against R = (q^15;q^25)(q^10;q^25)/((q^20;q^25)(q^5;q^25))
    let r = |k: i64, shift: usize| exact::poch(&quotient(&[15, 10], &[20, 5], 25, k), shift, n);
    let lemma_b = exact::mul(
        &exact::eta(&[(25, 3)], 0, n),
        &exact::linear(&[(1, r(3, 0)), (-3, r(2, 1)), (-3, r(-2, 5)), (-1, r(-3, 6)), (5, exact::shifted(&exact::one(n), 3))]),
    );
    compare("f1^3 quintisection", &exact::eta(&[(1, 3)], 0, n), &lemma_b)?;
    let classical = exact::mul(
        &exact::eta(&[(25, 1)], 0, n),
        &exact::linear(&[(1, r(1, 0)), (-1, exact::shifted(&exact::one(n), 1)), (-1, r(-1, 2))]),
    );
    compare("f1 quintisection", &exact::eta(&[(1, 1)], 0, n), &classical)?;
    ["lemma1a", "lemma1b", "ramanujan_quint"].iter().try_for_each(|id| run_pass(id, 300))
}

/// All permutations of `0..k` with their signs.
fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    if k == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (perm, sign) in permutations(k - 1) {
        // insert k-1 at each position; moving it left past j entries flips the sign j times
        for pos in 0..=perm.len() {
            let mut p = perm.clone();
            p.insert(pos, k - 1);
            let flips = (perm.len() - pos) as i64;
            out.push((p, if flips % 2 == 0 { sign } else { -sign }));
        }
    }
    out
}

fn c5_circulant() -> Outcome {
    let n = 150;
    let f2sq = exact::eta(&[(2, 2)], 0, n);
    let g: Vec<exact::Ps> = (0..5)
        .map(|r| f2sq.iter().enumerate().map(|(i, c)| if i % 5 == r { c.clone() } else { BigInt::zero() }).collect())
        .collect();
    let entry = |i: usize, j: usize| &g[(i + 5 - j) % 5];
    let mut det = vec![BigInt::zero(); n + 1];
    for (perm, sign) in permutations(5) {
        if perm.iter().enumerate().any(|(i, &j)| entry(i, j).iter().all(Zero::is_zero)) {
            continue;
        }
        let term = perm.iter().enumerate().skip(1).fold(entry(0, perm[0]).clone(), |acc, (i, &j)| exact::mul(&acc, entry(i, j)));
        det = exact::add(&det, &exact::scale(&term, sign));
    }
    compare("circulant determinant", &det, &exact::eta(&[(10, 12), (50, -2)], 0, n))?;
    run_pass("circulant_D", 150)
}

fn c6_unit_identities() -> Outcome {
    let n = 500;
    let bound = Duration::from_secs(60);
    let one = exact::one(n);
    let t = Instant::now();
    let thm3 = exact::linear(&[(1, exact::eta(&[(2, 3), (10, 1), (1, -1), (5, -3)], 0, n)), (-1, exact::eta(&[(1, 1), (10, 5), (2, -1), (5, -5)], 1, n))]);
    compare("level-10 identity", &thm3, &one)?;
    run_pass("thm3", 500)?;
    ensure(t.elapsed() < bound, || format!("level-10 identity took {:?}", t.elapsed()))?;
    let t = Instant::now();
    let thm8 = exact::linear(&[
        (1, exact::eta(&[(2, 7), (7, 1), (1, -7), (14, -1)], 0, n)),
        (-7, exact::eta(&[(7, 4), (1, -4)], 1, n)),
        (7, exact::eta(&[(14, 7), (1, -3), (2, -1), (7, -3)], 3, n)),
    ]);
    compare("level-14 identity", &thm8, &one)?;
    run_pass("thm8", 500)?;
    ensure(t.elapsed() < bound, || format!("level-14 identity took {:?}", t.elapsed()))
}

/// `(n mod 16) -> a(w_n) mod 16`, transcribed clause by clause.
const MOD16: [(u64, [i64; 2]); 8] =
    [(1, [-1, 0]), (3, [-2, 1]), (5, [-5, 4]), (7, [-3, 2]), (9, [-8, 7]), (11, [-7, 6]), (13, [-4, 3]), (15, [-6, 5])];
const MOD8: [(u64, [i64; 2]); 4] = [(1, [-1, 0]), (3, [-2, 1]), (5, [-4, 3]), (7, [-3, 2])];
const MOD4: [(u64, [i64; 2]); 2] = [(1, [-1, 0]), (3, [-2, 1])];

fn predicted(table: &[(u64, [i64; 2])], modulus: i64, n: i64) -> Option<u64> {
    let hits: Vec<u64> = table.iter().filter(|(_, cs)| cs.iter().any(|c| c.rem_euclid(modulus) == n.rem_euclid(modulus))).map(|(r, _)| *r).collect();
    (hits.len() == 1).then(|| hits[0])
}

fn omega(k: i64) -> i64 {
    // ceiling form: 0, 1, 2, 5, 7, 12, ...
    let j = (k + 1) / 2;
    if k % 2 == 1 {
        j * (3 * j - 1) / 2
    } else {
        j * (3 * j + 1) / 2
    }
}

fn c7_mod16() -> Outcome {
    let n = 20_000usize;
    // structural: each table partitions the residues with no gaps or overlaps
    for (table, m) in [(&MOD16[..], 16), (&MOD8[..], 8), (&MOD4[..], 4)] {
        for r in 0..m {
            ensure(predicted(table, m, r).is_some(), || format!("class {r} mod {m} is covered {} times", table.iter().filter(|(_, cs)| cs.iter().any(|c| c.rem_euclid(m) == r)).count()))?;
        }
    }
    let a = residues::Ring { m: 16, n }.eta(&[(2, 2), (1, -3)]);
    let omegas: Vec<i64> = (0..).map(omega).take_while(|&w| w <= n as i64).collect();
    ensure(omegas.len() >= 7 * 16, || format!("only {} pentagonal indices", omegas.len()))?;
    let pentagonal: BTreeSet<i64> = omegas.iter().copied().collect();
    for i in 0..=n {
        if !pentagonal.contains(&(i as i64)) {
            ensure(a[i] == 0, || format!("a({i}) = {} mod 16 off the pentagonal numbers", a[i]))?;
        }
    }
    for (k, &w) in omegas.iter().enumerate() {
        let (k, v) = (k as i64, a[w as usize]);
        ensure(v % 2 == 1, || format!("a(w_{k}) even"))?;
        for (table, m) in [(&MOD16[..], 16u64), (&MOD8[..], 8), (&MOD4[..], 4)] {
            let want = predicted(table, m as i64, k).unwrap();
            ensure(v % m == want, || format!("a(w_{k}) = {} mod {m}, clauses say {want}", v % m))?;
        }
        for m in [2usize, 4, 8, 16] {
            if let Some(&later) = omegas.get(k as usize + m) {
                ensure(a[later as usize] % m as u64 == v % m as u64, || format!("period {m} breaks at w_{k}"))?;
            }
        }
    }
    let head = exact::small(&exact::eta(&[(2, 2), (1, -3)], 0, 5));
    ensure(head == [1, 3, 7, 16, 32, 61], || format!("a(0..5) = {head:?}"))?;
    ["thm4_m1", "thm4_m2", "thm4_m3", "thm4_m4", "cor5_periodicity"].iter().try_for_each(|id| run_pass(id, 20_000))
}

/// The eight quotients, as `(coefficient, factors, q-shift)`.
const SEVEN_CLASS: [(i64, &[(usize, i64)], usize); 8] = [
    (1024, &[(2, 8), (14, 18), (1, -20), (7, -7)], 8),
    (1344, &[(2, 9), (14, 11), (1, -21)], 6),
    (-1024, &[(2, 16), (14, 10), (1, -24), (7, -3)], 5),
    (72, &[(2, 10), (7, 7), (14, 4), (1, -22)], 4),
    (-320, &[(2, 17), (7, 4), (14, 3), (1, -25)], 3),
    (-40, &[(2, 11), (7, 14), (1, -23), (14, -3)], 2),
    (56, &[(2, 18), (7, 11), (1, -26), (14, -4)], 1),
    (1, &[(2, 12), (7, 21), (1, -24), (14, -10)], 0),
];

fn seven_class_exact(n: usize) -> exact::Ps {
    let a = exact::eta(&[(2, 2), (1, -3)], 0, 7 * n + 2);
    (0..=n).map(|i| a[7 * i + 2].clone()).collect()
}

fn c8_seven() -> Outcome {
    let n = 120;
    let rhs = exact::linear(&SEVEN_CLASS.iter().map(|&(c, f, s)| (7 * c, exact::eta(f, s, n))).collect::<Vec<_>>());
    compare("7n+2 identity", &seven_class_exact(n), &rhs)?;
    let a = residues::Ring { m: 7, n: 7 * 10_000 + 2 }.eta(&[(2, 2), (1, -3)]);
    if let Some(k) = (0..=10_000).find(|k| a[7 * k + 2] != 0) {
        return Err(format!("a({}) = {} mod 7", 7 * k + 2, a[7 * k + 2]));
    }
    ensure(a_series(2, None).unwrap().coeff_at(2).unwrap() == BigInt::from(7), || "a(2) != 7".into())?;
    run_pass("thm6", 120)?;
    run_pass("cor7", 10_000)
}

fn c9_basis() -> Outcome {
    // everything multiplied by q^8 so only power series appear:
    // q^8 F = f1^20 f7^7/(f2^8 f14^18), q^2 t = T, q^3 g = G - 4q T
    let (order, n) = (80usize, 88usize);
    let f = exact::eta(&[(1, 20), (7, 7), (2, -8), (14, -18)], 0, n);
    let big_t = exact::eta(&[(2, 1), (7, 7), (1, -1), (14, -7)], 0, n);
    let big_g = exact::eta(&[(2, 8), (7, 4), (1, -4), (14, -8)], 0, n);
    let lhs = exact::mul(&f, &seven_class_exact(n));
    let c = [7168, -19264, -8456, 1288, 7];
    let d = [-7168, -2240, 392];
    let mut rhs = vec![BigInt::zero(); n + 1];
    let mut t_pow = exact::one(n);
    for k in 0..c.len() {
        rhs = exact::add(&rhs, &exact::scale(&exact::shifted(&t_pow, 8 - 2 * k), c[k]));
        if k < d.len() {
            rhs = exact::add(&rhs, &exact::scale(&exact::shifted(&exact::mul(&big_g, &t_pow), 5 - 2 * k), d[k]));
            rhs = exact::add(&rhs, &exact::scale(&exact::shifted(&exact::mul(&big_t, &t_pow), 6 - 2 * k), -4 * d[k]));
        }
        t_pow = exact::mul(&t_pow, &big_t);
    }
    // q^8 shifts exponents by 8, so order 80 of the identity is index 88 here
    compare("basis combination", &lhs[..=order + 8], &rhs[..=order + 8])?;
    run_pass("rk_basis_identity", 80)
}

const SHIFT_CLAIMS: [&str; 45] = [
    "cor1a", "cor1b", "cor1c", "cor2a", "cor2b", "cor2c", "cor2d", "cor2e", "cor2a_helper", "cor3a", "cor3b", "cor3c", "cor3d",
    "cor4a", "cor4b", "cor4c", "cor4d", "cor3a_dissection", "cor3a_mod2", "cor3b_mod2", "cor4bc_trisection", "cor4d_dissection",
    "cor3cd_mod2", "cor5_jacobi_a", "cor5_jacobi_b", "cor5_jacobi_c", "cor5_jacobi_d", "cor5b_dissection", "cor5d_f1sq",
    "cor5d_f1p4", "cor6a", "cor6b", "cor6c", "cor6d", "cor6_f2sq", "cor6_mod2", "gauss_sq_cors", "tri_cors",
    "tri_cors_dissection", "ram_theta_cor", "ram_theta_f2f10", "ram_theta_f1f5", "weighted_pent_cor_a", "weighted_pent_cor_b",
    "big_10n9",
];

fn c10_catalogue() -> Outcome {
    let known: BTreeSet<&str> = registry().iter().map(|c| c.id).collect();
    if let Some(missing) = SHIFT_CLAIMS.iter().find(|id| !known.contains(*id)) {
        return Err(format!("{missing} is not registered"));
    }
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let results = run_checks(&SHIFT_CLAIMS, None, jobs).map_err(|e| e.to_string())?;
    for r in results {
        let r = r.map_err(|e| e.to_string())?;
        expect_pass(&r)?;
        if ["cor5_jacobi_b", "cor6a"].contains(&r.id.as_str()) {
            ensure(r.order_used >= 1000, || format!("{} ran at N={}", r.id, r.order_used))?;
        }
        if r.id == "big_10n9" {
            ensure(r.order_used == 40, || format!("big_10n9 ran at N={}", r.order_used))?;
        }
    }
    Ok(())
}

/// `sum_mult weight(part, mult) q^(part mult)` multiplied over parts, as
/// an independent count of colored partitions.
fn colored_count(n: usize, weight: impl Fn(usize, usize) -> u128) -> Vec<u128> {
    let mut s = vec![0u128; n + 1];
    s[0] = 1;
    for part in 1..=n {
        let mut next = vec![0u128; n + 1];
        for (i, &x) in s.iter().enumerate().filter(|(_, x)| **x != 0) {
            for mult in 0..=(n - i) / part {
                next[i + mult * part] += x * weight(part, mult);
            }
        }
        s = next;
    }
    s
}

fn choose(n: usize, k: usize) -> u128 {
    if k > n {
        0
    } else {
        (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
    }
}

fn c11_interpretations() -> Outcome {
    let n = 30;
    let series: Vec<u128> = exact::eta(&[(2, 2), (1, -3)], 0, n).iter().map(|x| x.to_u128().unwrap()).collect();
    let odd3 = colored_count(n, |part, mult| if part % 2 == 1 { choose(mult + 2, 2) } else { 1 });
    let nu2 = colored_count(n, |part, mult| choose(3 + part.trailing_zeros() as usize, mult));
    let first2 = colored_count(n, |_, mult| match mult {
        0 => 1,
        1 => 3,
        _ => 4,
    });
    for (label, counts) in [("odd parts in 3 colors", &odd3), ("distinct parts in 3 + nu2 colors", &nu2), ("first two occurrences", &first2)] {
        ensure(counts == &series, || format!("{label}: {counts:?}"))?;
    }
    for interpretation in Interpretation::ALL {
        for k in 0..=n {
            let v = a_oracle(k as u32, interpretation);
            ensure(v == series[k], || format!("{} at {k}: {v}", interpretation.name()))?;
        }
    }
    // the worked lists of size-3 objects
    let printed: [&[&str]; 3] = [
        &["3_3", "3_2", "3_1", "2,1_3", "2,1_2", "2,1_1", "1_3,1_3,1_3", "1_3,1_3,1_2", "1_3,1_3,1_1", "1_3,1_2,1_2", "1_3,1_2,1_1", "1_3,1_1,1_1", "1_2,1_2,1_2", "1_2,1_2,1_1", "1_2,1_1,1_1", "1_1,1_1,1_1"],
        // part 1 has three colors used at most once each, so the last object is (1_3,1_2,1_1)
        &["3_3", "3_2", "3_1", "2_4,1_3", "2_4,1_2", "2_4,1_1", "2_3,1_3", "2_3,1_2", "2_3,1_1", "2_2,1_3", "2_2,1_2", "2_2,1_1", "2_1,1_3", "2_1,1_2", "2_1,1_1", "1_3,1_2,1_1"],
        &["3", "3_1", "3_2", "2,1", "2,1_1", "2,1_2", "2_1,1", "2_1,1_1", "2_1,1_2", "2_2,1", "2_2,1_1", "2_2,1_2", "1,1,1", "1_1,1,1", "1_2,1,1", "1_2,1_1,1"],
    ];
    for (interpretation, list) in Interpretation::ALL.into_iter().zip(printed) {
        let ours: BTreeSet<String> = colored_objects(3, interpretation).map_err(|e| e.to_string())?.into_iter().collect();
        let theirs: BTreeSet<String> = list.iter().map(|s| format!("({s})")).collect();
        ensure(ours == theirs && ours.len() == 16, || format!("{}: {ours:?}", interpretation.name()))?;
    }
    Ok(())
}

fn series_strategy() -> impl Strategy<Value = Series> {
    (-2i64..3, prop::collection::vec(-30i64..30, 0..14))
        .prop_map(|(v, c)| Series::from_coeffs(v, c.into_iter().map(BigInt::from).collect(), 16))
}

fn agree(a: &Series, b: &Series) -> bool {
    a.agrees_to(b, a.order().min(b.order())).unwrap()
}

fn c12_properties() -> Outcome {
    // one runner per property: a reused runner counts earlier successes
    let runner = || TestRunner::new(Config::with_cases(100));
    let s = series_strategy;
    // cases actually executed per property, including shrinking runs
    let ran = std::cell::Cell::new(0u32);
    let counted = |label: &str| -> Outcome {
        let n = ran.replace(0);
        ensure(n >= 100, || format!("{label}: only {n} cases ran"))
    };
    runner()
        .run(&(s(), s(), s()), |(a, b, c)| {
            ran.set(ran.get() + 1);
            prop_assert!(agree(&a.mul(&b)?, &b.mul(&a)?));
            prop_assert!(agree(&a.mul(&b)?.mul(&c)?, &a.mul(&b.mul(&c)?)?));
            prop_assert!(agree(&a.mul(&b.add(&c)?)?, &a.mul(&b)?.add(&a.mul(&c)?)?));
            prop_assert!(agree(&a.add(&b)?.add(&c)?, &a.add(&b.add(&c)?)?));
            prop_assert!(a.sub(&a)?.is_zero());
            Ok(())
        })
        .map_err(|e| format!("ring axioms: {e}"))?;
    counted("ring axioms")?;
    runner()
        .run(&(s(), 1i64..6), |(a, m)| {
            ran.set(ran.get() + 1);
            let mut total = Series::zero(a.order());
            for r in 0..m {
                total = total.add(&a.dissect(m, r)?.subst_qk(m)?.shift(r))?;
            }
            prop_assert!(agree(&total, &a));
            Ok(())
        })
        .map_err(|e| format!("dissection round trip: {e}"))?;
    counted("dissection round trip")?;
    runner()
        .run(&(s(), s(), 2u64..30), |(a, b, m)| {
            ran.set(ran.get() + 1);
            let (ra, rb) = (a.reduce_mod_u64(m)?, b.reduce_mod_u64(m)?);
            prop_assert!(agree(&a.mul(&b)?.reduce_mod_u64(m)?, &ra.mul(&rb)?));
            prop_assert!(agree(&a.add(&b)?.reduce_mod_u64(m)?, &ra.add(&rb)?));
            Ok(())
        })
        .map_err(|e| format!("reduce_mod homomorphism: {e}"))?;
    counted("reduce_mod homomorphism")?;
    runner()
        .run(&(1u64..5, 0i64..200), |(delta, order)| {
            ran.set(ran.get() + 1);
            let dense = exact::eta(&[(delta as usize, 1)], 0, order as usize);
            prop_assert_eq!(lib_coeffs(&euler_product(delta, order), order), dense);
            Ok(())
        })
        .map_err(|e| format!("sparse vs dense Euler product: {e}"))?;
    counted("sparse vs dense Euler product")?;
    Ok(())
}

type Criterion = (&'static str, u64, fn() -> Outcome);

const CRITERIA: [Criterion; 12] = [
    ("brute-force crank concordance, n <= 45", 10, c1_bruteforce),
    ("5n+4 class of C as an eta quotient, N = 300", 30, c2_thm1),
    ("C, c_e, c_o vanish mod 5 on 5n+4 <= 2000", 10, c3_mod5),
    ("quintisections of f2^2, f1^3 and f1, N = 300", 30, c4_quintisections),
    ("circulant determinant, N = 150", 60, c5_circulant),
    ("level-10 and level-14 unit identities, N = 500", 120, c6_unit_identities),
    ("a(n) mod 2, 4, 8, 16 and periodicity, N = 20000", 120, c7_mod16),
    ("7n+2 eta-quotient identity and a(7n+2) mod 7", 120, c8_seven),
    ("7n+2 class in the level-14 basis, N = 80", 120, c9_basis),
    ("shifted-sum corollaries and their helper identities", 600, c10_catalogue),
    ("three colored-partition readings of a(n), n <= 30", 60, c11_interpretations),
    ("randomized series properties, 100 cases each", 60, c12_properties),
];

#[test]
fn acceptance_criteria() {
    // written straight to the stream so the lines show without --nocapture
    let mut out = std::io::stdout().lock();
    writeln!(out).unwrap();
    let mut failed = Vec::new();
    for (i, (name, bound, criterion)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(criterion)).unwrap_or_else(|panic| {
            let message = panic.downcast_ref::<String>().cloned().or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", message.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| ensure(elapsed < Duration::from_secs(*bound), || format!("over the {bound} s bound")));
        let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
        writeln!(out, "{status} {:>2}. {name} ({:.2} s, bound {bound} s)", i + 1, elapsed.as_secs_f64()).unwrap();
        if let Err(why) = outcome {
            writeln!(out, "        {why}").unwrap();
            failed.push(i + 1);
        }
    }
    out.flush().unwrap();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
