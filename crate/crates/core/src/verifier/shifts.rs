//! Congruences for theta-weighted shifted sums of `B(n) = C(5n+4)` and of
//! `a(n)`, with the dissection identities behind them.
//!
//! `sum_k w(k) C(5n+4 - 5s idx(k)) = sum_k w(k) B(n - s idx(k))`, so every
//! statement about `C` is checked as a convolution of `B`.

use super::convolution::{theta_convolution, ShiftKind, Weight};
use super::{eta_sum, series_eq, sweep, Check, Context, Expect, Outcome, VerifyError};
use crate::qproducts::triple_product;
use crate::series::Series;

type Term = (i64, &'static [(u64, i64)], i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Base {
    /// `B(n) = C(5n+4)`.
    B,
    A,
}

#[derive(Clone, Copy)]
enum Want {
    DivisibleBy(u64),
    Zero,
    OddIff(fn(i64) -> bool),
}

/// `conv(base)` read at `stride * n + offset`, for every `n` with `applies(n)`.
#[derive(Clone, Copy)]
struct Claim {
    clause: &'static str,
    base: Base,
    shifts: ShiftKind,
    scale: i64,
    weight: Weight,
    stride: i64,
    offset: i64,
    applies: fn(i64) -> bool,
    want: Want,
}

const fn claim(clause: &'static str, base: Base, shifts: ShiftKind, scale: i64, weight: Weight) -> Claim {
    Claim { clause, base, shifts, scale, weight, stride: 1, offset: 0, applies: |_| true, want: Want::DivisibleBy(2) }
}

impl Claim {
    const fn read_at(self, stride: i64, offset: i64) -> Claim {
        Claim { stride, offset, ..self }
    }

    const fn when(self, applies: fn(i64) -> bool) -> Claim {
        Claim { applies, ..self }
    }

    const fn want(self, want: Want) -> Claim {
        Claim { want, ..self }
    }
}

fn is_square(x: i64) -> bool {
    x >= 0 && (x as u64).isqrt().pow(2) == x as u64
}

fn is_triangular(n: i64) -> bool {
    n >= 0 && is_square(8 * n + 1)
}

fn is_pentagonal(n: i64) -> bool {
    n >= 0 && is_square(24 * n + 1)
}

use Base::{A, B};
use ShiftKind::{Pentagonal as Pent, PentagonalOneSided, Ramanujan as RamShift, Squares, Triangular as Tri};
use Want::{DivisibleBy, OddIff, Zero};

const COR1A: Claim = claim("", B, Pent, 1, Weight::Unit).when(|n| n % 2 == 0).want(OddIff(|n| n % 20 == 0 && is_pentagonal(n / 20)));
const COR1B: Claim = claim("", B, Pent, 5, Weight::Unit).when(|n| n % 8 == 0).want(OddIff(|n| n % 8 == 0 && is_triangular(n / 8)));
const COR1C: Claim =
    claim("", B, Pent, 5, Weight::Unit).when(|n| n % 8 == 4).want(OddIff(|n| (n - 4) % 40 == 0 && is_triangular((n - 4) / 40)));
const COR2A: Claim = claim("", B, Pent, 5, Weight::Unit).when(|n| n % 2 == 1);
const COR2B: Claim = claim("", B, Pent, 5, Weight::Unit).when(|n| n % 8 == 6);
const COR2C: Claim = claim("", B, Pent, 5, Weight::Alternating).when(|n| n % 8 == 5).want(DivisibleBy(25));
const COR2D: Claim = claim("", B, Pent, 10, Weight::Alternating).read_at(10, 4).when(|n| n % 5 != 0).want(DivisibleBy(25));
const COR2E: Claim = claim("", B, Pent, 10, Weight::Alternating).read_at(10, 9).when(|n| n % 5 != 2).want(DivisibleBy(25));

const COR3A: Claim = claim("", A, Pent, 1, Weight::Unit).read_at(2, 0).want(OddIff(is_pentagonal));
const COR3B: Claim = claim("", A, Pent, 2, Weight::Unit).read_at(2, 1).want(OddIff(|n| is_triangular(2 * n + 1)));
const COR3C: Claim = claim("", A, Pent, 5, Weight::Unit).read_at(2, 0).want(OddIff(is_triangular));
const COR3D: Claim = claim("", A, Pent, 5, Weight::Unit).read_at(2, 1).want(OddIff(|n| n % 5 == 0 && is_triangular(n / 5)));
const COR4A: Claim = claim("", A, PentagonalOneSided, 1, Weight::Alternating).read_at(2, 1);
const COR4B: Claim = claim("", A, Pent, 2, Weight::Alternating).read_at(3, 1).want(DivisibleBy(3));
const COR4C: Claim = claim("", A, Pent, 2, Weight::Alternating).read_at(3, 2).want(DivisibleBy(6));
const COR4D: Claim = claim("", A, Pent, 3, Weight::Alternating).read_at(2, 1).want(DivisibleBy(3));

const COR5A: Claim = claim("", B, Tri, 1, Weight::Jacobi).when(|n| matches!(n % 5, 1 | 3)).want(DivisibleBy(25));
const COR5B: Claim = claim("", B, Tri, 2, Weight::Jacobi).when(|n| matches!(n % 5, 2 | 3)).want(Zero);
const COR5C: Claim = claim("", B, Tri, 2, Weight::Unit).when(|n| n % 5 != 0);
const COR5D: Claim = claim("", B, Tri, 5, Weight::Unit).when(|n| n % 2 == 1);
const COR6A: Claim = claim("", A, Tri, 1, Weight::Jacobi).read_at(2, 1).want(Zero);
const COR6B: Claim = claim("", A, Tri, 1, Weight::Unit).read_at(4, 0).want(OddIff(is_pentagonal));
const COR6C: Claim = claim("", A, Tri, 1, Weight::Unit).read_at(4, 2);
const COR6D: Claim = claim("", A, Tri, 2, Weight::Unit).read_at(5, 2).when(|n| n % 5 != 1);

const GAUSS_A: Claim = claim("(a)", B, Squares, 1, Weight::Alternating).when(|n| n % 5 == 4).want(DivisibleBy(25));
const GAUSS_B: Claim = claim("(b)", B, Squares, 2, Weight::Alternating).when(|n| n % 5 == 4).want(DivisibleBy(25));
const TRI_A: Claim = claim("(a)", B, Tri, 1, Weight::Unit).when(|n| matches!(n % 10, 6 | 8));
const TRI_B: Claim = claim("(b)", B, Tri, 5, Weight::Unit).when(|n| n % 2 == 1);
const RAM: Claim = claim("", B, RamShift, 1, Weight::Ramanujan).when(|n| matches!(n % 5, 1 | 3)).want(Zero);
const WPENT_A: Claim = claim("", B, Pent, 1, Weight::OneMinusK).when(|n| matches!(n % 5, 2 | 3)).want(DivisibleBy(25));
const WPENT_B: Claim = claim("", B, Pent, 5, Weight::OneMinusK).when(|n| n % 10 == 9).want(DivisibleBy(25));

/// The twenty terms `(c, quotient, q-shift)` with
/// `sum A(10n+9) q^n = -10 f5^2 / (f1^10 f2^4) * sum c q^s quotient`.
const BIG_10N9: [Term; 20] = [
    (17, &[(4, 38), (10, 4), (2, -20), (20, -6)], 0),
    (617, &[(4, 31), (5, 5), (1, -1), (2, -16), (20, -3)], 1),
    (6448, &[(4, 34), (10, 2), (2, -18), (20, -2)], 2),
    (37948, &[(4, 27), (5, 5), (20, 1), (1, -1), (2, -14), (10, -2)], 3),
    (57143, &[(4, 30), (20, 2), (2, -16)], 4),
    (110960, &[(4, 23), (5, 5), (20, 5), (1, -1), (2, -12), (10, -4)], 5),
    (-331248, &[(4, 26), (20, 6), (2, -14), (10, -2)], 6),
    (-346100, &[(4, 19), (5, 5), (20, 9), (1, -1), (2, -10), (10, -6)], 7),
    (422490, &[(4, 22), (20, 10), (2, -12), (10, -4)], 8),
    (453450, &[(4, 15), (5, 5), (20, 13), (1, -1), (2, -8), (10, -8)], 9),
    (471600, &[(4, 18), (20, 14), (2, -10), (10, -6)], 10),
    (-367500, &[(4, 11), (5, 5), (20, 17), (1, -1), (2, -6), (10, -10)], 11),
    (-1736450, &[(4, 14), (20, 18), (2, -8), (10, -8)], 12),
    (-5000, &[(4, 7), (5, 5), (20, 21), (1, -1), (2, -4), (10, -12)], 13),
    (1630000, &[(4, 10), (20, 22), (2, -6), (10, -10)], 14),
    (162500, &[(4, 3), (5, 5), (20, 25), (1, -1), (2, -2), (10, -14)], 15),
    (-466875, &[(4, 6), (20, 26), (2, -4), (10, -12)], 16),
    (-46875, &[(5, 5), (20, 29), (1, -1), (4, -1), (10, -16)], 17),
    (-100000, &[(4, 2), (20, 30), (2, -2), (10, -14)], 18),
    (46875, &[(20, 34), (4, -2), (10, -16)], 20),
];

const COR2A_HELPER: [Term; 3] = [
    (-2, &[(2, 1), (5, 8), (20, 1), (1, -4), (4, -1), (10, -3)], 0),
    (2, &[(4, 2), (5, 3), (20, 2), (1, -3), (2, -1), (10, -1)], 1),
    (2, &[(2, 1), (5, 3), (20, 6), (1, -3), (4, -2), (10, -3)], 3),
];

const F2SQ_OVER_F1SQ: [Term; 2] = [(1, &[(8, 5), (2, -3), (16, -2)], 0), (2, &[(4, 2), (16, 2), (2, -3), (8, -1)], 1)];

struct Entry {
    id: &'static str,
    description: &'static str,
    statement: &'static str,
    default_order: i64,
    modulus: Option<u64>,
    erratum: Option<&'static str>,
    run: super::Runner,
}

impl From<Entry> for Check {
    fn from(e: Entry) -> Check {
        Check {
            id: e.id,
            description: e.description,
            statement: e.statement,
            default_order: e.default_order,
            modulus: e.modulus,
            requires_bruteforce: false,
            erratum: e.erratum,
            run: e.run,
        }
    }
}

const PENT_B: &str = "pentagonal-shift congruence for C";
const PENT_A: &str = "pentagonal-shift congruence for a";
const TRI_SHIFT: &str = "triangular-shift statement";
const HELPER: &str = "dissection identity used in a shift-congruence proof";
const SIGNED_WEIGHTS: &str = "holds with weights (-1)^k; without them the sum fails at small n";

pub(super) fn checks() -> Vec<Check> {
    let entries = [
        Entry { id: "cor1a", description: PENT_B, statement: "n even: sum_k C(5n+4-5w_k) is odd iff n = 20 w_j", default_order: 400, modulus: Some(50), erratum: None, run: |c, n| claims(c, n, &[COR1A]) },
        Entry { id: "cor1b", description: PENT_B, statement: "n = 0 (mod 8): sum_k C(5n+4-25w_k) is odd iff n = 8 D_j", default_order: 400, modulus: Some(50), erratum: None, run: |c, n| claims(c, n, &[COR1B]) },
        Entry { id: "cor1c", description: PENT_B, statement: "n = 4 (mod 8): sum_k C(5n+4-25w_k) is odd iff n = 40 D_j + 4", default_order: 400, modulus: Some(50), erratum: None, run: |c, n| claims(c, n, &[COR1C]) },
        Entry { id: "cor2a", description: PENT_B, statement: "n odd: sum_k C(5n+4-25w_k) = 0 (mod 2)", default_order: 400, modulus: Some(50), erratum: None, run: |c, n| claims(c, n, &[COR2A]) },
        Entry { id: "cor2b", description: PENT_B, statement: "n = 6 (mod 8): sum_k C(5n+4-25w_k) = 0 (mod 2)", default_order: 400, modulus: Some(50), erratum: None, run: |c, n| claims(c, n, &[COR2B]) },
        Entry { id: "cor2c", description: PENT_B, statement: "n = 5 (mod 8): (1/5) sum_k (-1)^k C(5n+4-25w_k) = 0 (mod 5)", default_order: 400, modulus: Some(50), erratum: None, run: |c, n| claims(c, n, &[COR2C]) },
        Entry { id: "cor2d", description: PENT_B, statement: "n != 0 (mod 5): (1/5) sum_k (-1)^k C(50n+24-50w_k) = 0 (mod 5)", default_order: 200, modulus: Some(50), erratum: None, run: |c, n| claims(c, n, &[COR2D]) },
        Entry { id: "cor2e", description: PENT_B, statement: "n != 2 (mod 5): (1/5) sum_k (-1)^k C(50n+49-50w_k) = 0 (mod 5)", default_order: 200, modulus: Some(50), erratum: None, run: |c, n| claims(c, n, &[COR2E]) },
        Entry { id: "cor2a_helper", description: HELPER, statement: "with sum A(n) q^n = f1^2 f5^2 f10^2/f2^4 = (1/5) sum_k (-1)^k B(n-5w_k): sum A(2n+1) q^n = -2 f2 f5^8 f20/(f1^4 f4 f10^3) + 2q f4^2 f5^3 f20^2/(f1^3 f2 f10) + 2q^3 f2 f5^3 f20^6/(f1^3 f4^2 f10^3)", default_order: 200, modulus: None, erratum: None, run: cor2a_helper },
        Entry { id: "cor3a", description: PENT_A, statement: "sum_k a(2n-w_k) is odd iff n = w_j", default_order: 1000, modulus: Some(6), erratum: None, run: |c, n| claims(c, n, &[COR3A]) },
        Entry { id: "cor3b", description: PENT_A, statement: "sum_k a(2n+1-2w_k) is odd iff 2n+1 = D_j", default_order: 1000, modulus: Some(6), erratum: Some("holds as 'odd iff 2n+1 is triangular'; the form 'even iff n is triangular' fails at n = 0"), run: |c, n| claims(c, n, &[COR3B]) },
        Entry { id: "cor3c", description: PENT_A, statement: "sum_k a(2n-5w_k) is odd iff n = D_j", default_order: 1000, modulus: Some(6), erratum: None, run: |c, n| claims(c, n, &[COR3C]) },
        Entry { id: "cor3d", description: PENT_A, statement: "sum_k a(2n+1-5w_k) is odd iff n = 5 D_j", default_order: 1000, modulus: Some(6), erratum: None, run: |c, n| claims(c, n, &[COR3D]) },
        Entry { id: "cor4a", description: PENT_A, statement: "sum_(k>=0) (-1)^k a(2n+1-w_k) = 0 (mod 2)", default_order: 1000, modulus: Some(6), erratum: None, run: |c, n| claims(c, n, &[COR4A]) },
        Entry { id: "cor4b", description: PENT_A, statement: "sum_k (-1)^k a(3n+1-2w_k) = 0 (mod 3)", default_order: 1000, modulus: Some(6), erratum: Some(SIGNED_WEIGHTS), run: |c, n| claims(c, n, &[COR4B]) },
        Entry { id: "cor4c", description: PENT_A, statement: "sum_k (-1)^k a(3n+2-2w_k) = 0 (mod 6)", default_order: 1000, modulus: Some(6), erratum: Some(SIGNED_WEIGHTS), run: |c, n| claims(c, n, &[COR4C]) },
        Entry { id: "cor4d", description: PENT_A, statement: "sum_k (-1)^k a(2n+1-3w_k) = 0 (mod 3)", default_order: 1000, modulus: Some(6), erratum: Some(SIGNED_WEIGHTS), run: |c, n| claims(c, n, &[COR4D]) },
        Entry { id: "cor3a_dissection", description: HELPER, statement: "f2^2/f1^2 = f8^5/(f2^3 f16^2) + 2q f4^2 f16^2/(f2^3 f8), and sum_k (-1)^k a(n-w_k) has generating function f2^2/f1^2", default_order: 300, modulus: None, erratum: Some("holds with +2q; the -2q variant fails at q^1"), run: cor3a_dissection },
        Entry { id: "cor3a_mod2", description: HELPER, statement: "f4^5/(f1^3 f8^2) = f1 (mod 2)", default_order: 500, modulus: Some(2), erratum: None, run: |c, n| identity(c, n, &[(1, &[(4, 5), (1, -3), (8, -2)], 0)], None, &[(1, &[(1, 1)], 0)], Some(2)) },
        Entry { id: "cor3b_mod2", description: HELPER, statement: "sum_k (-1)^k a(n-2w_k) has generating function f2^3/f1^3, and f2^3/f1^3 = f2^2/f1 (mod 2)", default_order: 500, modulus: Some(2), erratum: None, run: cor3b_mod2 },
        Entry { id: "cor4bc_trisection", description: HELPER, statement: "with sum A(n) q^n = f2^3/f1^3: sum A(3n+1) q^n = 3 f2^4 f3^5/(f1^8 f6) and sum A(3n+2) q^n = 6 f2^3 f3^2 f6^2/f1^7", default_order: 200, modulus: None, erratum: None, run: cor4bc_trisection },
        Entry { id: "cor4d_dissection", description: HELPER, statement: "f2^2 f3/f1^3 = f4^6 f6^3/(f2^7 f12^2) + 3q f4^2 f6 f12^2/f2^5, and sum_k (-1)^k a(n-3w_k) has generating function f2^2 f3/f1^3", default_order: 300, modulus: None, erratum: None, run: cor4d_dissection },
        Entry { id: "cor3cd_mod2", description: HELPER, statement: "f2^2 f5/f1^3 = f4^2/f2 + q f20^2/f10 (mod 2), and sum_k (-1)^k a(n-5w_k) has generating function f2^2 f5/f1^3", default_order: 500, modulus: Some(2), erratum: None, run: cor3cd_mod2 },
        Entry { id: "cor5_jacobi_a", description: TRI_SHIFT, statement: "n = 1, 3 (mod 5): (1/5) sum_(k>=0) (-1)^k (2k+1) C(5n+4-5D_k) = 0 (mod 5)", default_order: 400, modulus: Some(50), erratum: None, run: |c, n| claims(c, n, &[COR5A]) },
        Entry { id: "cor5_jacobi_b", description: TRI_SHIFT, statement: "n = 2, 3 (mod 5): sum_(k>=0) (-1)^k (2k+1) C(5n+4-10D_k) = 0 exactly", default_order: 1000, modulus: None, erratum: None, run: |c, n| claims(c, n, &[COR5B]) },
        Entry { id: "cor5_jacobi_c", description: TRI_SHIFT, statement: "n != 0 (mod 5): sum_(k>=0) C(5n+4-10D_k) = 0 (mod 2)", default_order: 400, modulus: Some(50), erratum: None, run: |c, n| claims(c, n, &[COR5C]) },
        Entry { id: "cor5_jacobi_d", description: TRI_SHIFT, statement: "n odd: sum_(k>=0) C(5n+4-25D_k) = 0 (mod 2)", default_order: 400, modulus: Some(50), erratum: None, run: |c, n| claims(c, n, &[COR5D]) },
        Entry { id: "cor5b_dissection", description: HELPER, statement: "f1^2/f2 = f25^2/f50 - 2q (q^15,q^35,q^50;q^50) + 2q^4 (q^5,q^45,q^50;q^50), and (1/5) sum_k (-1)^k (2k+1) B(n-2D_k) has generating function f1^2 f5 f10^2/f2", default_order: 300, modulus: None, erratum: Some("holds with +2q^4 (q^5,q^45,q^50;q^50); the -2q^4 variant fails at q^4"), run: cor5b_dissection },
        Entry { id: "cor5d_f1sq", description: HELPER, statement: "f1^2 = f2 f8^5/(f4^2 f16^2) - 2q f2 f16^2/f8", default_order: 300, modulus: None, erratum: None, run: |c, n| identity(c, n, &[(1, &[(1, 2)], 0)], None, &[(1, &[(2, 1), (8, 5), (4, -2), (16, -2)], 0), (-2, &[(2, 1), (16, 2), (8, -1)], 1)], None) },
        Entry { id: "cor5d_f1p4", description: HELPER, statement: "f1^4 = f4^10/(f2^2 f8^4) - 4q f2^2 f8^4/f4^2", default_order: 300, modulus: None, erratum: None, run: |c, n| identity(c, n, &[(1, &[(1, 4)], 0)], None, &[(1, &[(4, 10), (2, -2), (8, -4)], 0), (-4, &[(2, 2), (8, 4), (4, -2)], 1)], None) },
        Entry { id: "cor6a", description: TRI_SHIFT, statement: "sum_(k>=0) (-1)^k (2k+1) a(2n+1-D_k) = 0 exactly", default_order: 1000, modulus: None, erratum: None, run: |c, n| claims(c, n, &[COR6A]) },
        Entry { id: "cor6b", description: TRI_SHIFT, statement: "sum_(k>=0) a(4n-D_k) is odd iff n = w_j", default_order: 1000, modulus: Some(6), erratum: None, run: |c, n| claims(c, n, &[COR6B]) },
        Entry { id: "cor6c", description: TRI_SHIFT, statement: "sum_(k>=0) a(4n+2-D_k) = 0 (mod 2)", default_order: 1000, modulus: Some(6), erratum: None, run: |c, n| claims(c, n, &[COR6C]) },
        Entry { id: "cor6d", description: TRI_SHIFT, statement: "n != 1 (mod 5): sum_(k>=0) a(5n+2-2D_k) = 0 (mod 2)", default_order: 1000, modulus: Some(6), erratum: None, run: |c, n| claims(c, n, &[COR6D]) },
        Entry { id: "cor6_f2sq", description: HELPER, statement: "f2^2 = f4 f16^5/(f8^2 f32^2) - 2q^2 f4 f32^2/f16", default_order: 300, modulus: None, erratum: None, run: |c, n| identity(c, n, &[(1, &[(2, 2)], 0)], None, &[(1, &[(4, 1), (16, 5), (8, -2), (32, -2)], 0), (-2, &[(4, 1), (32, 2), (16, -1)], 2)], None) },
        Entry { id: "cor6_mod2", description: HELPER, statement: "f1 f4^5/(f2^2 f8^2) = f1 (mod 2)", default_order: 500, modulus: Some(2), erratum: None, run: |c, n| identity(c, n, &[(1, &[(1, 1), (4, 5), (2, -2), (8, -2)], 0)], None, &[(1, &[(1, 1)], 0)], Some(2)) },
        Entry { id: "gauss_sq_cors", description: "square-shift congruences for C", statement: "n = 4 (mod 5): (1/5) sum_k (-1)^k C(5n+4-5k^2) = 0 and (1/5) sum_k (-1)^k C(5n+4-10k^2) = 0 (mod 5)", default_order: 400, modulus: Some(50), erratum: None, run: |c, n| claims(c, n, &[GAUSS_A, GAUSS_B]) },
        Entry { id: "tri_cors", description: "unweighted triangular-shift congruences for C", statement: "(a) n = 6, 8 (mod 10): sum_(k>=0) C(5n+4-5D_k) = 0 (mod 2); (b) n odd: sum_(k>=0) C(5n+4-25D_k) = 0 (mod 2)", default_order: 400, modulus: Some(50), erratum: None, run: |c, n| claims(c, n, &[TRI_A, TRI_B]) },
        Entry { id: "tri_cors_dissection", description: HELPER, statement: "f1^2/f2 = f8^5/(f4^2 f16^2) - 2q f16^2/f8, and (1/5) sum_k B(n-5D_k) has generating function f1^2 f10^4/f2^4", default_order: 300, modulus: None, erratum: None, run: tri_cors_dissection },
        Entry { id: "ram_theta_cor", description: "Ramanujan theta-shift statement for C", statement: "n = 1, 3 (mod 5): sum_k (-1)^k (3k+1) C(5n+4-5k(3k+2)) = 0 exactly", default_order: 1000, modulus: None, erratum: None, run: |c, n| claims(c, n, &[RAM]) },
        Entry { id: "ram_theta_f2f10", description: HELPER, statement: "f2 f10 = (q^20,q^30,q^50;q^50)^2 - q^2 f10 f50 - q^4 (q^10,q^40,q^50;q^50)^2, and (1/5) sum_k (-1)^k (3k+1) B(n-k(3k+2)) has generating function f2 f5 f10^2", default_order: 300, modulus: None, erratum: None, run: ram_theta_f2f10 },
        Entry { id: "ram_theta_f1f5", description: HELPER, statement: "f1 f5 = (q^10,q^15,q^25;q^25)^2 - q f5 f25 - q^2 (q^5,q^20,q^25;q^25)^2", default_order: 300, modulus: None, erratum: None, run: ram_theta_f1f5 },
        Entry { id: "weighted_pent_cor_a", description: "weighted pentagonal-shift congruence for C", statement: "n = 2, 3 (mod 5): (1/5) sum_(k in Z) (1-k) C(5n+4-5w_k) = 0 (mod 5), w_k = k(3k-1)/2", default_order: 400, modulus: Some(50), erratum: Some(WPENT_NOTE), run: |c, n| claims(c, n, &[WPENT_A]) },
        Entry { id: "weighted_pent_cor_b", description: "weighted pentagonal-shift congruence for C", statement: "n = 9 (mod 10): (1/5) sum_(k in Z) (1-k) C(5n+4-25w_k) = 0 (mod 5), w_k = k(3k-1)/2", default_order: 400, modulus: Some(50), erratum: Some(WPENT_NOTE), run: |c, n| claims(c, n, &[WPENT_B]) },
        Entry { id: "big_10n9", description: "twenty-term identity for the 10n+9 class of f1^2 f5^6/f2^4", statement: "with sum A(n) q^n = f1^2 f5^6/f2^4 = (1/5) sum_k (1-6k) B(n-5w_k): sum A(10n+9) q^n = -10 f5^2/(f1^10 f2^4) sum_j c_j q^(s_j) Q_j over twenty eta quotients Q_j", default_order: 40, modulus: None, erratum: Some("the q^15 term holds with f2^2 in its denominator; f2^42 fails at q^15"), run: big_10n9 },
    ];
    entries.into_iter().map(Check::from).collect()
}

const WPENT_NOTE: &str = "holds with w_k = k(3k-1)/2 over all integers k; the k(3k+1)/2 convention fails";

fn base_series(ctx: &Context, base: Base, order: i64, modulus: Option<u64>) -> Result<std::sync::Arc<Series>, VerifyError> {
    match base {
        Base::B => ctx.b_series(order, modulus),
        Base::A => ctx.a_series(order, modulus),
    }
}

fn claims(ctx: &Context, n_max: i64, list: &[Claim]) -> Result<Outcome, VerifyError> {
    for c in list {
        let top = c.stride * n_max + c.offset;
        // 50 carries both the parity and the mod-25 statements, 6 the mod 2, 3, 6 ones
        let modulus = match (c.want, c.base) {
            (Want::Zero, _) => None,
            (_, Base::B) => Some(50),
            (_, Base::A) => Some(6),
        };
        let s = theta_convolution(&*base_series(ctx, c.base, top, modulus)?, c.shifts, c.scale, c.weight)?;
        let (stride, offset) = (c.stride, c.offset);
        let at = move |n: i64| stride * n + offset;
        let outcome = match c.want {
            Want::DivisibleBy(m) => sweep(c.clause, &s, n_max, at, c.applies, Expect::DivisibleBy(m))?,
            Want::Zero => sweep(c.clause, &s, n_max, at, c.applies, Expect::Zero)?,
            Want::OddIff(pred) => sweep(c.clause, &s, n_max, at, c.applies, Expect::OddIff(&pred))?,
        };
        if outcome.is_some() {
            return Ok(outcome);
        }
    }
    Ok(None)
}

/// `lhs` (dissected at `m n + r` when asked) against `rhs`.
fn identity(
    ctx: &Context,
    order: i64,
    lhs: &[Term],
    dissect: Option<(i64, i64)>,
    rhs: &[Term],
    modulus: Option<u64>,
) -> Result<Outcome, VerifyError> {
    let l = match dissect {
        Some((m, r)) => eta_sum(ctx, lhs, m * order + r, modulus)?.dissect(m, r)?,
        None => eta_sum(ctx, lhs, order, modulus)?,
    };
    series_eq("", &l, &eta_sum(ctx, rhs, order, modulus)?, order)
}

/// `conv(base) = factor * rhs`, over the integers.
fn generating_function(
    ctx: &Context,
    order: i64,
    base: Base,
    (shifts, scale, weight): (ShiftKind, i64, Weight),
    factor: i64,
    rhs: &[Term],
) -> Result<Outcome, VerifyError> {
    let s = theta_convolution(&*base_series(ctx, base, order, None)?, shifts, scale, weight)?;
    series_eq("generating function", &s, &eta_sum(ctx, rhs, order, None)?.scale_i64(factor), order)
}

fn tagged(clause: &str, outcome: Outcome) -> Outcome {
    outcome.map(|mut f| {
        f.clause = Some(clause.to_string());
        f
    })
}

fn cor2a_helper(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let a: &[Term] = &[(1, &[(1, 2), (5, 2), (10, 2), (2, -4)], 0)];
    if let Some(f) = generating_function(ctx, order, B, (Pent, 5, Weight::Alternating), 5, a)? {
        return Ok(Some(f));
    }
    Ok(tagged("2-dissection", identity(ctx, order, a, Some((2, 1)), &COR2A_HELPER, None)?))
}

fn cor3a_dissection(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let lhs: &[Term] = &[(1, &[(2, 2), (1, -2)], 0)];
    if let Some(f) = generating_function(ctx, order, A, (Pent, 1, Weight::Alternating), 1, lhs)? {
        return Ok(Some(f));
    }
    Ok(tagged("2-dissection", identity(ctx, order, lhs, None, &F2SQ_OVER_F1SQ, None)?))
}

fn cor3b_mod2(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let lhs: &[Term] = &[(1, &[(2, 3), (1, -3)], 0)];
    if let Some(f) = generating_function(ctx, order, A, (Pent, 2, Weight::Alternating), 1, lhs)? {
        return Ok(Some(f));
    }
    Ok(tagged("mod 2", identity(ctx, order, lhs, None, &[(1, &[(2, 2), (1, -1)], 0)], Some(2))?))
}

fn cor4bc_trisection(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let a: &[Term] = &[(1, &[(2, 3), (1, -3)], 0)];
    let one = identity(ctx, order, a, Some((3, 1)), &[(3, &[(2, 4), (3, 5), (1, -8), (6, -1)], 0)], None)?;
    if one.is_some() {
        return Ok(tagged("3n+1", one));
    }
    Ok(tagged("3n+2", identity(ctx, order, a, Some((3, 2)), &[(6, &[(2, 3), (3, 2), (6, 2), (1, -7)], 0)], None)?))
}

fn cor4d_dissection(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let lhs: &[Term] = &[(1, &[(2, 2), (3, 1), (1, -3)], 0)];
    if let Some(f) = generating_function(ctx, order, A, (Pent, 3, Weight::Alternating), 1, lhs)? {
        return Ok(Some(f));
    }
    let rhs: &[Term] = &[(1, &[(4, 6), (6, 3), (2, -7), (12, -2)], 0), (3, &[(4, 2), (6, 1), (12, 2), (2, -5)], 1)];
    Ok(tagged("2-dissection", identity(ctx, order, lhs, None, rhs, None)?))
}

fn cor3cd_mod2(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let lhs: &[Term] = &[(1, &[(2, 2), (5, 1), (1, -3)], 0)];
    if let Some(f) = generating_function(ctx, order, A, (Pent, 5, Weight::Alternating), 1, lhs)? {
        return Ok(Some(f));
    }
    let rhs: &[Term] = &[(1, &[(4, 2), (2, -1)], 0), (1, &[(20, 2), (10, -1)], 1)];
    Ok(tagged("mod 2", identity(ctx, order, lhs, None, rhs, Some(2))?))
}

/// `f1^2/f2` as `f25^2/f50 - 2q T(15, 50) + sign * 2q^4 T(5, 50)`.
fn f1sq_over_f2_quint(ctx: &Context, order: i64, sign: i64) -> Result<Series, VerifyError> {
    let head = ctx.eta(&[(25, 2), (50, -1)], 0, order, None)?;
    let t15 = triple_product(15, 50, order)?.scale_i64(-2).shift(1);
    let t5 = triple_product(5, 50, order)?.scale_i64(2 * sign).shift(4);
    Ok(head.add(&t15)?.add(&t5)?)
}

fn cor5b_dissection(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let gf: &[Term] = &[(1, &[(1, 2), (5, 1), (10, 2), (2, -1)], 0)];
    if let Some(f) = generating_function(ctx, order, B, (Tri, 2, Weight::Jacobi), 5, gf)? {
        return Ok(Some(f));
    }
    let lhs = ctx.eta(&[(1, 2), (2, -1)], 0, order, None)?;
    Ok(tagged("25-dissection", series_eq("", &lhs, &f1sq_over_f2_quint(ctx, order, 1)?, order)?))
}

fn tri_cors_dissection(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    if let Some(f) = generating_function(ctx, order, B, (Tri, 5, Weight::Unit), 5, &[(1, &[(1, 2), (10, 4), (2, -4)], 0)])? {
        return Ok(Some(f));
    }
    let rhs: &[Term] = &[(1, &[(8, 5), (4, -2), (16, -2)], 0), (-2, &[(16, 2), (8, -1)], 1)];
    Ok(tagged("2-dissection", identity(ctx, order, &[(1, &[(1, 2), (2, -1)], 0)], None, rhs, None)?))
}

/// `T(a1, m)^2 - q^s1 f_(m/5) f_m - q^s2 T(a2, m)^2`.
fn squared_triples(ctx: &Context, order: i64, m: u64, (a1, a2): (u64, u64), (s1, s2): (i64, i64)) -> Result<Series, VerifyError> {
    let first = triple_product(a1, m, order)?.pow(2)?;
    let middle = ctx.eta(&[(m / 5, 1), (m, 1)], s1, order, None)?;
    let last = triple_product(a2, m, order)?.pow(2)?.shift(s2);
    Ok(first.sub(&middle)?.sub(&last)?)
}

fn ram_theta_f2f10(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let gf: &[Term] = &[(1, &[(2, 1), (5, 1), (10, 2)], 0)];
    if let Some(f) = generating_function(ctx, order, B, (RamShift, 1, Weight::Ramanujan), 5, gf)? {
        return Ok(Some(f));
    }
    let rhs = squared_triples(ctx, order, 50, (20, 10), (2, 4))?;
    Ok(tagged("dissection", series_eq("", &*ctx.eta(&[(2, 1), (10, 1)], 0, order, None)?, &rhs, order)?))
}

fn ram_theta_f1f5(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let rhs = squared_triples(ctx, order, 25, (10, 5), (1, 2))?;
    series_eq("", &*ctx.eta(&[(1, 1), (5, 1)], 0, order, None)?, &rhs, order)
}

fn big_10n9_rhs(ctx: &Context, order: i64, terms: &[Term]) -> Result<Series, VerifyError> {
    let inner = eta_sum(ctx, terms, order, None)?;
    Ok(ctx.eta(&[(5, 2), (1, -10), (2, -4)], 0, order, None)?.mul(&inner)?.scale_i64(-10))
}

fn big_10n9(ctx: &Context, order: i64) -> Result<Outcome, VerifyError> {
    let a: &[Term] = &[(1, &[(1, 2), (5, 6), (2, -4)], 0)];
    if let Some(f) = generating_function(ctx, order, B, (Pent, 5, Weight::OneMinusSixK), 5, a)? {
        return Ok(Some(f));
    }
    let lhs = eta_sum(ctx, a, 10 * order + 9, None)?.dissect(10, 9)?;
    series_eq("10n+9", &lhs, &big_10n9_rhs(ctx, order, &BIG_10N9)?, order)
}
