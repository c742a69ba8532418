//! Partition enumeration, the Andrews–Garvan crank, and brute-force counters
//! for the colored-partition sequence `a(n)`.
//!
//! Everything here is deliberately naive: these are the ground-truth oracles
//! the series machinery is checked against.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrankError {
    #[error("nu2 is undefined at 0")]
    ZeroValuation,
    #[error("unknown interpretation `{0}` (expected odd_parts_3colors, distinct_nu2_colors or first_two_occurrences)")]
    UnknownInterpretation(String),
    #[error("parts must be positive and non-increasing")]
    InvalidPartition,
    #[error("literal colored-object listing is limited to n <= {max}, got {n}")]
    TooLarge { n: u32, max: u32 },
}

/// A partition as a non-increasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition, CrankError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CrankError::InvalidPartition);
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        multiplicities(&self.0)
    }

    pub fn crank(&self) -> i64 {
        crank_of(&self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn multiplicities(parts: &[u32]) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = Vec::new();
    for &p in parts {
        match out.last_mut() {
            Some((q, k)) if *q == p => *k += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// Crank of a non-increasing part list; the empty partition has crank 0.
fn crank_of(parts: &[u32]) -> i64 {
    let ones = parts.iter().rev().take_while(|&&p| p == 1).count() as i64;
    if ones == 0 {
        parts.first().map_or(0, |&p| p as i64)
    } else {
        let larger = parts.iter().take_while(|&&p| p as i64 > ones).count() as i64;
        larger - ones
    }
}

/// Andrews–Garvan crank.
pub fn crank(p: &Partition) -> i64 {
    p.crank()
}

/// Partitions of `n` in reverse lexicographic order, from `[n]` down to
/// `[1, 1, ..., 1]`.
pub fn partitions(n: u32) -> Partitions {
    Partitions { current: if n == 0 { Some(Vec::new()) } else { Some(vec![n]) } }
}

#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Partitions {
    /// Visits each partition in place without allocating per item.
    pub fn for_each_parts(mut self, mut visit: impl FnMut(&[u32])) {
        while let Some(parts) = self.current.as_mut() {
            visit(parts);
            if !advance(parts) {
                self.current = None;
            }
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.as_mut()?;
        let out = Partition(parts.clone());
        if !advance(parts) {
            self.current = None;
        }
        Some(out)
    }
}

/// Steps to the reverse-lex successor; false after the all-ones partition.
fn advance(parts: &mut Vec<u32>) -> bool {
    let mut freed = 0u32;
    while parts.last() == Some(&1) {
        parts.pop();
        freed += 1;
    }
    let Some(last) = parts.last_mut() else {
        return false;
    };
    *last -= 1;
    let cap = *last;
    freed += 1;
    while freed > 0 {
        let take = freed.min(cap);
        parts.push(take);
        freed -= take;
    }
    true
}

/// Counts of partitions of `n` by crank parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrankTally {
    pub n: u32,
    pub c_even: u64,
    pub c_odd: u64,
    pub c_diff: i64,
}

impl CrankTally {
    /// `c_even + c_odd`, the partition count.
    pub fn total(&self) -> u64 {
        self.c_even + self.c_odd
    }
}

/// Exhaustive crank-parity tally over all partitions of `n`.
pub fn crank_tally(n: u32) -> CrankTally {
    let (mut even, mut odd) = (0u64, 0u64);
    partitions(n).for_each_parts(|parts| {
        if crank_of(parts) % 2 == 0 {
            even += 1;
        } else {
            odd += 1;
        }
    });
    CrankTally { n, c_even: even, c_odd: odd, c_diff: even as i64 - odd as i64 }
}

/// 2-adic valuation.
pub fn nu2(n: u64) -> Result<u32, CrankError> {
    if n == 0 {
        Err(CrankError::ZeroValuation)
    } else {
        Ok(n.trailing_zeros())
    }
}

/// The three colored-object readings of `a(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Interpretation {
    /// Partitions whose odd parts each carry one of 3 colors.
    OddParts3Colors,
    /// Partitions into distinct colored parts, part `k` having `3 + nu2(k)` colors.
    DistinctNu2Colors,
    /// Partitions whose first two occurrences of each part may take distinct
    /// colors from a palette of 2.
    FirstTwoOccurrences,
}

impl Interpretation {
    pub const ALL: [Interpretation; 3] = [
        Interpretation::OddParts3Colors,
        Interpretation::DistinctNu2Colors,
        Interpretation::FirstTwoOccurrences,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Interpretation::OddParts3Colors => "odd_parts_3colors",
            Interpretation::DistinctNu2Colors => "distinct_nu2_colors",
            Interpretation::FirstTwoOccurrences => "first_two_occurrences",
        }
    }

    /// Number of colorings of a part `part` repeated `mult` times.
    fn weight(self, part: u32, mult: u32) -> u128 {
        let mult = mult as u128;
        match self {
            // multisets of size mult over 3 colors
            Interpretation::OddParts3Colors if part % 2 == 1 => (mult + 1) * (mult + 2) / 2,
            Interpretation::OddParts3Colors => 1,
            Interpretation::DistinctNu2Colors => {
                let colors = 3 + part.trailing_zeros() as u128;
                binomial(colors, mult)
            }
            Interpretation::FirstTwoOccurrences => {
                if mult == 1 {
                    3
                } else {
                    4
                }
            }
        }
    }
}

impl FromStr for Interpretation {
    type Err = CrankError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Interpretation::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| CrankError::UnknownInterpretation(s.to_string()))
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Counts the colored objects of size `n` under `interpretation` by weighted
/// enumeration over ordinary partitions.
pub fn a_oracle(n: u32, interpretation: Interpretation) -> u128 {
    let mut total = 0u128;
    partitions(n).for_each_parts(|parts| {
        total += multiplicities(parts)
            .into_iter()
            .map(|(p, k)| interpretation.weight(p, k))
            .product::<u128>();
    });
    total
}

/// Largest `n` accepted by [`colored_objects`].
pub const LITERAL_LIMIT: u32 = 8;

/// Lists every colored object of size `n` explicitly, rendered as
/// `(3_3)`, `(2,1_3)`, `(1_2,1_1,1)` and so on. Uncolored parts carry no
/// subscript; within a part value, colors appear in decreasing order.
pub fn colored_objects(n: u32, interpretation: Interpretation) -> Result<Vec<String>, CrankError> {
    if n > LITERAL_LIMIT {
        return Err(CrankError::TooLarge { n, max: LITERAL_LIMIT });
    }
    let mut out = Vec::new();
    for p in partitions(n) {
        let blocks: Vec<Vec<Vec<String>>> = p
            .multiplicities()
            .into_iter()
            .map(|(part, mult)| colorings(interpretation, part, mult))
            .collect();
        let mut acc: Vec<Vec<String>> = vec![Vec::new()];
        for options in &blocks {
            acc = acc
                .iter()
                .flat_map(|prefix| {
                    options.iter().map(move |opt| {
                        let mut v = prefix.clone();
                        v.extend(opt.iter().cloned());
                        v
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(|v| format!("({})", v.join(","))));
    }
    Ok(out)
}

/// All colorings of `mult` copies of `part`, each as its rendered tokens.
fn colorings(interpretation: Interpretation, part: u32, mult: u32) -> Vec<Vec<String>> {
    let tag = |c: u32| format!("{part}_{c}");
    match interpretation {
        Interpretation::OddParts3Colors if part % 2 == 0 => vec![vec![part.to_string(); mult as usize]],
        Interpretation::OddParts3Colors => {
            // non-increasing color sequences of length mult over {3,2,1}
            let mut out = Vec::new();
            for threes in 0..=mult {
                for twos in 0..=mult - threes {
                    let ones = mult - threes - twos;
                    let mut v = Vec::new();
                    v.extend((0..threes).map(|_| tag(3)));
                    v.extend((0..twos).map(|_| tag(2)));
                    v.extend((0..ones).map(|_| tag(1)));
                    out.push(v);
                }
            }
            out
        }
        Interpretation::DistinctNu2Colors => {
            let colors = 3 + part.trailing_zeros();
            // strictly decreasing color choices of size mult
            let mut out = Vec::new();
            for mask in 0u32..(1 << colors) {
                if mask.count_ones() == mult {
                    out.push((1..=colors).rev().filter(|c| mask & (1 << (c - 1)) != 0).map(tag).collect());
                }
            }
            out
        }
        Interpretation::FirstTwoOccurrences => {
            let mut out = Vec::new();
            for colored in [vec![], vec![1], vec![2], vec![2, 1]] {
                if colored.len() as u32 <= mult {
                    let mut v: Vec<String> = colored.iter().map(|&c| tag(c)).collect();
                    v.extend((colored.len() as u32..mult).map(|_| part.to_string()));
                    out.push(v);
                }
            }
            out
        }
    }
}
