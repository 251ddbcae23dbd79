//! Binary linear block codes.
//!
//! Codes are compared as subspaces: two [`LinearCode`]s are equal when their
//! reduced row echelon forms agree, regardless of the generator lists they
//! were built from.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bitword::BitWord;
use crate::error::{Error, Result};

/// Enumeration refuses lengths above this unless a larger limit is passed.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 8;
/// Permutation-equivalence search refuses lengths above this by default.
pub const DEFAULT_PERMUTATION_LIMIT: usize = 10;

#[derive(Clone)]
pub struct LinearCode {
    length: usize,
    generators: Vec<BitWord>,
}

impl LinearCode {
    /// Builds a code from generators, silently dropping any generator that
    /// lies in the span of the earlier ones.
    pub fn new(length: usize, generators: impl IntoIterator<Item = BitWord>) -> Result<Self> {
        let mut kept = Vec::new();
        let mut basis = ReducedBasis::new(length);
        for g in generators {
            if g.len() != length {
                return Err(Error::LengthMismatch {
                    left: length,
                    right: g.len(),
                });
            }
            if basis.insert(g) {
                kept.push(g);
            }
        }
        Ok(LinearCode {
            length,
            generators: kept,
        })
    }

    /// The trivial code `{0…0}`.
    pub fn zero(length: usize) -> Self {
        LinearCode {
            length,
            generators: Vec::new(),
        }
    }

    pub fn from_strings<S: AsRef<str>>(length: usize, rows: &[S]) -> Result<Self> {
        let words = rows
            .iter()
            .map(|r| r.as_ref().parse::<BitWord>())
            .collect::<Result<Vec<_>>>()?;
        LinearCode::new(length, words)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[BitWord] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        1 << self.dimension()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Canonical generator matrix: reduced row echelon form with the pivot
    /// taken at the leftmost 1, rows ordered by pivot.
    pub fn rref(&self) -> Vec<BitWord> {
        let mut basis = ReducedBasis::new(self.length);
        for &g in &self.generators {
            basis.insert(g);
        }
        basis.into_rows()
    }

    /// All codewords in printed-string order.
    pub fn codewords(&self) -> Vec<BitWord> {
        let mut words = span_words(self.length, &self.generators);
        words.sort();
        words
    }

    pub fn contains(&self, word: BitWord) -> bool {
        word.len() == self.length && self.reduce(word).is_zero()
    }

    /// Lexicographically least member of the coset `word + C`.
    pub fn reduce(&self, word: BitWord) -> BitWord {
        let rows = self.rref();
        reduce_by_rref(&rows, word)
    }

    pub fn is_even(&self) -> bool {
        self.generators.iter().all(|g| g.weight() % 2 == 0)
    }

    /// Doubly even via the generator criterion: every generator weight is a
    /// multiple of 4 and every pair of generators overlaps evenly.
    pub fn is_doubly_even(&self) -> bool {
        let gens = &self.generators;
        gens.iter().all(|g| g.weight() % 4 == 0)
            && gens.iter().enumerate().all(|(i, &a)| {
                gens[i + 1..]
                    .iter()
                    .all(|&b| (a.bits() & b.bits()).count_ones() % 2 == 0)
            })
    }

    /// Doubly even by checking every codeword.
    pub fn is_doubly_even_exhaustive(&self) -> bool {
        span_words(self.length, &self.generators)
            .iter()
            .all(|c| c.weight() % 4 == 0)
    }

    /// `dist[w]` is the number of codewords of weight `w`.
    pub fn weight_distribution(&self) -> Vec<usize> {
        let mut dist = vec![0; self.length + 1];
        for c in span_words(self.length, &self.generators) {
            dist[c.weight() as usize] += 1;
        }
        dist
    }

    /// Smallest nonzero weight, if the code is nontrivial.
    pub fn min_weight(&self) -> Option<u32> {
        span_words(self.length, &self.generators)
            .into_iter()
            .filter(|c| !c.is_zero())
            .map(BitWord::weight)
            .min()
    }

    /// The code of concatenations `g ‖ h`.
    pub fn direct_sum(&self, other: &LinearCode) -> Result<LinearCode> {
        let length = self.length + other.length;
        let left_zero = BitWord::zero(self.length);
        let right_zero = BitWord::zero(other.length);
        let gens = self
            .generators
            .iter()
            .map(|g| g.concat(right_zero))
            .chain(other.generators.iter().map(|h| left_zero.concat(*h)))
            .collect::<Result<Vec<_>>>()?;
        Ok(LinearCode {
            length,
            generators: gens,
        })
    }

    /// Moves coordinate `i` to `perm[i]` in every generator.
    pub fn permute(&self, perm: &[usize]) -> LinearCode {
        assert_eq!(perm.len(), self.length, "permutation length mismatch");
        LinearCode {
            length: self.length,
            generators: self.generators.iter().map(|g| g.permute(perm)).collect(),
        }
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.generators.iter().map(ToString::to_string).collect()
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.length == other.length && self.rref() == other.rref()
    }
}

impl Eq for LinearCode {}

impl Hash for LinearCode {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.length.hash(state);
        self.rref().hash(state);
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode(n={}, [", self.length)?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("])")
    }
}

impl Serialize for LinearCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.generators.serialize(serializer)
    }
}

/// Incrementally maintained reduced row echelon basis.
struct ReducedBasis {
    length: usize,
    rows: Vec<BitWord>,
}

impl ReducedBasis {
    fn new(length: usize) -> Self {
        ReducedBasis {
            length,
            rows: Vec::new(),
        }
    }

    /// Adds `word` to the span; returns false if it was already inside.
    fn insert(&mut self, word: BitWord) -> bool {
        let r = reduce_by_rref(&self.rows, word);
        let Some(p) = r.leading_one() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(p) {
                *row = BitWord::from_bits(row.bits() ^ r.bits(), self.length);
            }
        }
        self.rows.push(r);
        self.rows.sort_by_key(|row| row.leading_one());
        true
    }

    fn into_rows(self) -> Vec<BitWord> {
        self.rows
    }
}

fn reduce_by_rref(rows: &[BitWord], word: BitWord) -> BitWord {
    rows.iter().fold(word, |acc, row| {
        let p = row.leading_one().expect("nonzero row");
        if acc.get(p) {
            BitWord::from_bits(acc.bits() ^ row.bits(), acc.len())
        } else {
            acc
        }
    })
}

fn span_words(length: usize, generators: &[BitWord]) -> Vec<BitWord> {
    let mut words = vec![BitWord::zero(length)];
    for g in generators {
        let more: Vec<BitWord> = words
            .iter()
            .map(|c| BitWord::from_bits(c.bits() ^ g.bits(), length))
            .collect();
        words.extend(more);
    }
    words
}

/// All XOR-combinations of `generators`. Dependent or repeated generators are
/// tolerated, so the result always has `2^rank` elements.
pub fn span(length: usize, generators: &[BitWord]) -> Result<BTreeSet<BitWord>> {
    let code = LinearCode::new(length, generators.iter().copied())?;
    Ok(span_words(length, code.generators()).into_iter().collect())
}

/// The named code families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StandardCode {
    /// `t_n`, the zero code.
    T(usize),
    /// `d_n` for even `n ≥ 4`.
    D(usize),
    E7,
    E8,
}

impl StandardCode {
    pub fn length(self) -> usize {
        match self {
            StandardCode::T(n) | StandardCode::D(n) => n,
            StandardCode::E7 => 7,
            StandardCode::E8 => 8,
        }
    }

    pub fn code(self) -> Result<LinearCode> {
        match self {
            StandardCode::T(n) => {
                if n > crate::bitword::MAX_LEN {
                    return Err(Error::WordTooLong(n));
                }
                Ok(LinearCode::zero(n))
            }
            StandardCode::D(n) => {
                if n < 4 || n % 2 != 0 {
                    return Err(Error::InvalidCode(format!(
                        "d_n needs even n >= 4, got {n}"
                    )));
                }
                if n > crate::bitword::MAX_LEN {
                    return Err(Error::WordTooLong(n));
                }
                // Band of four ones shifted right by two per row.
                let rows = (0..n / 2 - 1)
                    .map(|r| BitWord::from_bits(0b1111 << (2 * r), n))
                    .collect::<Vec<_>>();
                LinearCode::new(n, rows)
            }
            StandardCode::E7 => LinearCode::from_strings(7, &["1111000", "0011110", "1010101"]),
            StandardCode::E8 => LinearCode::from_strings(
                8,
                &["11110000", "00111100", "00001111", "10101010"],
            ),
        }
    }
}

impl fmt::Display for StandardCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StandardCode::T(n) => write!(f, "t{n}"),
            StandardCode::D(n) => write!(f, "d{n}"),
            StandardCode::E7 => f.write_str("e7"),
            StandardCode::E8 => f.write_str("e8"),
        }
    }
}

impl FromStr for StandardCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let bad = || Error::Parse(format!("unknown code family {s:?}"));
        let (family, digits) = s.split_at(1.min(s.len()));
        let n: usize = digits.parse().map_err(|_| bad())?;
        match (family, n) {
            ("t", n) => Ok(StandardCode::T(n)),
            ("d", n) => Ok(StandardCode::D(n)),
            ("e", 7) => Ok(StandardCode::E7),
            ("e", 8) => Ok(StandardCode::E8),
            _ => Err(bad()),
        }
    }
}

/// Generator matrix of a named family at length `n`.
pub fn standard_code(family: StandardCode, n: usize) -> Result<LinearCode> {
    let family = match family {
        StandardCode::T(_) => StandardCode::T(n),
        StandardCode::D(_) => StandardCode::D(n),
        other if other.length() != n => {
            return Err(Error::InvalidCode(format!(
                "{other} only exists at length {}",
                other.length()
            )))
        }
        other => other,
    };
    family.code()
}

/// A direct sum of standard families, written like `e8+d4+t1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSum(pub Vec<StandardCode>);

impl CodeSum {
    pub fn code(&self) -> Result<LinearCode> {
        let mut parts = self.0.iter();
        let Some(first) = parts.next() else {
            return Ok(LinearCode::zero(0));
        };
        parts.try_fold(first.code()?, |acc, part| acc.direct_sum(&part.code()?))
    }

    pub fn length(&self) -> usize {
        self.0.iter().map(|c| c.length()).sum()
    }
}

impl fmt::Display for CodeSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("t0");
        }
        for (i, part) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

impl FromStr for CodeSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split('+')
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(CodeSum)
    }
}

/// The family achieving the largest doubly even dimension at length `n`:
/// `⌊n/8⌋` copies of `e_8` followed by the residue family for `n mod 8`.
pub fn max_code_family(n: usize) -> CodeSum {
    let mut parts = vec![StandardCode::E8; n / 8];
    match n % 8 {
        0 => {}
        r @ 1..=3 => parts.push(StandardCode::T(r)),
        4 => parts.push(StandardCode::D(4)),
        5 => parts.extend([StandardCode::D(4), StandardCode::T(1)]),
        6 => parts.push(StandardCode::D(6)),
        7 => parts.push(StandardCode::E7),
        _ => unreachable!(),
    }
    if parts.is_empty() {
        parts.push(StandardCode::T(0));
    }
    CodeSum(parts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaxMode {
    /// Enumerate every doubly even code (small `n` only).
    Exhaustive,
    /// Use the `e_8` block construction.
    Constructive,
}

/// Largest dimension of a doubly even code of length `n`, with a witness.
pub fn max_doubly_even_dimension(n: usize, mode: MaxMode) -> Result<(usize, LinearCode)> {
    match mode {
        MaxMode::Constructive => {
            let code = max_code_family(n).code()?;
            Ok((code.dimension(), code))
        }
        MaxMode::Exhaustive => {
            let codes = enumerate_doubly_even(n)?;
            let best = codes
                .into_iter()
                .max_by(|a, b| a.dimension().cmp(&b.dimension()).then_with(|| b.rref().cmp(&a.rref())))
                .expect("the zero code is always present");
            Ok((best.dimension(), best))
        }
    }
}

/// Every doubly even code of length `n ≤ 8`, deduplicated as subspaces.
pub fn enumerate_doubly_even(n: usize) -> Result<Vec<LinearCode>> {
    enumerate_doubly_even_with_limit(n, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_doubly_even_with_limit(n: usize, limit: usize) -> Result<Vec<LinearCode>> {
    check_enumeration_budget(n, limit)?;
    Ok(enumerate_subspaces(n, |code, w| {
        w.weight() % 4 == 0
            && code
                .iter()
                .all(|g| (g.bits() & w.bits()).count_ones() % 2 == 0)
    }))
}

/// Every even code of length `n`, deduplicated as subspaces.
pub fn enumerate_even_with_limit(n: usize, limit: usize) -> Result<Vec<LinearCode>> {
    check_enumeration_budget(n, limit)?;
    Ok(enumerate_subspaces(n, |_, w| w.weight() % 2 == 0))
}

fn check_enumeration_budget(n: usize, limit: usize) -> Result<()> {
    if n > limit || n > 20 {
        Err(Error::BudgetExceeded(format!(
            "code enumeration at length {n} exceeds limit {limit}"
        )))
    } else {
        Ok(())
    }
}

/// Grows codes one generator at a time. `admissible(gens, w)` decides whether
/// `w` may join the code spanned by `gens`; it must be closed under the span
/// so that every admissible extension is reached.
fn enumerate_subspaces(n: usize, admissible: impl Fn(&[BitWord], BitWord) -> bool) -> Vec<LinearCode> {
    let words: Vec<BitWord> = BitWord::all(n).filter(|w| !w.is_zero()).collect();
    let mut result = vec![LinearCode::zero(n)];
    let mut level: Vec<Vec<BitWord>> = vec![Vec::new()];
    while !level.is_empty() {
        let mut seen: HashSet<Vec<BitWord>> = HashSet::new();
        let mut next = Vec::new();
        for rows in &level {
            for &w in &words {
                if !reduce_by_rref(rows, w).is_zero() && admissible(rows, w) {
                    let mut basis = ReducedBasis::new(n);
                    for &r in rows {
                        basis.insert(r);
                    }
                    basis.insert(w);
                    let key = basis.into_rows();
                    if seen.insert(key.clone()) {
                        next.push(key);
                    }
                }
            }
        }
        next.sort();
        result.extend(next.iter().map(|rows| LinearCode {
            length: n,
            generators: rows.clone(),
        }));
        level = next;
    }
    result
}

/// True iff some column permutation carries `a` onto `b`.
pub fn permutation_equivalent(a: &LinearCode, b: &LinearCode) -> Result<bool> {
    Ok(find_column_permutation(a, b, DEFAULT_PERMUTATION_LIMIT)?.is_some())
}

/// A permutation `p` with `a.permute(p) == b`, if one exists.
pub fn find_column_permutation(
    a: &LinearCode,
    b: &LinearCode,
    limit: usize,
) -> Result<Option<Vec<usize>>> {
    if a.length != b.length {
        return Err(Error::LengthMismatch {
            left: a.length,
            right: b.length,
        });
    }
    let n = a.length;
    if a.dimension() != b.dimension() || a.weight_distribution() != b.weight_distribution() {
        return Ok(None);
    }
    if n > limit {
        return Err(Error::BudgetExceeded(format!(
            "permutation search at length {n} exceeds limit {limit}"
        )));
    }
    let words_a = a.codewords();
    let words_b = b.codewords();
    let column_counts = |words: &[BitWord]| -> Vec<usize> {
        (0..n).map(|j| words.iter().filter(|c| c.get(j)).count()).collect()
    };
    let (count_a, count_b) = (column_counts(&words_a), column_counts(&words_b));
    let mut sorted_a = count_a.clone();
    let mut sorted_b = count_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return Ok(None);
    }

    struct Search<'a> {
        n: usize,
        gens: &'a [BitWord],
        targets: &'a [BitWord],
        count_a: Vec<usize>,
        count_b: Vec<usize>,
        perm: Vec<usize>,
        used: u64,
    }

    impl Search<'_> {
        fn consistent(&self, depth: usize) -> bool {
            let mask = self.used;
            self.gens.iter().all(|g| {
                let image = (0..=depth)
                    .filter(|&j| g.get(j))
                    .fold(0u64, |acc, j| acc | (1 << self.perm[j]));
                self.targets.iter().any(|c| c.bits() & mask == image)
            })
        }

        fn run(&mut self, depth: usize) -> bool {
            if depth == self.n {
                return true;
            }
            for t in 0..self.n {
                if self.used & (1 << t) != 0 || self.count_a[depth] != self.count_b[t] {
                    continue;
                }
                self.perm[depth] = t;
                self.used |= 1 << t;
                if self.consistent(depth) && self.run(depth + 1) {
                    return true;
                }
                self.used &= !(1 << t);
            }
            false
        }
    }

    let mut search = Search {
        n,
        gens: a.generators(),
        targets: &words_b,
        count_a,
        count_b,
        perm: vec![0; n],
        used: 0,
    };
    if search.run(0) {
        let perm = search.perm;
        debug_assert_eq!(&a.permute(&perm), b);
        Ok(Some(perm))
    } else {
        Ok(None)
    }
}
