//! Signed Clifford monomials `±Γ_x` in `Cl(0,n)` and the projectors
//! `π_{x,±} = (1 ± Γ_x)/2`.
//!
//! A monomial is always kept in normal form: `Γ_x = Γ_1^{x_1} ⋯ Γ_n^{x_n}` with
//! factors in ascending index order.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitword::BitWord;
use crate::error::{Error, Result};

/// A sign `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
#[repr(i8)]
pub enum Sign {
    Minus = -1,
    Plus = 1,
}

impl Sign {
    pub fn value(self) -> i8 {
        self as i8
    }

    /// `(-1)^k`.
    pub fn from_parity(k: u32) -> Sign {
        if k.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_symbol(c: char) -> Result<Sign> {
        match c {
            '+' => Ok(Sign::Plus),
            '-' => Ok(Sign::Minus),
            _ => Err(Error::Parse(format!("expected '+' or '-', got {c:?}"))),
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value()
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<Sign, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(format!("sign must be 1 or -1, got {v}")),
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

/// Parses a sign string such as `"+-+"`.
pub fn parse_signs(s: &str) -> Result<Vec<Sign>> {
    s.trim().chars().map(Sign::from_symbol).collect()
}

pub fn format_signs(signs: &[Sign]) -> String {
    signs.iter().map(|s| s.symbol()).collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedMonomial {
    pub sign: Sign,
    pub exponent: BitWord,
}

impl SignedMonomial {
    pub fn new(sign: Sign, exponent: BitWord) -> Self {
        SignedMonomial { sign, exponent }
    }

    /// `+Γ_x`.
    pub fn basis(exponent: BitWord) -> Self {
        SignedMonomial::new(Sign::Plus, exponent)
    }

    /// `+Γ_0`, the identity.
    pub fn identity(n: usize) -> Self {
        SignedMonomial::basis(BitWord::zero(n))
    }

    /// The generator `Γ_i` (0-based color index).
    pub fn generator(i: usize, n: usize) -> Self {
        SignedMonomial::basis(BitWord::unit(i, n))
    }

    pub fn len(&self) -> usize {
        self.exponent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponent.is_empty()
    }

    /// Product in normal form. Each `Γ_j` of the right factor moves left past
    /// every higher-index `Γ_i` of the left factor, picking up a sign per
    /// crossing; doubled indices cancel since `Γ_j² = 1`.
    pub fn multiply(self, rhs: SignedMonomial) -> Result<SignedMonomial> {
        self.exponent.check_len(rhs.exponent)?;
        let x = self.exponent.bits();
        let crossings: u32 = rhs
            .exponent
            .support()
            .map(|j| (x & higher_than(j)).count_ones())
            .sum();
        Ok(SignedMonomial {
            sign: self.sign * rhs.sign * Sign::from_parity(crossings),
            exponent: self.exponent.xor(rhs.exponent)?,
        })
    }
}

impl std::ops::Neg for SignedMonomial {
    type Output = SignedMonomial;

    fn neg(self) -> SignedMonomial {
        SignedMonomial {
            sign: -self.sign,
            ..self
        }
    }
}

fn higher_than(j: usize) -> u64 {
    u64::MAX.checked_shl(j as u32 + 1).unwrap_or(0)
}

fn lower_than(i: usize) -> u64 {
    (1u64 << i) - 1
}

/// Sign of `Γ_x²`: `+1` when `wt(x) ≡ 0, 1 (mod 4)`, `-1` otherwise.
pub fn square_sign(x: BitWord) -> Sign {
    if x.weight() % 4 < 2 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// `Γ_i · m` for a 0-based color `i`.
pub fn left_gamma(i: usize, m: SignedMonomial) -> Result<SignedMonomial> {
    let n = m.len();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, bound: n });
    }
    let passed = (m.exponent.bits() & lower_than(i)).count_ones();
    Ok(SignedMonomial {
        sign: m.sign * Sign::from_parity(passed),
        exponent: m.exponent.flip(i),
    })
}

impl Mul for SignedMonomial {
    type Output = SignedMonomial;

    /// Panics on a length mismatch; use [`SignedMonomial::multiply`] to get a
    /// `Result` instead.
    fn mul(self, rhs: SignedMonomial) -> SignedMonomial {
        self.multiply(rhs).expect("monomial length mismatch")
    }
}

impl fmt::Display for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}G_{}", self.sign.symbol(), self.exponent)
    }
}

impl fmt::Debug for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SignedMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("expected a monomial like +G_0011, got {s:?}"));
        let mut chars = s.chars();
        let sign = Sign::from_symbol(chars.next().ok_or_else(bad)?).map_err(|_| bad())?;
        let rest = chars.as_str().strip_prefix("G_").ok_or_else(bad)?;
        Ok(SignedMonomial::new(sign, rest.parse()?))
    }
}

/// `π_{x,s}` with `wt(x) ≡ 0 (mod 4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Projector {
    pub word: BitWord,
    pub sign: Sign,
}

impl Projector {
    pub fn new(word: BitWord, sign: Sign) -> Result<Self> {
        if !word.weight().is_multiple_of(4) {
            return Err(Error::NotDoublyEven(word));
        }
        Ok(Projector { word, sign })
    }
}

/// The product `π_{g_1,s_1} ⋯ π_{g_k,s_k}` of commuting projectors, kept
/// symbolically as its factor list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectorProduct {
    factors: Vec<Projector>,
}

impl ProjectorProduct {
    pub fn factors(&self) -> &[Projector] {
        &self.factors
    }

    pub fn words(&self) -> Vec<BitWord> {
        self.factors.iter().map(|p| p.word).collect()
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.factors.iter().map(|p| p.sign).collect()
    }

    /// The eigenvalue `χ(c)` with `Γ_c · π = χ(c) π` for a codeword `c`
    /// given as a subset (bitmask over factor indices) of the generators.
    pub fn character_of_subset(&self, subset: u64, n: usize) -> (BitWord, Sign) {
        let mut product = SignedMonomial::identity(n);
        let mut eigen = Sign::Plus;
        for (j, p) in self.factors.iter().enumerate() {
            if subset & (1 << j) != 0 {
                product = product * SignedMonomial::basis(p.word);
                eigen = eigen * p.sign;
            }
        }
        // product = τ Γ_c, and product · π = eigen · π.
        (product.exponent, product.sign * eigen)
    }
}

/// Validates the projector list: every word has weight divisible by 4, every
/// pair overlaps evenly (so the projectors commute), and the words are
/// independent (otherwise the product can vanish).
pub fn projector_product(generators: &[BitWord], signs: &[Sign]) -> Result<ProjectorProduct> {
    if generators.len() != signs.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} generators but {} signs",
            generators.len(),
            signs.len()
        )));
    }
    if generators.len() >= 64 {
        return Err(Error::Unsupported("more than 63 projector factors".into()));
    }
    let factors = generators
        .iter()
        .zip(signs)
        .map(|(&g, &s)| Projector::new(g, s))
        .collect::<Result<Vec<_>>>()?;
    for (i, a) in generators.iter().enumerate() {
        for b in &generators[i + 1..] {
            if a.and(*b)?.weight() % 2 != 0 {
                return Err(Error::NonCommuting(*a, *b));
            }
        }
    }
    if let Some(&first) = generators.first() {
        let code = crate::code::LinearCode::new(first.len(), generators.iter().copied())?;
        if code.dimension() != generators.len() {
            return Err(Error::DependentGenerators);
        }
    }
    Ok(ProjectorProduct { factors })
}
