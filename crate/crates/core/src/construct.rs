//! Constructions: the Clifford cube, its quotients by doubly even codes,
//! recovery of the code from a graph, minimal representations, and the
//! Cl(p,q) variant with `p` colors squaring to `-I`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bitword::{BitWord, MAX_LEN};
use crate::code::{max_code_family, CodeSum, LinearCode};
use crate::error::{Error, Result};
use crate::graph::{validate_with, Cliffordinkra, Parity, ValidationReport, Violation};
use crate::matrix::{signature_matrices, to_matrices, SignedPermMatrix};
use crate::monomial::{format_signs, left_gamma, parse_signs, projector_product, ProjectorProduct, Sign, SignedMonomial};

/// Bosons (even weight) first, then fermions, lexicographic within each.
fn graded_order(words: &mut [BitWord]) {
    words.sort_by_key(|w| (w.weight() % 2, *w));
}

fn check_colors(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidCode("at least one color is required".into()));
    }
    if n > MAX_LEN {
        return Err(Error::WordTooLong(n));
    }
    Ok(())
}

/// Largest vertex count a construction will materialize.
pub const MAX_VERTICES: usize = 1 << 18;

/// One word per coset of `code`, namely the words vanishing on the pivot
/// columns of its reduced basis, in graded order.
fn coset_representatives(code: &LinearCode) -> Result<Vec<BitWord>> {
    let n = code.length();
    let free_count = n - code.dimension();
    if free_count > MAX_VERTICES.trailing_zeros() as usize {
        return Err(Error::BudgetExceeded(format!(
            "2^{free_count} vertices exceeds the limit of {MAX_VERTICES}"
        )));
    }
    let mut pivots = 0u64;
    for row in code.rref() {
        if let Some(i) = row.leading_one() {
            pivots |= 1 << i;
        }
    }
    let free: Vec<usize> = (0..n).filter(|&i| pivots >> i & 1 == 0).collect();
    let mut reps: Vec<BitWord> = (0..1u64 << free_count)
        .map(|mask| {
            let bits = free
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .fold(0u64, |acc, (_, &i)| acc | 1 << i);
            code.reduce(BitWord::from_bits(bits, n))
        })
        .collect();
    graded_order(&mut reps);
    Ok(reps)
}

/// The `n`-cube: vertices `{0,1}^n`, the color-`i` edge at `x` dashed when
/// `Γ_i Γ_x = -Γ_{x+e_i}`.
pub fn cube(n: usize) -> Result<Cliffordinkra> {
    clpq_cube(0, n)
}

/// The coset `v + C`, named by its lexicographically least member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CosetLabel {
    pub representative: BitWord,
}

impl CosetLabel {
    pub fn of(code: &LinearCode, word: BitWord) -> CosetLabel {
        CosetLabel {
            representative: code.reduce(word),
        }
    }
}

/// A doubly even code with one sign per generator, selecting the projector
/// `π = Π (1 + s_j Γ_{g_j}) / 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpec {
    pub n: usize,
    pub code: LinearCode,
    pub signs: Vec<Sign>,
}

#[derive(Serialize, Deserialize)]
struct SpecFile {
    code: Vec<String>,
    n: usize,
    signs: String,
}

impl QuotientSpec {
    /// Builds a spec; the generators are taken in the given order and must be
    /// independent.
    pub fn new(n: usize, generators: &[BitWord], signs: Vec<Sign>) -> Result<QuotientSpec> {
        check_colors(n)?;
        let code = LinearCode::new(n, generators.iter().copied())?;
        if code.dimension() != generators.len() {
            return Err(Error::DependentGenerators);
        }
        let spec = QuotientSpec { n, code, signs };
        spec.projector()?;
        Ok(spec)
    }

    /// All signs `+`.
    pub fn positive(code: &LinearCode) -> Result<QuotientSpec> {
        QuotientSpec::new(
            code.length(),
            code.generators(),
            vec![Sign::Plus; code.dimension()],
        )
    }

    pub fn projector(&self) -> Result<ProjectorProduct> {
        if self.code.length() != self.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: self.code.length(),
            });
        }
        projector_product(self.code.generators(), &self.signs)
    }

    pub fn from_json(text: &str) -> Result<QuotientSpec> {
        let file: SpecFile = serde_json::from_str(text)?;
        let generators = file
            .code
            .iter()
            .map(|s| s.parse::<BitWord>())
            .collect::<Result<Vec<_>>>()?;
        if let Some(g) = generators.iter().find(|g| g.len() != file.n) {
            return Err(Error::LengthMismatch {
                left: file.n,
                right: g.len(),
            });
        }
        QuotientSpec::new(file.n, &generators, parse_signs(&file.signs)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SpecFile {
            code: self.code.to_strings(),
            n: self.n,
            signs: format_signs(&self.signs),
        })
        .expect("spec serializes")
    }
}

/// Expresses codewords as subsets of a fixed independent generator list.
#[derive(Clone, Debug)]
struct Decomposer {
    rows: Vec<(BitWord, u64)>,
}

impl Decomposer {
    fn new(generators: &[BitWord]) -> Decomposer {
        let mut rows: Vec<(BitWord, u64)> = Vec::new();
        for (j, &g) in generators.iter().enumerate() {
            let mut word = g;
            let mut mask = 1u64 << j;
            for &(r, m) in &rows {
                if word.get(r.leading_one().expect("nonzero row")) {
                    word = BitWord::from_bits(word.bits() ^ r.bits(), word.len());
                    mask ^= m;
                }
            }
            if !word.is_zero() {
                rows.push((word, mask));
            }
        }
        Decomposer { rows }
    }

    fn subset(&self, c: BitWord) -> Option<u64> {
        let mut word = c;
        let mut mask = 0;
        for &(r, m) in &self.rows {
            if word.get(r.leading_one().expect("nonzero row")) {
                word = BitWord::from_bits(word.bits() ^ r.bits(), word.len());
                mask ^= m;
            }
        }
        word.is_zero().then_some(mask)
    }
}

/// A quotient of the cube together with the data needed to express any
/// `Γ_y π` in terms of the chosen basis `a_r = Γ_r π`.
#[derive(Clone, Debug)]
pub struct Quotient {
    spec: QuotientSpec,
    projector: ProjectorProduct,
    decomposer: Decomposer,
    reps: Vec<BitWord>,
    index: BTreeMap<BitWord, usize>,
    graph: Cliffordinkra,
}

impl Quotient {
    pub fn build(spec: &QuotientSpec) -> Result<Quotient> {
        let projector = spec.projector()?;
        let n = spec.n;
        if spec.code.dimension() > n {
            return Err(Error::Internal("code dimension exceeds length".into()));
        }
        let reps = coset_representatives(&spec.code)?;
        let index: BTreeMap<BitWord, usize> =
            reps.iter().enumerate().map(|(k, &r)| (r, k)).collect();
        let mut q = Quotient {
            spec: spec.clone(),
            projector,
            decomposer: Decomposer::new(spec.code.generators()),
            reps,
            index,
            graph: Cliffordinkra::from_links(0, vec![], vec![], vec![])?,
        };
        let nv = q.reps.len();
        let mut partner = vec![vec![0; nv]; n];
        let mut dashed = vec![vec![false; nv]; n];
        for i in 0..n {
            for (k, &r) in q.reps.iter().enumerate() {
                let step = left_gamma(i, SignedMonomial::basis(r))?;
                let (target, sign) = q.identify(step.exponent)?;
                partner[i][k] = target;
                dashed[i][k] = (step.sign * sign).is_negative();
            }
            for k in 0..nv {
                let t = partner[i][k];
                if partner[i][t] != k || dashed[i][t] != dashed[i][k] {
                    return Err(Error::Internal(format!(
                        "color {i}: endpoints {k} and {t} disagree"
                    )));
                }
            }
        }
        let parity = q
            .reps
            .iter()
            .map(|r| Parity::from_weight(r.weight()))
            .collect();
        let labels = q.reps.iter().map(|r| r.to_string()).collect();
        q.graph = Cliffordinkra::from_links(n, parity, partner, dashed)?.with_labels(labels)?;
        Ok(q)
    }

    pub fn graph(&self) -> &Cliffordinkra {
        &self.graph
    }

    pub fn into_graph(self) -> Cliffordinkra {
        self.graph
    }

    pub fn spec(&self) -> &QuotientSpec {
        &self.spec
    }

    /// Coset representatives in vertex order.
    pub fn representatives(&self) -> &[BitWord] {
        &self.reps
    }

    /// `(vertex, sign)` with `Γ_y π = sign · a_vertex`.
    pub fn identify(&self, y: BitWord) -> Result<(usize, Sign)> {
        let r = self.spec.code.reduce(y);
        let c = y.xor(r)?;
        // Γ_r Γ_c = σ Γ_y, and Γ_c π = χ(c) π.
        let sigma = SignedMonomial::basis(r).multiply(SignedMonomial::basis(c))?.sign;
        let subset = self
            .decomposer
            .subset(c)
            .ok_or_else(|| Error::Internal(format!("{c} is not a codeword")))?;
        let (word, chi) = self.projector.character_of_subset(subset, self.spec.n);
        if word != c {
            return Err(Error::Internal(format!("decomposition of {c} gave {word}")));
        }
        let vertex = self.index[&r];
        Ok((vertex, sigma * chi))
    }

    /// The relation `a_u = ε a_v` for two words in the same coset.
    pub fn identification(&self, u: BitWord, v: BitWord) -> Result<Sign> {
        let (iu, su) = self.identify(u)?;
        let (iv, sv) = self.identify(v)?;
        if iu != iv {
            return Err(Error::Structure(format!("{u} and {v} lie in different cosets")));
        }
        Ok(su * sv)
    }
}

pub fn quotient(spec: &QuotientSpec) -> Result<Cliffordinkra> {
    Ok(Quotient::build(spec)?.into_graph())
}

/// The cube folded by any linear code, all edges solid. Vertices are coset
/// representatives; folds by codes with weight-1 words produce loops, and
/// parity is read from the representative's weight.
pub fn fold_cube(n: usize, code: &LinearCode) -> Result<Cliffordinkra> {
    check_colors(n)?;
    if code.length() != n {
        return Err(Error::LengthMismatch {
            left: n,
            right: code.length(),
        });
    }
    let reps = coset_representatives(code)?;
    let index: BTreeMap<BitWord, usize> = reps.iter().enumerate().map(|(k, &r)| (r, k)).collect();
    let partner = (0..n)
        .map(|i| reps.iter().map(|r| index[&code.reduce(r.flip(i))]).collect())
        .collect();
    let parity = reps.iter().map(|r| Parity::from_weight(r.weight())).collect();
    let labels = reps.iter().map(|r| r.to_string()).collect();
    Cliffordinkra::from_links(n, parity, partner, vec![vec![false; reps.len()]; n])?
        .with_labels(labels)
}

/// Color words of vertices reached by breadth-first search from `root`,
/// plus the words of the closed walks found along the way.
fn color_words(g: &Cliffordinkra, root: usize) -> Result<(Vec<Option<BitWord>>, Vec<BitWord>)> {
    let n = g.n();
    if n > MAX_LEN {
        return Err(Error::WordTooLong(n));
    }
    let nv = g.num_vertices();
    let mut word: Vec<Option<BitWord>> = vec![None; nv];
    word[root] = Some(BitWord::zero(n));
    let mut queue = vec![root];
    let mut k = 0;
    let mut cycles = Vec::new();
    while k < queue.len() {
        let v = queue[k];
        k += 1;
        let wv = word[v].expect("visited");
        for i in 0..n {
            let p = g.partner(i, v);
            let step = wv.flip(i);
            match word[p] {
                None => {
                    word[p] = Some(step);
                    queue.push(p);
                }
                Some(wp) => {
                    let c = step.xor(wp)?;
                    if !c.is_zero() {
                        cycles.push(c);
                    }
                }
            }
        }
    }
    Ok((word, cycles))
}

/// The code of a connected graph: color words of closed walks at a base
/// vertex.
pub fn recover_code(g: &Cliffordinkra) -> Result<LinearCode> {
    recover_code_from(g, 0)
}

pub fn recover_code_from(g: &Cliffordinkra, root: usize) -> Result<LinearCode> {
    if root >= g.num_vertices() {
        return Err(Error::IndexOutOfRange {
            index: root,
            bound: g.num_vertices(),
        });
    }
    let (words, cycles) = color_words(g, root)?;
    if words.iter().any(Option::is_none) {
        return Err(Error::Disconnected);
    }
    LinearCode::new(g.n(), cycles)
}

#[derive(Clone, Debug, Serialize)]
pub struct MinimalRepresentation {
    pub n: usize,
    pub family: String,
    pub code: LinearCode,
    pub dimension: usize,
    #[serde(skip)]
    pub graph: Cliffordinkra,
    #[serde(skip)]
    pub matrices: Vec<SignedPermMatrix>,
}

/// The representation from the maximal code family for `n` colors, all
/// projector signs `+`.
pub fn minimal_representation(n: usize) -> Result<MinimalRepresentation> {
    check_colors(n)?;
    let family: CodeSum = max_code_family(n);
    let code = family.code()?;
    let graph = quotient(&QuotientSpec::positive(&code)?)?;
    let matrices = to_matrices(&graph, None)?;
    Ok(MinimalRepresentation {
        n,
        family: family.to_string(),
        dimension: graph.num_vertices(),
        code,
        graph,
        matrices,
    })
}

/// The cube for signature `(p, q)`: left multiplication in the algebra where
/// the first `p` generators square to `-1`. Dashes are read at the boson end.
pub fn clpq_cube(p: usize, q: usize) -> Result<Cliffordinkra> {
    let n = p + q;
    check_colors(n)?;
    let words = coset_representatives(&LinearCode::zero(n))?;
    let index: BTreeMap<BitWord, usize> = words.iter().enumerate().map(|(k, &w)| (w, k)).collect();
    let mut partner = vec![vec![0; words.len()]; n];
    let mut dashed = vec![vec![false; words.len()]; n];
    for i in 0..n {
        for (k, &x) in words.iter().enumerate() {
            let step = left_gamma(i, SignedMonomial::basis(x))?;
            partner[i][k] = index[&step.exponent];
            let boson = if x.weight() % 2 == 0 { x } else { step.exponent };
            let mut sign = left_gamma(i, SignedMonomial::basis(boson))?.sign;
            if i < p && boson.get(i) {
                sign = -sign;
            }
            dashed[i][k] = sign.is_negative();
        }
    }
    let parity = words.iter().map(|w| Parity::from_weight(w.weight())).collect();
    let labels = words.iter().map(|w| w.to_string()).collect();
    Cliffordinkra::from_links(n, parity, partner, dashed)?.with_labels(labels)
}

fn check_signature(g: &Cliffordinkra, p: usize, q: usize) -> Result<()> {
    if p + q != g.n() {
        return Err(Error::DimensionMismatch(format!(
            "signature ({p},{q}) for a graph with {} colors",
            g.n()
        )));
    }
    Ok(())
}

/// Validation for signature `(p, q)`: bicolor cycles on two colors of the
/// same kind carry an odd number of dashes, mixed cycles an even number, and
/// every codeword has `wt(first p) ≡ wt(last q) (mod 4)`.
pub fn clpq_validate(g: &Cliffordinkra, p: usize, q: usize) -> Result<ValidationReport> {
    check_signature(g, p, q)?;
    let mut report = validate_with(g, |i, j| (i < p) == (j < p));
    if g.is_connected() {
        let code = recover_code(g)?;
        if code.dimension() <= 24 {
            for c in code.codewords() {
                let a = c.slice(0, p).weight();
                let b = c.slice(p, q).weight();
                if a % 4 != b % 4 {
                    report.violations.push(Violation::SignatureCode {
                        codeword: c.to_string(),
                        negative_weight: a,
                        positive_weight: b,
                    });
                }
            }
        } else {
            return Err(Error::BudgetExceeded(format!(
                "code of dimension {} is too large to check codeword by codeword",
                code.dimension()
            )));
        }
    }
    Ok(ValidationReport::from_violations(report.violations))
}

/// Generator matrices of signature `(p, q)` for a graph passing
/// [`clpq_validate`].
pub fn clpq_matrices(
    g: &Cliffordinkra,
    p: usize,
    q: usize,
    order: Option<&[usize]>,
) -> Result<Vec<SignedPermMatrix>> {
    let report = clpq_validate(g, p, q)?;
    if !report.is_valid() {
        return Err(Error::InvalidGraph(report.summary()));
    }
    signature_matrices(g, order, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitword::w;
    use crate::graph::validate;
    use crate::matrix::verify_clifford;

    #[test]
    fn large_constructions_hit_the_budget() {
        assert!(matches!(cube(19), Err(Error::BudgetExceeded(_))));
        assert!(matches!(minimal_representation(60), Err(Error::BudgetExceeded(_))));
        assert_eq!(cube(12).unwrap().num_vertices(), 1 << 12);
    }

    #[test]
    fn cube_basics() {
        let c1 = cube(1).unwrap();
        assert_eq!(c1.num_vertices(), 2);
        assert_eq!(c1.parity(0), Parity::Boson);
        assert!(!c1.is_dashed(0, 0));
        let c4 = cube(4).unwrap();
        assert_eq!((c4.num_vertices(), c4.num_edges()), (16, 32));
        assert!(validate(&c4).is_valid());
        assert!(cube(0).is_err());
    }

    #[test]
    fn trivial_quotient_is_cube() {
        for n in 1..=6 {
            let spec = QuotientSpec::positive(&LinearCode::zero(n)).unwrap();
            assert_eq!(quotient(&spec).unwrap(), cube(n).unwrap());
        }
    }

    #[test]
    fn spec_json() {
        let spec = QuotientSpec::from_json(r#"{"n":6,"code":["111100","001111"],"signs":"+-"}"#).unwrap();
        assert_eq!(spec.signs, vec![Sign::Plus, Sign::Minus]);
        assert_eq!(QuotientSpec::from_json(&spec.to_json()).unwrap(), spec);
        assert!(QuotientSpec::from_json(r#"{"n":4,"code":["1110"],"signs":"+"}"#).is_err());
        assert!(QuotientSpec::from_json(r#"{"n":4,"code":["1111"],"signs":"++"}"#).is_err());
        assert!(matches!(
            QuotientSpec::from_json(r#"{"n":4,"code":["1111","1111"],"signs":"++"}"#),
            Err(Error::DependentGenerators)
        ));
    }

    #[test]
    fn identification_signs() {
        let spec = QuotientSpec::new(4, &[w("1111")], vec![Sign::Minus]).unwrap();
        let q = Quotient::build(&spec).unwrap();
        assert_eq!(q.identification(w("0000"), w("1111")).unwrap(), Sign::Minus);
        assert!(q.identification(w("0000"), w("0001")).is_err());
    }

    #[test]
    fn decomposer_finds_subsets() {
        let gens = [w("11110000"), w("00111100"), w("00001111")];
        let d = Decomposer::new(&gens);
        assert_eq!(d.subset(w("11001100")), Some(0b011));
        assert_eq!(d.subset(w("11111111")), Some(0b101));
        assert_eq!(d.subset(w("10000000")), None);
    }

    #[test]
    fn folds_and_recovery() {
        let code = LinearCode::from_strings(6, &["110000"]).unwrap();
        let g = fold_cube(6, &code).unwrap();
        assert_eq!(g.num_vertices(), 32);
        assert_eq!(recover_code(&g).unwrap(), code);
        let odd = LinearCode::from_strings(3, &["100"]).unwrap();
        let g = fold_cube(3, &odd).unwrap();
        assert_eq!(g.partner(0, 0), 0);
        assert_eq!(recover_code(&g).unwrap(), odd);
        let two = cube(2).unwrap().disjoint_union(&cube(2).unwrap()).unwrap();
        assert!(matches!(recover_code(&two), Err(Error::Disconnected)));
    }

    #[test]
    fn signature_cube() {
        for (p, q) in [(1, 0), (1, 1), (2, 0), (2, 1), (0, 3), (3, 1)] {
            let g = clpq_cube(p, q).unwrap();
            assert!(clpq_validate(&g, p, q).unwrap().is_valid(), "({p},{q})");
            let mats = clpq_matrices(&g, p, q, None).unwrap();
            assert!(verify_clifford(&mats, (p, q)).unwrap(), "({p},{q})");
        }
        assert_eq!(clpq_cube(0, 4).unwrap(), cube(4).unwrap());
    }

    #[test]
    fn minimal_representation_small() {
        let m = minimal_representation(6).unwrap();
        assert_eq!((m.dimension, m.family.as_str()), (16, "d6"));
        assert_eq!(m.matrices.len(), 6);
    }
}
