//! Signed permutation matrices and the two-way conversion between
//! Cliffordinkras and the generator matrices they encode.
//!
//! A matrix is stored column-wise: basis vector `s` maps to
//! `signs[s] · e_{perm[s]}`, so the dense entry at row `perm[s]`, column `s`
//! is `signs[s]`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{validate, Cliffordinkra, Parity};
use crate::monomial::Sign;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermMatrix {
    perm: Vec<usize>,
    signs: Vec<Sign>,
}

impl SignedPermMatrix {
    pub fn new(perm: Vec<usize>, signs: Vec<Sign>) -> Result<Self> {
        let d = perm.len();
        if signs.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "{d} permutation entries but {} signs",
                signs.len()
            )));
        }
        let mut hit = vec![false; d];
        for &t in &perm {
            if t >= d || hit[t] {
                return Err(Error::NotSignedPermutation {
                    index: 0,
                    reason: format!("target {t} repeated or out of range"),
                });
            }
            hit[t] = true;
        }
        Ok(SignedPermMatrix { perm, signs })
    }

    pub fn identity(d: usize) -> Self {
        SignedPermMatrix {
            perm: (0..d).collect(),
            signs: vec![Sign::Plus; d],
        }
    }

    /// Reads a dense matrix given as rows.
    pub fn from_dense(rows: &[Vec<i64>]) -> Result<Self> {
        let d = rows.len();
        let mut perm = vec![usize::MAX; d];
        let mut signs = vec![Sign::Plus; d];
        for (r, row) in rows.iter().enumerate() {
            if row.len() != d {
                return Err(Error::NotSignedPermutation {
                    index: 0,
                    reason: format!("row {r} has {} entries, expected {d}", row.len()),
                });
            }
            let mut nonzero = 0;
            for (c, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 | -1 => {
                        nonzero += 1;
                        if perm[c] != usize::MAX {
                            return Err(Error::NotSignedPermutation {
                                index: 0,
                                reason: format!("column {c} has more than one nonzero entry"),
                            });
                        }
                        perm[c] = r;
                        signs[c] = if x == 1 { Sign::Plus } else { Sign::Minus };
                    }
                    _ => {
                        return Err(Error::NotSignedPermutation {
                            index: 0,
                            reason: format!("entry ({r},{c}) = {x} is not 0 or ±1"),
                        })
                    }
                }
            }
            if nonzero != 1 {
                return Err(Error::NotSignedPermutation {
                    index: 0,
                    reason: format!("row {r} has {nonzero} nonzero entries"),
                });
            }
        }
        if let Some(c) = perm.iter().position(|&p| p == usize::MAX) {
            return Err(Error::NotSignedPermutation {
                index: 0,
                reason: format!("column {c} is zero"),
            });
        }
        Ok(SignedPermMatrix { perm, signs })
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// `(row, sign)` of the single nonzero entry in column `s`.
    pub fn column(&self, s: usize) -> (usize, Sign) {
        (self.perm[s], self.signs[s])
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let d = self.dim();
        let mut out = vec![vec![0; d]; d];
        for s in 0..d {
            out[self.perm[s]][s] = i64::from(self.signs[s].value());
        }
        out
    }

    /// The product `self · rhs`.
    pub fn compose(&self, rhs: &SignedPermMatrix) -> Result<SignedPermMatrix> {
        if self.dim() != rhs.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}×{} times {}×{}",
                self.dim(),
                self.dim(),
                rhs.dim(),
                rhs.dim()
            )));
        }
        Ok(SignedPermMatrix {
            perm: rhs.perm.iter().map(|&t| self.perm[t]).collect(),
            signs: (0..rhs.dim())
                .map(|s| rhs.signs[s] * self.signs[rhs.perm[s]])
                .collect(),
        })
    }

    pub fn neg(&self) -> SignedPermMatrix {
        SignedPermMatrix {
            perm: self.perm.clone(),
            signs: self.signs.iter().map(|&s| -s).collect(),
        }
    }

    pub fn transpose(&self) -> SignedPermMatrix {
        let mut perm = vec![0; self.dim()];
        let mut signs = vec![Sign::Plus; self.dim()];
        for s in 0..self.dim() {
            perm[self.perm[s]] = s;
            signs[self.perm[s]] = self.signs[s];
        }
        SignedPermMatrix { perm, signs }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// True when every basis vector changes parity.
    pub fn is_graded(&self, parity: &[Parity]) -> bool {
        parity.len() == self.dim() && (0..self.dim()).all(|s| parity[self.perm[s]] != parity[s])
    }
}

/// Signature `(p, q)`: the first `p` generators square to `-I`, the
/// remaining `q` to `+I`.
pub type Signature = (usize, usize);

fn square_target(i: usize, sig: Signature) -> Sign {
    if i < sig.0 {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

/// The first generator pair `(i, j)`, `i ≤ j`, violating
/// `Γ_iΓ_j + Γ_jΓ_i = 2η_{ij} I`.
pub fn relation_failure(mats: &[SignedPermMatrix], sig: Signature) -> Result<Option<(usize, usize)>> {
    if sig.0 + sig.1 != mats.len() {
        return Err(Error::DimensionMismatch(format!(
            "signature ({},{}) for {} matrices",
            sig.0,
            sig.1,
            mats.len()
        )));
    }
    if let Some(first) = mats.first() {
        if let Some(m) = mats.iter().find(|m| m.dim() != first.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "matrices of size {} and {}",
                first.dim(),
                m.dim()
            )));
        }
    }
    for i in 0..mats.len() {
        let sq = mats[i].compose(&mats[i])?;
        let eta = square_target(i, sig);
        if (0..sq.dim()).any(|s| sq.perm[s] != s || sq.signs[s] != eta) {
            return Ok(Some((i, i)));
        }
        for j in i + 1..mats.len() {
            let ab = mats[i].compose(&mats[j])?;
            let ba = mats[j].compose(&mats[i])?;
            let anticommute =
                (0..ab.dim()).all(|s| ab.perm[s] == ba.perm[s] && ab.signs[s] == -ba.signs[s]);
            if !anticommute {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// Exact check of the Clifford relations for signature `sig`.
pub fn verify_clifford(mats: &[SignedPermMatrix], sig: Signature) -> Result<bool> {
    Ok(relation_failure(mats, sig)?.is_none())
}

/// Bosons first, then fermions, each in vertex-index order.
pub fn default_order(g: &Cliffordinkra) -> Vec<usize> {
    let mut order = g.bosons();
    order.extend(g.fermions());
    order
}

fn check_order(g: &Cliffordinkra, order: &[usize]) -> Result<Vec<usize>> {
    let position = crate::graph::inverse_permutation(order, g.num_vertices())?;
    let graded = order
        .windows(2)
        .all(|w| !(g.parity(w[0]) == Parity::Fermion && g.parity(w[1]) == Parity::Boson));
    if !graded {
        return Err(Error::Structure(
            "vertex order must list every boson before every fermion".into(),
        ));
    }
    Ok(position)
}

/// The generator matrices of a valid Cliffordinkra: `Γ_i` sends vertex `v` to
/// `±w` along the color-`i` edge, with `-` for a dashed edge.
pub fn to_matrices(g: &Cliffordinkra, order: Option<&[usize]>) -> Result<Vec<SignedPermMatrix>> {
    let report = validate(g);
    if !report.is_valid() {
        return Err(Error::InvalidGraph(report.summary()));
    }
    signature_matrices(g, order, 0)
}

/// Matrices for a graph read with the first `p` colors squaring to `-I`.
/// For those colors the dash is read at the boson end: a solid edge sends
/// the boson `v` to `+w` and `w` back to `-v`.
pub fn signature_matrices(
    g: &Cliffordinkra,
    order: Option<&[usize]>,
    p: usize,
) -> Result<Vec<SignedPermMatrix>> {
    let order = match order {
        Some(o) => o.to_vec(),
        None => default_order(g),
    };
    let position = check_order(g, &order)?;
    let mut out = Vec::with_capacity(g.n());
    for i in 0..g.n() {
        let mut perm = Vec::with_capacity(order.len());
        let mut signs = Vec::with_capacity(order.len());
        for &v in &order {
            perm.push(position[g.partner(i, v)]);
            let dashed = g.is_dashed(i, v);
            let mut sign = if dashed { Sign::Minus } else { Sign::Plus };
            if i < p && g.parity(v) == Parity::Fermion {
                sign = -sign;
            }
            signs.push(sign);
        }
        out.push(SignedPermMatrix::new(perm, signs)?);
    }
    Ok(out)
}

/// Reads a Cliffordinkra back from Cl(0,n) generator matrices.
pub fn from_matrices(mats: &[SignedPermMatrix], parity: &[Parity]) -> Result<Cliffordinkra> {
    from_matrices_with_signature(mats, parity, (0, mats.len()))
}

/// Reads a graph from generator matrices of signature `sig`, using the
/// boson-anchored dash convention for the `-I` colors.
pub fn from_matrices_with_signature(
    mats: &[SignedPermMatrix],
    parity: &[Parity],
    sig: Signature,
) -> Result<Cliffordinkra> {
    for (i, m) in mats.iter().enumerate() {
        if m.dim() != parity.len() {
            return Err(Error::DimensionMismatch(format!(
                "matrix {i} has size {} for {} vertices",
                m.dim(),
                parity.len()
            )));
        }
        if !m.is_graded(parity) {
            return Err(Error::NotGraded(i));
        }
    }
    if let Some((i, j)) = relation_failure(mats, sig)? {
        return Err(Error::RelationFailure(i, j));
    }
    let partner = mats.iter().map(|m| m.perm.clone()).collect();
    let dashed = mats
        .iter()
        .enumerate()
        .map(|(i, m)| {
            (0..m.dim())
                .map(|s| {
                    let anchor = if i < sig.0 && parity[s] == Parity::Fermion {
                        m.perm[s]
                    } else {
                        s
                    };
                    m.signs[anchor].is_negative()
                })
                .collect()
        })
        .collect();
    Cliffordinkra::from_links(mats.len(), parity.to_vec(), partner, dashed)
}

/// Serialized form used by the CLI: dense rows of signed integers.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixFile {
    pub matrices: Vec<Vec<Vec<i64>>>,
    pub parity: Vec<Parity>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signature: Option<Signature>,
}

impl MatrixFile {
    pub fn new(mats: &[SignedPermMatrix], parity: Vec<Parity>, signature: Option<Signature>) -> Self {
        MatrixFile {
            matrices: mats.iter().map(SignedPermMatrix::to_dense).collect(),
            parity,
            signature,
        }
    }

    pub fn parse(&self) -> Result<Vec<SignedPermMatrix>> {
        self.matrices
            .iter()
            .enumerate()
            .map(|(i, m)| {
                SignedPermMatrix::from_dense(m).map_err(|e| match e {
                    Error::NotSignedPermutation { reason, .. } => {
                        Error::NotSignedPermutation { index: i, reason }
                    }
                    other => other,
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn dense_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let d = a.len();
        (0..d)
            .map(|r| (0..d).map(|c| (0..d).map(|k| a[r][k] * b[k][c]).sum()).collect())
            .collect()
    }

    #[test]
    fn compose_matches_dense_product() {
        let a = SignedPermMatrix::new(vec![2, 0, 1], vec![Sign::Minus, Sign::Plus, Sign::Plus]).unwrap();
        let b = SignedPermMatrix::new(vec![1, 2, 0], vec![Sign::Plus, Sign::Minus, Sign::Minus]).unwrap();
        assert_eq!(a.compose(&b).unwrap().to_dense(), dense_mul(&a.to_dense(), &b.to_dense()));
        assert_eq!(a.transpose().to_dense(), {
            let m = a.to_dense();
            (0..3).map(|r| (0..3).map(|c| m[c][r]).collect()).collect::<Vec<Vec<i64>>>()
        });
    }

    #[test]
    fn dense_parsing_rejects_non_signed_permutations() {
        assert!(SignedPermMatrix::from_dense(&[vec![1, 1], vec![0, 0]]).is_err());
        assert!(SignedPermMatrix::from_dense(&[vec![2, 0], vec![0, 1]]).is_err());
        assert!(SignedPermMatrix::from_dense(&[vec![0, 1]]).is_err());
        let m = SignedPermMatrix::from_dense(&[vec![0, -1], vec![1, 0]]).unwrap();
        assert_eq!(m.perm(), &[1, 0]);
        assert_eq!(m.signs(), &[Sign::Plus, Sign::Minus]);
    }

    #[test]
    fn single_edge_matrix() {
        let g = Cliffordinkra::from_edges(
            1,
            vec![Parity::Boson, Parity::Fermion],
            &[Edge { color: 0, dashed: false, u: 0, v: 1 }],
        )
        .unwrap();
        let mats = to_matrices(&g, None).unwrap();
        assert_eq!(mats[0].to_dense(), vec![vec![0, 1], vec![1, 0]]);
        assert!(verify_clifford(&mats, (0, 1)).unwrap());
        let neg = signature_matrices(&g, None, 1).unwrap();
        assert_eq!(neg[0].to_dense(), vec![vec![0, -1], vec![1, 0]]);
        assert!(verify_clifford(&neg, (1, 0)).unwrap());
        assert!(!verify_clifford(&neg, (0, 1)).unwrap());
        let back = from_matrices_with_signature(&neg, g.parities(), (1, 0)).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn relation_errors() {
        let x = SignedPermMatrix::from_dense(&[vec![0, 1], vec![1, 0]]).unwrap();
        let parity = [Parity::Boson, Parity::Fermion];
        assert!(matches!(
            from_matrices(&[x.clone(), x.clone()], &parity),
            Err(Error::RelationFailure(0, 1))
        ));
        let id = SignedPermMatrix::identity(2);
        assert!(matches!(from_matrices(&[id], &parity), Err(Error::NotGraded(0))));
        assert!(verify_clifford(std::slice::from_ref(&x), (0, 2)).is_err());
        let y = SignedPermMatrix::identity(3);
        assert!(verify_clifford(&[x, y], (0, 2)).is_err());
    }
}
