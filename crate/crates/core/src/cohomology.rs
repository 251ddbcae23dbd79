//! The cubical complex of a Cliffordinkra over F2.
//!
//! 2-cells are the images of the squares of the cube: closed alternating
//! walks `v, p_i v, p_j p_i v, p_i p_j p_i v`. 3-cells are images of 3-cubes.
//! Boundaries are taken with multiplicity mod 2, so a square folded onto a
//! single edge pair has zero boundary. Cells of dimension four and up are not
//! built.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2::{BitVec, F2Matrix};
use crate::graph::{square_walk, Cliffordinkra, Edge};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Face {
    pub colors: (usize, usize),
    /// The closed walk starting at the face's first-found vertex.
    pub walk: [usize; 4],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Solid {
    pub colors: (usize, usize, usize),
    /// Images of the eight corners, indexed by the bit pattern of the colors
    /// applied (bit 0 for the first color).
    pub corners: [usize; 8],
}

#[derive(Clone, Debug)]
pub struct CubicalComplex {
    vertices: usize,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    solids: Vec<Solid>,
    d: [F2Matrix; 3],
}

/// A `k`-cochain: one bit per `k`-cell in canonical cell order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub values: BitVec,
}

#[derive(Serialize, Deserialize)]
struct CochainFile {
    cells: usize,
    degree: usize,
    values: String,
}

impl Serialize for Cochain {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CochainFile {
            cells: self.values.len(),
            degree: self.degree,
            values: self.values.to_hex(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cochain {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file = CochainFile::deserialize(d)?;
        let values = BitVec::from_hex(&file.values, file.cells)
            .ok_or_else(|| serde::de::Error::custom("malformed hex cochain"))?;
        Ok(Cochain {
            degree: file.degree,
            values,
        })
    }
}

fn sorted<const N: usize>(mut a: [usize; N]) -> [usize; N] {
    a.sort_unstable();
    a
}

impl CubicalComplex {
    pub fn build(g: &Cliffordinkra) -> Result<CubicalComplex> {
        let n = g.n();
        let nv = g.num_vertices();
        let edges = g.edges();
        let ids = g.edge_ids();

        let mut d0_rows = Vec::with_capacity(edges.len());
        for e in &edges {
            let mut row = BitVec::zeros(nv);
            row.toggle(e.u);
            row.toggle(e.v);
            d0_rows.push(row);
        }

        let mut faces = Vec::new();
        let mut face_index: HashMap<(usize, usize, [usize; 4]), usize> = HashMap::new();
        let mut d1_rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for v in 0..nv {
                    let walk = square_walk(g, i, j, v);
                    if g.partner(j, walk[3]) != v {
                        return Err(Error::InvalidGraph(format!(
                            "alternating walk in colors {i},{j} from vertex {v} does not close"
                        )));
                    }
                    let key = (i, j, sorted(walk));
                    if face_index.contains_key(&key) {
                        continue;
                    }
                    face_index.insert(key, faces.len());
                    let mut row = BitVec::zeros(edges.len());
                    for (c, u) in [(i, walk[0]), (j, walk[1]), (i, walk[2]), (j, walk[3])] {
                        row.toggle(ids[c][u]);
                    }
                    d1_rows.push(row);
                    faces.push(Face {
                        colors: (i, j),
                        walk,
                    });
                }
            }
        }

        let face_at = |a: usize, b: usize, v: usize| -> usize {
            face_index[&(a, b, sorted(square_walk(g, a, b, v)))]
        };
        let mut solids = Vec::new();
        let mut seen: HashMap<(usize, usize, usize, [usize; 8]), ()> = HashMap::new();
        let mut d2_rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for v in 0..nv {
                        let mut corners = [0; 8];
                        for (m, corner) in corners.iter_mut().enumerate() {
                            let mut u = v;
                            for (bit, c) in [i, j, k].into_iter().enumerate() {
                                if m & (1 << bit) != 0 {
                                    u = g.partner(c, u);
                                }
                            }
                            *corner = u;
                        }
                        if seen.insert((i, j, k, sorted(corners)), ()).is_some() {
                            continue;
                        }
                        let mut row = BitVec::zeros(faces.len());
                        for (a, b, c) in [(i, j, k), (i, k, j), (j, k, i)] {
                            row.toggle(face_at(a, b, v));
                            row.toggle(face_at(a, b, g.partner(c, v)));
                        }
                        d2_rows.push(row);
                        solids.push(Solid {
                            colors: (i, j, k),
                            corners,
                        });
                    }
                }
            }
        }

        let d = [
            F2Matrix::from_rows(nv, d0_rows),
            F2Matrix::from_rows(edges.len(), d1_rows),
            F2Matrix::from_rows(faces.len(), d2_rows),
        ];
        Ok(CubicalComplex {
            vertices: nv,
            edges,
            faces,
            solids,
            d,
        })
    }

    /// Number of `k`-cells for `k = 0..=3`.
    pub fn cell_counts(&self) -> [usize; 4] {
        [
            self.vertices,
            self.edges.len(),
            self.faces.len(),
            self.solids.len(),
        ]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn solids(&self) -> &[Solid] {
        &self.solids
    }

    /// The matrix of `d_k : C^k → C^{k+1}`.
    pub fn coboundary(&self, k: usize) -> Result<&F2Matrix> {
        self.d
            .get(k)
            .ok_or(Error::IndexOutOfRange { index: k, bound: 3 })
    }

    pub fn apply(&self, cochain: &Cochain) -> Result<Cochain> {
        let d = self.coboundary(cochain.degree)?;
        if cochain.values.len() != d.ncols() {
            return Err(Error::DimensionMismatch(format!(
                "{}-cochain has {} values for {} cells",
                cochain.degree,
                cochain.values.len(),
                d.ncols()
            )));
        }
        Ok(Cochain {
            degree: cochain.degree + 1,
            values: d.mul_vec(&cochain.values),
        })
    }

    /// `dim H^0, dim H^1, dim H^2` of the truncated complex.
    pub fn cohomology_dims(&self) -> (usize, usize, usize) {
        let r0 = self.d[0].rank();
        let r1 = self.d[1].rank();
        let r2 = self.d[2].rank();
        (
            self.vertices - r0,
            self.edges.len() - r1 - r0,
            self.faces.len() - r2 - r1,
        )
    }

    /// A dashing with an odd number of dashes on every 2-cell, if any.
    pub fn solve_totally_odd(&self) -> Option<Cochain> {
        self.d[1]
            .solve(&BitVec::ones(self.faces.len()))
            .map(|values| Cochain { degree: 1, values })
    }

    /// Totally odd dashings, as base-2 logarithms: all of them, and classes
    /// up to vertex switching. `None` when there are none.
    pub fn count_dashings(&self) -> Option<DashingCount> {
        self.solve_totally_odd()?;
        let nullity = self.edges.len() - self.d[1].rank();
        Some(DashingCount {
            total_log2: nullity,
            classes_log2: self.cohomology_dims().1,
        })
    }

    /// A boson/fermion assignment with every edge joining opposite kinds.
    pub fn solve_bipartition(&self) -> Option<Cochain> {
        self.d[0]
            .solve(&BitVec::ones(self.edges.len()))
            .map(|values| Cochain { degree: 0, values })
    }

    /// Number of bipartitions, as a base-2 logarithm.
    pub fn count_bipartitions(&self) -> Option<usize> {
        self.solve_bipartition()?;
        Some(self.cohomology_dims().0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DashingCount {
    pub total_log2: usize,
    pub classes_log2: usize,
}

impl DashingCount {
    pub fn total(&self) -> Option<u128> {
        1u128.checked_shl(self.total_log2 as u32)
    }

    pub fn classes(&self) -> Option<u128> {
        1u128.checked_shl(self.classes_log2 as u32)
    }
}

pub fn build_complex(g: &Cliffordinkra) -> Result<CubicalComplex> {
    CubicalComplex::build(g)
}

/// Replaces the dashing of `g` with a 1-cochain over its edges.
pub fn install_dashing(g: &Cliffordinkra, mu: &Cochain) -> Result<Cliffordinkra> {
    if mu.degree != 1 {
        return Err(Error::DimensionMismatch(format!(
            "a dashing is a 1-cochain, got degree {}",
            mu.degree
        )));
    }
    g.with_dashing(&mu.values)
}

/// Summary record for reports.
#[derive(Clone, Debug, Serialize)]
pub struct CohomologyReport {
    pub cells: [usize; 4],
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
    pub dashings: Option<DashingCount>,
    pub bipartitions_log2: Option<usize>,
}

pub fn report(g: &Cliffordinkra) -> Result<CohomologyReport> {
    let cx = CubicalComplex::build(g)?;
    let (h0, h1, h2) = cx.cohomology_dims();
    Ok(CohomologyReport {
        cells: cx.cell_counts(),
        h0,
        h1,
        h2,
        dashings: cx.count_dashings(),
        bipartitions_log2: cx.count_bipartitions(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::LinearCode;
    use crate::construct::{cube, fold_cube};
    use crate::graph::validate;

    #[test]
    fn three_cube() {
        let cx = build_complex(&cube(3).unwrap()).unwrap();
        assert_eq!(cx.cell_counts(), [8, 12, 6, 1]);
        assert_eq!(cx.cohomology_dims(), (1, 0, 0));
        let d1d0 = cx.coboundary(1).unwrap().mul(cx.coboundary(0).unwrap());
        assert!(d1d0.is_zero());
        let ones = Cochain {
            degree: 2,
            values: BitVec::ones(6),
        };
        assert!(cx.apply(&ones).unwrap().values.is_zero());
        assert!(cx.coboundary(3).is_err());
    }

    #[test]
    fn four_cube_counts() {
        let cx = build_complex(&cube(4).unwrap()).unwrap();
        assert_eq!(cx.cell_counts(), [16, 32, 24, 8]);
    }

    #[test]
    fn d0_of_indicator_marks_crossing_edges() {
        let g = cube(3).unwrap();
        let cx = build_complex(&g).unwrap();
        let s = [0, 3];
        let f = Cochain {
            degree: 0,
            values: BitVec::from_indices(8, s),
        };
        let crossing = cx.apply(&f).unwrap().values;
        let switched = g.vertex_switch(&s).unwrap();
        assert_eq!(g.dashing().xor(&switched.dashing()), crossing);
    }

    #[test]
    fn solved_dashing_is_valid() {
        let g = cube(4).unwrap();
        let cx = build_complex(&g).unwrap();
        let mu = cx.solve_totally_odd().unwrap();
        assert!(validate(&install_dashing(&g, &mu).unwrap()).is_valid());
        let diff = mu.values.xor(&g.dashing());
        assert!(cx.coboundary(1).unwrap().mul_vec(&diff).is_zero());
    }

    #[test]
    fn weight_two_fold_has_no_totally_odd_dashing() {
        let code = LinearCode::from_strings(6, &["110000"]).unwrap();
        let cx = build_complex(&fold_cube(6, &code).unwrap()).unwrap();
        assert!(cx.solve_totally_odd().is_none());
        assert!(cx.count_dashings().is_none());
        assert!(cx.solve_bipartition().is_some());
    }

    #[test]
    fn odd_fold_has_no_bipartition() {
        let code = LinearCode::from_strings(3, &["100"]).unwrap();
        let cx = build_complex(&fold_cube(3, &code).unwrap()).unwrap();
        assert!(cx.solve_bipartition().is_none());
    }

    #[test]
    fn cochain_serde() {
        let c = Cochain {
            degree: 1,
            values: BitVec::from_indices(12, [0, 5, 11]),
        };
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<Cochain>(&text).unwrap(), c);
    }
}
