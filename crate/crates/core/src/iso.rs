//! Isomorphism of Cliffordinkras up to vertex switching. Colors are fixed.
//!
//! For a connected graph the color-word action is transitive, so a color- and
//! parity-preserving bijection is forced once the image of one anchor vertex
//! is chosen. Each forced candidate is then checked for dashing equivalence
//! by solving `d0 x = δ` over F2, where `δ` marks the edges whose dash
//! differs under the bijection.

use serde::Serialize;

use crate::error::Result;
use crate::f2::{BitVec, F2Matrix};
use crate::graph::Cliffordinkra;

/// `bijection[v]` is the image in the second graph of vertex `v` of the
/// first; switching the first graph at `switch` and relabeling by the
/// bijection yields the second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub bijection: Vec<usize>,
    pub switch: Vec<usize>,
}

impl IsoWitness {
    /// The witness for the reverse direction.
    pub fn inverse(&self) -> IsoWitness {
        let mut back = vec![0; self.bijection.len()];
        for (v, &w) in self.bijection.iter().enumerate() {
            back[w] = v;
        }
        let mut switch: Vec<usize> = self.switch.iter().map(|&v| self.bijection[v]).collect();
        switch.sort_unstable();
        IsoWitness {
            bijection: back,
            switch,
        }
    }

    /// Checks the witness directly.
    pub fn verify(&self, g1: &Cliffordinkra, g2: &Cliffordinkra) -> bool {
        let nv = g1.num_vertices();
        if g1.n() != g2.n() || nv != g2.num_vertices() || self.bijection.len() != nv {
            return false;
        }
        let Ok(switched) = g1.vertex_switch(&self.switch) else {
            return false;
        };
        (0..nv).all(|v| {
            let w = self.bijection[v];
            w < nv
                && g1.parity(v) == g2.parity(w)
                && (0..g1.n()).all(|i| {
                    self.bijection[g1.partner(i, v)] == g2.partner(i, w)
                        && switched.is_dashed(i, v) == g2.is_dashed(i, w)
                })
        })
    }
}

/// The vertex-to-edge incidence map `d0` of a graph, rows indexed by
/// [`Cliffordinkra::edges`]. Loops give zero rows.
pub fn incidence_d0(g: &Cliffordinkra) -> F2Matrix {
    let nv = g.num_vertices();
    let rows = g
        .edges()
        .into_iter()
        .map(|e| {
            let mut row = BitVec::zeros(nv);
            row.toggle(e.u);
            row.toggle(e.v);
            row
        })
        .collect();
    F2Matrix::from_rows(nv, rows)
}

/// Decides isomorphism up to switching; returns the witness with the least
/// anchor image, or `None`.
pub fn is_isomorphic(g1: &Cliffordinkra, g2: &Cliffordinkra) -> Result<Option<IsoWitness>> {
    if g1.n() != g2.n() || g1.num_vertices() != g2.num_vertices() {
        return Ok(None);
    }
    let comps1 = g1.components();
    let comps2 = g2.components();
    if comps1.len() == 1 && comps2.len() == 1 {
        return Ok(connected_iso(g1, g2));
    }
    if comps1.len() != comps2.len() {
        return Ok(None);
    }
    let subs2 = comps2
        .iter()
        .map(|c| g2.induced(c))
        .collect::<Result<Vec<_>>>()?;
    let mut used = vec![false; comps2.len()];
    let nv = g1.num_vertices();
    let mut bijection = vec![0; nv];
    let mut switch = Vec::new();
    for c1 in &comps1 {
        let sub1 = g1.induced(c1)?;
        let mut found = false;
        for (k, sub2) in subs2.iter().enumerate() {
            if used[k] || sub2.num_vertices() != sub1.num_vertices() {
                continue;
            }
            if let Some(wit) = connected_iso(&sub1, sub2) {
                used[k] = true;
                for (local, &v) in c1.iter().enumerate() {
                    bijection[v] = comps2[k][wit.bijection[local]];
                }
                switch.extend(wit.switch.iter().map(|&local| c1[local]));
                found = true;
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    switch.sort_unstable();
    Ok(Some(IsoWitness { bijection, switch }))
}

fn connected_iso(g1: &Cliffordinkra, g2: &Cliffordinkra) -> Option<IsoWitness> {
    let nv = g1.num_vertices();
    if nv == 0 {
        return Some(IsoWitness {
            bijection: vec![],
            switch: vec![],
        });
    }
    let anchor = 0;
    let d0 = incidence_d0(g1);
    let edges = g1.edges();
    for w in 0..nv {
        if g2.parity(w) != g1.parity(anchor) {
            continue;
        }
        let Some(phi) = forced_map(g1, g2, anchor, w) else {
            continue;
        };
        let delta = BitVec::from_bools(
            edges
                .iter()
                .map(|e| e.dashed != g2.is_dashed(e.color, phi[e.u])),
        );
        if let Some(mut x) = d0.solve(&delta) {
            if x.get(anchor) {
                x = x.xor(&BitVec::ones(nv));
            }
            return Some(IsoWitness {
                bijection: phi,
                switch: x.iter_ones().collect(),
            });
        }
    }
    None
}

/// The unique color-preserving map sending `anchor` to `w`, if it is a
/// parity-preserving bijection onto a connected `g2`.
fn forced_map(g1: &Cliffordinkra, g2: &Cliffordinkra, anchor: usize, w: usize) -> Option<Vec<usize>> {
    let nv = g1.num_vertices();
    let mut phi = vec![usize::MAX; nv];
    let mut hit = vec![false; nv];
    phi[anchor] = w;
    hit[w] = true;
    let mut queue = vec![anchor];
    let mut k = 0;
    while k < queue.len() {
        let v = queue[k];
        k += 1;
        if g1.parity(v) != g2.parity(phi[v]) {
            return None;
        }
        for i in 0..g1.n() {
            let p = g1.partner(i, v);
            let image = g2.partner(i, phi[v]);
            if phi[p] == usize::MAX {
                if hit[image] {
                    return None;
                }
                phi[p] = image;
                hit[image] = true;
                queue.push(p);
            } else if phi[p] != image {
                return None;
            }
        }
    }
    (queue.len() == nv).then_some(phi)
}
