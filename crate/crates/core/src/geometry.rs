//! Rainbow geometrization: glue a polygon into every bicolor cycle whose two
//! colors are neighbors in a cyclic color order, and read off the genus of
//! the resulting closed surface from its Euler characteristic.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Cliffordinkra;

/// A cyclic order of the colors `0..n`, equal up to rotation and reflection.
#[derive(Clone, Debug, Eq)]
pub struct Rainbow {
    order: Vec<usize>,
}

impl Rainbow {
    pub fn new(order: Vec<usize>) -> Result<Rainbow> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &c in &order {
            if c >= n || seen[c] {
                return Err(Error::Parse(format!(
                    "rainbow {order:?} is not a permutation of 0..{n}"
                )));
            }
            seen[c] = true;
        }
        Ok(Rainbow { order })
    }

    pub fn standard(n: usize) -> Rainbow {
        Rainbow {
            order: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// The lexicographically least rotation or reflection.
    pub fn canonical(&self) -> Vec<usize> {
        let n = self.order.len();
        let mut best = self.order.clone();
        for reflect in [false, true] {
            for start in 0..n {
                let candidate: Vec<usize> = (0..n)
                    .map(|k| {
                        let idx = if reflect { (start + n - k) % n } else { (start + k) % n };
                        self.order[idx]
                    })
                    .collect();
                if candidate < best {
                    best = candidate;
                }
            }
        }
        best
    }

    /// Unordered neighbor pairs `(a, b)` with `a < b`.
    pub fn adjacent_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.order.len();
        let mut pairs: Vec<(usize, usize)> = (0..n)
            .map(|k| {
                let a = self.order[k];
                let b = self.order[(k + 1) % n];
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        pairs
    }

    /// Every rainbow on `n` colors, once each, in canonical form.
    pub fn all(n: usize) -> Vec<Rainbow> {
        if n < 3 {
            return vec![Rainbow::standard(n)];
        }
        let mut out = Vec::new();
        let mut rest: Vec<usize> = (1..n).collect();
        permutations(&mut rest, 0, &mut |p| {
            if p[0] < p[p.len() - 1] {
                let mut order = vec![0];
                order.extend_from_slice(p);
                out.push(Rainbow { order });
            }
        });
        out.sort_by(|a, b| a.order.cmp(&b.order));
        out
    }
}

fn permutations(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

impl PartialEq for Rainbow {
    fn eq(&self, other: &Rainbow) -> bool {
        self.canonical() == other.canonical()
    }
}

impl fmt::Display for Rainbow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.order.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Rainbow {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rainbow> {
        let order = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad color {t:?} in rainbow")))
            })
            .collect::<Result<Vec<_>>>()?;
        Rainbow::new(order)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceStats {
    pub v: usize,
    pub e: usize,
    pub f: usize,
    pub euler: i64,
    pub genus: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceFace {
    pub colors: (usize, usize),
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Surface {
    pub stats: SurfaceStats,
    pub faces: Vec<SurfaceFace>,
}

/// Glues the rainbow faces and returns the surface statistics and faces.
pub fn geometrize_with_faces(g: &Cliffordinkra, r: &Rainbow) -> Result<Surface> {
    let n = g.n();
    if r.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "rainbow on {} colors for a graph with {n}",
            r.len()
        )));
    }
    if n < 3 {
        return Err(Error::Unsupported(format!(
            "{n} colors do not bound a closed surface"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let nv = g.num_vertices();
    let ids = g.edge_ids();
    let mut on_faces = vec![0usize; g.num_edges()];
    let mut faces = Vec::new();
    for (a, b) in r.adjacent_pairs() {
        let mut seen = vec![false; nv];
        for v in 0..nv {
            if seen[v] {
                continue;
            }
            let mut walk = Vec::new();
            let mut u = v;
            let mut color = a;
            loop {
                seen[u] = true;
                walk.push(u);
                on_faces[ids[color][u]] += 1;
                u = g.partner(color, u);
                color = if color == a { b } else { a };
                if u == v && color == a {
                    break;
                }
            }
            faces.push(SurfaceFace {
                colors: (a, b),
                vertices: walk,
            });
        }
    }
    if let Some(e) = on_faces.iter().position(|&c| c != 2) {
        return Err(Error::InvalidGraph(format!(
            "edge {e} lies on {} faces; the surface is not closed",
            on_faces[e]
        )));
    }
    let (v, e, f) = (nv, g.num_edges(), faces.len());
    let euler = v as i64 - e as i64 + f as i64;
    if euler % 2 != 0 {
        return Err(Error::InvalidGraph(format!("odd Euler characteristic {euler}")));
    }
    Ok(Surface {
        stats: SurfaceStats {
            v,
            e,
            f,
            euler,
            genus: (2 - euler) / 2,
        },
        faces,
    })
}

pub fn geometrize(g: &Cliffordinkra, r: &Rainbow) -> Result<SurfaceStats> {
    Ok(geometrize_with_faces(g, r)?.stats)
}

/// `1 + (n-4)·2^{n-k-3}`, computed through `4χ = 2^{n-k}(4-n)` so that the
/// cases `n - k < 3` are checked for integrality rather than rounded.
pub fn genus_formula(n: usize, k: usize) -> Result<i64> {
    if n < 3 {
        return Err(Error::Unsupported(format!(
            "{n} colors do not bound a closed surface"
        )));
    }
    if k > n || n - k > 60 {
        return Err(Error::Unsupported(format!("genus for n={n}, k={k}")));
    }
    let four_chi = (1i128 << (n - k)) * (4 - n as i128);
    // genus = 1 - χ/2 = 1 - 4χ/8
    if four_chi % 8 != 0 {
        return Err(Error::Unsupported(format!(
            "n={n}, k={k} gives a non-integral genus"
        )));
    }
    Ok((1 - four_chi / 8) as i64)
}
