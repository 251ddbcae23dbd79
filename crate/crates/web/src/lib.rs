//! Browser demo. The plain functions return JSON strings and are tested
//! natively; the `wasm_` wrappers expose them to JavaScript.

use std::f64::consts::PI;
use std::fmt::Write;

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use cliffordinkra::construct::minimal_representation;
use cliffordinkra::geometry::{genus_formula, geometrize, Rainbow};
use cliffordinkra::graph::validate;
use cliffordinkra::monomial::parse_signs;
use cliffordinkra::{quotient, BitWord, Cliffordinkra, Parity, QuotientSpec, Sign};

const COLORS: [&str; 12] = [
    "#222222", "#d62728", "#2ca02c", "#1f77b4", "#ff7f0e", "#9467bd", "#8c564b", "#17becf",
    "#e377c2", "#7f7f7f", "#bcbd22", "#006400",
];

const SIZE: f64 = 460.0;
const MARGIN: f64 = 24.0;

/// Largest color count the table and explorer will build.
pub const MAX_DEMO_COLORS: usize = 16;

fn parse_spec(n: usize, code: &str, signs: &str) -> Result<QuotientSpec, String> {
    if n == 0 || n > MAX_DEMO_COLORS {
        return Err(format!("choose between 1 and {MAX_DEMO_COLORS} colors"));
    }
    let rows: Vec<BitWord> = code
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<BitWord>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        return Err(format!("generator {r} does not have length {n}"));
    }
    let signs = if signs.trim().is_empty() {
        vec![Sign::Plus; rows.len()]
    } else {
        parse_signs(signs.trim()).map_err(|e| e.to_string())?
    };
    QuotientSpec::new(n, &rows, signs).map_err(|e| e.to_string())
}

/// Projects the label word of each vertex along `n` fanned directions, the
/// usual picture of a hypercube, then fits the result into the canvas.
fn layout(g: &Cliffordinkra) -> Vec<(f64, f64)> {
    let n = g.n();
    let dirs: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let theta = PI * (i as f64 + 0.5) / n as f64;
            let r = 1.0 + 0.11 * i as f64;
            (r * theta.cos(), r * theta.sin())
        })
        .collect();
    let raw: Vec<(f64, f64)> = (0..g.num_vertices())
        .map(|v| {
            g.label(v)
                .chars()
                .zip(&dirs)
                .filter(|(c, _)| *c == '1')
                .fold((0.0, 0.0), |(x, y), (_, d)| (x + d.0, y + d.1))
        })
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &raw {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    raw.iter()
        .map(|&(x, y)| {
            (
                MARGIN + (x - x0) * scale + ((SIZE - 2.0 * MARGIN) - (x1 - x0) * scale) / 2.0,
                MARGIN + (y - y0) * scale + ((SIZE - 2.0 * MARGIN) - (y1 - y0) * scale) / 2.0,
            )
        })
        .collect()
}

pub fn render_svg(g: &Cliffordinkra) -> String {
    let pos = layout(g);
    let mut svg = format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#
    );
    for e in g.edges() {
        let (a, b) = (pos[e.u], pos[e.v]);
        let dash = if e.dashed { r#" stroke-dasharray="6 4""# } else { "" };
        let _ = write!(
            svg,
            r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="{}" stroke-width="2"{dash}/>"#,
            a.0,
            a.1,
            b.0,
            b.1,
            COLORS[e.color % COLORS.len()]
        );
    }
    let show_labels = g.num_vertices() <= 32;
    for (v, &(x, y)) in pos.iter().enumerate() {
        let fill = match g.parity(v) {
            Parity::Boson => "white",
            Parity::Fermion => "black",
        };
        let _ = write!(
            svg,
            r#"<circle cx="{x:.1}" cy="{y:.1}" r="6" fill="{fill}" stroke="black" stroke-width="1.5"><title>{}</title></circle>"#,
            g.label(v)
        );
        if show_labels {
            let _ = write!(
                svg,
                r#"<text x="{:.1}" y="{:.1}" font-size="10" font-family="monospace">{}</text>"#,
                x + 8.0,
                y - 6.0,
                g.label(v)
            );
        }
    }
    svg.push_str("</svg>");
    svg
}

/// The quotient graph for a code and sign choice, drawn as SVG.
pub fn quotient_view(n: usize, code: &str, signs: &str) -> Result<String, String> {
    let spec = parse_spec(n, code, signs)?;
    let g = quotient(&spec).map_err(|e| e.to_string())?;
    let report = validate(&g);
    Ok(json!({
        "edges": g.num_edges(),
        "graph": g.to_json_value(),
        "svg": render_svg(&g),
        "valid": report.is_valid(),
        "vertices": g.num_vertices(),
    })
    .to_string())
}

/// One row per color count: the maximal code family, its dimension and the
/// size and genus of the resulting minimal representation.
pub fn minrep_table(max_n: usize) -> Result<String, String> {
    if max_n == 0 || max_n > MAX_DEMO_COLORS {
        return Err(format!("choose between 1 and {MAX_DEMO_COLORS} colors"));
    }
    let rows: Vec<Value> = (1..=max_n)
        .map(|n| {
            let m = minimal_representation(n).map_err(|e| e.to_string())?;
            let genus = if n >= 3 {
                geometrize(&m.graph, &Rainbow::standard(n)).ok().map(|s| s.genus)
            } else {
                None
            };
            Ok(json!({
                "code": m.code.to_strings(),
                "dimension": m.dimension,
                "family": m.family,
                "genus": genus,
                "k": m.code.dimension(),
                "n": n,
            }))
        })
        .collect::<Result<_, String>>()?;
    Ok(Value::Array(rows).to_string())
}

/// Genus of the quotient surface for one rainbow, alongside the closed
/// formula and, for few colors, the genus under every rainbow.
pub fn genus_view(n: usize, code: &str, signs: &str, rainbow: &str) -> Result<String, String> {
    let spec = parse_spec(n, code, signs)?;
    let g = quotient(&spec).map_err(|e| e.to_string())?;
    let r = if rainbow.trim().is_empty() {
        Rainbow::standard(n)
    } else {
        rainbow.parse::<Rainbow>().map_err(|e| e.to_string())?
    };
    let stats = geometrize(&g, &r).map_err(|e| e.to_string())?;
    let all: Vec<Value> = if n <= 7 {
        Rainbow::all(n)
            .iter()
            .filter_map(|r| {
                geometrize(&g, r)
                    .ok()
                    .map(|s| json!({ "genus": s.genus, "rainbow": r.to_string() }))
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok(json!({
        "all": all,
        "formula": genus_formula(n, spec.code.dimension()).ok(),
        "rainbow": r.canonical(),
        "stats": stats,
    })
    .to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = quotientView)]
pub fn wasm_quotient_view(n: usize, code: &str, signs: &str) -> Result<String, JsError> {
    js(quotient_view(n, code, signs))
}

#[wasm_bindgen(js_name = minrepTable)]
pub fn wasm_minrep_table(max_n: usize) -> Result<String, JsError> {
    js(minrep_table(max_n))
}

#[wasm_bindgen(js_name = genusView)]
pub fn wasm_genus_view(n: usize, code: &str, signs: &str, rainbow: &str) -> Result<String, JsError> {
    js(genus_view(n, code, signs, rainbow))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn quotient_view_draws_every_edge() {
        let v = parse(&quotient_view(4, "1111", "-").unwrap());
        assert_eq!(v["vertices"], 8);
        assert_eq!(v["edges"], 16);
        assert_eq!(v["valid"], true);
        let svg = v["svg"].as_str().unwrap();
        assert_eq!(svg.matches("<line").count(), 16);
        assert_eq!(svg.matches("<circle").count(), 8);
        assert!(svg.contains("stroke-dasharray"));
    }

    #[test]
    fn layout_separates_cube_vertices() {
        let g = cliffordinkra::cube(5).unwrap();
        let pos = layout(&g);
        for a in 0..pos.len() {
            for b in a + 1..pos.len() {
                let d = (pos[a].0 - pos[b].0).hypot(pos[a].1 - pos[b].1);
                assert!(d > 1.0, "vertices {a} and {b} overlap");
            }
        }
    }

    #[test]
    fn table_rows() {
        let rows = parse(&minrep_table(8).unwrap());
        let rows = rows.as_array().unwrap();
        assert_eq!(rows.len(), 8);
        assert_eq!(rows[5]["dimension"], 16);
        assert_eq!(rows[7]["family"], "e8");
        assert_eq!(rows[7]["dimension"], 16);
        assert_eq!(rows[3]["genus"], 1);
        assert!(rows[1]["genus"].is_null());
    }

    #[test]
    fn genus_matches_formula() {
        let v = parse(&genus_view(4, "1111", "+", "0,2,1,3").unwrap());
        assert_eq!(v["stats"]["genus"], 1);
        assert_eq!(v["formula"], 1);
        assert_eq!(v["all"].as_array().unwrap().len(), 3);
        let v = parse(&genus_view(6, "", "", "").unwrap());
        assert_eq!(v["stats"]["genus"], v["formula"]);
    }

    #[test]
    fn bad_input_is_reported() {
        assert!(quotient_view(4, "1100", "+").is_err());
        assert!(quotient_view(4, "111", "").is_err());
        assert!(quotient_view(0, "", "").is_err());
        assert!(genus_view(2, "", "", "").is_err());
        assert!(minrep_table(99).is_err());
    }
}
