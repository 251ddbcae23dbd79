#![allow(dead_code)]

use cliffordinkra::bitword::w;
use cliffordinkra::{BitWord, Cliffordinkra, Edge, Parity};

/// The 4-color, 8-vertex example with colors black=0, red=1, green=2,
/// blue=3. Bosons E,F,G,H are vertices 0..4, fermions A,B,C,D are 4..8.
pub fn figure_two() -> Cliffordinkra {
    let names = ["E", "F", "G", "H", "A", "B", "C", "D"];
    let idx = |s: &str| names.iter().position(|&x| x == s).unwrap();
    let spec = [
        (1, "B", "E", false),
        (1, "D", "G", false),
        (1, "C", "H", false),
        (1, "F", "A", false),
        (3, "D", "E", false),
        (3, "B", "G", true),
        (3, "A", "H", false),
        (3, "F", "C", true),
        (0, "D", "H", false),
        (0, "C", "G", true),
        (0, "A", "E", true),
        (0, "F", "B", false),
        (2, "E", "C", false),
        (2, "G", "A", true),
        (2, "F", "D", false),
        (2, "H", "B", true),
    ];
    let edges: Vec<Edge> = spec
        .iter()
        .map(|&(color, u, v, dashed)| Edge { color, dashed, u: idx(u), v: idx(v) })
        .collect();
    let parity = (0..8)
        .map(|v| if v < 4 { Parity::Boson } else { Parity::Fermion })
        .collect();
    Cliffordinkra::from_edges(4, parity, &edges)
        .unwrap()
        .with_labels(names.iter().map(|s| s.to_string()).collect())
        .unwrap()
}

pub const TWIN_WORDS: [&str; 8] = [
    "0000", "0011", "0101", "0110", "0001", "0010", "0100", "0111",
];

/// The two 8-vertex graphs drawn for the projections by `1111`, as word
/// pairs with dash flags. The color of an edge is the position where the
/// words differ, after reducing modulo `1111`.
pub fn twin(plus: bool) -> Cliffordinkra {
    let edges_a = [
        ("0000", "0100", false),
        ("0010", "0110", false),
        ("0000", "0010", false),
        ("0100", "0110", true),
        ("0000", "0001", false),
        ("0100", "0101", true),
        ("0010", "0011", true),
        ("0110", "0111", false),
        ("0000", "0111", false),
        ("0100", "0011", true),
        ("0010", "0101", false),
        ("0110", "0001", true),
        ("0001", "0101", false),
        ("0011", "0111", false),
        ("0001", "0011", false),
        ("0101", "0111", true),
    ];
    let idx = |s: &str| TWIN_WORDS.iter().position(|&x| x == s).unwrap();
    let edges: Vec<Edge> = edges_a
        .iter()
        .map(|&(u, v, dashed)| {
            let mut diff: BitWord = w(u).xor(w(v)).unwrap();
            if diff.weight() == 3 {
                diff = diff.xor(w("1111")).unwrap();
            }
            let color = diff.leading_one().unwrap();
            let dashed = if !plus && color == 0 { !dashed } else { dashed };
            Edge { color, dashed, u: idx(u), v: idx(v) }
        })
        .collect();
    let parity = TWIN_WORDS
        .iter()
        .map(|s| Parity::from_weight(w(s).weight()))
        .collect();
    Cliffordinkra::from_edges(4, parity, &edges)
        .unwrap()
        .with_labels(TWIN_WORDS.iter().map(|s| s.to_string()).collect())
        .unwrap()
}
