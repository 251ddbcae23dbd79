use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::Index;

use cliffordinkra::bitword::BitWord;
use cliffordinkra::code::{
    enumerate_doubly_even, max_doubly_even_dimension, span, standard_code, MaxMode, StandardCode,
};
use cliffordinkra::cohomology::build_complex;
use cliffordinkra::construct::{
    clpq_cube, clpq_matrices, clpq_validate, cube, minimal_representation, quotient,
    recover_code, recover_code_from, QuotientSpec,
};
use cliffordinkra::geometry::{geometrize, genus_formula, Rainbow};
use cliffordinkra::graph::validate;
use cliffordinkra::iso::is_isomorphic;
use cliffordinkra::matrix::{from_matrices, to_matrices, verify_clifford};
use cliffordinkra::monomial::{square_sign, Sign, SignedMonomial};
use cliffordinkra::{Cliffordinkra, LinearCode};

/// Sign of `Γ_x Γ_y` by sorting the explicit factor list with adjacent
/// swaps and cancelling equal neighbours.
fn bubble_sign(x: BitWord, y: BitWord) -> (Sign, BitWord) {
    let mut factors: Vec<usize> = x.support().chain(y.support()).collect();
    let mut swaps = 0u32;
    loop {
        let mut changed = false;
        let mut k = 0;
        while k + 1 < factors.len() {
            if factors[k] == factors[k + 1] {
                factors.drain(k..k + 2);
                changed = true;
            } else if factors[k] > factors[k + 1] {
                factors.swap(k, k + 1);
                swaps += 1;
                changed = true;
                k += 1;
            } else {
                k += 1;
            }
        }
        if !changed {
            break;
        }
    }
    let mut word = BitWord::zero(x.len());
    for f in factors {
        word = word.flip(f);
    }
    (Sign::from_parity(swaps), word)
}

fn word(n: usize) -> impl Strategy<Value = BitWord> {
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    any::<u64>().prop_map(move |b| BitWord::from_bits(b & mask, n))
}

fn codes(n: usize) -> &'static [LinearCode] {
    static CACHE: OnceLock<Vec<Vec<LinearCode>>> = OnceLock::new();
    &CACHE.get_or_init(|| {
        (0..=8)
            .map(|n| if n == 0 { vec![] } else { enumerate_doubly_even(n).unwrap() })
            .collect()
    })[n]
}

/// A random quotient: `n` in 1..=8, any doubly even code, any signs.
fn quotient_spec() -> impl Strategy<Value = QuotientSpec> {
    (1usize..=8, any::<Index>(), any::<u64>()).prop_map(|(n, idx, bits)| {
        let c = idx.get(codes(n)).clone();
        let signs = (0..c.dimension())
            .map(|j| if bits >> j & 1 == 1 { Sign::Minus } else { Sign::Plus })
            .collect();
        QuotientSpec::new(n, c.generators(), signs).unwrap()
    })
}

fn quotient_graph() -> impl Strategy<Value = Cliffordinkra> {
    quotient_spec().prop_map(|s| quotient(&s).unwrap())
}

fn vertex_subset(g: &Cliffordinkra, bits: u64, extra: u64) -> Vec<usize> {
    (0..g.num_vertices())
        .filter(|&v| {
            let source = if v < 64 { bits } else { extra.rotate_left(v as u32) };
            source >> (v % 64) & 1 == 1
        })
        .collect()
}

#[test]
fn closed_form_sign_matches_sorting_exhaustively() {
    for n in 1..=5 {
        for x in BitWord::all(n) {
            for y in BitWord::all(n) {
                let p = SignedMonomial::basis(x).multiply(SignedMonomial::basis(y)).unwrap();
                assert_eq!((p.sign, p.exponent), bubble_sign(x, y), "{x} · {y}");
            }
        }
    }
}

#[test]
fn generator_criterion_matches_exhaustive_check() {
    for n in 1..=8 {
        for c in codes(n) {
            assert!(c.is_doubly_even() && c.is_doubly_even_exhaustive());
        }
    }
    for n in 1..=6 {
        for c in cliffordinkra::code::enumerate_even_with_limit(n, 8).unwrap() {
            assert_eq!(c.is_doubly_even(), c.is_doubly_even_exhaustive(), "{c:?}");
        }
    }
}

#[test]
fn exhaustive_and_constructive_maxima_agree() {
    for n in 1..=8 {
        let (a, _) = max_doubly_even_dimension(n, MaxMode::Exhaustive).unwrap();
        let (b, wit) = max_doubly_even_dimension(n, MaxMode::Constructive).unwrap();
        assert_eq!(a, b, "n={n}");
        assert!(wit.is_doubly_even_exhaustive());
    }
}

#[test]
fn family_sums_stay_doubly_even() {
    let parts = [
        standard_code(StandardCode::D(4), 4).unwrap(),
        standard_code(StandardCode::D(6), 6).unwrap(),
        standard_code(StandardCode::E7, 7).unwrap(),
        standard_code(StandardCode::E8, 8).unwrap(),
        LinearCode::zero(2),
    ];
    for a in &parts {
        for b in &parts {
            assert!(a.direct_sum(b).unwrap().is_doubly_even_exhaustive());
        }
    }
}

#[test]
fn cube_dashing_is_totally_odd() {
    for n in 1..=10 {
        assert!(validate(&cube(n).unwrap()).is_valid(), "n={n}");
    }
}

#[test]
fn signature_cubes_satisfy_their_relations() {
    for n in 1..=6 {
        for p in 0..=n {
            let g = clpq_cube(p, n - p).unwrap();
            assert!(clpq_validate(&g, p, n - p).unwrap().is_valid());
            let m = clpq_matrices(&g, p, n - p, None).unwrap();
            assert!(verify_clifford(&m, (p, n - p)).unwrap());
        }
    }
}

#[test]
fn minimal_representations_are_graded() {
    for n in 1..=16 {
        let m = minimal_representation(n).unwrap();
        assert!(verify_clifford(&m.matrices, (0, n)).unwrap());
        assert!(m.matrices.iter().all(|x| x.is_graded(m.graph.parities())));
        assert!(m.matrices.iter().all(|x| x.is_symmetric()));
    }
}

#[test]
fn genus_is_rainbow_independent_on_quotients() {
    for n in 3..=6 {
        for c in codes(n) {
            let g = quotient(&QuotientSpec::positive(c).unwrap()).unwrap();
            let expected = genus_formula(n, c.dimension()).unwrap();
            for r in Rainbow::all(n) {
                let s = geometrize(&g, &r).unwrap();
                assert_eq!(s.euler % 2, 0);
                assert_eq!(s.genus, expected);
            }
        }
    }
}

proptest! {
    #[test]
    fn closed_form_sign_matches_sorting(n in 1usize..=10, bits in any::<(u64, u64)>()) {
        let mask = (1u64 << n) - 1;
        let x = BitWord::from_bits(bits.0 & mask, n);
        let y = BitWord::from_bits(bits.1 & mask, n);
        let p = SignedMonomial::basis(x).multiply(SignedMonomial::basis(y)).unwrap();
        prop_assert_eq!((p.sign, p.exponent), bubble_sign(x, y));
    }

    #[test]
    fn generators_anticommute(n in 2usize..=10, i in 0usize..10, j in 0usize..10) {
        let (i, j) = (i % n, j % n);
        let a = SignedMonomial::generator(i, n);
        let b = SignedMonomial::generator(j, n);
        if i == j {
            prop_assert_eq!(a * b, SignedMonomial::identity(n));
        } else {
            prop_assert_eq!(a * b, -(b * a));
        }
    }

    #[test]
    fn multiplication_associates(
        (x, y, z) in (1usize..=8).prop_flat_map(|n| (word(n), word(n), word(n))),
        signs in any::<(bool, bool, bool)>(),
    ) {
        let s = |b: bool| if b { Sign::Minus } else { Sign::Plus };
        let a = SignedMonomial::new(s(signs.0), x);
        let b = SignedMonomial::new(s(signs.1), y);
        let c = SignedMonomial::new(s(signs.2), z);
        prop_assert_eq!((a * b) * c, a * (b * c));
    }

    #[test]
    fn square_sign_matches_product(x in (1usize..=12).prop_flat_map(word)) {
        let sq = SignedMonomial::basis(x) * SignedMonomial::basis(x);
        prop_assert_eq!(sq.sign, square_sign(x));
        prop_assert!(sq.exponent.is_zero());
        if x.weight() % 4 == 0 {
            prop_assert_eq!(sq.sign, Sign::Plus);
        }
    }

    #[test]
    fn weight_identity((v, w) in (1usize..=64).prop_flat_map(|n| (word(n), word(n)))) {
        let lhs = v.xor(w).unwrap().weight() as i64;
        let rhs = v.weight() as i64 + w.weight() as i64 - 2 * v.and(w).unwrap().weight() as i64;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn span_has_two_to_the_rank_elements(
        gens in (1usize..=10).prop_flat_map(|n| prop::collection::vec(word(n), 0..6)),
    ) {
        let n = gens.first().map_or(1, |g| g.len());
        let s = span(n, &gens).unwrap();
        let mut brute = std::collections::BTreeSet::new();
        for mask in 0u32..(1 << gens.len()) {
            let mut acc = BitWord::zero(n);
            for (j, g) in gens.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    acc = acc.xor(*g).unwrap();
                }
            }
            brute.insert(acc);
        }
        let rank = LinearCode::new(n, gens.iter().copied()).unwrap().dimension();
        prop_assert_eq!(s.len(), 1 << rank);
        prop_assert_eq!(s, brute);
    }

    #[test]
    fn quotients_are_valid_with_the_right_code(spec in quotient_spec()) {
        let g = quotient(&spec).unwrap();
        let k = spec.code.dimension();
        prop_assert!(validate(&g).is_valid());
        prop_assert_eq!(g.num_vertices(), 1 << (spec.n - k));
        if spec.n > k {
            prop_assert_eq!(g.num_edges(), spec.n << (spec.n - k - 1));
        }
        prop_assert!(g.is_connected());
        prop_assert_eq!(&recover_code(&g).unwrap(), &spec.code);
        let last = g.num_vertices() - 1;
        prop_assert_eq!(recover_code_from(&g, last).unwrap(), spec.code.clone());
    }

    #[test]
    fn sign_vectors_change_only_the_dashing(spec in quotient_spec()) {
        let plus = quotient(&QuotientSpec::positive(&spec.code).unwrap()).unwrap();
        let g = quotient(&spec).unwrap();
        prop_assert_eq!(plus.parities(), g.parities());
        for i in 0..g.n() {
            for v in 0..g.num_vertices() {
                prop_assert_eq!(plus.partner(i, v), g.partner(i, v));
            }
        }
        let diff = plus.dashing().xor(&g.dashing());
        let cx = build_complex(&g).unwrap();
        prop_assert!(cx.coboundary(1).unwrap().mul_vec(&diff).is_zero());
    }

    #[test]
    fn switching_preserves_validity(g in quotient_graph(), bits in any::<(u64, u64)>()) {
        let s = vertex_subset(&g, bits.0, bits.1);
        let h = g.vertex_switch(&s).unwrap();
        prop_assert!(validate(&h).is_valid());
        prop_assert_eq!(&h.vertex_switch(&s).unwrap(), &g);
        let toggled = g.dashing().xor(&h.dashing()).count_ones();
        let crossing = g.edges().iter().filter(|e| s.contains(&e.u) != s.contains(&e.v)).count();
        prop_assert_eq!(toggled, crossing);
    }

    #[test]
    fn matrices_round_trip(g in quotient_graph()) {
        let mats = to_matrices(&g, None).unwrap();
        prop_assert!(verify_clifford(&mats, (0, g.n())).unwrap());
        prop_assert!(mats.iter().all(|m| m.is_symmetric() && m.is_graded(g.parities())));
        let back = from_matrices(&mats, g.parities()).unwrap();
        prop_assert_eq!(back, g.without_labels());
    }

    #[test]
    fn json_round_trip_is_byte_stable(g in quotient_graph()) {
        let text = g.to_json();
        let back = Cliffordinkra::from_json(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn isomorphism_is_an_equivalence(
        g in quotient_graph(),
        bits in any::<(u64, u64, u64, u64)>(),
        seed in any::<u64>(),
    ) {
        prop_assert!(is_isomorphic(&g, &g).unwrap().unwrap().verify(&g, &g));
        let h = g.vertex_switch(&vertex_subset(&g, bits.0, bits.1)).unwrap();
        let order = shuffled_order(&h, seed);
        let h = h.reorder(&order).unwrap();
        let k = h.vertex_switch(&vertex_subset(&h, bits.2, bits.3)).unwrap();
        let gh = is_isomorphic(&g, &h).unwrap().unwrap();
        prop_assert!(gh.verify(&g, &h));
        let hg = is_isomorphic(&h, &g).unwrap().unwrap();
        prop_assert!(hg.verify(&h, &g));
        prop_assert!(gh.inverse().verify(&h, &g));
        let gk = is_isomorphic(&g, &k).unwrap();
        prop_assert!(gk.unwrap().verify(&g, &k));
    }

    #[test]
    fn coboundaries_compose_to_zero(g in quotient_graph()) {
        let cx = build_complex(&g).unwrap();
        let d0 = cx.coboundary(0).unwrap();
        let d1 = cx.coboundary(1).unwrap();
        let d2 = cx.coboundary(2).unwrap();
        prop_assert!(d1.mul(d0).is_zero());
        prop_assert!(d2.mul(d1).is_zero());
        let ones = cliffordinkra::f2::BitVec::ones(cx.cell_counts()[2]);
        prop_assert!(d2.mul_vec(&ones).is_zero());
        prop_assert!(d1.mul_vec(&g.dashing()).count_ones() == cx.cell_counts()[2]);
    }

    #[test]
    fn solver_dashings_validate(g in quotient_graph()) {
        let cx = build_complex(&g).unwrap();
        let mu = cx.solve_totally_odd().unwrap();
        let h = cliffordinkra::cohomology::install_dashing(&g, &mu).unwrap();
        prop_assert!(validate(&h).is_valid());
        let diff = mu.values.xor(&g.dashing());
        prop_assert!(cx.coboundary(1).unwrap().mul_vec(&diff).is_zero());
    }
}

fn shuffled_order(g: &Cliffordinkra, seed: u64) -> Vec<usize> {
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..g.num_vertices()).collect();
    order.shuffle(&mut rng);
    order
}
