use linres::graph::{edge_ideal, Graph};
use linres::rees::{
    build_omega, reduced_groebner, toric_ideal_gens, Binomial, OmegaGraph, OrderKind, TermOrder,
    DEFAULT_STEP_BUDGET,
};
use linres::{Monomial, MonomialIdeal};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `P` by elimination: `t_v - pi(t_v)` in `T[z_1..z_{n+1}]`, lex with every
/// `z` above every `t`, keeping the elements free of `z`.
fn toric_by_elimination(o: &OmegaGraph) -> Vec<Binomial> {
    let nv = o.nvars();
    let nz = o.n() + 1;
    let total = nv + nz;
    let gens: Vec<Binomial> = (0..nv)
        .map(|v| {
            let mut z = vec![0u32; total];
            for (k, &e) in o.pi(&Monomial::var(nv, v)).iter().enumerate() {
                z[nv + k] = e;
            }
            Binomial::new(Monomial::var(total, v), Monomial::new(z)).unwrap()
        })
        .collect();
    let mut rank: Vec<usize> = (nv..total).collect();
    rank.extend(0..nv);
    let order = TermOrder::new(OrderKind::Lex, rank).unwrap();
    let gb = reduced_groebner(&gens, &order, DEFAULT_STEP_BUDGET).unwrap();
    gb.into_iter()
        .filter(|g| g.plus().exps()[nv..].iter().all(|&e| e == 0) && g.minus().exps()[nv..].iter().all(|&e| e == 0))
        .map(|g| {
            Binomial::new(
                Monomial::new(g.plus().exps()[..nv].to_vec()),
                Monomial::new(g.minus().exps()[..nv].to_vec()),
            )
            .unwrap()
        })
        .collect()
}

fn with_squares(g: &Graph, squares: &[usize]) -> MonomialIdeal {
    let n = g.n();
    let mut gens: Vec<Monomial> = edge_ideal(g).gens().to_vec();
    gens.extend(squares.iter().map(|&i| Monomial::from_vars(n, &[i - 1, i - 1])));
    linres::ideal::minimal_generators(&gens, n).unwrap()
}

#[test]
fn lattice_route_matches_elimination() {
    let mut checked = 0;
    for n in 1..=4 {
        for g in Graph::all_simple(n) {
            for squares in [vec![], vec![1], vec![1, n]] {
                let i = with_squares(&g, &squares);
                let o = build_omega(&i).unwrap();
                let order = TermOrder::rees_lex(&o);
                let ours = reduced_groebner(&toric_ideal_gens(&o, DEFAULT_STEP_BUDGET).unwrap(), &order, DEFAULT_STEP_BUDGET).unwrap();
                let oracle = reduced_groebner(&toric_by_elimination(&o), &order, DEFAULT_STEP_BUDGET).unwrap();
                assert_eq!(ours, oracle, "{i:?}");
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 3 * (1 + 2 + 8 + 64));
}

#[test]
fn square_of_the_maximal_ideal_has_three_element_basis() {
    let i = with_squares(&Graph::new(2, &[(1, 2)]).unwrap(), &[1, 2]);
    let o = build_omega(&i).unwrap();
    let gb = reduced_groebner(&toric_ideal_gens(&o, DEFAULT_STEP_BUDGET).unwrap(), &TermOrder::rees_lex(&o), DEFAULT_STEP_BUDGET).unwrap();
    let names = o.variable_names();
    let rendered: Vec<String> = gb.iter().map(|g| g.render(&names)).collect();
    // y1_1 > y1_2 > y2_2 > x1 > x2
    assert_eq!(
        rendered,
        vec!["y1_1*y2_2 - y1_2^2", "x2*y1_1 - x1*y1_2", "x2*y1_2 - x1*y2_2"]
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduced_basis_ignores_input_order(mask in 0u64..1 << 10, sq in 0u8..32, seed in any::<u64>()) {
        let pairs: Vec<(usize, usize)> = (1..=5).flat_map(|i| (i + 1..=5).map(move |j| (i, j))).collect();
        let e: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p).collect();
        let squares: Vec<usize> = (1..=5).filter(|v| sq >> (v - 1) & 1 == 1).collect();
        let i = with_squares(&Graph::new(5, &e).unwrap(), &squares);
        let o = build_omega(&i).unwrap();
        let order = TermOrder::rees_lex(&o);
        let p = toric_ideal_gens(&o, DEFAULT_STEP_BUDGET).unwrap();
        let gb = reduced_groebner(&p, &order, DEFAULT_STEP_BUDGET).unwrap();
        for g in &gb {
            prop_assert!(g.in_toric_ideal(&o));
        }
        let mut shuffled: Vec<Binomial> = p.iter().map(|g| if seed % 2 == 0 { g.clone() } else { g.negate() }).collect();
        shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(reduced_groebner(&shuffled, &order, DEFAULT_STEP_BUDGET).unwrap(), gb);
    }
}
