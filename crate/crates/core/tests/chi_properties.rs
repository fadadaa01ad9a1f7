use chibound::chi::{
    chi_bounded_coloring, color_bound, compose_in_order, key_lemma_coloring,
    key_lemma_coloring_with, one_join_compose, ChiBoundFn, ChiFunction, ExactColorer,
    GreedyColorer, KeyLemmaOptions,
};
use chibound::gen::{random_connected, random_decomposition, random_jointree, rng};
use chibound::oracles::{
    chromatic_number, clique_number, is_proper, no_max_clique_monochromatic, Coloring,
};
use chibound::{
    decomposition_diversity, decomposition_rank, piece_graph, restrict, Error, Graph, VertexSet,
};
use rand::seq::SliceRandom;
use rand::Rng;

fn max_piece_chi(g: &Graph, d: &chibound::Decomposition) -> usize {
    (0..d.nodes())
        .map(|v| chromatic_number(&piece_graph(g, d, v).unwrap()).unwrap().0)
        .max()
        .unwrap()
        .max(1)
}

#[test]
fn key_lemma_meets_its_guarantees_on_random_inputs() {
    let mut r = rng(300);
    for _ in 0..150 {
        let n = r.gen_range(2..=10);
        let g = random_connected(&mut r, n, 0.3);
        let nodes = r.gen_range(1..=7);
        let d = random_decomposition(&mut r, n, nodes);
        let div = decomposition_diversity(&g, &d).unwrap().max(1);
        let k = max_piece_chi(&g, &d);
        let opts = KeyLemmaOptions {
            check_invariants: true,
        };
        let run = key_lemma_coloring_with(&g, &d, &ExactColorer::default(), div, k, &opts).unwrap();
        assert!(run.coloring.palette_size() <= div * (k + 1));
        assert!(no_max_clique_monochromatic(&g, &run.coloring).unwrap());
        // every color class loses the clique number
        let omega = clique_number(&g).unwrap();
        for class in run.coloring.classes() {
            let s = VertexSet::from_iter(n, class);
            let (h, _, _) = restrict(&g, &d, &s).unwrap();
            assert!(h.n() == 0 || clique_number(&h).unwrap() < omega);
        }
    }
}

#[test]
fn key_lemma_reports_contract_violations() {
    let g = chibound::graph::cycle(5);
    let d = chibound::star_decomposition(&g);
    // pieces of a star contain C5 at the center, which needs three colors
    assert!(matches!(
        key_lemma_coloring(&g, &d, &ExactColorer::default(), 2, 2),
        Err(Error::OracleBudget { .. })
    ));
    let improper = |h: &Graph| Ok(Coloring::constant(h.n()));
    assert!(matches!(
        key_lemma_coloring(&g, &d, &improper, 2, 3),
        Err(Error::OracleImproper { .. })
    ));
    // the five leaf cuts each have two distinct rows
    assert!(matches!(
        key_lemma_coloring(&g, &d, &ExactColorer::default(), 1, 3),
        Err(Error::DiversityExceeded {
            actual: 2,
            allowed: 1
        })
    ));
}

#[test]
fn chi_bounded_coloring_is_proper_and_within_the_bound() {
    let mut r = rng(301);
    for _ in 0..100 {
        let n = r.gen_range(1..=10);
        let g = random_connected(&mut r, n, 0.4);
        let nodes = r.gen_range(1..=6);
        let d = random_decomposition(&mut r, n, nodes);
        let rank = decomposition_rank(&g, &d).unwrap();
        // f(s) = max piece chi over the whole run is a valid constant budget:
        // restricted pieces are induced subgraphs of the original pieces
        let k = max_piece_chi(&g, &d);
        let bound = ChiBoundFn::constant(k, rank).unwrap();
        let c = chi_bounded_coloring(&g, &d, &ExactColorer::default(), &bound).unwrap();
        assert!(is_proper(&g, &c).unwrap());
        let omega = clique_number(&g).unwrap().max(1);
        assert!(c.palette_size() <= color_bound(&bound, omega).unwrap());
    }
}

#[test]
fn greedy_pieces_work_when_the_budget_allows() {
    let g = chibound::graph::complete_bipartite(3, 4);
    let d = chibound::star_decomposition(&g);
    let bound = ChiBoundFn::new(ChiFunction::Table(vec![1, 2]), 1).unwrap();
    let c = chi_bounded_coloring(&g, &d, &GreedyColorer, &bound).unwrap();
    assert!(is_proper(&g, &c).unwrap());
    assert!(c.palette_size() <= 6);
}

#[test]
fn join_trees_compose_to_rank_one_independent_of_order() {
    let mut r = rng(302);
    for _ in 0..200 {
        let jt = random_jointree(&mut r, 5, 6, 0.5);
        let (g, d) = one_join_compose(&jt).unwrap();
        assert!(decomposition_rank(&g, &d).unwrap() <= 1);
        assert_eq!(g.n(), jt.survivors().len());
        let mut order: Vec<usize> = (0..jt.joins().len()).collect();
        for _ in 0..2 {
            order.shuffle(&mut r);
            assert_eq!(compose_in_order(&jt, &order).unwrap(), g);
        }
    }
}
