mod common;

use bicomlab_core::bicom::{enumerate_basis, multilinear};
use bicomlab_core::consequences::var_names;
use bicomlab_core::magma::eval_tree;
use bicomlab_core::operators::{
    commutator, dynkin, head, is_jordan, is_lie, jordan_express, left_normed, lie_expansion_rhs, lie_express,
    BracketOp,
};
use bicomlab_core::rational::int;
use bicomlab_core::{BicomElement, FiniteAlgebra, MagmaPoly, Product, Tree};
use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Expands every node into plain products by hand: `[u,v] -> uv - vu`,
/// `{u,v} -> uv + vu`, as magma polynomials.
fn formal_expand(t: &Tree<bicomlab_core::Generator>, product: Product) -> MagmaPoly {
    match t {
        Tree::Leaf(_) => MagmaPoly::monomial(int(1), t.clone()),
        Tree::Node(l, r) => {
            let (a, b) = (formal_expand(l, product), formal_expand(r, product));
            let mut out = a.product(&b);
            let sign = match product {
                Product::Plain => return out,
                Product::Com => int(-1),
                Product::Anti => int(1),
            };
            out.add_scaled(&b.product(&a), &sign);
            out
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn defining_identities_hold(seed in any::<u64>()) {
        let mut r = rng(seed);
        let pool = gens(&["a", "b", "c", "d"]);
        let a = random_element(&mut r, &pool, 4, 3);
        let b = random_element(&mut r, &pool, 4, 3);
        let c = random_element(&mut r, &pool, 4, 3);
        prop_assert_eq!(a.multiply(&b.multiply(&c)), b.multiply(&a.multiply(&c)));
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&c).multiply(&b));
    }

    #[test]
    fn involution_is_an_anti_automorphism(seed in any::<u64>()) {
        let mut r = rng(seed);
        let pool = gens(&["x", "y", "z"]);
        let f = random_element(&mut r, &pool, 4, 4);
        let g = random_element(&mut r, &pool, 4, 4);
        prop_assert_eq!(f.involute().involute(), f.clone());
        prop_assert_eq!(f.multiply(&g).involute(), g.involute().multiply(&f.involute()));
    }

    #[test]
    fn involution_is_multiplicative_in_degree_two_and_up(seed in any::<u64>()) {
        let mut r = rng(seed);
        let md1 = { let k = r.gen_range(2..=3); random_multidegree(&mut r, k) };
        let md2 = { let k = r.gen_range(2..=3); random_multidegree(&mut r, k) };
        let f = random_homogeneous(&mut r, &md1, 3);
        let g = random_homogeneous(&mut r, &md2, 3);
        prop_assert_eq!(f.multiply(&g).involute(), f.involute().multiply(&g.involute()));
    }

    #[test]
    fn commutators_are_metabelian_lie(seed in any::<u64>()) {
        let mut r = rng(seed);
        let pool = gens(&["x", "y", "z"]);
        let e: Vec<BicomElement> = (0..4).map(|_| random_element(&mut r, &pool, 3, 3)).collect();
        let (a, b, c, d) = (&e[0], &e[1], &e[2], &e[3]);
        let jacobi = &(&commutator(&commutator(a, b), c) + &commutator(&commutator(b, c), a))
            + &commutator(&commutator(c, a), b);
        prop_assert!(jacobi.is_zero());
        prop_assert!(commutator(&commutator(a, b), &commutator(c, d)).is_zero());
    }

    #[test]
    fn dynkin_of_head_recovers_lie_elements(seed in any::<u64>(), n in 2usize..=6) {
        let (lambdas, f) = random_lie(&mut rng(seed), n);
        prop_assert_eq!(dynkin(&head(&f).unwrap()), f.clone());
        prop_assert!(is_lie(&f).unwrap());
        let e = lie_express(&f).unwrap();
        prop_assert_eq!(e.expand(), f.clone());
        prop_assert!(e.len() <= lambdas.iter().filter(|l| **l != int(0)).count());
    }

    #[test]
    fn jordan_is_symmetric_and_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let md = { let k = r.gen_range(1..=5); random_multidegree(&mut r, k) };
        let f = random_homogeneous(&mut r, &md, 4);
        prop_assert_eq!(is_jordan(&f), f.involute() == f);
        let sym = f.plus_part();
        prop_assert!(is_jordan(&sym));
        prop_assert_eq!(jordan_express(&sym).unwrap().expand(), sym);
    }

    #[test]
    fn derived_products_agree_with_formal_expansion(seed in any::<u64>(), n in 1usize..=4) {
        let mut r = rng(seed);
        let vars = var_names(n);
        let t = random_tree(&mut r, &vars);
        for product in [Product::Plain, Product::Com, Product::Anti] {
            let direct = MagmaPoly::monomial(int(1), t.clone()).eval_symbolic(product);
            let formal = formal_expand(&t, product).eval_symbolic(Product::Plain);
            prop_assert_eq!(direct, formal);
        }
    }

    #[test]
    fn finite_check_matches_exhaustive_sampling(seed in any::<u64>()) {
        let mut r = rng(seed);
        let alg = FiniteAlgebra::martin_a();
        let vars = var_names(3);
        let mut p = MagmaPoly::zero();
        for _ in 0..3 {
            let mut order = vars.clone();
            rand::seq::SliceRandom::shuffle(order.as_mut_slice(), &mut r);
            p.add_term(random_tree(&mut r, &order), int(r.gen_range(-2..=2)));
        }
        if p.is_zero() || !p.is_multilinear() {
            return Ok(());
        }
        let check = p.holds_in_finite(&alg).unwrap();
        // random rational points: a failing identity shows up almost surely
        let mut sampled = true;
        for _ in 0..20 {
            let sigma = vars
                .iter()
                .map(|g| (g.clone(), (0..4).map(|_| int(r.gen_range(-3..=3))).collect()))
                .collect();
            if p.eval_finite(&alg, &sigma).unwrap().iter().any(|x| *x != int(0)) {
                sampled = false;
            }
        }
        prop_assert!(sampled || !check.holds);
        if let Some(w) = &check.witness {
            let sigma = w.assignment.iter().map(|(g, i)| (g.clone(), alg.basis_vector(*i))).collect();
            prop_assert_eq!(p.eval_finite(&alg, &sigma).unwrap(), w.value.clone());
        }
    }
}

#[test]
fn multilinear_counts() {
    for n in 2..=7 {
        let md = multilinear(&var_names(n));
        assert_eq!(enumerate_basis(&md).unwrap().len(), (1 << n) - 2);
    }
}

#[test]
fn left_normed_matches_closed_form() {
    for n in 2..=7 {
        let vars = var_names(n);
        assert_eq!(
            left_normed(BracketOp::Com, &vars).unwrap(),
            lie_expansion_rhs(&vars).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn symbolic_identities_vanish() {
    for id in bicomlab_core::identities::catalog().into_iter().filter(|i| i.name != "tortken") {
        let p = id.poly();
        let sigma = p.variables().into_iter().map(|g| (g.clone(), BicomElement::gen(g))).collect();
        assert!(p.eval_bicom(id.product, &sigma).unwrap().is_zero(), "{}", id.name);
    }
}

#[test]
fn eval_tree_respects_product() {
    let vars = var_names(2);
    let t = Tree::node(Tree::Leaf(vars[0].clone()), Tree::Leaf(vars[1].clone()));
    let anti = eval_tree(&t, Product::Anti, &mut |g| Ok(BicomElement::gen(g.clone()))).unwrap();
    assert!(is_jordan(&anti));
}
