//! Random inputs shared by the integration tests.
#![allow(dead_code)]

use bicomlab_core::bicom::{enumerate_basis, multilinear};
use bicomlab_core::consequences::var_names;
use bicomlab_core::operators::metabelian_tree;
use bicomlab_core::rational::frac;
use bicomlab_core::{BasisWord, BicomElement, Generator, Multidegree, Rational, Tree};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn gens(names: &[&str]) -> Vec<Generator> {
    names.iter().map(|n| Generator::new(n).unwrap()).collect()
}

pub fn random_coeff(rng: &mut impl Rng) -> Rational {
    let mut p = 0;
    while p == 0 {
        p = rng.gen_range(-6i64..=6);
    }
    frac(p, rng.gen_range(1i64..=4))
}

/// A uniformly shaped basis word of the given degree over `pool`.
pub fn random_word(rng: &mut impl Rng, pool: &[Generator], degree: usize) -> BasisWord {
    let letters: Vec<Generator> = (0..degree).map(|_| pool.choose(rng).unwrap().clone()).collect();
    if degree == 1 {
        return BasisWord::Gen(letters[0].clone());
    }
    let k = rng.gen_range(1..degree);
    BasisWord::pair(letters[..k].to_vec(), letters[k..].to_vec())
}

/// Up to `terms` random words of degree `1..=max_degree`.
pub fn random_element(rng: &mut impl Rng, pool: &[Generator], max_degree: usize, terms: usize) -> BicomElement {
    let mut e = BicomElement::zero();
    for _ in 0..rng.gen_range(1..=terms) {
        let d = rng.gen_range(1..=max_degree);
        e.add_term(random_word(rng, pool, d), random_coeff(rng));
    }
    e
}

/// A random element of one multidegree.
pub fn random_homogeneous(rng: &mut impl Rng, md: &Multidegree, terms: usize) -> BicomElement {
    let basis = enumerate_basis(md).unwrap();
    let mut e = BicomElement::zero();
    for _ in 0..terms {
        e.add_term(basis.choose(rng).unwrap().clone(), random_coeff(rng));
    }
    e
}

/// A random multidegree over `a, b, c` of total degree `total`.
pub fn random_multidegree(rng: &mut impl Rng, total: usize) -> Multidegree {
    let pool = gens(&["a", "b", "c"]);
    let mut md = Multidegree::new();
    for _ in 0..total {
        *md.entry(pool.choose(rng).unwrap().clone()).or_insert(0) += 1;
    }
    md
}

/// `sum lambda_i [[..[[x1,xi],x2]..],xn]` with random coefficients, some
/// of them zero, together with the coefficients.
pub fn random_lie(rng: &mut impl Rng, n: usize) -> (Vec<Rational>, BicomElement) {
    let vars = var_names(n);
    let mut lambdas = Vec::new();
    let mut f = BicomElement::zero();
    for i in 1..n {
        let l = if rng.gen_bool(0.2) { Rational::from_integer(0.into()) } else { random_coeff(rng) };
        f = &f + &metabelian_tree(&vars, i).expand().scale(&l);
        lambdas.push(l);
    }
    (lambdas, f)
}

/// A multilinear word that is not fixed by the involution.
pub fn random_asymmetric_word(rng: &mut impl Rng, n: usize) -> BasisWord {
    let basis = enumerate_basis(&multilinear(&var_names(n))).unwrap();
    basis.choose(rng).unwrap().clone()
}

/// A random nonassociative word with the given leaves in random order.
pub fn random_tree<L: Clone>(rng: &mut impl Rng, leaves: &[L]) -> Tree<L> {
    if leaves.len() == 1 {
        return Tree::Leaf(leaves[0].clone());
    }
    let k = rng.gen_range(1..leaves.len());
    Tree::node(random_tree(rng, &leaves[..k]), random_tree(rng, &leaves[k..]))
}
