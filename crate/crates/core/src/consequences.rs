//! Multilinear T-ideals: consequence spans, evaluation kernels, and the
//! verifiers that compare them.
//!
//! Coordinates are indexed by the multilinear magma words on `x1..xn`
//! (`n! * Catalan(n-1)` of them, 30240 at `n = 6`). Dense matrices of that
//! width are out of reach, so generators are split in two:
//!
//! * monomials and binomials `u = ±v` act as rewrite rules; a signed
//!   union-find over all words computes their T-ideal exactly and leaves a
//!   quotient with one coordinate per surviving class;
//! * every other generator is closed up degree by degree inside that
//!   quotient with an incremental sparse echelon form.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use indexmap::IndexMap;
use num_traits::Zero;

use crate::bicom::{BasisWord, BicomElement, Generator};
use crate::error::{Error, Result};
use crate::exactlin::{RationalMatrix, RowEchelon, SparseVec};
use crate::identities;
use crate::magma::{eval_tree, FiniteAlgebra, MagmaPoly, Product};
use crate::operators::{metabelian_tree, BracketOp, BracketTree};
use crate::parse::{parse_element, parse_identity};
use crate::rational::{frac, int, Rational};
use crate::tree::{arrangements, bicommutative_rules, Rule, Tree};

/// Largest degree the multilinear machinery accepts.
pub const MAX_DEGREE: usize = 7;

type Word = Tree<u8>;

/// `x1, .., xn`.
pub fn var_names(n: usize) -> Vec<Generator> {
    (1..=n).map(|i| Generator::new(&format!("x{i}")).expect("valid name")).collect()
}

fn check_degree(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange {
            degree: n,
            min,
            max: MAX_DEGREE,
        });
    }
    Ok(())
}

/// All multilinear magma words of degree `n` on leaves `0..n`.
pub struct MultilinearSpace {
    n: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl MultilinearSpace {
    pub fn new(n: usize) -> Result<Self> {
        check_degree(n, 1)?;
        let leaves: Vec<u8> = (0..n as u8).collect();
        let perms = arrangements(&leaves);
        let mut words = Vec::new();
        for shape in Tree::shapes(n) {
            for p in &perms {
                words.push(shape.fill(p));
            }
        }
        let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Ok(MultilinearSpace { n, words, index })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Tree<u8>] {
        &self.words
    }

    pub fn index_of(&self, w: &Tree<u8>) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Coordinates of a multilinear polynomial in exactly `n` variables; its
    /// variables, sorted, become leaves `0..n`.
    pub fn coordinates(&self, p: &MagmaPoly) -> Result<SparseVec> {
        let labelled = label_poly(p)?;
        if !p.is_zero() && labelled.arity != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: labelled.arity,
            });
        }
        let mut acc = BTreeMap::new();
        for (w, c) in labelled.terms {
            let i = self.index[&w.map_leaves(&mut |&v| v as u8)];
            *acc.entry(i).or_insert_with(Rational::zero) += c;
        }
        Ok(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }
}

/// A multilinear polynomial with variables renamed to `0..arity`.
struct Labelled {
    arity: usize,
    terms: Vec<(Tree<usize>, Rational)>,
}

fn label_poly(p: &MagmaPoly) -> Result<Labelled> {
    if !p.is_multilinear() {
        return Err(Error::GeneratorNotMultilinear(p.to_string()));
    }
    let vars: Vec<Generator> = p.variables().into_iter().collect();
    let pos: HashMap<&Generator, usize> = vars.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let terms = p.terms().map(|(w, c)| (w.map_leaves(&mut |g| pos[g]), c.clone())).collect();
    Ok(Labelled {
        arity: vars.len(),
        terms,
    })
}

/// A generator usable as a rewrite: `lhs = sign * rhs`, or `lhs = 0` when
/// `sign` is zero.
struct Structural {
    rule: Rule,
    sign: i8,
}

fn as_structural(p: &Labelled) -> Option<Structural> {
    match p.terms.as_slice() {
        [(w, _)] => Some(Structural {
            rule: Rule::new(w.clone(), w.clone()),
            sign: 0,
        }),
        [(u, a), (v, b)] => {
            let ratio = b / a;
            let sign = if ratio == int(1) {
                -1
            } else if ratio == int(-1) {
                1
            } else {
                return None;
            };
            Some(Structural {
                rule: Rule::new(u.clone(), v.clone()),
                sign,
            })
        }
        _ => None,
    }
}

/// Quotient of a multilinear space by the T-ideal of structural generators.
/// Each word is zero or `±` the representative of a class.
pub struct Quotient {
    space: MultilinearSpace,
    class_of: Vec<Option<(usize, i8)>>,
    reps: Vec<usize>,
}

struct SignedUnionFind {
    parent: Vec<usize>,
    sign: Vec<i8>,
    dead: Vec<bool>,
}

impl SignedUnionFind {
    fn new(n: usize) -> Self {
        SignedUnionFind {
            parent: (0..n).collect(),
            sign: vec![1; n],
            dead: vec![false; n],
        }
    }

    /// `(root, s)` with `value(i) = s * value(root)`.
    fn find(&mut self, i: usize) -> (usize, i8) {
        let mut path = Vec::new();
        let mut cur = i;
        while self.parent[cur] != cur {
            path.push(cur);
            cur = self.parent[cur];
        }
        let root = cur;
        // compress from the top so each node's sign is relative to the root
        for &node in path.iter().rev() {
            let p = self.parent[node];
            if p != root {
                self.sign[node] *= self.sign[p];
            }
            self.parent[node] = root;
        }
        (root, if i == root { 1 } else { self.sign[i] })
    }

    /// Records `value(a) = s * value(b)`.
    fn union(&mut self, a: usize, b: usize, s: i8) {
        let (ra, sa) = self.find(a);
        let (rb, sb) = self.find(b);
        let rel = sa * s * sb;
        if ra == rb {
            if rel == -1 {
                self.dead[ra] = true;
            }
            return;
        }
        self.parent[ra] = rb;
        self.sign[ra] = rel;
        if self.dead[ra] {
            self.dead[rb] = true;
        }
    }

    fn kill(&mut self, a: usize) {
        let (r, _) = self.find(a);
        self.dead[r] = true;
    }
}

impl Quotient {
    fn build(space: MultilinearSpace, rules: &[Structural]) -> Self {
        let mut uf = SignedUnionFind::new(space.dim());
        for (i, w) in space.words.iter().enumerate() {
            for r in rules {
                if r.rule.lhs().degree() > space.n {
                    continue;
                }
                if r.sign == 0 {
                    if r.rule.matches_anywhere(w) {
                        uf.kill(i);
                    }
                } else {
                    for t in r.rule.rewrites(w) {
                        uf.union(i, space.index[&t], r.sign);
                    }
                }
            }
        }
        let mut class_of = vec![None; space.dim()];
        let mut reps = Vec::new();
        let mut root_class: HashMap<usize, (usize, i8)> = HashMap::new();
        for (i, slot) in class_of.iter_mut().enumerate() {
            let (root, s) = uf.find(i);
            if uf.dead[root] {
                continue;
            }
            let (c, s_rep) = *root_class.entry(root).or_insert_with(|| {
                reps.push(i);
                (reps.len() - 1, s)
            });
            *slot = Some((c, s * s_rep));
        }
        Quotient { space, class_of, reps }
    }

    pub fn space(&self) -> &MultilinearSpace {
        &self.space
    }

    /// Number of surviving classes.
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Dimension of the structural part of the T-ideal.
    pub fn relations_dim(&self) -> usize {
        self.space.dim() - self.dim()
    }

    pub fn representative(&self, class: usize) -> &Tree<u8> {
        &self.space.words[self.reps[class]]
    }

    /// `Some((class, sign))` with `word = sign * rep(class)`, or `None` if
    /// the word vanishes.
    pub fn class_of(&self, w: &Tree<u8>) -> Option<(usize, i8)> {
        self.class_of[self.space.index[w]]
    }

    fn project_words<'a>(&self, terms: impl IntoIterator<Item = (&'a Word, Rational)>) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (w, c) in terms {
            if let Some((k, s)) = self.class_of(w) {
                let e = acc.entry(k).or_insert_with(Rational::zero);
                if s > 0 {
                    *e += c;
                } else {
                    *e -= c;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Image of a multilinear polynomial in `n` variables.
    pub fn project(&self, p: &MagmaPoly) -> Result<SparseVec> {
        let coords = self.space.coordinates(p)?;
        Ok(self.project_words(coords.iter().map(|(i, c)| (&self.space.words[*i], c.clone()))))
    }

    fn lift(&self, v: &SparseVec) -> Vec<(Word, Rational)> {
        v.iter().map(|(k, c)| (self.representative(*k).clone(), c.clone())).collect()
    }
}

fn quotient_rules(gens: &[Labelled]) -> Vec<Structural> {
    gens.iter().filter_map(as_structural).collect()
}

fn rules_for_product(product: Product) -> Vec<Structural> {
    let v = |i| Tree::Leaf(i);
    let swap = || Rule::new(Tree::node(v(0), v(1)), Tree::node(v(1), v(0)));
    match product {
        Product::Plain => bicommutative_rules()
            .into_iter()
            .map(|rule| Structural { rule, sign: 1 })
            .collect(),
        Product::Com => vec![Structural { rule: swap(), sign: -1 }],
        Product::Anti => vec![Structural { rule: swap(), sign: 1 }],
    }
}

/// Span of all multilinear consequences of degree `n`.
pub struct ConsequenceSpan {
    quotient: Quotient,
    span: RowEchelon,
}

impl ConsequenceSpan {
    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    /// Basis of the non-structural part, in quotient coordinates.
    pub fn rows(&self) -> &[SparseVec] {
        self.span.rows()
    }

    pub fn magma_dim(&self) -> usize {
        self.quotient.space.dim()
    }

    pub fn dim(&self) -> usize {
        self.quotient.relations_dim() + self.span.rank()
    }

    pub fn codim(&self) -> usize {
        self.magma_dim() - self.dim()
    }

    pub fn contains(&self, p: &MagmaPoly) -> Result<bool> {
        Ok(self.span.contains(&self.quotient.project(p)?))
    }
}

fn permute(w: &Word, perm: &[u8]) -> Word {
    w.map_leaves(&mut |&i| perm[i as usize])
}

/// The one-step enlargements of a degree-`m` word that introduce leaf `m`.
fn enlargements(w: &Word, m: u8) -> Vec<Word> {
    let fresh = Tree::Leaf(m);
    let mut out = vec![
        Tree::node(w.clone(), fresh.clone()),
        Tree::node(fresh.clone(), w.clone()),
    ];
    for i in 0..m {
        for right in [true, false] {
            out.push(w.graft(&mut |&l| {
                if l != i {
                    Tree::Leaf(l)
                } else if right {
                    Tree::node(Tree::Leaf(l), Tree::Leaf(m))
                } else {
                    Tree::node(Tree::Leaf(m), Tree::Leaf(l))
                }
            }));
        }
    }
    out
}

/// Multilinear consequences in degree `n` of multilinear generators under
/// permutation, substitution of products for variables, and multiplication
/// by variables.
pub fn consequence_span(generators: &[MagmaPoly], n: usize) -> Result<ConsequenceSpan> {
    check_degree(n, 1)?;
    let labelled: Vec<Labelled> = generators
        .iter()
        .map(label_poly)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|l| !l.terms.is_empty() && l.arity <= n)
        .collect();
    let rules = quotient_rules(&labelled);
    let general: Vec<&Labelled> = labelled.iter().filter(|l| as_structural(l).is_none()).collect();
    let start = general.iter().map(|l| l.arity).min().unwrap_or(n);

    let mut quotient = Quotient::build(MultilinearSpace::new(start)?, &rules);
    let mut span = RowEchelon::new(quotient.dim());
    add_generators(&quotient, &mut span, &general, start);
    for m in start..n {
        let next = Quotient::build(MultilinearSpace::new(m + 1)?, &rules);
        let mut next_span = RowEchelon::new(next.dim());
        let fresh = m as u8;
        // Coset representatives of S_m in S_{m+1}: the span at degree m is
        // already symmetric.
        let mut transversal: Vec<Vec<u8>> = vec![(0..=fresh).collect()];
        for j in 0..fresh {
            let mut p: Vec<u8> = (0..=fresh).collect();
            p.swap(j as usize, fresh as usize);
            transversal.push(p);
        }
        for row in span.rows() {
            let lifted = quotient.lift(row);
            let enlarged: Vec<Vec<(Word, Rational)>> = {
                let per_word: Vec<Vec<Word>> = lifted.iter().map(|(w, _)| enlargements(w, fresh)).collect();
                (0..per_word[0].len())
                    .map(|k| {
                        per_word
                            .iter()
                            .zip(&lifted)
                            .map(|(ws, (_, c))| (ws[k].clone(), c.clone()))
                            .collect()
                    })
                    .collect()
            };
            for combo in &enlarged {
                for tau in &transversal {
                    let moved: Vec<(Word, Rational)> =
                        combo.iter().map(|(w, c)| (permute(w, tau), c.clone())).collect();
                    let v = next.project_words(moved.iter().map(|(w, c)| (w, c.clone())));
                    if !v.is_empty() {
                        next_span.insert(&v);
                    }
                }
            }
        }
        add_generators(&next, &mut next_span, &general, m + 1);
        quotient = next;
        span = next_span;
    }
    Ok(ConsequenceSpan { quotient, span })
}

fn add_generators(q: &Quotient, span: &mut RowEchelon, general: &[&Labelled], degree: usize) {
    let leaves: Vec<u8> = (0..degree as u8).collect();
    for g in general.iter().filter(|g| g.arity == degree) {
        for perm in arrangements(&leaves) {
            let terms: Vec<(Word, Rational)> = g
                .terms
                .iter()
                .map(|(w, c)| (w.map_leaves(&mut |&v| perm[v]), c.clone()))
                .collect();
            let v = q.project_words(terms.iter().map(|(w, c)| (w, c.clone())));
            if !v.is_empty() {
                span.insert(&v);
            }
        }
    }
}

/// Images of the quotient representatives in the free bicommutative algebra
/// under `product`, and whether every word agrees with its class (so the
/// structural relations lie in the kernel).
struct Evaluation {
    images: Vec<SparseVec>,
    consistent: bool,
    image_rank: usize,
}

fn bicom_index(n: usize) -> (Vec<Generator>, HashMap<BasisWord, usize>) {
    let gens = var_names(n);
    let basis = crate::bicom::enumerate_basis(&crate::bicom::multilinear(&gens)).expect("n >= 1");
    let index = basis.into_iter().enumerate().map(|(i, w)| (w, i)).collect();
    (gens, index)
}

fn bicom_coords(e: &BicomElement, index: &HashMap<BasisWord, usize>) -> SparseVec {
    let mut v: SparseVec = e.terms().map(|(w, c)| (index[w], c.clone())).collect();
    v.sort_by_key(|x| x.0);
    v
}

fn evaluate(q: &Quotient, product: Product) -> Evaluation {
    let n = q.space.n;
    let (gens, index) = bicom_index(n);
    let eval = |w: &Word| {
        eval_tree(w, product, &mut |&i| Ok(BicomElement::gen(gens[i as usize].clone()))).expect("leaves are mapped")
    };
    let rep_images: Vec<BicomElement> = q.reps.iter().map(|&r| eval(&q.space.words[r])).collect();
    let mut consistent = true;
    for (i, w) in q.space.words.iter().enumerate() {
        let value = eval(w);
        let ok = match q.class_of[i] {
            None => value.is_zero(),
            Some((c, s)) => value == rep_images[c].scale(&int(s as i64)),
        };
        if !ok {
            consistent = false;
            break;
        }
    }
    let images: Vec<SparseVec> = rep_images.iter().map(|e| bicom_coords(e, &index)).collect();
    let mut ech = RowEchelon::new(index.len());
    for v in &images {
        ech.insert(v);
    }
    Evaluation {
        images,
        consistent,
        image_rank: ech.rank(),
    }
}

fn image_of(eval: &Evaluation, v: &SparseVec) -> BTreeMap<usize, Rational> {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (k, c) in v {
        for (j, x) in &eval.images[*k] {
            *acc.entry(*j).or_insert_with(Rational::zero) += c * x;
        }
    }
    acc.retain(|_, x| !x.is_zero());
    acc
}

/// Kernel of the evaluation map from the degree-`n` multilinear magma space
/// to the free bicommutative algebra.
pub struct EvaluationKernel {
    product: Product,
    quotient: Quotient,
    eval: Evaluation,
}

impl EvaluationKernel {
    pub fn magma_dim(&self) -> usize {
        self.quotient.space.dim()
    }

    pub fn image_rank(&self) -> usize {
        self.eval.image_rank
    }

    pub fn dim(&self) -> usize {
        self.magma_dim() - self.image_rank()
    }

    pub fn product(&self) -> Product {
        self.product
    }

    pub fn contains(&self, p: &MagmaPoly) -> Result<bool> {
        let v = self.quotient.project(p)?;
        Ok(image_of(&self.eval, &v).is_empty())
    }

    /// Explicit basis in quotient coordinates (the structural relations are
    /// implicit). Dense elimination: meant for small degrees.
    pub fn quotient_kernel_basis(&self) -> Vec<Vec<Rational>> {
        let cols = self.quotient.dim();
        let width = self.eval.images.iter().flat_map(|v| v.iter().map(|x| x.0 + 1)).max().unwrap_or(0);
        let mut m = vec![vec![Rational::zero(); cols]; width];
        for (k, v) in self.eval.images.iter().enumerate() {
            for (j, x) in v {
                m[*j][k] = x.clone();
            }
        }
        let matrix = RationalMatrix::from_rows(cols, m).expect("rectangular");
        matrix.kernel()
    }
}

pub fn evaluation_kernel(n: usize, product: Product) -> Result<EvaluationKernel> {
    check_degree(n, 1)?;
    let quotient = Quotient::build(MultilinearSpace::new(n)?, &rules_for_product(product));
    let eval = evaluate(&quotient, product);
    Ok(EvaluationKernel {
        product,
        quotient,
        eval,
    })
}

/// Outcome of a verifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub claim: String,
    pub degree: usize,
    pub pass: bool,
    pub dims: IndexMap<String, usize>,
    pub notes: Vec<String>,
}

impl Report {
    fn new(claim: &str, degree: usize) -> Self {
        Report {
            claim: claim.into(),
            degree,
            pass: true,
            dims: IndexMap::new(),
            notes: Vec::new(),
        }
    }

    fn dim(&mut self, key: &str, value: usize) {
        self.dims.insert(key.into(), value);
    }

    /// Records a sub-check; any failure fails the report.
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.notes.push(format!("failed: {}", what.into()));
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "claim": self.claim,
            "degree": self.degree,
            "pass": self.pass,
            "dims": self.dims,
        });
        if !self.notes.is_empty() {
            v["notes"] = serde_json::json!(self.notes);
        }
        v
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={}: {}",
            self.claim,
            self.degree,
            if self.pass { "PASS" } else { "FAIL" }
        )?;
        if !self.dims.is_empty() {
            let dims: Vec<String> = self.dims.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, " ({})", dims.join(" "))?;
        }
        for note in &self.notes {
            write!(f, "\n  {note}")?;
        }
        Ok(())
    }
}

/// Compares the consequences of `generators` with the evaluation kernel of
/// `product` in degree `n`.
pub fn verify_identities(
    claim: &str,
    generators: &[MagmaPoly],
    product: Product,
    n: usize,
    expected_rank: usize,
) -> Result<Report> {
    let cs = consequence_span(generators, n)?;
    let eval = evaluate(&cs.quotient, product);
    let mut r = Report::new(claim, n);
    let kernel = cs.magma_dim() - eval.image_rank;
    r.dim("magma", cs.magma_dim());
    r.dim("kernel", kernel);
    r.dim("consequences", cs.dim());
    r.dim("image_rank", eval.image_rank);
    r.check(eval.consistent, "structural relations vanish under evaluation");
    let sound = cs.span.rows().iter().all(|v| image_of(&eval, v).is_empty());
    r.check(sound, "consequences lie in the kernel");
    r.check(cs.dim() == kernel, "consequence span has the kernel's dimension");
    r.check(eval.image_rank == expected_rank, format!("image rank {expected_rank}"));
    Ok(r)
}

/// Identities of the commutator product follow from anticommutativity,
/// Jacobi and the metabelian identity.
pub fn verify_theorem1(n: usize) -> Result<Report> {
    check_degree(n, 2)?;
    verify_identities("theorem1", &identities::lie_generators(), Product::Com, n, n - 1)
}

/// Identities of the anti-commutator product follow from commutativity,
/// minus-Tortken and weak right-commutativity.
pub fn verify_theorem2(n: usize) -> Result<Report> {
    check_degree(n, 2)?;
    verify_identities(
        "theorem2",
        &identities::jordan_generators(),
        Product::Anti,
        n,
        (1 << (n - 1)) - 1,
    )
}

/// Rank of a family of elements.
pub fn element_rank(elements: &[BicomElement]) -> usize {
    let words: BTreeSet<&BasisWord> = elements.iter().flat_map(|e| e.terms().map(|(w, _)| w)).collect();
    let index: HashMap<BasisWord, usize> = words.into_iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut ech = RowEchelon::new(index.len());
    for e in elements {
        ech.insert(&bicom_coords(e, &index));
    }
    ech.rank()
}

pub fn metabelian_images(n: usize) -> Vec<BicomElement> {
    let vars = var_names(n);
    (1..n).map(|i| metabelian_tree(&vars, i).expand()).collect()
}

/// `{{..{{s1,s2},{s3,s4}}..,{s(2k-1),s(2k)}},r1},..,r(n-2k)}` for every
/// nonempty even subset `s` of `vars` (kept in order) with complement `r`.
pub fn jordan_spanning_trees(vars: &[Generator]) -> Vec<BracketTree> {
    let n = vars.len();
    let leaf = |g: &Generator| BracketTree::Leaf(g.clone());
    let anti = |a, b| BracketTree::node(BracketOp::Anti, a, b);
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k == 0 || k % 2 == 1 {
            continue;
        }
        let chosen: Vec<&Generator> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| &vars[i]).collect();
        let rest = (0..n).filter(|i| mask & (1 << i) == 0).map(|i| &vars[i]);
        let mut t = anti(leaf(chosen[0]), leaf(chosen[1]));
        for pair in chosen[2..].chunks(2) {
            t = anti(t, anti(leaf(pair[0]), leaf(pair[1])));
        }
        for r in rest {
            t = anti(t, leaf(r));
        }
        out.push(t);
    }
    out
}

pub fn jordan_spanning_images(n: usize) -> Vec<BicomElement> {
    jordan_spanning_trees(&var_names(n)).iter().map(BracketTree::expand).collect()
}

/// The anti-commutator words in `x,y,z,t` whose coefficient system must have
/// full rank in degree four.
pub const DEGREE4_ANTI_WORDS: [&str; 7] = [
    "{{{x,y},z},t}",
    "{{{x,z},y},t}",
    "{{{x,t},y},z}",
    "{{{y,z},x},t}",
    "{{{y,t},x},z}",
    "{{{z,t},x},y}",
    "{{x,y},{z,t}}",
];

/// Expansion of each anti-commutator word above in the plus parts of these
/// monomials: row `i` lists the coefficient of monomial `i` per word.
pub const DEGREE4_ANTI_SYSTEM: [(&str, [i64; 7]); 7] = [
    ("((x*y)*z)*t", [1, 1, 1, 0, 0, 0, 0]),
    ("y*((x*z)*t)", [0, 1, 1, 1, 1, 0, 0]),
    ("z*((x*y)*t)", [1, 0, 1, 1, 0, 1, 2]),
    ("t*((x*y)*z)", [1, 1, 0, 0, 1, 1, 2]),
    ("z*(y*(x*t))", [0, 0, 1, 0, 1, 1, 0]),
    ("t*(y*(x*z))", [0, 1, 0, 1, 0, 1, 0]),
    ("t*(z*(x*y))", [1, 0, 0, 1, 1, 0, 0]),
];

pub const DEGREE4_COM_WORDS: [&str; 3] = ["[[[x,y],z],t]", "[[[x,z],y],t]", "[[[x,t],y],z]"];

/// Same for the commutator words, in minus parts.
pub const DEGREE4_COM_SYSTEM: [(&str, [i64; 3]); 7] = [
    ("((x*y)*z)*t", [1, 1, 1]),
    ("t*((x*y)*z)", [-1, -1, 0]),
    ("z*((x*y)*t)", [-1, 0, -1]),
    ("y*((x*z)*t)", [0, -1, -1]),
    ("t*(z*(x*y))", [1, 0, 0]),
    ("t*(y*(x*z))", [0, 1, 0]),
    ("z*(y*(x*t))", [0, 0, 1]),
];

fn parsed(text: &str) -> BicomElement {
    parse_element(text).expect("built-in expression parses")
}

/// Checks that each word expands as the system says and returns the rank of
/// the system.
fn check_system<const K: usize>(
    words: &[&str; K],
    system: &[(&str, [i64; K]); 7],
    part: fn(&BicomElement) -> BicomElement,
) -> (bool, usize) {
    let mut ok = true;
    for (j, w) in words.iter().enumerate() {
        let mut claimed = BicomElement::zero();
        for (m, coeffs) in system {
            claimed = &claimed + &part(&parsed(m)).scale(&int(coeffs[j]));
        }
        ok &= parsed(w) == claimed;
    }
    let rows: Vec<Vec<Rational>> = system.iter().map(|(_, c)| c.iter().map(|&x| int(x)).collect()).collect();
    let rank = RationalMatrix::from_rows(K, rows).expect("rectangular").rank();
    (ok, rank)
}

/// Degree three has no identities beyond (anti)commutativity and Jacobi, and the
/// degree-four anti-commutator and commutator systems have full rank.
pub fn verify_degree4_independence() -> Result<Report> {
    let mut r = Report::new("degree4", 4);
    let anti: Vec<BicomElement> = DEGREE4_ANTI_WORDS.iter().map(|w| parsed(w)).collect();
    let com: Vec<BicomElement> = DEGREE4_COM_WORDS.iter().map(|w| parsed(w)).collect();
    let anti_rank = element_rank(&anti);
    let com_rank = element_rank(&com);
    r.dim("anti_rank", anti_rank);
    r.dim("com_rank", com_rank);
    r.check(anti_rank == 7, "anti-commutator words have rank 7");
    r.check(com_rank == 3, "commutator words have rank 3");

    let (anti_ok, anti_system) = check_system(&DEGREE4_ANTI_WORDS, &DEGREE4_ANTI_SYSTEM, BicomElement::plus_part);
    let (com_ok, com_system) = check_system(&DEGREE4_COM_WORDS, &DEGREE4_COM_SYSTEM, BicomElement::minus_part);
    r.dim("anti_system_rank", anti_system);
    r.dim("com_system_rank", com_system);
    r.check(anti_ok, "anti-commutator words expand as the coefficient system states");
    r.check(com_ok, "commutator words expand as the coefficient system states");
    r.check(anti_system == 7, "anti-commutator system has rank 7");
    r.check(com_system == 3, "commutator system has rank 3");

    // Jacobi already lives in degree 3, so it belongs to the baseline.
    let lie3 = verify_identities(
        "degree3-com",
        &identities::lie_generators(),
        Product::Com,
        3,
        2,
    )?;
    let jordan3 = verify_identities(
        "degree3-anti",
        &[identities::COMMUTATIVITY.poly()],
        Product::Anti,
        3,
        3,
    )?;
    r.dim("degree3_com_kernel", lie3.dims["kernel"]);
    r.dim("degree3_anti_kernel", jordan3.dims["kernel"]);
    r.check(lie3.pass, "no degree-3 commutator identity beyond anticommutativity and Jacobi");
    r.check(jordan3.pass, "no degree-3 anti-commutator identity beyond commutativity");
    Ok(r)
}

/// The nine words listed as a basis of the degree-four multilinear part of
/// the free commutative algebra with weak right-commutativity.
pub const SECTION7_BASIS: [&str; 9] = [
    "((a*b)*c)*d",
    "((a*c)*b)*d",
    "((a*d)*b)*c",
    "((b*c)*a)*d",
    "((b*d)*a)*c",
    "((c*d)*a)*b",
    "(a*b)*(c*d)",
    "(a*c)*(b*d)",
    "(a*d)*(b*c)",
];

/// Independence of minus-Tortken and weak right-commutativity.
pub fn verify_section7() -> Result<Report> {
    let mut r = Report::new("section7", 4);
    let alg = FiniteAlgebra::martin_a();
    let tortken = identities::MINUS_TORTKEN.poly();
    let weak = identities::WEAK_RIGHT_COMMUTATIVITY.poly();

    let t = tortken.holds_in_finite(&alg)?;
    r.dim("assignments", t.assignments);
    r.check(t.holds && t.assignments == 256, "minus-Tortken holds on all 256 assignments");
    let w = weak.holds_in_finite(&alg)?;
    let want_value = vec![int(0), frac(1, 4), int(0), int(0)];
    let witness_ok = match &w.witness {
        Some(wit) => {
            let idx: Vec<usize> = wit.assignment.iter().map(|(_, i)| *i).collect();
            r.notes.push(format!(
                "weak right-commutativity witness {} -> {}",
                wit.assignment
                    .iter()
                    .map(|(g, i)| format!("{g}={}", alg.basis_names()[*i]))
                    .collect::<Vec<_>>()
                    .join(","),
                alg.format_vector(&wit.value)
            ));
            idx == [0, 0, 0, 1] && wit.value == want_value
        }
        None => false,
    };
    r.check(!w.holds && witness_ok, "weak right-commutativity fails with value e2/4 at (e1,e1,e1,e2)");

    let commutative = parse_identity("a*b = b*a")?;
    let cs = consequence_span(&[commutative, weak.clone()], 4)?;
    let q = cs.quotient();
    r.dim("quotient", cs.codim());
    r.check(cs.codim() == 9, "quotient has dimension 9");
    let mut listed = RowEchelon::new(q.dim());
    for text in SECTION7_BASIS {
        let v = q.project(&parse_identity(text)?)?;
        listed.insert(&cs.span.reduce(&v));
    }
    r.dim("listed_rank", listed.rank());
    r.check(listed.rank() == 9, "listed words span the quotient");
    let tortken_in = cs.contains(&tortken)?;
    r.dim("tortken_image_nonzero", usize::from(!tortken_in));
    r.check(!tortken_in, "minus-Tortken is nonzero in the quotient");
    Ok(r)
}

/// Anti-commutator words of degree `n + 2` are spanned by those of the
/// forms `{u, x}` with `u` of degree `n + 1` and `{u, v}` with `v` of
/// degree 2.
pub fn verify_filtration(n: usize) -> Result<Report> {
    check_degree(n + 2, 3)?;
    let m = n + 2;
    let q = Quotient::build(MultilinearSpace::new(m)?, &rules_for_product(Product::Anti));
    let eval = evaluate(&q, Product::Anti);
    let mut r = Report::new("filtration", n);
    let cols = 1usize << m;
    let mut filtered = RowEchelon::new(cols);
    for (k, rep) in q.reps.iter().enumerate() {
        if let Tree::Node(a, b) = &q.space.words[*rep] {
            let split = [a.degree(), b.degree()];
            if split.contains(&1) || split.contains(&2) {
                filtered.insert(&eval.images[k]);
            }
        }
    }
    r.dim("span_rank", filtered.rank());
    r.dim("full_rank", eval.image_rank);
    r.check(filtered.rank() == eval.image_rank, "filtration pieces span every word");
    r.check(eval.image_rank == (1 << (m - 1)) - 1, "full rank 2^(n+1) - 1");
    Ok(r)
}

/// Lie and Jordan multilinear slices: nested for odd `n`, disjoint (apart
/// from zero) for even `n`.
pub fn verify_corollary(n: usize) -> Result<Report> {
    check_degree(n, 2)?;
    let mut r = Report::new("corollary", n);
    let lie = metabelian_images(n);
    let jordan = jordan_spanning_images(n);
    let lie_rank = element_rank(&lie);
    let jordan_rank = element_rank(&jordan);
    r.dim("lie_rank", lie_rank);
    r.dim("jordan_rank", jordan_rank);
    r.check(lie_rank == n - 1, "Lie slice has dimension n - 1");
    r.check(jordan_rank == (1 << (n - 1)) - 1, "Jordan slice has dimension 2^(n-1) - 1");
    if n % 2 == 1 {
        r.check(lie.iter().all(|f| f.involute() == *f), "metabelian images are symmetric");
    } else {
        r.check(lie.iter().all(|f| f.involute() == -f.clone()), "metabelian images are skew-symmetric");
        let both: Vec<BicomElement> = lie.iter().chain(&jordan).cloned().collect();
        let joint = element_rank(&both);
        r.dim("joint_rank", joint);
        r.check(joint == lie_rank + jordan_rank, "Lie and Jordan slices meet only in zero");
    }
    Ok(r)
}

/// Rewrite-closure ground truth up to total degree `d`: multilinear class
/// counts, class counts over three generators, and agreement of the closed
/// product rule with the closure.
pub fn verify_oracle(d: usize) -> Result<Report> {
    use crate::bicom::{enumerate_basis, multilinear};
    use crate::oracle::Oracle;

    check_degree(d, 1)?;
    let oracle = Oracle::with_bound(d);
    let mut r = Report::new("oracle", d);
    for n in 2..=d {
        let md = multilinear(&var_names(n));
        let classes = oracle.closure_classes(&md)?.len();
        r.check(
            classes == (1 << n) - 2 && classes == enumerate_basis(&md)?.len(),
            format!("multilinear degree {n} has 2^n - 2 classes"),
        );
    }
    let abc: Vec<Generator> = ["a", "b", "c"].iter().map(|s| Generator::new(s).expect("valid")).collect();
    let mut canon: HashMap<Tree<Generator>, BasisWord> = HashMap::new();
    let mut multidegrees = 0;
    let mut words = 0;
    let mut mismatches = 0;
    for total in 1..=d {
        for i in 0..=total {
            for j in 0..=total - i {
                let counts = [i, j, total - i - j];
                let md: BTreeMap<Generator, usize> =
                    abc.iter().cloned().zip(counts).filter(|(_, c)| *c > 0).collect();
                let map = oracle.canonical_map(&md)?;
                let distinct: BTreeSet<&BasisWord> = map.values().collect();
                r.check(
                    distinct.len() == enumerate_basis(&md)?.len(),
                    format!("class count at {md:?}"),
                );
                multidegrees += 1;
                words += map.len();
                for (t, w) in &map {
                    if let Tree::Node(u, v) = t {
                        if canon[&**u].product(&canon[&**v]) != *w {
                            mismatches += 1;
                        }
                    }
                }
                canon.extend(map);
            }
        }
    }
    r.dim("multidegrees", multidegrees);
    r.dim("words", words);
    r.dim("mismatches", mismatches);
    r.check(mismatches == 0, "closed product rule agrees with the closure");
    Ok(r)
}
