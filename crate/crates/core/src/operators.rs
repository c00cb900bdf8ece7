//! Brackets, the Dynkin map, head/tail projections and the Lie and Jordan
//! criteria with constructive re-expression.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::bicom::{BasisWord, BicomElement, Generator};
use crate::error::{Error, Result};
use crate::rational::{self, frac, int, Rational};

/// Which bilinear product a bracket node denotes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum BracketOp {
    /// The bicommutative product itself.
    Plain,
    /// `[a,b] = ab - ba`.
    Com,
    /// `{a,b} = ab + ba`.
    Anti,
}

impl BracketOp {
    pub fn apply(self, f: &BicomElement, g: &BicomElement) -> BicomElement {
        match self {
            BracketOp::Plain => f.multiply(g),
            BracketOp::Com => commutator(f, g),
            BracketOp::Anti => anticommutator(f, g),
        }
    }
}

pub fn commutator(f: &BicomElement, g: &BicomElement) -> BicomElement {
    &f.multiply(g) - &g.multiply(f)
}

pub fn anticommutator(f: &BicomElement, g: &BicomElement) -> BicomElement {
    &f.multiply(g) + &g.multiply(f)
}

/// A bracket monomial over generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum BracketTree {
    Leaf(Generator),
    Node(BracketOp, Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn node(op: BracketOp, l: BracketTree, r: BracketTree) -> Self {
        BracketTree::Node(op, Box::new(l), Box::new(r))
    }

    /// `{l, r}` with the heavier argument first, ties broken by tree order.
    /// The anti-commutator is commutative, so this is a normal form.
    fn anti_sorted(l: BracketTree, r: BracketTree) -> Self {
        let key = |t: &BracketTree| std::cmp::Reverse(t.degree());
        if (key(&l), &l) <= (key(&r), &r) {
            Self::node(BracketOp::Anti, l, r)
        } else {
            Self::node(BracketOp::Anti, r, l)
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            BracketTree::Leaf(_) => 1,
            BracketTree::Node(_, l, r) => l.degree() + r.degree(),
        }
    }

    pub fn expand(&self) -> BicomElement {
        match self {
            BracketTree::Leaf(g) => BicomElement::gen(g.clone()),
            BracketTree::Node(op, l, r) => op.apply(&l.expand(), &r.expand()),
        }
    }

    /// Whether every internal node uses `op`.
    pub fn uses_only(&self, op: BracketOp) -> bool {
        match self {
            BracketTree::Leaf(_) => true,
            BracketTree::Node(o, l, r) => *o == op && l.uses_only(op) && r.uses_only(op),
        }
    }
}

impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTree::Leaf(g) => write!(f, "{g}"),
            BracketTree::Node(BracketOp::Com, l, r) => write!(f, "[{l},{r}]"),
            BracketTree::Node(BracketOp::Anti, l, r) => write!(f, "{{{l},{r}}}"),
            BracketTree::Node(BracketOp::Plain, l, r) => write!(f, "({l}*{r})"),
        }
    }
}

/// Rational combination of bracket monomials.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct BracketExpr {
    terms: BTreeMap<BracketTree, Rational>,
}

impl BracketExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coeff: Rational, t: BracketTree) -> Self {
        let mut e = Self::zero();
        e.add_term(t, coeff);
        e
    }

    pub fn add_term(&mut self, t: BracketTree, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(t).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add_scaled(&mut self, other: &BracketExpr, k: &Rational) {
        for (t, c) in &other.terms {
            self.add_term(t.clone(), c * k);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BracketTree, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn expand(&self) -> BicomElement {
        let mut out = BicomElement::zero();
        for (t, c) in &self.terms {
            for (w, k) in t.expand().terms() {
                out.add_term(w.clone(), k * c);
            }
        }
        out
    }

    /// Bilinear anti-commutator of two expressions.
    fn anti(&self, other: &BracketExpr) -> BracketExpr {
        let mut out = BracketExpr::zero();
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                out.add_term(BracketTree::anti_sorted(s.clone(), t.clone()), a * b);
            }
        }
        out
    }

    pub fn uses_only(&self, op: BracketOp) -> bool {
        self.terms.keys().all(|t| t.uses_only(op))
    }
}

impl fmt::Display for BracketExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (t, c)) in self.terms.iter().enumerate() {
            rational::write_term(&mut out, c, &t.to_string(), i == 0);
        }
        f.write_str(&out)
    }
}

/// `((v1 o v2) o v3) .. o vn` as a bracket tree.
pub fn left_normed_tree(op: BracketOp, vars: &[Generator]) -> Result<BracketTree> {
    if vars.len() < 2 {
        return Err(Error::TooFewVariables(vars.len()));
    }
    let mut t = BracketTree::Leaf(vars[0].clone());
    for v in &vars[1..] {
        t = BracketTree::node(op, t, BracketTree::Leaf(v.clone()));
    }
    Ok(t)
}

pub fn left_normed(op: BracketOp, vars: &[Generator]) -> Result<BicomElement> {
    Ok(left_normed_tree(op, vars)?.expand())
}

fn check_distinct(vars: &[Generator]) -> Result<()> {
    let mut sorted = vars.to_vec();
    sorted.sort();
    match sorted.windows(2).find(|p| p[0] == p[1]) {
        Some(p) => Err(Error::RepeatedVariable(p[0].to_string())),
        None => Ok(()),
    }
}

/// Closed form of the left-normed commutator `[[..[a1,a2],..],an]`: an
/// alternating sum over hook words, taking plus parts for odd `n` and minus
/// parts for even `n`.
pub fn lie_expansion_rhs(vars: &[Generator]) -> Result<BicomElement> {
    if vars.len() < 2 {
        return Err(Error::TooFewVariables(vars.len()));
    }
    check_distinct(vars)?;
    let n = vars.len();
    let rest = &vars[2..];
    let mut out = BicomElement::zero();
    for mask in 0u32..(1 << rest.len()) {
        let mut col = vec![vars[0].clone()];
        let mut row = vec![vars[1].clone()];
        for (i, v) in rest.iter().enumerate() {
            if mask & (1 << i) != 0 {
                col.push(v.clone());
            } else {
                row.push(v.clone());
            }
        }
        let e = BicomElement::word(BasisWord::pair(col, row));
        let part = if n % 2 == 1 { e.plus_part() } else { e.minus_part() };
        let sign = if mask.count_ones() % 2 == 0 { int(1) } else { int(-1) };
        out = &out + &part.scale(&sign);
    }
    Ok(out)
}

fn dynkin_word(w: &BasisWord) -> BicomElement {
    match w {
        BasisWord::Gen(g) => BicomElement::gen(g.clone()),
        BasisWord::Pair(y) => {
            let gen = |g: &Generator| BicomElement::gen(g.clone());
            let mut t = gen(&y.col()[0]);
            for b in y.row() {
                t = commutator(&t, &gen(b));
            }
            for a in &y.col()[1..] {
                t = commutator(&gen(a), &t);
            }
            t.scale(&frac(1, 2))
        }
    }
}

/// Dynkin map: `Y[a1..ak | b1..bl]` goes to
/// `1/2 [ak,[..[a2,[[..[a1,b1]..],bl]]..]]`; generators are fixed.
pub fn dynkin(f: &BicomElement) -> BicomElement {
    let mut out = BicomElement::zero();
    for (w, c) in f.terms() {
        for (v, k) in dynkin_word(w).terms() {
            out.add_term(v.clone(), k * c);
        }
    }
    out
}

fn multilinear_vars(f: &BicomElement) -> Result<Vec<Generator>> {
    if !f.is_multilinear() {
        return Err(Error::NotMultilinear);
    }
    Ok(f.multidegree().unwrap_or_default().into_keys().collect())
}

/// Projection onto words where the smallest variable is the first row entry
/// of a one-row diagram or sits in the column of a two-column hook.
pub fn head(f: &BicomElement) -> Result<BicomElement> {
    let vars = multilinear_vars(f)?;
    if vars.len() <= 1 {
        return Ok(f.clone());
    }
    let x1 = &vars[0];
    Ok(f.filter(|w| match w {
        BasisWord::Pair(y) => {
            (y.col().len() == 1 && y.row().contains(x1))
                || (y.row().len() == 1 && y.col().contains(x1))
        }
        BasisWord::Gen(_) => false,
    }))
}

pub fn tail(f: &BicomElement) -> Result<BicomElement> {
    Ok(f - &head(f)?)
}

/// Jordan elements are exactly the `*`-symmetric ones.
pub fn is_jordan(f: &BicomElement) -> bool {
    f.involute() == *f
}

/// Lie elements are exactly the multilinear `f` with `D(head(f)) = f`.
pub fn is_lie(f: &BicomElement) -> Result<bool> {
    Ok(dynkin(&head(f)?) == *f)
}

struct JordanBuilder {
    memo: HashMap<BasisWord, BracketExpr>,
}

impl JordanBuilder {
    fn leaf(g: &Generator) -> BracketExpr {
        BracketExpr::monomial(Rational::one(), BracketTree::Leaf(g.clone()))
    }

    fn anti_leaves(a: &Generator, b: &Generator) -> BracketExpr {
        Self::leaf(a).anti(&Self::leaf(b))
    }

    /// Anti-commutator expression of `w + w*`.
    fn plus(&mut self, w: &BasisWord) -> BracketExpr {
        if let Some(e) = self.memo.get(w) {
            return e.clone();
        }
        let e = self.build(w);
        self.memo.insert(w.clone(), e.clone());
        e
    }

    fn build(&mut self, w: &BasisWord) -> BracketExpr {
        let half = frac(1, 2);
        let y = match w {
            BasisWord::Gen(g) => {
                let mut e = BracketExpr::zero();
                e.add_scaled(&Self::leaf(g), &int(2));
                return e;
            }
            BasisWord::Pair(y) => y,
        };
        let (col, row) = (y.col(), y.row());
        if col.len() == 1 && row.len() == 1 {
            return Self::anti_leaves(&col[0], &row[0]);
        }
        if col.len() == 1 {
            let a1 = &col[0];
            let n = row.len() + 1;
            let (an1, an) = (&row[row.len() - 2], &row[row.len() - 1]);
            if n == 3 {
                // ((a b) c)^+ = 1/2{{a,b},c} + 1/2{{a,c},b} - 1/2{{b,c},a}
                let mut e = BracketExpr::zero();
                e.add_scaled(&Self::anti_leaves(a1, an1).anti(&Self::leaf(an)), &half);
                e.add_scaled(&Self::anti_leaves(a1, an).anti(&Self::leaf(an1)), &half);
                e.add_scaled(&Self::anti_leaves(an1, an).anti(&Self::leaf(a1)), &-half);
                return e;
            }
            let r0 = &row[..row.len() - 2];
            let with = |extra: &Generator| {
                let mut r = r0.to_vec();
                r.push(extra.clone());
                BasisWord::pair(vec![a1.clone()], r)
            };
            let t1 = self.plus(&with(an1)).anti(&Self::leaf(an));
            let t2 = self.plus(&with(an)).anti(&Self::leaf(an1));
            let t3 = self
                .plus(&BasisWord::pair(vec![a1.clone()], r0.to_vec()))
                .anti(&Self::anti_leaves(an1, an));
            let mut e = BracketExpr::zero();
            e.add_scaled(&t1, &half);
            e.add_scaled(&t2, &half);
            e.add_scaled(&t3, &frac(-1, 4));
            return e;
        }
        // hook: peel the largest column entry
        let an = &col[col.len() - 1];
        let shorter = col[..col.len() - 1].to_vec();
        let mut longer_row = row.to_vec();
        longer_row.push(an.clone());
        let t1 = self
            .plus(&BasisWord::pair(shorter.clone(), row.to_vec()))
            .anti(&Self::leaf(an));
        let t2 = self.plus(&BasisWord::pair(shorter, longer_row));
        let mut e = t1;
        e.add_scaled(&t2, &int(-1));
        e
    }
}

/// Writes a symmetric element with anti-commutators only.
pub fn jordan_express(f: &BicomElement) -> Result<BracketExpr> {
    if !is_jordan(f) {
        return Err(Error::NotJordan);
    }
    let mut builder = JordanBuilder {
        memo: HashMap::new(),
    };
    let mut out = BracketExpr::zero();
    for (w, c) in f.terms() {
        let dual = w.involute();
        if *w == dual {
            // w^+ = 2w
            out.add_scaled(&builder.plus(w), &(c * frac(1, 2)));
        } else if *w < dual {
            out.add_scaled(&builder.plus(w), c);
        }
    }
    debug_assert_eq!(out.expand(), *f);
    Ok(out)
}

/// `[[..[[x1, xi], x2], ..], xn]` with the remaining variables ascending.
pub fn metabelian_tree(vars: &[Generator], i: usize) -> BracketTree {
    let mut order = vec![vars[0].clone(), vars[i].clone()];
    order.extend(vars[1..].iter().enumerate().filter(|(j, _)| j + 1 != i).map(|(_, v)| v.clone()));
    left_normed_tree(BracketOp::Com, &order).expect("at least two variables")
}

/// The `n - 1` multilinear metabelian basis brackets on sorted `vars`.
pub fn metabelian_basis(vars: &[Generator]) -> Vec<BracketTree> {
    let mut sorted = vars.to_vec();
    sorted.sort();
    (1..sorted.len()).map(|i| metabelian_tree(&sorted, i)).collect()
}

/// Writes a multilinear Lie element in the metabelian basis, reading the
/// coefficients off the two-column hook words of its head.
pub fn lie_express(f: &BicomElement) -> Result<BracketExpr> {
    let vars = multilinear_vars(f)?;
    let n = vars.len();
    if n <= 1 {
        let mut out = BracketExpr::zero();
        for (w, c) in f.terms() {
            if let BasisWord::Gen(g) = w {
                out.add_term(BracketTree::Leaf(g.clone()), c.clone());
            }
        }
        return Ok(out);
    }
    let sign = if n % 2 == 0 { int(1) } else { int(-1) };
    let mut out = BracketExpr::zero();
    for i in 1..n {
        let col: Vec<Generator> = vars.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v.clone()).collect();
        let hook = BasisWord::pair(col, vec![vars[i].clone()]);
        let lambda = f.coeff(&hook) * &sign;
        out.add_term(metabelian_tree(&vars, i), lambda);
    }
    if out.expand() != *f {
        return Err(Error::NotLie);
    }
    Ok(out)
}
