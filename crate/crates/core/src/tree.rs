//! Binary trees (nonassociative monomials) and one-step pattern rewriting.

use std::fmt;

/// A nonassociative monomial: leaves joined by a single binary product.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree<L> {
    Leaf(L),
    Node(Box<Tree<L>>, Box<Tree<L>>),
}

impl<L> Tree<L> {
    pub fn node(left: Tree<L>, right: Tree<L>) -> Self {
        Tree::Node(Box::new(left), Box::new(right))
    }

    /// Number of leaves.
    pub fn degree(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(l, r) => l.degree() + r.degree(),
        }
    }

    pub fn leaves(&self) -> Vec<&L> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a L>) {
        match self {
            Tree::Leaf(x) => out.push(x),
            Tree::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn map_leaves<M>(&self, f: &mut impl FnMut(&L) -> M) -> Tree<M> {
        match self {
            Tree::Leaf(x) => Tree::Leaf(f(x)),
            Tree::Node(l, r) => Tree::node(l.map_leaves(f), r.map_leaves(f)),
        }
    }

    /// Replaces every leaf by a whole tree.
    pub fn graft<M: Clone>(&self, f: &mut impl FnMut(&L) -> Tree<M>) -> Tree<M> {
        match self {
            Tree::Leaf(x) => f(x),
            Tree::Node(l, r) => Tree::node(l.graft(f), r.graft(f)),
        }
    }

    /// Fills the leaves of `self` (read left to right) from `items`.
    pub fn fill<M: Clone>(&self, items: &[M]) -> Tree<M> {
        let mut i = 0;
        self.map_leaves(&mut |_| {
            i += 1;
            items[i - 1].clone()
        })
    }
}

impl Tree<()> {
    /// Every bracketing with `n` leaves; there are Catalan(n-1) of them.
    pub fn shapes(n: usize) -> Vec<Tree<()>> {
        let mut table: Vec<Vec<Tree<()>>> = vec![Vec::new(), vec![Tree::Leaf(())]];
        for size in 2..=n {
            let mut here = Vec::new();
            for left in 1..size {
                for l in &table[left] {
                    for r in &table[size - left] {
                        here.push(Tree::node(l.clone(), r.clone()));
                    }
                }
            }
            table.push(here);
        }
        if n == 0 {
            Vec::new()
        } else {
            table.swap_remove(n)
        }
    }
}

impl<L: fmt::Display> fmt::Display for Tree<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go<L: fmt::Display>(t: &Tree<L>, top: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match t {
                Tree::Leaf(x) => write!(f, "{x}"),
                Tree::Node(l, r) => {
                    if !top {
                        f.write_str("(")?;
                    }
                    go(l, false, f)?;
                    f.write_str("*")?;
                    go(r, false, f)?;
                    if !top {
                        f.write_str(")")?;
                    }
                    Ok(())
                }
            }
        }
        go(self, true, f)
    }
}

impl<L: fmt::Display> fmt::Debug for Tree<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A monomial rewrite `lhs -> rhs` over pattern variables. Each variable
/// occurs once on each side, so a match binds it to one subtree.
#[derive(Clone, Debug)]
pub struct Rule {
    lhs: Tree<usize>,
    rhs: Tree<usize>,
    arity: usize,
}

impl Rule {
    pub fn new(lhs: Tree<usize>, rhs: Tree<usize>) -> Self {
        let arity = lhs.leaves().into_iter().max().map_or(0, |m| m + 1);
        Rule { lhs, rhs, arity }
    }

    pub fn lhs(&self) -> &Tree<usize> {
        &self.lhs
    }

    fn match_root<'a, L>(
        pattern: &Tree<usize>,
        t: &'a Tree<L>,
        binds: &mut [Option<&'a Tree<L>>],
    ) -> bool {
        match (pattern, t) {
            (Tree::Leaf(v), _) => {
                binds[*v] = Some(t);
                true
            }
            (Tree::Node(pl, pr), Tree::Node(l, r)) => {
                Self::match_root(pl, l, binds) && Self::match_root(pr, r, binds)
            }
            (Tree::Node(..), Tree::Leaf(_)) => false,
        }
    }

    fn instantiate<L: Clone>(pattern: &Tree<usize>, binds: &[Option<&Tree<L>>]) -> Tree<L> {
        match pattern {
            Tree::Leaf(v) => binds[*v].expect("bound pattern variable").clone(),
            Tree::Node(l, r) => Tree::node(Self::instantiate(l, binds), Self::instantiate(r, binds)),
        }
    }

    /// Whether the left side matches at the root.
    pub fn matches_root<L>(&self, t: &Tree<L>) -> bool {
        let mut binds = vec![None; self.arity];
        Self::match_root(&self.lhs, t, &mut binds)
    }

    /// Whether the left side matches some subterm.
    pub fn matches_anywhere<L>(&self, t: &Tree<L>) -> bool {
        self.matches_root(t)
            || matches!(t, Tree::Node(l, r) if self.matches_anywhere(l) || self.matches_anywhere(r))
    }

    /// All results of rewriting exactly one matching subterm.
    pub fn rewrites<L: Clone>(&self, t: &Tree<L>) -> Vec<Tree<L>> {
        let mut out = Vec::new();
        self.rewrites_into(t, &mut |x| x, &mut out);
        out
    }

    fn rewrites_into<L: Clone>(
        &self,
        t: &Tree<L>,
        wrap: &mut dyn FnMut(Tree<L>) -> Tree<L>,
        out: &mut Vec<Tree<L>>,
    ) {
        let mut binds = vec![None; self.arity];
        if Self::match_root(&self.lhs, t, &mut binds) {
            out.push(wrap(Self::instantiate(&self.rhs, &binds)));
        }
        if let Tree::Node(l, r) = t {
            self.rewrites_into(l, &mut |x| wrap(Tree::node(x, (**r).clone())), out);
            self.rewrites_into(r, &mut |x| wrap(Tree::node((**l).clone(), x)), out);
        }
    }
}

/// The two defining identities as rewrites: `a(bc) -> b(ac)` and
/// `(ab)c -> (ac)b`. Each is its own inverse up to renaming.
pub fn bicommutative_rules() -> [Rule; 2] {
    let v = |i| Tree::Leaf(i);
    [
        Rule::new(Tree::node(v(0), Tree::node(v(1), v(2))), Tree::node(v(1), Tree::node(v(0), v(2)))),
        Rule::new(Tree::node(Tree::node(v(0), v(1)), v(2)), Tree::node(Tree::node(v(0), v(2)), v(1))),
    ]
}

/// Distinct arrangements of a multiset, in lexicographic order.
pub fn arrangements<T: Ord + Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut cur: Vec<T> = items.to_vec();
    cur.sort();
    let mut out = vec![cur.clone()];
    // next_permutation
    loop {
        let n = cur.len();
        if n < 2 {
            return out;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

pub fn catalan(n: usize) -> usize {
    // C(2n, n) / (n + 1), exact in u128 for the sizes used here
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c as usize
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
