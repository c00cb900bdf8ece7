//! Brute-force ground truth for the free bicommutative algebra.
//!
//! All bracketings of all leaf arrangements of a multidegree are enumerated
//! and grouped into classes of the equivalence generated by
//! `a(bc) = b(ac)` and `(ab)c = (ac)b`, applied at any subterm in either
//! direction. Both identities send monomials to monomials, so the classes are
//! exactly the basis of the free algebra in that multidegree. Nothing here
//! depends on the closed product rule in [`crate::bicom`].

use std::collections::{HashMap, HashSet, VecDeque};

use crate::bicom::{BasisWord, Generator, Multidegree};
use crate::error::{Error, Result};
use crate::tree::{arrangements, bicommutative_rules, Rule, Tree};

pub const DEFAULT_DEGREE_BOUND: usize = 7;

#[derive(Clone, Debug)]
pub struct Oracle {
    bound: usize,
    rules: [Rule; 2],
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::with_bound(DEFAULT_DEGREE_BOUND)
    }
}

/// The bracketing `x_k(..(x_2((x_1 y_1)..y_l))..)` that a basis word names.
pub fn defining_monomial(w: &BasisWord) -> Tree<Generator> {
    match w {
        BasisWord::Gen(g) => Tree::Leaf(g.clone()),
        BasisWord::Pair(y) => {
            let mut t = Tree::Leaf(y.col()[0].clone());
            for r in y.row() {
                t = Tree::node(t, Tree::Leaf(r.clone()));
            }
            for c in &y.col()[1..] {
                t = Tree::node(Tree::Leaf(c.clone()), t);
            }
            t
        }
    }
}

/// Recognizes a tree of exactly the shape and sortedness of
/// [`defining_monomial`].
pub fn canonical_pattern(t: &Tree<Generator>) -> Option<BasisWord> {
    let mut cur = match t {
        Tree::Leaf(g) => return Some(BasisWord::Gen(g.clone())),
        Tree::Node(..) => t,
    };
    let mut outer_cols = Vec::new();
    while let Tree::Node(l, r) = cur {
        match (&**l, &**r) {
            (Tree::Leaf(a), Tree::Node(..)) => {
                outer_cols.push(a.clone());
                cur = r;
            }
            _ => break,
        }
    }
    let mut rows_rev = Vec::new();
    let first_col = loop {
        match cur {
            Tree::Node(l, r) => match &**r {
                Tree::Leaf(y) => {
                    rows_rev.push(y.clone());
                    match &**l {
                        Tree::Leaf(x) => break x.clone(),
                        inner => cur = inner,
                    }
                }
                Tree::Node(..) => return None,
            },
            Tree::Leaf(_) => return None,
        }
    };
    let mut col = vec![first_col];
    col.extend(outer_cols.into_iter().rev());
    let row: Vec<Generator> = rows_rev.into_iter().rev().collect();
    let sorted = |v: &[Generator]| v.windows(2).all(|p| p[0] <= p[1]);
    (sorted(&col) && sorted(&row)).then(|| BasisWord::pair(col, row))
}

impl Oracle {
    pub fn with_bound(bound: usize) -> Self {
        Oracle {
            bound,
            rules: bicommutative_rules(),
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.bound {
            return Err(Error::OracleDegreeLimit {
                degree,
                bound: self.bound,
            });
        }
        Ok(())
    }

    fn neighbours(&self, t: &Tree<Generator>) -> Vec<Tree<Generator>> {
        self.rules.iter().flat_map(|r| r.rewrites(t)).collect()
    }

    /// Every monomial with the given leaf multiset.
    pub fn words(&self, md: &Multidegree) -> Result<Vec<Tree<Generator>>> {
        let degree: usize = md.values().sum();
        if degree == 0 {
            return Err(Error::EmptyMultidegree);
        }
        self.check_degree(degree)?;
        let leaves: Vec<Generator> = md
            .iter()
            .flat_map(|(g, &c)| std::iter::repeat_n(g.clone(), c))
            .collect();
        let orders = arrangements(&leaves);
        let mut out = Vec::new();
        for shape in Tree::shapes(degree) {
            for order in &orders {
                out.push(shape.fill(order));
            }
        }
        Ok(out)
    }

    /// Breadth-first closure of one word.
    pub fn class_of(&self, w: &Tree<Generator>) -> Result<Vec<Tree<Generator>>> {
        self.check_degree(w.degree())?;
        let mut seen = HashSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        let mut class = Vec::new();
        while let Some(t) = queue.pop_front() {
            for n in self.neighbours(&t) {
                if seen.insert(n.clone()) {
                    queue.push_back(n);
                }
            }
            class.push(t);
        }
        Ok(class)
    }

    /// Partition of all monomials of the multidegree into equivalence classes,
    /// in order of first appearance.
    pub fn closure_classes(&self, md: &Multidegree) -> Result<Vec<Vec<Tree<Generator>>>> {
        let words = self.words(md)?;
        let mut seen: HashSet<Tree<Generator>> = HashSet::with_capacity(words.len());
        let mut classes = Vec::new();
        for w in words {
            if seen.contains(&w) {
                continue;
            }
            let class = self.class_of(&w)?;
            seen.extend(class.iter().cloned());
            classes.push(class);
        }
        Ok(classes)
    }

    fn canonical_in(class: &[Tree<Generator>]) -> Result<BasisWord> {
        let found: Vec<BasisWord> = class.iter().filter_map(canonical_pattern).collect();
        match found.as_slice() {
            [one] => Ok(one.clone()),
            [] => Err(Error::OracleMismatch(format!(
                "class of {} has no canonical representative",
                class[0]
            ))),
            many => Err(Error::OracleMismatch(format!(
                "class of {} has {} canonical representatives",
                class[0],
                many.len()
            ))),
        }
    }

    /// The basis word whose defining monomial lies in the class of `w`.
    pub fn oracle_canonical(&self, w: &Tree<Generator>) -> Result<BasisWord> {
        Self::canonical_in(&self.class_of(w)?)
    }

    /// Canonical word of every monomial of the multidegree, computed one
    /// class at a time.
    pub fn canonical_map(&self, md: &Multidegree) -> Result<HashMap<Tree<Generator>, BasisWord>> {
        let mut out = HashMap::new();
        for class in self.closure_classes(md)? {
            let canon = Self::canonical_in(&class)?;
            for t in class {
                out.insert(t, canon.clone());
            }
        }
        Ok(out)
    }
}
