//! Canonical basis and arithmetic of the free bicommutative algebra.
//!
//! Degree-one basis words are the generators themselves. Every basis word of
//! degree `n >= 2` is a hook Young diagram filled with a sorted column
//! `x_1 <= .. <= x_k` and a sorted row `y_1 <= .. <= y_l`, standing for the
//! monomial `x_k(..(x_2((..((x_1 y_1) y_2)..) y_l))..)`. Only the two
//! multisets matter, which makes the product a union of multisets.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A free generator. Generators are ordered by name, lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(Arc<str>);

impl Generator {
    /// Accepts names matching `[A-Za-z][A-Za-z0-9_]*`.
    pub fn new(name: &str) -> Result<Self> {
        let mut chars = name.chars();
        let ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if ok {
            Ok(Generator(Arc::from(name)))
        } else {
            Err(Error::InvalidGenerator(name.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Generator counts of a homogeneous element.
pub type Multidegree = BTreeMap<Generator, usize>;

/// Column and row multisets of a hook tableau, both nonempty and sorted.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Young {
    col: Vec<Generator>,
    row: Vec<Generator>,
}

impl Young {
    pub fn col(&self) -> &[Generator] {
        &self.col
    }

    pub fn row(&self) -> &[Generator] {
        &self.row
    }
}

/// A canonical monomial of the free bicommutative algebra.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum BasisWord {
    Gen(Generator),
    Pair(Young),
}

fn merge_sorted(a: &[Generator], b: &[Generator]) -> Vec<Generator> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i].clone());
            i += 1;
        } else {
            out.push(b[j].clone());
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn insert_sorted(a: &[Generator], g: &Generator) -> Vec<Generator> {
    merge_sorted(a, std::slice::from_ref(g))
}

impl BasisWord {
    /// Builds a pair word; the multisets are sorted here. Panics if either is
    /// empty.
    pub fn pair(mut col: Vec<Generator>, mut row: Vec<Generator>) -> Self {
        assert!(
            !col.is_empty() && !row.is_empty(),
            "pair words need a nonempty column and row"
        );
        col.sort();
        row.sort();
        BasisWord::Pair(Young { col, row })
    }

    pub fn degree(&self) -> usize {
        match self {
            BasisWord::Gen(_) => 1,
            BasisWord::Pair(y) => y.col.len() + y.row.len(),
        }
    }

    /// Canonical word of the product `self * other`.
    pub fn product(&self, other: &BasisWord) -> BasisWord {
        use BasisWord::*;
        let young = match (self, other) {
            (Gen(g), Gen(h)) => Young {
                col: vec![g.clone()],
                row: vec![h.clone()],
            },
            (Pair(p), Gen(g)) => Young {
                col: p.col.clone(),
                row: insert_sorted(&p.row, g),
            },
            (Gen(g), Pair(p)) => Young {
                col: insert_sorted(&p.col, g),
                row: p.row.clone(),
            },
            (Pair(p), Pair(q)) => Young {
                col: merge_sorted(&p.col, &q.col),
                row: merge_sorted(&p.row, &q.row),
            },
        };
        Pair(young)
    }

    /// Image under the involution: swaps column and row.
    pub fn involute(&self) -> BasisWord {
        match self {
            BasisWord::Gen(g) => BasisWord::Gen(g.clone()),
            BasisWord::Pair(y) => BasisWord::Pair(Young {
                col: y.row.clone(),
                row: y.col.clone(),
            }),
        }
    }

    pub fn generators(&self) -> Vec<Generator> {
        match self {
            BasisWord::Gen(g) => vec![g.clone()],
            BasisWord::Pair(y) => merge_sorted(&y.col, &y.row),
        }
    }

    pub fn multidegree(&self) -> Multidegree {
        let mut md = Multidegree::new();
        for g in self.generators() {
            *md.entry(g).or_default() += 1;
        }
        md
    }

    /// The bracketed monomial this word stands for, e.g. `z*(x*y)`.
    pub fn monomial(&self) -> String {
        match self {
            BasisWord::Gen(g) => g.to_string(),
            BasisWord::Pair(y) => {
                let mut s = format!("{}*{}", y.col[0], y.row[0]);
                for r in &y.row[1..] {
                    s = format!("({s})*{r}");
                }
                for c in &y.col[1..] {
                    s = format!("{c}*({s})");
                }
                s
            }
        }
    }
}

impl Ord for BasisWord {
    /// Degree first, then `(|col|, col, row)`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| match (self, other) {
            (BasisWord::Gen(a), BasisWord::Gen(b)) => a.cmp(b),
            (BasisWord::Gen(_), BasisWord::Pair(_)) => Ordering::Less,
            (BasisWord::Pair(_), BasisWord::Gen(_)) => Ordering::Greater,
            (BasisWord::Pair(a), BasisWord::Pair(b)) => a
                .col
                .len()
                .cmp(&b.col.len())
                .then_with(|| a.col.cmp(&b.col))
                .then_with(|| a.row.cmp(&b.row)),
        })
    }
}

impl PartialOrd for BasisWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn join(gens: &[Generator]) -> String {
    gens.iter().map(Generator::name).collect::<Vec<_>>().join(",")
}

impl fmt::Display for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisWord::Gen(g) => write!(f, "{g}"),
            BasisWord::Pair(y) => write!(f, "Y[{}|{}]", join(&y.col), join(&y.row)),
        }
    }
}

/// All canonical words with the given generator counts, in basis order.
pub fn enumerate_basis(md: &Multidegree) -> Result<Vec<BasisWord>> {
    let total: usize = md.values().sum();
    if total == 0 {
        return Err(Error::EmptyMultidegree);
    }
    if total == 1 {
        let g = md.iter().find(|(_, &c)| c == 1).map(|(g, _)| g.clone());
        return Ok(vec![BasisWord::Gen(g.expect("degree one"))]);
    }
    let entries: Vec<(&Generator, usize)> =
        md.iter().filter(|(_, &c)| c > 0).map(|(g, &c)| (g, c)).collect();
    let mut words = Vec::new();
    let mut take = vec![0usize; entries.len()];
    loop {
        let col_size: usize = take.iter().sum();
        if col_size > 0 && col_size < total {
            let mut col = Vec::new();
            let mut row = Vec::new();
            for ((g, c), &t) in entries.iter().zip(&take) {
                col.extend(std::iter::repeat_n((*g).clone(), t));
                row.extend(std::iter::repeat_n((*g).clone(), c - t));
            }
            words.push(BasisWord::Pair(Young { col, row }));
        }
        // odometer over 0..=count per generator
        let mut i = 0;
        loop {
            if i == take.len() {
                words.sort();
                return Ok(words);
            }
            if take[i] < entries[i].1 {
                take[i] += 1;
                break;
            }
            take[i] = 0;
            i += 1;
        }
    }
}

/// Multilinear multidegree on the given generators.
pub fn multilinear(gens: &[Generator]) -> Multidegree {
    gens.iter().map(|g| (g.clone(), 1)).collect()
}

/// Element of the free bicommutative algebra: a finite rational combination
/// of basis words with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BicomElement {
    terms: BTreeMap<BasisWord, Rational>,
}

impl BicomElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: BasisWord) -> Self {
        Self::term(Rational::one(), w)
    }

    pub fn gen(g: Generator) -> Self {
        Self::word(BasisWord::Gen(g))
    }

    pub fn term(coeff: Rational, w: BasisWord) -> Self {
        let mut e = Self::zero();
        e.add_term(w, coeff);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (BasisWord, Rational)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn add_term(&mut self, w: BasisWord, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &BasisWord) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&BasisWord, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BicomElement {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    /// Keeps the terms whose word satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&BasisWord) -> bool) -> Self {
        BicomElement {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Bilinear extension of [`BasisWord::product`].
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.product(v), a * b);
            }
        }
        out
    }

    pub fn involute(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.involute(), c.clone())))
    }

    /// `f + f*`.
    pub fn plus_part(&self) -> Self {
        self + &self.involute()
    }

    /// `f - f*`.
    pub fn minus_part(&self) -> Self {
        self - &self.involute()
    }

    /// Common generator counts of all terms, or `None` if the element is
    /// inhomogeneous. The zero element has the empty multidegree.
    pub fn multidegree(&self) -> Option<Multidegree> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(w) => w.multidegree(),
            None => return Some(Multidegree::new()),
        };
        it.all(|w| w.multidegree() == first).then_some(first)
    }

    pub fn is_multilinear(&self) -> bool {
        self.multidegree()
            .is_some_and(|md| md.values().all(|&c| c == 1))
    }

    /// Total degree of a homogeneous element.
    pub fn degree(&self) -> Option<usize> {
        self.multidegree().map(|md| md.values().sum())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let coeff = rational::format_rational(c);
                match w {
                    BasisWord::Gen(g) => TermJson::Gen {
                        coeff,
                        gen: g.name().to_string(),
                    },
                    BasisWord::Pair(y) => TermJson::Pair {
                        coeff,
                        col: y.col.iter().map(|g| g.name().to_string()).collect(),
                        row: y.row.iter().map(|g| g.name().to_string()).collect(),
                    },
                }
            })
            .collect();
        serde_json::to_value(ElementJson { terms }).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let parsed: ElementJson = serde_json::from_value(value.clone()).map_err(|e| {
            Error::Syntax {
                line: 1,
                column: 1,
                message: e.to_string(),
            }
        })?;
        let gens = |names: &[String]| -> Result<Vec<Generator>> {
            names.iter().map(|n| Generator::new(n)).collect()
        };
        let mut out = Self::zero();
        for t in parsed.terms {
            match t {
                TermJson::Gen { coeff, gen } => {
                    out.add_term(
                        BasisWord::Gen(Generator::new(&gen)?),
                        rational::parse_rational(&coeff)?,
                    );
                }
                TermJson::Pair { coeff, col, row } => {
                    if col.is_empty() || row.is_empty() {
                        return Err(Error::Syntax {
                            line: 1,
                            column: 1,
                            message: "pair words need a nonempty column and row".into(),
                        });
                    }
                    out.add_term(
                        BasisWord::pair(gens(&col)?, gens(&row)?),
                        rational::parse_rational(&coeff)?,
                    );
                }
            }
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum TermJson {
    Pair {
        coeff: String,
        col: Vec<String>,
        row: Vec<String>,
    },
    Gen {
        coeff: String,
        gen: String,
    },
}

impl fmt::Display for BicomElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            rational::write_term(&mut out, c, &w.to_string(), i == 0);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for BicomElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &BicomElement {
    type Output = BicomElement;
    fn add(self, rhs: &BicomElement) -> BicomElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &BicomElement {
    type Output = BicomElement;
    fn sub(self, rhs: &BicomElement) -> BicomElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &BicomElement {
    type Output = BicomElement;
    fn neg(self) -> BicomElement {
        BicomElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &BicomElement {
    type Output = BicomElement;
    fn mul(self, rhs: &BicomElement) -> BicomElement {
        self.multiply(rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BicomElement {
            type Output = BicomElement;
            fn $m(self, rhs: BicomElement) -> BicomElement {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BicomElement {
    type Output = BicomElement;
    fn neg(self) -> BicomElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn g(n: &str) -> Generator {
        Generator::new(n).unwrap()
    }
    fn gs(names: &[&str]) -> Vec<Generator> {
        names.iter().map(|n| g(n)).collect()
    }
    fn x(n: &str) -> BicomElement {
        BicomElement::gen(g(n))
    }
    fn pair(c: &[&str], r: &[&str]) -> BasisWord {
        BasisWord::pair(gs(c), gs(r))
    }

    #[test]
    fn generator_names() {
        assert!(Generator::new("x_1").is_ok());
        assert!(Generator::new("a2").is_ok());
        assert!(Generator::new("1a").is_err());
        assert!(Generator::new("").is_err());
        assert!(Generator::new("a-b").is_err());
    }

    #[test]
    fn word_product_rules() {
        let (gx, gy, gz) = (
            BasisWord::Gen(g("x")),
            BasisWord::Gen(g("y")),
            BasisWord::Gen(g("z")),
        );
        assert_eq!(gx.product(&gy), pair(&["x"], &["y"]));
        assert_eq!(pair(&["x"], &["y"]).product(&gz), pair(&["x"], &["y", "z"]));
        assert_eq!(gz.product(&pair(&["x"], &["y"])), pair(&["x", "z"], &["y"]));
        assert_eq!(
            pair(&["a"], &["b"]).product(&pair(&["c"], &["d"])),
            pair(&["a", "c"], &["b", "d"])
        );
    }

    #[test]
    fn multiply_examples() {
        let sum = &x("x") + &x("y");
        assert_eq!(
            &sum * &x("z"),
            BicomElement::from_terms([(pair(&["x"], &["z"]), int(1)), (pair(&["y"], &["z"]), int(1))])
        );
        assert!((&BicomElement::zero() * &sum).is_zero());
        let xy = &x("x") * &x("y");
        assert_eq!(&xy * &xy, BicomElement::word(pair(&["x", "x"], &["y", "y"])));
    }

    #[test]
    fn involution_examples() {
        assert_eq!(x("x").involute(), x("x"));
        let w = BicomElement::word(pair(&["x"], &["y", "z"]));
        assert_eq!(w.involute(), BicomElement::word(pair(&["y", "z"], &["x"])));
        let sym = &(&x("x") * &x("y")) + &(&x("y") * &x("x"));
        assert_eq!(sym.involute(), sym);
    }

    #[test]
    fn plus_minus_parts() {
        let xy = &x("x") * &x("y");
        let yx = &x("y") * &x("x");
        assert_eq!(xy.plus_part(), &xy + &yx);
        assert_eq!(xy.minus_part(), &xy - &yx);
        assert_eq!(x("x").plus_part(), x("x").scale(&int(2)));
    }

    #[test]
    fn multidegree_examples() {
        let xy = &x("x") * &x("y");
        let yx = &x("y") * &x("x");
        let md = (&xy + &yx).multidegree().unwrap();
        assert_eq!(md, multilinear(&gs(&["x", "y"])));
        let w = BicomElement::word(pair(&["x", "x"], &["y"]));
        assert_eq!(
            w.multidegree().unwrap(),
            Multidegree::from([(g("x"), 2), (g("y"), 1)])
        );
        assert!((&x("x") + &xy).multidegree().is_none());
        assert!((&xy - &yx).is_multilinear());
        assert!(!w.is_multilinear());
    }

    #[test]
    fn enumerate_degree_three() {
        let words = enumerate_basis(&multilinear(&gs(&["x", "y", "z"]))).unwrap();
        let monomials: Vec<String> = words.iter().map(BasisWord::monomial).collect();
        assert_eq!(
            monomials,
            ["(x*y)*z", "(y*x)*z", "(z*x)*y", "y*(x*z)", "z*(x*y)", "z*(y*x)"]
        );
    }

    #[test]
    fn enumerate_counts() {
        let two = enumerate_basis(&multilinear(&gs(&["x", "y"]))).unwrap();
        assert_eq!(two.len(), 2);
        for n in 2..=7 {
            let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
            let gens: Vec<Generator> = names.iter().map(|s| g(s)).collect();
            let words = enumerate_basis(&multilinear(&gens)).unwrap();
            assert_eq!(words.len(), (1 << n) - 2, "n = {n}");
        }
        assert_eq!(enumerate_basis(&Multidegree::new()), Err(Error::EmptyMultidegree));
        let one = enumerate_basis(&multilinear(&gs(&["q"]))).unwrap();
        assert_eq!(one, vec![BasisWord::Gen(g("q"))]);
    }

    #[test]
    fn enumerate_with_repeats() {
        // x:1, y:2 -> column choices {x},{y},{x,y},{y,y}
        let md = Multidegree::from([(g("x"), 1), (g("y"), 2)]);
        let words = enumerate_basis(&md).unwrap();
        assert_eq!(
            words,
            vec![
                pair(&["x"], &["y", "y"]),
                pair(&["y"], &["x", "y"]),
                pair(&["x", "y"], &["y"]),
                pair(&["y", "y"], &["x"]),
            ]
        );
    }

    #[test]
    fn text_and_json_forms() {
        let e = BicomElement::from_terms([
            (pair(&["x"], &["y", "z"]), frac(-3, 2)),
            (BasisWord::Gen(g("x")), int(1)),
        ]);
        assert_eq!(e.to_string(), "x - 3/2*Y[x|y,z]");
        let json = e.to_json();
        assert_eq!(
            json,
            serde_json::json!({"terms":[{"coeff":"1","gen":"x"},{"coeff":"-3/2","col":["x"],"row":["y","z"]}]})
        );
        assert_eq!(BicomElement::from_json(&json).unwrap(), e);
        assert_eq!(BicomElement::zero().to_string(), "0");
    }
}
