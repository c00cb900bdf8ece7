//! Nonassociative polynomials (identity candidates) and their evaluation in
//! the free bicommutative algebra or in a finite-dimensional algebra given by
//! structure constants.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bicom::{BicomElement, Generator};
use crate::error::{Error, Result};
use crate::operators::BracketOp;
use crate::rational::{self, Rational};
use crate::tree::Tree;

/// A nonassociative monomial over named variables.
pub type MagmaWord = Tree<Generator>;

/// How a magma node is interpreted when evaluating in the free algebra.
pub type Product = BracketOp;

/// Rational combination of magma words; like words merge, zeros vanish.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MagmaPoly {
    terms: BTreeMap<MagmaWord, Rational>,
}

/// Evaluates a tree with the chosen product, mapping leaves through `leaf`.
pub fn eval_tree<L>(
    t: &Tree<L>,
    product: Product,
    leaf: &mut impl FnMut(&L) -> Result<BicomElement>,
) -> Result<BicomElement> {
    match t {
        Tree::Leaf(x) => leaf(x),
        Tree::Node(l, r) => {
            let a = eval_tree(l, product, leaf)?;
            let b = eval_tree(r, product, leaf)?;
            Ok(product.apply(&a, &b))
        }
    }
}

impl MagmaPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coeff: Rational, w: MagmaWord) -> Self {
        let mut p = Self::zero();
        p.add_term(w, coeff);
        p
    }

    pub fn add_term(&mut self, w: MagmaWord, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, other: &MagmaPoly, k: &Rational) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * k);
        }
    }

    /// Bilinear product of two polynomials.
    pub fn product(&self, other: &MagmaPoly) -> MagmaPoly {
        let mut out = MagmaPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(Tree::node(u.clone(), v.clone()), a * b);
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MagmaWord, &Rational)> {
        self.terms.iter()
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

    pub fn variables(&self) -> BTreeSet<Generator> {
        self.terms
            .keys()
            .flat_map(|w| w.leaves().into_iter().cloned())
            .collect()
    }

    /// Every term uses every variable exactly once.
    pub fn is_multilinear(&self) -> bool {
        let vars = self.variables();
        self.terms.keys().all(|w| {
            let leaves = w.leaves();
            leaves.len() == vars.len() && leaves.into_iter().collect::<BTreeSet<_>>().len() == vars.len()
        })
    }

    /// Simultaneous substitution of words for variables.
    pub fn substitute(&self, sigma: &BTreeMap<Generator, MagmaWord>) -> Result<MagmaPoly> {
        let mut out = MagmaPoly::zero();
        for (w, c) in &self.terms {
            let mut missing = None;
            let image = w.graft(&mut |g| match sigma.get(g) {
                Some(t) => t.clone(),
                None => {
                    missing.get_or_insert_with(|| g.clone());
                    Tree::Leaf(g.clone())
                }
            });
            if let Some(g) = missing {
                return Err(Error::UnmappedVariable(g.to_string()));
            }
            out.add_term(image, c.clone());
        }
        Ok(out)
    }

    pub fn eval_bicom(
        &self,
        product: Product,
        sigma: &BTreeMap<Generator, BicomElement>,
    ) -> Result<BicomElement> {
        let mut out = BicomElement::zero();
        for (w, c) in &self.terms {
            let v = eval_tree(w, product, &mut |g| {
                sigma
                    .get(g)
                    .cloned()
                    .ok_or_else(|| Error::UnmappedVariable(g.to_string()))
            })?;
            out = &out + &v.scale(c);
        }
        Ok(out)
    }

    /// Evaluation at the free generators named like the variables.
    pub fn eval_symbolic(&self, product: Product) -> BicomElement {
        let sigma = self
            .variables()
            .into_iter()
            .map(|g| (g.clone(), BicomElement::gen(g)))
            .collect();
        self.eval_bicom(product, &sigma).expect("every variable is mapped")
    }

    /// The identity `self = 0` holds in every bicommutative algebra under
    /// `product` iff it vanishes at the free generators.
    pub fn holds_in_bicom(&self, product: Product) -> bool {
        self.eval_symbolic(product).is_zero()
    }

    pub fn eval_finite(
        &self,
        algebra: &FiniteAlgebra,
        sigma: &BTreeMap<Generator, Vec<Rational>>,
    ) -> Result<Vec<Rational>> {
        for v in sigma.values() {
            if v.len() != algebra.dim() {
                return Err(Error::DimensionMismatch {
                    expected: algebra.dim(),
                    got: v.len(),
                });
            }
        }
        let mut out = vec![Rational::zero(); algebra.dim()];
        for (w, c) in &self.terms {
            let v = algebra.eval_word(w, sigma)?;
            for (o, x) in out.iter_mut().zip(v) {
                *o += x * c;
            }
        }
        Ok(out)
    }

    /// Checks a multilinear identity on every assignment of basis vectors to
    /// variables, which suffices by multilinearity. Assignments are visited in
    /// lexicographic order, so the witness is the first failing one.
    pub fn holds_in_finite(&self, algebra: &FiniteAlgebra) -> Result<FiniteCheck> {
        if !self.is_multilinear() {
            return Err(Error::FiniteNotMultilinear);
        }
        let vars: Vec<Generator> = self.variables().into_iter().collect();
        let dim = algebra.dim();
        let total = dim.pow(vars.len() as u32);
        let mut choice = vec![0usize; vars.len()];
        for _ in 0..total {
            let sigma: BTreeMap<Generator, Vec<Rational>> = vars
                .iter()
                .zip(&choice)
                .map(|(g, &i)| (g.clone(), algebra.basis_vector(i)))
                .collect();
            let value = self.eval_finite(algebra, &sigma)?;
            if value.iter().any(|x| !x.is_zero()) {
                return Ok(FiniteCheck {
                    holds: false,
                    assignments: total,
                    witness: Some(Witness {
                        assignment: vars.iter().cloned().zip(choice.iter().copied()).collect(),
                        value,
                    }),
                });
            }
            for k in (0..choice.len()).rev() {
                choice[k] += 1;
                if choice[k] < dim {
                    break;
                }
                choice[k] = 0;
            }
        }
        Ok(FiniteCheck {
            holds: true,
            assignments: total,
            witness: None,
        })
    }
}

impl fmt::Display for MagmaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let body = match w {
                Tree::Leaf(_) => w.to_string(),
                Tree::Node(..) => format!("({w})"),
            };
            rational::write_term(&mut out, c, &body, i == 0);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for MagmaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Outcome of an exhaustive finite-algebra check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCheck {
    pub holds: bool,
    pub assignments: usize,
    pub witness: Option<Witness>,
}

/// A failing assignment: each variable gets the basis vector with that
/// (0-based) index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub assignment: Vec<(Generator, usize)>,
    pub value: Vec<Rational>,
}

/// Finite-dimensional algebra given by structure constants
/// `e_i e_j = sum_k c[i][j][k] e_k`. No identities are assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    basis: Vec<String>,
    table: Vec<Vec<Vec<Rational>>>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    dim: usize,
    basis: Vec<String>,
    products: Vec<ProductJson>,
}

#[derive(Serialize, Deserialize)]
struct ProductJson {
    i: usize,
    j: usize,
    out: BTreeMap<String, String>,
}

impl FiniteAlgebra {
    /// Zero product on `basis`.
    pub fn new(basis: Vec<String>) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        let n = basis.len();
        Ok(FiniteAlgebra {
            basis,
            table: vec![vec![vec![Rational::zero(); n]; n]; n],
        })
    }

    /// Sets `e_i e_j` (0-based indices).
    pub fn set_product(&mut self, i: usize, j: usize, out: Vec<Rational>) -> Result<()> {
        let n = self.dim();
        if i >= n || j >= n {
            return Err(Error::InvalidAlgebra(format!("product index ({i},{j}) out of range")));
        }
        if out.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: out.len(),
            });
        }
        self.table[i][j] = out;
        Ok(())
    }

    /// The four-dimensional Jordan algebra with `e1^2 = e1`,
    /// `e1 e2 = e2 e1 = e2/2` and all other products zero.
    pub fn martin_a() -> Self {
        let json = r#"{"dim":4,"basis":["e1","e2","e3","e4"],"products":[
            {"i":1,"j":1,"out":{"e1":"1"}},
            {"i":1,"j":2,"out":{"e2":"1/2"}},
            {"i":2,"j":1,"out":{"e2":"1/2"}}]}"#;
        Self::from_json_str(json).expect("built-in algebra is valid")
    }

    pub fn builtin(name: &str) -> Option<Self> {
        (name == "martin-A").then(Self::martin_a)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::from_integer(1.into());
        v
    }

    pub fn multiply(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in self.table[i][j].iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    out[k] += &ab * c;
                }
            }
        }
        out
    }

    fn eval_word(&self, w: &MagmaWord, sigma: &BTreeMap<Generator, Vec<Rational>>) -> Result<Vec<Rational>> {
        match w {
            Tree::Leaf(g) => sigma
                .get(g)
                .cloned()
                .ok_or_else(|| Error::UnmappedVariable(g.to_string())),
            Tree::Node(l, r) => Ok(self.multiply(&self.eval_word(l, sigma)?, &self.eval_word(r, sigma)?)),
        }
    }

    /// Renders a coordinate vector as `1/4*e2 + ...`.
    pub fn format_vector(&self, v: &[Rational]) -> String {
        let mut out = String::new();
        for (i, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let first = out.is_empty();
            rational::write_term(&mut out, x, &self.basis[i], first);
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let parsed: AlgebraJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidAlgebra(e.to_string()))?;
        if parsed.basis.len() != parsed.dim {
            return Err(Error::InvalidAlgebra(format!(
                "dim is {} but {} basis names given",
                parsed.dim,
                parsed.basis.len()
            )));
        }
        let mut alg = Self::new(parsed.basis)?;
        for p in parsed.products {
            if p.i == 0 || p.j == 0 {
                return Err(Error::InvalidAlgebra("product indices are 1-based".into()));
            }
            let mut out = vec![Rational::zero(); alg.dim()];
            for (name, coeff) in &p.out {
                let k = alg
                    .basis
                    .iter()
                    .position(|b| b == name)
                    .ok_or_else(|| Error::InvalidAlgebra(format!("unknown basis element {name}")))?;
                out[k] = rational::parse_rational(coeff)?;
            }
            alg.set_product(p.i - 1, p.j - 1, out)?;
        }
        Ok(alg)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut products = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let out: BTreeMap<String, String> = self.table[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (self.basis[k].clone(), rational::format_rational(c)))
                    .collect();
                if !out.is_empty() {
                    products.push(ProductJson { i: i + 1, j: j + 1, out });
                }
            }
        }
        serde_json::to_value(AlgebraJson {
            dim: self.dim(),
            basis: self.basis.clone(),
            products,
        })
        .expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicom::BasisWord;
    use crate::rational::{frac, int};

    fn g(n: &str) -> Generator {
        Generator::new(n).unwrap()
    }
    fn leaf(n: &str) -> MagmaWord {
        Tree::Leaf(g(n))
    }
    fn mul(a: MagmaWord, b: MagmaWord) -> MagmaWord {
        Tree::node(a, b)
    }
    fn poly(terms: &[(i64, MagmaWord)]) -> MagmaPoly {
        let mut p = MagmaPoly::zero();
        for (c, w) in terms {
            p.add_term(w.clone(), int(*c));
        }
        p
    }

    #[test]
    fn substitution() {
        let p = poly(&[(1, mul(leaf("x"), leaf("y")))]);
        let s1 = BTreeMap::from([(g("x"), leaf("a")), (g("y"), leaf("b"))]);
        assert_eq!(p.substitute(&s1).unwrap(), poly(&[(1, mul(leaf("a"), leaf("b")))]));
        let s2 = BTreeMap::from([(g("x"), mul(leaf("a"), leaf("b"))), (g("y"), leaf("y"))]);
        assert_eq!(
            p.substitute(&s2).unwrap(),
            poly(&[(1, mul(mul(leaf("a"), leaf("b")), leaf("y")))])
        );
        let s3 = BTreeMap::from([(g("x"), leaf("a"))]);
        assert_eq!(p.substitute(&s3), Err(Error::UnmappedVariable("y".into())));
    }

    #[test]
    fn substitution_gives_witness_word() {
        // ((ab)c)d under a,b,c -> e1 and d -> e2
        let lhs = poly(&[(1, mul(mul(mul(leaf("a"), leaf("b")), leaf("c")), leaf("d")))]);
        let s = BTreeMap::from([
            (g("a"), leaf("e1")),
            (g("b"), leaf("e1")),
            (g("c"), leaf("e1")),
            (g("d"), leaf("e2")),
        ]);
        let w = lhs.substitute(&s).unwrap();
        assert_eq!(w.to_string(), "(((e1*e1)*e1)*e2)");
    }

    #[test]
    fn bicom_evaluation() {
        let (a, b, c) = (leaf("a"), leaf("b"), leaf("c"));
        let left_com = poly(&[
            (1, mul(a.clone(), mul(b.clone(), c.clone()))),
            (-1, mul(b.clone(), mul(a.clone(), c.clone()))),
        ]);
        assert!(left_com.holds_in_bicom(Product::Plain));
        let assoc = poly(&[
            (1, mul(a.clone(), mul(b.clone(), c.clone()))),
            (-1, mul(mul(a.clone(), b.clone()), c.clone())),
        ]);
        let v = assoc.eval_symbolic(Product::Plain);
        assert!(!v.is_zero());
        assert_eq!(
            v.coeff(&BasisWord::pair(vec![g("a"), g("b")], vec![g("c")])),
            int(1)
        );
        let com = poly(&[(1, mul(a.clone(), b.clone())), (-1, mul(b.clone(), a.clone()))]);
        assert!(com.holds_in_bicom(Product::Anti));
        assert!(!com.holds_in_bicom(Product::Com));
        let missing = BTreeMap::new();
        assert!(matches!(com.eval_bicom(Product::Plain, &missing), Err(Error::UnmappedVariable(_))));
    }

    #[test]
    fn finite_evaluation() {
        let alg = FiniteAlgebra::martin_a();
        let (x, y, z, t) = (leaf("x"), leaf("y"), leaf("z"), leaf("t"));
        let xy = mul(x.clone(), y.clone());
        let p = poly(&[
            (1, mul(mul(xy.clone(), z.clone()), t.clone())),
            (-1, mul(mul(xy.clone(), t.clone()), z.clone())),
        ]);
        let e1 = alg.basis_vector(0);
        let e2 = alg.basis_vector(1);
        let sigma = BTreeMap::from([
            (g("x"), e1.clone()),
            (g("y"), e1.clone()),
            (g("z"), e1.clone()),
            (g("t"), e2.clone()),
        ]);
        let v = p.eval_finite(&alg, &sigma).unwrap();
        assert_eq!(v, vec![int(0), frac(1, 4), int(0), int(0)]);
        assert_eq!(alg.format_vector(&v), "1/4*e2");

        let zero: BTreeMap<_, _> = ["x", "y", "z", "t"].iter().map(|n| (g(n), vec![int(0); 4])).collect();
        assert!(p.eval_finite(&alg, &zero).unwrap().iter().all(|c| c.is_zero()));

        let com = poly(&[(1, xy.clone()), (-1, mul(y.clone(), x.clone()))]);
        let s = BTreeMap::from([(g("x"), e1), (g("y"), e2)]);
        assert!(com.eval_finite(&alg, &s).unwrap().iter().all(|c| c.is_zero()));
        let bad = BTreeMap::from([(g("x"), vec![int(1)]), (g("y"), vec![int(1)])]);
        assert!(matches!(com.eval_finite(&alg, &bad), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn finite_check_requires_multilinear() {
        let alg = FiniteAlgebra::martin_a();
        let p = poly(&[(1, mul(leaf("x"), leaf("x")))]);
        assert_eq!(p.holds_in_finite(&alg), Err(Error::FiniteNotMultilinear));
        let com = poly(&[(1, mul(leaf("x"), leaf("y"))), (-1, mul(leaf("y"), leaf("x")))]);
        let check = com.holds_in_finite(&alg).unwrap();
        assert!(check.holds);
        assert_eq!(check.assignments, 16);
    }

    #[test]
    fn algebra_json_round_trip() {
        let alg = FiniteAlgebra::martin_a();
        let back = FiniteAlgebra::from_json_str(&alg.to_json().to_string()).unwrap();
        assert_eq!(alg, back);
        assert!(FiniteAlgebra::from_json_str(r#"{"dim":2,"basis":["a"],"products":[]}"#).is_err());
        assert!(FiniteAlgebra::from_json_str(
            r#"{"dim":1,"basis":["a"],"products":[{"i":1,"j":1,"out":{"b":"1"}}]}"#
        )
        .is_err());
    }
}
