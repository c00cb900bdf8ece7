//! Named identities over a single operation, with the product under which
//! they are read in the free bicommutative algebra.

use crate::magma::{MagmaPoly, Product};
use crate::parse::parse_identity;

#[derive(Clone, Debug)]
pub struct NamedIdentity {
    pub name: &'static str,
    pub product: Product,
    pub text: &'static str,
}

impl NamedIdentity {
    pub fn poly(&self) -> MagmaPoly {
        parse_identity(self.text).expect("built-in identity parses")
    }
}

const fn id(name: &'static str, product: Product, text: &'static str) -> NamedIdentity {
    NamedIdentity { name, product, text }
}

pub const LEFT_COMMUTATIVITY: NamedIdentity = id("left-commutativity", Product::Plain, "a*(b*c) = b*(a*c)");
pub const RIGHT_COMMUTATIVITY: NamedIdentity = id("right-commutativity", Product::Plain, "(a*b)*c = (a*c)*b");
pub const ANTICOMMUTATIVITY: NamedIdentity = id("anticommutativity", Product::Com, "[a,b] = -[b,a]");
pub const JACOBI: NamedIdentity = id("jacobi", Product::Com, "[[a,b],c] + [[b,c],a] + [[c,a],b] = 0");
pub const METABELIAN: NamedIdentity = id("metabelian", Product::Com, "[[a,b],[c,d]] = 0");
pub const COMMUTATIVITY: NamedIdentity = id("commutativity", Product::Anti, "{a,b} = {b,a}");
pub const MINUS_TORTKEN: NamedIdentity = id(
    "minus-tortken",
    Product::Anti,
    "{{a,b},{c,d}} - {{a,d},{c,b}} = -{assoc(a,b,c),d} + {assoc(a,d,c),b}",
);
pub const WEAK_RIGHT_COMMUTATIVITY: NamedIdentity =
    id("weak-right-commutativity", Product::Anti, "{{{a,b},c},d} = {{{a,b},d},c}");
/// Novikov-type sign pattern; no truth value is claimed for it here.
pub const TORTKEN: NamedIdentity = id(
    "tortken",
    Product::Anti,
    "{{a,b},{c,d}} - {{a,d},{c,b}} = {assoc(a,b,c),d} - {assoc(a,d,c),b}",
);
pub const REWRITING_AC_BD: NamedIdentity = id(
    "rewriting-ac-bd",
    Product::Anti,
    "{{a,c},{b,d}} = {{a,b},{c,d}} - {{{a,b},c},d} - {{{c,d},a},b} + {{{a,c},b},d} + {{{b,d},a},c}",
);
pub const REWRITING_AD_BC: NamedIdentity = id(
    "rewriting-ad-bc",
    Product::Anti,
    "{{a,d},{b,c}} = {{a,b},{c,d}} - {{{a,b},c},d} - {{{c,d},a},b} + {{{a,d},b},c} + {{{b,c},a},d}",
);

/// Every built-in identity, in a fixed order.
pub fn catalog() -> Vec<NamedIdentity> {
    vec![
        LEFT_COMMUTATIVITY,
        RIGHT_COMMUTATIVITY,
        ANTICOMMUTATIVITY,
        JACOBI,
        METABELIAN,
        COMMUTATIVITY,
        MINUS_TORTKEN,
        WEAK_RIGHT_COMMUTATIVITY,
        TORTKEN,
        REWRITING_AC_BD,
        REWRITING_AD_BC,
    ]
}

pub fn find(name: &str) -> Option<NamedIdentity> {
    catalog().into_iter().find(|i| i.name == name)
}

/// Generators for the identities of the commutator product.
pub fn lie_generators() -> Vec<MagmaPoly> {
    [ANTICOMMUTATIVITY, JACOBI, METABELIAN].iter().map(NamedIdentity::poly).collect()
}

/// Generators for the identities of the anti-commutator product.
pub fn jordan_generators() -> Vec<MagmaPoly> {
    [COMMUTATIVITY, MINUS_TORTKEN, WEAK_RIGHT_COMMUTATIVITY]
        .iter()
        .map(NamedIdentity::poly)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_parse_and_are_multilinear() {
        for i in catalog() {
            let p = i.poly();
            assert!(!p.is_zero(), "{}", i.name);
            assert!(p.is_multilinear(), "{}", i.name);
        }
        assert!(find("jacobi").is_some());
        assert!(find("nope").is_none());
    }

    #[test]
    fn claimed_identities_hold() {
        for i in catalog().into_iter().filter(|i| i.name != "tortken") {
            assert!(i.poly().holds_in_bicom(i.product), "{}", i.name);
        }
    }
}
