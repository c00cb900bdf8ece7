mod common;

use bicomlab_core::operators::{anticommutator, commutator};
use bicomlab_core::parse::{parse, parse_element, parse_identity};
use bicomlab_core::rational::int;
use bicomlab_core::{BicomElement, Error, Rational};
use common::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random expression text of degree at most `budget`, with its value built
/// through the element API.
fn random_expr(rng: &mut impl Rng, budget: usize) -> (String, BicomElement, usize) {
    let pool = gens(&["x", "y", "z"]);
    let choice = if budget < 2 { rng.gen_range(0..2) } else { rng.gen_range(0..9) };
    match choice {
        0 => {
            let g = pool.choose(rng).unwrap().clone();
            (g.to_string(), BicomElement::gen(g), 1)
        }
        1 => {
            let (t, e, d) = random_expr(rng, budget);
            let c = random_coeff(rng);
            (format!("{c}*({t})"), e.scale(&c), d)
        }
        2 if budget >= 2 => {
            let d = rng.gen_range(2..=budget);
            let w = random_word(rng, &pool, d);
            (w.to_string(), BicomElement::word(w), d)
        }
        3 | 4 => {
            let (a, ea, da) = random_expr(rng, budget);
            let (b, eb, db) = random_expr(rng, budget);
            if rng.gen_bool(0.5) {
                (format!("{a} + ({b})"), &ea + &eb, da.max(db))
            } else {
                (format!("{a} - ({b})"), &ea - &eb, da.max(db))
            }
        }
        5..=7 => {
            let (a, ea, da) = random_expr(rng, budget - 1);
            let (b, eb, db) = random_expr(rng, budget - da);
            match choice {
                5 => (format!("({a})*({b})"), ea.multiply(&eb), da + db),
                6 => (format!("[{a},{b}]"), commutator(&ea, &eb), da + db),
                _ => (format!("{{{a},{b}}}"), anticommutator(&ea, &eb), da + db),
            }
        }
        _ if budget >= 3 => {
            let (a, ea, da) = random_expr(rng, 1);
            let (b, eb, db) = random_expr(rng, budget - 2);
            let (c, ec, dc) = random_expr(rng, budget - da - db);
            let value = &anticommutator(&ea, &anticommutator(&eb, &ec))
                - &anticommutator(&anticommutator(&ea, &eb), &ec);
            (format!("assoc({a},{b},{c})"), value, da + db + dc)
        }
        _ => {
            let g = pool.choose(rng).unwrap().clone();
            (g.to_string(), BicomElement::gen(g), 1)
        }
    }
}

#[test]
fn random_expressions_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..500 {
        let (text, value, degree) = random_expr(&mut rng, 5);
        assert!(degree <= 5, "{text}");
        let parsed = parse_element(&text).unwrap_or_else(|e| panic!("{text}: {e}"));
        assert_eq!(parsed, value, "{text}");
        let normal = parsed.to_string();
        assert_eq!(parse_element(&normal).unwrap(), value, "{normal}");
        let redisplayed = parse(&text).unwrap().lhs.to_string();
        assert_eq!(parse_element(&redisplayed).unwrap(), value, "{redisplayed}");
    }
}

#[test]
fn scalars_need_a_factor() {
    assert!(parse_element("0").unwrap().is_zero());
    assert!(matches!(parse_element("3"), Err(Error::Syntax { .. })));
    let half: Rational = "1/2".parse().unwrap();
    let x = BicomElement::gen(gens(&["x"])[0].clone());
    assert_eq!(parse_element("1/2 x").unwrap(), x.scale(&half));
    assert_eq!(parse_element("1/2*x").unwrap(), x.scale(&half));
    assert_eq!(parse_element("2x").unwrap(), x.scale(&int(2)));
}

#[test]
fn errors_carry_positions() {
    match parse_element("x*(y+") {
        Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 6)),
        other => panic!("{other:?}"),
    }
    match parse_element("x\n + [y,") {
        Err(Error::Syntax { line, .. }) => assert_eq!(line, 2),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_element("x = y"), Err(Error::Syntax { .. })));
}

#[test]
fn identities_use_one_notation() {
    assert!(parse_identity("[a,b] + [b,a]").is_ok());
    match parse_identity("[a,b] = a*b") {
        Err(Error::Syntax { message, .. }) => assert!(message.contains("mixed")),
        other => panic!("{other:?}"),
    }
    let p = parse_identity("a*(b*c) = b*(a*c)").unwrap();
    assert_eq!(p.len(), 2);
    assert!(p.is_multilinear());
}
