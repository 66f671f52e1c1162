//! Irreducible characters as eta-quotient q-series, compared against
//! direct monomial enumeration coefficient by coefficient.

use symplectic_fermion::chars::{character_series, enumerate_vs_character, Module};

fn main() {
    let order = 48 * 10;
    for m in Module::all() {
        let s = character_series(m, 1, order);
        println!("{} (d = 1), first terms:", m.name());
        for (k, c) in s.terms.iter().take(6) {
            println!(
                "  q^({}/48)  {}",
                k,
                symplectic_fermion::scalar::fmt_scalar(c)
            );
        }
    }
    for d in 1..=3usize {
        for m in Module::all() {
            let fails = enumerate_vs_character(m, d, 20);
            assert!(fails.is_empty(), "{:?}", fails);
        }
        println!(
            "d = {}: all four characters match enumeration for 20 exponents",
            d
        );
    }
}
