//! The text formats: parsing and printing `.pres` presentations (both
//! algebraic and quiver), `.alg` algebras, and `.map` morphisms, with
//! position-carrying diagnostics.
//!
//! Run with `cargo run --example pres_files`.

use monpres::dsl::{parse_alg, parse_pres, print_alg, print_pres};

const MONOID: &str = "\
# the free monoid theory
signature Monoid
op e : 0
op mul : 2
equations
eq assoc (3) : mul(mul(x0,x1),x2) = mul(x0,mul(x1,x2))
eq unitl (1) : mul(e,x0) = x0
eq unitr (1) : mul(x0,e) = x0
";

const XOR: &str = "\
algebra Xor
carrier zero one
table e : zero
table mul : zero one one zero
";

const SQUARE: &str = "\
objects a b c d
edge f : a -> b
edge g : b -> d
edge h : a -> c
edge k : c -> d
rel square : f.g = h.k
";

fn main() {
    let monoid = parse_pres(MONOID).expect("monoid parses");
    println!("parsed and reprinted .pres:\n{}", print_pres(&monoid));

    let p = monoid.presentation().unwrap();
    let alg = parse_alg(XOR, p.signature()).expect("algebra parses");
    println!(
        "parsed .alg with named elements {:?};\nreprinted:\n{}",
        alg.element_names,
        print_alg(&alg.algebra, alg.name.as_deref(), Some(&alg.element_names))
    );

    let square = parse_pres(SQUARE).expect("square parses");
    println!("quiver .pres:\n{}", print_pres(&square));

    // diagnostics carry the line and column of the offending token
    let bad = "signature X\nop f : 1\nequations\neq a (1) : x1 = x0\n";
    match parse_pres(bad) {
        Err(e) => println!("diagnostic for an out-of-context variable: {e}"),
        Ok(_) => unreachable!(),
    }
    let unknown = "signature X\nop f : 1\nequations\neq a (1) : g(x0) = x0\n";
    match parse_pres(unknown) {
        Err(e) => println!("diagnostic for an unknown symbol: {e}"),
        Ok(_) => unreachable!(),
    }
}
